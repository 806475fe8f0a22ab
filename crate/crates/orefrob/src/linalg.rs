//! Exact dense linear algebra over a finite field.
//!
//! Everything here is deterministic: row reduction always picks the first
//! nonzero pivot scanning top to bottom, kernel bases enumerate free columns
//! in ascending order, and affine solves return the particular solution with
//! all free coordinates set to zero. Downstream decision procedures rely on
//! this to return bit-identical witnesses across runs.

use crate::field::{FieldElement, FiniteField};

/// Dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Solution set of `M v = b`: a particular solution (`None` when the system
/// is infeasible) plus a basis of the homogeneous kernel.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSolutionSpace {
    /// Particular solution with every free coordinate zero, if one exists.
    pub particular: Option<Vec<FieldElement>>,
    /// Deterministic kernel basis: one vector per free column, ascending.
    pub kernel: Vec<Vec<FieldElement>>,
}

impl AffineSolutionSpace {
    /// True when the system has at least one solution.
    pub fn is_feasible(&self) -> bool {
        self.particular.is_some()
    }

    /// Dimension of the homogeneous solution space.
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }
}

impl Matrix {
    /// Matrix from row-major entries; panics unless `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<FieldElement>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    /// All-zero matrix.
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(field: &FiniteField, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    /// Build entry-wise from a closure.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    /// Mutable entry at `(i, j)`.
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.entries[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix, field: &FiniteField) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, other.at(l, j));
                    field.add_assign(out.at_mut(i, j), &t);
                }
            }
        }
        out
    }

    /// Sum of two equal-shape matrices.
    pub fn add(&self, other: &Matrix, field: &FiniteField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Difference of two equal-shape matrices.
    pub fn sub(&self, other: &Matrix, field: &FiniteField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| field.sub(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[FieldElement], field: &FiniteField) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        let mut out = vec![field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                let t = field.mul(self.at(i, j), x);
                field.add_assign(acc, &t);
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// In-place reduced row echelon form; returns the pivot columns in
    /// ascending order. Pivot choice is the first nonzero entry scanning
    /// down, so the result is deterministic.
    pub fn rref(&mut self, field: &FiniteField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        let mut pivot_row = vec![field.zero(); self.cols];
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let found = (next_row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            if r != next_row {
                for j in col..self.cols {
                    self.entries.swap(next_row * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field
                .inv(self.at(next_row, col))
                .expect("pivot entry is nonzero");
            for j in col..self.cols {
                let t = field.mul(self.at(next_row, j), &inv);
                *self.at_mut(next_row, j) = t;
            }
            pivot_row[col..self.cols].clone_from_slice(&self.row(next_row)[col..self.cols]);
            for r2 in 0..self.rows {
                if r2 == next_row {
                    continue;
                }
                let factor = self.at(r2, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let base = r2 * self.cols;
                for (e, pv) in self.entries[base + col..base + self.cols]
                    .iter_mut()
                    .zip(&pivot_row[col..self.cols])
                {
                    field.submul_assign(e, &factor, pv);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        pivots
    }

    /// Rank by row reduction of a copy.
    pub fn rank(&self, field: &FiniteField) -> usize {
        self.clone().rref(field).len()
    }

    /// Deterministic basis of `{v : M v = 0}`: one vector per free column in
    /// ascending column order, with a 1 in that free coordinate.
    pub fn kernel_basis(&self, field: &FiniteField) -> Vec<Vec<FieldElement>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref(field);
        kernel_from_rref(&reduced, &pivots, self.cols, field)
    }

    /// Solve `M v = b` exactly. Infeasibility is a value, not an error.
    pub fn solve_affine(&self, b: &[FieldElement], field: &FiniteField) -> AffineSolutionSpace {
        assert_eq!(b.len(), self.rows, "right-hand side length must match rows");
        let n = self.cols;
        let mut aug = Matrix::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let mut pivots = aug.rref(field);
        let feasible = pivots.last() != Some(&n);
        if !feasible {
            pivots.pop();
        }
        // The first n columns of the reduced augmented matrix are themselves
        // in reduced row echelon form with pivot columns `pivots`.
        let kernel = kernel_from_rref(&aug, &pivots, n, field);
        let particular = feasible.then(|| {
            let mut v = vec![field.zero(); n];
            for (t, &pc) in pivots.iter().enumerate() {
                v[pc] = aug.at(t, n).clone();
            }
            v
        });
        AffineSolutionSpace { particular, kernel }
    }

    /// Whether a square matrix has nonzero determinant (full rank).
    pub fn det_nonzero(&self, field: &FiniteField) -> bool {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        self.rank(field) == self.rows
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn invert(&self, field: &FiniteField) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let pivots = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.at(i, n + j).clone()))
    }
}

fn kernel_from_rref(
    reduced: &Matrix,
    pivots: &[usize],
    n: usize,
    field: &FiniteField,
) -> Vec<Vec<FieldElement>> {
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &c in pivots {
            s[c] = true;
        }
        s
    };
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in 0..n {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (t, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(reduced.at(t, free));
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    fn m(field: &FiniteField, rows: usize, cols: usize, vals: &[u64]) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| field.from_u64(vals[i * cols + j]))
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let f = f2();
        assert!(Matrix::identity(&f, 4).kernel_basis(&f).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let f = f2();
        let basis = Matrix::zeros(&f, 2, 2).kernel_basis(&f);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![f.one(), f.zero()]);
        assert_eq!(basis[1], vec![f.zero(), f.one()]);
    }

    #[test]
    fn frobenius_fixed_space_on_gf8_is_the_prime_field() {
        // Frobenius on GF(8) as a 3x3 matrix over GF(2) in the basis 1, a, a^2:
        // images are 1, a^2, and a^4 = a^2 + a + 1.
        let f = f2();
        let frob = m(&f, 3, 3, &[1, 0, 1, 0, 0, 1, 0, 1, 1]);
        let fixed = frob.sub(&Matrix::identity(&f, 3), &f);
        let basis = fixed.kernel_basis(&f);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![f.one(), f.zero(), f.zero()]);
    }

    #[test]
    fn solve_affine_unique_and_infeasible_cases() {
        let f = f2();
        let id = Matrix::identity(&f, 3);
        let b = vec![f.one(), f.zero(), f.one()];
        let sol = id.solve_affine(&b, &f);
        assert_eq!(sol.particular, Some(b));
        assert_eq!(sol.dimension(), 0);

        let zero = Matrix::zeros(&f, 2, 2);
        let sol = zero.solve_affine(&[f.one(), f.zero()], &f);
        assert!(!sol.is_feasible());
        assert_eq!(sol.dimension(), 2);
    }

    #[test]
    fn solve_affine_particular_has_free_coordinates_zero() {
        let f3 = FiniteField::prime(3).unwrap();
        // x + 2y + z = 1 over GF(3); columns y and z are free.
        let mat = m(&f3, 1, 3, &[1, 2, 1]);
        let sol = mat.solve_affine(&[f3.one()], &f3);
        let part = sol.particular.unwrap();
        assert_eq!(part, vec![f3.one(), f3.zero(), f3.zero()]);
        assert_eq!(sol.kernel.len(), 2);
        for v in &sol.kernel {
            assert!(mat.apply(v, &f3).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn det_nonzero_matches_invertibility() {
        let f = f2();
        assert!(Matrix::identity(&f, 3).det_nonzero(&f));
        assert!(!Matrix::zeros(&f, 2, 2).det_nonzero(&f));
        let singular = m(&f, 2, 2, &[1, 1, 1, 1]);
        assert!(!singular.det_nonzero(&f));
        assert!(singular.invert(&f).is_none());
    }

    #[test]
    fn gram_matrix_of_auto_dual_trace_basis_is_identity() {
        // In GF(8) with a^3 + a^2 + 1 = 0, the basis a, a^2, a^4 satisfies
        // trace(b_i b_j) = [i == j].
        let ext = FiniteField::new(2, vec![1, 0, 1, 1]).unwrap();
        let f = f2();
        let a = ext.root();
        let basis = [
            a.clone(),
            ext.mul(&a, &a),
            ext.pow(&a, 4),
        ];
        let gram = Matrix::from_fn(3, 3, |i, j| {
            let t = ext.trace(&ext.mul(&basis[i], &basis[j]));
            f.from_u64(t.coeffs()[0])
        });
        assert_eq!(gram, Matrix::identity(&f, 3));
        assert!(gram.det_nonzero(&f));
    }

    #[test]
    fn inverse_round_trips() {
        let f3 = FiniteField::prime(3).unwrap();
        let a = m(&f3, 3, 3, &[1, 2, 0, 0, 1, 1, 1, 0, 2]);
        let inv = a.invert(&f3).expect("matrix is invertible");
        assert_eq!(a.mul(&inv, &f3), Matrix::identity(&f3, 3));
        assert_eq!(inv.mul(&a, &f3), Matrix::identity(&f3, 3));
    }

    #[test]
    fn rref_pivots_are_ascending_and_reduced() {
        let f = f2();
        let mut mat = m(&f, 3, 4, &[0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1]);
        let pivots = mat.rref(&f);
        assert_eq!(pivots, vec![0, 1, 2]);
        for (t, &pc) in pivots.iter().enumerate() {
            assert_eq!(mat.at(t, pc), &f.one());
            for r in 0..mat.rows() {
                if r != t {
                    assert!(mat.at(r, pc).is_zero());
                }
            }
        }
    }
}
