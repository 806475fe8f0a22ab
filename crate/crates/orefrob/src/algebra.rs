//! Finite-dimensional associative unital algebras presented by structure
//! constants over a finite field, together with the linear-map layer used by
//! the decision procedures: automorphism and twisted-derivation validation,
//! inner derivations, and elements of the tensor square `A (x) A`.
//!
//! Conventions: an element is a coordinate vector over the fixed basis
//! `a_0, ..., a_{r-1}`; a linear map is an `r x r` matrix whose column `j`
//! holds the coordinates of the image of `a_j`.

pub mod build;

use thiserror::Error;

use crate::field::{FieldElement, FiniteField};
use crate::linalg::Matrix;

/// Validation failures when constructing an algebra from structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Dimension zero is not a unital algebra.
    #[error("algebra dimension must be at least 1")]
    ZeroDimension,
    /// The structure-constant table has the wrong shape.
    #[error("structure constants must form a dim x dim table of dim-vectors")]
    BadShape,
    /// The declared unit vector has the wrong length.
    #[error("unit vector length must equal the dimension")]
    BadUnit,
    /// The declared unit does not act as identity on a basis element.
    #[error("unit axiom fails on basis element {index}")]
    UnitAxiom {
        /// Basis index where `1 * a_i` or `a_i * 1` differs from `a_i`.
        index: usize,
    },
    /// Multiplication is not associative on a basis triple.
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    Associativity {
        /// First factor index.
        i: usize,
        /// Second factor index.
        j: usize,
        /// Third factor index.
        k: usize,
    },
}

/// Defects reported by the linear-map validators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapDefect {
    /// The map's matrix is not `dim x dim`.
    #[error("map must be a dim x dim matrix")]
    WrongShape,
    /// An algebra automorphism must be bijective.
    #[error("map is not invertible")]
    NotInvertible,
    /// An algebra automorphism must fix the unit.
    #[error("map does not send 1 to 1")]
    UnitNotPreserved,
    /// Multiplicativity fails on a basis pair.
    #[error("map is not multiplicative on basis pair ({i}, {j})")]
    NotMultiplicative {
        /// First factor index.
        i: usize,
        /// Second factor index.
        j: usize,
    },
    /// The twisted Leibniz rule fails on a basis pair.
    #[error("twisted Leibniz rule fails on basis pair ({i}, {j})")]
    LeibnizFails {
        /// First factor index.
        i: usize,
        /// Second factor index.
        j: usize,
    },
}

/// Element of an algebra: a coordinate vector over the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    coords: Vec<FieldElement>,
}

impl AlgebraElement {
    /// Wrap a coordinate vector.
    pub fn new(coords: Vec<FieldElement>) -> AlgebraElement {
        AlgebraElement { coords }
    }

    /// Coordinates over the basis.
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// True when all coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Finite-dimensional associative unital algebra over a finite field,
/// presented by the products of basis elements.
///
/// The constructor checks the unit axiom and associativity exhaustively over
/// basis triples, which by bilinearity verifies them on the whole algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct Algebra {
    field: FiniteField,
    dim: usize,
    /// `products[i * dim + j]` holds the coordinates of `a_i * a_j`.
    products: Vec<AlgebraElement>,
    unit: AlgebraElement,
    labels: Option<Vec<String>>,
    /// Optional suggested Frobenius functional (values on the basis), tried
    /// before enumeration by the semi-Frobenius decision procedure.
    trace_hint: Option<Vec<FieldElement>>,
}

impl Algebra {
    /// Build and validate an algebra. `products` is row-major: entry
    /// `i * dim + j` is the coordinate vector of `a_i * a_j`.
    pub fn new(
        field: FiniteField,
        dim: usize,
        products: Vec<AlgebraElement>,
        unit: AlgebraElement,
    ) -> Result<Algebra, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if products.len() != dim * dim
            || products.iter().any(|e| e.coords.len() != dim)
        {
            return Err(AlgebraError::BadShape);
        }
        if unit.coords.len() != dim {
            return Err(AlgebraError::BadUnit);
        }
        let alg = Algebra {
            field,
            dim,
            products,
            unit,
            labels: None,
            trace_hint: None,
        };
        for i in 0..dim {
            let b = alg.basis(i);
            if alg.mul(&alg.unit, &b) != b || alg.mul(&b, &alg.unit) != b {
                return Err(AlgebraError::UnitAxiom { index: i });
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.basis_product(i, j).clone();
                for k in 0..dim {
                    let left = alg.mul(&ij, &alg.basis(k));
                    let right = alg.mul(&alg.basis(i), alg.basis_product(j, k));
                    if left != right {
                        return Err(AlgebraError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Attach human-readable basis labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    /// Attach a suggested Frobenius functional (values on the basis).
    pub fn with_trace_hint(mut self, hint: Vec<FieldElement>) -> Algebra {
        assert_eq!(hint.len(), self.dim);
        self.trace_hint = Some(hint);
        self
    }

    /// Base field.
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Dimension over the base field.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis labels, if attached.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Suggested Frobenius functional, if attached.
    pub fn trace_hint(&self) -> Option<&[FieldElement]> {
        self.trace_hint.as_deref()
    }

    /// The zero element.
    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            coords: vec![self.field.zero(); self.dim],
        }
    }

    /// The unit element.
    pub fn one(&self) -> AlgebraElement {
        self.unit.clone()
    }

    /// Basis element `a_i`.
    pub fn basis(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![self.field.zero(); self.dim];
        coords[i] = self.field.one();
        AlgebraElement { coords }
    }

    /// Element from coordinates; panics on wrong length.
    pub fn element(&self, coords: Vec<FieldElement>) -> AlgebraElement {
        assert_eq!(coords.len(), self.dim, "coordinate length must equal dim");
        AlgebraElement { coords }
    }

    /// Precomputed product `a_i * a_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.products[i * self.dim + j]
    }

    /// Structure constant: the `a_k` coordinate of `a_i * a_j`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.products[i * self.dim + j].coords[k]
    }

    /// Sum.
    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        AlgebraElement { coords }
    }

    /// Difference.
    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        AlgebraElement { coords }
    }

    /// Additive inverse.
    pub fn neg(&self, x: &AlgebraElement) -> AlgebraElement {
        let coords = x.coords.iter().map(|a| self.field.neg(a)).collect();
        AlgebraElement { coords }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &FieldElement, x: &AlgebraElement) -> AlgebraElement {
        let coords = x.coords.iter().map(|a| self.field.mul(c, a)).collect();
        AlgebraElement { coords }
    }

    /// `acc += c * x`.
    pub fn add_scaled_assign(&self, acc: &mut AlgebraElement, c: &FieldElement, x: &AlgebraElement) {
        for (a, b) in acc.coords.iter_mut().zip(&x.coords) {
            let t = self.field.mul(c, b);
            self.field.add_assign(a, &t);
        }
    }

    /// Product, bilinear extension of the structure constants.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut acc = self.zero();
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = self.field.mul(xi, yj);
                self.add_scaled_assign(&mut acc, &c, self.basis_product(i, j));
            }
        }
        acc
    }

    /// `x^e` by repeated multiplication; `x^0 = 1`.
    pub fn pow(&self, x: &AlgebraElement, e: usize) -> AlgebraElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of left multiplication by `x` (column `j` is `x * a_j`).
    pub fn left_mul_matrix(&self, x: &AlgebraElement) -> Matrix {
        let cols: Vec<AlgebraElement> =
            (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_fn(self.dim, self.dim, |s, j| cols[j].coords[s].clone())
    }

    /// Matrix of right multiplication by `x` (column `j` is `a_j * x`).
    pub fn right_mul_matrix(&self, x: &AlgebraElement) -> Matrix {
        let cols: Vec<AlgebraElement> =
            (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_fn(self.dim, self.dim, |s, j| cols[j].coords[s].clone())
    }

    /// The opposite algebra: same space, reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        let mut products = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                products.push(self.basis_product(j, i).clone());
            }
        }
        Algebra {
            field: self.field.clone(),
            dim: self.dim,
            products,
            unit: self.unit.clone(),
            labels: self.labels.clone(),
            trace_hint: self.trace_hint.clone(),
        }
    }

    /// Check that `sigma` is an algebra automorphism: bijective, fixes the
    /// unit, multiplicative on every basis pair.
    pub fn validate_automorphism(&self, sigma: &LinMap) -> Result<(), MapDefect> {
        if sigma.matrix.rows() != self.dim || sigma.matrix.cols() != self.dim {
            return Err(MapDefect::WrongShape);
        }
        if !sigma.matrix.det_nonzero(&self.field) {
            return Err(MapDefect::NotInvertible);
        }
        if sigma.apply(self, &self.unit) != self.unit {
            return Err(MapDefect::UnitNotPreserved);
        }
        let images: Vec<AlgebraElement> =
            (0..self.dim).map(|j| sigma.image_of_basis(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = sigma.apply(self, self.basis_product(i, j));
                let rhs = self.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(MapDefect::NotMultiplicative { i, j });
                }
            }
        }
        Ok(())
    }

    /// Check the twisted Leibniz rule
    /// `delta(a_i a_j) = sigma(a_i) delta(a_j) + delta(a_i) a_j`
    /// on every basis pair; bilinearity extends it to the whole algebra.
    pub fn validate_sigma_derivation(
        &self,
        delta: &LinMap,
        sigma: &LinMap,
    ) -> Result<(), MapDefect> {
        if delta.matrix.rows() != self.dim || delta.matrix.cols() != self.dim {
            return Err(MapDefect::WrongShape);
        }
        let sigma_images: Vec<AlgebraElement> =
            (0..self.dim).map(|j| sigma.image_of_basis(j)).collect();
        let delta_images: Vec<AlgebraElement> =
            (0..self.dim).map(|j| delta.image_of_basis(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = delta.apply(self, self.basis_product(i, j));
                let rhs = self.add(
                    &self.mul(&sigma_images[i], &delta_images[j]),
                    &self.mul(&delta_images[i], &self.basis(j)),
                );
                if lhs != rhs {
                    return Err(MapDefect::LeibnizFails { i, j });
                }
            }
        }
        Ok(())
    }

    /// The inner twisted derivation `a -> b a - sigma(a) b`. Always a valid
    /// `sigma`-derivation when `sigma` is an automorphism.
    pub fn inner_derivation(&self, sigma: &LinMap, b: &AlgebraElement) -> LinMap {
        let images: Vec<AlgebraElement> = (0..self.dim)
            .map(|j| {
                let aj = self.basis(j);
                self.sub(&self.mul(b, &aj), &self.mul(&sigma.image_of_basis(j), b))
            })
            .collect();
        LinMap::from_images(self, &images)
    }
}

/// Linear endomorphism of the algebra's underlying vector space; column `j`
/// of the matrix holds the coordinates of the image of `a_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    matrix: Matrix,
}

impl LinMap {
    /// Wrap a square matrix (columns are basis images).
    pub fn new(matrix: Matrix) -> LinMap {
        assert_eq!(matrix.rows(), matrix.cols(), "linear map must be square");
        LinMap { matrix }
    }

    /// Map sending `a_j` to `images[j]`.
    pub fn from_images(alg: &Algebra, images: &[AlgebraElement]) -> LinMap {
        assert_eq!(images.len(), alg.dim());
        LinMap {
            matrix: Matrix::from_fn(alg.dim(), alg.dim(), |s, j| {
                images[j].coords()[s].clone()
            }),
        }
    }

    /// The identity map.
    pub fn identity(alg: &Algebra) -> LinMap {
        LinMap {
            matrix: Matrix::identity(alg.field(), alg.dim()),
        }
    }

    /// The zero map.
    pub fn zero(alg: &Algebra) -> LinMap {
        LinMap {
            matrix: Matrix::zeros(alg.field(), alg.dim(), alg.dim()),
        }
    }

    /// Underlying matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Apply to an element.
    pub fn apply(&self, alg: &Algebra, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.matrix.apply(x.coords(), alg.field()))
    }

    /// Image of basis element `a_j`.
    pub fn image_of_basis(&self, j: usize) -> AlgebraElement {
        AlgebraElement::new(
            (0..self.matrix.rows())
                .map(|s| self.matrix.at(s, j).clone())
                .collect(),
        )
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinMap, field: &FiniteField) -> LinMap {
        LinMap {
            matrix: self.matrix.mul(&other.matrix, field),
        }
    }
}

/// Element of the tensor square `A (x) A` over the base field, stored as the
/// `r x r` coefficient matrix of the basis tensors `a_s (x) a_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSquareElement {
    coeffs: Matrix,
}

impl TensorSquareElement {
    /// The zero tensor.
    pub fn zero(alg: &Algebra) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: Matrix::zeros(alg.field(), alg.dim(), alg.dim()),
        }
    }

    /// Wrap a coefficient matrix.
    pub fn from_matrix(coeffs: Matrix) -> TensorSquareElement {
        assert_eq!(coeffs.rows(), coeffs.cols(), "tensor coefficients must be square");
        TensorSquareElement { coeffs }
    }

    /// The simple tensor `x (x) y`.
    pub fn simple(alg: &Algebra, x: &AlgebraElement, y: &AlgebraElement) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: Matrix::from_fn(alg.dim(), alg.dim(), |s, t| {
                alg.field().mul(&x.coords()[s], &y.coords()[t])
            }),
        }
    }

    /// The basis tensor `a_i (x) a_j`.
    pub fn basis(alg: &Algebra, i: usize, j: usize) -> TensorSquareElement {
        let mut coeffs = Matrix::zeros(alg.field(), alg.dim(), alg.dim());
        *coeffs.at_mut(i, j) = alg.field().one();
        TensorSquareElement { coeffs }
    }

    /// Coefficient matrix.
    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    /// True when all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Sum.
    pub fn add(&self, other: &TensorSquareElement, alg: &Algebra) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: self.coeffs.add(&other.coeffs, alg.field()),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &TensorSquareElement, alg: &Algebra) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: self.coeffs.sub(&other.coeffs, alg.field()),
        }
    }

    /// Multiplication map: `mu(sum c_st a_s (x) a_t) = sum c_st a_s a_t`.
    pub fn mu(&self, alg: &Algebra) -> AlgebraElement {
        let mut acc = alg.zero();
        for s in 0..alg.dim() {
            for t in 0..alg.dim() {
                let c = self.coeffs.at(s, t);
                if !c.is_zero() {
                    alg.add_scaled_assign(&mut acc, c, alg.basis_product(s, t));
                }
            }
        }
        acc
    }

    /// Apply `sigma (x) sigma` to both legs.
    pub fn twist_sigma(&self, alg: &Algebra, sigma: &LinMap) -> TensorSquareElement {
        let f = alg.field();
        let s = sigma.matrix();
        TensorSquareElement {
            coeffs: s.mul(&self.coeffs, f).mul(&s.transpose(), f),
        }
    }

    /// Apply the twisted-derivation extension
    /// `sigma (x) delta + delta (x) id` to the tensor square.
    pub fn twist_delta(&self, alg: &Algebra, sigma: &LinMap, delta: &LinMap) -> TensorSquareElement {
        let f = alg.field();
        let s = sigma.matrix();
        let d = delta.matrix();
        let first = s.mul(&self.coeffs, f).mul(&d.transpose(), f);
        let second = d.mul(&self.coeffs, f);
        TensorSquareElement {
            coeffs: first.add(&second, f),
        }
    }

    /// Outer left action on the first leg: `x . (u (x) v) = x u (x) v`.
    pub fn left_mul(&self, alg: &Algebra, x: &AlgebraElement) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: alg.left_mul_matrix(x).mul(&self.coeffs, alg.field()),
        }
    }

    /// Outer right action on the second leg: `(u (x) v) . x = u (x) v x`.
    pub fn right_mul(&self, alg: &Algebra, x: &AlgebraElement) -> TensorSquareElement {
        TensorSquareElement {
            coeffs: self
                .coeffs
                .mul(&alg.right_mul_matrix(x).transpose(), alg.field()),
        }
    }

    /// Per-basis-element Casimir defects `a_l . p - p . a_l`; the element is
    /// a Casimir element exactly when all of them vanish.
    pub fn casimir_defect(&self, alg: &Algebra) -> Vec<TensorSquareElement> {
        (0..alg.dim())
            .map(|l| {
                let b = alg.basis(l);
                self.left_mul(alg, &b).sub(&self.right_mul(alg, &b), alg)
            })
            .collect()
    }
}
