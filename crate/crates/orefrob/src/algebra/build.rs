//! Constructors for the stock algebras: full matrix algebras over a field
//! extension viewed over the prime field, a field extension as an algebra
//! over a subpresentation, and truncated polynomial rings.
//!
//! A `GF(p^m)`-point of view is flattened to the prime field through an
//! `ExtensionBasis`, a chosen `GF(p)`-basis of the extension together with
//! the change-of-basis matrix needed to re-expand products.

use thiserror::Error;

use super::{Algebra, AlgebraElement, AlgebraError, LinMap};
use crate::field::{FieldElement, FiniteField};
use crate::linalg::Matrix;

/// Failures while constructing a stock algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    /// The chosen elements do not form a basis over the prime field.
    #[error("chosen elements are not linearly independent over the prime field")]
    NotABasis,
    /// Wrong number of basis elements.
    #[error("a basis of GF(p^m) over GF(p) needs exactly m elements")]
    WrongBasisSize,
    /// Requested a degenerate size (0x0 matrices, length-0 truncation).
    #[error("size parameter must be at least 1")]
    ZeroSize,
    /// Structure constants produced by the builder failed validation;
    /// indicates an internal inconsistency in the presentation.
    #[error("builder produced an invalid table: {0}")]
    Invalid(#[from] AlgebraError),
}

/// A finite field extension `GF(p^m)` presented as a vector space over its
/// prime field via a chosen basis.
#[derive(Clone, Debug)]
pub struct ExtensionBasis {
    ext: FiniteField,
    prime: FiniteField,
    basis: Vec<FieldElement>,
    /// Inverse of the matrix whose columns are the basis elements' monomial
    /// coordinates; maps monomial coordinates to basis coordinates.
    to_basis: Matrix,
}

impl ExtensionBasis {
    /// Present `ext` over its prime field via the given basis.
    pub fn new(ext: &FiniteField, basis: Vec<FieldElement>) -> Result<ExtensionBasis, BuildError> {
        let m = ext.degree();
        if basis.len() != m {
            return Err(BuildError::WrongBasisSize);
        }
        let prime = FiniteField::prime(ext.characteristic()).expect("characteristic is prime");
        let cols = Matrix::from_fn(m, m, |s, j| {
            prime.from_u64(basis[j].coeffs().get(s).copied().unwrap_or(0))
        });
        let to_basis = cols.invert(&prime).ok_or(BuildError::NotABasis)?;
        Ok(ExtensionBasis {
            ext: ext.clone(),
            prime,
            basis,
            to_basis,
        })
    }

    /// The monomial basis `1, t, ..., t^(m-1)`.
    pub fn polynomial(ext: &FiniteField) -> ExtensionBasis {
        let m = ext.degree();
        let basis = (0..m)
            .map(|i| {
                let mut c = vec![0; m];
                c[i] = 1;
                ext.element(&c).expect("monomial basis element")
            })
            .collect();
        ExtensionBasis::new(ext, basis).expect("monomial basis is a basis")
    }

    /// A normal basis `alpha, alpha^p, ..., alpha^(p^(m-1))`, using the first
    /// generator in field enumeration order.
    pub fn normal(ext: &FiniteField) -> Result<ExtensionBasis, BuildError> {
        let m = ext.degree();
        for alpha in ext.enumerate() {
            if alpha.is_zero() {
                continue;
            }
            let mut basis = Vec::with_capacity(m);
            let mut cur = alpha.clone();
            for _ in 0..m {
                basis.push(cur.clone());
                cur = ext.frobenius(&cur);
            }
            if let Ok(pres) = ExtensionBasis::new(ext, basis) {
                return Ok(pres);
            }
        }
        Err(BuildError::NotABasis)
    }

    /// The extension field.
    pub fn ext(&self) -> &FiniteField {
        &self.ext
    }

    /// The prime field the presentation lives over.
    pub fn prime(&self) -> &FiniteField {
        &self.prime
    }

    /// The chosen basis.
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    /// Coordinates of `x` over the chosen basis, as prime-field scalars.
    pub fn expand(&self, x: &FieldElement) -> Vec<FieldElement> {
        let m = self.ext.degree();
        let mono: Vec<FieldElement> = (0..m)
            .map(|s| self.prime.from_u64(x.coeffs().get(s).copied().unwrap_or(0)))
            .collect();
        self.to_basis.apply(&mono, &self.prime)
    }

    /// Trace of `x` into the prime field.
    pub fn trace(&self, x: &FieldElement) -> FieldElement {
        let t = self.ext.trace(x);
        self.prime.from_u64(t.coeffs()[0])
    }
}

/// The algebra of `n x n` matrices over `GF(p^m)`, flattened to a
/// `m * n^2`-dimensional algebra over the prime field.
pub struct MatrixAlgebra {
    /// The flattened algebra.
    pub algebra: Algebra,
    pres: ExtensionBasis,
    n: usize,
}

impl MatrixAlgebra {
    /// Index of the basis element `c_i E_(s t)` (field-basis layer `i`,
    /// matrix position `(s, t)`, all zero-based).
    pub fn basis_index(&self, i: usize, s: usize, t: usize) -> usize {
        i * self.n * self.n + s * self.n + t
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The extension presentation used for entries.
    pub fn presentation(&self) -> &ExtensionBasis {
        &self.pres
    }

    /// Embed a row-major `n x n` matrix with entries in the extension field.
    pub fn embed(&self, entries: &[FieldElement]) -> AlgebraElement {
        assert_eq!(entries.len(), self.n * self.n);
        let m = self.pres.ext().degree();
        let mut coords = vec![self.pres.prime().zero(); self.algebra.dim()];
        for s in 0..self.n {
            for t in 0..self.n {
                let lambda = self.pres.expand(&entries[s * self.n + t]);
                for i in 0..m {
                    coords[self.basis_index(i, s, t)] = lambda[i].clone();
                }
            }
        }
        AlgebraElement::new(coords)
    }

    /// The single-entry matrix `c E_(s t)`.
    pub fn matrix_unit(&self, c: &FieldElement, s: usize, t: usize) -> AlgebraElement {
        let mut entries = vec![self.pres.ext().zero(); self.n * self.n];
        entries[s * self.n + t] = c.clone();
        self.embed(&entries)
    }

    /// The scalar matrix `c I`.
    pub fn scalar_matrix(&self, c: &FieldElement) -> AlgebraElement {
        let mut entries = vec![self.pres.ext().zero(); self.n * self.n];
        for s in 0..self.n {
            entries[s * self.n + s] = c.clone();
        }
        self.embed(&entries)
    }

    /// The automorphism applying the Frobenius `c -> c^p` to every entry.
    pub fn entrywise_frobenius(&self) -> LinMap {
        let ext = self.pres.ext().clone();
        let images: Vec<AlgebraElement> = (0..self.algebra.dim())
            .map(|idx| {
                let i = idx / (self.n * self.n);
                let rest = idx % (self.n * self.n);
                let c = ext.frobenius(&self.pres.basis()[i]);
                self.matrix_unit(&c, rest / self.n, rest % self.n)
            })
            .collect();
        LinMap::from_images(&self.algebra, &images)
    }
}

/// Build the matrix algebra `M_n(GF(p^m))` over the prime field. Basis
/// element `i * n^2 + s * n + t` is `c_i E_(s t)` for the presentation's
/// field basis `c_0, ..., c_(m-1)`.
pub fn matrix_algebra(pres: &ExtensionBasis, n: usize) -> Result<MatrixAlgebra, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    let ext = pres.ext();
    let m = ext.degree();
    let dim = m * n * n;
    let prime = pres.prime().clone();
    let idx = |i: usize, s: usize, t: usize| i * n * n + s * n + t;

    let mut products = Vec::with_capacity(dim * dim);
    for left in 0..dim {
        let (i, s, t) = (left / (n * n), (left / n) % n, left % n);
        for right in 0..dim {
            let (j, u, v) = (right / (n * n), (right / n) % n, right % n);
            let mut coords = vec![prime.zero(); dim];
            // c_i E_st * c_j E_uv = (c_i c_j) E_sv when t = u, else 0
            if t == u {
                let prod = ext.mul(&pres.basis[i], &pres.basis[j]);
                let lambda = pres.expand(&prod);
                for (h, lam) in lambda.iter().enumerate() {
                    coords[idx(h, s, v)] = lam.clone();
                }
            }
            products.push(AlgebraElement::new(coords));
        }
    }

    let one_coords = pres.expand(&ext.one());
    let mut unit = vec![prime.zero(); dim];
    for s in 0..n {
        for (i, lam) in one_coords.iter().enumerate() {
            unit[idx(i, s, s)] = lam.clone();
        }
    }

    let mut labels = Vec::with_capacity(dim);
    let mut hint = Vec::with_capacity(dim);
    for i in 0..m {
        let c = &pres.basis[i];
        for s in 0..n {
            for t in 0..n {
                labels.push(format!("({})E{}{}", ext.format_element(c), s + 1, t + 1));
                hint.push(if s == t { pres.trace(c) } else { prime.zero() });
            }
        }
    }

    let algebra = Algebra::new(prime, dim, products, AlgebraElement::new(unit))?
        .with_labels(labels)
        .with_trace_hint(hint);
    Ok(MatrixAlgebra {
        algebra,
        pres: pres.clone(),
        n,
    })
}

/// A field extension viewed as an algebra over the prime field.
pub struct FieldAlgebra {
    /// The flattened algebra.
    pub algebra: Algebra,
    pres: ExtensionBasis,
}

impl FieldAlgebra {
    /// The extension presentation.
    pub fn presentation(&self) -> &ExtensionBasis {
        &self.pres
    }

    /// Embed a field element.
    pub fn embed(&self, x: &FieldElement) -> AlgebraElement {
        AlgebraElement::new(self.pres.expand(x))
    }

    /// The Frobenius `x -> x^p` as a linear map over the prime field.
    pub fn frobenius_map(&self) -> LinMap {
        let ext = self.pres.ext();
        let images: Vec<AlgebraElement> = self
            .pres
            .basis()
            .iter()
            .map(|b| self.embed(&ext.frobenius(b)))
            .collect();
        LinMap::from_images(&self.algebra, &images)
    }

    /// Multiplication by `c` as a linear map over the prime field.
    pub fn mult_map(&self, c: &FieldElement) -> LinMap {
        let ext = self.pres.ext();
        let images: Vec<AlgebraElement> = self
            .pres
            .basis()
            .iter()
            .map(|b| self.embed(&ext.mul(c, b)))
            .collect();
        LinMap::from_images(&self.algebra, &images)
    }
}

/// Build `GF(p^m)` as an `m`-dimensional algebra over `GF(p)` with the
/// presentation's basis.
pub fn field_as_algebra(pres: &ExtensionBasis) -> Result<FieldAlgebra, BuildError> {
    let ext = pres.ext();
    let m = ext.degree();
    let prime = pres.prime().clone();
    let mut products = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let prod = ext.mul(&pres.basis[i], &pres.basis[j]);
            products.push(AlgebraElement::new(pres.expand(&prod)));
        }
    }
    let unit = AlgebraElement::new(pres.expand(&ext.one()));
    let labels = pres.basis.iter().map(|b| ext.format_element(b)).collect();
    let hint = pres.basis.iter().map(|b| pres.trace(b)).collect();
    let algebra = Algebra::new(prime, m, products, unit)?
        .with_labels(labels)
        .with_trace_hint(hint);
    Ok(FieldAlgebra {
        algebra,
        pres: pres.clone(),
    })
}

/// Build the truncated polynomial ring `F[t] / (t^m)` with basis
/// `1, t, ..., t^(m-1)`.
pub fn truncated_polynomials(field: &FiniteField, m: usize) -> Result<Algebra, BuildError> {
    if m == 0 {
        return Err(BuildError::ZeroSize);
    }
    let mut products = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let mut coords = vec![field.zero(); m];
            if i + j < m {
                coords[i + j] = field.one();
            }
            products.push(AlgebraElement::new(coords));
        }
    }
    let mut unit = vec![field.zero(); m];
    unit[0] = field.one();
    let labels = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    // coefficient of t^(m-1) is a Frobenius functional for this local ring
    let mut hint = vec![field.zero(); m];
    hint[m - 1] = field.one();
    Ok(Algebra::new(field.clone(), m, products, AlgebraElement::new(unit))?
        .with_labels(labels)
        .with_trace_hint(hint))
}
