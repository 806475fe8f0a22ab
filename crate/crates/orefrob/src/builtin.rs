//! Built-in example extensions.
//!
//! `biseparable_not_frobenius` is the headline example: 2x2 matrices over
//! GF(8), flattened over GF(2), with entrywise Frobenius twist and the inner
//! derivation generated by `a E22`. The resulting Ore extension is split and
//! separable but not Frobenius, not even up to a twist of the base ring.
//!
//! `semi_not_frobenius` is the small contrast example: a field extension
//! `GF(p^n)` presented on a normal basis, twisted by its own Frobenius, with
//! the derivation `b -> (tau(b) - b) alpha / (tau(alpha) - alpha)`. The base
//! algebra is Frobenius (so the extension is semi-Frobenius) but no
//! compatible functional survives the twist.

use thiserror::Error;

use crate::algebra::build::{
    field_as_algebra, matrix_algebra, BuildError, ExtensionBasis, MatrixAlgebra,
};
use crate::algebra::{AlgebraElement, LinMap, TensorSquareElement};
use crate::field::{FieldError, FiniteField};
use crate::linalg::Matrix;
use crate::ore::{OreError, OreExtension};

/// Failures when materializing a built-in example.
#[derive(Debug, Error)]
pub enum BuiltinError {
    /// Field construction failed (bad prime, reducible modulus).
    #[error(transparent)]
    Field(#[from] FieldError),
    /// Presentation or algebra construction failed.
    #[error(transparent)]
    Build(#[from] BuildError),
    /// The twisting maps failed validation.
    #[error(transparent)]
    Ore(#[from] OreError),
    /// The Frobenius twist is trivial on a prime field.
    #[error("degree must be at least 2 so that the Frobenius twist is nontrivial")]
    DegreeTooSmall,
}

/// The matrix counterexample, bundled with its layout helper and the
/// element generating the derivation.
pub struct Counterexample {
    /// The Ore extension itself.
    pub ore: OreExtension,
    /// Index layout of `M2(GF(8))` over GF(2).
    pub layout: MatrixAlgebra,
    /// `a E22`, the inner generator of the derivation.
    pub inner_generator: AlgebraElement,
}

impl Counterexample {
    /// The known degree-zero separability certificate
    /// `sum_i (c_i E11 (x) c_i E11 + c_i E21 (x) c_i E12)` over the
    /// auto-dual field basis `c_i = a^(2^i)`.
    pub fn certificate(&self) -> TensorSquareElement {
        let alg = self.ore.algebra();
        let f = alg.field();
        let mut coeffs = Matrix::zeros(f, alg.dim(), alg.dim());
        for i in 0..3 {
            let e11 = self.layout.basis_index(i, 0, 0);
            let e21 = self.layout.basis_index(i, 1, 0);
            let e12 = self.layout.basis_index(i, 0, 1);
            *coeffs.at_mut(e11, e11) = f.one();
            *coeffs.at_mut(e21, e12) = f.one();
        }
        TensorSquareElement::from_matrix(coeffs)
    }
}

/// Build the split separable extension that is not Frobenius:
/// `A = M2(GF(8))` over `F = GF(2)` with basis layers `a, a^2, a^4`,
/// `sigma` the entrywise Frobenius and `delta(X) = M X - sigma(X) M` for
/// `M = a E22`.
pub fn biseparable_not_frobenius() -> Counterexample {
    let ext = FiniteField::new(2, vec![1, 0, 1, 1]).expect("x^3 + x^2 + 1 is irreducible");
    let a = ext.root();
    let basis = vec![a.clone(), ext.frobenius(&a), ext.frobenius(&ext.frobenius(&a))];
    let pres = ExtensionBasis::new(&ext, basis).expect("a, a^2, a^4 is a normal basis");
    let layout = matrix_algebra(&pres, 2).expect("matrix algebra over a valid presentation");
    let sigma = layout.entrywise_frobenius();
    let m = layout.matrix_unit(&a, 1, 1);
    let delta = layout.algebra.inner_derivation(&sigma, &m);
    let ore = OreExtension::new(layout.algebra.clone(), sigma, delta)
        .expect("entrywise Frobenius and an inner derivation always validate");
    Counterexample {
        ore,
        layout,
        inner_generator: m,
    }
}

/// First irreducible monic modulus of degree `n` over GF(p), scanning
/// constant-coefficient digits in base-p counting order.
fn first_irreducible(p: u64, n: usize) -> Result<FiniteField, FieldError> {
    let mut v: u128 = 0;
    loop {
        let mut modulus: Vec<u64> = (0..n)
            .map(|i| ((v / (p as u128).pow(i as u32)) % p as u128) as u64)
            .collect();
        modulus.push(1);
        match FiniteField::new(p, modulus) {
            Ok(f) => return Ok(f),
            Err(FieldError::Reducible { .. }) => v += 1,
            Err(e) => return Err(e),
        }
    }
}

/// Build the field-extension example `GF(p^n)` over `GF(p)`: normal basis
/// presentation, `sigma = tau` (Frobenius), and
/// `delta(b) = (tau(b) - b) alpha / (tau(alpha) - alpha)` so that
/// `delta(alpha) = alpha`. For `(p, n) = (2, 3)` the modulus `t^3 + t^2 + 1`
/// and generator `alpha = a` are used; otherwise the first irreducible
/// modulus and the first normal-basis generator in enumeration order.
pub fn semi_not_frobenius(p: u64, n: usize) -> Result<OreExtension, BuiltinError> {
    if n < 2 {
        return Err(BuiltinError::DegreeTooSmall);
    }
    let (ext, pres) = if (p, n) == (2, 3) {
        let ext = FiniteField::new(2, vec![1, 0, 1, 1])?;
        let a = ext.root();
        let basis = vec![a.clone(), ext.frobenius(&a), ext.frobenius(&ext.frobenius(&a))];
        let pres = ExtensionBasis::new(&ext, basis)?;
        (ext, pres)
    } else {
        let ext = first_irreducible(p, n)?;
        let pres = ExtensionBasis::normal(&ext)?;
        (ext.clone(), pres)
    };
    let fa = field_as_algebra(&pres)?;
    let tau = fa.frobenius_map();
    let alpha = pres.basis()[0].clone();
    let denom = ext.sub(&ext.frobenius(&alpha), &alpha);
    let c = ext.mul(&alpha, &ext.inv(&denom)?);
    let images: Vec<AlgebraElement> = pres
        .basis()
        .iter()
        .map(|b| {
            let diff = ext.sub(&ext.frobenius(b), b);
            fa.embed(&ext.mul(&diff, &c))
        })
        .collect();
    let delta = LinMap::from_images(&fa.algebra, &images);
    Ok(OreExtension::new(fa.algebra.clone(), tau, delta)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_has_the_documented_shape() {
        let cx = biseparable_not_frobenius();
        let alg = cx.ore.algebra();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.field().order(), 2);
        // delta is exactly the inner derivation generated by a E22
        let delta = alg.inner_derivation(cx.ore.sigma(), &cx.inner_generator);
        assert_eq!(delta.matrix(), cx.ore.delta().matrix());
        assert!(cx.ore.inner_witness().is_some());
        // trace hint marks the six diagonal positions
        let hint = alg.trace_hint().expect("matrix builder attaches a hint");
        let ones: Vec<usize> = hint
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(ones, vec![0, 3, 4, 7, 8, 11]);
    }

    #[test]
    fn certificate_multiplies_to_one() {
        let cx = biseparable_not_frobenius();
        let p = cx.certificate();
        assert_eq!(p.mu(cx.ore.algebra()), cx.ore.algebra().one());
    }

    #[test]
    fn field_example_fixes_its_generator_under_delta() {
        let ore = semi_not_frobenius(2, 3).unwrap();
        let alg = ore.algebra();
        assert_eq!(alg.dim(), 3);
        // basis vector 0 is alpha and delta(alpha) = alpha
        assert_eq!(ore.delta().image_of_basis(0), alg.basis(0));
        assert!(ore.inner_witness().is_some());
    }

    #[test]
    fn field_example_works_for_other_parameters() {
        for (p, n) in [(2u64, 2usize), (3, 2), (5, 2), (2, 4)] {
            let ore = semi_not_frobenius(p, n).unwrap();
            assert_eq!(ore.algebra().dim(), n);
            assert_eq!(ore.algebra().field().characteristic(), p);
            // delta(alpha) = alpha in every parameterization
            assert_eq!(ore.delta().image_of_basis(0), ore.algebra().basis(0));
        }
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        assert!(matches!(
            semi_not_frobenius(2, 1),
            Err(BuiltinError::DegreeTooSmall)
        ));
        assert!(matches!(
            semi_not_frobenius(4, 2),
            Err(BuiltinError::Field(FieldError::NotPrime(4)))
        ));
    }
}
