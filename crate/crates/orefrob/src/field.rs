//! Arithmetic in `GF(p^k)` presented by an explicit monic irreducible modulus.
//!
//! Elements are coefficient vectors of fixed length `k`, ascending in the
//! power of the adjoined root, with entries reduced modulo `p`. There are no
//! discrete-log tables: every operation is polynomial arithmetic modulo the
//! modulus, so results are exact and independent of any generator choice.

use smallvec::SmallVec;
use thiserror::Error;

/// Largest allowed characteristic. Coefficient products must fit in `u64`
/// without overflow, so `p < 2^31`.
const MAX_PRIME: u64 = 1 << 31;

/// Cap on `p^ceil(k/2)`, the number of candidate divisors the exhaustive
/// irreducibility check walks for an extension modulus.
const MAX_DIVISOR_SEARCH: u128 = 1 << 22;

/// Validation and arithmetic errors for field construction and division.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The claimed characteristic is not a prime number.
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    /// The characteristic exceeds the supported range.
    #[error("characteristic {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    /// The modulus is empty, of degree zero, or not monic after reduction mod p.
    #[error("modulus must be monic of degree at least 1 with coefficients mod p")]
    BadModulus,
    /// The modulus factors; the reported polynomial is a proper monic divisor.
    #[error("modulus is reducible: divisible by {divisor:?}")]
    Reducible {
        /// A proper monic divisor found by the exhaustive search, ascending coefficients.
        divisor: Vec<u64>,
    },
    /// The exhaustive divisor search would exceed [`MAX_DIVISOR_SEARCH`] candidates.
    #[error("irreducibility check over {candidates} candidate divisors exceeds the supported range")]
    ModulusTooLarge {
        /// Number of candidate divisors the search would have to walk.
        candidates: u128,
    },
    /// Multiplicative inversion of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// An element literal has more coefficients than the field degree.
    #[error("element has {got} coefficients but the field has degree {degree}")]
    ElementTooLong {
        /// Coefficients supplied.
        got: usize,
        /// Field degree `k`.
        degree: usize,
    },
}

/// An element of `GF(p^k)`: exactly `k` coefficients, each in `[0, p)`,
/// ascending in the power of the adjoined root.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    coeffs: SmallVec<[u64; 4]>,
}

impl FieldElement {
    /// Coefficient slice, ascending, length equal to the field degree.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// `GF(p^k)` with a validated modulus. All element operations are methods on
/// this context; elements themselves are plain coefficient vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic, length `k + 1`, entries reduced mod `p`.
    modulus: Vec<u64>,
}

impl FiniteField {
    /// Build `GF(p^k)` from a characteristic and a monic modulus of degree
    /// `k >= 1` (ascending coefficients, length `k + 1`). Verifies that `p`
    /// is prime and that the modulus is irreducible over `GF(p)` by
    /// exhaustive search over monic divisors of degree at most `k/2`.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self, FieldError> {
        if p >= MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let mut modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulus);
        }
        let k = modulus.len() - 1;
        if let Some(divisor) = reducibility_witness(&modulus, p)? {
            return Err(FieldError::Reducible { divisor });
        }
        Ok(FiniteField { p, k, modulus })
    }

    /// The prime field `GF(p)`, presented with modulus `t`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        FiniteField::new(p, vec![0, 1])
    }

    /// Characteristic.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Extension degree `k` over the prime field.
    pub fn degree(&self) -> usize {
        self.k
    }

    /// The validated modulus, ascending coefficients, length `k + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements `p^k`.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    /// The zero element.
    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: SmallVec::from_elem(0, self.k),
        }
    }

    /// The unit element.
    pub fn one(&self) -> FieldElement {
        let mut coeffs = SmallVec::from_elem(0, self.k);
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// The residue class of the modulus variable. For `k >= 2` this is the
    /// adjoined root; for a prime field it is the constant `-modulus[0]`.
    pub fn root(&self) -> FieldElement {
        if self.k == 1 {
            let mut coeffs = SmallVec::from_elem(0, 1);
            coeffs[0] = (self.p - self.modulus[0]) % self.p;
            FieldElement { coeffs }
        } else {
            let mut coeffs = SmallVec::from_elem(0, self.k);
            coeffs[1] = 1;
            FieldElement { coeffs }
        }
    }

    /// Element from ascending coefficients; shorter slices are zero-padded,
    /// entries are reduced mod `p`.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.k {
            // Permit an over-long literal only when the excess is all zero.
            if coeffs[self.k..].iter().any(|&c| c % self.p != 0) {
                return Err(FieldError::ElementTooLong {
                    got: coeffs.len(),
                    degree: self.k,
                });
            }
        }
        let mut out = SmallVec::from_elem(0, self.k);
        for (i, c) in coeffs.iter().take(self.k).enumerate() {
            out[i] = c % self.p;
        }
        Ok(FieldElement { coeffs: out })
    }

    /// The constant element `n mod p`.
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut coeffs = SmallVec::from_elem(0, self.k);
        coeffs[0] = n % self.p;
        FieldElement { coeffs }
    }

    fn check(&self, x: &FieldElement) {
        debug_assert_eq!(x.coeffs.len(), self.k, "element from a different field");
    }

    /// Sum.
    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let mut out = x.clone();
        self.add_assign(&mut out, y);
        out
    }

    /// In-place sum; the hot path for elimination loops.
    pub fn add_assign(&self, x: &mut FieldElement, y: &FieldElement) {
        self.check(x);
        self.check(y);
        for (a, b) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
            *a = (*a + *b) % self.p;
        }
    }

    /// Difference.
    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let mut out = x.clone();
        self.sub_assign(&mut out, y);
        out
    }

    /// In-place difference.
    pub fn sub_assign(&self, x: &mut FieldElement, y: &FieldElement) {
        self.check(x);
        self.check(y);
        for (a, b) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
            *a = (*a + self.p - *b) % self.p;
        }
    }

    /// Additive inverse.
    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.check(x);
        let coeffs = x.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        FieldElement { coeffs }
    }

    /// Product: schoolbook convolution reduced by the monic modulus.
    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check(x);
        self.check(y);
        let k = self.k;
        let mut prod: SmallVec<[u64; 16]> = SmallVec::from_elem(0, 2 * k - 1);
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        // t^k = -(modulus minus leading term), applied top down.
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let m = self.modulus[j];
                if m != 0 {
                    prod[i - k + j] = (prod[i - k + j] + (self.p - m) * c) % self.p;
                }
            }
        }
        let mut coeffs = SmallVec::from_elem(0, k);
        coeffs.copy_from_slice(&prod[..k]);
        FieldElement { coeffs }
    }

    /// `x -= f * y`, the elimination kernel of the linear algebra layer.
    pub fn submul_assign(&self, x: &mut FieldElement, f: &FieldElement, y: &FieldElement) {
        let t = self.mul(f, y);
        self.sub_assign(x, &t);
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// coefficient polynomials. Errors on zero.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x);
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (g, u, _) = poly_ext_gcd(x.coeffs(), &self.modulus, self.p);
        // gcd with an irreducible modulus is a nonzero constant
        debug_assert_eq!(poly_degree(&g), Some(0));
        let scale = inv_mod(g[0], self.p);
        let mut lifted = poly_rem(&u, &self.modulus, self.p);
        lifted.iter_mut().for_each(|c| *c = *c * scale % self.p);
        self.element(&lifted)
    }

    /// `x^e` by square-and-multiply; `x^0 = 1` including for `x = 0`.
    pub fn pow(&self, x: &FieldElement, e: u128) -> FieldElement {
        let mut acc = self.one();
        if e == 0 {
            return acc;
        }
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius map `x -> x^p`, an automorphism of order `k` fixing
    /// exactly the prime field.
    pub fn frobenius(&self, x: &FieldElement) -> FieldElement {
        self.pow(x, self.p as u128)
    }

    /// Trace to the prime field: the sum of all `k` Frobenius images. The
    /// result always has zero coefficients above degree 0.
    pub fn trace(&self, x: &FieldElement) -> FieldElement {
        let mut acc = x.clone();
        let mut cur = x.clone();
        for _ in 1..self.k {
            cur = self.frobenius(&cur);
            self.add_assign(&mut acc, &cur);
        }
        acc
    }

    /// All `p^k` elements in ascending lexicographic order on the coefficient
    /// vector (the constant coefficient is the most significant position, so
    /// the enumeration starts `0, root, ...` for `k >= 2` and `0, 1, ...` for
    /// a prime field).
    pub fn enumerate(&self) -> ElementEnumeration<'_> {
        ElementEnumeration {
            field: self,
            next: 0,
            order: self.order(),
        }
    }

    /// Render an element as a polynomial in `a`, descending powers.
    pub fn format_element(&self, x: &FieldElement) -> String {
        self.check(x);
        let mut terms = Vec::new();
        for i in (0..self.k).rev() {
            let c = x.coeffs[i];
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            let term = match (c, i) {
                (_, 0) => format!("{c}"),
                (1, _) => var,
                _ => format!("{c}{var}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Iterator over all field elements in lexicographic coefficient order.
pub struct ElementEnumeration<'a> {
    field: &'a FiniteField,
    next: u128,
    order: u128,
}

impl Iterator for ElementEnumeration<'_> {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        if self.next >= self.order {
            return None;
        }
        let mut n = self.next;
        self.next += 1;
        let k = self.field.k;
        let p = self.field.p as u128;
        let mut coeffs = SmallVec::from_elem(0, k);
        for i in (0..k).rev() {
            coeffs[i] = (n % p) as u64;
            n /= p;
        }
        Some(FieldElement { coeffs })
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(x: u64, p: u64) -> u64 {
    debug_assert!(!x.is_multiple_of(p));
    pow_mod(x, p - 2, p)
}

// Dense polynomials over GF(p): ascending coefficient vectors, not
// necessarily trimmed.

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (da, db) = match (poly_degree(a), poly_degree(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return vec![0],
    };
    let mut out = vec![0; da + db + 1];
    for (i, &x) in a.iter().enumerate().take(da + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(db + 1) {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_divrem(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = poly_degree(den).expect("division by the zero polynomial");
    let lead_inv = inv_mod(den[dd], p);
    let mut rem: Vec<u64> = num.to_vec();
    let dn = match poly_degree(&rem) {
        Some(dn) if dn >= dd => dn,
        _ => return (vec![0], rem),
    };
    let mut quot = vec![0; dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let f = c * lead_inv % p;
        quot[i - dd] = f;
        for j in 0..=dd {
            rem[i - dd + j] = (rem[i - dd + j] + p - den[j] * f % p) % p;
        }
    }
    (quot, rem)
}

fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    poly_divrem(num, den, p).1
}

fn poly_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![1];
    let mut s1 = vec![0];
    let mut t0 = vec![0];
    let mut t1 = vec![1];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// Any proper monic divisor of degree in `1..=k/2`, or `None` when the
/// modulus is irreducible. Exhaustive over all candidate coefficient vectors.
fn reducibility_witness(modulus: &[u64], p: u64) -> Result<Option<Vec<u64>>, FieldError> {
    let k = modulus.len() - 1;
    if k == 1 {
        return Ok(None);
    }
    let half = k / 2;
    let candidates = (p as u128).pow(half as u32);
    if candidates > MAX_DIVISOR_SEARCH {
        return Err(FieldError::ModulusTooLarge { candidates });
    }
    for d in 1..=half {
        let mut div = vec![0; d + 1];
        div[d] = 1;
        loop {
            if poly_degree(&poly_rem(modulus, &div, p)).is_none() {
                return Ok(Some(div));
            }
            // odometer over the d low coefficients
            let mut pos = 0;
            loop {
                if pos == d {
                    break;
                }
                div[pos] += 1;
                if div[pos] < p {
                    break;
                }
                div[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FiniteField {
        FiniteField::new(2, vec![1, 0, 1, 1]).unwrap()
    }

    fn f9() -> FiniteField {
        FiniteField::new(3, vec![1, 0, 1]).unwrap()
    }

    #[test]
    fn construction_validates_inputs() {
        assert_eq!(
            FiniteField::new(4, vec![0, 1]).unwrap_err(),
            FieldError::NotPrime(4)
        );
        assert_eq!(
            FiniteField::new(1, vec![0, 1]).unwrap_err(),
            FieldError::NotPrime(1)
        );
        assert_eq!(
            FiniteField::new(2, vec![1]).unwrap_err(),
            FieldError::BadModulus
        );
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert_eq!(
            FiniteField::new(2, vec![1, 0, 1]).unwrap_err(),
            FieldError::Reducible {
                divisor: vec![1, 1]
            }
        );
        // t^2 = t * t
        assert_eq!(
            FiniteField::new(2, vec![0, 0, 1]).unwrap_err(),
            FieldError::Reducible {
                divisor: vec![0, 1]
            }
        );
        assert!(FiniteField::new(2, vec![1, 1, 1]).is_ok());
        assert!(f8().order() == 8);
    }

    #[test]
    fn gf8_product_table_spot_checks() {
        let f = f8();
        let a = f.root();
        let a2 = f.mul(&a, &a);
        // a^3 = a^2 + 1 from the modulus
        assert_eq!(f.mul(&a, &a2), f.element(&[1, 0, 1]).unwrap());
        let a4 = f.mul(&a2, &a2);
        assert_eq!(a4, f.element(&[1, 1, 1]).unwrap());
        // a generates the multiplicative group of order 7
        assert_eq!(f.pow(&a, 7), f.one());
        assert_eq!(f.mul(&a4, &a4), a);
        // the three Frobenius conjugates of a sum to 1
        let sum = f.add(&f.add(&a, &a2), &a4);
        assert_eq!(sum, f.one());
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let f = f8();
        for x in f.enumerate() {
            assert_eq!(f.mul(&f.one(), &x), x);
            assert_eq!(f.mul(&x, &f.one()), x);
        }
    }

    #[test]
    fn inversion_round_trips() {
        let f = f8();
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        let a = f.root();
        let ainv = f.inv(&a).unwrap();
        assert_eq!(ainv, f.element(&[0, 1, 1]).unwrap());
        assert_eq!(f.mul(&a, &ainv), f.one());
        for x in f.enumerate().skip(1) {
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
        assert_eq!(f.inv(&f.zero()).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn frobenius_is_entrywise_power_map() {
        let f = f8();
        let a = f.root();
        assert_eq!(f.frobenius(&a), f.mul(&a, &a));
        assert_eq!(
            f.frobenius(&f.element(&[1, 0, 1]).unwrap()),
            f.element(&[0, 1, 1]).unwrap()
        );
        for x in f.enumerate() {
            assert_eq!(f.frobenius(&x), f.mul(&x, &x));
        }
        let g = f9();
        for x in g.enumerate() {
            assert_eq!(g.frobenius(&x), g.mul(&g.mul(&x, &x), &x));
        }
    }

    #[test]
    fn frobenius_has_order_k_and_fixes_prime_field() {
        for f in [f8(), f9(), FiniteField::new(2, vec![1, 1, 0, 0, 1]).unwrap()] {
            for x in f.enumerate() {
                let mut y = x.clone();
                for _ in 0..f.degree() {
                    y = f.frobenius(&y);
                }
                assert_eq!(y, x);
            }
            for c in 0..f.characteristic() {
                let x = f.from_u64(c);
                assert_eq!(f.frobenius(&x), f.pow(&x, f.characteristic() as u128));
                assert_eq!(f.frobenius(&x), f.mul(&x, &f.pow(&x, (f.characteristic() - 1) as u128)));
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let f2 = FiniteField::prime(2).unwrap();
        let all: Vec<_> = f2.enumerate().collect();
        assert_eq!(all, vec![f2.zero(), f2.one()]);

        let f4 = FiniteField::new(2, vec![1, 1, 1]).unwrap();
        let all: Vec<_> = f4.enumerate().collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], f4.zero());
        assert_eq!(all[1], f4.root());
        let mut sorted = all.clone();
        sorted.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
        assert_eq!(sorted, all);

        let f = f8();
        let all: Vec<_> = f.enumerate().collect();
        assert_eq!(all.len(), 8);
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn field_axioms_by_enumeration_small_orders() {
        let fields = vec![
            FiniteField::prime(2).unwrap(),
            FiniteField::prime(3).unwrap(),
            FiniteField::prime(5).unwrap(),
            FiniteField::prime(7).unwrap(),
            FiniteField::new(2, vec![1, 1, 1]).unwrap(),
            f8(),
            f9(),
            FiniteField::new(2, vec![1, 1, 0, 0, 1]).unwrap(),
            FiniteField::new(5, vec![1, 1, 1]).unwrap(),
            FiniteField::new(3, vec![1, 2, 0, 1]).unwrap(),
            FiniteField::new(7, vec![1, 0, 1]).unwrap(),
            FiniteField::new(2, vec![1, 1, 0, 0, 0, 0, 1]).unwrap(),
        ];
        for f in fields {
            let all: Vec<_> = f.enumerate().collect();
            assert_eq!(all.len() as u128, f.order());
            for x in &all {
                assert_eq!(f.add(x, &f.neg(x)), f.zero());
                assert_eq!(f.pow(x, f.order()), *x);
                for y in &all {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in &all {
                        assert_eq!(f.mul(&f.mul(x, y), z), f.mul(x, &f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, &f.add(y, z)),
                            f.add(&f.mul(x, y), &f.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trace_lands_in_prime_field() {
        let f = f8();
        assert_eq!(f.trace(&f.root()), f.one());
        assert_eq!(f.trace(&f.one()), f.one());
        for x in f.enumerate() {
            let t = f.trace(&x);
            assert!(t.coeffs()[1..].iter().all(|&c| c == 0));
            assert_eq!(f.frobenius(&t), t);
        }
        let g = f9();
        for x in g.enumerate() {
            let t = g.trace(&x);
            assert!(t.coeffs()[1..].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn element_literals_reduce_and_reject_overflow() {
        let f = f8();
        assert_eq!(f.element(&[3, 2]).unwrap(), f.element(&[1, 0, 0]).unwrap());
        assert_eq!(f.element(&[0, 1, 0, 0]).unwrap(), f.root());
        assert_eq!(
            f.element(&[0, 0, 0, 1]).unwrap_err(),
            FieldError::ElementTooLong { got: 4, degree: 3 }
        );
    }

    #[test]
    fn formatting_is_descending_polynomial_notation() {
        let f = f8();
        assert_eq!(f.format_element(&f.zero()), "0");
        assert_eq!(f.format_element(&f.one()), "1");
        assert_eq!(f.format_element(&f.element(&[1, 1, 1]).unwrap()), "a^2 + a + 1");
        let g = f9();
        assert_eq!(g.format_element(&g.element(&[1, 2]).unwrap()), "2a + 1");
    }
}
