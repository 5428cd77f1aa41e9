//! Exact arithmetic in small finite fields `F_{p^k}` (`p^k <= 2^16`).
//!
//! Elements are stored in their coefficient-vector encoding: the element
//! `c_0 + c_1 w + ... + c_{k-1} w^{k-1}` is the integer `sum c_i p^i`, where `w`
//! is the class of `x` modulo the defining polynomial. Multiplication goes
//! through precomputed log/antilog tables built from a verified primitive
//! element; addition is digit-wise mod `p` (table driven for `q <= 256`).
//!
//! Field elements are plain `Copy` handles ([`Fe`]); all arithmetic is done
//! through the owning [`Field`]. [`FieldElement`] bundles a value with its
//! field for callers that want checked mixed-field errors.

mod ext;
mod poly;
pub(crate) mod prime;

pub use ext::{ExtElem, ExtField};
pub use poly::{is_irreducible, Poly};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: u32, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus coefficient {0} is not reduced mod p")]
    BadCoefficient(u32),
    #[error("modulus is reducible over F_p")]
    Reducible,
    #[error("field order {0} exceeds the supported maximum of 2^16")]
    TooLarge(u64),
    #[error("extension field of order {q}^{degree} does not fit the exponent range")]
    ExtensionTooLarge { q: u64, degree: u32 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element {0} is not primitive")]
    NotPrimitive(String),
    #[error("cannot parse field element `{0}`")]
    Parse(String),
}

/// A field element in coefficient-vector encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// How the defining polynomial of `F_{p^{2m}}` is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modulus {
    /// `w^2 = w + 1` over F_4 and F_9, `w^4 = w + 1` over F_16; otherwise the
    /// first primitive polynomial in coefficient order.
    Builtin,
    /// Ascending coefficient list over F_p, monic.
    Coeffs(Vec<u32>),
}

/// A finite field `F_{p^k}` with log/antilog tables.
pub struct Field {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    primitive: Fe,
    exp: Vec<Fe>,
    log: Vec<u32>,
    add_table: Option<Vec<Fe>>,
    neg: Vec<Fe>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Build `F_{p^{2m}}`, the base field of the chain ring.
pub fn field_create(p: u32, m: u32, modulus: Modulus) -> Result<Arc<Field>, GfError> {
    let degree = 2 * m;
    let coeffs = match modulus {
        Modulus::Coeffs(c) => c,
        Modulus::Builtin => builtin_modulus(p, degree)?,
    };
    Field::new(p, degree, &coeffs).map(Arc::new)
}

fn builtin_modulus(p: u32, degree: u32) -> Result<Vec<u32>, GfError> {
    match (p, degree) {
        (2, 2) => Ok(vec![1, 1, 1]),
        (3, 2) => Ok(vec![2, 2, 1]),
        (2, 4) => Ok(vec![1, 1, 0, 0, 1]),
        _ => {
            if !prime::is_prime(p as u64) {
                return Err(GfError::NotPrime(p as u64));
            }
            let order = (p as u64).checked_pow(degree).unwrap_or(u64::MAX);
            if order > MAX_FIELD_ORDER {
                return Err(GfError::TooLarge(order));
            }
            // first monic polynomial (lower coefficients in base-p order)
            // that is irreducible with a primitive root
            for idx in 0..order {
                let mut c: Vec<u32> = (0..degree)
                    .map(|i| ((idx / (p as u64).pow(i)) % p as u64) as u32)
                    .collect();
                c.push(1);
                if c[0] == 0 {
                    continue;
                }
                if let Ok(f) = Field::new(p, degree, &c) {
                    if f.primitive == Fe(p) {
                        return Ok(c);
                    }
                }
            }
            Err(GfError::Reducible)
        }
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field, GfError> {
        Field::new(p, 1, &[0, 1])
    }

    /// `F_p[x] / (modulus)` with `deg modulus = degree`.
    pub fn new(p: u32, degree: u32, modulus: &[u32]) -> Result<Field, GfError> {
        if !prime::is_prime(p as u64) {
            return Err(GfError::NotPrime(p as u64));
        }
        let order = (p as u64).checked_pow(degree).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(GfError::TooLarge(order));
        }
        if modulus.len() != degree as usize + 1 {
            return Err(GfError::DegreeMismatch {
                expected: degree,
                got: modulus.len().saturating_sub(1),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(GfError::BadCoefficient(c));
        }
        if modulus[degree as usize] != 1 {
            return Err(GfError::NotMonic);
        }
        if degree > 1 {
            let fp = Field::prime(p)?;
            let poly = Poly::new(modulus.iter().map(|&c| Fe(c)).collect());
            if !is_irreducible(&fp, &poly) {
                return Err(GfError::Reducible);
            }
        }
        let order = order as u32;
        let mut field = Field {
            p,
            degree,
            order,
            modulus: modulus.to_vec(),
            primitive: Fe::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            neg: Vec::new(),
        };
        field.neg = (0..order).map(|x| field.neg_digits(Fe(x))).collect();
        if order <= 256 {
            let mut t = Vec::with_capacity((order * order) as usize);
            for a in 0..order {
                for b in 0..order {
                    t.push(field.add_digits(Fe(a), Fe(b)));
                }
            }
            field.add_table = Some(t);
        }
        let primitive = field.find_primitive();
        field.install_tables(primitive);
        Ok(field)
    }

    fn find_primitive(&self) -> Fe {
        // prefer the class of x so that printed powers are powers of the
        // defining root
        let mut candidates = Vec::with_capacity(self.order as usize);
        if self.degree > 1 {
            candidates.push(Fe(self.p));
        }
        candidates.extend((1..self.order).map(Fe));
        let q1 = (self.order - 1) as u64;
        let primes = prime::prime_factors(q1 as u128);
        for c in candidates {
            if primes
                .iter()
                .all(|&r| self.pow_coeffs(c, q1 / r as u64) != Fe::ONE)
            {
                return c;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    fn install_tables(&mut self, primitive: Fe) {
        let q1 = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(2 * q1);
        let mut log = vec![0u32; self.order as usize];
        let mut cur = Fe::ONE;
        for k in 0..q1 {
            exp.push(cur);
            log[cur.0 as usize] = k as u32;
            cur = self.mul_coeffs(cur, primitive);
        }
        debug_assert_eq!(cur, Fe::ONE);
        for k in 0..q1 {
            exp.push(exp[k]);
        }
        self.exp = exp;
        self.log = log;
        self.primitive = primitive;
    }

    /// Replace the primitive element used for logs and printing. The element
    /// is verified to have order `q - 1`.
    pub fn with_primitive(mut self, eta: Fe) -> Result<Field, GfError> {
        let q1 = (self.order - 1) as u64;
        let ok = !eta.is_zero()
            && eta.0 < self.order
            && prime::prime_factors(q1 as u128)
                .iter()
                .all(|&r| self.pow_coeffs(eta, q1 / r as u64) != Fe::ONE);
        if !ok {
            return Err(GfError::NotPrimitive(format!("{}", eta.0)));
        }
        self.install_tables(eta);
        Ok(self)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `q`, the number of elements.
    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `m` when the field is `F_{p^{2m}}`.
    pub fn half_degree(&self) -> Option<u32> {
        self.degree.is_multiple_of(2).then_some(self.degree / 2)
    }

    /// `p^m`, the exponent of the conjugation `x -> x^{p^m}`.
    pub fn conj_exponent(&self) -> u32 {
        let m = self.half_degree().expect("conjugation needs an even-degree field");
        self.p.pow(m)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `eta` (printed as `w`).
    #[inline]
    pub fn primitive(&self) -> Fe {
        self.primitive
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    /// The prime-subfield element `c mod p`.
    pub fn from_int(&self, c: i64) -> Fe {
        Fe(c.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.add_table {
            Some(t) => t[(a.0 * self.order + b.0) as usize],
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a.0 as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize]
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        if a.is_zero() {
            return Err(GfError::InverseOfZero);
        }
        let q1 = self.order - 1;
        Ok(self.exp[((q1 - self.log[a.0 as usize]) % q1) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let q1 = (self.order - 1) as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % q1)) % q1;
        self.exp[e as usize]
    }

    /// `eta^k` for any integer `k`.
    pub fn exp(&self, k: i64) -> Fe {
        let q1 = (self.order - 1) as i64;
        self.exp[k.rem_euclid(q1) as usize]
    }

    /// Discrete log base `eta`; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// Frobenius conjugation `x -> x^{p^m}`.
    #[inline]
    pub fn conj(&self, a: Fe) -> Fe {
        self.pow(a, self.conj_exponent() as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fe) -> Option<u64> {
        let l = self.log(a)? as u64;
        let q1 = (self.order - 1) as u64;
        Some(q1 / prime::gcd(l, q1))
    }

    fn digits(&self, a: Fe) -> Vec<u32> {
        let mut v = a.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, d: &[u32]) -> Fe {
        Fe(d.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Fe(out)
    }

    fn neg_digits(&self, a: Fe) -> Fe {
        let d: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.pack_digits(&d)
    }

    /// Schoolbook product of coefficient vectors reduced by the modulus.
    /// Independent of the log tables.
    pub fn mul_coeffs(&self, a: Fe, b: Fe) -> Fe {
        let k = self.degree as usize;
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let sub = c * self.modulus[j] as u64 % p;
                prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
            }
        }
        let d: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack_digits(&d)
    }

    fn pow_coeffs(&self, a: Fe, mut k: u64) -> Fe {
        let (mut base, mut acc) = (a, Fe::ONE);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_coeffs(acc, base);
            }
            base = self.mul_coeffs(base, base);
            k >>= 1;
        }
        acc
    }

    /// Parse `0`, `1`, a prime-subfield integer, `w`, or `w^k` (`w = eta`).
    /// A leading `-` negates.
    pub fn parse(&self, s: &str) -> Result<Fe, GfError> {
        let t = s.trim();
        let err = || GfError::Parse(s.to_string());
        if let Some(rest) = t.strip_prefix('-') {
            return Ok(self.neg(self.parse(rest)?));
        }
        if t == "w" {
            return Ok(self.primitive);
        }
        if let Some(k) = t.strip_prefix("w^") {
            let k: i64 = k.trim().parse().map_err(|_| err())?;
            return Ok(self.exp(k));
        }
        let c: u64 = t.parse().map_err(|_| err())?;
        if c >= self.p as u64 {
            return Err(err());
        }
        Ok(Fe(c as u32))
    }

    /// Prime-subfield elements print as integers, all others as `w^k`.
    pub fn format(&self, a: Fe) -> String {
        if a.0 < self.p {
            a.0.to_string()
        } else {
            format!("w^{}", self.log[a.0 as usize])
        }
    }
}

/// A field element bound to its field, with checked mixed-field arithmetic.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    value: Fe,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl FieldElement {
    pub fn new(field: &Arc<Field>, value: Fe) -> Self {
        FieldElement {
            field: Arc::clone(field),
            value,
        }
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    fn check(&self, other: &FieldElement) -> Result<(), GfError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(GfError::MixedFields)
        }
    }

    fn with(&self, value: Fe) -> FieldElement {
        FieldElement::new(&self.field, value)
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, k: u64) -> FieldElement {
        self.with(self.field.pow(self.value, k))
    }

    pub fn conj(&self) -> FieldElement {
        self.with(self.field.conj(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f4() -> Arc<Field> {
        field_create(2, 1, Modulus::Builtin).unwrap()
    }
    fn f9() -> Arc<Field> {
        field_create(3, 1, Modulus::Builtin).unwrap()
    }
    fn f16() -> Arc<Field> {
        field_create(2, 2, Modulus::Builtin).unwrap()
    }

    #[test]
    fn builtin_relations() {
        let f = f4();
        let w = f.primitive();
        assert_eq!(f.mul(w, w), f.add(Fe::ONE, w));
        let f = f9();
        let w = f.primitive();
        assert_eq!(f.mul(w, w), f.add(w, Fe::ONE));
        let f = f16();
        let w = f.primitive();
        assert_eq!(f.pow(w, 4), f.add(w, Fe::ONE));
        // builtin roots are primitive, so `w` is the defining root
        for f in [f4(), f9(), f16()] {
            assert_eq!(f.primitive(), Fe(f.p()));
        }
    }

    #[test]
    fn small_products() {
        let f = f9();
        let w = f.primitive();
        assert_eq!(f.pow(w, 4), f.from_int(2));
        // full power table oracle
        let mut cur = Fe::ONE;
        for _ in 0..4 {
            cur = f.mul_coeffs(cur, w);
        }
        assert_eq!(cur, Fe(2));
        let f = f16();
        assert_eq!(f.mul(f.exp(5), f.exp(10)), Fe::ONE);
    }

    #[test]
    fn conjugation_examples() {
        let f = f9();
        assert_eq!(f.conj(f.exp(1)), f.exp(3));
        let f = f4();
        assert_eq!(f.conj(f.exp(1)), f.add(Fe::ONE, f.exp(1)));
        for f in [f4(), f9(), f16()] {
            assert_eq!(f.conj(Fe::ZERO), Fe::ZERO);
            assert_eq!(f.conj(Fe::ONE), Fe::ONE);
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(field_create(4, 1, Modulus::Builtin).unwrap_err(), GfError::NotPrime(4));
        assert!(matches!(
            field_create(2, 1, Modulus::Coeffs(vec![1, 1, 0, 1])).unwrap_err(),
            GfError::DegreeMismatch { .. }
        ));
        // x^2 + 1 = (x + 1)^2 over F_2
        assert_eq!(
            field_create(2, 1, Modulus::Coeffs(vec![1, 0, 1])).unwrap_err(),
            GfError::Reducible
        );
        assert_eq!(
            field_create(3, 1, Modulus::Coeffs(vec![1, 0, 2])).unwrap_err(),
            GfError::NotMonic
        );
        assert!(matches!(field_create(2, 9, Modulus::Builtin), Err(GfError::TooLarge(_))));
        assert_eq!(f9().inv(Fe::ZERO), Err(GfError::InverseOfZero));
    }

    #[test]
    fn non_primitive_root_modulus() {
        // x^2 + 1 is irreducible over F_3 but its root has order 4
        let f = field_create(3, 1, Modulus::Coeffs(vec![1, 0, 1])).unwrap();
        assert_ne!(f.primitive(), Fe(3));
        assert_eq!(f.mult_order(f.primitive()), Some(8));
        assert!(Field::new(3, 2, &[1, 0, 1]).unwrap().with_primitive(Fe(3)).is_err());
    }

    #[test]
    fn builtin_search_for_other_fields() {
        let f = field_create(5, 1, Modulus::Builtin).unwrap();
        assert_eq!(f.order(), 25);
        assert_eq!(f.primitive(), Fe(5));
        let f = field_create(2, 3, Modulus::Builtin).unwrap();
        assert_eq!(f.order(), 64);
    }

    #[test]
    fn parse_and_format_round_trip() {
        for f in [f4(), f9(), f16()] {
            for x in f.elements() {
                let s = f.format(x);
                assert_eq!(f.parse(&s).unwrap(), x, "{s}");
            }
        }
        let f = f9();
        assert_eq!(f.format(f.exp(4)), "2");
        assert_eq!(f.format(f.exp(5)), "w^5");
        assert_eq!(f.parse("w").unwrap(), f.exp(1));
        assert_eq!(f.parse("w^12").unwrap(), f.exp(4));
        assert_eq!(f.parse("-1").unwrap(), f.from_int(2));
        assert!(f.parse("3").is_err());
        assert!(f.parse("v^2").is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let (a, b) = (f4(), f9());
        let x = FieldElement::new(&a, Fe::ONE);
        let y = FieldElement::new(&b, Fe::ONE);
        assert_eq!(x.mul(&y).unwrap_err(), GfError::MixedFields);
        let z = FieldElement::new(&f4(), a.primitive());
        assert_eq!(x.mul(&z).unwrap().value(), a.primitive());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.inv().unwrap().mul(&z).unwrap().value(), Fe::ONE);
    }

    #[test]
    fn table_and_coefficient_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in [f4(), f9(), f16(), field_create(5, 1, Modulus::Builtin).unwrap()] {
            for _ in 0..1000 {
                let x = Fe(rng.gen_range(0..f.order()));
                let y = Fe(rng.gen_range(0..f.order()));
                let z = Fe(rng.gen_range(0..f.order()));
                let lhs = f.mul(f.add(x, y), z);
                let rhs = f.mul_coeffs(f.add_digits(x, y), z);
                assert_eq!(lhs, rhs);
                assert_eq!(f.mul(x, y), f.mul_coeffs(x, y));
            }
        }
    }

    #[test]
    fn field_axioms_and_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [f4(), f9(), f16()] {
            let q1 = (f.order() - 1) as u64;
            for x in f.elements().skip(1) {
                assert_eq!(f.pow(x, q1), Fe::ONE);
                assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
            }
            for _ in 0..500 {
                let x = Fe(rng.gen_range(0..f.order()));
                let y = Fe(rng.gen_range(0..f.order()));
                assert_eq!(f.conj(f.mul(x, y)), f.mul(f.conj(x), f.conj(y)));
                assert_eq!(f.conj(f.add(x, y)), f.add(f.conj(x), f.conj(y)));
                assert_eq!(f.conj(f.conj(x)), x);
                assert_eq!(f.sub(f.add(x, y), y), x);
            }
        }
    }
}
