//! The chain ring `R = F_q + uF_q` with `u^2 = 0`, and polynomials over it.

use std::sync::Arc;

use thiserror::Error;

use crate::gf::{Fe, Field, GfError, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not a unit of R")]
    NotInvertible(String),
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLead,
    #[error("cannot parse ring element `{0}`")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// `a + u b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    pub a: Fe,
    pub b: Fe,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: Fe::ZERO, b: Fe::ZERO };
    pub const ONE: RingElement = RingElement { a: Fe::ONE, b: Fe::ZERO };
    pub const U: RingElement = RingElement { a: Fe::ZERO, b: Fe::ONE };

    pub fn new(a: Fe, b: Fe) -> Self {
        RingElement { a, b }
    }

    pub fn scalar(a: Fe) -> Self {
        RingElement { a, b: Fe::ZERO }
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_unit(self) -> bool {
        !self.a.is_zero()
    }
}

/// Arithmetic context for `R` over a shared base field.
#[derive(Clone, Debug)]
pub struct Ring {
    field: Arc<Field>,
}

impl Ring {
    pub fn new(field: &Arc<Field>) -> Ring {
        Ring {
            field: Arc::clone(field),
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.add(x.a, y.a), f.add(x.b, y.b))
    }

    pub fn sub(&self, x: RingElement, y: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.sub(x.a, y.a), f.sub(x.b, y.b))
    }

    pub fn neg(&self, x: RingElement) -> RingElement {
        RingElement::new(self.field.neg(x.a), self.field.neg(x.b))
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(
            f.mul(x.a, y.a),
            f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)),
        )
    }

    /// Multiply by a field scalar.
    pub fn scale(&self, x: RingElement, c: Fe) -> RingElement {
        RingElement::new(self.field.mul(x.a, c), self.field.mul(x.b, c))
    }

    /// `a + ub -> conj(a) - u conj(b)`.
    pub fn conj(&self, x: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.conj(x.a), f.neg(f.conj(x.b)))
    }

    /// `(a + ub)^{-1} = a^{-1} - u b a^{-2}`.
    pub fn inv(&self, x: RingElement) -> Result<RingElement, RingError> {
        let f = &self.field;
        if !x.is_unit() {
            return Err(RingError::NotInvertible(self.format(x)));
        }
        let ai = f.inv(x.a)?;
        Ok(RingElement::new(ai, f.neg(f.mul(x.b, f.mul(ai, ai)))))
    }

    pub fn pow(&self, x: RingElement, mut k: u64) -> RingElement {
        let (mut base, mut acc) = (x, RingElement::ONE);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Text form `A + u*B`; the `u` term is dropped when `B = 0` and the
    /// constant term when `A = 0`.
    pub fn format(&self, x: RingElement) -> String {
        let f = &self.field;
        match (x.a.is_zero(), x.b.is_zero()) {
            (_, true) => f.format(x.a),
            (true, false) => format!("u*{}", f.format(x.b)),
            (false, false) => format!("{} + u*{}", f.format(x.a), f.format(x.b)),
        }
    }

    pub fn parse(&self, s: &str) -> Result<RingElement, RingError> {
        let err = || RingError::Parse(s.to_string());
        let mut out = RingElement::ZERO;
        for term in s.split('+') {
            let t = term.trim();
            if t.is_empty() {
                return Err(err());
            }
            if let Some(rest) = t.strip_prefix("u*") {
                let b = self.field.parse(rest).map_err(|_| err())?;
                out.b = self.field.add(out.b, b);
            } else if t == "u" {
                out.b = self.field.add(out.b, Fe::ONE);
            } else {
                let a = self.field.parse(t).map_err(|_| err())?;
                out.a = self.field.add(out.a, a);
            }
        }
        Ok(out)
    }

    pub fn poly_add(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        let n = f.coeffs.len().max(g.coeffs.len());
        RingPoly::new((0..n).map(|i| self.add(f.coeff(i), g.coeff(i))).collect())
    }

    pub fn poly_sub(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        let n = f.coeffs.len().max(g.coeffs.len());
        RingPoly::new((0..n).map(|i| self.sub(f.coeff(i), g.coeff(i))).collect())
    }

    pub fn poly_mul(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        if f.is_zero() || g.is_zero() {
            return RingPoly::zero();
        }
        let mut out = vec![RingElement::ZERO; f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &x) in f.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in g.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        RingPoly::new(out)
    }

    /// Remainder of `f` modulo `g`; `g` must have a unit leading coefficient.
    pub fn poly_rem(&self, f: &RingPoly, g: &RingPoly) -> Result<RingPoly, RingError> {
        let dg = g.degree().ok_or(RingError::NonUnitLead)?;
        let lead = g.lead();
        if !lead.is_unit() {
            return Err(RingError::NonUnitLead);
        }
        let inv = self.inv(lead)?;
        let mut r = f.coeffs.clone();
        for i in (dg..r.len()).rev() {
            let c = self.mul(r[i], inv);
            if c.is_zero() {
                continue;
            }
            for (j, &y) in g.coeffs.iter().enumerate() {
                let k = i - dg + j;
                r[k] = self.sub(r[k], self.mul(c, y));
            }
        }
        r.truncate(dg.min(r.len()));
        Ok(RingPoly::new(r))
    }

    pub fn poly_conj(&self, f: &RingPoly) -> RingPoly {
        RingPoly::new(f.coeffs.iter().map(|&c| self.conj(c)).collect())
    }

    /// Reduce modulo `x^len - lambda` by folding high coefficients; the result
    /// is a dense vector of length `len`.
    pub fn fold_constacyclic(
        &self,
        coeffs: &[RingElement],
        len: usize,
        lambda: RingElement,
    ) -> Vec<RingElement> {
        let mut out = vec![RingElement::ZERO; len];
        let mut mult = RingElement::ONE;
        for chunk in coeffs.chunks(len) {
            for (i, &c) in chunk.iter().enumerate() {
                out[i] = self.add(out[i], self.mul(c, mult));
            }
            mult = self.mul(mult, lambda);
        }
        out
    }

    /// The constacyclic shift `(c_0, .., c_{N-1}) -> (lambda c_{N-1}, c_0, .., c_{N-2})`.
    pub fn shift(&self, c: &[RingElement], lambda: RingElement) -> Vec<RingElement> {
        let n = c.len();
        let mut out = Vec::with_capacity(n);
        if n == 0 {
            return out;
        }
        out.push(self.mul(lambda, c[n - 1]));
        out.extend_from_slice(&c[..n - 1]);
        out
    }

    /// Hermitian inner product `sum x_i conj(y_i)`.
    pub fn hermitian(&self, x: &[RingElement], y: &[RingElement]) -> RingElement {
        x.iter()
            .zip(y)
            .fold(RingElement::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, self.conj(b))))
    }
}

/// A polynomial over `R`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingPoly {
    coeffs: Vec<RingElement>,
}

impl RingPoly {
    pub fn new(mut coeffs: Vec<RingElement>) -> RingPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RingPoly { coeffs }
    }

    pub fn zero() -> RingPoly {
        RingPoly { coeffs: Vec::new() }
    }

    /// Lift a field polynomial (`u`-parts zero).
    pub fn from_field(p: &Poly) -> RingPoly {
        RingPoly::new(p.coeffs().iter().map(|&c| RingElement::scalar(c)).collect())
    }

    pub fn monomial(k: usize, c: RingElement) -> RingPoly {
        let mut v = vec![RingElement::ZERO; k + 1];
        v[k] = c;
        RingPoly::new(v)
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).copied().unwrap_or(RingElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> RingElement {
        self.coeffs.last().copied().unwrap_or(RingElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == RingElement::ONE
    }

    pub fn has_unit_lead(&self) -> bool {
        self.lead().is_unit()
    }
}
