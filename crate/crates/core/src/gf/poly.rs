use super::{prime, Fe, Field, GfError};

/// A polynomial over a [`Field`], ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x() -> Poly {
        Poly::monomial(1, Fe::ONE)
    }

    pub fn monomial(k: usize, c: Fe) -> Poly {
        let mut v = vec![Fe::ZERO; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `x^n - c`.
    pub fn binomial(f: &Field, n: usize, c: Fe) -> Poly {
        let mut v = vec![Fe::ZERO; n + 1];
        v[n] = Fe::ONE;
        v[0] = f.add(v[0], f.neg(c));
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fe::ONE
    }

    pub fn add(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn scale(&self, f: &Field, c: Fe) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, f: &Field, mut k: u64) -> Poly {
        let (mut base, mut acc) = (self.clone(), Poly::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> Result<(Poly, Poly), GfError> {
        let dd = d.degree().ok_or(GfError::InverseOfZero)?;
        let inv = f.inv(d.lead())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Fe::ZERO; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c.is_zero() {
                continue;
            }
            q[i - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = f.sub(r[k], f.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, f: &Field, d: &Poly) -> Result<Poly, GfError> {
        Ok(self.divrem(f, d)?.1)
    }

    /// Whether `d` divides `self`.
    pub fn divisible_by(&self, f: &Field, d: &Poly) -> bool {
        self.rem(f, d).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.lead()).expect("nonzero lead"))
    }

    /// Monic gcd.
    pub fn gcd(&self, f: &Field, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^k mod m` for a `u128` exponent.
    pub fn pow_mod(&self, f: &Field, mut k: u128, m: &Poly) -> Result<Poly, GfError> {
        let mut base = self.rem(f, m)?;
        let mut acc = Poly::one().rem(f, m)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(f, &base).rem(f, m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, f: &Field, x: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficient-wise Frobenius conjugation.
    pub fn conj(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.conj(c)).collect())
    }

    /// `x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Poly {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// Comma-separated ascending coefficients in element syntax.
    pub fn format_coeffs(&self, f: &Field) -> Vec<String> {
        self.coeffs.iter().map(|&c| f.format(c)).collect()
    }

    pub fn parse_coeffs(f: &Field, s: &str) -> Result<Poly, GfError> {
        let v: Result<Vec<Fe>, GfError> = s.split(',').map(|t| f.parse(t)).collect();
        Ok(Poly::new(v?))
    }

    /// Human-readable form, highest degree first: `x^2 + w^5*x + 1`.
    pub fn display(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c == Fe::ONE, mono.is_empty()) {
                (_, true) => f.format(c),
                (true, false) => mono,
                (false, false) => format!("{}*{}", f.format(c), mono),
            });
        }
        terms.join(" + ")
    }
}

/// Rabin's irreducibility test over `f`.
pub fn is_irreducible(f: &Field, poly: &Poly) -> bool {
    let Some(n) = poly.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let poly = poly.monic(f);
    let q = f.order() as u128;
    let x = Poly::x();
    // frob[i] = x^{q^i} mod poly
    let mut frob = vec![x.rem(f, &poly).unwrap()];
    for _ in 0..n {
        let next = frob.last().unwrap().pow_mod(f, q, &poly).unwrap();
        frob.push(next);
    }
    if frob[n] != frob[0] {
        return false;
    }
    prime::prime_factors(n as u128).into_iter().all(|r| {
        let h = frob[n / r as usize].sub(f, &x);
        h.gcd(f, &poly) == Poly::one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{field_create, Modulus};

    #[test]
    fn division_identity() {
        let f = field_create(3, 1, Modulus::Builtin).unwrap();
        let a = Poly::new(vec![f.exp(1), Fe(2), Fe::ZERO, f.exp(5), Fe::ONE]);
        let b = Poly::new(vec![f.exp(3), Fe::ONE, f.exp(7)]);
        let (q, r) = a.divrem(&f, &b).unwrap();
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert!(a.divrem(&f, &Poly::zero()).is_err());
    }

    #[test]
    fn irreducibility() {
        let f2 = Field::prime(2).unwrap();
        let p = |v: &[u32]| Poly::new(v.iter().map(|&c| Fe(c)).collect());
        assert!(is_irreducible(&f2, &p(&[1, 1, 1])));
        assert!(!is_irreducible(&f2, &p(&[1, 0, 1])));
        assert!(is_irreducible(&f2, &p(&[1, 1, 0, 0, 1])));
        // (x^2+x+1)^2 has no roots but is reducible
        assert!(!is_irreducible(&f2, &p(&[1, 0, 1, 0, 1])));
        let f9 = field_create(3, 1, Modulus::Builtin).unwrap();
        // x^2 + w^5 x + 1 is a factor of x^5 - 2 over F_9
        let q = Poly::new(vec![Fe::ONE, f9.exp(5), Fe::ONE]);
        assert!(is_irreducible(&f9, &q));
        assert!(Poly::binomial(&f9, 5, Fe(2)).divisible_by(&f9, &q));
    }

    #[test]
    fn display_forms() {
        let f = field_create(3, 1, Modulus::Builtin).unwrap();
        let q = Poly::new(vec![Fe::ONE, f.exp(5), Fe::ONE]);
        assert_eq!(q.display(&f), "x^2 + w^5*x + 1");
        assert_eq!(q.format_coeffs(&f).join(","), "1,w^5,1");
        assert_eq!(Poly::parse_coeffs(&f, "1,w^5,1").unwrap(), q);
    }
}
