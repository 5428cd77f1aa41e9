use std::cmp::Ordering;
use std::sync::Arc;

use super::{is_irreducible, Fe, Field, GfError, Poly};

/// An element of `F_q[y] / (h(y))`, dense coefficients of length `degree`.
pub type ExtElem = Vec<Fe>;

/// The extension `F_{q^l}` of a base field, built as `F_q[y]/(h)` with `h`
/// the first monic irreducible of degree `l` in coefficient order.
#[derive(Debug, Clone)]
pub struct ExtField {
    base: Arc<Field>,
    degree: usize,
    modulus: Poly,
    order: u128,
}

impl ExtField {
    pub fn new(base: &Arc<Field>, degree: u32) -> Result<ExtField, GfError> {
        let q = base.order() as u128;
        let degree = degree.max(1) as usize;
        let order = q
            .checked_pow(degree as u32)
            .filter(|&o| o < 1u128 << 126)
            .ok_or(GfError::ExtensionTooLarge {
                q: q as u64,
                degree: degree as u32,
            })?;
        let modulus = Self::find_modulus(base, degree);
        Ok(ExtField {
            base: Arc::clone(base),
            degree,
            modulus,
            order,
        })
    }

    fn find_modulus(base: &Field, degree: usize) -> Poly {
        let q = base.order() as u128;
        let mut idx: u128 = 0;
        loop {
            let mut c: Vec<Fe> = Vec::with_capacity(degree + 1);
            let mut v = idx;
            for _ in 0..degree {
                c.push(Fe((v % q) as u32));
                v /= q;
            }
            c.push(Fe::ONE);
            idx += 1;
            if degree > 1 && c[0].is_zero() {
                continue;
            }
            let poly = Poly::new(c);
            if is_irreducible(base, &poly) {
                return poly;
            }
        }
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `q^l`.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn zero(&self) -> ExtElem {
        vec![Fe::ZERO; self.degree]
    }

    pub fn one(&self) -> ExtElem {
        self.embed(Fe::ONE)
    }

    pub fn is_zero(&self, a: &ExtElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    /// The element with index `idx` in base-`q` digit order.
    pub fn from_index(&self, mut idx: u128) -> ExtElem {
        let q = self.base.order() as u128;
        (0..self.degree)
            .map(|_| {
                let d = Fe((idx % q) as u32);
                idx /= q;
                d
            })
            .collect()
    }

    /// Element ordering: compare as base-`q` integers, most significant
    /// coefficient first.
    pub fn cmp_elems(&self, a: &ExtElem, b: &ExtElem) -> Ordering {
        a.iter().rev().cmp(b.iter().rev())
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        a.iter().map(|&x| self.base.neg(x)).collect()
    }

    pub fn scale(&self, a: &ExtElem, c: Fe) -> ExtElem {
        a.iter().map(|&x| self.base.mul(x, c)).collect()
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &*self.base;
        let l = self.degree;
        let mut prod = vec![Fe::ZERO; 2 * l - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        let h = self.modulus.coeffs();
        for i in (l..2 * l - 1).rev() {
            let c = prod[i];
            if c.is_zero() {
                continue;
            }
            for j in 0..l {
                prod[i - l + j] = f.sub(prod[i - l + j], f.mul(c, h[j]));
            }
        }
        prod.truncate(l);
        prod
    }

    pub fn pow(&self, a: &ExtElem, mut k: u128) -> ExtElem {
        let (mut base, mut acc) = (a.clone(), self.one());
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Canonical embedding `F_q -> F_{q^l}`.
    pub fn embed(&self, x: Fe) -> ExtElem {
        let mut v = self.zero();
        v[0] = x;
        v
    }

    /// Whether `y` lies in the embedded copy of `F_q`, i.e. `y^q = y`.
    pub fn in_base(&self, y: &ExtElem) -> bool {
        self.pow(y, self.base.order() as u128) == *y
    }

    /// The preimage of `y` under [`embed`](Self::embed), if any.
    pub fn descend(&self, y: &ExtElem) -> Option<Fe> {
        if !self.in_base(y) {
            return None;
        }
        debug_assert!(y[1..].iter().all(|c| c.is_zero()));
        Some(y[0])
    }
}
