//! Factorization of `x^n - beta` over `F_q` through `q`-cyclotomic cosets
//! modulo `rn`, the symmetric/asymmetric classification of cosets, and the
//! conjugate-reciprocal (dagger) operator on factors.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::gf::prime::{gcd, mult_order_mod, prime_factors};
use crate::gf::{ExtElem, ExtField, Fe, Field, GfError, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("alpha must be nonzero with alpha * conj(alpha) = 1")]
    AlphaNotUnitary,
    #[error("n = {n} must be positive and coprime to p = {p}")]
    BadLength { n: u64, p: u32 },
    #[error("polynomial has zero constant term")]
    ZeroConstant,
    #[error("internal: {0}")]
    Internal(String),
    #[error(transparent)]
    Field(#[from] GfError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CosetKind {
    #[serde(rename = "sym")]
    Symmetric,
    #[serde(rename = "asym")]
    Asymmetric,
}

#[derive(Clone, Debug)]
pub struct Coset {
    /// Least member.
    pub rep: u64,
    /// Orbit order `i, iq, iq^2, ...` mod `rn`.
    pub members: Vec<u64>,
    pub kind: CosetKind,
    /// Index of the coset containing `-p^m * rep`.
    pub partner: usize,
    /// Minimal polynomial `M_i(x) = prod_{j in C_i} (x - delta^j)` over `F_q`.
    pub poly: Poly,
}

impl Coset {
    pub fn degree(&self) -> usize {
        self.members.len()
    }
}

/// `beta = alpha^f` with `p^e f = 1 (mod r)`, `1 <= f <= p^m`; returns
/// `(beta, r)` where `r` is the order of `alpha`.
pub fn beta_from_alpha(field: &Field, alpha: Fe, e: u32) -> Result<(Fe, u64), CycloError> {
    if alpha.is_zero() || field.mul(alpha, field.conj(alpha)) != Fe::ONE {
        return Err(CycloError::AlphaNotUnitary);
    }
    let r = field.mult_order(alpha).expect("nonzero");
    let p = field.p() as u64;
    let pe_mod_r = (0..e).fold(1 % r, |acc, _| acc * p % r);
    let pm = field.conj_exponent() as u64;
    let f = (1..=pm.max(1))
        .find(|&f| pe_mod_r * f % r == 1 % r)
        .ok_or_else(|| CycloError::Internal(format!("no inverse of p^e mod {r}")))?;
    Ok((field.pow(alpha, f), r))
}

/// Cosets, minimal polynomials, and the chosen root `delta` for
/// `x^n - beta` over `F_q`, `q = p^{2m}`.
#[derive(Clone, Debug)]
pub struct CosetStructure {
    field: Arc<Field>,
    e: u32,
    n: u64,
    alpha: Fe,
    r: u64,
    beta: Fe,
    ext: ExtField,
    delta: ExtElem,
    cosets: Vec<Coset>,
}

impl CosetStructure {
    pub fn build(field: &Arc<Field>, alpha: Fe, n: u64, e: u32) -> Result<CosetStructure, CycloError> {
        let p = field.p();
        if n == 0 || n.is_multiple_of(p as u64) {
            return Err(CycloError::BadLength { n, p });
        }
        let (beta, r) = beta_from_alpha(field, alpha, e)?;
        let rn = r * n;
        let q = field.order() as u64;
        let pm = field.conj_exponent() as u64;

        let mut owner = vec![usize::MAX; rn as usize];
        let mut orbits: Vec<Vec<u64>> = Vec::new();
        for j in (0..rn).filter(|j| j % r == 1 % r) {
            if owner[j as usize] != usize::MAX {
                continue;
            }
            let mut orbit = vec![j];
            let mut cur = j * q % rn;
            while cur != j {
                orbit.push(cur);
                cur = cur * q % rn;
            }
            for &x in &orbit {
                owner[x as usize] = orbits.len();
            }
            orbits.push(orbit);
        }

        let ell = mult_order_mod(q, rn) as u32;
        let ext = ExtField::new(field, ell)?;
        let delta = Self::choose_delta(&ext, rn, n, beta)?;

        let mut cosets = Vec::with_capacity(orbits.len());
        for (idx, orbit) in orbits.iter().enumerate() {
            let target = (rn - pm * orbit[0] % rn) % rn;
            let partner = owner[target as usize];
            if partner == usize::MAX {
                return Err(CycloError::Internal(format!("-p^m * {} left the index set", orbit[0])));
            }
            let kind = if partner == idx {
                CosetKind::Symmetric
            } else {
                CosetKind::Asymmetric
            };
            let poly = Self::minimal_poly(&ext, &delta, orbit)?;
            cosets.push(Coset {
                rep: orbit[0],
                members: orbit.clone(),
                kind,
                partner,
                poly,
            });
        }

        let cs = CosetStructure {
            field: Arc::clone(field),
            e,
            n,
            alpha,
            r,
            beta,
            ext,
            delta,
            cosets,
        };
        let prod = cs
            .cosets
            .iter()
            .fold(Poly::one(), |acc, c| acc.mul(field, &c.poly));
        if prod != Poly::binomial(field, n as usize, beta) {
            return Err(CycloError::Internal("product of minimal polynomials is not x^n - beta".into()));
        }
        Ok(cs)
    }

    /// Smallest (in extension element order) primitive `rn`-th root of unity
    /// with `delta^n = beta`.
    fn choose_delta(ext: &ExtField, rn: u64, n: u64, beta: Fe) -> Result<ExtElem, CycloError> {
        let one = ext.one();
        let cof = (ext.order() - 1) / rn as u128;
        let primes = prime_factors(rn as u128);
        let has_order_rn = |z: &ExtElem| primes.iter().all(|&pr| ext.pow(z, rn as u128 / pr) != one);
        let zeta = (1..ext.order())
            .map(|i| ext.pow(&ext.from_index(i), cof))
            .find(|z| has_order_rn(z))
            .ok_or_else(|| CycloError::Internal("no element of order rn".into()))?;
        let target = ext.embed(beta);
        let mut best: Option<ExtElem> = None;
        let mut cur = one.clone();
        for k in 1..=rn {
            cur = ext.mul(&cur, &zeta);
            if gcd(k, rn) != 1 || ext.pow(&cur, n as u128) != target {
                continue;
            }
            if best.as_ref().is_none_or(|b| ext.cmp_elems(&cur, b).is_lt()) {
                best = Some(cur.clone());
            }
        }
        best.ok_or_else(|| CycloError::Internal("no admissible delta".into()))
    }

    fn minimal_poly(ext: &ExtField, delta: &ExtElem, members: &[u64]) -> Result<Poly, CycloError> {
        // coefficients over the extension, ascending
        let mut acc: Vec<ExtElem> = vec![ext.one()];
        for &j in members {
            let root = ext.pow(delta, j as u128);
            let mut next = vec![ext.zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] = ext.add(&next[i + 1], c);
                next[i] = ext.sub(&next[i], &ext.mul(c, &root));
            }
            acc = next;
        }
        let coeffs: Option<Vec<Fe>> = acc.iter().map(|c| ext.descend(c)).collect();
        coeffs
            .map(Poly::new)
            .ok_or_else(|| CycloError::Internal("minimal polynomial does not descend".into()))
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn m(&self) -> u32 {
        self.field.half_degree().unwrap_or(0)
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `p^e`.
    pub fn pe(&self) -> u32 {
        self.p().pow(self.e)
    }

    /// Code length `N = p^e n`.
    pub fn length(&self) -> usize {
        self.pe() as usize * self.n as usize
    }

    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    pub fn beta(&self) -> Fe {
        self.beta
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn delta(&self) -> &ExtElem {
        &self.delta
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn index_of_rep(&self, rep: u64) -> Option<usize> {
        self.cosets.iter().position(|c| c.rep == rep)
    }

    /// Index of the coset whose minimal polynomial equals `poly` (compared
    /// after making `poly` monic).
    pub fn index_of_poly(&self, poly: &Poly) -> Option<usize> {
        let m = poly.monic(&self.field);
        self.cosets.iter().position(|c| c.poly == m)
    }

    /// Multiplicities of each minimal polynomial in `poly`; `None` when `poly`
    /// is not a product of them.
    pub fn factor_exponents(&self, poly: &Poly) -> Option<Vec<u32>> {
        let f = &*self.field;
        let mut rest = poly.monic(f);
        let mut out = vec![0u32; self.cosets.len()];
        for (i, c) in self.cosets.iter().enumerate() {
            loop {
                let (q, r) = rest.divrem(f, &c.poly).ok()?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                out[i] += 1;
            }
        }
        (rest == Poly::one()).then_some(out)
    }

    pub fn dump(&self) -> CosetDump {
        let f = &*self.field;
        CosetDump {
            p: self.p(),
            m: self.m(),
            e: self.e,
            n: self.n,
            alpha: f.format(self.alpha),
            r: self.r,
            beta: f.format(self.beta),
            cosets: self
                .cosets
                .iter()
                .map(|c| CosetEntry {
                    rep: c.rep,
                    members: c.members.clone(),
                    degree: c.degree(),
                    kind: c.kind,
                    partner: self.cosets[c.partner].rep,
                })
                .collect(),
            polys: self.cosets.iter().map(|c| c.poly.format_coeffs(f)).collect(),
        }
    }
}

/// JSON form of a [`CosetStructure`].
#[derive(Clone, Debug, Serialize)]
pub struct CosetDump {
    pub p: u32,
    pub m: u32,
    pub e: u32,
    pub n: u64,
    pub alpha: String,
    pub r: u64,
    pub beta: String,
    pub cosets: Vec<CosetEntry>,
    pub polys: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetEntry {
    pub rep: u64,
    pub members: Vec<u64>,
    pub degree: usize,
    pub kind: CosetKind,
    pub partner: u64,
}

/// `f^dagger`: the monic associate of the coefficient-conjugated reciprocal.
pub fn dagger(field: &Field, f: &Poly) -> Result<Poly, CycloError> {
    if f.coeff(0).is_zero() {
        return Err(CycloError::ZeroConstant);
    }
    Ok(f.reciprocal().conj(field).monic(field))
}
