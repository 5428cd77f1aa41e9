//! Quantum code parameters from self-orthogonal classical codes.

use serde::Serialize;
use thiserror::Error;

use crate::codes::{CodeDescriptor, ConstacyclicCode, LinearCodeF};
use crate::distance::{min_distance, min_distance_r, DistanceError, DistanceOptions, DistanceResult};
use crate::maps::trace_orthogonality_transfer;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuantumError {
    #[error("code is not Hermitian self-orthogonal (basis rows {i} and {j} are not orthogonal)")]
    NotSelfOrthogonal { i: usize, j: usize },
    #[error("code is not Hermitian self-orthogonal: exponents at cosets {rep} and {partner} sum below the bound")]
    ExponentTest { rep: u64, partner: u64 },
    #[error("code field F_{order} is not a quadratic extension")]
    NotQuadratic { order: u32 },
    #[error("Singleton bound violated for [[{n},{k},{d}]]")]
    SingletonViolated { n: usize, k: usize, d: usize },
    #[error("standard form gives 2k0 + k1 = {standard}, exponents give {exponents}")]
    SizeMismatch { standard: usize, exponents: usize },
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Hermitian,
    Symplectic,
}

/// Description of a field-linear source code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearDescriptor {
    pub field_order: u32,
    pub n: usize,
    pub dim: usize,
    /// Shift constant and generator coefficients (low to high) when the code
    /// is constacyclic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_poly: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Source {
    Ring(CodeDescriptor),
    Linear(LinearDescriptor),
}

impl LinearDescriptor {
    pub fn of(code: &LinearCodeF) -> LinearDescriptor {
        let f = &**code.field();
        LinearDescriptor {
            field_order: f.order(),
            n: code.len(),
            dim: code.dim(),
            lambda: code.lambda().map(|l| f.format(l)),
            generator_poly: code.generator_poly().map(|g| g.format_coeffs(f)),
        }
    }
}

/// `[[n, k, d]]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub construction: Construction,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_exact: bool,
    pub q: u32,
    pub mds: bool,
    pub two_d_eq_n_minus_k: bool,
    pub source: Source,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Singleton {
    pub slack: usize,
    pub mds: bool,
    pub two_d_eq_n_minus_k: bool,
}

/// `slack = (n - 2d + 2) - k`; a negative slack is an error.
pub fn singleton_check(n: usize, k: usize, d: usize) -> Result<Singleton, QuantumError> {
    let bound = (n + 2) as i64 - 2 * d as i64;
    let slack = bound - k as i64;
    if slack < 0 {
        return Err(QuantumError::SingletonViolated { n, k, d });
    }
    Ok(Singleton {
        slack: slack as usize,
        mds: slack == 0,
        two_d_eq_n_minus_k: 2 * d + k == n,
    })
}

fn assemble(
    construction: Construction,
    n: usize,
    k: usize,
    dist: &DistanceResult,
    q: u32,
    source: Source,
) -> Result<QuantumParams, QuantumError> {
    let s = singleton_check(n, k, dist.d)?;
    Ok(QuantumParams {
        construction,
        n,
        k,
        d: dist.d,
        d_exact: dist.exact,
        q,
        // a lower bound on d can only certify MDS when it already meets the bound
        mds: s.mds,
        two_d_eq_n_minus_k: s.two_d_eq_n_minus_k && dist.exact,
        source,
    })
}

/// `D ⊆ D^⊥H` over `F_{q^2}` gives `[[n, n - 2 dim D, d(D^⊥H)]]_q`. The Gram
/// matrix is checked before anything else.
pub fn hermitian_construction(
    d: &LinearCodeF,
    opts: &DistanceOptions,
) -> Result<(QuantumParams, DistanceResult), QuantumError> {
    let f = &**d.field();
    let half = f.half_degree().ok_or(QuantumError::NotQuadratic { order: f.order() })?;
    if let Some((i, j)) = d.gram_witness() {
        return Err(QuantumError::NotSelfOrthogonal { i, j });
    }
    let n = d.len();
    let dual = d.hermitian_dual();
    let dist = min_distance(&dual, opts)?;
    let qp = assemble(
        Construction::Hermitian,
        n,
        n - 2 * d.dim(),
        &dist,
        f.p().pow(half),
        Source::Linear(LinearDescriptor::of(d)),
    )?;
    Ok((qp, dist))
}

/// `[[N, N - log_q|C|, d(Tor(C^⊥H))]]_{p^m}` without checking that `C` is
/// self-orthogonal; used to recompute parameters from a printed dual.
pub fn symplectic_parameters(
    c: &ConstacyclicCode,
    opts: &DistanceOptions,
) -> Result<(QuantumParams, DistanceResult), QuantumError> {
    let cs = c.cosets();
    let n = c.len();
    let size = c.size_log_q();
    let dist = min_distance_r(&c.hermitian_dual(), opts)?;
    let qp = assemble(
        Construction::Symplectic,
        n,
        n.saturating_sub(size),
        &dist,
        cs.p().pow(cs.m()),
        Source::Ring(c.descriptor()),
    )?;
    Ok((qp, dist))
}

/// A coset pair with `a_i + a_partner(i) < 2p^e`.
fn exponent_witness(c: &ConstacyclicCode) -> QuantumError {
    let cosets = c.cosets().cosets();
    let exps = c.exponents();
    let (i, j) = (0..cosets.len())
        .map(|i| (i, cosets[i].partner))
        .find(|&(i, j)| exps[i] + exps[j] < c.bound())
        .expect("a failing coset pair");
    QuantumError::ExponentTest {
        rep: cosets[i].rep,
        partner: cosets[j].rep,
    }
}

/// The symplectic construction for a Hermitian self-orthogonal `C`.
///
/// Checks the exponent criterion, trace orthogonality of the `phi` images
/// and the size identity `log_q|C| = 2k0 + k1` from the standard form.
pub fn symplectic_construction(
    c: &ConstacyclicCode,
    opts: &DistanceOptions,
) -> Result<(QuantumParams, DistanceResult), QuantumError> {
    if !c.is_hermitian_self_orthogonal() {
        return Err(exponent_witness(c));
    }
    if let Err(w) = trace_orthogonality_transfer(c) {
        return Err(QuantumError::NotSelfOrthogonal { i: w.i, j: w.j });
    }
    let sf = c.standard_form();
    if sf.size_log_q() != c.size_log_q() {
        return Err(QuantumError::SizeMismatch {
            standard: sf.size_log_q(),
            exponents: c.size_log_q(),
        });
    }
    symplectic_parameters(c, opts)
}
