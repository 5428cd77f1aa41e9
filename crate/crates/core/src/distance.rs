//! Minimum distance of linear codes over `F_q`.
//!
//! Two engines: exhaustive enumeration of all nonzero codewords (a `q`-ary
//! Gray-code walk, one row multiple added per step), and a column-rank search
//! on the parity-check matrix that looks for the smallest dependent column
//! set in colex order. Both split their search space into partitions that run
//! on a rayon pool and reduce deterministically, so results do not depend on
//! the worker count.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::codes::{ConstacyclicCode, LinearCodeF};
use crate::gf::{Fe, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("no nonzero codeword")]
    ZeroCode,
    #[error("q^k = {q}^{k} codewords exceed the budget of {budget}")]
    BudgetExceeded { q: u32, k: usize, budget: u64 },
    #[error("engines disagree: exhaustive {exhaustive}, column-rank {column_rank}")]
    EngineDisagreement { exhaustive: usize, column_rank: usize },
    #[error("cannot build a worker pool: {0}")]
    Pool(String),
}

/// How the weight of a word is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Hamming,
    /// Positions `i` and `i + half` count once together: the ring Hamming
    /// weight in `[residue | u-part]` layout, or the symplectic weight of a
    /// split vector.
    Paired { half: usize },
}

impl WeightKind {
    pub fn weight(self, v: &[Fe]) -> usize {
        match self {
            WeightKind::Hamming => v.iter().filter(|x| !x.is_zero()).count(),
            WeightKind::Paired { half } => (0..half)
                .filter(|&i| !v[i].is_zero() || !v[i + half].is_zero())
                .count(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    #[serde(rename = "column-rank")]
    ColumnRank,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    /// The distance, or `d_cap + 1` as a lower bound when `exact` is false.
    pub d: usize,
    pub exact: bool,
    pub method: Method,
    /// A codeword of weight `d`; empty for lower bounds.
    pub certificate: Vec<Fe>,
    /// Codewords enumerated, or column subsets tested.
    pub work: u64,
}

#[derive(Clone, Debug)]
pub struct DistanceOptions {
    /// Largest `q^k` the exhaustive engine accepts.
    pub budget: u64,
    /// Largest subset size the column-rank engine tries.
    pub d_cap: usize,
    /// Worker count; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    /// Run both engines when both are feasible and require agreement.
    pub cross_check: bool,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            budget: 1 << 26,
            d_cap: 8,
            jobs: None,
            cross_check: true,
        }
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, work: impl FnOnce() -> R + Send) -> Result<R, DistanceError> {
    match jobs {
        None => Ok(work()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| DistanceError::Pool(e.to_string()))?;
            Ok(pool.install(work))
        }
    }
}

fn lex_cmp(a: &[Fe], b: &[Fe]) -> Ordering {
    a.iter().map(|x| x.0).cmp(b.iter().map(|x| x.0))
}

/// `(weight, certificate)`; smaller weight wins, ties go to the
/// lexicographically least word.
fn better(a: (usize, Vec<Fe>), b: (usize, Vec<Fe>)) -> (usize, Vec<Fe>) {
    match a.0.cmp(&b.0).then_with(|| lex_cmp(&a.1, &b.1)) {
        Ordering::Greater => b,
        _ => a,
    }
}

/// Enumerate every nonzero codeword; returns the minimum weight and the
/// lexicographically least minimum-weight word.
pub fn min_distance_exhaustive(
    code: &LinearCodeF,
    weight: WeightKind,
    opts: &DistanceOptions,
) -> Result<DistanceResult, DistanceError> {
    let f = &**code.field();
    let k = code.dim();
    let n = code.len();
    let q = f.order();
    if k == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let total = (q as u128).checked_pow(k as u32).filter(|&t| t <= opts.budget as u128);
    let Some(total) = total else {
        return Err(DistanceError::BudgetExceeded { q, k, budget: opts.budget });
    };
    let g = code.generator_matrix();
    // mult[i][c] = c * row_i
    let mult: Vec<Vec<Vec<Fe>>> = (0..k)
        .map(|i| {
            f.elements()
                .map(|c| g.row(i).iter().map(|&x| f.mul(c, x)).collect())
                .collect()
        })
        .collect();

    // Fix the top `t` message digits per partition.
    let mut t = 0;
    while t < k && (q as u64).pow(t as u32) < 256 {
        t += 1;
    }
    let free = k - t;
    let parts = (q as u64).pow(t as u32);
    let per_part = (q as u64).pow(free as u32);

    let walk = |part: u64| -> Option<(usize, Vec<Fe>)> {
        let mut word = vec![Fe::ZERO; n];
        let mut p = part;
        for i in free..k {
            let c = (p % q as u64) as usize;
            p /= q as u64;
            for (w, &m) in word.iter_mut().zip(&mult[i][c]) {
                *w = f.add(*w, m);
            }
        }
        let mut best: Option<(usize, Vec<Fe>)> = None;
        let mut consider = |word: &[Fe]| {
            let w = weight.weight(word);
            if w == 0 {
                return;
            }
            let replace = match &best {
                None => true,
                Some((bw, bc)) => w < *bw || (w == *bw && lex_cmp(word, bc).is_lt()),
            };
            if replace {
                best = Some((w, word.to_vec()));
            }
        };
        consider(&word);
        let mut digits = vec![0u32; free];
        for step in 1..per_part {
            let mut i = 0;
            let mut s = step;
            while s % q as u64 == 0 {
                s /= q as u64;
                i += 1;
            }
            let old = Fe(digits[i]);
            digits[i] = (digits[i] + 1) % q;
            let delta = f.sub(Fe(digits[i]), old);
            for (w, &m) in word.iter_mut().zip(&mult[i][delta.0 as usize]) {
                *w = f.add(*w, m);
            }
            consider(&word);
        }
        best
    };

    let best = with_jobs(opts.jobs, || {
        (0..parts)
            .into_par_iter()
            .filter_map(walk)
            .reduce_with(better)
    })?
    .ok_or(DistanceError::ZeroCode)?;
    Ok(DistanceResult {
        d: best.0,
        exact: true,
        method: Method::Exhaustive,
        certificate: best.1,
        work: (total - 1) as u64,
    })
}

/// Incrementally reduced set of column vectors.
struct Echelon<'a> {
    f: &'a Field,
    rows: Vec<(usize, Vec<Fe>)>,
}

impl<'a> Echelon<'a> {
    /// Reduce `v` against the basis; `None` when it lies in the span.
    fn reduce(&self, v: &[Fe]) -> Option<(usize, Vec<Fe>)> {
        let f = self.f;
        let mut v = v.to_vec();
        for (p, b) in &self.rows {
            let c = v[*p];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = f.inv(v[p]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((p, v))
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Colex-first dependent `w`-subset among those with largest element `top`,
/// with the number of subsets tested.
fn first_dependent_with_top(f: &Field, cols: &[Vec<Fe>], top: usize, w: usize) -> (Option<Vec<usize>>, u64) {
    let mut ech = Echelon { f, rows: Vec::new() };
    let mut chosen = vec![top];
    let mut tested = 0u64;
    let Some(r) = ech.reduce(&cols[top]) else {
        // a zero column is a dependent singleton
        return if w == 1 { (Some(chosen), 1) } else { (None, 0) };
    };
    if w == 1 {
        return (None, 1);
    }
    ech.rows.push(r);
    // choose the remaining w - 1 elements below `top`, largest first
    fn rec(
        ech: &mut Echelon,
        cols: &[Vec<Fe>],
        chosen: &mut Vec<usize>,
        below: usize,
        left: usize,
        tested: &mut u64,
    ) -> bool {
        // colex order on the remaining elements: increasing next-largest
        for c in (left - 1)..below {
            if left == 1 {
                *tested += 1;
                if ech.reduce(&cols[c]).is_none() {
                    chosen.push(c);
                    return true;
                }
                continue;
            }
            // prefixes are independent (smaller sizes were already cleared)
            let r = ech.reduce(&cols[c]).expect("independent prefix");
            ech.rows.push(r);
            chosen.push(c);
            if rec(ech, cols, chosen, c, left - 1, tested) {
                return true;
            }
            chosen.pop();
            ech.rows.pop();
        }
        false
    }
    let found = rec(&mut ech, cols, &mut chosen, top, w - 1, &mut tested);
    (found.then_some(chosen), tested)
}

/// Nonzero kernel vector of the given columns (a minimal dependency).
fn kernel_vector(f: &Field, cols: &[&[Fe]]) -> Vec<Fe> {
    let w = cols.len();
    let rows = cols.first().map_or(0, |c| c.len());
    // matrix with the columns as columns
    let mut m: Vec<Vec<Fe>> = (0..rows).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..w {
        let Some(i) = (pr..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(pr, i);
        let inv = f.inv(m[pr][c]).expect("nonzero");
        for x in m[pr].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != pr && !m[i][c].is_zero() {
                let t = m[i][c];
                let piv = m[pr].clone();
                for (x, y) in m[i].iter_mut().zip(piv) {
                    *x = f.sub(*x, f.mul(t, y));
                }
            }
        }
        pivots.push(c);
        pr += 1;
    }
    let free = (0..w).find(|c| !pivots.contains(c)).expect("dependent columns");
    let mut x = vec![Fe::ZERO; w];
    x[free] = Fe::ONE;
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = f.neg(m[r][free]);
    }
    // normalize: first nonzero entry is 1
    let lead = *x.iter().find(|v| !v.is_zero()).expect("nonzero");
    let inv = f.inv(lead).expect("nonzero");
    x.iter().map(|&v| f.mul(v, inv)).collect()
}

/// Smallest `w <= d_cap` with `w` dependent parity-check columns. When none
/// exists the result is the lower bound `d_cap + 1` with `exact = false`.
pub fn min_distance_column_rank(
    code: &LinearCodeF,
    d_cap: usize,
    opts: &DistanceOptions,
) -> Result<DistanceResult, DistanceError> {
    let f = &**code.field();
    let n = code.len();
    if code.dim() == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let h = code.parity_check();
    let cols: Vec<Vec<Fe>> = (0..n).map(|j| (0..h.nrows()).map(|i| h.get(i, j)).collect()).collect();
    let mut work = 0u64;
    for w in 1..=d_cap.min(n) {
        let per_top = with_jobs(opts.jobs, || {
            ((w - 1)..n)
                .into_par_iter()
                .map(|top| first_dependent_with_top(f, &cols, top, w))
                .collect::<Vec<_>>()
        })?;
        for (found, tested) in per_top {
            work += tested;
            if let Some(set) = found {
                let mut set = set;
                set.sort();
                let refs: Vec<&[Fe]> = set.iter().map(|&c| cols[c].as_slice()).collect();
                let x = kernel_vector(f, &refs);
                let mut cert = vec![Fe::ZERO; n];
                for (&c, &v) in set.iter().zip(&x) {
                    cert[c] = v;
                }
                return Ok(DistanceResult {
                    d: w,
                    exact: true,
                    method: Method::ColumnRank,
                    certificate: cert,
                    work,
                });
            }
        }
        debug_assert_eq!(work, (1..=w).map(|v| binomial(n, v)).sum::<u64>());
    }
    Ok(DistanceResult {
        d: d_cap.min(n) + 1,
        exact: false,
        method: Method::ColumnRank,
        certificate: Vec::new(),
        work,
    })
}

/// Codes with at most this many codewords are enumerated outright and
/// cross-checked by column rank.
pub const SMALL_CODE: u64 = 1 << 20;

/// Exhaustive plus a column-rank cross-check for small codes; column rank
/// otherwise, falling back to exhaustive within the budget when the cap is
/// hit.
pub fn min_distance(code: &LinearCodeF, opts: &DistanceOptions) -> Result<DistanceResult, DistanceError> {
    let small = DistanceOptions {
        budget: opts.budget.min(SMALL_CODE),
        ..opts.clone()
    };
    match min_distance_exhaustive(code, WeightKind::Hamming, &small) {
        Ok(ex) => {
            if opts.cross_check {
                let cr = min_distance_column_rank(code, ex.d, opts)?;
                if cr.d != ex.d || !cr.exact {
                    return Err(DistanceError::EngineDisagreement {
                        exhaustive: ex.d,
                        column_rank: cr.d,
                    });
                }
            }
            Ok(ex)
        }
        Err(DistanceError::BudgetExceeded { .. }) => {
            let cr = min_distance_column_rank(code, opts.d_cap, opts)?;
            if cr.exact {
                return Ok(cr);
            }
            match min_distance_exhaustive(code, WeightKind::Hamming, opts) {
                Err(DistanceError::BudgetExceeded { .. }) => Ok(cr),
                other => other,
            }
        }
        Err(e) => Err(e),
    }
}

/// `d_H(C) = d_H(Tor(C))`.
pub fn min_distance_r(code: &ConstacyclicCode, opts: &DistanceOptions) -> Result<DistanceResult, DistanceError> {
    min_distance(&code.torsion(), opts)
}

/// Whether the certificate is a codeword of weight `d`.
pub fn verify_certificate(code: &LinearCodeF, res: &DistanceResult, weight: WeightKind) -> bool {
    res.exact && code.contains(&res.certificate) && weight.weight(&res.certificate) == res.d
}
