//! Enumerate the Hermitian self-orthogonal codes of a coset structure and
//! rank their quantum parameters.
//!
//! The region is a product over partner orbits: a symmetric coset takes
//! `a in [p^e, 2p^e]`, an asymmetric pair takes `(a, b)` with `a + b >= 2p^e`.

use std::cmp::Reverse;

use rayon::prelude::*;
use ringcode::codes::ConstacyclicCode;
use ringcode::cyclo::CosetStructure;
use ringcode::distance::DistanceOptions;
use serde_json::{json, Value};

use crate::args::{ConstructionArg, GrayArgs};
use crate::commands::quantum_params;
use crate::error::{CliError, EXIT_RESOURCE};

/// Per orbit: the coset indices and the admissible exponent tuples.
fn orbit_choices(cs: &CosetStructure) -> Vec<(Vec<usize>, Vec<Vec<u32>>)> {
    let pe = cs.pe();
    let bound = 2 * pe;
    let mut out = Vec::new();
    for (i, c) in cs.cosets().iter().enumerate() {
        let j = c.partner;
        if j == i {
            out.push((vec![i], (pe..=bound).map(|a| vec![a]).collect()));
        } else if i < j {
            let pairs = (0..=bound)
                .flat_map(|a| (bound - a..=bound).map(move |b| vec![a, b]))
                .collect();
            out.push((vec![i, j], pairs));
        }
    }
    out
}

pub fn region_size(cs: &CosetStructure) -> u128 {
    orbit_choices(cs).iter().map(|(_, c)| c.len() as u128).product()
}

pub fn search(
    cs: &std::sync::Arc<CosetStructure>,
    construction: ConstructionArg,
    gray: &GrayArgs,
    opts: &DistanceOptions,
    top: usize,
    region_cap: u64,
) -> Result<Value, CliError> {
    let orbits = orbit_choices(cs);
    let size = region_size(cs);
    if size > region_cap as u128 {
        return Err(CliError::new(
            EXIT_RESOURCE,
            format!("exponent region has {size} vectors, above the cap of {region_cap}"),
        )
        .with_detail(json!({ "region_size": size.to_string() })));
    }
    let count = cs.cosets().len();
    let vector = |mut idx: u64| -> Vec<u32> {
        let mut exps = vec![0; count];
        for (cosets, choices) in &orbits {
            let pick = &choices[(idx % choices.len() as u64) as usize];
            idx /= choices.len() as u64;
            for (&c, &a) in cosets.iter().zip(pick) {
                exps[c] = a;
            }
        }
        exps
    };
    let evaluate = |idx: u64| {
        let code = ConstacyclicCode::new(cs, vector(idx))?;
        let (q, _) = quantum_params(&code, construction, gray, opts)?;
        Ok::<_, CliError>((idx, code.descriptor(), q))
    };
    let mut results = (0..size as u64)
        .into_par_iter()
        .map(evaluate)
        .collect::<Result<Vec<_>, _>>()?;
    // d descending, then k descending, then enumeration order
    results.sort_by_key(|(idx, _, q)| (Reverse(q.d), Reverse(q.k), *idx));
    let ranked: Vec<Value> = results
        .into_iter()
        .take(top)
        .map(|(_, code, q)| json!({ "code": code, "quantum": q }))
        .collect();
    Ok(json!({
        "region_size": size as u64,
        "results": ranked,
    }))
}
