use std::io::Read;
use std::sync::Arc;

use ringcode::codes::{CodeDescriptor, ConstacyclicCode, LinearCodeF};
use ringcode::cyclo::CosetStructure;
use ringcode::distance::{min_distance, DistanceOptions, DistanceResult};
use ringcode::gf::{field_create, Field, Modulus};
use ringcode::maps::{gray_image_code, gray_image_span, GrayMatrix};
use ringcode::quantum::{hermitian_construction, symplectic_construction, LinearDescriptor, QuantumParams};
use serde_json::{json, Value};

use crate::args::{CodeArgs, ConstructionArg, DistanceArgs, FieldArgs, GrayArgs};
use crate::error::CliError;

pub fn structure(p: u32, m: u32, alpha: &str, n: u64, e: u32) -> Result<Arc<CosetStructure>, CliError> {
    let f = field_create(p, m, Modulus::Builtin)?;
    let alpha = f.parse(alpha)?;
    Ok(Arc::new(CosetStructure::build(&f, alpha, n, e)?))
}

pub fn field_structure(a: &FieldArgs) -> Result<Arc<CosetStructure>, CliError> {
    structure(a.p, a.m, &a.alpha, a.n, a.e)
}

/// `"rep=a,rep=a"`; whitespace is ignored and an empty list is the ambient
/// module.
pub fn parse_exponents(text: &str) -> Result<Vec<(u64, u32)>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (r, a) = item
                .split_once('=')
                .ok_or_else(|| CliError::parameter(format!("expected rep=a, got `{item}`")))?;
            let r = r.trim().parse().map_err(|_| CliError::parameter(format!("bad rep `{r}`")))?;
            let a = a.trim().parse().map_err(|_| CliError::parameter(format!("bad exponent `{a}`")))?;
            Ok((r, a))
        })
        .collect()
}

pub fn load_code(a: &CodeArgs) -> Result<ConstacyclicCode, CliError> {
    if let Some(path) = &a.descriptor {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::parameter(format!("stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::parameter(format!("{path}: {e}")))?
        };
        let d: CodeDescriptor =
            serde_json::from_str(&text).map_err(|e| CliError::parameter(format!("descriptor: {e}")))?;
        return Ok(ConstacyclicCode::from_descriptor(&d)?);
    }
    let (Some(p), Some(alpha), Some(n)) = (a.p, a.alpha.as_deref(), a.n) else {
        return Err(CliError::parameter("--p, --alpha and --n are required without --descriptor"));
    };
    let cs = structure(p, a.m, alpha, n, a.e)?;
    let reps = parse_exponents(a.exponents.as_deref().unwrap_or(""))?;
    Ok(ConstacyclicCode::from_reps(&cs, &reps)?)
}

pub fn distance_options(d: &DistanceArgs, jobs: Option<usize>) -> DistanceOptions {
    DistanceOptions {
        budget: d.budget,
        d_cap: d.d_cap,
        jobs,
        cross_check: true,
    }
}

pub fn gray_matrix(f: &Field, alpha: ringcode::gf::Fe, g: &GrayArgs) -> Result<GrayMatrix, CliError> {
    match &g.gray_matrix {
        Some(text) => GrayMatrix::parse(f, text).map_err(CliError::parameter),
        None => Ok(GrayMatrix::default_for(f, alpha)?),
    }
}

pub fn distance_json(f: &Field, r: &DistanceResult) -> Value {
    json!({
        "d": r.d,
        "exact": r.exact,
        "method": r.method,
        "work": r.work,
        "certificate": r.certificate.iter().map(|&x| f.format(x)).collect::<Vec<_>>(),
    })
}

fn linear_json(c: &LinearCodeF) -> Value {
    serde_json::to_value(LinearDescriptor::of(c)).expect("serializable")
}

pub fn cmd_factor(a: &FieldArgs) -> Result<Value, CliError> {
    let cs = field_structure(a)?;
    Ok(serde_json::to_value(cs.dump()).expect("serializable"))
}

pub fn cmd_code(a: &CodeArgs, dist: &DistanceArgs, with_distance: bool, jobs: Option<usize>) -> Result<Value, CliError> {
    let c = load_code(a)?;
    let f = c.cosets().field().clone();
    let sf = c.standard_form();
    let mut out = json!({
        "code": c.descriptor(),
        "hermitian_self_orthogonal": c.is_hermitian_self_orthogonal(),
        "standard_form": { "k0": sf.k0(), "k1": sf.k1() },
        "torsion": linear_json(&c.torsion()),
        "residue": linear_json(&c.residue()),
    });
    if with_distance {
        let r = min_distance(&c.torsion(), &distance_options(dist, jobs))?;
        out["distance"] = distance_json(&f, &r);
    }
    Ok(out)
}

pub fn cmd_dual(a: &CodeArgs) -> Result<Value, CliError> {
    let c = load_code(a)?;
    let d = c.hermitian_dual();
    Ok(json!({
        "code": c.descriptor(),
        "dual": d.descriptor(),
        "self_orthogonal": c.is_subcode_of(&d),
        "dual_containing": d.is_subcode_of(&c),
    }))
}

/// `Phi_M(C)` as a field code: the constacyclic transport when it applies,
/// the span of the image otherwise.
pub fn gray_image(m: &GrayMatrix, c: &ConstacyclicCode) -> Result<LinearCodeF, CliError> {
    let cs = c.cosets();
    let f = cs.field();
    if f.p() == 2 && m.constacyclic_compatible(f, cs.alpha()) {
        return Ok(gray_image_code(m, c)?);
    }
    Ok(LinearCodeF::from_space(f, gray_image_span(f, m, c)))
}

pub fn cmd_gray(
    a: &CodeArgs,
    g: &GrayArgs,
    dual: bool,
    dist: &DistanceArgs,
    with_distance: bool,
    jobs: Option<usize>,
) -> Result<Value, CliError> {
    let mut c = load_code(a)?;
    if dual {
        c = c.hermitian_dual();
    }
    let cs = c.cosets().clone();
    let f = cs.field().clone();
    let m = gray_matrix(&f, cs.alpha(), g)?;
    let img = gray_image(&m, &c)?;
    let mut out = json!({
        "code": c.descriptor(),
        "matrix": m.format(&f),
        "omega_condition": m.omega_condition(&f).map(|l| f.format(l)),
        "constacyclic_compatible": m.constacyclic_compatible(&f, cs.alpha()),
        "image": linear_json(&img),
    });
    if with_distance {
        let r = min_distance(&img, &distance_options(dist, jobs))?;
        out["distance"] = distance_json(&f, &r);
    }
    Ok(out)
}

pub fn quantum_params(
    c: &ConstacyclicCode,
    construction: ConstructionArg,
    g: &GrayArgs,
    opts: &DistanceOptions,
) -> Result<(QuantumParams, DistanceResult), CliError> {
    match construction {
        ConstructionArg::Symplectic => Ok(symplectic_construction(c, opts)?),
        ConstructionArg::Hermitian => {
            let cs = c.cosets();
            let m = gray_matrix(cs.field(), cs.alpha(), g)?;
            Ok(hermitian_construction(&gray_image(&m, c)?, opts)?)
        }
    }
}

pub fn cmd_quantum(
    a: &CodeArgs,
    construction: ConstructionArg,
    g: &GrayArgs,
    dist: &DistanceArgs,
    jobs: Option<usize>,
) -> Result<Value, CliError> {
    let c = load_code(a)?;
    let (q, _) = quantum_params(&c, construction, g, &distance_options(dist, jobs))?;
    Ok(serde_json::to_value(q).expect("serializable"))
}
