use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringcode::codes::ConstacyclicCode;
use ringcode::cyclo::CosetStructure;
use ringcode::gf::{field_create, Fe, Field, Modulus};
use ringcode::maps::*;
use ringcode::ring::{Ring, RingElement};

fn field(p: u32, m: u32) -> Arc<Field> {
    field_create(p, m, Modulus::Builtin).unwrap()
}

fn fields() -> Vec<Arc<Field>> {
    vec![field(2, 1), field(3, 1), field(2, 2)]
}

fn rand_elem(f: &Field, rng: &mut ChaCha8Rng) -> Fe {
    Fe(rng.gen_range(0..f.order()))
}

fn rand_word(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<RingElement> {
    (0..n)
        .map(|_| {
            // bias towards sparse words so that weights vary
            if rng.gen_bool(0.3) {
                RingElement::ZERO
            } else {
                RingElement::new(rand_elem(f, rng), rand_elem(f, rng))
            }
        })
        .collect()
}

fn rand_gray(f: &Field, rng: &mut ChaCha8Rng) -> GrayMatrix {
    loop {
        let v: Vec<Fe> = (0..4).map(|_| rand_elem(f, rng)).collect();
        if let Ok(m) = GrayMatrix::new(f, v[0], v[1], v[2], v[3]) {
            return m;
        }
    }
}

fn shift_field(f: &Field, v: &[Fe], lambda: Fe) -> Vec<Fe> {
    let n = v.len();
    let mut out = vec![f.mul(lambda, v[n - 1])];
    out.extend_from_slice(&v[..n - 1]);
    out
}

fn ring_hamming(v: &[RingElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

#[test]
fn gray_map_examples() {
    let f = field(2, 1);
    let w = f.exp(1);
    let id = GrayMatrix::identity();
    assert_eq!(gray_map(&f, &id, &[RingElement::new(Fe::ONE, w)]), vec![w, f.exp(2)]);
    assert_eq!(gray_map(&f, &id, &[RingElement::ZERO; 3]), vec![Fe::ZERO; 6]);
    assert_eq!(gray_weight(&f, &id, &[RingElement::U; 5]), 10);
    assert_eq!(GrayMatrix::new(&f, Fe::ONE, Fe::ONE, Fe::ONE, Fe::ONE), Err(MapError::Singular));
}

#[test]
fn omega_and_compatibility() {
    let f = field(2, 1);
    let w = f.exp(1);
    assert_eq!(GrayMatrix::identity().omega_condition(&f), Some(Fe::ONE));
    let m47 = GrayMatrix::default_for(&f, w).unwrap();
    assert_eq!(m47, GrayMatrix::new(&f, f.exp(2), Fe::ONE, w, w).unwrap());
    assert!(m47.constacyclic_compatible(&f, w));
    assert_eq!(m47.omega_condition(&f), None);
    let diag = GrayMatrix::new(&f, Fe::ONE, Fe::ZERO, Fe::ZERO, w).unwrap();
    assert_eq!(diag.omega_condition(&f), Some(Fe::ONE));
    assert!(!GrayMatrix::identity().constacyclic_compatible(&f, w));
    // b = t is excluded
    let bt = GrayMatrix::new(&f, w, w, Fe::ONE, Fe::ONE);
    assert!(bt.is_err() || !bt.unwrap().constacyclic_compatible(&f, w));
    let eq = GrayMatrix { a: f.mul(w, w), b: w, s: f.mul(w, w), t: w };
    assert!(!eq.constacyclic_compatible(&f, w));
    assert_eq!(GrayMatrix::parse(&f, "w^2,1;w,w").unwrap(), m47);
    assert_eq!(m47.format(&f), "w^2,1;w^1,w^1");
    assert!(GrayMatrix::parse(&f, "1,0,0,1").is_err());
}

#[test]
fn gray_distance_preservation_and_linearity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in fields() {
        let ring = Ring::new(&f);
        for _ in 0..1000 {
            let n = rng.gen_range(1..8);
            let m = rand_gray(&f, &mut rng);
            let x = rand_word(&f, n, &mut rng);
            let y = rand_word(&f, n, &mut rng);
            let diff: Vec<RingElement> = x.iter().zip(&y).map(|(&a, &b)| ring.sub(a, b)).collect();
            let (gx, gy) = (gray_map(&f, &m, &x), gray_map(&f, &m, &y));
            let dh = gx.iter().zip(&gy).filter(|(a, b)| a != b).count();
            assert_eq!(gray_weight(&f, &m, &diff), dh);
            // F_q-linearity
            let c = rand_elem(&f, &mut rng);
            let combo: Vec<RingElement> = x.iter().zip(&y).map(|(&a, &b)| ring.add(ring.scale(a, c), b)).collect();
            let expect: Vec<Fe> = gx.iter().zip(&gy).map(|(&a, &b)| f.add(f.mul(c, a), b)).collect();
            assert_eq!(gray_map(&f, &m, &combo), expect);
            let px = phi_map(&combo);
            let (p1, p2) = (phi_map(&x), phi_map(&y));
            let expect_left: Vec<Fe> = p1.left.iter().zip(&p2.left).map(|(&a, &b)| f.add(f.mul(c, a), b)).collect();
            assert_eq!(px.left, expect_left);
        }
    }
}

#[test]
fn phi_examples() {
    let f = field(2, 1);
    let w = f.exp(1);
    assert_eq!(phi_map(&[RingElement::new(Fe::ONE, w)]), SplitVector::new(vec![w], vec![Fe::ONE]).unwrap());
    let v = vec![Fe::ONE, w, Fe::ZERO];
    let uv: Vec<RingElement> = v.iter().map(|&b| RingElement::new(Fe::ZERO, b)).collect();
    assert_eq!(phi_map(&uv), SplitVector::new(v, vec![Fe::ZERO; 3]).unwrap());
    assert_eq!(symplectic_weight(&phi_map(&[RingElement::ZERO; 4])), 0);
    let x = SplitVector::new(vec![Fe::ONE, Fe::ZERO, w], vec![Fe::ZERO, Fe::ZERO, w]).unwrap();
    assert_eq!(symplectic_weight(&x), 2);
    assert!(SplitVector::new(vec![Fe::ONE], vec![]).is_err());
}

#[test]
fn symplectic_bridge_and_trace_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for f in fields() {
        let ring = Ring::new(&f);
        for _ in 0..1000 {
            let n = rng.gen_range(1..8);
            let x = rand_word(&f, n, &mut rng);
            let y = rand_word(&f, n, &mut rng);
            assert_eq!(symplectic_weight(&phi_map(&x)), ring_hamming(&x));
            let v = trace_inner_product(&f, &phi_map(&x), &phi_map(&y)).unwrap();
            let diag = trace_inner_product(&f, &phi_map(&x), &phi_map(&x)).unwrap();
            assert_eq!(f.conj(diag), f.neg(diag));
            let w = trace_inner_product(&f, &phi_map(&y), &phi_map(&x)).unwrap();
            assert_eq!(v, f.neg(f.conj(w)));
            // the trace pairing is the u-part of the Hermitian product
            assert_eq!(v, ring.hermitian(&x, &y).b);
        }
    }
    // off the diagonal the value need not satisfy conj(v) = -v
    let f9 = field(3, 1);
    let x = SplitVector::new(vec![Fe::ONE], vec![Fe::ZERO]).unwrap();
    let y = SplitVector::new(vec![Fe::ZERO], vec![Fe::ONE]).unwrap();
    let v = trace_inner_product(&f9, &x, &y).unwrap();
    assert_eq!(v, Fe::ONE);
    assert_ne!(f9.conj(v), f9.neg(v));

    // (1 | w) over F_9
    let f = field(3, 1);
    let x = SplitVector::new(vec![Fe::ONE], vec![f.exp(1)]).unwrap();
    let v = trace_inner_product(&f, &x, &x).unwrap();
    assert_eq!(v, f.sub(f.exp(3), f.exp(1)));
    assert_eq!(f.pow(v, 3), f.neg(v));
}

fn random_self_orthogonal(cs: &Arc<CosetStructure>, rng: &mut ChaCha8Rng) -> ConstacyclicCode {
    let bound = 2 * cs.pe();
    let mut exps: Vec<u32> = (0..cs.cosets().len()).map(|_| rng.gen_range(0..=bound)).collect();
    for (i, c) in cs.cosets().iter().enumerate() {
        let j = c.partner;
        if exps[i] + exps[j] < bound {
            if i == j {
                exps[i] = rng.gen_range(cs.pe()..=bound);
            } else {
                exps[j] = bound - exps[i];
            }
        }
    }
    ConstacyclicCode::new(cs, exps).unwrap()
}

fn structures() -> Vec<Arc<CosetStructure>> {
    let (f4, f9, f16) = (field(2, 1), field(3, 1), field(2, 2));
    [
        (f9.clone(), f9.exp(4), 5, 0),
        (f9.clone(), f9.exp(4), 10, 0),
        (f9.clone(), f9.exp(2), 2, 1),
        (f4.clone(), f4.exp(1), 5, 1),
        (f4.clone(), f4.exp(1), 3, 0),
        (f16.clone(), f16.exp(6), 3, 1),
    ]
    .into_iter()
    .map(|(f, a, n, e)| Arc::new(CosetStructure::build(&f, a, n, e).unwrap()))
    .collect()
}

#[test]
fn trace_transfer_on_self_orthogonal_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let structs = structures();
    for k in 0..20 {
        let cs = &structs[k % structs.len()];
        let c = random_self_orthogonal(cs, &mut rng);
        assert!(c.is_hermitian_self_orthogonal());
        assert_eq!(trace_orthogonality_transfer(&c), Ok(()));
    }
    let f9 = field(3, 1);
    let cs = Arc::new(CosetStructure::build(&f9, f9.exp(4), 2, 0).unwrap());
    assert_eq!(trace_orthogonality_transfer(&ConstacyclicCode::u_ambient(&cs)), Ok(()));
    let w = trace_orthogonality_transfer(&ConstacyclicCode::full(&cs)).unwrap_err();
    assert!(!w.value.is_zero());
}

#[test]
fn commuting_square_in_characteristic_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for f in [field(2, 1), field(2, 2)] {
        let ring = Ring::new(&f);
        for _ in 0..500 {
            let alpha = loop {
                let a = rand_elem(&f, &mut rng);
                if !a.is_zero() {
                    break a;
                }
            };
            let (b, t) = loop {
                let (b, t) = (rand_elem(&f, &mut rng), rand_elem(&f, &mut rng));
                if b != t {
                    break (b, t);
                }
            };
            let Ok(m) = GrayMatrix::new(&f, f.mul(t, alpha), b, f.mul(b, alpha), t) else {
                continue;
            };
            let n = rng.gen_range(1..8);
            let c = rand_word(&f, n, &mut rng);
            let lhs = shift_field(&f, &gray_map(&f, &m, &c), f.mul(alpha, alpha));
            let rhs = gray_map(&f, &m, &ring.shift(&c, RingElement::new(alpha, alpha)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn gray_image_matches_span() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for cs in structures().into_iter().filter(|cs| cs.p() == 2) {
        let f = cs.field().clone();
        let m = GrayMatrix::default_for(&f, cs.alpha()).unwrap();
        for _ in 0..10 {
            let bound = 2 * cs.pe();
            let exps = (0..cs.cosets().len()).map(|_| rng.gen_range(0..=bound)).collect();
            let c = ConstacyclicCode::new(&cs, exps).unwrap();
            let img = gray_image_code(&m, &c).unwrap();
            assert_eq!(img.dim(), c.size_log_q());
            assert_eq!(img.lambda(), Some(f.mul(cs.alpha(), cs.alpha())));
        }
        let zero = gray_image_code(&m, &ConstacyclicCode::zero(&cs)).unwrap();
        assert_eq!(zero.dim(), 0);
        let full = gray_image_code(&m, &ConstacyclicCode::full(&cs)).unwrap();
        assert_eq!(full.dim(), 2 * cs.length());
        assert_eq!(gray_image_code(&GrayMatrix::identity(), &ConstacyclicCode::full(&cs)).err(), Some(MapError::Incompatible));
    }
    let f9 = field(3, 1);
    let cs = Arc::new(CosetStructure::build(&f9, f9.exp(4), 5, 0).unwrap());
    assert_eq!(
        gray_image_code(&GrayMatrix::identity(), &ConstacyclicCode::full(&cs)).err(),
        Some(MapError::NotCharTwo)
    );
}

/// `span(Phi(C^perp)) = span(Phi(C))^perp` for Gray matrices meeting the
/// Omega condition.
#[test]
fn duality_commutes_with_omega_gray_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for cs in structures().into_iter().filter(|cs| cs.p() == 2) {
        let f = cs.field().clone();
        let omega_maps: Vec<GrayMatrix> = (0..200)
            .map(|_| rand_gray(&f, &mut rng))
            .filter(|m| m.omega_condition(&f).is_some())
            .take(3)
            .collect();
        assert!(!omega_maps.is_empty());
        for m in omega_maps {
            for _ in 0..5 {
                let bound = 2 * cs.pe();
                let exps = (0..cs.cosets().len()).map(|_| rng.gen_range(0..=bound)).collect();
                let c = ConstacyclicCode::new(&cs, exps).unwrap();
                let lhs = gray_image_span(&f, &m, &c.hermitian_dual());
                let rhs = gray_image_span(&f, &m, &c).hermitian_dual(&f);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

/// The quaternary length-10 case: the Gray image of `C^perp` for `C = <f0 f1^3 f2^4>`.
#[test]
fn quaternary_dual_image_dimension() {
    let f = field(2, 1);
    let w = f.exp(1);
    let cs = Arc::new(CosetStructure::build(&f, w, 5, 1).unwrap());
    let idx = |s: &str| cs.index_of_poly(&ringcode::gf::Poly::parse_coeffs(&f, s).unwrap()).unwrap();
    let mut exps = vec![0; 3];
    exps[idx("w^1,1")] = 1;
    exps[idx("w^2,1,1")] = 3;
    exps[idx("w^2,w^2,1")] = 4;
    let c = ConstacyclicCode::new(&cs, exps).unwrap();
    let d = c.hermitian_dual();
    let m = GrayMatrix::default_for(&f, w).unwrap();
    let img = gray_image_code(&m, &d).unwrap();
    assert_eq!((img.len(), img.dim()), (20, 15));
    assert_eq!(img.generator_poly(), Some(&d.generator_poly()));
    assert_eq!(img.lambda(), Some(f.exp(2)));
}
