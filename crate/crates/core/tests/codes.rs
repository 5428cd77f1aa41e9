use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringcode::codes::{to_fq, CodeDescriptor, CodeError, ConstacyclicCode, LinearCodeF, RModuleMatrix};
use ringcode::cyclo::CosetStructure;
use ringcode::gf::{field_create, Fe, Field, Modulus, Poly};
use ringcode::linalg::RowSpace;
use ringcode::ring::{Ring, RingElement};

fn f9() -> Arc<Field> {
    field_create(3, 1, Modulus::Builtin).unwrap()
}

fn poly(f: &Field, s: &str) -> Poly {
    Poly::parse_coeffs(f, s).unwrap()
}

fn structure(f: &Arc<Field>, alpha: Fe, n: u64, e: u32) -> Arc<CosetStructure> {
    Arc::new(CosetStructure::build(f, alpha, n, e).unwrap())
}

/// Exponents keyed by factor polynomial.
fn by_poly(cs: &Arc<CosetStructure>, f: &Field, spec: &[(&str, u32)]) -> ConstacyclicCode {
    let mut exps = vec![0; cs.cosets().len()];
    for &(p, a) in spec {
        exps[cs.index_of_poly(&poly(f, p)).expect("factor")] = a;
    }
    ConstacyclicCode::new(cs, exps).unwrap()
}

fn all_exponent_vectors(count: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..count {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Tor and Res read off an `F_q`-basis of `C` in `[a | b]` layout.
fn tor_res_oracle(f: &Field, basis: &RowSpace, n: usize) -> (RowSpace, RowSpace) {
    let rows = basis.basis().row_vecs();
    let tor: Vec<Vec<Fe>> = rows
        .iter()
        .zip(basis.pivots())
        .filter(|(_, &p)| p >= n)
        .map(|(r, _)| r[n..].to_vec())
        .collect();
    let res: Vec<Vec<Fe>> = rows.iter().map(|r| r[..n].to_vec()).collect();
    (RowSpace::from_rows(f, n, tor), RowSpace::from_rows(f, n, res))
}

#[test]
fn ternary_length_five_code_and_dual() {
    let f = f9();
    let cs = structure(&f, f.exp(4), 5, 0);
    let c = by_poly(&cs, &f, &[("1,1", 2), ("1,w^7,1", 2)]);
    assert_eq!(c.size_log_q(), 4);
    let d = c.hermitian_dual();
    assert_eq!(d, by_poly(&cs, &f, &[("1,w^7,1", 2)]));
    assert!(c.is_hermitian_self_orthogonal());
    assert!(c.gram_self_orthogonal());
    let tor = d.torsion();
    assert_eq!(tor.generator_poly(), Some(&poly(&f, "1,w^7,1")));
    assert_eq!((tor.len(), tor.dim()), (5, 3));
    assert!(c.contains(&c.generator_word()));
    let mut count = 0u64;
    c.for_each_codeword(1 << 32, |_| count += 1).unwrap();
    assert_eq!(count, 6561);
    assert_eq!(
        c.for_each_codeword(100, |_| ()),
        Err(CodeError::BudgetExceeded { size_log_q: 4, budget: 100 })
    );
}

/// The printed factors pair under plain coefficient conjugation; the
/// conjugate-reciprocal pairing fixes both linear factors, so the printed `C`
/// is not contained in its dual.
#[test]
fn ternary_length_ten_printed_code() {
    let f = f9();
    let cs = structure(&f, f.exp(4), 10, 0);
    let (f0, f1, f2, f3, f4, f5) = ("w^2,1", "w^6,1", "2,w^1,1", "2,w^3,1", "2,w^5,1", "2,w^7,1");
    let partner = |p: &str| {
        let i = cs.index_of_poly(&poly(&f, p)).unwrap();
        cs.cosets()[cs.cosets()[i].partner].poly.clone()
    };
    assert_eq!(partner(f0), poly(&f, f0));
    assert_eq!(partner(f1), poly(&f, f1));
    assert_eq!(partner(f2), poly(&f, f5));
    assert_eq!(partner(f3), poly(&f, f4));

    let c = by_poly(&cs, &f, &[(f0, 2), (f2, 2), (f3, 2), (f4, 2)]);
    assert_eq!(c.hermitian_dual(), by_poly(&cs, &f, &[(f1, 2), (f2, 2)]));
    assert!(!c.is_hermitian_self_orthogonal());
    assert!(!c.gram_self_orthogonal());

    // the printed dual and its torsion code
    let d = by_poly(&cs, &f, &[(f0, 2), (f4, 2)]);
    assert_eq!(d.hermitian_dual().size_log_q(), 6);
    let tor = d.torsion();
    assert_eq!(tor.generator_poly(), Some(&poly(&f, f0).mul(&f, &poly(&f, f4))));
    assert_eq!(tor.dim(), 7);
}

#[test]
fn trivial_codes() {
    let f = f9();
    let cs = structure(&f, f.exp(4), 5, 0);
    let full = ConstacyclicCode::full(&cs);
    let zero = ConstacyclicCode::zero(&cs);
    assert_eq!(full.size_log_q(), 10);
    assert_eq!(zero.size_log_q(), 0);
    assert_eq!(full.hermitian_dual(), zero);
    assert!(!full.is_hermitian_self_orthogonal());
    assert!(!full.gram_self_orthogonal());
    assert!(zero.fq_basis().dim() == 0);
    assert_eq!(zero.residue().dim(), 0);
    assert_eq!(full.torsion().dim(), 5);
    let u = ConstacyclicCode::u_ambient(&cs);
    assert_eq!(u.hermitian_dual(), u);
    assert_eq!(u.torsion().dim(), 5);
    assert!(matches!(
        ConstacyclicCode::new(&cs, vec![3, 0, 0]),
        Err(CodeError::ExponentOutOfRange { bound: 2, .. })
    ));
    assert_eq!(ConstacyclicCode::from_reps(&cs, &[(2, 1)]), Err(CodeError::UnknownRep(2)));
}

/// Every exponent vector over `(q=9, alpha=2, n=5)`.
#[test]
fn erratum_bound_exhaustive() {
    let f = f9();
    let cs = structure(&f, f.from_int(2), 5, 0);
    let vectors = all_exponent_vectors(3, 2);
    assert_eq!(vectors.len(), 27);
    for exps in vectors {
        let c = ConstacyclicCode::new(&cs, exps).unwrap();
        let d = c.hermitian_dual();
        assert_eq!(c.size_log_q() + d.size_log_q(), 2 * c.len());
        assert_eq!(c.is_hermitian_self_orthogonal(), c.gram_self_orthogonal(), "{:?}", c.exponents());
        assert_eq!(d.hermitian_dual(), c);
    }
}

fn cases() -> Vec<Arc<CosetStructure>> {
    let f4 = field_create(2, 1, Modulus::Builtin).unwrap();
    let f9 = f9();
    let f16 = field_create(2, 2, Modulus::Builtin).unwrap();
    vec![
        structure(&f9, f9.exp(4), 5, 0),
        structure(&f9, f9.exp(4), 4, 0),
        structure(&f9, f9.exp(2), 2, 1),
        structure(&f9, Fe::ONE, 4, 0),
        structure(&f4, f4.exp(1), 5, 1),
        structure(&f4, f4.exp(1), 3, 0),
        structure(&f4, Fe::ONE, 3, 2),
        structure(&f16, f16.exp(6), 3, 1),
    ]
}

fn random_code(cs: &Arc<CosetStructure>, rng: &mut ChaCha8Rng) -> ConstacyclicCode {
    let bound = 2 * cs.pe();
    let exps = (0..cs.cosets().len()).map(|_| rng.gen_range(0..=bound)).collect();
    ConstacyclicCode::new(cs, exps).unwrap()
}

/// Lift a random code to a self-orthogonal one by raising exponents.
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
    let c = ConstacyclicCode::new(cs, exps).unwrap();
    assert!(c.is_hermitian_self_orthogonal());
    c
}

#[test]
fn linear_algebra_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for cs in cases() {
        let f = cs.field().clone();
        let ring = Ring::new(&f);
        for _ in 0..12 {
            let c = random_code(&cs, &mut rng);
            let n = c.len();
            let basis = c.fq_basis();
            assert_eq!(basis.dim(), c.size_log_q());

            let (tor, res) = tor_res_oracle(&f, &basis, n);
            assert_eq!(&tor, c.torsion().space());
            assert_eq!(&res, c.residue().space());
            assert_eq!(tor.dim() + res.dim(), c.size_log_q());

            let sf = c.standard_form();
            assert_eq!(sf.size_log_q(), c.size_log_q());
            assert_eq!(sf.fq_span(&ring), basis);

            let d = c.hermitian_dual();
            let db = d.fq_basis();
            // sesquilinearity: orthogonality on bases suffices
            for x in basis.basis().row_vecs() {
                for y in db.basis().row_vecs() {
                    let (x, y) = (ringcode::codes::from_fq(&x), ringcode::codes::from_fq(&y));
                    assert!(ring.hermitian(&x, &y).is_zero());
                }
            }
            let h = sf.dual(&ring);
            assert_eq!(h.fq_span(&ring), db);
            for x in sf.rows() {
                for y in h.rows() {
                    assert!(ring.hermitian(x, y).is_zero());
                }
            }

            assert_eq!(c.is_hermitian_self_orthogonal(), c.gram_self_orthogonal());
            let so = random_self_orthogonal(&cs, &mut rng);
            assert!(so.gram_self_orthogonal());
        }
    }
}

#[test]
fn constacyclic_shift_preserves_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for cs in cases() {
        let f = cs.field().clone();
        let ring = Ring::new(&f);
        for _ in 0..8 {
            let c = random_code(&cs, &mut rng);
            let basis = c.fq_basis();
            let mut word = vec![Fe::ZERO; 2 * c.len()];
            for row in basis.basis().row_vecs() {
                let s = Fe(rng.gen_range(0..f.order()));
                for (w, r) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(s, r));
                }
            }
            let w = ringcode::codes::from_fq(&word);
            assert!(c.contains(&w));
            assert!(c.contains(&ring.shift(&w, c.shift_constant())));
        }
    }
}

#[test]
fn standard_form_shapes() {
    let f = f9();
    let ring = Ring::new(&f);
    let n = 2;
    let identity: Vec<Vec<RingElement>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { RingElement::ONE } else { RingElement::ZERO }).collect())
        .collect();
    let full = RModuleMatrix::standard_form(&ring, n, identity.clone());
    assert_eq!((full.k0(), full.k1()), (2, 0));
    assert_eq!(full.dual(&ring).rows().len(), 0);

    let u_rows: Vec<Vec<RingElement>> = identity
        .iter()
        .map(|r| r.iter().map(|&c| ring.mul(RingElement::U, c)).collect())
        .collect();
    let u = RModuleMatrix::standard_form(&ring, n, u_rows);
    assert_eq!((u.k0(), u.k1()), (0, 2));
    let ud = u.dual(&ring);
    assert_eq!(ud.fq_span(&ring), u.fq_span(&ring));
    // exhaustive pairing at N = 2: every element of uR^2 is orthogonal to uR^2
    let elems: Vec<RingElement> = f.elements().map(|b| RingElement::new(Fe::ZERO, b)).collect();
    for &x0 in &elems {
        for &x1 in &elems {
            for &y0 in &elems {
                assert!(ring.hermitian(&[x0, x1], &[y0, RingElement::U]).is_zero());
            }
        }
    }
}

#[test]
fn field_generator_matrices() {
    let f = f9();
    let lambda = f.from_int(2);
    let f2 = poly(&f, "1,w^7,1");
    let g = ringcode::codes::constacyclic_generator_matrix(&f, &f2, 5, lambda).unwrap();
    assert_eq!((g.nrows(), g.ncols(), g.rank(&f)), (3, 5, 3));
    let id = ringcode::codes::constacyclic_generator_matrix(&f, &Poly::one(), 5, lambda).unwrap();
    assert_eq!(id, ringcode::linalg::Matrix::identity(5));
    let full = Poly::binomial(&f, 5, lambda);
    let empty = ringcode::codes::constacyclic_generator_matrix(&f, &full, 5, lambda).unwrap();
    assert_eq!(empty.nrows(), 0);
    assert!(matches!(
        ringcode::codes::constacyclic_generator_matrix(&f, &poly(&f, "1,1,1"), 5, lambda),
        Err(CodeError::NotDivisor)
    ));
    let code = LinearCodeF::from_generator_poly(&f, &f2, 5, lambda).unwrap();
    let dual = code.hermitian_dual();
    assert_eq!(dual.dim(), 2);
    assert_eq!(dual.hermitian_dual(), code);
}

#[test]
fn descriptor_round_trip() {
    let f = f9();
    let cs = structure(&f, f.exp(4), 5, 0);
    let c = by_poly(&cs, &f, &[("1,1", 2), ("1,w^7,1", 2)]);
    let d = c.descriptor();
    let back = ConstacyclicCode::from_descriptor(&d).unwrap();
    assert_eq!(back, c);
    let mut bad: CodeDescriptor = d.clone();
    bad.size_log_q = 5;
    assert!(matches!(ConstacyclicCode::from_descriptor(&bad), Err(CodeError::Descriptor(_))));
    assert_eq!(to_fq(&c.generator_word()).len(), 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn size_and_duality_identities(exps in proptest::collection::vec(0u32..=2, 3)) {
        let f = f9();
        let cs = structure(&f, f.exp(4), 5, 0);
        let c = ConstacyclicCode::new(&cs, exps).unwrap();
        let d = c.hermitian_dual();
        prop_assert_eq!(c.size_log_q() + d.size_log_q(), 2 * c.len());
        prop_assert_eq!(d.hermitian_dual(), c.clone());
        let tor = c.torsion().dim();
        let res = c.residue().dim();
        prop_assert_eq!(tor + res, c.size_log_q());
    }

    #[test]
    fn f16_size_identity(exps in proptest::collection::vec(0u32..=4, 3)) {
        let f = field_create(2, 2, Modulus::Builtin).unwrap();
        let cs = structure(&f, f.exp(6), 3, 1);
        let c = ConstacyclicCode::new(&cs, exps).unwrap();
        prop_assert_eq!(c.size_log_q() + c.hermitian_dual().size_log_q(), 12);
    }
}
