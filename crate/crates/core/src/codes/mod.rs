//! `alpha(1+u)`-constacyclic codes over `R`, stored as one exponent per
//! cyclotomic coset: `C = < prod M_i^{a_i} >` with `0 <= a_i <= 2p^e`.

mod linear;
mod rmodule;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use linear::{constacyclic_generator_matrix, LinearCodeF};
pub use rmodule::{from_fq, fq_span, to_fq, RModuleMatrix};

use crate::cyclo::{CosetStructure, CycloError};
use crate::gf::{field_create, Fe, GfError, Modulus, Poly};
use crate::linalg::RowSpace;
use crate::ring::{Ring, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("exponent {a} for coset {rep} exceeds the bound {bound}")]
    ExponentOutOfRange { rep: u64, a: u32, bound: u32 },
    #[error("{0} is not a coset representative")]
    UnknownRep(u64),
    #[error("generator does not divide x^n - lambda")]
    NotDivisor,
    #[error("code has q^{size_log_q} words, over the budget of {budget}")]
    BudgetExceeded { size_log_q: usize, budget: u64 },
    #[error("bad code descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// An ideal of `R[x]/<x^N - alpha(1+u)>`.
#[derive(Clone, Debug)]
pub struct ConstacyclicCode {
    cs: Arc<CosetStructure>,
    /// Indexed like `cs.cosets()`.
    exps: Vec<u32>,
}

impl PartialEq for ConstacyclicCode {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = (&self.cs, &o.cs);
        self.exps == o.exps
            && (Arc::ptr_eq(a, b)
                || (**a.field() == **b.field() && a.alpha() == b.alpha() && a.n() == b.n() && a.e() == b.e()))
    }
}

impl ConstacyclicCode {
    /// Exponents in coset order.
    pub fn new(cs: &Arc<CosetStructure>, exps: Vec<u32>) -> Result<ConstacyclicCode, CodeError> {
        assert_eq!(exps.len(), cs.cosets().len(), "one exponent per coset");
        let bound = 2 * cs.pe();
        for (c, &a) in cs.cosets().iter().zip(&exps) {
            if a > bound {
                return Err(CodeError::ExponentOutOfRange { rep: c.rep, a, bound });
            }
        }
        Ok(ConstacyclicCode {
            cs: Arc::clone(cs),
            exps,
        })
    }

    /// Exponents keyed by coset representative; absent cosets get 0.
    pub fn from_reps(cs: &Arc<CosetStructure>, reps: &[(u64, u32)]) -> Result<ConstacyclicCode, CodeError> {
        let mut exps = vec![0; cs.cosets().len()];
        for &(rep, a) in reps {
            let i = cs.index_of_rep(rep).ok_or(CodeError::UnknownRep(rep))?;
            exps[i] = a;
        }
        Self::new(cs, exps)
    }

    /// `R^N`.
    pub fn full(cs: &Arc<CosetStructure>) -> ConstacyclicCode {
        Self::new(cs, vec![0; cs.cosets().len()]).expect("in range")
    }

    /// `u R^N`.
    pub fn u_ambient(cs: &Arc<CosetStructure>) -> ConstacyclicCode {
        Self::new(cs, vec![cs.pe(); cs.cosets().len()]).expect("in range")
    }

    pub fn zero(cs: &Arc<CosetStructure>) -> ConstacyclicCode {
        Self::new(cs, vec![2 * cs.pe(); cs.cosets().len()]).expect("in range")
    }

    pub fn cosets(&self) -> &Arc<CosetStructure> {
        &self.cs
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `(rep, a)` pairs in coset order.
    pub fn exponents_by_rep(&self) -> Vec<(u64, u32)> {
        self.cs.cosets().iter().zip(&self.exps).map(|(c, &a)| (c.rep, a)).collect()
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.cs.field())
    }

    /// `N = p^e n`.
    pub fn len(&self) -> usize {
        self.cs.length()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `2p^e`.
    pub fn bound(&self) -> u32 {
        2 * self.cs.pe()
    }

    /// `log_q |C| = 2N - sum a_i deg M_i`.
    pub fn size_log_q(&self) -> usize {
        let used: usize = self
            .cs
            .cosets()
            .iter()
            .zip(&self.exps)
            .map(|(c, &a)| a as usize * c.degree())
            .sum();
        2 * self.len() - used
    }

    /// `g(x) = prod M_i^{a_i}` over `F_q`, of degree at most `2N`.
    pub fn generator_poly(&self) -> Poly {
        let f = &**self.cs.field();
        self.cs
            .cosets()
            .iter()
            .zip(&self.exps)
            .fold(Poly::one(), |acc, (c, &a)| acc.mul(f, &c.poly.pow(f, a as u64)))
    }

    /// `lambda = alpha(1+u)`.
    pub fn shift_constant(&self) -> RingElement {
        let a = self.cs.alpha();
        RingElement::new(a, a)
    }

    fn with_exps(&self, exps: Vec<u32>) -> ConstacyclicCode {
        ConstacyclicCode {
            cs: Arc::clone(&self.cs),
            exps,
        }
    }

    /// Exponent of the partner coset becomes `2p^e - a_i`.
    pub fn hermitian_dual(&self) -> ConstacyclicCode {
        let mut out = vec![0; self.exps.len()];
        for (c, &a) in self.cs.cosets().iter().zip(&self.exps) {
            out[c.partner] = self.bound() - a;
        }
        self.with_exps(out)
    }

    /// `C` is contained in `D` iff every exponent of `D` is at most that of `C`.
    pub fn is_subcode_of(&self, d: &ConstacyclicCode) -> bool {
        self.exps.iter().zip(&d.exps).all(|(a, b)| b <= a)
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.is_subcode_of(&self.hermitian_dual())
    }

    /// Exponents of `Tor(C) = {b : ub in C}`: `max(a - p^e, 0)`.
    pub fn torsion_exponents(&self) -> Vec<u32> {
        let pe = self.cs.pe();
        self.exps.iter().map(|&a| a.saturating_sub(pe)).collect()
    }

    /// Exponents of `Res(C) = C mod u`: `min(a, p^e)`.
    pub fn residue_exponents(&self) -> Vec<u32> {
        let pe = self.cs.pe();
        self.exps.iter().map(|&a| a.min(pe)).collect()
    }

    fn field_code(&self, exps: &[u32]) -> LinearCodeF {
        let f = self.cs.field();
        let g = self
            .cs
            .cosets()
            .iter()
            .zip(exps)
            .fold(Poly::one(), |acc, (c, &a)| acc.mul(f, &c.poly.pow(f, a as u64)));
        // x^N - alpha = (x^n - beta)^{p^e}
        LinearCodeF::from_generator_poly(f, &g, self.len(), self.cs.alpha()).expect("factor of x^N - alpha")
    }

    pub fn torsion(&self) -> LinearCodeF {
        self.field_code(&self.torsion_exponents())
    }

    pub fn residue(&self) -> LinearCodeF {
        self.field_code(&self.residue_exponents())
    }

    /// `g` reduced modulo `x^N - alpha(1+u)`.
    pub fn generator_word(&self) -> Vec<RingElement> {
        let ring = self.ring();
        let coeffs: Vec<RingElement> = self
            .generator_poly()
            .coeffs()
            .iter()
            .map(|&c| RingElement::scalar(c))
            .collect();
        ring.fold_constacyclic(&coeffs, self.len(), self.shift_constant())
    }

    /// The `N` shifts `x^j g` as words over `R`; they generate `C` as an
    /// `R`-module.
    pub fn shifted_generators(&self) -> Vec<Vec<RingElement>> {
        let ring = self.ring();
        let lambda = self.shift_constant();
        let mut cur = self.generator_word();
        let mut out = Vec::with_capacity(self.len());
        for _ in 0..self.len() {
            let next = ring.shift(&cur, lambda);
            out.push(cur);
            cur = next;
        }
        out
    }

    /// `F_q`-basis of `C` in `[residue | u-part]` layout, length `2N`.
    pub fn fq_basis(&self) -> RowSpace {
        fq_span(&self.ring(), self.len(), &self.shifted_generators())
    }

    /// Standard-form generator matrix over `R`.
    pub fn standard_form(&self) -> RModuleMatrix {
        RModuleMatrix::standard_form(&self.ring(), self.len(), self.shifted_generators())
    }

    /// Matrix oracle for self-orthogonality: `G conj(G)^T = 0`.
    pub fn gram_self_orthogonal(&self) -> bool {
        self.standard_form().gram_is_zero(&self.ring())
    }

    pub fn contains(&self, word: &[RingElement]) -> bool {
        word.len() == self.len() && self.fq_basis().contains(self.cs.field(), &to_fq(word))
    }

    /// Call `visit` on every codeword (including zero); refuses when
    /// `|C| > budget`.
    pub fn for_each_codeword(&self, budget: u64, mut visit: impl FnMut(&[RingElement])) -> Result<(), CodeError> {
        let basis = self.fq_basis();
        let k = basis.dim();
        let q = self.cs.field().order() as u64;
        let size = (q as u128).checked_pow(k as u32);
        if size.is_none_or(|s| s > budget as u128) {
            return Err(CodeError::BudgetExceeded { size_log_q: k, budget });
        }
        let f = &**self.cs.field();
        let n2 = basis.len();
        let mut digits = vec![0u32; k];
        let mut word = vec![Fe::ZERO; n2];
        loop {
            visit(&from_fq(&word));
            // odometer increment, updating `word` incrementally
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                let row = basis.basis().row(i);
                let old = Fe(digits[i]);
                digits[i] = (digits[i] + 1) % q as u32;
                let new = Fe(digits[i]);
                let delta = f.sub(new, old);
                for (w, &r) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(delta, r));
                }
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
        }
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        let f = &**self.cs.field();
        CodeDescriptor {
            field: FieldDesc {
                p: self.cs.p(),
                m: self.cs.m(),
            },
            alpha: f.format(self.cs.alpha()),
            n: self.cs.n(),
            e: self.cs.e(),
            exponents: self.exponents_by_rep().into_iter().collect(),
            size_log_q: self.size_log_q(),
            generator_poly: self.generator_poly().format_coeffs(f),
        }
    }

    /// Rebuild a code from its descriptor over the builtin field; the size
    /// and generator fields are checked when present.
    pub fn from_descriptor(d: &CodeDescriptor) -> Result<ConstacyclicCode, CodeError> {
        let field = field_create(d.field.p, d.field.m, Modulus::Builtin)?;
        let alpha = field.parse(&d.alpha)?;
        let cs = Arc::new(CosetStructure::build(&field, alpha, d.n, d.e)?);
        let reps: Vec<(u64, u32)> = d.exponents.iter().map(|(&r, &a)| (r, a)).collect();
        let code = Self::from_reps(&cs, &reps)?;
        if code.size_log_q() != d.size_log_q {
            return Err(CodeError::Descriptor(format!(
                "size_log_q {} does not match the exponents ({})",
                d.size_log_q,
                code.size_log_q()
            )));
        }
        if !d.generator_poly.is_empty() && code.generator_poly().format_coeffs(&field) != d.generator_poly {
            return Err(CodeError::Descriptor("generator_poly does not match the exponents".into()));
        }
        Ok(code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u32,
    pub m: u32,
}

/// JSON exchange form of a [`ConstacyclicCode`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDesc,
    pub alpha: String,
    pub n: u64,
    pub e: u32,
    pub exponents: BTreeMap<u64, u32>,
    pub size_log_q: usize,
    #[serde(default)]
    pub generator_poly: Vec<String>,
}
