//! The Gray map `Phi_M : R^N -> F_q^{2N}`, the symplectic map
//! `phi : R^N -> F_q^N x F_q^N`, and the associated weights and pairings.

use thiserror::Error;

use crate::codes::{from_fq, ConstacyclicCode, LinearCodeF};
use crate::gf::{Fe, Field};
use crate::linalg::RowSpace;
use crate::ring::RingElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("Gray matrix is singular")]
    Singular,
    #[error("constacyclic Gray transport needs characteristic 2")]
    NotCharTwo,
    #[error("Gray matrix is not constacyclic-compatible with alpha (need a = t alpha, s = b alpha, b != t)")]
    Incompatible,
    #[error("Gray image span differs from the transported generator")]
    ImageMismatch,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// `M = [[a, b], [s, t]]` in `GL_2(F_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayMatrix {
    pub a: Fe,
    pub b: Fe,
    pub s: Fe,
    pub t: Fe,
}

impl GrayMatrix {
    pub fn new(f: &Field, a: Fe, b: Fe, s: Fe, t: Fe) -> Result<GrayMatrix, MapError> {
        let m = GrayMatrix { a, b, s, t };
        if m.det(f).is_zero() {
            return Err(MapError::Singular);
        }
        Ok(m)
    }

    pub fn identity() -> GrayMatrix {
        GrayMatrix {
            a: Fe::ONE,
            b: Fe::ZERO,
            s: Fe::ZERO,
            t: Fe::ONE,
        }
    }

    /// `b = 1, t = w, a = t alpha, s = b alpha`.
    pub fn default_for(f: &Field, alpha: Fe) -> Result<GrayMatrix, MapError> {
        let t = f.primitive();
        Self::new(f, f.mul(t, alpha), Fe::ONE, alpha, t)
    }

    pub fn det(&self, f: &Field) -> Fe {
        f.sub(f.mul(self.a, self.t), f.mul(self.b, self.s))
    }

    /// `"a,b;s,t"` in element syntax.
    pub fn parse(f: &Field, text: &str) -> Result<GrayMatrix, String> {
        let cells: Vec<&str> = text.split([',', ';']).map(str::trim).collect();
        if cells.len() != 4 || text.matches(';').count() != 1 {
            return Err(format!("expected \"a,b;s,t\", got `{text}`"));
        }
        let v: Result<Vec<Fe>, _> = cells.iter().map(|c| f.parse(c)).collect();
        let v = v.map_err(|e| e.to_string())?;
        Self::new(f, v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
    }

    pub fn format(&self, f: &Field) -> String {
        format!(
            "{},{};{},{}",
            f.format(self.a),
            f.format(self.b),
            f.format(self.s),
            f.format(self.t)
        )
    }

    /// `lambda` with `M conj(M)^T = lambda I`, `lambda != 0`.
    pub fn omega_condition(&self, f: &Field) -> Option<Fe> {
        let h = |x: Fe, y: Fe| f.mul(x, f.conj(y));
        let top = f.add(h(self.a, self.a), h(self.b, self.b));
        let bottom = f.add(h(self.s, self.s), h(self.t, self.t));
        let cross = f.add(h(self.a, self.s), h(self.b, self.t));
        (cross.is_zero() && top == bottom && !top.is_zero()).then_some(top)
    }

    /// `a = t alpha`, `s = b alpha`, `b != t`.
    pub fn constacyclic_compatible(&self, f: &Field, alpha: Fe) -> bool {
        self.a == f.mul(self.t, alpha) && self.s == f.mul(self.b, alpha) && self.b != self.t
    }

    /// `r + uq -> (aq + s(r+q), bq + t(r+q))`.
    fn image(&self, f: &Field, x: RingElement) -> (Fe, Fe) {
        let (r, q) = (x.a, x.b);
        let rq = f.add(r, q);
        (
            f.add(f.mul(self.a, q), f.mul(self.s, rq)),
            f.add(f.mul(self.b, q), f.mul(self.t, rq)),
        )
    }
}

/// `Phi_M(v)`: coordinate `i` lands at positions `i` and `N + i`.
pub fn gray_map(f: &Field, m: &GrayMatrix, v: &[RingElement]) -> Vec<Fe> {
    let n = v.len();
    let mut out = vec![Fe::ZERO; 2 * n];
    for (i, &x) in v.iter().enumerate() {
        let (l, r) = m.image(f, x);
        out[i] = l;
        out[n + i] = r;
    }
    out
}

pub fn hamming_weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Gray weight: Hamming weight of the image.
pub fn gray_weight(f: &Field, m: &GrayMatrix, v: &[RingElement]) -> usize {
    hamming_weight(&gray_map(f, m, v))
}

/// `F_q`-span of `Phi_M(C)`.
pub fn gray_image_span(f: &Field, m: &GrayMatrix, code: &ConstacyclicCode) -> RowSpace {
    let basis = code.fq_basis();
    let rows = basis
        .basis()
        .row_vecs()
        .into_iter()
        .map(|r| gray_map(f, m, &from_fq(&r)))
        .collect();
    RowSpace::from_rows(f, 2 * code.len(), rows)
}

/// For `p = 2` and a compatible `M`, `Phi_M(C)` is the `alpha^2`-constacyclic
/// code of length `2N` generated by the same `g = prod M_i^{a_i}`. The result
/// is checked against the image span.
pub fn gray_image_code(m: &GrayMatrix, code: &ConstacyclicCode) -> Result<LinearCodeF, MapError> {
    let cs = code.cosets();
    let f = cs.field();
    if f.p() != 2 {
        return Err(MapError::NotCharTwo);
    }
    if !m.constacyclic_compatible(f, cs.alpha()) {
        return Err(MapError::Incompatible);
    }
    let lambda = f.mul(cs.alpha(), cs.alpha());
    let img = LinearCodeF::from_generator_poly(f, &code.generator_poly(), 2 * code.len(), lambda)
        .map_err(|_| MapError::ImageMismatch)?;
    if *img.space() != gray_image_span(f, m, code) {
        return Err(MapError::ImageMismatch);
    }
    Ok(img)
}

/// A pair of equal-length blocks `(a | b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVector {
    pub left: Vec<Fe>,
    pub right: Vec<Fe>,
}

impl SplitVector {
    pub fn new(left: Vec<Fe>, right: Vec<Fe>) -> Result<SplitVector, MapError> {
        if left.len() != right.len() {
            return Err(MapError::LengthMismatch(left.len(), right.len()));
        }
        Ok(SplitVector { left, right })
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }
}

/// `phi(r + uq) = (q | r)`.
pub fn phi_map(v: &[RingElement]) -> SplitVector {
    SplitVector {
        left: v.iter().map(|x| x.b).collect(),
        right: v.iter().map(|x| x.a).collect(),
    }
}

/// Positions `i` with `(a_i, b_i) != (0, 0)`.
pub fn symplectic_weight(x: &SplitVector) -> usize {
    x.left
        .iter()
        .zip(&x.right)
        .filter(|(a, b)| !a.is_zero() || !b.is_zero())
        .count()
}

/// `<(a|b), (a'|b')>_T = a . conj(b') - b . conj(a')`.
pub fn trace_inner_product(f: &Field, x: &SplitVector, y: &SplitVector) -> Result<Fe, MapError> {
    if x.len() != y.len() {
        return Err(MapError::LengthMismatch(x.len(), y.len()));
    }
    let dot = |u: &[Fe], v: &[Fe]| {
        u.iter()
            .zip(v)
            .fold(Fe::ZERO, |acc, (&p, &q)| f.add(acc, f.mul(p, f.conj(q))))
    };
    Ok(f.sub(dot(&x.left, &y.right), dot(&x.right, &y.left)))
}

/// Basis indices and value of a pair with nonzero trace product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceWitness {
    pub i: usize,
    pub j: usize,
    pub value: Fe,
}

/// Check `<phi(c1), phi(c2)>_T = 0` over an `F_q`-basis of `C`; the pairing
/// is sesquilinear over `F_q`, so a basis suffices.
pub fn trace_orthogonality_transfer(code: &ConstacyclicCode) -> Result<(), TraceWitness> {
    let f = &**code.cosets().field();
    let words: Vec<SplitVector> = code
        .fq_basis()
        .basis()
        .row_vecs()
        .iter()
        .map(|r| phi_map(&from_fq(r)))
        .collect();
    for (i, x) in words.iter().enumerate() {
        for (j, y) in words.iter().enumerate() {
            let value = trace_inner_product(f, x, y).expect("equal lengths");
            if !value.is_zero() {
                return Err(TraceWitness { i, j, value });
            }
        }
    }
    Ok(())
}
