use crate::gf::Fe;
use crate::linalg::{Matrix, RowSpace};
use crate::ring::{Ring, RingElement};

/// Flatten a word over `R` into `F_q^{2N}` as `[residue parts | u parts]`.
pub fn to_fq(word: &[RingElement]) -> Vec<Fe> {
    word.iter().map(|c| c.a).chain(word.iter().map(|c| c.b)).collect()
}

/// Inverse of [`to_fq`].
pub fn from_fq(v: &[Fe]) -> Vec<RingElement> {
    let n = v.len() / 2;
    (0..n).map(|i| RingElement::new(v[i], v[n + i])).collect()
}

/// `F_q`-span of the `R`-module generated by `rows`, in [`to_fq`] layout.
pub fn fq_span(ring: &Ring, n: usize, rows: &[Vec<RingElement>]) -> RowSpace {
    let vecs = rows
        .iter()
        .flat_map(|r| {
            let ur: Vec<RingElement> = r.iter().map(|&c| ring.mul(RingElement::U, c)).collect();
            [to_fq(r), to_fq(&ur)]
        })
        .collect();
    RowSpace::from_rows(ring.field(), 2 * n, vecs)
}

/// A generator matrix over `R` in standard form
///
/// ```text
/// [ I_k0   A      B  ]
/// [ 0      u I_k1 u D]
/// ```
///
/// up to the column permutation `perm` (block order: unit pivots, u-pivots,
/// rest). `A` and `D` have entries in `F_q`. Rows are stored in the original
/// column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RModuleMatrix {
    n: usize,
    rows: Vec<Vec<RingElement>>,
    k0: usize,
    k1: usize,
    perm: Vec<usize>,
}

impl RModuleMatrix {
    /// Row-reduce the module generated by `rows` to standard form.
    pub fn standard_form(ring: &Ring, n: usize, rows: Vec<Vec<RingElement>>) -> RModuleMatrix {
        let f = &**ring.field();
        let mut rows: Vec<Vec<RingElement>> = rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect();
        let mut unit_pivots = Vec::new();
        let mut top = 0;
        // Unit pivots: any unit in the unprocessed rows, scanned column-major.
        while let Some((c, r)) = (0..n)
            .filter(|c| !unit_pivots.contains(c))
            .find_map(|c| (top..rows.len()).find(|&r| rows[r][c].is_unit()).map(|r| (c, r)))
        {
            rows.swap(top, r);
            let inv = ring.inv(rows[top][c]).expect("unit");
            for x in rows[top].iter_mut() {
                *x = ring.mul(*x, inv);
            }
            let pivot_row = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let t = row[c];
                if i == top || t.is_zero() {
                    continue;
                }
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = ring.sub(*x, ring.mul(t, p));
                }
            }
            unit_pivots.push(c);
            top += 1;
        }

        // The remaining rows lie in u F_q^n; reduce their u-parts over F_q.
        let mut lower = Matrix::from_rows(n, rows[top..].iter().map(|r| r.iter().map(|c| c.b).collect()).collect());
        let u_pivots = lower.rref(f);
        rows.truncate(top);
        let lower_rows: Vec<Vec<RingElement>> = lower
            .row_vecs()
            .into_iter()
            .map(|r| r.into_iter().map(|b| RingElement::new(Fe::ZERO, b)).collect())
            .collect();
        // Clear the u-parts of the top rows at the u-pivot columns.
        for row in rows.iter_mut() {
            for (j, &c) in u_pivots.iter().enumerate() {
                let t = row[c].b;
                if t.is_zero() {
                    continue;
                }
                for (x, &l) in row.iter_mut().zip(&lower_rows[j]) {
                    x.b = f.sub(x.b, f.mul(t, l.b));
                }
            }
        }
        let k0 = rows.len();
        let k1 = lower_rows.len();
        rows.extend(lower_rows);

        let mut perm: Vec<usize> = unit_pivots;
        perm.extend(&u_pivots);
        let rest: Vec<usize> = (0..n).filter(|c| !perm.contains(c)).collect();
        perm.extend(rest);
        RModuleMatrix { n, rows, k0, k1, perm }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k0(&self) -> usize {
        self.k0
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    /// `log_q |C| = 2 k0 + k1`.
    pub fn size_log_q(&self) -> usize {
        2 * self.k0 + self.k1
    }

    pub fn rows(&self) -> &[Vec<RingElement>] {
        &self.rows
    }

    /// Column order putting the matrix in block form.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Rows with columns permuted into block form.
    pub fn permuted_rows(&self) -> Vec<Vec<RingElement>> {
        self.rows.iter().map(|r| self.perm.iter().map(|&c| r[c]).collect()).collect()
    }

    /// Whether `G conj(G)^T = 0` over `R`.
    pub fn gram_is_zero(&self, ring: &Ring) -> bool {
        self.rows
            .iter()
            .all(|x| self.rows.iter().all(|y| ring.hermitian(x, y).is_zero()))
    }

    /// Generator of the Hermitian dual module,
    ///
    /// ```text
    /// [ -conj(B)^T + conj(D)^T conj(A)^T   -conj(D)^T   I ]
    /// [ -u conj(A)^T                        u I          0 ]
    /// ```
    ///
    /// returned in standard form over the original column order.
    pub fn dual(&self, ring: &Ring) -> RModuleMatrix {
        let f = &**ring.field();
        let (n, k0, k1) = (self.n, self.k0, self.k1);
        let rest = n - k0 - k1;
        let g = self.permuted_rows();
        // a[i][j] = A_{ij} in F_q, b[i][j] = B_{ij} in R, d[i][j] = D_{ij} in F_q
        let a = |i: usize, j: usize| g[i][k0 + j].a;
        let b = |i: usize, j: usize| g[i][k0 + k1 + j];
        let d = |i: usize, j: usize| g[k0 + i][k0 + k1 + j].b;

        let mut out: Vec<Vec<RingElement>> = Vec::with_capacity(rest + k1);
        for t in 0..rest {
            let mut row = vec![RingElement::ZERO; n];
            for i in 0..k0 {
                // (-conj(B)^T + conj(D)^T conj(A)^T)_{t,i}
                let mut v = ring.neg(ring.conj(b(i, t)));
                for j in 0..k1 {
                    let da = f.mul(f.conj(d(j, t)), f.conj(a(i, j)));
                    v = ring.add(v, RingElement::scalar(da));
                }
                row[i] = v;
            }
            for j in 0..k1 {
                row[k0 + j] = RingElement::scalar(f.neg(f.conj(d(j, t))));
            }
            row[k0 + k1 + t] = RingElement::ONE;
            out.push(row);
        }
        for j in 0..k1 {
            let mut row = vec![RingElement::ZERO; n];
            for i in 0..k0 {
                row[i] = RingElement::new(Fe::ZERO, f.neg(f.conj(a(i, j))));
            }
            row[k0 + j] = RingElement::U;
            out.push(row);
        }
        // undo the column permutation
        let unpermuted = out
            .into_iter()
            .map(|r| {
                let mut o = vec![RingElement::ZERO; n];
                for (pos, &c) in self.perm.iter().enumerate() {
                    o[c] = r[pos];
                }
                o
            })
            .collect();
        RModuleMatrix::standard_form(ring, n, unpermuted)
    }

    /// `F_q`-span of the rows in [`to_fq`] layout.
    pub fn fq_span(&self, ring: &Ring) -> RowSpace {
        fq_span(ring, self.n, &self.rows)
    }
}
