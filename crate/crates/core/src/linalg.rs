//! Dense matrices over `F_q` and exact Gaussian elimination.

use crate::gf::{Fe, Field};

/// Row-major dense matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Fe>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &Field, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = f.add(out.get(i, j), f.mul(a, o.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Entry-wise Frobenius conjugation.
    pub fn conj(&self, f: &Field) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.conj(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; zero rows are dropped. Returns the
    /// pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows = r;
        self.data.truncate(r * self.cols);
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }
}

/// A subspace of `F_q^n` held as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(f: &Field, mut m: Matrix) -> RowSpace {
        let pivots = m.rref(f);
        RowSpace { basis: m, pivots }
    }

    pub fn from_rows(f: &Field, cols: usize, rows: Vec<Vec<Fe>>) -> RowSpace {
        RowSpace::new(f, Matrix::from_rows(cols, rows))
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn len(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction against the basis.
    pub fn reduce(&self, f: &Field, v: &[Fe]) -> Vec<Fe> {
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let factor = w[c];
            if factor.is_zero() {
                continue;
            }
            for (j, &b) in self.basis.row(i).iter().enumerate() {
                w[j] = f.sub(w[j], f.mul(factor, b));
            }
        }
        w
    }

    pub fn contains(&self, f: &Field, v: &[Fe]) -> bool {
        self.reduce(f, v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, f: &Field, o: &RowSpace) -> bool {
        (0..o.dim()).all(|i| self.contains(f, o.basis.row(i)))
    }

    /// Basis of `{y : sum_j b_j y_j = 0 for every basis row b}` (the
    /// Euclidean dual), as an RREF row space.
    pub fn euclidean_dual(&self, f: &Field) -> RowSpace {
        let n = self.len();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut y = vec![Fe::ZERO; n];
            y[fc] = Fe::ONE;
            for (i, &pc) in self.pivots.iter().enumerate() {
                y[pc] = f.neg(self.basis.get(i, fc));
            }
            rows.push(y);
        }
        RowSpace::from_rows(f, n, rows)
    }

    /// `{y : sum_j b_j conj(y_j) = 0}`.
    pub fn hermitian_dual(&self, f: &Field) -> RowSpace {
        let e = self.euclidean_dual(f);
        RowSpace::new(f, e.basis.conj(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{field_create, Modulus};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rref_rank_and_duals() {
        let f = field_create(3, 1, Modulus::Builtin).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let k = rng.gen_range(1..5);
            let n = rng.gen_range(k..8);
            let rows: Vec<Vec<Fe>> = (0..k)
                .map(|_| (0..n).map(|_| Fe(rng.gen_range(0..9))).collect())
                .collect();
            let s = RowSpace::from_rows(&f, n, rows.clone());
            for r in &rows {
                assert!(s.contains(&f, r));
            }
            let d = s.euclidean_dual(&f);
            assert_eq!(d.dim() + s.dim(), n);
            let prod = s.basis().mul(&f, &d.basis().transpose());
            assert!(prod.is_zero());
            let h = s.hermitian_dual(&f);
            let prod = s.basis().mul(&f, &h.basis().conj(&f).transpose());
            assert!(prod.is_zero());
            assert_eq!(h.hermitian_dual(&f), s);
        }
    }

    #[test]
    fn identity_has_full_rank() {
        let f = field_create(2, 1, Modulus::Builtin).unwrap();
        assert_eq!(Matrix::identity(5).rank(&f), 5);
        assert_eq!(Matrix::zeros(3, 4).rank(&f), 0);
    }
}
