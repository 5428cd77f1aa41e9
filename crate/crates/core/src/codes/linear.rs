use std::sync::Arc;

use super::CodeError;
use crate::gf::{Fe, Field, Poly};
use crate::linalg::{Matrix, RowSpace};

/// Rows `x^j g(x)`, `0 <= j < n - deg g`, of a `lambda`-constacyclic code of
/// length `n`; requires `g | x^n - lambda`.
pub fn constacyclic_generator_matrix(f: &Field, g: &Poly, n: usize, lambda: Fe) -> Result<Matrix, CodeError> {
    let modulus = Poly::binomial(f, n, lambda);
    if g.is_zero() || !modulus.divisible_by(f, g) {
        return Err(CodeError::NotDivisor);
    }
    let deg = g.degree().unwrap_or(0);
    let rows = (0..n - deg)
        .map(|j| {
            let mut row = vec![Fe::ZERO; n];
            row[j..j + deg + 1].copy_from_slice(g.coeffs());
            row
        })
        .collect();
    Ok(Matrix::from_rows(n, rows))
}

/// A linear code over `F_q`, kept as an RREF generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCodeF {
    field: Arc<Field>,
    space: RowSpace,
    lambda: Option<Fe>,
    gen_poly: Option<Poly>,
}

impl LinearCodeF {
    pub fn from_space(field: &Arc<Field>, space: RowSpace) -> LinearCodeF {
        LinearCodeF {
            field: Arc::clone(field),
            space,
            lambda: None,
            gen_poly: None,
        }
    }

    pub fn from_rows(field: &Arc<Field>, n: usize, rows: Vec<Vec<Fe>>) -> LinearCodeF {
        Self::from_space(field, RowSpace::from_rows(field, n, rows))
    }

    /// The `lambda`-constacyclic code `<g>` of length `n`.
    pub fn from_generator_poly(field: &Arc<Field>, g: &Poly, n: usize, lambda: Fe) -> Result<LinearCodeF, CodeError> {
        let m = constacyclic_generator_matrix(field, g, n, lambda)?;
        Ok(LinearCodeF {
            field: Arc::clone(field),
            space: RowSpace::new(field, m),
            lambda: Some(lambda),
            gen_poly: Some(g.monic(field)),
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &RowSpace {
        &self.space
    }

    /// RREF generator matrix.
    pub fn generator_matrix(&self) -> &Matrix {
        self.space.basis()
    }

    /// A parity-check matrix (basis of the Euclidean dual).
    pub fn parity_check(&self) -> Matrix {
        self.space.euclidean_dual(&self.field).basis().clone()
    }

    pub fn lambda(&self) -> Option<Fe> {
        self.lambda
    }

    pub fn generator_poly(&self) -> Option<&Poly> {
        self.gen_poly.as_ref()
    }

    pub fn contains(&self, word: &[Fe]) -> bool {
        word.len() == self.len() && self.space.contains(&self.field, word)
    }

    pub fn contains_code(&self, other: &LinearCodeF) -> bool {
        self.len() == other.len() && self.space.contains_space(&self.field, &other.space)
    }

    /// `{y : sum_j c_j conj(y_j) = 0 for all c in C}`; the Hermitian dual of a
    /// `lambda`-constacyclic code is `conj(lambda)^{-1}`-constacyclic.
    pub fn hermitian_dual(&self) -> LinearCodeF {
        let f = &*self.field;
        LinearCodeF {
            field: Arc::clone(&self.field),
            space: self.space.hermitian_dual(f),
            lambda: self.lambda.and_then(|l| f.inv(f.conj(l)).ok()),
            gen_poly: None,
        }
    }

    /// First pair `(i, j)` of generator rows with nonzero Hermitian product,
    /// or `None` when `G conj(G)^T = 0`.
    pub fn gram_witness(&self) -> Option<(usize, usize)> {
        let f = &*self.field;
        let g = self.generator_matrix();
        let prod = g.mul(f, &g.conj(f).transpose());
        (0..prod.nrows())
            .flat_map(|i| (0..prod.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| !prod.get(i, j).is_zero())
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.gram_witness().is_none()
    }
}

impl PartialEq for LinearCodeF {
    fn eq(&self, o: &Self) -> bool {
        *self.field == *o.field && self.space == o.space
    }
}
