//! Exact matrices tied to the product recurrences: two standard
//! constructions (here called `A` and `Q`), their similarity through the
//! exchange matrix, and the match between their characteristic polynomial
//! and the relation coefficients built in [`crate::recurrence`].

use std::fmt;

use crate::arith::{Poly, Scalar};
use crate::recurrence::{jarden_relation, quotient_relation, RecurrenceError};

/// Square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, rows }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let rows = (0..dim)
            .map(|r| (0..dim).map(|c| f(r, c)).collect())
            .collect();
        Matrix { dim, rows }
    }

    pub fn zero(dim: usize) -> Self {
        Matrix::from_fn(dim, |_, _| Scalar::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_fn(dim, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    /// The exchange matrix: ones on the counter-diagonal. Its own inverse.
    pub fn exchange(dim: usize) -> Self {
        Matrix::from_fn(dim, |r, c| {
            if r + c == dim - 1 { Scalar::one() } else { Scalar::zero() }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| self.rows[c][r].clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        Matrix::from_fn(self.dim, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.dim {
                acc = &acc + &(&self.rows[r][k] * &rhs.rows[k][c]);
            }
            acc
        })
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            acc = &acc + &self.rows[i][i];
        }
        acc
    }

    fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| &self.rows[r][c] * s)
    }

    fn add(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| &self.rows[r][c] + &rhs.rows[r][c])
    }

    /// Exact determinant by Gaussian elimination with pivoting.
    #[allow(clippy::needless_range_loop)] // elimination double-indexes rows
    pub fn determinant(&self) -> Scalar {
        let n = self.dim;
        if n == 0 {
            return Scalar::one();
        }
        let mut m = self.rows.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
                Some(r) => r,
                None => return Scalar::zero(),
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                det = -&det;
            }
            let pivot = m[col][col].clone();
            det = &det * &pivot;
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..n {
                    let sub = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        det
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Classical binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
fn binomial(n: i64, k: i64) -> Scalar {
    if k < 0 || k > n {
        return Scalar::zero();
    }
    let mut acc = Scalar::one();
    for j in 0..k {
        acc = &(&acc * &Scalar::from_int(n - j)) / &Scalar::from_int(j + 1);
    }
    acc
}

/// `p^e` where `e` can only be negative at positions whose binomial factor
/// vanishes; those entries are zero and never reach the power computation.
fn weighted_entry(binom: Scalar, p: &Scalar, p_exp: i64, neg_q: &Scalar, q_exp: u64) -> Scalar {
    if binom.is_zero() {
        return Scalar::zero();
    }
    debug_assert!(p_exp >= 0);
    &(&binom * &p.pow(p_exp as u64)) * &neg_q.pow(q_exp)
}

/// The `(n+1) x (n+1)` matrix `A` with 0-indexed entry
/// `(r, c) = C(r, n-c) * p^{r+c-n} * (-q)^{n-c}`.
pub fn build_a(n: u32, p: &Scalar, q: &Scalar) -> Matrix {
    let n = n as i64;
    let neg_q = -q;
    Matrix::from_fn((n + 1) as usize, |r, c| {
        let (r, c) = (r as i64, c as i64);
        weighted_entry(binomial(r, n - c), p, r + c - n, &neg_q, (n - c) as u64)
    })
}

/// The `n x n` matrix `Q` with 1-indexed entry
/// `(r, c) = C(n-c, r-1) * p^{n-c-r+1} * (-q)^{r-1}`.
pub fn build_q(n: u32, p: &Scalar, q: &Scalar) -> Matrix {
    let n = n as i64;
    let neg_q = -q;
    Matrix::from_fn(n as usize, |r0, c0| {
        let (r, c) = (r0 as i64 + 1, c0 as i64 + 1);
        weighted_entry(binomial(n - c, r - 1), p, n - c - r + 1, &neg_q, (r - 1) as u64)
    })
}

/// Whether the dimension-`n` instance of `A` equals `E * Q_n^T * E`, with
/// `E` the exchange matrix (its own inverse).
pub fn similarity_check(n: u32, p: &Scalar, q: &Scalar) -> bool {
    assert!(n >= 1);
    let a = build_a(n - 1, p, q);
    let e = Matrix::exchange(n as usize);
    let conjugated = e.mul(&build_q(n, p, q).transpose()).mul(&e);
    a == conjugated
}

/// Monic characteristic polynomial `det(xI - M)`, by the Faddeev-LeVerrier
/// iteration. All divisions are by the integers `1..=dim`, so every
/// coefficient stays an exact rational.
pub fn char_poly(mat: &Matrix) -> Poly {
    let n = mat.dim();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = Matrix::zero(n);
    for k in 1..=n {
        // acc <- M * (acc + c_{n-k+1} I); c_{n-k} = -tr(acc) / k
        let shifted = acc.add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        acc = mat.mul(&shifted);
        coeffs[n - k] = -&(&acc.trace() / &Scalar::from_int(k as i64));
    }
    // keep full length: the polynomial is monic of degree n by construction
    debug_assert!(coeffs[n].is_one());
    Poly::from_coeffs(coeffs)
}

/// Reversal of the monic characteristic polynomial of a dimension-`n`
/// matrix into the ascending, constant-term-1 convention used by the
/// recurrence coefficient vectors.
pub fn reversed_char_coeffs(mat: &Matrix) -> Vec<Scalar> {
    let cp = char_poly(mat);
    let n = mat.dim();
    (0..=n).map(|i| cp.coeff(n - i)).collect()
}

/// Whether the reversed monic characteristic polynomial of `Q_n` equals the
/// signed `q`-power-weighted generalized-binomial coefficient vector (the
/// order-`n` relation from [`jarden_relation`] with `n - 1` factors).
pub fn charpoly_matches_jarden(n: u32, p: &Scalar, q: &Scalar) -> bool {
    assert!(n >= 1);
    let reversed = reversed_char_coeffs(&build_q(n, p, q));
    reversed == jarden_relation(p, q, n - 1).coeffs
}

/// The quotient-form coefficient vector for dimension `n`, defined only when
/// `u_1 .. u_n` has no zero factor. Used to cross-check the division-free
/// coefficients where both exist.
pub fn quotient_coeffs(n: u32, p: &Scalar, q: &Scalar) -> Result<Vec<Scalar>, RecurrenceError> {
    assert!(n >= 1);
    Ok(quotient_relation(p, q, n - 1)?.coeffs)
}
