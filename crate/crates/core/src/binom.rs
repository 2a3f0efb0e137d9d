//! Generalized binomial coefficients of a second-order recurrence sequence.
//!
//! For the fundamental sequence `u` of parameters `(p, q)`, the coefficient
//! `(r|k)_u` generalizes `u_r u_{r-1} ... u_{r-k+1} / (u_k ... u_1)` to the
//! cases where denominator terms vanish. Three independent routes compute it:
//!
//! * [`genbinom_pascal`] — a division-free Pascal-style row recurrence,
//!   total for every `(p, q)`. The primary route.
//! * [`genbinom_limit`] — replaces one parameter by a polynomial variable,
//!   divides the corresponding polynomial products exactly, and evaluates
//!   the quotient back at the parameter. Also total, and entirely
//!   independent of the Pascal recurrence.
//! * [`genbinom_quotient`] — the raw quotient of sequence terms, defined
//!   only when no denominator term is zero. The classical form, kept as an
//!   oracle for the other two.
//!
//! Route agreement is enforced by the acceptance suite; the Pascal route is
//! never trusted on its own.

use crate::arith::{ArithError, Poly, Scalar};

/// Errors raised by binomial-coefficient computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinomError {
    /// The quotient form is undefined: some `u_j` with `1 <= j <= k` is zero.
    DegenerateDenominator { zero_index: i64 },
    /// A coefficient with integer parameters came out non-integral. This
    /// contradicts a proved integrality property and is treated as a bug in
    /// the implementation, never as a data condition.
    NonIntegralValue { p: i64, q: i64, r: u32, k: u32, value: Scalar },
    /// Propagated polynomial-arithmetic failure (would contradict the exact
    /// divisibility the limit route relies on).
    Arith(ArithError),
}

impl std::fmt::Display for BinomError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BinomError::DegenerateDenominator { zero_index } => {
                write!(f, "quotient route undefined: u_{} = 0", zero_index)
            }
            BinomError::NonIntegralValue { p, q, r, k, value } => write!(
                f,
                "non-integral coefficient ({}|{}) = {} for p={}, q={}",
                r, k, value, p, q
            ),
            BinomError::Arith(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for BinomError {}

impl From<ArithError> for BinomError {
    fn from(e: ArithError) -> Self {
        BinomError::Arith(e)
    }
}

/// A single generalized-binomial request: parameters, row, column.
///
/// Defined for every integer `k`; the value is 0 outside `0 <= k <= r` and 1
/// at the row edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenBinomQuery {
    pub p: Scalar,
    pub q: Scalar,
    pub r: u32,
    pub k: i64,
}

impl GenBinomQuery {
    pub fn new(p: Scalar, q: Scalar, r: u32, k: i64) -> Self {
        GenBinomQuery { p, q, r, k }
    }
}

fn u_prefix(p: &Scalar, q: &Scalar, len: usize) -> Vec<Scalar> {
    let mut u = Vec::with_capacity(len);
    u.push(Scalar::zero());
    if len > 1 {
        u.push(Scalar::one());
        for r in 2..len {
            let next = &(p * &u[r - 1]) - &(q * &u[r - 2]);
            u.push(next);
        }
    }
    u
}

/// Full row `r` of the generalized binomial triangle, computed by the
/// division-free Pascal-style recurrence
/// `(n|k) = u_{k+1} * (n-1|k) - q * u_{n-k-1} * (n-1|k-1)`
/// with edges `(n|0) = (n|n) = 1`.
pub fn genbinom_row(p: &Scalar, q: &Scalar, r: u32) -> Vec<Scalar> {
    let u = u_prefix(p, q, (r as usize) + 1);
    let mut row = vec![Scalar::one()];
    for n in 1..=(r as usize) {
        let mut next = Vec::with_capacity(n + 1);
        next.push(Scalar::one());
        for k in 1..n {
            let a = &u[k + 1] * &row[k];
            let b = &(q * &u[n - k - 1]) * &row[k - 1];
            next.push(&a - &b);
        }
        next.push(Scalar::one());
        row = next;
    }
    row
}

/// `(r|k)_u` by the Pascal route. Total: no division ever occurs, so the
/// value exists even when sequence terms vanish.
pub fn genbinom_pascal(query: &GenBinomQuery) -> Scalar {
    if query.k < 0 || query.k > query.r as i64 {
        return Scalar::zero();
    }
    genbinom_row(&query.p, &query.q, query.r)[query.k as usize].clone()
}

/// The fundamental sequence with one parameter replaced by a polynomial
/// variable: `entries[r]` is the polynomial obtained from
/// `v_r = p * v_{r-1} - z * v_{r-2}`, `v_0 = 0`, `v_1 = 1`.
///
/// Products of these polynomials divide exactly wherever the quotient-form
/// binomial would, and evaluating the quotient at `z = q` recovers `(r|k)_u`
/// without ever dividing by a vanishing sequence term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolySequence {
    pub p: Scalar,
    pub entries: Vec<Poly>,
}

impl VPolySequence {
    /// Builds `v_0 .. v_{len-1}`.
    pub fn new(p: &Scalar, len: usize) -> Self {
        let mut entries = Vec::with_capacity(len);
        entries.push(Poly::zero());
        if len > 1 {
            entries.push(Poly::one());
            let z = Poly::monomial(Scalar::one(), 1);
            let pc = Poly::constant(p.clone());
            for r in 2..len {
                let next = &(&pc * &entries[r - 1]) - &(&z * &entries[r - 2]);
                entries.push(next);
            }
        }
        VPolySequence { p: p.clone(), entries }
    }
}

/// Like [`VPolySequence`] but perturbing the other parameter:
/// `w_r = t * w_{r-1} - q * w_{r-2}`. Each `w_r` is monic of degree `r - 1`
/// in `t`, hence never the zero polynomial.
fn first_param_polys(q: &Scalar, len: usize) -> Vec<Poly> {
    let mut entries = Vec::with_capacity(len);
    entries.push(Poly::zero());
    if len > 1 {
        entries.push(Poly::one());
        let t = Poly::monomial(Scalar::one(), 1);
        let qc = Poly::constant(q.clone());
        for r in 2..len {
            let next = &(&t * &entries[r - 1]) - &(&qc * &entries[r - 2]);
            entries.push(next);
        }
    }
    entries
}

fn product(polys: &[Poly], indices: impl Iterator<Item = usize>) -> Poly {
    let mut acc = Poly::one();
    for i in indices {
        acc = &acc * &polys[i];
    }
    acc
}

/// `(r|k)_u` by the polynomial-limit route: form the quotient of perturbed
/// polynomial products, divide exactly, evaluate at the true parameter.
///
/// The perturbation variable replaces `q` (the `v`-polynomials), except when
/// `p = 0`: there every even-index `v`-polynomial vanishes identically and
/// the quotient is 0/0, so the perturbation switches to the first parameter
/// (the `w`-polynomials), whose entries are monic and never vanish. Both
/// realizations compute the same value, because the quotient of perturbed
/// products is a polynomial in the perturbed parameter whose value at the
/// true parameter is `(r|k)_u`.
pub fn genbinom_limit(query: &GenBinomQuery) -> Result<Scalar, BinomError> {
    let (r, k) = (query.r as usize, query.k);
    if k < 0 || k > r as i64 {
        return Ok(Scalar::zero());
    }
    let k = k as usize;
    if k == 0 || k == r {
        return Ok(Scalar::one());
    }
    let (polys, eval_at) = if query.p.is_zero() {
        (first_param_polys(&query.q, r + 1), &query.p)
    } else {
        (VPolySequence::new(&query.p, r + 1).entries, &query.q)
    };
    let num = product(&polys, (r - k + 1)..=r);
    let den = product(&polys, 1..=k);
    let quotient = num.exact_div(&den)?;
    Ok(quotient.eval(eval_at))
}

/// `(r|k)_u` by the raw quotient `u_r ... u_{r-k+1} / (u_k ... u_1)`.
///
/// Errors with [`BinomError::DegenerateDenominator`] as soon as a zero
/// denominator term is found; that failure mode is exactly what the other
/// two routes exist to remove.
pub fn genbinom_quotient(query: &GenBinomQuery) -> Result<Scalar, BinomError> {
    let (r, k) = (query.r as i64, query.k);
    if k < 0 || k > r {
        return Ok(Scalar::zero());
    }
    let u = u_prefix(&query.p, &query.q, (query.r as usize) + 1);
    let mut den = Scalar::one();
    for j in 1..=k {
        let t = &u[j as usize];
        if t.is_zero() {
            return Err(BinomError::DegenerateDenominator { zero_index: j });
        }
        den = &den * t;
    }
    let mut num = Scalar::one();
    for j in (r - k + 1)..=r {
        num = &num * &u[j as usize];
    }
    Ok(&num / &den)
}

/// The Gaussian binomial polynomial
/// `(1-z^{m+n})...(1-z^{m+1}) / ((1-z^n)...(1-z))`, exact quotient of
/// degree `m*n`.
pub fn gaussian_binomial(m: u32, n: u32) -> Result<Poly, ArithError> {
    let one_minus_zj = |j: u32| {
        let mut coeffs = vec![Scalar::zero(); (j as usize) + 1];
        coeffs[0] = Scalar::one();
        coeffs[j as usize] = Scalar::from_int(-1);
        Poly::from_coeffs(coeffs)
    };
    // keep the sparse binomial on the left so each product pass is linear
    let mut num = Poly::one();
    for j in (m + 1)..=(m + n) {
        num = &one_minus_zj(j) * &num;
    }
    let mut den = Poly::one();
    for j in 1..=n {
        den = &one_minus_zj(j) * &den;
    }
    num.exact_div(&den)
}

/// Row report from [`integrality_check`]: with integer parameters every
/// coefficient in the row has denominator 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub p: i64,
    pub q: i64,
    pub r: u32,
    pub values: Vec<Scalar>,
}

/// Computes row `r` for integer parameters and confirms every value is an
/// integer. A non-integral value is reported as an error carrying the
/// offending position: it would be a counterexample to a proved property,
/// i.e. an implementation bug.
pub fn integrality_check(p: i64, q: i64, r: u32) -> Result<IntegralityReport, BinomError> {
    let ps = Scalar::from_int(p);
    let qs = Scalar::from_int(q);
    let values = genbinom_row(&ps, &qs, r);
    for (k, v) in values.iter().enumerate() {
        if !v.is_integer() {
            return Err(BinomError::NonIntegralValue {
                p,
                q,
                r,
                k: k as u32,
                value: v.clone(),
            });
        }
    }
    Ok(IntegralityReport { p, q, r, values })
}
