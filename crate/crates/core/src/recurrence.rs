//! Recurrences annihilating products of sequences that share `(p, q)`.
//!
//! The central construction is [`jarden_relation`]: a product of `n`
//! solutions of `x_r = p*x_{r-1} - q*x_{r-2}` satisfies a fixed recurrence of
//! order `n + 1` whose coefficients are signed, `q`-power-weighted
//! generalized binomial coefficients. Because those coefficients come from
//! the division-free routes in [`crate::binom`], the relation exists even
//! when the fundamental sequence has vanishing terms — the case where the
//! classical quotient-form coefficients ([`quotient_relation`]) break down.
//!
//! [`degenerate_relation`] produces the short sparse recurrence available
//! when some `u_k = 0`, and [`verify_relation`] checks any relation against
//! a window of exact values.

use serde::{Deserialize, Serialize};

use crate::arith::Scalar;
use crate::binom::{genbinom_quotient, genbinom_row, BinomError, GenBinomQuery};
use crate::sequences::{u_term, SequenceDef, SequenceError, SequenceWindow};

/// Errors raised by recurrence construction and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    /// The quotient-form coefficients are undefined: some `u_j` vanishes
    /// within the required range.
    DegenerateDenominator { zero_index: i64 },
    /// The sparse-relation hypothesis `u_k = 0` does not hold.
    HypothesisViolated { k: i64, u_k: Scalar },
    /// The supplied window does not cover the indices a check needs.
    InsufficientWindow { needed_from: i64, needed_to: i64 },
    /// Propagated sequence-evaluation failure.
    Sequence(SequenceError),
}

impl std::fmt::Display for RecurrenceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecurrenceError::DegenerateDenominator { zero_index } => {
                write!(f, "quotient form undefined: u_{} = 0", zero_index)
            }
            RecurrenceError::HypothesisViolated { k, u_k } => {
                write!(f, "hypothesis u_{} = 0 violated: u_{} = {}", k, k, u_k)
            }
            RecurrenceError::InsufficientWindow { needed_from, needed_to } => {
                write!(f, "window must cover indices {}..={}", needed_from, needed_to)
            }
            RecurrenceError::Sequence(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for RecurrenceError {}

impl From<SequenceError> for RecurrenceError {
    fn from(e: SequenceError) -> Self {
        RecurrenceError::Sequence(e)
    }
}

/// A linear recurrence with constant exact coefficients, in the convention
/// `sum_i coeffs[i] * X(m - i) = 0` with `coeffs[0] = 1`.
///
/// The order is `coeffs.len() - 1`. Trailing coefficients may be zero (they
/// are when `q = 0`), so the vector length is structural, not minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceRelation {
    pub p: Scalar,
    pub q: Scalar,
    pub coeffs: Vec<Scalar>,
}

impl RecurrenceRelation {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `sum_i c_i * X(m - i)` over the window, or `None` if the window does
    /// not cover `m - order ..= m`.
    pub fn residual(&self, window: &ValueWindow, m: i64) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let x = window.get(m - i as i64)?;
            acc = &acc + &(c * x);
        }
        Some(acc)
    }
}

/// A plain indexed window of exact values, the stream shape consumed by
/// [`verify_relation`]. Unlike [`SequenceWindow`] it carries no defining
/// recurrence: any exactly-computed stream (products, expression sides)
/// fits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueWindow {
    pub start: i64,
    pub values: Vec<Scalar>,
}

impl ValueWindow {
    pub fn new(start: i64, values: Vec<Scalar>) -> Self {
        ValueWindow { start, values }
    }

    pub fn get(&self, index: i64) -> Option<&Scalar> {
        let offset = index.checked_sub(self.start)?;
        if offset < 0 {
            return None;
        }
        self.values.get(offset as usize)
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }
}

impl From<SequenceWindow> for ValueWindow {
    fn from(w: SequenceWindow) -> Self {
        ValueWindow::new(w.start_index, w.values)
    }
}

/// Outcome of a relation check over a range of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    /// Every residual in the range was exactly zero.
    Holds { checked: usize },
    /// First index where the residual was nonzero.
    Fails { at: i64, residual: Scalar },
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Holds { .. })
    }
}

/// The order-`n+1` recurrence annihilating any product of `n` solutions:
/// `coeffs[i] = (-1)^i * q^{i(i-1)/2} * (n+1|i)_u` for `i = 0 ..= n+1`.
///
/// Total for every `(p, q)` because the coefficients come from the
/// division-free binomial routes. `n = 0` is the constant case `(1, -1)`.
pub fn jarden_relation(p: &Scalar, q: &Scalar, n: u32) -> RecurrenceRelation {
    let row = genbinom_row(p, q, n + 1);
    let coeffs = signed_weighted(q, &row);
    RecurrenceRelation { p: p.clone(), q: q.clone(), coeffs }
}

/// Applies the alternating sign and `q^{i(i-1)/2}` weight to a binomial row.
fn signed_weighted(q: &Scalar, row: &[Scalar]) -> Vec<Scalar> {
    row.iter()
        .enumerate()
        .map(|(i, b)| {
            let i = i as u64;
            let w = q.pow(i * i.saturating_sub(1) / 2);
            let signed = if i.is_multiple_of(2) { b.clone() } else { -b };
            &signed * &w
        })
        .collect()
}

/// The same relation computed from raw term quotients
/// `u_{n+1} u_n ... u_{n-i+2} / (u_i ... u_1)`, defined only when
/// `u_1 ... u_{n+1}` has no zero factor.
///
/// Exists to demonstrate agreement with [`jarden_relation`] on its domain;
/// its failure on degenerate sequences is the limitation the division-free
/// construction removes.
pub fn quotient_relation(p: &Scalar, q: &Scalar, n: u32) -> Result<RecurrenceRelation, RecurrenceError> {
    for j in 1..=(n as i64 + 1) {
        if u_term(p, q, j)?.is_zero() {
            return Err(RecurrenceError::DegenerateDenominator { zero_index: j });
        }
    }
    let mut row = Vec::with_capacity(n as usize + 2);
    for i in 0..=(n as i64 + 1) {
        let query = GenBinomQuery::new(p.clone(), q.clone(), n + 1, i);
        let value = genbinom_quotient(&query).map_err(|e| match e {
            BinomError::DegenerateDenominator { zero_index } => {
                RecurrenceError::DegenerateDenominator { zero_index }
            }
            other => panic!("quotient route failed unexpectedly: {}", other),
        })?;
        row.push(value);
    }
    Ok(RecurrenceRelation {
        p: p.clone(),
        q: q.clone(),
        coeffs: signed_weighted(q, &row),
    })
}

/// The sparse order-`k` recurrence `X(m) - u_{k+1}^n * X(m-k) = 0`,
/// available for products of `n` solutions whenever `u_k = 0`.
pub fn degenerate_relation(
    p: &Scalar,
    q: &Scalar,
    n: u32,
    k: u32,
) -> Result<RecurrenceRelation, RecurrenceError> {
    let uk = u_term(p, q, k as i64)?;
    if !uk.is_zero() {
        return Err(RecurrenceError::HypothesisViolated { k: k as i64, u_k: uk });
    }
    let multiplier = u_term(p, q, k as i64 + 1)?.pow(n as u64);
    let mut coeffs = vec![Scalar::zero(); k as usize + 1];
    coeffs[0] = Scalar::one();
    coeffs[k as usize] = -&multiplier;
    Ok(RecurrenceRelation { p: p.clone(), q: q.clone(), coeffs })
}

/// A product `X(m) = prod_j x_j(m)` of sequences sharing `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<SequenceDef>,
}

impl ProductSpec {
    /// Construction enforces a nonempty factor list with identical `(p, q)`.
    pub fn new(factors: Vec<SequenceDef>) -> Result<Self, String> {
        let first = factors
            .first()
            .ok_or_else(|| "product needs at least one factor".to_string())?;
        let (p, q) = (first.p.clone(), first.q.clone());
        if factors.iter().any(|f| f.p != p || f.q != q) {
            return Err("all factors must share the same (p, q)".to_string());
        }
        Ok(ProductSpec { factors })
    }

    pub fn factors(&self) -> &[SequenceDef] {
        &self.factors
    }

    pub fn p(&self) -> &Scalar {
        &self.factors[0].p
    }

    pub fn q(&self) -> &Scalar {
        &self.factors[0].q
    }

    /// Materializes the product over `len` consecutive indices.
    pub fn window(&self, start: i64, len: usize) -> Result<ValueWindow, RecurrenceError> {
        let mut values = vec![Scalar::one(); len];
        for f in &self.factors {
            let w = f.window(start, len)?;
            for (acc, v) in values.iter_mut().zip(w.values.iter()) {
                *acc = &*acc * v;
            }
        }
        Ok(ValueWindow::new(start, values))
    }
}

/// Exact value of the product at one index.
pub fn eval_product(spec: &ProductSpec, m: i64) -> Result<Scalar, RecurrenceError> {
    let mut acc = Scalar::one();
    for f in spec.factors() {
        acc = &acc * &f.term(m)?;
    }
    Ok(acc)
}

/// Checks `sum_i c_i X(m-i) = 0` for every `m` in `m_lo ..= m_hi`, reporting
/// the first failure. The window must cover `m_lo - order ..= m_hi`.
pub fn verify_relation(
    rel: &RecurrenceRelation,
    window: &ValueWindow,
    m_lo: i64,
    m_hi: i64,
) -> Result<Verification, RecurrenceError> {
    let needed_from = m_lo - rel.order() as i64;
    if window.get(needed_from).is_none() || window.get(m_hi).is_none() {
        return Err(RecurrenceError::InsufficientWindow { needed_from, needed_to: m_hi });
    }
    let mut checked = 0;
    for m in m_lo..=m_hi {
        let residual = rel.residual(window, m).expect("window coverage checked");
        if !residual.is_zero() {
            return Ok(Verification::Fails { at: m, residual });
        }
        checked += 1;
    }
    Ok(Verification::Holds { checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn ints(cs: &[i64]) -> Vec<Scalar> {
        cs.iter().map(|&c| s(c)).collect()
    }

    #[test]
    fn order_one_recovers_defining_recurrence() {
        for (p, q) in [(1, -1), (2, 4), (0, 3), (7, 2)] {
            let rel = jarden_relation(&s(p), &s(q), 1);
            assert_eq!(rel.coeffs, ints(&[1, -p, q]));
        }
    }

    #[test]
    fn cube_relation_fibonacci() {
        let rel = jarden_relation(&s(1), &s(-1), 3);
        assert_eq!(rel.coeffs, ints(&[1, -3, -6, 3, 1]));
    }

    #[test]
    fn sixth_power_relation_degenerate_params() {
        let rel = jarden_relation(&s(1), &s(1), 6);
        assert_eq!(rel.coeffs, ints(&[1, -1, 0, -2, 2, 0, 1, -1]));
    }

    #[test]
    fn cube_relation_derived_signs() {
        // brute-force: the relation annihilates u_m^3 for m = 4..20
        let rel = jarden_relation(&s(2), &s(4), 3);
        assert_eq!(rel.coeffs, ints(&[1, 8, 0, 512, 4096]));
        let u = SequenceDef::fundamental(s(2), s(4));
        for m in 4i64..=20 {
            let mut acc = Scalar::zero();
            for (i, c) in rel.coeffs.iter().enumerate() {
                let x = u.term(m - i as i64).unwrap();
                acc = &acc + &(c * &x.pow(3));
            }
            assert_eq!(acc, Scalar::zero(), "m = {}", m);
        }
    }

    #[test]
    fn printed_sign_variant_fails_direct_substitution() {
        // A sign variant of the cube relation sometimes quoted as
        // (1, -8, 0, -512, 4096) fails immediately at m = 4; the derived
        // signs above are the correct ones.
        let u = SequenceDef::fundamental(s(2), s(4));
        let wrong = RecurrenceRelation { p: s(2), q: s(4), coeffs: ints(&[1, -8, 0, -512, 4096]) };
        let cubes: Vec<Scalar> = (0..=20)
            .map(|m| u.term(m).unwrap().pow(3))
            .collect();
        let window = ValueWindow::new(0, cubes);
        let v = verify_relation(&wrong, &window, 4, 20).unwrap();
        assert_eq!(v, Verification::Fails { at: 4, residual: s(-1024) });
    }

    #[test]
    fn constant_case() {
        let rel = jarden_relation(&s(9), &s(5), 0);
        assert_eq!(rel.coeffs, ints(&[1, -1]));
    }

    #[test]
    fn quotient_relation_agreement_and_failure() {
        let a = quotient_relation(&s(1), &s(-1), 3).unwrap();
        let b = jarden_relation(&s(1), &s(-1), 3);
        assert_eq!(a, b);

        let c = quotient_relation(&s(2), &s(3), 1).unwrap();
        assert_eq!(c.coeffs, ints(&[1, -2, 3]));

        // p = q = 1 has u_3 = 0, so n = 5 needs u_1..u_6 and fails
        assert_eq!(
            quotient_relation(&s(1), &s(1), 5),
            Err(RecurrenceError::DegenerateDenominator { zero_index: 3 })
        );
    }

    #[test]
    fn degenerate_relation_cases() {
        // p=2, q=4, u_3 = 0, u_4 = -8: cubes satisfy X(m) = -512 X(m-3)
        let rel = degenerate_relation(&s(2), &s(4), 3, 3).unwrap();
        assert_eq!(rel.coeffs, ints(&[1, 0, 0, 512]));
        let u = SequenceDef::fundamental(s(2), s(4));
        let cubes: Vec<Scalar> = (0..=40).map(|m| u.term(m).unwrap().pow(3)).collect();
        let window = ValueWindow::new(0, cubes);
        assert!(verify_relation(&rel, &window, 4, 40).unwrap().holds());

        // p = q = 1, u_4 = -1: x_m = -x_{m-3}
        let rel = degenerate_relation(&s(1), &s(1), 1, 3).unwrap();
        assert_eq!(rel.coeffs, ints(&[1, 0, 0, 1]));

        assert_eq!(
            degenerate_relation(&s(2), &s(4), 1, 2),
            Err(RecurrenceError::HypothesisViolated { k: 2, u_k: s(2) })
        );
    }

    #[test]
    fn eval_product_cases() {
        let fib = SequenceDef::fundamental(s(1), s(-1));
        let spec = ProductSpec::new(vec![fib.clone(), fib.clone(), fib.clone()]).unwrap();
        assert_eq!(eval_product(&spec, 5).unwrap(), s(125));

        let lucas = SequenceDef::companion(s(1), s(-1));
        let spec = ProductSpec::new(vec![fib.clone(), lucas]).unwrap();
        assert_eq!(eval_product(&spec, 4).unwrap(), s(21));

        let single = ProductSpec::new(vec![fib]).unwrap();
        assert_eq!(eval_product(&single, 0).unwrap(), s(0));
    }

    #[test]
    fn product_spec_rejects_mixed_params() {
        let a = SequenceDef::fundamental(s(1), s(-1));
        let b = SequenceDef::fundamental(s(2), s(1));
        assert!(ProductSpec::new(vec![a, b]).is_err());
        assert!(ProductSpec::new(vec![]).is_err());
    }

    #[test]
    fn verify_detects_perturbed_sign() {
        let fib = SequenceDef::fundamental(s(1), s(-1));
        let rel = jarden_relation(&s(1), &s(-1), 3);
        let cubes: Vec<Scalar> = (0..=60).map(|m| fib.term(m).unwrap().pow(3)).collect();
        let window = ValueWindow::new(0, cubes);
        assert!(verify_relation(&rel, &window, 4, 60).unwrap().holds());

        let mut bad = rel.clone();
        bad.coeffs[1] = -&bad.coeffs[1];
        let v = verify_relation(&bad, &window, 4, 60).unwrap();
        assert!(matches!(v, Verification::Fails { at: 4, .. }));
    }

    #[test]
    fn verify_sixth_powers() {
        let u = SequenceDef::fundamental(s(1), s(1));
        let rel = jarden_relation(&s(1), &s(1), 6);
        let powers: Vec<Scalar> = (0..=60).map(|m| u.term(m).unwrap().pow(6)).collect();
        let window = ValueWindow::new(0, powers);
        assert!(verify_relation(&rel, &window, 7, 60).unwrap().holds());
    }

    #[test]
    fn insufficient_window_reported() {
        let rel = jarden_relation(&s(1), &s(-1), 2);
        let window = ValueWindow::new(5, ints(&[1, 2, 3]));
        assert_eq!(
            verify_relation(&rel, &window, 5, 7),
            Err(RecurrenceError::InsufficientWindow { needed_from: 2, needed_to: 7 })
        );
    }

    #[test]
    fn structural_coefficients() {
        for (p, q) in [(1, -1), (1, 1), (2, 4), (0, 3), (3, 0)] {
            for n in 0..=5u32 {
                let rel = jarden_relation(&s(p), &s(q), n);
                assert_eq!(rel.coeffs[0], Scalar::one());
                assert_eq!(rel.order(), n as usize + 1);
                let expect_last = {
                    let base = s(q).pow((n as u64) * (n as u64 + 1) / 2);
                    if (n + 1) % 2 == 0 { base } else { -&base }
                };
                assert_eq!(rel.coeffs[n as usize + 1], expect_last);
                if q != 0 {
                    assert!(!rel.coeffs[n as usize + 1].is_zero());
                }
            }
        }
    }
}
