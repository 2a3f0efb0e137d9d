//! Structured command results: one shape per subcommand, rendered as text by
//! default or as a single JSON document with `--json`. Every number is
//! serialized as an exact `num/den` string (denominator omitted when 1).

use serde::{Deserialize, Serialize};

use genbinom::prover::{Counterexample, ProofCertificate};
use genbinom::recurrence::RecurrenceRelation;
use genbinom::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Disproved,
    Error,
}

/// Envelope for every subcommand's machine-readable output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Terms {
        from: i64,
        to: i64,
        values: Vec<Scalar>,
    },
    BinomValue {
        r: u32,
        k: i64,
        route: String,
        value: Scalar,
    },
    BinomRow {
        r: u32,
        route: String,
        values: Vec<Scalar>,
    },
    /// All three routes over the requested positions (`k` fixed, or the full
    /// row when `k` is absent); `quotient` is absent when that route is
    /// degenerate at some position.
    BinomAll {
        r: u32,
        k: Option<i64>,
        pascal: Vec<Scalar>,
        limit: Vec<Scalar>,
        quotient: Option<Vec<Scalar>>,
        quotient_error: Option<String>,
        consistent: bool,
    },
    Relation {
        order: usize,
        relation: RecurrenceRelation,
    },
    Certificate(ProofCertificate),
    Counterexample(Counterexample),
    MatrixReport {
        n: u32,
        matrix_a: Vec<Vec<Scalar>>,
        matrix_q: Vec<Vec<Scalar>>,
        similar: Option<bool>,
        char_poly: Option<String>,
        reversed_coeffs: Option<Vec<Scalar>>,
        relation_coeffs: Option<Vec<Scalar>>,
        coeffs_match: Option<bool>,
    },
    Selftest {
        items: Vec<SelftestItem>,
        failed: usize,
    },
    Message {
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelftestItem {
    pub name: String,
    pub status: ItemStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Pass,
    Fail,
    Skipped,
}

pub fn join_scalars(values: &[Scalar]) -> String {
    values
        .iter()
        .map(Scalar::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
