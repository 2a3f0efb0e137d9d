//! Command-line front end: exact sequence terms, generalized binomial
//! coefficients, product recurrences, matrix cross-checks, an identity
//! prover, and a built-in regression selftest.
//!
//! Exit codes are stable across subcommands: 0 success (or identity
//! proved), 1 identity disproved, 2 usage or internal error.

use genbinom_cli::{output, selftest};

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genbinom::binom::{genbinom_limit, genbinom_pascal, genbinom_quotient, GenBinomQuery};
use genbinom::matrices::{build_a, build_q, char_poly, reversed_char_coeffs, similarity_check, Matrix};
use genbinom::prover::{parse_identity, prove, ProofOutcome, SequenceEnv};
use genbinom::recurrence::{degenerate_relation, jarden_relation};
use genbinom::sequences::SequenceDef;
use genbinom::Scalar;

use output::{join_scalars, CommandResult, ItemStatus, Payload, Status};

#[derive(Parser)]
#[command(
    name = "genbinom",
    version,
    about = "Exact toolkit for second-order linear recurrences: generalized binomials, product recurrences, identity proving"
)]
struct Cli {
    /// Emit one JSON document on stdout instead of human-readable text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    /// Parameter p, an exact rational such as 2 or -3/4
    #[arg(short = 'p', value_name = "P", allow_hyphen_values = true)]
    p: Scalar,

    /// Parameter q, an exact rational such as 4 or -1
    #[arg(short = 'q', value_name = "Q", allow_hyphen_values = true)]
    q: Scalar,
}

#[derive(Subcommand)]
enum Command {
    /// Print consecutive terms of a sequence x_r = p*x_{r-1} - q*x_{r-2}
    Seq {
        #[command(flatten)]
        params: Params,

        /// Use the fundamental sequence (x0 = 0, x1 = 1)
        #[arg(long, conflicts_with_all = ["x0", "x1"])]
        u: bool,

        /// Initial value x0 (required unless --u)
        #[arg(long, allow_hyphen_values = true, requires = "x1")]
        x0: Option<Scalar>,

        /// Initial value x1 (required unless --u)
        #[arg(long, allow_hyphen_values = true, requires = "x0")]
        x1: Option<Scalar>,

        /// First index (negative indices need q != 0)
        #[arg(allow_hyphen_values = true)]
        from: i64,

        /// Last index
        #[arg(allow_hyphen_values = true)]
        to: i64,
    },

    /// Generalized binomial coefficient (r|k), one value or the full row
    Binom {
        #[command(flatten)]
        params: Params,

        /// Row index r
        r: u32,

        /// Column index k; the whole row is printed when omitted
        #[arg(allow_hyphen_values = true)]
        k: Option<i64>,

        /// Computation route
        #[arg(long, value_enum, default_value_t = Route::Pascal)]
        route: Route,
    },

    /// Coefficients of the recurrence annihilating products of n solutions
    Jarden {
        #[command(flatten)]
        params: Params,

        /// Number of factors in the product
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,

        /// Emit the sparse order-k relation available when u_k = 0
        #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
        degenerate: Option<u32>,
    },

    /// Prove or refute an identity over sequences sharing one (p, q)
    Prove {
        /// Environment file: one `NAME p q x0 x1` line per sequence
        #[arg(long, value_name = "FILE")]
        env: std::path::PathBuf,

        #[arg(
            long,
            group = "source",
            allow_hyphen_values = true,
            help = "Identity text, e.g. \"F[n+2] = F[n+1] + F[n]\""
        )]
        identity: Option<String>,

        /// Read the identity from a file instead
        #[arg(long, group = "source", value_name = "PATH")]
        file: Option<std::path::PathBuf>,

        /// First index checked (the proof scope starts here)
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        from: i64,
    },

    /// Build the dimension-n matrices and run their cross-checks
    Matrix {
        /// Matrix dimension
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,

        #[command(flatten)]
        params: Params,

        /// Which checks to run
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },

    /// Run the built-in regression corpus
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Pascal,
    Limit,
    Quotient,
    All,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Pascal => "pascal",
            Route::Limit => "limit",
            Route::Quotient => "quotient",
            Route::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Similarity,
    Charpoly,
    All,
}

/// Anything that should terminate the command with exit code 2.
struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match dispatch(cli.command) {
        Ok((result, code)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            } else {
                render(&result);
            }
            code
        }
        Err(Failure(message)) => {
            if json {
                let result = CommandResult {
                    status: Status::Error,
                    payload: Payload::Message { text: message },
                    diagnostics: vec![],
                };
                println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            } else {
                eprintln!("error: {}", message);
            }
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<(CommandResult, ExitCode), Failure> {
    match command {
        Command::Seq { params, u, x0, x1, from, to } => cmd_seq(params, u, x0, x1, from, to),
        Command::Binom { params, r, k, route } => cmd_binom(params, r, k, route),
        Command::Jarden { params, n, degenerate } => cmd_jarden(params, n, degenerate),
        Command::Prove { env, identity, file, from } => cmd_prove(env, identity, file, from),
        Command::Matrix { n, params, check } => cmd_matrix(n, params, check),
        Command::Selftest => cmd_selftest(),
    }
}

fn ok(payload: Payload) -> Result<(CommandResult, ExitCode), Failure> {
    Ok((
        CommandResult { status: Status::Ok, payload, diagnostics: vec![] },
        ExitCode::SUCCESS,
    ))
}

fn cmd_seq(
    params: Params,
    u: bool,
    x0: Option<Scalar>,
    x1: Option<Scalar>,
    from: i64,
    to: i64,
) -> Result<(CommandResult, ExitCode), Failure> {
    let def = if u {
        SequenceDef::fundamental(params.p, params.q)
    } else {
        match (x0, x1) {
            (Some(x0), Some(x1)) => SequenceDef::new(params.p, params.q, x0, x1),
            _ => return Err(Failure("provide either --u or both --x0 and --x1".to_string())),
        }
    };
    if from > to {
        return Err(Failure(format!("empty range: {} > {}", from, to)));
    }
    let len = (to - from + 1) as usize;
    let window = def.window(from, len)?;
    ok(Payload::Terms { from, to, values: window.values })
}

fn cmd_binom(
    params: Params,
    r: u32,
    k: Option<i64>,
    route: Route,
) -> Result<(CommandResult, ExitCode), Failure> {
    let (p, q) = (params.p, params.q);
    let positions: Vec<i64> = match k {
        Some(k) => vec![k],
        None => (0..=r as i64).collect(),
    };
    let compute = |route: Route| -> Result<Vec<Scalar>, Failure> {
        positions
            .iter()
            .map(|&k| {
                let query = GenBinomQuery::new(p.clone(), q.clone(), r, k);
                match route {
                    Route::Pascal => Ok(genbinom_pascal(&query)),
                    Route::Limit => Ok(genbinom_limit(&query)?),
                    Route::Quotient => Ok(genbinom_quotient(&query)?),
                    Route::All => unreachable!("handled separately"),
                }
            })
            .collect()
    };
    match route {
        Route::All => {
            let pascal = compute(Route::Pascal)?;
            let limit = compute(Route::Limit)?;
            let (quotient, quotient_error) = match compute(Route::Quotient) {
                Ok(values) => (Some(values), None),
                Err(Failure(e)) => (None, Some(e)),
            };
            let consistent = pascal == limit && quotient.as_ref().is_none_or(|qv| *qv == pascal);
            if !consistent {
                return Err(Failure(format!(
                    "internal inconsistency: routes disagree at r = {}",
                    r
                )));
            }
            ok(Payload::BinomAll { r, k, pascal, limit, quotient, quotient_error, consistent })
        }
        single => {
            let values = compute(single)?;
            match k {
                Some(k) => ok(Payload::BinomValue {
                    r,
                    k,
                    route: single.name().to_string(),
                    value: values.into_iter().next().expect("one position"),
                }),
                None => ok(Payload::BinomRow { r, route: single.name().to_string(), values }),
            }
        }
    }
}

fn cmd_jarden(
    params: Params,
    n: u32,
    degenerate: Option<u32>,
) -> Result<(CommandResult, ExitCode), Failure> {
    let relation = match degenerate {
        Some(k) => degenerate_relation(&params.p, &params.q, n, k)?,
        None => jarden_relation(&params.p, &params.q, n),
    };
    ok(Payload::Relation { order: relation.order(), relation })
}

fn cmd_prove(
    env_path: std::path::PathBuf,
    identity: Option<String>,
    file: Option<std::path::PathBuf>,
    from: i64,
) -> Result<(CommandResult, ExitCode), Failure> {
    let env_text = std::fs::read_to_string(&env_path)
        .map_err(|e| Failure(format!("cannot read {}: {}", env_path.display(), e)))?;
    let env = SequenceEnv::parse(&env_text)?;
    let text = match (identity, file) {
        (Some(t), None) => t,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|e| Failure(format!("cannot read {}: {}", path.display(), e)))?
            .trim()
            .to_string(),
        _ => return Err(Failure("provide exactly one of --identity or --file".to_string())),
    };
    let ast = parse_identity(&text, &env)?;
    match prove(&ast, &env, from)? {
        ProofOutcome::Proved(cert) => ok(Payload::Certificate(cert)),
        ProofOutcome::Disproved(cx) => Ok((
            CommandResult {
                status: Status::Disproved,
                payload: Payload::Counterexample(cx),
                diagnostics: vec![],
            },
            ExitCode::from(1),
        )),
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.rows().to_vec()
}

fn cmd_matrix(n: u32, params: Params, check: Check) -> Result<(CommandResult, ExitCode), Failure> {
    let (p, q) = (params.p, params.q);
    let a = build_a(n - 1, &p, &q);
    let qm = build_q(n, &p, &q);

    let similar = match check {
        Check::Similarity | Check::All => {
            let verdict = similarity_check(n, &p, &q);
            if !verdict {
                return Err(Failure(format!(
                    "internal inconsistency: similarity fails at n = {}",
                    n
                )));
            }
            Some(verdict)
        }
        Check::Charpoly => None,
    };
    let (char_poly_text, reversed, relation, matches) = match check {
        Check::Charpoly | Check::All => {
            let cp = char_poly(&qm);
            let reversed = reversed_char_coeffs(&qm);
            let relation = jarden_relation(&p, &q, n - 1).coeffs;
            let matched = reversed == relation;
            if !matched {
                return Err(Failure(format!(
                    "internal inconsistency: characteristic polynomial mismatch at n = {}",
                    n
                )));
            }
            (Some(cp.render("x")), Some(reversed), Some(relation), Some(matched))
        }
        Check::Similarity => (None, None, None, None),
    };
    ok(Payload::MatrixReport {
        n,
        matrix_a: matrix_rows(&a),
        matrix_q: matrix_rows(&qm),
        similar,
        char_poly: char_poly_text,
        reversed_coeffs: reversed,
        relation_coeffs: relation,
        coeffs_match: matches,
    })
}

fn cmd_selftest() -> Result<(CommandResult, ExitCode), Failure> {
    let items = selftest::run();
    let failed = items.iter().filter(|i| i.status == ItemStatus::Fail).count();
    let result = CommandResult {
        status: if failed == 0 { Status::Ok } else { Status::Error },
        payload: Payload::Selftest { items, failed },
        diagnostics: vec![],
    };
    let code = if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) };
    Ok((result, code))
}

fn render(result: &CommandResult) {
    match &result.payload {
        Payload::Terms { values, .. } => println!("{}", join_scalars(values)),
        Payload::BinomValue { value, .. } => println!("{}", value),
        Payload::BinomRow { values, .. } => println!("{}", join_scalars(values)),
        Payload::BinomAll { pascal, limit, quotient, quotient_error, consistent, .. } => {
            println!("pascal:   {}", join_scalars(pascal));
            println!("limit:    {}", join_scalars(limit));
            match quotient {
                Some(values) => println!("quotient: {}", join_scalars(values)),
                None => println!(
                    "quotient: skipped ({})",
                    quotient_error.as_deref().unwrap_or("degenerate")
                ),
            }
            println!("consistent: {}", consistent);
        }
        Payload::Relation { relation, .. } => println!("{}", join_scalars(&relation.coeffs)),
        Payload::Certificate(cert) => {
            println!("PROVED  {}", cert.identity);
            println!(
                "scope: {} (extends to all integers: {})",
                cert.scope, cert.extends_to_all_integers
            );
            println!(
                "annihilator order {}: {}",
                cert.order,
                join_scalars(&cert.annihilator.coeffs)
            );
            for c in &cert.checked {
                println!("  n = {:>3}: both sides = {}", c.n, c.left);
            }
        }
        Payload::Counterexample(cx) => {
            println!("DISPROVED at n = {}: left = {}, right = {}", cx.n, cx.left, cx.right);
        }
        Payload::MatrixReport {
            n,
            matrix_a,
            matrix_q,
            similar,
            char_poly,
            reversed_coeffs,
            relation_coeffs,
            coeffs_match,
        } => {
            println!("A ({n} x {n}):");
            for row in matrix_a {
                println!("  [{}]", join_scalars(row).replace(' ', ", "));
            }
            println!("Q ({n} x {n}):");
            for row in matrix_q {
                println!("  [{}]", join_scalars(row).replace(' ', ", "));
            }
            if let Some(s) = similar {
                println!("similar via exchange conjugation: {}", s);
            }
            if let Some(cp) = char_poly {
                println!("monic characteristic polynomial: {}", cp);
            }
            if let Some(rev) = reversed_coeffs {
                println!("reversed coefficients: {}", join_scalars(rev));
            }
            if let Some(rel) = relation_coeffs {
                println!("relation coefficients: {}", join_scalars(rel));
            }
            if let Some(m) = coeffs_match {
                println!("coefficients match: {}", m);
            }
        }
        Payload::Selftest { items, failed } => {
            for item in items {
                let tag = match item.status {
                    ItemStatus::Pass => "PASS",
                    ItemStatus::Fail => "FAIL",
                    ItemStatus::Skipped => "SKIP",
                };
                println!("{} {} - {}", tag, item.name, item.detail);
            }
            if *failed == 0 {
                println!("selftest: all items passed");
            } else {
                println!("selftest: {} item(s) FAILED", failed);
            }
        }
        Payload::Message { text } => println!("{}", text),
    }
}
