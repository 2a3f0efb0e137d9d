use std::collections::BTreeSet;

use crate::arith::Scalar;
use crate::matrices::Matrix;

use super::{ProverError, SequenceEnv};

/// A reference to a named sequence at the affine index `mult * n + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqRef {
    pub name: String,
    pub mult: u32,
    pub offset: i64,
}

/// Expression over sequence terms in one free variable `n`.
///
/// Leaves are exact rational constants and affine sequence references;
/// interior nodes are ring operations, integer powers (exponent >= 1) and
/// square determinants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Scalar),
    Seq(SeqRef),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Det(Vec<Vec<Expr>>),
}

impl Expr {
    /// Exact value at a concrete index.
    pub fn eval(&self, env: &SequenceEnv, n: i64) -> Result<Scalar, ProverError> {
        match self {
            Expr::Const(c) => Ok(c.clone()),
            Expr::Seq(r) => {
                let def = env
                    .get(&r.name)
                    .expect("references are resolved at parse time");
                let index = r.mult as i64 * n + r.offset;
                def.term(index).map_err(ProverError::Eval)
            }
            Expr::Add(a, b) => Ok(&a.eval(env, n)? + &b.eval(env, n)?),
            Expr::Sub(a, b) => Ok(&a.eval(env, n)? - &b.eval(env, n)?),
            Expr::Mul(a, b) => Ok(&a.eval(env, n)? * &b.eval(env, n)?),
            Expr::Pow(a, k) => Ok(a.eval(env, n)?.pow(*k as u64)),
            Expr::Det(rows) => {
                let dim = rows.len();
                let mut cells = Vec::with_capacity(dim);
                for row in rows {
                    let mut out = Vec::with_capacity(dim);
                    for e in row {
                        out.push(e.eval(env, n)?);
                    }
                    cells.push(out);
                }
                Ok(Matrix::from_rows(cells).determinant())
            }
        }
    }

    /// The set of monomial degrees this expression can contribute after
    /// formal expansion (no cancellation is assumed; the set may
    /// over-approximate, which only enlarges the annihilator).
    ///
    /// Constants contribute 0, a reference with index multiplier `a`
    /// contributes `a`, sums take unions, products take sumsets, powers take
    /// iterated sumsets, and a determinant contributes the degrees of its
    /// permutation-expansion monomials.
    pub fn degree_set(&self) -> BTreeSet<u64> {
        match self {
            Expr::Const(_) => BTreeSet::from([0]),
            Expr::Seq(r) => BTreeSet::from([r.mult as u64]),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let mut s = a.degree_set();
                s.extend(b.degree_set());
                s
            }
            Expr::Mul(a, b) => sumset(&a.degree_set(), &b.degree_set()),
            Expr::Pow(a, k) => {
                let base = a.degree_set();
                let mut acc = BTreeSet::from([0]);
                for _ in 0..*k {
                    acc = sumset(&acc, &base);
                }
                acc
            }
            Expr::Det(rows) => {
                let dim = rows.len();
                let entry_sets: Vec<Vec<BTreeSet<u64>>> = rows
                    .iter()
                    .map(|row| row.iter().map(Expr::degree_set).collect())
                    .collect();
                let mut out = BTreeSet::new();
                let mut columns: Vec<usize> = (0..dim).collect();
                permutations(&mut columns, 0, &mut |perm| {
                    let mut acc = BTreeSet::from([0]);
                    for (r, &c) in perm.iter().enumerate() {
                        acc = sumset(&acc, &entry_sets[r][c]);
                    }
                    out.extend(acc);
                });
                out
            }
        }
    }

    /// The degree the node carries: the largest member of its degree set.
    pub fn degree(&self) -> u64 {
        *self.degree_set().iter().next_back().expect("degree set is never empty")
    }

    /// Canonical text form; reparsing it reproduces the same tree.
    pub fn pretty(&self) -> String {
        match self {
            Expr::Const(c) => c.to_string(),
            Expr::Seq(r) => {
                let idx = match (r.mult, r.offset) {
                    (0, b) => {
                        if b >= 0 {
                            format!("{}", b)
                        } else {
                            // the grammar has no negative literal, so a
                            // negative constant index prints in 0*n-b form
                            format!("0*n{}", b)
                        }
                    }
                    (1, 0) => "n".to_string(),
                    (1, b) if b > 0 => format!("n+{}", b),
                    (1, b) => format!("n{}", b),
                    (a, 0) => format!("{}*n", a),
                    (a, b) if b > 0 => format!("{}*n+{}", a, b),
                    (a, b) => format!("{}*n{}", a, b),
                };
                format!("{}[{}]", r.name, idx)
            }
            Expr::Add(a, b) => format!("{} + {}", a.pretty(), b.wrapped(Level::AddRight)),
            Expr::Sub(a, b) => format!("{} - {}", a.pretty(), b.wrapped(Level::AddRight)),
            Expr::Mul(a, b) => format!(
                "{} * {}",
                a.wrapped(Level::MulLeft),
                b.wrapped(Level::MulRight)
            ),
            Expr::Pow(a, k) => format!("{}^{}", a.wrapped(Level::PowBase), k),
            Expr::Det(rows) => {
                let body: Vec<String> = rows
                    .iter()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(Expr::pretty).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("det[{}]", body.join(","))
            }
        }
    }

    /// Parenthesizes exactly where reparsing would otherwise regroup.
    fn wrapped(&self, ctx: Level) -> String {
        let needs = match ctx {
            // + and - associate left, so a right operand that is itself a
            // sum or difference must keep its parentheses
            Level::AddRight => matches!(self, Expr::Add(..) | Expr::Sub(..)),
            Level::MulLeft => matches!(self, Expr::Add(..) | Expr::Sub(..)),
            Level::MulRight => matches!(self, Expr::Add(..) | Expr::Sub(..) | Expr::Mul(..)),
            Level::PowBase => !matches!(self, Expr::Const(_) | Expr::Seq(_) | Expr::Det(_)),
        };
        if needs {
            format!("({})", self.pretty())
        } else {
            self.pretty()
        }
    }
}

#[derive(Clone, Copy)]
enum Level {
    AddRight,
    MulLeft,
    MulRight,
    PowBase,
}

fn sumset(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            out.insert(x + y);
        }
    }
    out
}

/// Heap-style permutation visitor over `items[at..]`.
fn permutations(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permutations(items, at + 1, visit);
        items.swap(at, i);
    }
}

/// A parsed identity: two expression sides over one environment's sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityAst {
    pub left: Expr,
    pub right: Expr,
}

impl IdentityAst {
    pub fn pretty(&self) -> String {
        format!("{} = {}", self.left.pretty(), self.right.pretty())
    }

    /// Union of both sides' monomial degree sets.
    pub fn degree_set(&self) -> BTreeSet<u64> {
        let mut s = self.left.degree_set();
        s.extend(self.right.degree_set());
        s
    }

    pub fn eval_sides(&self, env: &SequenceEnv, n: i64) -> Result<(Scalar, Scalar), ProverError> {
        Ok((self.left.eval(env, n)?, self.right.eval(env, n)?))
    }
}
