//! Recursive-descent parser for the identity grammar:
//!
//! ```text
//! identity   := expr "=" expr
//! expr       := term (("+" | "-") term)*
//! term       := factor ("*" factor)*
//! factor     := base ("^" INT)?
//! base       := RATIONAL | seqref | "(" expr ")" | "det" matrix
//! matrix     := "[" row ("," row)* "]" ; row := "[" expr ("," expr)* "]"
//! seqref     := NAME "[" affine "]"
//! affine     := (INT "*")? "n" (("+"|"-") INT)? | INT
//! ```
//!
//! Whitespace-insensitive. `RATIONAL` is `digits` or `digits/digits`;
//! signs are expressions, not part of literals. `det` is reserved.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::Scalar;

use super::ast::{Expr, IdentityAst, SeqRef};
use super::{ProverError, SequenceEnv};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(Scalar),
    Name(String),
    Det,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(v) => format!("number {}", v),
            Tok::Name(n) => format!("name {}", n),
            Tok::Det => "det".to_string(),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
            Tok::LBracket => "'['".to_string(),
            Tok::RBracket => "']'".to_string(),
            Tok::Comma => "','".to_string(),
            Tok::Equals => "'='".to_string(),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ProverError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => { out.push((Tok::Plus, i)); i += 1; }
            b'-' => { out.push((Tok::Minus, i)); i += 1; }
            b'*' => { out.push((Tok::Star, i)); i += 1; }
            b'^' => { out.push((Tok::Caret, i)); i += 1; }
            b'(' => { out.push((Tok::LParen, i)); i += 1; }
            b')' => { out.push((Tok::RParen, i)); i += 1; }
            b'[' => { out.push((Tok::LBracket, i)); i += 1; }
            b']' => { out.push((Tok::RBracket, i)); i += 1; }
            b',' => { out.push((Tok::Comma, i)); i += 1; }
            b'=' => { out.push((Tok::Equals, i)); i += 1; }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                // an immediately following '/digits' is part of the rational
                if i < bytes.len() && bytes[i] == b'/' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let lit = &text[start..i];
                let value: Scalar = lit.parse().map_err(|_| ProverError::Syntax {
                    position: start,
                    expected: "rational literal".to_string(),
                    found: lit.to_string(),
                })?;
                out.push((Tok::Number(value), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "det" {
                    out.push((Tok::Det, start));
                } else {
                    out.push((Tok::Name(word.to_string()), start));
                }
            }
            _ => {
                return Err(ProverError::Syntax {
                    position: i,
                    expected: "a token".to_string(),
                    found: format!("'{}'", text[i..].chars().next().unwrap()),
                })
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    env: &'a SequenceEnv,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn peek_pos(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn advance(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<usize, ProverError> {
        if *self.peek() == want {
            Ok(self.advance().1)
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &str) -> ProverError {
        ProverError::Syntax {
            position: self.peek_pos(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn identity(&mut self) -> Result<IdentityAst, ProverError> {
        let left = self.expr()?;
        self.expect(Tok::Equals, "'='")?;
        let right = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(self.unexpected("end of input"));
        }
        Ok(IdentityAst { left, right })
    }

    fn expr(&mut self) -> Result<Expr, ProverError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.advance();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ProverError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.advance();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ProverError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.advance();
        let pos = self.peek_pos();
        match self.advance().0 {
            Tok::Number(v) => {
                let exp = integer_in_range(&v, 1, u32::MAX as i64).ok_or(
                    ProverError::UnsupportedExponent {
                        position: pos,
                        detail: format!("exponent must be an integer >= 1, got {}", v),
                    },
                )?;
                Ok(Expr::Pow(Box::new(base), exp as u32))
            }
            other => Err(ProverError::Syntax {
                position: pos,
                expected: "integer exponent".to_string(),
                found: other.describe(),
            }),
        }
    }

    fn base(&mut self) -> Result<Expr, ProverError> {
        match self.peek().clone() {
            Tok::Number(v) => {
                self.advance();
                Ok(Expr::Const(v))
            }
            Tok::Name(name) => {
                let name_pos = self.peek_pos();
                self.advance();
                self.expect(Tok::LBracket, "'[' after sequence name")?;
                if self.env.get(&name).is_none() {
                    return Err(ProverError::UnknownSequence { position: name_pos, name });
                }
                let (mult, offset) = self.affine()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Expr::Seq(SeqRef { name, mult, offset }))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Det => {
                let det_pos = self.peek_pos();
                self.advance();
                self.matrix(det_pos)
            }
            _ => Err(self.unexpected("a rational, sequence reference, '(' or 'det'")),
        }
    }

    fn matrix(&mut self, det_pos: usize) -> Result<Expr, ProverError> {
        self.expect(Tok::LBracket, "'[' opening the matrix")?;
        let mut rows = vec![self.row()?];
        while *self.peek() == Tok::Comma {
            self.advance();
            rows.push(self.row()?);
        }
        self.expect(Tok::RBracket, "']' closing the matrix")?;
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(ProverError::Syntax {
                position: det_pos,
                expected: "a square matrix".to_string(),
                found: format!(
                    "{} rows of widths {:?}",
                    dim,
                    rows.iter().map(Vec::len).collect::<Vec<_>>()
                ),
            });
        }
        Ok(Expr::Det(rows))
    }

    fn row(&mut self) -> Result<Vec<Expr>, ProverError> {
        self.expect(Tok::LBracket, "'[' opening a row")?;
        let mut row = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.advance();
            row.push(self.expr()?);
        }
        self.expect(Tok::RBracket, "']' closing a row")?;
        Ok(row)
    }

    /// `(INT "*")? "n" (("+"|"-") INT)? | INT`
    fn affine(&mut self) -> Result<(u32, i64), ProverError> {
        let parsed = self.affine_inner()?;
        // anything left before the closing bracket means the index was some
        // more general expression, e.g. F[n*n]
        if *self.peek() != Tok::RBracket {
            return Err(ProverError::NonAffineIndex {
                position: self.peek_pos(),
                detail: format!(
                    "index must be affine in n, found {}",
                    self.peek().describe()
                ),
            });
        }
        Ok(parsed)
    }

    fn affine_inner(&mut self) -> Result<(u32, i64), ProverError> {
        let pos = self.peek_pos();
        match self.peek().clone() {
            Tok::Number(v) => {
                self.advance();
                if *self.peek() == Tok::Star {
                    self.advance();
                    let mult = integer_in_range(&v, 0, u32::MAX as i64).ok_or(
                        ProverError::NonAffineIndex {
                            position: pos,
                            detail: format!("index multiplier must be an integer >= 0, got {}", v),
                        },
                    )? as u32;
                    self.variable()?;
                    let offset = self.offset()?;
                    Ok((mult, offset))
                } else {
                    // constant index
                    let value = integer_in_range(&v, i64::MIN, i64::MAX).ok_or(
                        ProverError::NonAffineIndex {
                            position: pos,
                            detail: format!("constant index must be an integer, got {}", v),
                        },
                    )?;
                    Ok((0, value))
                }
            }
            Tok::Name(_) => {
                self.variable()?;
                let offset = self.offset()?;
                Ok((1, offset))
            }
            _ => Err(self.unexpected("an affine index in n or an integer")),
        }
    }

    fn variable(&mut self) -> Result<(), ProverError> {
        let pos = self.peek_pos();
        match self.advance().0 {
            Tok::Name(n) if n == "n" => Ok(()),
            other => Err(ProverError::NonAffineIndex {
                position: pos,
                detail: format!("expected the index variable n, found {}", other.describe()),
            }),
        }
    }

    fn offset(&mut self) -> Result<i64, ProverError> {
        let negative = match self.peek() {
            Tok::Plus => false,
            Tok::Minus => true,
            _ => return Ok(0),
        };
        self.advance();
        let pos = self.peek_pos();
        match self.advance().0 {
            Tok::Number(v) => {
                let magnitude =
                    integer_in_range(&v, 0, i64::MAX).ok_or(ProverError::NonAffineIndex {
                        position: pos,
                        detail: format!("index offset must be an integer, got {}", v),
                    })?;
                Ok(if negative { -magnitude } else { magnitude })
            }
            other => Err(ProverError::Syntax {
                position: pos,
                expected: "integer offset".to_string(),
                found: other.describe(),
            }),
        }
    }
}

fn integer_in_range(v: &Scalar, lo: i64, hi: i64) -> Option<i64> {
    if !v.is_integer() {
        return None;
    }
    let n: &BigInt = v.numer();
    let n = n.to_i64()?;
    (lo..=hi).contains(&n).then_some(n)
}

/// Parses one identity, resolving every sequence reference in `env`.
pub fn parse_identity(text: &str, env: &SequenceEnv) -> Result<IdentityAst, ProverError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, env };
    parser.identity()
}
