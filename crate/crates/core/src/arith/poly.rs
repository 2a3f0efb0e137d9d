use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Scalar};

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored by ascending power. The highest-index coefficient
/// is always nonzero; the zero polynomial is the empty list, and its degree
/// is `None` rather than any integer.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Scalar, deg: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds from ascending-power coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience for integer coefficient lists in tests and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` is the degree of the zero polynomial (conceptually -infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Classical long division that fails loudly: a nonzero remainder is
    /// reported as [`ArithError::InexactDivision`] because every intended
    /// call site divides quantities known to be exactly divisible.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let d_deg = divisor.degree().expect("nonzero divisor");
        let n_deg = self.degree().expect("nonzero dividend");
        if n_deg < d_deg {
            return Err(ArithError::InexactDivision);
        }
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); n_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d_deg].clone();
            if top.is_zero() {
                continue;
            }
            let q = &top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                rem[i + j] = &rem[i + j] - &(&q * dc);
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::InexactDivision);
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Renders with the given variable name, e.g. `x^2 - 3*x + 5`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Scalar::zero();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if !unit_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
