//! Dense univariate polynomials over [`Rational`].
//!
//! A polynomial carries the variable it is written in. Power sums live in the
//! `n`-basis; Faulhaber forms live in the `T`-basis, where `T = n(n+1)/2`.
//! Mixing the two is a runtime error rather than a silent coercion;
//! [`Polynomial::t_to_n`] is the only bridge between them.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    N,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::N => "n",
            Var::T => "T",
        })
    }
}

/// Coefficients ascend by degree; the last stored coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
    var: Var,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(var: Var) -> Self {
        Polynomial {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::from_coeffs(vec![c], var)
    }

    /// `c * var^degree`
    pub fn monomial(c: Rational, degree: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs, var)
    }

    /// The polynomial `var` itself.
    pub fn identity(var: Var) -> Self {
        Self::monomial(Rational::one(), 1, var)
    }

    /// `T = (n^2 + n)/2` written in the `n`-basis.
    pub fn triangular() -> Self {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        Self::from_coeffs(vec![Rational::zero(), half.clone(), half], Var::N)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, var: Var) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs, var }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn same_var(&self, other: &Polynomial) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_coeffs(coeffs, self.var))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::from_coeffs(coeffs, self.var))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Ok(Self::from_coeffs(coeffs, self.var))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self::from_coeffs(coeffs, self.var)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Rational::from(-1))
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Self::constant(Rational::one(), self.var);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same variable");
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self(q(.))`, expanded; the result is written in `q`'s variable.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(q.var), |acc, c| {
                acc.mul(q)
                    .expect("same variable")
                    .add(&Polynomial::constant(c.clone(), q.var))
                    .expect("same variable")
            })
    }

    /// Rewrites a `T`-polynomial in the `n`-basis by substituting
    /// `T = (n^2 + n)/2`.
    pub fn t_to_n(&self) -> Result<Polynomial> {
        if self.var != Var::T {
            return Err(Error::WrongVar {
                op: "t_to_n",
                expected: Var::T,
                got: self.var,
            });
        }
        Ok(self.compose(&Self::triangular()))
    }

    /// Divides by `var^k`, provided the `k` lowest coefficients are zero.
    pub fn shift_down(&self, k: usize) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.len() < k || !self.coeffs[..k].iter().all(Rational::is_zero) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs[k..].to_vec(), self.var))
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs, self.var)
    }
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

/// Highest degree first: `1/4*n^4 + 1/2*n^3 + 1/4*n^2`. Unit coefficients
/// are dropped (`T^2`, `-n`); the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (degree, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            match degree {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if degree > 1 {
                        write!(f, "^{degree}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
