//! Dense real-coefficient polynomials in one variable and the classical
//! families (Hermite, generalized Laguerre) built on top of them.

mod families;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use families::{
    hermite, hermite_imag_even, laguerre, laguerre_identity_residuals, laguerre_reflect,
    IdentityResiduals, MAX_FAMILY_DEGREE,
};

/// Errors raised by polynomial construction and evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyError {
    /// Requested degree exceeds the range where double coefficients are trusted.
    DegreeCap { requested: usize, cap: usize },
    /// A non-finite argument or parameter was supplied.
    NonFinite,
    /// An index precondition was violated (for example `n = 0` where `n >= 1` is required).
    InvalidIndex { index: usize, min: usize },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DegreeCap { requested, cap } => write!(
                f,
                "degree {requested} exceeds the supported cap {cap} for double-precision coefficients"
            ),
            PolyError::NonFinite => f.write_str("non-finite argument"),
            PolyError::InvalidIndex { index, min } => {
                write!(f, "index {index} is below the minimum {min}")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` stored densely, lowest power first.
///
/// Trailing zero coefficients are always stripped, so the stored vector is
/// empty exactly for the zero polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    pub fn constant(c: f64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: f64, k: usize) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn x() -> Self {
        Self::monomial(1.0, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Degree, or `None` for the zero polynomial (conventionally degree -1).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer with the zero polynomial at -1.
    pub fn degree_signed(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation. Non-finite `t` propagates; see [`Polynomial::try_eval`].
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn try_eval(&self, t: f64) -> Result<f64, PolyError> {
        if !t.is_finite() {
            return Err(PolyError::NonFinite);
        }
        Ok(self.eval(t))
    }

    /// Value and first derivative in a single Horner pass.
    pub fn eval_with_derivative(&self, t: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in self.coeffs.iter().rev() {
            dp = dp * t + p;
            p = p * t + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `p(-t)`: flips the sign of every odd-power coefficient.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// `p(-t^2)`. The result only has even powers.
    pub fn compose_neg_square(&self) -> Self {
        let mut coeffs = vec![0.0; 2 * self.coeffs.len()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = if k % 2 == 1 { -c } else { c };
        }
        Self::from_coeffs(coeffs)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| f(self.coeff(k), other.coeff(k))).collect())
    }
}

/// Largest absolute coefficient of `residual` divided by the largest absolute
/// coefficient found among `operands`.
///
/// When every operand is zero the absolute residual is returned instead.
pub fn relative_residual(residual: &Polynomial, operands: &[&Polynomial]) -> f64 {
    let scale = operands
        .iter()
        .fold(0.0, |m: f64, p| m.max(p.max_abs_coeff()));
    let r = residual.max_abs_coeff();
    if scale > 0.0 {
        r / scale
    } else {
        r
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            if first {
                if c < 0.0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}
