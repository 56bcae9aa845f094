//! Dense exact polynomials and the triad polynomial sequence.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{ExactScalar, Result, TriadError, TriadSpec};

/// Univariate polynomial with exact coefficients; index `j` holds the
/// coefficient of `x^j`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and [`degree`](Self::degree) `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs([ExactScalar::zero(), ExactScalar::one()])
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_coeffs([c])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); n + 1];
        coeffs[n] = ExactScalar::one();
        Self { coeffs }
    }

    /// `x - root`
    pub fn linear_factor(root: &ExactScalar) -> Self {
        Self::from_coeffs([-root, ExactScalar::one()])
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = ExactScalar>) -> Self {
        let mut p = Self {
            coeffs: coeffs.into_iter().collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(ExactScalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of `x^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> ExactScalar {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, factor: &ExactScalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor))
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }
}

/// `alpha a + beta b`
pub fn poly_combine(
    a: &Polynomial,
    alpha: &ExactScalar,
    b: &Polynomial,
    beta: &ExactScalar,
) -> Polynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    Polynomial::from_coeffs((0..len).map(|j| alpha * a.coeff(j) + beta * b.coeff(j)))
}

pub fn mul_by_x(a: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return Polynomial::zero();
    }
    let mut coeffs = Vec::with_capacity(a.coeffs.len() + 1);
    coeffs.push(ExactScalar::zero());
    coeffs.extend(a.coeffs.iter().cloned());
    Polynomial { coeffs }
}

pub fn evaluate(a: &Polynomial, x: &ExactScalar) -> ExactScalar {
    a.evaluate(x)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        poly_combine(self, &ExactScalar::one(), rhs, &ExactScalar::one())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        poly_combine(self, &ExactScalar::one(), rhs, &-ExactScalar::one())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-ExactScalar::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if power == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "{magnitude}*")?;
                }
            }
            f.write_str("x")?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// `P_0..=P_max_degree` from `x P[n] = d[n] P[n-1] + q[n] P[n] + i[n] P[n+1]`
/// with `P[0] = 1`, `P[-1] = 0`, i.e.
/// `P[n+1] = ((x - q[n]) P[n] - d[n] P[n-1]) / i[n]`.
///
/// Fails with [`TriadError::NoPolynomialSequence`] at the first `n` with
/// `i[n] = 0`: no degree-graded solution exists past that point.
pub fn triad_polynomials(triad: &TriadSpec, max_degree: usize) -> Result<Vec<Polynomial>> {
    let mut polys = Vec::with_capacity(max_degree + 1);
    polys.push(Polynomial::one());
    let mut prev = Polynomial::zero();
    for n in 0..max_degree {
        let up = triad.i(n)?;
        let inv_up = up.recip().ok_or(TriadError::NoPolynomialSequence(n))?;
        let cur = &polys[n];
        let shifted = poly_combine(&mul_by_x(cur), &ExactScalar::one(), cur, &-triad.q(n)?);
        let next = poly_combine(&shifted, &inv_up, &prev, &-(triad.d(n)? * &inv_up));
        prev = cur.clone();
        polys.push(next);
    }
    Ok(polys)
}

/// For each `n < polys.len() - 1`, the polynomial
/// `x P[n] - (d[n] P[n-1] + q[n] P[n] + i[n] P[n+1])`.
///
/// Every entry is zero exactly when `polys` solves the dual recurrence, which
/// is the eigenvector equation `x P = X P` read row by row.
pub fn eigen_residual(triad: &TriadSpec, polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let zero = Polynomial::zero();
    (0..polys.len().saturating_sub(1))
        .map(|n| {
            let prev = if n == 0 { &zero } else { &polys[n - 1] };
            let down = prev.scale(&triad.d(n)?);
            let stay = polys[n].scale(&triad.q(n)?);
            let up = polys[n + 1].scale(&triad.i(n)?);
            let rhs = &(&down + &stay) + &up;
            Ok(&mul_by_x(&polys[n]) - &rhs)
        })
        .collect()
}
