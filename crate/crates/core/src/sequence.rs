//! Weight sequences and the triads built from them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{ExactScalar, Result, TriadError};

/// Highest polynomial degree a [`SequenceSpec`] may carry.
pub const MAX_SEQUENCE_DEGREE: usize = 2;

/// An index-only weight sequence `k -> w_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SequenceSpec {
    /// `c0 + c1 k + c2 k^2`, stored as `[c0, c1, c2]`.
    Polynomial([ExactScalar; 3]),
    /// Finitely many values `w_0..w_{len-1}`; reading past the end is an error.
    Explicit(Vec<ExactScalar>),
}

impl SequenceSpec {
    pub fn constant(c: impl Into<ExactScalar>) -> Self {
        Self::Polynomial([c.into(), ExactScalar::zero(), ExactScalar::zero()])
    }

    /// `a + b k`
    pub fn linear(a: impl Into<ExactScalar>, b: impl Into<ExactScalar>) -> Self {
        Self::Polynomial([a.into(), b.into(), ExactScalar::zero()])
    }

    /// `a + b k + c k^2`
    pub fn quadratic(
        a: impl Into<ExactScalar>,
        b: impl Into<ExactScalar>,
        c: impl Into<ExactScalar>,
    ) -> Self {
        Self::Polynomial([a.into(), b.into(), c.into()])
    }

    /// Builds a polynomial sequence from ascending coefficients, rejecting
    /// anything whose true degree exceeds [`MAX_SEQUENCE_DEGREE`].
    pub fn polynomial(coeffs: impl IntoIterator<Item = ExactScalar>) -> Result<Self> {
        let mut coeffs: Vec<ExactScalar> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(ExactScalar::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_SEQUENCE_DEGREE + 1 {
            return Err(TriadError::DegreeTooHigh(coeffs.len() - 1));
        }
        coeffs.resize(3, ExactScalar::zero());
        let [a, b, c]: [ExactScalar; 3] = coeffs.try_into().expect("resized to 3");
        Ok(Self::Polynomial([a, b, c]))
    }

    pub fn explicit(values: impl IntoIterator<Item = ExactScalar>) -> Self {
        Self::Explicit(values.into_iter().collect())
    }

    pub fn eval(&self, k: usize) -> Result<ExactScalar> {
        match self {
            Self::Polynomial([a, b, c]) => {
                let k = ExactScalar::from(k);
                Ok(a + &k * (b + &k * c))
            }
            Self::Explicit(values) => values.get(k).cloned().ok_or(
                TriadError::IndexBeyondExplicitList {
                    index: k,
                    len: values.len(),
                },
            ),
        }
    }

    /// Renders the sequence in the expression grammar, with `var` as the
    /// index variable.
    pub fn display_with(&self, var: char) -> impl fmt::Display + '_ {
        SequenceDisplay { spec: self, var }
    }
}

struct SequenceDisplay<'a> {
    spec: &'a SequenceSpec,
    var: char,
}

impl fmt::Display for SequenceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spec {
            SequenceSpec::Explicit(values) => {
                f.write_str("list:")?;
                for (idx, v) in values.iter().enumerate() {
                    if idx > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            SequenceSpec::Polynomial(coeffs) => {
                let mut first = true;
                for (power, c) in coeffs.iter().enumerate().rev() {
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
                    write!(f, "{}", self.var)?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with('k'))
    }
}

/// The three weight sequences of one triad: up-steps `i`, stays `q`,
/// down-steps `d`.
///
/// `d_0` always reads as zero, whatever the `d` sequence says.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriadSpec {
    name: Option<String>,
    i: SequenceSpec,
    q: SequenceSpec,
    d: SequenceSpec,
}

impl TriadSpec {
    pub fn new(i: SequenceSpec, q: SequenceSpec, d: SequenceSpec) -> Self {
        Self {
            name: None,
            i,
            q,
            d,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn i_spec(&self) -> &SequenceSpec {
        &self.i
    }

    pub fn q_spec(&self) -> &SequenceSpec {
        &self.q
    }

    pub fn d_spec(&self) -> &SequenceSpec {
        &self.d
    }

    pub fn i(&self, k: usize) -> Result<ExactScalar> {
        self.i.eval(k)
    }

    pub fn q(&self, k: usize) -> Result<ExactScalar> {
        self.q.eval(k)
    }

    pub fn d(&self, k: usize) -> Result<ExactScalar> {
        if k == 0 {
            Ok(ExactScalar::zero())
        } else {
            self.d.eval(k)
        }
    }
}
