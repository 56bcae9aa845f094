//! Built-in triads with closed-form oracles, generalized Lah numbers for
//! persistent-root bases, and two connection-constant families that are not
//! triads at all (Eulerian and Abel).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::duality::expand_polynomial;
use crate::{ExactScalar, Polynomial, Result, Row, SequenceSpec, TriadError, TriadSpec};

/// Catalog names accepted by [`builtin`]. `pascal_s` takes its parameter as
/// `pascal_s(s)`, e.g. `pascal_s(3)` or `pascal_s(-1/2)`.
pub const NAMES: [&str; 9] = [
    "pascal",
    "pascal_s",
    "stirling2",
    "stirling2_signed",
    "newton_gregory",
    "hermite",
    "laguerre",
    "lah",
    "tchebychev",
];

/// Closed forms for `c[n][k]`, independent of the recurrence engines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClosedForm {
    /// `C(n,k)`
    Pascal,
    /// `C(n,k) s^(n-k)`
    PascalS(ExactScalar),
    /// `S(n,k)` by inclusion-exclusion
    Stirling2,
    /// `(-1)^(n-k) S(n,k)`
    Stirling2Signed,
    /// `k! S(n,k)`
    NewtonGregory,
    /// `n! / (k! 2^m m!)` for `n - k = 2m`, zero for odd `n - k`
    Hermite,
    /// `C(n-1,k-1) n! / k!`
    Lah,
    /// `(-1)^k` times the Lah number
    Laguerre,
    /// ballot numbers `C(n,m) - C(n,m-1)` for `n - k = 2m`, zero for odd `n - k`
    Tchebychev,
}

impl ClosedForm {
    pub fn eval(&self, n: usize, k: usize) -> Result<ExactScalar> {
        if k > n {
            return Err(TriadError::IndexOutOfTriangle { n, k });
        }
        let sign = |odd: bool| if odd { -BigInt::one() } else { BigInt::one() };
        let value: ExactScalar = match self {
            Self::Pascal => binomial(n, k).into(),
            Self::PascalS(s) => ExactScalar::from(binomial(n, k)) * s.pow((n - k) as u32),
            Self::Stirling2 => stirling2(n, k).into(),
            Self::Stirling2Signed => (sign((n - k) % 2 == 1) * stirling2(n, k)).into(),
            Self::NewtonGregory => (factorial(k) * stirling2(n, k)).into(),
            Self::Hermite => {
                if (n - k) % 2 == 1 {
                    ExactScalar::zero()
                } else {
                    let m = (n - k) / 2;
                    let denom = factorial(k) * (BigInt::one() << m) * factorial(m);
                    (factorial(n) / denom).into()
                }
            }
            Self::Lah => lah(n, k).into(),
            Self::Laguerre => (sign(k % 2 == 1) * lah(n, k)).into(),
            Self::Tchebychev => {
                if (n - k) % 2 == 1 {
                    ExactScalar::zero()
                } else {
                    let m = (n - k) / 2;
                    let below = if m == 0 { BigInt::zero() } else { binomial(n, m - 1) };
                    (binomial(n, m) - below).into()
                }
            }
        };
        Ok(value)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub triad: TriadSpec,
    pub oracle: Option<ClosedForm>,
    pub description: &'static str,
}

impl CatalogEntry {
    pub fn closed_form(&self, n: usize, k: usize) -> Result<ExactScalar> {
        self.oracle
            .as_ref()
            .ok_or_else(|| TriadError::NoOracle(self.name.clone()))?
            .eval(n, k)
    }
}

fn entry(
    name: impl Into<String>,
    i: SequenceSpec,
    q: SequenceSpec,
    d: SequenceSpec,
    oracle: ClosedForm,
    description: &'static str,
) -> CatalogEntry {
    let name = name.into();
    CatalogEntry {
        triad: TriadSpec::new(i, q, d).with_name(name.clone()),
        name,
        oracle: Some(oracle),
        description,
    }
}

/// Pascal triad with stay weight `s`: `c[n][k] = C(n,k) s^(n-k)`.
pub fn pascal_s(s: ExactScalar) -> CatalogEntry {
    entry(
        format!("pascal_s({s})"),
        SequenceSpec::constant(1),
        SequenceSpec::constant(s.clone()),
        SequenceSpec::constant(0),
        ClosedForm::PascalS(s),
        "binomial coefficients weighted by s^(n-k); basis (x-s)^n",
    )
}

pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || TriadError::UnknownName(name.into());
    let one = || SequenceSpec::constant(1);
    let zero = || SequenceSpec::constant(0);
    let e = match name.trim() {
        "pascal" => entry(
            "pascal",
            one(),
            one(),
            zero(),
            ClosedForm::Pascal,
            "binomial coefficients; basis (x-1)^n",
        ),
        "stirling2" => entry(
            "stirling2",
            one(),
            SequenceSpec::linear(0, 1),
            zero(),
            ClosedForm::Stirling2,
            "Stirling numbers of the second kind; basis falling factorials",
        ),
        "stirling2_signed" => entry(
            "stirling2_signed",
            one(),
            SequenceSpec::linear(0, -1),
            zero(),
            ClosedForm::Stirling2Signed,
            "signed Stirling numbers of the second kind; basis rising factorials",
        ),
        "newton_gregory" => entry(
            "newton_gregory",
            SequenceSpec::linear(1, 1),
            SequenceSpec::linear(0, 1),
            zero(),
            ClosedForm::NewtonGregory,
            "k! S(n,k); basis binomial(x, k), not monic",
        ),
        "hermite" => entry(
            "hermite",
            one(),
            zero(),
            SequenceSpec::linear(0, 1),
            ClosedForm::Hermite,
            "monic Hermite polynomials; zero whenever n-k is odd",
        ),
        "laguerre" => entry(
            "laguerre",
            SequenceSpec::constant(-1),
            SequenceSpec::linear(0, 2),
            SequenceSpec::quadratic(0, 1, -1),
            ClosedForm::Laguerre,
            "signed Lah numbers; basis binomial Laguerre polynomials",
        ),
        "lah" => entry(
            "lah",
            one(),
            SequenceSpec::linear(0, 2),
            SequenceSpec::quadratic(0, -1, 1),
            ClosedForm::Lah,
            "Lah numbers C(n-1,k-1) n!/k!",
        ),
        "tchebychev" => entry(
            "tchebychev",
            one(),
            zero(),
            one(),
            ClosedForm::Tchebychev,
            "ballot numbers; basis U_k(x/2), Chebyshev of the second kind",
        ),
        other => {
            let arg = other
                .strip_prefix("pascal_s(")
                .and_then(|rest| rest.strip_suffix(')'))
                .ok_or_else(unknown)?;
            let s = arg.parse::<ExactScalar>().map_err(|_| unknown())?;
            pascal_s(s)
        }
    };
    Ok(e)
}

/// The nine catalog triads, with `pascal_s` at `s = 3`.
pub fn standard_entries() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|&name| match name {
            "pascal_s" => pascal_s(3.into()),
            name => builtin(name).expect("catalog name"),
        })
        .collect()
}

pub fn closed_form(name: &str, n: usize, k: usize) -> Result<ExactScalar> {
    builtin(name)?.closed_form(n, k)
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, j| acc * (n - j) / (j + 1))
}

/// `S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n`, with `0^0 = 1`.
pub(crate) fn stirling2(n: usize, k: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * num_traits::pow(BigInt::from(k - j), n);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total / factorial(k)
}

fn lah(n: usize, k: usize) -> BigInt {
    match (n, k) {
        (0, 0) => BigInt::one(),
        (_, 0) => BigInt::zero(),
        _ => binomial(n - 1, k - 1) * factorial(n) / factorial(k),
    }
}

/// Roots `r_1, r_2, ...` of a monic persistent-root sequence
/// `q_k(x) = (x - r_1)...(x - r_k)`, indexed from 1.
///
/// A polynomial spec is evaluated at `j`; an explicit list holds
/// `r_1, r_2, ...` in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSequence(pub SequenceSpec);

impl RootSequence {
    pub fn root(&self, j: usize) -> Result<ExactScalar> {
        assert!(j >= 1, "roots are indexed from 1");
        match &self.0 {
            SequenceSpec::Explicit(roots) => roots.get(j - 1).cloned().ok_or(
                TriadError::IndexBeyondExplicitList {
                    index: j,
                    len: roots.len(),
                },
            ),
            poly => poly.eval(j),
        }
    }

    /// `q_0..=q_max` as explicit polynomials.
    pub fn polynomials(&self, max: usize) -> Result<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(Polynomial::one());
        for j in 1..=max {
            let next = &out[j - 1] * &Polynomial::linear_factor(&self.root(j)?);
            out.push(next);
        }
        Ok(out)
    }
}

/// Connection constants `p_n = sum_k L[n][k] q_k` between two monic
/// persistent-root sequences, by
/// `L[n+1][k] = L[n][k-1] + (r_{k+1} - s_{n+1}) L[n][k]`, `L[0][0] = 1`.
///
/// `r` holds the roots of the basis `q`, `s` those of the target `p`.
pub fn generalized_lah(r: &RootSequence, s: &RootSequence, max_row: usize) -> Result<Vec<Row>> {
    let mut rows: Vec<Row> = Vec::with_capacity(max_row + 1);
    rows.push(vec![ExactScalar::one()]);
    for n in 0..max_row {
        let s_next = s.root(n + 1)?;
        let prev = &rows[n];
        let mut next = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut acc = ExactScalar::zero();
            if k >= 1 {
                acc += &prev[k - 1];
            }
            if let Some(c) = prev.get(k) {
                acc += (r.root(k + 1)? - &s_next) * c;
            }
            next.push(acc);
        }
        rows.push(next);
    }
    Ok(rows)
}

/// Same constants as [`generalized_lah`], by building both polynomial
/// sequences explicitly and solving the triangular change of basis.
pub fn expand_roots(r: &RootSequence, s: &RootSequence, max_row: usize) -> Result<Vec<Row>> {
    let basis = r.polynomials(max_row)?;
    let targets = s.polynomials(max_row)?;
    targets
        .iter()
        .map(|p| expand_polynomial(&basis, p))
        .collect()
}

/// Weights of the Eulerian recurrence
/// `E[n+1][k] = (k+1) E[n][k] + (n+1-k) E[n][k-1]`: `(stay, from_below)`.
///
/// `from_below` depends on the time step `n`, which is exactly what keeps the
/// Eulerian numbers out of the triad family.
pub fn eulerian_step_weights(n: usize, k: usize) -> (BigInt, BigInt) {
    (BigInt::from(k + 1), BigInt::from(n + 1) - BigInt::from(k))
}

/// Eulerian numbers `E[n][k]` for `n = 0..=max_row`, row `n` holding
/// `k = 0..=n` (so the last entry of every row past the first is zero).
///
/// Deliberately separate from the triad engine: the recurrence has
/// time-dependent coefficients and cannot be written as a [`TriadSpec`].
pub fn euler_numbers(max_row: usize) -> Vec<Row> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let (stay, from_below) = eulerian_step_weights(n, k);
                let mut acc = BigInt::zero();
                if let Some(e) = prev.get(k) {
                    acc += stay * e;
                }
                if k >= 1 {
                    acc += from_below * &prev[k - 1];
                }
                acc
            })
            .collect();
        rows.push(next);
    }
    rows.into_iter()
        .map(|row| row.into_iter().map(ExactScalar::from).collect())
        .collect()
}

/// `C(n,k) k^(n-k)`, the coefficients of `x^n` in the Abel polynomials
/// `A_k(x) = x (x + k)^(k-1)`, with `0^0 = 1`. Not a triad triangle.
pub fn abel_connection(n: usize, k: usize) -> Result<ExactScalar> {
    if k > n {
        return Err(TriadError::IndexOutOfTriangle { n, k });
    }
    Ok((binomial(n, k) * num_traits::pow(BigInt::from(k), n - k)).into())
}

impl core::fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{}: i = {}, q = {}, d = {} ({})",
            self.name,
            self.triad.i_spec(),
            self.triad.q_spec(),
            self.triad.d_spec(),
            self.description
        )
    }
}
