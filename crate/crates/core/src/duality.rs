//! Machine check of the duality identity `x^n = sum_k c[n][k] P[k]`.
//!
//! The expansion side never touches the forward recurrence: monomials are
//! expanded in the triad basis by back-substitution on the basis coefficients,
//! and only then compared with the triangle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::polynomials::{poly_combine, triad_polynomials};
use crate::triangle::triangle;
use crate::{ExactScalar, Polynomial, Result, Row, TriadError, TriadSpec};

/// Coefficients `a_0..a_m` of `target = sum_k a_k basis[k]`, where
/// `m = deg target`.
///
/// `basis[k]` must have degree exactly `k` for every `k <= m`.
pub fn expand_polynomial(basis: &[Polynomial], target: &Polynomial) -> Result<Row> {
    let Some(top) = target.degree() else {
        return Ok(Vec::new());
    };
    check_graded(basis, top)?;
    let mut residual = target.clone();
    let mut coeffs = vec![ExactScalar::zero(); top + 1];
    for k in (0..=top).rev() {
        let lead = basis[k].leading_coefficient().expect("graded basis element is nonzero");
        let a = residual.coeff(k) / lead;
        if !a.is_zero() {
            residual = poly_combine(&residual, &ExactScalar::one(), &basis[k], &-&a);
        }
        coeffs[k] = a;
    }
    debug_assert!(residual.is_zero());
    Ok(coeffs)
}

fn check_graded(basis: &[Polynomial], top: usize) -> Result<()> {
    for index in 0..=top {
        let degree = basis.get(index).and_then(Polynomial::degree);
        if degree != Some(index) {
            return Err(TriadError::DegenerateBasis { index, degree });
        }
    }
    Ok(())
}

/// Coefficients `a_0..a_n` of `x^n = sum_k a_k basis[k]`.
pub fn expand_in_basis(basis: &[Polynomial], n: usize) -> Result<Row> {
    expand_polynomial(basis, &Polynomial::monomial(n))
}

/// First disagreement between the triangle and the basis expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    /// `c[n][k]` from the forward recurrence.
    pub triangle: ExactScalar,
    /// `a_k` from expanding `x^n` in the triad basis.
    pub expansion: ExactScalar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualityReport {
    pub name: String,
    pub max_index: usize,
    /// `row_matches[n]` is true when row `n` agrees entrywise.
    pub row_matches: Vec<bool>,
    pub first_mismatch: Option<Mismatch>,
}

impl DualityReport {
    pub fn all_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares triangle rows against expansions of `x^0..x^N` in `basis`.
///
/// Every row gets a status; only the first failing `(n, k)` is recorded.
pub fn compare_rows(name: &str, rows: &[Row], basis: &[Polynomial]) -> Result<DualityReport> {
    let max_index = rows.len().saturating_sub(1);
    let mut row_matches = Vec::with_capacity(rows.len());
    let mut first_mismatch = None;
    for (n, row) in rows.iter().enumerate() {
        let expansion = expand_in_basis(basis, n)?;
        let width = row.len().max(expansion.len());
        let bad_k = (0..width).find(|&k| {
            row.get(k).cloned().unwrap_or_default() != expansion.get(k).cloned().unwrap_or_default()
        });
        row_matches.push(bad_k.is_none());
        if let (Some(k), None) = (bad_k, &first_mismatch) {
            first_mismatch = Some(Mismatch {
                n,
                k,
                triangle: row.get(k).cloned().unwrap_or_default(),
                expansion: expansion.get(k).cloned().unwrap_or_default(),
            });
        }
    }
    Ok(DualityReport {
        name: name.into(),
        max_index,
        row_matches,
        first_mismatch,
    })
}

/// Builds the triangle and the triad polynomials up to `max_index` and checks
/// the duality identity row by row.
pub fn verify_triad(triad: &TriadSpec, max_index: usize) -> Result<DualityReport> {
    let polys = triad_polynomials(triad, max_index)?;
    let tri = triangle(triad, max_index)?;
    compare_rows(triad.name().unwrap_or("custom"), &tri.rows, &polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SequenceSpec;

    fn ints(v: &[i64]) -> Row {
        v.iter().map(|&x| ExactScalar::from(x)).collect()
    }

    fn stirling() -> TriadSpec {
        TriadSpec::new(
            SequenceSpec::constant(1),
            SequenceSpec::linear(0, 1),
            SequenceSpec::constant(0),
        )
        .with_name("stirling2")
    }

    fn hermite() -> TriadSpec {
        TriadSpec::new(
            SequenceSpec::constant(1),
            SequenceSpec::constant(0),
            SequenceSpec::linear(0, 1),
        )
    }

    #[test]
    fn expansion_examples() {
        let basis = triad_polynomials(&stirling(), 3).unwrap();
        assert_eq!(expand_in_basis(&basis, 3), Ok(ints(&[0, 1, 3, 1])));
        assert_eq!(expand_in_basis(&basis, 0), Ok(ints(&[1])));
        let basis = triad_polynomials(&hermite(), 4).unwrap();
        assert_eq!(expand_in_basis(&basis, 4), Ok(ints(&[3, 0, 6, 0, 1])));
    }

    #[test]
    fn degenerate_basis_rejected() {
        let basis = [Polynomial::one(), Polynomial::monomial(2)];
        assert_eq!(
            expand_in_basis(&basis, 1),
            Err(TriadError::DegenerateBasis { index: 1, degree: Some(2) })
        );
        assert_eq!(
            expand_in_basis(&basis[..1], 1),
            Err(TriadError::DegenerateBasis { index: 1, degree: None })
        );
    }

    #[test]
    fn verify_reports_match() {
        let report = verify_triad(&stirling(), 8).unwrap();
        assert!(report.all_match());
        assert_eq!(report.name, "stirling2");
        assert_eq!(report.max_index, 8);
        assert_eq!(report.row_matches.len(), 9);
    }

    #[test]
    fn tampered_triangle_is_caught() {
        let t = stirling();
        let polys = triad_polynomials(&t, 5).unwrap();
        let mut rows = triangle(&t, 5).unwrap().rows;
        rows[4][2] = ExactScalar::from(8);
        rows[5][1] = ExactScalar::from(2);
        let report = compare_rows("tampered", &rows, &polys).unwrap();
        assert!(!report.all_match());
        assert_eq!(report.row_matches, [true, true, true, true, false, false]);
        assert_eq!(
            report.first_mismatch,
            Some(Mismatch {
                n: 4,
                k: 2,
                triangle: 8.into(),
                expansion: 7.into(),
            })
        );
    }

    #[test]
    fn zero_up_weight_propagates() {
        let t = TriadSpec::new(
            SequenceSpec::explicit([ExactScalar::zero()]),
            SequenceSpec::constant(0),
            SequenceSpec::constant(0),
        );
        assert_eq!(verify_triad(&t, 3), Err(TriadError::NoPolynomialSequence(0)));
    }
}
