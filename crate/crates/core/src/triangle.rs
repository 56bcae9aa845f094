//! Connection-constant triangles from the forward recurrence.

use alloc::vec;
use alloc::vec::Vec;

use crate::{ExactScalar, Result, Row, TriadSpec};

/// Rows `0..=N` of `c[n][k]`; row `n` stores `k = 0..=n`, everything to the
/// right of the diagonal is zero and not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectionTriangle {
    pub rows: Vec<Row>,
    pub triad: TriadSpec,
}

impl ConnectionTriangle {
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `c[n][k]`, zero for `k > n`. Panics if row `n` was not generated.
    pub fn get(&self, n: usize, k: usize) -> ExactScalar {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

/// One step of `c[n+1][k] = i[k-1] c[n][k-1] + q[k] c[n][k] + d[k+1] c[n][k+1]`.
///
/// `row` holds `c[n][0..=n]`; the result holds `c[n+1][0..=n+1]`. Entries
/// outside the stored row count as zero.
pub fn step_row(triad: &TriadSpec, row: &[ExactScalar]) -> Result<Row> {
    let n = row.len();
    let mut next = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = ExactScalar::zero();
        if k >= 1 {
            acc += triad.i(k - 1)? * &row[k - 1];
        }
        if let Some(c) = row.get(k) {
            acc += triad.q(k)? * c;
        }
        if let Some(c) = row.get(k + 1) {
            acc += triad.d(k + 1)? * c;
        }
        next.push(acc);
    }
    Ok(next)
}

/// Rows `0..=max_row` starting from `c[0] = [1]`.
pub fn triangle(triad: &TriadSpec, max_row: usize) -> Result<ConnectionTriangle> {
    let mut rows: Vec<Row> = Vec::with_capacity(max_row + 1);
    rows.push(vec![ExactScalar::one()]);
    for n in 0..max_row {
        let next = step_row(triad, &rows[n])?;
        rows.push(next);
    }
    Ok(ConnectionTriangle {
        rows,
        triad: triad.clone(),
    })
}

/// Cumulative connection constants `K_n = sum_k c[n][k]`.
pub fn row_sums(tri: &ConnectionTriangle) -> Vec<ExactScalar> {
    tri.rows.iter().map(|row| row.iter().sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{SequenceSpec, TriadError};

    fn ints(v: &[i64]) -> Row {
        v.iter().map(|&x| ExactScalar::from(x)).collect()
    }

    fn triad(i: SequenceSpec, q: SequenceSpec, d: SequenceSpec) -> TriadSpec {
        TriadSpec::new(i, q, d)
    }

    fn pascal() -> TriadSpec {
        triad(
            SequenceSpec::constant(1),
            SequenceSpec::constant(1),
            SequenceSpec::constant(0),
        )
    }

    fn stirling() -> TriadSpec {
        triad(
            SequenceSpec::constant(1),
            SequenceSpec::linear(0, 1),
            SequenceSpec::constant(0),
        )
    }

    fn hermite() -> TriadSpec {
        triad(
            SequenceSpec::constant(1),
            SequenceSpec::constant(0),
            SequenceSpec::linear(0, 1),
        )
    }

    fn tchebychev() -> TriadSpec {
        triad(
            SequenceSpec::constant(1),
            SequenceSpec::constant(0),
            SequenceSpec::constant(1),
        )
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_row(&pascal(), &ints(&[1, 1])), Ok(ints(&[1, 2, 1])));
        assert_eq!(
            step_row(&tchebychev(), &ints(&[0, 2, 0, 1])),
            Ok(ints(&[2, 0, 3, 0, 1]))
        );
        let odd = triad(
            SequenceSpec::constant(3),
            SequenceSpec::constant(-2),
            SequenceSpec::constant(9),
        );
        assert_eq!(step_row(&odd, &ints(&[1])), Ok(ints(&[-2, 3])));
    }

    #[test]
    fn triangle_examples() {
        let t = triangle(&stirling(), 5).unwrap();
        assert_eq!(t.rows[5], ints(&[0, 1, 15, 25, 10, 1]));
        let h = triangle(&hermite(), 4).unwrap();
        assert_eq!(h.rows[4], ints(&[3, 0, 6, 0, 1]));
        let laguerre = triad(
            SequenceSpec::constant(-1),
            SequenceSpec::linear(0, 2),
            SequenceSpec::quadratic(0, 1, -1),
        );
        let l = triangle(&laguerre, 4).unwrap();
        assert_eq!(l.rows[4], ints(&[0, -24, 36, -12, 1]));
    }

    #[test]
    fn row_zero_and_shape() {
        let t = triangle(&hermite(), 0).unwrap();
        assert_eq!(t.rows, vec![ints(&[1])]);
        let t = triangle(&hermite(), 7).unwrap();
        for (n, row) in t.rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1);
        }
        assert!(t.get(3, 6).is_zero());
    }

    #[test]
    fn explicit_list_bounds_propagate() {
        let short = triad(
            SequenceSpec::explicit(ints(&[1, 1])),
            SequenceSpec::constant(0),
            SequenceSpec::constant(0),
        );
        assert!(triangle(&short, 2).is_ok());
        assert_eq!(
            triangle(&short, 3).unwrap_err(),
            TriadError::IndexBeyondExplicitList { index: 2, len: 2 }
        );
    }

    #[test]
    fn sums() {
        let sums = |t: &TriadSpec| row_sums(&triangle(t, 4).unwrap());
        assert_eq!(sums(&pascal()), ints(&[1, 2, 4, 8, 16]));
        assert_eq!(sums(&stirling()), ints(&[1, 1, 2, 5, 15]));
        assert_eq!(sums(&hermite()), ints(&[1, 1, 2, 4, 10]));
    }
}
