//! The one-step transition matrix of a triad and its powers.
//!
//! Row dynamics `C[n+1] = C[n] X` reproduce the forward recurrence, and the
//! `(k, l)` entry of `X^n` is the weighted number of `n`-step walks from level
//! `k` to level `l`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{ExactScalar, Result, Row, TriadSpec};

/// A finite tridiagonal section of the transition matrix.
///
/// Row `r` carries `d_r` left of the diagonal, `q_r` on it and `i_r` right of
/// it. Entries with `|r - c| > 1` are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BandedMatrix {
    /// `d_1..d_{size-1}`
    pub sub: Vec<ExactScalar>,
    /// `q_0..q_{size-1}`
    pub main: Vec<ExactScalar>,
    /// `i_0..i_{size-2}`
    pub sup: Vec<ExactScalar>,
}

impl BandedMatrix {
    pub fn size(&self) -> usize {
        self.main.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> ExactScalar {
        let value = if r == c {
            self.main.get(r)
        } else if c + 1 == r {
            self.sub.get(c)
        } else if r + 1 == c {
            self.sup.get(r)
        } else {
            None
        };
        value.cloned().unwrap_or_default()
    }

    /// Row vector times matrix, `v X`. `v` must have length `size`.
    pub fn left_mul(&self, v: &[ExactScalar]) -> Row {
        let size = self.size();
        assert_eq!(v.len(), size, "row vector length must match matrix size");
        (0..size)
            .map(|c| {
                let mut acc = &v[c] * &self.main[c];
                if c >= 1 {
                    acc += &v[c - 1] * &self.sup[c - 1];
                }
                if c + 1 < size {
                    acc += &v[c + 1] * &self.sub[c];
                }
                acc
            })
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let size = self.size();
        let mut m = DenseMatrix::zeros(size);
        for r in 0..size {
            for c in r.saturating_sub(1)..(r + 2).min(size) {
                *m.entry_mut(r, c) = self.entry(r, c);
            }
        }
        m
    }

    /// `X^exp` by repeated squaring on the dense form.
    pub fn pow(&self, exp: u32) -> DenseMatrix {
        self.to_dense().pow(exp)
    }
}

/// Square dense matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    size: usize,
    entries: Vec<ExactScalar>,
}

impl DenseMatrix {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![ExactScalar::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for r in 0..size {
            *m.entry_mut(r, r) = ExactScalar::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.size + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut ExactScalar {
        &mut self.entries[r * self.size + c]
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.entries[r * self.size..(r + 1) * self.size]
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.size, rhs.size, "matrix sizes must match");
        let size = self.size;
        let mut out = DenseMatrix::zeros(size);
        for r in 0..size {
            for m in 0..size {
                let a = self.entry(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..size {
                    let b = rhs.entry(m, c);
                    if !b.is_zero() {
                        *out.entry_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> DenseMatrix {
        let mut result = DenseMatrix::identity(self.size);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// The `size x size` leading section of the transition matrix of `triad`.
pub fn transition_matrix(triad: &TriadSpec, size: usize) -> Result<BandedMatrix> {
    let main = (0..size).map(|k| triad.q(k)).collect::<Result<_>>()?;
    let sub = (1..size).map(|k| triad.d(k)).collect::<Result<_>>()?;
    let sup = (0..size.saturating_sub(1))
        .map(|k| triad.i(k))
        .collect::<Result<_>>()?;
    Ok(BandedMatrix { sub, main, sup })
}

/// `(X^n)_{k,l}`: the weighted number of `n`-step walks from level `k` to
/// level `l`.
///
/// The matrix is truncated at size `k + n + 1`, which a walk of `n` steps from
/// `k` cannot leave, so the truncation never changes the answer.
pub fn matrix_power_entry(triad: &TriadSpec, n: usize, k: usize, l: usize) -> Result<ExactScalar> {
    let size = k + n + 1;
    let x = transition_matrix(triad, size)?;
    let mut state = vec![ExactScalar::zero(); size];
    state[k] = ExactScalar::one();
    for _ in 0..n {
        state = x.left_mul(&state);
    }
    Ok(state.get(l).cloned().unwrap_or_default())
}
