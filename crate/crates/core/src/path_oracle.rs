//! Brute-force oracle: enumerate every walk on the levels `0, 1, 2, ...` and
//! add up the products of the weights met along the way.
//!
//! A step from level `l` goes up with weight `i_l`, stays with weight `q_l`
//! or goes down with weight `d_l`. Walks never go below level 0. With
//! nonnegative integer weights the sums are plain counts of histories.

use alloc::vec::Vec;

use crate::{ConnectionTriangle, ExactScalar, Result, Row, TriadError, TriadSpec};

/// Longest walk [`count_paths`] will enumerate (`3^14` is about 4.8 million).
pub const MAX_STEPS: usize = 14;

/// Largest row index [`oracle_triangle`] will build.
pub const MAX_ORACLE_ROW: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    Up,
    Stay,
    Down,
}

/// One enumerated walk and the product of its departure weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathWeight {
    pub moves: Vec<Move>,
    pub weight: ExactScalar,
}

struct Walker<'a> {
    triad: &'a TriadSpec,
    end: usize,
    // [up, stay, down] per level, each read on first use
    weights: Vec<[Option<ExactScalar>; 3]>,
    moves: Vec<Move>,
}

impl Walker<'_> {
    fn weight(&mut self, level: usize, mv: Move) -> Result<ExactScalar> {
        if self.weights.len() <= level {
            self.weights.resize(level + 1, [None, None, None]);
        }
        let slot = &mut self.weights[level][mv as usize];
        if let Some(w) = slot {
            return Ok(w.clone());
        }
        let w = match mv {
            Move::Up => self.triad.i(level)?,
            Move::Stay => self.triad.q(level)?,
            Move::Down => self.triad.d(level)?,
        };
        *slot = Some(w.clone());
        Ok(w)
    }

    fn walk(
        &mut self,
        level: usize,
        remaining: usize,
        weight: &ExactScalar,
        visit: &mut dyn FnMut(&[Move], &ExactScalar),
    ) -> Result<()> {
        if remaining == 0 {
            if level == self.end {
                visit(&self.moves, weight);
            }
            return Ok(());
        }
        let candidates = [
            (Move::Up, Some(level + 1)),
            (Move::Stay, Some(level)),
            (Move::Down, level.checked_sub(1)),
        ];
        for (mv, next) in candidates {
            let Some(next) = next else { continue };
            // Walks that cannot get back to `end` in time contribute nothing.
            if next.abs_diff(self.end) > remaining - 1 {
                continue;
            }
            let w = self.weight(level, mv)?;
            if w.is_zero() {
                continue;
            }
            self.moves.push(mv);
            let extended = weight * &w;
            self.walk(next, remaining - 1, &extended, visit)?;
            self.moves.pop();
        }
        Ok(())
    }
}

/// Calls `visit` for every nonzero-weight walk of exactly `steps` moves from
/// `start` to `end`.
pub fn for_each_path(
    triad: &TriadSpec,
    steps: usize,
    start: usize,
    end: usize,
    mut visit: impl FnMut(&[Move], &ExactScalar),
) -> Result<()> {
    if steps > MAX_STEPS {
        return Err(TriadError::EnumerationBoundExceeded {
            steps,
            bound: MAX_STEPS,
        });
    }
    if start.abs_diff(end) > steps {
        return Ok(());
    }
    let mut walker = Walker {
        triad,
        end,
        weights: Vec::new(),
        moves: Vec::with_capacity(steps),
    };
    walker.walk(start, steps, &ExactScalar::one(), &mut visit)
}

/// Every nonzero-weight walk from `start` to `end`, collected.
pub fn paths(triad: &TriadSpec, steps: usize, start: usize, end: usize) -> Result<Vec<PathWeight>> {
    let mut out = Vec::new();
    for_each_path(triad, steps, start, end, |moves, weight| {
        out.push(PathWeight {
            moves: moves.to_vec(),
            weight: weight.clone(),
        })
    })?;
    Ok(out)
}

/// Sum of walk weights from `start` to `end` in `steps` moves.
pub fn count_paths(triad: &TriadSpec, steps: usize, start: usize, end: usize) -> Result<ExactScalar> {
    let mut total = ExactScalar::zero();
    for_each_path(triad, steps, start, end, |_, w| total += w)?;
    Ok(total)
}

/// Rows `0..=max_row` with `c[n][k] = count_paths(triad, n, 0, k)`.
pub fn oracle_triangle(triad: &TriadSpec, max_row: usize) -> Result<ConnectionTriangle> {
    if max_row > MAX_ORACLE_ROW {
        return Err(TriadError::EnumerationBoundExceeded {
            steps: max_row,
            bound: MAX_ORACLE_ROW,
        });
    }
    let rows = (0..=max_row)
        .map(|n| (0..=n).map(|k| count_paths(triad, n, 0, k)).collect::<Result<Row>>())
        .collect::<Result<Vec<Row>>>()?;
    Ok(ConnectionTriangle {
        rows,
        triad: triad.clone(),
    })
}
