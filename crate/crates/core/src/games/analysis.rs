//! Classical solution concepts evaluated directly from their definitions.

use super::ClassicalMatrix;
use crate::error::{Error, Result};

/// Payoff to `player` at `outcome` with their own move replaced by `mv`.
fn deviate(m: &ClassicalMatrix, outcome: &[usize], player: usize, mv: usize) -> f64 {
    let mut o = outcome.to_vec();
    o[player] = mv;
    m.payoffs_at(m.index_of(&o).expect("valid outcome"))[player]
}

/// For each player, the lowest-indexed move that weakly dominates every
/// alternative against every combination of opponent moves.
pub fn find_dominant_strategies(m: &ClassicalMatrix) -> Vec<Option<usize>> {
    (0..m.n_players())
        .map(|player| {
            (0..m.moves()[player]).find(|&candidate| {
                m.outcomes().all(|o| {
                    let mine = deviate(m, &o, player, candidate);
                    (0..m.moves()[player]).all(|alt| mine >= deviate(m, &o, player, alt))
                })
            })
        })
        .collect()
}

/// Every outcome at which no player gains by a unilateral change of move.
pub fn find_pure_nash(m: &ClassicalMatrix) -> Vec<Vec<usize>> {
    m.outcomes()
        .filter(|o| {
            let pay = m.payoff(o).expect("valid outcome");
            (0..m.n_players()).all(|p| (0..m.moves()[p]).all(|alt| deviate(m, o, p, alt) <= pay[p]))
        })
        .collect()
}

/// Outcomes not Pareto-dominated by any other outcome.
pub fn pareto_optimal_outcomes(m: &ClassicalMatrix) -> Vec<Vec<usize>> {
    let n = m.num_outcomes();
    (0..n)
        .filter(|&k| {
            let a = m.payoffs_at(k);
            !(0..n).any(|j| {
                let b = m.payoffs_at(j);
                b.iter().zip(a).all(|(x, y)| x >= y) && b.iter().zip(a).any(|(x, y)| x > y)
            })
        })
        .map(|k| m.outcome_of(k))
        .collect()
}

/// An entry that is the minimum of its row and the maximum of its column in
/// the row player's values, first in row-major order.
pub fn saddle_point(m: &ClassicalMatrix) -> Result<Option<(usize, usize)>> {
    if m.n_players() != 2 || !m.is_zero_sum(1e-12) {
        return Err(Error::InvalidGame(
            "saddle points need a two-player zero-sum game".into(),
        ));
    }
    let (rows, cols) = (m.moves()[0], m.moves()[1]);
    let v = |r: usize, c: usize| m.payoffs_at(r * cols + c)[0];
    for r in 0..rows {
        for c in 0..cols {
            let x = v(r, c);
            let row_min = (0..cols).all(|j| v(r, j) >= x);
            let col_max = (0..rows).all(|i| v(i, c) <= x);
            if row_min && col_max {
                return Ok(Some((r, c)));
            }
        }
    }
    Ok(None)
}

/// Evolutionary stability of `candidate` against invasion by `rival` in a
/// symmetric 2×2 game: `E(A,A) > E(B,A)`, or `E(A,A) = E(B,A)` and
/// `E(A,B) > E(B,B)`. Only pure rivals are tested.
pub fn is_ess_2x2(m: &ClassicalMatrix, candidate: usize, rival: usize) -> Result<bool> {
    if m.moves() != [2, 2] || !m.is_symmetric() {
        return Err(Error::InvalidGame("ESS needs a symmetric 2x2 game".into()));
    }
    if candidate > 1 || rival > 1 || candidate == rival {
        return Err(Error::InvalidGame(format!(
            "candidate {candidate} and rival {rival} must be distinct moves in {{0, 1}}"
        )));
    }
    let e = |x: usize, y: usize| m.payoffs_at(x * 2 + y)[0];
    let (a, b) = (candidate, rival);
    Ok(e(a, a) > e(b, a) || (e(a, a) == e(b, a) && e(a, b) > e(b, b)))
}
