use crate::error::{Error, Result};
use crate::qstate::{flat_index, labels_of};

/// Dense payoff table over every classical outcome.
///
/// Outcomes are stored in row-major order with player 1 most significant,
/// which matches the basis ordering of the quantum register: the payoff for
/// outcome index `k` is paid when basis state `|k⟩` is measured.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalMatrix {
    moves: Vec<usize>,
    payoffs: Vec<Vec<f64>>,
}

impl ClassicalMatrix {
    pub fn new(moves: Vec<usize>, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        if moves.len() < 2 {
            return Err(Error::InvalidGame(format!(
                "need at least 2 players, got {}",
                moves.len()
            )));
        }
        if let Some(&m) = moves.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGame(format!(
                "every player needs ≥ 2 moves, got {m}"
            )));
        }
        let outcomes: usize = moves.iter().product();
        if payoffs.len() != outcomes {
            return Err(Error::InvalidGame(format!(
                "expected {outcomes} payoff entries, got {}",
                payoffs.len()
            )));
        }
        for (k, p) in payoffs.iter().enumerate() {
            if p.len() != moves.len() {
                return Err(Error::InvalidGame(format!(
                    "outcome {k}: expected {} payoffs, got {}",
                    moves.len(),
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidGame(format!(
                    "outcome {k}: non-finite payoff"
                )));
            }
        }
        Ok(ClassicalMatrix { moves, payoffs })
    }

    /// Builds the table by evaluating `f` on every outcome tuple.
    pub fn from_fn<F>(moves: Vec<usize>, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Vec<f64>,
    {
        let outcomes: usize = moves.iter().product();
        let payoffs = (0..outcomes).map(|k| f(&labels_of(&moves, k))).collect();
        Self::new(moves, payoffs)
    }

    /// Two-player table from row-player and column-player matrices.
    pub fn bimatrix(row: &[Vec<f64>], col: &[Vec<f64>]) -> Result<Self> {
        let r = row.len();
        let c = row.first().map_or(0, Vec::len);
        if col.len() != r || row.iter().chain(col).any(|v| v.len() != c) {
            return Err(Error::InvalidGame("bimatrix shapes differ".into()));
        }
        Self::from_fn(vec![r, c], |o| vec![row[o[0]][o[1]], col[o[0]][o[1]]])
    }

    pub fn n_players(&self) -> usize {
        self.moves.len()
    }

    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    pub fn num_outcomes(&self) -> usize {
        self.payoffs.len()
    }

    /// Payoffs by flat outcome index.
    pub fn payoffs_at(&self, index: usize) -> &[f64] {
        &self.payoffs[index]
    }

    pub fn payoff(&self, outcome: &[usize]) -> Result<&[f64]> {
        if outcome.len() != self.moves.len() {
            return Err(Error::DimensionMismatch {
                expected: self.moves.len(),
                got: outcome.len(),
            });
        }
        Ok(&self.payoffs[flat_index(&self.moves, outcome)?])
    }

    pub fn index_of(&self, outcome: &[usize]) -> Result<usize> {
        flat_index(&self.moves, outcome)
    }

    pub fn outcome_of(&self, index: usize) -> Vec<usize> {
        labels_of(&self.moves, index)
    }

    /// All outcome tuples in flat-index order.
    pub fn outcomes(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.num_outcomes()).map(move |k| self.outcome_of(k))
    }

    /// Expected payoffs under a probability vector over flat outcomes.
    pub fn expected(&self, probs: &[f64]) -> Result<Vec<f64>> {
        if probs.len() != self.num_outcomes() {
            return Err(Error::DimensionMismatch {
                expected: self.num_outcomes(),
                got: probs.len(),
            });
        }
        let mut out = vec![0.0; self.n_players()];
        for (p, pay) in probs.iter().zip(&self.payoffs) {
            for (o, x) in out.iter_mut().zip(pay) {
                *o += p * x;
            }
        }
        Ok(out)
    }

    pub fn is_zero_sum(&self, tol: f64) -> bool {
        self.payoffs
            .iter()
            .all(|p| p.iter().sum::<f64>().abs() <= tol)
    }

    /// Two players, equal move counts and `payoff_A(x, y) = payoff_B(y, x)`.
    pub fn is_symmetric(&self) -> bool {
        if self.n_players() != 2 || self.moves[0] != self.moves[1] {
            return false;
        }
        let n = self.moves[0];
        (0..n).all(|x| (0..n).all(|y| self.payoffs[x * n + y][0] == self.payoffs[y * n + x][1]))
    }
}
