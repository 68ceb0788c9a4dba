//! Canonical games and classical matrix analysis.

mod analysis;
mod matrix;

pub use analysis::{
    find_dominant_strategies, find_pure_nash, is_ess_2x2, pareto_optimal_outcomes, saddle_point,
};
pub use matrix::ClassicalMatrix;

use crate::error::{Error, Result};
use crate::operators::{flip, identity, miracle, Unitary};
use crate::qstate::{apply_local, outcome_probabilities, StateVector};

/// Index of the cooperate move (`|0⟩`).
pub const COOPERATE: usize = 0;
/// Index of the defect move (`|1⟩`).
pub const DEFECT: usize = 1;

/// The prisoners' dilemma with `(CC) = (3,3)`, `(CD) = (0,5)`, `(DC) = (5,0)`,
/// `(DD) = (1,1)`.
pub fn prisoners_dilemma() -> ClassicalMatrix {
    prisoners_dilemma_with(3.0, 0.0, 5.0, 1.0)
}

/// A symmetric 2×2 game from the row player's `P_CC`, `P_CD`, `P_DC`, `P_DD`.
pub fn prisoners_dilemma_with(cc: f64, cd: f64, dc: f64, dd: f64) -> ClassicalMatrix {
    ClassicalMatrix::new(
        vec![2, 2],
        vec![vec![cc, cc], vec![cd, dc], vec![dc, cd], vec![dd, dd]],
    )
    .expect("2x2 table is well formed")
}

/// True iff `P_DC > P_CC > P_DD > P_CD` for the row player of a symmetric 2×2 game.
pub fn is_prisoners_dilemma(m: &ClassicalMatrix) -> Result<bool> {
    if m.moves() != [2, 2] {
        return Err(Error::InvalidGame(format!(
            "expected a 2x2 game, got moves {:?}",
            m.moves()
        )));
    }
    if !m.is_symmetric() {
        return Ok(false);
    }
    let p = |a, b| m.payoff(&[a, b]).map(|x| x[0]);
    let (cc, cd) = (p(COOPERATE, COOPERATE)?, p(COOPERATE, DEFECT)?);
    let (dc, dd) = (p(DEFECT, COOPERATE)?, p(DEFECT, DEFECT)?);
    Ok(dc > cc && cc > dd && dd > cd)
}

/// Zero-sum matching pennies: player 1 wins 1 on a match, loses 1 otherwise.
pub fn matching_pennies() -> ClassicalMatrix {
    ClassicalMatrix::from_fn(vec![2, 2], |o| {
        let v = if o[0] == o[1] { 1.0 } else { -1.0 };
        vec![v, -v]
    })
    .expect("2x2 table is well formed")
}

/// N players choose 0 or 1; a player earns 1 when their choice is held by
/// strictly fewer players than the other choice, else 0. Balanced splits pay
/// nobody.
pub fn minority_game(n_players: usize) -> Result<ClassicalMatrix> {
    if n_players < 3 {
        return Err(Error::InvalidGame(format!(
            "the minority game needs at least 3 players, got {n_players}"
        )));
    }
    ClassicalMatrix::from_fn(vec![2; n_players], |o| {
        let ones = o.iter().filter(|&&c| c == 1).count();
        let zeros = o.len() - ones;
        o.iter()
            .map(|&c| {
                let (mine, theirs) = if c == 1 { (ones, zeros) } else { (zeros, ones) };
                if mine < theirs {
                    1.0
                } else {
                    0.0
                }
            })
            .collect()
    })
}

/// Expected payoffs when every player picks a move uniformly at random.
pub fn classical_random_payoff(m: &ClassicalMatrix) -> Vec<f64> {
    let w = 1.0 / m.num_outcomes() as f64;
    m.expected(&vec![w; m.num_outcomes()])
        .expect("probability vector matches outcome count")
}

/// Alice's options in penny flip: leave the coin or flip it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalMove {
    Identity,
    Flip,
}

impl ClassicalMove {
    pub fn unitary(self) -> Unitary {
        match self {
            ClassicalMove::Identity => identity(2).expect("dim 2"),
            ClassicalMove::Flip => flip(),
        }
    }
}

/// Bob moves, Alice makes a classical move, Bob moves again.
#[derive(Clone, Debug, PartialEq)]
pub struct PennyFlipMoves {
    pub bob1: Unitary,
    pub alice: ClassicalMove,
    pub bob2: Unitary,
}

/// Probability that the coin, prepared heads-up as `|0⟩`, shows heads at the
/// end. Bob wins on heads.
pub fn play_penny_flip(moves: &PennyFlipMoves) -> Result<f64> {
    let coin = StateVector::zero_qubits(1)?;
    let coin = apply_local(&coin, 0, &moves.bob1)?;
    let coin = apply_local(&coin, 0, &moves.alice.unitary())?;
    let coin = apply_local(&coin, 0, &moves.bob2)?;
    Ok(outcome_probabilities(&coin)[0])
}

/// The move `U(π/2, π/2, 0)` that beats any classical mixture once the
/// qubits are maximally entangled.
pub fn miracle_move() -> Unitary {
    miracle()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{classical_mix, hadamard};
    use crate::protocol::{pure_payoffs, GameSpec};
    use crate::EntanglementParam;
    use std::f64::consts::PI;

    #[test]
    fn pd_entries() {
        let m = prisoners_dilemma();
        assert_eq!(m.payoff(&[COOPERATE, COOPERATE]).unwrap(), &[3.0, 3.0]);
        assert_eq!(m.payoff(&[COOPERATE, DEFECT]).unwrap(), &[0.0, 5.0]);
        assert_eq!(m.payoff(&[DEFECT, COOPERATE]).unwrap(), &[5.0, 0.0]);
        assert_eq!(m.payoff(&[DEFECT, DEFECT]).unwrap(), &[1.0, 1.0]);
        assert!(m.is_symmetric());
    }

    #[test]
    fn pd_ordering() {
        assert!(is_prisoners_dilemma(&prisoners_dilemma()).unwrap());
        assert!(!is_prisoners_dilemma(&prisoners_dilemma_with(5.0, 0.0, 3.0, 1.0)).unwrap());
        assert!(!is_prisoners_dilemma(&prisoners_dilemma_with(1.0, 1.0, 1.0, 1.0)).unwrap());
        assert!(is_prisoners_dilemma(&minority_game(3).unwrap()).is_err());
    }

    #[test]
    fn minority_rewards() {
        let m = minority_game(4).unwrap();
        assert_eq!(m.payoff(&[0, 1, 1, 1]).unwrap(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(m.payoff(&[0, 0, 1, 1]).unwrap(), &[0.0; 4]);
        assert_eq!(m.payoff(&[1, 1, 1, 1]).unwrap(), &[0.0; 4]);
        assert!(minority_game(2).is_err());
    }

    #[test]
    fn minority_random_play_brute_force() {
        // N = 3: each player wins in the two outcomes where the other two agree
        // against them: 2 of 8 outcomes.
        let m = minority_game(3).unwrap();
        let mut wins = 0;
        for o in m.outcomes() {
            if m.payoff(&o).unwrap()[0] == 1.0 {
                wins += 1;
            }
        }
        assert_eq!(wins, 2);
        assert_eq!(classical_random_payoff(&m), vec![0.25; 3]);
        assert_eq!(
            classical_random_payoff(&minority_game(4).unwrap()),
            vec![0.125; 4]
        );
        assert_eq!(
            classical_random_payoff(&prisoners_dilemma()),
            vec![2.25, 2.25]
        );
    }

    #[test]
    fn penny_flip_hadamard_wins() {
        for alice in [ClassicalMove::Identity, ClassicalMove::Flip] {
            let p = play_penny_flip(&PennyFlipMoves {
                bob1: hadamard(),
                alice,
                bob2: hadamard(),
            })
            .unwrap();
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn penny_flip_classical() {
        let id = identity(2).unwrap();
        let play = |alice| {
            play_penny_flip(&PennyFlipMoves {
                bob1: id.clone(),
                alice,
                bob2: id.clone(),
            })
            .unwrap()
        };
        assert_eq!(play(ClassicalMove::Identity), 1.0);
        assert_eq!(play(ClassicalMove::Flip), 0.0);
    }

    #[test]
    fn miracle_payoff_curve() {
        let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal()).unwrap();
        for k in 0..=8 {
            let theta = PI * k as f64 / 8.0;
            let p = pure_payoffs(&spec, &[classical_mix(theta).unwrap(), miracle_move()]).unwrap();
            assert!((p[1] - (3.0 + 2.0 * theta.sin())).abs() < 1e-12);
            assert!((p[0] - (1.0 - theta.sin()) / 2.0).abs() < 1e-12);
        }
        // θ = π/2: sin = 1, so Bob 5 and Alice 0
        let p = pure_payoffs(&spec, &[classical_mix(PI / 2.0).unwrap(), miracle_move()]).unwrap();
        assert!((p[1] - 5.0).abs() < 1e-12 && p[0].abs() < 1e-12);
    }
}
