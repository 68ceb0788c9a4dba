//! Game pipelines and payoff expectation.
//!
//! Two quantization schemes are supported:
//!
//! - [`Variant::EisertFull`]: start in `|0…0⟩`, entangle with `J(γ)`, apply
//!   each player's move to their own qubit, disentangle with `J†`, measure.
//! - [`Variant::MarinattoWeber`]: start in a chosen state, apply the moves,
//!   measure. There is no disentangling gate. Sites may be qudits, so this
//!   variant also runs 2×n games with SU(n) moves.

use crate::error::{Error, Result};
use crate::games::ClassicalMatrix;
use crate::operators::{entangler, EntanglementParam, Unitary};
use crate::qstate::{
    apply_bitflip_noise, apply_global, apply_local, outcome_probabilities, StateVector,
    WeightedEnsemble,
};

/// Which quantization pipeline to run.
#[derive(Clone, Debug, PartialEq)]
pub enum Variant {
    EisertFull { gamma: EntanglementParam },
    MarinattoWeber { initial_state: StateVector },
}

/// A classical payoff table together with its quantization scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct GameSpec {
    matrix: ClassicalMatrix,
    variant: Variant,
}

impl GameSpec {
    /// Entangled game; every player must have exactly two moves.
    pub fn eisert(matrix: ClassicalMatrix, gamma: EntanglementParam) -> Result<Self> {
        if let Some(&m) = matrix.moves().iter().find(|&&m| m != 2) {
            return Err(Error::Unsupported(format!(
                "the entangled protocol needs two moves per player, got {m}"
            )));
        }
        Ok(GameSpec {
            matrix,
            variant: Variant::EisertFull { gamma },
        })
    }

    /// Game played on a supplied initial state without a disentangler.
    pub fn marinatto_weber(matrix: ClassicalMatrix, initial_state: StateVector) -> Result<Self> {
        if initial_state.dims() != matrix.moves() {
            return Err(Error::InvalidGame(format!(
                "initial state dims {:?} do not match moves {:?}",
                initial_state.dims(),
                matrix.moves()
            )));
        }
        Ok(GameSpec {
            matrix,
            variant: Variant::MarinattoWeber { initial_state },
        })
    }

    pub fn matrix(&self) -> &ClassicalMatrix {
        &self.matrix
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn n_players(&self) -> usize {
        self.matrix.n_players()
    }

    pub fn moves(&self) -> &[usize] {
        self.matrix.moves()
    }

    /// Entanglement level, if this is an entangled game.
    pub fn gamma(&self) -> Option<EntanglementParam> {
        match self.variant {
            Variant::EisertFull { gamma } => Some(gamma),
            Variant::MarinattoWeber { .. } => None,
        }
    }

    /// Same payoffs and variant, different entanglement.
    pub fn with_gamma(&self, gamma: EntanglementParam) -> Result<Self> {
        Self::eisert(self.matrix.clone(), gamma)
    }

    /// Precomputes the start state and closing gate for repeated evaluation.
    pub fn prepare(&self) -> Result<PreparedGame<'_>> {
        PreparedGame::new(self)
    }
}

/// A player's strategy: one unitary, or a classical mixture of unitaries.
#[derive(Clone, Debug, PartialEq)]
pub enum Strategy {
    Pure(Unitary),
    Mixed(Vec<(f64, Unitary)>),
}

impl Strategy {
    /// Validated mixture; weights in `[0, 1]` summing to 1 within 1e-12.
    pub fn mixed(components: Vec<(f64, Unitary)>) -> Result<Self> {
        let first = components
            .first()
            .ok_or(Error::Empty("mixed strategy components"))?;
        let dim = first.1.dim();
        let mut total = 0.0;
        for (w, u) in &components {
            if !(0.0..=1.0).contains(w) {
                return Err(Error::InvalidDistribution(format!(
                    "weight {w} outside [0, 1]"
                )));
            }
            if u.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: u.dim(),
                });
            }
            total += w;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}"
            )));
        }
        Ok(Strategy::Mixed(components))
    }

    /// Equal-weight mixture.
    pub fn uniform(moves: Vec<Unitary>) -> Result<Self> {
        let w = 1.0 / moves.len() as f64;
        Self::mixed(moves.into_iter().map(|u| (w, u)).collect())
    }

    pub fn dim(&self) -> usize {
        match self {
            Strategy::Pure(u) => u.dim(),
            Strategy::Mixed(c) => c[0].1.dim(),
        }
    }

    /// `(weight, unitary)` pairs; a pure strategy yields one pair of weight 1.
    pub fn components(&self) -> Vec<(f64, &Unitary)> {
        match self {
            Strategy::Pure(u) => vec![(1.0, u)],
            Strategy::Mixed(c) => c.iter().map(|(w, u)| (*w, u)).collect(),
        }
    }
}

impl From<Unitary> for Strategy {
    fn from(u: Unitary) -> Self {
        Strategy::Pure(u)
    }
}

/// One strategy per player.
#[derive(Clone, Debug, PartialEq)]
pub struct StrategyProfile {
    strategies: Vec<Strategy>,
}

impl StrategyProfile {
    pub fn new(strategies: Vec<Strategy>) -> Result<Self> {
        if strategies.is_empty() {
            return Err(Error::Empty("strategy profile"));
        }
        Ok(StrategyProfile { strategies })
    }

    pub fn pure(moves: Vec<Unitary>) -> Result<Self> {
        Self::new(moves.into_iter().map(Strategy::Pure).collect())
    }

    pub fn strategies(&self) -> &[Strategy] {
        &self.strategies
    }

    pub fn strategy(&self, player: usize) -> &Strategy {
        &self.strategies[player]
    }

    pub fn is_pure(&self) -> bool {
        self.strategies
            .iter()
            .all(|s| matches!(s, Strategy::Pure(_)))
    }

    /// The profile with one player's strategy swapped out.
    pub fn with_strategy(&self, player: usize, strategy: Strategy) -> Self {
        let mut strategies = self.strategies.clone();
        strategies[player] = strategy;
        StrategyProfile { strategies }
    }

    fn check(&self, spec: &GameSpec) -> Result<()> {
        if self.strategies.len() != spec.n_players() {
            return Err(Error::DimensionMismatch {
                expected: spec.n_players(),
                got: self.strategies.len(),
            });
        }
        for (s, &m) in self.strategies.iter().zip(spec.moves()) {
            if s.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: s.dim(),
                });
            }
        }
        Ok(())
    }
}

/// A game with its start state and closing gate precomputed.
#[derive(Clone, Debug)]
pub struct PreparedGame<'a> {
    spec: &'a GameSpec,
    start: StateVector,
    closing: Option<Unitary>,
}

impl<'a> PreparedGame<'a> {
    fn new(spec: &'a GameSpec) -> Result<Self> {
        match &spec.variant {
            Variant::EisertFull { gamma } => {
                let j = entangler(spec.n_players(), *gamma)?;
                let start = apply_global(&StateVector::zero_qubits(spec.n_players())?, &j)?;
                Ok(PreparedGame {
                    spec,
                    start,
                    closing: Some(j.adjoint()),
                })
            }
            Variant::MarinattoWeber { initial_state } => Ok(PreparedGame {
                spec,
                start: initial_state.clone(),
                closing: None,
            }),
        }
    }

    pub fn spec(&self) -> &GameSpec {
        self.spec
    }

    /// Final state for one pure move per player.
    pub fn final_state(&self, moves: &[&Unitary]) -> Result<StateVector> {
        let state = self.after_moves(moves)?;
        match &self.closing {
            Some(j_dag) => apply_global(&state, j_dag),
            None => Ok(state),
        }
    }

    fn after_moves(&self, moves: &[&Unitary]) -> Result<StateVector> {
        if moves.len() != self.spec.n_players() {
            return Err(Error::DimensionMismatch {
                expected: self.spec.n_players(),
                got: moves.len(),
            });
        }
        moves
            .iter()
            .enumerate()
            .try_fold(self.start.clone(), |s, (site, u)| apply_local(&s, site, u))
    }

    pub fn pure_payoffs(&self, moves: &[&Unitary]) -> Result<Vec<f64>> {
        let state = self.final_state(moves)?;
        self.spec.matrix.expected(&outcome_probabilities(&state))
    }

    /// Expected payoffs of a (possibly mixed) profile by exact enumeration of
    /// every joint selection of mixture components.
    pub fn profile_payoffs(&self, profile: &StrategyProfile) -> Result<Vec<f64>> {
        profile.check(self.spec)?;
        let components: Vec<_> = profile
            .strategies
            .iter()
            .map(Strategy::components)
            .collect();
        self.joint_payoffs(&components)
    }

    /// Payoffs when `player` abandons their strategy for the pure move `u`
    /// and everybody else keeps theirs.
    pub fn deviation_payoffs(
        &self,
        profile: &StrategyProfile,
        player: usize,
        u: &Unitary,
    ) -> Result<Vec<f64>> {
        profile.check(self.spec)?;
        if u.dim() != self.spec.moves()[player] {
            return Err(Error::DimensionMismatch {
                expected: self.spec.moves()[player],
                got: u.dim(),
            });
        }
        let mut components: Vec<_> = profile
            .strategies
            .iter()
            .map(Strategy::components)
            .collect();
        components[player] = vec![(1.0, u)];
        self.joint_payoffs(&components)
    }

    fn joint_payoffs(&self, components: &[Vec<(f64, &Unitary)>]) -> Result<Vec<f64>> {
        let mut total = vec![0.0; self.spec.n_players()];
        let mut choice = vec![0usize; components.len()];
        loop {
            let weight: f64 = choice
                .iter()
                .zip(components)
                .map(|(&c, comps)| comps[c].0)
                .product();
            if weight > 0.0 {
                let moves: Vec<&Unitary> = choice
                    .iter()
                    .zip(components)
                    .map(|(&c, comps)| comps[c].1)
                    .collect();
                for (t, p) in total.iter_mut().zip(self.pure_payoffs(&moves)?) {
                    *t += weight * p;
                }
            }
            // odometer over the joint product
            let mut player = choice.len();
            loop {
                if player == 0 {
                    return Ok(total);
                }
                player -= 1;
                choice[player] += 1;
                if choice[player] < components[player].len() {
                    break;
                }
                choice[player] = 0;
            }
        }
    }

    /// Runs the pipeline with a random-control CNOT on every qubit between
    /// the moves and the closing gate.
    pub fn noisy_final(&self, moves: &[&Unitary], p: f64) -> Result<WeightedEnsemble> {
        let state = self.after_moves(moves)?;
        let mut ensemble = WeightedEnsemble::pure(state);
        for site in 0..self.spec.n_players() {
            ensemble = apply_bitflip_noise(&ensemble, site, p)?;
        }
        match &self.closing {
            Some(j_dag) => ensemble.map_global(j_dag),
            None => Ok(ensemble),
        }
    }
}

/// `J† (M₁ ⊗ … ⊗ M_N) J |0…0⟩`.
pub fn run_eisert(spec: &GameSpec, moves: &[Unitary]) -> Result<StateVector> {
    if !matches!(spec.variant, Variant::EisertFull { .. }) {
        return Err(Error::InvalidGame(
            "expected an entangled (Eisert) game".into(),
        ));
    }
    spec.prepare()?
        .final_state(&moves.iter().collect::<Vec<_>>())
}

/// `(M₁ ⊗ … ⊗ M_N) |ψ_init⟩`.
pub fn run_marinatto_weber(spec: &GameSpec, moves: &[Unitary]) -> Result<StateVector> {
    if !matches!(spec.variant, Variant::MarinattoWeber { .. }) {
        return Err(Error::InvalidGame(
            "expected an initial-state (Marinatto-Weber) game".into(),
        ));
    }
    spec.prepare()?
        .final_state(&moves.iter().collect::<Vec<_>>())
}

/// Runs whichever pipeline the game variant names.
pub fn run(spec: &GameSpec, moves: &[Unitary]) -> Result<StateVector> {
    spec.prepare()?
        .final_state(&moves.iter().collect::<Vec<_>>())
}

/// One gate of an arbitrary pipeline.
#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    Local(usize, Unitary),
    Global(Unitary),
}

/// Applies the steps left to right.
pub fn run_sequence(initial: &StateVector, steps: &[Step]) -> Result<StateVector> {
    steps
        .iter()
        .try_fold(initial.clone(), |s, step| match step {
            Step::Local(site, u) => apply_local(&s, *site, u),
            Step::Global(u) => apply_global(&s, u),
        })
}

/// `⟨$⟩_p = Σ_k P_p(k) |⟨k|ψ_f⟩|²` for every player.
pub fn expected_payoffs(spec: &GameSpec, final_state: &StateVector) -> Result<Vec<f64>> {
    if final_state.dims() != spec.moves() {
        return Err(Error::DimensionMismatch {
            expected: spec.matrix.num_outcomes(),
            got: final_state.len(),
        });
    }
    spec.matrix.expected(&outcome_probabilities(final_state))
}

/// Payoffs of an ensemble of final states.
pub fn ensemble_expected_payoffs(spec: &GameSpec, ensemble: &WeightedEnsemble) -> Result<Vec<f64>> {
    if ensemble.dims() != spec.moves() {
        return Err(Error::DimensionMismatch {
            expected: spec.matrix.num_outcomes(),
            got: ensemble.outcome_probabilities().len(),
        });
    }
    spec.matrix.expected(&ensemble.outcome_probabilities())
}

/// Expected payoffs when every player draws a component of their mixture
/// independently. Linear in each player's weights.
pub fn mixed_expected_payoffs(spec: &GameSpec, profile: &StrategyProfile) -> Result<Vec<f64>> {
    spec.prepare()?.profile_payoffs(profile)
}

/// Payoffs of one pure move per player.
pub fn pure_payoffs(spec: &GameSpec, moves: &[Unitary]) -> Result<Vec<f64>> {
    expected_payoffs(spec, &run(spec, moves)?)
}

/// Entangled pipeline with bit-flip noise of probability `p` on each qubit.
pub fn run_eisert_noisy(spec: &GameSpec, moves: &[Unitary], p: f64) -> Result<WeightedEnsemble> {
    spec.prepare()?
        .noisy_final(&moves.iter().collect::<Vec<_>>(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::prisoners_dilemma;
    use crate::operators::{classical_mix, flip, hadamard, identity, Su2Params};
    use crate::qstate::fidelity_up_to_phase;
    use crate::ComplexAmp;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    fn pd(gamma: f64) -> GameSpec {
        GameSpec::eisert(prisoners_dilemma(), EntanglementParam::new(gamma).unwrap()).unwrap()
    }

    fn bell() -> StateVector {
        let h = FRAC_1_SQRT_2;
        StateVector::new(
            vec![2, 2],
            vec![
                ComplexAmp::new(h, 0.0),
                ComplexAmp::new(0.0, 0.0),
                ComplexAmp::new(0.0, 0.0),
                ComplexAmp::new(0.0, h),
            ],
        )
        .unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn mutual_cooperation_and_defection() {
        let c = identity(2).unwrap();
        let d = flip();
        let spec = pd(FRAC_PI_2);
        let s = run_eisert(&spec, &[c.clone(), c]).unwrap();
        assert!((outcome_probabilities(&s)[0] - 1.0).abs() < 1e-12);
        let s = run_eisert(&spec, &[d.clone(), d]).unwrap();
        assert!((outcome_probabilities(&s)[3] - 1.0).abs() < 1e-12);
        assert!(close(
            &expected_payoffs(&spec, &s).unwrap(),
            &[1.0, 1.0],
            1e-12
        ));
    }

    #[test]
    fn unentangled_game_is_classical_mixture() {
        let spec = pd(0.0);
        for (ta, tb) in [(0.3, 2.0), (1.0, 1.0), (2.9, 0.1)] {
            let got = pure_payoffs(
                &spec,
                &[classical_mix(ta).unwrap(), classical_mix(tb).unwrap()],
            )
            .unwrap();
            let (pa, pb) = ((ta / 2.0f64).cos().powi(2), (tb / 2.0f64).cos().powi(2));
            let probs = [
                pa * pb,
                pa * (1.0 - pb),
                (1.0 - pa) * pb,
                (1.0 - pa) * (1.0 - pb),
            ];
            let want = prisoners_dilemma().expected(&probs).unwrap();
            assert!(close(&got, &want, 1e-12));
        }
    }

    #[test]
    fn marinatto_weber_from_product_state_is_classical() {
        let spec =
            GameSpec::marinatto_weber(prisoners_dilemma(), StateVector::zero_qubits(2).unwrap())
                .unwrap();
        let moves = [classical_mix(1.1).unwrap(), classical_mix(0.4).unwrap()];
        let mw = expected_payoffs(&spec, &run_marinatto_weber(&spec, &moves).unwrap()).unwrap();
        let eisert0 = pure_payoffs(&pd(0.0), &moves).unwrap();
        assert!(close(&mw, &eisert0, 1e-12));
    }

    #[test]
    fn marinatto_weber_on_bell_state() {
        let spec = GameSpec::marinatto_weber(prisoners_dilemma(), bell()).unwrap();
        let id = identity(2).unwrap();
        let s = run_marinatto_weber(&spec, &[id.clone(), id.clone()]).unwrap();
        assert_eq!(s, bell());
        // iσx ⊗ I on (|00⟩ + i|11⟩)/√2 = (i|10⟩ - |01⟩)/√2
        let s = run_marinatto_weber(&spec, &[flip(), id]).unwrap();
        let p = outcome_probabilities(&s);
        assert!(p[0].abs() < 1e-15 && p[3].abs() < 1e-15);
        assert!((p[1] - 0.5).abs() < 1e-12 && (p[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn variant_mismatch_is_an_error() {
        let spec = pd(1.0);
        let id = identity(2).unwrap();
        assert!(run_marinatto_weber(&spec, &[id.clone(), id.clone()]).is_err());
        assert!(run_eisert(&spec, std::slice::from_ref(&id)).is_err());
        assert!(run_eisert(&spec, &[id.clone(), identity(3).unwrap()]).is_err());
        let wrong =
            GameSpec::marinatto_weber(prisoners_dilemma(), StateVector::zero_qubits(3).unwrap());
        assert!(wrong.is_err());
    }

    #[test]
    fn sequence_runs_left_to_right() {
        let zero = StateVector::zero_qubits(1).unwrap();
        let h = hadamard();
        let out = run_sequence(&zero, &[Step::Local(0, h.clone()), Step::Local(0, h)]).unwrap();
        assert!(fidelity_up_to_phase(&out, &zero).unwrap() > 1.0 - 1e-12);
        assert_eq!(run_sequence(&zero, &[]).unwrap(), zero);
        let out = run_sequence(&zero, &[Step::Local(0, flip())]).unwrap();
        assert_eq!(out.amps()[1], ComplexAmp::new(0.0, 1.0));
        assert!(run_sequence(&zero, &[Step::Local(1, flip())]).is_err());
    }

    #[test]
    fn payoffs_from_states() {
        let spec = pd(FRAC_PI_2);
        let s = StateVector::from_labels(vec![2, 2], &[0, 1]).unwrap();
        assert_eq!(expected_payoffs(&spec, &s).unwrap(), vec![0.0, 5.0]);
        assert!(close(
            &expected_payoffs(&spec, &bell()).unwrap(),
            &[2.0, 2.0],
            1e-12
        ));
        assert!(expected_payoffs(&spec, &StateVector::zero_qubits(3).unwrap()).is_err());
    }

    #[test]
    fn mixed_profile_reduces_to_pure() {
        let spec = pd(FRAC_PI_2);
        let a = Su2Params::new(0.7, 0.2, -1.0).unwrap().to_unitary();
        let b = Su2Params::new(2.1, -0.5, 0.3).unwrap().to_unitary();
        let pure = pure_payoffs(&spec, &[a.clone(), b.clone()]).unwrap();
        let profile = StrategyProfile::pure(vec![a, b]).unwrap();
        assert!(close(
            &mixed_expected_payoffs(&spec, &profile).unwrap(),
            &pure,
            1e-12
        ));
    }

    #[test]
    fn counter_pair_gives_sucker_payoff() {
        let spec = pd(FRAC_PI_2);
        let pay = pure_payoffs(&spec, &[identity(2).unwrap(), flip()]).unwrap();
        assert!(close(&pay, &[0.0, 5.0], 1e-12));
    }

    #[test]
    fn mixed_strategy_validation() {
        let id = identity(2).unwrap();
        assert!(Strategy::mixed(vec![(0.5, id.clone()), (0.4, flip())]).is_err());
        assert!(Strategy::mixed(vec![(1.5, id.clone()), (-0.5, flip())]).is_err());
        assert!(Strategy::mixed(vec![(0.5, id.clone()), (0.5, identity(3).unwrap())]).is_err());
        assert!(Strategy::mixed(vec![]).is_err());
        let spec = pd(FRAC_PI_2);
        let bad = StrategyProfile::pure(vec![id.clone()]).unwrap();
        assert!(mixed_expected_payoffs(&spec, &bad).is_err());
    }

    #[test]
    fn noisy_pipeline_p_zero_matches_clean() {
        let spec = pd(FRAC_PI_2);
        let q = Su2Params::new(0.0, FRAC_PI_2, 0.0).unwrap().to_unitary();
        let moves = [q.clone(), q];
        let e = run_eisert_noisy(&spec, &moves, 0.0).unwrap();
        let clean = pure_payoffs(&spec, &moves).unwrap();
        assert!(close(
            &ensemble_expected_payoffs(&spec, &e).unwrap(),
            &clean,
            1e-12
        ));
        let e = run_eisert_noisy(&spec, &moves, 0.5).unwrap();
        assert_eq!(e.members().len(), 4);
        assert!((e.total_weight() - 1.0).abs() < 1e-12);
    }
}
