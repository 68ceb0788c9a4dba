//! Equilibrium search over SU(2) strategies.
//!
//! Best responses are found by evaluating a regular grid over `(θ, α, β)`
//! and polishing the best few grid points (plus seeded random starts) with a
//! bounded Nelder-Mead. Nash verification tests pure deviations only; that is
//! enough because payoffs are linear in each player's mixing weights.

mod constructions;
mod searches;
mod sweeps;

pub use constructions::{bell_mirror, counter_strategy, mixed_ne_family, mixed_ne_pair};
pub use searches::{minority_quantum_search, restricted_ne_search};
pub use sweeps::{classical_best_reply, critical_gamma, gamma_sweep};

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::operators::{su2, Su2Params};
use crate::optimize::{nelder_mead_max, Axis};
use crate::protocol::{GameSpec, PreparedGame, StrategyProfile};
use crate::{EPS_OPT, NE_TOL};

/// Knobs for the grid-plus-refinement search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub grid_points_per_axis: usize,
    pub refine_iterations: usize,
    pub refine_tolerance: f64,
    /// Largest unilateral gain still accepted as an equilibrium.
    pub nash_tolerance: f64,
    /// Grid points polished by the local search, best first.
    pub refine_starts: usize,
    /// Extra uniformly random starting points drawn from `seed`.
    pub random_starts: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            grid_points_per_axis: 25,
            refine_iterations: 200,
            refine_tolerance: EPS_OPT,
            nash_tolerance: NE_TOL,
            refine_starts: 3,
            random_starts: 2,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> Self {
        SearchConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_points_per_axis < 5 {
            return Err(Error::OutOfRange {
                name: "grid_points_per_axis",
                value: self.grid_points_per_axis as f64,
                min: 5.0,
                max: f64::INFINITY,
            });
        }
        for (name, v) in [
            ("refine_tolerance", self.refine_tolerance),
            ("nash_tolerance", self.nash_tolerance),
        ] {
            if v.is_nan() || v <= 0.0 {
                return Err(Error::OutOfRange {
                    name,
                    value: v,
                    min: f64::MIN_POSITIVE,
                    max: f64::INFINITY,
                });
            }
        }
        Ok(())
    }
}

/// Which SU(2) strategies a deviating player may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategySpace {
    /// All of `U(θ, α, β)`.
    Full,
    /// `U(θ, α, 0)`.
    BetaZero,
}

impl StrategySpace {
    fn axes(self) -> Vec<Axis> {
        let theta = Axis {
            lo: 0.0,
            hi: PI,
            periodic: false,
        };
        let phase = Axis {
            lo: -PI,
            hi: PI,
            periodic: true,
        };
        match self {
            StrategySpace::Full => vec![theta, phase, phase],
            StrategySpace::BetaZero => vec![theta, phase],
        }
    }

    fn params(self, x: &[f64]) -> Su2Params {
        let beta = match self {
            StrategySpace::Full => x[2],
            StrategySpace::BetaZero => 0.0,
        };
        Su2Params::wrapped(x[0].clamp(0.0, PI), x[1], beta).expect("projected into range")
    }
}

/// Outcome of a best-response search.
#[derive(Clone, Debug, PartialEq)]
pub struct BestResponse {
    pub params: Su2Params,
    pub payoff: f64,
    /// Best payoff seen on the seeding grid; `payoff` is never below it.
    pub grid_payoff: f64,
    pub converged: bool,
}

/// Result of checking a profile for profitable unilateral deviations.
#[derive(Clone, Debug, PartialEq)]
pub struct EquilibriumReport {
    pub profile: StrategyProfile,
    pub payoffs: Vec<f64>,
    /// Best deviation payoff minus current payoff, per player.
    pub max_unilateral_gain: Vec<f64>,
    pub best_deviations: Vec<Su2Params>,
    pub is_nash: bool,
    pub tolerance_used: f64,
}

/// Maximizes `objective` over a strategy space by grid seeding and local
/// refinement.
pub(crate) fn search_su2<F>(
    objective: F,
    space: StrategySpace,
    cfg: &SearchConfig,
) -> Result<BestResponse>
where
    F: Fn(&Su2Params) -> f64,
{
    cfg.validate()?;
    let axes = space.axes();
    let n = cfg.grid_points_per_axis;
    let f = |x: &[f64]| objective(&space.params(x));

    let mut scored: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut point = vec![0.0; axes.len()];
    grid_walk(&axes, n, 0, &mut point, &mut |x| {
        scored.push((f(x), x.to_vec()))
    });
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    let grid_payoff = scored[0].0;

    let mut starts: Vec<Vec<f64>> = scored
        .iter()
        .take(cfg.refine_starts.max(1))
        .map(|(_, x)| x.clone())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_starts {
        starts.push(axes.iter().map(|a| rng.gen_range(a.lo..=a.hi)).collect());
    }

    let step: Vec<f64> = axes
        .iter()
        .map(|a| (a.hi - a.lo) / (n - 1) as f64)
        .collect();
    let mut best = (grid_payoff, scored[0].1.clone(), false);
    for x0 in &starts {
        let m = nelder_mead_max(
            f,
            x0,
            &step,
            &axes,
            cfg.refine_iterations,
            cfg.refine_tolerance,
        );
        if m.value > best.0 || (m.value == best.0 && m.converged && !best.2) {
            best = (m.value, m.x, m.converged);
        }
    }
    Ok(BestResponse {
        params: space.params(&best.1),
        payoff: best.0,
        grid_payoff,
        converged: best.2,
    })
}

fn grid_walk<F: FnMut(&[f64])>(
    axes: &[Axis],
    n: usize,
    depth: usize,
    point: &mut Vec<f64>,
    visit: &mut F,
) {
    if depth == axes.len() {
        visit(point);
        return;
    }
    // the periodic end point duplicates the start
    let count = if axes[depth].periodic { n - 1 } else { n };
    let values: Vec<f64> = axes[depth].grid(n).take(count).collect();
    for v in values {
        point[depth] = v;
        grid_walk(axes, n, depth + 1, point, visit);
    }
}

fn require_qubit(spec: &GameSpec, player: usize) -> Result<()> {
    match spec.moves().get(player) {
        Some(2) => Ok(()),
        Some(m) => Err(Error::Unsupported(format!(
            "SU(2) search for player {player} with {m} moves"
        ))),
        None => Err(Error::SiteOutOfRange {
            site: player,
            sites: spec.n_players(),
        }),
    }
}

fn best_response_prepared(
    game: &PreparedGame<'_>,
    player: usize,
    profile: &StrategyProfile,
    cfg: &SearchConfig,
    space: StrategySpace,
) -> Result<BestResponse> {
    require_qubit(game.spec(), player)?;
    // surface profile errors once rather than inside the objective
    game.deviation_payoffs(profile, player, &su2(&Su2Params::new(0.0, 0.0, 0.0)?))?;
    search_su2(
        |p| {
            game.deviation_payoffs(profile, player, &su2(p))
                .map(|v| v[player])
                .unwrap_or(f64::NEG_INFINITY)
        },
        space,
        cfg,
    )
}

/// Best pure SU(2) reply of `player` while everybody else keeps their entry
/// of `profile`; the player's own entry is ignored.
pub fn best_response(
    spec: &GameSpec,
    player: usize,
    profile: &StrategyProfile,
    cfg: &SearchConfig,
    restrict_beta_zero: bool,
) -> Result<BestResponse> {
    let space = if restrict_beta_zero {
        StrategySpace::BetaZero
    } else {
        StrategySpace::Full
    };
    best_response_prepared(&spec.prepare()?, player, profile, cfg, space)
}

/// Checks every player for a profitable pure deviation over all of SU(2).
pub fn verify_nash(
    spec: &GameSpec,
    profile: &StrategyProfile,
    cfg: &SearchConfig,
) -> Result<EquilibriumReport> {
    verify_nash_in(spec, profile, cfg, StrategySpace::Full)
}

/// [`verify_nash`] with deviations limited to `space`.
pub fn verify_nash_in(
    spec: &GameSpec,
    profile: &StrategyProfile,
    cfg: &SearchConfig,
    space: StrategySpace,
) -> Result<EquilibriumReport> {
    cfg.validate()?;
    let game = spec.prepare()?;
    let payoffs = game.profile_payoffs(profile)?;
    let mut gains = Vec::with_capacity(spec.n_players());
    let mut deviations = Vec::with_capacity(spec.n_players());
    for (player, current) in payoffs.iter().enumerate() {
        let br = best_response_prepared(&game, player, profile, cfg, space)?;
        gains.push(br.payoff - current);
        deviations.push(br.params);
    }
    let is_nash = gains.iter().all(|&g| g <= cfg.nash_tolerance);
    Ok(EquilibriumReport {
        profile: profile.clone(),
        payoffs,
        max_unilateral_gain: gains,
        best_deviations: deviations,
        is_nash,
        tolerance_used: cfg.nash_tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::prisoners_dilemma;
    use crate::operators::{classical_mix, flip, EntanglementParam};
    use crate::protocol::Strategy;
    use std::f64::consts::FRAC_PI_2;

    fn pd(gamma: f64) -> GameSpec {
        GameSpec::eisert(prisoners_dilemma(), EntanglementParam::new(gamma).unwrap()).unwrap()
    }

    fn alice_plays(u: crate::Unitary) -> StrategyProfile {
        StrategyProfile::pure(vec![u, flip()]).unwrap()
    }

    #[test]
    fn reply_to_classical_mixture_matches_miracle_value() {
        let cfg = SearchConfig::default();
        for theta0 in [0.0, 0.7, 2.0] {
            let br = best_response(
                &pd(FRAC_PI_2),
                1,
                &alice_plays(classical_mix(theta0).unwrap()),
                &cfg,
                false,
            )
            .unwrap();
            // the miracle move earns 3 + 2 sin θ; the counter strategy earns 5
            assert!(br.payoff >= 3.0 + 2.0 * f64::sin(theta0) - 1e-3);
            assert!((br.payoff - 5.0).abs() < 1e-3, "{}", br.payoff);
            assert!(br.payoff >= br.grid_payoff);
        }
    }

    #[test]
    fn reply_to_general_strategy_reaches_five() {
        let cfg = SearchConfig::default();
        let a = Su2Params::new(1.1, -0.4, 2.2).unwrap();
        let br = best_response(&pd(FRAC_PI_2), 1, &alice_plays(su2(&a)), &cfg, false).unwrap();
        assert!((br.payoff - 5.0).abs() < 1e-3);
    }

    #[test]
    fn unentangled_reply_is_classical_defection() {
        // at γ = 0 the best reply to Ũ(θ) is D, worth 5p + (1 - p)
        let cfg = SearchConfig::default();
        for theta0 in [0.0, 1.3, 3.0] {
            let p = f64::cos(theta0 / 2.0).powi(2);
            let br = best_response(
                &pd(0.0),
                1,
                &alice_plays(classical_mix(theta0).unwrap()),
                &cfg,
                false,
            )
            .unwrap();
            assert!((br.payoff - (5.0 * p + (1.0 - p))).abs() < 1e-6);
        }
    }

    #[test]
    fn classical_nash_at_zero_entanglement() {
        let r = verify_nash(
            &pd(0.0),
            &StrategyProfile::pure(vec![flip(), flip()]).unwrap(),
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(r.is_nash, "{:?}", r.max_unilateral_gain);
        assert!((r.payoffs[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn miracle_pair_is_not_nash() {
        let m = crate::games::miracle_move();
        let r = verify_nash(
            &pd(FRAC_PI_2),
            &StrategyProfile::pure(vec![m.clone(), m]).unwrap(),
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(!r.is_nash);
        assert!(r.max_unilateral_gain.iter().all(|&g| g > 1.0));
    }

    #[test]
    fn report_invariant_and_tolerance_monotonicity() {
        let spec = pd(FRAC_PI_2);
        let profile = StrategyProfile::new(vec![
            Strategy::Pure(su2(&Su2Params::new(0.4, 0.1, 0.2).unwrap())),
            Strategy::Pure(su2(&Su2Params::new(1.4, 0.3, -0.2).unwrap())),
        ])
        .unwrap();
        let mut was_nash = false;
        for tol in [1e-6, 1e-3, 0.5, 2.0, 10.0] {
            let cfg = SearchConfig {
                nash_tolerance: tol,
                ..SearchConfig::default()
            };
            let r = verify_nash(&spec, &profile, &cfg).unwrap();
            assert_eq!(r.is_nash, r.max_unilateral_gain.iter().all(|&g| g <= tol));
            assert!(!(was_nash && !r.is_nash));
            was_nash = r.is_nash;
        }
        assert!(was_nash);
    }

    #[test]
    fn config_validation() {
        let bad = SearchConfig {
            grid_points_per_axis: 4,
            ..SearchConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = SearchConfig {
            refine_tolerance: 0.0,
            ..SearchConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn qutrit_player_is_rejected() {
        let spec = GameSpec::marinatto_weber(
            crate::games::ClassicalMatrix::from_fn(vec![3, 3], |_| vec![0.0, 0.0]).unwrap(),
            crate::StateVector::basis(vec![3, 3], 0).unwrap(),
        )
        .unwrap();
        let id3 = crate::operators::identity(3).unwrap();
        let profile = StrategyProfile::pure(vec![id3.clone(), id3]).unwrap();
        assert!(matches!(
            best_response(&spec, 0, &profile, &SearchConfig::default(), false),
            Err(Error::Unsupported(_))
        ));
    }
}
