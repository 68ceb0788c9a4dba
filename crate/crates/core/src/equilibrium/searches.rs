//! Symmetric equilibrium searches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use super::{
    best_response_prepared, search_su2, verify_nash_in, EquilibriumReport, SearchConfig,
    StrategySpace,
};
use crate::error::{Error, Result};
use crate::games::minority_game;
use crate::operators::{su2, EntanglementParam, Su2Params};
use crate::protocol::{GameSpec, StrategyProfile};

const MAX_ROUNDS: usize = 50;

/// Symmetric best-response iteration inside the `β = 0` strategies of a
/// symmetric 2×2 entangled game.
///
/// From each start both players adopt the current strategy; the strategy is
/// replaced by its best reply until no reply gains more than the Nash
/// tolerance. Starts are `Ĉ` followed by seeded random points. The converged
/// profile with the highest payoff is returned, verified against `β = 0`
/// deviations.
pub fn restricted_ne_search(spec: &GameSpec, cfg: &SearchConfig) -> Result<EquilibriumReport> {
    cfg.validate()?;
    if spec.moves() != [2, 2] || !spec.matrix().is_symmetric() || spec.gamma().is_none() {
        return Err(Error::InvalidGame(
            "restricted search needs a symmetric entangled 2x2 game".into(),
        ));
    }
    let game = spec.prepare()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut starts = vec![Su2Params::new(0.0, 0.0, 0.0)?];
    for _ in 0..4 {
        starts.push(Su2Params::new(
            rng.gen_range(0.0..=PI),
            rng.gen_range(-PI..=PI),
            0.0,
        )?);
    }

    let mut best: Option<(bool, f64, Su2Params)> = None;
    for start in starts {
        let mut s = start;
        let mut converged = false;
        for _ in 0..MAX_ROUNDS {
            let u = su2(&s);
            let profile = StrategyProfile::pure(vec![u.clone(), u])?;
            let current = game.profile_payoffs(&profile)?[1];
            let br = best_response_prepared(&game, 1, &profile, cfg, StrategySpace::BetaZero)?;
            if br.payoff - current <= cfg.nash_tolerance * 1e-3 {
                converged = true;
                break;
            }
            s = br.params;
        }
        let u = su2(&s);
        let payoff = game.pure_payoffs(&[&u, &u])?[0];
        let better = match &best {
            None => true,
            Some((c, p, _)) => (converged && !c) || (converged == *c && payoff > *p + 1e-9),
        };
        if better {
            best = Some((converged, payoff, s));
        }
    }
    let (_, _, s) = best.expect("at least one start");
    let u = su2(&s);
    verify_nash_in(
        spec,
        &StrategyProfile::pure(vec![u.clone(), u])?,
        cfg,
        StrategySpace::BetaZero,
    )
}

/// Best symmetric strategy for the maximally entangled N-player minority
/// game, with Nash verification over all of SU(2).
///
/// Every player uses the same `U(θ, α, β)`; the common strategy maximizing
/// the per-player payoff is found by grid-plus-refinement. Among near-optimal
/// candidates the first that passes verification is reported.
pub fn minority_quantum_search(n_players: usize, cfg: &SearchConfig) -> Result<EquilibriumReport> {
    cfg.validate()?;
    if !(3..=6).contains(&n_players) {
        return Err(Error::Unsupported(format!(
            "minority search for {n_players} players (supported: 3 to 6)"
        )));
    }
    let spec = GameSpec::eisert(minority_game(n_players)?, EntanglementParam::maximal())?;
    let game = spec.prepare()?;
    let symmetric = |p: &Su2Params| {
        let u = su2(p);
        let moves = vec![&u; n_players];
        game.pure_payoffs(&moves)
            .map(|v| v[0])
            .unwrap_or(f64::NEG_INFINITY)
    };

    let mut candidates = vec![search_su2(symmetric, StrategySpace::Full, cfg)?];
    for k in 1..=3u64 {
        let alt = SearchConfig {
            seed: cfg.seed.wrapping_add(k),
            refine_starts: cfg.refine_starts + 2 * k as usize,
            ..cfg.clone()
        };
        candidates.push(search_su2(symmetric, StrategySpace::Full, &alt)?);
    }
    let top = candidates
        .iter()
        .map(|c| c.payoff)
        .fold(f64::NEG_INFINITY, f64::max);

    let mut first_report = None;
    for c in candidates.iter().filter(|c| c.payoff >= top - 1e-6) {
        let u = su2(&c.params);
        let profile = StrategyProfile::pure(vec![u; n_players])?;
        let report = verify_nash_in(&spec, &profile, cfg, StrategySpace::Full)?;
        if report.is_nash {
            return Ok(report);
        }
        first_report.get_or_insert(report);
    }
    Ok(first_report.expect("at least one candidate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::prisoners_dilemma;
    use crate::protocol::pure_payoffs;

    #[test]
    fn restricted_pd_finds_mutual_three() {
        let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal()).unwrap();
        let r = restricted_ne_search(&spec, &SearchConfig::default()).unwrap();
        assert!(r.is_nash, "{:?}", r.max_unilateral_gain);
        assert!((r.payoffs[0] - 3.0).abs() < 1e-3 && (r.payoffs[1] - 3.0).abs() < 1e-3);
        // the counter strategy is outside β = 0 and still wins 5
        let full = super::super::verify_nash(&spec, &r.profile, &SearchConfig::default()).unwrap();
        assert!(full
            .max_unilateral_gain
            .iter()
            .all(|&g| (g - 2.0).abs() < 1e-3));
    }

    #[test]
    fn restricted_search_rejects_asymmetric() {
        let m = crate::games::matching_pennies();
        let spec = GameSpec::eisert(m, EntanglementParam::maximal()).unwrap();
        assert!(restricted_ne_search(&spec, &SearchConfig::default()).is_err());
    }

    #[test]
    fn minority_three_has_no_quantum_gain() {
        let r = minority_quantum_search(3, &SearchConfig::default()).unwrap();
        assert!(r.payoffs[0] <= 0.25 + 1e-3);
        assert!((r.payoffs[0] - 0.25).abs() < 1e-3);
    }

    #[test]
    fn minority_four_doubles_classical() {
        let r = minority_quantum_search(4, &SearchConfig::default()).unwrap();
        assert!(
            r.payoffs.iter().all(|&p| p >= 0.25 - 1e-3),
            "{:?}",
            r.payoffs
        );
        assert!(r.is_nash, "{:?}", r.max_unilateral_gain);
        let u = match r.profile.strategy(0) {
            crate::Strategy::Pure(u) => u.clone(),
            _ => unreachable!(),
        };
        let spec =
            GameSpec::eisert(minority_game(4).unwrap(), EntanglementParam::maximal()).unwrap();
        let direct = pure_payoffs(&spec, &vec![u; 4]).unwrap();
        assert!((direct[0] - r.payoffs[0]).abs() < 1e-12);
        assert!(minority_quantum_search(2, &SearchConfig::default()).is_err());
    }
}
