//! Payoffs as a function of the entanglement level.

use std::f64::consts::{FRAC_PI_2, PI};

use super::SearchConfig;
use crate::error::{Error, Result};
use crate::games::miracle_move;
use crate::operators::{classical_mix, flip, EntanglementParam, Unitary};
use crate::optimize::golden_max;
use crate::protocol::GameSpec;

/// Payoffs of a fixed move profile at each entanglement level.
pub fn gamma_sweep(
    spec_template: &GameSpec,
    moves: &[Unitary],
    gammas: &[f64],
) -> Result<Vec<(f64, Vec<f64>)>> {
    let moves: Vec<&Unitary> = moves.iter().collect();
    gammas
        .iter()
        .map(|&g| {
            let spec = spec_template.with_gamma(EntanglementParam::new(g)?)?;
            let payoffs = spec.prepare()?.pure_payoffs(&moves)?;
            Ok((g, payoffs))
        })
        .collect()
}

/// Player 0's best classical mixture `Ũ(θ)` against player 1's fixed move.
/// Returns `(θ, payoffs)`. Ties go to the smaller `θ`.
pub fn classical_best_reply(
    spec: &GameSpec,
    opponent: &Unitary,
    cfg: &SearchConfig,
) -> Result<(f64, Vec<f64>)> {
    let game = spec.prepare()?;
    let eval = |theta: f64| -> Result<Vec<f64>> {
        game.pure_payoffs(&[&classical_mix(theta.clamp(0.0, PI))?, opponent])
    };
    let n = 4 * (cfg.grid_points_per_axis - 1) + 1;
    let step = PI / (n - 1) as f64;
    let mut best = (0.0, eval(0.0)?);
    for i in 1..n {
        let theta = if i + 1 == n { PI } else { step * i as f64 };
        let p = eval(theta)?;
        if p[0] > best.1[0] {
            best = (theta, p);
        }
    }
    let lo = (best.0 - step).max(0.0);
    let hi = (best.0 + step).min(PI);
    let (theta, _) = golden_max(
        |t| eval(t).map(|p| p[0]).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        1e-12,
    );
    let refined = eval(theta)?;
    if refined[0] > best.1[0] {
        best = (theta, refined);
    }
    Ok(best)
}

/// Entanglement level at which a quantum player 1 stops preferring the
/// miracle move over plain defection, when player 0 answers each with their
/// best classical mixture. Found by bisection on `[0, π/2]`.
pub fn critical_gamma(spec: &GameSpec, cfg: &SearchConfig) -> Result<f64> {
    cfg.validate()?;
    if spec.moves() != [2, 2] || spec.gamma().is_none() {
        return Err(Error::InvalidGame(
            "critical entanglement needs an entangled 2x2 game".into(),
        ));
    }
    let m = miracle_move();
    let d = flip();
    let advantage = |g: f64| -> Result<f64> {
        let at = spec.with_gamma(EntanglementParam::new(g)?)?;
        let (_, vs_m) = classical_best_reply(&at, &m, cfg)?;
        let (_, vs_d) = classical_best_reply(&at, &d, cfg)?;
        Ok(vs_m[1] - vs_d[1])
    };

    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    let (f_lo, f_hi) = (advantage(lo)?, advantage(hi)?);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::SearchFailed(format!(
            "no sign change of the miracle-vs-defect advantage on [0, π/2] ({f_lo}, {f_hi})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = advantage(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    let gamma = 0.5 * (lo + hi);
    let residual = advantage(gamma)?;
    if residual.abs() >= 1e-9 {
        return Err(Error::SearchFailed(format!(
            "bisection ended at a discontinuity: γ = {gamma}, payoff gap {residual:e}"
        )));
    }
    Ok(gamma)
}
