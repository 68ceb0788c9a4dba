//! Closed-form strategies for the maximally entangled 2×2 game.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::Result;
use crate::operators::{flip, identity, su2, Su2Params, Unitary};
use crate::protocol::{Strategy, StrategyProfile};
use crate::ComplexAmp;

/// On `(|00⟩ + i|11⟩)/√2`, `U(θ, α, β)` on the first qubit acts exactly like
/// `U(θ, α, -π/2 - β)` on the second.
pub fn bell_mirror(a: &Su2Params) -> Su2Params {
    Su2Params::wrapped(a.theta(), a.alpha(), -FRAC_PI_2 - a.beta()).expect("θ already in range")
}

/// `D · U(θ, -α, π/2 - β)`: undo the opponent's move, then defect. Against
/// `U(θ, α, β)` in the maximally entangled game this pays `(P_CD, P_DC)`.
pub fn counter_strategy(a: &Su2Params) -> Unitary {
    let undo = Su2Params::wrapped(a.theta(), -a.alpha(), FRAC_PI_2 - a.beta())
        .expect("θ already in range");
    flip().matmul(&su2(&undo)).expect("both operators are 2x2")
}

/// The equal-weight pair `A₁ = I, A₂ = diag(i, -i)` against
/// `B₁ = F, B₂ = [[0, -1], [1, 0]]`.
pub fn mixed_ne_pair() -> StrategyProfile {
    let zero = ComplexAmp::new(0.0, 0.0);
    let a2 = Unitary::new(
        2,
        vec![
            ComplexAmp::new(0.0, 1.0),
            zero,
            zero,
            ComplexAmp::new(0.0, -1.0),
        ],
    )
    .expect("diag(i, -i) is unitary");
    let b2 = Unitary::new(
        2,
        vec![
            zero,
            ComplexAmp::new(-1.0, 0.0),
            ComplexAmp::new(1.0, 0.0),
            zero,
        ],
    )
    .expect("rotation is unitary");
    StrategyProfile::new(vec![
        Strategy::uniform(vec![identity(2).expect("dim 2"), a2]).expect("two components"),
        Strategy::uniform(vec![flip(), b2]).expect("two components"),
    ])
    .expect("two players")
}

/// A member of the continuous family of mixed equilibria: Alice mixes
/// `U(θ, α, β)` and `U(θ, π/2 + α, π/2 + β)`, Bob mixes
/// `U(π - θ, π/2 + β, α)` and `U(π - θ, π + β, π/2 + α)`, all with weight ½.
/// Phases are wrapped into `[-π, π]`.
pub fn mixed_ne_family(theta: f64, alpha: f64, beta: f64) -> Result<StrategyProfile> {
    let p = |t, a, b| Su2Params::wrapped(t, a, b).map(|p| su2(&p));
    let alice = vec![
        p(theta, alpha, beta)?,
        p(theta, FRAC_PI_2 + alpha, FRAC_PI_2 + beta)?,
    ];
    let bob = vec![
        p(PI - theta, FRAC_PI_2 + beta, alpha)?,
        p(PI - theta, PI + beta, FRAC_PI_2 + alpha)?,
    ];
    StrategyProfile::new(vec![Strategy::uniform(alice)?, Strategy::uniform(bob)?])
}
