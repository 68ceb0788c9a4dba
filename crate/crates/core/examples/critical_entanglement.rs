//! Below the critical entanglement the quantum player is better off
//! defecting than playing the miracle move.

use std::f64::consts::{FRAC_PI_2, PI};

use qgame::equilibrium::{classical_best_reply, critical_gamma, SearchConfig};
use qgame::games::{miracle_move, prisoners_dilemma};
use qgame::operators::classical_mix;
use qgame::{EntanglementParam, GameSpec};

fn main() -> qgame::Result<()> {
    let cfg = SearchConfig::default();
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let g = critical_gamma(&spec, &cfg)?;
    println!(
        "critical gamma {g:.9} (arcsin(1/sqrt 5) = {:.9})",
        (1.0 / 5f64.sqrt()).asin()
    );

    let defect = classical_mix(PI)?;
    for i in 0..=8 {
        let gamma = FRAC_PI_2 * i as f64 / 8.0;
        let s = spec.with_gamma(EntanglementParam::new(gamma)?)?;
        let (_, with_m) = classical_best_reply(&s, &miracle_move(), &cfg)?;
        let (_, with_d) = classical_best_reply(&s, &defect, &cfg)?;
        println!(
            "gamma {gamma:.3}: miracle {:.3}  defect {:.3}",
            with_m[1], with_d[1]
        );
    }
    Ok(())
}
