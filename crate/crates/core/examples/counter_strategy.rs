//! Any pure quantum strategy has a counter worth 5 to the opponent, so no
//! pure profile is an equilibrium.

use qgame::equilibrium::{best_response, counter_strategy, SearchConfig};
use qgame::games::prisoners_dilemma;
use qgame::operators::su2;
use qgame::protocol::pure_payoffs;
use qgame::{EntanglementParam, GameSpec, StrategyProfile, Su2Params};

fn main() -> qgame::Result<()> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let cfg = SearchConfig::default();
    for (t, a, b) in [(0.0, 0.0, 0.0), (1.2, -0.4, 2.0), (3.0, 1.5, -1.0)] {
        let alice = Su2Params::new(t, a, b)?;
        let counter = counter_strategy(&alice);
        let p = pure_payoffs(&spec, &[su2(&alice), counter])?;
        let profile = StrategyProfile::pure(vec![su2(&alice), su2(&alice)])?;
        let searched = best_response(&spec, 1, &profile, &cfg, false)?;
        println!(
            "alice U({t}, {a}, {b}): counter gives ({:.3}, {:.3}); search finds {:.4}",
            p[0], p[1], searched.payoff
        );
    }
    Ok(())
}
