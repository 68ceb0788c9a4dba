//! Classical moves reproduce the payoff table at any entanglement; quantum
//! moves do not.

use std::f64::consts::FRAC_PI_2;

use qgame::games::prisoners_dilemma;
use qgame::operators::{flip, identity, su2};
use qgame::protocol::pure_payoffs;
use qgame::{EntanglementParam, GameSpec, Su2Params};

fn main() -> qgame::Result<()> {
    let q = su2(&Su2Params::new(0.0, FRAC_PI_2, 0.0)?);
    let moves = [("C", identity(2)?), ("D", flip()), ("Q", q)];
    for gamma in [0.0, FRAC_PI_2 / 2.0, FRAC_PI_2] {
        let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::new(gamma)?)?;
        println!("gamma = {gamma:.4}");
        for (na, a) in &moves {
            for (nb, b) in &moves {
                let p = pure_payoffs(&spec, &[a.clone(), b.clone()])?;
                println!("  {na} vs {nb}: ({:.3}, {:.3})", p[0], p[1]);
            }
        }
    }
    Ok(())
}
