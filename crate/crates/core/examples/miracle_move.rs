//! The miracle move against every classical mixture at full entanglement.

use std::f64::consts::PI;

use qgame::games::{miracle_move, prisoners_dilemma};
use qgame::operators::classical_mix;
use qgame::{EntanglementParam, GameSpec};

fn main() -> qgame::Result<()> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let game = spec.prepare()?;
    let m = miracle_move();
    println!("theta    alice  bob    3+2sin(theta)");
    for i in 0..=10 {
        let theta = PI * i as f64 / 10.0;
        let p = game.pure_payoffs(&[&classical_mix(theta)?, &m])?;
        println!(
            "{theta:.4}  {:.4} {:.4} {:.4}",
            p[0],
            p[1],
            3.0 + 2.0 * theta.sin()
        );
    }
    Ok(())
}
