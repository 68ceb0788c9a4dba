//! Bit-flip noise on both qubits between the moves and the disentangler.

use std::f64::consts::FRAC_PI_2;

use qgame::games::prisoners_dilemma;
use qgame::operators::su2;
use qgame::protocol::{ensemble_expected_payoffs, run_eisert_noisy};
use qgame::{EntanglementParam, GameSpec, Su2Params};

fn main() -> qgame::Result<()> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let q = su2(&Su2Params::new(0.0, FRAC_PI_2, 0.0)?);
    let moves = [q.clone(), q];
    for i in 0..=4 {
        let p = i as f64 / 4.0;
        let ens = run_eisert_noisy(&spec, &moves, p)?;
        let pay = ensemble_expected_payoffs(&spec, &ens)?;
        println!(
            "p = {p:.2}: {} branches, payoffs ({:.4}, {:.4})",
            ens.members().len(),
            pay[0],
            pay[1]
        );
    }
    Ok(())
}
