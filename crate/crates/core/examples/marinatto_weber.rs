//! Battle of the sexes started from an entangled state instead of an
//! entangling gate. Both players keeping their qubit splits the difference.

use std::f64::consts::FRAC_1_SQRT_2;

use qgame::games::ClassicalMatrix;
use qgame::operators::{flip, identity};
use qgame::protocol::pure_payoffs;
use qgame::{ComplexAmp, GameSpec, StateVector};

fn main() -> qgame::Result<()> {
    // opera/opera pays (5, 1), football/football (1, 5), a mismatch nothing
    let bos = ClassicalMatrix::bimatrix(
        &[vec![5.0, 0.0], vec![0.0, 1.0]],
        &[vec![1.0, 0.0], vec![0.0, 5.0]],
    )?;
    let r = ComplexAmp::new(FRAC_1_SQRT_2, 0.0);
    let zero = ComplexAmp::new(0.0, 0.0);
    let start = StateVector::new(vec![2, 2], vec![r, zero, zero, r])?;
    let spec = GameSpec::marinatto_weber(bos, start)?;
    let moves = [("I", identity(2)?), ("F", flip())];
    for (na, a) in &moves {
        for (nb, b) in &moves {
            let p = pure_payoffs(&spec, &[a.clone(), b.clone()])?;
            println!("{na} vs {nb}: ({:.2}, {:.2})", p[0], p[1]);
        }
    }
    Ok(())
}
