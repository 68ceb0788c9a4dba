//! Bob, allowed a Hadamard, beats an Alice limited to flipping or not.

use qgame::games::{play_penny_flip, ClassicalMove, PennyFlipMoves};
use qgame::operators::{flip, hadamard, identity};

fn main() -> qgame::Result<()> {
    let bob = [("I", identity(2)?), ("F", flip()), ("H", hadamard())];
    println!("bob1 alice bob2  P(heads)");
    for (n1, b1) in &bob {
        for (n2, b2) in &bob {
            for (na, alice) in [("I", ClassicalMove::Identity), ("F", ClassicalMove::Flip)] {
                let p = play_penny_flip(&PennyFlipMoves {
                    bob1: b1.clone(),
                    alice,
                    bob2: b2.clone(),
                })?;
                println!("{n1:>4} {na:>5} {n2:>4}  {p:.3}");
            }
        }
    }
    Ok(())
}
