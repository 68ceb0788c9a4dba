//! Rock-paper-scissors on qutrits: moves are 3x3 unitaries, here cyclic
//! shifts and a discrete Fourier transform.

use std::f64::consts::PI;

use qgame::games::ClassicalMatrix;
use qgame::operators::{identity, validate_unitary};
use qgame::protocol::{pure_payoffs, run_sequence, Step};
use qgame::qstate::outcome_probabilities;
use qgame::{ComplexAmp, GameSpec, StateVector, Unitary};

fn shift(k: usize) -> qgame::Result<Unitary> {
    let mut e = vec![ComplexAmp::new(0.0, 0.0); 9];
    for j in 0..3 {
        e[((j + k) % 3) * 3 + j] = ComplexAmp::new(1.0, 0.0);
    }
    Unitary::new(3, e)
}

fn fourier() -> qgame::Result<Unitary> {
    let e: Vec<ComplexAmp> = (0..9)
        .map(|i| {
            ComplexAmp::from_polar(
                1.0 / 3f64.sqrt(),
                2.0 * PI * ((i / 3) * (i % 3)) as f64 / 3.0,
            )
        })
        .collect();
    assert!(validate_unitary(3, &e));
    Unitary::new(3, e)
}

fn main() -> qgame::Result<()> {
    // rock 0, paper 1, scissors 2; the move k ahead (mod 3) wins
    let rps = ClassicalMatrix::from_fn(vec![3, 3], |o| match (o[1] + 3 - o[0]) % 3 {
        0 => vec![0.0, 0.0],
        1 => vec![-1.0, 1.0],
        _ => vec![1.0, -1.0],
    })?;
    let spec = GameSpec::marinatto_weber(rps, StateVector::basis(vec![3, 3], 0)?)?;
    let moves = [
        ("rock", identity(3)?),
        ("paper", shift(1)?),
        ("scissors", shift(2)?),
        ("fourier", fourier()?),
    ];
    for (na, a) in &moves {
        for (nb, b) in &moves {
            let p = pure_payoffs(&spec, &[a.clone(), b.clone()])?;
            println!("{na:>8} vs {nb:<8}: ({:+.3}, {:+.3})", p[0], p[1]);
        }
    }

    // the same circuit written as an explicit step list
    let state = run_sequence(
        &StateVector::basis(vec![3, 3], 0)?,
        &[Step::Local(0, fourier()?), Step::Local(1, shift(1)?)],
    )?;
    println!(
        "fourier vs paper outcome probabilities {:.3?}",
        outcome_probabilities(&state)
    );
    Ok(())
}
