//! Reference computations written out by hand, sharing no code with the
//! library beyond the complex number type.

#![allow(dead_code)]

use std::f64::consts::PI;

use qgame::ComplexAmp as C;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type M2 = [[C; 2]; 2];

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// The SU(2) chart, entry by entry.
pub fn u(theta: f64, alpha: f64, beta: f64) -> M2 {
    let (s, co) = ((theta / 2.0).sin(), (theta / 2.0).cos());
    [
        [
            C::from_polar(co, alpha),
            c(0.0, 1.0) * C::from_polar(s, beta),
        ],
        [
            c(0.0, 1.0) * C::from_polar(s, -beta),
            C::from_polar(co, -alpha),
        ],
    ]
}

pub fn mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for k in 0..2 {
            out[r][k] = a[r][0] * b[0][k] + a[r][1] * b[1][k];
        }
    }
    out
}

/// Two-qubit entangle / move / disentangle, returning outcome probabilities
/// in the order `00, 01, 10, 11`.
pub fn eisert2_probs(gamma: f64, a: &M2, b: &M2) -> [f64; 4] {
    let (co, si) = ((gamma / 2.0).cos(), (gamma / 2.0).sin());
    let start = [c(co, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, si)];
    let mut moved = [c(0.0, 0.0); 4];
    for (r, slot) in moved.iter_mut().enumerate() {
        for (k, amp) in start.iter().enumerate() {
            *slot += a[r >> 1][k >> 1] * b[r & 1][k & 1] * amp;
        }
    }
    let mut p = [0.0; 4];
    for k in 0..4 {
        // J† = cos(γ/2) I - i sin(γ/2) σx⊗σx, and σx⊗σx sends k to 3 - k
        p[k] = (moved[k] * co - c(0.0, si) * moved[3 - k]).norm_sqr();
    }
    p
}

/// Expected payoffs for a table indexed by outcome `00, 01, 10, 11`.
pub fn eisert2(gamma: f64, a: &M2, b: &M2, table: &[[f64; 2]; 4]) -> [f64; 2] {
    let p = eisert2_probs(gamma, a, b);
    let mut out = [0.0; 2];
    for k in 0..4 {
        out[0] += p[k] * table[k][0];
        out[1] += p[k] * table[k][1];
    }
    out
}

pub const PD: [[f64; 2]; 4] = [[3.0, 3.0], [0.0, 5.0], [5.0, 0.0], [1.0, 1.0]];

pub fn random_angles(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    (
        rng.gen_range(0.0..=PI),
        rng.gen_range(-PI..=PI),
        rng.gen_range(-PI..=PI),
    )
}
