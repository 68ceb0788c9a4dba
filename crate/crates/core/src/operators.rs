//! Gates and strategy operators.
//!
//! Conventions: the classical bit flip is `F = iσx`, and the N-player
//! entangler is `J(γ) = exp(i γ/2 σx^{⊗N}) = cos(γ/2) I + i sin(γ/2) σx^{⊗N}`.
//! With these choices `J` commutes with every product of `I` and `F`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::{ComplexAmp, EPS_UNITARY};

const ZERO: ComplexAmp = ComplexAmp::new(0.0, 0.0);
const ONE: ComplexAmp = ComplexAmp::new(1.0, 0.0);
const I: ComplexAmp = ComplexAmp::new(0.0, 1.0);

/// A square complex matrix verified to satisfy `U†U = I` within [`EPS_UNITARY`].
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    dim: usize,
    // row-major
    entries: Vec<ComplexAmp>,
}

impl Unitary {
    /// Validates and wraps a row-major `dim × dim` matrix.
    pub fn new(dim: usize, entries: Vec<ComplexAmp>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::OutOfRange {
                name: "dim",
                value: dim as f64,
                min: 2.0,
                max: f64::INFINITY,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let deviation = unitarity_deviation(dim, &entries);
        if deviation.is_nan() || deviation >= EPS_UNITARY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Unitary { dim, entries })
    }

    /// Builds from nested rows.
    pub fn from_rows(rows: &[Vec<ComplexAmp>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Unsupported("matrix is not square".into()));
        }
        Self::new(dim, rows.concat())
    }

    // Products of unitaries are unitary up to rounding; skip re-validation.
    fn from_raw(dim: usize, entries: Vec<ComplexAmp>) -> Self {
        Unitary { dim, entries }
    }

    /// `σx`, the plain Pauli bit flip.
    pub fn pauli_x() -> Self {
        Self::from_raw(2, vec![ZERO, ONE, ONE, ZERO])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[ComplexAmp] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> ComplexAmp {
        self.entries[row * self.dim + col]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[ComplexAmp]) -> Vec<ComplexAmp> {
        self.entries
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self · other`.
    pub fn matmul(&self, other: &Unitary) -> Result<Unitary> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Self::from_raw(n, out))
    }

    pub fn adjoint(&self) -> Unitary {
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.get(i, j).conj();
            }
        }
        Self::from_raw(n, out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Unitary) -> Unitary {
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut out = vec![ZERO; d * d];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k) * d + j * m + l] = a * other.get(k, l);
                    }
                }
            }
        }
        Self::from_raw(d, out)
    }

    /// Kronecker product of a non-empty list, first factor most significant.
    pub fn kron_all(factors: &[Unitary]) -> Result<Unitary> {
        let (first, rest) = factors.split_first().ok_or(Error::Empty("kron factors"))?;
        Ok(rest.iter().fold(first.clone(), |acc, f| acc.kron(f)))
    }

    /// Multiplies by a unit-modulus scalar.
    pub fn with_phase(&self, phase: f64) -> Unitary {
        let p = ComplexAmp::from_polar(1.0, phase);
        Self::from_raw(self.dim, self.entries.iter().map(|a| a * p).collect())
    }

    /// Determinant of a 2×2 matrix.
    pub fn det2(&self) -> Option<ComplexAmp> {
        (self.dim == 2)
            .then(|| self.entries[0] * self.entries[3] - self.entries[1] * self.entries[2])
    }

    /// Largest entrywise `|a - b|` against another matrix of the same size.
    pub fn max_abs_diff(&self, other: &Unitary) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// True when the two agree up to a global phase, within `tol`.
    pub fn approx_eq_up_to_phase(&self, other: &Unitary, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        // phase from the largest entry of `other`
        let (k, _) = other
            .entries
            .iter()
            .enumerate()
            .fold((0, 0.0), |best, (i, a)| {
                if a.norm() > best.1 {
                    (i, a.norm())
                } else {
                    best
                }
            });
        let ratio = self.entries[k] / other.entries[k];
        if (ratio.norm() - 1.0).abs() > tol {
            return false;
        }
        self.max_abs_diff(&other.with_phase(ratio.arg())) <= tol
    }

    pub fn is_unitary(&self) -> bool {
        validate_unitary(self.dim, &self.entries)
    }
}

/// `max |(U†U - I)_{ij}|` for a row-major square matrix.
pub fn unitarity_deviation(dim: usize, entries: &[ComplexAmp]) -> f64 {
    if entries.len() != dim * dim {
        return f64::INFINITY;
    }
    let mut worst: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = ZERO;
            for k in 0..dim {
                acc += entries[k * dim + i].conj() * entries[k * dim + j];
            }
            if i == j {
                acc -= ONE;
            }
            let d = acc.norm();
            if !d.is_finite() {
                return f64::INFINITY;
            }
            worst = worst.max(d);
        }
    }
    worst
}

/// True iff the row-major matrix is unitary within [`EPS_UNITARY`].
/// This is the gate for user-supplied SU(n) moves.
pub fn validate_unitary(dim: usize, entries: &[ComplexAmp]) -> bool {
    unitarity_deviation(dim, entries) < EPS_UNITARY
}

/// Maps an angle onto `[-π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let w = x - two_pi * (x / two_pi).round();
    w.clamp(-PI, PI)
}

/// Parameters `(θ, α, β)` of a pure SU(2) strategy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su2Params {
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl Su2Params {
    /// `θ ∈ [0, π]`, `α, β ∈ [-π, π]`.
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        check_range("theta", theta, 0.0, PI)?;
        check_range("alpha", alpha, -PI, PI)?;
        check_range("beta", beta, -PI, PI)?;
        Ok(Su2Params { theta, alpha, beta })
    }

    /// Like [`Su2Params::new`] but first maps `α` and `β` into `[-π, π]`.
    /// The matrix is 2π-periodic in both phases, so this is exact.
    pub fn wrapped(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        Self::new(theta, wrap_angle(alpha), wrap_angle(beta))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn to_unitary(&self) -> Unitary {
        su2(self)
    }

    /// Reads `(θ, α, β)` back off a matrix in the chart. Returns `None` when
    /// `u` is not of that form (wrong size, or determinant other than 1).
    /// Phases that do not affect the matrix (`β` at `θ = 0`, `α` at `θ = π`)
    /// come back as 0.
    pub fn from_unitary(u: &Unitary) -> Option<Su2Params> {
        if u.dim() != 2 {
            return None;
        }
        let (a, b) = (u.get(0, 0), u.get(0, 1));
        let theta = 2.0 * b.norm().atan2(a.norm());
        let alpha = if a.norm() > 1e-12 { a.arg() } else { 0.0 };
        let beta = if b.norm() > 1e-12 { (b / I).arg() } else { 0.0 };
        let p = Su2Params::new(theta.clamp(0.0, PI), alpha, beta).ok()?;
        (su2(&p).max_abs_diff(u) < EPS_UNITARY).then_some(p)
    }
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !(min..=max).contains(&value) {
        return Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// Entanglement level `γ ∈ [0, π/2]`; `π/2` is maximal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntanglementParam(f64);

impl EntanglementParam {
    pub const MAX: f64 = FRAC_PI_2;

    pub fn new(gamma: f64) -> Result<Self> {
        check_range("gamma", gamma, 0.0, Self::MAX)?;
        Ok(EntanglementParam(gamma))
    }

    pub fn maximal() -> Self {
        EntanglementParam(Self::MAX)
    }

    pub fn none() -> Self {
        EntanglementParam(0.0)
    }

    pub fn gamma(&self) -> f64 {
        self.0
    }
}

/// `U(θ, α, β) = [[e^{iα} cos θ/2, i e^{iβ} sin θ/2], [i e^{-iβ} sin θ/2, e^{-iα} cos θ/2]]`.
pub fn su2(p: &Su2Params) -> Unitary {
    let (s, c) = (p.theta / 2.0).sin_cos();
    let ea = ComplexAmp::from_polar(1.0, p.alpha);
    let eb = ComplexAmp::from_polar(1.0, p.beta);
    Unitary::from_raw(
        2,
        vec![ea * c, I * eb * s, I * eb.conj() * s, ea.conj() * c],
    )
}

/// `H = (1/√2)[[1, 1], [1, -1]]`.
pub fn hadamard() -> Unitary {
    let h = ComplexAmp::new(FRAC_1_SQRT_2, 0.0);
    Unitary::from_raw(2, vec![h, h, h, -h])
}

/// The classical bit flip `F = iσx = [[0, i], [i, 0]]`.
pub fn flip() -> Unitary {
    Unitary::from_raw(2, vec![ZERO, I, I, ZERO])
}

pub fn identity(dim: usize) -> Result<Unitary> {
    if dim < 2 {
        return Err(Error::OutOfRange {
            name: "dim",
            value: dim as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    let mut e = vec![ZERO; dim * dim];
    for i in 0..dim {
        e[i * dim + i] = ONE;
    }
    Ok(Unitary::from_raw(dim, e))
}

/// `J(γ) = cos(γ/2) I + i sin(γ/2) σx^{⊗N}` on `n_players` qubits.
///
/// `σx^{⊗N}` maps basis index `k` to `k XOR (2^N - 1)`, which fills the
/// anti-diagonal.
pub fn entangler(n_players: usize, gamma: EntanglementParam) -> Result<Unitary> {
    if n_players < 2 {
        return Err(Error::OutOfRange {
            name: "n_players",
            value: n_players as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    if n_players > 12 {
        return Err(Error::Unsupported(format!("{n_players} players")));
    }
    let dim = 1usize << n_players;
    let (s, c) = (gamma.gamma() / 2.0).sin_cos();
    let mut e = vec![ZERO; dim * dim];
    for k in 0..dim {
        e[k * dim + k] += ComplexAmp::new(c, 0.0);
        e[k * dim + (k ^ (dim - 1))] += ComplexAmp::new(0.0, s);
    }
    Ok(Unitary::from_raw(dim, e))
}

/// `Ũ(θ) = U(θ, 0, 0)`: a quantum stand-in for cooperating with probability
/// `cos²(θ/2)`.
pub fn classical_mix(theta: f64) -> Result<Unitary> {
    Ok(su2(&Su2Params::new(theta, 0.0, 0.0)?))
}

/// `M = U(π/2, π/2, 0) = (i/√2)[[1, 1], [1, -1]]`.
pub fn miracle() -> Unitary {
    su2(&Su2Params {
        theta: FRAC_PI_2,
        alpha: FRAC_PI_2,
        beta: 0.0,
    })
}
