//! Dense state vectors over tensor products of small sites.
//!
//! Flat index convention: the basis ket `|a₁a₂…a_N⟩` lives at
//! `a₁·(d₂⋯d_N) + … + a_N`, so site 0 is the most significant digit.
//! States are values; every operation returns a new state.

use crate::error::{Error, Result};
use crate::operators::Unitary;
use crate::{ComplexAmp, EPS_PROB};

/// A normalized pure state of a register of finite-dimensional sites.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    dims: Vec<usize>,
    amps: Vec<ComplexAmp>,
}

impl StateVector {
    /// Builds a state, checking finiteness, length and normalization.
    /// The amplitudes are never rescaled.
    pub fn new(dims: Vec<usize>, amps: Vec<ComplexAmp>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Empty("state dims"));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGame(format!("site dimension {d} < 2")));
        }
        let len: usize = dims.iter().product();
        if amps.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                got: amps.len(),
            });
        }
        if let Some(index) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite { index });
        }
        let state = StateVector { dims, amps };
        state.check_norm()?;
        Ok(state)
    }

    /// The basis state `|index⟩`.
    pub fn basis(dims: Vec<usize>, index: usize) -> Result<Self> {
        let len: usize = dims.iter().product();
        if index >= len {
            return Err(Error::DimensionMismatch {
                expected: len,
                got: index,
            });
        }
        let mut amps = vec![ComplexAmp::new(0.0, 0.0); len];
        amps[index] = ComplexAmp::new(1.0, 0.0);
        Self::new(dims, amps)
    }

    /// `|0…0⟩` on `n` qubits.
    pub fn zero_qubits(n: usize) -> Result<Self> {
        Self::basis(vec![2; n], 0)
    }

    /// Basis state from a per-site label, e.g. `[0, 1]` for `|01⟩`.
    pub fn from_labels(dims: Vec<usize>, labels: &[usize]) -> Result<Self> {
        if labels.len() != dims.len() {
            return Err(Error::DimensionMismatch {
                expected: dims.len(),
                got: labels.len(),
            });
        }
        let index = flat_index(&dims, labels)?;
        Self::basis(dims, index)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amps(&self) -> &[ComplexAmp] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Multiplies every amplitude by a unit-modulus scalar.
    pub fn with_phase(&self, phase: f64) -> Self {
        let p = ComplexAmp::from_polar(1.0, phase);
        StateVector {
            dims: self.dims.clone(),
            amps: self.amps.iter().map(|a| a * p).collect(),
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<ComplexAmp> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn check_norm(&self) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() > EPS_PROB {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(())
    }

    fn site_check(&self, site: usize) -> Result<()> {
        if site >= self.dims.len() {
            return Err(Error::SiteOutOfRange {
                site,
                sites: self.dims.len(),
            });
        }
        Ok(())
    }
}

/// Flat index of a per-site label under the big-endian convention.
pub fn flat_index(dims: &[usize], labels: &[usize]) -> Result<usize> {
    let mut index = 0;
    for (&d, &a) in dims.iter().zip(labels) {
        if a >= d {
            return Err(Error::InvalidGame(format!(
                "label {a} out of range for site of dimension {d}"
            )));
        }
        index = index * d + a;
    }
    Ok(index)
}

/// Inverse of [`flat_index`].
pub fn labels_of(dims: &[usize], mut index: usize) -> Vec<usize> {
    let mut labels = vec![0; dims.len()];
    for (slot, &d) in labels.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    labels
}

/// Kronecker product of states; the first state's site 0 becomes the most
/// significant site of the result.
pub fn tensor(states: &[StateVector]) -> Result<StateVector> {
    let (first, rest) = states.split_first().ok_or(Error::Empty("tensor input"))?;
    let mut dims = first.dims.clone();
    let mut amps = first.amps.clone();
    for s in rest {
        dims.extend_from_slice(&s.dims);
        amps = amps
            .iter()
            .flat_map(|a| s.amps.iter().map(move |b| a * b))
            .collect();
    }
    StateVector::new(dims, amps)
}

/// Applies `u` to one site, leaving the others untouched.
pub fn apply_local(state: &StateVector, site: usize, u: &Unitary) -> Result<StateVector> {
    state.site_check(site)?;
    let d = state.dims[site];
    if u.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: u.dim(),
        });
    }
    let inner: usize = state.dims[site + 1..].iter().product();
    let block = d * inner;
    let mut out = vec![ComplexAmp::new(0.0, 0.0); state.len()];
    let mut column = vec![ComplexAmp::new(0.0, 0.0); d];
    for base in (0..state.len()).step_by(block) {
        for offset in 0..inner {
            for (k, c) in column.iter_mut().enumerate() {
                *c = state.amps[base + k * inner + offset];
            }
            for row in 0..d {
                let mut acc = ComplexAmp::new(0.0, 0.0);
                for (k, c) in column.iter().enumerate() {
                    acc += u.get(row, k) * c;
                }
                out[base + row * inner + offset] = acc;
            }
        }
    }
    StateVector::new(state.dims.clone(), out)
}

/// Applies an operator on the whole register.
pub fn apply_global(state: &StateVector, u: &Unitary) -> Result<StateVector> {
    if u.dim() != state.len() {
        return Err(Error::DimensionMismatch {
            expected: state.len(),
            got: u.dim(),
        });
    }
    StateVector::new(state.dims.clone(), u.apply(&state.amps))
}

/// Computational-basis outcome probabilities `|amp_k|²`.
pub fn outcome_probabilities(state: &StateVector) -> Vec<f64> {
    state.amps.iter().map(|a| a.norm_sqr()).collect()
}

/// `|⟨a|b⟩|²`, which is 1 exactly when the states agree up to a global phase.
pub fn fidelity_up_to_phase(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr().min(1.0))
}

/// A classical mixture of pure states sharing one register layout.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedEnsemble {
    members: Vec<(f64, StateVector)>,
}

impl WeightedEnsemble {
    pub fn new(members: Vec<(f64, StateVector)>) -> Result<Self> {
        let (_, first) = members.first().ok_or(Error::Empty("ensemble"))?;
        let dims = first.dims.clone();
        let mut total = 0.0;
        for (w, s) in &members {
            if !(0.0..=1.0).contains(w) {
                return Err(Error::InvalidDistribution(format!(
                    "weight {w} outside [0, 1]"
                )));
            }
            if s.dims != dims {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    got: s.len(),
                });
            }
            total += w;
        }
        if (total - 1.0).abs() > EPS_PROB {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}"
            )));
        }
        Ok(WeightedEnsemble { members })
    }

    pub fn pure(state: StateVector) -> Self {
        WeightedEnsemble {
            members: vec![(1.0, state)],
        }
    }

    pub fn members(&self) -> &[(f64, StateVector)] {
        &self.members
    }

    pub fn total_weight(&self) -> f64 {
        self.members.iter().map(|(w, _)| w).sum()
    }

    pub fn dims(&self) -> &[usize] {
        self.members[0].1.dims()
    }

    /// Weighted outcome probabilities of the mixture.
    pub fn outcome_probabilities(&self) -> Vec<f64> {
        let mut probs = vec![0.0; self.members[0].1.len()];
        for (w, s) in &self.members {
            for (p, a) in probs.iter_mut().zip(s.amps()) {
                *p += w * a.norm_sqr();
            }
        }
        probs
    }

    /// Applies a unitary to one site of every member.
    pub fn map_local(&self, site: usize, u: &Unitary) -> Result<Self> {
        self.map(|s| apply_local(s, site, u))
    }

    /// Applies a register-wide unitary to every member.
    pub fn map_global(&self, u: &Unitary) -> Result<Self> {
        self.map(|s| apply_global(s, u))
    }

    fn map<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&StateVector) -> Result<StateVector>,
    {
        let members = self
            .members
            .iter()
            .map(|(w, s)| Ok((*w, f(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightedEnsemble { members })
    }
}

/// A CNOT onto `site` whose control is a classical bit that is 1 with
/// probability `p`: every member splits into an untouched branch of weight
/// `w(1-p)` and a flipped branch `σx ψ` of weight `w p`. Zero-weight branches
/// are dropped.
pub fn apply_bitflip_noise(
    ensemble: &WeightedEnsemble,
    site: usize,
    p: f64,
) -> Result<WeightedEnsemble> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            min: 0.0,
            max: 1.0,
        });
    }
    let x = Unitary::pauli_x();
    let mut members = Vec::with_capacity(ensemble.members.len() * 2);
    for (w, s) in &ensemble.members {
        let flipped = apply_local(s, site, &x)?;
        if p < 1.0 {
            members.push((w * (1.0 - p), s.clone()));
        }
        if p > 0.0 {
            members.push((w * p, flipped));
        }
    }
    Ok(WeightedEnsemble { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{flip, hadamard, identity};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> ComplexAmp {
        ComplexAmp::new(re, im)
    }

    fn ket(bits: &[usize]) -> StateVector {
        StateVector::from_labels(vec![2; bits.len()], bits).unwrap()
    }

    fn assert_amps(s: &StateVector, expected: &[ComplexAmp]) {
        assert_eq!(s.len(), expected.len());
        for (a, e) in s.amps().iter().zip(expected) {
            assert!((a - e).norm() < 1e-12, "{a} != {e}");
        }
    }

    #[test]
    fn tensor_of_basis_states() {
        let s = tensor(&[ket(&[0]), ket(&[0])]).unwrap();
        assert_amps(&s, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);

        let s = tensor(&[ket(&[1]), ket(&[1]), ket(&[1])]).unwrap();
        assert_eq!(s.dims(), &[2, 2, 2]);
        assert_eq!(outcome_probabilities(&s)[7], 1.0);
    }

    #[test]
    fn tensor_distributes_over_superposition() {
        let plus =
            StateVector::new(vec![2], vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]).unwrap();
        let s = tensor(&[plus, ket(&[0])]).unwrap();
        let h = FRAC_1_SQRT_2;
        assert_amps(&s, &[c(h, 0.0), c(0.0, 0.0), c(h, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn tensor_rejects_empty() {
        assert_eq!(tensor(&[]), Err(Error::Empty("tensor input")));
    }

    #[test]
    fn flip_on_first_site() {
        let s = apply_local(&ket(&[0, 0]), 0, &flip()).unwrap();
        assert_amps(&s, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]);
    }

    #[test]
    fn hadamard_makes_equal_superposition() {
        let s = apply_local(&ket(&[0]), 0, &hadamard()).unwrap();
        assert_amps(&s, &[c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]);
        let p = outcome_probabilities(&s);
        assert!((p[0] - 0.5).abs() < 1e-15 && (p[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn identity_leaves_state() {
        let s = tensor(&[ket(&[1]), ket(&[0])]).unwrap();
        assert_eq!(apply_local(&s, 1, &identity(2).unwrap()).unwrap(), s);
        assert_eq!(apply_global(&s, &identity(4).unwrap()).unwrap(), s);
    }

    #[test]
    fn apply_local_errors() {
        let s = ket(&[0, 0]);
        assert!(matches!(
            apply_local(&s, 2, &flip()),
            Err(Error::SiteOutOfRange { .. })
        ));
        assert!(matches!(
            apply_local(&s, 0, &identity(3).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            apply_global(&s, &flip()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn unnormalized_state_is_rejected() {
        let r = StateVector::new(vec![2], vec![c(0.5, 0.0), c(0.5, 0.0)]);
        assert!(matches!(r, Err(Error::NotNormalized { .. })));
        let r = StateVector::new(vec![2], vec![c(f64::NAN, 0.0), c(1.0, 0.0)]);
        assert!(matches!(r, Err(Error::NonFinite { index: 0 })));
    }

    #[test]
    fn fidelity_cases() {
        let a = ket(&[0]);
        let b = ket(&[1]);
        assert_eq!(fidelity_up_to_phase(&a, &a).unwrap(), 1.0);
        assert_eq!(fidelity_up_to_phase(&a, &b).unwrap(), 0.0);
        let psi = apply_local(&a, 0, &hadamard()).unwrap();
        let f = fidelity_up_to_phase(&psi, &psi.with_phase(1.234)).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
        assert!(fidelity_up_to_phase(&a, &ket(&[0, 0])).is_err());
    }

    #[test]
    fn noise_p_zero_is_identity() {
        let e = WeightedEnsemble::pure(ket(&[0, 1]));
        assert_eq!(apply_bitflip_noise(&e, 1, 0.0).unwrap(), e);
    }

    #[test]
    fn noise_p_one_flips() {
        let e = WeightedEnsemble::pure(ket(&[0]));
        let out = apply_bitflip_noise(&e, 0, 1.0).unwrap();
        assert_eq!(out.members().len(), 1);
        let (w, s) = &out.members()[0];
        assert_eq!(*w, 1.0);
        assert!((fidelity_up_to_phase(s, &ket(&[1])).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn noise_half_splits_into_two_branches() {
        // control bit 0: |00⟩ with weight 1/2; control bit 1: X on site 0 gives |10⟩
        let e = WeightedEnsemble::pure(ket(&[0, 0]));
        let out = apply_bitflip_noise(&e, 0, 0.5).unwrap();
        let m = out.members();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].0, 0.5);
        assert_eq!(m[1].0, 0.5);
        assert!((fidelity_up_to_phase(&m[0].1, &ket(&[0, 0])).unwrap() - 1.0).abs() < 1e-12);
        assert!((fidelity_up_to_phase(&m[1].1, &ket(&[1, 0])).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(out.outcome_probabilities(), vec![0.5, 0.0, 0.5, 0.0]);
    }

    #[test]
    fn noise_rejects_bad_probability() {
        let e = WeightedEnsemble::pure(ket(&[0]));
        assert!(apply_bitflip_noise(&e, 0, 1.5).is_err());
        assert!(apply_bitflip_noise(&e, 0, -0.1).is_err());
        assert!(apply_bitflip_noise(&e, 3, 0.5).is_err());
    }

    #[test]
    fn ensemble_validation() {
        assert!(WeightedEnsemble::new(vec![(0.3, ket(&[0])), (0.3, ket(&[1]))]).is_err());
        assert!(WeightedEnsemble::new(vec![(0.5, ket(&[0])), (0.5, ket(&[1, 0]))]).is_err());
        assert!(WeightedEnsemble::new(vec![(0.5, ket(&[0])), (0.5, ket(&[1]))]).is_ok());
    }

    #[test]
    fn labels_roundtrip() {
        let dims = [2, 3, 2];
        for i in 0..12 {
            assert_eq!(flat_index(&dims, &labels_of(&dims, i)).unwrap(), i);
        }
        assert_eq!(labels_of(&[2, 2], 1), vec![0, 1]);
    }
}
