//! Shot-based statistical estimation of expectation values.
//!
//! The observable is measured projectively as a whole: outcomes are its
//! eigenvalues, drawn with the Born probabilities of the evolved state. The
//! sample mean is an unbiased estimator of the exact expectation and the
//! reported standard error shrinks as `1/sqrt(shots)`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::circuit::{CircuitError, Observable, ParameterizedCircuit, QuantumState};

/// Shot count and RNG seed for one estimator stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShotConfig {
    pub shots: u64,
    pub seed: u64,
}

impl ShotConfig {
    pub fn new(shots: u64, seed: u64) -> Self {
        assert!(shots >= 1, "need at least one shot");
        Self { shots, seed }
    }
}

/// Estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
}

/// Reusable sampler; successive calls continue one seeded stream, so a fixed
/// seed reproduces a whole reconstruction or training run.
#[derive(Debug, Clone)]
pub struct Sampler {
    shots: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(config: ShotConfig) -> Self {
        assert!(config.shots >= 1, "need at least one shot");
        Self {
            shots: config.shots,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
        }
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    /// Estimate `tr(M U(theta) rho U(theta)^dagger)` from `shots` simulated
    /// measurements of the observable's eigenvalues.
    pub fn expectation(
        &mut self,
        circuit: &ParameterizedCircuit,
        theta: &[f64],
        state: &QuantumState,
        observable: &Observable,
    ) -> Result<Estimate, CircuitError> {
        let operator = observable.operator()?;
        let evolved = circuit.propagate(theta, state)?;
        if evolved.dim() != operator.dim() {
            return Err(CircuitError::DimensionMismatch {
                what: "observable",
                expected: evolved.dim(),
                got: operator.dim(),
            });
        }
        let probabilities = born_probabilities(&evolved, operator.eigenvectors());
        let counts = multinomial_counts(&mut self.rng, self.shots, &probabilities);

        let n = self.shots as f64;
        let eigenvalues = operator.eigenvalues();
        let mean = counts
            .iter()
            .zip(eigenvalues)
            .map(|(&c, &ev)| c as f64 * ev)
            .sum::<f64>()
            / n;
        let std_error = if self.shots < 2 {
            0.0
        } else {
            let ssq = counts
                .iter()
                .zip(eigenvalues)
                .map(|(&c, &ev)| c as f64 * (ev - mean) * (ev - mean))
                .sum::<f64>();
            (ssq / (n - 1.0)).sqrt() / n.sqrt()
        };
        Ok(Estimate {
            value: mean,
            std_error,
        })
    }
}

/// One-off estimate with a fresh stream from `config.seed`.
pub fn sample_expectation(
    circuit: &ParameterizedCircuit,
    theta: &[f64],
    state: &QuantumState,
    observable: &Observable,
    config: ShotConfig,
) -> Result<Estimate, CircuitError> {
    Sampler::new(config).expectation(circuit, theta, state, observable)
}

/// Born probabilities of the state in the observable's eigenbasis, clamped
/// and renormalized against round-off.
fn born_probabilities(
    state: &QuantumState,
    eigenvectors: &crate::linalg::ComplexMatrix,
) -> Vec<f64> {
    let n = eigenvectors.dim();
    let mut probabilities = vec![0.0f64; n];
    if let Some(psi) = state.pure_amplitudes() {
        for (i, p) in probabilities.iter_mut().enumerate() {
            let mut amp = Complex64::ZERO;
            for a in 0..n {
                amp += eigenvectors[(a, i)].conj() * psi[a];
            }
            *p = amp.norm_sqr();
        }
    } else {
        let rho = state.to_density();
        for (i, p) in probabilities.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for a in 0..n {
                for b in 0..n {
                    acc += eigenvectors[(a, i)].conj() * rho[(a, b)] * eigenvectors[(b, i)];
                }
            }
            *p = acc.re.max(0.0);
        }
    }
    let total: f64 = probabilities.iter().sum();
    if total > 0.0 {
        for p in &mut probabilities {
            *p /= total;
        }
    }
    probabilities
}

/// Exact multinomial sampling by a chain of binomials, O(outcomes) per call.
fn multinomial_counts(rng: &mut ChaCha8Rng, shots: u64, probabilities: &[f64]) -> Vec<u64> {
    let n = probabilities.len();
    let mut counts = vec![0u64; n];
    let mut remaining = shots;
    let mut mass_left = 1.0f64;
    for i in 0..n {
        if remaining == 0 {
            break;
        }
        if i == n - 1 || mass_left <= 0.0 {
            counts[i] = remaining;
            break;
        }
        let q = (probabilities[i] / mass_left).clamp(0.0, 1.0);
        let draw = if q >= 1.0 {
            remaining
        } else {
            Binomial::new(remaining, q)
                .expect("valid binomial parameters")
                .sample(rng)
        };
        counts[i] = draw;
        remaining -= draw;
        mass_left -= probabilities[i];
    }
    counts
}
