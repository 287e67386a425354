//! Coordinate descent that reconstructs the exact expansion of each
//! coordinate restriction and jumps to its global minimum.
//!
//! One step of the loop: restrict the expectation to parameter `j`, sample
//! it at `|D_j|` points, solve for the trigonometric expansion, minimize the
//! expansion over one period, and shift the parameter to the minimizer.
//! Sweeps repeat in fixed order `1..m` until a full sweep improves the
//! energy by less than the configured tolerance.

use thiserror::Error;

use crate::circuit::{CircuitError, Observable, ParameterizedCircuit, QuantumState};
use crate::fourier::{
    reconstruct_equidistant, reconstruct_random, FourierError, Reconstruction, TrigPolynomial,
};
use crate::sampler::{Sampler, ShotConfig};
use crate::spectrum::FrequencySet;
use crate::trigmin::minimize_trig;

#[derive(Debug, Clone, Error)]
pub enum TrainError {
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
    #[error("expected one frequency set per parameter ({expected}), got {got}")]
    WrongFrequencyCount { expected: usize, got: usize },
}

/// Node choice for the per-coordinate reconstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReconstructionMethod {
    /// Equidistant nodes `2 pi (offset + j) / S`.
    Equidistant { offset: i64 },
    /// Uniform random nodes; per-step seeds derive from this base seed.
    Random { seed: u64 },
}

/// Training configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainerConfig {
    /// Hard cap on full sweeps over the parameters.
    pub max_sweeps: usize,
    /// Stop once a full sweep decreases the energy by less than this.
    pub improvement_tol: f64,
    pub method: ReconstructionMethod,
    /// Serve the known `f(0)` from the previous step instead of spending a
    /// circuit evaluation. Applies only to equidistant nodes with offset 0,
    /// where `t = 0` is a sample point.
    pub reuse_current_value: bool,
    /// Estimate expectations from shots instead of evaluating exactly.
    pub shots: Option<ShotConfig>,
}

impl Default for TrainerConfig {
    fn default() -> Self {
        Self {
            max_sweeps: 100,
            improvement_tol: 1e-8,
            method: ReconstructionMethod::Equidistant { offset: 0 },
            reuse_current_value: false,
            shots: None,
        }
    }
}

/// Why training stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// A full sweep improved the energy by less than the tolerance.
    Converged,
    /// The sweep cap was reached with improvement still above tolerance.
    MaxSweepsReached,
}

/// One executed coordinate update.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateStep {
    /// 1-based sweep number.
    pub sweep: usize,
    /// 1-based parameter index.
    pub param: usize,
    /// Sample points consumed by the reconstruction.
    pub samples_used: usize,
    /// Circuit evaluations actually spent (reuse credits deducted).
    pub evaluations: usize,
    /// The reconstructed expansion of the coordinate restriction.
    pub poly: TrigPolynomial,
    /// Minimizer on the normalized axis, in `[0, 2pi)`.
    pub normalized_minimum: f64,
    /// Applied parameter shift `normalized_minimum / alpha`.
    pub step: f64,
    /// Energy after the update.
    pub energy: f64,
}

/// Full trace of a training run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainReport {
    pub initial_energy: f64,
    pub final_theta: Vec<f64>,
    pub final_energy: f64,
    /// Exact count of circuit evaluations spent.
    pub total_evaluations: usize,
    /// Full sweeps executed.
    pub sweeps: usize,
    pub stop: StopReason,
    /// Parameters skipped because their difference set is `{0}`.
    pub skipped: Vec<usize>,
    pub steps: Vec<CoordinateStep>,
}

impl TrainReport {
    /// Energy trace: initial energy followed by the energy after each step.
    pub fn energy_trace(&self) -> Vec<f64> {
        let mut trace = Vec::with_capacity(self.steps.len() + 1);
        trace.push(self.initial_energy);
        trace.extend(self.steps.iter().map(|s| s.energy));
        trace
    }
}

fn step_seed(base: u64, counter: u64) -> u64 {
    base ^ counter.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Minimize the expectation by coordinate descent with exact line minima.
///
/// `freqs` holds one [`FrequencySet`] per parameter (see
/// [`crate::spectrum::circuit_frequency_sets`]). Parameters whose set is
/// `{0}` have a constant restriction and are skipped. Angles stay on the
/// caller's axis; normalization by each coordinate's `alpha` is confined to
/// the reconstruction, and the applied shift is the normalized minimizer
/// divided by `alpha`.
pub fn coordinate_descent(
    circuit: &ParameterizedCircuit,
    state: &QuantumState,
    observable: &Observable,
    theta0: &[f64],
    freqs: &[FrequencySet],
    config: &TrainerConfig,
) -> Result<TrainReport, TrainError> {
    if freqs.len() != circuit.param_count() {
        return Err(TrainError::WrongFrequencyCount {
            expected: circuit.param_count(),
            got: freqs.len(),
        });
    }
    // validate inputs once; restrictions reuse the same checks
    circuit.check_inputs(theta0, state, observable)?;
    if config.shots.is_some() {
        // fail fast if the observable cannot be measured projectively
        observable.operator()?;
    }

    let mut sampler = config.shots.map(Sampler::new);
    let reuse_applies = config.reuse_current_value
        && matches!(
            config.method,
            ReconstructionMethod::Equidistant { offset: 0 }
        );

    let skipped: Vec<usize> = (1..=circuit.param_count())
        .filter(|&j| freqs[j - 1].is_constant())
        .collect();
    let active: Vec<usize> = (1..=circuit.param_count())
        .filter(|j| !skipped.contains(j))
        .collect();

    let mut theta = theta0.to_vec();
    let mut total_evaluations = 0usize;
    let mut steps: Vec<CoordinateStep> = Vec::new();
    let mut current_energy: Option<f64> = None;
    let mut initial_energy: Option<f64> = None;
    let mut step_counter = 0u64;
    let mut sweeps = 0usize;
    let mut stop = StopReason::MaxSweepsReached;

    if active.is_empty() {
        // every restriction is constant; one evaluation fixes the report
        let energy = evaluate(
            circuit,
            &theta,
            state,
            observable,
            &mut sampler,
            &mut total_evaluations,
        )?;
        return Ok(TrainReport {
            initial_energy: energy,
            final_theta: theta,
            final_energy: energy,
            total_evaluations,
            sweeps: 0,
            stop: StopReason::Converged,
            skipped,
            steps,
        });
    }

    for sweep in 1..=config.max_sweeps {
        sweeps = sweep;
        let sweep_start_energy = current_energy;
        for &param in &active {
            let fs = &freqs[param - 1];
            let alpha = fs.alpha();
            let restriction = circuit.restrict(&theta, state, observable, param)?;
            let cached = current_energy.filter(|_| reuse_applies);

            let mut evaluations = 0usize;
            let sampler_ref = &mut sampler;
            let evaluator = |s: f64| {
                if s == 0.0 {
                    if let Some(e) = cached {
                        return e;
                    }
                }
                evaluations += 1;
                let t = s / alpha;
                match sampler_ref {
                    Some(sampler) => {
                        let mut shifted = restriction.base_theta().to_vec();
                        shifted[param - 1] += t;
                        sampler
                            .expectation(circuit, &shifted, state, observable)
                            .expect("sampled evaluation failed on validated inputs")
                            .value
                    }
                    None => restriction.value(t),
                }
            };

            let reconstruction: Reconstruction = match config.method {
                ReconstructionMethod::Equidistant { offset } => {
                    reconstruct_equidistant(evaluator, fs, offset)?
                }
                ReconstructionMethod::Random { seed } => {
                    reconstruct_random(evaluator, fs, step_seed(seed, step_counter))?
                }
            };
            step_counter += 1;
            total_evaluations += evaluations;

            if initial_energy.is_none() {
                // the expansion hands over F(theta0) without a circuit call
                initial_energy = Some(reconstruction.poly.eval(0.0));
            }

            let (normalized_minimum, value) = minimize_trig(&reconstruction.poly);
            let step = normalized_minimum / alpha;
            theta[param - 1] += step;
            if config.shots.is_none() {
                if let Some(previous) = current_energy {
                    debug_assert!(
                        value <= previous + 1e-9,
                        "energy rose from {previous} to {value}"
                    );
                }
            }
            current_energy = Some(value);
            steps.push(CoordinateStep {
                sweep,
                param,
                samples_used: reconstruction.samples_used,
                evaluations,
                poly: reconstruction.poly,
                normalized_minimum,
                step,
                energy: value,
            });
        }
        let before = sweep_start_energy.or(initial_energy).unwrap();
        let after = current_energy.unwrap();
        if before - after < config.improvement_tol {
            stop = StopReason::Converged;
            break;
        }
    }

    let final_energy = current_energy.unwrap();
    Ok(TrainReport {
        initial_energy: initial_energy.unwrap(),
        final_theta: theta,
        final_energy,
        total_evaluations,
        sweeps,
        stop,
        skipped,
        steps,
    })
}

fn evaluate(
    circuit: &ParameterizedCircuit,
    theta: &[f64],
    state: &QuantumState,
    observable: &Observable,
    sampler: &mut Option<Sampler>,
    total: &mut usize,
) -> Result<f64, TrainError> {
    *total += 1;
    let value = match sampler {
        Some(sampler) => {
            sampler
                .expectation(circuit, theta, state, observable)?
                .value
        }
        None => circuit.expectation(theta, state, observable)?,
    };
    Ok(value)
}
