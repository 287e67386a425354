//! Fourier calculus for parameterized quantum circuits.
//!
//! A circuit of the form `U(theta) = e^{-i theta_m H_m} V_{m-1} ...
//! e^{-i theta_1 H_1}` drives the expectation `F(theta) = tr(M U(theta) rho
//! U(theta)^dagger)`. Restricted to one parameter axis, `F` is a
//! trigonometric polynomial whose frequencies are the pairwise eigenvalue
//! differences of the generator, rescaled to integers. This crate
//!
//! - evaluates `F` exactly on a dense simulator ([`circuit`]),
//! - normalizes generator spectra to integer levels and difference sets
//!   ([`spectrum`]),
//! - recovers the exact expansion of a restriction from `|D|` circuit
//!   evaluations, at equidistant or random points ([`fourier`]),
//! - differentiates with 2- and 4-point shift rules where the spectrum
//!   allows ([`shift_rules`]),
//! - minimizes a restriction globally over one period ([`trigmin`]),
//! - trains by coordinate descent that jumps to each exact line minimum
//!   ([`optimizer`]),
//! - and models shot noise with a seeded projective sampler ([`sampler`]).
//!
//! Coefficient convention throughout: `f(t) = sum_{k in D} c_k e^{ikt}` with
//! `c_{-k} = conj(c_k)`, so evaluation and differentiation carry no
//! normalization factors.
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run -p qfourier --example evaluate
//! cargo run -p qfourier --example spectrum
//! cargo run -p qfourier --example reconstruct
//! cargo run -p qfourier --example shift_rules
//! cargo run -p qfourier --example minimize
//! cargo run -p qfourier --example train
//! cargo run -p qfourier --example shots
//! ```
//!
//! The same functionality is scriptable through the `qfourier` binary; see
//! the README for the circuit file format and subcommands.

pub mod circuit;
pub mod cli;
pub mod fourier;
pub mod linalg;
pub mod optimizer;
pub mod sampler;
pub mod shift_rules;
pub mod spectrum;
pub mod trigmin;

pub use circuit::{
    CircuitElement, CircuitError, Observable, ParameterizedCircuit, Pauli, PauliTerm, QuantumState,
    Restriction,
};
pub use fourier::{
    reconstruct_equidistant, reconstruct_generic, reconstruct_random, FourierError, Reconstruction,
    TrigPolynomial,
};
pub use linalg::{eigendecompose, solve_linear, ComplexMatrix, HermitianOperator, LinalgError};
pub use optimizer::{
    coordinate_descent, CoordinateStep, ReconstructionMethod, StopReason, TrainError, TrainReport,
    TrainerConfig,
};
pub use sampler::{sample_expectation, Estimate, Sampler, ShotConfig};
pub use shift_rules::{four_point_rule, two_point_derivative, FourPointRule};
pub use spectrum::{
    circuit_frequency_sets, difference_set, parameter_frequency_set, rationalize, FrequencySet,
    SpectrumError,
};
pub use trigmin::{minimize_degree_one, minimize_trig};
