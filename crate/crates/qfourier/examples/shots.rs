//! Shot-based estimation: projective measurement of the observable, sample
//! mean and standard error, and the 1/sqrt(shots) accuracy scaling carried
//! into reconstructed coefficients.
//!
//! Run with: `cargo run -p qfourier --example shots`

use num_complex::Complex64;
use qfourier::{
    circuit_frequency_sets, eigendecompose, reconstruct_equidistant, sample_expectation,
    CircuitElement, Observable, ParameterizedCircuit, Pauli, PauliTerm, QuantumState, Sampler,
    ShotConfig,
};

fn main() {
    let generator = eigendecompose(&Pauli::X.matrix().scale(Complex64::new(0.5, 0.0))).unwrap();
    let circuit = ParameterizedCircuit::new(
        1,
        1,
        vec![CircuitElement::Parameterized {
            generator,
            param_index: 1,
        }],
    )
    .unwrap();
    let state = QuantumState::zero(1);
    let z = Observable::from_pauli_sum(vec![PauliTerm::from_word(1.0, "Z").unwrap()]).unwrap();
    let theta = [std::f64::consts::PI / 3.0];
    let truth = circuit.expectation(&theta, &state, &z).unwrap();

    println!("estimating <Z> = cos(pi/3) = {truth:+.6} from finite shots:\n");
    println!(
        "{:>10}  {:>12}  {:>12}  {:>10}",
        "shots", "estimate", "std error", "|error|"
    );
    for shots in [100u64, 1_000, 10_000, 100_000, 1_000_000] {
        let est =
            sample_expectation(&circuit, &theta, &state, &z, ShotConfig::new(shots, 42)).unwrap();
        println!(
            "{shots:>10}  {:>+12.6}  {:>12.6}  {:>10.2e}",
            est.value,
            est.std_error,
            (est.value - truth).abs()
        );
    }

    // the same scaling shows up in reconstructed Fourier coefficients
    let fs = circuit_frequency_sets(&circuit, 1e-9, 1_000_000)
        .unwrap()
        .remove(0);
    let restriction = circuit.restrict(&theta, &state, &z, 1).unwrap();
    let exact = reconstruct_equidistant(|s| restriction.value(s), &fs, 0).unwrap();

    println!("\ncoefficient error of the 3-point reconstruction under shot noise");
    println!("(averaged over 10 seeds):\n");
    println!("{:>10}  {:>14}", "shots", "mean max error");
    for shots in [1_000u64, 10_000, 100_000, 1_000_000] {
        let mut total = 0.0;
        for seed in 0..10u64 {
            let mut sampler = Sampler::new(ShotConfig::new(shots, seed));
            let rec = reconstruct_equidistant(
                |s| {
                    let shifted = [theta[0] + s];
                    sampler
                        .expectation(&circuit, &shifted, &state, &z)
                        .unwrap()
                        .value
                },
                &fs,
                0,
            )
            .unwrap();
            total += rec
                .poly
                .frequencies()
                .iter()
                .map(|&k| (rec.poly.coefficient(k) - exact.poly.coefficient(k)).norm())
                .fold(0.0f64, f64::max);
        }
        println!("{shots:>10}  {:>14.3e}", total / 10.0);
    }
    println!("\neach 100x in shots buys about 10x in coefficient accuracy");
}
