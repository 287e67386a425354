//! Recover the exact Fourier expansion of a restricted expectation function
//! three ways and compare their costs and accuracy.
//!
//! Run with: `cargo run -p qfourier --example reconstruct`

use num_complex::Complex64;
use qfourier::{
    difference_set, eigendecompose, reconstruct_equidistant, reconstruct_generic,
    reconstruct_random, CircuitElement, ComplexMatrix, Observable, ParameterizedCircuit, Pauli,
    PauliTerm, QuantumState, Reconstruction,
};
use std::cell::Cell;
use std::f64::consts::TAU;

fn main() {
    // two-qubit circuit driven by the sparse cross-resonance generator
    let x = Pauli::X.matrix();
    let z = Pauli::Z.matrix();
    let id = ComplexMatrix::identity(2);
    let re = |v: f64| Complex64::new(v, 0.0);
    let h = x
        .kron(&id)
        .add(&z.kron(&x).scale(re(-0.75)))
        .add(&id.kron(&x).scale(re(0.25)));
    let generator = eigendecompose(&h).unwrap();
    let freqs = difference_set(&generator, 1e-9, 1_000_000).unwrap();
    println!(
        "difference set D = {:?}  (|D| = {}, dense bound = {})",
        freqs.differences(),
        freqs.size(),
        2 * freqs.max_freq() + 1
    );

    let circuit = ParameterizedCircuit::new(
        2,
        1,
        vec![CircuitElement::Parameterized {
            generator,
            param_index: 1,
        }],
    )
    .unwrap();
    let state = QuantumState::zero(2);
    let observable = Observable::from_pauli_sum(vec![
        PauliTerm::from_word(1.0, "ZI").unwrap(),
        PauliTerm::from_word(0.4, "ZZ").unwrap(),
    ])
    .unwrap();
    let restriction = circuit.restrict(&[0.0], &state, &observable, 1).unwrap();
    let alpha = freqs.alpha();
    let calls = Cell::new(0usize);
    let normalized = |s: f64| {
        calls.set(calls.get() + 1);
        restriction.value(s / alpha)
    };

    let run = |name: &str, rec: Reconstruction, spent: usize| {
        let mut worst = 0.0f64;
        for j in 0..1000 {
            let s = TAU * j as f64 / 1000.0;
            worst = worst.max((rec.poly.eval(s) - restriction.value(s / alpha)).abs());
        }
        println!(
            "{name:<12} evaluations {spent:>2}   condition {:>9.2e}   max error {worst:.2e}",
            rec.condition
        );
        rec
    };

    calls.set(0);
    let random = reconstruct_random(normalized, &freqs, 7).unwrap();
    let random = run("random", random, calls.get());

    calls.set(0);
    let equidistant = reconstruct_equidistant(normalized, &freqs, 0).unwrap();
    println!(
        "equidistant nodes aliased two frequencies (e.g. -5 = 4 mod 9): fallback = {}",
        equidistant.aliased_fallback
    );
    run("equidistant", equidistant, calls.get());

    calls.set(0);
    let n = freqs.max_freq();
    let points: Vec<f64> = (0..(2 * n + 1) as usize)
        .map(|j| TAU * j as f64 / (2 * n + 1) as f64)
        .collect();
    let generic = reconstruct_generic(normalized, n, &points).unwrap();
    run("generic", generic, calls.get());

    println!("\ncoefficients from the |D|-evaluation reconstruction:");
    for (&k, c) in random
        .poly
        .frequencies()
        .iter()
        .zip(random.poly.coefficients())
    {
        if c.norm() > 1e-10 {
            println!("  c[{k:>2}] = {:+.6} {:+.6}i", c.re, c.im);
        }
    }
    println!("(the expansion is even in t, so all coefficients are real here)");
}
