//! Globally minimize trigonometric polynomials: closed form at degree one,
//! derivative root isolation above it.
//!
//! Run with: `cargo run -p qfourier --example minimize`

use num_complex::Complex64;
use qfourier::{
    eigendecompose, minimize_degree_one, minimize_trig, reconstruct_equidistant, CircuitElement,
    Observable, ParameterizedCircuit, Pauli, PauliTerm, QuantumState, TrigPolynomial,
};
use std::f64::consts::TAU;

fn main() {
    // closed form: a0 + beta sin + gamma cos
    let (t, v) = minimize_degree_one(2.0, 3.0, 4.0);
    println!("min of 2 + 3 sin t + 4 cos t : {v:+.6} at t = {t:.6} (amplitude 5)");

    // degree two, the classic double-well: cos t + cos 2t
    let half = Complex64::new(0.5, 0.0);
    let p = TrigPolynomial::new(
        vec![-2, -1, 0, 1, 2],
        vec![half, half, Complex64::ZERO, half, half],
        1.0,
    );
    let (t, v) = minimize_trig(&p);
    println!(
        "min of cos t + cos 2t        : {v:+.6} at t = {t:.6} (exact -9/8 at arccos(-1/4) = {:.6})",
        (-0.25f64).acos()
    );

    // a circuit restriction: reconstruct, then jump to the line minimum
    let y_half = eigendecompose(&Pauli::Y.matrix().scale(half)).unwrap();
    let circuit = ParameterizedCircuit::new(
        1,
        1,
        vec![CircuitElement::Parameterized {
            generator: y_half,
            param_index: 1,
        }],
    )
    .unwrap();
    let state = QuantumState::zero(1);
    let obs = Observable::from_pauli_sum(vec![
        PauliTerm::from_word(1.0, "Z").unwrap(),
        PauliTerm::from_word(0.5, "X").unwrap(),
    ])
    .unwrap();
    let restriction = circuit.restrict(&[0.2], &state, &obs, 1).unwrap();
    let fs = qfourier::circuit_frequency_sets(&circuit, 1e-9, 1_000_000)
        .unwrap()
        .remove(0);
    let rec = reconstruct_equidistant(|s| restriction.value(s), &fs, 0).unwrap();
    let (s_star, value) = minimize_trig(&rec.poly);
    println!("\ncircuit restriction <Z + X/2> along the Y rotation from theta = 0.2:");
    println!("  reconstruction from {} evaluations", rec.samples_used);
    println!("  line minimum {value:+.9} at offset {s_star:.6}");
    println!(
        "  direct check f(s*) = {:+.9}",
        restriction.value(s_star / fs.alpha())
    );

    // brute-force scan for comparison
    let mut grid_min = f64::INFINITY;
    for j in 0..100_000 {
        grid_min = grid_min.min(restriction.value(TAU * j as f64 / 100_000.0));
    }
    println!("  dense-scan minimum {grid_min:+.9} (100000 circuit evaluations)");
}
