//! Low-cost derivative rules: two evaluations for two-level spectra, four
//! for three evenly spaced levels, checked against finite differences.
//!
//! Run with: `cargo run -p qfourier --example shift_rules`

use num_complex::Complex64;
use qfourier::{
    eigendecompose, four_point_rule, two_point_derivative, CircuitElement, ComplexMatrix,
    Observable, ParameterizedCircuit, Pauli, PauliTerm, QuantumState,
};

fn central_difference(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (f(t + h) - f(t - h)) / (2.0 * h)
}

fn main() {
    // two-level case: Y/2 rotation measured in Z, f(t) = cos(t)
    let y_half = eigendecompose(&Pauli::Y.matrix().scale(Complex64::new(0.5, 0.0))).unwrap();
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
    let z = Observable::from_pauli_sum(vec![PauliTerm::from_word(1.0, "Z").unwrap()]).unwrap();
    let f = circuit.restrict(&[0.0], &state, &z, 1).unwrap();

    println!("two-point rule on a Y/2 rotation (true derivative -sin t):");
    for t in [0.0, 0.6, 1.8] {
        let rule = two_point_derivative(|s| f.value(s), t);
        let fd = central_difference(|s| f.value(s), t, 1e-5);
        println!(
            "  t = {t:>4.2}   rule {rule:+.9}   finite diff {fd:+.9}   -sin {:+.9}",
            -t.sin()
        );
    }

    // three evenly spaced levels: (Z(x)1 + 1(x)Z)/2 after an entangler
    let zz = {
        let z = Pauli::Z.matrix();
        let id = ComplexMatrix::identity(2);
        eigendecompose(
            &z.kron(&id)
                .add(&id.kron(&z))
                .scale(Complex64::new(0.5, 0.0)),
        )
        .unwrap()
    };
    let circuit2 = ParameterizedCircuit::new(
        2,
        1,
        vec![
            CircuitElement::Fixed(
                qfourier::circuit::gates::embed(&qfourier::circuit::gates::hadamard(), &[0], 2)
                    .unwrap(),
            ),
            CircuitElement::Fixed(
                qfourier::circuit::gates::embed(&qfourier::circuit::gates::cnot(), &[0, 1], 2)
                    .unwrap(),
            ),
            CircuitElement::Parameterized {
                generator: zz,
                param_index: 1,
            },
        ],
    )
    .unwrap();
    let state2 = QuantumState::zero(2);
    let obs2 = Observable::from_pauli_sum(vec![
        PauliTerm::from_word(1.0, "XI").unwrap(),
        PauliTerm::from_word(0.7, "XX").unwrap(),
    ])
    .unwrap();
    let g = circuit2.restrict(&[0.4], &state2, &obs2, 1).unwrap();

    let mut evaluations = 0usize;
    let rule = four_point_rule(|s| {
        evaluations += 1;
        g.value(s)
    });
    let fd = central_difference(|s| g.value(s), 0.0, 1e-5);
    println!("\nfour-point rule on a three-level generator at t = 0:");
    println!("  beta1 = {:+.9}  beta2 = {:+.9}", rule.beta1, rule.beta2);
    println!(
        "  f'(0) = {:+.9}  ({evaluations} evaluations)",
        rule.derivative
    );
    println!("  finite difference: {fd:+.9}");
}
