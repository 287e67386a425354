//! Build a parameterized circuit in code and evaluate its expectation value.
//!
//! Run with: `cargo run -p qfourier --example evaluate`

use num_complex::Complex64;
use qfourier::circuit::gates;
use qfourier::{
    eigendecompose, CircuitElement, Observable, ParameterizedCircuit, Pauli, PauliTerm,
    QuantumState,
};
use std::f64::consts::PI;

fn main() {
    // one qubit: exp(-i theta X/2) |0>, measured in Z gives cos(theta)
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

    println!("single-qubit X rotation, <Z> = cos(theta):");
    for theta in [0.0, PI / 3.0, PI / 2.0, PI] {
        let value = circuit.expectation(&[theta], &state, &z).unwrap();
        println!(
            "  theta = {theta:>8.5}   <Z> = {value:+.6}   cos = {:+.6}",
            theta.cos()
        );
    }

    // two qubits: H on qubit 0, CNOT entangler, then a ZZ rotation
    let zz = Observable::from_pauli_sum(vec![PauliTerm::from_word(1.0, "ZZ").unwrap()]).unwrap();
    let zz_generator = eigendecompose(
        &Pauli::Z
            .matrix()
            .kron(&Pauli::Z.matrix())
            .scale(Complex64::new(0.5, 0.0)),
    )
    .unwrap();
    let bell_circuit = ParameterizedCircuit::new(
        2,
        1,
        vec![
            CircuitElement::Fixed(gates::embed(&gates::hadamard(), &[0], 2).unwrap()),
            CircuitElement::Fixed(gates::embed(&gates::cnot(), &[0, 1], 2).unwrap()),
            CircuitElement::Parameterized {
                generator: zz_generator,
                param_index: 1,
            },
        ],
    )
    .unwrap();
    let bell = QuantumState::zero(2);

    println!("\nBell pair with a ZZ rotation, <ZZ> stays 1 (the rotation is diagonal):");
    for theta in [0.0, 0.8, 2.5] {
        let value = bell_circuit.expectation(&[theta], &bell, &zz).unwrap();
        println!("  theta = {theta:>5.2}   <ZZ> = {value:+.9}");
    }

    // restriction: fix all parameters, move along one axis
    let f = circuit.restrict(&[0.0], &state, &z, 1).unwrap();
    println!("\nrestriction along the only axis from theta = 0:");
    println!("  f(0)      = {:+.6}", f.value(0.0));
    println!("  f(pi/2)   = {:+.6}", f.value(PI / 2.0));
    println!("  f(pi)     = {:+.6}", f.value(PI));
}
