//! Coordinate-descent training of a toy variational eigensolver: every step
//! reconstructs one coordinate restriction exactly and jumps to its global
//! minimum, so the energy never rises.
//!
//! Run with: `cargo run -p qfourier --example train`

use num_complex::Complex64;
use qfourier::circuit::gates;
use qfourier::{
    circuit_frequency_sets, coordinate_descent, eigendecompose, CircuitElement, Observable,
    ParameterizedCircuit, Pauli, PauliTerm, QuantumState, TrainerConfig,
};

fn main() {
    // hardware-style ansatz on two qubits: Y rotations, an entangler, then
    // another rotation layer
    let half = |p: Pauli, q: usize| {
        let local = p.matrix().scale(Complex64::new(0.5, 0.0));
        let embedded = gates::embed(&local, &[q], 2).unwrap();
        eigendecompose(&embedded).unwrap()
    };
    let circuit = ParameterizedCircuit::new(
        2,
        4,
        vec![
            CircuitElement::Parameterized {
                generator: half(Pauli::Y, 0),
                param_index: 1,
            },
            CircuitElement::Parameterized {
                generator: half(Pauli::Y, 1),
                param_index: 2,
            },
            CircuitElement::Fixed(gates::embed(&gates::cnot(), &[0, 1], 2).unwrap()),
            CircuitElement::Parameterized {
                generator: half(Pauli::Y, 0),
                param_index: 3,
            },
            CircuitElement::Parameterized {
                generator: half(Pauli::X, 1),
                param_index: 4,
            },
        ],
    )
    .unwrap();
    let state = QuantumState::zero(2);

    // toy Hamiltonian: ZZ coupling with transverse fields
    let hamiltonian = Observable::from_pauli_sum(vec![
        PauliTerm::from_word(1.0, "ZZ").unwrap(),
        PauliTerm::from_word(0.6, "XI").unwrap(),
        PauliTerm::from_word(0.6, "IX").unwrap(),
    ])
    .unwrap();
    let ground = hamiltonian.operator().unwrap().eigenvalues()[0];
    println!("target ground energy: {ground:+.9}\n");

    let freqs = circuit_frequency_sets(&circuit, 1e-9, 1_000_000).unwrap();
    for (i, fs) in freqs.iter().enumerate() {
        println!(
            "parameter {}: D = {:?}, {} evaluations per step",
            i + 1,
            fs.differences(),
            fs.size()
        );
    }

    let config = TrainerConfig {
        reuse_current_value: true,
        ..TrainerConfig::default()
    };
    let report = coordinate_descent(
        &circuit,
        &state,
        &hamiltonian,
        &[0.1, -0.2, 0.05, 0.3],
        &freqs,
        &config,
    )
    .unwrap();

    println!("\ninitial energy {:+.9}", report.initial_energy);
    for step in &report.steps {
        println!(
            "sweep {} param {}  step {:+.4}  energy {:+.9}  ({} evaluations)",
            step.sweep, step.param, step.step, step.energy, step.evaluations
        );
    }
    println!(
        "\nstopped after {} sweeps ({:?}), {} circuit evaluations total",
        report.sweeps, report.stop, report.total_evaluations
    );
    println!(
        "final energy {:+.9}   gap to ground {:+.3e}",
        report.final_energy,
        report.final_energy - ground
    );
}
