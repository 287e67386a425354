//! Shared helpers for the integration suites: seeded random circuits,
//! observables, and finite differences.
#![allow(dead_code)] // each test target uses a different subset

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::Rng;

use qfourier::circuit::{
    CircuitElement, Observable, ParameterizedCircuit, Pauli, PauliTerm, QuantumState,
};
use qfourier::linalg::{eigendecompose, ComplexMatrix, HermitianOperator};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_hermitian(rng: &mut StdRng, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        m[(i, i)] = c(rng.random_range(-1.0..1.0), 0.0);
        for j in (i + 1)..dim {
            let z = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn random_unitary(rng: &mut StdRng, dim: usize) -> ComplexMatrix {
    eigendecompose(&random_hermitian(rng, dim))
        .expect("random hermitian decomposes")
        .evolve(1.0)
}

/// Random non-identity Pauli word on `qubits` qubits.
pub fn random_pauli_word(rng: &mut StdRng, qubits: usize) -> Vec<Pauli> {
    loop {
        let word: Vec<Pauli> = (0..qubits)
            .map(|_| match rng.random_range(0..4) {
                0 => Pauli::I,
                1 => Pauli::X,
                2 => Pauli::Y,
                _ => Pauli::Z,
            })
            .collect();
        if word.iter().any(|&p| p != Pauli::I) {
            return word;
        }
    }
}

pub fn pauli_word_matrix(word: &[Pauli]) -> ComplexMatrix {
    let mut m = word[0].matrix();
    for factor in &word[1..] {
        m = m.kron(&factor.matrix());
    }
    m
}

/// `P/2` for a random Pauli word: eigenvalues -1/2 and 1/2, canonical
/// difference set {0, +-1} with unit scale.
pub fn random_half_pauli_generator(rng: &mut StdRng, qubits: usize) -> HermitianOperator {
    let word = random_pauli_word(rng, qubits);
    eigendecompose(&pauli_word_matrix(&word).scale(c(0.5, 0.0))).unwrap()
}

/// `(Z(x)1 + 1(x)Z)/2` on two qubits: eigenvalues -1, 0, 0, 1, canonical
/// difference set {0, +-1, +-2} with unit scale.
pub fn three_level_generator() -> HermitianOperator {
    let z = Pauli::Z.matrix();
    let id = ComplexMatrix::identity(2);
    let m = z.kron(&id).add(&id.kron(&z)).scale(c(0.5, 0.0));
    eigendecompose(&m).unwrap()
}

/// The two-qubit cross-resonance-style generator
/// `X(x)1 - b Z(x)X + c 1(x)X`.
pub fn cross_resonance_generator(b: f64, cc: f64) -> HermitianOperator {
    let x = Pauli::X.matrix();
    let z = Pauli::Z.matrix();
    let id = ComplexMatrix::identity(2);
    let m = x
        .kron(&id)
        .add(&z.kron(&x).scale(c(-b, 0.0)))
        .add(&id.kron(&x).scale(c(cc, 0.0)));
    eigendecompose(&m).unwrap()
}

pub fn random_pauli_observable(rng: &mut StdRng, qubits: usize) -> Observable {
    let terms = (0..rng.random_range(1..4))
        .map(|_| PauliTerm {
            coefficient: rng.random_range(-1.0..1.0),
            factors: random_pauli_word(rng, qubits),
        })
        .collect();
    Observable::from_pauli_sum(terms).unwrap()
}

pub fn random_pure_state(rng: &mut StdRng, qubits: usize) -> QuantumState {
    let dim = 1usize << qubits;
    let raw: Vec<Complex64> = (0..dim)
        .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    QuantumState::pure(raw.into_iter().map(|z| z / norm).collect()).unwrap()
}

pub struct RandomCircuit {
    pub circuit: ParameterizedCircuit,
    pub state: QuantumState,
    pub observable: Observable,
    pub theta: Vec<f64>,
}

/// Random circuit whose parameterized elements all carry `P/2` generators,
/// interleaved with random fixed unitaries.
pub fn random_half_pauli_circuit(rng: &mut StdRng, qubits: usize, params: usize) -> RandomCircuit {
    let dim = 1usize << qubits;
    let mut elements = Vec::new();
    for j in 1..=params {
        elements.push(CircuitElement::Fixed(random_unitary(rng, dim)));
        elements.push(CircuitElement::Parameterized {
            generator: random_half_pauli_generator(rng, qubits),
            param_index: j,
        });
    }
    elements.push(CircuitElement::Fixed(random_unitary(rng, dim)));
    RandomCircuit {
        circuit: ParameterizedCircuit::new(qubits, params, elements).unwrap(),
        state: random_pure_state(rng, qubits),
        observable: random_pauli_observable(rng, qubits),
        theta: (0..params)
            .map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
            .collect(),
    }
}

/// Random two-qubit circuit mixing two-level (`P/2`) and three-level
/// (`(Z(x)1 + 1(x)Z)/2`) generators.
pub fn random_mixed_circuit(rng: &mut StdRng, params: usize) -> RandomCircuit {
    let qubits = 2usize;
    let dim = 4usize;
    let mut elements = Vec::new();
    for j in 1..=params {
        elements.push(CircuitElement::Fixed(random_unitary(rng, dim)));
        let generator = if rng.random_bool(0.5) {
            random_half_pauli_generator(rng, qubits)
        } else {
            three_level_generator()
        };
        elements.push(CircuitElement::Parameterized {
            generator,
            param_index: j,
        });
    }
    RandomCircuit {
        circuit: ParameterizedCircuit::new(qubits, params, elements).unwrap(),
        state: random_pure_state(rng, qubits),
        observable: random_pauli_observable(rng, qubits),
        theta: (0..params)
            .map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
            .collect(),
    }
}

/// Central finite difference.
pub fn central_difference(mut f: impl FnMut(f64) -> f64, t: f64, h: f64) -> f64 {
    (f(t + h) - f(t - h)) / (2.0 * h)
}
