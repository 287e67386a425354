//! Named gate matrices and embedding into a multi-qubit register.
//!
//! Qubit 0 is the leftmost (most significant) position: qubit `q` of an
//! n-qubit register maps to bit `n - 1 - q` of a basis index.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use super::CircuitError;
use crate::linalg::ComplexMatrix;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn hadamard() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)],
        vec![c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)],
    ])
}

pub fn pauli_x() -> ComplexMatrix {
    super::Pauli::X.matrix()
}

pub fn pauli_y() -> ComplexMatrix {
    super::Pauli::Y.matrix()
}

pub fn pauli_z() -> ComplexMatrix {
    super::Pauli::Z.matrix()
}

pub fn phase_s() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 1.0)],
    ])
}

pub fn phase_t() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![
            c(0.0, 0.0),
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        ],
    ])
}

/// Controlled NOT; the first target is the control.
pub fn cnot() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
    ])
}

pub fn controlled_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    ])
}

/// Look up a named gate by its file-format spelling.
pub fn by_name(name: &str) -> Option<(ComplexMatrix, usize)> {
    let gate = match name.to_ascii_uppercase().as_str() {
        "H" => (hadamard(), 1),
        "X" => (pauli_x(), 1),
        "Y" => (pauli_y(), 1),
        "Z" => (pauli_z(), 1),
        "S" => (phase_s(), 1),
        "T" => (phase_t(), 1),
        "CNOT" | "CX" => (cnot(), 2),
        "CZ" => (controlled_z(), 2),
        _ => return None,
    };
    Some(gate)
}

/// Embed a k-qubit gate acting on `targets` into the full register by tensor
/// products with the identity. The gate's own qubit order follows the order
/// of `targets`.
pub fn embed(
    gate: &ComplexMatrix,
    targets: &[usize],
    qubits: usize,
) -> Result<ComplexMatrix, CircuitError> {
    let k = targets.len();
    let bad = |reason: &str| CircuitError::BadTargets {
        targets: targets.to_vec(),
        qubits,
        reason: reason.to_string(),
    };
    if k == 0 || k > qubits {
        return Err(bad("expected between 1 and `qubits` targets"));
    }
    if gate.dim() != 1 << k {
        return Err(bad("gate dimension does not match the target count"));
    }
    for (i, &t) in targets.iter().enumerate() {
        if t >= qubits {
            return Err(bad("target out of range"));
        }
        if targets[..i].contains(&t) {
            return Err(bad("duplicate target"));
        }
    }

    let dim = 1usize << qubits;
    let gate_dim = 1usize << k;
    // bit position of each target within a full-register index
    let bits: Vec<usize> = targets.iter().map(|&t| qubits - 1 - t).collect();
    let mut out = ComplexMatrix::zeros(dim);
    for col in 0..dim {
        let mut gate_col = 0usize;
        for (pos, &b) in bits.iter().enumerate() {
            if col >> b & 1 == 1 {
                gate_col |= 1 << (k - 1 - pos);
            }
        }
        let cleared = bits.iter().fold(col, |acc, &b| acc & !(1 << b));
        for gate_row in 0..gate_dim {
            let entry = gate[(gate_row, gate_col)];
            if entry == Complex64::ZERO {
                continue;
            }
            let mut row = cleared;
            for (pos, &b) in bits.iter().enumerate() {
                if gate_row >> (k - 1 - pos) & 1 == 1 {
                    row |= 1 << b;
                }
            }
            out[(row, col)] = entry;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigendecompose;

    #[test]
    fn named_gates_are_unitary() {
        for name in ["H", "X", "Y", "Z", "S", "T", "CNOT", "CZ"] {
            let (gate, _) = by_name(name).unwrap();
            assert!(gate.is_unitary(1e-12), "{name} is not unitary");
        }
        assert!(by_name("Q").is_none());
    }

    #[test]
    fn embed_single_qubit_matches_kron() {
        let h = hadamard();
        let id = ComplexMatrix::identity(2);
        let on_first = embed(&h, &[0], 2).unwrap();
        assert!(on_first.sub(&h.kron(&id)).max_norm() <= 1e-15);
        let on_second = embed(&h, &[1], 2).unwrap();
        assert!(on_second.sub(&id.kron(&h)).max_norm() <= 1e-15);
    }

    #[test]
    fn embed_cnot_reversed_targets() {
        // control on qubit 1, target on qubit 0 in a 2-qubit register:
        // |01> -> |11>, |11> -> |01>, others fixed
        let u = embed(&cnot(), &[1, 0], 2).unwrap();
        let state = |i: usize| {
            let mut v = vec![Complex64::ZERO; 4];
            v[i] = Complex64::ONE;
            v
        };
        let out = u.matvec(&state(0b01));
        assert!((out[0b11] - Complex64::ONE).norm() <= 1e-15);
        let out = u.matvec(&state(0b00));
        assert!((out[0b00] - Complex64::ONE).norm() <= 1e-15);
    }

    #[test]
    fn embed_preserves_hermitian_generators() {
        // X on qubit 1 of 3 embeds to a Hermitian matrix with the same spectrum shape
        let x = pauli_x();
        let big = embed(&x, &[1], 3).unwrap();
        let op = eigendecompose(&big).unwrap();
        assert!((op.eigenvalues()[0] + 1.0).abs() <= 1e-12);
        assert!((op.eigenvalues()[7] - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn embed_rejects_bad_targets() {
        let x = pauli_x();
        assert!(embed(&x, &[2], 2).is_err());
        assert!(embed(&cnot(), &[0, 0], 2).is_err());
        assert!(embed(&x, &[0, 1], 2).is_err());
    }
}
