//! Circuit model and exact expectation evaluation on a dense simulator.
//!
//! A circuit is an ordered list of fixed unitaries and parameterized
//! exponentials `exp(-i theta_j H_j)` applied left to right in time. The
//! expectation of an observable `M` in a state `rho` is
//! `tr(M U(theta) rho U(theta)^dagger)`, evaluated exactly up to round-off.

use std::sync::OnceLock;

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{eigendecompose, ComplexMatrix, HermitianOperator, LinalgError};

pub mod gates;

/// Default cap on the register size; override with
/// [`ParameterizedCircuit::with_qubit_cap`].
pub const DEFAULT_MAX_QUBITS: usize = 10;

const UNITARITY_TOL: f64 = 1e-10;
const STATE_TOL: f64 = 1e-10;
const IMAGINARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Error)]
pub enum CircuitError {
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("parameter index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("parameter {index} does not appear in any circuit element")]
    UnusedParameter { index: usize },
    #[error("{qubits} qubits exceeds the cap of {max}")]
    TooManyQubits { qubits: usize, max: usize },
    #[error("fixed element {position} is not unitary (defect {defect:.3e})")]
    NotUnitary { position: usize, defect: f64 },
    #[error("state vector norm {norm} is not 1")]
    NotNormalized { norm: f64 },
    #[error("density matrix trace {trace} is not 1")]
    BadTrace { trace: f64 },
    #[error("density matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("expectation has imaginary residual {residual:.3e}; inputs are not hermitian")]
    ImaginaryResidual { residual: f64 },
    #[error("pauli word `{word}` is invalid: {reason}")]
    BadPauliWord { word: String, reason: String },
    #[error("empty pauli sum")]
    EmptyPauliSum,
    #[error("coefficient of pauli term {index} is not finite")]
    BadCoefficient { index: usize },
    #[error("observable dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },
    #[error("gate targets {targets:?} are invalid for {qubits} qubits: {reason}")]
    BadTargets {
        targets: Vec<usize>,
        qubits: usize,
        reason: String,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Single-qubit Pauli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> ComplexMatrix {
        let c = Complex64::new;
        let rows = match self {
            Pauli::I => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
            Pauli::X => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
            Pauli::Y => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
            Pauli::Z => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        };
        ComplexMatrix::from_rows(&[rows[0].to_vec(), rows[1].to_vec()])
    }

    pub fn from_char(ch: char) -> Option<Self> {
        match ch.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// One weighted Pauli word. Factor `k` acts on qubit `k`, with qubit 0 the
/// leftmost (most significant) position of the register.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub coefficient: f64,
    pub factors: Vec<Pauli>,
}

impl PauliTerm {
    /// Parse a word such as `"XZI"` into factors.
    pub fn from_word(coefficient: f64, word: &str) -> Result<Self, CircuitError> {
        let factors = word
            .chars()
            .map(|ch| {
                Pauli::from_char(ch).ok_or_else(|| CircuitError::BadPauliWord {
                    word: word.to_string(),
                    reason: format!("unknown factor `{ch}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if factors.is_empty() {
            return Err(CircuitError::BadPauliWord {
                word: word.to_string(),
                reason: "word is empty".to_string(),
            });
        }
        Ok(Self {
            coefficient,
            factors,
        })
    }

    fn dense(&self) -> ComplexMatrix {
        let mut m = self.factors[0].matrix();
        for factor in &self.factors[1..] {
            m = m.kron(&factor.matrix());
        }
        m.scale(Complex64::new(self.coefficient, 0.0))
    }
}

enum ObservableKind {
    Matrix(HermitianOperator),
    PauliSum(Vec<PauliTerm>),
}

/// Hermitian observable, either a dense matrix or a Pauli sum expanded on
/// demand.
pub struct Observable {
    qubits: usize,
    kind: ObservableKind,
    dense: OnceLock<ComplexMatrix>,
    operator: OnceLock<Result<HermitianOperator, LinalgError>>,
}

impl Observable {
    /// Wrap a dense Hermitian matrix; the dimension must be a power of two.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self, CircuitError> {
        let dim = matrix.dim();
        let qubits = qubits_for_dim(dim).ok_or(CircuitError::NotPowerOfTwo { dim })?;
        let operator = eigendecompose(&matrix)?;
        Ok(Self {
            qubits,
            kind: ObservableKind::Matrix(operator),
            dense: OnceLock::new(),
            operator: OnceLock::new(),
        })
    }

    pub fn from_pauli_sum(terms: Vec<PauliTerm>) -> Result<Self, CircuitError> {
        let Some(first) = terms.first() else {
            return Err(CircuitError::EmptyPauliSum);
        };
        let qubits = first.factors.len();
        for (index, term) in terms.iter().enumerate() {
            if term.factors.len() != qubits {
                return Err(CircuitError::DimensionMismatch {
                    what: "pauli word length",
                    expected: qubits,
                    got: term.factors.len(),
                });
            }
            if !term.coefficient.is_finite() {
                return Err(CircuitError::BadCoefficient { index });
            }
        }
        Ok(Self {
            qubits,
            kind: ObservableKind::PauliSum(terms),
            dense: OnceLock::new(),
            operator: OnceLock::new(),
        })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.qubits
    }

    /// Dense matrix form, expanded once and cached.
    pub fn dense(&self) -> &ComplexMatrix {
        self.dense.get_or_init(|| match &self.kind {
            ObservableKind::Matrix(op) => op.matrix().clone(),
            ObservableKind::PauliSum(terms) => {
                let mut acc = ComplexMatrix::zeros(1 << self.qubits);
                for term in terms {
                    acc = acc.add(&term.dense());
                }
                acc
            }
        })
    }

    /// Eigendecomposed form (used for projective sampling), computed once.
    pub fn operator(&self) -> Result<&HermitianOperator, CircuitError> {
        if let ObservableKind::Matrix(op) = &self.kind {
            return Ok(op);
        }
        self.operator
            .get_or_init(|| eigendecompose(self.dense()))
            .as_ref()
            .map_err(|e| CircuitError::Linalg(e.clone()))
    }
}

impl std::fmt::Debug for Observable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            ObservableKind::Matrix(_) => write!(f, "Observable::Matrix({} qubits)", self.qubits),
            ObservableKind::PauliSum(terms) => {
                write!(f, "Observable::PauliSum({} terms)", terms.len())
            }
        }
    }
}

#[derive(Debug, Clone)]
enum StateRepr {
    Pure(Vec<Complex64>),
    Density(ComplexMatrix),
}

/// Initial quantum state, either a normalized amplitude vector or a density
/// matrix (Hermitian, positive semidefinite, unit trace).
#[derive(Debug, Clone)]
pub struct QuantumState {
    repr: StateRepr,
}

impl QuantumState {
    pub fn pure(amplitudes: Vec<Complex64>) -> Result<Self, CircuitError> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(CircuitError::NotNormalized { norm });
        }
        Ok(Self {
            repr: StateRepr::Pure(amplitudes),
        })
    }

    pub fn density(matrix: ComplexMatrix) -> Result<Self, CircuitError> {
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(CircuitError::BadTrace { trace: trace.re });
        }
        let op = eigendecompose(&matrix)?;
        let min_eigenvalue = op.eigenvalues()[0];
        if min_eigenvalue < -STATE_TOL {
            return Err(CircuitError::NotPositive { min_eigenvalue });
        }
        Ok(Self {
            repr: StateRepr::Density(matrix),
        })
    }

    /// Computational basis state from a bitstring like `"010"`, one character
    /// per qubit, qubit 0 leftmost.
    pub fn basis(bits: &str) -> Result<Self, CircuitError> {
        let qubits = bits.len();
        if qubits == 0 {
            return Err(CircuitError::BadPauliWord {
                word: bits.to_string(),
                reason: "basis string is empty".to_string(),
            });
        }
        let mut index = 0usize;
        for ch in bits.chars() {
            index <<= 1;
            match ch {
                '0' => {}
                '1' => index |= 1,
                _ => {
                    return Err(CircuitError::BadPauliWord {
                        word: bits.to_string(),
                        reason: format!("basis character `{ch}` is not 0 or 1"),
                    })
                }
            }
        }
        let mut amplitudes = vec![Complex64::ZERO; 1 << qubits];
        amplitudes[index] = Complex64::ONE;
        Ok(Self {
            repr: StateRepr::Pure(amplitudes),
        })
    }

    /// All-zeros basis state on `qubits` qubits.
    pub fn zero(qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::ZERO; 1 << qubits];
        amplitudes[0] = Complex64::ONE;
        Self {
            repr: StateRepr::Pure(amplitudes),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            StateRepr::Pure(v) => v.len(),
            StateRepr::Density(m) => m.dim(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self.repr, StateRepr::Pure(_))
    }

    /// Density-matrix form (outer product for pure states).
    pub fn to_density(&self) -> ComplexMatrix {
        match &self.repr {
            StateRepr::Pure(v) => ComplexMatrix::from_fn(v.len(), |i, j| v[i] * v[j].conj()),
            StateRepr::Density(m) => m.clone(),
        }
    }

    pub(crate) fn pure_amplitudes(&self) -> Option<&[Complex64]> {
        match &self.repr {
            StateRepr::Pure(v) => Some(v),
            StateRepr::Density(_) => None,
        }
    }
}

/// One circuit element: a fixed unitary or a parameterized evolution
/// `exp(-i theta_j H_j)` with a 1-based parameter index.
#[derive(Debug, Clone)]
pub enum CircuitElement {
    Fixed(ComplexMatrix),
    Parameterized {
        generator: HermitianOperator,
        param_index: usize,
    },
}

/// Parameterized circuit on an n-qubit register. Elements are applied in
/// list order, element 0 first.
///
/// A parameter index may appear in several elements; the frequency support of
/// the restricted expectation is then the Minkowski sum of the individual
/// difference sets, which the spectrum analysis reports as a safe superset.
#[derive(Debug, Clone)]
pub struct ParameterizedCircuit {
    qubits: usize,
    params: usize,
    elements: Vec<CircuitElement>,
}

impl ParameterizedCircuit {
    pub fn new(
        qubits: usize,
        params: usize,
        elements: Vec<CircuitElement>,
    ) -> Result<Self, CircuitError> {
        Self::with_qubit_cap(qubits, params, elements, DEFAULT_MAX_QUBITS)
    }

    /// Like [`ParameterizedCircuit::new`] with an explicit register cap.
    pub fn with_qubit_cap(
        qubits: usize,
        params: usize,
        elements: Vec<CircuitElement>,
        max_qubits: usize,
    ) -> Result<Self, CircuitError> {
        if qubits == 0 || qubits > max_qubits {
            return Err(CircuitError::TooManyQubits {
                qubits,
                max: max_qubits,
            });
        }
        let dim = 1usize << qubits;
        let mut seen = vec![false; params];
        for (position, element) in elements.iter().enumerate() {
            match element {
                CircuitElement::Fixed(u) => {
                    if u.dim() != dim {
                        return Err(CircuitError::DimensionMismatch {
                            what: "fixed element",
                            expected: dim,
                            got: u.dim(),
                        });
                    }
                    let defect = u.unitarity_defect();
                    if defect > UNITARITY_TOL {
                        return Err(CircuitError::NotUnitary { position, defect });
                    }
                }
                CircuitElement::Parameterized {
                    generator,
                    param_index,
                } => {
                    if generator.dim() != dim {
                        return Err(CircuitError::DimensionMismatch {
                            what: "generator",
                            expected: dim,
                            got: generator.dim(),
                        });
                    }
                    if *param_index == 0 || *param_index > params {
                        return Err(CircuitError::IndexOutOfRange {
                            index: *param_index,
                            count: params,
                        });
                    }
                    seen[*param_index - 1] = true;
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(CircuitError::UnusedParameter { index: missing + 1 });
        }
        Ok(Self {
            qubits,
            params,
            elements,
        })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.qubits
    }

    pub fn param_count(&self) -> usize {
        self.params
    }

    pub fn elements(&self) -> &[CircuitElement] {
        &self.elements
    }

    /// Generators attached to a 1-based parameter index, in circuit order.
    pub fn generators_for(&self, param: usize) -> Vec<&HermitianOperator> {
        self.elements
            .iter()
            .filter_map(|e| match e {
                CircuitElement::Parameterized {
                    generator,
                    param_index,
                } if *param_index == param => Some(generator),
                _ => None,
            })
            .collect()
    }

    pub(crate) fn check_inputs(
        &self,
        theta: &[f64],
        state: &QuantumState,
        observable: &Observable,
    ) -> Result<(), CircuitError> {
        if theta.len() != self.params {
            return Err(CircuitError::DimensionMismatch {
                what: "parameter vector",
                expected: self.params,
                got: theta.len(),
            });
        }
        if state.dim() != self.dim() {
            return Err(CircuitError::DimensionMismatch {
                what: "state",
                expected: self.dim(),
                got: state.dim(),
            });
        }
        if observable.dim() != self.dim() {
            return Err(CircuitError::DimensionMismatch {
                what: "observable",
                expected: self.dim(),
                got: observable.dim(),
            });
        }
        Ok(())
    }

    /// Run the circuit on the initial state. Pure states propagate as
    /// vectors, density matrices by conjugation.
    pub fn propagate(
        &self,
        theta: &[f64],
        state: &QuantumState,
    ) -> Result<QuantumState, CircuitError> {
        if theta.len() != self.params {
            return Err(CircuitError::DimensionMismatch {
                what: "parameter vector",
                expected: self.params,
                got: theta.len(),
            });
        }
        if state.dim() != self.dim() {
            return Err(CircuitError::DimensionMismatch {
                what: "state",
                expected: self.dim(),
                got: state.dim(),
            });
        }
        let repr = match &state.repr {
            StateRepr::Pure(psi) => {
                let mut psi = psi.clone();
                for element in &self.elements {
                    psi = match element {
                        CircuitElement::Fixed(u) => u.matvec(&psi),
                        CircuitElement::Parameterized {
                            generator,
                            param_index,
                        } => generator.evolve_state(theta[*param_index - 1], &psi),
                    };
                }
                StateRepr::Pure(psi)
            }
            StateRepr::Density(rho) => {
                let mut rho = rho.clone();
                for element in &self.elements {
                    let u = match element {
                        CircuitElement::Fixed(u) => u.clone(),
                        CircuitElement::Parameterized {
                            generator,
                            param_index,
                        } => generator.evolve(theta[*param_index - 1]),
                    };
                    rho = u.mul(&rho).mul(&u.conjugate_transpose());
                }
                StateRepr::Density(rho)
            }
        };
        Ok(QuantumState { repr })
    }

    /// Exact expectation `tr(M U(theta) rho U(theta)^dagger)`.
    ///
    /// The imaginary part of the trace must vanish to 1e-9; a larger residual
    /// signals non-Hermitian inputs and is reported as an error.
    pub fn expectation(
        &self,
        theta: &[f64],
        state: &QuantumState,
        observable: &Observable,
    ) -> Result<f64, CircuitError> {
        self.check_inputs(theta, state, observable)?;
        let evolved = self.propagate(theta, state)?;
        let m = observable.dense();
        let value = match &evolved.repr {
            StateRepr::Pure(psi) => {
                let mpsi = m.matvec(psi);
                psi.iter()
                    .zip(&mpsi)
                    .map(|(a, b)| a.conj() * b)
                    .sum::<Complex64>()
            }
            StateRepr::Density(rho) => {
                let n = rho.dim();
                let mut acc = Complex64::ZERO;
                for i in 0..n {
                    for j in 0..n {
                        acc += m[(i, j)] * rho[(j, i)];
                    }
                }
                acc
            }
        };
        if value.im.abs() > IMAGINARY_TOL {
            return Err(CircuitError::ImaginaryResidual {
                residual: value.im.abs(),
            });
        }
        Ok(value.re)
    }

    /// Restrict the expectation to a single 1-based parameter axis:
    /// the returned evaluator computes `F(theta + t e_j)`.
    pub fn restrict<'a>(
        &'a self,
        theta: &[f64],
        state: &'a QuantumState,
        observable: &'a Observable,
        param: usize,
    ) -> Result<Restriction<'a>, CircuitError> {
        if param == 0 || param > self.params {
            return Err(CircuitError::IndexOutOfRange {
                index: param,
                count: self.params,
            });
        }
        self.check_inputs(theta, state, observable)?;
        Ok(Restriction {
            circuit: self,
            theta: theta.to_vec(),
            state,
            observable,
            param,
        })
    }
}

/// Univariate restriction `t -> F(theta + t e_j)` of a circuit expectation.
#[derive(Debug, Clone)]
pub struct Restriction<'a> {
    circuit: &'a ParameterizedCircuit,
    theta: Vec<f64>,
    state: &'a QuantumState,
    observable: &'a Observable,
    param: usize,
}

impl Restriction<'_> {
    /// Evaluate the restriction at offset `t` along the parameter axis.
    ///
    /// Inputs were validated when the restriction was built, so failures can
    /// only come from non-Hermitian data sneaking past construction; those
    /// panic rather than returning a result.
    pub fn value(&self, t: f64) -> f64 {
        let mut shifted = self.theta.clone();
        shifted[self.param - 1] += t;
        self.circuit
            .expectation(&shifted, self.state, self.observable)
            .expect("restricted evaluation failed on validated inputs")
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn base_theta(&self) -> &[f64] {
        &self.theta
    }
}

fn qubits_for_dim(dim: usize) -> Option<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return None;
    }
    Some(dim.trailing_zeros() as usize)
}
