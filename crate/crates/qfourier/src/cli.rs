//! Command-line front end: parse circuit files, run evaluations, gradients,
//! reconstructions, and training, and emit machine-readable JSON reports.
//!
//! Exit codes: 0 on success, 1 on input errors (malformed files, unknown
//! gates, dimension mismatches, bad flags), 2 on numerical failures
//! (incommensurable spectra, persistently ill-conditioned node draws).

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

use crate::circuit::{
    gates, CircuitElement, CircuitError, Observable, ParameterizedCircuit, PauliTerm, QuantumState,
};
use crate::fourier::{
    reconstruct_equidistant, reconstruct_generic, reconstruct_random, FourierError, Reconstruction,
};
use crate::linalg::{eigendecompose, ComplexMatrix, LinalgError};
use crate::optimizer::{
    coordinate_descent, ReconstructionMethod, StopReason, TrainReport, TrainerConfig,
};
use crate::sampler::{Sampler, ShotConfig};
use crate::spectrum::{
    circuit_frequency_sets, FrequencySet, SpectrumError, DEFAULT_MAX_DENOMINATOR, DEFAULT_TOL,
};

/// Parse `argv`, run the requested subcommand, and write the JSON report to
/// `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap handles --help/--version itself; usage errors exit 1
            let is_help = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if is_help { 0 } else { 1 };
        }
    };
    match dispatch(cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout();
            let _ = writeln!(stdout, "{}", report);
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Numerical(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Numerical(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }

    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<CircuitError> for CliError {
    fn from(err: CircuitError) -> Self {
        match &err {
            CircuitError::Linalg(inner) => inner.clone().into(),
            _ => CliError::Input(err.to_string()),
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(err: LinalgError) -> Self {
        match err {
            LinalgError::NotHermitian { .. } => CliError::Input(err.to_string()),
            LinalgError::NoConvergence { .. } | LinalgError::Singular { .. } => {
                CliError::Numerical(err.to_string())
            }
        }
    }
}

impl From<SpectrumError> for CliError {
    fn from(err: SpectrumError) -> Self {
        match err {
            SpectrumError::NotCommensurable { .. } => CliError::Numerical(err.to_string()),
            _ => CliError::Input(err.to_string()),
        }
    }
}

impl From<FourierError> for CliError {
    fn from(err: FourierError) -> Self {
        match &err {
            FourierError::PersistentIllConditioning { .. } => CliError::Numerical(err.to_string()),
            FourierError::Linalg(inner) => inner.clone().into(),
            _ => CliError::Input(err.to_string()),
        }
    }
}

impl From<crate::optimizer::TrainError> for CliError {
    fn from(err: crate::optimizer::TrainError) -> Self {
        match err {
            crate::optimizer::TrainError::Circuit(e) => e.into(),
            crate::optimizer::TrainError::Fourier(e) => e.into(),
            crate::optimizer::TrainError::WrongFrequencyCount { .. } => {
                CliError::Input(err.to_string())
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qfourier",
    about = "Evaluate, differentiate, reconstruct, and train parameterized quantum circuits",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the expectation value at a parameter vector
    Eval(EvalArgs),
    /// Report the frequency spectrum of each parameter
    Spectrum(SpectrumArgs),
    /// Reconstruct the Fourier expansion along one parameter axis
    Fourier(FourierArgs),
    /// Compute the gradient at a parameter vector
    Grad(GradArgs),
    /// Train by coordinate descent with exact line minima
    Train(TrainArgs),
}

#[derive(Args)]
struct CircuitArg {
    /// Circuit description file (JSON)
    #[arg(long)]
    circuit: PathBuf,
}

#[derive(Args)]
struct ShotArgs {
    /// Estimate expectations from this many shots instead of exactly
    #[arg(long)]
    shots: Option<u64>,
    /// RNG seed for shot sampling and random node draws
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    circuit: CircuitArg,
    /// Comma-separated parameter values
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Vec<f64>,
    #[command(flatten)]
    shots: ShotArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    circuit: CircuitArg,
    /// Restrict the report to one 1-based parameter
    #[arg(long)]
    param: Option<usize>,
    /// Relative commensurability tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Denominator bound of the rationalization search
    #[arg(long = "max-den", default_value_t = DEFAULT_MAX_DENOMINATOR)]
    max_denominator: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FourierMethod {
    Equidistant,
    Random,
    Generic,
}

#[derive(Args)]
struct FourierArgs {
    #[command(flatten)]
    circuit: CircuitArg,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Vec<f64>,
    /// 1-based parameter axis to reconstruct along
    #[arg(long)]
    param: usize,
    #[arg(long, value_enum, default_value_t = FourierMethod::Equidistant)]
    method: FourierMethod,
    /// Integer node offset `a` for equidistant and generic nodes
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    offset: i64,
    #[command(flatten)]
    shots: ShotArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GradMethod {
    Fourier,
    Shift2,
    Shift4,
}

#[derive(Args)]
struct GradArgs {
    #[command(flatten)]
    circuit: CircuitArg,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Vec<f64>,
    #[arg(long, value_enum, default_value_t = GradMethod::Fourier)]
    method: GradMethod,
    #[command(flatten)]
    shots: ShotArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TrainMethod {
    Equidistant,
    Random,
}

#[derive(Args)]
struct TrainArgs {
    #[command(flatten)]
    circuit: CircuitArg,
    /// Comma-separated starting parameters
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta0: Vec<f64>,
    #[arg(long = "max-sweeps", default_value_t = 100)]
    max_sweeps: usize,
    /// Stop once a full sweep improves the energy by less than this
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = TrainMethod::Equidistant)]
    method: TrainMethod,
    /// Serve the known current value as the t = 0 sample when possible
    #[arg(long, default_value_t = false)]
    reuse: bool,
    #[command(flatten)]
    shots: ShotArgs,
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Eval(args) => eval_command(args),
        Command::Spectrum(args) => spectrum_command(args),
        Command::Fourier(args) => fourier_command(args),
        Command::Grad(args) => grad_command(args),
        Command::Train(args) => train_command(args),
    }
}

// ---------------------------------------------------------------------------
// circuit file schema

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitFile {
    version: u32,
    qubits: usize,
    state: StateSpec,
    observable: OperatorSpec,
    elements: Vec<ElementSpec>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum StateSpec {
    Basis(String),
    Amplitudes(Vec<[f64; 2]>),
    Density(Vec<Vec<[f64; 2]>>),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum OperatorSpec {
    PauliSum(Vec<PauliTermSpec>),
    Matrix(Vec<Vec<[f64; 2]>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PauliTermSpec {
    coeff: f64,
    word: String,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum ElementSpec {
    Fixed(FixedSpec),
    Param(ParamSpec),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixedSpec {
    #[serde(default)]
    gate: Option<String>,
    #[serde(default)]
    matrix: Option<Vec<Vec<[f64; 2]>>>,
    targets: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamSpec {
    index: usize,
    generator: OperatorSpec,
    targets: Vec<usize>,
}

struct LoadedCircuit {
    circuit: ParameterizedCircuit,
    state: QuantumState,
    observable: Observable,
}

fn parse_matrix(rows: &[Vec<[f64; 2]>], what: &str) -> Result<ComplexMatrix, CliError> {
    let dim = rows.len();
    if dim == 0 {
        return Err(CliError::input(format!("{what}: matrix is empty")));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(CliError::input(format!(
                "{what}: row {i} has {} entries, expected {dim}",
                row.len()
            )));
        }
    }
    Ok(ComplexMatrix::from_fn(dim, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

/// Expand an operator spec on `targets` into a dense matrix on the full
/// register.
fn parse_operator(
    spec: &OperatorSpec,
    targets: &[usize],
    qubits: usize,
    what: &str,
) -> Result<ComplexMatrix, CliError> {
    let local = match spec {
        OperatorSpec::Matrix(rows) => parse_matrix(rows, what)?,
        OperatorSpec::PauliSum(terms) => {
            if terms.is_empty() {
                return Err(CliError::input(format!("{what}: empty pauli sum")));
            }
            let mut acc: Option<ComplexMatrix> = None;
            for term in terms {
                if term.word.len() != targets.len() {
                    return Err(CliError::input(format!(
                        "{what}: word `{}` length {} does not match {} targets",
                        term.word,
                        term.word.len(),
                        targets.len()
                    )));
                }
                let parsed = PauliTerm::from_word(term.coeff, &term.word)
                    .map_err(|e| CliError::input(format!("{what}: {e}")))?;
                let mut dense = parsed.factors[0].matrix();
                for factor in &parsed.factors[1..] {
                    dense = dense.kron(&factor.matrix());
                }
                let dense = dense.scale(Complex64::new(parsed.coefficient, 0.0));
                acc = Some(match acc {
                    Some(m) => m.add(&dense),
                    None => dense,
                });
            }
            acc.unwrap()
        }
    };
    if targets.len() == qubits && targets.iter().enumerate().all(|(i, &t)| i == t) {
        return Ok(local);
    }
    gates::embed(&local, targets, qubits).map_err(|e| CliError::input(format!("{what}: {e}")))
}

fn load_circuit(path: &std::path::Path) -> Result<LoadedCircuit, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let file: CircuitFile = serde_json::from_str(&text).map_err(|e| {
        CliError::input(format!(
            "{}: parse error at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    if file.version != 1 {
        return Err(CliError::input(format!(
            "unsupported circuit file version {}",
            file.version
        )));
    }
    let qubits = file.qubits;
    if qubits == 0 {
        return Err(CliError::input("qubits must be at least 1"));
    }
    let dim = 1usize << qubits;

    let state = match &file.state {
        StateSpec::Basis(bits) => {
            if bits.len() != qubits {
                return Err(CliError::input(format!(
                    "state: basis string `{bits}` must have {qubits} characters"
                )));
            }
            QuantumState::basis(bits)?
        }
        StateSpec::Amplitudes(amps) => {
            if amps.len() != dim {
                return Err(CliError::input(format!(
                    "state: {} amplitudes given, expected {dim}",
                    amps.len()
                )));
            }
            QuantumState::pure(
                amps.iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect(),
            )?
        }
        StateSpec::Density(rows) => {
            let matrix = parse_matrix(rows, "state")?;
            if matrix.dim() != dim {
                return Err(CliError::input(format!(
                    "state: density is {}x{}, expected {dim}x{dim}",
                    matrix.dim(),
                    matrix.dim()
                )));
            }
            QuantumState::density(matrix)?
        }
    };

    let all_targets: Vec<usize> = (0..qubits).collect();
    let observable = match &file.observable {
        OperatorSpec::PauliSum(terms) => {
            let mut parsed = Vec::with_capacity(terms.len());
            for term in terms {
                if term.word.len() != qubits {
                    return Err(CliError::input(format!(
                        "observable: word `{}` must have {qubits} factors",
                        term.word
                    )));
                }
                parsed.push(PauliTerm::from_word(term.coeff, &term.word)?);
            }
            Observable::from_pauli_sum(parsed)?
        }
        OperatorSpec::Matrix(_) => {
            let dense = parse_operator(&file.observable, &all_targets, qubits, "observable")?;
            Observable::from_matrix(dense)?
        }
    };

    let mut params = 0usize;
    let mut elements = Vec::with_capacity(file.elements.len());
    for (position, spec) in file.elements.iter().enumerate() {
        match spec {
            ElementSpec::Fixed(fixed) => {
                let what = format!("element {position}");
                let matrix = match (&fixed.gate, &fixed.matrix) {
                    (Some(name), None) => {
                        let (gate, arity) = gates::by_name(name).ok_or_else(|| {
                            CliError::input(format!("{what}: unknown gate `{name}`"))
                        })?;
                        if fixed.targets.len() != arity {
                            return Err(CliError::input(format!(
                                "{what}: gate {name} needs {arity} targets, got {}",
                                fixed.targets.len()
                            )));
                        }
                        gates::embed(&gate, &fixed.targets, qubits)
                            .map_err(|e| CliError::input(format!("{what}: {e}")))?
                    }
                    (None, Some(rows)) => {
                        let gate = parse_matrix(rows, &what)?;
                        gates::embed(&gate, &fixed.targets, qubits)
                            .map_err(|e| CliError::input(format!("{what}: {e}")))?
                    }
                    _ => {
                        return Err(CliError::input(format!(
                            "{what}: fixed element needs exactly one of `gate` or `matrix`"
                        )))
                    }
                };
                elements.push(CircuitElement::Fixed(matrix));
            }
            ElementSpec::Param(param) => {
                let what = format!("element {position} (parameter {})", param.index);
                if param.index == 0 {
                    return Err(CliError::input(format!(
                        "{what}: parameter indices are 1-based"
                    )));
                }
                params = params.max(param.index);
                let dense = parse_operator(&param.generator, &param.targets, qubits, &what)?;
                let generator =
                    eigendecompose(&dense).map_err(|e| CliError::input(format!("{what}: {e}")))?;
                elements.push(CircuitElement::Parameterized {
                    generator,
                    param_index: param.index,
                });
            }
        }
    }
    let circuit = ParameterizedCircuit::new(qubits, params, elements)?;
    Ok(LoadedCircuit {
        circuit,
        state,
        observable,
    })
}

fn check_theta(theta: &[f64], circuit: &ParameterizedCircuit) -> Result<(), CliError> {
    if theta.len() != circuit.param_count() {
        return Err(CliError::input(format!(
            "--theta has {} values, the circuit has {} parameters",
            theta.len(),
            circuit.param_count()
        )));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

// ---------------------------------------------------------------------------
// subcommands

#[derive(Serialize)]
struct EvalReport {
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    stderr: Option<f64>,
}

fn eval_command(args: EvalArgs) -> Result<String, CliError> {
    let loaded = load_circuit(&args.circuit.circuit)?;
    check_theta(&args.theta, &loaded.circuit)?;
    let report = match args.shots.shots {
        Some(shots) => {
            let estimate = crate::sampler::sample_expectation(
                &loaded.circuit,
                &args.theta,
                &loaded.state,
                &loaded.observable,
                ShotConfig::new(shots.max(1), args.shots.seed),
            )?;
            EvalReport {
                value: estimate.value,
                stderr: Some(estimate.std_error),
            }
        }
        None => EvalReport {
            value: loaded
                .circuit
                .expectation(&args.theta, &loaded.state, &loaded.observable)?,
            stderr: None,
        },
    };
    Ok(to_json(&report))
}

#[derive(Serialize)]
struct ParameterSpectrum {
    param: usize,
    alpha: f64,
    levels: Vec<i64>,
    #[serde(rename = "D")]
    differences: Vec<i64>,
    evaluations_needed: usize,
}

#[derive(Serialize)]
struct SpectrumReport {
    parameters: Vec<ParameterSpectrum>,
}

fn spectrum_report_entry(param: usize, fs: &FrequencySet) -> ParameterSpectrum {
    ParameterSpectrum {
        param,
        alpha: fs.alpha(),
        levels: fs.levels().to_vec(),
        differences: fs.differences().to_vec(),
        evaluations_needed: fs.size(),
    }
}

fn spectrum_command(args: SpectrumArgs) -> Result<String, CliError> {
    let loaded = load_circuit(&args.circuit.circuit)?;
    let freqs = circuit_frequency_sets(&loaded.circuit, args.tol, args.max_denominator)?;
    let parameters = match args.param {
        Some(param) => {
            if param == 0 || param > freqs.len() {
                return Err(CliError::input(format!(
                    "--param {param} out of range 1..={}",
                    freqs.len()
                )));
            }
            vec![spectrum_report_entry(param, &freqs[param - 1])]
        }
        None => freqs
            .iter()
            .enumerate()
            .map(|(i, fs)| spectrum_report_entry(i + 1, fs))
            .collect(),
    };
    Ok(to_json(&SpectrumReport { parameters }))
}

#[derive(Serialize)]
struct CoefficientEntry {
    k: i64,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct FourierReport {
    param: usize,
    alpha: f64,
    coefficients: Vec<CoefficientEntry>,
    samples_used: usize,
    condition: f64,
    evaluations: usize,
    attempts: u32,
    aliased_fallback: bool,
}

/// Normalized evaluator of the restriction along `param`, counting circuit
/// evaluations. The sampler, when present, replaces exact evaluation.
fn normalized_evaluator<'a>(
    loaded: &'a LoadedCircuit,
    theta: &'a [f64],
    param: usize,
    alpha: f64,
    sampler: &'a mut Option<Sampler>,
    evaluations: &'a mut usize,
) -> impl FnMut(f64) -> f64 + 'a {
    move |s: f64| {
        *evaluations += 1;
        let mut shifted = theta.to_vec();
        shifted[param - 1] += s / alpha;
        match sampler {
            Some(sampler) => {
                sampler
                    .expectation(&loaded.circuit, &shifted, &loaded.state, &loaded.observable)
                    .expect("sampled evaluation failed on validated inputs")
                    .value
            }
            None => loaded
                .circuit
                .expectation(&shifted, &loaded.state, &loaded.observable)
                .expect("exact evaluation failed on validated inputs"),
        }
    }
}

fn make_sampler(shots: &ShotArgs) -> Result<Option<Sampler>, CliError> {
    Ok(shots
        .shots
        .map(|n| Sampler::new(ShotConfig::new(n.max(1), shots.seed))))
}

fn fourier_command(args: FourierArgs) -> Result<String, CliError> {
    let loaded = load_circuit(&args.circuit.circuit)?;
    check_theta(&args.theta, &loaded.circuit)?;
    let param = args.param;
    if param == 0 || param > loaded.circuit.param_count() {
        return Err(CliError::input(format!(
            "--param {param} out of range 1..={}",
            loaded.circuit.param_count()
        )));
    }
    if args.shots.shots.is_some() {
        loaded.observable.operator()?;
    } else {
        loaded
            .circuit
            .check_inputs(&args.theta, &loaded.state, &loaded.observable)?;
    }
    let fs = crate::spectrum::parameter_frequency_set(
        &loaded.circuit,
        param,
        DEFAULT_TOL,
        DEFAULT_MAX_DENOMINATOR,
    )?;
    let alpha = fs.alpha();
    let mut sampler = make_sampler(&args.shots)?;
    let mut evaluations = 0usize;
    let evaluator = normalized_evaluator(
        &loaded,
        &args.theta,
        param,
        alpha,
        &mut sampler,
        &mut evaluations,
    );
    let reconstruction: Reconstruction = match args.method {
        FourierMethod::Equidistant => reconstruct_equidistant(evaluator, &fs, args.offset)?,
        FourierMethod::Random => reconstruct_random(evaluator, &fs, args.shots.seed)?,
        FourierMethod::Generic => {
            let n = fs.max_freq();
            let count = (2 * n + 1) as usize;
            let points: Vec<f64> = (0..count)
                .map(|j| std::f64::consts::TAU * (args.offset + j as i64) as f64 / count as f64)
                .collect();
            let rec = reconstruct_generic(evaluator, n, &points)?;
            Reconstruction {
                poly: rec.poly.with_alpha(alpha),
                ..rec
            }
        }
    };
    let coefficients = reconstruction
        .poly
        .frequencies()
        .iter()
        .zip(reconstruction.poly.coefficients())
        .map(|(&k, c)| CoefficientEntry {
            k,
            re: c.re,
            im: c.im,
        })
        .collect();
    Ok(to_json(&FourierReport {
        param,
        alpha,
        coefficients,
        samples_used: reconstruction.samples_used,
        condition: reconstruction.condition,
        evaluations,
        attempts: reconstruction.attempts,
        aliased_fallback: reconstruction.aliased_fallback,
    }))
}

#[derive(Serialize)]
struct GradReport {
    gradient: Vec<f64>,
    evaluations: usize,
}

fn grad_command(args: GradArgs) -> Result<String, CliError> {
    let loaded = load_circuit(&args.circuit.circuit)?;
    check_theta(&args.theta, &loaded.circuit)?;
    if args.shots.shots.is_some() {
        loaded.observable.operator()?;
    } else {
        loaded
            .circuit
            .check_inputs(&args.theta, &loaded.state, &loaded.observable)?;
    }
    let freqs = circuit_frequency_sets(&loaded.circuit, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR)?;

    // the special rules demand their exact canonical support
    for (i, fs) in freqs.iter().enumerate() {
        let ok = match args.method {
            GradMethod::Fourier => true,
            GradMethod::Shift2 => fs.is_constant() || fs.differences() == [-1, 0, 1],
            GradMethod::Shift4 => fs.is_constant() || fs.differences() == [-2, -1, 0, 1, 2],
        };
        if !ok {
            let rule = match args.method {
                GradMethod::Shift2 => "shift2 needs frequencies {0, +-1}",
                GradMethod::Shift4 => "shift4 needs frequencies {0, +-1, +-2}",
                GradMethod::Fourier => unreachable!(),
            };
            return Err(CliError::input(format!(
                "parameter {} has frequencies {:?}: {rule}; use --method fourier",
                i + 1,
                fs.differences()
            )));
        }
    }

    let mut sampler = make_sampler(&args.shots)?;
    let mut gradient = Vec::with_capacity(freqs.len());
    let mut total_evaluations = 0usize;
    for (i, fs) in freqs.iter().enumerate() {
        let param = i + 1;
        if fs.is_constant() {
            gradient.push(0.0);
            continue;
        }
        let alpha = fs.alpha();
        let mut evaluations = 0usize;
        let evaluator = normalized_evaluator(
            &loaded,
            &args.theta,
            param,
            alpha,
            &mut sampler,
            &mut evaluations,
        );
        // f'(theta_j) = alpha g'(alpha theta_j) evaluated at offset 0 of g
        let derivative = match args.method {
            GradMethod::Fourier => {
                let rec = reconstruct_equidistant(evaluator, fs, 0)?;
                alpha * rec.poly.derivative(0.0)
            }
            GradMethod::Shift2 => alpha * crate::shift_rules::two_point_derivative(evaluator, 0.0),
            GradMethod::Shift4 => alpha * crate::shift_rules::four_point_rule(evaluator).derivative,
        };
        gradient.push(derivative);
        total_evaluations += evaluations;
    }
    Ok(to_json(&GradReport {
        gradient,
        evaluations: total_evaluations,
    }))
}

#[derive(Serialize)]
struct TrainStepReport {
    sweep: usize,
    param: usize,
    samples_used: usize,
    evaluations: usize,
    alpha: f64,
    coefficients: Vec<CoefficientEntry>,
    normalized_minimum: f64,
    step: f64,
    energy: f64,
}

#[derive(Serialize)]
struct TrainReportJson {
    initial_energy: f64,
    final_theta: Vec<f64>,
    final_energy: f64,
    total_evaluations: usize,
    sweeps: usize,
    stop: &'static str,
    skipped_parameters: Vec<usize>,
    steps: Vec<TrainStepReport>,
}

fn train_report_json(report: &TrainReport) -> TrainReportJson {
    TrainReportJson {
        initial_energy: report.initial_energy,
        final_theta: report.final_theta.clone(),
        final_energy: report.final_energy,
        total_evaluations: report.total_evaluations,
        sweeps: report.sweeps,
        stop: match report.stop {
            StopReason::Converged => "converged",
            StopReason::MaxSweepsReached => "max_sweeps",
        },
        skipped_parameters: report.skipped.clone(),
        steps: report
            .steps
            .iter()
            .map(|s| TrainStepReport {
                sweep: s.sweep,
                param: s.param,
                samples_used: s.samples_used,
                evaluations: s.evaluations,
                alpha: s.poly.alpha(),
                coefficients: s
                    .poly
                    .frequencies()
                    .iter()
                    .zip(s.poly.coefficients())
                    .map(|(&k, c)| CoefficientEntry {
                        k,
                        re: c.re,
                        im: c.im,
                    })
                    .collect(),
                normalized_minimum: s.normalized_minimum,
                step: s.step,
                energy: s.energy,
            })
            .collect(),
    }
}

fn train_command(args: TrainArgs) -> Result<String, CliError> {
    let loaded = load_circuit(&args.circuit.circuit)?;
    check_theta(&args.theta0, &loaded.circuit)?;
    if args.max_sweeps == 0 {
        return Err(CliError::input("--max-sweeps must be at least 1"));
    }
    if !args.tol.is_finite() || args.tol <= 0.0 {
        return Err(CliError::input("--tol must be positive"));
    }
    let freqs = circuit_frequency_sets(&loaded.circuit, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR)?;
    let config = TrainerConfig {
        max_sweeps: args.max_sweeps,
        improvement_tol: args.tol,
        method: match args.method {
            TrainMethod::Equidistant => ReconstructionMethod::Equidistant { offset: 0 },
            TrainMethod::Random => ReconstructionMethod::Random {
                seed: args.shots.seed,
            },
        },
        reuse_current_value: args.reuse,
        shots: args
            .shots
            .shots
            .map(|n| ShotConfig::new(n.max(1), args.shots.seed)),
    };
    let report = coordinate_descent(
        &loaded.circuit,
        &loaded.state,
        &loaded.observable,
        &args.theta0,
        &freqs,
        &config,
    )?;
    Ok(to_json(&train_report_json(&report)))
}
