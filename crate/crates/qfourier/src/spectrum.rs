//! Canonical integer-level form of a generator's spectrum and the frequency
//! support of restricted expectation functions.
//!
//! A generator with eigenvalues `lambda_j = alpha k_j` (integer `k_j`) drives
//! an expectation whose Fourier spectrum lives on the set of level
//! differences. Canonicalization shifts the smallest eigenvalue to zero —
//! physically free, a global phase — then extracts the common scale `alpha`
//! and divides out the gcd of the differences, which minimizes the number of
//! circuit evaluations the reconstruction needs.

use thiserror::Error;

use crate::circuit::{CircuitElement, ParameterizedCircuit};
use crate::linalg::HermitianOperator;

/// Default relative commensurability tolerance (scaled by the spectral range).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default bound on denominators explored by the rationalization search.
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

#[derive(Debug, Clone, Error)]
pub enum SpectrumError {
    #[error("spectrum is not commensurable within tolerance {tol:.1e} and denominator bound {max_denominator}")]
    NotCommensurable { tol: f64, max_denominator: u64 },
    #[error("rationalize requires a nonconstant value list")]
    ConstantValues,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("max_denominator must be at least 1")]
    BadDenominatorBound,
}

/// Integer frequency picture of a generator: scale `alpha`, levels with the
/// minimum at zero, and the symmetric difference set that supports the
/// restricted expectation function.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencySet {
    alpha: f64,
    levels: Vec<i64>,
    differences: Vec<i64>,
}

impl FrequencySet {
    fn from_levels(alpha: f64, levels: Vec<i64>) -> Self {
        debug_assert!(levels.iter().min() == Some(&0));
        let mut diffs: Vec<i64> = Vec::new();
        for &a in &levels {
            for &b in &levels {
                let d = a - b;
                if !diffs.contains(&d) {
                    diffs.push(d);
                }
            }
        }
        diffs.sort_unstable();
        debug_assert!(diffs.contains(&0));
        debug_assert!(diffs.iter().all(|d| diffs.contains(&-d)));
        debug_assert!(
            diffs.iter().fold(0i64, |g, &d| gcd_i64(g, d)) <= 1,
            "difference set is not gcd-canonical: {diffs:?}"
        );
        Self {
            alpha,
            levels,
            differences: diffs,
        }
    }

    /// Scale with `shifted eigenvalues = alpha * levels`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Ascending integer levels, minimum zero. For a single generator the
    /// levels keep eigenvalue multiplicities.
    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    /// Sorted symmetric difference set.
    pub fn differences(&self) -> &[i64] {
        &self.differences
    }

    /// Largest frequency magnitude in the difference set.
    pub fn max_freq(&self) -> i64 {
        *self.differences.last().unwrap_or(&0)
    }

    /// Number of distinct frequencies, i.e. evaluations needed by the
    /// sparse reconstruction.
    pub fn size(&self) -> usize {
        self.differences.len()
    }

    /// True when the difference set is `{0}`; the restricted expectation is
    /// then constant and training skips the coordinate.
    pub fn is_constant(&self) -> bool {
        self.differences == [0]
    }
}

/// Find a scale `alpha` and integers `k_j` with `values_j ~ alpha * k_j`.
///
/// Each ratio to the largest magnitude value is expanded as a continued
/// fraction; a convergent `p/q` is accepted only when it agrees to
/// `max(tol/q^2, float noise)`, so merely well-approximable irrationals
/// (such as sqrt 2, whose convergents stay ~0.35/q^2 away) are rejected
/// while exact levels with denominators up to `max_denominator` pass.
pub fn rationalize(
    values: &[f64],
    tol: f64,
    max_denominator: u64,
) -> Result<(f64, Vec<i64>), SpectrumError> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(SpectrumError::BadTolerance(tol));
    }
    if max_denominator == 0 {
        return Err(SpectrumError::BadDenominatorBound);
    }
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return Err(SpectrumError::ConstantValues);
    }
    let not_commensurable = || SpectrumError::NotCommensurable {
        tol,
        max_denominator,
    };

    let mut fractions = Vec::with_capacity(values.len());
    let mut lcm: u64 = 1;
    for &v in values {
        let ratio = v / scale;
        let (p, q) = rational_approximation(ratio.abs(), tol, max_denominator)
            .ok_or_else(not_commensurable)?;
        let p = if ratio < 0.0 { -(p as i64) } else { p as i64 };
        fractions.push((p, q));
        lcm = checked_lcm(lcm, q, max_denominator).ok_or_else(not_commensurable)?;
    }

    let integers: Vec<i64> = fractions
        .iter()
        .map(|&(p, q)| p * (lcm / q) as i64)
        .collect();
    let alpha = scale / lcm as f64;
    debug_assert!(values
        .iter()
        .zip(&integers)
        .all(|(&v, &k)| (v - alpha * k as f64).abs() <= tol * scale));
    Ok((alpha, integers))
}

/// Best rational approximation `p/q` of `x >= 0` by continued fractions,
/// accepted only once the convergent is exact up to round-off scale.
fn rational_approximation(x: f64, tol: f64, max_denominator: u64) -> Option<(u64, u64)> {
    debug_assert!(x >= 0.0);
    let noise_floor = 256.0 * f64::EPSILON;
    let (mut p_prev, mut q_prev) = (1u64, 0u64);
    let (mut p, mut q) = (x.floor() as u64, 1u64);
    let mut remainder = x - x.floor();
    loop {
        let err = (x - p as f64 / q as f64).abs();
        if err <= (tol / (q * q) as f64).max(noise_floor) {
            return Some((p, q));
        }
        if remainder <= f64::EPSILON {
            return None;
        }
        let inv = 1.0 / remainder;
        let a = inv.floor();
        remainder = inv - a;
        if a > max_denominator as f64 {
            // the next convergent overshoots the bound; treat the current
            // one as final and let the acceptance test above decide
            return None;
        }
        let a = a as u64;
        let p_next = a.checked_mul(p)?.checked_add(p_prev)?;
        let q_next = a.checked_mul(q)?.checked_add(q_prev)?;
        if q_next > max_denominator {
            return None;
        }
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

fn checked_lcm(a: u64, b: u64, cap: u64) -> Option<u64> {
    let g = gcd(a, b);
    let l = (a / g).checked_mul(b)?;
    (l <= cap).then_some(l)
}

/// Merge eigenvalues closer than the absolute tolerance into shared groups;
/// returns (representative values shifted to min zero, group index per input).
fn merged_groups(eigenvalues: &[f64], merge_tol: f64) -> (Vec<f64>, Vec<usize>) {
    let shift = eigenvalues[0];
    let mut reps: Vec<f64> = Vec::new();
    let mut assignment = Vec::with_capacity(eigenvalues.len());
    let mut acc = 0.0f64;
    let mut count = 0usize;
    for &ev in eigenvalues {
        let v = ev - shift;
        if count > 0 && v - (acc / count as f64) > merge_tol {
            reps.push(acc / count as f64);
            acc = 0.0;
            count = 0;
        }
        acc += v;
        count += 1;
        assignment.push(reps.len());
    }
    reps.push(acc / count as f64);
    (reps, assignment)
}

/// Canonical frequency picture of a single generator.
///
/// Eigenvalues are shifted so the minimum is zero, merged within
/// `tol * spectral range`, rationalized to integer levels, and divided by the
/// gcd of the nonzero differences. `tol` is relative to the spectral range.
pub fn difference_set(
    operator: &HermitianOperator,
    tol: f64,
    max_denominator: u64,
) -> Result<FrequencySet, SpectrumError> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(SpectrumError::BadTolerance(tol));
    }
    let eigenvalues = operator.eigenvalues();
    let range = eigenvalues.last().unwrap() - eigenvalues[0];
    if range <= 0.0 {
        // scalar spectrum: constant restriction
        return Ok(FrequencySet::from_levels(1.0, vec![0; eigenvalues.len()]));
    }
    let (reps, assignment) = merged_groups(eigenvalues, tol * range);
    if reps.len() == 1 {
        return Ok(FrequencySet::from_levels(1.0, vec![0; eigenvalues.len()]));
    }
    let (alpha, rep_levels) = rationalize(&reps, tol, max_denominator)?;
    let levels: Vec<i64> = assignment.iter().map(|&g| rep_levels[g]).collect();
    Ok(normalized(alpha, levels))
}

/// Divide levels by the gcd of nonzero differences, folding it into alpha.
fn normalized(alpha: f64, levels: Vec<i64>) -> FrequencySet {
    let g = levels.iter().fold(0i64, |acc, &k| gcd_i64(acc, k));
    if g > 1 {
        FrequencySet::from_levels(
            alpha * g as f64,
            levels.into_iter().map(|k| k / g).collect(),
        )
    } else {
        FrequencySet::from_levels(alpha, levels)
    }
}

/// Frequency set of every circuit parameter, in parameter order.
///
/// A parameter attached to a single element reduces to [`difference_set`] of
/// its generator. When several elements share the index, all spectra are
/// rationalized against one common scale and the level sets are combined by
/// Minkowski sum — a superset of the true support, safe for reconstruction.
pub fn circuit_frequency_sets(
    circuit: &ParameterizedCircuit,
    tol: f64,
    max_denominator: u64,
) -> Result<Vec<FrequencySet>, SpectrumError> {
    (1..=circuit.param_count())
        .map(|param| parameter_frequency_set(circuit, param, tol, max_denominator))
        .collect()
}

/// Frequency set of one 1-based circuit parameter.
pub fn parameter_frequency_set(
    circuit: &ParameterizedCircuit,
    param: usize,
    tol: f64,
    max_denominator: u64,
) -> Result<FrequencySet, SpectrumError> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(SpectrumError::BadTolerance(tol));
    }
    let generators: Vec<&HermitianOperator> = circuit
        .elements()
        .iter()
        .filter_map(|e| match e {
            CircuitElement::Parameterized {
                generator,
                param_index,
            } if *param_index == param => Some(generator),
            _ => None,
        })
        .collect();
    match generators.len() {
        0 => Ok(FrequencySet::from_levels(1.0, vec![0])),
        1 => difference_set(generators[0], tol, max_denominator),
        _ => combined_frequency_set(&generators, tol, max_denominator),
    }
}

fn combined_frequency_set(
    generators: &[&HermitianOperator],
    tol: f64,
    max_denominator: u64,
) -> Result<FrequencySet, SpectrumError> {
    let mut per_generator_reps: Vec<Vec<f64>> = Vec::with_capacity(generators.len());
    let mut joint_range = 0.0f64;
    for op in generators {
        let evs = op.eigenvalues();
        let range = evs.last().unwrap() - evs[0];
        joint_range = joint_range.max(range);
        if range <= 0.0 {
            per_generator_reps.push(vec![0.0]);
        } else {
            let (reps, _) = merged_groups(evs, tol * range);
            per_generator_reps.push(reps);
        }
    }
    if joint_range <= 0.0 {
        return Ok(FrequencySet::from_levels(1.0, vec![0]));
    }
    let concatenated: Vec<f64> = per_generator_reps.iter().flatten().copied().collect();
    let (alpha, integers) = rationalize(&concatenated, tol, max_denominator)?;

    // Minkowski sum of the per-generator level sets
    let mut offset = 0usize;
    let mut sumset: Vec<i64> = vec![0];
    for reps in &per_generator_reps {
        let ints = &integers[offset..offset + reps.len()];
        offset += reps.len();
        let mut next: Vec<i64> = Vec::with_capacity(sumset.len() * ints.len());
        for &a in &sumset {
            for &b in ints {
                if !next.contains(&(a + b)) {
                    next.push(a + b);
                }
            }
        }
        next.sort_unstable();
        sumset = next;
    }
    Ok(normalized(alpha, sumset))
}
