//! Reconstruction of the trigonometric expansion of a restricted expectation
//! function from finitely many evaluations, and evaluation of the expansion
//! and its derivative anywhere.
//!
//! Coefficient convention: a polynomial stores `c_k` with
//! `f(t) = sum_{k in D} c_k e^{ikt}`, Hermitian-symmetric (`c_{-k} =
//! conj(c_k)`), so evaluation and differentiation carry no normalization
//! factors. In the real form `a0 + sum beta_k sin(kt) + gamma_k cos(kt)`
//! the coefficients are `a0 = c_0`, `gamma_k = 2 Re c_k`,
//! `beta_k = -2 Im c_k` for `k > 0`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use thiserror::Error;

use crate::linalg::{ComplexMatrix, LinalgError, LuFactors, CONDITION_LIMIT};
use crate::spectrum::FrequencySet;

/// Redraw budget for the random-node reconstruction.
pub const MAX_RANDOM_ATTEMPTS: u32 = 16;

const MIN_POINT_SEPARATION: f64 = 1e-12;

#[derive(Debug, Clone, Error)]
pub enum FourierError {
    #[error("sample points are closer than {MIN_POINT_SEPARATION:.0e}")]
    DuplicatePoints,
    #[error("expected {expected} sample points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error(
        "random node sets stayed ill-conditioned after {attempts} draws (last condition {condition:.3e})"
    )]
    PersistentIllConditioning { attempts: u32, condition: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Finite Fourier series with Hermitian-symmetric coefficients.
///
/// `alpha` records the scale between the polynomial's own axis and the
/// caller's parameter axis: a circuit restriction `f` relates to the stored
/// expansion `g` by `f(t) = g(alpha t)`, so `f'(t) = alpha g'(alpha t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    freqs: Vec<i64>,
    coeffs: Vec<Complex64>,
    alpha: f64,
}

impl TrigPolynomial {
    /// Build from matched frequency/coefficient lists. Frequencies must form
    /// a symmetric set; coefficients are Hermitian-symmetrized, which keeps
    /// evaluations real against round-off.
    pub fn new(freqs: Vec<i64>, coeffs: Vec<Complex64>, alpha: f64) -> Self {
        assert_eq!(freqs.len(), coeffs.len(), "frequency/coefficient mismatch");
        let mut order: Vec<usize> = (0..freqs.len()).collect();
        order.sort_by_key(|&i| freqs[i]);
        let freqs: Vec<i64> = order.iter().map(|&i| freqs[i]).collect();
        let mut coeffs: Vec<Complex64> = order.iter().map(|&i| coeffs[i]).collect();
        debug_assert!(freqs.windows(2).all(|w| w[0] < w[1]), "duplicate frequency");
        // symmetrize c_k <- (c_k + conj(c_{-k})) / 2
        let mut symmetrized = coeffs.clone();
        for (i, &k) in freqs.iter().enumerate() {
            if let Ok(j) = freqs.binary_search(&-k) {
                symmetrized[i] = 0.5 * (coeffs[i] + coeffs[j].conj());
            }
        }
        coeffs = symmetrized;
        Self {
            freqs,
            coeffs,
            alpha,
        }
    }

    /// Constant polynomial.
    pub fn constant(value: f64, alpha: f64) -> Self {
        Self::new(vec![0], vec![Complex64::new(value, 0.0)], alpha)
    }

    pub fn frequencies(&self) -> &[i64] {
        &self.freqs
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at frequency `k` (zero if absent).
    pub fn coefficient(&self, k: i64) -> Complex64 {
        match self.freqs.binary_search(&k) {
            Ok(i) => self.coeffs[i],
            Err(_) => Complex64::ZERO,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Replace the axis scale, keeping coefficients.
    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn max_freq(&self) -> i64 {
        self.freqs.iter().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.freqs.iter().all(|&k| k == 0)
    }

    /// Value at a point of the polynomial's own (normalized) axis.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = Complex64::ZERO;
        for (&k, &c) in self.freqs.iter().zip(&self.coeffs) {
            acc += c * Complex64::from_polar(1.0, k as f64 * t);
        }
        debug_assert!(acc.im.abs() <= 1e-9, "imaginary residual {}", acc.im);
        acc.re
    }

    /// Derivative on the polynomial's own axis.
    pub fn derivative(&self, t: f64) -> f64 {
        let mut acc = Complex64::ZERO;
        for (&k, &c) in self.freqs.iter().zip(&self.coeffs) {
            if k == 0 {
                continue;
            }
            acc += Complex64::new(0.0, k as f64) * c * Complex64::from_polar(1.0, k as f64 * t);
        }
        acc.re
    }

    /// Second derivative on the polynomial's own axis.
    pub fn second_derivative(&self, t: f64) -> f64 {
        let mut acc = Complex64::ZERO;
        for (&k, &c) in self.freqs.iter().zip(&self.coeffs) {
            if k == 0 {
                continue;
            }
            let kf = k as f64;
            acc -= kf * kf * c * Complex64::from_polar(1.0, kf * t);
        }
        acc.re
    }

    /// Value on the caller's parameter axis: `f(theta) = g(alpha theta)`.
    pub fn eval_param(&self, theta: f64) -> f64 {
        self.eval(self.alpha * theta)
    }

    /// Derivative on the caller's parameter axis:
    /// `f'(theta) = alpha g'(alpha theta)`.
    pub fn derivative_param(&self, theta: f64) -> f64 {
        self.alpha * self.derivative(self.alpha * theta)
    }

    /// Real trigonometric form `(a0, [(k, beta_k, gamma_k)])` with
    /// `f = a0 + sum beta_k sin(kt) + gamma_k cos(kt)`.
    pub fn real_form(&self) -> (f64, Vec<(i64, f64, f64)>) {
        let a0 = self.coefficient(0).re;
        let terms = self
            .freqs
            .iter()
            .filter(|&&k| k > 0)
            .map(|&k| {
                let c = self.coefficient(k);
                (k, -2.0 * c.im, 2.0 * c.re)
            })
            .collect();
        (a0, terms)
    }
}

/// A reconstructed polynomial together with solve diagnostics.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub poly: TrigPolynomial,
    /// Function evaluations consumed.
    pub samples_used: usize,
    /// One-norm condition estimate of the solved system.
    pub condition: f64,
    /// Node-set draws needed (random method; 1 elsewhere).
    pub attempts: u32,
    /// Set when equidistant nodes aliased two frequencies and the dense
    /// rule took over.
    pub aliased_fallback: bool,
}

impl Reconstruction {
    pub fn ill_conditioned(&self) -> bool {
        self.condition >= CONDITION_LIMIT
    }
}

fn check_distinct(points: &[f64]) -> Result<(), FourierError> {
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted
        .windows(2)
        .any(|w| (w[1] - w[0]).abs() <= MIN_POINT_SEPARATION)
    {
        return Err(FourierError::DuplicatePoints);
    }
    Ok(())
}

/// Factor the interpolation matrix `A[s, k] = e^{i k t_s}` for the given
/// nodes and frequencies. Conditioning is known before any function values
/// are consumed.
fn factor_nodes(points: &[f64], freqs: &[i64]) -> Result<(LuFactors, f64), FourierError> {
    let matrix = ComplexMatrix::from_fn(points.len(), |s, j| {
        Complex64::from_polar(1.0, freqs[j] as f64 * points[s])
    });
    let factors = LuFactors::factor(&matrix)?;
    let condition = factors.condition();
    Ok((factors, condition))
}

fn solve_samples(
    factors: &LuFactors,
    samples: &[f64],
    freqs: &[i64],
    alpha: f64,
) -> TrigPolynomial {
    let rhs: Vec<Complex64> = samples.iter().map(|&y| Complex64::new(y, 0.0)).collect();
    let coeffs = factors.solve(&rhs);
    TrigPolynomial::new(freqs.to_vec(), coeffs, alpha)
}

fn reconstruct_at_points(
    f: &mut dyn FnMut(f64) -> f64,
    freqs: &[i64],
    points: &[f64],
    alpha: f64,
) -> Result<(TrigPolynomial, f64), FourierError> {
    let (factors, condition) = factor_nodes(points, freqs)?;
    let samples: Vec<f64> = points.iter().map(|&t| f(t)).collect();
    let poly = solve_samples(&factors, &samples, freqs, alpha);
    debug_assert!({
        let max_sample = samples.iter().fold(0.0f64, |m, y| m.max(y.abs()));
        condition >= CONDITION_LIMIT
            || points
                .iter()
                .zip(&samples)
                .all(|(&t, &y)| (poly.eval(t) - y).abs() <= 1e-8 * (1.0 + max_sample))
    });
    Ok((poly, condition))
}

/// Reconstruct from `2 max_freq + 1` arbitrary distinct nodes in `[0, 2pi)`,
/// solving the dense system over the full frequency window
/// `-max_freq ..= max_freq`.
///
/// The sampling axis is taken as already normalized (`alpha = 1`).
pub fn reconstruct_generic(
    mut f: impl FnMut(f64) -> f64,
    max_freq: i64,
    points: &[f64],
) -> Result<Reconstruction, FourierError> {
    reconstruct_windowed(&mut f, max_freq, points, 1.0)
}

fn reconstruct_windowed(
    f: &mut dyn FnMut(f64) -> f64,
    max_freq: i64,
    points: &[f64],
    alpha: f64,
) -> Result<Reconstruction, FourierError> {
    assert!(max_freq >= 0, "max_freq must be nonnegative");
    let expected = (2 * max_freq + 1) as usize;
    if points.len() != expected {
        return Err(FourierError::WrongPointCount {
            expected,
            got: points.len(),
        });
    }
    check_distinct(points)?;
    let freqs: Vec<i64> = (-max_freq..=max_freq).collect();
    let (poly, condition) = reconstruct_at_points(f, &freqs, points, alpha)?;
    Ok(Reconstruction {
        poly,
        samples_used: expected,
        condition,
        attempts: 1,
        aliased_fallback: false,
    })
}

/// Reconstruct from `S = |D|` equidistant nodes `t_j = 2 pi (a + j) / S`.
///
/// With sparse difference sets two frequencies can collide modulo `S`
/// (e.g. `{0, +-1, +-4, +-5, +-6}` has `-5 = 4 mod 9`), which makes the
/// node system singular. In that case the dense rule over
/// `2 max_freq + 1` equidistant nodes takes over and the result is marked
/// `aliased_fallback`.
pub fn reconstruct_equidistant(
    mut f: impl FnMut(f64) -> f64,
    freqs: &FrequencySet,
    offset: i64,
) -> Result<Reconstruction, FourierError> {
    let d = freqs.differences();
    let s = d.len();
    let alpha = freqs.alpha();

    let mut residues: Vec<i64> = d.iter().map(|k| k.rem_euclid(s as i64)).collect();
    residues.sort_unstable();
    let aliased = residues.windows(2).any(|w| w[0] == w[1]);
    if aliased {
        let n = freqs.max_freq();
        let count = (2 * n + 1) as usize;
        let points: Vec<f64> = (0..count)
            .map(|j| TAU * (offset + j as i64) as f64 / count as f64)
            .collect();
        let mut rec = reconstruct_windowed(&mut f, n, &points, alpha)?;
        rec.aliased_fallback = true;
        return Ok(rec);
    }

    let points: Vec<f64> = (0..s)
        .map(|j| TAU * (offset + j as i64) as f64 / s as f64)
        .collect();
    let (poly, condition) = reconstruct_at_points(&mut f, d, &points, alpha)?;
    Ok(Reconstruction {
        poly,
        samples_used: s,
        condition,
        attempts: 1,
        aliased_fallback: false,
    })
}

/// Reconstruct from `S = |D|` nodes drawn i.i.d. uniformly on `[0, 2pi)`.
///
/// The node matrix is nonsingular for almost every draw; a draw whose
/// condition estimate reaches 1e8 is rejected and redrawn, up to
/// [`MAX_RANDOM_ATTEMPTS`] times. Rejected draws cost no function
/// evaluations — conditioning depends on the nodes alone.
pub fn reconstruct_random(
    mut f: impl FnMut(f64) -> f64,
    freqs: &FrequencySet,
    seed: u64,
) -> Result<Reconstruction, FourierError> {
    let d = freqs.differences();
    let s = d.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_condition = f64::INFINITY;
    for attempt in 1..=MAX_RANDOM_ATTEMPTS {
        let points: Vec<f64> = (0..s).map(|_| rng.random_range(0.0..TAU)).collect();
        let (factors, condition) = match factor_nodes(&points, d) {
            Ok(pair) => pair,
            Err(FourierError::Linalg(LinalgError::Singular { .. })) => {
                last_condition = f64::INFINITY;
                continue;
            }
            Err(e) => return Err(e),
        };
        last_condition = condition;
        if condition >= CONDITION_LIMIT {
            continue;
        }
        let samples: Vec<f64> = points.iter().map(|&t| f(t)).collect();
        let poly = solve_samples(&factors, &samples, d, freqs.alpha());
        return Ok(Reconstruction {
            poly,
            samples_used: s,
            condition,
            attempts: attempt,
            aliased_fallback: false,
        });
    }
    Err(FourierError::PersistentIllConditioning {
        attempts: MAX_RANDOM_ATTEMPTS,
        condition: last_condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Pauli;
    use crate::linalg::eigendecompose;
    use crate::spectrum::{difference_set, DEFAULT_MAX_DENOMINATOR, DEFAULT_TOL};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn freq_set_of(pauli: Pauli) -> FrequencySet {
        let op = eigendecompose(&pauli.matrix().scale(Complex64::new(0.5, 0.0))).unwrap();
        difference_set(&op, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR).unwrap()
    }

    #[test]
    fn generic_reconstructs_cosine() {
        let points = [0.0, TAU / 3.0, 2.0 * TAU / 3.0];
        let rec = reconstruct_generic(f64::cos, 1, &points).unwrap();
        assert!((rec.poly.coefficient(1) - Complex64::new(0.5, 0.0)).norm() <= 1e-12);
        assert!((rec.poly.coefficient(-1) - Complex64::new(0.5, 0.0)).norm() <= 1e-12);
        assert!(rec.poly.coefficient(0).norm() <= 1e-12);
        assert_eq!(rec.samples_used, 3);
    }

    #[test]
    fn generic_constant_single_point() {
        let rec = reconstruct_generic(|_| 0.7, 0, &[1.3]).unwrap();
        assert!((rec.poly.coefficient(0) - Complex64::new(0.7, 0.0)).norm() <= 1e-15);
        assert_eq!(rec.samples_used, 1);
    }

    #[test]
    fn generic_reconstructs_sin_2t() {
        let points: Vec<f64> = (0..5).map(|j| TAU * j as f64 / 5.0).collect();
        let rec = reconstruct_generic(|t| (2.0 * t).sin(), 2, &points).unwrap();
        assert!((rec.poly.coefficient(2) - Complex64::new(0.0, -0.5)).norm() <= 1e-12);
        assert!((rec.poly.coefficient(-2) - Complex64::new(0.0, 0.5)).norm() <= 1e-12);
        for k in [-1i64, 0, 1] {
            assert!(rec.poly.coefficient(k).norm() <= 1e-12);
        }
    }

    #[test]
    fn generic_rejects_bad_points() {
        assert!(matches!(
            reconstruct_generic(f64::cos, 1, &[0.0, 1.0]),
            Err(FourierError::WrongPointCount {
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            reconstruct_generic(f64::cos, 1, &[0.0, 1.0, 1.0 + 1e-14]),
            Err(FourierError::DuplicatePoints)
        ));
    }

    #[test]
    fn equidistant_reconstructs_cosine() {
        let fs = freq_set_of(Pauli::X);
        assert_eq!(fs.differences(), &[-1, 0, 1]);
        let mut calls = 0usize;
        let rec = reconstruct_equidistant(
            |t| {
                calls += 1;
                t.cos()
            },
            &fs,
            0,
        )
        .unwrap();
        assert_eq!(calls, 3);
        assert_eq!(rec.samples_used, 3);
        assert!(!rec.aliased_fallback);
        assert!((rec.poly.coefficient(1) - Complex64::new(0.5, 0.0)).norm() <= 1e-12);
        assert!((rec.poly.coefficient(-1) - Complex64::new(0.5, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn random_reconstructs_cosine() {
        let fs = freq_set_of(Pauli::X);
        for seed in [0u64, 1, 42, 987654321] {
            let rec = reconstruct_random(f64::cos, &fs, seed).unwrap();
            assert!((rec.poly.coefficient(1) - Complex64::new(0.5, 0.0)).norm() <= 1e-7);
            assert_eq!(rec.samples_used, 3);
        }
    }

    #[test]
    fn eval_and_derivative_closed_forms() {
        let p = TrigPolynomial::constant(1.0, 1.0);
        assert_eq!(p.eval(0.3), 1.0);
        assert_eq!(p.derivative(0.3), 0.0);

        // cos t as c_{+-1} = 1/2
        let cos_poly = TrigPolynomial::new(
            vec![-1, 0, 1],
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::ZERO,
                Complex64::new(0.5, 0.0),
            ],
            1.0,
        );
        assert!((cos_poly.eval(PI) + 1.0).abs() <= 1e-15);
        assert!(cos_poly.derivative(0.0).abs() <= 1e-15);
        assert!((cos_poly.derivative(FRAC_PI_2) + 1.0).abs() <= 1e-15);
    }

    #[test]
    fn real_form_convention() {
        // f(t) = 0.3 + 2 sin t - cos 2t
        let p = TrigPolynomial::new(
            vec![-2, -1, 0, 1, 2],
            vec![
                Complex64::new(-0.5, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(-0.5, 0.0),
            ],
            1.0,
        );
        let (a0, terms) = p.real_form();
        assert!((a0 - 0.3).abs() <= 1e-15);
        assert_eq!(terms.len(), 2);
        let (k1, beta1, gamma1) = terms[0];
        assert_eq!(k1, 1);
        assert!((beta1 - 2.0).abs() <= 1e-15);
        assert!(gamma1.abs() <= 1e-15);
        let (k2, beta2, gamma2) = terms[1];
        assert_eq!(k2, 2);
        assert!(beta2.abs() <= 1e-15);
        assert!((gamma2 + 1.0).abs() <= 1e-15);
        for &t in &[0.0, 0.4, 2.8, 5.1] {
            assert!((p.eval(t) - (0.3 + 2.0 * t.sin() - (2.0 * t).cos())).abs() <= 1e-12);
        }
    }

    #[test]
    fn symmetrization_enforces_real_values() {
        let p = TrigPolynomial::new(
            vec![-1, 0, 1],
            vec![
                Complex64::new(0.2, 0.3),
                Complex64::new(1.0, 0.5),
                Complex64::new(0.4, -0.1),
            ],
            1.0,
        );
        assert!((p.coefficient(-1) - p.coefficient(1).conj()).norm() <= 1e-15);
        assert!(p.coefficient(0).im.abs() <= 1e-15);
        for &t in &[0.0, 1.0, 2.0, 3.0] {
            let _ = p.eval(t); // would fire the imaginary-residual debug assertion
        }
    }

    #[test]
    fn scale_maps_derivatives_to_parameter_axis() {
        // g(s) = cos s with alpha = 2: f(t) = cos(2t), f'(t) = -2 sin(2t)
        let p = TrigPolynomial::new(
            vec![-1, 0, 1],
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::ZERO,
                Complex64::new(0.5, 0.0),
            ],
            2.0,
        );
        for &t in &[0.0, 0.3, 1.2] {
            assert!((p.eval_param(t) - (2.0 * t).cos()).abs() <= 1e-12);
            assert!((p.derivative_param(t) + 2.0 * (2.0 * t).sin()).abs() <= 1e-12);
        }
    }

    #[test]
    fn sparse_equidistant_aliases_and_falls_back() {
        // transmon-style level set {0, 1, 5, 6}: -5 = 4 (mod 9)
        let m = ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex64::new([0.0f64, 0.5, 2.5, 3.0][i], 0.0)
            } else {
                Complex64::ZERO
            }
        });
        let op = eigendecompose(&m).unwrap();
        let fs = difference_set(&op, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR).unwrap();
        assert_eq!(fs.size(), 9);
        let truth = |t: f64| 0.4 * t.cos() + 0.1 * (4.0 * t).sin() - 0.3 * (6.0 * t).cos();
        let mut calls = 0usize;
        let rec = reconstruct_equidistant(
            |t| {
                calls += 1;
                truth(t)
            },
            &fs,
            0,
        )
        .unwrap();
        assert!(rec.aliased_fallback);
        assert_eq!(rec.samples_used, 13);
        assert_eq!(calls, 13);
        for j in 0..1000 {
            let t = TAU * j as f64 / 1000.0;
            assert!((rec.poly.eval(t) - truth(t)).abs() <= 1e-9);
        }
        // alpha carried through the fallback
        assert!((rec.poly.alpha() - fs.alpha()).abs() <= 1e-12);
    }

    #[test]
    fn random_reconstruction_of_constant() {
        let m = ComplexMatrix::identity(2).scale(Complex64::new(2.5, 0.0));
        let op = eigendecompose(&m).unwrap();
        let fs = difference_set(&op, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR).unwrap();
        assert!(fs.is_constant());
        let rec = reconstruct_random(|_| 0.25, &fs, 3).unwrap();
        assert_eq!(rec.samples_used, 1);
        assert!((rec.poly.coefficient(0).re - 0.25).abs() <= 1e-15);
    }

    #[test]
    fn equidistant_constant_uses_one_sample() {
        let m = ComplexMatrix::identity(2).scale(Complex64::new(-4.0, 0.0));
        let op = eigendecompose(&m).unwrap();
        let fs = difference_set(&op, DEFAULT_TOL, DEFAULT_MAX_DENOMINATOR).unwrap();
        let mut calls = 0usize;
        let rec = reconstruct_equidistant(
            |_| {
                calls += 1;
                0.7
            },
            &fs,
            0,
        )
        .unwrap();
        assert_eq!(calls, 1);
        assert!((rec.poly.coefficient(0).re - 0.7).abs() <= 1e-15);
    }

    #[test]
    fn parseval_style_mean_is_c0() {
        let points = [0.1, 2.0, 2.9, 4.4, 5.8];
        let truth = |t: f64| 0.37 + 0.5 * t.sin() - 0.25 * (2.0 * t).cos();
        let rec = reconstruct_generic(truth, 2, &points).unwrap();
        let mean: f64 = (0..4096)
            .map(|j| rec.poly.eval(TAU * j as f64 / 4096.0))
            .sum::<f64>()
            / 4096.0;
        assert!((mean - rec.poly.coefficient(0).re).abs() <= 1e-6);
        assert!((rec.poly.coefficient(0).re - 0.37).abs() <= 1e-10);
    }

    proptest! {
        #[test]
        fn generic_roundtrips_random_polynomials(
            res in proptest::collection::vec(-1.0f64..1.0, 3),
            ims in proptest::collection::vec(-1.0f64..1.0, 3),
            jitter in proptest::collection::vec(0.01f64..0.99, 7),
        ) {
            // random degree-3 Hermitian-symmetric polynomial
            let mut freqs = Vec::new();
            let mut coeffs = Vec::new();
            freqs.push(0i64);
            coeffs.push(Complex64::new(res[0], 0.0));
            for k in 1..=3i64 {
                let c = Complex64::new(res[(k - 1) as usize], ims[(k - 1) as usize]);
                freqs.push(k);
                coeffs.push(c);
                freqs.push(-k);
                coeffs.push(c.conj());
            }
            let truth = TrigPolynomial::new(freqs, coeffs, 1.0);
            let points: Vec<f64> = jitter
                .iter()
                .enumerate()
                .map(|(j, &x)| TAU * (j as f64 + x) / 7.0)
                .collect();
            let rec = reconstruct_generic(|t| truth.eval(t), 3, &points).unwrap();
            if !rec.ill_conditioned() {
                for k in -3..=3i64 {
                    prop_assert!((rec.poly.coefficient(k) - truth.coefficient(k)).norm() <= 1e-7);
                }
            }
        }
    }
}
