//! Global minimization of a real trigonometric polynomial over one period.
//!
//! The derivative of a polynomial with maximum frequency `n` has at most
//! `2n` zeros per period, so a dense scan at `32n + 17` equispaced points
//! brackets every sign change of the derivative; each bracket is refined by
//! Newton iteration with bisection fallback, and the minimum is the best of
//! the refined stationary points.

use crate::fourier::TrigPolynomial;
use std::f64::consts::TAU;

const NEWTON_TOL: f64 = 1e-13;
const MAX_NEWTON_ITERS: usize = 60;
const TIE_TOL: f64 = 1e-12;

/// Minimize `a0 + beta sin t + gamma cos t` in closed form.
///
/// Returns `(t_star, value)` with `t_star` in `[0, 2pi)` and
/// `value = a0 - sqrt(beta^2 + gamma^2)`; the constant case returns `(0, a0)`.
pub fn minimize_degree_one(a0: f64, beta: f64, gamma: f64) -> (f64, f64) {
    let amplitude = beta.hypot(gamma);
    if amplitude == 0.0 {
        return (0.0, a0);
    }
    // beta sin t + gamma cos t = amplitude * cos(t - atan2(beta, gamma))
    let t_star = (beta.atan2(gamma) + std::f64::consts::PI).rem_euclid(TAU);
    (t_star, a0 - amplitude)
}

/// Globally minimize a real trigonometric polynomial over `[0, 2pi)` on its
/// own axis. Ties between equal minima break toward the smallest `t_star`.
pub fn minimize_trig(p: &TrigPolynomial) -> (f64, f64) {
    if p.is_constant() {
        return (0.0, p.coefficient(0).re);
    }
    let n = p.max_freq();
    let grid = (32 * n + 17) as usize;
    let step = TAU / grid as f64;

    // slopes below the round-off scale of the derivative count as zero, so
    // numerically flat polynomials produce no spurious brackets
    let slope_scale: f64 = p
        .frequencies()
        .iter()
        .zip(p.coefficients())
        .map(|(&k, c)| k.abs() as f64 * c.norm())
        .sum();
    let floor = 1e-13 * slope_scale;
    let classify = |slope: f64| {
        if slope.abs() <= floor {
            0.0
        } else {
            slope.signum()
        }
    };

    // t = 0 is always a candidate so that ties (and numerically flat
    // polynomials) resolve to a zero step
    let mut candidates: Vec<f64> = vec![0.0];
    let mut stationary = 0usize;
    let mut best_grid_t = 0.0f64;
    let mut best_grid_value = f64::INFINITY;
    let mut in_zero_run = classify(p.derivative(0.0)) == 0.0;
    let mut prev_sign = classify(p.derivative(0.0));
    let mut prev_t = 0.0f64;
    for j in 1..=grid {
        let t = if j == grid { TAU } else { j as f64 * step };
        let sign = classify(p.derivative(t));
        if sign == 0.0 {
            // one candidate per run of vanishing slopes
            if !in_zero_run {
                candidates.push(t % TAU);
                stationary += 1;
                in_zero_run = true;
            }
        } else {
            if !in_zero_run && prev_sign != 0.0 && sign != prev_sign {
                candidates.push(refine_root(p, prev_t, t));
                stationary += 1;
            }
            in_zero_run = false;
            prev_sign = sign;
            prev_t = t;
        }
        let value = p.eval(t % TAU);
        if value < best_grid_value {
            best_grid_value = value;
            best_grid_t = t % TAU;
        }
    }
    // the derivative of a degree-n trigonometric polynomial has at most
    // 2n zeros per period, so brackets cannot exceed that
    debug_assert!(
        stationary <= 2 * n as usize,
        "{stationary} stationary candidates"
    );
    candidates.push(best_grid_t);

    let evaluated: Vec<(f64, f64)> = candidates
        .iter()
        .map(|&c| {
            let t = c.rem_euclid(TAU);
            (t, p.eval(t))
        })
        .collect();
    let min_value = evaluated
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::INFINITY, f64::min);
    let t_star = evaluated
        .iter()
        .filter(|&&(_, v)| v <= min_value + TIE_TOL)
        .map(|&(t, _)| t)
        .fold(f64::INFINITY, f64::min);
    (t_star, p.eval(t_star))
}

/// Newton iteration on the derivative inside a sign-change bracket, falling
/// back to bisection whenever a step leaves the bracket.
fn refine_root(p: &TrigPolynomial, mut lo: f64, mut hi: f64) -> f64 {
    let mut slope_lo = p.derivative(lo);
    let mut t = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON_ITERS {
        let slope = p.derivative(t);
        if slope.abs() <= NEWTON_TOL || (hi - lo) <= f64::EPSILON * TAU {
            return t % TAU;
        }
        if slope.signum() == slope_lo.signum() {
            lo = t;
            slope_lo = slope;
        } else {
            hi = t;
        }
        let curvature = p.second_derivative(t);
        let newton = t - slope / curvature;
        t = if curvature != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    t % TAU
}
