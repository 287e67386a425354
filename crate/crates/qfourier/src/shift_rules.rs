//! Closed-form low-cost derivative rules for the two simplest canonical
//! frequency supports.
//!
//! Both rules act on a normalized evaluator (frequency support already
//! integer with gcd 1). Wider difference sets have no such special rule and
//! route through the full reconstruction instead.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

/// Two-evaluation derivative for support `{0, +-1}`:
/// `f'(t) = (f(t + pi/2) - f(t - pi/2)) / 2`.
///
/// Applying it to a wider support silently returns a wrong number; callers
/// check the canonical difference set first.
pub fn two_point_derivative(mut f: impl FnMut(f64) -> f64, t: f64) -> f64 {
    0.5 * (f(t + FRAC_PI_2) - f(t - FRAC_PI_2))
}

/// Output of [`four_point_rule`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourPointRule {
    /// `f'(0) = beta1 + 2 beta2`.
    pub derivative: f64,
    /// Coefficient of `sin t`.
    pub beta1: f64,
    /// Coefficient of `sin 2t`.
    pub beta2: f64,
}

/// Four-evaluation derivative at zero for support `{0, +-1, +-2}`.
///
/// Evaluating at `+-pi/4` and `+-3pi/4` drops `cos 2t` from the system
/// (it vanishes at all four nodes), leaving four equations in
/// `a0, beta1, beta2, gamma1`; the sine coefficients come out as
/// antisymmetric combinations of the samples.
pub fn four_point_rule(mut f: impl FnMut(f64) -> f64) -> FourPointRule {
    let quarter = f(FRAC_PI_4) - f(-FRAC_PI_4);
    let three_quarter = f(3.0 * FRAC_PI_4) - f(-3.0 * FRAC_PI_4);
    let beta1 = (quarter + three_quarter) / (2.0 * SQRT_2);
    let beta2 = (quarter - three_quarter) / 4.0;
    FourPointRule {
        derivative: beta1 + 2.0 * beta2,
        beta1,
        beta2,
    }
}

/// [`four_point_rule`] at a general point, via the shifted evaluator
/// `s -> f(t + s)`.
pub fn four_point_derivative_at(mut f: impl FnMut(f64) -> f64, t: f64) -> f64 {
    four_point_rule(|s| f(t + s)).derivative
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn two_point_on_cosine() {
        assert!(two_point_derivative(f64::cos, 0.0).abs() <= 1e-15);
        assert!((two_point_derivative(f64::cos, FRAC_PI_2) + 1.0).abs() <= 1e-15);
        for &t in &[0.3, 1.7, 4.2] {
            assert!((two_point_derivative(f64::cos, t) + t.sin()).abs() <= 1e-12);
        }
    }

    #[test]
    fn two_point_uses_two_evaluations() {
        let mut calls = 0usize;
        two_point_derivative(
            |t| {
                calls += 1;
                t.cos()
            },
            0.9,
        );
        assert_eq!(calls, 2);
    }

    #[test]
    fn four_point_even_function_has_zero_derivative() {
        let rule = four_point_rule(|t| t.cos() + (2.0 * t).cos());
        assert!(rule.derivative.abs() <= 1e-14);
    }

    #[test]
    fn four_point_on_sines() {
        let mut calls = 0usize;
        let rule = four_point_rule(|t| {
            calls += 1;
            t.sin() + (2.0 * t).sin()
        });
        assert_eq!(calls, 4);
        assert!((rule.beta1 - 1.0).abs() <= 1e-14);
        assert!((rule.beta2 - 1.0).abs() <= 1e-14);
        assert!((rule.derivative - 3.0).abs() <= 1e-13);
    }

    #[test]
    fn four_point_matches_general_solve() {
        // oracle: solve the full 4x4 system in (a0, beta1, beta2, gamma1)
        // at the same nodes and compare
        let coeffs = [0.3, -1.2, 0.8, 0.5, -0.7]; // a0, b1, b2, g1, g2
        let f = |t: f64| {
            coeffs[0]
                + coeffs[1] * t.sin()
                + coeffs[2] * (2.0 * t).sin()
                + coeffs[3] * t.cos()
                + coeffs[4] * (2.0 * t).cos()
        };
        let nodes = [FRAC_PI_4, -FRAC_PI_4, 3.0 * FRAC_PI_4, -3.0 * FRAC_PI_4];
        // rows: [1, sin t, sin 2t, cos t], gamma2 column absent by node choice
        let mut a = [[0.0f64; 4]; 4];
        let mut y = [0.0f64; 4];
        for (r, &t) in nodes.iter().enumerate() {
            a[r] = [1.0, t.sin(), (2.0 * t).sin(), t.cos()];
            y[r] = f(t);
        }
        // gaussian elimination on the tiny system
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            a.swap(col, pivot);
            y.swap(col, pivot);
            for row in (col + 1)..4 {
                let factor = a[row][col] / a[col][col];
                for k in col..4 {
                    a[row][k] -= factor * a[col][k];
                }
                y[row] -= factor * y[col];
            }
        }
        let mut x = [0.0f64; 4];
        for row in (0..4).rev() {
            let mut acc = y[row];
            for k in (row + 1)..4 {
                acc -= a[row][k] * x[k];
            }
            x[row] = acc / a[row][row];
        }
        let rule = four_point_rule(f);
        assert!((rule.beta1 - x[1]).abs() <= 1e-12);
        assert!((rule.beta2 - x[2]).abs() <= 1e-12);
        assert!((rule.derivative - (x[1] + 2.0 * x[2])).abs() <= 1e-12);
        // sanity against the exact coefficients
        assert!((rule.beta1 - coeffs[1]).abs() <= 1e-12);
        assert!((rule.beta2 - coeffs[2]).abs() <= 1e-12);
    }

    #[test]
    fn cos_2t_coefficient_is_invisible() {
        // the nodes eliminate gamma2: changing it cannot change the output
        let build = |gamma2: f64| {
            move |t: f64| {
                0.4 + 0.9 * t.sin() - 0.2 * (2.0 * t).sin()
                    + 0.6 * t.cos()
                    + gamma2 * (2.0 * t).cos()
            }
        };
        let a = four_point_rule(build(0.33));
        let b = four_point_rule(build(-5.0));
        assert!((a.derivative - b.derivative).abs() <= 1e-12);
        assert!((a.beta1 - b.beta1).abs() <= 1e-12);
        assert!((a.beta2 - b.beta2).abs() <= 1e-12);
    }

    #[test]
    fn shifted_four_point_matches_true_derivative() {
        let f = |t: f64| 0.1 + 0.7 * t.sin() + 0.3 * (2.0 * t).sin() - 0.5 * t.cos();
        let df = |t: f64| 0.7 * t.cos() + 0.6 * (2.0 * t).cos() + 0.5 * t.sin();
        for &t in &[0.0, 0.8, PI, 5.5] {
            assert!((four_point_derivative_at(f, t) - df(t)).abs() <= 1e-12);
        }
    }
}
