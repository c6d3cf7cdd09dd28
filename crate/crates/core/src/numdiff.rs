//! Central finite differences for gradients and Hessians.
//!
//! Used to cross-validate analytic derivatives and to fill the hyperparameter
//! blocks of joint curvature matrices where analytic second derivatives are
//! not worth hand-deriving.

use nalgebra::DMatrix;

/// Central-difference gradient of `f` at `x` with per-coordinate steps
/// scaled by parameter magnitude.
pub fn gradient<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], step: f64) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut xp = x.to_vec();
    for i in 0..x.len() {
        let h = step * x[i].abs().max(1.0);
        xp[i] = x[i] + h;
        let up = f(&xp);
        xp[i] = x[i] - h;
        let dn = f(&xp);
        xp[i] = x[i];
        g[i] = (up - dn) / (2.0 * h);
    }
    g
}

/// Central-difference Jacobian of a vector map `g` at `x`, symmetrized.
/// When `g` is an analytic gradient this is a finite-difference Hessian.
pub fn hessian_from_gradient<G: Fn(&[f64]) -> Vec<f64>>(
    grad: G,
    x: &[f64],
    step: f64,
) -> DMatrix<f64> {
    let d = x.len();
    let mut h = DMatrix::zeros(d, d);
    let mut xp = x.to_vec();
    for j in 0..d {
        let hj = step * x[j].abs().max(1.0);
        xp[j] = x[j] + hj;
        let up = grad(&xp);
        xp[j] = x[j] - hj;
        let dn = grad(&xp);
        xp[j] = x[j];
        for i in 0..d {
            h[(i, j)] = (up[i] - dn[i]) / (2.0 * hj);
        }
    }
    // Symmetrize: H <- (H + H^T)/2.
    let ht = h.transpose();
    (h + ht) * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_gradient_and_hessian_are_exact() {
        // f(x) = x0^2 + 3 x0 x1 + 2 x1^2
        let f = |x: &[f64]| x[0] * x[0] + 3.0 * x[0] * x[1] + 2.0 * x[1] * x[1];
        let g = gradient(f, &[1.0, -2.0], 1e-6);
        assert!((g[0] - (2.0 - 6.0)).abs() < 1e-6);
        assert!((g[1] - (3.0 - 8.0)).abs() < 1e-6);

        let grad = |x: &[f64]| vec![2.0 * x[0] + 3.0 * x[1], 3.0 * x[0] + 4.0 * x[1]];
        let h = hessian_from_gradient(grad, &[1.0, -2.0], 1e-6);
        assert!((h[(0, 0)] - 2.0).abs() < 1e-8);
        assert!((h[(0, 1)] - 3.0).abs() < 1e-8);
        assert!((h[(1, 1)] - 4.0).abs() < 1e-8);
    }
}
