//! Jacobi polynomials via the standard three-term recurrence.

use crate::error::{Error, Result};

/// Unchecked evaluation of P_n^{(alpha,beta)}(x). Callers guarantee
/// alpha, beta > -1.
pub(crate) fn jacobi_raw(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0);
    for m in 2..=n {
        let m = m as f64;
        let ab = alpha + beta;
        let c1 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        let c2 = (2.0 * m + ab - 1.0) * (alpha * alpha - beta * beta);
        let c3 = (2.0 * m + ab - 1.0) * (2.0 * m + ab) * (2.0 * m + ab - 2.0);
        let c4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
        let next = ((c2 + c3 * x) * p - c4 * p_prev) / c1;
        p_prev = p;
        p = next;
    }
    p
}

/// Unchecked derivative d/dx P_n^{(alpha,beta)}(x) through the identity
/// with the (alpha+1, beta+1) family.
pub(crate) fn jacobi_deriv_raw(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    0.5 * (n as f64 + alpha + beta + 1.0) * jacobi_raw(n - 1, alpha + 1.0, beta + 1.0, x)
}

fn check_indices(alpha: f64, beta: f64) -> Result<()> {
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::Domain(format!(
            "Jacobi indices must satisfy alpha, beta > -1 (got alpha = {alpha}, beta = {beta})"
        )));
    }
    Ok(())
}

/// P_n^{(alpha,beta)}(x) for alpha, beta > -1.
pub fn jacobi_eval(n: usize, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    check_indices(alpha, beta)?;
    Ok(jacobi_raw(n, alpha, beta, x))
}

/// d/dx P_n^{(alpha,beta)}(x) for alpha, beta > -1.
pub fn jacobi_deriv(n: usize, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    check_indices(alpha, beta)?;
    Ok(jacobi_deriv_raw(n, alpha, beta, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::edge_rule;
    use approx::assert_abs_diff_eq;

    #[test]
    fn degree_zero_and_legendre_linear() {
        for &(a, b, x) in &[(0.0, 0.0, -0.3), (2.0, 0.5, 0.9), (1.5, 3.0, 0.0)] {
            assert_eq!(jacobi_eval(0, a, b, x).unwrap(), 1.0);
        }
        // Legendre case: P_1(x) = x
        assert_abs_diff_eq!(jacobi_eval(1, 0.0, 0.0, 0.5).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn weighted_orthogonality_by_quadrature() {
        // integral over [-1,1] of (1-x)^2 P_2^{2,0} P_3^{2,0} vanishes; the
        // integrand has degree 7, a 6-point Gauss rule (order 11) is exact.
        let rule = edge_rule(6).unwrap();
        let mut acc = 0.0;
        for (node, w) in rule.nodes.iter().zip(&rule.weights) {
            let x = 2.0 * node[0] - 1.0; // map [0,1] -> [-1,1]
            let weight_fn = (1.0 - x).powi(2);
            acc += 2.0 * w * weight_fn * jacobi_raw(2, 2.0, 0.0, x) * jacobi_raw(3, 2.0, 0.0, x);
        }
        assert_abs_diff_eq!(acc, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn derivative_trivial_cases() {
        assert_eq!(jacobi_deriv(0, 1.0, 2.0, 0.3).unwrap(), 0.0);
        // d/dx P_1^{0,0} = 1 everywhere
        for x in [-0.9, 0.0, 0.7] {
            assert_abs_diff_eq!(jacobi_deriv(1, 0.0, 0.0, x).unwrap(), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let (n, alpha, beta, x) = (4, 2.0, 0.0, 0.3);
        let h = 1e-6;
        let fd = (jacobi_raw(n, alpha, beta, x + h) - jacobi_raw(n, alpha, beta, x - h)) / (2.0 * h);
        assert_abs_diff_eq!(jacobi_deriv(n, alpha, beta, x).unwrap(), fd, epsilon = 1e-8);
    }

    #[test]
    fn rejects_indices_at_or_below_minus_one() {
        assert!(jacobi_eval(2, -1.0, 0.0, 0.0).is_err());
        assert!(jacobi_eval(2, 0.0, -1.5, 0.0).is_err());
        assert!(jacobi_deriv(2, -2.0, 0.0, 0.0).is_err());
    }
}
