//! Orthonormal Dubiner-Koornwinder bases on the reference triangle
//! {xi, eta >= 0, xi + eta <= 1} and tetrahedron {xi + eta + nu <= 1}.
//!
//! Each mode is a polynomial despite the collapsed-coordinate form: the
//! factor (1-eta)^i absorbs the singular argument 2 xi/(1-eta) - 1. Close to
//! the collapsed vertex eta = 1 the argument is evaluated clamped with the
//! (1-eta)^i factor applied separately, which reproduces the polynomial
//! limit to rounding accuracy (the interior quadrature nodes used by the
//! solver never get near that vertex).

use super::jacobi::{jacobi_deriv_raw, jacobi_raw};
use crate::error::{Error, Result};

/// Below this distance from the collapsed vertex the limit form is used.
const COLLAPSE_EPS: f64 = 1e-12;

fn norm_2d(i: usize, j: usize) -> f64 {
    (2.0 * (2 * i + 1) as f64 * (i + j + 1) as f64).sqrt()
}

fn norm_3d(i: usize, j: usize, k: usize) -> f64 {
    (((2 * i + 2 * j + 2 * k + 3) * (2 * i + 2 * j + 2) * (2 * i + 1)) as f64).sqrt()
}

/// Collapsed first argument, safe against eta -> 1.
fn collapsed_arg(xi: f64, one_minus_eta: f64) -> f64 {
    if one_minus_eta.abs() < COLLAPSE_EPS {
        let raw = if one_minus_eta != 0.0 { 2.0 * xi / one_minus_eta - 1.0 } else { 1.0 };
        if raw.is_finite() { raw.clamp(-1.0, 1.0) } else { 1.0 }
    } else {
        2.0 * xi / one_minus_eta - 1.0
    }
}

/// Basis value at any point of the closed reference triangle, including the
/// collapsed vertex (0, 1) where the polynomial limit applies.
pub(crate) fn dubiner2d_raw(i: usize, j: usize, xi: f64, eta: f64) -> f64 {
    let om = 1.0 - eta;
    let b = jacobi_raw(j, (2 * i + 1) as f64, 0.0, 2.0 * eta - 1.0);
    if i == 0 {
        return norm_2d(i, j) * b;
    }
    let g = collapsed_arg(xi, om);
    norm_2d(i, j) * om.powi(i as i32) * jacobi_raw(i, 0.0, 0.0, g) * b
}

/// Reference gradient (d/dxi, d/deta); same domain as `dubiner2d_raw`.
pub(crate) fn dubiner2d_grad_raw(i: usize, j: usize, xi: f64, eta: f64) -> [f64; 2] {
    let c = norm_2d(i, j);
    let om = 1.0 - eta;
    let b = jacobi_raw(j, (2 * i + 1) as f64, 0.0, 2.0 * eta - 1.0);
    let db = jacobi_deriv_raw(j, (2 * i + 1) as f64, 0.0, 2.0 * eta - 1.0);
    if i == 0 {
        return [0.0, c * 2.0 * db];
    }
    let g = collapsed_arg(xi, om);
    let p = jacobi_raw(i, 0.0, 0.0, g);
    let dp = jacobi_deriv_raw(i, 0.0, 0.0, g);
    // (1-eta)^i P_i(g) differentiates to (1-eta)^{i-1} [...] with bounded
    // brackets; xi/(1-eta) is rewritten as (g+1)/2 to avoid the quotient.
    let om_pow_im1 = om.powi(i as i32 - 1);
    let d_xi = c * 2.0 * om_pow_im1 * dp * b;
    let d_eta = c
        * (om_pow_im1 * ((g + 1.0) * dp - i as f64 * p) * b + om_pow_im1 * om * p * 2.0 * db);
    [d_xi, d_eta]
}

fn check_inside_triangle(eta: f64) -> Result<()> {
    if eta >= 1.0 {
        return Err(Error::Domain(format!(
            "Dubiner evaluation at eta = {eta} hits the collapsed vertex (requires eta < 1)"
        )));
    }
    Ok(())
}

/// 2D Dubiner mode (i, j) at an interior point of the reference triangle.
pub fn dubiner2d_eval(i: usize, j: usize, xi: f64, eta: f64) -> Result<f64> {
    check_inside_triangle(eta)?;
    Ok(dubiner2d_raw(i, j, xi, eta))
}

/// Reference gradient of the 2D Dubiner mode (i, j).
pub fn dubiner2d_grad(i: usize, j: usize, xi: f64, eta: f64) -> Result<[f64; 2]> {
    check_inside_triangle(eta)?;
    Ok(dubiner2d_grad_raw(i, j, xi, eta))
}

/// 3D Dubiner mode (i, j, k) at an interior point of the reference
/// tetrahedron.
pub fn dubiner3d_eval(i: usize, j: usize, k: usize, xi: f64, eta: f64, nu: f64) -> Result<f64> {
    let d1 = 1.0 - eta - nu;
    let d2 = 1.0 - nu;
    if d1 <= 0.0 || d2 <= 0.0 {
        return Err(Error::Domain(format!(
            "3D Dubiner evaluation at (xi, eta, nu) = ({xi}, {eta}, {nu}) hits a collapsed-coordinate denominator"
        )));
    }
    let g1 = 2.0 * xi / d1 - 1.0;
    let g2 = 2.0 * eta / d2 - 1.0;
    let v = jacobi_raw(i, 0.0, 0.0, g1)
        * d1.powi(i as i32)
        * jacobi_raw(j, (2 * i + 1) as f64, 0.0, g2)
        * d2.powi(j as i32)
        * jacobi_raw(k, (2 * i + 2 * j + 2) as f64, 0.0, 2.0 * nu - 1.0);
    Ok(norm_3d(i, j, k) * v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{tetrahedron_rule, triangle_rule};
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_mode_is_sqrt_two_with_unit_norm() {
        for &(xi, eta) in &[(0.1, 0.2), (0.3, 0.3), (0.05, 0.9)] {
            assert_abs_diff_eq!(
                dubiner2d_eval(0, 0, xi, eta).unwrap(),
                2f64.sqrt(),
                epsilon = 1e-14
            );
        }
        // squared L2 norm over the reference triangle (area 1/2) is 1
        let rule = triangle_rule(2).unwrap();
        let norm2: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * dubiner2d_raw(0, 0, p[0], p[1]).powi(2))
            .sum();
        assert_abs_diff_eq!(norm2, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn linear_modes_orthogonal_under_quadrature() {
        let rule = triangle_rule(6).unwrap();
        let inner: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * dubiner2d_raw(1, 0, p[0], p[1]) * dubiner2d_raw(0, 1, p[0], p[1]))
            .sum();
        assert!(inner.abs() < 1e-12);
    }

    #[test]
    fn linear_mode_vanishes_at_barycenter() {
        // phi_{1,0} is proportional to 2 xi + eta - 1, which has a root at
        // the barycenter (1/3, 1/3).
        assert_abs_diff_eq!(
            dubiner2d_eval(1, 0, 1.0 / 3.0, 1.0 / 3.0).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        // proportionality constant comes out of the printed normalization:
        // c_{1,0} = sqrt(2*3*2) = sqrt(12)
        let v = dubiner2d_eval(1, 0, 0.4, 0.1).unwrap();
        assert_abs_diff_eq!(v, 12f64.sqrt() * (2.0 * 0.4 + 0.1 - 1.0), epsilon = 1e-13);
    }

    #[test]
    fn gradient_constant_and_linear_modes() {
        let g = dubiner2d_grad(0, 0, 0.2, 0.3).unwrap();
        assert_eq!(g, [0.0, 0.0]);
        // grad of sqrt(12) (2 xi + eta - 1) is constant (2 sqrt 12, sqrt 12)
        for &(xi, eta) in &[(0.1, 0.1), (0.25, 0.5), (0.6, 0.2)] {
            let g = dubiner2d_grad(1, 0, xi, eta).unwrap();
            assert_abs_diff_eq!(g[0], 2.0 * 12f64.sqrt(), epsilon = 1e-12);
            assert_abs_diff_eq!(g[1], 12f64.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn gradient_matches_central_differences() {
        let h = 1e-6;
        let pts = [(0.21, 0.37), (0.05, 0.55), (0.4, 0.17)];
        for i in 0..=4usize {
            for j in 0..=(4 - i) {
                for &(xi, eta) in &pts {
                    let g = dubiner2d_grad_raw(i, j, xi, eta);
                    let fx = (dubiner2d_raw(i, j, xi + h, eta) - dubiner2d_raw(i, j, xi - h, eta))
                        / (2.0 * h);
                    let fy = (dubiner2d_raw(i, j, xi, eta + h) - dubiner2d_raw(i, j, xi, eta - h))
                        / (2.0 * h);
                    let scale = 1.0 + g[0].abs().max(g[1].abs());
                    assert!((g[0] - fx).abs() / scale < 1e-7, "d/dxi mode ({i},{j})");
                    assert!((g[1] - fy).abs() / scale < 1e-7, "d/deta mode ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rejects_collapsed_vertex() {
        assert!(dubiner2d_eval(1, 0, 0.0, 1.0).is_err());
        assert!(dubiner2d_grad(1, 0, 0.0, 1.2).is_err());
    }

    #[test]
    fn limit_form_near_collapsed_vertex_stays_finite() {
        // raw evaluation just below the guard threshold must stay finite and
        // tiny for i >= 1 (the polynomial limit at the vertex is 0)
        let v = dubiner2d_raw(3, 1, 1e-13, 1.0 - 1e-13);
        assert!(v.is_finite());
        assert!(v.abs() < 1e-9);
        // i = 0 modes have a finite nonzero limit at the vertex
        let v0 = dubiner2d_raw(0, 2, 0.0, 1.0);
        assert!(v0.is_finite() && v0.abs() > 0.1);
    }

    #[test]
    fn constant_mode_3d_is_sqrt_six() {
        let v = dubiner3d_eval(0, 0, 0, 0.2, 0.2, 0.3).unwrap();
        assert_abs_diff_eq!(v, 6f64.sqrt(), epsilon = 1e-13);
        // unit squared norm over the reference tetrahedron (volume 1/6)
        let rule = tetrahedron_rule(2).unwrap();
        let norm2: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * dubiner3d_eval(0, 0, 0, p[0], p[1], p[2]).unwrap().powi(2))
            .sum();
        assert_abs_diff_eq!(norm2, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn first_modes_3d_orthogonal() {
        let rule = tetrahedron_rule(4).unwrap();
        let inner: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| {
                w * dubiner3d_eval(1, 0, 0, p[0], p[1], p[2]).unwrap()
                    * dubiner3d_eval(0, 1, 0, p[0], p[1], p[2]).unwrap()
            })
            .sum();
        assert!(inner.abs() < 1e-10);
    }

    #[test]
    fn gram_identity_3d_p3() {
        let p = 3usize;
        let rule = tetrahedron_rule(6).unwrap();
        let mut modes = Vec::new();
        for s in 0..=p {
            for i in 0..=s {
                for j in 0..=(s - i) {
                    modes.push((i, j, s - i - j));
                }
            }
        }
        for (a, &(i1, j1, k1)) in modes.iter().enumerate() {
            for (b, &(i2, j2, k2)) in modes.iter().enumerate() {
                let inner: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(pt, w)| {
                        w * dubiner3d_eval(i1, j1, k1, pt[0], pt[1], pt[2]).unwrap()
                            * dubiner3d_eval(i2, j2, k2, pt[0], pt[1], pt[2]).unwrap()
                    })
                    .sum();
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (inner - expect).abs() < 1e-9,
                    "3D Gram entry ({a},{b}) = {inner}"
                );
            }
        }
    }

    #[test]
    fn rejects_collapsed_denominators_3d() {
        assert!(dubiner3d_eval(1, 0, 0, 0.0, 0.5, 0.5).is_err());
        assert!(dubiner3d_eval(1, 0, 0, 0.0, 0.0, 1.0).is_err());
    }
}
