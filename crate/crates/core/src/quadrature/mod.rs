//! Quadrature rules: symmetric interior rules on the reference triangle and
//! tetrahedron, Gauss-Legendre rules on the reference edge [0, 1].
//!
//! Triangle and tetrahedron rules come from embedded tables (see `tables`);
//! a request is served by the smallest embedded rule whose exactness covers
//! it. All nodes are strictly interior and all weights positive.

mod tables;

use crate::error::{Error, Result};

/// Nodes, weights and polynomial exactness of a rule on a reference domain.
///
/// `D` is the coordinate dimension: 1 for the unit edge, 2 for the reference
/// triangle {xi, eta >= 0, xi + eta <= 1}, 3 for the reference tetrahedron.
#[derive(Debug, Clone)]
pub struct QuadratureRule<const D: usize> {
    pub nodes: Vec<[f64; D]>,
    pub weights: Vec<f64>,
    /// Degree up to which the rule integrates polynomials exactly.
    pub order: u32,
}

impl<const D: usize> QuadratureRule<D> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

pub const MAX_TRIANGLE_ORDER: u32 = 14;
pub const MAX_EDGE_POINTS: usize = 12;
pub const MAX_TETRAHEDRON_ORDER: u32 = 8;

/// Symmetric interior rule on the reference triangle with exactness at least
/// `order`. Valid requests: 1..=14.
pub fn triangle_rule(order: u32) -> Result<QuadratureRule<2>> {
    if order < 1 || order > MAX_TRIANGLE_ORDER {
        return Err(Error::Domain(format!(
            "triangle quadrature order {order} outside the embedded table (1..={MAX_TRIANGLE_ORDER})"
        )));
    }
    let &(actual, data) = tables::TRI_CATALOG
        .iter()
        .find(|(deg, _)| *deg >= order)
        .map(|(_, rule)| rule)
        .expect("catalog covers all supported orders");
    let mut nodes = Vec::with_capacity(data.len());
    let mut weights = Vec::with_capacity(data.len());
    for row in data {
        nodes.push([row[0], row[1]]);
        weights.push(row[2]);
    }
    Ok(QuadratureRule { nodes, weights, order: actual })
}

/// Interior rule on the reference tetrahedron with exactness at least `order`.
/// Valid requests: 1..=8.
pub fn tetrahedron_rule(order: u32) -> Result<QuadratureRule<3>> {
    if order < 1 || order > MAX_TETRAHEDRON_ORDER {
        return Err(Error::Domain(format!(
            "tetrahedron quadrature order {order} outside the embedded table (1..={MAX_TETRAHEDRON_ORDER})"
        )));
    }
    let &(actual, data) = [&tables::TET_D1, &tables::TET_D2, &tables::TET_D9]
        .into_iter()
        .find(|(deg, _)| *deg >= order)
        .expect("catalog covers all supported orders");
    let mut nodes = Vec::with_capacity(data.len());
    let mut weights = Vec::with_capacity(data.len());
    for row in data {
        nodes.push([row[0], row[1], row[2]]);
        weights.push(row[3]);
    }
    Ok(QuadratureRule { nodes, weights, order: actual })
}

/// Gauss-Legendre rule with `npoints` nodes on [0, 1]; exactness 2n - 1.
/// Valid requests: 1..=12.
pub fn edge_rule(npoints: usize) -> Result<QuadratureRule<1>> {
    if npoints < 1 || npoints > MAX_EDGE_POINTS {
        return Err(Error::Domain(format!(
            "edge rule with {npoints} points outside supported range (1..={MAX_EDGE_POINTS})"
        )));
    }
    let (nodes, weights) = gauss_legendre(npoints);
    Ok(QuadratureRule {
        nodes: nodes.into_iter().map(|x| [0.5 * (x + 1.0)]).collect(),
        weights: weights.into_iter().map(|w| 0.5 * w).collect(),
        order: 2 * npoints as u32 - 1,
    })
}

/// Legendre polynomial value and derivative at `x` via the three-term
/// recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    if n == 0 {
        return (p0, 0.0);
    }
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre nodes/weights on [-1, 1]; Newton iteration from the
/// Chebyshev initial guess converges to machine precision in a few steps.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        let mut x = -(std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        if x.abs() < 1e-14 {
            x = 0.0;
        }
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p, d) = legendre_pair(n, x);
                dp = d;
                x -= p / d;
                break;
            }
        }
        if x.abs() < 1e-15 {
            x = 0.0;
            dp = legendre_pair(n, x).1;
        }
        nodes[k] = x;
        weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn factorial(n: u32) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    /// a! b! / (a + b + 2)!
    fn tri_moment(a: u32, b: u32) -> f64 {
        factorial(a) * factorial(b) / factorial(a + b + 2)
    }

    fn tet_moment(a: u32, b: u32, c: u32) -> f64 {
        factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3)
    }

    #[test]
    fn triangle_reference_measure_and_basic_moments() {
        let rule = triangle_rule(4).unwrap();
        let area: f64 = rule.weights.iter().sum();
        assert_abs_diff_eq!(area, 0.5, epsilon = 1e-14);
        let ix: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0])
            .sum();
        assert_abs_diff_eq!(ix, 1.0 / 6.0, epsilon = 1e-14);
        let ixy: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0] * p[1])
            .sum();
        assert_abs_diff_eq!(ixy, 1.0 / 24.0, epsilon = 1e-14);
    }

    #[test]
    fn triangle_order_ten_high_moment() {
        // order-10 rule integrates xi^4 eta^6 to 4! 6! / 12!
        let rule = triangle_rule(10).unwrap();
        let got: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0].powi(4) * p[1].powi(6))
            .sum();
        assert_abs_diff_eq!(got, tri_moment(4, 6), epsilon = 1e-12);
        assert_abs_diff_eq!(got, 1.0 / 27720.0, epsilon = 1e-12);
    }

    #[test]
    fn triangle_monomial_sweep_all_embedded_rules() {
        for order in 1..=MAX_TRIANGLE_ORDER {
            let rule = triangle_rule(order).unwrap();
            assert!(rule.order >= order);
            for a in 0..=rule.order {
                for b in 0..=(rule.order - a) {
                    let got: f64 = rule
                        .nodes
                        .iter()
                        .zip(&rule.weights)
                        .map(|(p, w)| w * p[0].powi(a as i32) * p[1].powi(b as i32))
                        .sum();
                    let exact = tri_moment(a, b);
                    assert!(
                        (got - exact).abs() < 1e-12,
                        "order {order} rule missed xi^{a} eta^{b}: {got} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn triangle_nodes_interior_weights_positive() {
        for order in 1..=MAX_TRIANGLE_ORDER {
            let rule = triangle_rule(order).unwrap();
            for (p, w) in rule.nodes.iter().zip(&rule.weights) {
                assert!(*w > 0.0);
                assert!(p[0] > 0.0 && p[1] > 0.0 && 1.0 - p[0] - p[1] > 0.0);
            }
        }
    }

    #[test]
    fn triangle_order_bounds() {
        assert!(triangle_rule(0).is_err());
        assert!(triangle_rule(15).is_err());
    }

    #[test]
    fn edge_rule_midpoint_and_cubic() {
        let r1 = edge_rule(1).unwrap();
        assert_eq!(r1.len(), 1);
        assert_abs_diff_eq!(r1.nodes[0][0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r1.weights[0], 1.0, epsilon = 1e-15);

        // 2-point rule integrates x^3 over [0,1] exactly
        let r2 = edge_rule(2).unwrap();
        let got: f64 = r2
            .nodes
            .iter()
            .zip(&r2.weights)
            .map(|(p, w)| w * p[0].powi(3))
            .sum();
        assert_abs_diff_eq!(got, 0.25, epsilon = 1e-15);
    }

    #[test]
    fn edge_rule_five_point_ninth_moment() {
        let r = edge_rule(5).unwrap();
        let got: f64 = r
            .nodes
            .iter()
            .zip(&r.weights)
            .map(|(p, w)| w * p[0].powi(9))
            .sum();
        assert_abs_diff_eq!(got, 0.1, epsilon = 1e-14);
    }

    #[test]
    fn edge_rule_sweep_and_bounds() {
        for n in 1..=MAX_EDGE_POINTS {
            let r = edge_rule(n).unwrap();
            let sum: f64 = r.weights.iter().sum();
            assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-14);
            for k in 0..=r.order {
                let got: f64 = r
                    .nodes
                    .iter()
                    .zip(&r.weights)
                    .map(|(p, w)| w * p[0].powi(k as i32))
                    .sum();
                assert!(
                    (got - 1.0 / (k as f64 + 1.0)).abs() < 1e-13,
                    "{n}-point rule missed x^{k}"
                );
            }
        }
        assert!(edge_rule(0).is_err());
        assert!(edge_rule(13).is_err());
    }

    #[test]
    fn tetrahedron_measure_and_moments() {
        let rule = tetrahedron_rule(2).unwrap();
        let vol: f64 = rule.weights.iter().sum();
        assert_abs_diff_eq!(vol, 1.0 / 6.0, epsilon = 1e-14);
        let ix: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0])
            .sum();
        assert_abs_diff_eq!(ix, 1.0 / 24.0, epsilon = 1e-14);
    }

    #[test]
    fn tetrahedron_order_eight_moment() {
        // (2!)^3 / 9!
        let rule = tetrahedron_rule(8).unwrap();
        let got: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0].powi(2) * p[1].powi(2) * p[2].powi(2))
            .sum();
        assert_abs_diff_eq!(got, 8.0 / 362880.0, epsilon = 1e-12);
    }

    #[test]
    fn tetrahedron_monomial_sweep() {
        for order in 1..=MAX_TETRAHEDRON_ORDER {
            let rule = tetrahedron_rule(order).unwrap();
            assert!(rule.order >= order);
            for (p, w) in rule.nodes.iter().zip(&rule.weights) {
                assert!(*w > 0.0);
                assert!(p.iter().all(|&c| c > 0.0) && 1.0 - p[0] - p[1] - p[2] > 0.0);
            }
            for a in 0..=rule.order {
                for b in 0..=(rule.order - a) {
                    for c in 0..=(rule.order - a - b) {
                        let got: f64 = rule
                            .nodes
                            .iter()
                            .zip(&rule.weights)
                            .map(|(p, w)| {
                                w * p[0].powi(a as i32) * p[1].powi(b as i32) * p[2].powi(c as i32)
                            })
                            .sum();
                        assert!((got - tet_moment(a, b, c)).abs() < 1e-12);
                    }
                }
            }
        }
        assert!(tetrahedron_rule(9).is_err());
    }
}
