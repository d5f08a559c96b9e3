//! Modal element space: Jacobi polynomials, the orthonormal Dubiner basis
//! and its tabulation at quadrature nodes.

mod dubiner;
mod jacobi;

pub use dubiner::{dubiner2d_eval, dubiner2d_grad, dubiner3d_eval};
pub use jacobi::{jacobi_deriv, jacobi_eval};

use crate::error::{Error, Result};
use crate::quadrature::{edge_rule, triangle_rule, QuadratureRule};

/// Number of 2D modes for polynomial order `p`.
pub fn n_modes_2d(p: usize) -> usize {
    (p + 1) * (p + 2) / 2
}

/// Number of 3D modes for polynomial order `p`.
pub fn n_modes_3d(p: usize) -> usize {
    (p + 1) * (p + 2) * (p + 3) / 6
}

/// Mode indices in graded lexicographic order: (i + j) ascending, then i
/// ascending. This fixes the global coefficient indexing.
pub fn mode_indices_2d(p: usize) -> Vec<(usize, usize)> {
    let mut modes = Vec::with_capacity(n_modes_2d(p));
    for s in 0..=p {
        for i in 0..=s {
            modes.push((i, s - i));
        }
    }
    modes
}

/// Polynomial order, mode list, and basis tabulations at the attached
/// volume quadrature rule. Immutable after construction; shared by all
/// elements of a mesh (the basis lives on the reference triangle).
#[derive(Debug, Clone)]
pub struct ElementSpace {
    pub order: usize,
    pub modes: Vec<(usize, usize)>,
    pub n_modes: usize,
    /// Interior rule used for volume integrals (exactness >= 2P+1 by default).
    pub volume_rule: QuadratureRule<2>,
    /// Gauss-Legendre rule on [0,1] used for edge integrals (P+1 points).
    pub edge_rule: QuadratureRule<1>,
    /// Basis values at the volume nodes, `[q * n_modes + m]`.
    pub phi: Vec<f64>,
    /// Reference gradients at the volume nodes, `[q * n_modes + m]`.
    pub grad_phi: Vec<[f64; 2]>,
}

impl ElementSpace {
    /// Space of order `p >= 1` with the default quadrature pairing
    /// (volume exactness 2P+1, P+1 edge points).
    pub fn new(p: usize) -> Result<Self> {
        Self::with_orders(p, 2 * p as u32 + 1, p + 1)
    }

    pub fn with_orders(p: usize, volume_order: u32, edge_points: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::Config(format!("polynomial order must be >= 1 (got {p})")));
        }
        let modes = mode_indices_2d(p);
        let n_modes = modes.len();
        debug_assert_eq!(n_modes, n_modes_2d(p));
        let volume_rule = triangle_rule(volume_order)?;
        let edge = edge_rule(edge_points)?;
        let mut phi = vec![0.0; volume_rule.len() * n_modes];
        let mut grad_phi = vec![[0.0; 2]; volume_rule.len() * n_modes];
        for (q, node) in volume_rule.nodes.iter().enumerate() {
            for (m, &(i, j)) in modes.iter().enumerate() {
                phi[q * n_modes + m] = dubiner::dubiner2d_raw(i, j, node[0], node[1]);
                grad_phi[q * n_modes + m] = dubiner::dubiner2d_grad_raw(i, j, node[0], node[1]);
            }
        }
        Ok(Self { order: p, modes, n_modes, volume_rule, edge_rule: edge, phi, grad_phi })
    }

    /// Evaluate all modes at a reference point (closed triangle; the
    /// collapsed vertex is handled by the polynomial limit form).
    pub fn eval_modes(&self, xi: f64, eta: f64, out: &mut [f64]) {
        for (m, &(i, j)) in self.modes.iter().enumerate() {
            out[m] = dubiner::dubiner2d_raw(i, j, xi, eta);
        }
    }

    /// Evaluate all reference-gradient pairs at a reference point.
    pub fn eval_mode_grads(&self, xi: f64, eta: f64, out: &mut [[f64; 2]]) {
        for (m, &(i, j)) in self.modes.iter().enumerate() {
            out[m] = dubiner::dubiner2d_grad_raw(i, j, xi, eta);
        }
    }

    /// Tabulate values and reference gradients at an arbitrary rule.
    pub fn tabulate(&self, rule: &QuadratureRule<2>) -> (Vec<f64>, Vec<[f64; 2]>) {
        let mut phi = vec![0.0; rule.len() * self.n_modes];
        let mut grad = vec![[0.0; 2]; rule.len() * self.n_modes];
        for (q, node) in rule.nodes.iter().enumerate() {
            self.eval_modes(node[0], node[1], &mut phi[q * self.n_modes..(q + 1) * self.n_modes]);
            self.eval_mode_grads(
                node[0],
                node[1],
                &mut grad[q * self.n_modes..(q + 1) * self.n_modes],
            );
        }
        (phi, grad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_counts_match_formulas() {
        assert_eq!(n_modes_2d(1), 3);
        assert_eq!(n_modes_2d(4), 15);
        assert_eq!(n_modes_3d(2), 10);
        assert_eq!(n_modes_3d(4), 35);
        for p in 1..=6 {
            assert_eq!(mode_indices_2d(p).len(), n_modes_2d(p));
        }
    }

    #[test]
    fn mode_ordering_graded_lexicographic() {
        let modes = mode_indices_2d(2);
        assert_eq!(modes, vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn gram_matrix_identity_up_to_p6() {
        for p in 1..=6usize {
            let space = ElementSpace::new(p).unwrap();
            let n = space.n_modes;
            for a in 0..n {
                for b in 0..n {
                    let mut inner = 0.0;
                    for q in 0..space.volume_rule.len() {
                        inner += space.volume_rule.weights[q]
                            * space.phi[q * n + a]
                            * space.phi[q * n + b];
                    }
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (inner - expect).abs() < 1e-10,
                        "P = {p}: Gram({a},{b}) = {inner}"
                    );
                }
            }
        }
    }

    #[test]
    fn tabulated_gradients_match_finite_differences() {
        let space = ElementSpace::new(4).unwrap();
        let n = space.n_modes;
        let h = 1e-6;
        for (q, node) in space.volume_rule.nodes.iter().enumerate() {
            let mut vp = vec![0.0; n];
            let mut vm = vec![0.0; n];
            space.eval_modes(node[0] + h, node[1], &mut vp);
            space.eval_modes(node[0] - h, node[1], &mut vm);
            for m in 0..n {
                let fd = (vp[m] - vm[m]) / (2.0 * h);
                let g = space.grad_phi[q * n + m][0];
                let scale = 1.0 + g.abs();
                assert!((g - fd).abs() / scale < 1e-7);
            }
            space.eval_modes(node[0], node[1] + h, &mut vp);
            space.eval_modes(node[0], node[1] - h, &mut vm);
            for m in 0..n {
                let fd = (vp[m] - vm[m]) / (2.0 * h);
                let g = space.grad_phi[q * n + m][1];
                let scale = 1.0 + g.abs();
                assert!((g - fd).abs() / scale < 1e-7);
            }
        }
    }

    #[test]
    fn monomials_reproduced_by_projection() {
        // L2 projection of xi^a eta^b with a+b <= P reproduces the monomial
        // at every quadrature node.
        let p = 4usize;
        let space = ElementSpace::with_orders(p, (2 * p + 2) as u32, p + 1).unwrap();
        let n = space.n_modes;
        for a in 0..=p {
            for b in 0..=(p - a) {
                // coefficients of the projection in the orthonormal basis
                let mut coef = vec![0.0; n];
                for q in 0..space.volume_rule.len() {
                    let node = space.volume_rule.nodes[q];
                    let f = node[0].powi(a as i32) * node[1].powi(b as i32);
                    for m in 0..n {
                        coef[m] += space.volume_rule.weights[q] * f * space.phi[q * n + m];
                    }
                }
                for q in 0..space.volume_rule.len() {
                    let node = space.volume_rule.nodes[q];
                    let f = node[0].powi(a as i32) * node[1].powi(b as i32);
                    let recon: f64 = (0..n).map(|m| coef[m] * space.phi[q * n + m]).sum();
                    assert!(
                        (recon - f).abs() < 1e-10,
                        "monomial xi^{a} eta^{b} not reproduced: {recon} vs {f}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_order_zero() {
        assert!(ElementSpace::new(0).is_err());
    }
}
