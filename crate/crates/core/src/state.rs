//! Global coefficient vector of the semi-discrete system.
//!
//! Layout: three field blocks ordered (rho, u1, u2); within a block the
//! coefficients are per-element, per-mode in the element space's mode order.
//! `idx(f, e, m) = f * n_elements * n_modes + e * n_modes + m`.

/// Index bookkeeping shared by states and operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub n_elements: usize,
    pub n_modes: usize,
}

pub const N_FIELDS: usize = 3;

impl Layout {
    pub fn new(n_elements: usize, n_modes: usize) -> Self {
        Self { n_elements, n_modes }
    }

    /// Scalar-field dimension N_{h,P}.
    pub fn n_hp(&self) -> usize {
        self.n_elements * self.n_modes
    }

    /// Full state length, (1 + d) N_{h,P}.
    pub fn len(&self) -> usize {
        N_FIELDS * self.n_hp()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn idx(&self, field: usize, element: usize, mode: usize) -> usize {
        debug_assert!(field < N_FIELDS && element < self.n_elements && mode < self.n_modes);
        field * self.n_hp() + element * self.n_modes + mode
    }

    /// Inverse of `idx`.
    pub fn unravel(&self, idx: usize) -> (usize, usize, usize) {
        let n_hp = self.n_hp();
        (idx / n_hp, (idx % n_hp) / self.n_modes, idx % self.n_modes)
    }

    /// Block index used by the operator: one block row per (field, element).
    pub fn block(&self, field: usize, element: usize) -> usize {
        field * self.n_elements + element
    }
}

/// Modal coefficients of (rho, u1, u2) over all elements.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub layout: Layout,
    pub data: Vec<f64>,
}

impl StateVector {
    pub fn zeros(layout: Layout) -> Self {
        Self { layout, data: vec![0.0; layout.len()] }
    }

    pub fn from_data(layout: Layout, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), layout.len());
        Self { layout, data }
    }

    pub fn coeff(&self, field: usize, element: usize, mode: usize) -> f64 {
        self.data[self.layout.idx(field, element, mode)]
    }

    pub fn coeff_mut(&mut self, field: usize, element: usize, mode: usize) -> &mut f64 {
        &mut self.data[self.layout.idx(field, element, mode)]
    }

    /// Per-field element slice of coefficients.
    pub fn element_coeffs(&self, field: usize, element: usize) -> &[f64] {
        let start = self.layout.idx(field, element, 0);
        &self.data[start..start + self.layout.n_modes]
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// y += a * x
pub fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// out = y + a * x
pub fn add_scaled(y: &[f64], a: f64, x: &[f64], out: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    debug_assert_eq!(x.len(), out.len());
    for i in 0..out.len() {
        out[i] = y[i] + a * x[i];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_round_trip() {
        let layout = Layout::new(5, 6);
        assert_eq!(layout.len(), 3 * 5 * 6);
        for f in 0..3 {
            for e in 0..5 {
                for m in 0..6 {
                    assert_eq!(layout.unravel(layout.idx(f, e, m)), (f, e, m));
                }
            }
        }
    }

    #[test]
    fn field_blocks_are_contiguous() {
        let layout = Layout::new(2, 3);
        assert_eq!(layout.idx(0, 0, 0), 0);
        assert_eq!(layout.idx(1, 0, 0), 6);
        assert_eq!(layout.idx(2, 1, 2), 17);
    }
}
