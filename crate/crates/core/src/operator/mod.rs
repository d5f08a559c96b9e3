//! Semi-discrete operator M u' + S(t) u = 0: diagonal mass, the constant
//! interior matrix S0 (volume terms, internal-edge Lax-Friedrichs fluxes and
//! the boundary terms that multiply the unknowns), and the boundary-flux
//! load that is re-evaluated every stage.
//!
//! Sign convention: S0 carries the terms as they appear on the left-hand
//! side of the weak forms, so the right-hand side of u' = f(t, u) is
//! M^{-1} (-S0 u - b(Phi)).

mod bsr;

pub use bsr::{BlockCsr, BlockCsrBuilder};

use crate::background::{BackgroundFlow, FlowSample};
use crate::basis::ElementSpace;
use crate::error::{Error, Result};
use crate::mesh::{affine_map, AffineMap, EdgeConnectivity, Mesh};
use crate::par::{for_each_chunk, map_indexed, ExecMode};
use crate::state::{Layout, StateVector, N_FIELDS};

/// Which wave-speed bound feeds the Lax-Friedrichs penalty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LambdaSpec {
    /// max(|u_bar . n| + c) over internal edge quadrature points (default).
    Computed,
    /// Frozen user value (e.g. the sound speed).
    Fixed(f64),
    /// Per-edge bound c + max |u_bar . n| on that edge.
    PerEdge,
}

impl Default for LambdaSpec {
    fn default() -> Self {
        LambdaSpec::Computed
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OperatorConfig {
    pub lambda: LambdaSpec,
}

/// Flattened quadrature data for the tagged boundary: everything the
/// stage-level flux evaluation needs, tabulated once.
#[derive(Debug, Clone)]
pub struct BoundaryTable {
    /// Gauss points per edge.
    pub n_q: usize,
    /// Physical points, indexed `edge * n_q + q`.
    pub points: Vec<[f64; 2]>,
    /// Combined weights w_q * |E|, same indexing.
    pub weights: Vec<f64>,
    /// Outward unit normal per edge.
    pub normals: Vec<[f64; 2]>,
    /// Physical tag per edge.
    pub tags: Vec<i32>,
    /// Owner element per edge.
    pub owners: Vec<usize>,
    /// Basis traces, indexed `(edge * n_q + q) * n_modes + m`.
    pub basis: Vec<f64>,
}

impl BoundaryTable {
    pub fn n_edges(&self) -> usize {
        self.normals.len()
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OperatorTimings {
    pub assembly_seconds: f64,
    pub mass_inversion_seconds: f64,
}

/// Assembled semi-discrete operator.
#[derive(Debug, Clone)]
pub struct DGOperator {
    pub layout: Layout,
    pub mass_diag: Vec<f64>,
    pub inv_mass_diag: Vec<f64>,
    pub s0: BlockCsr,
    pub boundary: BoundaryTable,
    pub lambda_max: f64,
    pub rho_bar: f64,
    pub sound_speed: f64,
    pub timings: OperatorTimings,
    pub warnings: Vec<String>,
}

/// Diagonal mass entries: |det J_K| for every mode and field of element K
/// (the reference basis is orthonormal).
pub fn assemble_mass(mesh: &Mesh, space: &ElementSpace) -> Vec<f64> {
    let layout = Layout::new(mesh.n_triangles(), space.n_modes);
    let mut diag = vec![0.0; layout.len()];
    for e in 0..mesh.n_triangles() {
        let det = affine_map(mesh, e).det.abs();
        for f in 0..N_FIELDS {
            let start = layout.idx(f, e, 0);
            diag[start..start + space.n_modes].fill(det);
        }
    }
    diag
}

/// Spectral-radius bound of the directed flux Jacobian: the LEE flux
/// matrices have eigenvalues {u_bar.n, u_bar.n +/- c}, so the bound is
/// max over internal edge quadrature points of |u_bar . n| + c.
pub fn lax_friedrichs_lambda(
    flow: &BackgroundFlow,
    mesh: &Mesh,
    connectivity: &EdgeConnectivity,
    edge_points: usize,
) -> Result<f64> {
    let rule = crate::quadrature::edge_rule(edge_points)?;
    let c = flow.sound_speed;
    let mut lambda: f64 = c;
    for edge in &connectivity.internal {
        let va = mesh.vertices[edge.vertices[0]];
        let vb = mesh.vertices[edge.vertices[1]];
        for node in &rule.nodes {
            let s = node[0];
            let x = va[0] + s * (vb[0] - va[0]);
            let y = va[1] + s * (vb[1] - va[1]);
            let sample = flow.sample(x, y)?;
            let un = sample.velocity[0] * edge.normal[0] + sample.velocity[1] * edge.normal[1];
            lambda = lambda.max(un.abs() + c);
        }
    }
    Ok(lambda)
}

/// Per-edge tabulation shared by the two side elements during assembly.
struct EdgeTab {
    /// w_q * |E|
    weights: Vec<f64>,
    /// u_bar . n at each point
    ubar_n: Vec<f64>,
    /// traces from K-, `[q * n_modes + m]`
    phi_minus: Vec<f64>,
    /// traces from K+
    phi_plus: Vec<f64>,
    /// Lax-Friedrichs speed for this edge (global or per-edge)
    lambda: f64,
}

fn edge_gauss_points(
    mesh: &Mesh,
    vertices: [usize; 2],
    rule: &crate::quadrature::QuadratureRule<1>,
) -> (Vec<[f64; 2]>, f64) {
    let va = mesh.vertices[vertices[0]];
    let vb = mesh.vertices[vertices[1]];
    let len = ((vb[0] - va[0]).powi(2) + (vb[1] - va[1]).powi(2)).sqrt();
    let pts = rule
        .nodes
        .iter()
        .map(|n| {
            let s = n[0];
            [va[0] + s * (vb[0] - va[0]), va[1] + s * (vb[1] - va[1])]
        })
        .collect();
    (pts, len)
}

fn trace_basis(space: &ElementSpace, map: &AffineMap, points: &[[f64; 2]]) -> Vec<f64> {
    let n = space.n_modes;
    let mut out = vec![0.0; points.len() * n];
    for (q, p) in points.iter().enumerate() {
        let r = map.pull_back(*p);
        space.eval_modes(r[0], r[1], &mut out[q * n..(q + 1) * n]);
    }
    out
}

/// Dense scratch for one element's rows: 3x3 field blocks for the element
/// itself and each edge neighbor.
struct ElementRows {
    /// sorted element ids: self plus edge neighbors
    elems: Vec<usize>,
    /// `[f][f_trial][local][m][n]`
    blocks: Vec<f64>,
    present: Vec<bool>,
    bs: usize,
}

impl ElementRows {
    fn new(elems: Vec<usize>, bs: usize) -> Self {
        let n_loc = elems.len();
        Self {
            elems,
            blocks: vec![0.0; N_FIELDS * N_FIELDS * n_loc * bs * bs],
            present: vec![false; N_FIELDS * N_FIELDS * n_loc],
            bs,
        }
    }

    fn local_of(&self, elem: usize) -> usize {
        self.elems.binary_search(&elem).expect("element is in the adjacency list")
    }

    fn block_mut(&mut self, f: usize, f_trial: usize, local: usize) -> &mut [f64] {
        let n_loc = self.elems.len();
        let bs2 = self.bs * self.bs;
        let idx = (f * N_FIELDS + f_trial) * n_loc + local;
        self.present[idx] = true;
        &mut self.blocks[idx * bs2..(idx + 1) * bs2]
    }

    fn block(&self, f: usize, f_trial: usize, local: usize) -> Option<&[f64]> {
        let n_loc = self.elems.len();
        let bs2 = self.bs * self.bs;
        let idx = (f * N_FIELDS + f_trial) * n_loc + local;
        if !self.present[idx] {
            return None;
        }
        let b = &self.blocks[idx * bs2..(idx + 1) * bs2];
        // drop blocks that cancelled or never accumulated anything nonzero
        if b.iter().all(|&v| v == 0.0) {
            None
        } else {
            Some(b)
        }
    }
}

/// rank-1 accumulation: block[m][n] += coef * a[m] * b[n]
fn rank1(block: &mut [f64], bs: usize, coef: f64, a: &[f64], b: &[f64]) {
    if coef == 0.0 {
        return;
    }
    for m in 0..bs {
        let ca = coef * a[m];
        let row = &mut block[m * bs..m * bs + bs];
        for n in 0..bs {
            row[n] += ca * b[n];
        }
    }
}

struct AssemblyContext<'a> {
    mesh: &'a Mesh,
    space: &'a ElementSpace,
    flow: &'a BackgroundFlow,
    maps: Vec<AffineMap>,
    edge_tabs: Vec<EdgeTab>,
    /// per element: (internal edge index, is_minus_side) sorted by edge index
    elem_edges: Vec<Vec<(usize, bool)>>,
    /// per element: boundary edge indices
    elem_bedges: Vec<Vec<usize>>,
    boundary: BoundaryTable,
    connectivity: &'a EdgeConnectivity,
}

fn side_normal_sign(is_minus: bool) -> f64 {
    // the stored normal points out of K-, so K- accumulates +Upsilon and K+
    // accumulates -Upsilon
    if is_minus {
        1.0
    } else {
        -1.0
    }
}

fn prepare<'a>(
    mesh: &'a Mesh,
    connectivity: &'a EdgeConnectivity,
    space: &'a ElementSpace,
    flow: &'a BackgroundFlow,
    lambda_spec: LambdaSpec,
    mode: ExecMode,
) -> Result<(AssemblyContext<'a>, f64)> {
    let ne = mesh.n_triangles();
    let maps: Vec<AffineMap> = map_indexed(mode, ne, |e| affine_map(mesh, e));

    let lambda_global = match lambda_spec {
        LambdaSpec::Fixed(v) => v,
        _ => lax_friedrichs_lambda(flow, mesh, connectivity, space.edge_rule.len())?,
    };

    let edge_tabs: Vec<Result<EdgeTab>> =
        map_indexed(mode, connectivity.internal.len(), |ei| {
            let edge = &connectivity.internal[ei];
            let (points, len) = edge_gauss_points(mesh, edge.vertices, &space.edge_rule);
            let mut ubar_n = Vec::with_capacity(points.len());
            let mut lambda_edge: f64 = flow.sound_speed;
            for p in &points {
                let s = flow.sample(p[0], p[1])?;
                if !s.velocity.iter().all(|v| v.is_finite()) {
                    return Err(Error::Domain(format!(
                        "non-finite background sample at ({}, {})",
                        p[0], p[1]
                    )));
                }
                let un = s.velocity[0] * edge.normal[0] + s.velocity[1] * edge.normal[1];
                ubar_n.push(un);
                lambda_edge = lambda_edge.max(un.abs() + flow.sound_speed);
            }
            let lambda = match lambda_spec {
                LambdaSpec::PerEdge => lambda_edge,
                _ => lambda_global,
            };
            Ok(EdgeTab {
                weights: space.edge_rule.weights.iter().map(|w| w * len).collect(),
                ubar_n,
                phi_minus: trace_basis(space, &maps[edge.minus.0], &points),
                phi_plus: trace_basis(space, &maps[edge.plus.0], &points),
                lambda,
            })
        });
    let edge_tabs: Vec<EdgeTab> = edge_tabs.into_iter().collect::<Result<_>>()?;

    let n_q = space.edge_rule.len();
    let nb = connectivity.boundary.len();
    let mut boundary = BoundaryTable {
        n_q,
        points: vec![[0.0; 2]; nb * n_q],
        weights: vec![0.0; nb * n_q],
        normals: vec![[0.0; 2]; nb],
        tags: vec![0; nb],
        owners: vec![0; nb],
        basis: vec![0.0; nb * n_q * space.n_modes],
    };
    for (bi, edge) in connectivity.boundary.iter().enumerate() {
        let (points, len) = edge_gauss_points(mesh, edge.vertices, &space.edge_rule);
        let basis = trace_basis(space, &maps[edge.owner.0], &points);
        boundary.basis[bi * n_q * space.n_modes..(bi + 1) * n_q * space.n_modes]
            .copy_from_slice(&basis);
        for q in 0..n_q {
            boundary.points[bi * n_q + q] = points[q];
            boundary.weights[bi * n_q + q] = space.edge_rule.weights[q] * len;
        }
        boundary.normals[bi] = edge.normal;
        boundary.tags[bi] = edge.tag;
        boundary.owners[bi] = edge.owner.0;
    }

    let mut elem_edges = vec![Vec::new(); ne];
    for (ei, edge) in connectivity.internal.iter().enumerate() {
        elem_edges[edge.minus.0].push((ei, true));
        elem_edges[edge.plus.0].push((ei, false));
    }
    let mut elem_bedges = vec![Vec::new(); ne];
    for (bi, edge) in connectivity.boundary.iter().enumerate() {
        elem_bedges[edge.owner.0].push(bi);
    }

    Ok((
        AssemblyContext {
            mesh,
            space,
            flow,
            maps,
            edge_tabs,
            elem_edges,
            elem_bedges,
            boundary,
            connectivity,
        },
        lambda_global,
    ))
}

fn assemble_element_rows(ctx: &AssemblyContext, e: usize) -> Result<ElementRows> {
    let space = ctx.space;
    let bs = space.n_modes;
    let flow = ctx.flow;
    let rho_bar = flow.rho_bar;
    let c2_over_rho = flow.sound_speed * flow.sound_speed / rho_bar;
    let map = &ctx.maps[e];
    let det = map.det.abs();

    let mut elems: Vec<usize> = vec![e];
    for &(ei, _) in &ctx.elem_edges[e] {
        let edge = &ctx.connectivity.internal[ei];
        let other = if edge.minus.0 == e { edge.plus.0 } else { edge.minus.0 };
        elems.push(other);
    }
    elems.sort_unstable();
    elems.dedup();
    let mut rows = ElementRows::new(elems, bs);
    let self_local = rows.local_of(e);

    // ----- volume terms
    let n_q = space.volume_rule.len();
    let mut phys_grad = vec![[0.0f64; 2]; n_q * bs];
    for q in 0..n_q {
        for m in 0..bs {
            phys_grad[q * bs + m] = map.push_gradient(space.grad_phi[q * bs + m]);
        }
    }
    let mut samples = Vec::with_capacity(n_q);
    for q in 0..n_q {
        let node = space.volume_rule.nodes[q];
        let p = map.apply([node[0], node[1]]);
        let s = flow.sample(p[0], p[1])?;
        let finite = s.velocity.iter().all(|v| v.is_finite())
            && s.grad_velocity.iter().flatten().all(|v| v.is_finite())
            && s.grad_pressure.iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::Domain(format!(
                "non-finite background sample at ({}, {})",
                p[0], p[1]
            )));
        }
        samples.push(s);
    }

    let mut ubar_grad_m = vec![0.0f64; bs];
    for q in 0..n_q {
        let w = space.volume_rule.weights[q] * det;
        let s: &FlowSample = &samples[q];
        let phi = &space.phi[q * bs..(q + 1) * bs];
        for m in 0..bs {
            let g = phys_grad[q * bs + m];
            ubar_grad_m[m] = s.velocity[0] * g[0] + s.velocity[1] * g[1];
        }
        let div = s.divergence();
        let moving = s.velocity != [0.0, 0.0];

        // density row
        if moving {
            let block = rows.block_mut(0, 0, self_local);
            for m in 0..bs {
                let cm = -w * ubar_grad_m[m];
                for n in 0..bs {
                    block[m * bs + n] += cm * phi[n];
                }
            }
        }
        for j in 0..2 {
            let block = rows.block_mut(0, 1 + j, self_local);
            for m in 0..bs {
                let cm = -w * rho_bar * phys_grad[q * bs + m][j];
                for n in 0..bs {
                    block[m * bs + n] += cm * phi[n];
                }
            }
        }

        // momentum rows
        for i in 0..2 {
            let f = 1 + i;
            {
                let block = rows.block_mut(f, 0, self_local);
                for m in 0..bs {
                    let cm = -w
                        * (c2_over_rho * phys_grad[q * bs + m][i]
                            + s.grad_pressure[i] / (rho_bar * rho_bar) * phi[m]);
                    for n in 0..bs {
                        block[m * bs + n] += cm * phi[n];
                    }
                }
            }
            if moving || div != 0.0 {
                let block = rows.block_mut(f, f, self_local);
                for m in 0..bs {
                    let cm = -w * (ubar_grad_m[m] + div * phi[m]);
                    for n in 0..bs {
                        block[m * bs + n] += cm * phi[n];
                    }
                }
            }
            for j in 0..2 {
                let coef = s.grad_velocity[i][j];
                if coef != 0.0 {
                    let block = rows.block_mut(f, 1 + j, self_local);
                    rank1(block, bs, w * coef, phi, phi);
                }
            }
        }
    }

    // ----- boundary terms that multiply the unknowns (everything but Phi)
    for &bi in &ctx.elem_bedges[e] {
        let tab = &ctx.boundary;
        let n_qb = tab.n_q;
        let normal = tab.normals[bi];
        for q in 0..n_qb {
            let w = tab.weights[bi * n_qb + q];
            let p = tab.points[bi * n_qb + q];
            let s = flow.sample(p[0], p[1])?;
            let un = s.velocity[0] * normal[0] + s.velocity[1] * normal[1];
            let phi = &tab.basis[(bi * n_qb + q) * bs..(bi * n_qb + q + 1) * bs];
            if un != 0.0 {
                rank1(rows.block_mut(0, 0, self_local), bs, w * un, phi, phi);
                rank1(rows.block_mut(1, 1, self_local), bs, w * un, phi, phi);
                rank1(rows.block_mut(2, 2, self_local), bs, w * un, phi, phi);
            }
            for i in 0..2 {
                rank1(
                    rows.block_mut(1 + i, 0, self_local),
                    bs,
                    w * c2_over_rho * normal[i],
                    phi,
                    phi,
                );
            }
        }
    }

    // ----- internal-edge Lax-Friedrichs terms (this element's test rows)
    for &(ei, is_minus) in &ctx.elem_edges[e] {
        let edge = &ctx.connectivity.internal[ei];
        let tab = &ctx.edge_tabs[ei];
        let sigma = side_normal_sign(is_minus);
        let normal = edge.normal;
        let n_qe = tab.weights.len();
        let phi_test = if is_minus { &tab.phi_minus } else { &tab.phi_plus };

        // trial side: (traces, element local slot, jump sign of the side)
        let trial_sides = [
            (&tab.phi_minus, rows.local_of(edge.minus.0), -1.0),
            (&tab.phi_plus, rows.local_of(edge.plus.0), 1.0),
        ];
        for (phi_trial, local, jump_sign) in trial_sides {
            for q in 0..n_qe {
                let w = tab.weights[q];
                let phi_t = &phi_test[q * bs..(q + 1) * bs];
                let phi_c = &phi_trial[q * bs..(q + 1) * bs];
                let advect = 0.5 * tab.ubar_n[q] + jump_sign * 0.5 * tab.lambda;
                // rho row: mean of (rho u_bar + rho_bar u) . n plus penalty
                rank1(rows.block_mut(0, 0, local), bs, sigma * w * advect, phi_t, phi_c);
                for j in 0..2 {
                    rank1(
                        rows.block_mut(0, 1 + j, local),
                        bs,
                        sigma * w * 0.5 * rho_bar * normal[j],
                        phi_t,
                        phi_c,
                    );
                }
                // momentum rows: mean of (u_i u_bar + c^2/rho_bar rho e_i) . n plus penalty
                for i in 0..2 {
                    rank1(rows.block_mut(1 + i, 1 + i, local), bs, sigma * w * advect, phi_t, phi_c);
                    rank1(
                        rows.block_mut(1 + i, 0, local),
                        bs,
                        sigma * w * 0.5 * c2_over_rho * normal[i],
                        phi_t,
                        phi_c,
                    );
                }
            }
        }
    }

    Ok(rows)
}

/// Assemble S0 (everything in the weak forms except the boundary-flux load).
pub fn assemble_interior(
    mesh: &Mesh,
    connectivity: &EdgeConnectivity,
    space: &ElementSpace,
    flow: &BackgroundFlow,
    config: &OperatorConfig,
    mode: ExecMode,
) -> Result<BlockCsr> {
    let (ctx, _) = prepare(mesh, connectivity, space, flow, config.lambda, mode)?;
    build_s0(&ctx, mode)
}

fn build_s0(ctx: &AssemblyContext, mode: ExecMode) -> Result<BlockCsr> {
    let ne = ctx.mesh.n_triangles();
    let bs = ctx.space.n_modes;
    let all_rows: Vec<Result<ElementRows>> =
        map_indexed(mode, ne, |e| assemble_element_rows(ctx, e));
    let mut rows_by_elem = Vec::with_capacity(ne);
    for r in all_rows {
        rows_by_elem.push(r?);
    }

    let mut builder = BlockCsrBuilder::new(bs, N_FIELDS * ne);
    for f in 0..N_FIELDS {
        for e in 0..ne {
            let rows = &rows_by_elem[e];
            for f_trial in 0..N_FIELDS {
                for (local, &elem) in rows.elems.iter().enumerate() {
                    if let Some(block) = rows.block(f, f_trial, local) {
                        builder.push_block(f_trial * ne + elem, block);
                    }
                }
            }
            builder.finish_row();
        }
    }
    Ok(builder.build())
}

/// Assemble the full operator: mass, S0, boundary tables, wave-speed bound.
pub fn assemble(
    mesh: &Mesh,
    connectivity: &EdgeConnectivity,
    space: &ElementSpace,
    flow: &BackgroundFlow,
    config: &OperatorConfig,
    mode: ExecMode,
) -> Result<DGOperator> {
    let t0 = std::time::Instant::now();
    let layout = Layout::new(mesh.n_triangles(), space.n_modes);
    let (ctx, lambda_global) = prepare(mesh, connectivity, space, flow, config.lambda, mode)?;
    let s0 = build_s0(&ctx, mode)?;
    let mass_diag = assemble_mass(mesh, space);

    // subsonic sanity check at the volume quadrature points (warn only)
    let mut warnings = Vec::new();
    let c = flow.sound_speed;
    let mut supersonic = 0usize;
    'outer: for e in 0..mesh.n_triangles() {
        for node in &space.volume_rule.nodes {
            let p = ctx.maps[e].apply([node[0], node[1]]);
            let s = flow.sample(p[0], p[1])?;
            if (s.velocity[0].powi(2) + s.velocity[1].powi(2)).sqrt() >= c {
                supersonic += 1;
                if supersonic > 16 {
                    break 'outer;
                }
            }
        }
    }
    if supersonic > 0 {
        warnings.push(format!(
            "background flow is not subsonic at {supersonic}+ quadrature points"
        ));
    }

    let assembly_seconds = t0.elapsed().as_secs_f64();
    let t1 = std::time::Instant::now();
    let inv_mass_diag: Vec<f64> = mass_diag.iter().map(|&m| 1.0 / m).collect();
    let mass_inversion_seconds = t1.elapsed().as_secs_f64();

    Ok(DGOperator {
        layout,
        mass_diag,
        inv_mass_diag,
        s0,
        boundary: ctx.boundary,
        lambda_max: lambda_global,
        rho_bar: flow.rho_bar,
        sound_speed: flow.sound_speed,
        timings: OperatorTimings { assembly_seconds, mass_inversion_seconds },
        warnings,
    })
}

impl DGOperator {
    /// Density traces at every boundary quadrature point.
    pub fn boundary_rho_traces(&self, state: &[f64], out: &mut [f64], mode: ExecMode) {
        let bs = self.layout.n_modes;
        let n_q = self.boundary.n_q;
        debug_assert_eq!(out.len(), self.boundary.n_points());
        let owners = &self.boundary.owners;
        let basis = &self.boundary.basis;
        let layout = self.layout;
        for_each_chunk(mode, out, n_q, |start, chunk| {
            let edge = start / n_q;
            let coeff_start = layout.idx(0, owners[edge], 0);
            let coeffs = &state[coeff_start..coeff_start + bs];
            for (q, v) in chunk.iter_mut().enumerate() {
                let b = &basis[(edge * n_q + q) * bs..(edge * n_q + q + 1) * bs];
                *v = b.iter().zip(coeffs).map(|(phi, c)| phi * c).sum();
            }
        });
    }

    /// Velocity traces at every boundary quadrature point.
    pub fn boundary_velocity_traces(&self, state: &[f64], out: &mut [[f64; 2]], mode: ExecMode) {
        let bs = self.layout.n_modes;
        let n_q = self.boundary.n_q;
        debug_assert_eq!(out.len(), self.boundary.n_points());
        let owners = &self.boundary.owners;
        let basis = &self.boundary.basis;
        let layout = self.layout;
        for_each_chunk(mode, out, n_q, |start, chunk| {
            let edge = start / n_q;
            let u1_start = layout.idx(1, owners[edge], 0);
            let u2_start = layout.idx(2, owners[edge], 0);
            let u1 = &state[u1_start..u1_start + bs];
            let u2 = &state[u2_start..u2_start + bs];
            for (q, v) in chunk.iter_mut().enumerate() {
                let b = &basis[(edge * n_q + q) * bs..(edge * n_q + q + 1) * bs];
                let mut t = [0.0; 2];
                for m in 0..bs {
                    t[0] += b[m] * u1[m];
                    t[1] += b[m] * u2[m];
                }
                *v = t;
            }
        });
    }

    /// out = -scale * M^{-1} (S0 state + b(phi)); `sx` is scratch of state
    /// length. `phi` is indexed per boundary quadrature point.
    pub(crate) fn apply_rhs_into(
        &self,
        state: &[f64],
        phi: &[f64],
        sx: &mut [f64],
        out: &mut [f64],
        scale: f64,
        mode: ExecMode,
    ) -> Result<()> {
        debug_assert_eq!(phi.len(), self.boundary.n_points());
        self.s0.spmv(state, sx, mode);
        // scatter the boundary-flux load into the density rows
        let bs = self.layout.n_modes;
        let n_q = self.boundary.n_q;
        for edge in 0..self.boundary.n_edges() {
            let owner = self.boundary.owners[edge];
            let row_start = self.layout.idx(0, owner, 0);
            for q in 0..n_q {
                let load = self.boundary.weights[edge * n_q + q] * self.rho_bar * phi[edge * n_q + q];
                if load != 0.0 {
                    let b = &self.boundary.basis[(edge * n_q + q) * bs..(edge * n_q + q + 1) * bs];
                    for m in 0..bs {
                        sx[row_start + m] += load * b[m];
                    }
                }
            }
        }
        let inv_mass = &self.inv_mass_diag;
        let mut bad = usize::MAX;
        for i in 0..out.len() {
            let v = -scale * sx[i] * inv_mass[i];
            out[i] = v;
            if !v.is_finite() && bad == usize::MAX {
                bad = i;
            }
        }
        if bad != usize::MAX {
            let (field, element, mode_idx) = self.layout.unravel(bad);
            return Err(Error::NonFinite {
                element,
                msg: format!("field {field}, mode {mode_idx} became non-finite"),
            });
        }
        Ok(())
    }

    /// Public right-hand-side application: M^{-1} (-S0 u - b(phi)).
    pub fn apply_rhs(&self, state: &StateVector, phi: &[f64], mode: ExecMode) -> Result<StateVector> {
        let mut sx = vec![0.0; state.data.len()];
        let mut out = StateVector::zeros(state.layout);
        self.apply_rhs_into(&state.data, phi, &mut sx, &mut out.data, 1.0, mode)?;
        Ok(out)
    }

    /// L2 norm over the domain of one field (orthonormal basis: the mass
    /// matrix is diagonal, so norms reduce to weighted coefficient sums).
    pub fn field_l2_norm(&self, state: &[f64], field: usize) -> f64 {
        let bs = self.layout.n_modes;
        let mut acc = 0.0;
        for e in 0..self.layout.n_elements {
            let det = self.mass_diag[self.layout.idx(field, e, 0)];
            let start = self.layout.idx(field, e, 0);
            let mut s = 0.0;
            for m in 0..bs {
                let c = state[start + m];
                s += c * c;
            }
            acc += det * s;
        }
        acc.sqrt()
    }
}
