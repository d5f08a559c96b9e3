//! Explicit fourth-order Runge-Kutta time stepping under CFL control. The
//! mass matrix is inverted once before the loop; each stage re-evaluates
//! only the boundary-flux load. The direction filter advances once per
//! completed step (optionally per stage).

use crate::boundary::BoundaryModel;
use crate::error::{Error, Result};
use crate::operator::DGOperator;
use crate::par::ExecMode;
use crate::state::{add_scaled, axpy, StateVector};

/// Coefficients above this magnitude abort the run with diagnostics.
pub const BLOWUP_LIMIT: f64 = 1e12;

/// Smallest step count satisfying lambda_max * (T/M) / h <= 0.9 * k_cfl.
/// `k_cfl` defaults to the 1/(2P+1) stability bound of the scheme.
pub fn cfl_steps(t_final: f64, h: f64, lambda_max: f64, k_cfl: Option<f64>, p: usize) -> usize {
    let k = k_cfl.unwrap_or(1.0 / (2.0 * p as f64 + 1.0));
    let m = (t_final * lambda_max / (0.9 * k * h)).ceil();
    (m as usize).max(1)
}

/// Reusable buffers for one RK4 step.
#[derive(Debug)]
pub struct Rk4Scratch {
    stage_in: Vec<f64>,
    z: Vec<f64>,
    acc: Vec<f64>,
    sx: Vec<f64>,
    rho_traces: Vec<f64>,
    phi: Vec<f64>,
    u_traces: Vec<[f64; 2]>,
}

impl Rk4Scratch {
    pub fn new(op: &DGOperator) -> Self {
        let len = op.layout.len();
        let n_bq = op.boundary.n_points();
        Self {
            stage_in: vec![0.0; len],
            z: vec![0.0; len],
            acc: vec![0.0; len],
            sx: vec![0.0; len],
            rho_traces: vec![0.0; n_bq],
            phi: vec![0.0; n_bq],
            u_traces: vec![[0.0; 2]; n_bq],
        }
    }
}

/// Classical RK4 on y' = f(t, y) with preallocated buffers: four stage
/// solves with boundary data at t, t + dt/2, t + dt/2, t + dt, combined as
/// y + z1/6 + z2/3 + z3/3 + z4/6 where z_k = dt * f(.).
pub fn rk4_generic<F>(
    y: &mut [f64],
    t: f64,
    dt: f64,
    stage_in: &mut [f64],
    z: &mut [f64],
    acc: &mut [f64],
    mut f: F,
) -> Result<()>
where
    F: FnMut(f64, &[f64], &mut [f64]) -> Result<()>,
{
    // z1
    f(t, y, z)?;
    acc.copy_from_slice(y);
    axpy(dt / 6.0, z, acc);
    // z2
    add_scaled(y, 0.5 * dt, z, stage_in);
    f(t + 0.5 * dt, stage_in, z)?;
    axpy(dt / 3.0, z, acc);
    // z3
    add_scaled(y, 0.5 * dt, z, stage_in);
    f(t + 0.5 * dt, stage_in, z)?;
    axpy(dt / 3.0, z, acc);
    // z4
    add_scaled(y, dt, z, stage_in);
    f(t + dt, stage_in, z)?;
    axpy(dt / 6.0, z, acc);
    y.copy_from_slice(acc);
    Ok(())
}

/// One RK4 step of the semi-discrete system. The filter state is frozen
/// within the step unless `filter_per_stage` is set on the model.
pub fn rk4_step(
    op: &DGOperator,
    model: &mut BoundaryModel,
    state: &mut StateVector,
    t: f64,
    dt: f64,
    mode: ExecMode,
    scratch: &mut Rk4Scratch,
) -> Result<()> {
    let Rk4Scratch { stage_in, z, acc, sx, rho_traces, phi, u_traces } = scratch;
    let per_stage = model.filter_per_stage;
    let mut stage = |model: &mut BoundaryModel, ts: f64, y: &[f64], out: &mut [f64]| -> Result<()> {
        op.boundary_rho_traces(y, rho_traces, mode);
        if per_stage {
            op.boundary_velocity_traces(y, u_traces, mode);
            model.filter_update_all(op, u_traces);
        }
        model.flux_values(op, rho_traces, ts, phi, mode);
        // out = f(ts, y) = M^{-1} (-S0 y - b(phi))
        op.apply_rhs_into(y, phi, sx, out, 1.0, mode)
    };

    // inline rk4_generic to thread `model` through the closure without
    // aliasing headaches
    stage(model, t, &state.data, z)?;
    acc.copy_from_slice(&state.data);
    axpy(dt / 6.0, z, acc);
    add_scaled(&state.data, 0.5 * dt, z, stage_in);
    stage(model, t + 0.5 * dt, stage_in, z)?;
    axpy(dt / 3.0, z, acc);
    add_scaled(&state.data, 0.5 * dt, z, stage_in);
    stage(model, t + 0.5 * dt, stage_in, z)?;
    axpy(dt / 3.0, z, acc);
    add_scaled(&state.data, dt, z, stage_in);
    stage(model, t + dt, stage_in, z)?;
    axpy(dt / 6.0, z, acc);
    state.data.copy_from_slice(acc);

    for (i, v) in state.data.iter().enumerate() {
        if v.abs() > BLOWUP_LIMIT {
            let (field, element, mode_idx) = op.layout.unravel(i);
            return Err(Error::NonFinite {
                element,
                msg: format!(
                    "coefficient (field {field}, mode {mode_idx}) exceeded {BLOWUP_LIMIT:e}"
                ),
            });
        }
    }
    Ok(())
}

/// Point probe resolved to its containing element once at setup; `basis`
/// holds the modal values at the probe's reference coordinates.
#[derive(Debug, Clone)]
pub struct Probe {
    pub name: String,
    pub position: [f64; 2],
    pub element: usize,
    pub basis: Vec<f64>,
}

/// Norm record per step: L2 norms of rho, u1, u2 and pressure (p = c^2 rho).
#[derive(Debug, Clone, Copy)]
pub struct NormRecord {
    pub t: f64,
    pub rho: f64,
    pub u1: f64,
    pub u2: f64,
    pub pressure: f64,
}

#[derive(Debug)]
pub struct RunResult {
    pub final_state: StateVector,
    pub times: Vec<f64>,
    /// One pressure series per probe, length M + 1 (includes t = 0).
    pub probe_series: Vec<Vec<f64>>,
    pub norms: Vec<NormRecord>,
    pub steps: usize,
    pub dt: f64,
    pub step_loop_seconds: f64,
    /// Set when the loop aborted; partial series remain valid.
    pub error: Option<Error>,
}

pub struct TimeLoopConfig<'a> {
    pub t_final: f64,
    pub steps: usize,
    pub probes: &'a [Probe],
    pub mode: ExecMode,
    /// Step cadence for `on_snapshot`; 0 disables snapshots.
    pub snapshot_cadence: usize,
    /// Step cadence for the progress log; 0 disables it.
    pub log_cadence: usize,
}

fn probe_pressure(op: &DGOperator, probe: &Probe, state: &StateVector) -> f64 {
    let coeffs = state.element_coeffs(0, probe.element);
    let rho: f64 = probe.basis.iter().zip(coeffs).map(|(b, c)| b * c).sum();
    op.sound_speed * op.sound_speed * rho
}

/// March the system for `steps` uniform steps, recording probe pressures
/// and norms every step and calling `on_snapshot` on the configured cadence.
pub fn run<F>(
    op: &DGOperator,
    model: &mut BoundaryModel,
    initial_state: StateVector,
    config: &TimeLoopConfig,
    mut on_snapshot: F,
) -> RunResult
where
    F: FnMut(usize, f64, &StateVector),
{
    let dt = config.t_final / config.steps as f64;
    let mut state = initial_state;
    let mut scratch = Rk4Scratch::new(op);

    let mut times = Vec::with_capacity(config.steps + 1);
    let mut probe_series: Vec<Vec<f64>> =
        vec![Vec::with_capacity(config.steps + 1); config.probes.len()];
    let mut norms = Vec::with_capacity(config.steps + 1);

    let record =
        |t: f64, state: &StateVector, times: &mut Vec<f64>, series: &mut Vec<Vec<f64>>, norms: &mut Vec<NormRecord>| {
            times.push(t);
            for (pi, probe) in config.probes.iter().enumerate() {
                series[pi].push(probe_pressure(op, probe, state));
            }
            let rho = op.field_l2_norm(&state.data, 0);
            norms.push(NormRecord {
                t,
                rho,
                u1: op.field_l2_norm(&state.data, 1),
                u2: op.field_l2_norm(&state.data, 2),
                pressure: op.sound_speed * op.sound_speed * rho,
            });
        };

    record(0.0, &state, &mut times, &mut probe_series, &mut norms);
    if config.snapshot_cadence > 0 {
        on_snapshot(0, 0.0, &state);
    }

    let wall = std::time::Instant::now();
    let mut error = None;
    for step in 0..config.steps {
        let t = step as f64 * dt;
        if let Err(e) = rk4_step(op, model, &mut state, t, dt, config.mode, &mut scratch) {
            error = Some(match e {
                Error::NonFinite { element, msg } => Error::BlowUp {
                    step,
                    time: t,
                    msg: format!("element {element}: {msg}"),
                },
                other => other,
            });
            break;
        }
        let t_next = (step + 1) as f64 * dt;
        // direction filter advances on the committed step state
        op.boundary_velocity_traces(&state.data, &mut scratch.u_traces, config.mode);
        model.filter_update_all(op, &scratch.u_traces);

        record(t_next, &state, &mut times, &mut probe_series, &mut norms);
        if config.snapshot_cadence > 0 && (step + 1) % config.snapshot_cadence == 0 {
            on_snapshot(step + 1, t_next, &state);
        }
        if config.log_cadence > 0 && (step + 1) % config.log_cadence == 0 {
            let n = norms.last().unwrap();
            eprintln!(
                "step {:>6}/{} t = {:.4e} s  |rho| = {:.6e}  |u| = {:.6e}",
                step + 1,
                config.steps,
                t_next,
                n.rho,
                (n.u1 * n.u1 + n.u2 * n.u2).sqrt()
            );
        }
    }
    let step_loop_seconds = wall.elapsed().as_secs_f64();

    RunResult {
        final_state: state,
        times,
        probe_series,
        norms,
        steps: config.steps,
        dt,
        step_loop_seconds,
        error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cfl_steps_reference_case() {
        // T = 1e-5 s, h = 1e-3 m, lambda = 1481 m/s, k = 1/3 with the 0.9
        // safety factor: ceil(49.37) = 50
        assert_eq!(cfl_steps(1e-5, 1e-3, 1481.0, Some(1.0 / 3.0), 1), 50);
    }

    #[test]
    fn cfl_steps_scalings() {
        let m1 = cfl_steps(1e-5, 1e-3, 1481.0, None, 1);
        let m2 = cfl_steps(1e-5, 2e-3, 1481.0, None, 1);
        // doubling h halves M up to rounding
        assert!((m1 as f64 / m2 as f64 - 2.0).abs() < 0.05);
        // k_cfl ratio between P = 4 and P = 1 is (2*4+1)/(2*1+1) = 3
        let p1 = cfl_steps(1e-5, 1e-3, 1481.0, None, 1);
        let p4 = cfl_steps(1e-5, 1e-3, 1481.0, None, 4);
        assert!((p4 as f64 / p1 as f64 - 3.0).abs() < 0.05);
    }

    #[test]
    fn rk4_scalar_amplification_factor() {
        // y' = -y, dt = 0.1: the RK4 amplification is
        // 1 - h + h^2/2 - h^3/6 + h^4/24 = 0.9048375
        let mut y = [1.0f64];
        let mut a = [0.0];
        let mut b = [0.0];
        let mut c = [0.0];
        rk4_generic(&mut y, 0.0, 0.1, &mut a, &mut b, &mut c, |_, s, out| {
            out[0] = -s[0];
            Ok(())
        })
        .unwrap();
        assert_abs_diff_eq!(y[0], 0.9048375, epsilon = 1e-12);
    }

    #[test]
    fn rk4_zero_operator_keeps_state() {
        let mut y = [0.3, -0.7];
        let mut a = [0.0; 2];
        let mut b = [0.0; 2];
        let mut c = [0.0; 2];
        rk4_generic(&mut y, 0.0, 0.5, &mut a, &mut b, &mut c, |_, _, out| {
            out.fill(0.0);
            Ok(())
        })
        .unwrap();
        assert_eq!(y, [0.3, -0.7]);
    }

    #[test]
    fn rk4_reaches_fourth_order_on_scalar_problem() {
        // self-convergence of y' = sin(t) y against a fine reference
        let solve = |m: usize| -> f64 {
            let dt = 1.0 / m as f64;
            let mut y = [1.0f64];
            let mut a = [0.0];
            let mut b = [0.0];
            let mut c = [0.0];
            for k in 0..m {
                rk4_generic(&mut y, k as f64 * dt, dt, &mut a, &mut b, &mut c, |t, s, out| {
                    out[0] = t.sin() * s[0];
                    Ok(())
                })
                .unwrap();
            }
            y[0]
        };
        let reference = solve(1 << 12);
        let e1 = (solve(8) - reference).abs();
        let e2 = (solve(16) - reference).abs();
        let order = (e1 / e2).log2();
        assert!(order > 3.8, "observed order {order}");
    }
}
