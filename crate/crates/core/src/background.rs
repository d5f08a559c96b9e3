//! Stationary background fields: density and sound speed are constant, the
//! velocity and pressure-gradient fields come from one of the supported
//! providers (rest, pipe Poiseuille, analytic callable, gridded CSV samples).

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Velocity, velocity gradient and pressure gradient at one point.
/// `grad_velocity[i][j]` is d u_i / d x_j.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FlowSample {
    pub velocity: [f64; 2],
    pub grad_velocity: [[f64; 2]; 2],
    pub grad_pressure: [f64; 2],
}

impl FlowSample {
    pub fn divergence(&self) -> f64 {
        self.grad_velocity[0][0] + self.grad_velocity[1][1]
    }
}

type AnalyticFn = dyn Fn(f64, f64) -> FlowSample + Send + Sync;

/// Velocity/pressure field provider.
#[derive(Clone)]
pub enum FlowField {
    Rest,
    /// Pipe flow along x: u(y) = (G / 4 mu) (R^2 - (y - R)^2) with walls at
    /// y = 0 and y = 2R, grad p = (-G, 0); G fixed by the centerline speed.
    Poiseuille { u_max: f64, radius: f64, mu: f64 },
    Analytic(Arc<AnalyticFn>),
    Gridded(Arc<GriddedField>),
}

impl fmt::Debug for FlowField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowField::Rest => write!(f, "Rest"),
            FlowField::Poiseuille { u_max, radius, mu } => f
                .debug_struct("Poiseuille")
                .field("u_max", u_max)
                .field("radius", radius)
                .field("mu", mu)
                .finish(),
            FlowField::Analytic(_) => write!(f, "Analytic(..)"),
            FlowField::Gridded(g) => write!(f, "Gridded({}x{})", g.nx, g.ny),
        }
    }
}

/// Stationary background state of the fluid.
#[derive(Debug, Clone)]
pub struct BackgroundFlow {
    /// Background density in kg/m^3 (constant, homogeneous fluid).
    pub rho_bar: f64,
    /// Speed of sound in m/s.
    pub sound_speed: f64,
    pub field: FlowField,
}

impl BackgroundFlow {
    pub fn new(rho_bar: f64, sound_speed: f64, field: FlowField) -> Result<Self> {
        if rho_bar <= 0.0 || sound_speed <= 0.0 {
            return Err(Error::Config(format!(
                "background needs rho_bar > 0 and c > 0 (got {rho_bar}, {sound_speed})"
            )));
        }
        Ok(Self { rho_bar, sound_speed, field })
    }

    pub fn at_rest(rho_bar: f64, sound_speed: f64) -> Result<Self> {
        Self::new(rho_bar, sound_speed, FlowField::Rest)
    }

    /// Field and gradient values at a point. Only gridded fields can fail
    /// (point outside the sample grid).
    pub fn sample(&self, x: f64, y: f64) -> Result<FlowSample> {
        match &self.field {
            FlowField::Rest => Ok(FlowSample::default()),
            FlowField::Poiseuille { u_max, radius, mu } => {
                Ok(poiseuille_sample(*u_max, *radius, *mu, y))
            }
            FlowField::Analytic(f) => Ok(f(x, y)),
            FlowField::Gridded(g) => g.sample(x, y),
        }
    }
}

/// Poiseuille field with the pressure gradient G chosen so the centerline
/// speed (y = R) equals `u_max`.
pub fn poiseuille(u_max: f64, radius: f64, mu: f64) -> Result<FlowField> {
    if u_max <= 0.0 || radius <= 0.0 || mu <= 0.0 {
        return Err(Error::Config(format!(
            "Poiseuille parameters must be positive (u_max = {u_max}, R = {radius}, mu = {mu})"
        )));
    }
    Ok(FlowField::Poiseuille { u_max, radius, mu })
}

fn poiseuille_sample(u_max: f64, radius: f64, _mu: f64, y: f64) -> FlowSample {
    // G/(4 mu) = u_max / R^2 regardless of mu; mu only sets the magnitude of
    // the pressure gradient G = 4 mu u_max / R^2
    let g_over_4mu = u_max / (radius * radius);
    let u = g_over_4mu * (radius * radius - (y - radius) * (y - radius));
    let du_dy = 2.0 * g_over_4mu * (radius - y);
    let g = 4.0 * _mu * u_max / (radius * radius);
    FlowSample {
        velocity: [u, 0.0],
        grad_velocity: [[0.0, du_dy], [0.0, 0.0]],
        grad_pressure: [-g, 0.0],
    }
}

/// Bilinearly interpolated samples on a rectilinear grid; gradients are the
/// analytic gradients of the interpolant.
#[derive(Debug, Clone)]
pub struct GriddedField {
    nx: usize,
    ny: usize,
    xs: Vec<f64>,
    ys: Vec<f64>,
    u: Vec<f64>,
    v: Vec<f64>,
    p: Vec<f64>,
}

impl GriddedField {
    /// Parse the CSV schema `x,y,u,v,p` (header row required, row-major:
    /// y varies per row block, x fastest).
    pub fn from_csv(path: impl AsRef<Path>) -> Result<Arc<Self>> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text).map(Arc::new)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<[f64; 5]> = Vec::new();
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Config("background CSV is empty".into()))?;
        let cols: Vec<String> = header.split(',').map(|c| c.trim().to_lowercase()).collect();
        if cols != ["x", "y", "u", "v", "p"] {
            return Err(Error::Config(format!(
                "background CSV header must be 'x,y,u,v,p' (got '{header}')"
            )));
        }
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 5 {
                return Err(Error::Config(format!("background CSV row {} needs 5 fields", i + 2)));
            }
            let mut row = [0.0; 5];
            for (k, f) in fields.iter().enumerate() {
                row[k] = f.trim().parse().map_err(|_| {
                    Error::Config(format!("background CSV row {}: bad number '{f}'", i + 2))
                })?;
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Config("background CSV has no data rows".into()));
        }
        // infer the rectilinear structure: x fastest, unique sorted axes
        let mut xs: Vec<f64> = Vec::new();
        for row in &rows {
            if xs.contains(&row[0]) {
                break;
            }
            xs.push(row[0]);
        }
        let nx = xs.len();
        if nx < 2 || rows.len() % nx != 0 {
            return Err(Error::Config("background CSV is not a rectilinear x-fastest grid".into()));
        }
        let ny = rows.len() / nx;
        if ny < 2 {
            return Err(Error::Config("background CSV needs at least 2 rows in y".into()));
        }
        let ys: Vec<f64> = (0..ny).map(|j| rows[j * nx][1]).collect();
        for j in 0..ny {
            for i in 0..nx {
                let row = &rows[j * nx + i];
                if (row[0] - xs[i]).abs() > 1e-12 || (row[1] - ys[j]).abs() > 1e-12 {
                    return Err(Error::Config(format!(
                        "background CSV row {} breaks the row-major grid ordering",
                        j * nx + i + 2
                    )));
                }
            }
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) || ys.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config("background CSV axes must be strictly increasing".into()));
        }
        let u = rows.iter().map(|r| r[2]).collect();
        let v = rows.iter().map(|r| r[3]).collect();
        let p = rows.iter().map(|r| r[4]).collect();
        Ok(Self { nx, ny, xs, ys, u, v, p })
    }

    fn bracket(axis: &[f64], value: f64) -> Option<usize> {
        if value < axis[0] || value > *axis.last().unwrap() {
            return None;
        }
        let i = axis.partition_point(|&a| a <= value);
        Some(i.clamp(1, axis.len() - 1) - 1)
    }

    pub fn sample(&self, x: f64, y: f64) -> Result<FlowSample> {
        let i = Self::bracket(&self.xs, x)
            .ok_or_else(|| Error::Domain(format!("point x = {x} outside the background grid")))?;
        let j = Self::bracket(&self.ys, y)
            .ok_or_else(|| Error::Domain(format!("point y = {y} outside the background grid")))?;
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let (y0, y1) = (self.ys[j], self.ys[j + 1]);
        let hx = x1 - x0;
        let hy = y1 - y0;
        let tx = (x - x0) / hx;
        let ty = (y - y0) / hy;
        let corner = |field: &[f64], di: usize, dj: usize| field[(j + dj) * self.nx + i + di];
        let bilinear = |field: &[f64]| -> (f64, f64, f64) {
            let f00 = corner(field, 0, 0);
            let f10 = corner(field, 1, 0);
            let f01 = corner(field, 0, 1);
            let f11 = corner(field, 1, 1);
            let value = f00 * (1.0 - tx) * (1.0 - ty)
                + f10 * tx * (1.0 - ty)
                + f01 * (1.0 - tx) * ty
                + f11 * tx * ty;
            let dx = ((f10 - f00) * (1.0 - ty) + (f11 - f01) * ty) / hx;
            let dy = ((f01 - f00) * (1.0 - tx) + (f11 - f10) * tx) / hy;
            (value, dx, dy)
        };
        let (u, du_dx, du_dy) = bilinear(&self.u);
        let (v, dv_dx, dv_dy) = bilinear(&self.v);
        let (_, dp_dx, dp_dy) = bilinear(&self.p);
        Ok(FlowSample {
            velocity: [u, v],
            grad_velocity: [[du_dx, du_dy], [dv_dx, dv_dy]],
            grad_pressure: [dp_dx, dp_dy],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rest_is_identically_zero() {
        let flow = BackgroundFlow::at_rest(997.0, 1481.0).unwrap();
        let s = flow.sample(0.013, 0.007).unwrap();
        assert_eq!(s, FlowSample::default());
    }

    #[test]
    fn poiseuille_centerline_walls_and_average() {
        let field = poiseuille(20.0, 0.02, 1.0016e-3).unwrap();
        let flow = BackgroundFlow::new(997.0, 1481.0, field).unwrap();
        assert_abs_diff_eq!(flow.sample(0.0, 0.02).unwrap().velocity[0], 20.0, epsilon = 1e-12);
        assert_abs_diff_eq!(flow.sample(0.0, 0.0).unwrap().velocity[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(flow.sample(0.0, 0.04).unwrap().velocity[0], 0.0, epsilon = 1e-12);
        // cross-section average of the parabola is 2/3 of the peak
        let n = 20_000;
        let avg: f64 = (0..n)
            .map(|k| {
                let y = (k as f64 + 0.5) / n as f64 * 0.04;
                flow.sample(0.0, y).unwrap().velocity[0]
            })
            .sum::<f64>()
            / n as f64;
        assert_abs_diff_eq!(avg, 2.0 / 3.0 * 20.0, epsilon = 1e-4);
    }

    #[test]
    fn poiseuille_shear_matches_analytic_derivative() {
        let flow =
            BackgroundFlow::new(997.0, 1481.0, poiseuille(20.0, 0.02, 1.0016e-3).unwrap()).unwrap();
        // d u / d y = 2 u_max (R - y) / R^2 = 1000 1/s at y = 0.01
        let s = flow.sample(0.0, 0.01).unwrap();
        assert_abs_diff_eq!(s.grad_velocity[0][1], 1000.0, epsilon = 1e-9);
        // divergence-free: v = 0 and u independent of x
        assert_eq!(s.divergence(), 0.0);
        // pressure gradient is constant (-G, 0)
        let g = 4.0 * 1.0016e-3 * 20.0 / (0.02 * 0.02);
        assert_abs_diff_eq!(s.grad_pressure[0], -g, epsilon = 1e-15);
    }

    #[test]
    fn gradients_match_finite_differences() {
        let flow =
            BackgroundFlow::new(997.0, 1481.0, poiseuille(20.0, 0.02, 1.0016e-3).unwrap()).unwrap();
        let h = 1e-7;
        for &y in &[0.005, 0.017, 0.031] {
            let s = flow.sample(0.01, y).unwrap();
            let up = flow.sample(0.01, y + h).unwrap().velocity[0];
            let dn = flow.sample(0.01, y - h).unwrap().velocity[0];
            let fd = (up - dn) / (2.0 * h);
            let scale = 1.0 + fd.abs();
            assert!((s.grad_velocity[0][1] - fd).abs() / scale < 1e-6);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(poiseuille(0.0, 0.02, 1e-3).is_err());
        assert!(poiseuille(20.0, -0.02, 1e-3).is_err());
        assert!(BackgroundFlow::at_rest(-1.0, 1481.0).is_err());
    }

    fn poiseuille_csv(nx: usize, ny: usize) -> String {
        // sample the analytic Poiseuille field on a grid over [0,0.02]x[0,0.04]
        let mut out = String::from("x,y,u,v,p\n");
        let g = 4.0 * 1.0016e-3 * 20.0 / (0.02 * 0.02);
        for j in 0..ny {
            for i in 0..nx {
                let x = i as f64 / (nx - 1) as f64 * 0.02;
                let y = j as f64 / (ny - 1) as f64 * 0.04;
                let u = 20.0 / (0.02 * 0.02) * (0.02 * 0.02 - (y - 0.02) * (y - 0.02));
                out.push_str(&format!("{x},{y},{u},0,{}\n", -g * x));
            }
        }
        out
    }

    #[test]
    fn gridded_samples_track_the_analytic_field() {
        let grid = GriddedField::parse(&poiseuille_csv(50, 50)).unwrap();
        let analytic =
            BackgroundFlow::new(997.0, 1481.0, poiseuille(20.0, 0.02, 1.0016e-3).unwrap()).unwrap();
        for &(x, y) in &[(0.0031, 0.0113), (0.0177, 0.0331), (0.0099, 0.0201)] {
            let g = grid.sample(x, y).unwrap();
            let a = analytic.sample(x, y).unwrap();
            let rel = (g.velocity[0] - a.velocity[0]).abs() / a.velocity[0].abs().max(1e-30);
            assert!(rel < 1e-3, "off-grid probe at ({x},{y}): rel = {rel}");
            // constant pressure gradient is reproduced exactly by bilinear cells
            assert_abs_diff_eq!(g.grad_pressure[0], a.grad_pressure[0], epsilon = 1e-9);
        }
    }

    #[test]
    fn gridded_out_of_range_is_an_error() {
        let grid = GriddedField::parse(&poiseuille_csv(10, 10)).unwrap();
        assert!(grid.sample(-0.001, 0.01).is_err());
        assert!(grid.sample(0.01, 0.05).is_err());
    }

    #[test]
    fn gridded_rejects_malformed_input() {
        assert!(GriddedField::parse("").is_err());
        assert!(GriddedField::parse("a,b,c\n1,2,3\n").is_err());
        assert!(GriddedField::parse("x,y,u,v,p\n0,0,1,0,0\n").is_err());
    }
}
