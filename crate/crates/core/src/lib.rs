//! Runge-Kutta discontinuous Galerkin solver for the linearized Euler
//! equations on unstructured triangular meshes, with an orthonormal modal
//! basis on the reference simplex, Lax-Friedrichs coupling fluxes, and
//! time-domain absorbing/resistive impedance boundary conditions driven by
//! an online incidence-angle filter.
//!
//! The crate is organized along the solver pipeline:
//! mesh -> basis/quadrature -> background -> operator -> boundary -> time,
//! with [`sim`] providing the configuration-driven front end used by the
//! CLI (runs, convergence sweeps, transit-time estimation, exports).

pub mod background;
pub mod basis;
pub mod boundary;
pub mod error;
pub mod mesh;
pub mod operator;
pub mod par;
pub mod quadrature;
pub mod sim;
pub mod state;
pub mod time;

pub use error::{Error, Result};
pub use par::ExecMode;
