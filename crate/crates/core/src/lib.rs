//! Data-bounded WENO interpolation and reconstruction kernels.
//!
//! This crate implements third- and fourth-order WENO-type interface
//! approximations whose values provably stay within the minimum and maximum
//! of their own stencil data ("data-bounded"), together with:
//!
//! * the closed-form admissibility regions for the nonlinear weights
//!   ([`region`]), parameterized by the smoothness ratio
//!   `r = Δ₋v / Δ₊v` of consecutive one-sided differences,
//! * several concrete weight families living inside those regions
//!   ([`weights`]),
//! * interface-value approximations from point values (interpolation) and
//!   cell averages (reconstruction), plus unlimited Lagrange baselines
//!   ([`approx`]),
//! * a 1D scalar hyperbolic conservation-law solver using the data-bounded
//!   WENO3 numerical flux with global Lax–Friedrichs splitting and SSP-RK3
//!   time stepping ([`solver`]),
//! * independent brute-force verification utilities: a dense-sampling
//!   boundedness oracle and convergence-rate estimation ([`verify`]).
//!
//! All computations use `f64` with explicit extended-real handling of the
//! smoothness ratio (±∞ is a legitimate value; the 0/0 case is resolved to 1
//! and flagged). No epsilon regularization is applied anywhere, so results
//! are bit-for-bit reproducible.

pub mod approx;
pub mod error;
pub mod grid;
pub mod region;
pub mod solver;
pub mod stencil;
pub mod verify;
pub mod weights;

pub use approx::{
    cell_averages, interp3_minus, interp3_plus, interp4_plus, lagrange3_plus, lagrange4_plus,
    recon3_plus, recon4_plus, sub_values_minus, sub_values_plus, InterfaceSide, InterfaceValue,
};
pub use error::CoreError;
pub use grid::{GridMode, UniformGrid};
pub use region::{
    corollary_j, corollary_k, in_weno_region, lemma1_interval, lemma2_interval, sample_region,
    theorem1_alpha_interval, weno_interval, RegionRow, RegionSide, WeightInterval,
};
pub use solver::{
    global_lf_split, semi_discrete_rhs, solve, ssp_rk3_step, weno3_flux, weno3_flux_fixed,
    Advection, Burgers, Flux, SolveConfig, SolveResult,
};
pub use stencil::{DataBounds, SmoothnessPair, Stencil3, Stencil4};
pub use verify::{
    admissible_alpha0_interval, brute_force_bounded, convergence_rates, error_norms,
    BoundednessReport, RateReport,
};
pub use weights::{
    beta0_eta, beta0_interp, beta0_rational, beta0_recon, mu0_eta, mu0_interp, mu0_rational,
    mu0_recon, omega0_scheme, OmegaVariant, WeightFamily, WeightPair,
};
