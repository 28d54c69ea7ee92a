//! Experiment drivers and CSV emission behind the `dbweno` benchmark CLI.
//!
//! Four experiments are provided, mirroring the library's validation suite:
//!
//! * [`experiments::converge_report`] — interface-error convergence study of
//!   the third/fourth-order data-bounded interpolations and reconstructions
//!   on `v(x) = sin(πx)`,
//! * [`experiments::boundedness_table`] — per-interface data-boundedness
//!   audit on the Runge and step functions, with unlimited Lagrange
//!   baselines,
//! * [`experiments::region_table`] — admissible weight-region boundaries and
//!   a chosen weight family sampled over a range of smoothness ratios,
//! * [`experiments::solve_experiment`] — conservation-law runs (advection /
//!   Burgers) with the data-bounded WENO3 flux.

pub mod experiments;
pub mod output;
