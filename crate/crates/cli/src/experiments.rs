//! Experiment drivers: convergence tables, boundedness audits, weight-region
//! tables, and conservation-law runs.
//!
//! Grid convention for the convergence study: a run labeled `n` uses
//! `m = n − 2` cell centers `x_j = −1 + (j + 1/2)h` with `h = 2/m` on the
//! periodic domain `[−1, 1]`, and evaluates the interface approximation at
//! all `m + 1` cell edges `−1 + k·h` (the edge at `±1` appears twice, once
//! per period image). The L¹ norm is `h` times the absolute error sum over
//! those `m + 1` edges. This is the sampling convention under which the
//! reference error tables reproduce.

use anyhow::{bail, Context, Result};
use dbweno_core::{
    cell_averages, interp3_plus, lagrange3_plus, lagrange4_plus, recon3_plus, recon4_plus,
    sample_region, solve, Advection, Burgers, GridMode, RateReport, SolveConfig, SolveResult,
    Stencil3, Stencil4, UniformGrid, WeightFamily,
};
use std::f64::consts::PI;

/// Test data generators from the boundedness/convergence experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// `sin(πx)`.
    Sine,
    /// `1/(1 + 25x²)`.
    Runge,
    /// `1` for `|x| ≤ 0.3`, `0` otherwise.
    Step,
}

impl TestFunction {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "sine" => Ok(TestFunction::Sine),
            "runge" => Ok(TestFunction::Runge),
            "step" => Ok(TestFunction::Step),
            other => bail!("unknown function {other:?} (expected sine, runge, or step)"),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            TestFunction::Sine => (PI * x).sin(),
            TestFunction::Runge => 1.0 / (1.0 + 25.0 * x * x),
            TestFunction::Step => {
                if x.abs() <= 0.3 {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

/// Interpolation (point values) or reconstruction (cell averages).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxMode {
    Interp,
    Recon,
}

impl ApproxMode {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "interp" => Ok(ApproxMode::Interp),
            "recon" => Ok(ApproxMode::Recon),
            other => bail!("unknown mode {other:?} (expected interp or recon)"),
        }
    }
}

/// Builds the periodic data array for one convergence grid: point values of
/// `sin(πx)` at the cell centers, or their per-cell averages.
fn sine_data(grid: &UniformGrid, mode: ApproxMode) -> Vec<f64> {
    match mode {
        ApproxMode::Interp => grid.centers().iter().map(|&x| (PI * x).sin()).collect(),
        ApproxMode::Recon => cell_averages(|x| (PI * x).sin(), grid),
    }
}

/// The data-bounded interface value at the plus interface of point `i`
/// (periodic indexing) for the requested order and mode.
fn db_interface_value(v: &[f64], i: usize, order: u8, mode: ApproxMode) -> f64 {
    let m = v.len();
    let im = (i + m - 1) % m;
    let ip = (i + 1) % m;
    let gmode = match mode {
        ApproxMode::Interp => GridMode::PointValues,
        ApproxMode::Recon => GridMode::CellAverages,
    };
    if order == 3 {
        let s = Stencil3::new(v[im], v[i], v[ip], gmode);
        match mode {
            ApproxMode::Interp => interp3_plus(&s, &WeightFamily::InterpBeta).value,
            ApproxMode::Recon => recon3_plus(&s).value,
        }
    } else {
        let ipp = (i + 2) % m;
        let s = Stencil4::new(v[im], v[i], v[ip], v[ipp], gmode);
        match mode {
            ApproxMode::Interp => {
                dbweno_core::interp4_plus(&s, &WeightFamily::InterpBeta, &WeightFamily::InterpMu)
                    .value
            }
            ApproxMode::Recon => recon4_plus(&s).value,
        }
    }
}

/// Convergence study of the order-3/4 data-bounded approximation of
/// `sin(πx)` over the doubling grid sizes `ns`.
pub fn converge_report(order: u8, mode: ApproxMode, ns: &[usize]) -> Result<RateReport> {
    if !(order == 3 || order == 4) {
        bail!("order must be 3 or 4, got {order}");
    }
    if ns.is_empty() {
        bail!("at least one grid size is required");
    }
    for w in ns.windows(2) {
        if w[1] != 2 * w[0] {
            bail!("grid sizes must double: {} does not follow {}", w[1], w[0]);
        }
    }
    let mut errors_linf = Vec::with_capacity(ns.len());
    let mut errors_l1 = Vec::with_capacity(ns.len());
    for &n in ns {
        if n < 8 {
            bail!("grid size {n} too small (need at least 8)");
        }
        let m = n - 2;
        let grid = UniformGrid::new(-1.0, 1.0, m).context("convergence grid")?;
        let v = sine_data(&grid, mode);
        let h = grid.dx;
        let mut linf = 0.0f64;
        let mut sum = 0.0f64;
        for k in 0..=m {
            let i = (k + m - 1) % m;
            let x_edge = -1.0 + k as f64 * h;
            let vh = db_interface_value(&v, i, order, mode);
            let err = (vh - (PI * x_edge).sin()).abs();
            linf = linf.max(err);
            sum += err;
        }
        errors_linf.push(linf);
        errors_l1.push(h * sum);
    }
    Ok(RateReport::new(ns.to_vec(), errors_linf, errors_l1)?)
}

/// One interface row of the boundedness audit.
#[derive(Debug, Clone, Copy)]
pub struct BoundednessRow {
    /// Interface position `x_{i+1/2}`.
    pub x: f64,
    pub db3: f64,
    pub db4: f64,
    pub lag3: f64,
    pub lag4: f64,
    /// Bounds of the three-point stencil (the order-3 reference band).
    pub m: f64,
    pub big_m: f64,
    pub viol3: bool,
    pub viol4: bool,
    pub viol_lag3: bool,
    pub viol_lag4: bool,
}

/// Violation counts per method over one boundedness audit.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundednessSummary {
    pub viol3: usize,
    pub viol4: usize,
    pub viol_lag3: usize,
    pub viol_lag4: usize,
}

/// Per-interface data-boundedness audit of the DB and Lagrange
/// approximations on `n` periodic cells over `[−1, 1]`. Order-3 values are
/// checked against their own three-point stencil bounds, order-4 values
/// against the four-point bounds; the emitted `m`/`M` columns are the
/// three-point band. The violation tolerance is 4 ulps scaled by the data
/// magnitude.
pub fn boundedness_table(
    function: TestFunction,
    n: usize,
    mode: ApproxMode,
) -> Result<(Vec<BoundednessRow>, BoundednessSummary)> {
    if n < 4 {
        bail!("boundedness audit needs at least 4 points, got {n}");
    }
    let grid = UniformGrid::new(-1.0, 1.0, n)?;
    let gmode = match mode {
        ApproxMode::Interp => GridMode::PointValues,
        ApproxMode::Recon => GridMode::CellAverages,
    };
    let v: Vec<f64> = match mode {
        ApproxMode::Interp => grid.centers().iter().map(|&x| function.eval(x)).collect(),
        ApproxMode::Recon => cell_averages(|x| function.eval(x), &grid),
    };
    let mut rows = Vec::with_capacity(n);
    let mut summary = BoundednessSummary::default();
    for i in 0..n {
        let im = (i + n - 1) % n;
        let ip = (i + 1) % n;
        let ipp = (i + 2) % n;
        let s3 = Stencil3::new(v[im], v[i], v[ip], gmode);
        let s4 = Stencil4::new(v[im], v[i], v[ip], v[ipp], gmode);
        let b3 = s3.data_bounds();
        let b4 = s4.data_bounds();
        let scale = v.iter().fold(0.0f64, |acc, &t| acc.max(t.abs())).max(1.0);
        let tol = 4.0 * f64::EPSILON * scale;

        let (db3, db4) = match mode {
            ApproxMode::Interp => (
                interp3_plus(&s3, &WeightFamily::InterpBeta).value,
                dbweno_core::interp4_plus(&s4, &WeightFamily::InterpBeta, &WeightFamily::InterpMu)
                    .value,
            ),
            ApproxMode::Recon => (recon3_plus(&s3).value, recon4_plus(&s4).value),
        };
        let lag3 = lagrange3_plus(&s3).value;
        let lag4 = lagrange4_plus(&s4).value;

        let row = BoundednessRow {
            x: grid.left_edge(i + 1),
            db3,
            db4,
            lag3,
            lag4,
            m: b3.m,
            big_m: b3.big_m,
            viol3: !b3.contains(db3, tol),
            viol4: !b4.contains(db4, tol),
            viol_lag3: !b3.contains(lag3, tol),
            viol_lag4: !b4.contains(lag4, tol),
        };
        summary.viol3 += row.viol3 as usize;
        summary.viol4 += row.viol4 as usize;
        summary.viol_lag3 += row.viol_lag3 as usize;
        summary.viol_lag4 += row.viol_lag4 as usize;
        rows.push(row);
    }
    Ok((rows, summary))
}

/// One row of the weight-region table: the admissible interval for the
/// family's side at `r`, and the family's weight there.
#[derive(Debug, Clone, Copy)]
pub struct RegionTableRow {
    pub r: f64,
    pub lo: f64,
    pub hi: f64,
    pub weight: f64,
}

/// Samples the admissibility region and a weight family over
/// `r ∈ [rmin, rmax]` with step `rstep`.
pub fn region_table(
    family: &WeightFamily,
    rmin: f64,
    rmax: f64,
    rstep: f64,
) -> Result<Vec<RegionTableRow>> {
    if !(rstep > 0.0) || !(rmax > rmin) {
        bail!("invalid r range: [{rmin}, {rmax}] with step {rstep}");
    }
    let count = ((rmax - rmin) / rstep).round() as usize;
    let rs: Vec<f64> = (0..=count).map(|j| rmin + j as f64 * rstep).collect();
    let rows = sample_region(&rs, family.side());
    Ok(rows
        .iter()
        .map(|row| RegionTableRow {
            r: row.r,
            lo: row.lo,
            hi: row.hi,
            weight: family.weight_pair(row.r).w0,
        })
        .collect())
}

/// Named flux problems for the solve experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxKind {
    Advection,
    Burgers,
}

impl FluxKind {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "advection" => Ok(FluxKind::Advection),
            "burgers" => Ok(FluxKind::Burgers),
            other => bail!("unknown flux {other:?} (expected advection or burgers)"),
        }
    }
}

/// Output of one conservation-law run: cell centers, initial data, final
/// data, and the solver's diagnostics.
#[derive(Debug, Clone)]
pub struct SolveOutput {
    pub x: Vec<f64>,
    pub u0: Vec<f64>,
    pub ut: Vec<f64>,
    pub result: SolveResult,
}

/// Runs the data-bounded WENO3 scheme on `[−1, 1]` with periodic boundaries.
pub fn solve_experiment(
    flux: FluxKind,
    function: TestFunction,
    n: usize,
    tfinal: f64,
    cfl: f64,
    family: WeightFamily,
) -> Result<SolveOutput> {
    let grid = UniformGrid::new(-1.0, 1.0, n)?;
    let config = SolveConfig {
        grid,
        cfl,
        final_time: tfinal,
        family,
    };
    let initial = |x: f64| function.eval(x);
    let result = match flux {
        FluxKind::Advection => solve(&config, &Advection { speed: 1.0 }, initial)?,
        FluxKind::Burgers => solve(&config, &Burgers, initial)?,
    };
    let x = grid.centers();
    let u0: Vec<f64> = x.iter().map(|&xx| function.eval(xx)).collect();
    Ok(SolveOutput {
        x,
        u0,
        ut: result.u_final.clone(),
        result,
    })
}

/// Exact smooth Burgers solution `u = sin(π(x − u·t))` by fixed-point
/// iteration on the characteristics; valid before shock formation
/// (`t < 1/π` for this initial condition).
pub fn burgers_exact_sine(x: f64, t: f64) -> f64 {
    let mut u = (PI * x).sin();
    for _ in 0..200 {
        u = (PI * (x - u * t)).sin();
    }
    u
}
