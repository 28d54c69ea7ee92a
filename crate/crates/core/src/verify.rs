//! Independent verification utilities: a brute-force data-boundedness
//! oracle (dense sampling of the blended polynomial over the stencil
//! interval) and empirical convergence-rate estimation.

use crate::error::CoreError;
use crate::region::{theorem1_alpha_interval, RegionSide, WeightInterval};
use crate::stencil::Stencil3;

/// Outcome of a dense-sampling boundedness check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundednessReport {
    /// True iff no sampled value left `[m, M]` at all.
    pub bounded: bool,
    /// Largest excursion outside `[m, M]` over all samples (0 when bounded).
    pub worst_violation: f64,
    /// Location of the worst excursion in `(x − x_i)/Δx` units.
    pub worst_x_rel: f64,
}

/// Errors and empirical orders over a sequence of doubling grids.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub grid_sizes: Vec<usize>,
    pub errors_linf: Vec<f64>,
    pub errors_l1: Vec<f64>,
    /// `rate_j = log₂(e_j / e_{j+1})`; one entry fewer than the errors.
    pub rates_linf: Vec<f64>,
    pub rates_l1: Vec<f64>,
}

impl RateReport {
    /// Assembles a report, computing both rate columns.
    pub fn new(
        grid_sizes: Vec<usize>,
        errors_linf: Vec<f64>,
        errors_l1: Vec<f64>,
    ) -> Result<Self, CoreError> {
        let rates_linf = convergence_rates(&errors_linf)?;
        let rates_l1 = convergence_rates(&errors_l1)?;
        Ok(Self {
            grid_sizes,
            errors_linf,
            errors_l1,
            rates_linf,
            rates_l1,
        })
    }
}

/// Evaluates the blended approximation
/// `v̂(x) = α₀·v̂⁰(x) + (1−α₀)·v̂¹(x)` — where `v̂⁰` is the line through
/// `(x_{i−1}, vm), (x_i, v0)` and `v̂¹` the line through
/// `(x_i, v0), (x_{i+1}, vp)` — at `samples` equispaced points of
/// `[x_{i−1}, x_{i+1}]`, and reports the largest excursion outside the
/// stencil data bounds `[m, M]`.
pub fn brute_force_bounded(s: &Stencil3, alpha0: f64, samples: usize) -> BoundednessReport {
    debug_assert!(samples >= 100);
    let (dm, dp) = s.differences();
    let bounds = s.data_bounds();
    let alpha1 = 1.0 - alpha0;
    let mut worst = 0.0f64;
    let mut worst_x = 0.0f64;
    // x measured in units of Δx relative to x_i; the two lines are
    // v̂⁰(x) = v0 + Δ₋·x and v̂¹(x) = v0 + Δ₊·x.
    let denom = (samples - 1) as f64;
    for j in 0..samples {
        let x = -1.0 + 2.0 * j as f64 / denom;
        let v = alpha0 * (s.v0 + dm * x) + alpha1 * (s.v0 + dp * x);
        let exc = bounds.excursion(v);
        if exc > worst {
            worst = exc;
            worst_x = x;
        }
    }
    BoundednessReport {
        bounded: worst == 0.0,
        worst_violation: worst,
        worst_x_rel: worst_x,
    }
}

/// The interval of constant blending weights `α₀` for which the blended
/// approximation stays data-bounded over the whole stencil interval
/// `[x_{i−1}, x_{i+1}]`: the intersection over `samples` equispaced points
/// `x` of the pointwise admissibility condition
/// `α₀·(x − x_i) ∈ theorem1_alpha_interval(r⁺, ·, x)`. May be `Empty` (some
/// stencils admit no single weight that is safe everywhere at once).
pub fn admissible_alpha0_interval(s: &Stencil3, samples: usize) -> WeightInterval {
    debug_assert!(samples >= 100);
    let r = s.smoothness().r_plus;
    let mut acc = WeightInterval::full();
    let denom = (samples - 1) as f64;
    for j in 0..samples {
        let x = -1.0 + 2.0 * j as f64 / denom;
        if x == 0.0 {
            // v̂(x_i) = v_i is always inside the data bounds.
            continue;
        }
        let iv = theorem1_alpha_interval(r, RegionSide::Plus, x, 1.0);
        let (lo, hi) = match iv {
            WeightInterval::Range { lo, hi } => (lo, hi),
            WeightInterval::Empty => return WeightInterval::Empty,
        };
        // Divide the product interval by x (flipping when x < 0).
        let constraint = if x > 0.0 {
            WeightInterval::new(lo / x, hi / x)
        } else {
            WeightInterval::new(hi / x, lo / x)
        };
        acc = acc.intersect(&constraint);
        if acc.is_empty() {
            return acc;
        }
    }
    acc
}

/// Discrete error norms: `linf = max|a − e|`, `l1 = dx·Σ|a − e|`.
pub fn error_norms(approx: &[f64], exact: &[f64], dx: f64) -> Result<(f64, f64), CoreError> {
    if approx.len() != exact.len() {
        return Err(CoreError::LengthMismatch {
            left: approx.len(),
            right: exact.len(),
        });
    }
    let mut linf = 0.0f64;
    let mut sum = 0.0f64;
    for (a, e) in approx.iter().zip(exact.iter()) {
        let d = (a - e).abs();
        linf = linf.max(d);
        sum += d;
    }
    Ok((dx * sum, linf))
}

/// Empirical orders `rate_j = log₂(e_j / e_{j+1})` for doubling grids.
pub fn convergence_rates(errors: &[f64]) -> Result<Vec<f64>, CoreError> {
    for &e in errors {
        if !(e > 0.0) {
            return Err(CoreError::NonPositive {
                context: "convergence error entry",
                value: e,
            });
        }
    }
    Ok(errors
        .windows(2)
        .map(|w| (w[0] / w[1]).log2())
        .collect())
}
