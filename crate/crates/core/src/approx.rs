//! Interface-value approximations: data-bounded WENO interpolation and
//! reconstruction at third and fourth order, plus unlimited Lagrange
//! baselines and cell-average setup helpers.
//!
//! All third-order values are convex combinations of the two linear
//! sub-polynomial values at the interface; with an in-region weight the
//! result is guaranteed to lie inside the stencil's min/max. The
//! fourth-order values are the half/half average of a β-weighted
//! approximation on `{v_{i−1}, v_i, v_{i+1}}` and a μ-weighted approximation
//! on the shifted stencil `{v_i, v_{i+1}, v_{i+2}}` (both targeting
//! `x_{i+1/2}`), hence bounded by the four-entry min/max.

use crate::error::CoreError;
use crate::grid::UniformGrid;
use crate::stencil::{Stencil3, Stencil4};
use crate::weights::{beta0_recon, mu0_recon, WeightFamily};

/// Which interface of cell `i` a value approximates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterfaceSide {
    /// `x_{i+1/2}`.
    Plus,
    /// `x_{i−1/2}`.
    Minus,
}

/// An interface approximation together with its formal target order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceValue {
    pub value: f64,
    pub order_target: u8,
    pub interface: InterfaceSide,
}

/// The two linear sub-polynomial values at `x_{i+1/2}`:
/// `(3/2·v_i − 1/2·v_{i−1}, 1/2·v_i + 1/2·v_{i+1})`.
pub fn sub_values_plus(s: &Stencil3) -> (f64, f64) {
    (1.5 * s.v0 - 0.5 * s.vm, 0.5 * s.v0 + 0.5 * s.vp)
}

/// The two linear sub-polynomial values at `x_{i−1/2}`:
/// `(1/2·v_i + 1/2·v_{i−1}, 3/2·v_i − 1/2·v_{i+1})`.
pub fn sub_values_minus(s: &Stencil3) -> (f64, f64) {
    (0.5 * s.v0 + 0.5 * s.vm, 1.5 * s.v0 - 0.5 * s.vp)
}

/// Third-order interpolation at `x_{i+1/2}` with a plus-side weight family.
pub fn interp3_plus(s: &Stencil3, family: &WeightFamily) -> InterfaceValue {
    let r = s.smoothness().r_plus;
    let w = family.weight_pair(r);
    let (v0h, v1h) = sub_values_plus(s);
    InterfaceValue {
        value: w.w0 * v0h + w.w1 * v1h,
        order_target: 3,
        interface: InterfaceSide::Plus,
    }
}

/// Third-order interpolation at `x_{i−1/2}` with a minus-side weight family.
pub fn interp3_minus(s: &Stencil3, family: &WeightFamily) -> InterfaceValue {
    let r = s.smoothness().r_minus;
    let w = family.weight_pair(r);
    let (v0h, v1h) = sub_values_minus(s);
    InterfaceValue {
        value: w.w0 * v0h + w.w1 * v1h,
        order_target: 3,
        interface: InterfaceSide::Minus,
    }
}

/// Fourth-order interpolation at `x_{i+1/2}` on a four-point stencil:
/// the half/half average of the β-weighted value on `{v_{i−1}, v_i, v_{i+1}}`
/// and the μ-weighted value on the shifted stencil `{v_i, v_{i+1}, v_{i+2}}`
/// (whose own minus interface is the same point `x_{i+1/2}`).
pub fn interp4_plus(
    s: &Stencil4,
    beta_family: &WeightFamily,
    mu_family: &WeightFamily,
) -> InterfaceValue {
    let b = interp3_plus(&s.left3(), beta_family);
    let m = interp3_minus(&s.right3(), mu_family);
    InterfaceValue {
        value: 0.5 * b.value + 0.5 * m.value,
        order_target: 4,
        interface: InterfaceSide::Plus,
    }
}

/// Third-order data-bounded reconstruction at `x_{i+1/2}` from cell averages,
/// using the `β̄₀ = min(1/3, |K|)` weight.
pub fn recon3_plus(s: &Stencil3) -> InterfaceValue {
    let r = s.smoothness().r_plus;
    let w = beta0_recon(r);
    let (v0h, v1h) = sub_values_plus(s);
    InterfaceValue {
        value: w.w0 * v0h + w.w1 * v1h,
        order_target: 3,
        interface: InterfaceSide::Plus,
    }
}

/// Minus-interface counterpart of [`recon3_plus`], using `μ̄₀`.
fn recon3_minus(s: &Stencil3) -> InterfaceValue {
    let r = s.smoothness().r_minus;
    let w = mu0_recon(r);
    let (v0h, v1h) = sub_values_minus(s);
    InterfaceValue {
        value: w.w0 * v0h + w.w1 * v1h,
        order_target: 3,
        interface: InterfaceSide::Minus,
    }
}

/// Fourth-order data-bounded reconstruction at `x_{i+1/2}`: the half/half
/// average of the β̄-weighted and shifted μ̄-weighted reconstructions.
pub fn recon4_plus(s: &Stencil4) -> InterfaceValue {
    let b = recon3_plus(&s.left3());
    let m = recon3_minus(&s.right3());
    InterfaceValue {
        value: 0.5 * b.value + 0.5 * m.value,
        order_target: 4,
        interface: InterfaceSide::Plus,
    }
}

/// Unlimited quadratic interpolation at `x_{i+1/2}`:
/// `(−1/8)v_{i−1} + (6/8)v_i + (3/8)v_{i+1}`.
pub fn lagrange3_plus(s: &Stencil3) -> InterfaceValue {
    InterfaceValue {
        value: -0.125 * s.vm + 0.75 * s.v0 + 0.375 * s.vp,
        order_target: 3,
        interface: InterfaceSide::Plus,
    }
}

/// Unlimited cubic interpolation at `x_{i+1/2}`:
/// `(−1/16)v_{i−1} + (9/16)v_i + (9/16)v_{i+1} + (−1/16)v_{i+2}`.
pub fn lagrange4_plus(s: &Stencil4) -> InterfaceValue {
    InterfaceValue {
        value: (-s.vm + 9.0 * s.v0 + 9.0 * s.vp - s.vpp) / 16.0,
        order_target: 4,
        interface: InterfaceSide::Plus,
    }
}

// 5-node Gauss–Legendre abscissae/weights on [−1, 1].
const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_663_9,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_663_9,
];
const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_08,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_08,
];

/// Per-cell averages of `f` over each grid cell, by 5-node Gauss–Legendre
/// quadrature (exact for polynomials up to degree 9; error `O(Δx¹⁰)`).
pub fn cell_averages<F: Fn(f64) -> f64>(f: F, grid: &UniformGrid) -> Vec<f64> {
    let half = 0.5 * grid.dx;
    (0..grid.n)
        .map(|j| {
            let mid = grid.center(j);
            let sum: f64 = GL5_NODES
                .iter()
                .zip(GL5_WEIGHTS.iter())
                .map(|(&t, &w)| w * f(mid + half * t))
                .sum();
            0.5 * sum
        })
        .collect()
}

/// Convenience error for mismatched array lengths in batch helpers.
pub fn check_equal_lengths(left: usize, right: usize) -> Result<(), CoreError> {
    if left == right {
        Ok(())
    } else {
        Err(CoreError::LengthMismatch { left, right })
    }
}
