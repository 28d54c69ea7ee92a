//! 1D scalar hyperbolic conservation-law solver `u_t + f(u)_x = 0` on a
//! periodic domain, using the data-bounded WENO3 numerical flux.
//!
//! Spatial discretization: semi-discrete conservative form
//! `du_i/dt = −(f̂_{i+1/2} − f̂_{i−1/2})/Δx` with global Lax–Friedrichs flux
//! splitting `f± = (f ± α·u)/2`, `α = max|f′|`. The positive part uses the
//! upwind-oriented stencil `{f⁺_{i−1}, f⁺_i, f⁺_{i+1}}`; the negative part
//! uses the mirror-reflected stencil `{f⁻_{i+2}, f⁻_{i+1}, f⁻_i}` with the
//! same weight formula on the reflected smoothness ratio. Time integration:
//! three-stage strong-stability-preserving Runge–Kutta (SSP-RK3) with the
//! step size recomputed from the current maximum wave speed.

use crate::error::CoreError;
use crate::grid::{GridMode, UniformGrid};
use crate::stencil::Stencil3;
use crate::weights::WeightFamily;

/// A scalar flux function together with a wave-speed bound.
pub trait Flux {
    /// `f(u)`.
    fn value(&self, u: f64) -> f64;
    /// An upper bound for `|f′(u)|` over `u ∈ [umin, umax]`.
    fn max_wave_speed(&self, umin: f64, umax: f64) -> f64;
}

/// Linear advection `f(u) = speed·u`.
#[derive(Debug, Clone, Copy)]
pub struct Advection {
    pub speed: f64,
}

impl Flux for Advection {
    fn value(&self, u: f64) -> f64 {
        self.speed * u
    }
    fn max_wave_speed(&self, _umin: f64, _umax: f64) -> f64 {
        self.speed.abs()
    }
}

/// Burgers flux `f(u) = u²/2`.
#[derive(Debug, Clone, Copy)]
pub struct Burgers;

impl Flux for Burgers {
    fn value(&self, u: f64) -> f64 {
        0.5 * u * u
    }
    fn max_wave_speed(&self, umin: f64, umax: f64) -> f64 {
        umin.abs().max(umax.abs())
    }
}

/// Run definition for [`solve`].
#[derive(Debug, Clone, Copy)]
pub struct SolveConfig {
    pub grid: UniformGrid,
    pub cfl: f64,
    pub final_time: f64,
    /// Must be one of the scheme-omega weight families.
    pub family: WeightFamily,
}

impl SolveConfig {
    /// Validates CFL, final time, and the weight family.
    pub fn validate(&self) -> Result<(), CoreError> {
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(CoreError::InvalidParameter {
                name: "cfl",
                value: self.cfl,
                expected: "a value in (0, 1)",
            });
        }
        if !(self.final_time > 0.0) {
            return Err(CoreError::NonPositive {
                context: "final_time",
                value: self.final_time,
            });
        }
        match self.family {
            WeightFamily::SchemeOmega1
            | WeightFamily::SchemeOmega2
            | WeightFamily::SchemeOmegaK(_) => self.family.validate(),
            _ => Err(CoreError::InvalidParameter {
                name: "family",
                value: f64::NAN,
                expected: "one of the scheme-omega families",
            }),
        }
    }
}

/// Result of a [`solve`] run, with range diagnostics for the discrete
/// maximum principle.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub u_final: Vec<f64>,
    pub time_steps: usize,
    pub min_u0: f64,
    pub max_u0: f64,
    pub min_ut: f64,
    pub max_ut: f64,
    /// `max(0, max_uT − max_u0) + max(0, min_u0 − min_uT)`.
    pub overshoot: f64,
}

/// The WENO3 numerical flux on a three-point flux stencil oriented with the
/// upwind side at `vm`:
/// `f̂ = ω₀(3/2·f_i − 1/2·f_{i−1}) + (1−ω₀)(1/2·f_i + 1/2·f_{i+1})`
/// with `ω₀ = family(r⁺)` of the flux values.
pub fn weno3_flux(f_stencil: &Stencil3, family: &WeightFamily) -> f64 {
    let r = f_stencil.smoothness().r_plus;
    weno3_flux_fixed(f_stencil, family.weight_pair(r).w0)
}

/// The same flux with an externally prescribed weight `w0` (used for the
/// linear-scheme reduction checks; `w0 = 1/3` gives the classical linear
/// third-order upwind flux, `w0 = 1` the second-order fully upwind flux).
pub fn weno3_flux_fixed(f_stencil: &Stencil3, w0: f64) -> f64 {
    let up = 1.5 * f_stencil.v0 - 0.5 * f_stencil.vm;
    let ct = 0.5 * f_stencil.v0 + 0.5 * f_stencil.vp;
    w0 * up + (1.0 - w0) * ct
}

/// Global Lax–Friedrichs splitting `f± = (f(u) ± α·u)/2` with
/// `α = max|f′|` over the current solution range.
pub fn global_lf_split<F: Flux + ?Sized>(flux: &F, u: &[f64]) -> (Vec<f64>, Vec<f64>, f64) {
    let (umin, umax) = u
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let alpha = flux.max_wave_speed(umin, umax);
    let f_plus: Vec<f64> = u.iter().map(|&v| 0.5 * (flux.value(v) + alpha * v)).collect();
    let f_minus: Vec<f64> = u.iter().map(|&v| 0.5 * (flux.value(v) - alpha * v)).collect();
    (f_plus, f_minus, alpha)
}

/// All interface fluxes `f̂_{i+1/2}`, `i = 0..n−1`, with periodic wrapping.
pub fn interface_fluxes<F: Flux + ?Sized>(
    u: &[f64],
    flux: &F,
    family: &WeightFamily,
) -> Vec<f64> {
    let n = u.len();
    let (fp, fm, _alpha) = global_lf_split(flux, u);
    (0..n)
        .map(|i| {
            let im = (i + n - 1) % n;
            let ip = (i + 1) % n;
            let ipp = (i + 2) % n;
            let pos = Stencil3::new(fp[im], fp[i], fp[ip], GridMode::PointValues);
            let neg = Stencil3::new(fm[ipp], fm[ip], fm[i], GridMode::PointValues);
            weno3_flux(&pos, family) + weno3_flux(&neg, family)
        })
        .collect()
}

/// Semi-discrete right-hand side `−(f̂_{i+1/2} − f̂_{i−1/2})/Δx` on a
/// periodic grid.
pub fn semi_discrete_rhs<F: Flux + ?Sized>(
    u: &[f64],
    flux: &F,
    family: &WeightFamily,
    dx: f64,
) -> Vec<f64> {
    let n = u.len();
    let fhat = interface_fluxes(u, flux, family);
    (0..n)
        .map(|i| {
            let im = (i + n - 1) % n;
            -(fhat[i] - fhat[im]) / dx
        })
        .collect()
}

/// One SSP-RK3 step: `u¹ = u + dt·L(u)`, `u² = 3/4·u + 1/4(u¹ + dt·L(u¹))`,
/// `uⁿ⁺¹ = 1/3·u + 2/3(u² + dt·L(u²))`.
pub fn ssp_rk3_step<L: Fn(&[f64]) -> Vec<f64>>(u: &[f64], dt: f64, rhs: L) -> Vec<f64> {
    let n = u.len();
    let l0 = rhs(u);
    let u1: Vec<f64> = (0..n).map(|i| u[i] + dt * l0[i]).collect();
    let l1 = rhs(&u1);
    let u2: Vec<f64> = (0..n)
        .map(|i| 0.75 * u[i] + 0.25 * (u1[i] + dt * l1[i]))
        .collect();
    let l2 = rhs(&u2);
    (0..n)
        .map(|i| u[i] / 3.0 + 2.0 / 3.0 * (u2[i] + dt * l2[i]))
        .collect()
}

/// Advances the cell-centered initial condition from `t = 0` to
/// `final_time` with `dt = cfl·Δx/α` recomputed each step (last step
/// clipped) and reports range/overshoot diagnostics.
pub fn solve<F, G>(config: &SolveConfig, flux: &F, initial: G) -> Result<SolveResult, CoreError>
where
    F: Flux + ?Sized,
    G: Fn(f64) -> f64,
{
    config.validate()?;
    let grid = config.grid;
    let mut u: Vec<f64> = (0..grid.n).map(|j| initial(grid.center(j))).collect();
    let (min_u0, max_u0) = extrema(&u);

    let mut t = 0.0;
    let mut steps = 0usize;
    loop {
        let remaining = config.final_time - t;
        if remaining <= 0.0 {
            break;
        }
        let (umin, umax) = extrema(&u);
        let alpha = flux.max_wave_speed(umin, umax);
        let dt = if alpha > 0.0 {
            (config.cfl * grid.dx / alpha).min(remaining)
        } else {
            remaining
        };
        u = ssp_rk3_step(&u, dt, |v| semi_discrete_rhs(v, flux, &config.family, grid.dx));
        steps += 1;
        if u.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::NonFiniteState { time: t, step: steps });
        }
        if dt >= remaining {
            break;
        }
        t += dt;
    }

    let (min_ut, max_ut) = extrema(&u);
    let overshoot = (max_ut - max_u0).max(0.0) + (min_u0 - min_ut).max(0.0);
    Ok(SolveResult {
        u_final: u,
        time_steps: steps,
        min_u0,
        max_u0,
        min_ut,
        max_ut,
        overshoot,
    })
}

fn extrema(u: &[f64]) -> (f64, f64) {
    u.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn fs(vm: f64, v0: f64, vp: f64) -> Stencil3 {
        Stencil3::new(vm, v0, vp, GridMode::PointValues)
    }

    #[test]
    fn weno3_flux_examples() {
        for fam in [
            WeightFamily::SchemeOmega1,
            WeightFamily::SchemeOmega2,
            WeightFamily::SchemeOmegaK(2.0),
        ] {
            assert_eq!(weno3_flux(&fs(0.0, 1.0, 2.0), &fam), 1.5);
        }
        // r = 0: pure upwind branch.
        assert_eq!(
            weno3_flux(&fs(0.0, 0.0, 1.0), &WeightFamily::SchemeOmega1),
            0.0
        );
        // r = +∞: pure centered branch.
        assert_eq!(
            weno3_flux(&fs(0.0, 1.0, 1.0), &WeightFamily::SchemeOmega1),
            1.0
        );
    }

    #[test]
    fn flux_stays_within_stencil_bounds() {
        let fam = WeightFamily::SchemeOmega1;
        for s in [
            fs(0.3, -1.2, 2.0),
            fs(1.0, 1.0, 0.0),
            fs(-5.0, 4.0, 4.0),
            fs(2.0, 2.0, 2.0),
        ] {
            let f = weno3_flux(&s, &fam);
            let b = s.data_bounds();
            assert!(f >= b.m - 1e-14 && f <= b.big_m + 1e-14);
        }
    }

    #[test]
    fn lf_split_advection_is_pure_upwind() {
        let u = [0.3, -1.0, 2.5];
        let (fp, fm, alpha) = global_lf_split(&Advection { speed: 1.0 }, &u);
        assert_eq!(alpha, 1.0);
        assert_eq!(fp, u.to_vec());
        assert!(fm.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn lf_split_burgers_alpha() {
        let (_, _, alpha) = global_lf_split(&Burgers, &[-1.0, 0.5, 1.0]);
        assert_eq!(alpha, 1.0);
    }

    #[test]
    fn rhs_constant_data_is_zero() {
        let u = vec![2.0; 16];
        let rhs = semi_discrete_rhs(&u, &Burgers, &WeightFamily::SchemeOmega1, 0.1);
        assert!(rhs.iter().all(|&v| v.abs() < 1e-14));
    }

    #[test]
    fn rhs_telescopes_to_zero_sum() {
        let u: Vec<f64> = (0..32)
            .map(|i| (2.0 * PI * i as f64 / 32.0).sin() + 0.3 * (i as f64).cos())
            .collect();
        for fam in [WeightFamily::SchemeOmega1, WeightFamily::SchemeOmegaK(1.5)] {
            let rhs = semi_discrete_rhs(&u, &Burgers, &fam, 0.05);
            let sum: f64 = rhs.iter().sum();
            assert!(sum.abs() < 1e-12, "sum = {sum}");
        }
    }

    #[test]
    fn ssp_rk3_identity_on_zero_rhs() {
        let u = vec![1.0, -2.0, 3.0];
        let out = ssp_rk3_step(&u, 0.1, |v| vec![0.0; v.len()]);
        assert_eq!(out, u);
    }

    #[test]
    fn ssp_rk3_matches_scalar_amplification() {
        // u' = −u over one step: 1 − dt + dt²/2 − dt³/6.
        let dt = 0.37;
        let out = ssp_rk3_step(&[1.0], dt, |v| vec![-v[0]]);
        let expected = 1.0 - dt + dt * dt / 2.0 - dt * dt * dt / 6.0;
        assert!((out[0] - expected).abs() < 1e-15);
    }

    #[test]
    fn ssp_rk3_linear_in_state_for_linear_rhs() {
        let a = [0.2, -1.0, 0.5, 2.0];
        let b = [1.0, 1.0, -3.0, 0.0];
        let rhs = |v: &[f64]| {
            let n = v.len();
            (0..n).map(|i| v[(i + 1) % n] - v[i]).collect::<Vec<_>>()
        };
        let sa = ssp_rk3_step(&a, 0.1, rhs);
        let sb = ssp_rk3_step(&b, 0.1, rhs);
        let combo: Vec<f64> = (0..4).map(|i| 2.0 * a[i] - 0.5 * b[i]).collect();
        let sc = ssp_rk3_step(&combo, 0.1, rhs);
        for i in 0..4 {
            assert!((sc[i] - (2.0 * sa[i] - 0.5 * sb[i])).abs() < 1e-13);
        }
    }

    #[test]
    fn solve_constant_data_is_exact() {
        let config = SolveConfig {
            grid: UniformGrid::new(-1.0, 1.0, 50).unwrap(),
            cfl: 0.4,
            final_time: 1.0,
            family: WeightFamily::SchemeOmega2,
        };
        let out = solve(&config, &Advection { speed: 1.0 }, |_| 0.7).unwrap();
        assert!(out.u_final.iter().all(|&v| (v - 0.7).abs() < 1e-14));
        assert_eq!(out.overshoot, 0.0);
    }

    #[test]
    fn solve_rejects_invalid_config() {
        let grid = UniformGrid::new(-1.0, 1.0, 10).unwrap();
        let bad_cfl = SolveConfig {
            grid,
            cfl: 1.5,
            final_time: 1.0,
            family: WeightFamily::SchemeOmega1,
        };
        assert!(solve(&bad_cfl, &Burgers, |x| x).is_err());
        let bad_family = SolveConfig {
            grid,
            cfl: 0.4,
            final_time: 1.0,
            family: WeightFamily::InterpBeta,
        };
        assert!(solve(&bad_family, &Burgers, |x| x).is_err());
    }

    #[test]
    fn fixed_third_weight_matches_linear_upwind_coefficients() {
        // w0 = 1/3 must give f̂ = (−1/6)f_{i−1} + (5/6)f_i + (1/3)f_{i+1}.
        let vals = [(0.7, -1.3, 2.1), (1.0, 0.0, 0.0), (-0.2, 0.4, 0.9)];
        for (a, b, c) in vals {
            let f = weno3_flux_fixed(&fs(a, b, c), 1.0 / 3.0);
            let linear = -a / 6.0 + 5.0 * b / 6.0 + c / 3.0;
            assert!((f - linear).abs() < 1e-15);
        }
        // w0 = 1 is the fully upwind second-order flux.
        let f = weno3_flux_fixed(&fs(1.0, 2.0, 7.0), 1.0);
        assert_eq!(f, 2.5);
    }
}
