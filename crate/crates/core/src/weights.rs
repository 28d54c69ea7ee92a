//! Data-bounded nonlinear weight families.
//!
//! Every family maps a smoothness ratio `r` (extended real) to a convex pair
//! `(w₀, w₁ = 1 − w₀)` lying inside the admissibility region of
//! [`crate::region`] for its side:
//!
//! * interpolation: `β₀ = min(1/4, |K|)` (plus side) and
//!   `μ₀ = max(3/4, min((2−r)/(1−r), −r/(1−r)))` (minus side),
//! * reconstruction: the same with caps `1/3` and `2/3`,
//! * the η-scaled families `β₀^η = η·max(0, K)` and `μ₀^η = 1 − η(1 − J)`
//!   with `η ∈ [0, 1]`,
//! * rational piecewise families that are constant (`1/4` / `3/4`) on
//!   `r ∈ [−3, 5]` and decay smoothly outside,
//! * the three scheme weight variants `ω₀` used by the WENO3 flux, which are
//!   even in `r` and recover the ideal value `1/3` at `|r| = 1`.
//!
//! All families treat `r = ±∞` by the analytic limit of their formulas and
//! the degenerate 0/0 smoothness case as `r = 1` (resolved upstream in
//! [`crate::stencil::Stencil3::smoothness`]).

use crate::error::CoreError;
use crate::region::{corollary_j, corollary_k, RegionSide};

/// A convex weight pair `(w₀, w₁)` with `w₀ + w₁ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightPair {
    pub w0: f64,
    pub w1: f64,
}

impl WeightPair {
    /// Builds the pair from `w₀`, clamping vanishing negative rounding
    /// residue so both entries stay in `[0, 1]`.
    pub fn convex(w0: f64) -> Self {
        let w0 = w0.clamp(0.0, 1.0);
        Self { w0, w1: 1.0 - w0 }
    }
}

/// `β₀ = min(1/4, |K|)`: third-order interpolation weight at `x_{i+1/2}`.
pub fn beta0_interp(r_plus: f64) -> WeightPair {
    WeightPair::convex(corollary_k(r_plus).abs().min(0.25))
}

/// `μ₀ = max(3/4, min((2−r)/(1−r), −r/(1−r)))`: third-order interpolation
/// weight at `x_{i−1/2}`.
pub fn mu0_interp(r_minus: f64) -> WeightPair {
    WeightPair::convex(mu_inner(r_minus).max(0.75))
}

/// `β̄₀ = min(1/3, |K|)`: third-order reconstruction weight.
pub fn beta0_recon(r_plus: f64) -> WeightPair {
    WeightPair::convex(corollary_k(r_plus).abs().min(1.0 / 3.0))
}

/// `μ̄₀ = max(2/3, min((2−r)/(1−r), −r/(1−r)))`: reconstruction counterpart.
pub fn mu0_recon(r_minus: f64) -> WeightPair {
    WeightPair::convex(mu_inner(r_minus).max(2.0 / 3.0))
}

/// The inner `min((2−r)/(1−r), −r/(1−r))` shared by the μ families; `−∞` at
/// `r = 1` (the two ratios diverge with opposite signs), `1` at `r = ±∞`.
fn mu_inner(r: f64) -> f64 {
    if r == 1.0 {
        return f64::NEG_INFINITY;
    }
    if r.is_infinite() {
        return 1.0;
    }
    let l = 1.0 / (1.0 - r);
    ((2.0 - r) * l).min(-r * l)
}

/// `β₀^η = η·max(0, K)` with `η ∈ [0, 1]`. The `max(0, ·)` guards the range
/// `r ∈ (0, 1)` where the literal `K` is negative.
pub fn beta0_eta(r_plus: f64, eta: f64) -> Result<WeightPair, CoreError> {
    check_unit_interval("eta", eta)?;
    Ok(WeightPair::convex(eta * corollary_k(r_plus).max(0.0)))
}

/// `μ₀^η = 1 − η(1 − J)` with `η ∈ [0, 1]`.
pub fn mu0_eta(r_minus: f64, eta: f64) -> Result<WeightPair, CoreError> {
    check_unit_interval("eta", eta)?;
    Ok(WeightPair::convex(
        1.0 - eta * (1.0 - corollary_j(r_minus)),
    ))
}

/// Piecewise-rational β family: `1/4` on `r ∈ [−3, 5]`, `8/(3r²+5)` for
/// `r < −3`, `5/(3r²−55)` for `r > 5`; `0` at `r = ±∞`.
pub fn beta0_rational(r_plus: f64) -> WeightPair {
    let r = r_plus;
    let w0 = if r.is_infinite() {
        0.0
    } else if (-3.0..=5.0).contains(&r) {
        0.25
    } else if r < -3.0 {
        8.0 / (3.0 * r * r + 5.0)
    } else {
        5.0 / (3.0 * r * r - 55.0)
    };
    WeightPair::convex(w0)
}

/// Piecewise-rational μ family: `3/4` on `r ∈ [−3, 5]`, `3(r²−1)/(3r²+5)`
/// for `r < −3`, `3(r²−20)/(3r²−55)` for `r > 5`; `1` at `r = ±∞`.
pub fn mu0_rational(r_minus: f64) -> WeightPair {
    let r = r_minus;
    let w0 = if r.is_infinite() {
        1.0
    } else if (-3.0..=5.0).contains(&r) {
        0.75
    } else if r < -3.0 {
        3.0 * (r * r - 1.0) / (3.0 * r * r + 5.0)
    } else {
        3.0 * (r * r - 20.0) / (3.0 * r * r - 55.0)
    };
    WeightPair::convex(w0)
}

/// The three scheme-weight formulas for the WENO3 numerical flux.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaVariant {
    Omega1,
    Omega2,
    OmegaK,
}

/// Scheme weight `ω₀` for the selected variant, evaluated on `|r|`:
///
/// * `ω¹₀ = 1/3 + 2/3(1 − 3|r|/(2|r|+1))`,
/// * `ω²₀ = 1/3 + 2/3(1 − min(2|r|/(1+|r|), 3/2))`,
/// * `ω^k₀ = 1/3 + 2/3(1 − min(k|r|, max(1, 3|r|/(2|r|+k))))` with
///   `k ∈ [1.5, 2]` (ignored by the other variants).
///
/// All variants give `ω₀ = 1` at `r = 0` (pure upwind), `1/3` at `|r| = 1`
/// (ideal third-order weight), and `0` in the limit `r → ±∞`.
pub fn omega0_scheme(r: f64, variant: OmegaVariant, k: f64) -> Result<WeightPair, CoreError> {
    if variant == OmegaVariant::OmegaK && !(1.5..=2.0).contains(&k) {
        return Err(CoreError::InvalidParameter {
            name: "k",
            value: k,
            expected: "a value in [1.5, 2]",
        });
    }
    let a = r.abs();
    let w0 = if a.is_infinite() {
        0.0
    } else {
        let t = match variant {
            OmegaVariant::Omega1 => 3.0 * a / (2.0 * a + 1.0),
            OmegaVariant::Omega2 => (2.0 * a / (1.0 + a)).min(1.5),
            OmegaVariant::OmegaK => (k * a).min((3.0 * a / (2.0 * a + k)).max(1.0)),
        };
        1.0 / 3.0 + 2.0 / 3.0 * (1.0 - t)
    };
    Ok(WeightPair::convex(w0))
}

/// A named, parameterized weight family; the unit of selection for the CLI
/// and the approximation drivers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFamily {
    InterpBeta,
    InterpMu,
    ReconBeta,
    ReconMu,
    EtaBeta(f64),
    EtaMu(f64),
    RationalBeta,
    RationalMu,
    SchemeOmega1,
    SchemeOmega2,
    SchemeOmegaK(f64),
}

impl WeightFamily {
    /// Builds a family from its CLI name and optional parameters.
    pub fn from_name(name: &str, eta: Option<f64>, k: Option<f64>) -> Result<Self, CoreError> {
        let fam = match name {
            "interp-beta" => WeightFamily::InterpBeta,
            "interp-mu" => WeightFamily::InterpMu,
            "recon-beta" => WeightFamily::ReconBeta,
            "recon-mu" => WeightFamily::ReconMu,
            "eta-beta" => WeightFamily::EtaBeta(eta.unwrap_or(1.0)),
            "eta-mu" => WeightFamily::EtaMu(eta.unwrap_or(1.0)),
            "rational-beta" => WeightFamily::RationalBeta,
            "rational-mu" => WeightFamily::RationalMu,
            "scheme-omega1" => WeightFamily::SchemeOmega1,
            "scheme-omega2" => WeightFamily::SchemeOmega2,
            "scheme-omega-k" => WeightFamily::SchemeOmegaK(k.unwrap_or(2.0)),
            _ => {
                return Err(CoreError::InvalidParameter {
                    name: "family",
                    value: f64::NAN,
                    expected: "one of interp-beta, interp-mu, recon-beta, recon-mu, eta-beta, eta-mu, rational-beta, rational-mu, scheme-omega1, scheme-omega2, scheme-omega-k",
                })
            }
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Checks the family parameters (`η ∈ [0,1]`, `k ∈ [1.5, 2]`).
    pub fn validate(&self) -> Result<(), CoreError> {
        match *self {
            WeightFamily::EtaBeta(eta) | WeightFamily::EtaMu(eta) => {
                check_unit_interval("eta", eta)
            }
            WeightFamily::SchemeOmegaK(k) if !(1.5..=2.0).contains(&k) => {
                Err(CoreError::InvalidParameter {
                    name: "k",
                    value: k,
                    expected: "a value in [1.5, 2]",
                })
            }
            _ => Ok(()),
        }
    }

    /// Which admissibility region the family's `w₀` belongs to. The scheme
    /// ω-weights are even in `r` and are checked on the plus side.
    pub fn side(&self) -> RegionSide {
        match self {
            WeightFamily::InterpBeta
            | WeightFamily::ReconBeta
            | WeightFamily::EtaBeta(_)
            | WeightFamily::RationalBeta
            | WeightFamily::SchemeOmega1
            | WeightFamily::SchemeOmega2
            | WeightFamily::SchemeOmegaK(_) => RegionSide::Plus,
            WeightFamily::InterpMu
            | WeightFamily::ReconMu
            | WeightFamily::EtaMu(_)
            | WeightFamily::RationalMu => RegionSide::Minus,
        }
    }

    /// Evaluates the family at smoothness ratio `r`. Parameters must be
    /// valid (see [`WeightFamily::validate`]).
    pub fn weight_pair(&self, r: f64) -> WeightPair {
        debug_assert!(self.validate().is_ok());
        match *self {
            WeightFamily::InterpBeta => beta0_interp(r),
            WeightFamily::InterpMu => mu0_interp(r),
            WeightFamily::ReconBeta => beta0_recon(r),
            WeightFamily::ReconMu => mu0_recon(r),
            WeightFamily::EtaBeta(eta) => {
                WeightPair::convex(eta * corollary_k(r).max(0.0))
            }
            WeightFamily::EtaMu(eta) => {
                WeightPair::convex(1.0 - eta * (1.0 - corollary_j(r)))
            }
            WeightFamily::RationalBeta => beta0_rational(r),
            WeightFamily::RationalMu => mu0_rational(r),
            WeightFamily::SchemeOmega1 => {
                omega0_scheme(r, OmegaVariant::Omega1, 0.0).expect("no parameter")
            }
            WeightFamily::SchemeOmega2 => {
                omega0_scheme(r, OmegaVariant::Omega2, 0.0).expect("no parameter")
            }
            WeightFamily::SchemeOmegaK(k) => {
                omega0_scheme(r, OmegaVariant::OmegaK, k).expect("validated k")
            }
        }
    }
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<(), CoreError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(CoreError::InvalidParameter {
            name,
            value,
            expected: "a value in [0, 1]",
        })
    }
}
