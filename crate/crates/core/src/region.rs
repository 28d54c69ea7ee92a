//! Closed-form admissibility regions for data-bounded convex weights.
//!
//! A three-point approximation `v̂(x) = α₀·v̂⁰(x) + α₁·v̂¹(x)` built from two
//! linear sub-polynomials stays inside the stencil's data bounds `[m, M]`
//! exactly when the product `α₀·(x − x_i)` lies in a closed interval whose
//! endpoints are rational functions of the smoothness ratio `r`. This module
//! evaluates those intervals:
//!
//! * [`theorem1_alpha_interval`] — the pointwise-in-`x` interval for
//!   `α₀·(x − x_i)`, split into four cases by the value of `r`,
//! * [`lemma1_interval`] / [`lemma2_interval`] — the specializations at the
//!   interfaces `x_{i+1/2}` (weight `β₀`) and `x_{i−1/2}` (weight `μ₀`),
//! * [`corollary_k`] / [`corollary_j`] — scalar bound functions `K` (upper
//!   bound for `β₀`) and `J` (lower bound for `μ₀`) as printed in the source
//!   formulas; note `K` is reported verbatim and is negative for `r ∈ (0,1)`
//!   even though the lemma interval there admits positive weights. Region
//!   *decisions* always use the lemma intervals clipped to `[0,1]`.
//!
//! Extended-real convention: `r = 1` makes the two sub-polynomials identical,
//! so every weight is admissible and the interval is `(−∞, +∞)`; `r = ±∞`
//! (one-sided difference exactly zero) uses the analytic limit of the outer
//! cases.

/// A closed admissible interval for a weight, possibly half-infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightInterval {
    /// No admissible weight.
    Empty,
    /// All weights `w` with `lo ≤ w ≤ hi` (endpoints may be ±∞).
    Range { lo: f64, hi: f64 },
}

impl WeightInterval {
    /// Builds an interval, collapsing inverted endpoints to `Empty`.
    pub fn new(lo: f64, hi: f64) -> Self {
        if lo <= hi {
            WeightInterval::Range { lo, hi }
        } else {
            WeightInterval::Empty
        }
    }

    /// The unbounded interval `(−∞, +∞)`.
    pub fn full() -> Self {
        WeightInterval::Range {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, WeightInterval::Empty)
    }

    pub fn lo(&self) -> Option<f64> {
        match self {
            WeightInterval::Empty => None,
            WeightInterval::Range { lo, .. } => Some(*lo),
        }
    }

    pub fn hi(&self) -> Option<f64> {
        match self {
            WeightInterval::Empty => None,
            WeightInterval::Range { hi, .. } => Some(*hi),
        }
    }

    /// Inclusive membership with an absolute endpoint tolerance `tol ≥ 0`.
    pub fn contains(&self, w: f64, tol: f64) -> bool {
        match self {
            WeightInterval::Empty => false,
            WeightInterval::Range { lo, hi } => w >= lo - tol && w <= hi + tol,
        }
    }

    /// Intersection with another interval.
    pub fn intersect(&self, other: &WeightInterval) -> WeightInterval {
        match (self, other) {
            (WeightInterval::Empty, _) | (_, WeightInterval::Empty) => WeightInterval::Empty,
            (
                WeightInterval::Range { lo: a, hi: b },
                WeightInterval::Range { lo: c, hi: d },
            ) => WeightInterval::new(a.max(*c), b.min(*d)),
        }
    }
}

/// Which interface (and hence which smoothness ratio) a region refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionSide {
    /// Weight `β₀` at `x_{i+1/2}`, parameterized by `r⁺`.
    Plus,
    /// Weight `μ₀` at `x_{i−1/2}`, parameterized by `r⁻`.
    Minus,
}

/// One row of a region table: the clipped admissible interval and the
/// literal corollary bound at a given `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionRow {
    pub r: f64,
    pub lo: f64,
    pub hi: f64,
    pub bound: f64,
}

/// Admissible interval for the product `α₀·(x − x_i)` at relative position
/// `s_rel = (x − x_i)/dx ∈ [−1, 1]`.
///
/// Case selection: (a) `r ≥ 1`, (b) `r ∈ [0,1)`, (c) `r ∈ [−1,0]`,
/// (d) `r ≤ −1`. The bound functions for the plus side are
/// `K₁⁺ = L(r·dx + (x−x_i))`, `K₂⁺ = L(x − x_{i+1})`, `K₃⁺ = L(x − x_i)`
/// with `L = 1/(1−r)`; the minus side uses `K₁⁻ = L·r·(dx − (x−x_i))`,
/// `K₂⁻ = −L(dx + (x−x_i)·r)`, `K₃⁻ = −L·(x−x_i)·r`. The interval is
/// `[K₁, K₂]` in case (a), `[K₂, K₁]` in (b), `[K₂, K₃]` in (c), and
/// `[K₁, K₃]` in (d).
pub fn theorem1_alpha_interval(r: f64, side: RegionSide, s_rel: f64, dx: f64) -> WeightInterval {
    debug_assert!(dx > 0.0);
    debug_assert!((-1.0..=1.0).contains(&s_rel));
    if r == 1.0 {
        return WeightInterval::full();
    }
    let xd = s_rel * dx;
    if r.is_infinite() {
        // Analytic limit of cases (a)/(d): L → 0 and L·r → −1.
        return match side {
            RegionSide::Plus => WeightInterval::new(-dx, 0.0),
            RegionSide::Minus => WeightInterval::new(xd - dx, xd),
        };
    }
    let l = 1.0 / (1.0 - r);
    let (k1, k2, k3) = match side {
        RegionSide::Plus => (l * (r * dx + xd), l * (xd - dx), l * xd),
        RegionSide::Minus => (l * r * (dx - xd), -l * (dx + xd * r), -l * xd * r),
    };
    if r >= 1.0 {
        WeightInterval::new(k1, k2)
    } else if r >= 0.0 {
        WeightInterval::new(k2, k1)
    } else if r >= -1.0 {
        WeightInterval::new(k2, k3)
    } else {
        WeightInterval::new(k1, k3)
    }
}

/// Admissible interval for the weight `β₀` at the interface `x_{i+1/2}`.
pub fn lemma1_interval(r: f64) -> WeightInterval {
    if r == 1.0 {
        return WeightInterval::full();
    }
    if r.is_infinite() {
        return WeightInterval::new(-2.0, 0.0);
    }
    let l = 1.0 / (1.0 - r);
    if r > 1.0 {
        WeightInterval::new((1.0 + 2.0 * r) * l, -l)
    } else if r >= 0.0 {
        WeightInterval::new(-l, (1.0 + 2.0 * r) * l)
    } else if r >= -1.0 {
        WeightInterval::new(-l, l)
    } else {
        WeightInterval::new((1.0 + 2.0 * r) * l, l)
    }
}

/// Admissible interval for the weight `μ₀` at the interface `x_{i−1/2}`.
pub fn lemma2_interval(r: f64) -> WeightInterval {
    if r == 1.0 {
        return WeightInterval::full();
    }
    if r.is_infinite() {
        return WeightInterval::new(1.0, 3.0);
    }
    let l = 1.0 / (1.0 - r);
    if r > 1.0 {
        WeightInterval::new((2.0 - r) * l, -3.0 * r * l)
    } else if r >= 0.0 {
        WeightInterval::new(-3.0 * r * l, (2.0 - r) * l)
    } else if r >= -1.0 {
        WeightInterval::new(-r * l, (2.0 - r) * l)
    } else {
        WeightInterval::new(-r * l, -3.0 * r * l)
    }
}

/// The scalar upper bound `K = min(1, sgn(r)/(r−1))` for `β₀`, with
/// `sgn(r) = 1` for `r > 0` and `−1` for `r ≤ 0`, reported verbatim.
///
/// Note: for `r ∈ (0,1)` this literal value is negative; weight formulas
/// take `|K|`, and membership decisions use [`lemma1_interval`] instead.
pub fn corollary_k(r: f64) -> f64 {
    if r == 1.0 {
        return 1.0;
    }
    if r.is_infinite() {
        return 0.0;
    }
    let sgn = if r > 0.0 { 1.0 } else { -1.0 };
    (sgn / (r - 1.0)).min(1.0)
}

/// The scalar lower bound `J = max(0, min((2−r)/(1−r), −r/(1−r)))` for `μ₀`.
pub fn corollary_j(r: f64) -> f64 {
    if r == 1.0 {
        return 0.0;
    }
    if r.is_infinite() {
        return 1.0;
    }
    let l = 1.0 / (1.0 - r);
    ((2.0 - r) * l).min(-r * l).max(0.0)
}

/// The WENO-admissible weight interval: the lemma interval clipped to the
/// convexity range `[0, 1]`.
pub fn weno_interval(r: f64, side: RegionSide) -> WeightInterval {
    let lemma = match side {
        RegionSide::Plus => lemma1_interval(r),
        RegionSide::Minus => lemma2_interval(r),
    };
    lemma.intersect(&WeightInterval::new(0.0, 1.0))
}

/// Absolute tolerance used for region-membership decisions. A few weight
/// families touch the region boundary exactly in exact arithmetic, so the
/// comparison allows a handful of ulps of rounding slack.
fn membership_tol(w: f64) -> f64 {
    16.0 * f64::EPSILON * w.abs().max(1.0)
}

/// True iff the weight `w` is data-bounded-admissible and convex at `r`:
/// membership in [`weno_interval`] with inclusive endpoints.
pub fn in_weno_region(w: f64, r: f64, side: RegionSide) -> bool {
    weno_interval(r, side).contains(w, membership_tol(w))
}

/// One region-table row per `r`, in input order: the clipped admissible
/// interval plus the literal corollary bound (`K` or `J`).
pub fn sample_region(r_values: &[f64], side: RegionSide) -> Vec<RegionRow> {
    r_values
        .iter()
        .map(|&r| {
            let iv = weno_interval(r, side);
            let (lo, hi) = match iv {
                WeightInterval::Range { lo, hi } => (lo, hi),
                WeightInterval::Empty => (f64::NAN, f64::NAN),
            };
            let bound = match side {
                RegionSide::Plus => corollary_k(r),
                RegionSide::Minus => corollary_j(r),
            };
            RegionRow { r, lo, hi, bound }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(iv: WeightInterval) -> (f64, f64) {
        match iv {
            WeightInterval::Range { lo, hi } => (lo, hi),
            WeightInterval::Empty => panic!("unexpected empty interval"),
        }
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(
            theorem1_alpha_interval(1.0, RegionSide::Plus, 0.3, 1.0),
            WeightInterval::full()
        );
        let (lo, hi) = range(theorem1_alpha_interval(0.0, RegionSide::Plus, 0.5, 1.0));
        assert_eq!((lo, hi), (-0.5, 0.5));
        let (lo, hi) = range(theorem1_alpha_interval(-1.0, RegionSide::Plus, 0.5, 1.0));
        assert_eq!((lo, hi), (-0.25, 0.25));
    }

    #[test]
    fn theorem1_infinite_r_limits() {
        let (lo, hi) = range(theorem1_alpha_interval(
            f64::INFINITY,
            RegionSide::Plus,
            0.5,
            1.0,
        ));
        assert_eq!((lo, hi), (-1.0, 0.0));
        let (lo, hi) = range(theorem1_alpha_interval(
            f64::NEG_INFINITY,
            RegionSide::Minus,
            -0.5,
            1.0,
        ));
        assert_eq!((lo, hi), (-1.5, -0.5));
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(range(lemma1_interval(3.0)), (-3.5, 0.5));
        assert_eq!(range(lemma1_interval(0.0)), (-1.0, 1.0));
        assert_eq!(range(lemma1_interval(-1.0)), (-0.5, 0.5));
        assert_eq!(lemma1_interval(1.0), WeightInterval::full());
        assert_eq!(range(lemma1_interval(f64::INFINITY)), (-2.0, 0.0));
        assert_eq!(range(lemma1_interval(f64::NEG_INFINITY)), (-2.0, 0.0));
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(range(lemma2_interval(2.0)), (0.0, 6.0));
        assert_eq!(range(lemma2_interval(0.0)), (0.0, 2.0));
        let (lo, hi) = range(lemma2_interval(-5.0));
        assert!((lo - 5.0 / 6.0).abs() < 1e-15);
        assert!((hi - 2.5).abs() < 1e-15);
        assert_eq!(range(lemma2_interval(f64::INFINITY)), (1.0, 3.0));
    }

    #[test]
    fn corollary_k_examples() {
        assert_eq!(corollary_k(3.0), 0.5);
        assert_eq!(corollary_k(0.0), 1.0);
        assert_eq!(corollary_k(1.0), 1.0);
        assert_eq!(corollary_k(f64::INFINITY), 0.0);
        assert_eq!(corollary_k(f64::NEG_INFINITY), 0.0);
        // Literal value is negative on (0, 1); reported verbatim.
        assert!(corollary_k(0.5) < 0.0);
    }

    #[test]
    fn corollary_j_examples() {
        assert_eq!(corollary_j(-1.0), 0.5);
        assert_eq!(corollary_j(2.0), 0.0);
        assert_eq!(corollary_j(1.0), 0.0);
        assert_eq!(corollary_j(f64::INFINITY), 1.0);
    }

    #[test]
    fn membership_examples() {
        assert!(in_weno_region(0.25, 1.0, RegionSide::Plus));
        assert!(!in_weno_region(0.25, 10.0, RegionSide::Plus));
        assert!(in_weno_region(5.0 / 6.0, -5.0, RegionSide::Minus));
    }

    #[test]
    fn sample_region_examples() {
        let rows = sample_region(&[1.0], RegionSide::Plus);
        assert_eq!(rows[0].lo, 0.0);
        assert_eq!(rows[0].hi, 1.0);
        assert_eq!(rows[0].bound, 1.0);

        let rows = sample_region(&[0.0], RegionSide::Minus);
        assert_eq!((rows[0].lo, rows[0].hi, rows[0].bound), (0.0, 1.0, 0.0));

        let rows = sample_region(&[10.0], RegionSide::Plus);
        assert_eq!(rows[0].lo, 0.0);
        assert!((rows[0].hi - 1.0 / 9.0).abs() < 1e-15);
        assert!((rows[0].bound - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn case_boundaries_agree() {
        // Lemma endpoints must coincide where the cases meet (r = −1 and 0);
        // at r = 1 the unbounded interval contains both neighbors' limits.
        for eps in [1e-9, 1e-12] {
            let (a_lo, a_hi) = range(lemma1_interval(-1.0 - eps));
            let (b_lo, b_hi) = range(lemma1_interval(-1.0 + eps));
            assert!((a_lo - b_lo).abs() < 1e-8 && (a_hi - b_hi).abs() < 1e-8);
            let (a_lo, a_hi) = range(lemma1_interval(-eps));
            let (b_lo, b_hi) = range(lemma1_interval(eps));
            assert!((a_lo - b_lo).abs() < 1e-8 && (a_hi - b_hi).abs() < 1e-8);

            let (a_lo, a_hi) = range(lemma2_interval(-1.0 - eps));
            let (b_lo, b_hi) = range(lemma2_interval(-1.0 + eps));
            assert!((a_lo - b_lo).abs() < 1e-8 && (a_hi - b_hi).abs() < 1e-8);
            let (a_lo, a_hi) = range(lemma2_interval(-eps));
            let (b_lo, b_hi) = range(lemma2_interval(eps));
            assert!((a_lo - b_lo).abs() < 1e-8 && (a_hi - b_hi).abs() < 1e-8);
        }
    }

    #[test]
    fn interval_intersection_and_empty() {
        let a = WeightInterval::new(0.0, 1.0);
        let b = WeightInterval::new(0.5, 2.0);
        assert_eq!(a.intersect(&b), WeightInterval::new(0.5, 1.0));
        let c = WeightInterval::new(1.5, 2.0);
        assert!(a.intersect(&c).is_empty());
        assert!(WeightInterval::new(1.0, 0.0).is_empty());
    }
}
