//! Oracle cross-checks: the closed-form admissibility intervals against an
//! independent brute-force sampler, in both directions. In-region weights
//! must never violate the data bounds; weights pushed just outside the
//! interval must produce a detectable violation (sharpness) in every sign
//! regime of the smoothness ratio.

use dbweno_core::{
    admissible_alpha0_interval, brute_force_bounded, theorem1_alpha_interval, GridMode,
    RegionSide, Stencil3, WeightInterval,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 2001;

fn s3(vm: f64, v0: f64, vp: f64) -> Stencil3 {
    Stencil3::new(vm, v0, vp, GridMode::PointValues)
}

fn random_stencil(rng: &mut ChaCha8Rng) -> Stencil3 {
    let base: f64 = rng.gen_range(-10.0..10.0);
    let scale = 10f64.powi(rng.gen_range(-6..6));
    let dm: f64 = rng.gen_range(-1.0..1.0) * scale;
    let dp: f64 = match rng.gen_range(0..4) {
        0 => 0.0,
        1 => dm, // smooth data, r = 1
        _ => rng.gen_range(-1.0..1.0) * scale,
    };
    s3(base, base + dm, base + dm + dp)
}

#[test]
fn in_region_constant_weights_never_violate_data_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut trials = 0usize;
    while trials < 2000 {
        let s = random_stencil(&mut rng);
        let (lo, hi) = match admissible_alpha0_interval(&s, SAMPLES) {
            WeightInterval::Range { lo, hi } => (lo, hi),
            WeightInterval::Empty => continue,
        };
        // Sample strictly inside the admissible interval, clamping the
        // unbounded (r = 1) case to a generous finite window.
        let lo = lo.max(-1e3);
        let hi = hi.min(1e3);
        if !(hi > lo) {
            continue;
        }
        let t: f64 = rng.gen_range(1e-6..1.0 - 1e-6);
        let alpha0 = lo + t * (hi - lo);
        let rep = brute_force_bounded(&s, alpha0, SAMPLES);
        // Rounding in the blend is amplified by |α₀| when the weights are
        // large and the two line contributions cancel.
        let scale = s.vm.abs().max(s.v0.abs()).max(s.vp.abs()).max(1.0);
        let tol = 8.0 * f64::EPSILON * scale * (1.0 + alpha0.abs());
        assert!(
            rep.worst_violation <= tol,
            "in-region violation: stencil {s:?}, alpha0 = {alpha0}, report {rep:?}"
        );
        trials += 1;
    }
}

/// Searches for an out-of-interval weight that demonstrably violates the
/// data bounds, for a stencil drawn with r⁺ in `r_range`. Returns the number
/// of trials used.
fn sharpness_search(rng: &mut ChaCha8Rng, r_range: (f64, f64), budget: usize) -> Option<usize> {
    for trial in 1..=budget {
        let r: f64 = rng.gen_range(r_range.0..r_range.1);
        // vm = 0, v0 = 1 gives Δ₋ = 1; vp chosen so that Δ₊ = 1/r.
        let s = s3(0.0, 1.0, 1.0 + 1.0 / r);
        let b = s.data_bounds();
        let margin = 0.05 * (b.big_m - b.m);
        // Pick a sample-grid point x* ≠ 0 away from the center, so the
        // violated pointwise constraint is actually tested by the oracle.
        let j = loop {
            let j = rng.gen_range(0..SAMPLES);
            let x = -1.0 + 2.0 * j as f64 / (SAMPLES - 1) as f64;
            if x.abs() > 0.2 {
                break j;
            }
        };
        let x = -1.0 + 2.0 * j as f64 / (SAMPLES - 1) as f64;
        let (lo, hi) = match theorem1_alpha_interval(r, RegionSide::Plus, x, 1.0) {
            WeightInterval::Range { lo, hi } => (lo, hi),
            WeightInterval::Empty => continue,
        };
        // Step the product α₀·x past a finite endpoint of its admissible
        // interval by the excursion margin.
        let product = if rng.gen_bool(0.5) && hi.is_finite() {
            hi + margin
        } else if lo.is_finite() {
            lo - margin
        } else if hi.is_finite() {
            hi + margin
        } else {
            continue;
        };
        let alpha0 = product / x;
        let rep = brute_force_bounded(&s, alpha0, SAMPLES);
        if rep.worst_violation > 0.0 {
            return Some(trial);
        }
    }
    None
}

#[test]
fn out_of_interval_weights_violate_in_every_ratio_regime() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    // One representative r-range per sign/magnitude regime of the ratio.
    let regimes = [
        ("r >= 1", (1.5, 4.0)),
        ("0 <= r < 1", (0.1, 0.85)),
        ("-1 <= r < 0", (-0.9, -0.1)),
        ("r < -1", (-4.0, -1.1)),
    ];
    for (label, range) in regimes {
        let found = sharpness_search(&mut rng, range, 1000);
        assert!(
            found.is_some(),
            "no boundedness violation found just outside the interval for {label}"
        );
    }
}

#[test]
fn admissible_interval_is_nonempty_and_safe_on_smooth_data() {
    // Monotone data vm=0, v0=1, vp=2.1: the blended slope is
    // s = 1.1 − 0.1·α₀, and v̂(x) = 1 + s·x must stay in [0, 2.1] on
    // [−1, 1]. The binding constraints are v̂(−1) ≥ 0 (α₀ ≥ 1) and
    // v̂(1) ≥ 0 (α₀ ≤ 21), so the admissible interval is exactly [1, 21].
    let s = s3(0.0, 1.0, 2.1);
    let iv = admissible_alpha0_interval(&s, SAMPLES);
    let (lo, hi) = match iv {
        WeightInterval::Range { lo, hi } => (lo, hi),
        WeightInterval::Empty => panic!("empty interval on monotone data"),
    };
    assert!((lo - 1.0).abs() < 1e-9 && (hi - 21.0).abs() < 1e-9, "interval [{lo}, {hi}]");
    for t in [0.001, 0.25, 0.5, 0.75, 0.999] {
        let alpha0 = lo + t * (hi - lo);
        let rep = brute_force_bounded(&s, alpha0, SAMPLES);
        assert!(rep.bounded, "alpha0 = {alpha0}: {rep:?}");
    }
}

#[test]
fn extremum_stencil_admits_only_the_blend_toward_the_data() {
    // At a local maximum (r = -1) any nonzero pure-line weight overshoots;
    // the admissible interval collapses around a narrow band.
    let s = s3(0.0, 1.0, 0.0);
    match admissible_alpha0_interval(&s, SAMPLES) {
        WeightInterval::Range { lo, hi } => {
            // The symmetric blend α₀ = 1/2 keeps v̂ ≡ v0 = 1 ∈ [0, 1].
            assert!(lo <= 0.5 && 0.5 <= hi, "interval [{lo}, {hi}]");
            let rep = brute_force_bounded(&s, 0.5, SAMPLES);
            assert!(rep.bounded);
            // Well outside: pure left line overshoots by Δ₋ at x = 1.
            let rep = brute_force_bounded(&s, 1.0, SAMPLES);
            assert!(!rep.bounded);
        }
        WeightInterval::Empty => panic!("extremum stencil should still admit α₀ = 1/2"),
    }
}
