//! Stencil primitives: one-sided differences, smoothness ratios, data bounds.

use crate::grid::GridMode;

/// Three consecutive data values `v_{i−1}, v_i, v_{i+1}` around index `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stencil3 {
    pub vm: f64,
    pub v0: f64,
    pub vp: f64,
    pub mode: GridMode,
}

/// Four consecutive data values `v_{i−1}, v_i, v_{i+1}, v_{i+2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stencil4 {
    pub vm: f64,
    pub v0: f64,
    pub vp: f64,
    pub vpp: f64,
    pub mode: GridMode,
}

/// Smoothness ratios `r⁺ = Δ₋v/Δ₊v` and `r⁻ = Δ₊v/Δ₋v` in extended-real
/// arithmetic. A 0/0 ratio is resolved to 1 with the corresponding
/// `degenerate_*` flag set; a nonzero/0 ratio is ±∞ with the numerator's sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothnessPair {
    pub r_plus: f64,
    pub r_minus: f64,
    pub degenerate_plus: bool,
    pub degenerate_minus: bool,
}

/// Componentwise min and max of a stencil's entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DataBounds {
    pub m: f64,
    pub big_m: f64,
}

impl DataBounds {
    /// True when `v` lies in `[m, M]` allowing an excursion of `tol`.
    pub fn contains(&self, v: f64, tol: f64) -> bool {
        v >= self.m - tol && v <= self.big_m + tol
    }

    /// Excursion of `v` outside `[m, M]` (0 when inside).
    pub fn excursion(&self, v: f64) -> f64 {
        (self.m - v).max(v - self.big_m).max(0.0)
    }
}

/// Extended-real ratio `num/den` with the 0/0 → (1, degenerate) convention.
fn extended_ratio(num: f64, den: f64) -> (f64, bool) {
    if den == 0.0 {
        if num == 0.0 {
            (1.0, true)
        } else if num > 0.0 {
            (f64::INFINITY, false)
        } else {
            (f64::NEG_INFINITY, false)
        }
    } else {
        (num / den, false)
    }
}

impl Stencil3 {
    pub fn new(vm: f64, v0: f64, vp: f64, mode: GridMode) -> Self {
        debug_assert!(vm.is_finite() && v0.is_finite() && vp.is_finite());
        Self { vm, v0, vp, mode }
    }

    /// One-sided differences `(Δ₋v, Δ₊v) = (v_i − v_{i−1}, v_{i+1} − v_i)`.
    pub fn differences(&self) -> (f64, f64) {
        (self.v0 - self.vm, self.vp - self.v0)
    }

    /// Smoothness ratios `r⁺` and `r⁻` of this stencil.
    pub fn smoothness(&self) -> SmoothnessPair {
        let (dm, dp) = self.differences();
        let (r_plus, degenerate_plus) = extended_ratio(dm, dp);
        let (r_minus, degenerate_minus) = extended_ratio(dp, dm);
        SmoothnessPair {
            r_plus,
            r_minus,
            degenerate_plus,
            degenerate_minus,
        }
    }

    /// Min/max of the three entries.
    pub fn data_bounds(&self) -> DataBounds {
        DataBounds {
            m: self.vm.min(self.v0).min(self.vp),
            big_m: self.vm.max(self.v0).max(self.vp),
        }
    }
}

impl Stencil4 {
    pub fn new(vm: f64, v0: f64, vp: f64, vpp: f64, mode: GridMode) -> Self {
        debug_assert!(vm.is_finite() && v0.is_finite() && vp.is_finite() && vpp.is_finite());
        Self {
            vm,
            v0,
            vp,
            vpp,
            mode,
        }
    }

    /// The left three-point sub-stencil `{v_{i−1}, v_i, v_{i+1}}`.
    pub fn left3(&self) -> Stencil3 {
        Stencil3::new(self.vm, self.v0, self.vp, self.mode)
    }

    /// The shifted three-point sub-stencil `{v_i, v_{i+1}, v_{i+2}}`,
    /// i.e. the stencil of index `i+1`.
    pub fn right3(&self) -> Stencil3 {
        Stencil3::new(self.v0, self.vp, self.vpp, self.mode)
    }

    /// Min/max of the four entries.
    pub fn data_bounds(&self) -> DataBounds {
        DataBounds {
            m: self.vm.min(self.v0).min(self.vp).min(self.vpp),
            big_m: self.vm.max(self.v0).max(self.vp).max(self.vpp),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridMode::PointValues;

    fn s3(vm: f64, v0: f64, vp: f64) -> Stencil3 {
        Stencil3::new(vm, v0, vp, PointValues)
    }

    #[test]
    fn differences_examples() {
        assert_eq!(s3(0.0, 1.0, 2.0).differences(), (1.0, 1.0));
        assert_eq!(s3(1.0, 1.0, 1.0).differences(), (0.0, 0.0));
        assert_eq!(s3(0.0, 1.0, 3.0).differences(), (1.0, 2.0));
    }

    #[test]
    fn smoothness_examples() {
        let sp = s3(0.0, 1.0, 2.0).smoothness();
        assert_eq!(sp.r_plus, 1.0);
        assert_eq!(sp.r_minus, 1.0);
        assert!(!sp.degenerate_plus && !sp.degenerate_minus);

        let sp = s3(0.0, 0.0, 1.0).smoothness();
        assert_eq!(sp.r_plus, 0.0);
        assert_eq!(sp.r_minus, f64::INFINITY);
        // ±∞ ratios are well-defined extended reals, not the 0/0 case.
        assert!(!sp.degenerate_plus && !sp.degenerate_minus);

        let sp = s3(0.0, 1.0, 0.0).smoothness();
        assert_eq!(sp.r_plus, -1.0);
        assert_eq!(sp.r_minus, -1.0);
    }

    #[test]
    fn smoothness_degenerate_constant_data() {
        let sp = s3(2.0, 2.0, 2.0).smoothness();
        assert_eq!(sp.r_plus, 1.0);
        assert_eq!(sp.r_minus, 1.0);
        assert!(sp.degenerate_plus && sp.degenerate_minus);
    }

    #[test]
    fn smoothness_negative_infinity_sign() {
        let sp = s3(1.0, 0.0, 0.0).smoothness();
        assert_eq!(sp.r_plus, f64::NEG_INFINITY);
        assert_eq!(sp.r_minus, 0.0);
    }

    #[test]
    fn data_bounds_examples() {
        let b = s3(0.0, 1.0, 2.0).data_bounds();
        assert_eq!((b.m, b.big_m), (0.0, 2.0));
        let b = s3(1.0, 1.0, 1.0).data_bounds();
        assert_eq!((b.m, b.big_m), (1.0, 1.0));
        let b = s3(1.0, 1.0, 0.0).data_bounds();
        assert_eq!((b.m, b.big_m), (0.0, 1.0));

        let b = Stencil4::new(0.0, 1.0, 1.0, 0.0, PointValues).data_bounds();
        assert_eq!((b.m, b.big_m), (0.0, 1.0));
    }

    #[test]
    fn reciprocal_smoothness() {
        let sp = s3(0.25, 1.0, -3.0).smoothness();
        assert!((sp.r_plus * sp.r_minus - 1.0).abs() <= f64::EPSILON);
    }
}
