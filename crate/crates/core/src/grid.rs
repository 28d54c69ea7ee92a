//! Uniform 1D grids over an interval `[a, b]`.

use crate::error::CoreError;

/// Whether grid entries are nodal point values or cell-centered averages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridMode {
    /// Nodes at `a + j·dx`.
    PointValues,
    /// Cell centers at `a + (j + 1/2)·dx`; data are cell averages.
    CellAverages,
}

/// Evenly spaced grid with `n` points (or cells) on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub dx: f64,
}

impl UniformGrid {
    /// Builds a grid with spacing `dx = (b − a)/n`.
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::InvalidParameter {
                name: "n",
                value: 0.0,
                expected: "a positive integer",
            });
        }
        let dx = (b - a) / n as f64;
        if !(dx > 0.0) {
            return Err(CoreError::NonPositive {
                context: "grid spacing",
                value: dx,
            });
        }
        Ok(Self { a, b, n, dx })
    }

    /// Node position `a + j·dx` (point-value mode).
    pub fn node(&self, j: usize) -> f64 {
        self.a + j as f64 * self.dx
    }

    /// Cell-center position `a + (j + 1/2)·dx` (cell-average mode).
    pub fn center(&self, j: usize) -> f64 {
        self.a + (j as f64 + 0.5) * self.dx
    }

    /// Left edge of cell `j`.
    pub fn left_edge(&self, j: usize) -> f64 {
        self.a + j as f64 * self.dx
    }

    /// All cell centers, in index order.
    pub fn centers(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.center(j)).collect()
    }
}
