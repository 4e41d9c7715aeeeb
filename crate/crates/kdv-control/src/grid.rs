//! Uniform spatial and temporal grids and the sampled-function containers
//! used throughout the crate.
//!
//! All values are immutable after construction; operations elsewhere in the
//! crate treat these as value types and return fresh instances.

use crate::error::{KdvError, Result};
use serde::{Deserialize, Serialize};

/// Uniform 1-D spatial grid with `n` nodes spanning `[x_lo, x_hi]` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    x_lo: f64,
    x_hi: f64,
    n: usize,
}

impl Grid1D {
    pub fn new(x_lo: f64, x_hi: f64, n: usize) -> Result<Self> {
        if !(x_lo.is_finite() && x_hi.is_finite()) {
            return Err(KdvError::InvalidArgument("grid endpoints must be finite".into()));
        }
        if x_lo >= x_hi {
            return Err(KdvError::InvalidArgument(format!(
                "grid requires x_lo < x_hi, got [{x_lo}, {x_hi}]"
            )));
        }
        if n < 3 {
            return Err(KdvError::InvalidArgument(format!(
                "grid requires at least 3 nodes, got {n}"
            )));
        }
        Ok(Self { x_lo, x_hi, n })
    }

    pub fn x_lo(&self) -> f64 {
        self.x_lo
    }

    pub fn x_hi(&self) -> f64 {
        self.x_hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        (self.x_hi - self.x_lo) / (self.n - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        self.x_lo + i as f64 * self.dx()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.node(i))
    }
}

/// Uniform time grid with `m` steps covering `[0, T]` inclusive (`m + 1` nodes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    t_final: f64,
    m: usize,
}

impl TimeGrid {
    pub fn new(t_final: f64, m: usize) -> Result<Self> {
        if !t_final.is_finite() || t_final <= 0.0 {
            return Err(KdvError::InvalidArgument(format!(
                "time horizon must be positive and finite, got {t_final}"
            )));
        }
        if m < 2 {
            return Err(KdvError::InvalidArgument(format!(
                "time grid requires at least 2 steps, got {m}"
            )));
        }
        Ok(Self { t_final, m })
    }

    pub fn horizon(&self) -> f64 {
        self.t_final
    }

    pub fn steps(&self) -> usize {
        self.m
    }

    /// Number of nodes, `m + 1`.
    pub fn len(&self) -> usize {
        self.m + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dt(&self) -> f64 {
        self.t_final / self.m as f64
    }

    pub fn node(&self, k: usize) -> f64 {
        self.t_final * k as f64 / self.m as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.m).map(|k| self.node(k))
    }
}

/// A real-valued function sampled on a [`Grid1D`].
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub grid: Grid1D,
    pub values: Vec<f64>,
}

impl Field {
    pub fn new(grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(KdvError::InvalidArgument(format!(
                "field length {} does not match grid node count {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(KdvError::InvalidArgument("field contains non-finite entries".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid1D) -> Self {
        Self { grid, values: vec![0.0; grid.len()] }
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.nodes().map(f).collect();
        Self { grid, values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }
}

/// A real-valued function sampled on a [`TimeGrid`] (boundary data, traces).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub tgrid: TimeGrid,
    pub values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(tgrid: TimeGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != tgrid.len() {
            return Err(KdvError::InvalidArgument(format!(
                "series length {} does not match time grid node count {}",
                values.len(),
                tgrid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(KdvError::InvalidArgument("series contains non-finite entries".into()));
        }
        Ok(Self { tgrid, values })
    }

    pub fn zeros(tgrid: TimeGrid) -> Self {
        Self { tgrid, values: vec![0.0; tgrid.len()] }
    }

    pub fn from_fn(tgrid: TimeGrid, f: impl Fn(f64) -> f64) -> Self {
        let values = tgrid.nodes().map(f).collect();
        Self { tgrid, values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Linear interpolation at an arbitrary time in `[0, T]`.
    pub fn interp(&self, t: f64) -> f64 {
        let dt = self.tgrid.dt();
        let m = self.tgrid.steps();
        if t <= 0.0 {
            return self.values[0];
        }
        if t >= self.tgrid.horizon() {
            return self.values[m];
        }
        let j = ((t / dt).floor() as usize).min(m - 1);
        let w = (t - j as f64 * dt) / dt;
        self.values[j] * (1.0 - w) + self.values[j + 1] * w
    }
}

/// A real-valued function on the tensor grid: `values[k][i]` is the sample at
/// time node `k` and space node `i`. Stored row-major, one row per time level.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeField {
    pub grid: Grid1D,
    pub tgrid: TimeGrid,
    data: Vec<f64>,
}

impl SpaceTimeField {
    pub fn zeros(grid: Grid1D, tgrid: TimeGrid) -> Self {
        let data = vec![0.0; grid.len() * tgrid.len()];
        Self { grid, tgrid, data }
    }

    pub fn from_rows(grid: Grid1D, tgrid: TimeGrid, rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.len() != tgrid.len() {
            return Err(KdvError::InvalidArgument(format!(
                "expected {} time rows, got {}",
                tgrid.len(),
                rows.len()
            )));
        }
        let mut data = Vec::with_capacity(grid.len() * tgrid.len());
        for row in &rows {
            if row.len() != grid.len() {
                return Err(KdvError::InvalidArgument("row length mismatch".into()));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { grid, tgrid, data })
    }

    pub fn value(&self, k: usize, i: usize) -> f64 {
        self.data[k * self.grid.len() + i]
    }

    pub fn set(&mut self, k: usize, i: usize, v: f64) {
        self.data[k * self.grid.len() + i] = v;
    }

    pub fn row(&self, k: usize) -> &[f64] {
        let n = self.grid.len();
        &self.data[k * n..(k + 1) * n]
    }

    pub fn row_mut(&mut self, k: usize) -> &mut [f64] {
        let n = self.grid.len();
        &mut self.data[k * n..(k + 1) * n]
    }

    pub fn set_row(&mut self, k: usize, row: &[f64]) {
        self.row_mut(k).copy_from_slice(row);
    }

    pub fn row_field(&self, k: usize) -> Field {
        Field { grid: self.grid, values: self.row(k).to_vec() }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Space-time L2 norm (trapezoid in both directions).
    pub fn l2_space_time(&self) -> f64 {
        let dx = self.grid.dx();
        let dt = self.tgrid.dt();
        let mut acc = 0.0;
        for k in 0..self.tgrid.len() {
            let row = self.row(k);
            let mut s = 0.0;
            for (i, v) in row.iter().enumerate() {
                let wx = if i == 0 || i == row.len() - 1 { 0.5 } else { 1.0 };
                s += wx * v * v;
            }
            let wt = if k == 0 || k == self.tgrid.len() - 1 { 0.5 } else { 1.0 };
            acc += wt * s;
        }
        (acc * dx * dt).sqrt()
    }
}

/// Relative L2 distance between two equally shaped fields, normalized by the
/// norm of `reference`.
pub fn relative_l2_space_time(a: &SpaceTimeField, reference: &SpaceTimeField) -> f64 {
    assert_eq!(a.grid.len(), reference.grid.len());
    assert_eq!(a.tgrid.len(), reference.tgrid.len());
    let mut diff = reference.clone();
    for k in 0..a.tgrid.len() {
        for i in 0..a.grid.len() {
            let d = a.value(k, i) - reference.value(k, i);
            diff.set(k, i, d);
        }
    }
    let denom = reference.l2_space_time();
    if denom == 0.0 {
        return diff.l2_space_time();
    }
    diff.l2_space_time() / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_node_endpoint_exact() {
        let g = Grid1D::new(-3.0, 7.0, 501).unwrap();
        let last = g.node(g.len() - 1);
        assert!((last - 7.0).abs() <= 7.0 * f64::EPSILON * 4.0);
    }

    #[test]
    fn degenerate_grids_rejected() {
        assert!(Grid1D::new(0.0, 1.0, 2).is_err());
        assert!(Grid1D::new(1.0, 1.0, 10).is_err());
        assert!(Grid1D::new(2.0, 1.0, 10).is_err());
        assert!(TimeGrid::new(1.0, 1).is_err());
        assert!(TimeGrid::new(0.0, 10).is_err());
        assert!(TimeGrid::new(-1.0, 10).is_err());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let g = Grid1D::new(0.0, 1.0, 5).unwrap();
        assert!(Field::new(g, vec![0.0; 4]).is_err());
        assert!(Field::new(g, vec![f64::NAN; 5]).is_err());
        let tg = TimeGrid::new(1.0, 4).unwrap();
        assert!(TimeSeries::new(tg, vec![0.0; 4]).is_err());
    }

    #[test]
    fn space_time_round_trip() {
        let g = Grid1D::new(0.0, 1.0, 4).unwrap();
        let tg = TimeGrid::new(1.0, 2).unwrap();
        let mut f = SpaceTimeField::zeros(g, tg);
        f.set(2, 3, 5.0);
        assert_eq!(f.value(2, 3), 5.0);
        assert_eq!(f.row(2), &[0.0, 0.0, 0.0, 5.0]);
    }
}
