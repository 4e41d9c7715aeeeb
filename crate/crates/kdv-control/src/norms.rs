//! Discrete L2 and fractional Sobolev norms, and the Riesz map between
//! `H^s(0,T)` spaces.
//!
//! The `H^s(0, T)` norm of a series is computed spectrally: the series is
//! extended by zero to `[0, 4T]`, transformed with a DFT, and weighted by
//! `(1 + tau^2)^s` over the continuous angular frequencies of the padded
//! interval. For traces that vanish near the endpoints (the cutoff window
//! arranges this) the padding makes the periodization error negligible.

use crate::error::{KdvError, Result};
use crate::grid::{Field, TimeSeries};
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Padding factor for the zero-extension of `(0, T)` series.
pub const PAD_FACTOR: usize = 4;

/// Trapezoid L2 norm of samples with uniform spacing `h`.
pub fn l2_norm_samples(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    let mut acc = 0.0;
    for (i, v) in values.iter().enumerate() {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += w * v * v;
    }
    (acc * h).sqrt()
}

/// Trapezoid L2 norm of a spatial field.
pub fn l2_norm_field(f: &Field) -> f64 {
    l2_norm_samples(&f.values, f.grid.dx())
}

/// Trapezoid L2 norm of a time series.
pub fn l2_norm_series(f: &TimeSeries) -> f64 {
    l2_norm_samples(&f.values, f.tgrid.dt())
}

/// Weighted inner product `int a b` by trapezoid.
pub fn inner_product(a: &[f64], b: &[f64], h: f64) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut acc = 0.0;
    for i in 0..n {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += w * a[i] * b[i];
    }
    acc * h
}

fn check_finite(f: &TimeSeries) -> Result<()> {
    if f.values.iter().any(|v| !v.is_finite()) {
        return Err(KdvError::InvalidArgument("series contains non-finite entries".into()));
    }
    Ok(())
}

/// DFT of the zero-padded series. Returns (spectrum, d_tau) where the
/// spectrum approximates the continuous Fourier transform divided by
/// sqrt(2 pi), sampled at the angular frequencies `tau_j` of the padded
/// interval.
fn padded_spectrum(f: &TimeSeries) -> (Vec<Complex64>, f64) {
    let m = f.tgrid.steps();
    let n_pad = PAD_FACTOR * m;
    let dt = f.tgrid.dt();
    let mut buf: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n_pad];
    for (k, v) in f.values.iter().enumerate() {
        buf[k] = Complex64::new(*v, 0.0);
    }
    FftPlanner::new().plan_fft_forward(n_pad).process(&mut buf);
    let scale = dt / (2.0 * PI).sqrt();
    for c in buf.iter_mut() {
        *c *= scale;
    }
    let d_tau = 2.0 * PI / (n_pad as f64 * dt);
    (buf, d_tau)
}

fn freq(j: usize, n_pad: usize, d_tau: f64) -> f64 {
    let jj = if j <= n_pad / 2 { j as f64 } else { j as f64 - n_pad as f64 };
    jj * d_tau
}

/// Discrete `H^s(0, T)` norm, `s` in `[-1, 1]`.
pub fn sobolev_norm_time(f: &TimeSeries, s: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&s) {
        return Err(KdvError::InvalidArgument(format!(
            "sobolev order must lie in [-1, 1], got {s}"
        )));
    }
    check_finite(f)?;
    let (spec, d_tau) = padded_spectrum(f);
    let n_pad = spec.len();
    let mut acc = 0.0;
    for (j, c) in spec.iter().enumerate() {
        let tau = freq(j, n_pad, d_tau);
        let w = (1.0 + tau * tau).powf(s);
        acc += w * c.norm_sqr();
    }
    Ok((acc * d_tau).sqrt())
}

/// Riesz map between `H^(s_from)(0,T)` and `H^(s_to)(0,T)`: the transform is
/// multiplied pointwise by `<tau>^(s_from - s_to)`, which preserves the
/// weighted norm (`H^(s_to)` norm of the output equals the `H^(s_from)` norm
/// of the input). In particular the duality map `H^(-1/3) -> H^(1/3)` is the
/// smoothing multiplier `<tau>^(-2/3)`.
///
/// The series is extended evenly (mirrored) to a circle of length `2T` and
/// the multiplier is applied in that basis, so the map never leaves `[0, T]`:
/// applying it with swapped exponents inverts it to round-off, and the
/// operator is exactly self-adjoint in the trapezoid-weighted inner product.
/// Both properties are load-bearing for the control-synthesis layer.
pub fn riesz_map_time(f: &TimeSeries, s_from: f64, s_to: f64) -> TimeSeries {
    if s_from == s_to {
        return f.clone();
    }
    let m = f.tgrid.steps();
    let dt = f.tgrid.dt();
    let n_circ = 2 * m;
    let mut buf: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n_circ];
    for (k, v) in f.values.iter().enumerate() {
        buf[k] = Complex64::new(*v, 0.0);
    }
    for k in 1..m {
        buf[n_circ - k] = Complex64::new(f.values[k], 0.0);
    }
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n_circ).process(&mut buf);
    let d_tau = 2.0 * PI / (n_circ as f64 * dt); // = pi / T
    for (j, c) in buf.iter_mut().enumerate() {
        let tau = freq(j, n_circ, d_tau);
        *c *= (1.0 + tau * tau).powf(0.5 * (s_from - s_to));
    }
    planner.plan_fft_inverse(n_circ).process(&mut buf);
    let values = (0..=m).map(|k| buf[k].re / n_circ as f64).collect();
    TimeSeries { tgrid: f.tgrid, values }
}

/// Apply the Riesz weight `<tau>^(2s)`: the duality map from `H^(-s)(0,T)`
/// onto `H^(s)(0,T)`. Symmetric positive in the trapezoid-weighted discrete
/// inner product, which the HUM Gram construction relies on.
pub fn riesz_weight(f: &TimeSeries, s: f64) -> TimeSeries {
    riesz_map_time(f, -s, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TimeGrid;

    fn bump_series(tg: TimeGrid, lo: f64, hi: f64) -> TimeSeries {
        TimeSeries::from_fn(tg, |t| {
            let s = (t - lo) / (hi - lo);
            if s <= 0.0 || s >= 1.0 {
                0.0
            } else {
                (-1.0 / (s * (1.0 - s))).exp() * 54.6 // roughly unit height
            }
        })
    }

    #[test]
    fn l2_closed_forms() {
        let tg = TimeGrid::new(1.0, 100).unwrap();
        let zero = TimeSeries::zeros(tg);
        assert_eq!(l2_norm_series(&zero), 0.0);
        let one = TimeSeries::from_fn(tg, |_| 1.0);
        assert!((l2_norm_series(&one) - 1.0).abs() < 1e-14);
        let tg2 = TimeGrid::new(1.0, 1000).unwrap();
        let ramp = TimeSeries::from_fn(tg2, |t| t);
        assert!((l2_norm_series(&ramp) - 1.0 / 3f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn sobolev_zero_order_matches_l2() {
        let tg = TimeGrid::new(1.0, 256).unwrap();
        let f = bump_series(tg, 0.2, 0.8);
        let h0 = sobolev_norm_time(&f, 0.0).unwrap();
        let l2 = l2_norm_series(&f);
        assert!((h0 - l2).abs() / l2 < 0.02, "H0 {h0} vs L2 {l2}");
    }

    #[test]
    fn frequency_weighting_monotone() {
        let tg = TimeGrid::new(1.0, 512).unwrap();
        let windowed = |k: f64| {
            TimeSeries::from_fn(tg, |t| {
                let s = t / 1.0;
                let window = if s <= 0.0 || s >= 1.0 {
                    0.0
                } else {
                    (-1.0 / (s * (1.0 - s))).exp() * 54.6
                };
                (2.0 * PI * k * t).sin() * window
            })
        };
        let ratio = |k: f64| {
            let f = windowed(k);
            sobolev_norm_time(&f, -1.0 / 3.0).unwrap() / sobolev_norm_time(&f, 0.0).unwrap()
        };
        assert!(ratio(16.0) < ratio(2.0));
    }

    #[test]
    fn riesz_round_trip() {
        let tg = TimeGrid::new(1.0, 256).unwrap();
        let f = bump_series(tg, 0.25, 0.75);
        let fwd = riesz_map_time(&f, -1.0 / 3.0, 1.0 / 3.0);
        let back = riesz_map_time(&fwd, 1.0 / 3.0, -1.0 / 3.0);
        let num: f64 = f
            .values
            .iter()
            .zip(&back.values)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        let den: f64 = f.values.iter().map(|a| a * a).sum::<f64>().sqrt();
        assert!(num / den < 1e-6, "round trip error {}", num / den);
    }

    #[test]
    fn riesz_identity_when_orders_match() {
        let tg = TimeGrid::new(2.0, 128).unwrap();
        let f = bump_series(tg, 0.5, 1.5);
        let g = riesz_map_time(&f, 0.25, 0.25);
        assert_eq!(f.values, g.values);
    }

    #[test]
    fn riesz_smoothing_reduces_total_variation() {
        let tg = TimeGrid::new(1.0, 200).unwrap();
        let f = TimeSeries::from_fn(tg, |_| 1.0);
        let g = riesz_map_time(&f, 0.0, -2.0);
        let tv = |v: &[f64]| v.windows(2).map(|w| (w[1] - w[0]).abs()).sum::<f64>();
        assert!(tv(&g.values) <= tv(&f.values) + 1e-12);
    }

    #[test]
    fn sobolev_rejects_bad_input() {
        let tg = TimeGrid::new(1.0, 16).unwrap();
        let f = TimeSeries::zeros(tg);
        assert!(sobolev_norm_time(&f, 2.0).is_err());
        assert_eq!(sobolev_norm_time(&f, 0.5).unwrap(), 0.0);
    }
}
