//! Smooth cutoff window in time.
//!
//! `theta` equals one on `[0, plateau_end]`, decays smoothly to zero across
//! `[plateau_end, 2 plateau_end]`, and vanishes beyond. The decay ramp is the
//! normalized tail integral of the classic exponential bump
//! `exp(1 - 1/(1 - s^2))` on `s in [-1, 1]`, with `s = 2 t/plateau_end - 3`,
//! which makes the window infinitely differentiable at both junctions.

use crate::error::{KdvError, Result};
use crate::grid::{TimeGrid, TimeSeries};

fn bump(s: f64) -> f64 {
    if s.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - s * s)).exp()
    }
}

/// Normalized integral of the bump over `[s, 1]`; equals 1 at `s = -1` and
/// 0 at `s = 1`. Composite Simpson is plenty for the smooth integrand.
fn smooth_step_down(s: f64) -> f64 {
    if s <= -1.0 {
        return 1.0;
    }
    if s >= 1.0 {
        return 0.0;
    }
    let simpson = |a: f64, b: f64, panels: usize| -> f64 {
        let h = (b - a) / panels as f64;
        let mut acc = bump(a) + bump(b);
        for i in 1..panels {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * bump(a + i as f64 * h);
        }
        acc * h / 3.0
    };
    // total mass of the bump over [-1, 1]; frozen number of panels keeps the
    // window deterministic
    let total = simpson(-1.0, 1.0, 512);
    (simpson(s, 1.0, 512) / total).clamp(0.0, 1.0)
}

/// Evaluate the cutoff at one time for a given plateau end.
pub fn cutoff_theta_at(t: f64, plateau_end: f64) -> f64 {
    if t <= plateau_end {
        1.0
    } else if t >= 2.0 * plateau_end {
        0.0
    } else {
        smooth_step_down(2.0 * (t / plateau_end) - 3.0)
    }
}

/// Sample the cutoff on a time grid.
pub fn make_cutoff_theta(tgrid: TimeGrid, plateau_end: f64) -> Result<TimeSeries> {
    if !(plateau_end > 0.0) || plateau_end > tgrid.horizon() {
        return Err(KdvError::InvalidArgument(format!(
            "plateau_end must lie in (0, T]; got {plateau_end} with T = {}",
            tgrid.horizon()
        )));
    }
    Ok(TimeSeries::from_fn(tgrid, |t| cutoff_theta_at(t, plateau_end)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plateau_and_support() {
        let tg = TimeGrid::new(2.0, 400).unwrap();
        let theta = make_cutoff_theta(tg, 1.0).unwrap();
        assert_eq!(theta.values[0], 1.0);
        assert_eq!(theta.interp(0.5), 1.0);
        assert_eq!(theta.interp(1.0), 1.0);
        assert_eq!(theta.interp(2.0), 0.0);
        let mid = cutoff_theta_at(1.5, 1.0);
        assert!(mid > 0.0 && mid < 1.0);
        // the ramp integral is symmetric, so the midpoint is exactly 1/2
        assert!((mid - 0.5).abs() < 1e-12, "midpoint {mid}");
    }

    #[test]
    fn bounds_and_monotone_ramp() {
        let p = 0.7;
        let mut prev = 1.0;
        let mut t = p;
        while t <= 2.0 * p + 1e-9 {
            let v = cutoff_theta_at(t, p);
            assert!((0.0..=1.0).contains(&v));
            assert!(v <= prev + 1e-14, "not monotone at t={t}");
            prev = v;
            t += p / 400.0;
        }
    }

    #[test]
    fn smooth_at_junctions() {
        // first and second finite differences stay small near both junctions
        let p = 1.0;
        let h = 1e-4;
        for t0 in [p, 2.0 * p] {
            let d1 = (cutoff_theta_at(t0 + h, p) - cutoff_theta_at(t0 - h, p)) / (2.0 * h);
            let d2 = (cutoff_theta_at(t0 + h, p) - 2.0 * cutoff_theta_at(t0, p)
                + cutoff_theta_at(t0 - h, p))
                / (h * h);
            assert!(d1.abs() < 1e-3, "first derivative jump at {t0}: {d1}");
            assert!(d2.abs() < 1e-2, "second derivative jump at {t0}: {d2}");
        }
    }

    #[test]
    fn invalid_plateau_rejected() {
        let tg = TimeGrid::new(1.0, 10).unwrap();
        assert!(make_cutoff_theta(tg, 0.0).is_err());
        assert!(make_cutoff_theta(tg, -1.0).is_err());
        assert!(make_cutoff_theta(tg, 1.5).is_err());
    }
}
