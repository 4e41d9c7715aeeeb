//! Riemann-Liouville fractional integrals `I_alpha` on `(0, T)` and their
//! extension to negative orders.
//!
//! Positive orders use product integration: the integrand is reconstructed
//! piecewise-linearly and the weakly singular kernel `(t - s)^(alpha - 1)` is
//! integrated exactly against the linear elements, giving the classical
//! fractional trapezoid weights. Negative orders differentiate a
//! higher-order integral, which mirrors how the operator family is extended
//! past `Re alpha > 0` in the first place: one discrete derivative for
//! orders in `(-1, 0)`, two for `[-2, -1]`.

use crate::error::{KdvError, Result};
use crate::grid::TimeSeries;
use crate::special::gamma_fn;

/// Order of fractional integration; negative values differentiate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || !(-2.0..=2.0).contains(&alpha) {
            return Err(KdvError::InvalidArgument(format!(
                "fractional order must lie in [-2, 2], got {alpha}"
            )));
        }
        Ok(Self(alpha))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Convolution weights of the fractional trapezoid rule. `head[i]` is the
/// weight of `f_0` in the value at node `i`; `interior[k]` the weight of
/// `f_(i-k)` for `1 <= k <= i-1`; the weight of `f_i` is always 1. All are
/// scaled by `dt^alpha / Gamma(alpha + 2)` on application.
struct PiWeights {
    head: Vec<f64>,
    interior: Vec<f64>,
}

fn pi_weights(alpha: f64, m: usize) -> PiWeights {
    let p = alpha + 1.0;
    let mut head = Vec::with_capacity(m + 1);
    let mut interior = Vec::with_capacity(m + 1);
    head.push(0.0);
    interior.push(0.0);
    for i in 1..=m {
        let fi = i as f64;
        head.push((fi - 1.0).powf(p) - fi.powf(alpha) * (fi - alpha - 1.0));
        interior
            .push((fi + 1.0).powf(p) - 2.0 * fi.powf(p) + (fi - 1.0).powf(p));
    }
    PiWeights { head, interior }
}

/// Fractional integral of strictly positive order by product integration.
fn integral_positive(f: &TimeSeries, alpha: f64) -> TimeSeries {
    let m = f.tgrid.steps();
    let dt = f.tgrid.dt();
    let w = pi_weights(alpha, m);
    let scale = dt.powf(alpha) / gamma_fn(alpha + 2.0).expect("alpha + 2 > 0");
    let mut out = vec![0.0; m + 1];
    for i in 1..=m {
        let mut acc = w.head[i] * f.values[0] + f.values[i];
        for j in 1..i {
            acc += w.interior[i - j] * f.values[j];
        }
        out[i] = scale * acc;
    }
    TimeSeries { tgrid: f.tgrid, values: out }
}

/// Fourth-order first derivative on a uniform grid, one-sided at the edges.
pub(crate) fn derivative_time(f: &TimeSeries) -> TimeSeries {
    let m = f.tgrid.steps();
    let h = f.tgrid.dt();
    let v = &f.values;
    let mut out = vec![0.0; m + 1];
    if m >= 4 {
        out[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4])
            / (12.0 * h);
        out[1] =
            (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) / (12.0 * h);
        for i in 2..m - 1 {
            out[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
        }
        out[m - 1] = (3.0 * v[m] + 10.0 * v[m - 1] - 18.0 * v[m - 2] + 6.0 * v[m - 3]
            - v[m - 4])
            / (12.0 * h);
        out[m] = (25.0 * v[m] - 48.0 * v[m - 1] + 36.0 * v[m - 2] - 16.0 * v[m - 3]
            + 3.0 * v[m - 4])
            / (12.0 * h);
    } else {
        // second-order fallback for very short series
        out[0] = (v[1] - v[0]) / h;
        for i in 1..m {
            out[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
        }
        out[m] = (v[m] - v[m - 1]) / h;
    }
    TimeSeries { tgrid: f.tgrid, values: out }
}

fn check_compatibility(f: &TimeSeries) -> Result<()> {
    let scale = f.max_abs();
    if f.values[0].abs() > 1e-8 * scale.max(f64::MIN_POSITIVE) {
        return Err(KdvError::Precondition(format!(
            "negative-order fractional integral requires f(0) = 0; got f(0) = {} with max |f| = {scale}",
            f.values[0]
        )));
    }
    Ok(())
}

/// `I_alpha f` for `alpha` in `[-2, 2]`.
pub fn fractional_integral(f: &TimeSeries, alpha: FractionalOrder) -> Result<TimeSeries> {
    let a = alpha.value();
    if f.values.iter().any(|v| !v.is_finite()) {
        return Err(KdvError::InvalidArgument("series contains non-finite entries".into()));
    }
    if a.abs() < 1e-14 {
        return Ok(f.clone());
    }
    if a > 0.0 {
        return Ok(integral_positive(f, a));
    }
    check_compatibility(f)?;
    if a > -1.0 {
        let lifted = integral_positive(f, a + 1.0);
        Ok(derivative_time(&lifted))
    } else {
        let lifted = if (a + 2.0).abs() < 1e-14 {
            f.clone()
        } else {
            integral_positive(f, a + 2.0)
        };
        Ok(derivative_time(&derivative_time(&lifted)))
    }
}

/// Convenience wrapper taking the raw order.
pub fn fractional_integral_of(f: &TimeSeries, alpha: f64) -> Result<TimeSeries> {
    fractional_integral(f, FractionalOrder::new(alpha)?)
}
