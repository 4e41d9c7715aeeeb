//! The oscillatory-integral kernel `A` and the standard Airy function it
//! scales to.
//!
//! `A(x) = (1/2pi) int exp(i x xi + i xi^3) dxi` evaluates, after the
//! substitution `xi -> 3^(-1/3) eta`, to `3^(-1/3) Ai(3^(-1/3) x)` where `Ai`
//! is the standard Airy function. The scaling is exact, so `Ai` is computed
//! once and reused: Maclaurin series on the central range, asymptotic
//! expansions outside it.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// 3^(-1/3), the exact scale between the kernel and the standard Airy function.
pub const CBRT3_INV: f64 = 0.693_361_274_350_634_7;

const SERIES_LIMIT: f64 = 7.0;

/// Ai(0) = 3^(-2/3) / Gamma(2/3)
const AI0: f64 = 0.355_028_053_887_817_24;
/// -Ai'(0) = 3^(-1/3) / Gamma(1/3)
const AIP0: f64 = 0.258_819_403_792_806_8;

/// Standard Airy function Ai for real argument, absolute accuracy around
/// 1e-10 or better on [-14, 10].
pub fn airy_ai(y: f64) -> f64 {
    if y.abs() <= SERIES_LIMIT {
        ai_series(y)
    } else if y > 0.0 {
        ai_asymptotic_decay(y)
    } else {
        ai_asymptotic_oscillatory(-y)
    }
}

/// The paper-normalized kernel A(x) = 3^(-1/3) Ai(3^(-1/3) x).
pub fn airy_a(x: f64) -> f64 {
    CBRT3_INV * airy_ai(CBRT3_INV * x)
}

fn kahan_add(sum: &mut f64, comp: &mut f64, term: f64) {
    let y = term - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// Maclaurin series: Ai(y) = Ai(0) f(y) + Ai'(0) g(y) with
/// f = sum 3^k (1/3)_k y^(3k) / (3k)!, g = sum 3^k (2/3)_k y^(3k+1) / (3k+1)!.
/// Compensated summation keeps the cancellation error near one ulp of the
/// largest term.
fn ai_series(y: f64) -> f64 {
    let y3 = y * y * y;
    let mut tf = 1.0;
    let mut tg = y;
    let mut f = tf;
    let mut g = tg;
    let (mut cf, mut cg) = (0.0, 0.0);
    let mut k = 0usize;
    loop {
        let kf = 3.0 * k as f64;
        tf *= y3 / ((kf + 2.0) * (kf + 3.0));
        tg *= y3 / ((kf + 3.0) * (kf + 4.0));
        kahan_add(&mut f, &mut cf, tf);
        kahan_add(&mut g, &mut cg, tg);
        k += 1;
        if tf.abs() < 1e-18 * f.abs().max(1.0) && tg.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
        if k > 200 {
            break;
        }
    }
    AI0 * f - AIP0 * g
}

/// u_k coefficients of the Airy asymptotic expansions,
/// u_0 = 1, u_(k+1) = u_k (6k+1)(6k+5) / (72(k+1)).
fn u_next(u: f64, k: usize) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf + 1.0) * (6.0 * kf + 5.0) / (72.0 * (kf + 1.0))
}

fn ai_asymptotic_decay(y: f64) -> f64 {
    let zeta = 2.0 / 3.0 * y.powf(1.5);
    let mut u = 1.0;
    let mut term = 1.0;
    let mut acc = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..40 {
        u = u_next(u, k);
        let t = u / zeta.powi(k as i32 + 1);
        if t.abs() > prev {
            break; // divergent tail of the asymptotic series
        }
        prev = t.abs();
        term = -term;
        acc += term * t;
        if t.abs() < 1e-17 * acc.abs() {
            break;
        }
    }
    (-zeta).exp() / (2.0 * PI.sqrt() * y.powf(0.25)) * acc
}

fn ai_asymptotic_oscillatory(z: f64) -> f64 {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    // even-index terms pair with cos, odd-index with sin
    let mut p = 1.0;
    let mut q = 0.0;
    let mut u = 1.0;
    let mut best = f64::INFINITY;
    for k in 1..40 {
        u = u_next(u, k - 1);
        let t = u / zeta.powi(k as i32);
        if t.abs() > best {
            break;
        }
        best = t.abs();
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if t.abs() < 1e-17 {
            break;
        }
    }
    let phase = zeta - PI / 4.0;
    (phase.cos() * p + phase.sin() * q) / (PI.sqrt() * z.powf(0.25))
}

/// Lookup table over the central range with cubic interpolation, backed by
/// the asymptotic formulas outside it. Used by the forcing-operator kernels
/// where the Airy factor is evaluated hundreds of millions of times.
pub struct AiryTable {
    y_min: f64,
    y_max: f64,
    inv_h: f64,
    values: Vec<f64>,
}

const TABLE_Y_MIN: f64 = -14.0;
const TABLE_Y_MAX: f64 = 10.5;
const TABLE_STEP: f64 = 5e-4;

static AIRY_TABLE: OnceLock<AiryTable> = OnceLock::new();

impl AiryTable {
    fn build() -> Self {
        let n = ((TABLE_Y_MAX - TABLE_Y_MIN) / TABLE_STEP).round() as usize + 1;
        let values = (0..n).map(|i| airy_ai(TABLE_Y_MIN + i as f64 * TABLE_STEP)).collect();
        Self { y_min: TABLE_Y_MIN, y_max: TABLE_Y_MAX, inv_h: 1.0 / TABLE_STEP, values }
    }

    pub fn shared() -> &'static AiryTable {
        AIRY_TABLE.get_or_init(AiryTable::build)
    }

    /// Ai(y) by 4-point Lagrange interpolation inside the table, asymptotics
    /// outside, zero beyond the decay cutoff.
    #[inline]
    pub fn ai(&self, y: f64) -> f64 {
        if y >= self.y_max {
            return if y > 12.0 { 0.0 } else { ai_asymptotic_decay(y) };
        }
        if y <= self.y_min {
            return ai_asymptotic_oscillatory(-y);
        }
        let s = (y - self.y_min) * self.inv_h;
        let j = (s as usize).clamp(1, self.values.len() - 3);
        let w = s - j as f64;
        let (a, b, c, d) =
            (self.values[j - 1], self.values[j], self.values[j + 1], self.values[j + 2]);
        // cubic through the four neighboring samples
        let wm = w - 1.0;
        let wp = w + 1.0;
        let w2 = w - 2.0;
        -a * w * wm * w2 / 6.0 + b * wp * wm * w2 / 2.0 - c * wp * w * w2 / 2.0
            + d * wp * w * wm / 6.0
    }

    /// The kernel A(x) through the table.
    #[inline]
    pub fn a(&self, x: f64) -> f64 {
        CBRT3_INV * self.ai(CBRT3_INV * x)
    }
}
