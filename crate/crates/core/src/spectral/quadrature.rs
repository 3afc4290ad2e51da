//! Adaptive Simpson quadrature with deterministic truncation of infinite
//! endpoints.
//!
//! An infinite endpoint is replaced by the first probe point `c +/- 2^k`
//! (`k = 0, 1, ...`) at which the sampled envelope `|f(x)| * |x - c|` has
//! fallen below `tol * 1e-2` and is no longer growing. The truncated
//! interval is split into 64 panels before adaptive refinement so that
//! narrow features cannot hide between the first three Simpson nodes.

use super::SpectralError;

/// Maximum bisection depth of any Simpson panel.
pub const MAX_DEPTH: u32 = 40;
const INITIAL_PANELS: usize = 64;
const MAX_PROBES: i32 = 60;

/// `integral_a^b f` to absolute error `tol` on the truncated interval.
/// Either endpoint may be infinite.
pub fn quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64, SpectralError> {
    if a.is_nan() || b.is_nan() || a >= b || tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::InvalidInterval);
    }
    match (a.is_finite(), b.is_finite()) {
        (true, true) => integrate_finite(&f, a, b, tol),
        (true, false) => {
            let upper = truncation_point(&f, a, 1.0, tol)?;
            integrate_finite(&f, a, upper, tol)
        }
        (false, true) => {
            let lower = truncation_point(&f, b, -1.0, tol)?;
            integrate_finite(&f, lower, b, tol)
        }
        (false, false) => {
            let left = truncation_point(&f, 0.0, -1.0, tol / 2.0)?;
            let right = truncation_point(&f, 0.0, 1.0, tol / 2.0)?;
            Ok(integrate_finite(&f, left, 0.0, tol / 2.0)?
                + integrate_finite(&f, 0.0, right, tol / 2.0)?)
        }
    }
}

/// Walks outward from `start` in direction `dir` until the envelope is
/// negligible at the given tolerance.
pub fn truncation_point<F: Fn(f64) -> f64>(
    f: &F,
    start: f64,
    dir: f64,
    tol: f64,
) -> Result<f64, SpectralError> {
    let threshold = tol * 1e-2;
    let mut prev = f64::INFINITY;
    for k in 0..MAX_PROBES {
        let dist = libm::ldexp(1.0, k);
        let x = start + dir * dist;
        let v = f(x).abs();
        if !v.is_finite() {
            return Err(SpectralError::NonFiniteIntegrand { x });
        }
        if v * dist < threshold && v <= prev {
            return Ok(x);
        }
        prev = v;
    }
    Err(SpectralError::TruncationFailed)
}

fn integrate_finite<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, SpectralError> {
    let width = (b - a) / INITIAL_PANELS as f64;
    let panel_tol = tol / INITIAL_PANELS as f64;
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(SpectralError::NonFiniteIntegrand { x })
        }
    };
    let mut total = 0.0;
    let mut fa = eval(a)?;
    for i in 0..INITIAL_PANELS {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PANELS {
            b
        } else {
            lo + width
        };
        let mid = 0.5 * (lo + hi);
        let (fm, fb) = (eval(mid)?, eval(hi)?);
        let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        total += refine(&eval, lo, hi, fa, fm, fb, whole, panel_tol, 0)?;
        fa = fb;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn refine<E: Fn(f64) -> Result<f64, SpectralError>>(
    eval: &E,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, SpectralError> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (eval(lm)?, eval(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    let roundoff = 64.0 * f64::EPSILON * (left.abs() + right.abs());
    if delta.abs() <= 15.0 * tol || delta.abs() <= roundoff {
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(SpectralError::QuadratureNonConvergence { a, b });
    }
    Ok(refine(eval, a, m, fa, flm, fm, left, tol / 2.0, depth + 1)?
        + refine(eval, m, b, fm, frm, fb, right, tol / 2.0, depth + 1)?)
}

/// Rough magnitude of `integral |f|` from a coarse sample on `[c-50, c+50]`,
/// used to turn a relative tolerance into an absolute one.
pub(crate) fn magnitude_hint<F: Fn(f64) -> f64>(f: &F, center: f64) -> f64 {
    let step = 0.25;
    (-200..=200)
        .map(|k| {
            let v = f(center + step * k as f64).abs();
            if v.is_finite() {
                v
            } else {
                0.0
            }
        })
        .sum::<f64>()
        * step
}
