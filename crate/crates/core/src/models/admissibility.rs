use core::fmt;

use super::{ModelError, ModelFamily, ModelSpec, MAX_INDEX_SUM};
use crate::poly::{hermite_imag_even, laguerre_reflect, Polynomial};

const SCAN_POINTS: usize = 4096;
const HARMONIC_SCAN_RADIUS: f64 = 50.0;
const MORSE_SCAN_MIN: f64 = 1e-6;
const MORSE_SCAN_MAX: f64 = 1e3;
const NEAR_ZERO_RATIO: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    OddEll,
    KlhViolated,
    XiZeroFound,
}

impl RejectReason {
    /// Machine-readable reason code.
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::OddEll => "odd-ell",
            RejectReason::KlhViolated => "klh-violated",
            RejectReason::XiZeroFound => "xi-zero-found",
        }
    }
}

/// Why a parameter set was refused, plus the zero of `xi` on the physical
/// domain when the scan located one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub xi_zero: Option<f64>,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.reason.code())?;
        if let Some(z) = self.xi_zero {
            write!(f, " (xi vanishes near eta = {z:.6})")?;
        }
        Ok(())
    }
}

/// Kienast-Lawton-Hahn criterion for `L_ell^{(alpha)}(-eta)` to stay
/// nodeless on `(0, inf)`: either `-2k-1 < alpha < -2k` for some integer
/// `k >= 0` together with `-ell < alpha < -1`, or `ell` even with `alpha < -ell`.
pub fn klh_admissible(ell: u32, alpha: f64) -> bool {
    let l = ell as f64;
    let in_band = alpha < 0.0 && {
        let t = -alpha;
        let k = libm::floor(t / 2.0);
        2.0 * k < t && t < 2.0 * k + 1.0
    };
    let first = in_band && -l < alpha && alpha < -1.0;
    let second = ell.is_multiple_of(2) && alpha < -l;
    first || second
}

/// Scans `xi` over the physical domain of `family`. Returns the location of a
/// sign change (refined by bisection) or of a near-zero minimum.
pub fn zero_scan(family: ModelFamily, xi: &Polynomial) -> Option<f64> {
    let grid = |i: usize| -> f64 {
        let s = i as f64 / (SCAN_POINTS - 1) as f64;
        match family {
            ModelFamily::HarmonicRational => -HARMONIC_SCAN_RADIUS + 2.0 * HARMONIC_SCAN_RADIUS * s,
            ModelFamily::MorseRational => {
                let (lo, hi) = (libm::log(MORSE_SCAN_MIN), libm::log(MORSE_SCAN_MAX));
                libm::exp(lo + (hi - lo) * s)
            }
        }
    };
    let scale = xi.max_abs_coeff();
    let samples: alloc::vec::Vec<(f64, f64)> = (0..SCAN_POINTS)
        .map(|i| (grid(i), xi.eval(grid(i))))
        .collect();
    for (i, &(t, v)) in samples.iter().enumerate() {
        if v == 0.0 {
            return Some(t);
        }
        if i > 0 && v.signum() != samples[i - 1].1.signum() {
            return Some(bisect_root(xi, samples[i - 1].0, t));
        }
    }
    // no sign change: refine every interior local minimum of |xi|
    let mut best = (f64::INFINITY, 0.0);
    for w in samples.windows(3) {
        let (a, b, c) = (w[0].1.abs(), w[1].1.abs(), w[2].1.abs());
        if b <= a && b <= c {
            let t = golden_min(|t| xi.eval(t).abs(), w[0].0, w[2].0);
            let v = xi.eval(t).abs().min(b);
            if v < best.0 {
                best = (v, t);
            }
        }
    }
    (best.0 < NEAR_ZERO_RATIO * scale).then_some(best.1)
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..120 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

fn bisect_root(p: &Polynomial, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = p.eval(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = p.eval(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Checks the family's parameter condition, builds `xi`, and independently
/// scans it for zeros on the physical domain.
pub fn validate_spec(
    family: ModelFamily,
    ell: u32,
    alpha: Option<f64>,
) -> Result<ModelSpec, ModelError> {
    if ell > MAX_INDEX_SUM {
        return Err(ModelError::DegreeCap {
            index_sum: ell,
            cap: MAX_INDEX_SUM,
        });
    }
    let xi = match family {
        ModelFamily::HarmonicRational => {
            if alpha.is_some() {
                return Err(ModelError::InvalidParameter(
                    "alpha is not a parameter of the harmonic family",
                ));
            }
            if ell % 2 == 1 {
                // H_ell(i eta) is odd in eta and vanishes at the origin
                return Err(Rejection {
                    reason: RejectReason::OddEll,
                    xi_zero: Some(0.0),
                }
                .into());
            }
            let xi = hermite_imag_even(ell as usize / 2)?;
            if let Some(z) = zero_scan(family, &xi) {
                return Err(Rejection {
                    reason: RejectReason::XiZeroFound,
                    xi_zero: Some(z),
                }
                .into());
            }
            xi
        }
        ModelFamily::MorseRational => {
            let a = alpha.ok_or(ModelError::InvalidParameter(
                "the Morse family requires alpha",
            ))?;
            if !a.is_finite() {
                return Err(ModelError::InvalidParameter("alpha must be finite"));
            }
            let xi = laguerre_reflect(ell as usize, a)?;
            let zero = zero_scan(family, &xi);
            if !klh_admissible(ell, a) {
                return Err(Rejection {
                    reason: RejectReason::KlhViolated,
                    xi_zero: zero,
                }
                .into());
            }
            if let Some(z) = zero {
                return Err(Rejection {
                    reason: RejectReason::XiZeroFound,
                    xi_zero: Some(z),
                }
                .into());
            }
            // the top bound level must stay inside the certified degree range
            let cut = -a / 2.0 - ell as f64 - 1.0;
            if cut > 0.0 {
                let top = libm::ceil(cut) - 1.0;
                let index_sum = ell as f64 + top;
                if index_sum > MAX_INDEX_SUM as f64 {
                    return Err(ModelError::DegreeCap {
                        index_sum: index_sum as u32,
                        cap: MAX_INDEX_SUM,
                    });
                }
            }
            xi
        }
    };
    let xi_prime = xi.derivative();
    Ok(ModelSpec {
        family,
        ell,
        alpha,
        xi,
        xi_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rejection(r: Result<ModelSpec, ModelError>) -> Rejection {
        match r {
            Err(ModelError::Rejected(rej)) => rej,
            other => panic!("expected a rejection, got {other:?}"),
        }
    }

    #[test]
    fn odd_harmonic_rejected() {
        let r = rejection(validate_spec(ModelFamily::HarmonicRational, 3, None));
        assert_eq!(r.reason, RejectReason::OddEll);
        assert_eq!(r.reason.code(), "odd-ell");
    }

    #[test]
    fn even_harmonic_accepted() {
        for ell in [0, 2, 4, 6, 8, 30] {
            assert!(validate_spec(ModelFamily::HarmonicRational, ell, None).is_ok());
        }
    }

    #[test]
    fn morse_condition_two_accepted() {
        let s = validate_spec(ModelFamily::MorseRational, 2, Some(-10.0)).unwrap();
        assert_eq!(s.ell(), 2);
        assert_eq!(s.alpha(), Some(-10.0));
    }

    #[test]
    fn morse_outside_bands_rejected_with_zero() {
        let r = rejection(validate_spec(ModelFamily::MorseRational, 2, Some(-1.5)));
        assert_eq!(r.reason, RejectReason::KlhViolated);
        // eta^2/2 + eta/2 - 1/8 = 0  =>  eta = (-1 + sqrt 2)/2
        let want = (libm::sqrt(2.0) - 1.0) / 2.0;
        let z = r.xi_zero.expect("scan should locate the zero");
        assert!((z - want).abs() < 1e-12, "{z}");
        assert!((z - 0.207).abs() < 1e-3);
    }

    #[test]
    fn klh_condition_one_band() {
        assert!(klh_admissible(3, -2.5));
        assert!(klh_admissible(5, -4.5));
        assert!(!klh_admissible(3, -3.5));
        assert!(!klh_admissible(1, -0.5));
        assert!(!klh_admissible(2, -2.0));
        assert!(klh_admissible(2, -2.0001));
        assert!(klh_admissible(0, -10.0));
        // every admissible case keeps xi nodeless on the scan
        for (ell, a) in [
            (3, -2.5),
            (5, -4.5),
            (4, -2.5),
            (6, -4.5),
            (7, -6.5),
            (8, -9.0),
        ] {
            assert!(klh_admissible(ell, a), "ell={ell} a={a}");
            let xi = laguerre_reflect(ell as usize, a).unwrap();
            assert_eq!(
                zero_scan(ModelFamily::MorseRational, &xi),
                None,
                "ell={ell} a={a}"
            );
        }
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(
            validate_spec(ModelFamily::HarmonicRational, 2, Some(-1.0)),
            Err(ModelError::InvalidParameter(
                "alpha is not a parameter of the harmonic family"
            ))
        );
        assert!(matches!(
            validate_spec(ModelFamily::MorseRational, 2, None),
            Err(ModelError::InvalidParameter(_))
        ));
        assert!(matches!(
            validate_spec(ModelFamily::MorseRational, 2, Some(f64::NAN)),
            Err(ModelError::InvalidParameter(_))
        ));
        assert!(matches!(
            validate_spec(ModelFamily::HarmonicRational, 32, None),
            Err(ModelError::DegreeCap { .. })
        ));
        assert!(matches!(
            validate_spec(ModelFamily::MorseRational, 2, Some(-80.0)),
            Err(ModelError::DegreeCap { .. })
        ));
        assert!(validate_spec(ModelFamily::MorseRational, 2, Some(-60.0)).is_ok());
    }

    #[test]
    fn scan_finds_planted_zero() {
        // (eta - 3)^2 + 1e-12 touches zero without a sign change
        let p = Polynomial::from_coeffs(alloc::vec![9.0 + 1e-12, -6.0, 1.0]);
        let z = zero_scan(ModelFamily::MorseRational, &p).unwrap();
        assert!((z - 3.0).abs() < 0.01);
        let q = Polynomial::from_coeffs(alloc::vec![-1.0, 0.0, 1.0]);
        assert!((zero_scan(ModelFamily::HarmonicRational, &q).unwrap() + 1.0).abs() < 1e-12);
    }
}
