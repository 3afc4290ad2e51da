//! The two rationally extended models: harmonic oscillator in `eta = x` and
//! Morse in `eta = exp(-x)`.
//!
//! Everything here is closed form. Wavefunctions come out unnormalized;
//! [`crate::spectral::normalization`] supplies the constant when needed.

mod admissibility;
mod construction;

use alloc::vec::Vec;
use core::fmt;

use crate::poly::{PolyError, Polynomial};

pub use admissibility::{klh_admissible, validate_spec, zero_scan, RejectReason, Rejection};
pub use construction::{
    construction_residuals, harmonic_reduced_residual, p_polynomial, p_polynomial_closed,
    xi_ode_residual, ConstructionResiduals,
};

/// Largest `ell + n` for which eigenpolynomials are built.
pub const MAX_INDEX_SUM: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelFamily {
    HarmonicRational,
    MorseRational,
}

impl ModelFamily {
    /// Short name used on the command line and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            ModelFamily::HarmonicRational => "ho",
            ModelFamily::MorseRational => "morse",
        }
    }
}

impl fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    Rejected(Rejection),
    InvalidParameter(&'static str),
    DegreeCap { index_sum: u32, cap: u32 },
    NotBound(Level),
    NmaxRequired,
    MorseOnly,
    Domain,
    Poly(PolyError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Rejected(r) => write!(f, "inadmissible model: {r}"),
            ModelError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            ModelError::DegreeCap { index_sum, cap } => {
                write!(f, "ell + n = {index_sum} exceeds the supported cap {cap}")
            }
            ModelError::NotBound(level) => write!(f, "level {level} is not a bound state"),
            ModelError::NmaxRequired => {
                f.write_str("the harmonic family has infinitely many levels; nmax is required")
            }
            ModelError::MorseOnly => f.write_str("operation is defined for the Morse family only"),
            ModelError::Domain => f.write_str("argument outside the physical domain"),
            ModelError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ModelError {}

impl From<PolyError> for ModelError {
    fn from(e: PolyError) -> Self {
        ModelError::Poly(e)
    }
}

impl From<Rejection> for ModelError {
    fn from(r: Rejection) -> Self {
        ModelError::Rejected(r)
    }
}

/// A validated model. Construct with [`validate_spec`], [`ModelSpec::harmonic`]
/// or [`ModelSpec::morse`]; an existing value is always admissible.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    family: ModelFamily,
    ell: u32,
    alpha: Option<f64>,
    xi: Polynomial,
    xi_prime: Polynomial,
}

impl ModelSpec {
    pub fn harmonic(ell: u32) -> Result<Self, ModelError> {
        validate_spec(ModelFamily::HarmonicRational, ell, None)
    }

    pub fn morse(ell: u32, alpha: f64) -> Result<Self, ModelError> {
        validate_spec(ModelFamily::MorseRational, ell, Some(alpha))
    }

    pub fn family(&self) -> ModelFamily {
        self.family
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Laguerre parameter of the Morse family; `None` for the harmonic one.
    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    pub fn xi(&self) -> &Polynomial {
        &self.xi
    }

    pub fn xi_prime(&self) -> &Polynomial {
        &self.xi_prime
    }

    fn morse_alpha(&self) -> Result<f64, ModelError> {
        self.alpha.ok_or(ModelError::MorseOnly)
    }

    /// `eta(x)` for this family.
    pub fn eta(&self, x: f64) -> f64 {
        match self.family {
            ModelFamily::HarmonicRational => x,
            ModelFamily::MorseRational => libm::exp(-x),
        }
    }

    /// Continuum threshold `alpha^2/4` of the Morse family.
    pub fn threshold(&self) -> Option<f64> {
        self.alpha.map(|a| a * a / 4.0)
    }

    /// The Morse bound-state condition `n < -alpha/2 - ell - 1` as a real
    /// number; `None` for the harmonic family.
    pub fn bound_cutoff(&self) -> Option<f64> {
        self.alpha.map(|a| -a / 2.0 - self.ell as f64 - 1.0)
    }
}

/// Energy label of a closed-form eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Ground,
    Excited(u32),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Ground => f.write_str("ground"),
            Level::Excited(n) => write!(f, "n={n}"),
        }
    }
}

/// `xi` together with the `E~` term of its defining equation.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformingFunction {
    pub xi: Polynomial,
    /// Harmonic: the constant `-2 ell`. Morse: `-ell * eta`.
    pub etilde: Polynomial,
}

impl DeformingFunction {
    /// The scalar carried by `etilde`: the constant term for the harmonic
    /// family, the coefficient of `eta` for Morse.
    pub fn etilde_const(&self, family: ModelFamily) -> f64 {
        match family {
            ModelFamily::HarmonicRational => self.etilde.coeff(0),
            ModelFamily::MorseRational => self.etilde.coeff(1),
        }
    }
}

pub fn deforming_function(spec: &ModelSpec) -> DeformingFunction {
    let ell = spec.ell as f64;
    let etilde = match spec.family {
        ModelFamily::HarmonicRational => Polynomial::constant(-2.0 * ell),
        ModelFamily::MorseRational => Polynomial::monomial(-ell, 1),
    };
    DeformingFunction {
        xi: spec.xi.clone(),
        etilde,
    }
}

/// Coefficient functions of the equation `c2 xi'' + c1 xi' + E~ xi = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeCoefficients {
    /// `deta/dx` squared as a polynomial in `eta`.
    pub c2: Polynomial,
    /// `c2'/2 - 2Q`.
    pub c1: Polynomial,
    /// `Q = dW0/dx * deta/dx`.
    pub q: Polynomial,
}

pub fn ode_coefficients(spec: &ModelSpec) -> OdeCoefficients {
    let (c2, q) = match spec.family {
        ModelFamily::HarmonicRational => (Polynomial::one(), Polynomial::monomial(-1.0, 1)),
        ModelFamily::MorseRational => {
            let a = spec.alpha.unwrap_or_default();
            // Q = -(a/2) eta - eta^2/2, the form that integrates to W0 below
            (
                Polynomial::monomial(1.0, 2),
                Polynomial::from_coeffs(alloc::vec![0.0, -a / 2.0, -0.5]),
            )
        }
    };
    let c1 = &c2.derivative().scale(0.5) - &q.scale(2.0);
    OdeCoefficients { c2, c1, q }
}

/// Prepotential `W0(x)` with the integration constant dropped.
pub fn prepotential_w0(spec: &ModelSpec, x: f64) -> f64 {
    match spec.family {
        ModelFamily::HarmonicRational => -x * x / 2.0,
        ModelFamily::MorseRational => {
            let a = spec.alpha.unwrap_or_default();
            a / 2.0 * x - libm::exp(-x) / 2.0
        }
    }
}

/// The rationally extended potential `V(x)`.
///
/// Harmonic: `x^2 - 1 + 2r(r + 2x) - 2 ell` with `r = xi'/xi` at `eta = x`.
/// Morse: `eta^2/4 + (alpha - 2 ell - 1) eta/2 + alpha^2/4
/// + 2r(eta^2 (r + 1) + alpha eta)` at `eta = exp(-x)`.
pub fn potential(spec: &ModelSpec, x: f64) -> f64 {
    let eta = spec.eta(x);
    let (xi, dxi) = spec.xi.eval_with_derivative(eta);
    let r = dxi / xi;
    let ell = spec.ell as f64;
    match spec.family {
        ModelFamily::HarmonicRational => x * x - 1.0 + 2.0 * r * (r + 2.0 * eta) - 2.0 * ell,
        ModelFamily::MorseRational => {
            let a = spec.alpha.unwrap_or_default();
            eta * eta / 4.0
                + 0.5 * (a - 2.0 * ell - 1.0) * eta
                + a * a / 4.0
                + 2.0 * r * (eta * eta * (r + 1.0) + a * eta)
        }
    }
}

pub fn energy(spec: &ModelSpec, level: Level) -> Result<f64, ModelError> {
    let n = match level {
        Level::Ground => return Ok(0.0),
        Level::Excited(n) => n as f64,
    };
    let ell = spec.ell as f64;
    match spec.family {
        ModelFamily::HarmonicRational => Ok(2.0 * (n + ell + 1.0)),
        ModelFamily::MorseRational => {
            if !is_bound(spec, level) {
                return Err(ModelError::NotBound(level));
            }
            let a = spec.morse_alpha()?;
            Ok(a - 1.0 - (n + ell + 2.0) * (n + ell + a))
        }
    }
}

fn is_bound(spec: &ModelSpec, level: Level) -> bool {
    match (level, spec.bound_cutoff()) {
        (Level::Ground, _) | (_, None) => true,
        (Level::Excited(n), Some(cut)) => (n as f64) < cut,
    }
}

/// Bound levels in increasing energy.
///
/// The harmonic family requires `nmax`. For Morse the list is cut by the
/// bound-state condition and additionally by `nmax` when given.
pub fn bound_levels(spec: &ModelSpec, nmax: Option<u32>) -> Result<Vec<Level>, ModelError> {
    let mut levels = alloc::vec![Level::Ground];
    match spec.family {
        ModelFamily::HarmonicRational => {
            let nmax = nmax.ok_or(ModelError::NmaxRequired)?;
            levels.extend((0..=nmax).map(Level::Excited));
        }
        ModelFamily::MorseRational => {
            let mut n = 0;
            while is_bound(spec, Level::Excited(n)) && nmax.is_none_or(|m| n <= m) {
                levels.push(Level::Excited(n));
                n += 1;
            }
        }
    }
    Ok(levels)
}

/// Closed-form eigenstate data.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenstate {
    pub level: Level,
    pub energy: f64,
    /// `p` for the harmonic family, `P` for Morse; the constant 1 for the ground state.
    pub p: Polynomial,
    /// Morse: `-(n + ell + 2)`, so that `p = eta^(gamma+1) P`. Zero otherwise.
    pub gamma: f64,
    /// Morse: Laguerre parameter `-alpha - 2(n + ell + 1)`. Zero otherwise.
    pub beta: f64,
}

pub fn eigenstate(spec: &ModelSpec, level: Level) -> Result<Eigenstate, ModelError> {
    let energy = energy(spec, level)?;
    let n = match level {
        Level::Ground => {
            return Ok(Eigenstate {
                level,
                energy,
                p: Polynomial::one(),
                gamma: 0.0,
                beta: 0.0,
            })
        }
        Level::Excited(n) => n,
    };
    let p = p_polynomial(spec, n)?;
    let (gamma, beta) = match spec.family {
        ModelFamily::HarmonicRational => (0.0, 0.0),
        ModelFamily::MorseRational => {
            let a = spec.morse_alpha()?;
            let k = (n + spec.ell) as f64;
            (-(k + 2.0), -a - 2.0 * (k + 1.0))
        }
    };
    Ok(Eigenstate {
        level,
        energy,
        p,
        gamma,
        beta,
    })
}

/// Unnormalized wavefunction `phi(x)`.
///
/// Harmonic: `exp(-x^2/2) p(x)/xi(x)`. Morse:
/// `exp(-eta/2) eta^(-alpha/2) eta^(gamma+1) P(eta)/xi(eta)`, where the
/// exponent `gamma + 1 = -(n + ell + 1)` is the one whose sum with
/// `-alpha/2` stays positive exactly on the bound set.
pub fn wavefunction_raw(spec: &ModelSpec, state: &Eigenstate, x: f64) -> f64 {
    match spec.family {
        ModelFamily::HarmonicRational => {
            let envelope = libm::exp(-x * x / 2.0);
            if envelope == 0.0 {
                return 0.0;
            }
            envelope * state.p.eval(x) / spec.xi.eval(x)
        }
        ModelFamily::MorseRational => {
            let a = spec.alpha.unwrap_or_default();
            let power = match state.level {
                Level::Ground => -a / 2.0,
                Level::Excited(_) => -a / 2.0 + state.gamma + 1.0,
            };
            let eta = libm::exp(-x);
            // eta^power = exp(-power x)
            let envelope = libm::exp(-power * x - eta / 2.0);
            if envelope == 0.0 {
                return 0.0;
            }
            envelope * state.p.eval(eta) / spec.xi.eval(eta)
        }
    }
}

/// Both candidate orthogonality weights in `eta`-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightPair {
    /// Morse: `exp(-eta) eta^(-alpha) / xi^2`.
    pub stated: f64,
    /// `W^2 / |deta/dx|`; for Morse `exp(-eta) eta^(-alpha-1) / xi^2`.
    pub measure: f64,
}

pub fn weight_function(spec: &ModelSpec, eta: f64) -> Result<WeightPair, ModelError> {
    if !eta.is_finite() {
        return Err(ModelError::Domain);
    }
    let xi = spec.xi.eval(eta);
    match spec.family {
        ModelFamily::HarmonicRational => {
            let w = libm::exp(-eta * eta) / (xi * xi);
            Ok(WeightPair {
                stated: w,
                measure: w,
            })
        }
        ModelFamily::MorseRational => {
            if eta <= 0.0 {
                return Err(ModelError::Domain);
            }
            let a = spec.morse_alpha()?;
            let stated = libm::exp(-eta) * libm::pow(eta, -a) / (xi * xi);
            Ok(WeightPair {
                stated,
                measure: stated / eta,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn deforming_function_examples() {
        let ho = ModelSpec::harmonic(2).unwrap();
        let d = deforming_function(&ho);
        assert_eq!(d.xi.coeffs(), &[-2.0, 0.0, -4.0]);
        assert_eq!(d.etilde_const(ho.family()), -4.0);

        let m0 = ModelSpec::morse(0, -10.0).unwrap();
        let d = deforming_function(&m0);
        assert_eq!(d.xi, Polynomial::one());
        assert_eq!(d.etilde_const(m0.family()), 0.0);

        let m2 = ModelSpec::morse(2, -10.0).unwrap();
        let d = deforming_function(&m2);
        let want = [36.0, -8.0, 0.5];
        for (c, w) in d.xi.coeffs().iter().zip(want) {
            assert!(close(*c, w, 1e-15));
        }
        assert_eq!(d.etilde_const(m2.family()), -2.0);
    }

    #[test]
    fn morse_ode_coefficients() {
        let m = ModelSpec::morse(2, -10.0).unwrap();
        let c = ode_coefficients(&m);
        assert_eq!(c.c2.coeffs(), &[0.0, 0.0, 1.0]);
        // (alpha + 1) eta + eta^2
        assert_eq!(c.c1.coeffs(), &[0.0, -9.0, 1.0]);
    }

    #[test]
    fn prepotential_examples() {
        let ho = ModelSpec::harmonic(2).unwrap();
        assert_eq!(prepotential_w0(&ho, 0.0), 0.0);
        assert_eq!(prepotential_w0(&ho, 2.0), -2.0);
        let m = ModelSpec::morse(2, -10.0).unwrap();
        assert_eq!(prepotential_w0(&m, 0.0), -0.5);
    }

    #[test]
    fn prepotential_integrates_q() {
        // dW0/dx = Q / (deta/dx), checked by central differences
        for spec in [
            ModelSpec::harmonic(4).unwrap(),
            ModelSpec::morse(2, -12.5).unwrap(),
        ] {
            let q = ode_coefficients(&spec).q;
            for &x in &[-1.3, 0.0, 0.7, 2.2] {
                let h = 1e-5;
                let dw =
                    (prepotential_w0(&spec, x + h) - prepotential_w0(&spec, x - h)) / (2.0 * h);
                let eta = spec.eta(x);
                let deta = match spec.family() {
                    ModelFamily::HarmonicRational => 1.0,
                    ModelFamily::MorseRational => -eta,
                };
                assert!(close(dw, q.eval(eta) / deta, 1e-8), "{spec:?} x={x}");
            }
        }
    }

    #[test]
    fn potential_examples() {
        let ho0 = ModelSpec::harmonic(0).unwrap();
        assert!(close(potential(&ho0, 1.3), 0.69, 1e-15));
        // xi'(0) = 0, so only x^2 - 1 - 2 ell survives
        let ho2 = ModelSpec::harmonic(2).unwrap();
        assert_eq!(potential(&ho2, 0.0), -5.0);
        let m0 = ModelSpec::morse(0, -10.0).unwrap();
        assert!(close(potential(&m0, 40.0), 25.0, 1e-12));
    }

    /// `phi0''/phi0` by Richardson-extrapolated central differences.
    fn ground_curvature(spec: &ModelSpec, x: f64) -> f64 {
        let g = eigenstate(spec, Level::Ground).unwrap();
        let phi = |x: f64| wavefunction_raw(spec, &g, x);
        let d2 = |h: f64| (phi(x + h) - 2.0 * phi(x) + phi(x - h)) / (h * h);
        let h = 1e-3;
        (4.0 * d2(h / 2.0) - d2(h)) / 3.0 / phi(x)
    }

    #[test]
    fn ground_state_is_a_zero_mode() {
        let specs = [
            ModelSpec::harmonic(0).unwrap(),
            ModelSpec::harmonic(2).unwrap(),
            ModelSpec::harmonic(4).unwrap(),
            ModelSpec::morse(0, -10.0).unwrap(),
            ModelSpec::morse(2, -10.0).unwrap(),
            ModelSpec::morse(4, -14.0).unwrap(),
            ModelSpec::morse(3, -2.5).unwrap(),
        ];
        for spec in &specs {
            for &x in &[-1.5, -0.4, 0.0, 0.9, 2.0] {
                let v = potential(spec, x);
                let k = ground_curvature(spec, x);
                assert!(
                    (v - k).abs() < 1e-5 * (1.0 + v.abs()),
                    "{spec:?} x={x}: {v} vs {k}"
                );
            }
        }
    }

    #[test]
    fn energy_examples() {
        let ho = ModelSpec::harmonic(2).unwrap();
        assert_eq!(energy(&ho, Level::Ground).unwrap(), 0.0);
        assert_eq!(energy(&ho, Level::Excited(0)).unwrap(), 6.0);
        let m = ModelSpec::morse(2, -10.0).unwrap();
        assert_eq!(energy(&m, Level::Excited(1)).unwrap(), 24.0);
        assert_eq!(
            energy(&m, Level::Excited(2)),
            Err(ModelError::NotBound(Level::Excited(2)))
        );
    }

    #[test]
    fn bound_level_examples() {
        let m2 = ModelSpec::morse(2, -10.0).unwrap();
        assert_eq!(
            bound_levels(&m2, None).unwrap(),
            vec![Level::Ground, Level::Excited(0), Level::Excited(1)]
        );
        assert_eq!(m2.bound_cutoff(), Some(2.0));

        let m0 = ModelSpec::morse(0, -10.0).unwrap();
        let e: Vec<f64> = bound_levels(&m0, None)
            .unwrap()
            .into_iter()
            .map(|l| energy(&m0, l).unwrap())
            .collect();
        assert_eq!(e, vec![0.0, 9.0, 16.0, 21.0, 24.0]);
        // textbook Morse ladder A^2 - (A - k)^2 with A = -alpha/2
        let ladder: Vec<f64> = (0..5).map(|k| 25.0 - ((5 - k) * (5 - k)) as f64).collect();
        assert_eq!(e, ladder);

        let ho = ModelSpec::harmonic(2).unwrap();
        let e: Vec<f64> = bound_levels(&ho, Some(3))
            .unwrap()
            .into_iter()
            .map(|l| energy(&ho, l).unwrap())
            .collect();
        assert_eq!(e, vec![0.0, 6.0, 8.0, 10.0, 12.0]);
        assert_eq!(bound_levels(&ho, None), Err(ModelError::NmaxRequired));
        assert_eq!(bound_levels(&m0, Some(1)).unwrap().len(), 3);
    }

    #[test]
    fn bound_levels_increase_in_energy() {
        for (ell, a) in [
            (0, -10.0),
            (2, -10.0),
            (2, -14.0),
            (4, -14.0),
            (4, -21.0),
            (6, -24.0),
        ] {
            let m = ModelSpec::morse(ell, a).unwrap();
            let e: Vec<f64> = bound_levels(&m, None)
                .unwrap()
                .into_iter()
                .map(|l| energy(&m, l).unwrap())
                .collect();
            assert!(e.windows(2).all(|w| w[0] < w[1]), "{e:?}");
            assert!(e.iter().all(|&x| x < m.threshold().unwrap()));
        }
    }

    #[test]
    fn wavefunction_examples() {
        let ho = ModelSpec::harmonic(2).unwrap();
        let g = eigenstate(&ho, Level::Ground).unwrap();
        assert_eq!(wavefunction_raw(&ho, &g, 0.0), -0.5);
        let e0 = eigenstate(&ho, Level::Excited(0)).unwrap();
        assert_eq!(wavefunction_raw(&ho, &e0, 0.0), 0.0);

        let m = ModelSpec::morse(2, -10.0).unwrap();
        let g = eigenstate(&m, Level::Ground).unwrap();
        assert!(wavefunction_raw(&m, &g, 40.0).abs() < 1e-80);
        assert_eq!(wavefunction_raw(&m, &g, -800.0), 0.0);
    }

    #[test]
    fn morse_excited_exponent_matches_bound() {
        // the eta -> 0 exponent -alpha/2 + gamma + 1 is positive exactly on the bound set
        for (ell, a) in [(0u32, -10.0), (2, -10.0), (4, -14.0), (2, -13.0)] {
            let m = ModelSpec::morse(ell, a).unwrap();
            let cut = m.bound_cutoff().unwrap();
            for n in 0..8u32 {
                let gamma = -((n + ell) as f64 + 2.0);
                let exponent = -a / 2.0 + gamma + 1.0;
                assert_eq!(exponent > 0.0, (n as f64) < cut, "ell={ell} a={a} n={n}");
            }
        }
    }

    #[test]
    fn ground_state_keeps_sign() {
        let cases = [
            (ModelSpec::harmonic(2).unwrap(), -10.0, 10.0),
            (ModelSpec::harmonic(6).unwrap(), -10.0, 10.0),
            (ModelSpec::morse(2, -10.0).unwrap(), -3.0, 25.0),
            (ModelSpec::morse(4, -14.0).unwrap(), -3.0, 25.0),
            (ModelSpec::morse(3, -2.5).unwrap(), -3.0, 25.0),
        ];
        for (spec, lo, hi) in cases {
            let g = eigenstate(&spec, Level::Ground).unwrap();
            let s0 = wavefunction_raw(&spec, &g, 0.0).signum();
            for i in 0..2001 {
                let x = lo + (hi - lo) * i as f64 / 2000.0;
                let v = wavefunction_raw(&spec, &g, x);
                assert!(v == 0.0 || v.signum() == s0, "{spec:?} x={x}");
            }
        }
    }

    #[test]
    fn weight_examples() {
        let ho0 = ModelSpec::harmonic(0).unwrap();
        assert_eq!(weight_function(&ho0, 0.0).unwrap().stated, 1.0);
        let ho2 = ModelSpec::harmonic(2).unwrap();
        assert_eq!(weight_function(&ho2, 0.0).unwrap().measure, 0.25);
        let m0 = ModelSpec::morse(0, -10.0).unwrap();
        let w = weight_function(&m0, 1.0).unwrap();
        assert!(close(w.stated, libm::exp(-1.0), 1e-15));
        assert_eq!(w.stated, w.measure);
        assert_eq!(weight_function(&m0, 0.0), Err(ModelError::Domain));
        assert_eq!(weight_function(&m0, -1.0), Err(ModelError::Domain));
    }
}
