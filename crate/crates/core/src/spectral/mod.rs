//! Numerical cross-checks of the closed forms: a finite-difference
//! Hamiltonian, its lowest eigenvalues, quadrature-based Gram matrices and
//! pointwise Schrodinger residuals.
//!
//! Nothing here looks at the closed-form energies except to compare against
//! them; the operator is built from [`potential`] alone.

mod eigen;
mod gram;
mod quadrature;

use alloc::vec::Vec;
use core::fmt;

use crate::models::{
    bound_levels, eigenstate, energy, potential, wavefunction_raw, Eigenstate, Level, ModelError,
    ModelFamily, ModelSpec,
};

pub use eigen::{eigen_lowest, eigenvector, TridiagonalOperator};
pub use gram::{gram_matrix, normalization, GramMatrix, GramSpace};
pub use quadrature::{quadrature, truncation_point, MAX_DEPTH};

/// Numeric eigenvalues above `threshold - MORSE_CONTINUUM_MARGIN` are treated
/// as discretized continuum and dropped before pairing.
pub const MORSE_CONTINUUM_MARGIN: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    InvalidGrid,
    NonFinitePotential { x: f64 },
    KOutOfRange { k: usize, size: usize },
    InvalidInterval,
    NonFiniteIntegrand { x: f64 },
    TruncationFailed,
    QuadratureNonConvergence { a: f64, b: f64 },
    Model(ModelError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::InvalidGrid => {
                f.write_str("grid needs finite xmin < xmax and at least 3 points")
            }
            SpectralError::NonFinitePotential { x } => {
                write!(f, "potential is not finite at x = {x}")
            }
            SpectralError::KOutOfRange { k, size } => {
                write!(f, "asked for {k} eigenvalues of a {size}x{size} operator")
            }
            SpectralError::InvalidInterval => {
                f.write_str("integration needs a < b and a positive tolerance")
            }
            SpectralError::NonFiniteIntegrand { x } => {
                write!(f, "integrand is not finite at x = {x}")
            }
            SpectralError::TruncationFailed => {
                f.write_str("integrand does not decay; cannot truncate the infinite interval")
            }
            SpectralError::QuadratureNonConvergence { a, b } => write!(
                f,
                "adaptive quadrature hit depth {MAX_DEPTH} on [{a}, {b}] without converging"
            ),
            SpectralError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SpectralError {}

impl From<ModelError> for SpectralError {
    fn from(e: ModelError) -> Self {
        SpectralError::Model(e)
    }
}

/// Uniform grid on `[xmin, xmax]` including both Dirichlet boundary points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    xmin: f64,
    xmax: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(xmin: f64, xmax: f64, n_points: usize) -> Result<Self, SpectralError> {
        if !(xmin.is_finite() && xmax.is_finite() && xmin < xmax && n_points >= 3) {
            return Err(SpectralError::InvalidGrid);
        }
        Ok(Self {
            xmin,
            xmax,
            n_points,
        })
    }

    /// Default domain for a model.
    ///
    /// Harmonic: `[-12, 12]` with 8000 points. Morse: the left wall sits where
    /// `exp(-2x)/4` passes `1e3`, the right wall where the slowest bound-state
    /// tail `exp(-s x)` has decayed to `1e-12`; the point count keeps
    /// `h = 0.004`, the spacing of `[-4, 28] x 8000`.
    pub fn default_for(spec: &ModelSpec) -> Self {
        match spec.family() {
            ModelFamily::HarmonicRational => Self {
                xmin: -12.0,
                xmax: 12.0,
                n_points: 8000,
            },
            ModelFamily::MorseRational => {
                let a = spec.alpha().unwrap_or_default();
                let top = bound_levels(spec, None)
                    .ok()
                    .and_then(|l| l.last().copied())
                    .unwrap_or(Level::Ground);
                let slowest = match top {
                    Level::Ground => -a / 2.0,
                    Level::Excited(n) => -a / 2.0 - (n + spec.ell()) as f64 - 1.0,
                };
                let xmin = libm::ceil(-0.5 * libm::log(4e3));
                let xmax = libm::ceil(libm::log(1e12) / slowest);
                let n_points = libm::round((xmax - xmin) * 8000.0 / 32.0) as usize;
                Self {
                    xmin,
                    xmax,
                    n_points,
                }
            }
        }
    }

    pub fn xmin(&self) -> f64 {
        self.xmin
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.xmax - self.xmin) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.xmax
        } else {
            self.xmin + i as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.point(i))
    }

    /// Same interval with half the spacing.
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }
}

/// Three-point discretization of `-d^2/dx^2 + V` on the interior points.
pub fn discretize(spec: &ModelSpec, grid: &Grid) -> Result<TridiagonalOperator, SpectralError> {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..grid.n_points() - 1)
        .map(|i| {
            let x = grid.point(i);
            let v = potential(spec, x);
            if v.is_finite() {
                Ok(v + 2.0 * inv_h2)
            } else {
                Err(SpectralError::NonFinitePotential { x })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TridiagonalOperator::new(diag, -inv_h2))
}

/// `max |-phi''_fd + (V - E) phi| / max |phi|` over the interior grid points.
pub fn schrodinger_residual(spec: &ModelSpec, state: &Eigenstate, grid: &Grid) -> f64 {
    let h = grid.spacing();
    let phi: Vec<f64> = grid
        .points()
        .map(|x| wavefunction_raw(spec, state, x))
        .collect();
    let scale = phi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let worst = (1..phi.len() - 1).fold(0.0f64, |m, i| {
        let x = grid.point(i);
        let d2 = (phi[i - 1] - 2.0 * phi[i] + phi[i + 1]) / (h * h);
        let r = -d2 + (potential(spec, x) - state.energy) * phi[i];
        m.max(r.abs())
    });
    worst / scale
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFailure {
    /// The discrete operator has a different number of sub-threshold
    /// eigenvalues than the model has bound states.
    CountMismatch { analytic: usize, numeric: usize },
}

impl SpectrumFailure {
    pub fn code(&self) -> &'static str {
        match self {
            SpectrumFailure::CountMismatch { .. } => "count-mismatch",
        }
    }
}

/// Closed-form against finite-difference spectrum, level by level.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub spec: ModelSpec,
    pub grid: Grid,
    pub levels: Vec<Level>,
    pub analytic: Vec<f64>,
    pub numeric: Vec<f64>,
    pub abs_error: Vec<f64>,
    pub max_error: f64,
    /// Schrodinger residual of each closed-form eigenfunction on `grid`.
    pub residuals: Vec<f64>,
    /// Energy cut applied to the numeric spectrum (Morse only).
    pub cutoff: Option<f64>,
    pub tolerance: f64,
    pub failure: Option<SpectrumFailure>,
    pub pass: bool,
}

/// Pairs closed-form bound energies with the lowest eigenvalues of the
/// discretized operator.
pub fn compare_spectrum(
    spec: &ModelSpec,
    grid: &Grid,
    nmax: Option<u32>,
    tol: f64,
) -> Result<VerificationReport, SpectralError> {
    let levels = bound_levels(spec, nmax)?;
    let analytic = levels
        .iter()
        .map(|&l| energy(spec, l))
        .collect::<Result<Vec<_>, _>>()?;
    let op = discretize(spec, grid)?;
    let cutoff = spec.threshold().map(|t| t - MORSE_CONTINUUM_MARGIN);
    // a Morse count is checked against the whole bound set even when nmax truncates it
    let (expected, available) = match cutoff {
        Some(c) => (bound_levels(spec, None)?.len(), op.sturm_count(c)),
        None => (levels.len(), levels.len().min(op.size())),
    };
    let mut numeric = if available == 0 {
        Vec::new()
    } else {
        eigen_lowest(&op, available)?
    };
    let failure = (available != expected).then_some(SpectrumFailure::CountMismatch {
        analytic: expected,
        numeric: available,
    });
    numeric.truncate(levels.len());
    let abs_error: Vec<f64> = analytic
        .iter()
        .zip(&numeric)
        .map(|(a, n)| (a - n).abs())
        .collect();
    let max_error = abs_error.iter().fold(0.0f64, |m, &e| m.max(e));
    let residuals = levels
        .iter()
        .map(|&l| Ok(schrodinger_residual(spec, &eigenstate(spec, l)?, grid)))
        .collect::<Result<Vec<_>, ModelError>>()?;
    let pass = failure.is_none() && max_error <= tol;
    Ok(VerificationReport {
        spec: spec.clone(),
        grid: *grid,
        levels,
        analytic,
        numeric,
        abs_error,
        max_error,
        residuals,
        cutoff,
        tolerance: tol,
        failure,
        pass,
    })
}
