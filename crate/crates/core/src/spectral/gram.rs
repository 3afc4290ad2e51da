//! Inner products of the closed-form eigenfunctions.

use alloc::vec::Vec;

use super::quadrature::{magnitude_hint, quadrature};
use super::SpectralError;
use crate::models::{
    eigenstate, wavefunction_raw, weight_function, Eigenstate, Level, ModelFamily, ModelSpec,
};

/// Relative accuracy asked of every Gram entry.
const GRAM_REL_TOL: f64 = 1e-12;

/// Representation in which the inner product is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GramSpace {
    /// `integral phi_i phi_j dx`.
    X,
    /// `eta`-space with weight `exp(-eta) eta^(-alpha) / xi^2` (Morse).
    EtaStated,
    /// `eta`-space with weight `exp(-eta) eta^(-alpha-1) / xi^2` (Morse).
    EtaMeasure,
}

impl GramSpace {
    pub fn name(self) -> &'static str {
        match self {
            GramSpace::X => "x-space",
            GramSpace::EtaStated => "eta-space-stated",
            GramSpace::EtaMeasure => "eta-space-measure",
        }
    }
}

/// Square matrix of pairwise inner products, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub levels: Vec<Level>,
    pub space: GramSpace,
    entries: Vec<f64>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.levels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.size() + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `|G_ij| / sqrt(G_ii G_jj)` for `i != j`.
    pub fn normalized(&self, i: usize, j: usize) -> f64 {
        self.get(i, j).abs() / libm::sqrt(self.get(i, i) * self.get(j, j))
    }

    /// Largest normalized off-diagonal entry; zero for a 1x1 matrix.
    pub fn max_offdiag(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.normalized(i, j));
                }
            }
        }
        worst
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = (self.get(i, j), self.get(j, i));
                (a - b).abs() <= tol * libm::sqrt(self.get(i, i) * self.get(j, j))
            })
        })
    }

    pub fn diagonal_positive(&self) -> bool {
        (0..self.size()).all(|i| self.get(i, i) > 0.0)
    }
}

/// Polynomial part carried into `eta`-space: `p` for the harmonic family,
/// `eta^(gamma+1) P` for Morse excited states, 1 for ground states.
fn full_polynomial(spec: &ModelSpec, state: &Eigenstate, eta: f64) -> f64 {
    match (spec.family(), state.level) {
        (ModelFamily::MorseRational, Level::Excited(_)) => {
            libm::pow(eta, state.gamma + 1.0) * state.p.eval(eta)
        }
        _ => state.p.eval(eta),
    }
}

fn integrand<'a>(
    spec: &'a ModelSpec,
    a: &'a Eigenstate,
    b: &'a Eigenstate,
    space: GramSpace,
) -> impl Fn(f64) -> f64 + 'a {
    move |s: f64| match (space, spec.family()) {
        (GramSpace::X, _) => wavefunction_raw(spec, a, s) * wavefunction_raw(spec, b, s),
        (_, ModelFamily::HarmonicRational) => {
            let w = weight_function(spec, s).map_or(f64::NAN, |w| w.measure);
            if w == 0.0 {
                return 0.0;
            }
            a.p.eval(s) * b.p.eval(s) * w
        }
        (_, ModelFamily::MorseRational) => {
            // eta = e^s, d eta = eta ds
            let eta = libm::exp(s);
            let w = match weight_function(spec, eta) {
                Ok(pair) if space == GramSpace::EtaStated => pair.stated,
                Ok(pair) => pair.measure,
                Err(_) => return 0.0,
            };
            if w == 0.0 {
                return 0.0;
            }
            full_polynomial(spec, a, eta) * full_polynomial(spec, b, eta) * w * eta
        }
    }
}

/// Pairwise inner products of the unnormalized eigenfunctions of `levels`.
pub fn gram_matrix(
    spec: &ModelSpec,
    levels: &[Level],
    space: GramSpace,
) -> Result<GramMatrix, SpectralError> {
    let states = levels
        .iter()
        .map(|&l| eigenstate(spec, l))
        .collect::<Result<Vec<_>, _>>()?;
    let n = states.len();
    let mut entries = alloc::vec![0.0; n * n];
    for i in 0..n {
        let f = integrand(spec, &states[i], &states[i], space);
        let tol = GRAM_REL_TOL * magnitude_hint(&f, 0.0);
        entries[i * n + i] = quadrature(f, f64::NEG_INFINITY, f64::INFINITY, tol)?;
    }
    for i in 0..n {
        for j in i + 1..n {
            let f = integrand(spec, &states[i], &states[j], space);
            let tol = GRAM_REL_TOL * libm::sqrt(entries[i * n + i] * entries[j * n + j]);
            let v = quadrature(f, f64::NEG_INFINITY, f64::INFINITY, tol)?;
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    Ok(GramMatrix {
        levels: levels.to_vec(),
        space,
        entries,
    })
}

/// `N` with `integral (N phi)^2 dx = 1`, the integral taken to relative
/// accuracy `tol`.
pub fn normalization(spec: &ModelSpec, state: &Eigenstate, tol: f64) -> Result<f64, SpectralError> {
    let f = |x: f64| {
        let v = wavefunction_raw(spec, state, x);
        v * v
    };
    let abs_tol = tol * magnitude_hint(&f, 0.0);
    let norm2 = quadrature(f, f64::NEG_INFINITY, f64::INFINITY, abs_tol)?;
    Ok(1.0 / libm::sqrt(norm2))
}
