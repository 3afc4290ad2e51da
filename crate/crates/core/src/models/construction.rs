use super::{
    deforming_function, energy, ode_coefficients, Level, ModelError, ModelFamily, ModelSpec,
    MAX_INDEX_SUM,
};
use crate::poly::{hermite, laguerre, laguerre_reflect, relative_residual, Polynomial};

fn check_index(spec: &ModelSpec, n: u32) -> Result<(), ModelError> {
    let index_sum = spec.ell + n;
    if index_sum > MAX_INDEX_SUM {
        return Err(ModelError::DegreeCap {
            index_sum,
            cap: MAX_INDEX_SUM,
        });
    }
    if spec.family == ModelFamily::MorseRational {
        // rejects levels outside the bound set
        energy(spec, Level::Excited(n))?;
    }
    Ok(())
}

/// Relative residual of `c2 xi'' + c1 xi' + E~ xi`.
pub fn xi_ode_residual(spec: &ModelSpec) -> f64 {
    let c = ode_coefficients(spec);
    let d = deforming_function(spec);
    let t2 = &c.c2 * &d.xi.derivative().derivative();
    let t1 = &c.c1 * &d.xi.derivative();
    let t0 = &d.etilde * &d.xi;
    relative_residual(&(&(&t2 + &t1) + &t0), &[&t2, &t1, &t0])
}

fn morse_beta(spec: &ModelSpec, n: u32) -> f64 {
    let a = spec.alpha.unwrap_or_default();
    -a - 2.0 * (n + spec.ell + 1) as f64
}

/// Eigenpolynomial of degree `ell + n + 1`.
///
/// Harmonic: `H_n xi' + H_{n+1} xi`.
/// Morse: `P = eta L_n^{(b)} xi' - (ell L_n^{(b)} + (n+1) L_{n+1}^{(b)}) xi`
/// with `b = -alpha - 2(n + ell + 1)`; the full `p` is `eta^{-(n+ell+1)} P`.
pub fn p_polynomial(spec: &ModelSpec, n: u32) -> Result<Polynomial, ModelError> {
    check_index(spec, n)?;
    let nu = n as usize;
    match spec.family {
        ModelFamily::HarmonicRational => {
            Ok(&hermite(nu)? * &spec.xi_prime + &hermite(nu + 1)? * &spec.xi)
        }
        ModelFamily::MorseRational => {
            let beta = morse_beta(spec, n);
            let l_n = laguerre(nu, beta)?;
            let l_next = laguerre(nu + 1, beta)?;
            let first = (&l_n * &spec.xi_prime).shift(1);
            let bracket = &l_n.scale(spec.ell as f64) + &l_next.scale(n as f64 + 1.0);
            Ok(&first - &(&bracket * &spec.xi))
        }
    }
}

/// Product form of the Morse eigenpolynomial,
/// `-[(alpha + ell) L_{ell-1}^{(alpha)}(-eta) L_n^{(b)} + (n+1) L_ell^{(alpha)}(-eta) L_{n+1}^{(b)}]`,
/// with `L_{-1} = 0`.
pub fn p_polynomial_closed(spec: &ModelSpec, n: u32) -> Result<Polynomial, ModelError> {
    let a = spec.alpha.ok_or(ModelError::MorseOnly)?;
    check_index(spec, n)?;
    let (nu, ell) = (n as usize, spec.ell as usize);
    let beta = morse_beta(spec, n);
    let second = (&laguerre_reflect(ell, a)? * &laguerre(nu + 1, beta)?).scale(n as f64 + 1.0);
    let first = if ell == 0 {
        Polynomial::zero()
    } else {
        (&laguerre_reflect(ell - 1, a)? * &laguerre(nu, beta)?).scale(a + spec.ell as f64)
    };
    Ok(-(&first + &second))
}

/// Harmonic eigenpolynomial against the reduced form
/// `L_m^{(-1/2)}(-x^2) H_{n+1}/2 + x L_{m-1}^{(1/2)}(-x^2) H_n` (`ell = 2m`),
/// after matching leading coefficients. Zero for `ell = 0`.
pub fn harmonic_reduced_residual(spec: &ModelSpec, n: u32) -> Result<f64, ModelError> {
    if spec.family != ModelFamily::HarmonicRational {
        return Err(ModelError::InvalidParameter(
            "reduced form exists for the harmonic family only",
        ));
    }
    let p = p_polynomial(spec, n)?;
    let m = spec.ell as usize / 2;
    if m == 0 {
        return Ok(0.0);
    }
    let nu = n as usize;
    let lm = laguerre(m, -0.5)?.compose_neg_square();
    let lm1 = laguerre(m - 1, 0.5)?.compose_neg_square();
    let reduced = &(&lm * &hermite(nu + 1)?).scale(0.5) + &(&lm1 * &hermite(nu)?).shift(1);
    let ratio = p.leading() / reduced.leading();
    Ok(relative_residual(&(&p - &reduced.scale(ratio)), &[&p]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructionResiduals {
    /// Residual of the second-order equation satisfied by the eigenpolynomial
    /// factor (`H_n` or `L_n^{(b)}`) at the closed-form energy.
    pub operator: f64,
    /// `p_polynomial` against `xi' F + xi G` assembled from `c1`, `c2` and that factor.
    pub assembly: f64,
}

/// Residuals of the two construction steps for level `n`.
pub fn construction_residuals(
    spec: &ModelSpec,
    n: u32,
) -> Result<ConstructionResiduals, ModelError> {
    let p = p_polynomial(spec, n)?;
    let e = energy(spec, Level::Excited(n))?;
    let c = ode_coefficients(spec);
    let etilde = deforming_function(spec).etilde;
    let c2p = c.c2.derivative();
    let nu = n as usize;
    match spec.family {
        ModelFamily::HarmonicRational => {
            let v = hermite(nu)?;
            let (v1, v2) = (v.derivative(), v.derivative().derivative());
            // c2 V'' + (2c2' - c1) V' + (c2'' - c1' + E~ + E) V
            let t2 = &c.c2 * &v2;
            let t1 = &(&c2p.scale(2.0) - &c.c1) * &v1;
            let k =
                &(&(&c2p.derivative() - &c.c1.derivative()) + &etilde) + &Polynomial::constant(e);
            let t0 = &k * &v;
            let operator = relative_residual(&(&(&t2 + &t1) + &t0), &[&t2, &t1, &t0]);

            let f = &c.c2 * &v;
            let g = &(&(&c.c1 - &c2p) * &v) - &(&c.c2 * &v1);
            let assembled = &(&spec.xi_prime * &f) + &(&spec.xi * &g);
            let assembly = relative_residual(&(&p - &assembled), &[&p, &assembled]);
            Ok(ConstructionResiduals { operator, assembly })
        }
        ModelFamily::MorseRational => {
            // V = eta^g U; dividing the V equation by eta^g leaves
            // eta^2 U'' + 2g eta U' + g(g-1) U + s (g U + eta U') + k U
            // with s = (2c2' - c1)/eta and k = c2'' - c1' + E~ + E
            let gamma = -((n + spec.ell) as f64 + 2.0);
            let u = laguerre(nu, morse_beta(spec, n))?;
            let (u1, u2) = (u.derivative(), u.derivative().derivative());
            let s = divide_by_eta(&(&c2p.scale(2.0) - &c.c1));
            let k =
                &(&(&c2p.derivative() - &c.c1.derivative()) + &etilde) + &Polynomial::constant(e);
            let t2 = u2.shift(2);
            let t1 = u1.shift(1).scale(2.0 * gamma);
            let t0 = u.scale(gamma * (gamma - 1.0));
            let ts = &s * &(&u.scale(gamma) + &u1.shift(1));
            let tk = &k * &u;
            let total = &(&(&(&t2 + &t1) + &t0) + &ts) + &tk;
            let operator = relative_residual(&total, &[&t2, &t1, &t0, &ts, &tk]);

            // F = eta^(g+1) * eta U,  G = eta^(g+1) * [((c1 - c2')/eta - g) U - eta U']
            let f = u.shift(1);
            let h = &divide_by_eta(&(&c.c1 - &c2p)) - &Polynomial::constant(gamma);
            let g = &(&h * &u) - &u1.shift(1);
            let assembled = &(&spec.xi_prime * &f) + &(&spec.xi * &g);
            let assembly = relative_residual(&(&p - &assembled), &[&p, &assembled]);
            Ok(ConstructionResiduals { operator, assembly })
        }
    }
}

/// Exact division by `eta` of a polynomial with zero constant term.
fn divide_by_eta(p: &Polynomial) -> Polynomial {
    debug_assert_eq!(p.coeff(0), 0.0);
    Polynomial::from_coeffs(p.coeffs().iter().skip(1).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::bound_levels;

    #[test]
    fn xi_ode_examples() {
        assert!(xi_ode_residual(&ModelSpec::harmonic(2).unwrap()) < 1e-12);
        assert_eq!(xi_ode_residual(&ModelSpec::morse(0, -10.0).unwrap()), 0.0);
        assert!(xi_ode_residual(&ModelSpec::morse(2, -10.0).unwrap()) < 1e-12);
    }

    #[test]
    fn p_examples() {
        let ho0 = ModelSpec::harmonic(0).unwrap();
        assert_eq!(p_polynomial(&ho0, 0).unwrap().coeffs(), &[0.0, 2.0]);
        let ho2 = ModelSpec::harmonic(2).unwrap();
        let p = p_polynomial(&ho2, 0).unwrap();
        assert_eq!(p.coeffs(), &[0.0, -12.0, 0.0, -8.0]);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn morse_p_closed_equivalence() {
        let m = ModelSpec::morse(2, -10.0).unwrap();
        for n in 0..2 {
            let a = p_polynomial(&m, n).unwrap();
            let b = p_polynomial_closed(&m, n).unwrap();
            assert_eq!(a.degree(), Some(3 + n as usize));
            assert!(relative_residual(&(&a - &b), &[&a, &b]) < 1e-10);
        }
        let m0 = ModelSpec::morse(0, -10.0).unwrap();
        let b = p_polynomial_closed(&m0, 1).unwrap();
        let want = laguerre(2, 10.0 - 4.0).unwrap().scale(-2.0);
        assert!(relative_residual(&(&b - &want), &[&want]) < 1e-15);
        assert_eq!(
            p_polynomial_closed(&ModelSpec::harmonic(2).unwrap(), 0),
            Err(ModelError::MorseOnly)
        );
        assert_eq!(
            p_polynomial(&m, 2),
            Err(ModelError::NotBound(Level::Excited(2)))
        );
    }

    #[test]
    fn construction_examples() {
        let ho2 = ModelSpec::harmonic(2).unwrap();
        let r = construction_residuals(&ho2, 0).unwrap();
        assert_eq!(r.operator, 0.0);
        assert!(r.assembly < 1e-15);
        let r = construction_residuals(&ho2, 3).unwrap();
        assert!(r.operator < 1e-10 && r.assembly < 1e-10);
        let m = ModelSpec::morse(2, -10.0).unwrap();
        let r = construction_residuals(&m, 1).unwrap();
        assert!(r.operator < 1e-10 && r.assembly < 1e-10, "{r:?}");
    }

    #[test]
    fn wrong_energy_is_detected() {
        // shifting the energy by one unit must leave a visible residual
        let m = ModelSpec::morse(2, -10.0).unwrap();
        let c = ode_coefficients(&m);
        let u = laguerre(1, morse_beta(&m, 1)).unwrap();
        let gamma = -5.0;
        let s = divide_by_eta(&(&c.c2.derivative().scale(2.0) - &c.c1));
        let k = &(&(&c.c2.derivative().derivative() - &c.c1.derivative())
            + &deforming_function(&m).etilde)
            + &Polynomial::constant(25.0);
        let total = &(&(&(&u.derivative().derivative().shift(2)
            + &u.derivative().shift(1).scale(2.0 * gamma))
            + &u.scale(gamma * (gamma - 1.0)))
            + &(&s * &(&u.scale(gamma) + &u.derivative().shift(1))))
            + &(&k * &u);
        assert!(total.max_abs_coeff() > 0.5);
    }

    #[test]
    fn harmonic_reduced_form_is_proportional() {
        for m in 1..=3u32 {
            let spec = ModelSpec::harmonic(2 * m).unwrap();
            for n in 0..=4 {
                let r = harmonic_reduced_residual(&spec, n).unwrap();
                assert!(r < 1e-10, "m={m} n={n} r={r}");
            }
        }
        let morse = ModelSpec::morse(2, -10.0).unwrap();
        assert!(harmonic_reduced_residual(&morse, 0).is_err());
    }

    #[test]
    fn degree_law_lattice() {
        for ell in (0..=6).step_by(2) {
            let ho = ModelSpec::harmonic(ell).unwrap();
            for n in 0..=4 {
                let p = p_polynomial(&ho, n).unwrap();
                assert_eq!(p.degree(), Some((ell + n + 1) as usize));
            }
            let morse = ModelSpec::morse(ell, -24.0).unwrap();
            for level in bound_levels(&morse, Some(4)).unwrap() {
                if let Level::Excited(n) = level {
                    let p = p_polynomial(&morse, n).unwrap();
                    assert_eq!(p.degree(), Some((ell + n + 1) as usize));
                }
            }
        }
    }
}
