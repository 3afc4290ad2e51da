use proptest::prelude::*;

use solvext_core::models::{bound_levels, eigenstate, Level, ModelSpec};
use solvext_core::poly::Polynomial;
use solvext_core::spectral::{
    compare_spectrum, discretize, schrodinger_residual, Grid, MORSE_CONTINUUM_MARGIN,
};

fn max_error(spec: &ModelSpec, grid: &Grid, nmax: Option<u32>) -> f64 {
    compare_spectrum(spec, grid, nmax, 1.0).unwrap().max_error
}

#[test]
fn spectrum_error_is_second_order() {
    let cases = [
        (
            ModelSpec::harmonic(2).unwrap(),
            Some(4),
            Grid::new(-12.0, 12.0, 4000).unwrap(),
        ),
        (
            ModelSpec::morse(0, -10.0).unwrap(),
            None,
            Grid::new(-4.0, 28.0, 4000).unwrap(),
        ),
        (
            ModelSpec::morse(2, -10.0).unwrap(),
            None,
            Grid::new(-4.0, 28.0, 4000).unwrap(),
        ),
    ];
    for (spec, nmax, grid) in &cases {
        let coarse = max_error(spec, grid, *nmax);
        let fine = max_error(spec, &grid.refined(), *nmax);
        assert!(
            coarse / fine >= 3.5,
            "{} l={}: {coarse:e} -> {fine:e}",
            spec.family(),
            spec.ell()
        );
    }
}

#[test]
fn morse_count_matches_bound() {
    for (ell, alpha) in [(0u32, -10.0), (2, -10.0), (2, -14.0), (4, -14.0)] {
        let spec = ModelSpec::morse(ell, alpha).unwrap();
        let grid = Grid::default_for(&spec);
        let op = discretize(&spec, &grid).unwrap();
        let cut = -alpha / 2.0 - ell as f64 - 1.0;
        let expected = 1 + if cut > 0.0 { cut.ceil() as usize } else { 0 };
        let numeric = op.sturm_count(alpha * alpha / 4.0 - MORSE_CONTINUUM_MARGIN);
        assert_eq!(numeric, expected, "l={ell} a={alpha}");
        assert_eq!(bound_levels(&spec, None).unwrap().len(), expected);
    }
}

#[test]
fn residual_examples() {
    let ho0 = ModelSpec::harmonic(0).unwrap();
    let g = eigenstate(&ho0, Level::Ground).unwrap();
    assert!(schrodinger_residual(&ho0, &g, &Grid::new(-10.0, 10.0, 4000).unwrap()) < 1e-4);

    let ho2 = ModelSpec::harmonic(2).unwrap();
    let s = eigenstate(&ho2, Level::Excited(2)).unwrap();
    assert!(schrodinger_residual(&ho2, &s, &Grid::new(-10.0, 10.0, 4000).unwrap()) < 1e-3);

    // pure h^2 truncation: 1.54e-3 at h = 28/7999, a quarter of that at h/2
    let m = ModelSpec::morse(2, -10.0).unwrap();
    let s = eigenstate(&m, Level::Excited(1)).unwrap();
    let grid = Grid::new(-3.0, 25.0, 8000).unwrap();
    let (coarse, fine) = (
        schrodinger_residual(&m, &s, &grid),
        schrodinger_residual(&m, &s, &grid.refined()),
    );
    assert!((1.5e-3..1.6e-3).contains(&coarse), "{coarse}");
    assert!(fine < 1e-3);
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-1.0f64..1.0, 0..=41).prop_map(Polynomial::from_coeffs)
}

proptest! {
    #[test]
    fn eval_is_additive(p in poly_strategy(), q in poly_strategy(), t in -20.0f64..20.0) {
        let sum = (&p + &q).eval(t);
        let parts = p.eval(t) + q.eval(t);
        let magnitude: Vec<f64> = p.coeffs().iter().chain(q.coeffs()).map(|c| c.abs()).collect();
        let scale = 1.0 + Polynomial::from_coeffs(magnitude).eval(t.abs());
        prop_assert!((sum - parts).abs() <= 1e-12 * scale);
    }

    #[test]
    fn product_degree_adds(p in poly_strategy(), q in poly_strategy()) {
        let prod = &p * &q;
        if p.is_zero() || q.is_zero() {
            prop_assert!(prod.is_zero());
        } else {
            prop_assert_eq!(prod.degree_signed(), p.degree_signed() + q.degree_signed());
        }
    }

    #[test]
    fn derivative_lowers_degree(p in poly_strategy()) {
        let d = p.derivative();
        prop_assert_eq!(d.degree_signed(), (p.degree_signed() - 1).max(-1));
    }
}
