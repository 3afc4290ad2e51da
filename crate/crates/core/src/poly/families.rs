use super::{relative_residual, PolyError, Polynomial};

/// Highest degree any classical family member may be built with.
///
/// Coefficients grow factorially; past this point double precision no longer
/// carries the identity residuals below `1e-10`.
pub const MAX_FAMILY_DEGREE: usize = 31;

fn check_cap(n: usize) -> Result<(), PolyError> {
    if n > MAX_FAMILY_DEGREE {
        Err(PolyError::DegreeCap {
            requested: n,
            cap: MAX_FAMILY_DEGREE,
        })
    } else {
        Ok(())
    }
}

/// Physicists' Hermite polynomial `H_n` from
/// `H_{k+1} = 2t H_k - 2k H_{k-1}`.
pub fn hermite(n: usize) -> Result<Polynomial, PolyError> {
    check_cap(n)?;
    let two_t = Polynomial::monomial(2.0, 1);
    let mut prev = Polynomial::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = two_t.clone();
    for k in 1..n {
        let next = &(&two_t * &cur) - &prev.scale(2.0 * k as f64);
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Generalized Laguerre polynomial `L_n^{(a)}`, any real `a`.
///
/// Coefficients come from the ratio
/// `c_k = -c_{k+1} (k+1)(a+k+1)/(n-k)` starting at `c_n = (-1)^n/n!`.
/// The three-term recurrence cancels catastrophically when `n + a` is small
/// (e.g. `L_11^{(-10)}` has only two nonzero coefficients); the product form
/// keeps every coefficient to a few ulps.
pub fn laguerre(n: usize, a: f64) -> Result<Polynomial, PolyError> {
    check_cap(n)?;
    if !a.is_finite() {
        return Err(PolyError::NonFinite);
    }
    let mut coeffs = alloc::vec![0.0; n + 1];
    let mut c = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    for k in 1..=n {
        c /= k as f64;
    }
    coeffs[n] = c;
    for k in (0..n).rev() {
        c = -c * (k as f64 + 1.0) * (a + k as f64 + 1.0) / (n - k) as f64;
        coeffs[k] = c;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// The real polynomial `H_{2m}(i t)`, built as
/// `(-1)^m 4^m m! L_m^{(-1/2)}(-t^2)`.
///
/// Only even powers appear. `m = 0` gives the constant 1.
pub fn hermite_imag_even(m: usize) -> Result<Polynomial, PolyError> {
    check_cap(2 * m)?;
    let mut factor = if m % 2 == 1 { -1.0 } else { 1.0 };
    for k in 1..=m {
        factor *= 4.0 * k as f64;
    }
    Ok(laguerre(m, -0.5)?.compose_neg_square().scale(factor))
}

/// `L_n^{(a)}(-t)`.
pub fn laguerre_reflect(n: usize, a: f64) -> Result<Polynomial, PolyError> {
    Ok(laguerre(n, a)?.reflect())
}

/// Relative coefficient residuals of three Laguerre identities at `(n, a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals {
    /// `d/dt L_n^{(a)} + L_{n-1}^{(a+1)}`
    pub derivative: f64,
    /// `L_n^{(a)} - L_n^{(a-1)} - L_{n-1}^{(a)}`
    pub parameter_step: f64,
    /// `t L_{n-1}^{(a+1)} - a L_{n-1}^{(a)} + n L_n^{(a-1)}`
    pub contiguous: f64,
}

impl IdentityResiduals {
    pub fn max(&self) -> f64 {
        self.derivative
            .max(self.parameter_step)
            .max(self.contiguous)
    }
}

pub fn laguerre_identity_residuals(n: usize, a: f64) -> Result<IdentityResiduals, PolyError> {
    if n == 0 {
        return Err(PolyError::InvalidIndex { index: n, min: 1 });
    }
    let l_n = laguerre(n, a)?;
    let l_n_down = laguerre(n, a - 1.0)?;
    let l_prev = laguerre(n - 1, a)?;
    let l_prev_up = laguerre(n - 1, a + 1.0)?;

    let d = l_n.derivative();
    let derivative = relative_residual(&(&d + &l_prev_up), &[&d, &l_prev_up]);

    let parameter_step = relative_residual(
        &(&(&l_n - &l_n_down) - &l_prev),
        &[&l_n, &l_n_down, &l_prev],
    );

    let t1 = l_prev_up.shift(1);
    let t2 = l_prev.scale(a);
    let t3 = l_n_down.scale(n as f64);
    let contiguous = relative_residual(&(&(&t1 - &t2) + &t3), &[&t1, &t2, &t3]);

    Ok(IdentityResiduals {
        derivative,
        parameter_step,
        contiguous,
    })
}
