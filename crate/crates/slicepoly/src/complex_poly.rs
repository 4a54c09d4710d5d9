//! Complex-plane polyanalytic oracle.
//!
//! Evaluation of polyanalytic series `f(z) = sum_k conj(z)^k a_k(z)` and
//! the classical polyanalytic Fock and Bergman kernels. The quaternionic
//! kernels restrict to these on every slice, which is what the
//! verification suites check.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::binomial;

/// Largest order accepted by [`fock_kernel_c`]; keeps every binomial row
/// within the exact integer range.
pub const MAX_FOCK_ORDER_C: u32 = 20;

/// Largest order accepted by [`bergman_kernel_c`]; its `C(n+k, n)`
/// factors reach row `2n - 1`.
pub const MAX_BERGMAN_ORDER_C: u32 = 10;

/// Polyanalytic series of order `n`: analytic components `a_0..a_{n-1}`,
/// each a truncated power series in `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolySeries {
    components: Vec<Vec<Complex64>>,
}

impl ComplexPolySeries {
    pub fn new(components: Vec<Vec<Complex64>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyFunction);
        }
        Ok(Self { components })
    }

    /// Order-1 series from a plain coefficient list.
    pub fn analytic(coeffs: Vec<Complex64>) -> Self {
        Self {
            components: vec![coeffs],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.components.len()
    }

    #[inline]
    pub fn components(&self) -> &[Vec<Complex64>] {
        &self.components
    }

    /// `sum_k conj(z)^k (sum_j c_{k,j} z^j)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zbar = z.conj();
        let mut zbar_pow = Complex64::new(1.0, 0.0);
        let mut total = Complex64::new(0.0, 0.0);
        for coeffs in &self.components {
            let mut inner = Complex64::new(0.0, 0.0);
            for &c in coeffs.iter().rev() {
                inner = inner * z + c;
            }
            total += zbar_pow * inner;
            zbar_pow *= zbar;
        }
        total
    }

    /// True when every coefficient is real to within `tol`.
    pub fn is_intrinsic(&self, tol: f64) -> bool {
        self.components
            .iter()
            .flatten()
            .all(|c| c.im.abs() <= tol)
    }
}

/// Reproducing kernel of the order-`n` polyanalytic Fock space:
/// `e^{conj(w) z} sum_{k<n} (-1)^k C(n,k+1) |z-w|^{2k} / k!`.
pub fn fock_kernel_c(n: u32, z: Complex64, w: Complex64) -> Result<Complex64> {
    if !(1..=MAX_FOCK_ORDER_C).contains(&n) {
        return Err(Error::InvalidOrder {
            order: n,
            max: MAX_FOCK_ORDER_C,
        });
    }
    let d2 = (z - w).norm_sqr();
    let mut sum = 0.0;
    let mut term = 1.0; // |z-w|^{2k} / k!
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binomial(n, k + 1) * term;
        term *= d2 / (k + 1) as f64;
    }
    Ok((w.conj() * z).exp() * sum)
}

/// Reproducing kernel of the order-`n` polyanalytic Bergman space of the
/// unit disk.
pub fn bergman_kernel_c(n: u32, z: Complex64, w: Complex64) -> Result<Complex64> {
    if !(1..=MAX_BERGMAN_ORDER_C).contains(&n) {
        return Err(Error::InvalidOrder {
            order: n,
            max: MAX_BERGMAN_ORDER_C,
        });
    }
    for p in [z, w] {
        if p.norm() >= 1.0 {
            return Err(Error::OutsideDisk { modulus: p.norm() });
        }
    }
    let base = Complex64::new(1.0, 0.0) - w.conj() * z;
    let b2 = base.norm_sqr();
    let d2 = (z - w).norm_sqr();
    let mut sum = 0.0;
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign
            * binomial(n, k + 1)
            * binomial(n + k, n)
            * b2.powi((n - 1 - k) as i32)
            * d2.powi(k as i32);
    }
    let prefactor = n as f64 / (std::f64::consts::PI * base.powi(2 * n as i32));
    Ok(prefactor * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_constant() {
        let p = ComplexPolySeries::analytic(vec![c(1.0, 0.0)]);
        assert_eq!(p.eval(c(0.3, -2.0)), c(1.0, 0.0));
    }

    #[test]
    fn eval_one_minus_z_zbar_vanishes_on_the_unit_circle() {
        // a_0 = 1, a_1(z) = -z.
        let p = ComplexPolySeries::new(vec![
            vec![c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        assert!(p.eval(c(1.0, 0.0)).norm() < 1e-15);
        let z = c(0.6, 0.8);
        assert!(p.eval(z).norm() < 1e-15);
    }

    #[test]
    fn eval_zbar_squared() {
        let p = ComplexPolySeries::new(vec![vec![], vec![], vec![c(1.0, 0.0)]]).unwrap();
        let z = c(1.0, 1.0);
        assert!((p.eval(z) - c(0.0, -2.0)).norm() < 1e-15);
    }

    #[test]
    fn order_zero_is_rejected() {
        assert_eq!(
            ComplexPolySeries::new(vec![]).unwrap_err(),
            Error::EmptyFunction
        );
    }

    #[test]
    fn fock_order_one_is_the_exponential_kernel() {
        let z = c(0.4, -0.3);
        let w = c(-0.2, 0.9);
        let expect = (w.conj() * z).exp();
        assert!((fock_kernel_c(1, z, w).unwrap() - expect).norm() < 1e-15);
    }

    #[test]
    fn fock_diagonal_is_n_times_gaussian() {
        for n in 1..=5 {
            let z = c(0.7, -1.1);
            let expect = n as f64 * z.norm_sqr().exp();
            let got = fock_kernel_c(n, z, z).unwrap();
            assert!((got - c(expect, 0.0)).norm() <= 1e-13 * expect);
        }
    }

    #[test]
    fn fock_at_origin() {
        assert!((fock_kernel_c(2, c(0.0, 0.0), c(0.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn fock_order_limits() {
        let z = c(0.0, 0.0);
        assert!(matches!(
            fock_kernel_c(0, z, z),
            Err(Error::InvalidOrder { .. })
        ));
        assert!(matches!(
            fock_kernel_c(21, z, z),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn bergman_order_one_closed_form() {
        let z = c(0.2, 0.5);
        let w = c(-0.4, 0.1);
        let expect = 1.0 / (PI * (c(1.0, 0.0) - w.conj() * z).powi(2));
        assert!((bergman_kernel_c(1, z, w).unwrap() - expect).norm() < 1e-15);
    }

    #[test]
    fn bergman_at_origin_is_n_squared_over_pi() {
        for n in 1..=5 {
            let got = bergman_kernel_c(n, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
            let expect = (n * n) as f64 / PI;
            assert!((got - c(expect, 0.0)).norm() < 1e-14 * expect);
        }
        let got = bergman_kernel_c(2, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!((got.re - 4.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn bergman_domain_checks() {
        let z = c(0.0, 0.0);
        assert!(matches!(
            bergman_kernel_c(1, c(1.0, 0.0), z),
            Err(Error::OutsideDisk { .. })
        ));
        assert!(matches!(
            bergman_kernel_c(0, z, z),
            Err(Error::InvalidOrder { .. })
        ));
        assert!(matches!(
            bergman_kernel_c(11, z, z),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn kernels_are_hermitian_and_positive_on_the_diagonal() {
        let pts = [c(0.3, 0.2), c(-0.5, 0.1), c(0.0, -0.6), c(0.45, 0.44)];
        for n in 1..=3 {
            for &z in &pts {
                for &w in &pts {
                    let f = fock_kernel_c(n, z, w).unwrap();
                    let fswap = fock_kernel_c(n, w, z).unwrap();
                    assert!((f.conj() - fswap).norm() <= 1e-12 * (1.0 + f.norm()));
                    let b = bergman_kernel_c(n, z, w).unwrap();
                    let bswap = bergman_kernel_c(n, w, z).unwrap();
                    assert!((b.conj() - bswap).norm() <= 1e-12 * (1.0 + b.norm()));
                }
                assert!(fock_kernel_c(n, z, z).unwrap().re > 0.0);
                assert!(bergman_kernel_c(n, z, z).unwrap().re > 0.0);
            }
        }
    }
}
