//! Closed-form reproducing kernels.
//!
//! The slice regular exponential `e_*`, generalized Laguerre
//! polynomials, the slice polyanalytic Fock kernel
//! `K_N(q, r) = e_*(q conj(r)) L^1_{N-1}(|q - r|^2)`, and the slice
//! Bergman kernel of the unit ball in both published factorizations
//! `P_N Q_N psi_N` and `R_N L_N psi_N`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::binomial;
use crate::quaternion::Quaternion;

/// Largest kernel order; keeps `C(2N, k)` inside the exact integer range.
pub const MAX_KERNEL_ORDER: u32 = 10;

/// Series cap for [`e_star`].
pub const E_STAR_MAX_TERMS: usize = 512;

/// Default tolerance for [`e_star`]; double-precision floor.
pub const E_STAR_DEFAULT_TOL: f64 = 1e-14;

/// Kernel evaluation result with adaptive-series bookkeeping.
///
/// For closed-form kernels `terms_used` and the error bound are zero.
/// For series kernels the bound is the final term modulus relative to
/// `1 + |sum|`, which the stopping rule keeps at or below the requested
/// tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelValue {
    pub value: Quaternion,
    pub terms_used: usize,
    pub truncation_error_bound: f64,
}

/// Slice regular exponential `e_*(p conj(q)) = sum_n p^n conj(q)^n / n!`.
///
/// Terms are accumulated until one falls below `tol * (1 + |sum|)`;
/// hitting the cap signals that `|p| |q|` is too large for the
/// requested tolerance.
pub fn e_star(p: Quaternion, q: Quaternion, tol: f64) -> Result<KernelValue> {
    assert!(tol > 0.0, "e_star tolerance must be positive");
    let qbar = q.conj();
    let mut term = Quaternion::ONE;
    let mut sum = Quaternion::ZERO;
    for n in 0..E_STAR_MAX_TERMS {
        if n > 0 {
            term = p * term * qbar / n as f64;
        }
        if !term.is_finite() {
            return Err(Error::NoConvergence { terms: n });
        }
        sum = sum + term;
        let bound = term.modulus() / (1.0 + sum.modulus());
        if bound <= tol {
            return Ok(KernelValue {
                value: sum,
                terms_used: n + 1,
                truncation_error_bound: bound,
            });
        }
    }
    Err(Error::NoConvergence {
        terms: E_STAR_MAX_TERMS,
    })
}

/// Generalized Laguerre polynomial
/// `L^alpha_j(x) = sum_{i<=j} (-1)^i C(j+alpha, j-i) x^i / i!`.
pub fn laguerre(alpha: u32, j: u32, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0; // x^i / i!
    for i in 0..=j {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binomial(j + alpha, j - i) * power;
        power *= x / (i + 1) as f64;
    }
    sum
}

fn check_order(n: u32) -> Result<()> {
    if !(1..=MAX_KERNEL_ORDER).contains(&n) {
        return Err(Error::InvalidOrder {
            order: n,
            max: MAX_KERNEL_ORDER,
        });
    }
    Ok(())
}

fn check_in_ball(p: Quaternion) -> Result<()> {
    let m = p.modulus();
    if m >= 1.0 {
        return Err(Error::OutsideBall { modulus: m });
    }
    Ok(())
}

/// Slice polyanalytic Fock kernel
/// `K_N(q, r) = e_*(q conj(r)) L^1_{N-1}(|q - r|^2)`.
pub fn fock_kernel(n: u32, q: Quaternion, r: Quaternion, tol: f64) -> Result<KernelValue> {
    check_order(n)?;
    let exp = e_star(q, r, tol)?;
    let factor = laguerre(1, n - 1, (q - r).norm_sqr());
    Ok(KernelValue {
        value: exp.value * factor,
        terms_used: exp.terms_used,
        truncation_error_bound: exp.truncation_error_bound,
    })
}

/// Real polyanalytic factor of the Bergman kernel:
/// `psi_N(q, r) = sum_{k<N} (-1)^k C(N,k+1) C(N+k,N)
///                |1 - conj(r) q|^{2(N-1-k)} |q - r|^{2k}`,
/// with the `0^0 = 1` convention at coincident points.
pub fn bergman_psi(n: u32, q: Quaternion, r: Quaternion) -> Result<f64> {
    check_order(n)?;
    let b2 = (Quaternion::ONE - r.conj() * q).norm_sqr();
    let d2 = (q - r).norm_sqr();
    let mut sum = 0.0;
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign
            * binomial(n, k + 1)
            * binomial(n + k, n)
            * b2.powi((n - 1 - k) as i32)
            * d2.powi(k as i32);
    }
    Ok(sum)
}

/// Integer power of a quaternion taken inside its own slice.
///
/// A quaternion lies in the commutative plane spanned by 1 and its
/// imaginary direction, so the power is unambiguous: compute it as a
/// complex power there and re-embed.
fn slice_powi(b: Quaternion, e: i32) -> Quaternion {
    match b.slice_coords() {
        Ok(c) => {
            let w = Complex64::new(c.x, c.y).powi(e);
            Quaternion::from_real(w.re) + c.unit.as_quaternion() * w.im
        }
        Err(_) => Quaternion::from_real(b.re().powi(e)),
    }
}

/// Slice Bergman kernel of the unit ball, first form
/// `B_S^N(q, r) = P_N(q, r) Q_N(q, r) psi_N(q, r)` with
/// `P_N = (N/pi) sum_{k<=2N} (-1)^k C(2N,k) conj(q)^k conj(r)^k` and
/// `Q_N = (1 - 2 Re(q) conj(r) + |q|^2 conj(r)^2)^{-2N}`.
///
/// `psi_N` is real so it commutes, but `P_N` and `Q_N` in general do
/// not; the published factor order is preserved.
pub fn bergman_kernel(n: u32, q: Quaternion, r: Quaternion) -> Result<KernelValue> {
    check_order(n)?;
    check_in_ball(q)?;
    check_in_ball(r)?;
    let qbar = q.conj();
    let rbar = r.conj();

    let mut p_sum = Quaternion::ZERO;
    let mut qbar_pow = Quaternion::ONE;
    let mut rbar_pow = Quaternion::ONE;
    for k in 0..=2 * n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        p_sum = p_sum + qbar_pow * rbar_pow * (sign * binomial(2 * n, k));
        qbar_pow = qbar_pow * qbar;
        rbar_pow = rbar_pow * rbar;
    }
    let p_factor = p_sum * (n as f64 / std::f64::consts::PI);

    // The base lies in the slice of r; its -2N power is a complex power
    // inside that slice.
    let base = Quaternion::ONE - 2.0 * q.re() * rbar + q.norm_sqr() * (rbar * rbar);
    let q_factor = slice_powi(base, -2 * n as i32);

    let psi = bergman_psi(n, q, r)?;
    Ok(KernelValue {
        value: p_factor * q_factor * psi,
        terms_used: 0,
        truncation_error_bound: 0.0,
    })
}

/// Slice Bergman kernel, second form
/// `B_S^N(q, r) = R_N(q, r) L_N(q, r) psi_N(q, r)` with
/// `R_N = (1 - 2 q Re(r) + q^2 |r|^2)^{-2N}` and
/// `L_N = (N/pi) sum_{k<=2N} (-1)^k C(2N,k) q^k r^k`.
pub fn bergman_kernel_alt(n: u32, q: Quaternion, r: Quaternion) -> Result<KernelValue> {
    check_order(n)?;
    check_in_ball(q)?;
    check_in_ball(r)?;

    let base = Quaternion::ONE - 2.0 * r.re() * q + r.norm_sqr() * (q * q);
    let r_factor = slice_powi(base, -2 * n as i32);

    let mut l_sum = Quaternion::ZERO;
    let mut q_pow = Quaternion::ONE;
    let mut r_pow = Quaternion::ONE;
    for k in 0..=2 * n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        l_sum = l_sum + q_pow * r_pow * (sign * binomial(2 * n, k));
        q_pow = q_pow * q;
        r_pow = r_pow * r;
    }
    let l_factor = l_sum * (n as f64 / std::f64::consts::PI);

    let psi = bergman_psi(n, q, r)?;
    Ok(KernelValue {
        value: r_factor * l_factor * psi,
        terms_used: 0,
        truncation_error_bound: 0.0,
    })
}
