//! Series representations and structural operations for slice regular
//! and slice polyanalytic functions.
//!
//! A [`RegularSeries`] is a truncated power series `sum_n q^n a_n` with
//! quaternion coefficients on the right. A [`PolySliceFunction`] of
//! order `N` is a component list `(f_0, ..., f_{N-1})` representing
//! `f(q) = sum_k conj(q)^k f_k(q)`. Both are origin-centered; every
//! space treated downstream (the whole space for Fock, the unit ball
//! for Bergman) is origin-centered too.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex_poly::ComplexPolySeries;
use crate::error::{Error, Result};
use crate::numeric::binomial;
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// Default truncation cap for series-growing operations such as
/// [`star`]. Operations that would exceed it truncate and set the
/// [`RegularSeries::truncated`] flag.
pub const DEFAULT_SERIES_CAP: usize = 32;

/// Coefficients below this are treated as real by [`PolySliceFunction::is_intrinsic`].
const INTRINSIC_TOL: f64 = 1e-14;

/// Orthogonality tolerance for unit pairs fed to the splitting operations.
const ORTHO_TOL: f64 = 1e-10;

/// Truncated power series `sum_n q^n a_n` with right coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularSeries {
    coeffs: Vec<Quaternion>,
    radius: f64,
    truncated: bool,
}

impl RegularSeries {
    /// Series with the given coefficients, valid on `|q| < radius`.
    pub fn new(coeffs: Vec<Quaternion>, radius: f64) -> Self {
        Self {
            coeffs,
            radius,
            truncated: false,
        }
    }

    /// Entire series (infinite nominal radius).
    pub fn entire(coeffs: Vec<Quaternion>) -> Self {
        Self::new(coeffs, f64::INFINITY)
    }

    pub fn constant(a: Quaternion, radius: f64) -> Self {
        Self::new(vec![a], radius)
    }

    pub fn zero(radius: f64) -> Self {
        Self::new(Vec::new(), radius)
    }

    /// `q^degree * a`.
    pub fn monomial(degree: usize, a: Quaternion, radius: f64) -> Self {
        let mut coeffs = vec![Quaternion::ZERO; degree + 1];
        coeffs[degree] = a;
        Self::new(coeffs, radius)
    }

    pub fn from_real_coeffs(coeffs: &[f64], radius: f64) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Quaternion::from_real(c)).collect(),
            radius,
        )
    }

    #[inline]
    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Set when a series-growing operation had to drop high-degree terms.
    #[inline]
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation of `sum_n q^n a_n`; powers of `q` stay on the left.
    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        let m = q.modulus();
        if m >= self.radius {
            return Err(Error::OutsideRadius {
                modulus: m,
                radius: self.radius,
            });
        }
        let mut acc = Quaternion::ZERO;
        for &a in self.coeffs.iter().rev() {
            acc = q * acc + a;
        }
        Ok(acc)
    }

    /// Slice derivative: coefficients `b_n = (n+1) a_{n+1}`.
    pub fn slice_derivative(&self) -> RegularSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &a)| a * n as f64)
            .collect();
        RegularSeries {
            coeffs,
            radius: self.radius,
            truncated: self.truncated,
        }
    }

    /// Right scalar multiple `q -> f(q) a`.
    pub fn scale_right(&self, a: Quaternion) -> RegularSeries {
        RegularSeries {
            coeffs: self.coeffs.iter().map(|&c| c * a).collect(),
            radius: self.radius,
            truncated: self.truncated,
        }
    }

    pub fn add(&self, other: &RegularSeries) -> RegularSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Quaternion::ZERO; len];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(n).copied().unwrap_or(Quaternion::ZERO);
            let b = other.coeffs.get(n).copied().unwrap_or(Quaternion::ZERO);
            *c = a + b;
        }
        RegularSeries {
            coeffs,
            radius: self.radius.min(other.radius),
            truncated: self.truncated || other.truncated,
        }
    }
}

/// `*`-product: coefficient convolution `c_n = sum_{p+q=n} a_p b_q`,
/// truncated to [`DEFAULT_SERIES_CAP`] coefficients.
pub fn star(a: &RegularSeries, b: &RegularSeries) -> RegularSeries {
    star_with_cap(a, b, DEFAULT_SERIES_CAP)
}

/// `*`-product with an explicit truncation cap.
pub fn star_with_cap(a: &RegularSeries, b: &RegularSeries, cap: usize) -> RegularSeries {
    let radius = a.radius.min(b.radius);
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return RegularSeries::zero(radius);
    }
    let full = a.coeffs.len() + b.coeffs.len() - 1;
    let len = full.min(cap);
    let mut coeffs = vec![Quaternion::ZERO; len];
    for (p, &ap) in a.coeffs.iter().enumerate() {
        for (q, &bq) in b.coeffs.iter().enumerate() {
            if p + q >= len {
                break;
            }
            coeffs[p + q] = coeffs[p + q] + ap * bq;
        }
    }
    RegularSeries {
        coeffs,
        radius,
        truncated: full > len || a.truncated || b.truncated,
    }
}

/// Order-`N` slice polyanalytic function `sum_k conj(q)^k f_k(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySliceFunction {
    components: Vec<RegularSeries>,
}

impl PolySliceFunction {
    pub fn new(components: Vec<RegularSeries>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyFunction);
        }
        Ok(Self { components })
    }

    /// Order-1 wrapper around a slice regular series.
    pub fn regular(series: RegularSeries) -> Self {
        Self {
            components: vec![series],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.components.len()
    }

    #[inline]
    pub fn components(&self) -> &[RegularSeries] {
        &self.components
    }

    #[inline]
    pub fn component(&self, k: usize) -> &RegularSeries {
        &self.components[k]
    }

    pub fn min_radius(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.radius)
            .fold(f64::INFINITY, f64::min)
    }

    /// `sum_k conj(q)^k f_k(q)`, conjugate powers by repeated multiplication.
    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        let m = q.modulus();
        let radius = self.min_radius();
        if m >= radius {
            return Err(Error::OutsideRadius { modulus: m, radius });
        }
        let qbar = q.conj();
        let mut qbar_pow = Quaternion::ONE;
        let mut total = Quaternion::ZERO;
        for series in &self.components {
            total = total + qbar_pow * series.eval(q)?;
            qbar_pow = qbar_pow * qbar;
        }
        Ok(total)
    }

    /// True iff every coefficient of every component is real to 1e-14.
    pub fn is_intrinsic(&self) -> bool {
        self.components.iter().all(|series| {
            series.coeffs.iter().all(|a| {
                a.x1.abs() <= INTRINSIC_TOL
                    && a.x2.abs() <= INTRINSIC_TOL
                    && a.x3.abs() <= INTRINSIC_TOL
            })
        })
    }

    pub fn scale_right(&self, a: Quaternion) -> PolySliceFunction {
        PolySliceFunction {
            components: self.components.iter().map(|s| s.scale_right(a)).collect(),
        }
    }

    /// Componentwise sum; the shorter function is padded with zeros.
    pub fn add(&self, other: &PolySliceFunction) -> PolySliceFunction {
        let order = self.order().max(other.order());
        let radius = self.min_radius().min(other.min_radius());
        let zero = RegularSeries::zero(radius);
        let components = (0..order)
            .map(|k| {
                let a = self.components.get(k).unwrap_or(&zero);
                let b = other.components.get(k).unwrap_or(&zero);
                a.add(b)
            })
            .collect();
        PolySliceFunction { components }
    }
}

/// `*_N` product: componentwise `*`-product of equal-order functions.
pub fn star_n(f: &PolySliceFunction, g: &PolySliceFunction) -> Result<PolySliceFunction> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: f.order(),
            right: g.order(),
        });
    }
    let components = f
        .components
        .iter()
        .zip(&g.components)
        .map(|(a, b)| star(a, b))
        .collect();
    Ok(PolySliceFunction { components })
}

/// Values of the slice-function pair `(alpha, beta)` at a point `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceComponents {
    pub alpha: Quaternion,
    pub beta: Quaternion,
}

/// `alpha = (f(x+Ky) + f(x-Ky))/2`, `beta = K (f(x-Ky) - f(x+Ky))/2`.
///
/// Both are independent of the probing unit `K`; `alpha` is even and
/// `beta` odd in `y`.
pub fn slice_components(
    f: &PolySliceFunction,
    k: ImaginaryUnit,
    x: f64,
    y: f64,
) -> Result<SliceComponents> {
    let plus = f.eval(k.embed(x, y))?;
    let minus = f.eval(k.embed(x, -y))?;
    let alpha = (plus + minus) * 0.5;
    let beta = k.as_quaternion() * (minus - plus) * 0.5;
    Ok(SliceComponents { alpha, beta })
}

/// Representation formula: reconstructs `f(x + I y)` from the two values
/// `f(x + J y)` and `f(x - J y)` on the slice of `J`.
pub fn representation_combine(
    f_j_plus: Quaternion,
    f_j_minus: Quaternion,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
) -> Quaternion {
    let half_sum = (f_j_plus + f_j_minus) * 0.5;
    let half_diff = (f_j_minus - f_j_plus) * 0.5;
    half_sum + i.as_quaternion() * (j.as_quaternion() * half_diff)
}

fn require_orthogonal(i: ImaginaryUnit, j: ImaginaryUnit) -> Result<()> {
    let dot = i.imag_dot(&j);
    if dot.abs() > ORTHO_TOL {
        return Err(Error::NotOrthogonal { dot });
    }
    Ok(())
}

/// Coordinates of `a` in the orthonormal basis `{1, I, J, IJ}`.
fn basis_coords(a: Quaternion, i: ImaginaryUnit, j: ImaginaryUnit) -> [f64; 4] {
    let iq = i.as_quaternion();
    let jq = j.as_quaternion();
    let ij = iq * jq;
    [a.x0, a.dot(&iq), a.dot(&jq), a.dot(&ij)]
}

/// Splitting: complex polyanalytic `F`, `G` on the slice of `I` with
/// `f_I(z) = F(z) + G(z) J`.
///
/// Each quaternion coefficient `a = a0 + a1 I + a2 J + a3 IJ`
/// contributes `a0 + a1 i` to `F` and `a2 + a3 i` to `G` at the same
/// position.
pub fn split(
    f: &PolySliceFunction,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
) -> Result<(ComplexPolySeries, ComplexPolySeries)> {
    require_orthogonal(i, j)?;
    let mut f_parts = Vec::with_capacity(f.order());
    let mut g_parts = Vec::with_capacity(f.order());
    for series in &f.components {
        let mut fc = Vec::with_capacity(series.coeffs.len());
        let mut gc = Vec::with_capacity(series.coeffs.len());
        for &a in &series.coeffs {
            let [a0, a1, a2, a3] = basis_coords(a, i, j);
            fc.push(Complex64::new(a0, a1));
            gc.push(Complex64::new(a2, a3));
        }
        f_parts.push(fc);
        g_parts.push(gc);
    }
    Ok((
        ComplexPolySeries::new(f_parts)?,
        ComplexPolySeries::new(g_parts)?,
    ))
}

/// Refined splitting: four intrinsic (real-coefficient) polyanalytic
/// components with `f_I = psi_0 + psi_1 I + psi_2 J + psi_3 IJ`.
pub fn refined_split(
    f: &PolySliceFunction,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
) -> Result<[ComplexPolySeries; 4]> {
    require_orthogonal(i, j)?;
    let mut parts: [Vec<Vec<Complex64>>; 4] = Default::default();
    for series in &f.components {
        let mut per_axis: [Vec<Complex64>; 4] = Default::default();
        for &a in &series.coeffs {
            let coords = basis_coords(a, i, j);
            for (axis, &value) in per_axis.iter_mut().zip(coords.iter()) {
                axis.push(Complex64::new(value, 0.0));
            }
        }
        for (part, axis) in parts.iter_mut().zip(per_axis) {
            part.push(axis);
        }
    }
    let [p0, p1, p2, p3] = parts;
    Ok([
        ComplexPolySeries::new(p0)?,
        ComplexPolySeries::new(p1)?,
        ComplexPolySeries::new(p2)?,
        ComplexPolySeries::new(p3)?,
    ])
}

/// Slice polyanalytic extension of holomorphic data on one slice.
///
/// Each `h_k` is a power series in `z`; its coefficient `a + b i` maps
/// to the quaternion coefficient `a + b I`. The result is the unique
/// extension `sum_k conj(q)^k ext(h_k)(q)`.
pub fn extend(
    components: &[Vec<Complex64>],
    i: ImaginaryUnit,
    radius: f64,
) -> Result<PolySliceFunction> {
    if components.is_empty() {
        return Err(Error::EmptyFunction);
    }
    let iq = i.as_quaternion();
    let lifted = components
        .iter()
        .map(|coeffs| {
            RegularSeries::new(
                coeffs
                    .iter()
                    .map(|c| Quaternion::from_real(c.re) + iq * c.im)
                    .collect(),
                radius,
            )
        })
        .collect();
    PolySliceFunction::new(lifted)
}

/// Recommended finite-difference step for [`dbar_power_numeric`].
///
/// Orders 1 and 2 keep the small default; orders 3 and 4 need a larger
/// step because subtractive cancellation grows like `(2/h)^order` in
/// units of machine epsilon.
pub fn dbar_default_step(order: u32) -> f64 {
    match order {
        1 | 2 => 1e-3,
        3 => 7e-3,
        _ => 8e-3,
    }
}

/// Central finite-difference approximation of the slice operator
/// `(1/2^N) (d/dx + I d/dy)^N` applied to `f` restricted to the slice
/// of `I`, evaluated at `x + I y`.
///
/// Binomial expansion with `I^k` on the left of the mixed partials;
/// one level of Richardson extrapolation from steps `h` and `2h`.
/// Supports orders 1 through 4; panics outside that range or for a
/// non-positive step.
pub fn dbar_power_numeric<F>(
    f: F,
    i: ImaginaryUnit,
    x: f64,
    y: f64,
    order: u32,
    h: f64,
) -> Quaternion
where
    F: Fn(Quaternion) -> Quaternion,
{
    assert!((1..=4).contains(&order), "dbar order {order} not in 1..=4");
    assert!(h > 0.0, "dbar step must be positive");
    let g = |dx: f64, dy: f64| f(i.embed(x + dx, y + dy));
    let coarse = dbar_raw(&g, i, order, 2.0 * h);
    let fine = dbar_raw(&g, i, order, h);
    (fine * 4.0 - coarse) / 3.0
}

fn dbar_raw<G>(g: &G, i: ImaginaryUnit, order: u32, h: f64) -> Quaternion
where
    G: Fn(f64, f64) -> Quaternion,
{
    let iq = i.as_quaternion();
    let unit_powers = [Quaternion::ONE, iq, -Quaternion::ONE, -iq];
    let mut total = Quaternion::ZERO;
    for k in 0..=order {
        let stencil = mixed_central(g, order - k, k, h);
        total = total + unit_powers[(k % 4) as usize] * stencil * binomial(order, k);
    }
    total / 2f64.powi(order as i32)
}

/// Compact central stencil for `d^a/dx^a d^b/dy^b` with half-step offsets.
fn mixed_central<G>(g: &G, a: u32, b: u32, h: f64) -> Quaternion
where
    G: Fn(f64, f64) -> Quaternion,
{
    let mut sum = Quaternion::ZERO;
    for p in 0..=a {
        let cx = binomial(a, p) * if p % 2 == 0 { 1.0 } else { -1.0 };
        let dx = (a as f64 / 2.0 - p as f64) * h;
        for r in 0..=b {
            let cy = binomial(b, r) * if r % 2 == 0 { 1.0 } else { -1.0 };
            let dy = (b as f64 / 2.0 - r as f64) * h;
            sum = sum + g(dx, dy) * (cx * cy);
        }
    }
    sum / h.powi((a + b) as i32)
}

// ---------------------------------------------------------------------
// JSON shape: {"order": N, "components": [[[x0,x1,x2,x3], ...], ...],
//              "radius": number | "inf"}
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RadiusRepr {
    Finite(f64),
    Word(String),
}

impl RadiusRepr {
    fn from_value(radius: f64) -> Self {
        if radius.is_finite() {
            RadiusRepr::Finite(radius)
        } else {
            RadiusRepr::Word("inf".to_owned())
        }
    }

    fn into_value(self) -> std::result::Result<f64, String> {
        match self {
            RadiusRepr::Finite(r) if r > 0.0 => Ok(r),
            RadiusRepr::Finite(r) => Err(format!("radius must be positive, got {r}")),
            RadiusRepr::Word(w) if w == "inf" => Ok(f64::INFINITY),
            RadiusRepr::Word(w) => Err(format!("unknown radius keyword {w:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    order: usize,
    components: Vec<Vec<Quaternion>>,
    radius: RadiusRepr,
}

impl Serialize for PolySliceFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            order: self.order(),
            components: self.components.iter().map(|s| s.coeffs.clone()).collect(),
            radius: RadiusRepr::from_value(self.min_radius()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolySliceFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.order != raw.components.len() {
            return Err(D::Error::custom(format!(
                "order {} does not match {} components",
                raw.order,
                raw.components.len()
            )));
        }
        let radius = raw.radius.into_value().map_err(D::Error::custom)?;
        let components = raw
            .components
            .into_iter()
            .map(|coeffs| RegularSeries::new(coeffs, radius))
            .collect();
        PolySliceFunction::new(components).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    coeffs: Vec<Quaternion>,
    radius: RadiusRepr,
}

impl Serialize for RegularSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            coeffs: self.coeffs.clone(),
            radius: RadiusRepr::from_value(self.radius),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RegularSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        let radius = raw.radius.into_value().map_err(D::Error::custom)?;
        Ok(RegularSeries::new(raw.coeffs, radius))
    }
}
