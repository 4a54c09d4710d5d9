//! Numerical inner products on slices.
//!
//! Two geometries: the Gaussian-weighted plane for the Fock space, with
//! the weight `e^{-x^2-y^2} / pi` folded into the rule so total mass is
//! 1, and the unit disk with plain Lebesgue measure (total mass `pi`)
//! for the Bergman space. Nodes come from Golub-Welsch on the Jacobi
//! matrices of the Hermite and Legendre polynomials; summation is
//! row-major over the tensor grid so results are reproducible.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::kernels::{bergman_kernel, fock_kernel, E_STAR_DEFAULT_TOL};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::slice_poly::PolySliceFunction;

/// Integration geometry of a rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleDomain {
    GaussianPlane,
    UnitDisk,
}

impl RuleDomain {
    fn name(self) -> &'static str {
        match self {
            RuleDomain::GaussianPlane => "gaussian_plane",
            RuleDomain::UnitDisk => "unit_disk",
        }
    }
}

/// Function space a reproducing-kernel check runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Fock,
    Bergman,
}

impl Space {
    fn domain(self) -> RuleDomain {
        match self {
            Space::Fock => RuleDomain::GaussianPlane,
            Space::Bergman => RuleDomain::UnitDisk,
        }
    }
}

/// Weighted node set on a slice-plane region.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    domain: RuleDomain,
    nodes: Vec<(f64, f64)>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    #[inline]
    pub fn domain(&self) -> RuleDomain {
        self.domain
    }

    #[inline]
    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    #[inline]
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn require(&self, expected: RuleDomain) -> Result<()> {
        if self.domain != expected {
            return Err(Error::DomainMismatch {
                expected: expected.name(),
                found: self.domain.name(),
            });
        }
        Ok(())
    }

    /// Integrate a scalar function of the slice coordinates.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&(x, y), &w)| f(x, y) * w)
            .sum()
    }
}

/// Gauss rule from the symmetric Jacobi matrix: nodes are eigenvalues,
/// weights are `mu0` times the squared first eigenvector components.
fn golub_welsch(off_diagonal: &[f64], mu0: f64) -> (Vec<f64>, Vec<f64>) {
    let n = off_diagonal.len() + 1;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for (k, &b) in off_diagonal.iter().enumerate() {
        jacobi[(k, k + 1)] = b;
        jacobi[(k + 1, k)] = b;
    }
    let eigen = SymmetricEigen::new(jacobi);
    let mut pairs: Vec<(f64, f64)> = eigen
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, mu0 * eigen.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    golub_welsch(&off, std::f64::consts::PI.sqrt())
}

fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let off: Vec<f64> = (1..n)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    golub_welsch(&off, 2.0)
}

/// Tensor Gauss-Hermite rule on the plane for the weight
/// `e^{-x^2-y^2} / pi`; exact for polynomials of total degree
/// `<= 2n - 1` against that weight, with total mass 1.
pub fn gauss_plane_rule(n: usize) -> Result<QuadratureRule> {
    if n < 2 {
        return Err(Error::InvalidSize { given: n, min: 2 });
    }
    let (x, w) = gauss_hermite(n);
    let mut nodes = Vec::with_capacity(n * n);
    let mut weights = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            nodes.push((x[i], x[j]));
            weights.push(w[i] * w[j] / std::f64::consts::PI);
        }
    }
    Ok(QuadratureRule {
        domain: RuleDomain::GaussianPlane,
        nodes,
        weights,
    })
}

/// Unit-disk rule: Gauss-Legendre in the radial variable after the
/// `u = r^2` substitution, uniform trapezoid in angle. Exact for
/// polynomials in `(x, y)` of degree `<= min(2 nr - 1, nt - 1)`; total
/// mass is the disk area `pi`.
pub fn disk_rule(nr: usize, nt: usize) -> Result<QuadratureRule> {
    if nr < 2 {
        return Err(Error::InvalidSize { given: nr, min: 2 });
    }
    if nt < 4 {
        return Err(Error::InvalidSize { given: nt, min: 4 });
    }
    let (u, wu) = gauss_legendre(nr);
    let angle_weight = 2.0 * std::f64::consts::PI / nt as f64;
    let mut nodes = Vec::with_capacity(nr * nt);
    let mut weights = Vec::with_capacity(nr * nt);
    for i in 0..nr {
        // Map [-1, 1] to [0, 1]; du absorbs the Jacobian 1/2 and the
        // substitution r dr = du / 2.
        let radius = (0.5 * (u[i] + 1.0)).sqrt();
        let radial_weight = wu[i] / 4.0;
        for j in 0..nt {
            let theta = angle_weight * j as f64;
            nodes.push((radius * theta.cos(), radius * theta.sin()));
            weights.push(radial_weight * angle_weight);
        }
    }
    Ok(QuadratureRule {
        domain: RuleDomain::UnitDisk,
        nodes,
        weights,
    })
}

/// Fock inner product `<f, g> = sum conj(g(x+Iy)) f(x+Iy) w` with the
/// normalized Gaussian weight folded into the rule.
pub fn fock_inner<F, G>(f: F, g: G, unit: ImaginaryUnit, rule: &QuadratureRule) -> Result<Quaternion>
where
    F: Fn(Quaternion) -> Quaternion,
    G: Fn(Quaternion) -> Quaternion,
{
    rule.require(RuleDomain::GaussianPlane)?;
    Ok(inner_sum(&f, &g, unit, rule))
}

/// Bergman inner product over the unit disk slice with unnormalized
/// Lebesgue measure.
pub fn bergman_inner<F, G>(
    f: F,
    g: G,
    unit: ImaginaryUnit,
    rule: &QuadratureRule,
) -> Result<Quaternion>
where
    F: Fn(Quaternion) -> Quaternion,
    G: Fn(Quaternion) -> Quaternion,
{
    rule.require(RuleDomain::UnitDisk)?;
    Ok(inner_sum(&f, &g, unit, rule))
}

fn inner_sum<F, G>(f: &F, g: &G, unit: ImaginaryUnit, rule: &QuadratureRule) -> Quaternion
where
    F: Fn(Quaternion) -> Quaternion,
    G: Fn(Quaternion) -> Quaternion,
{
    let mut sum = Quaternion::ZERO;
    for (&(x, y), &w) in rule.nodes.iter().zip(&rule.weights) {
        let p = unit.embed(x, y);
        sum = sum + g(p).conj() * f(p) * w;
    }
    sum
}

fn check_on_slice(q: Quaternion, unit: ImaginaryUnit) -> Result<()> {
    let im = q.im();
    let proj = unit.as_quaternion() * im.dot(&unit.as_quaternion());
    if (im - proj).modulus() > 1e-10 * (1.0 + q.modulus()) {
        return Err(Error::OffSlicePoint);
    }
    Ok(())
}

/// Reproducing-property residual `|f(q) - <f, K(., q)>|` on the slice
/// containing `q`.
///
/// The integral runs over the given slice, so `q` must lie on it;
/// off-slice points are reached through the representation formula and
/// tested separately.
pub fn reproduce_residual(
    f: &PolySliceFunction,
    q: Quaternion,
    space: Space,
    n: u32,
    unit: ImaginaryUnit,
    rule: &QuadratureRule,
) -> Result<f64> {
    rule.require(space.domain())?;
    check_on_slice(q, unit)?;
    let mut inner = Quaternion::ZERO;
    for (&(x, y), &w) in rule.nodes.iter().zip(&rule.weights) {
        let p = unit.embed(x, y);
        let kernel = match space {
            Space::Fock => fock_kernel(n, p, q, E_STAR_DEFAULT_TOL)?.value,
            Space::Bergman => bergman_kernel(n, p, q)?.value,
        };
        inner = inner + kernel.conj() * f.eval(p)? * w;
    }
    Ok((f.eval(q)? - inner).modulus())
}

/// Slice norm `sqrt(<f, f>_I)` for the rule's geometry.
pub fn slice_norm(
    f: &PolySliceFunction,
    unit: ImaginaryUnit,
    rule: &QuadratureRule,
) -> Result<f64> {
    let mut sum = Quaternion::ZERO;
    for (&(x, y), &w) in rule.nodes.iter().zip(&rule.weights) {
        let value = f.eval(unit.embed(x, y))?;
        sum = sum + value.conj() * value * w;
    }
    Ok(sum.re().max(0.0).sqrt())
}

/// Outcome of a slice-independence norm check.
#[derive(Clone, Copy, Debug)]
pub struct NormEquivalence {
    pub ratio: f64,
    pub within_bounds: bool,
}

/// Tolerance slack on the `[1/2, 2]` norm-equivalence bounds.
const NORM_BOUND_EPS: f64 = 1e-8;

/// Ratio `||f||_J / ||f||_I` of Fock norms on two slices; the two are
/// always within a factor of two of each other.
pub fn norm_equivalence_check(
    f: &PolySliceFunction,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
    rule: &QuadratureRule,
) -> Result<NormEquivalence> {
    rule.require(RuleDomain::GaussianPlane)?;
    let norm_i = slice_norm(f, i, rule)?;
    let norm_j = slice_norm(f, j, rule)?;
    let ratio = norm_j / norm_i;
    let within_bounds = (0.5 - NORM_BOUND_EPS..=2.0 + NORM_BOUND_EPS).contains(&ratio);
    Ok(NormEquivalence {
        ratio,
        within_bounds,
    })
}

/// Pointwise growth-estimate check.
#[derive(Clone, Copy, Debug)]
pub struct GrowthCheck {
    /// `bound - |f(q)|`; nonnegative up to roundoff when `f` lies in
    /// the space.
    pub margin: f64,
    pub bound: f64,
}

/// Evaluates the growth estimate for `f` at `q`.
///
/// Fock: `|f(q)| <= sqrt(N) e^{|q|^2 / 2} ||f||`. Bergman:
/// `|f(q)| <= (N / sqrt(pi)) ||f|| / (1 - |q|^2)`. The norm is taken on
/// the slice containing `q` (unit `i` at real points).
pub fn growth_bound_check(
    f: &PolySliceFunction,
    q: Quaternion,
    space: Space,
    rule: &QuadratureRule,
) -> Result<GrowthCheck> {
    rule.require(space.domain())?;
    let unit = q
        .slice_coords()
        .map(|c| c.unit)
        .unwrap_or(ImaginaryUnit::I);
    let n = f.order() as f64;
    let bound = match space {
        Space::Fock => {
            let norm = slice_norm(f, unit, rule)?;
            n.sqrt() * (q.norm_sqr() / 2.0).exp() * norm
        }
        Space::Bergman => {
            let m = q.modulus();
            if m >= 1.0 {
                return Err(Error::OutsideBall { modulus: m });
            }
            let norm = slice_norm(f, unit, rule)?;
            n / std::f64::consts::PI.sqrt() * norm / (1.0 - m * m)
        }
    };
    let margin = bound - f.eval(q)?.modulus();
    Ok(GrowthCheck { margin, bound })
}
