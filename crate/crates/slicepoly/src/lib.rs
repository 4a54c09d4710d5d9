//! Numerics for quaternionic slice polyanalytic functions.
//!
//! Functions of the form `f(q) = sum_{k<N} conj(q)^k f_k(q)` with slice
//! regular components generalize holomorphy on the quaternions to
//! higher order. This crate provides:
//!
//! - [`quaternion`]: quaternion algebra, slice decomposition
//!   `q = x + I y`, deterministic orthogonal-unit selection;
//! - [`complex_poly`]: the complex polyanalytic oracle (series
//!   evaluation and the classical Fock/Bergman kernels), used to check
//!   every quaternionic kernel on slices;
//! - [`slice_poly`]: series representations with evaluation, slice
//!   derivative, slice-mass operator residuals, splitting, the
//!   representation formula, extension, refined splitting, and the `*`
//!   and `*_N` products;
//! - [`kernels`]: `e_*`, generalized Laguerre polynomials, the slice
//!   polyanalytic Fock kernel, and the slice Bergman kernel in both
//!   published forms;
//! - [`quadrature`]: Gaussian-plane and unit-disk rules plus the
//!   reproducing-property, norm-equivalence, and growth-bound checks;
//! - [`sampling`]: seeded random data for the verification suites.

pub mod complex_poly;
pub mod error;
pub mod kernels;
mod numeric;
pub mod quadrature;
pub mod quaternion;
pub mod sampling;
pub mod slice_poly;

pub use complex_poly::ComplexPolySeries;
pub use error::{Error, Result};
pub use kernels::KernelValue;
pub use quadrature::{QuadratureRule, RuleDomain, Space};
pub use quaternion::{ImaginaryUnit, Quaternion, SliceCoords};
pub use slice_poly::{PolySliceFunction, RegularSeries, SliceComponents};
