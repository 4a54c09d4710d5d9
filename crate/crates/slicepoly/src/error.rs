//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The quaternion has zero imaginary part, so no slice unit can be
    /// read off it. Operations that accept real points take the unit
    /// explicitly instead.
    #[error("quaternion is real: slice decomposition needs a nonzero imaginary part")]
    RealQuaternion,

    /// A candidate imaginary unit failed validation.
    #[error("invalid imaginary unit: {reason}")]
    InvalidImaginaryUnit { reason: &'static str },

    /// Kernel or series order outside the supported range.
    #[error("order {order} outside supported range 1..={max}")]
    InvalidOrder { order: u32, max: u32 },

    /// A polyanalytic function needs at least one component.
    #[error("polyanalytic function needs at least one component")]
    EmptyFunction,

    /// Evaluation point outside the nominal radius of a series.
    #[error("|q| = {modulus} outside series radius {radius}")]
    OutsideRadius { modulus: f64, radius: f64 },

    /// Bergman-type evaluation at a point outside the open unit disk.
    #[error("|z| = {modulus} not inside the open unit disk")]
    OutsideDisk { modulus: f64 },

    /// Bergman-type evaluation at a point outside the open unit ball.
    #[error("|q| = {modulus} not inside the open unit ball")]
    OutsideBall { modulus: f64 },

    /// Splitting requires perpendicular imaginary units.
    #[error("imaginary units not orthogonal: dot = {dot}")]
    NotOrthogonal { dot: f64 },

    /// The `*_N` product is only defined for equal orders.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// A kernel series hit its term cap before reaching the tolerance.
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },

    /// Quadrature rule size below the supported minimum.
    #[error("quadrature size {given} below minimum {min}")]
    InvalidSize { given: usize, min: usize },

    /// The quadrature rule's domain does not match the requested space.
    #[error("quadrature domain mismatch: expected {expected}, found {found}")]
    DomainMismatch {
        expected: &'static str,
        found: &'static str,
    },

    /// Reproduction was requested at a point off the integration slice.
    #[error("point does not lie on the integration slice")]
    OffSlicePoint,
}
