//! Seeded random generation of quaternions, units, and test functions.
//!
//! Used by the verification suites; everything is deterministic given
//! the seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::slice_poly::{PolySliceFunction, RegularSeries};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Quaternion with components uniform in `[-scale, scale]`.
pub fn quaternion<R: Rng>(rng: &mut R, scale: f64) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-scale..=scale),
        rng.gen_range(-scale..=scale),
        rng.gen_range(-scale..=scale),
        rng.gen_range(-scale..=scale),
    )
}

/// Uniform random imaginary unit, by rejection from the cube.
pub fn unit<R: Rng>(rng: &mut R) -> ImaginaryUnit {
    loop {
        let x: f64 = rng.gen_range(-1.0..=1.0);
        let y: f64 = rng.gen_range(-1.0..=1.0);
        let z: f64 = rng.gen_range(-1.0..=1.0);
        let n = (x * x + y * y + z * z).sqrt();
        if n > 0.1 && n <= 1.0 {
            return ImaginaryUnit::from_imag(x, y, z).expect("nonzero direction");
        }
    }
}

/// Random orthogonal unit pair `(I, J)`: `J` is drawn uniformly from
/// the circle of units perpendicular to `I`.
pub fn orthogonal_pair<R: Rng>(rng: &mut R) -> (ImaginaryUnit, ImaginaryUnit) {
    let i = unit(rng);
    let j0 = i.orthogonal();
    let ij0 = i.as_quaternion() * j0.as_quaternion();
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let j = ImaginaryUnit::new(j0.as_quaternion() * phi.cos() + ij0 * phi.sin())
        .expect("rotation preserves the unit circle");
    (i, j)
}

/// Series with quaternion coefficients uniform in `[-1, 1]^4` up to the
/// given degree.
pub fn regular_series<R: Rng>(rng: &mut R, max_degree: usize, radius: f64) -> RegularSeries {
    let coeffs = (0..=max_degree).map(|_| quaternion(rng, 1.0)).collect();
    RegularSeries::new(coeffs, radius)
}

/// Random order-`order` polyanalytic function with component degrees up
/// to `max_degree`.
pub fn poly_function<R: Rng>(
    rng: &mut R,
    order: usize,
    max_degree: usize,
    radius: f64,
) -> PolySliceFunction {
    let components = (0..order)
        .map(|_| regular_series(rng, max_degree, radius))
        .collect();
    PolySliceFunction::new(components).expect("order >= 1")
}

/// Random intrinsic (real-coefficient) function.
pub fn intrinsic_function<R: Rng>(
    rng: &mut R,
    order: usize,
    max_degree: usize,
    radius: f64,
) -> PolySliceFunction {
    let components = (0..order)
        .map(|_| {
            let coeffs = (0..=max_degree)
                .map(|_| Quaternion::from_real(rng.gen_range(-1.0..=1.0)))
                .collect();
            RegularSeries::new(coeffs, radius)
        })
        .collect();
    PolySliceFunction::new(components).expect("order >= 1")
}
