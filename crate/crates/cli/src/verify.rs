//! Verification suites behind `slicepoly verify`.
//!
//! Each suite runs a fixed set of checks per sample, deterministic for
//! a given seed. A case records a nonnegative residual and passes when
//! the residual stays at or below its tolerance.

use std::time::Instant;

use clap::ValueEnum;
use rand::Rng;
use serde::Serialize;

use slicepoly::complex_poly::{bergman_kernel_c, fock_kernel_c};
use slicepoly::kernels::{bergman_kernel, bergman_kernel_alt, e_star, fock_kernel};
use slicepoly::quadrature::{
    disk_rule, gauss_plane_rule, growth_bound_check, norm_equivalence_check, reproduce_residual,
    Space,
};
use slicepoly::quaternion::{ImaginaryUnit, Quaternion};
use slicepoly::sampling;
use slicepoly::slice_poly::{
    dbar_default_step, dbar_power_numeric, extend, refined_split, representation_combine, split,
    star_n, PolySliceFunction, RegularSeries,
};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Structure,
    Fock,
    Bergman,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Fock => "fock",
            Suite::Bergman => "bergman",
            Suite::All => "all",
        }
    }
}

pub struct Config {
    pub seed: u64,
    pub samples: usize,
    pub plane_nodes: usize,
    pub disk_radial: usize,
    pub disk_angular: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_run: u64,
    pub cases_passed: u64,
    pub worst_residual: f64,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }
}

#[derive(Default)]
struct Recorder {
    run: u64,
    passed: u64,
    worst: f64,
}

impl Recorder {
    fn case(&mut self, residual: f64, tol: f64) {
        self.run += 1;
        if residual <= tol {
            self.passed += 1;
        }
        if residual > self.worst {
            self.worst = residual;
        }
    }

    fn boolean(&mut self, ok: bool) {
        self.case(if ok { 0.0 } else { 1.0 }, 0.5);
    }
}

pub fn run(suite: Suite, cfg: &Config) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::default();
    match suite {
        Suite::Structure => structure_suite(cfg, &mut rec),
        Suite::Fock => fock_suite(cfg, &mut rec),
        Suite::Bergman => bergman_suite(cfg, &mut rec),
        Suite::All => {
            structure_suite(cfg, &mut rec);
            fock_suite(cfg, &mut rec);
            bergman_suite(cfg, &mut rec);
        }
    }
    VerifyReport {
        suite: suite.name().to_owned(),
        cases_run: rec.run,
        cases_passed: rec.passed,
        worst_residual: rec.worst,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn embed_complex(c: Complex64, unit: ImaginaryUnit) -> Quaternion {
    Quaternion::from_real(c.re) + unit.as_quaternion() * c.im
}

fn slice_point<R: Rng>(rng: &mut R, scale: f64) -> (f64, f64) {
    let r = scale * rng.gen_range(0.0..1.0f64).sqrt();
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    (r * theta.cos(), r * theta.sin())
}

fn conjugate_monomial(k: usize, m: usize, radius: f64) -> PolySliceFunction {
    let mut components = vec![RegularSeries::zero(radius); k];
    components.push(RegularSeries::monomial(m, Quaternion::ONE, radius));
    PolySliceFunction::new(components).unwrap()
}

fn structure_suite(cfg: &Config, rec: &mut Recorder) {
    let mut rng = sampling::seeded_rng(cfg.seed.wrapping_add(0x5752));
    for s in 0..cfg.samples {
        let order = 1 + s % 3;
        let f = sampling::poly_function(&mut rng, order, 6, f64::INFINITY);
        let (i_orth, j_orth) = sampling::orthogonal_pair(&mut rng);
        let i_free = sampling::unit(&mut rng);
        let j_free = sampling::unit(&mut rng);
        let x = rng.gen_range(-1.0..1.0);
        let y = rng.gen_range(-1.0..1.0);

        // Representation formula.
        let direct = f.eval(i_free.embed(x, y)).unwrap();
        let combined = representation_combine(
            f.eval(j_free.embed(x, y)).unwrap(),
            f.eval(j_free.embed(x, -y)).unwrap(),
            i_free,
            j_free,
        );
        rec.case(
            (direct - combined).modulus(),
            1e-12 * (1.0 + direct.modulus()),
        );

        // Splitting round trip.
        let (f_part, g_part) = split(&f, i_orth, j_orth).unwrap();
        let z = Complex64::new(x, y);
        let on_slice = f.eval(i_orth.embed(x, y)).unwrap();
        let rebuilt = embed_complex(f_part.eval(z), i_orth)
            + embed_complex(g_part.eval(z), i_orth) * j_orth.as_quaternion();
        rec.case(
            (on_slice - rebuilt).modulus(),
            1e-12 * (1.0 + on_slice.modulus()),
        );

        // Refined splitting: reconstruction plus intrinsic components.
        let parts = refined_split(&f, i_orth, j_orth).unwrap();
        let basis = [
            Quaternion::ONE,
            i_orth.as_quaternion(),
            j_orth.as_quaternion(),
            i_orth.as_quaternion() * j_orth.as_quaternion(),
        ];
        let mut refined = Quaternion::ZERO;
        let mut intrinsic = true;
        for (part, b) in parts.iter().zip(basis) {
            refined = refined + embed_complex(part.eval(z), i_orth) * b;
            intrinsic &= extend(part.components(), i_orth, f64::INFINITY)
                .unwrap()
                .is_intrinsic();
        }
        let residual = if intrinsic {
            (on_slice - refined).modulus()
        } else {
            1.0
        };
        rec.case(residual, 1e-12 * (1.0 + on_slice.modulus()));

        // Extension undoes restriction at coefficient level.
        let rebuilt = extend(f_part.components(), i_orth, f64::INFINITY)
            .unwrap()
            .add(
                &extend(g_part.components(), i_orth, f64::INFINITY)
                    .unwrap()
                    .scale_right(j_orth.as_quaternion()),
            );
        let mut coeff_gap = 0.0f64;
        for k in 0..f.order() {
            for (a, b) in f
                .component(k)
                .coeffs()
                .iter()
                .zip(rebuilt.component(k).coeffs())
            {
                coeff_gap = coeff_gap.max((*a - *b).modulus());
            }
        }
        rec.case(coeff_gap, 1e-13);

        // Slice-mass annihilation at the function's own order.
        let res = dbar_power_numeric(
            |p| f.eval(p).unwrap(),
            i_free,
            x,
            y,
            order as u32,
            dbar_default_step(order as u32),
        );
        rec.case(res.modulus(), 1e-5 * (1.0 + direct.modulus()));

        // *_N associativity on fresh degree-4 data.
        let g = sampling::poly_function(&mut rng, order, 4, f64::INFINITY);
        let h = sampling::poly_function(&mut rng, order, 4, f64::INFINITY);
        let f4 = sampling::poly_function(&mut rng, order, 4, f64::INFINITY);
        let left = star_n(&star_n(&f4, &g).unwrap(), &h).unwrap();
        let right = star_n(&f4, &star_n(&g, &h).unwrap()).unwrap();
        let mut gap = 0.0f64;
        for k in 0..order {
            let (ca, cb) = (left.component(k).coeffs(), right.component(k).coeffs());
            for n in 0..ca.len().max(cb.len()) {
                let a = ca.get(n).copied().unwrap_or(Quaternion::ZERO);
                let b = cb.get(n).copied().unwrap_or(Quaternion::ZERO);
                gap = gap.max((a - b).modulus());
            }
        }
        rec.case(gap, 1e-12);
    }
}

fn fock_suite(cfg: &Config, rec: &mut Recorder) {
    let mut rng = sampling::seeded_rng(cfg.seed.wrapping_add(0x464b));
    if cfg.samples == 0 {
        return;
    }
    let rule = gauss_plane_rule(cfg.plane_nodes).expect("plane rule");
    for s in 0..cfg.samples {
        let n = 1 + (s % 3) as u32;
        let unit = sampling::unit(&mut rng);

        // Closed form of the order-2 kernel.
        let q = sampling::quaternion(&mut rng, 1.0);
        let r = sampling::quaternion(&mut rng, 1.0);
        let kernel = fock_kernel(2, q, r, 1e-14).unwrap().value;
        let closed = e_star(q, r, 1e-14).unwrap().value * (2.0 - (q - r).norm_sqr());
        rec.case(
            (kernel - closed).modulus() / (1.0 + kernel.modulus()),
            1e-10,
        );

        // Diagonal identity.
        let nd = 1 + (s % 5) as u32;
        let diag = fock_kernel(nd, q, q, 1e-14).unwrap().value;
        let expect = nd as f64 * q.norm_sqr().exp();
        rec.case((diag - Quaternion::from_real(expect)).modulus() / expect, 1e-11);

        // Slice-restriction oracle.
        let (x1, y1) = slice_point(&mut rng, 2.0);
        let (x2, y2) = slice_point(&mut rng, 2.0);
        let got = fock_kernel(n, unit.embed(x1, y1), unit.embed(x2, y2), 1e-14)
            .unwrap()
            .value;
        let oracle = fock_kernel_c(n, Complex64::new(x1, y1), Complex64::new(x2, y2)).unwrap();
        rec.case(
            (got - embed_complex(oracle, unit)).modulus() / (1.0 + got.modulus()),
            1e-10,
        );

        // Monomial reproduction.
        let k = rng.gen_range(0..n) as usize;
        let m = rng.gen_range(0..=4usize);
        let f = conjugate_monomial(k, m, f64::INFINITY);
        let (x, y) = slice_point(&mut rng, 1.5);
        let res = reproduce_residual(&f, unit.embed(x, y), Space::Fock, n, unit, &rule).unwrap();
        rec.case(res, 1e-6);

        // Growth bound.
        let order = 1 + s % 3;
        let g = sampling::poly_function(&mut rng, order, 6, f64::INFINITY);
        let (x, y) = slice_point(&mut rng, 1.5);
        let check = growth_bound_check(&g, unit.embed(x, y), Space::Fock, &rule).unwrap();
        rec.case((-check.margin / check.bound).max(0.0), 1e-8);

        // Norm equivalence.
        let j = sampling::unit(&mut rng);
        let out = norm_equivalence_check(&g, unit, j, &rule).unwrap();
        rec.boolean(out.within_bounds);
    }
}

fn bergman_suite(cfg: &Config, rec: &mut Recorder) {
    let mut rng = sampling::seeded_rng(cfg.seed.wrapping_add(0x4247));
    if cfg.samples == 0 {
        return;
    }
    let rule = disk_rule(cfg.disk_radial, cfg.disk_angular).expect("disk rule");
    for s in 0..cfg.samples {
        let n = 1 + (s % 3) as u32;
        let unit = sampling::unit(&mut rng);

        // Two published forms agree.
        let q = sampling::quaternion(&mut rng, 0.4);
        let r = sampling::quaternion(&mut rng, 0.4);
        let first = bergman_kernel(n, q, r).unwrap().value;
        let second = bergman_kernel_alt(n, q, r).unwrap().value;
        rec.case((first - second).modulus() / (1.0 + first.modulus()), 1e-10);

        // Slice-restriction oracle.
        let (x1, y1) = slice_point(&mut rng, 0.8);
        let (x2, y2) = slice_point(&mut rng, 0.8);
        let got = bergman_kernel(n, unit.embed(x1, y1), unit.embed(x2, y2))
            .unwrap()
            .value;
        let oracle = bergman_kernel_c(n, Complex64::new(x1, y1), Complex64::new(x2, y2)).unwrap();
        rec.case(
            (got - embed_complex(oracle, unit)).modulus() / (1.0 + got.modulus()),
            1e-10,
        );

        // Origin diagonal.
        let nd = 1 + (s % 5) as u32;
        let diag = bergman_kernel(nd, Quaternion::ZERO, Quaternion::ZERO)
            .unwrap()
            .value;
        let expect = (nd * nd) as f64 / std::f64::consts::PI;
        rec.case((diag - Quaternion::from_real(expect)).modulus(), 1e-12);

        // Monomial reproduction.
        let k = rng.gen_range(0..n) as usize;
        let m = rng.gen_range(0..=4usize);
        let f = conjugate_monomial(k, m, 1.0);
        let (x, y) = slice_point(&mut rng, 0.7);
        let res =
            reproduce_residual(&f, unit.embed(x, y), Space::Bergman, n, unit, &rule).unwrap();
        rec.case(res, 1e-5);

        // Growth bound.
        let order = 1 + s % 3;
        let g = sampling::poly_function(&mut rng, order, 6, 1.0);
        let (x, y) = slice_point(&mut rng, 0.9);
        let check = growth_bound_check(&g, unit.embed(x, y), Space::Bergman, &rule).unwrap();
        rec.case((-check.margin / check.bound).max(0.0), 1e-8);
    }
}
