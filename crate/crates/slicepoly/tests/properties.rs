//! Property tests for the algebraic invariants: quaternion algebra,
//! slice decomposition, the representation formula, splitting round
//! trips, and the serialization shape.

use num_complex::Complex64;
use proptest::prelude::*;

use slicepoly::quaternion::{ImaginaryUnit, Quaternion};
use slicepoly::slice_poly::{
    representation_combine, slice_components, split, star, PolySliceFunction, RegularSeries,
};

fn arb_quaternion(scale: f64) -> impl Strategy<Value = Quaternion> {
    (
        -scale..scale,
        -scale..scale,
        -scale..scale,
        -scale..scale,
    )
        .prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn arb_unit() -> impl Strategy<Value = ImaginaryUnit> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_filter_map(
        "direction too short",
        |(x, y, z)| {
            if x * x + y * y + z * z > 0.01 {
                Some(ImaginaryUnit::from_imag(x, y, z).unwrap())
            } else {
                None
            }
        },
    )
}

fn arb_poly() -> impl Strategy<Value = PolySliceFunction> {
    prop::collection::vec(
        prop::collection::vec(arb_quaternion(1.0), 1..=5),
        1..=3,
    )
    .prop_map(|components| {
        PolySliceFunction::new(
            components
                .into_iter()
                .map(RegularSeries::entire)
                .collect(),
        )
        .unwrap()
    })
}

fn embed_complex(c: Complex64, unit: ImaginaryUnit) -> Quaternion {
    Quaternion::from_real(c.re) + unit.as_quaternion() * c.im
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conj_reverses_products(p in arb_quaternion(10.0), q in arb_quaternion(10.0)) {
        let lhs = (p * q).conj();
        let rhs = q.conj() * p.conj();
        prop_assert!((lhs - rhs).modulus() <= 1e-13 * (1.0 + lhs.modulus()));
    }

    #[test]
    fn modulus_is_multiplicative(p in arb_quaternion(10.0), q in arb_quaternion(10.0)) {
        let lhs = (p * q).modulus();
        let rhs = p.modulus() * q.modulus();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
    }

    #[test]
    fn slice_decomposition_round_trips(q in arb_quaternion(10.0)) {
        prop_assume!(q.im_norm() > 0.0);
        let coords = q.slice_coords().unwrap();
        prop_assert!(coords.y > 0.0);
        prop_assert!((coords.embed() - q).modulus() <= 1e-14 * (1.0 + q.modulus()));
    }

    #[test]
    fn orthogonal_unit_is_orthogonal_and_anticommutes(i in arb_unit()) {
        let j = i.orthogonal();
        prop_assert!(i.imag_dot(&j).abs() <= 1e-12);
        let ij = i.as_quaternion() * j.as_quaternion();
        prop_assert!((ij * ij + Quaternion::ONE).modulus() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn representation_formula_reconstructs_every_slice(
        f in arb_poly(),
        i in arb_unit(),
        j in arb_unit(),
        x in -1.2..1.2f64,
        y in -1.2..1.2f64,
    ) {
        let direct = f.eval(i.embed(x, y)).unwrap();
        let plus = f.eval(j.embed(x, y)).unwrap();
        let minus = f.eval(j.embed(x, -y)).unwrap();
        let combined = representation_combine(plus, minus, i, j);
        prop_assert!(
            (direct - combined).modulus() <= 1e-12 * (1.0 + direct.modulus()),
            "direct {direct} vs combined {combined}"
        );
    }

    #[test]
    fn splitting_reconstructs_the_restriction(
        f in arb_poly(),
        i in arb_unit(),
        x in -1.2..1.2f64,
        y in -1.2..1.2f64,
    ) {
        let j = i.orthogonal();
        let (f_part, g_part) = split(&f, i, j).unwrap();
        let z = Complex64::new(x, y);
        let direct = f.eval(i.embed(x, y)).unwrap();
        let rebuilt = embed_complex(f_part.eval(z), i)
            + embed_complex(g_part.eval(z), i) * j.as_quaternion();
        prop_assert!(
            (direct - rebuilt).modulus() <= 1e-12 * (1.0 + direct.modulus()),
            "direct {direct} vs rebuilt {rebuilt}"
        );
    }

    #[test]
    fn slice_components_have_even_odd_parity_and_no_unit_dependence(
        f in arb_poly(),
        k1 in arb_unit(),
        k2 in arb_unit(),
        x in -1.2..1.2f64,
        y in 0.05..1.2f64,
    ) {
        let up = slice_components(&f, k1, x, y).unwrap();
        let down = slice_components(&f, k1, x, -y).unwrap();
        let scale = 1.0 + up.alpha.modulus() + up.beta.modulus();
        prop_assert!((up.alpha - down.alpha).modulus() <= 1e-12 * scale);
        prop_assert!((up.beta + down.beta).modulus() <= 1e-12 * scale);

        let other = slice_components(&f, k2, x, y).unwrap();
        prop_assert!((up.alpha - other.alpha).modulus() <= 1e-12 * scale);
        prop_assert!((up.beta - other.beta).modulus() <= 1e-12 * scale);
    }

    #[test]
    fn star_matches_pointwise_products_for_real_left_factors(
        real_coeffs in prop::collection::vec(-1.0..1.0f64, 1..=5),
        b_coeffs in prop::collection::vec(arb_quaternion(1.0), 1..=5),
        p in arb_quaternion(0.8),
    ) {
        let a = RegularSeries::from_real_coeffs(&real_coeffs, f64::INFINITY);
        let b = RegularSeries::entire(b_coeffs);
        let prod = star(&a, &b);
        let lhs = prod.eval(p).unwrap();
        let rhs = a.eval(p).unwrap() * b.eval(p).unwrap();
        prop_assert!((lhs - rhs).modulus() <= 1e-12 * (1.0 + rhs.modulus()));
    }

    #[test]
    fn json_round_trip_preserves_functions(f in arb_poly()) {
        let text = serde_json::to_string(&f).unwrap();
        let back: PolySliceFunction = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }
}
