use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use jya::classical::{bhaskara_sin, DegreeAngle};
use jya::large_arc::{arc_difference, build_madhava_table, kojya_from_jya};
use jya::lookup_table::{build_lookup_table, Mode};
use jya::sexagesimal::{cbrt_floor, sqrt_floor, Components};
use jya::small_arc::{iterate_coeff_series, variyar_arcsin, DEFAULT_MAX_ITER};
use jya::{ArcThirds, RadiusConstant, RationalArc, Rounding};

const R: RadiusConstant = RadiusConstant::TRIJYA;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

proptest! {
    #[test]
    fn text_round_trip(v in -1_000_000_000_000i64..1_000_000_000_000) {
        let a = ArcThirds::new(v);
        prop_assert_eq!(a.to_string().parse::<ArcThirds>().unwrap(), a);
    }

    #[test]
    fn components_round_trip(v in -1_000_000_000_000i64..1_000_000_000_000) {
        let a = ArcThirds::new(v);
        let Components { sign, minutes, seconds, thirds } = a.components();
        prop_assert!(seconds < 60 && thirds < 60);
        prop_assert_eq!(ArcThirds::from_components(sign, minutes, seconds, thirds).unwrap(), a);
    }

    #[test]
    fn rounding_brackets(n in -10_000_000i64..10_000_000, d in 1i64..10_000) {
        let x = RationalArc::new(q(n, d * 3600));
        let (lo, hi) = (x.round(Rounding::Floor), x.round(Rounding::Ceil));
        let near = x.round(Rounding::Nearest);
        prop_assert!(lo.to_rational() <= x && x <= hi.to_rational());
        prop_assert!(near == lo || near == hi);
        prop_assert!((hi - lo).value() <= 1);
    }

    #[test]
    fn root_certificates(n in 0i64..1_000_000_000_000, d in 1i64..1000, grid in 1i64..100) {
        let x = q(n, d);
        let g = BigInt::from(grid);
        let step = q(1, grid);
        let s = sqrt_floor(&x, &g).unwrap();
        prop_assert!(&s * &s <= x);
        let s1 = &s + &step;
        prop_assert!(&s1 * &s1 > x);
        let c = cbrt_floor(&x, &g).unwrap();
        prop_assert!(&c * &c * &c <= x);
        let c1 = &c + &step;
        prop_assert!(&c1 * &c1 * &c1 > x);
    }

    #[test]
    fn rational_sine_symmetry(n in 0i64..=180_000) {
        let x = q(n, 1000);
        let a = bhaskara_sin(&DegreeAngle::new(x.clone())).unwrap();
        let b = bhaskara_sin(&DegreeAngle::new(q(180, 1) - x)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(!a.is_negative() && a <= q(1, 1));
    }

    #[test]
    fn kojya_pythagoras(m in 0i64..=12_375_888) {
        let k = kojya_from_jya(ArcThirds::new(m), R).unwrap().value() as i128;
        let r = R.thirds().value() as i128;
        let m = m as i128;
        // |k − √(r² − m²)| ≤ ½ gives |k² + m² − r²| ≤ k + ¼
        prop_assert!((k * k + m * m - r * r).abs() <= r);
    }

    #[test]
    fn arc_difference_antisymmetric(j1 in 0i64..12_000_000, j2 in 0i64..12_000_000) {
        let (a, b) = (ArcThirds::new(j1), ArcThirds::new(j2));
        let ka = kojya_from_jya(a, R).unwrap();
        let kb = kojya_from_jya(b, R).unwrap();
        let fwd = arc_difference(a, ka, b, kb, R).unwrap();
        let back = arc_difference(b, kb, a, ka, R).unwrap();
        prop_assert_eq!(fwd, -back);
    }

    #[test]
    fn iteration_is_monotone(m in 0i64..5_000_000) {
        let (s, trace) = variyar_arcsin(ArcThirds::new(m), R, DEFAULT_MAX_ITER).unwrap();
        prop_assert!(s.value() >= m);
        let arcs: Vec<i64> = trace.steps.iter().map(|st| st.s.value()).collect();
        prop_assert!(arcs.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn truncation_keeps_low_grades(n in 0usize..6, extra in 0usize..4) {
        let short = iterate_coeff_series(n, n).unwrap();
        let long = iterate_coeff_series(n, n + extra).unwrap();
        prop_assert_eq!(short.coeffs(), &long.coeffs()[..=n]);
    }

    #[test]
    fn lookup_tables_monotone(r in 1_000_000i64..20_000_000, literal in any::<bool>()) {
        let mode = if literal { Mode::Literal } else { Mode::Commentary };
        let t = build_lookup_table(&RationalArc::from_thirds(ArcThirds::new(r)), mode);
        for pair in t.entries.windows(2) {
            prop_assert!(pair[0].jya < pair[1].jya && pair[0].arc < pair[1].arc);
        }
        for e in &t.entries {
            prop_assert_eq!((e.arc - e.jya).value(), 60 * i64::from(e.k));
        }
    }
}

#[test]
fn sine_table_symmetry() {
    let t = build_madhava_table(R);
    for j in 0..=24 {
        assert_eq!(t.kojya(j), t.jya(24 - j));
    }
}
