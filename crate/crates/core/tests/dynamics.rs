use std::collections::BTreeSet;

use bs_tiling::ak::orbit_for_s0;
use bs_tiling::dynamics::{
    circle_distance, f_quotient, f_quotient_inverse, image, is_immortal_up_to, iterate, periodic_point_search,
    phi_circle, rotation_angle, CirclePoint, MultSystem, QuotientPoint,
};
use bs_tiling::rational::{int, ratio, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn point(x: Rational) -> QuotientPoint {
    QuotientPoint::new(x).unwrap()
}

#[test]
fn quotient_orbit_of_one_half() {
    let mut x = point(ratio(1, 2));
    let mut seen = Vec::new();
    for _ in 0..6 {
        seen.push(x.value().clone());
        x = f_quotient(&x);
    }
    assert_eq!(seen, vec![ratio(1, 2), int(1), int(2), ratio(2, 3), ratio(4, 3), ratio(4, 9)]);
    let y = f_quotient(&point(ratio(2, 3)));
    assert_eq!(y.value(), &ratio(4, 3));
    assert_eq!(f_quotient(&y).value(), &ratio(4, 9));
}

#[test]
fn no_periodic_points_of_small_height() {
    assert!(periodic_point_search(&MultSystem::s0(), 200, 12).unwrap().is_empty());
}

#[test]
fn s0_orbit_branch_is_immortal() {
    let s = MultSystem::s0();
    for x0 in [ratio(1, 2), ratio(1, 3), int(2), ratio(9, 7)] {
        assert!(is_immortal_up_to(&s, &x0, 30).unwrap());
        let b = orbit_for_s0(&x0, 20).unwrap();
        for k in -20..20 {
            let (x, i) = (b.value(k).unwrap(), b.piece(k).unwrap());
            assert_eq!(b.value(k + 1).unwrap(), &(x * s.pieces()[i].slope()));
        }
    }
}

fn in_circle() -> impl Strategy<Value = Rational> {
    (1i64..500, any::<u32>()).prop_map(|(d, r)| {
        // numerators giving d/3 ..= 2d, scaled by 3 to stay exact
        let lo = d;
        let span = 5 * d;
        Rational::new(BigInt::from(lo + (r as i64 % (span + 1))), BigInt::from(3 * d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn quotient_map_is_a_bijection(x in in_circle()) {
        let p = point(x);
        prop_assert_eq!(f_quotient_inverse(&f_quotient(&p)), p.clone());
        prop_assert_eq!(f_quotient(&f_quotient_inverse(&p)), p);
    }

    #[test]
    fn quotient_map_is_a_rotation(x in in_circle()) {
        let p = point(x);
        let expected = CirclePoint((phi_circle(&p).0 + rotation_angle()).rem_euclid(1.0));
        prop_assert!(circle_distance(phi_circle(&f_quotient(&p)), expected) < 1e-9);
    }

    #[test]
    fn quotient_map_is_one_of_the_images(x in in_circle()) {
        let p = point(x.clone());
        let img = image(&MultSystem::s0(), &x);
        if !p.is_endpoint() {
            prop_assert!(img.contains(f_quotient(&p).value()));
        }
    }

    #[test]
    fn forward_then_backward_returns(x in in_circle(), k in 1i64..6) {
        let s = MultSystem::s0();
        let forward = iterate(&s, &x, k).unwrap();
        let mut back = BTreeSet::new();
        for y in &forward {
            back.extend(iterate(&s, y, -k).unwrap());
        }
        prop_assert!(forward.is_empty() || back.contains(&x));
    }
}
