//! Floating-point view of the quotient map as a circle rotation. Nothing in
//! here feeds back into exact tile construction.

use super::{f_quotient, QuotientPoint};
use crate::rational::{ratio, to_f64, Rational};

/// An angle in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CirclePoint(pub f64);

/// `log 2 / (log 2 + log 3)`.
pub fn rotation_angle() -> f64 {
    2f64.ln() / (2f64.ln() + 3f64.ln())
}

/// `φ(x) = (log x + log 3) / (log 2 + log 3) mod 1`; the endpoint class maps
/// to `0`.
pub fn phi_circle(x: &QuotientPoint) -> CirclePoint {
    if x.is_endpoint() {
        return CirclePoint(0.0);
    }
    let v = to_f64(x.value());
    let t = (v.ln() + 3f64.ln()) / (2f64.ln() + 3f64.ln());
    CirclePoint(t.rem_euclid(1.0))
}

pub fn circle_distance(a: CirclePoint, b: CirclePoint) -> f64 {
    let d = (a.0 - b.0).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Largest deviation of `φ(f(x))` from `φ(x) + θ` over `sample_count + 1`
/// evenly spaced exact points of `[1/3, 2]`.
pub fn rotation_residual(sample_count: usize) -> f64 {
    let theta = rotation_angle();
    let n = sample_count.max(1) as i64;
    let lo = ratio(1, 3);
    let width = ratio(5, 3);
    (0..=n)
        .map(|i| {
            let x: Rational = &lo + &width * ratio(i, n);
            let p = QuotientPoint::new(x).expect("inside [1/3, 2]");
            let expected = CirclePoint((phi_circle(&p).0 + theta).rem_euclid(1.0));
            circle_distance(phi_circle(&f_quotient(&p)), expected)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn angle_value() {
        assert!((rotation_angle() - 0.3868528072).abs() < 1e-10);
    }

    #[test]
    fn endpoint_maps_to_zero() {
        assert_eq!(phi_circle(&QuotientPoint::endpoint()).0, 0.0);
        let third = QuotientPoint::new(ratio(1, 3)).unwrap();
        assert_eq!(phi_circle(&third).0, 0.0);
        let one = QuotientPoint::new(int(1)).unwrap();
        assert!((phi_circle(&one).0 - 3f64.ln() / 6f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn residual_is_tiny() {
        assert!(rotation_residual(10_000) < 1e-9);
    }
}
