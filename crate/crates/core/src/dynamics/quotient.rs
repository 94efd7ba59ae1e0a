use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rational::{self, int, ratio, Rational};

/// A point of `[1/3, 2]` with `1/3` and `2` identified. The stored value
/// records which representative was produced.
#[derive(Debug, Clone)]
pub struct QuotientPoint {
    value: Rational,
}

impl QuotientPoint {
    pub fn new(value: Rational) -> Result<Self> {
        if value < ratio(1, 3) || value > int(2) {
            return Err(Error::param(format!(
                "{} is outside [1/3, 2]",
                rational::format(&value)
            )));
        }
        Ok(QuotientPoint { value })
    }

    /// The identified class `{1/3, 2}`, represented by `2`.
    pub fn endpoint() -> Self {
        QuotientPoint { value: int(2) }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn into_value(self) -> Rational {
        self.value
    }

    pub fn is_endpoint(&self) -> bool {
        self.value == int(2) || self.value == ratio(1, 3)
    }

    fn class_key(&self) -> Rational {
        if self.is_endpoint() {
            int(2)
        } else {
            self.value.clone()
        }
    }
}

impl PartialEq for QuotientPoint {
    fn eq(&self, other: &Self) -> bool {
        self.class_key() == other.class_key()
    }
}

impl Eq for QuotientPoint {}

impl Hash for QuotientPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.class_key().hash(state)
    }
}

/// `2x` on `(1/3, 1)`, `x/3` on `(1, 2)`, `1 ↦ class{2}` (stored as 2),
/// `class{2} ↦ 2/3`.
pub fn f_quotient(x: &QuotientPoint) -> QuotientPoint {
    let v = &x.value;
    let value = if x.is_endpoint() {
        ratio(2, 3)
    } else if *v == int(1) {
        int(2)
    } else if *v < int(1) {
        v * int(2)
    } else {
        v / int(3)
    };
    QuotientPoint { value }
}

/// Inverse of [`f_quotient`]; the endpoint class comes back stored as `1/3`.
pub fn f_quotient_inverse(y: &QuotientPoint) -> QuotientPoint {
    let v = &y.value;
    let value = if y.is_endpoint() {
        int(1)
    } else if *v == ratio(2, 3) {
        ratio(1, 3)
    } else if *v > ratio(2, 3) {
        v / int(2)
    } else {
        v * int(3)
    };
    QuotientPoint { value }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: Rational) -> QuotientPoint {
        QuotientPoint::new(x).unwrap()
    }

    #[test]
    fn cases() {
        assert_eq!(f_quotient(&q(ratio(1, 2))).value(), &int(1));
        let top = f_quotient(&q(int(1)));
        assert!(top.is_endpoint());
        assert_eq!(top.value(), &int(2));
        assert_eq!(f_quotient(&top).value(), &ratio(2, 3));
        assert_eq!(f_quotient(&q(ratio(1, 3))).value(), &ratio(2, 3));
        assert_eq!(f_quotient(&q(ratio(3, 2))).value(), &ratio(1, 2));
    }

    #[test]
    fn endpoints_are_one_class() {
        assert_eq!(q(ratio(1, 3)), q(int(2)));
        assert_ne!(q(int(1)), q(int(2)));
        assert!(QuotientPoint::new(int(3)).is_err());
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(f_quotient_inverse(&q(ratio(2, 3))).value(), &ratio(1, 3));
        assert_eq!(f_quotient_inverse(&QuotientPoint::endpoint()).value(), &int(1));
        for x in [ratio(1, 2), ratio(4, 3), int(1), ratio(7, 5), ratio(1, 3), int(2)] {
            let p = q(x);
            assert_eq!(f_quotient_inverse(&f_quotient(&p)), p);
            assert_eq!(f_quotient(&f_quotient_inverse(&p)), p);
        }
    }
}
