use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::group::{lambda, lambda_form, CanonicalForm, GroupParams, GroupWord};
use crate::rational::{floor, int, Rational};
use crate::wang::{Label, WangTile};

/// `B_j(x, z) = ⌊(z+j)x⌋ − ⌊(z+j−1)x⌋`.
pub fn balanced(x: &Rational, z: &Rational, j: i64) -> BigInt {
    floor(&((z + int(j)) * x)) - floor(&((z + int(j - 1)) * x))
}

/// The tile of the multiplying tileset for `q` at `g` and `x`:
/// tops `B_j(x, mλ(g))`, bottoms `B_j(qx, nλ(g))`, and side labels
/// `l = q⌊mλx⌋/m − ⌊nλqx⌋/n`, `r` the same with `mλ+m`, `nλ+n`.
pub fn ak_tile(p: GroupParams, q: &Rational, g: &GroupWord, x: &Rational) -> WangTile {
    ak_tile_at_lambda(p, q, &lambda(g, p), x)
}

pub fn ak_tile_form(q: &Rational, g: &CanonicalForm, x: &Rational) -> WangTile {
    ak_tile_at_lambda(g.params(), q, &lambda_form(g), x)
}

pub(crate) fn ak_tile_at_lambda(p: GroupParams, q: &Rational, lambda: &Rational, x: &Rational) -> WangTile {
    let (m, n) = (p.m(), p.n());
    let zt = lambda * int(m);
    let zb = lambda * int(n);
    let qx = q * x;
    let top_floor: Vec<BigInt> = (0..=m).map(|j| floor(&((&zt + int(j)) * x))).collect();
    let bottom_floor: Vec<BigInt> = (0..=n).map(|j| floor(&((&zb + int(j)) * &qx))).collect();
    let side = |t: &BigInt, b: &BigInt| -> Rational {
        q * Rational::from_integer(t.clone()) / int(m) - Rational::from_integer(b.clone()) / int(n)
    };
    WangTile {
        top: top_floor
            .windows(2)
            .map(|w| Label::Rational(Rational::from_integer(&w[1] - &w[0])))
            .collect(),
        left: Label::Rational(side(&top_floor[0], &bottom_floor[0])),
        right: Label::Rational(side(&top_floor[m as usize], &bottom_floor[n as usize])),
        bottom: bottom_floor
            .windows(2)
            .map(|w| Label::Rational(Rational::from_integer(&w[1] - &w[0])))
            .collect(),
    }
}

/// Range `(k1, k2)` and common denominator `m n q2` such that every left or
/// right label of the multiplying tileset for `q = q1/q2` is `k/(m n q2)` with
/// `k1 <= k <= k2`. Requires positive `m`, `n`.
pub fn left_label_bounds(p: GroupParams, q: &Rational) -> Result<(BigInt, BigInt, BigInt)> {
    p.require_positive()?;
    let (m, n) = (BigInt::from(p.m()), BigInt::from(p.n()));
    let (q1, q2) = (q.numer().clone(), q.denom().clone());
    let shift = -(&n * &q1);
    let (k1, k2) = if q1.is_negative() {
        (BigInt::zero(), &m * &q2 + shift)
    } else {
        (shift, &m * &q2)
    };
    Ok((k1, k2, m * n * q2))
}

/// Integer-only tile evaluation for the enumeration loop. A key is
/// `(tops, bottoms, numerator of left, numerator of right)` over the fixed
/// denominator `m n q2`.
pub(crate) struct TileKernel {
    m: i64,
    n: i64,
    q1: i128,
    q2: i128,
}

pub(crate) type TileKey = Vec<i128>;

/// `⌊(zn/zd + j)(xn/xd)⌋` when everything fits.
fn floor_small(z: (i128, i128), j: i128, x: (i128, i128)) -> Option<i128> {
    let num = z.0.checked_add(j.checked_mul(z.1)?)?.checked_mul(x.0)?;
    let den = z.1.checked_mul(x.1)?;
    Some(num.div_euclid(den))
}

fn small(x: &Rational) -> Option<(i128, i128)> {
    Some((x.numer().to_i128()?, x.denom().to_i128()?))
}

impl TileKernel {
    pub(crate) fn new(p: GroupParams, q: &Rational) -> Option<Self> {
        Some(TileKernel {
            m: p.m(),
            n: p.n(),
            q1: q.numer().to_i128()?,
            q2: q.denom().to_i128()?,
        })
    }

    fn floors(&self, z: &Rational, zs: Option<(i128, i128)>, x: &Rational, xs: Option<(i128, i128)>, count: i64) -> Option<Vec<i128>> {
        (0..=count)
            .map(|j| match (zs, xs) {
                (Some(z), Some(x)) => floor_small(z, j as i128, x),
                _ => floor(&((z + int(j)) * x)).to_i128(),
            })
            .collect()
    }

    /// `lambda` is `λ(g)`; `x` the represented value.
    pub(crate) fn key(&self, lambda: &Rational, x: &Rational) -> Option<TileKey> {
        let zt = lambda * int(self.m);
        let zb = lambda * int(self.n);
        let qx = x * Rational::new(self.q1.into(), self.q2.into());
        let tf = self.floors(&zt, small(&zt), x, small(x), self.m)?;
        let bf = self.floors(&zb, small(&zb), &qx, small(&qx), self.n)?;
        let (m, n) = (self.m as i128, self.n as i128);
        // q t/m - b/n = (n q1 t - m q2 b) / (m n q2)
        let side = |t: i128, b: i128| -> Option<i128> {
            n.checked_mul(self.q1)?
                .checked_mul(t)?
                .checked_sub(m.checked_mul(self.q2)?.checked_mul(b)?)
        };
        let mut key: TileKey = Vec::with_capacity((self.m + self.n + 2) as usize);
        key.extend(tf.windows(2).map(|w| w[1] - w[0]));
        key.extend(bf.windows(2).map(|w| w[1] - w[0]));
        key.push(side(tf[0], bf[0])?);
        key.push(side(tf[self.m as usize], bf[self.n as usize])?);
        Some(key)
    }

    pub(crate) fn tile(&self, key: &TileKey) -> WangTile {
        let (m, n) = (self.m as usize, self.n as usize);
        let den = BigInt::from(self.m as i128 * self.n as i128 * self.q2);
        let int_label = |v: i128| Label::Rational(Rational::from_integer(v.into()));
        let side = |v: i128| Label::Rational(Rational::new(v.into(), den.clone()));
        WangTile {
            top: key[..m].iter().map(|&v| int_label(v)).collect(),
            bottom: key[m..m + n].iter().map(|&v| int_label(v)).collect(),
            left: side(key[m + n]),
            right: side(key[m + n + 1]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_word, GroupParams};
    use crate::rational::ratio;
    use crate::wang::multiplies_residual;

    fn p23() -> GroupParams {
        GroupParams::new(2, 3).unwrap()
    }

    #[test]
    fn balanced_digits() {
        assert_eq!(balanced(&ratio(1, 2), &int(0), 1), BigInt::from(0));
        assert_eq!(balanced(&ratio(1, 2), &int(0), 2), BigInt::from(1));
        assert_eq!(balanced(&int(3), &ratio(2, 7), 5), BigInt::from(3));
    }

    #[test]
    fn zero_tile() {
        let t = ak_tile(p23(), &int(2), &GroupWord::identity(), &int(0));
        assert!(t.top.iter().chain(&t.bottom).all(|l| *l == Label::int(0)));
        assert_eq!(t.left, Label::int(0));
        assert_eq!(t.right, Label::int(0));
    }

    #[test]
    fn identity_tile_at_half() {
        let t = ak_tile(p23(), &int(2), &GroupWord::identity(), &ratio(1, 2));
        assert_eq!(t.top, vec![Label::int(0), Label::int(1)]);
        assert!(multiplies_residual(&t, &int(2)).unwrap().is_zero());
    }

    #[test]
    fn bounds() {
        let (k1, k2, d) = left_label_bounds(p23(), &int(2)).unwrap();
        assert_eq!((k1, k2, d), (BigInt::from(-6), BigInt::from(2), BigInt::from(6)));
        let (k1, k2, d) = left_label_bounds(p23(), &ratio(1, 3)).unwrap();
        assert_eq!((k1, k2, d), (BigInt::from(-3), BigInt::from(6), BigInt::from(18)));
        let (k1, k2, _) = left_label_bounds(p23(), &ratio(-1, 2)).unwrap();
        assert_eq!((k1, k2), (BigInt::from(0), BigInt::from(7)));
    }

    #[test]
    fn kernel_matches_exact_tiles() {
        let p = p23();
        for q in [int(2), ratio(1, 3), ratio(-5, 4)] {
            let kernel = TileKernel::new(p, &q).unwrap();
            for w in ["", "a", "bA", "BaabA", "abab", "BBa"] {
                let g = parse_word(w).unwrap();
                for x in [ratio(1, 3), ratio(5, 7), ratio(-9, 4), int(1)] {
                    let key = kernel.key(&lambda(&g, p), &x).unwrap();
                    assert_eq!(kernel.tile(&key), ak_tile(p, &q, &g, &x), "{w} {x}");
                }
            }
        }
    }
}
