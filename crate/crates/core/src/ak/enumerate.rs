use std::collections::{BTreeSet, HashSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use super::tile::{left_label_bounds, TileKernel, TileKey};
use crate::dynamics::LinearPiece;
use crate::error::{Error, Result};
use crate::group::{ball_with_limits, lambda_form, BallLimits, GroupParams};
use crate::rational::{floor, fractions_in, Rational};
use crate::wang::Tileset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Sample `g` over growing balls and `x` over fractions in the interval
    /// with growing denominators until the tile set stops growing.
    Sampling(SamplingConfig),
    /// Every label tuple obeying the multiplying equation inside the proven
    /// label ranges. A superset of the true tileset.
    OverApproximation,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Sampling(SamplingConfig::default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingConfig {
    pub start_radius: u32,
    pub max_radius: u32,
    pub start_den: u64,
    pub den_step: u64,
    pub max_den: u64,
    /// Consecutive rounds without a new tile needed to stop.
    pub quiet_rounds: u32,
    pub max_nodes: usize,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        let limits = BallLimits::from_env();
        SamplingConfig {
            start_radius: 1,
            max_radius: limits.max_radius,
            start_den: 4,
            den_step: 4,
            max_den: 64,
            quiet_rounds: 2,
            max_nodes: limits.max_nodes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    Sampling,
    OverApproximation,
}

/// How an enumeration ended. For sampling, `last_growth` is the
/// `(radius, max denominator)` of the last round that found a new tile and
/// `sizes` the tile count after each round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub strategy: StrategyKind,
    pub rounds: u32,
    pub radius: u32,
    pub max_den: u64,
    pub last_growth: Option<(u32, u64)>,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub tileset: Tileset,
    pub certificate: Certificate,
}

/// Collects the multiplying tileset for `piece.slope()` over the interval of
/// `piece`.
pub fn enumerate_tileset(p: GroupParams, piece: &LinearPiece, strategy: &Strategy) -> Result<Enumeration> {
    p.require_positive()?;
    let q = piece.slope();
    let kernel = TileKernel::new(p, q)
        .ok_or_else(|| Error::ResourceLimit("slope does not fit 128-bit arithmetic".into()))?;
    match strategy {
        Strategy::Sampling(config) => sample(p, piece, &kernel, config),
        Strategy::OverApproximation => over_approximate(p, piece, &kernel),
    }
}

fn overflow() -> Error {
    Error::ResourceLimit("tile labels exceed 128-bit arithmetic".into())
}

fn sample(p: GroupParams, piece: &LinearPiece, kernel: &TileKernel, config: &SamplingConfig) -> Result<Enumeration> {
    if config.start_radius > config.max_radius || config.start_den == 0 || config.start_den > config.max_den {
        return Err(Error::param("sampling schedule starts past its caps"));
    }
    let (lo, hi) = (piece.lo(), piece.hi());
    let limits = BallLimits {
        max_radius: config.max_radius,
        max_nodes: config.max_nodes,
    };

    let mut keys: HashSet<TileKey> = HashSet::new();
    let mut lambdas: Vec<Rational> = Vec::new();
    let mut seen_lambdas: BTreeSet<Rational> = BTreeSet::new();
    let mut xs: Vec<Rational> = Vec::new();
    let mut seen_xs: BTreeSet<Rational> = BTreeSet::new();

    let (mut radius, mut den) = (config.start_radius, config.start_den);
    let mut quiet = 0;
    let mut rounds = 0;
    let mut last_growth = None;
    let mut sizes = Vec::new();
    loop {
        rounds += 1;
        let new_lambdas: Vec<Rational> = ball_with_limits(p, radius, limits)?
            .iter()
            .map(lambda_form)
            .filter(|l| seen_lambdas.insert(l.clone()))
            .collect();
        let new_xs: Vec<Rational> = fractions_in(&lo, &hi, den)
            .into_iter()
            .filter(|x| seen_xs.insert(x.clone()))
            .collect();

        let before = keys.len();
        for l in &lambdas {
            for x in &new_xs {
                keys.insert(kernel.key(l, x).ok_or_else(overflow)?);
            }
        }
        lambdas.extend(new_lambdas.iter().cloned());
        xs.extend(new_xs);
        for l in &new_lambdas {
            for x in &xs {
                keys.insert(kernel.key(l, x).ok_or_else(overflow)?);
            }
        }
        sizes.push(keys.len());

        if keys.len() > before || rounds == 1 {
            quiet = 0;
            last_growth = Some((radius, den));
        } else {
            quiet += 1;
        }
        if quiet >= config.quiet_rounds {
            break;
        }
        if radius >= config.max_radius || den >= config.max_den {
            return Err(Error::Inconclusive(format!(
                "tile set still growing at radius {radius}, denominator {den} ({} tiles)",
                keys.len()
            )));
        }
        radius += 1;
        den = (den + config.den_step).min(config.max_den);
    }

    let tileset = Tileset::from_set(p, keys.iter().map(|k| kernel.tile(k)))?;
    Ok(Enumeration {
        tileset,
        certificate: Certificate {
            strategy: StrategyKind::Sampling,
            rounds,
            radius,
            max_den: den,
            last_growth,
            sizes,
        },
    })
}

const OVER_APPROXIMATION_CAP: usize = 1_000_000;

fn tuples(values: &[i128], len: usize) -> Vec<Vec<i128>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut next = t.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

fn over_approximate(p: GroupParams, piece: &LinearPiece, kernel: &TileKernel) -> Result<Enumeration> {
    let (m, n) = (p.m() as usize, p.n() as usize);
    let q = piece.slope();
    let (q1, q2) = (
        q.numer().to_i128().ok_or_else(overflow)?,
        q.denom().to_i128().ok_or_else(overflow)?,
    );
    let (k1, k2, _) = left_label_bounds(p, q)?;
    let (k1, k2) = (k1.to_i128().ok_or_else(overflow)?, k2.to_i128().ok_or_else(overflow)?);

    let a = piece.base() as i128;
    let tops = tuples(&[a, a + 1], m);
    let ends = [q * piece.lo(), q * piece.hi()];
    let c_lo = floor(ends.iter().min().expect("two ends")).to_i128().ok_or_else(overflow)?;
    let c_hi = floor(ends.iter().max().expect("two ends")).to_i128().ok_or_else(overflow)?;
    let mut bottoms: BTreeSet<Vec<i128>> = BTreeSet::new();
    for c in c_lo..=c_hi {
        bottoms.extend(tuples(&[c, c + 1], n));
    }

    let (mi, ni) = (m as i128, n as i128);
    let mut keys: BTreeSet<TileKey> = BTreeSet::new();
    for t in &tops {
        let st: i128 = t.iter().sum();
        for b in &bottoms {
            let sb: i128 = b.iter().sum();
            for l in k1..=k2 {
                let r = ni * q1 * st + l - mi * q2 * sb;
                if (k1..=k2).contains(&r) {
                    let mut key = t.clone();
                    key.extend(b.iter().copied());
                    key.push(l);
                    key.push(r);
                    keys.insert(key);
                    if keys.len() > OVER_APPROXIMATION_CAP {
                        return Err(Error::ResourceLimit(format!(
                            "over-approximation exceeds {OVER_APPROXIMATION_CAP} tiles"
                        )));
                    }
                }
            }
        }
    }
    let tileset = Tileset::from_set(p, keys.iter().map(|k| kernel.tile(k)))?;
    let size = tileset.len();
    Ok(Enumeration {
        tileset,
        certificate: Certificate {
            strategy: StrategyKind::OverApproximation,
            rounds: 1,
            radius: 0,
            max_den: 0,
            last_growth: None,
            sizes: vec![size],
        },
    })
}
