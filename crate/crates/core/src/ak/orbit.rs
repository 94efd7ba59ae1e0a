use serde::Serialize;

use super::product::pair_sides;
use super::tile::ak_tile_form;
use crate::dynamics::MultSystem;
use crate::error::{Error, Result};
use crate::group::{ball_with_limits, canonical_form, BallLimits, CanonicalForm, GroupParams, GroupWord};
use crate::rational::{self, int, ratio, Rational};
use crate::wang::{Patch, Tileset, WangTile};

/// A finite window `x_{-K}, …, x_K` of an orbit together with the piece used
/// at each step: `x_{k+1} = q_{i_k} x_k` and `x_k ∈ I_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitBranch {
    horizon: i64,
    #[serde(with = "slash_vec")]
    values: Vec<Rational>,
    pieces: Vec<usize>,
}

mod slash_vec {
    use serde::Serializer;

    use crate::rational::{format, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format))
    }
}

impl OrbitBranch {
    /// Checks the window `values[k + horizon]`, `pieces[k + horizon]` for
    /// `k` in `-horizon..=horizon`.
    pub fn from_parts(system: &MultSystem, horizon: i64, values: Vec<Rational>, pieces: Vec<usize>) -> Result<Self> {
        let len = (2 * horizon + 1) as usize;
        if horizon < 0 || values.len() != len || pieces.len() != len {
            return Err(Error::param(format!("an orbit window of horizon {horizon} needs {len} values and pieces")));
        }
        for (idx, (x, &i)) in values.iter().zip(&pieces).enumerate() {
            let k = idx as i64 - horizon;
            let piece = system
                .pieces()
                .get(i)
                .ok_or_else(|| Error::param(format!("piece {i} at step {k} does not exist")))?;
            let next = piece
                .apply(x)
                .ok_or_else(|| Error::param(format!("x_{k} = {} is outside piece {i}", rational::format(x))))?;
            if idx + 1 < len && next != values[idx + 1] {
                return Err(Error::param(format!("x_{} does not follow from x_{k}", k + 1)));
            }
        }
        Ok(OrbitBranch {
            horizon,
            values,
            pieces,
        })
    }

    /// Forward: the first piece containing `x_k` whose image stays in the
    /// domain (else the first piece containing `x_k`). Backward: the first
    /// piece whose inverse lands in its own interval.
    pub fn greedy(system: &MultSystem, x0: &Rational, horizon: u32) -> Result<Self> {
        let horizon = horizon as i64;
        let mut forward_values = vec![x0.clone()];
        let mut forward_pieces = Vec::new();
        for k in 0..=horizon {
            let x = &forward_values[k as usize];
            let containing: Vec<usize> = (0..system.len()).filter(|&i| system.pieces()[i].contains(x)).collect();
            let choice = containing
                .iter()
                .copied()
                .find(|&i| system.in_domain(&(x * system.pieces()[i].slope())))
                .or_else(|| containing.first().copied())
                .ok_or_else(|| Error::param(format!("orbit leaves the domain at step {k}")))?;
            forward_pieces.push(choice);
            if k < horizon {
                let next = x * system.pieces()[choice].slope();
                forward_values.push(next);
            }
        }
        let mut backward_values = Vec::new();
        let mut backward_pieces = Vec::new();
        let mut current = x0.clone();
        for k in 1..=horizon {
            let (i, prev) = system
                .pieces()
                .iter()
                .enumerate()
                .find_map(|(i, piece)| piece.apply_inverse(&current).map(|x| (i, x)))
                .ok_or_else(|| Error::param(format!("orbit has no preimage at step -{k}")))?;
            backward_values.push(prev.clone());
            backward_pieces.push(i);
            current = prev;
        }
        backward_values.reverse();
        backward_pieces.reverse();
        backward_values.extend(forward_values);
        backward_pieces.extend(forward_pieces);
        Ok(OrbitBranch {
            horizon,
            values: backward_values,
            pieces: backward_pieces,
        })
    }

    pub fn horizon(&self) -> i64 {
        self.horizon
    }

    pub fn x0(&self) -> &Rational {
        &self.values[self.horizon as usize]
    }

    fn offset(&self, k: i64) -> Option<usize> {
        (k.abs() <= self.horizon).then(|| (k + self.horizon) as usize)
    }

    pub fn value(&self, k: i64) -> Option<&Rational> {
        self.offset(k).map(|i| &self.values[i])
    }

    /// Zero-based piece index `i_k`.
    pub fn piece(&self, k: i64) -> Option<usize> {
        self.offset(k).map(|i| self.pieces[i])
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// The branch of `S₀` that follows the circle-like map on `[1/3, 2]`:
/// `×2` on `[1/3, 1]`, `/3` on `(1, 2]`; backwards `/2` on `[2/3, 2]`,
/// `×3` on `[1/3, 2/3)`.
pub fn orbit_for_s0(x0: &Rational, horizon: u32) -> Result<OrbitBranch> {
    if *x0 < ratio(1, 3) || *x0 > int(2) {
        return Err(Error::param(format!("x0 = {} is outside [1/3, 2]", rational::format(x0))));
    }
    OrbitBranch::greedy(&MultSystem::s0(), x0, horizon)
}

/// Tile placed at `g`: level `k = -height(g)` uses `x_k` and piece `i_k`,
/// with sides colored `i_k + 1`.
pub fn orbit_tile(system: &MultSystem, branch: &OrbitBranch, g: &CanonicalForm) -> Result<WangTile> {
    let h = g.height();
    let k = -h;
    let (x, i) = match (branch.value(k), branch.piece(k)) {
        (Some(x), Some(i)) => (x, i),
        _ => return Err(Error::BranchWindow(h)),
    };
    let q = system
        .pieces()
        .get(i)
        .ok_or_else(|| Error::param(format!("branch uses missing piece {i}")))?
        .slope();
    pair_sides(&ak_tile_form(q, g, x), i + 1)
}

/// The orbit configuration restricted to the ball of the given radius.
pub fn orbit_configuration(system: &MultSystem, branch: &OrbitBranch, p: GroupParams, radius: u32) -> Result<Patch> {
    p.require_positive()?;
    let limits = BallLimits {
        max_radius: BallLimits::from_env().max_radius.max(radius),
        ..BallLimits::from_env()
    };
    let cells = ball_with_limits(p, radius, limits)?;
    let placed: Vec<(CanonicalForm, WangTile)> = cells
        .into_iter()
        .map(|g| orbit_tile(system, branch, &g).map(|t| (g, t)))
        .collect::<Result<_>>()?;
    let tileset = Tileset::from_set(p, placed.iter().map(|(_, t)| t.clone()))?;
    let mut patch = Patch::new(tileset);
    for (g, t) in placed {
        let i = patch.tileset().index_of(&t).expect("tile collected above");
        patch.insert(g, i)?;
    }
    Ok(patch)
}

/// True iff the orbit tile at `period · g` equals the one at `g` for every
/// `g` in the ball.
pub fn weak_period_check(
    system: &MultSystem,
    branch: &OrbitBranch,
    p: GroupParams,
    period: &GroupWord,
    radius: u32,
) -> Result<bool> {
    p.require_positive()?;
    let limits = BallLimits {
        max_radius: BallLimits::from_env().max_radius.max(radius),
        ..BallLimits::from_env()
    };
    let shift = canonical_form(period, p);
    for g in ball_with_limits(p, radius, limits)? {
        let moved = shift.mul(&g);
        if orbit_tile(system, branch, &moved)? != orbit_tile(system, branch, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
