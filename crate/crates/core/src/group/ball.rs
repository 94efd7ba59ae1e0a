use std::collections::{HashSet, VecDeque};

use super::{canonical_form, CanonicalForm, GroupParams, GroupWord};
use crate::error::{Error, Result};

/// Caps for ball enumeration; balls grow exponentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallLimits {
    pub max_radius: u32,
    pub max_nodes: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits {
            max_radius: 8,
            max_nodes: 1_000_000,
        }
    }
}

impl BallLimits {
    /// Default limits with `max_nodes` taken from `BS_MAX_NODES` when set.
    pub fn from_env() -> Self {
        let mut limits = BallLimits::default();
        if let Some(v) = std::env::var("BS_MAX_NODES")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_nodes = v;
        }
        limits
    }
}

pub fn ball(p: GroupParams, radius: u32) -> Result<Vec<CanonicalForm>> {
    ball_with_limits(p, radius, BallLimits::default())
}

/// Elements at word distance `<= radius` from the identity, in breadth-first
/// order (ties broken by generator order a, a^-1, b, b^-1).
pub fn ball_with_limits(
    p: GroupParams,
    radius: u32,
    limits: BallLimits,
) -> Result<Vec<CanonicalForm>> {
    if radius > limits.max_radius {
        return Err(Error::ResourceLimit(format!(
            "ball radius {radius} exceeds configured maximum {}",
            limits.max_radius
        )));
    }
    let gens: Vec<GroupWord> = vec![
        GroupWord::a(1),
        GroupWord::a(-1),
        GroupWord::b(1),
        GroupWord::b(-1),
    ];
    let gen_forms: Vec<CanonicalForm> = gens.iter().map(|g| canonical_form(g, p)).collect();
    let start = CanonicalForm::identity(p);
    let mut seen: HashSet<CanonicalForm> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut frontier = VecDeque::from([start]);
    for _ in 0..radius {
        let mut next = VecDeque::new();
        while let Some(g) = frontier.pop_front() {
            for s in &gen_forms {
                let h = g.mul(s);
                if seen.insert(h.clone()) {
                    if seen.len() > limits.max_nodes {
                        return Err(Error::ResourceLimit(format!(
                            "ball of radius {radius} exceeds {} nodes",
                            limits.max_nodes
                        )));
                    }
                    order.push(h.clone());
                    next.push_back(h);
                }
            }
        }
        frontier = next;
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    #[test]
    fn small_radii() {
        let p = GroupParams::new(2, 3).unwrap();
        assert_eq!(ball(p, 0).unwrap(), vec![CanonicalForm::identity(p)]);
        let b1 = ball(p, 1).unwrap();
        assert_eq!(b1.len(), 5);
        for w in ["a", "A", "b", "B"] {
            assert!(b1.contains(&canonical_form(&parse_word(w).unwrap(), p)));
        }
    }

    #[test]
    fn closed_under_inverse() {
        let p = GroupParams::new(2, 3).unwrap();
        let b = ball(p, 4).unwrap();
        let set: HashSet<_> = b.iter().cloned().collect();
        for g in &b {
            assert!(set.contains(&g.inverse()));
        }
    }

    #[test]
    fn limits_are_enforced() {
        let p = GroupParams::new(2, 3).unwrap();
        assert!(matches!(ball(p, 9), Err(Error::ResourceLimit(_))));
        let tight = BallLimits {
            max_radius: 8,
            max_nodes: 10,
        };
        assert!(matches!(
            ball_with_limits(p, 3, tight),
            Err(Error::ResourceLimit(_))
        ));
    }
}
