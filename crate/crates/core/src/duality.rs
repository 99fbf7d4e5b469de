//! The dual of an oriented separation system.
//!
//! Given an orientation `σ` of `S`, every point `v` yields a separation
//! `φ(v) = (C(v), D(v))` of the set `S`, where `C(v)` holds the elements of
//! `σ` with `v` on the small side and `D(v)` those with `v` on the big side.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{input, Result};
use crate::order::OrderSpec;
use crate::orientations::Orientation;
use crate::separation::{GroundSet, OrientedSeparation, Separation};
use crate::side::Side;
use crate::system::SeparationSystem;

/// Positions of the separations of `sys` in canonical order: entry `p` is the
/// system index of the `p`-th smallest separation.
pub fn canonical_positions(sys: &SeparationSystem) -> Vec<usize> {
    let seps = sys.separations();
    let mut order: Vec<usize> = (0..seps.len()).collect();
    order.sort_by(|&a, &b| seps[a].cmp(&seps[b]));
    order
}

fn phi_with(v: usize, sigma: &Orientation, positions: &[usize]) -> OrientedSeparation {
    let len = positions.len();
    let mut c = Side::empty(len);
    let mut d = Side::empty(len);
    for (p, &i) in positions.iter().enumerate() {
        let s = sigma.get(i);
        if s.small().contains(v) {
            c.insert(p);
        }
        if s.big().contains(v) {
            d.insert(p);
        }
    }
    OrientedSeparation::new(c, d).expect("every point lies in a side of every separation")
}

/// `φ(v)` as a separation of `S`, whose elements are indexed in canonical order.
pub fn phi(v: usize, sigma: &Orientation) -> Result<OrientedSeparation> {
    if v >= sigma.ground_size() {
        return input(format!("point {v} is outside the ground set"));
    }
    Ok(phi_with(v, sigma, &canonical_positions(sigma.system())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSystem {
    /// The distinct separations `φ(v)` of the set `S`.
    pub base: Arc<SeparationSystem>,
    /// Entry `p` is the index in the primal system of dual ground element `p`.
    pub positions: Vec<usize>,
    /// `φ(v)` for every point `v`.
    pub images: Vec<OrientedSeparation>,
    /// Index in `base` of the underlying separation of `φ(v)`.
    pub image_of: Vec<usize>,
    /// Points grouped by identical underlying separation `φ(v)`, each class sorted.
    pub collisions: Vec<Vec<usize>>,
    pub injective: bool,
    /// The orientation `{φ(v)}`; only defined when `φ` is injective.
    pub default: Option<Orientation>,
}

impl DualSystem {
    /// Dual ground position of primal separation `i`.
    pub fn position_of(&self, i: usize) -> Option<usize> {
        self.positions.iter().position(|&p| p == i)
    }
}

pub fn dualize(sigma: &Orientation) -> Result<DualSystem> {
    let sys = sigma.system();
    if sys.is_empty() {
        return input("the dual of an empty separation system has an empty ground set");
    }
    let positions = canonical_positions(sys);
    let images: Vec<OrientedSeparation> = (0..sigma.ground_size())
        .map(|v| phi_with(v, sigma, &positions))
        .collect();
    let mut seen: HashMap<Separation, usize> = HashMap::new();
    let mut distinct: Vec<Separation> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut image_of = Vec::with_capacity(images.len());
    for (v, img) in images.iter().enumerate() {
        let u = img.underlying();
        let idx = *seen.entry(u.clone()).or_insert_with(|| {
            distinct.push(u);
            classes.push(Vec::new());
            distinct.len() - 1
        });
        classes[idx].push(v);
        image_of.push(idx);
    }
    let injective = classes.iter().all(|c| c.len() == 1);
    let base = Arc::new(SeparationSystem::new(
        GroundSet::new(positions.len())?,
        distinct,
        OrderSpec::Standard,
    )?);
    let default = if injective {
        Some(Orientation::from_elements(base.clone(), images.iter().cloned())?)
    } else {
        None
    };
    Ok(DualSystem {
        base,
        positions,
        images,
        image_of,
        collisions: classes,
        injective,
        default,
    })
}

/// Dualizes twice and checks that the result is `(S, σ)` up to relabelling.
pub fn double_dual(sigma: &Orientation) -> Result<bool> {
    let dual = dualize(sigma)?;
    let Some(tau) = dual.default.as_ref() else {
        return input("φ is not injective, so the dual has no default orientation");
    };
    let again = dualize(tau)?;
    // ground element q of the double dual is base separation again.positions[q],
    // which is the image of exactly one point
    let mut point_of_base = vec![0usize; dual.base.len()];
    for (v, &b) in dual.image_of.iter().enumerate() {
        point_of_base[b] = v;
    }
    let n = sigma.ground_size();
    let relabel = |side: &Side| -> Side {
        let mut out = Side::empty(n);
        for q in side.iter() {
            out.insert(point_of_base[again.positions[q]]);
        }
        out
    };
    if !again.injective || again.images.len() != sigma.len() {
        return Ok(false);
    }
    for (p, img) in again.images.iter().enumerate() {
        let original = sigma.get(dual.positions[p]);
        if relabel(img.small()) != *original.small() || relabel(img.big()) != *original.big() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::all_bipartitions;

    fn principal_singletons() -> Orientation {
        let seps = vec![
            Separation::from_indices(3, &[0], &[1, 2]).unwrap(),
            Separation::from_indices(3, &[1], &[0, 2]).unwrap(),
            Separation::from_indices(3, &[0, 1], &[2]).unwrap(),
        ];
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap());
        Orientation::from_fn(sys, |s| {
            let c = s.canonical();
            if c.big().contains(2) {
                c.clone()
            } else {
                c.inverse()
            }
        })
        .unwrap()
    }

    #[test]
    fn phi_examples() {
        let sigma = principal_singletons();
        let pos = canonical_positions(sigma.system());
        let s1 = pos.iter().position(|&i| i == 0).unwrap();
        let s2 = pos.iter().position(|&i| i == 1).unwrap();
        let s3 = pos.iter().position(|&i| i == 2).unwrap();
        let p0 = phi(0, &sigma).unwrap();
        assert_eq!(p0.small(), &Side::from_indices(3, [s1, s3]).unwrap());
        assert_eq!(p0.big(), &Side::from_indices(3, [s2]).unwrap());
        let p2 = phi(2, &sigma).unwrap();
        assert!(p2.small().is_empty());
        assert!(p2.big().is_full());
        assert!(phi(3, &sigma).is_err());
    }

    #[test]
    fn principal_round_trip() {
        let sigma = principal_singletons();
        let d = dualize(&sigma).unwrap();
        assert!(d.injective);
        assert_eq!(d.base.len(), 3);
        assert!(double_dual(&sigma).unwrap());
    }

    #[test]
    fn twins_collide() {
        // 0 and 1 lie on the same side of every bipartition
        let seps = vec![
            Separation::from_indices(3, &[0, 1], &[2]).unwrap(),
            Separation::from_indices(3, &[], &[0, 1, 2]).unwrap(),
        ];
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap());
        let sigma = Orientation::from_flags(sys, vec![false, false]).unwrap();
        let d = dualize(&sigma).unwrap();
        assert!(!d.injective);
        assert!(d.default.is_none());
        assert!(d.collisions.contains(&vec![0, 1]));
        assert!(double_dual(&sigma).is_err());
    }

    #[test]
    fn sides_of_phi_cover_s() {
        let n = 4;
        let sys = Arc::new(
            SeparationSystem::new(GroundSet::new(n).unwrap(), all_bipartitions(n), OrderSpec::Standard).unwrap(),
        );
        let sigma = Orientation::from_flags(sys.clone(), (0..sys.len()).map(|i| i % 3 == 0).collect()).unwrap();
        for v in 0..n {
            let p = phi(v, &sigma).unwrap();
            assert!(p.small().union(p.big()).is_full());
            assert!(p.small().is_disjoint(p.big()));
        }
    }
}
