//! Inducers for bipartition tangles whose big-side triples all meet in at
//! least an eighth of the ground set.

use num_traits::{One, Signed, Zero};

use super::{decide_induced, induces, InduceOutcome, WeightFunction};
use crate::error::{input, invariant, Result};
use crate::exactlp::{int, Rational};
use crate::orientations::{is_f_ell_tangle, Orientation};
use crate::side::Side;

/// How many candidates to try per stage before moving on.
const CANDIDATES: usize = 64;

/// Which construction produced the inducer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensePath {
    /// The whole ground set.
    WholeSet,
    /// A big side `B₁` of an element not induced by the whole set.
    BigSide,
    /// An intersection `B₁ ∩ B₂` of two big sides.
    BigSidePair,
    /// Counting big-side memberships among the balanced elements, plus a constant.
    Counting,
    /// Exact LP, used only when every construction above failed verification.
    LinearProgram,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseInducer {
    pub weights: WeightFunction,
    /// Set when the inducer is the indicator of a subset.
    pub set: Option<Side>,
    pub path: DensePath,
}

fn set_result(tau: &Orientation, x: Side, path: DensePath) -> Option<DenseInducer> {
    let w = WeightFunction::indicator(&x);
    induces(&w, tau).then(|| DenseInducer {
        weights: w,
        set: Some(x),
        path,
    })
}

/// Builds an inducer for an `F^ℓ`-tangle `tau` of bipartitions with `8ℓ ≥ |V|`.
pub fn dense_tangle_inducer(tau: &Orientation, ell: &Rational) -> Result<DenseInducer> {
    let n = tau.ground_size();
    if ell.is_negative() || ell * int(8) < int(n as i64) {
        return input(format!("need 8ℓ ≥ |V| = {n}, got ℓ = {ell}"));
    }
    if !is_f_ell_tangle(tau, ell)? {
        return input(format!("orientation is not an F^ℓ-tangle for ℓ = {ell}"));
    }
    let full = Side::full(n);
    if let Some(r) = set_result(tau, full.clone(), DensePath::WholeSet) {
        return Ok(r);
    }
    let el = tau.elements();
    // elements the whole set fails on have |B| ≤ |V|/2
    let firsts: Vec<&Side> = el
        .iter()
        .filter(|s| s.small().count() >= s.big().count())
        .map(|s| s.big())
        .take(CANDIDATES)
        .collect();
    for b1 in &firsts {
        if let Some(r) = set_result(tau, (*b1).clone(), DensePath::BigSide) {
            return Ok(r);
        }
    }
    for b1 in &firsts {
        let seconds = el
            .iter()
            .filter(|s| s.small().intersection_count(b1) >= s.big().intersection_count(b1))
            .take(CANDIDATES);
        for s in seconds {
            if let Some(r) = set_result(tau, b1.intersection(s.big()), DensePath::BigSidePair) {
                return Ok(r);
            }
        }
    }

    // balanced elements, weighted by how many of their big sides contain each point
    let mut counts = vec![0i64; n];
    for s in el.iter().filter(|s| s.small().count() == s.big().count()) {
        for v in s.big().iter() {
            counts[v] += 1;
        }
    }
    let w = WeightFunction::new(counts.into_iter().map(int).collect())?;
    let worst = el
        .iter()
        .map(|s| -w.margin(s))
        .max()
        .unwrap_or_else(Rational::zero);
    let c = Rational::one() + if worst.is_positive() { worst } else { Rational::zero() };
    let shifted = w.add(&WeightFunction::constant(n, c)?)?;
    if induces(&shifted, tau) {
        let set = shifted.as_set();
        return Ok(DenseInducer {
            weights: shifted,
            set,
            path: DensePath::Counting,
        });
    }

    match decide_induced(tau, true)?.outcome {
        InduceOutcome::Induced(w) => {
            let set = w.as_set();
            Ok(DenseInducer {
                weights: w,
                set,
                path: DensePath::LinearProgram,
            })
        }
        InduceOutcome::NotInduced(_) => invariant("dense F^ℓ-tangle is not induced by any weight function"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::order::OrderSpec;
    use crate::separation::{GroundSet, Separation};
    use crate::system::SeparationSystem;
    use std::sync::Arc;

    fn majority_of(n: usize, smalls: &[Side]) -> Orientation {
        let seps: Vec<Separation> = smalls.iter().map(|s| Separation::bipartition(s.clone())).collect();
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap());
        Orientation::from_fn(sys, |s| {
            let c = s.canonical();
            if c.small().count() < c.big().count() {
                c.clone()
            } else {
                c.inverse()
            }
        })
        .unwrap()
    }

    #[test]
    fn small_sides_of_size_two_are_induced_by_everything() {
        let n = 8;
        let mut smalls = Vec::new();
        for i in 0..n {
            smalls.push(Side::from_indices(n, [i]).unwrap());
            for j in i + 1..n {
                smalls.push(Side::from_indices(n, [i, j]).unwrap());
            }
        }
        let tau = majority_of(n, &smalls);
        let r = dense_tangle_inducer(&tau, &int(2)).unwrap();
        assert_eq!(r.path, DensePath::WholeSet);
        assert_eq!(r.set, Some(Side::full(n)));
    }

    #[test]
    fn threshold_is_enforced() {
        let tau = majority_of(16, &[Side::from_indices(16, [0]).unwrap()]);
        assert!(matches!(dense_tangle_inducer(&tau, &int(1)), Err(Error::Input(_))));
        assert!(dense_tangle_inducer(&tau, &int(2)).is_ok());
    }

    /// V = F₂³; the orientation puts the hyperplane {x : a·x = 0} on the big
    /// side for every a ≠ 0. Every three big sides share a point, so ℓ* = 1 =
    /// |V|/8, yet no whole set, big side or pair of big sides induces it.
    #[test]
    fn equality_case_needs_counting_weights() {
        let n = 8;
        let dot = |a: usize, x: usize| (a & x).count_ones() % 2;
        let seps: Vec<Separation> = (1..8)
            .map(|a| Separation::bipartition(Side::from_indices(n, (0..8).filter(|&x| dot(a, x) == 1)).unwrap()))
            .collect();
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap());
        let tau = Orientation::from_fn(sys, |s| {
            let c = s.canonical();
            if c.big().contains(0) {
                c.clone()
            } else {
                c.inverse()
            }
        })
        .unwrap();
        assert_eq!(crate::orientations::max_f_ell(&tau).unwrap(), Some(1));
        let r = dense_tangle_inducer(&tau, &int(1)).unwrap();
        assert_eq!(r.path, DensePath::Counting);
        assert!(induces(&r.weights, &tau));
    }
}
