//! Point sets inducing low-order profiles, found as interiors of stars.

use num_traits::Signed;

use super::WeightFunction;
use crate::error::{input, invariant, Error, Result};
use crate::order::OrderSpec;
use crate::orientations::{is_profile, is_regular, Orientation};
use crate::resilience::binomial;
use crate::separation::{is_star, OrientedSeparation};
use crate::side::Side;

/// Output of [`star_interior_inducer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarInducer {
    /// The interior of `star`; it induces every element of order `< k`.
    pub set: Side,
    pub star: Vec<OrientedSeparation>,
}

/// Number of separations of an `n`-set with separator smaller than `k`.
fn universe_count_below(n: usize, k: usize) -> u128 {
    (0..k.min(n + 1))
        .map(|j| {
            let rest = n - j;
            let unordered = if rest == 0 { 1 } else { 1u128 << (rest - 1) };
            binomial(n, j) * unordered
        })
        .sum()
}

/// For a regular profile `tau` of all separations of order `< 2k` under the
/// standard order, finds a star in `tau` whose interior `X` satisfies
/// `|X ∩ A| < k` for every `(A, B) ∈ tau` of order `< k`. Such an `X` has at
/// least `2k` elements and induces those separations.
pub fn star_interior_inducer(tau: &Orientation, k: usize) -> Result<StarInducer> {
    let sys = tau.system();
    let n = sys.ground_size();
    if k == 0 {
        return input("k must be at least 1");
    }
    if n < 2 * k {
        return input(format!(
            "a ground set of {n} < 2k = {} elements has no regular 2k-profile",
            2 * k
        ));
    }
    let expected = universe_count_below(n, 2 * k);
    let all_low = sys.separations().iter().all(|s| s.separator().count() < 2 * k);
    if !all_low || sys.len() as u128 != expected {
        return input(format!(
            "system is not the set of all {expected} separations of order < {}",
            2 * k
        ));
    }
    star_interior_search(tau, k)
}

/// The star-improvement loop of [`star_interior_inducer`] without the check
/// that the system is all of `U(V)` below order `2k`.
///
/// The argument only needs `tau` to be a regular profile of the separations
/// of order `< 2k` of some universe under the standard order, for instance the
/// separations of a graph. Every improved star is re-checked against `tau`, so
/// a system that is not closed enough surfaces as an invariant error.
pub fn star_interior_search(tau: &Orientation, k: usize) -> Result<StarInducer> {
    let n = tau.ground_size();
    if k == 0 {
        return input("k must be at least 1");
    }
    if !matches!(tau.system().order_spec(), OrderSpec::Standard) {
        return input("star interiors need the standard order");
    }
    if !is_regular(tau) {
        return input("orientation is not regular");
    }
    if !is_profile(tau) {
        return input("orientation is not a profile");
    }

    let low: Vec<&OrientedSeparation> = tau
        .elements()
        .iter()
        .filter(|s| s.separator().count() < k)
        .collect();
    let mut interior = Side::full(n);
    let mut star: Vec<OrientedSeparation> = Vec::new();
    for _ in 0..=n {
        let next = low
            .iter()
            .filter(|s| s.small().intersection_count(&interior) >= k)
            .min_by(|a, b| {
                a.separator()
                    .count()
                    .cmp(&b.separator().count())
                    .then_with(|| a.canonical_cmp(b))
            });
        let Some(&pick) = next else {
            let w = WeightFunction::indicator(&interior);
            if interior.count() < 2 * k || !low.iter().all(|s| w.margin(s).is_positive()) {
                return invariant("star interior does not induce the low-order separations");
            }
            return Ok(StarInducer { set: interior, star });
        };
        let (a, b) = (pick.small(), pick.big());
        let mut grown = vec![pick.clone()];
        for s in &star {
            grown.push(OrientedSeparation::new_unchecked(b.intersection(s.small()), a.union(s.big())));
        }
        if let Some(bad) = grown.iter().find(|s| !tau.contains(s)) {
            return invariant(format!("{bad:?} should lie in the profile"));
        }
        if !is_star(&grown) {
            return invariant("improved family is not a star");
        }
        let mut next_interior = Side::full(n);
        for s in &grown {
            next_interior.intersect_with(s.big());
        }
        if next_interior.count() >= interior.count() {
            return invariant("star interior did not shrink");
        }
        interior = next_interior;
        star = grown;
    }
    invariant("star improvement did not terminate")
}

/// A star of smallest interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinStar {
    pub interior: Side,
    pub star: Vec<OrientedSeparation>,
}

/// Exhaustive branch-and-bound search for a star in `tau` with the smallest
/// interior. `budget` caps the number of search nodes.
pub fn min_star_interior(tau: &Orientation, budget: u64) -> Result<MinStar> {
    let n = tau.ground_size();
    let el: Vec<&OrientedSeparation> = tau.elements().iter().filter(|s| !s.is_degenerate()).collect();
    let m = el.len();
    let inverses: Vec<OrientedSeparation> = el.iter().map(|s| s.inverse()).collect();
    let mut compat = vec![Side::empty(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if el[i].le(&inverses[j]) {
                compat[i].insert(j);
                compat[j].insert(i);
            }
        }
    }

    struct Search<'a> {
        el: &'a [&'a OrientedSeparation],
        compat: &'a [Side],
        best: MinStar,
        chosen: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn rec(&mut self, interior: &Side, candidates: &Side) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Resource(format!(
                    "star search exceeded {} nodes",
                    self.budget
                )));
            }
            let mut floor = interior.clone();
            for p in candidates.iter() {
                floor.intersect_with(self.el[p].big());
            }
            if floor.count() >= self.best.interior.count() {
                return Ok(());
            }
            for p in candidates.iter() {
                let next = interior.intersection(self.el[p].big());
                self.chosen.push(p);
                if next.count() < self.best.interior.count() {
                    self.best = MinStar {
                        interior: next.clone(),
                        star: self.chosen.iter().map(|&i| self.el[i].clone()).collect(),
                    };
                }
                let mut rest = candidates.intersection(&self.compat[p]);
                for q in rest.to_vec() {
                    if q < p {
                        rest.remove(q);
                    }
                }
                if !rest.is_empty() {
                    self.rec(&next, &rest)?;
                }
                self.chosen.pop();
            }
            Ok(())
        }
    }

    let mut search = Search {
        el: &el,
        compat: &compat,
        best: MinStar {
            interior: Side::full(n),
            star: Vec::new(),
        },
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    if m > 0 {
        search.rec(&Side::full(n), &Side::full(m))?;
    }
    Ok(search.best)
}
