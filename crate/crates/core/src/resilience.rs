//! Resilience of orientations and the local-induction criterion.
//!
//! An orientation is `k`-resilient if no `k` or fewer of its elements have
//! small sides covering the ground set. It is `k`-locally `ℓ`-induced if every
//! `k` maximal elements are induced with margin 1 by a function that loses at
//! most `ℓ` on every other element. Summing those local functions induces the
//! whole orientation once `k(ℓ + 1) > mℓ`.

use num_traits::{One, Signed, Zero};

use crate::error::{input, invariant, Error, Result};
use crate::exactlp::{int, solve_feasibility, FeasibilityResult, Rational};
use crate::inducers::{build_matrix, induces, WeightFunction};
use crate::orientations::cover::CoverSearch;
use crate::orientations::{maximal_elements, Orientation};
use crate::separation::OrientedSeparation;
use crate::side::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResilienceValue {
    /// `k`-resilient but not `(k+1)`-resilient.
    Finite(usize),
    /// At least `cap`-resilient; the search stopped there.
    AtLeast(usize),
    /// No subset has small sides covering the ground set.
    Infinite,
}

impl ResilienceValue {
    /// Whether this value certifies `k`-resilience.
    pub fn is_at_least(&self, k: usize) -> bool {
        match *self {
            ResilienceValue::Finite(r) | ResilienceValue::AtLeast(r) => r >= k,
            ResilienceValue::Infinite => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resilience {
    pub value: ResilienceValue,
    /// For a finite value `k`: `k + 1` maximal elements whose small sides cover the ground set.
    pub cover: Vec<OrientedSeparation>,
}

/// The resilience of `tau`, searching covers of at most `cap` maximal elements.
pub fn resilience(tau: &Orientation, cap: usize) -> Result<Resilience> {
    if cap == 0 {
        return input("resilience cap must be at least 1");
    }
    let mu = maximal_elements(tau);
    let n = tau.ground_size();
    let mut union = Side::empty(n);
    for s in &mu {
        union.union_with(s.small());
    }
    if !union.is_full() {
        return Ok(Resilience {
            value: ResilienceValue::Infinite,
            cover: Vec::new(),
        });
    }
    let smalls: Vec<Side> = mu.iter().map(|s| s.small().clone()).collect();
    match CoverSearch::new(n, &smalls).min_cover(cap) {
        Some(found) => Ok(Resilience {
            value: ResilienceValue::Finite(found.len() - 1),
            cover: found.into_iter().map(|i| mu[i].clone()).collect(),
        }),
        None => Ok(Resilience {
            value: ResilienceValue::AtLeast(cap),
            cover: Vec::new(),
        }),
    }
}

/// One local inducer per `k`-subset of the maximal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalWitnessSet {
    pub k: usize,
    pub ell: Rational,
    pub maximal: Vec<OrientedSeparation>,
    /// Index sets into `maximal`, in lexicographic order.
    pub subsets: Vec<Vec<usize>>,
    pub weights: Vec<WeightFunction>,
}

/// A subset of maximal elements with no local inducer, and the LP certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCounterexample {
    pub subset: Vec<usize>,
    pub elements: Vec<OrientedSeparation>,
    /// Weights on the maximal elements: `y ≥ 0`, `Qy ≤ 0`, `bᵀy > 0`.
    pub certificate: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalInduction {
    Witnesses(LocalWitnessSet),
    Counterexample(LocalCounterexample),
}

fn combinations(m: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (r <= m).then(|| (0..r).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = r;
        while i > 0 {
            i -= 1;
            if succ[i] < m - r + i {
                succ[i] += 1;
                for j in i + 1..r {
                    succ[j] = succ[j - 1] + 1;
                }
                next = Some(succ);
                break;
            }
        }
        Some(cur)
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Decides whether `tau` is `k`-locally `ell`-induced by solving one LP per
/// `k`-subset of its maximal elements (just one when there are at most `k`).
/// `budget` caps the number of LPs.
pub fn is_locally_induced(tau: &Orientation, k: usize, ell: &Rational, budget: u64) -> Result<LocalInduction> {
    if k == 0 {
        return input("k must be at least 1");
    }
    if ell.is_negative() {
        return input("ℓ must be non-negative");
    }
    let mu = maximal_elements(tau);
    let m = mu.len();
    let size = k.min(m);
    let total = binomial(m, size);
    let q = build_matrix(&mu, tau.ground_size());
    let mut out = LocalWitnessSet {
        k,
        ell: ell.clone(),
        maximal: mu.clone(),
        subsets: Vec::new(),
        weights: Vec::new(),
    };
    for (done, subset) in combinations(m, size).enumerate() {
        if done as u64 >= budget {
            return Err(Error::Resource(format!(
                "local induction stopped after {done} of {total} linear programs"
            )));
        }
        let mut b = vec![-ell.clone(); m];
        for &j in &subset {
            b[j] = Rational::one();
        }
        match solve_feasibility(&q, &b)? {
            FeasibilityResult::Feasible(x) => {
                out.subsets.push(subset);
                out.weights.push(WeightFunction::new(x)?);
            }
            FeasibilityResult::Infeasible(y) => {
                return Ok(LocalInduction::Counterexample(LocalCounterexample {
                    elements: subset.iter().map(|&j| mu[j].clone()).collect(),
                    subset,
                    certificate: y,
                }));
            }
        }
    }
    Ok(LocalInduction::Witnesses(out))
}

/// Whether the parameters guarantee that the summed local inducers induce `tau`.
pub fn combination_guaranteed(k: usize, m: usize, ell: &Rational) -> bool {
    k >= m || int(k as i64) * (ell + Rational::one()) > int(m as i64) * ell
}

/// The pointwise sum of all local inducers. When `k ≥ m` or `k(ℓ+1) > mℓ`
/// the sum is checked to induce `tau`.
pub fn combined_weight(witnesses: &LocalWitnessSet, tau: &Orientation) -> Result<WeightFunction> {
    let n = tau.ground_size();
    let m = witnesses.maximal.len();
    let expected = binomial(m, witnesses.k.min(m));
    if witnesses.weights.len() as u128 != expected || witnesses.subsets.len() != witnesses.weights.len() {
        return input(format!(
            "witness set has {} functions, expected {expected}",
            witnesses.weights.len()
        ));
    }
    let mut sum = WeightFunction::zero(n);
    for w in &witnesses.weights {
        sum = sum.add(w)?;
    }
    if combination_guaranteed(witnesses.k, m, &witnesses.ell) && !induces(&sum, tau) {
        return invariant("summed local inducers do not induce the orientation");
    }
    Ok(sum)
}

/// Output of [`top_k_cover_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopKCover {
    /// Indices into the maximal elements of the `k` heaviest ones.
    pub top: Vec<usize>,
    /// A point outside all their small sides.
    pub point: usize,
    /// `w′` summed over maximal elements with the point on the big side.
    pub big_weight: Rational,
    /// `w′` summed over maximal elements with the point on the small side.
    pub small_weight: Rational,
}

/// For a `k`-resilient `tau` with `2k > m` and a non-zero weighting `w′` of
/// its maximal elements, finds a point `v` with `w′(C(v)) < w′(D(v))`, where
/// `C(v)` and `D(v)` collect the maximal elements having `v` on their small
/// and big side respectively.
pub fn top_k_cover_check(tau: &Orientation, w: &WeightFunction, k: usize) -> Result<TopKCover> {
    let mu = maximal_elements(tau);
    let m = mu.len();
    if w.len() != m {
        return input(format!("weighting has {} entries for {m} maximal elements", w.len()));
    }
    if !w.is_nonzero() {
        return input("weighting of the maximal elements must be non-zero");
    }
    if k == 0 || 2 * k <= m {
        return input(format!("need 2k > m, got k = {k}, m = {m}"));
    }
    if !resilience(tau, k)?.value.is_at_least(k) {
        return input(format!("orientation is not {k}-resilient"));
    }
    let vals = w.values();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| vals[b].cmp(&vals[a]).then(a.cmp(&b)));
    let mut top: Vec<usize> = order.into_iter().take(k).collect();
    top.sort_unstable();
    let mut union = Side::empty(tau.ground_size());
    for &j in &top {
        union.union_with(mu[j].small());
    }
    let Some(point) = union.complement().iter().next() else {
        return invariant("small sides of at most k maximal elements cover the ground set");
    };
    let mut big_weight = Rational::zero();
    let mut small_weight = Rational::zero();
    for (j, s) in mu.iter().enumerate() {
        if s.big().contains(point) {
            big_weight += &vals[j];
        }
        if s.small().contains(point) {
            small_weight += &vals[j];
        }
    }
    if small_weight >= big_weight {
        return invariant("top-k point does not favour its big sides");
    }
    Ok(TopKCover {
        top,
        point,
        big_weight,
        small_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::separation::{GroundSet, Separation};
    use crate::system::SeparationSystem;
    use std::sync::Arc;

    fn singletons_toward(n: usize, x: Option<usize>) -> Orientation {
        let seps = (0..n)
            .map(|i| Separation::bipartition(Side::from_indices(n, [i]).unwrap()))
            .collect();
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap());
        Orientation::from_fn(sys, |s| {
            let c = s.canonical();
            let toward_big = match x {
                Some(x) => c.big().contains(x),
                None => c.small().count() < c.big().count(),
            };
            if toward_big {
                c.clone()
            } else {
                c.inverse()
            }
        })
        .unwrap()
    }

    #[test]
    fn combinations_in_lex_order() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn principal_is_infinitely_resilient() {
        let tau = singletons_toward(4, Some(2));
        assert_eq!(resilience(&tau, 4).unwrap().value, ResilienceValue::Infinite);
    }

    #[test]
    fn majority_of_singletons_on_five_points() {
        // all five singletons are needed to cover
        let tau = singletons_toward(5, None);
        let r = resilience(&tau, 5).unwrap();
        assert_eq!(r.value, ResilienceValue::Finite(4));
        assert_eq!(r.cover.len(), 5);
        assert_eq!(resilience(&tau, 3).unwrap().value, ResilienceValue::AtLeast(3));
        assert!(resilience(&tau, 0).is_err());
    }

    #[test]
    fn local_induction_of_resilient_orientation() {
        let tau = singletons_toward(5, None);
        for k in 1..=5 {
            match is_locally_induced(&tau, k, &int(1), 1000).unwrap() {
                LocalInduction::Witnesses(ws) => {
                    assert_eq!(ws.weights.len() as u128, binomial(5, k));
                    let w = combined_weight(&ws, &tau).unwrap();
                    if combination_guaranteed(k, 5, &int(1)) {
                        assert!(induces(&w, &tau));
                    }
                }
                LocalInduction::Counterexample(c) => panic!("k={k}: {c:?}"),
            }
        }
        assert!(matches!(is_locally_induced(&tau, 2, &int(1), 3), Err(Error::Resource(_))));
    }

    #[test]
    fn top_k_examples() {
        let tau = singletons_toward(3, Some(2));
        let w = WeightFunction::new(vec![int(7)]).unwrap();
        let r = top_k_cover_check(&tau, &w, 1).unwrap();
        assert_eq!(r.point, 2);
        assert!(top_k_cover_check(&tau, &WeightFunction::zero(1), 1).is_err());
    }
}
