use num_bigint::BigInt;
use num_rational::BigRational;

use super::cover::CoverSearch;
use super::Orientation;
use crate::error::{input, Result};
use crate::separation::OrientedSeparation;
use crate::side::Side;

/// Indices of the `≤`-maximal elements of `tau`, in increasing index order.
pub fn maximal_indices(tau: &Orientation) -> Vec<usize> {
    let el = tau.elements();
    let mut order: Vec<usize> = (0..el.len()).collect();
    // anything strictly above an element sorts before it
    order.sort_by(|&a, &b| {
        el[b].small()
            .count()
            .cmp(&el[a].small().count())
            .then(el[a].big().count().cmp(&el[b].big().count()))
            .then(a.cmp(&b))
    });
    let mut maximal: Vec<usize> = Vec::new();
    for i in order {
        if !maximal.iter().any(|&m| el[i].lt(&el[m])) {
            maximal.push(i);
        }
    }
    maximal.sort_unstable();
    maximal
}

pub fn maximal_elements(tau: &Orientation) -> Vec<OrientedSeparation> {
    maximal_indices(tau)
        .into_iter()
        .map(|i| tau.get(i).clone())
        .collect()
}

/// A pair `r, s ∈ τ` over distinct separations with `r̄ < s`, if one exists.
pub fn consistency_violation(tau: &Orientation) -> Option<[OrientedSeparation; 2]> {
    let el = tau.elements();
    let maximal = maximal_indices(tau);
    for (i, r) in el.iter().enumerate() {
        let inv = r.inverse();
        // r̄ < s ≤ m for some maximal m; only m = r escapes this, which forces r co-small
        if let Some(&m) = maximal.iter().find(|&&m| m != i && inv.lt(&el[m])) {
            return Some([r.clone(), el[m].clone()]);
        }
        if r.is_cosmall() {
            if let Some(s) = el.iter().enumerate().find(|&(j, s)| j != i && inv.lt(s)) {
                return Some([r.clone(), s.1.clone()]);
            }
        }
    }
    None
}

pub fn is_consistent(tau: &Orientation) -> bool {
    consistency_violation(tau).is_none()
}

/// Why an orientation fails to be a profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileViolation {
    Inconsistent([OrientedSeparation; 2]),
    /// Distinct `s, t ∈ τ` whose meet of inverses also lies in `τ`.
    Meet {
        s: OrientedSeparation,
        t: OrientedSeparation,
        meet: OrientedSeparation,
    },
}

pub fn profile_violation(tau: &Orientation) -> Option<ProfileViolation> {
    if let Some(w) = consistency_violation(tau) {
        return Some(ProfileViolation::Inconsistent(w));
    }
    let el = tau.elements();
    for (i, s) in el.iter().enumerate() {
        for t in &el[i + 1..] {
            let meet = s.inverse().meet_unchecked(&t.inverse());
            if tau.contains(&meet) {
                return Some(ProfileViolation::Meet {
                    s: s.clone(),
                    t: t.clone(),
                    meet,
                });
            }
        }
    }
    None
}

pub fn is_profile(tau: &Orientation) -> bool {
    profile_violation(tau).is_none()
}

/// The first co-small element of `tau`, if any.
pub fn regularity_violation(tau: &Orientation) -> Option<OrientedSeparation> {
    tau.elements().iter().find(|s| s.is_cosmall()).cloned()
}

pub fn is_regular(tau: &Orientation) -> bool {
    regularity_violation(tau).is_none()
}

/// Why an orientation fails to be a tangle: an inconsistent pair, or three
/// (not necessarily distinct) elements whose small sides cover the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangleViolation {
    Inconsistent([OrientedSeparation; 2]),
    Cover([OrientedSeparation; 3]),
}

pub fn tangle_violation(tau: &Orientation) -> Option<TangleViolation> {
    if let Some(w) = consistency_violation(tau) {
        return Some(TangleViolation::Inconsistent(w));
    }
    // small sides only grow going up, so covering triples can be taken among maximal elements
    let maximal = maximal_indices(tau);
    let smalls: Vec<Side> = maximal.iter().map(|&i| tau.get(i).small().clone()).collect();
    let found = CoverSearch::new(tau.ground_size(), &smalls).find(3)?;
    let pick = |k: usize| tau.get(maximal[found[k.min(found.len() - 1)]]).clone();
    Some(TangleViolation::Cover([pick(0), pick(1), pick(2)]))
}

pub fn is_tangle(tau: &Orientation) -> bool {
    tangle_violation(tau).is_none()
}

fn require_bipartitions(tau: &Orientation) -> Result<()> {
    if let Some(s) = tau.elements().iter().find(|s| !s.is_bipartition()) {
        return input(format!("{s:?} is not a bipartition"));
    }
    Ok(())
}

/// `min |B₁ ∩ B₂ ∩ B₃|` over all (not necessarily distinct) triples of `tau`;
/// `None` for the empty orientation.
pub fn max_f_ell(tau: &Orientation) -> Result<Option<usize>> {
    require_bipartitions(tau)?;
    let bigs: Vec<Side> = maximal_indices(tau)
        .into_iter()
        .map(|i| tau.get(i).big().clone())
        .collect();
    let mut best: Option<usize> = None;
    let mut update = |v: usize| best = Some(best.map_or(v, |b| b.min(v)));
    for (i, a) in bigs.iter().enumerate() {
        update(a.count());
        for (j, b) in bigs.iter().enumerate().skip(i + 1) {
            let ab = a.intersection(b);
            update(ab.count());
            for c in &bigs[j + 1..] {
                update(ab.intersection_count(c));
            }
        }
    }
    Ok(best)
}

/// Whether `tau` is consistent and no triple of big sides meets in fewer than `ell` points.
pub fn is_f_ell_tangle(tau: &Orientation, ell: &BigRational) -> Result<bool> {
    let star = max_f_ell(tau)?;
    if !is_consistent(tau) {
        return Ok(false);
    }
    Ok(match star {
        None => true,
        Some(v) => BigRational::from_integer(BigInt::from(v)) >= *ell,
    })
}

/// Every axiom at once, with witnesses for those that fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub consistent: bool,
    pub profile: bool,
    pub regular: bool,
    pub tangle: bool,
    pub consistency_witness: Option<[OrientedSeparation; 2]>,
    pub profile_witness: Option<ProfileViolation>,
    pub regularity_witness: Option<OrientedSeparation>,
    pub tangle_witness: Option<TangleViolation>,
}

impl AxiomReport {
    pub fn check(tau: &Orientation) -> Self {
        let consistency_witness = consistency_violation(tau);
        let profile_witness = profile_violation(tau);
        let regularity_witness = regularity_violation(tau);
        let tangle_witness = tangle_violation(tau);
        AxiomReport {
            consistent: consistency_witness.is_none(),
            profile: profile_witness.is_none(),
            regular: regularity_witness.is_none(),
            tangle: tangle_witness.is_none(),
            consistency_witness,
            profile_witness,
            regularity_witness,
            tangle_witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::separation::{GroundSet, Separation};
    use crate::system::SeparationSystem;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn os(n: usize, a: &[usize], b: &[usize]) -> OrientedSeparation {
        OrientedSeparation::from_indices(n, a, b).unwrap()
    }

    fn orientation(n: usize, elems: Vec<OrientedSeparation>) -> Orientation {
        let sys = SeparationSystem::new(
            GroundSet::new(n).unwrap(),
            elems.iter().map(|e| e.underlying()).collect(),
            OrderSpec::Standard,
        )
        .unwrap();
        Orientation::from_elements(Arc::new(sys), elems).unwrap()
    }

    fn singletons(toward: Option<usize>) -> Orientation {
        // toward = Some(x): principal at x; None: majority
        let elems = (0..3)
            .map(|i| {
                let rest: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                let s = os(3, &[i], &rest);
                match toward {
                    Some(x) if x == i => s.inverse(),
                    _ => s,
                }
            })
            .collect();
        orientation(3, elems)
    }

    #[test]
    fn consistency_examples() {
        let tau = orientation(3, vec![os(3, &[0, 1], &[2]), os(3, &[0, 2], &[1])]);
        let w = consistency_violation(&tau).unwrap();
        assert!(w[0].inverse().lt(&w[1]));
        assert!(is_consistent(&singletons(Some(2))));
        let empty = orientation(3, vec![]);
        assert!(is_consistent(&empty));
    }

    #[test]
    fn profile_examples() {
        let maj = singletons(None);
        assert!(is_consistent(&maj));
        match profile_violation(&maj) {
            Some(ProfileViolation::Meet { s, t, meet }) => {
                assert_eq!(meet, s.inverse().meet(&t.inverse()).unwrap());
                assert!(maj.contains(&meet));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_profile(&singletons(Some(2))));
        let one = orientation(3, vec![os(3, &[0], &[1, 2])]);
        assert!(is_profile(&one));
        let one = orientation(3, vec![os(3, &[1, 2], &[0])]);
        assert!(is_profile(&one));
    }

    #[test]
    fn regularity_examples() {
        assert!(!is_regular(&orientation(3, vec![os(3, &[0, 1, 2], &[])])));
        assert!(is_regular(&singletons(Some(2))));
        assert!(!is_regular(&orientation(3, vec![os(3, &[0, 1, 2], &[0, 1, 2])])));
    }

    #[test]
    fn tangle_examples() {
        match tangle_violation(&singletons(None)) {
            Some(TangleViolation::Cover(t)) => {
                let u = t[0].small().union(t[1].small()).union(t[2].small());
                assert!(u.is_full());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_tangle(&singletons(Some(2))));
    }

    #[test]
    fn maximal_of_principal() {
        let m = maximal_elements(&singletons(Some(2)));
        assert_eq!(m, vec![os(3, &[0, 1], &[2])]);
    }

    #[test]
    fn f_ell_of_principal() {
        assert_eq!(max_f_ell(&singletons(Some(2))).unwrap(), Some(1));
        let nonbip = orientation(3, vec![os(3, &[0, 1], &[1, 2])]);
        assert!(max_f_ell(&nonbip).is_err());
    }

    // brute-force oracles straight from the definitions
    fn brute_consistent(tau: &Orientation) -> bool {
        let el = tau.elements();
        !el.iter().enumerate().any(|(i, r)| {
            el.iter()
                .enumerate()
                .any(|(j, s)| i != j && r.inverse().lt(s))
        })
    }

    fn brute_tangle(tau: &Orientation) -> bool {
        let el = tau.elements();
        if !brute_consistent(tau) {
            return false;
        }
        for a in el {
            for b in el {
                for c in el {
                    if a.small().union(b.small()).union(c.small()).is_full() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn brute_maximal(tau: &Orientation) -> Vec<OrientedSeparation> {
        let el = tau.elements();
        el.iter()
            .filter(|s| !el.iter().any(|t| s.lt(t)))
            .cloned()
            .collect()
    }

    fn random_orientation(rng: &mut impl Rng) -> Orientation {
        let n = rng.gen_range(1..6);
        let count = rng.gen_range(0..9);
        let mut seps = Vec::new();
        for _ in 0..count {
            let mut a = Side::empty(n);
            let mut b = Side::empty(n);
            for i in 0..n {
                match rng.gen_range(0..5) {
                    0 | 1 => a.insert(i),
                    2 | 3 => b.insert(i),
                    _ => {
                        a.insert(i);
                        b.insert(i);
                    }
                }
            }
            seps.push(Separation::new(a, b).unwrap());
        }
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap());
        let flags = (0..sys.len()).map(|_| rng.gen()).collect();
        Orientation::from_flags(sys, flags).unwrap()
    }

    #[test]
    fn fast_checks_agree_with_definitions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3000 {
            let tau = random_orientation(&mut rng);
            assert_eq!(is_consistent(&tau), brute_consistent(&tau), "{tau:?}");
            if let Some([r, s]) = consistency_violation(&tau) {
                assert!(r.inverse().lt(&s) && r.underlying() != s.underlying());
            }
            assert_eq!(is_tangle(&tau), brute_tangle(&tau));
            assert_eq!(maximal_elements(&tau), brute_maximal(&tau));
            let r = AxiomReport::check(&tau);
            if r.tangle {
                assert!(r.consistent && r.profile && r.regular);
            }
        }
    }
}
