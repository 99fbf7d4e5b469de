use std::sync::Arc;

use super::Orientation;
use crate::error::{Error, Result};
use crate::separation::OrientedSeparation;
use crate::system::SeparationSystem;

/// Which orientations [`enumerate_orientations`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomFilter {
    Any,
    Consistent,
    Regular,
    Profile,
    RegularProfile,
    Tangle,
}

impl std::str::FromStr for AxiomFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "any" | "none" => AxiomFilter::Any,
            "consistent" => AxiomFilter::Consistent,
            "regular" => AxiomFilter::Regular,
            "profile" => AxiomFilter::Profile,
            "regular-profile" => AxiomFilter::RegularProfile,
            "tangle" => AxiomFilter::Tangle,
            other => return Err(Error::Input(format!("unknown axiom filter `{other}`"))),
        })
    }
}

type Choice = (usize, bool);

/// Forbidden combinations of choices, each stored under the last position it mentions.
struct Nogoods {
    at: Vec<Vec<Vec<Choice>>>,
}

impl Nogoods {
    fn new(len: usize) -> Self {
        Nogoods {
            at: vec![Vec::new(); len],
        }
    }

    fn add(&mut self, mut set: Vec<Choice>) {
        set.sort_unstable();
        set.dedup();
        // two different flags on one separation can never both hold
        if set.windows(2).any(|w| w[0].0 == w[1].0) {
            return;
        }
        let last = set.last().expect("non-empty nogood").0;
        self.at[last].push(set);
    }
}

fn build_nogoods(sys: &SeparationSystem, filter: AxiomFilter) -> Nogoods {
    let n = sys.len();
    let seps = sys.separations();
    let mut ng = Nogoods::new(n);
    let choices: Vec<Choice> = (0..n)
        .flat_map(|i| {
            if seps[i].is_degenerate() {
                vec![(i, false)]
            } else {
                vec![(i, false), (i, true)]
            }
        })
        .collect();
    let el = |c: Choice| seps[c.0].oriented(c.1);
    // all choices realizing a given oriented separation (both flags when degenerate)
    let realize = |o: &OrientedSeparation| -> Vec<Choice> {
        match sys.index_of_oriented(o) {
            None => vec![],
            Some(i) if seps[i].is_degenerate() => vec![(i, false)],
            Some(i) => vec![(i, *o != *seps[i].canonical())],
        }
    };
    let regular = matches!(filter, AxiomFilter::Regular | AxiomFilter::RegularProfile);
    let consistent = !matches!(filter, AxiomFilter::Any | AxiomFilter::Regular);
    let profile = matches!(filter, AxiomFilter::Profile | AxiomFilter::RegularProfile);
    let tangle = filter == AxiomFilter::Tangle;

    if regular {
        for &c in &choices {
            if el(c).is_cosmall() {
                ng.add(vec![c]);
            }
        }
    }
    if consistent {
        for &r in &choices {
            let inv = el(r).inverse();
            for &s in &choices {
                if r.0 != s.0 && inv.lt(&el(s)) {
                    ng.add(vec![r, s]);
                }
            }
        }
    }
    if profile {
        for (x, &s) in choices.iter().enumerate() {
            for &t in &choices[x + 1..] {
                if s.0 == t.0 {
                    continue;
                }
                let meet = el(s).inverse().meet_unchecked(&el(t).inverse());
                for u in realize(&meet) {
                    ng.add(vec![s, t, u]);
                }
            }
        }
    }
    if tangle {
        let full = |a: &OrientedSeparation, b: &OrientedSeparation, c: &OrientedSeparation| {
            a.small().union(b.small()).union(c.small()).is_full()
        };
        for (x, &a) in choices.iter().enumerate() {
            let ea = el(a);
            for (y, &b) in choices.iter().enumerate().skip(x) {
                let eb = el(b);
                for &c in &choices[y..] {
                    if full(&ea, &eb, &el(c)) {
                        ng.add(vec![a, b, c]);
                    }
                }
            }
        }
    }
    ng
}

/// All orientations of `sys` passing `filter`, found by backtracking with
/// pruning on partial assignments. `budget` caps the number of search nodes.
pub fn enumerate_orientations(
    sys: &Arc<SeparationSystem>,
    filter: AxiomFilter,
    budget: u64,
) -> Result<Vec<Orientation>> {
    let n = sys.len();
    let nogoods = build_nogoods(sys, filter);
    let degenerate: Vec<bool> = sys.separations().iter().map(|s| s.is_degenerate()).collect();
    let mut flags = vec![false; n];
    let mut out = Vec::new();
    let mut nodes = 0u64;

    fn violated(ng: &[Vec<Choice>], flags: &[bool]) -> bool {
        ng.iter().any(|set| set.iter().all(|&(i, f)| flags[i] == f))
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        flags: &mut Vec<bool>,
        degenerate: &[bool],
        nogoods: &Nogoods,
        nodes: &mut u64,
        budget: u64,
        sys: &Arc<SeparationSystem>,
        out: &mut Vec<Orientation>,
    ) -> Result<()> {
        if pos == flags.len() {
            out.push(Orientation::from_flags(sys.clone(), flags.clone())?);
            return Ok(());
        }
        let options: &[bool] = if degenerate[pos] { &[false] } else { &[false, true] };
        for &f in options {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::Resource(format!(
                    "orientation enumeration exceeded {budget} search nodes ({} found so far)",
                    out.len()
                )));
            }
            flags[pos] = f;
            if !violated(&nogoods.at[pos], flags) {
                rec(pos + 1, flags, degenerate, nogoods, nodes, budget, sys, out)?;
            }
        }
        flags[pos] = false;
        Ok(())
    }

    rec(0, &mut flags, &degenerate, &nogoods, &mut nodes, budget, sys, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::orientations::{is_consistent, is_profile, is_regular, is_tangle};
    use crate::separation::{all_separations, GroundSet, Separation};

    fn singleton_system() -> Arc<SeparationSystem> {
        let seps = (0..3)
            .map(|i| {
                let rest: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                Separation::from_indices(3, &[i], &rest).unwrap()
            })
            .collect();
        Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap())
    }

    fn passes(tau: &Orientation, filter: AxiomFilter) -> bool {
        match filter {
            AxiomFilter::Any => true,
            AxiomFilter::Consistent => is_consistent(tau),
            AxiomFilter::Regular => is_regular(tau),
            AxiomFilter::Profile => is_profile(tau),
            AxiomFilter::RegularProfile => is_profile(tau) && is_regular(tau),
            AxiomFilter::Tangle => is_tangle(tau),
        }
    }

    #[test]
    fn singleton_tangles_are_the_three_principal_ones() {
        let sys = singleton_system();
        let tangles = enumerate_orientations(&sys, AxiomFilter::Tangle, 1_000).unwrap();
        assert_eq!(tangles.len(), 3);
        for t in &tangles {
            // exactly one big side is a singleton: the principal point
            let bigs: Vec<_> = t.elements().iter().filter(|e| e.big().count() == 1).collect();
            assert_eq!(bigs.len(), 1);
        }
    }

    #[test]
    fn unfiltered_count() {
        let seps = vec![
            Separation::from_indices(3, &[0], &[1, 2]).unwrap(),
            Separation::from_indices(3, &[1], &[0, 2]).unwrap(),
        ];
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap());
        assert_eq!(enumerate_orientations(&sys, AxiomFilter::Any, 100).unwrap().len(), 4);
    }

    #[test]
    fn regularity_forces_small_orientation() {
        let seps = vec![Separation::from_indices(3, &[], &[0, 1, 2]).unwrap()];
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap());
        let found = enumerate_orientations(&sys, AxiomFilter::RegularProfile, 100).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].get(0).small().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let sys = Arc::new(
            SeparationSystem::new(GroundSet::new(3).unwrap(), all_separations(3), OrderSpec::Standard).unwrap(),
        );
        assert!(matches!(
            enumerate_orientations(&sys, AxiomFilter::Any, 100),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn pruned_search_matches_filtering_all() {
        for n in 2..=3 {
            let sys = Arc::new(
                SeparationSystem::new(GroundSet::new(n).unwrap(), all_separations(n), OrderSpec::Standard).unwrap(),
            );
            let everything = enumerate_orientations(&sys, AxiomFilter::Any, 1 << 20).unwrap();
            for filter in [
                AxiomFilter::Consistent,
                AxiomFilter::Regular,
                AxiomFilter::Profile,
                AxiomFilter::RegularProfile,
                AxiomFilter::Tangle,
            ] {
                let expected: Vec<_> = everything.iter().filter(|t| passes(t, filter)).cloned().collect();
                let got = enumerate_orientations(&sys, filter, 1 << 20).unwrap();
                assert_eq!(got, expected, "n={n} filter={filter:?}");
            }
        }
    }
}
