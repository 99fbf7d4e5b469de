//! Bounded set-cover search: can at most `r` of the given sets cover the ground set?
//!
//! Used both for the tangle triple condition (`r = 3`) and for resilience.

use crate::side::Side;

pub(crate) struct CoverSearch<'a> {
    universe: usize,
    sets: &'a [Side],
    /// Indices of inclusion-maximal sets (one representative per distinct set).
    kept: Vec<usize>,
    /// For each element, the kept sets containing it.
    by_element: Vec<Vec<usize>>,
}

impl<'a> CoverSearch<'a> {
    pub(crate) fn new(universe: usize, sets: &'a [Side]) -> Self {
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| sets[b].count().cmp(&sets[a].count()).then(a.cmp(&b)));
        let mut kept: Vec<usize> = Vec::new();
        for i in order {
            if !kept.iter().any(|&k| sets[i].is_subset(&sets[k])) {
                kept.push(i);
            }
        }
        kept.sort_unstable();
        let mut by_element = vec![Vec::new(); universe];
        for (pos, &i) in kept.iter().enumerate() {
            for e in sets[i].iter() {
                by_element[e].push(pos);
            }
        }
        CoverSearch {
            universe,
            sets,
            kept,
            by_element,
        }
    }

    /// Indices (into the original slice) of at most `r` sets covering the ground set.
    pub(crate) fn find(&self, r: usize) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(r);
        let covered = Side::empty(self.universe);
        if self.search(&covered, r, &mut chosen) {
            Some(chosen.into_iter().map(|p| self.kept[p]).collect())
        } else {
            None
        }
    }

    /// Smallest number of sets covering the ground set, searching sizes `1..=cap`.
    pub(crate) fn min_cover(&self, cap: usize) -> Option<Vec<usize>> {
        (1..=cap).find_map(|r| self.find(r))
    }

    fn search(&self, covered: &Side, r: usize, chosen: &mut Vec<usize>) -> bool {
        if covered.is_full() {
            return true;
        }
        if r == 0 {
            return false;
        }
        let missing = self.universe - covered.count();
        // upper bound on what r more sets can add
        let mut top: Vec<usize> = Vec::with_capacity(r + 1);
        for &i in &self.kept {
            let gain = self.sets[i].difference_count(covered);
            if top.len() < r || gain > top[top.len() - 1] {
                let at = top.partition_point(|&g| g >= gain);
                top.insert(at, gain);
                top.truncate(r);
            }
        }
        if top.iter().sum::<usize>() < missing {
            return false;
        }
        // branch on the uncovered element contained in the fewest sets
        let pivot = (0..self.universe)
            .filter(|&e| !covered.contains(e))
            .min_by_key(|&e| self.by_element[e].len())
            .expect("an uncovered element exists");
        let mut candidates = self.by_element[pivot].clone();
        candidates.sort_by_key(|&p| std::cmp::Reverse(self.sets[self.kept[p]].difference_count(covered)));
        for p in candidates {
            chosen.push(p);
            let next = covered.union(&self.sets[self.kept[p]]);
            if self.search(&next, r - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(universe: usize, sets: &[Side], r: usize) -> bool {
        // all subsets of size <= r
        fn rec(sets: &[Side], start: usize, r: usize, acc: &Side) -> bool {
            if acc.is_full() {
                return true;
            }
            if r == 0 {
                return false;
            }
            (start..sets.len()).any(|i| rec(sets, i + 1, r - 1, &acc.union(&sets[i])))
        }
        rec(sets, 0, r, &Side::empty(universe))
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..9);
            let count = rng.gen_range(0..9);
            let sets: Vec<Side> = (0..count)
                .map(|_| Side::from_mask(n, rng.gen::<u64>() & rng.gen::<u64>()))
                .collect();
            let cs = CoverSearch::new(n, &sets);
            for r in 0..5 {
                let found = cs.find(r);
                assert_eq!(found.is_some(), brute(n, &sets, r));
                if let Some(idx) = found {
                    assert!(idx.len() <= r);
                    let mut u = Side::empty(n);
                    for i in idx {
                        u.union_with(&sets[i]);
                    }
                    assert!(u.is_full());
                }
            }
        }
    }
}
