//! Named instance families: each returns a separation system together with
//! its designated orientation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{input, invariant, Error, Result};
use crate::order::OrderSpec;
use crate::orientations::Orientation;
use crate::separation::{all_bipartitions, GroundSet, OrientedSeparation, Separation};
use crate::side::Side;
use crate::system::SeparationSystem;

/// Which generator produced an instance, and with what parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub generator: String,
    pub params: BTreeMap<String, u64>,
}

impl Provenance {
    fn new(generator: &str, params: &[(&str, u64)]) -> Self {
        Provenance {
            generator: generator.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub system: Arc<SeparationSystem>,
    pub orientation: Orientation,
    pub provenance: Provenance,
}

/// All bipartitions of an `n`-set, each oriented with `x` on the big side.
pub fn gen_principal(n: usize, x: usize) -> Result<Instance> {
    if n < 2 {
        return input("principal instances need n ≥ 2");
    }
    if x >= n {
        return input(format!("point {x} is outside a ground set of size {n}"));
    }
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, all_bipartitions(n), OrderSpec::Standard)?);
    let orientation = Orientation::from_fn(sys.clone(), |s| toward(s, |side| side.contains(x)))?;
    Ok(Instance {
        system: sys,
        orientation,
        provenance: Provenance::new("principal", &[("n", n as u64), ("x", x as u64)]),
    })
}

/// The orientation of `s` whose big side satisfies `big`, or the canonical one if neither does.
fn toward(s: &Separation, big: impl Fn(&Side) -> bool) -> OrientedSeparation {
    let c = s.canonical();
    if !big(c.big()) && big(c.small()) {
        c.inverse()
    } else {
        c.clone()
    }
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(m, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

/// Points indexed by (k-subset, copy); `families[i]` holds the points whose subset contains `i`.
fn subset_families(m: usize, k: usize, copies: usize) -> (usize, Vec<Side>) {
    let subsets = k_subsets(m, k);
    let n = subsets.len() * copies;
    let mut families = vec![Side::empty(n); m];
    for (idx, sub) in subsets.iter().enumerate() {
        for &i in sub {
            for c in 0..copies {
                families[i].insert(idx * copies + c);
            }
        }
    }
    (n, families)
}

/// `m` separations of the 3-subsets of `[m]`: the `i`-th has big side all
/// 3-sets containing `i`, so every point lies on exactly three big sides.
pub fn gen_intro(m: usize) -> Result<Instance> {
    if m < 3 {
        return input("the intro construction needs m ≥ 3");
    }
    let (n, families) = subset_families(m, 3, 1);
    let maximal: Vec<OrientedSeparation> = families
        .iter()
        .map(|b| OrientedSeparation::bipartition(b.complement()))
        .collect();
    let seps: Vec<Separation> = maximal.iter().map(OrientedSeparation::underlying).collect();
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, OrderSpec::Standard)?);
    let orientation = Orientation::from_elements(sys.clone(), maximal)?;
    Ok(Instance {
        system: sys,
        orientation,
        provenance: Provenance::new("intro", &[("m", m as u64)]),
    })
}

/// The tangle `τ_{m,k}` on the `k`-subsets of `[m]` (each repeated `copies` times).
///
/// Bipartitions are ordered by the number of families `V_i` they cross. The
/// orientation points every bipartition of order `< m` toward the side that
/// contains a whole `V_i`. Only the `m` maximal elements `(V ∖ V_i, V_i)` are
/// materialized in [`TauMk::instance`]; [`TauMk::orient`] answers for any
/// other bipartition.
#[derive(Debug, Clone)]
pub struct TauMk {
    pub m: usize,
    pub k: usize,
    pub copies: usize,
    pub families: Vec<Side>,
    pub instance: Instance,
}

pub fn gen_tau_mk(m: usize, k: usize, ell: Option<u64>) -> Result<TauMk> {
    if k < 3 || k > m {
        return input(format!("need 3 ≤ k ≤ m, got m = {m}, k = {k}"));
    }
    if ell == Some(0) {
        return input("ℓ must be at least 1");
    }
    let copies = ell.unwrap_or(1) as usize;
    let (n, families) = subset_families(m, k, copies);
    let maximal: Vec<OrientedSeparation> = families
        .iter()
        .map(|b| OrientedSeparation::bipartition(b.complement()))
        .collect();
    let seps: Vec<Separation> = maximal.iter().map(OrientedSeparation::underlying).collect();
    let order = OrderSpec::Crossing {
        families: families.clone(),
    };
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, order)?);
    let orientation = Orientation::from_elements(sys.clone(), maximal)?;
    let mut params = vec![("m", m as u64), ("k", k as u64)];
    if let Some(l) = ell {
        params.push(("ell", l));
    }
    Ok(TauMk {
        m,
        k,
        copies,
        families,
        instance: Instance {
            system: sys,
            orientation,
            provenance: Provenance::new("tau-mk", &params),
        },
    })
}

impl TauMk {
    pub fn ground_size(&self) -> usize {
        self.instance.system.ground_size()
    }

    /// Orientation of a bipartition under `τ_{m,k}`, or `None` if it is not a
    /// bipartition or has order `≥ m`.
    pub fn orient(&self, s: &Separation) -> Option<OrientedSeparation> {
        if !s.is_bipartition() || s.ground_len() != self.ground_size() {
            return None;
        }
        let c = s.canonical();
        let inside = |side: &Side| self.families.iter().any(|f| f.is_subset(side));
        match (inside(c.small()), inside(c.big())) {
            (false, true) => Some(c.clone()),
            (true, false) => Some(c.inverse()),
            _ => None,
        }
    }

    /// All bipartitions of order `< m` with their orientation. Refuses when
    /// the ground set has more than `max_points` elements.
    pub fn materialize(&self, max_points: usize) -> Result<Instance> {
        let n = self.ground_size();
        if n > max_points || n > 24 {
            return Err(Error::Resource(format!(
                "materializing all bipartitions of {n} points exceeds the limit of {}",
                max_points.min(24)
            )));
        }
        let mut seps = Vec::new();
        let mut elements = Vec::new();
        for s in all_bipartitions(n) {
            if let Some(o) = self.orient(&s) {
                seps.push(s);
                elements.push(o);
            }
        }
        let order = OrderSpec::Crossing {
            families: self.families.clone(),
        };
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, order)?);
        let orientation = Orientation::from_elements(sys.clone(), elements)?;
        let mut prov = self.instance.provenance.clone();
        prov.params.insert("materialized".into(), 1);
        Ok(Instance {
            system: sys,
            orientation,
            provenance: prov,
        })
    }
}

/// Bipartitions of an `n`-set with a side of fewer than `n/3` points, each
/// oriented toward its larger side.
pub fn gen_thirds(n: usize) -> Result<Instance> {
    if n < 4 {
        return input("the thirds construction needs n ≥ 4");
    }
    if n > 30 {
        return Err(Error::Resource(format!("{n} points are too many to enumerate bipartitions")));
    }
    let seps: Vec<Separation> = all_bipartitions(n)
        .into_iter()
        .filter(|s| 3 * s.canonical().small().count().min(s.canonical().big().count()) < n)
        .collect();
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, OrderSpec::Standard)?);
    let orientation = Orientation::from_fn(sys.clone(), |s| {
        let c = s.canonical();
        if c.small().count() < c.big().count() {
            c.clone()
        } else {
            c.inverse()
        }
    })?;
    Ok(Instance {
        system: sys,
        orientation,
        provenance: Provenance::new("thirds", &[("n", n as u64)]),
    })
}

/// Vertex `r * n + c` is adjacent to its horizontal and vertical neighbours.
pub fn grid_adjacency(n: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n * n];
    for r in 0..n {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                adj[v].push(v + 1);
                adj[v + 1].push(v);
            }
            if r + 1 < n {
                adj[v].push(v + n);
                adj[v + n].push(v);
            }
        }
    }
    adj
}

/// Connected components of the graph minus `removed`, each as a set of vertices.
pub fn components(adj: &[Vec<usize>], removed: &Side) -> Vec<Side> {
    let n = adj.len();
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = Side::empty(n);
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &u in &adj[v] {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// All separations `{A, B}` of a graph with `|A ∩ B| ≤ max_order`, built as a
/// separator `Z` plus a 2-colouring of the components of `G − Z`.
pub fn graph_separations(adj: &[Vec<usize>], max_order: usize, budget: usize) -> Result<Vec<Separation>> {
    let n = adj.len();
    let mut out = Vec::new();
    for size in 0..=max_order.min(n) {
        for z in k_subsets(n, size) {
            let zs = Side::from_indices(n, z)?;
            let comps = components(adj, &zs);
            if comps.is_empty() {
                out.push(Separation::from_oriented(OrientedSeparation::new(zs.clone(), zs.clone())?));
                continue;
            }
            // the first component stays on side A, so each unordered pair appears once
            for mask in 0u64..(1u64 << (comps.len() - 1)) {
                let mut a = zs.clone();
                let mut b = zs.clone();
                for (i, comp) in comps.iter().enumerate() {
                    if i > 0 && mask >> (i - 1) & 1 == 1 {
                        b.union_with(comp);
                    } else {
                        a.union_with(comp);
                    }
                }
                out.push(Separation::new(a, b)?);
                if out.len() > budget {
                    return Err(Error::Resource(format!(
                        "graph separation enumeration exceeded {budget} separations"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// Separations of order at most 4 of the `n × n` grid, oriented toward the
/// side with more vertices. `budget` caps the number of separations.
pub fn gen_grid(n: usize, budget: usize) -> Result<Instance> {
    if n < 5 {
        return input("the grid instance needs n ≥ 5");
    }
    if n > 8 {
        return Err(Error::Resource(format!("a {n}×{n} grid is beyond the enumeration limit")));
    }
    let adj = grid_adjacency(n);
    let seps = graph_separations(&adj, 4, budget)?;
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n * n)?, seps, OrderSpec::Standard)?);
    let mut flags = Vec::with_capacity(sys.len());
    for s in sys.separations() {
        let c = s.canonical();
        let (a, b) = (c.small().count(), c.big().count());
        if a == b {
            return invariant(format!("grid separation {s:?} has equal sides"));
        }
        flags.push(a > b);
    }
    let orientation = Orientation::from_flags(sys.clone(), flags)?;
    Ok(Instance {
        system: sys,
        orientation,
        provenance: Provenance::new("grid", &[("n", n as u64)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientations::{is_tangle, maximal_elements};

    #[test]
    fn principal_counts() {
        let inst = gen_principal(3, 2).unwrap();
        assert_eq!(inst.system.len(), 4);
        assert!(is_tangle(&inst.orientation));
        assert!(gen_principal(3, 3).is_err());
        assert!(gen_principal(1, 0).is_err());
    }

    #[test]
    fn intro_sizes_and_star_property() {
        let inst = gen_intro(6).unwrap();
        assert_eq!(inst.system.ground_size(), 20);
        assert_eq!(inst.system.len(), 6);
        for s in inst.orientation.elements() {
            assert_eq!(s.big().count(), 10);
        }
        for v in 0..20 {
            let count = inst.orientation.elements().iter().filter(|s| s.big().contains(v)).count();
            assert_eq!(count, 3);
        }
    }

    #[test]
    fn tau_mk_matches_materialized_maximal_elements() {
        for (m, k) in [(4, 3), (5, 3), (5, 4)] {
            let t = gen_tau_mk(m, k, None).unwrap();
            let full = t.materialize(16).unwrap();
            let mut got = maximal_elements(&full.orientation);
            got.sort_by(|a, b| a.canonical_cmp(b));
            let mut want = t.instance.orientation.elements().to_vec();
            want.sort_by(|a, b| a.canonical_cmp(b));
            assert_eq!(got, want, "m={m} k={k}");
            // every materialized separation has crossing order < m
            for s in full.system.separations() {
                assert!(full.system.order_spec().order(s).unwrap() < m as u64);
            }
            assert!(is_tangle(&full.orientation));
        }
    }

    #[test]
    fn tau_mk_parameters() {
        assert!(gen_tau_mk(5, 2, None).is_err());
        assert!(gen_tau_mk(3, 4, None).is_err());
        assert!(gen_tau_mk(5, 3, Some(0)).is_err());
        let t = gen_tau_mk(5, 3, Some(2)).unwrap();
        assert_eq!(t.ground_size(), 20);
    }

    #[test]
    fn thirds_of_six() {
        let inst = gen_thirds(6).unwrap();
        assert_eq!(inst.system.len(), 7);
        assert_eq!(maximal_elements(&inst.orientation).len(), 6);
    }

    #[test]
    fn graph_separations_are_genuine() {
        let adj = grid_adjacency(5);
        let seps = graph_separations(&adj, 2, 100_000).unwrap();
        for s in &seps {
            let c = s.canonical();
            let a_only = c.small().difference(c.big());
            let b_only = c.big().difference(c.small());
            for v in a_only.iter() {
                assert!(adj[v].iter().all(|&u| !b_only.contains(u)));
            }
        }
    }
}
