use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Signed;
use proptest::prelude::*;
use tangles::exactlp::{int, Rational};
use tangles::generators::{
    gen_grid, gen_intro, gen_principal, gen_tau_mk, gen_thirds, graph_separations, grid_adjacency, k_subsets,
};
use tangles::inducers::{decide_induced, induces, InduceOutcome, WeightFunction};
use tangles::orientations::{is_tangle, maximal_elements};
use tangles::resilience::{
    combination_guaranteed, combined_weight, is_locally_induced, resilience, LocalInduction, ResilienceValue,
};
use tangles::{GroundSet, OrderSpec, Orientation, OrientedSeparation, Separation, SeparationSystem, Side};

fn side(n: usize, bits: u64) -> Side {
    Side::from_indices(n, (0..n).filter(|i| bits >> i & 1 == 1)).unwrap()
}

fn random_orientation(n: usize, raw: &[(u64, u64, bool)]) -> Orientation {
    let seps: Vec<Separation> = raw
        .iter()
        .map(|&(a, b, _)| {
            let a = side(n, a);
            let b = side(n, b).union(&a.complement());
            Separation::new(a, b).unwrap()
        })
        .collect();
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap());
    let flags = (0..sys.len()).map(|i| raw[i % raw.len()].2).collect();
    Orientation::from_flags(sys, flags).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// A weight function inducing s induces every r ≤ s.
    #[test]
    fn induction_is_downward_closed(
        n in 1usize..7,
        w in prop::collection::vec(0i64..6, 6),
        a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), d in any::<u64>(),
    ) {
        let w = WeightFunction::new(w[..n].iter().map(|&x| int(x)).collect()).unwrap();
        let s_small = side(n, a);
        let s = OrientedSeparation::new(s_small.clone(), side(n, b).union(&s_small.complement())).unwrap();
        // shrink the small side and grow the big side
        let r_small = s.small().intersection(&side(n, c));
        let r_big = s.big().union(&side(n, d)).union(&r_small.complement());
        let r = OrientedSeparation::new(r_small, r_big).unwrap();
        prop_assert!(r.le(&s));
        if w.margin(&s).is_positive() {
            prop_assert!(w.margin(&r).is_positive());
        }
    }

    #[test]
    fn maximal_and_full_lps_agree(
        n in 1usize..6,
        raw in prop::collection::vec((any::<u64>(), any::<u64>(), any::<bool>()), 1..8),
    ) {
        let tau = random_orientation(n, &raw);
        let full = decide_induced(&tau, false).unwrap();
        let max = decide_induced(&tau, true).unwrap();
        prop_assert_eq!(full.outcome.is_induced(), max.outcome.is_induced());
        if let InduceOutcome::Induced(w) = &max.outcome {
            prop_assert!(induces(w, &tau));
        }
    }
}

/// Summing local witnesses induces the orientation whenever the parameters
/// guarantee it, and local induction can never hold for a non-induced one.
#[test]
fn local_induction_over_a_parameter_grid() {
    let instances: Vec<(&str, Orientation)> = vec![
        ("tau(5,3)", gen_tau_mk(5, 3, None).unwrap().instance.orientation),
        ("tau(6,3)", gen_tau_mk(6, 3, None).unwrap().instance.orientation),
        ("intro(6)", gen_intro(6).unwrap().orientation),
        ("thirds(6)", gen_thirds(6).unwrap().orientation),
        ("principal(4,1)", gen_principal(4, 1).unwrap().orientation),
    ];
    let ells = [Rational::new(1.into(), 4.into()), Rational::new(1.into(), 2.into()), int(1), int(2)];
    for (name, tau) in &instances {
        let m = maximal_elements(tau).len();
        let induced = decide_induced(tau, true).unwrap().outcome.is_induced();
        for k in 1..=m {
            for ell in &ells {
                let local = is_locally_induced(tau, k, ell, 1 << 20).unwrap();
                let LocalInduction::Witnesses(ws) = local else { continue };
                if combination_guaranteed(k, m, ell) {
                    assert!(induced, "{name} k={k} ℓ={ell}: locally induced but not induced");
                    let w = combined_weight(&ws, tau).unwrap();
                    assert!(induces(&w, tau), "{name} k={k} ℓ={ell}");
                }
            }
        }
    }
}

/// Both sides of the count of (point, big side) incidences in the 3-subset construction.
#[test]
fn intro_double_count() {
    for m in 4..=8 {
        let inst = gen_intro(m).unwrap();
        let n = inst.system.ground_size();
        let incidences: usize = inst.orientation.elements().iter().map(|s| s.big().count()).sum();
        assert_eq!(incidences, 3 * n);
        let c = |a: usize, b: usize| k_subsets(a, b).len();
        assert_eq!(incidences, m * c(m - 1, 2));
    }
}

#[test]
fn tau_mk_structure() {
    for (m, k) in [(5, 3), (6, 3), (7, 4), (8, 4)] {
        let t = gen_tau_mk(m, k, None).unwrap();
        let sys = &t.instance.system;
        let mu = maximal_elements(&t.instance.orientation);
        assert_eq!(mu.len(), m);
        for s in &mu {
            assert_eq!(sys.order_spec().order_of(s).unwrap(), (m - 1) as u64);
        }
        let expect = k_subsets(m - 3, k - 3).len();
        for tri in k_subsets(m, 3) {
            let meet = mu[tri[0]].big().intersection(mu[tri[1]].big()).intersection(mu[tri[2]].big());
            assert_eq!(meet.count(), expect, "m={m} k={k}");
        }
    }
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(gen_tau_mk(6, 3, Some(2)).unwrap().instance, gen_tau_mk(6, 3, Some(2)).unwrap().instance);
    assert_eq!(gen_intro(7).unwrap(), gen_intro(7).unwrap());
    assert_eq!(gen_thirds(9).unwrap(), gen_thirds(9).unwrap());
    assert_eq!(gen_grid(5, 1 << 20).unwrap(), gen_grid(5, 1 << 20).unwrap());
}

#[test]
fn principal_and_thirds_reference_values() {
    let p = gen_principal(3, 2).unwrap();
    assert_eq!(p.system.len(), 4);
    assert!(is_tangle(&p.orientation));
    assert_eq!(resilience(&p.orientation, 4).unwrap().value, ResilienceValue::Infinite);
    match decide_induced(&p.orientation, true).unwrap().outcome {
        InduceOutcome::Induced(_) => {}
        other => panic!("principal orientation not induced: {other:?}"),
    }
    let x = WeightFunction::indicator(&Side::from_indices(3, [2]).unwrap());
    assert!(induces(&x, &p.orientation));

    let t = gen_thirds(6).unwrap();
    assert!(is_tangle(&t.orientation));
    assert!(induces(&WeightFunction::constant(6, int(1)).unwrap(), &t.orientation));
}

/// Components found by union-find over the edges that avoid `z`.
fn components_by_union_find(adj: &[Vec<usize>], z: &Side) -> Vec<BTreeSet<usize>> {
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            if !z.contains(u) && !z.contains(v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for v in (0..n).filter(|&v| !z.contains(v)) {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    groups.into_values().collect()
}

#[test]
fn grid_separations_match_a_slow_enumerator() {
    let n = 5;
    let adj = grid_adjacency(n);
    let fast: BTreeSet<Separation> = graph_separations(&adj, 2, 1 << 22).unwrap().into_iter().collect();
    let mut slow = BTreeSet::new();
    for size in 0..=2 {
        for z in k_subsets(n * n, size) {
            let z = Side::from_indices(n * n, z).unwrap();
            let comps = components_by_union_find(&adj, &z);
            for mask in 0u64..(1 << comps.len()) {
                let mut a = z.clone();
                let mut b = z.clone();
                for (i, comp) in comps.iter().enumerate() {
                    let target = if mask >> i & 1 == 1 { &mut b } else { &mut a };
                    for &v in comp {
                        target.insert(v);
                    }
                }
                slow.insert(Separation::new(a, b).unwrap());
            }
        }
    }
    assert_eq!(fast, slow);
    // every emitted pair is a genuine graph separation
    for s in &fast {
        let c = s.canonical();
        let a_only = c.small().difference(c.big());
        let b_only = c.big().difference(c.small());
        assert!(a_only.iter().all(|v| adj[v].iter().all(|&u| !b_only.contains(u))));
    }
}

#[test]
fn grid_tangle_bounds() {
    let g = gen_grid(5, 1 << 20).unwrap();
    assert_eq!(g.system.ground_size(), 25);
    assert!(is_tangle(&g.orientation));
    assert!(g.orientation.elements().iter().all(|s| s.small().count() <= 10));
    assert!(matches!(gen_grid(4, 1 << 20), Err(tangles::Error::Input(_))));
    assert!(matches!(gen_grid(5, 10), Err(tangles::Error::Resource(_))));
}
