//! Regenerates the reference instances from their parameters and checks the
//! ten acceptance criteria, one [`CriterionResult`] each.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{double_dual, dualize};
use crate::error::Result;
use crate::exactlp::{int, verify_certificate, FeasibilityResult, Rational};
use crate::generators::{gen_grid, gen_intro, gen_principal, gen_tau_mk, gen_thirds};
use crate::inducers::{
    brute_force_set_inducer, build_matrix, decide_induced, dense_tangle_inducer, induces, min_star_interior,
    orient_by_weight, star_interior_inducer, star_interior_search, DensePath, FarkasWitness, InduceOutcome,
    WeightFunction,
};
use crate::order::OrderSpec;
use crate::orientations::{
    enumerate_orientations, is_consistent, is_f_ell_tangle, is_profile, is_regular, is_tangle, max_f_ell,
    maximal_elements, AxiomFilter, Orientation,
};
use crate::resilience::{combined_weight, is_locally_induced, resilience, LocalInduction, ResilienceValue};
use crate::separation::{all_bipartitions, all_separations, GroundSet, OrientedSeparation, Separation};
use crate::side::Side;
use crate::system::SeparationSystem;

pub const DEFAULT_SEED: u64 = 0x7a6e_676c_6573;

const ENUM_BUDGET: u64 = 1 << 24;
const GRID_BUDGET: usize = 1_000_000;
const GRID_TIME_LIMIT: Duration = Duration::from_secs(300);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "tau(6,3) is a tangle that no weight function induces"),
    (2, "tau(5,3) is induced, by LP and by local witnesses"),
    (3, "the 3-subset construction on m = 6"),
    (4, "thirds(6) is induced by the whole ground set"),
    (5, "5x5 grid tangle"),
    (6, "tau(8,4) and dense bipartition tangles"),
    (7, "Farkas alternative on random instances"),
    (8, "double dual and witnesses in the dual"),
    (9, "inducing sets from regular 2k-profiles"),
    (10, "axiom hierarchy on a corpus"),
];

/// Accumulates named checks; the criterion passes when all of them hold.
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn finish(self) -> (bool, String) {
        let passed = self.failures.is_empty();
        let mut parts = self.notes;
        if !passed {
            parts.push(format!("failed: {}", self.failures.join("; ")));
        }
        (passed, parts.join("; "))
    }
}

/// Runs one criterion. Library errors count as failures and are reported in the detail.
pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionResult> {
    let &(_, name) = CRITERIA.iter().find(|(i, _)| *i == id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(id));
    let outcome = match id {
        1 => c1_tau_6_3(),
        2 => c2_tau_5_3(),
        3 => c3_intro(),
        4 => c4_thirds(),
        5 => c5_grid(),
        6 => c6_dense(&mut rng),
        7 => c7_farkas(&mut rng),
        8 => c8_duality(&mut rng),
        9 => c9_star_interiors(&mut rng),
        _ => c10_hierarchy(&mut rng),
    };
    let (passed, detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|&(id, _)| run_criterion(id, seed))
        .collect()
}

fn witness_ok(w: &FarkasWitness, n: usize) -> bool {
    w.verify(n)
}

/// Re-verifies whichever certificate a decision carries, through the generic LP verifier.
fn certificate_ok(tau: &Orientation, outcome: &InduceOutcome) -> bool {
    let n = tau.ground_size();
    match outcome {
        InduceOutcome::Induced(w) => {
            let q = build_matrix(tau.elements(), n);
            let ones = vec![Rational::one(); tau.len()];
            induces(w, tau) && verify_certificate(&q, &ones, &FeasibilityResult::Feasible(w.values().to_vec()))
        }
        InduceOutcome::NotInduced(wit) => {
            let q = build_matrix(&wit.columns, n);
            let ones = vec![Rational::one(); wit.columns.len()];
            witness_ok(wit, n) && verify_certificate(&q, &ones, &FeasibilityResult::Infeasible(wit.weights.clone()))
        }
    }
}

fn c1_tau_6_3() -> Result<(bool, String)> {
    let mut c = Checks::new();
    let t = gen_tau_mk(6, 3, None)?;
    let tau = &t.instance.orientation;
    let n = t.ground_size();
    c.check(n == 20, format!("|V| = {n}"));
    c.check(is_tangle(tau), "not a tangle");
    let mu = maximal_elements(tau);
    c.check(mu.len() == 6, format!("{} maximal elements", mu.len()));
    let r = resilience(tau, 6)?;
    c.check(r.value == ResilienceValue::Finite(3), format!("resilience {:?}", r.value));
    let d = decide_induced(tau, true)?;
    match &d.outcome {
        InduceOutcome::NotInduced(w) => c.check(certificate_ok(tau, &d.outcome), format!("witness {w:?} fails")),
        InduceOutcome::Induced(_) => c.check(false, "decided Induced"),
    }
    let ones = FarkasWitness {
        columns: mu.clone(),
        weights: vec![Rational::one(); mu.len()],
    };
    c.check(ones.verify(n), "all-ones witness fails");
    c.note(format!("|V| = {n}, 6 maximal elements, resilience {:?}, NotInduced, all-ones witness verifies", r.value));
    Ok(c.finish())
}

fn c2_tau_5_3() -> Result<(bool, String)> {
    let mut c = Checks::new();
    let t = gen_tau_mk(5, 3, None)?;
    let tau = &t.instance.orientation;
    let r = resilience(tau, 5)?;
    c.check(r.value == ResilienceValue::Finite(3), format!("resilience {:?}", r.value));
    c.check(2 * 3 > 5, "3 ≤ 5/2");
    let d = decide_induced(tau, true)?;
    c.check(d.outcome.is_induced(), "LP says NotInduced");
    c.check(certificate_ok(tau, &d.outcome), "LP certificate fails");
    match is_locally_induced(tau, 3, &int(1), 1 << 16)? {
        LocalInduction::Witnesses(ws) => {
            let w = combined_weight(&ws, tau)?;
            c.check(induces(&w, tau), "combined weight does not induce");
            c.note(format!("{} local witnesses combine to an inducer", ws.weights.len()));
        }
        LocalInduction::Counterexample(ce) => c.check(false, format!("not 3-locally 1-induced at {:?}", ce.subset)),
    }
    c.note(format!("resilience {:?}, LP decides Induced", r.value));
    Ok(c.finish())
}

fn c3_intro() -> Result<(bool, String)> {
    let mut c = Checks::new();
    let inst = gen_intro(6)?;
    let tau = &inst.orientation;
    let n = tau.ground_size();
    c.check(n == 20, format!("|V| = {n}"));
    let bad: Vec<usize> = (0..n)
        .filter(|&v| tau.elements().iter().filter(|s| s.big().contains(v)).count() != 3)
        .collect();
    c.check(bad.is_empty(), format!("points {bad:?} break the 3-membership property"));
    let r = resilience(tau, 6)?;
    c.check(!r.value.is_at_least(4), format!("resilience {:?}", r.value));
    let d = decide_induced(tau, true)?;
    c.check(!d.outcome.is_induced(), "decided Induced");
    c.check(certificate_ok(tau, &d.outcome), "certificate fails");
    c.note(format!("20 points each on 3 big sides, resilience {:?}, NotInduced", r.value));
    Ok(c.finish())
}

fn c4_thirds() -> Result<(bool, String)> {
    let mut c = Checks::new();
    let inst = gen_thirds(6)?;
    let tau = &inst.orientation;
    let r = resilience(tau, 7)?;
    c.check(r.value == ResilienceValue::Finite(3), format!("resilience {:?}", r.value));
    let mu = maximal_elements(tau);
    c.check(mu.len() == 6, format!("{} maximal elements", mu.len()));
    let d = decide_induced(tau, true)?;
    c.check(d.outcome.is_induced() && certificate_ok(tau, &d.outcome), "not Induced");
    let ones = WeightFunction::constant(6, int(1))?;
    c.check(induces(&ones, tau), "w = 1 does not induce");
    c.note(format!("resilience {:?}, 6 maximal elements, induced by w = 1", r.value));
    // four small sides can only cover V once 4(⌈n/3⌉ − 1) ≥ n, first at n = 12
    let larger = gen_thirds(12)?;
    let r12 = resilience(&larger.orientation, 7)?;
    c.note(format!("thirds(12) has resilience {:?}", r12.value));
    Ok(c.finish())
}

fn c5_grid() -> Result<(bool, String)> {
    let mut c = Checks::new();
    let start = Instant::now();
    let inst = gen_grid(5, GRID_BUDGET)?;
    let tau = &inst.orientation;
    c.check(is_tangle(tau), "not a tangle");
    let max_small = tau.elements().iter().map(|s| s.small().count()).max().unwrap_or(0);
    c.check(max_small <= 10, format!("small side of size {max_small}"));
    let r = resilience(tau, 5)?;
    c.check(r.value.is_at_least(3), format!("resilience {:?}", r.value));
    let elapsed = start.elapsed();
    c.check(elapsed <= GRID_TIME_LIMIT, format!("took {elapsed:?}"));
    c.note(format!(
        "{} separations, tie-free, tangle, max small side {max_small}, resilience {:?}, {:.1}s",
        tau.len(),
        r.value,
        elapsed.as_secs_f64()
    ));
    Ok(c.finish())
}

fn random_side(rng: &mut ChaCha8Rng, n: usize) -> Side {
    let mut s = Side::empty(n);
    for v in 0..n {
        if rng.gen_bool(0.5) {
            s.insert(v);
        }
    }
    s
}

/// Random bipartitions oriented toward the side holding more of a random reference set.
fn random_majority_system(rng: &mut ChaCha8Rng, n: usize) -> Result<Option<Orientation>> {
    let count = rng.gen_range(3..=8);
    let x = if rng.gen_bool(0.25) { Side::full(n) } else { random_side(rng, n) };
    let mut elements = Vec::new();
    for _ in 0..count {
        let a = random_side(rng, n);
        let b = a.complement();
        let (ca, cb) = (a.intersection_count(&x), b.intersection_count(&x));
        if ca == cb {
            continue;
        }
        let s = if ca < cb {
            OrientedSeparation::bipartition(a)
        } else {
            OrientedSeparation::bipartition(b)
        };
        if !elements.iter().any(|e: &OrientedSeparation| e.underlying() == s.underlying()) {
            elements.push(s);
        }
    }
    if elements.is_empty() {
        return Ok(None);
    }
    let seps: Vec<Separation> = elements.iter().map(OrientedSeparation::underlying).collect();
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, OrderSpec::Standard)?);
    Ok(Some(Orientation::from_elements(sys, elements)?))
}

fn c6_dense(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut c = Checks::new();
    let t = gen_tau_mk(8, 4, None)?;
    let tau = &t.instance.orientation;
    let n = t.ground_size();
    let ell = max_f_ell(tau)?;
    c.check(ell == Some(5), format!("ℓ* = {ell:?}"));
    c.check(is_f_ell_tangle(tau, &int(4))?, "not an F^4-tangle");
    let d = decide_induced(tau, true)?;
    c.check(!d.outcome.is_induced() && certificate_ok(tau, &d.outcome), "not certified NotInduced");
    c.check(4 * 8 < n, format!("4 ≥ {n}/8"));
    c.note(format!("tau(8,4): |V| = {n}, ℓ* = {ell:?}, NotInduced"));

    let mut accepted = 0;
    let mut attempts = 0u64;
    let mut paths: BTreeMap<String, usize> = BTreeMap::new();
    let mut sets = 0;
    while accepted < 50 && attempts < 200_000 {
        attempts += 1;
        let n = rng.gen_range(8..=16);
        let Some(tau) = random_majority_system(rng, n)? else { continue };
        let Some(l) = max_f_ell(&tau)? else { continue };
        let ell = int(l as i64);
        if 8 * l < n || !is_f_ell_tangle(&tau, &ell)? {
            continue;
        }
        accepted += 1;
        let r = dense_tangle_inducer(&tau, &ell)?;
        c.check(induces(&r.weights, &tau), format!("inducer fails on instance {accepted}"));
        if 8 * l > n {
            c.check(r.set.is_some(), format!("no 0/1 set on instance {accepted} (path {:?})", r.path));
        }
        if r.set.is_some() {
            sets += 1;
        }
        *paths.entry(format!("{:?}", r.path)).or_default() += 1;
        if r.path == DensePath::LinearProgram {
            c.note(format!("instance {accepted} fell back to LP"));
        }
    }
    c.check(accepted == 50, format!("only {accepted} random instances accepted"));
    c.note(format!(
        "{accepted} random instances from {attempts} draws all induced, {sets} by a set; paths {paths:?}"
    ));
    Ok(c.finish())
}

fn random_separation(rng: &mut ChaCha8Rng, n: usize) -> Result<Separation> {
    let mut a = Side::empty(n);
    let mut b = Side::empty(n);
    for v in 0..n {
        match rng.gen_range(0..5) {
            0 | 1 => a.insert(v),
            2 | 3 => b.insert(v),
            _ => {
                a.insert(v);
                b.insert(v);
            }
        }
    }
    Separation::new(a, b)
}

fn random_orientation(rng: &mut ChaCha8Rng, n: usize, max_seps: usize) -> Result<Orientation> {
    let count = rng.gen_range(1..=max_seps);
    let seps = (0..count)
        .map(|_| random_separation(rng, n))
        .collect::<Result<Vec<_>>>()?;
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, OrderSpec::Standard)?);
    let flags = (0..sys.len()).map(|_| rng.gen_bool(0.5)).collect();
    Orientation::from_flags(sys, flags)
}

fn c7_farkas(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut c = Checks::new();
    let (mut induced, mut by_set) = (0, 0);
    for i in 0..200 {
        let n = rng.gen_range(1..=6);
        let tau = random_orientation(rng, n, 8)?;
        let full = decide_induced(&tau, false)?;
        let maximal = decide_induced(&tau, true)?;
        c.check(
            full.outcome.is_induced() == maximal.outcome.is_induced(),
            format!("instance {i}: maximal and full LPs disagree"),
        );
        c.check(certificate_ok(&tau, &full.outcome), format!("instance {i}: certificate fails"));
        c.check(certificate_ok(&tau, &maximal.outcome), format!("instance {i}: maximal certificate fails"));
        if let Some(x) = brute_force_set_inducer(&tau, 1 << 16)? {
            by_set += 1;
            c.check(induces(&WeightFunction::indicator(&x), &tau), format!("instance {i}: brute-force set fails"));
            c.check(full.outcome.is_induced(), format!("instance {i}: a set induces but the LP says NotInduced"));
        }
        if full.outcome.is_induced() {
            induced += 1;
        }
    }
    c.note(format!("200 instances: {induced} Induced ({by_set} by a set), {} NotInduced", 200 - induced));
    Ok(c.finish())
}

/// Checks a Farkas witness of `sigma`, read as weights on the dual ground set,
/// against every element of the default dual orientation.
fn witness_in_dual(sigma: &Orientation, wit: &FarkasWitness) -> Result<bool> {
    let dual = dualize(sigma)?;
    let mut values = vec![Rational::from_integer(0.into()); dual.positions.len()];
    for (col, y) in wit.columns.iter().zip(&wit.weights) {
        let Some(i) = sigma.system().index_of_oriented(col) else { return Ok(false) };
        let Some(p) = dual.position_of(i) else { return Ok(false) };
        values[p] += y;
    }
    let w = WeightFunction::new(values)?;
    Ok(dual.images.iter().all(|img| !w.margin(img).is_positive()))
}

/// Random non-zero weightings of `S` for an induced `sigma`: each must induce some `φ(v)`.
fn random_dual_weights_induce(rng: &mut ChaCha8Rng, sigma: &Orientation, trials: usize) -> Result<bool> {
    let dual = dualize(sigma)?;
    for _ in 0..trials {
        let mut values: Vec<Rational> = (0..dual.positions.len()).map(|_| int(rng.gen_range(0..=5))).collect();
        if values.iter().all(|v| !v.is_positive()) {
            values[0] = int(1);
        }
        let w = WeightFunction::new(values)?;
        if !dual.images.iter().any(|img| w.margin(img).is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c8_duality(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut c = Checks::new();
    let mut named: Vec<(String, Orientation)> = vec![
        ("principal(4,0)".into(), gen_principal(4, 0)?.orientation),
        ("tau(6,3)".into(), gen_tau_mk(6, 3, None)?.instance.orientation),
    ];
    let mut draws = 0;
    let mut random = 0;
    while random < 20 && draws < 100_000 {
        draws += 1;
        let n = rng.gen_range(2..=6);
        let tau = random_orientation(rng, n, 6)?;
        if dualize(&tau)?.injective {
            random += 1;
            named.push((format!("random {random}"), tau));
        }
    }
    c.check(random == 20, format!("only {random} injective random instances"));
    let (mut round_trips, mut witnesses, mut induced) = (0, 0, 0);
    for (name, sigma) in &named {
        let dual = dualize(sigma)?;
        if dual.injective {
            let ok = double_dual(sigma)?;
            c.check(ok, format!("{name}: double dual differs"));
            round_trips += usize::from(ok);
        } else {
            let pairs = dual.collisions.iter().filter(|cl| cl.len() > 1).count();
            c.check(
                false,
                format!("{name}: φ is not injective ({pairs} collision classes), so it has no double dual"),
            );
        }
        match decide_induced(sigma, false)?.outcome {
            InduceOutcome::NotInduced(wit) => {
                witnesses += 1;
                c.check(witness_in_dual(sigma, &wit)?, format!("{name}: witness induces a dual element"));
            }
            InduceOutcome::Induced(_) if dual.injective => {
                induced += 1;
                c.check(
                    random_dual_weights_induce(rng, sigma, 20)?,
                    format!("{name}: a non-zero weighting of S induces nothing in the dual"),
                );
            }
            InduceOutcome::Induced(_) => {}
        }
    }
    c.check(witnesses > 0, "no NotInduced instance to test");
    c.note(format!(
        "{round_trips} of {} instances round-trip; {witnesses} Farkas witnesses induce nothing in the dual; \
         random weightings induce a dual element on {induced} induced instances",
        named.len()
    ));
    Ok(c.finish())
}

fn universe_below(n: usize, order: u64) -> Result<Arc<SeparationSystem>> {
    let full = SeparationSystem::new(GroundSet::new(n)?, all_separations(n), OrderSpec::Standard)?;
    Ok(Arc::new(full.restrict_to_sk(order)?))
}

/// Runs the star-interior inducer on one regular profile and cross-checks
/// every star it contains by exhaustive search.
fn check_profile(c: &mut Checks, tau: &Orientation, k: usize, label: &str) -> Result<()> {
    let r = star_interior_inducer(tau, k)?;
    c.check(r.set.count() >= 2 * k, format!("{label}: |X| = {}", r.set.count()));
    let low = tau.restrict_to_order(k as u64)?;
    c.check(induces(&WeightFunction::indicator(&r.set), &low), format!("{label}: X does not induce"));
    let min = min_star_interior(tau, ENUM_BUDGET)?;
    c.check(min.interior.count() >= 2 * k, format!("{label}: a star has interior {}", min.interior.count()));
    Ok(())
}

fn c9_star_interiors(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut c = Checks::new();
    let mut exhaustive = Vec::new();
    for n in [4, 5] {
        let sys = universe_below(n, 2)?;
        let profiles = enumerate_orientations(&sys, AxiomFilter::RegularProfile, ENUM_BUDGET)?;
        for (i, tau) in profiles.iter().enumerate() {
            check_profile(&mut c, tau, 1, &format!("n={n} #{i}"))?;
        }
        exhaustive.push(format!("|V| = {n}: {} regular 2-profiles of {} separations", profiles.len(), sys.len()));
    }

    let (mut trials, mut tied, mut generated) = (0, 0, 0);
    for n in 5..=8 {
        let sys = universe_below(n, 4)?;
        for _ in 0..6 {
            trials += 1;
            let values = (0..n).map(|_| int(rng.gen_range(1..=1_000_000))).collect();
            let w = WeightFunction::new(values)?;
            let wo = orient_by_weight(&w, &sys)?;
            if !wo.ties.is_empty() {
                tied += 1;
                continue;
            }
            let tau = wo.into_orientation(sys.clone())?;
            if is_regular(&tau) && is_profile(&tau) {
                generated += 1;
                check_profile(&mut c, &tau, 2, &format!("n={n} generated"))?;
            }
        }
    }
    c.check(
        generated >= 20,
        format!("{generated} regular 4-profiles from {trials} generic weightings ({tied} tied); at least 20 required"),
    );

    // outside the set universe the search has regular profiles to work on
    let grid = gen_grid(5, GRID_BUDGET)?.orientation.restrict_to_order(4)?;
    let s = star_interior_search(&grid, 2)?;
    let low = grid.restrict_to_order(2)?;
    let grid_ok = s.set.count() >= 4 && induces(&WeightFunction::indicator(&s.set), &low);
    c.note(format!(
        "{}; grid order-<4 profile ({} separations): inducing set of size {}{}",
        exhaustive.join(", "),
        grid.len(),
        s.set.count(),
        if grid_ok { " verified" } else { " NOT verified" }
    ));
    c.check(grid_ok, "grid star interior fails");
    Ok(c.finish())
}

/// The three singleton splits of a 3-set, each oriented toward its larger side.
pub fn majority_of_three() -> Result<Orientation> {
    let elements: Vec<OrientedSeparation> = (0..3)
        .map(|i| OrientedSeparation::bipartition(Side::from_indices(3, [i]).expect("index in range")))
        .collect();
    let seps = elements.iter().map(OrientedSeparation::underlying).collect();
    let sys = Arc::new(SeparationSystem::new(GroundSet::new(3)?, seps, OrderSpec::Standard)?);
    Orientation::from_elements(sys, elements)
}

/// Separation systems with at most 12 separations used for exhaustive axiom checks.
pub fn axiom_corpus(rng: &mut ChaCha8Rng) -> Result<Vec<(String, Arc<SeparationSystem>)>> {
    let mut out: Vec<(String, Arc<SeparationSystem>)> = Vec::new();
    let standard = |n: usize, seps: Vec<Separation>| -> Result<Arc<SeparationSystem>> {
        Ok(Arc::new(SeparationSystem::new(GroundSet::new(n)?, seps, OrderSpec::Standard)?))
    };
    for n in 2..=4 {
        out.push((format!("bipartitions({n})"), standard(n, all_bipartitions(n))?));
    }
    for n in 2..=3 {
        out.push((format!("all separations({n})"), standard(n, all_separations(n))?));
    }
    out.push(("order < 2 on 3 points".into(), universe_below(3, 2)?));
    out.push(("majority of 3".into(), majority_of_three()?.system_arc().clone()));
    out.push(("thirds(6)".into(), gen_thirds(6)?.system));
    out.push(("intro(6)".into(), gen_intro(6)?.system));
    out.push(("tau(6,3)".into(), gen_tau_mk(6, 3, None)?.instance.system));
    out.push(("tau(5,3)".into(), gen_tau_mk(5, 3, None)?.instance.system));
    for i in 0..40 {
        let n = rng.gen_range(2..=6);
        out.push((format!("random {i}"), random_orientation(rng, n, 12)?.system_arc().clone()));
    }
    out.retain(|(_, s)| s.len() <= 12);
    Ok(out)
}

fn c10_hierarchy(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut c = Checks::new();
    let corpus = axiom_corpus(rng)?;
    let (mut orientations, mut tangles) = (0u64, 0u64);
    for (name, sys) in &corpus {
        for tau in enumerate_orientations(sys, AxiomFilter::Any, ENUM_BUDGET)? {
            orientations += 1;
            if is_tangle(&tau) {
                tangles += 1;
                c.check(
                    is_profile(&tau) && is_regular(&tau) && is_consistent(&tau),
                    format!("{name}: tangle {:?} breaks the hierarchy", tau.flags()),
                );
            }
        }
    }
    let maj = majority_of_three()?;
    c.check(is_consistent(&maj), "majority of 3 is inconsistent");
    c.check(!is_profile(&maj), "majority of 3 is a profile");
    c.check(tangles > 0, "corpus has no tangles");
    c.note(format!(
        "{} systems, {orientations} orientations, {tangles} tangles; majority of 3 is consistent but not a profile",
        corpus.len()
    ));
    Ok(c.finish())
}
