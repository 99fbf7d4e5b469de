//! Weight functions on the ground set, the orientations they induce, and
//! algorithms that find inducers or prove that none exist.

mod dense;
mod star;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{input, invariant, Error, Result};
use crate::exactlp::{solve_feasibility, verify_certificate, FeasibilityResult, Rational, RationalMatrix};
use crate::orientations::{maximal_elements, Orientation};
use crate::separation::OrientedSeparation;
use crate::side::Side;
use crate::system::SeparationSystem;

pub use dense::{dense_tangle_inducer, DenseInducer, DensePath};
pub use star::{min_star_interior, star_interior_inducer, star_interior_search, MinStar, StarInducer};

/// A non-negative rational weight per ground-set element.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightFunction {
    values: Vec<Rational>,
}

impl WeightFunction {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| v.is_negative()) {
            return input(format!("weight of element {i} is negative"));
        }
        Ok(WeightFunction { values })
    }

    pub fn zero(len: usize) -> Self {
        WeightFunction {
            values: vec![Rational::zero(); len],
        }
    }

    pub fn constant(len: usize, c: Rational) -> Result<Self> {
        WeightFunction::new(vec![c; len])
    }

    /// The indicator function of `set`.
    pub fn indicator(set: &Side) -> Self {
        let mut values = vec![Rational::zero(); set.universe_len()];
        for i in set.iter() {
            values[i] = Rational::one();
        }
        WeightFunction { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_nonzero(&self) -> bool {
        self.values.iter().any(|v| v.is_positive())
    }

    pub fn weight(&self, side: &Side) -> Rational {
        side.iter().fold(Rational::zero(), |acc, i| acc + &self.values[i])
    }

    /// `w(B) − w(A)` for `s = (A, B)`.
    pub fn margin(&self, s: &OrientedSeparation) -> Rational {
        // elements of the separator cancel
        s.big().difference(s.small()).iter().fold(Rational::zero(), |acc, i| acc + &self.values[i])
            - s.small().difference(s.big()).iter().fold(Rational::zero(), |acc, i| acc + &self.values[i])
    }

    /// The set this function is the indicator of, if all values are 0 or 1.
    pub fn as_set(&self) -> Option<Side> {
        let mut set = Side::empty(self.values.len());
        for (i, v) in self.values.iter().enumerate() {
            if v.is_one() {
                set.insert(i);
            } else if !v.is_zero() {
                return None;
            }
        }
        Some(set)
    }

    pub fn support(&self) -> Side {
        let mut set = Side::empty(self.values.len());
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                set.insert(i);
            }
        }
        set
    }

    /// Pointwise sum; both functions must have the same length.
    pub fn add(&self, other: &WeightFunction) -> Result<WeightFunction> {
        if self.len() != other.len() {
            return input("weight functions over ground sets of different size");
        }
        Ok(WeightFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Result<WeightFunction> {
        WeightFunction::new(self.values.iter().map(|v| v * factor).collect())
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "w[{}]", vals.join(", "))
    }
}

/// The separations of a system as oriented by a weight function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrientation {
    /// Per separation: the orientation toward the heavier side, or `None` on a tie.
    pub oriented: Vec<Option<OrientedSeparation>>,
    /// Indices of separations whose sides weigh the same.
    pub ties: Vec<usize>,
}

impl WeightOrientation {
    /// The full orientation, if there were no ties.
    pub fn into_orientation(self, system: std::sync::Arc<SeparationSystem>) -> Result<Orientation> {
        if let Some(&i) = self.ties.first() {
            return input(format!(
                "separation {:?} is a tie",
                system.separations()[i]
            ));
        }
        Orientation::from_elements(system, self.oriented.into_iter().map(Option::unwrap))
    }
}

pub fn orient_by_weight(w: &WeightFunction, sys: &SeparationSystem) -> Result<WeightOrientation> {
    if w.len() != sys.ground_size() {
        return input("weight function and system have different ground sets");
    }
    let mut oriented = Vec::with_capacity(sys.len());
    let mut ties = Vec::new();
    for (i, s) in sys.separations().iter().enumerate() {
        let c = s.canonical();
        let m = w.margin(c);
        if m.is_positive() {
            oriented.push(Some(c.clone()));
        } else if m.is_negative() {
            oriented.push(Some(c.inverse()));
        } else {
            oriented.push(None);
            ties.push(i);
        }
    }
    Ok(WeightOrientation { oriented, ties })
}

/// Whether `w(A) < w(B)` for every `(A, B)` in `elements`.
pub fn induces_all(w: &WeightFunction, elements: &[OrientedSeparation]) -> bool {
    elements
        .iter()
        .all(|s| s.ground_len() == w.len() && w.margin(s).is_positive())
}

/// Whether `w` induces `tau`.
pub fn induces(w: &WeightFunction, tau: &Orientation) -> bool {
    w.len() == tau.ground_size() && induces_all(w, tau.elements())
}

/// The `n × ℓ` matrix with `Q[i][j] = +1` if `v_i ∈ B_j ∖ A_j`, `−1` if
/// `v_i ∈ A_j ∖ B_j`, and `0` otherwise, for the columns `(A_j, B_j)`.
pub fn build_matrix(columns: &[OrientedSeparation], n: usize) -> RationalMatrix {
    let mut q = RationalMatrix::zeros(n, columns.len());
    let one = Rational::one();
    for (j, s) in columns.iter().enumerate() {
        for i in s.big().difference(s.small()).iter() {
            q.set(i, j, one.clone());
        }
        for i in s.small().difference(s.big()).iter() {
            q.set(i, j, -one.clone());
        }
    }
    q
}

/// A weighting of oriented separations proving that no weight function on
/// the ground set induces them all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasWitness {
    pub columns: Vec<OrientedSeparation>,
    pub weights: Vec<Rational>,
}

impl FarkasWitness {
    /// Re-checks `y ≥ 0`, `Qy ≤ 0` and `1ᵀy > 0` from scratch.
    pub fn verify(&self, n: usize) -> bool {
        if self.columns.len() != self.weights.len() || self.columns.iter().any(|c| c.ground_len() != n) {
            return false;
        }
        let q = build_matrix(&self.columns, n);
        let ones = vec![Rational::one(); self.columns.len()];
        verify_certificate(&q, &ones, &FeasibilityResult::Infeasible(self.weights.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InduceOutcome {
    Induced(WeightFunction),
    NotInduced(FarkasWitness),
}

impl InduceOutcome {
    pub fn is_induced(&self) -> bool {
        matches!(self, InduceOutcome::Induced(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub outcome: InduceOutcome,
    /// Set when the orientation was empty and the zero function was returned.
    pub vacuous: bool,
}

/// Decides whether some weight function induces `tau` by exact LP.
///
/// With `use_maximal` only the maximal elements become LP columns, which is
/// enough since a function inducing them induces everything below them.
pub fn decide_induced(tau: &Orientation, use_maximal: bool) -> Result<Decision> {
    let n = tau.ground_size();
    if tau.is_empty() {
        return Ok(Decision {
            outcome: InduceOutcome::Induced(WeightFunction::zero(n)),
            vacuous: true,
        });
    }
    let columns: Vec<OrientedSeparation> = if use_maximal {
        maximal_elements(tau)
    } else {
        tau.elements().to_vec()
    };
    decide_columns(tau, columns).map(|outcome| Decision {
        outcome,
        vacuous: false,
    })
}

fn decide_columns(tau: &Orientation, columns: Vec<OrientedSeparation>) -> Result<InduceOutcome> {
    let n = tau.ground_size();
    let q = build_matrix(&columns, n);
    let ones = vec![Rational::one(); columns.len()];
    match solve_feasibility(&q, &ones)? {
        FeasibilityResult::Feasible(x) => {
            let w = WeightFunction::new(x)?;
            if !induces(&w, tau) {
                return invariant("LP solution does not induce the orientation");
            }
            Ok(InduceOutcome::Induced(w))
        }
        FeasibilityResult::Infeasible(y) => {
            let witness = FarkasWitness { columns, weights: y };
            if !witness.verify(n) {
                return invariant("Farkas witness does not verify");
            }
            Ok(InduceOutcome::NotInduced(witness))
        }
    }
}

fn lcm_of_denominators(values: &[Rational]) -> num_bigint::BigInt {
    values
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Rescales an inducer of `tau` to integer values with margin at least `k`
/// on every element of `tau`.
pub fn normalize_inducer(w: &WeightFunction, tau: &Orientation, k: &Rational) -> Result<WeightFunction> {
    if !k.is_positive() {
        return input("margin must be positive");
    }
    if !induces(w, tau) {
        return input("the weight function does not induce the orientation");
    }
    let min_margin = tau.elements().iter().map(|s| w.margin(s)).min();
    let lambda = match min_margin {
        Some(m) if &m < k => k / m,
        _ => Rational::one(),
    };
    let scaled = w.scale(&lambda)?;
    let l = Rational::from_integer(lcm_of_denominators(scaled.values()));
    let out = scaled.scale(&l)?;
    debug_assert!(out.values().iter().all(|v| v.is_integer()));
    if !induces(&out, tau) {
        return invariant("normalized weight function lost the orientation");
    }
    Ok(out)
}

/// The first subset of the ground set, in lexicographic order of sorted
/// index sequences, whose indicator induces `tau`. `budget` caps the number
/// of subsets examined.
pub fn brute_force_set_inducer(tau: &Orientation, budget: u64) -> Result<Option<Side>> {
    let n = tau.ground_size();
    let mut current = Side::empty(n);
    let mut seen = 0u64;

    // preorder over sorted sequences: ∅, {0}, {0,1}, {0,1,2}, ..., {0,2}, ...
    fn rec(
        tau: &Orientation,
        start: usize,
        current: &mut Side,
        seen: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        *seen += 1;
        if *seen > budget {
            return Err(Error::Resource(format!(
                "set search exceeded {budget} candidate subsets"
            )));
        }
        if induces(&WeightFunction::indicator(current), tau) {
            return Ok(true);
        }
        for i in start..tau.ground_size() {
            current.insert(i);
            if rec(tau, i + 1, current, seen, budget)? {
                return Ok(true);
            }
            current.remove(i);
        }
        Ok(false)
    }

    if rec(tau, 0, &mut current, &mut seen, budget)? {
        Ok(Some(current))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;
    use crate::order::OrderSpec;
    use crate::separation::{GroundSet, Separation};
    use std::sync::Arc;

    fn singletons(n: usize) -> Arc<SeparationSystem> {
        let seps = (0..n)
            .map(|i| Separation::bipartition(Side::from_indices(n, [i]).unwrap()))
            .collect();
        Arc::new(SeparationSystem::new(GroundSet::new(n).unwrap(), seps, OrderSpec::Standard).unwrap())
    }

    fn principal(n: usize, x: usize) -> Orientation {
        let sys = singletons(n);
        Orientation::from_fn(sys, |s| {
            let c = s.canonical();
            if c.big().contains(x) {
                c.clone()
            } else {
                c.inverse()
            }
        })
        .unwrap()
    }

    #[test]
    fn indicator_orients_toward_point() {
        let sys = singletons(3);
        let w = WeightFunction::indicator(&Side::from_indices(3, [2]).unwrap());
        let o = orient_by_weight(&w, &sys).unwrap();
        assert!(o.ties.is_empty());
        let tau = o.into_orientation(sys).unwrap();
        assert_eq!(tau, principal(3, 2));
        assert!(induces(&w, &tau));
    }

    #[test]
    fn constant_weight_ties_on_balanced_separation() {
        let s = Separation::from_indices(3, &[0, 1], &[1, 2]).unwrap();
        let sys = SeparationSystem::new(GroundSet::new(3).unwrap(), vec![s], OrderSpec::Standard).unwrap();
        let w = WeightFunction::constant(3, int(1)).unwrap();
        assert_eq!(orient_by_weight(&w, &sys).unwrap().ties, vec![0]);
    }

    #[test]
    fn negative_weights_rejected() {
        assert!(WeightFunction::new(vec![int(1), int(-1)]).is_err());
    }

    #[test]
    fn single_column_matrix() {
        let mu = vec![OrientedSeparation::from_indices(3, &[0, 1], &[2]).unwrap()];
        let q = build_matrix(&mu, 3);
        assert_eq!(q, RationalMatrix::from_i64(&[&[-1], &[-1], &[1]]).unwrap());
        let with_sep = vec![OrientedSeparation::from_indices(3, &[0, 1], &[1, 2]).unwrap()];
        assert_eq!(
            build_matrix(&with_sep, 3),
            RationalMatrix::from_i64(&[&[-1], &[0], &[1]]).unwrap()
        );
    }

    #[test]
    fn principal_is_induced_both_ways() {
        let tau = principal(4, 1);
        for use_max in [true, false] {
            let d = decide_induced(&tau, use_max).unwrap();
            assert!(!d.vacuous);
            match d.outcome {
                InduceOutcome::Induced(w) => assert!(induces(&w, &tau)),
                other => panic!("expected induced, got {other:?}"),
            }
        }
    }

    #[test]
    fn majority_of_three_singletons_is_not_induced() {
        // each point is on the big side of exactly two of the three separations
        let sys = singletons(3);
        let tau = Orientation::from_fn(sys, |s| s.canonical().clone()).unwrap();
        let d = decide_induced(&tau, true).unwrap();
        match d.outcome {
            InduceOutcome::NotInduced(wit) => assert!(wit.verify(3)),
            other => panic!("expected not induced, got {other:?}"),
        }
        assert_eq!(brute_force_set_inducer(&tau, 100).unwrap(), None);
    }

    #[test]
    fn normalize_examples() {
        let tau = principal(3, 2);
        let w = WeightFunction::indicator(&Side::from_indices(3, [2]).unwrap());
        let out = normalize_inducer(&w, &tau, &int(5)).unwrap();
        assert_eq!(out.values(), &[int(0), int(0), int(5)]);

        let third = Rational::new(1.into(), 3.into());
        let w = WeightFunction::new(vec![third.clone(), third.clone() * int(2), third * int(4)]).unwrap();
        let tau2 = orient_by_weight(&w, &singletons(3)).unwrap().into_orientation(singletons(3)).unwrap();
        let out = normalize_inducer(&w, &tau2, &int(1)).unwrap();
        assert!(out.values().iter().all(|v| v.is_integer()));
        assert!(tau2.elements().iter().all(|s| out.margin(s) >= int(1)));

        let bad = WeightFunction::zero(3);
        assert!(matches!(normalize_inducer(&bad, &tau, &int(1)), Err(Error::Input(_))));
    }

    #[test]
    fn brute_force_finds_lexicographically_first() {
        let tau = principal(3, 2);
        assert_eq!(
            brute_force_set_inducer(&tau, 100).unwrap(),
            Some(Side::from_indices(3, [2]).unwrap())
        );
        let tau = principal(4, 0);
        // {0} first: {0} beats any singleton side {i}, i ≠ 0
        assert_eq!(
            brute_force_set_inducer(&tau, 100).unwrap(),
            Some(Side::from_indices(4, [0]).unwrap())
        );
        assert!(matches!(brute_force_set_inducer(&principal(3, 1), 1), Err(Error::Resource(_))));
    }

    #[test]
    fn empty_orientation_is_vacuously_induced() {
        let sys = Arc::new(SeparationSystem::new(GroundSet::new(2).unwrap(), vec![], OrderSpec::Standard).unwrap());
        let tau = Orientation::from_flags(sys, vec![]).unwrap();
        let d = decide_induced(&tau, true).unwrap();
        assert!(d.vacuous && d.outcome.is_induced());
        assert_eq!(brute_force_set_inducer(&tau, 10).unwrap(), Some(Side::empty(2)));
    }
}
