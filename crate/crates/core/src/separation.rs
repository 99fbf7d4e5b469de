//! Separations of a finite set and the lattice of oriented separations.

use std::fmt;

use crate::error::{input, Result};
use crate::side::Side;

/// The finite ground set `{0, .., size-1}`, optionally with display labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return input("ground set must be non-empty");
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut g = GroundSet::new(labels.len())?;
        g.labels = Some(labels);
        Ok(g)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn full(&self) -> Side {
        Side::full(self.size)
    }
}

/// Result of comparing two oriented separations in the partial order `≤`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Flags returned by [`OrientedSeparation::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub small: bool,
    pub cosmall: bool,
    pub degenerate: bool,
}

/// An ordered pair `(small, big)` of sides whose union is the ground set.
///
/// `small` is the first coordinate `A`, `big` the second coordinate `B`; the
/// separation points towards `big`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedSeparation {
    small: Side,
    big: Side,
}

impl OrientedSeparation {
    pub fn new(small: Side, big: Side) -> Result<Self> {
        if small.universe_len() != big.universe_len() {
            return input("sides live on ground sets of different sizes");
        }
        if !small.union(&big).is_full() {
            return input(format!("sides {small} and {big} do not cover the ground set"));
        }
        Ok(OrientedSeparation { small, big })
    }

    /// Convenience constructor from index slices.
    pub fn from_indices(n: usize, small: &[usize], big: &[usize]) -> Result<Self> {
        OrientedSeparation::new(
            Side::from_indices(n, small.iter().copied())?,
            Side::from_indices(n, big.iter().copied())?,
        )
    }

    /// The bipartition `(small, V ∖ small)`.
    pub fn bipartition(small: Side) -> Self {
        let big = small.complement();
        OrientedSeparation { small, big }
    }

    pub(crate) fn new_unchecked(small: Side, big: Side) -> Self {
        debug_assert!(small.union(&big).is_full());
        OrientedSeparation { small, big }
    }

    #[inline]
    pub fn small(&self) -> &Side {
        &self.small
    }

    #[inline]
    pub fn big(&self) -> &Side {
        &self.big
    }

    #[inline]
    pub fn ground_len(&self) -> usize {
        self.small.universe_len()
    }

    pub fn inverse(&self) -> Self {
        OrientedSeparation {
            small: self.big.clone(),
            big: self.small.clone(),
        }
    }

    pub fn separator(&self) -> Side {
        self.small.intersection(&self.big)
    }

    pub fn is_bipartition(&self) -> bool {
        self.small.is_disjoint(&self.big)
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.ground_len() != other.ground_len() {
            return input(format!(
                "oriented separations over ground sets of sizes {} and {}",
                self.ground_len(),
                other.ground_len()
            ));
        }
        Ok(())
    }

    /// `self ≤ other`, i.e. `A ⊆ C` and `B ⊇ D`.
    #[inline]
    pub fn le(&self, other: &Self) -> bool {
        self.small.is_subset(&other.small) && other.big.is_subset(&self.big)
    }

    /// `self < other`.
    #[inline]
    pub fn lt(&self, other: &Self) -> bool {
        self.le(other) && self != other
    }

    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        self.check_same_ground(other)?;
        Ok(match (self.le(other), other.le(self)) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Incomparable,
        })
    }

    /// Supremum `(A ∪ C, B ∩ D)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        Ok(self.join_unchecked(other))
    }

    /// Infimum `(A ∩ C, B ∪ D)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        OrientedSeparation {
            small: self.small.union(&other.small),
            big: self.big.intersection(&other.big),
        }
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        OrientedSeparation {
            small: self.small.intersection(&other.small),
            big: self.big.union(&other.big),
        }
    }

    pub fn is_small(&self) -> bool {
        self.big.is_full()
    }

    pub fn is_cosmall(&self) -> bool {
        self.small.is_full()
    }

    pub fn is_degenerate(&self) -> bool {
        self.is_small() && self.is_cosmall()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            small: self.is_small(),
            cosmall: self.is_cosmall(),
            degenerate: self.is_degenerate(),
        }
    }

    /// The unoriented separation underlying this orientation.
    pub fn underlying(&self) -> Separation {
        Separation::from_oriented(self.clone())
    }

    /// True if this is the canonical orientation of its separation.
    pub fn is_canonical(&self) -> bool {
        self.small <= self.big
    }

    /// Total order used for deterministic sorting: small side first, then big side.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.small
            .cmp(&other.small)
            .then_with(|| self.big.cmp(&other.big))
    }
}

impl fmt::Debug for OrientedSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.small, self.big)
    }
}

impl fmt::Display for OrientedSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An unoriented separation `{A, B}`, stored in its canonical orientation:
/// the one whose first side is lexicographically least.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Separation {
    canonical: OrientedSeparation,
}

impl Separation {
    pub fn new(a: Side, b: Side) -> Result<Self> {
        Ok(Separation::from_oriented(OrientedSeparation::new(a, b)?))
    }

    pub fn from_indices(n: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        Ok(Separation::from_oriented(OrientedSeparation::from_indices(
            n, a, b,
        )?))
    }

    pub fn bipartition(a: Side) -> Self {
        Separation::from_oriented(OrientedSeparation::bipartition(a))
    }

    pub fn from_oriented(s: OrientedSeparation) -> Self {
        if s.is_canonical() {
            Separation { canonical: s }
        } else {
            Separation {
                canonical: s.inverse(),
            }
        }
    }

    #[inline]
    pub fn canonical(&self) -> &OrientedSeparation {
        &self.canonical
    }

    /// The non-canonical orientation (equal to the canonical one iff degenerate).
    pub fn reversed(&self) -> OrientedSeparation {
        self.canonical.inverse()
    }

    /// Orientation pointing away from the canonical small side when `flipped`.
    pub fn oriented(&self, flipped: bool) -> OrientedSeparation {
        if flipped {
            self.reversed()
        } else {
            self.canonical.clone()
        }
    }

    pub fn ground_len(&self) -> usize {
        self.canonical.ground_len()
    }

    pub fn separator(&self) -> Side {
        self.canonical.separator()
    }

    pub fn is_bipartition(&self) -> bool {
        self.canonical.is_bipartition()
    }

    pub fn is_degenerate(&self) -> bool {
        self.canonical.is_degenerate()
    }

    /// Whether `s` is one of the two orientations of this separation.
    pub fn has_orientation(&self, s: &OrientedSeparation) -> bool {
        *s == self.canonical || (s.small == self.canonical.big && s.big == self.canonical.small)
    }
}

impl Ord for Separation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical.canonical_cmp(&other.canonical)
    }
}

impl PartialOrd for Separation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}, {}}}",
            self.canonical.small(),
            self.canonical.big()
        )
    }
}

/// Result of [`star_interior`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarInterior {
    pub is_star: bool,
    pub interior: Side,
}

/// Whether `sigma` is a star (pairwise `r ≤ s̄` for distinct members, all
/// non-degenerate), together with the intersection of its big sides.
///
/// `ground_len` fixes the ground set for the empty family, whose interior is
/// the whole ground set.
pub fn star_interior(ground_len: usize, sigma: &[OrientedSeparation]) -> Result<StarInterior> {
    let mut interior = Side::full(ground_len);
    for s in sigma {
        if s.ground_len() != ground_len {
            return input("star member over a different ground set");
        }
        interior.intersect_with(s.big());
    }
    Ok(StarInterior {
        is_star: is_star(sigma),
        interior,
    })
}

pub fn is_star(sigma: &[OrientedSeparation]) -> bool {
    if sigma.iter().any(|s| s.is_degenerate()) {
        return false;
    }
    for (i, r) in sigma.iter().enumerate() {
        for s in &sigma[i + 1..] {
            if r == s {
                continue;
            }
            if !r.le(&s.inverse()) || !s.le(&r.inverse()) {
                return false;
            }
        }
    }
    true
}

/// All separations of an `n`-set, in canonical order. There are `(3^n + 1) / 2` of them.
pub fn all_separations(n: usize) -> Vec<Separation> {
    assert!(n <= 20, "universe of a {n}-set is too large to enumerate");
    let mut out = Vec::new();
    // each element goes to A only, B only, or both; keep canonical orientations
    let total = 3usize.pow(n as u32);
    for mut code in 0..total {
        let mut a = Side::empty(n);
        let mut b = Side::empty(n);
        for i in 0..n {
            match code % 3 {
                0 => a.insert(i),
                1 => b.insert(i),
                _ => {
                    a.insert(i);
                    b.insert(i);
                }
            }
            code /= 3;
        }
        let s = OrientedSeparation::new_unchecked(a, b);
        if s.is_canonical() {
            out.push(Separation { canonical: s });
        }
    }
    out.sort();
    out
}

/// All bipartitions of an `n`-set (including `{∅, V}`), in canonical order.
pub fn all_bipartitions(n: usize) -> Vec<Separation> {
    assert!(n <= 30, "bipartitions of a {n}-set are too many to enumerate");
    let mut out: Vec<Separation> = (0..(1u64 << n))
        .map(|mask| OrientedSeparation::bipartition(Side::from_mask(n, mask)))
        .filter(|s| s.is_canonical())
        .map(|canonical| Separation { canonical })
        .collect();
    out.sort();
    out
}
