//! Orientations of separation systems and the axioms they may satisfy.

mod axioms;
pub(crate) mod cover;
mod enumerate;

use std::sync::Arc;

use crate::error::{input, Result};
use crate::separation::{OrientedSeparation, Separation};
use crate::system::SeparationSystem;

pub use axioms::{
    consistency_violation, is_consistent, is_f_ell_tangle, is_profile, is_regular, is_tangle,
    max_f_ell, maximal_elements, maximal_indices, profile_violation, regularity_violation,
    tangle_violation, AxiomReport, ProfileViolation, TangleViolation,
};
pub use enumerate::{enumerate_orientations, AxiomFilter};

/// A choice of one orientation for every separation of a system.
#[derive(Debug, Clone)]
pub struct Orientation {
    system: Arc<SeparationSystem>,
    flipped: Vec<bool>,
    elements: Vec<OrientedSeparation>,
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && *self.system == *other.system
    }
}

impl Eq for Orientation {}

impl Orientation {
    /// `flipped[i]` selects the non-canonical orientation of separation `i`.
    /// Flags on degenerate separations are ignored.
    pub fn from_flags(system: Arc<SeparationSystem>, mut flipped: Vec<bool>) -> Result<Self> {
        if flipped.len() != system.len() {
            return input(format!(
                "orientation has {} flags for {} separations",
                flipped.len(),
                system.len()
            ));
        }
        let elements = system
            .separations()
            .iter()
            .zip(flipped.iter_mut())
            .map(|(s, f)| {
                if s.is_degenerate() {
                    *f = false;
                }
                s.oriented(*f)
            })
            .collect();
        Ok(Orientation {
            system,
            flipped,
            elements,
        })
    }

    /// Builds the orientation containing exactly the given oriented separations.
    pub fn from_elements<I>(system: Arc<SeparationSystem>, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = OrientedSeparation>,
    {
        let mut flags: Vec<Option<bool>> = vec![None; system.len()];
        for e in elements {
            let Some(i) = system.index_of_oriented(&e) else {
                return input(format!("{e:?} does not orient a separation of the system"));
            };
            let f = !e.is_canonical();
            match flags[i] {
                Some(prev) if prev != f && !e.is_degenerate() => {
                    return input(format!("both orientations of {e:?} given"))
                }
                _ => flags[i] = Some(f),
            }
        }
        if let Some(i) = flags.iter().position(Option::is_none) {
            return input(format!(
                "separation {:?} is not oriented",
                system.separations()[i]
            ));
        }
        Orientation::from_flags(system, flags.into_iter().map(Option::unwrap).collect())
    }

    /// Orients every separation by `choose`, which must return one of its two orientations.
    pub fn from_fn<F>(system: Arc<SeparationSystem>, mut choose: F) -> Result<Self>
    where
        F: FnMut(&Separation) -> OrientedSeparation,
    {
        let mut flags = Vec::with_capacity(system.len());
        for s in system.separations() {
            let o = choose(s);
            if !s.has_orientation(&o) {
                return input(format!("{o:?} is not an orientation of {s:?}"));
            }
            flags.push(o != *s.canonical());
        }
        Orientation::from_flags(system, flags)
    }

    pub fn system(&self) -> &SeparationSystem {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<SeparationSystem> {
        &self.system
    }

    pub fn ground_size(&self) -> usize {
        self.system.ground_size()
    }

    pub fn elements(&self) -> &[OrientedSeparation] {
        &self.elements
    }

    pub fn flags(&self) -> &[bool] {
        &self.flipped
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &OrientedSeparation {
        &self.elements[i]
    }

    pub fn contains(&self, s: &OrientedSeparation) -> bool {
        self.system
            .index_of_oriented(s)
            .is_some_and(|i| self.elements[i] == *s)
    }

    /// The restriction of this orientation to the separations at `indices`.
    pub fn restrict(&self, indices: &[usize]) -> Result<Orientation> {
        let sub = Arc::new(self.system.subsystem(indices)?);
        Orientation::from_elements(sub, indices.iter().map(|&i| self.elements[i].clone()))
    }

    /// The restriction to separations of order `< k`.
    pub fn restrict_to_order(&self, k: u64) -> Result<Orientation> {
        let mut keep = Vec::new();
        for i in 0..self.system.len() {
            if self.system.order_of(i)? < k {
                keep.push(i);
            }
        }
        self.restrict(&keep)
    }

    /// Whether this orientation extends `smaller`, i.e. contains every element of it.
    pub fn extends(&self, smaller: &Orientation) -> bool {
        smaller.elements.iter().all(|e| self.contains(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::separation::GroundSet;

    fn singleton_system() -> Arc<SeparationSystem> {
        let seps = (0..3)
            .map(|i| Separation::from_indices(3, &[i], &(0..3).filter(|&j| j != i).collect::<Vec<_>>()).unwrap())
            .collect();
        Arc::new(SeparationSystem::new(GroundSet::new(3).unwrap(), seps, OrderSpec::Standard).unwrap())
    }

    #[test]
    fn from_elements_requires_full_cover() {
        let sys = singleton_system();
        let one = OrientedSeparation::from_indices(3, &[0], &[1, 2]).unwrap();
        assert!(Orientation::from_elements(sys.clone(), [one.clone()]).is_err());
        let both = [one.clone(), one.inverse()];
        assert!(Orientation::from_elements(sys, both).is_err());
    }

    #[test]
    fn restriction_then_extension_is_identity() {
        let sys = singleton_system();
        let tau = Orientation::from_flags(sys, vec![false, true, false]).unwrap();
        let sub = tau.restrict(&[0, 2]).unwrap();
        assert!(tau.extends(&sub));
        assert_eq!(sub.len(), 2);
        let other = Orientation::from_flags(tau.system_arc().clone(), vec![true, true, false]).unwrap();
        assert!(!other.extends(&sub));
    }
}
