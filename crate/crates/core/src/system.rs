use std::collections::HashMap;

use crate::error::{input, Result};
use crate::order::{check_submodular, OrderSpec, SubmodularityReport};
use crate::separation::{GroundSet, OrientedSeparation, Separation};

/// A finite family of separations of a ground set together with an order function.
#[derive(Debug, Clone)]
pub struct SeparationSystem {
    ground: GroundSet,
    separations: Vec<Separation>,
    order: OrderSpec,
    index: HashMap<Separation, usize>,
}

impl PartialEq for SeparationSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground
            && self.separations == other.separations
            && self.order == other.order
    }
}

impl Eq for SeparationSystem {}

impl SeparationSystem {
    /// Builds a system, dropping duplicate separations (first occurrence wins).
    pub fn new(ground: GroundSet, separations: Vec<Separation>, order: OrderSpec) -> Result<Self> {
        let n = ground.size();
        if let Some(bad) = separations.iter().find(|s| s.ground_len() != n) {
            return input(format!(
                "separation {bad:?} is over a ground set of size {}, expected {n}",
                bad.ground_len()
            ));
        }
        match &order {
            OrderSpec::Standard => {}
            OrderSpec::Crossing { families } => {
                if families.iter().any(|f| f.universe_len() != n) {
                    return input("crossing family over a different ground set");
                }
            }
            OrderSpec::Explicit { table } => {
                if let Some(bad) = separations.iter().find(|s| !table.contains_key(s)) {
                    return input(format!("explicit order table has no entry for {bad:?}"));
                }
            }
        }
        let mut index = HashMap::with_capacity(separations.len());
        let mut deduped = Vec::with_capacity(separations.len());
        for s in separations {
            if !index.contains_key(&s) {
                index.insert(s.clone(), deduped.len());
                deduped.push(s);
            }
        }
        Ok(SeparationSystem {
            ground,
            separations: deduped,
            order,
            index,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.size()
    }

    pub fn separations(&self) -> &[Separation] {
        &self.separations
    }

    pub fn len(&self) -> usize {
        self.separations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separations.is_empty()
    }

    pub fn order_spec(&self) -> &OrderSpec {
        &self.order
    }

    pub fn index_of(&self, s: &Separation) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn index_of_oriented(&self, s: &OrientedSeparation) -> Option<usize> {
        self.index_of(&s.underlying())
    }

    pub fn order_of(&self, i: usize) -> Result<u64> {
        self.order.order(&self.separations[i])
    }

    pub fn all_bipartitions(&self) -> bool {
        self.separations.iter().all(|s| s.is_bipartition())
    }

    /// The subsystem `S_k` of separations of order `< k`.
    pub fn restrict_to_sk(&self, k: u64) -> Result<SeparationSystem> {
        let mut kept = Vec::new();
        for s in &self.separations {
            if self.order.order(s)? < k {
                kept.push(s.clone());
            }
        }
        SeparationSystem::new(self.ground.clone(), kept, self.order.clone())
    }

    /// Subsystem consisting of the separations at the given indices.
    pub fn subsystem(&self, indices: &[usize]) -> Result<SeparationSystem> {
        SeparationSystem::new(
            self.ground.clone(),
            indices.iter().map(|&i| self.separations[i].clone()).collect(),
            self.order.clone(),
        )
    }

    pub fn check_submodular(&self) -> Result<SubmodularityReport> {
        check_submodular(&self.separations, &self.order)
    }
}
