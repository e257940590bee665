//! Labeled partitions: the finite surrogate for extended-real-valued
//! functions.
//!
//! Only the fiber pattern of a function matters for measurability,
//! continuity, restriction agreement, and extendability: distinct labels
//! stand for distinct values, and fresh labels stand for values different
//! from all others. Concrete values are never materialized.

use crate::sigma::SigmaAlgebra;
use crate::subset::{Subset, MAX_GROUND};

const NO_LABEL: u8 = u8::MAX;

/// A function-as-partition: each carrier point carries a block id; ids are
/// dense from 0 in order of first occurrence, so equal patterns compare
/// equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledPartition {
    carrier: Subset,
    labels: Vec<u8>,
}

impl LabeledPartition {
    pub fn from_labels(carrier: Subset, labels: &[(usize, u8)]) -> LabeledPartition {
        let mut full = vec![NO_LABEL; MAX_GROUND];
        for &(p, l) in labels {
            debug_assert!(carrier.contains(p));
            full[p] = l;
        }
        let mut out = LabeledPartition {
            carrier,
            labels: full,
        };
        out.normalize();
        out
    }

    pub fn from_blocks(carrier: Subset, blocks: &[Subset]) -> LabeledPartition {
        let mut full = vec![NO_LABEL; MAX_GROUND];
        for (id, block) in blocks.iter().enumerate() {
            for p in block.iter() {
                full[p] = id as u8;
            }
        }
        let mut out = LabeledPartition {
            carrier,
            labels: full,
        };
        out.normalize();
        out
    }

    pub fn constant(carrier: Subset) -> LabeledPartition {
        LabeledPartition::from_blocks(carrier, &[carrier])
    }

    fn normalize(&mut self) {
        let mut dense: Vec<u8> = Vec::new();
        let mut relabel = vec![NO_LABEL; usize::from(u8::MAX) + 1];
        let mut labels = vec![NO_LABEL; MAX_GROUND];
        for p in self.carrier.iter() {
            let old = self.labels[p];
            debug_assert!(old != NO_LABEL, "carrier point without a label");
            if relabel[old as usize] == NO_LABEL {
                relabel[old as usize] = dense.len() as u8;
                dense.push(old);
            }
            labels[p] = relabel[old as usize];
        }
        self.labels = labels;
    }

    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    pub fn label_of(&self, point: usize) -> Option<u8> {
        if self.carrier.contains(point) {
            Some(self.labels[point])
        } else {
            None
        }
    }

    pub fn block_count(&self) -> usize {
        self.carrier
            .iter()
            .map(|p| self.labels[p])
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    /// Fibers ordered by block id.
    pub fn blocks(&self) -> Vec<Subset> {
        let mut out = vec![Subset::EMPTY; self.block_count()];
        for p in self.carrier.iter() {
            out[self.labels[p] as usize].insert(p);
        }
        out
    }

    /// True when all carrier points of `s` share one label (vacuously true
    /// on an empty trace).
    pub fn is_constant_on(&self, s: Subset) -> bool {
        self.unique_label_on(s) != LabelTrace::Mixed
    }

    /// The single label on `carrier ∩ s`, if any.
    pub fn unique_label_on(&self, s: Subset) -> LabelTrace {
        let mut found: Option<u8> = None;
        for p in self.carrier.intersection(s).iter() {
            match found {
                None => found = Some(self.labels[p]),
                Some(l) if l == self.labels[p] => {}
                Some(_) => return LabelTrace::Mixed,
            }
        }
        match found {
            None => LabelTrace::Empty,
            Some(l) => LabelTrace::Single(l),
        }
    }

    /// The same pattern restricted to `carrier ∩ c`, renormalized.
    pub fn restrict(&self, c: Subset) -> LabeledPartition {
        let carrier = self.carrier.intersection(c);
        let pairs: Vec<(usize, u8)> = carrier.iter().map(|p| (p, self.labels[p])).collect();
        LabeledPartition::from_labels(carrier, &pairs)
    }

    /// Whether two patterns agree pointwise on `s`: on the common trace,
    /// equal values on one side correspond exactly to equal values on the
    /// other.
    pub fn agrees_with_on(&self, other: &LabeledPartition, s: Subset) -> bool {
        self.restrict(s) == other.restrict(s)
    }

    /// Measurable relative to `sigma` (carrier must be the whole ground
    /// set): every fiber is a union of atoms.
    pub fn is_measurable(&self, sigma: &SigmaAlgebra) -> bool {
        self.carrier == sigma.ground() && self.blocks().iter().all(|b| sigma.is_measurable(*b))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelTrace {
    Empty,
    Single(u8),
    Mixed,
}
