//! Finite σ-algebras as partitions into atoms.

use crate::subset::Subset;

/// A σ-algebra on a finite ground set, stored as its atom partition: a set
/// is measurable iff it is a union of atoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SigmaAlgebra {
    ground: Subset,
    atoms: Vec<Subset>,
}

impl SigmaAlgebra {
    /// Atoms are sorted by minimum point. Partition defects are left in
    /// place for `Space::validate` to report.
    pub fn from_atoms(ground: Subset, mut atoms: Vec<Subset>) -> SigmaAlgebra {
        atoms.retain(|a| !a.is_empty());
        atoms.sort_by_key(|a| a.min_point());
        SigmaAlgebra { ground, atoms }
    }

    pub fn powerset(ground: Subset) -> SigmaAlgebra {
        SigmaAlgebra::from_atoms(ground, ground.iter().map(Subset::singleton).collect())
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    pub fn is_partition(&self) -> bool {
        let mut seen = Subset::EMPTY;
        for &a in &self.atoms {
            if a.is_empty() || !seen.is_disjoint(a) || !a.is_subset_of(self.ground) {
                return false;
            }
            seen = seen.union(a);
        }
        seen == self.ground
    }

    pub fn is_measurable(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground)
            && self
                .atoms
                .iter()
                .all(|&a| a.is_subset_of(s) || a.is_disjoint(s))
    }

    /// Indices of the atoms contained in `s` (caller must pass a measurable
    /// set for the result to cover `s`).
    pub fn atoms_in(&self, s: Subset) -> impl Iterator<Item = usize> + '_ {
        self.atoms
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.is_subset_of(s))
            .map(|(i, _)| i)
    }

    /// Every measurable set, ascending by bit pattern.
    pub fn measurable_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = Subset::full(self.atoms.len())
            .subsets()
            .map(|choice| {
                choice
                    .iter()
                    .fold(Subset::EMPTY, |acc, i| acc.union(self.atoms[i]))
            })
            .collect();
        out.sort_unstable();
        out
    }
}
