//! Exact measures: one mass per σ-algebra atom.

use crate::Mass;

/// Atom masses, parallel to the atom list of the companion σ-algebra.
///
/// The measure of a measurable set is the exact sum of the masses of the
/// atoms it contains; with finitely many atoms this finite additivity *is*
/// countable additivity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Measure {
    masses: Vec<Mass>,
}

impl Measure {
    pub fn new(masses: Vec<Mass>) -> Measure {
        Measure { masses }
    }

    pub fn masses(&self) -> &[Mass] {
        &self.masses
    }

    pub fn mass_of_atom(&self, atom_index: usize) -> &Mass {
        &self.masses[atom_index]
    }
}
