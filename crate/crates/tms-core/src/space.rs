//! The full model: points, topology, σ-algebra, and measure.

use std::fmt;

use crate::measure::Measure;
use crate::sigma::SigmaAlgebra;
use crate::subset::Subset;
use crate::topology::Topology;
use crate::Mass;

/// A finite topological measure space.
///
/// Immutable after construction; every decider and the harness share spaces
/// read-only across workers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Space {
    points: Vec<String>,
    topology: Topology,
    sigma: SigmaAlgebra,
    measure: Measure,
}

/// Invariant violations are data, not errors: `validate` returns all of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Option<Subset>,
    pub message: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    /// Open family not closed under union/intersection (or missing ∅/X).
    Top,
    /// Atoms not a partition, or some Borel set is not measurable.
    Sigma,
    /// Mass table malformed.
    Mass,
}

impl ViolationKind {
    pub fn code(self) -> &'static str {
        match self {
            ViolationKind::Top => "E_TOP",
            ViolationKind::Sigma => "E_SIGMA",
            ViolationKind::Mass => "E_MASS",
        }
    }
}

impl Violation {
    pub fn new(kind: ViolationKind, witness: Option<Subset>, message: &str) -> Violation {
        Violation {
            kind,
            witness,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.code(), self.message)?;
        if let Some(w) = self.witness {
            write!(f, " (witness {:?})", w)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("E_NOT_MEASURABLE: the set splits a σ-algebra atom")]
pub struct NotMeasurable;

impl Space {
    pub fn new(
        points: Vec<String>,
        topology: Topology,
        sigma: SigmaAlgebra,
        measure: Measure,
    ) -> Space {
        Space {
            points,
            topology,
            sigma,
            measure,
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.points.len())
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn sigma(&self) -> &SigmaAlgebra {
        &self.sigma
    }

    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    pub fn set_to_string(&self, s: Subset) -> String {
        s.display(&self.points).to_string()
    }

    /// Exact measure of a measurable set.
    pub fn measure_of(&self, s: Subset) -> Result<Mass, NotMeasurable> {
        if !self.sigma.is_measurable(s) {
            return Err(NotMeasurable);
        }
        Ok(self.m(s))
    }

    /// Measure of a set known to be measurable. All internal callers pass
    /// unions of atoms, opens, closeds, or Borel sets of a validated space.
    pub(crate) fn m(&self, s: Subset) -> Mass {
        debug_assert!(self.sigma.is_measurable(s));
        self.sigma
            .atoms_in(s)
            .map(|i| self.measure.mass_of_atom(i).clone())
            .sum()
    }

    /// All invariant violations; an empty list means the space is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.points.len();
        if n == 0 || n > crate::subset::MAX_GROUND {
            out.push(Violation::new(
                ViolationKind::Top,
                None,
                "ground size must be between 1 and 16",
            ));
            return out;
        }
        if self.topology.ground() != self.full() || self.sigma.ground() != self.full() {
            out.push(Violation::new(
                ViolationKind::Top,
                None,
                "topology and σ-algebra must live on the declared points",
            ));
            return out;
        }
        out.extend(self.topology.validate());

        if !self.sigma.is_partition() {
            let mut seen = Subset::EMPTY;
            let witness = self
                .sigma
                .atoms()
                .iter()
                .copied()
                .find(|a| {
                    let bad = !seen.is_disjoint(*a) || !a.is_subset_of(self.full());
                    seen = seen.union(*a);
                    bad
                })
                .or(Some(seen.complement_in(self.full())));
            out.push(Violation::new(
                ViolationKind::Sigma,
                witness,
                "σ-algebra atoms are not a partition of the points",
            ));
        } else {
            // Borel ⊆ 𝔐: every σ-atom must sit inside a single Borel atom.
            let borel = self.topology.borel_atoms();
            for &atom in self.sigma.atoms() {
                let inside_one = borel.blocks().iter().any(|b| atom.is_subset_of(*b));
                if !inside_one {
                    out.push(Violation::new(
                        ViolationKind::Sigma,
                        Some(atom),
                        "σ-algebra does not contain all Borel sets",
                    ));
                }
            }
        }

        if self.measure.masses().len() != self.sigma.atoms().len() {
            out.push(Violation::new(
                ViolationKind::Mass,
                None,
                "mass table does not match the atom list",
            ));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}
