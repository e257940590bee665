//! Decision outcomes with independently checkable evidence.

use crate::labeled::LabeledPartition;
use crate::subset::Subset;
use crate::Mass;

/// The answer of a decider together with its evidence.
///
/// A failing verdict always carries a witness, and re-checking that witness
/// against the raw definition of the property must fail exactly as claimed.
/// Counterexample witnesses are chosen lexicographically smallest by subset
/// bit pattern, so output is reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Short machine-readable reason tag.
    pub note: &'static str,
}

impl Verdict {
    pub fn holds(note: &'static str) -> Verdict {
        Verdict {
            holds: true,
            witness: None,
            note,
        }
    }

    pub fn holds_with(note: &'static str, witness: Witness) -> Verdict {
        Verdict {
            holds: true,
            witness: Some(witness),
            note,
        }
    }

    pub fn fails(note: &'static str, witness: Witness) -> Verdict {
        Verdict {
            holds: false,
            witness: Some(witness),
            note,
        }
    }
}

/// Structured evidence: the set, pair, or partition that certifies or
/// refutes a property.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// A measurable set whose best approximation misses its measure.
    Approximation {
        set: Subset,
        approx: Subset,
        set_mass: Mass,
        approx_mass: Mass,
    },
    /// A measurable set whose tightest closed-inside/open-outside sandwich
    /// has positive excess.
    Sandwich {
        set: Subset,
        kernel: Subset,
        hull: Subset,
        excess: Mass,
    },
    /// A σ-atom of infinite mass.
    InfiniteAtom { atom: Subset },
    /// A point all of whose open neighborhoods have infinite measure.
    Point { point: usize },
    /// An open set that is not a closed set plus a null set.
    OpenGap {
        open: Subset,
        kernel: Subset,
        gap: Mass,
    },
    /// Disjoint closed sets that no disjoint open pair separates.
    ClosedPair { first: Subset, second: Subset },
    /// A continuous function on a closed set that defeats extension.
    Restriction {
        closed: Subset,
        function: LabeledPartition,
    },
    /// A measurable function refuting a function-quantified property.
    Function { function: LabeledPartition },
    /// Evidence that a Lusin-type property holds.
    Lusin(LusinWitness),
    /// Evidence that a function has a representative with Borel fibers.
    Rep(RepWitness),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LusinKind {
    Weak,
    WeakBorel,
    Strong,
    StrongBorel,
}

impl LusinKind {
    pub fn wants_extension(self) -> bool {
        matches!(self, LusinKind::Strong | LusinKind::StrongBorel)
    }

    pub fn wants_borel_set(self) -> bool {
        matches!(self, LusinKind::WeakBorel | LusinKind::StrongBorel)
    }

    pub fn name(self) -> &'static str {
        match self {
            LusinKind::Weak => "weak",
            LusinKind::WeakBorel => "weak-borel",
            LusinKind::Strong => "strong",
            LusinKind::StrongBorel => "strong-borel",
        }
    }
}

/// The certifying set (closed or Borel) of full measure, plus the global
/// continuous extension for the strong kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LusinWitness {
    pub kind: LusinKind,
    pub set: Subset,
    pub extension: Option<LabeledPartition>,
}

/// A Borel null set and a relabeling that is Borel everywhere and agrees
/// with the original function off the null set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepWitness {
    pub null_set: Subset,
    pub representative: LabeledPartition,
}
