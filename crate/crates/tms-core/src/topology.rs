//! Validated families of open sets.

use crate::space::{Violation, ViolationKind};
use crate::subset::Subset;

/// A topology on a ground subset: the family of open sets.
///
/// Opens are kept sorted ascending by bit pattern and deduplicated. A valid
/// family contains the empty set and the ground set and is closed under
/// pairwise union and intersection, which at finite scale is closure under
/// arbitrary unions and intersections.
///
/// The ground is itself a `Subset` rather than a prefix length so that
/// subspace topologies live in the coordinates of their parent space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Topology {
    ground: Subset,
    opens: Vec<Subset>,
}

impl Topology {
    /// Builds a topology from any family; the empty set and the ground are
    /// added, the family is sorted and deduplicated, but closure is *not*
    /// forced. Call [`Topology::validate`] (or `Space::validate`) to check it.
    pub fn new(ground: Subset, mut opens: Vec<Subset>) -> Topology {
        opens.push(Subset::EMPTY);
        opens.push(ground);
        opens.sort_unstable();
        opens.dedup();
        opens.retain(|o| o.is_subset_of(ground));
        Topology { ground, opens }
    }

    pub fn indiscrete(ground: Subset) -> Topology {
        Topology::new(ground, Vec::new())
    }

    pub fn discrete(ground: Subset) -> Topology {
        Topology::new(ground, ground.subsets().collect())
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    /// Closure violations, each with the missing union or intersection as
    /// witness.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, &a) in self.opens.iter().enumerate() {
            if !a.is_subset_of(self.ground) {
                out.push(Violation::new(
                    ViolationKind::Top,
                    Some(a),
                    "open set is not a subset of the ground set",
                ));
            }
            for &b in &self.opens[i + 1..] {
                let u = a.union(b);
                if !self.is_open(u) {
                    out.push(Violation::new(
                        ViolationKind::Top,
                        Some(u),
                        "family is not closed under union",
                    ));
                }
                let v = a.intersection(b);
                if !self.is_open(v) {
                    out.push(Violation::new(
                        ViolationKind::Top,
                        Some(v),
                        "family is not closed under intersection",
                    ));
                }
            }
        }
        out.sort_by_key(|v| v.witness);
        out.dedup_by_key(|v| v.witness);
        out
    }
}
