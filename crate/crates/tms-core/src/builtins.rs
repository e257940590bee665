//! Canonical example models and their expected classifications.
//!
//! These small spaces pin down the separations between the properties: each
//! one realizes a combination that rules out some converse implication.
//! Their sources also ship as model files under `models/`.

use crate::measure::Measure;
use crate::parse::parse_model;
use crate::report::{Property, PropertyReport};
use crate::sigma::SigmaAlgebra;
use crate::space::Space;
use crate::Mass;

/// Outer regular (hence Borel regular) but not σ-finite: inner regularity
/// and Borel representatives both fail. Topology {∅, {c}, X}; infinite mass
/// on a and b.
pub const OUTER_NOT_INNER: &str = "\
points a b c
open {c}
sigma powerset
mass {a} inf
mass {b} inf
mass {c} 1
";

/// Two unit point masses on the non-normal topology {∅, {c}, {a c}, {b c}, X}:
/// strongly regular, so continuity on a full-measure closed set is
/// available, but no global continuous extension exists.
pub const WEAK_LUSIN_ONLY: &str = "\
points a b c
open {c}
open {a c}
open {b c}
sigma powerset
mass {a} 1
mass {b} 1
mass {c} 0
";

/// A single unit point mass on the same non-normal topology: everything up
/// to the strong extension property holds even though the space is not
/// normal.
pub const DIRAC: &str = "\
points a b c
open {c}
open {a c}
open {b c}
sigma powerset
mass {a} 1
mass {b} 0
mass {c} 0
";

/// Counting measure (unit mass everywhere) on the same topology: finite and
/// trivially Borel regular, yet opens do not decompose and the restriction
/// property fails.
pub const COUNTING: &str = "\
points a b c
open {c}
open {a c}
open {b c}
sigma powerset
mass {a} 1
mass {b} 1
mass {c} 1
";

/// Discrete two-point space with one infinite point mass: strongly regular
/// without σ-finiteness, and no open cover by finite-measure sets.
pub const DISCRETE_INFINITE: &str = "\
points a b
open {a}
open {b}
sigma powerset
mass {a} inf
mass {b} 1
";

/// Sierpiński space with mass on the closed point; a normal two-point
/// helper.
pub const SIERPINSKI: &str = "\
points a b
open {b}
sigma powerset
mass {a} 1
mass {b} 0
";

/// Expected flags for all properties, in `Property::ALL` order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExpectedReport {
    flags: [bool; 15],
}

impl ExpectedReport {
    pub fn holds(&self, p: Property) -> bool {
        self.flags[p as usize]
    }

    /// Properties whose computed verdict disagrees with the expectation.
    pub fn mismatches(&self, report: &PropertyReport) -> Vec<Property> {
        Property::ALL
            .into_iter()
            .filter(|p| self.holds(*p) != report.holds(*p))
            .collect()
    }
}

pub struct BuiltinExample {
    pub name: &'static str,
    pub space: Space,
    pub expected: ExpectedReport,
}

fn example(name: &'static str, source: &str, flags: [(Property, bool); 15]) -> BuiltinExample {
    let space = parse_model(source).expect("built-in model must parse");
    let mut table = [false; 15];
    let mut seen = [false; 15];
    for (p, v) in flags {
        table[p as usize] = v;
        seen[p as usize] = true;
    }
    assert!(
        seen.iter().all(|s| *s),
        "expected report must cover all properties"
    );
    BuiltinExample {
        name,
        space,
        expected: ExpectedReport { flags: table },
    }
}

/// The built-in example models with their full expected reports.
pub fn builtin_examples() -> Vec<BuiltinExample> {
    use Property::*;
    vec![
        example(
            "outer-not-inner",
            OUTER_NOT_INNER,
            [
                (BorelRegular, true),
                (Outer, true),
                (Inner, false),
                (Strong, false),
                (SigmaFinite, false),
                (OsfCover, false),
                (Decomp, false),
                (Normal, true),
                (Tietze, true),
                (AlmostNormal, true),
                (WeakLusin, false),
                (WeakLusinBorel, false),
                (StrongLusin, false),
                (StrongLusinBorel, false),
                (BorelReps, false),
            ],
        ),
        example(
            "weak-lusin-only",
            WEAK_LUSIN_ONLY,
            [
                (BorelRegular, true),
                (Outer, true),
                (Inner, true),
                (Strong, true),
                (SigmaFinite, true),
                (OsfCover, true),
                (Decomp, true),
                (Normal, false),
                (Tietze, false),
                (AlmostNormal, false),
                (WeakLusin, true),
                (WeakLusinBorel, true),
                (StrongLusin, false),
                (StrongLusinBorel, false),
                (BorelReps, true),
            ],
        ),
        example(
            "dirac",
            DIRAC,
            [
                (BorelRegular, true),
                (Outer, true),
                (Inner, true),
                (Strong, true),
                (SigmaFinite, true),
                (OsfCover, true),
                (Decomp, true),
                (Normal, false),
                (Tietze, false),
                (AlmostNormal, true),
                (WeakLusin, true),
                (WeakLusinBorel, true),
                (StrongLusin, true),
                (StrongLusinBorel, true),
                (BorelReps, true),
            ],
        ),
        example(
            "counting",
            COUNTING,
            [
                (BorelRegular, true),
                (Outer, false),
                (Inner, false),
                (Strong, false),
                (SigmaFinite, true),
                (OsfCover, true),
                (Decomp, false),
                (Normal, false),
                (Tietze, false),
                (AlmostNormal, false),
                (WeakLusin, false),
                (WeakLusinBorel, false),
                (StrongLusin, false),
                (StrongLusinBorel, false),
                (BorelReps, true),
            ],
        ),
        example(
            "discrete-infinite",
            DISCRETE_INFINITE,
            [
                (BorelRegular, true),
                (Outer, true),
                (Inner, true),
                (Strong, true),
                (SigmaFinite, false),
                (OsfCover, false),
                (Decomp, true),
                (Normal, true),
                (Tietze, true),
                (AlmostNormal, true),
                (WeakLusin, true),
                (WeakLusinBorel, true),
                (StrongLusin, true),
                (StrongLusinBorel, true),
                (BorelReps, true),
            ],
        ),
    ]
}

/// The Sierpiński helper space (not part of the example table).
pub fn sierpinski() -> Space {
    parse_model(SIERPINSKI).expect("built-in model must parse")
}

/// Fetch a built-in space by name; panics on unknown names (test helper).
pub fn builtin(name: &str) -> Space {
    if name == "sierpinski" {
        return sierpinski();
    }
    builtin_examples()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no built-in model named {name}"))
        .space
}

/// The companion model of a space: same points and topology, the σ-algebra
/// shrunk to the Borel sets, and the measure that is infinite on every
/// nonempty set. Normality of the topology is exactly almost-normality of
/// this companion.
pub fn companion_infinite_measure_model(space: &Space) -> Space {
    let borel = space.topology().borel_atoms();
    let sigma = SigmaAlgebra::from_atoms(space.full(), borel.blocks().to_vec());
    let masses = vec![Mass::Infinity; sigma.atoms().len()];
    Space::new(
        space.points().to_vec(),
        space.topology().clone(),
        sigma,
        Measure::new(masses),
    )
}
