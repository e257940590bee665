//! Sound-and-complete deciders for the measure and topology regularity
//! properties, each returning a verdict plus checkable evidence.
//!
//! Every "for every ε > 0 there exists …" condition is decided as "there
//! exists … with excess measure exactly zero": the candidate families
//! (closed sets, open sets, sandwich pairs) are finite, so the infimum is
//! attained and the two readings coincide. The brute-force ε-grid forms live
//! in [`crate::oracle`] for cross-validation.

use crate::labeled::LabeledPartition;
use crate::lattice::Partition;
use crate::space::Space;
use crate::subset::Subset;
use crate::topology::Topology;
use crate::verdict::{Verdict, Witness};

pub(crate) fn minimal_borel_superset(borel_atoms: &Partition, e: Subset) -> Subset {
    borel_atoms
        .blocks()
        .iter()
        .copied()
        .filter(|b| !b.is_disjoint(e))
        .fold(Subset::EMPTY, Subset::union)
}

/// Every measurable set has a Borel superset of equal measure.
///
/// The minimal Borel superset (the union of Borel atoms meeting the set)
/// attains the infimum over all Borel supersets by monotonicity, so it is
/// the only candidate that needs checking.
pub fn is_borel_regular(space: &Space) -> Verdict {
    let atoms = space.topology().borel_atoms();
    for &e in &space.sigma().measurable_sets() {
        let b = minimal_borel_superset(&atoms, e);
        let set_mass = space.m(e);
        let approx_mass = space.m(b);
        if set_mass != approx_mass {
            return Verdict::fails(
                "minimal_borel_superset_exceeds",
                Witness::Approximation {
                    set: e,
                    approx: b,
                    set_mass,
                    approx_mass,
                },
            );
        }
    }
    Verdict::holds("borel_superset_attains_measure")
}

/// The measure of every measurable set is the minimum measure of an open
/// superset; the minimum is attained at the open hull.
pub fn is_outer_regular(space: &Space) -> Verdict {
    for &e in &space.sigma().measurable_sets() {
        let hull = space.topology().open_hull(e);
        let set_mass = space.m(e);
        let approx_mass = space.m(hull);
        if set_mass != approx_mass {
            return Verdict::fails(
                "open_hull_exceeds",
                Witness::Approximation {
                    set: e,
                    approx: hull,
                    set_mass,
                    approx_mass,
                },
            );
        }
    }
    Verdict::holds("open_hull_attains_measure")
}

/// Dual of outer regularity: the supremum over closed subsets is attained at
/// the closed kernel.
pub fn is_inner_regular(space: &Space) -> Verdict {
    for &e in &space.sigma().measurable_sets() {
        let kernel = space.topology().closed_kernel(e);
        let set_mass = space.m(e);
        let approx_mass = space.m(kernel);
        if set_mass != approx_mass {
            return Verdict::fails(
                "closed_kernel_deficient",
                Witness::Approximation {
                    set: e,
                    approx: kernel,
                    set_mass,
                    approx_mass,
                },
            );
        }
    }
    Verdict::holds("closed_kernel_attains_measure")
}

/// Every measurable set admits a closed-inside/open-outside sandwich of
/// excess measure zero. The tightest sandwich is (kernel, hull).
pub fn is_strongly_regular(space: &Space) -> Verdict {
    for &e in &space.sigma().measurable_sets() {
        let kernel = space.topology().closed_kernel(e);
        let hull = space.topology().open_hull(e);
        let excess = space.m(hull.difference(kernel));
        // The three sandwich forms (two-sided, open-excess-only,
        // closed-deficit-only) must agree set by set.
        let outer_gap = space.m(hull.difference(e));
        let inner_gap = space.m(e.difference(kernel));
        debug_assert_eq!(
            excess.is_zero(),
            outer_gap.is_zero() && inner_gap.is_zero(),
            "sandwich forms disagree on {e:?}"
        );
        if !excess.is_zero() {
            return Verdict::fails(
                "sandwich_excess_positive",
                Witness::Sandwich {
                    set: e,
                    kernel,
                    hull,
                    excess,
                },
            );
        }
    }
    Verdict::holds("zero_excess_sandwiches")
}

/// With finitely many atoms, σ-finiteness is simply "every atom has finite
/// mass" (equivalently, the whole space has finite measure).
pub fn is_sigma_finite(space: &Space) -> Verdict {
    let infinite = space
        .sigma()
        .atoms()
        .iter()
        .enumerate()
        .filter(|(i, _)| space.measure().mass_of_atom(*i).is_infinite())
        .map(|(_, a)| *a)
        .min();
    match infinite {
        Some(atom) => Verdict::fails("infinite_atom", Witness::InfiniteAtom { atom }),
        None => Verdict::holds("all_atoms_finite"),
    }
}

/// Every point lies in an open set of finite measure; finitely many opens
/// then already cover the space.
pub fn has_open_sigma_finite_cover(space: &Space) -> Verdict {
    for p in space.full().iter() {
        let covered = space
            .topology()
            .opens()
            .iter()
            .any(|o| o.contains(p) && space.m(*o).is_finite());
        if !covered {
            return Verdict::fails(
                "point_without_finite_neighborhood",
                Witness::Point { point: p },
            );
        }
    }
    Verdict::holds("finite_measure_open_cover")
}

/// Every open set splits into a closed set and a measurable null set. The
/// best closed part is the kernel, so the condition is that each open's gap
/// above its kernel is null.
pub fn opens_decompose(space: &Space) -> Verdict {
    for &u in space.topology().opens() {
        let kernel = space.topology().closed_kernel(u);
        let gap = space.m(u.difference(kernel));
        if !gap.is_zero() {
            return Verdict::fails(
                "open_kernel_gap_positive",
                Witness::OpenGap {
                    open: u,
                    kernel,
                    gap,
                },
            );
        }
    }
    Verdict::holds("opens_split_closed_plus_null")
}

/// Disjoint closed sets are separated by disjoint open sets. If any open
/// pair separates, the pair of open hulls does, since every open superset
/// contains the hull.
pub fn is_normal(space: &Space) -> Verdict {
    let closeds = space.topology().closed_sets();
    for (i, &a) in closeds.iter().enumerate() {
        for &b in &closeds[i + 1..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let ha = space.topology().open_hull(a);
            let hb = space.topology().open_hull(b);
            if !ha.is_disjoint(hb) {
                return Verdict::fails(
                    "unseparated_closed_pair",
                    Witness::ClosedPair {
                        first: a,
                        second: b,
                    },
                );
            }
        }
    }
    Verdict::holds("closed_pairs_separated")
}

/// The finest continuous function on a carrier: points labeled by the
/// clopen atoms of the subspace topology. Any continuous function on the
/// carrier is a coarsening of this one.
pub(crate) fn finest_continuous_partition(
    topology: &Topology,
    carrier: Subset,
) -> LabeledPartition {
    let sub = topology.subspace(carrier);
    LabeledPartition::from_blocks(carrier, sub.clopen_atoms().blocks())
}

/// Whether `u` (restricted to `from`) extends to a globally continuous
/// function: `u` must be constant on the trace of every clopen atom of the
/// whole space. Atoms missing the carrier are free to take fresh values.
pub(crate) fn extends_continuously(
    clopen_atoms: &Partition,
    u: &LabeledPartition,
    from: Subset,
) -> bool {
    clopen_atoms
        .blocks()
        .iter()
        .all(|a| u.is_constant_on(a.intersection(from)))
}

/// The canonical extension: each clopen atom takes the label `u` forces on
/// its trace, and atoms with an empty trace take one fresh label each.
pub(crate) fn build_extension(
    full: Subset,
    clopen_atoms: &Partition,
    u: &LabeledPartition,
    from: Subset,
) -> LabeledPartition {
    let mut pairs: Vec<(usize, u8)> = Vec::new();
    let mut fresh = u.block_count() as u8;
    for block in clopen_atoms.blocks() {
        let label = match u.unique_label_on(block.intersection(from)) {
            crate::labeled::LabelTrace::Single(l) => l,
            crate::labeled::LabelTrace::Empty => {
                fresh += 1;
                fresh - 1
            }
            crate::labeled::LabelTrace::Mixed => {
                unreachable!("extension built without checking extendability")
            }
        };
        for p in block.iter() {
            pairs.push((p, label));
        }
    }
    LabeledPartition::from_labels(full, &pairs)
}

/// Every continuous function on every closed set extends continuously to
/// the whole space. Coincides with normality.
pub fn has_tietze_property(space: &Space) -> Verdict {
    let clopen = space.topology().clopen_atoms();
    for &c in &space.topology().closed_sets() {
        let finest = finest_continuous_partition(space.topology(), c);
        if !extends_continuously(&clopen, &finest, c) {
            return Verdict::fails(
                "unextendable_restriction",
                Witness::Restriction {
                    closed: c,
                    function: finest,
                },
            );
        }
    }
    Verdict::holds("all_restrictions_extend")
}

/// Continuous functions on closed sets extend after discarding a closed
/// subset of measure deficit zero.
pub fn is_almost_normal(space: &Space) -> Verdict {
    let clopen = space.topology().clopen_atoms();
    let closeds = space.topology().closed_sets();
    for &c in &closeds {
        let finest = finest_continuous_partition(space.topology(), c);
        let ok = closeds.iter().any(|&shrunk| {
            shrunk.is_subset_of(c)
                && space.m(c.difference(shrunk)).is_zero()
                && extends_continuously(&clopen, &finest, shrunk)
        });
        if !ok {
            return Verdict::fails(
                "no_null_deficit_extension",
                Witness::Restriction {
                    closed: c,
                    function: finest,
                },
            );
        }
    }
    Verdict::holds("extensions_after_null_shrink")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin, companion_infinite_measure_model};
    use crate::parse::parse_model;
    use crate::{mass, mass_inf};

    #[test]
    fn borel_regularity_examples() {
        assert!(is_borel_regular(&builtin("outer-not-inner")).holds);
        assert!(is_borel_regular(&builtin("counting")).holds);

        // τ = {∅,{c},X} with the powerset σ-algebra and a unit mass on `a`:
        // {b} has minimal Borel superset {a b} of measure 1 ≠ 0.
        let src = "points a b c\nopen {c}\nsigma powerset\nmass {a} 1\nmass {b} 0\nmass {c} 0\n";
        let space = parse_model(src).unwrap();
        let verdict = is_borel_regular(&space);
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Approximation {
                set,
                approx,
                set_mass,
                approx_mass,
            } => {
                assert_eq!(set, Subset::singleton(1));
                assert_eq!(approx, Subset::from_bits(0b011));
                assert_eq!(set_mass, mass(0));
                assert_eq!(approx_mass, mass(1));
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn outer_regularity_examples() {
        assert!(is_outer_regular(&builtin("outer-not-inner")).holds);
        assert!(is_outer_regular(&builtin("discrete-infinite")).holds);

        let verdict = is_outer_regular(&builtin("counting"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Approximation {
                set,
                approx,
                set_mass,
                approx_mass,
            } => {
                assert_eq!(set, Subset::singleton(0));
                assert_eq!(approx, Subset::from_bits(0b101));
                assert_eq!(set_mass, mass(1));
                assert_eq!(approx_mass, mass(2));
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn inner_regularity_examples() {
        let verdict = is_inner_regular(&builtin("outer-not-inner"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Approximation {
                set,
                approx,
                set_mass,
                approx_mass,
            } => {
                assert_eq!(set, Subset::singleton(0));
                assert_eq!(approx, Subset::EMPTY);
                assert_eq!(set_mass, mass_inf());
                assert_eq!(approx_mass, mass(0));
            }
            w => panic!("unexpected witness {w:?}"),
        }

        assert!(is_inner_regular(&builtin("discrete-infinite")).holds);

        let verdict = is_inner_regular(&builtin("counting"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Approximation { set, .. } => assert_eq!(set, Subset::singleton(2)),
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn strong_regularity_examples() {
        assert!(is_strongly_regular(&builtin("dirac")).holds);
        assert!(!is_strongly_regular(&builtin("outer-not-inner")).holds);
        assert!(is_strongly_regular(&builtin("weak-lusin-only")).holds);
    }

    #[test]
    fn sigma_finite_examples() {
        assert!(!is_sigma_finite(&builtin("outer-not-inner")).holds);
        assert!(is_sigma_finite(&builtin("counting")).holds);
        let verdict = is_sigma_finite(&builtin("discrete-infinite"));
        assert!(!verdict.holds);
        assert_eq!(
            verdict.witness,
            Some(Witness::InfiniteAtom {
                atom: Subset::singleton(0)
            })
        );
    }

    #[test]
    fn open_cover_examples() {
        assert!(has_open_sigma_finite_cover(&builtin("counting")).holds);
        let verdict = has_open_sigma_finite_cover(&builtin("outer-not-inner"));
        assert!(!verdict.holds);
        assert_eq!(verdict.witness, Some(Witness::Point { point: 0 }));
        assert!(!has_open_sigma_finite_cover(&builtin("discrete-infinite")).holds);
    }

    #[test]
    fn decomposition_examples() {
        let verdict = opens_decompose(&builtin("counting"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::OpenGap { open, kernel, gap } => {
                assert_eq!(open, Subset::singleton(2));
                assert_eq!(kernel, Subset::EMPTY);
                assert_eq!(gap, mass(1));
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(opens_decompose(&builtin("weak-lusin-only")).holds);
        assert!(opens_decompose(&builtin("discrete-infinite")).holds);
    }

    #[test]
    fn normality_examples() {
        for name in ["weak-lusin-only", "dirac", "counting"] {
            let verdict = is_normal(&builtin(name));
            assert!(!verdict.holds, "{name}");
            assert_eq!(
                verdict.witness,
                Some(Witness::ClosedPair {
                    first: Subset::singleton(0),
                    second: Subset::singleton(1),
                })
            );
        }
        assert!(is_normal(&builtin("outer-not-inner")).holds);
        assert!(is_normal(&builtin("discrete-infinite")).holds);
        assert!(is_normal(&builtin("sierpinski")).holds);
    }

    #[test]
    fn tietze_examples() {
        assert!(has_tietze_property(&builtin("sierpinski")).holds);
        let verdict = has_tietze_property(&builtin("weak-lusin-only"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Restriction { closed, function } => {
                assert_eq!(closed, Subset::from_bits(0b011));
                assert_eq!(function.block_count(), 2);
            }
            w => panic!("unexpected witness {w:?}"),
        }
        let indiscrete =
            parse_model("points a b\nsigma powerset\nmass {a} 1\nmass {b} 1\n").unwrap();
        assert!(has_tietze_property(&indiscrete).holds);
    }

    #[test]
    fn almost_normality_examples() {
        assert!(is_almost_normal(&builtin("dirac")).holds);
        let verdict = is_almost_normal(&builtin("weak-lusin-only"));
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Restriction { closed, .. } => assert_eq!(closed, Subset::from_bits(0b011)),
            w => panic!("unexpected witness {w:?}"),
        }

        // Measure that is infinite on every nonempty set: extension must
        // happen from the full closed set or not at all.
        let bad = companion_infinite_measure_model(&builtin("weak-lusin-only"));
        let verdict = is_almost_normal(&bad);
        assert!(!verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Restriction { closed, function } => {
                assert_eq!(closed, Subset::from_bits(0b011));
                assert_eq!(
                    function.blocks(),
                    vec![Subset::singleton(0), Subset::singleton(1)]
                );
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }
}
