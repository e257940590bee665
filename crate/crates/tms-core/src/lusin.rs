//! Deciders and witness constructors for the weak/strong Lusin-type
//! properties (closed and Borel variants) and for representatives with
//! Borel fibers.
//!
//! All five properties quantify over every measurable function. The finest
//! measurable partition — the σ-atoms with pairwise distinct labels — is the
//! hardest test function: any measurable function coarsens it, and a witness
//! for the finest partition works verbatim for every coarsening (merging
//! labels preserves constancy on every block). The deciders therefore test
//! only the finest partition; the all-partitions quantification survives as
//! a brute-force oracle.

use crate::labeled::LabeledPartition;
use crate::lattice::is_continuous;
use crate::regularity::{build_extension, extends_continuously, minimal_borel_superset};
use crate::space::{NotMeasurable, Space};
use crate::subset::Subset;
use crate::verdict::{LusinKind, LusinWitness, RepWitness, Verdict, Witness};

/// The σ-atom partition with all-distinct labels.
pub fn finest_measurable_partition(space: &Space) -> LabeledPartition {
    LabeledPartition::from_blocks(space.full(), space.sigma().atoms())
}

/// Builds a verified witness for the requested Lusin kind, following the
/// constructive route: around each fiber E take the tightest sandwich
/// (closed kernel D ⊆ E ⊆ open hull O) and remove the union of the gaps
/// O ∖ D; what remains is closed and leaves every fiber trace relatively
/// open. For the strong kinds the witness set is then shrunk until the
/// function is constant on every clopen atom trace, at which point the
/// canonical extension exists.
///
/// Returns `Ok(None)` exactly when the corresponding decider fails.
pub fn construct_lusin_set(
    space: &Space,
    u: &LabeledPartition,
    kind: LusinKind,
) -> Result<Option<LusinWitness>, NotMeasurable> {
    if !u.is_measurable(space.sigma()) {
        return Err(NotMeasurable);
    }
    let t = space.topology();
    let full = space.full();

    let gaps = u
        .blocks()
        .iter()
        .map(|&e| t.open_hull(e).difference(t.closed_kernel(e)))
        .fold(Subset::EMPTY, Subset::union);
    let constructed = full.difference(gaps);

    let base_ok = |c: Subset| space.m(full.difference(c)).is_zero() && is_continuous(t, u, c);

    // The constructed set is tried first; the exhaustive scan behind it is
    // the definition itself, so the construction can never disagree with it.
    let candidates = |sets: Vec<Subset>| {
        std::iter::once(constructed)
            .chain(sets)
            .filter(|c| match kind {
                LusinKind::Weak | LusinKind::Strong => t.is_closed(*c),
                LusinKind::WeakBorel | LusinKind::StrongBorel => true,
            })
            .collect::<Vec<Subset>>()
    };
    let pool = if kind.wants_borel_set() {
        candidates(t.borel_sets())
    } else {
        candidates(t.closed_sets())
    };

    let base = pool.iter().copied().find(|&c| base_ok(c));
    let Some(base) = base else {
        return Ok(None);
    };

    if !kind.wants_extension() {
        return Ok(Some(LusinWitness {
            kind,
            set: base,
            extension: None,
        }));
    }

    // Strong kinds: shrink inside the base set by a null difference until a
    // continuous extension exists.
    let clopen = t.clopen_atoms();
    let shrink_pool: Vec<Subset> = if kind.wants_borel_set() {
        t.borel_sets()
    } else {
        t.closed_sets()
    };
    let found = shrink_pool.into_iter().find(|&c| {
        c.is_subset_of(base)
            && space.m(base.difference(c)).is_zero()
            && extends_continuously(&clopen, u, c)
    });
    Ok(found.map(|set| LusinWitness {
        kind,
        set,
        extension: Some(build_extension(full, &clopen, u, set)),
    }))
}

fn lusin_verdict(
    space: &Space,
    kind: LusinKind,
    hold_note: &'static str,
    fail_note: &'static str,
) -> Verdict {
    let u = finest_measurable_partition(space);
    match construct_lusin_set(space, &u, kind).expect("finest partition is measurable") {
        Some(w) => Verdict::holds_with(hold_note, Witness::Lusin(w)),
        None => Verdict::fails(fail_note, Witness::Function { function: u }),
    }
}

/// There is a closed set with null complement on which every measurable
/// function is continuous.
pub fn weak_lusin(space: &Space) -> Verdict {
    lusin_verdict(
        space,
        LusinKind::Weak,
        "continuous_on_full_measure_closed",
        "no_full_measure_continuous_restriction",
    )
}

/// As [`weak_lusin`], with the witness set ranging over Borel sets.
pub fn weak_lusin_borel(space: &Space) -> Verdict {
    lusin_verdict(
        space,
        LusinKind::WeakBorel,
        "continuous_on_full_measure_borel",
        "no_full_measure_borel_restriction",
    )
}

/// There are a closed set with null complement and a globally continuous
/// function agreeing with the given one on that set.
pub fn strong_lusin(space: &Space) -> Verdict {
    lusin_verdict(
        space,
        LusinKind::Strong,
        "extension_from_full_measure_closed",
        "no_full_measure_extension",
    )
}

/// As [`strong_lusin`], with the witness set ranging over Borel sets.
pub fn strong_lusin_borel(space: &Space) -> Verdict {
    lusin_verdict(
        space,
        LusinKind::StrongBorel,
        "extension_from_full_measure_borel",
        "no_full_measure_borel_extension",
    )
}

/// Every measurable function equals, off a Borel null set, a function all of
/// whose fibers are Borel.
///
/// A function with Borel fibers is constant on every Borel atom, so for the
/// finest partition the question reduces atom by atom: a Borel atom that
/// contains two or more σ-atoms must be discarded entirely, and the smallest
/// Borel set containing everything discarded is exactly the union of those
/// splitting atoms. The property therefore holds iff every splitting Borel
/// atom is null. The returned witness is what the search "null Borel sets
/// ascending by size, then relabelings in lexicographic order" would find
/// first.
pub fn has_borel_representatives(space: &Space) -> Verdict {
    let u = finest_measurable_partition(space);
    let borel = space.topology().borel_atoms();

    let mut null_set = Subset::EMPTY;
    for &d in borel.blocks() {
        let splits = space.sigma().atoms_in(d).count() >= 2;
        if !splits {
            continue;
        }
        if !space.m(d).is_zero() {
            return Verdict::fails(
                "splitting_borel_atom_with_mass",
                Witness::Function { function: u },
            );
        }
        null_set = null_set.union(d);
    }

    // Reassign every discarded point to the first block; the resulting
    // fibers are unions of Borel atoms by construction.
    let mut pairs: Vec<(usize, u8)> = Vec::new();
    for p in space.full().iter() {
        let label = if null_set.contains(p) {
            0
        } else {
            u.label_of(p).unwrap()
        };
        pairs.push((p, label));
    }
    let representative = LabeledPartition::from_labels(space.full(), &pairs);
    debug_assert!(representative
        .blocks()
        .iter()
        .all(|b| b.is_empty() || *b == minimal_borel_superset(&borel, *b)));
    Verdict::holds_with(
        "null_borel_relabeling",
        Witness::Rep(RepWitness {
            null_set,
            representative,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::parse::parse_model;

    #[test]
    fn finest_partition_examples() {
        assert_eq!(
            finest_measurable_partition(&builtin("counting")).block_count(),
            3
        );
        assert_eq!(
            finest_measurable_partition(&builtin("sierpinski")).block_count(),
            2
        );
        let coarse = parse_model(
            "points a b c\nopen {c}\nsigma atoms {a b} {c}\nmass {a b} 1\nmass {c} 1\n",
        )
        .unwrap();
        assert_eq!(finest_measurable_partition(&coarse).block_count(), 2);
    }

    #[test]
    fn weak_lusin_examples() {
        let verdict = weak_lusin(&builtin("weak-lusin-only"));
        assert!(verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Lusin(w) => assert_eq!(w.set, Subset::from_bits(0b011)),
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(!weak_lusin(&builtin("counting")).holds);
        assert!(!weak_lusin(&builtin("outer-not-inner")).holds);
    }

    #[test]
    fn weak_lusin_borel_examples() {
        assert!(weak_lusin_borel(&builtin("weak-lusin-only")).holds);
        assert!(!weak_lusin_borel(&builtin("counting")).holds);
        assert!(weak_lusin_borel(&builtin("discrete-infinite")).holds);

        // Borel witness sets can succeed where closed ones fail: with
        // τ = {∅,{c},X} and mass only on c, the Borel set {c} carries the
        // whole measure but is not closed.
        let src = "points a b c\nopen {c}\nsigma powerset\nmass {a} 0\nmass {b} 0\nmass {c} 1\n";
        let space = parse_model(src).unwrap();
        assert!(!weak_lusin(&space).holds);
        let verdict = weak_lusin_borel(&space);
        assert!(verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Lusin(w) => assert_eq!(w.set, Subset::singleton(2)),
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn strong_lusin_examples() {
        let verdict = strong_lusin(&builtin("dirac"));
        assert!(verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Lusin(w) => {
                assert_eq!(w.set, Subset::singleton(0));
                let g = w.extension.unwrap();
                assert_eq!(g.block_count(), 1, "extension is constant");
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(!strong_lusin(&builtin("weak-lusin-only")).holds);
        assert!(strong_lusin(&builtin("discrete-infinite")).holds);
    }

    #[test]
    fn strong_lusin_borel_examples() {
        assert!(strong_lusin_borel(&builtin("dirac")).holds);
        assert!(!strong_lusin_borel(&builtin("weak-lusin-only")).holds);
        let zero = parse_model("points a b\nsigma atoms {a b}\nmass {a b} 0\n").unwrap();
        assert!(strong_lusin_borel(&zero).holds);
    }

    #[test]
    fn borel_representative_examples() {
        assert!(!has_borel_representatives(&builtin("outer-not-inner")).holds);

        let verdict = has_borel_representatives(&builtin("counting"));
        assert!(verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Rep(w) => assert_eq!(w.null_set, Subset::EMPTY),
            w => panic!("unexpected witness {w:?}"),
        }

        let src = "points a b c\nopen {c}\nsigma powerset\nmass {a} 0\nmass {b} 0\nmass {c} 1\n";
        let space = parse_model(src).unwrap();
        let verdict = has_borel_representatives(&space);
        assert!(verdict.holds);
        match verdict.witness.unwrap() {
            Witness::Rep(w) => {
                assert_eq!(w.null_set, Subset::from_bits(0b011));
                assert_eq!(w.representative.block_count(), 2);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn construction_matches_the_deciders() {
        for name in [
            "outer-not-inner",
            "weak-lusin-only",
            "dirac",
            "counting",
            "discrete-infinite",
            "sierpinski",
        ] {
            let space = builtin(name);
            let u = finest_measurable_partition(&space);
            for (kind, decider) in [
                (LusinKind::Weak, weak_lusin(&space).holds),
                (LusinKind::WeakBorel, weak_lusin_borel(&space).holds),
                (LusinKind::Strong, strong_lusin(&space).holds),
                (LusinKind::StrongBorel, strong_lusin_borel(&space).holds),
            ] {
                let constructed = construct_lusin_set(&space, &u, kind).unwrap();
                assert_eq!(constructed.is_some(), decider, "{name} {kind:?}");
            }
        }
    }

    #[test]
    fn construct_weak_follows_the_sandwich_route() {
        let space = builtin("weak-lusin-only");
        let u = finest_measurable_partition(&space);
        let w = construct_lusin_set(&space, &u, LusinKind::Weak)
            .unwrap()
            .unwrap();
        assert_eq!(w.set, Subset::from_bits(0b011));

        let constant = LabeledPartition::constant(space.full());
        let w = construct_lusin_set(&space, &constant, LusinKind::Weak)
            .unwrap()
            .unwrap();
        assert_eq!(w.set, space.full());
    }

    #[test]
    fn construct_rejects_unmeasurable_functions() {
        let coarse = parse_model(
            "points a b c\nopen {c}\nsigma atoms {a b} {c}\nmass {a b} 1\nmass {c} 1\n",
        )
        .unwrap();
        let fine = LabeledPartition::from_blocks(
            coarse.full(),
            &[
                Subset::singleton(0),
                Subset::singleton(1),
                Subset::singleton(2),
            ],
        );
        assert_eq!(
            construct_lusin_set(&coarse, &fine, LusinKind::Weak),
            Err(NotMeasurable)
        );
    }
}
