//! Purely topological computations: Borel atoms, closed sets, the closed
//! kernel / open hull pair, clopen atoms, subspaces, and the finite
//! continuity criterion.
//!
//! At finite scale a union of closed sets is closed, so the largest closed
//! subset of any set exists and plays the role countable unions of closed
//! sets play elsewhere; dually the smallest open superset realizes every
//! infimum over open covers.

use crate::labeled::LabeledPartition;
use crate::subset::Subset;
use crate::topology::Topology;

/// Pairwise-disjoint nonempty blocks covering a carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    carrier: Subset,
    blocks: Vec<Subset>,
}

impl Partition {
    /// Blocks are sorted by their minimum point; empties are dropped.
    pub fn new(carrier: Subset, mut blocks: Vec<Subset>) -> Partition {
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.min_point());
        debug_assert!(
            blocks.iter().try_fold(Subset::EMPTY, |acc, b| acc
                .is_disjoint(*b)
                .then(|| acc.union(*b)))
                == Some(carrier),
            "blocks must partition the carrier"
        );
        Partition { carrier, blocks }
    }

    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> Option<Subset> {
        self.blocks.iter().copied().find(|b| b.contains(point))
    }
}

/// Groups the points of `carrier` by signature, where points x, y share a
/// block iff `signature(x) == signature(y)`. Blocks come out sorted by their
/// minimum point.
fn partition_by_signature<S: Eq>(carrier: Subset, signature: impl Fn(usize) -> S) -> Partition {
    let mut reps: Vec<(S, Subset)> = Vec::new();
    for p in carrier.iter() {
        let sig = signature(p);
        match reps.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, block)) => block.insert(p),
            None => reps.push((sig, Subset::singleton(p))),
        }
    }
    Partition::new(carrier, reps.into_iter().map(|(_, b)| b).collect())
}

impl Topology {
    /// Atoms of the generated σ-algebra: the classes of "x and y lie in
    /// exactly the same open sets". Every Borel set is a union of these.
    pub fn borel_atoms(&self) -> Partition {
        partition_by_signature(self.ground(), |p| {
            self.opens()
                .iter()
                .map(|o| o.contains(p))
                .collect::<Vec<bool>>()
        })
    }

    /// All Borel sets (unions of Borel atoms), ascending by bit pattern.
    pub fn borel_sets(&self) -> Vec<Subset> {
        let atoms = self.borel_atoms();
        let mut out: Vec<Subset> = Subset::full(atoms.blocks().len())
            .subsets()
            .map(|choice| {
                choice
                    .iter()
                    .fold(Subset::EMPTY, |acc, i| acc.union(atoms.blocks()[i]))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Complements of the open sets, deduplicated and ascending.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .opens()
            .iter()
            .map(|o| o.complement_in(self.ground()))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.is_open(s.complement_in(self.ground()))
    }

    /// The largest closed subset of `s`; equals `s` iff `s` is closed.
    pub fn closed_kernel(&self, s: Subset) -> Subset {
        self.opens()
            .iter()
            .map(|o| o.complement_in(self.ground()))
            .filter(|c| c.is_subset_of(s))
            .fold(Subset::EMPTY, Subset::union)
    }

    /// The smallest open superset of `s`; equals `s` iff `s` is open.
    pub fn open_hull(&self, s: Subset) -> Subset {
        self.opens()
            .iter()
            .copied()
            .filter(|o| s.is_subset_of(*o))
            .fold(self.ground(), Subset::intersection)
    }

    /// Minimal nonempty clopen sets: the atoms of the Boolean algebra of
    /// simultaneously closed and open sets. A function into a Hausdorff
    /// codomain is continuous iff it is constant on each of these blocks.
    pub fn clopen_atoms(&self) -> Partition {
        let clopens: Vec<Subset> = self
            .opens()
            .iter()
            .copied()
            .filter(|o| self.is_closed(*o))
            .collect();
        partition_by_signature(self.ground(), |p| {
            clopens.iter().map(|o| o.contains(p)).collect::<Vec<bool>>()
        })
    }

    /// The subspace topology on `carrier`, expressed in the same point
    /// coordinates: opens are the traces `O ∩ carrier`.
    pub fn subspace(&self, carrier: Subset) -> Topology {
        Topology::new(
            carrier,
            self.opens()
                .iter()
                .map(|o| o.intersection(carrier))
                .collect(),
        )
    }
}

/// Whether the restriction of `u` to `carrier` is continuous in the subspace
/// topology: every fiber trace must be relatively open, equivalently `u` must
/// be constant on every clopen atom of the subspace.
///
/// Requires `u.carrier() ⊇ carrier`.
pub fn is_continuous(topology: &Topology, u: &LabeledPartition, carrier: Subset) -> bool {
    debug_assert!(carrier.is_subset_of(u.carrier()));
    let sub = topology.subspace(carrier);
    sub.clopen_atoms()
        .blocks()
        .iter()
        .all(|block| u.is_constant_on(*block))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn tau_a() -> Topology {
        // {∅, {c}, X} on three points
        Topology::new(Subset::full(3), vec![Subset::singleton(2)])
    }

    fn tau_b() -> Topology {
        // {∅, {c}, {a c}, {b c}, X}
        Topology::new(
            Subset::full(3),
            vec![
                Subset::singleton(2),
                Subset::from_bits(0b101),
                Subset::from_bits(0b110),
            ],
        )
    }

    #[test]
    fn borel_atoms_examples() {
        let atoms = tau_a().borel_atoms();
        assert_eq!(
            atoms.blocks(),
            &[Subset::from_bits(0b011), Subset::from_bits(0b100)]
        );

        let discrete = Topology::discrete(Subset::full(2));
        assert_eq!(
            discrete.borel_atoms().blocks(),
            &[Subset::singleton(0), Subset::singleton(1)]
        );

        let atoms_b = tau_b().borel_atoms();
        assert_eq!(atoms_b.blocks().len(), 3);
        assert_eq!(tau_b().borel_sets().len(), 8);
    }

    /// Closing the open family under complements and unions must generate
    /// exactly the unions of Borel atoms.
    #[test]
    fn borel_atoms_match_iterative_closure() {
        for t in [tau_a(), tau_b(), Topology::discrete(Subset::full(3))] {
            let mut family: Vec<Subset> = t.opens().to_vec();
            loop {
                let mut grew = false;
                let snapshot = family.clone();
                for &s in &snapshot {
                    let c = s.complement_in(t.ground());
                    if !family.contains(&c) {
                        family.push(c);
                        grew = true;
                    }
                    for &s2 in &snapshot {
                        let u = s.union(s2);
                        if !family.contains(&u) {
                            family.push(u);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            family.sort_unstable();
            assert_eq!(family, t.borel_sets());
        }
    }

    #[test]
    fn closed_sets_examples() {
        let mut expect = vec![
            Subset::EMPTY,
            Subset::singleton(0),
            Subset::singleton(1),
            Subset::from_bits(0b011),
            Subset::full(3),
        ];
        expect.sort_unstable();
        assert_eq!(tau_b().closed_sets(), expect);

        assert_eq!(
            Topology::indiscrete(Subset::full(3)).closed_sets(),
            vec![Subset::EMPTY, Subset::full(3)]
        );
        assert_eq!(
            tau_a().closed_sets(),
            vec![Subset::EMPTY, Subset::from_bits(0b011), Subset::full(3)]
        );
    }

    #[test]
    fn kernel_and_hull_examples() {
        let b = tau_b();
        assert_eq!(b.closed_kernel(Subset::singleton(2)), Subset::EMPTY);
        for &c in &b.closed_sets() {
            assert_eq!(b.closed_kernel(c), c);
        }
        let a = tau_a();
        assert_eq!(a.closed_kernel(Subset::from_bits(0b101)), Subset::EMPTY);

        assert_eq!(b.open_hull(Subset::singleton(0)), Subset::from_bits(0b101));
        for &o in b.opens() {
            assert_eq!(b.open_hull(o), o);
        }
        assert_eq!(a.open_hull(Subset::singleton(0)), Subset::full(3));
    }

    #[test]
    fn kernel_hull_duality_on_all_subsets() {
        for t in [tau_a(), tau_b(), Topology::discrete(Subset::full(3))] {
            for s in t.ground().subsets() {
                let k = t.closed_kernel(s);
                let h = t.open_hull(s);
                assert!(k.is_subset_of(s) && s.is_subset_of(h));
                assert_eq!(
                    t.closed_kernel(s.complement_in(t.ground())),
                    h.complement_in(t.ground())
                );
                assert_eq!(t.closed_kernel(k), k);
                assert_eq!(t.open_hull(h), h);
            }
        }
    }

    #[test]
    fn clopen_atoms_examples() {
        assert_eq!(tau_b().clopen_atoms().blocks(), &[Subset::full(3)]);
        assert_eq!(
            Topology::discrete(Subset::full(3))
                .clopen_atoms()
                .blocks()
                .len(),
            3
        );
        let sub = tau_b().subspace(Subset::from_bits(0b011));
        assert_eq!(
            sub.clopen_atoms().blocks(),
            &[Subset::singleton(0), Subset::singleton(1)]
        );
    }

    #[test]
    fn subspace_examples() {
        let c = Subset::from_bits(0b011);
        let sub = tau_b().subspace(c);
        assert_eq!(sub.opens().len(), 4);
        assert_eq!(sub.ground(), c);

        assert_eq!(tau_b().subspace(tau_b().ground()), tau_b());

        let sub_a = tau_a().subspace(c);
        assert_eq!(sub_a.opens(), &[Subset::EMPTY, c]);
    }

    #[test]
    fn continuity_examples() {
        let b = tau_b();
        let u = LabeledPartition::from_blocks(
            Subset::full(3),
            &[
                Subset::singleton(0),
                Subset::singleton(1),
                Subset::singleton(2),
            ],
        );
        assert!(is_continuous(&b, &u, Subset::from_bits(0b011)));
        assert!(!is_continuous(&b, &u, Subset::full(3)));

        let constant = LabeledPartition::from_blocks(Subset::full(3), &[Subset::full(3)]);
        for space in builtins::builtin_examples() {
            if space.space.points().len() == 3 {
                assert!(is_continuous(
                    space.space.topology(),
                    &constant,
                    space.space.full()
                ));
            }
        }
    }
}
