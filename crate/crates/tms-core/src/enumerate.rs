//! Exhaustive and sampled generation of model families: topologies,
//! σ-algebras refining the Borel atoms, measure grids, and canonical forms
//! up to point relabeling.
//!
//! Exhaustive topology enumeration encodes a family of subsets of an n-point
//! ground set as a bitmask over the 2^n subset indices (n ≤ 5 fits a u32).
//! The production path grows union/intersection-closed families one subset
//! at a time with forced-closure pruning, deciding membership of each subset
//! in increasing index order so that every closed family is reached along
//! exactly one path. A direct filter over all subset families (n ≤ 4) serves
//! as the independent cross-check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measure::Measure;
use crate::sigma::SigmaAlgebra;
use crate::space::Space;
use crate::subset::{Subset, MAX_GROUND};
use crate::topology::Topology;
use crate::Mass;

/// Exhaustive enumeration limit for topologies.
pub const MAX_EXHAUSTIVE_POINTS: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaMode {
    /// Only the powerset σ-algebra.
    Powerset,
    /// Every partition refining the Borel atoms.
    AllRefinements,
}

/// Configuration for family enumeration.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub n: usize,
    pub mass_grid: Vec<Mass>,
    pub unlabeled: bool,
    pub sigma_mode: SigmaMode,
    /// Seed for the sampled regime (`n > MAX_EXHAUSTIVE_POINTS`).
    pub seed: u64,
}

impl EnumConfig {
    pub fn new(n: usize) -> EnumConfig {
        EnumConfig {
            n,
            mass_grid: vec![crate::mass(0), crate::mass(1), crate::mass_inf()],
            unlabeled: false,
            sigma_mode: SigmaMode::Powerset,
            seed: 0,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum EnumError {
    #[error("E_TOO_LARGE: exhaustive enumeration supports up to {limit} points, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("point count must be between 1 and {}", MAX_GROUND)]
    InvalidPointCount(usize),
}

fn check_exhaustive(n: usize) -> Result<(), EnumError> {
    if n == 0 || n > MAX_GROUND {
        Err(EnumError::InvalidPointCount(n))
    } else if n > MAX_EXHAUSTIVE_POINTS {
        Err(EnumError::TooLarge {
            n,
            limit: MAX_EXHAUSTIVE_POINTS,
        })
    } else {
        Ok(())
    }
}

/// Closes a family (bitmask over subset indices) under pairwise union and
/// intersection.
fn close_family(mut family: u32) -> u32 {
    loop {
        let mut grown = family;
        let mut rest = family;
        while rest != 0 {
            let a = rest.trailing_zeros();
            rest &= rest - 1;
            let mut others = family;
            while others != 0 {
                let b = others.trailing_zeros();
                others &= others - 1;
                grown |= 1 << (a | b);
                grown |= 1 << (a & b);
            }
        }
        if grown == family {
            return family;
        }
        family = grown;
    }
}

fn family_is_closed(family: u32) -> bool {
    close_family(family) == family
}

fn grow_rec(s: u32, full_idx: u32, chosen: u32, excluded: u32, out: &mut Vec<u32>) {
    if s == full_idx {
        out.push(chosen);
        return;
    }
    if chosen & (1 << s) != 0 {
        grow_rec(s + 1, full_idx, chosen, excluded, out);
        return;
    }
    grow_rec(s + 1, full_idx, chosen, excluded | (1 << s), out);
    let closed = close_family(chosen | (1 << s));
    if closed & excluded == 0 {
        grow_rec(s + 1, full_idx, closed, excluded, out);
    }
}

fn family_masks_by_growth(n: usize) -> Vec<u32> {
    let full_idx = (1u32 << n) - 1;
    let base = 1 | (1u32 << full_idx);
    let mut out = Vec::new();
    grow_rec(1, full_idx, base, 0, &mut out);
    out
}

fn family_masks_by_filter(n: usize) -> Vec<u32> {
    let full_idx = (1u32 << n) - 1;
    let base = 1 | (1u32 << full_idx);
    let free: Vec<u32> = (1..full_idx).collect();
    let mut out = Vec::new();
    for pick in 0u32..(1 << free.len()) {
        let mut family = base;
        for (bit, s) in free.iter().enumerate() {
            if pick & (1 << bit) != 0 {
                family |= 1 << s;
            }
        }
        if family_is_closed(family) {
            out.push(family);
        }
    }
    out
}

fn family_to_topology(n: usize, family: u32) -> Topology {
    let mut opens = Vec::new();
    let mut rest = family;
    while rest != 0 {
        let s = rest.trailing_zeros();
        rest &= rest - 1;
        opens.push(Subset::from_bits(s as u16));
    }
    Topology::new(Subset::full(n), opens)
}

/// All permutations of `0..n` in lexicographic order; `perm[i]` is the image
/// of point `i`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn apply_perm(s: Subset, perm: &[usize]) -> Subset {
    let mut out = Subset::EMPTY;
    for p in s.iter() {
        out.insert(perm[p]);
    }
    out
}

fn topology_key(t: &Topology) -> Vec<u16> {
    t.opens().iter().map(|s| s.bits()).collect()
}

fn topology_key_under(t: &Topology, perm: &[usize]) -> Vec<u16> {
    let mut key: Vec<u16> = t
        .opens()
        .iter()
        .map(|s| apply_perm(*s, perm).bits())
        .collect();
    key.sort_unstable();
    key
}

/// Lexicographically minimal sorted open list over all point relabelings.
pub fn canonical_topology_key(t: &Topology) -> Vec<u16> {
    permutations(t.ground().len())
        .iter()
        .map(|perm| topology_key_under(t, perm))
        .min()
        .expect("at least the identity permutation")
}

/// All topologies on `n` labeled points, via closed-family growth.
/// With `unlabeled`, one lexicographically-minimal representative per
/// homeomorphism class.
pub fn enumerate_topologies(n: usize, unlabeled: bool) -> Result<Vec<Topology>, EnumError> {
    check_exhaustive(n)?;
    let mut out: Vec<Topology> = family_masks_by_growth(n)
        .into_iter()
        .map(|f| family_to_topology(n, f))
        .collect();
    if unlabeled {
        out.retain(|t| topology_key(t) == canonical_topology_key(t));
    }
    Ok(out)
}

/// Independent brute-force route: filter all subset families (n ≤ 4).
pub fn enumerate_topologies_by_filter(n: usize) -> Result<Vec<Topology>, EnumError> {
    check_exhaustive(n)?;
    if n > 4 {
        return Err(EnumError::TooLarge { n, limit: 4 });
    }
    Ok(family_masks_by_filter(n)
        .into_iter()
        .map(|f| family_to_topology(n, f))
        .collect())
}

/// Set partitions of a carrier in restricted-growth-string order (the
/// single-block partition first, the all-singletons partition last).
pub(crate) fn set_partitions_of(carrier: Subset) -> Vec<Vec<Subset>> {
    let points: Vec<usize> = carrier.iter().collect();
    let k = points.len();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut rgs = vec![0u8; k];
    loop {
        let block_count = usize::from(*rgs.iter().max().unwrap()) + 1;
        let mut blocks = vec![Subset::EMPTY; block_count];
        for (i, &g) in rgs.iter().enumerate() {
            blocks[g as usize].insert(points[i]);
        }
        out.push(blocks);

        // next restricted growth string
        let mut i = k;
        let advanced = loop {
            if i <= 1 {
                break false;
            }
            i -= 1;
            let prefix_max = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for slot in rgs.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break true;
            }
        };
        if !advanced {
            return out;
        }
    }
}

/// All σ-algebras between the Borel σ-algebra and the powerset: partitions
/// refining the Borel atoms, as a product of per-atom set partitions.
pub fn enumerate_sigma_algebras(t: &Topology) -> Vec<SigmaAlgebra> {
    let borel = t.borel_atoms();
    let per_atom: Vec<Vec<Vec<Subset>>> = borel
        .blocks()
        .iter()
        .map(|b| set_partitions_of(*b))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_atom.len()];
    loop {
        let mut atoms = Vec::new();
        for (i, c) in choice.iter().enumerate() {
            atoms.extend(per_atom[i][*c].iter().copied());
        }
        out.push(SigmaAlgebra::from_atoms(t.ground(), atoms));

        // odometer, last position fastest
        let mut pos = per_atom.len();
        let advanced = loop {
            if pos == 0 {
                break false;
            }
            pos -= 1;
            if choice[pos] + 1 < per_atom[pos].len() {
                choice[pos] += 1;
                for slot in choice.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break true;
            }
        };
        if !advanced {
            return out;
        }
    }
}

/// All mass assignments `atoms → grid`, in lexicographic order over the
/// atom tuple (last atom varies fastest).
pub fn enumerate_measures(sigma: &SigmaAlgebra, grid: &[Mass]) -> Vec<Measure> {
    assert!(!grid.is_empty(), "mass grid must be nonempty");
    let k = sigma.atoms().len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        out.push(Measure::new(
            choice.iter().map(|&i| grid[i].clone()).collect(),
        ));
        let mut pos = k;
        let advanced = loop {
            if pos == 0 {
                break false;
            }
            pos -= 1;
            if choice[pos] + 1 < grid.len() {
                choice[pos] += 1;
                for slot in choice.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break true;
            }
        };
        if !advanced {
            return out;
        }
    }
}

/// Default point names `a`, `b`, `c`, …
pub fn point_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// A key invariant under point relabelings that preserve opens, σ-atoms,
/// and masses: the lexicographic minimum over all permutations of
/// (sorted opens, sorted atoms, masses aligned with the sorted atoms).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    opens: Vec<u16>,
    atoms: Vec<u16>,
    masses: Vec<Mass>,
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "o")?;
        for (i, o) in self.opens.iter().enumerate() {
            write!(f, "{}{o}", if i == 0 { ':' } else { '.' })?;
        }
        write!(f, "|a")?;
        for (i, (a, m)) in self.atoms.iter().zip(&self.masses).enumerate() {
            write!(f, "{}{a}={m}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

fn space_key_under(space: &Space, perm: &[usize]) -> CanonicalKey {
    let mut opens: Vec<u16> = space
        .topology()
        .opens()
        .iter()
        .map(|o| apply_perm(*o, perm).bits())
        .collect();
    opens.sort_unstable();
    let mut pairs: Vec<(u16, Mass)> = space
        .sigma()
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            (
                apply_perm(*a, perm).bits(),
                space.measure().mass_of_atom(i).clone(),
            )
        })
        .collect();
    pairs.sort_by_key(|(bits, _)| *bits);
    let (atoms, masses) = pairs.into_iter().unzip();
    CanonicalKey {
        opens,
        atoms,
        masses,
    }
}

/// The canonical key of a space (minimum over all point permutations).
pub fn canonical_form(space: &Space) -> CanonicalKey {
    permutations(space.points().len())
        .iter()
        .map(|perm| space_key_under(space, perm))
        .min()
        .expect("at least the identity permutation")
}

/// Structural equivalence up to a point relabeling preserving opens,
/// σ-atoms, and masses.
pub fn are_homeomorphic(a: &Space, b: &Space) -> bool {
    a.points().len() == b.points().len() && canonical_form(a) == canonical_form(b)
}

/// The same space with points relabeled by `perm` (names kept in place).
pub fn permuted_space(space: &Space, perm: &[usize]) -> Space {
    let ground = space.full();
    let topology = Topology::new(
        ground,
        space
            .topology()
            .opens()
            .iter()
            .map(|o| apply_perm(*o, perm))
            .collect(),
    );
    let mut pairs: Vec<(Subset, Mass)> = space
        .sigma()
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            (
                apply_perm(*a, perm),
                space.measure().mass_of_atom(i).clone(),
            )
        })
        .collect();
    pairs.sort_by_key(|(a, _)| a.min_point());
    let (atoms, masses): (Vec<Subset>, Vec<Mass>) = pairs.into_iter().unzip();
    Space::new(
        space.points().to_vec(),
        topology,
        SigmaAlgebra::from_atoms(ground, atoms),
        Measure::new(masses),
    )
}

fn is_canonical_space(space: &Space) -> bool {
    let identity: Vec<usize> = (0..space.points().len()).collect();
    space_key_under(space, &identity) == canonical_form(space)
}

/// Streams every space of the configured family, in a deterministic order.
/// With `unlabeled`, exactly one representative per homeomorphism class.
pub fn enumerate_spaces(
    config: &EnumConfig,
) -> Result<Box<dyn Iterator<Item = Space> + Send>, EnumError> {
    if config.mass_grid.is_empty() {
        // An empty grid admits no measures at all; treat as an empty family.
        return Ok(Box::new(std::iter::empty()));
    }
    let names = point_names(config.n);
    let topologies = enumerate_topologies(config.n, config.unlabeled)?;
    let grid = config.mass_grid.clone();
    let sigma_mode = config.sigma_mode;
    let unlabeled = config.unlabeled;
    let iter = topologies.into_iter().flat_map(move |t| {
        let sigmas = match sigma_mode {
            SigmaMode::Powerset => vec![SigmaAlgebra::powerset(t.ground())],
            SigmaMode::AllRefinements => enumerate_sigma_algebras(&t),
        };
        let grid = grid.clone();
        let names = names.clone();
        sigmas.into_iter().flat_map(move |sigma| {
            let measures = enumerate_measures(&sigma, &grid);
            let t = t.clone();
            let names = names.clone();
            measures
                .into_iter()
                .map(move |m| Space::new(names.clone(), t.clone(), sigma.clone(), m))
        })
    });
    if unlabeled {
        Ok(Box::new(iter.filter(is_canonical_space)))
    } else {
        Ok(Box::new(iter))
    }
}

/// Seeded random models for ground sizes beyond the exhaustive regime.
/// Topologies are sampled as random preorders (reflexive-transitive
/// relations); their up-closed sets form the open family.
pub fn sample_spaces(config: &EnumConfig, count: usize) -> Result<Vec<Space>, EnumError> {
    let n = config.n;
    if n == 0 || n > MAX_GROUND {
        return Err(EnumError::InvalidPointCount(n));
    }
    assert!(!config.mass_grid.is_empty(), "mass grid must be nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let names = point_names(n);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        // random preorder: i ≤ j with probability 1/4, then transitive closure
        let mut reach: Vec<u16> = (0..n).map(|i| Subset::singleton(i).bits()).collect();
        for (i, row) in reach.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && rng.random_ratio(1, 4) {
                    *row |= 1 << j;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i] & (1 << k) != 0 {
                    reach[i] |= reach[k];
                }
            }
        }
        let opens: Vec<Subset> = Subset::full(n)
            .subsets()
            .filter(|s| {
                s.iter()
                    .all(|i| Subset::from_bits(reach[i]).is_subset_of(*s))
            })
            .collect();
        let topology = Topology::new(Subset::full(n), opens);

        let sigma = match config.sigma_mode {
            SigmaMode::Powerset => SigmaAlgebra::powerset(topology.ground()),
            SigmaMode::AllRefinements => {
                let mut atoms = Vec::new();
                for block in topology.borel_atoms().blocks() {
                    let options = set_partitions_of(*block);
                    atoms.extend(options[rng.random_range(0..options.len())].iter().copied());
                }
                SigmaAlgebra::from_atoms(topology.ground(), atoms)
            }
        };
        let masses: Vec<Mass> = (0..sigma.atoms().len())
            .map(|_| config.mass_grid[rng.random_range(0..config.mass_grid.len())].clone())
            .collect();
        let space = Space::new(names.clone(), topology, sigma, Measure::new(masses));
        debug_assert!(space.validate().is_empty());
        out.push(space);
    }
    Ok(out)
}
