//! Bit-indexed subsets of a small ground set.
//!
//! One `u16` word covers ground sizes up to [`MAX_GROUND`]; every open set,
//! closed set, Borel set, measurable set, and witness in the crate is a
//! `Subset`.

use std::fmt;

/// Largest supported ground size.
pub const MAX_GROUND: usize = 16;

/// A subset of the ground set, point `i` stored as bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u16) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// The full ground set on `n` points.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u16::MAX >> (MAX_GROUND - n))
        }
    }

    pub fn singleton(point: usize) -> Subset {
        debug_assert!(point < MAX_GROUND);
        Subset(1 << point)
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_GROUND && self.0 & (1 << point) != 0
    }

    pub fn insert(&mut self, point: usize) {
        debug_assert!(point < MAX_GROUND);
        self.0 |= 1 << point;
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement within the given ground set.
    pub fn complement_in(self, ground: Subset) -> Subset {
        Subset(ground.0 & !self.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_point(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Points of the subset in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// All subsets of `self`, in ascending bit-pattern order (starts at the
    /// empty set, ends at `self`).
    pub fn subsets(self) -> SubsetsIter {
        SubsetsIter {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Renders as `{a c}` given the ground point names.
    pub fn display<'a>(self, names: &'a [String]) -> SubsetDisplay<'a> {
        SubsetDisplay { set: self, names }
    }
}

/// Iterates the subsets of a fixed mask in ascending bit-pattern order.
pub struct SubsetsIter {
    mask: u16,
    next: Option<u16>,
}

impl Iterator for SubsetsIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // Increment restricted to the bits of `mask`.
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(Subset(cur))
    }
}

pub struct SubsetDisplay<'a> {
    set: Subset,
    names: &'a [String],
}

impl fmt::Display for SubsetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.set.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match self.names.get(p) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "p{p}")?,
            }
        }
        write!(f, "}}")
    }
}

// Debug lists point indices so test failures stay readable.
impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        let x = Subset::full(3);
        assert_eq!(x.bits(), 0b111);
        let s = Subset::singleton(1);
        assert_eq!(s.complement_in(x).bits(), 0b101);
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }

    #[test]
    fn subsets_iterate_ascending_and_complete() {
        let mask = Subset::from_bits(0b1011);
        let all: Vec<u16> = mask.subsets().map(Subset::bits).collect();
        assert_eq!(
            all,
            vec![0b0000, 0b0001, 0b0010, 0b0011, 0b1000, 0b1001, 0b1010, 0b1011]
        );
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_bits(0b0110);
        let b = Subset::from_bits(0b0011);
        assert_eq!(a.union(b).bits(), 0b0111);
        assert_eq!(a.intersection(b).bits(), 0b0010);
        assert_eq!(a.difference(b).bits(), 0b0100);
        assert!(a.intersection(b).is_subset_of(a));
        assert!(!a.is_disjoint(b));
        assert_eq!(a.len(), 2);
        assert_eq!(a.min_point(), Some(1));
    }

    #[test]
    fn display_uses_point_names() {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            Subset::from_bits(0b101).display(&names).to_string(),
            "{a c}"
        );
        assert_eq!(Subset::EMPTY.display(&names).to_string(), "{}");
    }
}
