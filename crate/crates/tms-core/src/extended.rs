//! Scalar values extended with a single absorbing infinity.
//!
//! The measure side of the crate only ever needs addition and exact
//! comparison, so the type is generic over any ordered scalar with a zero.
//! The crate root fixes the concrete alias used throughout ([`crate::Mass`]).

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_traits::Zero;

/// A scalar of type `R` or the distinguished value `inf`.
///
/// `Finite` is declared first so the derived ordering places every finite
/// value below `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<R> {
    Finite(R),
    Infinity,
}

impl<R> Extended<R> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn as_finite(&self) -> Option<&R> {
        match self {
            Extended::Finite(r) => Some(r),
            Extended::Infinity => None,
        }
    }
}

impl<R: Zero> Extended<R> {
    pub fn zero() -> Self {
        Extended::Finite(R::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Extended::Finite(r) => r.is_zero(),
            Extended::Infinity => false,
        }
    }
}

impl<R> From<R> for Extended<R> {
    fn from(r: R) -> Self {
        Extended::Finite(r)
    }
}

/// `inf + x = inf`; finite values add exactly. There is no subtraction:
/// measures of differences are always taken as measures of set differences.
impl<R: Add<Output = R>> Add for Extended<R> {
    type Output = Extended<R>;

    fn add(self, rhs: Extended<R>) -> Extended<R> {
        match (self, rhs) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinity,
        }
    }
}

impl<R: Zero + Add<Output = R>> Sum for Extended<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Extended::zero(), |acc, x| acc + x)
    }
}

impl<R: fmt::Display> fmt::Display for Extended<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(r) => write!(f, "{r}"),
            Extended::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::{mass, mass_inf, mass_ratio, Mass};

    #[test]
    fn infinity_absorbs_addition() {
        assert_eq!(mass(3) + mass_inf(), mass_inf());
        assert_eq!(mass_inf() + mass(0), mass_inf());
        assert_eq!(mass_inf() + mass_inf(), mass_inf());
        assert_eq!(mass(1) + mass(2), mass(3));
        assert_eq!(mass_ratio(1, 2) + mass_ratio(1, 2), mass(1));
    }

    #[test]
    fn total_order_puts_infinity_on_top() {
        assert!(mass(0) < mass_ratio(1, 8));
        assert!(mass_ratio(1, 2) < mass(1));
        assert!(mass(1_000_000) < mass_inf());
        assert!(!(mass_inf() < mass_inf()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(mass(7).to_string(), "7");
        assert_eq!(mass_ratio(3, 6).to_string(), "1/2");
        assert_eq!(mass_inf().to_string(), "inf");
    }

    #[test]
    fn sums_are_exact() {
        let total: Mass = [mass_ratio(1, 3), mass_ratio(1, 3), mass_ratio(1, 3)]
            .into_iter()
            .sum();
        assert_eq!(total, mass(1));
    }
}
