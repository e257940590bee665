//! Exact model checking for finite topological measure spaces.
//!
//! A model is a quadruple of points, a topology, a σ-algebra containing the
//! Borel sets, and an exact nonnegative measure on the σ-algebra atoms. The
//! crate parses and validates such models, decides their regularity and
//! Lusin-type properties with independently checkable witnesses, asserts a
//! registry of implications between the properties over enumerated model
//! families, and searches those families with a small boolean property
//! language.
//!
//! All arithmetic is exact: masses are arbitrary-precision nonnegative
//! rationals extended with an absorbing infinity. Nothing anywhere is
//! decided with floating point.

pub mod builtins;
pub mod enumerate;
pub mod expr;
pub mod extended;
pub mod harness;
pub mod labeled;
pub mod lattice;
pub mod lusin;
pub mod measure;
pub mod oracle;
pub mod parse;
pub mod record;
pub mod registry;
pub mod regularity;
pub mod report;
pub mod sigma;
pub mod space;
pub mod subset;
pub mod topology;
pub mod verdict;

/// The finite scalar behind masses: reduced nonnegative rationals with
/// arbitrary-precision numerator and denominator.
pub type Rational = num_rational::Ratio<num_bigint::BigUint>;

/// Measure values: a nonnegative rational or infinity.
pub type Mass = extended::Extended<Rational>;

/// Finite integer mass.
pub fn mass(n: u64) -> Mass {
    Mass::Finite(Rational::from(num_bigint::BigUint::from(n)))
}

/// Finite rational mass `n/d`; panics if `d == 0`.
pub fn mass_ratio(n: u64, d: u64) -> Mass {
    Mass::Finite(Rational::new(
        num_bigint::BigUint::from(n),
        num_bigint::BigUint::from(d),
    ))
}

pub fn mass_inf() -> Mass {
    Mass::Infinity
}

pub use enumerate::{
    are_homeomorphic, canonical_form, enumerate_measures, enumerate_sigma_algebras,
    enumerate_spaces, enumerate_topologies, CanonicalKey, EnumConfig, EnumError, SigmaMode,
};
pub use expr::{eval_expr, parse_property_expr, Expr, ExprError, PropertyExpr};
pub use extended::Extended;
pub use harness::{run_harness, HarnessConfig, HarnessSummary};
pub use labeled::LabeledPartition;
pub use lattice::{is_continuous, Partition};
pub use measure::Measure;
pub use parse::{parse_mass_list, parse_mass_value, parse_model, serialize_model, ParseError};
pub use record::{record_for, write_report, ReportFormat, ReportRecord};
pub use registry::{check_implications, implication_registry, Implication};
pub use report::{evaluate_report, Property, PropertyReport};
pub use sigma::SigmaAlgebra;
pub use space::{Space, Violation, ViolationKind};
pub use subset::Subset;
pub use topology::Topology;
pub use verdict::{LusinKind, LusinWitness, RepWitness, Verdict, Witness};
