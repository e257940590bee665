//! One named boolean per decided property, plus the witnesses behind them.

use crate::lusin;
use crate::regularity;
use crate::space::Space;
use crate::verdict::Verdict;

/// The decidable properties of a space. The names double as the identifier
/// namespace of the search expression language.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Property {
    BorelRegular,
    Outer,
    Inner,
    Strong,
    SigmaFinite,
    OsfCover,
    Decomp,
    Normal,
    Tietze,
    AlmostNormal,
    WeakLusin,
    WeakLusinBorel,
    StrongLusin,
    StrongLusinBorel,
    BorelReps,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::BorelRegular,
        Property::Outer,
        Property::Inner,
        Property::Strong,
        Property::SigmaFinite,
        Property::OsfCover,
        Property::Decomp,
        Property::Normal,
        Property::Tietze,
        Property::AlmostNormal,
        Property::WeakLusin,
        Property::WeakLusinBorel,
        Property::StrongLusin,
        Property::StrongLusinBorel,
        Property::BorelReps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::BorelRegular => "borel_regular",
            Property::Outer => "outer",
            Property::Inner => "inner",
            Property::Strong => "strong",
            Property::SigmaFinite => "sigma_finite",
            Property::OsfCover => "osf_cover",
            Property::Decomp => "decomp",
            Property::Normal => "normal",
            Property::Tietze => "tietze",
            Property::AlmostNormal => "almost_normal",
            Property::WeakLusin => "weak_lusin",
            Property::WeakLusinBorel => "weak_lusin_borel",
            Property::StrongLusin => "strong_lusin",
            Property::StrongLusinBorel => "strong_lusin_borel",
            Property::BorelReps => "borel_reps",
        }
    }

    pub fn from_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == name)
    }

    fn decide(self, space: &Space) -> Verdict {
        match self {
            Property::BorelRegular => regularity::is_borel_regular(space),
            Property::Outer => regularity::is_outer_regular(space),
            Property::Inner => regularity::is_inner_regular(space),
            Property::Strong => regularity::is_strongly_regular(space),
            Property::SigmaFinite => regularity::is_sigma_finite(space),
            Property::OsfCover => regularity::has_open_sigma_finite_cover(space),
            Property::Decomp => regularity::opens_decompose(space),
            Property::Normal => regularity::is_normal(space),
            Property::Tietze => regularity::has_tietze_property(space),
            Property::AlmostNormal => regularity::is_almost_normal(space),
            Property::WeakLusin => lusin::weak_lusin(space),
            Property::WeakLusinBorel => lusin::weak_lusin_borel(space),
            Property::StrongLusin => lusin::strong_lusin(space),
            Property::StrongLusinBorel => lusin::strong_lusin_borel(space),
            Property::BorelReps => lusin::has_borel_representatives(space),
        }
    }
}

/// Verdicts for all properties of one space; a deterministic function of
/// the space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropertyReport {
    verdicts: Vec<Verdict>,
}

impl PropertyReport {
    pub fn verdict(&self, p: Property) -> &Verdict {
        &self.verdicts[p as usize]
    }

    pub fn holds(&self, p: Property) -> bool {
        self.verdict(p).holds
    }

    pub fn flags(&self) -> impl Iterator<Item = (Property, bool)> + '_ {
        Property::ALL.into_iter().map(|p| (p, self.holds(p)))
    }

    /// A report with one flag overridden; only used to inject
    /// inconsistencies in tests of the implication checker.
    pub fn with_flag(&self, p: Property, holds: bool) -> PropertyReport {
        let mut verdicts = self.verdicts.clone();
        verdicts[p as usize].holds = holds;
        PropertyReport { verdicts }
    }
}

/// Runs every decider.
pub fn evaluate_report(space: &Space) -> PropertyReport {
    PropertyReport {
        verdicts: Property::ALL.iter().map(|p| p.decide(space)).collect(),
    }
}
