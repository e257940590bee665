//! The implication registry: every implication and equivalence between the
//! decided properties, as data, plus a checker that asserts them against a
//! concrete space.
//!
//! Guard semantics: a clause whose guard is false is vacuously satisfied.
//! The harness reports guard frequencies so silent vacuity stays visible.
//!
//! Some entries speak about more than the fifteen report booleans: the
//! approximation facts for Borel and measurable sets and the behaviour of
//! the infinite-measure companion model. Those auxiliary facts are computed
//! per space alongside the report.
//!
//! Registered entries:
//!
//! | entry | statement |
//! |-------|-----------|
//! | R1   | outer ⇒ borel_regular |
//! | T2   | guard osf_cover: (borel_regular ∧ decomp) ⟺ outer ⟺ inner |
//! | L25  | guard decomp: finite-measure Borel sets have null-deficit closed subsets |
//! | L26  | guard osf_cover: decomp ⟺ Borel outer approx ⟺ Borel inner approx |
//! | C33  | strong ⇒ inner ∧ outer ∧ borel_regular ∧ both measurable decomposition forms |
//! | P34  | (sigma_finite ∧ outer) ⇒ strong |
//! | C35  | guard osf_cover ∧ decomp: borel_regular ⇒ strong |
//! | T36  | strong ⟺ weak_lusin |
//! | P37  | weak_lusin_borel ⇒ borel_regular |
//! | T44  | (almost_normal ∧ strong) ⟺ strong_lusin |
//! | C45  | guard almost_normal: weak_lusin ⇒ strong_lusin |
//! | T51  | guard sigma_finite: borel_regular ⟺ borel_reps; unguarded: borel_reps ⇒ borel_regular |
//! | TM   | guard osf_cover ∧ decomp: borel_regular ⟺ borel_reps ⟺ weak_lusin ⟺ weak_lusin_borel; adding normal: ⟺ strong_lusin ⟺ strong_lusin_borel |
//! | TT   | normal ⟺ tietze |
//! | NA1  | normal ⇒ almost_normal |
//! | NA2  | ¬normal ⇒ the infinite companion measure fails almost_normal |
//! | TRIV | strong_lusin ⇒ weak_lusin; weak_lusin ⇒ weak_lusin_borel; strong_lusin ⇒ strong_lusin_borel; strong_lusin_borel ⇒ weak_lusin_borel |
//!
//! Statements involving infinite ground sets have no entry here: the whole
//! tool is scoped to finite models (see the crate README's non-goals).

use std::fmt;

use crate::builtins::companion_infinite_measure_model;
use crate::expr::Expr;
use crate::regularity::is_almost_normal;
use crate::report::{Property, PropertyReport};
use crate::space::Space;

/// Atoms available to registry clauses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegAtom {
    Prop(Property),
    /// Every finite-measure Borel set exceeds its closed kernel by a null set.
    BorelFiniteInner,
    /// Every Borel set's open hull exceeds it by a null set.
    BorelOuterApprox,
    /// Every Borel set exceeds its closed kernel by a null set.
    BorelInnerApprox,
    /// Every measurable set is a closed set plus a null set.
    MeasurableFsigma,
    /// Every measurable set is an open set minus a null set.
    MeasurableGdelta,
    /// The companion model (Borel σ-algebra, infinite mass on every
    /// nonempty set) is almost normal.
    CompanionAlmostNormal,
}

impl fmt::Display for RegAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegAtom::Prop(p) => write!(f, "{}", p.name()),
            RegAtom::BorelFiniteInner => write!(f, "borel_finite_inner"),
            RegAtom::BorelOuterApprox => write!(f, "borel_outer_approx"),
            RegAtom::BorelInnerApprox => write!(f, "borel_inner_approx"),
            RegAtom::MeasurableFsigma => write!(f, "measurable_fsigma"),
            RegAtom::MeasurableGdelta => write!(f, "measurable_gdelta"),
            RegAtom::CompanionAlmostNormal => write!(f, "companion_almost_normal"),
        }
    }
}

/// Per-space truths for the non-report atoms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AuxFacts {
    pub borel_finite_inner: bool,
    pub borel_outer_approx: bool,
    pub borel_inner_approx: bool,
    pub measurable_fsigma: bool,
    pub measurable_gdelta: bool,
    pub companion_almost_normal: bool,
}

pub fn aux_facts(space: &Space) -> AuxFacts {
    let t = space.topology();
    let borel = t.borel_sets();
    let measurable = space.sigma().measurable_sets();
    AuxFacts {
        borel_finite_inner: borel
            .iter()
            .filter(|b| space.m(**b).is_finite())
            .all(|b| space.m(b.difference(t.closed_kernel(*b))).is_zero()),
        borel_outer_approx: borel
            .iter()
            .all(|b| space.m(t.open_hull(*b).difference(*b)).is_zero()),
        borel_inner_approx: borel
            .iter()
            .all(|b| space.m(b.difference(t.closed_kernel(*b))).is_zero()),
        measurable_fsigma: measurable
            .iter()
            .all(|e| space.m(e.difference(t.closed_kernel(*e))).is_zero()),
        measurable_gdelta: measurable
            .iter()
            .all(|e| space.m(t.open_hull(*e).difference(*e)).is_zero()),
        companion_almost_normal: is_almost_normal(&companion_infinite_measure_model(space)).holds,
    }
}

fn truth(report: &PropertyReport, aux: &AuxFacts, atom: &RegAtom) -> bool {
    match atom {
        RegAtom::Prop(p) => report.holds(*p),
        RegAtom::BorelFiniteInner => aux.borel_finite_inner,
        RegAtom::BorelOuterApprox => aux.borel_outer_approx,
        RegAtom::BorelInnerApprox => aux.borel_inner_approx,
        RegAtom::MeasurableFsigma => aux.measurable_fsigma,
        RegAtom::MeasurableGdelta => aux.measurable_gdelta,
        RegAtom::CompanionAlmostNormal => aux.companion_almost_normal,
    }
}

type RegExpr = Expr<RegAtom>;

#[derive(Clone, Debug)]
pub enum ClauseCheck {
    Implies(RegExpr, RegExpr),
    /// All listed expressions share one truth value.
    Iff(Vec<RegExpr>),
    Holds(RegExpr),
}

#[derive(Clone, Debug)]
pub struct Clause {
    pub guard: Option<RegExpr>,
    pub check: ClauseCheck,
}

/// A named implication or equivalence with a human-readable statement.
#[derive(Clone, Debug)]
pub struct Implication {
    pub name: &'static str,
    pub citation: &'static str,
    pub clauses: Vec<Clause>,
}

fn p(prop: Property) -> RegExpr {
    Expr::atom(RegAtom::Prop(prop))
}

fn a(atom: RegAtom) -> RegExpr {
    Expr::atom(atom)
}

fn clause(guard: Option<RegExpr>, check: ClauseCheck) -> Clause {
    Clause { guard, check }
}

/// The registry. Entry names are stable identifiers used in harness output.
pub fn implication_registry() -> Vec<Implication> {
    use ClauseCheck::{Holds, Iff, Implies};
    use Property::*;
    vec![
        Implication {
            name: "R1",
            citation: "outer regularity implies Borel regularity",
            clauses: vec![clause(None, Implies(p(Outer), p(BorelRegular)))],
        },
        Implication {
            name: "T2",
            citation: "under an open cover of finite measure, Borel regularity with decomposing opens, outer regularity, and inner regularity coincide",
            clauses: vec![clause(
                Some(p(OsfCover)),
                Iff(vec![
                    Expr::and(p(BorelRegular), p(Decomp)),
                    p(Outer),
                    p(Inner),
                ]),
            )],
        },
        Implication {
            name: "L25",
            citation: "if opens decompose, every finite-measure Borel set has a closed subset of null deficit",
            clauses: vec![clause(Some(p(Decomp)), Holds(a(RegAtom::BorelFiniteInner)))],
        },
        Implication {
            name: "L26",
            citation: "under an open cover of finite measure, open decomposition, outer approximation of Borel sets, and inner approximation of Borel sets coincide",
            clauses: vec![clause(
                Some(p(OsfCover)),
                Iff(vec![
                    p(Decomp),
                    a(RegAtom::BorelOuterApprox),
                    a(RegAtom::BorelInnerApprox),
                ]),
            )],
        },
        Implication {
            name: "C33",
            citation: "strong regularity implies inner, outer, and Borel regularity, and both decomposition forms for measurable sets",
            clauses: vec![clause(
                None,
                Implies(
                    p(Strong),
                    Expr::and(
                        Expr::and(p(Inner), Expr::and(p(Outer), p(BorelRegular))),
                        Expr::and(a(RegAtom::MeasurableFsigma), a(RegAtom::MeasurableGdelta)),
                    ),
                ),
            )],
        },
        Implication {
            name: "P34",
            citation: "σ-finite outer regular measures are strongly regular",
            clauses: vec![clause(
                None,
                Implies(Expr::and(p(SigmaFinite), p(Outer)), p(Strong)),
            )],
        },
        Implication {
            name: "C35",
            citation: "under an open cover of finite measure with decomposing opens, Borel regular measures are strongly regular",
            clauses: vec![clause(
                Some(Expr::and(p(OsfCover), p(Decomp))),
                Implies(p(BorelRegular), p(Strong)),
            )],
        },
        Implication {
            name: "T36",
            citation: "strong regularity is equivalent to the weak Lusin property",
            clauses: vec![clause(None, Iff(vec![p(Strong), p(WeakLusin)]))],
        },
        Implication {
            name: "P37",
            citation: "the Borel form of the weak Lusin property implies Borel regularity",
            clauses: vec![clause(None, Implies(p(WeakLusinBorel), p(BorelRegular)))],
        },
        Implication {
            name: "T44",
            citation: "almost normality together with strong regularity is equivalent to the strong Lusin property",
            clauses: vec![clause(
                None,
                Iff(vec![Expr::and(p(AlmostNormal), p(Strong)), p(StrongLusin)]),
            )],
        },
        Implication {
            name: "C45",
            citation: "on almost normal spaces, the weak Lusin property implies the strong Lusin property",
            clauses: vec![clause(
                Some(p(AlmostNormal)),
                Implies(p(WeakLusin), p(StrongLusin)),
            )],
        },
        Implication {
            name: "T51",
            citation: "for σ-finite measures, Borel regularity is equivalent to the existence of Borel representatives; the representatives imply Borel regularity without σ-finiteness",
            clauses: vec![
                clause(Some(p(SigmaFinite)), Iff(vec![p(BorelRegular), p(BorelReps)])),
                clause(None, Implies(p(BorelReps), p(BorelRegular))),
            ],
        },
        Implication {
            name: "TM",
            citation: "under an open cover of finite measure with decomposing opens: Borel regularity, Borel representatives, and both weak Lusin forms coincide; on normal spaces also both strong Lusin forms",
            clauses: vec![
                clause(
                    Some(Expr::and(p(OsfCover), p(Decomp))),
                    Iff(vec![
                        p(BorelRegular),
                        p(BorelReps),
                        p(WeakLusin),
                        p(WeakLusinBorel),
                    ]),
                ),
                clause(
                    Some(Expr::and(p(OsfCover), Expr::and(p(Decomp), p(Normal)))),
                    Iff(vec![p(BorelRegular), p(StrongLusin), p(StrongLusinBorel)]),
                ),
            ],
        },
        Implication {
            name: "TT",
            citation: "normality is equivalent to the continuous extension property for closed subspaces",
            clauses: vec![clause(None, Iff(vec![p(Normal), p(Tietze)]))],
        },
        Implication {
            name: "NA1",
            citation: "normal spaces are almost normal under every measure",
            clauses: vec![clause(None, Implies(p(Normal), p(AlmostNormal)))],
        },
        Implication {
            name: "NA2",
            citation: "non-normal spaces fail almost normality under the infinite companion measure",
            clauses: vec![clause(
                None,
                Implies(
                    Expr::not(p(Normal)),
                    Expr::not(a(RegAtom::CompanionAlmostNormal)),
                ),
            )],
        },
        Implication {
            name: "TRIV",
            citation: "strong Lusin implies weak Lusin, and closed witness sets are Borel witness sets",
            clauses: vec![
                clause(None, Implies(p(StrongLusin), p(WeakLusin))),
                clause(None, Implies(p(WeakLusin), p(WeakLusinBorel))),
                clause(None, Implies(p(StrongLusin), p(StrongLusinBorel))),
                clause(None, Implies(p(StrongLusinBorel), p(WeakLusinBorel))),
            ],
        },
    ]
}

/// A failed clause on a concrete space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImplicationViolation {
    pub entry: &'static str,
    pub clause: usize,
    pub detail: String,
}

impl fmt::Display for ImplicationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]: {}", self.entry, self.clause, self.detail)
    }
}

/// Guard/violation outcome of one clause on one space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClauseOutcome {
    pub entry: &'static str,
    pub clause: usize,
    pub guard_satisfied: bool,
    pub violation: Option<ImplicationViolation>,
}

/// Evaluates every registry clause; used by both `check_implications` and
/// the harness (which also wants the guard statistics).
pub fn evaluate_registry(space: &Space, report: &PropertyReport) -> Vec<ClauseOutcome> {
    let aux = aux_facts(space);
    let truth_fn = |atom: &RegAtom| truth(report, &aux, atom);
    let mut out = Vec::new();
    for entry in implication_registry() {
        for (idx, clause) in entry.clauses.iter().enumerate() {
            let guard_satisfied = clause.guard.as_ref().is_none_or(|g| g.eval(&truth_fn));
            let violation = if !guard_satisfied {
                None
            } else {
                match &clause.check {
                    ClauseCheck::Implies(lhs, rhs) => {
                        let (l, r) = (lhs.eval(&truth_fn), rhs.eval(&truth_fn));
                        (l && !r).then(|| format!("({lhs}) holds but ({rhs}) fails"))
                    }
                    ClauseCheck::Iff(exprs) => {
                        let values: Vec<bool> = exprs.iter().map(|e| e.eval(&truth_fn)).collect();
                        (!values.windows(2).all(|w| w[0] == w[1])).then(|| {
                            let parts: Vec<String> = exprs
                                .iter()
                                .zip(&values)
                                .map(|(e, v)| format!("({e})={v}"))
                                .collect();
                            format!("equivalence broken: {}", parts.join(", "))
                        })
                    }
                    ClauseCheck::Holds(expr) => {
                        (!expr.eval(&truth_fn)).then(|| format!("({expr}) fails"))
                    }
                }
                .map(|detail| ImplicationViolation {
                    entry: entry.name,
                    clause: idx,
                    detail,
                })
            };
            out.push(ClauseOutcome {
                entry: entry.name,
                clause: idx,
                guard_satisfied,
                violation,
            });
        }
    }
    out
}

/// Empty iff every registry clause with a satisfied guard holds on the
/// space.
pub fn check_implications(space: &Space, report: &PropertyReport) -> Vec<ImplicationViolation> {
    evaluate_registry(space, report)
        .into_iter()
        .filter_map(|o| o.violation)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin, builtin_examples};
    use crate::report::evaluate_report;

    #[test]
    fn registry_shape() {
        let registry = implication_registry();
        assert!(registry.len() >= 16);
        assert!(registry.iter().all(|e| !e.citation.is_empty()));
        let t36 = registry.iter().find(|e| e.name == "T36").unwrap();
        assert!(matches!(t36.clauses[0].check, ClauseCheck::Iff(_)));
        let triv = registry.iter().find(|e| e.name == "TRIV").unwrap();
        assert_eq!(triv.clauses.len(), 4);
    }

    #[test]
    fn builtins_satisfy_the_registry() {
        for e in builtin_examples() {
            let report = evaluate_report(&e.space);
            let violations = check_implications(&e.space, &report);
            assert!(violations.is_empty(), "{}: {violations:?}", e.name);
        }
    }

    #[test]
    fn guards_go_vacuous_where_expected() {
        let space = builtin("outer-not-inner");
        let report = evaluate_report(&space);
        let outcomes = evaluate_registry(&space, &report);
        let t2 = outcomes.iter().find(|o| o.entry == "T2").unwrap();
        assert!(!t2.guard_satisfied, "no open cover of finite measure here");
        let r1 = outcomes.iter().find(|o| o.entry == "R1").unwrap();
        assert!(r1.guard_satisfied && r1.violation.is_none());
    }

    #[test]
    fn corrupted_report_is_caught_by_t36() {
        let space = builtin("counting");
        let report = evaluate_report(&space).with_flag(Property::Strong, true);
        let violations = check_implications(&space, &report);
        assert!(
            violations.iter().any(|v| v.entry == "T36"),
            "{violations:?}"
        );
    }
}
