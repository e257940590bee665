//! The line-oriented model grammar and its canonical serializer.
//!
//! ```text
//! file   := line*
//! line   := "points" IDENT+
//!         | "open" SET
//!         | "sigma" ("powerset" | "atoms" SET+)
//!         | "mass" SET VALUE
//! SET    := "{" IDENT* "}"
//! VALUE  := NONNEG_INT | NONNEG_INT "/" POS_INT | "inf"
//! ```
//!
//! `#` starts a comment. Exactly one `points` line, first. The empty set and
//! the full set are implied opens; every other open must be listed, and the
//! listed family must already be closed under union and intersection —
//! nothing is silently completed. Mass keys must equal the declared σ-atoms
//! exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::measure::Measure;
use crate::sigma::SigmaAlgebra;
use crate::space::{Space, Violation};
use crate::subset::{Subset, MAX_GROUND};
use crate::topology::Topology;
use crate::{Mass, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    Grammar,
    Top,
    Sigma,
    Mass,
}

impl ParseErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ParseErrorKind::Grammar => "E_GRAMMAR",
            ParseErrorKind::Top => "E_TOP",
            ParseErrorKind::Sigma => "E_SIGMA",
            ParseErrorKind::Mass => "E_MASS",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: Option<usize>,
    pub message: String,
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn new(kind: ParseErrorKind, line: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            line: Some(line),
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.code())?;
        if let Some(line) = self.line {
            write!(f, " (line {line})")?;
        }
        write!(f, ": {}", self.message)
    }
}

impl From<Violation> for ParseError {
    fn from(v: Violation) -> ParseError {
        let kind = match v.kind {
            crate::space::ViolationKind::Top => ParseErrorKind::Top,
            crate::space::ViolationKind::Sigma => ParseErrorKind::Sigma,
            crate::space::ViolationKind::Mass => ParseErrorKind::Mass,
        };
        ParseError {
            kind,
            line: None,
            message: v.message,
        }
    }
}

fn is_ident(tok: &str) -> bool {
    let mut chars = tok.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a VALUE token sequence already joined into one string.
pub fn parse_mass_value(text: &str) -> Result<Mass, String> {
    fn nonneg_int(s: &str) -> Result<BigUint, String> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("malformed integer `{s}`"));
        }
        BigUint::from_str(s).map_err(|e| e.to_string())
    }
    if text == "inf" {
        return Ok(Mass::Infinity);
    }
    match text.split_once('/') {
        None => Ok(Mass::Finite(Rational::from(nonneg_int(text)?))),
        Some((num, den)) => {
            let n = nonneg_int(num)?;
            let d = nonneg_int(den)?;
            if d == BigUint::from(0u32) {
                return Err("denominator must be positive".to_string());
            }
            Ok(Mass::Finite(Rational::new(n, d)))
        }
    }
}

/// Parses a comma-separated list of VALUE tokens, e.g. `0,1/2,inf`.
pub fn parse_mass_list(text: &str) -> Result<Vec<Mass>, String> {
    text.split(',')
        .map(|part| parse_mass_value(part.trim()))
        .collect()
}

struct Lines {
    points: Option<(usize, Vec<String>)>,
    opens: Vec<Subset>,
    sigma: Option<(usize, SigmaDecl)>,
    masses: Vec<(usize, Subset, Mass)>,
}

enum SigmaDecl {
    Powerset,
    Atoms(Vec<Subset>),
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<Space, ParseError> {
    use ParseErrorKind as K;
    let mut st = Lines {
        points: None,
        opens: Vec::new(),
        sigma: None,
        masses: Vec::new(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let spaced = stripped.replace('{', " { ").replace('}', " } ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "points" => parse_points_line(&mut st, lineno, &tokens[1..])?,
            "open" | "sigma" | "mass" => {
                let Some((_, names)) = &st.points else {
                    return Err(ParseError::new(
                        K::Grammar,
                        lineno,
                        "the `points` line must come first",
                    ));
                };
                let names = names.clone();
                match tokens[0] {
                    "open" => {
                        let (set, rest) = parse_set(&names, lineno, &tokens[1..])?;
                        expect_end(lineno, rest)?;
                        st.opens.push(set);
                    }
                    "sigma" => parse_sigma_line(&mut st, &names, lineno, &tokens[1..])?,
                    _ => {
                        let (set, rest) = parse_set(&names, lineno, &tokens[1..])?;
                        if rest.is_empty() {
                            return Err(ParseError::new(K::Mass, lineno, "missing mass value"));
                        }
                        let value = parse_mass_value(&rest.concat())
                            .map_err(|e| ParseError::new(K::Mass, lineno, e))?;
                        st.masses.push((lineno, set, value));
                    }
                }
            }
            other => {
                return Err(ParseError::new(
                    K::Grammar,
                    lineno,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    build_space(st)
}

fn parse_points_line(st: &mut Lines, lineno: usize, rest: &[&str]) -> Result<(), ParseError> {
    use ParseErrorKind as K;
    if st.points.is_some() {
        return Err(ParseError::new(
            K::Grammar,
            lineno,
            "duplicate `points` line",
        ));
    }
    if rest.is_empty() {
        return Err(ParseError::new(
            K::Grammar,
            lineno,
            "at least one point required",
        ));
    }
    if rest.len() > MAX_GROUND {
        return Err(ParseError::new(
            K::Grammar,
            lineno,
            format!("at most {MAX_GROUND} points supported"),
        ));
    }
    let mut names = Vec::new();
    for tok in rest {
        if !is_ident(tok) {
            return Err(ParseError::new(
                K::Grammar,
                lineno,
                format!("invalid point name `{tok}`"),
            ));
        }
        if names.iter().any(|n| n == tok) {
            return Err(ParseError::new(
                K::Grammar,
                lineno,
                format!("duplicate point name `{tok}`"),
            ));
        }
        names.push(tok.to_string());
    }
    st.points = Some((lineno, names));
    Ok(())
}

fn parse_sigma_line(
    st: &mut Lines,
    names: &[String],
    lineno: usize,
    rest: &[&str],
) -> Result<(), ParseError> {
    use ParseErrorKind as K;
    if st.sigma.is_some() {
        return Err(ParseError::new(
            K::Grammar,
            lineno,
            "duplicate `sigma` line",
        ));
    }
    match rest.first() {
        Some(&"powerset") => {
            expect_end(lineno, &rest[1..])?;
            st.sigma = Some((lineno, SigmaDecl::Powerset));
        }
        Some(&"atoms") => {
            let mut atoms = Vec::new();
            let mut cursor = &rest[1..];
            while !cursor.is_empty() {
                let (set, next) = parse_set(names, lineno, cursor)?;
                if set.is_empty() {
                    return Err(ParseError::new(K::Sigma, lineno, "atoms must be nonempty"));
                }
                if atoms.contains(&set) {
                    return Err(ParseError::new(K::Sigma, lineno, "duplicate atom"));
                }
                atoms.push(set);
                cursor = next;
            }
            if atoms.is_empty() {
                return Err(ParseError::new(
                    K::Grammar,
                    lineno,
                    "`sigma atoms` needs sets",
                ));
            }
            st.sigma = Some((lineno, SigmaDecl::Atoms(atoms)));
        }
        _ => {
            return Err(ParseError::new(
                K::Grammar,
                lineno,
                "expected `sigma powerset` or `sigma atoms SET+`",
            ));
        }
    }
    Ok(())
}

fn parse_set<'t>(
    names: &[String],
    lineno: usize,
    tokens: &'t [&'t str],
) -> Result<(Subset, &'t [&'t str]), ParseError> {
    use ParseErrorKind as K;
    if tokens.first() != Some(&"{") {
        return Err(ParseError::new(K::Grammar, lineno, "expected `{`"));
    }
    let mut set = Subset::EMPTY;
    let mut i = 1;
    loop {
        match tokens.get(i) {
            Some(&"}") => return Ok((set, &tokens[i + 1..])),
            Some(tok) => {
                let Some(p) = names.iter().position(|n| n == tok) else {
                    return Err(ParseError::new(
                        K::Grammar,
                        lineno,
                        format!("unknown point `{tok}`"),
                    ));
                };
                set.insert(p);
                i += 1;
            }
            None => return Err(ParseError::new(K::Grammar, lineno, "unterminated set")),
        }
    }
}

fn expect_end(lineno: usize, rest: &[&str]) -> Result<(), ParseError> {
    if rest.is_empty() {
        Ok(())
    } else {
        Err(ParseError::new(
            ParseErrorKind::Grammar,
            lineno,
            format!("unexpected trailing tokens `{}`", rest.join(" ")),
        ))
    }
}

fn build_space(st: Lines) -> Result<Space, ParseError> {
    use ParseErrorKind as K;
    let Some((_, names)) = st.points else {
        return Err(ParseError {
            kind: K::Grammar,
            line: None,
            message: "missing `points` line".to_string(),
        });
    };
    let ground = Subset::full(names.len());
    let topology = Topology::new(ground, st.opens);

    let Some((_, sigma_decl)) = st.sigma else {
        return Err(ParseError {
            kind: K::Grammar,
            line: None,
            message: "missing `sigma` line".to_string(),
        });
    };
    let sigma = match sigma_decl {
        SigmaDecl::Powerset => SigmaAlgebra::powerset(ground),
        SigmaDecl::Atoms(atoms) => SigmaAlgebra::from_atoms(ground, atoms),
    };

    let mut masses: Vec<Option<Mass>> = vec![None; sigma.atoms().len()];
    for (lineno, set, value) in st.masses {
        let Some(pos) = sigma.atoms().iter().position(|a| *a == set) else {
            return Err(ParseError::new(
                K::Mass,
                lineno,
                "mass key is not a declared σ-atom",
            ));
        };
        if masses[pos].is_some() {
            return Err(ParseError::new(K::Mass, lineno, "duplicate mass for atom"));
        }
        masses[pos] = Some(value);
    }
    let mut resolved = Vec::with_capacity(masses.len());
    for (i, m) in masses.into_iter().enumerate() {
        match m {
            Some(v) => resolved.push(v),
            None => {
                return Err(ParseError {
                    kind: K::Mass,
                    line: None,
                    message: format!("missing mass for atom {}", sigma.atoms()[i].display(&names)),
                });
            }
        }
    }

    let space = Space::new(names, topology, sigma, Measure::new(resolved));
    if let Some(first) = space.validate().into_iter().next() {
        return Err(first.into());
    }
    Ok(space)
}

/// Canonical model source: reparsing it reproduces the space exactly.
pub fn serialize_model(space: &Space) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "points {}", space.points().join(" ")).unwrap();
    for &o in space.topology().opens() {
        if o.is_empty() || o == space.full() {
            continue;
        }
        writeln!(out, "open {}", space.set_to_string(o)).unwrap();
    }
    if space.sigma().atoms().iter().all(|a| a.len() == 1) {
        writeln!(out, "sigma powerset").unwrap();
    } else {
        let atoms: Vec<String> = space
            .sigma()
            .atoms()
            .iter()
            .map(|a| space.set_to_string(*a))
            .collect();
        writeln!(out, "sigma atoms {}", atoms.join(" ")).unwrap();
    }
    for (i, atom) in space.sigma().atoms().iter().enumerate() {
        writeln!(
            out,
            "mass {} {}",
            space.set_to_string(*atom),
            space.measure().mass_of_atom(i)
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{mass, mass_inf};

    const REP: &str =
        "points a b c\nopen {c}\nsigma powerset\nmass {a} inf\nmass {b} inf\nmass {c} 1\n";

    #[test]
    fn parses_a_full_model() {
        let space = parse_model(REP).unwrap();
        assert_eq!(space.points(), &["a", "b", "c"]);
        assert_eq!(space.topology().opens().len(), 3);
        assert_eq!(space.measure_of(Subset::singleton(0)), Ok(mass_inf()));
        assert_eq!(space.measure_of(Subset::singleton(2)), Ok(mass(1)));
    }

    #[test]
    fn discrete_two_points_autocompletes_empty_and_full() {
        let src = "points a b\nopen {a}\nopen {b}\nsigma powerset\nmass {a} 0\nmass {b} 0\n";
        let space = parse_model(src).unwrap();
        assert_eq!(space.topology().opens().len(), 4);
    }

    #[test]
    fn closure_violations_are_not_autocompleted() {
        let src = "points a b c\nopen {a}\nopen {b}\nsigma powerset\nmass {a} 0\nmass {b} 0\nmass {c} 0\n";
        let err = parse_model(src).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Top);
    }

    #[test]
    fn grammar_errors() {
        assert_eq!(
            parse_model("open {a}\n").unwrap_err().kind,
            ParseErrorKind::Grammar
        );
        assert_eq!(
            parse_model("points a a\n").unwrap_err().kind,
            ParseErrorKind::Grammar
        );
        assert_eq!(
            parse_model("points a\nopen {b}\nsigma powerset\nmass {a} 0\n")
                .unwrap_err()
                .kind,
            ParseErrorKind::Grammar
        );
        assert_eq!(
            parse_model("points a\nmass {a} 0\n").unwrap_err().kind,
            ParseErrorKind::Grammar
        );
    }

    #[test]
    fn mass_errors() {
        let missing = "points a b\nsigma powerset\nmass {a} 1\n";
        assert_eq!(parse_model(missing).unwrap_err().kind, ParseErrorKind::Mass);
        let dup = "points a\nsigma powerset\nmass {a} 1\nmass {a} 2\n";
        assert_eq!(parse_model(dup).unwrap_err().kind, ParseErrorKind::Mass);
        let negative = "points a\nsigma powerset\nmass {a} -1\n";
        assert_eq!(
            parse_model(negative).unwrap_err().kind,
            ParseErrorKind::Mass
        );
        let zero_den = "points a\nsigma powerset\nmass {a} 1/0\n";
        assert_eq!(
            parse_model(zero_den).unwrap_err().kind,
            ParseErrorKind::Mass
        );
        let not_an_atom = "points a b\nsigma atoms {a b}\nmass {a} 1\n";
        assert_eq!(
            parse_model(not_an_atom).unwrap_err().kind,
            ParseErrorKind::Mass
        );
    }

    #[test]
    fn sigma_must_refine_borel() {
        let src = "points a b c\nopen {c}\nopen {a c}\nopen {b c}\nsigma atoms {a b} {c}\nmass {a b} 1\nmass {c} 0\n";
        let err = parse_model(src).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Sigma);
    }

    #[test]
    fn values_parse_exactly() {
        assert_eq!(parse_mass_value("3").unwrap(), mass(3));
        assert_eq!(parse_mass_value("2/4").unwrap(), crate::mass_ratio(1, 2));
        assert_eq!(parse_mass_value("inf").unwrap(), mass_inf());
        assert!(parse_mass_value("1.5").is_err());
        assert!(parse_mass_value("").is_err());
        let list = parse_mass_list("0, 1/2 ,inf").unwrap();
        assert_eq!(list, vec![mass(0), crate::mass_ratio(1, 2), mass_inf()]);
    }

    #[test]
    fn serialize_then_parse_is_identity() {
        let space = parse_model(REP).unwrap();
        let round = parse_model(&serialize_model(&space)).unwrap();
        assert_eq!(space, round);

        let coarse =
            "points a b c\nopen {c}\nsigma atoms {a b} {c}\nmass {a b} 1/2\nmass {c} inf\n";
        let space = parse_model(coarse).unwrap();
        assert_eq!(parse_model(&serialize_model(&space)).unwrap(), space);
    }
}
