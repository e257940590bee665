//! Boolean property expressions: `!` > `&` > `|` > `->`, with `->`
//! right-associative.

use std::fmt;

use crate::report::{Property, PropertyReport};

/// Expression tree over an atom type; deciders use [`Property`] atoms, the
/// implication registry a larger internal alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr<A> {
    Atom(A),
    Not(Box<Expr<A>>),
    And(Box<Expr<A>>, Box<Expr<A>>),
    Or(Box<Expr<A>>, Box<Expr<A>>),
    Implies(Box<Expr<A>>, Box<Expr<A>>),
}

impl<A> Expr<A> {
    pub fn atom(a: A) -> Expr<A> {
        Expr::Atom(a)
    }

    #[allow(clippy::should_implement_trait)] // constructor, parallel to `and`/`or`
    pub fn not(e: Expr<A>) -> Expr<A> {
        Expr::Not(Box::new(e))
    }

    pub fn and(l: Expr<A>, r: Expr<A>) -> Expr<A> {
        Expr::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Expr<A>, r: Expr<A>) -> Expr<A> {
        Expr::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Expr<A>, r: Expr<A>) -> Expr<A> {
        Expr::Implies(Box::new(l), Box::new(r))
    }

    /// `p -> q` evaluates as `!p | q`.
    pub fn eval(&self, truth: &impl Fn(&A) -> bool) -> bool {
        match self {
            Expr::Atom(a) => truth(a),
            Expr::Not(e) => !e.eval(truth),
            Expr::And(l, r) => l.eval(truth) && r.eval(truth),
            Expr::Or(l, r) => l.eval(truth) || r.eval(truth),
            Expr::Implies(l, r) => !l.eval(truth) || r.eval(truth),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Atom(_) | Expr::Not(_) => 4,
            Expr::And(..) => 3,
            Expr::Or(..) => 2,
            Expr::Implies(..) => 1,
        }
    }
}

impl<A: fmt::Display> Expr<A> {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Atom(a) => write!(f, "{a}")?,
            Expr::Not(e) => {
                write!(f, "!")?;
                e.fmt_prec(f, 4)?;
            }
            Expr::And(l, r) => {
                l.fmt_prec(f, 3)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 4)?;
            }
            Expr::Or(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 3)?;
            }
            Expr::Implies(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, 1)?;
            }
        }
        if prec < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<A: fmt::Display> fmt::Display for Expr<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

pub type PropertyExpr = Expr<Property>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprError {
    Syntax { pos: usize, message: String },
    UnknownIdent { name: String },
}

impl ExprError {
    pub fn code(&self) -> &'static str {
        match self {
            ExprError::Syntax { .. } => "E_EXPR_SYNTAX",
            ExprError::UnknownIdent { .. } => "E_EXPR_UNKNOWN_IDENT",
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { pos, message } => {
                write!(f, "{} at byte {pos}: {message}", self.code())
            }
            ExprError::UnknownIdent { name } => {
                write!(f, "{}: unknown property `{name}`", self.code())
            }
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '!' => {
                out.push((i, Token::Not));
                i += 1;
            }
            '&' => {
                out.push((i, Token::And));
                i += 1;
            }
            '|' => {
                out.push((i, Token::Or));
                i += 1;
            }
            '(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((i, Token::Implies));
                    i += 2;
                } else {
                    return Err(ExprError::Syntax {
                        pos: i,
                        message: "expected `->`".to_string(),
                    });
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            c => {
                return Err(ExprError::Syntax {
                    pos: i,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn implies(&mut self) -> Result<PropertyExpr, ExprError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Token::Implies) {
            self.bump();
            let rhs = self.implies()?; // right-associative
            Ok(Expr::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<PropertyExpr, ExprError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            lhs = Expr::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<PropertyExpr, ExprError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            lhs = Expr::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PropertyExpr, ExprError> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Not) => Ok(Expr::not(self.unary()?)),
            Some(Token::Open) => {
                let inner = self.implies()?;
                if self.bump() != Some(Token::Close) {
                    return Err(ExprError::Syntax {
                        pos: self.here(),
                        message: "expected `)`".to_string(),
                    });
                }
                Ok(inner)
            }
            Some(Token::Ident(name)) => match Property::from_name(&name) {
                Some(p) => Ok(Expr::atom(p)),
                None => Err(ExprError::UnknownIdent { name }),
            },
            _ => Err(ExprError::Syntax {
                pos,
                message: "expected `!`, `(`, or a property name".to_string(),
            }),
        }
    }
}

/// Parses an expression over the property names of [`PropertyReport`].
pub fn parse_property_expr(text: &str) -> Result<PropertyExpr, ExprError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ExprError::Syntax {
            pos: 0,
            message: "empty expression".to_string(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.implies()?;
    if parser.pos != parser.tokens.len() {
        return Err(ExprError::Syntax {
            pos: parser.here(),
            message: "trailing tokens".to_string(),
        });
    }
    Ok(expr)
}

/// Standard boolean semantics against a report.
pub fn eval_expr(e: &PropertyExpr, report: &PropertyReport) -> bool {
    e.eval(&|p| report.holds(*p))
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::report::evaluate_report;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_property_expr("outer & !inner").unwrap(),
            Expr::and(
                Expr::atom(Property::Outer),
                Expr::not(Expr::atom(Property::Inner))
            )
        );
        assert_eq!(
            parse_property_expr("strong -> weak_lusin").unwrap(),
            Expr::implies(
                Expr::atom(Property::Strong),
                Expr::atom(Property::WeakLusin)
            )
        );
        assert_eq!(
            parse_property_expr("outre & inner").unwrap_err(),
            ExprError::UnknownIdent {
                name: "outre".to_string()
            }
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse_property_expr("!outer & inner | strong -> normal -> tietze").unwrap();
        assert_eq!(e.to_string(), "!outer & inner | strong -> normal -> tietze");
        let e = parse_property_expr("(outer -> inner) -> strong").unwrap();
        assert_eq!(e.to_string(), "(outer -> inner) -> strong");
        let e = parse_property_expr("outer & (inner | strong)").unwrap();
        assert_eq!(e.to_string(), "outer & (inner | strong)");
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "outer",
            "!(outer | inner)",
            "outer & inner & strong",
            "outer | inner -> !strong & tietze",
            "((outer))",
        ] {
            let e = parse_property_expr(text).unwrap();
            let printed = e.to_string();
            assert_eq!(
                parse_property_expr(&printed).unwrap(),
                e,
                "{text} -> {printed}"
            );
        }
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "",
            "outer &",
            "& outer",
            "(outer",
            "outer )",
            "outer - inner",
            "outer §",
        ] {
            assert!(
                matches!(
                    parse_property_expr(bad).unwrap_err(),
                    ExprError::Syntax { .. }
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn eval_examples() {
        let rep = evaluate_report(&builtin("outer-not-inner"));
        let e = parse_property_expr("outer & !inner").unwrap();
        assert!(eval_expr(&e, &rep));

        let e = parse_property_expr("strong -> weak_lusin").unwrap();
        for example in crate::builtins::builtin_examples() {
            assert!(
                eval_expr(&e, &evaluate_report(&example.space)),
                "{}",
                example.name
            );
        }

        let counting = evaluate_report(&builtin("counting"));
        let e = parse_property_expr("!borel_regular").unwrap();
        assert!(!eval_expr(&e, &counting));
    }
}
