use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::QuandleTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed term `{text}`: {reason}")]
pub struct TermError {
    pub text: String,
    pub reason: &'static str,
}

/// A binary term in the variables `x`, `y` over `*` and `\`.
///
/// Operators associate to the left; `x*y*z` means `(x*y)*z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    X,
    Y,
    Star(Box<Term>, Box<Term>),
    Ldiv(Box<Term>, Box<Term>),
}

impl Term {
    pub fn eval(&self, q: &QuandleTable, x: usize, y: usize) -> usize {
        match self {
            Term::X => x,
            Term::Y => y,
            Term::Star(a, b) => q.op(a.eval(q, x, y), b.eval(q, x, y)),
            Term::Ldiv(a, b) => q.ldiv(a.eval(q, x, y), b.eval(q, x, y)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::X => f.write_str("x"),
            Term::Y => f.write_str("y"),
            Term::Star(a, b) => write!(f, "({a}*{b})"),
            Term::Ldiv(a, b) => write!(f, "({a}\\{b})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &'static str) -> TermError {
        TermError {
            text: self.text.to_string(),
            reason,
        }
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Term, TermError> {
        let mut left = self.atom()?;
        while let Some(c @ ('*' | '\\')) = self.peek() {
            self.pos += 1;
            let right = self.atom()?;
            left = if c == '*' {
                Term::Star(Box::new(left), Box::new(right))
            } else {
                Term::Ldiv(Box::new(left), Box::new(right))
            };
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Term::X)
            }
            Some('y') => {
                self.pos += 1;
                Ok(Term::Y)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.fail("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.fail("expected `x`, `y` or `(`")),
            None => Err(self.fail("unexpected end")),
        }
    }
}

impl FromStr for Term {
    type Err = TermError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            text,
            chars: text.chars().collect(),
            pos: 0,
        };
        let term = p.expr()?;
        if p.peek().is_some() {
            return Err(p.fail("trailing input"));
        }
        Ok(term)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let t: Term = "x*(y\\x)".parse().unwrap();
        assert_eq!(t.to_string(), "(x*(y\\x))");
        let u: Term = " x * y * x ".parse().unwrap();
        assert_eq!(u.to_string(), "((x*y)*x)");
        for bad in ["", "x*", "(x", "z", "x y", "x)"] {
            assert!(bad.parse::<Term>().is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluation() {
        let q = QuandleTable::dihedral(5);
        let t: Term = "x\\(x*y)".parse().unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(t.eval(&q, x, y), y);
            }
        }
    }
}
