//! Recursive-descent parser for operator expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' UINT)?
//! primary := NAME | SCALAR | 'comm(' expr ',' expr ')' | 'dag(' expr ')' | '(' expr ')'
//! SCALAR  := INT | 'i' | 'sqrt(' INT ('/' INT)? ')' | hbar | B | absB | mass | e | omega | sgnB
//! ```
//!
//! A missing `*` between two factors means multiplication, so the canonical
//! printer's `apd^1 ap^1` reads back. Syntax errors report the furthest
//! position reached together with every token that would have been accepted there.

use std::collections::BTreeSet;
use std::str::FromStr;

use landau_core::{OperatorName, Rational};
use num_traits::{Signed, Zero};

use crate::ast::{Expr, Param};
use crate::error::{Error, Result};

pub const MAX_INPUT_BYTES: usize = 64 * 1024;
pub const MAX_DEPTH: usize = 256;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
    Invalid,
    Eof,
}

fn lex(text: &str) -> Vec<(Tok, usize)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[start..i].to_string()), start));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if b"+-*/^(),".contains(&c) {
            i += 1;
            out.push((Tok::Sym(c as char), start));
        } else {
            // nothing can match past here
            out.push((Tok::Invalid, start));
            return out;
        }
    }
    out.push((Tok::Eof, text.len()));
    out
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
    furthest: usize,
    expected: BTreeSet<&'static str>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn note(&mut self, what: &'static str) {
        let here = self.offset();
        if here > self.furthest {
            self.furthest = here;
            self.expected.clear();
        }
        if here == self.furthest {
            self.expected.insert(what);
        }
    }

    fn failure(&self) -> Error {
        Error::Syntax {
            offset: self.furthest,
            expected: self.expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn fail<T>(&mut self, what: &'static str) -> Result<T> {
        self.note(what);
        Err(self.failure())
    }

    fn advance(&mut self) {
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char, label: &'static str) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.advance();
            true
        } else {
            self.note(label);
            false
        }
    }

    fn expect(&mut self, c: char, label: &'static str) -> Result<()> {
        if self.eat(c, label) {
            Ok(())
        } else {
            Err(self.failure())
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::NestingTooDeep {
                offset: self.offset(),
                limit: MAX_DEPTH,
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+', "'+'") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-', "'-'") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*', "'*'") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/', "'/'") {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Tok::Ident(_) | Tok::Int(_) | Tok::Sym('(')) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                self.note("operand");
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-', "'-'") {
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let base = self.primary()?;
        if self.eat('^', "'^'") {
            let exponent = match self.peek() {
                Tok::Int(digits) => digits.parse::<u32>().ok(),
                _ => None,
            };
            return match exponent {
                Some(k) => {
                    self.advance();
                    Ok(Expr::Pow(Box::new(base), k))
                }
                None => self.fail("unsigned 32-bit exponent"),
            };
        }
        Ok(base)
    }

    fn integer(&mut self, label: &'static str, positive: bool) -> Result<Rational> {
        if let Tok::Int(digits) = self.peek() {
            let value = Rational::from_str(digits).expect("digits form an integer");
            if !positive || !value.is_zero() {
                self.advance();
                return Ok(value);
            }
        }
        self.fail(label)
    }

    fn primary(&mut self) -> Result<Expr> {
        self.enter()?;
        let node = self.primary_inner()?;
        self.depth -= 1;
        Ok(node)
    }

    fn primary_inner(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Literal(self.integer("integer", false)?)),
            Tok::Sym('(') => {
                self.advance();
                let inner = self.expr()?;
                self.expect(')', "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.advance();
                match name.as_str() {
                    "comm" => {
                        self.expect('(', "'('")?;
                        let a = self.expr()?;
                        self.expect(',', "','")?;
                        let b = self.expr()?;
                        self.expect(')', "')'")?;
                        Ok(Expr::Comm(Box::new(a), Box::new(b)))
                    }
                    "dag" => {
                        self.expect('(', "'('")?;
                        let a = self.expr()?;
                        self.expect(')', "')'")?;
                        Ok(Expr::Dag(Box::new(a)))
                    }
                    "sqrt" => {
                        self.expect('(', "'('")?;
                        let mut q = self.integer("positive integer", true)?;
                        if self.eat('/', "'/'") {
                            q /= self.integer("positive integer", true)?;
                        }
                        self.expect(')', "')'")?;
                        debug_assert!(q.is_positive());
                        Ok(Expr::Sqrt(q))
                    }
                    "i" => Ok(Expr::ImaginaryUnit),
                    other => {
                        if let Some(p) = Param::from_name(other) {
                            Ok(Expr::Param(p))
                        } else {
                            OperatorName::from_str(other).map(Expr::Operator).map_err(|_| {
                                Error::UnknownOperator {
                                    name: other.to_string(),
                                    offset,
                                }
                            })
                        }
                    }
                }
            }
            _ => self.fail("operand"),
        }
    }
}

/// Parses a complete expression.
pub fn parse(text: &str) -> Result<Expr> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(Error::InputTooLarge {
            len: text.len(),
            limit: MAX_INPUT_BYTES,
        });
    }
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
        depth: 0,
        furthest: 0,
        expected: BTreeSet::new(),
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail("end of input");
    }
    Ok(e)
}

/// Parses a signed rational such as `-3/2` or `7`, as used by command-line flags.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    let unsigned = t.strip_prefix('-').unwrap_or(t);
    let well_formed = match unsigned.split_once('/') {
        Some((n, d)) => is_digits(n) && is_digits(d),
        None => is_digits(unsigned),
    };
    if !well_formed {
        return None;
    }
    let (n, d) = unsigned.split_once('/').unwrap_or((unsigned, "1"));
    let d = Rational::from_str(d).ok()?;
    if d.is_zero() {
        return None;
    }
    let q = Rational::from_str(n).ok()? / d;
    Some(if t.starts_with('-') { -q } else { q })
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use landau_core::radical::rational;

    fn syntax_offset(text: &str) -> usize {
        match parse(text) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{text:?} gave {other:?}"),
        }
    }

    #[test]
    fn structural_examples() {
        let e = parse("comm(J3, J1)").unwrap();
        assert_eq!(
            e,
            Expr::Comm(
                Box::new(Expr::Operator(OperatorName::J3)),
                Box::new(Expr::Operator(OperatorName::J1))
            )
        );
        let e = parse("1/2*hbar*B*I").unwrap();
        assert_eq!(e.to_string(), "((((1 / 2) * hbar) * B) * I)");
    }

    #[test]
    fn unterminated_commutator() {
        assert_eq!(syntax_offset("comm(J3"), 7);
        match parse("comm(J3") {
            Err(Error::Syntax { expected, .. }) => assert!(expected.contains(&"','".to_string())),
            _ => unreachable!(),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("-x^2 + y").unwrap().to_string(), "((-(x)^2) + y)");
        assert_eq!(parse("x - y - I").unwrap().to_string(), "((x - y) - I)");
        assert_eq!(parse("apd^1 ap^1").unwrap().to_string(), "((apd)^1 * (ap)^1)");
    }

    #[test]
    fn unknown_names_carry_offsets() {
        assert_eq!(
            parse("J1 + Jz"),
            Err(Error::UnknownOperator {
                name: "Jz".into(),
                offset: 5
            })
        );
    }

    #[test]
    fn cli_rationals() {
        assert_eq!(parse_rational("-3/2"), Some(rational(-3, 2)));
        assert_eq!(parse_rational("4"), Some(rational(4, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("+1"), None);
        assert_eq!(parse_rational("1/-2"), None);
    }
}
