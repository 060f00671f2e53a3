use std::fmt;

use landau_core::{OperatorName, Rational};

/// Physical parameter referenced by name inside an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Hbar,
    B,
    AbsB,
    Mass,
    Charge,
    Omega,
    SgnB,
}

impl Param {
    pub const ALL: [Param; 7] = [
        Param::Hbar,
        Param::B,
        Param::AbsB,
        Param::Mass,
        Param::Charge,
        Param::Omega,
        Param::SgnB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Param::Hbar => "hbar",
            Param::B => "B",
            Param::AbsB => "absB",
            Param::Mass => "mass",
            Param::Charge => "e",
            Param::Omega => "omega",
            Param::SgnB => "sgnB",
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Operator(OperatorName),
    Literal(Rational),
    ImaginaryUnit,
    /// Square root of a positive rational literal.
    Sqrt(Rational),
    Param(Param),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by an expression that must evaluate to an invertible scalar.
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Dag(Box<Expr>),
}

impl fmt::Display for Expr {
    /// Fully parenthesized form, mostly for debugging.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Operator(n) => write!(f, "{n}"),
            Expr::Literal(q) => write!(f, "{q}"),
            Expr::ImaginaryUnit => f.write_str("i"),
            Expr::Sqrt(q) => write!(f, "sqrt({q})"),
            Expr::Param(p) => f.write_str(p.as_str()),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Pow(a, k) => write!(f, "({a})^{k}"),
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Dag(a) => write!(f, "dag({a})"),
        }
    }
}
