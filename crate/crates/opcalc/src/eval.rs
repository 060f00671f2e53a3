use landau_core::weyl::DEFAULT_MAX_EXPONENT;
use landau_core::{catalog, OperatorPoly, ParameterSet, RadicalScalar, Rational};

use crate::ast::{Expr, Param};
use crate::error::{Error, Result};

fn param_value(p: Param, params: &ParameterSet) -> Rational {
    match p {
        Param::Hbar => params.hbar().clone(),
        Param::B => params.b_field().clone(),
        Param::AbsB => params.abs_b(),
        Param::Mass => params.mass().clone(),
        Param::Charge => params.charge_mag().clone(),
        Param::Omega => params.omega().clone(),
        Param::SgnB => Rational::from_integer(params.sgn_b().as_i64().into()),
    }
}

fn scalar(c: RadicalScalar) -> OperatorPoly {
    OperatorPoly::scalar(c)
}

/// Evaluates an expression to its exact normal-ordered operator.
pub fn eval_ast(ast: &Expr, params: &ParameterSet) -> Result<OperatorPoly> {
    let sub = |e: &Expr| eval_ast(e, params);
    Ok(match ast {
        Expr::Operator(name) => catalog(*name, params)?,
        Expr::Literal(q) => scalar(RadicalScalar::from_rational(q.clone())),
        Expr::ImaginaryUnit => scalar(RadicalScalar::i()),
        Expr::Sqrt(q) => scalar(RadicalScalar::sqrt_rational(q)?),
        Expr::Param(p) => scalar(RadicalScalar::from_rational(param_value(*p, params))),
        Expr::Add(a, b) => sub(a)? + sub(b)?,
        Expr::Sub(a, b) => sub(a)? - sub(b)?,
        Expr::Mul(a, b) => sub(a)?.try_mul(&sub(b)?)?,
        Expr::Div(a, b) => {
            let divisor = sub(b)?;
            let c = divisor.as_scalar().ok_or(Error::DivisionByOperator)?;
            let inv = c.inverse_monomial().ok_or_else(|| Error::NotInvertible(c.to_string()))?;
            sub(a)?.scale(&inv)
        }
        Expr::Neg(a) => -sub(a)?,
        Expr::Pow(a, k) => {
            if *k > DEFAULT_MAX_EXPONENT {
                return Err(landau_core::Error::DegreeOverflow {
                    exponent: u64::from(*k),
                    limit: DEFAULT_MAX_EXPONENT,
                }
                .into());
            }
            sub(a)?.pow(*k)?
        }
        Expr::Comm(a, b) => sub(a)?.commutator(&sub(b)?)?,
        Expr::Dag(a) => sub(a)?.adjoint(),
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, params: &ParameterSet) -> Result<OperatorPoly> {
    eval_ast(&crate::parser::parse(text)?, params)
}

/// Canonical rendering; `eval_str(&print_canonical(a), _)` gives back `a`.
pub fn print_canonical(a: &OperatorPoly) -> String {
    a.to_string()
}
