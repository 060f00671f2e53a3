//! Every named operator of the planar Landau system, expanded over `a₊, a₊†, a₋, a₋†`.
//!
//! The Cartesian oscillators and the phase-space operators are obtained by
//! inverting the mode transformations:
//!
//! ```text
//! a_x = (a₊ + a₋)/√2          a_y = i(a₊ − a₋)/√2
//! x   = √(ħ/2mω)(a_x + a_x†)  P_x = i√(mωħ/2)(a_x† − a_x)
//! ```
//!
//! and likewise for `y`, `P_y`. Guiding-centre coordinates, the ladder
//! generators `J±` and the Casimir operator depend on the sign of `B`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::{FieldSign, ParameterSet};
use crate::radical::{int, rational, RadicalScalar, Rational};
use crate::weyl::OperatorPoly;

macro_rules! operator_names {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum OperatorName {
            $($variant),*
        }

        impl OperatorName {
            pub const ALL: &'static [OperatorName] = &[$(OperatorName::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(OperatorName::$variant => $name),*
                }
            }
        }

        impl FromStr for OperatorName {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(OperatorName::$variant),)*
                    other => Err(Error::UnknownOperator(other.to_string())),
                }
            }
        }
    };
}

operator_names! {
    Identity => "I",
    Ap => "ap",
    Am => "am",
    Apd => "apd",
    Amd => "amd",
    Ax => "ax",
    Ay => "ay",
    Axd => "axd",
    Ayd => "ayd",
    X => "x",
    Y => "y",
    Px => "Px",
    Py => "Py",
    Np => "Np",
    Nm => "Nm",
    Mz => "Mz",
    Lz => "Lz",
    H2 => "H2",
    H3 => "H3",
    H23 => "H23",
    Xo => "xo",
    Yo => "yo",
    J1 => "J1",
    J2 => "J2",
    J3 => "J3",
    Jp => "Jp",
    Jm => "Jm",
    Cbar => "Cbar",
    X1 => "X1",
    X2 => "X2",
    X3 => "X3",
    W1 => "W1",
    W2 => "W2",
    CE2 => "CE2",
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Source of named operators. The identity suite is written against this
/// trait so that alternative (or deliberately broken) catalogs can be checked.
pub trait Catalog {
    fn operator(&self, name: OperatorName, params: &ParameterSet) -> Result<OperatorPoly>;
}

/// The operators as defined for the system in the symmetric gauge.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardCatalog;

pub fn catalog(name: OperatorName, params: &ParameterSet) -> Result<OperatorPoly> {
    StandardCatalog.operator(name, params)
}

pub fn catalog_by_name(name: &str, params: &ParameterSet) -> Result<OperatorPoly> {
    catalog(name.parse()?, params)
}

fn sqrt(q: Rational) -> Result<RadicalScalar> {
    RadicalScalar::sqrt_rational(&q)
}

fn q(r: Rational) -> RadicalScalar {
    RadicalScalar::from_rational(r)
}

fn i() -> RadicalScalar {
    RadicalScalar::i()
}

impl Catalog for StandardCatalog {
    fn operator(&self, name: OperatorName, params: &ParameterSet) -> Result<OperatorPoly> {
        use OperatorName::*;

        let hbar = params.hbar();
        let abs_b = params.abs_b();
        let b = params.b_field();
        let e = params.charge_mag();
        let mass_omega = params.mass() * params.omega();
        let inv_sqrt2 = sqrt(rational(1, 2))?;
        let get = |n: OperatorName| self.operator(n, params);

        let op = match name {
            Identity => OperatorPoly::identity(),
            Ap => OperatorPoly::ap(),
            Am => OperatorPoly::am(),
            Apd => OperatorPoly::apd(),
            Amd => OperatorPoly::amd(),
            Ax => (OperatorPoly::ap() + OperatorPoly::am()).scale(&inv_sqrt2),
            Ay => (OperatorPoly::ap() - OperatorPoly::am()).scale(&(i() * &inv_sqrt2)),
            Axd => (OperatorPoly::apd() + OperatorPoly::amd()).scale(&inv_sqrt2),
            Ayd => (OperatorPoly::apd() - OperatorPoly::amd()).scale(&(-i() * &inv_sqrt2)),
            X | Y => {
                let length = sqrt(hbar / (int(2) * &mass_omega))?;
                let (a, ad) = if name == X { (Ax, Axd) } else { (Ay, Ayd) };
                (get(a)? + get(ad)?).scale(&length)
            }
            Px | Py => {
                let momentum = sqrt(&mass_omega * hbar / int(2))?;
                let (a, ad) = if name == Px { (Ax, Axd) } else { (Ay, Ayd) };
                (get(ad)? - get(a)?).scale(&(i() * momentum))
            }
            Np => OperatorPoly::apd() * OperatorPoly::ap(),
            Nm => OperatorPoly::amd() * OperatorPoly::am(),
            Mz | Lz | J3 | X3 => (get(Np)? - get(Nm)?).scale_rational(hbar),
            H2 => (get(Np)? + get(Nm)? + OperatorPoly::identity()).scale_rational(&params.hbar_omega()),
            H3 => {
                let k = e * b / (int(2) * params.mass()) * hbar;
                (get(Np)? - get(Nm)?).scale_rational(&k)
            }
            H23 => get(H2)? + get(H3)?,
            Xo | Yo => {
                let half_len = q(rational(1, 2)) * sqrt(hbar / &mass_omega)?;
                let (create, annihilate, y_phase) = match params.sgn_b() {
                    FieldSign::Positive => (OperatorPoly::amd(), OperatorPoly::am(), i()),
                    FieldSign::Negative => (OperatorPoly::apd(), OperatorPoly::ap(), -i()),
                };
                if name == Xo {
                    (create + annihilate).scale(&half_len)
                } else {
                    (create - annihilate).scale(&(y_phase * half_len))
                }
            }
            J1 => get(Yo)?.scale(&(-(sqrt(e.clone())? * q(b.clone())))),
            J2 => get(Xo)?.scale(&(sqrt(e.clone())? * q(b.clone()))),
            Jp | Jm => {
                let k = sqrt(hbar * &abs_b)?;
                match (params.sgn_b(), name == Jp) {
                    (FieldSign::Positive, true) => OperatorPoly::am().scale(&(i() * k)),
                    (FieldSign::Positive, false) => OperatorPoly::amd().scale(&(-i() * k)),
                    (FieldSign::Negative, true) => OperatorPoly::apd().scale(&(-i() * k)),
                    (FieldSign::Negative, false) => OperatorPoly::ap().scale(&(i() * k)),
                }
            }
            Cbar => {
                let n = match params.sgn_b() {
                    FieldSign::Positive => get(Np)?,
                    FieldSign::Negative => get(Nm)?,
                };
                (n.scale_rational(&int(2)) + OperatorPoly::identity()).scale_rational(&(hbar * &abs_b))
            }
            X1 => get(Px)?.scale(&-sqrt(e.recip())?),
            X2 => get(Py)?.scale(&-sqrt(e.recip())?),
            W1 => get(Y)?.scale(&(q(rational(-1, 2) * b) * sqrt(e.clone())?)),
            W2 => get(X)?.scale(&(q(rational(1, 2) * b) * sqrt(e.clone())?)),
            CE2 => {
                let x1 = get(X1)?;
                let x2 = get(X2)?;
                x1.try_mul(&x1)? + x2.try_mul(&x2)?
            }
        };
        Ok(op)
    }
}
