use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::radical::{int, Rational};

/// Sign of the magnetic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSign {
    Negative,
    Positive,
}

impl FieldSign {
    pub fn as_i64(self) -> i64 {
        match self {
            FieldSign::Positive => 1,
            FieldSign::Negative => -1,
        }
    }
}

/// Exact physical parameters: ħ, the mass, the charge magnitude `|e|` and the
/// signed field `B`. The Larmor frequency `ω = |e||B| / (2·mass)` is derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterSet {
    hbar: Rational,
    mass: Rational,
    charge_mag: Rational,
    b_field: Rational,
    omega: Rational,
}

impl ParameterSet {
    pub fn new(
        hbar: Rational,
        mass: Rational,
        charge_mag: Rational,
        b_field: Rational,
    ) -> Result<Self> {
        if !hbar.is_positive() {
            return Err(Error::InvalidParameters("hbar must be positive"));
        }
        if !mass.is_positive() {
            return Err(Error::InvalidParameters("mass must be positive"));
        }
        if !charge_mag.is_positive() {
            return Err(Error::InvalidParameters("charge magnitude must be positive"));
        }
        if b_field.is_zero() {
            return Err(Error::InvalidParameters("magnetic field must be nonzero"));
        }
        let omega = &charge_mag * b_field.abs() / (int(2) * &mass);
        Ok(ParameterSet {
            hbar,
            mass,
            charge_mag,
            b_field,
            omega,
        })
    }

    /// ħ = mass = |e| = 1 with the given field.
    pub fn unit(b_field: Rational) -> Result<Self> {
        Self::new(int(1), int(1), int(1), b_field)
    }

    pub fn hbar(&self) -> &Rational {
        &self.hbar
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    pub fn charge_mag(&self) -> &Rational {
        &self.charge_mag
    }

    pub fn b_field(&self) -> &Rational {
        &self.b_field
    }

    pub fn abs_b(&self) -> Rational {
        self.b_field.abs()
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn sgn_b(&self) -> FieldSign {
        if self.b_field.is_positive() {
            FieldSign::Positive
        } else {
            FieldSign::Negative
        }
    }

    /// One Landau quantum ħω.
    pub fn hbar_omega(&self) -> Rational {
        &self.hbar * &self.omega
    }

    /// Landau level `E_l = ħω(2l + 1)`.
    pub fn landau_level(&self, l: u32) -> Rational {
        self.hbar_omega() * int(2 * i64::from(l) + 1)
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hbar={} mass={} |e|={} B={}",
            self.hbar, self.mass, self.charge_mag, self.b_field
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::rational;

    #[test]
    fn omega_is_derived() {
        let p = ParameterSet::new(int(1), int(3), rational(1, 2), int(-4)).unwrap();
        assert_eq!(p.omega(), &rational(1, 3));
        assert_eq!(p.sgn_b(), FieldSign::Negative);
        assert_eq!(p.landau_level(2), rational(5, 3));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(ParameterSet::unit(int(0)).is_err());
        assert!(ParameterSet::new(int(0), int(1), int(1), int(1)).is_err());
        assert!(ParameterSet::new(int(1), int(-1), int(1), int(1)).is_err());
        assert!(ParameterSet::new(int(1), int(1), int(0), int(1)).is_err());
    }
}
