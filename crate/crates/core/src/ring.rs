//! Coefficient rings: the integers and the integers modulo `M`.
//!
//! Elements are stored as [`BigInt`]s in canonical form, so two elements of
//! the same ring are equal exactly when their stored values are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
}

impl Ring {
    pub const Z2: Ring = Ring::IntegersMod(2);

    pub fn integers_mod(modulus: u64) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Ring::IntegersMod(modulus))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::IntegersMod(m) => Some(*m),
        }
    }

    pub fn is_mod2(&self) -> bool {
        *self == Ring::Z2
    }

    /// Maps an arbitrary integer to its canonical representative.
    pub fn element(&self, value: impl Into<BigInt>) -> RingElement {
        let value = value.into();
        match self {
            Ring::Integers => RingElement(value),
            Ring::IntegersMod(m) => RingElement(value.mod_floor(&BigInt::from(*m))),
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement(BigInt::zero())
    }

    pub fn one(&self) -> RingElement {
        RingElement(BigInt::one())
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.element(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.element(&a.0 - &b.0)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.element(&a.0 * &b.0)
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        self.element(-&a.0)
    }

    /// `(-1)^parity * a`.
    pub fn signed(&self, parity: u8, a: RingElement) -> RingElement {
        if parity & 1 == 0 {
            a
        } else {
            self.neg(&a)
        }
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

/// An element of some [`Ring`], held in canonical form.
///
/// Construct through [`Ring::element`] so that the value is reduced; the
/// element does not remember which ring produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(BigInt);

impl RingElement {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_value(self) -> BigInt {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
