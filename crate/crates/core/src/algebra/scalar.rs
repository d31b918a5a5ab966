use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::prime::{is_prime, PrimeFieldElement};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Which exact field the scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Result<Self> {
        let f = FieldDescriptor::Prime { p };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldDescriptor::Rational => Ok(()),
            FieldDescriptor::Prime { p } if is_prime(p) => Ok(()),
            FieldDescriptor::Prime { p } => {
                Err(Error::InvalidDescriptor(format!("modulus {p} is not prime")))
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDescriptor::Prime { .. })
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldDescriptor::Rational => Scalar::Rational(Rational::from_integer(v.into())),
            FieldDescriptor::Prime { p } => Scalar::Prime(PrimeFieldElement::new(v as i128, p)),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Maps a rational into this field. Fails over `F_p` when the
    /// denominator vanishes mod `p`.
    pub fn from_rational(&self, r: &Rational) -> Result<Scalar> {
        match *self {
            FieldDescriptor::Rational => Ok(Scalar::Rational(r.clone())),
            FieldDescriptor::Prime { p } => {
                let reduce = |v: &num::BigInt| {
                    let m = num::BigInt::from(p);
                    let r = ((v % &m) + &m) % &m;
                    PrimeFieldElement::new(r.to_i128().expect("reduced residue fits"), p)
                };
                let num = reduce(r.numer());
                let den = reduce(r.denom()).inv().ok_or_else(|| {
                    Error::Decode(format!("denominator of {r} vanishes modulo {p}"))
                })?;
                Ok(Scalar::Prime(num.mul(&den)))
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// An element of a [`FieldDescriptor`] field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Prime(PrimeFieldElement),
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Prime(e) => FieldDescriptor::Prime { p: e.modulus() },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime(e) => e.residue() == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Prime(e) => e.inv().map(Scalar::Prime),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Prime(e) => write!(f, "{e}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $rat:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $rat b),
                    (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.$method(b)),
                    _ => panic!("arithmetic between scalars of different fields"),
                }
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(a.neg()),
        }
    }
}
