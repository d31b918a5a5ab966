use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::quaternion::Quaternion;
use super::scalar::{FieldDescriptor, Scalar};
use crate::error::{Error, Result};
use crate::linalg;

/// The ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingDescriptor {
    Field { field: FieldDescriptor },
    Matrix { k: usize, field: FieldDescriptor },
    Quaternion,
}

impl RingDescriptor {
    pub fn field(field: FieldDescriptor) -> Self {
        RingDescriptor::Field { field }
    }

    pub fn matrix(k: usize, field: FieldDescriptor) -> Self {
        RingDescriptor::Matrix { k, field }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::Field { field } => field.validate(),
            RingDescriptor::Matrix { k: 0, .. } => {
                Err(Error::InvalidDescriptor("matrix size k must be at least 1".into()))
            }
            RingDescriptor::Matrix { field, .. } => field.validate(),
            RingDescriptor::Quaternion => Ok(()),
        }
    }

    pub fn zero(&self) -> RingElement {
        match *self {
            RingDescriptor::Field { field } => RingElement::Scalar(field.zero()),
            RingDescriptor::Matrix { k, field } => RingElement::Matrix(Matrix::zero(k, k, field)),
            RingDescriptor::Quaternion => RingElement::Quaternion(Quaternion::zero()),
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    /// The integer `v` embedded as `v * 1`.
    pub fn from_i64(&self, v: i64) -> RingElement {
        match *self {
            RingDescriptor::Field { field } => RingElement::Scalar(field.from_i64(v)),
            RingDescriptor::Matrix { k, field } => {
                RingElement::Matrix(Matrix::identity(k, field).scale(&field.from_i64(v)))
            }
            RingDescriptor::Quaternion => RingElement::Quaternion(Quaternion::from_ints(v, 0, 0, 0)),
        }
    }

    /// `Some(matrix size, field)` for matrix rings.
    pub fn as_matrix_ring(&self) -> Option<(usize, FieldDescriptor)> {
        match *self {
            RingDescriptor::Matrix { k, field } => Some((k, field)),
            _ => None,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Field { field } => write!(f, "{field}"),
            RingDescriptor::Matrix { k, field } => write!(f, "M_{k}({field})"),
            RingDescriptor::Quaternion => write!(f, "H(Q)"),
        }
    }
}

/// A value in one of the supported rings. The descriptor is derived from
/// the payload, so the two can never disagree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Scalar(Scalar),
    Matrix(Matrix),
    Quaternion(Quaternion),
}

impl RingElement {
    /// Wraps a square matrix; rejects other shapes.
    pub fn matrix(m: Matrix) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 {
            return Err(Error::ShapeMismatch(format!(
                "ring elements must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(RingElement::Matrix(m))
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingElement::Scalar(s) => RingDescriptor::Field { field: s.field() },
            RingElement::Matrix(m) => RingDescriptor::Matrix { k: m.rows(), field: m.field() },
            RingElement::Quaternion(_) => RingDescriptor::Quaternion,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self {
            RingElement::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_quaternion(&self) -> Option<&Quaternion> {
        match self {
            RingElement::Quaternion(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Scalar(s) => s.is_zero(),
            RingElement::Matrix(m) => m.is_zero(),
            RingElement::Quaternion(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Scalar(s) => s.is_one(),
            RingElement::Matrix(m) => m.is_identity(),
            RingElement::Quaternion(q) => q.is_one(),
        }
    }

    /// Errors unless `other` lives in the same ring as `self`.
    pub fn check_same_ring(&self, other: &RingElement) -> Result<()> {
        let (a, b) = (self.descriptor(), other.descriptor());
        if a == b {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch { expected: a, found: b })
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self * other)
    }

    /// Two-sided inverse if `self` is a unit.
    pub fn invert(&self) -> Option<RingElement> {
        match self {
            RingElement::Scalar(s) => s.inv().map(RingElement::Scalar),
            RingElement::Matrix(m) => linalg::inverse(m).map(RingElement::Matrix),
            RingElement::Quaternion(q) => q.inverse().map(RingElement::Quaternion),
        }
    }

    pub fn pow(&self, n: u32) -> RingElement {
        let mut acc = self.descriptor().one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn mismatch(a: &RingElement, b: &RingElement) -> ! {
    panic!("ring mismatch: {} vs {}", a.descriptor(), b.descriptor())
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Scalar(a), RingElement::Scalar(b)) if a.field() == b.field() => {
                RingElement::Scalar(a + b)
            }
            (RingElement::Matrix(a), RingElement::Matrix(b)) if a.rows() == b.rows() => {
                RingElement::Matrix(a + b)
            }
            (RingElement::Quaternion(a), RingElement::Quaternion(b)) => RingElement::Quaternion(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Scalar(a), RingElement::Scalar(b)) if a.field() == b.field() => {
                RingElement::Scalar(a - b)
            }
            (RingElement::Matrix(a), RingElement::Matrix(b)) if a.rows() == b.rows() => {
                RingElement::Matrix(a - b)
            }
            (RingElement::Quaternion(a), RingElement::Quaternion(b)) => RingElement::Quaternion(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Scalar(a), RingElement::Scalar(b)) if a.field() == b.field() => {
                RingElement::Scalar(a * b)
            }
            (RingElement::Matrix(a), RingElement::Matrix(b)) if a.rows() == b.rows() => {
                RingElement::Matrix(a * b)
            }
            (RingElement::Quaternion(a), RingElement::Quaternion(b)) => RingElement::Quaternion(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            RingElement::Scalar(a) => RingElement::Scalar(-a),
            RingElement::Matrix(a) => RingElement::Matrix(-a),
            RingElement::Quaternion(a) => RingElement::Quaternion(-a),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Scalar(s) => write!(f, "{s}"),
            RingElement::Matrix(m) => write!(f, "{m}"),
            RingElement::Quaternion(q) => write!(f, "{q}"),
        }
    }
}
