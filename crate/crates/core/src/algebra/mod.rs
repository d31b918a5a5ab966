//! Exact scalar fields and the concrete rings built on them.
//!
//! Every ring value is a [`RingElement`] tagged by a [`RingDescriptor`]. The
//! checked operations (`try_add`, `try_mul`, ...) reject mismatched
//! descriptors; the operator impls assume matching operands and panic
//! otherwise.

mod matrix;
mod prime;
mod quaternion;
mod rational;
mod ring;
mod scalar;

pub use matrix::Matrix;
pub use prime::{is_prime, PrimeFieldElement};
pub use quaternion::Quaternion;
pub use rational::{parse_rational, Rational};
pub use ring::{RingDescriptor, RingElement};
pub use scalar::{FieldDescriptor, Scalar};
