//! Exact construction of polynomials with prescribed right roots over
//! non-commutative rings.
//!
//! Polynomials have their coefficients on the left of the powers of a
//! central indeterminate, and `a` is a (right) root of `P` when
//! `P(a) = sum a_i a^i = 0`. The crate provides
//!
//! * exact scalar fields, matrix rings and rational quaternions ([`algebra`]);
//! * exact Gauss-Jordan elimination and linear solvers ([`linalg`]);
//! * polynomial arithmetic, right evaluation and right division ([`poly`]);
//! * the root-by-root conjugation construction ([`construct`]);
//! * rank criteria for two-root existence over matrix rings ([`existence`]);
//! * an exhaustive oracle over small finite matrix rings ([`oracle`]);
//! * the JSON wire formats used by the command-line tool ([`json`]).

pub mod algebra;
pub mod construct;
mod error;
pub mod existence;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod poly;

pub use algebra::{FieldDescriptor, Matrix, Quaternion, Rational, RingDescriptor, RingElement, Scalar};
pub use construct::{construct_with_roots, verify_roots, Branch, ConstructionStep, ConstructionTrace};
pub use error::{Error, Result};
pub use existence::CriterionReport;
pub use poly::Polynomial;
