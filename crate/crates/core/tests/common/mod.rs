#![allow(dead_code)]

use proptest::prelude::*;
use rootpoly::{FieldDescriptor, Matrix, Polynomial, Quaternion, Rational, RingDescriptor, RingElement, Scalar};

pub const Q: FieldDescriptor = FieldDescriptor::Rational;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn scalar(field: FieldDescriptor) -> BoxedStrategy<Scalar> {
    match field {
        FieldDescriptor::Rational => small_rational().prop_map(Scalar::Rational).boxed(),
        FieldDescriptor::Prime { p } => (0..p as i64).prop_map(move |v| field.from_i64(v)).boxed(),
    }
}

/// Mostly-sparse entries so singular matrices show up regularly.
pub fn matrix(rows: usize, cols: usize, field: FieldDescriptor) -> BoxedStrategy<Matrix> {
    let entry = prop_oneof![2 => Just(field.zero()), 3 => scalar(field)];
    proptest::collection::vec(entry, rows * cols)
        .prop_map(move |e| Matrix::new(rows, cols, field, e).unwrap())
        .boxed()
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    (small_rational(), small_rational(), small_rational(), small_rational())
        .prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

pub fn element(ring: RingDescriptor) -> BoxedStrategy<RingElement> {
    match ring {
        RingDescriptor::Field { field } => scalar(field).prop_map(RingElement::Scalar).boxed(),
        RingDescriptor::Matrix { k, field } => matrix(k, k, field).prop_map(RingElement::Matrix).boxed(),
        RingDescriptor::Quaternion => quaternion().prop_map(RingElement::Quaternion).boxed(),
    }
}

pub fn polynomial(ring: RingDescriptor, max_degree: usize) -> BoxedStrategy<Polynomial> {
    proptest::collection::vec(element(ring), 0..=max_degree + 1)
        .prop_map(move |c| Polynomial::new(ring, c).unwrap())
        .boxed()
}

/// The ring instances exercised by the generic property suites.
pub fn rings() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::field(Q),
        RingDescriptor::field(FieldDescriptor::Prime { p: 7 }),
        RingDescriptor::matrix(2, Q),
        RingDescriptor::matrix(3, FieldDescriptor::Prime { p: 5 }),
        RingDescriptor::Quaternion,
    ]
}

pub fn any_ring() -> impl Strategy<Value = RingDescriptor> {
    proptest::sample::select(rings())
}

pub fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(Q, rows)
}
