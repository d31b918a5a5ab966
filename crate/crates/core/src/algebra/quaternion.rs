use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::Rational;

/// Rational quaternion `a + b i + c j + d k` with `i^2 = j^2 = -1`, `ij = -ji = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        Quaternion::new(r(a), r(b), r(c), r(d))
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// `a^2 + b^2 + c^2 + d^2`; zero only for the zero quaternion.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(s * &self.a, s * &self.b, s * &self.c, s * &self.d)
    }

    /// `conj / norm`, or `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            None
        } else {
            Some(self.conj().scale(&n.recip()))
        }
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = -&Quaternion::one();
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
    }

    #[test]
    fn inverse_of_one_plus_i_j_k() {
        let q = Quaternion::from_ints(1, 1, 1, 1);
        assert_eq!(q.norm(), Rational::from_integer(4.into()));
        let quarter = Rational::new(1.into(), 4.into());
        let expected = Quaternion::from_ints(1, -1, -1, -1).scale(&quarter);
        let inv = q.inverse().unwrap();
        assert_eq!(inv, expected);
        assert!((&q * &inv).is_one());
        assert!((&inv * &q).is_one());
        assert!(Quaternion::zero().inverse().is_none());
    }

    #[test]
    fn componentwise_sum() {
        let s = &Quaternion::from_ints(1, 1, 0, 0) + &Quaternion::from_ints(1, 0, 1, 0);
        assert_eq!(s, Quaternion::from_ints(2, 1, 1, 0));
    }
}
