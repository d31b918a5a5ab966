//! Polynomials `a_n x^n + ... + a_1 x + a_0` with coefficients on the left
//! of the powers and a central indeterminate `x`.
//!
//! Products use the ordered convolution `c_k = sum_{i+j=k} a_i b_j`, and
//! evaluation is always on the right: `P(a) = sum a_i a^i`.

use std::fmt;

use crate::algebra::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingDescriptor,
    coeffs: Vec<RingElement>,
}

impl Polynomial {
    /// Coefficients indexed by degree. Trailing zeros are trimmed.
    pub fn new(ring: RingDescriptor, coeffs: Vec<RingElement>) -> Result<Self> {
        for c in &coeffs {
            if c.descriptor() != ring {
                return Err(Error::DescriptorMismatch { expected: ring, found: c.descriptor() });
            }
        }
        Ok(Polynomial::from_trusted(ring, coeffs))
    }

    fn from_trusted(ring: RingDescriptor, mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { ring, coeffs }
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        Polynomial { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        Polynomial::from_trusted(ring, vec![ring.one()])
    }

    pub fn constant(c: RingElement) -> Self {
        Polynomial::from_trusted(c.descriptor(), vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(ring: RingDescriptor) -> Self {
        Polynomial { ring, coeffs: vec![ring.zero(), ring.one()] }
    }

    /// The monic linear polynomial `x - a`.
    pub fn linear(a: &RingElement) -> Self {
        let ring = a.descriptor();
        Polynomial { ring, coeffs: vec![-a, ring.one()] }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(RingElement::is_one)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch { expected: self.ring, found: other.ring })
        }
    }

    fn check_element(&self, a: &RingElement) -> Result<()> {
        if a.descriptor() == self.ring {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch { expected: self.ring, found: a.descriptor() })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Polynomial::from_trusted(self.ring, coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Ordered product: coefficients of `self` stay on the left.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Polynomial::from_trusted(self.ring, coeffs))
    }

    /// `x * self`; the same as `self * x` since `x` is central.
    pub fn shift(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.ring.zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { ring: self.ring, coeffs }
    }

    /// Right evaluation `sum a_i a^i` via `f <- f*a + a_i` from the top.
    pub fn evaluate_right(&self, a: &RingElement) -> Result<RingElement> {
        self.check_element(a)?;
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        Ok(acc)
    }

    /// Right evaluation as the literal sum of `a_i * a^i`.
    pub fn evaluate_power_sum(&self, a: &RingElement) -> Result<RingElement> {
        self.check_element(a)?;
        let mut acc = self.ring.zero();
        let mut power = self.ring.one();
        for c in &self.coeffs {
            acc = &acc + &(c * &power);
            power = &power * a;
        }
        Ok(acc)
    }

    /// Writes `self = quotient * (x - a) + remainder`.
    ///
    /// The remainder is a constant and equals `self.evaluate_right(a)`.
    pub fn right_divide_linear(&self, a: &RingElement) -> Result<(Polynomial, RingElement)> {
        self.check_element(a)?;
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Ok((Polynomial::zero(self.ring), self.coeffs[0].clone()));
        }
        // f_{n-1} = a_n, f_{i-1} = a_i + f_i a, remainder = a_0 + f_0 a
        let mut q = vec![self.ring.zero(); n];
        q[n - 1] = self.coeffs[n].clone();
        for i in (1..n).rev() {
            q[i - 1] = &self.coeffs[i] + &(&q[i] * a);
        }
        let remainder = &self.coeffs[0] + &(&q[0] * a);
        Ok((Polynomial::from_trusted(self.ring, q), remainder))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}
