//! Exhaustive ground truth over small matrix rings `M_k(F_p)`.
//!
//! The search here deliberately avoids the linear-algebra path: it tries
//! every coefficient tuple and evaluates the resulting polynomial directly,
//! so its verdicts can be compared against the rank criteria.

use crate::algebra::{FieldDescriptor, Matrix, PrimeFieldElement, RingDescriptor, RingElement, Scalar};
use crate::error::{Error, Result};
use crate::existence;
use crate::poly::Polynomial;

pub const DEFAULT_CAP: u64 = 65_536;

/// All elements of `M_k(F_p)` in row-major digit order: element `t` has the
/// base-`p` digits of `t` as entries, last entry least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRingEnumeration {
    descriptor: RingDescriptor,
    k: usize,
    p: u64,
    count: u64,
}

impl FiniteRingEnumeration {
    pub fn descriptor(&self) -> RingDescriptor {
        self.descriptor
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn element(&self, mut index: u64) -> Matrix {
        assert!(index < self.count, "element index out of range");
        let field = FieldDescriptor::Prime { p: self.p };
        let mut entries = vec![field.zero(); self.k * self.k];
        for slot in entries.iter_mut().rev() {
            *slot = Scalar::Prime(PrimeFieldElement::new((index % self.p) as i128, self.p));
            index /= self.p;
        }
        Matrix::new(self.k, self.k, field, entries).expect("k*k entries")
    }

    pub fn iter(&self) -> impl Iterator<Item = Matrix> + '_ {
        (0..self.count).map(|t| self.element(t))
    }
}

fn finite_parameters(descriptor: &RingDescriptor) -> Result<(usize, u64)> {
    descriptor.validate()?;
    match *descriptor {
        RingDescriptor::Matrix { k, field: FieldDescriptor::Prime { p } } => Ok((k, p)),
        _ => Err(Error::NotFinite(*descriptor)),
    }
}

fn checked_power(base: u64, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

pub fn enumerate_ring(descriptor: &RingDescriptor, cap: u64) -> Result<FiniteRingEnumeration> {
    let (k, p) = finite_parameters(descriptor)?;
    let size = checked_power(p, k * k).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(FiniteRingEnumeration { descriptor: *descriptor, k, p, count: size as u64 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceOutcome {
    pub exists: bool,
    /// First annihilating choice found, as `(a_1, ..., a_{n-1})` and `a_0`.
    pub witness: Option<(Vec<Matrix>, Matrix)>,
    /// Number of annihilating `(a_1, ..., a_{n-1})` tuples. For each tuple
    /// `a_0` is forced by the root `x1`, so this is also the number of
    /// annihilating monic polynomials.
    pub count: u64,
}

/// Tries every monic degree-`n` polynomial over the finite matrix ring of
/// `x1` and counts those vanishing at both roots.
pub fn brute_force_exists(x1: &Matrix, x2: &Matrix, n: usize, cap: u64) -> Result<BruteForceOutcome> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let descriptor = RingDescriptor::matrix(x1.rows(), x1.field());
    if x2.rows() != x1.rows() || x2.cols() != x1.cols() || x2.field() != x1.field() {
        return Err(Error::DescriptorMismatch {
            expected: descriptor,
            found: RingDescriptor::matrix(x2.rows(), x2.field()),
        });
    }
    let ring = enumerate_ring(&descriptor, cap)?;
    let tuples = checked_power(ring.len(), n - 1).unwrap_or(u128::MAX);
    if tuples > cap as u128 {
        return Err(Error::CapExceeded { size: tuples, cap });
    }

    let r1 = RingElement::Matrix(x1.clone());
    let r2 = RingElement::Matrix(x2.clone());
    let powers: Vec<RingElement> = (0..=n).map(|e| r1.pow(e as u32)).collect();

    let mut count = 0;
    let mut witness = None;
    for t in 0..tuples as u64 {
        let mut rest = t;
        let mut coeffs: Vec<RingElement> = Vec::with_capacity(n + 1);
        coeffs.push(descriptor.zero());
        for _ in 1..n {
            coeffs.push(RingElement::Matrix(ring.element(rest % ring.len())));
            rest /= ring.len();
        }
        coeffs.push(descriptor.one());
        // The only a_0 that can work for x1.
        let mut a0 = -&powers[n];
        for i in 1..n {
            a0 = &a0 - &(&coeffs[i] * &powers[i]);
        }
        coeffs[0] = a0;
        let p = Polynomial::new(descriptor, coeffs)?;
        if p.evaluate_right(&r1)?.is_zero() && p.evaluate_right(&r2)?.is_zero() {
            count += 1;
            if witness.is_none() {
                let cs = p.coefficients();
                let higher = cs[1..n].iter().map(|c| c.as_matrix().unwrap().clone()).collect();
                witness = Some((higher, cs[0].as_matrix().unwrap().clone()));
            }
        }
    }
    Ok(BruteForceOutcome { exists: count > 0, witness, count })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub x1: Matrix,
    pub x2: Matrix,
    pub criterion_exists: bool,
    pub oracle_exists: bool,
    pub solution_space_dim: usize,
    pub oracle_count: u64,
}

impl PairRecord {
    pub fn agrees(&self) -> bool {
        self.criterion_exists == self.oracle_exists
    }

    /// `count = p^dim` whenever a solution exists.
    pub fn count_law_holds(&self, p: u64) -> bool {
        !self.oracle_exists
            || checked_power(p, self.solution_space_dim) == Some(self.oracle_count as u128)
    }

    pub fn difference_is_singular(&self) -> bool {
        crate::linalg::inverse(&(&self.x1 - &self.x2)).is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub descriptor: RingDescriptor,
    pub n: usize,
    pub records: Vec<PairRecord>,
}

impl CrossCheckReport {
    pub fn pairs(&self) -> usize {
        self.records.len()
    }

    pub fn disagreements(&self) -> Vec<&PairRecord> {
        self.records.iter().filter(|r| !r.agrees()).collect()
    }

    pub fn count_law_violations(&self) -> Vec<&PairRecord> {
        let p = match self.descriptor {
            RingDescriptor::Matrix { field: FieldDescriptor::Prime { p }, .. } => p,
            _ => unreachable!("cross-checks only run over prime fields"),
        };
        self.records.iter().filter(|r| !r.count_law_holds(p)).collect()
    }

    /// Pairs admitting a monic degree-`n` annihilator (oracle verdict).
    pub fn admitting(&self) -> usize {
        self.records.iter().filter(|r| r.oracle_exists).count()
    }
}

/// Compares the rank criterion with exhaustive search on every ordered pair
/// of distinct elements.
pub fn cross_check_criterion(descriptor: &RingDescriptor, n: usize, cap: u64) -> Result<CrossCheckReport> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let ring = enumerate_ring(descriptor, cap)?;
    let elements: Vec<Matrix> = ring.iter().collect();
    let mut records = Vec::with_capacity(elements.len() * elements.len().saturating_sub(1));
    for x1 in &elements {
        for x2 in &elements {
            if x1 == x2 {
                continue;
            }
            let report = if n == 2 {
                existence::quadratic_existence(x1, x2)?
            } else {
                existence::degree_n_existence(x1, x2, n)?
            };
            let oracle = brute_force_exists(x1, x2, n, cap)?;
            records.push(PairRecord {
                x1: x1.clone(),
                x2: x2.clone(),
                criterion_exists: report.exists,
                oracle_exists: oracle.exists,
                solution_space_dim: report.solution_space_dim,
                oracle_count: oracle.count,
            });
        }
    }
    Ok(CrossCheckReport { descriptor: *descriptor, n, records })
}
