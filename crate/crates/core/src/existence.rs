//! Monic polynomials `x^n + a_{n-1} x^{n-1} + ... + a_1 x + a_0` with two
//! prescribed right roots `x1`, `x2`.
//!
//! Subtracting the two root conditions eliminates `a_0` and leaves the
//! linear equation
//!
//! ```text
//! sum_{i=1}^{n-1} a_i (x1^i - x2^i) = x2^n - x1^n
//! ```
//!
//! in the remaining coefficients. A polynomial exists iff that equation is
//! solvable, after which `a_0 = -x1^n - sum a_i x1^i`. Over a matrix ring the
//! equation is linear over the base field, so existence is decided by
//! comparing the rank of the stacked differences with the rank after the
//! right-hand side rows are appended.

use crate::algebra::{Matrix, RingDescriptor, RingElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub n: usize,
    /// `rank(x1 - x2)` for `n = 2`; rank of the stacked differences in general.
    pub rank_difference_matrix: usize,
    /// Same rank with the rows of `x2^n - x1^n` appended below.
    pub rank_augmented: usize,
    pub exists: bool,
    /// `a_1, ..., a_{n-1}` of a particular solution (free variables zero).
    pub coefficients: Option<Vec<Matrix>>,
    pub a0: Option<Matrix>,
    /// Free parameters of the solution set over the base field; 0 when no
    /// polynomial exists.
    pub solution_space_dim: usize,
}

impl CriterionReport {
    /// The monic polynomial `x^n + sum a_i x^i + a_0`, when one exists.
    pub fn polynomial(&self) -> Option<Polynomial> {
        let coefficients = self.coefficients.as_ref()?;
        let a0 = self.a0.as_ref()?;
        Some(monic_from_matrices(a0, coefficients))
    }
}

fn monic_from_matrices(a0: &Matrix, coefficients: &[Matrix]) -> Polynomial {
    let ring = RingDescriptor::matrix(a0.rows(), a0.field());
    let mut coeffs = Vec::with_capacity(coefficients.len() + 2);
    coeffs.push(RingElement::Matrix(a0.clone()));
    coeffs.extend(coefficients.iter().cloned().map(RingElement::Matrix));
    coeffs.push(ring.one());
    Polynomial::new(ring, coeffs).expect("coefficients share one matrix ring")
}

fn check_pair(x1: &Matrix, x2: &Matrix) -> Result<()> {
    if !x1.is_square() || x1.rows() == 0 {
        return Err(Error::ShapeMismatch(format!("x1 is {}x{}, not square", x1.rows(), x1.cols())));
    }
    if x1.rows() != x2.rows() || x1.cols() != x2.cols() || x1.field() != x2.field() {
        return Err(Error::DescriptorMismatch {
            expected: RingDescriptor::matrix(x1.rows(), x1.field()),
            found: RingDescriptor::matrix(x2.rows(), x2.field()),
        });
    }
    if x1 == x2 {
        return Err(Error::EqualRoots);
    }
    Ok(())
}

fn ensure_annihilates(p: &Polynomial, x1: &Matrix, x2: &Matrix) -> Result<()> {
    for x in [x1, x2] {
        if !p.evaluate_right(&RingElement::Matrix(x.clone()))?.is_zero() {
            return Err(Error::Invariant(format!("constructed polynomial does not vanish at {x}")));
        }
    }
    Ok(())
}

/// Decides whether some `x^2 + a_1 x + a_0` has both `x1` and `x2` as roots.
pub fn quadratic_existence(x1: &Matrix, x2: &Matrix) -> Result<CriterionReport> {
    check_pair(x1, x2)?;
    let difference = x1 - x2;
    let rhs = &x2.pow(2) - &x1.pow(2);
    let rank_difference_matrix = linalg::rank(&difference);
    let rank_augmented = linalg::rank(&difference.vstack(&rhs)?);
    let exists = rank_difference_matrix == rank_augmented;

    let solved = linalg::solve_xa_eq_b(&difference, &rhs)?;
    if solved.consistent != exists {
        return Err(Error::Invariant("stacked-rank verdict disagrees with the solver".into()));
    }
    let mut report = CriterionReport {
        n: 2,
        rank_difference_matrix,
        rank_augmented,
        exists,
        coefficients: None,
        a0: None,
        solution_space_dim: 0,
    };
    if let Some(a1) = solved.particular {
        fill_solution(&mut report, vec![a1], x1, x2)?;
        report.solution_space_dim = solved.nullspace_dim;
    }
    Ok(report)
}

/// As [`quadratic_existence`], but with a caller-chosen `a_1`, which must
/// satisfy `a_1 (x1 - x2) = x2^2 - x1^2`.
pub fn quadratic_with_a1(x1: &Matrix, x2: &Matrix, a1: &Matrix) -> Result<CriterionReport> {
    let mut report = quadratic_existence(x1, x2)?;
    if a1.rows() != x1.rows() || a1.cols() != x1.cols() || a1.field() != x1.field() {
        return Err(Error::ShapeMismatch("a1 must live in the same matrix ring as the roots".into()));
    }
    if a1 * &(x1 - x2) != &x2.pow(2) - &x1.pow(2) {
        return Err(Error::InvalidOverride);
    }
    fill_solution(&mut report, vec![a1.clone()], x1, x2)?;
    Ok(report)
}

fn fill_solution(
    report: &mut CriterionReport,
    coefficients: Vec<Matrix>,
    x1: &Matrix,
    x2: &Matrix,
) -> Result<()> {
    let ring_coeffs: Vec<RingElement> = coefficients.iter().cloned().map(RingElement::Matrix).collect();
    let a0 = compute_a0(
        &ring_coeffs,
        &RingElement::Matrix(x1.clone()),
        &RingElement::Matrix(x2.clone()),
        report.n,
    )?;
    let a0 = a0.as_matrix().expect("matrix ring").clone();
    ensure_annihilates(&monic_from_matrices(&a0, &coefficients), x1, x2)?;
    report.coefficients = Some(coefficients);
    report.a0 = Some(a0);
    Ok(())
}

/// Decides whether some monic degree-`n` polynomial has both roots, solving
/// for all of `a_1, ..., a_{n-1}` jointly.
pub fn degree_n_existence(x1: &Matrix, x2: &Matrix, n: usize) -> Result<CriterionReport> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    check_pair(x1, x2)?;
    let k = x1.rows();
    let mut blocks = Vec::with_capacity(n - 1);
    let (mut p1, mut p2) = (x1.clone(), x2.clone());
    for _ in 1..n {
        blocks.push(&p1 - &p2);
        p1 = &p1 * x1;
        p2 = &p2 * x2;
    }
    let rhs = &p2 - &p1;
    let solved = linalg::solve_stacked(&blocks, &rhs)?;
    let mut report = CriterionReport {
        n,
        rank_difference_matrix: solved.rank,
        rank_augmented: solved.rank_augmented,
        exists: solved.consistent,
        coefficients: None,
        a0: None,
        solution_space_dim: 0,
    };
    if let Some(coefficients) = solved.particular_blocks(k) {
        fill_solution(&mut report, coefficients, x1, x2)?;
        report.solution_space_dim = solved.nullspace_dim;
    }
    Ok(report)
}

/// `a_0 = -x1^n - sum a_i x1^i`, checked against the same expression in `x2`.
///
/// `coefficients` holds `a_1, ..., a_{n-1}`.
pub fn compute_a0(
    coefficients: &[RingElement],
    x1: &RingElement,
    x2: &RingElement,
    n: usize,
) -> Result<RingElement> {
    if n < 1 || coefficients.len() != n - 1 {
        return Err(Error::ShapeMismatch(format!(
            "expected {} coefficients for degree {n}, got {}",
            n.saturating_sub(1),
            coefficients.len()
        )));
    }
    x1.check_same_ring(x2)?;
    for c in coefficients {
        x1.check_same_ring(c)?;
    }
    let constant_term = |x: &RingElement| {
        let mut power = x.clone();
        let mut acc = x.descriptor().zero();
        for a in coefficients {
            acc = &acc - &(a * &power);
            power = &power * x;
        }
        &acc - &power
    };
    let from_x1 = constant_term(x1);
    if from_x1 != constant_term(x2) {
        return Err(Error::InconsistentConstantTerm);
    }
    Ok(from_x1)
}

/// Direct construction when some power difference `x1^j - x2^j`
/// (`1 <= j < n`) is a unit: the smallest such `j` is solved for
/// explicitly,
///
/// ```text
/// a_j = (x2^n - x1^n - sum_{i != j} a_i (x1^i - x2^i)) (x1^j - x2^j)^-1
/// ```
///
/// and every other `a_i` is taken from `free_coefficients` (indexed
/// `a_1..a_{n-1}`; the entry at `j` is ignored) or zero. Returns `None` when
/// no power difference is invertible.
pub fn construct_from_unit_difference(
    x1: &RingElement,
    x2: &RingElement,
    n: usize,
    free_coefficients: Option<&[RingElement]>,
) -> Result<Option<Polynomial>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    x1.check_same_ring(x2)?;
    if x1 == x2 {
        return Err(Error::EqualRoots);
    }
    let ring = x1.descriptor();
    let mut coeffs: Vec<RingElement> = match free_coefficients {
        None => vec![ring.zero(); n - 1],
        Some(given) if given.len() == n - 1 => {
            for c in given {
                x1.check_same_ring(c)?;
            }
            given.to_vec()
        }
        Some(given) => {
            return Err(Error::ShapeMismatch(format!(
                "expected {} free coefficients, got {}",
                n - 1,
                given.len()
            )))
        }
    };

    // differences[i - 1] = x1^i - x2^i for i = 1..n
    let mut differences = Vec::with_capacity(n);
    let (mut p1, mut p2) = (x1.clone(), x2.clone());
    for _ in 1..=n {
        differences.push(&p1 - &p2);
        p1 = &p1 * x1;
        p2 = &p2 * x2;
    }
    let Some((j, inverse)) = differences[..n - 1]
        .iter()
        .enumerate()
        .find_map(|(idx, d)| d.invert().map(|inv| (idx + 1, inv)))
    else {
        return Ok(None);
    };

    let mut target = -&differences[n - 1];
    for i in (1..n).filter(|&i| i != j) {
        target = &target - &(&coeffs[i - 1] * &differences[i - 1]);
    }
    coeffs[j - 1] = &target * &inverse;

    let a0 = compute_a0(&coeffs, x1, x2, n)?;
    let mut all = Vec::with_capacity(n + 1);
    all.push(a0);
    all.extend(coeffs);
    all.push(ring.one());
    let p = Polynomial::new(ring, all)?;
    for x in [x1, x2] {
        if !p.evaluate_right(x)?.is_zero() {
            return Err(Error::Invariant(format!("constructed polynomial does not vanish at {x}")));
        }
    }
    Ok(Some(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldDescriptor, Quaternion};

    const Q: FieldDescriptor = FieldDescriptor::Rational;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows)
    }

    fn no_quadratic_pair() -> (Matrix, Matrix) {
        (m(&[&[0, 0], &[1, -1]]), m(&[&[0, 0], &[0, 1]]))
    }

    #[test]
    fn nilpotent_pair_admits_x_squared() {
        let r = quadratic_existence(&m(&[&[0, 1], &[0, 0]]), &m(&[&[0, 2], &[0, 0]])).unwrap();
        assert!(r.exists);
        assert_eq!((r.rank_difference_matrix, r.rank_augmented), (1, 1));
        assert!(r.coefficients.as_ref().unwrap()[0].is_zero());
        assert!(r.a0.as_ref().unwrap().is_zero());
        assert_eq!(r.solution_space_dim, 2);
    }

    #[test]
    fn identity_and_swap() {
        let x1 = Matrix::identity(2, Q);
        let x2 = m(&[&[0, 1], &[1, 0]]);
        let r = quadratic_existence(&x1, &x2).unwrap();
        assert!(r.exists);
        assert_eq!(r.rank_difference_matrix, 1);
        let r = quadratic_with_a1(&x1, &x2, &Matrix::zero(2, 2, Q)).unwrap();
        assert_eq!(r.a0.unwrap(), -&Matrix::identity(2, Q));
        assert_eq!(
            quadratic_with_a1(&x1, &x2, &Matrix::identity(2, Q)),
            Err(Error::InvalidOverride)
        );
    }

    #[test]
    fn quadratic_fails_cubic_succeeds() {
        let (x1, x2) = no_quadratic_pair();
        let r = quadratic_existence(&x1, &x2).unwrap();
        assert!(!r.exists);
        assert_eq!((r.rank_difference_matrix, r.rank_augmented), (1, 2));
        assert!(r.polynomial().is_none());

        let r = degree_n_existence(&x1, &x2, 3).unwrap();
        assert!(r.exists);
        let c = r.coefficients.as_ref().unwrap();
        assert_eq!(c[0], m(&[&[0, 0], &[0, -1]]));
        assert!(c[1].is_zero());
        assert!(r.a0.as_ref().unwrap().is_zero());

        let unit = construct_from_unit_difference(
            &RingElement::Matrix(x1),
            &RingElement::Matrix(x2),
            3,
            None,
        )
        .unwrap();
        assert!(unit.is_none());
    }

    #[test]
    fn three_by_three_pair_has_no_cubic() {
        let x1 = m(&[&[1, -1, 0], &[-1, 1, 0], &[1, 0, 0]]);
        let x2 = m(&[&[1, 1, 2], &[-1, 1, 0], &[1, 0, 0]]);
        assert!(!degree_n_existence(&x1, &x2, 3).unwrap().exists);
    }

    #[test]
    fn degree_two_paths_agree() {
        let (x1, x2) = no_quadratic_pair();
        assert_eq!(quadratic_existence(&x1, &x2).unwrap(), degree_n_existence(&x1, &x2, 2).unwrap());
        let x2 = m(&[&[0, 1], &[1, 0]]);
        let x1 = Matrix::identity(2, Q);
        assert_eq!(quadratic_existence(&x1, &x2).unwrap(), degree_n_existence(&x1, &x2, 2).unwrap());
    }

    #[test]
    fn quaternion_unit_difference() {
        let i = RingElement::Quaternion(Quaternion::i());
        let j = RingElement::Quaternion(Quaternion::j());
        let p = construct_from_unit_difference(&i, &j, 3, None).unwrap().unwrap();
        let h = RingDescriptor::Quaternion;
        assert_eq!(p.coefficients(), &[h.zero(), h.one(), h.zero(), h.one()]);
    }

    #[test]
    fn unit_difference_matches_unique_quadratic() {
        let x1 = m(&[&[2, 1], &[0, 1]]);
        let x2 = m(&[&[0, 1], &[1, 0]]);
        assert!(linalg::inverse(&(&x1 - &x2)).is_some());
        let report = quadratic_existence(&x1, &x2).unwrap();
        assert_eq!(report.solution_space_dim, 0);
        let p = construct_from_unit_difference(
            &RingElement::Matrix(x1),
            &RingElement::Matrix(x2),
            2,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(p, report.polynomial().unwrap());
    }

    #[test]
    fn constant_terms() {
        let ring = RingDescriptor::matrix(2, Q);
        let e = |mm: Matrix| RingElement::Matrix(mm);
        let a0 = compute_a0(&[ring.zero()], &ring.one(), &e(m(&[&[0, 1], &[1, 0]])), 2).unwrap();
        assert_eq!(a0, ring.from_i64(-1));

        let (x1, x2) = no_quadratic_pair();
        let a1 = e(m(&[&[1, 0], &[-1, -1]]));
        let a0 = compute_a0(&[a1, ring.zero()], &e(x1.clone()), &e(x2.clone()), 3).unwrap();
        assert!(a0.is_zero());

        let a0 = compute_a0(&[ring.zero()], &e(m(&[&[0, 1], &[0, 0]])), &e(m(&[&[0, 2], &[0, 0]])), 2)
            .unwrap();
        assert!(a0.is_zero());

        assert_eq!(
            compute_a0(&[ring.zero()], &e(x1), &e(x2), 2),
            Err(Error::InconsistentConstantTerm)
        );
    }

    #[test]
    fn rejected_inputs() {
        let x = Matrix::identity(2, Q);
        assert_eq!(quadratic_existence(&x, &x), Err(Error::EqualRoots));
        assert_eq!(degree_n_existence(&x, &m(&[&[0, 1], &[1, 0]]), 1), Err(Error::DegreeTooSmall(1)));
        assert!(quadratic_existence(&x, &Matrix::identity(3, Q)).is_err());
    }
}
