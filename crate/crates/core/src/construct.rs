//! Building a monic polynomial with prescribed right roots.
//!
//! Starting from `R_1 = x - x_1`, each further root `x_{i+1}` is handled by
//! evaluating `h = R_i(x_{i+1})`:
//!
//! * `h` invertible: `R_{i+1} = (x - h x_{i+1} h^-1) R_i`;
//! * `h = 0`: `x_{i+1}` is already a root, so `R_i` is kept (or multiplied
//!   by `x` when an exact degree is requested);
//! * otherwise the step fails. This cannot happen over a division ring.

use serde::Serialize;

use crate::algebra::RingElement;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Conjugate,
    AlreadyRoot,
    PadWithX,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionStep {
    /// `i` such that this step processes root `x_{i+1}` against `R_i` (1-based).
    pub index: usize,
    /// `R_i(x_{i+1})`.
    pub evaluation_value: RingElement,
    pub branch: Branch,
    /// `h x_{i+1} h^-1`, present for the conjugate branch only.
    pub conjugated_root: Option<RingElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub steps: Vec<ConstructionStep>,
    pub result: Option<Polynomial>,
}

impl ConstructionTrace {
    /// The failing step, if the construction was obstructed.
    pub fn obstruction(&self) -> Option<&ConstructionStep> {
        self.steps.iter().find(|s| s.branch == Branch::Failed)
    }
}

/// `h d h^-1`.
pub fn conjugate_shift(d: &RingElement, h: &RingElement) -> Result<RingElement> {
    d.check_same_ring(h)?;
    let h_inv = h.invert().ok_or(Error::NotInvertible)?;
    Ok(&(h * d) * &h_inv)
}

pub fn construct_with_roots(roots: &[RingElement], exact_degree: bool) -> Result<ConstructionTrace> {
    let first = roots.first().ok_or(Error::EmptyRoots)?;
    for r in &roots[1..] {
        first.check_same_ring(r)?;
    }
    let ring = first.descriptor();

    let mut current = Polynomial::linear(first);
    let mut steps = Vec::with_capacity(roots.len().saturating_sub(1));
    for (i, root) in roots.iter().enumerate().skip(1) {
        let h = current.evaluate_right(root)?;
        let (branch, conjugated_root) = if let Some(h_inv) = h.invert() {
            let y = &(&h * root) * &h_inv;
            current = Polynomial::linear(&y).mul(&current)?;
            (Branch::Conjugate, Some(y))
        } else if h.is_zero() {
            if exact_degree {
                current = current.shift();
                (Branch::PadWithX, None)
            } else {
                (Branch::AlreadyRoot, None)
            }
        } else {
            (Branch::Failed, None)
        };
        steps.push(ConstructionStep { index: i, evaluation_value: h, branch, conjugated_root });
        if branch == Branch::Failed {
            return Ok(ConstructionTrace { steps, result: None });
        }
        // Every root seen so far must vanish on the partial product.
        if let Some(bad) = first_nonzero_residual(&current, &roots[..=i])? {
            return Err(Error::Invariant(format!(
                "root {bad} is not a root of the partial product after step {i}"
            )));
        }
    }

    debug_assert_eq!(current.ring(), ring);
    if !current.is_monic() {
        return Err(Error::Invariant("constructed polynomial is not monic".into()));
    }
    if exact_degree && current.degree() != Some(roots.len()) {
        return Err(Error::Invariant("exact degree requested but not reached".into()));
    }
    Ok(ConstructionTrace { steps, result: Some(current) })
}

fn first_nonzero_residual(p: &Polynomial, roots: &[RingElement]) -> Result<Option<usize>> {
    for (idx, r) in roots.iter().enumerate() {
        if !p.evaluate_right(r)?.is_zero() {
            return Ok(Some(idx + 1));
        }
    }
    Ok(None)
}

/// `p(x_i)` for every root.
pub fn verify_roots(p: &Polynomial, roots: &[RingElement]) -> Result<Vec<RingElement>> {
    roots.iter().map(|r| p.evaluate_right(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldDescriptor, Matrix, Quaternion, RingDescriptor};

    fn q(a: i64, b: i64, c: i64, d: i64) -> RingElement {
        RingElement::Quaternion(Quaternion::from_ints(a, b, c, d))
    }

    #[test]
    fn conjugation_of_j_by_j_minus_i() {
        let (i, j) = (q(0, 1, 0, 0), q(0, 0, 1, 0));
        let h = &j - &i;
        assert_eq!(conjugate_shift(&j, &h).unwrap(), -&i);
        assert_eq!(conjugate_shift(&j, &q(1, 0, 0, 0)).unwrap(), j);
        assert_eq!(conjugate_shift(&j, &q(0, 0, 0, 0)), Err(Error::NotInvertible));
    }

    #[test]
    fn conjugation_is_trivial_in_a_field() {
        let f = FieldDescriptor::Rational;
        let d = RingElement::Scalar(f.from_i64(7));
        let h = RingElement::Scalar(f.from_i64(-3));
        assert_eq!(conjugate_shift(&d, &h).unwrap(), d);
    }

    #[test]
    fn i_and_j_give_x_squared_plus_one() {
        let trace = construct_with_roots(&[q(0, 1, 0, 0), q(0, 0, 1, 0)], false).unwrap();
        let p = trace.result.unwrap();
        assert_eq!(p.coefficients(), &[q(1, 0, 0, 0), q(0, 0, 0, 0), q(1, 0, 0, 0)]);
        assert_eq!(trace.steps[0].branch, Branch::Conjugate);
        assert_eq!(trace.steps[0].conjugated_root, Some(q(0, -1, 0, 0)));
    }

    #[test]
    fn duplicate_roots() {
        let x1 = q(1, 2, 0, -1);
        let t = construct_with_roots(&[x1.clone(), x1.clone()], false).unwrap();
        assert_eq!(t.steps[0].branch, Branch::AlreadyRoot);
        assert_eq!(t.result.unwrap(), Polynomial::linear(&x1));

        let t = construct_with_roots(&[x1.clone(), x1.clone()], true).unwrap();
        assert_eq!(t.steps[0].branch, Branch::PadWithX);
        let p = t.result.unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p, Polynomial::linear(&x1).shift());
    }

    #[test]
    fn commutative_case_is_the_classical_product() {
        let f = FieldDescriptor::Rational;
        let s = |v| RingElement::Scalar(f.from_i64(v));
        let p = construct_with_roots(&[s(2), s(5)], false).unwrap().result.unwrap();
        assert_eq!(p.coefficients(), &[s(10), s(-7), s(1)]);
    }

    #[test]
    fn single_root() {
        let x1 = q(0, 1, 1, 0);
        let p = construct_with_roots(std::slice::from_ref(&x1), true).unwrap().result.unwrap();
        assert_eq!(p, Polynomial::linear(&x1));
    }

    #[test]
    fn singular_nonzero_evaluation_fails() {
        let f = FieldDescriptor::Rational;
        let x1 = RingElement::Matrix(Matrix::from_ints(f, &[[0, 0], [0, 0]]));
        let x2 = RingElement::Matrix(Matrix::from_ints(f, &[[1, 0], [0, 0]]));
        let t = construct_with_roots(&[x1, x2], false).unwrap();
        assert!(t.result.is_none());
        let step = t.obstruction().unwrap();
        assert_eq!(step.index, 1);
        assert!(!step.evaluation_value.is_zero());
    }

    #[test]
    fn verify_cubic_with_two_matrix_roots() {
        let f = FieldDescriptor::Rational;
        let ring = RingDescriptor::matrix(2, f);
        let m = |rows: &[[i64; 2]]| RingElement::Matrix(Matrix::from_ints(f, rows));
        let p = Polynomial::new(
            ring,
            vec![ring.zero(), m(&[[1, 0], [-1, -1]]), ring.zero(), ring.one()],
        )
        .unwrap();
        let residuals = verify_roots(&p, &[m(&[[0, 0], [1, -1]]), m(&[[0, 0], [0, 1]])]).unwrap();
        assert!(residuals.iter().all(RingElement::is_zero));

        let x1 = q(0, 1, 0, 0);
        let x2 = q(0, 0, 1, 0);
        let r = verify_roots(&Polynomial::linear(&x1), std::slice::from_ref(&x2)).unwrap();
        assert_eq!(r, vec![&x2 - &x1]);
    }

    #[test]
    fn errors() {
        assert_eq!(construct_with_roots(&[], false), Err(Error::EmptyRoots));
        let m = RingDescriptor::matrix(2, FieldDescriptor::Rational).one();
        assert!(matches!(
            construct_with_roots(&[q(0, 1, 0, 0), m], false),
            Err(Error::DescriptorMismatch { .. })
        ));
    }
}
