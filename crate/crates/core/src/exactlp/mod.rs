//! Exact LP feasibility in Farkas form.
//!
//! For `Q ∈ ℚ^{n×ℓ}` and `b ∈ ℚ^ℓ`, exactly one of
//!
//! * `x ≥ 0` with `Qᵀx ≥ b`, or
//! * `y ≥ 0` with `Qy ≤ 0` and `bᵀy > 0`
//!
//! exists. [`solve_feasibility`] returns whichever holds, with the vector as
//! certificate; [`verify_certificate`] re-checks such a certificate directly.

mod rational;
mod simplex;

pub use rational::{
    all_nonnegative, dot, format_rational, int, parse_rational, Rational, RationalMatrix,
};
pub use simplex::solve_feasibility;

use num_traits::Signed;

/// The alternative that holds for `(Q, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityResult {
    /// `x ≥ 0` (length `n`) with `Qᵀx ≥ b`.
    Feasible(Vec<Rational>),
    /// `y ≥ 0` (length `ℓ`) with `Qy ≤ 0` and `bᵀy > 0`.
    Infeasible(Vec<Rational>),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }
}

/// Re-checks a certificate with exact arithmetic, independently of how it was found.
pub fn verify_certificate(q: &RationalMatrix, b: &[Rational], result: &FeasibilityResult) -> bool {
    if b.len() != q.cols() {
        return false;
    }
    match result {
        FeasibilityResult::Feasible(x) => {
            x.len() == q.rows()
                && all_nonnegative(x)
                && q.tmul_vec(x).iter().zip(b).all(|(lhs, rhs)| lhs >= rhs)
        }
        FeasibilityResult::Infeasible(y) => {
            y.len() == q.cols()
                && all_nonnegative(y)
                && q.mul_vec(y).iter().all(|v| !v.is_positive())
                && dot(b, y).is_positive()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_examples() {
        let q = RationalMatrix::from_i64(&[&[1]]).unwrap();
        let b = vec![int(1)];
        assert!(verify_certificate(&q, &b, &FeasibilityResult::Feasible(vec![int(1)])));
        assert!(!verify_certificate(&q, &b, &FeasibilityResult::Feasible(vec![int(0)])));
        let q = RationalMatrix::from_i64(&[&[-1]]).unwrap();
        assert!(!verify_certificate(&q, &b, &FeasibilityResult::Infeasible(vec![int(0)])));
        assert!(verify_certificate(&q, &b, &FeasibilityResult::Infeasible(vec![int(1)])));
        // negative entries are never certificates
        assert!(!verify_certificate(&q, &b, &FeasibilityResult::Feasible(vec![int(-1)])));
    }

    #[test]
    fn zero_vector_is_not_feasible_for_positive_rhs() {
        let q = RationalMatrix::from_i64(&[&[0, 0]]).unwrap();
        let b = vec![int(1), int(0)];
        assert!(!verify_certificate(&q, &b, &FeasibilityResult::Feasible(vec![int(5)])));
    }
}
