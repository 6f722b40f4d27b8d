//! Exact arithmetic: sparse Laurent polynomials and rational functions over ℚ.

mod factor;
mod gcd;
mod linalg;
mod monomial;
mod poly;
mod ratfunc;
mod subst;

pub use factor::{sum_factored, FactorList};
pub use gcd::gcd;
pub use linalg::{nullspace, row_reduce, solve, LinAlgError};
pub use monomial::{Monomial, Var, MAX_VARS, NUM_PARAMS};
pub use poly::{rat, rat_frac, LaurentPoly, Rat};
pub use ratfunc::RatFunc;
pub use subst::{limit_at_one, split_root_at_one, to_qt, Matching, QtForm, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero: ({numerator}) / ({denominator})")]
    DivisionByZero { numerator: String, denominator: String },
    #[error("irregular point: {expr} has a pole at {var} = 1")]
    IrregularPoint { expr: String, var: String },
    #[error("unexpected variables {vars:?} in {expr}")]
    ForeignVariables { expr: String, vars: Vec<String> },
    #[error("malformed rational function JSON: {0}")]
    Parse(String),
}

/// Shorthand for a single parameter as a rational function.
pub fn param(v: Var) -> RatFunc {
    RatFunc::var(v)
}

/// c·∏ vᵉ as a rational function.
pub fn mono(pairs: &[(Var, i32)]) -> RatFunc {
    RatFunc::monomial(Monomial::from_pairs(pairs))
}

/// The 𝔮-integer [n] = (𝔮ⁿ − 𝔮⁻ⁿ)/(𝔮 − 𝔮⁻¹).
pub fn qint(n: i32) -> RatFunc {
    let a = &mono(&[(Var::QQ, n)]) - &mono(&[(Var::QQ, -n)]);
    let b = &mono(&[(Var::QQ, 1)]) - &mono(&[(Var::QQ, -1)]);
    &a / &b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert!(qint(1).is_one());
        assert_eq!(qint(2), &mono(&[(Var::QQ, 1)]) + &mono(&[(Var::QQ, -1)]));
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), -qint(3));
    }
}
