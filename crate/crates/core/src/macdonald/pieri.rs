use std::collections::BTreeMap;

use crate::algebra::{param, solve, RatFunc, Var};
use crate::partition::{core_quotient, Partition};
use crate::symfun::{Basis, PlethysticTransform, SymFunc};

use super::{family_cached, MacdonaldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    /// e_n[X^{(p)}]
    E,
    /// h_n[(1 − tσ⁻¹)/(1 − qσ⁻¹) X^{(p)}]
    DualH,
}

/// The multiplier of the wreath Pieri rule.
pub fn pieri_multiplier(ell: usize, color: usize, n: usize, kind: DualKind) -> SymFunc {
    match kind {
        DualKind::E => SymFunc::elementary(ell, color, n),
        DualKind::DualH => {
            let t = &PlethysticTransform::one_minus(ell, param(Var::T), -1)
                * &PlethysticTransform::one_minus_inv(ell, param(Var::Q), -1);
            SymFunc::complete(ell, color, n).plethysm(&t)
        }
    }
}

/// Expands the multiplier times P_μ in {P_λ} by an exact solve; returns
/// the nonzero coefficients.
pub fn wreath_pieri_oracle(
    mu: &Partition,
    color: usize,
    n: usize,
    ell: usize,
    kind: DualKind,
) -> Result<BTreeMap<Partition, RatFunc>, MacdonaldError> {
    if color >= ell {
        return Err(MacdonaldError::Domain(format!("color {color} is not below ℓ = {ell}")));
    }
    let cq = core_quotient(mu, ell);
    let m = cq.quotient_size();
    let source = family_cached(&cq.core, m, ell)?;
    let target = family_cached(&cq.core, m + n, ell)?;
    let p_mu = &source.variants_of(mu)?.p;
    let product = &pieri_multiplier(ell, color, n, kind) * p_mu;
    let rhs_map = product.coefficients(Basis::S);
    let columns: Vec<_> = target
        .members
        .iter()
        .map(|l| target.variants_of(l).map(|v| v.p.coefficients(Basis::S)))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<RatFunc>> = target
        .quotients
        .iter()
        .map(|key| columns.iter().map(|c| c.get(key).cloned().unwrap_or_else(RatFunc::zero)).collect())
        .collect();
    let rhs: Vec<RatFunc> = target.quotients.iter().map(|k| rhs_map.get(k).cloned().unwrap_or_else(RatFunc::zero)).collect();
    let x = solve(&rows, &rhs)?;
    Ok(target.members.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}
