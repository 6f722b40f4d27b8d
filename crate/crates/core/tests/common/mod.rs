//! Rank-one Macdonald polynomials by Gram–Schmidt, independent of the
//! nullspace construction.
#![allow(dead_code)]

use std::collections::BTreeMap;

use wreath_core::algebra::RatFunc;
use wreath_core::partition::{partitions, Partition};
use wreath_core::symfun::{Basis, SymFunc};

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// P_λ = m_λ + lower, orthogonalized in increasing lex order (a linear
/// extension of dominance).
pub fn gram_schmidt_p(n: usize) -> BTreeMap<Partition, SymFunc> {
    let mut parts = partitions(n);
    parts.sort();
    let mut done: Vec<(Partition, SymFunc, RatFunc)> = Vec::new();
    for lambda in parts {
        let m = SymFunc::single(1, Basis::M, 0, &lambda);
        let mut f = m.clone();
        for (_, pm, norm) in &done {
            let c = &m.pairing_qt(pm).unwrap() / norm;
            f = &f - &pm.scale(&c);
        }
        let norm = f.pairing_qt(&f).unwrap();
        done.push((lambda, f, norm));
    }
    done.into_iter().map(|(l, f, _)| (l, f)).collect()
}

/// Q_λ = P_λ / ⟨P_λ, P_λ⟩_{q,t}
pub fn gram_schmidt_q(n: usize) -> BTreeMap<Partition, SymFunc> {
    gram_schmidt_p(n)
        .into_iter()
        .map(|(l, f)| {
            let norm = f.pairing_qt(&f).unwrap();
            let q = f.scale(&norm.inv().unwrap());
            (l, q)
        })
        .collect()
}

/// Coefficients of f in the basis `b` with dual basis `dual` under the
/// q,t pairing.
pub fn expand(f: &SymFunc, dual: &BTreeMap<Partition, SymFunc>) -> BTreeMap<Partition, RatFunc> {
    dual.iter()
        .map(|(l, d)| (l.clone(), f.pairing_qt(d).unwrap()))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
