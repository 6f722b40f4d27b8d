use std::cmp::Ordering;

use serde_json::{json, Value};

use super::maya::MayaDiagram;
use super::{Partition, PartitionError};

/// The ℓ-core/ℓ-quotient decomposition of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreQuotient {
    pub ell: usize,
    pub charges: Vec<i64>,
    pub quotient: Vec<Partition>,
    pub core: Partition,
}

impl CoreQuotient {
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(|p| p.size()).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ell": self.ell,
            "core": self.core.to_json(),
            "charges": self.charges,
            "quotient": self.quotient.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        })
    }
}

pub fn core_quotient(lambda: &Partition, ell: usize) -> CoreQuotient {
    assert!(ell >= 1, "ℓ must be at least 1");
    let m = MayaDiagram::from_partition(lambda);
    let mut charges = Vec::with_capacity(ell);
    let mut quotient = Vec::with_capacity(ell);
    let mut flat = Vec::with_capacity(ell);
    for i in 0..ell {
        let mi = m.residue(i, ell);
        let c = mi.charge();
        quotient.push(mi.shifted(c).to_partition().expect("recentred residue has charge zero"));
        flat.push(MayaDiagram::vacuum().shifted(-c));
        charges.push(c);
    }
    let core = MayaDiagram::interleave(&flat).to_partition().expect("core diagram has charge zero");
    CoreQuotient { ell, charges, quotient, core }
}

/// Rebuilds λ from its charge vector and quotient.
pub fn from_charges_quotient(charges: &[i64], quotient: &[Partition]) -> Result<Partition, PartitionError> {
    if charges.is_empty() || charges.len() != quotient.len() {
        return Err(PartitionError::BadRank);
    }
    if charges.iter().sum::<i64>() != 0 {
        return Err(PartitionError::BadCharges(charges.to_vec()));
    }
    let parts: Vec<MayaDiagram> = charges
        .iter()
        .zip(quotient)
        .map(|(&c, q)| MayaDiagram::from_partition(q).shifted(-c))
        .collect();
    MayaDiagram::interleave(&parts).to_partition()
}

/// Rebuilds λ from its ℓ-core and ℓ-quotient.
pub fn from_core_quotient(core: &Partition, quotient: &[Partition]) -> Result<Partition, PartitionError> {
    let ell = quotient.len();
    if ell == 0 {
        return Err(PartitionError::BadRank);
    }
    let cq = core_quotient(core, ell);
    if cq.quotient.iter().any(|p| !p.is_empty()) {
        return Err(PartitionError::NotACore(core.to_string(), ell));
    }
    from_charges_quotient(&cq.charges, quotient)
}

/// ᵗα = (−a_{ℓ−1}, …, −a₀).
pub fn transpose_charge(alpha: &[i64]) -> Vec<i64> {
    alpha.iter().rev().map(|a| -a).collect()
}

/// A column or row of one quotient component, with the bead of m(λ) that
/// the ordering rule assigns to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientLine {
    pub component: usize,
    /// Column or row index within the component, from 1.
    pub index: usize,
    pub length: usize,
    pub bead: i64,
}

/// Columns of quot(λ) in left-to-right order and rows in right-to-left
/// order.
pub fn orders(lambda: &Partition, ell: usize) -> (Vec<QuotientLine>, Vec<QuotientLine>) {
    let cq = core_quotient(lambda, ell);
    let l = ell as i64;
    let mut cols = Vec::new();
    let mut rows = Vec::new();
    for (i, q) in cq.quotient.iter().enumerate() {
        let c = cq.charges[i];
        let conj = q.transpose();
        for j in 1..=conj.len() {
            let len = conj.row(j) as i64;
            cols.push(QuotientLine {
                component: i,
                index: j,
                length: len as usize,
                bead: i as i64 + l * (len - j as i64 - c),
            });
        }
        for r in 1..=q.len() {
            let len = q.row(r) as i64;
            rows.push(QuotientLine {
                component: i,
                index: r,
                length: len as usize,
                bead: i as i64 + l * (r as i64 - 1 - len - c),
            });
        }
    }
    cols.sort_by(|a, b| b.bead.cmp(&a.bead));
    rows.sort_by(|a, b| a.bead.cmp(&b.bead));
    (cols, rows)
}

/// Removes the final column of quot(λ): returns (λ′, p, n).
pub fn peel_last_column(lambda: &Partition, ell: usize) -> Result<(Partition, usize, usize), PartitionError> {
    let (cols, _) = orders(lambda, ell);
    let last = *cols.last().ok_or_else(|| PartitionError::EmptyQuotient(lambda.to_string(), ell))?;
    let cq = core_quotient(lambda, ell);
    let mut quotient = cq.quotient.clone();
    let mut conj = quotient[last.component].transpose().parts().to_vec();
    debug_assert_eq!(conj.len(), last.index);
    conj.pop();
    quotient[last.component] = Partition::new(conj)?.transpose();
    let smaller = from_charges_quotient(&cq.charges, &quotient)?;
    Ok((smaller, last.component, last.length))
}

/// Removes the final row of quot(λ): returns (λ″, p*, n*).
pub fn peel_last_row(lambda: &Partition, ell: usize) -> Result<(Partition, usize, usize), PartitionError> {
    let (_, rows) = orders(lambda, ell);
    let last = *rows.last().ok_or_else(|| PartitionError::EmptyQuotient(lambda.to_string(), ell))?;
    let cq = core_quotient(lambda, ell);
    let mut quotient = cq.quotient.clone();
    let mut parts = quotient[last.component].parts().to_vec();
    debug_assert_eq!(parts.len(), last.index);
    parts.pop();
    quotient[last.component] = Partition::new(parts)?;
    let smaller = from_charges_quotient(&cq.charges, &quotient)?;
    Ok((smaller, last.component, last.length))
}

/// Dominance order on partitions of the same size; `None` when incomparable.
pub fn dominance(a: &Partition, b: &Partition) -> Result<Option<Ordering>, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    let (mut ge, mut le) = (true, true);
    for k in 1..=n {
        sa += a.row(k) as u64;
        sb += b.row(k) as u64;
        ge &= sa >= sb;
        le &= sa <= sb;
    }
    Ok(match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub dominance: Option<Ordering>,
    pub same_core: bool,
}

impl Comparison {
    /// λ ≥_ℓ μ
    pub fn ge_ell(&self) -> bool {
        self.same_core && matches!(self.dominance, Some(Ordering::Greater | Ordering::Equal))
    }

    /// λ ≤_ℓ μ
    pub fn le_ell(&self) -> bool {
        self.same_core && matches!(self.dominance, Some(Ordering::Less | Ordering::Equal))
    }
}

pub fn compare(a: &Partition, b: &Partition, ell: usize) -> Result<Comparison, PartitionError> {
    let dominance = dominance(a, b)?;
    let same_core = core_quotient(a, ell).core == core_quotient(b, ell).core;
    Ok(Comparison { dominance, same_core })
}
