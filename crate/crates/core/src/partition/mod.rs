//! Partitions, Maya diagrams, ℓ-cores and ℓ-quotients.

mod corequot;
mod enumerate;
mod maya;

use std::cmp::Ordering;
use std::fmt;

use serde_json::Value;

use crate::algebra::{LaurentPoly, Monomial, Var};

pub use corequot::{
    compare, core_quotient, dominance, from_charges_quotient, from_core_quotient, orders, peel_last_column,
    peel_last_row, transpose_charge, Comparison, CoreQuotient, QuotientLine,
};
pub use enumerate::{family, multipartitions, partitions};
pub use maya::MayaDiagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("Maya diagram has charge {0}, expected 0")]
    Charge(i64),
    #[error("node ({a},{b}) is not in {lambda}")]
    NodeOutside { a: i64, b: i64, lambda: String },
    #[error("partitions of different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("{0} has an empty {1}-quotient")]
    EmptyQuotient(String, usize),
    #[error("ℓ must be at least 1")]
    BadRank,
    #[error("charges {0:?} do not sum to zero")]
    BadCharges(Vec<i64>),
    #[error("{0} is not a {1}-core")]
    NotACore(String, usize),
}

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// λ_b for b ≥ 1 (0 beyond the length).
    pub fn row(&self, b: usize) -> u32 {
        if b == 0 {
            return u32::MAX;
        }
        self.0.get(b - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn contains(&self, n: Node) -> bool {
        n.a >= 1 && n.b >= 1 && (n.b as usize) <= self.len() && n.a as u32 <= self.0[n.b as usize - 1]
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(self.0.iter()).all(|(a, b)| a <= b)
    }

    /// Nodes in row-major order (row 1 first, left to right).
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.0.iter().enumerate() {
            for a in 1..=r {
                out.push(Node::new(a as i64, i as i64 + 1));
            }
        }
        out
    }

    /// Nodes of self ∖ inner.
    pub fn skew_nodes(&self, inner: &Partition) -> Vec<Node> {
        self.nodes().into_iter().filter(|n| !inner.contains(*n)).collect()
    }

    pub fn add_node(&self, n: Node) -> Option<Partition> {
        let b = n.b as usize;
        if n.a != self.row(b) as i64 + 1 || self.row(b - 1) < n.a as u32 {
            return None;
        }
        let mut p = self.0.clone();
        if b > p.len() {
            p.push(1);
        } else {
            p[b - 1] += 1;
        }
        Some(Partition(p))
    }

    pub fn remove_node(&self, n: Node) -> Option<Partition> {
        let b = n.b as usize;
        if !self.contains(n) || n.a != self.row(b) as i64 || self.row(b + 1) as i64 >= n.a {
            return None;
        }
        let mut p = self.0.clone();
        p[b - 1] -= 1;
        if p[b - 1] == 0 {
            p.pop();
        }
        Some(Partition(p))
    }

    pub fn arm(&self, n: Node) -> Result<i64, PartitionError> {
        self.check(n)?;
        Ok(self.row(n.b as usize) as i64 - n.a)
    }

    pub fn leg(&self, n: Node) -> Result<i64, PartitionError> {
        self.check(n)?;
        Ok(self.transpose().row(n.a as usize) as i64 - n.b)
    }

    pub fn hook(&self, n: Node) -> Result<i64, PartitionError> {
        Ok(self.arm(n)? + self.leg(n)? + 1)
    }

    fn check(&self, n: Node) -> Result<(), PartitionError> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(PartitionError::NodeOutside { a: n.a, b: n.b, lambda: self.to_string() })
        }
    }

    pub fn node_stats(&self, n: Node, ell: usize) -> Result<NodeStats, PartitionError> {
        let arm = self.arm(n)?;
        let leg = self.leg(n)?;
        Ok(NodeStats {
            content: n.content(),
            color: n.color(ell),
            arm,
            leg,
            hook: arm + leg + 1,
            character: n.character(),
        })
    }

    /// Addable nodes, in increasing content order.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for b in (1..=self.len() + 1).rev() {
            let r = self.row(b);
            if b == 1 || self.row(b - 1) > r {
                out.push(Node::new(r as i64 + 1, b as i64));
            }
        }
        out.sort_by_key(|n| n.content());
        out
    }

    /// Removable nodes, in increasing content order.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for b in 1..=self.len() {
            if self.row(b) > self.row(b + 1) {
                out.push(Node::new(self.row(b) as i64, b as i64));
            }
        }
        out.sort_by_key(|n| n.content());
        out
    }

    /// (Aᵢ(λ), Rᵢ(λ)) for color i.
    pub fn addable_removable(&self, i: usize, ell: usize) -> (Vec<Node>, Vec<Node>) {
        let a = self.addable().into_iter().filter(|n| n.color(ell) == i).collect();
        let r = self.removable().into_iter().filter(|n| n.color(ell) == i).collect();
        (a, r)
    }

    /// dᵢ(λ), the number of nodes of color i.
    pub fn color_count(&self, i: usize, ell: usize) -> usize {
        self.nodes().iter().filter(|n| n.color(ell) == i).count()
    }

    pub fn is_core(&self, ell: usize) -> bool {
        core_quotient(self, ell).quotient.iter().all(|p| p.is_empty())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|&p| Value::from(p)).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, PartitionError> {
        let arr = v.as_array().ok_or_else(|| PartitionError::NotAPartition(vec![]))?;
        let parts: Vec<i64> = arr.iter().map(|x| x.as_i64().unwrap_or(-1)).collect();
        if parts.iter().any(|&p| p <= 0 || p > u32::MAX as i64) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Partition::new(parts.iter().map(|&p| p as u32).collect())
    }

    /// Parses "5,4,1" (empty string or "-" for ∅).
    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Vec<i64> = s
            .split(',')
            .map(|x| x.trim().parse::<i64>().unwrap_or(-1))
            .collect();
        if parts.iter().any(|&p| p <= 0 || p > u32::MAX as i64) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Partition::new(parts.iter().map(|&p| p as u32).collect())
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A node (a, b): column a, row b, both from 1, French convention.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Node {
    pub a: i64,
    pub b: i64,
}

impl Node {
    pub fn new(a: i64, b: i64) -> Self {
        Node { a, b }
    }

    pub fn content(&self) -> i64 {
        self.b - self.a
    }

    pub fn color(&self, ell: usize) -> usize {
        self.content().rem_euclid(ell as i64) as usize
    }

    /// χ = q^{a−1} t^{b−1}
    pub fn character(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.character_monomial())
    }

    pub fn character_monomial(&self) -> Monomial {
        Monomial::from_pairs(&[(Var::Q, (self.a - 1) as i32), (Var::T, (self.b - 1) as i32)])
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeStats {
    pub content: i64,
    pub color: usize,
    pub arm: i64,
    pub leg: i64,
    pub hook: i64,
    pub character: LaurentPoly,
}

/// Orders partitions by dominance when comparable.
pub fn dominance_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    dominance(a, b).ok().flatten()
}
