//! Closed formulas: the hook-product norm and the rank-one Pieri rules.

use std::collections::BTreeMap;

use crate::algebra::{mono, Monomial, RatFunc, Var};
use crate::partition::{Node, Partition};

/// (x; q)_k = ∏_{i<k} (1 − qⁱx)
pub fn q_pochhammer(x: &RatFunc, k: u32) -> RatFunc {
    let mut acc = RatFunc::one();
    let mut qi = RatFunc::one();
    for _ in 0..k {
        acc = &acc * &(&RatFunc::one() - &(&qi * x));
        qi = qi.mul_monomial(&Monomial::var(Var::Q));
    }
    acc
}

fn qt(a: i64, b: i64) -> RatFunc {
    mono(&[(Var::Q, a as i32), (Var::T, b as i32)])
}

fn one_minus(a: i64, b: i64) -> RatFunc {
    &RatFunc::one() - &qt(a, b)
}

/// ∏ over nodes with ℓ | h(□) of (1 − q^{a+1}t^{l})/(1 − q^{a}t^{l+1}).
pub fn conjectured_norm(lambda: &Partition, ell: usize) -> RatFunc {
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    for n in lambda.nodes() {
        let a = lambda.arm(n).expect("node of λ");
        let l = lambda.leg(n).expect("node of λ");
        if (a + l + 1) % ell as i64 != 0 {
            continue;
        }
        num = &num * &one_minus(a + 1, l);
        den = &den * &one_minus(a, l + 1);
    }
    &num / &den
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// e_n P_μ in the P basis
    E,
    /// g_n Q_μ in the Q basis
    G,
}

/// Upper limit of j in the first product of the g_n rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpRange {
    /// j ≤ ℓ(λ)
    Literal,
    /// j ≤ ℓ(μ) + 1, parts beyond the length read as zero
    Extended,
}

/// Classical Pieri coefficients, keyed by λ.
pub fn classical_pieri(mu: &Partition, n: usize, kind: PieriKind) -> BTreeMap<Partition, RatFunc> {
    match kind {
        PieriKind::E => vertical_strips(mu, n).into_iter().map(|l| { let c = e_coefficient(&l, mu); (l, c) }).collect(),
        PieriKind::G => g_pieri(mu, n, GpRange::Extended),
    }
}

pub fn g_pieri(mu: &Partition, n: usize, range: GpRange) -> BTreeMap<Partition, RatFunc> {
    horizontal_strips(mu, n).into_iter().map(|l| { let c = g_coefficient(&l, mu, range); (l, c) }).collect()
}

fn part(p: &Partition, i: usize) -> i64 {
    p.row(i) as i64
}

fn e_coefficient(lambda: &Partition, mu: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for j in 1..=lambda.len() {
        if part(lambda, j) != part(mu, j) + 1 {
            continue;
        }
        for i in 1..j {
            if part(lambda, i) != part(mu, i) {
                continue;
            }
            let d = (j - i) as i64;
            let dm = part(mu, i) - part(mu, j);
            let dl = part(lambda, i) - part(lambda, j);
            let num = &one_minus(dm, d - 1) * &one_minus(dl, d + 1);
            let den = &one_minus(dm, d) * &one_minus(dl, d);
            acc = &acc * &(&num / &den);
        }
    }
    acc
}

fn g_coefficient(lambda: &Partition, mu: &Partition, range: GpRange) -> RatFunc {
    let top = match range {
        GpRange::Literal => lambda.len(),
        GpRange::Extended => mu.len() + 1,
    };
    let mut acc = RatFunc::one();
    for i in 1..=top {
        let k = (part(lambda, i) - part(mu, i)) as u32;
        if k == 0 {
            continue;
        }
        for j in i + 1..=top {
            let d = (j - i) as i64;
            let num = q_pochhammer(&qt(part(mu, i) - part(lambda, j) + 1, d - 1), k);
            let den = q_pochhammer(&qt(part(mu, i) - part(lambda, j), d), k);
            acc = &acc * &(&num / &den);
        }
    }
    for i in 1..=mu.len() {
        let k = (part(lambda, i) - part(mu, i)) as u32;
        if k == 0 {
            continue;
        }
        for j in i..=mu.len() {
            let d = (j - i) as i64;
            let dm = part(mu, i) - part(mu, j);
            let num = q_pochhammer(&qt(dm, d + 1), k);
            let den = q_pochhammer(&qt(dm + 1, d), k);
            acc = &acc * &(&num / &den);
        }
    }
    acc
}

/// λ ⊇ μ with |λ∖μ| = n and no two added nodes in one row.
pub fn vertical_strips(mu: &Partition, n: usize) -> Vec<Partition> {
    let rows = mu.len() + n;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(rows);
    fn go(mu: &Partition, rows: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len() + 1;
        if i > rows {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        for add in [0u32, 1] {
            if add as usize > left {
                continue;
            }
            let v = mu.row(i) + add;
            if i > 1 && v > cur[i - 2] {
                continue;
            }
            cur.push(v);
            go(mu, rows, left - add as usize, cur, out);
            cur.pop();
        }
    }
    go(mu, rows, n, &mut cur, &mut out);
    out.sort();
    out
}

/// λ ⊇ μ with |λ∖μ| = n and no two added nodes in one column.
pub fn horizontal_strips(mu: &Partition, n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = vertical_strips(&mu.transpose(), n).into_iter().map(|l| l.transpose()).collect();
    out.sort();
    out
}

/// Whether λ∖μ has two nodes side by side in a row.
pub fn has_horizontal_adjacency(lambda: &Partition, mu: &Partition) -> bool {
    let skew = lambda.skew_nodes(mu);
    skew.iter().any(|n| skew.contains(&Node::new(n.a + 1, n.b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param;

    fn p<const N: usize>(x: [u32; N]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn e1_on_p1() {
        let c = classical_pieri(&p([1]), 1, PieriKind::E);
        let want = &(&one_minus(1, 0) * &one_minus(0, 2)) / &(&one_minus(1, 1) * &one_minus(0, 1));
        assert_eq!(c[&p([1, 1])], want);
        assert!(c[&p([2])].is_one());
    }

    #[test]
    fn empty_products() {
        let c = classical_pieri(&Partition::empty(), 3, PieriKind::E);
        assert_eq!(c.len(), 1);
        assert!(c[&p([1, 1, 1])].is_one());
        let g = classical_pieri(&Partition::empty(), 1, PieriKind::G);
        assert!(g[&p([1])].is_one());
    }

    #[test]
    fn strips() {
        assert_eq!(vertical_strips(&p([2, 1]), 2), vec![p([2, 1, 1, 1]), p([2, 2, 1]), p([3, 1, 1]), p([3, 2])]);
        assert_eq!(horizontal_strips(&p([2, 1]), 2), vec![p([2, 2, 1]), p([3, 1, 1]), p([3, 2]), p([4, 1])]);
        assert!(has_horizontal_adjacency(&p([4, 1]), &p([2, 1])));
        assert!(!has_horizontal_adjacency(&p([3, 2]), &p([2, 1])));
    }

    #[test]
    fn norm_examples() {
        let one = RatFunc::one();
        let want = &(&one - &param(Var::Q)) / &(&one - &param(Var::T));
        assert_eq!(conjectured_norm(&p([1]), 1), want);
        // hooks 6 and 3 of (4,3,1)
        let want = &(&one_minus(4, 2) * &one_minus(2, 1)) / &(&one_minus(3, 3) * &one_minus(1, 2));
        assert_eq!(conjectured_norm(&p([4, 3, 1]), 3), want);
        assert!(conjectured_norm(&p([2]), 3).is_one());
        assert!(conjectured_norm(&p([3, 1, 1]), 3).is_one() == p([3, 1, 1]).is_core(3));
    }

    #[test]
    fn pochhammer() {
        let x = param(Var::T);
        let want = &(&RatFunc::one() - &x) * &(&RatFunc::one() - &qt(1, 1));
        assert_eq!(q_pochhammer(&x, 2), want);
        assert!(q_pochhammer(&x, 0).is_one());
    }
}
