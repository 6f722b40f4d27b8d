//! Single-alphabet change-of-basis matrices between power sums and the
//! p, e, h, s, m bases, cached per (basis, degree).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::algebra::{rat, Rat};
use crate::partition::{partitions, Partition};

use super::Basis;

/// Dense transition data for one degree.  `to_p[r][c]` is the coefficient
/// of p_{parts[c]} in b_{parts[r]}; `from_p` is its inverse.
#[derive(Debug)]
pub struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub to_p: Vec<Vec<Rat>>,
    pub from_p: Vec<Vec<Rat>>,
}

impl Transition {
    /// Nonzero entries of row `lambda` of `to_p`.
    pub fn expand_to_p(&self, lambda: &Partition) -> Vec<(&Partition, &Rat)> {
        let r = self.index[lambda];
        row_terms(&self.parts, &self.to_p[r])
    }

    /// Nonzero entries of row `mu` of `from_p`: p_μ = Σ c_λ b_λ.
    pub fn expand_from_p(&self, mu: &Partition) -> Vec<(&Partition, &Rat)> {
        let r = self.index[mu];
        row_terms(&self.parts, &self.from_p[r])
    }
}

fn row_terms<'a>(parts: &'a [Partition], row: &'a [Rat]) -> Vec<(&'a Partition, &'a Rat)> {
    parts.iter().zip(row).filter(|(_, c)| !c.is_zero()).collect()
}

static CACHE: Lazy<RwLock<HashMap<(Basis, usize), Arc<Transition>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// The (cached) transition matrices for `basis` in degree n.
pub fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    if let Some(t) = CACHE.read().expect("transition cache poisoned").get(&(basis, n)) {
        return t.clone();
    }
    let t = Arc::new(build(basis, n));
    // a racing writer computed the same matrices; keep whichever landed first
    CACHE.write().expect("transition cache poisoned").entry((basis, n)).or_insert(t).clone()
}

fn build(basis: Basis, n: usize) -> Transition {
    let parts = partitions(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let to_p: Vec<Vec<Rat>> = match basis {
        Basis::P => identity(parts.len()),
        Basis::S => parts.iter().map(|l| parts.iter().map(|m| rat(mn_character(l, m)) / z(m)).collect()).collect(),
        Basis::H => parts.iter().map(|l| product_of_singles(l.parts(), &parts, &index, false)).collect(),
        Basis::E => parts
            .iter()
            .map(|l| product_of_singles(l.transpose().parts(), &parts, &index, true))
            .collect(),
        Basis::M => {
            // p_μ = Σ_λ L[μ][λ] m_λ, so m = L⁻¹ p
            let l: Vec<Vec<Rat>> = parts.iter().map(|mu| parts.iter().map(|la| rat(monomial_count(mu, la))).collect()).collect();
            invert(&l)
        }
    };
    let from_p = invert(&to_p);
    Transition { parts, index, to_p, from_p }
}

fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect()
}

/// z_μ = ∏ k^{m_k} m_k!
pub fn z(mu: &Partition) -> Rat {
    Rat::from_integer(z_int(mu))
}

pub fn z_int(mu: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let mut run = 0u32;
    let mut prev = 0u32;
    for &k in mu.parts() {
        if k == prev {
            run += 1;
        } else {
            run = 1;
            prev = k;
        }
        out *= BigInt::from(k) * BigInt::from(run);
    }
    out
}

/// Product over the given degrees of h_k (or e_k), expanded in p.
fn product_of_singles(
    degrees: &[u32],
    parts: &[Partition],
    index: &HashMap<Partition, usize>,
    elementary: bool,
) -> Vec<Rat> {
    let mut acc: HashMap<Vec<u32>, Rat> = HashMap::from([(Vec::new(), Rat::one())]);
    for &k in degrees {
        let mut next: HashMap<Vec<u32>, Rat> = HashMap::new();
        for mu in partitions(k as usize) {
            let mut c = Rat::one() / z(&mu);
            if elementary && (k as usize - mu.len()) % 2 == 1 {
                c = -c;
            }
            for (key, v) in &acc {
                let mut merged = key.clone();
                merged.extend_from_slice(mu.parts());
                merged.sort_unstable_by(|a, b| b.cmp(a));
                *next.entry(merged).or_insert_with(Rat::zero) += v * &c;
            }
        }
        acc = next;
    }
    let mut row = vec![Rat::zero(); parts.len()];
    for (key, v) in acc {
        row[index[&Partition::new(key).expect("sorted")]] += v;
    }
    row
}

/// χ^λ(μ) by the Murnaghan–Nakayama rule on β-numbers.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let len = lambda.len();
    let beta: Vec<i64> = (1..=len).map(|i| lambda.row(i) as i64 + (len - i) as i64).collect();
    mn_beta(&beta, mu.parts())
}

fn mn_beta(beta: &[i64], mu: &[u32]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let r = r as i64;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Coefficient of x^λ in p_μ: assignments of the parts of μ to the rows of
/// λ filling each row exactly.
fn monomial_count(mu: &Partition, lambda: &Partition) -> i64 {
    fn go(parts: &[u32], room: &mut [u32]) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return if room.iter().all(|&r| r == 0) { 1 } else { 0 };
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= k {
                room[j] -= k;
                total += go(rest, room);
                room[j] += k;
            }
        }
        total
    }
    let mut room = lambda.parts().to_vec();
    go(mu.parts(), &mut room)
}

/// Gauss–Jordan inverse of a nonsingular rational matrix.
pub fn invert(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is singular");
        m.swap(col, piv);
        let inv = Rat::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}
