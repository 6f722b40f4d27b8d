//! Symbolic color-symmetric functions: symmetrization, the shuffle product
//! and the pole and wheel conditions.

use combin::{permutations, subsets};
use rayon::prelude::*;

use crate::algebra::{rat, sum_factored, LaurentPoly, Monomial, RatFunc, Substitution, Var};

use super::kernel::{omega_factors, Layout, ShuffleKernel, Slot};
use super::ToroidalError;

/// Largest number of color-preserving permutations we expand symbolically.
pub const SYM_LIMIT: usize = 5040;

/// A color-symmetric rational function in the shuffle variables of
/// `Layout::new(&counts)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleElement {
    pub ell: usize,
    pub counts: Vec<usize>,
    pub f: RatFunc,
}

impl ShuffleElement {
    /// The unit of the shuffle product.
    pub fn one(ell: usize) -> Self {
        ShuffleElement { ell, counts: vec![0; ell], f: RatFunc::one() }
    }

    pub fn layout(&self) -> Layout {
        Layout::new(&self.counts)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        ShuffleElement { ell: self.ell, counts: self.counts.clone(), f: &self.f * c }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn sym_size(counts: &[usize]) -> usize {
    counts.iter().map(|&k| factorial(k)).product()
}

/// The substitution x_{i,r} ↦ x_{i,σᵢ(r)}.
fn permutation_substitution(layout: &Layout, perms: &[Vec<usize>]) -> Substitution {
    let mut s = Substitution::new();
    for (i, p) in perms.iter().enumerate() {
        for (r, &t) in p.iter().enumerate() {
            if r != t {
                s = s.map_monomial(layout.var(i, r), Monomial::var(layout.var(i, t)));
            }
        }
    }
    s
}

/// Every tuple of per-color permutations.
pub(crate) fn color_permutations(counts: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &k in counts {
        let perms = permutations(k);
        out = out.into_iter().flat_map(|pre| perms.iter().map(move |p| {
            let mut v = pre.clone();
            v.push(p.clone());
            v
        })).collect();
    }
    out
}

pub(crate) fn balanced_sum(mut terms: Vec<RatFunc>) -> RatFunc {
    if terms.is_empty() {
        return RatFunc::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

/// Sym(f) over color-preserving permutations of the layout's variables.
pub fn symmetrize_rat(f: &RatFunc, counts: &[usize]) -> Result<RatFunc, ToroidalError> {
    let size = sym_size(counts);
    if size > SYM_LIMIT {
        return Err(ToroidalError::TooLarge(format!("{size} permutations")));
    }
    let layout = Layout::new(counts);
    let terms: Vec<RatFunc> = color_permutations(counts)
        .iter()
        .map(|p| permutation_substitution(&layout, p).apply(f))
        .collect::<Result<_, _>>()?;
    Ok(balanced_sum(terms))
}

impl ShuffleKernel {
    /// Sym of the kernel as a symbolic element.
    pub fn symmetrize(&self) -> Result<ShuffleElement, ToroidalError> {
        let size = sym_size(&self.counts);
        if size > SYM_LIMIT {
            return Err(ToroidalError::TooLarge(format!("{size} permutations")));
        }
        let layout = Layout::new(&self.counts);
        let terms = color_permutations(&self.counts)
            .par_iter()
            .map(|p| self.instantiate(|i, r| LaurentPoly::var(layout.var(i, p[i][r]))))
            .collect::<Result<Vec<_>, _>>()?;
        let f = sum_factored(&terms);
        Ok(ShuffleElement { ell: self.ell, counts: self.counts.clone(), f })
    }
}

fn omega_value(i: usize, j: usize, z: Var, w: Var, ell: usize) -> RatFunc {
    let mut acc = RatFunc::one();
    for f in omega_factors(i, j, Slot::R(0), Slot::S(0), ell) {
        let p = f.eval(|s| match s {
            Slot::R(_) => LaurentPoly::var(z),
            Slot::S(_) => LaurentPoly::var(w),
        });
        acc = &acc * &RatFunc::from_poly(p).pow(f.exp).expect("ω factors are nonzero");
    }
    acc
}

/// F ⋆ G = (1/(n!m!)) Sym(F(first variables) G(remaining) ∏ ω), evaluated
/// as a sum over shuffles since F and G are already symmetric.
pub fn star_product(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ToroidalError> {
    if f.ell != g.ell {
        return Err(ToroidalError::Domain(format!("ranks {} and {} differ", f.ell, g.ell)));
    }
    let ell = f.ell;
    let counts: Vec<usize> = f.counts.iter().zip(&g.counts).map(|(a, b)| a + b).collect();
    let mut shuffles = 1usize;
    for i in 0..ell {
        shuffles *= binomial(counts[i], f.counts[i]);
    }
    if shuffles > SYM_LIMIT {
        return Err(ToroidalError::TooLarge(format!("{shuffles} shuffles")));
    }
    let layout = Layout::new(&counts);
    let fl = f.layout();
    let gl = g.layout();
    // per color: which target indices receive F's variables
    let mut choices: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for i in 0..ell {
        let subs = subsets(counts[i], f.counts[i]);
        choices = choices
            .into_iter()
            .flat_map(|pre| subs.iter().map(move |s| {
                let mut v = pre.clone();
                v.push(s.clone());
                v
            }))
            .collect();
    }
    let mut terms = Vec::with_capacity(choices.len());
    for choice in &choices {
        let mut fs = Substitution::new();
        let mut gs = Substitution::new();
        let mut first: Vec<(usize, Var)> = Vec::new();
        let mut rest: Vec<(usize, Var)> = Vec::new();
        for i in 0..ell {
            let (mut a, mut b) = (0, 0);
            for t in 0..counts[i] {
                let target = layout.var(i, t);
                if choice[i].contains(&t) {
                    fs = fs.map_monomial(fl.var(i, a), Monomial::var(target));
                    first.push((i, target));
                    a += 1;
                } else {
                    gs = gs.map_monomial(gl.var(i, b), Monomial::var(target));
                    rest.push((i, target));
                    b += 1;
                }
            }
        }
        // the renamings are simultaneous, so source and target slots may overlap
        let mut term = &fs.apply(&f.f)? * &gs.apply(&g.f)?;
        for &(i, z) in &first {
            for &(j, w) in &rest {
                term = &term * &omega_value(i, j, z, w, ell);
            }
        }
        terms.push(term);
    }
    Ok(ShuffleElement { ell, counts, f: balanced_sum(terms) })
}

fn binomial(n: usize, k: usize) -> usize {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// A failed pole or wheel condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// F times the pole-condition denominator is not a Laurent polynomial.
    Pole { residual_denominator: String },
    /// The numerator does not vanish on this wheel.
    Wheel { color: usize, epsilon: i32, r1: usize, r2: usize, s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub label: String,
    pub wheels_checked: usize,
    pub violations: Vec<Violation>,
}

impl Membership {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the pole and wheel conditions on Sym(K).
pub fn check_membership(k: &ShuffleKernel) -> Result<Membership, ToroidalError> {
    let mut m = check_element(&k.symmetrize()?)?;
    m.label = k.label.clone();
    Ok(m)
}

pub fn check_element(e: &ShuffleElement) -> Result<Membership, ToroidalError> {
    let ell = e.ell;
    let layout = e.layout();
    let q2 = Monomial::var_pow(Var::QQ, 2);
    let mut allowed = Vec::new();
    for i in 0..ell {
        for r in 0..e.counts[i] {
            for r2 in 0..e.counts[i] {
                if r != r2 {
                    allowed.push(&LaurentPoly::var(layout.var(i, r)) - &LaurentPoly::term(q2.mul(&Monomial::var(layout.var(i, r2))), rat(1)));
                }
            }
        }
    }
    let mut out = Membership { label: String::new(), wheels_checked: 0, violations: Vec::new() };
    // F·∏(x − 𝔮²x') is a Laurent polynomial iff the reduced denominator of F
    // is left a unit after dividing out the allowed factors.
    let mut residual = e.f.den().clone();
    let mut cofactor = LaurentPoly::one();
    for g in &allowed {
        match residual.div_exact(g) {
            Some(r) => residual = r,
            None => cofactor = &cofactor * g,
        }
    }
    if residual.as_term().is_none() {
        out.violations.push(Violation::Pole { residual_denominator: residual.to_string() });
        return Ok(out);
    }
    let (m, c) = residual.as_term().unwrap();
    let numerator = (e.f.num() * &cofactor).mul_term(&m.inv(), &c.recip());
    let f = &numerator;
    for i in 0..ell {
        for eps in [1i32, -1] {
            let j = (i as i64 + eps as i64).rem_euclid(ell as i64) as usize;
            if j == i {
                continue;
            }
            for r1 in 0..e.counts[i] {
                for r2 in 0..e.counts[i] {
                    if r1 == r2 {
                        continue;
                    }
                    for s in 0..e.counts[j] {
                        let y = Monomial::var(layout.var(j, s));
                        // x_{i,r1} = 𝔮𝔡^ε y, x_{i,r2} = 𝔮⁻¹𝔡^ε y
                        let sub = Substitution::new()
                            .map_monomial(layout.var(i, r1), y.mul(&Monomial::from_pairs(&[(Var::QQ, 1), (Var::DD, eps)])))
                            .map_monomial(layout.var(i, r2), y.mul(&Monomial::from_pairs(&[(Var::QQ, -1), (Var::DD, eps)])));
                        out.wheels_checked += 1;
                        if !sub.apply_poly(f).is_zero() {
                            out.violations.push(Violation::Wheel { color: i, epsilon: eps, r1, r2, s });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

mod combin {
    /// All permutations of 0..k.
    pub fn permutations(k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let mut used = vec![false; k];
        fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in 0..k {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    go(k, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        go(k, &mut cur, &mut used, &mut out);
        out
    }

    /// All k-subsets of 0..n, increasing.
    pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        go(0, n, k, &mut cur, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mono;
    use crate::toroidal::{kernel_e, kernel_h, kernel_monomial};

    fn x(k: usize) -> RatFunc {
        RatFunc::var(Var::shuffle(k))
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(combin::permutations(3).len(), 6);
        assert_eq!(combin::subsets(4, 2).len(), 6);
        assert_eq!(combin::subsets(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn unit_is_neutral() {
        let f = kernel_monomial(1, 2, 3).unwrap().symmetrize().unwrap();
        let one = ShuffleElement::one(3);
        assert_eq!(star_product(&f, &one).unwrap(), f);
        assert_eq!(star_product(&one, &f).unwrap(), f);
    }

    #[test]
    fn distant_colors_commute_trivially() {
        // ω ≡ 1 between colors 0 and 2 at ℓ = 4
        let a = kernel_monomial(0, 0, 4).unwrap().symmetrize().unwrap();
        let b = kernel_monomial(2, 0, 4).unwrap().symmetrize().unwrap();
        let ab = star_product(&a, &b).unwrap();
        assert!(ab.f.is_one());
        assert_eq!(ab.counts, vec![1, 0, 1, 0]);
    }

    #[test]
    fn neighbor_product() {
        // x_{0}⁰ ⋆ x_{1}⁰ = ω₀₁(x₀, x₁) = 𝔮x₁ − 𝔡⁻¹x₀
        let a = kernel_monomial(0, 0, 3).unwrap().symmetrize().unwrap();
        let b = kernel_monomial(1, 0, 3).unwrap().symmetrize().unwrap();
        let want = &(&mono(&[(Var::QQ, 1)]) * &x(1)) - &(&mono(&[(Var::DD, -1)]) * &x(0));
        assert_eq!(star_product(&a, &b).unwrap().f, want);
    }

    #[test]
    fn degree_one_kernels_are_members() {
        for p in 0..3 {
            assert!(check_membership(&kernel_e(p, 1, 3).unwrap()).unwrap().ok());
            assert!(check_membership(&kernel_h(p, 1, 3).unwrap()).unwrap().ok());
        }
    }

    #[test]
    fn products_of_generators_are_members() {
        let a = kernel_monomial(0, 0, 3).unwrap().symmetrize().unwrap();
        let b = kernel_monomial(1, 0, 3).unwrap().symmetrize().unwrap();
        let good = star_product(&star_product(&a, &a).unwrap(), &b).unwrap();
        assert!(check_element(&good).unwrap().ok());
    }
}
