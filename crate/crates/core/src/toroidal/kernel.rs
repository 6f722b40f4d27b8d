//! Factor templates for pre-symmetrized shuffle kernels.

use crate::algebra::{rat, FactorList, LaurentPoly, Monomial, Rat, RatFunc, Var};

use super::ToroidalError;

/// A kernel variable relative to the index pair being instantiated:
/// `R(i)` is x_{i,r}, `S(i)` is x_{i,s}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    R(usize),
    S(usize),
}

/// c · 𝔮ᵃ𝔡ᵇ · ∏ x^e
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateTerm {
    pub coeff: Rat,
    pub param: Monomial,
    pub vars: Vec<(Slot, i32)>,
}

/// A sum of template terms raised to an integer power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub terms: Vec<TemplateTerm>,
    pub exp: i32,
    /// Short description, used in membership reports.
    pub label: String,
}

impl Factor {
    fn new(label: impl Into<String>, exp: i32, terms: Vec<TemplateTerm>) -> Self {
        Factor { terms, exp, label: label.into() }
    }

    /// Evaluates the base (without the exponent) at the given slot values.
    pub fn eval<F: Fn(Slot) -> LaurentPoly>(&self, value: F) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for t in &self.terms {
            let mut p = LaurentPoly::term(t.param, t.coeff.clone());
            for (slot, e) in &t.vars {
                p = &p * &pow_laurent(&value(*slot), *e);
            }
            acc = &acc + &p;
        }
        acc
    }
}

fn pow_laurent(p: &LaurentPoly, e: i32) -> LaurentPoly {
    if e >= 0 {
        return p.pow(e as u32);
    }
    let (m, rest) = p.split_monomial();
    assert!(rest.as_constant().is_some(), "negative power of a non-monomial {p}");
    let c = rest.as_constant().unwrap();
    LaurentPoly::term(m.pow(e), c.pow(e))
}

fn qd(a: i32, b: i32) -> Monomial {
    Monomial::from_pairs(&[(Var::QQ, a), (Var::DD, b)])
}

fn term(c: i64, param: Monomial, vars: &[(Slot, i32)]) -> TemplateTerm {
    TemplateTerm { coeff: rat(c), param, vars: vars.to_vec() }
}

/// The ω_{i,j}(z, w) factors.
pub fn omega_factors(i: usize, j: usize, z: Slot, w: Slot, ell: usize) -> Vec<Factor> {
    let one = Monomial::one();
    if i == j {
        vec![
            Factor::new(format!("ω{i}{j}:z−Q²w"), -1, vec![term(1, one, &[(z, 1)]), term(-1, qd(2, 0), &[(w, 1)])]),
            Factor::new(format!("ω{i}{j}:z−w"), -1, vec![term(1, one, &[(z, 1)]), term(-1, one, &[(w, 1)])]),
        ]
    } else if j == (i + 1) % ell {
        vec![Factor::new(format!("ω{i}{j}"), 1, vec![term(1, qd(1, 0), &[(w, 1)]), term(-1, qd(0, -1), &[(z, 1)])])]
    } else if (j + 1) % ell == i {
        vec![Factor::new(format!("ω{i}{j}"), 1, vec![term(1, one, &[(z, 1)]), term(-1, qd(1, -1), &[(w, 1)])])]
    } else {
        Vec::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelKind {
    E,
    H,
    Monomial,
}

/// Sym of ∏_{r<s} (pair templates) · ∏_r (per-variable templates) over
/// `counts[i]` variables of each color i.  Templates run over indices
/// below `rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleKernel {
    pub ell: usize,
    pub counts: Vec<usize>,
    pub rank: usize,
    pub pair_factors: Vec<Factor>,
    pub var_factors: Vec<Factor>,
    pub kind: KernelKind,
    pub label: String,
}

fn check_rank(ell: usize) -> Result<(), ToroidalError> {
    if ell < 3 {
        return Err(ToroidalError::UnsupportedRank(ell));
    }
    Ok(())
}

fn pair_omegas(ell: usize) -> Vec<Factor> {
    let mut out = Vec::new();
    for i in 0..ell {
        for j in 0..ell {
            out.extend(omega_factors(i, j, Slot::R(i), Slot::S(j), ell));
        }
    }
    out
}

fn all_vars(ell: usize) -> Vec<(Slot, i32)> {
    (0..ell).map(|i| (Slot::R(i), 1)).collect()
}

/// (c x₀/x_{p+1} − x₀/x_p) ∏ᵢ xᵢ, expanded into two terms.
fn binomial_factor(p: usize, c: Monomial, ell: usize) -> Factor {
    let p1 = (p + 1) % ell;
    let with = |drop: usize| -> Vec<(Slot, i32)> {
        let mut v = all_vars(ell);
        v[0].1 += 1;
        v[drop].1 -= 1;
        v.retain(|(_, e)| *e != 0);
        v
    };
    Factor::new(format!("binomial p={p}"), 1, vec![term(1, c, &with(p1)), term(-1, Monomial::one(), &with(p))])
}

pub fn kernel_e(p: usize, n: usize, ell: usize) -> Result<ShuffleKernel, ToroidalError> {
    check_rank(ell)?;
    if p >= ell {
        return Err(ToroidalError::Domain(format!("p = {p} is not below ℓ = {ell}")));
    }
    let p1 = (p + 1) % ell;
    let mut pair = vec![
        Factor::new("ratio num", 1, vec![term(1, Monomial::one(), &[(Slot::R(p1), 1)]), term(-1, qd(-1, -1), &[(Slot::S(p), 1)])]),
        Factor::new("ratio den", -1, vec![term(1, Monomial::one(), &[(Slot::R(p1), 1)]), term(-1, qd(1, -1), &[(Slot::S(p), 1)])]),
    ];
    pair.extend(pair_omegas(ell));
    Ok(ShuffleKernel {
        ell,
        counts: vec![n; ell],
        rank: n,
        pair_factors: pair,
        var_factors: vec![binomial_factor(p, qd(-1, -1), ell)],
        kind: KernelKind::E,
        label: format!("E_{{{p},{n}}}"),
    })
}

pub fn kernel_h(p: usize, n: usize, ell: usize) -> Result<ShuffleKernel, ToroidalError> {
    check_rank(ell)?;
    if p >= ell {
        return Err(ToroidalError::Domain(format!("p = {p} is not below ℓ = {ell}")));
    }
    let p1 = (p + 1) % ell;
    let mut pair = vec![
        Factor::new("ratio num", 1, vec![term(1, qd(-1, 1), &[(Slot::S(p1), 1)]), term(-1, Monomial::one(), &[(Slot::R(p), 1)])]),
        Factor::new("ratio den", -1, vec![term(1, qd(1, 1), &[(Slot::S(p1), 1)]), term(-1, Monomial::one(), &[(Slot::R(p), 1)])]),
    ];
    pair.extend(pair_omegas(ell));
    Ok(ShuffleKernel {
        ell,
        counts: vec![n; ell],
        rank: n,
        pair_factors: pair,
        var_factors: vec![binomial_factor(p, qd(1, -1), ell)],
        kind: KernelKind::H,
        label: format!("H_{{{p},{n}}}"),
    })
}

/// x_{i,1}^k
pub fn kernel_monomial(i: usize, k: i32, ell: usize) -> Result<ShuffleKernel, ToroidalError> {
    if ell == 0 || i >= ell {
        return Err(ToroidalError::Domain(format!("color {i} is not below ℓ = {ell}")));
    }
    let mut counts = vec![0; ell];
    counts[i] = 1;
    let var_factors = if k == 0 {
        Vec::new()
    } else {
        vec![Factor::new(format!("x^{k}"), 1, vec![term(1, Monomial::one(), &[(Slot::R(i), k)])])]
    };
    Ok(ShuffleKernel {
        ell,
        counts,
        rank: 1,
        pair_factors: Vec::new(),
        var_factors,
        kind: KernelKind::Monomial,
        label: format!("x_{{{i},1}}^{k}"),
    })
}

impl ShuffleKernel {
    /// (pair instances, per-variable instances, variables)
    pub fn instance_counts(&self) -> (usize, usize, usize) {
        let n = self.rank;
        (n * n.saturating_sub(1) / 2, n, self.counts.iter().sum())
    }

    /// Evaluates the unsymmetrized kernel as a factor list; `value(i, r)`
    /// gives x_{i,r} (r from 0).
    pub fn instantiate<F: Fn(usize, usize) -> LaurentPoly>(&self, value: F) -> Result<FactorList, ToroidalError> {
        let mut fl = FactorList::one();
        for r in 0..self.rank {
            for s in r + 1..self.rank {
                for f in &self.pair_factors {
                    let p = f.eval(|slot| match slot {
                        Slot::R(i) => value(i, r),
                        Slot::S(i) => value(i, s),
                    });
                    fl.push(&p, f.exp)?;
                }
            }
            for f in &self.var_factors {
                let p = f.eval(|slot| match slot {
                    Slot::R(i) | Slot::S(i) => value(i, r),
                });
                fl.push(&p, f.exp)?;
            }
        }
        Ok(fl)
    }

    /// The unsymmetrized kernel in the shuffle variables of `layout`.
    pub fn symbolic(&self) -> Result<RatFunc, ToroidalError> {
        let layout = Layout::new(&self.counts);
        Ok(self.instantiate(|i, r| LaurentPoly::var(layout.var(i, r)))?.to_ratfunc())
    }

    /// Copies with one factor of the displayed formula removed: the ratio,
    /// one ω_{i,j}, or one per-variable factor.
    pub fn single_factor_mutants(&self) -> Vec<ShuffleKernel> {
        let group = |f: &Factor| -> String {
            if f.label.starts_with("ratio") {
                "ratio".into()
            } else {
                f.label.split(':').next().unwrap_or_default().to_string()
            }
        };
        let mut groups: Vec<String> = Vec::new();
        for f in &self.pair_factors {
            let g = group(f);
            if !groups.contains(&g) {
                groups.push(g);
            }
        }
        let mut out: Vec<ShuffleKernel> = groups
            .into_iter()
            .map(|g| {
                let mut k = self.clone();
                k.pair_factors.retain(|f| group(f) != g);
                k.label = format!("{} without {g}", self.label);
                k
            })
            .collect();
        out.extend((0..self.var_factors.len()).map(|i| self.drop_var_factor(i)));
        out
    }

    /// Copy with the pair factor at `index` removed.
    pub fn drop_pair_factor(&self, index: usize) -> ShuffleKernel {
        let mut k = self.clone();
        let f = k.pair_factors.remove(index);
        k.label = format!("{} without {}", self.label, f.label);
        k
    }

    /// Copy with the per-variable factor at `index` removed.
    pub fn drop_var_factor(&self, index: usize) -> ShuffleKernel {
        let mut k = self.clone();
        let f = k.var_factors.remove(index);
        k.label = format!("{} without {}", self.label, f.label);
        k
    }
}

/// Assignment of shuffle variable slots: color by color, r increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub counts: Vec<usize>,
    offsets: Vec<usize>,
}

impl Layout {
    pub fn new(counts: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(counts.len());
        let mut acc = 0;
        for c in counts {
            offsets.push(acc);
            acc += c;
        }
        assert!(acc + crate::algebra::NUM_PARAMS <= crate::algebra::MAX_VARS, "too many shuffle variables ({acc})");
        Layout { counts: counts.to_vec(), offsets }
    }

    pub fn var(&self, i: usize, r: usize) -> Var {
        debug_assert!(r < self.counts[i]);
        Var::shuffle(self.offsets[i] + r)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mono;

    fn x(k: usize) -> RatFunc {
        RatFunc::var(Var::shuffle(k))
    }

    #[test]
    fn rank_guard() {
        assert!(matches!(kernel_e(0, 1, 2), Err(ToroidalError::UnsupportedRank(2))));
        assert!(kernel_h(0, 1, 1).is_err());
        assert!(kernel_e(3, 1, 3).is_err());
    }

    #[test]
    fn degree_one_kernel() {
        // (𝔮⁻¹𝔡⁻¹ x₀/x₂ − x₀/x₁) x₀x₁x₂ for p = 1
        let k = kernel_e(1, 1, 3).unwrap();
        let (x0, x1, x2) = (x(0), x(1), x(2));
        let want = &(&(&(&mono(&[(Var::QQ, -1), (Var::DD, -1)]) * &x0) / &x2) - &(&x0 / &x1)) * &(&x0 * &(&x1 * &x2));
        assert_eq!(k.symbolic().unwrap(), want);
        let h = kernel_h(2, 1, 3).unwrap();
        // p + 1 = 0: (𝔮𝔡⁻¹ − x₀/x₂) x₀x₁x₂
        let want = &(&mono(&[(Var::QQ, 1), (Var::DD, -1)]) - &(&x0 / &x2)) * &(&x0 * &(&x1 * &x2));
        assert_eq!(h.symbolic().unwrap(), want);
    }

    #[test]
    fn empty_and_monomial() {
        assert!(kernel_e(0, 0, 3).unwrap().symbolic().unwrap().is_one());
        assert!(kernel_h(1, 0, 4).unwrap().symbolic().unwrap().is_one());
        assert!(kernel_monomial(1, 0, 3).unwrap().symbolic().unwrap().is_one());
        let m = kernel_monomial(2, -2, 3).unwrap();
        assert_eq!(m.symbolic().unwrap(), x(0).pow(-2).unwrap());
        assert_eq!(m.counts, vec![0, 0, 1]);
    }

    #[test]
    fn template_counts() {
        assert_eq!(kernel_h(2, 2, 3).unwrap().instance_counts(), (1, 2, 6));
        // ratio pair + 3·2 same-color + 3 + 3 neighbor factors
        assert_eq!(kernel_e(0, 2, 3).unwrap().pair_factors.len(), 2 + 6 + 6);
        assert_eq!(kernel_e(0, 2, 4).unwrap().pair_factors.len(), 2 + 8 + 8);
    }

    #[test]
    fn omega_shapes() {
        let z = Slot::R(0);
        let w = Slot::S(0);
        let val = |s: Slot| match s {
            Slot::R(_) => LaurentPoly::var(Var::shuffle(0)),
            Slot::S(_) => LaurentPoly::var(Var::shuffle(1)),
        };
        let f = omega_factors(0, 1, z, w, 3);
        let want = &(&mono(&[(Var::QQ, 1)]) * &x(1)) - &(&mono(&[(Var::DD, -1)]) * &x(0));
        assert_eq!(RatFunc::from_poly(f[0].eval(val)), want);
        let f = omega_factors(1, 0, z, w, 3);
        let want = &x(0) - &(&mono(&[(Var::QQ, 1), (Var::DD, -1)]) * &x(1));
        assert_eq!(RatFunc::from_poly(f[0].eval(val)), want);
        assert!(omega_factors(0, 2, z, w, 4).is_empty());
        assert_eq!(omega_factors(2, 2, z, w, 3).len(), 2);
    }
}
