use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde_json::{json, Value};

use crate::algebra::{mono, nullspace, param, Monomial, RatFunc, Substitution, Var};
use crate::partition::{compare, core_quotient, family, multipartitions, Partition, PartitionError};
use crate::symfun::{Basis, MultiPartition, PlethysticTransform, SymFunc};

use super::MacdonaldError;

#[derive(Clone, Debug, PartialEq)]
pub struct Variants {
    pub h: SymFunc,
    pub h_star: SymFunc,
    pub p: SymFunc,
    pub q: SymFunc,
    pub p_star: SymFunc,
    pub q_star: SymFunc,
    pub p_tilde: SymFunc,
    pub q_tilde: SymFunc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    H,
    HStar,
    P,
    Q,
    PStar,
    QStar,
    PTilde,
    QTilde,
}

impl Variant {
    pub const ALL: [Variant; 8] =
        [Variant::H, Variant::HStar, Variant::P, Variant::Q, Variant::PStar, Variant::QStar, Variant::PTilde, Variant::QTilde];

    pub fn name(self) -> &'static str {
        match self {
            Variant::H => "H",
            Variant::HStar => "H*",
            Variant::P => "P",
            Variant::Q => "Q",
            Variant::PStar => "P*",
            Variant::QStar => "Q*",
            Variant::PTilde => "P~",
            Variant::QTilde => "Q~",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        let s = s.trim();
        Variant::ALL.into_iter().find(|v| {
            v.name().eq_ignore_ascii_case(s) || v.name().replace('*', "star").replace('~', "tilde").eq_ignore_ascii_case(s)
        })
    }
}

impl Variants {
    pub fn get(&self, v: Variant) -> &SymFunc {
        match v {
            Variant::H => &self.h,
            Variant::HStar => &self.h_star,
            Variant::P => &self.p,
            Variant::Q => &self.q,
            Variant::PStar => &self.p_star,
            Variant::QStar => &self.q_star,
            Variant::PTilde => &self.p_tilde,
            Variant::QTilde => &self.q_tilde,
        }
    }
}

/// All λ with a given ℓ-core and |quot(λ)| = n, with their polynomials.
#[derive(Clone, Debug)]
pub struct MacdonaldFamily {
    pub ell: usize,
    pub core: Partition,
    pub charges: Vec<i64>,
    pub n: usize,
    /// In multipartition enumeration order of the quotients.
    pub members: Vec<Partition>,
    pub quotients: Vec<MultiPartition>,
    pub h: BTreeMap<Partition, SymFunc>,
    pub variants: BTreeMap<Partition, Variants>,
}

impl MacdonaldFamily {
    pub fn quotient_of(&self, lambda: &Partition) -> Option<&MultiPartition> {
        self.members.iter().position(|m| m == lambda).map(|i| &self.quotients[i])
    }

    pub fn variants_of(&self, lambda: &Partition) -> Result<&Variants, MacdonaldError> {
        self.variants.get(lambda).ok_or_else(|| MacdonaldError::BasisIncomplete(lambda.to_string()))
    }

    pub fn to_json(&self, variant: Variant, basis: Basis) -> Value {
        let table: Vec<Value> = self
            .members
            .iter()
            .zip(&self.quotients)
            .map(|(lambda, quot)| {
                let f = match variant {
                    Variant::H => self.h.get(lambda),
                    v => self.variants.get(lambda).map(|x| x.get(v)),
                };
                json!({
                    "lambda": lambda.to_json(),
                    "quotient": quot.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                    "polynomial": f.map(|f| f.to_json(basis)).unwrap_or(Value::Null),
                })
            })
            .collect();
        json!({
            "ell": self.ell,
            "core": self.core.to_json(),
            "charges": self.charges,
            "n": self.n,
            "variant": variant.name(),
            "family": table,
        })
    }
}

/// mat[r][c] = coefficient of s_{mp[r]} in s_{mp[c]}[T X•], over the
/// ℓ-multipartitions of n in enumeration order.
pub fn s_plethysm_matrix(ell: usize, n: usize, t: &PlethysticTransform) -> Vec<Vec<RatFunc>> {
    let mps = multipartitions(n, ell);
    let index: HashMap<&MultiPartition, usize> = mps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = vec![vec![RatFunc::zero(); mps.len()]; mps.len()];
    for (c, mp) in mps.iter().enumerate() {
        let image = SymFunc::basis_element(ell, Basis::S, mp).plethysm(t);
        for (key, v) in image.coefficients(Basis::S) {
            mat[index[&key]][c] = v;
        }
    }
    mat
}

fn trivial_quotient(ell: usize, n: usize) -> MultiPartition {
    let mut mp = vec![Partition::empty(); ell];
    if n > 0 {
        mp[0] = Partition::from([n as u32]);
    }
    mp
}

/// H_λ for every λ with the given core and quotient size.
pub fn compute_h(core: &Partition, n: usize, ell: usize) -> Result<MacdonaldFamily, MacdonaldError> {
    if ell == 0 {
        return Err(PartitionError::BadRank.into());
    }
    if !core.is_core(ell) {
        return Err(PartitionError::NotACore(core.to_string(), ell).into());
    }
    let charges = core_quotient(core, ell).charges;
    let members = family(&charges, n);
    let quotients = multipartitions(n, ell);
    let a1 = s_plethysm_matrix(ell, n, &PlethysticTransform::one_minus(ell, param(Var::Q), -1));
    let a2 = s_plethysm_matrix(ell, n, &PlethysticTransform::one_minus(ell, mono(&[(Var::T, -1)]), -1));
    let trivial = quotients.iter().position(|m| *m == trivial_quotient(ell, n)).expect("trivial multipartition");
    let mut h = BTreeMap::new();
    for lambda in &members {
        let mut rows = Vec::new();
        for (r, mu) in members.iter().enumerate() {
            let c = compare(mu, lambda, ell)?;
            if !c.ge_ell() {
                rows.push(a1[r].clone());
            }
            if !c.le_ell() {
                rows.push(a2[r].clone());
            }
        }
        let ns = nullspace(&rows, quotients.len());
        let v = match ns.len() {
            0 => return Err(MacdonaldError::NoSolution(lambda.to_string())),
            1 => ns.into_iter().next().expect("one vector"),
            dim => return Err(MacdonaldError::NonUniqueSolution { lambda: lambda.to_string(), dim }),
        };
        let lead = v[trivial].clone();
        if lead.is_zero() {
            return Err(MacdonaldError::ZeroLeadingCoefficient { lambda: lambda.to_string(), variant: "H".into() });
        }
        let inv = lead.inv()?;
        let f = SymFunc::from_basis(ell, Basis::S, quotients.iter().cloned().zip(v.iter().map(|x| x * &inv)))
            .with_sector(charges.clone());
        h.insert(lambda.clone(), f);
    }
    Ok(MacdonaldFamily { ell, core: core.clone(), charges, n, members, quotients, h, variants: BTreeMap::new() })
}

fn var_inv(v: Var) -> Monomial {
    Monomial::var_pow(v, -1)
}

/// (−1)^n f[−(1−tσ⁻¹)(1−qσ⁻¹)⁻¹X•; t, q] for f of quotient degree n.
/// P*_λ is this image of Q_λ and Q*_λ that of P_λ; at ℓ=1 it is ω_{t,q}.
pub fn star_image(f: &SymFunc, n: usize) -> Result<SymFunc, MacdonaldError> {
    let ell = f.ell();
    let swap = Substitution::new().map_monomial(Var::Q, Monomial::var(Var::T)).map_monomial(Var::T, Monomial::var(Var::Q));
    let tr = &(&PlethysticTransform::sign_flip(ell) * &PlethysticTransform::one_minus(ell, param(Var::T), -1))
        * &PlethysticTransform::one_minus_inv(ell, param(Var::Q), -1);
    let g = f.substitute(&swap)?.plethysm(&tr);
    Ok(if n % 2 == 1 { -&g } else { g })
}

/// f[−X•; t, q], the sign-flip-and-swap reading of the starred variants.
/// Not dual to Q under the q,t pairing; kept for comparison.
pub fn literal_star(f: &SymFunc) -> Result<SymFunc, MacdonaldError> {
    let swap = Substitution::new().map_monomial(Var::Q, Monomial::var(Var::T)).map_monomial(Var::T, Monomial::var(Var::Q));
    Ok(f.substitute(&swap)?.plethysm(&PlethysticTransform::sign_flip(f.ell())))
}

/// Fills in H*, P, Q, P*, Q* and the tilde variants from H.
pub fn derive_variants(fam: &mut MacdonaldFamily) -> Result<(), MacdonaldError> {
    let ell = fam.ell;
    let t = param(Var::T);
    let t_to_inv = Substitution::new().map_monomial(Var::T, var_inv(Var::T));
    let invert_swap = Substitution::new().map_monomial(Var::Q, var_inv(Var::T)).map_monomial(Var::T, var_inv(Var::Q));
    let one_minus_t = PlethysticTransform::one_minus(ell, t.clone(), -1);
    let one_minus_t_inv = PlethysticTransform::one_minus_inv(ell, t.clone(), -1);
    let qt_ratio = &PlethysticTransform::one_minus(ell, param(Var::Q), -1) * &one_minus_t_inv;
    let flip = PlethysticTransform::sign_flip(ell);

    let mut out = BTreeMap::new();
    for (lambda, quot) in fam.members.iter().zip(&fam.quotients) {
        let h = &fam.h[lambda];
        let base = h.substitute(&t_to_inv)?.plethysm(&one_minus_t);
        let cp = base.coefficient(Basis::S, quot);
        if cp.is_zero() {
            return Err(MacdonaldError::ZeroLeadingCoefficient { lambda: lambda.to_string(), variant: "P".into() });
        }
        let p = base.scale(&cp.inv()?);
        let cq = base.plethysm(&qt_ratio).coefficient(Basis::S, quot);
        if cq.is_zero() {
            return Err(MacdonaldError::ZeroLeadingCoefficient { lambda: lambda.to_string(), variant: "Q".into() });
        }
        let q = base.scale(&cq.inv()?);
        let v = Variants {
            h: h.clone(),
            h_star: h.substitute(&invert_swap)?.plethysm(&flip),
            p_star: star_image(&q, fam.n)?,
            q_star: star_image(&p, fam.n)?,
            p_tilde: p.plethysm(&one_minus_t_inv),
            q_tilde: q.plethysm(&one_minus_t_inv),
            p,
            q,
        };
        out.insert(lambda.clone(), v);
    }
    fam.variants = out;
    Ok(())
}

type FamilyKey = (usize, Vec<i64>, usize);

static FAMILIES: Lazy<Mutex<HashMap<FamilyKey, Arc<MacdonaldFamily>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The family with all variants, computed once per (ℓ, core, n).
pub fn family_cached(core: &Partition, n: usize, ell: usize) -> Result<Arc<MacdonaldFamily>, MacdonaldError> {
    if ell == 0 {
        return Err(PartitionError::BadRank.into());
    }
    let key = (ell, core_quotient(core, ell).charges, n);
    if let Some(f) = FAMILIES.lock().expect("family cache poisoned").get(&key) {
        return Ok(f.clone());
    }
    let mut fam = compute_h(core, n, ell)?;
    derive_variants(&mut fam)?;
    let fam = Arc::new(fam);
    Ok(FAMILIES.lock().expect("family cache poisoned").entry(key).or_insert(fam).clone())
}

/// ⟨P*_{ᵗλ}, P_λ⟩_{q,t}
pub fn norm_oracle(lambda: &Partition, ell: usize) -> Result<RatFunc, MacdonaldError> {
    let cq = core_quotient(lambda, ell);
    let n = cq.quotient_size();
    let lt = lambda.transpose();
    let fam = family_cached(&cq.core, n, ell)?;
    let fam_t = family_cached(&core_quotient(&lt, ell).core, n, ell)?;
    let p = &fam.variants_of(lambda)?.p;
    let p_star = &fam_t.variants_of(&lt)?.p_star;
    Ok(p_star.pairing_qt(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mono;

    fn p<const N: usize>(x: [u32; N]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn degree_one_rank_one() {
        let fam = compute_h(&Partition::empty(), 1, 1).unwrap();
        assert_eq!(fam.h[&p([1])], SymFunc::power_sum(1, 0, 1));
    }

    #[test]
    fn empty_family_is_one() {
        let fam = family_cached(&p([2]), 0, 3).unwrap();
        assert_eq!(fam.members, vec![p([2])]);
        let v = fam.variants_of(&p([2])).unwrap();
        assert!(v.h.coefficient(Basis::P, &vec![Partition::empty(); 3]).is_one());
        assert_eq!(v.h.sector(), &[-1, 1, 0]);
    }

    #[test]
    fn rank_one_degree_two() {
        // H̃_(2) = s₂ + q s₁₁ and H̃_(1,1) = s₂ + t s₁₁
        let fam = compute_h(&Partition::empty(), 2, 1).unwrap();
        let q = param(Var::Q);
        let t = param(Var::T);
        let s2 = SymFunc::single(1, Basis::S, 0, &p([2]));
        let s11 = SymFunc::single(1, Basis::S, 0, &p([1, 1]));
        assert_eq!(fam.h[&p([2])], &s2 + &s11.scale(&q));
        assert_eq!(fam.h[&p([1, 1])], &s2 + &s11.scale(&t));
    }

    #[test]
    fn rank_one_p2_is_classical() {
        // P₂ = m₂ + (1+q)(1−t)/(1−qt) m₁₁
        let fam = family_cached(&Partition::empty(), 2, 1).unwrap();
        let m2 = SymFunc::single(1, Basis::M, 0, &p([2]));
        let m11 = SymFunc::single(1, Basis::M, 0, &p([1, 1]));
        let one = RatFunc::one();
        let c = &(&(&one + &param(Var::Q)) * &(&one - &param(Var::T))) / &(&one - &mono(&[(Var::Q, 1), (Var::T, 1)]));
        assert_eq!(fam.variants_of(&p([2])).unwrap().p, &m2 + &m11.scale(&c));
        assert!(fam.variants_of(&p([1, 1])).unwrap().p == m11);
    }

    #[test]
    fn three_core_two_degree_one() {
        let fam = family_cached(&p([2]), 1, 3).unwrap();
        assert_eq!(fam.members.len(), 3);
        for lambda in &fam.members {
            assert_eq!(core_quotient(lambda, 3).core, p([2]));
        }
        assert!(compute_h(&p([2]), 1, 2).is_err());
        assert!(compute_h(&p([2, 1]), 1, 2).is_ok());
    }

    #[test]
    fn rank_one_norm() {
        let one = RatFunc::one();
        let want = &(&one - &param(Var::Q)) / &(&one - &param(Var::T));
        assert_eq!(norm_oracle(&p([1]), 1).unwrap(), want);
        let n2 = norm_oracle(&p([2]), 1).unwrap();
        assert_eq!(n2, super::super::conjectured_norm(&p([2]), 1));
    }
}
