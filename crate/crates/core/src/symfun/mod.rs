//! Λ^{⊗ℓ} ⊗ ℂ[Q]: colored symmetric functions stored in the power-sum
//! basis, with the s, e, h, m bases as views.

mod plethysm;
mod transition;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{param, AlgebraError, Rat, RatFunc, Substitution, Var};
use crate::partition::{transpose_charge, Partition};

pub use plethysm::{adams, mat_mul, Generator, PlethysticTransform};
pub use transition::{invert, mn_character, transition, z, z_int, Transition};

/// An ℓ-multipartition (λ⁰, …, λ^{ℓ−1}).
pub type MultiPartition = Vec<Partition>;

pub fn mp_size(mp: &[Partition]) -> usize {
    mp.iter().map(|p| p.size()).sum()
}

pub fn mp_to_string(mp: &[Partition]) -> String {
    let inner: Vec<String> = mp.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

/// z_{λ⃗} = ∏ᵢ z_{λⁱ}
pub fn z_multi(mp: &[Partition]) -> Rat {
    mp.iter().map(z).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    E,
    H,
    S,
    M,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::E, Basis::H, Basis::S, Basis::M];

    pub fn name(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
            Basis::M => "m",
        }
    }

    pub fn parse(s: &str) -> Result<Basis, SymFuncError> {
        Basis::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| SymFuncError::Parse(format!("unknown basis {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SymFuncError {
    #[error("rank mismatch: ℓ = {0} and ℓ = {1}")]
    RankMismatch(usize, usize),
    #[error("multipartition {0} does not have {1} components")]
    BadMultipartition(String, usize),
    #[error("malformed symmetric function JSON: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A colored symmetric function times e^α.  Coefficients of p_{λ⃗} are
/// kept nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    ell: usize,
    sector: Vec<i64>,
    terms: BTreeMap<MultiPartition, RatFunc>,
}

impl SymFunc {
    pub fn zero(ell: usize) -> Self {
        assert!(ell >= 1, "ℓ must be at least 1");
        SymFunc { ell, sector: vec![0; ell], terms: BTreeMap::new() }
    }

    pub fn one(ell: usize) -> Self {
        Self::constant(ell, RatFunc::one())
    }

    pub fn constant(ell: usize, c: RatFunc) -> Self {
        let mut f = Self::zero(ell);
        if !c.is_zero() {
            f.terms.insert(vec![Partition::empty(); ell], c);
        }
        f
    }

    pub fn with_sector(mut self, sector: Vec<i64>) -> Self {
        assert_eq!(sector.len(), self.ell, "sector length must be ℓ");
        self.sector = sector;
        self
    }

    /// b_{λ⃗} = ∏ᵢ b_{λⁱ}(i) for the chosen basis b.
    pub fn basis_element(ell: usize, basis: Basis, mp: &[Partition]) -> Self {
        Self::from_basis(ell, basis, [(mp.to_vec(), RatFunc::one())])
    }

    /// b_λ(color).
    pub fn single(ell: usize, basis: Basis, color: usize, lambda: &Partition) -> Self {
        let mut mp = vec![Partition::empty(); ell];
        mp[color % ell] = lambda.clone();
        Self::basis_element(ell, basis, &mp)
    }

    /// p_k(color)
    pub fn power_sum(ell: usize, color: usize, k: u32) -> Self {
        Self::single(ell, Basis::P, color, &Partition::from([k]))
    }

    /// e_n(color) in the ordinary sense.
    pub fn elementary(ell: usize, color: usize, n: usize) -> Self {
        // e_{(1ⁿ)} is e_n under the transposed indexing of the e basis
        Self::single(ell, Basis::E, color, &Partition::new(vec![1; n]).expect("column"))
    }

    /// h_n(color)
    pub fn complete(ell: usize, color: usize, n: usize) -> Self {
        if n == 0 {
            return Self::one(ell);
        }
        Self::single(ell, Basis::H, color, &Partition::from([n as u32]))
    }

    /// Σ c_{λ⃗} b_{λ⃗}
    pub fn from_basis<I: IntoIterator<Item = (MultiPartition, RatFunc)>>(ell: usize, basis: Basis, it: I) -> Self {
        let mut acc: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
        for (mp, c) in it {
            assert_eq!(mp.len(), ell, "multipartition {} has wrong rank", mp_to_string(&mp));
            if c.is_zero() {
                continue;
            }
            if basis == Basis::P {
                acc.entry(mp).or_default().push(c);
                continue;
            }
            for (key, r) in tensor_expand(&mp, basis, true) {
                acc.entry(key).or_default().push(c.scale(&r));
            }
        }
        Self::collect(ell, vec![0; ell], acc)
    }

    fn collect(ell: usize, sector: Vec<i64>, acc: HashMap<MultiPartition, Vec<RatFunc>>) -> Self {
        let terms = acc
            .into_iter()
            .filter_map(|(k, v)| {
                let s = RatFunc::sum(v.iter());
                (!s.is_zero()).then_some((k, s))
            })
            .collect();
        SymFunc { ell, sector, terms }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn sector(&self) -> &[i64] {
        &self.sector
    }

    /// Power-sum coefficients.
    pub fn terms(&self) -> &BTreeMap<MultiPartition, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| mp_size(k)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|k| mp_size(k));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        let terms = self.terms.iter().filter(|(k, _)| mp_size(k) == n).map(|(k, v)| (k.clone(), v.clone())).collect();
        SymFunc { ell: self.ell, sector: self.sector.clone(), terms }
    }

    /// Coefficients in the basis b.
    pub fn coefficients(&self, basis: Basis) -> BTreeMap<MultiPartition, RatFunc> {
        if basis == Basis::P {
            return self.terms.clone();
        }
        let mut acc: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
        for (mp, c) in &self.terms {
            for (key, r) in tensor_expand(mp, basis, false) {
                acc.entry(key).or_default().push(c.scale(&r));
            }
        }
        Self::collect(self.ell, self.sector.clone(), acc).terms
    }

    pub fn coefficient(&self, basis: Basis, mp: &[Partition]) -> RatFunc {
        self.coefficients(basis).get(mp).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.ell).with_sector(self.sector.clone());
        }
        self.map_coefficients(|x| x * c)
    }

    pub fn map_coefficients<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> SymFunc {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, v)| {
                let w = f(v);
                (!w.is_zero()).then_some((k.clone(), w))
            })
            .collect();
        SymFunc { ell: self.ell, sector: self.sector.clone(), terms }
    }

    /// Applies a parameter substitution to every coefficient.
    pub fn substitute(&self, s: &Substitution) -> Result<SymFunc, SymFuncError> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let w = s.apply(v)?;
            if !w.is_zero() {
                terms.insert(k.clone(), w);
            }
        }
        Ok(SymFunc { ell: self.ell, sector: self.sector.clone(), terms })
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        self.check_rank(other)?;
        let sector = self.combined_sector(other);
        let mut acc: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
        for (k, v) in self.terms.iter().chain(other.terms.iter()) {
            acc.entry(k.clone()).or_default().push(v.clone());
        }
        Ok(Self::collect(self.ell, sector, acc))
    }

    fn combined_sector(&self, other: &SymFunc) -> Vec<i64> {
        if self.is_zero() {
            return other.sector.clone();
        }
        if !other.is_zero() {
            assert_eq!(self.sector, other.sector, "adding symmetric functions from different sectors");
        }
        self.sector.clone()
    }

    fn check_rank(&self, other: &SymFunc) -> Result<(), SymFuncError> {
        if self.ell != other.ell {
            return Err(SymFuncError::RankMismatch(self.ell, other.ell));
        }
        Ok(())
    }

    /// Product; sectors add.
    pub fn try_mul(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        self.check_rank(other)?;
        let sector: Vec<i64> = self.sector.iter().zip(&other.sector).map(|(a, b)| a + b).collect();
        let mut acc: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let key: MultiPartition = a.iter().zip(b).map(|(p, r)| merge(p, r)).collect();
                acc.entry(key).or_default().push(x * y);
            }
        }
        Ok(Self::collect(self.ell, sector, acc))
    }

    /// f ↦ f[T X•]
    pub fn plethysm(&self, t: &PlethysticTransform) -> SymFunc {
        assert_eq!(self.ell, t.ell(), "plethysm of rank {} applied to rank {}", t.ell(), self.ell);
        let mut columns: HashMap<u32, Vec<Vec<RatFunc>>> = HashMap::new();
        let mut acc: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
        for (mp, c) in &self.terms {
            let mut partial: HashMap<MultiPartition, RatFunc> = HashMap::from([(vec![Partition::empty(); self.ell], RatFunc::one())]);
            for (color, lambda) in mp.iter().enumerate() {
                for &k in lambda.parts() {
                    let m = columns.entry(k).or_insert_with(|| t.matrix(k));
                    let mut next: HashMap<MultiPartition, Vec<RatFunc>> = HashMap::new();
                    for (key, v) in &partial {
                        for (j, row) in m.iter().enumerate() {
                            let a = &row[color];
                            if a.is_zero() {
                                continue;
                            }
                            let mut key2 = key.clone();
                            key2[j] = merge(&key2[j], &Partition::from([k]));
                            next.entry(key2).or_default().push(v * a);
                        }
                    }
                    partial = next
                        .into_iter()
                        .filter_map(|(k, v)| {
                            let s = RatFunc::sum(v.iter());
                            (!s.is_zero()).then_some((k, s))
                        })
                        .collect();
                }
            }
            for (key, v) in partial {
                acc.entry(key).or_default().push(&v * c);
            }
        }
        Self::collect(self.ell, self.sector.clone(), acc)
    }

    /// ⟨f, g⟩ with ⟨p_{λ⃗}, p_{μ⃗}⟩ = δ z_{λ⃗}; sectors are ignored.
    pub fn hall(&self, other: &SymFunc) -> Result<RatFunc, SymFuncError> {
        self.check_rank(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let terms: Vec<RatFunc> = small
            .terms
            .iter()
            .filter_map(|(k, v)| large.terms.get(k).map(|w| (v * w).scale(&z_multi(k))))
            .collect();
        Ok(RatFunc::sum(terms.iter()))
    }

    /// ⟨f, g⟩* = ⟨f[ιX•], g⟩
    pub fn star(&self, other: &SymFunc) -> Result<RatFunc, SymFuncError> {
        self.check_rank(other)?;
        self.plethysm(&PlethysticTransform::negation(self.ell)).hall(other)
    }

    /// ⟨f, g⟩'_{q,t} = δ_{α,ᵗβ} ⟨f, g[σ(1 − t⁻¹σ⁻¹)(1 − qσ⁻¹)X•]⟩*
    pub fn pairing_prime_qt(&self, other: &SymFunc) -> Result<RatFunc, SymFuncError> {
        self.check_rank(other)?;
        if self.sector != transpose_charge(&other.sector) {
            return Ok(RatFunc::zero());
        }
        self.star(&other.plethysm(&prime_transform(self.ell)))
    }

    /// ⟨f, g⟩_{q,t} = δ_{α,ᵗβ} ⟨f, g[σ(1 − qσ⁻¹)/(1 − tσ⁻¹) X•]⟩*
    pub fn pairing_qt(&self, other: &SymFunc) -> Result<RatFunc, SymFuncError> {
        self.check_rank(other)?;
        if self.sector != transpose_charge(&other.sector) {
            return Ok(RatFunc::zero());
        }
        self.star(&other.plethysm(&qt_transform(self.ell)))
    }

    /// {"ell","sector","basis","terms":[{"mpart","coeff"}]}
    pub fn to_json(&self, basis: Basis) -> Value {
        let terms: Vec<Value> = self
            .coefficients(basis)
            .iter()
            .map(|(k, v)| json!({"mpart": k.iter().map(|p| p.to_json()).collect::<Vec<_>>(), "coeff": v.to_json()}))
            .collect();
        json!({"ell": self.ell, "sector": self.sector, "basis": basis.name(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<SymFunc, SymFuncError> {
        let bad = |m: &str| SymFuncError::Parse(m.to_string());
        let ell = v["ell"].as_u64().ok_or_else(|| bad("missing ell"))? as usize;
        if ell == 0 {
            return Err(bad("ell must be positive"));
        }
        let basis = Basis::parse(v["basis"].as_str().ok_or_else(|| bad("missing basis"))?)?;
        let sector: Vec<i64> = match v.get("sector") {
            None | Some(Value::Null) => vec![0; ell],
            Some(s) => s
                .as_array()
                .ok_or_else(|| bad("sector must be an array"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("sector entries must be integers")))
                .collect::<Result<_, _>>()?,
        };
        if sector.len() != ell {
            return Err(bad("sector length must be ell"));
        }
        let mut items = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let mp: MultiPartition = t["mpart"]
                .as_array()
                .ok_or_else(|| bad("mpart must be an array"))?
                .iter()
                .map(|p| Partition::from_json(p).map_err(|e| SymFuncError::Parse(e.to_string())))
                .collect::<Result<_, _>>()?;
            if mp.len() != ell {
                return Err(SymFuncError::BadMultipartition(mp_to_string(&mp), ell));
            }
            items.push((mp, RatFunc::from_json(&t["coeff"])?));
        }
        Ok(SymFunc::from_basis(ell, basis, items).with_sector(sector))
    }

    /// Human-readable expansion in the given basis.
    pub fn display_in(&self, basis: Basis) -> String {
        let coeffs = self.coefficients(basis);
        if coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = coeffs
            .iter()
            .rev()
            .map(|(k, v)| format!("({})*{}{}", v, basis.name(), mp_to_string(k)))
            .collect();
        parts.join(" + ")
    }
}

/// σ(1 − t⁻¹σ⁻¹)(1 − qσ⁻¹)
pub fn prime_transform(ell: usize) -> PlethysticTransform {
    let tinv = param(Var::T).inv().expect("t is nonzero");
    let s = PlethysticTransform::shift(ell, 1);
    let a = PlethysticTransform::one_minus(ell, tinv, -1);
    let b = PlethysticTransform::one_minus(ell, param(Var::Q), -1);
    &(&s * &a) * &b
}

/// σ(1 − qσ⁻¹)(1 − tσ⁻¹)⁻¹
pub fn qt_transform(ell: usize) -> PlethysticTransform {
    let s = PlethysticTransform::shift(ell, 1);
    let a = PlethysticTransform::one_minus(ell, param(Var::Q), -1);
    let b = PlethysticTransform::one_minus_inv(ell, param(Var::T), -1);
    &(&s * &a) * &b
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    if b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

/// Expands b_{λ⃗} in p (`to_p`) or p_{λ⃗} in b (otherwise), color by color.
fn tensor_expand(mp: &[Partition], basis: Basis, to_p: bool) -> Vec<(MultiPartition, Rat)> {
    let mut out: Vec<(MultiPartition, Rat)> = vec![(Vec::with_capacity(mp.len()), Rat::from_integer(1.into()))];
    for lambda in mp {
        let t = transition(basis, lambda.size());
        let row = if to_p { t.expand_to_p(lambda) } else { t.expand_from_p(lambda) };
        let mut next = Vec::with_capacity(out.len() * row.len());
        for (key, c) in &out {
            for (p, r) in &row {
                let mut k = key.clone();
                k.push((*p).clone());
                next.push((k, c * *r));
            }
        }
        out = next;
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in(Basis::P))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[ℓ={}, e^{:?}]({})", self.ell, self.sector, self)
    }
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &'a SymFunc) -> SymFunc {
        self.try_add(rhs).expect("adding symmetric functions of different rank")
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &'a SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.map_coefficients(|c| -c)
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &'a SymFunc) -> SymFunc {
        self.try_mul(rhs).expect("multiplying symmetric functions of different rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{mono, rat_frac};
    use crate::partition::multipartitions;

    fn p<const N: usize>(x: [u32; N]) -> Partition {
        Partition::from(x)
    }

    fn e() -> Partition {
        Partition::empty()
    }

    #[test]
    fn free_generators() {
        let f = &SymFunc::power_sum(3, 0, 2) * &SymFunc::power_sum(3, 1, 1);
        assert_eq!(f, SymFunc::basis_element(3, Basis::P, &[p([2]), p([1]), e()]));
        let g = SymFunc::single(3, Basis::S, 2, &p([2, 1]));
        assert_eq!(&SymFunc::one(3) * &g, g);
    }

    #[test]
    fn degree_one_bases_agree() {
        for b in Basis::ALL {
            assert_eq!(SymFunc::single(2, b, 1, &p([1])), SymFunc::power_sum(2, 1, 1));
        }
    }

    #[test]
    fn schur_21() {
        let s = SymFunc::single(1, Basis::S, 0, &p([2, 1]));
        let want = SymFunc::from_basis(
            1,
            Basis::P,
            [(vec![p([1, 1, 1])], RatFunc::constant(rat_frac(1, 3))), (vec![p([3])], RatFunc::constant(rat_frac(-1, 3)))],
        );
        assert_eq!(s, want);
    }

    #[test]
    fn e2_is_e1_squared() {
        let lhs = SymFunc::single(1, Basis::E, 0, &p([2]));
        let e1 = SymFunc::single(1, Basis::E, 0, &p([1]));
        assert_eq!(lhs, &e1 * &e1);
        // s₂ + s₁₁ = e₁²
        let s = &SymFunc::single(1, Basis::S, 0, &p([2])) + &SymFunc::single(1, Basis::S, 0, &p([1, 1]));
        assert_eq!(s, lhs);
    }

    #[test]
    fn conversions_round_trip() {
        for b in Basis::ALL {
            for mp in multipartitions(3, 2) {
                let f = SymFunc::basis_element(2, b, &mp);
                let c = f.coefficients(b);
                assert_eq!(c.len(), 1);
                assert!(c[&mp].is_one());
            }
        }
    }

    #[test]
    fn schur_orthonormal() {
        for n in 0..=3 {
            let mps = multipartitions(n, 2);
            for a in &mps {
                let sa = SymFunc::basis_element(2, Basis::S, a);
                for b in &mps {
                    let sb = SymFunc::basis_element(2, Basis::S, b);
                    let v = sa.hall(&sb).unwrap();
                    assert_eq!(v.is_one(), a == b);
                    assert_eq!(v.is_zero(), a != b);
                }
            }
        }
    }

    #[test]
    fn hall_z() {
        let f = SymFunc::basis_element(2, Basis::P, &[p([2]), p([1])]);
        assert_eq!(f.hall(&f).unwrap(), RatFunc::int(2));
    }

    #[test]
    fn sign_identity() {
        // s_{quot(ᵗν)}[−ισX•] = (−1)^{|quot ν|} s_{quot ν}
        use crate::partition::{core_quotient, partitions};
        let l = 3;
        let t = &(&PlethysticTransform::sign_flip(l) * &PlethysticTransform::negation(l)) * &PlethysticTransform::shift(l, 1);
        for n in 0..=7 {
            for nu in partitions(n) {
                let cq = core_quotient(&nu, l);
                if cq.quotient_size() > 3 {
                    continue;
                }
                let tq = core_quotient(&nu.transpose(), l).quotient;
                let lhs = SymFunc::basis_element(l, Basis::S, &tq).plethysm(&t);
                let mut rhs = SymFunc::basis_element(l, Basis::S, &cq.quotient);
                if cq.quotient_size() % 2 == 1 {
                    rhs = -&rhs;
                }
                assert_eq!(lhs, rhs, "ν = {}", nu);
            }
        }
    }

    #[test]
    fn qt_pairing_rank_one() {
        // ⟨p_n, p_n⟩_{q,t} = n(1 − qⁿ)/(1 − tⁿ)
        for n in 1..=4u32 {
            let f = SymFunc::power_sum(1, 0, n);
            let want = &(&RatFunc::one() - &mono(&[(Var::Q, n as i32)])) / &(&RatFunc::one() - &mono(&[(Var::T, n as i32)]));
            assert_eq!(f.pairing_qt(&f).unwrap(), want.scale(&Rat::from_integer(n.into())));
        }
    }

    #[test]
    fn sector_delta() {
        let f = SymFunc::one(3).with_sector(vec![1, 0, -1]);
        assert!(f.pairing_qt(&f).unwrap().is_one());
        let g = SymFunc::one(3).with_sector(vec![1, -1, 0]);
        assert!(f.pairing_qt(&g).unwrap().is_zero());
        assert!(f.pairing_prime_qt(&g).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = &SymFunc::single(2, Basis::S, 0, &p([2, 1])).scale(&param(Var::Q)) + &SymFunc::power_sum(2, 1, 3);
        let f = f.with_sector(vec![1, -1]);
        for b in Basis::ALL {
            let j = f.to_json(b);
            assert_eq!(SymFunc::from_json(&j).unwrap(), f);
        }
        assert!(SymFunc::from_json(&json!({"ell": 2, "basis": "x", "terms": []})).is_err());
    }

    #[test]
    fn rank_mismatch() {
        let a = SymFunc::one(2);
        let b = SymFunc::one(3);
        assert_eq!(a.try_mul(&b), Err(SymFuncError::RankMismatch(2, 3)));
    }
}
