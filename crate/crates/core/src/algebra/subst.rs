use num_traits::{One, Zero};

use super::monomial::{Monomial, Var, MAX_VARS};
use super::poly::{LaurentPoly, Rat};
use super::ratfunc::RatFunc;
use super::AlgebraError;

/// A monomial substitution: each mapped variable goes to c·m with c a
/// nonzero rational and m a Laurent monomial.  Unmapped variables pass
/// through unchanged.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: Vec<(Var, Rat, Monomial)>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn map(mut self, v: Var, c: Rat, m: Monomial) -> Self {
        assert!(!c.is_zero(), "substitution coefficient must be nonzero");
        self.images.retain(|(w, _, _)| *w != v);
        self.images.push((v, c, m));
        self
    }

    /// v ↦ m
    pub fn map_monomial(self, v: Var, m: Monomial) -> Self {
        self.map(v, Rat::one(), m)
    }

    /// v ↦ 1
    pub fn specialize_one(self, v: Var) -> Self {
        self.map(v, Rat::one(), Monomial::one())
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> LaurentPoly {
        if self.images.is_empty() {
            return p.clone();
        }
        p.map_terms(|m, c| {
            let mut out = *m;
            let mut coeff = c.clone();
            for (v, k, img) in &self.images {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                out.0[v.index()] -= e;
                out = out.mul(&img.pow(e));
                if !k.is_one() {
                    coeff *= rat_pow(k, e);
                }
            }
            (out, coeff)
        })
    }

    /// Ring-homomorphic image.  Fails only for degenerate maps that send
    /// the denominator to zero (for instance u ↦ 1 on a pole at u = 1).
    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if self.images.is_empty() {
            return Ok(f.clone());
        }
        let den = self.apply_poly(f.den());
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero {
                numerator: f.num().to_string(),
                denominator: f.den().to_string(),
            });
        }
        RatFunc::new(self.apply_poly(f.num()), den)
    }
}

fn rat_pow(k: &Rat, e: i32) -> Rat {
    let mut r = Rat::one();
    for _ in 0..e.unsigned_abs() {
        r *= k;
    }
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

/// The two parameter dictionaries between (q, t) and (𝔮, 𝔡).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Matching {
    /// q = 𝔮𝔡, t = 𝔮𝔡⁻¹
    Minus,
    /// q = 𝔮⁻¹𝔡, t = 𝔮⁻¹𝔡⁻¹
    Plus,
}

impl Matching {
    /// The substitution q, t ↦ monomials in 𝔮, 𝔡.
    pub fn substitution(self) -> Substitution {
        let (qa, qb, ta, tb) = match self {
            Matching::Minus => (1, 1, 1, -1),
            Matching::Plus => (-1, 1, -1, -1),
        };
        Substitution::new()
            .map_monomial(Var::Q, Monomial::from_pairs(&[(Var::QQ, qa), (Var::DD, qb)]))
            .map_monomial(Var::T, Monomial::from_pairs(&[(Var::QQ, ta), (Var::DD, tb)]))
    }

    /// 𝔮ᵃ𝔡ᵇ as q,t exponents, for a + b even.
    fn invert(self, a: i32, b: i32) -> (i32, i32) {
        match self {
            Matching::Minus => ((a + b) / 2, (a - b) / 2),
            Matching::Plus => ((b - a) / 2, (-a - b) / 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Matching::Minus => "qd-minus",
            Matching::Plus => "qd-plus",
        }
    }
}

/// Result of converting a 𝔮,𝔡 expression back to q,t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QtForm {
    Expressible(RatFunc),
    NotExpressible,
}

impl QtForm {
    pub fn expressible(self) -> Option<RatFunc> {
        match self {
            QtForm::Expressible(f) => Some(f),
            QtForm::NotExpressible => None,
        }
    }
}

/// Rewrites f(𝔮, 𝔡) in terms of q, t under the given matching, when every
/// monomial lies in the sublattice a + b ≡ 0 (mod 2) after clearing a
/// common odd factor from numerator and denominator.
pub fn to_qt(f: &RatFunc, matching: Matching) -> Result<QtForm, AlgebraError> {
    let allowed = (1u32 << Var::QQ.index()) | (1u32 << Var::DD.index());
    let stray = f.var_mask() & !allowed;
    if stray != 0 {
        let vars: Vec<String> = (0..MAX_VARS)
            .filter(|i| stray & (1 << i) != 0)
            .map(|i| Var(i as u8).name())
            .collect();
        return Err(AlgebraError::ForeignVariables { expr: f.to_string(), vars });
    }
    let parity = |p: &LaurentPoly| -> Option<i32> {
        let mut it = p.terms().iter().map(|(m, _)| (m.exp(Var::QQ) + m.exp(Var::DD)).rem_euclid(2));
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    };
    if f.is_zero() {
        return Ok(QtForm::Expressible(RatFunc::zero()));
    }
    let (pn, pd) = match (parity(f.num()), parity(f.den())) {
        (Some(a), Some(b)) if a == b => (a, b),
        _ => return Ok(QtForm::NotExpressible),
    };
    let shift = Monomial::var_pow(Var::QQ, -pn);
    debug_assert_eq!(pn, pd);
    let conv = |p: &LaurentPoly| -> LaurentPoly {
        p.mul_monomial(&shift).map_terms(|m, c| {
            let (x, y) = matching.invert(m.exp(Var::QQ), m.exp(Var::DD));
            (Monomial::from_pairs(&[(Var::Q, x), (Var::T, y)]), c.clone())
        })
    };
    Ok(QtForm::Expressible(RatFunc::new(conv(f.num()), conv(f.den()))?))
}

/// Splits off the largest power of (v − 1): p = (v − 1)^k · r with r(v=1) ≠ 0.
pub fn split_root_at_one(p: &LaurentPoly, v: Var) -> (u32, LaurentPoly) {
    let coeffs = p.coefficients_in(v);
    let lo = coeffs.first().map(|(e, _)| *e).unwrap_or(0);
    let hi = coeffs.last().map(|(e, _)| *e).unwrap_or(0);
    let mut dense = vec![LaurentPoly::zero(); (hi - lo + 1) as usize];
    for (e, c) in coeffs {
        dense[(e - lo) as usize] = c;
    }
    let mut k = 0;
    loop {
        let value = dense.iter().fold(LaurentPoly::zero(), |acc, c| &acc + c);
        if !value.is_zero() || dense.len() <= 1 {
            break;
        }
        // synthetic division by (v − 1), highest coefficient first
        let n = dense.len();
        let mut out = vec![LaurentPoly::zero(); n - 1];
        let mut carry = LaurentPoly::zero();
        for i in (1..n).rev() {
            carry = &carry + &dense[i];
            out[i - 1] = carry.clone();
        }
        dense = out;
        k += 1;
    }
    (k, LaurentPoly::from_dense_in(v, &dense, lo))
}

/// Value at v = 1 after cancelling common powers of (v − 1).
pub fn limit_at_one(f: &RatFunc, v: Var) -> Result<RatFunc, AlgebraError> {
    if !f.depends_on(v) {
        return Ok(f.clone());
    }
    let (kn, n) = split_root_at_one(f.num(), v);
    let (kd, d) = split_root_at_one(f.den(), v);
    if kd > kn {
        return Err(AlgebraError::IrregularPoint { expr: f.to_string(), var: v.name() });
    }
    if kn > kd {
        return Ok(RatFunc::zero());
    }
    let d1 = d.eval_one(v);
    if d1.is_zero() {
        return Err(AlgebraError::IrregularPoint { expr: f.to_string(), var: v.name() });
    }
    RatFunc::new(n.eval_one(v), d1)
}
