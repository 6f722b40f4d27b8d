use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var, MAX_VARS};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse Laurent polynomial with rational coefficients.  Terms are kept
/// sorted by decreasing monomial (graded lex), without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rat::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => *x += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Single term c·m.
    pub fn as_term(&self) -> Option<(&Monomial, &Rat)> {
        (self.terms.len() == 1).then(|| (&self.terms[0].0, &self.terms[0].1))
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    /// Bitmask of variables occurring with a nonzero exponent.
    pub fn var_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn vars_used(&self) -> Vec<Var> {
        let mask = self.var_mask();
        (0..MAX_VARS).filter(|i| mask & (1 << i) != 0).map(|i| Var(i as u8)).collect()
    }

    /// (min, max) exponent of `v`; `None` for the zero polynomial.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.degree_range(v).map(|r| r.1).unwrap_or(0)
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.gcd(m)),
        }
    }

    /// Componentwise maximum of all exponent vectors.
    pub fn monomial_hull(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.lcm(m)),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        if m.is_one() {
            return self.clone();
        }
        // multiplication by a monomial preserves the term order
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Splits off the monomial content: self = m · p with p a polynomial
    /// having no monomial factor.
    pub fn split_monomial(&self) -> (Monomial, LaurentPoly) {
        let m = self.monomial_content();
        (m, self.mul_monomial(&m.inv()))
    }

    /// self = c · p with p having coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn split_content(&self) -> (Rat, LaurentPoly) {
        if self.is_zero() {
            return (Rat::one(), Self::zero());
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
            if num.is_one() {
                break;
            }
        }
        let mut content = BigRational::new(num, den);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        if content.is_one() {
            return (content, self.clone());
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Unit-normalized associate: no monomial content, primitive integer
    /// coefficients, positive leading coefficient.  Zero stays zero.
    pub fn associate(&self) -> LaurentPoly {
        self.split_unit().2
    }

    /// self = c · m · p with p the normalized associate.
    pub fn split_unit(&self) -> (Rat, Monomial, LaurentPoly) {
        let (m, p) = self.split_monomial();
        let (c, p) = p.split_content();
        (c, m, p)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients with respect to `v`: pairs (exponent, coefficient free of v),
    /// sorted by increasing exponent.
    pub fn coefficients_in(&self, v: Var) -> Vec<(i32, LaurentPoly)> {
        let mut buckets: Vec<(i32, Vec<(Monomial, Rat)>)> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mm = m.with_exp(v, 0);
            match buckets.iter_mut().find(|(k, _)| *k == e) {
                Some((_, b)) => b.push((mm, c.clone())),
                None => buckets.push((e, vec![(mm, c.clone())])),
            }
        }
        buckets.sort_by_key(|(e, _)| *e);
        buckets
            .into_iter()
            .map(|(e, mut b)| {
                // removing one exponent from a graded order can reorder terms
                b.sort_by(|x, y| y.0.cmp(&x.0));
                (e, LaurentPoly { terms: b })
            })
            .collect()
    }

    /// Dense coefficient vector in `v` for a polynomial with exponents ≥ 0
    /// in `v`; index = exponent.
    pub fn to_dense_in(&self, v: Var) -> Vec<LaurentPoly> {
        let coeffs = self.coefficients_in(v);
        let deg = coeffs.last().map(|(e, _)| *e).unwrap_or(0);
        assert!(coeffs.first().map(|(e, _)| *e >= 0).unwrap_or(true));
        let mut out = vec![LaurentPoly::zero(); deg as usize + 1];
        for (e, c) in coeffs {
            out[e as usize] = c;
        }
        out
    }

    pub fn from_dense_in(v: Var, coeffs: &[LaurentPoly], offset: i32) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let e = offset + k as i32;
            for (m, a) in &c.terms {
                let mut mm = *m;
                mm.0[v.index()] += e;
                terms.push((mm, a.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Exact division.  Returns `None` when `other` does not divide `self`
    /// in the Laurent polynomial ring.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = other.as_term() {
            return Some(self.mul_term(&m.inv(), &c.recip()));
        }
        if self == other {
            return Some(Self::one());
        }
        // exponent box that any exact quotient must live in
        let lo = self.monomial_content().div(&other.monomial_content());
        let hi = self.monomial_hull().div(&other.monomial_hull());
        if lo.0.iter().zip(hi.0.iter()).any(|(a, b)| a > b) {
            return None;
        }
        if self.len() < other.len() && self.len() == 1 {
            return None;
        }
        let (lm, lc) = other.terms[0].clone();
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rat)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let m = rm.div(&lm);
            if m.0.iter().zip(lo.0.iter().zip(hi.0.iter())).any(|(e, (a, b))| e < a || e > b) {
                return None;
            }
            let c = rc * &lc_inv;
            rem = rem.sub_scaled(other, &m, &c);
            quot.push((m, c));
        }
        Some(LaurentPoly { terms: quot })
    }

    /// self − c·m·other, merged in order.
    pub fn sub_scaled(&self, other: &LaurentPoly, m: &Monomial, c: &Rat) -> LaurentPoly {
        let shifted = other.terms.iter().map(|(k, a)| (k.mul(m), -(a * c)));
        merge_add(self.terms.iter().cloned(), shifted)
    }

    /// Evaluate at a monomial map, see [`super::subst::Substitution`].
    pub fn map_terms<F: FnMut(&Monomial, &Rat) -> (Monomial, Rat)>(&self, mut f: F) -> LaurentPoly {
        Self::from_terms(self.terms.iter().map(|(m, c)| f(m, c)))
    }

    /// Sum of all coefficients of `self` viewed in `v` at v = 1, i.e. the
    /// image under v ↦ 1.
    pub fn eval_one(&self, v: Var) -> LaurentPoly {
        self.map_terms(|m, c| (m.with_exp(v, 0), c.clone()))
    }

    /// Canonical string, terms in decreasing order.
    pub fn to_canonical_string(&self) -> String {
        format!("{}", self)
    }
}

fn merge_add<A, B>(a: A, b: B) -> LaurentPoly
where
    A: Iterator<Item = (Monomial, Rat)>,
    B: Iterator<Item = (Monomial, Rat)>,
{
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(x), Some(y)) => x.0.cmp(&y.0),
        };
        match ord {
            std::cmp::Ordering::Greater => out.push(a.next().unwrap()),
            std::cmp::Ordering::Less => out.push(b.next().unwrap()),
            std::cmp::Ordering::Equal => {
                let (m, x) = a.next().unwrap();
                let (_, y) = b.next().unwrap();
                let s = x + y;
                if !s.is_zero() {
                    out.push((m, s));
                }
            }
        }
    }
    LaurentPoly { terms: out }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        merge_add(self.terms.iter().cloned(), rhs.terms.iter().cloned())
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        merge_add(self.terms.iter().cloned(), rhs.terms.iter().map(|(m, c)| (*m, -c)))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = self.as_term() {
            return rhs.mul_term(m, c);
        }
        if let Some((m, c)) = rhs.as_term() {
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rat> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rat) -> fmt::Result {
    let coeff = if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    };
    let wrapped = if c.is_negative() || !c.is_integer() {
        format!("({})", coeff)
    } else {
        coeff
    };
    if m.is_one() {
        write!(f, "{}", wrapped)
    } else if c.is_one() {
        write!(f, "{}", m)
    } else {
        write!(f, "{}*{}", wrapped, m)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            fmt_coeff_term(f, m, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
