use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::gcd::gcd;
use super::monomial::{Monomial, Var, MAX_VARS, NUM_PARAMS};
use super::poly::{rat, LaurentPoly, Rat};
use super::AlgebraError;

/// Exact rational function in canonical form.
///
/// The denominator is a polynomial without monomial content, with
/// coprime integer coefficients and positive leading coefficient; the
/// numerator absorbs all units and is coprime to the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    /// num/den reduced to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero {
                numerator: num.to_string(),
                denominator: "0".into(),
            });
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (c, m, d) = den.split_unit();
        let num = num.mul_term(&m.inv(), &c.recip());
        if d.is_one() {
            return RatFunc { num, den: d };
        }
        let g = gcd(&num, &d);
        if g.is_one() {
            return RatFunc { num, den: d };
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let d = d.div_exact(&g).expect("gcd divides denominator");
        let (c, m, d) = d.split_unit();
        RatFunc { num: num.mul_term(&m.inv(), &c.recip()), den: d }
    }

    /// Assembles a value from parts already known to be coprime, fixing
    /// only the unit normalization of the denominator.
    pub(crate) fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (c, m, d) = den.split_unit();
        RatFunc { num: num.mul_term(&m.inv(), &c.recip()), den: d }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Number of stored terms, used as a pivoting cost.
    pub fn complexity(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.num.depends_on(v) || self.den.depends_on(v)
    }

    pub fn var_mask(&self) -> u32 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn vars_used(&self) -> Vec<Var> {
        let mask = self.var_mask();
        (0..MAX_VARS).filter(|i| mask & (1 << i) != 0).map(|i| Var(i as u8)).collect()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero {
                numerator: "1".into(),
                denominator: self.to_string(),
            });
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero {
                numerator: self.to_string(),
                denominator: other.to_string(),
            });
        }
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        RatFunc { num: self.num.mul_monomial(m), den: self.den.clone() }
    }

    pub fn pow(&self, k: i32) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs();
        Ok(RatFunc::from_coprime(base.num.pow(k), base.den.pow(k)))
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(it: I) -> RatFunc {
        let items: Vec<&RatFunc> = it.into_iter().collect();
        balanced_sum(&items)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a RatFunc>>(it: I) -> RatFunc {
        let mut acc = RatFunc::one();
        for x in it {
            acc = &acc * x;
        }
        acc
    }

    /// Canonical string "(num)/(den)" or just the numerator.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Structured JSON form with exact coefficient strings.
    pub fn to_json(&self) -> Value {
        let mask = self.var_mask() | ((1 << NUM_PARAMS) - 1);
        let vars: Vec<Var> = (0..MAX_VARS).filter(|i| mask & (1 << i) != 0).map(|i| Var(i as u8)).collect();
        let enc = |p: &LaurentPoly| -> Value {
            Value::Array(
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        let exps: Vec<i32> = vars.iter().map(|&v| m.exp(v)).collect();
                        json!([c.to_string(), exps])
                    })
                    .collect(),
            )
        };
        json!({
            "num": enc(&self.num),
            "den": enc(&self.den),
            "vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`RatFunc::to_json`].
    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let bad = |why: &str| AlgebraError::Parse(why.to_string());
        let vars: Vec<Var> = v["vars"]
            .as_array()
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|s| s.as_str().and_then(Var::from_name).ok_or_else(|| bad("unknown variable")))
            .collect::<Result<_, _>>()?;
        let dec = |key: &str| -> Result<LaurentPoly, AlgebraError> {
            let arr = v[key].as_array().ok_or_else(|| bad("missing term list"))?;
            let mut terms = Vec::new();
            for t in arr {
                let c: Rat = t[0]
                    .as_str()
                    .ok_or_else(|| bad("coefficient must be a string"))?
                    .parse()
                    .map_err(|_| bad("bad coefficient"))?;
                let exps = t[1].as_array().ok_or_else(|| bad("missing exponents"))?;
                if exps.len() != vars.len() {
                    return Err(bad("exponent length mismatch"));
                }
                let mut m = Monomial::one();
                for (var, e) in vars.iter().zip(exps) {
                    m.0[var.index()] = e.as_i64().ok_or_else(|| bad("bad exponent"))? as i32;
                }
                terms.push((m, c));
            }
            Ok(LaurentPoly::from_terms(terms))
        };
        RatFunc::new(dec("num")?, dec("den")?)
    }
}

fn balanced_sum(items: &[&RatFunc]) -> RatFunc {
    match items.len() {
        0 => RatFunc::zero(),
        1 => items[0].clone(),
        n => {
            let (a, b) = items.split_at(n / 2);
            &balanced_sum(a) + &balanced_sum(b)
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num: n, den: self.den.clone() };
            }
            return RatFunc::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::from_coprime(&self.num * &rhs.den + rhs.num.clone(), rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::from_coprime(&rhs.num * &self.den + self.num.clone(), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::from_coprime(n, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &d1) + &(&rhs.num * &b1);
        if n.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&n, &g);
        if g2.is_one() {
            return RatFunc::from_coprime(n, &(&b1 * &d1) * &g);
        }
        let n = n.div_exact(&g2).expect("gcd divides");
        let g = g.div_exact(&g2).expect("gcd divides");
        RatFunc::from_coprime(n, &(&b1 * &d1) * &g)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

/// Division panics on a zero divisor; use [`RatFunc::checked_div`] to get
/// the error value instead.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_div(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::constant(rat(n))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }
    fn t() -> RatFunc {
        RatFunc::var(Var::T)
    }
    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn inverse_pair() {
        let a = (&one() - &q()) / (&one() - &t());
        let b = (&one() - &t()) / (&one() - &q());
        assert!((&a * &b).is_one());
    }

    #[test]
    fn additive_inverse() {
        let qt = &q() * &t();
        assert!((&qt + &(-&qt)).is_zero());
    }

    #[test]
    fn norm_value_reduces() {
        let m = |a: i32, b: i32| RatFunc::monomial(Monomial::from_pairs(&[(Var::Q, a), (Var::T, b)]));
        let num = &(&one() - &m(4, 2)) * &(&one() - &m(2, 1));
        let den = &(&one() - &m(3, 3)) * &(&one() - &m(1, 2));
        let r = &num / &den;
        assert_eq!(r.to_string(), "(q^6*t^3 + (-1)*q^4*t^2 + (-1)*q^2*t + 1)/(q^4*t^5 + (-1)*q^3*t^3 + (-1)*q*t^2 + 1)");
        // equality is exact cross-multiplication
        assert!((&(&r * &den) - &num).is_zero());
    }

    #[test]
    fn common_factors_cancel() {
        let a = &(&one() - &(&q() * &t())) * &(&one() - &q());
        let b = &(&one() - &(&q() * &t())) * &(&one() - &t());
        let r = &a / &b;
        assert_eq!(r, (&one() - &q()) / (&one() - &t()));
    }

    #[test]
    fn monomial_content_moves_to_numerator() {
        let d = RatFunc::var(Var::DD);
        let r = &one() / &(&d * &(&one() - &q()));
        assert!(r.den().monomial_content().is_one());
        assert_eq!(r.num().terms()[0].0, Monomial::var_pow(Var::DD, -1));
    }

    #[test]
    fn division_by_zero_reports_operands() {
        let err = q().checked_div(&RatFunc::zero()).unwrap_err();
        assert!(matches!(err, AlgebraError::DivisionByZero { .. }));
        assert!(err.to_string().contains('q'));
    }

    #[test]
    fn json_round_trip() {
        let r = (&q() - &RatFunc::constant(Rat::new(3.into(), 7.into()))) / (&one() - &(&q() * &t()));
        let j = r.to_json();
        assert_eq!(RatFunc::from_json(&j).unwrap(), r);
        assert_eq!(j["vars"].as_array().unwrap().len(), 6);
    }
}
