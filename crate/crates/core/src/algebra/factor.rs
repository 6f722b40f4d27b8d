use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{LaurentPoly, Rat};
use super::ratfunc::RatFunc;
use super::AlgebraError;

/// A product c · m · ∏ fᵢ^{eᵢ} of normalized polynomial factors, kept
/// unexpanded so that equal factors cancel by exponent arithmetic before
/// any GCD work happens.
#[derive(Clone, Debug)]
pub struct FactorList {
    coeff: Rat,
    monomial: Monomial,
    factors: Vec<(LaurentPoly, i32)>,
}

impl Default for FactorList {
    fn default() -> Self {
        Self::one()
    }
}

impl FactorList {
    pub fn one() -> Self {
        FactorList { coeff: Rat::one(), monomial: Monomial::one(), factors: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The scalar and monomial parts c, m.
    pub fn unit(&self) -> (&Rat, Monomial) {
        (&self.coeff, self.monomial)
    }

    pub fn factors(&self) -> &[(LaurentPoly, i32)] {
        &self.factors
    }

    /// Multiplies by p^e.  A zero factor with e > 0 makes the product zero;
    /// with e < 0 it is a pole and reported as an error.
    pub fn push(&mut self, p: &LaurentPoly, e: i32) -> Result<(), AlgebraError> {
        if e == 0 || self.is_zero() {
            return Ok(());
        }
        if p.is_zero() {
            if e > 0 {
                self.coeff = Rat::zero();
                self.factors.clear();
                return Ok(());
            }
            return Err(AlgebraError::DivisionByZero {
                numerator: "factor list".into(),
                denominator: "0".into(),
            });
        }
        let (c, m, f) = p.split_unit();
        self.monomial = self.monomial.mul(&m.pow(e));
        if e > 0 {
            for _ in 0..e {
                self.coeff *= &c;
            }
        } else {
            for _ in 0..(-e) {
                self.coeff /= &c;
            }
        }
        if f.is_one() {
            return Ok(());
        }
        if let Some(slot) = self.factors.iter_mut().find(|(g, _)| *g == f) {
            slot.1 += e;
        } else {
            self.factors.push((f, e));
        }
        self.factors.retain(|(_, k)| *k != 0);
        Ok(())
    }

    pub fn scale(&mut self, c: &Rat) {
        self.coeff *= c;
        if self.coeff.is_zero() {
            self.factors.clear();
        }
    }

    pub fn mul_monomial(&mut self, m: &Monomial) {
        self.monomial = self.monomial.mul(m);
    }

    pub fn extend(&mut self, other: &FactorList) {
        if other.is_zero() {
            self.coeff = Rat::zero();
            self.factors.clear();
            return;
        }
        self.coeff *= &other.coeff;
        self.monomial = self.monomial.mul(&other.monomial);
        for (f, e) in &other.factors {
            if let Some(slot) = self.factors.iter_mut().find(|(g, _)| g == f) {
                slot.1 += e;
            } else {
                self.factors.push((f.clone(), *e));
            }
        }
        self.factors.retain(|(_, k)| *k != 0);
    }

    /// Expanded numerator and denominator (not reduced).
    pub fn expand(&self) -> (LaurentPoly, LaurentPoly) {
        if self.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::one());
        }
        let mut num = LaurentPoly::term(self.monomial, self.coeff.clone());
        let mut den = LaurentPoly::one();
        let mut sorted: Vec<&(LaurentPoly, i32)> = self.factors.iter().collect();
        sorted.sort_by_key(|(f, _)| f.len());
        for (f, e) in sorted {
            if *e > 0 {
                num = &num * &f.pow(*e as u32);
            } else {
                den = &den * &f.pow((-*e) as u32);
            }
        }
        (num, den)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let (num, den) = self.expand();
        RatFunc::new(num, den).expect("factor list denominators are nonzero")
    }
}

/// Σ terms over the least common factored denominator.  Denominator factors
/// that divide the summed numerator are cancelled by exact division before
/// the final reduction.
pub fn sum_factored(terms: &[FactorList]) -> RatFunc {
    let terms: Vec<&FactorList> = terms.iter().filter(|t| !t.is_zero()).collect();
    let mut den: Vec<(LaurentPoly, i32)> = Vec::new();
    for t in &terms {
        for (f, e) in &t.factors {
            if *e >= 0 {
                continue;
            }
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 = slot.1.max(-e),
                None => den.push((f.clone(), -e)),
            }
        }
    }
    let mut num = LaurentPoly::zero();
    for t in &terms {
        let mut part = LaurentPoly::term(t.monomial, t.coeff.clone());
        for (f, e) in &t.factors {
            if *e > 0 {
                part = &part * &f.pow(*e as u32);
            }
        }
        for (f, d) in &den {
            let have = t.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| (-e).max(0));
            if *d > have {
                part = &part * &f.pow((*d - have) as u32);
            }
        }
        num = &num + &part;
    }
    if num.is_zero() {
        return RatFunc::zero();
    }
    for (f, d) in den.iter_mut() {
        while *d > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    *d -= 1;
                }
                None => break,
            }
        }
    }
    let mut denominator = LaurentPoly::one();
    for (f, d) in &den {
        if *d > 0 {
            denominator = &denominator * &f.pow(*d as u32);
        }
    }
    if den.iter().all(|(f, d)| *d == 0 || is_binomial_linear(f)) {
        return RatFunc::from_coprime(num, denominator);
    }
    RatFunc::new(num, denominator).expect("factor list denominators are nonzero")
}

/// c₁m₁ + c₂m₂ with no common monomial factor and some variable of degree
/// exactly one in m₁ and zero in m₂, so a·v + b with coprime monomials a, b:
/// irreducible.
fn is_binomial_linear(f: &LaurentPoly) -> bool {
    let [(m1, _), (m2, _)] = f.terms() else {
        return false;
    };
    if !m1.gcd(m2).is_one() {
        return false;
    }
    f.vars_used().into_iter().any(|v| {
        let (a, b) = (m1.exp(v), m2.exp(v));
        (a == 1 && b == 0) || (a == 0 && b == 1)
    })
}
