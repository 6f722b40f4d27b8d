//! Color-mixing plethystic transformations of Λ^{⊗ℓ}.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::algebra::{Monomial, RatFunc, Substitution};

/// ψ_k: every parameter v ↦ v^k.
pub fn adams(f: &RatFunc, k: u32) -> RatFunc {
    if k == 1 {
        return f.clone();
    }
    let mut s = Substitution::new();
    for v in f.vars_used() {
        s = s.map_monomial(v, Monomial::var_pow(v, k as i32));
    }
    s.apply(f).expect("ψ_k of a nonzero denominator is nonzero")
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// σ^m: X^{(i)} ↦ X^{(i+m)}
    Shift(i64),
    /// ι: X^{(i)} ↦ X^{(−i)}
    Negation,
    /// X ↦ −X
    SignFlip,
    /// X ↦ sX
    Scale(RatFunc),
    /// (1 − s σ^e), or its inverse
    Series { s: RatFunc, e: i64, inverse: bool },
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Shift(m) => write!(f, "σ^{}", m),
            Generator::Negation => write!(f, "ι"),
            Generator::SignFlip => write!(f, "(−1)"),
            Generator::Scale(s) => write!(f, "[{}]", s),
            Generator::Series { s, e, inverse: false } => write!(f, "(1 − {}σ^{})", s, e),
            Generator::Series { s, e, inverse: true } => write!(f, "(1 − {}σ^{})⁻¹", s, e),
        }
    }
}

/// A word A₁A₂⋯A_k of generators acting on the alphabets; f ↦ f[A₁⋯A_k X•].
/// Per degree it is realized as an ℓ×ℓ matrix whose column i holds the
/// coefficients of p_k[A X^{(i)}] on p_k(0), …, p_k(ℓ−1).
pub struct PlethysticTransform {
    ell: usize,
    word: Vec<Generator>,
    cache: Mutex<HashMap<u32, Vec<Vec<RatFunc>>>>,
}

impl Clone for PlethysticTransform {
    fn clone(&self) -> Self {
        PlethysticTransform { ell: self.ell, word: self.word.clone(), cache: Mutex::new(HashMap::new()) }
    }
}

impl fmt::Debug for PlethysticTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlethysticTransform(ℓ={}, {})", self.ell, self)
    }
}

impl fmt::Display for PlethysticTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "id");
        }
        for g in &self.word {
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

impl PlethysticTransform {
    pub fn identity(ell: usize) -> Self {
        Self::from_word(ell, Vec::new())
    }

    pub fn from_word(ell: usize, word: Vec<Generator>) -> Self {
        assert!(ell >= 1);
        PlethysticTransform { ell, word, cache: Mutex::new(HashMap::new()) }
    }

    pub fn generator(ell: usize, g: Generator) -> Self {
        Self::from_word(ell, vec![g])
    }

    pub fn shift(ell: usize, m: i64) -> Self {
        Self::generator(ell, Generator::Shift(m))
    }

    pub fn negation(ell: usize) -> Self {
        Self::generator(ell, Generator::Negation)
    }

    pub fn sign_flip(ell: usize) -> Self {
        Self::generator(ell, Generator::SignFlip)
    }

    pub fn scale(ell: usize, s: RatFunc) -> Self {
        Self::generator(ell, Generator::Scale(s))
    }

    /// (1 − sσ^e)
    pub fn one_minus(ell: usize, s: RatFunc, e: i64) -> Self {
        Self::generator(ell, Generator::Series { s, e, inverse: false })
    }

    /// (1 − sσ^e)⁻¹
    pub fn one_minus_inv(ell: usize, s: RatFunc, e: i64) -> Self {
        Self::generator(ell, Generator::Series { s, e, inverse: true })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    /// self ∘ other: f ↦ f[self·other X•].
    pub fn compose(&self, other: &PlethysticTransform) -> PlethysticTransform {
        assert_eq!(self.ell, other.ell, "composing transforms of different rank");
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Self::from_word(self.ell, word)
    }

    /// Matrix of the degree-k action.
    pub fn matrix(&self, k: u32) -> Vec<Vec<RatFunc>> {
        if let Some(m) = self.cache.lock().expect("plethysm cache poisoned").get(&k) {
            return m.clone();
        }
        let l = self.ell;
        let mut acc = identity(l);
        for g in &self.word {
            acc = mat_mul(&acc, &generator_matrix(g, l, k));
        }
        self.cache.lock().expect("plethysm cache poisoned").insert(k, acc.clone());
        acc
    }
}

impl std::ops::Mul for &PlethysticTransform {
    type Output = PlethysticTransform;

    fn mul(self, rhs: &PlethysticTransform) -> PlethysticTransform {
        self.compose(rhs)
    }
}

fn identity(l: usize) -> Vec<Vec<RatFunc>> {
    (0..l).map(|i| (0..l).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect()
}

fn idx(i: i64, l: usize) -> usize {
    i.rem_euclid(l as i64) as usize
}

fn generator_matrix(g: &Generator, l: usize, k: u32) -> Vec<Vec<RatFunc>> {
    let mut m = vec![vec![RatFunc::zero(); l]; l];
    match g {
        Generator::Shift(s) => {
            for i in 0..l {
                m[idx(i as i64 + s, l)][i] = RatFunc::one();
            }
        }
        Generator::Negation => {
            for i in 0..l {
                m[idx(-(i as i64), l)][i] = RatFunc::one();
            }
        }
        Generator::SignFlip => {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = -RatFunc::one();
            }
        }
        Generator::Scale(s) => {
            let sk = adams(s, k);
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = sk.clone();
            }
        }
        Generator::Series { s, e, inverse: false } => {
            let sk = adams(s, k);
            for i in 0..l {
                m[i][i] = &m[i][i] + &RatFunc::one();
                let j = idx(i as i64 + e, l);
                m[j][i] = &m[j][i] - &sk;
            }
        }
        Generator::Series { s, e, inverse: true } => {
            let sk = adams(s, k);
            let den = &RatFunc::one() - &sk.pow(l as i32).expect("nonnegative power");
            let mut pw = den.inv().expect("1 − s^{kℓ} is nonzero for a nonconstant s");
            for j in 0..l {
                for i in 0..l {
                    let t = idx(i as i64 + e * j as i64, l);
                    m[t][i] = &m[t][i] + &pw;
                }
                pw = &pw * &sk;
            }
        }
    }
    m
}

pub fn mat_mul(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let n = a.len();
    let p = b.first().map(|r| r.len()).unwrap_or(0);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let terms: Vec<RatFunc> =
                        (0..b.len()).filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero()).map(|k| &a[i][k] * &b[k][j]).collect();
                    RatFunc::sum(terms.iter())
                })
                .collect()
        })
        .collect()
}
