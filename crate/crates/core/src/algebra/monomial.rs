use std::cmp::Ordering;
use std::fmt;

/// Number of variable slots carried by every exponent vector.
pub const MAX_VARS: usize = 16;

/// Number of named parameters that precede the shuffle variables.
pub const NUM_PARAMS: usize = 6;

/// A variable slot.  Slots 0..6 are the fixed parameters
/// (𝔮, 𝔡, υ, u, q, t); higher slots are anonymous shuffle variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u8);

impl Var {
    /// 𝔮
    pub const QQ: Var = Var(0);
    /// 𝔡
    pub const DD: Var = Var(1);
    /// υ, the spectral parameter of the Fock representations.
    pub const UPS: Var = Var(2);
    /// u, the deformation parameter.
    pub const U: Var = Var(3);
    pub const Q: Var = Var(4);
    pub const T: Var = Var(5);

    /// The k-th shuffle variable slot.
    pub fn shuffle(k: usize) -> Var {
        assert!(NUM_PARAMS + k < MAX_VARS, "too many shuffle variables ({})", k + 1);
        Var((NUM_PARAMS + k) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        match self.0 {
            0 => "Q".into(),
            1 => "D".into(),
            2 => "v".into(),
            3 => "u".into(),
            4 => "q".into(),
            5 => "t".into(),
            k => format!("x{}", k as usize - NUM_PARAMS),
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "Q" => Some(Var::QQ),
            "D" => Some(Var::DD),
            "v" => Some(Var::UPS),
            "u" => Some(Var::U),
            "q" => Some(Var::Q),
            "t" => Some(Var::T),
            _ => {
                let k: usize = s.strip_prefix('x')?.parse().ok()?;
                (NUM_PARAMS + k < MAX_VARS).then(|| Var((NUM_PARAMS + k) as u8))
            }
        }
    }
}

/// Exponent vector over the fixed variable slots.  Ordered by graded
/// lexicographic order: total degree first, then exponents compared slot by slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    /// Build from (variable, exponent) pairs; repeated variables accumulate.
    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Self::one();
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        r
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a *= k;
        }
        r
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        r
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn with_exp(&self, v: Var, e: i32) -> Monomial {
        let mut r = *self;
        r.0[v.index()] = e;
        r
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (Var(i as u8), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}
