//! The N±/M± normalization scalars, norms and Pieri coefficients on the
//! shuffle route.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use once_cell::sync::Lazy;
use serde_json::{json, Value};

use crate::algebra::{to_qt, Monomial, RatFunc, Substitution, Var};
use crate::partition::{peel_last_column, peel_last_row, Partition};

use super::fock::{sym_matrix_element, Rep, ShuffleInput, UpsilonMode};
use super::kernel::{kernel_e, kernel_h, KernelKind, ShuffleKernel};
use super::ToroidalError;

/// One of the four normalization scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    NMinus,
    MMinus,
    NPlus,
    MPlus,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::NMinus, Route::MMinus, Route::NPlus, Route::MPlus];

    pub fn rep(self) -> Rep {
        match self {
            Route::NMinus | Route::MMinus => Rep::Minus,
            Route::NPlus | Route::MPlus => Rep::Plus,
        }
    }

    /// The kernel family whose matrix elements build this scalar.
    pub fn kernel_kind(self) -> KernelKind {
        match self {
            Route::NMinus | Route::MPlus => KernelKind::E,
            Route::MMinus | Route::NPlus => KernelKind::H,
        }
    }

    /// N scalars peel columns of the quotient, M scalars rows.
    pub fn peels_columns(self) -> bool {
        matches!(self, Route::NMinus | Route::NPlus)
    }

    pub fn name(self) -> &'static str {
        match self {
            Route::NMinus => "N-",
            Route::MMinus => "M-",
            Route::NPlus => "N+",
            Route::MPlus => "M+",
        }
    }

    pub fn parse(s: &str) -> Option<Route> {
        Route::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn kernel(self, p: usize, n: usize, ell: usize) -> Result<ShuffleKernel, ToroidalError> {
        match self.kernel_kind() {
            KernelKind::E => kernel_e(p, n, ell),
            _ => kernel_h(p, n, ell),
        }
    }
}

fn qq(e: i32) -> RatFunc {
    RatFunc::monomial(Monomial::var_pow(Var::QQ, e))
}

/// The scalar relating a Pieri operator to Ψ(E) or Ψ(H), in the route's
/// 𝔮, 𝔡 dictionary (where qt = 𝔮² on the minus side and 𝔮⁻² on the plus side).
pub fn pieri_constants(route: Route, n: usize, ell: usize) -> RatFunc {
    let one = RatFunc::one();
    let n_i = n as i32;
    let nl = (n * ell) as i32;
    match route {
        Route::NMinus | Route::MMinus => {
            let qt = 2;
            let mut den = RatFunc::one();
            for r in 1..=n_i {
                den = &den * &(&one - &qq(-qt * r));
            }
            let c = &(&one - &qq(qt)).pow(nl).expect("nonzero") / &den;
            if route == Route::MMinus {
                &c * &qq(-qt * n_i)
            } else {
                c
            }
        }
        Route::NPlus | Route::MPlus => {
            let qt = -2;
            let mut den = RatFunc::one();
            for r in 1..=n_i {
                den = &den * &(&one - &qq(qt * r));
            }
            let sign = if n % 2 == 0 { RatFunc::one() } else { RatFunc::int(-1) };
            let c = &(&sign * &(&qq(1) - &qq(-1)).pow(nl).expect("nonzero")) / &den;
            if route == Route::NPlus {
                &c * &qq(qt * n_i)
            } else {
                c
            }
        }
    }
}

type NormKey = (Partition, usize, Route, UpsilonMode);

static NORMALIZATIONS: Lazy<Mutex<HashMap<NormKey, RatFunc>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// N or M of λ at (q, t⁻¹), as a function of 𝔮, 𝔡 (and υ when symbolic).
pub fn normalization(lambda: &Partition, ell: usize, route: Route, ups: UpsilonMode) -> Result<RatFunc, ToroidalError> {
    if ell < 3 {
        return Err(ToroidalError::UnsupportedRank(ell));
    }
    let key = (lambda.clone(), ell, route, ups);
    if let Some(v) = NORMALIZATIONS.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = if lambda.is_core(ell) {
        RatFunc::one()
    } else {
        let (smaller, p, n) = if route.peels_columns() { peel_last_column(lambda, ell)? } else { peel_last_row(lambda, ell)? };
        let kernel = route.kernel(p, n, ell)?;
        let me = sym_matrix_element(ShuffleInput::Kernel(&kernel), &smaller, lambda, route.rep(), ell, ups)?;
        let prev = normalization(&smaller, ell, route, ups)?;
        &(&pieri_constants(route, n, ell) * &me.value) * &prev
    };
    NORMALIZATIONS.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormScalars {
    pub lambda: Partition,
    pub n_minus: RatFunc,
    pub m_minus: RatFunc,
    pub n_plus: RatFunc,
    pub m_plus: RatFunc,
}

impl NormScalars {
    pub fn compute(lambda: &Partition, ell: usize, ups: UpsilonMode) -> Result<Self, ToroidalError> {
        Ok(NormScalars {
            lambda: lambda.clone(),
            n_minus: normalization(lambda, ell, Route::NMinus, ups)?,
            m_minus: normalization(lambda, ell, Route::MMinus, ups)?,
            n_plus: normalization(lambda, ell, Route::NPlus, ups)?,
            m_plus: normalization(lambda, ell, Route::MPlus, ups)?,
        })
    }

    pub fn get(&self, route: Route) -> &RatFunc {
        match route {
            Route::NMinus => &self.n_minus,
            Route::MMinus => &self.m_minus,
            Route::NPlus => &self.n_plus,
            Route::MPlus => &self.m_plus,
        }
    }

    /// One JSON record per scalar.
    pub fn records(&self) -> Vec<Value> {
        Route::ALL.iter().map(|r| scalar_record(&self.lambda, *r, self.get(*r))).collect()
    }
}

pub fn scalar_record(lambda: &Partition, route: Route, value: &RatFunc) -> Value {
    json!({
        "lambda": lambda.to_json(),
        "route": route.name(),
        "value": value.to_json(),
        "params": route.rep().matching().name(),
    })
}

/// Which side of the shuffle route computes a norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormRoute {
    /// N⁻_λ/M⁻_λ
    Minus,
    /// N⁺_λ/M⁺_λ
    Plus,
}

fn invert(v: Var) -> Substitution {
    Substitution::new().map_monomial(v, Monomial::var_pow(v, -1))
}

/// N/M of μ on one side, as a function of (q, t): the scalars are computed
/// at (q, t⁻¹), so t is inverted after conversion.
fn ratio_qt(mu: &Partition, ell: usize, rep: Rep, ups: UpsilonMode) -> Result<RatFunc, ToroidalError> {
    let (n, m) = match rep {
        Rep::Minus => (Route::NMinus, Route::MMinus),
        Rep::Plus => (Route::NPlus, Route::MPlus),
    };
    let ratio = &normalization(mu, ell, n, ups)? / &normalization(mu, ell, m, ups)?;
    let at = to_qt(&ratio, rep.matching())?
        .expressible()
        .ok_or_else(|| ToroidalError::NotExpressible(format!("ratio {ratio} for {mu}")))?;
    Ok(invert(Var::T).apply(&at)?)
}

/// ⟨P*_{ᵗλ}, P_λ⟩_{q,t} from the normalization scalars.
pub fn norm_toroidal(lambda: &Partition, ell: usize, route: NormRoute, ups: UpsilonMode) -> Result<RatFunc, ToroidalError> {
    match route {
        NormRoute::Minus => ratio_qt(lambda, ell, Rep::Minus, ups),
        NormRoute::Plus => ratio_qt(lambda, ell, Rep::Plus, ups),
    }
}

/// N⁺_{ᵗλ}(t, q)/M⁺_{ᵗλ}(t, q).  This is the reciprocal of the norm on every
/// case checked, so it is not used by `norm_toroidal`.
pub fn transposed_plus_ratio(lambda: &Partition, ell: usize, ups: UpsilonMode) -> Result<RatFunc, ToroidalError> {
    let r = ratio_qt(&lambda.transpose(), ell, Rep::Plus, ups)?;
    Ok(Substitution::new()
        .map_monomial(Var::Q, Monomial::var(Var::T))
        .map_monomial(Var::T, Monomial::var(Var::Q))
        .apply(&r)?)
}

/// Which Pieri multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieriMultiplier {
    /// e_n[X^{(p)}]
    E,
    /// h_n[(1 − tσ⁻¹)/(1 − qσ⁻¹) X^{(p)}]
    DualH,
}

/// Partitions obtained from μ by adding n nodes of every color.
pub fn pieri_candidates(mu: &Partition, n: usize, ell: usize) -> Vec<Partition> {
    let mut layer: BTreeSet<(Partition, Vec<usize>)> = BTreeSet::new();
    layer.insert((mu.clone(), vec![0; ell]));
    for _ in 0..n * ell {
        let mut next = BTreeSet::new();
        for (p, counts) in &layer {
            for s in p.addable() {
                let c = s.color(ell);
                if counts[c] < n {
                    let mut k = counts.clone();
                    k[c] += 1;
                    next.insert((p.add_node(s).expect("addable"), k));
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(|(p, _)| p).collect()
}

/// Coefficients of P_λ in (multiplier)·P_μ, computed from matrix elements of
/// E or H in τ⁻ and the N⁻ scalars, returned in q, t.
pub fn wreath_pieri_toroidal(
    mu: &Partition,
    p: usize,
    n: usize,
    ell: usize,
    kind: PieriMultiplier,
    ups: UpsilonMode,
) -> Result<BTreeMap<Partition, RatFunc>, ToroidalError> {
    if ell < 3 {
        return Err(ToroidalError::UnsupportedRank(ell));
    }
    let route = match kind {
        PieriMultiplier::E => Route::NMinus,
        PieriMultiplier::DualH => Route::MMinus,
    };
    let kernel = match kind {
        PieriMultiplier::E => kernel_e(p, n, ell)?,
        PieriMultiplier::DualH => kernel_h(p, n, ell)?,
    };
    let c = pieri_constants(route, n, ell);
    let n_mu = normalization(mu, ell, Route::NMinus, ups)?;
    let mut out = BTreeMap::new();
    for lambda in pieri_candidates(mu, n, ell) {
        let me = sym_matrix_element(ShuffleInput::Kernel(&kernel), mu, &lambda, Rep::Minus, ell, ups)?;
        if me.value.is_zero() {
            continue;
        }
        let n_lambda = normalization(&lambda, ell, Route::NMinus, ups)?;
        let v = &(&(&c * &me.value) * &n_mu) / &n_lambda;
        let at = to_qt(&v, crate::algebra::Matching::Minus)?
            .expressible()
            .ok_or_else(|| ToroidalError::NotExpressible(format!("Pieri coefficient {v} for {mu} → {lambda}")))?;
        out.insert(lambda, invert(Var::T).apply(&at)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{mono, Matching};

    fn p(x: &[u32]) -> Partition {
        Partition::new(x.to_vec()).unwrap()
    }

    fn qt(a: i32, b: i32) -> RatFunc {
        mono(&[(Var::Q, a), (Var::T, b)])
    }

    fn minus(f: &RatFunc) -> RatFunc {
        Matching::Minus.substitution().apply(f).unwrap()
    }

    #[test]
    fn constants() {
        let one = RatFunc::one();
        let want = &(&one - &qt(1, 1)).pow(3).unwrap() / &(&one - &qt(-1, -1));
        assert_eq!(pieri_constants(Route::NMinus, 1, 3), minus(&want));
        assert_eq!(pieri_constants(Route::MMinus, 1, 3), minus(&(&want / &qt(1, 1))));
        let want = &(&(&one - &qt(1, 1)).pow(6).unwrap() / &qt(2, 2))
            / &(&(&one - &qt(-1, -1)) * &(&one - &qt(-2, -2)));
        assert_eq!(pieri_constants(Route::MMinus, 2, 3), minus(&want));
    }

    #[test]
    fn small_example() {
        let l = p(&[2, 2, 1]);
        let n = normalization(&l, 3, Route::NMinus, UpsilonMode::One).unwrap();
        let want = &(&(&qt(-1, 0) - &qt(1, -1)) * &qt(1, 3)) * &RatFunc::int(-1);
        assert_eq!(n, minus(&want));
        let m = normalization(&l, 3, Route::MMinus, UpsilonMode::One).unwrap();
        let want = &(&(&qt(-1, 0) - &qt(0, -2)) * &qt(1, 3)) * &RatFunc::int(-1);
        assert_eq!(m, minus(&want));
        let one = RatFunc::one();
        let norm = &(&one - &qt(2, 1)) / &(&one - &qt(1, 2));
        assert_eq!(norm_toroidal(&l, 3, NormRoute::Minus, UpsilonMode::One).unwrap(), norm);
    }

    #[test]
    fn core_is_base_case() {
        for r in Route::ALL {
            assert!(normalization(&p(&[2]), 3, r, UpsilonMode::One).unwrap().is_one());
        }
        assert!(norm_toroidal(&p(&[1, 1]), 3, NormRoute::Plus, UpsilonMode::One).unwrap().is_one());
        assert!(matches!(normalization(&p(&[2]), 2, Route::NMinus, UpsilonMode::One), Err(ToroidalError::UnsupportedRank(2))));
    }

    #[test]
    fn candidates() {
        // core (2), one node of each color
        let c = pieri_candidates(&p(&[2]), 1, 3);
        assert!(c.contains(&p(&[2, 2, 1])));
        assert!(c.iter().all(|l| l.size() == 5));
    }
}
