//! Matrix elements on the Fock space: the node-wise formulas for single
//! currents and the symmetrization formulas for shuffle elements.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{limit_at_one, rat, split_root_at_one, FactorList, LaurentPoly, Matching, Monomial, RatFunc, Substitution, Var};
use crate::partition::{Node, Partition};

use super::kernel::ShuffleKernel;
use super::shuffle::{balanced_sum, color_permutations, ShuffleElement};
use super::ToroidalError;

/// The two Fock representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rep {
    /// τ⁻, highest weight; shuffle elements act through Ψ₋.
    Minus,
    /// τ⁺, lowest weight; shuffle elements act through Ψ₊.
    Plus,
}

impl Rep {
    pub fn matching(self) -> Matching {
        match self {
            Rep::Minus => Matching::Minus,
            Rep::Plus => Matching::Plus,
        }
    }

    /// χ_□ = q^{a−1}t^{b−1} in 𝔮, 𝔡.
    pub fn character(self, n: Node) -> Monomial {
        let (a, b) = ((n.a - 1) as i32, (n.b - 1) as i32);
        match self {
            Rep::Minus => Monomial::from_pairs(&[(Var::QQ, a + b), (Var::DD, a - b)]),
            Rep::Plus => Monomial::from_pairs(&[(Var::QQ, -a - b), (Var::DD, a - b)]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UpsilonMode {
    One,
    Symbolic,
}

impl UpsilonMode {
    pub fn monomial(self) -> Monomial {
        match self {
            UpsilonMode::One => Monomial::one(),
            UpsilonMode::Symbolic => Monomial::var(Var::UPS),
        }
    }
}

/// Exponents e(□) of the deformation x_□ = χ_□ υ u^{e(□)}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Deformation {
    /// 1, 2, 3, … in content-then-row order.
    ContentRow,
    /// 2, 3, 5, 7, … in content-then-row order.
    Primes,
}

fn primes(k: usize) -> Vec<i32> {
    let mut out = Vec::with_capacity(k);
    let mut c = 2;
    while out.len() < k {
        if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

fn exponents(nodes: &[Node], d: &Deformation) -> BTreeMap<Node, i32> {
    let mut sorted = nodes.to_vec();
    sorted.sort_by_key(|n| (n.content(), n.b));
    let vals: Vec<i32> = match d {
        Deformation::ContentRow => (1..=sorted.len() as i32).collect(),
        Deformation::Primes => primes(sorted.len()),
    };
    sorted.into_iter().zip(vals).collect()
}

fn mono_poly(m: Monomial) -> LaurentPoly {
    LaurentPoly::monomial(m)
}

fn ch(rep: Rep, n: Node) -> LaurentPoly {
    mono_poly(rep.character(n))
}

fn qd(a: i32, b: i32) -> LaurentPoly {
    mono_poly(Monomial::from_pairs(&[(Var::QQ, a), (Var::DD, b)]))
}

fn color_count(lambda: &Partition, i: usize, ell: usize) -> i32 {
    lambda.color_count(i, ell) as i32
}

/// Which current of the single-current formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    E,
    F,
    Psi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurrentValue {
    /// Target partition ↦ coefficient of the mode.
    Transitions(BTreeMap<Partition, RatFunc>),
    /// The eigenvalue of ψᵢ^±(z) as a function of z = `Z`.
    Eigenvalue(RatFunc),
}

/// The spectral variable of ψ eigenvalues.
pub const Z: Var = Var(crate::algebra::NUM_PARAMS as u8);

/// Matrix elements of the k-th mode of a single current on |λ⟩: for e and
/// f the map of targets to coefficients, for ψ its eigenvalue in z.
pub fn fock_single_current(
    lambda: &Partition,
    i: usize,
    k: i32,
    mode: Mode,
    rep: Rep,
    ell: usize,
    ups: UpsilonMode,
) -> Result<CurrentValue, ToroidalError> {
    if ell == 0 || i >= ell {
        return Err(ToroidalError::Domain(format!("color {i} is not below ℓ = {ell}")));
    }
    let v = ups.monomial();
    let (adds, rems) = lambda.addable_removable(i, ell);
    let fl = |p: &LaurentPoly, e: i32, l: &mut FactorList| l.push(p, e);
    let dd = |e: i32| -> RatFunc { RatFunc::from_poly(mono_poly(Monomial::var_pow(Var::DD, e)).scale(&rat(if e % 2 == 0 { 1 } else { -1 }))) };
    let mut out = BTreeMap::new();
    match (mode, rep) {
        (Mode::Psi, _) => {
            let z = LaurentPoly::var(Z);
            let mut l = FactorList::one();
            let (a_num, r_num) = match rep {
                Rep::Minus => ((1, -1), (-1, 1)),
                Rep::Plus => ((-1, 1), (1, -1)),
            };
            for (set, (x, y)) in [(&adds, a_num), (&rems, r_num)] {
                for b in set.iter() {
                    let cv = mono_poly(rep.character(*b).mul(&v));
                    fl(&(&(&qd(x, 0) * &z) - &(&qd(y, 0) * &cv)), 1, &mut l)?;
                    fl(&(&z - &cv), -1, &mut l)?;
                }
            }
            return Ok(CurrentValue::Eigenvalue(l.to_ratfunc()));
        }
        // additions: τ⁻ f and τ⁺ e
        (Mode::F, Rep::Minus) | (Mode::E, Rep::Plus) => {
            let d = color_count(lambda, (i + 1) % ell, ell);
            for s in &adds {
                let c = ch(rep, *s);
                let mut l = FactorList::one();
                for b in adds.iter().filter(|b| *b != s) {
                    let p = match rep {
                        Rep::Minus => &(&qd(1, 0) * &c) - &(&qd(-1, 0) * &ch(rep, *b)),
                        Rep::Plus => &c - &(&qd(2, 0) * &ch(rep, *b)),
                    };
                    fl(&p, 1, &mut l)?;
                }
                for b in &rems {
                    let p = match rep {
                        Rep::Minus => &qd(1, 0) * &(&c - &ch(rep, *b)),
                        Rep::Plus => &c - &ch(rep, *b),
                    };
                    fl(&p, -1, &mut l)?;
                }
                l.mul_monomial(&rep.character(*s).mul(&v).pow(k));
                let value = &dd(-d) * &l.to_ratfunc();
                out.insert(lambda.add_node(*s).expect("addable node"), value);
            }
        }
        // removals: τ⁻ e and τ⁺ f, written for ⟨λ − □| · |λ⟩
        (Mode::E, Rep::Minus) | (Mode::F, Rep::Plus) => {
            for s in &rems {
                let smaller = lambda.remove_node(*s).expect("removable node");
                let d = color_count(&smaller, (i + 1) % ell, ell);
                let (a2, r2) = smaller.addable_removable(i, ell);
                let c = ch(rep, *s);
                let mut l = FactorList::one();
                for b in &r2 {
                    let p = match rep {
                        Rep::Minus => &c - &(&qd(2, 0) * &ch(rep, *b)),
                        Rep::Plus => &(&qd(1, 0) * &c) - &(&qd(-1, 0) * &ch(rep, *b)),
                    };
                    fl(&p, 1, &mut l)?;
                }
                for b in a2.iter().filter(|b| *b != s) {
                    let p = match rep {
                        Rep::Minus => &c - &ch(rep, *b),
                        Rep::Plus => &qd(1, 0) * &(&c - &ch(rep, *b)),
                    };
                    fl(&p, -1, &mut l)?;
                }
                l.mul_monomial(&rep.character(*s).mul(&v).pow(k));
                out.insert(smaller, &dd(d) * &l.to_ratfunc());
            }
        }
    }
    Ok(CurrentValue::Transitions(out))
}

/// The permutation-independent factor of the symmetrization formula.
pub fn outer_factor(lambda: &Partition, new: &[Node], rep: Rep, ell: usize) -> Result<RatFunc, ToroidalError> {
    let old = lambda.nodes();
    let mut l = FactorList::one();
    let q = |a: i32| qd(a, 0);
    let one = LaurentPoly::one();
    for s in new {
        let c = ch(rep, *s);
        let cs = s.color(ell);
        match rep {
            Rep::Minus => {
                if cs == 0 {
                    l.push(&(&(&q(1) * &c) - &q(-1)), 1)?;
                }
                l.push(&c, -1)?;
                l.push(&(&q(1) - &q(-1)), -1)?;
            }
            Rep::Plus => {
                if cs == 0 {
                    l.push(&(&c - &q(2)), 1)?;
                }
                l.push(&c, -1)?;
                l.push(&(&one - &q(2)), -1)?;
            }
        }
        for b in &old {
            let cb = ch(rep, *b);
            let (i, j, z, w) = match rep {
                Rep::Minus => (b.color(ell), cs, &cb, &c),
                Rep::Plus => (cs, b.color(ell), &c, &cb),
            };
            omega_push(i, j, z, w, ell, &mut l)?;
        }
    }
    Ok(l.to_ratfunc())
}

fn omega_push(i: usize, j: usize, z: &LaurentPoly, w: &LaurentPoly, ell: usize, l: &mut FactorList) -> Result<(), ToroidalError> {
    if i == j {
        l.push(&(z - &(&qd(2, 0) * w)), -1)?;
        l.push(&(z - w), -1)?;
    } else if j == (i + 1) % ell {
        l.push(&(&(&qd(1, 0) * w) - &(&qd(0, -1) * z)), 1)?;
    } else if (j + 1) % ell == i {
        l.push(&(z - &(&qd(1, -1) * w)), 1)?;
    }
    Ok(())
}

/// Anything that can be put through the symmetrization formula.
#[derive(Clone, Copy, Debug)]
pub enum ShuffleInput<'a> {
    Kernel(&'a ShuffleKernel),
    Element(&'a ShuffleElement),
}

impl ShuffleInput<'_> {
    fn counts(&self) -> &[usize] {
        match self {
            ShuffleInput::Kernel(k) => &k.counts,
            ShuffleInput::Element(e) => &e.counts,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixElement {
    pub value: RatFunc,
    /// Color-preserving assignments summed over.
    pub summands: usize,
    /// Assignments whose summand does not vanish at u = 1.
    pub nonzero_summands: usize,
}

impl MatrixElement {
    fn zero() -> Self {
        MatrixElement { value: RatFunc::zero(), summands: 0, nonzero_summands: 0 }
    }
}

/// ⟨μ|(τ∘Ψ)(F)|λ⟩ by the symmetrization formula, along the deformation
/// x_□ = χ_□ υ u^{e(□)} and in the limit u → 1.  A pole at u = 1 triggers
/// one retry with prime exponents.
pub fn sym_matrix_element(
    input: ShuffleInput<'_>,
    lambda: &Partition,
    mu: &Partition,
    rep: Rep,
    ell: usize,
    ups: UpsilonMode,
) -> Result<MatrixElement, ToroidalError> {
    match sym_matrix_element_with(input, lambda, mu, rep, ell, ups, &Deformation::ContentRow) {
        Err(ToroidalError::Algebra(crate::algebra::AlgebraError::IrregularPoint { .. })) => {
            sym_matrix_element_with(input, lambda, mu, rep, ell, ups, &Deformation::Primes)
        }
        other => other,
    }
}

pub fn sym_matrix_element_with(
    input: ShuffleInput<'_>,
    lambda: &Partition,
    mu: &Partition,
    rep: Rep,
    ell: usize,
    ups: UpsilonMode,
    deformation: &Deformation,
) -> Result<MatrixElement, ToroidalError> {
    if !mu.contains_partition(lambda) {
        return Ok(MatrixElement::zero());
    }
    let new = mu.skew_nodes(lambda);
    let counts = input.counts();
    if counts.len() != ell {
        return Err(ToroidalError::Domain(format!("element has {} colors, ℓ = {ell}", counts.len())));
    }
    let mut by_color: Vec<Vec<Node>> = vec![Vec::new(); ell];
    for s in &new {
        by_color[s.color(ell)].push(*s);
    }
    if by_color.iter().map(Vec::len).ne(counts.iter().copied()) {
        return Ok(MatrixElement::zero());
    }
    let e = exponents(&new, deformation);
    let v = ups.monomial();
    let u = Monomial::var(Var::U);
    let point = |s: &Node| rep.character(*s).mul(&v).mul(&u.pow(e[s]));
    let outer = outer_factor(lambda, &new, rep, ell)?;
    if outer.is_zero() {
        return Ok(MatrixElement { value: RatFunc::zero(), summands: 0, nonzero_summands: 0 });
    }
    let kernel_sum = match input {
        ShuffleInput::Element(el) => {
            let layout = el.layout();
            let mut sub = Substitution::new();
            for (i, nodes) in by_color.iter().enumerate() {
                for (r, s) in nodes.iter().enumerate() {
                    sub = sub.map_monomial(layout.var(i, r), point(s));
                }
            }
            let value = limit_at_one(&sub.apply(&el.f)?, Var::U)?;
            let nz = usize::from(!value.is_zero());
            MatrixElement { value, summands: 1, nonzero_summands: nz }
        }
        ShuffleInput::Kernel(k) => {
            let perms = color_permutations(counts);
            let summands: Vec<Summand> = perms
                .par_iter()
                .map(|perm| {
                    let fl = k.instantiate(|i, r| mono_poly(point(&by_color[i][perm[i][r]])))?;
                    classify(&fl)
                })
                .collect::<Result<_, ToroidalError>>()?;
            let mut finite = Vec::new();
            let mut poles = Vec::new();
            let mut nonzero = 0;
            for s in summands {
                match s {
                    Summand::Vanishing => {}
                    Summand::Finite(f) => {
                        nonzero += 1;
                        finite.push(f);
                    }
                    Summand::Pole(f) => {
                        nonzero += 1;
                        poles.push(f);
                    }
                }
            }
            let mut value = balanced_sum(finite);
            if !poles.is_empty() {
                value = &value + &limit_at_one(&balanced_sum(poles), Var::U)?;
            }
            MatrixElement { value, summands: perms.len(), nonzero_summands: nonzero }
        }
    };
    Ok(MatrixElement { value: &kernel_sum.value * &outer, ..kernel_sum })
}

enum Summand {
    /// Vanishes at u = 1; dropped, since the total has a finite limit.
    Vanishing,
    /// Finite at u = 1, already evaluated there.
    Finite(RatFunc),
    /// Has a pole at u = 1; kept as a function of u.
    Pole(RatFunc),
}

fn classify(fl: &FactorList) -> Result<Summand, ToroidalError> {
    if fl.is_zero() {
        return Ok(Summand::Vanishing);
    }
    let mut order = 0i64;
    let mut at_one = FactorList::one();
    for (f, e) in fl.factors() {
        let (k, rest) = split_root_at_one(f, Var::U);
        order += k as i64 * *e as i64;
        at_one.push(&rest.eval_one(Var::U), *e)?;
    }
    if order > 0 {
        return Ok(Summand::Vanishing);
    }
    if order < 0 {
        return Ok(Summand::Pole(fl.to_ratfunc()));
    }
    let (c, m) = fl.unit();
    at_one.scale(c);
    at_one.mul_monomial(&m.with_exp(Var::U, 0));
    Ok(Summand::Finite(at_one.to_ratfunc()))
}

/// Whether μ∖λ has n nodes of every color and no p- and (p+1)-nodes adjacent
/// in the direction the kernel forbids.
pub fn adjacency_allowed(lambda: &Partition, mu: &Partition, p: usize, kind: super::KernelKind, rep: Rep, ell: usize) -> bool {
    if !mu.contains_partition(lambda) {
        return false;
    }
    let new = mu.skew_nodes(lambda);
    let n = new.len() / ell;
    if new.len() % ell != 0 || (0..ell).any(|i| new.iter().filter(|s| s.color(ell) == i).count() != n) {
        return false;
    }
    let horizontal = matches!((kind, rep), (super::KernelKind::E, Rep::Minus) | (super::KernelKind::H, Rep::Plus));
    let p1 = (p + 1) % ell;
    let pair_ok = |x: &Node, y: &Node| {
        let (cx, cy) = (x.color(ell), y.color(ell));
        !((cx == p && cy == p1) || (cx == p1 && cy == p))
    };
    for s in &new {
        let nb = if horizontal { Node::new(s.a + 1, s.b) } else { Node::new(s.a, s.b + 1) };
        if new.contains(&nb) && !pair_ok(s, &nb) {
            return false;
        }
    }
    true
}
