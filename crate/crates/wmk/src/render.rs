//! LaTeX emitters.  Text output uses the library's Display impls.

use wreath_core::algebra::{LaurentPoly, Monomial, Rat, RatFunc, Var};
use wreath_core::partition::Partition;
use wreath_core::symfun::{Basis, SymFunc};

fn latex_var(v: Var) -> String {
    match v {
        Var::QQ => r"\mathfrak{q}".into(),
        Var::DD => r"\mathfrak{d}".into(),
        Var::UPS => r"\upsilon".into(),
        Var::U => "u".into(),
        Var::Q => "q".into(),
        Var::T => "t".into(),
        other => format!("x_{{{}}}", other.index() - wreath_core::algebra::NUM_PARAMS),
    }
}

pub fn monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (v, e) in m.vars() {
        s.push_str(&latex_var(v));
        if e != 1 {
            s.push_str(&format!("^{{{e}}}"));
        }
    }
    s
}

fn rational(c: &Rat) -> String {
    let a = c.numer().magnitude().to_string();
    if c.is_integer() {
        a
    } else {
        format!(r"\tfrac{{{a}}}{{{}}}", c.denom())
    }
}

/// Terms in stored order, leading term first.
pub fn poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c < &Rat::from_integer(0.into());
        match (k, negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mag = rational(&if negative { -c.clone() } else { c.clone() });
        let mono = monomial(m);
        if mono.is_empty() {
            s.push_str(&mag);
        } else if mag != "1" {
            s.push_str(&mag);
            s.push_str(&mono);
        } else {
            s.push_str(&mono);
        }
    }
    s
}

pub fn ratfunc(f: &RatFunc) -> String {
    if f.den().is_one() {
        poly(f.num())
    } else {
        format!(r"\frac{{{}}}{{{}}}", poly(f.num()), poly(f.den()))
    }
}

pub fn partition(p: &Partition) -> String {
    if p.is_empty() {
        r"\varnothing".into()
    } else {
        format!("({})", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

pub fn quotient(q: &[Partition]) -> String {
    format!(r"\left({}\right)", q.iter().map(partition).collect::<Vec<_>>().join(","))
}

pub fn symfunc(f: &SymFunc, basis: Basis) -> String {
    let coeffs = f.coefficients(basis);
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs
        .iter()
        .rev()
        .map(|(mp, c)| format!(r"\left({}\right){}_{{{}}}", ratfunc(c), basis.name(), quotient(mp)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A two-column tabular with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(header.len()));
    s.push_str(&header.join(" & "));
    s.push_str(" \\\\\n\\hline\n");
    for r in rows {
        s.push_str(&r.iter().map(|c| format!("${c}$")).collect::<Vec<_>>().join(" & "));
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}
