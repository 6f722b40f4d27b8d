//! Multivariate GCD by recursive primitive remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::monomial::{Monomial, Var};
use super::poly::{LaurentPoly, Rat};

/// Greatest common divisor in the Laurent polynomial ring over ℚ.
///
/// Monomials and nonzero rationals are units, so the result is returned as
/// the normalized associate (no monomial content, primitive integer
/// coefficients, positive leading coefficient).  `gcd(f, 0)` is the
/// normalized associate of `f`; `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.associate();
    }
    if b.is_zero() {
        return a.associate();
    }
    let a = a.associate();
    let b = b.associate();
    poly_gcd(&a, &b).associate()
}

/// Both arguments are nonzero polynomials (nonnegative exponents).
/// The result is correct up to a unit.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if a == b {
        return a.clone();
    }
    if let Some(g) = heuristic_gcd(a, b, 0) {
        return g;
    }
    prs_gcd(a, b)
}

fn prs_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ma = a.var_mask();
    let mb = b.var_mask();
    if ma & !mb != 0 {
        let x = first_var(ma & !mb);
        return gcd_with_coefficients(a, b, x);
    }
    if mb & !ma != 0 {
        let x = first_var(mb & !ma);
        return gcd_with_coefficients(b, a, x);
    }
    // same variable set: choose the main variable with the smallest degree
    let x = (0..32)
        .filter(|i| ma & (1 << i) != 0)
        .map(|i| Var(i as u8))
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("nonconstant polynomial has a variable");
    let (ca, pa) = content_and_primitive(a, x);
    let (cb, pb) = content_and_primitive(b, x);
    let c = poly_gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, x);
    &c * &g
}

const HEU_TRIES: usize = 6;
const HEU_MAX_DEPTH: usize = 4;

/// GCD over ℤ[vars] (integer content and monomial factors included) by
/// evaluation at a large integer and ξ-adic reconstruction.  Every answer
/// is verified by exact division; `None` means the heuristic gave up.
fn heuristic_gcd(a: &LaurentPoly, b: &LaurentPoly, depth: usize) -> Option<LaurentPoly> {
    if a.is_zero() || b.is_zero() || depth > HEU_MAX_DEPTH {
        return None;
    }
    let (ca, ma, pa) = a.split_unit();
    let (cb, mb, pb) = b.split_unit();
    let c = ca.numer().abs().gcd(&cb.numer().abs());
    let m = ma.gcd(&mb);
    let unit = |g: LaurentPoly| g.mul_term(&m, &Rat::from_integer(c.clone()));
    if pa.is_constant() || pb.is_constant() {
        return Some(unit(LaurentPoly::one()));
    }
    if pa == pb {
        return Some(unit(pa));
    }
    let mask_a = pa.var_mask();
    let mask_b = pb.var_mask();
    let only = (mask_a ^ mask_b) & (mask_a | mask_b);
    if only != 0 {
        let x = first_var(only);
        let (with_x, other) = if mask_a & (1 << x.index()) != 0 { (&pa, &pb) } else { (&pb, &pa) };
        let mut g = other.clone();
        for (_, coeff) in with_x.coefficients_in(x) {
            g = heuristic_gcd(&coeff, &g, depth + 1)?.associate();
            if g.is_constant() {
                break;
            }
        }
        return Some(unit(g));
    }
    let x = first_var(mask_a);
    let norm = |p: &LaurentPoly| p.terms().iter().map(|(_, c)| c.numer().abs()).max().unwrap_or_else(BigInt::zero);
    let mut xi: BigInt = norm(&pa).min(norm(&pb)) * 2 + 29;
    for _ in 0..HEU_TRIES {
        let ea = eval_at(&pa, x, &xi);
        let eb = eval_at(&pb, x, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            if let Some(g_img) = heuristic_gcd(&ea, &eb, depth + 1) {
                let g = reconstruct(&g_img, x, &xi).associate();
                if g.is_constant() || (pa.div_exact(&g).is_some() && pb.div_exact(&g).is_some()) {
                    return Some(unit(g));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// p with `x` replaced by the integer ξ.
fn eval_at(p: &LaurentPoly, x: Var, xi: &BigInt) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().iter().map(|(m, c)| {
        let e = m.exp(x);
        debug_assert!(e >= 0);
        (m.with_exp(x, 0), c * Rat::from_integer(num_traits::pow(xi.clone(), e as usize)))
    }))
}

/// Inverse of `eval_at` for polynomials whose coefficients are below ξ/2 in
/// absolute value: peel off symmetric residues mod ξ as the coefficients
/// of x⁰, x¹, ...
fn reconstruct(img: &LaurentPoly, x: Var, xi: &BigInt) -> LaurentPoly {
    let half: BigInt = xi / 2;
    let mut rest: Vec<(Monomial, BigInt)> = img.terms().iter().map(|(m, c)| (*m, c.to_integer())).collect();
    let mut out = Vec::new();
    let mut e = 0;
    while !rest.is_empty() {
        let mut next = Vec::new();
        for (m, v) in rest {
            let mut r = v.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                out.push((m.with_exp(x, e), Rat::from_integer(r.clone())));
            }
            let q = (v - r) / xi;
            if !q.is_zero() {
                next.push((m, q));
            }
        }
        rest = next;
        e += 1;
    }
    LaurentPoly::from_terms(out)
}

fn first_var(mask: u32) -> Var {
    Var(mask.trailing_zeros() as u8)
}

/// gcd(a, b) where `x` occurs in `a` but not in `b`: any common divisor is
/// free of `x`, so it divides every coefficient of `a` in `x`.
fn gcd_with_coefficients(a: &LaurentPoly, b: &LaurentPoly, x: Var) -> LaurentPoly {
    let mut coeffs: Vec<LaurentPoly> = a.coefficients_in(x).into_iter().map(|(_, c)| c).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = b.clone();
    for c in coeffs {
        g = poly_gcd(&c.associate(), &g);
        if g.is_constant() {
            return LaurentPoly::one();
        }
    }
    g
}

/// Content (gcd of coefficients in `x`) and primitive part.
pub(crate) fn content_and_primitive(a: &LaurentPoly, x: Var) -> (LaurentPoly, LaurentPoly) {
    let mut coeffs: Vec<LaurentPoly> = a.coefficients_in(x).into_iter().map(|(_, c)| c).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut it = coeffs.into_iter();
    let mut g = it.next().expect("nonzero polynomial").associate();
    for c in it {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&c.associate(), &g);
    }
    if g.is_constant() {
        return (LaurentPoly::one(), a.clone());
    }
    let pp = a.div_exact(&g).expect("content divides");
    (g, pp)
}

fn primitive_part(a: &LaurentPoly, x: Var) -> LaurentPoly {
    content_and_primitive(a, x).1.associate()
}

/// GCD of two polynomials primitive with respect to `x`, both of positive
/// degree in `x`.
fn primitive_prs(a: LaurentPoly, b: LaurentPoly, x: Var) -> LaurentPoly {
    let (mut f, mut g) = if a.degree_in(x) >= b.degree_in(x) { (a, b) } else { (b, a) };
    loop {
        if g.degree_in(x) == 0 {
            return LaurentPoly::one();
        }
        // cheap exact-division shortcut before building a remainder
        if f.len() >= g.len() {
            if let Some(_) = f.div_exact(&g) {
                return g;
            }
        }
        let r = pseudo_remainder(&f, &g, x);
        if r.is_zero() {
            return g;
        }
        if r.degree_in(x) == 0 {
            return LaurentPoly::one();
        }
        f = g;
        g = primitive_part(&r, x);
    }
}

/// lc(g)^(deg f − deg g + 1) · f  mod g, in the variable `x`.
pub(crate) fn pseudo_remainder(f: &LaurentPoly, g: &LaurentPoly, x: Var) -> LaurentPoly {
    let mut r = f.to_dense_in(x);
    let gd = g.to_dense_in(x);
    let dg = gd.len() - 1;
    let lc = gd[dg].clone();
    let mut e = r.len() as i64 - gd.len() as i64 + 1;
    trim(&mut r);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &lc * &*c;
        }
        for (k, gk) in gd.iter().enumerate() {
            let prod = &lr * gk;
            r[k + shift] = &r[k + shift] - &prod;
        }
        trim(&mut r);
        e -= 1;
    }
    let mut out = LaurentPoly::from_dense_in(x, &r, 0);
    if e > 0 {
        out = &out * &lc.pow(e as u32);
    }
    out
}

fn trim(v: &mut Vec<LaurentPoly>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::Monomial;
    use crate::algebra::poly::rat;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn univariate() {
        let x = v(Var::Q);
        let a = &(&x * &x) - &one();
        let b = &x - &one();
        assert_eq!(gcd(&a, &b), b);
    }

    #[test]
    fn with_zero() {
        let x = v(Var::Q);
        let f = (&x * &LaurentPoly::int(-2)) + LaurentPoly::int(4);
        assert_eq!(gcd(&f, &LaurentPoly::zero()), &x - &LaurentPoly::int(2));
        assert!(gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn bivariate_common_factor() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let qt = &q * &t;
        let a = &(&one() - &qt) * &(&one() - &q);
        let b = &(&one() - &qt) * &(&one() - &t);
        let g = gcd(&a, &b);
        // exact division oracle: g divides both and the cofactors are coprime
        let ca = a.div_exact(&g).unwrap();
        let cb = b.div_exact(&g).unwrap();
        assert!(gcd(&ca, &cb).is_one());
        assert_eq!(g, &qt - &one());
    }

    #[test]
    fn laurent_units_ignored() {
        let q = v(Var::Q);
        let d = v(Var::DD);
        let a = (&q - &d).mul_monomial(&Monomial::var_pow(Var::DD, -3));
        let b = &(&q - &d) * &(&q + &d);
        assert_eq!(gcd(&a, &b), (&q - &d).associate());
    }

    #[test]
    fn pseudo_remainder_zero_on_multiple() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let g = &(&q * &t) + &LaurentPoly::constant(rat(2));
        let f = &g * &(&q + &t);
        assert!(pseudo_remainder(&f, &g, Var::Q).is_zero());
    }

    #[test]
    fn heuristic_agrees_with_prs() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let u = v(Var::U);
        let one = one();
        let f1 = &one - &(&(&q * &q) * &t);
        let f2 = &(&q * &t) - &LaurentPoly::int(3);
        let f3 = &(&t * &t) + &(&u * &q);
        let f4 = &(&(&q * &q) * &q) + &(&t * &u);
        let cases: Vec<(LaurentPoly, LaurentPoly)> = vec![
            (&(&f1 * &f2) * &f3, &(&f2 * &f3) * &f4),
            (&(&f1 * &f1) * &f2, &(&f1 * &f4) * &f4),
            (&f3 * &f4, &f1 * &f2),
            ((&f1 * &f2).scale(&super::super::rat(6)), f2.scale(&super::super::rat(4))),
        ];
        for (a, b) in cases {
            let h = heuristic_gcd(&a.associate(), &b.associate(), 0).expect("heuristic succeeds").associate();
            assert_eq!(h, prs_gcd(&a.associate(), &b.associate()).associate());
        }
    }

    #[test]
    fn trivariate() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let u = v(Var::U);
        let common = &(&q * &u) - &(&t * &t);
        let a = &common * &(&(&q * &q) + &u);
        let b = &common * &(&(&t * &u) - &q);
        assert_eq!(gcd(&a, &b), common.associate());
        let c = &(&q - &t) * &(&u - &one());
        assert!(gcd(&a, &c).is_one());
    }
}
