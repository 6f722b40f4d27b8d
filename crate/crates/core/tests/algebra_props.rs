use proptest::prelude::*;
use wreath_core::algebra::*;

fn small_poly(vars: &'static [Var]) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..3, vars.len()), -3i64..4), 1..4).prop_map(
        move |terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|(exps, c)| {
                let pairs: Vec<(Var, i32)> = vars.iter().copied().zip(exps).collect();
                (Monomial::from_pairs(&pairs), rat(c))
            }))
        },
    )
}

const QT: &[Var] = &[Var::Q, Var::T];
const QD: &[Var] = &[Var::QQ, Var::DD];
const QTU: &[Var] = &[Var::Q, Var::T, Var::U];

fn ratfunc(vars: &'static [Var]) -> impl Strategy<Value = RatFunc> {
    (small_poly(vars), small_poly(vars))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfunc(QT), b in ratfunc(QT), c in ratfunc(QT)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn equality_is_cross_multiplication(a in ratfunc(QT), b in ratfunc(QT)) {
        let lhs = a.num() * b.den();
        let rhs = b.num() * a.den();
        prop_assert_eq!(a == b, (&lhs - &rhs).is_zero());
    }

    #[test]
    fn substitution_is_homomorphism(a in ratfunc(QT), b in ratfunc(QT)) {
        for m in [Matching::Minus, Matching::Plus] {
            let s = m.substitution();
            let lhs = s.apply(&(&a * &b)).unwrap();
            let rhs = &s.apply(&a).unwrap() * &s.apply(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = s.apply(&(&a + &b)).unwrap();
            let rhs = &s.apply(&a).unwrap() + &s.apply(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn to_qt_inverts_matching(a in ratfunc(QT)) {
        for m in [Matching::Minus, Matching::Plus] {
            let f = m.substitution().apply(&a).unwrap();
            let back = to_qt(&f, m).unwrap().expressible().expect("image of q,t is expressible");
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(m.substitution().apply(&back).unwrap(), f);
        }
    }

    #[test]
    fn to_qt_round_trip_on_expressible(a in ratfunc(QD)) {
        if let QtForm::Expressible(g) = to_qt(&a, Matching::Minus).unwrap() {
            prop_assert_eq!(Matching::Minus.substitution().apply(&g).unwrap(), a);
        }
    }

    #[test]
    fn limit_ignores_inserted_unit(a in ratfunc(QTU)) {
        let u1 = &RatFunc::var(Var::U) - &RatFunc::one();
        let b = &(&a * &u1) / &u1;
        prop_assert_eq!(&a, &b);
        match limit_at_one(&a, Var::U) {
            Ok(x) => prop_assert_eq!(limit_at_one(&b, Var::U).unwrap(), x),
            Err(_) => prop_assert!(limit_at_one(&b, Var::U).is_err()),
        }
    }

    #[test]
    fn canonical_idempotent(a in ratfunc(QTU)) {
        let again = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(again.to_string(), a.to_string());
        prop_assert_eq!(RatFunc::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both(a in small_poly(QTU), b in small_poly(QTU), c in small_poly(QTU)) {
        let x = &a * &c;
        let y = &b * &c;
        let g = gcd(&x, &y);
        if !g.is_zero() {
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            if !c.is_zero() {
                prop_assert!(g.div_exact(&c.associate()).is_some());
            }
        }
    }
}
