use proptest::prelude::*;

use qgenocchi::algebra::{
    binomial, gaussian_binomial, int, Parse, QLaurent, QRatFn, Rational, Render, Ring, SLaurent,
};
use qgenocchi::fib::{fib_poly, q_fib_poly, q_fib_poly_inv, FibFamily};
use qgenocchi::functional::{l_functional, m_functional, q_l_functional, q_m_functional};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    (-3i64..3, prop::collection::vec(rational(), 0..5))
        .prop_map(|(low, cs)| QLaurent::from_coeffs(low, &cs))
}

fn ratfn() -> impl Strategy<Value = QRatFn> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| QRatFn::new(n, d))
}

fn s_poly() -> impl Strategy<Value = SLaurent<QLaurent>> {
    prop::collection::vec(laurent(), 0..4).prop_map(|cs| SLaurent::from_coeffs(0, cs))
}

fn ring_axioms<R: Ring>(a: &R, b: &R, c: &R) {
    assert_eq!(a.add_ref(b), b.add_ref(a));
    assert_eq!(a.mul_ref(b), b.mul_ref(a));
    assert_eq!(a.add_ref(b).add_ref(c), a.add_ref(&b.add_ref(c)));
    assert_eq!(a.mul_ref(b).mul_ref(c), a.mul_ref(&b.mul_ref(c)));
    assert_eq!(
        a.mul_ref(&b.add_ref(c)),
        a.mul_ref(b).add_ref(&a.mul_ref(c))
    );
    assert_eq!(a.add_ref(&R::zero()), *a);
    assert_eq!(a.mul_ref(&R::one()), *a);
    assert!(a.sub_ref(a).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn ratfn_ring(a in ratfn(), b in ratfn(), c in ratfn()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn s_laurent_ring(a in s_poly(), b in s_poly(), c in s_poly()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn q_inverse_is_involutive_homomorphism(a in laurent(), b in laurent()) {
        let f = QLaurent::substitute_q_inverse;
        prop_assert_eq!(f(&f(&a)), a.clone());
        prop_assert_eq!(f(&a.mul_ref(&b)), f(&a).mul_ref(&f(&b)));
        prop_assert_eq!(f(&a.add_ref(&b)), f(&a).add_ref(&f(&b)));
        prop_assert_eq!(f(&a).at_q_one(), a.at_q_one());
    }

    #[test]
    fn q_inverse_on_ratfn(a in ratfn(), b in ratfn()) {
        let f = QRatFn::substitute_q_inverse;
        prop_assert_eq!(f(&f(&a)), a.clone());
        prop_assert_eq!(f(&a.mul_ref(&b)), f(&a).mul_ref(&f(&b)));
    }

    #[test]
    fn ratfn_is_canonical(a in ratfn()) {
        prop_assert!(a.denom().is_polynomial());
        let lead = a.denom().coeff(a.denom().high_exp().unwrap());
        prop_assert_eq!(lead, int(1));
    }

    #[test]
    fn laurent_text_round_trips(a in laurent()) {
        prop_assert_eq!(QLaurent::parse(&a.render()).unwrap(), a.clone());
        prop_assert_eq!(QLaurent::parse(&a.render_compact()).unwrap(), a);
    }

    #[test]
    fn ratfn_text_round_trips(a in ratfn()) {
        prop_assert_eq!(QRatFn::parse(&a.render()).unwrap(), a.clone());
        prop_assert_eq!(QRatFn::parse(&a.render_compact()).unwrap(), a);
    }

    #[test]
    fn s_poly_text_round_trips(a in s_poly()) {
        prop_assert_eq!(SLaurent::<QLaurent>::parse(&a.render()).unwrap(), a);
    }

    #[test]
    fn gaussian_at_one_is_binomial(n in 0i64..=20, k in 0i64..=20) {
        prop_assume!(k <= n);
        prop_assert_eq!(gaussian_binomial(n, k).at_q_one(), Rational::from_integer(binomial(n, k)));
    }

    #[test]
    fn q_pascal(n in 1i64..=20, k in 1i64..=20) {
        prop_assume!(k <= n);
        let rhs = gaussian_binomial(n - 1, k)
            .add_ref(&gaussian_binomial(n - 1, k - 1).shift(n - k));
        prop_assert_eq!(gaussian_binomial(n, k), rhs);
    }

    #[test]
    fn q_vandermonde(m in 0i64..=6, r in 0i64..=6, k in 0i64..=12) {
        let sum = (0..=k).fold(QLaurent::zero(), |acc, j| {
            let t = gaussian_binomial(m, j)
                .mul_ref(&gaussian_binomial(r, k - j))
                .shift((k - j) * (m - j));
            acc.add_ref(&t)
        });
        prop_assert_eq!(sum, gaussian_binomial(m + r, k));
    }

    #[test]
    fn laurent_division_by_monomial(a in laurent(), e in -4i64..4) {
        use qgenocchi::algebra::TryDiv;
        let m = QLaurent::q_pow(e);
        prop_assert_eq!(a.mul_ref(&m).try_div(&m).unwrap(), a);
    }
}

#[test]
fn fibonacci_recursion_residuals() {
    let mut c = FibFamily::classical().with_max(40);
    for n in 1..=40 {
        let res = c
            .poly(n)
            .unwrap()
            .sub_ref(&c.poly(n - 1).unwrap())
            .sub_ref(&c.poly(n - 2).unwrap().shift(1));
        assert!(res.is_zero(), "classical n = {n}");
    }
    let mut q = FibFamily::q().with_max(24);
    for n in 1..=24 {
        let res = q.poly(n).unwrap().sub_ref(&q.poly(n - 1).unwrap()).sub_ref(
            &q.poly(n - 2)
                .unwrap()
                .shift(1)
                .scale(&QLaurent::q_pow(n - 3)),
        );
        assert!(res.is_zero(), "q n = {n}");
    }
}

#[test]
fn fibonacci_degrees_and_leading_terms() {
    for n in 1..=30 {
        assert_eq!(fib_poly(n).unwrap().degree(), Some(((n - 1) / 2) as i32));
        assert_eq!(q_fib_poly(n).unwrap().degree(), Some(((n - 1) / 2) as i32));
        assert_eq!(
            q_fib_poly_inv(n).unwrap().degree(),
            Some(((n - 1) / 2) as i32)
        );
    }
    for k in 0..=10 {
        let f = q_fib_poly(2 * k + 1).unwrap();
        assert_eq!(f.leading_coeff(), Some(&QLaurent::q_pow(k * (k - 1))));
    }
}

#[test]
fn fibonacci_q_inverse_is_substitution() {
    for n in -1..=20 {
        assert_eq!(
            q_fib_poly_inv(n).unwrap(),
            q_fib_poly(n).unwrap().substitute_q_inverse()
        );
    }
}

#[test]
fn alternating_sums_annihilate() {
    for n in 0..=15i64 {
        let sum = (0..=n).fold(SLaurent::<Rational>::zero(), |acc, k| {
            acc.add_ref(
                &fib_poly(2 * n - k)
                    .unwrap()
                    .scale(&Rational::from_integer(binomial(n, k)))
                    .signed(k),
            )
        });
        assert!(sum.is_zero(), "n = {n}");
    }
    for n in 0..=10i64 {
        let sum = (0..=n).fold(SLaurent::<QLaurent>::zero(), |acc, k| {
            let c = gaussian_binomial(n, k).shift(k * (k - 1) / 2).signed(k);
            acc.add_ref(&q_fib_poly(2 * n - k).unwrap().scale(&c))
        });
        assert!(sum.is_zero(), "q n = {n}");
    }
}

#[test]
fn functionals_reproduce_their_basis() {
    let (l, m) = (l_functional(12), m_functional(12));
    let (ql, qm) = (q_l_functional(10), q_m_functional(10));
    for k in 0..=12i64 {
        let expected = if k == 0 { int(1) } else { int(0) };
        assert_eq!(l.apply(&fib_poly(2 * k + 1).unwrap()).unwrap(), expected);
        assert_eq!(m.apply(&fib_poly(2 * k + 2).unwrap()).unwrap(), expected);
        if k <= 10 {
            let v = ql.apply(&q_fib_poly_inv(2 * k + 1).unwrap()).unwrap();
            assert_eq!(v.is_one(), k == 0);
            assert_eq!(v.is_zero(), k != 0);
            let v = qm.apply(&q_fib_poly(2 * k + 2).unwrap()).unwrap();
            assert_eq!(v.is_one(), k == 0);
            assert_eq!(v.is_zero(), k != 0);
        }
    }
}
