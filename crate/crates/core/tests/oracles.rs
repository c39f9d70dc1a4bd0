use num_bigint::BigInt;

use qgenocchi::algebra::{
    factorial, gaussian_binomial, int, QLaurent, Rational, Ring, SLaurent, TruncSeries,
};
use qgenocchi::exec::Execution;
use qgenocchi::fib::{fib_poly, q_fib_poly, q_fib_poly_inv};
use qgenocchi::functional::{l_functional, m_functional, q_l_functional, q_m_functional};
use qgenocchi::tables::{
    bernoulli, genocchi, median_genocchi, q_genocchi, q_median_genocchi, q_seidel_matrix,
    q_seidel_triangle, q_seidel_triangle_from_functional, seidel_matrix, seidel_triangle,
    seidel_triangle_from_functional,
};

fn rat(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

#[test]
fn genocchi_three_ways() {
    let via_triangle = genocchi(15);

    let order = 30;
    let two_z = TruncSeries::<Rational>::new(order, vec![int(0), int(2)]);
    let denom = TruncSeries::constant(order, int(1)).add(&TruncSeries::exp(order));
    let egf = two_z.div(&denom).unwrap();

    let b = bernoulli(30);
    for n in 1..=15usize {
        let g = rat(&via_triangle[n - 1]);
        let from_egf = egf.coeff(2 * n) * Rational::from_integer(factorial(2 * n as u64));
        assert_eq!(from_egf.signed(n as i64), g, "egf n = {n}");
        let pow = Rational::from_integer(BigInt::from(1) << (2 * n));
        let from_b = (int(1) - pow) * int(2) * b[2 * n].clone();
        assert_eq!(from_b.signed(n as i64), g, "bernoulli n = {n}");
    }
}

#[test]
fn triangle_matches_functional_formulas() {
    let l = l_functional(14);
    let tri = seidel_triangle(13);
    for n in 1..=6i64 {
        for k in 1..=n {
            let even = SLaurent::monomial(int(1), (n + 1 - k) as i32)
                .mul_ref(&fib_poly(2 * k - 1).unwrap());
            let v = l.apply(&even).unwrap().signed(n);
            assert_eq!(
                v,
                rat(&tri.get(2 * n as usize, k as usize)),
                "g_{},{k}",
                2 * n
            );
            let odd =
                SLaurent::monomial(int(1), (n + 1 - k) as i32).mul_ref(&fib_poly(2 * k).unwrap());
            let v = l.apply(&odd).unwrap().signed(n);
            assert_eq!(
                v,
                rat(&tri.get(2 * n as usize + 1, k as usize)),
                "g_{},{k}",
                2 * n + 1
            );
        }
    }
    let via_functional = seidel_triangle_from_functional(13, Execution::Sequential);
    assert_eq!(via_functional, tri.map(rat));
}

#[test]
fn q_triangle_matches_functional_formulas() {
    for exec in [Execution::Sequential, Execution::Parallel] {
        assert_eq!(
            q_seidel_triangle_from_functional(9, exec),
            q_seidel_triangle(9)
        );
    }
}

#[test]
fn q_objects_at_one_are_classical() {
    let g = genocchi(20);
    for (n, gq) in q_genocchi(20).iter().enumerate() {
        assert_eq!(gq.at_q_one(), rat(&g[n]), "G_{}", 2 * n + 2);
    }
    let h = median_genocchi(20);
    for (n, hq) in q_median_genocchi(20).iter().enumerate() {
        assert_eq!(hq.at_q_one(), rat(&h[n]), "H_{}", 2 * n + 1);
    }
    let tri = seidel_triangle(25);
    let qtri = q_seidel_triangle(25);
    for (i, j, e) in qtri.entries() {
        assert!(e.has_nonnegative_integer_coeffs());
        assert_eq!(e.at_q_one(), rat(&tri.get(i, j)), "g_{i},{j}");
    }
    for n in -1..=30 {
        let f = fib_poly(n).unwrap();
        assert_eq!(q_fib_poly(n).unwrap().at_q_one(), f);
        assert_eq!(q_fib_poly_inv(n).unwrap().at_q_one(), f);
    }
    for n in 0..=20i64 {
        for k in 0..=n {
            let b = qgenocchi::algebra::binomial(n, k);
            assert_eq!(
                gaussian_binomial(n, k).at_q_one(),
                Rational::from_integer(b)
            );
        }
    }
}

#[test]
fn q_functionals_at_one_are_classical() {
    let (l, m) = (l_functional(12), m_functional(12));
    let (ql, qm) = (q_l_functional(12), q_m_functional(12));
    for n in 0..=12i32 {
        let s = SLaurent::<Rational>::monomial(int(1), n);
        let sq = SLaurent::<QLaurent>::monomial(QLaurent::one(), n);
        assert_eq!(
            ql.apply(&sq).unwrap().at_q_one(),
            l.apply(&s).unwrap(),
            "L(s^{n})"
        );
        assert_eq!(
            qm.apply(&sq).unwrap().at_q_one().unwrap(),
            m.apply(&s).unwrap(),
            "M(s^{n})"
        );
    }
}

#[test]
fn q_seidel_matrix_at_one_is_classical() {
    let seed: Vec<QLaurent> = (0..12).map(|n| QLaurent::from_int(n * n - 3)).collect();
    let classical: Vec<Rational> = seed.iter().map(QLaurent::at_q_one).collect();
    let mq = q_seidel_matrix(seed, 5).unwrap();
    let mc = seidel_matrix(classical, 5).unwrap();
    for k in 0..=5 {
        for n in 0..12 - k {
            assert_eq!(
                mq.get(n, k).map(QLaurent::at_q_one),
                mc.get(n, k).cloned(),
                "a_{n},{k}"
            );
        }
    }
}
