use crate::algebra::{q_integer, QLaurent, Ring, SLaurent};

use super::context::Context;
use super::outcome::{c2, qb, qp, Outcome};
use super::{arg, Params};

type QPoly = SLaurent<QLaurent>;

/// `F_N(s,1/q) = sum_k q^{k^2+2k-Nk} [N-1-k, k] s^k`.
fn closed_inverse(big_n: i64) -> QPoly {
    (0..big_n.max(0)).fold(QPoly::zero(), |acc, k| {
        let c = qb(big_n - 1 - k, k).shift(k * k + 2 * k - big_n * k);
        acc.add_ref(&QPoly::monomial(c, k as i32))
    })
}

/// `(-s)^k c`.
fn neg_s_pow(k: i64, c: QLaurent) -> QPoly {
    QPoly::monomial(c.signed(k), k as i32)
}

pub(crate) fn i5_1(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    out.eq(
        "F_2n+1(s,1/q) closed form",
        ctx.q_fib_inv(2 * n + 1),
        &closed_inverse(2 * n + 1),
    );
    let sum = (0..=n).fold(QLaurent::zero(), |acc, k| {
        let t = qb(2 * n - k, k)
            .shift(k * k + k - 2 * n * k)
            .mul_ref(&ctx.gq(2 * k as usize + 1, 1));
        acc.add_ref(&t.signed(k))
    });
    out.zero("first-column sum", &sum);
    out
}

pub(crate) fn i5_2(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    out.eq(
        "F_2n(s,1/q) closed form",
        ctx.q_fib_inv(2 * n),
        &closed_inverse(2 * n),
    );
    let sum = (0..n).fold(QLaurent::zero(), |acc, k| {
        let t = qb(2 * n - 1 - k, k)
            .shift(k * k + 2 * k - 2 * n * k)
            .mul_ref(&ctx.gq(2 * k as usize + 1, 1));
        acc.add_ref(&t.signed(n - k - 1))
    });
    out.eq(
        "G_2n(q)",
        &sum.shift((n - 1) * (n - 1)),
        &ctx.q_genocchi(n as usize),
    );
    out.note("prefactor q^((n-1)^2) applied to the whole sum");
    out
}

pub(crate) fn i5_3(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (m, n) = (arg(p, "m"), arg(p, "n"));
    let rhs = (0..=n).fold(QPoly::zero(), |acc, k| {
        let c = qb(n, k).shift(k * (m + n - 2));
        acc.add_ref(&ctx.q_fib(m + n - k).shift(k as i32).scale(&c))
    });
    out.eq("F_m+2n(s,q)", ctx.q_fib(m + 2 * n), &rhs);
    out
}

pub(crate) fn i5_4(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let term = |c: QLaurent, sk: i64, f: &QPoly| f.shift(sk as i32).scale(&c);
    let mut direct = QPoly::zero();
    for j in 0..=n / 2 {
        let c = qb(n, n - 2 * j).shift((n - 2 * j) * (n - 1));
        direct = direct.add_ref(&term(c, n - 2 * j, ctx.q_fib(2 * j + 1)));
    }
    for j in 0..=(n + 1) / 2 {
        let c = qb(n, n - 2 * j + 1).shift((n - 2 * j + 1) * (n - 1));
        direct = direct.add_ref(&term(c, n - 2 * j + 1, ctx.q_fib(2 * j)));
    }
    out.eq("F_2n+1(s,q) expansion", ctx.q_fib(2 * n + 1), &direct);
    let mut inverse = QPoly::zero();
    for j in 0..=n / 2 {
        let c = qb(n, 2 * j).shift(2 * c2(2 * j) - 2 * c2(n));
        inverse = inverse.add_ref(&term(c, n - 2 * j, ctx.q_fib_inv(2 * j + 1)));
    }
    for j in 1..=(n + 1) / 2 {
        let c = qb(n, 2 * j - 1).shift(2 * c2(2 * j - 1) - 2 * c2(n));
        inverse = inverse.add_ref(&term(c, n - 2 * j + 1, ctx.q_fib_inv(2 * j)));
    }
    out.eq(
        "F_2n+1(s,1/q) expansion",
        ctx.q_fib_inv(2 * n + 1),
        &inverse,
    );
    let g = |i: i64, j: i64| ctx.gq(i as usize, j as usize);
    let lhs = (0..=n).fold(QLaurent::zero(), |acc, j| {
        let t = qb(n, 2 * j)
            .shift(3 * j * j - j)
            .mul_ref(&g(2 * n - 2 * j, j + 1));
        acc.add_ref(&t.signed(j))
    });
    let rhs = (1..=n).fold(QLaurent::zero(), |acc, j| {
        let t = qb(n, 2 * j - 1)
            .shift(3 * j * j - 4 * j + 1)
            .mul_ref(&g(2 * n - 2 * j + 1, j));
        acc.add_ref(&t.signed(j - 1))
    });
    out.eq("triangle entry relation", &lhs, &rhs);
    out
}

fn lhs_5_5(m: i64, n: i64) -> QPoly {
    (0..=n).fold(QPoly::zero(), |acc, k| {
        acc.add_ref(&neg_s_pow(k, qb(2 * k + m, k).shift(-c2(k + m + 2))))
    })
}

pub(crate) fn i5_56(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (m, n) = (arg(p, "m"), arg(p, "n"));
    let lhs = lhs_5_5(m, n);
    let rhs = |top: i64, fib: &dyn Fn(i64) -> i64| {
        (0..=n).fold(QPoly::zero(), |acc, k| {
            let c = qb(top, n - k).shift(-c2(n + 2 + m - k));
            acc.add_ref(&neg_s_pow(n - k, c).mul_ref(ctx.q_fib(fib(k))))
        })
    };
    out.eq("even-index form", &lhs, &rhs(2 * n + m + 2, &|k| 2 * k + 2));
    out.eq("odd-index form", &lhs, &rhs(2 * n + m + 1, &|k| 2 * k + 1));
    for k in 0..=n {
        let vdm = (0..=k).fold(QLaurent::zero(), |acc, j| {
            let t = qb(2 * n + m + 2, j).mul_ref(&qb(2 * k - 2 * n - 2, k - j));
            acc.add_ref(&t.shift((k - j) * (2 * n + m + 2 - j)))
        });
        out.eq(format!("q-Vandermonde k={k}"), &qb(2 * k + m, k), &vdm);
    }
    out
}

/// `sum_k (-s)^k [2k+m, k] q^{-k(k-3)/2}`.
fn lhs_5_7(m: i64, n: i64) -> QPoly {
    (0..=n).fold(QPoly::zero(), |acc, k| {
        acc.add_ref(&neg_s_pow(k, qb(2 * k + m, k).shift(-(k * (k - 3) / 2))))
    })
}

pub(crate) fn i5_78(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (m, n) = (arg(p, "m"), arg(p, "n"));
    let lhs = lhs_5_7(m, n);
    let even = (0..=n).fold(QPoly::zero(), |acc, k| {
        let c = qb(2 * n + m + 2, n - k).shift(k * (3 * k + 1) / 2 - k * n);
        acc.add_ref(&neg_s_pow(n - k, c).mul_ref(ctx.q_fib_inv(2 * k + 2)))
    });
    let odd = (0..=n).fold(QPoly::zero(), |acc, k| {
        let c = qb(2 * n + m + 1, n - k).shift(k * (3 * k - 1) / 2 - k * n);
        acc.add_ref(&neg_s_pow(n - k, c).mul_ref(ctx.q_fib_inv(2 * k + 1)))
    });
    out.eq("even-index form", &lhs, &even.scale(&qp(-c2(n + 1))));
    out.eq("odd-index form", &lhs, &odd.scale(&qp(-c2(n))));
    out
}

pub(crate) fn i5_9(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (m, n) = (arg(p, "m"), arg(p, "n"));
    let g = |i: i64, j: i64| ctx.gq(i as usize, j as usize);
    let a = (0..=n).fold(QLaurent::zero(), |acc, k| {
        acc.add_ref(
            &qb(2 * k + m, k)
                .shift(-(k * (k - 3) / 2))
                .mul_ref(&g(2 * k + 1, 1)),
        )
    });
    let b = (0..=n).fold(QLaurent::zero(), |acc, k| {
        let t = qb(2 * n + m + 2, n - k)
            .shift(c2(k + 1) - k * n)
            .mul_ref(&g(2 * n + 1, k + 1));
        acc.add_ref(&t.signed(k))
    });
    out.eq("odd-row form", &a, &b.shift(-c2(n + 1)));
    if n >= 1 {
        let c = (0..=n).fold(QLaurent::zero(), |acc, k| {
            let t = qb(2 * n + m + 1, n - k)
                .shift(c2(k + 1) - k * n)
                .mul_ref(&g(2 * n, k + 1));
            acc.add_ref(&t.signed(k))
        });
        out.eq("even-row form", &a, &c.shift(-c2(n)));
    } else {
        out.note("even-row form reads row 0; checked for n >= 1");
    }
    let qi = q_integer;
    let one = QLaurent::one();
    match n {
        1 => {
            let first = one.add_ref(&qi(m + 2).shift(1));
            out.eq("n=1 sum", &a, &first);
            out.eq(
                "n=1 ([m+4]-1)/q",
                &first,
                &qi(m + 4).sub_ref(&one).shift(-1),
            );
            out.eq("n=1 [m+3]", &first, &qi(m + 3));
        }
        2 => {
            let first = one
                .add_ref(&qi(m + 2).shift(1))
                .add_ref(&qb(m + 4, 2).mul_ref(&qi(2)).shift(1));
            let second = qb(m + 6, 2)
                .mul_ref(&qi(2))
                .shift(-3)
                .sub_ref(&qb(m + 6, 1).mul_ref(&qi(3)).shift(-4))
                .add_ref(&qi(3).shift(-4));
            let third = qb(m + 5, 2)
                .mul_ref(&qi(2))
                .shift(-1)
                .sub_ref(&qb(m + 5, 1).shift(-1));
            out.eq("n=2 sum", &a, &first);
            out.eq("n=2 odd-row value", &first, &second);
            out.eq("n=2 even-row value", &first, &third);
        }
        _ => {}
    }
    out
}
