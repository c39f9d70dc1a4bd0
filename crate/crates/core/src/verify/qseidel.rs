use crate::algebra::{int, Parse, QLaurent, QRatFn, Rational, Ring, SLaurent, TruncSeries};
use crate::tables::{q_seidel_matrix, seidel_matrix};

use super::context::Context;
use super::outcome::{c2, qb, qp, Outcome};
use super::{arg, Params};

type QPoly = SLaurent<QLaurent>;

/// `M(F_{2k+1}(s,q))` for `k = 0..=5`, as listed alongside the q-analogue of
/// the v. Ettingshausen-Seidel-Kaneko identity.
pub const Q_M_VALUES: [&str; 6] = [
    "1",
    "q/(1 + q)",
    "-q^4/((1 + q)*(1 + q + q^2))",
    "q^7/((1 + q)*(1 + q + q^2))",
    "-q^10*(1 + q + 2*q^2 + 2*q^3 + q^4 + q^5 + q^6)/((1 + q)*(1 + q + q^2)*(1 + q + q^2 + q^3 + q^4))",
    "q^13*(1 + q + 3*q^2 + 3*q^3 + 2*q^4 + 2*q^5 + q^6 + q^7 + q^8)/((1 + q)*(1 + q + q^2)^2)",
];

pub(crate) fn ql(ctx: &Context, out: &mut Outcome, p: &QPoly) -> QLaurent {
    out.ok("L", ctx.q_l().apply(p))
        .unwrap_or_else(QLaurent::zero)
}

fn qm(ctx: &Context, out: &mut Outcome, p: &QPoly) -> QRatFn {
    out.ok("M", ctx.q_m().apply(p)).unwrap_or_else(QRatFn::zero)
}

fn s_pow(k: i64) -> QPoly {
    QPoly::monomial(QLaurent::one(), k as i32)
}

pub(crate) fn i4_tri(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    if n <= 1 {
        out.eq("g_1,1", &ctx.gq(1, 1), &QLaurent::one());
    }
    if n == 1 {
        out.eq("g_2,1", &ctx.gq(2, 1), &QLaurent::one());
    }
    for k in 1..=n {
        let v = ql(
            ctx,
            &mut out,
            &ctx.q_fib_inv(2 * k - 1).shift((n + 1 - k) as i32),
        );
        let v = v.shift(2 * c2(k - 1)).signed(n);
        out.eq(
            format!("g_{},{k}", 2 * n),
            &ctx.gq(2 * n as usize, k as usize),
            &v,
        );
    }
    for k in 1..=n + 1 {
        let v = ql(
            ctx,
            &mut out,
            &ctx.q_fib_inv(2 * k).shift((n + 1 - k) as i32),
        );
        let v = v.shift((k - 1) * (k - 1)).signed(n);
        out.eq(
            format!("g_{},{k}", 2 * n + 1),
            &ctx.gq(2 * n as usize + 1, k as usize),
            &v,
        );
    }
    let rows = if n == 0 {
        1..=1
    } else {
        2 * n as usize..=2 * n as usize + 1
    };
    for i in rows {
        for j in 1..=i.div_ceil(2) {
            let e = ctx.gq(i, j);
            if !e.has_nonnegative_integer_coeffs() {
                out.fail(format!("g_{i},{j}(q) = {e} has a coefficient outside N"));
            }
            out.eq(format!("g_{i},{j}(1)"), &e.at_q_one(), &ctx.g(i, j));
        }
    }
    out
}

pub(crate) fn i4_89(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n") as usize;
    for k in 1..=n + 1 {
        let s = (0..k).fold(QLaurent::zero(), |acc, l| {
            acc.add_ref(&ctx.gq(2 * n, k - l).shift((k - 1 - l) as i64))
        });
        out.eq(format!("g_{},{k}", 2 * n + 1), &ctx.gq(2 * n + 1, k), &s);
    }
    for k in 1..=n {
        let s = (0..=n - k).fold(QLaurent::zero(), |acc, l| {
            acc.add_ref(&ctx.gq(2 * n - 1, k + l).shift((k - 1 + l) as i64))
        });
        out.eq(format!("g_{},{k}", 2 * n), &ctx.gq(2 * n, k), &s);
    }
    out
}

pub(crate) fn i4_12_14(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let nu = n as usize;
    let e = -(n - 1) * (n - 1);
    let lhs = ql(ctx, &mut out, &ctx.q_fib_inv(2 * n).shift(1));
    let column_n = ctx.gq(2 * nu + 1, nu).shift(e).signed(n);
    let column_n1 = ctx.q_genocchi(nu + 1).shift(e).signed(n);
    match (lhs == column_n, lhs == column_n1) {
        (true, true) => {
            out.note("L(s F_2n(s,1/q)) matches both g_2n+1,n(q) and G_2n+2(q) = g_2n+1,n+1(q)")
        }
        (true, false) => {
            out.anomaly = Some(format!(
                "only the column-{n} reading g_{},{n}(q) holds",
                2 * n + 1
            ));
        }
        (false, true) => {
            out.anomaly = Some(format!(
                "only the reading G_{}(q) = g_{},{}(q) holds",
                2 * n + 2,
                2 * n + 1,
                n + 1
            ));
        }
        (false, false) => {
            out.eq("L(s F_2n(s,1/q)) vs g_2n+1,n", &lhs, &column_n);
            out.eq("L(s F_2n(s,1/q)) vs G_2n+2", &lhs, &column_n1);
        }
    }
    let v = ql(ctx, &mut out, ctx.q_fib_inv(2 * n));
    out.eq(
        "L(F_2n(s,1/q))",
        &v,
        &ctx.q_genocchi(nu).shift(e).signed(n - 1),
    );
    let v = ql(ctx, &mut out, &s_pow(n));
    out.eq("L(s^n)", &v, &ctx.gq(2 * nu + 1, 1).signed(n));
    out.eq(
        "L(s^n) via H",
        &v,
        &ctx.q_median(nu + 1).shift(1 - n).signed(n),
    );
    out
}

pub(crate) fn i4_15(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let a = (0..=n).fold(QPoly::zero(), |acc, k| {
        acc.add_ref(&ctx.q_fib(2 * n - k).scale(&qb(n, k).shift(c2(k)).signed(k)))
    });
    out.zero("sum F_2n-k(s,q)", &a);
    let b = (0..=n).fold(QPoly::zero(), |acc, k| {
        acc.add_ref(
            &ctx.q_fib_inv(2 * n - k)
                .scale(&qb(n, k).shift(c2(k + 1) - k * n).signed(k)),
        )
    });
    out.zero("sum F_2n-k(s,1/q)", &b);
    out
}

pub(crate) fn i4_17(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let sum = (0..=n / 2).fold(QLaurent::zero(), |acc, k| {
        let t = qb(n, 2 * k)
            .shift(2 * c2(k))
            .mul_ref(&ctx.q_genocchi((n - k) as usize));
        acc.add_ref(&t.signed(k))
    });
    let target = if n == 1 {
        QLaurent::one()
    } else {
        QLaurent::zero()
    };
    out.eq("q-Seidel sum", &sum, &target);
    out
}

pub(crate) fn i4_18(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (m, n) = (arg(p, "m"), arg(p, "n"));
    let lhs = (0..=n).fold(QPoly::zero(), |acc, k| {
        acc.add_ref(
            &ctx.q_fib(2 * n + m - k)
                .scale(&qb(n, k).shift(c2(k)).signed(k)),
        )
    });
    let rhs = ctx
        .q_fib(m)
        .shift(n as i32)
        .scale(&qp(2 * c2(n) + (m - 1) * n));
    out.eq("q^2C(n,2)+(m-1)n s^n F_m", &lhs, &rhs);
    out
}

pub(crate) fn i4_19(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let m = arg(p, "m");
    let lhs = ctx.q_fib(m + 2).sub_ref(ctx.q_fib(m + 1));
    out.eq(
        "F_m+2 - F_m+1",
        &lhs,
        &ctx.q_fib(m).shift(1).scale(&qp(m - 1)),
    );
    out
}

pub(crate) fn i4_20(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let rhs = (0..n).fold(QLaurent::zero(), |acc, k| {
        let t = qb(n + 1, 2 * k + 1)
            .shift(k * k - k + n - 2)
            .mul_ref(&ctx.q_genocchi((n - k) as usize));
        acc.add_ref(&t.signed(k))
    });
    out.eq("H_2n+1(q)", &ctx.q_median(n as usize + 1), &rhs);
    let expansion = (0..=n + 1).fold(QPoly::zero(), |acc, k| {
        let c = qb(n + 1, k).shift(c2(k) - k * n).signed(k);
        acc.add_ref(&ctx.q_fib_inv(2 * n + 1 - k).scale(&c))
    });
    out.eq("s^n expansion", &s_pow(n), &expansion.scale(&qp(2 * c2(n))));
    out.note("s^n expansion in F_k(s,1/q) runs over k = 0..n+1");
    out
}

fn geometric_products<C: Ring>(
    kmax: usize,
    factor: impl Fn(i64) -> TruncSeries<C>,
) -> Vec<TruncSeries<C>> {
    let mut prods = Vec::with_capacity(kmax + 1);
    let mut acc = factor(0);
    prods.push(acc.clone());
    for j in 1..=kmax as i64 {
        acc = acc.mul(&factor(j));
        prods.push(acc.clone());
    }
    prods
}

pub(crate) fn i4_21(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let order = arg(p, "order") as usize;
    let kmax = order / 2;
    let lhs = TruncSeries::from_fn(order, |i| match i {
        0 => QLaurent::one(),
        _ if i % 2 == 1 => {
            let n = i.div_ceil(2) as i64;
            ctx.q_genocchi(n as usize)
                .shift(-(n - 1) * (n - 1))
                .signed(n - 1)
        }
        _ => QLaurent::zero(),
    });
    let mut scratch = Outcome::default();
    let via_l = TruncSeries::from_fn(order, |n| {
        ql(ctx, &mut scratch, ctx.q_fib_inv(n as i64 + 1))
    });
    out.failures.append(&mut scratch.failures);
    out.series("sum L(F_n+1(s,1/q)) z^n", &lhs, &via_l);

    let linear = |c0: QLaurent, c1: QLaurent| TruncSeries::new(order, vec![c0, c1]);
    let z_minus = geometric_products(kmax, |j| linear(qp(j).neg_ref(), QLaurent::one()));
    let minus_z = geometric_products(kmax, |j| linear(qp(j), QLaurent::one().neg_ref()));
    let mut rhs1 = TruncSeries::zero(order);
    let mut rhs2 = TruncSeries::zero(order);
    for k in 0..=kmax {
        let ki = k as i64;
        let z2k = TruncSeries::monomial(order, QLaurent::one(), 2 * k);
        let h = ctx.q_median(k + 1);
        if let Some(t) = out.ok("1/((z-1)...(z-q^k))", z2k.div(&z_minus[k])) {
            rhs1 = rhs1.sub(&t.scale(&h.shift(1 - c2(ki))));
        }
        if let Some(t) = out.ok("1/((1-z)...(q^k-z))", z2k.div(&minus_z[k])) {
            rhs2 = rhs2.add(&t.scale(&ctx.gq(2 * k + 1, 1).shift(ki - c2(ki)).signed(ki)));
        }
    }
    out.series("H form", &lhs, &rhs1);
    out.series("g form", &lhs, &rhs2);

    // generating functions of F_{n+1}(s,q) and F_{n+1}(s,1/q)
    let lin_s = |c0: QLaurent, c1: QLaurent| {
        TruncSeries::new(order, vec![QPoly::constant(c0), QPoly::constant(c1)])
    };
    let one_minus = geometric_products(kmax, |j| lin_s(QLaurent::one(), qp(j).neg_ref()));
    let z_minus_s = geometric_products(kmax, |j| lin_s(qp(j).neg_ref(), QLaurent::one()));
    let gf = TruncSeries::from_fn(order, |n| ctx.q_fib(n as i64 + 1).clone());
    let gf_inv = TruncSeries::from_fn(order, |n| ctx.q_fib_inv(n as i64 + 1).clone());
    let mut sum = TruncSeries::zero(order);
    let mut sum_inv = TruncSeries::zero(order);
    for k in 0..=kmax {
        let ki = k as i64;
        let z2k = |c: QLaurent| TruncSeries::monomial(order, QPoly::monomial(c, k as i32), 2 * k);
        if let Some(t) = out.ok(
            "1/((1-z)...(1-q^k z))",
            z2k(qp(2 * c2(ki))).div(&one_minus[k]),
        ) {
            sum = sum.add(&t);
        }
        let c = qp(c2(ki + 1) - 2 * c2(ki)).signed(ki + 1);
        if let Some(t) = out.ok("1/((z-1)...(z-q^k))", z2k(c).div(&z_minus_s[k])) {
            sum_inv = sum_inv.add(&t);
        }
    }
    out.series("sum F_n+1(s,q) z^n", &gf, &sum);
    out.series("sum F_n+1(s,1/q) z^n", &gf_inv, &sum_inv);
    out.note("generating function of F_n+1(s,q) checked with weight q^(2 C(k,2))");
    out
}

/// Seed length of the q-Seidel matrix check.
const SM_SEED: usize = 13;
pub(crate) const SM_DEPTH: usize = 6;

pub(crate) fn i4_sm(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let k = arg(p, "k") as usize;
    let seed: Vec<QLaurent> = (0..SM_SEED as i64)
        .map(|n| ql(ctx, &mut out, &ctx.q_fib_inv(n).signed(n - 1)))
        .collect();
    let classical_seed: Vec<Rational> = seed.iter().map(QLaurent::at_q_one).collect();
    let Some(mq) = out.ok("q-matrix", q_seidel_matrix(seed, SM_DEPTH)) else {
        return out;
    };
    let Some(mc) = out.ok("matrix", seidel_matrix(classical_seed, SM_DEPTH)) else {
        return out;
    };
    for n in 0..SM_SEED - k {
        let entry = mq.get(n, k).cloned().unwrap_or_else(QLaurent::zero);
        if k > 0 {
            let step = mq.column(k - 1)[n]
                .add_ref(&mq.column(k - 1)[n + 1])
                .shift(n as i64 - 1);
            out.eq(format!("recurrence a_{n},{k}"), &entry, &step);
        }
        if let Some(cf) = mq.closed_form(n, k) {
            out.eq(format!("closed form a_{n},{k}"), &entry, &cf);
        }
        if n + 1 >= k {
            let (ni, ki) = (n as i64, k as i64);
            let poly = ctx
                .q_fib_inv(ni - ki)
                .shift(k as i32)
                .scale(&qp(c2(ki + 1)).signed(ni - ki - 1));
            let v = ql(ctx, &mut out, &poly);
            out.eq(format!("L form a_{n},{k}"), &entry, &v);
        }
        let classical = mc.get(n, k).cloned().unwrap_or_else(|| int(0));
        out.eq(format!("a_{n},{k}(1)"), &entry.at_q_one(), &classical);
        if let Some(cf) = mc.closed_form(n, k) {
            out.eq(format!("binomial form a_{n},{k}"), &classical, &cf);
        }
    }
    out
}

pub(crate) fn i4_26(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let mut scratch = Outcome::default();
    let sum = (0..=n + 1).fold(QRatFn::zero(), |acc, k| {
        let c = QRatFn::from(qb(n + 1, k).shift(c2(k)).signed(k));
        acc.add_ref(&c.mul_ref(&qm(ctx, &mut scratch, ctx.q_fib(2 * n + 2 - k))))
    });
    out.failures.append(&mut scratch.failures);
    out.zero("sum M(F_2n+2-k(s,q))", &sum);
    let v = qm(ctx, &mut out, ctx.q_fib(2 * n + 2));
    out.eq(
        "M(F_2n+2)",
        &v,
        &(if n == 0 {
            QRatFn::one()
        } else {
            QRatFn::zero()
        }),
    );
    if let Some(text) = Q_M_VALUES.get(n as usize) {
        if let Some(expected) = out.ok("value list", QRatFn::parse(text)) {
            let v = qm(ctx, &mut out, ctx.q_fib(2 * n + 1));
            out.eq(format!("M(F_{}(s,q))", 2 * n + 1), &v, &expected);
        }
    }
    out
}
