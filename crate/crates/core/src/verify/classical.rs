use crate::algebra::{factorial, int, Rational, Ring, SLaurent, TruncSeries};

use super::context::{Context, V_DEGREE};
use super::outcome::{bin, Outcome};
use super::{arg, Params};

type Poly = SLaurent<Rational>;

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn l(ctx: &Context, out: &mut Outcome, p: &Poly) -> Rational {
    out.ok("L", ctx.l().apply(p)).unwrap_or_else(|| int(0))
}

fn m(ctx: &Context, out: &mut Outcome, p: &Poly) -> Rational {
    out.ok("M", ctx.m().apply(p)).unwrap_or_else(|| int(0))
}

fn g_series(ctx: &Context, order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_fn(order, |n| ctx.egf(n) / fact(n))
}

pub(crate) fn i1_1(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let order = arg(p, "order") as usize;
    let e = TruncSeries::<Rational>::exp(order);
    let one = TruncSeries::constant(order, int(1));
    let z = TruncSeries::monomial(order, int(1), 1);
    let Some(lhs) = out.ok("2z/(1+e^z)", z.scale(&int(2)).div(&one.add(&e))) else {
        return out;
    };
    if let Some(ratio) = out.ok("(1-e^z)/(1+e^z)", one.sub(&e).div(&one.add(&e))) {
        out.series("z + z(1-e^z)/(1+e^z)", &lhs, &z.add(&z.mul(&ratio)));
    }
    out.series("sum g_n z^n/n!", &lhs, &g_series(ctx, order));
    let genocchi = TruncSeries::from_fn(order, |n| match n {
        1 => int(1),
        _ if n >= 2 && n % 2 == 0 => ctx.genocchi(n / 2).signed(n as i64 / 2) / fact(n),
        _ => int(0),
    });
    out.series("z + sum (-1)^n G_2n z^2n/(2n)!", &lhs, &genocchi);
    out
}

pub(crate) fn i1_rel(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(1) << (2 * n as usize));
    let rhs = (int(2) * (int(1) - two_pow) * ctx.bernoulli(2 * n as usize)).signed(n);
    out.eq("G_2n", &ctx.genocchi(n as usize), &rhs);
    out
}

fn fib_egf(ctx: &Context, order: usize, keep: impl Fn(usize) -> bool) -> TruncSeries<Poly> {
    TruncSeries::from_fn(order, |n| {
        if keep(n) {
            ctx.fib(n as i64).scale(&(int(1) / fact(n)))
        } else {
            Poly::zero()
        }
    })
}

pub(crate) fn i1_6(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let order = arg(p, "order") as usize;
    let a = fib_egf(ctx, order, |_| true);
    let e = TruncSeries::<Poly>::exp(order);
    let rhs = e.mul(&a.dilate(&Poly::constant(int(-1)))).neg();
    out.series("A(-z) e^z", &a, &rhs);
    out
}

pub(crate) fn i1_7(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let order = arg(p, "order") as usize;
    let even = fib_egf(ctx, order, |n| n % 2 == 0);
    let odd = fib_egf(ctx, order, |n| n % 2 == 1);
    let e = TruncSeries::<Poly>::exp(order);
    let one = TruncSeries::constant(order, Poly::one());
    out.series(
        "(1+e^z) E = (e^z-1) O",
        &one.add(&e).mul(&even),
        &e.sub(&one).mul(&odd),
    );
    // E = -z (1-e^z)/(1+e^z) * O/z
    let z = TruncSeries::monomial(order, Poly::one(), 1);
    let odd_over_z = TruncSeries::from_fn(order, |n| {
        if n < order {
            odd.coeff(n + 1).clone()
        } else {
            Poly::zero()
        }
    });
    if let Some(ratio) = out.ok("(1-e^z)/(1+e^z)", one.sub(&e).div(&one.add(&e))) {
        let rhs = z.mul(&ratio).mul(&odd_over_z).neg();
        out.series(
            "E = -z(1-e^z)/(1+e^z) O/z",
            &even,
            &rhs.truncate(order.saturating_sub(1)),
        );
    }
    out
}

pub(crate) fn i1_9(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let lhs = l(ctx, &mut out, ctx.fib(2 * n));
    out.eq("L(F_2n)", &lhs, &ctx.genocchi(n as usize).signed(n - 1));
    out
}

pub(crate) fn i1_10(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let v = l(ctx, &mut out, ctx.fib(n));
    out.eq("g_n", &ctx.egf(n as usize), &v.neg_ref());
    out
}

pub(crate) fn i1_11(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let a = ctx.a_matrix();
    let rhs = (0..n).fold(Poly::zero(), |acc, k| {
        acc.add_ref(&ctx.fib(2 * k + 1).scale(&a.get(n as usize, k as usize)))
    });
    out.eq("F_2n", ctx.fib(2 * n), &rhs);
    out
}

pub(crate) fn i2_2(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let lhs = m(ctx, &mut out, ctx.fib(2 * n + 1));
    out.eq(
        "M(F_2n+1)",
        &lhs,
        &(int(2 * n + 1) * ctx.bernoulli(2 * n as usize)),
    );
    out
}

pub(crate) fn i2_3(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let rhs = (0..=n).fold(Poly::zero(), |acc, j| {
        let c = bin(2 * n + 1, 2 * j + 1) * ctx.bernoulli((2 * n - 2 * j) as usize) / int(j + 1);
        acc.add_ref(&ctx.fib(2 * j + 2).scale(&c))
    });
    out.eq("F_2n+1", ctx.fib(2 * n + 1), &rhs);
    out
}

pub(crate) fn i2_4(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let sum = (0..=n + 1).fold(int(0), |acc, i| {
        acc + bin(n + 1, i) * int(n + i + 1) * ctx.bernoulli((n + i) as usize)
    });
    out.zero("sum", &sum);
    out
}

pub(crate) fn i2_5(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let f = |i: i64| ctx.fib(i);
    let a = (0..=n).fold(Poly::zero(), |acc, k| {
        acc.add_ref(&f(n + k).scale(&bin(n, k).signed(n - k)))
    });
    let b = (0..=n).fold(Poly::zero(), |acc, k| {
        acc.add_ref(&f(2 * n - k).scale(&bin(n, k).signed(k)))
    });
    out.zero("sum (-1)^(n-k) C(n,k) F_n+k", &a);
    out.zero("sum (-1)^k C(n,k) F_2n-k", &b);
    let even = (0..=n + 1).fold(Poly::zero(), |acc, i| {
        acc.add_ref(&f(2 * n + 2 - 2 * i).scale(&bin(n + 1, 2 * i)))
    });
    let odd = (0..=n + 1)
        .filter(|i| 2 * i < n + 1)
        .fold(Poly::zero(), |acc, i| {
            acc.add_ref(&f(2 * n + 1 - 2 * i).scale(&bin(n + 1, 2 * i + 1)))
        });
    out.eq("even/odd split", &even, &odd);
    out
}

pub(crate) fn i2_6(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let sum = (0..=n).filter(|i| 2 * i < n).fold(int(0), |acc, i| {
        acc + bin(n, 2 * i + 1) * ctx.bernoulli((2 * n - 2 * i - 1) as usize)
    });
    out.zero("sum C(n,2i+1) B_2n-2i-1", &sum);
    if n >= 1 {
        out.zero("B_2n+1", ctx.bernoulli(2 * n as usize + 1));
    }
    out
}

pub(crate) fn i2_7(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let b = |i: i64| ctx.bernoulli(i as usize).clone();
    let left = (0..=n).fold(int(0), |acc, i| {
        acc + (bin(n, i) * b(n + 1 + i)).signed(n - i)
    });
    let mid = (0..=n + 1).fold(int(0), |acc, j| acc + bin(n + 1, j) * b(n + j));
    let right = (0..=n).fold(b(n), |acc, i| acc + bin(n + 1, i + 1) * b(n + i + 1));
    out.eq("alternating = binomial sum", &left, &mid);
    out.eq("binomial sum = B_n + shifted sum", &mid, &right);
    out
}

pub(crate) fn i2_9(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let v = ctx.v();
    let x = Poly::s();
    let one_minus_x = Poly::one().sub_ref(&x);
    let apply = |out: &mut Outcome, f: &Poly| out.ok("V", v.apply(f)).unwrap_or_else(|| int(0));
    let a = apply(&mut out, &one_minus_x.pow_u(n as u32));
    let b = apply(&mut out, &x.pow_u(n as u32));
    out.eq("V((1-x)^n) = V(x^n)", &a, &b);
    if 2 * n < V_DEGREE as i64 {
        let f = one_minus_x
            .pow_u(n as u32 + 1)
            .mul_ref(&x.neg_ref().pow_u(n as u32));
        let f_reflected = x
            .pow_u(n as u32 + 1)
            .mul_ref(&x.sub_ref(&Poly::one()).pow_u(n as u32));
        let a = apply(&mut out, &f_reflected);
        let b = apply(&mut out, &f);
        out.eq("V(f(1-x)) = V(f(x))", &a, &b);
    }
    out
}

pub(crate) fn i3_34(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let i = arg(p, "i") as usize;
    if i == 1 {
        out.eq("g_1,1", &ctx.g(1, 1), &int(1));
        out.eq("g_2,1", &ctx.g(2, 1), &int(1));
    }
    for j in 1..=i {
        let s = (j..=i).fold(int(0), |acc, l| acc + ctx.g(2 * i - 1, l));
        out.eq(format!("g_{},{j}", 2 * i), &ctx.g(2 * i, j), &s);
    }
    for j in 1..=i + 1 {
        let s = (1..=j).fold(int(0), |acc, l| acc + ctx.g(2 * i, l));
        out.eq(format!("g_{},{j}", 2 * i + 1), &ctx.g(2 * i + 1, j), &s);
    }
    out
}

pub(crate) fn i3_56(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    for k in 1..=n {
        let v = l(ctx, &mut out, &ctx.fib(2 * k - 1).shift((n + 1 - k) as i32));
        out.eq(
            format!("g_{},{k}", 2 * n),
            &ctx.g(2 * n as usize, k as usize),
            &v.signed(n),
        );
    }
    for k in 1..=n + 1 {
        let v = l(ctx, &mut out, &ctx.fib(2 * k).shift((n + 1 - k) as i32));
        out.eq(
            format!("g_{},{k}", 2 * n + 1),
            &ctx.g(2 * n as usize + 1, k as usize),
            &v.signed(n),
        );
    }
    out
}

pub(crate) fn i3_7(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let v = l(ctx, &mut out, &Poly::monomial(int(1), n as i32));
    out.eq("H_2n+1", &ctx.g(2 * n as usize + 1, 1), &v.signed(n));
    out
}

pub(crate) fn i3_8(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let (n, k) = (arg(p, "n"), arg(p, "k"));
    let lhs = (0..=k).fold(int(0), |acc, j| acc + bin(k, j) * ctx.egf((n + j) as usize));
    let diff = (0..=k).fold(Poly::zero(), |acc, j| {
        acc.add_ref(&ctx.fib(n + j).scale(&bin(k, j).signed(k - j)))
    });
    let closed = ctx.fib(n - k).shift(k as i32);
    out.eq("sum (-1)^(k-j) C(k,j) F_n+j = s^k F_n-k", &diff, &closed);
    let v = l(ctx, &mut out, &closed);
    out.eq("sum C(k,j) g_n+j", &lhs, &v.signed(n + k - 1));
    out
}

pub(crate) fn i3_9(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let g_form = (0..=n).fold(int(0), |acc, j| acc + bin(n, j) * ctx.egf((n + j) as usize));
    out.zero("sum C(n,j) g_n+j", &g_form);
    if n >= 2 {
        let big = (0..=n / 2).fold(int(0), |acc, k| {
            acc + (bin(n, 2 * k) * ctx.genocchi((n - k) as usize)).signed(k)
        });
        out.zero("sum C(n,2k) (-1)^k G_2n-2k", &big);
    } else {
        out.note("G-form needs G_0; checked for n >= 2");
    }
    out
}

pub(crate) fn i3_10(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let n = arg(p, "n");
    let h = ctx.g(2 * n as usize + 1, 1);
    let g_form = (0..=n + 1).fold(int(0), |acc, k| {
        acc + bin(n + 1, k) * ctx.egf((n + k) as usize)
    });
    out.eq("H_2n+1 via g", &h, &g_form.signed(n));
    if n >= 2 {
        let big = (0..=n / 2).fold(int(0), |acc, k| {
            acc + (bin(n + 1, 2 * k + 1) * ctx.genocchi((n - k) as usize)).signed(k)
        });
        out.eq("H_2n+1 via G", &h, &big);
    } else {
        out.note("G-form holds for n >= 2");
    }
    out
}

pub(crate) fn i3_11(ctx: &Context, p: &Params) -> Outcome {
    let mut out = Outcome::default();
    let order = arg(p, "order") as usize;
    let lhs = TruncSeries::from_fn(order, |i| match i {
        0 => int(1),
        _ if i % 2 == 1 => ctx.genocchi(i.div_ceil(2)).signed(i as i64 / 2),
        _ => int(0),
    });
    let mut scratch = Outcome::default();
    let via_l = TruncSeries::from_fn(order, |n| l(ctx, &mut scratch, ctx.fib(n as i64 + 1)));
    out.failures.append(&mut scratch.failures);
    out.series("sum L(F_n+1) z^n", &lhs, &via_l);
    let one = TruncSeries::constant(order, int(1));
    let z = TruncSeries::monomial(order, int(1), 1);
    let Some(geo) = out.ok("1/(1-z)", one.div(&one.sub(&z))) else {
        return out;
    };
    let w = z.mul(&z).mul(&geo);
    let mut inner = TruncSeries::zero(order);
    let mut w_pow = one.clone();
    for n in 0..=order / 2 {
        let h = ctx.g(2 * n + 1, 1).signed(n as i64);
        inner = inner.add(&w_pow.scale(&h));
        w_pow = w_pow.mul(&w);
    }
    out.series("sum F_n+1 z^n", &lhs, &geo.mul(&inner));
    // generating function before L: 1/(1-z-sz^2) = 1/(1-z) sum s^n (z^2/(1-z))^n
    let fib_gf = TruncSeries::from_fn(order, |n| ctx.fib(n as i64 + 1).clone());
    let one_s = TruncSeries::constant(order, Poly::one());
    let z_s = TruncSeries::monomial(order, Poly::one(), 1);
    let denom = one_s
        .sub(&z_s)
        .sub(&TruncSeries::monomial(order, Poly::s(), 2));
    if let Some(direct) = out.ok("1/(1-z-sz^2)", one_s.div(&denom)) {
        out.series("sum F_n+1 z^n", &fib_gf, &direct);
    }
    let lift = |a: &TruncSeries<Rational>| {
        TruncSeries::from_fn(order, |n| Poly::constant(a.coeff(n).clone()))
    };
    let (geo_s, w_s) = (lift(&geo), lift(&w));
    let mut expansion = TruncSeries::zero(order);
    let mut w_pow = one_s.clone();
    for n in 0..=order / 2 {
        expansion = expansion.add(&w_pow.scale(&Poly::monomial(int(1), n as i32)));
        w_pow = w_pow.mul(&w_s);
    }
    out.series("1/(1-z) sum s^n w^n", &fib_gf, &geo_s.mul(&expansion));
    out
}
