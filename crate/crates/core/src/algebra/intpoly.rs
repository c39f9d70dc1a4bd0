//! Dense integer polynomial helpers (ascending coefficients) used by the
//! rational-function normalizer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = p.to_vec();
    trim(&mut out);
    if out.is_empty() {
        return out;
    }
    let mut g = content(&out);
    if out.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut out {
            *c = &*c / &g;
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor in Q[x], returned primitive with positive leading
/// coefficient. `gcd(0, 0)` is the empty polynomial.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(&prem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Exact quotient `a / b` in Z[x]; `b` must be primitive and divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}
