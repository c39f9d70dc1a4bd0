//! Exact coefficient rings.
//!
//! Everything in the crate is computed over one of the rings defined here:
//!
//! - [`Rational`]: arbitrary-precision fractions (backed by `num-rational`),
//! - [`QLaurent`]: Laurent polynomials in `q` over the rationals,
//! - [`QRatFn`]: reduced quotients of polynomials in `q`,
//! - [`SLaurent`]: polynomials in `s` over any of the above, allowing `s^-1`,
//! - [`TruncSeries`]: truncated power series in `z`.
//!
//! The ring interface is the [`Ring`] trait. Operations take references so
//! that big-integer payloads are not cloned needlessly.

mod gaussian;
mod intpoly;
mod laurent;
mod parse;
mod ratfn;
mod rational;
mod render;
mod series;
mod spoly;

pub use gaussian::{gaussian_binomial, q_integer};
pub use laurent::QLaurent;
pub use parse::{parse_expr, Parse};
pub use ratfn::QRatFn;
pub use rational::{binomial, factorial, int, rat, Rational};
pub use render::Render;
pub use series::{series_arith, SeriesOp, TruncSeries};
pub use spoly::SLaurent;

use std::fmt;

/// A commutative ring with identity.
pub trait Ring: Clone + PartialEq + fmt::Debug + Render + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn pow_u(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// `(-1)^k * self`.
    fn signed(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.neg_ref()
        }
    }
}

/// Rings containing the rationals.
pub trait QAlgebra: Ring {
    fn from_rational(r: &Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }
}

/// Exact division by units.
pub trait TryDiv: Ring {
    fn is_unit(&self) -> bool;

    /// Returns `self / d` when `d` is a unit, `None` otherwise.
    fn try_div(&self, d: &Self) -> Option<Self>;

    fn try_inv(&self) -> Option<Self> {
        Self::one().try_div(self)
    }

    /// Integer power; negative exponents require a unit.
    fn try_pow(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            Some(self.pow_u(exp as u32))
        } else {
            self.try_inv()
                .map(|inv| inv.pow_u(exp.unsigned_abs() as u32))
        }
    }
}

/// Ring embedding `C -> Self`.
pub trait Embed<C>: Ring {
    fn embed(c: &C) -> Self;
}

impl<T: Ring> Embed<T> for T {
    fn embed(c: &T) -> Self {
        c.clone()
    }
}

/// Sum of an iterator of ring elements.
pub fn sum<R: Ring>(iter: impl IntoIterator<Item = R>) -> R {
    iter.into_iter().fold(R::zero(), |acc, x| acc.add_ref(&x))
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::add_ref(self, rhs)
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::algebra::Ring::add_ref(&self, &rhs)
            }
        }
        impl std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::sub_ref(self, rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::algebra::Ring::sub_ref(&self, &rhs)
            }
        }
        impl std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::mul_ref(self, rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::algebra::Ring::mul_ref(&self, &rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg_ref(self)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg_ref(&self)
            }
        }
    };
}
pub(crate) use forward_ops;
