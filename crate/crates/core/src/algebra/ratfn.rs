use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly;
use super::{forward_ops, Embed, QAlgebra, QLaurent, Rational, Ring, TryDiv};
use crate::error::{Error, Result};

/// Quotient of two polynomials in `q` over the rationals.
///
/// Canonical form: numerator and denominator are polynomials (no negative
/// exponents), coprime, and the denominator is monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFn {
    num: QLaurent,
    den: QLaurent,
}

impl QRatFn {
    /// Returns `None` when `den` is zero.
    pub fn new(num: QLaurent, den: QLaurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &QLaurent {
        &self.num
    }

    pub fn denom(&self) -> &QLaurent {
        &self.den
    }

    /// The value as a Laurent polynomial when the denominator is a power of `q`.
    pub fn as_laurent(&self) -> Option<QLaurent> {
        self.num.try_div(&self.den)
    }

    pub fn substitute_q_inverse(&self) -> Self {
        Self::reduce(
            self.num.substitute_q_inverse(),
            self.den.substitute_q_inverse(),
        )
    }

    /// Exact value at `q = 1`.
    pub fn at_q_one(&self) -> Result<Rational> {
        let d = self.den.at_q_one();
        if Zero::is_zero(&d) {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.at_q_one() / d)
    }

    fn reduce(num: QLaurent, den: QLaurent) -> Self {
        let (Some(a), Some(b)) = (num.low_exp(), den.low_exp()) else {
            return QRatFn {
                num: QLaurent::zero(),
                den: QLaurent::one(),
            };
        };
        let shift = a - b;
        let (_, pn, pd) = num.int_parts();
        let (_, qn, qd) = den.int_parts();
        let g = intpoly::gcd(pn, qn);
        let (p, q) = if g.len() > 1 {
            (intpoly::exact_div(pn, &g), intpoly::exact_div(qn, &g))
        } else {
            (pn.to_vec(), qn.to_vec())
        };
        let lc = q.last().cloned().unwrap_or_else(BigInt::one);
        let p_scaled: Vec<BigInt> = if qd.is_one() {
            p
        } else {
            p.into_iter().map(|c| c * qd).collect()
        };
        let num = QLaurent::from_int_coeffs(shift.max(0), p_scaled, pd * &lc);
        let den = QLaurent::from_int_coeffs((-shift).max(0), q, lc);
        QRatFn { num, den }
    }
}

impl From<QLaurent> for QRatFn {
    fn from(p: QLaurent) -> Self {
        Self::reduce(p, QLaurent::one())
    }
}

impl Embed<QLaurent> for QRatFn {
    fn embed(c: &QLaurent) -> Self {
        Self::from(c.clone())
    }
}

impl Ring for QRatFn {
    fn zero() -> Self {
        QRatFn {
            num: QLaurent::zero(),
            den: QLaurent::one(),
        }
    }

    fn one() -> Self {
        QRatFn {
            num: QLaurent::one(),
            den: QLaurent::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den.clone());
        }
        Self::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn neg_ref(&self) -> Self {
        QRatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn from_int(n: i64) -> Self {
        Self::from(QLaurent::from_int(n))
    }
}

impl QAlgebra for QRatFn {
    fn from_rational(r: &Rational) -> Self {
        Self::from(QLaurent::from_rational(r))
    }
}

impl TryDiv for QRatFn {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        Some(Self::reduce(&self.num * &d.den, &self.den * &d.num))
    }
}

impl Default for QRatFn {
    fn default() -> Self {
        Self::zero()
    }
}

forward_ops!(QRatFn);
