use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{QAlgebra, Ring, TryDiv};

/// Exact fraction, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient. Negative `n` uses `(-1)^k C(k-n-1, k)`; zero when
/// `k < 0` or `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

impl QAlgebra for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl TryDiv for Rational {
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}
