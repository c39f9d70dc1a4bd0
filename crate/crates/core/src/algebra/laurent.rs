use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::{forward_ops, int, QAlgebra, Rational, Ring, TryDiv};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored as integer coefficients over one positive common denominator,
/// trimmed at both ends, with `gcd(content, den) = 1`. The zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent {
    low: i64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl QLaurent {
    /// Builds `(num[0] q^low + num[1] q^{low+1} + ...) / den`.
    pub fn from_int_coeffs(low: i64, num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = QLaurent { low, num, den };
        out.normalize();
        out
    }

    pub fn from_coeffs(low: i64, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_int_coeffs(low, num, den)
    }

    pub fn monomial(coeff: Rational, exp: i64) -> Self {
        Self::from_int_coeffs(exp, vec![coeff.numer().clone()], coeff.denom().clone())
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        QLaurent {
            low: exp,
            num: vec![BigInt::one()],
            den: BigInt::one(),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    fn normalize(&mut self) {
        intpoly::trim(&mut self.num);
        let lead = self.num.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.num.drain(..lead);
            self.low += lead as i64;
        }
        if self.num.is_empty() {
            self.low = 0;
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if !self.den.is_one() {
            let g = intpoly::content(&self.num).gcd(&self.den);
            if !g.is_one() {
                for c in &mut self.num {
                    *c = &*c / &g;
                }
                self.den = &self.den / &g;
            }
        }
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.num.is_empty()).then_some(self.low)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.num.is_empty()).then(|| self.low + self.num.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.num.len() {
            return <Rational as Zero>::zero();
        }
        Rational::new(self.num[idx as usize].clone(), self.den.clone())
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Rational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                (
                    self.low + i as i64,
                    Rational::new(c.clone(), self.den.clone()),
                )
            })
    }

    pub fn term_count(&self) -> usize {
        self.num.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    /// True when no negative powers of `q` occur.
    pub fn is_polynomial(&self) -> bool {
        self.num.is_empty() || self.low >= 0
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.den.is_one() && self.num.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplies by `q^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        if self.num.is_empty() {
            return self.clone();
        }
        QLaurent {
            low: self.low + exp,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// The substitution `q -> 1/q`: every exponent is negated.
    pub fn substitute_q_inverse(&self) -> Self {
        match self.high_exp() {
            None => self.clone(),
            Some(high) => {
                let mut num = self.num.clone();
                num.reverse();
                QLaurent {
                    low: -high,
                    num,
                    den: self.den.clone(),
                }
            }
        }
    }

    /// Exact value at `q = 1`.
    pub fn at_q_one(&self) -> Rational {
        let total: BigInt = self.num.iter().sum();
        Rational::new(total, self.den.clone())
    }

    pub(crate) fn int_parts(&self) -> (i64, &[BigInt], &BigInt) {
        (self.low, &self.num, &self.den)
    }
}

impl Default for QLaurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for QLaurent {
    fn from(r: Rational) -> Self {
        Self::monomial(r, 0)
    }
}

impl Ring for QLaurent {
    fn zero() -> Self {
        QLaurent {
            low: 0,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    fn one() -> Self {
        Self::q_pow(0)
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.num.is_empty() {
            return rhs.clone();
        }
        if rhs.num.is_empty() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut num = vec![BigInt::zero(); (high - low + 1) as usize];
        let (den, fa, fb) = if self.den == rhs.den {
            (self.den.clone(), None, None)
        } else {
            let l = self.den.lcm(&rhs.den);
            let fa = &l / &self.den;
            let fb = &l / &rhs.den;
            (l, Some(fa), Some(fb))
        };
        for (i, c) in self.num.iter().enumerate() {
            let slot = &mut num[(self.low - low) as usize + i];
            match &fa {
                Some(f) => *slot += c * f,
                None => *slot += c,
            }
        }
        for (i, c) in rhs.num.iter().enumerate() {
            let slot = &mut num[(rhs.low - low) as usize + i];
            match &fb {
                Some(f) => *slot += c * f,
                None => *slot += c,
            }
        }
        Self::from_int_coeffs(low, num, den)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.num.is_empty() || rhs.num.is_empty() {
            return Self::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        Self::from_int_coeffs(self.low + rhs.low, num, &self.den * &rhs.den)
    }

    fn neg_ref(&self) -> Self {
        QLaurent {
            low: self.low,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    fn from_int(n: i64) -> Self {
        Self::monomial(int(n), 0)
    }
}

impl QAlgebra for QLaurent {
    fn from_rational(r: &Rational) -> Self {
        Self::monomial(r.clone(), 0)
    }

    fn scale(&self, r: &Rational) -> Self {
        if Zero::is_zero(r) {
            return Self::zero();
        }
        Self::from_int_coeffs(
            self.low,
            self.num.iter().map(|c| c * r.numer()).collect(),
            &self.den * r.denom(),
        )
    }
}

impl TryDiv for QLaurent {
    /// Units of the Laurent ring are exactly the nonzero monomials.
    fn is_unit(&self) -> bool {
        self.is_monomial()
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if !d.is_monomial() {
            return None;
        }
        let (exp, c) = d.terms().next()?;
        Some(self.shift(-exp).scale(&c.recip()))
    }
}

forward_ops!(QLaurent);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn poly(low: i64, cs: &[i64]) -> QLaurent {
        QLaurent::from_int_coeffs(
            low,
            cs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::one(),
        )
    }

    #[test]
    fn canonical_form_is_trimmed() {
        let p = poly(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(p, poly(0, &[1, 2]));
        assert_eq!(poly(3, &[0, 0]), QLaurent::zero());
        let half = QLaurent::from_coeffs(0, &[rat(1, 2), rat(3, 2)]);
        assert_eq!(half.coeff(1), rat(3, 2));
        assert_eq!(half.scale(&int(2)), poly(0, &[1, 3]));
    }

    #[test]
    fn arithmetic() {
        let a = poly(0, &[1, 1]);
        let b = poly(-1, &[1, -1]);
        assert_eq!(&a * &b, poly(-1, &[1, 0, -1]));
        assert_eq!(&a + &b, poly(-1, &[1, 0, 1]));
        assert_eq!(&a - &a, QLaurent::zero());
    }

    #[test]
    fn q_inverse_examples() {
        assert_eq!(
            QLaurent::q_pow(2).substitute_q_inverse(),
            QLaurent::q_pow(-2)
        );
        assert_eq!(poly(0, &[1, 1]).substitute_q_inverse(), poly(-1, &[1, 1]));
        let p = poly(0, &[1, 1, 0, 2]);
        assert_eq!(p.substitute_q_inverse().substitute_q_inverse(), p);
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(poly(0, &[1, 1, 1]).at_q_one(), int(3));
        assert_eq!(QLaurent::q_pow(-1).at_q_one(), int(1));
    }

    #[test]
    fn unit_division() {
        let p = poly(0, &[2, 4]);
        let d = QLaurent::monomial(int(2), 3);
        assert_eq!(p.try_div(&d), Some(poly(-3, &[1, 2])));
        assert_eq!(p.try_div(&poly(0, &[1, 1])), None);
    }
}
