use super::{QAlgebra, QLaurent, Rational, Ring, TryDiv};

/// Polynomial in `s` over a coefficient ring `C`, allowing a finite number
/// of negative powers of `s`.
///
/// Coefficients are stored densely from `s^low` upward with `low <= 0`.
/// Trailing zeros are trimmed, and leading zeros are trimmed while
/// `low < 0`, so polynomials always have `low == 0`. The only negative
/// offsets the crate constructs are the index `-1` Fibonacci objects.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SLaurent<C> {
    low: i32,
    coeffs: Vec<C>,
}

impl<C: Ring> SLaurent<C> {
    pub fn from_coeffs(low: i32, coeffs: Vec<C>) -> Self {
        assert!(low <= 0, "offset must be nonpositive");
        let mut out = SLaurent { low, coeffs };
        out.normalize();
        out
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c * s^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        if exp >= 0 {
            let mut coeffs = vec![C::zero(); exp as usize + 1];
            coeffs[exp as usize] = c;
            Self::from_coeffs(0, coeffs)
        } else {
            let mut coeffs = vec![C::zero(); (-exp) as usize];
            coeffs[0] = c;
            Self::from_coeffs(exp, coeffs)
        }
    }

    pub fn s() -> Self {
        Self::monomial(C::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
        while self.low < 0 && self.coeffs.first().is_some_and(Ring::is_zero) {
            self.coeffs.remove(0);
            self.low += 1;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Offset: the exponent of the first stored coefficient.
    pub fn offset(&self) -> i32 {
        self.low
    }

    /// Degree in `s`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        let top = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some(self.low + top as i32)
    }

    pub fn coeff(&self, exp: i32) -> Option<&C> {
        let idx = exp - self.low;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize).filter(|c| !c.is_zero())
    }

    pub fn coeff_or_zero(&self, exp: i32) -> C {
        self.coeff(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.degree().and_then(|d| self.coeff(d))
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Multiplies by `s^exp`.
    pub fn shift(&self, exp: i32) -> Self {
        let low = self.low + exp;
        if low > 0 {
            let mut coeffs = vec![C::zero(); low as usize];
            coeffs.extend(self.coeffs.iter().cloned());
            Self::from_coeffs(0, coeffs)
        } else {
            Self::from_coeffs(low, self.coeffs.clone())
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SLaurent<D> {
        SLaurent::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }
}

impl SLaurent<QLaurent> {
    /// Applies `q -> 1/q` coefficient-wise.
    pub fn substitute_q_inverse(&self) -> Self {
        self.map_coeffs(QLaurent::substitute_q_inverse)
    }

    /// Specializes every coefficient at `q = 1`.
    pub fn at_q_one(&self) -> SLaurent<Rational> {
        self.map_coeffs(QLaurent::at_q_one)
    }
}

impl<C: Ring> Ring for SLaurent<C> {
    fn zero() -> Self {
        SLaurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i32).max(rhs.low + rhs.coeffs.len() as i32);
        let mut coeffs = vec![C::zero(); (high - low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(self.low - low) as usize + i];
            *slot = slot.add_ref(c);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.low - low) as usize + i];
            *slot = slot.add_ref(c);
        }
        Self::from_coeffs(low, coeffs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(self.low + rhs.low, coeffs)
    }

    fn neg_ref(&self) -> Self {
        SLaurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
}

impl<C: QAlgebra> QAlgebra for SLaurent<C> {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }
}

impl<C: TryDiv> TryDiv for SLaurent<C> {
    /// Units are monomials `c s^k` with `c` a unit of `C`.
    fn is_unit(&self) -> bool {
        let mut terms = self.terms();
        matches!((terms.next(), terms.next()), (Some((_, c)), None) if c.is_unit())
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        let mut terms = d.terms();
        let (exp, c) = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            _ => return None,
        };
        let inv = c.try_inv()?;
        Some(self.scale(&inv).shift(-exp))
    }
}

impl<C: Ring> Default for SLaurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> std::ops::Add<&SLaurent<C>> for &SLaurent<C> {
    type Output = SLaurent<C>;
    fn add(self, rhs: &SLaurent<C>) -> SLaurent<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> std::ops::Sub<&SLaurent<C>> for &SLaurent<C> {
    type Output = SLaurent<C>;
    fn sub(self, rhs: &SLaurent<C>) -> SLaurent<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> std::ops::Mul<&SLaurent<C>> for &SLaurent<C> {
    type Output = SLaurent<C>;
    fn mul(self, rhs: &SLaurent<C>) -> SLaurent<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> std::ops::Neg for &SLaurent<C> {
    type Output = SLaurent<C>;
    fn neg(self) -> SLaurent<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(cs: &[i64]) -> SLaurent<Rational> {
        SLaurent::from_coeffs(0, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn inverse_power_times_s_is_polynomial() {
        let inv = SLaurent::monomial(int(1), -1);
        assert_eq!(inv.offset(), -1);
        assert_eq!(inv.degree(), Some(-1));
        let prod = &inv * &p(&[0, 0, 1]);
        assert_eq!(prod, p(&[0, 1]));
        assert_eq!(prod.offset(), 0);
    }

    #[test]
    fn degree_and_coefficients() {
        let f = p(&[1, 3, 1]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.coeff(1), Some(&int(3)));
        assert_eq!(f.coeff(7), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(f.shift(2), p(&[0, 0, 1, 3, 1]));
        assert_eq!(f.shift(-1).offset(), -1);
    }

    #[test]
    fn monomial_division() {
        let f = p(&[0, 2, 4]);
        let d = SLaurent::monomial(int(2), 1);
        assert_eq!(f.try_div(&d), Some(p(&[1, 2])));
        assert_eq!(f.try_div(&p(&[1, 1])), None);
    }
}
