use super::{factorial, QAlgebra, Rational, Ring, TryDiv};
use crate::error::{Error, Result};

/// Power series in `z` truncated after `z^order`.
///
/// Coefficients are stored plain (not divided by factorials). Binary
/// operations produce the smaller of the two operand orders.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; see [`TruncSeries::div`] for the division
/// precondition.
pub fn series_arith<C: TryDiv>(
    a: &TruncSeries<C>,
    b: &TruncSeries<C>,
    op: SeriesOp,
) -> Result<TruncSeries<C>> {
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b)?,
    })
}

impl<C: Ring> TruncSeries<C> {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: C) -> Self {
        Self::new(order, vec![c])
    }

    /// `c * z^exp`.
    pub fn monomial(order: usize, c: C, exp: usize) -> Self {
        Self::from_fn(order, |i| if i == exp { c.clone() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |i| self.coeffs[i].add_ref(&rhs.coeffs[i]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |i| self.coeffs[i].sub_ref(&rhs.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order, |i| self.coeffs[i].neg_ref())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |n| {
            let mut acc = C::zero();
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
            }
            acc
        })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self::from_fn(self.order, |i| self.coeffs[i].mul_ref(c))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.order, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                C::zero()
            }
        })
    }

    /// The substitution `z -> c z`.
    pub fn dilate(&self, c: &C) -> Self {
        let mut power = C::one();
        Self::from_fn(self.order, |i| {
            let out = self.coeffs[i].mul_ref(&power);
            power = power.mul_ref(c);
            out
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl<C: TryDiv> TruncSeries<C> {
    /// Requires the constant term of `rhs` to be a unit of `C`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let order = self.order.min(rhs.order);
        let inv0 = rhs.coeffs[0]
            .try_inv()
            .ok_or(Error::NonInvertibleConstantTerm)?;
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                let b = &rhs.coeffs[i];
                if !b.is_zero() {
                    acc = acc.sub_ref(&b.mul_ref(&out[n - i]));
                }
            }
            out.push(acc.mul_ref(&inv0));
        }
        Ok(TruncSeries { order, coeffs: out })
    }
}

impl<C: QAlgebra> TruncSeries<C> {
    /// `e^z` truncated at `order`.
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |n| {
            C::from_rational(&Rational::new(1.into(), factorial(n as u64)))
        })
    }
}
