//! Classical and q-Fibonacci polynomials.
//!
//! The three families satisfy
//!
//! ```text
//! classical:  F_n = F_{n-1} + s F_{n-2}
//! q:          F_n = F_{n-1} + q^{n-3} s F_{n-2}
//! q-inverse:  F_n = F_{n-1} + q^{3-n} s F_{n-2}
//! ```
//!
//! with `F_0 = 0`, `F_1 = 1`. Index `-1` is supported and is the value the
//! recursion forces at `n = 1`: `s^-1`, `q^2 s^-1` and `q^-2 s^-1`.

use crate::algebra::{QLaurent, Rational, Ring, SLaurent, TryDiv};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibKind {
    Classical,
    Q,
    QInverse,
}

/// A memoized Fibonacci family. Indices grow monotonically; the cache covers
/// `-1..=max_index()`.
#[derive(Clone)]
pub struct FibFamily<C> {
    kind: FibKind,
    weight: fn(i64) -> C,
    /// `polys[i]` holds `F_{i-1}`.
    polys: Vec<SLaurent<C>>,
}

fn unit_weight(_n: i64) -> Rational {
    <Rational as Ring>::one()
}

fn q_weight(n: i64) -> QLaurent {
    QLaurent::q_pow(n - 3)
}

fn q_inverse_weight(n: i64) -> QLaurent {
    QLaurent::q_pow(3 - n)
}

impl FibFamily<Rational> {
    pub fn classical() -> Self {
        Self::seeded(FibKind::Classical, unit_weight)
    }
}

impl FibFamily<QLaurent> {
    pub fn q() -> Self {
        Self::seeded(FibKind::Q, q_weight)
    }

    /// The family `F_n(s, 1/q)`.
    pub fn q_inverse() -> Self {
        Self::seeded(FibKind::QInverse, q_inverse_weight)
    }
}

impl<C: TryDiv> FibFamily<C> {
    fn seeded(kind: FibKind, weight: fn(i64) -> C) -> Self {
        // F_1 = F_0 + w(1) s F_{-1}  =>  F_{-1} = s^-1 / w(1)
        let inv = weight(1).try_inv().expect("recursion weights are units");
        let minus_one = SLaurent::monomial(inv, -1);
        let polys = vec![minus_one, SLaurent::zero(), SLaurent::one()];
        FibFamily {
            kind,
            weight,
            polys,
        }
    }

    /// Family with the cache filled up to `n`.
    pub fn with_max(mut self, n: i64) -> Self {
        self.ensure(n);
        self
    }

    pub fn kind(&self) -> FibKind {
        self.kind
    }

    pub fn max_index(&self) -> i64 {
        self.polys.len() as i64 - 2
    }

    /// Grows the cache to include index `n`.
    pub fn ensure(&mut self, n: i64) {
        while self.max_index() < n {
            let m = self.max_index() + 1;
            let k = self.polys.len();
            let step = self.polys[k - 2].shift(1).scale(&(self.weight)(m));
            let next = self.polys[k - 1].add_ref(&step);
            self.polys.push(next);
        }
    }

    /// Cached `F_n`; `None` if `n` has not been computed yet.
    pub fn get(&self, n: i64) -> Option<&SLaurent<C>> {
        if n < -1 {
            return None;
        }
        self.polys.get((n + 1) as usize)
    }

    /// Mutable access to a cached `F_n`. Later growth builds on the edited value.
    pub fn get_mut(&mut self, n: i64) -> Option<&mut SLaurent<C>> {
        if n < -1 {
            return None;
        }
        self.polys.get_mut((n + 1) as usize)
    }

    /// `F_n`, growing the cache as needed.
    pub fn poly(&mut self, n: i64) -> Result<SLaurent<C>> {
        if n < -1 {
            return Err(Error::IndexOutOfRange { index: n, min: -1 });
        }
        self.ensure(n);
        Ok(self.polys[(n + 1) as usize].clone())
    }

    /// `F_n` from a warmed cache. Panics if `n` is outside `-1..=max_index()`.
    pub fn at(&self, n: i64) -> &SLaurent<C> {
        self.get(n)
            .unwrap_or_else(|| panic!("F_{n} not cached (max {})", self.max_index()))
    }
}

impl<C: Ring> std::fmt::Debug for FibFamily<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FibFamily")
            .field("kind", &self.kind)
            .field("max_index", &(self.polys.len() as i64 - 2))
            .finish()
    }
}

/// Classical Fibonacci polynomial `F_n(s)`.
pub fn fib_poly(n: i64) -> Result<SLaurent<Rational>> {
    FibFamily::classical().poly(n)
}

/// Carlitz q-Fibonacci polynomial `F_n(s, q)`.
pub fn q_fib_poly(n: i64) -> Result<SLaurent<QLaurent>> {
    FibFamily::q().poly(n)
}

/// `F_n(s, 1/q)`.
pub fn q_fib_poly_inv(n: i64) -> Result<SLaurent<QLaurent>> {
    FibFamily::q_inverse().poly(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, gaussian_binomial, int, q_integer, Parse};

    fn classical(cs: &[i64]) -> SLaurent<Rational> {
        SLaurent::from_coeffs(0, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn classical_values() {
        assert_eq!(fib_poly(0).unwrap(), SLaurent::zero());
        assert_eq!(fib_poly(1).unwrap(), SLaurent::one());
        assert_eq!(fib_poly(5).unwrap(), classical(&[1, 3, 1]));
        assert_eq!(fib_poly(-1).unwrap(), SLaurent::monomial(int(1), -1));
        assert_eq!(
            fib_poly(-2),
            Err(Error::IndexOutOfRange { index: -2, min: -1 })
        );
    }

    #[test]
    fn classical_matches_binomial_sum() {
        let fam = FibFamily::classical().with_max(40);
        for n in 1..=40i64 {
            let direct = SLaurent::from_coeffs(
                0,
                (0..n)
                    .map(|k| Rational::from_integer(binomial(n - k - 1, k)))
                    .collect(),
            );
            assert_eq!(fam.at(n), &direct, "n = {n}");
            assert_eq!(fam.at(n).degree(), Some(((n - 1) / 2) as i32));
        }
    }

    #[test]
    fn q_values() {
        assert_eq!(q_fib_poly(2).unwrap(), SLaurent::one());
        assert_eq!(
            q_fib_poly(4).unwrap(),
            SLaurent::from_coeffs(0, vec![QLaurent::one(), q_integer(2)])
        );
        assert_eq!(
            q_fib_poly(-1).unwrap(),
            SLaurent::monomial(QLaurent::q_pow(2), -1)
        );
        assert_eq!(q_fib_poly(7).unwrap().at_q_one(), fib_poly(7).unwrap());
    }

    #[test]
    fn q_matches_gaussian_sum() {
        // F_n(s,q) = sum_k q^{k(k-1)} [n-1-k, k] s^k
        let fam = FibFamily::q().with_max(24);
        for n in 1..=24i64 {
            let direct = SLaurent::from_coeffs(
                0,
                (0..n)
                    .map(|k| gaussian_binomial(n - 1 - k, k).shift(k * (k - 1)))
                    .collect(),
            );
            assert_eq!(fam.at(n), &direct, "n = {n}");
            let d = (n - 1) / 2;
            assert_eq!(fam.at(n).degree(), Some(d as i32));
            if n % 2 == 1 {
                assert_eq!(
                    fam.at(n).leading_coeff(),
                    Some(&QLaurent::q_pow(d * (d - 1)))
                );
            }
        }
    }

    #[test]
    fn q_inverse_values() {
        assert_eq!(
            q_fib_poly_inv(3).unwrap(),
            SLaurent::parse("1 + s").unwrap()
        );
        assert_eq!(
            q_fib_poly_inv(4).unwrap(),
            SLaurent::parse("1 + (1 + q^-1)*s").unwrap()
        );
        assert_eq!(
            q_fib_poly_inv(5).unwrap(),
            SLaurent::parse("1 + (1 + q^-1 + q^-2)*s + q^-2*s^2").unwrap()
        );
        let q = FibFamily::q().with_max(20);
        let inv = FibFamily::q_inverse().with_max(20);
        for n in -1..=20 {
            assert_eq!(&q.at(n).substitute_q_inverse(), inv.at(n));
        }
    }

    #[test]
    fn q_inverse_closed_form() {
        // F_n(s,1/q) = sum_k q^{k^2+2k-nk} [n-1-k, k] s^k
        let inv = FibFamily::q_inverse().with_max(16);
        for n in 1..=16i64 {
            let direct = SLaurent::from_coeffs(
                0,
                (0..n)
                    .map(|k| gaussian_binomial(n - 1 - k, k).shift(k * k + 2 * k - n * k))
                    .collect(),
            );
            assert_eq!(inv.at(n), &direct);
        }
    }

    #[test]
    fn recursion_residuals_vanish() {
        let c = FibFamily::classical().with_max(40);
        for n in 1..=40 {
            let r = c.at(n).sub_ref(c.at(n - 1)).sub_ref(&c.at(n - 2).shift(1));
            assert!(r.is_zero(), "classical n = {n}");
        }
        let q = FibFamily::q().with_max(24);
        for n in 1..=24 {
            let step = q.at(n - 2).shift(1).scale(&QLaurent::q_pow(n - 3));
            let r = q.at(n).sub_ref(q.at(n - 1)).sub_ref(&step);
            assert!(r.is_zero(), "q n = {n}");
        }
    }

    #[test]
    fn alternating_binomial_sums_vanish() {
        let c = FibFamily::classical().with_max(30);
        for n in 0..=15i64 {
            let total = crate::algebra::sum((0..=n).map(|k| {
                c.at(2 * n - k)
                    .scale(&Rational::from_integer(binomial(n, k)))
                    .signed(k)
            }));
            assert!(total.is_zero(), "n = {n}");
        }
        let q = FibFamily::q().with_max(20);
        for n in 0..=10i64 {
            let total = crate::algebra::sum((0..=n).map(|k| {
                q.at(2 * n - k)
                    .scale(&gaussian_binomial(n, k).shift(k * (k - 1) / 2))
                    .signed(k)
            }));
            assert!(total.is_zero(), "n = {n}");
        }
    }
}
