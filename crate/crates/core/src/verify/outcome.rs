use std::fmt::Display;

use crate::algebra::{binomial, gaussian_binomial, QLaurent, Rational, Ring, TruncSeries};
use crate::error::Error;

/// Accumulates the checks of one case.
#[derive(Default)]
pub(crate) struct Outcome {
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub anomaly: Option<String>,
}

impl Outcome {
    pub fn eq<R: Ring>(&mut self, label: impl Display, lhs: &R, rhs: &R) -> bool {
        if lhs == rhs {
            return true;
        }
        self.failures.push(format!(
            "{label}: lhs - rhs = {}",
            lhs.sub_ref(rhs).render()
        ));
        false
    }

    pub fn zero<R: Ring>(&mut self, label: impl Display, v: &R) -> bool {
        self.eq(label, v, &R::zero())
    }

    /// Compares coefficientwise and reports the first mismatch.
    pub fn series<R: Ring>(
        &mut self,
        label: impl Display,
        a: &TruncSeries<R>,
        b: &TruncSeries<R>,
    ) -> bool {
        let order = a.order().min(b.order());
        for n in 0..=order {
            if a.coeff(n) != b.coeff(n) {
                self.failures.push(format!(
                    "{label}: [z^{n}] lhs - rhs = {}",
                    a.coeff(n).sub_ref(b.coeff(n)).render()
                ));
                return false;
            }
        }
        true
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Unwraps `r`, recording an error as a failure.
    pub fn ok<T>(&mut self, label: impl Display, r: Result<T, Error>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{label}: {e}"));
                None
            }
        }
    }
}

/// `n(n-1)/2`, valid for negative `n`.
pub(crate) fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub(crate) fn bin(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub(crate) fn qp(e: i64) -> QLaurent {
    QLaurent::q_pow(e)
}

pub(crate) fn qb(n: i64, k: i64) -> QLaurent {
    gaussian_binomial(n, k)
}
