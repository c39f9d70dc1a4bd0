//! Canonical text rendering.
//!
//! Sums are written in increasing exponent order, terms joined by `" + "` or
//! `" - "`; products use `*`, powers `^` (negative exponents as `q^-2`).
//! Coefficients of `s^k` that are themselves sums are parenthesized. The
//! compact form is the same text with all spaces removed; the parser
//! accepts both.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{QLaurent, QRatFn, Rational, Ring, SLaurent};

pub trait Render {
    fn render(&self) -> String;

    fn render_compact(&self) -> String {
        self.render().replace(' ', "")
    }

    /// `(is_negative, magnitude)` when the value prints as a single term.
    fn single_term(&self) -> Option<(bool, String)>;
}

fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, body) in terms {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, exp: i64) -> String {
    if exp == 1 {
        var.to_string()
    } else {
        format!("{var}^{exp}")
    }
}

fn term(coeff: &Rational, var: &str, exp: i64) -> (bool, String) {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    let body = if exp == 0 {
        mag.to_string()
    } else if One::is_one(&mag) {
        power(var, exp)
    } else {
        format!("{mag}*{}", power(var, exp))
    };
    (neg, body)
}

impl Render for Rational {
    fn render(&self) -> String {
        self.to_string()
    }

    fn single_term(&self) -> Option<(bool, String)> {
        Some((self.is_negative(), self.abs().to_string()))
    }
}

impl Render for BigInt {
    fn render(&self) -> String {
        self.to_string()
    }

    fn single_term(&self) -> Option<(bool, String)> {
        Some((self.is_negative(), self.abs().to_string()))
    }
}

impl Render for QLaurent {
    fn render(&self) -> String {
        join_terms(self.terms().map(|(e, c)| term(&c, "q", e)))
    }

    fn single_term(&self) -> Option<(bool, String)> {
        match self.term_count() {
            0 => Some((false, "0".into())),
            1 => {
                let (e, c) = self.terms().next()?;
                Some(term(&c, "q", e))
            }
            _ => None,
        }
    }
}

impl Render for QRatFn {
    fn render(&self) -> String {
        let (num, den) = (self.numer(), self.denom());
        if den.is_one() {
            return num.render();
        }
        let num_s = if num.term_count() <= 1 {
            num.render()
        } else {
            format!("({})", num.render())
        };
        let den_s = if den.term_count() == 1 {
            den.render()
        } else {
            format!("({})", den.render())
        };
        format!("{num_s}/{den_s}")
    }

    fn single_term(&self) -> Option<(bool, String)> {
        if self.denom().is_one() {
            self.numer().single_term()
        } else {
            None
        }
    }
}

impl<C: Ring + Render> SLaurent<C> {
    /// Renders with `var` as the polynomial variable.
    pub fn render_var(&self, var: &str) -> String {
        join_terms(self.terms().map(|(k, c)| {
            let k = i64::from(k);
            match c.single_term() {
                Some((neg, body)) if k == 0 => (neg, body),
                Some((neg, body)) if body == "1" => (neg, power(var, k)),
                Some((neg, body)) => (neg, format!("{body}*{}", power(var, k))),
                None if k == 0 => (false, format!("({})", c.render())),
                None => (false, format!("({})*{}", c.render(), power(var, k))),
            }
        }))
    }
}

impl<C: Ring + Render> Render for SLaurent<C> {
    fn render(&self) -> String {
        self.render_var("s")
    }

    fn single_term(&self) -> Option<(bool, String)> {
        let mut terms = self.terms();
        match (terms.next(), terms.next()) {
            (None, _) => Some((false, "0".into())),
            (Some(_), None) => {
                let text = self.render();
                match text.strip_prefix('-') {
                    Some(rest) => Some((true, rest.to_string())),
                    None => Some((false, text)),
                }
            }
            _ => None,
        }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({})", self.render())
    }
}

impl fmt::Display for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFn({})", self.render())
    }
}

impl<C: Ring + Render> fmt::Display for SLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Ring + Render> fmt::Debug for SLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SLaurent({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, q_integer, rat, QAlgebra};

    #[test]
    fn laurent_rendering() {
        let p = QLaurent::one() + QLaurent::q() + QLaurent::q_pow(2).scale(&int(2));
        assert_eq!(p.render(), "1 + q + 2*q^2");
        let n = QLaurent::q_pow(-1).scale(&rat(-1, 2)) + QLaurent::q_pow(3).scale(&int(-1));
        assert_eq!(n.render(), "-1/2*q^-1 - q^3");
        assert_eq!(QLaurent::zero().render(), "0");
    }

    #[test]
    fn ratfn_rendering() {
        let f = QRatFn::new(QLaurent::q(), q_integer(2)).unwrap();
        assert_eq!(f.render(), "q/(1 + q)");
        assert_eq!(f.render_compact(), "q/(1+q)");
        let g = QRatFn::from(QLaurent::q_pow(-2));
        assert_eq!(g.render(), "1/q^2");
    }

    #[test]
    fn spoly_rendering() {
        let f = SLaurent::from_coeffs(0, vec![int(1), int(3), int(1)]);
        assert_eq!(f.render(), "1 + 3*s + s^2");
        let g = SLaurent::from_coeffs(0, vec![QLaurent::one(), q_integer(2)]);
        assert_eq!(g.render(), "1 + (1 + q)*s");
        let h = SLaurent::monomial(QLaurent::q_pow(2), -1);
        assert_eq!(h.render(), "q^2*s^-1");
        let v = SLaurent::from_coeffs(0, vec![int(0), rat(-1, 2)]);
        assert_eq!(v.render_var("x"), "-1/2*x");
        assert_eq!(SLaurent::<Rational>::from_rational(&int(-3)).render(), "-3");
    }
}
