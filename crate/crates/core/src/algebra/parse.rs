//! Parser for the canonical text grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | VAR | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Division is only accepted by units of the target
//! ring (nonzero rationals, monomials `c*q^e` in the Laurent ring, anything
//! nonzero for rational functions).

use num_bigint::BigInt;

use super::{QAlgebra, QLaurent, QRatFn, Rational, SLaurent, TryDiv};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    name.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Var(name)));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((pos, Tok::Op(ch)));
                chars.next();
            }
            '\u{2212}' => {
                out.push((pos, Tok::Op('-')));
                chars.next();
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, T> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    var: &'a dyn Fn(&str) -> Option<T>,
}

impl<T: QAlgebra + TryDiv> Parser<'_, T> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<V>(&self, msg: impl Into<String>) -> Result<V> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.at) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.at += 1;
            let rhs = self.term()?;
            acc = if op == '+' {
                acc.add_ref(&rhs)
            } else {
                acc.sub_ref(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.at += 1;
            let pos = self.pos();
            let rhs = self.unary()?;
            acc = if op == '*' {
                acc.mul_ref(&rhs)
            } else {
                match acc.try_div(&rhs) {
                    Some(v) => v,
                    None => {
                        return Err(Error::Parse {
                            pos,
                            msg: "division by a non-unit".into(),
                        })
                    }
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<T> {
        match self.peek_op() {
            Some('-') => {
                self.at += 1;
                Ok(self.unary()?.neg_ref())
            }
            Some('+') => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<T> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.at += 1;
        let neg = if self.peek_op() == Some('-') {
            self.at += 1;
            true
        } else {
            false
        };
        let exp: i64 = match self.toks.get(self.at) {
            Some((_, Tok::Int(n))) => match i64::try_from(n) {
                Ok(e) if e <= 4096 => e,
                _ => return self.err("exponent too large"),
            },
            _ => return self.err("expected integer exponent"),
        };
        self.at += 1;
        let exp = if neg { -exp } else { exp };
        match base.try_pow(exp) {
            Some(v) => Ok(v),
            None => self.err("negative power of a non-unit"),
        }
    }

    fn atom(&mut self) -> Result<T> {
        let Some((_, tok)) = self.toks.get(self.at).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Int(n) => {
                self.at += 1;
                Ok(T::from_rational(&Rational::from_integer(n)))
            }
            Tok::Var(name) => match (self.var)(&name) {
                Some(v) => {
                    self.at += 1;
                    Ok(v)
                }
                None => self.err(format!("unknown variable `{name}`")),
            },
            Tok::Op('(') => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            Tok::Op(c) => self.err(format!("unexpected `{c}`")),
        }
    }
}

/// Parses `text` into `T`, resolving identifiers with `var`.
pub fn parse_expr<T: QAlgebra + TryDiv>(text: &str, var: impl Fn(&str) -> Option<T>) -> Result<T> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        var: &var,
    };
    let value = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(value)
}

pub trait Parse: Sized {
    fn parse(text: &str) -> Result<Self>;
}

impl Parse for Rational {
    fn parse(text: &str) -> Result<Self> {
        parse_expr(text, |_| None)
    }
}

impl Parse for QLaurent {
    fn parse(text: &str) -> Result<Self> {
        parse_expr(text, |v| (v == "q").then(QLaurent::q))
    }
}

impl Parse for QRatFn {
    fn parse(text: &str) -> Result<Self> {
        parse_expr(text, |v| (v == "q").then(|| QRatFn::from(QLaurent::q())))
    }
}

fn check_offset<C: QAlgebra>(p: SLaurent<C>) -> Result<SLaurent<C>> {
    if p.offset() < -1 {
        return Err(Error::Parse {
            pos: 0,
            msg: "powers below s^-1 are not supported".into(),
        });
    }
    Ok(p)
}

impl SLaurent<Rational> {
    /// Parses a polynomial in the variable `var` with rational coefficients.
    pub fn parse_var(text: &str, var: &str) -> Result<Self> {
        check_offset(parse_expr(text, |v| (v == var).then(SLaurent::s))?)
    }
}

impl Parse for SLaurent<Rational> {
    fn parse(text: &str) -> Result<Self> {
        Self::parse_var(text, "s")
    }
}

impl Parse for SLaurent<QLaurent> {
    fn parse(text: &str) -> Result<Self> {
        check_offset(parse_expr(text, |v| match v {
            "s" => Some(SLaurent::s()),
            "q" => Some(SLaurent::constant(QLaurent::q())),
            _ => None,
        })?)
    }
}
