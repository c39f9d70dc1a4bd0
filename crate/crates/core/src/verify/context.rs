use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{int, QLaurent, QRatFn, Rational, Ring, SLaurent};
use crate::fib::FibFamily;
use crate::functional::{
    l_functional, m_functional, make_v, q_l_functional, q_m_functional, LinearFunctional,
};
use crate::tables::{a_matrix, q_seidel_triangle, seidel_triangle, AMatrix, NumberTable, Triangle};

/// A unit change to one stored table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "table", rename_all = "snake_case")]
pub enum Perturbation {
    /// `g_{i,j}` of the integer triangle.
    Triangle { i: usize, j: usize },
    /// `g_{i,j}(q)` of the q-triangle.
    QTriangle { i: usize, j: usize },
    /// `G_{2n}`.
    Genocchi { n: usize },
    /// `B_n`.
    Bernoulli { n: usize },
    /// `g_n`, the EGF coefficient.
    Egf { n: usize },
    /// `a(n,k)`.
    AMatrix { n: usize, k: usize },
    /// Adds 1 to the classical `F_n(s)`.
    Fib { n: i64 },
    /// Adds 1 to `F_n(s, q)`.
    QFib { n: i64 },
    /// Adds 1 to `F_n(s, 1/q)`.
    QFibInv { n: i64 },
}

/// Shared, lazily built tables sized for classical indices up to
/// `classical` and q-indices up to `q`.
pub struct Context {
    classical: usize,
    q: usize,
    perturbation: Option<Perturbation>,
    numbers: OnceLock<NumberTable>,
    triangle: OnceLock<Triangle<BigInt>>,
    q_triangle: OnceLock<Triangle<QLaurent>>,
    a_matrix: OnceLock<AMatrix>,
    fib: OnceLock<FibFamily<Rational>>,
    q_fib: OnceLock<FibFamily<QLaurent>>,
    q_fib_inv: OnceLock<FibFamily<QLaurent>>,
    l: OnceLock<LinearFunctional<Rational>>,
    m: OnceLock<LinearFunctional<Rational>>,
    v: OnceLock<LinearFunctional<Rational>>,
    q_l: OnceLock<LinearFunctional<QLaurent>>,
    q_m: OnceLock<LinearFunctional<QRatFn>>,
}

/// Degree of the `V` functional table.
pub const V_DEGREE: usize = 20;

/// Largest Fibonacci index any q-check reads beyond `2q`.
const Q_FIB_FLOOR: usize = 24;

impl Context {
    pub fn new(classical: usize, q: usize) -> Self {
        Context {
            classical: classical.max(q).max(1),
            q: q.max(1),
            perturbation: None,
            numbers: OnceLock::new(),
            triangle: OnceLock::new(),
            q_triangle: OnceLock::new(),
            a_matrix: OnceLock::new(),
            fib: OnceLock::new(),
            q_fib: OnceLock::new(),
            q_fib_inv: OnceLock::new(),
            l: OnceLock::new(),
            m: OnceLock::new(),
            v: OnceLock::new(),
            q_l: OnceLock::new(),
            q_m: OnceLock::new(),
        }
    }

    pub fn with_perturbation(mut self, p: Perturbation) -> Self {
        self.perturbation = Some(p);
        self
    }

    pub fn perturbation(&self) -> Option<Perturbation> {
        self.perturbation
    }

    pub fn classical_bound(&self) -> usize {
        self.classical
    }

    pub fn q_bound(&self) -> usize {
        self.q
    }

    /// Genocchi, Bernoulli and EGF data through index `2 * classical + 4`.
    pub fn numbers(&self) -> &NumberTable {
        self.numbers.get_or_init(|| {
            let mut t = NumberTable::new((self.classical + 2).max(V_DEGREE / 2 + 1));
            match self.perturbation {
                Some(Perturbation::Genocchi { n }) if (1..=t.genocchi.len()).contains(&n) => {
                    t.genocchi[n - 1] += 1;
                }
                Some(Perturbation::Bernoulli { n }) if n < t.bernoulli.len() => {
                    t.bernoulli[n] += int(1);
                }
                Some(Perturbation::Egf { n }) if n < t.egf.len() => t.egf[n] += 1,
                _ => {}
            }
            t
        })
    }

    /// `G_{2n}`, `n >= 1`.
    pub fn genocchi(&self, n: usize) -> Rational {
        Rational::from_integer(self.numbers().genocchi[n - 1].clone())
    }

    pub fn bernoulli(&self, n: usize) -> &Rational {
        &self.numbers().bernoulli[n]
    }

    pub fn egf(&self, n: usize) -> Rational {
        Rational::from_integer(self.numbers().egf[n].clone())
    }

    /// The integer triangle with `2 * classical + 3` rows.
    pub fn triangle(&self) -> &Triangle<BigInt> {
        self.triangle.get_or_init(|| {
            let mut t = seidel_triangle(2 * self.classical + 3);
            if let Some(Perturbation::Triangle { i, j }) = self.perturbation {
                if let Some(e) = t.entry_mut(i, j) {
                    *e += 1;
                }
            }
            t
        })
    }

    /// `g_{i,j}` as a rational, zero outside the triangle.
    pub fn g(&self, i: usize, j: usize) -> Rational {
        Rational::from_integer(self.triangle().get(i, j))
    }

    /// The q-triangle with `2 * q + 3` rows.
    pub fn q_triangle(&self) -> &Triangle<QLaurent> {
        self.q_triangle.get_or_init(|| {
            let mut t = q_seidel_triangle(2 * self.q + 3);
            if let Some(Perturbation::QTriangle { i, j }) = self.perturbation {
                if let Some(e) = t.entry_mut(i, j) {
                    *e = e.add_ref(&QLaurent::one());
                }
            }
            t
        })
    }

    pub fn gq(&self, i: usize, j: usize) -> QLaurent {
        self.q_triangle().get(i, j)
    }

    /// `G_{2n}(q) = g_{2n-1,n}(q)`.
    pub fn q_genocchi(&self, n: usize) -> QLaurent {
        self.gq(2 * n - 1, n)
    }

    /// `H_{2n-1}(q) = q^{n-2} g_{2n-1,1}(q)`.
    pub fn q_median(&self, n: usize) -> QLaurent {
        self.gq(2 * n - 1, 1).shift(n as i64 - 2)
    }

    pub fn a_matrix(&self) -> &AMatrix {
        self.a_matrix.get_or_init(|| {
            let mut a = a_matrix(self.classical);
            if let Some(Perturbation::AMatrix { n, k }) = self.perturbation {
                if let Some(e) = a.entry_mut(n, k) {
                    *e += int(1);
                }
            }
            a
        })
    }

    /// Classical `F_n` for `-1 <= n <= 2 * classical + 4`.
    pub fn fib(&self, n: i64) -> &SLaurent<Rational> {
        self.fib
            .get_or_init(|| {
                let mut f = FibFamily::classical().with_max(2 * self.classical as i64 + 4);
                if let Some(Perturbation::Fib { n }) = self.perturbation {
                    if let Some(p) = f.get_mut(n) {
                        *p = p.add_ref(&SLaurent::one());
                    }
                }
                f
            })
            .at(n)
    }

    fn q_fib_max(&self) -> i64 {
        (2 * self.q + 4).max(Q_FIB_FLOOR) as i64
    }

    /// `F_n(s, q)`.
    pub fn q_fib(&self, n: i64) -> &SLaurent<QLaurent> {
        self.q_fib
            .get_or_init(|| {
                let mut f = FibFamily::q().with_max(self.q_fib_max());
                if let Some(Perturbation::QFib { n }) = self.perturbation {
                    if let Some(p) = f.get_mut(n) {
                        *p = p.add_ref(&SLaurent::one());
                    }
                }
                f
            })
            .at(n)
    }

    /// `F_n(s, 1/q)`.
    pub fn q_fib_inv(&self, n: i64) -> &SLaurent<QLaurent> {
        self.q_fib_inv
            .get_or_init(|| {
                let mut f = FibFamily::q_inverse().with_max(self.q_fib_max());
                if let Some(Perturbation::QFibInv { n }) = self.perturbation {
                    if let Some(p) = f.get_mut(n) {
                        *p = p.add_ref(&SLaurent::one());
                    }
                }
                f
            })
            .at(n)
    }

    pub fn l(&self) -> &LinearFunctional<Rational> {
        self.l.get_or_init(|| l_functional(self.classical + 2))
    }

    pub fn m(&self) -> &LinearFunctional<Rational> {
        self.m.get_or_init(|| m_functional(self.classical + 2))
    }

    /// `V`, read off the (possibly perturbed) Bernoulli numbers.
    pub fn v(&self) -> &LinearFunctional<Rational> {
        self.v
            .get_or_init(|| make_v(&self.numbers().bernoulli[..=V_DEGREE]))
    }

    pub fn q_l(&self) -> &LinearFunctional<QLaurent> {
        self.q_l
            .get_or_init(|| q_l_functional((self.q_fib_max() / 2) as usize + 1))
    }

    pub fn q_m(&self) -> &LinearFunctional<QRatFn> {
        self.q_m.get_or_init(|| q_m_functional(self.q + 1))
    }
}
