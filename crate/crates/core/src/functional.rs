//! Linear functionals on polynomials in `s`.
//!
//! A functional is stored as its table of monomial values `m_k = Φ(s^k)` for
//! `k = 0..=N`; applying it is a dot product. Functionals given by their
//! values on a graded basis `b_0, b_1, ...` (with `deg b_k = k`) are compiled
//! to monomial values once, by back-substitution through the triangular
//! change of basis.

use serde::Serialize;

use crate::algebra::{Embed, QLaurent, QRatFn, Rational, Ring, SLaurent, TryDiv};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::fib::FibFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FunctionalKind {
    /// `L(F_{2k+1}(s)) = [k = 0]`
    L,
    /// `M(F_{2k+2}(s)) = [k = 0]`
    M,
    /// `V(x^n) = B_n` for `n != 1`, `V(x) = 1/2`
    V,
    /// `L(F_{2k+1}(s, 1/q)) = [k = 0]`
    QL,
    /// `M(F_{2k+2}(s, q)) = [k = 0]`
    QM,
    /// Any other basis or direct definition.
    Custom,
}

/// Basis polynomials with `deg b_k = k` and the values assigned to them.
#[derive(Clone)]
pub struct GradedBasis<C, V> {
    basis: Vec<SLaurent<C>>,
    values: Vec<V>,
}

impl<C: Ring, V: Ring> GradedBasis<C, V> {
    pub fn new(basis: Vec<SLaurent<C>>, values: Vec<V>) -> Result<Self> {
        assert_eq!(basis.len(), values.len(), "one value per basis element");
        for (k, b) in basis.iter().enumerate() {
            if b.offset() < 0 {
                return Err(Error::NegativeOffset);
            }
            let found = b.degree().map_or(-1, i64::from);
            if found != k as i64 {
                return Err(Error::BasisDegree { index: k, found });
            }
        }
        Ok(GradedBasis { basis, values })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SLaurent<C>] {
        &self.basis
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional<V> {
    kind: FunctionalKind,
    values: Vec<V>,
}

/// Compiles a basis definition into monomial values.
pub fn functional_from_graded_basis<C, V>(
    kind: FunctionalKind,
    basis: &GradedBasis<C, V>,
) -> Result<LinearFunctional<V>>
where
    C: Ring,
    V: TryDiv + Embed<C>,
{
    let mut values: Vec<V> = Vec::with_capacity(basis.len());
    for (k, (b, v)) in basis.basis.iter().zip(&basis.values).enumerate() {
        let mut acc = v.clone();
        for (j, c) in b.terms() {
            let j = j as usize;
            if j < k {
                acc = acc.sub_ref(&V::embed(c).mul_ref(&values[j]));
            }
        }
        let lead = V::embed(b.leading_coeff().expect("graded basis element is nonzero"));
        let m = acc
            .try_div(&lead)
            .ok_or(Error::NonUnitLeadingCoefficient { index: k })?;
        values.push(m);
    }
    Ok(LinearFunctional { kind, values })
}

impl<V: Ring> LinearFunctional<V> {
    pub fn from_monomial_values(kind: FunctionalKind, values: Vec<V>) -> Self {
        LinearFunctional { kind, values }
    }

    pub fn kind(&self) -> FunctionalKind {
        self.kind
    }

    /// Largest degree the table covers.
    pub fn table_size(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn monomial_values(&self) -> &[V] {
        &self.values
    }

    pub fn monomial_value(&self, k: usize) -> Option<&V> {
        self.values.get(k)
    }

    pub fn apply<C: Ring>(&self, p: &SLaurent<C>) -> Result<V>
    where
        V: Embed<C>,
    {
        if p.offset() < 0 {
            return Err(Error::NegativeOffset);
        }
        let Some(degree) = p.degree() else {
            return Ok(V::zero());
        };
        if degree as usize >= self.values.len() {
            return Err(Error::DegreeExceedsTable {
                degree: degree.into(),
                table_size: self.table_size(),
            });
        }
        Ok(p.terms().fold(V::zero(), |acc, (k, c)| {
            acc.add_ref(&V::embed(c).mul_ref(&self.values[k as usize]))
        }))
    }

    /// Applies the functional to each polynomial.
    pub fn apply_many<C: Ring>(&self, polys: &[SLaurent<C>], exec: Execution) -> Result<Vec<V>>
    where
        V: Embed<C>,
    {
        exec.map(polys, |p| self.apply(p)).into_iter().collect()
    }
}

fn indicator<V: Ring>(n: usize) -> Vec<V> {
    (0..n)
        .map(|k| if k == 0 { V::one() } else { V::zero() })
        .collect()
}

/// `L` with monomial values up to `s^n`.
pub fn l_functional(n: usize) -> LinearFunctional<Rational> {
    let fam = FibFamily::classical().with_max(2 * n as i64 + 1);
    let basis = (0..=n).map(|k| fam.at(2 * k as i64 + 1).clone()).collect();
    let basis = GradedBasis::new(basis, indicator(n + 1)).expect("odd Fibonacci basis is graded");
    functional_from_graded_basis(FunctionalKind::L, &basis).expect("leading coefficients are 1")
}

/// `M` with monomial values up to `s^n`.
pub fn m_functional(n: usize) -> LinearFunctional<Rational> {
    let fam = FibFamily::classical().with_max(2 * n as i64 + 2);
    let basis = (0..=n).map(|k| fam.at(2 * k as i64 + 2).clone()).collect();
    let basis = GradedBasis::new(basis, indicator(n + 1)).expect("even Fibonacci basis is graded");
    functional_from_graded_basis(FunctionalKind::M, &basis).expect("leading coefficients are k+1")
}

/// `V` on polynomials in `x`, from `B_0..B_N`.
pub fn make_v(bernoulli: &[Rational]) -> LinearFunctional<Rational> {
    let values = bernoulli
        .iter()
        .enumerate()
        .map(|(n, b)| {
            if n == 1 {
                crate::algebra::rat(1, 2)
            } else {
                b.clone()
            }
        })
        .collect();
    LinearFunctional::from_monomial_values(FunctionalKind::V, values)
}

/// q-analogue of `L`, over the Laurent ring: the leading coefficient of
/// `F_{2k+1}(s, 1/q)` is the unit `q^{-k(k-1)}`.
pub fn q_l_functional(n: usize) -> LinearFunctional<QLaurent> {
    let fam = FibFamily::q_inverse().with_max(2 * n as i64 + 1);
    let basis = (0..=n).map(|k| fam.at(2 * k as i64 + 1).clone()).collect();
    let basis = GradedBasis::new(basis, indicator(n + 1)).expect("odd Fibonacci basis is graded");
    functional_from_graded_basis(FunctionalKind::QL, &basis)
        .expect("leading coefficients are powers of q")
}

/// q-analogue of `M`, valued in rational functions of `q`.
pub fn q_m_functional(n: usize) -> LinearFunctional<QRatFn> {
    let fam = FibFamily::q().with_max(2 * n as i64 + 2);
    let basis = (0..=n).map(|k| fam.at(2 * k as i64 + 2).clone()).collect();
    let basis = GradedBasis::new(basis, indicator(n + 1)).expect("even Fibonacci basis is graded");
    functional_from_graded_basis(FunctionalKind::QM, &basis)
        .expect("leading coefficients are nonzero")
}
