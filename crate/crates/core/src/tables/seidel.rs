use crate::algebra::{QLaurent, Rational, Ring};
use crate::exec::Execution;
use crate::fib::FibFamily;
use crate::functional::{l_functional, q_l_functional};

/// Ragged array `g_{i,j}`, 1-indexed, row `i` holding `j = 1..=ceil(i/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<C> {
    rows: Vec<Vec<C>>,
}

/// Number of stored entries in row `i`.
pub fn row_len(i: usize) -> usize {
    i.div_ceil(2)
}

impl<C: Clone + Default> Triangle<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), row_len(i + 1), "row {} has wrong length", i + 1);
        }
        Triangle { rows }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> &[C] {
        &self.rows[i - 1]
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&C> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1)?.get(j - 1)
    }

    /// `g_{i,j}`, zero outside the stored range.
    pub fn get(&self, i: usize, j: usize) -> C {
        self.entry(i, j).cloned().unwrap_or_default()
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> Option<&mut C> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get_mut(i - 1)?.get_mut(j - 1)
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> Triangle<D> {
        Triangle {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Iterates `(i, j, &g_{i,j})` in row order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &C)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, c)| (i + 1, j + 1, c)))
    }
}

/// Boustrophedon fill with step weights `w(j)`: even rows right to left,
/// `g_{2n,j} = g_{2n,j+1} + w(j) g_{2n-1,j}`; odd rows left to right,
/// `g_{2n+1,j} = w(j) g_{2n,j} + g_{2n+1,j-1}`.
fn boustrophedon<C: Ring>(rows: usize, w: impl Fn(usize) -> C) -> Triangle<C> {
    let mut out: Vec<Vec<C>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Triangle { rows: out };
    }
    out.push(vec![C::one()]);
    for i in 2..=rows {
        let prev = &out[i - 2];
        let len = row_len(i);
        let at = |j: usize| prev.get(j - 1).cloned().unwrap_or_else(C::zero);
        let mut row = vec![C::zero(); len];
        if i % 2 == 0 {
            let mut acc = C::zero();
            for j in (1..=len).rev() {
                acc = acc.add_ref(&w(j).mul_ref(&at(j)));
                row[j - 1] = acc.clone();
            }
        } else {
            let mut acc = C::zero();
            for j in 1..=len {
                acc = acc.add_ref(&w(j).mul_ref(&at(j)));
                row[j - 1] = acc.clone();
            }
        }
        out.push(row);
    }
    Triangle { rows: out }
}

pub fn seidel_triangle(rows: usize) -> Triangle<num_bigint::BigInt> {
    let t = boustrophedon(rows, |_| <Rational as Ring>::one());
    Triangle {
        rows: t
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_integer()).collect())
            .collect(),
    }
}

pub fn q_seidel_triangle(rows: usize) -> Triangle<QLaurent> {
    boustrophedon(rows, |j| QLaurent::q_pow(j as i64 - 1))
}

fn functional_cells(rows: usize) -> Vec<(usize, usize)> {
    (1..=rows)
        .flat_map(|i| (1..=row_len(i)).map(move |j| (i, j)))
        .collect()
}

/// `g_{i,k}` from the `L` functional: `(-1)^n L(s^{n+1-k} F_m)` with
/// `m = 2k-1` on row `2n` and `m = 2k` on row `2n+1`.
pub fn seidel_triangle_from_functional(rows: usize, exec: Execution) -> Triangle<Rational> {
    let half = rows / 2;
    let l = l_functional(half.max(1));
    let fam = FibFamily::classical().with_max(rows as i64 + 1);
    let cells = functional_cells(rows);
    let vals = exec.map(&cells, |&(i, k)| {
        let n = i / 2;
        let m = if i % 2 == 0 { 2 * k - 1 } else { 2 * k };
        let p = fam.at(m as i64).shift((n + 1 - k) as i32);
        l.apply(&p)
            .expect("table covers the degree")
            .signed(n as i64)
    });
    regroup(rows, vals)
}

/// q-analogue: `(-1)^n q^{2C(k-1,2)} L_q(s^{n+1-k} F_{2k-1}(s,1/q))` on even
/// rows and `(-1)^n q^{(k-1)^2} L_q(s^{n+1-k} F_{2k}(s,1/q))` on odd rows.
pub fn q_seidel_triangle_from_functional(rows: usize, exec: Execution) -> Triangle<QLaurent> {
    let half = rows / 2;
    let l = q_l_functional(half.max(1));
    let fam = FibFamily::q_inverse().with_max(rows as i64 + 1);
    let cells = functional_cells(rows);
    let vals = exec.map(&cells, |&(i, k)| {
        let n = i / 2;
        let km = k as i64 - 1;
        let (m, e) = if i % 2 == 0 {
            (2 * k - 1, km * (km - 1))
        } else {
            (2 * k, km * km)
        };
        let p = fam.at(m as i64).shift((n + 1 - k) as i32);
        l.apply(&p)
            .expect("table covers the degree")
            .shift(e)
            .signed(n as i64)
    });
    regroup(rows, vals)
}

fn regroup<C: Ring>(rows: usize, vals: Vec<C>) -> Triangle<C> {
    let mut it = vals.into_iter();
    Triangle {
        rows: (1..=rows)
            .map(|i| it.by_ref().take(row_len(i)).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Parse};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn qs(v: &[&str]) -> Vec<QLaurent> {
        v.iter().map(|s| QLaurent::parse(s).unwrap()).collect()
    }

    #[test]
    fn classical_rows() {
        let t = seidel_triangle(8);
        assert_eq!(t.row(1), &ints(&[1])[..]);
        assert_eq!(t.row(2), &ints(&[1])[..]);
        assert_eq!(t.row(5), &ints(&[2, 3, 3])[..]);
        assert_eq!(t.row(6), &ints(&[8, 6, 3])[..]);
        assert_eq!(t.row(7), &ints(&[8, 14, 17, 17])[..]);
        assert_eq!(t.row(8), &ints(&[56, 48, 34, 17])[..]);
        assert_eq!(t.get(5, 4), BigInt::from(0));
        assert_eq!(t.get(0, 1), BigInt::from(0));
    }

    #[test]
    fn classical_partial_sums() {
        let t = seidel_triangle(15);
        for i in 1..=7usize {
            for j in 1..=i {
                let s: BigInt = (j..=i).map(|l| t.get(2 * i - 1, l)).sum();
                assert_eq!(t.get(2 * i, j), s);
                let s: BigInt = (1..=j).map(|l| t.get(2 * i, l)).sum();
                assert_eq!(t.get(2 * i + 1, j), s);
            }
        }
    }

    #[test]
    fn q_rows() {
        let t = q_seidel_triangle(6);
        assert_eq!(t.row(3), &qs(&["1", "1"])[..]);
        assert_eq!(t.row(4), &qs(&["1 + q", "q"])[..]);
        assert_eq!(t.row(5), &qs(&["1 + q", "1 + q + q^2", "1 + q + q^2"])[..]);
        // The recursion gives these; at q = 1 they reduce to 8, 6, 3.
        assert_eq!(
            t.row(6),
            &qs(&[
                "(1 + q)^2*(1 + q^2)",
                "q*(1 + q)*(1 + q + q^2)",
                "q^2*(1 + q + q^2)"
            ])[..]
        );
    }

    #[test]
    fn q_at_one_is_classical() {
        let q = q_seidel_triangle(12);
        let c = seidel_triangle(12);
        for (i, j, v) in q.entries() {
            assert!(v.has_nonnegative_integer_coeffs());
            assert_eq!(v.at_q_one(), Rational::from_integer(c.get(i, j)));
        }
    }

    #[test]
    fn functional_forms_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let c = seidel_triangle(13).map(|x| Rational::from_integer(x.clone()));
            assert_eq!(seidel_triangle_from_functional(13, exec), c);
            assert_eq!(
                q_seidel_triangle_from_functional(9, exec),
                q_seidel_triangle(9)
            );
        }
    }

    #[test]
    fn empty_and_mutation() {
        assert_eq!(seidel_triangle(0).num_rows(), 0);
        let mut t = seidel_triangle(3).map(|x| int(x.try_into().unwrap()));
        *t.entry_mut(3, 2).unwrap() = int(5);
        assert_eq!(t.get(3, 2), int(5));
        assert!(t.entry_mut(3, 3).is_none());
    }
}
