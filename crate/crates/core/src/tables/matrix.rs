use crate::algebra::{binomial, gaussian_binomial, int, QLaurent, Rational, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;

/// The lower-triangular expansion matrix
/// `a(n,k) = (-1)^{n-k-1} C(2n,2k) G_{2n-2k} / (2k+1)` for `n >= 1`,
/// `0 <= k < n_max`, zero when `k >= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    rows: Vec<Vec<Rational>>,
}

impl AMatrix {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` (1-based), entries `k = 0..n_max`.
    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n.wrapping_sub(1))
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(|| int(0))
    }

    pub fn entry_mut(&mut self, n: usize, k: usize) -> Option<&mut Rational> {
        self.rows.get_mut(n.checked_sub(1)?)?.get_mut(k)
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_integer())
    }

    /// Integer entries, or `NotIntegral` naming the first offender.
    pub fn to_integers(&self) -> Result<Vec<Vec<BigInt>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, r)| {
                r.iter()
                    .enumerate()
                    .map(|(k, x)| {
                        if x.is_integer() {
                            Ok(x.to_integer())
                        } else {
                            Err(Error::NotIntegral(format!("a({},{k}) = {x}", n + 1)))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn a_matrix(n_max: usize) -> AMatrix {
    let g = super::genocchi(n_max);
    let rows = (1..=n_max as i64)
        .map(|n| {
            (0..n_max as i64)
                .map(|k| {
                    if k >= n {
                        return int(0);
                    }
                    let c = binomial(2 * n, 2 * k) * &g[(n - k - 1) as usize];
                    let (quo, rem) = c.div_rem(&BigInt::from(2 * k + 1));
                    let v = if rem == BigInt::from(0) {
                        Rational::from_integer(quo)
                    } else {
                        Rational::new(c, BigInt::from(2 * k + 1))
                    };
                    v.signed(n - k - 1)
                })
                .collect()
        })
        .collect();
    let m = AMatrix { rows };
    debug_assert!(m.is_integral());
    m
}

/// A Seidel matrix `a_{n,k}`, `n, k >= 0`, filled from its first column by
/// `a_{n,k} = w(n) (a_{n,k-1} + a_{n+1,k-1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeidelMatrix<C> {
    /// `cols[k][n]` is `a_{n,k}`.
    cols: Vec<Vec<C>>,
}

pub type QSeidelMatrix = SeidelMatrix<QLaurent>;

impl<C: Ring> SeidelMatrix<C> {
    fn fill(seed: Vec<C>, depth: usize, w: impl Fn(usize) -> C) -> Result<Self> {
        if seed.len() <= depth {
            return Err(Error::SeedTooShort {
                len: seed.len(),
                depth,
            });
        }
        let mut cols = vec![seed];
        for _ in 0..depth {
            let prev = cols.last().expect("seed column");
            let next = (0..prev.len() - 1)
                .map(|n| w(n).mul_ref(&prev[n].add_ref(&prev[n + 1])))
                .collect();
            cols.push(next);
        }
        Ok(SeidelMatrix { cols })
    }

    pub fn seed(&self) -> &[C] {
        &self.cols[0]
    }

    pub fn depth(&self) -> usize {
        self.cols.len() - 1
    }

    /// `a_{n,k}` if `k <= depth` and `n + k < seed length`.
    pub fn get(&self, n: usize, k: usize) -> Option<&C> {
        self.cols.get(k)?.get(n)
    }

    /// Column `k`: `a_{0,k}, a_{1,k}, ...`.
    pub fn column(&self, k: usize) -> &[C] {
        &self.cols[k]
    }
}

/// Classical matrix `a_{n,k} = a_{n,k-1} + a_{n+1,k-1}`.
pub fn seidel_matrix(seed: Vec<Rational>, depth: usize) -> Result<SeidelMatrix<Rational>> {
    SeidelMatrix::fill(seed, depth, |_| int(1))
}

/// q-matrix `a_{n,k} = q^{n-1} (a_{n,k-1} + a_{n+1,k-1})`.
pub fn q_seidel_matrix(seed: Vec<QLaurent>, depth: usize) -> Result<QSeidelMatrix> {
    SeidelMatrix::fill(seed, depth, |n| QLaurent::q_pow(n as i64 - 1))
}

impl QSeidelMatrix {
    /// `q^{k(n-1)} sum_j q^{C(j,2)} [k,j] a_{n+j,0}`.
    pub fn closed_form(&self, n: usize, k: usize) -> Option<QLaurent> {
        let seed = self.seed();
        if n + k >= seed.len() {
            return None;
        }
        let (n, k) = (n as i64, k as i64);
        let sum = (0..=k).fold(QLaurent::zero(), |acc, j| {
            let t = gaussian_binomial(k, j).shift(j * (j - 1) / 2);
            acc.add_ref(&t.mul_ref(&seed[(n + j) as usize]))
        });
        Some(sum.shift(k * (n - 1)))
    }
}

impl SeidelMatrix<Rational> {
    /// `sum_i C(k,i) a_{n+i,0}`.
    pub fn closed_form(&self, n: usize, k: usize) -> Option<Rational> {
        let seed = self.seed();
        if n + k >= seed.len() {
            return None;
        }
        Some((0..=k).fold(int(0), |acc, i| {
            acc + Rational::from_integer(binomial(k as i64, i as i64)) * &seed[n + i]
        }))
    }
}
