//! Number sequences, Seidel triangles and matrices.
//!
//! The integer Seidel triangle is the primary source of Genocchi and median
//! Genocchi numbers; Bernoulli numbers come from their defining recursion.

mod export;
mod matrix;
mod seidel;

pub use export::{
    render_latex, render_text_rows, triangle_csv, triangle_json, values_csv, values_json,
    CoefficientRing,
};
pub use matrix::{a_matrix, q_seidel_matrix, seidel_matrix, AMatrix, QSeidelMatrix, SeidelMatrix};
pub use seidel::{
    q_seidel_triangle, q_seidel_triangle_from_functional, row_len, seidel_triangle,
    seidel_triangle_from_functional, Triangle,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{binomial, int, QLaurent, Rational};

/// `G_2, G_4, ..., G_{2n}` from `G_{2k} = g_{2k-1,k}`.
pub fn genocchi(n: usize) -> Vec<BigInt> {
    let tri = seidel_triangle(2 * n.max(1) - 1);
    (1..=n).map(|k| tri.get(2 * k - 1, k)).collect()
}

/// `B_0, ..., B_n` from `sum_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`, which
/// is the defining relation `B_m = sum_k C(m, k) B_k` rearranged.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(int(1));
    for m in 1..=n {
        let acc = (0..m).fold(int(0), |acc, k| {
            acc + Rational::from_integer(binomial(m as i64 + 1, k as i64)) * &b[k]
        });
        b.push(-acc / Rational::from_integer((m as i64 + 1).into()));
    }
    b
}

/// Median Genocchi numbers `H_1, H_3, ..., H_{2n+1}`, `H_{2k+1} = g_{2k+1,1}`.
pub fn median_genocchi(n: usize) -> Vec<BigInt> {
    let tri = seidel_triangle(2 * n + 1);
    (0..=n).map(|k| tri.get(2 * k + 1, 1)).collect()
}

/// Coefficients `g_0..g_n` of `2z/(1+e^z) = sum g_n z^n / n!`, built from the
/// Genocchi numbers: `g_1 = 1`, `g_{2k} = (-1)^k G_{2k}`, other odd terms 0.
pub fn egf_coefficients(genocchi: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|i| match i {
            0 => BigInt::zero(),
            1 => BigInt::from(1),
            _ if i % 2 == 1 => BigInt::zero(),
            _ => {
                let g = genocchi[i / 2 - 1].clone();
                if (i / 2) % 2 == 0 {
                    g
                } else {
                    -g
                }
            }
        })
        .collect()
}

/// `G_2(q), ..., G_{2n}(q)` with `G_{2k}(q) = g_{2k-1,k}(q)`.
pub fn q_genocchi(n: usize) -> Vec<QLaurent> {
    let tri = q_seidel_triangle(2 * n.max(1) - 1);
    (1..=n).map(|k| tri.get(2 * k - 1, k)).collect()
}

/// `H_1(q), H_3(q), ..., H_{2n-1}(q)` with `H_{2k-1}(q) = q^{k-2} g_{2k-1,1}(q)`.
pub fn q_median_genocchi(n: usize) -> Vec<QLaurent> {
    let tri = q_seidel_triangle(2 * n.max(1) - 1);
    (1..=n)
        .map(|k| tri.get(2 * k - 1, 1).shift(k as i64 - 2))
        .collect()
}

/// The classical number sequences, computed together.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberTable {
    /// `genocchi[k]` is `G_{2k+2}`.
    pub genocchi: Vec<BigInt>,
    /// `egf[n]` is `g_n`.
    pub egf: Vec<BigInt>,
    /// `bernoulli[n]` is `B_n`.
    pub bernoulli: Vec<Rational>,
    /// `median[k]` is `H_{2k+1}`.
    pub median: Vec<BigInt>,
}

impl NumberTable {
    /// Genocchi and median numbers through `G_{2n}` and `H_{2n+1}`,
    /// Bernoulli and EGF coefficients through index `2n`.
    pub fn new(n: usize) -> Self {
        let tri = seidel_triangle(2 * n + 1);
        let genocchi: Vec<BigInt> = (1..=n).map(|k| tri.get(2 * k - 1, k)).collect();
        let median = (0..=n).map(|k| tri.get(2 * k + 1, 1)).collect();
        let egf = egf_coefficients(&genocchi, 2 * n);
        NumberTable {
            genocchi,
            egf,
            bernoulli: bernoulli(2 * n),
            median,
        }
    }
}
