use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{QLaurent, Ring};

/// Gaussian binomial coefficient `[n, k]` in `q`.
///
/// Zero for `k < 0` and for `0 <= n < k`. Negative upper arguments use
/// `[-r, k] = (-1)^k q^{-kr - k(k-1)/2} [r+k-1, k]`, which agrees with the
/// product formula `prod_{i<k} (1 - q^{n-i}) / (1 - q^{i+1})`.
pub fn gaussian_binomial(n: i64, k: i64) -> QLaurent {
    if k < 0 {
        return QLaurent::zero();
    }
    if n < 0 {
        let r = -n;
        let base = gaussian_binomial(r + k - 1, k);
        return base.shift(-k * r - k * (k - 1) / 2).signed(k);
    }
    if k > n {
        return QLaurent::zero();
    }
    let k = k.min(n - k);
    // Multiply by (1 - q^{n-i}), then divide exactly by (1 - q^{i+1}); every
    // partial quotient is [n, i+1], so each division is exact.
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..k {
        let m = (n - i) as usize;
        let mut next = vec![BigInt::zero(); p.len() + m];
        for (j, c) in p.iter().enumerate() {
            next[j] += c;
            next[j + m] -= c;
        }
        // divide by (1 - q^d): r_j = p_j + r_{j-d}
        let d = (i + 1) as usize;
        for j in d..next.len() {
            let prev = next[j - d].clone();
            next[j] += prev;
        }
        while next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        p = next;
    }
    QLaurent::from_int_coeffs(0, p, BigInt::one())
}

/// The q-integer `[n] = [n, 1]`, i.e. `1 + q + ... + q^{n-1}` for `n >= 0`.
pub fn q_integer(n: i64) -> QLaurent {
    gaussian_binomial(n, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, int, Rational};

    fn poly(cs: &[i64]) -> QLaurent {
        QLaurent::from_int_coeffs(
            0,
            cs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::one(),
        )
    }

    #[test]
    fn small_values() {
        assert_eq!(gaussian_binomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0), QLaurent::one());
        assert_eq!(gaussian_binomial(3, 2), poly(&[1, 1, 1]));
        assert_eq!(gaussian_binomial(3, 5), QLaurent::zero());
        assert_eq!(gaussian_binomial(3, -1), QLaurent::zero());
        assert_eq!(q_integer(0), QLaurent::zero());
    }

    #[test]
    fn specializes_to_binomial() {
        for n in 0..=20 {
            for k in 0..=n {
                let at_one: Rational = gaussian_binomial(n, k).at_q_one();
                assert_eq!(at_one, Rational::from_integer(binomial(n, k)));
            }
        }
    }

    #[test]
    fn negative_upper_argument_matches_product_formula() {
        // [-1, k] = (-1)^k q^{-k(k+1)/2}
        for k in 0..5 {
            let expected = QLaurent::q_pow(-k * (k + 1) / 2).signed(k);
            assert_eq!(gaussian_binomial(-1, k), expected);
        }
        // [-2, 1] = (1 - q^{-2}) / (1 - q) = -q^{-2}(1 + q)
        assert_eq!(gaussian_binomial(-2, 1), poly(&[1, 1]).shift(-2).signed(1));
        assert_eq!(gaussian_binomial(-3, 2).at_q_one(), int(6));
    }
}
