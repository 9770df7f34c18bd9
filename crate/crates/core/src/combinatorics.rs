//! Exact binomial coefficients and monomial counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of monomials of degree `d` in `n` variables, `C(n - 1 + d, d)`.
pub fn monomial_count(n: usize, d: u64) -> BigUint {
    if n == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(n as u64 - 1 + d, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: u64, k: u64) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_default()
    }

    #[test]
    fn matches_pascal_triangle() {
        for n in 0..40 {
            for k in 0..=n + 1 {
                assert_eq!(binomial(n, k), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn past_sixty_four_bits() {
        // C(70, 35) = 112186277816662845432
        assert_eq!(
            binomial(70, 35).to_string(),
            "112186277816662845432"
        );
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(6, 2), BigUint::from(21u32));
        assert_eq!(monomial_count(1, 9), BigUint::one());
        assert_eq!(monomial_count(3, 0), BigUint::one());
    }
}
