//! Exact evaluation of the counting formula
//! `sum_{j=1}^{n} C(n,j) * j^(n-j)` and a cross-check by enumeration.
//!
//! The `j`-th summand counts the idempotent functions with `j` fixed
//! points: choose the fixed set, then map the remaining `n - j` points into
//! it. Everything is arbitrary-precision; the sum leaves 64-bit range near
//! `n = 25`.

pub use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Rank};
use crate::exceptional::enumerate_complete;

/// Exact binomial coefficient, multiplicatively: `C(n,k) = prod (n-i)/(i+1)`
/// with every intermediate division exact. `k > n` gives 0.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// `sum_{j=1}^{n} C(n,j) * j^(n-j)`, with `j^0 = 1` in the final term.
pub fn count_formula(rank: Rank) -> BigUint {
    let n = rank.get() as u64;
    (1..=n)
        .map(|j| binomial(n, j) * BigUint::from(j).pow((n - j) as u32))
        .sum()
}

/// `|enumerate_complete(n)|`; feasible only for small ranks.
pub fn count_by_enumeration(rank: Rank) -> BigUint {
    BigUint::from(enumerate_complete(Algebra::new(rank)).len())
}

/// How a [`CountResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Formula,
    Enumeration,
}

/// A count together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub rank: Rank,
    pub value: BigUint,
    pub method: CountMethod,
}

pub fn count(rank: Rank, method: CountMethod) -> CountResult {
    let value = match method {
        CountMethod::Formula => count_formula(rank),
        CountMethod::Enumeration => count_by_enumeration(rank),
    };
    CountResult {
        rank,
        value,
        method,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::enumerate_idempotent;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(9, 0), BigUint::one());
        assert_eq!(binomial(9, 9), BigUint::one());
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(3, 7), BigUint::zero());
    }

    #[test]
    fn formula_small_values() {
        let expected: [u64; 8] = [1, 3, 10, 41, 196, 1057, 6322, 41393];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(count_formula(rank(i + 1)), BigUint::from(want));
        }
    }

    #[test]
    fn formula_term_by_term_for_five() {
        // 5*1 + 10*8 + 10*9 + 5*4 + 1
        let terms: Vec<BigUint> = (1..=5u64)
            .map(|j| binomial(5, j) * BigUint::from(j).pow(5 - j as u32))
            .collect();
        let as_u64: Vec<u64> = terms.iter().map(|t| t.try_into().unwrap()).collect();
        assert_eq!(as_u64, [5, 80, 90, 20, 1]);
        assert_eq!(count_formula(rank(5)), BigUint::from(196u32));
        assert_eq!(enumerate_idempotent(rank(5)).len(), 196);
    }

    #[test]
    fn formula_leaves_64_bit_range() {
        let big = count_formula(rank(25));
        assert_eq!(big.to_string(), "12776077318891628112376");
        assert!(big > BigUint::from(u64::MAX));
    }

    #[test]
    fn enumeration_agrees_with_the_formula() {
        for n in 1..=6 {
            assert_eq!(
                count(rank(n), CountMethod::Enumeration).value,
                count(rank(n), CountMethod::Formula).value,
                "rank {n}"
            );
        }
    }
}
