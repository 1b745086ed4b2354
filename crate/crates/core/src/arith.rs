//! Small exact-integer helpers.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(k: u64) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `(Σ k_i)! / Π k_i!`
pub fn multinomial(parts: &[u64]) -> BigUint {
    let big: Vec<BigUint> = parts.iter().map(|&p| BigUint::from(p)).collect();
    num_integer::multinomial(&big)
}

pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn unsigned(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(multinomial(&[2, 1, 1]), BigUint::from(12u32));
    }
}
