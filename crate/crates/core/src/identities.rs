//! The lacunary binomial congruence and the divisibility of `∩nN`.

#![allow(non_snake_case)]

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::formulas::{binomial, cap_n_N_comm};
use crate::rings::RingSpec;

/// `Σ_j (-1)^{jp+m} C(n, jp+m)` over `0 <= jp+m <= n`.
pub fn lacunary_sum(n: u64, p: u64, m: u64) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m >= p {
        return Err(Error::InvalidArgument(format!("residue {m} must be below {p}")));
    }
    let mut sum = BigInt::zero();
    for i in (m..=n).step_by(p as usize) {
        let c = BigInt::from(binomial(n, i));
        if i % 2 == 0 {
            sum += c;
        } else {
            sum -= c;
        }
    }
    Ok(sum)
}

/// Checks `lacunary_sum(n, p, m) ≡ 0 (mod p)` for all primes
/// `p <= min(n, p_max)`, `n <= n_max`, `0 <= m < p`.
pub fn lacunary_identity_check(n_max: u64, p_max: u64) -> bool {
    (2..=p_max.min(n_max)).filter(|&p| is_prime(p)).all(|p| {
        (p..=n_max).all(|n| {
            (0..p).all(|m| {
                let s = lacunary_sum(n, p, m).expect("p is prime and m < p");
                (s % BigInt::from(p)).is_zero()
            })
        })
    })
}

/// Every prime `p <= n` divides `∩nN` of a commutative spec.
pub fn capN_divisibility_check(spec: &RingSpec, n: u64) -> Result<bool> {
    let v = cap_n_N_comm(spec, n)?.value;
    Ok((2..=n)
        .filter(|&p| is_prime(p))
        .all(|p| (&v % BigInt::from(p)).is_zero()))
}

#[cfg(test)]
mod tests {
    #![allow(non_snake_case)]
    use super::*;
    use crate::rings::Summand;

    #[test]
    fn lacunary_examples() {
        assert_eq!(lacunary_sum(2, 2, 0).unwrap(), BigInt::from(2));
        assert_eq!(lacunary_sum(4, 3, 1).unwrap(), BigInt::from(-3));
        assert_eq!(lacunary_sum(3, 2, 1).unwrap(), BigInt::from(-4));
        assert!(lacunary_sum(4, 4, 1).is_err());
        assert!(lacunary_sum(4, 3, 3).is_err());
        assert!(lacunary_identity_check(13, 13));
        assert!(lacunary_identity_check(2, 2));
        assert!(lacunary_identity_check(5, 3));
        assert!(lacunary_identity_check(40, 40));
    }

    #[test]
    fn divisibility() {
        let s = RingSpec::new(vec![Summand::local(9, 3), Summand::local(5, 1)]);
        assert!(capN_divisibility_check(&s, 3).unwrap());
        assert!(capN_divisibility_check(&s, 1).unwrap());
        for n in [4u64, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 32, 210] {
            let spec = RingSpec::zn(n).unwrap();
            let v5 = cap_n_N_comm(&spec, 5).unwrap().value;
            assert!((v5 % BigInt::from(30)).is_zero());
            for k in 1..=7 {
                assert!(capN_divisibility_check(&spec, k).unwrap());
            }
        }
        assert!(capN_divisibility_check(&RingSpec::new(vec![Summand::matrix(2, 2)]), 2).is_err());
    }
}
