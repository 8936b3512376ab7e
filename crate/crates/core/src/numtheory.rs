//! Small integer number theory: primality, trial-division factorisation and
//! a Miller-Rabin test for big integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    if n < 1 << 32 {
        let mut d = 41;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 2;
        }
        return true;
    }
    is_probable_prime(&BigUint::from(n))
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// a^e mod m for m < 2^32.
pub fn mod_pow(a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut base = a % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

pub fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&m| is_prime(m))
}

/// Miller-Rabin with the first twelve prime bases. Deterministic below
/// 3.3 * 10^24 and a strong probable-prime test above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % 2u32).is_zero() {
        d >>= 1;
        s += 1;
    }
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn biguint_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(3221));
        assert!(!is_prime(16105));
        assert_eq!(factorize(161050), vec![(2, 1), (5, 2), (3221, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(valuation(10, 5), 1);
        assert_eq!(valuation(50, 5), 2);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0u64..5000 {
            assert_eq!(is_probable_prime(&BigUint::from(n)), is_prime(n), "n = {n}");
        }
        // 2^61 - 1 is a Mersenne prime.
        assert!(is_probable_prime(&BigUint::from((1u64 << 61) - 1)));
        assert!(!is_probable_prime(
            &(BigUint::from((1u64 << 61) - 1) * 3u32)
        ));
    }
}
