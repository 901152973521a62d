//! Elementary number theory on machine integers.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `gcd(f, big)` for a machine integer `f` and an arbitrary-size integer.
pub fn gcd_big(f: u64, big: &BigUint) -> u64 {
    if f == 0 {
        return big.to_u64().unwrap_or(0);
    }
    let r = (big % f).to_u64().expect("remainder below u64 modulus");
    gcd(f, r)
}

/// Exponent of `p` in `big`.
pub fn p_valuation_big(p: u64, big: &BigUint) -> u32 {
    assert!(p >= 2);
    let mut k = 0;
    let mut x = big.clone();
    if x == BigUint::from(0u32) {
        return 0;
    }
    let pb = BigUint::from(p);
    loop {
        let (q, r) = x.div_rem(&pb);
        if r != BigUint::from(0u32) {
            return k;
        }
        x = q;
        k += 1;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
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

pub fn prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = alloc::vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient; `euler_phi(0) = 0`.
pub fn euler_phi(m: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    factorize(m)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Exponent of `(Z/m)^*`.
pub fn carmichael(m: u64) -> u64 {
    factorize(m).into_iter().fold(1, |acc, (p, e)| {
        let part = if p == 2 && e >= 3 {
            1 << (e - 2)
        } else {
            (p - 1) * p.pow(e - 1)
        };
        lcm(acc, part)
    })
}

/// Largest `k` with `p^k | n`. Returns 0 for `n = 0` by convention.
pub fn p_valuation(p: u64, mut n: u64) -> u32 {
    assert!(p >= 2, "valuation base must be at least 2");
    if n == 0 {
        return 0;
    }
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

/// Largest divisor of `n` that is prime to `m`.
pub fn coprime_part(mut n: u64, m: u64) -> u64 {
    loop {
        let g = gcd(n, m);
        if g == 1 {
            return n;
        }
        n /= g;
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn mod_inverse(a: u64, m: u64) -> Result<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotAUnit { a, m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Least `k >= 1` with `a^k ≡ 1 (mod m)`.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    if m == 0 || gcd(a % m, m) != 1 {
        return Err(Error::NotAUnit { a, m });
    }
    if m == 1 {
        return Ok(1);
    }
    // The order divides the group exponent; strip prime factors while possible.
    let mut order = carmichael(m);
    for (p, _) in factorize(order) {
        while order.is_multiple_of(p) && pow_mod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Number of distinct prime factors.
pub fn omega(n: u64) -> u32 {
    factorize(n).len() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(a: u64, m: u64) -> u64 {
        let mut x = a % m;
        let mut k = 1;
        while x != 1 % m {
            x = x * a % m;
            k += 1;
        }
        k
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(47), 46);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(247), 12 * 18);
        assert_eq!(euler_phi(96), 32);
    }

    #[test]
    fn order_and_valuation() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(p_valuation(3, 81), 4);
        assert_eq!(p_valuation(2, 81), 0);
        assert_eq!(
            multiplicative_order(6, 9),
            Err(Error::NotAUnit { a: 6, m: 9 })
        );
    }

    #[test]
    fn order_matches_brute_force() {
        for m in 2..300u64 {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    assert_eq!(multiplicative_order(a, m).unwrap(), brute_order(a, m), "{a} mod {m}");
                }
            }
        }
    }

    #[test]
    fn divisors_and_factors() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
        assert_eq!(factorize(1190), [(2, 1), (5, 1), (7, 1), (17, 1)]);
        assert_eq!(coprime_part(380, 2), 95);
        assert!(is_prime(2381) && !is_prime(2379));
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert!(mod_inverse(4, 8).is_err());
        assert_eq!(gcd_big(6, &BigUint::from(216u32)), 6);
        assert_eq!(p_valuation_big(3, &BigUint::from(216u32)), 3);
    }
}
