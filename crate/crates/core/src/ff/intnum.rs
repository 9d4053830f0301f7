//! Integer helpers: primality, factorization of group orders, gcd/lcm.

use num_prime::nt_funcs;

pub fn is_prime(n: u64) -> bool {
    nt_funcs::is_prime64(n)
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(n: u128) -> Vec<u128> {
    if n <= 1 {
        return Vec::new();
    }
    nt_funcs::factorize128(n).into_keys().collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} not invertible mod {m}");
    t0.rem_euclid(m as i128) as u64
}

/// `p^k` if it fits.
pub fn checked_pow(p: u64, k: u32) -> Option<u128> {
    (p as u128).checked_pow(k)
}

/// If `q` is a power of the prime `p`, returns the exponent.
pub fn log_exact(q: u64, p: u64) -> Option<u32> {
    if q == 0 || p < 2 {
        return None;
    }
    let mut e = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    (x == 1).then_some(e)
}

/// Smallest prime dividing a prime power `q`, with the exponent.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0 || d * d > q).map(|d| if q % d == 0 { d } else { q })?;
    log_exact(q, p).map(|e| (p, e))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(11), Some((11, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn factors_and_divisors() {
        assert_eq!(prime_factors(127), vec![127]);
        assert_eq!(prime_factors(2u128.pow(20) - 1), vec![3, 5, 11, 31, 41]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(lcm(4, 6), 12);
    }
}
