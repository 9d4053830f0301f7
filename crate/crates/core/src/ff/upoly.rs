//! Dense univariate polynomials as coefficient slices (constant term first)
//! over an [`Arith`] backend. Results are always trimmed: no trailing zeros,
//! and the zero polynomial is the empty vector.

use super::arith::Arith;

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn is_one(a: &[u32]) -> bool {
    a.len() == 1 && a[0] == 1
}

pub(crate) fn add<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = ar.add(*o, s);
    }
    trim(out)
}

pub(crate) fn sub<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ar.sub(x, y)
        })
        .collect();
    trim(out)
}

pub(crate) fn scale<A: Arith>(ar: &A, a: &[u32], c: u32) -> Vec<u32> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| ar.mul(x, c)).collect()
}

pub(crate) fn mul<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = ar.add(out[i + j], ar.mul(x, y));
            }
        }
    }
    trim(out)
}

pub(crate) fn monic<A: Arith>(ar: &A, a: &[u32]) -> Vec<u32> {
    match a.last() {
        None => Vec::new(),
        Some(&1) => a.to_vec(),
        Some(&lc) => scale(ar, a, ar.inv(lc)),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let lc_inv = ar.inv(b[db]);
    let support: Vec<(usize, u32)> = b[..db]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    let mut r = a.to_vec();
    let mut q = vec![0u32; a.len() - db];
    for i in (db..a.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let f = ar.mul(c, lc_inv);
        q[i - db] = f;
        r[i] = 0;
        let nf = ar.neg(f);
        for &(j, bj) in &support {
            let pos = i - db + j;
            r[pos] = ar.add(r[pos], ar.mul(nf, bj));
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(ar, a, b).1
}

/// Monic gcd (zero only when both inputs are zero).
pub(crate) fn gcd<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(ar, &x, &y);
        x = y;
        y = r;
    }
    monic(ar, &x)
}

/// Extended gcd: `(g, s, t)` with `s a + t b = g`, `g` monic.
pub(crate) fn xgcd<A: Arith>(ar: &A, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u32], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u32]);
    while !r1.is_empty() {
        let (q, r) = divrem(ar, &r0, &r1);
        let s2 = sub(ar, &s0, &mul(ar, &q, &s1));
        let t2 = sub(ar, &t0, &mul(ar, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(&lc) => {
            let li = ar.inv(lc);
            (scale(ar, &r0, li), scale(ar, &s0, li), scale(ar, &t0, li))
        }
    }
}

pub(crate) fn derivative<A: Arith>(ar: &A, a: &[u32]) -> Vec<u32> {
    let p = ar.characteristic() as usize;
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| {
            let m = (i % p) as u32;
            if m == 0 {
                0
            } else {
                // i mod p as a prime-field element; encodings agree on GF(p)
                ar.mul(c, m)
            }
        })
        .collect();
    trim(out)
}

pub(crate) fn mulmod<A: Arith>(ar: &A, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(ar, &mul(ar, a, b), m)
}

pub(crate) fn powmod<A: Arith>(ar: &A, base: &[u32], mut e: u128, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(ar, &[1], m);
    let mut b = rem(ar, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(ar, &acc, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(ar, &b, &b, m);
        }
    }
    acc
}

/// `a^p mod m` using `a(x)^p = a^(p)(x^p)`: coefficients go through the
/// absolute Frobenius and exponents are spread by `p`.
pub(crate) fn frob_p_mod<A: Arith>(ar: &A, a: &[u32], m: &[u32], prime_field: bool) -> Vec<u32> {
    let p = ar.characteristic() as usize;
    if a.is_empty() {
        return Vec::new();
    }
    let mut spread = vec![0u32; (a.len() - 1) * p + 1];
    for (i, &c) in a.iter().enumerate() {
        spread[i * p] = if prime_field { c } else { ar.pow(c, p as u128) };
    }
    rem(ar, &spread, m)
}

/// `a^Q mod m` where `Q = |field|`.
pub(crate) fn frob_q_mod<A: Arith>(ar: &A, a: &[u32], m: &[u32]) -> Vec<u32> {
    let p = ar.characteristic() as u64;
    let mut k = 0;
    let mut s = 1u64;
    while s < ar.size() {
        s *= p;
        k += 1;
    }
    // a^Q = a(x^Q) when coefficients lie in GF(Q); spread k times by p
    let prime_field = k == 1;
    let mut r = rem(ar, a, m);
    for _ in 0..k {
        r = frob_p_mod(ar, &r, m, prime_field);
    }
    r
}

pub(crate) fn eval<A: Arith>(ar: &A, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| ar.add(ar.mul(acc, x), c))
}
