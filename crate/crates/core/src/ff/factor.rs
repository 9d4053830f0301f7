//! Factorization over a finite field: squarefree decomposition, distinct-degree
//! splitting, and seeded Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::Arith;
use super::intnum;
use super::upoly::{self, degree, is_one};

/// Squarefree decomposition of a monic `f`: pairs `(g, m)` with `f = prod g^m`,
/// every `g` squarefree and monic.
pub(crate) fn squarefree<A: Arith>(ar: &A, f: &[u32]) -> Vec<(Vec<u32>, usize)> {
    let mut out = Vec::new();
    squarefree_into(ar, &upoly::monic(ar, f), 1, &mut out);
    out
}

fn squarefree_into<A: Arith>(ar: &A, f: &[u32], scale: usize, out: &mut Vec<(Vec<u32>, usize)>) {
    if degree(f).unwrap_or(0) == 0 {
        return;
    }
    let df = upoly::derivative(ar, f);
    let mut c = upoly::gcd(ar, f, &df);
    let mut w = upoly::divrem(ar, f, &c).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = upoly::gcd(ar, &w, &c);
        let fac = upoly::divrem(ar, &w, &y).0;
        if !is_one(&fac) {
            out.push((fac, i * scale));
        }
        w = y;
        c = upoly::divrem(ar, &c, &w).0;
        i += 1;
    }
    if !is_one(&c) {
        // c is a polynomial in x^p
        let p = ar.characteristic() as usize;
        let root: Vec<u32> = c.iter().step_by(p).map(|&a| ar.pth_root(a)).collect();
        squarefree_into(ar, &root, scale * p, out);
    }
}

/// Distinct-degree factorization of a squarefree monic `f`: pairs `(d, g)`
/// where `g` is the product of all degree-`d` irreducible factors.
pub(crate) fn distinct_degree<A: Arith>(ar: &A, f: &[u32]) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0u32, 1];
    let mut h = upoly::rem(ar, &x, &rest);
    let mut d = 1;
    while degree(&rest).unwrap_or(0) >= 2 * d {
        h = upoly::frob_q_mod(ar, &h, &rest);
        let g = upoly::gcd(ar, &rest, &upoly::sub(ar, &h, &x));
        if !is_one(&g) {
            rest = upoly::divrem(ar, &rest, &g).0;
            h = upoly::rem(ar, &h, &rest);
            out.push((d, g));
        }
        d += 1;
    }
    if let Some(r) = degree(&rest) {
        if r > 0 {
            out.push((r, rest));
        }
    }
    out
}

/// Splits a product of distinct monic irreducibles of common degree `d`.
pub(crate) fn equal_degree<A: Arith>(ar: &A, f: &[u32], d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u32>> {
    let n = degree(f).unwrap_or(0);
    if n == d {
        return vec![f.to_vec()];
    }
    let q = ar.size();
    loop {
        let a: Vec<u32> = upoly::trim((0..n).map(|_| rng.gen_range(0..q) as u32).collect());
        if a.is_empty() {
            continue;
        }
        let g0 = upoly::gcd(ar, f, &a);
        let split = if !is_one(&g0) {
            g0
        } else if ar.characteristic() == 2 {
            // absolute trace a + a^2 + ... + a^(2^(kd-1))
            let k = q.trailing_zeros() as usize;
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..k * d {
                t = upoly::mulmod(ar, &t, &t, f);
                s = upoly::add(ar, &s, &t);
            }
            upoly::gcd(ar, f, &s)
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + .. + q^(d-1)))^((q-1)/2)
            let mut t = a.clone();
            let mut w = a.clone();
            for _ in 1..d {
                t = upoly::frob_q_mod(ar, &t, f);
                w = upoly::mulmod(ar, &w, &t, f);
            }
            let b = upoly::powmod(ar, &w, ((q - 1) / 2) as u128, f);
            upoly::gcd(ar, f, &upoly::sub(ar, &b, &[1]))
        };
        let ds = degree(&split).unwrap_or(0);
        if ds > 0 && ds < n {
            let other = upoly::divrem(ar, f, &split).0;
            let mut out = equal_degree(ar, &split, d, rng);
            out.extend(equal_degree(ar, &other, d, rng));
            return out;
        }
    }
}

/// Degrees of the irreducible factors of `f` with multiplicity, ascending.
pub(crate) fn factor_degrees<A: Arith>(ar: &A, f: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, m) in squarefree(ar, f) {
        for (d, prod) in distinct_degree(ar, &g) {
            let count = degree(&prod).unwrap_or(0) / d;
            out.extend(std::iter::repeat(d).take(count * m));
        }
    }
    out.sort_unstable();
    out
}

/// Full factorization into monic irreducibles with multiplicities, sorted.
pub(crate) fn factor<A: Arith>(ar: &A, f: &[u32], seed: u64) -> Vec<(Vec<u32>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, m) in squarefree(ar, f) {
        for (d, prod) in distinct_degree(ar, &g) {
            for h in equal_degree(ar, &prod, d, &mut rng) {
                out.push((h, m));
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), a.0.iter().rev().collect::<Vec<_>>()).cmp(&(b.0.len(), b.0.iter().rev().collect())));
    out
}

/// Ben-Or irreducibility test.
pub(crate) fn is_irreducible<A: Arith>(ar: &A, f: &[u32]) -> bool {
    let f = upoly::monic(ar, f);
    let n = match degree(&f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    if f[0] == 0 {
        return false;
    }
    let x = vec![0u32, 1];
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = upoly::frob_q_mod(ar, &h, &f);
        let g = upoly::gcd(ar, &f, &upoly::sub(ar, &h, &x));
        if !is_one(&g) {
            return false;
        }
    }
    true
}

/// Least `e >= 1` with `f | x^e - 1`, for irreducible `f` with `f(0) != 0`.
/// `None` when `|field|^deg f - 1` overflows.
pub(crate) fn poly_order<A: Arith>(ar: &A, f: &[u32]) -> Option<u128> {
    let f = upoly::monic(ar, f);
    let d = degree(&f)? as u32;
    let n = (ar.size() as u128).checked_pow(d)? - 1;
    let x = vec![0u32, 1];
    let mut e = n;
    for l in intnum::prime_factors(n) {
        while e % l == 0 && is_one(&upoly::powmod(ar, &x, e / l, &f)) {
            e /= l;
        }
    }
    Some(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::arith::PrimeArith;

    fn brute_irreducible(p: u32, f: &[u32]) -> bool {
        // trial division by every monic polynomial of degree 1..=deg/2
        let ar = PrimeArith::new(p);
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = (p as usize).pow(d as u32);
            for t in 0..count {
                let mut g: Vec<u32> = (0..d).map(|i| ((t / (p as usize).pow(i as u32)) % p as usize) as u32).collect();
                g.push(1);
                if upoly::rem(&ar, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for p in [2u32, 3, 5] {
            let ar = PrimeArith::new(p);
            for n in 1..=5u32 {
                for t in 0..(p as usize).pow(n).min(400) {
                    let mut f: Vec<u32> = (0..n).map(|i| ((t / (p as usize).pow(i)) % p as usize) as u32).collect();
                    f.push(1);
                    assert_eq!(is_irreducible(&ar, &f), brute_irreducible(p, &f), "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn degrees_examples() {
        let gf3 = PrimeArith::new(3);
        assert_eq!(factor_degrees(&gf3, &[2, 0, 1]), vec![1, 1]);
        assert_eq!(factor_degrees(&gf3, &[1, 0, 1]), vec![2]);
        let gf2 = PrimeArith::new(2);
        assert_eq!(factor_degrees(&gf2, &[1, 1, 0, 0, 0, 0, 0, 1]), vec![7]);
        // (x+1)^4 (x^2+x+1)^2 in char 2 exercises the p-th root branch
        let a = upoly::mul(&gf2, &[1, 1], &[1, 1]);
        let a = upoly::mul(&gf2, &a, &a);
        let b = upoly::mul(&gf2, &[1, 1, 1], &[1, 1, 1]);
        assert_eq!(factor_degrees(&gf2, &upoly::mul(&gf2, &a, &b)), vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn full_factorization_multiplies_back() {
        let gf5 = PrimeArith::new(5);
        let f: Vec<u32> = vec![3, 1, 4, 1, 0, 2, 2, 0, 1, 3, 1];
        let f = upoly::monic(&gf5, &f);
        let fac = factor(&gf5, &f, 7);
        let mut prod = vec![1u32];
        for (g, m) in &fac {
            assert!(is_irreducible(&gf5, g));
            for _ in 0..*m {
                prod = upoly::mul(&gf5, &prod, g);
            }
        }
        assert_eq!(prod, f);
        let degs: Vec<usize> = fac.iter().flat_map(|(g, m)| std::iter::repeat(g.len() - 1).take(*m)).collect();
        let mut degs = degs;
        degs.sort();
        assert_eq!(degs, factor_degrees(&gf5, &f));
    }

    #[test]
    fn orders() {
        let gf2 = PrimeArith::new(2);
        assert_eq!(poly_order(&gf2, &[1, 1]), Some(1));
        assert_eq!(poly_order(&gf2, &[1, 1, 0, 1]), Some(7));
        assert_eq!(poly_order(&gf2, &[1, 1, 1, 1, 1]), Some(5));
    }
}
