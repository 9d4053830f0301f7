//! Scalar arithmetic backends.
//!
//! Field elements of small fields are handled as *encoded* integers: the
//! coordinate vector `(c_0, .., c_{k-1})` over GF(p) maps to `sum c_i p^i`.
//! Zero encodes to 0 and one to 1 in every field, and for a prime field the
//! encoding is the residue itself.

use super::intnum;

/// Arithmetic on encoded elements of one finite field.
pub(crate) trait Arith {
    fn characteristic(&self) -> u32;
    /// Number of elements.
    fn size(&self) -> u64;
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    /// Inverse of a nonzero element.
    fn inv(&self, a: u32) -> u32;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    fn pow(&self, mut a: u32, mut e: u128) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// `a^(1/p)`, the inverse of the absolute Frobenius.
    fn pth_root(&self, a: u32) -> u32 {
        // a^(p^(k-1)) inverts a -> a^p on GF(p^k)
        let p = self.characteristic() as u128;
        let mut k = 0u32;
        let mut s = 1u64;
        while s < self.size() {
            s *= self.characteristic() as u64;
            k += 1;
        }
        let mut r = a;
        for _ in 1..k {
            r = self.pow(r, p);
        }
        r
    }
}

/// Plain modular arithmetic in GF(p).
#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeArith {
    p: u32,
}

impl PrimeArith {
    pub(crate) fn new(p: u32) -> Self {
        PrimeArith { p }
    }
}

impl Arith for PrimeArith {
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn size(&self) -> u64 {
        self.p as u64
    }
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        intnum::inv_mod(a as u64, self.p as u64) as u32
    }
    fn pth_root(&self, a: u32) -> u32 {
        a
    }
}

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AddKind {
    Prime,
    Binary,
    Zech,
}

/// Log/antilog tables for a field small enough to enumerate.
#[derive(Debug)]
pub(crate) struct SmallField {
    p: u32,
    q: u32,
    kind: AddKind,
    generator: u32,
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`.
    log: Vec<u32>,
    /// `zech[i] = log(1 + g^i)`, or `NO_LOG` when `1 + g^i = 0`.
    zech: Vec<u32>,
}

impl SmallField {
    /// Builds tables from a multiplication routine on encoded elements and the
    /// least primitive element.
    pub(crate) fn build(p: u32, k: u32, generator: u32, mul: impl Fn(u32, u32) -> u32) -> Self {
        let q = p.pow(k);
        let m = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * m.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = 1u32;
        for i in 0..m {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = mul(x, generator);
        }
        debug_assert_eq!(x, 1);
        for i in 0..m {
            exp[i + m] = exp[i];
        }
        let kind = if k == 1 {
            AddKind::Prime
        } else if p == 2 {
            AddKind::Binary
        } else {
            AddKind::Zech
        };
        let mut zech = Vec::new();
        if kind == AddKind::Zech {
            zech = (0..m)
                .map(|i| {
                    let a = exp[i];
                    let s = if a % p == p - 1 { a - (p - 1) } else { a + 1 };
                    if s == 0 {
                        NO_LOG
                    } else {
                        log[s as usize]
                    }
                })
                .collect();
        }
        SmallField {
            p,
            q,
            kind,
            generator,
            exp,
            log,
            zech,
        }
    }

    pub(crate) fn generator(&self) -> u32 {
        self.generator
    }

    /// Discrete log to the base of the generator.
    pub(crate) fn log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize])
        }
    }
}

impl Arith for SmallField {
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn size(&self) -> u64 {
        self.q as u64
    }
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        match self.kind {
            AddKind::Binary => a ^ b,
            AddKind::Prime => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            AddKind::Zech => {
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let m = self.q - 1;
                let la = self.log[a as usize];
                let lb = self.log[b as usize];
                let d = if lb >= la { lb - la } else { lb + m - la };
                let z = self.zech[d as usize];
                if z == NO_LOG {
                    0
                } else {
                    self.exp[(la + z) as usize]
                }
            }
        }
    }
    #[inline]
    fn neg(&self, a: u32) -> u32 {
        match self.kind {
            AddKind::Binary => a,
            AddKind::Prime => {
                if a == 0 {
                    0
                } else {
                    self.p - a
                }
            }
            AddKind::Zech => {
                if a == 0 {
                    0
                } else {
                    self.exp[(self.log[a as usize] + (self.q - 1) / 2) as usize]
                }
            }
        }
    }
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }
    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let m = self.q - 1;
        let l = self.log[a as usize];
        self.exp[((m - l) % m) as usize]
    }
    fn pow(&self, a: u32, e: u128) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let m = (self.q - 1) as u128;
        let l = self.log[a as usize] as u128;
        self.exp[((l * (e % m)) % m) as usize]
    }
}
