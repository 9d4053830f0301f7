//! Small dense matrices of field elements (rows of [`FFElement`]).

use super::{FFElement, Field};

pub type Matrix = Vec<Vec<FFElement>>;

pub fn identity(field: &Field, n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { FFElement::one(field) } else { FFElement::zero(field) }).collect())
        .collect()
}

/// Determinant by Gaussian elimination; `m` must be square and nonempty.
pub fn det(m: &[Vec<FFElement>]) -> FFElement {
    let n = m.len();
    let field = m[0][0].field().clone();
    let mut a: Matrix = m.to_vec();
    let mut d = FFElement::one(&field);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return FFElement::zero(&field);
        };
        if p != c {
            a.swap(p, c);
            d = d.neg();
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[r][j] = &a[r][j] - &t;
            }
        }
    }
    d
}

pub fn mul(a: &[Vec<FFElement>], b: &[Vec<FFElement>]) -> Matrix {
    let field = b[0][0].field();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(FFElement::zero(field), |acc, (x, br)| &acc + &(x * &br[j])))
                .collect()
        })
        .collect()
}

pub fn pow(a: &[Vec<FFElement>], mut e: u64) -> Matrix {
    let mut acc = identity(a[0][0].field(), a.len());
    let mut b = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = mul(&b, &b);
        }
    }
    acc
}

/// Whether `a` is `c I` for some scalar `c`.
pub fn is_scalar(a: &[Vec<FFElement>]) -> bool {
    let n = a.len();
    (0..n).all(|i| (0..n).all(|j| if i == j { a[i][i] == a[0][0] } else { a[i][j].is_zero() }))
}

/// Multiplicative order of an invertible matrix, searched up to `cap`.
pub fn order(a: &[Vec<FFElement>], cap: u64) -> Option<u64> {
    let id = identity(a[0][0].field(), a.len());
    let mut w = a.to_vec();
    for e in 1..=cap {
        if w == id {
            return Some(e);
        }
        w = mul(&w, a);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::field_create;

    #[test]
    fn determinant_against_cofactor_expansion() {
        // oracle: Leibniz formula over all permutations of 3 elements
        let f = field_create(5, 2).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        for _ in 0..20 {
            let m: Matrix = (0..3).map(|_| (0..3).map(|_| f.random_element(&mut rng)).collect()).collect();
            let perms = [([0, 1, 2], 1), ([0, 2, 1], -1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([2, 1, 0], -1)];
            let mut want = FFElement::zero(&f);
            for (p, s) in perms {
                let t = &(&m[0][p[0]] * &m[1][p[1]]) * &m[2][p[2]];
                want = if s > 0 { &want + &t } else { &want - &t };
            }
            assert_eq!(det(&m), want);
        }
    }

    #[test]
    fn orders_and_scalars() {
        let f = field_create(2, 1).unwrap();
        let one = FFElement::one(&f);
        let z = FFElement::zero(&f);
        let c = vec![vec![z.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert_eq!(order(&c, 10), Some(3));
        assert!(is_scalar(&pow(&c, 3)));
        assert!(!is_scalar(&c));
    }
}
