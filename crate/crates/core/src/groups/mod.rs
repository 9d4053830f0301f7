//! Matrix groups over GF(q): Singer cycles, the semilinear groups ΓL(1,q^n)
//! and ΓL₁(1,q^n), closures, orbits on nonzero vectors, fingerprints, and
//! classification of transitive subgroups of SL(n,q).
//!
//! Matrices act on column vectors. Entries are stored encoded (see
//! [`crate::ff`]); a [`GL`] context does the arithmetic.

mod classify;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::Serialize;

pub use classify::{classify_transitive_subgroups, subgroup_lattice_transitive, ClassifyMode, Classification, LatticeCheck, TransitiveClass};

use crate::error::{Error, Result};
use crate::ff::arith::{Arith, SmallField};
use crate::ff::elmat::Matrix;
use crate::ff::{coordinates, field_create, field_of_order, FFElement, Field};
use crate::syntax;

/// Default bound on `|SL(n,q)|` for exhaustive work.
pub const DEFAULT_ENUM_CAP: u64 = 20000;
/// Default bound on a single closure in randomized search.
pub const DEFAULT_CLOSURE_CAP: u64 = 2000;

/// An `n x n` matrix over GF(q), row-major, entries encoded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatGF {
    n: usize,
    e: Vec<u32>,
}

impl MatGF {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.n + j]
    }

    pub fn raw(&self) -> &[u32] {
        &self.e
    }
}

/// Arithmetic context for `n x n` matrices over GF(q).
#[derive(Clone, Debug)]
pub struct GL {
    q: u64,
    n: usize,
    field: Field,
}

impl GL {
    pub fn new(q: u64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let field = field_of_order(q)?;
        field.small()?;
        Ok(GL { q, n, field })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn ar(&self) -> &SmallField {
        self.field.small().expect("checked in GL::new")
    }

    /// `|GL(n,q)|`.
    pub fn gl_order(&self) -> u128 {
        let qn = (self.q as u128).pow(self.n as u32);
        (0..self.n as u32).map(|i| qn - (self.q as u128).pow(i)).product()
    }

    /// `|SL(n,q)|`.
    pub fn sl_order(&self) -> u128 {
        self.gl_order() / (self.q as u128 - 1)
    }

    /// Number of nonzero column vectors, `q^n - 1`.
    pub fn nonzero_vectors(&self) -> u64 {
        self.q.pow(self.n as u32) - 1
    }

    pub fn identity(&self) -> MatGF {
        let mut e = vec![0u32; self.n * self.n];
        for i in 0..self.n {
            e[i * self.n + i] = 1;
        }
        MatGF { n: self.n, e }
    }

    pub fn from_raw(&self, e: Vec<u32>) -> Result<MatGF> {
        if e.len() != self.n * self.n || e.iter().any(|&c| c as u64 >= self.q) {
            return Err(Error::InvalidArgument(format!("not a {0}x{0} matrix over GF({1})", self.n, self.q)));
        }
        Ok(MatGF { n: self.n, e })
    }

    pub fn from_elements(&self, m: &[Vec<FFElement>]) -> Result<MatGF> {
        let mut e = Vec::with_capacity(self.n * self.n);
        for row in m {
            for c in row {
                if c.field() != &self.field {
                    return Err(Error::Incompatible(format!("entry in {} for GL({}, {})", c.field(), self.n, self.q)));
                }
                e.push(self.field.encode(c.coords()));
            }
        }
        self.from_raw(e)
    }

    pub fn to_elements(&self, a: &MatGF) -> Matrix {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| FFElement::from_encoded(&self.field, a.entry(i, j) as u64).unwrap()).collect())
            .collect()
    }

    pub fn mul(&self, a: &MatGF, b: &MatGF) -> MatGF {
        let n = self.n;
        let ar = self.ar();
        let mut e = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a.e[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b.e[k * n + j];
                    if y != 0 {
                        e[i * n + j] = ar.add(e[i * n + j], ar.mul(x, y));
                    }
                }
            }
        }
        MatGF { n, e }
    }

    pub fn pow(&self, a: &MatGF, mut k: u64) -> MatGF {
        let mut acc = self.identity();
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    fn rows(&self, a: &MatGF) -> Vec<Vec<u32>> {
        a.e.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn det_raw(&self, a: &MatGF) -> u32 {
        crate::ff::linalg::det(self.ar(), &self.rows(a))
    }

    pub fn det(&self, a: &MatGF) -> FFElement {
        FFElement::from_encoded(&self.field, self.det_raw(a) as u64).unwrap()
    }

    pub fn inv(&self, a: &MatGF) -> Result<MatGF> {
        let inv = crate::ff::linalg::inverse(self.ar(), &self.rows(a)).ok_or(Error::Singular)?;
        Ok(MatGF {
            n: self.n,
            e: inv.concat(),
        })
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order(&self, a: &MatGF) -> u64 {
        let id = self.identity();
        let mut w = a.clone();
        let mut k = 1;
        while w != id {
            w = self.mul(&w, a);
            k += 1;
        }
        k
    }

    /// `a v` for a column vector of encoded entries.
    pub fn apply(&self, a: &MatGF, v: &[u32]) -> Vec<u32> {
        let ar = self.ar();
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| ar.add(acc, ar.mul(a.e[i * self.n + j], v[j]))))
            .collect()
    }

    /// Lexicographic index of a vector: `v_0 q^(n-1) + ... + v_(n-1)`.
    pub fn vector_code(&self, v: &[u32]) -> u64 {
        v.iter().fold(0, |acc, &c| acc * self.q + c as u64)
    }

    pub fn vector_of(&self, mut code: u64) -> Vec<u32> {
        let mut v = vec![0u32; self.n];
        for i in (0..self.n).rev() {
            v[i] = (code % self.q) as u32;
            code /= self.q;
        }
        v
    }

    /// Uniform element of SL(n,q): a random invertible matrix with its first
    /// row divided by the determinant.
    pub fn random_sl<R: Rng>(&self, rng: &mut R) -> MatGF {
        let ar = self.ar();
        loop {
            let e: Vec<u32> = (0..self.n * self.n).map(|_| rng.gen_range(0..self.q as u32)).collect();
            let mut m = MatGF { n: self.n, e };
            let d = self.det_raw(&m);
            if d == 0 {
                continue;
            }
            let di = ar.inv(d);
            for j in 0..self.n {
                m.e[j] = ar.mul(m.e[j], di);
            }
            return m;
        }
    }

    /// All of SL(n,q), in increasing raw order.
    pub fn sl_elements(&self, cap: u64) -> Result<Vec<MatGF>> {
        let order = self.sl_order();
        if order > cap as u128 {
            return Err(Error::CapExceeded {
                what: format!("|SL({}, {})| = {order}", self.n, self.q),
                cap,
            });
        }
        let nn = self.n * self.n;
        let total = self.q.checked_pow(nn as u32).filter(|&t| t <= 1 << 26).ok_or_else(|| Error::CapExceeded {
            what: format!("{}x{} matrices over GF({})", self.n, self.n, self.q),
            cap: 1 << 26,
        })?;
        let mut out = Vec::with_capacity(order as usize);
        let mut e = vec![0u32; nn];
        for _ in 0..total {
            let m = MatGF { n: self.n, e: e.clone() };
            if self.det_raw(&m) == 1 {
                out.push(m);
            }
            // odometer, last entry fastest
            for d in e.iter_mut().rev() {
                *d += 1;
                if (*d as u64) < self.q {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }

    pub fn format(&self, a: &MatGF) -> String {
        let rows: Vec<String> = self
            .to_elements(a)
            .iter()
            .map(|r| format!("[{}]", r.iter().map(syntax::format_element).collect::<Vec<_>>().join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// The field GF(q^n) with its power basis `1, x, ..., x^(n-1)` over GF(q).
fn extension(q: u64, n: usize) -> Result<(Field, Field, Vec<FFElement>)> {
    let gfq = field_of_order(q)?;
    let big = field_create(gfq.characteristic(), gfq.degree() * n as u32)?;
    let x = big.x();
    let mut basis = vec![FFElement::one(&big)];
    for i in 1..n {
        basis.push(&basis[i - 1] * &x);
    }
    Ok((gfq, big, basis))
}

/// Matrix over GF(q) of a GF(q)-linear map of GF(q^n), given by the images
/// of the power basis.
fn matrix_of(gl: &GL, gfq: &Field, basis: &[FFElement], images: &[FFElement]) -> Result<MatGF> {
    let n = basis.len();
    let mut e = vec![0u32; n * n];
    for (j, img) in images.iter().enumerate() {
        let c = coordinates(img, basis, gfq)?.ok_or_else(|| Error::Internal("power basis does not span".into()))?;
        for (i, ci) in c.iter().enumerate() {
            e[i * n + j] = gfq.encode(ci.coords());
        }
    }
    gl.from_raw(e)
}

/// A Singer cycle and the data behind it.
#[derive(Clone, Debug)]
pub struct Singer {
    pub gl: GL,
    pub matrix: MatGF,
    /// The primitive element whose multiplication the matrix represents.
    pub element: FFElement,
    /// Whether `element` is the class of `x` itself.
    pub is_x: bool,
}

/// Multiplication by a primitive element of GF(q^n) on the power basis: the
/// class of `x` when it is primitive, else the least primitive element.
pub fn singer_cycle(q: u64, n: usize) -> Result<Singer> {
    let gl = GL::new(q, n)?;
    let (gfq, big, basis) = extension(q, n)?;
    let x = big.x();
    let full = big.size().ok_or_else(|| Error::FieldTooLarge(big.to_string()))? - 1;
    let (element, is_x) = if !x.is_zero() && x.order()? == full {
        (x, true)
    } else {
        (big.generator()?, false)
    };
    let images: Vec<FFElement> = basis.iter().map(|b| b * &element).collect();
    let matrix = matrix_of(&gl, &gfq, &basis, &images)?;
    Ok(Singer { gl, matrix, element, is_x })
}

/// Matrix of `z -> z^q` on the power basis of GF(q^n).
pub fn frobenius_matrix(q: u64, n: usize) -> Result<MatGF> {
    let gl = GL::new(q, n)?;
    let (gfq, _, basis) = extension(q, n)?;
    let images: Vec<FFElement> = basis.iter().map(|b| b.frobenius(q)).collect::<Result<_>>()?;
    matrix_of(&gl, &gfq, &basis, &images)
}

/// A finite matrix group with its full element list.
#[derive(Clone, Debug)]
pub struct GroupSet {
    pub gl: GL,
    pub gens: Vec<MatGF>,
    /// Sorted.
    pub elements: Vec<MatGF>,
}

impl GroupSet {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, a: &MatGF) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    /// From an element list closed under multiplication; generators are
    /// picked greedily in element order.
    pub fn from_elements(gl: &GL, mut elements: Vec<MatGF>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let mut gens: Vec<MatGF> = Vec::new();
        let mut span: HashSet<MatGF> = HashSet::from([gl.identity()]);
        for a in &elements {
            if !span.contains(a) {
                gens.push(a.clone());
                span = closure(gl, &gens, elements.len() as u64)?.elements.into_iter().collect();
            }
        }
        if span.len() != elements.len() {
            return Err(Error::InvalidArgument("element list is not a group".into()));
        }
        Ok(GroupSet {
            gl: gl.clone(),
            gens,
            elements,
        })
    }

    /// The subgroup of elements with determinant 1.
    pub fn sl_part(&self) -> Result<Self> {
        let els = self.elements.iter().filter(|a| self.gl.det_raw(a) == 1).cloned().collect();
        Self::from_elements(&self.gl, els)
    }

    /// Whether every element of `self` lies in `big` and `self` is stable
    /// under conjugation by the generators of `big`.
    pub fn is_normal_in(&self, big: &GroupSet) -> Result<bool> {
        if !self.elements.iter().all(|a| big.contains(a)) {
            return Ok(false);
        }
        for g in &big.gens {
            let gi = self.gl.inv(g)?;
            if !self.elements.iter().all(|a| self.contains(&self.gl.mul(&self.gl.mul(g, a), &gi))) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Breadth-first product closure of the generators; `CapExceeded` once more
/// than `cap` elements appear.
pub fn closure(gl: &GL, gens: &[MatGF], cap: u64) -> Result<GroupSet> {
    for g in gens {
        if g.n != gl.n {
            return Err(Error::InvalidArgument("generator of the wrong size".into()));
        }
        if gl.det_raw(g) == 0 {
            return Err(Error::Singular);
        }
    }
    let id = gl.identity();
    let mut seen: HashSet<MatGF> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = gl.mul(&a, g);
            if seen.insert(b.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::CapExceeded {
                        what: "group closure".into(),
                        cap,
                    });
                }
                queue.push_back(b);
            }
        }
    }
    let mut elements: Vec<MatGF> = seen.into_iter().collect();
    elements.sort();
    Ok(GroupSet {
        gl: gl.clone(),
        gens: gens.to_vec(),
        elements,
    })
}

/// ΓL(1,q^n) generated by the Singer cycle and the Frobenius matrix, or its
/// determinant-1 part ΓL₁(1,q^n).
pub fn gamma_l(q: u64, n: usize, sl_only: bool, cap: u64) -> Result<GroupSet> {
    let s = singer_cycle(q, n)?;
    let phi = frobenius_matrix(q, n)?;
    let g = closure(&s.gl, &[s.matrix, phi], cap)?;
    if sl_only {
        g.sl_part()
    } else {
        Ok(g)
    }
}

/// Orbits of a group on nonzero vectors, as sorted lists of vector codes,
/// ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    pub orbits: Vec<Vec<u64>>,
    pub transitive: bool,
}

pub fn orbits(g: &GroupSet) -> Orbits {
    let gl = &g.gl;
    let total = gl.nonzero_vectors();
    let acting = if g.gens.is_empty() { &g.elements } else { &g.gens };
    let mut seen = vec![false; total as usize + 1];
    let mut out = Vec::new();
    for start in 1..=total {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let v = gl.vector_of(orbit[i]);
            for a in acting {
                let w = gl.vector_code(&gl.apply(a, &v));
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    orbit.push(w);
                }
            }
            i += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    Orbits {
        transitive: out.len() == 1,
        orbits: out,
    }
}

/// Isomorphism-invariant summary used to recognize small groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupFingerprint {
    pub order: u64,
    /// Element order -> number of elements of that order.
    pub histogram: BTreeMap<u64, u64>,
    pub involutions: u64,
    pub center_order: u64,
    pub det_image_order: u64,
    pub transitive: bool,
}

impl fmt::Display for GroupFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(
            f,
            "order {} orders {{{}}} involutions {} center {} det-image {} transitive {}",
            self.order,
            h.join(", "),
            self.involutions,
            self.center_order,
            self.det_image_order,
            self.transitive
        )
    }
}

pub fn fingerprint(g: &GroupSet) -> GroupFingerprint {
    let gl = &g.gl;
    let mut histogram = BTreeMap::new();
    for a in &g.elements {
        *histogram.entry(gl.order(a)).or_insert(0) += 1;
    }
    let centralizing: &[MatGF] = if g.gens.is_empty() { &g.elements } else { &g.gens };
    let center_order = g
        .elements
        .iter()
        .filter(|a| centralizing.iter().all(|b| gl.mul(a, b) == gl.mul(b, a)))
        .count() as u64;
    let dets: BTreeSet<u32> = g.elements.iter().map(|a| gl.det_raw(a)).collect();
    GroupFingerprint {
        order: g.order(),
        involutions: histogram.get(&2).copied().unwrap_or(0),
        histogram,
        center_order,
        det_image_order: dets.len() as u64,
        transitive: orbits(g).transitive,
    }
}

/// `n(q^n - 1)` and `n(q^n - 1)/(q - 1)`.
pub fn gamma_l_orders(q: u64, n: usize) -> (u64, u64) {
    let full = n as u64 * (q.pow(n as u32) - 1);
    (full, full / (q - 1))
}

/// Whether `(q^n - 1)` divides the order (necessary for transitivity).
pub fn order_allows_transitivity(order: u64, q: u64, n: usize) -> bool {
    order % (q.pow(n as u32) - 1) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singer_examples() {
        let s = singer_cycle(2, 3).unwrap();
        assert!(s.is_x);
        // companion matrix of x^3 + x + 1 acting on columns
        assert_eq!(s.matrix.raw(), &[0, 0, 1, 1, 0, 1, 0, 1, 0]);
        // oracle: repeated multiplication
        let gl = &s.gl;
        let mut w = s.matrix.clone();
        let mut k = 1;
        while w != gl.identity() {
            w = gl.mul(&w, &s.matrix);
            k += 1;
        }
        assert_eq!(k, 7);
        for (q, n) in [(3u64, 2usize), (4, 2), (5, 2), (2, 4), (3, 3), (4, 3)] {
            let s = singer_cycle(q, n).unwrap();
            assert_eq!(s.gl.order(&s.matrix), q.pow(n as u32) - 1, "({q},{n})");
        }
        let s = singer_cycle(3, 2).unwrap();
        assert_eq!(s.gl.det(&s.matrix).order().unwrap(), 2);
    }

    #[test]
    fn frobenius_normalizes_singer() {
        for (q, n) in [(2u64, 3usize), (3, 3), (4, 3), (5, 2)] {
            let s = singer_cycle(q, n).unwrap();
            let gl = &s.gl;
            let phi = frobenius_matrix(q, n).unwrap();
            let lhs = gl.mul(&gl.mul(&phi, &s.matrix), &gl.inv(&phi).unwrap());
            assert_eq!(lhs, gl.pow(&s.matrix, q));
        }
    }

    #[test]
    fn gamma_l_orders_and_transitivity() {
        let g = gamma_l(2, 3, false, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(g.order(), 21);
        assert!(orbits(&g).transitive);
        let g1 = gamma_l(3, 3, true, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(g1.order(), 39);
        let o = orbits(&g1);
        assert!(!o.transitive);
        assert_eq!(o.orbits.iter().map(|x| x.len()).sum::<usize>(), 26);
        assert_eq!(gamma_l(2, 4, true, DEFAULT_ENUM_CAP).unwrap().order(), gamma_l(2, 4, false, DEFAULT_ENUM_CAP).unwrap().order());
        // the determinant is onto GF(q)^*
        let g = gamma_l(5, 2, false, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fingerprint(&g).det_image_order, 4);
    }

    #[test]
    fn closure_examples() {
        let gl = GL::new(2, 3).unwrap();
        assert_eq!(closure(&gl, &[gl.identity()], 10).unwrap().order(), 1);
        let s = singer_cycle(2, 3).unwrap();
        assert_eq!(closure(&gl, &[s.matrix.clone()], 10).unwrap().order(), 7);
        assert!(matches!(closure(&gl, &[s.matrix, frobenius_matrix(2, 3).unwrap()], 20), Err(Error::CapExceeded { .. })));
        let sing = gl.from_raw(vec![0; 9]).unwrap();
        assert_eq!(closure(&gl, &[sing], 10).err(), Some(Error::Singular));
    }

    #[test]
    fn fingerprints() {
        let s = singer_cycle(2, 3).unwrap();
        let c7 = closure(&s.gl, &[s.matrix], 100).unwrap();
        let fp = fingerprint(&c7);
        assert_eq!(fp.histogram, BTreeMap::from([(1, 1), (7, 6)]));
        assert_eq!((fp.involutions, fp.center_order), (0, 7));
        let gl = GL::new(5, 2).unwrap();
        let sl = GroupSet::from_elements(&gl, gl.sl_elements(DEFAULT_ENUM_CAP).unwrap()).unwrap();
        let fp = fingerprint(&sl);
        assert_eq!((fp.order, fp.involutions, fp.center_order), (120, 1, 2));
        assert_eq!(fp.histogram.values().sum::<u64>(), 120);
    }

    #[test]
    fn sl_enumeration_sizes() {
        for (q, n) in [(2u64, 2usize), (3, 2), (2, 3), (5, 2), (4, 2)] {
            let gl = GL::new(q, n).unwrap();
            assert_eq!(gl.sl_elements(DEFAULT_ENUM_CAP).unwrap().len() as u128, gl.sl_order());
        }
        assert!(GL::new(3, 3).unwrap().sl_elements(1000).is_err());
    }
}
