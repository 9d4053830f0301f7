//! Exact arithmetic in finite fields GF(p^k).
//!
//! Every field is created through [`field_create`], which fixes the modulus
//! to the least monic irreducible of degree `k` (coefficient vectors ordered
//! as base-`p` integers, constant term least significant), so descriptions
//! are reproducible. Fields are shared handles; elements carry their field.
//!
//! Subfield embeddings are derived lazily and memoized per target field. The
//! image of GF(p^d) in GF(p^k) is the least root of the GF(p^d) modulus that
//! is compatible with the embeddings of the maximal proper subfields of
//! GF(p^d), which makes every triangle of embeddings commute.

pub(crate) mod arith;
pub mod elmat;
pub(crate) mod factor;
pub mod intnum;
pub(crate) mod linalg;
mod poly;
pub(crate) mod upoly;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use arith::{Arith, PrimeArith, SmallField};

pub use poly::UniPoly;

/// Shared handle to a field description.
pub type Field = Arc<FieldDesc>;

/// Fields up to this size get log tables on first use.
pub const AUTO_TABLE_SIZE: u64 = 1 << 16;
/// Default cap on enumeration-based routines.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

/// GF(p^k) with its defining modulus and memoized subfield links.
pub struct FieldDesc {
    p: u32,
    k: u32,
    /// Monic, constant term first, length `k + 1`.
    modulus: Vec<u32>,
    /// Nonzero `(j, p - m_j)` for `j < k`, used in reduction.
    tail: Vec<(usize, u32)>,
    small: OnceLock<SmallField>,
    /// Subfield degree -> image of that subfield's generator `x`.
    links: Mutex<BTreeMap<u32, Vec<u32>>>,
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldDesc {}

impl std::hash::Hash for FieldDesc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.k.hash(state);
    }
}

type Slot = Arc<OnceLock<Field>>;

fn registry() -> &'static Mutex<HashMap<(u32, u32), Slot>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), Slot>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

/// GF(p^k) with the deterministic modulus. Repeated calls return the same
/// handle.
pub fn field_create(p: u64, k: u32) -> Result<Field> {
    if p < 2 || p > u16::MAX as u64 || !intnum::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let p = p as u32;
    let slot = registry().lock().unwrap().entry((p, k)).or_default().clone();
    Ok(slot.get_or_init(|| Arc::new(FieldDesc::new(p, k, least_irreducible(p, k)))).clone())
}

/// GF(q) for a prime power `q`.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, e) = intnum::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    field_create(p, e)
}

/// Least monic irreducible of degree `k` over GF(p) in base-`p` integer order.
fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let ar = PrimeArith::new(p);
    let k = k as usize;
    let mut f = vec![0u32; k + 1];
    f[k] = 1;
    if k == 1 {
        return f;
    }
    f[0] = 1;
    loop {
        let has_root = p <= 64 && (0..p).any(|a| upoly::eval(&ar, &f, a) == 0);
        if !has_root && factor::is_irreducible(&ar, &f) {
            return f;
        }
        // odometer increment over c_0..c_{k-1}, c_0 least significant, skipping c_0 = 0
        let mut i = 0;
        loop {
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = if i == 0 { 1 } else { 0 };
            i += 1;
            assert!(i < k, "no irreducible of degree {k} over GF({p})");
        }
    }
}

impl FieldDesc {
    fn new(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let tail = modulus[..k as usize]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, p - c))
            .collect();
        FieldDesc {
            p,
            k,
            modulus,
            tail,
            small: OnceLock::new(),
            links: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Modulus coefficients over GF(p), constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements, when it fits.
    pub fn size(&self) -> Option<u128> {
        intnum::checked_pow(self.p as u64, self.k)
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub(crate) fn prime_arith(&self) -> PrimeArith {
        PrimeArith::new(self.p)
    }

    /// Table backend for polynomial work (fields up to the enumeration cap).
    pub(crate) fn small(&self) -> Result<&SmallField> {
        if !self.size().is_some_and(|s| s <= DEFAULT_ENUM_CAP as u128) {
            return Err(Error::FieldTooLarge(self.to_string()));
        }
        Ok(self.small.get_or_init(|| {
            let ge = self.encode(&self.least_primitive_coords());
            SmallField::build(self.p, self.k, ge, |a, b| {
                let c = self.mul_schoolbook(&self.decode(a), &self.decode(b));
                self.encode(&c)
            })
        }))
    }

    fn fast(&self) -> Option<&SmallField> {
        if self.size().is_some_and(|s| s <= AUTO_TABLE_SIZE as u128) {
            self.small().ok()
        } else {
            None
        }
    }

    pub(crate) fn encode(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0u32, |acc, &d| acc * self.p + d)
    }

    pub(crate) fn decode(&self, mut e: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = e % self.p;
                e /= self.p;
                d
            })
            .collect()
    }

    fn least_primitive_coords(&self) -> Vec<u32> {
        let size = self.size().expect("small field");
        let n = size - 1;
        let factors = intnum::prime_factors(n);
        for e in 1..size as u32 {
            let c = self.decode(e);
            let is_gen = factors.iter().all(|&l| !self.is_one_coords(&self.pow_coords(&c, n / l)));
            if is_gen {
                return c;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    fn is_one_coords(&self, c: &[u32]) -> bool {
        c[0] == 1 && c[1..].iter().all(|&d| d == 0)
    }

    fn mul_schoolbook(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.k as usize;
        let p = self.p as u64;
        let mut acc = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u64;
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x * y as u64;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = acc[i] % p;
            if c == 0 {
                continue;
            }
            for &(j, nm) in &self.tail {
                acc[i - k + j] += c * nm as u64;
            }
        }
        acc.truncate(k);
        acc.into_iter().map(|v| (v % p) as u32).collect()
    }

    pub(crate) fn mul_coords(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        match self.fast() {
            Some(sf) => self.decode(sf.mul(self.encode(a), self.encode(b))),
            None => self.mul_schoolbook(a, b),
        }
    }

    pub(crate) fn pow_coords(&self, a: &[u32], mut e: u128) -> Vec<u32> {
        let mut acc = self.one_coords();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul_schoolbook(&b, &b);
            }
        }
        acc
    }

    fn one_coords(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.k as usize];
        c[0] = 1;
        c
    }

    fn inv_coords(&self, a: &[u32]) -> Vec<u32> {
        if let Some(sf) = self.fast() {
            return self.decode(sf.inv(self.encode(a)));
        }
        let ar = self.prime_arith();
        let (_, s, _) = upoly::xgcd(&ar, &upoly::trim(a.to_vec()), &self.modulus);
        let mut c = s;
        c.resize(self.k as usize, 0);
        c
    }

    /// Absolute Frobenius `z -> z^p`.
    fn frob_p_coords(&self, a: &[u32]) -> Vec<u32> {
        match self.fast() {
            Some(sf) => self.decode(sf.pow(self.encode(a), self.p as u128)),
            None => self.pow_coords(a, self.p as u128),
        }
    }

    /// The class of `x` modulo the field modulus (zero in a prime field,
    /// whose modulus is `x`).
    pub fn x(self: &Field) -> FFElement {
        FFElement::from_parts(self, self.x_coords())
    }

    /// Least primitive element in encoded order (the generator `g`).
    pub fn generator(self: &Field) -> Result<FFElement> {
        let sf = self.small()?;
        Ok(FFElement::from_parts(self, self.decode(sf.generator())))
    }

    /// All elements in encoded order (small fields only).
    pub fn elements(self: &Field) -> Result<Vec<FFElement>> {
        let size = self.size().filter(|&s| s <= DEFAULT_ENUM_CAP as u128).ok_or_else(|| Error::FieldTooLarge(self.to_string()))?;
        Ok((0..size as u32).map(|e| FFElement::from_parts(self, self.decode(e))).collect())
    }

    pub fn random_element<R: Rng>(self: &Field, rng: &mut R) -> FFElement {
        let c = (0..self.k).map(|_| rng.gen_range(0..self.p)).collect();
        FFElement::from_parts(self, c)
    }

    /// Image of the generator `x` of GF(p^d) under the canonical embedding.
    fn subfield_image(self: &Field, d: u32) -> Result<Vec<u32>> {
        if self.k % d != 0 {
            return Err(Error::Incompatible(format!("GF({}^{d}) is not a subfield of {self}", self.p)));
        }
        if d == self.k {
            return Ok(self.x().coords);
        }
        if d == 1 {
            return Ok(self.constant(0));
        }
        if let Some(img) = self.links.lock().unwrap().get(&d) {
            return Ok(img.clone());
        }
        let sub = field_create(self.p as u64, d)?;
        let roots = self.roots_in_subfield(d, sub.modulus())?;
        let mut constraints = Vec::new();
        for l in intnum::prime_factors(d as u128) {
            let dd = d / l as u32;
            if dd == 1 {
                continue;
            }
            // image of GF(p^dd) inside GF(p^d), and inside self
            constraints.push((sub.subfield_image(dd)?, self.subfield_image(dd)?));
        }
        let img = roots
            .into_iter()
            .find(|r| constraints.iter().all(|(inner, outer)| &self.eval_coords_poly(inner, r) == outer))
            .ok_or_else(|| Error::Internal(format!("no compatible embedding of GF({}^{d}) into {self}", self.p)))?;
        self.links.lock().unwrap().insert(d, img.clone());
        Ok(img)
    }

    fn constant(&self, c: u32) -> Vec<u32> {
        let mut v = vec![0u32; self.k as usize];
        v[0] = c;
        v
    }

    /// Evaluates the GF(p)-polynomial with coefficient vector `c` at `r`.
    fn eval_coords_poly(&self, c: &[u32], r: &[u32]) -> Vec<u32> {
        let mut acc = vec![0u32; self.k as usize];
        for &ci in c.iter().rev() {
            acc = self.mul_coords(&acc, r);
            acc[0] = (acc[0] + ci) % self.p;
        }
        acc
    }

    /// GF(p)-basis (as coordinate vectors) of the degree-`d` subfield, from
    /// the kernel of `z -> z^(p^d) - z`.
    fn subfield_basis(&self, d: u32) -> Vec<Vec<u32>> {
        let k = self.k as usize;
        let mut xi = self.x_coords();
        for _ in 0..d {
            xi = self.frob_p_coords(&xi);
        }
        let mut rows = vec![vec![0u32; k]; k];
        let mut pw = self.one_coords();
        let ar = self.prime_arith();
        for j in 0..k {
            for i in 0..k {
                rows[i][j] = pw[i];
            }
            rows[j][j] = ar.sub(rows[j][j], 1);
            pw = self.mul_coords(&pw, &xi);
        }
        linalg::kernel(&ar, &rows, k)
    }

    fn x_coords(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.k as usize];
        if self.k == 1 {
            c[0] = (self.p - self.modulus[0]) % self.p;
        } else {
            c[1] = 1;
        }
        c
    }

    /// Roots of the GF(p)-polynomial `m` (degree `d`, irreducible) in this
    /// field, sorted ascending in base-`p` integer order.
    fn roots_in_subfield(&self, d: u32, m: &[u32]) -> Result<Vec<Vec<u32>>> {
        let basis = self.subfield_basis(d);
        let count = intnum::checked_pow(self.p as u64, d).filter(|&c| c <= DEFAULT_ENUM_CAP as u128);
        let count = count.ok_or_else(|| Error::FieldTooLarge(format!("subfield GF({}^{d})", self.p)))? as u64;
        let ar = self.prime_arith();
        let mut roots = Vec::new();
        let mut lam = vec![0u32; basis.len()];
        for _ in 0..count {
            let mut z = vec![0u32; self.k as usize];
            for (l, b) in lam.iter().zip(&basis) {
                if *l != 0 {
                    for (zi, &bi) in z.iter_mut().zip(b) {
                        *zi = ar.add(*zi, ar.mul(*l, bi));
                    }
                }
            }
            if self.eval_coords_poly(m, &z).iter().all(|&c| c == 0) {
                roots.push(z);
            }
            for l in lam.iter_mut() {
                *l += 1;
                if *l < self.p {
                    break;
                }
                *l = 0;
            }
        }
        roots.sort_by(|a, b| cmp_coords(a, b));
        if roots.len() != d as usize {
            return Err(Error::Internal(format!("expected {d} conjugate roots, found {}", roots.len())));
        }
        Ok(roots)
    }
}

/// Base-`p` integer order on coordinate vectors of equal length.
pub(crate) fn cmp_coords(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {})", self.p, self.k, crate::syntax::format_prime_poly(&self.modulus, "x"))
    }
}

/// An element of a finite field: coordinates over GF(p) in the power basis
/// of the field's modulus.
#[derive(Clone)]
pub struct FFElement {
    field: Field,
    coords: Vec<u32>,
}

impl PartialEq for FFElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.coords == other.coords
    }
}
impl Eq for FFElement {}

impl std::hash::Hash for FFElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.p.hash(state);
        self.field.k.hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Debug for FFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format_element(self))
    }
}

impl FFElement {
    pub(crate) fn from_parts(field: &Field, coords: Vec<u32>) -> Self {
        debug_assert_eq!(coords.len(), field.k as usize);
        FFElement { field: field.clone(), coords }
    }

    /// Element from coordinates (reduced mod p, padded to the degree).
    pub fn new(field: &Field, coords: &[u64]) -> Result<Self> {
        if coords.len() > field.k as usize {
            return Err(Error::Incompatible(format!("{} coordinates for {field}", coords.len())));
        }
        let mut c: Vec<u32> = coords.iter().map(|&v| (v % field.p as u64) as u32).collect();
        c.resize(field.k as usize, 0);
        Ok(Self::from_parts(field, c))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_parts(field, vec![0; field.k as usize])
    }

    pub fn one(field: &Field) -> Self {
        Self::from_parts(field, field.one_coords())
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(field: &Field, v: i64) -> Self {
        let c = v.rem_euclid(field.p as i64) as u32;
        Self::from_parts(field, field.constant(c))
    }

    /// Element with the given encoded index `sum c_i p^i`.
    pub fn from_encoded(field: &Field, e: u64) -> Result<Self> {
        if field.size().map_or(true, |s| e as u128 >= s) || e > u32::MAX as u64 {
            return Err(Error::Incompatible(format!("index {e} out of range for {field}")));
        }
        Ok(Self::from_parts(field, field.decode(e as u32)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn encoded(&self) -> Option<u64> {
        self.field.size().filter(|&s| s <= u32::MAX as u128)?;
        Some(self.field.encode(&self.coords) as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.field.is_one_coords(&self.coords)
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixed fields {} and {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let ar = self.field.prime_arith();
        let c = self.coords.iter().zip(&other.coords).map(|(&a, &b)| ar.add(a, b)).collect();
        Self::from_parts(&self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        let ar = self.field.prime_arith();
        let c = self.coords.iter().zip(&other.coords).map(|(&a, &b)| ar.sub(a, b)).collect();
        Self::from_parts(&self.field, c)
    }

    pub fn neg(&self) -> Self {
        let ar = self.field.prime_arith();
        Self::from_parts(&self.field, self.coords.iter().map(|&a| ar.neg(a)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        Self::from_parts(&self.field, self.field.mul_coords(&self.coords, &other.coords))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(Self::from_parts(&self.field, self.field.inv_coords(&self.coords)))
    }

    pub fn pow(&self, e: u128) -> Self {
        if let Some(sf) = self.field.fast() {
            let r = sf.pow(self.field.encode(&self.coords), e);
            return Self::from_parts(&self.field, self.field.decode(r));
        }
        Self::from_parts(&self.field, self.field.pow_coords(&self.coords, e))
    }

    /// `x^q` for `q` a power of the characteristic.
    pub fn frobenius(&self, q: u64) -> Result<Self> {
        let e = intnum::log_exact(q, self.field.p as u64).ok_or(Error::NotPowerOfCharacteristic(q, self.field.p as u64))?;
        Ok(self.frobenius_pow(e))
    }

    /// `x^(p^e)`.
    pub fn frobenius_pow(&self, e: u32) -> Self {
        let mut c = self.coords.clone();
        for _ in 0..e % self.field.k {
            c = self.field.frob_p_coords(&c);
        }
        Self::from_parts(&self.field, c)
    }

    /// Multiplicative order.
    pub fn order(&self) -> Result<u128> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.field.size().ok_or_else(|| Error::FieldTooLarge(self.field.to_string()))? - 1;
        let mut e = n;
        for l in intnum::prime_factors(n) {
            while e % l == 0 && self.pow(e / l).is_one() {
                e /= l;
            }
        }
        Ok(e)
    }

    /// Canonical image in `target` (a field containing this one).
    pub fn embed(&self, target: &Field) -> Result<Self> {
        if self.field.p != target.p || target.k % self.field.k != 0 {
            return Err(Error::Incompatible(format!("cannot embed {} into {}", self.field, target)));
        }
        if Arc::ptr_eq(&self.field, target) {
            return Ok(self.clone());
        }
        let img = target.subfield_image(self.field.k)?;
        let c = if self.field.k == 1 {
            target.constant(self.coords[0])
        } else {
            target.eval_coords_poly(&self.coords, &img)
        };
        Ok(Self::from_parts(target, c))
    }

    /// Preimage in the subfield `sub`, if this element lies in it.
    pub fn restrict(&self, sub: &Field) -> Result<Option<Self>> {
        if self.field.p != sub.p || self.field.k % sub.k != 0 {
            return Err(Error::Incompatible(format!("{} is not a subfield of {}", sub, self.field)));
        }
        if sub.k == 1 {
            let lies = self.coords[1..].iter().all(|&c| c == 0);
            return Ok(lies.then(|| Self::from_parts(sub, vec![self.coords[0]])));
        }
        let img = self.field.subfield_image(sub.k)?;
        let mut cols = Vec::with_capacity(sub.k as usize);
        let mut pw = self.field.one_coords();
        for _ in 0..sub.k {
            cols.push(pw.clone());
            pw = self.field.mul_coords(&pw, &img);
        }
        let sol = linalg::solve_columns(&self.field.prime_arith(), &cols, &self.coords);
        Ok(sol.map(|c| Self::from_parts(sub, c)))
    }

    /// Whether this element lies in the subfield of `q` elements.
    pub fn lies_in(&self, q: u64) -> Result<bool> {
        Ok(self.frobenius(q)? == *self)
    }
}

/// Coordinates of `z` in a basis of its field over the subfield `sub`, or
/// `None` when `z` is outside the `sub`-span of `basis`.
pub fn coordinates(z: &FFElement, basis: &[FFElement], sub: &Field) -> Result<Option<Vec<FFElement>>> {
    let big = z.field();
    if basis.iter().any(|b| b.field() != big) {
        return Err(Error::Incompatible(format!("basis outside {big}")));
    }
    let gamma = sub.x().embed(big)?;
    let e = sub.k as usize;
    // columns gamma^t b_j over GF(p); block j holds the coordinates of b_j
    let mut cols = Vec::with_capacity(e * basis.len());
    for b in basis {
        let mut w = b.clone();
        for _ in 0..e {
            cols.push(w.coords.clone());
            w = &w * &gamma;
        }
    }
    let sol = linalg::solve_columns(&big.prime_arith(), &cols, &z.coords);
    Ok(sol.map(|c| c.chunks(e).map(|ch| FFElement::from_parts(sub, ch.to_vec())).collect()))
}

impl std::ops::Add for &FFElement {
    type Output = FFElement;
    fn add(self, rhs: Self) -> FFElement {
        FFElement::add(self, rhs)
    }
}
impl std::ops::Sub for &FFElement {
    type Output = FFElement;
    fn sub(self, rhs: Self) -> FFElement {
        FFElement::sub(self, rhs)
    }
}
impl std::ops::Mul for &FFElement {
    type Output = FFElement;
    fn mul(self, rhs: Self) -> FFElement {
        FFElement::mul(self, rhs)
    }
}
impl std::ops::Neg for &FFElement {
    type Output = FFElement;
    fn neg(self) -> FFElement {
        FFElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_moduli() {
        assert_eq!(field_create(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(field_create(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(field_create(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(field_create(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert!(Arc::ptr_eq(&field_create(2, 3).unwrap(), &field_create(2, 3).unwrap()));
        assert!(matches!(field_create(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(field_create(2, 0), Err(Error::ZeroDegree)));
    }

    #[test]
    fn modulus_is_least_by_exhaustive_scan() {
        // oracle: scan all monic cubics over GF(2) in integer order
        let ar = PrimeArith::new(2);
        let least = (0..8u32)
            .map(|t| vec![t & 1, (t >> 1) & 1, (t >> 2) & 1, 1])
            .find(|f| factor::factor_degrees(&ar, f) == vec![3])
            .unwrap();
        assert_eq!(field_create(2, 3).unwrap().modulus(), least.as_slice());
    }

    #[test]
    fn axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, k) in [(2, 1), (2, 5), (3, 3), (5, 2), (7, 1), (2, 40), (5, 9)] {
            let f = field_create(p, k).unwrap();
            for _ in 0..50 {
                let a = f.random_element(&mut rng);
                let b = f.random_element(&mut rng);
                let c = f.random_element(&mut rng);
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&(&a + &b) - &b, a);
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn orders() {
        let f8 = field_create(2, 3).unwrap();
        assert_eq!(FFElement::one(&f8).order().unwrap(), 1);
        assert_eq!(f8.x().order().unwrap(), 7);
        let f9 = field_create(3, 2).unwrap();
        assert_eq!(f9.generator().unwrap().order().unwrap(), 8);
        assert!(FFElement::zero(&f9).order().is_err());
    }

    #[test]
    fn embeddings() {
        let f4 = field_create(2, 2).unwrap();
        let f16 = field_create(2, 4).unwrap();
        let g = f4.generator().unwrap();
        let e = g.embed(&f16).unwrap();
        assert_eq!(e.order().unwrap(), 3);
        assert!(FFElement::one(&f4).embed(&f16).unwrap().is_one());
        let f2 = field_create(2, 1).unwrap();
        let f8 = field_create(2, 3).unwrap();
        assert!(FFElement::zero(&f2).embed(&f8).unwrap().is_zero());
        assert!(g.embed(&f8).is_err());
        assert_eq!(e.restrict(&f4).unwrap(), Some(g));
        assert_eq!(f16.x().restrict(&f4).unwrap(), None);
    }

    #[test]
    fn embeddings_commute_along_towers() {
        for (p, a, b, c) in [(2u64, 2u32, 4u32, 8u32), (3, 1, 2, 4), (2, 2, 6, 12), (3, 2, 4, 8), (2, 3, 6, 12)] {
            let fa = field_create(p, a).unwrap();
            let fb = field_create(p, b).unwrap();
            let fc = field_create(p, c).unwrap();
            let z = fa.x();
            let two_step = z.embed(&fb).unwrap().embed(&fc).unwrap();
            assert_eq!(two_step, z.embed(&fc).unwrap(), "GF({p}^{a}) < GF({p}^{b}) < GF({p}^{c})");
            // embeddings are ring homomorphisms
            let w = fa.random_element(&mut ChaCha8Rng::seed_from_u64(a as u64));
            assert_eq!((&z * &w).embed(&fc).unwrap(), &z.embed(&fc).unwrap() * &w.embed(&fc).unwrap());
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_subfield() {
        let f8 = field_create(2, 3).unwrap();
        let b = f8.x();
        assert_eq!(b.frobenius(2).unwrap(), &b * &b);
        assert_eq!(b.frobenius(2).unwrap().frobenius(2).unwrap().frobenius(2).unwrap(), b);
        assert!(b.frobenius(3).is_err());
        for (p, k, e) in [(2u64, 4u32, 2u32), (3, 2, 1), (2, 6, 3), (5, 2, 1)] {
            let f = field_create(p, k).unwrap();
            let q = p.pow(e);
            let sub = field_create(p, e).unwrap();
            let fixed: Vec<_> = f.elements().unwrap().into_iter().filter(|z| z.frobenius(q).unwrap() == *z).collect();
            assert_eq!(fixed.len() as u64, q);
            for z in fixed {
                assert!(z.restrict(&sub).unwrap().is_some());
            }
        }
    }

    #[test]
    fn big_field_inverse_and_frobenius() {
        let f = field_create(2, 127).unwrap();
        let x = f.x();
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(x.frobenius_pow(127), x);
        assert_ne!(x.frobenius_pow(7), x);
    }
}
