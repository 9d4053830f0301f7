use std::fmt;

use super::arith::{Arith, SmallField};
use super::{factor, upoly, FFElement, Field};
use crate::error::{Error, Result};

/// Univariate polynomial over a finite field small enough for log tables
/// (at most [`super::DEFAULT_ENUM_CAP`] elements). Coefficients are stored
/// encoded, constant term first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format_poly(self, "x"))
    }
}

impl UniPoly {
    pub(crate) fn from_raw(field: &Field, coeffs: Vec<u32>) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: upoly::trim(coeffs),
        }
    }

    pub(crate) fn ar(&self) -> &SmallField {
        self.field.small().expect("checked at construction")
    }

    /// From coefficients, constant term first.
    pub fn new(field: &Field, coeffs: &[FFElement]) -> Result<Self> {
        field.small()?;
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != field {
                return Err(Error::Incompatible(format!("coefficient in {} for a polynomial over {field}", c.field())));
            }
            raw.push(field.encode(c.coords()));
        }
        Ok(Self::from_raw(field, raw))
    }

    /// From prime-field integers, constant term first.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Result<Self> {
        field.small()?;
        let p = field.characteristic() as i64;
        Ok(Self::from_raw(field, coeffs.iter().map(|&c| c.rem_euclid(p) as u32).collect()))
    }

    pub fn zero(field: &Field) -> Result<Self> {
        field.small()?;
        Ok(Self::from_raw(field, Vec::new()))
    }

    /// `c x^e`.
    pub fn monomial(c: &FFElement, e: usize) -> Result<Self> {
        let field = c.field();
        field.small()?;
        let mut raw = vec![0u32; e + 1];
        raw[e] = field.encode(c.coords());
        Ok(Self::from_raw(field, raw))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> Option<usize> {
        upoly::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FFElement {
        let e = self.coeffs.get(i).copied().unwrap_or(0);
        FFElement::from_parts(&self.field, self.field.decode(e))
    }

    pub fn coeffs(&self) -> Vec<FFElement> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading(&self) -> Option<FFElement> {
        self.degree().map(|d| self.coeff(d))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Incompatible(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, upoly::add(self.ar(), &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, upoly::sub(self.ar(), &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, upoly::mul(self.ar(), &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: &FFElement) -> Self {
        let e = self.field.encode(c.coords());
        Self::from_raw(&self.field, upoly::scale(self.ar(), &self.coeffs, e))
    }

    pub fn divrem(&self, other: &Self) -> Result<(Self, Self)> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = upoly::divrem(self.ar(), &self.coeffs, &other.coeffs);
        Ok((Self::from_raw(&self.field, q), Self::from_raw(&self.field, r)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, upoly::gcd(self.ar(), &self.coeffs, &other.coeffs)))
    }

    pub fn monic(&self) -> Self {
        Self::from_raw(&self.field, upoly::monic(self.ar(), &self.coeffs))
    }

    pub fn derivative(&self) -> Self {
        Self::from_raw(&self.field, upoly::derivative(self.ar(), &self.coeffs))
    }

    /// Value at `z`, which may lie in any extension of the coefficient field.
    pub fn eval(&self, z: &FFElement) -> Result<FFElement> {
        let target = z.field();
        let mut acc = FFElement::zero(target);
        for c in self.coeffs().iter().rev() {
            acc = &(&acc * z) + &c.embed(target)?;
        }
        Ok(acc)
    }

    /// The same polynomial over an extension field.
    pub fn embed(&self, target: &Field) -> Result<Self> {
        let cs = self.coeffs().iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Self::new(target, &cs)
    }

    fn nonconstant(&self) -> Result<()> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            _ => Ok(()),
        }
    }

    /// Degrees of the irreducible factors with multiplicity, ascending.
    pub fn factor_degrees(&self) -> Result<Vec<usize>> {
        self.nonconstant()?;
        Ok(factor::factor_degrees(self.ar(), &self.coeffs))
    }

    /// Monic irreducible factors with multiplicities (equal-degree splitting
    /// seeded by `seed`).
    pub fn factor(&self, seed: u64) -> Result<Vec<(UniPoly, usize)>> {
        self.nonconstant()?;
        Ok(factor::factor(self.ar(), &self.coeffs, seed)
            .into_iter()
            .map(|(g, m)| (Self::from_raw(&self.field, g), m))
            .collect())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        self.nonconstant()?;
        Ok(factor::is_irreducible(self.ar(), &self.coeffs))
    }

    /// Least `e` with `f | x^e - 1`.
    pub fn order(&self) -> Result<u128> {
        self.nonconstant()?;
        if self.coeffs[0] == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        if !self.is_irreducible()? {
            return Err(Error::Reducible);
        }
        factor::poly_order(self.ar(), &self.coeffs).ok_or_else(|| Error::FieldTooLarge(self.field.to_string()))
    }

    /// Whether `f` is irreducible with order `|field|^deg - 1`.
    pub fn is_primitive(&self) -> Result<bool> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)? as u32;
        if self.coeffs.first() == Some(&0) || !self.is_irreducible()? {
            return Ok(false);
        }
        let n = (self.ar().size() as u128).checked_pow(d).ok_or_else(|| Error::FieldTooLarge(self.field.to_string()))? - 1;
        Ok(self.order()? == n)
    }
}
