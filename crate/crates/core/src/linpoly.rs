//! q-polynomials `a_0 x + a_1 x^q + ... + a_n x^(q^n)` over finite fields.

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{field_create, field_of_order, intnum, FFElement, Field, UniPoly};
use crate::moore;
use crate::syntax;

/// A q-polynomial with coefficients `a_0..a_n` in one field containing GF(q).
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    q: u64,
    field: Field,
    coeffs: Vec<FFElement>,
}

impl fmt::Debug for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Descending form `a_n*x^q^n + ... + a_1*x^q + a_0*x`.
impl fmt::Display for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => "x".to_string(),
                1 => "x^q".to_string(),
                _ => format!("x^q^{i}"),
            };
            let cs = syntax::format_element(c);
            parts.push(if cs == "1" { mono } else { format!("{cs}*{mono}") });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn check_q(q: u64, field: &Field) -> Result<u32> {
    let e = intnum::log_exact(q, field.characteristic()).ok_or(Error::NotPowerOfCharacteristic(q, field.characteristic()))?;
    if e == 0 || field.degree() % e != 0 {
        return Err(Error::Incompatible(format!("{field} does not contain GF({q})")));
    }
    Ok(e)
}

impl LinearizedPoly {
    /// From `a_0..a_n`; trailing zero coefficients are dropped.
    pub fn new(q: u64, field: &Field, coeffs: Vec<FFElement>) -> Result<Self> {
        check_q(q, field)?;
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::Incompatible(format!("coefficient in {} for {field}", c.field())));
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(LinearizedPoly {
            q,
            field: field.clone(),
            coeffs,
        })
    }

    pub fn from_ints(q: u64, field: &Field, coeffs: &[i64]) -> Result<Self> {
        Self::new(q, field, coeffs.iter().map(|&c| FFElement::from_int(field, c)).collect())
    }

    pub fn zero(q: u64, field: &Field) -> Result<Self> {
        Self::new(q, field, Vec::new())
    }

    /// `x^(q^i)`.
    pub fn monomial(q: u64, field: &Field, i: usize) -> Result<Self> {
        let mut cs = vec![FFElement::zero(field); i + 1];
        cs[i] = FFElement::one(field);
        Self::new(q, field, cs)
    }

    /// Parses `lin(q; a_0, ..., a_n)` or a sum of terms whose exponents are
    /// powers of `q` (written numerically or as `q^i`).
    pub fn parse(src: &str, q: u64, field: &Field) -> Result<Self> {
        let s = src.trim();
        if let Some(body) = s.strip_prefix("lin(").and_then(|r| r.strip_suffix(')')) {
            let (qs, rest) = body.split_once(';').ok_or_else(|| Error::Parse {
                token: s.into(),
                expected: "lin(q; a_0, a_1, ..., a_n)".into(),
            })?;
            let q2: u64 = qs.trim().parse().map_err(|_| Error::Parse {
                token: qs.trim().into(),
                expected: "an integer q".into(),
            })?;
            if q2 != q {
                return Err(Error::Parse {
                    token: qs.trim().into(),
                    expected: format!("q = {q}"),
                });
            }
            return Self::new(q, field, syntax::parse_element_list(rest, field)?);
        }
        check_q(q, field)?;
        let terms = syntax::parse_terms(s, field, Some(q), false)?;
        let mut coeffs: Vec<FFElement> = Vec::new();
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            let i = intnum::log_exact(t.x_exp, q).ok_or_else(|| Error::Parse {
                token: format!("x^{}", t.x_exp),
                expected: format!("an exponent that is a power of q = {q}"),
            })? as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, FFElement::zero(field));
            }
            coeffs[i] = &coeffs[i] + &t.coeff;
        }
        Self::new(q, field, coeffs)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FFElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The `n` of the leading term `x^(q^n)`.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn nonzero_degree(&self) -> Result<usize> {
        self.q_degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn coeff(&self, i: usize) -> FFElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FFElement::zero(&self.field))
    }

    /// Coefficient of `x`, i.e. `a_0`.
    pub fn coeff_x(&self) -> FFElement {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_separable(&self) -> bool {
        !self.coeff_x().is_zero()
    }

    /// The ordinary degree `q^n`.
    pub fn degree(&self) -> Option<u64> {
        self.q_degree().map(|n| self.q.pow(n as u32))
    }

    /// Same polynomial over an extension of the coefficient field.
    pub fn embed(&self, target: &Field) -> Result<Self> {
        let cs = self.coeffs.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Self::new(self.q, target, cs)
    }

    /// `sum a_i z^(q^i)`, with `z` in any field containing the coefficients.
    pub fn eval(&self, z: &FFElement) -> Result<FFElement> {
        let target = z.field();
        let e = check_q(self.q, &self.field)?;
        let mut acc = FFElement::zero(target);
        let mut w = z.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                w = w.frobenius_pow(e);
            }
            if !a.is_zero() {
                acc = &acc + &(&a.embed(target)? * &w);
            }
        }
        Ok(acc)
    }

    /// Symbolic composition `self(other(x))`; fields must be nested.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::Incompatible(format!("q = {} vs q = {}", self.q, other.q)));
        }
        let field = if self.field.degree() >= other.field.degree() { &self.field } else { &other.field };
        let a = self.embed(field)?;
        let b = other.embed(field)?;
        if a.is_zero() || b.is_zero() {
            return Self::zero(self.q, field);
        }
        let e = check_q(self.q, field)?;
        let mut out = vec![FFElement::zero(field); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            for (j, bj) in b.coeffs.iter().enumerate() {
                // a_i (b_j x^(q^j))^(q^i) = a_i b_j^(q^i) x^(q^(i+j))
                let term = ai * &bj.frobenius_pow(e * i as u32);
                out[i + j] = &out[i + j] + &term;
            }
        }
        Self::new(self.q, field, out)
    }

    /// `sum a_i x^(q^i)` from `a = sum a_i x^i` over GF(q).
    pub fn from_associate(a: &UniPoly, q: u64) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if a.field().size() != Some(q as u128) {
            return Err(Error::Incompatible(format!("associate must lie over GF({q}), not {}", a.field())));
        }
        Self::new(q, a.field(), a.coeffs())
    }

    /// The ordinary polynomial over GF(q) whose q-associate is `self`.
    pub fn associate(&self) -> Result<UniPoly> {
        let gfq = field_of_order(self.q)?;
        let mut cs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            cs.push(c.restrict(&gfq)?.ok_or_else(|| Error::OutsideSubfield(c.to_string(), self.q))?);
        }
        UniPoly::new(&gfq, &cs)
    }

    /// `L` as an ordinary polynomial of degree `q^n`.
    pub fn to_unipoly(&self) -> Result<UniPoly> {
        let n = self.nonzero_degree()?;
        let mut cs = vec![FFElement::zero(&self.field); self.q.pow(n as u32) as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[self.q.pow(i as u32) as usize] = c.clone();
        }
        UniPoly::new(&self.field, &cs)
    }

    /// `L(x)/x`, of degree `q^n - 1`.
    pub fn lx(&self) -> Result<UniPoly> {
        let n = self.nonzero_degree()?;
        let mut cs = vec![FFElement::zero(&self.field); self.q.pow(n as u32) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[self.q.pow(i as u32) as usize - 1] = c.clone();
        }
        UniPoly::new(&self.field, &cs)
    }

    /// The projective polynomial `P` with `P(x^(q-1)) x = L(x)`.
    pub fn projective(&self) -> Result<ProjectivePoly> {
        self.nonzero_degree()?;
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut cs = vec![FFElement::zero(&self.field); 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            // (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1)
            let d = (0..i as u32).map(|j| self.q.pow(j)).sum::<u64>() as usize;
            if cs.len() <= d {
                cs.resize(d + 1, FFElement::zero(&self.field));
            }
            cs[d] = c.clone();
        }
        Ok(ProjectivePoly {
            poly: UniPoly::new(&self.field, &cs)?,
            source: self.clone(),
        })
    }

    /// Whether `L(x)/x` is irreducible over `ground`.
    pub fn lx_irreducible(&self, ground: &Field) -> Result<bool> {
        if !self.is_separable() {
            return Err(Error::Inseparable);
        }
        let l = self.embed(ground)?;
        let degs = l.lx()?.factor_degrees()?;
        Ok(degs.len() == 1)
    }

    /// Degree of the splitting field of `L` over `ground`: lcm of the factor
    /// degrees of `L(x)/x`.
    pub fn splitting_degree(&self, ground: &Field) -> Result<u64> {
        if !self.is_separable() {
            return Err(Error::Inseparable);
        }
        let l = self.embed(ground)?;
        Ok(l.lx()?.factor_degrees()?.into_iter().fold(1, |acc, d| intnum::lcm(acc, d as u64)))
    }

    /// The GF(q)-space of roots, found inside the splitting field.
    pub fn root_space(&self, ground: &Field, cap: Option<u64>) -> Result<RootSpace> {
        let n = self.nonzero_degree()?;
        if !self.is_separable() {
            return Err(Error::Inseparable);
        }
        let cap = cap.unwrap_or(self.q.pow(n as u32) - 1);
        let s = self.splitting_degree(ground)?;
        if s > cap {
            return Err(Error::CapExceeded {
                what: format!("splitting degree {s}"),
                cap,
            });
        }
        let l = self.embed(ground)?;
        let big = field_create(ground.characteristic(), ground.degree() * s as u32)?;
        let basis = l.kernel_basis(&big)?;
        Ok(RootSpace {
            lin: l,
            ground: ground.clone(),
            splitting_degree: s,
            big,
            basis,
        })
    }

    /// GF(q)-basis of `{z in big : L(z) = 0}`, greedily extracted from a
    /// GF(p)-kernel basis using the Moore criterion.
    pub(crate) fn kernel_basis(&self, big: &Field) -> Result<Vec<FFElement>> {
        let e = check_q(self.q, &self.field)?;
        let n = self.nonzero_degree()?;
        let k = big.degree() as usize;
        let coeffs = self.coeffs.iter().map(|c| c.embed(big)).collect::<Result<Vec<_>>>()?;
        // xi_i = x^(q^i); image of x^j is sum_i a_i xi_i^j
        let x = big.x();
        let xis: Vec<FFElement> = (0..=n).map(|i| x.frobenius_pow(e * i as u32)).collect();
        let mut cur: Vec<FFElement> = vec![FFElement::one(big); n + 1];
        let mut rows = vec![vec![0u32; k]; k];
        for j in 0..k {
            let mut img = FFElement::zero(big);
            for i in 0..=n {
                if !coeffs[i].is_zero() {
                    img = &img + &(&coeffs[i] * &cur[i]);
                }
            }
            for (r, &c) in img.coords().iter().enumerate() {
                rows[r][j] = c;
            }
            for i in 0..=n {
                cur[i] = &cur[i] * &xis[i];
            }
        }
        let ar = big.prime_arith();
        let ker = crate::ff::linalg::kernel(&ar, &rows, k);
        if ker.len() != e as usize * n {
            return Err(Error::Internal(format!(
                "root space has GF(p)-dimension {} in {big}, expected {}",
                ker.len(),
                e as usize * n
            )));
        }
        let mut basis: Vec<FFElement> = Vec::with_capacity(n);
        for v in ker {
            let z = FFElement::new(big, &v.iter().map(|&c| c as u64).collect::<Vec<_>>())?;
            let mut trial = basis.clone();
            trial.push(z);
            if !moore::moore_determinant(&trial, self.q)?.is_zero() {
                basis = trial;
                if basis.len() == n {
                    break;
                }
            }
        }
        Ok(basis)
    }

    /// Checks the hypotheses of the `f + t g` family and, when they hold,
    /// certifies irreducibility of `(f + t g)/x` over `E(t)`.
    pub fn verify_family(f: &Self, g: &Self) -> Result<FamilyCheck> {
        if f.q != g.q {
            return Err(Error::Incompatible(format!("q = {} vs q = {}", f.q, g.q)));
        }
        if f.field != g.field {
            return Err(Error::Incompatible(format!("{} vs {}", f.field, g.field)));
        }
        let mut violations = Vec::new();
        if !f.is_monic() {
            violations.push("f monic".to_string());
        }
        let r = f.q_degree().unwrap_or(0);
        if !(r > 2 && intnum::is_prime(r as u64)) {
            violations.push(format!("q-degree of f is an odd prime (got {r})"));
        }
        if f.coeff_x() != FFElement::from_int(&f.field, -1) {
            violations.push(format!("coefficient of x in f equals -1 (got {})", f.coeff_x()));
        }
        if g.is_zero() {
            violations.push("g nonzero".to_string());
        } else {
            if g.q_degree().unwrap() >= r {
                violations.push(format!("q-degree of g below {r} (got {})", g.q_degree().unwrap()));
            }
            if !g.coeff_x().is_zero() {
                violations.push(format!("coefficient of x in g equals 0 (got {})", g.coeff_x()));
            }
        }
        let mut gcd_degree = None;
        if !f.is_zero() && !g.is_zero() {
            let gcd = f.lx()?.gcd(&g.lx()?)?;
            let d = gcd.degree().unwrap_or(0);
            gcd_degree = Some(d);
            if d != 0 {
                violations.push(format!("f/x and g/x coprime (gcd {gcd})"));
            }
        }
        if !violations.is_empty() {
            return Ok(FamilyCheck::Violations(violations));
        }
        let lx_degree = f.lx()?.degree().unwrap();
        Ok(FamilyCheck::Certified(FamilyCertificate {
            q: f.q,
            r,
            lx_degree,
            degree_in_t: 1,
            gcd_degree: gcd_degree.unwrap_or(0),
            argument: format!(
                "(f + t g)/x = f/x + t g/x has degree 1 in t with coprime coefficients, so it is irreducible in E[x][t]; \
                 it is monic of degree {lx_degree} in x, hence primitive over E[t] and irreducible over E(t)"
            ),
        }))
    }
}

/// Outcome of the `f + t g` hypothesis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyCheck {
    Certified(FamilyCertificate),
    Violations(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCertificate {
    pub q: u64,
    /// q-degree of `f`.
    pub r: usize,
    /// Degree of `(f + t g)/x` in `x`.
    pub lx_degree: usize,
    pub degree_in_t: usize,
    pub gcd_degree: usize,
    pub argument: String,
}

/// `P` with `P(x^(q-1)) x = L(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoly {
    pub poly: UniPoly,
    pub source: LinearizedPoly,
}

impl ProjectivePoly {
    /// Checks `P(x^(q-1)) x = L(x)` coefficientwise.
    pub fn identity_holds(&self) -> Result<bool> {
        let q1 = self.source.q as usize - 1;
        let field = self.poly.field();
        let deg = self.poly.degree().unwrap_or(0) * q1 + 1;
        let mut cs = vec![FFElement::zero(field); deg + 1];
        for (j, c) in self.poly.coeffs().into_iter().enumerate() {
            cs[j * q1 + 1] = c;
        }
        Ok(UniPoly::new(field, &cs)? == self.source.to_unipoly()?)
    }
}

/// Roots of a separable q-polynomial: splitting degree `s` over the ground
/// field GF(q^m), and a GF(q)-basis of the roots in GF(q^(m s)).
#[derive(Clone, Debug)]
pub struct RootSpace {
    /// The polynomial, over the ground field.
    pub lin: LinearizedPoly,
    pub ground: Field,
    pub splitting_degree: u64,
    pub big: Field,
    pub basis: Vec<FFElement>,
}

impl RootSpace {
    /// Every element of the GF(q)-span of the basis.
    pub fn span(&self) -> Result<Vec<FFElement>> {
        let gfq = field_of_order(self.lin.q)?;
        let scalars: Vec<FFElement> = gfq.elements()?.iter().map(|c| c.embed(&self.big)).collect::<Result<_>>()?;
        let mut out = vec![FFElement::zero(&self.big)];
        for b in &self.basis {
            let mut next = Vec::with_capacity(out.len() * scalars.len());
            for z in &out {
                for c in &scalars {
                    next.push(z + &(c * b));
                }
            }
            out = next;
        }
        Ok(out)
    }
}
