//! Text forms of fields, elements and polynomials.
//!
//! Polynomials read and print as `c0 + c1*x + ... + ck*x^k`. Coefficients are
//! integers (reduced into the prime field), powers `g^j` of the field's least
//! primitive element, or raw coordinate vectors `[c0,c1,..]`. Terms may carry
//! the parameter `t` (`t`, `t^j`) where a bivariate form is expected, and
//! exponents may be written `q^i` when a value of `q` is in scope. Fields
//! print as `GF(p^k; modulus)`.

use crate::error::{Error, Result};
use crate::ff::{field_create, intnum, FFElement, Field, UniPoly};

/// One parsed monomial `coeff * t^t_exp * x^x_exp`.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: FFElement,
    pub t_exp: usize,
    pub x_exp: u64,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

fn perr(token: impl Into<String>, expected: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        expected: expected.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[start..i].iter().collect();
            out.push(Tok::Int(s.parse().map_err(|_| perr(s.clone(), "an integer below 2^64"))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*^()[],;".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(perr(c.to_string(), "a polynomial term"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a Field,
    q: Option<u64>,
    allow_t: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Int(n)) => n.to_string(),
            Some(Tok::Ident(s)) => s.clone(),
            Some(Tok::Sym(c)) => c.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.pos -= 1;
                Err(perr(self.here(), "an integer"))
            }
        }
    }

    /// `INT | q` optionally followed by `^ INT`.
    fn exponent(&mut self) -> Result<u64> {
        let base = match self.next() {
            Some(Tok::Int(n)) => n,
            Some(Tok::Ident(s)) if s == "q" => self.q.ok_or_else(|| perr("q", "a numeric exponent (q is not set)"))?,
            _ => {
                self.pos -= 1;
                return Err(perr(self.here(), "an exponent (integer or q^i)"));
            }
        };
        if self.eat('^') {
            let e = self.int()?;
            base.checked_pow(e as u32).ok_or_else(|| perr(format!("{base}^{e}"), "an exponent below 2^64"))
        } else {
            Ok(base)
        }
    }

    fn element(&mut self) -> Result<FFElement> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(FFElement::from_int(self.field, (n % self.field.characteristic()) as i64))
            }
            Some(Tok::Ident(s)) if s == "g" => {
                self.pos += 1;
                let j = if self.eat('^') { self.int()? } else { 1 };
                Ok(self.field.generator()?.pow(j as u128))
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let mut cs = Vec::new();
                if !self.eat(']') {
                    loop {
                        cs.push(self.int()?);
                        if self.eat(']') {
                            break;
                        }
                        if !self.eat(',') {
                            return Err(perr(self.here(), "`,` or `]`"));
                        }
                    }
                }
                FFElement::new(self.field, &cs)
            }
            _ => Err(perr(self.here(), "a field element (integer, g^j or [c0,c1,..])")),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = FFElement::one(self.field);
        let mut t_exp = 0;
        let mut x_exp = 0u64;
        loop {
            match self.peek().cloned() {
                Some(Tok::Ident(s)) if s == "x" => {
                    self.pos += 1;
                    x_exp += if self.eat('^') { self.exponent()? } else { 1 };
                }
                Some(Tok::Ident(s)) if s == "t" => {
                    if !self.allow_t {
                        return Err(perr("t", "a polynomial in x only"));
                    }
                    self.pos += 1;
                    t_exp += if self.eat('^') { self.int()? as usize } else { 1 };
                }
                _ => coeff = &coeff * &self.element()?,
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(Term { coeff, t_exp, x_exp })
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = t.coeff.neg();
            }
            out.push(t);
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(perr(self.here(), "`+`, `-` or end of input"));
        }
        Ok(())
    }
}

/// Monomials of a polynomial expression over `field`.
pub fn parse_terms(src: &str, field: &Field, q: Option<u64>, allow_t: bool) -> Result<Vec<Term>> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        field,
        q,
        allow_t,
    };
    let terms = p.terms()?;
    p.finish()?;
    Ok(terms)
}

pub fn parse_element(src: &str, field: &Field) -> Result<FFElement> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        field,
        q: None,
        allow_t: false,
    };
    let negate = p.eat('-');
    let e = p.element()?;
    p.finish()?;
    Ok(if negate { e.neg() } else { e })
}

/// Comma-separated elements, as in `lin(q; a_0, a_1, ...)`.
pub fn parse_element_list(src: &str, field: &Field) -> Result<Vec<FFElement>> {
    src.split(',').map(|s| parse_element(s.trim(), field)).collect()
}

pub fn parse_poly(src: &str, field: &Field) -> Result<UniPoly> {
    let terms = parse_terms(src, field, None, false)?;
    let deg = terms.iter().map(|t| t.x_exp).max().unwrap_or(0);
    if deg > 1 << 24 {
        return Err(perr(deg.to_string(), "a degree below 2^24"));
    }
    let mut cs = vec![FFElement::zero(field); deg as usize + 1];
    for t in terms {
        cs[t.x_exp as usize] = &cs[t.x_exp as usize] + &t.coeff;
    }
    UniPoly::new(field, &cs)
}

/// `GF(q)`, `GF(p^k)` or `GF(p^k; modulus)`; the modulus, when given, must be
/// the canonical one.
pub fn parse_field(src: &str) -> Result<Field> {
    let s = src.trim();
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(s, "GF(q), GF(p^k) or GF(p^k; modulus)"))?;
    let (size, modulus) = match inner.split_once(';') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (inner.trim(), None),
    };
    let field = match size.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| perr(p, "a prime"))?;
            let k: u32 = k.trim().parse().map_err(|_| perr(k, "a positive degree"))?;
            field_create(p, k)?
        }
        None => {
            let q: u64 = size.parse().map_err(|_| perr(size, "a prime power"))?;
            let (p, k) = intnum::prime_power(q).ok_or(Error::NotPrimePower(q))?;
            field_create(p, k)?
        }
    };
    if let Some(m) = modulus {
        let prime = field_create(field.characteristic(), 1)?;
        let given = parse_poly(m, &prime)?;
        let raw: Vec<u32> = given.coeffs().iter().map(|c| c.coords()[0]).collect();
        if raw != field.modulus() {
            return Err(perr(m, format!("the canonical modulus {}", format_prime_poly(field.modulus(), "x"))));
        }
    }
    Ok(field)
}

pub fn format_element(e: &FFElement) -> String {
    let field = e.field();
    if field.is_prime_field() || e.coords()[1..].iter().all(|&c| c == 0) {
        return e.coords()[0].to_string();
    }
    if field.size().is_some_and(|s| s <= crate::ff::AUTO_TABLE_SIZE as u128) {
        if let Ok(sf) = field.small() {
            let code = field.encode(e.coords());
            if let Some(j) = sf.log(code) {
                return format!("g^{j}");
            }
        }
    }
    let cs: Vec<String> = e.coords().iter().map(|c| c.to_string()).collect();
    format!("[{}]", cs.join(","))
}

fn join_terms(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn monomial(coeff: &str, var: &str, e: u64) -> String {
    let v = match e {
        0 => return coeff.to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    };
    if coeff == "1" {
        v
    } else {
        format!("{coeff}*{v}")
    }
}

/// Prime-field coefficient list in the ascending grammar.
pub fn format_prime_poly(coeffs: &[u32], var: &str) -> String {
    let parts = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| monomial(&c.to_string(), var, i as u64))
        .collect();
    join_terms(parts)
}

pub fn format_poly(f: &UniPoly, var: &str) -> String {
    let parts = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| monomial(&format_element(c), var, i as u64))
        .collect();
    join_terms(parts)
}

/// Sparse `(exponent, coefficient)` list in the ascending grammar.
pub fn format_sparse(terms: &[(u64, FFElement)], var: &str) -> String {
    let parts = terms
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| monomial(&format_element(c), var, *e))
        .collect();
    join_terms(parts)
}
