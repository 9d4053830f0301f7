//! Moore matrices of root bases, reconstruction of a q-polynomial from its
//! roots, and the matrix of Frobenius acting on a root space.

use crate::error::{Error, Result};
use crate::ff::elmat::{self, Matrix};
use crate::ff::{coordinates, field_of_order, intnum, FFElement, Field};
use crate::linpoly::{LinearizedPoly, RootSpace};
use crate::report::Check;

/// A basis `α_1..α_n` with `D[i][j] = α_i^(q^j)` and `δ = det D ≠ 0`.
#[derive(Clone, Debug)]
pub struct MooreData {
    pub q: u64,
    pub basis: Vec<FFElement>,
    pub d: Matrix,
    pub delta: FFElement,
}

/// Rows `(α, α^q, ..., α^(q^(cols-1)))`.
fn moore_rows(basis: &[FFElement], q: u64, cols: usize) -> Result<Matrix> {
    let field = basis.first().ok_or_else(|| Error::InvalidArgument("empty basis".into()))?.field();
    let e = intnum::log_exact(q, field.characteristic()).ok_or(Error::NotPowerOfCharacteristic(q, field.characteristic()))?;
    if e == 0 || field.degree() % e != 0 {
        return Err(Error::Incompatible(format!("{field} does not contain GF({q})")));
    }
    if basis.iter().any(|b| b.field() != field) {
        return Err(Error::Incompatible("basis elements in different fields".into()));
    }
    Ok(basis
        .iter()
        .map(|a| {
            let mut row = Vec::with_capacity(cols);
            let mut w = a.clone();
            for _ in 0..cols {
                row.push(w.clone());
                w = w.frobenius_pow(e);
            }
            row
        })
        .collect())
}

/// The Moore determinant, zero exactly on GF(q)-dependent lists.
pub fn moore_determinant(basis: &[FFElement], q: u64) -> Result<FFElement> {
    let d = moore_rows(basis, q, basis.len())?;
    Ok(elmat::det(&d))
}

pub fn moore_delta(basis: &[FFElement], q: u64) -> Result<MooreData> {
    let d = moore_rows(basis, q, basis.len())?;
    let delta = elmat::det(&d);
    if delta.is_zero() {
        return Err(Error::DependentBasis(q));
    }
    Ok(MooreData {
        q,
        basis: basis.to_vec(),
        d,
        delta,
    })
}

/// The monic q-polynomial of q-degree `n` vanishing on the span of the basis:
/// `det A / δ`, where `A` is `D` bordered by the row `(x, x^q, ..., x^(q^n))`
/// and the column of `q^n`-th powers. Expanded along that last row.
pub fn reconstruct_l(md: &MooreData) -> Result<LinearizedPoly> {
    let n = md.basis.len();
    let field = md.delta.field();
    let full = moore_rows(&md.basis, md.q, n + 1)?;
    let dinv = md.delta.inv()?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let minor: Matrix = full
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let m = if n == 0 { FFElement::one(field) } else { elmat::det(&minor) };
        let c = &m * &dinv;
        coeffs.push(if (n + j) % 2 == 1 { c.neg() } else { c });
    }
    LinearizedPoly::new(md.q, field, coeffs)
}

/// Matrix `S` over GF(q) of `σ: z -> z^|F|` on a root basis:
/// `σ(α_i) = sum_j S[i][j] α_j`.
#[derive(Clone, Debug)]
pub struct GaloisMatrix {
    pub s: Matrix,
    /// `|F|`, the power that defines `σ`.
    pub power: u64,
    pub moore: MooreData,
    pub roots: RootSpace,
}

impl GaloisMatrix {
    pub fn det(&self) -> FFElement {
        elmat::det(&self.s)
    }

    /// Order of `S` in GL(n,q).
    pub fn order(&self) -> u64 {
        elmat::order(&self.s, self.roots.splitting_degree.max(1) * 2 + 1).expect("order bounded by the splitting degree")
    }

    /// Whether `S D = σ(D)` entrywise.
    pub fn intertwines(&self) -> Result<bool> {
        let big = &self.roots.big;
        let s_big: Matrix = self.s.iter().map(|r| r.iter().map(|c| c.embed(big)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let lhs = elmat::mul(&s_big, &self.moore.d);
        let kf = self.roots.ground.degree();
        let rhs: Matrix = self.moore.d.iter().map(|r| r.iter().map(|c| c.frobenius_pow(kf)).collect()).collect();
        Ok(lhs == rhs)
    }
}

/// `S_σ` for the root basis found by [`LinearizedPoly::root_space`].
pub fn frobenius_matrix(l: &LinearizedPoly, ground: &Field) -> Result<GaloisMatrix> {
    frobenius_matrix_of(l.root_space(ground, None)?)
}

pub fn frobenius_matrix_of(roots: RootSpace) -> Result<GaloisMatrix> {
    let q = roots.lin.q();
    let gfq = field_of_order(q)?;
    let kf = roots.ground.degree();
    let moore = moore_delta(&roots.basis, q)?;
    let mut s = Vec::with_capacity(roots.basis.len());
    for a in &roots.basis {
        let img = a.frobenius_pow(kf);
        let row = coordinates(&img, &roots.basis, &gfq)?
            .ok_or_else(|| Error::Internal(format!("σ({a}) is outside the root space")))?;
        s.push(row);
    }
    let power = roots.ground.size().expect("ground field is small") as u64;
    let gm = GaloisMatrix { s, power, moore, roots };
    if !gm.intertwines()? {
        return Err(Error::Internal("S D differs from σ(D)".into()));
    }
    Ok(gm)
}

/// Whether the nonzero `c ∈ F` is an `m`-th power in `F^*`.
pub fn is_power_in(c: &FFElement, m: u64) -> Result<bool> {
    let field = c.field();
    let size = field.size().ok_or_else(|| Error::FieldTooLarge(field.to_string()))?;
    if c.is_zero() {
        return Ok(true);
    }
    if size <= crate::ff::AUTO_TABLE_SIZE as u128 {
        return Ok(field.elements()?.iter().filter(|z| !z.is_zero()).any(|z| z.pow(m as u128) == *c));
    }
    Ok(is_power_by_exponent(c, m))
}

fn is_power_by_exponent(c: &FFElement, m: u64) -> bool {
    let n = c.field().size().unwrap() - 1;
    // gcd(m, n) = gcd(m, n mod m)
    let g = intnum::gcd(m, (n % m as u128) as u64);
    c.pow(n / g as u128).is_one()
}

/// The five determinant identities for a monic separable `L` over `ground`,
/// each as a named check carrying δ, δ^(q-1) and det S as values.
pub fn verify_determinant_identities(l: &LinearizedPoly, ground: &Field) -> Result<Vec<Check>> {
    if !l.is_monic() {
        return Err(Error::NotMonic);
    }
    if !l.is_separable() {
        return Err(Error::Inseparable);
    }
    let l = l.embed(ground)?;
    let gm = frobenius_matrix(&l, ground)?;
    let q = l.q();
    let n = l.q_degree().unwrap();
    let big = &gm.roots.big;
    let kf = ground.degree();
    let delta = &gm.moore.delta;
    let dq1 = delta.pow(q as u128 - 1);
    let det_s = gm.det();
    let det_s_big = det_s.embed(big)?;
    let sign = if n % 2 == 1 { -1 } else { 1 };
    let a0 = l.coeff_x();
    let signed_dq1 = if sign < 0 { dq1.neg() } else { dq1.clone() };
    let in_f = |z: &FFElement| z.frobenius_pow(kf) == *z;
    let delta_in_f = in_f(delta);
    let witnesses = |c: Check| {
        c.value("delta", delta)
            .value("delta^(q-1)", &dq1)
            .value("det S", &det_s)
            .value("splitting degree", gm.roots.splitting_degree)
    };
    let mut out = Vec::new();
    out.push(witnesses(Check::new("delta^(q-1) lies in F", in_f(&dq1))));
    out.push(witnesses(Check::new("coefficient of x equals (-1)^n delta^(q-1)", a0.embed(big)? == signed_dq1)).value("coeff_x", &a0));
    let sigma_delta = delta.frobenius_pow(kf);
    out.push(witnesses(Check::new("sigma(delta) = det(S) delta", sigma_delta == &det_s_big * delta)).value("sigma(delta)", &sigma_delta));
    let c = if sign < 0 { a0.neg() } else { a0.clone() };
    let hyp = is_power_in(&c, q - 1)?;
    let det_one = det_s.is_one();
    out.push(
        witnesses(Check::new("coefficient of x a signed (q-1)-th power implies det S = 1", !hyp || det_one))
            .value("hypothesis", hyp)
            .value("(-1)^n coeff_x", &c),
    );
    out.push(witnesses(Check::new("delta in F iff det S = 1", delta_in_f == det_one)).value("delta in F", delta_in_f));
    Ok(out)
}
