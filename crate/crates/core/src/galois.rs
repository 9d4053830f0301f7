//! Galois groups of q-polynomials.
//!
//! Over a finite ground field the group is cyclic, generated by the matrix
//! of Frobenius on a root basis. Over `GF(q^m)(t)` the group is probed by
//! specializing `t`: for a separable specialization at a point of
//! `GF(q^(mk))`, the factor-degree pattern of `L_a(x)/x` is the cycle type of
//! an element of the Galois group (a power of a Frobenius element) acting on
//! the nonzero roots. Candidate groups lacking an observed type are ruled
//! out; nothing is ever confirmed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{elmat, field_create, intnum, FFElement, Field};
use crate::groups::{self, closure, GroupSet, GL};
use crate::linpoly::LinearizedPoly;
use crate::moore::{self, GaloisMatrix};
use crate::report::Check;
use crate::syntax;

/// `L = sum a_i(t) x^(q^i)` with each `a_i` a polynomial in `t` over one
/// finite field containing GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateLinPoly {
    q: u64,
    field: Field,
    /// `coeffs[i][j]` is the coefficient of `t^j x^(q^i)`.
    coeffs: Vec<Vec<FFElement>>,
}

impl BivariateLinPoly {
    pub fn new(q: u64, field: &Field, coeffs: Vec<Vec<FFElement>>) -> Result<Self> {
        // validates q against the field
        LinearizedPoly::zero(q, field)?;
        let mut coeffs: Vec<Vec<FFElement>> = coeffs
            .into_iter()
            .map(|mut a| {
                while a.last().is_some_and(|c| c.is_zero()) {
                    a.pop();
                }
                a
            })
            .collect();
        while coeffs.last().is_some_and(|a| a.is_empty()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if coeffs.iter().flatten().any(|c| c.field() != field) {
            return Err(Error::Incompatible(format!("coefficient outside {field}")));
        }
        Ok(BivariateLinPoly {
            q,
            field: field.clone(),
            coeffs,
        })
    }

    /// Terms `c*t^j*x^e` with every `e` a power of `q`.
    pub fn parse(src: &str, q: u64, field: &Field) -> Result<Self> {
        let terms = syntax::parse_terms(src, field, Some(q), true)?;
        let mut coeffs: Vec<Vec<FFElement>> = Vec::new();
        for t in terms {
            let i = intnum::log_exact(t.x_exp, q).ok_or_else(|| Error::Parse {
                token: format!("x^{}", t.x_exp),
                expected: format!("an exponent that is a power of q = {q}"),
            })? as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Vec::new());
            }
            let a = &mut coeffs[i];
            if a.len() <= t.t_exp {
                a.resize(t.t_exp + 1, FFElement::zero(field));
            }
            a[t.t_exp] = &a[t.t_exp] + &t.coeff;
        }
        Self::new(q, field, coeffs)
    }

    /// A polynomial without `t`.
    pub fn constant(l: &LinearizedPoly) -> Result<Self> {
        Self::new(l.q(), l.field(), l.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Vec<FFElement>] {
        &self.coeffs
    }

    /// `L` with `t = a`, or `None` when `a_0(a) = 0` or the q-degree drops.
    pub fn specialize(&self, a: &FFElement) -> Result<Option<LinearizedPoly>> {
        let target = a.field();
        let mut cs = Vec::with_capacity(self.coeffs.len());
        for poly in &self.coeffs {
            let mut acc = FFElement::zero(target);
            for c in poly.iter().rev() {
                acc = &(&acc * a) + &c.embed(target)?;
            }
            cs.push(acc);
        }
        if cs[0].is_zero() || cs.last().unwrap().is_zero() {
            return Ok(None);
        }
        Ok(Some(LinearizedPoly::new(self.q, target, cs)?))
    }
}

impl fmt::Display for BivariateLinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, poly) in self.coeffs.iter().enumerate().rev() {
            let x = match i {
                0 => "x".to_string(),
                1 => "x^q".to_string(),
                _ => format!("x^q^{i}"),
            };
            for (j, c) in poly.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                let cs = syntax::format_element(c);
                if cs != "1" {
                    factors.push(cs);
                }
                match j {
                    0 => {}
                    1 => factors.push("t".into()),
                    _ => factors.push(format!("t^{j}")),
                }
                factors.push(x.clone());
                parts.push(factors.join("*"));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Cycle lengths of a permutation of the nonzero roots, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType(pub Vec<usize>);

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// The cyclic Galois group of `L` over a finite field.
#[derive(Clone, Debug)]
pub struct FiniteGalois {
    pub splitting_degree: u64,
    pub matrix: GaloisMatrix,
    /// Generated by the action of Frobenius on root coordinates (`S^T`).
    pub group: GroupSet,
    pub transitive: bool,
}

pub fn galois_group_finite(l: &LinearizedPoly, ground: &Field) -> Result<FiniteGalois> {
    let matrix = moore::frobenius_matrix(l, ground)?;
    let n = matrix.s.len();
    let gl = GL::new(l.q(), n)?;
    let st: elmat::Matrix = (0..n).map(|i| (0..n).map(|j| matrix.s[j][i].clone()).collect()).collect();
    let gen = gl.from_elements(&st)?;
    let group = closure(&gl, &[gen], matrix.roots.splitting_degree.max(1))?;
    let transitive = groups::orbits(&group).transitive;
    Ok(FiniteGalois {
        splitting_degree: matrix.roots.splitting_degree,
        matrix,
        group,
        transitive,
    })
}

/// Cycle type of `L(x)/x` over the coefficient field of `L`.
pub fn cycle_type(l: &LinearizedPoly) -> Result<CycleType> {
    Ok(CycleType(l.lx()?.factor_degrees()?))
}

/// Cycle types of all elements acting on nonzero vectors. The set is closed
/// under powers because the group is.
pub fn group_cycle_types(g: &GroupSet) -> BTreeSet<CycleType> {
    let gl = &g.gl;
    let total = gl.nonzero_vectors() as usize;
    g.elements
        .iter()
        .map(|a| {
            let mut seen = vec![false; total + 1];
            let mut lens = Vec::new();
            for start in 1..=total {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut v = start;
                while !seen[v] {
                    seen[v] = true;
                    len += 1;
                    v = gl.vector_code(&gl.apply(a, &gl.vector_of(v as u64))) as usize;
                }
                lens.push(len);
            }
            lens.sort();
            CycleType(lens)
        })
        .collect()
}

/// A named candidate group: `Z` (Singer cycle), `GammaL`, `GammaL1`, `SL`
/// or `GL`.
pub fn candidate_group(name: &str, q: u64, n: usize) -> Result<GroupSet> {
    let cap = groups::DEFAULT_ENUM_CAP;
    match name {
        "Z" => {
            let s = groups::singer_cycle(q, n)?;
            closure(&s.gl, &[s.matrix], cap)
        }
        "GammaL" => groups::gamma_l(q, n, false, cap),
        "GammaL1" => groups::gamma_l(q, n, true, cap),
        "SL" | "GL" => {
            let gl = GL::new(q, n)?;
            let sl = gl.sl_elements(cap)?;
            let mut gens = vec![];
            if name == "GL" {
                gens.push(groups::singer_cycle(q, n)?.matrix);
            }
            let base = GroupSet::from_elements(&gl, sl)?;
            gens.extend(base.gens.iter().cloned());
            if name == "SL" {
                Ok(base)
            } else {
                closure(&gl, &gens, gl.gl_order().min(cap as u128 * 64) as u64)
            }
        }
        _ => Err(Error::InvalidArgument(format!("unknown candidate `{name}` (expected Z, GammaL, GammaL1, SL or GL)"))),
    }
}

/// Which specialization points to try.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingPlan {
    /// Every point of `GF(q^(mk))` for `k = 1..=exhaustive_k`.
    pub exhaustive_k: u32,
    /// Then seeded random points for `k = exhaustive_k+1..=random_k`, in turn.
    pub random_k: u32,
    pub max_samples: usize,
    pub seed: u64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        SamplingPlan {
            exhaustive_k: 4,
            random_k: 8,
            max_samples: 500,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    /// Degree of the point field over the coefficient field.
    pub k: u32,
    pub point: String,
    pub cycle_type: CycleType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSet {
    pub accepted: Vec<Sample>,
    /// Points where `a_0` vanished or the q-degree dropped.
    pub rejected: usize,
    pub seed: u64,
}

impl SampleSet {
    pub fn types(&self) -> Vec<CycleType> {
        self.accepted.iter().map(|s| s.cycle_type.clone()).collect()
    }

    pub fn frequencies(&self) -> BTreeMap<CycleType, usize> {
        let mut f = BTreeMap::new();
        for s in &self.accepted {
            *f.entry(s.cycle_type.clone()).or_insert(0) += 1;
        }
        f
    }
}

fn sample_points(lt: &BivariateLinPoly, points: Vec<(u32, FFElement)>) -> Result<Vec<Option<Sample>>> {
    points
        .into_par_iter()
        .map(|(k, a)| {
            Ok(match lt.specialize(&a)? {
                None => None,
                Some(l) => Some(Sample {
                    k,
                    point: syntax::format_element(&a),
                    cycle_type: cycle_type(&l)?,
                }),
            })
        })
        .collect()
}

/// Cycle types at the points of `plan`, in plan order, until
/// `plan.max_samples` are accepted.
pub fn cycle_type_sample(lt: &BivariateLinPoly, plan: &SamplingPlan) -> Result<SampleSet> {
    let p = lt.field.characteristic();
    let m = lt.field.degree();
    let mut accepted = Vec::new();
    let mut rejected = 0;
    let mut absorb = |batch: Vec<Option<Sample>>, accepted: &mut Vec<Sample>| {
        for s in batch {
            if accepted.len() >= plan.max_samples {
                break;
            }
            match s {
                Some(s) => accepted.push(s),
                None => rejected += 1,
            }
        }
    };
    for k in 1..=plan.exhaustive_k {
        if accepted.len() >= plan.max_samples {
            break;
        }
        let field = field_create(p, m * k)?;
        let pts = field.elements()?.into_iter().map(|a| (k, a)).collect();
        absorb(sample_points(lt, pts)?, &mut accepted);
    }
    if plan.random_k > plan.exhaustive_k {
        let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
        let ks: Vec<u32> = (plan.exhaustive_k + 1..=plan.random_k).collect();
        let fields: Vec<Field> = ks.iter().map(|&k| field_create(p, m * k)).collect::<Result<_>>()?;
        let mut attempts = 0;
        while accepted.len() < plan.max_samples && attempts < 4 * plan.max_samples {
            let want = plan.max_samples - accepted.len();
            let pts: Vec<(u32, FFElement)> = (0..want)
                .map(|i| {
                    let j = (attempts + i) % ks.len();
                    (ks[j], fields[j].random_element(&mut rng))
                })
                .collect();
            attempts += want;
            absorb(sample_points(lt, pts)?, &mut accepted);
        }
    }
    if accepted.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(SampleSet {
        accepted,
        rejected,
        seed: plan.seed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Consistent,
    RuledOut { witness: CycleType },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateStatus {
    pub name: String,
    pub order: u64,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub candidates: Vec<CandidateStatus>,
    pub samples: usize,
    pub frequencies: BTreeMap<String, usize>,
}

impl DistinguishReport {
    pub fn consistent(&self) -> Vec<&str> {
        self.candidates.iter().filter(|c| c.status == Status::Consistent).map(|c| c.name.as_str()).collect()
    }

    pub fn ruled_out(&self) -> Vec<&str> {
        self.candidates.iter().filter(|c| c.status != Status::Consistent).map(|c| c.name.as_str()).collect()
    }
}

/// Rules out each candidate missing some observed cycle type; the witness is
/// the least such type.
pub fn distinguish(observed: &[CycleType], candidates: &[(String, GroupSet)]) -> Result<DistinguishReport> {
    if observed.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut freq: BTreeMap<CycleType, usize> = BTreeMap::new();
    for t in observed {
        *freq.entry(t.clone()).or_insert(0) += 1;
    }
    let statuses: Vec<CandidateStatus> = candidates
        .iter()
        .map(|(name, g)| {
            let types = group_cycle_types(g);
            let missing = freq.keys().find(|t| !types.contains(t));
            CandidateStatus {
                name: name.clone(),
                order: g.order(),
                status: match missing {
                    Some(w) => Status::RuledOut { witness: w.clone() },
                    None => Status::Consistent,
                },
            }
        })
        .collect();
    if statuses.iter().all(|s| s.status != Status::Consistent) {
        return Err(Error::AllRuledOut);
    }
    Ok(DistinguishReport {
        candidates: statuses,
        samples: observed.len(),
        frequencies: freq.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

/// `s_P | s_L` and `S^(s_P)` scalar, for the projective polynomial `P` of `L`.
pub fn psl_quotient_check(l: &LinearizedPoly, ground: &Field) -> Result<Vec<Check>> {
    let l = l.embed(ground)?;
    let gm = moore::frobenius_matrix(&l, ground)?;
    let s_l = gm.roots.splitting_degree;
    let p = l.projective()?;
    let s_p = p.poly.factor_degrees()?.into_iter().fold(1u64, |acc, d| intnum::lcm(acc, d as u64));
    let sp_pow = elmat::pow(&gm.s, s_p);
    let scalar = elmat::is_scalar(&sp_pow);
    Ok(vec![
        Check::new("s_P divides s_L", s_l % s_p == 0).value("s_L", s_l).value("s_P", s_p),
        Check::new("S^(s_P) is scalar", scalar)
            .value("S^(s_P)[0][0]", &sp_pow[0][0])
            .value("s_P", s_p),
        Check::new("P(x^(q-1)) x = L(x)", p.identity_holds()?).value("P", &p.poly),
    ])
}

/// Result of scanning monic `L` of q-degree `r` over GF(q) with `a_0 = (-1)^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImpossibilityScan {
    pub scanned: u64,
    pub irreducible: Vec<LinearizedPoly>,
}

pub fn impossibility_scan(q: u64, r: usize) -> Result<ImpossibilityScan> {
    let f = crate::ff::field_of_order(q)?;
    let els = f.elements()?;
    let a0 = FFElement::from_int(&f, if r % 2 == 1 { -1 } else { 1 });
    let total = (q as u128).pow(r as u32 - 1);
    if total > 1 << 20 {
        return Err(Error::CapExceeded {
            what: format!("{total} polynomials"),
            cap: 1 << 20,
        });
    }
    let found: Vec<Option<LinearizedPoly>> = (0..total as u64)
        .into_par_iter()
        .map(|mut code| {
            let mut cs = vec![a0.clone()];
            for _ in 1..r {
                cs.push(els[(code % q) as usize].clone());
                code /= q;
            }
            cs.push(FFElement::one(&f));
            let l = LinearizedPoly::new(q, &f, cs)?;
            Ok(l.lx_irreducible(&f)?.then_some(l))
        })
        .collect::<Result<_>>()?;
    Ok(ImpossibilityScan {
        scanned: total as u64,
        irreducible: found.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{field_create, field_of_order, UniPoly};

    fn ct(v: &[usize]) -> CycleType {
        CycleType(v.to_vec())
    }

    #[test]
    fn specialization_examples() {
        let f2 = field_create(2, 1).unwrap();
        let lt = BivariateLinPoly::parse("x^8 + t*x", 2, &f2).unwrap();
        let one = FFElement::one(&f2);
        assert_eq!(lt.specialize(&one).unwrap().unwrap(), LinearizedPoly::parse("x^8 + x", 2, &f2).unwrap());
        assert_eq!(lt.specialize(&FFElement::zero(&f2)).unwrap(), None);
        let lt = BivariateLinPoly::parse("x^8 + x^2 + t*x", 2, &f2).unwrap();
        let f8 = field_create(2, 3).unwrap();
        let b = f8.x();
        let l = lt.specialize(&b).unwrap().unwrap();
        assert_eq!(l.coeff_x(), b);
        assert_eq!(l.field(), &f8);
        // a t-dependent leading coefficient can drop the degree
        let lt = BivariateLinPoly::parse("t*x^4 + x", 2, &f2).unwrap();
        assert_eq!(lt.specialize(&FFElement::zero(&f2)).unwrap(), None);
        assert_eq!(lt.to_string(), "t*x^q^2 + x");
    }

    #[test]
    fn finite_groups() {
        let f2 = field_create(2, 1).unwrap();
        for q in [2u64, 3, 4] {
            let fq = field_of_order(q).unwrap();
            let g = galois_group_finite(&LinearizedPoly::parse("x^q - x", q, &fq).unwrap(), &fq).unwrap();
            assert_eq!((g.splitting_degree, g.group.order()), (1, 1));
        }
        let g = galois_group_finite(&LinearizedPoly::parse("x^8 + x^2 + x", 2, &f2).unwrap(), &f2).unwrap();
        assert_eq!(g.group.order(), 7);
        assert!(g.transitive);
        let a = UniPoly::from_ints(&f2, &[1, 0, 1, 0, 0, 1]).unwrap();
        assert!(a.is_primitive().unwrap());
        let l = LinearizedPoly::from_associate(&a, 2).unwrap();
        let g = galois_group_finite(&l, &f2).unwrap();
        assert_eq!(g.group.order(), 31);
        assert!(g.transitive);
        // not transitive exactly when L/x is reducible
        let l = LinearizedPoly::parse("x^8 + x", 2, &f2).unwrap();
        let g = galois_group_finite(&l, &f2).unwrap();
        assert_eq!(g.transitive, l.lx_irreducible(&f2).unwrap());
        assert!(!g.transitive);
    }

    #[test]
    fn group_type_sets() {
        let z = candidate_group("Z", 2, 3).unwrap();
        assert_eq!(group_cycle_types(&z), BTreeSet::from([ct(&[7]), ct(&[1; 7])]));
        let gl = candidate_group("GammaL", 2, 3).unwrap();
        assert_eq!(group_cycle_types(&gl), BTreeSet::from([ct(&[7]), ct(&[1; 7]), ct(&[1, 3, 3])]));
        let sl = candidate_group("SL", 2, 3).unwrap();
        let types = group_cycle_types(&sl);
        assert!(types.contains(&ct(&[1, 1, 1, 2, 2])) && types.contains(&ct(&[1, 2, 4])));
        assert_eq!(candidate_group("GL", 3, 2).unwrap().order(), 48);
        assert!(candidate_group("nope", 2, 3).is_err());
    }

    #[test]
    fn distinguishing() {
        let cands: Vec<(String, GroupSet)> = ["Z", "GammaL", "SL"].iter().map(|n| (n.to_string(), candidate_group(n, 2, 3).unwrap())).collect();
        let r = distinguish(&[ct(&[1; 7])], &cands).unwrap();
        assert!(r.ruled_out().is_empty());
        let r = distinguish(&[ct(&[7]), ct(&[1, 3, 3])], &cands).unwrap();
        assert_eq!(r.ruled_out(), vec!["Z"]);
        assert_eq!(r.candidates[0].status, Status::RuledOut { witness: ct(&[1, 3, 3]) });
        assert_eq!(distinguish(&[ct(&[1, 6])], &cands), Err(Error::AllRuledOut));
        assert_eq!(distinguish(&[], &cands), Err(Error::EmptySample));
    }

    #[test]
    fn constant_polynomials_sample_their_frobenius() {
        let f2 = field_create(2, 1).unwrap();
        let l = LinearizedPoly::parse("x^8 + x^2 + x", 2, &f2).unwrap();
        let lt = BivariateLinPoly::constant(&l).unwrap();
        let plan = SamplingPlan {
            exhaustive_k: 2,
            random_k: 4,
            max_samples: 40,
            seed: 1,
        };
        let s = cycle_type_sample(&lt, &plan).unwrap();
        assert_eq!(s.accepted.len(), 40);
        let g = galois_group_finite(&l, &f2).unwrap();
        let s_mat = g.group.gens[0].clone();
        for smp in &s.accepted {
            // over GF(2^k) the Frobenius is the k-th power of the base one
            let pw = g.group.gl.pow(&s_mat, smp.k as u64);
            let h = closure(&g.group.gl, &[pw], 100).unwrap();
            let want = group_cycle_types(&GroupSet {
                elements: vec![h.gens[0].clone()],
                ..h.clone()
            });
            assert_eq!(want.into_iter().next().unwrap(), smp.cycle_type);
        }
    }

    #[test]
    fn quotient_checks() {
        let f2 = field_create(2, 1).unwrap();
        let checks = psl_quotient_check(&LinearizedPoly::parse("x^8 + x^2 + x", 2, &f2).unwrap(), &f2).unwrap();
        assert!(checks.iter().all(|c| c.pass));
        assert_eq!(checks[0].values["s_P"], checks[0].values["s_L"]);
        // x^9 + b x^3 + x: L/x is never irreducible over GF(3) or GF(9), so
        // the check runs on every b; S^(s_P) must be +-I
        for k in [1u32, 2] {
            let f = field_create(3, k).unwrap();
            for b in f.elements().unwrap() {
                let l = LinearizedPoly::new(3, &f, vec![FFElement::one(&f), b, FFElement::one(&f)]).unwrap();
                assert!(!l.lx_irreducible(&f).unwrap());
                let checks = psl_quotient_check(&l, &f).unwrap();
                assert!(checks.iter().all(|c| c.pass), "{l}: {checks:?}");
                assert!(["1", "2"].contains(&checks[1].values["S^(s_P)[0][0]"].as_str()));
            }
        }
        let f4 = field_create(2, 2).unwrap();
        let checks = psl_quotient_check(&LinearizedPoly::parse("x^q^2 - x", 2, &f4).unwrap(), &f4).unwrap();
        assert_eq!((checks[0].values["s_L"].as_str(), checks[0].values["s_P"].as_str()), ("1", "1"));
    }

    #[test]
    fn small_impossibility_scan() {
        let s = impossibility_scan(3, 3).unwrap();
        assert_eq!(s.scanned, 9);
        assert!(s.irreducible.is_empty());
    }
}
