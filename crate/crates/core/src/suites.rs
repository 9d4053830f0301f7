//! Named check suites, runnable from the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::ff::{field_create, field_of_order, intnum, FFElement, Field, UniPoly};
use crate::galois::{self, BivariateLinPoly, SamplingPlan};
use crate::groups::{self, ClassifyMode};
use crate::linpoly::LinearizedPoly;
use crate::moore;
use crate::report::Check;

pub const SUITES: &[&str] = &[
    "moore",
    "roundtrip",
    "orders",
    "transitivity",
    "sl32",
    "exceptional",
    "singer",
    "distinguish",
    "impossibility",
    "projective",
];

/// One member of the random test suite.
#[derive(Clone, Debug)]
pub struct SuiteCase {
    pub lin: LinearizedPoly,
    pub ground: Field,
    /// A random polynomial over GF(q) of degree `n`, for associate round trips.
    pub associate: UniPoly,
}

/// `count` seeded random monic separable q-polynomials: q in {2,3,4,5},
/// q-degree n in {1,2,3}, ground field GF(q^m) with m in {1,2,3}.
pub fn random_suite(seed: u64, count: usize) -> Result<Vec<SuiteCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let q = [2u64, 3, 4, 5][rng.gen_range(0..4)];
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3u32);
        let (p, e) = intnum::prime_power(q).unwrap();
        let ground = field_create(p, e * m)?;
        let mut cs = Vec::with_capacity(n + 1);
        loop {
            let a0 = ground.random_element(&mut rng);
            if !a0.is_zero() {
                cs.push(a0);
                break;
            }
        }
        for _ in 1..n {
            cs.push(ground.random_element(&mut rng));
        }
        cs.push(FFElement::one(&ground));
        let gfq = field_of_order(q)?;
        let mut acs: Vec<FFElement> = (0..n).map(|_| gfq.random_element(&mut rng)).collect();
        acs.push(FFElement::one(&gfq));
        out.push(SuiteCase {
            lin: LinearizedPoly::new(q, &ground, cs)?,
            ground,
            associate: UniPoly::new(&gfq, &acs)?,
        });
    }
    Ok(out)
}

fn label(c: &SuiteCase) -> String {
    format!("q={} F={} L={}", c.lin.q(), c.ground, c.lin)
}

/// Runs a named suite; `None` for an unknown name.
pub fn run(name: &str, seed: u64) -> Option<Result<Vec<Check>>> {
    Some(match name {
        "moore" => moore_suite(seed),
        "roundtrip" => roundtrip_suite(seed),
        "orders" => orders_suite(),
        "transitivity" => transitivity_suite(),
        "sl32" => sl32_suite(),
        "exceptional" => exceptional_suite(),
        "singer" => singer_suite(),
        "distinguish" => distinguish_suite(seed),
        "impossibility" => impossibility_suite(),
        "projective" => projective_suite(seed),
        _ => return None,
    })
}

const SUITE_SIZE: usize = 200;

fn moore_suite(seed: u64) -> Result<Vec<Check>> {
    let cases = random_suite(seed, SUITE_SIZE)?;
    let results: Vec<Result<Vec<Check>>> = cases.par_iter().map(|c| moore::verify_determinant_identities(&c.lin, &c.ground)).collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    for (c, r) in cases.iter().zip(results) {
        for ch in r? {
            checks += 1;
            if !ch.pass {
                failures.push(format!("{}: {}", label(c), ch.name));
            }
        }
    }
    let mut ch = Check::new("five determinant identities on the random suite", failures.is_empty())
        .value("polynomials", cases.len())
        .value("checks", checks);
    if let Some(f) = failures.first() {
        ch = ch.witness(f.clone());
    }
    Ok(vec![ch])
}

fn roundtrip_suite(seed: u64) -> Result<Vec<Check>> {
    let cases = random_suite(seed, SUITE_SIZE)?;
    let bad: Vec<Option<String>> = cases
        .par_iter()
        .map(|c| {
            let rs = c.lin.root_space(&c.ground, None)?;
            let back = moore::reconstruct_l(&moore::moore_delta(&rs.basis, c.lin.q())?)?;
            if back != c.lin.embed(&rs.big)? {
                return Ok(Some(format!("reconstruct: {}", label(c))));
            }
            let lin = LinearizedPoly::from_associate(&c.associate, c.lin.q())?;
            if lin.associate()? != c.associate {
                return Ok(Some(format!("associate: {}", c.associate)));
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    let mut ch = Check::new("reconstruct_L(root_space(L)) = L and associate round trips", bad.is_empty()).value("polynomials", cases.len());
    if let Some(w) = bad.first() {
        ch = ch.witness(w.clone());
    }
    Ok(vec![ch])
}

const ORDER_CASES: [(u64, usize); 5] = [(2, 3), (3, 3), (4, 3), (5, 3), (2, 5)];

fn orders_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (q, n) in ORDER_CASES {
        let (full, sl) = groups::gamma_l_orders(q, n);
        let g = groups::gamma_l(q, n, false, groups::DEFAULT_ENUM_CAP)?;
        let g1 = g.sl_part()?;
        out.push(
            Check::new(format!("|GammaL(1,{q}^{n})| = n(q^n-1) and |GammaL1| = n(q^n-1)/(q-1)"), g.order() == full && g1.order() == sl)
                .value("GammaL", g.order())
                .value("GammaL1", g1.order())
                .value("expected GammaL", full)
                .value("expected GammaL1", sl),
        );
    }
    Ok(out)
}

fn transitivity_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (q, n) in ORDER_CASES {
        let g1 = groups::gamma_l(q, n, true, groups::DEFAULT_ENUM_CAP)?;
        let t = groups::orbits(&g1).transitive;
        out.push(Check::new(format!("GammaL1(1,{q}^{n}) transitive iff q = 2"), t == (q == 2)).value("transitive", t));
    }
    Ok(out)
}

fn sl32_suite() -> Result<Vec<Check>> {
    let c = groups::classify_transitive_subgroups(2, 3, ClassifyMode::Exhaustive, groups::DEFAULT_ENUM_CAP, groups::DEFAULT_CLOSURE_CAP, 0, 0)?;
    let orders = c.orders();
    let normal = orders == [7, 21, 168] && c.has_normal_conjugate(0, 1)?;
    Ok(vec![
        Check::new("transitive subgroups of SL(3,2): orders 7, 21, 168", orders == [7, 21, 168]).value("orders", format!("{orders:?}")),
        Check::new("order-7 class normal of index 3 in the order-21 class", normal),
    ])
}

fn exceptional_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let run = |q: u64, mode: ClassifyMode, samples: u64| groups::classify_transitive_subgroups(q, 2, mode, groups::DEFAULT_ENUM_CAP, groups::DEFAULT_CLOSURE_CAP, 0, samples);
    let c2 = run(2, ClassifyMode::Exhaustive, 0)?;
    out.push(Check::new("q=2: transitive classes of orders 3 and 6", c2.orders() == [3, 6]).value("orders", format!("{:?}", c2.orders())));
    let c3 = run(3, ClassifyMode::Exhaustive, 0)?;
    let q8 = c3.classes.first().map(|c| (c.fingerprint.order, c.fingerprint.involutions));
    out.push(Check::new("q=3: Q8 (one involution) and SL(2,3)", c3.orders() == [8, 24] && q8 == Some((8, 1))).value("orders", format!("{:?}", c3.orders())));
    for (q, order) in [(5u64, 24u64), (7, 48)] {
        let c = run(q, ClassifyMode::Exhaustive, 0)?;
        let hit = c.classes.iter().any(|k| k.fingerprint.order == order && k.fingerprint.involutions == 1);
        out.push(Check::new(format!("q={q}: transitive subgroup of order {order} with one involution"), hit).value("orders", format!("{:?}", c.orders())));
    }
    let c11 = run(11, ClassifyMode::Randomized, 2000)?;
    let allowed = [1u64, 2, 3, 4, 5, 6, 10];
    let hit = c11
        .classes
        .iter()
        .any(|k| k.fingerprint.order == 120 && k.fingerprint.involutions == 1 && k.fingerprint.histogram.keys().all(|o| allowed.contains(o)));
    out.push(
        Check::new("q=11 (randomized, up to fingerprint): order-120 subgroup with one involution, orders in {1,2,3,4,5,6,10}", hit)
            .value("orders", format!("{:?}", c11.orders())),
    );
    Ok(out)
}

fn singer_suite() -> Result<Vec<Check>> {
    let f2 = field_create(2, 1)?;
    let mut out = Vec::new();
    for r in [3usize, 5, 7] {
        // least primitive polynomial of degree r over GF(2)
        let a = (0u64..1 << r)
            .map(|c| {
                let mut cs: Vec<i64> = (0..r).map(|i| ((c >> i) & 1) as i64).collect();
                cs.push(1);
                UniPoly::from_ints(&f2, &cs).unwrap()
            })
            .find(|a| a.is_primitive().unwrap_or(false))
            .expect("primitive polynomials exist");
        let l = LinearizedPoly::from_associate(&a, 2)?;
        let degs = l.lx()?.factor_degrees()?;
        let g = galois::galois_group_finite(&l, &f2)?;
        let singer = groups::singer_cycle(2, r)?;
        let z = groups::closure(&singer.gl, &[singer.matrix], groups::DEFAULT_ENUM_CAP)?;
        let expected = (1u64 << r) - 1;
        let same_types = galois::group_cycle_types(&g.group) == galois::group_cycle_types(&z);
        out.push(
            Check::new(format!("r={r}: L/x irreducible, Galois group cyclic of order 2^r-1 acting as a Singer cycle"), degs == [expected as usize] && g.group.order() == expected && g.transitive && same_types)
                .value("a", &a)
                .value("factor degrees", format!("{degs:?}"))
                .value("order", g.group.order()),
        );
    }
    Ok(out)
}

/// Candidate sets and expectations for the function-field examples.
pub const DISTINGUISH_CASES: [(&str, u64, usize, &[&str], &[&str]); 3] = [
    ("x^8 + x^2 + t*x", 2, 3, &["Z", "GammaL", "SL"], &["SL"]),
    ("x^8 + t*x", 2, 3, &["Z", "GammaL", "SL"], &["GammaL", "SL"]),
    ("x^4 + t*x^2 + x", 2, 2, &["Z", "SL"], &["SL"]),
];

fn distinguish_suite(seed: u64) -> Result<Vec<Check>> {
    let f2 = field_create(2, 1)?;
    let mut out = Vec::new();
    for (src, q, n, cands, expect) in DISTINGUISH_CASES {
        let lt = BivariateLinPoly::parse(src, q, &f2)?;
        let s = galois::cycle_type_sample(&lt, &SamplingPlan { seed, ..SamplingPlan::default() })?;
        let groups: Vec<(String, groups::GroupSet)> = cands.iter().map(|c| Ok((c.to_string(), galois::candidate_group(c, q, n)?))).collect::<Result<_>>()?;
        let r = galois::distinguish(&s.types(), &groups)?;
        out.push(
            Check::new(format!("{src}: consistent candidates {expect:?}"), r.consistent() == expect && s.accepted.len() >= 200)
                .value("consistent", format!("{:?}", r.consistent()))
                .value("samples", s.accepted.len())
                .value("types", format!("{:?}", r.frequencies)),
        );
    }
    Ok(out)
}

fn impossibility_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for q in [3u64, 4, 5] {
        let s = galois::impossibility_scan(q, 3)?;
        let mut ch = Check::new(format!("q={q}, r=3: no L with coeff_x = -1 has L/x irreducible"), s.irreducible.is_empty()).value("scanned", s.scanned);
        if let Some(l) = s.irreducible.first() {
            ch = ch.witness(l.to_string());
        }
        out.push(ch);
    }
    Ok(out)
}

fn projective_suite(seed: u64) -> Result<Vec<Check>> {
    let cases = random_suite(seed, SUITE_SIZE)?;
    let bad: Vec<Option<String>> = cases
        .par_iter()
        .map(|c| {
            if !c.lin.projective()?.identity_holds()? {
                return Ok(Some(format!("identity: {}", label(c))));
            }
            let checks = galois::psl_quotient_check(&c.lin, &c.ground)?;
            Ok(checks.iter().find(|ch| !ch.pass).map(|ch| format!("{}: {}", ch.name, label(c))))
        })
        .collect::<Result<_>>()?;
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    let mut ch = Check::new("P(x^(q-1)) x = L(x) and the quotient check on the random suite", bad.is_empty()).value("polynomials", cases.len());
    if let Some(w) = bad.first() {
        ch = ch.witness(w.clone());
    }
    Ok(vec![ch])
}
