//! Subcommand dispatch: each command builds a [`Report`] of named checks.

use linfield::galois::{self, BivariateLinPoly, SamplingPlan, Status};
use linfield::groups::{self, ClassifyMode, GroupSet};
use linfield::linpoly::FamilyCheck;
use linfield::report::{Check, Report};
use linfield::syntax::{parse_element, parse_element_list, parse_field, parse_poly};
use linfield::{field_of_order, moore, suites, FFElement, Field, LinearizedPoly};

use crate::{Command, Failure, GaloisCmd, GroupName, GroupsCmd, LinArgs, LinpolyCmd, Mode, MooreCmd};

type Out = Result<Report, Failure>;

pub fn run(cmd: &Command) -> Out {
    match cmd {
        Command::Field(a) => field(a.q, a.field.as_deref()),
        Command::Linpoly(c) => linpoly(c),
        Command::Moore(c) => moore_cmd(c),
        Command::Groups(c) => groups_cmd(c),
        Command::Galois(c) => galois_cmd(c),
        Command::Suite { name, seed } => suite(name, *seed),
    }
}

fn ground(q: u64, field: Option<&str>) -> Result<Field, Failure> {
    Ok(match field {
        Some(f) => parse_field(f)?,
        None => field_of_order(q)?,
    })
}

fn lin_input(report: &mut Report, a: &LinArgs) -> Result<(Field, LinearizedPoly), Failure> {
    let f = ground(a.q, a.field.as_deref())?;
    let l = LinearizedPoly::parse(&a.lin, a.q, &f)?;
    report.input("q", a.q).input("field", &f).input("lin", &l);
    Ok((f, l))
}

fn fmt_matrix(m: &[Vec<FFElement>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

fn fmt_list(xs: &[FFElement]) -> String {
    xs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

fn field(q: Option<u64>, src: Option<&str>) -> Out {
    let f = match (q, src) {
        (_, Some(s)) => parse_field(s)?,
        (Some(q), None) => field_of_order(q)?,
        (None, None) => return Err(Failure::Usage("`field` needs --q or --field".into())),
    };
    let mut r = Report::new("field");
    r.input("field", &f);
    let size = f.size().map(|s| s.to_string()).unwrap_or_else(|| "huge".into());
    let mut c = Check::new("field constructed", true)
        .value("characteristic", f.characteristic())
        .value("degree", f.degree())
        .value("order", size)
        .value("modulus", linfield::syntax::format_prime_poly(f.modulus(), "x"));
    if let Ok(g) = f.generator() {
        c = c.value("generator", linfield::syntax::format_prime_poly(g.coords(), "x"));
    }
    r.push(c);
    Ok(r)
}

fn linpoly(cmd: &LinpolyCmd) -> Out {
    match cmd {
        LinpolyCmd::Eval { l, at, ext } => {
            let mut r = Report::new("linpoly eval");
            let (f, lin) = lin_input(&mut r, l)?;
            let target = match ext {
                Some(e) => parse_field(e)?,
                None => f,
            };
            let z = parse_element(at, &target)?;
            r.input("at", &z).input("ext", &target);
            let v = lin.eval(&z)?;
            r.push(Check::new("L(a) evaluated", true).value("L(a)", &v));
            Ok(r)
        }
        LinpolyCmd::Associate { q, lin, poly } => {
            let gfq = field_of_order(*q)?;
            let mut r = Report::new("linpoly associate");
            r.input("q", q);
            if let Some(src) = lin {
                let l = LinearizedPoly::parse(src, *q, &gfq)?;
                r.input("lin", &l);
                let a = l.associate()?;
                let back = LinearizedPoly::from_associate(&a, *q)?;
                r.push(Check::new("associate round trip", back == l).value("associate", &a));
            } else if let Some(src) = poly {
                let a = parse_poly(src, &gfq)?;
                r.input("poly", &a);
                let l = LinearizedPoly::from_associate(&a, *q)?;
                let back = l.associate()?;
                r.push(Check::new("associate round trip", back == a).value("lin", &l));
            }
            Ok(r)
        }
        LinpolyCmd::Projective(a) => {
            let mut r = Report::new("linpoly projective");
            let (_, l) = lin_input(&mut r, a)?;
            let p = l.projective()?;
            r.push(Check::new("P(x^(q-1)) x = L(x)", p.identity_holds()?).value("P", &p.poly));
            Ok(r)
        }
        LinpolyCmd::Roots { l, cap } => {
            let mut r = Report::new("linpoly roots");
            let (f, lin) = lin_input(&mut r, l)?;
            if let Some(c) = cap {
                r.input("cap", c);
            }
            let rs = lin.root_space(&f, *cap)?;
            let n = lin.q_degree().unwrap_or(0);
            let big_lin = lin.embed(&rs.big)?;
            let vanish = rs.basis.iter().map(|b| big_lin.eval(b)).collect::<linfield::Result<Vec<_>>>()?.iter().all(|v| v.is_zero());
            let independent = !moore::moore_determinant(&rs.basis, lin.q())?.is_zero();
            r.push(
                Check::new("basis elements are roots", vanish)
                    .value("splitting degree", rs.splitting_degree)
                    .value("splitting field", &rs.big),
            );
            r.push(
                Check::new("basis is GF(q)-independent of size n", independent && rs.basis.len() == n)
                    .value("n", n)
                    .value("basis", fmt_list(&rs.basis)),
            );
            Ok(r)
        }
        LinpolyCmd::Irreducible(a) => {
            let mut r = Report::new("linpoly irreducible");
            let (f, l) = lin_input(&mut r, a)?;
            let degs = l.lx()?.factor_degrees()?;
            let irr = l.lx_irreducible(&f)?;
            let mut c = Check::new("L(x)/x is irreducible", irr).value("factor degrees", format!("{degs:?}"));
            if !irr {
                c = c.witness(format!("L(x)/x has factors of degrees {degs:?}"));
            }
            r.push(c);
            Ok(r)
        }
        LinpolyCmd::Family { q, field, f, g } => {
            let fl = ground(*q, field.as_deref())?;
            let fp = LinearizedPoly::parse(f, *q, &fl)?;
            let gp = LinearizedPoly::parse(g, *q, &fl)?;
            let mut r = Report::new("linpoly family");
            r.input("q", q).input("field", &fl).input("f", &fp).input("g", &gp);
            match LinearizedPoly::verify_family(&fp, &gp)? {
                FamilyCheck::Certified(c) => {
                    r.push(
                        Check::new("family hypotheses hold", true)
                            .value("r", c.r)
                            .value("degree of (f + t g)/x", c.lx_degree)
                            .value("degree in t", c.degree_in_t)
                            .value("gcd degree", c.gcd_degree)
                            .value("argument", c.argument),
                    );
                }
                FamilyCheck::Violations(v) => {
                    r.push(Check::new("family hypotheses hold", false).witness(v.join("; ")));
                }
            }
            Ok(r)
        }
    }
}

fn moore_cmd(cmd: &MooreCmd) -> Out {
    match cmd {
        MooreCmd::Delta(a) => {
            let f = parse_field(&a.field)?;
            let basis = parse_element_list(&a.basis, &f)?;
            let mut r = Report::new("moore delta");
            r.input("q", a.q).input("field", &f).input("basis", fmt_list(&basis));
            let delta = moore::moore_determinant(&basis, a.q)?;
            let mut c = Check::new("Moore determinant is nonzero", !delta.is_zero()).value("delta", &delta);
            if delta.is_zero() {
                c = c.witness(format!("basis is dependent over GF({})", a.q));
            }
            r.push(c);
            Ok(r)
        }
        MooreCmd::Reconstruct(a) => {
            let f = parse_field(&a.field)?;
            let basis = parse_element_list(&a.basis, &f)?;
            let mut r = Report::new("moore reconstruct");
            r.input("q", a.q).input("field", &f).input("basis", fmt_list(&basis));
            let md = moore::moore_delta(&basis, a.q)?;
            let l = moore::reconstruct_l(&md)?;
            let vanish = basis.iter().map(|b| l.eval(b)).collect::<linfield::Result<Vec<_>>>()?.iter().all(|v| v.is_zero());
            r.push(
                Check::new("L vanishes on the basis", vanish && l.is_monic() && l.q_degree() == Some(basis.len()))
                    .value("L", &l)
                    .value("delta", &md.delta),
            );
            Ok(r)
        }
        MooreCmd::Verify(a) => {
            let mut r = Report::new("moore verify");
            let (f, l) = lin_input(&mut r, a)?;
            r.extend(moore::verify_determinant_identities(&l, &f)?);
            Ok(r)
        }
    }
}

fn named_group(name: GroupName, q: u64, n: usize) -> Result<GroupSet, Failure> {
    let key = match name {
        GroupName::Singer => "Z",
        GroupName::Gammal => "GammaL",
        GroupName::Gammal1 => "GammaL1",
        GroupName::Sl => "SL",
        GroupName::Gl => "GL",
    };
    Ok(galois::candidate_group(key, q, n)?)
}

fn group_label(name: GroupName) -> &'static str {
    match name {
        GroupName::Singer => "singer",
        GroupName::Gammal => "gammal",
        GroupName::Gammal1 => "gammal1",
        GroupName::Sl => "sl",
        GroupName::Gl => "gl",
    }
}

fn fingerprint_check(name: &str, g: &GroupSet) -> Check {
    let fp = groups::fingerprint(g);
    let hist: Vec<String> = fp.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Check::new(name, true)
        .value("order", fp.order)
        .value("element orders", hist.join(" "))
        .value("involutions", fp.involutions)
        .value("center order", fp.center_order)
        .value("det image order", fp.det_image_order)
        .value("transitive", fp.transitive)
}

fn groups_cmd(cmd: &GroupsCmd) -> Out {
    match cmd {
        GroupsCmd::Singer(a) => {
            let s = groups::singer_cycle(a.q, a.n)?;
            let mut r = Report::new("groups singer");
            r.input("q", a.q).input("n", a.n);
            let order = s.gl.order(&s.matrix);
            let want = s.gl.nonzero_vectors();
            let mut c = Check::new("Singer cycle has order q^n - 1", order == want)
                .value("matrix", s.gl.format(&s.matrix))
                .value("element", &s.element)
                .value("element is x", s.is_x)
                .value("order", order);
            if order != want {
                c = c.witness(format!("order {order} != {want}"));
            }
            r.push(c);
            Ok(r)
        }
        GroupsCmd::Gammal { qn, sl, cap } => {
            let g = groups::gamma_l(qn.q, qn.n, *sl, *cap)?;
            let mut r = Report::new("groups gammal");
            r.input("q", qn.q).input("n", qn.n).input("sl", sl).input("cap", cap);
            let (full, one) = groups::gamma_l_orders(qn.q, qn.n);
            let want = if *sl { one } else { full };
            r.push(Check::new("order formula", g.order() == want).value("order", g.order()).value("expected", want));
            let t = groups::orbits(&g).transitive;
            r.push(Check::new("transitive on nonzero vectors", t).value("transitive", t));
            Ok(r)
        }
        GroupsCmd::Orbits { qn, group } => {
            let g = named_group(*group, qn.q, qn.n)?;
            let o = groups::orbits(&g);
            let mut r = Report::new("groups orbits");
            r.input("q", qn.q).input("n", qn.n).input("group", group_label(*group));
            let sizes: Vec<String> = o.orbits.iter().map(|v| v.len().to_string()).collect();
            let total: usize = o.orbits.iter().map(|v| v.len()).sum();
            r.push(
                Check::new("orbits partition the nonzero vectors", total as u64 == g.gl.nonzero_vectors())
                    .value("order", g.order())
                    .value("orbit count", o.orbits.len())
                    .value("orbit sizes", sizes.join(" "))
                    .value("transitive", o.transitive),
            );
            Ok(r)
        }
        GroupsCmd::Classify { qn, mode, seed, cap, closure_cap, samples, cross_check } => {
            let m = match mode {
                Mode::Auto => ClassifyMode::Auto,
                Mode::Exhaustive => ClassifyMode::Exhaustive,
                Mode::Randomized => ClassifyMode::Randomized,
            };
            let c = groups::classify_transitive_subgroups(qn.q, qn.n, m, *cap, *closure_cap, *seed, *samples)?;
            let mut r = Report::new("groups classify");
            r.input("q", qn.q).input("n", qn.n).input("cap", cap).input("closure cap", closure_cap);
            r.input("mode", if c.exhaustive { "exhaustive" } else { "randomized" });
            if !c.exhaustive {
                r.seed = Some(*seed);
                r.input("samples", samples);
            }
            let orders: Vec<String> = c.orders().iter().map(|o| o.to_string()).collect();
            r.push(
                Check::new("transitive classes found", !c.classes.is_empty())
                    .value("classes", c.classes.len())
                    .value("orders", orders.join(" "))
                    .value("up to", c.up_to),
            );
            for (i, cl) in c.classes.iter().enumerate() {
                let gens: Vec<String> = cl.generators.iter().map(|g| c_fmt(&cl.group, g)).collect();
                let mut ch = fingerprint_check(&format!("class {}: order {}", i + 1, cl.fingerprint.order), &cl.group)
                    .value("generators", gens.join(" "));
                ch.pass = cl.fingerprint.transitive;
                if let Some(k) = cl.conjugates {
                    ch = ch.value("conjugates", k);
                }
                r.push(ch);
            }
            if *cross_check {
                let lc = groups::subgroup_lattice_transitive(qn.q, qn.n, *cap)?;
                r.push(
                    Check::new("subgroup lattice agrees", lc.agrees && lc.transitive_classes == c.classes.len())
                        .value("subgroups", lc.subgroups)
                        .value("transitive classes", lc.transitive_classes),
                );
            }
            Ok(r)
        }
        GroupsCmd::Fingerprint { qn, group } => {
            let g = named_group(*group, qn.q, qn.n)?;
            let mut r = Report::new("groups fingerprint");
            r.input("q", qn.q).input("n", qn.n).input("group", group_label(*group));
            r.push(fingerprint_check("fingerprint", &g));
            Ok(r)
        }
    }
}

fn c_fmt(g: &GroupSet, a: &groups::MatGF) -> String {
    g.gl.format(a)
}

fn galois_cmd(cmd: &GaloisCmd) -> Out {
    match cmd {
        GaloisCmd::Finite(a) => {
            let mut r = Report::new("galois finite");
            let (f, l) = lin_input(&mut r, a)?;
            let g = galois::galois_group_finite(&l, &f)?;
            let irr = l.lx_irreducible(&f)?;
            r.push(
                Check::new("cyclic of order s", g.group.order() == g.splitting_degree)
                    .value("splitting degree", g.splitting_degree)
                    .value("order", g.group.order())
                    .value("S", fmt_matrix(&g.matrix.s)),
            );
            r.push(
                Check::new("transitive iff L(x)/x irreducible", g.transitive == irr)
                    .value("transitive", g.transitive)
                    .value("irreducible", irr),
            );
            Ok(r)
        }
        GaloisCmd::Distinguish { q, field, lin, candidates, seed, samples } => {
            let f = match (field, q) {
                (Some(s), _) => parse_field(s)?,
                (None, Some(q)) => field_of_order(*q)?,
                (None, None) => field_of_order(2)?,
            };
            let q = q.unwrap_or(f.characteristic());
            let lt = BivariateLinPoly::parse(lin, q, &f)?;
            let n = lt.q_degree();
            let mut r = Report::new("galois distinguish");
            r.input("q", q).input("field", &f).input("lin", &lt).input("candidates", candidates).input("samples", samples);
            r.seed = Some(*seed);
            let plan = SamplingPlan {
                seed: *seed,
                max_samples: *samples,
                ..SamplingPlan::default()
            };
            let set = galois::cycle_type_sample(&lt, &plan)?;
            let groups: Vec<(String, GroupSet)> = candidates
                .split(',')
                .map(|c| c.trim())
                .filter(|c| !c.is_empty())
                .map(|c| Ok((c.to_string(), galois::candidate_group(c, q, n)?)))
                .collect::<Result<_, Failure>>()?;
            if groups.is_empty() {
                return Err(Failure::Usage("--candidates is empty".into()));
            }
            let freq: Vec<String> = set.frequencies().iter().map(|(t, k)| format!("{t}x{k}")).collect();
            r.push(
                Check::new("specializations accepted", !set.accepted.is_empty())
                    .value("accepted", set.accepted.len())
                    .value("rejected", set.rejected)
                    .value("cycle types", freq.join(" ")),
            );
            let observed = set.types();
            match galois::distinguish(&observed, &groups) {
                Ok(d) => {
                    for c in &d.candidates {
                        let mut ch = Check::new(format!("candidate {}", c.name), true).value("order", c.order);
                        ch = match &c.status {
                            Status::Consistent => ch.value("status", "consistent"),
                            Status::RuledOut { witness } => ch.value("status", "ruled out").witness(witness.to_string()),
                        };
                        r.push(ch);
                    }
                    r.push(Check::new("some candidate is consistent", true).value("consistent", d.consistent().join(",")));
                }
                Err(linfield::Error::AllRuledOut) => {
                    for (name, g) in &groups {
                        let types = galois::group_cycle_types(g);
                        let w = observed.iter().filter(|t| !types.contains(t)).min().map(|t| t.to_string()).unwrap_or_default();
                        r.push(Check::new(format!("candidate {name}"), true).value("order", g.order()).value("status", "ruled out").witness(w));
                    }
                    r.push(Check::new("some candidate is consistent", false).witness("every candidate was ruled out"));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
        GaloisCmd::PslCheck(a) => {
            let mut r = Report::new("galois psl-check");
            let (f, l) = lin_input(&mut r, a)?;
            r.extend(galois::psl_quotient_check(&l, &f)?);
            Ok(r)
        }
    }
}

fn suite(name: &str, seed: u64) -> Out {
    let checks = suites::run(name, seed)
        .ok_or_else(|| Failure::Usage(format!("unknown suite `{name}`: expected one of {}", suites::SUITES.join(", "))))??;
    let mut r = Report::new("suite");
    r.input("name", name);
    r.seed = Some(seed);
    r.extend(checks);
    Ok(r)
}
