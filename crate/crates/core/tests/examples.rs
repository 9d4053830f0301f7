//! Worked examples through the public API.

use linfield::galois::{self, CycleType};
use linfield::groups::{self, ClassifyMode};
use linfield::syntax::{parse_element, parse_poly};
use linfield::{field_create, field_of_order, moore, LinearizedPoly, UniPoly};

#[test]
fn associate_of_x3_x_1() {
    let f2 = field_create(2, 1).unwrap();
    let a = UniPoly::from_ints(&f2, &[1, 1, 0, 1]).unwrap();
    let l = LinearizedPoly::from_associate(&a, 2).unwrap();
    assert_eq!(l, LinearizedPoly::parse("x^8 + x^2 + x", 2, &f2).unwrap());
    assert_eq!(l.associate().unwrap(), a);
}

#[test]
fn projective_polynomial_of_trinomial() {
    // L = x^(q^2) + b x^q + x gives P(y) = y^(q+1) + b y + 1.
    for (q, b) in [(2u64, "1"), (3, "2"), (4, "g"), (5, "3")] {
        let f = field_of_order(q).unwrap();
        let l = LinearizedPoly::parse(&format!("x^q^2 + {b}*x^q + x"), q, &f).unwrap();
        let p = l.projective().unwrap();
        let want = parse_poly(&format!("y^{} + {b}*y + 1", q + 1).replace('y', "x"), &f).unwrap();
        assert_eq!(p.poly, want, "q = {q}");
        assert!(p.identity_holds().unwrap());
    }
}

#[test]
fn normal_basis_gives_cycle_matrix() {
    // x^8 - x over GF(2): the roots are GF(8), Frobenius has order 3 on them
    // and permutes a normal basis as a 3-cycle.
    let f2 = field_create(2, 1).unwrap();
    let l = LinearizedPoly::parse("x^8 + x", 2, &f2).unwrap();
    let gm = moore::frobenius_matrix(&l, &f2).unwrap();
    assert_eq!(gm.roots.splitting_degree, 3);
    assert_eq!(gm.order(), 3);
    assert!(gm.det().is_one());
    assert!(gm.intertwines().unwrap());
    let f8 = field_create(2, 3).unwrap();
    let orbit = |b: &linfield::FFElement| vec![b.clone(), b.frobenius(2).unwrap(), b.frobenius(2).unwrap().frobenius(2).unwrap()];
    let beta = (1..8u64)
        .map(|c| linfield::FFElement::from_encoded(&f8, c).unwrap())
        .find(|b| !moore::moore_determinant(&orbit(b), 2).unwrap().is_zero())
        .unwrap();
    let basis = orbit(&beta);
    let md = moore::moore_delta(&basis, 2).unwrap();
    // sigma(basis[i]) = basis[i + 1]: the Moore rows are cyclic shifts.
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(md.d[i][j], basis[(i + j) % 3]);
        }
    }
    assert!(md.delta.lies_in(2).unwrap());
}

#[test]
fn semilinear_orders() {
    assert_eq!(groups::gamma_l(2, 3, false, groups::DEFAULT_ENUM_CAP).unwrap().order(), 21);
    assert_eq!(groups::gamma_l(3, 3, true, groups::DEFAULT_ENUM_CAP).unwrap().order(), 39);
    for n in 2..=5 {
        let full = groups::gamma_l(2, n, false, groups::DEFAULT_ENUM_CAP).unwrap();
        let one = groups::gamma_l(2, n, true, groups::DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(full.elements, one.elements, "n = {n}");
    }
}

#[test]
fn singer_and_frobenius_generate_gamma_l() {
    let s = groups::singer_cycle(2, 3).unwrap();
    let z = groups::closure(&s.gl, &[s.matrix.clone()], groups::DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(z.order(), 7);
    let fp = groups::fingerprint(&z);
    assert_eq!(fp.histogram.iter().map(|(k, v)| (*k, *v)).collect::<Vec<_>>(), vec![(1, 1), (7, 6)]);
    assert_eq!(fp.involutions, 0);
    let frob = groups::frobenius_matrix(2, 3).unwrap();
    let g = groups::closure(&s.gl, &[s.matrix, frob], groups::DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(g.order(), 21);
    assert!(groups::orbits(&g).transitive);
    assert!(z.is_normal_in(&g).unwrap());
}

#[test]
fn transitivity_of_semilinear_groups() {
    let t = |q, n, sl| groups::orbits(&groups::gamma_l(q, n, sl, groups::DEFAULT_ENUM_CAP).unwrap()).transitive;
    assert!(t(2, 3, false));
    assert!(!t(3, 3, true));
    assert!(!t(4, 3, true));
    assert!(t(3, 3, false));
}

#[test]
fn small_classifications() {
    let c = groups::classify_transitive_subgroups(2, 2, ClassifyMode::Exhaustive, groups::DEFAULT_ENUM_CAP, groups::DEFAULT_CLOSURE_CAP, 0, 0).unwrap();
    assert_eq!(c.orders(), vec![3, 6]);
    let c = groups::classify_transitive_subgroups(3, 2, ClassifyMode::Exhaustive, groups::DEFAULT_ENUM_CAP, groups::DEFAULT_CLOSURE_CAP, 0, 0).unwrap();
    assert_eq!(c.orders(), vec![8, 24]);
    assert_eq!(c.classes[0].fingerprint.involutions, 1);
    let lattice = groups::subgroup_lattice_transitive(3, 2, groups::DEFAULT_ENUM_CAP).unwrap();
    assert!(lattice.agrees);
    assert_eq!(lattice.transitive_classes, 2);
}

#[test]
fn singer_cycle_types() {
    let z = galois::candidate_group("Z", 2, 3).unwrap();
    let types: Vec<CycleType> = galois::group_cycle_types(&z).into_iter().collect();
    assert_eq!(types, vec![CycleType(vec![1; 7]), CycleType(vec![7])]);
}

#[test]
fn finite_galois_group_of_primitive_associate() {
    let f2 = field_create(2, 1).unwrap();
    let l = LinearizedPoly::parse("x^8 + x^2 + x", 2, &f2).unwrap();
    let g = galois::galois_group_finite(&l, &f2).unwrap();
    assert_eq!(g.group.order(), 7);
    assert!(g.transitive);
    // x^32 + x^4 + x: associate x^5 + x^2 + 1 is primitive.
    let l = LinearizedPoly::parse("x^32 + x^4 + x", 2, &f2).unwrap();
    let g = galois::galois_group_finite(&l, &f2).unwrap();
    assert_eq!(g.group.order(), 31);
}

#[test]
fn specialization_at_a_point() {
    let f2 = field_create(2, 1).unwrap();
    let lt = galois::BivariateLinPoly::parse("x^8 + x^2 + t*x", 2, &f2).unwrap();
    let f4 = field_create(2, 2).unwrap();
    let a = parse_element("g", &f4).unwrap();
    let l = lt.specialize(&a).unwrap().unwrap();
    assert_eq!(l.coeff_x(), a);
    let zero = parse_element("0", &f4).unwrap();
    assert_eq!(lt.specialize(&zero).unwrap(), None);
}
