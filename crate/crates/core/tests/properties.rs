use proptest::prelude::*;

use linfield::syntax::parse_field;
use linfield::{field_create, field_of_order, FFElement, Field, LinearizedPoly, UniPoly};

/// (p, k) for the fields exercised below.
const FIELDS: [(u64, u32); 7] = [(2, 1), (2, 4), (3, 2), (5, 1), (5, 3), (7, 2), (2, 10)];

fn field_strategy() -> impl Strategy<Value = Field> {
    (0..FIELDS.len()).prop_map(|i| field_create(FIELDS[i].0, FIELDS[i].1).unwrap())
}

fn element(f: &Field, code: u64) -> FFElement {
    let size = f.size().unwrap() as u64;
    FFElement::from_encoded(f, code % size).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (element(&f, a), element(&f, b), element(&f, c));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &x.neg()).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        let p = f.characteristic() as u128;
        prop_assert_eq!((&x + &y).pow(p), &x.pow(p) + &y.pow(p));
        prop_assert_eq!(x.pow(f.size().unwrap()), x.clone());
    }

    #[test]
    fn subfield_embedding_is_a_ring_map(a in any::<u64>(), b in any::<u64>()) {
        let small = field_create(2, 2).unwrap();
        let big = field_create(2, 6).unwrap();
        let (x, y) = (element(&small, a), element(&small, b));
        let (ex, ey) = (x.embed(&big).unwrap(), y.embed(&big).unwrap());
        prop_assert_eq!((&x * &y).embed(&big).unwrap(), &ex * &ey);
        prop_assert_eq!((&x + &y).embed(&big).unwrap(), &ex + &ey);
        prop_assert_eq!(ex.restrict(&small).unwrap(), Some(x));
    }

    #[test]
    fn q_polynomials_are_gf_q_linear(
        qi in 0usize..3,
        coeffs in prop::collection::vec(any::<u64>(), 1..4),
        a in any::<u64>(), b in any::<u64>(), c in any::<u64>(),
    ) {
        let (q, ground, ext) = [(2u64, (2u64, 2u32), 6u32), (3, (3, 2), 4), (4, (2, 4), 8)][qi];
        let f = field_create(ground.0, ground.1).unwrap();
        let e = field_create(ground.0, ext).unwrap();
        let cs: Vec<FFElement> = coeffs.iter().map(|&v| element(&f, v)).collect();
        let l = LinearizedPoly::new(q, &f, cs).unwrap();
        let (x, y) = (element(&e, a), element(&e, b));
        let lam = element(&field_of_order(q).unwrap(), c).embed(&e).unwrap();
        prop_assert_eq!(l.eval(&(&x + &y)).unwrap(), &l.eval(&x).unwrap() + &l.eval(&y).unwrap());
        prop_assert_eq!(l.eval(&(&lam * &x)).unwrap(), &lam * &l.eval(&x).unwrap());
    }

    #[test]
    fn associate_round_trip(qi in 0usize..4, coeffs in prop::collection::vec(any::<u64>(), 1..6)) {
        let q = [2u64, 3, 4, 5][qi];
        let f = field_of_order(q).unwrap();
        let mut cs: Vec<FFElement> = coeffs.iter().map(|&v| element(&f, v)).collect();
        cs.push(FFElement::one(&f));
        let a = UniPoly::new(&f, &cs).unwrap();
        let l = LinearizedPoly::from_associate(&a, q).unwrap();
        prop_assert_eq!(l.associate().unwrap(), a);
        prop_assert_eq!(l.q_degree(), Some(cs.len() - 1));
    }

    #[test]
    fn composition_matches_evaluation(
        c1 in prop::collection::vec(any::<u64>(), 1..3),
        c2 in prop::collection::vec(any::<u64>(), 1..3),
        z in any::<u64>(),
    ) {
        let f = field_create(2, 2).unwrap();
        let e = field_create(2, 8).unwrap();
        let l1 = LinearizedPoly::new(2, &f, c1.iter().map(|&v| element(&f, v)).collect()).unwrap();
        let l2 = LinearizedPoly::new(2, &f, c2.iter().map(|&v| element(&f, v)).collect()).unwrap();
        let x = element(&e, z);
        let composed = l1.compose(&l2).unwrap();
        prop_assert_eq!(composed.eval(&x).unwrap(), l1.eval(&l2.eval(&x).unwrap()).unwrap());
    }

    #[test]
    fn printed_q_polynomials_reparse(qi in 0usize..3, coeffs in prop::collection::vec(any::<u64>(), 1..4)) {
        let (q, p, k) = [(2u64, 2u64, 4u32), (3, 3, 2), (5, 5, 2)][qi];
        let f = field_create(p, k).unwrap();
        let l = LinearizedPoly::new(q, &f, coeffs.iter().map(|&v| element(&f, v)).collect()).unwrap();
        let printed = l.to_string();
        prop_assert_eq!(LinearizedPoly::parse(&printed, q, &f).unwrap(), l);
        prop_assert_eq!(parse_field(&f.to_string()).unwrap(), f);
    }
}
