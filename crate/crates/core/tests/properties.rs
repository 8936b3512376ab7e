//! Randomised invariants: field axioms, the Frobenius map, quotient orders
//! and commuting-path closure. Every property runs 1000 cases.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::RngAlgorithm;

use commgraph_core::finfield::{Field, FieldElement};
use commgraph_core::groups::{Element, FiniteGroup};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        rng_algorithm: RngAlgorithm::ChaCha,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn fields() -> &'static [Field] {
    static FIELDS: OnceLock<Vec<Field>> = OnceLock::new();
    FIELDS.get_or_init(|| {
        [
            (2, 1),
            (2, 3),
            (2, 8),
            (3, 4),
            (5, 2),
            (7, 1),
            (11, 5),
            (31, 5),
        ]
        .iter()
        .map(|&(p, k)| Field::with_cap(p, k, 1 << 25).unwrap())
        .collect()
    })
}

fn groups() -> &'static [(String, FiniteGroup<Element>)] {
    static GROUPS: OnceLock<Vec<(String, FiniteGroup<Element>)>> = OnceLock::new();
    GROUPS.get_or_init(common::corpus)
}

fn pick(field: &Field, seed: u64) -> FieldElement {
    field.element(seed % field.order()).unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms(f in 0..8usize, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let field = &fields()[f];
        let (a, b, c) = (pick(field, a), pick(field, b), pick(field, c));
        let (zero, one) = (field.zero(), field.one());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a + &(-&a), zero.clone());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(&a * &a.inv().unwrap(), one.clone());
            prop_assert_eq!(a.pow(field.order() - 1), one);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism(
        f in 0..8usize,
        a in any::<u64>(),
        b in any::<u64>(),
        i in -12i64..12,
    ) {
        let field = &fields()[f];
        let (a, b) = (pick(field, a), pick(field, b));
        let k = field.degree() as i64;
        prop_assert_eq!((&a + &b).frobenius(i), &a.frobenius(i) + &b.frobenius(i));
        prop_assert_eq!((&a * &b).frobenius(i), &a.frobenius(i) * &b.frobenius(i));
        prop_assert_eq!(a.frobenius(i).frobenius(-i), a.clone());
        prop_assert_eq!(a.frobenius(i + k), a.frobenius(i));
        // β is the p-th power map.
        prop_assert_eq!(a.frobenius(1), a.pow(field.characteristic()));
        let fixed_by_beta = a.frobenius(1) == a;
        let in_prime_field = (0..field.characteristic()).any(|n| field.from_int(n as i64) == a);
        prop_assert_eq!(fixed_by_beta, in_prime_field);
    }

    #[test]
    fn quotient_orders_multiply(g in 0..64usize, picks in proptest::collection::vec(any::<usize>(), 1..3)) {
        let (name, group) = &groups()[g % groups().len()];
        let set: Vec<usize> = picks.iter().map(|p| p % group.order()).collect();
        let n = group.normal_closure(&set);
        let q = group.quotient(&n).unwrap();
        prop_assert_eq!(q.group.order() * n.order(), group.order(), "{}", name);
        prop_assert_eq!(q.num_cosets(), q.group.order());
        let (a, b) = (set[0], picks.last().unwrap() % group.order());
        let ab = group.mul(a, b);
        prop_assert_eq!(q.project(ab), q.group.mul(q.project(a), q.project(b)));
        prop_assert_eq!(q.project(a) == 0, n.contains(a));
    }

    #[test]
    fn commuting_paths_close_under_powers(
        g in 0..64usize,
        a in any::<usize>(),
        b in any::<usize>(),
        c in any::<usize>(),
        n in 1u64..64,
    ) {
        let (name, group) = &groups()[g % groups().len()];
        // a != 1, b over C(a) without the identity, c over C(b), so a ~ b ~ c; the
        // exponent is reduced below ord(b), so b^n != 1.
        let a = 1 + a % (group.order() - 1);
        let ca = group.centralizer(a);
        let b = ca.members()[1 + b % (ca.order() - 1)];
        let cb = group.centralizer(b);
        let c = cb.members()[c % cb.order()];
        prop_assert!(group.commute(a, b) && group.commute(b, c));
        let bn = group.pow(b, 1 + n % (group.element_order(b) as u64 - 1));
        prop_assert!(bn != 0);
        prop_assert!(group.commute(a, bn), "{}", name);
        prop_assert!(group.commute(bn, c), "{}", name);
    }
}
