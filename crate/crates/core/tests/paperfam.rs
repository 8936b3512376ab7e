//! The diameter-8 family at (11, 5, 3221) and (31, 5, 11).

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use commgraph_core::finfield::{Field, FieldElement};
use commgraph_core::groups::{GroupElement, MatrixAutElement};
use commgraph_core::paperfam::{
    build_example, build_example_with_cap, center_of_f, centralizer_in_g, run_suite,
    run_suite_with_cap, verify_dstruct, verify_f_class3, verify_m3, witness_path8, CheckStatus,
    ExampleGroup, FCoords, FixedPointMethod, FixedPoints, M3Outcome, PaperError, ParamTriple,
};

const SECOND: ParamTriple = ParamTriple { q: 31, r: 5, t: 11 };
const SECOND_CAP: u64 = 1 << 25;

fn random_element(field: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    field.element(rng.gen_range(0..field.order())).unwrap()
}

fn random_f(field: &Field, rng: &mut ChaCha8Rng) -> FCoords {
    let mut r = || random_element(field, rng);
    FCoords::new(r(), r(), r(), r())
}

/// A random point of C_F(w) from the GF(p)-bases of the fixed coordinates.
fn random_fixed(fp: &FixedPoints, field: &Field, rng: &mut ChaCha8Rng) -> FCoords {
    let p = field.characteristic();
    let mut span = |name: &str| {
        fp.coord(name).basis.iter().fold(field.zero(), |acc, b| {
            &acc + &(&field.from_int(rng.gen_range(0..p) as i64) * b)
        })
    };
    let (a, b, c, x) = (span("a"), span("b"), span("c"), span("x"));
    FCoords::new(a, b, c, x)
}

fn commutes(f: &FCoords, w: &MatrixAutElement) -> bool {
    f.to_element().commutes_with(w)
}

/// C_G(w) = C_F(w) C_D(w) checked against direct multiplication on random
/// samples from F, from C_F(w) and from D.
fn check_centralizers(eg: &ExampleGroup, seed: u64, samples: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dg = &eg.d_group;
    for _ in 0..samples {
        let wi = rng.gen_range(1..dg.order());
        let w = dg.element(wi).clone();
        let cg = centralizer_in_g(eg, &w).unwrap();
        assert_eq!(
            cg.order,
            BigUint::from(cg.d_part.order()) * &cg.f_part.order
        );

        let inside = random_fixed(&cg.f_part, &eg.field, &mut rng);
        assert!(cg.f_part.contains(&inside));
        assert!(commutes(&inside, &w), "fixed point does not commute");

        let any = random_f(&eg.field, &mut rng);
        assert_eq!(cg.f_part.contains(&any), commutes(&any, &w));

        let di = rng.gen_range(0..dg.order());
        assert_eq!(cg.d_part.contains(di), dg.commute(di, wi));
        if cg.d_part.contains(di) {
            let prod = inside.to_element().compose(dg.element(di));
            assert!(prod.commutes_with(&w));
        }
    }
}

#[test]
fn base_suite_passes() {
    let report = run_suite(ParamTriple::BASE).unwrap();
    assert_eq!(report.group_order, "54173193341944394740910525");
    for c in &report.checks {
        assert_eq!(c.status, CheckStatus::Pass, "{}: {}", c.name, c.detail);
    }
    assert!(report.all_pass());
}

#[test]
fn base_structure_of_d() {
    let eg = build_example(ParamTriple::BASE).unwrap();
    let d = verify_dstruct(&eg).unwrap();
    assert_eq!(d.d_order, 80525);
    assert_eq!((d.x_order, d.x_r_order), (25, 5));
    assert_eq!(d.exponent_sum, BigUint::from(16105u32));
    assert!(d.c_conjugate_is_power && d.c_conjugate_differs && d.x_r_commutes_with_c);
    assert_eq!(d.center_order, 5);
    assert_eq!(eg.c.conjugate_by(&eg.x), eg.c.pow(11));
}

#[test]
fn base_fixed_points_are_cross_checked_by_enumeration() {
    let eg = build_example(ParamTriple::BASE).unwrap();
    for w in [eg.z.pow(5), eg.x.clone(), eg.c.clone(), eg.x_r()] {
        let fp = eg.fixed_points(&w).unwrap();
        assert_eq!(fp.method, FixedPointMethod::LinearAndEnumerate);
    }
    let fc = eg.fixed_points(&eg.c).unwrap();
    assert_eq!(fc.order, BigUint::from(161051u32));
    assert!(eg.fixed_points(&eg.x).unwrap().is_trivial());
    assert!(eg.fixed_points(&eg.z.pow(5)).unwrap().is_trivial());
}

#[test]
fn base_centralizers_sampled() {
    let eg = build_example(ParamTriple::BASE).unwrap();
    check_centralizers(&eg, 0x5eed, 40);
    let id = eg.d_group.element(eg.d_group.identity()).clone();
    assert_eq!(centralizer_in_g(&eg, &id).unwrap_err(), PaperError::NotInD);
    assert_eq!(
        centralizer_in_g(&eg, &eg.g).unwrap_err(),
        PaperError::NotInD
    );
}

#[test]
fn base_symbolic_checks() {
    let eg = build_example(ParamTriple::BASE).unwrap();
    match verify_m3(&eg).unwrap() {
        M3Outcome::Symbolic(cert) => {
            assert_eq!((cert.row, cert.col), (3, 0));
            assert_eq!(cert.coefficient, eg.field.from_int(2));
            assert_eq!((cert.a_exp, cert.b_exp), (1, 1));
        }
        other => panic!("expected a symbolic certificate, got {other:?}"),
    }
    let z = center_of_f(&eg.field).unwrap();
    assert_eq!(z.free, vec!["c"]);
    assert!(verify_f_class3(&eg.field).class_is_three());
    let path = witness_path8(&eg).unwrap();
    assert_eq!(path.length(), 8);
    assert_eq!(path.elements[0], eg.x);
    assert_eq!(path.elements[8], eg.y());
}

#[test]
fn second_triple_needs_the_larger_cap() {
    assert!(matches!(build_example(SECOND), Err(PaperError::Field(_))));
    let report = run_suite_with_cap(SECOND, SECOND_CAP).unwrap();
    for c in &report.checks {
        assert_eq!(c.status, CheckStatus::Pass, "{}: {}", c.name, c.detail);
    }
    assert_eq!(report.group_order, "184742395425247627559939215440275");
}

#[test]
fn second_triple_centralizers_sampled() {
    let eg = build_example_with_cap(SECOND, SECOND_CAP).unwrap();
    assert_eq!(eg.d_group.order(), 275);
    assert_eq!(
        eg.fixed_points(&eg.c).unwrap().method,
        FixedPointMethod::Linear
    );
    check_centralizers(&eg, 31, 300);
}

#[test]
fn invalid_triples_are_rejected() {
    for p in [
        ParamTriple { q: 11, r: 3, t: 7 },
        ParamTriple { q: 13, r: 5, t: 11 },
        ParamTriple { q: 11, r: 5, t: 11 },
    ] {
        assert!(
            matches!(run_suite(p), Err(PaperError::InvalidParams(_))),
            "{p:?}"
        );
    }
}
