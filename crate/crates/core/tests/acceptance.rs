//! Acceptance criteria, one PASS/FAIL line each with the measured values
//! and runtime. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use commgraph_core::classify::{classify_group, VerdictKind};
use commgraph_core::commgraph::{CommutingGraph, Distance};
use commgraph_core::finfield::Field;
use commgraph_core::groups::GroupElement;
use commgraph_core::paperfam::{
    build_example, centralizer_in_g, example_group_order, find_params, verify_dstruct,
    verify_f_class3, verify_m3, verify_symplectic, witness_path8, M3Outcome, ParamTriple,
};

const INSTANCES: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
    clauses: Vec<(bool, String)>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            detail: String::new(),
            clauses: Vec::new(),
        }
    }

    fn clause(&mut self, ok: bool, text: impl Into<String>) {
        self.pass &= ok;
        self.clauses.push((ok, text.into()));
    }
}

fn run(id: u32, title: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    match budget {
        Some(b) => out.clause(elapsed < b, format!("runtime {elapsed:.2?} within {b:?}")),
        None => out.clause(true, format!("runtime {elapsed:.2?}")),
    }
    let tag = if out.pass { "PASS" } else { "FAIL" };
    println!("{tag} [{id}] {title}: {}", out.detail);
    for (ok, text) in &out.clauses {
        println!("    {} {text}", if *ok { "ok  " } else { "FAIL" });
    }
    out.pass
}

fn theorem_suite() -> Outcome {
    let mut out = Outcome::new();
    let mut count = 0;
    for (name, g) in common::corpus() {
        if g.order() > 200 || !g.center().is_trivial() || !g.is_soluble() {
            continue;
        }
        count += 1;
        let verdict = classify_group(&g);
        let summary = CommutingGraph::build(&g).unwrap().summary();
        let disconnected = summary.components.len() > 1;
        let frob = matches!(
            verdict.kind,
            VerdictKind::Frobenius | VerdictKind::TwoFrobenius
        );
        out.clause(
            disconnected == frob,
            format!(
                "{name} (order {}): {} components, verdict {}",
                g.order(),
                summary.components.len(),
                verdict.kind
            ),
        );
        if let Distance::Finite(d) = summary.diameter {
            out.clause(d <= 8, format!("{name}: connected with diameter {d} <= 8"));
        }
    }
    out.clause(
        count >= 8,
        format!("{count} soluble trivial-centre groups (need >= 8)"),
    );
    out.detail = format!("{count} groups checked");
    out
}

fn small_verdicts() -> Outcome {
    let mut out = Outcome::new();
    let s4 = common::corpus_group("sym4");
    let v = classify_group(&s4);
    let (k, l) = (v.k.map(|s| s.order()), v.l.map(|s| s.order()));
    out.clause(
        v.kind == VerdictKind::TwoFrobenius && k == Some(4) && l == Some(12),
        format!("Sym(4): {} with K order {k:?}, L order {l:?}", v.kind),
    );
    let s4c = CommutingGraph::build(&s4)
        .unwrap()
        .summary()
        .components
        .len();
    out.clause(s4c > 1, format!("Sym(4) graph has {s4c} components"));
    let a4 = common::corpus_group("alt4");
    let v = classify_group(&a4);
    let kernel = v.kernel.map(|s| s.order());
    out.clause(
        v.kind == VerdictKind::Frobenius && kernel == Some(4),
        format!("Alt(4): {} with kernel order {kernel:?}", v.kind),
    );
    let a4c = CommutingGraph::build(&a4)
        .unwrap()
        .summary()
        .components
        .len();
    out.clause(
        a4c == 5,
        format!("Alt(4) graph has {a4c} components (need 5)"),
    );
    out.detail = "Sym(4) and Alt(4)".into();
    out
}

fn quotient_vs_naive() -> Outcome {
    let mut out = Outcome::new();
    let mut pairs = 0usize;
    let mut mismatches = 0usize;
    let groups = common::corpus();
    for (_, g) in &groups {
        let (vertices, naive) = common::naive_distances(g);
        let Ok(graph) = CommutingGraph::build(g) else {
            continue;
        };
        for (a, &x) in vertices.iter().enumerate() {
            for (b, &y) in vertices.iter().enumerate() {
                let (d, _) = graph.distance_indices(x, y).unwrap();
                let expected = naive[a][b].map_or(Distance::Infinite, Distance::Finite);
                pairs += 1;
                mismatches += usize::from(d != expected);
            }
        }
    }
    out.clause(
        mismatches == 0,
        format!("{mismatches} mismatches in {pairs} pairs"),
    );
    out.detail = format!("{} corpus groups, {pairs} vertex pairs", groups.len());
    out
}

fn base_family() -> Outcome {
    let mut out = Outcome::new();
    let params = ParamTriple::BASE;
    let eg = match build_example(params) {
        Ok(eg) => eg,
        Err(e) => {
            out.clause(false, format!("construction failed: {e}"));
            return out;
        }
    };
    let d_order = eg.d_group.order();
    out.clause(d_order == 80525, format!("|D| = {d_order}"));
    let (xo, xro) = (eg.x.element_order(), eg.x_r().element_order());
    out.clause(
        xo == 25 && xro == 5,
        format!("x has order {xo}, x^r has order {xro}"),
    );
    out.clause(
        eg.c.conjugate_by(&eg.x) == eg.c.pow(11),
        "c^x = x^-1 c x = c^11",
    );
    match verify_dstruct(&eg) {
        Ok(d) => out.clause(true, format!("Z(D) = <x^r> of order {}", d.center_order)),
        Err(e) => out.clause(false, format!("structure of D: {e}")),
    }
    let s = verify_symplectic(&eg);
    out.clause(
        s.z && s.c && s.generic_f,
        format!(
            "symplectic: z {}, c {}, generic F {}",
            s.z, s.c, s.generic_f
        ),
    );
    let z_r = eg.fixed_points(&eg.z.pow(5)).unwrap();
    out.clause(z_r.is_trivial(), format!("|C_F(z^r)| = {}", z_r.order));
    let fx = eg.fixed_points(&eg.x).unwrap();
    out.clause(fx.is_trivial(), format!("|C_F(x)| = {}", fx.order));
    let fc = eg.fixed_points(&eg.c).unwrap();
    out.clause(
        fc.order == BigUint::from(11u32),
        format!("|C_F(c)| = {} (criterion requires 11)", fc.order),
    );
    let cx = centralizer_in_g(&eg, &eg.x).unwrap();
    let x_idx = eg.d_group.index_of(&eg.x).unwrap();
    out.clause(
        cx.order == BigUint::from(25u32)
            && cx.d_part.members() == eg.d_group.closure(&[x_idx]).members(),
        format!("C_G(x) = <x>, order {}", cx.order),
    );
    let cxr = centralizer_in_g(&eg, &eg.x_r()).unwrap();
    out.clause(
        cxr.f_part.is_trivial() && cxr.d_part.order() == d_order,
        format!("C_G(x^r) = D, order {}", cxr.order),
    );
    let cc = centralizer_in_g(&eg, &eg.c).unwrap();
    out.clause(
        cc.order == BigUint::from(177155u32),
        format!("|C_G(c)| = {} (criterion requires 177155)", cc.order),
    );
    match verify_m3(&eg) {
        Ok(M3Outcome::Symbolic(cert)) => out.clause(
            true,
            format!(
                "symbolic certificate: entry ({},{}) = {} a b",
                cert.row + 1,
                cert.col + 1,
                cert.coefficient
            ),
        ),
        other => out.clause(false, format!("no symbolic certificate: {other:?}")),
    }
    match witness_path8(&eg) {
        Ok(p) => out.clause(p.length() == 8, format!("path {}", p.names.join(" ~ "))),
        Err(e) => out.clause(false, format!("path: {e}")),
    }
    let order = example_group_order(&params);
    out.clause(
        order.to_string() == "54173193341944394740910525",
        format!("|G| = {order}"),
    );
    out.detail = format!("(q, r, t) = ({}, {}, {})", params.q, params.r, params.t);
    out
}

fn param_search() -> Outcome {
    let mut out = Outcome::new();
    let eleven = find_params(11);
    out.clause(
        eleven == vec![ParamTriple::BASE],
        format!("q_max = 11 gives {eleven:?}"),
    );
    let seven = find_params(7);
    out.clause(seven.is_empty(), format!("q_max = 7 gives {seven:?}"));
    out.detail = "least triples".into();
    out
}

fn class_three() -> Outcome {
    let mut out = Outcome::new();
    let field = Field::new(11, 5).unwrap();
    let rep = verify_f_class3(&field);
    out.clause(rep.commutator_entry.is_some(), "[F, F] nontrivial");
    out.clause(
        rep.triple_entry.is_some(),
        format!(
            "triple commutator nonzero at {:?}",
            rep.triple_entry.as_ref().map(|e| (e.0 + 1, e.1 + 1))
        ),
    );
    out.clause(
        rep.quadruple_trivial,
        "every quadruple commutator is the identity",
    );
    out.detail = "generic elements of F over GF(11^5)".into();
    out
}

fn property_suite() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let fields: Vec<Field> = [(2, 3), (3, 4), (5, 2), (11, 5)]
        .iter()
        .map(|&(p, k)| Field::new(p, k).unwrap())
        .collect();

    let mut failures = 0;
    for _ in 0..INSTANCES {
        let f = &fields[rng.gen_range(0..fields.len())];
        let mut pick = || f.element(rng.gen_range(0..f.order())).unwrap();
        let (a, b, c) = (pick(), pick(), pick());
        let ok = &(&a + &b) * &c == &(&a * &c) + &(&b * &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a + &b == &b + &a
            && &a * &b == &b * &a
            && (a.is_zero() || &a * &a.inv().unwrap() == f.one())
            && &a + &(-&a) == f.zero();
        failures += usize::from(!ok);
    }
    out.clause(
        failures == 0,
        format!("field axioms: {failures} failures in {INSTANCES}"),
    );

    let mut failures = 0;
    for _ in 0..INSTANCES {
        let f = &fields[rng.gen_range(0..fields.len())];
        let mut pick = || f.element(rng.gen_range(0..f.order())).unwrap();
        let (a, b) = (pick(), pick());
        let i = rng.gen_range(-10i64..10);
        let ok = (&a + &b).frobenius(i) == &a.frobenius(i) + &b.frobenius(i)
            && (&a * &b).frobenius(i) == &a.frobenius(i) * &b.frobenius(i)
            && a.frobenius(1) == a.pow(f.characteristic());
        failures += usize::from(!ok);
    }
    out.clause(
        failures == 0,
        format!("Frobenius homomorphism: {failures} failures in {INSTANCES}"),
    );

    let groups = common::corpus();
    let mut failures = 0;
    for _ in 0..INSTANCES {
        let (_, g) = &groups[rng.gen_range(0..groups.len())];
        let a = rng.gen_range(0..g.order());
        let n = g.normal_closure(&[a]);
        let q = g.quotient(&n).unwrap();
        failures += usize::from(q.group.order() * n.order() != g.order());
    }
    out.clause(
        failures == 0,
        format!("|G| = |N| |G/N|: {failures} failures in {INSTANCES}"),
    );

    // a ~ b ~ c with b != 1 and 0 < n < ord(b), so b^n != 1.
    let mut failures = 0;
    for _ in 0..INSTANCES {
        let (_, g) = &groups[rng.gen_range(0..groups.len())];
        let a = rng.gen_range(1..g.order());
        let ca = g.centralizer(a);
        let b = ca.members()[rng.gen_range(1..ca.order())];
        let cb = g.centralizer(b);
        let c = cb.members()[rng.gen_range(0..cb.order())];
        let bn = g.pow(b, rng.gen_range(1..g.element_order(b) as u64));
        let ok =
            bn != 0 && g.commute(a, b) && g.commute(b, c) && g.commute(a, bn) && g.commute(bn, c);
        failures += usize::from(!ok);
    }
    out.clause(
        failures == 0,
        format!("path closure under powers: {failures} failures in {INSTANCES}"),
    );
    out.detail = format!("{INSTANCES} random instances per property, ChaCha8 seed 0xacce97");
    out
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(
            1,
            "soluble trivial-centre corpus: disconnected iff (2-)Frobenius, diameter <= 8",
            Some(secs(30)),
            theorem_suite,
        ),
        run(
            2,
            "Sym(4) 2-Frobenius, Alt(4) Frobenius",
            Some(secs(1)),
            small_verdicts,
        ),
        run(
            3,
            "quotient BFS equals naive BFS on the corpus",
            Some(secs(60)),
            quotient_vs_naive,
        ),
        run(
            4,
            "diameter-8 construction at (11, 5, 3221)",
            Some(secs(120)),
            base_family,
        ),
        run(5, "parameter search", Some(secs(5)), param_search),
        run(
            6,
            "F has nilpotency class exactly 3",
            Some(secs(60)),
            class_three,
        ),
        run(7, "property suite", None, property_suite),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
