//! The structure of D, the explicit length-8 path from x to y, and the
//! full verification suite.

use num_bigint::BigUint;
use serde::Serialize;

use crate::classify::{classify_group, VerdictKind};
use crate::groups::{FieldMatrix, GroupElement, MatrixAutElement};

use super::symbolic::{center_of_f, verify_f_class3, verify_m3, verify_symplectic, M3Outcome};
use crate::finfield::DEFAULT_FIELD_CAP;

use super::{
    build_example_with_cap, centralizer_in_g, example_group_order, f_order, ExampleGroup,
    PaperError, ParamTriple,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DStructReport {
    pub d_order: usize,
    pub x_order: u64,
    pub x_r_order: u64,
    /// 1 + q + ... + q^{r-1}.
    pub exponent_sum: BigUint,
    /// x^r = diag(d^s, e^s, e^-s, d^-s) for the exponent sum s, with
    /// entries in GF(q).
    pub x_r_is_norm_diagonal: bool,
    pub x_r_commutes_with_c: bool,
    /// x^-1 c x = c^q.
    pub c_conjugate_is_power: bool,
    pub c_conjugate_differs: bool,
    pub center_order: usize,
    pub center_is_x_r: bool,
}

pub fn verify_dstruct(eg: &ExampleGroup) -> Result<DStructReport, PaperError> {
    let ParamTriple { q, r, t } = eg.params;
    let x_r = eg.x_r();
    let exponent_sum: BigUint = (0..r).map(|i| BigUint::from(q).pow(i as u32)).sum();
    let s = |e: &crate::finfield::FieldElement| e.pow_big(&exponent_sum);
    let norm_diag = FieldMatrix::diagonal(
        &eg.field,
        &[
            s(&eg.eig_d),
            s(&eg.eig_e),
            s(&eg.eig_e.inv()?),
            s(&eg.eig_d.inv()?),
        ],
    );
    let in_prime_field = norm_diag
        .diagonal_entries()
        .iter()
        .all(|e| e.frobenius(1) == *e);
    let conj = eg.c.conjugate_by(&eg.x);
    let dg = &eg.d_group;
    let center = dg.center();
    let x_r_idx = dg.require(&x_r)?;
    let report = DStructReport {
        d_order: dg.order(),
        x_order: eg.x.element_order(),
        x_r_order: x_r.element_order(),
        x_r_is_norm_diagonal: x_r.twist() == 0 && *x_r.matrix() == norm_diag && in_prime_field,
        x_r_commutes_with_c: x_r.commutes_with(&eg.c),
        c_conjugate_is_power: conj == eg.c.pow(q),
        c_conjugate_differs: conj != eg.c,
        center_order: center.order(),
        center_is_x_r: center.members() == dg.closure(&[x_r_idx]).members(),
        exponent_sum,
    };
    let clauses = [
        ("|D| = r^2 t", report.d_order as u64 == r * r * t),
        ("x has order r^2", report.x_order == r * r),
        ("x^r has order r", report.x_r_order == r),
        ("x^r is the diagonal of norms", report.x_r_is_norm_diagonal),
        ("[x^r, c] = 1", report.x_r_commutes_with_c),
        ("x^-1 c x = c^q", report.c_conjugate_is_power),
        ("x^-1 c x != c", report.c_conjugate_differs),
        ("Z(D) = <x^r>", report.center_is_x_r),
    ];
    if let Some((name, _)) = clauses.iter().find(|(_, ok)| !ok) {
        return Err(PaperError::CheckFailed {
            check: "dstruct".into(),
            detail: (*name).into(),
        });
    }
    Ok(report)
}

/// x ~ x^r ~ c ~ w ~ u ~ w* ~ c^g ~ (x^r)^g ~ y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPath {
    pub names: Vec<&'static str>,
    pub elements: Vec<MatrixAutElement>,
}

impl WitnessPath {
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }
}

/// Build the explicit path and check every edge: consecutive terms are
/// distinct and commute, and no term is the identity.
pub fn witness_path8(eg: &ExampleGroup) -> Result<WitnessPath, PaperError> {
    let one = eg.field.one();
    let g = &eg.g;
    let x_r = eg.x_r();
    let w = eg.c_family(&one);
    let names = vec!["x", "x^r", "c", "w", "u", "w*", "c^g", "(x^r)^g", "y"];
    let elements = vec![
        eg.x.clone(),
        x_r.clone(),
        eg.c.clone(),
        w.clone(),
        eg.central(&one),
        w.conjugate_by(g),
        eg.c.conjugate_by(g),
        x_r.conjugate_by(g),
        eg.y(),
    ];
    for (i, e) in elements.iter().enumerate() {
        if e.is_identity() {
            return Err(PaperError::PathBroken {
                edge: i,
                detail: format!("{} is the identity", names[i]),
            });
        }
        if let Some(j) = elements[..i].iter().position(|o| o == e) {
            return Err(PaperError::PathBroken {
                edge: i,
                detail: format!("{} repeats {}", names[i], names[j]),
            });
        }
    }
    for i in 0..elements.len() - 1 {
        if !elements[i].commutes_with(&elements[i + 1]) {
            return Err(PaperError::PathBroken {
                edge: i,
                detail: format!("{} and {} do not commute", names[i], names[i + 1]),
            });
        }
    }
    Ok(WitnessPath { names, elements })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFrobeniusReport {
    pub c_f_c_order: BigUint,
    pub d_verdict: VerdictKind,
    pub d_center_order: usize,
}

impl NotFrobeniusReport {
    /// C_F(c) ≠ 1 rules out a Frobenius group with kernel F, and G/F ≅ D
    /// has nontrivial centre so it is not Frobenius either.
    pub fn holds(&self) -> bool {
        self.c_f_c_order > BigUint::from(1u32)
            && self.d_center_order > 1
            && !matches!(
                self.d_verdict,
                VerdictKind::Frobenius | VerdictKind::TwoFrobenius
            )
    }
}

pub fn verify_not_frobenius_structure(eg: &ExampleGroup) -> Result<NotFrobeniusReport, PaperError> {
    let c_f_c = eg.fixed_points(&eg.c)?;
    let verdict = classify_group(&eg.d_group);
    Ok(NotFrobeniusReport {
        c_f_c_order: c_f_c.order,
        d_verdict: verdict.kind,
        d_center_order: eg.d_group.center().order(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub params: ParamTriple,
    pub checks: Vec<CheckEntry>,
    pub group_order: String,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

type CheckResult = Result<(bool, String), PaperError>;

/// Run every check for one parameter triple. Invalid parameters are an
/// error; failing checks are reported in the result.
pub fn run_suite(params: ParamTriple) -> Result<SuiteReport, PaperError> {
    run_suite_with_cap(params, DEFAULT_FIELD_CAP)
}

/// As [`run_suite`], with `cap` bounding the field order and |D|.
pub fn run_suite_with_cap(params: ParamTriple, cap: u64) -> Result<SuiteReport, PaperError> {
    params.validate()?;
    let eg = build_example_with_cap(params, cap)?;
    let ParamTriple { q, r, t } = params;
    let field_order = BigUint::from(eg.field.order());
    let mut checks = Vec::new();
    let mut record = |name: &str, result: CheckResult| {
        let (status, detail) = match result {
            Ok((true, d)) => (CheckStatus::Pass, d),
            Ok((false, d)) => (CheckStatus::Fail, d),
            Err(e) => (CheckStatus::Fail, e.to_string()),
        };
        checks.push(CheckEntry {
            name: name.into(),
            status,
            detail,
        });
    };

    record("symplectic", {
        let s = verify_symplectic(&eg);
        Ok((
            s.all(),
            format!(
                "identity {}, z {}, c {}, g {}, generic F element {}",
                s.identity, s.z, s.c, s.g, s.generic_f
            ),
        ))
    });

    record(
        "dstruct",
        verify_dstruct(&eg).map(|d| {
            (
                true,
                format!(
                    "|D| = {}, x of order {}, x^r of order {}, exponent sum {}, |Z(D)| = {}",
                    d.d_order, d.x_order, d.x_r_order, d.exponent_sum, d.center_order
                ),
            )
        }),
    );

    let z_r = eg.z.pow(r);
    record(
        "fixed_points_z_r",
        eg.fixed_points(&z_r)
            .map(|fp| (fp.is_trivial(), format!("|C_F(z^r)| = {}", fp.order))),
    );
    record(
        "fixed_points_x",
        eg.fixed_points(&eg.x)
            .map(|fp| (fp.is_trivial(), format!("|C_F(x)| = {}", fp.order))),
    );
    record(
        "fixed_points_c",
        eg.fixed_points(&eg.c).map(|fp| {
            let family = fp.coord("a").dim == eg.field.degree()
                && ["b", "c", "x"].iter().all(|n| fp.coord(n).dim == 0);
            (
                family,
                format!(
                    "|C_F(c)| = {}: the family with a free in GF(q^r) and b = c = d = x = 0",
                    fp.order
                ),
            )
        }),
    );

    record(
        "centralizer_x",
        centralizer_in_g(&eg, &eg.x).map(|c| {
            let ok = c.f_part.is_trivial()
                && c.d_part.order() as u64 == r * r
                && c.d_part.contains(eg.d_group.index_of(&eg.x).unwrap());
            (ok, format!("|C_G(x)| = {} = |<x>|", c.order))
        }),
    );
    record(
        "centralizer_x_r",
        centralizer_in_g(&eg, &eg.x_r()).map(|c| {
            let ok = c.f_part.is_trivial() && c.d_part.order() == eg.d_group.order();
            (ok, format!("|C_G(x^r)| = {} = |D|", c.order))
        }),
    );
    record(
        "centralizer_c",
        centralizer_in_g(&eg, &eg.c).map(|c| {
            let dg = &eg.d_group;
            let expected_d =
                dg.closure(&[dg.index_of(&eg.c).unwrap(), dg.index_of(&eg.x_r()).unwrap()]);
            let total = BigUint::from(r * t) * &field_order;
            let ok = c.d_part.members() == expected_d.members() && c.order == total;
            (
                ok,
                format!(
                    "C_G(c) = <c, x^r> C_F(c), of order {} * {} = {}",
                    c.d_part.order(),
                    c.f_part.order,
                    c.order
                ),
            )
        }),
    );

    record(
        "m3",
        verify_m3(&eg).map(|outcome| match outcome {
            M3Outcome::Symbolic(cert) => (
                true,
                format!(
                    "entry ({},{}) of [M(a), M(b)^g] - 1 is {} * a^{} b^{}",
                    cert.row + 1,
                    cert.col + 1,
                    cert.coefficient,
                    cert.a_exp,
                    cert.b_exp
                ),
            ),
            M3Outcome::Exhaustive { field_order, pairs } => (
                true,
                format!(
                    "no symbolic certificate; exhaustive over GF({field_order}): {pairs} pairs"
                ),
            ),
        }),
    );

    record(
        "witness_path8",
        witness_path8(&eg).map(|p| {
            (
                p.length() == 8,
                format!(
                    "{} with {} commuting edges; the matching lower bound rests on the centraliser and m3 checks",
                    p.names.join(" ~ "),
                    p.length()
                ),
            )
        }),
    );

    record(
        "center_of_f",
        center_of_f(&eg.field).map(|z| {
            (
                z.free == vec!["c"] && z.order == field_order,
                format!(
                    "Z(F): free {:?}, zero {:?}, order {}",
                    z.free, z.forced_zero, z.order
                ),
            )
        }),
    );

    record("f_class3", {
        let rep = verify_f_class3(&eg.field);
        Ok((
            rep.class_is_three(),
            format!(
                "[F,F] != 1: {}, [F,F,F] != 1: {}, [F,F,F,F] = 1: {}",
                rep.commutator_entry.is_some(),
                rep.triple_entry.is_some(),
                rep.quadruple_trivial
            ),
        ))
    });

    let order = example_group_order(&params);
    record("group_order", {
        let product = f_order(&params) * BigUint::from(eg.d_group.order());
        Ok((
            product == order,
            format!("|F| |D| = {q}^{} * {} = {order}", 4 * r, eg.d_group.order()),
        ))
    });

    record(
        "not_frobenius",
        verify_not_frobenius_structure(&eg).map(|n| {
            (
                n.holds(),
                format!(
                    "|C_F(c)| = {}, D classified {} with |Z(D)| = {}",
                    n.c_f_c_order, n.d_verdict, n.d_center_order
                ),
            )
        }),
    );

    Ok(SuiteReport {
        params,
        checks,
        group_order: order.to_string(),
    })
}
