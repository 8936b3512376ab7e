//! Frobenius and 2-Frobenius detection and the overall verdict for a finite
//! group: soluble groups with trivial centre have a disconnected commuting
//! graph exactly when they are Frobenius or 2-Frobenius, and otherwise the
//! graph has diameter at most 8.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::commgraph::{CommutingGraph, Distance, GraphError};
use crate::groups::{FiniteGroup, GroupElement, Subgroup};

/// Largest group order for which [`frobenius_complement`] searches.
pub const COMPLEMENT_SEARCH_LIMIT: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    HasCentre,
    NotSoluble,
    Frobenius,
    TwoFrobenius,
    ConnectedDiameter,
    DisconnectedOther,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub kind: VerdictKind,
    pub order: usize,
    /// Frobenius kernel.
    pub kernel: Option<Subgroup>,
    /// 2-Frobenius pair K < L.
    pub k: Option<Subgroup>,
    pub l: Option<Subgroup>,
    pub diameter: Option<usize>,
    pub components: Option<usize>,
}

impl ClassificationVerdict {
    fn bare(kind: VerdictKind, order: usize) -> Self {
        ClassificationVerdict {
            kind,
            order,
            kernel: None,
            k: None,
            l: None,
            diameter: None,
            components: None,
        }
    }

    /// JSON object with sorted keys; absent fields are omitted.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind));
        m.insert("order".into(), json!(self.order));
        if let Some(k) = &self.kernel {
            m.insert("kernel_order".into(), json!(k.order()));
        }
        if let Some(k) = &self.k {
            m.insert("K_order".into(), json!(k.order()));
        }
        if let Some(l) = &self.l {
            m.insert("L_order".into(), json!(l.order()));
        }
        if let Some(d) = self.diameter {
            m.insert("diameter".into(), json!(d));
        }
        if let Some(c) = self.components {
            m.insert("components".into(), json!(c));
        }
        Value::Object(m)
    }
}

/// Whether C_within(k) ≤ kernel for every nonidentity k in `kernel`.
pub fn centralizers_inside<E: GroupElement>(
    group: &FiniteGroup<E>,
    within: &Subgroup,
    kernel: &Subgroup,
) -> bool {
    kernel.members().par_iter().all(|&k| {
        k == group.identity()
            || within
                .members()
                .iter()
                .all(|&g| kernel.contains(g) || !group.commute(g, k))
    })
}

/// The Frobenius kernel of G if G is a Frobenius group. Only F(G) is tested,
/// as a Frobenius kernel is always the Fitting subgroup.
pub fn is_frobenius<E: GroupElement>(group: &FiniteGroup<E>) -> Option<Subgroup> {
    let j = group.fitting_subgroup();
    let proper = !j.is_trivial() && j.order() < group.order();
    (proper && centralizers_inside(group, &group.whole(), &j)).then_some(j)
}

/// (K, L) with K = F(G) and L/K = F(G/K) if G is 2-Frobenius.
pub fn is_two_frobenius<E: GroupElement>(group: &FiniteGroup<E>) -> Option<(Subgroup, Subgroup)> {
    let k = group.fitting_subgroup();
    if k.is_trivial() || k.order() == group.order() {
        return None;
    }
    let quotient = group.quotient(&k).ok()?;
    let q = &quotient.group;
    let lk = q.fitting_subgroup();
    if lk.is_trivial() || lk.order() == q.order() {
        return None;
    }
    let l = quotient.preimage(group, &lk);
    if !centralizers_inside(group, &l, &k) {
        return None;
    }
    if !centralizers_inside(q, &q.whole(), &lk) {
        return None;
    }
    Some((k, l))
}

/// A complement H to the kernel (|H| = [G:K], H ∩ K = 1), searched among
/// subgroups generated by at most two elements. Returns `None` above
/// [`COMPLEMENT_SEARCH_LIMIT`] or when no such subgroup exists.
pub fn frobenius_complement<E: GroupElement>(
    group: &FiniteGroup<E>,
    kernel: &Subgroup,
) -> Option<Subgroup> {
    if group.order() > COMPLEMENT_SEARCH_LIMIT {
        return None;
    }
    let m = group.order() / kernel.order();
    let candidates: Vec<usize> = (0..group.order())
        .filter(|&g| !kernel.contains(g) && m.is_multiple_of(group.element_order(g)))
        .collect();
    let meets_trivially = |h: &Subgroup| h.members().iter().all(|&x| x == 0 || !kernel.contains(x));
    // Complements are conjugate, so the first generator can be restricted to
    // conjugacy class representatives.
    let reps: Vec<usize> = group
        .conjugacy_classes()
        .into_iter()
        .map(|c| c[0])
        .filter(|g| candidates.contains(g))
        .collect();
    for &a in &reps {
        let h = group.closure(&[a]);
        if h.order() == m {
            if meets_trivially(&h) {
                return Some(h);
            }
            continue;
        }
        for &b in &candidates {
            if h.contains(b) {
                continue;
            }
            let h2 = group.closure(&[a, b]);
            if h2.order() == m && meets_trivially(&h2) {
                return Some(h2);
            }
        }
    }
    None
}

/// Verdict in priority order: centre, solubility, Frobenius, 2-Frobenius,
/// then the commuting graph itself.
pub fn classify_group<E: GroupElement>(group: &FiniteGroup<E>) -> ClassificationVerdict {
    let order = group.order();
    if !group.center().is_trivial() {
        return ClassificationVerdict::bare(VerdictKind::HasCentre, order);
    }
    if !group.is_soluble() {
        return ClassificationVerdict::bare(VerdictKind::NotSoluble, order);
    }
    if let Some(kernel) = is_frobenius(group) {
        return ClassificationVerdict {
            kernel: Some(kernel),
            ..ClassificationVerdict::bare(VerdictKind::Frobenius, order)
        };
    }
    if let Some((k, l)) = is_two_frobenius(group) {
        return ClassificationVerdict {
            k: Some(k),
            l: Some(l),
            ..ClassificationVerdict::bare(VerdictKind::TwoFrobenius, order)
        };
    }
    match CommutingGraph::build(group) {
        Ok(graph) => {
            let summary = graph.summary();
            let components = Some(summary.components.len());
            match summary.diameter {
                Distance::Finite(d) => ClassificationVerdict {
                    diameter: Some(d),
                    components,
                    ..ClassificationVerdict::bare(VerdictKind::ConnectedDiameter, order)
                },
                Distance::Infinite => ClassificationVerdict {
                    components,
                    ..ClassificationVerdict::bare(VerdictKind::DisconnectedOther, order)
                },
            }
        }
        // Only the trivial group reaches this point without vertices.
        Err(GraphError::EmptyGraph) => ClassificationVerdict {
            diameter: Some(0),
            components: Some(0),
            ..ClassificationVerdict::bare(VerdictKind::ConnectedDiameter, order)
        },
        Err(GraphError::NotAVertex) => unreachable!("build does not look up vertices"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Permutation, DEFAULT_GROUP_CAP};

    fn group(n: usize, gens: &[&[&[u32]]]) -> FiniteGroup<Permutation> {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(n, c).unwrap())
            .collect();
        FiniteGroup::generate(&gens, DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let s4 = group(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]);
        let v = classify_group(&s4);
        assert_eq!(v.kind, VerdictKind::TwoFrobenius);
        assert_eq!(v.k.as_ref().unwrap().order(), 4);
        assert_eq!(v.l.as_ref().unwrap().order(), 12);
        assert!(is_frobenius(&s4).is_none());

        let a4 = group(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        assert_eq!(is_frobenius(&a4).unwrap().order(), 4);
        assert!(is_two_frobenius(&a4).is_none());

        let s3 = group(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        assert_eq!(is_frobenius(&s3).unwrap().order(), 3);
        let kernel = is_frobenius(&s3).unwrap();
        assert_eq!(frobenius_complement(&s3, &kernel).unwrap().order(), 2);

        let d8 = group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        assert_eq!(classify_group(&d8).kind, VerdictKind::HasCentre);

        let a5 = group(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]]);
        assert_eq!(classify_group(&a5).kind, VerdictKind::NotSoluble);

        let s3s3 = group(6, &[&[&[0, 1]], &[&[0, 1, 2]], &[&[3, 4]], &[&[3, 4, 5]]]);
        assert!(is_two_frobenius(&s3s3).is_none());
        let v = classify_group(&s3s3);
        assert_eq!(v.kind, VerdictKind::ConnectedDiameter);
        assert_eq!(v.diameter, Some(3));
    }

    #[test]
    fn verdict_json_keys() {
        let s4 = group(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]);
        let text = serde_json::to_string(&classify_group(&s4).to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"K_order":4,"L_order":12,"kind":"TwoFrobenius","order":24}"#
        );
    }
}
