//! The commuting graph on the non-central elements of a finite group.
//!
//! Vertices with equal centralisers are interchangeable, so the graph is
//! stored as a quotient: one node per centraliser class, with class
//! adjacency decided by representatives. Distances between elements of
//! distinct classes equal quotient distances; distinct elements of one class
//! commute and are at distance 1.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::groups::{FiniteGroup, GroupElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("the group is abelian, so its commuting graph has no vertices")]
    EmptyGraph,
    #[error("element is central or not in the group")]
    NotAVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport<E> {
    pub source: E,
    pub target: E,
    pub distance: Distance,
    /// Empty when the distance is infinite.
    pub path: Vec<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSummary {
    /// Connected components as lists of class indices.
    pub components: Vec<Vec<usize>>,
    pub diameter: Distance,
}

#[derive(Debug)]
pub struct CommutingGraph<'g, E: GroupElement> {
    group: &'g FiniteGroup<E>,
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    class_of: Vec<Option<usize>>,
    adjacency: Vec<Vec<usize>>,
}

impl<'g, E: GroupElement> CommutingGraph<'g, E> {
    pub fn build(group: &'g FiniteGroup<E>) -> Result<Self, GraphError> {
        let n = group.order();
        let words = n.div_ceil(64);
        let keys: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut bits = vec![0u64; words];
                for g in 0..n {
                    if group.commute(g, x) {
                        bits[g / 64] |= 1 << (g % 64);
                    }
                }
                bits
            })
            .collect();
        let central = |x: usize| {
            keys[x]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum::<usize>()
                == n
        };

        let mut by_key: HashMap<&[u64], usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, key) in keys.iter().enumerate() {
            if central(x) {
                continue;
            }
            let id = *by_key.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(x);
        }
        if classes.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut reps: Vec<usize> = classes
            .iter()
            .map(|c| group.least_canonical(c).unwrap())
            .collect();
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&i| group.canonical_rank(reps[i]));
        classes = order.iter().map(|&i| classes[i].clone()).collect();
        reps = order.iter().map(|&i| reps[i]).collect();

        let mut class_of = vec![None; n];
        for (id, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = Some(id);
            }
        }
        let m = classes.len();
        let adjacency: Vec<Vec<usize>> = (0..m)
            .into_par_iter()
            .map(|i| {
                let bits = &keys[reps[i]];
                (0..m)
                    .filter(|&j| j != i && bits[reps[j] / 64] >> (reps[j] % 64) & 1 == 1)
                    .collect()
            })
            .collect();
        Ok(CommutingGraph {
            group,
            classes,
            reps,
            class_of,
            adjacency,
        })
    }

    pub fn group(&self) -> &FiniteGroup<E> {
        self.group
    }

    pub fn num_vertices(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Centraliser classes as element indices, ordered by least canonical
    /// member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn class_adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.class_of.get(x).copied().flatten()
    }

    pub fn is_vertex(&self, x: usize) -> bool {
        self.class_of(x).is_some()
    }

    /// Adjacency on element indices: distinct commuting vertices.
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        x != y && self.is_vertex(x) && self.is_vertex(y) && self.group.commute(x, y)
    }

    /// BFS over classes from `start`; neighbours are visited in ascending
    /// class order. Returns distances and BFS parents.
    fn class_bfs(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let m = self.classes.len();
        let mut dist = vec![usize::MAX; m];
        let mut parent = vec![usize::MAX; m];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for &nb in &self.adjacency[c] {
                if dist[nb] == usize::MAX {
                    dist[nb] = dist[c] + 1;
                    parent[nb] = c;
                    queue.push_back(nb);
                }
            }
        }
        (dist, parent)
    }

    /// Distance and a shortest path between two vertices given by index.
    pub fn distance_indices(
        &self,
        x: usize,
        y: usize,
    ) -> Result<(Distance, Vec<usize>), GraphError> {
        let cx = self.class_of(x).ok_or(GraphError::NotAVertex)?;
        let cy = self.class_of(y).ok_or(GraphError::NotAVertex)?;
        if x == y {
            return Ok((Distance::Finite(0), vec![x]));
        }
        if cx == cy || self.group.commute(x, y) {
            return Ok((Distance::Finite(1), vec![x, y]));
        }
        let (dist, parent) = self.class_bfs(cx);
        if dist[cy] == usize::MAX {
            return Ok((Distance::Infinite, Vec::new()));
        }
        let mut inner = Vec::new();
        let mut c = parent[cy];
        while c != cx {
            inner.push(self.reps[c]);
            c = parent[c];
        }
        inner.reverse();
        let mut path = vec![x];
        path.extend(inner);
        path.push(y);
        Ok((Distance::Finite(dist[cy]), path))
    }

    pub fn distance(&self, x: &E, y: &E) -> Result<DistanceReport<E>, GraphError> {
        let xi = self.group.index_of(x).ok_or(GraphError::NotAVertex)?;
        let yi = self.group.index_of(y).ok_or(GraphError::NotAVertex)?;
        let (distance, path) = self.distance_indices(xi, yi)?;
        Ok(DistanceReport {
            source: x.clone(),
            target: y.clone(),
            distance,
            path: path
                .iter()
                .map(|&i| self.group.element(i).clone())
                .collect(),
        })
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.classes.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let (dist, _) = self.class_bfs(start);
            let comp: Vec<usize> = (0..m).filter(|&c| dist[c] != usize::MAX).collect();
            for &c in &comp {
                seen[c] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Element indices of each component.
    pub fn component_vertices(&self, components: &[Vec<usize>]) -> Vec<Vec<usize>> {
        components
            .iter()
            .map(|comp| {
                let mut v: Vec<usize> =
                    comp.iter().flat_map(|&c| self.classes[c].clone()).collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// Largest distance from any vertex of `class` to any other vertex.
    pub fn eccentricity(&self, class: usize) -> Distance {
        let (dist, _) = self.class_bfs(class);
        if dist.contains(&usize::MAX) {
            return Distance::Infinite;
        }
        let quotient = dist.into_iter().max().unwrap_or(0);
        let within = usize::from(self.classes[class].len() > 1);
        Distance::Finite(quotient.max(within))
    }

    pub fn summary(&self) -> GraphSummary {
        let components = self.components();
        let diameter = if components.len() > 1 {
            Distance::Infinite
        } else {
            (0..self.classes.len())
                .into_par_iter()
                .map(|c| self.eccentricity(c))
                .max()
                .unwrap_or(Distance::Finite(0))
        };
        GraphSummary {
            components,
            diameter,
        }
    }

    /// Export as `{"classes", "edges", "diameter", "components"}` with class
    /// representatives rendered by `render`.
    pub fn export_json(&self, render: impl Fn(&E) -> Value) -> Value {
        let summary = self.summary();
        let classes: Vec<Value> = self
            .classes
            .iter()
            .zip(&self.reps)
            .map(|(c, &r)| json!({"rep": render(self.group.element(r)), "size": c.len()}))
            .collect();
        let edges: Vec<[usize; 2]> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbs)| nbs.iter().filter(move |&&j| j > i).map(move |&j| [i, j]))
            .collect();
        json!({
            "classes": classes,
            "components": summary.components.len(),
            "diameter": summary.diameter,
            "edges": edges,
        })
    }
}
