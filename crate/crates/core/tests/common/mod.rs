#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::{Path, PathBuf};

use commgraph_core::groups::{Element, FiniteGroup, GroupElement, GroupHandle};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every bundled group as (file stem, enumerated group), sorted by name.
pub fn corpus() -> Vec<(String, FiniteGroup<Element>)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| (stem(p), load(p))).collect()
}

pub fn corpus_group(name: &str) -> FiniteGroup<Element> {
    load(&corpus_dir().join(format!("{name}.json")))
}

fn stem(p: &Path) -> String {
    p.file_stem().unwrap().to_str().unwrap().to_string()
}

fn load(p: &Path) -> FiniteGroup<Element> {
    let text = std::fs::read_to_string(p).unwrap();
    GroupHandle::from_json(&text)
        .unwrap()
        .materialize()
        .unwrap()
        .clone()
}

/// All-pairs distances by BFS from every vertex, with commuting decided by
/// multiplying the elements themselves.
pub fn naive_distances(group: &FiniteGroup<Element>) -> (Vec<usize>, Vec<Vec<Option<usize>>>) {
    let elems = group.elements();
    let n = elems.len();
    let central: Vec<bool> = elems
        .iter()
        .map(|a| elems.iter().all(|b| a.compose(b) == b.compose(a)))
        .collect();
    let vertices: Vec<usize> = (0..n).filter(|&i| !central[i]).collect();
    let adj: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&i| {
            vertices
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, j)| {
                    j != i && elems[i].compose(&elems[j]) == elems[j].compose(&elems[i])
                })
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let dist = (0..vertices.len())
        .map(|s| {
            let mut d = vec![None; vertices.len()];
            d[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect();
    (vertices, dist)
}
