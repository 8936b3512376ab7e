//! The class-quotient distance engine against brute-force BFS on the full
//! commuting graph.

mod common;

use commgraph_core::commgraph::{CommutingGraph, Distance};

#[test]
fn quotient_engine_matches_naive_bfs_on_corpus() {
    let mut compared = 0;
    for (name, group) in common::corpus() {
        let (vertices, naive) = common::naive_distances(&group);
        let Ok(graph) = CommutingGraph::build(&group) else {
            assert!(
                vertices.is_empty(),
                "{name}: build failed with vertices present"
            );
            continue;
        };
        assert_eq!(graph.num_vertices(), vertices.len(), "{name}");
        let mut diameter = Some(0);
        for (a, &x) in vertices.iter().enumerate() {
            for (b, &y) in vertices.iter().enumerate() {
                let (d, path) = graph.distance_indices(x, y).unwrap();
                match naive[a][b] {
                    Some(expected) => {
                        assert_eq!(d, Distance::Finite(expected), "{name}: {x} -> {y}");
                        assert_eq!(path.len(), expected + 1);
                        assert_eq!((path[0], *path.last().unwrap()), (x, y));
                        for w in path.windows(2) {
                            assert!(
                                w[0] != w[1] && group.commute(w[0], w[1]),
                                "{name}: bad edge"
                            );
                            assert!(graph.is_vertex(w[1]));
                        }
                        diameter = diameter.map(|m: usize| m.max(expected));
                    }
                    None => {
                        assert_eq!(d, Distance::Infinite, "{name}: {x} -> {y}");
                        diameter = None;
                    }
                }
                compared += 1;
            }
        }
        let summary = graph.summary();
        let expected = diameter.map_or(Distance::Infinite, Distance::Finite);
        assert_eq!(summary.diameter, expected, "{name}");
        let components = {
            let mut seen = vec![false; vertices.len()];
            let mut count = 0;
            for s in 0..vertices.len() {
                if !seen[s] {
                    count += 1;
                    for (t, d) in naive[s].iter().enumerate() {
                        if d.is_some() {
                            seen[t] = true;
                        }
                    }
                }
            }
            count
        };
        assert_eq!(summary.components.len(), components, "{name}");
    }
    assert!(compared > 50_000);
}
