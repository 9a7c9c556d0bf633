//! Fixtures shared by the benchmarks.

use reflexive_core::{catalog, GkmGraph, Polytope, RationalPoint};

/// Catalog polytopes by name, built once per benchmark group.
pub fn polytopes(names: &[&'static str]) -> Vec<(&'static str, Polytope)> {
    names
        .iter()
        .map(|&n| (n, catalog::polytope(n).expect("catalog entry")))
        .collect()
}

pub fn graphs(names: &[&'static str]) -> Vec<(&'static str, GkmGraph)> {
    names
        .iter()
        .map(|&n| (n, catalog::graph(n).expect("catalog entry")))
        .collect()
}

/// Vertex list of a catalog polytope, for timing the hull from scratch.
pub fn vertex_list(name: &str) -> Vec<RationalPoint> {
    catalog::polytope(name)
        .expect("catalog entry")
        .vertices()
        .to_vec()
}
