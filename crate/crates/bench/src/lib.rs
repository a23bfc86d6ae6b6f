//! Fixtures shared by the benchmarks.

use petrial_core::random::{random_bouquet, random_ribbon_graph, seeded_rng};
use petrial_core::{Bouquet, RibbonGraph};

pub const SIX_VERTEX_EXAMPLE: &str =
    "v1: 1 8 12\nv2: 9 4 2 3 8\nv3: 11 10 5 6 9\nv4: 7 4 11\nv5: 5 2 1 6 12\nv6: 3 7 10\n";

pub fn six_vertex_example() -> RibbonGraph {
    RibbonGraph::parse(SIX_VERTEX_EXAMPLE).expect("fixture parses")
}

pub fn graph(n: usize, m: usize, seed: u64) -> RibbonGraph {
    random_ribbon_graph(&mut seeded_rng(seed), n, m)
}

pub fn bouquet(m: usize, seed: u64) -> Bouquet {
    random_bouquet(&mut seeded_rng(seed), m)
}
