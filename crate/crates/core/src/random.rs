//! Seeded random instances for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bouquet::Bouquet;
use crate::contraction::SpanningTree;
use crate::ribbon::{Dsu, EdgeSet, Label, Occurrence, RibbonGraph, Sign};
use crate::signed_graph::SignedGraph;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    Sign::from_minus(rng.gen())
}

/// A uniformly random chord diagram on `m` chords with independent random
/// signs on every end.
pub fn random_bouquet<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Bouquet {
    let mut labels: Vec<Label> = (1..=m as Label).flat_map(|l| [l, l]).collect();
    labels.shuffle(rng);
    let seq = labels
        .into_iter()
        .map(|l| Occurrence::new(l, random_sign(rng)))
        .collect();
    Bouquet::new(seq).expect("every label appears twice")
}

/// A random connected ribbon graph with `n` vertices and `m >= n - 1` edges.
///
/// A random tree is laid down first, the remaining edges (loops allowed) join
/// uniform endpoints, labels are a random permutation of `1..=m`, every
/// rotation is shuffled and every end gets a random sign.
pub fn random_ribbon_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> RibbonGraph {
    assert!(n >= 1 && m + 1 >= n, "need n >= 1 and m >= n - 1");
    let mut ends: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    while ends.len() < m {
        ends.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let mut labels: Vec<Label> = (1..=m as Label).collect();
    labels.shuffle(rng);
    let mut rotations = vec![Vec::new(); n];
    for ((u, v), l) in ends.into_iter().zip(labels) {
        rotations[u].push(Occurrence::new(l, random_sign(rng)));
        rotations[v].push(Occurrence::new(l, random_sign(rng)));
    }
    for r in &mut rotations {
        r.shuffle(rng);
    }
    RibbonGraph::new(rotations).expect("generated graph is valid")
}

/// Random simple signed graph: each edge with probability `p`, each sign fair.
pub fn random_signed_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let signs = (0..n).map(|_| random_sign(rng)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SignedGraph::new(signs, &edges).expect("generated graph is valid")
}

/// A random spanning tree: Kruskal over a shuffled edge order.
pub fn random_spanning_tree<R: Rng + ?Sized>(
    rng: &mut R,
    graph: &RibbonGraph,
) -> crate::error::Result<SpanningTree> {
    let mut labels: Vec<Label> = graph.labels().collect();
    labels.shuffle(rng);
    let mut dsu = Dsu::new(graph.vertex_count());
    let mut edges = EdgeSet::EMPTY;
    for l in labels {
        let (u, v) = graph.endpoints(l).expect("label present");
        if dsu.union(u, v) {
            edges.insert(l);
        }
    }
    SpanningTree::new(graph, edges)
}
