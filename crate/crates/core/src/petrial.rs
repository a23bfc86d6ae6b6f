//! Partial Petrial polynomials.
//!
//! Two independent engines compute `Σ_{A ⊆ E(G)} z^{ε(G^{×|A})}`:
//!
//! * [`petrial_poly_bruteforce`] twists every subset and traces the boundary;
//! * [`petrial_poly_rank`] splits the subsets by their trace on a spanning tree
//!   `T`. For every `X ⊆ E(T)` it builds the auxiliary bouquet `Aux(G_X, T)`,
//!   takes the adjacency matrix `M_X` of its (unsigned) intersection graph and
//!   adds `z^{rank(M_X + D_Y)}` for every `Y` of non-tree loops.
//!
//! The modified polynomials weight each subset by `(-1)^{|A|}`.
//!
//! Subsets are enumerated as ascending bitmasks in chunks; chunks run on the
//! current rayon pool and their counts are summed, so results do not depend on
//! scheduling.

use rayon::prelude::*;

use crate::bouquet::Bouquet;
use crate::contraction::{aux_bouquet, spanning_tree, twist_edges, SpanningTree};
use crate::error::{Error, Result};
use crate::gf2::rank_of_words;
use crate::poly::GenusPolynomial;
use crate::ribbon::{EdgeSet, FaceTracer, RibbonGraph};
use crate::signed_graph::SignedGraph;

pub const DEFAULT_BRUTEFORCE_CAP: usize = 24;
pub const DEFAULT_RANK_CAP: usize = 30;
/// Hard ceiling for any subset sweep, caps or not.
pub const MAX_SWEEP_BITS: usize = 62;

/// Subsets per parallel work item.
const CHUNK_BITS: usize = 14;
/// One slot per possible genus or rank.
const COUNT_WIDTH: usize = 66;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Rank,
}

/// Size caps for the exponential engines. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub bruteforce_edges: usize,
    pub rank_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bruteforce_edges: DEFAULT_BRUTEFORCE_CAP,
            rank_edges: DEFAULT_RANK_CAP,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            bruteforce_edges: MAX_SWEEP_BITS,
            rank_edges: MAX_SWEEP_BITS,
        }
    }

    fn check(size: usize, cap: usize) -> Result<()> {
        let cap = cap.min(MAX_SWEEP_BITS);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(())
    }
}

fn require_connected(graph: &RibbonGraph) -> Result<()> {
    if graph.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Counts indexed by exponent, summed over parallel chunks of `0..2^bits`.
/// `visit(mask, counts)` records the contribution of one subset.
fn sweep<F>(bits: usize, visit: F) -> Vec<i64>
where
    F: Fn(u64, &mut [i64]) + Sync,
{
    let chunk_bits = bits.min(CHUNK_BITS);
    let chunks = 1u64 << (bits - chunk_bits);
    (0..chunks)
        .into_par_iter()
        .fold(
            || vec![0i64; COUNT_WIDTH],
            |mut counts, chunk| {
                let start = chunk << chunk_bits;
                for mask in start..start + (1u64 << chunk_bits) {
                    visit(mask, &mut counts);
                }
                counts
            },
        )
        .reduce(|| vec![0i64; COUNT_WIDTH], add_counts)
}

fn add_counts(mut a: Vec<i64>, b: Vec<i64>) -> Vec<i64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

#[inline]
fn parity_sign(mask: u64) -> i64 {
    if mask.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Rank of `rows + D_diag` for at most 64 rows.
#[cfg(test)]
fn rank_with_diagonal(rows: &[u64], diag: u64) -> usize {
    let mut buf = [0u64; 64];
    let k = rows.len();
    for (i, (dst, &src)) in buf.iter_mut().zip(rows).enumerate() {
        *dst = src ^ (diag & (1u64 << i));
    }
    rank_of_words(&mut buf[..k])
}

/// Rows whose diagonal is swept by the inner loop of [`accumulate_ranks`].
const LOW_ROWS: usize = 10;

/// For `y` in `start..start + 2^bits` (with `start` a multiple of `2^bits`),
/// adds `weight(y)` to `counts[rank(rows + D_{diag ^ y})]`.
///
/// The rows split into a low block, whose diagonal changes fastest, and a high
/// block. For each value of the high diagonal bits the high block is reduced
/// to echelon form once; the low rows are then reduced modulo its span, which
/// is linear in the toggled diagonal entry, leaving a rank of at most
/// [`LOW_ROWS`] rows per subset.
fn accumulate_ranks<W>(
    rows: &[u64],
    diag: u64,
    start: u64,
    bits: usize,
    weight: W,
    counts: &mut [i64],
) where
    W: Fn(u64) -> i64,
{
    let k = rows.len();
    let lo = bits.min(k).min(LOW_ROWS);
    debug_assert_eq!(start & ((1u64 << bits) - 1), 0);
    let mut basis = [0u64; 64];
    let mut reduced_base = [0u64; LOW_ROWS];
    let mut reduced_unit = [0u64; LOW_ROWS];
    let mut low = [0u64; LOW_ROWS];
    for hi in 0..1u64 << (bits - lo) {
        let y_hi = start | hi << lo;
        let d = diag ^ y_hi;
        let mut rank_hi = 0;
        for (i, &row) in rows.iter().enumerate().skip(lo) {
            let mut r = row ^ (d & (1u64 << i));
            for &b in &basis[..rank_hi] {
                let pivot = b & b.wrapping_neg();
                if r & pivot != 0 {
                    r ^= b;
                }
            }
            if r != 0 {
                basis[rank_hi] = r;
                rank_hi += 1;
            }
        }
        let reduce = |mut v: u64| {
            for &b in &basis[..rank_hi] {
                let pivot = b & b.wrapping_neg();
                if v & pivot != 0 {
                    v ^= b;
                }
            }
            v
        };
        for i in 0..lo {
            reduced_base[i] = reduce(rows[i] ^ (d & (1u64 << i)));
            reduced_unit[i] = reduce(1u64 << i);
        }
        for y_lo in 0..1u64 << lo {
            for i in 0..lo {
                let toggle = (y_lo >> i & 1).wrapping_neg();
                low[i] = reduced_base[i] ^ (reduced_unit[i] & toggle);
            }
            let r = rank_hi + rank_of_words(&mut low[..lo]);
            counts[r] += weight(y_hi | y_lo);
        }
    }
}

/// Counts `Σ_y weight(y) z^{rank(rows + D_{diag ^ y})}` over all `y` of
/// `rows.len()` bits, in parallel chunks.
fn rank_sweep<W>(rows: &[u64], diag: u64, weight: W) -> Vec<i64>
where
    W: Fn(u64) -> i64 + Sync,
{
    let bits = rows.len();
    let chunk_bits = bits.min(CHUNK_BITS);
    let chunks = 1u64 << (bits - chunk_bits);
    (0..chunks)
        .into_par_iter()
        .fold(
            || vec![0i64; COUNT_WIDTH],
            |mut counts, chunk| {
                accumulate_ranks(
                    rows,
                    diag,
                    chunk << chunk_bits,
                    chunk_bits,
                    &weight,
                    &mut counts,
                );
                counts
            },
        )
        .reduce(|| vec![0i64; COUNT_WIDTH], add_counts)
}

/// Polynomial by twisting every subset and tracing boundaries, default cap.
pub fn petrial_poly_bruteforce(graph: &RibbonGraph) -> Result<GenusPolynomial> {
    petrial_poly_bruteforce_with(graph, &Limits::default())
}

pub fn petrial_poly_bruteforce_with(
    graph: &RibbonGraph,
    limits: &Limits,
) -> Result<GenusPolynomial> {
    require_connected(graph)?;
    Limits::check(graph.edge_count(), limits.bruteforce_edges)?;
    let compact = graph.compact_labels();
    let tracer = FaceTracer::new(&compact);
    let m = compact.edge_count();
    let counts = sweep(m, |mask, counts| {
        let faces = tracer.count_petrial(EdgeSet::from_bits(mask));
        counts[compact.genus_from_faces(faces)] += 1;
    });
    Ok(GenusPolynomial::from_counts(&counts))
}

/// Polynomial via the rank decomposition over a spanning tree, default cap.
///
/// Requires a connected graph with at least two vertices; use
/// [`bouquet_rank_poly`] (or [`petrial_poly`]) for bouquets.
pub fn petrial_poly_rank(graph: &RibbonGraph, tree: &SpanningTree) -> Result<GenusPolynomial> {
    petrial_poly_rank_with(graph, tree, &Limits::default())
}

pub fn petrial_poly_rank_with(
    graph: &RibbonGraph,
    tree: &SpanningTree,
    limits: &Limits,
) -> Result<GenusPolynomial> {
    require_connected(graph)?;
    let n = graph.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            found: n,
        });
    }
    Limits::check(graph.edge_count(), limits.rank_edges)?;
    let tree = SpanningTree::new(graph, tree.edges())?;
    let tree_edges = tree.edges();
    let tree_bits = tree_edges.len();
    let loop_bits = graph.edge_count() - tree_bits;

    // Split the Y range too when there are few X values, so small trees still
    // produce enough parallel work.
    let y_chunk_bits = loop_bits.min(CHUNK_BITS);
    let y_chunks = 1u64 << (loop_bits - y_chunk_bits);
    let items = (1u64 << tree_bits) * y_chunks;

    let counts = (0..items)
        .into_par_iter()
        .map(|item| -> Result<Vec<i64>> {
            let x = tree_edges.select(item / y_chunks);
            let chunk = item % y_chunks;
            let aux = aux_bouquet(&twist_edges(graph, x)?, &tree)?;
            let rows = aux.interlace_rows();
            debug_assert_eq!(rows.len(), loop_bits);
            let mut counts = vec![0i64; COUNT_WIDTH];
            accumulate_ranks(
                &rows,
                0,
                chunk << y_chunk_bits,
                y_chunk_bits,
                |_| 1,
                &mut counts,
            );
            Ok(counts)
        })
        .try_reduce(|| vec![0i64; COUNT_WIDTH], |a, b| Ok(add_counts(a, b)))?;
    Ok(GenusPolynomial::from_counts(&counts))
}

/// `Σ_{A ⊆ loops} z^{rank(adj(I(B)) + D_A)}`.
///
/// Panics if the bouquet has more than [`MAX_SWEEP_BITS`] loops.
pub fn bouquet_rank_poly(bouquet: &Bouquet) -> GenusPolynomial {
    let rows = bouquet.interlace_rows();
    assert!(rows.len() <= MAX_SWEEP_BITS);
    let counts = rank_sweep(&rows, 0, |_| 1);
    GenusPolynomial::from_counts(&counts)
}

/// Partial Petrial polynomial with the chosen engine, checking caps.
///
/// The rank engine uses the depth-first spanning tree, and the bouquet formula
/// when the graph has a single vertex.
pub fn petrial_poly(
    graph: &RibbonGraph,
    method: Method,
    limits: &Limits,
) -> Result<GenusPolynomial> {
    match method {
        Method::BruteForce => petrial_poly_bruteforce_with(graph, limits),
        Method::Rank if graph.vertex_count() == 1 => {
            Limits::check(graph.edge_count(), limits.rank_edges)?;
            let b = Bouquet::try_from(graph.clone())?;
            Ok(bouquet_rank_poly(&b))
        }
        Method::Rank => {
            let tree = spanning_tree(graph)?;
            petrial_poly_rank_with(graph, &tree, limits)
        }
    }
}

/// `Σ_{A} (-1)^{|A|} z^{ε(B^{×|A})}`, by face tracing or by
/// `rank(adj(SI(B^{×|A})))`.
pub fn modified_poly_bouquet(bouquet: &Bouquet, method: Method) -> GenusPolynomial {
    let m = bouquet.loop_count();
    assert!(m <= MAX_SWEEP_BITS);
    let counts = match method {
        Method::Rank => {
            let rows = bouquet.interlace_rows();
            let twisted = bouquet.twisted_mask();
            rank_sweep(&rows, twisted, parity_sign)
        }
        Method::BruteForce => {
            let compact = bouquet.as_graph().compact_labels();
            let tracer = FaceTracer::new(&compact);
            sweep(m, |a, counts| {
                let faces = tracer.count_petrial(EdgeSet::from_bits(a));
                counts[compact.genus_from_faces(faces)] += parity_sign(a);
            })
        }
    };
    GenusPolynomial::from_counts(&counts)
}

/// `Σ_{A ⊆ V(S)} (-1)^{|A|} z^{rank(adj(S) + D_{X Δ A})}`, where `adj(S)` is
/// the unsigned adjacency matrix and `X` the set of negative vertices.
pub fn modified_poly_signed_graph(graph: &SignedGraph) -> GenusPolynomial {
    let rows = graph.adjacency_rows();
    assert!(rows.len() <= MAX_SWEEP_BITS);
    let negative = graph.negative_mask();
    let counts = rank_sweep(rows, negative, parity_sign);
    GenusPolynomial::from_counts(&counts)
}
