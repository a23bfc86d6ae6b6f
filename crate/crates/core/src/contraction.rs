//! Spanning trees, edge contraction and the auxiliary bouquet.

use crate::bouquet::Bouquet;
use crate::error::{Error, Result};
use crate::ribbon::{Dsu, EdgeSet, Label, Occurrence, RibbonGraph};

/// A set of `n - 1` non-loop edges forming a spanning tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    edges: EdgeSet,
}

impl SpanningTree {
    /// Validates `edges` as a spanning tree of `graph`.
    pub fn new(graph: &RibbonGraph, edges: EdgeSet) -> Result<Self> {
        let n = graph.vertex_count();
        let mut dsu = Dsu::new(n);
        for l in edges.iter() {
            let (u, v) = graph.endpoints(l).ok_or(Error::UnknownLabel(l))?;
            if u == v {
                return Err(Error::NotATree(format!("edge {l} is a loop")));
            }
            if !dsu.union(u, v) {
                return Err(Error::NotATree(format!("edge {l} closes a cycle")));
            }
        }
        if edges.len() + 1 != n {
            return Err(Error::NotATree(format!(
                "{} edges do not span {n} vertices",
                edges.len()
            )));
        }
        Ok(SpanningTree { edges })
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Non-loop incident edges per vertex, ascending by label.
fn incidence(graph: &RibbonGraph) -> Vec<Vec<(Label, usize)>> {
    let mut adj = vec![Vec::new(); graph.vertex_count()];
    for l in graph.labels() {
        let (u, v) = graph.endpoints(l).expect("label present");
        if u != v {
            adj[u].push((l, v));
            adj[v].push((l, u));
        }
    }
    adj
}

/// Depth-first spanning tree from `v1`, trying incident edges in ascending
/// label order.
pub fn spanning_tree(graph: &RibbonGraph) -> Result<SpanningTree> {
    let adj = incidence(graph);
    let n = graph.vertex_count();
    let mut visited = vec![false; n];
    let mut edges = EdgeSet::EMPTY;
    let mut stack = vec![(0usize, 0usize)];
    visited[0] = true;
    while let Some((v, next)) = stack.last_mut() {
        let v = *v;
        if let Some(&(l, w)) = adj[v].get(*next) {
            *next += 1;
            if !visited[w] {
                visited[w] = true;
                edges.insert(l);
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    if visited.iter().any(|&seen| !seen) {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree { edges })
}

/// Every spanning tree of `graph`, up to `limit` of them, in lexicographic
/// order of their sorted label lists.
pub fn all_spanning_trees(graph: &RibbonGraph, limit: usize) -> Result<Vec<SpanningTree>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let candidates: Vec<(Label, usize, usize)> = graph
        .labels()
        .filter_map(|l| {
            let (u, v) = graph.endpoints(l)?;
            (u != v).then_some((l, u, v))
        })
        .collect();
    let need = graph.vertex_count() - 1;
    let mut out = Vec::new();

    fn search(
        candidates: &[(Label, usize, usize)],
        start: usize,
        need: usize,
        dsu: &Dsu,
        chosen: EdgeSet,
        limit: usize,
        out: &mut Vec<SpanningTree>,
    ) {
        if out.len() >= limit {
            return;
        }
        if chosen.len() == need {
            out.push(SpanningTree { edges: chosen });
            return;
        }
        for i in start..candidates.len() {
            if candidates.len() - i < need - chosen.len() {
                break;
            }
            let (l, u, v) = candidates[i];
            let mut next = dsu.clone();
            if next.union(u, v) {
                let mut with = chosen;
                with.insert(l);
                search(candidates, i + 1, need, &next, with, limit, out);
            }
        }
    }

    search(
        &candidates,
        0,
        need,
        &Dsu::new(graph.vertex_count()),
        EdgeSet::EMPTY,
        limit,
        &mut out,
    );
    Ok(out)
}

/// Contracts the non-loop edge `e` joining `u` and `v`.
///
/// With `u` holding the first occurrence of `e` in scan order, the rotations
/// are read as `u = (e, A)` and `v = (e, B)`, each starting at the occurrence
/// of `e`. The merged vertex, placed at `u`'s index, reads `(A, B)` when `e` is
/// untwisted and `(A, B⁻¹)` when twisted, where `B⁻¹` is `B` reversed with
/// every sign negated.
pub fn contract_edge(graph: &RibbonGraph, e: Label) -> Result<RibbonGraph> {
    let [first, second] = graph.ends(e).ok_or(Error::UnknownLabel(e))?;
    if first.vertex == second.vertex {
        return Err(Error::LoopEdge(e));
    }
    let after = |vertex: usize, index: usize| -> Vec<Occurrence> {
        let r = graph.rotation(vertex);
        r[index + 1..].iter().chain(&r[..index]).copied().collect()
    };
    let mut merged = after(first.vertex, first.index);
    let tail = after(second.vertex, second.index);
    if graph.is_twisted(e) {
        merged.extend(tail.into_iter().rev().map(|o| -o));
    } else {
        merged.extend(tail);
    }
    let mut rotations = graph.rotations().to_vec();
    rotations[first.vertex] = merged;
    rotations.remove(second.vertex);
    RibbonGraph::new(rotations)
}

/// Contracts the edges in the given order.
pub fn contract_edges(graph: &RibbonGraph, order: &[Label]) -> Result<RibbonGraph> {
    order
        .iter()
        .try_fold(graph.clone(), |g, &e| contract_edge(&g, e))
}

/// `Aux(G, T)`: contract every tree edge, in ascending label order.
pub fn aux_bouquet(graph: &RibbonGraph, tree: &SpanningTree) -> Result<Bouquet> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    SpanningTree::new(graph, tree.edges())?;
    let order: Vec<Label> = tree.edges().iter().collect();
    Bouquet::try_from(contract_edges(graph, &order)?)
}

/// `G_X`: twist every edge of `edges`. Same operation as the partial Petrial.
pub fn twist_edges(graph: &RibbonGraph, edges: EdgeSet) -> Result<RibbonGraph> {
    graph.partial_petrial(edges)
}
