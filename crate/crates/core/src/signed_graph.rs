//! Simple graphs with a `±` sign on every vertex.
//!
//! Text format:
//!
//! ```text
//! signs: + - +
//! edges: 1-2, 2-3
//! ```
//!
//! Vertices are numbered `1..=n` in the order of the `signs` line.

use std::fmt;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::gf2::Gf2Matrix;
use crate::ribbon::{Label, Sign};

/// Largest supported vertex count; adjacency rows are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// A simple signed graph. Vertices carry a name (the loop label when the graph
/// is a signed intersection graph) and are indexed `0..n` in ascending-name
/// order for bouquet-derived graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    names: Vec<Label>,
    signs: Vec<Sign>,
    adj: Vec<u64>,
}

impl SignedGraph {
    /// Vertices named `1..=n`; `edges` are 0-based index pairs.
    pub fn new(signs: Vec<Sign>, edges: &[(usize, usize)]) -> Result<Self> {
        let names = (1..=signs.len() as Label).collect();
        Self::with_names(names, signs, edges)
    }

    pub fn with_names(
        names: Vec<Label>,
        signs: Vec<Sign>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let n = signs.len();
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                size: n,
                cap: MAX_VERTICES,
            });
        }
        assert_eq!(names.len(), n, "one name per vertex");
        let mut g = SignedGraph {
            names,
            signs,
            adj: vec![0; n],
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u + 1));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v + 1));
            }
            if u == v {
                return Err(Error::SamePair(u + 1));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Graph from sign bits and an adjacency mask per vertex.
    pub(crate) fn from_parts(names: Vec<Label>, signs: Vec<Sign>, adj: Vec<u64>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(i, r)| r >> i & 1 == 0));
        SignedGraph { names, signs, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.signs.len()
    }

    pub fn names(&self) -> &[Label] {
        &self.names
    }

    pub fn name(&self, index: usize) -> Label {
        self.names[index]
    }

    pub fn index_of(&self, name: Label) -> Result<usize> {
        self.names
            .iter()
            .position(|&n| n == name)
            .ok_or(Error::UnknownVertex(name as usize))
    }

    pub fn sign(&self, index: usize) -> Sign {
        self.signs[index]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn set_sign(&mut self, index: usize, sign: Sign) {
        self.signs[index] = sign;
    }

    /// Bit `i` set iff vertex `i` is negative.
    pub fn negative_mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_minus())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "simple graphs have no loops");
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        let present = self.has_edge(u, v);
        self.set_edge(u, v, !present);
    }

    /// Neighbourhood of `v` as a bitmask of indices.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|u| {
                (u + 1..n)
                    .filter(move |&v| self.has_edge(u, v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Adjacency rows without the signed diagonal.
    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    /// Adjacency matrix over GF(2) with `1` on the diagonal of negative vertices.
    pub fn adjacency_gf2(&self) -> Gf2Matrix {
        let n = self.vertex_count();
        Gf2Matrix::from_fn(n, |i, j| {
            if i == j {
                self.signs[i].is_minus()
            } else {
                self.has_edge(i, j)
            }
        })
    }

    /// Adjacency matrix of the underlying unsigned graph (zero diagonal).
    pub fn adjacency_unsigned(&self) -> Gf2Matrix {
        Gf2Matrix::from_fn(self.vertex_count(), |i, j| self.has_edge(i, j))
    }

    /// Reads a graph back from a symmetric matrix: off-diagonal entries are
    /// edges, diagonal entries are negative signs.
    pub fn from_adjacency(names: Vec<Label>, m: &Gf2Matrix) -> Self {
        assert!(m.is_symmetric());
        let n = m.size();
        let signs = (0..n).map(|i| Sign::from_minus(m.get(i, i))).collect();
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && m.get(i, j))
                    .fold(0u64, |r, j| r | 1 << j)
            })
            .collect();
        SignedGraph::from_parts(names, signs, adj)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut signs: Option<(usize, Vec<Sign>)> = None;
        let mut edges: Option<(usize, Vec<(usize, usize)>)> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, body) = content.split_once(':').ok_or_else(|| {
                syntax(
                    line,
                    format!("expected `signs:` or `edges:`, found `{content}`"),
                )
            })?;
            match key.trim() {
                "signs" if signs.is_none() => {
                    let parsed = body
                        .split_whitespace()
                        .map(|t| match t {
                            "+" => Ok(Sign::Plus),
                            "-" => Ok(Sign::Minus),
                            other => Err(syntax(line, format!("bad sign `{other}`"))),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    signs = Some((line, parsed));
                }
                "edges" if edges.is_none() => {
                    let mut parsed = Vec::new();
                    for token in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                        let (a, b) = token
                            .split_once('-')
                            .ok_or_else(|| syntax(line, format!("bad edge `{token}`")))?;
                        let parse_vertex = |s: &str| {
                            s.trim()
                                .parse::<usize>()
                                .map_err(|_| syntax(line, format!("bad vertex `{s}`")))
                        };
                        parsed.push((parse_vertex(a)?, parse_vertex(b)?));
                    }
                    edges = Some((line, parsed));
                }
                other => {
                    return Err(syntax(
                        line,
                        format!("unexpected or repeated key `{other}`"),
                    ))
                }
            }
        }
        let (_, signs) = signs.ok_or_else(|| ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::Syntax("missing `signs:` line".into()),
        })?;
        let (edge_line, edge_list) = edges.unwrap_or((0, Vec::new()));
        let n = signs.len();
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let mut graph = SignedGraph::new(signs, &[])?;
        for (a, b) in edge_list {
            let err = |kind| -> Error {
                ParseError {
                    line: edge_line,
                    kind,
                }
                .into()
            };
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v, max: n }));
                }
            }
            if a == b {
                return Err(err(ParseErrorKind::SelfLoop(a)));
            }
            if graph.has_edge(a - 1, b - 1) {
                return Err(err(ParseErrorKind::DuplicateEdge(a.min(b), a.max(b))));
            }
            graph.set_edge(a - 1, b - 1, true);
        }
        Ok(graph)
    }
}

fn syntax(line: usize, message: String) -> Error {
    ParseError {
        line,
        kind: ParseErrorKind::Syntax(message),
    }
    .into()
}

/// The text format; vertex names are not written, vertices print as `1..=n`.
impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "signs:")?;
        for s in &self.signs {
            write!(f, " {s}")?;
        }
        write!(f, "\nedges:")?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}-{}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SignedGraph(names {:?}; {})",
            self.names,
            self.to_string().replace('\n', "; ")
        )
    }
}

/// Free-function form of [`SignedGraph::adjacency_gf2`].
pub fn adjacency_gf2(graph: &SignedGraph) -> Gf2Matrix {
    graph.adjacency_gf2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_examples() {
        let g = SignedGraph::new(vec![Sign::Plus; 3], &[]).unwrap();
        assert_eq!(g.adjacency_gf2(), Gf2Matrix::zeros(3));
        let g = SignedGraph::new(vec![Sign::Minus], &[]).unwrap();
        assert_eq!(g.adjacency_gf2(), Gf2Matrix::from_rows(&[[1]]));
        let g = SignedGraph::new(vec![Sign::Plus; 2], &[(0, 1)]).unwrap();
        assert_eq!(g.adjacency_gf2(), Gf2Matrix::from_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn text_round_trip() {
        let text = "signs: + - +\nedges: 1-2, 2-3";
        let g = SignedGraph::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(g.sign(1), Sign::Minus);
        assert_eq!(g.to_string(), text);
        assert_eq!(SignedGraph::parse(&g.to_string()).unwrap(), g);
        let empty = SignedGraph::parse("signs: +\nedges:").unwrap();
        assert_eq!(empty.to_string(), "signs: +\nedges:");
    }

    #[test]
    fn parse_errors_carry_lines() {
        let at = |text: &str| match SignedGraph::parse(text).unwrap_err() {
            Error::Parse(p) => (p.line, p.kind),
            e => panic!("{e:?}"),
        };
        assert_eq!(at("signs: + +\nedges: 1-1").1, ParseErrorKind::SelfLoop(1));
        assert_eq!(
            at("signs: + +\nedges: 1-2, 2-1").1,
            ParseErrorKind::DuplicateEdge(1, 2)
        );
        assert_eq!(
            at("signs: + +\nedges: 1-3"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 3, max: 2 })
        );
        assert_eq!(at("signs: + x").0, 1);
        assert_eq!(at("edges: 1-2").0, 1);
    }

    #[test]
    fn matrix_round_trip() {
        let g = SignedGraph::parse("signs: - + + -\nedges: 1-2, 1-4, 3-4").unwrap();
        let back = SignedGraph::from_adjacency(g.names().to_vec(), &g.adjacency_gf2());
        assert_eq!(back, g);
    }
}
