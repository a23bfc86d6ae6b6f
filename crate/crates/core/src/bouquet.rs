//! Bouquets (one-vertex ribbon graphs) viewed as framed chord diagrams.
//!
//! The chord-diagram text format is a single line of `2m` signed labels, for
//! example `1 2 -1 2`. Loop `l` is twisted iff its two occurrences carry
//! opposite signs.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{rank_of_words, Gf2Matrix};
use crate::ribbon::{EdgeSet, Label, Occurrence, RibbonGraph};
use crate::signed_graph::SignedGraph;

/// A one-vertex ribbon graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bouquet {
    graph: RibbonGraph,
}

impl Bouquet {
    pub fn new(sequence: Vec<Occurrence>) -> Result<Self> {
        Ok(Bouquet {
            graph: RibbonGraph::bouquet(sequence)?,
        })
    }

    pub fn empty() -> Self {
        Bouquet::new(Vec::new()).expect("empty bouquet is valid")
    }

    /// `Bouquet::from_signed(&[1, 2, -1, 2])`.
    pub fn from_signed(sequence: &[i64]) -> Result<Self> {
        Bouquet::new(
            sequence
                .iter()
                .map(|&v| Occurrence::from_signed(v))
                .collect(),
        )
    }

    /// Parses the chord-diagram format; labels must cover `1..=m` twice each.
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            records.push((
                lineno + 1,
                crate::ribbon::parse_occurrences(content, lineno + 1)?,
            ));
        }
        if records.len() > 1 {
            return Err(crate::ribbon::syntax(
                records[1].0,
                "a chord diagram is a single line of signed labels".into(),
            ));
        }
        let located: Vec<(usize, &[Occurrence])> =
            records.iter().map(|(l, o)| (*l, o.as_slice())).collect();
        crate::ribbon::check_labels(&located)?;
        Bouquet::new(records.pop().map(|(_, o)| o).unwrap_or_default())
    }

    pub fn sequence(&self) -> &[Occurrence] {
        self.graph.rotation(0)
    }

    pub fn as_graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn into_graph(self) -> RibbonGraph {
        self.graph
    }

    pub fn loop_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Loop labels in ascending order; this is the vertex order of the
    /// intersection graphs.
    pub fn loops(&self) -> Vec<Label> {
        self.graph.labels().collect()
    }

    pub fn edges(&self) -> EdgeSet {
        self.graph.edges()
    }

    /// Positions of the two ends of `label`, smaller first.
    pub fn positions(&self, label: Label) -> Option<(usize, usize)> {
        self.graph.ends(label).map(|[a, b]| (a.index, b.index))
    }

    pub fn is_twisted(&self, label: Label) -> bool {
        self.graph.is_twisted(label)
    }

    pub fn twisted_loops(&self) -> EdgeSet {
        self.graph.twisted_edges()
    }

    pub fn euler_genus(&self) -> usize {
        self.graph.euler_genus()
    }

    pub fn boundary_components(&self) -> usize {
        self.graph.boundary_components()
    }

    pub fn partial_petrial(&self, loops: EdgeSet) -> Result<Self> {
        Ok(Bouquet {
            graph: self.graph.partial_petrial(loops)?,
        })
    }

    /// True iff the ends of `a` and `b` alternate around the vertex.
    pub fn interlaced(&self, a: Label, b: Label) -> bool {
        match (self.positions(a), self.positions(b)) {
            (Some((a1, a2)), Some((b1, b2))) if a != b => {
                let inside = |p: usize| a1 < p && p < a2;
                inside(b1) != inside(b2)
            }
            _ => false,
        }
    }

    /// Interlacement rows over loop indices (ascending label order): bit `j` of
    /// row `i` is set iff loops `i` and `j` are interlaced.
    pub fn interlace_rows(&self) -> Vec<u64> {
        let loops = self.loops();
        assert!(loops.len() <= 64, "at most 64 loops");
        let pos: Vec<(usize, usize)> = loops.iter().map(|&l| self.positions(l).unwrap()).collect();
        let mut rows = vec![0u64; loops.len()];
        for i in 0..loops.len() {
            let (a1, a2) = pos[i];
            for j in i + 1..loops.len() {
                let (b1, b2) = pos[j];
                let inside = |p: usize| a1 < p && p < a2;
                if inside(b1) != inside(b2) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        rows
    }

    /// Bit `i` set iff the `i`-th loop (ascending label order) is twisted.
    pub fn twisted_mask(&self) -> u64 {
        self.loops()
            .iter()
            .enumerate()
            .filter(|(_, &l)| self.is_twisted(l))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Copy of the sequence with every label shifted by `offset`.
    fn shifted(&self, offset: Label) -> Vec<Occurrence> {
        self.sequence()
            .iter()
            .map(|o| Occurrence::new(o.label + offset, o.sign))
            .collect()
    }
}

impl TryFrom<RibbonGraph> for Bouquet {
    type Error = Error;

    fn try_from(graph: RibbonGraph) -> Result<Self> {
        if graph.vertex_count() != 1 {
            return Err(Error::NotABouquet(graph.vertex_count()));
        }
        Ok(Bouquet { graph })
    }
}

impl From<Bouquet> for RibbonGraph {
    fn from(b: Bouquet) -> Self {
        b.graph
    }
}

/// Chord-diagram form: the signed sequence on one line.
impl fmt::Display for Bouquet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, o) in self.sequence().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{o}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bouquet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bouquet({self})")
    }
}

/// `I(B)`: one vertex per loop, an edge per interlaced pair, all signs `+`.
pub fn intersection_graph(b: &Bouquet) -> SignedGraph {
    let loops = b.loops();
    let signs = vec![crate::ribbon::Sign::Plus; loops.len()];
    SignedGraph::from_parts(loops, signs, b.interlace_rows())
}

/// `SI(B)`: as [`intersection_graph`], with sign `-` exactly on twisted loops.
pub fn signed_intersection_graph(b: &Bouquet) -> SignedGraph {
    let loops = b.loops();
    let signs = loops
        .iter()
        .map(|&l| crate::ribbon::Sign::from_minus(b.is_twisted(l)))
        .collect();
    SignedGraph::from_parts(loops, signs, b.interlace_rows())
}

pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    crate::gf2::gf2_rank(m)
}

/// Euler genus of a bouquet as the GF(2) rank of `adj(SI(B))`.
pub fn genus_via_rank(b: &Bouquet) -> usize {
    let mut rows = b.interlace_rows();
    let twisted = b.twisted_mask();
    for (i, row) in rows.iter_mut().enumerate() {
        *row |= twisted & (1 << i);
    }
    rank_of_words(&mut rows)
}

/// `B1 ∨ B2`: the sequence of `b1` followed by that of `b2`, whose labels are
/// shifted past the largest label of `b1`.
pub fn join(b1: &Bouquet, b2: &Bouquet) -> Result<Bouquet> {
    let offset = b1.as_graph().max_label();
    let mut sequence = b1.sequence().to_vec();
    sequence.extend(b2.shifted(offset));
    Bouquet::new(sequence)
}
