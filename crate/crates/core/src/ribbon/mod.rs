//! Ribbon graphs as signed rotation systems.
//!
//! A [`RibbonGraph`] stores, for every vertex disc, the cyclic order of the
//! half-edge occurrences attached to it. Each occurrence carries a sign; an
//! edge is twisted exactly when its two occurrences carry opposite signs.

mod edge_set;
mod faces;
mod format;

use std::fmt;
use std::ops::Neg;

pub use edge_set::EdgeSet;
pub use faces::FaceTracer;
pub(crate) use format::{check_labels, parse_occurrences, syntax};

use crate::error::{Error, Result};

/// Edge label. Labels are positive and at most [`MAX_LABEL`].
pub type Label = u32;

/// Largest supported edge label; edge sets are 64-bit masks.
pub const MAX_LABEL: Label = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_minus(minus: bool) -> Self {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One end of an edge as it appears in a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub label: Label,
    pub sign: Sign,
}

impl Occurrence {
    pub fn new(label: Label, sign: Sign) -> Self {
        Occurrence { label, sign }
    }

    pub fn plus(label: Label) -> Self {
        Occurrence::new(label, Sign::Plus)
    }

    pub fn minus(label: Label) -> Self {
        Occurrence::new(label, Sign::Minus)
    }

    /// `-3` style shorthand: negative means [`Sign::Minus`].
    pub fn from_signed(value: i64) -> Self {
        assert!(value != 0, "occurrence label must be nonzero");
        Occurrence::new(value.unsigned_abs() as Label, Sign::from_minus(value < 0))
    }

    pub fn to_signed(self) -> i64 {
        match self.sign {
            Sign::Plus => self.label as i64,
            Sign::Minus => -(self.label as i64),
        }
    }
}

impl Neg for Occurrence {
    type Output = Occurrence;

    fn neg(self) -> Occurrence {
        Occurrence::new(self.label, -self.sign)
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// Position of an occurrence: vertex index and index within its rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub vertex: usize,
    pub index: usize,
}

/// A ribbon graph given by a signed rotation system.
///
/// Vertices are numbered from 0 in input order (printed as `v1..vn`). Edge
/// labels need not be contiguous, but each label appears exactly twice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    rotations: Vec<Vec<Occurrence>>,
    /// `ends[l]` holds the two darts of label `l`, first one first in scan order.
    ends: Vec<Option<[Dart; 2]>>,
}

impl RibbonGraph {
    /// Builds a graph from per-vertex rotations.
    ///
    /// Every label must be in `1..=MAX_LABEL` and appear exactly twice. An empty
    /// rotation is only accepted for the one-vertex graph without edges.
    pub fn new(rotations: Vec<Vec<Occurrence>>) -> Result<Self> {
        if rotations.is_empty() {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        if rotations.len() > 1 && rotations.iter().any(Vec::is_empty) {
            return Err(Error::InvalidGraph(
                "empty rotation is only allowed for the empty bouquet".into(),
            ));
        }
        let mut ends: Vec<Vec<Dart>> = Vec::new();
        for (vertex, rotation) in rotations.iter().enumerate() {
            for (index, occ) in rotation.iter().enumerate() {
                if occ.label == 0 {
                    return Err(Error::InvalidGraph("edge label 0".into()));
                }
                if occ.label > MAX_LABEL {
                    return Err(Error::LabelTooLarge(occ.label));
                }
                let l = occ.label as usize;
                if ends.len() <= l {
                    ends.resize(l + 1, Vec::new());
                }
                ends[l].push(Dart { vertex, index });
            }
        }
        let ends = ends
            .into_iter()
            .enumerate()
            .map(|(l, darts)| match darts.len() {
                0 => Ok(None),
                2 => Ok(Some([darts[0], darts[1]])),
                n => Err(Error::InvalidGraph(format!(
                    "label {l} appears {n} times, expected exactly 2"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RibbonGraph { rotations, ends })
    }

    /// One vertex with the given cyclic sequence.
    pub fn bouquet(sequence: Vec<Occurrence>) -> Result<Self> {
        RibbonGraph::new(vec![sequence])
    }

    /// Shorthand used throughout the tests: `from_signed(&[&[1, -1]])`.
    pub fn from_signed(rotations: &[&[i64]]) -> Result<Self> {
        RibbonGraph::new(
            rotations
                .iter()
                .map(|r| r.iter().map(|&v| Occurrence::from_signed(v)).collect())
                .collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        format::parse(text)
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn rotations(&self) -> &[Vec<Occurrence>] {
        &self.rotations
    }

    pub fn rotation(&self, vertex: usize) -> &[Occurrence] {
        &self.rotations[vertex]
    }

    pub fn into_rotations(self) -> Vec<Vec<Occurrence>> {
        self.rotations
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.iter().filter(|e| e.is_some()).count()
    }

    pub fn max_label(&self) -> Label {
        self.ends.iter().rposition(Option::is_some).unwrap_or(0) as Label
    }

    pub fn edges(&self) -> EdgeSet {
        self.labels().collect()
    }

    /// Edge labels in ascending order.
    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.ends
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_some())
            .map(|(l, _)| l as Label)
    }

    pub fn has_edge(&self, label: Label) -> bool {
        self.ends(label).is_some()
    }

    pub fn ends(&self, label: Label) -> Option<[Dart; 2]> {
        self.ends.get(label as usize).copied().flatten()
    }

    fn occurrence(&self, dart: Dart) -> Occurrence {
        self.rotations[dart.vertex][dart.index]
    }

    /// The two vertices joined by `label`.
    pub fn endpoints(&self, label: Label) -> Option<(usize, usize)> {
        self.ends(label).map(|[a, b]| (a.vertex, b.vertex))
    }

    pub fn is_loop(&self, label: Label) -> bool {
        matches!(self.endpoints(label), Some((u, v)) if u == v)
    }

    pub fn is_twisted(&self, label: Label) -> bool {
        self.ends(label)
            .is_some_and(|[a, b]| self.occurrence(a).sign != self.occurrence(b).sign)
    }

    pub fn twisted_edges(&self) -> EdgeSet {
        self.labels().filter(|&l| self.is_twisted(l)).collect()
    }

    pub fn is_bouquet(&self) -> bool {
        self.rotations.len() == 1
    }

    /// Number of boundary curves `|F(G)|` of the ribbon surface.
    pub fn boundary_components(&self) -> usize {
        FaceTracer::new(self).count()
    }

    /// Components of the underlying multigraph.
    pub fn connected_components(&self) -> usize {
        let mut dsu = Dsu::new(self.vertex_count());
        for l in self.labels() {
            let (u, v) = self.endpoints(l).expect("label present");
            dsu.union(u, v);
        }
        dsu.components()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Euler genus `2c(G) - (|V| - |E| + |F|)`.
    pub fn euler_genus(&self) -> usize {
        self.genus_from_faces(self.boundary_components())
    }

    /// Euler genus of a graph with this vertex/edge/component count and
    /// `faces` boundary components.
    pub fn genus_from_faces(&self, faces: usize) -> usize {
        let c = self.connected_components() as i64;
        let chi = self.vertex_count() as i64 - self.edge_count() as i64 + faces as i64;
        let genus = 2 * c - chi;
        debug_assert!(genus >= 0);
        genus as usize
    }

    /// The partial Petrial `G^{×|A}`: twist every edge in `edges`.
    ///
    /// The sign of the later occurrence (in scan order) of each edge is
    /// negated, so applying the same set twice restores the original rotations.
    pub fn partial_petrial(&self, edges: EdgeSet) -> Result<Self> {
        let mut rotations = self.rotations.clone();
        for l in edges.iter() {
            let [_, second] = self.ends(l).ok_or(Error::UnknownLabel(l))?;
            let occ = &mut rotations[second.vertex][second.index];
            occ.sign = -occ.sign;
        }
        Ok(RibbonGraph {
            rotations,
            ends: self.ends.clone(),
        })
    }

    /// Relabels edges to `1..=m`, keeping their relative order.
    pub fn compact_labels(&self) -> Self {
        let mut map = vec![0 as Label; self.ends.len()];
        for (i, l) in self.labels().enumerate() {
            map[l as usize] = i as Label + 1;
        }
        let rotations = self
            .rotations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|o| Occurrence::new(map[o.label as usize], o.sign))
                    .collect()
            })
            .collect();
        RibbonGraph::new(rotations).expect("relabelling preserves validity")
    }
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonGraph({})", self.to_string().replace('\n', " / "))
    }
}

#[derive(Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}
