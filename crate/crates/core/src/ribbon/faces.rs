//! Boundary tracing on the ribbon surface.
//!
//! Every half-edge occurrence `o` (numbered in scan order: vertex by vertex,
//! position by position) owns two boundary points where its ribbon meets the
//! vertex disc:
//!
//! * side 0, point `2o`: the corner shared with the *preceding* occurrence in
//!   the rotation;
//! * side 1, point `2o + 1`: the corner shared with the *following* occurrence.
//!
//! The boundary of the surface is the union of two perfect matchings on these
//! points. Vertex arcs join side 1 of an occurrence to side 0 of its cyclic
//! successor. Ribbon sides join the two ends of an edge: an untwisted ribbon
//! joins side 1 to side 0 and side 0 to side 1, a twisted ribbon joins equal
//! sides. Every boundary curve is an alternating cycle of the two matchings, so
//! counting cycles counts boundary components.

use super::{EdgeSet, Label, RibbonGraph};

/// Precomputed boundary structure of a ribbon graph, reusable across twist
/// patterns of the same rotation system.
#[derive(Debug, Clone)]
pub struct FaceTracer {
    arc: Vec<u32>,
    straight: Vec<u32>,
    crossed: Vec<u32>,
    label: Vec<Label>,
    base_twisted: EdgeSet,
    isolated: usize,
}

impl FaceTracer {
    pub fn new(graph: &RibbonGraph) -> Self {
        let occurrences: usize = graph.rotations().iter().map(Vec::len).sum();
        let points = 2 * occurrences;
        let mut arc = vec![0u32; points];
        let mut straight = vec![0u32; points];
        let mut crossed = vec![0u32; points];
        let mut label = vec![0 as Label; points];
        let mut first_seen: Vec<Option<usize>> = vec![None; graph.max_label() as usize + 1];
        let mut isolated = 0;

        let mut base = 0usize;
        for rotation in graph.rotations() {
            let k = rotation.len();
            if k == 0 {
                isolated += 1;
                continue;
            }
            for (i, occ) in rotation.iter().enumerate() {
                let o = base + i;
                let next = base + (i + 1) % k;
                arc[2 * o + 1] = (2 * next) as u32;
                arc[2 * next] = (2 * o + 1) as u32;
                label[2 * o] = occ.label;
                label[2 * o + 1] = occ.label;
                match first_seen[occ.label as usize] {
                    None => first_seen[occ.label as usize] = Some(o),
                    Some(p) => {
                        straight[2 * p + 1] = (2 * o) as u32;
                        straight[2 * o] = (2 * p + 1) as u32;
                        straight[2 * p] = (2 * o + 1) as u32;
                        straight[2 * o + 1] = (2 * p) as u32;
                        crossed[2 * p] = (2 * o) as u32;
                        crossed[2 * o] = (2 * p) as u32;
                        crossed[2 * p + 1] = (2 * o + 1) as u32;
                        crossed[2 * o + 1] = (2 * p + 1) as u32;
                    }
                }
            }
            base += k;
        }

        FaceTracer {
            arc,
            straight,
            crossed,
            label,
            base_twisted: graph.twisted_edges(),
            isolated,
        }
    }

    /// Boundary components of the graph as given.
    pub fn count(&self) -> usize {
        self.count_with_twisted(self.base_twisted)
    }

    /// Boundary components of the partial Petrial with respect to `toggled`.
    pub fn count_petrial(&self, toggled: EdgeSet) -> usize {
        self.count_with_twisted(self.base_twisted.symmetric_difference(toggled))
    }

    /// Boundary components when exactly the edges in `twisted` are twisted.
    pub fn count_with_twisted(&self, twisted: EdgeSet) -> usize {
        let n = self.arc.len();
        if n <= 128 {
            // small graphs: visited set in a register
            let mut visited = 0u128;
            let mut faces = 0;
            for start in 0..n {
                if visited >> start & 1 == 1 {
                    continue;
                }
                faces += 1;
                let mut p = start;
                loop {
                    visited |= 1u128 << p;
                    let q = self.arc[p] as usize;
                    visited |= 1u128 << q;
                    p = self.across(q, twisted);
                    if p == start {
                        break;
                    }
                }
            }
            faces + self.isolated
        } else {
            let mut visited = vec![false; n];
            let mut faces = 0;
            for start in 0..n {
                if visited[start] {
                    continue;
                }
                faces += 1;
                let mut p = start;
                loop {
                    visited[p] = true;
                    let q = self.arc[p] as usize;
                    visited[q] = true;
                    p = self.across(q, twisted);
                    if p == start {
                        break;
                    }
                }
            }
            faces + self.isolated
        }
    }

    #[inline]
    fn across(&self, point: usize, twisted: EdgeSet) -> usize {
        if twisted.contains(self.label[point]) {
            self.crossed[point] as usize
        } else {
            self.straight[point] as usize
        }
    }
}
