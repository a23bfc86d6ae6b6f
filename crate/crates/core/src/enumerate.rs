//! Exhaustive enumeration of small chord diagrams and signed graphs.

use crate::bouquet::Bouquet;
use crate::ribbon::{Label, Occurrence, Sign};
use crate::signed_graph::SignedGraph;

/// Every chord diagram on `m` chords, all untwisted, with labels in order of
/// first appearance: `(2m - 1)!!` diagrams.
pub fn chord_diagrams(m: usize) -> Vec<Vec<Label>> {
    fn fill(seq: &mut Vec<Option<Label>>, next: Label, out: &mut Vec<Vec<Label>>) {
        let Some(first) = seq.iter().position(Option::is_none) else {
            out.push(seq.iter().map(|l| l.unwrap()).collect());
            return;
        };
        seq[first] = Some(next);
        for j in first + 1..seq.len() {
            if seq[j].is_none() {
                seq[j] = Some(next);
                fill(seq, next + 1, out);
                seq[j] = None;
            }
        }
        seq[first] = None;
    }
    let mut out = Vec::new();
    fill(&mut vec![None; 2 * m], 1, &mut out);
    out
}

/// Every framed chord diagram on `m` chords: each diagram of
/// [`chord_diagrams`] with every subset of chords twisted (second end negative).
pub fn framed_chord_diagrams(m: usize) -> impl Iterator<Item = Bouquet> {
    chord_diagrams(m).into_iter().flat_map(move |labels| {
        (0..1u64 << m).map(move |twist| {
            let mut seen = 0u64;
            let seq = labels
                .iter()
                .map(|&l| {
                    let bit = 1u64 << (l - 1);
                    let second = seen & bit != 0;
                    seen |= bit;
                    Occurrence::new(l, Sign::from_minus(second && twist & bit != 0))
                })
                .collect();
            Bouquet::new(seq).expect("valid diagram")
        })
    })
}

/// Every signed simple graph on `n` labelled vertices: `2^(n(n-1)/2 + n)`.
pub fn signed_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let edge_bits = pairs.len();
    (0..1u64 << (edge_bits + n)).map(move |code| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let signs = (0..n)
            .map(|v| Sign::from_minus(code >> (edge_bits + v) & 1 == 1))
            .collect();
        SignedGraph::new(signs, &edges).expect("valid graph")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let expected = [1, 1, 3, 15, 105, 945];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(chord_diagrams(m).len(), c);
        }
        assert_eq!(framed_chord_diagrams(3).count(), 15 * 8);
        assert_eq!(signed_graphs(3).count(), 64);
    }

    #[test]
    fn framed_diagrams_are_distinct() {
        let all: std::collections::HashSet<_> = framed_chord_diagrams(3).collect();
        assert_eq!(all.len(), 120);
    }
}
