//! Four-term transforms of framed chord diagrams and signed graphs, and the
//! corresponding four-term relations.
//!
//! For chords `a`, `b` with adjacent ends:
//!
//! * `B'` exchanges the two adjacent ends;
//! * `B̃` slides the end of `a` along `b` to the other end of `b`, flipping its
//!   sign when `b` is twisted;
//! * `B̃'` is the slide applied to `B'`.
//!
//! For vertices `a`, `b` of a signed graph:
//!
//! * `S'` toggles the edge `ab`;
//! * `S̃` adds row and column `b` into row and column `a` of the signed
//!   adjacency matrix: for `c ∉ {a, b}` the edge `ac` toggles iff `c ~ b`, the
//!   edge `ab` toggles iff `b` is negative and the sign of `a` flips iff `b` is
//!   negative. With this convention `SI(B̃) = S̃(SI(B))`.

use crate::bouquet::Bouquet;
use crate::error::{Error, Result};
use crate::petrial::{
    bouquet_rank_poly, modified_poly_bouquet, modified_poly_signed_graph, Method,
};
use crate::poly::GenusPolynomial;
use crate::ribbon::{Label, Occurrence};
use crate::signed_graph::SignedGraph;

/// Two cyclically adjacent ends of distinct chords `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub a: Label,
    pub b: Label,
    pub a_pos: usize,
    pub b_pos: usize,
}

/// Every pair of adjacent positions holding `a` and `b`, ordered by the
/// smaller cyclic start index.
pub fn adjacency_witnesses(bouquet: &Bouquet, a: Label, b: Label) -> Vec<Witness> {
    let seq = bouquet.sequence();
    let len = seq.len();
    if a == b || len < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..len {
        let j = (i + 1) % len;
        if len == 2 && j < i {
            break;
        }
        let (x, y) = (seq[i].label, seq[j].label);
        if x == a && y == b {
            out.push(Witness {
                a,
                b,
                a_pos: i,
                b_pos: j,
            });
        } else if x == b && y == a {
            out.push(Witness {
                a,
                b,
                a_pos: j,
                b_pos: i,
            });
        }
    }
    out
}

pub fn chords_adjacent(bouquet: &Bouquet, a: Label, b: Label) -> bool {
    !adjacency_witnesses(bouquet, a, b).is_empty()
}

/// The leftmost adjacency witness for `a` and `b`.
pub fn witness(bouquet: &Bouquet, a: Label, b: Label) -> Result<Witness> {
    if a == b {
        return Err(Error::SamePair(a as usize));
    }
    for l in [a, b] {
        if !bouquet.as_graph().has_edge(l) {
            return Err(Error::UnknownLabel(l));
        }
    }
    adjacency_witnesses(bouquet, a, b)
        .into_iter()
        .next()
        .ok_or(Error::NotAdjacent(a, b))
}

fn check_witness(bouquet: &Bouquet, w: &Witness) -> Result<()> {
    let seq = bouquet.sequence();
    let len = seq.len();
    let ok = w.a != w.b
        && w.a_pos < len
        && w.b_pos < len
        && seq[w.a_pos].label == w.a
        && seq[w.b_pos].label == w.b
        && ((w.a_pos + 1) % len == w.b_pos || (w.b_pos + 1) % len == w.a_pos);
    if ok {
        Ok(())
    } else {
        Err(Error::NotAdjacent(w.a, w.b))
    }
}

/// `B'` at the given witness, together with the witness in the result.
pub fn exchange_at(bouquet: &Bouquet, w: &Witness) -> Result<(Bouquet, Witness)> {
    check_witness(bouquet, w)?;
    let mut seq = bouquet.sequence().to_vec();
    seq.swap(w.a_pos, w.b_pos);
    let next = Witness {
        a_pos: w.b_pos,
        b_pos: w.a_pos,
        ..*w
    };
    Ok((Bouquet::new(seq)?, next))
}

/// `B̃` at the given witness, together with the new witness formed by the
/// moved end of `a` and the far end of `b`.
pub fn slide_at(bouquet: &Bouquet, w: &Witness) -> Result<(Bouquet, Witness)> {
    check_witness(bouquet, w)?;
    let seq = bouquet.sequence();
    let len = seq.len();
    let (p1, p2) = bouquet.positions(w.b).expect("witness checked");
    let q = if p1 == w.b_pos { p2 } else { p1 };
    let b_twisted = bouquet.is_twisted(w.b);
    let a_before_p = (w.a_pos + 1) % len == w.b_pos;
    let moved = seq[w.a_pos];
    let moved = if b_twisted { -moved } else { moved };

    let mut out: Vec<Occurrence> = seq.to_vec();
    out.remove(w.a_pos);
    let q_now = if q > w.a_pos { q - 1 } else { q };
    let insert = if a_before_p != b_twisted {
        q_now + 1
    } else {
        q_now
    };
    out.insert(insert, moved);
    let q_final = if insert <= q_now { q_now + 1 } else { q_now };
    let next = Witness {
        a: w.a,
        b: w.b,
        a_pos: insert,
        b_pos: q_final,
    };
    Ok((Bouquet::new(out)?, next))
}

pub fn exchange_transform(bouquet: &Bouquet, a: Label, b: Label) -> Result<Bouquet> {
    Ok(exchange_at(bouquet, &witness(bouquet, a, b)?)?.0)
}

pub fn slide_transform(bouquet: &Bouquet, a: Label, b: Label) -> Result<Bouquet> {
    Ok(slide_at(bouquet, &witness(bouquet, a, b)?)?.0)
}

/// `B, B̃, B̃', B'` at a witness.
pub fn chord_quadruple(bouquet: &Bouquet, w: &Witness) -> Result<[Bouquet; 4]> {
    let (tilde, _) = slide_at(bouquet, w)?;
    let (prime, w_prime) = exchange_at(bouquet, w)?;
    let (tilde_prime, _) = slide_at(&prime, &w_prime)?;
    Ok([bouquet.clone(), tilde, tilde_prime, prime])
}

fn pair(graph: &SignedGraph, a: usize, b: usize) -> Result<()> {
    let n = graph.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(Error::UnknownVertex(v + 1));
        }
    }
    if a == b {
        return Err(Error::SamePair(a + 1));
    }
    Ok(())
}

/// `S'`: toggle the edge between vertex indices `a` and `b`.
pub fn graph_prime_transform(graph: &SignedGraph, a: usize, b: usize) -> Result<SignedGraph> {
    pair(graph, a, b)?;
    let mut out = graph.clone();
    out.toggle_edge(a, b);
    Ok(out)
}

/// `S̃` for vertex indices `a` and `b`.
pub fn graph_tilde_transform(graph: &SignedGraph, a: usize, b: usize) -> Result<SignedGraph> {
    pair(graph, a, b)?;
    let mut out = graph.clone();
    let others = graph.neighbors(b) & !(1u64 << a);
    for c in 0..graph.vertex_count() {
        if others >> c & 1 == 1 {
            out.toggle_edge(a, c);
        }
    }
    if graph.sign(b).is_minus() {
        out.toggle_edge(a, b);
        out.set_sign(a, -graph.sign(a));
    }
    Ok(out)
}

/// `S, S̃, S̃', S'`.
pub fn graph_quadruple(graph: &SignedGraph, a: usize, b: usize) -> Result<[SignedGraph; 4]> {
    let tilde = graph_tilde_transform(graph, a, b)?;
    let prime = graph_prime_transform(graph, a, b)?;
    let tilde_prime = graph_tilde_transform(&prime, a, b)?;
    Ok([graph.clone(), tilde, tilde_prime, prime])
}

/// The four polynomials of a relation and their signed combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTermReport {
    /// Values at `X, X̃, X̃', X'`.
    pub terms: [GenusPolynomial; 4],
    /// Coefficients applied to `terms`.
    pub signs: [i64; 4],
    pub combination: GenusPolynomial,
}

impl FourTermReport {
    fn new(terms: [GenusPolynomial; 4], signs: [i64; 4]) -> Self {
        let combination = terms
            .iter()
            .zip(signs)
            .fold(GenusPolynomial::zero(), |acc, (t, s)| acc + t.scale(s));
        FourTermReport {
            terms,
            signs,
            combination,
        }
    }

    pub fn holds(&self) -> bool {
        self.combination.is_zero()
    }
}

/// `P(B) - P(B̃) - P(B̃') + P(B')` for the partial Petrial polynomial.
pub fn check_four_term_chord(bouquet: &Bouquet, w: &Witness) -> Result<FourTermReport> {
    let quad = chord_quadruple(bouquet, w)?;
    Ok(FourTermReport::new(
        quad.map(|b| bouquet_rank_poly(&b)),
        [1, -1, -1, 1],
    ))
}

/// `g(B) - g(B̃) + g(B̃') - g(B')` for the modified polynomial of a bouquet.
pub fn check_four_term_modified_bouquet(
    bouquet: &Bouquet,
    w: &Witness,
    method: Method,
) -> Result<FourTermReport> {
    let quad = chord_quadruple(bouquet, w)?;
    Ok(FourTermReport::new(
        quad.map(|b| modified_poly_bouquet(&b, method)),
        [1, -1, 1, -1],
    ))
}

/// `g(S) - g(S̃) + g(S̃') - g(S')` for the modified polynomial of a signed graph.
pub fn check_four_term_signed_graph(
    graph: &SignedGraph,
    a: usize,
    b: usize,
) -> Result<FourTermReport> {
    let quad = graph_quadruple(graph, a, b)?;
    Ok(FourTermReport::new(
        quad.map(|g| modified_poly_signed_graph(&g)),
        [1, -1, 1, -1],
    ))
}

/// Ordered pairs of distinct loops with at least one adjacency witness, each
/// with all of its witnesses.
pub fn adjacent_pairs(bouquet: &Bouquet) -> Vec<Witness> {
    let loops = bouquet.loops();
    let mut out = Vec::new();
    for &a in &loops {
        for &b in &loops {
            out.extend(adjacency_witnesses(bouquet, a, b));
        }
    }
    out
}
