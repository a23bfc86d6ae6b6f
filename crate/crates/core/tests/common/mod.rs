//! Independent reference implementations used as test oracles. None of these
//! call into the face tracer, the bitset rank or the engines of the crate.

#![allow(dead_code)]

use std::collections::BTreeMap;

use petrial_core::{Occurrence, RibbonGraph};

pub const SIX_VERTEX_EXAMPLE: &str =
    "v1: 1 8 12\nv2: 9 4 2 3 8\nv3: 11 10 5 6 9\nv4: 7 4 11\nv5: 5 2 1 6 12\nv6: 3 7 10\n";

/// Published polynomial of the six-vertex example, as (exponent, coefficient).
pub const SIX_VERTEX_POLY: [(u32, i64); 6] =
    [(7, 1412), (6, 1692), (5, 779), (4, 189), (3, 23), (2, 1)];

/// Plain signed rotations as nested vectors of signed integers.
pub type Rot = Vec<Vec<i64>>;

pub fn rot_of(g: &RibbonGraph) -> Rot {
    g.rotations()
        .iter()
        .map(|r| r.iter().map(|o: &Occurrence| o.to_signed()).collect())
        .collect()
}

fn darts(rot: &Rot) -> BTreeMap<u64, Vec<(usize, usize)>> {
    let mut ends: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (v, r) in rot.iter().enumerate() {
        for (i, &s) in r.iter().enumerate() {
            ends.entry(s.unsigned_abs()).or_default().push((v, i));
        }
    }
    ends
}

fn twisted(rot: &Rot, label: u64) -> bool {
    let signs: Vec<bool> = rot
        .iter()
        .flatten()
        .filter(|s| s.unsigned_abs() == label)
        .map(|&s| s < 0)
        .collect();
    signs[0] != signs[1]
}

/// Face count by walking (dart, direction) states: follow the edge, reverse
/// direction across a twisted edge, then step to the next dart in the current
/// direction. Every face is walked once in each direction.
pub fn faces(rot: &Rot) -> usize {
    let ends = darts(rot);
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    let isolated = rot.iter().filter(|r| r.is_empty()).count();
    for (v, r) in rot.iter().enumerate() {
        for i in 0..r.len() {
            for dir in [1i64, -1] {
                if seen.contains(&(v, i, dir)) {
                    continue;
                }
                orbits += 1;
                let (mut cv, mut ci, mut cd) = (v, i, dir);
                while seen.insert((cv, ci, cd)) {
                    let label = rot[cv][ci].unsigned_abs();
                    let pair = &ends[&label];
                    let (w, j) = if pair[0] == (cv, ci) {
                        pair[1]
                    } else {
                        pair[0]
                    };
                    if twisted(rot, label) {
                        cd = -cd;
                    }
                    let len = rot[w].len() as i64;
                    cv = w;
                    ci = ((j as i64 + cd).rem_euclid(len)) as usize;
                }
            }
        }
    }
    assert!(orbits % 2 == 0);
    orbits / 2 + isolated
}

pub fn components(rot: &Rot) -> usize {
    let n = rot.len();
    let ends = darts(rot);
    let mut comp: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for pair in ends.values() {
            let (a, b) = (pair[0].0, pair[1].0);
            let m = comp[a].min(comp[b]);
            if comp[a] != m || comp[b] != m {
                comp[a] = m;
                comp[b] = m;
                changed = true;
            }
        }
    }
    let mut roots: Vec<usize> = comp.clone();
    roots.sort();
    roots.dedup();
    roots.len()
}

pub fn genus(rot: &Rot) -> usize {
    let v = rot.len() as i64;
    let e = darts(rot).len() as i64;
    let f = faces(rot) as i64;
    let c = components(rot) as i64;
    (2 * c - (v - e + f)) as usize
}

/// Twists the edges whose labels are listed, by negating their first end.
pub fn twist(rot: &Rot, labels: &[u64]) -> Rot {
    let mut out = rot.clone();
    for &l in labels {
        'find: for r in &mut out {
            for s in r.iter_mut() {
                if s.unsigned_abs() == l {
                    *s = -*s;
                    break 'find;
                }
            }
        }
    }
    out
}

/// `Σ_A sign(A) z^{ε(G^{×A})}` by enumerating label subsets, as a map.
pub fn poly(rot: &Rot, alternating: bool) -> BTreeMap<u32, i64> {
    let labels: Vec<u64> = darts(rot).keys().copied().collect();
    let mut out = BTreeMap::new();
    for mask in 0..1u64 << labels.len() {
        let chosen: Vec<u64> = labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        let sign = if alternating && chosen.len() % 2 == 1 {
            -1
        } else {
            1
        };
        *out.entry(genus(&twist(rot, &chosen)) as u32).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Rank over GF(2) of a dense boolean matrix by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<bool>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] {
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Loops of a one-line sequence are interlaced iff the restriction of the
/// sequence to their labels reads `abab` (up to rotation).
pub fn interlaced(seq: &[i64], a: u64, b: u64) -> bool {
    let pattern: Vec<u64> = seq
        .iter()
        .map(|s| s.unsigned_abs())
        .filter(|&l| l == a || l == b)
        .collect();
    pattern[0] != pattern[1] && pattern[1] != pattern[2]
}

/// Dense signed adjacency matrix of a one-line sequence, loops in ascending
/// label order.
pub fn signed_adjacency(seq: &[i64]) -> Vec<Vec<bool>> {
    let mut labels: Vec<u64> = seq.iter().map(|s| s.unsigned_abs()).collect();
    labels.sort();
    labels.dedup();
    let rot = vec![seq.to_vec()];
    labels
        .iter()
        .map(|&a| {
            labels
                .iter()
                .map(|&b| {
                    if a == b {
                        twisted(&rot, a)
                    } else {
                        interlaced(seq, a, b)
                    }
                })
                .collect()
        })
        .collect()
}
