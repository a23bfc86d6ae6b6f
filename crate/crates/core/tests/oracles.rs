mod common;

use common::*;
use petrial_core::contraction::{all_spanning_trees, aux_bouquet, spanning_tree};
use petrial_core::gf2::Gf2Matrix;
use petrial_core::petrial::{petrial_poly_bruteforce, petrial_poly_rank};
use petrial_core::random::{random_bouquet, random_ribbon_graph, seeded_rng};
use petrial_core::*;

fn to_poly(map: std::collections::BTreeMap<u32, i64>) -> GenusPolynomial {
    GenusPolynomial::from_terms(map)
}

#[test]
fn face_counts_agree_on_hand_examples() {
    for (rotations, expected) in [
        (vec![vec![1, 1]], 2),
        (vec![vec![1, -1]], 1),
        (vec![vec![1, 2, 1, 2]], 1),
        (vec![vec![1, 2], vec![1, 2]], 2),
        (vec![vec![]], 1),
        (vec![vec![1, 1], vec![2, 2]], 4),
    ] {
        assert_eq!(faces(&rotations), expected, "{rotations:?}");
        let refs: Vec<&[i64]> = rotations.iter().map(Vec::as_slice).collect();
        let g = RibbonGraph::from_signed(&refs).unwrap();
        assert_eq!(g.boundary_components(), expected, "{rotations:?}");
    }
}

#[test]
fn face_tracer_matches_state_walk_on_random_graphs() {
    let mut rng = seeded_rng(11);
    for n in 1..=7 {
        for m in (n - 1).max(1)..=12 {
            let g = random_ribbon_graph(&mut rng, n, m);
            let rot = rot_of(&g);
            assert_eq!(g.boundary_components(), faces(&rot), "{g}");
            assert_eq!(g.euler_genus(), genus(&rot), "{g}");
        }
    }
}

#[test]
fn gf2_rank_matches_dense_elimination() {
    let mut state = 0x2545f4914f6cdd1du64;
    for n in 0..=70 {
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state & 1 == 1
        };
        let dense: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let m = Gf2Matrix::from_fn(n, |i, j| dense[i][j]);
        assert_eq!(m.rank(), rank(dense), "n = {n}");
    }
}

#[test]
fn signed_intersection_matrix_matches_pattern_reading() {
    let mut rng = seeded_rng(5);
    for m in 0..=10 {
        let b = random_bouquet(&mut rng, m);
        let seq: Vec<i64> = b.sequence().iter().map(|o| o.to_signed()).collect();
        let dense = signed_adjacency(&seq);
        let si = signed_intersection_graph(&b).adjacency_gf2();
        for (i, row) in dense.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(si.get(i, j), x, "{b} at ({i}, {j})");
            }
        }
        assert_eq!(genus_via_rank(&b), rank(dense));
        assert_eq!(genus_via_rank(&b), genus(&vec![seq]));
    }
}

#[test]
fn six_vertex_example_reference_values() {
    let g = RibbonGraph::parse(SIX_VERTEX_EXAMPLE).unwrap();
    let expected = GenusPolynomial::from_terms(SIX_VERTEX_POLY);
    assert_eq!(to_poly(poly(&rot_of(&g), false)), expected);
    assert_eq!(petrial_poly_bruteforce(&g).unwrap(), expected);
    assert_eq!(
        petrial_poly_rank(&g, &spanning_tree(&g).unwrap()).unwrap(),
        expected
    );
    assert_eq!(expected.coefficient_sum(), 4096);
    assert_eq!(g.euler_genus(), genus(&rot_of(&g)));
}

#[test]
fn single_edge_reference_value() {
    // two vertices joined by one edge: both framings are discs
    let rot = vec![vec![1], vec![1]];
    assert_eq!(to_poly(poly(&rot, false)), GenusPolynomial::monomial(0, 2));
}

#[test]
fn engines_match_reference_enumeration() {
    let mut rng = seeded_rng(23);
    for trial in 0..40 {
        let n = 2 + trial % 4;
        let m = (n - 1) + trial % 6;
        let g = random_ribbon_graph(&mut rng, n, m);
        let expected = to_poly(poly(&rot_of(&g), false));
        assert_eq!(petrial_poly_bruteforce(&g).unwrap(), expected, "{g}");
        for t in all_spanning_trees(&g, 3).unwrap() {
            assert_eq!(
                petrial_poly_rank(&g, &t).unwrap(),
                expected,
                "{g} tree {}",
                t.edges()
            );
        }
    }
}

#[test]
fn modified_polynomials_match_reference_enumeration() {
    let mut rng = seeded_rng(29);
    for m in 0..=7 {
        let b = random_bouquet(&mut rng, m);
        let expected = to_poly(poly(&rot_of(b.as_graph()), true));
        assert_eq!(
            modified_poly_bouquet(&b, Method::BruteForce),
            expected,
            "{b}"
        );
        assert_eq!(modified_poly_bouquet(&b, Method::Rank), expected, "{b}");
        assert_eq!(
            modified_poly_signed_graph(&signed_intersection_graph(&b)),
            expected,
            "{b}"
        );
    }
}

#[test]
fn aux_bouquet_preserves_reference_genus() {
    let mut rng = seeded_rng(31);
    for _ in 0..30 {
        let g = random_ribbon_graph(&mut rng, 5, 9);
        for t in all_spanning_trees(&g, 4).unwrap() {
            let aux = aux_bouquet(&g, &t).unwrap();
            assert_eq!(genus(&rot_of(aux.as_graph())), genus(&rot_of(&g)));
        }
    }
}

#[test]
fn frozen_small_values() {
    let b = |s: &[i64]| Bouquet::from_signed(s).unwrap();
    let p = |t: &[(u32, i64)]| GenusPolynomial::from_terms(t.iter().copied());
    for (seq, unmodified, modified) in [
        (&[1, 1][..], p(&[(0, 1), (1, 1)]), p(&[(0, 1), (1, -1)])),
        (&[1, -1], p(&[(0, 1), (1, 1)]), p(&[(0, -1), (1, 1)])),
        (
            &[1, 1, 2, 2],
            p(&[(0, 1), (1, 2), (2, 1)]),
            p(&[(0, 1), (1, -2), (2, 1)]),
        ),
        (&[1, 2, 1, 2], p(&[(1, 1), (2, 3)]), p(&[(1, 1), (2, -1)])),
    ] {
        let rot = vec![seq.to_vec()];
        assert_eq!(to_poly(poly(&rot, false)), unmodified, "{seq:?}");
        assert_eq!(to_poly(poly(&rot, true)), modified, "{seq:?}");
        assert_eq!(bouquet_rank_poly(&b(seq)), unmodified, "{seq:?}");
        assert_eq!(
            modified_poly_bouquet(&b(seq), Method::Rank),
            modified,
            "{seq:?}"
        );
    }
}
