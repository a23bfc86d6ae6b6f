//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use petrial_core::contraction::all_spanning_trees;
use petrial_core::enumerate::{framed_chord_diagrams, signed_graphs};
use petrial_core::four_term::{
    adjacent_pairs, check_four_term_chord, check_four_term_signed_graph,
};
use petrial_core::petrial::{petrial_poly_bruteforce, petrial_poly_rank};
use petrial_core::random::{
    random_bouquet, random_ribbon_graph, random_signed_graph, random_spanning_tree, seeded_rng,
};
use petrial_core::*;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn six_vertex_example() -> Outcome {
    let g = RibbonGraph::parse(common::SIX_VERTEX_EXAMPLE).map_err(|e| e.to_string())?;
    let expected = GenusPolynomial::from_terms(common::SIX_VERTEX_POLY);
    let start = Instant::now();
    let brute = petrial_poly_bruteforce(&g).map_err(|e| e.to_string())?;
    let brute_time = start.elapsed();
    let start = Instant::now();
    let tree = spanning_tree(&g).map_err(|e| e.to_string())?;
    let rank = petrial_poly_rank(&g, &tree).map_err(|e| e.to_string())?;
    let rank_time = start.elapsed();
    ensure(brute == expected, || format!("bruteforce gave {brute}"))?;
    ensure(rank == expected, || format!("rank gave {rank}"))?;
    ensure(expected.coefficient_sum() == 4096, || {
        "coefficient sum".into()
    })?;
    let limit = Duration::from_secs(5);
    ensure(brute_time < limit && rank_time < limit, || {
        format!(
            "too slow: bruteforce {}, rank {}",
            secs(brute_time),
            secs(rank_time)
        )
    })?;
    Ok(format!(
        "{expected}, sum 4096; bruteforce {}, rank {}",
        secs(brute_time),
        secs(rank_time)
    ))
}

fn genus_equals_aux_rank() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(0xa2);
    let (mut graphs, mut checks) = (0, 0);
    while graphs < 200 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(n - 1..=14);
        let g = random_ribbon_graph(&mut rng, n, m);
        let mut trees = vec![spanning_tree(&g).map_err(|e| e.to_string())?];
        for _ in 0..4 {
            let t = random_spanning_tree(&mut rng, &g).map_err(|e| e.to_string())?;
            if !trees.contains(&t) {
                trees.push(t);
            }
        }
        if trees.len() < 2 {
            continue;
        }
        for t in &trees {
            let aux = aux_bouquet(&g, t).map_err(|e| e.to_string())?;
            let rank = genus_via_rank(&aux);
            ensure(rank == g.euler_genus(), || {
                format!("{g} tree {}: rank {rank}", t.edges())
            })?;
            checks += 1;
        }
        graphs += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {}", secs(elapsed))
    })?;
    Ok(format!(
        "{graphs} graphs, {checks} (graph, tree) pairs in {}",
        secs(elapsed)
    ))
}

fn rank_matches_bruteforce() -> Outcome {
    let mut rng = seeded_rng(0xa3);
    let mut tree_checks = 0;
    for _ in 0..120 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(n - 1..=12);
        let g = random_ribbon_graph(&mut rng, n, m);
        let brute = petrial_poly_bruteforce(&g).map_err(|e| e.to_string())?;
        for t in all_spanning_trees(&g, 8).map_err(|e| e.to_string())? {
            let rank = petrial_poly_rank(&g, &t).map_err(|e| e.to_string())?;
            ensure(rank == brute, || {
                format!("{g} tree {}: {rank} vs {brute}", t.edges())
            })?;
            tree_checks += 1;
        }
    }
    Ok(format!(
        "120 graphs, {tree_checks} spanning trees, all equal to bruteforce"
    ))
}

fn small_bouquets_genus() -> Outcome {
    let mut count = 0;
    for m in 0..=4 {
        for b in framed_chord_diagrams(m) {
            ensure(b.euler_genus() == genus_via_rank(&b), || format!("{b}"))?;
            count += 1;
        }
    }
    ensure(count == 1815, || format!("enumerated {count} bouquets"))?;
    Ok(format!(
        "{count} framed chord diagrams with at most 4 chords"
    ))
}

fn chord_four_term() -> Outcome {
    let mut cases = 0;
    for m in 0..=5 {
        for b in framed_chord_diagrams(m) {
            for w in adjacent_pairs(&b) {
                let r = check_four_term_chord(&b, &w).map_err(|e| e.to_string())?;
                ensure(r.holds(), || {
                    format!("{b} {w:?}: residual {}", r.combination)
                })?;
                cases += 1;
            }
        }
    }
    let mut rng = seeded_rng(0xa5);
    for _ in 0..100 {
        let b = random_bouquet(&mut rng, 8);
        let pairs = adjacent_pairs(&b);
        let w = pairs[rng.gen_range(0..pairs.len())];
        let r = check_four_term_chord(&b, &w).map_err(|e| e.to_string())?;
        ensure(r.holds(), || {
            format!("{b} {w:?}: residual {}", r.combination)
        })?;
    }
    Ok(format!(
        "{cases} exhaustive (diagram, witness) cases + 100 random 8-chord trials"
    ))
}

fn signed_graph_four_term() -> Outcome {
    let mut cases = 0;
    for n in 2..=4 {
        for g in signed_graphs(n) {
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        let r =
                            check_four_term_signed_graph(&g, a, b).map_err(|e| e.to_string())?;
                        ensure(r.holds(), || format!("{g} ({a}, {b}): {}", r.combination))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    let mut rng = seeded_rng(0xa6);
    for _ in 0..100 {
        let g = random_signed_graph(&mut rng, 9, 0.5);
        let a = rng.gen_range(0..9);
        let b = (a + rng.gen_range(1..9)) % 9;
        let r = check_four_term_signed_graph(&g, a, b).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{g} ({a}, {b}): {}", r.combination))?;
    }
    Ok(format!(
        "{cases} exhaustive (graph, ordered pair) cases + 100 random 9-vertex trials"
    ))
}

fn structural_properties() -> Outcome {
    let mut rng = seeded_rng(0xa7);
    let limits = Limits::default();
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range((n - 1).max(1)..=12);
        let g = random_ribbon_graph(&mut rng, n, m);
        let p = petrial_poly(&g, Method::Rank, &limits).map_err(|e| e.to_string())?;
        ensure(p.is_interpolating(), || {
            format!("{g}: {p} not interpolating")
        })?;
        ensure(p.coefficient_sum() == 1 << m, || {
            format!("{g}: sum {}", p.coefficient_sum())
        })?;
        let pre = g
            .partial_petrial(g.edges().select(rng.gen()))
            .map_err(|e| e.to_string())?;
        let q = petrial_poly(&pre, Method::BruteForce, &limits).map_err(|e| e.to_string())?;
        ensure(p == q, || format!("{g}: pre-twist changed {p} to {q}"))?;
    }
    for _ in 0..50 {
        let (m1, m2) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let b1 = random_bouquet(&mut rng, m1);
        let b2 = random_bouquet(&mut rng, m2);
        let j = join(&b1, &b2).map_err(|e| e.to_string())?;
        let lhs =
            petrial_poly(j.as_graph(), Method::BruteForce, &limits).map_err(|e| e.to_string())?;
        let rhs = bouquet_rank_poly(&b1) * bouquet_rank_poly(&b2);
        ensure(lhs == rhs, || {
            format!("join of {b1} and {b2}: {lhs} vs {rhs}")
        })?;
    }
    for _ in 0..100 {
        let m = rng.gen_range(0..=8);
        let b = random_bouquet(&mut rng, m);
        let w = b.edges().select(rng.gen());
        let other = b.partial_petrial(w).map_err(|e| e.to_string())?;
        let sign = if w.len() % 2 == 0 { 1 } else { -1 };
        let lhs = modified_poly_bouquet(&b, Method::BruteForce);
        let rhs = modified_poly_bouquet(&other, Method::BruteForce).scale(sign);
        ensure(lhs == rhs, || {
            format!("{b} retwisted on {w}: {lhs} vs {rhs}")
        })?;
    }
    Ok("100 graphs (interpolation, sum 2^m, pre-twist invariance), 50 joins, 100 retwists".into())
}

fn performance() -> Outcome {
    let g = random_ribbon_graph(&mut seeded_rng(0xa8), 6, 26);
    let tree = spanning_tree(&g).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let p = petrial_poly_rank(&g, &tree).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(p.coefficient_sum() == 1 << 26, || {
        format!("sum {}", p.coefficient_sum())
    })?;
    ensure(elapsed < Duration::from_secs(600), || {
        format!("took {}", secs(elapsed))
    })?;
    let ranks = (1u64 << 26) as f64;
    Ok(format!(
        "m = 26, n = 6 in {} on {} thread(s), {:.1}M ranks/s of 21x21 matrices",
        secs(elapsed),
        rayon::current_num_threads(),
        ranks / elapsed.as_secs_f64() / 1e6
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "six-vertex example, both engines",
            six_vertex_example,
        ),
        (
            "AC2",
            "face-trace genus = rank of auxiliary bouquet",
            genus_equals_aux_rank,
        ),
        (
            "AC3",
            "rank engine = bruteforce, tree independent",
            rank_matches_bruteforce,
        ),
        (
            "AC4",
            "bouquet genus = rank, exhaustive <= 4 chords",
            small_bouquets_genus,
        ),
        ("AC5", "chord four-term relation", chord_four_term),
        (
            "AC6",
            "signed-graph four-term relation",
            signed_graph_four_term,
        ),
        ("AC7", "structural properties", structural_properties),
        ("AC8", "performance, m = 26", performance),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{}]", secs(start.elapsed())),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {name}: {detail} [{}]", secs(start.elapsed()));
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
