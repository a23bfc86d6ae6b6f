//! Randomized and exhaustive cross-checks behind `check` and `four-term`.

use clap::ValueEnum;
use petrial_core::contraction::all_spanning_trees;
use petrial_core::enumerate::{framed_chord_diagrams, signed_graphs};
use petrial_core::four_term::{
    adjacency_witnesses, adjacent_pairs, check_four_term_chord, check_four_term_modified_bouquet,
    check_four_term_signed_graph, FourTermReport, Witness,
};
use petrial_core::petrial::{petrial_poly_bruteforce, petrial_poly_rank};
use petrial_core::random::{random_bouquet, random_ribbon_graph, random_signed_graph, seeded_rng};
use petrial_core::*;
use rand::Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    /// face-trace genus equals the rank of the auxiliary bouquet
    GenusRank,
    /// every chord diagram up to --max-size chords: genus equals rank
    BouquetGenus,
    /// rank engine equals bruteforce for several spanning trees
    Poly,
    /// polynomial unchanged by a random pre-twist
    Petrial,
    /// polynomial of a join is the product
    Join,
    /// retwisting W multiplies the modified polynomial by (-1)^|W|
    Sign,
    FourTermChord,
    FourTermModified,
    FourTermGraph,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FourTermMode {
    Chord,
    Graph,
    Modified,
}

pub struct CheckOptions {
    pub random: usize,
    pub seed: u64,
    pub max_size: Option<usize>,
    pub all_witnesses: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub mode: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Summary {
    fn new(mode: &str) -> Self {
        Summary {
            mode: mode.into(),
            ..Summary::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(describe());
        }
    }

    fn error(&mut self, context: impl std::fmt::Display, err: Error) {
        self.failed += 1;
        self.failures.push(format!("{context}: {err}"));
    }
}

fn witnesses_for(b: &Bouquet, all: bool) -> Vec<Witness> {
    let all_pairs = adjacent_pairs(b);
    if all {
        return all_pairs;
    }
    let mut seen = std::collections::HashSet::new();
    all_pairs
        .into_iter()
        .filter(|w| seen.insert((w.a, w.b)))
        .collect()
}

fn record_report(s: &mut Summary, what: String, report: Result<FourTermReport>) {
    match report {
        Ok(r) => s.record(r.holds(), || format!("{what}: residual {}", r.combination)),
        Err(e) => s.error(what, e),
    }
}

fn random_graph(rng: &mut impl Rng, max_n: usize, max_m: usize) -> RibbonGraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let m = rng.gen_range(n - 1..=max_m.max(n - 1));
    random_ribbon_graph(rng, n, m)
}

fn genus_rank(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("genus-rank");
    let max_m = o.max_size.unwrap_or(14);
    for _ in 0..o.random {
        let g = random_graph(rng, 8, max_m);
        match all_spanning_trees(&g, 3) {
            Ok(trees) => {
                for t in trees {
                    match aux_bouquet(&g, &t) {
                        Ok(aux) => s.record(genus_via_rank(&aux) == g.euler_genus(), || {
                            format!(
                                "{} with tree {}",
                                g.serialize().replace('\n', " / "),
                                t.edges()
                            )
                        }),
                        Err(e) => s.error(g.serialize(), e),
                    }
                }
            }
            Err(e) => s.error(g.serialize(), e),
        }
    }
    s
}

fn bouquet_genus(o: &CheckOptions) -> Summary {
    let mut s = Summary::new("bouquet-genus");
    for m in 0..=o.max_size.unwrap_or(4) {
        for b in framed_chord_diagrams(m) {
            s.record(b.euler_genus() == genus_via_rank(&b), || b.to_string());
        }
    }
    s
}

fn poly(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("poly");
    let max_m = o.max_size.unwrap_or(12);
    for _ in 0..o.random {
        let g = random_graph(rng, 6, max_m);
        let label = g.serialize().replace('\n', " / ");
        let brute = match petrial_poly_bruteforce(&g) {
            Ok(p) => p,
            Err(e) => {
                s.error(&label, e);
                continue;
            }
        };
        match all_spanning_trees(&g, 4) {
            Ok(trees) => {
                for t in trees {
                    match petrial_poly_rank(&g, &t) {
                        Ok(p) => s.record(p == brute, || {
                            format!("{label} tree {}: rank {p}, bruteforce {brute}", t.edges())
                        }),
                        Err(e) => s.error(&label, e),
                    }
                }
            }
            Err(e) => s.error(&label, e),
        }
    }
    s
}

fn petrial(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("petrial");
    let limits = Limits::default();
    for _ in 0..o.random {
        let g = random_graph(rng, 6, o.max_size.unwrap_or(12));
        let a = g.edges().select(rng.gen());
        let label = g.serialize().replace('\n', " / ");
        let result = (|| {
            let p = petrial_poly(&g, Method::Rank, &limits)?;
            let q = petrial_poly(&g.partial_petrial(a)?, Method::Rank, &limits)?;
            Ok::<_, Error>((p, q))
        })();
        match result {
            Ok((p, q)) => s.record(
                p == q && p.is_interpolating() && p.coefficient_sum() == 1 << g.edge_count(),
                || format!("{label} twisted on {a}: {p} vs {q}"),
            ),
            Err(e) => s.error(label, e),
        }
    }
    s
}

fn join_check(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("join");
    let max = o.max_size.unwrap_or(6);
    for _ in 0..o.random {
        let (m1, m2) = (rng.gen_range(0..=max), rng.gen_range(0..=max));
        let b1 = random_bouquet(rng, m1);
        let b2 = random_bouquet(rng, m2);
        match join(&b1, &b2) {
            Ok(j) => {
                let lhs = modified_or_plain(&j, false);
                let rhs = bouquet_rank_poly(&b1) * bouquet_rank_poly(&b2);
                s.record(lhs == rhs, || {
                    format!("join of [{b1}] and [{b2}]: {lhs} vs {rhs}")
                });
            }
            Err(e) => s.error(format!("join of [{b1}] and [{b2}]"), e),
        }
    }
    s
}

fn modified_or_plain(b: &Bouquet, modified: bool) -> GenusPolynomial {
    if modified {
        modified_poly_bouquet(b, Method::BruteForce)
    } else {
        petrial_poly_bruteforce(b.as_graph()).expect("bouquets are connected")
    }
}

fn sign(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("sign");
    let max = o.max_size.unwrap_or(8);
    for _ in 0..o.random {
        let m = rng.gen_range(0..=max);
        let b = random_bouquet(rng, m);
        let w = b.edges().select(rng.gen());
        match b.partial_petrial(w) {
            Ok(other) => {
                let factor = if w.len() % 2 == 0 { 1 } else { -1 };
                let lhs = modified_or_plain(&b, true);
                let rhs = modified_or_plain(&other, true).scale(factor);
                s.record(lhs == rhs, || {
                    format!("[{b}] retwisted on {w}: {lhs} vs {rhs}")
                });
            }
            Err(e) => s.error(&b, e),
        }
    }
    s
}

fn four_term_bouquets(o: &CheckOptions, rng: &mut impl Rng, modified: bool) -> Summary {
    let name = if modified {
        "four-term-modified"
    } else {
        "four-term-chord"
    };
    let mut s = Summary::new(name);
    let check = |b: &Bouquet, w: &Witness| {
        if modified {
            check_four_term_modified_bouquet(b, w, Method::Rank)
        } else {
            check_four_term_chord(b, w)
        }
    };
    for m in 0..=o.max_size.unwrap_or(4) {
        for b in framed_chord_diagrams(m) {
            for w in witnesses_for(&b, o.all_witnesses) {
                record_report(
                    &mut s,
                    format!("[{b}] a={} b={} at {}", w.a, w.b, w.a_pos),
                    check(&b, &w),
                );
            }
        }
    }
    for _ in 0..o.random {
        let b = random_bouquet(rng, 8);
        let pairs = witnesses_for(&b, o.all_witnesses);
        let chosen: Vec<Witness> = if o.all_witnesses {
            pairs
        } else {
            vec![pairs[rng.gen_range(0..pairs.len())]]
        };
        for w in chosen {
            record_report(
                &mut s,
                format!("[{b}] a={} b={} at {}", w.a, w.b, w.a_pos),
                check(&b, &w),
            );
        }
    }
    s
}

fn four_term_graphs(o: &CheckOptions, rng: &mut impl Rng) -> Summary {
    let mut s = Summary::new("four-term-graph");
    for n in 2..=o.max_size.unwrap_or(4) {
        for g in signed_graphs(n) {
            for a in 0..n {
                for b in (0..n).filter(|&b| b != a) {
                    let what = format!(
                        "{} ({}, {})",
                        g.to_string().replace('\n', "; "),
                        a + 1,
                        b + 1
                    );
                    record_report(&mut s, what, check_four_term_signed_graph(&g, a, b));
                }
            }
        }
    }
    for _ in 0..o.random {
        let g = random_signed_graph(rng, 9, 0.5);
        let a = rng.gen_range(0..9);
        let b = (a + rng.gen_range(1..9)) % 9;
        let what = format!(
            "{} ({}, {})",
            g.to_string().replace('\n', "; "),
            a + 1,
            b + 1
        );
        record_report(&mut s, what, check_four_term_signed_graph(&g, a, b));
    }
    s
}

pub fn run_check(mode: CheckMode, o: &CheckOptions) -> Vec<Summary> {
    let modes = match mode {
        CheckMode::All => vec![
            CheckMode::GenusRank,
            CheckMode::BouquetGenus,
            CheckMode::Poly,
            CheckMode::Petrial,
            CheckMode::Join,
            CheckMode::Sign,
            CheckMode::FourTermChord,
            CheckMode::FourTermModified,
            CheckMode::FourTermGraph,
        ],
        m => vec![m],
    };
    modes
        .into_iter()
        .map(|m| {
            let mut rng = seeded_rng(o.seed);
            match m {
                CheckMode::GenusRank => genus_rank(o, &mut rng),
                CheckMode::BouquetGenus => bouquet_genus(o),
                CheckMode::Poly => poly(o, &mut rng),
                CheckMode::Petrial => petrial(o, &mut rng),
                CheckMode::Join => join_check(o, &mut rng),
                CheckMode::Sign => sign(o, &mut rng),
                CheckMode::FourTermChord => four_term_bouquets(o, &mut rng, false),
                CheckMode::FourTermModified => four_term_bouquets(o, &mut rng, true),
                CheckMode::FourTermGraph => four_term_graphs(o, &mut rng),
                CheckMode::All => unreachable!(),
            }
        })
        .collect()
}

/// One line per trial of random four-term checks.
#[derive(Debug, Serialize)]
pub struct Trial {
    pub trial: usize,
    pub instance: String,
    pub a: u32,
    pub b: u32,
    pub pass: bool,
    pub residual: String,
}

pub fn four_term_trials(mode: FourTermMode, o: &CheckOptions) -> Vec<Trial> {
    let mut rng = seeded_rng(o.seed);
    let size = o.max_size.unwrap_or(8);
    let mut out = Vec::new();
    for trial in 0..o.random {
        match mode {
            FourTermMode::Chord | FourTermMode::Modified => {
                let b = random_bouquet(&mut rng, size.max(2));
                let pairs = witnesses_for(&b, o.all_witnesses);
                let chosen = if o.all_witnesses {
                    pairs
                } else {
                    vec![pairs[rng.gen_range(0..pairs.len())]]
                };
                for w in chosen {
                    let r = if mode == FourTermMode::Chord {
                        check_four_term_chord(&b, &w)
                    } else {
                        check_four_term_modified_bouquet(&b, &w, Method::Rank)
                    }
                    .expect("witness taken from the diagram");
                    out.push(Trial {
                        trial,
                        instance: b.to_string(),
                        a: w.a,
                        b: w.b,
                        pass: r.holds(),
                        residual: r.combination.to_string(),
                    });
                }
            }
            FourTermMode::Graph => {
                let n = size.max(2);
                let g = random_signed_graph(&mut rng, n, 0.5);
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                let r = check_four_term_signed_graph(&g, a, b).expect("distinct vertices");
                out.push(Trial {
                    trial,
                    instance: g.to_string().replace('\n', "; "),
                    a: g.name(a),
                    b: g.name(b),
                    pass: r.holds(),
                    residual: r.combination.to_string(),
                });
            }
        }
    }
    out
}

fn require_bouquet(instance: &crate::input::Instance) -> Result<Bouquet> {
    match instance.ribbon() {
        Some(g) => Bouquet::try_from(g),
        None => Err(Error::InvalidGraph("a chord diagram is required".into())),
    }
}

/// Four-term report for a given instance and pair; chord modes use the
/// leftmost witness unless `all` is set.
pub fn four_term_instance(
    mode: FourTermMode,
    instance: &crate::input::Instance,
    a: u32,
    b: u32,
    all: bool,
) -> Result<Vec<FourTermReport>> {
    match mode {
        FourTermMode::Graph => {
            let g = match instance {
                crate::input::Instance::Signed(g) => g.clone(),
                other => signed_intersection_graph(&require_bouquet(other)?),
            };
            let (ia, ib) = (g.index_of(a)?, g.index_of(b)?);
            Ok(vec![check_four_term_signed_graph(&g, ia, ib)?])
        }
        FourTermMode::Chord | FourTermMode::Modified => {
            let bouquet = require_bouquet(instance)?;
            let witnesses = if all {
                adjacency_witnesses(&bouquet, a, b)
            } else {
                vec![petrial_core::four_term::witness(&bouquet, a, b)?]
            };
            if witnesses.is_empty() {
                return Err(Error::NotAdjacent(a, b));
            }
            witnesses
                .iter()
                .map(|w| {
                    if mode == FourTermMode::Chord {
                        check_four_term_chord(&bouquet, w)
                    } else {
                        check_four_term_modified_bouquet(&bouquet, w, Method::Rank)
                    }
                })
                .collect()
        }
    }
}
