//! The acceptance gate: one test per shipped claim, each printing a single
//! PASS line (run with `--nocapture` to see them; the harness result line
//! carries the same verdict either way). Every numeric claim is exact —
//! no tolerances anywhere.

use moorepack::bounds::{bracket, class_caps};
use moorepack::coloring::{
    build_labeled_tree, color_moore6, color_moore8, moore12_color_count,
    moore12_constructed_class_sizes, verify_coloring,
};
use moorepack::files::{load_graph_auto, GraphFile};
use moorepack::fixtures::fixtures_dir;
use moorepack::generators::{
    cage_3_12_coloring, gen_cage_3_12, gen_classical, gen_gq_incidence, gen_pg_incidence,
    verify_generalized_polygon, Classical,
};
use moorepack::geometry::{construct_gq_ovoid, verify_ovoid};
use moorepack::graphcore::{
    enumerate_max_independent_sets, girth, independence_number, INF,
};
use moorepack::solver::{chi_rho_diameter2, solve_exact, solve_upper};
use moorepack::{Graph, PackingColoring, SearchConfig, SolveOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn heawood() -> Graph {
    // The Heawood graph is the point-line incidence graph of the Fano plane.
    gen_pg_incidence(2).expect("q = 2 is prime")
}

#[test]
fn acceptance_1_generation_invariants() {
    let clock = Instant::now();
    for q in [2u64, 3, 4, 5] {
        let gq = gen_gq_incidence(q).expect("prime power");
        assert_eq!(gq.n() as u64, 2 * (q + 1) * (q * q + 1), "GQ({q}) order");
        let report = verify_generalized_polygon(&gq, 4);
        assert!(report.pass(), "GQ({q}) checks:\n{report}");

        let pg = gen_pg_incidence(q).expect("prime power");
        assert_eq!(pg.n() as u64, 2 * (q * q + q + 1), "PG({q}) order");
        let report = verify_generalized_polygon(&pg, 3);
        assert!(report.pass(), "PG({q}) checks:\n{report}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "ACCEPTANCE 1: PASS — quadrangle and plane incidence graphs verified for q in {{2,3,4,5}} ({elapsed:?})"
    );
}

#[test]
fn acceptance_2_embedded_cage_and_its_26_coloring() {
    let clock = Instant::now();
    let g = gen_cage_3_12();
    assert_eq!(g.n(), 126);
    assert_eq!(girth(&g), Some(12));
    assert_eq!(g.distances().diameter(), Some(6));

    let gamma = PackingColoring::new(cage_3_12_coloring()).expect("no zero colors");
    assert_eq!(gamma.max_color(), 26, "embedded witness uses exactly 26 colors");
    let report = verify_coloring(&g, &gamma);
    assert!(report.pass(), "embedded witness:\n{report}");

    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("ACCEPTANCE 2: PASS — (3,12)-cage fixture reproduced; embedded Γ is a valid packing 26-coloring ({elapsed:?})");
}

#[test]
fn acceptance_3_constructive_coloring_counts() {
    let clock = Instant::now();
    for q in [2u64, 3, 4, 5] {
        let g = gen_pg_incidence(q).unwrap();
        let c = color_moore6(&g).expect("construction succeeds");
        assert_eq!(
            c.max_color() as u64,
            q * q + q + 2,
            "girth-6 color count at q = {q}"
        );
        let report = verify_coloring(&g, &c);
        assert!(report.pass(), "girth-6 coloring at q = {q}:\n{report}");
    }
    for q in [3u64, 5] {
        let g = gen_gq_incidence(q).unwrap();
        let c = color_moore8(&g).expect("construction succeeds");
        assert_eq!(
            c.max_color() as u64,
            (q * q + 1) * (q - 1) + 4,
            "girth-8 color count at q = {q}"
        );
        let report = verify_coloring(&g, &c);
        assert!(report.pass(), "girth-8 coloring at q = {q}:\n{report}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("ACCEPTANCE 3: PASS — constructive colorings use exactly q²+q+2 (girth 6) and (q²+1)(q−1)+4 (girth 8) colors ({elapsed:?})");
}

#[test]
fn acceptance_4_ovoid_family_properties() {
    let clock = Instant::now();
    for q in [3u64, 5] {
        let g = gen_gq_incidence(q).unwrap();
        let rho = g
            .vertex_by_label("(rho,rho,rho)_0")
            .expect("coordinatized host");
        let mut family = Vec::new();
        for t in 0..q as u16 {
            let ovoid = construct_gq_ovoid(&g, t).expect("odd q");
            assert_eq!(ovoid.vertices.len() as u64, q * q + 1, "size at t = {t}");
            let report = verify_ovoid(&g, &ovoid.vertices);
            assert!(report.pass(), "O({t}) at q = {q}:\n{report}");
            family.push(BTreeSet::from_iter(ovoid.vertices));
        }
        for s in &family {
            assert!(s.contains(&rho));
        }
        let meet: Vec<u32> = family[0].intersection(&family[1]).copied().collect();
        assert_eq!(meet, vec![rho], "O(0) ∩ O(1) at q = {q}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("ACCEPTANCE 4: PASS — every O(t) is a verified ovoid and O(0) ∩ O(1) = {{(ρ,ρ,ρ)₀}} for q in {{3,5}} ({elapsed:?})");
}

#[test]
fn acceptance_5_exact_solver_baselines() {
    let clock = Instant::now();
    let cases: Vec<(&str, Graph, u32)> = vec![
        ("C8", gen_classical(Classical::Cycle { m: 8 }).unwrap(), 3),
        ("C5", gen_classical(Classical::Cycle { m: 5 }).unwrap(), 4),
        ("C6", gen_classical(Classical::Cycle { m: 6 }).unwrap(), 4),
        ("K5", gen_classical(Classical::Complete { n: 5 }).unwrap(), 5),
        (
            "K33",
            gen_classical(Classical::CompleteBipartite { n: 3 }).unwrap(),
            4,
        ),
        ("Petersen", gen_classical(Classical::Petersen).unwrap(), 7),
        ("Heawood", heawood(), 8),
    ];
    for (name, g, expected) in &cases {
        let out = solve_exact(g, &SearchConfig::new(g.n() as u32)).unwrap();
        assert!(out.certified, "{name} not certified");
        assert_eq!(out.value(), Some(*expected), "chi_rho({name})");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");

    let hs_clock = Instant::now();
    let hs = gen_classical(Classical::HoffmanSingleton).unwrap();
    let value = chi_rho_diameter2(&hs).expect("diameter 2");
    assert_eq!(value, 36, "chi_rho(Hoffman–Singleton)");
    let hs_elapsed = hs_clock.elapsed();
    assert!(hs_elapsed < Duration::from_secs(600), "took {hs_elapsed:?}");
    println!("ACCEPTANCE 5: PASS — seven exact baselines match and chi_rho(Hoffman–Singleton) = 36 via exact β ({elapsed:?} + {hs_elapsed:?})");
}

#[test]
fn acceptance_6_girth8_exactness_at_q2() {
    let clock = Instant::now();
    let g = gen_gq_incidence(2).unwrap();
    let set = bracket(2, 8).unwrap();
    let exact = set.get("exact").expect("exact entry at even q");
    assert!(exact.applicable && exact.is_integer());
    assert_eq!(exact.value_string(), "9");

    let cfg = SearchConfig::new(9).with_time_limit(Duration::from_secs(30 * 60));
    let out = solve_exact(&g, &cfg).unwrap();
    if out.certified {
        assert_eq!(out.value(), Some(9), "chi_rho(GQ(2))");
        let elapsed = clock.elapsed();
        println!("ACCEPTANCE 6: PASS — solve_exact certifies chi_rho(GQ(2)) = 9, matching the closed-form exact value ({elapsed:?}, {} nodes)", out.stats.nodes);
    } else {
        // Fallback acceptance: a 9-color witness plus the closed-form
        // lower bound, with the remaining gap stated.
        let upper = solve_upper(&g, &SearchConfig::new(9)).unwrap();
        let witness = match upper.outcome {
            SolveOutcome::Solved(c) => c,
            _ => panic!("no 9-color witness found"),
        };
        assert!(verify_coloring(&g, &witness).pass());
        let lower = set.get("lower").expect("lower entry");
        assert_eq!(lower.value_string(), "8");
        let elapsed = clock.elapsed();
        println!("ACCEPTANCE 6: PASS (fallback) — refutation at 8 exceeded budget; witness gives ≤ 9, closed form gives ≥ 8, gap 8 ≤ chi_rho ≤ 9 unresolved by search ({elapsed:?})");
    }
}

#[test]
fn acceptance_7_girth12_substituted_properties() {
    let clock = Instant::now();

    // (a) Edge-rooted tree labeling of the (3,12)-cage: bijective labels,
    // doubling level sizes, sibling blocks.
    let g = gen_cage_3_12();
    let x = 0u32;
    let y = g.neighbors(x)[0];
    let tree = build_labeled_tree(&g, x, y).expect("cage is a girth-12 Moore graph");
    assert_eq!(tree.q(), 2);
    let mut seen = BTreeSet::new();
    for v in 0..g.n() as u32 {
        seen.insert(tree.label(v).to_string());
        assert_eq!(tree.vertex(tree.label(v)), Some(v), "label lookup inverts");
    }
    assert_eq!(seen.len(), 126, "labels are distinct");
    for k in [0u8, 1] {
        for j in 0u8..6 {
            assert_eq!(tree.level_size(k, j), 1 << j, "level ({k},{j}) size");
        }
    }
    for alpha in [2u8, 3, 5] {
        assert_eq!(tree.block_count(alpha), 1 << (alpha - 1));
        for i in 0..tree.block_count(alpha) {
            let members = tree.block(alpha, i);
            assert_eq!(members.len(), 2);
            let parents: BTreeSet<u64> =
                members.iter().map(|&v| tree.label(v).i / 2).collect();
            assert_eq!(parents.len(), 1, "block members are siblings");
        }
    }

    // (b) Color-count identity in exact integer arithmetic.
    for q in 2u128..=64 {
        let sizes = moore12_constructed_class_sizes(q);
        let order = 2 * (q.pow(5) + q.pow(4) + q.pow(3) + q.pow(2) + q + 1);
        assert_eq!(sizes[0], order / 2, "class 1 is one full side at q = {q}");
        let polynomial = q.pow(5) + q.pow(4) + 4 - 2 * q.pow(3) - q.pow(2);
        assert_eq!(moore12_color_count(q), polynomial, "identity at q = {q}");
    }

    // (c) Bit-exact lemma/theorem values at q = 3 and q = 9.
    let caps3 = class_caps(3, 12).unwrap();
    assert_eq!(caps3.get("class4").unwrap().value_string(), "42");
    assert_eq!(caps3.get("class3").unwrap().value_string(), "91");
    assert_eq!(caps3.get("class5").unwrap().value_string(), "28");
    let bracket9 = bracket(9, 12).unwrap();
    let lower = bracket9.get("lower").unwrap();
    assert!(lower.applicable);
    assert_eq!(lower.value_string(), "502368/11 (≈ 45669.818)");
    assert_eq!(lower.ceil_value().to_string(), "45670");
    let upper = bracket9.get("upper").unwrap();
    assert!(upper.applicable && upper.is_integer());
    assert_eq!(upper.value_string(), "64075");

    // (d) Optional (4,12)-Moore instance: a 219-color attempt must either
    // succeed or exhaust its budget — 219 is a target, not a gate. Without
    // the fixture, the same load→solve→verify path runs on a synthetic
    // adjacency file so the pipeline is exercised either way.
    let fixture = fixtures_dir().and_then(|dir| {
        ["moore_4_12.json", "moore_4_12.adj", "moore-4-12.json", "moore-4-12.txt"]
            .iter()
            .map(|name| dir.join(name))
            .find(|p| p.exists())
    });
    let d_summary = match fixture {
        Some(path) => {
            let host = load_graph_auto(&path).expect("fixture parses");
            assert_eq!(host.n(), 728, "(4,12)-Moore order");
            assert_eq!(girth(&host), Some(12));
            let cfg = SearchConfig::new(219).with_time_limit(Duration::from_secs(120));
            let run = solve_upper(&host, &cfg).unwrap();
            match run.outcome {
                SolveOutcome::Solved(c) => {
                    assert!(verify_coloring(&host, &c).pass());
                    format!("(d) {}-color witness found on the supplied instance", c.max_color())
                }
                SolveOutcome::BudgetExceeded => {
                    "(d) budget exhausted below 219 on the supplied instance (reported, not failed)"
                        .to_string()
                }
                SolveOutcome::Infeasible => panic!("219 colors refuted — contradicts the theory"),
            }
        }
        None => {
            let dir = tempfile::tempdir().expect("tempdir");
            let path = dir.path().join("synthetic.adj");
            let small = heawood();
            let text: String = (0..small.n() as u32)
                .map(|v| {
                    let row: Vec<String> =
                        small.neighbors(v).iter().map(u32::to_string).collect();
                    row.join(" ") + "\n"
                })
                .collect();
            std::fs::write(&path, text).expect("write synthetic fixture");
            let host = load_graph_auto(&path).expect("synthetic file parses");
            assert_eq!(host.n(), 14);
            let run = solve_upper(&host, &SearchConfig::new(219)).unwrap();
            match run.outcome {
                SolveOutcome::Solved(c) => assert!(verify_coloring(&host, &c).pass()),
                other => panic!("synthetic host must solve under 219 colors: {other:?}"),
            }
            "(d) no moore_4_12 fixture under MOOREPACK_FIXTURES; load→solve→verify exercised on a synthetic file"
                .to_string()
        }
    };

    let elapsed = clock.elapsed();
    println!("ACCEPTANCE 7: PASS — tree labeling, color-count identity for q = 2..64, bit-exact bounds at q in {{3,9}}; {d_summary} ({elapsed:?})");
}

#[test]
fn acceptance_8_heawood_maximum_independent_sets() {
    let clock = Instant::now();
    let g = heawood();
    let sides = g.bipartite_sides().expect("incidence graphs are bipartite");
    let mut expected: Vec<BTreeSet<u32>> = vec![BTreeSet::new(), BTreeSet::new()];
    for v in 0..g.n() as u32 {
        expected[sides[v as usize] as usize].insert(v);
    }
    expected.sort();

    let mut found: Vec<BTreeSet<u32>> = enumerate_max_independent_sets(&g, 0)
        .expect("14 vertices is within range")
        .into_iter()
        .map(BTreeSet::from_iter)
        .collect();
    found.sort();
    assert_eq!(found.len(), 2, "exactly two maximum independent sets");
    assert_eq!(found, expected, "they are the two bipartition sides");

    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("ACCEPTANCE 8: PASS — the Heawood graph's only maximum independent sets are its two sides ({elapsed:?})");
}

/// Brute-force Floyd–Warshall to cross-check the library's BFS matrix.
#[allow(clippy::needless_range_loop)]
fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    const FAR: u32 = u32::MAX / 4;
    let n = g.n();
    let mut d = vec![vec![FAR; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u as u32) {
            d[u][v as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Exhaustive independent-set search over subsets, branching on the lowest
/// remaining vertex. Isolated vertices are always taken — that is never
/// suboptimal and keeps the tree small.
fn brute_force_beta(nbr: &[u64], mask: u64) -> u32 {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    if nbr[v] & rest == 0 {
        return 1 + brute_force_beta(nbr, rest);
    }
    let take = 1 + brute_force_beta(nbr, rest & !nbr[v]);
    let skip = brute_force_beta(nbr, rest);
    take.max(skip)
}

#[test]
fn acceptance_9_oracle_equivalence() {
    let clock = Instant::now();

    // BFS all-pairs distances against Floyd–Warshall.
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    for trial in 0..25 {
        let n = rng.gen_range(2..=60);
        let p = if trial % 2 == 0 { 0.12 } else { 0.35 };
        let g = random_graph(&mut rng, n, p);
        let oracle = floyd_warshall(&g);
        let dm = g.distances();
        for u in 0..n as u32 {
            for (v, &brute) in oracle[u as usize].iter().enumerate() {
                let bfs = dm.row(u)[v];
                if bfs == INF {
                    assert!(brute > n as u32, "trial {trial}: ({u},{v}) reachable");
                } else {
                    assert_eq!(u32::from(bfs), brute, "trial {trial}: d({u},{v})");
                }
            }
        }
    }

    // Matching-based β against exhaustive subset search on bipartite graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(901);
    for trial in 0..25 {
        let left = rng.gen_range(1..=12usize);
        let right = rng.gen_range(1..=12usize);
        let n = left + right;
        let mut edges = Vec::new();
        for u in 0..left as u32 {
            for v in left as u32..n as u32 {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        assert!(g.bipartite_sides().is_some());
        let via_matching = independence_number(&g).unwrap() as u32;

        let mut nbr = vec![0u64; n];
        for &(u, v) in &edges {
            nbr[u as usize] |= 1 << v;
            nbr[v as usize] |= 1 << u;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let brute = brute_force_beta(&nbr, full);
        assert_eq!(via_matching, brute, "trial {trial}: β on {n} vertices");
    }

    let elapsed = clock.elapsed();
    println!("ACCEPTANCE 9: PASS — BFS distances match Floyd–Warshall on 25 graphs; matching-based β matches exhaustive search on 25 bipartite graphs ({elapsed:?})");
}

/// Not one of the numbered criteria: the canonical JSON serialization of
/// the embedded cage is frozen by digest, so any accidental change to the
/// fixture, the adjacency normalization, or the serializer shows up here.
#[test]
fn canonical_cage_json_digest_is_frozen() {
    use sha2::{Digest, Sha256};
    let text = GraphFile::from_graph(&gen_cage_3_12()).to_json_string();
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    assert_eq!(
        digest,
        "948aec5fbf98b522d81dc68b025d9c3f549491b80281c1a40393254365988edd",
        "canonical cage JSON changed; if intentional, refreeze the digest"
    );
}
