//! Exact packing-chromatic search.
//!
//! The core is a depth-first backtracker: vertices are colored in a fixed
//! order, each with the least color ≤ `max_color` whose class stays
//! pairwise far enough apart, backtracking on dead ends. On top of it,
//! [`solve_upper`] finds one valid coloring under a cap (an upper-bound
//! witness) and [`solve_exact`] descends the cap until an exhaustive
//! refutation certifies optimality.
//!
//! Optional pruning is restricted to constraints that hold for *every*
//! valid packing coloring, so it can never change a verdict:
//! - |class 1| ≤ β(G) (color 1 is an independent set);
//! - |class c| ≤ the exact maximum size of a pairwise-distance-(> c) set,
//!   computed by clique search on the far graph when n ≤ 64;
//! - |class c| = 1 once c ≥ diameter, and those interchangeable singleton
//!   colors are introduced in ascending order (a symmetry break among
//!   classes that are singletons in every valid coloring).
//!
//! Closed-form class caps that are *not* distance constraints stay in the
//! bounds module as diagnostics; the solver never prunes with them.

use crate::coloring::PackingColoring;
use crate::graphcore::{
    far_bitgraph, independence_number, DistanceMatrix, Graph, SearchBudget,
};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("max_color must be at least 1")]
    MaxColorZero,
    #[error("graph has diameter {found:?}, need exactly 2")]
    NotDiameter2 { found: Option<u16> },
    #[error(transparent)]
    Graph(#[from] crate::graphcore::GraphError),
}

/// Vertex orders for the depth-first search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Vertex ids ascending — mirrors a plain backtracking run and makes
    /// the witness the lexicographically least coloring.
    Natural,
    /// Degree descending, ids breaking ties.
    DegreeDesc,
    /// BFS layers from a maximum-degree root; keeps tightly constrained
    /// vertices adjacent in the search. The default.
    #[default]
    DistanceFromRoot,
}

/// Knobs for one search: color cap, vertex order, pruning, and budget.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_color: u32,
    pub order: VertexOrder,
    /// Enable the admissible prunes described at module level.
    pub prune: bool,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchConfig {
    pub fn new(max_color: u32) -> Self {
        SearchConfig {
            max_color,
            order: VertexOrder::default(),
            prune: true,
            node_limit: None,
            time_limit: None,
        }
    }

    /// Plain least-color depth-first search: natural vertex order, no
    /// pruning. Slowest but most predictable; the witness is the
    /// lexicographically least valid coloring under the cap.
    pub fn plain(max_color: u32) -> Self {
        SearchConfig {
            order: VertexOrder::Natural,
            prune: false,
            ..Self::new(max_color)
        }
    }

    pub fn with_order(mut self, order: VertexOrder) -> Self {
        self.order = order;
        self
    }

    pub fn with_prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    fn budget(&self) -> SearchBudget {
        let mut b = match self.time_limit {
            Some(t) => SearchBudget::with_time(t),
            None => SearchBudget::unlimited(),
        };
        if let Some(n) = self.node_limit {
            b = b.node_limit(n);
        }
        b
    }
}

/// Search effort and completion flag of one solver call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// True when the search reached its natural end (found or exhausted)
    /// rather than the budget.
    pub complete: bool,
}

/// Verdict of [`solve_upper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A valid coloring under the cap.
    Solved(PackingColoring),
    /// Exhaustive search proved no coloring with ≤ max_color colors
    /// exists.
    Infeasible,
    /// The node or time budget ran out first.
    BudgetExceeded,
}

/// One solver call: verdict plus effort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveRun {
    pub outcome: SolveOutcome,
    pub stats: SearchStats,
}

/// Result of [`solve_exact`]: a proven bracket, a witness at `upper`, and
/// whether the refutation at `upper − 1` completed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub lower: u32,
    pub upper: u32,
    pub witness: Option<PackingColoring>,
    /// True when lower == upper is proven (witness found and the next cap
    /// down exhaustively refuted).
    pub certified: bool,
    pub stats: SearchStats,
}

impl ExactOutcome {
    /// The packing chromatic number, when certified.
    pub fn value(&self) -> Option<u32> {
        self.certified.then_some(self.upper)
    }
}

/// The feasibility test at the heart of the backtracker, exposed for
/// inspection: may vertex `v` take color `c` given the partial assignment
/// `partial` (0 = uncolored)? True iff no other vertex already has color c
/// within distance c of v.
pub fn feasible_extension_check(g: &Graph, partial: &[u32], v: u32, c: u32) -> bool {
    let dm = g.distances();
    partial
        .iter()
        .enumerate()
        .all(|(u, &cu)| u as u32 == v || cu != c || dm.get(u as u32, v) as u32 > c)
}

fn search_order(g: &Graph, order: VertexOrder) -> Vec<u32> {
    let n = g.n() as u32;
    let mut verts: Vec<u32> = (0..n).collect();
    match order {
        VertexOrder::Natural => {}
        VertexOrder::DegreeDesc => {
            verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        }
        VertexOrder::DistanceFromRoot => {
            if n > 0 {
                let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
                let dm = g.distances();
                verts.sort_by_key(|&v| (dm.get(root, v), v));
            }
        }
    }
    verts
}

/// Sound per-color class caps for pruning, indexed by color (entry 0
/// unused). Caps are exact maxima of distance-constrained sets, hence
/// valid for every packing coloring of `g`.
fn class_caps(g: &Graph, max_color: u32) -> Vec<u32> {
    let n = g.n() as u32;
    let dm = g.distances();
    let diam = dm.diameter();
    let mut caps = vec![n; max_color as usize + 1];
    if max_color == 0 {
        return caps;
    }
    caps[0] = 0;
    if let Ok(beta) = independence_number(g) {
        caps[1] = beta as u32;
    }
    let exact_far_caps = g.n() <= 64;
    let all: Vec<u32> = (0..n).collect();
    let mut last = caps[1];
    for c in 2..=max_color {
        let cap = if diam.is_some_and(|d| c >= d as u32) {
            1
        } else if exact_far_caps && last > 1 {
            let far = far_bitgraph(dm, &all, (c + 1).min(u16::MAX as u32) as u16);
            let (set, complete) = far.max_clique(&mut SearchBudget::unlimited());
            debug_assert!(complete);
            set.len() as u32
        } else if exact_far_caps {
            // Far sets only shrink as the distance grows.
            1
        } else {
            n
        };
        caps[c as usize] = cap;
        last = cap;
    }
    caps
}

enum Dfs {
    Found,
    Exhausted,
    Out,
}

struct Searcher<'a> {
    dm: &'a DistanceMatrix,
    order: Vec<u32>,
    max_color: u32,
    prune: bool,
    caps: Vec<u32>,
    used: Vec<u32>,
    classes: Vec<Vec<u32>>,
    colors: Vec<u32>,
    /// First color of the all-singleton suffix of `caps` (u32::MAX when
    /// there is none); fresh colors ≥ this are interchangeable.
    sym_start: u32,
    /// How many of the suffix colors are in use — they are always used in
    /// ascending order, so the next fresh one is sym_start + fresh_used.
    fresh_used: u32,
}

impl Searcher<'_> {
    fn feasible(&self, v: u32, c: u32) -> bool {
        self.classes[c as usize]
            .iter()
            .all(|&u| self.dm.get(u, v) as u32 > c)
    }

    fn dfs(&mut self, pos: usize, budget: &mut SearchBudget) -> Dfs {
        if pos == self.order.len() {
            return Dfs::Found;
        }
        let v = self.order[pos];
        for c in 1..=self.max_color {
            if self.prune {
                if self.used[c as usize] >= self.caps[c as usize] {
                    continue;
                }
                if c >= self.sym_start
                    && self.used[c as usize] == 0
                    && c != self.sym_start + self.fresh_used
                {
                    continue;
                }
            }
            if !budget.tick() {
                return Dfs::Out;
            }
            if !self.feasible(v, c) {
                continue;
            }
            self.colors[v as usize] = c;
            self.used[c as usize] += 1;
            self.classes[c as usize].push(v);
            let fresh = self.prune && c >= self.sym_start && self.used[c as usize] == 1;
            if fresh {
                self.fresh_used += 1;
            }
            match self.dfs(pos + 1, budget) {
                Dfs::Found => return Dfs::Found,
                Dfs::Out => {
                    self.unassign(v, c, fresh);
                    return Dfs::Out;
                }
                Dfs::Exhausted => self.unassign(v, c, fresh),
            }
        }
        Dfs::Exhausted
    }

    fn unassign(&mut self, v: u32, c: u32, fresh: bool) {
        self.colors[v as usize] = 0;
        self.used[c as usize] -= 1;
        self.classes[c as usize].pop();
        if fresh {
            self.fresh_used -= 1;
        }
    }
}

fn run_search(
    g: &Graph,
    max_color: u32,
    order: VertexOrder,
    prune: bool,
    budget: &mut SearchBudget,
) -> (Dfs, Vec<u32>) {
    let caps = if prune {
        class_caps(g, max_color)
    } else {
        vec![g.n() as u32; max_color as usize + 1]
    };
    // Total capacity must cover the graph; caps are valid for every
    // coloring, so a shortfall is a complete refutation, not a heuristic.
    if prune {
        let capacity: u64 = caps.iter().skip(1).map(|&c| c as u64).sum();
        if capacity < g.n() as u64 {
            return (Dfs::Exhausted, Vec::new());
        }
    }
    let sym_start = if prune {
        let mut s = max_color + 1;
        while s > 2 && caps[s as usize - 1] == 1 {
            s -= 1;
        }
        s
    } else {
        u32::MAX
    };
    let mut searcher = Searcher {
        dm: g.distances(),
        order: search_order(g, order),
        max_color,
        prune,
        caps,
        used: vec![0; max_color as usize + 1],
        classes: vec![Vec::new(); max_color as usize + 1],
        colors: vec![0; g.n()],
        sym_start,
        fresh_used: 0,
    };
    let verdict = searcher.dfs(0, budget);
    (verdict, searcher.colors)
}

/// Depth-first search for any valid packing coloring with at most
/// `cfg.max_color` colors. Deterministic for a given config; the witness
/// under [`SearchConfig::plain`] is the lexicographically least valid
/// coloring.
pub fn solve_upper(g: &Graph, cfg: &SearchConfig) -> Result<SolveRun, SolverError> {
    if cfg.max_color == 0 {
        return Err(SolverError::MaxColorZero);
    }
    let started = Instant::now();
    let mut budget = cfg.budget();
    let (verdict, colors) = run_search(g, cfg.max_color, cfg.order, cfg.prune, &mut budget);
    let stats = |complete: bool| SearchStats {
        nodes: budget.nodes(),
        elapsed: started.elapsed(),
        complete,
    };
    Ok(match verdict {
        Dfs::Found => SolveRun {
            outcome: SolveOutcome::Solved(
                PackingColoring::new(colors).expect("search assigns positive colors"),
            ),
            stats: stats(true),
        },
        Dfs::Exhausted => SolveRun {
            outcome: SolveOutcome::Infeasible,
            stats: stats(true),
        },
        Dfs::Out => SolveRun {
            outcome: SolveOutcome::BudgetExceeded,
            stats: stats(false),
        },
    })
}

fn all_distinct(g: &Graph) -> PackingColoring {
    PackingColoring::new((1..=g.n() as u32).collect()).expect("positive colors")
}

/// Compute χ_ρ exactly: find a witness, then lower the cap one color at a
/// time until an exhaustive search refutes `upper − 1`. `cfg.max_color`
/// is the starting cap (clamped to n); the node/time budget spans the
/// whole descent. When the budget runs out the result is the proven
/// bracket so far with `certified = false`.
pub fn solve_exact(g: &Graph, cfg: &SearchConfig) -> Result<ExactOutcome, SolverError> {
    if cfg.max_color == 0 {
        return Err(SolverError::MaxColorZero);
    }
    let started = Instant::now();
    let n = g.n() as u32;
    let mut budget = cfg.budget();
    let finish = |lower: u32,
                  upper: u32,
                  witness: Option<PackingColoring>,
                  complete: bool,
                  budget: &SearchBudget| ExactOutcome {
        lower,
        upper,
        witness,
        certified: lower == upper,
        stats: SearchStats {
            nodes: budget.nodes(),
            elapsed: started.elapsed(),
            complete,
        },
    };
    if n == 0 {
        let empty = PackingColoring::new(Vec::new()).expect("empty");
        return Ok(finish(0, 0, Some(empty), true, &budget));
    }

    let mut lower = if g.edge_count() > 0 { 2 } else { 1 };
    let start_cap = cfg.max_color.min(n);
    let (mut upper, mut witness) =
        match run_search(g, start_cap, cfg.order, cfg.prune, &mut budget) {
            (Dfs::Found, colors) => {
                let c = PackingColoring::new(colors).expect("positive colors");
                (c.max_color(), Some(c))
            }
            (Dfs::Exhausted, _) => {
                // χ_ρ exceeds the starting cap; fall back to the trivial
                // witness. A cap of n is never exhausted (all-distinct is
                // valid), so start_cap < n here.
                lower = lower.max(start_cap + 1);
                (n, Some(all_distinct(g)))
            }
            (Dfs::Out, _) => {
                return Ok(finish(lower.min(n), n, Some(all_distinct(g)), false, &budget));
            }
        };

    while lower < upper {
        match run_search(g, upper - 1, cfg.order, cfg.prune, &mut budget) {
            (Dfs::Found, colors) => {
                let c = PackingColoring::new(colors).expect("positive colors");
                upper = c.max_color();
                witness = Some(c);
            }
            (Dfs::Exhausted, _) => {
                lower = upper;
            }
            (Dfs::Out, _) => {
                return Ok(finish(lower, upper, witness, false, &budget));
            }
        }
    }
    Ok(finish(lower, upper, witness, true, &budget))
}

/// χ_ρ of a connected graph with diameter ≤ 2 in closed form:
/// n − β(G) + 1, with β computed exactly. (At diameter 2 every color ≥ 2
/// class is a singleton; complete graphs satisfy the same formula with
/// β = 1.)
pub fn chi_rho_diameter2(g: &Graph) -> Result<u32, SolverError> {
    let diam = g.distances().diameter();
    if !diam.is_some_and(|d| d <= 2) {
        return Err(SolverError::NotDiameter2 { found: diam });
    }
    let beta = independence_number(g)?;
    Ok(g.n() as u32 - beta as u32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::fixtures::cage312_gamma;
    use crate::generators::{
        gen_cage_3_12, gen_classical, gen_gq_incidence, gen_pg_incidence, Classical,
    };
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn exact(g: &Graph) -> u32 {
        let out = solve_exact(g, &SearchConfig::new(g.n() as u32)).unwrap();
        assert!(out.certified);
        let witness = out.witness.as_ref().unwrap();
        assert!(verify_coloring(g, witness).pass());
        assert_eq!(witness.max_color(), out.upper);
        out.value().unwrap()
    }

    #[test]
    fn feasibility_check_matches_the_definition() {
        let g = gen_classical(Classical::Cycle { m: 6 }).unwrap();
        // Empty prefix: anything goes.
        assert!(feasible_extension_check(&g, &[0; 6], 0, 1));
        // Adjacent vertices cannot share color 1.
        assert!(!feasible_extension_check(&g, &[1, 0, 0, 0, 0, 0], 1, 1));
        // Distance 3 suffices for color 2.
        assert!(feasible_extension_check(&g, &[2, 0, 0, 0, 0, 0], 3, 2));
        // ... but not for color 3.
        assert!(!feasible_extension_check(&g, &[3, 0, 0, 0, 0, 0], 3, 3));
    }

    #[test]
    fn upper_search_finds_and_refutes() {
        let k3 = gen_classical(Classical::Complete { n: 3 }).unwrap();
        let run = solve_upper(&k3, &SearchConfig::new(2)).unwrap();
        assert_eq!(run.outcome, SolveOutcome::Infeasible);
        assert!(run.stats.complete);
        let run = solve_upper(&k3, &SearchConfig::new(3)).unwrap();
        let SolveOutcome::Solved(c) = run.outcome else {
            panic!("expected a coloring");
        };
        assert_eq!(c.max_color(), 3);

        let c4 = gen_classical(Classical::Cycle { m: 4 }).unwrap();
        let run = solve_upper(&c4, &SearchConfig::new(3)).unwrap();
        assert!(matches!(run.outcome, SolveOutcome::Solved(_)));
    }

    #[test]
    fn upper_search_is_monotone_in_the_cap() {
        let p = gen_classical(Classical::Petersen).unwrap();
        for cap in 7..=9 {
            let run = solve_upper(&p, &SearchConfig::new(cap)).unwrap();
            assert!(matches!(run.outcome, SolveOutcome::Solved(_)), "cap {cap}");
        }
        let run = solve_upper(&p, &SearchConfig::new(6)).unwrap();
        assert_eq!(run.outcome, SolveOutcome::Infeasible);
    }

    #[test]
    fn plain_search_reproduces_the_embedded_cage_witness() {
        // The embedded 26-color vector is exactly what a least-color
        // depth-first search emits in natural vertex order, so the run is
        // reproduced bit for bit.
        let g = gen_cage_3_12();
        let run = solve_upper(&g, &SearchConfig::plain(26)).unwrap();
        let SolveOutcome::Solved(c) = run.outcome else {
            panic!("cage admits 26 colors");
        };
        assert_eq!(c.colors(), cage312_gamma().as_slice());
        assert_eq!(c.max_color(), 26);
        assert!(verify_coloring(&g, &c).pass());
    }

    #[test]
    fn pruned_search_beats_the_embedded_cage_witness() {
        // Distance-from-root order with pruning packs colors 2..5 tighter
        // than the lexicographic run and lands on 25 colors within a few
        // hundred nodes. (A deeper budgeted descent reaches 20 — that
        // witness ships as `fixtures::cage312_witness20`.)
        let g = gen_cage_3_12();
        let run = solve_upper(&g, &SearchConfig::new(26)).unwrap();
        let SolveOutcome::Solved(c) = run.outcome else {
            panic!("cage admits 26 colors");
        };
        assert!(verify_coloring(&g, &c).pass());
        assert!(c.max_color() < 26, "got {}", c.max_color());
    }

    #[test]
    fn exact_values_match_known_baselines() {
        let cases: Vec<(Graph, u32)> = vec![
            (gen_classical(Classical::Cycle { m: 8 }).unwrap(), 3),
            (gen_classical(Classical::Cycle { m: 5 }).unwrap(), 4),
            (gen_classical(Classical::Cycle { m: 6 }).unwrap(), 4),
            (gen_classical(Classical::Complete { n: 5 }).unwrap(), 5),
            (gen_classical(Classical::CompleteBipartite { n: 3 }).unwrap(), 4),
            (gen_classical(Classical::Petersen).unwrap(), 7),
        ];
        for (g, chi) in cases {
            assert_eq!(exact(&g), chi, "{} vertices", g.n());
        }
    }

    #[test]
    fn exact_value_for_heawood_is_8() {
        let g = gen_pg_incidence(2).unwrap();
        assert_eq!(exact(&g), 8);
    }

    #[test]
    fn diameter2_shortcut_agrees_with_search() {
        let p = gen_classical(Classical::Petersen).unwrap();
        assert_eq!(chi_rho_diameter2(&p).unwrap(), 7);
        let k5 = gen_classical(Classical::Complete { n: 5 }).unwrap();
        assert_eq!(chi_rho_diameter2(&k5).unwrap(), 5);
        let k33 = gen_classical(Classical::CompleteBipartite { n: 3 }).unwrap();
        assert_eq!(chi_rho_diameter2(&k33).unwrap(), 4);
        let heawood = gen_pg_incidence(2).unwrap();
        assert!(matches!(
            chi_rho_diameter2(&heawood),
            Err(SolverError::NotDiameter2 { found: Some(3) })
        ));
    }

    #[test]
    fn pruning_never_changes_the_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for trial in 0..10 {
            let n = rng.gen_range(5..=12);
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let with = solve_exact(&g, &SearchConfig::new(n as u32)).unwrap();
            let without =
                solve_exact(&g, &SearchConfig::new(n as u32).with_prune(false)).unwrap();
            assert!(with.certified && without.certified, "trial {trial}");
            assert_eq!(with.upper, without.upper, "trial {trial}: {n} vertices");
        }
    }

    #[test]
    fn search_is_deterministic() {
        let g = gen_gq_incidence(2).unwrap();
        let cfg = SearchConfig::new(12);
        let a = solve_upper(&g, &cfg).unwrap();
        let b = solve_upper(&g, &cfg).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }

    #[test]
    fn budget_exhaustion_reports_a_bracket() {
        let g = gen_pg_incidence(2).unwrap();
        let cfg = SearchConfig::new(14).with_node_limit(10);
        let out = solve_exact(&g, &cfg).unwrap();
        assert!(!out.certified);
        assert!(!out.stats.complete);
        assert!(out.lower <= out.upper);
        assert_eq!(out.upper, 14);
        let witness = out.witness.unwrap();
        assert!(verify_coloring(&g, &witness).pass());
    }

    #[test]
    fn solver_rejects_zero_cap_and_handles_trivial_graphs() {
        let g = gen_classical(Classical::Cycle { m: 4 }).unwrap();
        assert!(matches!(
            solve_upper(&g, &SearchConfig::new(0)),
            Err(SolverError::MaxColorZero)
        ));
        let single = Graph::from_edges(1, &[]).unwrap();
        let out = solve_exact(&single, &SearchConfig::new(5)).unwrap();
        assert_eq!(out.value(), Some(1));
        let empty = Graph::from_edges(0, &[]).unwrap();
        let out = solve_exact(&empty, &SearchConfig::new(1)).unwrap();
        assert_eq!(out.value(), Some(0));
    }

    #[test]
    fn exact_search_recovers_from_a_low_starting_cap() {
        // Starting below χ_ρ: the cap is refuted, the search falls back to
        // the trivial witness and descends to the true value anyway.
        let p = gen_classical(Classical::Petersen).unwrap();
        let out = solve_exact(&p, &SearchConfig::new(5)).unwrap();
        assert_eq!(out.value(), Some(7));
    }

    #[test]
    fn vertex_orders_reach_the_same_value() {
        let g = gen_classical(Classical::Cycle { m: 6 }).unwrap();
        for order in [
            VertexOrder::Natural,
            VertexOrder::DegreeDesc,
            VertexOrder::DistanceFromRoot,
        ] {
            let out =
                solve_exact(&g, &SearchConfig::new(6).with_order(order)).unwrap();
            assert_eq!(out.value(), Some(4));
        }
    }

    #[test]
    fn dfs_feasibility_agrees_with_the_public_check() {
        let g = gen_classical(Classical::Petersen).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut partial = vec![0u32; g.n()];
            for slot in partial.iter_mut() {
                if rng.gen_bool(0.5) {
                    *slot = rng.gen_range(1..=4);
                }
            }
            let v = rng.gen_range(0..g.n() as u32);
            partial[v as usize] = 0;
            let c = rng.gen_range(1..=4);
            // Reference: the O(n) definition scan.
            let dm = g.distances();
            let reference = (0..g.n() as u32).all(|u| {
                u == v || partial[u as usize] != c || dm.get(u, v) as u32 > c
            });
            assert_eq!(feasible_extension_check(&g, &partial, v, c), reference);
        }
    }
}
