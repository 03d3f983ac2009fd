//! Core graph machinery: a validated adjacency-list graph, cached all-pairs
//! BFS distances, girth, regularity, bipartite matchings and exact
//! independent-set routines.
//!
//! Everything here is deterministic: adjacency lists are kept sorted, BFS
//! ties break by vertex index, and the branch-and-bound searches expand
//! candidates in index order. Two runs on the same input produce identical
//! answers, which the rest of the crate relies on when it freezes witnesses
//! in tests.

use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Sentinel for "no path" in distance matrices.
pub const INF: u16 = u16::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    InvalidEdge { u: u32, v: u32, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("adjacency lists are not symmetric at ({u}, {v})")]
    Asymmetric { u: u32, v: u32 },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("expected {expected} side tags, got {got}")]
    SideCount { expected: usize, got: usize },
    #[error("side tag {0} is not 0 or 1")]
    SideValue(u8),
    #[error("edge ({u}, {v}) joins two vertices of side {side}")]
    SideNotBipartition { u: u32, v: u32, side: u8 },
    #[error("{op} supports at most {max} vertices, graph has {n}")]
    TooLarge {
        n: usize,
        max: usize,
        op: &'static str,
    },
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
    side: Option<Vec<u8>>,
    dist: OnceLock<DistanceMatrix>,
    label_index: OnceLock<HashMap<String, u32>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.labels == other.labels && self.side == other.side
    }
}
impl Eq for Graph {}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u as u32, w[0]));
            }
        }
        Ok(Graph {
            adj,
            labels: None,
            side: None,
            dist: OnceLock::new(),
            label_index: OnceLock::new(),
        })
    }

    /// Build from explicit neighbor lists, validating symmetry, sortedness
    /// is not required of the input (lists are normalised), loops and
    /// duplicates are rejected.
    pub fn from_adjacency(adj: Vec<Vec<u32>>) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut norm: Vec<Vec<u32>> = Vec::with_capacity(n);
        for (u, list) in adj.into_iter().enumerate() {
            let mut list = list;
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u as u32, w[0]));
            }
            for &v in &list {
                if v as usize >= n {
                    return Err(GraphError::InvalidEdge { u: u as u32, v, n });
                }
                if v == u as u32 {
                    return Err(GraphError::SelfLoop(v));
                }
            }
            norm.push(list);
        }
        for u in 0..n {
            for &v in &norm[u] {
                if norm[v as usize].binary_search(&(u as u32)).is_err() {
                    return Err(GraphError::Asymmetric { u: u as u32, v });
                }
            }
        }
        Ok(Graph {
            adj: norm,
            labels: None,
            side: None,
            dist: OnceLock::new(),
            label_index: OnceLock::new(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        self.label_index = OnceLock::new();
        Ok(self)
    }

    /// Attach a bipartition tag (0 or 1) per vertex. Every edge must cross.
    pub fn with_sides(mut self, side: Vec<u8>) -> Result<Self, GraphError> {
        if side.len() != self.n() {
            return Err(GraphError::SideCount {
                expected: self.n(),
                got: side.len(),
            });
        }
        if let Some(&s) = side.iter().find(|&&s| s > 1) {
            return Err(GraphError::SideValue(s));
        }
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if side[u] == side[v as usize] {
                    return Err(GraphError::SideNotBipartition {
                        u: u as u32,
                        v,
                        side: side[u],
                    });
                }
            }
        }
        self.side = Some(side);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<u32> {
        let labels = self.labels.as_ref()?;
        let index = self.label_index.get_or_init(|| {
            labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i as u32))
                .collect()
        });
        index.get(label).copied()
    }

    pub fn sides(&self) -> Option<&[u8]> {
        self.side.as_deref()
    }

    pub fn side_vertices(&self, s: u8) -> Vec<u32> {
        match &self.side {
            Some(tags) => (0..self.n() as u32)
                .filter(|&v| tags[v as usize] == s)
                .collect(),
            None => Vec::new(),
        }
    }

    /// All-pairs BFS distances, computed once and cached.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| all_pairs_distances(self))
    }

    /// The degree if the graph is regular, `None` otherwise (including n = 0).
    pub fn regularity(&self) -> Option<u32> {
        let d = self.adj.first()?.len();
        if self.adj.iter().all(|l| l.len() == d) {
            Some(d as u32)
        } else {
            None
        }
    }

    /// Bipartition sides: validated stored tags if present, otherwise a
    /// 2-coloring computed by BFS (component roots get side 0). `None` when
    /// an odd cycle exists.
    pub fn bipartite_sides(&self) -> Option<Vec<u8>> {
        if let Some(s) = &self.side {
            return Some(s.clone());
        }
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root as u32);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u as usize] {
                    if side[v as usize] == u8::MAX {
                        side[v as usize] = 1 - side[u as usize];
                        queue.push_back(v);
                    } else if side[v as usize] == side[u as usize] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

/// Row-major matrix of BFS distances with [`INF`] marking unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: u32, v: u32) -> u16 {
        self.d[u as usize * self.n + v as usize]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: u32) -> &[u16] {
        &self.d[u as usize * self.n..(u as usize + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.d.iter().all(|&x| x != INF)
    }

    /// Largest finite distance; `None` when the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<u16> {
        if !self.is_connected() {
            return None;
        }
        self.d.iter().copied().max()
    }

    pub fn eccentricity(&self, u: u32) -> u16 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }
}

fn bfs_fill(adj: &[Vec<u32>], src: usize, out: &mut [u16]) {
    out.fill(INF);
    out[src] = 0;
    let mut frontier = vec![src as u32];
    let mut next = Vec::new();
    let mut d: u16 = 0;
    while !frontier.is_empty() {
        d += 1;
        for &u in &frontier {
            for &v in &adj[u as usize] {
                if out[v as usize] == INF {
                    out[v as usize] = d;
                    next.push(v);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
}

/// All-pairs distances by one BFS per source, sources fanned out across
/// threads. Row order is fixed, so the result is independent of scheduling.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![INF; n * n];
    d.par_chunks_mut(n.max(1))
        .enumerate()
        .for_each(|(src, row)| bfs_fill(&g.adj, src, row));
    DistanceMatrix { n, d }
}

/// Length of a shortest cycle, `None` for forests.
///
/// One BFS per root; a non-tree edge (u, v) seen from root r witnesses a
/// closed walk of length d(u) + d(v) + 1, which always contains a cycle no
/// longer than itself, and rooting at a vertex of a shortest cycle realises
/// the girth exactly. Exploration is cut off below half the best cycle
/// found so far.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.n();
    let best = (0..n as u32)
        .into_par_iter()
        .map(|root| girth_from_root(g, root))
        .min()
        .unwrap_or(u32::MAX);
    (best != u32::MAX).then_some(best)
}

fn girth_from_root(g: &Graph, root: u32) -> u32 {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut parent = vec![u32::MAX; n];
    let mut best = u32::MAX;
    dist[root as usize] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize] as u32;
        if 2 * du >= best {
            break; // deeper layers cannot improve on best
        }
        for &v in &g.adj[u as usize] {
            if dist[v as usize] == INF {
                dist[v as usize] = (du + 1) as u16;
                parent[v as usize] = u;
                queue.push_back(v);
            } else if parent[u as usize] != v {
                let cycle = du + dist[v as usize] as u32 + 1;
                if cycle < best {
                    best = cycle;
                }
            }
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Search budget shared by the exhaustive searches.

/// Node/time budget for branch-and-bound searches. A search that exhausts
/// its budget stops cleanly and reports `complete = false` together with the
/// best object found so far.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: None,
            deadline: None,
            nodes: 0,
        }
    }

    pub fn with_nodes(limit: u64) -> Self {
        SearchBudget {
            node_limit: Some(limit),
            deadline: None,
            nodes: 0,
        }
    }

    pub fn with_time(limit: Duration) -> Self {
        SearchBudget {
            node_limit: None,
            deadline: Some(Instant::now() + limit),
            nodes: 0,
        }
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Count one search node; false once the budget is spent. The clock is
    /// polled every 4096 nodes to keep the hot path cheap.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return false;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(4096) && Instant::now() >= deadline {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Bitset graphs and exact clique / independent-set search.

/// Dense bitset adjacency used by the exact searches. Vertices are indices
/// into whatever subset the caller selected; `rows[v]` holds one bit per
/// other vertex.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[cfg(test)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn full_set(&self) -> Vec<u64> {
        let mut s = vec![u64::MAX; self.words];
        if !self.n.is_multiple_of(64) {
            s[self.words - 1] = (1u64 << (self.n % 64)) - 1;
        }
        if self.n == 0 {
            s.clear();
        }
        s
    }

    /// Maximum clique by branch and bound with a greedy-coloring upper
    /// bound. Returns the clique (ascending vertex order) and whether the
    /// search ran to completion within the budget; when it did not, the
    /// clique is the best found so far.
    pub fn max_clique(&self, budget: &mut SearchBudget) -> (Vec<u32>, bool) {
        self.max_clique_seeded(budget, 0)
    }

    /// As [`Self::max_clique`], additionally stopping as soon as a clique of
    /// size `stop_at` is found (0 means run to optimality).
    pub fn max_clique_seeded(
        &self,
        budget: &mut SearchBudget,
        stop_at: usize,
    ) -> (Vec<u32>, bool) {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        let p = self.full_set();
        let complete = self.expand(&p, &mut cur, &mut best, budget, stop_at);
        best.sort_unstable();
        (best, complete)
    }

    fn expand(
        &self,
        p: &[u64],
        cur: &mut Vec<u32>,
        best: &mut Vec<u32>,
        budget: &mut SearchBudget,
        stop_at: usize,
    ) -> bool {
        if !budget.tick() {
            return false;
        }
        if stop_at > 0 && best.len() >= stop_at {
            return true;
        }
        let verts = set_bits(p);
        if verts.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return true;
        }
        // Greedy coloring in index order; color numbers bound the clique
        // extension from each vertex onward.
        let mut color = vec![0u32; verts.len()];
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            let mut c = 0;
            loop {
                if c == classes.len() {
                    classes.push(vec![0; self.words]);
                }
                if !intersects(&classes[c], self.row(v as usize)) {
                    classes[c][v as usize / 64] |= 1 << (v % 64);
                    color[i] = c as u32 + 1;
                    break;
                }
                c += 1;
            }
        }
        // Process by descending color so the bound tightens fast.
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse((color[i], std::cmp::Reverse(verts[i]))));
        let mut p = p.to_vec();
        for i in order {
            let v = verts[i];
            if cur.len() + color[i] as usize <= best.len() {
                return true; // remaining candidates can no longer win
            }
            cur.push(v);
            let mut p2 = p.clone();
            and_assign(&mut p2, self.row(v as usize));
            if is_empty(&p2) {
                if cur.len() > best.len() {
                    *best = cur.clone();
                }
            } else if !self.expand(&p2, cur, best, budget, stop_at) {
                cur.pop();
                return false;
            }
            cur.pop();
            if stop_at > 0 && best.len() >= stop_at {
                return true;
            }
            p[v as usize / 64] &= !(1 << (v % 64));
        }
        true
    }

    /// Every clique of exactly `target` vertices, in lexicographic order,
    /// stopping after `limit` cliques. Returns the cliques and whether the
    /// enumeration is exhaustive (false when `limit` or the budget cut it
    /// short).
    pub fn enumerate_cliques_of_size(
        &self,
        target: usize,
        limit: usize,
        budget: &mut SearchBudget,
    ) -> (Vec<Vec<u32>>, bool) {
        let mut out = Vec::new();
        let p = self.full_set();
        let mut cur = Vec::new();
        let complete =
            self.enumerate_rec(&p, 0, target, &mut cur, &mut out, limit, budget);
        (out, complete)
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_rec(
        &self,
        p: &[u64],
        from: usize,
        target: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        limit: usize,
        budget: &mut SearchBudget,
    ) -> bool {
        if cur.len() == target {
            out.push(cur.clone());
            return out.len() < limit || limit == 0;
        }
        if !budget.tick() {
            return false;
        }
        let need = target - cur.len();
        let mut avail: Vec<u32> = set_bits(p).into_iter().filter(|&v| v as usize >= from).collect();
        while avail.len() >= need {
            let v = avail.remove(0);
            cur.push(v);
            let mut p2 = p.to_vec();
            and_assign(&mut p2, self.row(v as usize));
            let go_on = self.enumerate_rec(&p2, v as usize + 1, target, cur, out, limit, budget);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn set_bits(s: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (w, &word) in s.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let b = word.trailing_zeros();
            out.push(w as u32 * 64 + b);
            word &= word - 1;
        }
    }
    out
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x & y != 0)
}

fn and_assign(a: &mut [u64], b: &[u64]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

fn is_empty(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Bitset graph on `verts` joining pairs at distance ≥ `min_dist` in the
/// host graph; the auxiliary graph used by packing-cap computations and
/// opposite-set searches.
pub(crate) fn far_bitgraph(dm: &DistanceMatrix, verts: &[u32], min_dist: u16) -> BitGraph {
    let mut bg = BitGraph::new(verts.len());
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let d = dm.get(verts[i], verts[j]);
            if d >= min_dist {
                bg.add_edge(i, j);
            }
        }
    }
    bg
}

// ---------------------------------------------------------------------------
// Bipartite matching (Hopcroft–Karp) and König independent sets.

/// Maximum matching of a bipartite graph. `side[v]` selects the part.
/// Returns `pair[v] = u32::MAX` for unmatched vertices.
pub fn hopcroft_karp(g: &Graph, side: &[u8]) -> Vec<u32> {
    const NIL: u32 = u32::MAX;
    let n = g.n();
    let left: Vec<u32> = (0..n as u32).filter(|&v| side[v as usize] == 0).collect();
    let mut pair = vec![NIL; n];
    let mut dist = vec![0u32; n];

    loop {
        // BFS layering from free left vertices.
        let mut queue = std::collections::VecDeque::new();
        let mut found_augmenting_layer = false;
        for &u in &left {
            if pair[u as usize] == NIL {
                dist[u as usize] = 0;
                queue.push_back(u);
            } else {
                dist[u as usize] = u32::MAX;
            }
        }
        let mut layer_limit = u32::MAX;
        while let Some(u) = queue.pop_front() {
            if dist[u as usize] >= layer_limit {
                continue;
            }
            for &v in g.neighbors(u) {
                let w = pair[v as usize];
                if w == NIL {
                    // Free right vertex: shortest augmenting path length found.
                    layer_limit = layer_limit.min(dist[u as usize] + 1);
                    found_augmenting_layer = true;
                } else if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found_augmenting_layer {
            break;
        }
        // DFS augmentation along the layering.
        fn try_augment(
            g: &Graph,
            u: u32,
            pair: &mut [u32],
            dist: &mut [u32],
        ) -> bool {
            for i in 0..g.neighbors(u).len() {
                let v = g.neighbors(u)[i];
                let w = pair[v as usize];
                let ok = if w == NIL {
                    true
                } else if dist[w as usize] == dist[u as usize] + 1 {
                    try_augment(g, w, pair, dist)
                } else {
                    false
                };
                if ok {
                    pair[v as usize] = u;
                    pair[u as usize] = v;
                    return true;
                }
            }
            dist[u as usize] = u32::MAX;
            false
        }
        let mut augmented = false;
        for &u in &left {
            if pair[u as usize] == NIL && try_augment(g, u, &mut pair, &mut dist) {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    pair
}

/// Maximum independent set of a bipartite graph via König's theorem:
/// |MIS| = n − |maximum matching|. Runs on any size.
fn bipartite_mis(g: &Graph, side: &[u8]) -> Vec<u32> {
    const NIL: u32 = u32::MAX;
    let pair = hopcroft_karp(g, side);
    let n = g.n();
    // Alternating reachability from unmatched left vertices.
    let mut reached = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n as u32 {
        if side[v as usize] == 0 && pair[v as usize] == NIL {
            reached[v as usize] = true;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        if side[u as usize] == 0 {
            for &v in g.neighbors(u) {
                if pair[u as usize] != v && !reached[v as usize] {
                    reached[v as usize] = true;
                    queue.push_back(v);
                }
            }
        } else {
            let w = pair[u as usize];
            if w != NIL && !reached[w as usize] {
                reached[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    // König: MIS = (left ∩ reached) ∪ (right ∖ reached).
    (0..n as u32)
        .filter(|&v| {
            if side[v as usize] == 0 {
                reached[v as usize]
            } else {
                !reached[v as usize]
            }
        })
        .collect()
}

/// One maximum independent set, ascending vertex order. Exact for bipartite
/// graphs of any size (König) and for arbitrary graphs up to 64 vertices
/// (branch and bound on the complement); larger non-bipartite graphs are
/// rejected.
pub fn max_independent_set(g: &Graph) -> Result<Vec<u32>, GraphError> {
    if let Some(side) = g.bipartite_sides() {
        return Ok(bipartite_mis(g, &side));
    }
    let n = g.n();
    if n > 64 {
        return Err(GraphError::TooLarge {
            n,
            max: 64,
            op: "max_independent_set",
        });
    }
    let mut comp = BitGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u as u32, v as u32) {
                comp.add_edge(u, v);
            }
        }
    }
    let (set, complete) = comp.max_clique(&mut SearchBudget::unlimited());
    debug_assert!(complete);
    Ok(set)
}

/// The independence number.
pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    max_independent_set(g).map(|s| s.len())
}

/// Every maximum independent set, lexicographically ordered, truncated to
/// `limit` sets (0 = no limit). Exact enumeration is only attempted up to
/// 40 vertices.
pub fn enumerate_max_independent_sets(
    g: &Graph,
    limit: usize,
) -> Result<Vec<Vec<u32>>, GraphError> {
    let n = g.n();
    if n > 40 {
        return Err(GraphError::TooLarge {
            n,
            max: 40,
            op: "enumerate_max_independent_sets",
        });
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let alpha = independence_number(g)?;
    let mut comp = BitGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u as u32, v as u32) {
                comp.add_edge(u, v);
            }
        }
    }
    let (sets, _complete) =
        comp.enumerate_cliques_of_size(alpha, limit, &mut SearchBudget::unlimited());
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(m: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..m)
            .map(|i| (i as u32, ((i + 1) % m) as u32))
            .collect();
        Graph::from_edges(m, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5)); // outer pentagon
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn construction_validates_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::InvalidEdge { u: 0, v: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_adjacency(vec![vec![1], vec![]]),
            Err(GraphError::Asymmetric { u: 0, v: 1 })
        ));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            path.with_sides(vec![0, 0, 1]),
            Err(GraphError::SideNotBipartition { .. })
        ));
    }

    #[test]
    fn single_edge_distances() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = g.distances();
        assert_eq!(d.get(0, 0), 0);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.diameter(), Some(1));
    }

    #[test]
    fn cycle_distances_and_girth() {
        let c8 = cycle(8);
        assert_eq!(c8.distances().diameter(), Some(4));
        assert_eq!(girth(&c8), Some(8));
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(c8.regularity(), Some(2));
    }

    #[test]
    fn girth_special_cases() {
        assert_eq!(girth(&complete(4)), Some(3));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path), None);
        // C6 with a chord across three vertices: shortest cycle becomes 4.
        let mut g = cycle(6);
        g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)],
        )
        .unwrap_or(g);
        assert_eq!(girth(&g), Some(4));
        // Two disjoint triangles: disconnected but girth 3.
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_eq!(girth(&tt), Some(3));
        assert_eq!(tt.distances().diameter(), None);
        assert!(!tt.distances().is_connected());
    }

    #[test]
    fn regularity_of_path_is_none() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.regularity(), None);
    }

    #[test]
    fn petersen_facts() {
        let g = petersen();
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(girth(&g), Some(5));
        assert_eq!(g.distances().diameter(), Some(2));
        assert_eq!(g.bipartite_sides(), None);
        let mis = max_independent_set(&g).unwrap();
        assert_eq!(mis.len(), 4);
        for i in 0..mis.len() {
            for j in i + 1..mis.len() {
                assert!(!g.has_edge(mis[i], mis[j]));
            }
        }
        // Petersen has exactly five maximum independent sets.
        let all = enumerate_max_independent_sets(&g, 0).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all.contains(&mis));
    }

    #[test]
    fn enumerate_small_graphs() {
        let c4 = cycle(4);
        let sets = enumerate_max_independent_sets(&c4, 0).unwrap();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 3]]);
        let k3 = complete(3);
        let sets = enumerate_max_independent_sets(&k3, 0).unwrap();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2]]);
        let truncated = enumerate_max_independent_sets(&k3, 2).unwrap();
        assert_eq!(truncated.len(), 2);
    }

    #[test]
    fn size_limits_are_enforced() {
        let big = cycle(70);
        // Bipartite path still works at any size...
        assert_eq!(max_independent_set(&big).unwrap().len(), 35);
        // ...but an odd cycle beyond 64 vertices is rejected.
        let odd = cycle(71);
        assert!(matches!(
            max_independent_set(&odd),
            Err(GraphError::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_max_independent_sets(&cycle(41), 0),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn bipartite_mis_agrees_with_branch_and_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xb1a5);
        for trial in 0..10 {
            let left = rng.gen_range(3..9usize);
            let right = rng.gen_range(3..9usize);
            let n = left + right;
            let mut edges = Vec::new();
            for u in 0..left as u32 {
                for v in 0..right as u32 {
                    if rng.gen_bool(0.35) {
                        edges.push((u, left as u32 + v));
                    }
                }
            }
            let side: Vec<u8> = (0..n).map(|v| (v >= left) as u8).collect();
            let g = Graph::from_edges(n, &edges)
                .unwrap()
                .with_sides(side)
                .unwrap();
            let via_matching = max_independent_set(&g).unwrap().len();
            // Brute force oracle over all subsets.
            let mut best = 0usize;
            for mask in 0u32..1 << n {
                let verts: Vec<u32> =
                    (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                let ok = verts.iter().enumerate().all(|(i, &u)| {
                    verts[i + 1..].iter().all(|&v| !g.has_edge(u, v))
                });
                if ok {
                    best = best.max(verts.len());
                }
            }
            assert_eq!(via_matching, best, "trial {trial}");
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn distances_match_floyd_warshall_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xd157);
        for trial in 0..5 {
            let n = rng.gen_range(2..40usize);
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(0.15) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let bfs = g.distances();
            let mut fw = vec![vec![u32::MAX / 2; n]; n];
            for v in 0..n {
                fw[v][v] = 0;
            }
            for &(u, v) in &edges {
                fw[u as usize][v as usize] = 1;
                fw[v as usize][u as usize] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let via = fw[i][k] + fw[k][j];
                        if via < fw[i][j] {
                            fw[i][j] = via;
                        }
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let expect = if fw[i][j] >= u32::MAX / 4 {
                        INF
                    } else {
                        fw[i][j] as u16
                    };
                    assert_eq!(bfs.get(i as u32, j as u32), expect, "trial {trial} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn budget_stops_clique_search() {
        // Dense-ish 48-vertex graph; 2 nodes of budget cannot finish.
        let mut bg = BitGraph::new(48);
        for u in 0..48 {
            for v in u + 1..48 {
                if (u + v) % 3 != 0 {
                    bg.add_edge(u, v);
                }
            }
        }
        let mut budget = SearchBudget::with_nodes(2);
        let (_, complete) = bg.max_clique(&mut budget);
        assert!(!complete);
        let mut budget = SearchBudget::unlimited();
        let (clique, complete) = bg.max_clique(&mut budget);
        assert!(complete);
        for i in 0..clique.len() {
            for j in i + 1..clique.len() {
                assert!(bg.has_edge(clique[i] as usize, clique[j] as usize));
            }
        }
    }

    #[test]
    fn labels_resolve_to_vertices() {
        let g = Graph::from_edges(2, &[(0, 1)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        assert_eq!(g.vertex_by_label("b"), Some(1));
        assert_eq!(g.vertex_by_label("c"), None);
        assert_eq!(g.label(0), Some("a"));
    }
}
