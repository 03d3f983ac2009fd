//! Constructions of the bipartite Moore graphs studied by this crate:
//! incidence graphs of projective planes (girth 6), of generalized
//! quadrangles of order q (girth 8), the unique (3,12)-cage (girth 12), and
//! a handful of classical graphs used as baselines.
//!
//! Vertex numbering is canonical and documented per family, so generated
//! graphs are bit-for-bit reproducible: labels, side tags and adjacency all
//! come out identical across runs.

use crate::bounds::moore_bound;
use crate::ffield::{field_eval_quad, make_field, FieldElement, FieldError, FieldTable};
use crate::fixtures::{CAGE312_ADJ, CAGE312_GAMMA};
use crate::graphcore::{girth, Graph, GraphError};
use crate::report::Report;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line-side and point-side incidence rules disagree: {0}")]
    DualMismatch(String),
    #[error("unknown classical family '{0}'")]
    UnknownFamily(String),
    #[error("{0}")]
    BadParams(String),
}

/// One coordinate of a generalized-quadrangle label: a field element or the
/// extra symbol ρ. The derived order puts every field element before ρ,
/// which makes plain tuple comparison coincide with the canonical vertex
/// order (all-field labels first, then (ρ,b,c), (ρ,ρ,c), (ρ,ρ,ρ)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    F(FieldElement),
    Rho,
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::F(x) => write!(f, "{x}"),
            Coord::Rho => write!(f, "rho"),
        }
    }
}

/// A generalized-quadrangle vertex: three coordinates plus the side of the
/// bipartition (0 = points, 1 = lines).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GqLabel {
    pub side: u8,
    pub coords: [Coord; 3],
}

impl fmt::Display for GqLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})_{}",
            self.coords[0], self.coords[1], self.coords[2], self.side
        )
    }
}

/// Vertices per side of the coordinatized generalized quadrangle:
/// q³ + q² + q + 1 = (q + 1)(q² + 1).
pub fn gq_side_order(q: u64) -> u64 {
    q * q * q + q * q + q + 1
}

/// Canonical vertex index of a generalized-quadrangle label. Points occupy
/// `0..side_order`, lines follow; within a side the blocks are the all-field
/// labels in lexicographic order, then (ρ,b,c) by (b,c), then (ρ,ρ,c), then
/// (ρ,ρ,ρ) last.
pub fn gq_vertex(q: u64, label: GqLabel) -> u32 {
    use Coord::{Rho, F};
    let q = q as u32;
    let base = label.side as u32 * gq_side_order(q as u64) as u32;
    let off = match label.coords {
        [F(a), F(b), F(c)] => a as u32 * q * q + b as u32 * q + c as u32,
        [Rho, F(b), F(c)] => q * q * q + b as u32 * q + c as u32,
        [Rho, Rho, F(c)] => q * q * q + q * q + c as u32,
        [Rho, Rho, Rho] => q * q * q + q * q + q,
        other => panic!("malformed coordinate shape {other:?}"),
    };
    base + off
}

/// Inverse of [`gq_vertex`].
pub fn gq_label_of(q: u64, v: u32) -> GqLabel {
    use Coord::{Rho, F};
    let q32 = q as u32;
    let per_side = gq_side_order(q) as u32;
    let side = (v / per_side) as u8;
    let mut off = v % per_side;
    let coords = if off < q32 * q32 * q32 {
        let a = off / (q32 * q32);
        off %= q32 * q32;
        [
            F(a as FieldElement),
            F((off / q32) as FieldElement),
            F((off % q32) as FieldElement),
        ]
    } else if off < q32 * q32 * q32 + q32 * q32 {
        off -= q32 * q32 * q32;
        [
            Rho,
            F((off / q32) as FieldElement),
            F((off % q32) as FieldElement),
        ]
    } else if off < per_side - 1 {
        off -= q32 * q32 * q32 + q32 * q32;
        [Rho, Rho, F(off as FieldElement)]
    } else {
        [Rho, Rho, Rho]
    };
    GqLabel { side, coords }
}

fn all_side_labels(q: u64, side: u8) -> Vec<GqLabel> {
    use Coord::{Rho, F};
    let qe = q as FieldElement;
    let mut out = Vec::with_capacity(gq_side_order(q) as usize);
    for a in 0..qe {
        for b in 0..qe {
            for c in 0..qe {
                out.push(GqLabel {
                    side,
                    coords: [F(a), F(b), F(c)],
                });
            }
        }
    }
    for b in 0..qe {
        for c in 0..qe {
            out.push(GqLabel {
                side,
                coords: [Rho, F(b), F(c)],
            });
        }
    }
    for c in 0..qe {
        out.push(GqLabel {
            side,
            coords: [Rho, Rho, F(c)],
        });
    }
    out.push(GqLabel {
        side,
        coords: [Rho, Rho, Rho],
    });
    out
}

/// Neighbors of a line by the defining incidence rules (points, side 0).
fn line_neighbors(f: &FieldTable, coords: [Coord; 3]) -> Vec<[Coord; 3]> {
    use Coord::{Rho, F};
    let mut out = Vec::with_capacity(f.q() as usize + 1);
    match coords {
        // (a,b,c)₁ covers the q points (w, aw+b, a²w+2ab+c)₀ and (ρ,a,c)₀.
        [F(a), F(b), F(c)] => {
            for w in f.elements() {
                let (y, z) = field_eval_quad(f, a, b, c, w);
                out.push([F(w), F(y), F(z)]);
            }
            out.push([Rho, F(a), F(c)]);
        }
        // (ρ,b,c)₁ covers (c,b,w)₀ and (ρ,ρ,c)₀.
        [Rho, F(b), F(c)] => {
            for w in f.elements() {
                out.push([F(c), F(b), F(w)]);
            }
            out.push([Rho, Rho, F(c)]);
        }
        // (ρ,ρ,c)₁ covers (ρ,c,w)₀ and (ρ,ρ,ρ)₀.
        [Rho, Rho, F(c)] => {
            for w in f.elements() {
                out.push([Rho, F(c), F(w)]);
            }
            out.push([Rho, Rho, Rho]);
        }
        // (ρ,ρ,ρ)₁ covers (ρ,ρ,w)₀ and (ρ,ρ,ρ)₀.
        [Rho, Rho, Rho] => {
            for w in f.elements() {
                out.push([Rho, Rho, F(w)]);
            }
            out.push([Rho, Rho, Rho]);
        }
        other => panic!("malformed coordinate shape {other:?}"),
    }
    out
}

/// Neighbors of a point by the dual incidence rules (lines, side 1).
fn point_neighbors(f: &FieldTable, coords: [Coord; 3]) -> Vec<[Coord; 3]> {
    use Coord::{Rho, F};
    let mut out = Vec::with_capacity(f.q() as usize + 1);
    let twice = |x: FieldElement| f.add(x, x);
    match coords {
        // (i,j,k)₀ lies on the q lines (w, j−wi, w²i−2wj+k)₁ and on (ρ,j,i)₁.
        [F(i), F(j), F(k)] => {
            for w in f.elements() {
                let y = f.sub(j, f.mul(w, i));
                let z = f.add(f.sub(f.mul(f.square(w), i), twice(f.mul(w, j))), k);
                out.push([F(w), F(y), F(z)]);
            }
            out.push([Rho, F(j), F(i)]);
        }
        // (ρ,j,k)₀ lies on (j,w,k)₁ and on (ρ,ρ,j)₁.
        [Rho, F(j), F(k)] => {
            for w in f.elements() {
                out.push([F(j), F(w), F(k)]);
            }
            out.push([Rho, Rho, F(j)]);
        }
        // (ρ,ρ,k)₀ lies on (ρ,w,k)₁ and on (ρ,ρ,ρ)₁.
        [Rho, Rho, F(k)] => {
            for w in f.elements() {
                out.push([Rho, F(w), F(k)]);
            }
            out.push([Rho, Rho, Rho]);
        }
        // (ρ,ρ,ρ)₀ lies on (ρ,ρ,w)₁ and on (ρ,ρ,ρ)₁.
        [Rho, Rho, Rho] => {
            for w in f.elements() {
                out.push([Rho, Rho, F(w)]);
            }
            out.push([Rho, Rho, Rho]);
        }
        other => panic!("malformed coordinate shape {other:?}"),
    }
    out
}

/// Incidence graph of the coordinatized generalized quadrangle of order q
/// (the (q+1,8)-Moore graph), for q a prime power.
///
/// The edge set is built from the line-side rules; the point-side rules are
/// evaluated independently and the two edge sets must agree exactly, which
/// guards the construction against transcription slips in either family of
/// rules. Vertices carry display labels like `(0,1,2)_0` and side tags
/// (0 = points, 1 = lines).
pub fn gen_gq_incidence(q: u64) -> Result<Graph, GeneratorError> {
    let f = make_field(q)?;
    let n = 2 * gq_side_order(q) as usize;

    let mut from_lines: Vec<(u32, u32)> = Vec::with_capacity(n * (q as usize + 1) / 2);
    for line in all_side_labels(q, 1) {
        let lv = gq_vertex(q, line);
        for pt in line_neighbors(&f, line.coords) {
            let pv = gq_vertex(
                q,
                GqLabel {
                    side: 0,
                    coords: pt,
                },
            );
            from_lines.push((pv, lv));
        }
    }
    let mut from_points: Vec<(u32, u32)> = Vec::with_capacity(from_lines.len());
    for point in all_side_labels(q, 0) {
        let pv = gq_vertex(q, point);
        for ln in point_neighbors(&f, point.coords) {
            let lv = gq_vertex(
                q,
                GqLabel {
                    side: 1,
                    coords: ln,
                },
            );
            from_points.push((pv, lv));
        }
    }
    from_lines.sort_unstable();
    from_points.sort_unstable();
    if from_lines != from_points {
        let diff = from_lines
            .iter()
            .find(|e| from_points.binary_search(e).is_err())
            .or_else(|| {
                from_points
                    .iter()
                    .find(|e| from_lines.binary_search(e).is_err())
            });
        let msg = match diff {
            Some(&(p, l)) => format!(
                "edge {} -- {} present on one side only (q = {q})",
                gq_label_of(q, p),
                gq_label_of(q, l)
            ),
            None => format!("edge multiplicity mismatch (q = {q})"),
        };
        return Err(GeneratorError::DualMismatch(msg));
    }

    let labels: Vec<String> = (0..n as u32)
        .map(|v| gq_label_of(q, v).to_string())
        .collect();
    let side: Vec<u8> = (0..n as u32)
        .map(|v| gq_label_of(q, v).side)
        .collect();
    let g = Graph::from_edges(n, &from_lines)?
        .with_labels(labels)?
        .with_sides(side)?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// Projective planes.

/// Canonical representatives of the projective points of PG(2,q):
/// homogeneous triples with first nonzero coordinate 1, enumerated in
/// lexicographic order — (0,0,1), then (0,1,z), then (1,y,z).
fn pg_points(q: u64) -> Vec<[FieldElement; 3]> {
    let qe = q as FieldElement;
    let mut pts = Vec::with_capacity((q * q + q + 1) as usize);
    pts.push([0, 0, 1]);
    for z in 0..qe {
        pts.push([0, 1, z]);
    }
    for y in 0..qe {
        for z in 0..qe {
            pts.push([1, y, z]);
        }
    }
    pts
}

/// Incidence graph of the projective plane PG(2,q) (the (q+1,6)-Moore
/// graph). Points come first, lines follow, both in the canonical order of
/// [`pg_points`]; a point (x:y:z) is joined to a line [u:v:w] when
/// ux + vy + wz = 0. Labels look like `(0:1:2)_0` and sides are tagged.
pub fn gen_pg_incidence(q: u64) -> Result<Graph, GeneratorError> {
    let f = make_field(q)?;
    let pts = pg_points(q);
    let m = pts.len();
    let mut edges = Vec::with_capacity(m * (q as usize + 1));
    for (li, line) in pts.iter().enumerate() {
        for (pi, pt) in pts.iter().enumerate() {
            let dot = f.add(
                f.add(f.mul(line[0], pt[0]), f.mul(line[1], pt[1])),
                f.mul(line[2], pt[2]),
            );
            if dot == 0 {
                edges.push((pi as u32, (m + li) as u32));
            }
        }
    }
    let mut labels = Vec::with_capacity(2 * m);
    for side in 0..2u8 {
        for p in &pts {
            labels.push(format!("({}:{}:{})_{}", p[0], p[1], p[2], side));
        }
    }
    let side: Vec<u8> = (0..2 * m).map(|v| (v >= m) as u8).collect();
    let g = Graph::from_edges(2 * m, &edges)?
        .with_labels(labels)?
        .with_sides(side)?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// The (3,12)-cage.

/// The unique (3,12)-cage (the incidence graph of the generalized hexagon
/// of order 2) from the embedded adjacency table. Vertex labels are the
/// 1-based row numbers of the table; sides split at the 63/64 boundary.
pub fn gen_cage_3_12() -> Graph {
    let adj: Vec<Vec<u32>> = CAGE312_ADJ
        .iter()
        .map(|row| row.iter().map(|&t| t as u32 - 1).collect())
        .collect();
    let n = adj.len();
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let side = (0..n).map(|v| (v >= 63) as u8).collect();
    Graph::from_adjacency(adj)
        .expect("embedded cage table is symmetric and simple")
        .with_labels(labels)
        .expect("label count")
        .with_sides(side)
        .expect("embedded cage table is bipartite at the 63/64 split")
}

/// The embedded 26-color packing coloring of the (3,12)-cage.
pub fn cage_3_12_coloring() -> Vec<u32> {
    CAGE312_GAMMA.to_vec()
}

// ---------------------------------------------------------------------------
// Classical baseline graphs.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classical {
    /// Complete graph K_n.
    Complete { n: u32 },
    /// Balanced complete bipartite graph K_{n,n}, side-tagged.
    CompleteBipartite { n: u32 },
    /// Cycle C_m, m ≥ 3.
    Cycle { m: u32 },
    Petersen,
    HoffmanSingleton,
}

impl Classical {
    /// Parse a family name plus optional size parameter, as used by the CLI.
    pub fn parse(name: &str, n: Option<u32>) -> Result<Self, GeneratorError> {
        let need = |what: &str| {
            n.ok_or_else(|| {
                GeneratorError::BadParams(format!("family '{what}' needs --n"))
            })
        };
        match name.to_ascii_lowercase().as_str() {
            "complete" | "k" => Ok(Classical::Complete { n: need("complete")? }),
            "complete-bipartite" | "complete_bipartite" | "knn" => {
                Ok(Classical::CompleteBipartite {
                    n: need("complete-bipartite")?,
                })
            }
            "cycle" | "c" => Ok(Classical::Cycle { m: need("cycle")? }),
            "petersen" => Ok(Classical::Petersen),
            "hoffman-singleton" | "hoffman_singleton" | "hs" => {
                Ok(Classical::HoffmanSingleton)
            }
            other => Err(GeneratorError::UnknownFamily(other.to_string())),
        }
    }
}

pub fn gen_classical(which: Classical) -> Result<Graph, GeneratorError> {
    match which {
        Classical::Complete { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_edges(n as usize, &edges)?)
        }
        Classical::CompleteBipartite { n } => {
            if n == 0 {
                return Err(GeneratorError::BadParams(
                    "complete bipartite needs n ≥ 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    edges.push((u, n + v));
                }
            }
            let side = (0..2 * n).map(|v| (v >= n) as u8).collect();
            Ok(Graph::from_edges(2 * n as usize, &edges)?.with_sides(side)?)
        }
        Classical::Cycle { m } => {
            if m < 3 {
                return Err(GeneratorError::BadParams("cycle needs m ≥ 3".into()));
            }
            let edges: Vec<(u32, u32)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
            Ok(Graph::from_edges(m as usize, &edges)?)
        }
        Classical::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5u32 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            Ok(Graph::from_edges(10, &edges)?)
        }
        Classical::HoffmanSingleton => {
            // Five pentagons P_h and five pentagrams Q_i on Z₅;
            // p_{h,j} ∼ q_{i, hi+j}. Vertex p_{h,j} = 5h + j, q_{i,j} = 25 + 5i + j.
            let mut edges = Vec::new();
            for h in 0..5u32 {
                for j in 0..5u32 {
                    edges.push((5 * h + j, 5 * h + (j + 1) % 5));
                    edges.push((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5));
                }
            }
            for h in 0..5u32 {
                for i in 0..5u32 {
                    for j in 0..5u32 {
                        edges.push((5 * h + j, 25 + 5 * i + (h * i + j) % 5));
                    }
                }
            }
            Ok(Graph::from_edges(50, &edges)?)
        }
    }
}

// ---------------------------------------------------------------------------
// Generalized-polygon verification.

/// Check that `g` is the incidence graph of a generalized n-gon of order
/// (q,q): a connected bipartite (q+1)-regular graph with diameter `n_gon`,
/// girth `2·n_gon`, and the matching Moore order. All findings land in the
/// report; nothing short-circuits.
pub fn verify_generalized_polygon(g: &Graph, n_gon: u32) -> Report {
    let mut report = Report::new();
    let sides = g.bipartite_sides();
    report.check(
        "bipartite",
        sides.is_some(),
        match &sides {
            Some(_) => "2-coloring exists".to_string(),
            None => "graph contains an odd cycle".to_string(),
        },
    );
    if let Some(tags) = &sides {
        let s0 = tags.iter().filter(|&&s| s == 0).count();
        let s1 = tags.len() - s0;
        report.check(
            "balanced-sides",
            s0 == s1,
            format!("sides have {s0} and {s1} vertices"),
        );
    }
    let degree = g.regularity();
    report.check(
        "regular",
        degree.is_some(),
        match degree {
            Some(d) => format!("regular of degree {d}"),
            None => "degrees are not all equal".to_string(),
        },
    );
    if let Some(d) = degree {
        if d >= 3 {
            let expected = moore_bound(d as u64, 2 * n_gon as u64);
            report.check(
                "moore-order",
                g.n() as u128 == expected,
                format!("order {} vs Moore bound {}", g.n(), expected),
            );
        }
    }
    let dm = g.distances();
    let diam = dm.diameter();
    report.check(
        "diameter",
        diam == Some(n_gon as u16),
        format!("diameter {diam:?}, expected {n_gon}"),
    );
    let girth_val = girth(g);
    report.check(
        "girth",
        girth_val == Some(2 * n_gon),
        format!("girth {girth_val:?}, expected {}", 2 * n_gon),
    );
    report
}
