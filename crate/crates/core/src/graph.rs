//! Paths, cycles, their strong products and the supergraph/subgraph
//! variants built on top of them, with a fixed layer-major vertex labeling.
//!
//! Vertex `(i, j)` (position `i` along the path or cycle, layer `j`) gets
//! flat index `(j - 1) * n + (i - 1)`, so layer `j` occupies a contiguous
//! block. For `m <= 3` the layers read as `x`, `y`, `z`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::support::{Support, MAX_VARS};

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Support>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables {
                requested: n,
                max: MAX_VARS,
            });
        }
        Ok(Graph {
            adjacency: vec![Support::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::InvalidShape(format!(
                "edge ({u},{v}) outside {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidShape(format!("self-loop at {u}")));
        }
        self.adjacency[u] = self.adjacency[u].with(v);
        self.adjacency[v] = self.adjacency[v].with(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> Support {
        self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `keep`, with vertex `keep[t]` renamed to `t`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (t, &v) in keep.iter().enumerate() {
            pos[v] = t;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&w| pos[w] != usize::MAX)
                    .map(|w| pos[w])
                    .collect()
            })
            .collect();
        Graph { adjacency }
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adjacency[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// The path `P_n` on vertices `0..n`. `P_1` is the null graph.
pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidShape(
            "a path needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n`, `n >= 3`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidShape(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
}

/// Strong product `g1 ⊠ g2`; vertex `(v, u)` becomes `u * |g1| + v`.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidShape(
            "strong product of an empty graph".into(),
        ));
    }
    let mut g = Graph::empty(n1 * n2)?;
    let idx = |v: usize, u: usize| u * n1 + v;
    for u1 in 0..n2 {
        for v1 in 0..n1 {
            for u2 in 0..n2 {
                for v2 in 0..n1 {
                    let a = idx(v1, u1);
                    let b = idx(v2, u2);
                    if a >= b {
                        continue;
                    }
                    let v_adj = g1.has_edge(v1, v2);
                    let u_adj = g2.has_edge(u1, u2);
                    let adjacent = (v_adj && u1 == u2) || (v1 == v2 && u_adj) || (v_adj && u_adj);
                    if adjacent {
                        g.add_edge(a, b)?;
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Largest BFS distance; `None` when the graph is disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in g.distances_from(v) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// The graph families with a fixed labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `P_n ⊠ P_m`.
    P,
    /// `C_n ⊠ P_m`.
    C,
    /// `P_{n,3}` plus a pendant-ish vertex `z_{n+1}` joined to `z_n, y_n`.
    Pstar,
    /// `Pstar` plus `z_{n+2}` joined to `z_1, y_1`.
    Pstarstar,
    /// `C_{n,3}` minus the columns `1, 2, n-1, n` of the `x` and `y` layers.
    Cdiamond,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::C => "C",
            Family::Pstar => "Pstar",
            Family::Pstarstar => "Pstarstar",
            Family::Cdiamond => "Cdiamond",
        }
    }
}

/// Dimensions of a grid: `n` positions along the path/cycle, `m` layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridShape {
    pub n: usize,
    pub m: usize,
}

/// A family member, e.g. `C:6,4` or `Pstar:5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub shape: GridShape,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, m: usize) -> Result<Self> {
        let spec = FamilySpec {
            family,
            shape: GridShape { n, m },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn p(n: usize, m: usize) -> Result<Self> {
        Self::new(Family::P, n, m)
    }

    pub fn c(n: usize, m: usize) -> Result<Self> {
        Self::new(Family::C, n, m)
    }

    pub fn pstar(n: usize) -> Result<Self> {
        Self::new(Family::Pstar, n, 3)
    }

    pub fn pstarstar(n: usize) -> Result<Self> {
        Self::new(Family::Pstarstar, n, 3)
    }

    pub fn cdiamond(n: usize) -> Result<Self> {
        Self::new(Family::Cdiamond, n, 3)
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn m(&self) -> usize {
        self.shape.m
    }

    pub fn validate(&self) -> Result<()> {
        let GridShape { n, m } = self.shape;
        let bad = |msg: String| Err(Error::InvalidShape(msg));
        if n == 0 || m == 0 {
            return bad(format!("{self}: n and m must be positive"));
        }
        match self.family {
            Family::P if n * m < 2 => bad("P:1,1 is the trivial one-vertex graph".into()),
            Family::C if n < 3 => bad(format!("{self}: cycles need n >= 3")),
            Family::Pstar | Family::Pstarstar if m != 3 || n < 2 => {
                bad(format!("{self}: needs m = 3 and n >= 2"))
            }
            Family::Cdiamond if m != 3 || n < 6 => bad(format!("{self}: needs m = 3 and n >= 6")),
            _ => {
                let vars = self.variable_count();
                if vars > MAX_VARS {
                    return Err(Error::TooManyVariables {
                        requested: vars,
                        max: MAX_VARS,
                    });
                }
                Ok(())
            }
        }
    }

    /// Number of vertices (= ring variables).
    pub fn variable_count(&self) -> usize {
        let GridShape { n, m } = self.shape;
        match self.family {
            Family::P | Family::C => n * m,
            Family::Pstar => 3 * n + 1,
            Family::Pstarstar => 3 * n + 2,
            Family::Cdiamond => 3 * n - 8,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::P | Family::C => write!(
                f,
                "{}:{},{}",
                self.family.name(),
                self.shape.n,
                self.shape.m
            ),
            _ => write!(f, "{}:{}", self.family.name(), self.shape.n),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar: `FAMILY ":" INT ["," INT]`. For `P`/`C` a missing layer count
    /// means `m = 1`; the other families only accept `m = 3`.
    fn from_str(s: &str) -> Result<Self> {
        let perr = |msg: &str| Error::Parse(format!("{msg} in family spec {s:?}"));
        let (name, rest) = s.split_once(':').ok_or_else(|| perr("missing ':'"))?;
        let family = match name.trim() {
            "P" => Family::P,
            "C" => Family::C,
            "Pstar" => Family::Pstar,
            "Pstarstar" => Family::Pstarstar,
            "Cdiamond" => Family::Cdiamond,
            _ => return Err(perr("unknown family")),
        };
        let parse_int = |t: &str| -> Result<usize> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(perr("expected an unsigned integer"));
            }
            t.parse::<usize>().map_err(|_| perr("integer out of range"))
        };
        let (n, m) = match rest.split_once(',') {
            Some((a, b)) => (parse_int(a)?, Some(parse_int(b)?)),
            None => (parse_int(rest)?, None),
        };
        let m = match (family, m) {
            (Family::P | Family::C, m) => m.unwrap_or(1),
            (_, None) => 3,
            (_, Some(m)) => m,
        };
        FamilySpec::new(family, n, m)
    }
}

/// Position/layer label of a vertex, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarLabel {
    pub i: usize,
    pub j: usize,
}

/// Bijection between vertex labels and flat variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarIndexer {
    pub n: usize,
    pub m: usize,
    labels: Vec<VarLabel>,
}

impl VarIndexer {
    /// Full layer-major grid labeling.
    pub fn grid(n: usize, m: usize) -> Self {
        let labels = (1..=m)
            .flat_map(|j| (1..=n).map(move |i| VarLabel { i, j }))
            .collect();
        VarIndexer { n, m, labels }
    }

    pub fn from_labels(n: usize, m: usize, labels: Vec<VarLabel>) -> Self {
        VarIndexer { n, m, labels }
    }

    /// `(j - 1) * n + (i - 1)` on the full grid.
    pub fn flat(n: usize, i: usize, j: usize) -> usize {
        (j - 1) * n + (i - 1)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[VarLabel] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> VarLabel {
        self.labels[index]
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.labels.iter().position(|l| l.i == i && l.j == j)
    }

    /// `x3`, `y1`, `z7` for up to three layers, `x2_5` otherwise.
    pub fn name(&self, index: usize) -> String {
        let VarLabel { i, j } = self.labels[index];
        if self.m <= 3 {
            let c = ['x', 'y', 'z'][j - 1];
            format!("{c}{i}")
        } else {
            format!("x{i}_{j}")
        }
    }

    pub fn monomial(&self, s: Support) -> String {
        if s.is_empty() {
            return "1".into();
        }
        s.iter().map(|v| self.name(v)).collect::<Vec<_>>().join("*")
    }
}

/// A family member together with its labeling.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub indexer: VarIndexer,
}

pub fn build_family(spec: &FamilySpec) -> Result<FamilyGraph> {
    spec.validate()?;
    let GridShape { n, m } = spec.shape;
    let flat = |i: usize, j: usize| VarIndexer::flat(n, i, j);
    match spec.family {
        Family::P => Ok(FamilyGraph {
            spec: *spec,
            graph: strong_product(&build_path(n)?, &build_path(m)?)?,
            indexer: VarIndexer::grid(n, m),
        }),
        Family::C => Ok(FamilyGraph {
            spec: *spec,
            graph: strong_product(&build_cycle(n)?, &build_path(m)?)?,
            indexer: VarIndexer::grid(n, m),
        }),
        Family::Pstar | Family::Pstarstar => {
            let base = strong_product(&build_path(n)?, &build_path(3)?)?;
            let extra = if spec.family == Family::Pstar { 1 } else { 2 };
            let mut edges = base.edges();
            let z_next = 3 * n;
            edges.push((flat(n, 3), z_next));
            edges.push((flat(n, 2), z_next));
            let mut labels = VarIndexer::grid(n, 3).labels;
            labels.push(VarLabel { i: n + 1, j: 3 });
            if extra == 2 {
                let z_far = 3 * n + 1;
                edges.push((flat(1, 3), z_far));
                edges.push((flat(1, 2), z_far));
                labels.push(VarLabel { i: n + 2, j: 3 });
            }
            Ok(FamilyGraph {
                spec: *spec,
                graph: Graph::from_edges(3 * n + extra, edges)?,
                indexer: VarIndexer::from_labels(n, 3, labels),
            })
        }
        Family::Cdiamond => {
            let full = strong_product(&build_cycle(n)?, &build_path(3)?)?;
            let deleted: Vec<usize> = [1, 2, n - 1, n]
                .iter()
                .flat_map(|&i| [flat(i, 1), flat(i, 2)])
                .collect();
            let keep: Vec<usize> = (0..3 * n).filter(|v| !deleted.contains(v)).collect();
            let grid = VarIndexer::grid(n, 3);
            let labels = keep.iter().map(|&v| grid.label(v)).collect();
            Ok(FamilyGraph {
                spec: *spec,
                graph: full.induced(&keep),
                indexer: VarIndexer::from_labels(n, 3, labels),
            })
        }
    }
}
