//! Undirected simple graphs, DIMACS text I/O and the generator families
//! used throughout the crate.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are kept twice: as a sorted list of `(min, max)` pairs and as a
/// per-vertex neighbor bitset. Both are built together and never diverge.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParams(format!("edge ({u}, {v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            if !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Neighborhoods as `u64` masks. Only defined for graphs with at most 64
    /// vertices.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge(format!("{} vertices, at most 64 supported here", self.n)));
        }
        Ok(self.adj.iter().map(|row| row.ones().fold(0u64, |m, u| m | (1 << u))).collect())
    }

    /// Graph with edge `idx` (in [`Graph::edges`] order) removed.
    pub fn without_edge(&self, idx: usize) -> Graph {
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, &e)| e);
        Graph::from_edges(self.n, edges).expect("subset of a valid edge list")
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Image of the graph under the vertex bijection `perm` (`v -> perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParams("relabelling is not a permutation".into()));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// DIMACS text: header, then edges sorted by `(min, max)`, 1-indexed.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Parses DIMACS-like text: `c` comment lines, one `p edge <n> <m>`
    /// header, then `e <u> <v>` lines with 1-indexed endpoints.
    ///
    /// `m` may count either the `e` lines or the distinct edges, so files
    /// that list both orientations of every edge are accepted.
    pub fn parse_dimacs(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edge_lines = 0usize;
        let mut pairs = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("c") => continue,
                Some("p") => {
                    if header.is_some() {
                        return Err(Error::parse(line_no, "duplicate header"));
                    }
                    if fields.next() != Some("edge") {
                        return Err(Error::parse(line_no, "expected `p edge <n> <m>`"));
                    }
                    let n = parse_count(fields.next(), line_no, "vertex count")?;
                    let m = parse_count(fields.next(), line_no, "edge count")?;
                    if fields.next().is_some() {
                        return Err(Error::parse(line_no, "trailing fields after header"));
                    }
                    header = Some((n, m, line_no));
                }
                Some("e") => {
                    let u = parse_count(fields.next(), line_no, "endpoint")?;
                    let v = parse_count(fields.next(), line_no, "endpoint")?;
                    if fields.next().is_some() {
                        return Err(Error::parse(line_no, "trailing fields after edge"));
                    }
                    if u == v {
                        return Err(Error::parse(line_no, format!("loop edge {u} {v}")));
                    }
                    let Some((n, _, _)) = header else {
                        return Err(Error::parse(line_no, "edge before `p edge` header"));
                    };
                    for w in [u, v] {
                        if w < 1 || w > n {
                            return Err(Error::parse(line_no, format!("vertex {w} out of range 1..{n}")));
                        }
                    }
                    edge_lines += 1;
                    pairs.push((u - 1, v - 1));
                }
                Some(other) => {
                    return Err(Error::parse(line_no, format!("unknown line type `{other}`")));
                }
                None => unreachable!(),
            }
        }
        let Some((n, m, header_line)) = header else {
            return Err(Error::parse(last_line.max(1), "missing `p edge` header"));
        };
        let g = Graph::from_edges(n, pairs).map_err(|e| Error::parse(header_line, e.to_string()))?;
        if m != edge_lines && m != g.edge_count() {
            return Err(Error::parse(
                header_line,
                format!("header declares {m} edges, found {edge_lines} edge lines ({} distinct)", g.edge_count()),
            ));
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParams("complete graph needs n >= 1".into()));
        }
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParams("cycle needs n >= 3".into()));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParams("path needs n >= 1".into()));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Kneser graph: `k`-subsets of `{0..n}` in lexicographic order, adjacent
    /// when disjoint.
    pub fn kneser(n: usize, k: usize) -> Result<Graph> {
        if !(n > k && k >= 1) {
            return Err(Error::InvalidParams(format!("kneser needs n > k >= 1, got n={n}, k={k}")));
        }
        if n > 64 {
            return Err(Error::TooLarge(format!("kneser ground set {n} > 64")));
        }
        let subsets = k_subsets(n, k);
        if subsets.len() > 1 << 16 {
            return Err(Error::TooLarge(format!("kneser({n},{k}) has {} vertices", subsets.len())));
        }
        let mut edges = Vec::new();
        for (i, a) in subsets.iter().enumerate() {
            for (j, b) in subsets.iter().enumerate().skip(i + 1) {
                if a & b == 0 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(subsets.len(), edges)
    }

    /// The 9-vertex, 22-edge graph with chromatic number 5 whose 5-coloring
    /// flip graph is connected.
    ///
    /// Drawn as a 3x3 grid `[c1 t c2 / l z r / c4 b c3]`: the corners form a
    /// 4-clique, each side midpoint sees its two corners, the midpoints form
    /// a 4-cycle and the center sees all midpoints.
    /// Labels: 0=c1 1=c2 2=c3 3=c4 4=t 5=r 6=b 7=l 8=z.
    pub fn counterexample_g9() -> Graph {
        const EDGES: [(usize, usize); 22] = [
            // corner clique
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (1, 3),
            // corner to midpoint
            (0, 4),
            (1, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
            (0, 7),
            // midpoint cycle
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            // center
            (8, 4),
            (8, 5),
            (8, 6),
            (8, 7),
        ];
        Graph::from_edges(9, EDGES).expect("static edge list")
    }
}

fn parse_count(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let f = field.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    f.parse().map_err(|_| Error::parse(line, format!("bad {what} `{f}`")))
}

/// All `k`-subsets of `0..n` as bitmasks, lexicographic on sorted element
/// lists.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// A named generator with its parameters, e.g. `kneser:5,2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Kneser(usize, usize),
    CounterexampleG9,
}

impl Family {
    pub fn generate(self) -> Result<Graph> {
        match self {
            Family::Complete(n) => Graph::complete(n),
            Family::Cycle(n) => Graph::cycle(n),
            Family::Path(n) => Graph::path(n),
            Family::Kneser(n, k) => Graph::kneser(n, k),
            Family::CounterexampleG9 => Ok(Graph::counterexample_g9()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name[:p1,p2]`, with names `complete`, `cycle`, `path`, `kneser` and
    /// `counterexample_g9`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, params) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let nums: Vec<usize> = match params {
            None => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::InvalidParams(format!("bad parameter `{x}` in `{s}`"))))
                .collect::<Result<_>>()?,
        };
        let fam = match (name, nums.as_slice()) {
            ("complete", &[n]) => Family::Complete(n),
            ("cycle", &[n]) => Family::Cycle(n),
            ("path", &[n]) => Family::Path(n),
            ("kneser", &[n, k]) => Family::Kneser(n, k),
            ("counterexample_g9", &[]) => Family::CounterexampleG9,
            _ => return Err(Error::InvalidParams(format!("unknown family or wrong parameter count: `{s}`"))),
        };
        Ok(fam)
    }
}
