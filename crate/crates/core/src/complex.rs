//! Cells of the Hom complex `Hom(G, H)` and their face poset.
//!
//! A cell assigns every vertex of `G` a nonempty set of vertices of `H` such
//! that adjacent vertices of `G` receive sets that are completely joined in
//! `H`. Its dimension is the sum of `|set| - 1`. A cell lies in the closure
//! of another when it is pointwise contained in it.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{ones, Coloring};

pub const DEFAULT_MAX_CELLS: usize = 2_000_000;

/// Per-vertex color sets, bit `c` of `eta[v]` meaning `c` is in the set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    eta: Vec<u64>,
}

impl Cell {
    pub fn new(eta: Vec<u64>) -> Self {
        Cell { eta }
    }

    pub fn sets(&self) -> &[u64] {
        &self.eta
    }

    pub fn dim(&self) -> usize {
        self.eta.iter().map(|s| s.count_ones() as usize - 1).sum()
    }

    /// Pointwise `self(v) ⊆ other(v)`.
    pub fn is_face_of(&self, other: &Cell) -> bool {
        self.eta.iter().zip(&other.eta).all(|(a, b)| a & !b == 0)
    }

    /// Nonempty sets, joined along every edge of `g` in `h`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let h_all = if h.n() >= 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
        self.eta.len() == g.n()
            && self.eta.iter().all(|&s| s != 0 && s & !h_all == 0)
            && g.edges().iter().all(|&(x, y)| ones(self.eta[x]).all(|a| ones(self.eta[y]).all(|b| h.has_edge(a, b))))
    }

    /// The 0-cell of a homomorphism.
    pub fn from_coloring(c: &Coloring) -> Cell {
        Cell { eta: c.as_slice().iter().map(|&x| 1u64 << x).collect() }
    }

    pub fn as_coloring(&self) -> Option<Coloring> {
        self.eta
            .iter()
            .map(|&s| (s.count_ones() == 1).then(|| s.trailing_zeros() as u8))
            .collect::<Option<Vec<u8>>>()
            .map(Coloring::new)
    }
}

impl fmt::Display for Cell {
    /// `1 {2,3} 1` style, 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &s) in self.eta.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let items: Vec<String> = ones(s).map(|c| (c + 1).to_string()).collect();
            if items.len() == 1 {
                f.write_str(&items[0])?;
            } else {
                write!(f, "{{{}}}", items.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cell({self})")
    }
}

/// Cells sorted by `(dimension, sets)` with their covering relations.
#[derive(Debug, Clone)]
pub struct FacePoset {
    cells: Vec<Cell>,
    dims: Vec<usize>,
    /// Facets of each cell (covered cells), ascending indices.
    down: Vec<Vec<usize>>,
    /// Cells covering each cell, ascending indices.
    up: Vec<Vec<usize>>,
    /// True when no dimension limit cut the enumeration.
    complete: bool,
}

impl FacePoset {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn dim_of(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn facets(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn cofacets(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        let d = cell.dim();
        let lo = self.dims.partition_point(|&x| x < d);
        let hi = self.dims.partition_point(|&x| x <= d);
        self.cells[lo..hi].binary_search(cell).ok().map(|i| lo + i)
    }

    /// Strict containment `cells[a] < cells[b]`.
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        a != b && self.cells[a].is_face_of(&self.cells[b])
    }

    /// Number of cells in each dimension `0..=top`.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dims.last().map_or(0, |&d| d + 1)];
        for &d in &self.dims {
            counts[d] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.cell_counts())
    }

    /// 0-dimensional cells as homomorphisms, in order.
    pub fn vertices(&self) -> Vec<Coloring> {
        self.cells.iter().take_while(|c| c.dim() == 0).filter_map(Cell::as_coloring).collect()
    }
}

pub(crate) fn alternating_sum(counts: &[usize]) -> i64 {
    counts.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

#[derive(Debug, Clone, Copy)]
pub struct CellSearch {
    /// `None` enumerates every dimension.
    pub max_dim: Option<usize>,
    pub max_cells: usize,
    pub threads: usize,
}

impl Default for CellSearch {
    fn default() -> Self {
        CellSearch { max_dim: None, max_cells: DEFAULT_MAX_CELLS, threads: 1 }
    }
}

pub fn enumerate_cells(g: &Graph, h: &Graph, max_dim: Option<usize>) -> Result<FacePoset> {
    CellSearch { max_dim, ..Default::default() }.run(g, h)
}

pub fn euler_characteristic(fp: &FacePoset) -> i64 {
    fp.euler_characteristic()
}

impl CellSearch {
    pub fn run(&self, g: &Graph, h: &Graph) -> Result<FacePoset> {
        if g.n() == 0 || h.n() == 0 {
            return Err(Error::InvalidParams("both graphs need at least one vertex".into()));
        }
        let h_adj = h.neighbor_masks()?;
        let h_all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back: Vec<Vec<usize>> =
            order.iter().enumerate().map(|(i, &v)| g.neighbors(v).filter(|&u| pos[u] < i).collect()).collect();
        let search = Search {
            order: &order,
            back: &back,
            h_adj: &h_adj,
            h_all,
            max_dim: self.max_dim.unwrap_or(usize::MAX),
            max_cells: self.max_cells,
            found: AtomicUsize::new(0),
        };

        let firsts: Vec<u64> = submasks(h_all).filter(|s| s.count_ones() as usize - 1 <= search.max_dim).collect();
        let branch = |first: u64| -> Result<Vec<Cell>> {
            let mut out = Vec::new();
            let mut eta = vec![0u64; g.n()];
            eta[order[0]] = first;
            search.rec(1, first.count_ones() as usize - 1, &mut eta, &mut out)?;
            Ok(out)
        };
        let parts: Vec<Vec<Cell>> = if self.threads <= 1 {
            firsts.into_iter().map(branch).collect::<Result<_>>()?
        } else {
            crate::with_threads(self.threads, || firsts.into_par_iter().map(branch).collect::<Result<_>>())?
        };

        let mut keyed: Vec<(usize, Cell)> = parts.into_iter().flatten().map(|c| (c.dim(), c)).collect();
        keyed.sort_unstable();
        let (dims, cells): (Vec<usize>, Vec<Cell>) = keyed.into_iter().unzip();
        let index: HashMap<&Cell, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut down = vec![Vec::new(); cells.len()];
        let mut up = vec![Vec::new(); cells.len()];
        for (i, cell) in cells.iter().enumerate() {
            let mut eta = cell.eta.clone();
            for v in 0..eta.len() {
                let set = cell.eta[v];
                if set.count_ones() < 2 {
                    continue;
                }
                for c in ones(set) {
                    eta[v] = set & !(1 << c);
                    let j = index[&Cell { eta: eta.clone() }];
                    down[i].push(j);
                    up[j].push(i);
                }
                eta[v] = set;
            }
            down[i].sort_unstable();
        }
        for row in &mut up {
            row.sort_unstable();
        }
        Ok(FacePoset { cells, dims, down, up, complete: self.max_dim.is_none() })
    }
}

struct Search<'a> {
    order: &'a [usize],
    back: &'a [Vec<usize>],
    h_adj: &'a [u64],
    h_all: u64,
    max_dim: usize,
    max_cells: usize,
    found: AtomicUsize,
}

impl Search<'_> {
    fn rec(&self, step: usize, dim: usize, eta: &mut [u64], out: &mut Vec<Cell>) -> Result<()> {
        if step == self.order.len() {
            if self.found.fetch_add(1, Ordering::Relaxed) >= self.max_cells {
                return Err(Error::CapExceeded { what: "cell", cap: self.max_cells });
            }
            out.push(Cell { eta: eta.to_vec() });
            return Ok(());
        }
        // Colors joined to every color already placed on an earlier neighbor.
        let allowed = self.back[step].iter().fold(self.h_all, |m, &u| ones(eta[u]).fold(m, |m, c| m & self.h_adj[c]));
        let v = self.order[step];
        for set in submasks(allowed) {
            let d = dim + set.count_ones() as usize - 1;
            if d > self.max_dim {
                continue;
            }
            eta[v] = set;
            self.rec(step + 1, d, eta, out)?;
        }
        eta[v] = 0;
        Ok(())
    }
}

/// Nonempty submasks of `mask`.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        if cur == 0 {
            next = None;
            return None;
        }
        next = Some((cur - 1) & mask);
        Some(cur)
    })
}
