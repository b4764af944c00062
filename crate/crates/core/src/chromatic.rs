//! Exact chromatic number for graphs with at most 64 vertices.
//!
//! A greedy clique gives the lower bound, DSATUR gives the upper bound and a
//! fail-first backtracking search decides each `k` in between.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    /// Proper coloring with colors `0..chi`.
    pub witness: Vec<usize>,
    /// Pairwise adjacent vertices; `chi >= lower_bound_clique.len()`.
    pub lower_bound_clique: Vec<usize>,
    /// Number of colors DSATUR used.
    pub dsatur_bound: usize,
}

/// True iff `coloring` uses colors in `0..k` and no edge is monochromatic.
pub fn is_proper(g: &Graph, coloring: &[usize], k: usize) -> Result<bool> {
    if coloring.len() != g.n() {
        return Err(Error::InvalidParams(format!(
            "coloring has length {}, graph has {} vertices",
            coloring.len(),
            g.n()
        )));
    }
    if let Some(&c) = coloring.iter().find(|&&c| c >= k) {
        return Err(Error::InvalidParams(format!("color {c} outside 0..{k}")));
    }
    Ok(g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]))
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    if g.n() == 0 {
        return Err(Error::InvalidParams("chromatic number of the empty graph".into()));
    }
    let adj = g.neighbor_masks()?;
    let clique = greedy_clique(&adj);
    let upper = dsatur(&adj);
    let dsatur_bound = upper.iter().max().map_or(0, |&c| c + 1);

    for k in clique.len()..dsatur_bound {
        if let Some(witness) = colorable(&adj, k, clique[0]) {
            return Ok(ChromaticResult { chi: k, witness, lower_bound_clique: clique, dsatur_bound });
        }
    }
    Ok(ChromaticResult { chi: dsatur_bound, witness: upper, lower_bound_clique: clique, dsatur_bound })
}

/// Largest clique found by greedily growing from every start vertex, always
/// adding the candidate with most neighbors among the remaining candidates.
fn greedy_clique(adj: &[u64]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..adj.len() {
        let mut clique = vec![start];
        let mut cand = adj[start];
        while cand != 0 {
            let pick = ones(cand).max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v))).unwrap();
            clique.push(pick);
            cand &= adj[pick];
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

fn dsatur(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    // Colors seen in each vertex's neighborhood; DSATUR never needs more than n colors.
    let mut seen = vec![Vec::<bool>::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v], adj[v].count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for u in ones(adj[v]) {
            let s = &mut seen[u];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                saturation[u] += 1;
            }
        }
    }
    color
}

/// Searches for a proper `k`-coloring, pinning `pinned` to color 0 and only
/// ever opening the next unused color.
fn colorable(adj: &[u64], k: usize, pinned: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return None;
    }
    let n = adj.len();
    let mut state = Search { adj, k, color: vec![usize::MAX; n], forbidden: vec![0u64; n] };
    state.assign(pinned, 0);
    if state.solve(1, 1) {
        Some(state.color)
    } else {
        None
    }
}

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    color: Vec<usize>,
    /// Bit `c` set when some neighbor already has color `c`.
    forbidden: Vec<u64>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
    }

    fn forbidden_for(&self, v: usize) -> u64 {
        ones(self.adj[v]).filter(|&u| self.color[u] != usize::MAX).fold(0, |m, u| m | (1 << self.color[u]))
    }

    fn solve(&mut self, assigned: usize, used: usize) -> bool {
        let n = self.adj.len();
        if assigned == n {
            return true;
        }
        let all = if self.k == 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        // Fail-first: fewest remaining colors, lowest index on ties.
        let mut best = usize::MAX;
        let mut best_free = u32::MAX;
        for v in (0..n).filter(|&v| self.color[v] == usize::MAX) {
            self.forbidden[v] = self.forbidden_for(v);
            let free = (all & !self.forbidden[v]).count_ones();
            if free < best_free {
                best_free = free;
                best = v;
            }
        }
        if best_free == 0 {
            return false;
        }
        let v = best;
        let open = if used + 1 < 64 { (1u64 << (used + 1)) - 1 } else { u64::MAX };
        for c in ones(all & open & !self.forbidden[v]) {
            self.assign(v, c);
            if self.solve(assigned + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.color[v] = usize::MAX;
        false
    }
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
