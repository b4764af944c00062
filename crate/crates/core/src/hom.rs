//! Enumeration of graph homomorphisms `G -> H` (the 0-cells of `Hom(G, H)`).

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_COLORINGS: usize = 10_000_000;

/// A map `V(G) -> V(H)`, one target vertex per source vertex.
///
/// Text form is space separated and 1-indexed: `"1 3 2"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    pub fn new(assignment: Vec<u8>) -> Self {
        Coloring(assignment)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    /// Number of positions where the two assignments differ.
    pub fn hamming(&self, other: &Coloring) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// True iff every edge of `g` maps onto an edge of `h`.
    pub fn is_hom(&self, g: &Graph, h: &Graph) -> bool {
        self.0.len() == g.n()
            && self.0.iter().all(|&c| (c as usize) < h.n())
            && g.edges().iter().all(|&(x, y)| h.has_edge(self.get(x), self.get(y)))
    }

    /// Applies a permutation of the target vertices.
    pub fn permute_colors(&self, perm: &[usize]) -> Coloring {
        Coloring(self.0.iter().map(|&c| perm[c as usize] as u8).collect())
    }

    pub fn as_usizes(&self) -> Vec<usize> {
        self.0.iter().map(|&c| c as usize).collect()
    }
}

impl From<Vec<u8>> for Coloring {
    fn from(v: Vec<u8>) -> Self {
        Coloring(v)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *c as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coloring> {
        s.split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(c) if (1..=64).contains(&c) => Ok((c - 1) as u8),
                _ => Err(Error::InvalidParams(format!("bad color `{t}` in `{s}`"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Coloring)
    }
}

/// All homomorphisms `G -> H`, sorted lexicographically by assignment.
#[derive(Debug, Clone)]
pub struct HomSet {
    g: Graph,
    h: Graph,
    colorings: Vec<Coloring>,
}

impl HomSet {
    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn position(&self, c: &Coloring) -> Option<usize> {
        self.colorings.binary_search(c).ok()
    }

    pub fn get(&self, i: usize) -> &Coloring {
        &self.colorings[i]
    }

    /// One coloring per line in text form.
    pub fn to_text(&self) -> String {
        self.colorings.iter().map(|c| format!("{c}\n")).collect()
    }
}

/// Backtracking search for homomorphisms with a result cap and an optional
/// worker count.
#[derive(Debug, Clone, Copy)]
pub struct HomSearch {
    pub max_colorings: usize,
    pub threads: usize,
}

impl Default for HomSearch {
    fn default() -> Self {
        HomSearch { max_colorings: DEFAULT_MAX_COLORINGS, threads: 1 }
    }
}

pub fn enumerate_homs(g: &Graph, h: &Graph) -> Result<HomSet> {
    HomSearch::default().enumerate(g, h)
}

pub fn count_homs(g: &Graph, h: &Graph) -> Result<u64> {
    HomSearch::default().count(g, h)
}

impl HomSearch {
    pub fn enumerate(&self, g: &Graph, h: &Graph) -> Result<HomSet> {
        let plan = Plan::new(g, h)?;
        let found = AtomicUsize::new(0);
        let branch = |first: usize| -> Result<Vec<Coloring>> {
            let mut out = Vec::new();
            let mut assign = vec![0u8; plan.n];
            plan.descend(first, &mut assign, &mut |a: &[u8]| {
                if found.fetch_add(1, Ordering::Relaxed) >= self.max_colorings {
                    return Err(Error::CapExceeded { what: "coloring", cap: self.max_colorings });
                }
                out.push(Coloring(a.to_vec()));
                Ok(())
            })?;
            Ok(out)
        };
        let parts: Vec<Vec<Coloring>> = if self.threads <= 1 {
            plan.first_choices().map(branch).collect::<Result<_>>()?
        } else {
            let choices: Vec<usize> = plan.first_choices().collect();
            crate::with_threads(self.threads, || choices.into_par_iter().map(branch).collect::<Result<_>>())?
        };
        let mut colorings: Vec<Coloring> = parts.into_iter().flatten().collect();
        colorings.sort_unstable();
        Ok(HomSet { g: g.clone(), h: h.clone(), colorings })
    }

    /// Number of homomorphisms, without storing them. Not subject to the cap.
    pub fn count(&self, g: &Graph, h: &Graph) -> Result<u64> {
        let plan = Plan::new(g, h)?;
        let branch = |first: usize| -> u64 {
            let mut n = 0u64;
            let mut assign = vec![0u8; plan.n];
            let _ = plan.descend(first, &mut assign, &mut |_: &[u8]| {
                n += 1;
                Ok(())
            });
            n
        };
        if self.threads <= 1 {
            Ok(plan.first_choices().map(branch).sum())
        } else {
            let choices: Vec<usize> = plan.first_choices().collect();
            Ok(crate::with_threads(self.threads, || choices.into_par_iter().map(branch).sum()))
        }
    }
}

/// Fixed vertex order plus, for each step, the already placed neighbors.
struct Plan {
    n: usize,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    h_adj: Vec<u64>,
    h_all: u64,
}

impl Plan {
    fn new(g: &Graph, h: &Graph) -> Result<Plan> {
        if g.n() == 0 || h.n() == 0 {
            return Err(Error::InvalidParams("both graphs need at least one vertex".into()));
        }
        let h_adj = h.neighbor_masks()?;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order.iter().enumerate().map(|(i, &v)| g.neighbors(v).filter(|&u| pos[u] < i).collect()).collect();
        let h_all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
        Ok(Plan { n: g.n(), order, back, h_adj, h_all })
    }

    fn first_choices(&self) -> impl Iterator<Item = usize> + '_ {
        ones(self.h_all)
    }

    fn descend(&self, first: usize, assign: &mut [u8], emit: &mut dyn FnMut(&[u8]) -> Result<()>) -> Result<()> {
        assign[self.order[0]] = first as u8;
        self.rec(1, assign, emit)
    }

    fn rec(&self, step: usize, assign: &mut [u8], emit: &mut dyn FnMut(&[u8]) -> Result<()>) -> Result<()> {
        if step == self.n {
            return emit(assign);
        }
        let cand = self.back[step].iter().fold(self.h_all, |m, &u| m & self.h_adj[assign[u] as usize]);
        let v = self.order[step];
        for c in ones(cand) {
            assign[v] = c as u8;
            self.rec(step + 1, assign, emit)?;
        }
        Ok(())
    }
}

pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
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

#[cfg(test)]
mod tests {
    use super::*;

    /// Every map `V(G) -> V(H)` filtered by the edge condition, in
    /// lexicographic order.
    pub(crate) fn brute_homs(g: &Graph, h: &Graph) -> Vec<Coloring> {
        let (n, k) = (g.n(), h.n());
        let mut out = Vec::new();
        let mut a = vec![0u8; n];
        loop {
            let c = Coloring(a.clone());
            if c.is_hom(g, h) {
                out.push(c);
            }
            // Odometer, last position fastest, so output is lexicographic.
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                a[i] += 1;
                if (a[i] as usize) < k {
                    break;
                }
                a[i] = 0;
            }
        }
    }

    #[test]
    fn small_counts() {
        let k = |n| Graph::complete(n).unwrap();
        assert_eq!(brute_homs(&k(2), &k(3)).len(), 6);
        assert_eq!(enumerate_homs(&k(2), &k(3)).unwrap().len(), 6);
        assert_eq!(enumerate_homs(&k(3), &k(2)).unwrap().len(), 0);
        assert_eq!(brute_homs(&k(2), &k(2)).len(), 2);
        assert_eq!(count_homs(&k(2), &k(2)).unwrap(), 2);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(brute_homs(&c5, &k(3)).len(), 30);
        assert_eq!(count_homs(&c5, &k(3)).unwrap(), 30);
    }

    #[test]
    fn g9_has_4080_five_colorings() {
        let g9 = Graph::counterexample_g9();
        let k5 = Graph::complete(5).unwrap();
        let homs = enumerate_homs(&g9, &k5).unwrap();
        assert_eq!(homs.len(), 4080);
        assert_eq!(count_homs(&g9, &k5).unwrap(), 4080);
        assert!(homs.colorings().windows(2).all(|w| w[0] < w[1]));
        assert!(homs.colorings().iter().all(|c| c.is_hom(&g9, &k5)));
    }

    #[test]
    fn matches_brute_force() {
        let k = |n| Graph::complete(n).unwrap();
        let graphs = [k(1), k(2), k(3), Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap(), Graph::path(3).unwrap()];
        for g in &graphs {
            for h in &graphs {
                let got = enumerate_homs(g, h).unwrap();
                assert_eq!(got.colorings(), brute_homs(g, h).as_slice(), "{g:?} -> {h:?}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let search = HomSearch { max_colorings: 100, threads: 1 };
        let err = search.enumerate(&Graph::counterexample_g9(), &Graph::complete(5).unwrap()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
        let search = HomSearch { max_colorings: 4080, threads: 3 };
        assert_eq!(search.enumerate(&Graph::counterexample_g9(), &Graph::complete(5).unwrap()).unwrap().len(), 4080);
    }

    #[test]
    fn threads_do_not_change_output() {
        let g9 = Graph::counterexample_g9();
        let k5 = Graph::complete(5).unwrap();
        let one = HomSearch { threads: 1, ..Default::default() }.enumerate(&g9, &k5).unwrap();
        let four = HomSearch { threads: 4, ..Default::default() }.enumerate(&g9, &k5).unwrap();
        assert_eq!(one.colorings(), four.colorings());
        assert_eq!(HomSearch { threads: 4, ..Default::default() }.count(&g9, &k5).unwrap(), 4080);
    }

    #[test]
    fn text_form() {
        let c: Coloring = "1 3 2".parse().unwrap();
        assert_eq!(c.as_slice(), &[0, 2, 1]);
        assert_eq!(c.to_string(), "1 3 2");
        assert!("0 1".parse::<Coloring>().is_err());
        assert!("a".parse::<Coloring>().is_err());
    }
}
