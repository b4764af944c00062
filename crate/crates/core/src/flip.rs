//! The flip graph: homomorphisms adjacent when they differ at exactly one
//! vertex of `G`. This is the 1-skeleton of `Hom(G, H)`.
//!
//! Two homomorphisms that differ at one vertex always span a 1-cell (each
//! of the two target vertices is already compatible with every neighbor),
//! so no extra cell condition is checked here.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::hom::{Coloring, HomSet};

#[derive(Debug, Clone)]
pub struct FlipGraph {
    homset: HomSet,
    adjacency: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    report: ComponentReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    #[serde(rename = "components")]
    pub component_count: usize,
    /// Descending; ties ordered by smallest member index.
    #[serde(rename = "sizes")]
    pub component_sizes: Vec<usize>,
    /// Smallest-index coloring of each component, aligned with the sizes.
    #[serde(skip)]
    pub representatives: Vec<Coloring>,
}

pub fn build_flip_graph(homset: HomSet) -> FlipGraph {
    FlipGraph::build(homset, 1)
}

impl FlipGraph {
    /// Buckets colorings by their assignment with one position masked out;
    /// every pair inside a bucket differs exactly at that position.
    pub fn build(homset: HomSet, threads: usize) -> FlipGraph {
        let n = homset.g().n();
        let colorings = homset.colorings();
        let edges_at = |pos: usize| -> Vec<(usize, usize)> {
            let mut buckets: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
            for (i, c) in colorings.iter().enumerate() {
                let mut key = c.as_slice().to_vec();
                key[pos] = u8::MAX;
                buckets.entry(key).or_default().push(i);
            }
            let mut edges = Vec::new();
            for members in buckets.values() {
                for (a, &i) in members.iter().enumerate() {
                    for &j in &members[a + 1..] {
                        edges.push((i, j));
                    }
                }
            }
            edges
        };
        let per_pos: Vec<Vec<(usize, usize)>> = if threads <= 1 {
            (0..n).map(edges_at).collect()
        } else {
            crate::with_threads(threads, || (0..n).into_par_iter().map(edges_at).collect())
        };

        let mut adjacency = vec![Vec::new(); colorings.len()];
        let mut dsu = Dsu::new(colorings.len());
        for &(i, j) in per_pos.iter().flatten() {
            adjacency[i].push(j);
            adjacency[j].push(i);
            dsu.union(i, j);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }

        // Component ids in order of first (smallest) member.
        let mut id_of_root = HashMap::new();
        let mut component_of = Vec::with_capacity(colorings.len());
        let mut members: Vec<(usize, usize)> = Vec::new();
        for i in 0..colorings.len() {
            let root = dsu.find(i);
            let id = *id_of_root.entry(root).or_insert_with(|| {
                members.push((0, i));
                members.len() - 1
            });
            members[id].0 += 1;
            component_of.push(id);
        }
        let mut order = members.clone();
        order.sort_by_key(|&(size, rep)| (std::cmp::Reverse(size), rep));
        let report = ComponentReport {
            component_count: members.len(),
            component_sizes: order.iter().map(|&(s, _)| s).collect(),
            representatives: order.iter().map(|&(_, r)| colorings[r].clone()).collect(),
        };
        FlipGraph { homset, adjacency, component_of, report }
    }

    pub fn homset(&self) -> &HomSet {
        &self.homset
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn components(&self) -> &ComponentReport {
        &self.report
    }

    /// Component id of coloring `i`; ids follow the smallest member index.
    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }

    fn index(&self, c: &Coloring) -> Result<usize> {
        self.homset.position(c).ok_or_else(|| Error::NotInHomSet(c.to_string()))
    }

    pub fn is_edge(&self, a: &Coloring, b: &Coloring) -> Result<bool> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        Ok(self.adjacency[i].binary_search(&j).is_ok())
    }

    /// A shortest flip sequence from `from` to `to`, or `None` across
    /// components. BFS visits neighbors in index order, so ties resolve
    /// toward smaller indices.
    pub fn shortest_path(&self, from: &Coloring, to: &Coloring) -> Result<Option<Vec<Coloring>>> {
        let (s, t) = (self.index(from)?, self.index(to)?);
        if self.component_of[s] != self.component_of[t] {
            return Ok(None);
        }
        let mut parent = vec![usize::MAX; self.adjacency.len()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adjacency[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Ok(Some(path.into_iter().map(|i| self.homset.get(i).clone()).collect()))
    }

    /// Graphviz export: one node per coloring labelled with its text form,
    /// one undirected edge per flip.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flip {\n");
        for (i, c) in self.homset.colorings().iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{c}\"];");
        }
        for (i, row) in self.adjacency.iter().enumerate() {
            for &j in row.iter().filter(|&&j| j > i) {
                let _ = writeln!(out, "  {i} -- {j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hom::enumerate_homs;

    fn flip(g: &Graph, h: &Graph) -> FlipGraph {
        build_flip_graph(enumerate_homs(g, h).unwrap())
    }

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn k2_to_k3_is_a_six_cycle() {
        let fg = flip(&k(2), &k(3));
        assert_eq!(fg.homset().len(), 6);
        assert!((0..6).all(|i| fg.neighbors(i).len() == 2));
        assert_eq!(fg.edge_count(), 6);
        assert_eq!(fg.components().component_count, 1);
    }

    #[test]
    fn k2_to_k2_has_no_flips() {
        let fg = flip(&k(2), &k(2));
        assert_eq!(fg.edge_count(), 0);
        assert_eq!(fg.components().component_count, 2);
        let a: Coloring = "1 2".parse().unwrap();
        let b: Coloring = "2 1".parse().unwrap();
        assert_eq!(fg.shortest_path(&a, &b).unwrap(), None);
        assert_eq!(fg.shortest_path(&a, &a).unwrap(), Some(vec![a.clone()]));
        assert!(!fg.is_edge(&a, &a).unwrap());
        assert!(fg.is_edge(&a, &"1 1".parse().unwrap()).is_err());
    }

    #[test]
    fn empty_homset_has_no_components() {
        let fg = flip(&k(3), &k(2));
        assert_eq!(fg.components().component_count, 0);
        assert!(fg.components().component_sizes.is_empty());
    }

    #[test]
    fn paths_are_shortest_and_valid() {
        let fg = flip(&Graph::path(3).unwrap(), &k(3));
        let all = fg.homset().colorings();
        let (a, b) = (&all[0], &all[all.len() - 1]);
        let path = fg.shortest_path(a, b).unwrap().unwrap();
        assert_eq!(path.first(), Some(a));
        assert_eq!(path.last(), Some(b));
        assert!(path.windows(2).all(|w| w[0].hamming(&w[1]) == 1));
        assert!(path.len() > a.hamming(b));
    }

    #[test]
    fn dot_export() {
        let dot = flip(&k(2), &k(3)).to_dot();
        assert!(dot.starts_with("graph flip {\n  0 [label=\"1 2\"];"));
        assert_eq!(dot.matches(" -- ").count(), 6);
    }

    #[test]
    fn adjacency_matches_pairwise_hamming() {
        for (g, h) in [(Graph::cycle(5).unwrap(), k(3)), (Graph::path(4).unwrap(), k(3)), (k(3), k(4))] {
            let fg = flip(&g, &h);
            let cs = fg.homset().colorings();
            for i in 0..cs.len() {
                let brute: Vec<usize> = (0..cs.len()).filter(|&j| cs[i].hamming(&cs[j]) == 1).collect();
                assert_eq!(fg.neighbors(i), brute.as_slice());
            }
        }
    }

    #[test]
    fn threads_agree() {
        let g9 = Graph::counterexample_g9();
        let homs = enumerate_homs(&g9, &k(5)).unwrap();
        let a = FlipGraph::build(homs.clone(), 1);
        let b = FlipGraph::build(homs, 4);
        assert_eq!(a.to_dot(), b.to_dot());
        assert_eq!(a.components(), b.components());
        assert_eq!(a.components().component_count, 1);
    }
}
