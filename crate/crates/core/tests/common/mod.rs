//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search code it is used to check.

#![allow(dead_code)]

use homcx::Graph;

/// Every map `V(G) -> V(H)` filtered by the edge condition, as plain
/// vectors in lexicographic order.
pub fn brute_homs(g: &Graph, h: &Graph) -> Vec<Vec<u8>> {
    let (n, k) = (g.n(), h.n());
    let mut out = Vec::new();
    let mut a = vec![0u8; n];
    loop {
        if g.edges().iter().all(|&(x, y)| h.has_edge(a[x] as usize, a[y] as usize)) {
            out.push(a.clone());
        }
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

/// Number of proper `k`-colorings, by trying all `k^n` maps.
pub fn brute_count_colorings(g: &Graph, k: usize) -> usize {
    let h = Graph::complete(k).unwrap();
    brute_homs(g, &h).len()
}

/// All pairs at Hamming distance exactly one.
pub fn brute_flip_pairs(colorings: &[Vec<u8>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..colorings.len() {
        for j in i + 1..colorings.len() {
            let d = colorings[i].iter().zip(&colorings[j]).filter(|(a, b)| a != b).count();
            if d == 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Connected components of a graph on `n` nodes by repeated DFS.
pub fn brute_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// The graph families the oracle suites draw from.
pub fn small_families() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("C{n}"), Graph::cycle(n).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("P{n}"), Graph::path(n).unwrap()));
    }
    out
}

/// Subgraphs of the 9-vertex graph induced on every 6-vertex subset.
pub fn g9_induced_six() -> Vec<(String, Graph)> {
    let g9 = Graph::counterexample_g9();
    let mut out = Vec::new();
    for mask in 0u32..(1 << 9) {
        if mask.count_ones() == 6 {
            let vs: Vec<usize> = (0..9).filter(|&v| mask & (1 << v) != 0).collect();
            out.push((format!("g9{vs:?}"), g9.induced(&vs)));
        }
    }
    out
}
