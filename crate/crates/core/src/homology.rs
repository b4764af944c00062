//! GF(2) homology of a face poset through its order complex.
//!
//! Simplices of the order complex are the chains `c0 < c1 < ... < ck` of the
//! poset (its barycentric subdivision). Boundary matrices are reduced column
//! by column; Betti numbers follow from their ranks.
//!
//! Over GF(2) these numbers can show that a complex is *not* k-connected
//! (a nonzero reduced Betti number in degree <= k), but vanishing Betti
//! numbers never certify k-connectivity for k >= 1.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::FacePoset;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_CHAINS: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    /// Cells of the complex per dimension.
    #[serde(rename = "cells")]
    pub cell_counts: Vec<usize>,
    #[serde(rename = "euler")]
    pub euler_characteristic: i64,
    /// Simplices of the order complex per dimension.
    #[serde(skip)]
    pub chain_counts: Vec<usize>,
    pub betti_gf2: Vec<usize>,
}

/// A column of a GF(2) matrix: sorted row indices of its nonzero entries.
type Column = Vec<u32>;

/// Boundary matrices of the order complex, `boundaries[k]` mapping
/// k-simplices to (k-1)-simplices (`boundaries[0]` is empty).
#[derive(Debug, Clone)]
pub struct ChainComplex {
    simplices: Vec<Vec<Vec<u32>>>,
    boundaries: Vec<Vec<Column>>,
}

impl ChainComplex {
    /// Enumerates every chain of `fp`, guarded by `max_chains`.
    pub fn order_complex(fp: &FacePoset, max_chains: usize) -> Result<ChainComplex> {
        let n = fp.len();
        // Strict up-sets, filled from the top dimension down.
        let mut above: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut total = n;
        for i in (0..n).rev() {
            let mut set: Vec<u32> = Vec::new();
            for &j in fp.cofacets(i) {
                set.push(j as u32);
                set.extend_from_slice(&above[j]);
            }
            set.sort_unstable();
            set.dedup();
            total += set.len();
            if total > max_chains {
                return Err(Error::CapExceeded { what: "chain", cap: max_chains });
            }
            above[i] = set;
        }

        let mut simplices: Vec<Vec<Vec<u32>>> = vec![(0..n as u32).map(|i| vec![i]).collect()];
        loop {
            let last = simplices.last().unwrap();
            let mut next = Vec::new();
            for chain in last {
                for &j in &above[*chain.last().unwrap() as usize] {
                    let mut longer = chain.clone();
                    longer.push(j);
                    next.push(longer);
                }
            }
            if next.is_empty() {
                break;
            }
            total += next.len();
            if total > max_chains {
                return Err(Error::CapExceeded { what: "chain", cap: max_chains });
            }
            simplices.push(next);
        }
        if n == 0 {
            simplices.clear();
        }

        let mut boundaries = vec![Vec::new()];
        for k in 1..simplices.len() {
            let index: HashMap<&[u32], u32> =
                simplices[k - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i as u32)).collect();
            let cols = simplices[k]
                .iter()
                .map(|s| {
                    let mut col: Column = (0..s.len())
                        .map(|drop| {
                            let face: Vec<u32> =
                                s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &x)| x).collect();
                            index[face.as_slice()]
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            boundaries.push(cols);
        }
        Ok(ChainComplex { simplices, boundaries })
    }

    pub fn simplex_counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn boundary(&self, k: usize) -> &[Column] {
        &self.boundaries[k]
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// True iff every composite `∂_{k-1} ∘ ∂_k` is the zero map.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.boundaries.len()).all(|k| {
            self.boundaries[k].iter().all(|col| {
                let mut acc: Column = Vec::new();
                for &r in col {
                    acc = xor(&acc, &self.boundaries[k - 1][r as usize]);
                }
                acc.is_empty()
            })
        })
    }

    /// Betti numbers over GF(2), dimensions `0..=top_dim`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| rank(b)).collect();
        (0..self.simplices.len())
            .map(|d| self.simplices[d].len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// Rank of a GF(2) matrix given by columns, via left-to-right column
/// reduction on the lowest (largest) row index.
pub fn rank(columns: &[Column]) -> usize {
    let mut pivots: HashMap<u32, Column> = HashMap::new();
    let mut r = 0;
    for col in columns {
        let mut col = col.clone();
        while let Some(&low) = col.last() {
            match pivots.get(&low) {
                Some(other) => col = xor(&col, other),
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            pivots.insert(low, col);
            r += 1;
        }
    }
    r
}

/// Symmetric difference of two sorted index lists.
fn xor(a: &[u32], b: &[u32]) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub fn betti_gf2(fp: &FacePoset) -> Result<HomologyReport> {
    homology(fp, DEFAULT_MAX_CHAINS)
}

pub fn homology(fp: &FacePoset, max_chains: usize) -> Result<HomologyReport> {
    if !fp.is_complete() {
        return Err(Error::InvalidParams("homology needs the full complex (no dimension limit)".into()));
    }
    let cx = ChainComplex::order_complex(fp, max_chains)?;
    Ok(HomologyReport {
        cell_counts: fp.cell_counts(),
        euler_characteristic: fp.euler_characteristic(),
        chain_counts: cx.simplex_counts(),
        betti_gf2: cx.betti(),
    })
}
