//! Graph homomorphisms, the flip graph of colorings (the 1-skeleton of the
//! Hom complex), the full cell structure of `Hom(G, H)` with GF(2) homology,
//! and an exhaustive check of the 9-vertex, 5-chromatic graph whose
//! 5-colorings form a connected flip graph.

pub mod chromatic;
pub mod cli;
pub mod complex;
pub mod counterexample;
pub mod dsu;
pub mod error;
pub mod flip;
pub mod graph;
pub mod hom;
pub mod homology;

pub use chromatic::{chromatic_number, is_proper, ChromaticResult};
pub use complex::{enumerate_cells, Cell, FacePoset};
pub use error::{Error, Result};
pub use flip::{build_flip_graph, ComponentReport, FlipGraph};
pub use graph::{Family, Graph};
pub use hom::{count_homs, enumerate_homs, Coloring, HomSearch, HomSet};
pub use homology::{betti_gf2, HomologyReport};

/// Runs `f` on a dedicated rayon pool of `threads` workers, or inline when
/// `threads <= 1`.
pub(crate) fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
