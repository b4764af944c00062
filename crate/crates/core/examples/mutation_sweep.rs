//! Deletes each edge of the 9-vertex graph in turn and shows which check
//! catches it.
//!
//!     cargo run --release --example mutation_sweep

use homcx::counterexample::verify_graph;
use homcx::Graph;

fn main() {
    let g9 = Graph::counterexample_g9();
    println!("{:<8} {:>3} {:>6} {:>10}  verdict", "edge", "chi", "count", "components");
    for (idx, &(u, v)) in g9.edges().iter().enumerate() {
        let r = verify_graph(&g9.without_edge(idx), 1);
        println!(
            "{:<8} {:>3} {:>6} {:>10}  {}",
            format!("{}-{}", u, v),
            r.chi,
            r.total,
            r.components,
            if r.pass { "PASS (unexpected)" } else { "rejected" }
        );
    }
}
