//! Connectivity of the flip graph, shortest recoloring paths and DOT export.
//!
//!     cargo run --example flip_graph > flip.dot

use homcx::counterexample::{parse_grid, render_grid};
use homcx::{build_flip_graph, enumerate_homs, Graph};

fn main() -> homcx::Result<()> {
    for n in 2..=4 {
        let fg = build_flip_graph(enumerate_homs(&Graph::complete(2)?, &Graph::complete(n)?)?);
        let r = fg.components();
        eprintln!(
            "Hom(K2, K{n}): {} colorings, {} flips, {} components",
            fg.homset().len(),
            fg.edge_count(),
            r.component_count
        );
    }

    let fg = build_flip_graph(enumerate_homs(&Graph::counterexample_g9(), &Graph::complete(5)?)?);
    eprintln!(
        "9-vertex graph: {} components of sizes {:?}",
        fg.components().component_count,
        fg.components().component_sizes
    );
    let s = parse_grid("132 254 413")?;
    let t = parse_grid("142 351 423")?;
    if let Some(path) = fg.shortest_path(&s, &t)? {
        eprintln!("shortest recoloring path from s to t ({} flips):", path.len() - 1);
        for c in &path {
            eprintln!("  {}", render_grid(c));
        }
    }

    let small = build_flip_graph(enumerate_homs(&Graph::complete(2)?, &Graph::complete(3)?)?);
    print!("{}", small.to_dot());
    Ok(())
}
