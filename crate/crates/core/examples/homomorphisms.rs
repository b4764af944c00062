//! Enumerating and counting homomorphisms, single- and multi-threaded.
//!
//!     cargo run --example homomorphisms

use homcx::{count_homs, enumerate_homs, Graph, HomSearch};

fn main() -> homcx::Result<()> {
    let k2 = Graph::complete(2)?;
    let k3 = Graph::complete(3)?;
    println!("Hom(K2, K3):");
    print!("{}", enumerate_homs(&k2, &k3)?.to_text());

    println!("|Hom(C5, K3)| = {}", count_homs(&Graph::cycle(5)?, &k3)?);

    let g9 = Graph::counterexample_g9();
    let k5 = Graph::complete(5)?;
    let homs = HomSearch { threads: 4, ..Default::default() }.enumerate(&g9, &k5)?;
    println!("5-colorings of the 9-vertex graph: {}", homs.len());
    println!("first: {}", homs.get(0));
    Ok(())
}
