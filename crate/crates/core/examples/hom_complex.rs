//! Cells, Euler characteristic and GF(2) Betti numbers of Hom complexes.
//! `Hom(K2, Kn)` is a sphere of dimension `n - 2`.
//!
//!     cargo run --release --example hom_complex

use homcx::complex::enumerate_cells;
use homcx::{betti_gf2, Graph};

fn main() -> homcx::Result<()> {
    let cases = [
        ("K2", Graph::complete(2)?, "K2", Graph::complete(2)?),
        ("K2", Graph::complete(2)?, "K3", Graph::complete(3)?),
        ("K2", Graph::complete(2)?, "K4", Graph::complete(4)?),
        ("K1", Graph::complete(1)?, "K3", Graph::complete(3)?),
        ("P3", Graph::path(3)?, "K3", Graph::complete(3)?),
        ("C4", Graph::cycle(4)?, "K3", Graph::complete(3)?),
    ];
    println!("{:<12} {:<16} {:>5}  betti_gf2", "complex", "cells", "euler");
    for (gn, g, hn, h) in cases {
        let fp = enumerate_cells(&g, &h, None)?;
        let r = betti_gf2(&fp)?;
        println!(
            "{:<12} {:<16} {:>5}  {:?}",
            format!("Hom({gn},{hn})"),
            format!("{:?}", r.cell_counts),
            r.euler_characteristic,
            r.betti_gf2
        );
    }
    Ok(())
}
