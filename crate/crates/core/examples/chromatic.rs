//! Exact chromatic numbers of the generator families.
//!
//!     cargo run --example chromatic

use homcx::{chromatic_number, Family};

fn main() -> homcx::Result<()> {
    let families = ["complete:5", "cycle:5", "cycle:6", "path:4", "kneser:5,2", "kneser:6,2", "counterexample_g9"];
    println!("{:<20} {:>3} {:>6} {:>7}", "graph", "chi", "clique", "dsatur");
    for name in families {
        let g = name.parse::<Family>()?.generate()?;
        let r = chromatic_number(&g)?;
        println!("{name:<20} {:>3} {:>6} {:>7}", r.chi, r.lower_bound_clique.len(), r.dsatur_bound);
    }
    Ok(())
}
