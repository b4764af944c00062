//! Full check of the 5-chromatic graph whose 5-colorings form a connected
//! flip graph, with the classification of a few displayed colorings.
//!
//!     cargo run --example verify_counterexample

use homcx::counterexample::{classify, parse_grid, verify_paper};

fn main() -> homcx::Result<()> {
    for grid in ["132 254 413", "142 351 423", "132 514 423", "132 514 425", "135 541 423"] {
        let c = classify(&parse_grid(grid)?)?;
        println!("{grid}  ->  {}", c.class());
    }
    println!();
    let report = verify_paper();
    print!("{}", report.summary());
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    std::process::exit(if report.pass { 0 } else { 1 });
}
