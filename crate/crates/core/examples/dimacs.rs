//! Reading and writing DIMACS edge lists.
//!
//!     cargo run --example dimacs

use homcx::Graph;

fn main() -> homcx::Result<()> {
    let petersen = Graph::kneser(5, 2)?;
    let text = petersen.to_dimacs();
    print!("{text}");
    let back = Graph::parse_dimacs(&text)?;
    assert_eq!(back, petersen);

    match Graph::parse_dimacs("p edge 3 2\ne 1 2\ne 2 2\n") {
        Ok(_) => unreachable!(),
        Err(e) => eprintln!("rejected: {e}"),
    }
    Ok(())
}
