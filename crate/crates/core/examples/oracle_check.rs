//! Compare automaton word counts against exhaustive enumeration with the
//! cancellation test.
//!
//!     cargo run --release --example oracle_check -- cycle4 7

use geogrow::graph::parse_graph;
use geogrow::growth::automaton_count_table;
use geogrow::oracle::{brute_force_counts, shortlex_reduce, DEFAULT_BUDGET};

fn main() -> geogrow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g = parse_graph(args.first().map(String::as_str).unwrap_or("cycle4"))?.graph;
    let len: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let fast = automaton_count_table(&g, 0, len)?;
    let slow = brute_force_counts(&g, len, DEFAULT_BUDGET)?;
    println!("geodesics {:?}", fast.geodesics);
    println!("elements  {:?}", fast.elements);
    println!("agree: {}", fast == slow);
    let w = [0, 1, 0, 1, 0];
    println!("shortlex form of {w:?}: {:?}", shortlex_reduce(&g, &w)?);
    Ok(())
}
