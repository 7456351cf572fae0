//! Enumerate free trees and count how many carry a given limb.
//!
//!     cargo run --release --example tree_census -- 14 "p 3; e 0 1; e 1 2; r 0"

use geogrow::graph::parse_graph;
use geogrow::trees::{enumerate_trees, limb_census};

fn main() -> geogrow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(12);
    let limb = parse_graph(args.get(1).map(String::as_str).unwrap_or("godsil-sigma"))?.into_rooted_tree()?;
    for k in 1..=n.min(10) {
        print!("{} ", enumerate_trees(k)?.count());
    }
    println!();
    let r = limb_census(n, &limb)?;
    println!("n = {n}: {} of {} trees carry the limb ({})", r.count, r.total, r.proportion);
    Ok(())
}
