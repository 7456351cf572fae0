//! Coalesce a short path with each tree of a pair and compare the resulting
//! geodesic growth series term by term.
//!
//!     cargo run --release --example distinct_growth [S1] [S2]

use geogrow::graph::builtin_tree;
use geogrow::verify::start_with_root_counts;
use geogrow::{geodesic_growth_series, RootedTree};

fn main() -> geogrow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let s1 = builtin_tree(args.first().map(String::as_str).unwrap_or("godsil-s1-subdivided"))?;
    let s2 = builtin_tree(args.get(1).map(String::as_str).unwrap_or("godsil-s2-subdivided"))?;
    let c1 = start_with_root_counts(&s1, 8)?;
    let c2 = start_with_root_counts(&s2, 8)?;
    println!("words starting at the root, lengths 0..=8");
    println!("  {c1:?}\n  {c2:?}");

    let p2 = RootedTree::path_from_end(2);
    let a = geodesic_growth_series(p2.coalesce(&s1).graph())?.taylor(14);
    let b = geodesic_growth_series(p2.coalesce(&s2).graph())?.taylor(14);
    match (0..a.len()).find(|&k| a[k] != b[k]) {
        Some(k) => println!("first difference at t^{k}: {} vs {} (gap {})", a[k], b[k], &a[k] - &b[k]),
        None => println!("no difference in the first {} terms", a.len()),
    }
    Ok(())
}
