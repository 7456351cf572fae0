//! Run the equal-growth sweep and the distinct-growth checks, printing the
//! reports. The distinct-growth checks run on the drawn Godsil pair and on the
//! subdivided pair.
//!
//!     cargo run --release --example family_verification [TAU_MAX]

use geogrow::graph::builtin_tree;
use geogrow::verify::{verify_equal_growth, verify_distinct_growth_with};

fn main() -> geogrow::Result<()> {
    let tau_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    print!("{}", verify_equal_growth(tau_max)?.render());
    for (a, b) in [("godsil-s1", "godsil-s2"), ("godsil-s1-subdivided", "godsil-s2-subdivided")] {
        println!("\n{a} / {b}");
        print!("{}", verify_distinct_growth_with(&builtin_tree(a)?, &builtin_tree(b)?)?.render());
    }
    Ok(())
}
