//! Geodesic growth of the two 16-vertex McKay trees, both ways, plus the
//! series restricted to words that start, end, or start and end with vertex 0.
//!
//!     cargo run --release --example growth_series

use geogrow::graph::builtin_tree;
use geogrow::{GrowthContext, IntPolynomial, SeriesMethod};

fn main() -> geogrow::Result<()> {
    // Factors that show up in every series for this pair.
    let known = [IntPolynomial::from_i64s(&[1, 2, 0, -2, -4, -1])];
    let mut seen = Vec::new();
    for name in ["mckay-t1", "mckay-t2"] {
        let t = builtin_tree(name)?;
        let det = GrowthContext::with_method(t.graph(), SeriesMethod::Determinant)?;
        let bm = GrowthContext::with_method(t.graph(), SeriesMethod::BerlekampMassey)?;
        let gamma = det.geodesic_series()?;
        assert_eq!(gamma, bm.geodesic_series()?, "both methods give one canonical form");
        println!("{name}");
        println!("  gamma  = {}", gamma.factored(&known));
        println!("  start0 = {}", det.start0_series(0)?.factored(&known));
        println!("  end0   = {}", det.end0_series(0)?.factored(&known));
        println!("  both0  = {}", det.both0_series(0)?.factored(&known));
        println!("  terms  = {:?}", gamma.taylor(8));
        seen.push(gamma);
    }
    println!("equal: {}", seen[0] == seen[1]);
    Ok(())
}
