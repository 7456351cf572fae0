//! Spherical growth of the group next to its geodesic growth.
//!
//!     cargo run --example spherical_growth -- star3

use geogrow::graph::parse_graph;
use geogrow::{geodesic_growth_series, spherical_growth_series};

fn main() -> geogrow::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "star3".into());
    let g = parse_graph(&spec)?.graph;
    let sph = spherical_growth_series(&g);
    let geo = geodesic_growth_series(&g)?;
    println!("f-polynomial {}", g.f_polynomial());
    println!("spherical    {sph}");
    println!("geodesic     {geo}");
    println!("{:?}\n{:?}", sph.taylor(8), geo.taylor(8));
    Ok(())
}
