//! Characteristic polynomials of two graphs, their complements and their
//! line graphs.
//!
//!     cargo run --example cospectral -- mckay-t1 mckay-t2

use geogrow::graph::parse_graph;
use geogrow::spectral::char_poly;
use geogrow::verify::verify_cospectral;

fn main() -> geogrow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = parse_graph(args.first().map(String::as_str).unwrap_or("mckay-t1"))?.graph;
    let b = parse_graph(args.get(1).map(String::as_str).unwrap_or("mckay-t2"))?.graph;
    println!("phi(A) = {}", char_poly(&a).to_string_with("x"));
    println!("phi(B) = {}", char_poly(&b).to_string_with("x"));
    print!("{}", verify_cospectral(&a, &b, true, true).render());
    Ok(())
}
