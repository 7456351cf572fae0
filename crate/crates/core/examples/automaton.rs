//! Build the geodesic automaton of a triangle-free graph and print its size,
//! a few runs, and optionally the Graphviz source.
//!
//!     cargo run --example automaton -- mckay-t1
//!     cargo run --example automaton -- "p 4; e 0 1; e 1 2; e 2 3; e 3 0" --dot

use geogrow::graph::parse_graph;
use geogrow::GeodesicAutomaton;

fn main() -> geogrow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec = args.first().map(String::as_str).unwrap_or("mckay-t1");
    let g = parse_graph(spec)?.graph;
    let a = GeodesicAutomaton::build(&g)?;
    if args.iter().any(|a| a == "--dot") {
        print!("{}", a.to_dot());
        return Ok(());
    }
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("{} states, {} transitions", a.state_count(), a.transition_count());
    // Two commuting letters can be read in either order, but not twice.
    if let Some(&(u, v)) = g.edges().first() {
        for w in [vec![u, v], vec![v, u], vec![u, v, u], vec![u, u]] {
            println!("{w:?}: {}", if a.accepts(&w) { "geodesic" } else { "not geodesic" });
        }
    }
    Ok(())
}
