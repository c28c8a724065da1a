//! Reads an edge list (from a file argument, or a built-in Fano plane), then
//! prints degrees, the degree bound and the p-spectral radius.
//!
//!     cargo run --example hypergraph_bounds -- graph.txt

use hypernorm::bounds::degree_lower_bound;
use hypernorm::hypergraph::parse_edge_list;
use hypernorm::{p_spectral_radius, AscentConfig};

const FANO: &str = "# Fano plane
n=7 r=3
1 2 3
1 4 5
1 6 7
2 4 6
2 5 7
3 4 7
3 5 6
";

fn main() -> hypernorm::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => FANO.to_string(),
    };
    let g = parse_edge_list(&text)?;
    println!("n = {}, r = {}, {} edges", g.vertex_count(), g.uniformity(), g.edge_count());
    println!("degrees: {:?}", g.degrees());
    let a = g.adjacency_tensor()?;
    for p in [2.0, 3.0, 5.0] {
        let rho = p_spectral_radius(&a, &AscentConfig { nonneg_mode: true, ..AscentConfig::with_p(p) })?;
        println!("p = {p}: bound {:.12}, ρ^(p) {:.12}", degree_lower_bound(&g, p)?, rho.value);
    }
    Ok(())
}
