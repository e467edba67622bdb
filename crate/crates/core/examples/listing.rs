//! Print the listing of F_n in each output format.
//!
//! `cargo run --example listing -- 5`

use fan_pivot::recursive::{list_stream, Direction};
use fan_pivot::FanDims;

fn main() -> fan_pivot::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let dims = FanDims::new(n)?;

    println!("F_{n}: {} edges, trees have {} edges", dims.edge_count(), dims.tree_size());
    println!("edge order: {:?}", dims.edge_universe().iter().map(|e| e.to_string()).collect::<Vec<_>>());
    println!();

    let mut stream = list_stream(dims, Direction::Forward);
    let mut i = 0;
    while let Some(mv) = stream.next() {
        i += 1;
        let t = stream.tree();
        let delta = mv.map(|m| m.to_string()).unwrap_or_default();
        println!("{i:>4}  {}  {:<40} {delta}", t.to_bits(), t.to_text());
    }
    Ok(())
}
