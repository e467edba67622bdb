//! Per-tree cost of the recursive engine stays flat as n grows.
//!
//! `cargo run --release --example amortized -- 24`

use fan_pivot::cli::bench;
use fan_pivot::FanDims;

fn main() -> fan_pivot::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(22);
    println!("{:>3} {:>10} {:>10} {:>9} {:>6} {:>9}", "n", "trees", "calls", "calls/t", "depth", "ns/tree");
    for n in (10..=max).step_by(2) {
        let dims = FanDims::new(n)?;
        let r = bench(dims);
        let s = r.stats;
        println!(
            "{n:>3} {:>10} {:>10} {:>9.3} {:>6} {:>9.2}",
            s.trees,
            s.activations,
            s.activations as f64 / s.trees as f64,
            s.max_depth,
            r.nanos_per_tree()
        );
        assert!(r.bounds_hold(dims));
    }
    Ok(())
}
