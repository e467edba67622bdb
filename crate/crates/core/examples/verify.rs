//! Run every oracle check for small n.

use fan_pivot::oracle;
use fan_pivot::recursive::{list_stream, Direction};
use fan_pivot::FanDims;

fn main() -> fan_pivot::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>7} {:>5} {:>10} {:>8} {:>8} {:>5}", "n", "trees", "gray", "exhaustive", "reverse", "engines", "rank");
    for n in 2..=max {
        let dims = FanDims::new(n)?;
        let listing: Vec<_> = list_stream(dims, Direction::Forward).snapshots().map(|(_, t)| t).collect();
        let gray = oracle::check_pivot_gray(&listing);
        let exhaustive = oracle::check_exhaustive(dims, &listing)?;
        println!(
            "{n:>3} {:>7} {:>5} {:>10} {:>8} {:>8} {:>5}",
            listing.len(),
            gray.is_gray,
            exhaustive.is_exhaustive,
            oracle::check_reversal(dims)?,
            oracle::check_engines_agree(dims)?,
            oracle::check_rank_bijection(dims)?,
        );
    }
    Ok(())
}
