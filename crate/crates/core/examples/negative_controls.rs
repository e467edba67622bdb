//! The greedy rule is not exhaustive from every start.

use fan_pivot::greedy::greedy_listing;
use fan_pivot::oracle::check_exhaustive;
use fan_pivot::rank::count;
use fan_pivot::{FanDims, SpanningTree};

fn main() -> fan_pivot::Result<()> {
    println!("{:>3} {:>6} {:>8} {:>9} {:>6}", "n", "t_n", "path", "reversed", "star");
    for n in 2..=10 {
        let dims = FanDims::new(n)?;
        let lengths = [SpanningTree::path(dims), SpanningTree::reversed_path(dims), SpanningTree::star(dims)]
            .map(|start| {
                let l = greedy_listing(&start).unwrap();
                let full = check_exhaustive(dims, &l).unwrap().is_exhaustive;
                format!("{}{}", l.len(), if full { "" } else { "*" })
            });
        println!("{n:>3} {:>6} {:>8} {:>9} {:>6}", count(dims), lengths[0], lengths[1], lengths[2]);
    }
    println!("* = stopped before listing every tree");
    Ok(())
}
