//! Step the greedy rule by hand on F_5 and compare with the fast engine.

use fan_pivot::greedy::GreedyRun;
use fan_pivot::recursive::{list_stream, Direction};
use fan_pivot::{FanDims, SpanningTree};

fn main() -> fan_pivot::Result<()> {
    let dims = FanDims::new(5)?;
    let mut run = GreedyRun::new(SpanningTree::path(dims))?;
    println!("{:>3}  {}", 1, run.current());
    // `next_move` peeks at the smallest legal pivot that reaches an unseen tree.
    while let Some(m) = run.next_move() {
        let taken = run.step();
        assert_eq!(taken, Some(m));
        println!("{:>3}  {:<28} via {m}", run.emitted_count(), run.current().to_text());
    }
    println!("greedy stopped after {} trees", run.emitted_count());

    let fast: Vec<_> = list_stream(dims, Direction::Forward).snapshots().map(|(_, t)| t).collect();
    let slow = fan_pivot::greedy::greedy_listing(&SpanningTree::path(dims))?;
    println!("recursive engine agrees: {}", fast == slow);
    Ok(())
}
