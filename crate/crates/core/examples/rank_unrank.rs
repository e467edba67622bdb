//! Rank and unrank trees without generating the listing.

use fan_pivot::rank::Ranker;
use fan_pivot::{FanDims, RankInt, SpanningTree};

fn main() -> fan_pivot::Result<()> {
    let dims = FanDims::new(5)?;
    let ranker = Ranker::new(dims);
    let t = SpanningTree::parse_text(dims, "2-3,3-4,2-inf,5-inf")?;
    println!("F_5 has {} trees; {t} has rank {}", ranker.count(), ranker.rank(&t)?);
    println!("rank 17 is {}", ranker.unrank(&RankInt::from(17u32))?);
    match ranker.unrank(&RankInt::from(22u32)) {
        Ok(t) => println!("unexpected: {t}"),
        Err(e) => println!("rank 22: {e}"),
    }

    // Large n: the count no longer fits in a machine word.
    let dims = FanDims::new(120)?;
    let ranker = Ranker::new(dims);
    let total = ranker.count();
    println!("\nF_120 has {total} spanning trees");
    for r in [RankInt::from(1u32), &total / 3u32, &total / 2u32 + 7u32, total.clone()] {
        let (tree, depth) = ranker.unrank_traced(&r)?;
        let back = ranker.rank(&tree)?;
        assert_eq!(back, r);
        println!("rank {r}: {} edges, {depth} levels, round trip ok", tree.edge_count());
    }
    let last = ranker.last_tree();
    println!("last tree of F_120 has {} spokes", last.edges().filter(|e| matches!(e, fan_pivot::Edge::Spoke(_))).count());
    Ok(())
}
