//! The listing of F_n splits into four stages by what happens at v_n.

use fan_pivot::rank::{stage_sizes, Ranker};
use fan_pivot::recursive::{list_stream, Direction};
use fan_pivot::{Edge, FanDims, RankInt};

fn main() -> fan_pivot::Result<()> {
    println!("{:>3} {:>8} {:>8} {:>8} {:>8} {:>9}", "n", "s1", "s2", "s3", "s4", "t_n");
    for n in 5..=14 {
        let s = stage_sizes(FanDims::new(n)?)?;
        println!("{n:>3} {:>8} {:>8} {:>8} {:>8} {:>9}", s.s1, s.s2, s.s3, s.s4, s.total());
    }

    let dims = FanDims::new(6)?;
    let s = stage_sizes(dims)?;
    let bounds = [s.s1.clone(), &s.s1 + &s.s2, &s.s1 + &s.s2 + &s.s3];
    println!("\nF_6 stage boundaries after ranks {}, {}, {}", bounds[0], bounds[1], bounds[2]);
    let ranker = Ranker::new(dims);
    let (n1, n_inf) = (Edge::Path(5), Edge::Spoke(6));
    for (i, (_, t)) in list_stream(dims, Direction::Forward).snapshots().enumerate() {
        let r = RankInt::from(i + 1);
        if bounds.contains(&r) || i == 0 {
            println!("rank {r:>2}: {t}  [v5v6: {}, v6inf: {}]", t.contains(n1), t.contains(n_inf));
        }
        assert_eq!(ranker.rank(&t)?, r);
    }
    Ok(())
}
