//! Write the listing as pivot moves through the CLI layer, then rebuild it.

use fan_pivot::cli::{cmd_generate, replay_delta, DirectionArg, Engine, OutputFormat};
use fan_pivot::FanDims;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dims = FanDims::new(9)?;
    let mut delta = Vec::new();
    cmd_generate(&mut delta, dims, OutputFormat::Delta, Engine::Recursive, DirectionArg::Forward, None)?;
    let mut edges = Vec::new();
    cmd_generate(&mut edges, dims, OutputFormat::Edges, Engine::Recursive, DirectionArg::Forward, None)?;

    let delta = String::from_utf8(delta)?;
    let edges = String::from_utf8(edges)?;
    println!("delta: {} bytes, edges: {} bytes", delta.len(), edges.len());
    for line in delta.lines().take(4) {
        println!("  {line}");
    }

    let rebuilt: String = replay_delta(dims, delta.lines())?
        .iter()
        .map(|t| format!("{t}\n"))
        .collect();
    assert_eq!(rebuilt, edges);
    println!("replayed {} trees, identical to edge output", edges.lines().count());
    Ok(())
}
