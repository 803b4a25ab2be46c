//! Saturated session throughput of every capability bundle — plain
//! routing, network coding, multi-packet reception and their
//! combinations — on all four topology components, as exact rationals.
//!
//! Run with: `cargo run --example saturation_maxima`

use bsim::analysis::{saturated_throughput, GainCase};
use bsim::{Topology, TopologyKind, Traffic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5;
    println!("Saturated throughput at n = {n} (packets per slot, exact)");
    for kind in [
        TopologyKind::Cross,
        TopologyKind::X,
        TopologyKind::PartialCross,
        TopologyKind::PartialX,
    ] {
        let t = Topology::build(kind, n, None)?;
        println!("\n{kind}:");
        println!("  {:<12}{:>10}{:>12}", "case", "unicast", "broadcast");
        for case in GainCase::TABLE {
            let unicast = saturated_throughput(&t, &case.config(Traffic::Unicast))?;
            let broadcast = saturated_throughput(&t, &case.config(Traffic::Broadcast))?;
            println!(
                "  {:<12}{:>10}{:>12}",
                case.to_string(),
                unicast.to_string(),
                broadcast.to_string()
            );
        }
    }
    println!("\nNote how the partial cross matches the X component cell for cell,");
    println!("and how coding plus reception order 2 reaches the channel rate on X.");
    Ok(())
}
