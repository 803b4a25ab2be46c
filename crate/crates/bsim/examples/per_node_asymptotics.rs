//! Per-node throughput shrinks as `1/n` while total throughput
//! approaches a finite limit: `m/(m+1)` without coding, `m` with coding
//! on the cross family, `2m/(m+2)` on the X family. This example
//! tabulates `n · s_node` against those limits as components grow.
//!
//! Run with: `cargo run --example per_node_asymptotics`

use bsim::analysis::{asymptotic_limit, per_node_throughput};
use bsim::{ratio_to_f64, CodingConfig, Topology, TopologyKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes = [5usize, 21, 101, 501, 2001];
    let cases = [
        ("routing m=1", CodingConfig::routing(1, true)),
        ("nc m=2", CodingConfig::coded(2, true)),
        ("nc m=4", CodingConfig::coded(4, true)),
    ];
    for kind in [TopologyKind::Cross, TopologyKind::X] {
        for (label, cfg) in &cases {
            let limit = asymptotic_limit(kind, cfg)?;
            println!(
                "{kind}, {label} (total-throughput limit {limit} = {:.4}):",
                ratio_to_f64(limit)
            );
            println!("  {:>6} {:>14} {:>12}", "n", "s_node", "n*s_node");
            for &n in &sizes {
                let t = Topology::build(kind, n, None)?;
                let s = per_node_throughput(&t, cfg)?;
                println!(
                    "  {:>6} {:>14.8} {:>12.6}",
                    n,
                    ratio_to_f64(s),
                    n as f64 * ratio_to_f64(s)
                );
            }
            println!();
        }
    }
    Ok(())
}
