//! Delivered throughput under the legacy node-fair MAC as offered load
//! grows: the curve rises linearly, peaks, then decays toward the
//! single fair share `1/n` because the relay — which carries every
//! flow — is throttled to the same share as any other node.
//!
//! Run with: `cargo run --example node_fair_curves`

use bsim::mac::{node_fair_throughput, CodingConfig, Region};
use bsim::traffic::symmetric_scenario;
use bsim::{ratio_to_f64, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Topology::cross(5)?;
    let routing = CodingConfig::routing(1, true);
    let coded = CodingConfig::coded(1, true);

    let mut grid: Vec<f64> = (1..=30).map(|i| i as f64 / 10.0).collect();
    grid.extend([5.0, 10.0, 50.0]);

    println!("Node-fair throughput on the 5-node cross component");
    println!("{:>7} {:>10} {:>10}  regime (nc)", "P", "routing", "nc");
    for &p in &grid {
        let scenario = symmetric_scenario(p, t.n())?;
        let r = node_fair_throughput(&scenario, &t, &routing)?;
        let c = node_fair_throughput(&scenario, &t, &coded)?;
        let regime = match c.region {
            Region::Linear => "all load delivered",
            Region::Transition => "at the boundary",
            Region::Saturated => "contention-capped",
        };
        println!(
            "{:>7.2} {:>10.4} {:>10.4}  {}",
            p,
            ratio_to_f64(r.s_total),
            ratio_to_f64(c.s_total),
            regime
        );
    }
    println!();
    println!("Both curves collapse toward 1/5 = 0.2: fairness per node, not per");
    println!("flow, starves the relay no matter how the downlink is coded.");
    Ok(())
}
