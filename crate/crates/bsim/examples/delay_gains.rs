//! Completion-delay gains of coded schedules over plain routing on the
//! X component, measured by full slot simulation at growing sizes. The
//! gain of coding with reception order 2 approaches 2, and with order
//! 4 approaches 8/3.
//!
//! Run with: `cargo run --example delay_gains`

use bsim::analysis::delay_gain_curve;
use bsim::{ratio_to_f64, CodingConfig, TopologyKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes = [5, 11, 25, 51, 101, 201, 401];
    let cases = [
        (CodingConfig::coded(2, true), "nc+mpr(2)", "2"),
        (CodingConfig::coded(4, true), "nc+mpr(4)", "8/3"),
    ];
    for (cfg, label, limit) in cases {
        println!("{label} vs routing on the X component (limit {limit}):");
        println!(
            "  {:>5} {:>16} {:>12} {:>10}",
            "n", "routing slots", "case slots", "gain"
        );
        for point in delay_gain_curve(TopologyKind::X, &cfg, &sizes)? {
            println!(
                "  {:>5} {:>16} {:>12} {:>10.4}",
                point.n,
                point.baseline_slots,
                point.case_slots,
                ratio_to_f64(point.gain)
            );
        }
        println!();
    }
    Ok(())
}
