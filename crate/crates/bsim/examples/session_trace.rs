//! Slot-by-slot traces of two coded sessions, showing how the relay
//! combines packets so one transmission serves several flows.
//!
//! In the cross component every edge node overhears all transmitters
//! except its own destination's partner, so a single combination over
//! all four packets lets all four destinations decode at once. In the
//! X component only same-side nodes overhear each other, so the relay
//! pairs opposite-side packets instead.
//!
//! Run with: `cargo run --example session_trace`

use bsim::slotsim::run_session;
use bsim::{CodingConfig, LoadScenario, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let one_each = |n: usize| LoadScenario::from_counts(vec![1; n]);

    let cross = Topology::cross(5)?;
    let result = run_session(&cross, &CodingConfig::coded(1, true), &one_each(5))?;
    println!("cross, nc, m = 1 — one packet per node:");
    for record in &result.trace {
        println!("  {}", record.format_line());
    }
    println!(
        "  => {} packets in {} slots: throughput {}",
        result.delivered, result.total_slots, result.throughput
    );

    let x = Topology::x(5, 2)?;
    let result = run_session(&x, &CodingConfig::coded(2, true), &one_each(5))?;
    println!();
    println!("x, nc, m = 2 — one packet per node:");
    for record in &result.trace {
        println!("  {}", record.format_line());
    }
    println!(
        "  => {} packets in {} slots: throughput {}",
        result.delivered, result.total_slots, result.throughput
    );
    Ok(())
}
