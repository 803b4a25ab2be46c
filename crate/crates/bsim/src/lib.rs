//! Slot-level models of relay-bottleneck wireless topology components.
//!
//! Every component modeled here is a star at heart: a set of edge nodes
//! whose flows all pass through a single relay, plus an overhearing graph
//! between the edge nodes that determines which packets the relay can
//! usefully code together on the downlink. Three capabilities interact:
//!
//! * **Multi-packet reception (MPR)** — the relay (and idle edge nodes)
//!   can receive up to `m` simultaneous transmissions per slot.
//! * **Opportunistic network coding** — the relay forwards linear
//!   combinations of packets whose destinations can each recover their
//!   missing piece from what they already hold (rank-based decoding).
//! * **MAC fairness policy** — legacy *node-fair* contention (every node
//!   gets an equal share at saturation) versus a *flow-fair* MAC that
//!   grants the relay enough airtime to forward everything it receives.
//!
//! The [`mac`] and [`analysis`] modules provide exact rational-arithmetic
//! closed forms (allocations, saturated throughput, gains, asymptotics);
//! [`slotsim`] is an integer-slot discrete simulator used to cross-check
//! them; [`topology`] and [`traffic`] build the components and load
//! scenarios; [`cli`] backs the `bsim` binary.
//!
//! Run `cargo run --example gain_table` (or any other file under
//! `examples/`) for a guided tour of each capability.

pub mod analysis;
pub mod cli;
pub mod mac;
pub mod slotsim;
pub mod topology;
pub mod traffic;

/// Exact rational type used throughout the analytic paths.
pub type Ratio = num_rational::Rational64;

pub use mac::{CodingConfig, Traffic};
pub use topology::{Topology, TopologyKind};
pub use traffic::LoadScenario;

/// Shorthand for building a [`Ratio`] from integer numerator/denominator.
pub fn ratio(numer: i64, denom: i64) -> Ratio {
    Ratio::new(numer, denom)
}

/// Nearest-`f64` view of an exact rational, for curve output and display.
pub fn ratio_to_f64(r: Ratio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
