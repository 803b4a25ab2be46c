//! Closed-form summaries: gain tables against the legacy baseline,
//! large-system throughput limits, per-node shares and completion-delay
//! comparisons.

use crate::mac::{
    check_m, flow_fair_allocation, saturation_rate, CodingConfig, MacError, Traffic,
};
use crate::slotsim::{completion_delay, SimError};
use crate::topology::{Topology, TopologyError, TopologyKind};
use crate::{ratio, Ratio};
use thiserror::Error;

/// Errors from building topologies or evaluating models for a summary.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// Invalid topology shape.
    #[error(transparent)]
    Topology(#[from] TopologyError),
    /// Invalid scheduling configuration.
    #[error(transparent)]
    Mac(#[from] MacError),
    /// Simulation failure while measuring delays.
    #[error(transparent)]
    Sim(#[from] SimError),
}

/// Saturated network throughput of a configuration: packets delivered
/// per slot when every node always has traffic. Exact rational.
pub fn saturated_throughput(t: &Topology, cfg: &CodingConfig) -> Result<Ratio, MacError> {
    saturation_rate(t, cfg)
}

/// The capability bundles compared in the gain table, all scheduled
/// with reception-aware carrier sensing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GainCase {
    /// Store-and-forward relaying, single-packet reception.
    Routing,
    /// Network coding alone.
    Nc,
    /// Multi-packet reception alone, at the given order.
    Mpr(u32),
    /// Network coding combined with multi-packet reception.
    NcMpr(u32),
}

impl GainCase {
    /// The six rows of the gain table, in presentation order.
    pub const TABLE: [GainCase; 6] = [
        GainCase::Routing,
        GainCase::Nc,
        GainCase::Mpr(2),
        GainCase::Mpr(4),
        GainCase::NcMpr(2),
        GainCase::NcMpr(4),
    ];

    /// The scheduling configuration this case stands for.
    pub fn config(&self, traffic: Traffic) -> CodingConfig {
        match *self {
            GainCase::Routing => CodingConfig::routing(1, true),
            GainCase::Nc => CodingConfig::coded(1, true),
            GainCase::Mpr(m) => CodingConfig::routing(m, true),
            GainCase::NcMpr(m) => CodingConfig::coded(m, true),
        }
        .with_traffic(traffic)
    }
}

impl std::fmt::Display for GainCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GainCase::Routing => write!(f, "routing"),
            GainCase::Nc => write!(f, "nc"),
            GainCase::Mpr(m) => write!(f, "mpr({m})"),
            GainCase::NcMpr(m) => write!(f, "nc+mpr({m})"),
        }
    }
}

/// One cell of the gain table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainEntry {
    /// Capability bundle.
    pub case: GainCase,
    /// Component family this row was evaluated on.
    pub kind: TopologyKind,
    /// Traffic pattern.
    pub traffic: Traffic,
    /// Saturated throughput of the case.
    pub throughput: Ratio,
    /// Throughput relative to the legacy baseline of one fair share,
    /// `1/n` (a node-fair medium saturated by routing).
    pub gain: Ratio,
    /// `gain` rounded half-up to one decimal, as usually quoted.
    pub gain_rounded: Ratio,
}

/// Rounds to one decimal place, half away from zero — the convention
/// under which a gain of 6.25 is quoted as 6.3.
pub fn round_half_up_tenths(r: Ratio) -> Ratio {
    let ten = Ratio::from_integer(10);
    ((r * ten + ratio(1, 2)).floor()) / ten
}

/// Saturated-throughput gains over the one-fair-share baseline for the
/// cross and X components, both traffic patterns, all six capability
/// bundles.
pub fn gain_table(n: usize) -> Result<Vec<GainEntry>, AnalysisError> {
    let baseline = ratio(1, n as i64);
    let mut rows = Vec::new();
    for kind in [TopologyKind::Cross, TopologyKind::X] {
        let t = Topology::build(kind, n, None)?;
        for traffic in [Traffic::Unicast, Traffic::Broadcast] {
            for case in GainCase::TABLE {
                let throughput = saturation_rate(&t, &case.config(traffic))?;
                let gain = throughput / baseline;
                rows.push(GainEntry {
                    case,
                    kind,
                    traffic,
                    throughput,
                    gain,
                    gain_rounded: round_half_up_tenths(gain),
                });
            }
        }
    }
    Ok(rows)
}

/// Saturated-throughput limit as the component grows without bound,
/// with integer slot counts relaxed and X sides balanced: `m/(m+1)`
/// without coding on either family, `m` with coding on the cross
/// family, and `2m/(m+2)` with coding on the X family.
pub fn asymptotic_limit(kind: TopologyKind, cfg: &CodingConfig) -> Result<Ratio, MacError> {
    check_m(cfg.m)?;
    let m = i64::from(cfg.m);
    Ok(if !cfg.nc {
        ratio(m, m + 1)
    } else if kind.is_cross_family() {
        Ratio::from_integer(m)
    } else {
        ratio(2 * m, m + 2)
    })
}

/// The channel-time share one edge node receives under the flow-fair
/// allocation — the per-node throughput at saturation. Scales as `1/n`.
pub fn per_node_throughput(t: &Topology, cfg: &CodingConfig) -> Result<Ratio, MacError> {
    Ok(flow_fair_allocation(t, cfg)?[0].s_edge)
}

/// Completion delay of one configuration against the store-and-forward
/// baseline at one component size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelayPoint {
    /// Component size.
    pub n: usize,
    /// Slots for the baseline (routing, single-packet reception) to
    /// deliver one packet from every node.
    pub baseline_slots: u64,
    /// Slots for the configuration under study to do the same.
    pub case_slots: u64,
    /// Delay gain `baseline_slots / case_slots`.
    pub gain: Ratio,
}

/// Simulated completion-delay gains of `cfg` over the routing baseline
/// across component sizes.
pub fn delay_gain_curve(
    kind: TopologyKind,
    cfg: &CodingConfig,
    sizes: &[usize],
) -> Result<Vec<DelayPoint>, AnalysisError> {
    let baseline_cfg = CodingConfig::routing(1, true);
    let mut points = Vec::new();
    for &n in sizes {
        let t = Topology::build(kind, n, None)?;
        let baseline_slots = completion_delay(&t, &baseline_cfg)?;
        let case_slots = completion_delay(&t, cfg)?;
        points.push(DelayPoint {
            n,
            baseline_slots,
            case_slots,
            gain: Ratio::new(baseline_slots as i64, case_slots as i64),
        });
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rounded_gains(rows: &[GainEntry], kind: TopologyKind, traffic: Traffic) -> Vec<Ratio> {
        GainCase::TABLE
            .iter()
            .map(|case| {
                rows.iter()
                    .find(|r| r.case == *case && r.kind == kind && r.traffic == traffic)
                    .unwrap()
                    .gain_rounded
            })
            .collect()
    }

    fn tenths(values: &[(i64, i64)]) -> Vec<Ratio> {
        values.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn half_up_rounding_to_tenths() {
        assert_eq!(round_half_up_tenths(ratio(25, 4)), ratio(63, 10));
        assert_eq!(round_half_up_tenths(ratio(25, 9)), ratio(14, 5));
        assert_eq!(round_half_up_tenths(ratio(1, 10)), ratio(1, 10));
        assert_eq!(round_half_up_tenths(ratio(25, 7)), ratio(18, 5));
    }

    #[test]
    fn five_node_gain_table_matches_published_decimals() {
        let rows = gain_table(5).unwrap();
        let expect_cross = tenths(&[(14, 5), (21, 5), (18, 5), (21, 5), (63, 10), (63, 10)]);
        assert_eq!(
            rounded_gains(&rows, TopologyKind::Cross, Traffic::Unicast),
            expect_cross
        );
        assert_eq!(
            rounded_gains(&rows, TopologyKind::Cross, Traffic::Broadcast),
            expect_cross
        );
        assert_eq!(
            rounded_gains(&rows, TopologyKind::X, Traffic::Unicast),
            tenths(&[(14, 5), (18, 5), (18, 5), (21, 5), (5, 1), (63, 10)])
        );
        assert_eq!(
            rounded_gains(&rows, TopologyKind::X, Traffic::Broadcast),
            tenths(&[(14, 5), (18, 5), (18, 5), (21, 5), (5, 1), (5, 1)])
        );
    }

    #[test]
    fn limits_cover_all_families() {
        let u = Traffic::Unicast;
        let cases = [
            (TopologyKind::Cross, CodingConfig::routing(1, true), ratio(1, 2)),
            (TopologyKind::Cross, CodingConfig::routing(2, true), ratio(2, 3)),
            (TopologyKind::X, CodingConfig::routing(4, true), ratio(4, 5)),
            (TopologyKind::Cross, CodingConfig::coded(2, true), ratio(2, 1)),
            (TopologyKind::Cross, CodingConfig::coded(4, true), ratio(4, 1)),
            (TopologyKind::X, CodingConfig::coded(1, true), ratio(2, 3)),
            (TopologyKind::X, CodingConfig::coded(2, true), ratio(1, 1)),
            (TopologyKind::X, CodingConfig::coded(4, true), ratio(4, 3)),
        ];
        for (kind, cfg, want) in cases {
            assert_eq!(asymptotic_limit(kind, &cfg.with_traffic(u)).unwrap(), want);
        }
        assert!(asymptotic_limit(TopologyKind::Cross, &CodingConfig::coded(3, true)).is_err());
    }

    #[test]
    fn saturation_approaches_limit_at_moderate_size() {
        let t = Topology::cross(101).unwrap();
        let cfg = CodingConfig::coded(2, true);
        let s = saturated_throughput(&t, &cfg).unwrap();
        assert_eq!(s, ratio(101, 52), "50 uplink + 1 coded + 1 own");
        let gap = asymptotic_limit(TopologyKind::Cross, &cfg).unwrap() - s;
        assert_eq!(gap, ratio(3, 52));
        assert!(gap < ratio(1, 10));
    }

    #[test]
    fn per_node_share_known_points() {
        let x5 = Topology::x(5, 2).unwrap();
        assert_eq!(
            per_node_throughput(&x5, &CodingConfig::coded(1, true)).unwrap(),
            ratio(1, 7)
        );
        let cross5 = Topology::cross(5).unwrap();
        assert_eq!(
            per_node_throughput(&cross5, &CodingConfig::routing(1, true)).unwrap(),
            ratio(1, 9)
        );
    }

    #[test]
    fn delay_gains_on_x_match_closed_form() {
        let points = delay_gain_curve(
            TopologyKind::X,
            &CodingConfig::coded(2, true),
            &[5, 9, 201],
        )
        .unwrap();
        assert_eq!(points[0].baseline_slots, 9);
        assert_eq!(points[0].case_slots, 5);
        assert_eq!(points[2].baseline_slots, 401);
        assert_eq!(points[2].case_slots, 201);
        assert_eq!(points[2].gain, ratio(401, 201));
    }
}
