//! Schedules, channel-time allocations and throughput models.
//!
//! One full *session* moves one packet from every node: an uplink phase
//! in which edge nodes transmit (up to `m` at a time, thanks to
//! multi-packet reception), a downlink phase in which the relay forwards
//! — coded or not — and one slot for the relay's own packet. Everything
//! here is exact rational arithmetic.
//!
//! Two MAC fairness policies are modeled on top of the session schedule:
//!
//! * **flow-fair** ([`flow_fair_throughput`]) grants the relay airtime
//!   proportional to the flows it carries, so delivered throughput rises
//!   linearly with offered load and then holds at the saturated rate;
//! * **node-fair** ([`node_fair_throughput`]) caps every node at an equal
//!   share once the medium saturates, which starves the relay and drags
//!   total throughput down to one fair share as load grows.

use crate::topology::{chunk_groups, Topology};
use crate::traffic::LoadScenario;
use crate::Ratio;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Errors from the analytic MAC paths.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MacError {
    /// The validated analytic paths cover reception orders 1, 2 and 4.
    #[error("multi-packet reception order {m} is not supported (use 1, 2 or 4)")]
    UnsupportedMpr { m: u32 },
}

/// Whether each source packet has one destination or all edge nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Traffic {
    /// Each packet is wanted by exactly one edge node.
    Unicast,
    /// Every edge node wants every packet.
    Broadcast,
}

impl std::fmt::Display for Traffic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Traffic::Unicast => "unicast",
            Traffic::Broadcast => "broadcast",
        })
    }
}

impl std::str::FromStr for Traffic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unicast" => Ok(Traffic::Unicast),
            "broadcast" => Ok(Traffic::Broadcast),
            other => Err(format!("unknown traffic type `{other}`")),
        }
    }
}

/// The capability switches of one study configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodingConfig {
    /// Multi-packet reception order: simultaneous packets per receiver.
    pub m: u32,
    /// Reception-aware carrier sensing: hidden pairs transmit together.
    pub csma: bool,
    /// Relay codes packets across flows on the downlink.
    pub nc: bool,
    /// Traffic pattern served by the session.
    pub traffic: Traffic,
}

impl CodingConfig {
    /// Plain store-and-forward relaying (no coding), unicast.
    pub fn routing(m: u32, csma: bool) -> Self {
        CodingConfig {
            m,
            csma,
            nc: false,
            traffic: Traffic::Unicast,
        }
    }

    /// Network-coded relaying, unicast.
    pub fn coded(m: u32, csma: bool) -> Self {
        CodingConfig {
            m,
            csma,
            nc: true,
            traffic: Traffic::Unicast,
        }
    }

    /// Same configuration with a different traffic pattern.
    pub fn with_traffic(self, traffic: Traffic) -> Self {
        CodingConfig { traffic, ..self }
    }
}

pub(crate) fn check_m(m: u32) -> Result<(), MacError> {
    if matches!(m, 1 | 2 | 4) {
        Ok(())
    } else {
        Err(MacError::UnsupportedMpr { m })
    }
}

/// Degrees of freedom an edge node still misses after a full uplink
/// phase, in the worst case: 1 for `m = 1`; 1 for `m = 2` with paired
/// carrier sensing but 2 without (simultaneous transmitters cannot
/// overhear each other); 3 for `m = 4`.
pub fn dof_deficit(m: u32, csma: bool) -> Result<u32, MacError> {
    check_m(m)?;
    Ok(match (m, csma) {
        (1, _) => 1,
        (2, true) => 1,
        (2, false) => 2,
        (m, _) => m - 1,
    })
}

/// The session schedule selected for a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchedulePlan {
    /// Simultaneous transmitters actually scheduled per uplink slot
    /// (may be below `m` when that shortens the session).
    pub simultaneity: u32,
    /// Whether uplink groups are hidden pairs (carrier-sense schedule)
    /// or plain ascending chunks.
    pub paired: bool,
    /// Uplink slots per session.
    pub uplink_slots: u32,
    /// Downlink slots per session: coded or uncoded forwards, plus the
    /// relay's own-packet slot.
    pub downlink_slots: u32,
}

impl SchedulePlan {
    /// Slots for one complete session (one packet per node).
    pub fn total_slots(&self) -> u32 {
        self.uplink_slots + self.downlink_slots
    }
}

/// Picks the session schedule for a configuration: the full-`m` uplink,
/// or — for coded carrier-sense schedules at `m = 4` — the pair-limited
/// uplink when that strictly shortens the session.
pub fn session_plan(t: &Topology, cfg: &CodingConfig) -> Result<SchedulePlan, MacError> {
    check_m(cfg.m)?;
    let mut best = plan_with(t, cfg, cfg.m, cfg.csma);
    if cfg.nc && cfg.csma && cfg.m == 4 {
        let paired = plan_with(t, cfg, 2, true);
        if paired.total_slots() < best.total_slots() {
            best = paired;
        }
    }
    Ok(best)
}

fn plan_with(t: &Topology, cfg: &CodingConfig, mu: u32, paired: bool) -> SchedulePlan {
    let groups = if paired {
        t.csma_groups(mu)
    } else {
        let edges: Vec<usize> = t.edge_nodes().collect();
        chunk_groups(&edges, mu)
    };
    let downlink = if cfg.nc {
        coded_slot_count(t, &groups, cfg.traffic) + 1
    } else {
        t.n() as u32
    };
    SchedulePlan {
        simultaneity: mu,
        paired,
        uplink_slots: groups.len() as u32,
        downlink_slots: downlink,
    }
}

/// What each edge node holds right after a full uplink phase — its own
/// packet plus everything it overheard from other transmit groups — as
/// a membership matrix indexed `[node][origin]`.
fn post_uplink_holdings(t: &Topology, groups: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let e = t.edge_count();
    let mut group_index = vec![usize::MAX; e];
    for (gi, g) in groups.iter().enumerate() {
        for &v in g {
            group_index[v] = gi;
        }
    }
    t.edge_nodes()
        .map(|u| {
            let mut hold = vec![false; e];
            hold[u] = true;
            for v in t.edge_nodes() {
                if t.overhear(u, v) && group_index[v] != group_index[u] {
                    hold[v] = true;
                }
            }
            hold
        })
        .collect()
}

fn coded_slot_count(t: &Topology, groups: &[Vec<usize>], traffic: Traffic) -> u32 {
    let holdings = post_uplink_holdings(t, groups);
    match traffic {
        Traffic::Unicast => unicast_coded_slots(t, &holdings),
        Traffic::Broadcast => broadcast_coded_slots(&holdings),
    }
}

/// Minimum generic combinations so every edge node can recover every
/// edge packet: the largest post-uplink deficit, since each full-support
/// combination hands every listener one degree of freedom.
fn broadcast_coded_slots(holdings: &[Vec<bool>]) -> u32 {
    holdings
        .iter()
        .map(|h| h.iter().filter(|&&held| !held).count() as u32)
        .max()
        .unwrap_or(0)
}

/// Greedy instantly-decodable packing for unicast: each slot combines
/// packets whose destinations each know all other packets in the slot,
/// so one transmission serves them all at once.
fn unicast_coded_slots(t: &Topology, holdings: &[Vec<bool>]) -> u32 {
    let mut pending: Vec<(usize, usize)> = t
        .edge_nodes()
        .map(|j| (j, t.dest(j)))
        .filter(|&(p, r)| !holdings[r][p])
        .collect();
    let mut slots = 0;
    while !pending.is_empty() {
        let chosen: BTreeSet<(usize, usize)> =
            pack_decodable_slot(&pending, |node, pkt| holdings[node][pkt])
                .into_iter()
                .collect();
        pending.retain(|pair| !chosen.contains(pair));
        slots += 1;
    }
    slots
}

/// Selects a maximal ascending-order set of (packet, receiver) pairs
/// that stay simultaneously decodable when coded into one slot: each
/// receiver must know every other packet in the slot. `knows(node, pkt)`
/// reports current holdings; pairs whose receiver already knows its
/// packet must be filtered out beforehand.
pub(crate) fn pack_decodable_slot(
    pending: &[(usize, usize)],
    knows: impl Fn(usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    let mut support: Vec<usize> = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for &(p, r) in pending {
        if chosen.iter().any(|&(_, r2)| r2 == r) {
            continue;
        }
        let existing_still_decode = chosen.iter().all(|&(_, r2)| knows(r2, p));
        let newcomer_decodes = support.iter().all(|&x| knows(r, x));
        if existing_still_decode && newcomer_decodes {
            support.push(p);
            chosen.push((p, r));
        }
    }
    chosen
}

/// Downlink slots per session: session size `N` without coding, or the
/// coded transmissions plus the relay's own slot with it.
pub fn nc_downlink_slots(t: &Topology, cfg: &CodingConfig) -> Result<u32, MacError> {
    Ok(session_plan(t, cfg)?.downlink_slots)
}

/// Average native packets served per relay transmission: edge flows
/// divided by coded downlink transmissions (1 without coding).
pub fn coding_coefficient(t: &Topology, cfg: &CodingConfig) -> Result<Ratio, MacError> {
    if !cfg.nc {
        check_m(cfg.m)?;
        return Ok(Ratio::one());
    }
    let coded = session_plan(t, cfg)?.downlink_slots - 1;
    Ok(Ratio::new(t.edge_count() as i64, coded as i64))
}

/// Offered relay forwarding load: the sum of edge loads compressed by
/// the coding coefficient `c`.
pub fn relay_load(scenario: &LoadScenario, c: Ratio) -> Ratio {
    let edge_sum: Ratio = scenario.rho[..scenario.n() - 1].iter().sum();
    edge_sum / c
}

/// Saturated session throughput: `n` packets over the session's slots.
pub fn saturation_rate(t: &Topology, cfg: &CodingConfig) -> Result<Ratio, MacError> {
    let plan = session_plan(t, cfg)?;
    Ok(Ratio::new(t.n() as i64, plan.total_slots() as i64))
}

/// Which bound (or point value) an [`Allocation`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AllocationVariant {
    /// Unicast point allocation.
    Unicast,
    /// Broadcast point allocation (schedule fully pinned).
    Broadcast,
    /// Broadcast lower-throughput bound (order-unaware schedule).
    BroadcastLower,
    /// Broadcast upper-throughput bound (best transmission order).
    BroadcastUpper,
}

/// Flow-fair slot fractions for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Allocation {
    /// Slot fraction of each edge node.
    pub s_edge: Ratio,
    /// Slot fraction of the relay.
    pub s_relay: Ratio,
    /// Effective uplink simultaneity of the schedule, edge nodes per
    /// uplink slot; `sum(s_edge)/m_sched + s_relay = 1` exactly.
    pub m_sched: Ratio,
    /// Which point or bound this allocation is.
    pub variant: AllocationVariant,
}

fn build_allocation(e: usize, uplink: u32, downlink: u32, variant: AllocationVariant) -> Allocation {
    let denom = (uplink + downlink) as i64;
    Allocation {
        s_edge: Ratio::new(1, denom),
        s_relay: Ratio::new(downlink as i64, denom),
        m_sched: Ratio::new(e as i64, uplink as i64),
        variant,
    }
}

/// Flow-fair channel-time split: every flow (edge or relay-carried)
/// gets the same share, so the relay's fraction scales with its
/// downlink slot count. For coded broadcast without carrier sensing on
/// two-sided components the downlink count depends on transmission
/// order, so both bounds are returned; every other case is one point.
pub fn flow_fair_allocation(
    t: &Topology,
    cfg: &CodingConfig,
) -> Result<Vec<Allocation>, MacError> {
    let plan = session_plan(t, cfg)?;
    let e = t.edge_count();
    match cfg.traffic {
        Traffic::Unicast => Ok(vec![build_allocation(
            e,
            plan.uplink_slots,
            plan.downlink_slots,
            AllocationVariant::Unicast,
        )]),
        Traffic::Broadcast => {
            if cfg.nc && !cfg.csma && !t.kind().is_cross_family() {
                // Downlink counts include the relay's own slot: at worst
                // `m` coded slots beyond the bigger side's size minus one,
                // at best just one beyond it.
                let bigger = t.x1_size().max(e - t.x1_size()) as u32;
                Ok(vec![
                    build_allocation(
                        e,
                        plan.uplink_slots,
                        bigger + cfg.m,
                        AllocationVariant::BroadcastLower,
                    ),
                    build_allocation(
                        e,
                        plan.uplink_slots,
                        bigger + 1,
                        AllocationVariant::BroadcastUpper,
                    ),
                ])
            } else {
                Ok(vec![build_allocation(
                    e,
                    plan.uplink_slots,
                    plan.downlink_slots,
                    AllocationVariant::Broadcast,
                )])
            }
        }
    }
}

/// Operating regime of a throughput evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// All offered load is delivered (`S = P`).
    Linear,
    /// On the knife edge between the linear and saturated regimes.
    Transition,
    /// Demand exceeds what the schedule can carry.
    Saturated,
}

/// One evaluated point of a throughput model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThroughputPoint {
    /// Delivered network throughput in packets per slot.
    pub s_total: Ratio,
    /// Offered relay forwarding load for this configuration.
    pub rho_relay: Ratio,
    /// Total component load: offered load plus relay forwarding.
    pub p_t: Ratio,
    /// Regime the point falls in.
    pub region: Region,
}

/// Flow-fair delivered throughput: offered load served in full until
/// the saturated session rate, then held there.
pub fn flow_fair_throughput(
    scenario: &LoadScenario,
    t: &Topology,
    cfg: &CodingConfig,
) -> Result<ThroughputPoint, MacError> {
    assert_eq!(scenario.n(), t.n(), "scenario and topology node counts differ");
    let s_sat = saturation_rate(t, cfg)?;
    let c = coding_coefficient(t, cfg)?;
    let p = scenario.total_load();
    let rho_relay = relay_load(scenario, c);
    Ok(ThroughputPoint {
        s_total: p.min(s_sat),
        rho_relay,
        p_t: p + rho_relay,
        region: if p < s_sat {
            Region::Linear
        } else {
            Region::Saturated
        },
    })
}

/// Node-fair (legacy contention) delivered throughput.
///
/// While the component is feasible — uplink, relay forwarding and the
/// relay's own load together fit in the channel — everything offered is
/// delivered. Once contention saturates the medium, every node is capped
/// at the equal share `1/n`, synchronized reception pairing collapses
/// (effective reception order 1), and the relay's leftover airtime is
/// split between its own queue and forwarding in proportion to demand,
/// weighted further against whichever queue is overloaded. Throughput
/// then decays toward the single fair share `1/n`.
pub fn node_fair_throughput(
    scenario: &LoadScenario,
    t: &Topology,
    cfg: &CodingConfig,
) -> Result<ThroughputPoint, MacError> {
    assert_eq!(scenario.n(), t.n(), "scenario and topology node counts differ");
    let plan = session_plan(t, cfg)?;
    let c1 = coding_coefficient(t, cfg)?;
    let e = t.edge_count();
    let edge_sum: Ratio = scenario.rho[..e].iter().sum();
    let rho_own = scenario.rho[e];
    let rho_relay = relay_load(scenario, c1);
    let m_sched = Ratio::new(e as i64, plan.uplink_slots as i64);

    let utilization = edge_sum / m_sched + rho_own + rho_relay;
    let p = edge_sum + rho_own;
    if utilization <= Ratio::one() {
        return Ok(ThroughputPoint {
            s_total: p,
            rho_relay,
            p_t: p + rho_relay,
            region: Region::Linear,
        });
    }

    // Saturated contention: equal shares, reception order collapses to 1
    // and with it the coding coefficient of the unpaired schedule.
    let c2 = coding_coefficient(t, &CodingConfig { m: 1, ..*cfg })?;
    let cap = Ratio::new(1, t.n() as i64);
    let granted: Ratio = scenario.rho[..e].iter().map(|&r| r.min(cap)).sum();
    let s_relay = Ratio::one() - granted;

    let d_own = rho_own;
    let d_fwd = granted / c2;
    let overload = |d: Ratio| d * (d / s_relay).max(Ratio::one());
    let (w_own, w_fwd) = (overload(d_own), overload(d_fwd));
    let weight_sum = w_own + w_fwd;
    let s_total = if weight_sum.is_zero() {
        Ratio::zero()
    } else {
        let own_time = s_relay * w_own / weight_sum;
        let own_delivered = d_own.min(own_time);
        let forwarded = granted.min(c2 * (s_relay - own_time));
        own_delivered + forwarded
    };
    Ok(ThroughputPoint {
        s_total,
        rho_relay,
        p_t: p + rho_relay,
        region: Region::Saturated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use crate::traffic::symmetric_scenario;
    use num_traits::Signed;

    fn cross5() -> Topology {
        Topology::cross(5).unwrap()
    }

    fn x5() -> Topology {
        Topology::x(5, 2).unwrap()
    }

    #[test]
    fn deficit_table() {
        assert_eq!(dof_deficit(1, true).unwrap(), 1);
        assert_eq!(dof_deficit(1, false).unwrap(), 1);
        assert_eq!(dof_deficit(2, true).unwrap(), 1);
        assert_eq!(dof_deficit(2, false).unwrap(), 2);
        assert_eq!(dof_deficit(4, true).unwrap(), 3);
        assert_eq!(dof_deficit(4, false).unwrap(), 3);
        assert_eq!(dof_deficit(3, true).unwrap_err(), MacError::UnsupportedMpr { m: 3 });
    }

    #[test]
    fn cross_saturation_matrix() {
        let t = cross5();
        let s = |cfg: CodingConfig| saturation_rate(&t, &cfg).unwrap();
        assert_eq!(s(CodingConfig::routing(1, true)), ratio(5, 9));
        assert_eq!(s(CodingConfig::routing(2, true)), ratio(5, 7));
        assert_eq!(s(CodingConfig::routing(4, true)), ratio(5, 6));
        assert_eq!(s(CodingConfig::coded(1, true)), ratio(5, 6));
        assert_eq!(s(CodingConfig::coded(2, true)), ratio(5, 4));
        assert_eq!(s(CodingConfig::coded(4, true)), ratio(5, 4));
        let bcast = |m| CodingConfig::coded(m, true).with_traffic(Traffic::Broadcast);
        assert_eq!(s(bcast(1)), ratio(5, 6));
        assert_eq!(s(bcast(2)), ratio(5, 4));
        assert_eq!(s(bcast(4)), ratio(5, 4), "pair-limited uplink wins for broadcast");
    }

    #[test]
    fn x_saturation_matrix() {
        let t = x5();
        let s = |cfg: CodingConfig| saturation_rate(&t, &cfg).unwrap();
        assert_eq!(s(CodingConfig::routing(1, true)), ratio(5, 9));
        assert_eq!(s(CodingConfig::routing(2, true)), ratio(5, 7));
        assert_eq!(s(CodingConfig::routing(4, true)), ratio(5, 6));
        assert_eq!(s(CodingConfig::coded(1, true)), ratio(5, 7));
        assert_eq!(s(CodingConfig::coded(2, true)), ratio(1, 1));
        assert_eq!(s(CodingConfig::coded(4, true)), ratio(5, 4));
        let bcast = |m| CodingConfig::coded(m, true).with_traffic(Traffic::Broadcast);
        assert_eq!(s(bcast(1)), ratio(5, 7));
        assert_eq!(s(bcast(2)), ratio(1, 1));
        assert_eq!(s(bcast(4)), ratio(1, 1), "full reception order wins for broadcast");
    }

    #[test]
    fn coding_coefficients_match_known_cases() {
        let cross = cross5();
        let x = x5();
        let c = |t: &Topology, cfg: CodingConfig| coding_coefficient(t, &cfg).unwrap();
        assert_eq!(c(&cross, CodingConfig::coded(1, true)), ratio(4, 1));
        assert_eq!(c(&cross, CodingConfig::coded(2, true)), ratio(4, 1));
        assert_eq!(c(&cross, CodingConfig::coded(2, false)), ratio(2, 1));
        assert_eq!(c(&cross, CodingConfig::coded(4, true)), ratio(2, 1));
        assert_eq!(c(&x, CodingConfig::coded(1, true)), ratio(2, 1));
        assert_eq!(c(&x, CodingConfig::coded(2, true)), ratio(2, 1));
        assert_eq!(c(&x, CodingConfig::coded(4, true)), ratio(2, 1));
        assert_eq!(
            c(&x, CodingConfig::coded(4, true).with_traffic(Traffic::Broadcast)),
            ratio(4, 3)
        );
        assert_eq!(c(&cross, CodingConfig::routing(2, true)), ratio(1, 1));
    }

    #[test]
    fn allocations_satisfy_channel_constraint() {
        let t = cross5();
        let alloc = flow_fair_allocation(&t, &CodingConfig::coded(1, true)).unwrap();
        assert_eq!(alloc.len(), 1);
        assert_eq!(alloc[0].s_edge, ratio(1, 6));
        assert_eq!(alloc[0].s_relay, ratio(1, 3));

        let x = x5();
        let routing = flow_fair_allocation(&x, &CodingConfig::routing(2, true)).unwrap();
        assert_eq!(routing[0].s_edge, ratio(1, 7));
        assert_eq!(routing[0].s_relay, ratio(5, 7));

        for a in alloc.iter().chain(routing.iter()) {
            let lhs = Ratio::from_integer(4) * a.s_edge / a.m_sched + a.s_relay;
            assert_eq!(lhs, Ratio::one());
        }
    }

    #[test]
    fn broadcast_without_pairing_reports_bounds() {
        let x = x5();
        let cfg = CodingConfig::coded(2, false).with_traffic(Traffic::Broadcast);
        let alloc = flow_fair_allocation(&x, &cfg).unwrap();
        assert_eq!(alloc.len(), 2);
        assert_eq!(alloc[0].variant, AllocationVariant::BroadcastLower);
        assert_eq!(alloc[0].s_edge, ratio(1, 6));
        assert_eq!(alloc[1].variant, AllocationVariant::BroadcastUpper);
        assert_eq!(alloc[1].s_edge, ratio(1, 5));
    }

    #[test]
    fn flow_fair_clamps_at_saturation() {
        let t = cross5();
        let cfg = CodingConfig::coded(2, true);
        let low = symmetric_scenario(0.5, 5).unwrap();
        let point = flow_fair_throughput(&low, &t, &cfg).unwrap();
        assert_eq!(point.s_total, ratio(1, 2));
        assert_eq!(point.region, Region::Linear);

        let high = symmetric_scenario(2.0, 5).unwrap();
        let point = flow_fair_throughput(&high, &t, &cfg).unwrap();
        assert_eq!(point.s_total, ratio(5, 4));
        assert_eq!(point.region, Region::Saturated);
    }

    #[test]
    fn node_fair_hand_evaluated_point() {
        let t = cross5();
        let cfg = CodingConfig::coded(1, true);
        let s = symmetric_scenario(0.9, 5).unwrap();
        let point = node_fair_throughput(&s, &t, &cfg).unwrap();
        assert_eq!(point.s_total, ratio(7, 10));
        assert_eq!(point.region, Region::Saturated);
    }

    #[test]
    fn node_fair_linear_region_is_exact() {
        let t = cross5();
        let cfg = CodingConfig::routing(1, true);
        let s = symmetric_scenario(0.4, 5).unwrap();
        let point = node_fair_throughput(&s, &t, &cfg).unwrap();
        assert_eq!(point.s_total, s.total_load());
        assert_eq!(point.region, Region::Linear);
    }

    #[test]
    fn node_fair_approaches_single_share() {
        let cross = cross5();
        let x = x5();
        let heavy = symmetric_scenario(50.0, 5).unwrap();
        for t in [&cross, &x] {
            for nc in [false, true] {
                for m in [1, 2, 4] {
                    let cfg = CodingConfig { m, csma: true, nc, traffic: Traffic::Unicast };
                    let s = node_fair_throughput(&heavy, t, &cfg).unwrap();
                    let err = (s.s_total - ratio(1, 5)).abs();
                    assert!(
                        err < ratio(1, 100),
                        "{t:?} nc={nc} m={m}: S(50) = {} too far from 1/5",
                        s.s_total
                    );
                }
            }
        }
    }

    #[test]
    fn relay_load_divides_by_coefficient() {
        let s = symmetric_scenario(5.0 / 6.0, 5).unwrap();
        // Rounded symmetric share: 100 * (5/6) / 5 rounds to 17 packets.
        assert_eq!(relay_load(&s, ratio(4, 1)), ratio(17, 100));
        let zero = symmetric_scenario(0.0, 5).unwrap();
        assert_eq!(relay_load(&zero, ratio(2, 1)), Ratio::zero());
    }
}
