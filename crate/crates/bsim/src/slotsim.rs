//! Integer-slot discrete simulator of full transfer sessions.
//!
//! The simulator plays out the schedule slot by slot: uplink groups
//! transmit while idle listeners overhear what reaches them, then the
//! relay forwards — as generic linear combinations when coding is on —
//! until every destination can decode, and finally the relay sends its
//! own packet. Decoding is pure rank accounting: a coded transmission is
//! `(support set, combination index)` and a node recovers a support pool
//! once its independent combinations plus natively known members cover
//! the pool. Every slot is recorded in a replayable trace, which makes
//! the simulator the brute-force oracle for the closed forms in
//! [`crate::mac`] and [`crate::analysis`].

use crate::mac::{pack_decodable_slot, session_plan, CodingConfig, MacError, Traffic};
use crate::topology::{chunk_groups, Topology};
use crate::traffic::LoadScenario;
use crate::Ratio;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Errors from a simulation run.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimError {
    /// The scheduler failed to finish within the slot budget, which
    /// signals a scheduling or decoding bug rather than a slow session.
    #[error("session stalled: {slots} slots without completing delivery")]
    Stalled { slots: u64 },
    /// Invalid configuration forwarded from the analytic layer.
    #[error(transparent)]
    Mac(#[from] MacError),
}

/// Identity of one native packet: origin node and per-origin sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PacketId {
    /// Node that generated the packet.
    pub origin: usize,
    /// Zero-based sequence number within the origin.
    pub seq: u32,
}

impl std::fmt::Display for PacketId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{}", self.origin, self.seq)
    }
}

/// What a slot carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    /// Edge nodes transmit native packets toward the relay.
    Uplink,
    /// The relay transmits a (possibly singleton) combination.
    Coded,
    /// The relay transmits its own packet uncoded.
    Own,
}

impl std::fmt::Display for SlotKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SlotKind::Uplink => "uplink",
            SlotKind::Coded => "coded",
            SlotKind::Own => "own",
        })
    }
}

/// One slot of the session trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotRecord {
    /// Zero-based slot index.
    pub slot: u64,
    /// Payload kind.
    pub kind: SlotKind,
    /// Transmitting node indices, ascending.
    pub tx: Vec<usize>,
    /// Packets carried: the natives sent (uplink) or the combination's
    /// support (downlink).
    pub support: Vec<PacketId>,
    /// Audience: every node that cleanly receives this slot, ascending.
    pub rx: Vec<usize>,
}

impl SlotRecord {
    /// Line-oriented trace form, one slot per line.
    pub fn format_line(&self) -> String {
        let ids = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let pkts = self
            .support
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "slot={} tx=[{}] kind={} support=[{}] rx=[{}]",
            self.slot,
            ids(&self.tx),
            self.kind,
            pkts,
            ids(&self.rx)
        )
    }
}

/// Rank-accounting decoder state of one node over one round's packets.
///
/// Packets are tracked by origin (each origin contributes one packet per
/// round). A coded pool resolves once the node's independent
/// combinations plus its natively known members cover the pool.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Knowledge {
    native: BTreeSet<usize>,
    pools: BTreeMap<Vec<usize>, usize>,
}

impl Knowledge {
    /// Records an uncoded packet received or self-generated.
    pub fn note_native(&mut self, origin: usize) {
        self.native.insert(origin);
        self.settle();
    }

    /// Records one independent combination over `support`.
    pub fn note_combination(&mut self, support: &BTreeSet<usize>) {
        let key: Vec<usize> = support.iter().copied().collect();
        *self.pools.entry(key).or_insert(0) += 1;
        self.settle();
    }

    /// Whether the node can produce this origin's packet.
    pub fn knows(&self, origin: usize) -> bool {
        self.native.contains(&origin)
    }

    /// Resolves every pool whose rank condition is met, cascading until
    /// nothing more decodes.
    fn settle(&mut self) {
        loop {
            let resolved: Vec<Vec<usize>> = self
                .pools
                .iter()
                .filter(|(support, &count)| {
                    let known = support.iter().filter(|o| self.native.contains(o)).count();
                    known + count >= support.len()
                })
                .map(|(support, _)| support.clone())
                .collect();
            if resolved.is_empty() {
                return;
            }
            for support in resolved {
                self.pools.remove(&support);
                self.native.extend(support);
            }
        }
    }
}

/// Outcome of one simulated session.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionResult {
    /// Total slots consumed.
    pub total_slots: u64,
    /// Slots spent on edge-node uplink.
    pub uplink_slots: u64,
    /// Slots spent on relay transmissions (coded, forwards and own).
    pub downlink_slots: u64,
    /// Packets delivered to their destination(s).
    pub delivered: u64,
    /// Exact delivered-per-slot rate (zero for an empty session).
    pub throughput: Ratio,
    /// Per-slot record of the whole session.
    pub trace: Vec<SlotRecord>,
}

/// Simulates delivery of a full scenario: rounds of one packet per
/// backlogged node, each round running uplink, downlink and the relay's
/// own slot until everything is delivered.
pub fn run_session(
    t: &Topology,
    cfg: &CodingConfig,
    scenario: &LoadScenario,
) -> Result<SessionResult, SimError> {
    assert_eq!(scenario.n(), t.n(), "scenario and topology node counts differ");
    let plan = session_plan(t, cfg)?;
    let e = t.edge_count();
    let relay = t.relay();
    let total_packets: u64 = scenario.k.iter().map(|&k| u64::from(k)).sum();
    let guard = 10 * total_packets * t.n() as u64 + 10;

    let mut remaining = scenario.k.clone();
    let mut seq = vec![0u32; t.n()];
    let mut slots: u64 = 0;
    let mut uplink_slots: u64 = 0;
    let mut downlink_slots: u64 = 0;
    let mut delivered: u64 = 0;
    let mut trace: Vec<SlotRecord> = Vec::new();

    while remaining.iter().any(|&r| r > 0) {
        if slots > guard {
            return Err(SimError::Stalled { slots });
        }
        let active: Vec<usize> = t.edge_nodes().filter(|&j| remaining[j] > 0).collect();
        let packet = |origin: usize| PacketId { origin, seq: seq[origin] };

        // Uplink: active edge nodes transmit by group; the relay hears
        // everything, idle edge nodes overhear what reaches them.
        let mut know: Vec<Knowledge> = vec![Knowledge::default(); e];
        for &o in &active {
            know[o].note_native(o);
        }
        let groups: Vec<Vec<usize>> = if plan.paired {
            t.csma_groups(plan.simultaneity)
                .into_iter()
                .map(|g| g.into_iter().filter(|v| remaining[*v] > 0).collect())
                .filter(|g: &Vec<usize>| !g.is_empty())
                .collect()
        } else {
            chunk_groups(&active, plan.simultaneity)
        };
        for g in &groups {
            let mut rx = vec![relay];
            for v in t.edge_nodes() {
                if g.contains(&v) {
                    continue;
                }
                let heard: Vec<usize> = g.iter().copied().filter(|&u| t.overhear(v, u)).collect();
                if !heard.is_empty() {
                    rx.push(v);
                    for u in heard {
                        know[v].note_native(u);
                    }
                }
            }
            rx.sort_unstable();
            trace.push(SlotRecord {
                slot: slots,
                kind: SlotKind::Uplink,
                tx: g.clone(),
                support: g.iter().map(|&o| packet(o)).collect(),
                rx,
            });
            slots += 1;
            uplink_slots += 1;
        }

        // Downlink: relay serves the round's edge packets.
        let every_edge: Vec<usize> = t.edge_nodes().collect();
        if cfg.nc {
            loop {
                if slots > guard {
                    return Err(SimError::Stalled { slots });
                }
                let support: BTreeSet<usize> = match cfg.traffic {
                    Traffic::Unicast => {
                        let pending: Vec<(usize, usize)> = active
                            .iter()
                            .map(|&o| (o, t.dest(o)))
                            .filter(|&(o, d)| !know[d].knows(o))
                            .collect();
                        if pending.is_empty() {
                            break;
                        }
                        let chosen =
                            pack_decodable_slot(&pending, |node, pkt| know[node].knows(pkt));
                        chosen.iter().map(|&(p, _)| p).collect()
                    }
                    Traffic::Broadcast => {
                        let missing = every_edge
                            .iter()
                            .any(|&v| active.iter().any(|&o| !know[v].knows(o)));
                        if !missing {
                            break;
                        }
                        active.iter().copied().collect()
                    }
                };
                for v in t.edge_nodes() {
                    know[v].note_combination(&support);
                }
                trace.push(SlotRecord {
                    slot: slots,
                    kind: SlotKind::Coded,
                    tx: vec![relay],
                    support: support.iter().map(|&o| packet(o)).collect(),
                    rx: every_edge.clone(),
                });
                slots += 1;
                downlink_slots += 1;
            }
        } else {
            for &o in &active {
                for v in t.edge_nodes() {
                    know[v].note_native(o);
                }
                trace.push(SlotRecord {
                    slot: slots,
                    kind: SlotKind::Coded,
                    tx: vec![relay],
                    support: vec![packet(o)],
                    rx: every_edge.clone(),
                });
                slots += 1;
                downlink_slots += 1;
            }
        }

        // The relay's own packet goes out uncoded, reaching everyone.
        if remaining[relay] > 0 {
            trace.push(SlotRecord {
                slot: slots,
                kind: SlotKind::Own,
                tx: vec![relay],
                support: vec![packet(relay)],
                rx: every_edge.clone(),
            });
            slots += 1;
            downlink_slots += 1;
            remaining[relay] -= 1;
            seq[relay] += 1;
            delivered += 1;
        }
        for &o in &active {
            remaining[o] -= 1;
            seq[o] += 1;
            delivered += 1;
        }
    }

    let throughput = if slots == 0 {
        Ratio::zero()
    } else {
        Ratio::new(delivered as i64, slots as i64)
    };
    Ok(SessionResult {
        total_slots: slots,
        uplink_slots,
        downlink_slots,
        delivered,
        throughput,
        trace,
    })
}

/// Slots for every node to deliver exactly one packet — the completion
/// delay of a single full session.
pub fn completion_delay(t: &Topology, cfg: &CodingConfig) -> Result<u64, SimError> {
    let one_each = LoadScenario::from_counts(vec![1; t.n()]);
    Ok(run_session(t, cfg, &one_each)?.total_slots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use crate::traffic::symmetric_scenario;

    #[test]
    fn coded_cross_session_matches_stated_slots() {
        let t = Topology::cross(5).unwrap();
        let r = run_session(
            &t,
            &CodingConfig::coded(1, true),
            &symmetric_scenario(0.05, 5).unwrap(),
        )
        .unwrap();
        assert_eq!(r.total_slots, 6, "4 uplink + 1 coded + 1 own");
        assert_eq!(r.throughput, ratio(5, 6));
        assert_eq!(r.trace.len(), 6);
        assert_eq!(
            r.trace[4].support.len(),
            4,
            "single combination covers all four flows"
        );
    }

    #[test]
    fn empty_scenario_produces_empty_trace() {
        let t = Topology::cross(5).unwrap();
        let r = run_session(
            &t,
            &CodingConfig::routing(1, true),
            &LoadScenario::from_counts(vec![0; 5]),
        )
        .unwrap();
        assert_eq!(r.total_slots, 0);
        assert_eq!(r.delivered, 0);
        assert_eq!(r.throughput, Ratio::zero());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn completion_delay_equals_plan_total() {
        let t = Topology::x(5, 2).unwrap();
        assert_eq!(completion_delay(&t, &CodingConfig::coded(2, true)).unwrap(), 5);
        assert_eq!(completion_delay(&t, &CodingConfig::routing(1, true)).unwrap(), 9);
    }

    #[test]
    fn knowledge_rank_condition() {
        let mut k = Knowledge::default();
        k.note_native(0);
        k.note_native(1);
        let pool: BTreeSet<usize> = [0, 1, 2, 3].into_iter().collect();
        k.note_combination(&pool);
        assert!(!k.knows(2), "one combination cannot cover two unknowns");
        k.note_combination(&pool);
        assert!(k.knows(2) && k.knows(3), "rank now covers the pool");
    }

    #[test]
    fn knowledge_cascades_across_pools() {
        let mut k = Knowledge::default();
        let ab: BTreeSet<usize> = [0, 1].into_iter().collect();
        k.note_combination(&ab);
        assert!(!k.knows(0));
        k.note_native(1);
        assert!(k.knows(0), "learning 1 unlocks the {{0,1}} combination");
    }

    #[test]
    fn multi_packet_rounds_accumulate() {
        let t = Topology::cross(5).unwrap();
        let r = run_session(
            &t,
            &CodingConfig::coded(2, true),
            &LoadScenario::from_counts(vec![3; 5]),
        )
        .unwrap();
        assert_eq!(r.total_slots, 12, "three rounds of four slots");
        assert_eq!(r.delivered, 15);
        assert_eq!(r.throughput, ratio(5, 4));
    }

    #[test]
    fn uneven_backlogs_shrink_rounds() {
        let t = Topology::cross(5).unwrap();
        let r = run_session(
            &t,
            &CodingConfig::routing(1, true),
            &LoadScenario::from_counts(vec![2, 1, 1, 1, 0]),
        )
        .unwrap();
        // Round 1: 4 uplink + 4 forwards; round 2: 1 uplink + 1 forward.
        assert_eq!(r.total_slots, 10);
        assert_eq!(r.delivered, 5);
    }
}
