//! Relay-bottleneck topology components and their connectivity structure.
//!
//! A component has `n` nodes: edge nodes `0..n-1` and a single relay
//! (index `n-1`). Every flow crosses the relay, so the relay is the
//! bottleneck; what the relay can usefully *code* together on the
//! downlink is determined by the overhearing graph between edge nodes.
//! Two families are modeled, each with a "partial" variant that removes
//! one overhearing link:
//!
//! * **Cross** — edge nodes form hidden pairs across the relay. A node
//!   overhears every edge node except its own partner, and its packet is
//!   destined to that partner.
//! * **X** — edge nodes split into two sides. A node overhears only its
//!   own side, while packets are destined pairwise to the far side.
//!
//! The relay also sources one flow of its own, delivered to edge node 0.

use thiserror::Error;

/// Errors raised while constructing a [`Topology`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    /// Fewer than two edge nodes plus a relay.
    #[error("topology needs at least {min} nodes, got {got}")]
    TooFewNodes { min: usize, got: usize },
    /// Cross components pair every edge node with a partner, so the edge
    /// node count must be even (total node count odd).
    #[error("cross components need an even number of edge nodes, got {edges}")]
    OddEdgeCount { edges: usize },
    /// An X split must leave both sides non-empty.
    #[error("side split {x1} of {edges} edge nodes leaves an empty side")]
    BadSplit { x1: usize, edges: usize },
    /// Partial variants delete one overhearing link, which requires the
    /// base component to have at least one.
    #[error("component has no overhearing link to remove")]
    NoRemovableEdge,
}

/// The four supported component shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopologyKind {
    /// Hidden pairs across the relay; overhearing everywhere else.
    Cross,
    /// Two sides; overhearing within a side, traffic between sides.
    X,
    /// [`TopologyKind::Cross`] minus one overhearing link.
    PartialCross,
    /// [`TopologyKind::X`] minus one overhearing link.
    PartialX,
}

impl TopologyKind {
    /// Whether this shape pairs nodes across the relay (cross family).
    pub fn is_cross_family(self) -> bool {
        matches!(self, TopologyKind::Cross | TopologyKind::PartialCross)
    }

    /// Whether this shape is a partial variant.
    pub fn is_partial(self) -> bool {
        matches!(self, TopologyKind::PartialCross | TopologyKind::PartialX)
    }
}

impl std::fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TopologyKind::Cross => "cross",
            TopologyKind::X => "x",
            TopologyKind::PartialCross => "partial-cross",
            TopologyKind::PartialX => "partial-x",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for TopologyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cross" => Ok(TopologyKind::Cross),
            "x" => Ok(TopologyKind::X),
            "partial-cross" => Ok(TopologyKind::PartialCross),
            "partial-x" => Ok(TopologyKind::PartialX),
            other => Err(format!(
                "unknown topology `{other}` (expected cross, x, partial-cross or partial-x)"
            )),
        }
    }
}

/// A concrete component instance: node count, destination map and
/// overhearing graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    kind: TopologyKind,
    n: usize,
    x1_size: usize,
    dest: Vec<usize>,
    removed: Option<(usize, usize)>,
}

impl Topology {
    /// Builds a cross component with `n` total nodes (`n` must be odd so
    /// the edge nodes pair up).
    pub fn cross(n: usize) -> Result<Self, TopologyError> {
        Self::build(TopologyKind::Cross, n, None)
    }

    /// Builds an X component with `n` total nodes and `x1` nodes on the
    /// first side.
    pub fn x(n: usize, x1: usize) -> Result<Self, TopologyError> {
        Self::build(TopologyKind::X, n, Some(x1))
    }

    /// Builds a cross component with its lowest-numbered overhearing link
    /// removed.
    pub fn partial_cross(n: usize) -> Result<Self, TopologyError> {
        Self::build(TopologyKind::PartialCross, n, None)
    }

    /// Builds an X component with its lowest-numbered overhearing link
    /// removed.
    pub fn partial_x(n: usize, x1: usize) -> Result<Self, TopologyError> {
        Self::build(TopologyKind::PartialX, n, Some(x1))
    }

    /// Builds any shape. `x1` selects the first-side size for the X
    /// family and defaults to an even split; the cross family ignores it.
    pub fn build(
        kind: TopologyKind,
        n: usize,
        x1: Option<usize>,
    ) -> Result<Self, TopologyError> {
        if n < 3 {
            return Err(TopologyError::TooFewNodes { min: 3, got: n });
        }
        let edges = n - 1;
        let x1_size = if kind.is_cross_family() {
            if !edges.is_multiple_of(2) {
                return Err(TopologyError::OddEdgeCount { edges });
            }
            // Unused by the cross family; recorded for uniformity.
            edges / 2
        } else {
            let x1 = x1.unwrap_or(edges / 2);
            if x1 == 0 || x1 >= edges {
                return Err(TopologyError::BadSplit { x1, edges });
            }
            x1
        };

        let dest = if kind.is_cross_family() {
            (0..edges).map(|j| (j + edges / 2) % edges).collect()
        } else {
            x_destinations(edges, x1_size)
        };

        let mut topo = Topology {
            kind,
            n,
            x1_size,
            dest,
            removed: None,
        };
        if kind.is_partial() {
            topo.removed = Some(topo.smallest_overhear_edge()?);
        }
        Ok(topo)
    }

    /// Total node count, relay included.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edge nodes.
    pub fn edge_count(&self) -> usize {
        self.n - 1
    }

    /// Index of the relay node.
    pub fn relay(&self) -> usize {
        self.n - 1
    }

    /// The component shape.
    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    /// Edge node indices in ascending order.
    pub fn edge_nodes(&self) -> std::ops::Range<usize> {
        0..self.n - 1
    }

    /// First-side size for the X family (half the edge count for cross).
    pub fn x1_size(&self) -> usize {
        self.x1_size
    }

    /// The overhearing link removed by a partial variant, if any.
    pub fn removed_edge(&self) -> Option<(usize, usize)> {
        self.removed
    }

    /// Destination edge node of edge node `j`'s flow.
    pub fn dest(&self, j: usize) -> usize {
        self.dest[j]
    }

    /// Destination of the relay's own flow.
    pub fn relay_dest(&self) -> usize {
        0
    }

    /// Whether edge node `a` overhears edge node `b`'s transmissions
    /// (false for the relay or for `a == b`; always symmetric).
    pub fn overhear(&self, a: usize, b: usize) -> bool {
        let edges = self.edge_count();
        if a == b || a >= edges || b >= edges {
            return false;
        }
        if let Some((u, v)) = self.removed {
            if (a, b) == (u, v) || (a, b) == (v, u) {
                return false;
            }
        }
        if self.kind.is_cross_family() {
            // Everyone is in range except the partner across the relay.
            b != (a + edges / 2) % edges
        } else {
            (a < self.x1_size) == (b < self.x1_size)
        }
    }

    /// Transmit groups used by the reception-aware carrier-sense MAC:
    /// mutually hidden pairs first, packed up to `m` simultaneous
    /// transmitters per slot. Groups are ascending and ordered by their
    /// lowest member.
    pub fn csma_groups(&self, m: u32) -> Vec<Vec<usize>> {
        if m <= 1 {
            return self.edge_nodes().map(|j| vec![j]).collect();
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for unit in self.transmit_units() {
            match groups.last_mut() {
                Some(g) if g.len() + unit.len() <= m as usize => g.extend(unit),
                _ => groups.push(unit),
            }
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        groups.sort_by_key(|g| g[0]);
        groups
    }

    /// Indivisible transmit units: hidden pairs, then leftover singles.
    fn transmit_units(&self) -> Vec<Vec<usize>> {
        let edges = self.edge_count();
        if self.kind.is_cross_family() {
            let half = edges / 2;
            return (0..half).map(|j| vec![j, j + half]).collect();
        }
        let paired = self.x1_size.min(edges - self.x1_size);
        let mut units: Vec<Vec<usize>> =
            (0..paired).map(|i| vec![i, self.x1_size + i]).collect();
        if self.x1_size > paired {
            units.extend((paired..self.x1_size).map(|j| vec![j]));
        } else {
            units.extend((self.x1_size + paired..edges).map(|j| vec![j]));
        }
        units
    }

    /// Lowest-numbered overhearing link of the *unmodified* base graph.
    fn smallest_overhear_edge(&self) -> Result<(usize, usize), TopologyError> {
        for a in self.edge_nodes() {
            for b in a + 1..self.edge_count() {
                if self.overhear(a, b) {
                    return Ok((a, b));
                }
            }
        }
        Err(TopologyError::NoRemovableEdge)
    }
}

/// Pairwise cross-side destinations: side-1 node `i` exchanges with
/// side-2 node `i`; surplus nodes on the larger side send round-robin
/// into the smaller side.
fn x_destinations(edges: usize, x1_size: usize) -> Vec<usize> {
    let x1: Vec<usize> = (0..x1_size).collect();
    let x2: Vec<usize> = (x1_size..edges).collect();
    let paired = x1.len().min(x2.len());
    let mut dest = vec![0; edges];
    for i in 0..paired {
        dest[x1[i]] = x2[i];
        dest[x2[i]] = x1[i];
    }
    let (longer, shorter) = if x1.len() > x2.len() { (&x1, &x2) } else { (&x2, &x1) };
    for (s, &j) in longer.iter().enumerate().skip(paired) {
        dest[j] = shorter[(s - paired) % shorter.len()];
    }
    dest
}

/// Splits `active` transmitters into consecutive groups of at most `m`,
/// the schedule used when the MAC is not reception-aware.
pub fn chunk_groups(active: &[usize], m: u32) -> Vec<Vec<usize>> {
    active
        .chunks(m.max(1) as usize)
        .map(|c| c.to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_partners_and_overhearing() {
        let t = Topology::cross(5).unwrap();
        assert_eq!(t.relay(), 4);
        assert_eq!(t.dest(0), 2);
        assert_eq!(t.dest(2), 0);
        assert_eq!(t.dest(1), 3);
        assert!(t.overhear(0, 1));
        assert!(t.overhear(0, 3));
        assert!(!t.overhear(0, 2), "partners are hidden from each other");
        assert!(!t.overhear(0, 0));
        assert!(!t.overhear(0, 4), "the relay is not an overhearing peer");
    }

    #[test]
    fn x_sides_and_destinations() {
        let t = Topology::x(5, 2).unwrap();
        assert_eq!(t.dest(0), 2);
        assert_eq!(t.dest(3), 1);
        assert!(t.overhear(0, 1));
        assert!(t.overhear(2, 3));
        assert!(!t.overhear(0, 2), "sides do not hear each other");

        let wide = Topology::x(6, 2).unwrap();
        assert_eq!(wide.dest(4), 0, "surplus nodes target the far side round-robin");
    }

    #[test]
    fn partial_variants_drop_the_lowest_link() {
        let pc = Topology::partial_cross(5).unwrap();
        assert_eq!(pc.removed_edge(), Some((0, 1)));
        assert!(!pc.overhear(0, 1));
        assert!(!pc.overhear(1, 0));
        assert!(pc.overhear(0, 3));

        let px = Topology::partial_x(5, 2).unwrap();
        assert_eq!(px.removed_edge(), Some((0, 1)));
        assert!(px.overhear(2, 3));
    }

    #[test]
    fn grouping_respects_simultaneity() {
        let t = Topology::cross(5).unwrap();
        assert_eq!(t.csma_groups(1), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(t.csma_groups(2), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(t.csma_groups(4), vec![vec![0, 1, 2, 3]]);

        let big = Topology::cross(9).unwrap();
        assert_eq!(big.csma_groups(4), vec![vec![0, 1, 4, 5], vec![2, 3, 6, 7]]);

        let x = Topology::x(6, 2).unwrap();
        assert_eq!(x.csma_groups(2), vec![vec![0, 2], vec![1, 3], vec![4]]);

        assert_eq!(chunk_groups(&[0, 1, 2, 3], 2), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(chunk_groups(&[0, 1, 2], 4), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        assert_eq!(
            Topology::cross(4).unwrap_err(),
            TopologyError::OddEdgeCount { edges: 3 }
        );
        assert_eq!(
            Topology::cross(2).unwrap_err(),
            TopologyError::TooFewNodes { min: 3, got: 2 }
        );
        assert_eq!(
            Topology::x(5, 0).unwrap_err(),
            TopologyError::BadSplit { x1: 0, edges: 4 }
        );
        assert_eq!(
            Topology::partial_x(3, 1).unwrap_err(),
            TopologyError::NoRemovableEdge
        );
    }
}
