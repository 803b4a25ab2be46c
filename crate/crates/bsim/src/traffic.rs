//! Offered-load scenarios: how many packets each node wants to send.
//!
//! Loads are expressed two ways, kept in sync: an exact per-node rate
//! (`rho`, packets per slot) used by the analytic models, and an integer
//! packet count (`k`, packets per 100-session window) used by the
//! slot-level simulator. Scenarios are either symmetric (every node
//! offers the same share of the total) or drawn at random around that
//! share with a seeded generator, so simulation studies are reproducible.

use crate::Ratio;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::Binomial;
use thiserror::Error;

/// Errors raised while building a [`LoadScenario`].
#[derive(Debug, Error, PartialEq)]
pub enum TrafficError {
    /// Offered load must be a finite, non-negative number.
    #[error("offered load must be finite and non-negative, got {load}")]
    InvalidLoad { load: f64 },
    /// Random draws model each node's count as a binomial share of a
    /// 100-session window, which caps the total at one packet per node
    /// per session.
    #[error("drawn scenarios need offered load at most the node count {n}, got {load}")]
    LoadAboveNodeCount { load: f64, n: usize },
}

/// Per-node offered load for one study point. Index `n - 1` is the
/// relay's own flow; lower indices are edge nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadScenario {
    /// Total offered load in packets per slot (sum of `rho`, as `f64`).
    pub p_offered: f64,
    /// Packets each node must deliver over a 100-session window.
    pub k: Vec<u32>,
    /// Exact per-node offered rate in packets per slot.
    pub rho: Vec<Ratio>,
}

impl LoadScenario {
    /// Builds a scenario directly from per-node packet counts; rates are
    /// the counts spread over the 100-session window.
    pub fn from_counts(k: Vec<u32>) -> Self {
        let rho: Vec<Ratio> = k.iter().map(|&ki| Ratio::new(ki as i64, 100)).collect();
        let total: u32 = k.iter().sum();
        LoadScenario {
            p_offered: f64::from(total) / 100.0,
            k,
            rho,
        }
    }

    /// Number of nodes covered by the scenario, relay included.
    pub fn n(&self) -> usize {
        self.k.len()
    }

    /// Exact total offered load in packets per slot.
    pub fn total_load(&self) -> Ratio {
        self.rho.iter().sum()
    }

    /// Exact offered load of edge node `j`.
    pub fn edge_load(&self, j: usize) -> Ratio {
        self.rho[j]
    }

    /// Exact offered load of the relay's own flow.
    pub fn relay_load(&self) -> Ratio {
        self.rho[self.k.len() - 1]
    }
}

/// Every node offers an equal share of `p_total`, rounded to the packet
/// grid of the 100-session window.
pub fn symmetric_scenario(p_total: f64, n: usize) -> Result<LoadScenario, TrafficError> {
    if !p_total.is_finite() || p_total < 0.0 {
        return Err(TrafficError::InvalidLoad { load: p_total });
    }
    let per_node = (100.0 * p_total / n as f64).round() as u32;
    Ok(LoadScenario::from_counts(vec![per_node; n]))
}

/// Draws each node's packet count independently as `Binomial(100, p/n)`,
/// so counts average the symmetric share but vary between trials. The
/// same seed always reproduces the same scenario.
pub fn draw_scenario(p_total: f64, n: usize, seed: u64) -> Result<LoadScenario, TrafficError> {
    if !p_total.is_finite() || p_total < 0.0 {
        return Err(TrafficError::InvalidLoad { load: p_total });
    }
    let share = p_total / n as f64;
    if share > 1.0 {
        return Err(TrafficError::LoadAboveNodeCount { load: p_total, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Binomial::new(100, share).expect("share checked to lie in [0, 1]");
    let k: Vec<u32> = (0..n).map(|_| dist.sample(&mut rng) as u32).collect();
    Ok(LoadScenario::from_counts(k))
}
