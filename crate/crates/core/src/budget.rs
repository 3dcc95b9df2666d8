use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Limits for exhaustive searches. A search that hits either limit reports an
/// indeterminate result instead of a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn with_time(mut self, max_time: Duration) -> Self {
        self.max_time = Some(max_time);
        self
    }

    /// Node-count-only budgets keep results independent of machine speed.
    pub fn is_deterministic(&self) -> bool {
        self.max_time.is_none()
    }

    /// What is left after `nodes` search nodes and `elapsed` time were spent.
    pub fn remaining(&self, nodes: u64, elapsed: Duration) -> Budget {
        Budget {
            max_nodes: self.max_nodes.map(|m| m.saturating_sub(nodes)),
            max_time: self.max_time.map(|t| t.saturating_sub(elapsed)),
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            budget: *self,
            nodes: 0,
            start: Instant::now(),
            exceeded: false,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(50_000_000)
    }
}

pub(crate) struct Meter {
    budget: Budget,
    nodes: u64,
    start: Instant,
    exceeded: bool,
}

impl Meter {
    /// Counts one search node; returns `true` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exceeded {
            return true;
        }
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.exceeded = true;
            }
        }
        if self.nodes & 0xfff == 0 {
            if let Some(limit) = self.budget.max_time {
                if self.start.elapsed() > limit {
                    self.exceeded = true;
                }
            }
        }
        self.exceeded
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}
