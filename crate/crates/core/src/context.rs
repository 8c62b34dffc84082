use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::Result;

use crate::hcd::AffectedAccounting;
use crate::subset_conv::Backend;

/// Convention for highly-connectedness of two-vertex graphs.
///
/// Single vertices are always highly connected. `K2` has edge connectivity 1,
/// which is not strictly greater than `2 / 2`, so by default it is not.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Convention {
    pub k2_is_hc: bool,
}

/// Best-effort counters filled in by the solvers.
#[derive(Debug, Default)]
pub struct Stats {
    branch_nodes: AtomicU64,
    cuts_enumerated: AtomicU64,
    convolutions: AtomicU64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatsSnapshot {
    pub branch_nodes: u64,
    pub cuts_enumerated: u64,
    pub convolutions: u64,
}

impl Stats {
    pub fn add_branch_nodes(&self, n: u64) {
        self.branch_nodes.fetch_add(n, Ordering::Relaxed);
    }

    pub fn add_cuts(&self, n: u64) {
        self.cuts_enumerated.fetch_add(n, Ordering::Relaxed);
    }

    pub fn add_convolutions(&self, n: u64) {
        self.convolutions.fetch_add(n, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> StatsSnapshot {
        StatsSnapshot {
            branch_nodes: self.branch_nodes.load(Ordering::Relaxed),
            cuts_enumerated: self.cuts_enumerated.load(Ordering::Relaxed),
            convolutions: self.convolutions.load(Ordering::Relaxed),
        }
    }
}

/// Solver configuration shared by every entry point.
#[derive(Debug, Default)]
pub struct Context {
    pub convention: Convention,
    /// Evaluate independent branches on the rayon thread pool.
    pub parallel: bool,
    /// Abort k-cut enumeration (and answer NO) after this many cuts.
    pub cut_cap: Option<u64>,
    pub backend: Backend,
    pub accounting: AffectedAccounting,
    pub stats: Stats,
}

impl Context {
    pub fn with_convention(convention: Convention) -> Self {
        Context {
            convention,
            ..Context::default()
        }
    }
}

impl Context {
    /// First `Some` produced by `f` over `items`; any match when parallel.
    pub(crate) fn find_any<I, T, F>(&self, items: Vec<I>, f: F) -> Result<Option<T>>
    where
        I: Send,
        T: Send,
        F: Fn(I) -> Result<Option<T>> + Sync + Send,
    {
        if self.parallel {
            items
                .into_par_iter()
                .find_map_any(|it| f(it).transpose())
                .transpose()
        } else {
            for it in items {
                if let Some(t) = f(it)? {
                    return Ok(Some(t));
                }
            }
            Ok(None)
        }
    }
}
