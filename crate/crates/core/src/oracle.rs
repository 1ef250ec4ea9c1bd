//! Brute-force reference: test every `k`-subset for connectivity.
//!
//! Deliberately naive and independent of the rest of the crate apart from
//! the adjacency lists; connectivity is checked with its own bitmask search.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::graph::{Backend, Graph};
use crate::harness::{Algorithm, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

/// Largest graph the oracle accepts unless told otherwise.
pub const DEFAULT_LIMIT: usize = 24;

/// Hard ceiling: subsets are `u64` masks.
const MASK_BITS: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Sorted member lists, in lexicographic order.
    pub sets: Vec<Vec<usize>>,
    pub count: u64,
}

pub fn brute_force_cise(g: &Graph, k: usize) -> Result<OracleResult> {
    brute_force_cise_with_limit(g, k, DEFAULT_LIMIT)
}

pub fn brute_force_cise_with_limit(g: &Graph, k: usize, limit: usize) -> Result<OracleResult> {
    let masks = adjacency_masks(g, k, limit)?;
    let mut sets = Vec::new();
    scan(&masks, k, |_| true, |s| sets.push(members(s)));
    sets.sort_unstable();
    let count = sets.len() as u64;
    Ok(OracleResult { sets, count })
}

fn adjacency_masks(g: &Graph, k: usize, limit: usize) -> Result<Vec<u64>> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::OrderOutOfRange { k, n });
    }
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::OracleTooLarge { n, limit });
    }
    Ok((0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect())
}

/// Visits every connected `k`-subset in colexicographic order. `keep_going`
/// is asked before each subset.
fn scan(masks: &[u64], k: usize, mut keep_going: impl FnMut(u64) -> bool, mut found: impl FnMut(u64)) {
    let n = masks.len();
    let end = 1u64 << n;
    let mut s = (1u64 << k) - 1;
    while s < end {
        if !keep_going(s) {
            return;
        }
        if connected(masks, s) {
            found(s);
        }
        // next subset with the same popcount
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        s = ripple | (((s ^ ripple) >> 2) / low);
    }
}

fn connected(masks: &[u64], set: u64) -> bool {
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = masks[v] & set & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == set
}

fn members(mut s: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        out.push(s.trailing_zeros() as usize);
        s &= s - 1;
    }
    out
}

/// Oracle as a regular enumerator: sets reach the sink in lexicographic
/// order, one tree node is counted per examined subset.
pub fn enumerate_oracle(
    g: &Graph,
    k: usize,
    sink: &mut SubgraphSink<'_>,
    limit: usize,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    let masks = adjacency_masks(g, k, limit)?;
    let mut ctx = Ctx::new(sink, guard);
    let mut found = Vec::new();
    scan(&masks, k, |_| !ctx.stopped && ctx.enter(), |s| found.push(s));
    let timed_out = ctx.stopped;
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(members).collect();
    sets.sort_unstable();
    for set in &sets {
        ctx.emit(g, set);
        if ctx.stopped && !timed_out {
            break;
        }
    }
    ctx.finish(Algorithm::Oracle, Backend::List, k)
}

/// Which closed-form count failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Singletons,
    Edges,
    Whole,
    AllButOne,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Singletons => "|CIS(G,1)| = n",
            Identity::Edges => "|CIS(G,2)| = m",
            Identity::Whole => "|CIS(G,n)| = 1",
            Identity::AllButOne => "|CIS(G,n-1)| = #non-articulation points",
        }
    }
}

/// Checks the four closed-form counts of a connected graph against
/// `count(k)`, which may be backed by any enumerator. Orders outside `1..=n`
/// are skipped. Returns the identities that were checked.
pub fn count_identities(g: &Graph, mut count: impl FnMut(usize) -> Result<u64>) -> Result<Vec<Identity>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let nap = crate::graph::non_articulation_points(g).len() as u64;
    let checks = [
        (Identity::Singletons, 1, n as u64),
        (Identity::Edges, 2, g.m() as u64),
        (Identity::Whole, n, 1),
        (Identity::AllButOne, n.wrapping_sub(1), nap),
    ];
    let mut done = Vec::new();
    for (identity, k, expected) in checks {
        if k == 0 || k > n {
            continue;
        }
        let actual = count(k)?;
        if actual != expected {
            return Err(Error::IdentityFailed { identity: identity.name(), expected, actual });
        }
        done.push(identity);
    }
    Ok(done)
}
