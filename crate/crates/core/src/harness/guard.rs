use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Enumeration nodes between two deadline checks.
pub const POLL_INTERVAL: u64 = 1 << 14;

/// Wall-clock budget and cancellation flag polled by the enumerators.
///
/// Once expired the enumerators stop descending, restore their state on the
/// way out, and report `timed_out = true` with the partial count.
#[derive(Default)]
pub struct TimeoutGuard<'a> {
    deadline: Option<Instant>,
    cancel: Option<Arc<AtomicBool>>,
    progress: Option<Box<dyn FnMut(u64) + 'a>>,
    expired: bool,
}

impl<'a> TimeoutGuard<'a> {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: Duration) -> Self {
        TimeoutGuard { deadline: Some(Instant::now() + budget), ..Self::default() }
    }

    pub fn new(budget: Option<Duration>) -> Self {
        budget.map_or_else(Self::unlimited, Self::with_budget)
    }

    pub fn cancel_on(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    /// Called with the run's node count at every poll.
    pub fn on_progress(mut self, callback: impl FnMut(u64) + 'a) -> Self {
        self.progress = Some(Box::new(callback));
        self
    }

    pub fn expired(&self) -> bool {
        self.expired
    }

    /// Returns true once the budget is exhausted or cancellation requested.
    #[inline]
    pub fn tick(&mut self, nodes: u64) -> bool {
        if !self.expired && (nodes == 1 || nodes & (POLL_INTERVAL - 1) == 0) {
            self.poll(nodes);
        }
        self.expired
    }

    #[cold]
    fn poll(&mut self, nodes: u64) {
        if let Some(cb) = self.progress.as_mut() {
            cb(nodes);
        }
        let late = self.deadline.is_some_and(|d| Instant::now() >= d);
        let cancelled = self.cancel.as_ref().is_some_and(|f| f.load(Ordering::Relaxed));
        self.expired = late || cancelled;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget_expires_on_first_poll() {
        let mut g = TimeoutGuard::with_budget(Duration::ZERO);
        assert!(g.tick(1));
        assert!(g.expired());
    }

    #[test]
    fn polls_on_interval() {
        let mut seen = Vec::new();
        {
            let mut g = TimeoutGuard::unlimited().on_progress(|n| seen.push(n));
            for n in 1..=3 * POLL_INTERVAL {
                assert!(!g.tick(n));
            }
        }
        assert_eq!(seen, vec![1, POLL_INTERVAL, 2 * POLL_INTERVAL, 3 * POLL_INTERVAL]);
    }

    #[test]
    fn cancellation_flag() {
        let flag = Arc::new(AtomicBool::new(false));
        let mut g = TimeoutGuard::unlimited().cancel_on(flag.clone());
        assert!(!g.tick(1));
        flag.store(true, Ordering::Relaxed);
        assert!(!g.tick(2));
        assert!(g.tick(POLL_INTERVAL));
    }
}
