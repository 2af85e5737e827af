//! Basic-operation counters used to check the advertised complexity
//! empirically. Counting is always on (plain u64 increments); callers decide
//! whether to report.

/// Operation tallies for one pipeline run (or one isolated call in tests).
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Counters {
    /// Order scans, separator removals and finds inside `resolve_all` on T.
    pub resolve_t: u64,
    /// Same, for S.
    pub resolve_s: u64,
    /// Linked-list node visits while streaming dominating orders (both
    /// sequences; the S stream is rebuilt once per T order).
    pub retrieve: u64,
    /// Per-pair guided search work: renumbering, separator scan, union-find
    /// ops, sparse-table cells, stack pushes/pops and filter reads.
    pub pair: u64,
    /// Records handed to the sink (the paper-level N).
    pub emitted: u64,
}

impl Counters {
    pub fn total(&self) -> u64 {
        self.resolve_t + self.resolve_s + self.retrieve + self.pair + self.emitted
    }
}

/// Which `Counters` field a called module should charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Charge {
    ResolveT,
    ResolveS,
    Retrieve,
    Pair,
}

impl Counters {
    #[inline]
    pub fn bump(&mut self, charge: Charge, amount: u64) {
        match charge {
            Charge::ResolveT => self.resolve_t += amount,
            Charge::ResolveS => self.resolve_s += amount,
            Charge::Retrieve => self.retrieve += amount,
            Charge::Pair => self.pair += amount,
        }
    }

    #[inline]
    pub fn read(&self, charge: Charge) -> u64 {
        match charge {
            Charge::ResolveT => self.resolve_t,
            Charge::ResolveS => self.resolve_s,
            Charge::Retrieve => self.retrieve,
            Charge::Pair => self.pair,
        }
    }
}
