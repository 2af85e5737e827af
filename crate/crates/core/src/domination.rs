//! Dominating orders of a sequence and their domination functions.
//!
//! `resolve_all` walks positions left to right. Each unresolved position d
//! starts a dominating order: its area is sliced into singletons, the
//! separators of every order symbol are removed walking the succ chains, and
//! a position i of the order is strictly dominated exactly when i and
//! succ(i-1) end up in one slice. `right_end` then recovers each dominated
//! order's right endpoint inside B_d with one monotone stack pass.

use crate::counters::{Charge, Counters};
use crate::model::{order_of, OccIndex, OrderScratch, OrderSlice, Pos, Sequence};
use crate::uf::SliceUF;

/// One dominating order's summary: start position d, order length k, and
/// the domination function as (s, F_d(s)) pairs in decreasing s, with the
/// self pair (1, k) last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationRecord {
    pub d: Pos,
    pub k: usize,
    pub fpairs: Vec<(usize, usize)>,
}

/// Labels accumulated across resolve calls.
#[derive(Debug)]
pub struct ResolveState {
    resolved: Vec<bool>,
    dominated_by: Vec<Pos>, // strict dominator per position; 0 = not yet
    scratch: OrderScratch,
}

impl ResolveState {
    pub fn new(seq: &Sequence) -> Self {
        ResolveState {
            resolved: vec![false; seq.len() + 1],
            dominated_by: vec![0; seq.len() + 1],
            scratch: OrderScratch::new(seq.alphabet_size()),
        }
    }

    pub fn is_resolved(&self, i: Pos) -> bool {
        self.resolved[i]
    }

    /// Strict dominator of position i, if already labeled.
    pub fn dominator_of(&self, i: Pos) -> Option<Pos> {
        if self.dominated_by[i] == 0 {
            None
        } else {
            Some(self.dominated_by[i])
        }
    }
}

/// All dominating orders of a deduplicated sequence, increasing d. The
/// order stream consumes this array in reverse (largest d first).
#[derive(Debug)]
pub struct DominationTable {
    pub records: Vec<DominationRecord>,
    by_pos: Vec<u32>, // position d -> index into records, u32::MAX otherwise
    pub dominated_by: Vec<Pos>,
}

impl DominationTable {
    pub fn q(&self) -> usize {
        self.records.len()
    }

    pub fn dominating_positions(&self) -> Vec<Pos> {
        self.records.iter().map(|r| r.d).collect()
    }

    pub fn record_at(&self, d: Pos) -> &DominationRecord {
        &self.records[self.by_pos[d] as usize]
    }
}

/// Runs resolve for d = 1..n and returns the complete domination table.
pub fn resolve_all(
    seq: &Sequence,
    occ: &OccIndex,
    counters: &mut Counters,
    charge: Charge,
) -> DominationTable {
    let n = seq.len();
    let mut state = ResolveState::new(seq);
    let mut records = Vec::new();
    for d in 1..=n {
        if let Some(rec) = resolve(seq, occ, d, &mut state, counters, charge) {
            records.push(rec);
        }
    }
    // Exactly-one-cover: every position got a strict dominator.
    debug_assert!((1..=n).all(|i| state.dominated_by[i] != 0));
    let mut by_pos = vec![u32::MAX; n + 1];
    for (idx, rec) in records.iter().enumerate() {
        by_pos[rec.d] = idx as u32;
    }
    DominationTable {
        records,
        by_pos,
        dominated_by: state.dominated_by,
    }
}

/// Resolves position d. No-op when d was already labeled; otherwise marks d
/// dominating, labels every position it strictly dominates, and returns the
/// record with the complete domination function.
pub fn resolve(
    seq: &Sequence,
    occ: &OccIndex,
    d: Pos,
    state: &mut ResolveState,
    counters: &mut Counters,
    charge: Charge,
) -> Option<DominationRecord> {
    if state.resolved[d] {
        return None;
    }
    let start = counters.read(charge);
    let mut ops = start;
    let order = order_of(seq, occ, d, &mut state.scratch, &mut ops);
    state.resolved[d] = true;
    state.dominated_by[d] = d;

    // Slice T[d-1 .. succ(d-1)] into singletons. The boundary positions hold
    // a symbol absent from the area, so their separators are never removed
    // and fence the region; when d = 1 position 0 is the virtual boundary.
    let lo = d - 1;
    let hi = occ.succ(d - 1);
    let universe = hi - lo + 1;
    let mut uf = SliceUF::make(lo, hi);

    for idx in (1..=order.k()).rev() {
        let i = order.positions[idx];
        // Remove every separator of the symbol t_i by walking its succ chain
        // inside the area.
        let mut j = i;
        while j < hi {
            uf.remove_separator(j);
            ops += 1;
            j = occ.succ(j);
        }
        if !state.resolved[i] {
            let si = occ.succ(i - 1);
            // succ(i-1) beyond the slice universe cannot share a slice with
            // i; skip the find pair in that case.
            if si <= hi {
                ops += 2;
                if uf.find(i) == uf.find(si) {
                    state.resolved[i] = true;
                    state.dominated_by[i] = d;
                }
            }
        }
    }

    let fpairs = right_end(d, &order, &state.dominated_by, occ, &mut ops);
    debug_assert!(ops - start <= 8 * universe as u64 + 8);
    counters.bump(charge, ops - start);
    Some(DominationRecord {
        d,
        k: order.k(),
        fpairs,
    })
}

/// Computes last[h] = f(h) for every h > 1 whose position is strictly
/// dominated by d, i.e. B_{B_d[h]} = B_d[h..f(h)]. Emits the pairs in
/// decreasing h with (1, k) appended last.
pub fn right_end(
    d: Pos,
    order: &OrderSlice,
    dominated_by: &[Pos],
    occ: &OccIndex,
    ops: &mut u64,
) -> Vec<(usize, usize)> {
    let k = order.k();
    let b = &order.positions;
    let mut stack: Vec<(usize, Pos)> = Vec::new(); // (h, succ(b_h - 1))
    let mut last = vec![0usize; k + 1];
    for g in 2..=k {
        *ops += 1;
        while let Some(&(h, sc)) = stack.last() {
            if b[g] > sc {
                last[h] = g - 1;
                stack.pop();
                *ops += 1;
            } else {
                break;
            }
        }
        if dominated_by[b[g]] == d {
            let entry = (g, occ.succ(b[g] - 1));
            // Stack ordering: a newer pair sits above exactly when its h is
            // larger and its succ value is not larger.
            debug_assert!(stack.last().is_none_or(|&(h, sc)| h < g && entry.1 <= sc));
            stack.push(entry);
        }
    }
    while let Some((h, _)) = stack.pop() {
        last[h] = k;
        *ops += 1;
    }
    let mut fpairs = Vec::new();
    for h in (2..=k).rev() {
        if last[h] != 0 {
            fpairs.push((h, last[h]));
        }
    }
    fpairs.push((1, k));
    fpairs
}
