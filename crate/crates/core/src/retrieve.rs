//! Regenerates dominating orders one at a time in decreasing d, in O(qp)
//! total node visits, from the position list produced by `resolve_all`.
//!
//! A doubly-linked list W over positions 1..n shrinks as orders are
//! consumed: after visiting order d, the scan towards the area end of the
//! next dominating position d' removes every position with a left copy
//! inside that area (prec >= d'), stopping at the position that closes the
//! area (prec = d'-1, removed too). What remains of W between d' and the
//! last survivor is exactly B_{d'}.

use crate::model::{OccIndex, Pos, Sequence, Sym};

/// One regenerated order. Slices are 1-based with an unused slot 0 and are
/// only valid during the visit; copy anything retained past it.
#[derive(Debug)]
pub struct OrderView<'a> {
    pub d: Pos,
    pub values: &'a [Sym],
    pub positions: &'a [Pos],
}

impl OrderView<'_> {
    pub fn k(&self) -> usize {
        self.values.len() - 1
    }
}

/// Lending iterator over the dominating orders, largest d first.
pub struct OrderStream<'a> {
    seq: &'a Sequence,
    occ: &'a OccIndex,
    doms: &'a [Pos], // increasing; consumed from the back
    next_idx: usize, // index into doms of the next order to visit (from top)
    next_node: Vec<Pos>,
    prev_node: Vec<Pos>,
    e: Pos, // node holding the last element of the next order's area
    vals: Vec<Sym>,
    poss: Vec<Pos>,
    ops: u64,
}

impl<'a> OrderStream<'a> {
    pub fn new(seq: &'a Sequence, occ: &'a OccIndex, doms: &'a [Pos]) -> Self {
        let n = seq.len();
        debug_assert!(doms.windows(2).all(|w| w[0] < w[1]));
        // Sentinels: node 0 = head, node n+1 = tail.
        let next_node: Vec<Pos> = (1..=n + 2).collect();
        let prev_node: Vec<Pos> = (0..=n + 1).map(|x| x.wrapping_sub(1)).collect();
        OrderStream {
            seq,
            occ,
            doms,
            next_idx: doms.len(),
            next_node,
            prev_node,
            e: n,
            vals: Vec::new(),
            poss: Vec::new(),
            ops: n as u64,
        }
    }

    /// Node visits so far (list setup counts n).
    pub fn ops(&self) -> u64 {
        self.ops
    }

    /// Current contents of W, for diagnostics and tests.
    pub fn window(&self) -> Vec<Pos> {
        let n = self.seq.len();
        let mut out = Vec::new();
        let mut cur = self.next_node[0];
        while cur != n + 1 {
            out.push(cur);
            cur = self.next_node[cur];
        }
        out
    }

    fn unlink(&mut self, node: Pos) {
        let (p, nx) = (self.prev_node[node], self.next_node[node]);
        self.next_node[p] = nx;
        self.prev_node[nx] = p;
    }

    /// Produces the next dominating order, or None when all were visited.
    pub fn next_order(&mut self) -> Option<OrderView<'_>> {
        if self.next_idx == 0 {
            return None;
        }
        self.next_idx -= 1;
        let d = self.doms[self.next_idx];

        // B*_d = W[d..e]. Positions 1..d are never removed before d is
        // visited, so the node holding value d is node d itself.
        self.vals.clear();
        self.poss.clear();
        self.vals.push(0);
        self.poss.push(0);
        let mut cur = d;
        loop {
            self.ops += 1;
            debug_assert!(cur <= self.seq.len());
            self.vals.push(self.seq.sym(cur));
            self.poss.push(cur);
            if cur == self.e {
                break;
            }
            cur = self.next_node[cur];
        }

        if self.next_idx > 0 {
            let d_next = self.doms[self.next_idx - 1];
            // If every scanned node is removed, the last element of the next
            // order's B is the scan start's predecessor.
            self.e = self.prev_node[d];
            let n = self.seq.len();
            let mut cur = d;
            while cur != n + 1 {
                self.ops += 1;
                let nx = self.next_node[cur];
                let pr = self.occ.prec(cur);
                if pr + 1 == d_next && d_next != 1 {
                    // Area end of d_next: remove and stop the scan.
                    self.unlink(cur);
                    break;
                } else if pr >= d_next {
                    self.unlink(cur);
                } else {
                    self.e = cur;
                }
                cur = nx;
            }
        }

        Some(OrderView {
            d,
            values: &self.vals,
            positions: &self.poss,
        })
    }
}

/// Callback-style wrapper; returns the node-visit count.
pub fn stream_orders(
    seq: &Sequence,
    occ: &OccIndex,
    doms: &[Pos],
    visit: &mut dyn FnMut(&OrderView),
) -> u64 {
    let mut stream = OrderStream::new(seq, occ, doms);
    while let Some(view) = stream.next_order() {
        visit(&view);
    }
    stream.ops()
}
