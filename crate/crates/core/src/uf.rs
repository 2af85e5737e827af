//! Union-Find over a universe of consecutive integers where unions only
//! merge neighboring slices. Serves the separator-removal step of the
//! domination resolver and the slice tracking of the guided search.
//!
//! `find` returns the smallest element of a slice, which downstream code
//! consumes directly as the slice id. Union-by-size with path compression
//! stands in for the specialized linear structure; the acceptance counters
//! budget for the inverse-Ackermann slack.

/// Slices of `[lo, hi]`, initially singletons with a separator on every
/// boundary. Boundary `b` sits between positions `b` and `b+1`.
#[derive(Debug, Clone)]
pub struct SliceUF {
    lo: usize,
    hi: usize,
    parent: Vec<u32>,
    size: Vec<u32>,
    min: Vec<u32>,       // per root: smallest member of the slice
    separated: Vec<bool>, // boundary b at index b - lo, for b in lo..hi
}

impl SliceUF {
    pub fn make(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi);
        let m = hi - lo + 1;
        SliceUF {
            lo,
            hi,
            parent: (0..m as u32).collect(),
            size: vec![1; m],
            min: (0..m as u32).collect(),
            separated: vec![true; m.saturating_sub(1)],
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    fn root(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    /// Smallest element of the slice containing `x`.
    pub fn find(&mut self, x: usize) -> usize {
        debug_assert!(x >= self.lo && x <= self.hi);
        let r = self.root((x - self.lo) as u32);
        self.min[r as usize] as usize + self.lo
    }

    /// Removes the separator after position `b`, merging the slices holding
    /// `b` and `b+1`. Idempotent.
    pub fn remove_separator(&mut self, b: usize) {
        debug_assert!(b >= self.lo && b < self.hi);
        let idx = b - self.lo;
        if !self.separated[idx] {
            return;
        }
        self.separated[idx] = false;
        let a = self.root(idx as u32);
        let c = self.root(idx as u32 + 1);
        debug_assert_ne!(a, c);
        let (big, small) = if self.size[a as usize] >= self.size[c as usize] {
            (a, c)
        } else {
            (c, a)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        let m = self.min[a as usize].min(self.min[c as usize]);
        self.min[big as usize] = m;
    }

    /// Whether the boundary after `b` still separates.
    pub fn is_separated(&self, b: usize) -> bool {
        self.separated[b - self.lo]
    }
}
