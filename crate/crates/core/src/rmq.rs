//! Range minimum/maximum queries over integer arrays via a sparse table:
//! O(m log m) build, O(1) query. Arrays are 1-based (slot 0 ignored).

use crate::model::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Min,
    Max,
}

#[derive(Debug, Clone)]
pub struct RangeTable {
    mode: Mode,
    m: usize,
    // rows[j][i] = index (1-based) of the extremum in [i, i + 2^j - 1];
    // leftmost position wins ties.
    rows: Vec<Vec<u32>>,
    vals: Vec<usize>,
}

impl RangeTable {
    /// Builds over `vals[1..]`; `vals[0]` is an ignored placeholder.
    /// Charges one unit per table cell to `ops`.
    pub fn build(vals: &[usize], mode: Mode, ops: &mut u64) -> Self {
        let m = vals.len() - 1;
        assert!(m >= 1, "empty array");
        let levels = usize::BITS as usize - m.leading_zeros() as usize; // floor(log2 m) + 1
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(levels);
        rows.push((0..=m as u32).collect());
        *ops += m as u64;
        for j in 1..levels {
            let half = 1usize << (j - 1);
            let width = 1usize << j;
            let prev = &rows[j - 1];
            let mut row = vec![0u32; m - width + 2];
            for i in 1..=m - width + 1 {
                let a = prev[i];
                let b = prev[i + half];
                row[i] = Self::pick(vals, mode, a, b);
            }
            *ops += (m - width + 1) as u64;
            rows.push(row);
        }
        RangeTable {
            mode,
            m,
            rows,
            vals: vals.to_vec(),
        }
    }

    #[inline]
    fn pick(vals: &[usize], mode: Mode, a: u32, b: u32) -> u32 {
        let (va, vb) = (vals[a as usize], vals[b as usize]);
        let better = match mode {
            Mode::Min => vb < va,
            Mode::Max => vb > va,
        };
        // On ties the smaller index (a, scanned first) wins.
        if better {
            b
        } else {
            a
        }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Extremal value on [lo, hi]. Panics if the range is out of bounds; use
    /// [`RangeTable::checked_query`] for a fallible variant.
    #[inline]
    pub fn query(&self, lo: usize, hi: usize, ops: &mut u64) -> usize {
        self.vals[self.arg_query(lo, hi, ops)]
    }

    /// Leftmost position attaining the extremum on [lo, hi].
    #[inline]
    pub fn arg_query(&self, lo: usize, hi: usize, ops: &mut u64) -> usize {
        assert!(
            lo >= 1 && lo <= hi && hi <= self.m,
            "range [{lo}, {hi}] out of bounds 1..={}",
            self.m
        );
        *ops += 1;
        let j = (usize::BITS - 1) as usize - (hi - lo + 1).leading_zeros() as usize;
        let a = self.rows[j][lo];
        let b = self.rows[j][hi - (1 << j) + 1];
        if (b as usize) < (a as usize) {
            // Overlapping halves; keep the leftmost attaining index.
            Self::pick(&self.vals, self.mode, b, a) as usize
        } else {
            Self::pick(&self.vals, self.mode, a, b) as usize
        }
    }

    pub fn checked_query(&self, lo: usize, hi: usize, ops: &mut u64) -> Result<usize, Error> {
        if lo < 1 || lo > hi || hi > self.m {
            return Err(Error::RangeOutOfBounds(lo, hi, self.m));
        }
        Ok(self.query(lo, hi, ops))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(vals: &[usize], mode: Mode) -> RangeTable {
        let mut v = vec![0];
        v.extend_from_slice(vals);
        RangeTable::build(&v, mode, &mut 0)
    }

    #[test]
    fn min_query_on_sample_permutation() {
        let t = table(&[5, 3, 1, 4, 2, 6], Mode::Min);
        assert_eq!(t.query(3, 5, &mut 0), 1);
    }

    #[test]
    fn singleton() {
        let t = table(&[7], Mode::Min);
        assert_eq!(t.query(1, 1, &mut 0), 7);
    }

    #[test]
    fn max_query_on_sample_permutation() {
        let t = table(&[5, 3, 1, 4, 2, 6], Mode::Max);
        assert_eq!(t.query(1, 5, &mut 0), 5);
    }

    #[test]
    fn trivial_min() {
        let t = table(&[1, 2, 3], Mode::Min);
        assert_eq!(t.query(1, 3, &mut 0), 1);
    }

    #[test]
    fn inverse_array_queries() {
        // Inverse of 5 3 1 4 2 6 (value -> position).
        let inv = [3, 5, 2, 4, 1, 6];
        assert_eq!(table(&inv, Mode::Min).query(2, 4, &mut 0), 2);
        assert_eq!(table(&inv, Mode::Max).query(2, 4, &mut 0), 5);
    }

    #[test]
    fn out_of_range_is_an_error() {
        let t = table(&[1, 2, 3], Mode::Min);
        assert!(matches!(
            t.checked_query(2, 4, &mut 0),
            Err(Error::RangeOutOfBounds(2, 4, 3))
        ));
        assert!(t.checked_query(0, 1, &mut 0).is_err());
        assert_eq!(t.checked_query(2, 3, &mut 0), Ok(2));
    }

    #[test]
    fn matches_naive_scan_on_random_inputs() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut checked = 0usize;
        while checked < 10_000 {
            let m = 1 + (next() % 60) as usize;
            let vals: Vec<usize> = (0..m).map(|_| (next() % 50) as usize).collect();
            let tmin = table(&vals, Mode::Min);
            let tmax = table(&vals, Mode::Max);
            for _ in 0..20 {
                let lo = 1 + (next() as usize) % m;
                let hi = lo + (next() as usize) % (m - lo + 1);
                let naive_min = *vals[lo - 1..hi].iter().min().unwrap();
                let naive_max = *vals[lo - 1..hi].iter().max().unwrap();
                assert_eq!(tmin.query(lo, hi, &mut 0), naive_min);
                assert_eq!(tmax.query(lo, hi, &mut 0), naive_max);
                // Leftmost tie rule.
                let arg = tmin.arg_query(lo, hi, &mut 0);
                let first = (lo..=hi).find(|&i| vals[i - 1] == naive_min).unwrap();
                assert_eq!(arg, first);
                let arg = tmax.arg_query(lo, hi, &mut 0);
                let first = (lo..=hi).find(|&i| vals[i - 1] == naive_max).unwrap();
                assert_eq!(arg, first);
                checked += 1;
            }
        }
    }
}
