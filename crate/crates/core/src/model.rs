//! Sequence representation, alphabet encoding, occurrence indexes, orders
//! and location conversions.
//!
//! Everything position-like is 1-based inclusive, matching the external
//! contract; vectors carry an unused slot 0 so formulas read without offset
//! arithmetic. Position 0 and position n+1 hold a virtual boundary symbol
//! (code p+1) that is never stored or emitted.

use std::collections::HashMap;

/// 1-based position within a sequence.
pub type Pos = usize;
/// Symbol code, in 1..=p.
pub type Sym = usize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,
    #[error("integer token must be positive, got `{0}`")]
    BadInt(String),
    #[error("input size {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
    #[error("range [{0}, {1}] out of bounds 1..={2}")]
    RangeOutOfBounds(usize, usize, usize),
}

/// An encoded sequence: symbol codes at positions 1..=n over alphabet 1..=p.
///
/// Invariant after [`dedup`]: no two adjacent positions hold equal codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    syms: Vec<Sym>, // len n+1, index 0 unused
    p: usize,
}

impl Sequence {
    /// Builds from 1-based-intent codes (slice is 0-based, code order kept).
    pub fn from_codes(codes: &[Sym], p: usize) -> Self {
        debug_assert!(codes.iter().all(|&c| c >= 1 && c <= p));
        let mut syms = Vec::with_capacity(codes.len() + 1);
        syms.push(0);
        syms.extend_from_slice(codes);
        Sequence { syms, p }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.syms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn alphabet_size(&self) -> usize {
        self.p
    }

    /// Symbol at 1-based position i.
    #[inline]
    pub fn sym(&self, i: Pos) -> Sym {
        self.syms[i]
    }

    /// Codes as a 0-based slice (position i at index i-1).
    pub fn codes(&self) -> &[Sym] {
        &self.syms[1..]
    }
}

/// Bijective token <-> code table; codes assigned by first appearance,
/// T scanned before S.
#[derive(Debug, Clone, Default)]
pub struct TokenMap {
    by_token: HashMap<String, Sym>,
    by_code: Vec<String>, // code c at index c-1
}

impl TokenMap {
    fn intern(&mut self, tok: &str) -> Sym {
        if let Some(&c) = self.by_token.get(tok) {
            return c;
        }
        let c = self.by_code.len() + 1;
        self.by_code.push(tok.to_string());
        self.by_token.insert(tok.to_string(), c);
        c
    }

    pub fn token(&self, code: Sym) -> &str {
        &self.by_code[code - 1]
    }

    pub fn code(&self, tok: &str) -> Option<Sym> {
        self.by_token.get(tok).copied()
    }

    pub fn len(&self) -> usize {
        self.by_code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_code.is_empty()
    }
}

/// Encodes two token streams over a shared alphabet. Symbols present in only
/// one sequence are kept; the guided-search validity filters guarantee they
/// never reach the output.
pub fn encode<S: AsRef<str>>(
    tokens_t: &[S],
    tokens_s: &[S],
) -> Result<(Sequence, Sequence, TokenMap), Error> {
    if tokens_t.is_empty() || tokens_s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut map = TokenMap::default();
    let t: Vec<Sym> = tokens_t.iter().map(|x| map.intern(x.as_ref())).collect();
    let s: Vec<Sym> = tokens_s.iter().map(|x| map.intern(x.as_ref())).collect();
    let p = map.len();
    Ok((Sequence::from_codes(&t, p), Sequence::from_codes(&s, p), map))
}

/// Integer mode: tokens are positive integers used directly as codes;
/// p is the maximum value seen.
pub fn encode_ints(ints_t: &[usize], ints_s: &[usize]) -> Result<(Sequence, Sequence), Error> {
    if ints_t.is_empty() || ints_s.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(&bad) = ints_t.iter().chain(ints_s.iter()).find(|&&v| v == 0) {
        return Err(Error::BadInt(bad.to_string()));
    }
    let p = ints_t.iter().chain(ints_s.iter()).copied().max().unwrap();
    Ok((Sequence::from_codes(ints_t, p), Sequence::from_codes(ints_s, p)))
}

/// A position range [begin, end], 1-based inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub begin: Pos,
    pub end: Pos,
}

impl Location {
    pub fn new(begin: Pos, end: Pos) -> Self {
        debug_assert!(begin <= end);
        Location { begin, end }
    }
}

/// Maps a deduplicated position to the original run of equal symbols it
/// replaced. Runs partition 1..n_original.
#[derive(Debug, Clone)]
pub struct PositionMap {
    runs: Vec<(Pos, Pos)>, // index i (1-based, slot 0 unused) -> (first, last)
}

impl PositionMap {
    /// Run extent of a dedup position.
    #[inline]
    pub fn run(&self, dedup_pos: Pos) -> (Pos, Pos) {
        self.runs[dedup_pos]
    }

    pub fn is_identity(&self) -> bool {
        self.runs.iter().skip(1).all(|&(a, b)| a == b)
    }
}

/// Collapses every run of adjacent equal codes to its first element, so that
/// no order of the result is empty. Returns the collapsed sequence and the
/// run map used to restore original coordinates.
pub fn dedup(seq: &Sequence) -> (Sequence, PositionMap) {
    let n = seq.len();
    let mut codes = Vec::new();
    let mut runs = vec![(0, 0)];
    let mut i = 1;
    while i <= n {
        let c = seq.sym(i);
        let first = i;
        while i + 1 <= n && seq.sym(i + 1) == c {
            i += 1;
        }
        codes.push(c);
        runs.push((first, i));
        i += 1;
    }
    (
        Sequence::from_codes(&codes, seq.alphabet_size()),
        PositionMap { runs },
    )
}

/// Occurrence links. `succ[i]` (0 <= i <= n) is the smallest j > i with the
/// same symbol, else n+1; `prec[i]` (1 <= i <= n+1) is the largest j < i with
/// the same symbol, else 0. Positions 0 and n+1 hold the virtual boundary
/// symbol, so succ[0] = n+1 and prec[n+1] = 0.
#[derive(Debug, Clone)]
pub struct OccIndex {
    succ: Vec<Pos>,
    prec: Vec<Pos>,
}

impl OccIndex {
    #[inline]
    pub fn succ(&self, i: Pos) -> Pos {
        self.succ[i]
    }

    #[inline]
    pub fn prec(&self, i: Pos) -> Pos {
        self.prec[i]
    }

    /// succ entries for indices 0..=n (test surface).
    pub fn succ_slice(&self) -> &[Pos] {
        &self.succ[..self.succ.len() - 1]
    }

    /// prec entries for indices 1..=n+1 (test surface).
    pub fn prec_slice(&self) -> &[Pos] {
        &self.prec[1..]
    }
}

/// Builds Succ/Prec for a deduplicated sequence in O(n + p).
pub fn build_occ_index(seq: &Sequence) -> OccIndex {
    let n = seq.len();
    let p = seq.alphabet_size();
    let mut succ = vec![n + 1; n + 2];
    let mut prec = vec![0; n + 2];
    // last[c] = most recent position of symbol c; boundary symbol is p+1.
    let mut last = vec![0usize; p + 2];
    for i in 1..=n {
        let c = seq.sym(i);
        let prev = last[c];
        prec[i] = prev;
        if prev > 0 {
            succ[prev] = i;
        }
        last[c] = i;
    }
    // Virtual boundary at 0 and n+1: succ[0] stays n+1, prec[n+1] stays 0.
    OccIndex { succ, prec }
}

/// The order O_i of position i: distinct symbols of the area
/// A_i = T[i .. succ(i-1)-1] in first-occurrence order, with their positions
/// B_i. Stored 1-based with an unused slot 0, so values[1] = t_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSlice {
    pub values: Vec<Sym>,
    pub positions: Vec<Pos>,
}

impl OrderSlice {
    #[inline]
    pub fn k(&self) -> usize {
        self.values.len() - 1
    }
}

/// Epoch-stamped scratch so repeated `order_of` calls cost O(||A_i||)
/// without clearing. Sized p+2; confined to one search context.
#[derive(Debug, Clone)]
pub struct OrderScratch {
    stamp: Vec<u64>,
    epoch: u64,
}

impl OrderScratch {
    pub fn new(p: usize) -> Self {
        OrderScratch {
            stamp: vec![0; p + 2],
            epoch: 0,
        }
    }
}

/// Scans A_i left to right, skipping symbols already seen. Cost is charged
/// one unit per visited position.
pub fn order_of(
    seq: &Sequence,
    occ: &OccIndex,
    i: Pos,
    scratch: &mut OrderScratch,
    ops: &mut u64,
) -> OrderSlice {
    debug_assert!(i >= 1 && i <= seq.len());
    scratch.epoch += 1;
    let epoch = scratch.epoch;
    let end = occ.succ(i - 1) - 1;
    let mut values = vec![0];
    let mut positions = vec![0];
    for j in i..=end {
        *ops += 1;
        let c = seq.sym(j);
        if scratch.stamp[c] != epoch {
            scratch.stamp[c] = epoch;
            values.push(c);
            positions.push(j);
        }
    }
    OrderSlice { values, positions }
}

/// Converts the maxmin location [B_d[s], B_d[u]] (s <= u <= F_d(s) = f_s)
/// into the maximal location of the same interval: the right end extends to
/// just before the next order element, or to the end of the area.
pub fn to_maximal(b_d: &[Pos], s: usize, u: usize, f_s: usize, occ: &OccIndex) -> Location {
    debug_assert!(s <= u && u <= f_s && f_s < b_d.len());
    let i = b_d[s];
    let j_max = if u < f_s {
        b_d[u + 1] - 1
    } else {
        occ.succ(i - 1) - 1
    };
    Location::new(i, j_max)
}

/// Restores a maximal location from dedup to original coordinates: the begin
/// maps to the first index of its run, the end to the last.
pub fn expand_to_original(loc: Location, map: &PositionMap) -> Location {
    Location::new(map.run(loc.begin).0, map.run(loc.end).1)
}

/// Restores a maxmin location: right-minimality means the end maps to the
/// first index of its run.
pub fn expand_maxmin_to_original(loc: Location, map: &PositionMap) -> Location {
    Location::new(map.run(loc.begin).0, map.run(loc.end).0)
}
