//! Brute-force reference implementations of every output of the system.
//! Used only by tests and the CLI `verify` mode; correctness over speed.

use std::collections::HashMap;

use crate::model::{Error, Location, Pos, Sequence, Sym};

/// Bumped whenever oracle semantics change; golden files record it so stale
/// expectations fail loudly.
pub const ORACLE_VERSION: &str = "v1";

/// One `(T,S)`-location pair of a common interval, with the interval's
/// symbols sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NaivePair {
    pub t_loc: Location,
    pub s_loc: Location,
    pub interval: Vec<Sym>,
}

type SetKey = Box<[u64]>;

fn set_bit(bits: &mut [u64], c: Sym) {
    bits[c / 64] |= 1 << (c % 64);
}

fn test_bit(bits: &[u64], c: Sym) -> bool {
    bits[c / 64] & (1 << (c % 64)) != 0
}

fn decode(bits: &[u64]) -> Vec<Sym> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let b = word.trailing_zeros() as usize;
            out.push(w * 64 + b);
            word &= word - 1;
        }
    }
    out
}

/// Maximal locations on one sequence, grouped by symbol set.
fn maximal_by_set(seq: &Sequence) -> HashMap<SetKey, Vec<Location>> {
    let n = seq.len();
    let words = seq.alphabet_size() / 64 + 1;
    let mut map: HashMap<SetKey, Vec<Location>> = HashMap::new();
    for i in 1..=n {
        let mut bits = vec![0u64; words];
        for j in i..=n {
            set_bit(&mut bits, seq.sym(j));
            let left_ok = i == 1 || !test_bit(&bits, seq.sym(i - 1));
            let right_ok = j == n || !test_bit(&bits, seq.sym(j + 1));
            if left_ok && right_ok {
                map.entry(bits.clone().into_boxed_slice())
                    .or_default()
                    .push(Location::new(i, j));
            }
        }
    }
    map
}

/// Maxmin (left-maximal, right-minimal) locations grouped by symbol set.
fn maxmin_by_set(seq: &Sequence) -> HashMap<SetKey, Vec<Location>> {
    let n = seq.len();
    let words = seq.alphabet_size() / 64 + 1;
    let mut map: HashMap<SetKey, Vec<Location>> = HashMap::new();
    for i in 1..=n {
        let mut bits = vec![0u64; words];
        for j in i..=n {
            let fresh = !test_bit(&bits, seq.sym(j));
            set_bit(&mut bits, seq.sym(j));
            let left_ok = i == 1 || !test_bit(&bits, seq.sym(i - 1));
            if fresh && left_ok {
                map.entry(bits.clone().into_boxed_slice())
                    .or_default()
                    .push(Location::new(i, j));
            }
        }
    }
    map
}

fn join_maps(
    t_map: HashMap<SetKey, Vec<Location>>,
    s_map: HashMap<SetKey, Vec<Location>>,
    min_size: usize,
) -> Vec<NaivePair> {
    let mut out = Vec::new();
    for (key, t_locs) in &t_map {
        let Some(s_locs) = s_map.get(key) else {
            continue;
        };
        let interval = decode(key);
        if interval.len() < min_size {
            continue;
        }
        for &t_loc in t_locs {
            for &s_loc in s_locs {
                out.push(NaivePair {
                    t_loc,
                    s_loc,
                    interval: interval.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

fn check_cap(t: &Sequence, s: &Sequence, cap: usize) -> Result<(), Error> {
    let m = t.len().max(s.len());
    if m > cap {
        return Err(Error::CapExceeded(m, cap));
    }
    Ok(())
}

/// All `(T,S)`-maximal location pairs of common intervals with at least
/// `min_size` symbols, lexicographically sorted by (i, j, y, z).
pub fn naive_common(
    t: &Sequence,
    s: &Sequence,
    min_size: usize,
    cap: usize,
) -> Result<Vec<NaivePair>, Error> {
    check_cap(t, s, cap)?;
    Ok(join_maps(maximal_by_set(t), maximal_by_set(s), min_size))
}

/// Maxmin flavor of [`naive_common`].
pub fn naive_maxmin_common(
    t: &Sequence,
    s: &Sequence,
    min_size: usize,
    cap: usize,
) -> Result<Vec<NaivePair>, Error> {
    check_cap(t, s, cap)?;
    Ok(join_maps(maxmin_by_set(t), maxmin_by_set(s), min_size))
}

/// Drops the rightmost element of `[i, j]` while it has a copy on its left
/// within the window; lands on the maxmin location paired with the maximal
/// one by the location bijection.
pub fn shrink_to_maxmin(seq: &Sequence, loc: Location) -> Location {
    let mut j = loc.end;
    'outer: while j > loc.begin {
        for k in loc.begin..j {
            if seq.sym(k) == seq.sym(j) {
                j -= 1;
                continue 'outer;
            }
        }
        break;
    }
    Location::new(loc.begin, j)
}

/// Checks that maximal and maxmin locations are in bijection on every
/// interval of `seq` (shrinking each maximal location yields each maxmin
/// location exactly once).
pub fn maximal_maxmin_bijection_holds(seq: &Sequence) -> bool {
    let maximal = maximal_by_set(seq);
    let maxmin = maxmin_by_set(seq);
    if maximal.len() != maxmin.len() {
        return false;
    }
    for (key, locs) in &maximal {
        let Some(mm) = maxmin.get(key) else {
            return false;
        };
        let mut shrunk: Vec<Location> = locs.iter().map(|&l| shrink_to_maxmin(seq, l)).collect();
        shrunk.sort();
        let mut mm = mm.clone();
        mm.sort();
        if shrunk != mm {
            return false;
        }
    }
    true
}

/// Definition-level domination labels for a deduplicated sequence.
#[derive(Debug, Clone)]
pub struct NaiveDomination {
    /// Dominating positions, increasing.
    pub dominating: Vec<Pos>,
    /// Position i -> smallest d whose order dominates O_i (the strict
    /// dominator; equals i when O_i is dominating). Slot 0 unused.
    pub dominated_by: Vec<Pos>,
    /// For each dominating d (aligned with `dominating`): the pairs
    /// (s, F_d(s)) sorted by decreasing s, (1, k_d) last.
    pub fpairs: Vec<Vec<(usize, usize)>>,
}

fn naive_orders(seq: &Sequence) -> Vec<Vec<Pos>> {
    let n = seq.len();
    let mut orders = vec![Vec::new()];
    for i in 1..=n {
        // Area ends just before the next copy of t[i-1].
        let mut end = n;
        if i > 1 {
            for j in i..=n {
                if seq.sym(j) == seq.sym(i - 1) {
                    end = j - 1;
                    break;
                }
            }
        }
        let mut b = Vec::new();
        let mut seen = Vec::new();
        for j in i..=end {
            if !seen.contains(&seq.sym(j)) {
                seen.push(seq.sym(j));
                b.push(j);
            }
        }
        orders.push(b);
    }
    orders
}

fn is_contiguous_subseq(inner: &[Pos], outer: &[Pos]) -> Option<(usize, usize)> {
    if inner.is_empty() || inner.len() > outer.len() {
        return None;
    }
    let start = outer.iter().position(|&x| x == inner[0])?;
    if start + inner.len() > outer.len() {
        return None;
    }
    if &outer[start..start + inner.len()] == inner {
        Some((start + 1, start + inner.len())) // 1-based (s, f)
    } else {
        None
    }
}

/// Labels every order of a deduplicated sequence by its strict dominator and
/// reconstructs each domination function, straight from the definitions.
pub fn naive_domination(seq: &Sequence) -> NaiveDomination {
    let n = seq.len();
    let orders = naive_orders(seq);
    let mut dominated_by = vec![0; n + 1];
    for i in 1..=n {
        for d in 1..=i {
            if is_contiguous_subseq(&orders[i], &orders[d]).is_some() {
                dominated_by[i] = d;
                break;
            }
        }
        debug_assert_ne!(dominated_by[i], 0);
    }
    let dominating: Vec<Pos> = (1..=n).filter(|&i| dominated_by[i] == i).collect();
    let mut fpairs = Vec::new();
    for &d in &dominating {
        let mut pairs: Vec<(usize, usize)> = (1..=n)
            .filter(|&i| dominated_by[i] == d)
            .map(|i| is_contiguous_subseq(&orders[i], &orders[d]).unwrap())
            .collect();
        pairs.sort_by(|a, b| b.0.cmp(&a.0));
        fpairs.push(pairs);
    }
    NaiveDomination {
        dominating,
        dominated_by,
        fpairs,
    }
}

/// All ranges (s..u), u > s, that are intervals of `pi` and valid with
/// respect to both partial functions: F on the identity side (F(s) defined,
/// u <= F(s)) and Phi on the `pi` side (Phi(y) defined, z <= Phi(y), where
/// [y, z] is the location on `pi`). Arrays are 1-based; 0 means undefined.
pub fn naive_valid_common(
    pi: &[usize],
    f: &[usize],
    phi: &[usize],
) -> Vec<(usize, usize, usize, usize)> {
    let p = pi.len() - 1;
    let mut inv = vec![0; p + 1];
    for pos in 1..=p {
        inv[pi[pos]] = pos;
    }
    let mut out = Vec::new();
    for s in 1..=p {
        let mut y = inv[s];
        let mut z = inv[s];
        for u in s + 1..=p {
            y = y.min(inv[u]);
            z = z.max(inv[u]);
            let is_interval = z - y == u - s;
            if !is_interval {
                continue;
            }
            let f_ok = f[s] != 0 && u <= f[s];
            let phi_ok = phi[y] != 0 && z <= phi[y];
            if f_ok && phi_ok {
                out.push((s, u, y, z));
            }
        }
    }
    out
}

/// Test-only gap bounds: for each s, the min and max value of `pi` between
/// the positions of s and s+1 (both included). 1-based, entries 1..p-1.
pub fn naive_gap_bounds(pi: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let p = pi.len() - 1;
    let mut inv = vec![0; p + 1];
    for pos in 1..=p {
        inv[pi[pos]] = pos;
    }
    let mut m = vec![0; p.max(1)];
    let mut mx = vec![0; p.max(1)];
    for s in 1..p {
        let lo = inv[s].min(inv[s + 1]);
        let hi = inv[s].max(inv[s + 1]);
        m[s] = (lo..=hi).map(|pos| pi[pos]).min().unwrap();
        mx[s] = (lo..=hi).map(|pos| pi[pos]).max().unwrap();
    }
    (m, mx)
}
