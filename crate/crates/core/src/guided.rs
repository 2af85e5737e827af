//! Guided common-interval search for one pair of dominating orders.
//!
//! The T-side order is renumbered to the identity, the S-side order to a
//! permutation pi, and both are padded with the remaining alphabet symbols
//! at their tails (the validity functions are left untouched, so padded
//! symbols can never appear in output). Per-gap bounding values are derived
//! from the pi-side validity function via a separator scan plus range
//! queries, and a left/right candidate stack pass emits, per start value s,
//! the valid common intervals in increasing order of their maximum.

use crate::model::{Location, Pos, Sym};
use crate::retrieve::OrderView;
use crate::rmq::{Mode, RangeTable};
use crate::uf::SliceUF;

/// Renumbered, padded pair. All arrays are 1-based with slot 0 unused.
/// Positions 1..=k_d of the identity side carry the T-order; positions
/// 1..=k_delta of `pi` carry the S-order; the tails hold padding. The back
/// maps to the orders' position lists are the identity on the live prefixes.
#[derive(Debug, Clone)]
pub struct RenumberedPair {
    pub p: usize,
    pub k_d: usize,
    pub k_delta: usize,
    pub pi: Vec<usize>,
    pub pi_inv: Vec<usize>,
    /// Identity-side validity: f[s] = end of the suborder starting at s,
    /// 0 when undefined. f[1] = k_d always.
    pub f: Vec<usize>,
    /// pi-side validity, same encoding. phi[1] = k_delta always.
    pub phi: Vec<usize>,
    /// Renumbered code -> original symbol.
    pub orig_of: Vec<Sym>,
}

/// One emitted common interval: the value range (s..u), its location [y, z]
/// on pi, and the validity endpoints needed for maximal-location conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hit {
    pub s: usize,
    pub u: usize,
    pub y: usize,
    pub z: usize,
    pub f_s: usize,
    pub phi_y: usize,
}

/// Renumbers the pair of orders onto a common alphabet of size `p` (the
/// sequences' full alphabet). T-order elements take codes 1..k_d in order,
/// S-only elements continue from k_d+1 in order of appearance, and symbols
/// absent from both orders are coded last, ascending. pi is the renumbered
/// S-order followed by every unused code ascending.
pub fn renumber_and_pad(
    p: usize,
    d_view: &OrderView,
    d_fpairs: &[(usize, usize)],
    delta_view: &OrderView,
    delta_fpairs: &[(usize, usize)],
    ops: &mut u64,
) -> RenumberedPair {
    let k_d = d_view.k();
    let k_delta = delta_view.k();
    let mut code_of = vec![0usize; p + 1];
    let mut orig_of = vec![0; p + 1];
    for w in 1..=k_d {
        let c = d_view.values[w];
        code_of[c] = w;
        orig_of[w] = c;
    }
    let mut next = k_d;
    let mut pi = vec![0];
    for y in 1..=k_delta {
        let c = delta_view.values[y];
        if code_of[c] == 0 {
            next += 1;
            code_of[c] = next;
            orig_of[next] = c;
        }
        pi.push(code_of[c]);
    }
    for c in 1..=p {
        if code_of[c] == 0 {
            next += 1;
            code_of[c] = next;
            orig_of[next] = c;
        }
    }
    debug_assert_eq!(next, p);
    let mut used = vec![false; p + 1];
    for &v in &pi[1..] {
        used[v] = true;
    }
    for v in 1..=p {
        if !used[v] {
            pi.push(v);
        }
    }
    let mut pi_inv = vec![0; p + 1];
    for pos in 1..=p {
        pi_inv[pi[pos]] = pos;
    }
    let mut f = vec![0; p + 1];
    for &(s, fv) in d_fpairs {
        f[s] = fv;
    }
    let mut phi = vec![0; p + 1];
    for &(w, fv) in delta_fpairs {
        phi[w] = fv;
    }
    debug_assert_eq!(f[1], k_d);
    debug_assert_eq!(phi[1], k_delta);
    *ops += 4 * p as u64 + k_d as u64 + k_delta as u64;
    RenumberedPair {
        p,
        k_d,
        k_delta,
        pi,
        pi_inv,
        f,
        phi,
        orig_of,
    }
}

/// For each gap s, the largest start w such that pi[w..phi(w)] contains both
/// s and s+1; 0 when no defined range encloses the pair. Runs the separator
/// scan over pi: slices merge when a range's right separator is passed, and
/// when the later of {s, s+1} is scanned the current slice minimum of the
/// earlier one is the candidate. Padding breaks the closed-world premise, so
/// every candidate is post-validated against its range and demoted to
/// undefined on failure.
pub fn compute_v(pi: &[usize], pi_inv: &[usize], phi: &[usize], ops: &mut u64) -> Vec<usize> {
    let p = pi.len() - 1;
    let mut v = vec![0usize; p + 1];
    if p < 2 {
        return v;
    }
    // Several separators can share a boundary (nested right ends, or a range
    // closing right before another opens); a slice opens only when the last
    // one goes.
    let mut sep_count = vec![0u32; p]; // boundary after position b at index b
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); p + 1]; // end position -> starts
    for w in 1..=p {
        if phi[w] == 0 {
            continue;
        }
        if w >= 2 {
            sep_count[w - 1] += 1;
        }
        if phi[w] < p {
            sep_count[phi[w]] += 1;
        }
        ends[phi[w]].push(w);
        *ops += 1;
    }
    let mut uf = SliceUF::make(1, p);
    for b in 1..p {
        if sep_count[b] == 0 {
            uf.remove_separator(b);
        }
        *ops += 1;
    }
    let drop_sep = |uf: &mut SliceUF, sep_count: &mut Vec<u32>, b: usize| {
        if b >= 1 && b < p {
            sep_count[b] -= 1;
            if sep_count[b] == 0 {
                uf.remove_separator(b);
            }
        }
    };
    for j in 1..=p {
        if j >= 2 {
            // Right separators sitting between the values at j-1 and j.
            for wi in 0..ends[j - 1].len() {
                let w = ends[j - 1][wi];
                drop_sep(&mut uf, &mut sep_count, w - 1);
                drop_sep(&mut uf, &mut sep_count, j - 1);
                *ops += 1;
            }
        }
        let val = pi[j];
        *ops += 1;
        if val >= 2 && pi_inv[val - 1] < j {
            v[val - 1] = uf.find(pi_inv[val - 1]);
            *ops += 1;
        }
        if val + 1 <= p && pi_inv[val + 1] < j {
            v[val] = uf.find(pi_inv[val + 1]);
            *ops += 1;
        }
    }
    // Post-validation: both positions must lie inside the candidate range.
    for s in 1..p {
        if v[s] == 0 {
            continue;
        }
        let w = v[s];
        let (a, b) = (pi_inv[s], pi_inv[s + 1]);
        if phi[w] == 0 || a < w || a > phi[w] || b < w || b > phi[w] {
            v[s] = 0;
        }
        *ops += 1;
    }
    v
}

/// Bounding arrays: for defined gaps, l and r are the min/max of pi over
/// [v_s, x_s] with x_s the rightmost of the two positions; undefined gaps
/// get the kill sentinels l = 0, r = p+1.
pub fn compute_bounds(
    pi_inv: &[usize],
    v: &[usize],
    min_table: &RangeTable,
    max_table: &RangeTable,
    ops: &mut u64,
) -> (Vec<usize>, Vec<usize>) {
    let p = pi_inv.len() - 1;
    let mut l = vec![0usize; p.max(1)];
    let mut r = vec![0usize; p.max(1)];
    for s in 1..p {
        if v[s] != 0 {
            let x = pi_inv[s].max(pi_inv[s + 1]);
            l[s] = min_table.query(v[s], x, ops);
            r[s] = max_table.query(v[s], x, ops);
        } else {
            l[s] = 0;
            r[s] = p + 1;
        }
    }
    (l, r)
}

#[derive(Debug, Clone, Copy)]
struct LEntry {
    value: usize,
    rptr: usize, // index into the R vec; top of R owns the top R segment
}

/// The stack pass. L holds left-endpoint candidates (top = largest), R holds
/// right-endpoint candidates (top = smallest); each L entry points at the
/// first element of its R segment, pointers strictly ordered. For each s
/// (descending), candidates incompatible with the gap bounds are popped, s+1
/// is admitted as a right candidate when r_s allows, and the filter walks
/// the top segment emitting (s..u) for increasing u while u <= f(s). The
/// filter never mutates the stack. Returns the operation count.
pub fn lr_search(
    p: usize,
    l: &[usize],
    r: &[usize],
    f: &[usize],
    emit: &mut dyn FnMut(usize, usize),
) -> u64 {
    let mut ops = 0u64;
    let mut hits = 0u64;
    if p < 2 {
        return ops;
    }
    let mut lst: Vec<LEntry> = Vec::new();
    let mut rst: Vec<usize> = Vec::new();
    for s in (1..p).rev() {
        ops += 1;
        // Pop_L: discard candidates larger than l_s; push l_s only if at
        // least one was discarded (it inherits their R segments).
        let a = l[s];
        let mut popped = false;
        while lst.last().is_some_and(|t| t.value > a) {
            lst.pop();
            popped = true;
            ops += 1;
        }
        if popped {
            debug_assert!(!rst.is_empty());
            match lst.last_mut() {
                Some(top) if top.value == a => top.rptr = rst.len() - 1,
                _ => {
                    lst.push(LEntry {
                        value: a,
                        rptr: rst.len() - 1,
                    });
                    ops += 1;
                }
            }
        }
        // Pop_R: discard right candidates smaller than r_s, then drop L
        // entries whose segment emptied and re-point the first survivor.
        let c = r[s];
        let mut rpopped = false;
        while rst.last().is_some_and(|&t| t < c) {
            rst.pop();
            rpopped = true;
            ops += 1;
        }
        if rpopped {
            loop {
                let Some(top) = lst.last() else { break };
                if top.rptr < rst.len() {
                    break;
                }
                let boundary = if lst.len() >= 2 {
                    lst[lst.len() - 2].rptr as isize
                } else {
                    -1
                };
                if !rst.is_empty() && rst.len() as isize - 1 > boundary {
                    lst.last_mut().unwrap().rptr = rst.len() - 1;
                    break;
                }
                lst.pop();
                ops += 1;
            }
        }
        // Push_LR: s+1 is a right candidate exactly when r_s = s+1.
        if c == s + 1 {
            debug_assert!(rst.last().is_none_or(|&t| t > c));
            if lst.last().map(|t| t.value) != Some(a) {
                debug_assert!(lst.last().is_none_or(|t| t.value < a));
                lst.push(LEntry {
                    value: a,
                    rptr: usize::MAX,
                });
                ops += 1;
            }
            rst.push(c);
            ops += 1;
            lst.last_mut().unwrap().rptr = rst.len() - 1;
        }
        // O(1) structural checks: stacks monotone, pointers ordered, top
        // pointer at the top of R.
        #[cfg(debug_assertions)]
        {
            if let Some(top) = lst.last() {
                debug_assert!(!rst.is_empty());
                debug_assert_eq!(top.rptr, rst.len() - 1);
                if lst.len() >= 2 {
                    let below = &lst[lst.len() - 2];
                    debug_assert!(below.value < top.value);
                    debug_assert!(below.rptr < top.rptr);
                }
            }
            if rst.len() >= 2 {
                debug_assert!(rst[rst.len() - 2] > rst[rst.len() - 1]);
            }
        }
        // Filter: read-only walk of the top segment, u ascending.
        if f[s] != 0 && lst.last().map(|t| t.value) == Some(s) {
            let boundary = if lst.len() >= 2 {
                lst[lst.len() - 2].rptr as isize
            } else {
                -1
            };
            let mut idx = rst.len() as isize - 1;
            ops += 1;
            while idx > boundary {
                let u = rst[idx as usize];
                ops += 1;
                if u > f[s] {
                    break;
                }
                emit(s, u);
                hits += 1;
                idx -= 1;
            }
        }
    }
    debug_assert!(ops <= 10 * (p as u64 + hits + 1));
    ops
}

/// Location [y, z] of the value range (s..u) on pi, by range queries over
/// the inverse array.
pub fn locate_on_pi(
    s: usize,
    u: usize,
    inv_min: &RangeTable,
    inv_max: &RangeTable,
    ops: &mut u64,
) -> Location {
    Location::new(inv_min.query(s, u, ops), inv_max.query(s, u, ops))
}

/// Maxmin locations on both sequences: order positions indexed by the hit's
/// endpoints (back maps are the identity on the live prefixes).
pub fn translate(
    d_positions: &[Pos],
    delta_positions: &[Pos],
    hit: &Hit,
) -> (Location, Location) {
    (
        Location::new(d_positions[hit.s], d_positions[hit.u]),
        Location::new(delta_positions[hit.y], delta_positions[hit.z]),
    )
}

/// Full per-pair search: renumber, bound, stack-search, locate. Emits hits
/// with the pair context; returns nothing, charging all work to `ops`.
pub fn search_pair(
    p: usize,
    d_view: &OrderView,
    d_fpairs: &[(usize, usize)],
    delta_view: &OrderView,
    delta_fpairs: &[(usize, usize)],
    ops: &mut u64,
    emit: &mut dyn FnMut(&RenumberedPair, Hit),
) {
    let pair = renumber_and_pad(p, d_view, d_fpairs, delta_view, delta_fpairs, ops);
    let v = compute_v(&pair.pi, &pair.pi_inv, &pair.phi, ops);
    let min_table = RangeTable::build(&pair.pi, Mode::Min, ops);
    let max_table = RangeTable::build(&pair.pi, Mode::Max, ops);
    let (l, r) = compute_bounds(&pair.pi_inv, &v, &min_table, &max_table, ops);
    let inv_min = RangeTable::build(&pair.pi_inv, Mode::Min, ops);
    let inv_max = RangeTable::build(&pair.pi_inv, Mode::Max, ops);
    let mut locate_ops = 0u64;
    let lr_ops = lr_search(p, &l, &r, &pair.f, &mut |s, u| {
        let loc = locate_on_pi(s, u, &inv_min, &inv_max, &mut locate_ops);
        let (y, z) = (loc.begin, loc.end);
        debug_assert!(u <= pair.k_d, "padded value in output");
        debug_assert!(z <= pair.k_delta, "padded position in output");
        debug_assert!(pair.phi[y] != 0 && z <= pair.phi[y], "hit not valid on pi side");
        emit(
            &pair,
            Hit {
                s,
                u,
                y,
                z,
                f_s: pair.f[s],
                phi_y: pair.phi[y],
            },
        );
    });
    *ops += lr_ops + locate_ops;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_gap_bounds, naive_valid_common};

    fn view(values: &[Sym], positions: &[Pos]) -> (Vec<Sym>, Vec<Pos>) {
        let mut vs = vec![0];
        vs.extend_from_slice(values);
        let mut ps = vec![0];
        ps.extend_from_slice(positions);
        (vs, ps)
    }

    fn o4_omega5_pair() -> RenumberedPair {
        let (dv, dp) = view(&[2, 1, 4, 3, 6], &[4, 5, 6, 7, 10]);
        let (ov, op) = view(&[3, 4, 1, 5], &[5, 6, 7, 8]);
        let d_view = OrderView {
            d: 4,
            values: &dv,
            positions: &dp,
        };
        let delta_view = OrderView {
            d: 5,
            values: &ov,
            positions: &op,
        };
        renumber_and_pad(
            6,
            &d_view,
            &[(2, 4), (1, 5)],
            &delta_view,
            &[(2, 4), (1, 4)],
            &mut 0,
        )
    }

    #[test]
    fn renumber_worked_pair() {
        let pair = o4_omega5_pair();
        assert_eq!(pair.p, 6);
        assert_eq!(pair.k_d, 5);
        assert_eq!(pair.k_delta, 4);
        // 2->1, 1->2, 4->3, 3->4, 6->5, S-only 5->6; tail = unused ascending.
        assert_eq!(&pair.pi[1..], &[4, 3, 2, 6, 1, 5]);
        assert_eq!(&pair.f[1..], &[5, 4, 0, 0, 0, 0]);
        assert_eq!(&pair.phi[1..], &[4, 4, 0, 0, 0, 0]);
        assert_eq!(&pair.orig_of[1..], &[2, 1, 4, 3, 6, 5]);
    }

    #[test]
    fn renumber_identical_permutations_gives_identity() {
        let (dv, dp) = view(&[3, 1, 2], &[1, 2, 3]);
        let (ov, op) = view(&[3, 1, 2], &[1, 2, 3]);
        let d_view = OrderView { d: 1, values: &dv, positions: &dp };
        let delta_view = OrderView { d: 1, values: &ov, positions: &op };
        let pair = renumber_and_pad(3, &d_view, &[(1, 3)], &delta_view, &[(1, 3)], &mut 0);
        assert_eq!(&pair.pi[1..], &[1, 2, 3]);
    }

    #[test]
    fn renumber_disjoint_supports() {
        let (dv, dp) = view(&[1], &[1]);
        let (ov, op) = view(&[2], &[1]);
        let d_view = OrderView { d: 1, values: &dv, positions: &dp };
        let delta_view = OrderView { d: 1, values: &ov, positions: &op };
        let pair = renumber_and_pad(2, &d_view, &[(1, 1)], &delta_view, &[(1, 1)], &mut 0);
        assert_eq!(&pair.pi[1..], &[2, 1]);
        let hits = collect_hits(&pair);
        assert!(hits.is_empty());
    }

    fn collect_hits(pair: &RenumberedPair) -> Vec<(usize, usize, usize, usize)> {
        let mut ops = 0;
        let v = compute_v(&pair.pi, &pair.pi_inv, &pair.phi, &mut ops);
        let min_t = RangeTable::build(&pair.pi, Mode::Min, &mut ops);
        let max_t = RangeTable::build(&pair.pi, Mode::Max, &mut ops);
        let (l, r) = compute_bounds(&pair.pi_inv, &v, &min_t, &max_t, &mut ops);
        let inv_min = RangeTable::build(&pair.pi_inv, Mode::Min, &mut ops);
        let inv_max = RangeTable::build(&pair.pi_inv, Mode::Max, &mut ops);
        let mut hits = Vec::new();
        lr_search(pair.p, &l, &r, &pair.f, &mut |s, u| {
            let loc = locate_on_pi(s, u, &inv_min, &inv_max, &mut ops);
            hits.push((s, u, loc.begin, loc.end));
        });
        hits
    }

    #[test]
    fn compute_v_on_worked_permutation() {
        // pi = 5 3 1 4 2 6 with ranges {1 -> 6, 3 -> 5}.
        let pi = vec![0, 5, 3, 1, 4, 2, 6];
        let mut pi_inv = vec![0; 7];
        for pos in 1..=6 {
            pi_inv[pi[pos]] = pos;
        }
        let phi = vec![0, 6, 0, 5, 0, 0, 0];
        let v = compute_v(&pi, &pi_inv, &phi, &mut 0);
        assert_eq!(&v[1..6], &[3, 1, 1, 1, 1]);
    }

    #[test]
    fn compute_v_single_enclosing_range() {
        let p = 6;
        let pi: Vec<usize> = std::iter::once(0).chain(vec![2, 4, 1, 6, 3, 5]).collect();
        let mut pi_inv = vec![0; p + 1];
        for pos in 1..=p {
            pi_inv[pi[pos]] = pos;
        }
        let mut phi = vec![0; p + 1];
        phi[1] = p;
        let v = compute_v(&pi, &pi_inv, &phi, &mut 0);
        assert!(v[1..p].iter().all(|&x| x == 1));
    }

    #[test]
    fn compute_v_padded_pair_demotes_invalid_candidates() {
        let pair = o4_omega5_pair();
        let v = compute_v(&pair.pi, &pair.pi_inv, &pair.phi, &mut 0);
        // Only the gaps 2 and 3 have an enclosing range; 4 is killed because
        // value 5 sits in the padding, outside every defined range.
        assert_eq!(&v[1..6], &[0, 2, 1, 0, 0]);
    }

    #[test]
    fn compute_bounds_on_worked_permutation() {
        let pi = vec![0, 5, 3, 1, 4, 2, 6];
        let mut pi_inv = vec![0; 7];
        for pos in 1..=6 {
            pi_inv[pi[pos]] = pos;
        }
        let phi = vec![0, 6, 0, 5, 0, 0, 0];
        let mut ops = 0;
        let v = compute_v(&pi, &pi_inv, &phi, &mut ops);
        let min_t = RangeTable::build(&pi, Mode::Min, &mut ops);
        let max_t = RangeTable::build(&pi, Mode::Max, &mut ops);
        let (l, r) = compute_bounds(&pi_inv, &v, &min_t, &max_t, &mut ops);
        assert_eq!(&l[1..6], &[1, 1, 1, 1, 1]);
        assert_eq!(&r[1..6], &[4, 5, 5, 5, 6]);
        // Bounding property against the naive gap extrema.
        let (m, mx) = naive_gap_bounds(&pi);
        for s in 1..6 {
            assert!(l[s] <= m[s] && r[s] >= mx[s]);
        }
    }

    #[test]
    fn compute_bounds_identity_with_full_range() {
        let p = 5;
        let pi: Vec<usize> = (0..=p).collect();
        let pi_inv = pi.clone();
        let mut phi = vec![0; p + 1];
        phi[1] = p;
        let mut ops = 0;
        let v = compute_v(&pi, &pi_inv, &phi, &mut ops);
        let min_t = RangeTable::build(&pi, Mode::Min, &mut ops);
        let max_t = RangeTable::build(&pi, Mode::Max, &mut ops);
        let (l, r) = compute_bounds(&pi_inv, &v, &min_t, &max_t, &mut ops);
        for s in 1..p {
            assert_eq!(v[s], 1);
            assert_eq!(l[s], 1);
            assert_eq!(r[s], s + 1);
        }
    }

    #[test]
    fn compute_bounds_sentinels_for_undefined_gaps() {
        let pair = o4_omega5_pair();
        let mut ops = 0;
        let v = compute_v(&pair.pi, &pair.pi_inv, &pair.phi, &mut ops);
        let min_t = RangeTable::build(&pair.pi, Mode::Min, &mut ops);
        let max_t = RangeTable::build(&pair.pi, Mode::Max, &mut ops);
        let (l, r) = compute_bounds(&pair.pi_inv, &v, &min_t, &max_t, &mut ops);
        assert_eq!((l[4], r[4]), (0, 7));
        assert_eq!((l[1], r[1]), (0, 7));
    }

    #[test]
    fn worked_pair_emits_exactly_two_intervals() {
        let pair = o4_omega5_pair();
        let hits = collect_hits(&pair);
        // {1,4} at [2,3]/[2,3] and {1,3,4} at [2,4]/[1,3]; {3,4} (range 3..4)
        // is not emitted because f is undefined at 3.
        assert_eq!(hits, vec![(2, 3, 2, 3), (2, 4, 1, 3)]);
    }

    #[test]
    fn identity_pair_with_full_validity_emits_all_ranges() {
        let p = 6;
        let pi: Vec<usize> = (0..=p).collect();
        let pi_inv = pi.clone();
        let full: Vec<usize> = std::iter::once(0).chain((1..=p).map(|_| p)).collect();
        let pair = RenumberedPair {
            p,
            k_d: p,
            k_delta: p,
            pi,
            pi_inv,
            f: full.clone(),
            phi: full,
            orig_of: (0..=p).collect(),
        };
        let hits = collect_hits(&pair);
        assert_eq!(hits.len(), p * (p - 1) / 2);
        // Per fixed s, u strictly increasing in emission order.
        for w in hits.windows(2) {
            if w[0].0 == w[1].0 {
                assert!(w[0].1 < w[1].1);
            }
        }
        let mut sorted = hits.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, naive_valid_common(&pair.pi, &pair.f, &pair.phi));
    }

    #[test]
    fn locate_on_pi_examples() {
        let pair = o4_omega5_pair();
        let mut ops = 0;
        let inv_min = RangeTable::build(&pair.pi_inv, Mode::Min, &mut ops);
        let inv_max = RangeTable::build(&pair.pi_inv, Mode::Max, &mut ops);
        assert_eq!(
            locate_on_pi(2, 3, &inv_min, &inv_max, &mut ops),
            Location::new(2, 3)
        );
        assert_eq!(
            locate_on_pi(2, 4, &inv_min, &inv_max, &mut ops),
            Location::new(1, 3)
        );
        assert_eq!(
            locate_on_pi(1, 6, &inv_min, &inv_max, &mut ops),
            Location::new(1, 6)
        );
    }

    #[test]
    fn translate_worked_hits() {
        let d_positions = vec![0, 4, 5, 6, 7, 10];
        let delta_positions = vec![0, 5, 6, 7, 8];
        let hit = Hit { s: 2, u: 3, y: 2, z: 3, f_s: 4, phi_y: 4 };
        assert_eq!(
            translate(&d_positions, &delta_positions, &hit),
            (Location::new(5, 6), Location::new(6, 7))
        );
        let hit = Hit { s: 2, u: 4, y: 1, z: 3, f_s: 4, phi_y: 4 };
        assert_eq!(
            translate(&d_positions, &delta_positions, &hit),
            (Location::new(5, 7), Location::new(5, 7))
        );
    }

    #[test]
    fn translate_o4_omega3_whole_prefix() {
        // Omega_3 = 4 2 3 1 5 at positions 3 4 5 7 8, with ranges
        // {1 -> 5, 4 -> 5, 5 -> 5}.
        let (dv, dp) = view(&[2, 1, 4, 3, 6], &[4, 5, 6, 7, 10]);
        let (ov, op) = view(&[4, 2, 3, 1, 5], &[3, 4, 5, 7, 8]);
        let d_view = OrderView { d: 4, values: &dv, positions: &dp };
        let delta_view = OrderView { d: 3, values: &ov, positions: &op };
        let pair = renumber_and_pad(
            6,
            &d_view,
            &[(2, 4), (1, 5)],
            &delta_view,
            &[(5, 5), (4, 5), (1, 5)],
            &mut 0,
        );
        let hits = collect_hits(&pair);
        let whole = hits.iter().find(|h| (h.0, h.1) == (1, 4)).unwrap();
        let hit = Hit { s: whole.0, u: whole.1, y: whole.2, z: whole.3, f_s: 5, phi_y: 5 };
        assert_eq!(
            translate(&dp, &op, &hit),
            (Location::new(4, 7), Location::new(3, 7))
        );
    }

    #[test]
    fn lr_output_matches_oracle_on_adversarial_shapes() {
        // Shared-boundary shape: a range closing exactly where another opens.
        let p = 6;
        let pi: Vec<usize> = std::iter::once(0).chain(vec![1, 3, 2, 5, 4, 6]).collect();
        let mut pi_inv = vec![0; p + 1];
        for pos in 1..=p {
            pi_inv[pi[pos]] = pos;
        }
        let mut phi = vec![0; p + 1];
        phi[1] = p;
        phi[2] = 3;
        phi[4] = 5;
        let mut f = vec![0; p + 1];
        f[1] = p;
        f[2] = 3;
        f[4] = 5;
        let pair = RenumberedPair {
            p,
            k_d: p,
            k_delta: p,
            pi: pi.clone(),
            pi_inv,
            f: f.clone(),
            phi: phi.clone(),
            orig_of: (0..=p).collect(),
        };
        let mut hits = collect_hits(&pair);
        hits.sort_unstable();
        assert_eq!(hits, naive_valid_common(&pi, &f, &phi));
    }
}
