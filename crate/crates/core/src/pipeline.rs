//! Full search pipeline: preprocess both sequences, compute domination
//! structures, nest the order streams, run the guided search per pair of
//! dominating orders, and emit each location pair exactly once.
//!
//! Memory stays linear in the input: S's domination structures are computed
//! once and only its order stream is re-run per T order; nothing is buffered
//! beyond the record being emitted.

use crate::counters::{Charge, Counters};
use crate::domination::resolve_all;
use crate::guided::{search_pair, translate};
use crate::model::{
    build_occ_index, dedup, expand_maxmin_to_original, expand_to_original, to_maximal, Location,
    PositionMap, Sequence, Sym,
};
use crate::retrieve::OrderStream;

/// Which coordinate system records use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coords {
    #[default]
    Original,
    Dedup,
}

/// Which locations records carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LocationsMode {
    #[default]
    Maximal,
    Maxmin,
    Both,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// 1 or 2. With 1, singleton intervals are emitted first.
    pub min_size: usize,
    pub emit_elements: bool,
    pub coords: Coords,
    pub locations: LocationsMode,
    /// Report counters in [`Stats`] rendering (counting itself is always on).
    pub counters: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            min_size: 2,
            emit_elements: false,
            coords: Coords::Original,
            locations: LocationsMode::Maximal,
            counters: false,
        }
    }
}

/// One common interval occurrence. Coordinates are 1-based inclusive in the
/// coordinate system requested by the options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultRecord {
    pub size: usize,
    pub t_max: Location,
    pub s_max: Location,
    pub t_maxmin: Option<Location>,
    pub s_maxmin: Option<Location>,
    /// Interval symbols, ascending codes; filled when requested.
    pub elements: Option<Vec<Sym>>,
}

/// Run summary.
#[derive(Debug, Clone, Default)]
pub struct Stats {
    pub q1: usize,
    pub q2: usize,
    pub p: usize,
    /// Deduplicated lengths actually processed.
    pub n1: usize,
    pub n2: usize,
    /// Records emitted (N).
    pub records: u64,
    pub counters: Counters,
}

/// Finds all common intervals of `t` and `s` (encoded, not yet
/// deduplicated), streaming one [`ResultRecord`] per `(T,S)`-maximal
/// location pair into `sink`.
pub fn find_common_intervals(
    t: &Sequence,
    s: &Sequence,
    opts: &SearchOptions,
    sink: &mut dyn FnMut(&ResultRecord),
) -> Stats {
    assert!(
        opts.min_size == 1 || opts.min_size == 2,
        "min_size must be 1 or 2"
    );
    let p = t.alphabet_size().max(s.alphabet_size());
    let mut counters = Counters::default();

    let (td, t_map) = dedup(t);
    let (sd, s_map) = dedup(s);
    let t_occ = build_occ_index(&td);
    let s_occ = build_occ_index(&sd);
    let t_dom = resolve_all(&td, &t_occ, &mut counters, Charge::ResolveT);
    let s_dom = resolve_all(&sd, &s_occ, &mut counters, Charge::ResolveS);
    let t_doms = t_dom.dominating_positions();
    let s_doms = s_dom.dominating_positions();

    let mut emitted = 0u64;
    #[cfg(debug_assertions)]
    let mut seen: std::collections::HashSet<(Location, Location)> = std::collections::HashSet::new();

    if opts.min_size == 1 {
        emitted += emit_singletons(&td, &t_map, &sd, &s_map, opts, sink);
    }

    let mut pair_ops = 0u64;
    let mut retrieve_ops = 0u64;
    let mut t_stream = OrderStream::new(&td, &t_occ, &t_doms);
    while let Some(d_view) = t_stream.next_order() {
        let d_rec = t_dom.record_at(d_view.d);
        let mut s_stream = OrderStream::new(&sd, &s_occ, &s_doms);
        while let Some(delta_view) = s_stream.next_order() {
            let delta_rec = s_dom.record_at(delta_view.d);
            search_pair(
                p,
                &d_view,
                &d_rec.fpairs,
                &delta_view,
                &delta_rec.fpairs,
                &mut pair_ops,
                &mut |pair, hit| {
                    let (t_mm, s_mm) = translate(d_view.positions, delta_view.positions, &hit);
                    let t_max = to_maximal(d_view.positions, hit.s, hit.u, hit.f_s, &t_occ);
                    let s_max = to_maximal(delta_view.positions, hit.y, hit.z, hit.phi_y, &s_occ);
                    #[cfg(debug_assertions)]
                    debug_assert!(seen.insert((t_max, s_max)), "duplicate record");
                    let record = build_record(
                        opts,
                        hit.u - hit.s + 1,
                        t_max,
                        s_max,
                        t_mm,
                        s_mm,
                        &t_map,
                        &s_map,
                        || pair.orig_of[hit.s..=hit.u].to_vec(),
                    );
                    emitted += 1;
                    sink(&record);
                },
            );
        }
        retrieve_ops += s_stream.ops();
    }
    retrieve_ops += t_stream.ops();
    counters.retrieve = retrieve_ops;
    counters.pair = pair_ops;
    counters.emitted = emitted;

    Stats {
        q1: t_dom.q(),
        q2: s_dom.q(),
        p,
        n1: td.len(),
        n2: sd.len(),
        records: emitted,
        counters,
    }
}

#[allow(clippy::too_many_arguments)]
fn build_record(
    opts: &SearchOptions,
    size: usize,
    t_max_d: Location,
    s_max_d: Location,
    t_mm_d: Location,
    s_mm_d: Location,
    t_map: &PositionMap,
    s_map: &PositionMap,
    elements: impl FnOnce() -> Vec<Sym>,
) -> ResultRecord {
    let (t_max, s_max, t_mm, s_mm) = match opts.coords {
        Coords::Dedup => (t_max_d, s_max_d, t_mm_d, s_mm_d),
        Coords::Original => (
            expand_to_original(t_max_d, t_map),
            expand_to_original(s_max_d, s_map),
            expand_maxmin_to_original(t_mm_d, t_map),
            expand_maxmin_to_original(s_mm_d, s_map),
        ),
    };
    let want_maxmin = matches!(opts.locations, LocationsMode::Maxmin | LocationsMode::Both);
    let mut elems = None;
    if opts.emit_elements {
        let mut e = elements();
        e.sort_unstable();
        elems = Some(e);
    }
    ResultRecord {
        size,
        t_max,
        s_max,
        t_maxmin: want_maxmin.then_some(t_mm),
        s_maxmin: want_maxmin.then_some(s_mm),
        elements: elems,
    }
}

/// Size-1 intervals straight from the occurrence runs: for each symbol in
/// both supports, every (T-run, S-run) pair is one maximal location pair.
/// In deduplicated coordinates a run is a single position.
fn emit_singletons(
    td: &Sequence,
    t_map: &PositionMap,
    sd: &Sequence,
    s_map: &PositionMap,
    opts: &SearchOptions,
    sink: &mut dyn FnMut(&ResultRecord),
) -> u64 {
    let p = td.alphabet_size().max(sd.alphabet_size());
    let mut t_occs: Vec<Vec<usize>> = vec![Vec::new(); p + 1];
    for i in 1..=td.len() {
        t_occs[td.sym(i)].push(i);
    }
    let mut s_occs: Vec<Vec<usize>> = vec![Vec::new(); p + 1];
    for i in 1..=sd.len() {
        s_occs[sd.sym(i)].push(i);
    }
    let mut emitted = 0u64;
    for c in 1..=p {
        if t_occs[c].is_empty() || s_occs[c].is_empty() {
            continue;
        }
        for &ti in &t_occs[c] {
            for &si in &s_occs[c] {
                let record = build_record(
                    opts,
                    1,
                    Location::new(ti, ti),
                    Location::new(si, si),
                    Location::new(ti, ti),
                    Location::new(si, si),
                    t_map,
                    s_map,
                    || vec![c],
                );
                emitted += 1;
                sink(&record);
            }
        }
    }
    emitted
}

/// Plain-text report of the domination structure of one sequence, in
/// deduplicated coordinates: one line per dominating order with its
/// (s, F_d(s)) pairs ascending in s, then the domination number.
pub fn dump_domination(seq: &Sequence) -> String {
    let (d, _) = dedup(seq);
    let occ = build_occ_index(&d);
    let dom = resolve_all(&d, &occ, &mut Counters::default(), Charge::ResolveT);
    let mut out = String::new();
    for rec in &dom.records {
        let mut pairs = rec.fpairs.clone();
        pairs.sort_unstable();
        out.push_str(&format!("d={}:", rec.d));
        for (s, f) in pairs {
            out.push_str(&format!(" ({s},{f})"));
        }
        out.push('\n');
    }
    out.push_str(&format!("q={}\n", dom.q()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_common, naive_maxmin_common, NaivePair};

    fn paper_t() -> Sequence {
        Sequence::from_codes(&[1, 2, 5, 2, 1, 4, 3, 1, 2, 6, 5], 6)
    }

    fn paper_s() -> Sequence {
        Sequence::from_codes(&[5, 6, 4, 2, 3, 4, 1, 5], 6)
    }

    fn collect(t: &Sequence, s: &Sequence, opts: &SearchOptions) -> (Vec<ResultRecord>, Stats) {
        let mut records = Vec::new();
        let stats = find_common_intervals(t, s, opts, &mut |r| records.push(r.clone()));
        (records, stats)
    }

    fn as_pairs(records: &[ResultRecord]) -> Vec<(Location, Location)> {
        let mut v: Vec<(Location, Location)> =
            records.iter().map(|r| (r.t_max, r.s_max)).collect();
        v.sort_unstable();
        v
    }

    fn oracle_pairs(pairs: &[NaivePair]) -> Vec<(Location, Location)> {
        let mut v: Vec<(Location, Location)> = pairs.iter().map(|p| (p.t_loc, p.s_loc)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn paper_pair_contains_unique_1234_record() {
        let opts = SearchOptions::default();
        let (records, stats) = collect(&paper_t(), &paper_s(), &opts);
        let hits: Vec<&ResultRecord> = records
            .iter()
            .filter(|r| r.t_max == Location::new(4, 9))
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].s_max, Location::new(3, 7));
        assert_eq!(hits[0].size, 4);
        assert_eq!(stats.q1, 3);
        assert_eq!(stats.q2, 3);
        assert_eq!(stats.records, records.len() as u64);
    }

    #[test]
    fn paper_pair_matches_oracle_both_min_sizes() {
        for min_size in [1, 2] {
            let opts = SearchOptions {
                min_size,
                ..Default::default()
            };
            let (records, _) = collect(&paper_t(), &paper_s(), &opts);
            let oracle = naive_common(&paper_t(), &paper_s(), min_size, 200).unwrap();
            assert_eq!(as_pairs(&records), oracle_pairs(&oracle), "min_size {min_size}");
        }
    }

    #[test]
    fn maxmin_locations_match_oracle() {
        let opts = SearchOptions {
            min_size: 1,
            locations: LocationsMode::Both,
            ..Default::default()
        };
        let (records, _) = collect(&paper_t(), &paper_s(), &opts);
        let mut got: Vec<(Location, Location)> = records
            .iter()
            .map(|r| (r.t_maxmin.unwrap(), r.s_maxmin.unwrap()))
            .collect();
        got.sort_unstable();
        let oracle = naive_maxmin_common(&paper_t(), &paper_s(), 1, 200).unwrap();
        assert_eq!(got, oracle_pairs(&oracle));
    }

    #[test]
    fn disjoint_alphabets_yield_empty_output() {
        let t = Sequence::from_codes(&[1, 2, 1], 4);
        let s = Sequence::from_codes(&[3, 4, 3], 4);
        let (records, stats) = collect(&t, &s, &SearchOptions::default());
        assert!(records.is_empty());
        assert_eq!(stats.records, 0);
    }

    #[test]
    fn singleton_records_for_paper_pair() {
        let opts = SearchOptions {
            min_size: 1,
            emit_elements: true,
            ..Default::default()
        };
        let (records, _) = collect(&paper_t(), &paper_s(), &opts);
        // Symbol 6: one occurrence on each side.
        assert!(records.iter().any(|r| r.size == 1
            && r.t_max == Location::new(10, 10)
            && r.s_max == Location::new(2, 2)
            && r.elements.as_deref() == Some(&[6])));
        // Symbol 1: three T occurrences, one S occurrence.
        let ones: Vec<&ResultRecord> = records
            .iter()
            .filter(|r| r.size == 1 && r.elements.as_deref() == Some(&[1]))
            .collect();
        assert_eq!(ones.len(), 3);
        assert!(ones.iter().all(|r| r.s_max == Location::new(7, 7)));
    }

    #[test]
    fn duplicated_inputs_report_original_coordinates() {
        // Expanding runs must restore maximality in the original sequences.
        let t = Sequence::from_codes(&[1, 1, 2, 3, 3, 2], 3);
        let s = Sequence::from_codes(&[2, 1, 1, 3, 2, 2], 3);
        for min_size in [1, 2] {
            let opts = SearchOptions {
                min_size,
                ..Default::default()
            };
            let (records, _) = collect(&t, &s, &opts);
            let oracle = naive_common(&t, &s, min_size, 200).unwrap();
            assert_eq!(as_pairs(&records), oracle_pairs(&oracle), "min_size {min_size}");
        }
    }

    #[test]
    fn dedup_coordinates_mode() {
        let t = Sequence::from_codes(&[1, 1, 2], 2);
        let s = Sequence::from_codes(&[1, 2, 2], 2);
        let opts = SearchOptions {
            coords: Coords::Dedup,
            ..Default::default()
        };
        let (records, _) = collect(&t, &s, &opts);
        // In dedup coordinates both collapse to 1 2.
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].t_max, Location::new(1, 2));
        assert_eq!(records[0].s_max, Location::new(1, 2));
    }

    #[test]
    fn deterministic_record_stream() {
        let opts = SearchOptions {
            min_size: 1,
            emit_elements: true,
            locations: LocationsMode::Both,
            ..Default::default()
        };
        let (a, _) = collect(&paper_t(), &paper_s(), &opts);
        let (b, _) = collect(&paper_t(), &paper_s(), &opts);
        assert_eq!(a, b);
    }

    #[test]
    fn dump_domination_paper_t() {
        let out = dump_domination(&paper_t());
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(
            lines,
            vec![
                "d=1: (1,6) (2,3) (3,3) (4,5)",
                "d=4: (1,5) (2,4)",
                "d=7: (1,5) (2,5) (3,5) (4,5) (5,5)",
                "q=3",
            ]
        );
    }

    #[test]
    fn dump_domination_identity_and_paper_s() {
        let id4 = Sequence::from_codes(&[1, 2, 3, 4], 4);
        let out = dump_domination(&id4);
        assert_eq!(
            out.lines().collect::<Vec<_>>(),
            vec!["d=1: (1,4) (2,4) (3,4) (4,4)", "q=1"]
        );
        let out = dump_domination(&paper_s());
        assert!(out.contains("q=3"));
        assert!(out.lines().any(|l| l.starts_with("d=1:")));
        assert!(out.lines().any(|l| l.starts_with("d=3:")));
        assert!(out.lines().any(|l| l.starts_with("d=5:")));
    }
}
