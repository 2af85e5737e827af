//! Command-line surface: `find`, `orders`, `verify`, `bench`.
//!
//! Input files are UTF-8 text with whitespace-separated tokens; lines whose
//! first non-blank character is `#` are ignored. With `--ints` every token
//! must be a positive integer and is used as its own symbol code.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage, parse or I/O
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cintervals_core::model::{encode, encode_ints, Sequence, TokenMap};
use cintervals_core::oracle::{naive_common, NaivePair};
use cintervals_core::pipeline::{
    dump_domination, find_common_intervals, Coords, LocationsMode, ResultRecord, SearchOptions,
    Stats,
};
use cintervals_core::synth::generate;
use cintervals_core::Location;

#[derive(Parser, Debug)]
#[command(
    name = "cintervals",
    about = "Find all common intervals (with maximal-location pairs) of two sequences",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find common intervals of two sequence files.
    Find(FindArgs),
    /// Report the dominating orders and domination functions of one file.
    Orders(OrdersArgs),
    /// Cross-check the search against the brute-force reference.
    Verify(VerifyArgs),
    /// Run the seeded synthetic benchmark and print operation counters.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct FindArgs {
    /// First sequence file (T).
    t: OsString,
    /// Second sequence file (S).
    s: OsString,
    /// Treat tokens as positive integers used directly as codes.
    #[arg(long)]
    ints: bool,
    /// Smallest interval size to report (1 or 2).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(usize))]
    min_size: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long, value_enum, default_value_t = LocationsArg::Maximal)]
    locations: LocationsArg,
    /// Append the interval's symbols to every record.
    #[arg(long)]
    emit_elements: bool,
    /// Print run statistics and operation counters to stderr.
    #[arg(long)]
    counters: bool,
}

#[derive(Args, Debug)]
struct OrdersArgs {
    /// Sequence file.
    t: OsString,
    #[arg(long)]
    ints: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    t: OsString,
    s: OsString,
    #[arg(long)]
    ints: bool,
    /// Largest input length the brute-force reference accepts.
    #[arg(long, default_value_t = 200)]
    cap: usize,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    reps: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Tsv,
    Jsonl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LocationsArg {
    Maximal,
    Maxmin,
    Both,
}

/// Token decoding context for rendering elements.
enum Decode<'a> {
    Tokens(&'a TokenMap),
    Ints,
}

pub fn run(args: &[&str], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    run_from(args.iter().map(OsString::from).collect(), stdout, stderr)
}

pub fn run_from(args: Vec<OsString>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Find(args) => cmd_find(&args, stdout, stderr),
        Command::Orders(args) => cmd_orders(&args, stdout),
        Command::Verify(args) => cmd_verify(&args, stdout),
        Command::Bench(args) => cmd_bench(&args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_tokens(path: &OsString) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.to_string_lossy()))?;
    let mut tokens = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        tokens.extend(line.split_whitespace().map(str::to_string));
    }
    Ok(tokens)
}

fn parse_ints(tokens: &[String]) -> Result<Vec<usize>, String> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| format!("token `{t}` is not a positive integer"))
        })
        .collect()
}

fn load_pair(
    t_path: &OsString,
    s_path: &OsString,
    ints: bool,
) -> Result<(Sequence, Sequence, Option<TokenMap>), String> {
    let t_tokens = read_tokens(t_path)?;
    let s_tokens = read_tokens(s_path)?;
    if ints {
        let (t, s) = encode_ints(&parse_ints(&t_tokens)?, &parse_ints(&s_tokens)?)
            .map_err(|e| e.to_string())?;
        Ok((t, s, None))
    } else {
        let (t, s, map) = encode(&t_tokens, &s_tokens).map_err(|e| e.to_string())?;
        Ok((t, s, Some(map)))
    }
}

#[derive(Serialize)]
struct JsonRecord {
    t_begin: usize,
    t_end: usize,
    s_begin: usize,
    s_end: usize,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_mm_begin: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_mm_end: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_mm_begin: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_mm_end: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<serde_json::Value>>,
}

/// Primary location pair per the mode: maximal by default, maxmin in maxmin
/// mode (both mode keeps maximal primary and appends the maxmin pair).
fn primary_locations(rec: &ResultRecord, mode: LocationsArg) -> (Location, Location) {
    match mode {
        LocationsArg::Maximal | LocationsArg::Both => (rec.t_max, rec.s_max),
        LocationsArg::Maxmin => (rec.t_maxmin.unwrap(), rec.s_maxmin.unwrap()),
    }
}

fn render_elements(rec: &ResultRecord, decode: &Decode) -> Option<Vec<String>> {
    rec.elements.as_ref().map(|codes| {
        let mut toks: Vec<String> = match decode {
            Decode::Tokens(map) => codes.iter().map(|&c| map.token(c).to_string()).collect(),
            Decode::Ints => codes.iter().map(|c| c.to_string()).collect(),
        };
        if matches!(decode, Decode::Tokens(_)) {
            toks.sort();
        }
        toks
    })
}

fn write_record(
    out: &mut dyn Write,
    rec: &ResultRecord,
    args: &FindArgs,
    decode: &Decode,
) -> std::io::Result<()> {
    let (t_loc, s_loc) = primary_locations(rec, args.locations);
    let elements = render_elements(rec, decode);
    match args.format {
        Format::Tsv => {
            write!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                t_loc.begin, t_loc.end, s_loc.begin, s_loc.end, rec.size
            )?;
            if args.locations == LocationsArg::Both {
                let (tm, sm) = (rec.t_maxmin.unwrap(), rec.s_maxmin.unwrap());
                write!(out, "\t{}\t{}\t{}\t{}", tm.begin, tm.end, sm.begin, sm.end)?;
            }
            if let Some(elems) = elements {
                write!(out, "\t{}", elems.join(","))?;
            }
            writeln!(out)
        }
        Format::Jsonl => {
            let both = args.locations == LocationsArg::Both;
            let json = JsonRecord {
                t_begin: t_loc.begin,
                t_end: t_loc.end,
                s_begin: s_loc.begin,
                s_end: s_loc.end,
                size: rec.size,
                t_mm_begin: both.then(|| rec.t_maxmin.unwrap().begin),
                t_mm_end: both.then(|| rec.t_maxmin.unwrap().end),
                s_mm_begin: both.then(|| rec.s_maxmin.unwrap().begin),
                s_mm_end: both.then(|| rec.s_maxmin.unwrap().end),
                elements: elements.map(|elems| {
                    elems
                        .iter()
                        .map(|e| match decode {
                            Decode::Ints => serde_json::Value::from(e.parse::<u64>().unwrap()),
                            Decode::Tokens(_) => serde_json::Value::from(e.as_str()),
                        })
                        .collect()
                }),
            };
            writeln!(out, "{}", serde_json::to_string(&json).unwrap())
        }
    }
}

fn write_stats(err: &mut dyn Write, stats: &Stats) {
    let c = &stats.counters;
    let _ = writeln!(
        err,
        "q1={} q2={} p={} n1={} n2={} N={} resolve_t={} resolve_s={} retrieve={} pair={} total={}",
        stats.q1,
        stats.q2,
        stats.p,
        stats.n1,
        stats.n2,
        stats.records,
        c.resolve_t,
        c.resolve_s,
        c.retrieve,
        c.pair,
        c.total()
    );
}

fn search_options(args: &FindArgs) -> Result<SearchOptions, String> {
    if args.min_size != 1 && args.min_size != 2 {
        return Err("--min-size must be 1 or 2".to_string());
    }
    Ok(SearchOptions {
        min_size: args.min_size,
        emit_elements: args.emit_elements,
        coords: Coords::Original,
        locations: match args.locations {
            LocationsArg::Maximal => LocationsMode::Maximal,
            LocationsArg::Maxmin => LocationsMode::Maxmin,
            LocationsArg::Both => LocationsMode::Both,
        },
        counters: args.counters,
    })
}

fn cmd_find(
    args: &FindArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let (t, s, map) = load_pair(&args.t, &args.s, args.ints)?;
    let decode = match &map {
        Some(m) => Decode::Tokens(m),
        None => Decode::Ints,
    };
    let opts = search_options(args)?;
    let mut io_err = None;
    let stats = find_common_intervals(&t, &s, &opts, &mut |rec| {
        if io_err.is_none() {
            if let Err(e) = write_record(stdout, rec, args, &decode) {
                io_err = Some(e);
            }
        }
    });
    if let Some(e) = io_err {
        return Err(format!("write failed: {e}"));
    }
    if args.counters {
        write_stats(stderr, &stats);
    }
    Ok(0)
}

fn cmd_orders(args: &OrdersArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let tokens = read_tokens(&args.t)?;
    let seq = if args.ints {
        let ints = parse_ints(&tokens)?;
        encode_ints(&ints, &ints).map_err(|e| e.to_string())?.0
    } else {
        encode(&tokens, &tokens).map_err(|e| e.to_string())?.0
    };
    write!(stdout, "{}", dump_domination(&seq)).map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let (t, s, _) = load_pair(&args.t, &args.s, args.ints)?;
    for min_size in [1usize, 2] {
        let expected = naive_common(&t, &s, min_size, args.cap).map_err(|e| e.to_string())?;
        let opts = SearchOptions {
            min_size,
            ..Default::default()
        };
        let mut got: Vec<(Location, Location)> = Vec::new();
        find_common_intervals(&t, &s, &opts, &mut |rec| got.push((rec.t_max, rec.s_max)));
        got.sort_unstable();
        let want: Vec<(Location, Location)> = expected
            .iter()
            .map(|p: &NaivePair| (p.t_loc, p.s_loc))
            .collect();
        if let Some(diff) = multiset_diff(&got, &want) {
            let _ = writeln!(stdout, "mismatch at min_size={min_size}:");
            let _ = write!(stdout, "{diff}");
            return Ok(1);
        }
    }
    let _ = writeln!(stdout, "ok");
    Ok(0)
}

/// Returns a printable diff when the sorted pair lists differ.
pub fn multiset_diff(
    got: &[(Location, Location)],
    want: &[(Location, Location)],
) -> Option<String> {
    if got == want {
        return None;
    }
    let mut out = String::new();
    let fmt = |(t, s): &(Location, Location)| {
        format!("{} {} {} {}", t.begin, t.end, s.begin, s.end)
    };
    for pair in want {
        if !got.contains(pair) {
            out.push_str(&format!("- missing  {}\n", fmt(pair)));
        }
    }
    for pair in got {
        if !want.contains(pair) {
            out.push_str(&format!("- spurious {}\n", fmt(pair)));
        }
    }
    if out.is_empty() {
        out.push_str("- multiplicity mismatch\n");
    }
    Some(out)
}

fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    if args.n == 0 || args.p == 0 || args.q == 0 || args.reps == 0 {
        return Err("bench parameters must be positive".to_string());
    }
    let _ = writeln!(
        stdout,
        "rep\tq1\tq2\tN\tresolve_t\tresolve_s\tretrieve\tpair\ttotal\tms"
    );
    for rep in 0..args.reps {
        let t_codes = generate(args.n, args.p, args.q, args.seed + 2 * rep);
        let s_codes = generate(args.n, args.p, args.q, args.seed + 2 * rep + 1);
        let t = Sequence::from_codes(&t_codes, args.p);
        let s = Sequence::from_codes(&s_codes, args.p);
        let opts = SearchOptions::default();
        let started = Instant::now();
        let mut count = 0u64;
        let stats = find_common_intervals(&t, &s, &opts, &mut |_| count += 1);
        let ms = started.elapsed().as_secs_f64() * 1e3;
        let c = &stats.counters;
        let _ = writeln!(
            stdout,
            "{rep}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{ms:.2}",
            stats.q1,
            stats.q2,
            stats.records,
            c.resolve_t,
            c.resolve_s,
            c.retrieve,
            c.pair,
            c.total()
        );
    }
    Ok(0)
}
