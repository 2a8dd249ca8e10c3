//! `cmspace`: batch front end for the cmspace library.
//!
//! Exit codes: 0 success, 1 semantic failure, 2 usage or parse error,
//! 3 search budget exhausted.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmspace::aut::{normal_form, stabilizes_basepoint, Word, WordBounds};
use cmspace::bass_serre::{
    dot_export, fundamental_group_presentation, from_orbit_graph, recorded_presentation, spanning_tree,
    GraphOfGroups,
};
use cmspace::cm::{base_point, orbit_tangent_dimension, pgl_equivalent, rank_one_defect, CmPoint, RawPoint, Subgroup};
use cmspace::orbits::{build_orbit_graph, reduce_to_basepoint, sample_points, SampleSet, DEFAULT_BUDGET};
use cmspace::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cmspace", version, about = "Exact computations on Calogero-Moser spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Clone)]
struct Common {
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Clone)]
struct SampleOpts {
    #[arg(long)]
    n: usize,
    /// Required: every randomized command is reproducible from its seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, default_value_t = WordBounds::default().word_len as u64, value_parser = clap::value_parser!(u64).range(1..))]
    word_len: u64,
    #[arg(long, default_value_t = WordBounds::default().height as u64, value_parser = clap::value_parser!(u64).range(1..))]
    height: u64,
}

impl SampleOpts {
    fn bounds(&self) -> WordBounds {
        WordBounds { word_len: self.word_len as usize, height: self.height as u32, ..WordBounds::default() }
    }

    fn sample(&self) -> Result<SampleSet, Failure> {
        let seed = self.seed.ok_or_else(|| Failure::usage("--seed is required for sampling"))?;
        Ok(sample_points(self.n, self.count as usize, seed, &self.bounds())?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the rank-one condition for a point file ("-" reads stdin).
    Check {
        point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a word to a point.
    Act {
        word: String,
        point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of a word in the amalgam.
    Nf {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a word fixes the class of the base point.
    Stab {
        #[arg(long)]
        n: usize,
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Orbit tangent dimension at a point, or a census over a sample.
    OrbitDim {
        #[arg(long, default_value = "G0")]
        subgroup: String,
        /// Point file; when absent, points are sampled.
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = WordBounds::default().word_len as u64, value_parser = clap::value_parser!(u64).range(1..))]
        word_len: u64,
        #[arg(long, default_value_t = WordBounds::default().height as u64, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Write a reproducible sample of points.
    Sample {
        #[command(flatten)]
        opts: SampleOpts,
        #[command(flatten)]
        common: Common,
    },
    /// Sample, classify and build the orbit graph.
    Graph {
        #[command(flatten)]
        opts: SampleOpts,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Presentation of a fundamental group of a graph of groups.
    Present {
        /// One of the recorded graphs, n ∈ {0, 1, 2}.
        #[arg(long = "paper-n", conflicts_with = "graph")]
        recorded_n: Option<usize>,
        /// Graph-of-groups JSON file.
        #[arg(long)]
        graph: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a word carrying a point to the base point.
    Reduce {
        point: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }

    fn semantic(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Shape(_)
            | Error::DimensionMismatch(..)
            | Error::NotCmPoint { .. }
            | Error::InvalidGenerator(_)
            | Error::Unsupported(_) => 2,
            Error::BudgetExhausted(_) => 3,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn read_point(path: &str) -> Result<CmPoint, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

/// A word given as text, as a JSON letter list, or as `@file` holding either.
fn parse_word(arg: &str) -> Result<Word, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_input(path)?,
        None => arg.to_string(),
    };
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| Failure::usage(format!("word: {e}")));
    }
    Ok(text.parse()?)
}

fn emit(common: &Common, body: &str) -> Result<(), Failure> {
    let mut body = body.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &common.out {
        Some(p) => write_file(p, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn write_file(p: &Path, body: &str) -> Result<(), Failure> {
    fs::write(p, body).map_err(|e| Failure::semantic(format!("{}: {e}", p.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn format_of(common: &Common, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::usage("output format not available for this command"))
    }
}

fn check(path: &str, common: &Common) -> Outcome {
    let raw: RawPoint =
        serde_json::from_str(&read_input(path)?).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    raw.check_shape()?;
    let rank = rank_one_defect(&raw.x, &raw.y).rank();
    let ok = rank == 1;
    match format_of(common, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => {
            #[derive(Serialize)]
            struct Verdict {
                n: usize,
                rank: usize,
                pass: bool,
            }
            emit(common, &json(&Verdict { n: raw.n, rank, pass: ok }))?
        }
        _ => emit(common, &format!("rank([X, Y] + I) = {rank}\n{}", if ok { "pass" } else { "fail" }))?,
    }
    Ok(if ok { 0 } else { 1 })
}

fn act(word: &str, point: &str, common: &Common) -> Outcome {
    let w = parse_word(word)?;
    let p = read_point(point)?;
    let q = w.act(&p)?;
    match format_of(common, Format::Json, &[Format::Text, Format::Json])? {
        Format::Text => emit(common, &format!("X = {}\nY = {}", q.x(), q.y()))?,
        _ => emit(common, &json(&q))?,
    }
    Ok(0)
}

fn nf(word: &str, common: &Common) -> Outcome {
    let w = parse_word(word)?;
    let f = normal_form(&w);
    match format_of(common, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => emit(common, &json(&f.to_word()))?,
        _ => emit(common, &f.to_word().to_string())?,
    }
    Ok(0)
}

fn stab(n: usize, word: &str, common: &Common) -> Outcome {
    if n == 0 {
        return Err(Failure::usage("--n must be positive"));
    }
    let w = parse_word(word)?;
    let witness = stabilizes_basepoint(&w, n)?;
    let fmt = format_of(common, Format::Text, &[Format::Text, Format::Json])?;
    if fmt == Format::Json {
        #[derive(Serialize)]
        struct Verdict<'a> {
            n: usize,
            word: &'a Word,
            stabilizer: bool,
            witness: Option<Vec<Vec<String>>>,
        }
        let wit = witness.as_ref().map(|c| {
            c.g.to_rows().iter().map(|r| r.iter().map(cmspace::linalg::format_scalar).collect()).collect()
        });
        emit(common, &json(&Verdict { n, word: &w, stabilizer: witness.is_some(), witness: wit }))?;
    } else {
        match &witness {
            Some(c) => emit(common, &format!("stabilizer of base_point({n})\nwitness g = {}", c.g))?,
            None => emit(common, &format!("not a stabilizer of base_point({n})"))?,
        }
    }
    Ok(if witness.is_some() { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn orbit_dim(
    subgroup: &str,
    point: Option<&str>,
    n: Option<usize>,
    seed: Option<u64>,
    count: u64,
    word_len: u64,
    height: u64,
    common: &Common,
) -> Outcome {
    let h: Subgroup = subgroup.parse()?;
    let fmt = format_of(common, Format::Text, &[Format::Text, Format::Json])?;
    if let Some(path) = point {
        let p = read_point(path)?;
        if n.is_some_and(|n| n != p.n()) {
            return Err(Failure::usage(format!("--n does not match the point (n = {})", p.n())));
        }
        let d = orbit_tangent_dimension(h, &p);
        match fmt {
            Format::Json => emit(common, &json(&BTreeMap::from([("dim", d)])))?,
            _ => emit(common, &d.to_string())?,
        }
        return Ok(0);
    }
    let n = n.ok_or_else(|| Failure::usage("--n or --point is required"))?;
    let opts = SampleOpts { n, seed, count, word_len, height };
    let s = opts.sample()?;
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &s.points {
        *census.entry(orbit_tangent_dimension(h, p)).or_default() += 1;
    }
    match fmt {
        Format::Json => emit(common, &json(&census))?,
        _ => {
            let lines: Vec<String> = census.iter().map(|(d, c)| format!("dim {d}: {c}")).collect();
            emit(common, &lines.join("\n"))?
        }
    }
    Ok(0)
}

fn sample(opts: &SampleOpts, common: &Common) -> Outcome {
    format_of(common, Format::Json, &[Format::Json])?;
    emit(common, &json(&opts.sample()?))?;
    Ok(0)
}

fn graph(opts: &SampleOpts, budget: usize, common: &Common) -> Outcome {
    let fmt = format_of(common, Format::Dot, &[Format::Dot, Format::Json, Format::Text])?;
    let s = opts.sample()?;
    let og = build_orbit_graph(&s)?;
    let gog = from_orbit_graph(&og, budget)?;
    let summary = format!(
        "n = {}: {} A-classes, {} B-classes, {} edges, {} nonterminal, connected = {}",
        og.n,
        og.a_vertices.len(),
        og.b_vertices.len(),
        og.edges.len(),
        og.nonterminal_count(),
        og.connected
    );
    let body = match fmt {
        Format::Dot => dot_export(&gog),
        Format::Json => json(&gog),
        Format::Text => {
            let mut lines = vec![summary.clone()];
            for (tag, recs) in [("A", &og.a_vertices), ("B", &og.b_vertices)] {
                for (i, r) in recs.iter().enumerate() {
                    lines.push(format!("{tag}{i}: dim {}, {} points, {}", r.dim, r.members.len(), r.signature));
                }
            }
            for (k, e) in og.edges.iter().enumerate() {
                lines.push(format!("U{k}: A{} — B{}, dim {}, {}", e.a, e.b, e.record.dim, e.record.signature));
            }
            lines.join("\n")
        }
    };
    emit(common, &body)?;
    if fmt != Format::Text {
        if common.out.is_some() {
            println!("{summary}");
        } else {
            eprintln!("{summary}");
        }
    }
    Ok(if og.connected { 0 } else { 1 })
}

fn present(recorded_n: Option<usize>, graph: Option<&str>, common: &Common) -> Outcome {
    let p = match (recorded_n, graph) {
        (Some(n), _) => recorded_presentation(n)?,
        (None, Some(path)) => {
            let g: GraphOfGroups =
                serde_json::from_str(&read_input(path)?).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
            g.validate()?;
            let t = spanning_tree(&g)?;
            fundamental_group_presentation(&g, &t)?
        }
        (None, None) => return Err(Failure::usage("one of --paper-n or --graph is required")),
    };
    match format_of(common, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => emit(common, &json(&p))?,
        _ => emit(common, &p.text)?,
    }
    Ok(0)
}

fn reduce(point: &str, n: Option<usize>, budget: usize, common: &Common) -> Outcome {
    let p = read_point(point)?;
    if n.is_some_and(|n| n != p.n()) {
        return Err(Failure::usage(format!("--n does not match the point (n = {})", p.n())));
    }
    let r = reduce_to_basepoint(&p, budget)?;
    let Some(word) = &r.word else {
        return Err(Failure {
            code: 3,
            msg: format!("no word found within {} nodes (best score {:?})", r.nodes, r.best_score),
        });
    };
    // re-check independently of the search
    let verified = pgl_equivalent(&word.act(&p)?, &base_point(p.n()))?.is_some();
    if !verified {
        return Err(Failure::semantic("returned word does not reach the base point"));
    }
    match format_of(common, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => emit(common, &json(&r))?,
        _ => emit(common, &format!("method: {}\nnodes: {}\nword: {word}\nverified", r.method, r.nodes))?,
    }
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match &cli.cmd {
        Command::Check { point, common } => check(point, common),
        Command::Act { word, point, common } => act(word, point, common),
        Command::Nf { word, common } => nf(word, common),
        Command::Stab { n, word, common } => stab(*n, word, common),
        Command::OrbitDim { subgroup, point, n, seed, count, word_len, height, common } => {
            orbit_dim(subgroup, point.as_deref(), *n, *seed, *count, *word_len, *height, common)
        }
        Command::Sample { opts, common } => sample(opts, common),
        Command::Graph { opts, budget, common } => graph(opts, *budget, common),
        Command::Present { recorded_n, graph, common } => present(*recorded_n, graph.as_deref(), common),
        Command::Reduce { point, n, budget, common } => reduce(point, *n, *budget, common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
