//! The `barnette` command line: argument definitions and the command
//! implementations, kept in a library so tests can drive them in-process.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use barnette_core::carve::{outer_edges, Promotion};
use barnette_core::chamber::analyze_chambers;
use barnette_core::corpus::{self, NAMES};
use barnette_core::dot::to_dot;
use barnette_core::oracle::{longest_cycle, Verdict, DEFAULT_BUDGET};
use barnette_core::scaling::{bench_scaling, per_vertex_ratio};
use barnette_core::{
    carve_double, carve_with, enumerate_3_edge_cuts, find_hamiltonian_cycle, parse_embedding, select_entrance,
    to_rotation_format, validate, verify_cycle, CarveOptions, CarveResult, CarveStatus, DoorWalk, Edge,
    PlanarEmbedding, Record, Vertex,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Debug, Parser)]
#[command(name = "barnette", version, about = "Chamber-expansion Hamiltonian cycles in cubic plane graphs")]
pub struct Cli {
    /// Emit line-delimited key=value records instead of the human report.
    #[arg(long, global = true)]
    pub machine: bool,

    /// Use this vertex cycle as the outer face instead of the file's choice.
    #[arg(long, global = true, value_name = "V1,V2,...")]
    pub outer: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check cubic, bipartite, planar and 3-connected.
    Validate { file: PathBuf },
    /// List the faces of the embedding.
    Faces { file: PathBuf },
    /// Run the chamber-expansion carve.
    Carve(CarveArgs),
    /// Exact Hamiltonicity by backtracking.
    Oracle {
        file: PathBuf,
        /// Node-expansion limit.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Compute the longest cycle instead.
        #[arg(long)]
        longest: bool,
    },
    /// Carve and oracle side by side, with an agreement flag.
    Compare(CompareArgs),
    /// Chamber count of a given Hamiltonian cycle.
    Chambers {
        file: PathBuf,
        #[arg(long, value_name = "V0,V1,...")]
        cycle: String,
    },
    /// Built-in graphs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Time the carve on a graph family.
    Bench {
        #[arg(long, value_enum, default_value_t = Family::Prism)]
        family: Family,
        #[arg(long, value_name = "K1,K2,...", value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Minimum wall time spent per size.
        #[arg(long, default_value_t = 200)]
        min_time_ms: u64,
    },
    /// Graphviz export, optionally annotated with a carve.
    Dot {
        file: PathBuf,
        #[arg(long)]
        carve: bool,
        #[arg(long, value_name = "U,V")]
        entrance: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CarveArgs {
    pub file: PathBuf,
    #[arg(long, value_name = "U,V", conflicts_with = "double")]
    pub entrance: Option<String>,
    /// Two entrances carved in alternation.
    #[arg(long, value_name = "U,V:W,X")]
    pub double: Option<String>,
    /// Queue new doors against the face-successor direction.
    #[arg(long)]
    pub left_walk: bool,
    #[arg(long, value_enum, default_value_t = PromotionArg::Outer)]
    pub promotion: PromotionArg,
    /// One record per door opening.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(required_unless_present = "dir", conflicts_with = "dir")]
    pub file: Option<PathBuf>,
    /// Every `.rot` file in this directory.
    #[arg(long)]
    pub dir: Option<PathBuf>,
    /// Carve from every outer edge, not just the selected one.
    #[arg(long)]
    pub all_entrances: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    /// Print a graph in rotation format.
    Emit { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Prism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PromotionArg {
    Outer,
    /// Experimental.
    Explored,
}

/// Everything a command prints, rendered one way or the other at the end.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
    /// Verbatim text (rotation files, DOT); printed as-is in both modes.
    pub raw: String,
}

impl Report {
    fn push(&mut self, rec: Record) {
        self.records.push(rec);
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = self.raw.clone();
        for rec in &self.records {
            if machine {
                out.push_str(&rec.to_string());
                out.push('\n');
            } else {
                out.push_str(&human(rec));
            }
        }
        out
    }
}

fn human(rec: &Record) -> String {
    let fields = rec.fields();
    let (head, rest) = match fields.first() {
        Some((k, v)) if k == "kind" => (v.as_str(), &fields[1..]),
        _ => ("", fields),
    };
    let width = rest.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = format!("[{head}]\n");
    for (k, v) in rest {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    out
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<()> {
    let report = execute(cli)?;
    out.write_all(report.render(cli.machine).as_bytes())?;
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let outer = cli.outer.as_deref().map(parse_list).transpose()?;
    let load = |p: &Path| load_graph(p, outer.clone());
    let mut report = Report::default();
    match &cli.command {
        Command::Validate { file } => report.push(validate_record(&display(file), &load(file)?)),
        Command::Faces { file } => faces(&load(file)?, &mut report),
        Command::Carve(args) => carve_cmd(args, &load(&args.file)?, &mut report)?,
        Command::Oracle { file, budget, longest } => oracle_cmd(&load(file)?, *budget, *longest, &mut report),
        Command::Compare(args) => compare_cmd(args, outer, &mut report)?,
        Command::Chambers { file, cycle } => chambers_cmd(&load(file)?, &parse_list(cycle)?, &mut report)?,
        Command::Corpus { action } => corpus_cmd(action, &mut report)?,
        Command::Bench { family: Family::Prism, sizes, min_time_ms } => {
            bench_cmd(sizes, Duration::from_millis(*min_time_ms), &mut report)
        }
        Command::Dot { file, carve, entrance } => {
            let emb = load(file)?;
            let result = if *carve {
                let e = match entrance {
                    Some(s) => parse_edge(s)?,
                    None => select_entrance(&emb, &enumerate_3_edge_cuts(&emb))?.edge,
                };
                Some(gated_carve(&emb, &[e], CarveOptions::default())?)
            } else {
                None
            };
            report.raw = to_dot(&emb, result.as_ref());
        }
    }
    Ok(report)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

/// Reads a rotation file. `corpus:<name>` names a built-in graph instead.
pub fn load_graph(path: &Path, outer: Option<Vec<Vertex>>) -> Result<PlanarEmbedding> {
    let text = path.to_string_lossy();
    let emb = if let Some(name) = text.strip_prefix("corpus:") {
        corpus::build_named(name)?.embedding
    } else {
        let src = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        parse_embedding(&src).with_context(|| format!("cannot parse {}", path.display()))?
    };
    match outer {
        Some(cycle) => Ok(emb.with_outer(cycle)?),
        None => Ok(emb),
    }
}

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad vertex {t:?} in {s:?}")))
        .collect()
}

pub fn parse_edge(s: &str) -> Result<Edge> {
    match parse_list(s)?.as_slice() {
        &[u, v] if u != v => Ok(Edge::new(u, v)),
        _ => bail!("expected an edge `u,v`, got {s:?}"),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn validate_record(source: &str, emb: &PlanarEmbedding) -> Record {
    let r = validate(emb);
    let mut rec = Record::new();
    rec.push("kind", "validate")
        .push("source", source)
        .push("n", emb.vertex_count())
        .push("edges", emb.edge_count())
        .push("faces", emb.face_count())
        .push("cubic", r.is_cubic)
        .push("bipartite", r.is_bipartite)
        .push("planar", r.is_planar_embedding)
        .push("three_connected", r.vertex_connectivity_at_least_3)
        .push("is_barnette", r.is_barnette)
        .push("outer", join(emb.outer_face().vertices()));
    rec
}

fn faces(emb: &PlanarEmbedding, report: &mut Report) {
    let outer = emb.outer_face_id();
    for (id, f) in emb.faces().iter().enumerate() {
        let mut rec = Record::new();
        rec.push("kind", "face")
            .push("id", id)
            .push("length", f.len())
            .push("outer", id == outer)
            .push("vertices", join(f.vertices()));
        report.push(rec);
    }
}

/// Runs the carve and re-checks a claimed Hamiltonian cycle with the
/// verifier; a rejected claim is reported as a failure.
fn gated_carve(emb: &PlanarEmbedding, entrances: &[Edge], options: CarveOptions) -> Result<CarveResult> {
    let mut r = match entrances {
        [e] => carve_with(emb, *e, options)?,
        [a, b] => carve_double(emb, [*a, *b], options)?,
        _ => bail!("one or two entrances expected"),
    };
    if r.status == CarveStatus::HamiltonianCycle && !verify_cycle(emb, &r.cycle).is_hamiltonian {
        r.status = CarveStatus::Failure;
        r.failure = Some(barnette_core::carve::FailureKind::VerifierRejected);
        r.best_cycle = std::mem::take(&mut r.cycle);
    }
    Ok(r)
}

fn carve_options(walk_left: bool, promotion: PromotionArg) -> CarveOptions {
    CarveOptions {
        walk: if walk_left { DoorWalk::Left } else { DoorWalk::Right },
        promotion: match promotion {
            PromotionArg::Outer => Promotion::OuterCycle,
            PromotionArg::Explored => Promotion::ExploredRegion,
        },
    }
}

pub fn carve_record(emb: &PlanarEmbedding, r: &CarveResult) -> Record {
    use barnette_core::EdgeRole::*;
    let mut rec = Record::new();
    rec.push("kind", "carve")
        .push("status", r.status)
        .push("n", emb.vertex_count())
        .push("entrances", r.entrances.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";"))
        .push("length", r.cycle.len())
        .push("verified", !r.cycle.is_empty() && verify_cycle(emb, &r.cycle).is_cycle)
        .push("h_o", r.count(OuterHamiltonian))
        .push("h_i", r.count(InnerHamiltonian))
        .push("d_i", r.count(InnerDoor))
        .push("d_o", r.count(OuterDoor))
        .push("openings", r.trace.len())
        .push("promotions", r.promotions())
        .push("bridge_events", r.bridge_events())
        .push("interpretation_fired", r.interpretation_fired());
    if let Some(reason) = r.failure_reason() {
        rec.push("reason", reason).push("best_cycle_length", r.best_cycle.len());
    }
    rec.push("cycle", join(&r.cycle));
    rec
}

pub fn trace_records(r: &CarveResult) -> Vec<Record> {
    r.trace
        .iter()
        .map(|o| {
            let mut rec = Record::new();
            rec.push("kind", "opening")
                .push("step", o.step)
                .push("side", o.side)
                .push("door", o.door)
                .push("face", o.face)
                .push("assigned", join(o.assigned.iter().map(|(e, role)| format!("{e}:{role}"))))
                .push("promoted", join(&o.promoted));
            match &o.bridge {
                Some(b) => rec.push("bridge", format!("{}:{}:{}", b.edge, b.door, b.face)),
                None => rec.push("bridge", "none"),
            };
            rec
        })
        .collect()
}

fn carve_cmd(args: &CarveArgs, emb: &PlanarEmbedding, report: &mut Report) -> Result<()> {
    let options = carve_options(args.left_walk, args.promotion);
    let cuts = enumerate_3_edge_cuts(emb);
    let mut choice = None;
    let entrances = if let Some(d) = &args.double {
        let (a, b) = d.split_once(':').with_context(|| format!("expected `u,v:w,x`, got {d:?}"))?;
        vec![parse_edge(a)?, parse_edge(b)?]
    } else if let Some(e) = &args.entrance {
        vec![parse_edge(e)?]
    } else {
        let c = select_entrance(emb, &cuts)?;
        choice = Some(c);
        vec![c.edge]
    };
    let r = gated_carve(emb, &entrances, options)?;
    let mut rec = carve_record(emb, &r);
    rec.push("cuts", cuts.len());
    if let Some(c) = choice {
        rec.push("entrance_is_cut_edge", c.is_cut_edge).push("entrance_fallback", c.fallback);
    }
    if args.promotion == PromotionArg::Explored {
        rec.push("experimental", "explored_region_promotion");
    }
    report.push(rec);
    if args.trace {
        report.records.extend(trace_records(&r));
    }
    Ok(())
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Hamiltonian(_) => "hamiltonian",
        Verdict::NonHamiltonian => "non_hamiltonian",
        Verdict::Undecided => "undecided",
    }
}

fn oracle_cmd(emb: &PlanarEmbedding, budget: u64, longest: bool, report: &mut Report) {
    let mut rec = Record::new();
    rec.push("kind", "oracle").push("n", emb.vertex_count()).push("budget", budget);
    if longest {
        let l = longest_cycle(emb, budget);
        rec.push("longest", l.certificate.length)
            .push("exhausted", l.exhausted)
            .push("expansions", l.expansions)
            .push("verified", l.certificate.is_cycle)
            .push("cycle", join(&l.certificate.vertices));
    } else {
        let s = find_hamiltonian_cycle(emb, budget);
        rec.push("verdict", verdict_name(&s.verdict)).push("expansions", s.expansions);
        if let Some(c) = s.cycle() {
            rec.push("verified", c.is_hamiltonian).push("cycle", join(&c.vertices));
        }
    }
    report.push(rec);
}

fn chambers_cmd(emb: &PlanarEmbedding, cycle: &[Vertex], report: &mut Report) -> Result<()> {
    let a = analyze_chambers(emb, cycle)?;
    let count = |role| a.roles.iter().filter(|&&r| r == role).count();
    let mut rec = Record::new();
    rec.push("kind", "chambers")
        .push("chambers", a.chambers)
        .push("single_chamber", a.chambers == 1)
        .push("entrances", join(&a.entrances))
        .push("h_o", count(barnette_core::EdgeRole::OuterHamiltonian))
        .push("h_i", count(barnette_core::EdgeRole::InnerHamiltonian))
        .push("d_o", count(barnette_core::EdgeRole::OuterDoor))
        .push("d_i", count(barnette_core::EdgeRole::InnerDoor));
    report.push(rec);
    Ok(())
}

fn corpus_cmd(action: &CorpusAction, report: &mut Report) -> Result<()> {
    match action {
        CorpusAction::List => {
            for name in NAMES {
                let mut rec = Record::new();
                rec.push("kind", "corpus");
                for (k, v) in corpus::build_named(name)?.manifest_record().fields() {
                    rec.push(k, v);
                }
                report.push(rec);
            }
        }
        CorpusAction::Emit { name } => report.raw = to_rotation_format(&corpus::build_named(name)?.embedding),
    }
    Ok(())
}

fn bench_cmd(sizes: &[usize], min_total: Duration, report: &mut Report) {
    let rows = bench_scaling(sizes, 3, min_total);
    for row in &rows {
        let mut rec = Record::new();
        rec.push("kind", "bench")
            .push("k", row.k)
            .push("n", row.n)
            .push("status", row.status)
            .push("nanos", row.time.as_nanos())
            .push("ns_per_vertex", format!("{:.2}", row.nanos_per_vertex));
        report.push(rec);
    }
    let mut rec = Record::new();
    rec.push("kind", "bench_summary").push("rows", rows.len());
    if let Some(ratio) = per_vertex_ratio(&rows) {
        rec.push("ratio", format!("{ratio:.3}")).push("within_2x", ratio <= 2.0);
    }
    report.push(rec);
}

/// One graph through validation, carve and oracle.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub source: String,
    pub n: usize,
    pub barnette: bool,
    pub carves: Vec<(Edge, CarveResult)>,
    pub oracle: Verdict,
    pub oracle_expansions: u64,
    pub chambers: Option<usize>,
    pub carve_ms: f64,
    pub oracle_ms: f64,
}

impl RunReport {
    pub fn carve_found(&self) -> bool {
        self.carves.iter().any(|(_, r)| r.status == CarveStatus::HamiltonianCycle)
    }

    /// Carve claims have already passed the verifier, so the only possible
    /// disagreement is an oracle proof of non-Hamiltonicity.
    pub fn agreement(&self) -> bool {
        !(self.carve_found() && self.oracle == Verdict::NonHamiltonian)
    }
}

pub fn run_pipeline(source: &str, emb: &PlanarEmbedding, all_entrances: bool, budget: u64) -> Result<RunReport> {
    let entrances = if all_entrances {
        outer_edges(emb)
    } else {
        vec![select_entrance(emb, &enumerate_3_edge_cuts(emb))?.edge]
    };
    let t = Instant::now();
    let carves = entrances
        .iter()
        .map(|&e| Ok((e, gated_carve(emb, &[e], CarveOptions::default())?)))
        .collect::<Result<Vec<_>>>()?;
    let carve_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let search = find_hamiltonian_cycle(emb, budget);
    let oracle_ms = t.elapsed().as_secs_f64() * 1e3;
    let chambers = carves
        .iter()
        .find(|(_, r)| r.status == CarveStatus::HamiltonianCycle)
        .and_then(|(_, r)| barnette_core::chamber_count(emb, &r.cycle).ok());
    Ok(RunReport {
        source: source.to_string(),
        n: emb.vertex_count(),
        barnette: validate(emb).is_barnette,
        carves,
        oracle: search.verdict,
        oracle_expansions: search.expansions,
        chambers,
        carve_ms,
        oracle_ms,
    })
}

fn compare_records(rep: &RunReport) -> Vec<Record> {
    let mut out = Vec::new();
    for (e, r) in &rep.carves {
        let mut rec = Record::new();
        rec.push("kind", "entrance").push("source", &rep.source).push("entrance", e).push("status", r.status);
        rec.push("length", r.cycle.len());
        if let Some(reason) = r.failure_reason() {
            rec.push("reason", reason);
        }
        out.push(rec);
    }
    let successes = rep.carves.iter().filter(|(_, r)| r.status == CarveStatus::HamiltonianCycle).count();
    let mut rec = Record::new();
    rec.push("kind", "compare")
        .push("source", &rep.source)
        .push("n", rep.n)
        .push("barnette", rep.barnette)
        .push("entrances_tried", rep.carves.len())
        .push("carve_successes", successes)
        .push("oracle", verdict_name(&rep.oracle))
        .push("oracle_expansions", rep.oracle_expansions)
        .push("chambers", rep.chambers.map_or("none".to_string(), |c| c.to_string()))
        .push("agreement", rep.agreement())
        .push("carve_ms", format!("{:.3}", rep.carve_ms))
        .push("oracle_ms", format!("{:.3}", rep.oracle_ms));
    out.push(rec);
    out
}

fn compare_cmd(args: &CompareArgs, outer: Option<Vec<Vertex>>, report: &mut Report) -> Result<()> {
    let files = match (&args.file, &args.dir) {
        (Some(f), _) => vec![f.clone()],
        (None, Some(d)) => {
            let mut files: Vec<PathBuf> = fs::read_dir(d)
                .with_context(|| format!("cannot read directory {}", d.display()))?
                .map(|e| e.map(|e| e.path()))
                .collect::<std::io::Result<_>>()?;
            files.retain(|p| p.extension().is_some_and(|x| x == "rot"));
            files.sort();
            files
        }
        (None, None) => bail!("give a file or --dir"),
    };
    let reports = files
        .par_iter()
        .map(|f| {
            let emb = load_graph(f, outer.clone())?;
            run_pipeline(&display(f), &emb, args.all_entrances, args.budget)
        })
        .collect::<Result<Vec<_>>>()?;
    for rep in &reports {
        report.records.extend(compare_records(rep));
    }
    Ok(())
}
