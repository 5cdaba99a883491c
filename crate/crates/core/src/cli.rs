//! The `davis-rigidity` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::counterexample::{
    first_strong_witness, gen_permuted_pair_covers, gen_strongly_repetitive_pair, search_permuted_pair,
    CounterexampleReport, RepetitiveGeneratorParams,
};
use crate::cover::{
    assumption1_check, attach_hats, cut_pair_statistics, double_cover, find_label_iso, find_label_iso_rotated,
    hats_correspond, homotopy_certificate, surface_model, validate_cover, GenusPolicy,
};
use crate::error::{CoverError, Error, Result};
use crate::graph::{
    euler_char_vector, is_permuted_pair, is_repetitive, is_strongly_repetitive, is_three_convex,
    permuted_pair_bijections, repetitive_witnesses, structural_report, RepetitiveWitness, ThetaBijection, ThetaCycle,
};
use crate::io::{canonical_json, read_cover, read_graph, read_json, read_raw_cover, write_json, InputFile, LoadedGraph};
use crate::orbicomplex::build_orbicomplex;
use crate::rigidity::{
    class_s_replay, cycle_count_vectors, enumerate_class_s, random_class_s, rigidity_audit,
    AuditItem, AuditPolicy, ClassSBase, ClassSCertificate, Excluded, ExpansionMove, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BAD_INPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "davis-rigidity", version, about = "Covers of Davis orbicomplexes and topological rigidity audits")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for the audit (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Append elapsed wall time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a graph file and optionally a cover file against it.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Euler characteristic vectors, repetitive witnesses and structure of a graph.
    Analyze {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Permuted-pair witnesses between two graphs.
    Compare {
        #[arg(long)]
        graph_a: PathBuf,
        #[arg(long)]
        graph_b: PathBuf,
        /// Maximum number of bijections to list.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Generate covers.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Cycle count vectors of a cover.
    Invariant {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Homotopy certificate, surface model and surface assumption check.
    Certificate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        /// Require genus zero in the surface assumption.
        #[arg(long)]
        genus_zero: bool,
    },
    /// Decide whether two covers are homeomorphic.
    Homeo {
        #[arg(long)]
        graph_a: PathBuf,
        #[arg(long)]
        cover_a: PathBuf,
        #[arg(long)]
        graph_b: PathBuf,
        #[arg(long)]
        cover_b: PathBuf,
        /// Also accept isomorphisms that rotate labels cyclically.
        #[arg(long)]
        allow_label_rotation: bool,
    },
    /// Pairwise rigidity audit over a directory of covers.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    /// Keep only covers recognized as class S.
    #[arg(long)]
    pub require_class_s: bool,
    /// Keep covers of repetitive graphs.
    #[arg(long)]
    pub allow_repetitive: bool,
    /// Require genus zero in the surface assumption.
    #[arg(long)]
    pub genus_zero: bool,
    /// Disable every filter.
    #[arg(long, conflicts_with_all = ["require_class_s", "allow_repetitive", "genus_zero"])]
    pub no_filters: bool,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// The two-vertex double cover.
    Double {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Homotopic, non-homeomorphic pair over a strongly repetitive graph.
    RepetitivePair {
        #[arg(long)]
        graph: PathBuf,
        /// Witness `i k K L`; defaults to the first strong witness.
        #[arg(long, num_args = 4, value_names = ["I", "KI", "K", "L"])]
        witness: Option<Vec<u64>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Homotopic, non-homeomorphic pair over a permuted pair of graphs.
    PermutedPair {
        #[arg(long)]
        graph_a: PathBuf,
        #[arg(long)]
        graph_b: PathBuf,
        /// Bijection `σ(1),…,σ(N)`, comma separated; by default every bijection is tried.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Class-S cover from a base arc and moves, at random, or every one up to a degree.
    ClassS(ClassSArgs),
}

#[derive(Debug, Args)]
pub struct ClassSArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Base arc `first last` (1-based, cyclic, inclusive).
    #[arg(long, num_args = 2, value_names = ["J", "K"], conflicts_with_all = ["random", "exhaustive"])]
    pub base_arc: Option<Vec<usize>>,
    /// JSON list of expansion moves.
    #[arg(long, requires = "base_arc")]
    pub moves: Option<PathBuf>,
    #[arg(long, conflicts_with = "exhaustive")]
    pub random: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random moves.
    #[arg(long, default_value_t = 1)]
    pub depth: usize,
    /// Write one cover per isomorphism class.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct Report {
    command: String,
    inputs: Vec<InputFile>,
    result: Value,
    version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

struct Outcome {
    inputs: Vec<InputFile>,
    result: Value,
    exit: i32,
}

impl Outcome {
    fn ok(inputs: Vec<InputFile>, result: impl Serialize) -> Result<Self> {
        Ok(Self { inputs, result: to_value(result), exit: EXIT_OK })
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let name = command_name(&cli.command);
    let outcome = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => Err(Error::BadInput(format!("--jobs {jobs}: {e}"))),
        },
        None => execute(&cli.command),
    };
    let (report, exit) = match outcome {
        Ok(outcome) => (
            Report {
                command: name,
                inputs: outcome.inputs,
                result: outcome.result,
                version: env!("CARGO_PKG_VERSION").to_string(),
                elapsed_ms: cli.timing.then(|| started.elapsed().as_millis()),
            },
            outcome.exit,
        ),
        Err(e) => {
            eprintln!("error: {e}");
            let exit = if e.is_validation() { EXIT_VALIDATION } else { EXIT_BAD_INPUT };
            (
                Report {
                    command: name,
                    inputs: Vec::new(),
                    result: json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
                    version: env!("CARGO_PKG_VERSION").to_string(),
                    elapsed_ms: None,
                },
                exit,
            )
        }
    };
    match cli.format {
        Format::Json => print!("{}", canonical_json(&report)),
        Format::Text => print!("{}", render_text(&to_value(&report))),
    }
    exit
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Validate { .. } => "validate",
        Command::Analyze { .. } => "analyze",
        Command::Compare { .. } => "compare",
        Command::Gen(g) => gen_name(g),
        Command::Invariant { .. } => "invariant",
        Command::Certificate { .. } => "certificate",
        Command::Homeo { .. } => "homeo",
        Command::Audit(_) => "audit",
    }
    .to_string()
}

fn gen_name(command: &GenCommand) -> &'static str {
    match command {
        GenCommand::Double { .. } => "gen double",
        GenCommand::RepetitivePair { .. } => "gen repetitive-pair",
        GenCommand::PermutedPair { .. } => "gen permuted-pair",
        GenCommand::ClassS(_) => "gen class-s",
    }
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate { graph, cover } => validate(graph, cover.as_deref()),
        Command::Analyze { graph } => analyze(graph),
        Command::Compare { graph_a, graph_b, limit } => compare(graph_a, graph_b, *limit),
        Command::Gen(g) => generate(g),
        Command::Invariant { graph, cover } => {
            let loaded = read_graph(graph)?;
            let (cover, input) = read_cover(cover, Some(&loaded.graph))?;
            Outcome::ok(vec![loaded.input, input], json!({ "cycle_count_vectors": cycle_count_vectors(&cover) }))
        }
        Command::Certificate { graph, cover, genus_zero } => certificate(graph, cover, *genus_zero),
        Command::Homeo { graph_a, cover_a, graph_b, cover_b, allow_label_rotation } => {
            homeo(graph_a, cover_a, graph_b, cover_b, *allow_label_rotation)
        }
        Command::Audit(args) => audit(args),
    }
}

fn validate(graph: &Path, cover: Option<&Path>) -> Result<Outcome> {
    let loaded = read_graph(graph)?;
    let mut inputs = vec![loaded.input.clone()];
    let mut result = json!({
        "graph": {
            "N": loaded.graph.len(),
            "thetas": loaded.graph.branch_lists(),
            "warnings": loaded.warnings,
            "strict": loaded.graph.adjacent_single_branch().is_none(),
        }
    });
    let mut exit = EXIT_OK;
    if let Some(path) = cover {
        let (raw, input) = read_raw_cover(path)?;
        inputs.push(input);
        let report = validate_cover(&raw, Some(&loaded.graph));
        if !report.valid {
            exit = EXIT_VALIDATION;
        }
        result["cover"] = to_value(report);
    }
    Ok(Outcome { inputs, result, exit })
}

fn analyze(path: &Path) -> Result<Outcome> {
    let LoadedGraph { graph, warnings, input } = read_graph(path)?;
    let vectors: Vec<Vec<String>> = graph
        .thetas()
        .iter()
        .map(|t| euler_char_vector(t).entries().iter().map(ToString::to_string).collect())
        .collect();
    let witnesses = repetitive_witnesses(&graph);
    let strong: Vec<&RepetitiveWitness> = witnesses.iter().filter(|w| w.is_strong()).collect();
    let structural = match structural_report(&graph) {
        Ok(report) => to_value(report),
        Err(e) => json!({ "error": { "kind": Error::from(e.clone()).kind(), "message": e.to_string() } }),
    };
    Outcome::ok(
        vec![input],
        json!({
            "graph": graph,
            "N": graph.len(),
            "warnings": warnings,
            "euler_char_vectors": vectors,
            "repetitive": is_repetitive(&graph),
            "strongly_repetitive": is_strongly_repetitive(&graph),
            "witnesses": witnesses,
            "strong_witnesses": strong,
            "three_convex": is_three_convex(&graph),
            "structural": structural,
            "orbicomplex": build_orbicomplex(&graph),
        }),
    )
}

fn compare(a: &Path, b: &Path, limit: usize) -> Result<Outcome> {
    let ga = read_graph(a)?;
    let gb = read_graph(b)?;
    let mut bijections = permuted_pair_bijections(&ga.graph, &gb.graph, limit.saturating_add(1));
    let truncated = bijections.len() > limit;
    bijections.truncate(limit);
    Outcome::ok(
        vec![ga.input, gb.input],
        json!({
            "permuted_pair": is_permuted_pair(&ga.graph, &gb.graph).is_some(),
            "identical": ga.graph == gb.graph,
            "bijections": bijections,
            "truncated": truncated,
        }),
    )
}

fn create_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn generate(command: &GenCommand) -> Result<Outcome> {
    match command {
        GenCommand::Double { graph, out } => {
            let loaded = read_graph(graph)?;
            let cover = double_cover(&loaded.graph);
            create_dir(out)?;
            write_json(&out.join("graph.json"), &loaded.graph)?;
            write_json(&out.join("cover.json"), &cover)?;
            let result = json!({
                "cover": cover,
                "files": ["cover.json", "graph.json"],
            });
            finish_gen(command, out, vec![loaded.input], result)
        }
        GenCommand::RepetitivePair { graph, witness, out } => {
            let loaded = read_graph(graph)?;
            let witness = match witness.as_deref() {
                Some(&[i, k, big_k, big_l]) => RepetitiveWitness { i: i as usize, k: k as usize, big_k, big_l },
                Some(_) => return Err(Error::BadInput("--witness takes four values".into())),
                None => first_strong_witness(&loaded.graph)?,
            };
            let params = RepetitiveGeneratorParams::normalize(&loaded.graph, witness)?;
            let report = gen_strongly_repetitive_pair(&params)?;
            write_pair(out, &report)?;
            let result = json!({
                "witness": witness,
                "parameters": params,
                "counterexample": report,
                "files": pair_files(),
            });
            finish_gen(command, out, vec![loaded.input], result)
        }
        GenCommand::PermutedPair { graph_a, graph_b, sigma, out } => {
            let ga = read_graph(graph_a)?;
            let gb = read_graph(graph_b)?;
            let report = match sigma {
                Some(s) => gen_permuted_pair_covers(&ga.graph, &gb.graph, &ThetaBijection(s.clone()))?,
                None => search_permuted_pair(&ga.graph, &gb.graph, 100_000)?,
            };
            write_pair(out, &report)?;
            let result = json!({ "counterexample": report, "files": pair_files() });
            finish_gen(command, out, vec![ga.input, gb.input], result)
        }
        GenCommand::ClassS(args) => gen_class_s(command, args),
    }
}

fn pair_files() -> Vec<&'static str> {
    vec!["cover_a.json", "cover_b.json", "graph_a.json", "graph_b.json", "report.json"]
}

fn write_pair(out: &Path, report: &CounterexampleReport) -> Result<()> {
    create_dir(out)?;
    write_json(&out.join("cover_a.json"), &report.cover_a)?;
    write_json(&out.join("cover_b.json"), &report.cover_b)?;
    write_json(&out.join("graph_a.json"), &report.graph_a)?;
    write_json(&out.join("graph_b.json"), &report.graph_b)
}

/// Writes `report.json` alongside the generated files; it matches stdout.
fn finish_gen(command: &GenCommand, out: &Path, inputs: Vec<InputFile>, result: Value) -> Result<Outcome> {
    let report = Report {
        command: gen_name(command).to_string(),
        inputs: inputs.clone(),
        result: result.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        elapsed_ms: None,
    };
    write_json(&out.join("report.json"), &report)?;
    Ok(Outcome { inputs, result, exit: EXIT_OK })
}

fn gen_class_s(command: &GenCommand, args: &ClassSArgs) -> Result<Outcome> {
    let loaded = read_graph(&args.graph)?;
    let n = loaded.graph.len();
    let mut inputs = vec![loaded.input];
    create_dir(&args.out)?;
    write_json(&args.out.join("graph.json"), &loaded.graph)?;
    if args.exhaustive {
        let mut seen = std::collections::HashSet::new();
        let mut files = Vec::new();
        for (cert, cover) in enumerate_class_s(n, args.max_degree) {
            if !seen.insert(crate::cover::canonical_code(&cover)) {
                continue;
            }
            let stem = format!("class_s_d{:02}_{:04}", cover.degree(), files.len() + 1);
            write_json(&args.out.join(format!("{stem}.cover.json")), &cover)?;
            write_json(&args.out.join(format!("{stem}.certificate.json")), &cert)?;
            files.push(stem);
        }
        let result = json!({ "max_degree": args.max_degree, "classes": files.len(), "stems": files });
        return finish_gen(command, &args.out, inputs, result);
    }
    let cert = if let Some(arc) = &args.base_arc {
        let base = ClassSBase::new(n, arc[0], arc[1])?;
        let moves = match &args.moves {
            Some(path) => {
                let (moves, input): (Vec<ExpansionMove>, _) = read_json(path)?;
                inputs.push(input);
                moves
            }
            None => Vec::new(),
        };
        ClassSCertificate { base, moves, vertex_map: None }
    } else if args.random {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
        random_class_s(n, args.depth, &mut rng)?
    } else {
        return Err(Error::BadInput("gen class-s needs --base-arc, --random or --exhaustive".into()));
    };
    let cover = class_s_replay(&cert)?;
    write_json(&args.out.join("cover.json"), &cover)?;
    write_json(&args.out.join("certificate.json"), &cert)?;
    let result = json!({
        "certificate": cert,
        "cover": cover,
        "cycle_count_vectors": cycle_count_vectors(&cover),
        "seed": args.random.then_some(args.seed),
        "files": ["certificate.json", "cover.json", "graph.json", "report.json"],
    });
    finish_gen(command, &args.out, inputs, result)
}

fn certificate(graph: &Path, cover: &Path, genus_zero: bool) -> Result<Outcome> {
    let loaded = read_graph(graph)?;
    let (cover, input) = read_cover(cover, Some(&loaded.graph))?;
    let x = attach_hats(&cover, &loaded.graph)?;
    let policy = if genus_zero { GenusPolicy::GenusZero } else { GenusPolicy::OrientableOnly };
    Outcome::ok(
        vec![loaded.input, input],
        json!({
            "certificate": homotopy_certificate(&x),
            "surface": surface_model(&cover),
            "assumption1": assumption1_check(&x, policy),
            "genus_policy": policy,
        }),
    )
}

fn homeo(graph_a: &Path, cover_a: &Path, graph_b: &Path, cover_b: &Path, rotation: bool) -> Result<Outcome> {
    let ga = read_graph(graph_a)?;
    let gb = read_graph(graph_b)?;
    let (a, ia) = read_cover(cover_a, Some(&ga.graph))?;
    let (b, ib) = read_cover(cover_b, Some(&gb.graph))?;
    let xa = attach_hats(&a, &ga.graph)?;
    let xb = attach_hats(&b, &gb.graph)?;
    let va = cycle_count_vectors(&a);
    let vb = cycle_count_vectors(&b);
    let found = if rotation {
        find_label_iso_rotated(&a, &b)
    } else {
        find_label_iso(&a, &b).map(|iso| (0, iso))
    };
    let hats_match = found.as_ref().map(|(rot, iso)| hats_correspond(&xa, &xb, iso, *rot));
    let homeomorphic = hats_match == Some(true);
    let reason = match (&found, hats_match) {
        (Some(_), Some(true)) => "isomorphism carries hats onto equal hats",
        (Some(_), _) => "hats differ along the isomorphism",
        (None, _) if a.n_labels() != b.n_labels() || a.degree() != b.degree() => "label count or degree differ",
        (None, _) if !rotation && va != vb => "cycle count vectors differ",
        (None, _) => "no anchor extends to an isomorphism",
    };
    let mut result = json!({
        "homeomorphic": homeomorphic,
        "reason": reason,
        "iso": found.as_ref().map(|(_, iso)| iso),
        "label_rotation": found.as_ref().map(|(rot, _)| rot),
        "hats_match": hats_match,
        "certificates_equal": homotopy_certificate(&xa) == homotopy_certificate(&xb),
        "cycle_vectors_equal": va == vb,
        "cut_stats_a": cut_pair_statistics(&a),
        "cut_stats_b": cut_pair_statistics(&b),
    });
    if va != vb {
        result["cycle_count_vectors_a"] = to_value(&va);
        result["cycle_count_vectors_b"] = to_value(&vb);
    }
    Ok(Outcome { inputs: vec![ga.input, ia, gb.input, ib], result, exit: EXIT_OK })
}

fn is_cover_file(name: &str) -> bool {
    name.ends_with(".json") && (name.starts_with("cover") || name.ends_with(".cover.json"))
}

/// Cover files under `dir` (recursively), sorted by relative path.
fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(current) = stack.pop() {
        let entries = fs::read_dir(&current).map_err(|source| Error::Io { path: current.display().to_string(), source })?;
        for entry in entries {
            let path = entry.map_err(|source| Error::Io { path: current.display().to_string(), source })?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.file_name().and_then(|n| n.to_str()).is_some_and(is_cover_file) {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn graph_for(cover: &Path) -> Option<PathBuf> {
    let name = cover.file_name()?.to_str()?;
    let sibling = cover.with_file_name(name.replacen("cover", "graph", 1));
    if sibling.is_file() {
        return Some(sibling);
    }
    let shared = cover.with_file_name("graph.json");
    shared.is_file().then_some(shared)
}

fn audit(args: &AuditArgs) -> Result<Outcome> {
    let policy = if args.no_filters {
        AuditPolicy::unfiltered()
    } else {
        AuditPolicy {
            require_three_convex: true,
            require_not_repetitive: !args.allow_repetitive,
            require_class_s: args.require_class_s,
            assumption1: Some(if args.genus_zero { GenusPolicy::GenusZero } else { GenusPolicy::OrientableOnly }),
        }
    };
    let mut inputs = Vec::new();
    let mut items = Vec::new();
    let mut unreadable = Vec::new();
    let mut graphs: BTreeMap<PathBuf, ThetaCycle> = BTreeMap::new();
    for path in corpus_files(&args.corpus)? {
        let name = path.strip_prefix(&args.corpus).unwrap_or(&path).display().to_string();
        let Some(graph_path) = graph_for(&path) else {
            unreadable.push(Excluded { name, reasons: vec!["no graph file".into()] });
            continue;
        };
        if !graphs.contains_key(&graph_path) {
            let loaded = read_graph(&graph_path)?;
            inputs.push(loaded.input);
            graphs.insert(graph_path.clone(), loaded.graph);
        }
        let graph = &graphs[&graph_path];
        match read_cover(&path, Some(graph)) {
            Ok((cover, input)) => {
                inputs.push(input);
                items.push(AuditItem { name, graph: graph.clone(), cover });
            }
            Err(Error::Cover(CoverError::Invalid(violations))) => {
                unreadable.push(Excluded { name, reasons: violations });
            }
            Err(e) => return Err(e),
        }
    }
    inputs.sort_by(|a, b| a.path.cmp(&b.path));
    let mut report = rigidity_audit(&items, &policy);
    report.excluded.extend(unreadable);
    report.excluded.sort_by(|a, b| a.name.cmp(&b.name));
    let exit = if report.verdict == Verdict::Rigid { EXIT_OK } else { EXIT_VIOLATIONS };
    Ok(Outcome { inputs, result: to_value(report), exit })
}

/// Indented `key: value` projection of a JSON value.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn render(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                if is_scalar_like(v) {
                    let _ = writeln!(out, "{pad}{key}: {}", inline(v));
                } else {
                    let _ = writeln!(out, "{pad}{key}:");
                    render(v, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_scalar_like(v) {
                    let _ = writeln!(out, "{pad}- {}", inline(v));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(v, depth + 1, out);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array() || is_flat_array(i)),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn is_flat_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
