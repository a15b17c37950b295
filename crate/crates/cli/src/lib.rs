//! Command implementations for the `involcode` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and tests can inspect exact output.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use involcode::atlas::{self, builtin, triangulation_to_json, write_triangulation, ATLAS};
use involcode::codes::{
    are_equivalent, enumerate_self_dual_classes, known_code, known_code_candidates, BinaryCode,
    WeightEnumerator, MAX_ENUMERATION_DIM, MAX_EQUIVALENCE_LENGTH,
};
use involcode::equivariant::{
    boundary_map, build_w, code_from_boundary_map, maximality_from_map, regularize_with,
    EquivariantManifold, Involution, MaximalityReport, PipelineConfig,
};
use involcode::gf2::EliminationConfig;
use involcode::simplicial::SimplicialComplex;
use involcode::{Error, ErrorClass};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const REPORT_SCHEMA: &str = "involcode-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "involcode", version, about = "Self-dual codes from involutions on 3-manifolds")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Barycentric subdivision budget for regularization.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_subdiv: usize,
    /// Fill ratio at or below which large matrices use sparse elimination.
    #[arg(long, global = true, default_value_t = 0.02)]
    pub sparse_threshold: f64,
    /// Print per-stage wall-clock timings to stderr.
    #[arg(long, global = true)]
    pub timings: bool,
}

impl GlobalOptions {
    fn pipeline(&self) -> PipelineConfig {
        PipelineConfig {
            max_subdivisions: self.max_subdiv,
            elimination: EliminationConfig {
                sparse_threshold: self.sparse_threshold,
                ..EliminationConfig::default()
            },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that an input is a valid equivariant manifold.
    Validate {
        /// Built-in name or triangulation file.
        input: String,
    },
    /// Compute the code of an input.
    Extract {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Analyze codes given as known names or comma-separated generator rows.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Built-in examples.
    #[command(subcommand)]
    Atlas(AtlasCommand),
}

#[derive(Debug, Subcommand)]
pub enum CodeCommand {
    Dual { code: String },
    SelfDual { code: String },
    DoublyEven { code: String },
    Enumerator { code: String },
    Equiv { a: String, b: String },
    /// Representatives of the self-dual classes of an even length up to 10.
    Enumerate { length: usize },
}

#[derive(Debug, Subcommand)]
pub enum AtlasCommand {
    List,
    Emit { name: String, path: PathBuf },
}

/// Captured result of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    fn failure(stage: &str, err: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {stage}: {err}\n"),
            code: exit_code(err),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err.class() {
        ErrorClass::Input => EXIT_INPUT,
        ErrorClass::Precondition => EXIT_PRECONDITION,
        ErrorClass::Internal => EXIT_INTERNAL,
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INPUT,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { input } => cmd_validate(input, &cli.options),
        Command::Extract { input, json } => cmd_extract(input, *json, &cli.options),
        Command::Code(c) => cmd_code(c),
        Command::Atlas(a) => cmd_atlas(a),
    }
}

fn is_builtin_name(input: &str) -> bool {
    atlas::entry(input).is_some() || input.starts_with("torus_conjugation:")
}

/// Loads a built-in example or a triangulation file.
pub fn load_input(input: &str) -> Result<(SimplicialComplex, Involution), Error> {
    if is_builtin_name(input) {
        builtin(input)
    } else {
        atlas::load_triangulation(input)
    }
}

#[derive(Default)]
struct Timer {
    stages: Vec<(&'static str, Duration)>,
}

impl Timer {
    fn time<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.stages.push((stage, start.elapsed()));
        out
    }

    fn render(&self) -> String {
        let mut s = String::new();
        for (stage, d) in &self.stages {
            let _ = writeln!(s, "timing {stage:<14} {:>10.3} ms", d.as_secs_f64() * 1e3);
        }
        s
    }
}

pub fn cmd_validate(input: &str, options: &GlobalOptions) -> Outcome {
    let mut timer = Timer::default();
    let (m, tau) = match timer.time("load", || load_input(input)) {
        Ok(x) => x,
        Err(e) => return Outcome::failure("load", &e),
    };
    let mut out = String::new();
    let _ = writeln!(out, "input        {input}");
    let _ = writeln!(out, "vertices     {}", m.num_vertices());
    let _ = writeln!(out, "tetrahedra   {}", if m.dim() == Some(3) { m.count(3) } else { 0 });
    let config = options.pipeline();
    let em = match timer.time("validate", || EquivariantManifold::new_with(m, tau, &config)) {
        Ok(em) => em,
        Err(e) => return with_partial(out, Outcome::failure("validate", &e)),
    };
    let _ = writeln!(out, "manifold     closed, connected, orientable");
    let _ = writeln!(out, "involution   orientation-reversing, fixed points isolated");
    let em = if em.is_regularized() {
        em
    } else {
        let (m, tau) = (em.m().clone(), em.tau().clone());
        match timer.time("regularize", || regularize_with(m, tau, &config)) {
            Ok(em) => em,
            Err(e) => return with_partial(out, Outcome::failure("regularize", &e)),
        }
    };
    let _ = writeln!(
        out,
        "regularized  after {} subdivision{}",
        em.subdivisions(),
        if em.subdivisions() == 1 { "" } else { "s" }
    );
    let _ = writeln!(out, "fixed points {}", em.k());
    let _ = writeln!(out, "status       ok");
    let mut o = Outcome::ok(out);
    if options.timings {
        o.stderr = timer.render();
    }
    o
}

fn with_partial(stdout: String, mut failure: Outcome) -> Outcome {
    failure.stdout = stdout;
    failure
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputIdentity {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CodeSummary {
    pub length: usize,
    pub dimension: usize,
    pub generator: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MaximalitySummary {
    pub maximal: bool,
    pub k: usize,
    pub total_mod2_dimension: usize,
    pub map_rank: usize,
    pub h1_w: usize,
}

impl From<MaximalityReport> for MaximalitySummary {
    fn from(r: MaximalityReport) -> Self {
        Self {
            maximal: r.maximal,
            k: r.k,
            total_mod2_dimension: r.total_mod2_dimension,
            map_rank: r.map_rank,
            h1_w: r.h1_w,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct KnownMatch {
    pub name: String,
    /// Image of each coordinate of the extracted code in the named code.
    pub permutation: Vec<usize>,
}

/// Everything `extract` reports. Timings are kept out so that reports are
/// byte-identical across runs.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ExtractionReport {
    pub schema: &'static str,
    pub input: InputIdentity,
    pub num_vertices: usize,
    pub tetrahedra: usize,
    pub subdivisions: usize,
    pub regularized_tetrahedra: usize,
    pub k: usize,
    pub fixed_vertices: Vec<u32>,
    pub betti: Vec<usize>,
    pub maximality: MaximalitySummary,
    pub code: CodeSummary,
    pub self_dual: bool,
    pub doubly_even: bool,
    pub weight_enumerator: Option<Vec<u64>>,
    pub known_code: Option<KnownMatch>,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn match_known(code: &BinaryCode) -> Result<Option<KnownMatch>, Error> {
    if code.length() > MAX_EQUIVALENCE_LENGTH || code.dimension() > MAX_ENUMERATION_DIM {
        return Ok(None);
    }
    for name in known_code_candidates(code.length()) {
        let known = known_code(&name)?;
        if let Some(permutation) = are_equivalent(code, &known)? {
            return Ok(Some(KnownMatch { name, permutation }));
        }
    }
    Ok(None)
}

/// Runs the full pipeline. Errors carry the failing stage name.
pub fn extraction_report(
    input: &str,
    options: &GlobalOptions,
) -> Result<(ExtractionReport, String), (&'static str, Error)> {
    let mut timer = Timer::default();
    let (m, tau) = timer.time("load", || load_input(input)).map_err(|e| ("load", e))?;
    let sha256 = sha256_hex(&triangulation_to_json(&m, &tau));
    let num_vertices = m.num_vertices();
    let tetrahedra = if m.dim() == Some(3) { m.count(3) } else { 0 };
    let config = options.pipeline();
    let em = timer
        .time("regularize", || regularize_with(m, tau, &config))
        .map_err(|e| ("regularize", e))?;
    let w = timer.time("build_w", || build_w(&em)).map_err(|e| ("build_w", e))?;
    let map = timer
        .time("boundary_map", || boundary_map(&w))
        .map_err(|e| ("boundary_map", e))?;
    let code = timer
        .time("kernel", || code_from_boundary_map(&map))
        .map_err(|e| ("kernel", e))?;
    let maximality = timer
        .time("maximality", || maximality_from_map(&em, &map))
        .map_err(|e| ("maximality", e))?;
    let (enumerator, known) = timer
        .time("analysis", || -> Result<_, Error> {
            let enumerator = if code.dimension() <= MAX_ENUMERATION_DIM {
                Some(code.weight_enumerator()?)
            } else {
                None
            };
            Ok((enumerator, match_known(&code)?))
        })
        .map_err(|e| ("analysis", e))?;
    let report = ExtractionReport {
        schema: REPORT_SCHEMA,
        input: InputIdentity {
            source: input.to_string(),
            sha256,
        },
        num_vertices,
        tetrahedra,
        subdivisions: em.subdivisions(),
        regularized_tetrahedra: em.m().count(3),
        k: em.k(),
        fixed_vertices: em.fixed_vertices().to_vec(),
        betti: em.betti().to_vec(),
        maximality: maximality.into(),
        code: CodeSummary {
            length: code.length(),
            dimension: code.dimension(),
            generator: code.generator_rows(),
        },
        self_dual: code.is_self_dual(),
        doubly_even: code.is_doubly_even(),
        weight_enumerator: enumerator.map(|e| e.coefficients().to_vec()),
        known_code: known,
    };
    Ok((report, timer.render()))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Fixed-width human rendering of a report.
pub fn render_report(r: &ExtractionReport) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("input", r.input.source.clone()),
        ("sha256", r.input.sha256.clone()),
        ("vertices", r.num_vertices.to_string()),
        ("tetrahedra", r.tetrahedra.to_string()),
        ("subdivisions", r.subdivisions.to_string()),
        ("fixed points", r.k.to_string()),
        ("fixed vertices", join(&r.fixed_vertices, " ")),
        ("betti numbers", join(&r.betti, " ")),
        (
            "maximal",
            format!(
                "{} (k = {}, total = {}, rank {} of {})",
                yes_no(r.maximality.maximal),
                r.maximality.k,
                r.maximality.total_mod2_dimension,
                r.maximality.map_rank,
                r.maximality.h1_w
            ),
        ),
        ("code", format!("[{}, {}]", r.code.length, r.code.dimension)),
    ];
    if r.code.generator.is_empty() {
        rows.push(("generator", "(none)".into()));
    }
    for g in &r.code.generator {
        rows.push(("generator", g.clone()));
    }
    rows.push(("self-dual", yes_no(r.self_dual).into()));
    rows.push(("doubly even", yes_no(r.doubly_even).into()));
    rows.push((
        "weight enumerator",
        match &r.weight_enumerator {
            Some(c) => WeightEnumerator::from_coefficients(c.clone()).to_string(),
            None => "(dimension too large)".into(),
        },
    ));
    rows.push((
        "known code",
        match &r.known_code {
            Some(k) => format!("{} (permutation {})", k.name, join(&k.permutation, " ")),
            None => "none".into(),
        },
    ));
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<18} {v}");
    }
    out
}

pub fn cmd_extract(input: &str, json: bool, options: &GlobalOptions) -> Outcome {
    match extraction_report(input, options) {
        Ok((report, timings)) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                s.push('\n');
                s
            } else {
                render_report(&report)
            };
            Outcome {
                stdout,
                stderr: if options.timings { timings } else { String::new() },
                code: EXIT_OK,
            }
        }
        Err((stage, e)) => Outcome::failure(stage, &e),
    }
}

/// A known code name, or generator rows separated by commas.
pub fn parse_code(arg: &str) -> Result<BinaryCode, Error> {
    let arg = arg.trim();
    if !arg.is_empty() && arg.chars().all(|c| c == '0' || c == '1' || c == ',') {
        let rows: Vec<&str> = arg.split(',').collect();
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::MalformedWord(arg.to_string()));
        }
        return BinaryCode::parse(&rows);
    }
    if arg.chars().next().is_some_and(|c| c.is_ascii_digit())
        && arg.chars().all(|c| c.is_ascii_alphanumeric() || c == ',')
        && !arg.contains("i2")
    {
        return Err(Error::MalformedWord(arg.to_string()));
    }
    known_code(arg)
}

fn render_code(c: &BinaryCode) -> String {
    let mut s = format!("length {}, dimension {}\n", c.length(), c.dimension());
    for r in c.generator_rows() {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

pub fn cmd_code(cmd: &CodeCommand) -> Outcome {
    let result = (|| -> Result<String, Error> {
        Ok(match cmd {
            CodeCommand::Dual { code } => render_code(&parse_code(code)?.dual()),
            CodeCommand::SelfDual { code } => {
                let c = parse_code(code)?;
                format!("{}\n", if c.is_self_dual() { "self-dual" } else { "not self-dual" })
            }
            CodeCommand::DoublyEven { code } => {
                let c = parse_code(code)?;
                format!("{}\n", if c.is_doubly_even() { "doubly even" } else { "not doubly even" })
            }
            CodeCommand::Enumerator { code } => format!("{}\n", parse_code(code)?.weight_enumerator()?),
            CodeCommand::Equiv { a, b } => {
                let (a, b) = (parse_code(a)?, parse_code(b)?);
                match are_equivalent(&a, &b)? {
                    Some(p) => format!("equivalent\npermutation {}\n", join(&p, " ")),
                    None => "not equivalent\n".to_string(),
                }
            }
            CodeCommand::Enumerate { length } => {
                let classes = enumerate_self_dual_classes(*length)?;
                let mut s = format!("{} classes of self-dual codes of length {length}\n", classes.len());
                for (i, c) in classes.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "class {}: doubly even {}, enumerator {}",
                        i + 1,
                        yes_no(c.is_doubly_even()),
                        c.weight_enumerator()?
                    );
                    for r in c.generator_rows() {
                        let _ = writeln!(s, "  {r}");
                    }
                }
                s
            }
        })
    })();
    match result {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::failure("code", &e),
    }
}

pub fn cmd_atlas(cmd: &AtlasCommand) -> Outcome {
    match cmd {
        AtlasCommand::List => {
            let mut s = format!("{:<20} {:>2} {:<8} {:<18} {}\n", "name", "k", "maximal", "code", "description");
            for e in &ATLAS {
                let _ = writeln!(
                    s,
                    "{:<20} {:>2} {:<8} {:<18} {}",
                    e.name,
                    e.expected.k,
                    yes_no(e.expected.maximal),
                    e.expected.code,
                    e.description
                );
            }
            Outcome::ok(s)
        }
        AtlasCommand::Emit { name, path } => {
            if !is_builtin_name(name) {
                return Outcome::failure("atlas", &Error::Parse(format!("unknown atlas entry {name:?}")));
            }
            let result = builtin(name).and_then(|(m, tau)| write_triangulation(path, &m, &tau));
            match result {
                Ok(()) => Outcome::ok(format!("wrote {name} to {}\n", path.display())),
                Err(e) => Outcome::failure("atlas", &e),
            }
        }
    }
}
