//! Command-line front end: validate models, compute their rigid automorphism
//! pieces, split them into chains, embed them into a hyperquadric, classify
//! them, and generate verified corpora.
//!
//! Exit codes: 0 success, 1 invalid model, 2 parse or input error,
//! 3 no generalized rotation, 4 internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use hypersym::aut_solver::{compute_g_c, AutReport};
use hypersym::chains::{extract_chains, ChainFamily, Decomposition};
use hypersym::classify::{classify_real_poly, is_holomorphically_degenerate, ClassifyError};
use hypersym::corpus::{self, CorpusConfig};
use hypersym::embedding::build_embedding;
use hypersym::grading::Model;
use hypersym::parser::{parse_model_file, ModelFile, ParseError};
use hypersym::report::{self, Report};

#[derive(Parser)]
#[command(name = "hypersym", version, about = "Generalized rotations of model hypersurfaces Im w = P(z, conj z) in C^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Include per-stage timings in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a model file and report its weight and multitype.
    Check {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// List the rigid components of the automorphism algebra by weight.
    Aut {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Split the model into symmetric pairs of chains for a generalized rotation.
    Chains {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Build and verify the map into a hyperquadric.
    Embed {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether automorphisms are determined by their 2-jets.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Generate seeded model files and verify each of them.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// One of shear, quadratic, mixed; cycles through all when omitted.
        #[arg(long)]
        family: Option<ChainFamily>,
        /// Directory receiving the model files and summary.json.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    fn invalid(e: impl std::fmt::Display) -> Self {
        Self::new(1, format!("invalid model: {e}"))
    }

    fn internal(e: impl std::fmt::Display) -> Self {
        Self::new(4, format!("internal error: {e}"))
    }
}

struct Timer {
    enabled: bool,
    start: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self { enabled, start: Instant::now() }
    }

    fn lap(&mut self, report: &mut Report, stage: &str) {
        if self.enabled {
            report.time(stage, self.start.elapsed().as_micros() as u64);
        }
        self.start = Instant::now();
    }
}

fn read_model_file(path: &Path) -> Result<ModelFile, Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))?;
    parse_model_file(&src).map_err(|e| Failure::new(2, render_parse_error(path, &src, &e)))
}

fn render_parse_error(path: &Path, src: &str, e: &ParseError) -> String {
    let d = e.diagnostic();
    let line = src.lines().nth(d.line - 1).unwrap_or("");
    format!("{}:{}:{}: {e}\n  {line}\n  {}^", path.display(), d.line, d.column, " ".repeat(d.column - 1))
}

fn load(path: &Path) -> Result<Model, Failure> {
    let f = read_model_file(path)?;
    Model::validate(f.poly, f.weight).map_err(Failure::invalid)
}

fn degeneracy_warning(m: &Model, r: &mut Report) -> Result<(), Failure> {
    if let Some(x) = is_holomorphically_degenerate(m).map_err(Failure::internal)? {
        r.warn(format!("model is holomorphically degenerate: {x} annihilates P"));
    }
    Ok(())
}

fn rotation_and_chains(m: &Model, r: &mut Report, t: &mut Timer) -> Result<(AutReport, Decomposition), Failure> {
    let aut = compute_g_c(m).map_err(Failure::internal)?;
    t.lap(r, "solve");
    let Some((_, y)) = aut.generalized_rotations().into_iter().next() else {
        return Err(Failure::new(3, "the model has no generalized rotation (g_c = 0)"));
    };
    let d = extract_chains(m, &y).map_err(Failure::internal)?;
    t.lap(r, "chains");
    Ok((aut, d))
}

fn run(cmd: Command) -> Result<(Report, Output), Failure> {
    match cmd {
        Command::Check { file, out } => {
            let mut r = Report::new("check");
            let mut t = Timer::new(out.timings);
            let m = load(&file)?;
            t.lap(&mut r, "validate");
            r.model = Some(report::model_section(&m));
            Ok((r, out))
        }
        Command::Aut { file, out } => {
            let mut r = Report::new("aut");
            let mut t = Timer::new(out.timings);
            let m = load(&file)?;
            r.model = Some(report::model_section(&m));
            degeneracy_warning(&m, &mut r)?;
            t.lap(&mut r, "validate");
            let aut = compute_g_c(&m).map_err(Failure::internal)?;
            t.lap(&mut r, "solve");
            r.algebra = Some(report::algebra_section(&aut));
            Ok((r, out))
        }
        Command::Chains { file, out } => {
            let mut r = Report::new("chains");
            let mut t = Timer::new(out.timings);
            let m = load(&file)?;
            r.model = Some(report::model_section(&m));
            degeneracy_warning(&m, &mut r)?;
            t.lap(&mut r, "validate");
            let (aut, d) = rotation_and_chains(&m, &mut r, &mut t)?;
            if aut.dim_g_c() > 1 {
                r.warn(format!("dim g_c = {}; using the first basis element", aut.dim_g_c()));
            }
            let section = report::decomposition_section(&d, &m);
            if !section.resynthesis_exact {
                return Err(Failure::internal("chains do not resynthesize the model"));
            }
            r.decomposition = Some(section);
            Ok((r, out))
        }
        Command::Embed { file, out } => {
            let mut r = Report::new("embed");
            let mut t = Timer::new(out.timings);
            let m = load(&file)?;
            r.model = Some(report::model_section(&m));
            degeneracy_warning(&m, &mut r)?;
            t.lap(&mut r, "validate");
            let (_, d) = rotation_and_chains(&m, &mut r, &mut t)?;
            let e = build_embedding(&d);
            let section = report::embedding_section(&e, &m, &d.rotation);
            t.lap(&mut r, "embed");
            r.decomposition = Some(report::decomposition_section(&d, &m));
            let ok = section.maps_into && section.f_related && section.quadric_symmetry;
            r.embedding = Some(section);
            if !ok {
                print_report(&r, out);
                return Err(Failure::internal("embedding verification failed"));
            }
            Ok((r, out))
        }
        Command::Classify { file, out } => {
            let mut r = Report::new("classify");
            let mut t = Timer::new(out.timings);
            let f = read_model_file(&file)?;
            let model = Model::validate(f.poly.clone(), f.weight.clone()).ok();
            let v = classify_real_poly(&f.poly, f.weight).map_err(|e| match e {
                ClassifyError::Invalid(g) => Failure::invalid(g),
                other => Failure::internal(other),
            })?;
            t.lap(&mut r, "classify");
            r.model = model.as_ref().map(report::model_section);
            r.verdict = Some(report::verdict_section(&v, model.as_ref()));
            Ok((r, out))
        }
        Command::Corpus { seed, count, family, out, output } => {
            let mut r = Report::new("corpus");
            let mut t = Timer::new(output.timings);
            let config = CorpusConfig::new(seed, count, family);
            let (models, summary) = corpus::run(&config).map_err(Failure::internal)?;
            t.lap(&mut r, "corpus");
            let failed = summary.failed;
            r.corpus = Some(summary);
            if let Some(dir) = out {
                let io = |e: std::io::Error| Failure::new(2, format!("cannot write to {}: {e}", dir.display()));
                fs::create_dir_all(&dir).map_err(io)?;
                for c in &models {
                    fs::write(dir.join(&c.file_name), &c.text).map_err(io)?;
                }
                let mut stable = r.clone();
                stable.timings = None;
                fs::write(dir.join("summary.json"), stable.to_json() + "\n").map_err(io)?;
            }
            if failed > 0 {
                print_report(&r, output);
                return Err(Failure::internal(format!("{failed} corpus entries failed verification")));
            }
            Ok((r, output))
        }
    }
}

fn print_report(r: &Report, out: Output) {
    if out.json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((r, out)) => {
            print_report(&r, out);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
