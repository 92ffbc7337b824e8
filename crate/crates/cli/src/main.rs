use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qpath_core::paths::{enumerate_admissible, j_components, PathContext};
use qpath_core::qchar::QCharacterJson;
use qpath_core::render::render_path;
use qpath_core::screening::CertificateReport;
use qpath_core::verify::{self, VerifyReport};
use qpath_core::{q_character, CartanC};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qpath", version, about = "q-characters of fundamental modules in type C via paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-character, one monomial per admissible path
    Compute {
        #[command(flatten)]
        job: JobArgs,
        /// Emit the JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Check thinness, dominance, component sizes and the kernel conditions
    Verify(VerifyArgs),
    /// Draw admissible paths as ASCII grids
    Render {
        #[command(flatten)]
        job: JobArgs,
        /// Index of the path in enumeration order
        #[arg(long, conflicts_with = "all_paths", required_unless_present = "all_paths")]
        path: Option<usize>,
        #[arg(long)]
        all_paths: bool,
        /// Use colored bullets instead of R/B markers
        #[arg(long)]
        color: bool,
    },
    /// List the j-components and the moves inside each
    Components {
        #[command(flatten)]
        job: JobArgs,
        /// Restrict to one j
        #[arg(short = 'j', long)]
        node_j: Option<u32>,
    },
    /// Write the q-character and its kernel certificates as JSON
    Export {
        #[command(flatten)]
        job: JobArgs,
    },
}

#[derive(Args)]
struct JobArgs {
    #[arg(short = 'n', long = "rank")]
    rank: u32,
    #[arg(short = 'i', long = "node")]
    node: u32,
    #[arg(short = 'k', long = "level", allow_negative_numbers = true)]
    level: i64,
}

impl JobArgs {
    fn context(&self) -> Result<PathContext, Failure> {
        PathContext::new(self.rank, self.node, self.level).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short = 'n', long = "rank", required_unless_present = "max_rank")]
    rank: Option<u32>,
    #[arg(short = 'i', long = "node", required_unless_present = "all", conflicts_with = "all")]
    node: Option<u32>,
    #[arg(short = 'k', long = "level", allow_negative_numbers = true, required_unless_present = "all", conflicts_with = "all")]
    level: Option<i64>,
    /// Every node of rank n, or every rank up to --max-rank
    #[arg(long)]
    all: bool,
    #[arg(long, requires = "all", conflicts_with = "rank")]
    max_rank: Option<u32>,
    /// Emit the reports as JSON
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compute { job, json } => compute(job.context()?, json),
        Command::Verify(args) => verify_cmd(args),
        Command::Render { job, path, all_paths, color } => {
            render(job.context()?, if all_paths { None } else { path }, color)
        }
        Command::Components { job, node_j } => components(job.context()?, node_j),
        Command::Export { job } => export(job.context()?),
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends output silently.
fn emit(text: &str) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Internal(e.to_string())),
        _ => Ok(()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))
}

fn compute(ctx: PathContext, json: bool) -> Result<(), Failure> {
    let q = q_character(ctx);
    if json {
        emit(&(to_json(&q.to_json())? + "\n"))?;
        return Ok(());
    }
    let mut out = String::new();
    for (_, m) in q.path_index() {
        let c = q.poly().coefficient(m);
        if c == 1.into() {
            writeln!(out, "{m}").unwrap();
        } else {
            writeln!(out, "{c}*{m}").unwrap();
        }
    }
    emit(&out)?;
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> Result<(), Failure> {
    let jobs = if let Some(r) = args.max_rank {
        CartanC::new(r).map_err(|e| Failure::Usage(e.to_string()))?;
        verify::sweep_jobs(r)
    } else {
        let n = args.rank.expect("clap requires --rank");
        CartanC::new(n).map_err(|e| Failure::Usage(e.to_string()))?;
        if args.all {
            verify::fundamental_jobs(n)
        } else {
            let (i, k) = (args.node.expect("clap requires --node"), args.level.expect("clap requires --level"));
            vec![PathContext::new(n, i, k).map_err(|e| Failure::Usage(e.to_string()))?]
        }
    };
    let reports = verify::verify_sweep(&jobs);
    let passed = reports.iter().all(VerifyReport::passed);
    if args.json {
        emit(&(to_json(&reports)? + "\n"))?;
    } else {
        let mut out = String::new();
        for r in &reports {
            write_report(&mut out, r);
        }
        let certs: usize = reports.iter().map(|r| r.certificates.len()).sum();
        let verdict = if passed { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict}: {} job(s), {certs} certificate(s)", reports.len()).unwrap();
        emit(&out)?;
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_report(out: &mut String, r: &VerifyReport) {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{verdict} C{} i={} k={}: {} monomials", r.n, r.i, r.k, r.monomials).unwrap();
    for c in &r.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        writeln!(out, "  {mark} {:<12} {}", c.name, c.detail).unwrap();
    }
    for cert in &r.certificates {
        let mark = if cert.passed() { "ok  " } else { "FAIL" };
        writeln!(
            out,
            "  {mark} j={:<10} {} components, sizes {}",
            cert.j,
            cert.component_count,
            histogram(cert)
        )
        .unwrap();
        if !cert.passed() {
            writeln!(out, "{}", serde_json::to_string_pretty(cert).unwrap()).unwrap();
        }
    }
}

fn histogram(cert: &CertificateReport) -> String {
    let parts: Vec<String> = cert.size_histogram.iter().map(|(s, c)| format!("{s}x{c}")).collect();
    parts.join(" ")
}

fn render(ctx: PathContext, index: Option<usize>, color: bool) -> Result<(), Failure> {
    let paths = enumerate_admissible(ctx);
    let mut out = String::new();
    match index {
        Some(idx) => {
            let p = paths.get(idx).ok_or_else(|| {
                Failure::Usage(format!("path index {idx} out of range 0..{}", paths.len()))
            })?;
            out.push_str(&render_path(p, color));
        }
        None => {
            for (idx, p) in paths.iter().enumerate() {
                if idx > 0 {
                    out.push('\n');
                }
                writeln!(out, "# path {idx}").unwrap();
                out.push_str(&render_path(p, color));
            }
        }
    }
    emit(&out)?;
    Ok(())
}

fn components(ctx: PathContext, only: Option<u32>) -> Result<(), Failure> {
    let paths = enumerate_admissible(ctx);
    let q = q_character(ctx);
    let nodes: Vec<u32> = match only {
        Some(j) => vec![j],
        None => (1..=ctx.rank()).collect(),
    };
    let global = |p: &qpath_core::Path| paths.binary_search(p).expect("component path is admissible");
    let mut out = String::new();
    for j in nodes {
        let comps = j_components(ctx, j).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out, "j={j}: {} components", comps.len()).unwrap();
        for (b, comp) in comps.iter().enumerate() {
            let members: Vec<String> = comp
                .paths
                .iter()
                .map(|p| format!("{} {}", global(p), q.monomial_for(p).expect("indexed")))
                .collect();
            writeln!(out, "  [{b}] size {}: {}", comp.len(), members.join(", ")).unwrap();
            for mv in &comp.moves {
                writeln!(
                    out,
                    "      {} -> {} at ({}, {})",
                    global(&comp.paths[mv.from]),
                    global(&comp.paths[mv.to]),
                    mv.column,
                    mv.ell
                )
                .unwrap();
            }
        }
    }
    emit(&out)?;
    Ok(())
}

#[derive(Serialize)]
struct Export {
    qcharacter: QCharacterJson,
    certificates: Vec<CertificateReport>,
}

fn export(ctx: PathContext) -> Result<(), Failure> {
    let report = verify::verify_job(ctx);
    let doc = Export { qcharacter: q_character(ctx).to_json(), certificates: report.certificates };
    emit(&(to_json(&doc)? + "\n"))?;
    Ok(())
}
