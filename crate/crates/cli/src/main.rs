use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use circbook::classify::{component_count, verify_certificate};
use circbook::render::{dot, svg};
use circbook::sweep::run_sweep;
use circbook::verify::{brute_force_mbt, verify_embedding, DEFAULT_PAGE_CAP};
use circbook::{classify, embed, CirculantSpec, EmbeddingDocument};
use clap::{Parser, Subcommand};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_SWEEP: u8 = 4;

#[derive(Parser)]
#[command(
    name = "circbook",
    version,
    about = "Two-jump circulant graphs and their matching book embeddings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identify the structural family of C(n, {k1, k2}).
    Classify {
        n: usize,
        k1: usize,
        k2: usize,
        #[arg(long)]
        json: bool,
        /// Build and check an explicit isomorphism certificate.
        #[arg(long)]
        certify: bool,
    },
    /// Build and verify a matching book embedding of C(n, k).
    Embed {
        n: usize,
        k: usize,
        /// Write the embedding document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check an embedding document against its graph.
    Verify { file: PathBuf },
    /// Exhaustive matching book thickness for small n.
    Oracle {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = DEFAULT_PAGE_CAP)]
        cap: usize,
    },
    /// Embed and verify every C(n, k) up to a bound; compare with the oracle on small n.
    Sweep {
        #[arg(long, default_value_t = 60)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        oracle_max: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn write(path: &PathBuf, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classify {
            n,
            k1,
            k2,
            json,
            certify,
        } => {
            let c = classify(n, k1, k2).map_err(|e| e.to_string())?;
            let mut certified = None;
            if certify {
                let spec = c.spec().map_err(|e| e.to_string())?;
                let cert = c.certificate().map_err(|e| e.to_string())?;
                let ok = verify_certificate(&spec, &cert).map_err(|e| e.to_string())?;
                if !ok {
                    eprintln!("certificate failed for C({n}, {{{k1}, {k2}}})");
                    return Ok(ExitCode::from(EXIT_VERIFY));
                }
                certified = Some(component_count(&spec));
            }
            if json {
                let mut value = serde_json::to_value(&c).map_err(|e| e.to_string())?;
                value["summary"] = c.family.to_string().into();
                if let Some(components) = certified {
                    value["certified"] = true.into();
                    value["components"] = components.into();
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?
                );
            } else {
                println!("{}", c.family);
                println!("d1={} d2={} d={}", c.d1, c.d2, c.d);
                if let Some(components) = certified {
                    println!("certificate ok ({components} components)");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            n,
            k,
            out,
            svg: svg_path,
            dot: dot_path,
        } => {
            let spec = CirculantSpec::ck(n, k).map_err(|e| e.to_string())?;
            let emb = embed(n, k).map_err(|e| e.to_string())?;
            let report = verify_embedding(&spec, &emb);
            let doc = EmbeddingDocument::new(&spec, &emb);
            match &out {
                Some(path) => write(path, &doc.to_json())?,
                None => println!("{}", doc.to_json()),
            }
            let title = format!("C({n},{k}) {} pages, {}", emb.pages, emb.route);
            if let Some(path) = &svg_path {
                write(path, &svg(&emb, &title))?;
            }
            if let Some(path) = &dot_path {
                write(path, &dot(&emb, &format!("C({n},{k})")))?;
            }
            if !report.is_valid() {
                eprintln!("verification failed: {:?}", report.first_violation);
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
            if out.is_some() {
                println!("C({n},{k}): {} pages via {}", emb.pages, emb.route);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let doc = EmbeddingDocument::from_json(&text).map_err(|e| e.to_string())?;
            let spec = doc.spec().map_err(|e| e.to_string())?;
            let report = verify_embedding(&spec, &doc.embedding());
            println!(
                "{}",
                serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
            );
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            })
        }
        Command::Oracle { n, k, cap } => {
            let spec = CirculantSpec::ck(n, k).map_err(|e| e.to_string())?;
            let m = brute_force_mbt(&spec, cap).map_err(|e| e.to_string())?;
            println!("{m}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            n_max,
            oracle_max,
            report,
        } => {
            let threads = match std::env::var("CIRC_THREADS") {
                Ok(s) => s
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("CIRC_THREADS: not a number: {s}"))?,
                Err(_) => 0,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| e.to_string())?;
            let result = pool.install(|| run_sweep(n_max, oracle_max));
            if let Some(path) = &report {
                write(
                    path,
                    &serde_json::to_string_pretty(&result).map_err(|e| e.to_string())?,
                )?;
            }
            for row in result.rows.iter().filter(|r| !r.ok) {
                eprintln!(
                    "discrepancy at C({},{}): pages={:?} predicted={} oracle={:?} valid={} {}",
                    row.n,
                    row.k,
                    row.pages,
                    row.predicted,
                    row.oracle,
                    row.valid,
                    row.error.as_deref().unwrap_or("")
                );
            }
            println!(
                "{} graphs, {} discrepancies",
                result.rows.len(),
                result.discrepancies
            );
            Ok(if result.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_SWEEP)
            })
        }
    }
}
