use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use e8g3::cache;
use e8g3::genus2;
use e8g3::report::{self, Fixtures, Suite};

#[derive(Parser)]
#[command(name = "e8g3", version, about = "Exact checks for the Z/3-graded E8 Lie algebra and its genus-2 side")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite; exit 0 iff every non-skipped check passes.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads for the parallel sweeps.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        threads: Option<u16>,
        /// Fixture file (cusp, sections) or directory (all). Overrides E8G3_FIXTURES.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Count minimal quintics of nonzero discriminant with height below A.
    Enumerate {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Root-system and structure-constant cache.
    Cache {
        action: CacheAction,
        /// Cache directory (default: $E8G3_CACHE, then .e8g3-cache).
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Rebuild,
    Check,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("e8g3: {msg}");
    ExitCode::from(2)
}

fn failure(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("e8g3: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify { suite, json, threads, fixture, seed } => {
            let env = std::env::var_os("E8G3_FIXTURES").map(PathBuf::from);
            let fixtures = match Fixtures::resolve(suite, fixture.as_deref(), env.as_deref()) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(n) = threads {
                pool = pool.num_threads(n as usize);
            }
            let pool = match pool.build() {
                Ok(p) => p,
                Err(e) => return failure(e),
            };
            let rep = pool.install(|| report::run(suite, &fixtures, seed));
            print!("{}", rep.to_text());
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, rep.to_json()) {
                    return failure(format!("{}: {e}", path.display()));
                }
            }
            ExitCode::from(if rep.pass { 0 } else { 1 })
        }
        Cmd::Enumerate { a, csv } => {
            let fs = genus2::enumerate_min(&a.into());
            println!("{}", fs.len());
            if let Some(path) = csv {
                let file = match std::fs::File::create(&path) {
                    Ok(f) => f,
                    Err(e) => return failure(format!("{}: {e}", path.display())),
                };
                if let Err(e) = genus2::write_csv(file, &fs) {
                    return failure(format!("{}: {e}", path.display()));
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Cache { action, dir } => {
            let dir = dir
                .or_else(|| std::env::var_os("E8G3_CACHE").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from(".e8g3-cache"));
            match action {
                CacheAction::Rebuild => match cache::rebuild(&dir) {
                    Ok(entries) => {
                        for e in entries {
                            println!("{}  {}", e.sha256, e.file);
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => failure(format!("{}: {e}", dir.display())),
                },
                CacheAction::Check => {
                    let lines = cache::check(&dir);
                    let mut ok = true;
                    for l in &lines {
                        let state = match (&l.on_disk, &l.recorded) {
                            _ if l.ok() => "ok",
                            (None, _) => "missing",
                            (_, None) => "unrecorded",
                            _ => "mismatch",
                        };
                        ok &= l.ok();
                        println!("{}  {}  {state}", l.expected, l.file);
                    }
                    ExitCode::from(if ok { 0 } else { 1 })
                }
            }
        }
    }
}
