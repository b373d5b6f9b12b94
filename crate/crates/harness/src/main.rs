use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use leibniz::pairing::form_radical;
use leibniz::{Algebra, Subspace};
use leibniz_harness::corpus::{self, CorpusEntry, Provenance};
use leibniz_harness::drivers::{self, hierarchy_witnesses, Claim, Options};
use leibniz_harness::format::{subspace_strings, DEFAULT_MAX_DIM};
use leibniz_harness::report::{worst, Status, VerificationReport};
use serde_json::json;

const MALFORMED: u8 = 3;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact checks on finite-dimensional Leibniz algebras over Q")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Reject input algebras above this dimension.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification flags and the kernel, radical and related subspaces.
    Analyze { file: PathBuf },
    /// Build an algebra from a named recipe.
    Construct {
        recipe: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one claim (or `all`) on an algebra file.
    Verify {
        claim: String,
        file: PathBuf,
        #[arg(long, default_value_t = Options::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = Options::default().trials)]
        trials: usize,
    },
    /// Write one algebra per hierarchy level and check the levels.
    Witness {
        #[arg(long, default_value = "witnesses")]
        out: PathBuf,
    },
    /// The shipped corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Run every claim on every entry and compare recorded expectations.
    Run {
        /// Read entries from this directory instead of the built-in list.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, default_value_t = Options::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = Options::default().trials)]
        trials: usize,
    },
    /// Write the built-in entries as files.
    Export {
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
    },
    /// List recipes and entry ids.
    List,
}

/// A failure that ends the run with the malformed-input exit code.
struct Malformed(String);

impl<E: std::fmt::Display> From<E> for Malformed {
    fn from(e: E) -> Self {
        Malformed(e.to_string())
    }
}

fn read_entry(path: &Path, max_dim: usize) -> Result<CorpusEntry, Malformed> {
    let text = fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    CorpusEntry::from_json(&text, stem, max_dim).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Malformed> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Malformed(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, format!("{text}\n")).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn dims(series: &[Subspace<leibniz::Q>]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}

fn analyze(entry: &CorpusEntry, json: bool) {
    let a: &Algebra = &entry.algebra;
    let flags = a.classify();
    let full = Subspace::full(a.dim());
    let kernel = a.leibniz_kernel();
    let radical = form_radical(a);
    let solvable = a.solvable_radical();
    let center = a.center();
    if json {
        let value = json!({
            "id": entry.id,
            "dim": a.dim(),
            "level": flags.level(),
            "flags": {
                "left-leibniz": flags.left_leibniz,
                "right-leibniz": flags.right_leibniz,
                "left-central": flags.left_central,
                "symmetric": flags.symmetric,
                "lie": flags.lie,
            },
            "rank": a.rank(),
            "kernel": subspace_strings(&kernel),
            "radical": subspace_strings(&radical),
            "solvable-radical": subspace_strings(&solvable),
            "center": subspace_strings(&center),
            "derived-series": dims(&a.derived_series()),
            "lower-central-series": dims(&a.lower_central_series(&full)),
        });
        println!("{value}");
        return;
    }
    println!("{} (dim {}, basis {})", entry.id, a.dim(), a.labels().join(" "));
    println!(
        "  level {}: left Leibniz {}, right Leibniz {}, left central {}, symmetric {}, Lie {}",
        flags.level(),
        flags.left_leibniz,
        flags.right_leibniz,
        flags.left_central,
        flags.symmetric,
        flags.lie
    );
    if let Some(v) = &flags.witness {
        println!("  first failing law: {}", leibniz_harness::report::Witness::violation(v));
    }
    let rows = [
        ("kernel C(M)", &kernel),
        ("form radical R", &radical),
        ("solvable radical", &solvable),
        ("center", &center),
    ];
    for (name, s) in rows {
        let basis: Vec<String> = subspace_strings(s).iter().map(|r| format!("({})", r.join(", "))).collect();
        println!("  {name:<17} dim {:>2}  {}", s.dim(), basis.join(" "));
    }
    println!("  rank {}", a.rank());
    println!("  derived series dims {:?}", dims(&a.derived_series()));
    println!("  lower central series dims {:?}", dims(&a.lower_central_series(&full)));
}

fn print_reports(reports: &[VerificationReport], json: bool) {
    for r in reports {
        if json {
            println!("{}", r.to_json());
        } else {
            println!("{r}");
        }
    }
}

fn parse_claims(claim: &str) -> Result<Vec<Claim>, Malformed> {
    if claim == "all" {
        Ok(Claim::ALL.to_vec())
    } else {
        Ok(vec![claim.parse::<Claim>()?])
    }
}

fn corpus_entries(dir: Option<&Path>, max_dim: usize) -> Result<Vec<CorpusEntry>, Malformed> {
    let Some(dir) = dir else {
        return Ok(corpus::builtin());
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Malformed(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| read_entry(p, max_dim)).collect()
}

fn exit(status: Status) -> ExitCode {
    ExitCode::from(u8::try_from(status.exit_code()).expect("small exit codes"))
}

fn run(cli: Cli) -> Result<ExitCode, Malformed> {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file } => {
            analyze(&read_entry(&file, cli.max_dim)?, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { recipe, out } => {
            let entry = corpus::from_recipe(&recipe, &recipe)?;
            match out {
                Some(path) => {
                    write_file(&path, &entry.to_json())?;
                    if !json {
                        println!("wrote {} (dim {})", path.display(), entry.algebra.dim());
                    }
                }
                None => println!("{}", entry.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            file,
            seed,
            trials,
        } => {
            let claims = parse_claims(&claim)?;
            let entry = read_entry(&file, cli.max_dim)?;
            let opts = Options { seed, trials };
            let reports: Vec<_> = claims
                .into_iter()
                .map(|c| drivers::run(c, &entry.id, &entry.algebra, opts))
                .collect();
            print_reports(&reports, json);
            Ok(exit(worst(&reports)))
        }
        Command::Witness { out } => {
            let h = hierarchy_witnesses();
            for e in &h.entries {
                write_file(&out.join(format!("{}.json", e.id)), &e.to_json())?;
            }
            print_reports(std::slice::from_ref(&h.report), json);
            if !json {
                println!("wrote {} files to {}", h.entries.len(), out.display());
            }
            Ok(exit(h.report.status))
        }
        Command::Corpus { action } => corpus_command(action, cli.max_dim, json),
    }
}

fn corpus_command(action: CorpusAction, max_dim: usize, json: bool) -> Result<ExitCode, Malformed> {
    match action {
        CorpusAction::Run { dir, seed, trials } => {
            let entries = corpus_entries(dir.as_deref(), max_dim)?;
            let opts = Options { seed, trials };
            let mut all = Vec::new();
            let mut mismatched = false;
            for e in &entries {
                for (key, expected, found) in e.mismatches() {
                    mismatched = true;
                    eprintln!("{}: expected {key} = {expected}, found {found}", e.id);
                }
                let reports = drivers::run_all(&e.id, &e.algebra, opts);
                if json {
                    print_reports(&reports, true);
                } else {
                    let cells: Vec<String> = reports.iter().map(|r| format!("{}={}", r.claim, r.status)).collect();
                    println!("{:<22} {}", e.id, cells.join(" "));
                    for r in reports.iter().filter(|r| r.status == Status::Refuted) {
                        println!("  {r}");
                    }
                }
                all.extend(reports);
            }
            let status = worst(&all);
            if !json {
                let count = |s: Status| all.iter().filter(|r| r.status == s).count();
                println!(
                    "{} entries, {} reports: {} verified, {} skipped, {} field-limited, {} refuted",
                    entries.len(),
                    all.len(),
                    count(Status::Verified),
                    count(Status::Skipped),
                    count(Status::FieldLimited),
                    count(Status::Refuted)
                );
            }
            Ok(if mismatched && status < Status::Refuted {
                exit(Status::Refuted)
            } else {
                exit(status)
            })
        }
        CorpusAction::Export { out } => {
            let entries = corpus::builtin();
            for e in &entries {
                write_file(&out.join(format!("{}.json", e.id)), &e.to_json())?;
            }
            if !json {
                println!("wrote {} entries to {}", entries.len(), out.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        CorpusAction::List => {
            for e in corpus::builtin() {
                let origin = match &e.provenance {
                    Provenance::Recipe(r) => r.clone(),
                    Provenance::Literal => "literal".into(),
                };
                println!("{:<22} dim {:>2}  {origin}", e.id, e.algebra.dim());
            }
            println!("recipes: {}", corpus::RECIPES.join(", "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(MALFORMED);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(MALFORMED)
        }
    }
}
