//! Command-line surface for the artin-core toolkit.
//!
//! Exit codes: 0 success, 2 usage or parameter error, 3 mathematical
//! precondition failure (infinite type, disconnected subset), 4 refuted
//! claim.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use artin_core::coxeter::{CoxeterGraph, StandardType};
use artin_core::garside::{delta_word_of, normal_form, words_equal, ArtinWord};
use artin_core::mcg::{presentation_of, Flavor, SurfaceParams};
use artin_core::presentation::Presentation;
use artin_core::verifier::{
    check_derivation, run_suite, ClaimStatus, DerivationScript, SuiteOptions, SUITE_IDS,
};

const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_REFUTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "artin",
    about = "Finite-type Artin group computations and mapping class group presentations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation of a punctured mapping class group.
    Present(PresentArgs),
    /// Compute a Garside normal form, or decide equality of two words.
    Solve(SolveArgs),
    /// Print the fundamental element word of a type or a vertex subset.
    Delta(DeltaArgs),
    /// Classify a Coxeter graph as a standard finite type.
    Classify(ClassifyArgs),
    /// Run a named verification suite or check a derivation script.
    Verify(VerifyArgs),
    /// Re-export a presentation file in another format.
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
    Gap,
}

#[derive(Args)]
struct PresentArgs {
    /// Genus (at least 1).
    #[arg(long, short = 'g')]
    g: u32,
    /// Boundary parameter r (the bounded surface has r + 1 boundary
    /// components).
    #[arg(long, short = 'r', default_value_t = 0)]
    r: u32,
    /// Puncture count.
    #[arg(long, short = 'n', default_value_t = 0)]
    n: u32,
    /// Present the pure mapping class group (punctures fixed pointwise).
    #[arg(long)]
    pure: bool,
    /// Present the closed-surface group (forces r = 0).
    #[arg(long)]
    closed: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file in the graph text format.
    #[arg(long)]
    graph: PathBuf,
    /// Word in the word grammar.
    #[arg(long)]
    word: String,
    /// Optional second word; prints `equal` or `distinct`.
    #[arg(long)]
    word2: Option<String>,
}

#[derive(Args)]
struct DeltaArgs {
    /// Standard type tag such as A2, B3, D4, E7.
    #[arg(long, conflicts_with = "graph")]
    r#type: Option<String>,
    /// Graph file; requires --subset.
    #[arg(long, requires = "subset")]
    graph: Option<PathBuf>,
    /// Comma-separated vertex subset of the graph.
    #[arg(long)]
    subset: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Graph file in the graph text format.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id; `all` runs every suite.
    #[arg(long, conflicts_with_all = ["script", "search"])]
    suite: Option<String>,
    /// Derivation script file; requires --presentation.
    #[arg(long, requires = "presentation", conflicts_with = "search")]
    script: Option<PathBuf>,
    /// Word to reduce to the identity by bounded script search; requires
    /// --presentation. Prints a checkable script, or `inconclusive`.
    #[arg(long, requires = "presentation")]
    search: Option<String>,
    /// Presentation file (machine format) for --script / --search.
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Relator-insertion limit for --search.
    #[arg(long, default_value_t = 12)]
    depth: usize,
    /// Seed for randomized property checks.
    #[arg(long, default_value_t = 0xA17)]
    seed: u64,
    /// Sample count for randomized property checks.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Args)]
struct ExportArgs {
    /// Input presentation file, plain `< .. | .. >` or machine format.
    #[arg(long, short = 'i')]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Machine)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Present(args) => cmd_present(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Delta(args) => cmd_delta(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn precondition_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_PRECONDITION)
}

fn print_presentation(pres: &Presentation, format: Format) {
    match format {
        Format::Plain => {
            for g in pres.generators() {
                if let Some(doc) = pres.gen_doc(g) {
                    println!("# {g}: {doc}");
                }
            }
            println!("{}", pres.to_plain_text());
        }
        Format::Machine => print!("{}", pres.to_machine_format()),
        Format::Gap => print!("{}", pres.to_gap()),
    }
}

fn cmd_present(args: PresentArgs) -> ExitCode {
    let flavor = if args.pure { Flavor::Pure } else { Flavor::Full };
    let params = match SurfaceParams::new(args.g, args.r, args.n, flavor, args.closed) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    match presentation_of(&params) {
        Ok(pres) => {
            print_presentation(&pres, args.format);
            ExitCode::SUCCESS
        }
        Err(e) => precondition_error(&e.to_string()),
    }
}

fn load_graph(path: &PathBuf) -> Result<CoxeterGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    CoxeterGraph::parse(&text).map_err(|e| e.to_string())
}

fn cmd_solve(args: SolveArgs) -> ExitCode {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let w1 = match ArtinWord::parse(&graph, &args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };
    match &args.word2 {
        Some(text) => {
            let w2 = match ArtinWord::parse(&graph, text) {
                Ok(w) => w,
                Err(e) => return usage_error(&e.to_string()),
            };
            match words_equal(&w1, &w2) {
                Ok(true) => {
                    println!("equal");
                    ExitCode::SUCCESS
                }
                Ok(false) => {
                    println!("distinct");
                    ExitCode::SUCCESS
                }
                Err(e) => precondition_error(&e.to_string()),
            }
        }
        None => match normal_form(&w1) {
            Ok(nf) => {
                println!("{}", nf.display());
                ExitCode::SUCCESS
            }
            Err(e) => precondition_error(&e.to_string()),
        },
    }
}

fn cmd_delta(args: DeltaArgs) -> ExitCode {
    if let Some(tag) = &args.r#type {
        let ty = match StandardType::parse(tag) {
            Ok(t) => t,
            Err(e) => return usage_error(&e.to_string()),
        };
        let graph = ty.instantiate();
        let names: Vec<String> = graph.vertex_names().to_vec();
        match delta_word_of(&graph, &names) {
            Ok(w) => {
                println!("{}", w.to_text());
                ExitCode::SUCCESS
            }
            Err(e) => precondition_error(&e.to_string()),
        }
    } else if let Some(path) = &args.graph {
        let graph = match load_graph(path) {
            Ok(g) => g,
            Err(e) => return usage_error(&e),
        };
        let subset: Vec<String> = args
            .subset
            .as_deref()
            .unwrap_or("")
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if subset.is_empty() {
            return usage_error("--subset must list at least one vertex");
        }
        match delta_word_of(&graph, &subset) {
            Ok(w) => {
                println!("{}", w.to_text());
                ExitCode::SUCCESS
            }
            Err(e) => precondition_error(&e.to_string()),
        }
    } else {
        usage_error("one of --type or --graph is required")
    }
}

fn cmd_classify(args: ClassifyArgs) -> ExitCode {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    if !graph.is_connected() {
        return precondition_error("graph is not connected");
    }
    match graph.classify_finite_type() {
        Some((ty, map)) => {
            println!("{ty}");
            for (i, k) in map.iter().enumerate() {
                println!("map {} x{}", graph.vertex_name(i), k);
            }
            ExitCode::SUCCESS
        }
        None => precondition_error("not of supported finite type"),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if let Some(word_text) = &args.search {
        let pres_path = args.presentation.as_ref().expect("clap requires it");
        let pres_text = match std::fs::read_to_string(pres_path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("{}: {e}", pres_path.display())),
        };
        let pres = match Presentation::parse_machine(&pres_text) {
            Ok(p) => p,
            Err(e) => return usage_error(&e.to_string()),
        };
        let word = match artin_core::verifier::letters_from_text(word_text) {
            Ok(w) => w,
            Err(e) => return usage_error(&e.to_string()),
        };
        return match artin_core::verifier::bounded_search(&pres, &word, args.depth) {
            Some(script) => {
                debug_assert_eq!(check_derivation(&pres, &script), Ok(true));
                print!("{}", script.to_text());
                ExitCode::SUCCESS
            }
            None => {
                // Not a refutation: the search is breadth-limited.
                println!("inconclusive");
                ExitCode::SUCCESS
            }
        };
    }
    if let Some(script_path) = &args.script {
        let pres_path = args.presentation.as_ref().expect("clap requires it");
        let pres_text = match std::fs::read_to_string(pres_path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("{}: {e}", pres_path.display())),
        };
        let pres = match Presentation::parse_machine(&pres_text) {
            Ok(p) => p,
            Err(e) => return usage_error(&e.to_string()),
        };
        let script_text = match std::fs::read_to_string(script_path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("{}: {e}", script_path.display())),
        };
        let script = match DerivationScript::parse(&script_text) {
            Ok(s) => s,
            Err(e) => return usage_error(&e.to_string()),
        };
        return match check_derivation(&pres, &script) {
            Ok(true) => {
                println!("claim script verified");
                ExitCode::SUCCESS
            }
            Ok(false) => {
                println!("claim script refuted");
                ExitCode::from(EXIT_REFUTED)
            }
            Err(e) => usage_error(&e.to_string()),
        };
    }

    let Some(suite) = args.suite else {
        return usage_error("one of --suite or --script is required");
    };
    let opts = SuiteOptions {
        seed: args.seed,
        samples: args.samples,
    };
    let ids: Vec<&str> = if suite == "all" {
        SUITE_IDS.to_vec()
    } else {
        match SUITE_IDS.iter().find(|s| **s == suite) {
            Some(id) => vec![*id],
            None => {
                return usage_error(&format!(
                    "unknown suite `{suite}` (available: {}, all)",
                    SUITE_IDS.join(", ")
                ))
            }
        }
    };
    let mut any_refuted = false;
    for id in ids {
        let report = match run_suite(id, &opts) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        println!("suite {id}");
        println!("  {:<28} {:>14} {:>8}", "claim", "status", "ms");
        for c in &report.claims {
            println!("  {:<28} {:>14} {:>8}", c.id, c.status.to_string(), c.millis);
        }
        for c in &report.claims {
            println!("claim {} {}", c.id, c.status);
            if c.status == ClaimStatus::Refuted {
                any_refuted = true;
            }
        }
    }
    if any_refuted {
        ExitCode::from(EXIT_REFUTED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_export(args: ExportArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("{}: {e}", args.input.display())),
    };
    let trimmed = text.trim_start();
    let pres = if trimmed.starts_with('<') {
        Presentation::parse_plain(&text)
    } else {
        Presentation::parse_machine(&text)
    };
    match pres {
        Ok(p) => {
            print_presentation(&p, args.format);
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}
