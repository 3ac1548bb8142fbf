use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use linecons::crosscheck::{evaluate_all, CrossCheck};
use linecons::generate::{exhaustive_signed_graphs, generate_line_consistent, random_corpus, Recipe};
use linecons::io::{export_dot, read_signed_graph, to_json_pretty, write_marked_graph, write_signed_graph};
use linecons::{
    check_condition_i, check_condition_ii, check_condition_iii, check_simple_criterion, classify_structure,
    is_consistent_oracle, line_graph, Method, SignedGraph, Verdict,
};

const EXIT_CONSISTENT: u8 = 0;
const EXIT_NOT_CONSISTENT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser)]
#[command(name = "linecons", version, about = "Decide line consistency of signed multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a signed graph is line consistent.
    ///
    /// Exit status: 0 line consistent, 1 not, 2 bad input, 3 methods disagree.
    Check {
        /// Graph JSON file, or - for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Print a negative circle of the line graph for negative verdicts.
        #[arg(long)]
        witness: bool,
        /// Print the verdicts as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write the sign-marked line graph.
    LineGraph {
        input: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify the components of the negative subgraph.
    Decompose {
        input: PathBuf,
        /// Render the graph as DOT with the components as clusters instead.
        #[arg(long)]
        dot: bool,
    },
    /// Compare every method with the oracle on generated graphs.
    ///
    /// Exit status: 0 all agree, 2 bad bounds, 3 some disagreement.
    Fuzz {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Every graph within the bounds instead of random ones.
        #[arg(long, conflicts_with = "generator")]
        exhaustive: bool,
        /// Graphs from random recipes of the line-consistent generator; each
        /// must also be judged line consistent.
        #[arg(long)]
        generator: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    I,
    Ii,
    Iii,
    Thm1,
    Structure,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    read_signed_graph(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn describe(v: &Verdict, witness: bool) -> String {
    let mut line = format!("{}: ", v.method);
    if v.line_consistent {
        line.push_str("line consistent");
    } else {
        line.push_str("not line consistent");
        if let Some(c) = &v.failed_clause {
            line.push_str(&format!(" ({c})"));
        }
        if witness {
            match &v.witness {
                Some(w) => line.push_str(&format!("\n  witness: [{}] via {w}", w.vertices().join(" "))),
                None => line.push_str("\n  witness: none found"),
            }
        }
    }
    line
}

fn single(g: &SignedGraph, method: MethodArg) -> Result<Verdict, Failure> {
    Ok(match method {
        MethodArg::I => check_condition_i(g),
        MethodArg::Ii => check_condition_ii(g),
        MethodArg::Iii => check_condition_iii(g),
        MethodArg::Structure => classify_structure(g).to_verdict(g),
        MethodArg::Thm1 => check_simple_criterion(g).map_err(|e| Failure::input(format!("thm1: {e}")))?,
        MethodArg::Oracle => {
            let found = is_consistent_oracle(&line_graph(g)).map_err(Failure::input)?;
            Verdict {
                method: Method::Oracle,
                line_consistent: found.consistent,
                failed_clause: None,
                witness: found.witness,
            }
        }
        MethodArg::All => unreachable!("handled by the caller"),
    })
}

fn cmd_check(input: &Path, method: MethodArg, witness: bool, json: bool) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let verdict_code = |consistent: bool| if consistent { EXIT_CONSISTENT } else { EXIT_NOT_CONSISTENT };
    if method != MethodArg::All {
        let mut v = single(&g, method)?;
        if !witness {
            v.witness = None;
        }
        if json {
            println!("{}", to_json_pretty(&v));
        } else {
            println!("{}", describe(&v, witness));
        }
        return Ok(verdict_code(v.line_consistent));
    }
    let mut report = evaluate_all(&g).map_err(Failure::input)?;
    if !witness {
        report.oracle.witness = None;
        report.verdicts.iter_mut().for_each(|v| v.witness = None);
    }
    if json {
        println!("{}", to_json_pretty(&report));
    } else {
        for v in report.verdicts.iter().chain([&report.oracle]) {
            println!("{}", describe(v, witness));
        }
        if let Some(c) = report.bridgeless {
            println!("bridgeless, no divalent vertex: {}", if c { "line consistent" } else { "not line consistent" });
        }
    }
    if !report.is_clean() {
        return Err(Failure { code: EXIT_DISAGREEMENT, message: disagreement_message(&report) });
    }
    Ok(verdict_code(report.line_consistent()))
}

fn disagreement_message(r: &CrossCheck) -> String {
    let names = |ms: &[Method]| ms.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ");
    let mut parts = Vec::new();
    if !r.disagreements.is_empty() {
        parts.push(format!("methods disagree with the oracle: {}", names(&r.disagreements)));
    }
    if !r.bad_witnesses.is_empty() {
        parts.push(format!("invalid witnesses from: {}", names(&r.bad_witnesses)));
    }
    if r.bridgeless.is_some_and(|c| c != r.line_consistent()) {
        parts.push("bridgeless criterion disagrees with the oracle".into());
    }
    if r.balanced_fast != r.balanced_oracle {
        parts.push("balance checks disagree".into());
    }
    format!("internal error: {}", parts.join("; "))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(Failure::input),
    }
}

fn cmd_line_graph(input: &Path, output: Option<&Path>, format: Format) -> Result<u8, Failure> {
    let l = line_graph(&read_graph(input)?);
    let text = match format {
        Format::Json => write_marked_graph(&l) + "\n",
        Format::Dot => export_dot(&l, None),
    };
    emit(output, &text)?;
    Ok(EXIT_CONSISTENT)
}

fn cmd_decompose(input: &Path, dot: bool) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let report = classify_structure(&g);
    if dot {
        print!("{}", export_dot(&g, Some(&report)));
    } else {
        println!("{}", to_json_pretty(&report));
    }
    Ok(EXIT_CONSISTENT)
}

struct FuzzArgs {
    max_n: usize,
    max_m: usize,
    count: usize,
    seed: u64,
    exhaustive: bool,
    generator: bool,
}

fn cmd_fuzz(a: FuzzArgs) -> Result<u8, Failure> {
    let (mode, graphs): (&str, Vec<SignedGraph>) = if a.generator {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let graphs = (0..a.count)
            .map(|_| {
                let (recipe_seed, build_seed): (u64, u64) = (rng.gen(), rng.gen());
                generate_line_consistent(&Recipe::sample(recipe_seed), build_seed)
            })
            .collect::<Result<_, _>>()
            .map_err(Failure::input)?;
        ("generator", graphs)
    } else if a.exhaustive {
        ("exhaustive", exhaustive_signed_graphs(a.max_n, a.max_m).map_err(Failure::input)?.collect())
    } else {
        ("random", random_corpus(a.count, a.max_n, a.max_m, a.seed).map_err(Failure::input)?)
    };

    let results: Vec<(usize, Result<CrossCheck, String>)> =
        graphs.par_iter().enumerate().map(|(i, g)| (i, evaluate_all(g).map_err(|e| e.to_string()))).collect();

    let mut consistent = 0;
    let mut problems = Vec::new();
    for (i, r) in &results {
        match r {
            Ok(r) if r.is_clean() && (r.line_consistent() || !a.generator) => {
                consistent += usize::from(r.line_consistent());
            }
            Ok(r) if r.is_clean() => problems.push((*i, "generated graph is not line consistent".to_owned())),
            Ok(r) => problems.push((*i, disagreement_message(r))),
            Err(e) => problems.push((*i, e.clone())),
        }
    }
    println!("mode: {mode}");
    println!("graphs: {}", graphs.len());
    println!("line consistent: {consistent}");
    println!("not line consistent: {}", graphs.len() - consistent - problems.len());
    println!("problems: {}", problems.len());
    for (i, msg) in &problems {
        println!("graph {i}: {msg}");
        println!("  {}", write_signed_graph(&graphs[*i]));
    }
    Ok(if problems.is_empty() { EXIT_CONSISTENT } else { EXIT_DISAGREEMENT })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, method, witness, json } => cmd_check(&input, method, witness, json),
        Command::LineGraph { input, output, format } => cmd_line_graph(&input, output.as_deref(), format),
        Command::Decompose { input, dot } => cmd_decompose(&input, dot),
        Command::Fuzz { max_n, max_m, count, seed, exhaustive, generator } => {
            cmd_fuzz(FuzzArgs { max_n, max_m, count, seed, exhaustive, generator })
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("linecons: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
