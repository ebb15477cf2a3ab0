use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stabgraph::circuit::{circuit_from_graph, generators_from_circuit, graph_from_circuit};
use stabgraph::convert::{generator_matrix_from_graph, graph_from_generator_matrix};
use stabgraph::equivalence::{graphs_equivalent, to_reduced};
use stabgraph::oracle::verify_rules;
use stabgraph::transforms::{apply_sequence, apply_sequence_reduced};
use stabgraph::{GeneratorMatrix, StabilizerGraph};
use stabgraph_cli::dot::to_dot;
use stabgraph_cli::{
    parse_circuit, parse_graph, parse_matrix, parse_script, print_circuit, print_graph,
    print_matrix, FormatError, ScriptError,
};
use thiserror::Error;

#[derive(Parser)]
#[command(version, about = "Stabilizer states as decorated graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between generator matrices, graphs and circuits.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Target,
        /// Input file, `-` for stdin.
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        /// Output file, `-` for stdout.
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Apply a gate script such as `H:0 CZ:0,1` to a graph.
    Apply {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        #[arg(short, long)]
        script: String,
        /// Use the rules for reduced graphs; the input must be reduced.
        #[arg(long)]
        reduced: bool,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Rewrite a graph into reduced form.
    Reduce {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Exit 0 if two graphs describe the same state, 1 otherwise.
    Equiv { first: PathBuf, second: PathBuf },
    /// Check every rewrite rule against direct simulation on random graphs.
    Verify {
        /// Largest qubit count to sample.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per rule.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Matrix,
    Graph,
    Circuit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Matrix,
    Graph,
    Circuit,
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Invariant(#[from] stabgraph::Error),
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Format {
                source: FormatError::Parse { .. },
                ..
            } => 2,
            CliError::Format { .. } | CliError::Invariant(_) | CliError::Check(_) => 3,
            CliError::Script(_) => 4,
        }
    }
}

fn display(path: &Path) -> String {
    if path == Path::new("-") {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: display(path),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes()).map_err(io_err)
    } else {
        fs::write(path, text).map_err(io_err)
    }
}

fn parse<T>(path: &Path, parser: fn(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parser(&read(path)?).map_err(|source| CliError::Format {
        path: display(path),
        source,
    })
}

fn convert(from: Kind, to: Target, input: &Path) -> Result<String, CliError> {
    let graph = match from {
        Kind::Matrix => {
            let m = parse(input, parse_matrix)?;
            if let Target::Matrix = to {
                return Ok(print_matrix(&m.to_canonical_form().0));
            }
            graph_from_generator_matrix(&m)
        }
        Kind::Graph => parse(input, parse_graph)?,
        Kind::Circuit => {
            let c = parse(input, parse_circuit)?;
            match to {
                Target::Circuit => return Ok(print_circuit(&c)),
                Target::Matrix => {
                    return Ok(print_matrix(&GeneratorMatrix::new(
                        generators_from_circuit(&c),
                    )?))
                }
                _ => graph_from_circuit(&c),
            }
        }
    };
    Ok(match to {
        Target::Matrix => print_matrix(&generator_matrix_from_graph(&graph)),
        Target::Graph => print_graph(&graph),
        Target::Circuit => print_circuit(&circuit_from_graph(&graph)),
        Target::Dot => to_dot(&graph),
    })
}

fn apply(g: &StabilizerGraph, script: &str, reduced: bool) -> Result<StabilizerGraph, CliError> {
    let gates = parse_script(script, g.n())?;
    if !reduced {
        return Ok(apply_sequence(g, &gates)?);
    }
    if !g.is_reduced() {
        return Err(CliError::Check(
            "input graph is not reduced; run `stabgraph reduce` first".to_string(),
        ));
    }
    let out = apply_sequence_reduced(g, &gates)?;
    if !out.is_reduced() {
        return Err(CliError::Invariant(stabgraph::Error::NotReduced));
    }
    Ok(out)
}

fn verify(n: usize, seed: u64, cases: usize) -> Result<String, CliError> {
    let reports = verify_rules(n, seed, cases);
    let mut table = format!("{:<8} {:>7} {:>8}  result\n", "rule", "cases", "failures");
    for r in &reports {
        table.push_str(&format!(
            "{:<8} {:>7} {:>8}  {}\n",
            r.rule,
            r.cases,
            r.failures,
            if r.passed() { "PASS" } else { "FAIL" }
        ));
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(table)
    } else {
        print!("{table}");
        Err(CliError::Check(
            "some rules disagree with simulation".to_string(),
        ))
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Convert {
            from,
            to,
            input,
            output,
        } => write(&output, &convert(from, to, &input)?)?,
        Command::Apply {
            input,
            script,
            reduced,
            output,
        } => {
            let g = parse(&input, parse_graph)?;
            write(&output, &print_graph(&apply(&g, &script, reduced)?))?;
        }
        Command::Reduce { input, output } => {
            let g = parse(&input, parse_graph)?;
            write(&output, &print_graph(&to_reduced(&g)))?;
        }
        Command::Equiv { first, second } => {
            let g1 = parse(&first, parse_graph)?;
            let g2 = parse(&second, parse_graph)?;
            let same = g1.n() == g2.n() && graphs_equivalent(&g1, &g2)?;
            println!("{}", if same { "equivalent" } else { "not equivalent" });
            return Ok(if same { 0 } else { 1 });
        }
        Command::Verify { n, seed, cases } => {
            if n == 0 || n > stabgraph::oracle::DEFAULT_QUBIT_CAP {
                return Err(CliError::Check(format!(
                    "--n must be between 1 and {}",
                    stabgraph::oracle::DEFAULT_QUBIT_CAP
                )));
            }
            print!("{}", verify(n, seed, cases)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
