//! Command-line front end: expression evaluation under any strategy, and
//! scripted or interactive server sessions.
//!
//! Exit codes: 0 on success, 1 for usage, parse, or scenario errors, 2
//! when a basic server crashes.

mod scenario;

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use evalserve_core::{
    eval_counting, eval_monadic, eval_simple, eval_tracing, eval_with_exceptions, parse_expr,
    Server, ServerKind,
};

#[derive(Parser)]
#[command(
    name = "evalserve",
    version,
    about = "Evaluate con/div expressions and run scripted request servers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and evaluate it under the chosen strategy
    Eval {
        /// Evaluation strategy
        #[arg(long, value_enum)]
        mode: Mode,
        /// Expression text, e.g. "div(con 1, con 2)"
        expr: String,
    },
    /// Start a server and feed it requests from a scenario file or stdin
    Serve {
        /// Server behaviour
        #[arg(long, value_enum)]
        kind: Kind,
        /// Callback to install at startup (nameServer or calculator)
        #[arg(long)]
        callback: String,
        /// Scenario file; requests are read from stdin when absent
        #[arg(long)]
        scenario: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Simple,
    Monadic,
    Exceptions,
    State,
    Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Basic,
    Transaction,
    Hotswap,
}

impl From<Kind> for ServerKind {
    fn from(kind: Kind) -> ServerKind {
        match kind {
            Kind::Basic => ServerKind::Basic,
            Kind::Transaction => ServerKind::Transactional,
            Kind::Hotswap => ServerKind::HotSwap,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Eval { mode, expr } => run_eval(mode, &expr),
        Command::Serve {
            kind,
            callback,
            scenario,
        } => run_serve(kind.into(), &callback, scenario.as_deref()),
    }
}

fn run_eval(mode: Mode, src: &str) -> ExitCode {
    let expr = match parse_expr(src) {
        Ok(expr) => expr,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(1);
        }
    };
    let rendered = match mode {
        Mode::Simple => eval_simple(&expr).map(|v| v.to_string()),
        Mode::Monadic => eval_monadic(&expr).map(|m| m.to_string()),
        Mode::Exceptions => Ok(eval_with_exceptions(&expr).to_string()),
        Mode::State => eval_counting(&expr).map(|m| m.to_string()),
        Mode::Output => eval_tracing(&expr).map(|m| m.to_string()),
    };
    match rendered {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}

fn run_serve(kind: ServerKind, callback: &str, scenario: Option<&Path>) -> ExitCode {
    let reader: Box<dyn BufRead> = match scenario {
        Some(path) => match File::open(path) {
            Ok(file) => Box::new(BufReader::new(file)),
            Err(err) => {
                eprintln!("cannot open {}: {err}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(BufReader::new(io::stdin())),
    };

    let mut server = match Server::start_up(kind, callback) {
        Ok(server) => server,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(1);
        }
    };

    // Requests are processed one line at a time so that an interactive
    // session sees each response as soon as it is produced.
    let mut printed = 0;
    flush_log(&server, &mut printed);
    for (index, line) in reader.lines().enumerate() {
        let line = match line {
            Ok(line) => line,
            Err(err) => {
                eprintln!("read error: {err}");
                return ExitCode::from(1);
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let request = match scenario::parse_scenario_line(trimmed) {
            Ok(request) => request,
            Err(err) => {
                eprintln!("scenario line {}: {err}", index + 1);
                return ExitCode::from(1);
            }
        };
        let outcome = server.handle(&request);
        flush_log(&server, &mut printed);
        if let Err(err) = outcome {
            eprintln!("server crashed with {err}");
            return ExitCode::from(2);
        }
    }
    server.finish();
    flush_log(&server, &mut printed);
    ExitCode::SUCCESS
}

fn flush_log(server: &Server, printed: &mut usize) {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in &server.log()[*printed..] {
        let _ = writeln!(out, "{line}");
    }
    *printed = server.log().len();
    let _ = out.flush();
}
