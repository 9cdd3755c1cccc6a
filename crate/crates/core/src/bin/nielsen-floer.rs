use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nielsen_floer::report::{parse_input, Command, Options, Report};
use nielsen_floer::Error;

#[derive(Parser)]
#[command(
    version,
    about = "Nielsen numbers, Floer homology dimensions and zeta functions of surface mapping classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// N, L and dim HF of the iterates, HF_* by degree
    Invariants(Shared),
    /// chi_phi(z) = L_phi(z) and F_phi(z)
    Zeta(Shared),
    /// F^inf, growth rates and entropy bounds
    Growth(Shared),
    /// Check every applicable identity against its series or sequence oracle
    Verify(Shared),
}

#[derive(Args)]
struct Shared {
    /// JSON mapping class description ("-" for stdin)
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 10)]
    n_max: u64,
    #[arg(long, default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

const EXIT_INTERNAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_VERIFY: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Validation(_)
        | Error::Invalid(_)
        | Error::InvalidAction(_)
        | Error::OrderTooSmall { .. }
        | Error::ZeroArgument => EXIT_VALIDATION,
        _ => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, shared) = match cli.command {
        Cmd::Invariants(s) => (Command::Invariants, s),
        Cmd::Zeta(s) => (Command::Zeta, s),
        Cmd::Growth(s) => (Command::Growth, s),
        Cmd::Verify(s) => (Command::Verify, s),
    };
    let text = if shared.input.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&shared.input)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", shared.input.display());
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let opts = Options {
        n_max: shared.n_max,
        order: shared.order,
    };
    let report = match parse_input(&text).and_then(|doc| Report::build(command, &doc, opts)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let out = match shared.format {
        Format::Text => report.to_text(),
        Format::Machine => format!("{}\n", report.to_machine()),
    };
    if let Err(e) = std::io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    if let Some(c) = report.failed_check() {
        eprintln!(
            "verification failed: {} at index {}",
            c.name,
            c.first_divergence
                .map_or("-".to_string(), |k| k.to_string())
        );
        return ExitCode::from(EXIT_VERIFY);
    }
    ExitCode::SUCCESS
}
