use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wreath_core::macdonald::{DualKind, Variant};
use wreath_core::symfun::Basis;
use wreath_core::toroidal::UpsilonMode;

mod cache;
mod commands;
mod render;

use cache::Cache;
use commands::{parse_partition, CliError, Format, Job, RouteChoice};

#[derive(Parser)]
#[command(name = "wmk", version, about = "Wreath Macdonald workbench: cores, polynomials, norms and Pieri coefficients")]
struct Cli {
    /// Print canonical JSON
    #[arg(long, global = true, conflicts_with = "latex")]
    json: bool,
    /// Print LaTeX
    #[arg(long, global = true)]
    latex: bool,
    /// Store and reuse results in this directory
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Spectral parameter of the Fock representations
    #[arg(long, global = true, value_enum, default_value_t = Upsilon::One)]
    upsilon: Upsilon,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Upsilon {
    One,
    Symbolic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Oracle,
    Toroidal,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    E,
    DualH,
}

#[derive(Subcommand)]
enum Command {
    /// ℓ-core, ℓ-quotient, charges and Maya diagrams of a partition
    Cq {
        #[arg(long = "l")]
        l: usize,
        /// Parts separated by commas; "-" for the empty partition
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// A family of wreath Macdonald polynomials with a fixed core
    Macdonald {
        #[arg(long = "l")]
        l: usize,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        core: String,
        /// Size of the quotient
        #[arg(long)]
        n: usize,
        /// H, H*, P, Q, P*, Q*, P~ or Q~
        #[arg(long, default_value = "H")]
        variant: String,
        /// s, m, p, e or h
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// The norm ⟨P*_{ᵗλ}, P_λ⟩ by the basis computation and/or the shuffle route
    Norm {
        #[arg(long = "l")]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Pieri coefficients of e_n or the dual h_n in color p against P_μ
    Pieri {
        #[arg(long = "l")]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        color: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::E)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Compares norms with the hook product over families
    Verify {
        #[arg(long = "l")]
        l: usize,
        #[arg(long, default_value_t = 0)]
        min_quot: usize,
        #[arg(long, default_value_t = 2)]
        max_quot: usize,
        /// Cores separated by ';', "-" for the empty core
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        cores: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Oracle)]
        route: RouteArg,
    },
    /// Recomputes the (2,2,1) ⊂ (4,3,1) example at ℓ = 3 against its closed forms
    PaperExample,
    /// Quick consistency checks
    Selftest,
}

fn route(r: RouteArg) -> RouteChoice {
    match r {
        RouteArg::Oracle => RouteChoice::Oracle,
        RouteArg::Toroidal => RouteChoice::Toroidal,
        RouteArg::Both => RouteChoice::Both,
    }
}

fn job(cmd: &Command) -> Result<Job, CliError> {
    let job = match cmd {
        Command::Cq { l, lambda } => Job::Cq { ell: *l, lambda: parse_partition(lambda)? },
        Command::Macdonald { l, core, n, variant, basis } => Job::Macdonald {
            ell: *l,
            core: parse_partition(core)?,
            n: *n,
            variant: Variant::parse(variant).ok_or_else(|| CliError::Validation(format!("unknown variant {variant:?}")))?,
            basis: Basis::parse(basis).map_err(|e| CliError::Validation(e.to_string()))?,
        },
        Command::Norm { l, lambda, route: r } => Job::Norm { ell: *l, lambda: parse_partition(lambda)?, route: route(*r) },
        Command::Pieri { l, mu, color, n, kind, route: r } => Job::Pieri {
            ell: *l,
            mu: parse_partition(mu)?,
            color: *color,
            n: *n,
            kind: match kind {
                KindArg::E => DualKind::E,
                KindArg::DualH => DualKind::DualH,
            },
            route: route(*r),
        },
        Command::Verify { l, min_quot, max_quot, cores, route: r } => Job::Verify {
            ell: *l,
            cores: if cores.trim().is_empty() { Vec::new() } else { cores.split(';').map(parse_partition).collect::<Result<_, _>>()? },
            min_quot: *min_quot,
            max_quot: *max_quot,
            route: route(*r),
        },
        Command::PaperExample => Job::PaperExample,
        Command::Selftest => Job::Selftest,
    };
    job.validate()?;
    Ok(job)
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let job = job(&cli.command)?;
    let format = if cli.json {
        Format::Json
    } else if cli.latex {
        Format::Latex
    } else {
        Format::Text
    };
    let ups = match cli.upsilon {
        Upsilon::One => UpsilonMode::One,
        Upsilon::Symbolic => UpsilonMode::Symbolic,
    };
    let mut key = job.canonical();
    key["format"] = format.name().into();
    key["upsilon"] = format!("{:?}", cli.upsilon).to_lowercase().into();

    let cache = match &cli.cache_dir {
        Some(dir) => Some(Cache::open(dir).map_err(|e| CliError::Validation(format!("cache directory {}: {e}", dir.display())))?),
        None => None,
    };
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok((hit.output, hit.exit_code));
    }
    let report = job.run(ups)?;
    let output = report.render(format);
    let code = if report.consistent { 0 } else { 3 };
    if let Some(c) = &cache {
        if let Err(e) = c.put(&key, &output, code) {
            eprintln!("warning: could not write cache entry: {e}");
        }
    }
    Ok((output, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(output.as_bytes());
            let _ = out.flush();
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("wmk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
