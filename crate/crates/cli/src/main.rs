//! `xilab`: evaluation grids, verification suites, zero scans and spectrum
//! export for Riemann's ξ and Ξ.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on usage
//! or I/O errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use xilab::hadamard::ZeroTable;
use xilab::{Complex64, QuadratureConfig};

mod commands;
mod parse;
mod verify;

#[derive(Parser, Debug)]
#[command(name = "xilab", version, about = "Numerical laboratory for Riemann's xi and Xi functions")]
struct Cli {
    /// key=value file supplying defaults for the global options.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Zero-table file, or `bundled` for the shipped first 10^4 ordinates.
    #[arg(long, global = true)]
    zeros: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ξ, Ξ, Z, ϑ and ζ at listed points.
    #[command(group = clap::ArgGroup::new("points").required(true).multiple(true))]
    Eval {
        /// Complex points, e.g. 0.5+14.13i,2,-1-3i.
        #[arg(long, value_parser = parse::complex_list, group = "points", allow_hyphen_values = true)]
        s: Option<parse::ComplexList>,
        /// Critical-line ordinates t (s = 1/2 + it).
        #[arg(long, value_parser = parse::real_list, group = "points", allow_hyphen_values = true)]
        t: Option<parse::RealList>,
    },
    /// The eval columns over a t-grid for each listed σ.
    Scan {
        /// t grid lo:hi:step (step defaults to 0.1).
        #[arg(long, value_parser = parse::range, allow_hyphen_values = true)]
        range: parse::Range,
        #[arg(long, value_parser = parse::real_list, default_value = "0.5", allow_hyphen_values = true)]
        sigma: parse::RealList,
    },
    /// S(ω), S_1(ω), S(−ω) and S from the inverse transform of Ξ.
    Spectrum {
        /// ω grid lo:hi:step (step defaults to 0.05).
        #[arg(long, value_parser = parse::range, allow_hyphen_values = true)]
        range: parse::Range,
    },
    /// Zeros of Hardy's Z on lo:hi[:step] (step defaults to 0.05).
    Zeros {
        #[arg(long, value_parser = parse::range)]
        range: parse::Range,
    },
    /// Gram points g_n for n in lo:hi.
    Gram {
        #[arg(long, value_parser = parse::index_range, allow_hyphen_values = true)]
        range: (i64, i64),
        /// Also count zeros in each Gram interval [g_n, g_{n+1}).
        #[arg(long)]
        law: bool,
    },
    /// Run verification checks and report pass/fail.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Scan lo:hi[:step] for zeros and write them in zero-table format.
    ExportZeros {
        #[arg(long, value_parser = parse::range)]
        range: parse::Range,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Fourier,
    Hadamard,
    Monotonic,
    All,
}

/// Options after merging flags, config file and defaults.
pub struct Settings {
    pub quad: QuadratureConfig,
    /// Upper limit of the inverse transform ∫₀^{T_max} Ξ(t) cos(ωt) dt.
    pub t_max: f64,
    pub zeros: Option<String>,
    pub out: Option<PathBuf>,
}

impl Settings {
    fn resolve(cli: &Cli) -> anyhow::Result<Self> {
        let mut s = Settings {
            quad: QuadratureConfig::default(),
            t_max: 60.0,
            zeros: None,
            out: None,
        };
        if let Some(path) = &cli.config {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
            let map = parse::config(&text).map_err(anyhow::Error::msg)?;
            for (key, value) in map {
                let num = || value.parse::<f64>().with_context(|| format!("config key {key}: '{value}' is not a number"));
                match key.as_str() {
                    "tol" => s.quad.abs_tol = num()?,
                    "rel_tol" => s.quad.rel_tol = num()?,
                    "omega_max" => s.quad.omega_max = num()?,
                    "max_subdiv" => s.quad.max_subdiv = value.parse().with_context(|| format!("config key {key}"))?,
                    "t_max" => s.t_max = num()?,
                    "zeros" => s.zeros = Some(value),
                    "out" => s.out = Some(PathBuf::from(value)),
                    other => bail!("unknown config key '{other}'"),
                }
            }
        }
        if let Some(tol) = cli.tol {
            s.quad.abs_tol = tol;
        }
        if let Some(z) = &cli.zeros {
            s.zeros = Some(z.clone());
        }
        if let Some(out) = &cli.out {
            s.out = Some(out.clone());
        }
        if !(s.quad.abs_tol > 0.0 && s.quad.rel_tol >= 0.0 && s.quad.omega_max > 0.0 && s.t_max > 0.0) {
            bail!("tolerances, omega_max and t_max must be positive");
        }
        Ok(s)
    }

    pub fn zero_table(&self) -> anyhow::Result<Option<ZeroTable>> {
        match self.zeros.as_deref() {
            None => Ok(None),
            Some("bundled") => Ok(Some(ZeroTable::bundled())),
            Some(path) => ZeroTable::load(path).map(Some).with_context(|| format!("loading zero table {path}")),
        }
    }

    fn writer(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => {
                let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
                Box::new(BufWriter::new(f))
            }
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let settings = Settings::resolve(&cli)?;
    if let Command::Verify { suite } = cli.command {
        // Load the table before opening the output so a bad path leaves no file.
        let table = settings.zero_table()?;
        let mut out = settings.writer()?;
        let ok = verify::run(suite, &settings, table.as_ref(), &mut out)?;
        out.flush()?;
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let text = match &cli.command {
        Command::Eval { s, t } => {
            let mut points: Vec<Complex64> = s.as_ref().map(|l| l.0.clone()).unwrap_or_default();
            points.extend(t.iter().flat_map(|l| l.0.iter()).map(|&t| Complex64::new(0.5, t)));
            commands::eval(&points)
        }
        Command::Scan { range, sigma } => {
            let ts = range.points(0.1);
            let points: Vec<Complex64> =
                sigma.0.iter().flat_map(|&s| ts.iter().map(move |&t| Complex64::new(s, t))).collect();
            commands::eval(&points)
        }
        Command::Spectrum { range } => commands::spectrum(&range.points(0.05), &settings)?,
        Command::Zeros { range } => commands::zeros(range)?,
        Command::Gram { range, law } => commands::gram(*range, *law)?,
        Command::ExportZeros { range } => commands::export_zeros(range)?,
        Command::Verify { .. } => unreachable!("handled above"),
    };
    let mut out = settings.writer()?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
