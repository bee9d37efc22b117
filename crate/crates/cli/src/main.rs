use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nanorot_cli::commands;
use nanorot_cli::config::{NamedMaterial, Quantity, RunConfig};
use nanorot_cli::figure::FigureId;
use nanorot_cli::{CliError, Format, Observable, Scale, SweepSpec, Variable, EXIT_USAGE};

/// Torque, heat and forces between a rotating and a static nanoparticle.
#[derive(Parser, Debug)]
#[command(name = "nanorot", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Material preset for both particles (SiC, vacuum)
    #[arg(long, global = true)]
    preset: Option<String>,
    /// key=value scenario file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (directory for `figure`); stdout when omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    /// Worker threads for sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Relative quadrature tolerance
    #[arg(long = "rel-tol", global = true)]
    rel_tol: Option<f64>,
    /// Use the dense trapezoid integrator instead of the adaptive one
    #[arg(long, global = true)]
    oracle: bool,
    /// Extra scenario settings, e.g. --set d=2.6R
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polariton resonance and critical separations of a material
    Material {
        /// Material file (key=value); defaults to --preset or SiC
        file: Option<PathBuf>,
    },
    /// Sweep one variable and evaluate observables
    Sweep {
        /// Omega, d, T2 or omega
        #[arg(long = "var")]
        variable: Variable,
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        #[arg(long, allow_hyphen_values = true)]
        stop: String,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// linear or log
        #[arg(long, default_value = "linear")]
        scale: Scale,
        /// Comma-separated observable names
        #[arg(long)]
        observables: String,
    },
    /// Curve data for figure 2a, 2b, 3a, 3b or all
    Figure {
        id: String,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Critical separations for both rotation axes
    CriticalSep,
    /// Static heat transfer against its closed-form estimates
    StaticHeat,
}

fn run_config(g: &Global) -> Result<RunConfig, CliError> {
    let mut cfg = match &g.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(name) = &g.preset {
        cfg.material1 = NamedMaterial::preset(name)?;
    }
    if let Some(t) = g.rel_tol {
        cfg.quadrature.rel_tol = t;
    }
    if g.oracle {
        cfg.quadrature.oracle_mode = true;
    }
    for item in &g.set {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--set expects KEY=VALUE, got '{item}'")))?;
        cfg.set(k.trim(), v.trim(), Path::new("."))
            .map_err(CliError::Usage)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn quantity(text: &str) -> Result<Quantity, CliError> {
    Quantity::parse(text).map_err(CliError::Usage)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Material { file } => {
            let cfg = run_config(g)?;
            let material = match file {
                Some(path) => NamedMaterial::from_file(&path)?,
                None => cfg.material1.clone(),
            };
            commands::material(sink(&g.out)?, &material, cfg.radius1, g.format)
        }
        Command::Sweep {
            variable,
            start,
            stop,
            points,
            scale,
            observables,
        } => {
            let cfg = run_config(g)?;
            let spec = SweepSpec {
                variable,
                start: quantity(&start)?,
                stop: quantity(&stop)?,
                points,
                scale,
            };
            let list = Observable::parse_list(&observables)?;
            spec.validate()?;
            commands::sweep(sink(&g.out)?, &cfg, &spec, &list, g.format, g.jobs)
        }
        Command::Figure { id, points } => {
            let cfg = run_config(g)?;
            let ids = if id == "all" {
                FigureId::ALL.to_vec()
            } else {
                vec![id.parse().map_err(CliError::Usage)?]
            };
            let dir = g.out.clone().unwrap_or_else(|| PathBuf::from("."));
            let mut stdout = io::stdout().lock();
            for id in ids {
                for path in commands::figure(id, &dir, points, &cfg, g.format, g.jobs)? {
                    writeln!(stdout, "{}", path.display()).map_err(|e| CliError::Io(e.to_string()))?;
                }
            }
            Ok(())
        }
        Command::CriticalSep => commands::critical_sep(sink(&g.out)?, &run_config(g)?, g.format),
        Command::StaticHeat => commands::static_heat(sink(&g.out)?, &run_config(g)?, g.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
