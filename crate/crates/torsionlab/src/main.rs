//! `torsionlab {compute|verify|spectrum}`: analytic and Reidemeister
//! torsion of discs and cones, spectral verification suites, and eigenvalue
//! tables.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "torsionlab",
    version,
    about = "Analytic torsion of discs and cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Compute log-torsion of a disc or a cone
    Compute {
        #[command(subcommand)]
        target: ComputeTarget,
    },
    /// Run a verification suite (specfun, spectra, engine, torsion, all)
    Verify {
        /// suite name; defaults to all
        suite: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
        /// tolerance overrides, CHECKID=VALUE (repeatable)
        #[arg(long = "tol")]
        tol: Vec<String>,
    },
    /// Enumerate eigenvalues of a form Laplacian up to a cutoff
    Spectrum(SpectrumArgs),
}

#[derive(Args)]
struct CommonComputeArgs {
    #[arg(long)]
    length: f64,
    #[arg(long, default_value_t = 1)]
    rank: u32,
    /// boundary condition: abs or rel
    #[arg(long, default_value = "abs")]
    bc: String,
    /// closed, pipeline, or both
    #[arg(long, default_value = "both")]
    method: String,
    /// json, csv, or text
    #[arg(long, default_value = "json")]
    format: String,
    /// display logarithms in base 10 (values only rescaled)
    #[arg(long)]
    log10: bool,
}

#[derive(Subcommand)]
enum ComputeTarget {
    /// the disc D^m_l
    Disc {
        #[arg(long)]
        dim: u32,
        #[command(flatten)]
        common: CommonComputeArgs,
    },
    /// the cone C_alpha S^n of angle alpha and length l
    Cone {
        /// circle or sphere
        #[arg(long)]
        section: String,
        /// cone angle: 30deg, 0.5236rad, pi/6, ...
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        common: CommonComputeArgs,
    },
}

#[derive(Args)]
struct SpectrumArgs {
    /// circle or sphere
    #[arg(long)]
    section: String,
    /// form degree q
    #[arg(long)]
    degree: u32,
    #[arg(long, default_value = "abs")]
    bc: String,
    #[arg(long, default_value = "pi/2")]
    alpha: String,
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    #[arg(long)]
    cutoff: f64,
    #[arg(long, default_value = "csv")]
    format: String,
    /// zero-cache file (defaults to $TORSIONLAB_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            torsionlab::EXIT_INVALID_ARGS
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Commands::Compute { target } => {
            let (geometry, is_disc, common, alpha_literal) = match target {
                ComputeTarget::Disc { dim, common } => {
                    let g = torsionlab::geometry_for_disc(dim, common.length, common.rank)?;
                    (g, true, common, None)
                }
                ComputeTarget::Cone {
                    section,
                    alpha,
                    common,
                } => {
                    let a = torsionlab::angle::parse_angle(&alpha)?;
                    let g = torsionlab::geometry_for_cone(&section, a, common.length, common.rank)?;
                    (g, false, common, Some(alpha))
                }
            };
            let _ = alpha_literal;
            let req = torsionlab::ComputeRequest {
                geometry,
                is_disc,
                bc: torsionlab::parse_bc(&common.bc)?,
                method: common.method.parse().map_err(anyhow::Error::msg)?,
                format: common.format.parse().map_err(anyhow::Error::msg)?,
                log10: common.log10,
            };
            match torsionlab::cmd_compute(&req) {
                Ok(out) => {
                    print!("{}", out.rendered);
                    if !out.rendered.ends_with('\n') {
                        println!();
                    }
                    Ok(torsionlab::EXIT_OK)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(torsionlab::exit_code_for(&e))
                }
            }
        }
        Commands::Verify { suite, format, tol } => {
            let suite_sel = match suite.as_deref() {
                None => None,
                Some(name) => match torsionlab::checks::Suite::parse(name) {
                    Some(sel) => sel,
                    None => anyhow::bail!(
                        "unknown suite {name} (specfun, spectra, engine, torsion, all)"
                    ),
                },
            };
            let overrides = torsionlab::parse_tol_overrides(&tol)?;
            let fmt = format.parse().map_err(anyhow::Error::msg)?;
            let (rendered, code) = torsionlab::cmd_verify(suite_sel, &overrides, fmt);
            print!("{rendered}");
            Ok(code)
        }
        Commands::Spectrum(args) => {
            let req = torsionlab::SpectrumRequest {
                section: torsionlab::section_index(&args.section)?,
                degree: args.degree,
                bc: torsionlab::parse_bc(&args.bc)?,
                alpha: torsionlab::angle::parse_angle(&args.alpha)?,
                length: args.length,
                cutoff: args.cutoff,
                format: args.format.parse().map_err(anyhow::Error::msg)?,
                cache: torsionlab::cache_path_from_env(args.cache),
            };
            if !(req.cutoff > 0.0) {
                anyhow::bail!("--cutoff must be positive");
            }
            match torsionlab::cmd_spectrum(&req) {
                Ok(out) => {
                    print!("{out}");
                    Ok(torsionlab::EXIT_OK)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(torsionlab::exit_code_for(&e))
                }
            }
        }
    }
}
