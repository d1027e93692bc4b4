//! Command implementations for the `torsionlab` binary: torsion reports,
//! verification suites, spectrum tables, and the zero cache.

pub mod angle;
pub mod cache;
pub mod checks;
pub mod output;

use anyhow::{anyhow, bail, Result};
use checks::{run_suite, CheckResult, Suite};
use output::{fmt_f64, Format, JsonArray, JsonObject};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use torsion_core::chain::rs_torsion_closed;
use torsion_core::engine::EngineError;
use torsion_core::geometry::{BoundaryCondition, ConeGeometry};
use torsion_core::specfun::SpecfunError;
use torsion_core::spectrum::{
    cone_circle_spectrum, cone_sphere_spectrum, enumerate_eigenvalues_with_store, NoCache,
};
use torsion_core::torsion::{
    analytic_torsion_cone_circle, analytic_torsion_cone_sphere, analytic_torsion_disc,
    pipeline_circle, pipeline_sphere, TorsionError, TorsionReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_ARGS: i32 = 2;
pub const EXIT_INTERNAL_INCONSISTENCY: i32 = 3;

/// Exit code for a computation error: consistency failures inside the
/// engine map to 3, everything argument-shaped maps to 2.
pub fn exit_code_for(err: &TorsionError) -> i32 {
    match err {
        TorsionError::Engine(EngineError::FZeroMismatch { .. }) => EXIT_INTERNAL_INCONSISTENCY,
        TorsionError::Engine(EngineError::Specfun(SpecfunError::NoConvergence { .. })) => {
            EXIT_INTERNAL_INCONSISTENCY
        }
        _ => EXIT_INVALID_ARGS,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Closed,
    Pipeline,
    Both,
}

impl std::str::FromStr for MethodChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "closed" => Ok(MethodChoice::Closed),
            "pipeline" => Ok(MethodChoice::Pipeline),
            "both" => Ok(MethodChoice::Both),
            other => Err(format!("unknown method {other}")),
        }
    }
}

pub fn parse_bc(s: &str) -> Result<BoundaryCondition> {
    match s.to_ascii_lowercase().as_str() {
        "abs" | "absolute" => Ok(BoundaryCondition::Absolute),
        "rel" | "relative" => Ok(BoundaryCondition::Relative),
        other => bail!("unknown boundary condition {other} (use abs or rel)"),
    }
}

pub fn parse_tol_overrides(items: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("--tol expects NAME=VALUE, got {item}"))?;
        map.insert(k.trim().to_string(), v.trim().parse::<f64>()?);
    }
    Ok(map)
}

// ---------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub geometry: ConeGeometry,
    /// disc requests remember the requested shape for reporting
    pub is_disc: bool,
    pub bc: BoundaryCondition,
    pub method: MethodChoice,
    pub format: Format,
    pub log10: bool,
}

pub struct ComputeOutcome {
    pub rendered: String,
}

fn requested_bc_value(report: &TorsionReport, bc: BoundaryCondition, rank: f64) -> f64 {
    // the pipeline reports are rank-1 absolute (circle) or bc-free (sphere)
    let v = rank * report.log_value;
    match (report.geometry.n, bc) {
        (1, BoundaryCondition::Relative) => -v,
        _ => v,
    }
}

pub fn cmd_compute(req: &ComputeRequest) -> Result<ComputeOutcome, TorsionError> {
    let geom = &req.geometry;
    let rank = geom.rank as f64;

    let closed: Option<f64> = match req.method {
        MethodChoice::Pipeline => None,
        _ => Some(if req.is_disc {
            let abs = analytic_torsion_disc(geom.dim(), geom.l, geom.rank)?.log_value;
            match (req.bc, geom.dim()) {
                (BoundaryCondition::Absolute, _) => abs,
                (BoundaryCondition::Relative, 2) => -abs,
                (BoundaryCondition::Relative, 3) => abs,
                (BoundaryCondition::Relative, _) => {
                    return Err(TorsionError::Unsupported(
                        "relative disc torsion is reported for dimensions 2 and 3 only",
                    ))
                }
            }
        } else if geom.n == 1 {
            rank * analytic_torsion_cone_circle(geom.alpha, geom.l, req.bc)?.log_value
        } else if geom.n == 2 {
            rank * analytic_torsion_cone_sphere(geom.alpha, geom.l, req.bc)?.log_value
        } else {
            return Err(TorsionError::Unsupported(
                "cone sections are the circle and the sphere",
            ));
        }),
    };

    let pipeline: Option<f64> = match req.method {
        MethodChoice::Closed => None,
        _ => match geom.n {
            1 => Some(requested_bc_value(
                &pipeline_circle(geom.alpha, geom.l)?,
                req.bc,
                rank,
            )),
            2 => Some(requested_bc_value(
                &pipeline_sphere(geom.alpha, geom.l)?,
                req.bc,
                rank,
            )),
            _ => {
                if req.method == MethodChoice::Pipeline {
                    return Err(TorsionError::Unsupported(
                        "no spectral pipeline for this dimension",
                    ));
                }
                None
            }
        },
    };

    // breakdown comes from the primary method's report
    let breakdown_report: TorsionReport = if req.is_disc && req.method != MethodChoice::Pipeline {
        analytic_torsion_disc(geom.dim(), geom.l, geom.rank)?
    } else if geom.n == 1 {
        match req.method {
            MethodChoice::Pipeline => pipeline_circle(geom.alpha, geom.l)?,
            _ => analytic_torsion_cone_circle(geom.alpha, geom.l, req.bc)?,
        }
    } else if geom.n == 2 {
        match req.method {
            MethodChoice::Pipeline => pipeline_sphere(geom.alpha, geom.l)?,
            _ => analytic_torsion_cone_sphere(geom.alpha, geom.l, req.bc)?,
        }
    } else {
        analytic_torsion_disc(geom.dim(), geom.l, geom.rank)?
    };
    // disc closed forms already include the rank; pipelines and cones are rank-1
    let breakdown_rank = if req.is_disc && req.method != MethodChoice::Pipeline {
        1.0
    } else {
        rank
    };

    let log_torsion = closed.or(pipeline).expect("at least one method ran");
    let log_rs = rs_torsion_closed(geom, req.bc);
    let scale = if req.log10 {
        1.0 / std::f64::consts::LN_10
    } else {
        1.0
    };

    let mut residuals: Vec<(&str, f64)> = Vec::new();
    residuals.push((
        "breakdown_sum_error",
        breakdown_report.breakdown_sum() - breakdown_report.log_value,
    ));
    if let (Some(c), Some(p)) = (closed, pipeline) {
        residuals.push(("closed_minus_pipeline", c - p));
    }

    let method_label = match req.method {
        MethodChoice::Closed => "closed",
        MethodChoice::Pipeline => "pipeline",
        MethodChoice::Both => "both",
    };

    let rendered = match req.format {
        Format::Json => {
            let geometry = JsonObject::new()
                .str("kind", if req.is_disc { "disc" } else { "cone" })
                .str(
                    "section",
                    match geom.n {
                        1 => "circle",
                        2 => "sphere",
                        _ => "higher",
                    },
                )
                .int("dim", geom.dim() as i64)
                .num("alpha", geom.alpha)
                .num("length", geom.l)
                .int("rank", geom.rank as i64)
                .finish();
            let mut breakdown = JsonObject::new();
            for (k, v) in &breakdown_report.breakdown {
                breakdown = breakdown.num(k, scale * breakdown_rank * v);
            }
            let mut resid = JsonObject::new();
            for (k, v) in &residuals {
                resid = resid.num(k, scale * v);
            }
            JsonObject::new()
                .raw("geometry", &geometry)
                .str("bc", req.bc.label())
                .str("method", method_label)
                .str("log_base", if req.log10 { "10" } else { "e" })
                .num("log_torsion", scale * log_torsion)
                .num("log_rs_torsion", scale * log_rs)
                .raw("breakdown", &breakdown.finish())
                .raw("residuals", &resid.finish())
                .finish()
        }
        Format::Csv => {
            let mut s = String::from("field,value\n");
            let _ = writeln!(s, "kind,{}", if req.is_disc { "disc" } else { "cone" });
            let _ = writeln!(s, "dim,{}", geom.dim());
            let _ = writeln!(s, "alpha,{}", fmt_f64(geom.alpha));
            let _ = writeln!(s, "length,{}", fmt_f64(geom.l));
            let _ = writeln!(s, "rank,{}", geom.rank);
            let _ = writeln!(s, "bc,{}", req.bc.label());
            let _ = writeln!(s, "method,{method_label}");
            let _ = writeln!(s, "log_torsion,{}", fmt_f64(scale * log_torsion));
            let _ = writeln!(s, "log_rs_torsion,{}", fmt_f64(scale * log_rs));
            for (k, v) in &breakdown_report.breakdown {
                let _ = writeln!(s, "breakdown.{k},{}", fmt_f64(scale * breakdown_rank * v));
            }
            for (k, v) in &residuals {
                let _ = writeln!(s, "residual.{k},{}", fmt_f64(scale * v));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let shape = if req.is_disc {
                format!("D^{}_{}", geom.dim(), geom.l)
            } else {
                format!(
                    "C_alpha S^{} (alpha = {:.6}, l = {})",
                    geom.n, geom.alpha, geom.l
                )
            };
            let _ = writeln!(s, "{shape}  rank {}  bc {}", geom.rank, req.bc.label());
            let base = if req.log10 { "log10" } else { "log" };
            let _ = writeln!(s, "{base} T   = {}", fmt_f64(scale * log_torsion));
            let _ = writeln!(s, "{base} tau = {}", fmt_f64(scale * log_rs));
            if let (Some(c), Some(p)) = (closed, pipeline) {
                let _ = writeln!(
                    s,
                    "closed {} vs pipeline {}",
                    fmt_f64(scale * c),
                    fmt_f64(scale * p)
                );
            }
            for (k, v) in &breakdown_report.breakdown {
                let _ = writeln!(s, "  {k:<14} {}", fmt_f64(scale * breakdown_rank * v));
            }
            s
        }
    };
    Ok(ComputeOutcome { rendered })
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

pub fn render_verify(results: &[CheckResult], format: Format) -> (String, i32) {
    let all_pass = results.iter().all(|r| r.pass);
    let rendered = match format {
        Format::Json => {
            let mut arr = JsonArray::new();
            for r in results {
                arr.push_raw(
                    &JsonObject::new()
                        .str("id", r.id)
                        .str("suite", r.suite.label())
                        .str("name", r.name)
                        .bool("pass", r.pass)
                        .num("residual", r.residual)
                        .num("tolerance", r.tolerance)
                        .str("detail", &r.detail)
                        .finish(),
                );
            }
            JsonObject::new()
                .bool("pass", all_pass)
                .int("checks", results.len() as i64)
                .raw("results", &arr.finish())
                .finish()
        }
        Format::Csv => {
            let mut s = String::from("id,suite,pass,residual,tolerance,name\n");
            for r in results {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.id,
                    r.suite.label(),
                    r.pass,
                    fmt_f64(r.residual),
                    fmt_f64(r.tolerance),
                    r.name
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in results {
                let _ = writeln!(
                    s,
                    "[{}] {}  {:<52} residual {:>12.4e}  tol {:>9.1e}  ({})",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.residual,
                    r.tolerance,
                    r.detail
                );
            }
            let _ = writeln!(
                s,
                "{} of {} checks passed",
                results.iter().filter(|r| r.pass).count(),
                results.len()
            );
            s
        }
    };
    (rendered, if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_verify(
    suite: Option<Suite>,
    overrides: &BTreeMap<String, f64>,
    format: Format,
) -> (String, i32) {
    let results = run_suite(suite, overrides);
    render_verify(&results, format)
}

// ---------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SpectrumRequest {
    pub section: u32, // 1 = circle, 2 = sphere
    pub degree: u32,
    pub bc: BoundaryCondition,
    pub alpha: f64,
    pub length: f64,
    pub cutoff: f64,
    pub format: Format,
    pub cache: Option<PathBuf>,
}

pub fn cmd_spectrum(req: &SpectrumRequest) -> Result<String, TorsionError> {
    let geom = ConeGeometry::new(req.section, req.alpha, req.length, 1)?;
    let descriptor = match req.section {
        1 => cone_circle_spectrum(req.degree, req.bc, geom.nu(), req.length),
        2 => cone_sphere_spectrum(req.degree, req.bc, geom.nu(), req.length),
        _ => {
            return Err(TorsionError::Unsupported(
                "section must be circle or sphere",
            ))
        }
    }
    .map_err(EngineError::from)?;

    let mut file_store = req.cache.as_ref().map(|p| cache::FileZeroStore::open(p));
    let evs = match file_store.as_mut() {
        Some(store) => enumerate_eigenvalues_with_store(&descriptor, req.cutoff, store),
        None => enumerate_eigenvalues_with_store(&descriptor, req.cutoff, &mut NoCache),
    }
    .map_err(EngineError::from)?;
    if let Some(store) = file_store.as_mut() {
        if let Err(e) = store.save() {
            eprintln!("warning: could not persist zero cache: {e}");
        }
    }

    Ok(match req.format {
        Format::Json => {
            let mut arr = JsonArray::new();
            for e in &evs {
                arr.push_raw(
                    &JsonObject::new()
                        .num("lambda", e.lambda)
                        .int("multiplicity", e.multiplicity as i64)
                        .str("band", &e.band)
                        .int("n", e.n as i64)
                        .int("k", e.k as i64)
                        .finish(),
                );
            }
            JsonObject::new()
                .str(
                    "section",
                    if req.section == 1 { "circle" } else { "sphere" },
                )
                .int("degree", req.degree as i64)
                .str("bc", req.bc.label())
                .num("alpha", req.alpha)
                .num("length", req.length)
                .num("cutoff", req.cutoff)
                .int("count", evs.len() as i64)
                .raw("eigenvalues", &arr.finish())
                .finish()
        }
        Format::Csv => {
            let mut s = String::from("lambda,multiplicity,band,n,k\n");
            for e in &evs {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    fmt_f64(e.lambda),
                    e.multiplicity,
                    e.band,
                    e.n,
                    e.k
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "spectrum: S^{} section, degree {}, bc {}, cutoff {}\n",
                req.section,
                req.degree,
                req.bc.label(),
                req.cutoff
            );
            let _ = writeln!(
                s,
                "{:>20} {:>5} {:>10} {:>4} {:>4}",
                "lambda", "mult", "band", "n", "k"
            );
            for e in &evs {
                let _ = writeln!(
                    s,
                    "{:>20} {:>5} {:>10} {:>4} {:>4}",
                    fmt_f64(e.lambda),
                    e.multiplicity,
                    e.band,
                    e.n,
                    e.k
                );
            }
            s
        }
    })
}

/// Cache-path default from the environment.
pub fn cache_path_from_env(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os("TORSIONLAB_CACHE").map(PathBuf::from))
}

pub fn geometry_for_disc(dim: u32, length: f64, rank: u32) -> Result<ConeGeometry> {
    ConeGeometry::disc(dim, length, rank).map_err(|e| anyhow!("invalid disc geometry: {e}"))
}

pub fn geometry_for_cone(
    section: &str,
    alpha: f64,
    length: f64,
    rank: u32,
) -> Result<ConeGeometry> {
    ConeGeometry::new(section_index(section)?, alpha, length, rank)
        .map_err(|e| anyhow!("invalid cone geometry: {e}"))
}

pub fn section_index(section: &str) -> Result<u32> {
    match section.to_ascii_lowercase().as_str() {
        "circle" => Ok(1),
        "sphere" => Ok(2),
        other => bail!("unknown section {other} (use circle or sphere)"),
    }
}
