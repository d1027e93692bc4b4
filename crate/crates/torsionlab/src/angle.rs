//! Cone-angle parsing. Accepts degrees (`30deg`), radians (`0.5236rad` or a
//! bare number), and exact literals (`pi/2`, `pi/3`, `pi/4`, `pi/6`) so that
//! `nu = csc(alpha)` stays exact for the common cases.

use anyhow::{bail, Result};
use std::f64::consts::PI;

pub fn parse_angle(s: &str) -> Result<f64> {
    let t = s.trim().to_ascii_lowercase();
    let alpha = if let Some(rest) = t.strip_suffix("deg") {
        rest.trim().parse::<f64>()? * PI / 180.0
    } else if let Some(rest) = t.strip_suffix("rad") {
        rest.trim().parse::<f64>()?
    } else if let Some(rest) = t.strip_prefix("pi/") {
        PI / rest.trim().parse::<f64>()?
    } else if t == "pi" {
        PI
    } else {
        t.parse::<f64>()?
    };
    if !(alpha > 0.0 && alpha <= PI / 2.0 + 1e-12) {
        bail!("cone angle must satisfy 0 < alpha <= pi/2, got {s}");
    }
    Ok(alpha.min(PI / 2.0))
}
