//! Cone geometry `C_alpha S^n_{l sin alpha}` and its Euclidean volume.
//!
//! The disc `D^m_l` is the right-angle case `alpha = pi/2`, `n = m - 1`.

use crate::mathx as m;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryCondition {
    Absolute,
    Relative,
}

impl BoundaryCondition {
    pub fn label(self) -> &'static str {
        match self {
            BoundaryCondition::Absolute => "abs",
            BoundaryCondition::Relative => "rel",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeGeometry {
    /// dimension of the section sphere (the cone has dimension n + 1)
    pub n: u32,
    /// cone angle in (0, pi/2]
    pub alpha: f64,
    /// cone length (disc radius) > 0
    pub l: f64,
    /// rank of the orthogonal representation
    pub rank: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeometryError {
    AlphaOutOfRange,
    NonPositiveLength,
    ZeroRank,
}

impl core::fmt::Display for GeometryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeometryError::AlphaOutOfRange => {
                write!(f, "cone angle must satisfy 0 < alpha <= pi/2")
            }
            GeometryError::NonPositiveLength => write!(f, "cone length must be positive"),
            GeometryError::ZeroRank => write!(f, "representation rank must be >= 1"),
        }
    }
}

impl ConeGeometry {
    pub fn new(n: u32, alpha: f64, l: f64, rank: u32) -> Result<Self, GeometryError> {
        if !(alpha > 0.0 && alpha <= m::PI / 2.0 + 1e-15) {
            return Err(GeometryError::AlphaOutOfRange);
        }
        if !(l > 0.0) || !l.is_finite() {
            return Err(GeometryError::NonPositiveLength);
        }
        if rank == 0 {
            return Err(GeometryError::ZeroRank);
        }
        Ok(Self {
            n,
            alpha: alpha.min(m::PI / 2.0),
            l,
            rank,
        })
    }

    /// Disc `D^m_l` of dimension `m >= 1`.
    pub fn disc(m_dim: u32, l: f64, rank: u32) -> Result<Self, GeometryError> {
        if m_dim == 0 {
            return Err(GeometryError::AlphaOutOfRange);
        }
        Self::new(m_dim - 1, m::PI / 2.0, l, rank)
    }

    pub fn sin_alpha(&self) -> f64 {
        m::sin(self.alpha)
    }

    /// `nu = csc(alpha) >= 1`.
    pub fn nu(&self) -> f64 {
        1.0 / self.sin_alpha()
    }

    /// dimension of the cone itself
    pub fn dim(&self) -> u32 {
        self.n + 1
    }

    pub fn is_disc(&self) -> bool {
        (self.alpha - m::PI / 2.0).abs() < 1e-14
    }
}

/// Volume of the unit sphere `S^n`: `2 pi^{(n+1)/2} / Gamma((n+1)/2)`.
pub fn sphere_volume(n: u32, radius: f64) -> f64 {
    let h = (n as f64 + 1.0) / 2.0;
    let g = crate::specfun::gamma_ln(h).expect("positive argument");
    2.0 * m::exp(h * m::ln(m::PI) - g) * m::powi(radius, n as i32)
}

/// Euclidean volume `l^{n+1} sin^n(alpha) Vol(S^n_1)/(n+1)`.
pub fn volume(geom: &ConeGeometry) -> f64 {
    let n = geom.n;
    sphere_volume(n, 1.0) * m::powi(geom.l, n as i32 + 1) * m::powi(geom.sin_alpha(), n as i32)
        / (n as f64 + 1.0)
}
