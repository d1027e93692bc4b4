//! Reidemeister torsion of finite based chain complexes of real vector
//! spaces, and the one-cell-per-dimension CW models of the cones with the
//! harmonic (volume-normalised) homology bases.
//!
//! The torsion of a based complex with homology basis `h` is
//!
//! `tau = prod_q |det( d(b_{q+1}) , h_q , b_q / c_q )|^{(-1)^q}`
//!
//! where `b_q` is any independent set whose boundary spans `B_{q-1}`; the
//! value does not depend on the choice of the `b_q` and this invariance is
//! exercised by randomised tests.

use crate::geometry::{volume, BoundaryCondition, ConeGeometry};
use crate::mathx as m;
use alloc::vec;
use alloc::vec::Vec;

/// Dense column-major matrix, rows = target dimension, cols = source.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<f64>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0.0; self.rows];
        for j in 0..self.cols {
            for i in 0..self.rows {
                out[i] += self[(i, j)] * v[j];
            }
        }
        out
    }

    pub fn frobenius(&self) -> f64 {
        m::sqrt(self.data.iter().map(|x| x * x).sum())
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[j * self.rows + i]
    }
}
impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[j * self.rows + i]
    }
}

/// `C_m -> C_{m-1} -> ... -> C_0` with the standard preferred bases.
/// `boundaries[q]` is the map `C_q -> C_{q-1}` (so `boundaries[0]` is unused
/// and kept empty).
#[derive(Clone, Debug)]
pub struct FiniteChainComplex {
    pub lengths: Vec<usize>,
    pub boundaries: Vec<Matrix>,
}

/// Cycle representatives whose classes form a basis of `H_q`, per degree.
#[derive(Clone, Debug, Default)]
pub struct GradedHomologyBasis {
    pub classes: Vec<Vec<Vec<f64>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ChainError {
    ShapeMismatch { degree: usize },
    NotAComplex { degree: usize, residual: f64 },
    NotACycle { degree: usize, residual: f64 },
    RankFailure { degree: usize },
}

impl core::fmt::Display for ChainError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ChainError::ShapeMismatch { degree } => {
                write!(f, "boundary matrix shape mismatch at degree {degree}")
            }
            ChainError::NotAComplex { degree, residual } => {
                write!(f, "d.d != 0 at degree {degree} (residual {residual:e})")
            }
            ChainError::NotACycle { degree, residual } => {
                write!(
                    f,
                    "homology vector is not a cycle at degree {degree} (residual {residual:e})"
                )
            }
            ChainError::RankFailure { degree } => {
                write!(f, "basis completion failed at degree {degree}")
            }
        }
    }
}

impl FiniteChainComplex {
    pub fn top_degree(&self) -> usize {
        self.lengths.len() - 1
    }

    fn boundary(&self, q: usize) -> Option<&Matrix> {
        if q == 0 || q > self.top_degree() {
            None
        } else {
            Some(&self.boundaries[q])
        }
    }

    /// Shape consistency and `d \circ d = 0`.
    pub fn validate(&self) -> Result<(), ChainError> {
        for q in 1..=self.top_degree() {
            let b = &self.boundaries[q];
            if b.cols != self.lengths[q] || b.rows != self.lengths[q - 1] {
                return Err(ChainError::ShapeMismatch { degree: q });
            }
        }
        for q in 2..=self.top_degree() {
            let a = &self.boundaries[q - 1];
            let b = &self.boundaries[q];
            if a.cols == 0 || b.cols == 0 {
                continue;
            }
            let scale = (a.frobenius() * b.frobenius()).max(1.0);
            for j in 0..b.cols {
                let v = a.matvec(&b.column(j));
                let r = m::sqrt(v.iter().map(|x| x * x).sum());
                if r > 1e-12 * scale {
                    return Err(ChainError::NotAComplex {
                        degree: q,
                        residual: r,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Pivot columns of `a` by modified Gram–Schmidt with column pivoting;
/// returns their indices (a maximal independent set of columns).
fn pivot_columns(a: &Matrix, tol: f64) -> Vec<usize> {
    let mut work: Vec<Vec<f64>> = (0..a.cols).map(|j| a.column(j)).collect();
    let mut norms: Vec<f64> = work.iter().map(|c| c.iter().map(|x| x * x).sum()).collect();
    let scale = m::sqrt(norms.iter().fold(0.0f64, |p, &q| p.max(q))).max(1e-300);
    let mut picked = Vec::new();
    for _ in 0..a.cols.min(a.rows) {
        let (jmax, &nmax) = match norms
            .iter()
            .enumerate()
            .filter(|(j, _)| !picked.contains(j))
            .max_by(|x, y| x.1.partial_cmp(y.1).unwrap_or(core::cmp::Ordering::Equal))
        {
            Some(p) => p,
            None => break,
        };
        if m::sqrt(nmax) <= tol * scale {
            break;
        }
        picked.push(jmax);
        let pivot = work[jmax].clone();
        let pn: f64 = pivot.iter().map(|x| x * x).sum();
        for j in 0..a.cols {
            if picked.contains(&j) {
                continue;
            }
            let dot: f64 = work[j].iter().zip(&pivot).map(|(x, y)| x * y).sum();
            let c = dot / pn;
            for (x, y) in work[j].iter_mut().zip(&pivot) {
                *x -= c * y;
            }
            norms[j] = work[j].iter().map(|x| x * x).sum();
        }
    }
    picked.sort_unstable();
    picked
}

/// log |det| by pivoted LU; `None` when singular.
fn log_abs_det(mut a: Matrix) -> Option<f64> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut log_det = 0.0f64;
    for k in 0..n {
        let mut imax = k;
        let mut vmax = m::abs(a[(k, k)]);
        for i in k + 1..n {
            let v = m::abs(a[(i, k)]);
            if v > vmax {
                vmax = v;
                imax = i;
            }
        }
        if vmax == 0.0 || !vmax.is_finite() {
            return None;
        }
        if imax != k {
            for j in 0..n {
                let t = a[(k, j)];
                a[(k, j)] = a[(imax, j)];
                a[(imax, j)] = t;
            }
        }
        log_det += m::ln(vmax);
        let piv = a[(k, k)];
        for i in k + 1..n {
            let f = a[(i, k)] / piv;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                let t = a[(k, j)] * f;
                a[(i, j)] -= t;
            }
        }
    }
    Some(log_det)
}

/// log tau of the based complex with homology basis `h`, using the stable
/// default lift choice (pivot columns of each boundary).
pub fn reidemeister_torsion_log(
    complex: &FiniteChainComplex,
    h: &GradedHomologyBasis,
) -> Result<f64, ChainError> {
    complex.validate()?;
    let top = complex.top_degree();
    // lifts b_q: pivot columns of d_q make d(b_q) a basis of B_{q-1}
    let mut lifts: Vec<Vec<Vec<f64>>> = vec![Vec::new(); top + 2];
    for q in 1..=top {
        if let Some(b) = complex.boundary(q) {
            if complex.lengths[q] > 0 && complex.lengths[q - 1] > 0 {
                lifts[q] = pivot_columns(b, 1e-12)
                    .into_iter()
                    .map(|j| unit(complex.lengths[q], j))
                    .collect();
            }
        }
    }
    torsion_with_lift_vectors(complex, h, &lifts)
}

/// log tau with caller-chosen lift sets: `lifts[q]` are vectors in `C_q`
/// whose boundaries must form a basis of `B_{q-1}`. The torsion does not
/// depend on this choice; exposing it lets tests exercise the invariance.
pub fn reidemeister_torsion_log_with_lifts(
    complex: &FiniteChainComplex,
    h: &GradedHomologyBasis,
    lifts: &[Vec<Vec<f64>>],
) -> Result<f64, ChainError> {
    complex.validate()?;
    torsion_with_lift_vectors(complex, h, lifts)
}

fn torsion_with_lift_vectors(
    complex: &FiniteChainComplex,
    h: &GradedHomologyBasis,
    lifts: &[Vec<Vec<f64>>],
) -> Result<f64, ChainError> {
    let top = complex.top_degree();
    let empty: Vec<Vec<f64>> = Vec::new();
    let mut log_tau = 0.0f64;
    for q in 0..=top {
        let dim = complex.lengths[q];
        if dim == 0 {
            if h.classes.get(q).map(|c| !c.is_empty()).unwrap_or(false)
                || lifts.get(q).map(|l| !l.is_empty()).unwrap_or(false)
            {
                return Err(ChainError::RankFailure { degree: q });
            }
            continue;
        }
        let hq = h.classes.get(q).unwrap_or(&empty);
        // cycle check for the homology vectors
        if let Some(b) = complex.boundary(q) {
            for v in hq {
                if v.len() != dim {
                    return Err(ChainError::ShapeMismatch { degree: q });
                }
                let img = b.matvec(v);
                let r = m::sqrt(img.iter().map(|x| x * x).sum());
                let vn = m::sqrt(v.iter().map(|x| x * x).sum());
                if r > 1e-9 * b.frobenius().max(1.0) * vn {
                    return Err(ChainError::NotACycle {
                        degree: q,
                        residual: r,
                    });
                }
            }
        }

        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(dim);
        // image part d(b_{q+1})
        if q < top {
            if let Some(bq1) = complex.boundary(q + 1) {
                for v in lifts.get(q + 1).unwrap_or(&empty) {
                    if v.len() != complex.lengths[q + 1] {
                        return Err(ChainError::ShapeMismatch { degree: q + 1 });
                    }
                    cols.push(bq1.matvec(v));
                }
            }
        }
        // homology part
        for v in hq {
            cols.push(v.clone());
        }
        // lift part b_q
        for v in lifts.get(q).unwrap_or(&empty) {
            cols.push(v.clone());
        }
        if cols.len() != dim {
            return Err(ChainError::RankFailure { degree: q });
        }
        let mat = Matrix::from_columns(dim, &cols);
        let ld = log_abs_det(mat).ok_or(ChainError::RankFailure { degree: q })?;
        if q % 2 == 0 {
            log_tau += ld;
        } else {
            log_tau -= ld;
        }
    }
    Ok(log_tau)
}

fn unit(dim: usize, j: usize) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[j] = 1.0;
    v
}

/// Torsion in the multiplicative normalisation.
pub fn reidemeister_torsion(
    complex: &FiniteChainComplex,
    h: &GradedHomologyBasis,
) -> Result<f64, ChainError> {
    Ok(m::exp(reidemeister_torsion_log(complex, h)?))
}

/// CW model of the cone over `S^n` (one top cell, one `n`-cell, one `0`-cell)
/// with the harmonic homology basis for the given volume.
///
/// * relative: a single generator in degree `n+1`, `h_{n+1} = c/sqrt(V)`;
/// * absolute: generators in degrees `n+1`, `n`, `0` with `d c_{n+1} = c_n`
///   and `h_0 = sqrt(V) c_0`.
///
/// `n = 0` is the interval: the subcomplex has two 0-cells, and the harmonic
/// 0-class spreads over both endpoints with weight `sqrt(V)/2`.
pub fn cone_cw_complex(
    n: u32,
    bc: BoundaryCondition,
    cone_volume: f64,
) -> (FiniteChainComplex, GradedHomologyBasis) {
    let n = n as usize;
    let sqv = m::sqrt(cone_volume);
    match bc {
        BoundaryCondition::Relative => {
            let mut lengths = vec![0usize; n + 2];
            lengths[n + 1] = 1;
            let boundaries = (0..=n + 1)
                .map(|q| {
                    let rows = if q == 0 { 0 } else { lengths[q - 1] };
                    Matrix::zeros(rows, lengths[q])
                })
                .collect();
            let mut classes = vec![Vec::new(); n + 2];
            classes[n + 1] = vec![vec![1.0 / sqv]];
            (
                FiniteChainComplex {
                    lengths,
                    boundaries,
                },
                GradedHomologyBasis { classes },
            )
        }
        BoundaryCondition::Absolute if n == 0 => {
            // interval: C_1 = R, C_0 = R^2, d c_1 = p_1 - p_0
            let lengths = vec![2usize, 1usize];
            let mut d1 = Matrix::zeros(2, 1);
            d1[(0, 0)] = -1.0;
            d1[(1, 0)] = 1.0;
            let boundaries = vec![Matrix::zeros(0, 2), d1];
            let classes = vec![vec![vec![0.5 * sqv, 0.5 * sqv]], Vec::new()];
            (
                FiniteChainComplex {
                    lengths,
                    boundaries,
                },
                GradedHomologyBasis { classes },
            )
        }
        BoundaryCondition::Absolute => {
            let mut lengths = vec![0usize; n + 2];
            lengths[0] = 1;
            lengths[n] = 1;
            lengths[n + 1] = 1;
            let boundaries = (0..=n + 1)
                .map(|q| {
                    let rows = if q == 0 { 0 } else { lengths[q - 1] };
                    let mut b = Matrix::zeros(rows, lengths[q]);
                    if q == n + 1 {
                        b[(0, 0)] = 1.0;
                    }
                    b
                })
                .collect();
            let mut classes = vec![Vec::new(); n + 2];
            classes[0] = vec![vec![sqv]];
            (
                FiniteChainComplex {
                    lengths,
                    boundaries,
                },
                GradedHomologyBasis { classes },
            )
        }
    }
}

/// Closed form for the Ray–Singer torsion of the cone:
/// `log tau_abs = (rank/2) log V`, `log tau_rel = (-1)^n (rank/2) log V`.
pub fn rs_torsion_closed(geom: &ConeGeometry, bc: BoundaryCondition) -> f64 {
    let half_rk = 0.5 * geom.rank as f64;
    let lv = m::ln(volume(geom));
    match bc {
        BoundaryCondition::Absolute => half_rk * lv,
        BoundaryCondition::Relative => {
            if geom.n % 2 == 0 {
                half_rk * lv
            } else {
                -half_rk * lv
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn identity_two_term() -> (FiniteChainComplex, GradedHomologyBasis) {
        let mut d = Matrix::zeros(1, 1);
        d[(0, 0)] = 1.0;
        (
            FiniteChainComplex {
                lengths: vec![1, 1],
                boundaries: vec![Matrix::zeros(0, 1), d],
            },
            GradedHomologyBasis {
                classes: vec![Vec::new(), Vec::new()],
            },
        )
    }

    #[test]
    fn acyclic_identity_complex_has_torsion_one() {
        let (c, h) = identity_two_term();
        assert!((reidemeister_torsion(&c, &h).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn relative_circle_cone_gives_inverse_sqrt_volume() {
        let v = PI * 1.0; // n=1, alpha=pi/2, l=1
        let (c, h) = cone_cw_complex(1, BoundaryCondition::Relative, v);
        let tau = reidemeister_torsion(&c, &h).unwrap();
        assert!((tau - 1.0 / v.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn absolute_circle_cone_gives_sqrt_volume() {
        let v = PI * 4.0 * 0.5; // l=2, sin alpha = 1/2
        let (c, h) = cone_cw_complex(1, BoundaryCondition::Absolute, v);
        let tau = reidemeister_torsion(&c, &h).unwrap();
        assert!((tau - v.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn relative_sphere_cone_has_positive_exponent() {
        // n = 2: exponent (-1)^n = +1
        let v = 4.0 * PI / 3.0;
        let (c, h) = cone_cw_complex(2, BoundaryCondition::Relative, v);
        let tau = reidemeister_torsion(&c, &h).unwrap();
        assert!((tau - v.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn interval_absolute_matches_closed_form() {
        let v = 2.0 * 1.7;
        let (c, h) = cone_cw_complex(0, BoundaryCondition::Absolute, v);
        let tau = reidemeister_torsion(&c, &h).unwrap();
        assert!((tau - v.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn cw_torsion_matches_closed_form_rank_one() {
        for n in [0u32, 1, 2, 3] {
            for bc in [BoundaryCondition::Absolute, BoundaryCondition::Relative] {
                let geom = ConeGeometry::new(n, PI / 3.0, 1.4, 1).unwrap();
                let v = volume(&geom);
                let (c, h) = cone_cw_complex(n, bc, v);
                let log_tau = reidemeister_torsion_log(&c, &h).unwrap();
                let closed = rs_torsion_closed(&geom, bc);
                assert!((log_tau - closed).abs() < 1e-12, "n={n} bc={bc:?}");
            }
        }
    }

    #[test]
    fn duality_of_closed_forms() {
        for n in [1u32, 2, 3] {
            let geom = ConeGeometry::new(n, PI / 4.0, 2.0, 1).unwrap();
            let labs = rs_torsion_closed(&geom, BoundaryCondition::Absolute);
            let lrel = rs_torsion_closed(&geom, BoundaryCondition::Relative);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((labs - sign * lrel).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn rank_scales_log_torsion() {
        let g1 = ConeGeometry::new(1, PI / 2.0, 1.0, 1).unwrap();
        let g3 = ConeGeometry::new(1, PI / 2.0, 1.0, 3).unwrap();
        let a = rs_torsion_closed(&g1, BoundaryCondition::Absolute);
        let b = rs_torsion_closed(&g3, BoundaryCondition::Absolute);
        assert!((b - 3.0 * a).abs() < 1e-14);
    }

    #[test]
    fn disc_closed_forms() {
        // D^2_1 absolute: sqrt(pi); D^3_1 relative: +log(4pi/3)/2 (odd n
        // flips the sign, n = 2 keeps it)
        let d2 = ConeGeometry::disc(2, 1.0, 1).unwrap();
        assert!(
            (rs_torsion_closed(&d2, BoundaryCondition::Absolute) - 0.5 * PI.ln()).abs() < 1e-15
        );
        assert!(
            (rs_torsion_closed(&d2, BoundaryCondition::Relative) + 0.5 * PI.ln()).abs() < 1e-15
        );
        let d3 = ConeGeometry::disc(3, 1.0, 1).unwrap();
        let half_log_v = 0.5 * (4.0 * PI / 3.0).ln();
        assert!((rs_torsion_closed(&d3, BoundaryCondition::Relative) - half_log_v).abs() < 1e-15);
    }

    #[test]
    fn homology_basis_must_be_cycles() {
        let (c, _) = identity_two_term();
        // claim a non-cycle class in degree 1
        let h = GradedHomologyBasis {
            classes: vec![Vec::new(), vec![vec![1.0]]],
        };
        assert!(matches!(
            reidemeister_torsion(&c, &h),
            Err(ChainError::NotACycle { degree: 1, .. })
                | Err(ChainError::RankFailure { degree: 1 })
        ));
    }

    #[test]
    fn dependent_homology_classes_rejected() {
        // two proportional classes claimed in degree 0 of 0 -> 0 -> R^2
        let c = FiniteChainComplex {
            lengths: vec![2, 0],
            boundaries: vec![Matrix::zeros(0, 2), Matrix::zeros(2, 0)],
        };
        let h = GradedHomologyBasis {
            classes: vec![vec![vec![1.0, 2.0], vec![2.0, 4.0]], Vec::new()],
        };
        assert!(matches!(
            reidemeister_torsion(&c, &h),
            Err(ChainError::RankFailure { degree: 0 })
        ));
    }

    #[test]
    fn wrong_homology_cardinality_rejected() {
        let (c, _) = identity_two_term();
        // acyclic complex, but a class is claimed in degree 0
        let h = GradedHomologyBasis {
            classes: vec![vec![vec![1.0]], Vec::new()],
        };
        assert!(matches!(
            reidemeister_torsion(&c, &h),
            Err(ChainError::RankFailure { degree: 0 })
        ));
    }

    #[test]
    fn non_complex_rejected() {
        // d1 d2 != 0
        let mut d1 = Matrix::zeros(1, 1);
        d1[(0, 0)] = 1.0;
        let mut d2 = Matrix::zeros(1, 1);
        d2[(0, 0)] = 1.0;
        let c = FiniteChainComplex {
            lengths: vec![1, 1, 1],
            boundaries: vec![Matrix::zeros(0, 1), d1, d2],
        };
        assert!(matches!(
            c.validate(),
            Err(ChainError::NotAComplex { degree: 2, .. })
        ));
    }
}
