//! Form-Laplacian spectra of the two cones as multisets of zero-family
//! bands, plus numerical eigenvalue enumeration.
//!
//! A band is either a single zero family (fixed order, fixed multiplicity)
//! or a series indexed by `n >= 1` whose order grows with `n`:
//! `nu n` with multiplicity 2 for the cone over the circle,
//! `mu_n = sqrt(nu^2 n(n+1) + 1/4)` with multiplicity `2n+1` for the cone
//! over the sphere. Eigenvalues are `zero^2 / l^2`.
//!
//! Band-level identities (Poincaré duality, alternating cancellation) are
//! checked symbolically, not numerically: two bands are equal when their
//! family kind, order rule and multiplicity rule coincide.

use crate::geometry::BoundaryCondition;
use crate::mathx as m;
use crate::specfun::{SpecfunError, ZeroFamily, ZeroKind, ZeroSeq};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Order of a band as a function of the series index `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OrderRule {
    /// a single family at a fixed order
    Fixed(f64),
    /// `nu * n`, n >= 1
    CircleHarmonic { nu: f64 },
    /// `sqrt(nu^2 n(n+1) + 1/4)`, n >= 1
    SphereMu { nu: f64 },
}

impl OrderRule {
    pub fn order_at(self, n: u32) -> f64 {
        match self {
            OrderRule::Fixed(v) => v,
            OrderRule::CircleHarmonic { nu } => nu * n as f64,
            OrderRule::SphereMu { nu } => m::sqrt(nu * nu * (n as f64) * (n as f64 + 1.0) + 0.25),
        }
    }

    fn is_series(self) -> bool {
        !matches!(self, OrderRule::Fixed(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Multiplicity {
    Const(u32),
    /// `2n + 1` on the series index
    TwoNPlusOne,
}

impl Multiplicity {
    pub fn at(self, n: u32) -> u32 {
        match self {
            Multiplicity::Const(c) => c,
            Multiplicity::TwoNPlusOne => 2 * n + 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBand {
    pub kind: ZeroKind,
    pub order: OrderRule,
    pub multiplicity: Multiplicity,
}

impl SpectralBand {
    fn canonical_key(&self) -> (u8, u8, u64, u8, u64) {
        let kind = match self.kind {
            ZeroKind::JZero => 0u8,
            ZeroKind::JPrimeZero => 1,
            ZeroKind::GPlusZero => 2,
            ZeroKind::GMinusZero => 3,
        };
        let (okind, obits) = match self.order {
            OrderRule::Fixed(v) => (0u8, v.to_bits()),
            OrderRule::CircleHarmonic { nu } => (1, nu.to_bits()),
            OrderRule::SphereMu { nu } => (2, nu.to_bits()),
        };
        let (mkind, mval) = match self.multiplicity {
            Multiplicity::Const(c) => (0u8, c as u64),
            Multiplicity::TwoNPlusOne => (1, 0),
        };
        (kind, okind, obits, mkind, mval)
    }

    pub fn label(&self) -> String {
        use alloc::format;
        let fam = self.kind.label();
        match self.order {
            OrderRule::Fixed(v) => format!("{fam}({v})"),
            OrderRule::CircleHarmonic { .. } => format!("{fam}(nu*n)"),
            OrderRule::SphereMu { .. } => format!("{fam}(mu_n)"),
        }
    }
}

/// Positive spectrum of one form degree, as bands.
#[derive(Clone, Debug)]
pub struct SpectrumDescriptor {
    pub degree: u32,
    pub bc: BoundaryCondition,
    /// scale: eigenvalues are zero^2 / l^2
    pub l: f64,
    pub bands: Vec<SpectralBand>,
}

impl SpectrumDescriptor {
    /// Multiset equality of the band lists.
    pub fn same_bands(&self, other: &SpectrumDescriptor) -> bool {
        let mut a: Vec<_> = self.bands.iter().map(|b| b.canonical_key()).collect();
        let mut b: Vec<_> = other.bands.iter().map(|b| b.canonical_key()).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

fn fixed(kind: ZeroKind, order: f64, mult: u32) -> SpectralBand {
    SpectralBand {
        kind,
        order: OrderRule::Fixed(order),
        multiplicity: Multiplicity::Const(mult),
    }
}

fn circle_series(kind: ZeroKind, nu: f64) -> SpectralBand {
    SpectralBand {
        kind,
        order: OrderRule::CircleHarmonic { nu },
        multiplicity: Multiplicity::Const(2),
    }
}

fn sphere_series(kind: ZeroKind, nu: f64) -> SpectralBand {
    SpectralBand {
        kind,
        order: OrderRule::SphereMu { nu },
        multiplicity: Multiplicity::TwoNPlusOne,
    }
}

/// Spectrum of the `q`-form Laplacian on the cone over the circle.
pub fn cone_circle_spectrum(
    q: u32,
    bc: BoundaryCondition,
    nu: f64,
    l: f64,
) -> Result<SpectrumDescriptor, SpecfunError> {
    if q > 2 {
        return Err(SpecfunError::Domain("circle cone has form degrees 0..=2"));
    }
    use BoundaryCondition::*;
    use ZeroKind::*;
    let bands = match (q, bc) {
        (0, Absolute) => vec![fixed(JZero, 1.0, 1), circle_series(JPrimeZero, nu)],
        (1, Absolute) | (1, Relative) => vec![
            fixed(JZero, 0.0, 1),
            fixed(JZero, 1.0, 1),
            circle_series(JZero, nu),
            circle_series(JPrimeZero, nu),
        ],
        (2, Absolute) => vec![fixed(JZero, 0.0, 1), circle_series(JZero, nu)],
        (0, Relative) => vec![fixed(JZero, 0.0, 1), circle_series(JZero, nu)],
        (2, Relative) => vec![fixed(JZero, 1.0, 1), circle_series(JPrimeZero, nu)],
        _ => unreachable!(),
    };
    Ok(SpectrumDescriptor {
        degree: q,
        bc,
        l,
        bands,
    })
}

/// Spectrum of the `q`-form Laplacian on the cone over the sphere.
///
/// The degree-2 absolute list (and its degree-1 relative dual) carries the
/// `J(mu_n)` series twice; the lists are encoded verbatim and the duality
/// and cancellation checks guard the transcription.
pub fn cone_sphere_spectrum(
    q: u32,
    bc: BoundaryCondition,
    nu: f64,
    l: f64,
) -> Result<SpectrumDescriptor, SpecfunError> {
    if q > 3 {
        return Err(SpecfunError::Domain("sphere cone has form degrees 0..=3"));
    }
    use BoundaryCondition::*;
    use ZeroKind::*;
    let bands = match (q, bc) {
        (0, Absolute) => vec![sphere_series(GMinusZero, nu), fixed(JZero, 1.5, 1)],
        (1, Absolute) => vec![
            fixed(JZero, 1.5, 1),
            sphere_series(JZero, nu),
            sphere_series(GPlusZero, nu),
            sphere_series(GMinusZero, nu),
        ],
        (2, Absolute) => vec![
            fixed(JZero, 0.5, 1),
            sphere_series(JZero, nu),
            sphere_series(GPlusZero, nu),
            sphere_series(JZero, nu),
        ],
        (3, Absolute) => vec![sphere_series(JZero, nu), fixed(JZero, 0.5, 1)],
        (0, Relative) => vec![sphere_series(JZero, nu), fixed(JZero, 0.5, 1)],
        (1, Relative) => vec![
            fixed(JZero, 0.5, 1),
            sphere_series(JZero, nu),
            sphere_series(GPlusZero, nu),
            sphere_series(JZero, nu),
        ],
        (2, Relative) => vec![
            fixed(JZero, 1.5, 1),
            sphere_series(JZero, nu),
            sphere_series(GPlusZero, nu),
            sphere_series(GMinusZero, nu),
        ],
        (3, Relative) => vec![sphere_series(GMinusZero, nu), fixed(JZero, 1.5, 1)],
        _ => unreachable!(),
    };
    Ok(SpectrumDescriptor {
        degree: q,
        bc,
        l,
        bands,
    })
}

/// Signed multiset of bands, `sum_q (-1)^q Sp(Delta^{(q)})`.
#[derive(Clone, Debug, Default)]
pub struct SignedBandMultiset {
    counts: BTreeMap<(u8, u8, u64, u8, u64), (SpectralBand, i64)>,
}

impl SignedBandMultiset {
    pub fn is_empty(&self) -> bool {
        self.counts.values().all(|(_, c)| *c == 0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SpectralBand, i64)> {
        self.counts
            .values()
            .filter(|(_, c)| *c != 0)
            .map(|(b, c)| (b, *c))
    }
}

/// Alternating sum over degrees; the descriptor at index `q` enters with
/// sign `(-1)^q`.
pub fn alternating_multiset(descriptors: &[SpectrumDescriptor]) -> SignedBandMultiset {
    let mut out = SignedBandMultiset::default();
    for (q, d) in descriptors.iter().enumerate() {
        let sign = if q % 2 == 0 { 1i64 } else { -1 };
        for band in &d.bands {
            let e = out.counts.entry(band.canonical_key()).or_insert((*band, 0));
            e.1 += sign;
        }
    }
    out
}

/// One enumerated eigenvalue with its provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueEntry {
    pub lambda: f64,
    pub multiplicity: u32,
    pub band: String,
    /// series index `n` (0 for fixed bands) and zero index `k`
    pub n: u32,
    pub k: u32,
}

/// Source of zeros for the enumeration; lets a caller interpose a cache.
pub trait ZeroStore {
    fn get(&mut self, family: &ZeroFamily, k: u32) -> Option<f64>;
    fn put(&mut self, family: &ZeroFamily, k: u32, value: f64);
}

/// No-op store: every zero is computed.
pub struct NoCache;
impl ZeroStore for NoCache {
    fn get(&mut self, _: &ZeroFamily, _: u32) -> Option<f64> {
        None
    }
    fn put(&mut self, _: &ZeroFamily, _: u32, _: f64) {}
}

/// All eigenvalues `zero^2/l^2 <= cutoff` with multiplicities, sorted by
/// value (ties by band label, then indices).
pub fn enumerate_eigenvalues(
    d: &SpectrumDescriptor,
    cutoff: f64,
) -> Result<Vec<EigenvalueEntry>, SpecfunError> {
    enumerate_eigenvalues_with_store(d, cutoff, &mut NoCache)
}

pub fn enumerate_eigenvalues_with_store(
    d: &SpectrumDescriptor,
    cutoff: f64,
    store: &mut dyn ZeroStore,
) -> Result<Vec<EigenvalueEntry>, SpecfunError> {
    if !(cutoff > 0.0) {
        return Err(SpecfunError::Domain("cutoff must be positive"));
    }
    let zmax = m::sqrt(cutoff) * d.l;
    let mut out = Vec::new();
    for band in &d.bands {
        let max_n = if band.order.is_series() { u32::MAX } else { 1 };
        let mut n = 1u32;
        while n <= max_n {
            let order = band.order.order_at(n);
            // the first positive zero of every family exceeds the order,
            // so once order > zmax the band (and all later n) are done
            if order > zmax {
                break;
            }
            let family = ZeroFamily::new(band.kind, order)?;
            // generator plus the number of zeros it has produced, so a
            // partially warm store cannot desynchronise the indices
            let mut seq: Option<(ZeroSeq, u32)> = None;
            let mut k = 1u32;
            loop {
                let z = match store.get(&family, k) {
                    Some(z) => z,
                    None => {
                        if !matches!(&seq, Some((_, pos)) if *pos == k - 1) {
                            let mut s = ZeroSeq::new(family)?;
                            for _ in 1..k {
                                s.next_zero()?;
                            }
                            seq = Some((s, k - 1));
                        }
                        let (s, pos) = seq.as_mut().unwrap();
                        let z = s.next_zero()?;
                        *pos += 1;
                        store.put(&family, k, z);
                        z
                    }
                };
                if z > zmax {
                    break;
                }
                out.push(EigenvalueEntry {
                    lambda: z * z / (d.l * d.l),
                    multiplicity: band.multiplicity.at(n),
                    band: band.label(),
                    n: if band.order.is_series() { n } else { 0 },
                    k,
                });
                k += 1;
            }
            n += 1;
        }
    }
    out.sort_by(|a, b| {
        a.lambda
            .total_cmp(&b.lambda)
            .then_with(|| a.band.cmp(&b.band))
            .then_with(|| a.n.cmp(&b.n))
            .then_with(|| a.k.cmp(&b.k))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use BoundaryCondition::{Absolute, Relative};

    #[test]
    fn circle_q2_absolute_band_list() {
        let d = cone_circle_spectrum(2, Absolute, 1.0, 1.0).unwrap();
        assert_eq!(d.bands.len(), 2);
        assert_eq!(d.bands[0], fixed(ZeroKind::JZero, 0.0, 1));
        assert_eq!(d.bands[1], circle_series(ZeroKind::JZero, 1.0));
    }

    #[test]
    fn circle_q0_relative_equals_q2_absolute() {
        let a = cone_circle_spectrum(2, Absolute, 2.0, 1.0).unwrap();
        let b = cone_circle_spectrum(0, Relative, 2.0, 1.0).unwrap();
        assert!(a.same_bands(&b));
    }

    #[test]
    fn circle_q1_bc_independent() {
        let a = cone_circle_spectrum(1, Absolute, 1.7, 1.0).unwrap();
        let b = cone_circle_spectrum(1, Relative, 1.7, 1.0).unwrap();
        assert!(a.same_bands(&b));
    }

    #[test]
    fn sphere_q0_absolute_band_list() {
        let d = cone_sphere_spectrum(0, Absolute, 1.0, 1.0).unwrap();
        assert_eq!(d.bands[0], sphere_series(ZeroKind::GMinusZero, 1.0));
        assert_eq!(d.bands[1], fixed(ZeroKind::JZero, 1.5, 1));
    }

    #[test]
    fn sphere_mu_one_at_nu_one() {
        let rule = OrderRule::SphereMu { nu: 1.0 };
        assert_eq!(rule.order_at(1), 1.5);
        assert_eq!(rule.order_at(2), 2.5);
    }

    #[test]
    fn sphere_orders_half_integer_at_right_angle() {
        let rule = OrderRule::SphereMu { nu: 1.0 };
        for n in 1..20u32 {
            assert_eq!(rule.order_at(n), n as f64 + 0.5);
        }
    }

    #[test]
    fn poincare_duality_band_equality() {
        for nu in [1.0, 1.5, 2.0] {
            for q in 0..=2u32 {
                let a = cone_circle_spectrum(q, Absolute, nu, 1.0).unwrap();
                let b = cone_circle_spectrum(2 - q, Relative, nu, 1.0).unwrap();
                assert!(a.same_bands(&b), "circle q={q} nu={nu}");
            }
            for q in 0..=3u32 {
                let a = cone_sphere_spectrum(q, Absolute, nu, 1.0).unwrap();
                let b = cone_sphere_spectrum(3 - q, Relative, nu, 1.0).unwrap();
                assert!(a.same_bands(&b), "sphere q={q} nu={nu}");
            }
        }
    }

    #[test]
    fn alternating_cancellation_all_cases() {
        for bc in [Absolute, Relative] {
            let circle: Vec<_> = (0..=2)
                .map(|q| cone_circle_spectrum(q, bc, 1.3, 1.0).unwrap())
                .collect();
            assert!(alternating_multiset(&circle).is_empty(), "circle {bc:?}");
            let sphere: Vec<_> = (0..=3)
                .map(|q| cone_sphere_spectrum(q, bc, 1.3, 1.0).unwrap())
                .collect();
            assert!(alternating_multiset(&sphere).is_empty(), "sphere {bc:?}");
        }
    }

    #[test]
    fn single_degree_survives_alternation() {
        let d = cone_circle_spectrum(0, Absolute, 1.0, 1.0).unwrap();
        let ms = alternating_multiset(core::slice::from_ref(&d));
        assert!(!ms.is_empty());
        assert_eq!(ms.entries().count(), 2);
    }

    #[test]
    fn enumerate_circle_q2_known_leading_eigenvalues() {
        let d = cone_circle_spectrum(2, Absolute, 1.0, 1.0).unwrap();
        let evs = enumerate_eigenvalues(&d, 30.0).unwrap();
        // frozen: j_{0,1}^2 and j_{1,1}^2
        let j01sq = 5.783185962946784521175995758455807035071;
        let j11sq = 14.68197064212388879579666960901545088748;
        assert!((evs[0].lambda - j01sq).abs() < 1e-9);
        assert_eq!(evs[0].multiplicity, 1);
        let hit = evs
            .iter()
            .find(|e| (e.lambda - j11sq).abs() < 1e-9)
            .expect("j_{1,1}^2 present");
        assert_eq!(hit.multiplicity, 2);
        // j_{0,2}^2 = 30.47.. must be excluded at cutoff 30
        assert!(evs.iter().all(|e| e.lambda <= 30.0));
    }

    #[test]
    fn enumerate_below_first_zero_is_empty() {
        let d = cone_circle_spectrum(2, Absolute, 1.0, 1.0).unwrap();
        assert!(enumerate_eigenvalues(&d, 0.1).unwrap().is_empty());
    }

    #[test]
    fn enumerate_monotone_in_cutoff() {
        let d = cone_sphere_spectrum(0, Absolute, 1.0, 1.0).unwrap();
        let a = enumerate_eigenvalues(&d, 40.0).unwrap();
        let b = enumerate_eigenvalues(&d, 80.0).unwrap();
        assert!(a.len() < b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x, y);
        }
        assert!(b.windows(2).all(|w| w[0].lambda <= w[1].lambda));
    }

    #[test]
    fn weyl_law_circle_q0() {
        // N(Lambda) ~ (area/4pi) Lambda for the scalar Laplacian
        let d = cone_circle_spectrum(0, Absolute, 1.0, 1.0).unwrap();
        let cutoff = 4000.0;
        let evs = enumerate_eigenvalues(&d, cutoff).unwrap();
        let count: f64 = evs.iter().map(|e| e.multiplicity as f64).sum();
        let weyl = core::f64::consts::PI * cutoff / (4.0 * core::f64::consts::PI);
        assert!(
            (count - weyl).abs() / weyl < 0.25,
            "N={count} vs Weyl={weyl}"
        );
    }

    #[test]
    fn sphere_enumeration_mixes_all_band_kinds() {
        let d = cone_sphere_spectrum(1, Absolute, 1.0, 1.0).unwrap();
        let evs = enumerate_eigenvalues(&d, 200.0).unwrap();
        assert!(evs.windows(2).all(|w| w[0].lambda <= w[1].lambda));
        let has = |label: &str| evs.iter().any(|e| e.band == label);
        assert!(has("J(1.5)") && has("J(mu_n)") && has("G+(mu_n)") && has("G-(mu_n)"));
        // series bands reach several harmonics and carry 2n+1 multiplicities
        let deep = evs.iter().filter(|e| e.n >= 3).count();
        assert!(deep > 0, "cutoff 200 reaches n >= 3");
        for e in &evs {
            if e.n > 0 {
                assert_eq!(e.multiplicity, 2 * e.n + 1);
            }
        }
    }

    #[test]
    fn scale_divides_eigenvalues() {
        let d1 = cone_circle_spectrum(2, Absolute, 1.0, 1.0).unwrap();
        let d2 = cone_circle_spectrum(2, Absolute, 1.0, 2.0).unwrap();
        let a = enumerate_eigenvalues(&d1, 30.0).unwrap();
        let b = enumerate_eigenvalues(&d2, 7.5).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert!((x.lambda / 4.0 - y.lambda).abs() < 1e-10);
        }
    }
}
