//! The verification suites behind `torsionlab verify`. Every check returns
//! a measured residual against a pinned tolerance; the acceptance tests run
//! the same registry.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use torsion_core::chain::{
    cone_cw_complex, reidemeister_torsion_log, reidemeister_torsion_log_with_lifts,
    rs_torsion_closed, FiniteChainComplex, GradedHomologyBasis, Matrix,
};
use torsion_core::engine::{
    circle_phi_pair, f_zero, f_zero_printed_series_nu1, log_gamma_sequence, phi_transform,
    simple_bessel_zeta, sphere_phi2_pair, zeta_sp_sphere, zeta_sp_sphere_plana_half,
    GammaSequenceCase,
};
use torsion_core::geometry::{volume, BoundaryCondition, ConeGeometry};
use torsion_core::specfun::{
    bessel_i, bessel_j, digamma, g_function, gamma_ln, hurwitz_zeta, riemann_zeta_with_derivative,
    uniform_expansion_coeffs, zero, ExpansionKind, ZeroFamily, ZeroKind, ZeroSeq, EULER_GAMMA,
};
use torsion_core::spectrum::{
    alternating_multiset, cone_circle_spectrum, cone_sphere_spectrum, enumerate_eigenvalues,
};
use torsion_core::torsion::{
    analytic_torsion_cone_circle, analytic_torsion_cone_sphere, analytic_torsion_disc, anomaly_bm,
    anomaly_df, anomaly_normalization_identity, consistency_report, pipeline_circle,
    pipeline_sphere,
};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub suite: Suite,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    Spectra,
    Engine,
    Torsion,
}

impl Suite {
    pub fn label(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Spectra => "spectra",
            Suite::Engine => "engine",
            Suite::Torsion => "torsion",
        }
    }

    pub fn parse(s: &str) -> Option<Option<Suite>> {
        match s.to_ascii_lowercase().as_str() {
            "specfun" => Some(Some(Suite::Specfun)),
            "spectra" => Some(Some(Suite::Spectra)),
            "engine" => Some(Some(Suite::Engine)),
            "torsion" => Some(Some(Suite::Torsion)),
            "all" => Some(None),
            _ => None,
        }
    }
}

struct Check {
    id: &'static str,
    name: &'static str,
    suite: Suite,
    tolerance: f64,
    run: fn() -> (f64, String),
}

/// worst absolute deviation over a slice of (value, expect) pairs
fn worst(pairs: &[(f64, f64)]) -> f64 {
    pairs.iter().map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn registry() -> Vec<Check> {
    vec![
        // ---------------- specfun ----------------
        Check {
            id: "SF01",
            name: "log-gamma against frozen high-precision value",
            suite: Suite::Specfun,
            tolerance: 1e-13,
            run: || {
                let expect = 7.052185450738539444925749253133010245418;
                let got = gamma_ln(7.25).unwrap();
                (
                    ((got - expect) / expect).abs(),
                    format!("lnGamma(7.25) = {got}"),
                )
            },
        },
        Check {
            id: "SF02",
            name: "digamma classical values",
            suite: Suite::Specfun,
            tolerance: 1e-13,
            run: || {
                let r = worst(&[
                    (digamma(1.0).unwrap(), -EULER_GAMMA),
                    (digamma(0.5).unwrap(), -EULER_GAMMA - 2.0 * 2.0f64.ln()),
                    (digamma(3.0).unwrap(), -EULER_GAMMA + 1.5),
                ]);
                (r, "psi at 1, 1/2, 3".into())
            },
        },
        Check {
            id: "SF03",
            name: "Riemann zeta continuation at 0, 2, -1",
            suite: Suite::Specfun,
            tolerance: 1e-12,
            run: || {
                let (z0, z0p) = riemann_zeta_with_derivative(0.0).unwrap();
                let r = worst(&[
                    (z0, -0.5),
                    (z0p, -0.5 * (2.0 * PI).ln()),
                    (riemann_zeta_with_derivative(2.0).unwrap().0, PI * PI / 6.0),
                    (riemann_zeta_with_derivative(-1.0).unwrap().0, -1.0 / 12.0),
                ]);
                (r, "zeta(0), zeta'(0), zeta(2), zeta(-1)".into())
            },
        },
        Check {
            id: "SF04",
            name: "Hurwitz zeta identity at s = 0",
            suite: Suite::Specfun,
            tolerance: 1e-12,
            run: || {
                let r = [0.5f64, 1.0, 1.5, 2.0]
                    .iter()
                    .map(|&a| (hurwitz_zeta(0.0, a).unwrap() - (0.5 - a)).abs())
                    .fold(0.0, f64::max);
                (r, "zeta_H(0,a) = 1/2 - a on the a-grid".into())
            },
        },
        Check {
            id: "SF05",
            name: "half-integer Bessel closed forms",
            suite: Suite::Specfun,
            tolerance: 1e-12,
            run: || {
                let j = bessel_j(1.5, PI).unwrap();
                let i = bessel_i(0.5, 1.0, false).unwrap();
                let r = worst(&[
                    (j, 2.0f64.sqrt() / PI),
                    (i, (2.0 / PI).sqrt() * 1.0f64.sinh()),
                ]);
                (r, format!("J_3/2(pi) = {j}"))
            },
        },
        Check {
            id: "SF06",
            name: "first Bessel zeros against frozen references",
            suite: Suite::Specfun,
            tolerance: 1e-10,
            run: || {
                let j01 = zero(
                    ZeroFamily {
                        kind: ZeroKind::JZero,
                        order: 0.0,
                    },
                    1,
                )
                .unwrap();
                let jp11 = zero(
                    ZeroFamily {
                        kind: ZeroKind::JPrimeZero,
                        order: 1.0,
                    },
                    1,
                )
                .unwrap();
                let j_half = zero(
                    ZeroFamily {
                        kind: ZeroKind::JZero,
                        order: 0.5,
                    },
                    3,
                )
                .unwrap();
                let r = worst(&[
                    (j01, 2.404825557695772768621631879326454643124),
                    (jp11, 1.841183781340659302643629513644443322436),
                    (j_half, 3.0 * PI),
                ]);
                (r, format!("j(0,1) = {j01}"))
            },
        },
        Check {
            id: "SF07",
            name: "zero interlacing j' < j < next j'",
            suite: Suite::Specfun,
            tolerance: 0.0,
            run: || {
                let mut violations = 0u32;
                for &nu in &[0.5f64, 1.0, 2.5, 7.0] {
                    for k in 1..=5u32 {
                        let jp = zero(
                            ZeroFamily {
                                kind: ZeroKind::JPrimeZero,
                                order: nu,
                            },
                            k,
                        )
                        .unwrap();
                        let j = zero(
                            ZeroFamily {
                                kind: ZeroKind::JZero,
                                order: nu,
                            },
                            k,
                        )
                        .unwrap();
                        let jp1 = zero(
                            ZeroFamily {
                                kind: ZeroKind::JPrimeZero,
                                order: nu,
                            },
                            k + 1,
                        )
                        .unwrap();
                        if !(jp < j && j < jp1) {
                            violations += 1;
                        }
                    }
                }
                (violations as f64, "20 interlacing triples".into())
            },
        },
        Check {
            id: "SF08",
            name: "G-function vanishes at its computed zeros",
            suite: Suite::Specfun,
            tolerance: 1e-9,
            run: || {
                let mut r: f64 = 0.0;
                for (sign, kind) in [(1i8, ZeroKind::GPlusZero), (-1, ZeroKind::GMinusZero)] {
                    for &nu in &[1.5f64, 2.5, 5.0] {
                        for k in [1u32, 3, 10] {
                            let z = zero(ZeroFamily { kind, order: nu }, k).unwrap();
                            r = r.max(g_function(sign, nu, z).unwrap().abs());
                        }
                    }
                }
                (r, "|G(zero)| over sign/order/index grid".into())
            },
        },
        Check {
            id: "SF09",
            name: "canonical product over 1e4 zeros reproduces I_nu",
            suite: Suite::Specfun,
            tolerance: 1e-3,
            run: || {
                let mut worst_rel: f64 = 0.0;
                let mut monotone = true;
                for &nu in &[0.5f64, 1.0, 2.5] {
                    let mut seq = ZeroSeq::new(ZeroFamily {
                        kind: ZeroKind::JZero,
                        order: nu,
                    })
                    .unwrap();
                    let xs = [0.5f64, 1.0, 2.0];
                    let targets: Vec<f64> = xs
                        .iter()
                        .map(|&x| {
                            (bessel_i(nu, x, false).unwrap()
                                * 2.0f64.powf(nu)
                                * gamma_ln(nu + 1.0).unwrap().exp()
                                / x.powf(nu))
                            .ln()
                        })
                        .collect();
                    let mut acc = [0.0f64; 3];
                    let mut prev = [f64::INFINITY; 3];
                    let checkpoints = [100usize, 1000, 10_000];
                    let mut cp = 0;
                    for k in 1..=10_000usize {
                        let j = seq.next_zero().unwrap();
                        for (s, &x) in xs.iter().enumerate() {
                            acc[s] += (x * x / (j * j)).ln_1p();
                        }
                        if k == checkpoints[cp] {
                            for s in 0..3 {
                                let err = (acc[s] - targets[s]).abs();
                                if k > 100 && err >= prev[s] {
                                    monotone = false;
                                }
                                prev[s] = err;
                            }
                            cp += 1;
                        }
                    }
                    for s in 0..3 {
                        worst_rel = worst_rel.max(prev[s]);
                    }
                }
                let r = if monotone { worst_rel } else { f64::INFINITY };
                (
                    r,
                    format!("worst relative error {worst_rel:.2e}, monotone decay {monotone}"),
                )
            },
        },
        Check {
            id: "SF10",
            name: "uniform large-order correction has the stated order",
            suite: Suite::Specfun,
            tolerance: 2.0,
            run: || {
                // ratio of nu^2-scaled residuals between successive doublings
                let zs: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
                let mut prev: f64 = 0.0;
                let mut worst_ratio: f64 = 0.0;
                for &nu in &[10.0f64, 20.0, 40.0, 80.0] {
                    let mut m: f64 = 0.0;
                    for &z in &zs {
                        let x = nu * z;
                        let t = (1.0 + z * z).sqrt();
                        let u1 = uniform_expansion_coeffs(ExpansionKind::I, 1.0 / t).unwrap()[0];
                        let model = nu * (t + (z / (1.0 + t)).ln())
                            - 0.25 * (1.0 + z * z).ln()
                            - 0.5 * (2.0 * PI * nu).ln()
                            + (u1 / nu).ln_1p();
                        let exact = torsion_core::specfun::bessel_i_scaled(nu, x)
                            .unwrap()
                            .log_value();
                        m = m.max(nu * nu * (exact - model).abs());
                    }
                    if prev > 0.0 {
                        worst_ratio = worst_ratio.max(m / prev);
                    }
                    prev = m;
                }
                (worst_ratio, "residual ratio across nu doublings".into())
            },
        },
        // ---------------- spectra ----------------
        Check {
            id: "SP01",
            name: "Poincare duality of band multisets",
            suite: Suite::Spectra,
            tolerance: 0.0,
            run: || {
                let mut violations = 0u32;
                for nu in [1.0, 1.5, 2.0] {
                    for q in 0..=2u32 {
                        let a =
                            cone_circle_spectrum(q, BoundaryCondition::Absolute, nu, 1.0).unwrap();
                        let b = cone_circle_spectrum(2 - q, BoundaryCondition::Relative, nu, 1.0)
                            .unwrap();
                        if !a.same_bands(&b) {
                            violations += 1;
                        }
                    }
                    for q in 0..=3u32 {
                        let a =
                            cone_sphere_spectrum(q, BoundaryCondition::Absolute, nu, 1.0).unwrap();
                        let b = cone_sphere_spectrum(3 - q, BoundaryCondition::Relative, nu, 1.0)
                            .unwrap();
                        if !a.same_bands(&b) {
                            violations += 1;
                        }
                    }
                }
                (violations as f64, "both cones, three orders".into())
            },
        },
        Check {
            id: "SP02",
            name: "alternating band multiset cancels",
            suite: Suite::Spectra,
            tolerance: 0.0,
            run: || {
                let mut leftovers = 0usize;
                for bc in [BoundaryCondition::Absolute, BoundaryCondition::Relative] {
                    let c: Vec<_> = (0..=2)
                        .map(|q| cone_circle_spectrum(q, bc, 1.4, 1.0).unwrap())
                        .collect();
                    leftovers += alternating_multiset(&c).entries().count();
                    let s: Vec<_> = (0..=3)
                        .map(|q| cone_sphere_spectrum(q, bc, 1.4, 1.0).unwrap())
                        .collect();
                    leftovers += alternating_multiset(&s).entries().count();
                }
                (leftovers as f64, "four (cone, bc) combinations".into())
            },
        },
        Check {
            id: "SP03",
            name: "leading enumerated eigenvalues match frozen zeros",
            suite: Suite::Spectra,
            tolerance: 1e-9,
            run: || {
                let d = cone_circle_spectrum(2, BoundaryCondition::Absolute, 1.0, 1.0).unwrap();
                let evs = enumerate_eigenvalues(&d, 30.0).unwrap();
                let r = worst(&[
                    (evs[0].lambda, 5.783185962946784521175995758455807035071),
                    (evs[0].multiplicity as f64, 1.0),
                ]);
                (r, format!("lambda_1 = {}", evs[0].lambda))
            },
        },
        Check {
            id: "SP04",
            name: "enumeration is monotone under cutoff doubling",
            suite: Suite::Spectra,
            tolerance: 0.0,
            run: || {
                let d = cone_sphere_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0).unwrap();
                let a = enumerate_eigenvalues(&d, 40.0).unwrap();
                let b = enumerate_eigenvalues(&d, 80.0).unwrap();
                let prefix_ok = a.iter().zip(b.iter()).all(|(x, y)| x == y);
                let sorted = b.windows(2).all(|w| w[0].lambda <= w[1].lambda);
                (
                    (!prefix_ok || !sorted || a.len() >= b.len()) as u32 as f64,
                    "cutoff 40 -> 80".into(),
                )
            },
        },
        Check {
            id: "SP05",
            name: "eigenvalue count tracks the Weyl law",
            suite: Suite::Spectra,
            tolerance: 0.25,
            run: || {
                let d = cone_circle_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0).unwrap();
                let evs = enumerate_eigenvalues(&d, 4000.0).unwrap();
                let count: f64 = evs.iter().map(|e| e.multiplicity as f64).sum();
                let weyl = 1000.0;
                (
                    ((count - weyl) / weyl).abs(),
                    format!("N = {count} vs {weyl}"),
                )
            },
        },
        // ---------------- engine ----------------
        Check {
            id: "EN01",
            name: "transform of the scalar circle expansion",
            suite: Suite::Engine,
            tolerance: 1e-12,
            run: || {
                let (phi1, _) = circle_phi_pair();
                let v = phi_transform(&phi1).at_zero();
                let r = worst(&[
                    (v.residue, 1.0 / 12.0),
                    (
                        v.finite_part,
                        (5.0 - EULER_GAMMA) / 12.0 - 2.0f64.ln() / 6.0,
                    ),
                ]);
                (
                    r,
                    format!("residue {}, finite part {}", v.residue, v.finite_part),
                )
            },
        },
        Check {
            id: "EN02",
            name: "transform of the derivative-side circle expansion",
            suite: Suite::Engine,
            tolerance: 1e-12,
            run: || {
                let (_, hat) = circle_phi_pair();
                let v = phi_transform(&hat).at_zero();
                let r = worst(&[
                    (v.residue, 1.0 / 12.0),
                    (
                        v.finite_part,
                        -(7.0 + EULER_GAMMA) / 12.0 - 2.0f64.ln() / 6.0,
                    ),
                ]);
                (
                    r,
                    format!("residue {}, finite part {}", v.residue, v.finite_part),
                )
            },
        },
        Check {
            id: "EN03",
            name: "sphere expansion difference transforms to Gamma(s+1)/2",
            suite: Suite::Engine,
            tolerance: 1e-12,
            run: || {
                let (p, m) = sphere_phi2_pair();
                let d = phi_transform(&p.difference(&m)).at_zero();
                let r = worst(&[(d.residue, 0.0), (d.finite_part, 0.5)]);
                (
                    r,
                    format!("residue {}, finite part {}", d.residue, d.finite_part),
                )
            },
        },
        Check {
            id: "EN04",
            name: "built-in expansions vanish at lambda = 0",
            suite: Suite::Engine,
            tolerance: 1e-14,
            run: || {
                let (a, b) = circle_phi_pair();
                let (c, d) = sphere_phi2_pair();
                let r = [a, b, c, d]
                    .iter()
                    .map(|p| p.eval(0.0).abs())
                    .fold(0.0, f64::max);
                (r, "P(0) = 0 for all four expansions".into())
            },
        },
        Check {
            id: "EN05",
            name: "simple Bessel zeta value at s = 0",
            suite: Suite::Engine,
            tolerance: 0.0,
            run: || {
                let mut r: f64 = 0.0;
                for &(nu, q, l) in &[
                    (0.0, 0.0, 1.0),
                    (1.0, 0.0, 1.0),
                    (0.5, 2.0, 1.5),
                    (1.5, 0.3, 2.0),
                ] {
                    let z = simple_bessel_zeta(nu, q, l).unwrap();
                    r = r.max((z.at0 - (-0.5 * (nu + 0.5))).abs());
                }
                (r, "z(0) = -(nu + 1/2)/2 exactly".into())
            },
        },
        Check {
            id: "EN06",
            name: "simple Bessel zeta derivative closed forms",
            suite: Suite::Engine,
            tolerance: 1e-13,
            run: || {
                let z0 = simple_bessel_zeta(0.0, 0.0, 1.0).unwrap().deriv_at0;
                let z1 = simple_bessel_zeta(1.0, 0.0, 1.0).unwrap().deriv_at0;
                let r = worst(&[
                    (z0, -0.5 * (2.0 * PI).ln()),
                    (z1, -(PI.sqrt() / 2.0f64.sqrt()).ln()),
                ]);
                (r, "q -> 0 limits at nu = 0, 1".into())
            },
        },
        Check {
            id: "EN07",
            name: "shifted sphere zeta at integer points",
            suite: Suite::Engine,
            tolerance: 1e-12,
            run: || {
                let r = worst(&[
                    (zeta_sp_sphere(2.0).unwrap(), 1.0),
                    (
                        zeta_sp_sphere(3.0).unwrap(),
                        0.40411380631918857079947632302289998153,
                    ),
                    (zeta_sp_sphere(0.0).unwrap(), -2.0 / 3.0),
                ]);
                (
                    r,
                    "s = 2 (telescoping), s = 3 (direct), s = 0 (continuation)".into(),
                )
            },
        },
        Check {
            id: "EN08",
            name: "Plana route agrees with binomial continuation at s = 1/2",
            suite: Suite::Engine,
            tolerance: 1e-6,
            run: || {
                let a = zeta_sp_sphere(0.5).unwrap();
                let b = zeta_sp_sphere_plana_half();
                ((a - b).abs(), format!("binomial {a} vs Plana {b}"))
            },
        },
        Check {
            id: "EN09",
            name: "F(0,1) equals -log(2 pi) with route agreement",
            suite: Suite::Engine,
            tolerance: 1e-8,
            run: || {
                let f = f_zero(1.0).unwrap();
                let r = (f.value + (2.0 * PI).ln()).abs();
                let routes = (f.series_route - f.oracle_route).abs();
                let r = if routes > 5e-7 { f64::INFINITY } else { r };
                (r, format!("value {}, route gap {routes:.2e}", f.value))
            },
        },
        Check {
            id: "EN10",
            name: "printed rearrangement of F(s,1) is off by half",
            suite: Suite::Engine,
            tolerance: 1e-8,
            run: || {
                // the printed series evaluates to zeta'(0) = -log(2 pi)/2; the
                // check passes when that discrepancy is detected exactly
                let printed = f_zero_printed_series_nu1();
                let direct = f_zero(1.0).unwrap().value;
                let discrepancy = direct - printed;
                let r = (discrepancy + 0.5 * (2.0 * PI).ln()).abs();
                (
                    r,
                    format!("printed {printed} vs continued {direct} (gap {discrepancy})"),
                )
            },
        },
        Check {
            id: "EN11",
            name: "F(0,nu) dual-route agreement on the order grid",
            suite: Suite::Engine,
            tolerance: 5e-7,
            run: || {
                let mut r: f64 = 0.0;
                for nu in [1.0, 1.5, 2.0, 5.0] {
                    let f = f_zero(nu).unwrap();
                    r = r.max((f.series_route - f.oracle_route).abs());
                }
                (r, "nu in {1, 1.5, 2, 5}".into())
            },
        },
        Check {
            id: "EN12",
            name: "canonical-product Gamma functions at the origin",
            suite: Suite::Engine,
            tolerance: 1e-6,
            run: || {
                let mut r: f64 = 0.0;
                for case in [
                    GammaSequenceCase::CircleS,
                    GammaSequenceCase::CircleSHat,
                    GammaSequenceCase::SphereSPlus,
                    GammaSequenceCase::SphereSMinus,
                ] {
                    r = r.max(log_gamma_sequence(case, 1, 1.5, -1e-9).unwrap().abs());
                }
                let spot = log_gamma_sequence(GammaSequenceCase::CircleS, 1, 1.0, -1.0).unwrap();
                let expect = -(bessel_i(1.0, 1.0, false).unwrap().ln()) - 2.0f64.ln();
                r = r.max((spot - expect).abs());
                (
                    r,
                    "lambda -> 0 limits and the closed-form spot value".into(),
                )
            },
        },
        // ---------------- torsion ----------------
        Check {
            id: "TO01",
            name: "disc D^2 torsion: closed form and pipeline",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                let closed = analytic_torsion_disc(2, 1.0, 1).unwrap().log_value;
                let pipe = pipeline_circle(PI / 2.0, 1.0).unwrap().log_value;
                let expect = 0.5 * PI.ln() + 0.5;
                let r = worst(&[(closed, expect), (pipe, expect)]);
                (r, format!("value {expect}"))
            },
        },
        Check {
            id: "TO02",
            name: "circle cone: pipeline matches the closed form on the angle grid",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                let mut r: f64 = 0.0;
                for alpha in [PI / 6.0, PI / 4.0, PI / 3.0] {
                    for l in [1.0, 3.0] {
                        let p = pipeline_circle(alpha, l).unwrap().log_value;
                        let c = analytic_torsion_cone_circle(alpha, l, BoundaryCondition::Absolute)
                            .unwrap()
                            .log_value;
                        let rel =
                            analytic_torsion_cone_circle(alpha, l, BoundaryCondition::Relative)
                                .unwrap()
                                .log_value;
                        r = r.max((p - c).abs()).max((c + rel).abs());
                    }
                }
                (r, "3 angles x 2 lengths, abs + rel = 0".into())
            },
        },
        Check {
            id: "TO03",
            name: "disc D^3 torsion through the sphere pipeline",
            suite: Suite::Torsion,
            tolerance: 1e-7,
            run: || {
                let p = pipeline_sphere(PI / 2.0, 1.0).unwrap().log_value;
                let expect = 0.5 * (4.0 * PI / 3.0).ln() + 0.5 * 2.0f64.ln() + 0.25;
                ((p - expect).abs(), format!("pipeline {p} vs {expect}"))
            },
        },
        Check {
            id: "TO04",
            name: "sphere cone: pipeline matches the closed form on the angle grid",
            suite: Suite::Torsion,
            tolerance: 1e-7,
            run: || {
                let mut r: f64 = 0.0;
                for (alpha, l) in [(PI / 2.0, 1.0), (PI / 4.0, 1.0), (PI / 3.0, 2.0)] {
                    let p = pipeline_sphere(alpha, l).unwrap().log_value;
                    let c = analytic_torsion_cone_sphere(alpha, l, BoundaryCondition::Absolute)
                        .unwrap()
                        .log_value;
                    r = r.max((p - c).abs());
                }
                (r, "3 grid points".into())
            },
        },
        Check {
            id: "TO05",
            name: "metric-homotopy anomaly closes the torsion ratio",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                let mut r: f64 = 0.0;
                for geom in [
                    ConeGeometry::disc(2, 1.0, 1).unwrap(),
                    ConeGeometry::disc(3, 1.0, 1).unwrap(),
                    ConeGeometry::new(1, PI / 6.0, 1.0, 1).unwrap(),
                    ConeGeometry::new(1, PI / 4.0, 1.0, 1).unwrap(),
                    ConeGeometry::new(1, PI / 3.0, 1.0, 1).unwrap(),
                ] {
                    let rep = consistency_report(&geom, BoundaryCondition::Absolute).unwrap();
                    r = r.max(rep.residual_bm.abs());
                }
                (r, "D^2, D^3 and three circle-cone angles".into())
            },
        },
        Check {
            id: "TO06",
            name: "connection-homotopy anomaly misses 1/4 on D^3",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                let geom = ConeGeometry::disc(3, 1.0, 1).unwrap();
                let rep = consistency_report(&geom, BoundaryCondition::Absolute).unwrap();
                (
                    (rep.residual_df - 0.25).abs(),
                    format!("residual {}", rep.residual_df),
                )
            },
        },
        Check {
            id: "TO07",
            name: "both anomaly formulas agree on D^2",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                let bm = anomaly_bm(2, PI / 2.0, 1).unwrap();
                let df = anomaly_df(2, PI / 2.0, 1).unwrap();
                ((bm - df).abs(), format!("bm {bm} vs df {df}"))
            },
        },
        Check {
            id: "TO08",
            name: "boundary-integral normalisation chain is exact",
            suite: Suite::Torsion,
            tolerance: 0.0,
            run: || {
                let mut violations = 0u32;
                for p in 1..=10 {
                    let c = anomaly_normalization_identity(p).unwrap();
                    if !c.chain_equals_p || !c.factorial_identity_holds {
                        violations += 1;
                    }
                }
                (
                    violations as f64,
                    "p = 1..10, exact integer arithmetic".into(),
                )
            },
        },
        Check {
            id: "TO09",
            name: "CW torsion equals the volume closed form",
            suite: Suite::Torsion,
            tolerance: 1e-12,
            run: || {
                let mut r: f64 = 0.0;
                for n in [0u32, 1, 2, 3] {
                    for bc in [BoundaryCondition::Absolute, BoundaryCondition::Relative] {
                        let geom = ConeGeometry::new(n, PI / 3.0, 1.4, 1).unwrap();
                        let v = volume(&geom);
                        let (c, h) = cone_cw_complex(n, bc, v);
                        let log_tau = reidemeister_torsion_log(&c, &h).unwrap();
                        r = r.max((log_tau - rs_torsion_closed(&geom, bc)).abs());
                    }
                }
                (r, "n = 0..3, both boundary conditions".into())
            },
        },
        Check {
            id: "TO10",
            name: "torsion invariant under 100 random lift choices",
            suite: Suite::Torsion,
            tolerance: 1e-10,
            run: || {
                // staircase complex 0 -> R^2 -> R^3 -> R^2 -> 0 with one
                // homology class in degree 0
                let mut d2 = Matrix::zeros(3, 2);
                d2[(0, 0)] = 1.0;
                d2[(1, 1)] = 1.0;
                d2[(2, 0)] = 1.0;
                d2[(2, 1)] = 1.0;
                let mut d1 = Matrix::zeros(2, 3);
                d1[(0, 0)] = 1.0;
                d1[(0, 1)] = 1.0;
                d1[(0, 2)] = -1.0;
                d1[(1, 0)] = 2.0;
                d1[(1, 1)] = 2.0;
                d1[(1, 2)] = -2.0;
                let complex = FiniteChainComplex {
                    lengths: vec![2, 3, 2],
                    boundaries: vec![Matrix::zeros(0, 2), d1, d2],
                };
                let h = GradedHomologyBasis {
                    classes: vec![vec![vec![1.0, 0.0]], Vec::new(), Vec::new()],
                };
                let reference = reidemeister_torsion_log(&complex, &h).unwrap();
                // xorshift64 keeps the check dependency-free and deterministic
                let mut state = 0x9e3779b97f4a7c15u64;
                let mut next = move || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
                };
                let mut r: f64 = 0.0;
                let mut trials = 0;
                while trials < 100 {
                    let b1 = vec![vec![next(), next(), next()]];
                    let m00 = next();
                    let m01 = next();
                    let m10 = next();
                    let m11 = next();
                    if (m00 * m11 - m01 * m10).abs() < 0.05 {
                        continue; // nearly singular mixing, redraw
                    }
                    let b2 = vec![vec![m00, m10], vec![m01, m11]];
                    let lifts = vec![Vec::new(), b1.clone(), b2];
                    match reidemeister_torsion_log_with_lifts(&complex, &h, &lifts) {
                        Ok(v) => {
                            r = r.max((v - reference).abs());
                            trials += 1;
                        }
                        Err(_) => continue, // b1 happened to lie in the kernel
                    }
                }
                (r, format!("worst deviation over 100 trials vs {reference}"))
            },
        },
        Check {
            id: "TO11",
            name: "boundary-condition symmetry and rank linearity",
            suite: Suite::Torsion,
            tolerance: 1e-12,
            run: || {
                let a = analytic_torsion_cone_circle(PI / 3.0, 2.0, BoundaryCondition::Absolute)
                    .unwrap()
                    .log_value;
                let rel = analytic_torsion_cone_circle(PI / 3.0, 2.0, BoundaryCondition::Relative)
                    .unwrap()
                    .log_value;
                let s_abs =
                    analytic_torsion_cone_sphere(PI / 3.0, 1.0, BoundaryCondition::Absolute)
                        .unwrap()
                        .log_value;
                let s_rel =
                    analytic_torsion_cone_sphere(PI / 3.0, 1.0, BoundaryCondition::Relative)
                        .unwrap()
                        .log_value;
                let d1 = analytic_torsion_disc(4, 1.5, 1).unwrap().log_value;
                let d3 = analytic_torsion_disc(4, 1.5, 3).unwrap().log_value;
                let r = worst(&[(a + rel, 0.0), (s_abs - s_rel, 0.0), (d3 - 3.0 * d1, 0.0)]);
                (r, "circle sign flip, sphere equality, rank scaling".into())
            },
        },
    ]
}

/// Run a suite (or all). Checks run concurrently; the report order is fixed
/// by check id regardless of completion order.
pub fn run_suite(suite: Option<Suite>, overrides: &BTreeMap<String, f64>) -> Vec<CheckResult> {
    let checks: Vec<Check> = registry()
        .into_iter()
        .filter(|c| suite.map(|s| s == c.suite).unwrap_or(true))
        .collect();
    let mut results: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| {
                let tol = overrides.get(c.id).copied().unwrap_or(c.tolerance);
                let run = c.run;
                let (id, name, suite) = (c.id, c.name, c.suite);
                scope.spawn(move || {
                    let (residual, detail) = run();
                    CheckResult {
                        id,
                        name,
                        suite,
                        residual,
                        tolerance: tol,
                        pass: residual <= tol,
                        detail,
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    results.sort_by(|a, b| a.id.cmp(b.id));
    results
}
