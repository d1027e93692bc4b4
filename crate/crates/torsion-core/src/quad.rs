//! Adaptive Gauss–Kronrod (G7–K15) quadrature on finite intervals.

use crate::mathx as m;
use alloc::vec::Vec;

// QUADPACK 15-point Kronrod nodes/weights and embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        kron += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let value = kron * h;
    let err = m::abs((kron - gauss) * h);
    (value, err)
}

/// Adaptive bisection until every panel satisfies
/// `err <= max(abs_tol, rel_tol * |total|) * width/(b-a)`.
pub fn adaptive_gk<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> QuadResult {
    let mut stack: Vec<(f64, f64, f64, f64)> = Vec::new();
    let (v, e) = gk15(f, a, b);
    stack.push((a, b, v, e));
    let mut value = v;
    let mut error = e;
    let mut depth_guard = 0usize;
    while error > abs_tol.max(rel_tol * m::abs(value)) && depth_guard < 2000 {
        depth_guard += 1;
        // split the panel with the largest error
        let (idx, _) = stack
            .iter()
            .enumerate()
            .max_by(|x, y| {
                x.1 .3
                    .partial_cmp(&y.1 .3)
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .expect("non-empty");
        let (pa, pb, pv, pe) = stack.swap_remove(idx);
        if pb - pa < 1e-15 * (m::abs(pa) + 1.0) {
            // cannot refine further
            stack.push((pa, pb, pv, pe));
            break;
        }
        let mid = 0.5 * (pa + pb);
        let (v1, e1) = gk15(f, pa, mid);
        let (v2, e2) = gk15(f, mid, pb);
        stack.push((pa, mid, v1, e1));
        stack.push((mid, pb, v2, e2));
        value = value - pv + v1 + v2;
        error = error - pe + e1 + e2;
    }
    // recompute sums to avoid drift
    let mut sv = m::KahanSum::new();
    let mut se = 0.0;
    for &(_, _, pv, pe) in &stack {
        sv.add(pv);
        se += pe;
    }
    QuadResult {
        value: sv.value(),
        abs_error: se,
    }
}
