//! Ground-state phase structure in the field h and the derived concurrence
//! landscape: level-crossing segments, dip location/magnitude, boot and
//! peak heights, the sudden change at |k| = |J|, and grid sweeps.
//!
//! Every energy is affine in h with slope -3, -1, +1 or +3, so the ground
//! line is a lower envelope of eight straight lines; all crossing fields are
//! exact pairwise intersections.

use crate::error::{Error, Result};
use crate::linalg::wootters_concurrence;
use crate::model::{analytic_spectrum, ModelParams, Pair};
use crate::thermal::{degenerate_ground_mixture, thermal_concurrence, zero_t_concurrence};

/// Inclusive linear grid: `steps` points from `lo` to `hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self> {
        let g = GridSpec { lo, hi, steps };
        g.validate("grid", false)?;
        Ok(g)
    }

    pub fn validate(&self, name: &str, require_positive_lo: bool) -> Result<()> {
        if self.lo.is_nan() || self.hi.is_nan() || self.lo >= self.hi
            || !self.lo.is_finite() || !self.hi.is_finite()
        {
            return Err(Error::InvalidGrid(format!(
                "{name}: need lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidGrid(format!(
                "{name}: need at least 2 steps, got {}",
                self.steps
            )));
        }
        if require_positive_lo && self.lo <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "{name}: lower bound must be positive, got {}",
                self.lo
            )));
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.steps - 1) as f64
    }

    /// Grid points; the last one is exactly `hi`.
    pub fn points(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.hi
                } else {
                    self.lo + self.step() * i as f64
                }
            })
            .collect()
    }
}

/// Maximal interval of h on which a fixed set of levels is the ground state.
#[derive(Clone, Debug)]
pub struct PhaseSegment {
    pub h_lo: f64,
    pub h_hi: f64,
    /// Ground level(s) on the open interval; more than one only where two
    /// energy lines coincide identically (|k| = |J|).
    pub ground_levels: Vec<usize>,
    /// Zero-temperature pair-13 concurrence on the open interval.
    pub pair_c13: f64,
}

/// slope and intercept of each level's energy as a function of h,
/// in level order 1..8
fn energy_lines(j: f64, k: f64) -> [(f64, f64); 8] {
    let a = ModelParams::new(j, 0.0, k).splitting();
    [
        (-3.0, 0.0),
        (3.0, 0.0),
        (1.0, -2.0 * k),
        (-1.0, 2.0 * k),
        (-1.0, -k - a),
        (1.0, k - a),
        (-1.0, -k + a),
        (1.0, k + a),
    ]
}

/// Lower envelope of the eight energy lines over `[h_lo, h_hi]`, assembled
/// from exact pairwise intersections; boundaries merge within 1e-12.
pub fn ground_segments(j: f64, k: f64, h_lo: f64, h_hi: f64) -> Result<Vec<PhaseSegment>> {
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    if h_lo.is_nan() || h_hi.is_nan() || h_lo >= h_hi {
        return Err(Error::InvalidGrid(format!(
            "phase range: need h_lo < h_hi, got [{h_lo}, {h_hi}]"
        )));
    }
    let lines = energy_lines(j, k);
    let mut cuts = vec![h_lo, h_hi];
    for i in 0..8 {
        for l in (i + 1)..8 {
            let (mi, bi) = lines[i];
            let (ml, bl) = lines[l];
            if mi == ml {
                continue;
            }
            let x = (bl - bi) / (mi - ml);
            if x > h_lo && x < h_hi {
                cuts.push(x);
            }
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);

    let ground_set_at = |h: f64| -> Vec<usize> {
        let energies: Vec<f64> = lines.iter().map(|(m, b)| m * h + b).collect();
        let min = energies.iter().copied().fold(f64::INFINITY, f64::min);
        let max = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let tol = 1e-9 * (max - min).max(f64::MIN_POSITIVE);
        (0..8)
            .filter(|&i| energies[i] - min <= tol)
            .map(|i| i + 1)
            .collect()
    };

    let mut segments: Vec<PhaseSegment> = Vec::new();
    for win in cuts.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        let levels = ground_set_at(0.5 * (lo + hi));
        match segments.last_mut() {
            Some(prev) if prev.ground_levels == levels => prev.h_hi = hi,
            _ => {
                let c13 = if levels.len() == 1 {
                    let p = ModelParams::new(j, 0.5 * (lo + hi), k);
                    analytic_spectrum(&p)?.level(levels[0])?.c13
                } else {
                    let p = ModelParams::new(j, 0.5 * (lo + hi), k);
                    let mix = degenerate_ground_mixture(&p, &levels, Pair::OneThree)?;
                    wootters_concurrence(&mix)?
                };
                segments.push(PhaseSegment {
                    h_lo: lo,
                    h_hi: hi,
                    ground_levels: levels,
                    pair_c13: c13,
                });
            }
        }
    }
    Ok(segments)
}

/// Location and magnitude of the concurrence dip at the ground-state level
/// crossing, with the set of levels that meet there.
#[derive(Clone, Debug)]
pub struct DipResult {
    pub k: f64,
    pub h_dip: f64,
    pub c_dip: f64,
    pub crossing_levels: Vec<usize>,
}

/// Mirror map of level indices under (h, k) -> (-h, -k): the spin flip
/// exchanges 1<->2, 3<->4, 5<->6, 7<->8.
fn mirror_levels(levels: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = levels
        .iter()
        .map(|&i| if i % 2 == 1 { i + 1 } else { i - 1 })
        .collect();
    out.sort_unstable();
    out
}

/// Dip of the pair-13 concurrence as a function of k.
///
/// In units of |J| (kappa = |k|/|J|):
/// * kappa < 1: the dip sits at the crossing of levels 5 and 6, h = -k,
///   with magnitude 1/2 - sqrt(2) |J| / a;
/// * kappa = 1: four levels {2,3,5,6} meet and the dip value is exactly 0
///   at h = -|J| sign(k);
/// * kappa > 1: levels 3 and 5 cross at h = (k - a)/2 with magnitude
///   (1/4)(1 - |k|/a).
///
/// Negative k mirrors the location (h_dip -> -h_dip) with the same
/// magnitude and the mirror-mapped crossing set.
pub fn dip(k: f64, j: f64) -> Result<DipResult> {
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let jm = j.abs();
    let ka = k.abs();
    let a = ModelParams::new(j, 0.0, k).splitting();

    let (h_pos, c_dip, levels_pos): (f64, f64, Vec<usize>) = if ka < jm {
        // 0.0 - ka rather than -ka keeps the k = 0 location at +0.0
        (0.0 - ka, 0.5 - 2.0_f64.sqrt() * jm / a, vec![5, 6])
    } else if ka == jm {
        (-jm, 0.0, vec![2, 3, 5, 6])
    } else {
        (0.5 * (ka - a), 0.25 * (1.0 - ka / a), vec![3, 5])
    };

    let (h_dip, crossing_levels) = if k >= 0.0 {
        (h_pos, levels_pos)
    } else {
        (-h_pos, mirror_levels(&levels_pos))
    };
    Ok(DipResult {
        k,
        h_dip,
        c_dip,
        crossing_levels,
    })
}

/// Heights of the low-temperature concurrence plateaus on either side of
/// the dip: `c_plus` at positive h, `c_minus` at negative h.
#[derive(Clone, Debug)]
pub struct BootHeights {
    pub k: f64,
    pub pair: Pair,
    pub c_plus: f64,
    pub c_minus: f64,
}

/// Plateau heights as functions of k.
///
/// Pair 13, k >= 0: the positive-h boot is the level-5 plateau
/// 4J^2/(a(a-k)); the negative side is the level-6 plateau 4J^2/(a(a+k))
/// for k < |J|, vanishes at k = |J|, and becomes the level-3 peak of height
/// exactly 1 beyond. Nearest-neighbor pairs plateau at 2|J|/a on both sides
/// for k < |J| and lose the negative boot for k >= |J|. Negative k mirrors
/// the two sides.
pub fn boot_heights(k: f64, j: f64, pair: Pair) -> Result<BootHeights> {
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let jm = j.abs();
    let ka = k.abs();
    let a = ModelParams::new(j, 0.0, k).splitting();

    let (plus, minus) = match pair {
        Pair::OneThree => {
            let c5 = 4.0 * j * j / (a * (a - ka));
            let lower = if ka < jm {
                4.0 * j * j / (a * (a + ka))
            } else if ka == jm {
                0.0
            } else {
                1.0
            };
            (c5, lower)
        }
        _ => {
            let cnn = 2.0 * jm / a;
            (cnn, if ka < jm { cnn } else { 0.0 })
        }
    };

    let (c_plus, c_minus) = if k >= 0.0 { (plus, minus) } else { (minus, plus) };
    Ok(BootHeights {
        k,
        pair,
        c_plus,
        c_minus,
    })
}

/// Dip magnitudes just below, at, and just above |k| = |J|.
#[derive(Clone, Copy, Debug)]
pub struct MutationScan {
    pub c_dip_below: f64,
    pub c_dip_at: f64,
    pub c_dip_above: f64,
}

/// Evaluates the dip at k = |J|(1 - eps), |J|, |J|(1 + eps). As eps -> 0
/// the three magnitudes approach 1/2 - sqrt(2)/3, 0 and 1/6.
pub fn mutation_scan(j: f64, eps: f64) -> Result<MutationScan> {
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    if eps.is_nan() || eps <= 0.0 || eps > 1e-3 {
        return Err(Error::InvalidArgument(format!(
            "mutation eps must lie in (0, 1e-3], got {eps}"
        )));
    }
    let jm = j.abs();
    Ok(MutationScan {
        c_dip_below: dip(jm * (1.0 - eps), j)?.c_dip,
        c_dip_at: dip(jm, j)?.c_dip,
        c_dip_above: dip(jm * (1.0 + eps), j)?.c_dip,
    })
}

/// One row of a field/temperature sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepRow {
    pub h: f64,
    pub t: f64,
    pub c: f64,
}

/// Concurrence over an (h, T) grid at fixed (j, k): h outer ascending,
/// T inner ascending, each point from `thermal_concurrence`.
pub fn sweep(
    j: f64,
    k: f64,
    pair: Pair,
    h_grid: &GridSpec,
    t_grid: &GridSpec,
) -> Result<Vec<SweepRow>> {
    h_grid.validate("h grid", false)?;
    t_grid.validate("T grid", true)?;
    let mut rows = Vec::with_capacity(h_grid.steps * t_grid.steps);
    for h in h_grid.points() {
        let p = ModelParams::new(j, h, k);
        for t in t_grid.points() {
            let point = thermal_concurrence(&p, t, pair)?;
            rows.push(SweepRow {
                h,
                t,
                c: point.concurrence,
            });
        }
    }
    Ok(rows)
}

/// One row of the dip/boot tabulation across k.
#[derive(Clone, Copy, Debug)]
pub struct DipCurveRow {
    pub k: f64,
    pub h_dip: f64,
    pub c_dip: f64,
    pub c_plus: f64,
    pub c_minus: f64,
}

/// Tabulates dip location/magnitude and boot heights across k. The dip
/// location and crossing set are pair-independent; for nearest-neighbor
/// pairs the magnitude is recomputed from the degenerate mixture of the
/// crossing levels.
pub fn dip_curve(k_grid: &GridSpec, j: f64, pair: Pair) -> Result<Vec<DipCurveRow>> {
    k_grid.validate("k grid", false)?;
    let mut rows = Vec::with_capacity(k_grid.steps);
    for k in k_grid.points() {
        let d = dip(k, j)?;
        let c_dip = if pair == Pair::OneThree {
            d.c_dip
        } else {
            let p = ModelParams::new(j, d.h_dip, k);
            let mix = degenerate_ground_mixture(&p, &d.crossing_levels, pair)?;
            wootters_concurrence(&mix)?
        };
        let boots = boot_heights(k, j, pair)?;
        rows.push(DipCurveRow {
            k,
            h_dip: d.h_dip,
            c_dip,
            c_plus: boots.c_plus,
            c_minus: boots.c_minus,
        });
    }
    Ok(rows)
}

/// Scans a low-temperature concurrence slice and returns (argmin h, min C).
/// The scan range must stay inside the two ground segments adjacent to the
/// dip, otherwise the outer product-state regions win the minimum.
pub fn scan_minimum(
    j: f64,
    k: f64,
    pair: Pair,
    temperature: f64,
    h_grid: &GridSpec,
) -> Result<(f64, f64)> {
    h_grid.validate("scan grid", false)?;
    let mut best = (f64::NAN, f64::INFINITY);
    for h in h_grid.points() {
        let p = ModelParams::new(j, h, k);
        let c = thermal_concurrence(&p, temperature, pair)?.concurrence;
        if c < best.1 {
            best = (h, c);
        }
    }
    Ok(best)
}

/// Zero-temperature concurrence at fixed field, for plateau checks.
pub fn zero_t_at(j: f64, h: f64, k: f64, pair: Pair) -> Result<f64> {
    zero_t_concurrence(&ModelParams::new(j, h, k), pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 2).is_ok());
        assert!(GridSpec::new(1.0, 0.0, 5).is_err());
        assert!(GridSpec::new(0.0, 1.0, 1).is_err());
        let g = GridSpec::new(-1.0, 1.0, 5).unwrap();
        assert_eq!(g.points(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(*g.points().last().unwrap(), 1.0);
    }

    #[test]
    fn segments_at_k0() {
        // phi2 | phi6 | phi5 | phi1 with crossings at -sqrt2, 0, sqrt2
        let segs = ground_segments(1.0, 0.0, -4.0, 4.0).unwrap();
        assert_eq!(segs.len(), 4);
        let levels: Vec<_> = segs.iter().map(|s| s.ground_levels.clone()).collect();
        assert_eq!(levels, vec![vec![2], vec![6], vec![5], vec![1]]);
        let r2 = 2.0_f64.sqrt();
        assert_abs_diff_eq!(segs[0].h_hi, -r2, epsilon = 1e-12);
        assert_abs_diff_eq!(segs[1].h_hi, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(segs[2].h_hi, r2, epsilon = 1e-12);
        // plateau concurrences: 0, 0.5, 0.5, 0
        assert_eq!(segs[0].pair_c13, 0.0);
        assert_abs_diff_eq!(segs[1].pair_c13, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(segs[2].pair_c13, 0.5, epsilon = 1e-12);
        assert_eq!(segs[3].pair_c13, 0.0);
    }

    #[test]
    fn segments_at_k15() {
        // phi3 replaces phi6: phi2 | phi3 | phi5 | phi1, phi2/phi3 at -1.5
        let segs = ground_segments(1.0, 1.5, -4.0, 4.0).unwrap();
        let levels: Vec<_> = segs.iter().map(|s| s.ground_levels.clone()).collect();
        assert_eq!(levels, vec![vec![2], vec![3], vec![5], vec![1]]);
        assert_abs_diff_eq!(segs[0].h_hi, -1.5, epsilon = 1e-12);
        let a = ModelParams::new(1.0, 0.0, 1.5).splitting();
        assert_abs_diff_eq!(segs[1].h_hi, 0.5 * (1.5 - a), epsilon = 1e-12);
        assert_eq!(segs[1].pair_c13, 1.0); // the peak plateau
    }

    #[test]
    fn segments_at_k1_fourfold_point() {
        // at k = 1 the middle segment collapses: phi2 | phi5 | phi1 with a
        // four-fold degeneracy {2,3,5,6} exactly at the shared boundary
        let segs = ground_segments(1.0, 1.0, -4.0, 4.0).unwrap();
        let levels: Vec<_> = segs.iter().map(|s| s.ground_levels.clone()).collect();
        assert_eq!(levels, vec![vec![2], vec![5], vec![1]]);
        assert_abs_diff_eq!(segs[0].h_hi, -1.0, epsilon = 1e-12);
        let s = analytic_spectrum(&ModelParams::new(1.0, -1.0, 1.0)).unwrap();
        assert_eq!(s.ground_levels(), vec![2, 3, 5, 6]);
    }

    #[test]
    fn segments_match_grid_argmin() {
        let mut rng = StdRng::seed_from_u64(61);
        for _ in 0..200 {
            let j = {
                let x: f64 = rng.gen_range(-2.0..2.0);
                if x.abs() < 1e-2 {
                    1.0
                } else {
                    x
                }
            };
            let k = rng.gen_range(-3.0..3.0);
            let segs = ground_segments(j, k, -5.0, 5.0).unwrap();
            // adjacent segments share exactly one boundary
            for pair in segs.windows(2) {
                assert_eq!(pair[0].h_hi, pair[1].h_lo);
            }
            for i in 0..1000 {
                let h = -5.0 + 10.0 * (i as f64 + 0.5) / 1000.0;
                // skip points within 1e-6 of a boundary
                if segs
                    .iter()
                    .any(|s| (h - s.h_lo).abs() < 1e-6 || (h - s.h_hi).abs() < 1e-6)
                {
                    continue;
                }
                let seg = segs
                    .iter()
                    .find(|s| h >= s.h_lo && h <= s.h_hi)
                    .expect("segments must cover the range");
                let s = analytic_spectrum(&ModelParams::new(j, h, k)).unwrap();
                let ground = s.ground_levels();
                assert_eq!(
                    ground, seg.ground_levels,
                    "argmin mismatch at j={j} k={k} h={h}"
                );
            }
        }
    }

    #[test]
    fn segment_interior_levels_strictly_lowest() {
        // sample three interior points per segment
        let segs = ground_segments(1.0, 0.7, -3.0, 3.0).unwrap();
        for seg in &segs {
            for frac in [0.25, 0.5, 0.75] {
                let h = seg.h_lo + (seg.h_hi - seg.h_lo) * frac;
                let s = analytic_spectrum(&ModelParams::new(1.0, h, 0.7)).unwrap();
                assert_eq!(s.ground_levels(), seg.ground_levels);
            }
        }
    }

    #[test]
    fn dip_branches() {
        // k = 0.5: (-0.5, 1/2 - sqrt2/sqrt(8.25), {5,6})
        let d = dip(0.5, 1.0).unwrap();
        assert_eq!(d.h_dip, -0.5);
        assert_abs_diff_eq!(
            d.c_dip,
            0.5 - 2.0_f64.sqrt() / 8.25_f64.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(d.c_dip, 0.007634, epsilon = 1e-6);
        assert_eq!(d.crossing_levels, vec![5, 6]);

        // k = 1: (-1, 0, {2,3,5,6})
        let d = dip(1.0, 1.0).unwrap();
        assert_eq!((d.h_dip, d.c_dip), (-1.0, 0.0));
        assert_eq!(d.crossing_levels, vec![2, 3, 5, 6]);

        // k = 2: (1 - sqrt3, (1/4)(1 - 2/sqrt12), {3,5})
        let d = dip(2.0, 1.0).unwrap();
        assert_abs_diff_eq!(d.h_dip, 1.0 - 3.0_f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(d.h_dip, -0.732051, epsilon = 1e-6);
        assert_abs_diff_eq!(d.c_dip, 0.105662, epsilon = 1e-6);
        assert_eq!(d.crossing_levels, vec![3, 5]);

        // k = 10 approaches zero from below
        let d = dip(10.0, 1.0).unwrap();
        assert_abs_diff_eq!(d.h_dip, -0.19615242270663202, epsilon = 1e-12);
    }

    #[test]
    fn dip_mirror_and_scaling() {
        for k in [0.0, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0] {
            let d = dip(k, 1.0).unwrap();
            let m = dip(-k, 1.0).unwrap();
            assert_eq!(m.h_dip, -d.h_dip);
            assert_eq!(m.c_dip, d.c_dip);
            assert_eq!(m.crossing_levels, mirror_levels(&d.crossing_levels));
            // J-sign invariance
            let n = dip(k, -1.0).unwrap();
            assert_eq!(n.h_dip, d.h_dip);
            assert_eq!(n.c_dip, d.c_dip);
        }
        // the general-J location law: h_dip = -k below the mutation,
        // (k - sqrt(k^2 + 8 J^2))/2 above it
        let d = dip(1.0, 2.0).unwrap();
        assert_eq!(d.h_dip, -1.0);
        assert_eq!(d.crossing_levels, vec![5, 6]);
        let d = dip(3.0, 2.0).unwrap();
        assert_abs_diff_eq!(
            d.h_dip,
            0.5 * (3.0 - (9.0_f64 + 32.0).sqrt()),
            epsilon = 1e-15
        );
    }

    #[test]
    fn dip_value_matches_degenerate_mixture() {
        for k in [0.0, 0.25, 0.5, 0.75, 0.99, 1.0, 1.01, 1.5, 2.0, 3.0, -0.5, -2.0] {
            let d = dip(k, 1.0).unwrap();
            let p = ModelParams::new(1.0, d.h_dip, k);
            let mix = degenerate_ground_mixture(&p, &d.crossing_levels, Pair::OneThree).unwrap();
            let c = wootters_concurrence(&mix).unwrap();
            assert!(
                (c - d.c_dip).abs() <= 1e-10,
                "k={k}: mixture {c} vs closed form {}",
                d.c_dip
            );
            // the crossing set really is degenerate at h_dip
            let s = analytic_spectrum(&p).unwrap();
            assert_eq!(s.ground_levels(), d.crossing_levels);
        }
    }

    #[test]
    fn boot_heights_examples() {
        let b = boot_heights(0.0, 1.0, Pair::OneThree).unwrap();
        assert_abs_diff_eq!(b.c_plus, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(b.c_minus, 0.5, epsilon = 1e-12);

        let b = boot_heights(1.5, 1.0, Pair::OneThree).unwrap();
        assert_abs_diff_eq!(b.c_plus, 0.73427, epsilon = 1e-5);
        assert_eq!(b.c_minus, 1.0);

        let b = boot_heights(1.5, 1.0, Pair::OneTwo).unwrap();
        assert_abs_diff_eq!(b.c_plus, 0.62470, epsilon = 1e-5);
        assert_eq!(b.c_minus, 0.0);

        // the negative boot disappears exactly at k = |J|
        let b = boot_heights(1.0, 1.0, Pair::OneThree).unwrap();
        assert_eq!(b.c_minus, 0.0);
        assert_abs_diff_eq!(b.c_plus, 2.0 / 3.0, epsilon = 1e-12);

        // negative k swaps the sides
        let b = boot_heights(-1.5, 1.0, Pair::OneThree).unwrap();
        assert_eq!(b.c_plus, 1.0);
        assert_abs_diff_eq!(b.c_minus, 0.73427, epsilon = 1e-5);
    }

    #[test]
    fn boot_heights_match_zero_t_plateaus() {
        // sample a field inside each plateau and compare with zero-T values
        for k in [0.0, 0.4, 0.8, 1.2, 1.8] {
            let b = boot_heights(k, 1.0, Pair::OneThree).unwrap();
            let d = dip(k, 1.0).unwrap();
            let segs = ground_segments(1.0, k, -6.0, 6.0).unwrap();
            // plateau just right of the dip
            let right = segs
                .iter()
                .find(|s| s.h_lo <= d.h_dip + 1e-9 && d.h_dip < s.h_hi - 1e-6)
                .unwrap();
            let h_right = 0.5 * (d.h_dip + right.h_hi);
            assert!(
                (zero_t_at(1.0, h_right, k, Pair::OneThree).unwrap() - b.c_plus).abs() <= 1e-10
            );
            // plateau just left of the dip (absent at k = 1 where the
            // segment collapses)
            if k != 1.0 {
                let left = segs
                    .iter()
                    .find(|s| s.h_hi >= d.h_dip - 1e-9 && d.h_dip > s.h_lo + 1e-6)
                    .unwrap();
                let h_left = 0.5 * (left.h_lo + d.h_dip);
                assert!(
                    (zero_t_at(1.0, h_left, k, Pair::OneThree).unwrap() - b.c_minus).abs()
                        <= 1e-10,
                    "k={k}"
                );
            }
        }
    }

    #[test]
    fn mutation_triple() {
        let m = mutation_scan(1.0, 1e-6).unwrap();
        assert_abs_diff_eq!(m.c_dip_below, 0.5 - 2.0_f64.sqrt() / 3.0, epsilon = 1e-6);
        assert_abs_diff_eq!(m.c_dip_below, 0.028595, epsilon = 1e-6);
        assert_eq!(m.c_dip_at, 0.0);
        assert_abs_diff_eq!(m.c_dip_above, 1.0 / 6.0, epsilon = 1e-6);

        // J-sign invariance
        let n = mutation_scan(-1.0, 1e-6).unwrap();
        assert_eq!(n.c_dip_below, m.c_dip_below);
        assert_eq!(n.c_dip_above, m.c_dip_above);

        // the mirrored mutation at k = -1 sits at h = +1
        assert_eq!(dip(-1.0, 1.0).unwrap().h_dip, 1.0);
        assert_abs_diff_eq!(
            dip(-(1.0 - 1e-6), 1.0).unwrap().c_dip,
            m.c_dip_below,
            epsilon = 1e-12
        );

        assert!(mutation_scan(1.0, 0.0).is_err());
        assert!(mutation_scan(1.0, 1e-2).is_err());
        assert!(mutation_scan(0.0, 1e-6).is_err());
    }

    #[test]
    fn sweep_ordering_and_mirror_symmetry() {
        let h_grid = GridSpec::new(-1.0, 1.0, 21).unwrap();
        let t_grid = GridSpec::new(0.05, 0.1, 2).unwrap();
        let rows = sweep(1.0, 0.0, Pair::OneThree, &h_grid, &t_grid).unwrap();
        assert_eq!(rows.len(), 42);
        // h outer ascending, T inner ascending
        assert_eq!(rows[0].h, -1.0);
        assert_eq!(rows[0].t, 0.05);
        assert_eq!(rows[1].t, 0.1);
        assert_eq!(rows[2].h, rows[0].h + 0.1);
        // k = 0 slice is symmetric in h at mirrored grid points
        for i in 0..21 {
            let mirrored = 20 - i;
            assert!(
                (rows[2 * i].c - rows[2 * mirrored].c).abs() <= 1e-10,
                "C({}) vs C({})",
                rows[2 * i].h,
                rows[2 * mirrored].h
            );
        }
    }

    #[test]
    fn sweep_scan_locates_dip_at_k05() {
        // T = 0.01 slice over [-1, 0]: argmin within one grid step of -0.5
        let grid = GridSpec::new(-1.0, 0.0, 401).unwrap();
        let (h_min, _) = scan_minimum(1.0, 0.5, Pair::OneThree, 0.01, &grid).unwrap();
        assert!((h_min - (-0.5)).abs() <= grid.step() + 1e-12);
    }

    #[test]
    fn sweep_scan_locates_dip_at_k10() {
        // T = 0.01 slice: dip near (10 - sqrt(108))/2, approaching 0 from below
        let grid = GridSpec::new(-2.0, -0.01, 400).unwrap();
        let (h_min, _) = scan_minimum(1.0, 10.0, Pair::OneThree, 0.01, &grid).unwrap();
        let expected = 0.5 * (10.0 - 108.0_f64.sqrt());
        assert!((h_min - expected).abs() <= grid.step() + 1e-12);
        assert!(expected < 0.0);
    }

    #[test]
    fn dip_curve_rows() {
        let grid = GridSpec::new(0.0, 2.0, 5).unwrap();
        let rows = dip_curve(&grid, 1.0, Pair::OneThree).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0].c_dip, 0.0); // k = 0
        assert_eq!(rows[2].c_dip, 0.0); // k = 1
        assert_abs_diff_eq!(rows[4].c_dip, 0.105662, epsilon = 1e-6); // k = 2

        // nearest-neighbor columns decay toward zero
        let grid = GridSpec::new(0.0, 100.0, 11).unwrap();
        let rows = dip_curve(&grid, 1.0, Pair::OneTwo).unwrap();
        for pair in rows.windows(2) {
            assert!(pair[1].c_plus < pair[0].c_plus);
        }
        let last = rows.last().unwrap();
        assert_abs_diff_eq!(last.c_plus, 0.0200, epsilon = 1e-4);
        assert!(last.c_dip <= 1e-9);
        assert_eq!(last.c_minus, 0.0);

        // pair 13 plateau approaches 1 as k grows
        let rows = dip_curve(&grid, 1.0, Pair::OneThree).unwrap();
        assert_abs_diff_eq!(rows.last().unwrap().c_plus, 0.9998, epsilon = 1e-4);
    }

    #[test]
    fn dip_location_monotone_toward_zero_for_large_k() {
        let mut prev = dip(1.01, 1.0).unwrap().h_dip;
        for i in 1..200 {
            let k = 1.01 + 0.1 * i as f64;
            let h = dip(k, 1.0).unwrap().h_dip;
            assert!(h > prev && h < 0.0, "h_dip not monotone toward 0- at k={k}");
            prev = h;
        }
    }
}
