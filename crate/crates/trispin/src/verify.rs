//! Cross-validation battery behind the `verify` CLI subcommand.
//!
//! Each check pits the closed forms against the numeric pipeline (or a
//! symmetry against a recomputation) over randomized parameters. Checks
//! draw from their own seeded generator, so a report is a pure function of
//! (trials, seed).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    boot_heights, dip, dip_curve, ground_segments, mutation_scan, scan_minimum, GridSpec,
};
use crate::linalg::{
    eigh_symmetric, partial_trace, wootters_concurrence, DensityMatrix, Matrix,
};
use crate::model::{analytic_spectrum, build_hamiltonian, ModelParams, Pair};
use crate::thermal::{thermal_concurrence, xstate_closed_form, zero_t_concurrence};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Failure description with the offending parameters, empty on success.
    pub detail: String,
}

/// Full battery result.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Check = fn(usize, &mut ChaCha8Rng) -> Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    ("spectral-decomposition", check_spectral_decomposition),
    ("kron-associativity", check_kron_associativity),
    ("partial-trace-properties", check_partial_trace),
    ("xstate-oracle-agreement", check_xstate_oracle),
    ("spectrum-agreement", check_spectrum_agreement),
    ("level-concurrence-table", check_level_table),
    ("closed-form-reduced-state", check_closed_form_entries),
    ("xstate-consistency", check_xstate_consistency),
    ("path-agreement", check_path_agreement),
    ("level-concurrence-anchors", check_level_anchors),
    ("dip-law-below-mutation", check_dip_law_low_k),
    ("mutation-triple", check_mutation_triple),
    ("peak-height", check_peak_height),
    ("dip-law-above-mutation", check_dip_law_high_k),
    ("dip-consistency", check_dip_consistency),
    ("symmetries", check_symmetries),
    ("nearest-neighbor-suppression", check_nn_suppression),
    ("zero-t-continuity", check_zero_t_continuity),
    ("high-t-disentanglement", check_high_t),
    ("envelope-correctness", check_envelope),
];

/// Runs every check at the given trial count. `seed` fixes all randomness.
pub fn run_battery(trials: usize, seed: u64) -> VerifyReport {
    let checks = CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            match check(trials, &mut rng) {
                Ok(()) => CheckOutcome {
                    name,
                    passed: true,
                    detail: String::new(),
                },
                Err(detail) => CheckOutcome {
                    name,
                    passed: false,
                    detail,
                },
            }
        })
        .collect();
    VerifyReport {
        trials,
        seed,
        checks,
    }
}

fn random_params(rng: &mut ChaCha8Rng) -> ModelParams {
    let mut j: f64 = rng.gen_range(-2.0..2.0);
    if j.abs() < 1e-3 {
        j = 1.0;
    }
    ModelParams::new(j, rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
}

fn fail(msg: String) -> Result<(), String> {
    Err(msg)
}

fn check_spectral_decomposition(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for trial in 0..trials.max(50) {
        let n = 2 + trial % 7;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-2.0..2.0);
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        let dec = eigh_symmetric(&m).map_err(|e| e.to_string())?;
        let scale = m.norm_inf().max(1.0);
        for i in 0..n {
            let v = dec.eigenvector(i);
            let mv = m.mul_vec(&v);
            for r in 0..n {
                if (mv[r] - dec.values[i] * v[r]).abs() > 1e-10 * scale {
                    return fail(format!("eigenpair residual beyond 1e-10 (n={n})"));
                }
            }
        }
        let vtv = dec.vectors.transpose().mul(&dec.vectors);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                if (vtv[(i, j)] - want).abs() > 1e-10 {
                    return fail(format!("eigenvectors not orthonormal (n={n})"));
                }
            }
        }
    }
    Ok(())
}

fn check_kron_associativity(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    use crate::linalg::kron;
    let pool = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
    for _ in 0..trials.max(50) {
        let mut mats = Vec::new();
        for _ in 0..3 {
            let mut m = Matrix::zeros(2, 2);
            for i in 0..2 {
                for j in 0..2 {
                    m[(i, j)] = pool[rng.gen_range(0..pool.len())];
                }
            }
            mats.push(m);
        }
        if kron(&kron(&mats[0], &mats[1]), &mats[2]) != kron(&mats[0], &kron(&mats[1], &mats[2])) {
            return fail("Kronecker product is not associative".into());
        }
    }
    Ok(())
}

fn check_partial_trace(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(50) {
        let p = random_params(rng);
        let t = rng.gen_range(0.05..3.0);
        let rho = crate::thermal::gibbs_state(&build_hamiltonian(&p), t)
            .map_err(|e| e.to_string())?;
        for q in 1..=3 {
            let red = partial_trace(&rho, q).map_err(|e| e.to_string())?;
            if (red.matrix().trace() - 1.0).abs() > 1e-12 {
                return fail(format!("partial trace lost trace at {p:?} qubit {q}"));
            }
            for i in 0..4 {
                for j in 0..4 {
                    if red.entry(i, j) != red.entry(j, i) {
                        return fail(format!("partial trace asymmetric at {p:?} qubit {q}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_xstate_oracle(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    // random X-states: u + v + 2w = Z, |y| <= w
    for _ in 0..trials.max(200) {
        let u: f64 = rng.gen_range(0.0..1.0);
        let v: f64 = rng.gen_range(0.0..1.0);
        let w: f64 = rng.gen_range(0.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0) * w;
        let z = u + v + 2.0 * w;
        let rho = DensityMatrix::new(Matrix::from_rows(&[
            vec![u / z, 0.0, 0.0, 0.0],
            vec![0.0, w / z, y / z, 0.0],
            vec![0.0, y / z, w / z, 0.0],
            vec![0.0, 0.0, 0.0, v / z],
        ]))
        .map_err(|e| e.to_string())?;
        let oracle = wootters_concurrence(&rho).map_err(|e| e.to_string())?;
        let closed = (2.0 / z) * (y.abs() - (u * v).sqrt()).max(0.0);
        if (oracle - closed).abs() > 1e-8 {
            return fail(format!(
                "Wootters oracle vs X-state closed form: {oracle} vs {closed} \
                 at u={u} v={v} w={w} y={y}"
            ));
        }
    }
    Ok(())
}

fn check_spectrum_agreement(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(100) {
        let p = random_params(rng);
        let h = build_hamiltonian(&p);
        let dec = eigh_symmetric(&h).map_err(|e| e.to_string())?;
        let s = analytic_spectrum(&p).map_err(|e| e.to_string())?;
        let mut analytic = s.energies();
        analytic.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in dec.values.iter().zip(analytic) {
            if (got - want).abs() > 1e-10 {
                return fail(format!("energy mismatch {got} vs {want} at {p:?}"));
            }
        }
        for level in s.levels() {
            let hv = h.mul_vec(&level.state);
            for (hi, si) in hv.iter().zip(level.state.iter()) {
                if (hi - level.energy * si).abs() > 1e-10 {
                    return fail(format!("eigenvector residual, level {} at {p:?}", level.index));
                }
            }
        }
    }
    Ok(())
}

fn check_level_table(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(30) {
        let p = random_params(rng);
        let s = analytic_spectrum(&p).map_err(|e| e.to_string())?;
        for level in s.levels() {
            let rho = DensityMatrix::from_pure(&level.state).map_err(|e| e.to_string())?;
            for pair in Pair::ALL {
                let red =
                    partial_trace(&rho, pair.complement_qubit()).map_err(|e| e.to_string())?;
                let c = wootters_concurrence(&red).map_err(|e| e.to_string())?;
                if (c - level.pair_concurrence(pair)).abs() > 1e-10 {
                    return fail(format!(
                        "table entry level {} pair {} at {:?}: {} vs {}",
                        level.index,
                        pair,
                        p,
                        c,
                        level.pair_concurrence(pair)
                    ));
                }
            }
        }
        // tabulated identities
        let c = |i: usize| s.level(i).unwrap().c13;
        if (c(5) - c(8)).abs() > 1e-15 || (c(6) - c(7)).abs() > 1e-15 {
            return fail(format!("C5=C8 / C6=C7 identity broken at {p:?}"));
        }
        for level in s.levels() {
            if level.c12 != level.c23 {
                return fail(format!("C12 = C23 broken at level {}", level.index));
            }
        }
    }
    Ok(())
}

fn check_closed_form_entries(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(100) {
        let p = random_params(rng);
        let t = rng.gen_range(0.01..5.0);
        let x = xstate_closed_form(&p, t).map_err(|e| e.to_string())?;
        let rho = crate::thermal::gibbs_state(&build_hamiltonian(&p), t)
            .map_err(|e| e.to_string())?;
        let red = partial_trace(&rho, 2).map_err(|e| e.to_string())?;
        let entries = [
            (x.u / x.z, red.entry(0, 0), "u"),
            (x.w / x.z, red.entry(1, 1), "w"),
            (x.y / x.z, red.entry(1, 2), "y"),
            (x.v / x.z, red.entry(3, 3), "v"),
        ];
        for (closed, numeric, name) in entries {
            if (closed - numeric).abs() > 1e-10 {
                return fail(format!(
                    "{name}/Z mismatch {closed} vs {numeric} at {p:?} T={t}"
                ));
            }
        }
    }
    Ok(())
}

fn check_xstate_consistency(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(100) {
        let p = random_params(rng);
        let t = rng.gen_range(0.001..5.0);
        let x = xstate_closed_form(&p, t).map_err(|e| e.to_string())?;
        if x.u < 0.0 || x.v < 0.0 || x.w < 0.0 || x.z <= 0.0 {
            return fail(format!("negative weight at {p:?} T={t}"));
        }
        if x.trace_residual() > 1e-10 {
            return fail(format!("Z = u+v+2w broken at {p:?} T={t}"));
        }
        if x.degenerate_weight_residual() > 1e-10 {
            return fail(format!("w - y = 2 cosh((h-2k)b) broken at {p:?} T={t}"));
        }
    }
    Ok(())
}

fn check_path_agreement(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(200) {
        let p = random_params(rng);
        let t = rng.gen_range(0.01..5.0);
        let point = thermal_concurrence(&p, t, Pair::OneThree).map_err(|e| e.to_string())?;
        let closed = point.closed_form.unwrap();
        if (point.concurrence - closed).abs() > 1e-8 {
            return fail(format!(
                "paths differ by {:.3e} at {p:?} T={t}",
                (point.concurrence - closed).abs()
            ));
        }
    }
    Ok(())
}

fn check_level_anchors(_trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    // C5 = C6 = 1/2 at k = 0, exactly to rounding
    let s = analytic_spectrum(&ModelParams::new(1.0, 0.2, 0.0)).map_err(|e| e.to_string())?;
    for idx in 5..=8 {
        if (s.level(idx).unwrap().c13 - 0.5).abs() > 1e-12 {
            return fail(format!("C{idx}(k=0) differs from 1/2"));
        }
    }
    // C5 monotone increasing, C6 monotone decreasing over k in [-5, 5]
    let grid = GridSpec::new(-5.0, 5.0, 1001).map_err(|e| e.to_string())?;
    let mut prev: Option<(f64, f64)> = None;
    for k in grid.points() {
        let s = analytic_spectrum(&ModelParams::new(1.0, 0.0, k)).map_err(|e| e.to_string())?;
        let c5 = s.level(5).unwrap().c13;
        let c6 = s.level(6).unwrap().c13;
        if let Some((p5, p6)) = prev {
            if c5 <= p5 {
                return fail(format!("C5 not increasing at k={k}"));
            }
            if c6 >= p6 {
                return fail(format!("C6 not decreasing at k={k}"));
            }
        }
        prev = Some((c5, c6));
    }
    Ok(())
}

/// Shared helper for the dip-law checks: scanned minimum location vs the
/// closed-form dip field, and the thermal concurrence at the crossing field
/// itself vs the closed-form magnitude.
///
/// The magnitude is read at the crossing, not at the scanned minimum: the
/// thermal interpolation between the two crossing levels passes through an
/// exactly unentangled mixture a distance O(T) from the crossing, so the
/// global minimum of a sufficiently fine scan is ~0 regardless of k. At the
/// crossing field the weights are exactly equal and the T -> 0 value is the
/// equal-weight mixture concurrence.
///
/// At |k| = |J| the dip value is 0 and merges with the unentangled
/// product-state plateau next to it, so the scanned-minimum location is not
/// unique there and only the magnitude is checked.
fn dip_law_at(k: f64, scan: &GridSpec, steps_hint: usize) -> Result<(), String> {
    let grid = GridSpec {
        steps: steps_hint,
        ..*scan
    };
    let d = dip(k, 1.0).map_err(|e| e.to_string())?;
    if d.crossing_levels.len() == 2 {
        let (h_min, _) =
            scan_minimum(1.0, k, Pair::OneThree, 1e-3, &grid).map_err(|e| e.to_string())?;
        if (h_min - d.h_dip).abs() > grid.step() + 1e-12 {
            return fail(format!(
                "scanned dip at h={h_min} not within one grid step of {} (k={k})",
                d.h_dip
            ));
        }
    }
    let at_crossing = thermal_concurrence(&ModelParams::new(1.0, d.h_dip, k), 1e-3, Pair::OneThree)
        .map_err(|e| e.to_string())?
        .concurrence;
    if (at_crossing - d.c_dip).abs() > 5e-3 {
        return fail(format!(
            "dip magnitude {at_crossing} vs closed form {} (k={k})",
            d.c_dip
        ));
    }
    Ok(())
}

fn check_dip_law_low_k(trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    let steps = (trials * 5).clamp(401, 4001);
    for k in [0.1, 0.3, 0.5, 0.7, 0.9] {
        dip_law_at(k, &GridSpec::new(-1.0, 0.0, 401).unwrap(), steps)?;
    }
    Ok(())
}

fn check_mutation_triple(_trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = mutation_scan(1.0, 1e-6).map_err(|e| e.to_string())?;
    let below = 0.5 - 2.0_f64.sqrt() / 3.0;
    if (m.c_dip_below - below).abs() > 1e-4 {
        return fail(format!("mutation left limit {} vs {below}", m.c_dip_below));
    }
    if m.c_dip_at != 0.0 {
        return fail(format!("mutation value at k=1 is {}", m.c_dip_at));
    }
    if (m.c_dip_above - 1.0 / 6.0).abs() > 1e-4 {
        return fail(format!("mutation right limit {} vs 1/6", m.c_dip_above));
    }
    Ok(())
}

fn check_peak_height(_trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = ModelParams::new(1.0, -1.2, 1.5);
    let c = thermal_concurrence(&p, 0.01, Pair::OneThree)
        .map_err(|e| e.to_string())?
        .concurrence;
    if c < 0.999 {
        return fail(format!("peak concurrence {c} below 0.999"));
    }
    let c0 = zero_t_concurrence(&p, Pair::OneThree).map_err(|e| e.to_string())?;
    if c0 != 1.0 {
        return fail(format!("zero-T peak concurrence {c0} is not exactly 1"));
    }
    Ok(())
}

fn check_dip_law_high_k(trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    let steps = (trials * 5).clamp(401, 4001);
    for k in [1.5_f64, 2.0, 3.0, 10.0] {
        let scan = GridSpec::new(-0.95 * k.min(2.0), -0.01, 401).unwrap();
        dip_law_at(k, &scan, steps)?;
    }
    // h_dip(10) and the monotone approach to zero from below
    let d10 = dip(10.0, 1.0).map_err(|e| e.to_string())?;
    if (d10.h_dip - (-0.19615)).abs() > 1e-5 {
        return fail(format!("h_dip(10) = {}", d10.h_dip));
    }
    let mut prev = f64::NEG_INFINITY;
    for i in 0..200 {
        let k = 1.01 + 0.1 * i as f64;
        let h = dip(k, 1.0).map_err(|e| e.to_string())?.h_dip;
        if h <= prev || h >= 0.0 {
            return fail(format!("h_dip(k) not monotone toward 0- at k={k}"));
        }
        prev = h;
    }
    Ok(())
}

fn check_dip_consistency(trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    // analytic dip vs scan across the full k range of the dip laws
    let steps = (trials * 5).clamp(401, 4001);
    for i in 0..=12 {
        let k = 0.25 * i as f64;
        let d = dip(k, 1.0).map_err(|e| e.to_string())?;
        let segs = ground_segments(1.0, k, -8.0, 8.0).map_err(|e| e.to_string())?;
        // clamp the scan inside the two segments adjacent to the dip
        let left = segs
            .iter()
            .map(|s| s.h_lo)
            .filter(|&lo| lo < d.h_dip - 1e-9)
            .fold(f64::NEG_INFINITY, f64::max);
        let right = segs
            .iter()
            .map(|s| s.h_hi)
            .filter(|&hi| hi > d.h_dip + 1e-9)
            .fold(f64::INFINITY, f64::min);
        let lo = d.h_dip - 0.5 * (d.h_dip - left).min(1.0);
        let hi = d.h_dip + 0.5 * (right - d.h_dip).min(1.0);
        if lo >= hi || lo.is_nan() || hi.is_nan() {
            continue; // k = 1: the left segment collapses to the point itself
        }
        let grid = GridSpec::new(lo, hi, steps).unwrap();
        dip_law_at(k, &grid, steps)?;
    }
    Ok(())
}

fn check_symmetries(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(100) {
        let p = random_params(rng);
        let t = rng.gen_range(0.02..5.0);
        let c = |p: &ModelParams, pair: Pair| -> Result<f64, String> {
            Ok(thermal_concurrence(p, t, pair)
                .map_err(|e| e.to_string())?
                .concurrence)
        };
        let base = c(&p, Pair::OneThree)?;
        let j_flip = c(&ModelParams::new(-p.j, p.h, p.k), Pair::OneThree)?;
        if (base - j_flip).abs() > 1e-10 {
            return fail(format!("J-sign symmetry broken at {p:?} T={t}"));
        }
        let mirror = c(&ModelParams::new(p.j, -p.h, -p.k), Pair::OneThree)?;
        if (base - mirror).abs() > 1e-10 {
            return fail(format!("(h,k) mirror symmetry broken at {p:?} T={t}"));
        }
        let c12 = c(&p, Pair::OneTwo)?;
        let c23 = c(&p, Pair::TwoThree)?;
        if (c12 - c23).abs() > 1e-10 {
            return fail(format!("pair 12/23 symmetry broken at {p:?} T={t}"));
        }
        let k0 = ModelParams::new(p.j, p.h, 0.0);
        let k0m = ModelParams::new(p.j, -p.h, 0.0);
        if (c(&k0, Pair::OneThree)? - c(&k0m, Pair::OneThree)?).abs() > 1e-10 {
            return fail(format!("h mirror at k=0 broken at {p:?} T={t}"));
        }
    }
    Ok(())
}

fn check_nn_suppression(_trials: usize, _rng: &mut ChaCha8Rng) -> Result<(), String> {
    // c_plus(k) = 2/sqrt(8 + k^2) for pair 12, strictly decreasing
    let mut prev = f64::INFINITY;
    for i in 0..=100 {
        let k = i as f64;
        let b = boot_heights(k, 1.0, Pair::OneTwo).map_err(|e| e.to_string())?;
        let expected = 2.0 / (8.0 + k * k).sqrt();
        if (b.c_plus - expected).abs() > 1e-12 {
            return fail(format!("pair-12 plateau {} vs {expected} at k={k}", b.c_plus));
        }
        if b.c_plus >= prev {
            return fail(format!("pair-12 plateau not decreasing at k={k}"));
        }
        prev = b.c_plus;
    }
    let b100 = boot_heights(100.0, 1.0, Pair::OneTwo).map_err(|e| e.to_string())?;
    if (b100.c_plus - 0.0200).abs() > 1e-4 {
        return fail(format!("c_plus(100) = {}", b100.c_plus));
    }
    // no negative boot for k >= |J|: the level-3 segment is unentangled
    // for nearest neighbors
    let c = zero_t_concurrence(&ModelParams::new(1.0, -1.2, 1.5), Pair::OneTwo)
        .map_err(|e| e.to_string())?;
    if c != 0.0 {
        return fail(format!("pair-12 concurrence {c} on the level-3 segment"));
    }
    Ok(())
}

fn check_zero_t_continuity(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let mut checked = 0;
    let mut guard = 0;
    while checked < trials.max(30) && guard < 100 * trials.max(30) {
        guard += 1;
        let p = random_params(rng);
        let s = analytic_spectrum(&p).map_err(|e| e.to_string())?;
        let e = s.energies();
        let min = s.ground_energy();
        let mut second = f64::INFINITY;
        for &x in &e {
            if x - min > 1e-9 && x - min < second {
                second = x - min;
            }
        }
        // stay away from level crossings: |h - h_crossing| > 0.05 maps to a
        // gap bound of 0.1 (energy slopes differ by at least 2)
        if second < 0.1 {
            continue;
        }
        checked += 1;
        let c_t = thermal_concurrence(&p, 1e-4, Pair::OneThree)
            .map_err(|e| e.to_string())?
            .concurrence;
        let c_0 = zero_t_concurrence(&p, Pair::OneThree).map_err(|e| e.to_string())?;
        if (c_t - c_0).abs() > 1e-3 {
            return fail(format!("C(T=1e-4) = {c_t} vs C(0) = {c_0} at {p:?}"));
        }
    }
    Ok(())
}

fn check_high_t(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(50) {
        let mut p = random_params(rng);
        p.h = p.h.clamp(-3.0, 3.0);
        p.k = p.k.clamp(-3.0, 3.0);
        for pair in Pair::ALL {
            let c = thermal_concurrence(&p, 100.0, pair)
                .map_err(|e| e.to_string())?
                .concurrence;
            if c != 0.0 {
                return fail(format!("C(T=100) = {c} at {p:?} pair {pair}"));
            }
        }
    }
    Ok(())
}

fn check_envelope(trials: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..trials.max(50) {
        let p = random_params(rng);
        let segs = ground_segments(p.j, p.k, -5.0, 5.0).map_err(|e| e.to_string())?;
        for i in 0..1000 {
            let h = -5.0 + 10.0 * (i as f64 + 0.5) / 1000.0;
            if segs
                .iter()
                .any(|s| (h - s.h_lo).abs() < 1e-6 || (h - s.h_hi).abs() < 1e-6)
            {
                continue;
            }
            let seg = segs
                .iter()
                .find(|s| h >= s.h_lo && h <= s.h_hi)
                .ok_or_else(|| format!("segments do not cover h={h}"))?;
            let s = analytic_spectrum(&ModelParams::new(p.j, h, p.k)).map_err(|e| e.to_string())?;
            if s.ground_levels() != seg.ground_levels {
                return fail(format!(
                    "envelope mismatch at j={} k={} h={h}",
                    p.j, p.k
                ));
            }
        }
        // dip curve sanity over the same draw
        let grid = GridSpec::new(0.0, 3.0, 7).unwrap();
        let _ = dip_curve(&grid, p.j, Pair::OneThree).map_err(|e| e.to_string())?;
    }
    Ok(())
}
