//! Eigenvalues of a (possibly nonsymmetric) real 4x4 matrix with real
//! spectrum, via the characteristic polynomial.
//!
//! The intended inputs are products rho * rho~ whose spectrum is provably
//! real and nonnegative but whose matrix is not symmetric. Roots are
//! extracted by a derivative cascade: critical points of p come from the
//! recursively solved p', brackets between consecutive critical points hold
//! at most one sign-change root, and a critical point where p itself
//! (nearly) vanishes is a multiple root taken at the critical location.
//! That keeps exactly-multiple roots at full accuracy instead of the
//! eps^(1/m) splitting a blind polynomial solver produces.

use super::Matrix;
use crate::error::{Error, Result};

/// Relative imaginary-part budget: spectra are "real" when every root's
/// imaginary part is below this times the matrix infinity norm.
const IM_TOL: f64 = 1e-7;

/// Eigenvalues of a 4x4 matrix whose characteristic polynomial has only
/// real roots, returned in descending order. Roots in [-1e-9, 0) are
/// clamped to zero. Fails with `ComplexRoots` when an imaginary part
/// exceeds `1e-7 * ||M||_inf`.
///
/// Simple and exactly-multiple roots come out with absolute accuracy near
/// 1e-13 * ||M||_inf; a nearly-coincident pair (separation below ~1e-7)
/// resolves only to the information limit of double-precision coefficients,
/// about sqrt(eps) relative to the norm.
pub fn eigenvalues_4x4(m: &Matrix) -> Result<[f64; 4]> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: m.rows().max(m.cols()),
        });
    }
    let scale = m.norm_inf();
    if scale == 0.0 {
        return Ok([0.0; 4]);
    }
    let a = m.scale(1.0 / scale);

    // power sums of eigenvalues from traces of powers
    let a2 = a.mul(&a);
    let a3 = a2.mul(&a);
    let a4 = a2.mul(&a2);
    let p = [a.trace(), a2.trace(), a3.trace(), a4.trace()];

    // Newton's identities: k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    let e1 = p[0];
    let e2 = (e1 * p[0] - p[1]) / 2.0;
    let e3 = (e2 * p[0] - e1 * p[1] + p[2]) / 3.0;
    let e4 = (e3 * p[0] - e2 * p[1] + e1 * p[2] - p[3]) / 4.0;

    let poly = [1.0, -e1, e2, -e3, e4];
    let mut roots = match real_roots_with_zero_deflation(&poly) {
        Ok(r) => r,
        Err(imag) => {
            return Err(Error::ComplexRoots {
                imag: imag * scale,
                limit: IM_TOL * scale,
            })
        }
    };

    for r in roots.iter_mut() {
        *r *= scale;
        if *r >= -1e-9 && *r < 0.0 {
            *r = 0.0;
        }
    }
    roots.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok([roots[0], roots[1], roots[2], roots[3]])
}

/// Strips roots at zero while the constant term is indistinguishable from
/// rounding noise, then runs the cascade on the rest.
fn real_roots_with_zero_deflation(poly: &[f64; 5]) -> std::result::Result<Vec<f64>, f64> {
    let coeff_scale = poly.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    let zero_tol = 16.0 * f64::EPSILON * coeff_scale;

    let mut work: Vec<f64> = poly.to_vec();
    let mut roots = Vec::with_capacity(4);
    while work.len() > 1 && work.last().unwrap().abs() <= zero_tol {
        roots.push(0.0);
        work.pop();
    }
    let found = real_roots_monic(&work)?;
    roots.extend(found);
    Ok(roots)
}

/// All real roots (with multiplicity, ascending) of a monic polynomial with
/// real spectrum. `Err(imag)` reports the imaginary magnitude of a genuine
/// complex pair.
fn real_roots_monic(poly: &[f64]) -> std::result::Result<Vec<f64>, f64> {
    let deg = poly.len() - 1;
    match deg {
        0 => Ok(vec![]),
        1 => Ok(vec![-poly[1]]),
        2 => match quadratic(poly[1], poly[2]) {
            Quad::Real(a, b) => Ok(vec![a, b]),
            Quad::Complex { re, im } => {
                if im <= IM_TOL {
                    Ok(vec![re, re])
                } else {
                    Err(im)
                }
            }
        },
        _ => {
            let mut all = cascade(poly);
            // deflate what the cascade found; the remainder holds complex
            // pairs (or stray real roots the bracketing missed)
            let mut quotient: Vec<f64> = poly.to_vec();
            for &r in &all {
                quotient = deflate(&quotient, r);
            }
            loop {
                match quotient.len() - 1 {
                    0 => break,
                    1 => {
                        all.push(-quotient[1]);
                        break;
                    }
                    2 => {
                        match quadratic(quotient[1], quotient[2]) {
                            Quad::Real(a, b) => {
                                all.push(a);
                                all.push(b);
                            }
                            Quad::Complex { re, im } => {
                                if im > IM_TOL {
                                    return Err(im);
                                }
                                all.push(re);
                                all.push(re);
                            }
                        }
                        break;
                    }
                    _ => {
                        let more = cascade(&quotient);
                        if more.is_empty() {
                            // no real roots at all: estimate the imaginary
                            // scale from the shallowest local extremum
                            let d = quotient.len() - 1;
                            let crit = cascade(&derivative_monic(&quotient));
                            let est = crit
                                .iter()
                                .map(|&c| horner(&quotient, c).0.abs().powf(1.0 / d as f64))
                                .fold(f64::INFINITY, f64::min);
                            return Err(if est.is_finite() { est } else { 1.0 });
                        }
                        for &r in &more {
                            quotient = deflate(&quotient, r);
                        }
                        all.extend(more);
                    }
                }
            }
            all.sort_by(|a, b| a.partial_cmp(b).unwrap());
            Ok(all)
        }
    }
}

enum Quad {
    Real(f64, f64),
    Complex { re: f64, im: f64 },
}

/// Roots of x^2 + b x + c, numerically stable form.
fn quadratic(b: f64, c: f64) -> Quad {
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let sd = disc.sqrt();
        let q = -0.5 * (b + b.signum() * sd);
        let (r1, r2) = if q != 0.0 { (q, c / q) } else { (q, -b - q) };
        if r1 <= r2 {
            Quad::Real(r1, r2)
        } else {
            Quad::Real(r2, r1)
        }
    } else {
        Quad::Complex {
            re: -0.5 * b,
            im: 0.5 * (-disc).sqrt(),
        }
    }
}

/// Horner evaluation; also returns sum_i |c_i| |x|^i for error estimation.
fn horner(poly: &[f64], x: f64) -> (f64, f64) {
    let mut v = poly[0];
    let mut mag = poly[0].abs();
    for &c in &poly[1..] {
        v = v * x + c;
        mag = mag * x.abs() + c.abs();
    }
    (v, mag)
}

fn derivative_monic(poly: &[f64]) -> Vec<f64> {
    let deg = poly.len() - 1;
    (0..deg)
        .map(|i| poly[i] * (deg - i) as f64 / deg as f64)
        .collect()
}

/// Real roots of a monic polynomial of degree >= 3 via bracketing between
/// the (recursively found) critical points. Complex pairs are simply not
/// reported; the caller reconciles the count.
fn cascade(poly: &[f64]) -> Vec<f64> {
    let deg = poly.len() - 1;
    let bound = 1.0 + poly[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));

    let dp = derivative_monic(poly);
    let mut crit = if dp.len() > 3 {
        cascade(&dp)
    } else {
        // a complex pair in p' means a monotone region: no usable
        // critical points there
        real_roots_monic(&dp).unwrap_or_default()
    };
    crit.retain(|c| c.abs() < bound);
    crit.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // merge critical points into (location, multiplicity-in-p') nodes
    let merge_tol = 1e-12 * bound;
    let mut nodes: Vec<(f64, usize)> = Vec::new();
    for c in crit {
        match nodes.last_mut() {
            Some((loc, count)) if (c - *loc).abs() <= merge_tol => *count += 1,
            _ => nodes.push((c, 1)),
        }
    }

    // a degree-d polynomial yields at most d roots; spurious splits of a
    // multiple critical point could otherwise over-claim multiplicities
    let mut capacity = deg;
    let mut roots = Vec::new();
    let mut walls = vec![(-bound, 0usize)];
    walls.extend(nodes.iter().copied());
    walls.push((bound, 0));

    // a critical point where p vanishes is a multiple root of p
    let mut touched = vec![false; walls.len()];
    for (idx, &(x, cmult)) in walls.iter().enumerate() {
        if cmult == 0 || capacity == 0 {
            continue;
        }
        let (v, mag) = horner(poly, x);
        let touch_tol = 64.0 * deg as f64 * f64::EPSILON * mag.max(1e-300);
        if v.abs() <= touch_tol {
            touched[idx] = true;
            for _ in 0..(cmult + 1).min(capacity) {
                roots.push(x);
            }
            capacity -= (cmult + 1).min(capacity);
        }
    }

    // one simple root per sign change on intervals free of touch points
    for w in 0..walls.len() - 1 {
        if capacity == 0 {
            break;
        }
        if touched[w] || touched[w + 1] {
            continue;
        }
        let (lo, hi) = (walls[w].0, walls[w + 1].0);
        let plo = horner(poly, lo).0;
        let phi = horner(poly, hi).0;
        if plo == 0.0 {
            // only possible at the artificial bound walls; treat as root
            roots.push(lo);
            capacity -= 1;
            continue;
        }
        if plo.signum() != phi.signum() {
            roots.push(refine_root(poly, lo, hi, plo));
            capacity -= 1;
        }
    }

    roots
}

/// Bisection to machine width, then a couple of guarded Newton steps.
fn refine_root(poly: &[f64], mut lo: f64, mut hi: f64, plo: f64) -> f64 {
    let slo = plo.signum();
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let pm = horner(poly, mid).0;
        if pm == 0.0 {
            return mid;
        }
        if pm.signum() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let dp = derivative_monic(poly);
    let deg = poly.len() - 1;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..3 {
        let (v, _) = horner(poly, x);
        let d = horner(&dp, x).0 * deg as f64;
        if d == 0.0 {
            break;
        }
        let step = v / d;
        let next = x - step;
        if next < lo || next > hi {
            break;
        }
        x = next;
        if step.abs() <= f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Synthetic division by (x - r); drops the remainder.
fn deflate(poly: &[f64], r: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = 0.0;
    for &c in &poly[..poly.len() - 1] {
        acc = acc * r + c;
        out.push(acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pauli, DensityMatrix, Matrix};
    use approx::assert_abs_diff_eq;

    /// Monic coefficients of prod (x - r_i), the expansion oracle.
    fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i] += ci;
                next[i + 1] -= ci * r;
            }
            c = next;
        }
        c
    }

    fn companion(poly: &[f64]) -> Matrix {
        // monic degree 4: last column holds the negated low-order coefficients
        let mut m = Matrix::zeros(4, 4);
        for i in 1..4 {
            m[(i, i - 1)] = 1.0;
        }
        for i in 0..4 {
            m[(i, 3)] = -poly[4 - i];
        }
        m
    }

    #[test]
    fn diagonal_matrix_roots() {
        let m = Matrix::from_rows(&[
            vec![4.0, 0.0, 0.0, 0.0],
            vec![0.0, 3.0, 0.0, 0.0],
            vec![0.0, 0.0, 2.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ]);
        let lam = eigenvalues_4x4(&m).unwrap();
        for (got, want) in lam.iter().zip([4.0, 3.0, 2.0, 1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn bell_state_product_matrix() {
        let inv = 1.0 / 2.0_f64.sqrt();
        let rho = DensityMatrix::from_pure(&[0.0, inv, inv, 0.0]).unwrap();
        let flip = pauli::spin_flip_two_qubit();
        let m = rho.matrix().mul(&flip).mul(rho.matrix()).mul(&flip);
        let lam = eigenvalues_4x4(&m).unwrap();
        assert_abs_diff_eq!(lam[0], 1.0, epsilon = 1e-10);
        for &l in &lam[1..] {
            assert_abs_diff_eq!(l, 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn companion_of_double_root_polynomial() {
        // (x-1)^2 (x-2) (x-3), expanded by the oracle above
        let poly = poly_from_roots(&[1.0, 1.0, 2.0, 3.0]);
        assert_eq!(poly, vec![1.0, -7.0, 17.0, -17.0, 6.0]);
        let lam = eigenvalues_4x4(&companion(&poly)).unwrap();
        assert_abs_diff_eq!(lam[0], 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(lam[1], 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(lam[2], 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(lam[3], 1.0, epsilon = 1e-8);
    }

    #[test]
    fn quadruple_root_stays_real() {
        // rho = I/4 gives rho*rho~ = I/16: a quadruple eigenvalue
        let m = Matrix::identity(4).scale(1.0 / 16.0);
        let lam = eigenvalues_4x4(&m).unwrap();
        for &l in &lam {
            assert_abs_diff_eq!(l, 1.0 / 16.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn triple_and_pair_clusters() {
        for roots in [
            [5.0, 5.0, 5.0, 1.0],
            [0.25, 0.25, 0.75, 0.75],
            [2.0, 2.0, 2.0, 2.0],
            [-1.0, 0.5, 0.5, 3.0],
        ] {
            let poly = poly_from_roots(&roots);
            let m = companion(&poly);
            // contract accuracy: 1e-9 relative to the matrix norm
            let tol = 1e-9 * m.norm_inf().max(1.0);
            let mut lam = eigenvalues_4x4(&m).unwrap();
            lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut want = roots;
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (g, w) in lam.iter().zip(want) {
                assert_abs_diff_eq!(*g, w, epsilon = tol);
            }
        }
    }

    #[test]
    fn rotation_matrix_is_rejected() {
        // eigenvalues exp(+-i pi/2) twice: genuinely complex
        let m = Matrix::from_rows(&[
            vec![0.0, -1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, -1.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ]);
        assert!(matches!(
            eigenvalues_4x4(&m),
            Err(Error::ComplexRoots { .. })
        ));
    }

    #[test]
    fn tiny_negative_roots_clamp_to_zero() {
        let m = Matrix::from_rows(&[
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.5, 0.0, 0.0],
            vec![0.0, 0.0, -1e-10, 0.0],
            vec![0.0, 0.0, 0.0, 0.25],
        ]);
        let lam = eigenvalues_4x4(&m).unwrap();
        assert_eq!(lam[3], 0.0);
    }

    #[test]
    fn random_symmetric_psd_agrees_with_jacobi() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..300 {
            let mut m = Matrix::zeros(4, 4);
            for i in 0..4 {
                for j in i..4 {
                    let x = rng.gen_range(-1.0..1.0);
                    m[(i, j)] = x;
                    m[(j, i)] = x;
                }
            }
            let sym = crate::linalg::eigh_symmetric(&m).unwrap();
            let mut lam = eigenvalues_4x4(&m).unwrap();
            lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let scale = m.norm_inf().max(1.0);
            for (g, w) in lam.iter().zip(&sym.values) {
                assert!(
                    (g - w).abs() <= 1e-9 * scale,
                    "quartic {g} vs jacobi {w} (scale {scale})"
                );
            }
        }
    }
}
