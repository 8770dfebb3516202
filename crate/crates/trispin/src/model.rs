//! The three-qubit chain: Hamiltonian assembly and the closed-form
//! eigensystem with per-level pairwise concurrences.
//!
//! Basis convention: ket |b1 b2 b3> lives at index 4*b1 + 2*b2 + b3, so
//! qubit 1 is the leftmost label and the most significant bit. The sz sign
//! convention is sz|1> = +|1>; the numeric/analytic agreement tests pin both
//! choices (|000> must carry field energy -3h).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, Matrix};

/// Couplings of the chain: XX exchange `j`, z-field `h`, three-spin
/// strength `k`. All energies; `j` of either sign (positive is
/// antiferromagnetic). Units put k_B = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub j: f64,
    pub h: f64,
    pub k: f64,
}

impl ModelParams {
    pub fn new(j: f64, h: f64, k: f64) -> Self {
        ModelParams { j, h, k }
    }

    /// Half-splitting of the symmetric one- and two-excitation blocks:
    /// a = sqrt(8 J^2 + k^2).
    pub fn splitting(&self) -> f64 {
        (8.0 * self.j * self.j + self.k * self.k).sqrt()
    }
}

/// One of the three qubit pairs of the chain. (1,3) is the alternate
/// (next-nearest) pair; (1,2) and (2,3) are the nearest-neighbor bonds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    OneTwo,
    TwoThree,
    OneThree,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::OneTwo, Pair::TwoThree, Pair::OneThree];

    /// The qubit traced out when reducing to this pair.
    pub fn complement_qubit(self) -> usize {
        match self {
            Pair::OneTwo => 3,
            Pair::TwoThree => 1,
            Pair::OneThree => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Pair::OneTwo => "12",
            Pair::TwoThree => "23",
            Pair::OneThree => "13",
        }
    }
}

impl FromStr for Pair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "12" => Ok(Pair::OneTwo),
            "23" => Ok(Pair::TwoThree),
            "13" => Ok(Pair::OneThree),
            other => Err(Error::BadPair(other.to_string())),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn three_site(a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    kron(&kron(a, b), c)
}

/// Assembles the 8x8 Hamiltonian
/// `J (sx1 sx2 + sy1 sy2 + sx2 sx3 + sy2 sy3) + h (sz1 + sz2 + sz3) +
/// k (sx1 sz2 sx3 + sy1 sz2 sy3)`. The result is symmetric entry for entry.
pub fn build_hamiltonian(p: &ModelParams) -> Matrix {
    let id = pauli::identity2();
    let x = pauli::sigma_x();
    let y = pauli::sigma_y_real();
    let z = pauli::sigma_z();

    // sy sy = -(y_real (x) y_real)
    let mut bonds = three_site(&x, &x, &id);
    bonds.axpy(-1.0, &three_site(&y, &y, &id));
    bonds = bonds.add(&three_site(&id, &x, &x));
    bonds.axpy(-1.0, &three_site(&id, &y, &y));

    let mut field = three_site(&z, &id, &id);
    field = field.add(&three_site(&id, &z, &id));
    field = field.add(&three_site(&id, &id, &z));

    let mut triple = three_site(&x, &z, &x);
    triple.axpy(-1.0, &three_site(&y, &z, &y));

    let mut h = Matrix::zeros(8, 8);
    h.axpy(p.j, &bonds);
    h.axpy(p.h, &field);
    h.axpy(p.k, &triple);
    h
}

/// One closed-form eigenlevel: energy, unit eigenvector, and the pairwise
/// concurrences of its reduced two-qubit states.
#[derive(Clone, Debug)]
pub struct AnalyticLevel {
    /// 1-based level index following the tabulated order.
    pub index: usize,
    pub energy: f64,
    pub state: [f64; 8],
    pub c13: f64,
    pub c12: f64,
    pub c23: f64,
}

impl AnalyticLevel {
    pub fn pair_concurrence(&self, pair: Pair) -> f64 {
        match pair {
            Pair::OneTwo => self.c12,
            Pair::TwoThree => self.c23,
            Pair::OneThree => self.c13,
        }
    }
}

/// The full eight-level closed-form spectrum at fixed parameters.
#[derive(Clone, Debug)]
pub struct AnalyticSpectrum {
    pub params: ModelParams,
    /// a = sqrt(8 J^2 + k^2).
    pub a: f64,
    levels: Vec<AnalyticLevel>,
}

// basis indices of the kets appearing in the closed-form states
const K001: usize = 1;
const K010: usize = 2;
const K011: usize = 3;
const K100: usize = 4;
const K101: usize = 5;
const K110: usize = 6;
const K111: usize = 7;

/// Closed-form eigensystem. Degenerates at J = 0, where the mixing angles
/// divide by zero; the numeric route stays available there.
pub fn analytic_spectrum(p: &ModelParams) -> Result<AnalyticSpectrum> {
    if p.j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let (j, h, k) = (p.j, p.h, p.k);
    let a = p.splitting();
    let dp = (8.0 * j * j + (k - a) * (k - a)).sqrt();
    let dq = (8.0 * j * j + (k + a) * (k + a)).sqrt();
    let root8 = 8.0_f64.sqrt();
    let (sin_p, cos_p) = (root8 * j.abs() / dp, (k - a) / dp);
    let (sin_q, cos_q) = (root8 * j.abs() / dq, (k + a) / dq);
    let sgn = j.signum();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;

    let c5 = 4.0 * j * j / (a * (a - k));
    let c6 = 4.0 * j * j / (a * (a + k));
    let cnn = 2.0 * j.abs() / a; // nearest-neighbor value shared by levels 5-8

    let mut levels = Vec::with_capacity(8);
    let mut push = |index: usize, energy: f64, amplitudes: &[(usize, f64)], c13: f64, cnn_i: f64| {
        let mut state = [0.0; 8];
        for &(pos, amp) in amplitudes {
            state[pos] = amp;
        }
        levels.push(AnalyticLevel {
            index,
            energy,
            state,
            c13,
            c12: cnn_i,
            c23: cnn_i,
        });
    };

    push(1, -3.0 * h, &[(0, 1.0)], 0.0, 0.0);
    push(2, 3.0 * h, &[(K111, 1.0)], 0.0, 0.0);
    push(
        3,
        h - 2.0 * k,
        &[(K110, -inv_sqrt2), (K011, inv_sqrt2)],
        1.0,
        0.0,
    );
    push(
        4,
        -h + 2.0 * k,
        &[(K100, -inv_sqrt2), (K001, inv_sqrt2)],
        1.0,
        0.0,
    );
    push(
        5,
        -h - k - a,
        &[
            (K100, sin_p * inv_sqrt2),
            (K010, sgn * cos_p),
            (K001, sin_p * inv_sqrt2),
        ],
        c5,
        cnn,
    );
    push(
        6,
        h + k - a,
        &[
            (K110, sin_q * inv_sqrt2),
            (K101, -sgn * cos_q),
            (K011, sin_q * inv_sqrt2),
        ],
        c6,
        cnn,
    );
    push(
        7,
        -h - k + a,
        &[
            (K100, sin_q * inv_sqrt2),
            (K010, sgn * cos_q),
            (K001, sin_q * inv_sqrt2),
        ],
        c6,
        cnn,
    );
    push(
        8,
        h + k + a,
        &[
            (K110, sin_p * inv_sqrt2),
            (K101, -sgn * cos_p),
            (K011, sin_p * inv_sqrt2),
        ],
        c5,
        cnn,
    );

    Ok(AnalyticSpectrum {
        params: *p,
        a,
        levels,
    })
}

impl AnalyticSpectrum {
    pub fn levels(&self) -> &[AnalyticLevel] {
        &self.levels
    }

    /// 1-based level access.
    pub fn level(&self, index: usize) -> Result<&AnalyticLevel> {
        if (1..=8).contains(&index) {
            Ok(&self.levels[index - 1])
        } else {
            Err(Error::BadIndex { index, limit: 8 })
        }
    }

    pub fn energies(&self) -> [f64; 8] {
        let mut e = [0.0; 8];
        for (i, level) in self.levels.iter().enumerate() {
            e[i] = level.energy;
        }
        e
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies().iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn spectral_range(&self) -> f64 {
        let e = self.energies();
        let lo = e.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = e.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    }

    /// Level indices within `1e-9 * spectral range` of the minimum energy.
    /// Crossings of the affine-in-h energies are sharp, so the tolerance can
    /// stay at rounding scale.
    pub fn ground_levels(&self) -> Vec<usize> {
        let e = self.energies();
        let min = self.ground_energy();
        let tol = 1e-9 * self.spectral_range().max(f64::MIN_POSITIVE);
        (0..8).filter(|&i| e[i] - min <= tol).map(|i| i + 1).collect()
    }
}
