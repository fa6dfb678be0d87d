//! Single-qubit dynamical maps in the Pauli, affine and general-unital
//! parametrizations: Choi matrix assembly, closed-form spectra, CP/NCP
//! classification, Kraus-rank strata, and sampled positivity checks.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{
    self, hermitian_eigenvalues, kronecker, ComplexMatrix, LinalgError, RealSpectrum, Subsystem,
};

/// Default absolute tolerance for classification and rank decisions.
pub const DEFAULT_CLASS_TOL: f64 = 1e-12;

/// Threshold on the sampled minimum output eigenvalue below which a map is
/// declared non-positive.
pub const POSITIVITY_TOL: f64 = 1e-9;

/// Default polar resolution of the Bloch-sphere positivity mesh
/// (the azimuthal resolution is twice this).
pub const DEFAULT_MESH_ORDER: usize = 64;

#[derive(Debug, Error)]
pub enum ChannelError {
    #[error("Bloch vector norm {norm:.6} exceeds 1; not a valid qubit state")]
    BlochOutOfBall { norm: f64 },
    #[error("Pauli axis {0} is invalid (expected 1, 2 or 3)")]
    InvalidPauliAxis(usize),
    #[error("Kraus strata are defined on CPTP channels only; this channel classifies as {0}")]
    NotCptp(ClassLabel),
    #[error("mesh order {0} is too coarse (minimum 2)")]
    MeshTooCoarse(usize),
    #[error("classification tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A qubit state as its Bloch vector; valid states fill the unit ball.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitState {
    pub bloch: [f64; 3],
}

impl QubitState {
    /// Validates |bloch| <= 1 (with a 1e-12 slack for roundoff).
    pub fn new(bloch: [f64; 3]) -> Result<Self, ChannelError> {
        let norm = bloch_norm(bloch);
        if norm > 1.0 + 1e-12 {
            return Err(ChannelError::BlochOutOfBall { norm });
        }
        Ok(Self { bloch })
    }

    /// Skips the ball-membership check. Used for map outputs, which leave the
    /// ball exactly when the map is not positive.
    pub fn from_bloch_unchecked(bloch: [f64; 3]) -> Self {
        Self { bloch }
    }

    pub fn norm(&self) -> f64 {
        bloch_norm(self.bloch)
    }

    /// The density matrix (1 + a·σ)/2.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let [a1, a2, a3] = self.bloch;
        ComplexMatrix::from_entries(
            2,
            vec![
                Complex64::new((1.0 + a3) / 2.0, 0.0),
                Complex64::new(a1 / 2.0, -a2 / 2.0),
                Complex64::new(a1 / 2.0, a2 / 2.0),
                Complex64::new((1.0 - a3) / 2.0, 0.0),
            ],
        )
        .expect("2x2 entries")
    }
}

fn bloch_norm(a: [f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

/// A Pauli channel: three real scaling factors, one per Bloch axis.
///
/// No constraint is placed on construction; cube and tetrahedron membership
/// are classification results, not invariants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliChannel {
    pub x: [f64; 3],
}

impl PauliChannel {
    pub fn new(x: [f64; 3]) -> Self {
        Self { x }
    }

    /// Choi matrix; identical to the affine embedding with zero translation.
    pub fn choi(&self) -> ComplexMatrix {
        AffineChannel::from(*self).choi()
    }

    /// The four closed-form Choi eigenvalues in their natural order:
    /// (1 + x1 - x2 - x3)/2, (1 - x1 + x2 - x3)/2,
    /// (1 - x1 - x2 + x3)/2, (1 + x1 + x2 + x3)/2.
    pub fn raw_eigenvalues(&self) -> [f64; 4] {
        let [x1, x2, x3] = self.x;
        [
            0.5 * (1.0 + x1 - x2 - x3),
            0.5 * (1.0 - x1 + x2 - x3),
            0.5 * (1.0 - x1 - x2 + x3),
            0.5 * (1.0 + x1 + x2 + x3),
        ]
    }

    /// Closed-form Choi spectrum, sorted ascending.
    pub fn eigenvalues(&self) -> RealSpectrum {
        RealSpectrum::from_unsorted(self.raw_eigenvalues().to_vec())
    }

    /// det T = x1 x2 x3 (the T matrix of a Pauli channel is diagonal).
    pub fn det_t(&self) -> f64 {
        self.x[0] * self.x[1] * self.x[2]
    }

    /// Classify as CPTP, NCP-but-positive, or not positive.
    ///
    /// Positivity is the cube test max |x_i| <= 1; complete positivity is the
    /// sign of the least closed-form eigenvalue.
    pub fn classify(&self, tol: f64) -> Result<ChannelClass, ChannelError> {
        if tol <= 0.0 {
            return Err(ChannelError::NonPositiveTolerance(tol));
        }
        let min_eig = self
            .raw_eigenvalues()
            .iter()
            .fold(f64::INFINITY, |m, &l| m.min(l));
        let (worst_axis, worst_abs) = self
            .x
            .iter()
            .map(|v| v.abs())
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
            .expect("three components");

        let label = if worst_abs > 1.0 + tol {
            ClassLabel::NonPositive
        } else if min_eig >= -tol {
            ClassLabel::Cptp
        } else {
            ClassLabel::NcpPositive
        };
        let witness = if label == ClassLabel::NonPositive {
            // A pure state along the over-stretched axis leaves the ball.
            let mut w = [0.0; 3];
            w[worst_axis] = self.x[worst_axis].signum();
            Some(w)
        } else {
            None
        };
        Ok(ChannelClass {
            label,
            min_choi_eigenvalue: min_eig,
            witness,
        })
    }

    /// Kraus rank and the stratum of the CP tetrahedron it selects.
    ///
    /// Defined on CPTP channels only; anything else is rejected.
    pub fn kraus_stratum(&self, tol: f64) -> Result<KrausStratum, ChannelError> {
        let class = self.classify(tol)?;
        if class.label != ClassLabel::Cptp {
            return Err(ChannelError::NotCptp(class.label));
        }
        let rank = self
            .raw_eigenvalues()
            .iter()
            .filter(|&&l| l > tol)
            .count() as u8;
        Ok(KrausStratum::from_rank(rank))
    }

    /// Post-compose with the Pauli unitary σ_k (k in 1..=3): x_k keeps its
    /// sign, the other two components flip. Permutes the Choi spectrum.
    pub fn postcompose(&self, k: usize) -> Result<PauliChannel, ChannelError> {
        if !(1..=3).contains(&k) {
            return Err(ChannelError::InvalidPauliAxis(k));
        }
        let mut x = [0.0; 3];
        for (j, out) in x.iter_mut().enumerate() {
            *out = if j == k - 1 { self.x[j] } else { -self.x[j] };
        }
        Ok(PauliChannel::new(x))
    }
}

/// A trace-preserving qubit map in affine form: Bloch scaling factors `x`
/// plus a translation `t`. Pauli channels embed with t = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineChannel {
    pub x: [f64; 3],
    pub t: [f64; 3],
}

impl From<PauliChannel> for AffineChannel {
    fn from(p: PauliChannel) -> Self {
        Self { x: p.x, t: [0.0; 3] }
    }
}

impl AffineChannel {
    pub fn new(x: [f64; 3], t: [f64; 3]) -> Self {
        Self { x, t }
    }

    pub fn is_unital(&self) -> bool {
        self.t == [0.0; 3]
    }

    /// Choi matrix with block (i, j) equal to the map applied to |i><j|:
    ///
    /// ```text
    ///     1/2 [ 1+t3+x3   t1-i t2   0         x1+x2   ]
    ///         [ t1+i t2   1-t3-x3   x1-x2     0       ]
    ///         [ 0         x1-x2     1+t3-x3   t1-i t2 ]
    ///         [ x1+x2     0         t1+i t2   1-t3+x3 ]
    /// ```
    pub fn choi(&self) -> ComplexMatrix {
        let [x1, x2, x3] = self.x;
        let [t1, t2, t3] = self.t;
        let h = 0.5;
        let zero = Complex64::new(0.0, 0.0);
        let tm = Complex64::new(h * t1, -h * t2);
        let tp = Complex64::new(h * t1, h * t2);
        let xp = Complex64::new(h * (x1 + x2), 0.0);
        let xm = Complex64::new(h * (x1 - x2), 0.0);
        ComplexMatrix::from_entries(
            4,
            vec![
                Complex64::new(h * (1.0 + t3 + x3), 0.0), tm, zero, xp,
                tp, Complex64::new(h * (1.0 - t3 - x3), 0.0), xm, zero,
                zero, xm, Complex64::new(h * (1.0 + t3 - x3), 0.0), tm,
                xp, zero, tp, Complex64::new(h * (1.0 - t3 + x3), 0.0),
            ],
        )
        .expect("4x4 entries")
    }

    /// The map action on a Bloch vector: a_i -> x_i a_i + t_i.
    pub fn apply(&self, state: &QubitState) -> QubitState {
        QubitState::from_bloch_unchecked(self.map_bloch(state.bloch))
    }
}

/// Parametrized Choi matrix of a general unital trace-preserving qubit map:
/// real `a` on the corners of the diagonal, complex `x`, `y`, `z`, `w`
/// filling the rest. Both partial traces equal the identity for every
/// parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralUnitalChoi {
    pub a: f64,
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub w: Complex64,
}

impl GeneralUnitalChoi {
    pub fn new(a: f64, x: Complex64, y: Complex64, z: Complex64, w: Complex64) -> Self {
        Self { a, x, y, z, w }
    }

    /// The embedding of a Pauli channel: a = (1+x3)/2, z = (x1+x2)/2,
    /// w = (x1-x2)/2, x = y = 0.
    pub fn from_pauli(p: &PauliChannel) -> Self {
        let [x1, x2, x3] = p.x;
        Self {
            a: (1.0 + x3) / 2.0,
            x: Complex64::new(0.0, 0.0),
            y: Complex64::new(0.0, 0.0),
            z: Complex64::new((x1 + x2) / 2.0, 0.0),
            w: Complex64::new((x1 - x2) / 2.0, 0.0),
        }
    }

    /// Assembles the 4x4 matrix. Hermitian by construction.
    pub fn matrix(&self) -> ComplexMatrix {
        let Self { a, x, y, z, w } = *self;
        let ar = Complex64::new(a, 0.0);
        let br = Complex64::new(1.0 - a, 0.0);
        ComplexMatrix::from_entries(
            4,
            vec![
                ar, x, y, z,
                x.conj(), br, w, -y,
                y.conj(), w.conj(), br, -x,
                z.conj(), -y.conj(), -x.conj(), ar,
            ],
        )
        .expect("4x4 entries")
    }

    /// The real 3x3 T matrix of the affine (Bloch) action.
    pub fn affine_t(&self) -> ComplexMatrix {
        let t = self.t_rows();
        ComplexMatrix::from_real(3, &[
            t[0][0], t[0][1], t[0][2],
            t[1][0], t[1][1], t[1][2],
            t[2][0], t[2][1], t[2][2],
        ])
        .expect("3x3 entries")
    }

    fn t_rows(&self) -> [[f64; 3]; 3] {
        let Self { a, x, y, z, w } = *self;
        let wz = w + z;
        let zw = z - w;
        [
            [wz.re, -wz.im, 2.0 * x.re],
            [zw.im, zw.re, 2.0 * x.im],
            [2.0 * y.re, -2.0 * y.im, 2.0 * a - 1.0],
        ]
    }
}

/// Classification outcome of a channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassLabel {
    Cptp,
    NcpPositive,
    NonPositive,
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassLabel::Cptp => "CPTP",
            ClassLabel::NcpPositive => "NCP_POSITIVE",
            ClassLabel::NonPositive => "NON_POSITIVE",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelClass {
    pub label: ClassLabel,
    pub min_choi_eigenvalue: f64,
    /// A Bloch vector whose image leaves the ball, when positivity fails.
    pub witness: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Stratum {
    Vertex,
    Edge,
    Face,
    Interior,
}

/// Kraus rank of a CPTP Pauli channel and the tetrahedron stratum it lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrausStratum {
    pub rank: u8,
    pub stratum: Stratum,
}

impl KrausStratum {
    fn from_rank(rank: u8) -> Self {
        let stratum = match rank {
            1 => Stratum::Vertex,
            2 => Stratum::Edge,
            3 => Stratum::Face,
            _ => Stratum::Interior,
        };
        Self { rank, stratum }
    }
}

/// The Eq.-style CP inequalities |1 ± x3| >= |x1 ± x2|, with slack `tol`
/// applied on the eigenvalue scale (the factor 2 converts between the
/// inequality gap and the closed-form eigenvalues).
pub fn cp_inequalities_hold(x: [f64; 3], tol: f64) -> bool {
    let [x1, x2, x3] = x;
    (1.0 + x3).abs() - (x1 + x2).abs() >= -2.0 * tol
        && (1.0 - x3).abs() - (x1 - x2).abs() >= -2.0 * tol
}

/// Conjugate the output side of a Choi matrix by a qubit unitary:
/// B -> (1 ⊗ U) B (1 ⊗ U†). Preserves the spectrum.
pub fn unitary_conjugate_choi(
    b: &ComplexMatrix,
    u: &ComplexMatrix,
) -> Result<ComplexMatrix, ChannelError> {
    if b.dim() != 4 {
        return Err(LinalgError::DimensionMismatch { expected: 4, got: b.dim() }.into());
    }
    if u.dim() != 2 {
        return Err(LinalgError::DimensionMismatch { expected: 2, got: u.dim() }.into());
    }
    linalg::ensure_unitary(u)?;
    let id2 = ComplexMatrix::identity(2)?;
    let big_u = kronecker(&id2, u)?;
    Ok(big_u.matmul(b)?.matmul(&big_u.adjoint())?)
}

/// Maps with a closed-form action on Bloch vectors.
pub trait BlochMap {
    fn map_bloch(&self, a: [f64; 3]) -> [f64; 3];
}

impl BlochMap for AffineChannel {
    fn map_bloch(&self, a: [f64; 3]) -> [f64; 3] {
        [
            self.x[0] * a[0] + self.t[0],
            self.x[1] * a[1] + self.t[1],
            self.x[2] * a[2] + self.t[2],
        ]
    }
}

impl BlochMap for PauliChannel {
    fn map_bloch(&self, a: [f64; 3]) -> [f64; 3] {
        [self.x[0] * a[0], self.x[1] * a[1], self.x[2] * a[2]]
    }
}

impl BlochMap for GeneralUnitalChoi {
    fn map_bloch(&self, a: [f64; 3]) -> [f64; 3] {
        let t = self.t_rows();
        [
            t[0][0] * a[0] + t[0][1] * a[1] + t[0][2] * a[2],
            t[1][0] * a[0] + t[1][1] * a[1] + t[1][2] * a[2],
            t[2][0] * a[0] + t[2][1] * a[1] + t[2][2] * a[2],
        ]
    }
}

/// Result of a sampled positivity scan over pure input states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PositivityReport {
    pub is_positive: bool,
    pub min_output_eigenvalue: f64,
    pub witness: QubitState,
}

/// Scan the Bloch sphere for positivity violations.
///
/// Pure states suffice by convexity of the state set. The scan walks a
/// `mesh_order x 2*mesh_order` polar-azimuthal grid plus 10^4 pseudo-random
/// unit vectors from a fixed internal stream, so the result is deterministic.
/// A negative verdict is sound (the witness refutes positivity); a positive
/// verdict is only as strong as the sampling.
pub fn numeric_positivity_check(
    map: &impl BlochMap,
    mesh_order: usize,
) -> Result<PositivityReport, ChannelError> {
    if mesh_order < 2 {
        return Err(ChannelError::MeshTooCoarse(mesh_order));
    }
    let mut min_eig = f64::INFINITY;
    let mut witness = [0.0, 0.0, 1.0];
    let mut consider = |a: [f64; 3]| {
        // Output state (1 + b·σ)/2 has least eigenvalue (1 - |b|)/2.
        let eig = 0.5 * (1.0 - bloch_norm(map.map_bloch(a)));
        if eig < min_eig {
            min_eig = eig;
            witness = a;
        }
    };

    let polar = mesh_order;
    let azimuthal = 2 * mesh_order;
    for i in 0..polar {
        let theta = std::f64::consts::PI * i as f64 / (polar - 1) as f64;
        let (sin_t, cos_t) = theta.sin_cos();
        for j in 0..azimuthal {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / azimuthal as f64;
            let (sin_p, cos_p) = phi.sin_cos();
            consider([sin_t * cos_p, sin_t * sin_p, cos_t]);
        }
    }

    use rand::{Rng, SeedableRng};
    // Fixed stream: the check is a pure function of (map, mesh_order).
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51_b1_0c_4);
    for _ in 0..10_000 {
        consider(random_unit_vector(&mut rng));
    }

    Ok(PositivityReport {
        is_positive: min_eig >= -POSITIVITY_TOL,
        min_output_eigenvalue: min_eig,
        witness: QubitState::from_bloch_unchecked(witness),
    })
}

/// Marsaglia's method: uniform on the unit sphere using only uniform draws.
fn random_unit_vector(rng: &mut impl rand::Rng) -> [f64; 3] {
    loop {
        let u = 2.0 * rng.gen::<f64>() - 1.0;
        let v = 2.0 * rng.gen::<f64>() - 1.0;
        let s = u * u + v * v;
        if s < 1.0 && s > 0.0 {
            let r = (1.0 - s).sqrt();
            return [2.0 * u * r, 2.0 * v * r, 1.0 - 2.0 * s];
        }
    }
}

/// Classify an affine channel: positivity by sphere scan, complete
/// positivity by the least Choi eigenvalue.
pub fn classify_affine(
    c: &AffineChannel,
    tol: f64,
    mesh_order: usize,
) -> Result<ChannelClass, ChannelError> {
    if tol <= 0.0 {
        return Err(ChannelError::NonPositiveTolerance(tol));
    }
    let min_eig = hermitian_eigenvalues(&c.choi())?.min();
    let report = numeric_positivity_check(c, mesh_order)?;
    let (label, witness) = if !report.is_positive {
        (ClassLabel::NonPositive, Some(report.witness.bloch))
    } else if min_eig >= -tol {
        (ClassLabel::Cptp, None)
    } else {
        (ClassLabel::NcpPositive, None)
    };
    Ok(ChannelClass {
        label,
        min_choi_eigenvalue: min_eig,
        witness,
    })
}

/// Classify a general unital map the same way.
pub fn classify_general_unital(
    g: &GeneralUnitalChoi,
    tol: f64,
    mesh_order: usize,
) -> Result<ChannelClass, ChannelError> {
    if tol <= 0.0 {
        return Err(ChannelError::NonPositiveTolerance(tol));
    }
    let min_eig = hermitian_eigenvalues(&g.matrix())?.min();
    let report = numeric_positivity_check(g, mesh_order)?;
    let (label, witness) = if !report.is_positive {
        (ClassLabel::NonPositive, Some(report.witness.bloch))
    } else if min_eig >= -tol {
        (ClassLabel::Cptp, None)
    } else {
        (ClassLabel::NcpPositive, None)
    };
    Ok(ChannelClass {
        label,
        min_choi_eigenvalue: min_eig,
        witness,
    })
}

/// A general unital map found by [`blowup_search`]: numerically positive yet
/// with a Choi eigenvalue beyond the Pauli bound of 2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlowupFinding {
    pub channel: ChannelSpec,
    pub min_choi_eigenvalue: f64,
    pub max_abs_choi_eigenvalue: f64,
    pub is_positive: bool,
}

/// Search the general-unital parameter box for maps that pass the sampled
/// positivity check while a Choi eigenvalue exceeds 2 in absolute value.
///
/// Parameters are drawn uniformly: a in [-scale, 1 + scale], each real and
/// imaginary part of x, y, z, w in [-scale, scale]. Trials are chunked with
/// one RNG stream per chunk, so the result is independent of worker count.
/// Best effort: an empty list is a valid outcome.
pub fn blowup_search(trials: u64, seed: u64, scale: f64) -> Vec<BlowupFinding> {
    use rand::{Rng, SeedableRng};
    const CHUNK: u64 = 4096;
    let chunks = trials.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let len = CHUNK.min(trials - chunk * CHUNK);
            let mut found = Vec::new();
            for _ in 0..len {
                let a = -scale + (1.0 + 2.0 * scale) * rng.gen::<f64>();
                let mut parts = [0.0_f64; 8];
                for p in parts.iter_mut() {
                    *p = scale * (2.0 * rng.gen::<f64>() - 1.0);
                }
                let g = GeneralUnitalChoi::new(
                    a,
                    Complex64::new(parts[0], parts[1]),
                    Complex64::new(parts[2], parts[3]),
                    Complex64::new(parts[4], parts[5]),
                    Complex64::new(parts[6], parts[7]),
                );
                let spectrum = hermitian_eigenvalues(&g.matrix())
                    .expect("general-unital Choi is Hermitian by construction");
                let max_abs = spectrum.max_abs();
                if max_abs <= 2.0 {
                    continue;
                }
                let report = numeric_positivity_check(&g, DEFAULT_MESH_ORDER)
                    .expect("mesh order is valid");
                if report.is_positive {
                    found.push(BlowupFinding {
                        channel: ChannelSpec::from(&g),
                        min_choi_eigenvalue: spectrum.min(),
                        max_abs_choi_eigenvalue: max_abs,
                        is_positive: true,
                    });
                }
            }
            found
        })
        .flatten()
        .collect()
}

/// JSON interchange form of a channel. Complex values serialize as
/// `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelSpec {
    Pauli { x: [f64; 3] },
    Affine { x: [f64; 3], t: [f64; 3] },
    GeneralUnital { params: GeneralUnitalParams },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralUnitalParams {
    pub a: f64,
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: [f64; 2],
    pub w: [f64; 2],
}

impl From<&PauliChannel> for ChannelSpec {
    fn from(p: &PauliChannel) -> Self {
        ChannelSpec::Pauli { x: p.x }
    }
}

impl From<&AffineChannel> for ChannelSpec {
    fn from(c: &AffineChannel) -> Self {
        ChannelSpec::Affine { x: c.x, t: c.t }
    }
}

impl From<&GeneralUnitalChoi> for ChannelSpec {
    fn from(g: &GeneralUnitalChoi) -> Self {
        ChannelSpec::GeneralUnital {
            params: GeneralUnitalParams {
                a: g.a,
                x: [g.x.re, g.x.im],
                y: [g.y.re, g.y.im],
                z: [g.z.re, g.z.im],
                w: [g.w.re, g.w.im],
            },
        }
    }
}

impl From<&GeneralUnitalParams> for GeneralUnitalChoi {
    fn from(p: &GeneralUnitalParams) -> Self {
        GeneralUnitalChoi::new(
            p.a,
            Complex64::new(p.x[0], p.x[1]),
            Complex64::new(p.y[0], p.y[1]),
            Complex64::new(p.z[0], p.z[1]),
            Complex64::new(p.w[0], p.w[1]),
        )
    }
}
