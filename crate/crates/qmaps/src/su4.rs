//! Euler-angle parametrization of 4x4 density matrices over the SU(4)
//! generalized Gell-Mann generators: the diagonal core, the 12-factor
//! conjugation sandwich, a uniform-in-range sampler, and conversion of the
//! resulting matrices into Choi candidates.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{
    generator_exponential, hermitian_eigenvalues, partial_trace, ComplexMatrix, LinalgError,
    Subsystem,
};

#[derive(Debug, Error)]
pub enum Su4Error {
    #[error("{name} = {value} is outside its range [{lo}, {hi}]")]
    AngleOutOfRange {
        name: String,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("not a valid density matrix: {0}")]
    InvalidDensity(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The 15 generalized Gell-Mann generators of SU(4), in the standard order:
/// symmetric/antisymmetric pairs for levels (1,2), (1,3), (2,3), (1,4),
/// (2,4), (3,4) interleaved with the diagonal Cartan elements
/// Λ3 = diag(1,-1,0,0), Λ8 = diag(1,1,-2,0)/√3, Λ15 = diag(1,1,1,-3)/√6.
#[derive(Debug, Clone)]
pub struct Su4Generators {
    lambdas: Vec<ComplexMatrix>,
}

impl Su4Generators {
    /// Generator Λ_index for index in 1..=15.
    pub fn lambda(&self, index: usize) -> &ComplexMatrix {
        assert!(
            (1..=15).contains(&index),
            "generator index {index} out of range 1..=15"
        );
        &self.lambdas[index - 1]
    }

    pub fn all(&self) -> &[ComplexMatrix] {
        &self.lambdas
    }
}

fn symmetric_coupler(j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4).expect("dim 4");
    m.set(j, k, Complex64::new(1.0, 0.0));
    m.set(k, j, Complex64::new(1.0, 0.0));
    m
}

fn antisymmetric_coupler(j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4).expect("dim 4");
    m.set(j, k, Complex64::new(0.0, -1.0));
    m.set(k, j, Complex64::new(0.0, 1.0));
    m
}

fn diagonal_generator(values: [f64; 4]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4).expect("dim 4");
    for (i, &v) in values.iter().enumerate() {
        m.set(i, i, Complex64::new(v, 0.0));
    }
    m
}

/// Build the 15 generators. They are Hermitian, traceless and satisfy
/// tr(Λi Λj) = 2 δij.
pub fn build_generators() -> Su4Generators {
    let s3 = 3.0_f64.sqrt();
    let s6 = 6.0_f64.sqrt();
    let lambdas = vec![
        symmetric_coupler(0, 1),                                    // Λ1
        antisymmetric_coupler(0, 1),                                // Λ2
        diagonal_generator([1.0, -1.0, 0.0, 0.0]),                  // Λ3
        symmetric_coupler(0, 2),                                    // Λ4
        antisymmetric_coupler(0, 2),                                // Λ5
        symmetric_coupler(1, 2),                                    // Λ6
        antisymmetric_coupler(1, 2),                                // Λ7
        diagonal_generator([1.0 / s3, 1.0 / s3, -2.0 / s3, 0.0]),   // Λ8
        symmetric_coupler(0, 3),                                    // Λ9
        antisymmetric_coupler(0, 3),                                // Λ10
        symmetric_coupler(1, 3),                                    // Λ11
        antisymmetric_coupler(1, 3),                                // Λ12
        symmetric_coupler(2, 3),                                    // Λ13
        antisymmetric_coupler(2, 3),                                // Λ14
        diagonal_generator([1.0 / s6, 1.0 / s6, 1.0 / s6, -3.0 / s6]), // Λ15
    ];
    Su4Generators { lambdas }
}

/// Generator labels of the 12 sandwich factors, paired with α1..α12.
const EULER_FACTOR_GENERATORS: [usize; 12] = [3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2];

/// Twelve Euler angles and three core rotation angles.
///
/// Ranges: odd-numbered α in [0, π], even-numbered α in [0, π/2];
/// θ1 in [π/4, π/2], θ2 in [arccos(1/√3), π/2], θ3 in [π/3, π/2].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerParameters {
    pub alpha: [f64; 12],
    pub theta: [f64; 3],
}

/// The closed θ ranges, in order.
pub fn theta_ranges() -> [(f64, f64); 3] {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
    [
        (FRAC_PI_4, FRAC_PI_2),
        ((1.0 / 3.0_f64.sqrt()).acos(), FRAC_PI_2),
        (FRAC_PI_3, FRAC_PI_2),
    ]
}

fn alpha_range(index_one_based: usize) -> (f64, f64) {
    if index_one_based % 2 == 1 {
        (0.0, std::f64::consts::PI)
    } else {
        (0.0, std::f64::consts::FRAC_PI_2)
    }
}

impl EulerParameters {
    pub fn validate(&self) -> Result<(), Su4Error> {
        for (i, &a) in self.alpha.iter().enumerate() {
            let (lo, hi) = alpha_range(i + 1);
            if !(lo..=hi).contains(&a) {
                return Err(Su4Error::AngleOutOfRange {
                    name: format!("alpha{}", i + 1),
                    value: a,
                    lo,
                    hi,
                });
            }
        }
        for (i, (&t, (lo, hi))) in self.theta.iter().zip(theta_ranges()).enumerate() {
            if !(lo..=hi).contains(&t) {
                return Err(Su4Error::AngleOutOfRange {
                    name: format!("theta{}", i + 1),
                    value: t,
                    lo,
                    hi,
                });
            }
        }
        Ok(())
    }
}

/// Deterministic sampler of [`EulerParameters`], uniform and independent in
/// each parameter range.
///
/// Uniform in the parameters, not Haar-weighted: no Jacobian is applied.
pub struct EulerSampler {
    rng: ChaCha8Rng,
}

impl EulerSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> EulerParameters {
        let mut alpha = [0.0; 12];
        for (i, a) in alpha.iter_mut().enumerate() {
            let (lo, hi) = alpha_range(i + 1);
            *a = lo + (hi - lo) * self.rng.gen::<f64>();
        }
        let mut theta = [0.0; 3];
        for (t, (lo, hi)) in theta.iter_mut().zip(theta_ranges()) {
            *t = lo + (hi - lo) * self.rng.gen::<f64>();
        }
        EulerParameters { alpha, theta }
    }
}

/// First draw of a fresh sampler seeded with `seed`.
pub fn sample_euler(seed: u64) -> EulerParameters {
    EulerSampler::new(seed).sample()
}

/// The diagonal core of the parametrization:
/// 1/4 + (1/2)(-1+2a²)b²c² Λ3 + (1/(2√3))(-2+3b²)c² Λ8 + (1/(2√6))(-3+4c²) Λ15
/// with a² = sin²θ1, b² = sin²θ2, c² = sin²θ3.
pub fn core_diagonal(theta: [f64; 3]) -> Result<ComplexMatrix, Su4Error> {
    let params = EulerParameters {
        alpha: [0.0; 12],
        theta,
    };
    params.validate()?;

    let a2 = theta[0].sin().powi(2);
    let b2 = theta[1].sin().powi(2);
    let c2 = theta[2].sin().powi(2);

    let gens = build_generators();
    let s3 = 3.0_f64.sqrt();
    let s6 = 6.0_f64.sqrt();

    let quarter = ComplexMatrix::identity(4)?.scale(Complex64::new(0.25, 0.0));
    let term3 = gens
        .lambda(3)
        .scale(Complex64::new(0.5 * (-1.0 + 2.0 * a2) * b2 * c2, 0.0));
    let term8 = gens
        .lambda(8)
        .scale(Complex64::new((-2.0 + 3.0 * b2) * c2 / (2.0 * s3), 0.0));
    let term15 = gens
        .lambda(15)
        .scale(Complex64::new((-3.0 + 4.0 * c2) / (2.0 * s6), 0.0));

    Ok(quarter.add(&term3)?.add(&term8)?.add(&term15)?)
}

/// The ordered product of the 12 generator exponentials,
/// e^{iΛ3 α1} e^{iΛ2 α2} e^{iΛ3 α3} e^{iΛ5 α4} e^{iΛ3 α5} e^{iΛ10 α6}
/// e^{iΛ3 α7} e^{iΛ2 α8} e^{iΛ3 α9} e^{iΛ5 α10} e^{iΛ3 α11} e^{iΛ2 α12}.
pub fn euler_unitary(alpha: [f64; 12]) -> Result<ComplexMatrix, Su4Error> {
    let gens = build_generators();
    let mut u = ComplexMatrix::identity(4)?;
    for (factor, &angle) in EULER_FACTOR_GENERATORS.iter().zip(alpha.iter()) {
        let exp = generator_exponential(gens.lambda(*factor), angle)?;
        u = u.matmul(&exp)?;
    }
    Ok(u)
}

/// A validated 4x4 density matrix: Hermitian, unit trace, positive
/// semidefinite to within 1e-10.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityMatrix4 {
    matrix: ComplexMatrix,
}

impl DensityMatrix4 {
    pub fn new(matrix: ComplexMatrix) -> Result<Self, Su4Error> {
        if matrix.dim() != 4 {
            return Err(Su4Error::InvalidDensity(format!(
                "dimension {} is not 4",
                matrix.dim()
            )));
        }
        let (defect, r, c) = matrix.hermiticity_defect();
        if defect > 1e-10 {
            return Err(Su4Error::InvalidDensity(format!(
                "hermiticity defect {defect:.3e} at ({r}, {c})"
            )));
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > 1e-12 {
            return Err(Su4Error::InvalidDensity(format!(
                "trace {trace} deviates from 1"
            )));
        }
        let min_eig = hermitian_eigenvalues(&matrix)?.min();
        if min_eig < -1e-10 {
            return Err(Su4Error::InvalidDensity(format!(
                "least eigenvalue {min_eig:.3e} is negative"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> Result<crate::linalg::RealSpectrum, Su4Error> {
        Ok(hermitian_eigenvalues(&self.matrix)?)
    }
}

/// U(α) · core(θ) · U(α)†. The spectrum equals the core diagonal.
pub fn density_from_euler(params: &EulerParameters) -> Result<DensityMatrix4, Su4Error> {
    params.validate()?;
    let core = core_diagonal(params.theta)?;
    let u = euler_unitary(params.alpha)?;
    let rho = u.matmul(&core)?.matmul(&u.adjoint())?;
    // Conjugation keeps hermiticity up to roundoff; trim it before validating.
    DensityMatrix4::new(rho.symmetrized())
}

/// A density matrix recast as a Choi candidate (doubled trace) with its
/// trace-preservation and unitality flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChoiCandidate {
    pub choi: ComplexMatrix,
    pub trace_preserving: bool,
    pub unital: bool,
}

/// choi = 2ρ; the flags test the partial traces against the identity
/// within 1e-9.
pub fn choi_candidate_from_density(rho: &DensityMatrix4) -> ChoiCandidate {
    let choi = rho.matrix().scale(Complex64::new(2.0, 0.0));
    let id = ComplexMatrix::identity(2).expect("dim 2");
    let tr2 = partial_trace(&choi, Subsystem::Second).expect("choi is 4x4");
    let tr1 = partial_trace(&choi, Subsystem::First).expect("choi is 4x4");
    ChoiCandidate {
        trace_preserving: tr2.max_abs_diff(&id) <= 1e-9,
        unital: tr1.max_abs_diff(&id) <= 1e-9,
        choi,
    }
}
