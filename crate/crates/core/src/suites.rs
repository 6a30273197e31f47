//! Aggregated verification runs: one function per check family, and
//! [`verify_all`] running them in order for the CLI.

use std::path::PathBuf;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    commutator, conjugation_report, contract, contraction_slopes, embed_quaplectic, format_exact, jacobi_report,
    tensor_form_report, Canonical, ContractionCase, Element, LieAlgebra, LorentzGenerator, Quaplectic,
};
use crate::error::{Error, Result};
use crate::fock::{casimir_report, verify_rep, CasimirReport, FockSpace, GeneratorTable, RepReport};
use crate::gaussian::{
    gaussian_covariance, symplectic_defect, symplectic_eigenvalues, symplectic_form, williamson, Mat8,
    SqueezeParameters, Vec8,
};
use crate::invariants::{
    born_green_spectrum, invariance_sweep, random_quadratic, sample_rng, singlet_sweep, BornGreenSpectrum,
    InvariantReport, SingletSweep, Singlets, SweepConfig, SweepGroup,
};
use crate::states::{sr_check, uncorrelated_bound, Observables, StateVector};
use crate::units::{derive_scales, newton_constant, scale_consistency, ConstantSet, Frame, UnitScales};

/// Settings shared by every suite; echoed into each report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Cutoff for representation, Casimir, uncertainty and spectrum checks.
    pub cutoff: usize,
    /// Cutoff for squeezed-state construction and group sweeps.
    pub state_cutoff: usize,
    pub alpha_hbar: f64,
    pub lambda_x: f64,
    pub lambda_p: f64,
    pub seed: u64,
    pub samples: usize,
    /// Replaces every suite tolerance when set.
    pub tolerance: Option<f64>,
    pub output: Option<PathBuf>,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            cutoff: 6,
            state_cutoff: 8,
            alpha_hbar: 1.0,
            lambda_x: 1.0,
            lambda_p: 1.0,
            seed: 42,
            samples: 100,
            tolerance: None,
            output: None,
            timing: false,
        }
    }
}

impl RunConfig {
    /// Frame with `ħ = α_ħ λx λp`.
    pub fn frame(&self) -> Result<Frame> {
        let scales = UnitScales {
            lambda_x: self.lambda_x,
            lambda_p: self.lambda_p,
            ..UnitScales::natural()
        };
        Frame::new(self.alpha_hbar, self.alpha_hbar * self.lambda_x * self.lambda_p, &scales)
    }

    pub fn validate(&self) -> Result<()> {
        self.frame()?;
        FockSpace::new(self.cutoff)?;
        FockSpace::new(self.state_cutoff)?;
        if self.samples == 0 {
            return Err(Error::domain("samples must be at least 1"));
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0) {
                return Err(Error::domain("tolerance override must be positive"));
            }
        }
        Ok(())
    }

    pub fn tolerances(&self) -> Tolerances {
        match self.tolerance {
            Some(t) => Tolerances::uniform(t),
            None => Tolerances::default(),
        }
    }
}

/// Thresholds of every suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub scales: f64,
    pub representation: f64,
    pub casimir: f64,
    pub sr_floor: f64,
    pub sr_vacuum: f64,
    pub sr_excited: f64,
    pub physicality: f64,
    pub commutator: f64,
    pub invariance: f64,
    pub wh_sigma: f64,
    pub symplectic: f64,
    pub diagonal: f64,
    pub determinant: f64,
    pub pure_nu: f64,
    pub oracle: f64,
    pub spectrum: f64,
    pub contraction: f64,
    pub uncorrelated: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            scales: 1e-12,
            representation: 1e-12,
            casimir: 1e-10,
            sr_floor: 1e-9,
            sr_vacuum: 1e-10,
            sr_excited: 1e-8,
            physicality: 1e-9,
            commutator: 1e-10,
            invariance: 1e-7,
            wh_sigma: 1e-9,
            symplectic: 1e-10,
            diagonal: 1e-9,
            determinant: 1e-8,
            pure_nu: 1e-8,
            oracle: 1e-6,
            spectrum: 1e-10,
            contraction: 1e-9,
            uncorrelated: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn uniform(t: f64) -> Self {
        Self {
            scales: t,
            representation: t,
            casimir: t,
            sr_floor: t,
            sr_vacuum: t,
            sr_excited: t,
            physicality: t,
            commutator: t,
            invariance: t,
            wh_sigma: t,
            symplectic: t,
            diagonal: t,
            determinant: t,
            pure_nu: t,
            oracle: t,
            spectrum: t,
            contraction: t,
            uncorrelated: t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub metrics: serde_json::Value,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyAllReport {
    pub config: RunConfig,
    pub tolerances: Tolerances,
    pub suites: Vec<SuiteResult>,
    pub failed: Vec<String>,
    pub passed: bool,
}

fn salted(seed: u64, suite: u64) -> u64 {
    seed ^ suite.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitsMetrics {
    pub planck: UnitScales,
    pub planck_consistency: [f64; 3],
    pub newton_relative_error: f64,
    pub natural: UnitScales,
    pub natural_consistency: [f64; 3],
    pub passed: bool,
}

/// Scale relations for Planck-unit and natural constants.
pub fn units_suite(tol: &Tolerances) -> Result<UnitsMetrics> {
    let si = ConstantSet::si_planck();
    let planck = derive_scales(&si)?;
    let planck_consistency = scale_consistency(&si, &planck);
    let g = 6.674_30e-11;
    let newton_relative_error = ((newton_constant(&si)? - g) / g).abs();
    let nat = ConstantSet::natural();
    let natural = derive_scales(&nat)?;
    let natural_consistency = scale_consistency(&nat, &natural);
    let passed = planck_consistency.iter().chain(&natural_consistency).all(|&d| d < tol.scales)
        && newton_relative_error < tol.scales;
    Ok(UnitsMetrics {
        planck,
        planck_consistency,
        newton_relative_error,
        natural,
        natural_consistency,
        passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraMetrics {
    pub quaplectic_basis: usize,
    pub quaplectic_triples: usize,
    pub quaplectic_violations: usize,
    pub canonical_basis: usize,
    pub canonical_triples: usize,
    pub canonical_violations: usize,
    pub conjugation_labels: usize,
    pub conjugation_pairs: usize,
    pub conjugation_failures: usize,
    pub embedding_pairs: usize,
    pub embedding_failures: usize,
    pub tensor_cases: usize,
    pub tensor_derived_mismatches: usize,
    /// Informational: brackets differing from the transcribed closed forms.
    pub tensor_printed_mismatches: usize,
    pub passed: bool,
}

/// Exact Jacobi scans, conjugation, embedding and tensor-form checks.
pub fn algebra_suite(alpha: Ratio<i128>) -> AlgebraMetrics {
    let q = Quaplectic::extended(alpha);
    let qb = Quaplectic::extended_basis();
    let qj = jacobi_report(&q, &qb);
    let c = Canonical::new(alpha);
    let cb = c.basis();
    let cj = jacobi_report(&c, &cb);
    let conj = conjugation_report(&q, &qb);
    let plain = Quaplectic::new(alpha);
    let pb = Quaplectic::quaplectic_basis();
    let mut embedding_failures = 0;
    for a in &pb {
        for b in &pb {
            let lhs = commutator(&plain, &Element::basis(*a), &Element::basis(*b))
                .map_labels(|l| embed_quaplectic(l).unwrap_or_else(Element::zero));
            let rhs = commutator(
                &c,
                &embed_quaplectic(a).unwrap_or_else(Element::zero),
                &embed_quaplectic(b).unwrap_or_else(Element::zero),
            );
            embedding_failures += (lhs != rhs) as usize;
        }
    }
    let tensors = tensor_form_report(&plain);
    let tensor_cases = tensors.iter().map(|f| f.cases_checked).sum();
    let tensor_derived_mismatches = tensors.iter().map(|f| f.derived_mismatches).sum();
    let tensor_printed_mismatches = tensors.iter().map(|f| f.printed_mismatches).sum();
    let conjugation_failures = conj.involution_failures.len() + conj.antihomomorphism_failures.len();
    AlgebraMetrics {
        quaplectic_basis: qb.len(),
        quaplectic_triples: qj.triples_checked,
        quaplectic_violations: qj.violations.len(),
        canonical_basis: cb.len(),
        canonical_triples: cj.triples_checked,
        canonical_violations: cj.violations.len(),
        conjugation_labels: conj.labels_checked,
        conjugation_pairs: conj.pairs_checked,
        conjugation_failures,
        embedding_pairs: pb.len() * pb.len(),
        embedding_failures,
        tensor_cases,
        tensor_derived_mismatches,
        tensor_printed_mismatches,
        passed: qj.passed()
            && cj.passed()
            && conjugation_failures == 0
            && embedding_failures == 0
            && tensor_derived_mismatches == 0,
    }
}

/// `α_ħ` as an exact rational for the structure constants.
pub fn exact_alpha(alpha: f64) -> Result<Ratio<i128>> {
    Ratio::<i128>::approximate_float(alpha)
        .filter(|r| *r > Ratio::from_integer(0))
        .ok_or_else(|| Error::domain(format!("alpha_hbar {alpha} has no positive rational approximation")))
}

pub fn representation_suite(cutoff: usize, frame: Frame, tol: &Tolerances) -> Result<(RepReport, bool)> {
    let space = FockSpace::new(cutoff)?;
    let table = GeneratorTable::new(frame);
    let rep = verify_rep(&space, &table, 2)?;
    let ok = rep.passed(tol.representation);
    Ok((rep, ok))
}

pub fn casimir_suite(cutoff: usize, frame: Frame, tol: &Tolerances) -> Result<(CasimirReport, bool)> {
    let space = FockSpace::new(cutoff)?;
    let table = GeneratorTable::new(frame);
    let rep = casimir_report(&space, &table, 2)?;
    let ok = rep.passed(tol.casimir);
    Ok((rep, ok))
}

#[derive(Debug, Clone, Serialize)]
pub struct WilliamsonMetrics {
    pub instances: usize,
    pub max_symplectic_defect: f64,
    pub max_offdiagonal: f64,
    pub max_nu_error: f64,
    pub max_determinant_error: f64,
    pub pure_states: usize,
    pub max_pure_nu_error: f64,
    /// Informational: the same for Fock-level squeezed states.
    pub fock_pure_nu_error: Option<f64>,
    pub passed: bool,
}

/// Constructed round trips `Σ = S₀ D S₀ᵀ` and pure Gaussian covariances.
pub fn williamson_suite(seed: u64, instances: usize, frame: Frame, tol: &Tolerances) -> Result<WilliamsonMetrics> {
    let mut max_symplectic_defect = 0.0f64;
    let mut max_offdiagonal = 0.0f64;
    let mut max_nu_error = 0.0f64;
    let mut max_determinant_error = 0.0f64;
    let mut max_pure_nu_error = 0.0f64;
    let half = frame.half_hbar();
    for i in 0..instances as u64 {
        let mut rng = sample_rng(salted(seed, 6), i);
        let scale = rng.random_range(0.1..1.0);
        let a = random_quadratic(&mut rng, scale);
        let s0 = (symplectic_form() * a).exp();
        let mut nus: [f64; 4] = std::array::from_fn(|_| half * rng.random_range(1.0..4.0));
        nus.sort_by(|x, y| y.total_cmp(x));
        let d = Mat8::from_diagonal(&Vec8::from_fn(|k, _| nus[k % 4]));
        let sigma = s0 * d * s0.transpose();
        let w = williamson(&sigma)?;
        max_symplectic_defect = max_symplectic_defect.max(symplectic_defect(&w.s));
        let diag = w.s * sigma * w.s.transpose();
        let off = (diag - Mat8::from_diagonal(&diag.diagonal())).abs().max();
        max_offdiagonal = max_offdiagonal.max(off / half);
        for k in 0..4 {
            max_nu_error = max_nu_error.max((w.nus[k] - nus[k]).abs() / nus[k]);
        }
        let prod: f64 = w.nus.iter().map(|n| n * n).product();
        max_determinant_error = max_determinant_error.max(((sigma.determinant() - prod) / prod).abs());

        let mut prng = sample_rng(salted(seed, 60), i);
        let pscale = prng.random_range(0.0..1.0);
        let pa = random_quadratic(&mut prng, pscale);
        let (_, ps) = gaussian_covariance(&SqueezeParameters { a: pa, ..Default::default() }, &frame)?;
        for nu in symplectic_eigenvalues(&ps)? {
            max_pure_nu_error = max_pure_nu_error.max((nu - half).abs() / half);
        }
    }
    let passed = max_symplectic_defect < tol.symplectic
        && max_offdiagonal < tol.diagonal
        && max_nu_error < tol.determinant
        && max_determinant_error < tol.determinant
        && max_pure_nu_error < tol.pure_nu;
    Ok(WilliamsonMetrics {
        instances,
        max_symplectic_defect,
        max_offdiagonal,
        max_nu_error,
        max_determinant_error,
        pure_states: instances,
        max_pure_nu_error,
        fock_pure_nu_error: None,
        passed,
    })
}

/// Random squeeze parameters: `‖A‖_F` uniform in `[0, max_phi)`,
/// displacement components uniform in `(-max_zeta, max_zeta)`.
pub fn random_squeeze<R: Rng + ?Sized>(rng: &mut R, max_phi: f64, max_zeta: f64) -> SqueezeParameters {
    let scale = rng.random_range(0.0..max_phi);
    let a = random_quadratic(rng, scale);
    let zeta = std::array::from_fn(|_| {
        Complex64::new(rng.random_range(-max_zeta..max_zeta), rng.random_range(-max_zeta..max_zeta))
    });
    SqueezeParameters { a, zeta }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleMetrics {
    pub cutoff: usize,
    pub parameter_sets: usize,
    pub constructed: usize,
    pub max_sigma_error: f64,
    pub max_mean_error: f64,
    pub max_leakage: f64,
    pub max_sr_relative_margin: f64,
    pub max_pure_nu_error: f64,
    pub min_physicality: f64,
    pub max_commutator_defect: f64,
    pub passed: bool,
}

/// Fock-level covariances of squeezed states against the analytic ones.
pub fn oracle_suite(obs: &Observables, seed: u64, count: usize, tol: &Tolerances) -> Result<OracleMetrics> {
    let frame = *obs.frame();
    let half = frame.half_hbar();
    let mut m = OracleMetrics {
        cutoff: obs.space().cutoff(),
        parameter_sets: count,
        constructed: 0,
        max_sigma_error: 0.0,
        max_mean_error: 0.0,
        max_leakage: 0.0,
        max_sr_relative_margin: 0.0,
        max_pure_nu_error: 0.0,
        min_physicality: f64::INFINITY,
        max_commutator_defect: 0.0,
        passed: false,
    };
    for i in 0..count as u64 {
        let mut rng = sample_rng(salted(seed, 7), i);
        let p = random_squeeze(&mut rng, 0.3, 0.15);
        let state = obs.squeezed_state(&p)?;
        let cov = obs.covariance_matrix(&state)?;
        let (means, sigma) = gaussian_covariance(&p, &frame)?;
        m.constructed += 1;
        m.max_sigma_error = m.max_sigma_error.max((cov.sigma - sigma).abs().max());
        m.max_mean_error = m.max_mean_error.max((Vec8::from_column_slice(&cov.means()) - means).abs().max());
        m.max_leakage = m.max_leakage.max(state.leakage());
        m.max_sr_relative_margin = m.max_sr_relative_margin.max(sr_check(&cov).relative_margin().abs());
        for nu in symplectic_eigenvalues(&cov.sigma)? {
            m.max_pure_nu_error = m.max_pure_nu_error.max((nu - half).abs() / half);
        }
        m.min_physicality = m.min_physicality.min(cov.physicality());
        m.max_commutator_defect = m.max_commutator_defect.max(cov.commutator_defect());
    }
    m.passed = m.constructed == count
        && m.max_sigma_error < tol.oracle
        && m.max_mean_error < tol.oracle
        && m.min_physicality > -tol.physicality;
    Ok(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct SrMetrics {
    pub cutoff: usize,
    pub random_states: usize,
    pub support: usize,
    /// Smallest `(det Σ - (ħ/2)⁸)/(ħ/2)⁸` over the random states.
    pub min_relative_margin: f64,
    pub min_physicality: f64,
    pub max_commutator_defect: f64,
    pub vacuum_relative_margin: f64,
    /// `det Σ / (ħ/2)⁸` for `|n0 = 1⟩` (exactly 9).
    pub excited_ratio: f64,
    pub passed: bool,
}

/// Determinant bound on random interior states, vacuum and `|n0 = 1⟩`.
pub fn sr_suite(obs: &Observables, seed: u64, count: usize, tol: &Tolerances) -> Result<SrMetrics> {
    let space = obs.space();
    let support = space.cutoff().saturating_sub(2);
    let results: Vec<(f64, f64, f64)> = (0..count as u64)
        .map(|i| {
            let mut rng = sample_rng(salted(seed, 4), i);
            let s = obs.random_state(support, &mut rng)?;
            let cov = obs.covariance_matrix(&s)?;
            Ok((sr_check(&cov).relative_margin(), cov.physicality() / cov.hbar, cov.commutator_defect() / cov.hbar))
        })
        .collect::<Result<_>>()?;
    let min_relative_margin = results.iter().map(|r| r.0).fold(f64::INFINITY, f64::min);
    let min_physicality = results.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    let max_commutator_defect = results.iter().map(|r| r.2).fold(0.0, f64::max);
    let vac = obs.covariance_matrix(&StateVector::vacuum(space))?;
    let vacuum_relative_margin = sr_check(&vac).relative_margin();
    let ex = obs.covariance_matrix(&StateVector::number_state(space, [1, 0, 0, 0])?)?;
    let sr = sr_check(&ex);
    let excited_ratio = sr.det_sigma / sr.det_c;
    let passed = min_relative_margin >= -tol.sr_floor
        && min_physicality > -tol.physicality
        && max_commutator_defect < tol.commutator
        && vacuum_relative_margin.abs() < tol.sr_vacuum
        && ((excited_ratio - 9.0) / 9.0).abs() < tol.sr_excited;
    Ok(SrMetrics {
        cutoff: space.cutoff(),
        random_states: count,
        support,
        min_relative_margin,
        min_physicality,
        max_commutator_defect,
        vacuum_relative_margin,
        excited_ratio,
        passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct UncorrelatedMetrics {
    pub number_states: usize,
    pub squeezed_states: usize,
    /// Smallest `ΠΔX ΠΔP / (ħ/2)⁴`.
    pub min_ratio: f64,
    pub vacuum_ratio: f64,
    pub violations: usize,
    pub correlated_rejected: bool,
    pub passed: bool,
}

/// Uncorrelated bound on number states and single-mode squeezed and
/// displaced states.
pub fn uncorrelated_suite(obs: &Observables, state_obs: &Observables, tol: &Tolerances) -> Result<UncorrelatedMetrics> {
    let space = obs.space();
    let mut ratios = Vec::new();
    let mut number_states = 0;
    for n in space.occupations().filter(|n| space.is_interior(n, 2)) {
        let cov = obs.covariance_matrix(&StateVector::number_state(space, n)?)?;
        ratios.push(uncorrelated_bound(&cov)?);
        number_states += 1;
    }
    let mut squeezed_states = 0;
    for mode in 0..4 {
        for r in [-0.1, 0.05, 0.1] {
            let mut p = SqueezeParameters::single_mode_squeeze(mode, r);
            p.zeta[mode] = Complex64::new(0.1, -0.05);
            let cov = state_obs.covariance_matrix(&state_obs.squeezed_state(&p)?)?;
            ratios.push(uncorrelated_bound(&cov)?);
            squeezed_states += 1;
        }
    }
    let vac = obs.covariance_matrix(&StateVector::vacuum(space))?;
    let vacuum_ratio = uncorrelated_bound(&vac)?.ratio;
    let mut corr = SqueezeParameters::default();
    corr.a[(1, 6)] = 0.1;
    corr.a[(6, 1)] = 0.1;
    let corr_cov = state_obs.covariance_matrix(&state_obs.squeezed_state(&corr)?)?;
    let correlated_rejected = matches!(uncorrelated_bound(&corr_cov), Err(Error::Correlated { .. }));
    let min_ratio = ratios.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let violations = ratios.iter().filter(|r| !r.satisfied).count();
    Ok(UncorrelatedMetrics {
        number_states,
        squeezed_states,
        min_ratio,
        vacuum_ratio,
        violations,
        correlated_rejected,
        passed: violations == 0 && (vacuum_ratio - 1.0).abs() < tol.uncorrelated && correlated_rejected,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceMetrics {
    pub u31_vacuum: InvariantReport,
    pub u31_squeezed: InvariantReport,
    pub wh_squeezed: InvariantReport,
    pub sp8_random: InvariantReport,
    pub reciprocity: InvariantReport,
    pub singlets_u31: SingletSweep,
    pub singlets_wh: SingletSweep,
    pub passed: bool,
}

/// Reference squeezed state of the sweeps: mode 1 squeezed by `r = 0.05`.
pub fn sweep_reference_state(obs: &Observables) -> Result<StateVector> {
    obs.squeezed_state(&SqueezeParameters::single_mode_squeeze(1, 0.05))
}

/// `det Σ` sweeps over `U(3,1)`, displacements, `Sp(8,ℝ)` and reciprocity,
/// plus the tensor singlets.
pub fn invariance_suite(obs: &Observables, seed: u64, samples: usize, tol: &Tolerances) -> Result<InvarianceMetrics> {
    let cfg = |group: SweepGroup, salt: u64| SweepConfig {
        group,
        samples,
        seed: salted(seed, salt),
        parameter_scale: 0.2,
        cutoff: obs.space().cutoff(),
        tolerance: tol.invariance,
    };
    let vac = StateVector::vacuum(obs.space());
    let sq = sweep_reference_state(obs)?;
    let mut rng = sample_rng(salted(seed, 9), 0);
    let random = obs.random_state(1, &mut rng)?;
    let u31_vacuum = invariance_sweep(obs, &vac, &cfg(SweepGroup::U31, 1))?;
    let u31_squeezed = invariance_sweep(obs, &sq, &cfg(SweepGroup::U31, 2))?;
    let wh_squeezed = invariance_sweep(obs, &sq, &cfg(SweepGroup::WeylHeisenberg, 3))?;
    let sp8_random = invariance_sweep(obs, &random, &cfg(SweepGroup::Sp8, 5))?;
    let reciprocity = invariance_sweep(obs, &sq, &cfg(SweepGroup::Reciprocity, 8))?;
    let singlets = Singlets::new(obs.table(), obs.space());
    let few = samples.min(20);
    let singlets_u31 = singlet_sweep(obs, &singlets, &vac, &SweepConfig { samples: few, ..cfg(SweepGroup::U31, 10) })?;
    let singlets_wh = singlet_sweep(
        obs,
        &singlets,
        &vac,
        &SweepConfig {
            samples: few,
            ..cfg(SweepGroup::WeylHeisenberg, 11)
        },
    )?;
    let passed = u31_vacuum.passed
        && u31_squeezed.passed
        && wh_squeezed.passed
        && wh_squeezed.max_sigma_deviation < tol.wh_sigma
        && sp8_random.passed
        && reciprocity.passed
        && singlets_u31.invariant.iter().all(|&b| b);
    Ok(InvarianceMetrics {
        u31_vacuum,
        u31_squeezed,
        wh_squeezed,
        sp8_random,
        reciprocity,
        singlets_u31,
        singlets_wh,
        passed,
    })
}

pub fn spectrum_suite(cutoff: usize, frame: Frame, tol: &Tolerances) -> Result<(BornGreenSpectrum, bool)> {
    let space = FockSpace::new(cutoff)?;
    let s = born_green_spectrum(&space, &GeneratorTable::new(frame), 2)?;
    let ok = s.offdiagonal_max < tol.spectrum
        && s.spacing_deviation < tol.spectrum * frame.alpha_hbar.max(1.0)
        && s.affine_residual < tol.spectrum * frame.alpha_hbar.max(1.0)
        && s.degeneracies_match;
    Ok((s, ok))
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractionMetrics {
    pub b_values: Vec<f64>,
    pub slopes_case_i: Vec<f64>,
    pub slopes_case_ii: Vec<f64>,
    pub divergent_terms: usize,
    /// Coefficient of `𝒩°` in the limit bracket `[Z°_00, Z̄°_00]` (case II).
    pub case_ii_centre: String,
    pub passed: bool,
}

pub fn contraction_suite(tol: &Tolerances) -> Result<ContractionMetrics> {
    let b_values = vec![10.0, 100.0, 1000.0];
    let slopes_case_i = contraction_slopes(ContractionCase::I, &b_values)?;
    let slopes_case_ii = contraction_slopes(ContractionCase::II, &b_values)?;
    let mut divergent_terms = 0;
    for case in [ContractionCase::I, ContractionCase::II] {
        for &b in &b_values {
            divergent_terms += contract(b, case)?.divergent.len();
        }
    }
    let r = contract(100.0, ContractionCase::II)?;
    let centre = r.limit_coefficient(LorentzGenerator::Z(0, 0), LorentzGenerator::Zbar(0, 0), LorentzGenerator::Number);
    let passed = divergent_terms == 0
        && slopes_case_i.iter().chain(&slopes_case_ii).all(|s| (s + 1.0).abs() < tol.contraction);
    Ok(ContractionMetrics {
        b_values,
        slopes_case_i,
        slopes_case_ii,
        divergent_terms,
        case_ii_centre: format_exact(&centre),
        passed,
    })
}

fn run_suite<T: Serialize>(
    name: &str,
    timing: bool,
    f: impl FnOnce() -> Result<(T, bool)>,
) -> SuiteResult {
    let start = Instant::now();
    let out = f();
    let seconds = timing.then(|| start.elapsed().as_secs_f64());
    match out {
        Ok((metrics, passed)) => SuiteResult {
            name: name.to_string(),
            passed,
            metrics: serde_json::to_value(&metrics).unwrap_or(serde_json::Value::Null),
            error: None,
            seconds,
        },
        Err(e) => SuiteResult {
            name: name.to_string(),
            passed: false,
            metrics: serde_json::Value::Null,
            error: Some(e.to_string()),
            seconds,
        },
    }
}

/// Runs every suite in order. Configuration errors are returned as `Err`;
/// suite failures are recorded in the report.
pub fn verify_all(cfg: &RunConfig) -> Result<VerifyAllReport> {
    cfg.validate()?;
    let frame = cfg.frame()?;
    let tol = cfg.tolerances();
    let alpha = exact_alpha(cfg.alpha_hbar)?;
    let t = cfg.timing;
    let mut suites = Vec::new();
    suites.push(run_suite("units", t, || units_suite(&tol).map(|m| {
        let p = m.passed;
        (m, p)
    })));
    suites.push(run_suite("algebra", t, || {
        let m = algebra_suite(alpha);
        let p = m.passed;
        Ok((m, p))
    }));
    suites.push(run_suite("contraction", t, || contraction_suite(&tol).map(|m| {
        let p = m.passed;
        (m, p)
    })));
    suites.push(run_suite("representation", t, || representation_suite(cfg.cutoff, frame, &tol)));
    suites.push(run_suite("casimir", t, || casimir_suite(cfg.cutoff, frame, &tol)));
    suites.push(run_suite("williamson", t, || {
        williamson_suite(cfg.seed, cfg.samples, frame, &tol).map(|m| {
            let p = m.passed;
            (m, p)
        })
    }));
    let obs = Observables::new(FockSpace::new(cfg.cutoff)?, frame);
    let state_obs = Observables::new(FockSpace::new(cfg.state_cutoff)?, frame);
    match (&obs, &state_obs) {
        (Ok(obs), Ok(state_obs)) => {
            suites.push(run_suite("oracle", t, || {
                oracle_suite(state_obs, cfg.seed, 50, &tol).map(|m| {
                    let p = m.passed;
                    (m, p)
                })
            }));
            suites.push(run_suite("schrodinger_robertson", t, || {
                sr_suite(obs, cfg.seed, 1000, &tol).map(|m| {
                    let p = m.passed;
                    (m, p)
                })
            }));
            suites.push(run_suite("uncorrelated", t, || {
                uncorrelated_suite(obs, state_obs, &tol).map(|m| {
                    let p = m.passed;
                    (m, p)
                })
            }));
            suites.push(run_suite("invariance", t, || {
                invariance_suite(state_obs, cfg.seed, cfg.samples, &tol).map(|m| {
                    let p = m.passed;
                    (m, p)
                })
            }));
        }
        (Err(e), _) | (_, Err(e)) => suites.push(SuiteResult {
            name: "states".into(),
            passed: false,
            metrics: serde_json::Value::Null,
            error: Some(e.to_string()),
            seconds: None,
        }),
    }
    suites.push(run_suite("spectrum", t, || spectrum_suite(cfg.cutoff, frame, &tol)));
    let failed: Vec<String> = suites.iter().filter(|s| !s.passed).map(|s| s.name.clone()).collect();
    Ok(VerifyAllReport {
        config: cfg.clone(),
        tolerances: tol,
        passed: failed.is_empty(),
        failed,
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trips_with_defaults() {
        let cfg: RunConfig = serde_json::from_str(r#"{"cutoff": 4}"#).unwrap();
        assert_eq!(cfg.cutoff, 4);
        assert_eq!(cfg.seed, 42);
        assert!(cfg.validate().is_ok());
        let bad = RunConfig {
            alpha_hbar: -1.0,
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn contraction_slopes_are_minus_one() {
        let m = contraction_suite(&Tolerances::default()).unwrap();
        assert!(m.passed, "{m:?}");
        assert_eq!(m.case_ii_centre, "1");
    }

    #[test]
    fn cutoff_one_fails_representation_in_a_controlled_way() {
        let r = run_suite("representation", false, || {
            representation_suite(1, Frame::natural(), &Tolerances::default())
        });
        assert!(!r.passed);
        assert!(r.error.unwrap().contains("interior"));
    }

    #[test]
    fn tiny_tolerance_fails_spectrum_free_checks() {
        let tol = Tolerances::uniform(1e-300);
        let (_, ok) = casimir_suite(3, Frame::natural(), &tol).unwrap();
        assert!(!ok);
    }

    #[test]
    fn williamson_suite_small() {
        let m = williamson_suite(1, 10, Frame::with_alpha(0.5).unwrap(), &Tolerances::default()).unwrap();
        assert!(m.passed, "{m:?}");
    }
}
