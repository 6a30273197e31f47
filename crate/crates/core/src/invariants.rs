//! Group sweeps of `det Σ`, the reciprocity map, the low-degree tensor
//! singlets and the Born–Green spectrum.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{conjugate, Generator, NumericElement, Quaplectic};
use crate::error::{Error, Result};
use crate::fock::{FockOperator, FockSpace, GeneratorTable, ModePoly};
use crate::gaussian::{reciprocity_matrix, Mat8, Vec8};
use crate::states::{CovarianceData, Observables, StateVector, LEAKAGE_LIMIT};
use crate::units::Frame;
use crate::ETA;

/// Subgroup sampled by [`invariance_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepGroup {
    /// `exp(ω^μ_ν E^ν_μ)` with anti-Hermitian exponent.
    U31,
    /// Displacements `exp(w^μ Z_μ - h.c.)`.
    #[serde(rename = "wh")]
    WeylHeisenberg,
    /// Metaplectic flows `exp(-iH/α)`, `H = ½ ξᵀAξ`.
    Sp8,
    /// Fractional powers of the reciprocity unitary.
    Reciprocity,
}

impl SweepGroup {
    pub const ALL: [SweepGroup; 4] = [Self::U31, Self::WeylHeisenberg, Self::Sp8, Self::Reciprocity];

    pub fn name(self) -> &'static str {
        match self {
            Self::U31 => "u31",
            Self::WeylHeisenberg => "wh",
            Self::Sp8 => "sp8",
            Self::Reciprocity => "reciprocity",
        }
    }
}

impl fmt::Display for SweepGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u31" | "u(3,1)" => Ok(Self::U31),
            "wh" | "weyl_heisenberg" | "weyl-heisenberg" => Ok(Self::WeylHeisenberg),
            "sp8" => Ok(Self::Sp8),
            "reciprocity" => Ok(Self::Reciprocity),
            other => Err(Error::Parse(format!("unknown group '{other}' (expected u31, wh, sp8 or reciprocity)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub group: SweepGroup,
    pub samples: usize,
    pub seed: u64,
    /// Frobenius norm of each sampled exponent's coefficient vector.
    pub parameter_scale: f64,
    pub cutoff: usize,
    pub tolerance: f64,
}

impl SweepConfig {
    pub fn new(group: SweepGroup) -> Self {
        Self {
            group,
            samples: 100,
            seed: 42,
            parameter_scale: 0.2,
            cutoff: 8,
            tolerance: 1e-7,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::domain("samples must be at least 1"));
        }
        if !(self.parameter_scale >= 0.0 && self.parameter_scale <= 0.5) {
            return Err(Error::domain(format!(
                "parameter_scale {} outside [0, 0.5]",
                self.parameter_scale
            )));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::domain("tolerance must be positive"));
        }
        FockSpace::new(self.cutoff).map(|_| ())
    }
}

/// Deterministic generator for sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn normal_c<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn frobenius(el: &NumericElement<Generator>) -> f64 {
    el.iter().map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Random anti-Hermitian element of `u(3,1)` with coefficient norm `scale`.
pub fn random_u31<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> NumericElement<Generator> {
    let alg = Quaplectic::new(Ratio::from_integer(1));
    let w = NumericElement::from_terms((0..16).map(|k| (Generator::e(k / 4, k % 4), normal_c(rng))));
    let anti = (w.clone() - conjugate(&alg, &w)).scale(&Complex64::new(0.5, 0.0));
    let n = frobenius(&anti);
    anti.scale(&Complex64::new(scale / n, 0.0))
}

/// Random displacement amplitudes with `|w| = scale`.
pub fn random_displacement<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> [Complex64; 4] {
    let w: [Complex64; 4] = std::array::from_fn(|_| normal_c(rng));
    let n = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    w.map(|c| c * (scale / n))
}

/// Random symmetric generator with Frobenius norm `scale`.
pub fn random_quadratic<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Mat8 {
    let m = Mat8::from_fn(|_, _| rng.sample::<f64, _>(StandardNormal));
    let s = 0.5 * (m + m.transpose());
    s * (scale / s.norm())
}

/// `A = (π/2) diag(η, η)`: the flow `exp(JA)` sends `x → p`, `p → -x`.
pub fn reciprocity_generator() -> Mat8 {
    Mat8::from_diagonal(&Vec8::from_fn(|a, _| FRAC_PI_2 * ETA[a % 4]))
}

fn sample_exponent(obs: &Observables, cfg: &SweepConfig, index: u64) -> ModePoly {
    let mut rng = sample_rng(cfg.seed, index);
    match cfg.group {
        SweepGroup::U31 => obs.algebra_exponent(&random_u31(&mut rng, cfg.parameter_scale)),
        SweepGroup::WeylHeisenberg => obs.displacement_exponent(&random_displacement(&mut rng, cfg.parameter_scale)),
        SweepGroup::Sp8 => obs.quadratic_exponent(&random_quadratic(&mut rng, cfg.parameter_scale)),
        SweepGroup::Reciprocity => {
            let t: f64 = rng.random_range(0.0..4.0);
            obs.quadratic_exponent(&(reciprocity_generator() * t))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSample {
    pub index: usize,
    pub det_sigma: Option<f64>,
    pub relative_deviation: Option<f64>,
    /// `max |Σ' - Σ|`.
    pub sigma_deviation: Option<f64>,
    pub leakage: f64,
    pub excluded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub config: SweepConfig,
    pub reference_det: f64,
    pub samples: Vec<SweepSample>,
    pub max_relative_deviation: f64,
    pub max_sigma_deviation: f64,
    pub max_leakage: f64,
    pub excluded: usize,
    pub passed: bool,
}

/// Applies `cfg.samples` random group elements to `state` and compares
/// each `det Σ` with that of `state`.
pub fn invariance_sweep(obs: &Observables, state: &StateVector, cfg: &SweepConfig) -> Result<InvariantReport> {
    cfg.validate()?;
    if obs.space().cutoff() != cfg.cutoff {
        return Err(Error::domain(format!(
            "observables built for cutoff {}, sweep configured for {}",
            obs.space().cutoff(),
            cfg.cutoff
        )));
    }
    let base = obs.covariance_matrix(state)?;
    let reference_det = base.sigma.determinant();
    let samples: Vec<SweepSample> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let exponent = sample_exponent(obs, cfg, i as u64);
            let moved = obs
                .apply_group_element(state, &exponent, 1.0)
                .and_then(|s| obs.covariance_matrix(&s).map(|c| (s.leakage(), c)));
            match moved {
                Ok((leakage, cov)) => {
                    let det = cov.sigma.determinant();
                    SweepSample {
                        index: i,
                        det_sigma: Some(det),
                        relative_deviation: Some(((det - reference_det) / reference_det).abs()),
                        sigma_deviation: Some((cov.sigma - base.sigma).abs().max()),
                        leakage,
                        excluded: false,
                    }
                }
                Err(Error::TruncationOverflow { leakage, .. }) => SweepSample {
                    index: i,
                    det_sigma: None,
                    relative_deviation: None,
                    sigma_deviation: None,
                    leakage,
                    excluded: true,
                },
                Err(_) => SweepSample {
                    index: i,
                    det_sigma: None,
                    relative_deviation: Some(f64::INFINITY),
                    sigma_deviation: None,
                    leakage: f64::NAN,
                    excluded: false,
                },
            }
        })
        .collect();
    let kept: Vec<&SweepSample> = samples.iter().filter(|s| !s.excluded).collect();
    let max_relative_deviation = kept.iter().filter_map(|s| s.relative_deviation).fold(0.0, f64::max);
    let max_sigma_deviation = kept.iter().filter_map(|s| s.sigma_deviation).fold(0.0, f64::max);
    let max_leakage = samples.iter().map(|s| s.leakage).filter(|l| l.is_finite()).fold(0.0, f64::max);
    let excluded = samples.len() - kept.len();
    Ok(InvariantReport {
        config: *cfg,
        reference_det,
        max_relative_deviation,
        max_sigma_deviation,
        max_leakage,
        excluded,
        passed: !kept.is_empty() && max_relative_deviation < cfg.tolerance,
        samples,
    })
}

/// Conjugates means, `Σ` and `C` by the reciprocity matrix of `frame`.
pub fn reciprocity_map(cov: &CovarianceData, frame: &Frame) -> CovarianceData {
    let r = reciprocity_matrix(frame);
    let m = r * Vec8::from_column_slice(&cov.means());
    CovarianceData {
        mean_x: std::array::from_fn(|k| m[k]),
        mean_p: std::array::from_fn(|k| m[k + 4]),
        sigma: r * cov.sigma * r.transpose(),
        c: r * cov.c * r.transpose(),
        hbar: cov.hbar,
        leakage: cov.leakage,
    }
}

/// Names of the singlets, in the order returned by [`general_invariants`].
pub const SINGLET_NAMES: [&str; 9] = [
    "trE", "trE2", "(trE)2", "trZZbar", "trE3", "trE.trE2", "(trE)3", "trE.trZZbar", "trEZZbar",
];

/// Weyl-ordered polynomials of the singlets built from `E^μ_ν`, `Z_μ`,
/// `Z̄^μ = η^μμ Z̄_μ`.
#[derive(Debug, Clone)]
pub struct Singlets {
    space: FockSpace,
    polys: Vec<ModePoly>,
    ops: Vec<FockOperator>,
}

impl Singlets {
    pub fn new(table: &GeneratorTable, space: FockSpace) -> Self {
        let e = |m: usize, n: usize| table.e(m, n);
        let w: Vec<ModePoly> = (0..4).map(|m| table.zbar(m).scale_re(ETA[m])).collect();
        let sym = ModePoly::symmetrized_product;
        let tr_e = (0..4).fold(ModePoly::zero(), |acc, m| &acc + e(m, m));
        let mut tr_e2 = ModePoly::zero();
        let mut tr_e3 = ModePoly::zero();
        let mut tr_ezz = ModePoly::zero();
        let mut tr_zz = ModePoly::zero();
        for r in 0..4 {
            tr_zz = &tr_zz + &sym(&[&w[r], table.z(r)]);
            for s in 0..4 {
                tr_e2 = &tr_e2 + &sym(&[e(r, s), e(s, r)]);
                tr_ezz = &tr_ezz + &sym(&[&w[r], e(s, r), table.z(s)]);
                for t in 0..4 {
                    tr_e3 = &tr_e3 + &sym(&[e(r, s), e(s, t), e(t, r)]);
                }
            }
        }
        let polys = vec![
            tr_e.clone(),
            tr_e2.clone(),
            sym(&[&tr_e, &tr_e]),
            tr_zz.clone(),
            tr_e3,
            sym(&[&tr_e, &tr_e2]),
            sym(&[&tr_e, &tr_e, &tr_e]),
            sym(&[&tr_e, &tr_zz]),
            tr_ezz,
        ];
        let ops = polys.iter().map(|p| p.to_operator(&space)).collect();
        Self { space, polys, ops }
    }

    pub fn polys(&self) -> &[ModePoly] {
        &self.polys
    }

    /// Largest coefficient of `[singlet, image(g)]` over the given labels.
    pub fn commutator_defects(&self, table: &GeneratorTable, labels: &[Generator]) -> [f64; 9] {
        std::array::from_fn(|k| {
            labels
                .iter()
                .map(|g| self.polys[k].commutator(&table.image(g)).max_coeff())
                .fold(0.0, f64::max)
        })
    }
}

/// Margin required by the degree-6 singlets.
pub const SINGLET_MARGIN: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralInvariants {
    pub names: Vec<String>,
    pub values: [f64; 9],
    /// Weight outside the interior with margin 3.
    pub outer_weight: f64,
}

/// Expectations of the nine singlets.
pub fn general_invariants(singlets: &Singlets, state: &StateVector) -> Result<GeneralInvariants> {
    let space = singlets.space;
    if state.space() != space {
        return Err(Error::domain("state and singlet operators use different cutoffs"));
    }
    if space.cutoff() <= SINGLET_MARGIN {
        return Err(Error::domain(format!(
            "cutoff {} leaves no interior for degree-6 singlets; use cutoff > {SINGLET_MARGIN}",
            space.cutoff()
        )));
    }
    let outer_weight = state.weight_outside(SINGLET_MARGIN);
    if outer_weight > LEAKAGE_LIMIT {
        return Err(Error::domain(format!(
            "state weight {outer_weight:.3e} beyond the degree-6 interior; increase the cutoff"
        )));
    }
    let values = std::array::from_fn(|k| {
        crate::states::expectation(state, &singlets.ops[k])
            .map(|c| c.re)
            .unwrap_or(f64::NAN)
    });
    Ok(GeneralInvariants {
        names: SINGLET_NAMES.iter().map(|s| s.to_string()).collect(),
        values,
        outer_weight,
    })
}

/// Per-singlet drift of [`general_invariants`] under a group sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingletSweep {
    pub group: SweepGroup,
    pub reference: [f64; 9],
    pub max_deviation: [f64; 9],
    pub invariant: [bool; 9],
    pub excluded: usize,
}

pub fn singlet_sweep(obs: &Observables, singlets: &Singlets, state: &StateVector, cfg: &SweepConfig) -> Result<SingletSweep> {
    cfg.validate()?;
    let reference = general_invariants(singlets, state)?.values;
    let moved: Vec<Option<[f64; 9]>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let exponent = sample_exponent(obs, cfg, i as u64);
            obs.apply_group_element(state, &exponent, 1.0)
                .and_then(|s| general_invariants(singlets, &s))
                .ok()
                .map(|g| g.values)
        })
        .collect();
    let mut max_deviation = [0.0f64; 9];
    for v in moved.iter().flatten() {
        for k in 0..9 {
            let d = (v[k] - reference[k]).abs() / reference[k].abs().max(1.0);
            max_deviation[k] = max_deviation[k].max(d);
        }
    }
    Ok(SingletSweep {
        group: cfg.group,
        reference,
        max_deviation,
        invariant: max_deviation.map(|d| d < cfg.tolerance),
        excluded: moved.iter().filter(|m| m.is_none()).count(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumLevel {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// `n0 - n1 - n2 - n3` of the level.
    pub occupation_difference: i64,
    /// Tuples in the interior box with that difference.
    pub expected_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BornGreenSpectrum {
    pub cutoff: usize,
    pub margin: usize,
    pub alpha_hbar: f64,
    pub levels: Vec<SpectrumLevel>,
    /// Largest off-diagonal entry of `B` among interior states.
    pub offdiagonal_max: f64,
    /// `max |s_{k+1} - s_k - 2α|`.
    pub spacing_deviation: f64,
    /// `max |s - 2α(n0 - Σn_i - 1)|` over interior basis states.
    pub affine_residual: f64,
    pub degeneracies_match: bool,
}

/// Count of `(n0, n1, n2, n3) ∈ [0, top]⁴` with `n0 - n1 - n2 - n3 = k`,
/// via the coefficients of `(1 + t + … + t^top)³`.
pub fn box_count(top: usize, k: i64) -> usize {
    let mut poly = vec![1usize];
    for _ in 0..3 {
        let mut next = vec![0usize; poly.len() + top];
        for (i, &c) in poly.iter().enumerate() {
            for j in 0..=top {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    (0..=top as i64)
        .filter_map(|n0| {
            let s = n0 - k;
            (s >= 0 && (s as usize) < poly.len()).then(|| poly[s as usize])
        })
        .sum()
}

/// Diagonalises the Born–Green operator on the interior block.
pub fn born_green_spectrum(space: &FockSpace, table: &GeneratorTable, margin: usize) -> Result<BornGreenSpectrum> {
    if margin > space.cutoff() {
        return Err(Error::domain(format!("margin {margin} exceeds cutoff {}", space.cutoff())));
    }
    let alpha = table.alpha();
    let b = table.born_green().to_operator(space);
    let interior: Vec<usize> = (0..space.dim())
        .filter(|&i| space.is_interior(&space.occupation(i), margin))
        .collect();
    let pos: std::collections::HashMap<usize, usize> = interior.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let n = interior.len();
    let mut block = DMatrix::<Complex64>::zeros(n, n);
    let mut offdiagonal_max = 0.0f64;
    for (r, c, v) in b.matrix().triplet_iter() {
        if let (Some(&i), Some(&j)) = (pos.get(&r), pos.get(&c)) {
            block[(i, j)] = *v;
            if i != j {
                offdiagonal_max = offdiagonal_max.max(v.norm());
            }
        }
    }
    let mut affine_residual = 0.0f64;
    for (k, &i) in interior.iter().enumerate() {
        let occ = space.occupation(i);
        let d = occ[0] as f64 - occ[1] as f64 - occ[2] as f64 - occ[3] as f64;
        affine_residual = affine_residual.max((block[(k, k)].re - 2.0 * alpha * (d - 1.0)).abs());
    }
    let mut eig: Vec<f64> = SymmetricEigen::new(block).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    let mut levels: Vec<SpectrumLevel> = Vec::new();
    let top = space.cutoff() - margin;
    for s in eig {
        match levels.last_mut() {
            Some(l) if (s - l.eigenvalue).abs() < 1e-8 * alpha.max(1.0) => l.multiplicity += 1,
            _ => {
                let k = (s / (2.0 * alpha) + 1.0).round() as i64;
                levels.push(SpectrumLevel {
                    eigenvalue: s,
                    multiplicity: 1,
                    occupation_difference: k,
                    expected_multiplicity: box_count(top, k),
                })
            }
        }
    }
    let spacing_deviation = levels
        .windows(2)
        .map(|w| (w[1].eigenvalue - w[0].eigenvalue - 2.0 * alpha).abs())
        .fold(0.0, f64::max);
    let degeneracies_match = levels.iter().all(|l| l.multiplicity == l.expected_multiplicity);
    Ok(BornGreenSpectrum {
        cutoff: space.cutoff(),
        margin,
        alpha_hbar: alpha,
        levels,
        offdiagonal_max,
        spacing_deviation,
        affine_residual,
        degeneracies_match,
    })
}
