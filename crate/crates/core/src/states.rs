//! Multimode squeezed and coherent states in the truncated Fock space, their
//! covariance data and the uncertainty bounds built on it.
//!
//! Covariances are reported in upper-index phase-space order
//! `(X^0..X^3, P^0..P^3)` in physical units. The tensors `Q`, `T`, `R`
//! use lower indices, `X_μ = η_μν X^ν`.

use nalgebra::{Complex, Matrix4, SMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::algebra::{Generator, NumericElement};
use crate::error::{Error, Result};
use crate::fock::{FockOperator, FockSpace, GeneratorTable, ModePoly};
use crate::gaussian::{symplectic_form, Mat8, SqueezeParameters};
use crate::units::Frame;
use crate::ETA;

/// Boundary shell used for the leakage metric.
pub const LEAKAGE_MARGIN: usize = 2;
/// Largest accepted leakage.
pub const LEAKAGE_LIMIT: f64 = 1e-6;
/// Default guard on the Frobenius norm of the squeeze generator.
pub const DEFAULT_SQUEEZE_GUARD: f64 = 1.0;

/// Normalised state on a truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    space: FockSpace,
    amplitudes: Vec<Complex64>,
    renormalization: f64,
    leakage: f64,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

impl StateVector {
    /// Normalises `amplitudes` and records the factor applied.
    pub fn new(space: FockSpace, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::domain(format!(
                "state has {} amplitudes, space dimension is {}",
                amplitudes.len(),
                space.dim()
            )));
        }
        let n = norm(&amplitudes);
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::domain("state vector has zero or non-finite norm"));
        }
        let renormalization = 1.0 / n;
        for a in &mut amplitudes {
            *a *= renormalization;
        }
        let proj = space.projector(LEAKAGE_MARGIN.min(space.cutoff()));
        let leakage = amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| !proj.contains(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum();
        Ok(Self {
            space,
            amplitudes,
            renormalization,
            leakage,
        })
    }

    pub fn vacuum(space: FockSpace) -> Self {
        Self::new(space, crate::fock::vacuum(&space)).expect("vacuum is normalised")
    }

    pub fn number_state(space: FockSpace, n: [usize; 4]) -> Result<Self> {
        if n.iter().any(|&k| k > space.cutoff()) {
            return Err(Error::domain(format!("occupation {n:?} exceeds cutoff {}", space.cutoff())));
        }
        Self::new(space, crate::fock::basis_state(&space, &n))
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// Factor applied to reach unit norm.
    pub fn renormalization(&self) -> f64 {
        self.renormalization
    }

    /// Weight outside the interior with margin [`LEAKAGE_MARGIN`].
    pub fn leakage(&self) -> f64 {
        self.leakage
    }

    /// Weight on states with some occupation above `cutoff - margin`.
    pub fn weight_outside(&self, margin: usize) -> f64 {
        let proj = self.space.projector(margin.min(self.space.cutoff()));
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| !proj.contains(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    pub fn check_leakage(&self) -> Result<()> {
        if self.leakage > LEAKAGE_LIMIT {
            return Err(Error::TruncationOverflow {
                leakage: self.leakage,
                limit: LEAKAGE_LIMIT,
            });
        }
        Ok(())
    }

    /// `|⟨self|other⟩|`.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        if self.space != other.space {
            return Err(Error::domain("states live on different spaces"));
        }
        let s: Complex64 = self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum();
        Ok(s.norm())
    }
}

/// `⟨ψ|O|ψ⟩`.
pub fn expectation(state: &StateVector, op: &FockOperator) -> Result<Complex64> {
    if op.space() != state.space() {
        return Err(Error::domain(format!(
            "operator dimension {} does not match state dimension {}",
            op.space().dim(),
            state.space().dim()
        )));
    }
    op.try_expectation(state.amplitudes())
}

/// Means, covariance `Σ` and commutator matrix `C` of
/// `(X^0..X^3, P^0..P^3)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CovarianceData {
    pub mean_x: [f64; 4],
    pub mean_p: [f64; 4],
    #[serde(with = "crate::io::row_major")]
    pub sigma: Mat8,
    #[serde(with = "crate::io::row_major")]
    pub c: Mat8,
    pub hbar: f64,
    pub leakage: f64,
}

impl CovarianceData {
    /// `(ħ/2) J`.
    pub fn c_expected(&self) -> Mat8 {
        symplectic_form() * (0.5 * self.hbar)
    }

    pub fn means(&self) -> [f64; 8] {
        std::array::from_fn(|a| if a < 4 { self.mean_x[a] } else { self.mean_p[a - 4] })
    }

    /// Smallest eigenvalue of the Hermitian matrix `Σ + iC`.
    pub fn physicality(&self) -> f64 {
        let h: SMatrix<Complex64, 8, 8> = SMatrix::from_fn(|r, c| Complex::new(self.sigma[(r, c)], self.c[(r, c)]));
        SymmetricEigen::new(h).eigenvalues.min()
    }

    /// `max |C - (ħ/2)J|`.
    pub fn commutator_defect(&self) -> f64 {
        (self.c - self.c_expected()).abs().max()
    }
}

/// Schrödinger–Robertson determinant check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrReport {
    pub det_sigma: f64,
    /// `(ħ/2)⁸`.
    pub det_c: f64,
    /// Determinant of the measured `C`.
    pub det_c_measured: f64,
    /// `det Σ - (ħ/2)⁸`.
    pub margin: f64,
    pub saturated: bool,
}

impl SrReport {
    pub fn relative_margin(&self) -> f64 {
        self.margin / self.det_c
    }
}

pub fn sr_check(cov: &CovarianceData) -> SrReport {
    let det_c = (0.5 * cov.hbar).powi(8);
    let det_sigma = cov.sigma.determinant();
    let margin = det_sigma - det_c;
    SrReport {
        det_sigma,
        det_c,
        det_c_measured: cov.c.determinant(),
        margin,
        saturated: margin.abs() < 1e-8 * det_c,
    }
}

/// Product of the eight standard deviations against `(ħ/2)⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UncorrelatedReport {
    pub product: f64,
    pub bound: f64,
    pub satisfied: bool,
    pub ratio: f64,
}

/// Relative size of an off-diagonal entry accepted by the uncorrelated gate.
pub const CORRELATION_GATE: f64 = 1e-8;

/// Rejects states with any correlation coefficient above
/// [`CORRELATION_GATE`], then compares `ΠΔX^μ ΠΔP^μ` with `(ħ/2)⁴`.
pub fn uncorrelated_bound(cov: &CovarianceData) -> Result<UncorrelatedReport> {
    let s = &cov.sigma;
    for r in 0..8 {
        for c in r + 1..8 {
            let scale = (s[(r, r)] * s[(c, c)]).sqrt();
            if s[(r, c)].abs() > CORRELATION_GATE * scale {
                return Err(Error::Correlated {
                    row: r,
                    col: c,
                    value: s[(r, c)],
                });
            }
        }
    }
    let product: f64 = (0..8).map(|a| s[(a, a)].sqrt()).product();
    let bound = (0.5 * cov.hbar).powi(4);
    Ok(UncorrelatedReport {
        product,
        bound,
        satisfied: product >= bound * (1.0 - 1e-12),
        ratio: product / bound,
    })
}

/// Lower-index second moments in physical units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemiclassicalTensors {
    /// `⟨X_μ X_ν⟩`.
    #[serde(with = "crate::io::row_major")]
    pub q: Matrix4<f64>,
    /// `⟨P_μ P_ν⟩`.
    #[serde(with = "crate::io::row_major")]
    pub t: Matrix4<f64>,
    /// `⟨X_μ P_ν + X_ν P_μ⟩`, each product Weyl-ordered.
    #[serde(with = "crate::io::row_major")]
    pub r: Matrix4<f64>,
    /// `⟨x_μ x_ν + p_μ p_ν⟩` in scaled units `x = X/λx`, `p = P/λp`.
    #[serde(with = "crate::io::row_major")]
    pub m: Matrix4<f64>,
}

/// Truncated-space operators for one frame: generator images, quadratures
/// and their Weyl-ordered second moments.
#[derive(Debug, Clone)]
pub struct Observables {
    space: FockSpace,
    table: GeneratorTable,
    first: Vec<FockOperator>,
    second: Vec<FockOperator>,
}

fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * 8 - a * (a + 1) / 2 + b
}

impl Observables {
    pub fn new(space: FockSpace, frame: Frame) -> Result<Self> {
        let table = crate::fock::build_generators(frame)?;
        let quads: Vec<ModePoly> = (0..8).map(|a| table.quadrature(a)).collect();
        let first = quads.iter().map(|q| q.to_operator(&space)).collect();
        let mut second = Vec::with_capacity(36);
        for a in 0..8 {
            for b in a..8 {
                second.push(ModePoly::symmetrized_product(&[&quads[a], &quads[b]]).to_operator(&space));
            }
        }
        Ok(Self {
            space,
            table,
            first,
            second,
        })
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn frame(&self) -> &Frame {
        self.table.frame()
    }

    /// `ζ^μ Z_μ - h.c.`.
    pub fn displacement_exponent(&self, zeta: &[Complex64; 4]) -> ModePoly {
        (0..4).fold(ModePoly::zero(), |acc, mu| {
            let term = self.table.z(mu).scale(zeta[mu]);
            &acc + &(&term - &term.adjoint())
        })
    }

    /// `-(i/α) · ½ ξᵀAξ` with Weyl-ordered products.
    pub fn quadratic_exponent(&self, a: &Mat8) -> ModePoly {
        let sym = 0.5 * (a + a.transpose());
        let quads: Vec<ModePoly> = (0..8).map(|k| self.table.quadrature(k)).collect();
        let mut h = ModePoly::zero();
        for r in 0..8 {
            for c in 0..8 {
                if sym[(r, c)] != 0.0 {
                    let prod = ModePoly::symmetrized_product(&[&quads[r], &quads[c]]);
                    h = &h + &prod.scale_re(0.5 * sym[(r, c)]);
                }
            }
        }
        h.scale(Complex64::new(0.0, -1.0 / self.table.alpha()))
    }

    /// Image of an algebra element.
    pub fn algebra_exponent(&self, el: &NumericElement<Generator>) -> ModePoly {
        self.table.element_image(el)
    }

    /// `exp(t K) |ψ⟩` for an anti-Hermitian `K`.
    pub fn apply_group_element(&self, state: &StateVector, exponent: &ModePoly, parameter: f64) -> Result<StateVector> {
        self.check_space(state)?;
        let defect = (exponent + &exponent.adjoint()).max_coeff();
        if defect > 1e-12 * exponent.max_coeff().max(1.0) {
            return Err(Error::domain(format!("exponent is not anti-Hermitian (defect {defect:e})")));
        }
        if parameter == 0.0 || exponent.is_empty() {
            return Ok(state.clone());
        }
        let op = exponent.scale_re(parameter).to_operator(&self.space);
        let out = StateVector::new(self.space, op.expm_apply(state.amplitudes()))?;
        out.check_leakage()?;
        Ok(out)
    }

    /// `exp(K_φ) exp(D_ζ) |0⟩` with the default generator guard.
    pub fn squeezed_state(&self, params: &SqueezeParameters) -> Result<StateVector> {
        self.squeezed_state_with_guard(params, DEFAULT_SQUEEZE_GUARD)
    }

    pub fn squeezed_state_with_guard(&self, params: &SqueezeParameters, max_norm: f64) -> Result<StateVector> {
        params.validate(max_norm)?;
        let vac = StateVector::vacuum(self.space);
        let displaced = self.apply_group_element(&vac, &self.displacement_exponent(&params.zeta), 1.0)?;
        self.apply_group_element(&displaced, &self.quadratic_exponent(&params.a), 1.0)
    }

    /// Complex-normal amplitudes on occupations up to `support` in every
    /// mode; zero elsewhere.
    pub fn random_state<R: Rng + ?Sized>(&self, support: usize, rng: &mut R) -> Result<StateVector> {
        if support > self.space.cutoff() {
            return Err(Error::domain(format!(
                "support {support} exceeds cutoff {}",
                self.space.cutoff()
            )));
        }
        let amps = self
            .space
            .occupations()
            .map(|n| {
                if n.iter().all(|&k| k <= support) {
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = rng.sample(StandardNormal);
                    Complex64::new(re, im)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        StateVector::new(self.space, amps)
    }

    pub fn expectation(&self, state: &StateVector, op: &FockOperator) -> Result<Complex64> {
        expectation(state, op)
    }

    fn check_space(&self, state: &StateVector) -> Result<()> {
        if state.space() != self.space {
            return Err(Error::domain(format!(
                "state cutoff {} does not match cutoff {}",
                state.space().cutoff(),
                self.space.cutoff()
            )));
        }
        Ok(())
    }

    /// Dimensionless means and Weyl-ordered second moments of `ξ`.
    fn moments(&self, state: &StateVector) -> Result<([f64; 8], Mat8)> {
        self.check_space(state)?;
        state.check_leakage()?;
        let v = state.amplitudes();
        let mean: [f64; 8] = std::array::from_fn(|a| self.first[a].matrix_element(v, v).re);
        let mut m2 = Mat8::zeros();
        for a in 0..8 {
            for b in a..8 {
                let x = self.second[pair_index(a, b)].matrix_element(v, v).re;
                m2[(a, b)] = x;
                m2[(b, a)] = x;
            }
        }
        Ok((mean, m2))
    }

    /// Covariance data from Weyl-ordered second moments. `C` is taken from
    /// products of the truncated quadrature matrices, so it departs from
    /// `(ħ/2)J` when the state reaches the cutoff.
    pub fn covariance_matrix(&self, state: &StateVector) -> Result<CovarianceData> {
        let (mean, m2) = self.moments(state)?;
        let v = state.amplitudes();
        let applied: Vec<Vec<Complex64>> = self.first.iter().map(|q| q.apply(v)).collect();
        let scale: [f64; 8] = std::array::from_fn(|a| self.table.scale_of(a));
        let mut sigma = Mat8::zeros();
        let mut c = Mat8::zeros();
        for a in 0..8 {
            for b in 0..8 {
                sigma[(a, b)] = scale[a] * scale[b] * (m2[(a, b)] - mean[a] * mean[b]);
                let g: Complex64 = applied[a].iter().zip(&applied[b]).map(|(x, y)| x.conj() * y).sum();
                c[(a, b)] = scale[a] * scale[b] * g.im;
            }
        }
        Ok(CovarianceData {
            mean_x: std::array::from_fn(|m| scale[m] * mean[m]),
            mean_p: std::array::from_fn(|m| scale[m + 4] * mean[m + 4]),
            sigma,
            c,
            hbar: self.frame().hbar,
            leakage: state.leakage(),
        })
    }

    pub fn semiclassical_tensors(&self, state: &StateVector) -> Result<SemiclassicalTensors> {
        let (_, m2) = self.moments(state)?;
        let (lx, lp) = (self.frame().lambda_x, self.frame().lambda_p);
        let low = |a: usize, b: usize| ETA[a % 4] * ETA[b % 4] * m2[(a, b)];
        let q = Matrix4::from_fn(|m, n| lx * lx * low(m, n));
        let t = Matrix4::from_fn(|m, n| lp * lp * low(m + 4, n + 4));
        let r = Matrix4::from_fn(|m, n| lx * lp * (low(m, n + 4) + low(n, m + 4)));
        let m = Matrix4::from_fn(|m, n| low(m, n) + low(m + 4, n + 4));
        Ok(SemiclassicalTensors { q, t, r, m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::gaussian_covariance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn obs(cutoff: usize) -> Observables {
        Observables::new(FockSpace::new(cutoff).unwrap(), Frame::natural()).unwrap()
    }

    #[test]
    fn vacuum_covariance_saturates() {
        let o = obs(4);
        let cov = o.covariance_matrix(&StateVector::vacuum(o.space())).unwrap();
        assert!((cov.sigma - 0.5 * Mat8::identity()).abs().max() < 1e-15);
        assert!(cov.commutator_defect() < 1e-15);
        let sr = sr_check(&cov);
        assert!(sr.saturated);
        assert!((sr.det_c_measured - sr.det_c).abs() < 1e-15);
        let unc = uncorrelated_bound(&cov).unwrap();
        assert!((unc.ratio - 1.0).abs() < 1e-12);
    }

    #[test]
    fn first_excited_time_mode() {
        let o = obs(4);
        let s = StateVector::number_state(o.space(), [1, 0, 0, 0]).unwrap();
        let cov = o.covariance_matrix(&s).unwrap();
        assert!((cov.sigma[(0, 0)] - 1.5).abs() < 1e-14);
        assert!((cov.sigma[(4, 4)] - 1.5).abs() < 1e-14);
        let sr = sr_check(&cov);
        assert!((sr.det_sigma / sr.det_c - 9.0).abs() < 1e-12);
        assert!((sr.margin - 8.0 * sr.det_c).abs() < 1e-14);
        assert!((uncorrelated_bound(&cov).unwrap().ratio - 3.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_expectations_are_real() {
        let o = obs(4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = o.random_state(2, &mut rng).unwrap();
        let x0 = o.table().physical_quadrature(0).to_operator(&o.space());
        let x0sq = (&o.table().quadrature(0) * &o.table().quadrature(0)).to_operator(&o.space());
        for op in [&x0, &x0sq] {
            assert!(expectation(&s, op).unwrap().im.abs() < 1e-12);
        }
        let vac = StateVector::vacuum(o.space());
        assert_eq!(expectation(&vac, &x0).unwrap().norm(), 0.0);
        assert!((expectation(&vac, &x0sq).unwrap().re - 0.5).abs() < 1e-15);
        let wrong = FockOperator::identity(FockSpace::new(3).unwrap());
        assert!(matches!(expectation(&vac, &wrong), Err(Error::Domain(_))));
    }

    #[test]
    fn displacement_matches_coherent_amplitude() {
        let o = Observables::new(FockSpace::new(8).unwrap(), Frame::with_alpha(0.5).unwrap()).unwrap();
        let zeta = [
            Complex64::new(0.2, 0.1),
            Complex64::new(-0.3, 0.2),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.1, 0.0),
        ];
        let s = o.squeezed_state(&SqueezeParameters::displacement(zeta)).unwrap();
        // ⟨a_1⟩ = -√α ζ̄^1 for the spatial modes
        let a1 = ModePoly::lower(1).to_operator(&o.space());
        let got = expectation(&s, &a1).unwrap();
        let want = -zeta[1].conj() * 0.5f64.sqrt();
        assert!((got - want).norm() < 1e-9);
        let cov = o.covariance_matrix(&s).unwrap();
        let (m, sigma) = gaussian_covariance(&SqueezeParameters::displacement(zeta), o.frame()).unwrap();
        assert!((cov.sigma - sigma).abs().max() < 1e-8);
        for a in 0..8 {
            assert!((cov.means()[a] - m[a]).abs() < 1e-8);
        }
    }

    #[test]
    fn single_mode_squeeze_matches_oracle() {
        let o = obs(8);
        let p = SqueezeParameters::single_mode_squeeze(1, 0.1);
        let cov = o.covariance_matrix(&o.squeezed_state(&p).unwrap()).unwrap();
        let (_, sigma) = gaussian_covariance(&p, o.frame()).unwrap();
        assert!((cov.sigma - sigma).abs().max() < 1e-6);
        assert!(sr_check(&cov).saturated);
    }

    #[test]
    fn correlated_state_fails_the_gate() {
        let o = obs(8);
        let mut p = SqueezeParameters::default();
        p.a[(1, 6)] = 0.2;
        p.a[(6, 1)] = 0.2;
        let cov = o.covariance_matrix(&o.squeezed_state(&p).unwrap()).unwrap();
        assert!(matches!(uncorrelated_bound(&cov), Err(Error::Correlated { .. })));
    }

    #[test]
    fn leakage_gate_trips_near_cutoff() {
        let o = obs(3);
        let s = StateVector::number_state(o.space(), [0, 3, 0, 0]).unwrap();
        assert_eq!(s.leakage(), 1.0);
        assert!(matches!(o.covariance_matrix(&s), Err(Error::TruncationOverflow { .. })));
        let big = SqueezeParameters::single_mode_squeeze(2, 0.6);
        assert!(matches!(o.squeezed_state(&big), Err(Error::TruncationOverflow { .. })));
        let huge = SqueezeParameters::single_mode_squeeze(2, 5.0);
        assert!(matches!(o.squeezed_state(&huge), Err(Error::Domain(_))));
    }

    #[test]
    fn rotation_leaves_vacuum() {
        let o = obs(4);
        let el = NumericElement::from_terms([
            (Generator::e(1, 2), Complex64::new(1.0, 0.0)),
            (Generator::e(2, 1), Complex64::new(-1.0, 0.0)),
        ]);
        let vac = StateVector::vacuum(o.space());
        let out = o.apply_group_element(&vac, &o.algebra_exponent(&el), 0.7).unwrap();
        assert!((out.overlap(&vac).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(o.apply_group_element(&vac, &o.algebra_exponent(&el), 0.0).unwrap(), vac);
        let not_anti = NumericElement::from_terms([(Generator::e(1, 1), Complex64::new(1.0, 0.0))]);
        assert!(o.apply_group_element(&vac, &o.algebra_exponent(&not_anti), 0.1).is_err());
    }

    #[test]
    fn vacuum_tensors() {
        let o = obs(4);
        let t = o.semiclassical_tensors(&StateVector::vacuum(o.space())).unwrap();
        assert!((t.q - 0.5 * Matrix4::<f64>::identity()).abs().max() < 1e-15);
        assert!((t.t - 0.5 * Matrix4::<f64>::identity()).abs().max() < 1e-15);
        assert!(t.r.abs().max() < 1e-15);
        assert!((t.m - Matrix4::<f64>::identity()).abs().max() < 1e-15);
    }
}
