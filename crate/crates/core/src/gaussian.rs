//! Phase-space layer: the Lorentz-block symplectic form, Williamson normal
//! form and analytic covariances of Gaussian states.
//!
//! Phase-space vectors are ordered `(X^0..X^3, P^0..P^3)` and the symplectic
//! form is `J = [[0, η], [-η, 0]]`. Dimensionless quadratures
//! `ξ = (X/λx, P/λp)` satisfy `[ξ_a, ξ_b] = iα_ħ J_ab`.

use nalgebra::{Complex, SMatrix, SVector, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::Frame;
use crate::ETA;

pub type Mat8 = SMatrix<f64, 8, 8>;
pub type Vec8 = SVector<f64, 8>;

/// `J = [[0, η], [-η, 0]]`.
pub fn symplectic_form() -> Mat8 {
    let mut j = Mat8::zeros();
    for mu in 0..4 {
        j[(mu, mu + 4)] = ETA[mu];
        j[(mu + 4, mu)] = -ETA[mu];
    }
    j
}

/// `[[0, I], [-I, 0]]`.
pub fn standard_form() -> Mat8 {
    let mut j = Mat8::zeros();
    for k in 0..4 {
        j[(k, k + 4)] = 1.0;
        j[(k + 4, k)] = -1.0;
    }
    j
}

/// Permutation `P` with `P J Pᵀ` the standard form: each spatial `X^i` is
/// swapped with its `P^i`.
pub fn standard_permutation() -> Mat8 {
    let mut p = Mat8::zeros();
    p[(0, 0)] = 1.0;
    p[(4, 4)] = 1.0;
    for i in 1..4 {
        p[(i, i + 4)] = 1.0;
        p[(i + 4, i)] = 1.0;
    }
    p
}

/// `max |S J Sᵀ - J|`.
pub fn symplectic_defect(s: &Mat8) -> f64 {
    let j = symplectic_form();
    (s * j * s.transpose() - j).abs().max()
}

/// `diag(λx, λx, λx, λx, λp, λp, λp, λp)`.
pub fn scale_matrix(frame: &Frame) -> Mat8 {
    Mat8::from_diagonal(&Vec8::from_fn(|a, _| if a < 4 { frame.lambda_x } else { frame.lambda_p }))
}

/// Vacuum covariance `(α/2) Λ²`; equal to `(ħ/2) I` in natural units.
pub fn vacuum_covariance(frame: &Frame) -> Mat8 {
    let l = scale_matrix(frame);
    l * l * (0.5 * frame.alpha_hbar)
}

/// Physical phase-space matrix of the reciprocity map
/// `X/λx → P/λp`, `P/λp → -X/λx`.
pub fn reciprocity_matrix(frame: &Frame) -> Mat8 {
    let mut r = Mat8::zeros();
    let k = frame.lambda_x / frame.lambda_p;
    for mu in 0..4 {
        r[(mu, mu + 4)] = k;
        r[(mu + 4, mu)] = -1.0 / k;
    }
    r
}

fn sym_eigen(m: &Mat8) -> SymmetricEigen<f64, nalgebra::Const<8>> {
    SymmetricEigen::new(*m)
}

fn check_spd(sigma: &Mat8) -> Result<SymmetricEigen<f64, nalgebra::Const<8>>> {
    let scale = sigma.abs().max().max(f64::MIN_POSITIVE);
    let asym = (sigma - sigma.transpose()).abs().max();
    if asym > 1e-12 * scale {
        return Err(Error::domain(format!("matrix is not symmetric (defect {asym:e})")));
    }
    let eig = sym_eigen(&(0.5 * (sigma + sigma.transpose())));
    let min = eig.eigenvalues.min();
    if !(min > 0.0) {
        return Err(Error::NotPositiveDefinite { eigenvalue: min });
    }
    Ok(eig)
}

fn spectral_power(eig: &SymmetricEigen<f64, nalgebra::Const<8>>, p: f64) -> Mat8 {
    let d = Mat8::from_diagonal(&eig.eigenvalues.map(|v| v.powf(p)));
    eig.eigenvectors * d * eig.eigenvectors.transpose()
}

/// `S Σ Sᵀ = D` with `S J Sᵀ = J`.
#[derive(Debug, Clone, Serialize)]
pub struct WilliamsonResult {
    #[serde(with = "crate::io::row_major")]
    pub s: Mat8,
    #[serde(with = "crate::io::row_major")]
    pub d: Mat8,
    /// Symplectic eigenvalues, descending; `D = diag(ν, ν)`.
    pub nus: [f64; 4],
}

/// Williamson normal form of a symmetric positive-definite matrix.
pub fn williamson(sigma: &Mat8) -> Result<WilliamsonResult> {
    let p = standard_permutation();
    let sig_std = p * sigma * p.transpose();
    let eig = check_spd(&sig_std)?;
    let root = spectral_power(&eig, 0.5);
    let inv_root = spectral_power(&eig, -0.5);
    let k = root * standard_form() * root;
    // iK is Hermitian; its positive eigenvalues are the ν
    let ik: SMatrix<Complex64, 8, 8> = k.map(|v| Complex::new(0.0, v));
    let herm = SymmetricEigen::new(ik);
    let mut order: Vec<usize> = (0..8).filter(|&i| herm.eigenvalues[i] > 0.0).collect();
    if order.len() != 4 {
        return Err(Error::Degeneracy(format!(
            "expected four positive symplectic eigenvalues, found {}",
            order.len()
        )));
    }
    order.sort_by(|&a, &b| herm.eigenvalues[b].total_cmp(&herm.eigenvalues[a]));
    let mut o = Mat8::zeros();
    let mut nus = [0.0; 4];
    let r2 = std::f64::consts::SQRT_2;
    for (slot, &i) in order.iter().enumerate() {
        nus[slot] = herm.eigenvalues[i];
        let u = herm.eigenvectors.column(i);
        // iK u = ν u  ⇒  K x = ν y, K y = -ν x for u = x + i y
        for r in 0..8 {
            o[(r, slot)] = r2 * u[r].im;
            o[(r, slot + 4)] = r2 * u[r].re;
        }
    }
    let half = Mat8::from_diagonal(&Vec8::from_fn(|a, _| nus[a % 4].sqrt()));
    let s_std = half * o.transpose() * inv_root;
    let s = p.transpose() * s_std * p;
    let d = Mat8::from_diagonal(&Vec8::from_fn(|a, _| nus[a % 4]));
    Ok(WilliamsonResult { s, d, nus })
}

/// Moduli of the eigenvalues of `JΣ`, paired and sorted descending.
pub fn symplectic_eigenvalues(sigma: &Mat8) -> Result<[f64; 4]> {
    check_spd(sigma)?;
    let js = symplectic_form() * sigma;
    let mut mods: Vec<f64> = js.complex_eigenvalues().iter().map(|c| c.norm()).collect();
    mods.sort_by(|a, b| b.total_cmp(a));
    let mut out = [0.0; 4];
    for k in 0..4 {
        let (a, b) = (mods[2 * k], mods[2 * k + 1]);
        if (a - b).abs() > 1e-8 * a.max(1.0) {
            return Err(Error::Degeneracy(format!("unpaired symplectic eigenvalues {a} and {b}")));
        }
        out[k] = 0.5 * (a + b);
    }
    Ok(out)
}

/// Gaussian parameters: real symmetric generator `A` of the flow
/// `S = exp(JA)` in dimensionless quadratures, and four complex
/// displacement amplitudes `ζ^μ`.
///
/// The unitary `U = exp(-iH/α)` with `H = ½ ξᵀAξ` (symmetrised) acts as
/// `U† ξ U = S ξ`. The displacement `exp(ζ^μ Z_μ - h.c.)` shifts
/// `⟨X^μ/λx⟩ = √2 α Re ζ^μ` and `⟨P^μ/λp⟩ = √2 α Im ζ^μ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeParameters {
    #[serde(with = "crate::io::row_major")]
    pub a: Mat8,
    pub zeta: [Complex64; 4],
}

impl Default for SqueezeParameters {
    fn default() -> Self {
        Self {
            a: Mat8::zeros(),
            zeta: [Complex64::new(0.0, 0.0); 4],
        }
    }
}

/// `Z_K = T ξ` for the compound index `K` (`Z_κ`, then `Z̄_κ`).
pub fn compound_transform() -> SMatrix<Complex64, 8, 8> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut t = SMatrix::<Complex64, 8, 8>::zeros();
    for mu in 0..4 {
        let e = ETA[mu] * s;
        t[(mu, mu)] = Complex::new(e, 0.0);
        t[(mu, mu + 4)] = Complex::new(0.0, -e);
        t[(mu + 4, mu)] = Complex::new(e, 0.0);
        t[(mu + 4, mu + 4)] = Complex::new(0.0, e);
    }
    t
}

impl SqueezeParameters {
    pub fn displacement(zeta: [Complex64; 4]) -> Self {
        Self {
            zeta,
            ..Self::default()
        }
    }

    /// Squeeze of one mode: `X^μ/λx → e^{-r} X^μ/λx`, `P^μ/λp → e^{r} P^μ/λp`.
    pub fn single_mode_squeeze(mode: usize, r: f64) -> Self {
        let mut a = Mat8::zeros();
        let v = -ETA[mode] * r;
        a[(mode, mode + 4)] = v;
        a[(mode + 4, mode)] = v;
        Self {
            a,
            ..Self::default()
        }
    }

    /// Converts complex coefficients `φ^{KL}` of `½(φ^{KL} Z_KL - h.c.)`,
    /// `Z_KL = (1/2α){Z_K, Z_L}`, to the real generator: `A = -2 Im(Tᵀ φ T)`.
    pub fn from_compound(phi: &SMatrix<Complex64, 8, 8>, zeta: [Complex64; 4]) -> Self {
        let sym = (phi + phi.transpose()) * Complex::new(0.5, 0.0);
        let t = compound_transform();
        let big = t.transpose() * sym * t;
        Self {
            a: big.map(|c| -2.0 * c.im),
            zeta,
        }
    }

    pub fn a_sym(&self) -> Mat8 {
        0.5 * (self.a + self.a.transpose())
    }

    /// Frobenius norm of the symmetrised generator.
    pub fn scale(&self) -> f64 {
        self.a_sym().norm()
    }

    pub fn validate(&self, max_norm: f64) -> Result<()> {
        let finite = self.a.iter().all(|v| v.is_finite()) && self.zeta.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::domain("squeeze parameters must be finite"));
        }
        if self.scale() > max_norm {
            return Err(Error::domain(format!(
                "squeeze generator norm {} exceeds the guard {max_norm}",
                self.scale()
            )));
        }
        Ok(())
    }

    /// `S = exp(J A)` in dimensionless quadratures.
    pub fn flow(&self) -> Mat8 {
        (symplectic_form() * self.a_sym()).exp()
    }

    /// Dimensionless means before the squeeze.
    pub fn displaced_means(&self, alpha: f64) -> Vec8 {
        let k = std::f64::consts::SQRT_2 * alpha;
        Vec8::from_fn(|a, _| if a < 4 { k * self.zeta[a].re } else { k * self.zeta[a - 4].im })
    }
}

/// Analytic means and covariance of `exp(K_φ) exp(D_ζ)|0⟩` in physical
/// units.
pub fn gaussian_covariance(params: &SqueezeParameters, frame: &Frame) -> Result<(Vec8, Mat8)> {
    params.validate(10.0)?;
    let s = params.flow();
    let l = scale_matrix(frame);
    let means = l * s * params.displaced_means(frame.alpha_hbar);
    let sigma = l * s * s.transpose() * l * (0.5 * frame.alpha_hbar);
    Ok((means, sigma))
}

/// Physical symplectic matrix from a dimensionless one: `Λ S Λ⁻¹`.
pub fn to_physical(s: &Mat8, frame: &Frame) -> Mat8 {
    let l = scale_matrix(frame);
    let li = Mat8::from_diagonal(&l.diagonal().map(|v| 1.0 / v));
    l * s * li
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_symplectic(rng: &mut ChaCha8Rng, scale: f64) -> Mat8 {
        let mut a = Mat8::from_fn(|_, _| rng.random_range(-1.0..1.0));
        a = 0.5 * (a + a.transpose()) * scale;
        (symplectic_form() * a).exp()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn forms_and_permutation() {
        let j = symplectic_form();
        assert_eq!(j * j, -Mat8::identity());
        assert_eq!(j.transpose(), -j);
        let p = standard_permutation();
        assert_eq!(p * j * p.transpose(), standard_form());
    }

    #[test]
    fn isotropic_covariance_is_already_normal() {
        let w = williamson(&(0.5 * Mat8::identity())).unwrap();
        assert!(w.nus.iter().all(|&n| (n - 0.5).abs() < 1e-12));
        assert!(symplectic_defect(&w.s) < 1e-10);
        assert!((w.s * w.s.transpose() - Mat8::identity()).abs().max() < 1e-10);
    }

    #[test]
    fn constructed_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = [1.3, 1.1, 0.9, 0.7];
        let dm = Mat8::from_diagonal(&Vec8::from_fn(|a, _| d[a % 4]));
        for _ in 0..20 {
            let s0 = random_symplectic(&mut rng, 0.4);
            let sigma = s0 * dm * s0.transpose();
            let w = williamson(&sigma).unwrap();
            for k in 0..4 {
                assert!((w.nus[k] - d[k]).abs() < 1e-9);
            }
            assert!(symplectic_defect(&w.s) < 1e-10);
            assert!((w.s * sigma * w.s.transpose() - w.d).abs().max() < 1e-9);
            let prod: f64 = w.nus.iter().map(|n| n * n).product();
            assert!(rel(sigma.determinant(), prod) < 1e-9);
            let alt = symplectic_eigenvalues(&sigma).unwrap();
            for k in 0..4 {
                assert!((alt[k] - w.nus[k]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn single_mode_squeeze_is_pure() {
        let r: f64 = 0.3;
        let mut sigma = 0.5 * Mat8::identity();
        sigma[(1, 1)] = 0.5 * (2.0 * r).exp();
        sigma[(5, 5)] = 0.5 * (-2.0 * r).exp();
        let w = williamson(&sigma).unwrap();
        assert!(w.nus.iter().all(|&n| (n - 0.5).abs() < 1e-12));
    }

    #[test]
    fn non_positive_input_reports_eigenvalue() {
        let mut sigma = Mat8::identity();
        sigma[(3, 3)] = -0.25;
        match williamson(&sigma) {
            Err(Error::NotPositiveDefinite { eigenvalue }) => assert_eq!(eigenvalue, -0.25),
            other => panic!("unexpected {other:?}"),
        }
        let mut asym = Mat8::identity();
        asym[(0, 1)] = 0.1;
        assert!(matches!(williamson(&asym), Err(Error::Domain(_))));
    }

    #[test]
    fn squeeze_covariance_closed_form() {
        let frame = Frame::natural();
        let (m, s) = gaussian_covariance(&SqueezeParameters::single_mode_squeeze(1, 0.1), &frame).unwrap();
        assert!(m.norm() == 0.0);
        assert!((s[(1, 1)] - 0.5 * (-0.2f64).exp()).abs() < 1e-14);
        assert!((s[(5, 5)] - 0.5 * (0.2f64).exp()).abs() < 1e-14);
        assert!(rel(s.determinant(), 0.5f64.powi(8)) < 1e-10);
    }

    #[test]
    fn displacement_leaves_covariance() {
        let frame = Frame::with_alpha(2.0).unwrap();
        let z = [Complex64::new(0.1, -0.2), Complex64::new(0.0, 0.3), Complex64::new(0.0, 0.0), Complex64::new(-0.4, 0.0)];
        let (m, s) = gaussian_covariance(&SqueezeParameters::displacement(z), &frame).unwrap();
        assert_eq!(s, vacuum_covariance(&frame));
        assert!((m[0] - 2.0 * std::f64::consts::SQRT_2 * 0.1).abs() < 1e-14);
        assert!((m[5] - 2.0 * std::f64::consts::SQRT_2 * 0.3).abs() < 1e-14);
    }

    #[test]
    fn reciprocity_has_order_four() {
        let frame = Frame::new(1.0, 1.0, &crate::units::UnitScales {
            lambda_x: 2.0,
            lambda_p: 0.5,
            ..crate::units::UnitScales::natural()
        })
        .unwrap();
        let r = reciprocity_matrix(&frame);
        assert!((r * r * r * r - Mat8::identity()).abs().max() < 1e-15);
        assert!(symplectic_defect(&r) < 1e-15);
    }

    #[test]
    fn compound_and_real_encodings_agree() {
        // φ^{11'} = φ^{1'1} = c on the (Z_1, Z̄_1) pair is a phase rotation
        let mut phi = SMatrix::<Complex64, 8, 8>::zeros();
        phi[(1, 5)] = Complex64::new(0.0, 0.2);
        let p = SqueezeParameters::from_compound(&phi, [Complex64::new(0.0, 0.0); 4]);
        assert!((p.a - p.a.transpose()).abs().max() < 1e-15);
        let s = p.flow();
        assert!(symplectic_defect(&s) < 1e-12);
        // rotation in the (x1, p1) plane: orthogonal as well as symplectic
        assert!((s * s.transpose() - Mat8::identity()).abs().max() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::Rng;

        proptest! {
            #[test]
            fn determinant_is_product_of_squared_nus(seed in 0u64..1000) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let m = Mat8::from_fn(|_, _| rng.random_range(-1.0..1.0));
                let sigma = m * m.transpose() + 0.1 * Mat8::identity();
                let w = williamson(&sigma).unwrap();
                let prod: f64 = w.nus.iter().map(|n| n * n).product();
                prop_assert!(rel(sigma.determinant(), prod) < 1e-8);
            }

            #[test]
            fn flows_compose_symplectically(seed in 0u64..1000) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let s = random_symplectic(&mut rng, 0.5) * random_symplectic(&mut rng, 0.5);
                prop_assert!(symplectic_defect(&s) < 1e-10);
            }
        }
    }
}
