use num_complex::Complex64;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::generators::GeneratorTable;
use super::operator::FockOperator;
use super::poly::ModePoly;
use super::space::FockSpace;
use crate::algebra::{commutator, conjugate, symplectic_metric, Element, Quaplectic};
use crate::error::{Error, Result};

/// Residuals of the truncated representation against the structure
/// constants.
#[derive(Debug, Clone, Serialize)]
pub struct RepReport {
    pub cutoff: usize,
    pub dimension: usize,
    pub margin: usize,
    pub interior_states: usize,
    pub alpha_hbar: f64,
    pub brackets_checked: usize,
    /// `max ‖[A,B] - image([A,B])‖` with rows and columns in the interior.
    pub max_residual: f64,
    pub worst_bracket: String,
    /// Same maximum over the whole truncated space.
    pub max_residual_unprojected: f64,
    /// `[x^μ, p^ν] - iα η^μν` on the interior and `[x,x]`, `[p,p]` everywhere.
    pub quadrature_residual: f64,
    /// `image(g†) - image(g)†` over all labels and `X`, `P` hermiticity.
    pub hermiticity_residual: f64,
}

impl RepReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_residual < tol && self.quadrature_residual < tol && self.hermiticity_residual < tol
    }
}

fn interior_guard(space: &FockSpace, margin: usize) -> Result<()> {
    if margin > space.cutoff() {
        return Err(Error::domain(format!(
            "cutoff {} leaves no interior states for margin {margin}; use cutoff > {margin}",
            space.cutoff()
        )));
    }
    Ok(())
}

/// Compares every bracket of truncated generator matrices with the matrix
/// of the bracket computed in the abstract algebra.
pub fn verify_rep(space: &FockSpace, table: &GeneratorTable, margin: usize) -> Result<RepReport> {
    interior_guard(space, margin)?;
    let alpha = table.alpha();
    let alg = Quaplectic::new(
        Ratio::<i128>::approximate_float(alpha).ok_or_else(|| Error::domain("alpha_hbar is not representable"))?,
    );
    let basis = Quaplectic::quaplectic_basis();
    let proj = space.projector(margin);
    let images: Vec<FockOperator> = basis.iter().map(|g| table.image(g).to_operator(space)).collect();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<(f64, f64, String)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let lhs = images[i].commutator(&images[j]);
            let bracket = commutator(&alg, &Element::basis(basis[i]), &Element::basis(basis[j]));
            let rhs = table.element_image(&bracket.to_numeric()).to_operator(space);
            let diff = lhs.sub(&rhs);
            (diff.max_abs_on(&proj), diff.max_abs(), format!("[{:?}, {:?}]", basis[i], basis[j]))
        })
        .collect();
    let (mut max_residual, mut max_unproj, mut worst) = (0.0f64, 0.0f64, String::new());
    for (r, u, label) in results {
        if r > max_residual || worst.is_empty() {
            max_residual = max_residual.max(r);
            worst = label;
        }
        max_unproj = max_unproj.max(u);
    }

    let quads: Vec<FockOperator> = (0..8).map(|a| table.quadrature(a).to_operator(space)).collect();
    let mut quadrature_residual = 0.0f64;
    for a in 0..8 {
        for b in 0..8 {
            let comm = quads[a].commutator(&quads[b]);
            let j = symplectic_metric(a as u8, b as u8) as f64;
            if j == 0.0 {
                quadrature_residual = quadrature_residual.max(comm.max_abs());
            } else {
                let target = FockOperator::identity(*space).scale(Complex64::new(0.0, alpha * j));
                quadrature_residual = quadrature_residual.max(comm.sub(&target).max_abs_on(&proj));
            }
        }
    }

    let mut hermiticity_residual = quads.iter().map(FockOperator::hermiticity_defect).fold(0.0, f64::max);
    for (g, img) in basis.iter().zip(&images) {
        let conj = conjugate(&alg, &Element::basis(*g)).to_numeric();
        let img_conj = table.element_image(&conj).to_operator(space);
        hermiticity_residual = hermiticity_residual.max(img_conj.sub(&img.adjoint()).max_abs());
    }

    Ok(RepReport {
        cutoff: space.cutoff(),
        dimension: space.dim(),
        margin,
        interior_states: proj.rank(),
        alpha_hbar: alpha,
        brackets_checked: pairs.len(),
        max_residual,
        worst_bracket: worst,
        max_residual_unprojected: max_unproj,
        quadrature_residual,
        hermiticity_residual,
    })
}

/// Casimir traces and the quadratic Casimir relation.
#[derive(Debug, Clone, Serialize)]
pub struct CasimirReport {
    pub margin: usize,
    /// `max |C_n|` on the interior, `n = 1, 2, 3`.
    pub casimir_norms: [f64; 3],
    /// `max ‖[C_n, E^μ_ν]‖` on the interior.
    pub commutator_with_e: f64,
    /// Constant fitted to `-C1 = ½B - α𝒩 - κ` (printed sign of `𝒩`).
    pub kappa_printed_sign: f64,
    pub residual_printed_sign: f64,
    /// Constant fitted to `-C1 = ½B + α𝒩 - κ`.
    pub kappa: f64,
    pub residual: f64,
    /// Reference constant `4α²`.
    pub kappa_reference: f64,
}

impl CasimirReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.casimir_norms.iter().all(|&c| c < tol) && self.commutator_with_e < tol && self.residual < tol
    }
}

/// Builds `C_n = tr(e^(n))` from the spin parts and fits the constant term
/// of the quadratic Casimir relation on interior states.
pub fn casimir_report(space: &FockSpace, table: &GeneratorTable, margin: usize) -> Result<CasimirReport> {
    interior_guard(space, margin)?;
    let proj = space.projector(margin);
    let spin: Vec<ModePoly> = (0..16).map(|k| table.spin(k / 4, k % 4)).collect();
    let sp = |m: usize, n: usize| &spin[4 * m + n];
    let mut powers = vec![spin.clone()];
    for _ in 1..3 {
        let prev = powers.last().unwrap();
        let next: Vec<ModePoly> = (0..16)
            .map(|k| {
                let (m, n) = (k / 4, k % 4);
                (0..4).fold(ModePoly::zero(), |acc, r| &acc + &(&prev[4 * m + r] * sp(r, n)))
            })
            .collect();
        powers.push(next);
    }
    let casimirs: Vec<FockOperator> = powers
        .iter()
        .map(|p| (0..4).fold(ModePoly::zero(), |acc, m| &acc + &p[5 * m]).to_operator(space))
        .collect();
    let casimir_norms = [
        casimirs[0].max_abs_on(&proj),
        casimirs[1].max_abs_on(&proj),
        casimirs[2].max_abs_on(&proj),
    ];
    let mut commutator_with_e = 0.0f64;
    for m in 0..4 {
        for n in 0..4 {
            let e = table.e(m, n).to_operator(space);
            for c in &casimirs {
                commutator_with_e = commutator_with_e.max(c.commutator(&e).max_abs_on(&proj));
            }
        }
    }

    let alpha = table.alpha();
    let c1 = (0..4).fold(ModePoly::zero(), |acc, m| &acc + sp(m, m));
    let half_b = table.born_green().scale_re(0.5);
    let alpha_n = table.number_operator().scale_re(alpha);
    let fit = |rhs_without_kappa: ModePoly| -> (f64, f64) {
        // -C1 - (rhs - κ) = D + κ; choose κ = -mean(diag D) on the interior
        let d = (&(-&c1) - &rhs_without_kappa).to_operator(space);
        let dense_diag: Vec<f64> = (0..space.dim())
            .filter(|&i| proj.contains(i))
            .map(|i| d.matrix().get_entry(i, i).map(|e| e.into_value().re).unwrap_or(0.0))
            .collect();
        let kappa = -dense_diag.iter().sum::<f64>() / dense_diag.len() as f64;
        let shifted = d.add(&FockOperator::identity(*space).scale(Complex64::new(kappa, 0.0)));
        (kappa, shifted.max_abs_on(&proj))
    };
    let (kappa_printed_sign, residual_printed_sign) = fit(&half_b - &alpha_n);
    let (kappa, residual) = fit(&half_b + &alpha_n);

    Ok(CasimirReport {
        margin,
        casimir_norms,
        commutator_with_e,
        kappa_printed_sign,
        residual_printed_sign,
        kappa,
        residual,
        kappa_reference: 4.0 * alpha * alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::Frame;

    #[test]
    fn representation_is_faithful_on_the_interior() {
        let space = FockSpace::new(4).unwrap();
        let table = GeneratorTable::new(Frame::with_alpha(0.75).unwrap());
        let rep = verify_rep(&space, &table, 2).unwrap();
        assert_eq!(rep.brackets_checked, 300);
        assert!(rep.passed(1e-12), "{rep:?}");
        assert!(rep.max_residual_unprojected > 1.0);
    }

    #[test]
    fn cutoff_below_margin_is_rejected() {
        let space = FockSpace::new(1).unwrap();
        let table = GeneratorTable::new(Frame::natural());
        assert!(matches!(verify_rep(&space, &table, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn casimirs_vanish_and_relation_needs_corrected_sign() {
        let space = FockSpace::new(4).unwrap();
        let table = GeneratorTable::new(Frame::natural());
        let rep = casimir_report(&space, &table, 2).unwrap();
        assert!(rep.passed(1e-10), "{rep:?}");
        assert!(rep.kappa.abs() < 1e-12);
        assert!(rep.residual_printed_sign > 1.0);
        assert_eq!(rep.kappa_reference, 4.0);
    }
}
