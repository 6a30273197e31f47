//! Exact structure constants.
//!
//! Two algebras are realised over the same element type:
//!
//! - [`Quaplectic`]: `u(3,1) ⋉ h(3,1)` on the basis `{E^μ_ν, Z_μ, Z̄_μ, I}`,
//!   optionally extended by the spin generators `e^μ_ν`.
//! - [`Canonical`]: `sp(8,ℝ) ⋉ h(4)` on `{Z_KL, Z_K, I}` with the compound
//!   index `K = 0..8` packing `(Z_κ, Z̄_κ)`.
//!
//! Coefficients are complex rationals, so bracket identities are checked
//! exactly. The central charge `α_ħ` is a positive rational parameter.

mod canonical;
mod contract;
mod element;
mod exact;
mod quaplectic;
mod spin_orbit;
mod tensor;

pub use canonical::{embed_quaplectic, symplectic_metric, Canonical, CanonicalLabel};
pub use contract::{
    contract, contraction_slopes, ContractionCase, ContractionReport, ContractionTerm,
    LorentzGenerator,
};
pub use element::{Element, NumericElement, Scalar};
pub use exact::{exact_i, format_exact, q, Exact, Rational};
pub use quaplectic::{Generator, Quaplectic};
pub use spin_orbit::{spin_orbit_split, SpinOrbitSplit};
pub use tensor::{
    momentum_scaled, position_scaled, tensor_form, tensor_form_report, FamilyReport,
    TensorFamily, TensorKind,
};

use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Debug;

/// A Lie algebra presented by exact brackets of basis labels.
pub trait LieAlgebra: Sync {
    type Label: Ord + Clone + Debug + Send + Sync;

    /// `[a, b]` for two basis labels.
    fn bracket_basis(&self, a: &Self::Label, b: &Self::Label) -> Element<Self::Label>;

    /// The full basis used by exhaustive scans.
    fn basis(&self) -> Vec<Self::Label>;
}

/// Hermitian conjugation on basis labels: `label† = sign · label'`.
pub trait Conjugation: LieAlgebra {
    fn conjugate_label(&self, label: &Self::Label) -> (Self::Label, i64);
}

/// Bilinear extension of the basis brackets.
pub fn commutator<A, C>(
    alg: &A,
    a: &Element<A::Label, C>,
    b: &Element<A::Label, C>,
) -> Element<A::Label, C>
where
    A: LieAlgebra,
    C: Scalar,
{
    let mut out = Element::zero();
    for (la, ca) in a.iter() {
        for (lb, cb) in b.iter() {
            let coeff = ca.clone() * cb.clone();
            for (lc, cc) in alg.bracket_basis(la, lb).iter() {
                out.add_term(lc.clone(), coeff.clone() * C::from_exact(cc));
            }
        }
    }
    out
}

/// Antilinear hermitian conjugation extended from the basis labels.
pub fn conjugate<A, C>(alg: &A, a: &Element<A::Label, C>) -> Element<A::Label, C>
where
    A: Conjugation,
    C: Scalar,
{
    let mut out = Element::zero();
    for (l, c) in a.iter() {
        let (l2, sign) = alg.conjugate_label(l);
        out.add_term(l2, c.conj() * C::from_i64(sign));
    }
    out
}

/// Outcome of an exhaustive Jacobi scan.
#[derive(Debug, Clone, Serialize)]
pub struct JacobiReport {
    pub basis_size: usize,
    pub triples_checked: usize,
    pub violations: Vec<String>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` for three basis labels.
pub fn jacobiator<A: LieAlgebra>(alg: &A, a: &A::Label, b: &A::Label, c: &A::Label) -> Element<A::Label> {
    let ea = Element::basis(a.clone());
    let eb = Element::basis(b.clone());
    let ec = Element::basis(c.clone());
    let mut sum = commutator(alg, &ea, &commutator(alg, &eb, &ec));
    sum = sum + commutator(alg, &eb, &commutator(alg, &ec, &ea));
    sum + commutator(alg, &ec, &commutator(alg, &ea, &eb))
}

/// Evaluates the Jacobiator exactly for every ordered triple of `basis`.
pub fn jacobi_report<A: LieAlgebra>(alg: &A, basis: &[A::Label]) -> JacobiReport {
    let violations: Vec<String> = basis
        .par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in basis {
                for c in basis {
                    let j = jacobiator(alg, a, b, c);
                    if !j.is_zero() {
                        local.push(format!("({a:?}, {b:?}, {c:?}) -> {j:?}"));
                    }
                }
            }
            local
        })
        .collect();
    JacobiReport {
        basis_size: basis.len(),
        triples_checked: basis.len().pow(3),
        violations,
    }
}

/// Counts of conjugation checks over all basis pairs.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugationReport {
    pub labels_checked: usize,
    pub pairs_checked: usize,
    pub involution_failures: Vec<String>,
    pub antihomomorphism_failures: Vec<String>,
}

impl ConjugationReport {
    pub fn passed(&self) -> bool {
        self.involution_failures.is_empty() && self.antihomomorphism_failures.is_empty()
    }
}

/// Checks `(x†)† = x` and `[a,b]† = [b†, a†]` on the basis.
pub fn conjugation_report<A: Conjugation>(alg: &A, basis: &[A::Label]) -> ConjugationReport {
    let mut involution_failures = Vec::new();
    for l in basis {
        let e: Element<A::Label> = Element::basis(l.clone());
        if conjugate(alg, &conjugate(alg, &e)) != e {
            involution_failures.push(format!("{l:?}"));
        }
    }
    let antihomomorphism_failures: Vec<String> = basis
        .par_iter()
        .flat_map_iter(|a| {
            let ea: Element<A::Label> = Element::basis(a.clone());
            let mut local = Vec::new();
            for b in basis {
                let eb = Element::basis(b.clone());
                let lhs = conjugate(alg, &commutator(alg, &ea, &eb));
                let rhs = commutator(alg, &conjugate(alg, &eb), &conjugate(alg, &ea));
                if lhs != rhs {
                    local.push(format!("({a:?}, {b:?})"));
                }
            }
            local
        })
        .collect();
    ConjugationReport {
        labels_checked: basis.len(),
        pairs_checked: basis.len().pow(2),
        involution_failures,
        antihomomorphism_failures,
    }
}
