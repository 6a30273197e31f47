use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::{Element, Scalar};
use super::exact::{Exact, Rational};
use super::quaplectic::Generator;
use super::LieAlgebra;
use crate::eta;

/// Basis label of `sp(8,ℝ) ⋉ h(4)`. Compound indices run over `0..8`, with
/// `K < 4` standing for `Z_κ` and `K ≥ 4` for `Z̄_{K-4}`.
/// `Quad(K, L)` is `(1/2α){Z_K, Z_L}` and is stored with `K ≤ L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CanonicalLabel {
    Quad(u8, u8),
    Lin(u8),
    Identity,
}

impl CanonicalLabel {
    pub fn quad(k: usize, l: usize) -> Self {
        assert!(k < 8 && l < 8, "compound index out of range");
        let (a, b) = if k <= l { (k, l) } else { (l, k) };
        CanonicalLabel::Quad(a as u8, b as u8)
    }

    pub fn lin(k: usize) -> Self {
        assert!(k < 8, "compound index out of range");
        CanonicalLabel::Lin(k as u8)
    }
}

/// Entry of the symplectic metric `J = [[0, η], [-η, 0]]`.
pub fn symplectic_metric(k: u8, l: u8) -> i64 {
    if k < 4 && l == k + 4 {
        eta(k as usize)
    } else if k >= 4 && l + 4 == k {
        -eta(l as usize)
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canonical {
    alpha: Rational,
    include_linear: bool,
}

impl Default for Canonical {
    fn default() -> Self {
        Self::new(Rational::one())
    }
}

impl Canonical {
    pub fn new(alpha: Rational) -> Self {
        assert!(alpha > Rational::zero(), "alpha must be positive");
        Self {
            alpha,
            include_linear: true,
        }
    }

    /// Same brackets; [`LieAlgebra::basis`] lists only the 36 quadratic labels.
    pub fn symplectic_only(alpha: Rational) -> Self {
        Self {
            include_linear: false,
            ..Self::new(alpha)
        }
    }

    pub fn quadratic_basis() -> Vec<CanonicalLabel> {
        let mut out = Vec::with_capacity(36);
        for k in 0..8u8 {
            for l in k..8u8 {
                out.push(CanonicalLabel::Quad(k, l));
            }
        }
        out
    }

    fn quad_term(out: &mut Element<CanonicalLabel>, j: i64, k: u8, l: u8) {
        if j != 0 {
            out.add_term(CanonicalLabel::quad(k as usize, l as usize), Exact::from_i64(-j));
        }
    }
}

impl LieAlgebra for Canonical {
    type Label = CanonicalLabel;

    fn bracket_basis(&self, a: &CanonicalLabel, b: &CanonicalLabel) -> Element<CanonicalLabel> {
        use CanonicalLabel::*;
        let j = symplectic_metric;
        match (*a, *b) {
            (Identity, _) | (_, Identity) => Element::zero(),
            (Quad(k, l), Quad(m, n)) => {
                let mut out = Element::zero();
                Self::quad_term(&mut out, j(l, m), k, n);
                Self::quad_term(&mut out, j(k, m), l, n);
                Self::quad_term(&mut out, j(l, n), k, m);
                Self::quad_term(&mut out, j(k, n), l, m);
                out
            }
            (Quad(k, l), Lin(m)) => {
                let mut out = Element::zero();
                out.add_term(Lin(k), Exact::from_i64(-j(l, m)));
                out.add_term(Lin(l), Exact::from_i64(-j(k, m)));
                out
            }
            (Lin(_), Quad(_, _)) => -self.bracket_basis(b, a),
            (Lin(k), Lin(l)) => {
                let c = Exact::new(-self.alpha * Rational::from(j(k, l) as i128), Rational::zero());
                Element::term(Identity, c)
            }
        }
    }

    fn basis(&self) -> Vec<CanonicalLabel> {
        let mut out = Self::quadratic_basis();
        if self.include_linear {
            out.extend((0..8).map(CanonicalLabel::Lin));
            out.push(CanonicalLabel::Identity);
        }
        out
    }
}

/// Image of a quaplectic label in the canonical algebra, where
/// `E^μ_ν = -η^μμ (1/2α){Z̄_μ, Z_ν}`. Spin labels have no image.
pub fn embed_quaplectic(label: &Generator) -> Option<Element<CanonicalLabel>> {
    Some(match *label {
        Generator::E(m, n) => Element::term(
            CanonicalLabel::quad(n as usize, m as usize + 4),
            Exact::from_i64(-eta(m as usize)),
        ),
        Generator::Z(m) => Element::basis(CanonicalLabel::Lin(m)),
        Generator::Zbar(m) => Element::basis(CanonicalLabel::Lin(m + 4)),
        Generator::Identity => Element::basis(CanonicalLabel::Identity),
        Generator::Spin(_, _) => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, jacobi_report, Quaplectic};

    #[test]
    fn metric_is_antisymmetric_and_squares_to_minus_one() {
        for k in 0..8u8 {
            for l in 0..8u8 {
                assert_eq!(symplectic_metric(k, l), -symplectic_metric(l, k));
                let sq: i64 = (0..8u8).map(|m| symplectic_metric(k, m) * symplectic_metric(m, l)).sum();
                assert_eq!(sq, -((k == l) as i64));
            }
        }
    }

    #[test]
    fn canonical_jacobi_scan() {
        let alg = Canonical::new(Rational::new(2, 3));
        let basis = alg.basis();
        assert_eq!(basis.len(), 45);
        let r = jacobi_report(&alg, &basis);
        assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(3)]);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let q = Quaplectic::new(Rational::new(3, 2));
        let c = Canonical::new(Rational::new(3, 2));
        let basis = Quaplectic::quaplectic_basis();
        for a in &basis {
            for b in &basis {
                let lhs = commutator(&q, &Element::basis(*a), &Element::basis(*b))
                    .map_labels(|l| embed_quaplectic(l).unwrap());
                let rhs = commutator(&c, &embed_quaplectic(a).unwrap(), &embed_quaplectic(b).unwrap());
                assert_eq!(lhs, rhs, "{a:?} {b:?}");
            }
        }
    }
}
