use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::{Element, Scalar};
use super::exact::{Exact, Rational};
use super::{Conjugation, LieAlgebra};
use crate::eta;

/// Basis label. `E(μ,ν)` is `E^μ_ν`; `Z(μ)`, `Zbar(μ)` carry a lower index,
/// so `Zbar(μ) = Z(μ)†`. `Spin(μ,ν)` is the auxiliary generator `e^μ_ν` of
/// the extended basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    E(u8, u8),
    Spin(u8, u8),
    Z(u8),
    Zbar(u8),
    Identity,
}

impl Generator {
    pub fn e(mu: usize, nu: usize) -> Self {
        assert!(mu < 4 && nu < 4, "Lorentz index out of range");
        Generator::E(mu as u8, nu as u8)
    }

    pub fn spin(mu: usize, nu: usize) -> Self {
        assert!(mu < 4 && nu < 4, "Lorentz index out of range");
        Generator::Spin(mu as u8, nu as u8)
    }

    pub fn z(mu: usize) -> Self {
        assert!(mu < 4, "Lorentz index out of range");
        Generator::Z(mu as u8)
    }

    pub fn zbar(mu: usize) -> Self {
        assert!(mu < 4, "Lorentz index out of range");
        Generator::Zbar(mu as u8)
    }
}

/// `u(3,1) ⋉ h(3,1)` with central charge `α_ħ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaplectic {
    alpha: Rational,
    extended: bool,
}

impl Default for Quaplectic {
    fn default() -> Self {
        Self::new(Rational::one())
    }
}

fn delta(a: u8, b: u8) -> i64 {
    (a == b) as i64
}

fn et(mu: u8) -> i64 {
    eta(mu as usize)
}

fn gl_bracket(
    make: fn(u8, u8) -> Generator,
    (m, n): (u8, u8),
    (r, s): (u8, u8),
) -> Element<Generator> {
    let mut out = Element::zero();
    out.add_term(make(m, s), Exact::from_i64(delta(n, r)));
    out.add_term(make(r, n), Exact::from_i64(-delta(m, s)));
    out
}

impl Quaplectic {
    pub fn new(alpha: Rational) -> Self {
        assert!(alpha > Rational::zero(), "alpha must be positive");
        Self {
            alpha,
            extended: false,
        }
    }

    /// Same brackets, with `e^μ_ν` included in [`LieAlgebra::basis`].
    pub fn extended(alpha: Rational) -> Self {
        Self {
            extended: true,
            ..Self::new(alpha)
        }
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    /// `E(μ,ν)`, `Z(μ)`, `Zbar(μ)`, `Identity`: 25 labels.
    pub fn quaplectic_basis() -> Vec<Generator> {
        let mut out = Vec::with_capacity(25);
        for m in 0..4 {
            for n in 0..4 {
                out.push(Generator::E(m, n));
            }
        }
        for m in 0..4 {
            out.push(Generator::Z(m));
        }
        for m in 0..4 {
            out.push(Generator::Zbar(m));
        }
        out.push(Generator::Identity);
        out
    }

    /// Quaplectic basis together with the sixteen `e^μ_ν`.
    pub fn extended_basis() -> Vec<Generator> {
        let mut out = Self::quaplectic_basis();
        for m in 0..4 {
            for n in 0..4 {
                out.push(Generator::Spin(m, n));
            }
        }
        out
    }

    fn ordered_bracket(&self, a: &Generator, b: &Generator) -> Option<Element<Generator>> {
        use Generator::*;
        let one = |label: Generator, c: i64| Element::term(label, Exact::from_i64(c));
        Some(match (*a, *b) {
            (Identity, _) | (_, Identity) => Element::zero(),
            (E(m, n), E(r, s)) => gl_bracket(E, (m, n), (r, s)),
            (E(m, n), Spin(r, s)) | (Spin(m, n), Spin(r, s)) => gl_bracket(Spin, (m, n), (r, s)),
            (Spin(_, _), Z(_) | Zbar(_)) => Element::zero(),
            (E(m, n), Z(r)) => one(Z(n), -delta(m, r)),
            (E(m, n), Zbar(r)) => one(Zbar(m), delta(n, r) * et(n) * et(m)),
            (Z(_), Z(_)) | (Zbar(_), Zbar(_)) => Element::zero(),
            (Z(m), Zbar(n)) => {
                let c = Exact::new(-self.alpha * Rational::from(et(m) as i128), Rational::zero());
                Element::term(Identity, c * Exact::from_i64(delta(m, n)))
            }
            _ => return None,
        })
    }
}

impl LieAlgebra for Quaplectic {
    type Label = Generator;

    fn bracket_basis(&self, a: &Generator, b: &Generator) -> Element<Generator> {
        match self.ordered_bracket(a, b) {
            Some(e) => e,
            None => -self
                .ordered_bracket(b, a)
                .expect("every unordered pair has a defining bracket"),
        }
    }

    fn basis(&self) -> Vec<Generator> {
        if self.extended {
            Self::extended_basis()
        } else {
            Self::quaplectic_basis()
        }
    }
}

impl Conjugation for Quaplectic {
    fn conjugate_label(&self, label: &Generator) -> (Generator, i64) {
        use Generator::*;
        match *label {
            E(m, n) => (E(n, m), et(m) * et(n)),
            Spin(m, n) => (Spin(n, m), et(m) * et(n)),
            Z(m) => (Zbar(m), 1),
            Zbar(m) => (Z(m), 1),
            Identity => (Identity, 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        commutator, conjugate, conjugation_report, exact_i, jacobi_report, jacobiator, q,
    };

    fn alg() -> Quaplectic {
        Quaplectic::default()
    }

    fn br(a: Generator, b: Generator) -> Element<Generator> {
        commutator(&alg(), &Element::basis(a), &Element::basis(b))
    }

    #[test]
    fn documented_brackets() {
        let expected = Element::from_terms([(Generator::e(0, 0), q(1, 1)), (Generator::e(1, 1), q(-1, 1))]);
        assert_eq!(br(Generator::e(0, 1), Generator::e(1, 0)), expected);
        assert!(br(Generator::z(1), Generator::z(2)).is_zero());
        assert_eq!(br(Generator::z(0), Generator::zbar(0)), Element::term(Generator::Identity, q(-1, 1)));
        // spatial lower-index pair: [Z_1, Z̄_1] = -α η_11 I = +α I
        assert_eq!(br(Generator::z(1), Generator::zbar(1)), Element::term(Generator::Identity, q(1, 1)));
    }

    #[test]
    fn central_charge_scales_with_alpha() {
        let a = Quaplectic::new(Rational::new(3, 7));
        let out = commutator(&a, &Element::basis(Generator::z(0)), &Element::basis(Generator::zbar(0)));
        assert_eq!(out, Element::term(Generator::Identity, q(-3, 7)));
    }

    #[test]
    fn raised_index_action_on_zbar() {
        // [E^μ_ν, Z̄^ρ] = δ_ν^ρ Z̄^μ, with Z̄^ρ = η^ρρ Zbar(ρ)
        for m in 0..4usize {
            for n in 0..4usize {
                for r in 0..4usize {
                    let zr = Element::term(Generator::zbar(r), Exact::from_i64(eta(r)));
                    let lhs = commutator(&alg(), &Element::basis(Generator::e(m, n)), &zr);
                    let rhs = if n == r {
                        Element::term(Generator::zbar(m), Exact::from_i64(eta(m)))
                    } else {
                        Element::zero()
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let a = alg();
        let e00: Element<Generator> = Element::basis(Generator::e(0, 0));
        assert_eq!(conjugate(&a, &e00), e00);
        assert_eq!(
            conjugate(&a, &Element::basis(Generator::e(0, 1))),
            Element::term(Generator::e(1, 0), q(-1, 1))
        );
        let ii = Element::term(Generator::Identity, exact_i());
        assert_eq!(conjugate(&a, &ii), Element::term(Generator::Identity, -exact_i()));
    }

    #[test]
    fn jacobi_examples() {
        let a = alg();
        assert!(jacobiator(&a, &Generator::e(0, 1), &Generator::e(1, 0), &Generator::z(0)).is_zero());
        assert!(jacobiator(&a, &Generator::z(0), &Generator::zbar(0), &Generator::e(0, 0)).is_zero());
    }

    #[test]
    fn full_scans_are_clean() {
        let a = Quaplectic::extended(Rational::new(5, 3));
        let basis = a.basis();
        assert_eq!(basis.len(), 41);
        let report = jacobi_report(&a, &basis);
        assert_eq!(report.triples_checked, 41usize.pow(3));
        assert!(report.passed(), "{:?}", &report.violations[..report.violations.len().min(3)]);
        assert!(conjugation_report(&a, &basis).passed());
    }

    #[test]
    fn spin_generators_commute_with_heisenberg() {
        for m in 0..4 {
            for n in 0..4 {
                for r in 0..4 {
                    assert!(br(Generator::spin(m, n), Generator::z(r)).is_zero());
                    assert!(br(Generator::zbar(r), Generator::spin(m, n)).is_zero());
                }
            }
        }
        let expected = Element::from_terms([
            (Generator::spin(0, 0), q(1, 1)),
            (Generator::spin(1, 1), q(-1, 1)),
        ]);
        assert_eq!(br(Generator::e(0, 1), Generator::spin(1, 0)), expected);
    }
}
