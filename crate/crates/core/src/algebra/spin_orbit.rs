use std::collections::BTreeMap;

use num_traits::Zero;

use super::element::Element;
use super::exact::Exact;
use super::quaplectic::Generator;

/// `E^μ_ν = e^μ_ν + O^μ_ν`, where the orbital part `O^μ_ν` is the quadratic
/// oscillator expression realised by [`crate::fock`]. Only the coefficients
/// of `O` are tracked here, since the anticommutator is not a Lie element.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOrbitSplit {
    pub spin: Element<Generator>,
    pub orbital: BTreeMap<(u8, u8), Exact>,
    pub heisenberg: Element<Generator>,
}

impl SpinOrbitSplit {
    /// True when the element has no spin component, as in the scalar case.
    pub fn is_scalar(&self) -> bool {
        self.spin.is_zero()
    }
}

/// Splits an element of the extended basis into spin, orbital and
/// Heisenberg parts.
pub fn spin_orbit_split(element: &Element<Generator>) -> SpinOrbitSplit {
    let mut spin = Element::zero();
    let mut orbital: BTreeMap<(u8, u8), Exact> = BTreeMap::new();
    let mut heisenberg = Element::zero();
    for (label, c) in element.iter() {
        match *label {
            Generator::E(m, n) => {
                spin.add_term(Generator::Spin(m, n), *c);
                let slot = orbital.entry((m, n)).or_insert_with(Exact::zero);
                *slot += c;
            }
            Generator::Spin(_, _) => spin.add_term(*label, *c),
            _ => heisenberg.add_term(*label, *c),
        }
    }
    orbital.retain(|_, v| !v.is_zero());
    SpinOrbitSplit {
        spin,
        orbital,
        heisenberg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn split_of_mixed_element() {
        let el = Element::from_terms([
            (Generator::e(0, 1), q(2, 1)),
            (Generator::spin(0, 1), q(-1, 1)),
            (Generator::z(2), q(1, 2)),
        ]);
        let s = spin_orbit_split(&el);
        assert_eq!(s.spin, Element::term(Generator::spin(0, 1), q(1, 1)));
        assert_eq!(s.orbital.get(&(0, 1)), Some(&q(2, 1)));
        assert_eq!(s.heisenberg, Element::term(Generator::z(2), q(1, 2)));
        assert!(!s.is_scalar());
    }

    #[test]
    fn pure_spin_difference_has_no_orbital_part() {
        // E - e leaves only the orbital piece, so the spin components cancel
        let el = Element::basis(Generator::e(2, 3)) - Element::basis(Generator::spin(2, 3));
        let s = spin_orbit_split(&el);
        assert!(s.is_scalar());
        assert_eq!(s.orbital.len(), 1);
    }
}
