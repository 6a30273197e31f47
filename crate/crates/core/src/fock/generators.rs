use num_complex::Complex64;

use super::poly::ModePoly;
use crate::algebra::{Generator, NumericElement};
use crate::eta;
use crate::units::Frame;

/// Oscillator images of the quaplectic generators in the scalar
/// representation.
///
/// Lower-index storage: `Z_0 = √α a0†`, `Z_i = √α a_i`, `Z̄_μ = Z_μ†`, so
/// that `[Z_μ, Z̄_ν] = -α η_μν`. The scalar image of `E^μ_ν` is
/// `-(1/2α){Z̄^μ, Z_ν}`, the sign for which the `u(3,1)` brackets and the
/// action on `Z`, `Z̄` hold as stated. Then `E^0_0 = -(n0 + ½)` and
/// `E^i_i = n_i + ½`.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    frame: Frame,
    z: [ModePoly; 4],
    zbar: [ModePoly; 4],
    e: Vec<ModePoly>,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl GeneratorTable {
    pub fn new(frame: Frame) -> Self {
        let s = frame.alpha_hbar.sqrt();
        let z: [ModePoly; 4] = std::array::from_fn(|m| {
            if m == 0 {
                ModePoly::raise(0).scale_re(s)
            } else {
                ModePoly::lower(m).scale_re(s)
            }
        });
        let zbar: [ModePoly; 4] = std::array::from_fn(|m| z[m].adjoint());
        let mut e = Vec::with_capacity(16);
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = zbar[mu].anticommutator(&z[nu]);
                e.push(anti.scale_re(-(eta(mu) as f64) / (2.0 * frame.alpha_hbar)));
            }
        }
        Self { frame, z, zbar, e }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn alpha(&self) -> f64 {
        self.frame.alpha_hbar
    }

    /// `Z_μ` (lower index).
    pub fn z(&self, mu: usize) -> &ModePoly {
        &self.z[mu]
    }

    /// `Z̄_μ` (lower index).
    pub fn zbar(&self, mu: usize) -> &ModePoly {
        &self.zbar[mu]
    }

    /// `E^μ_ν`.
    pub fn e(&self, mu: usize, nu: usize) -> &ModePoly {
        &self.e[4 * mu + nu]
    }

    /// Spin part `e^μ_ν = E^μ_ν + (1/2α){Z̄^μ, Z_ν}`, zero in this
    /// representation.
    pub fn spin(&self, mu: usize, nu: usize) -> ModePoly {
        let orbital = self.zbar[mu]
            .anticommutator(&self.z[nu])
            .scale_re(eta(mu) as f64 / (2.0 * self.alpha()));
        self.e(mu, nu) + &orbital
    }

    /// Image of a basis label; spin labels map to zero.
    pub fn image(&self, g: &Generator) -> ModePoly {
        match *g {
            Generator::E(m, n) => self.e(m as usize, n as usize).clone(),
            Generator::Spin(m, n) => self.spin(m as usize, n as usize),
            Generator::Z(m) => self.z[m as usize].clone(),
            Generator::Zbar(m) => self.zbar[m as usize].clone(),
            Generator::Identity => ModePoly::identity(),
        }
    }

    pub fn element_image(&self, el: &NumericElement<Generator>) -> ModePoly {
        el.iter().fold(ModePoly::zero(), |acc, (g, c)| &acc + &self.image(g).scale(*c))
    }

    /// Dimensionless quadrature `ξ_a` with `ξ = (x^0..x^3, p^0..p^3)`,
    /// `x^μ = X^μ/λx = (Z^μ + Z̄^μ)/√2`, `p^μ = P^μ/λp = i(Z^μ - Z̄^μ)/√2`,
    /// so that `[ξ_a, ξ_b] = iα J_ab`.
    pub fn quadrature(&self, a: usize) -> ModePoly {
        let mu = a % 4;
        let k = eta(mu) as f64 / std::f64::consts::SQRT_2;
        if a < 4 {
            (&self.z[mu] + &self.zbar[mu]).scale_re(k)
        } else {
            (&self.z[mu] - &self.zbar[mu]).scale(Complex64::new(0.0, k))
        }
    }

    /// Physical quadrature `X^μ` (`a < 4`) or `P^μ` (`a ≥ 4`).
    pub fn physical_quadrature(&self, a: usize) -> ModePoly {
        self.quadrature(a).scale_re(self.scale_of(a))
    }

    /// `λx` for position components, `λp` for momentum components.
    pub fn scale_of(&self, a: usize) -> f64 {
        if a < 4 {
            self.frame.lambda_x
        } else {
            self.frame.lambda_p
        }
    }

    /// `𝒩 = E^μ_μ`.
    pub fn number_operator(&self) -> ModePoly {
        (0..4).fold(ModePoly::zero(), |acc, m| &acc + self.e(m, m))
    }

    /// `B = X^μX_μ/λx² + P^μP_μ/λp²`.
    pub fn born_green(&self) -> ModePoly {
        (0..8).fold(ModePoly::zero(), |acc, a| {
            let q = self.quadrature(a);
            &acc + &(&q * &q).scale_re(eta(a % 4) as f64)
        })
    }

    /// `½ Σ_μ {Z̄^μ, Z_μ}`.
    pub fn trace_zzbar(&self) -> ModePoly {
        (0..4).fold(ModePoly::zero(), |acc, m| {
            &acc + &self.zbar[m].anticommutator(&self.z[m]).scale(re(0.5 * eta(m) as f64))
        })
    }
}
