//! Universal constants and the reciprocal-relativity scales built from them.
//!
//! With a maximal force `b`, the speed of light `c` and `ħ` the natural
//! scales are
//!
//! ```text
//! λt = √(ħ/bc)   λx = √(ħc/b)   λp = √(ħb/c)   λe = √(ħbc)   λa = c·√(bc/ħ)
//! ```
//!
//! and Newton's constant is `G = α_G c⁴ / b`. When `α_ħ ≠ 1` the position and
//! momentum scales must satisfy `ħ = α_ħ λx λp`, so every scale is evaluated
//! with the reduced action `ħ/α_ħ`; for `α_ħ = 1` the formulas above are
//! reproduced exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The five universal constants of reciprocal relativity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantSet {
    /// Maximal rate of change of momentum (a force).
    pub b: f64,
    /// Speed of light.
    pub c: f64,
    pub hbar: f64,
    /// Dimensionless central-term scale of the Weyl–Heisenberg algebra.
    pub alpha_hbar: f64,
    /// Dimensionless gravity scale.
    pub alpha_g: f64,
}

impl Default for ConstantSet {
    fn default() -> Self {
        Self::natural()
    }
}

impl ConstantSet {
    /// `b = c = ħ = α_ħ = α_G = 1`.
    pub const fn natural() -> Self {
        Self {
            b: 1.0,
            c: 1.0,
            hbar: 1.0,
            alpha_hbar: 1.0,
            alpha_g: 1.0,
        }
    }

    /// CODATA `c`, `ħ` and `b = c⁴/G`, so that the scales are Planck units.
    pub fn si_planck() -> Self {
        let c: f64 = 2.997_924_58e8;
        let hbar = 1.054_571_817e-34;
        let g = 6.674_30e-11;
        Self {
            b: c.powi(4) / g,
            c,
            hbar,
            alpha_hbar: 1.0,
            alpha_g: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let named = [
            ("b", self.b),
            ("c", self.c),
            ("hbar", self.hbar),
            ("alpha_hbar", self.alpha_hbar),
            ("alpha_g", self.alpha_g),
        ];
        for (name, value) in named {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::domain(format!(
                    "constant {name} must be finite and positive, got {value}"
                )));
            }
        }
        Ok(())
    }
}

/// Time, length, momentum, energy and acceleration scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitScales {
    pub lambda_t: f64,
    pub lambda_x: f64,
    pub lambda_p: f64,
    pub lambda_e: f64,
    pub lambda_a: f64,
}

impl UnitScales {
    pub const fn natural() -> Self {
        Self {
            lambda_t: 1.0,
            lambda_x: 1.0,
            lambda_p: 1.0,
            lambda_e: 1.0,
            lambda_a: 1.0,
        }
    }
}

/// Evaluates the five scales with unit scale factors.
pub fn derive_scales(consts: &ConstantSet) -> Result<UnitScales> {
    consts.validate()?;
    let ConstantSet { b, c, .. } = *consts;
    let h = consts.hbar / consts.alpha_hbar;
    Ok(UnitScales {
        lambda_t: (h / (b * c)).sqrt(),
        lambda_x: (h * c / b).sqrt(),
        lambda_p: (h * b / c).sqrt(),
        lambda_e: (h * b * c).sqrt(),
        lambda_a: c * (b * c / h).sqrt(),
    })
}

/// `G = α_G c⁴ / b`.
pub fn newton_constant(consts: &ConstantSet) -> Result<f64> {
    if !(consts.b.is_finite() && consts.b > 0.0) {
        return Err(Error::domain(format!(
            "b must be finite and positive, got {}",
            consts.b
        )));
    }
    Ok(consts.alpha_g * consts.c.powi(4) / consts.b)
}

/// Relative deviations of the three defining scale relations
/// (`α_ħ λx λp = ħ`, `λe = λp c`, `λx = c λt`).
pub fn scale_consistency(consts: &ConstantSet, scales: &UnitScales) -> [f64; 3] {
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    [
        rel(consts.alpha_hbar * scales.lambda_x * scales.lambda_p, consts.hbar),
        rel(scales.lambda_e, scales.lambda_p * consts.c),
        rel(scales.lambda_x, consts.c * scales.lambda_t),
    ]
}

/// Physical frame consumed by the representation layers: the central-term
/// scale together with the position and momentum scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub alpha_hbar: f64,
    pub hbar: f64,
    pub lambda_x: f64,
    pub lambda_p: f64,
}

impl Default for Frame {
    fn default() -> Self {
        Self::natural()
    }
}

impl Frame {
    pub const fn natural() -> Self {
        Self {
            alpha_hbar: 1.0,
            hbar: 1.0,
            lambda_x: 1.0,
            lambda_p: 1.0,
        }
    }

    /// Natural scales with a non-unit central term: `λx = λp = 1`, `ħ = α_ħ`.
    pub fn with_alpha(alpha_hbar: f64) -> Result<Self> {
        Self::new(alpha_hbar, alpha_hbar, &UnitScales::natural())
    }

    /// Rejects scale sets with `ħ ≠ α_ħ λx λp` (relative tolerance 1e-12).
    pub fn new(alpha_hbar: f64, hbar: f64, scales: &UnitScales) -> Result<Self> {
        if !(alpha_hbar > 0.0 && hbar > 0.0 && scales.lambda_x > 0.0 && scales.lambda_p > 0.0) {
            return Err(Error::domain("frame constants must be positive"));
        }
        let product = alpha_hbar * scales.lambda_x * scales.lambda_p;
        if ((product - hbar) / hbar).abs() > 1e-12 {
            return Err(Error::domain(format!(
                "inconsistent scales: alpha_hbar·lambda_x·lambda_p = {product:e} but hbar = {hbar:e}"
            )));
        }
        Ok(Self {
            alpha_hbar,
            hbar,
            lambda_x: scales.lambda_x,
            lambda_p: scales.lambda_p,
        })
    }

    /// Re-checks the invariants enforced by [`Frame::new`].
    pub fn validate(&self) -> Result<()> {
        let scales = UnitScales {
            lambda_x: self.lambda_x,
            lambda_p: self.lambda_p,
            ..UnitScales::natural()
        };
        Self::new(self.alpha_hbar, self.hbar, &scales).map(|_| ())
    }

    pub fn from_constants(consts: &ConstantSet) -> Result<Self> {
        let scales = derive_scales(consts)?;
        Self::new(consts.alpha_hbar, consts.hbar, &scales)
    }

    /// `ħ/2`, the saturation value of each symplectic eigenvalue.
    pub fn half_hbar(&self) -> f64 {
        0.5 * self.hbar
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn natural_units_are_unity() {
        let s = derive_scales(&ConstantSet::natural()).unwrap();
        for v in [s.lambda_t, s.lambda_x, s.lambda_p, s.lambda_e, s.lambda_a] {
            assert_eq!(v, 1.0);
        }
    }

    #[test]
    fn si_constants_give_planck_length() {
        let consts = ConstantSet::si_planck();
        let s = derive_scales(&consts).unwrap();
        // √(ħG/c³) with CODATA 2018 values
        let planck = (1.054_571_817e-34_f64 * 6.674_30e-11 / 2.997_924_58e8_f64.powi(3)).sqrt();
        assert!(rel(s.lambda_x, planck) < 1e-12);
        assert!(rel(s.lambda_x, 1.616e-35) < 1e-3);
        for d in scale_consistency(&consts, &s) {
            assert!(d < 1e-12);
        }
    }

    #[test]
    fn quadrupling_b_halves_length_and_doubles_momentum() {
        let base = ConstantSet {
            b: 2.5,
            c: 1.3,
            hbar: 0.7,
            ..ConstantSet::natural()
        };
        let s1 = derive_scales(&base).unwrap();
        let s4 = derive_scales(&ConstantSet { b: 4.0 * base.b, ..base }).unwrap();
        assert!(rel(s4.lambda_x, 0.5 * s1.lambda_x) < 1e-14);
        assert!(rel(s4.lambda_p, 2.0 * s1.lambda_p) < 1e-14);
    }

    #[test]
    fn newton_constant_examples() {
        assert_eq!(newton_constant(&ConstantSet::natural()).unwrap(), 1.0);
        let si = ConstantSet {
            b: 1.210e44,
            c: 2.998e8,
            ..ConstantSet::natural()
        };
        assert!(rel(newton_constant(&si).unwrap(), 6.674e-11) < 1e-3);
        let c = ConstantSet {
            b: 4.0,
            alpha_g: 2.0,
            ..ConstantSet::natural()
        };
        assert_eq!(newton_constant(&c).unwrap(), 0.5);
        let bad = ConstantSet {
            b: 0.0,
            ..ConstantSet::natural()
        };
        assert!(matches!(newton_constant(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn non_positive_constants_are_rejected() {
        let bad = ConstantSet {
            hbar: -1.0,
            ..ConstantSet::natural()
        };
        assert!(derive_scales(&bad).is_err());
        let nan = ConstantSet {
            c: f64::NAN,
            ..ConstantSet::natural()
        };
        assert!(derive_scales(&nan).is_err());
    }

    #[test]
    fn frame_rejects_inconsistent_scales() {
        let s = UnitScales {
            lambda_x: 2.0,
            ..UnitScales::natural()
        };
        assert!(Frame::new(1.0, 1.0, &s).is_err());
        assert!(Frame::new(0.5, 1.0, &s).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn derived_scales_recombine(b in 1e-3f64..1e3, c in 1e-3f64..1e3,
                                        hbar in 1e-3f64..1e3, alpha in 0.1f64..10.0) {
                let consts = ConstantSet { b, c, hbar, alpha_hbar: alpha, alpha_g: 1.0 };
                let s = derive_scales(&consts).unwrap();
                for d in scale_consistency(&consts, &s) {
                    prop_assert!(d < 1e-12);
                }
            }

            #[test]
            fn newton_constant_decreases_in_b(b in 1e-3f64..1e3, factor in 1.001f64..10.0) {
                let lo = ConstantSet { b, ..ConstantSet::natural() };
                let hi = ConstantSet { b: b * factor, ..ConstantSet::natural() };
                prop_assert!(newton_constant(&hi).unwrap() < newton_constant(&lo).unwrap());
            }
        }
    }
}
