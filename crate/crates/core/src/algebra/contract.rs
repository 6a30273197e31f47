use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::canonical::{Canonical, CanonicalLabel};
use super::element::{Element, Scalar};
use super::exact::{exact_i, format_exact, q, Exact};
use super::commutator;
use crate::error::{Error, Result};
use crate::eta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContractionCase {
    /// `M°` scaled like `Z°`; the `Z°` become abelian.
    I,
    /// Traceless `N°` scaled once, the trace `𝒩°` twice; the `Z°` close on
    /// a Heisenberg algebra with centre `𝒩°`.
    II,
}

/// Lorentz-covariant basis of `sp(8,ℝ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LorentzGenerator {
    /// `L_μν`, `μ < ν`.
    L(u8, u8),
    /// `M_μν`, `μ ≤ ν` (case I).
    M(u8, u8),
    /// Traceless `N_μν`, `μ ≤ ν`, omitting `N_33` (case II).
    N(u8, u8),
    /// `𝒩 = E^ν_ν` (case II).
    Number,
    /// `(1/2α){Z_μ, Z_ν}`.
    Z(u8, u8),
    /// `(1/2α){Z̄_μ, Z̄_ν}`.
    Zbar(u8, u8),
}

impl LorentzGenerator {
    /// Power of `b` dividing the generator in the contracted basis.
    fn weight(&self) -> i32 {
        match self {
            LorentzGenerator::L(..) => 0,
            LorentzGenerator::Number => 2,
            _ => 1,
        }
    }
}

/// `E_μν = η_μμ E^μ_ν = -(1/2α){Z̄_μ, Z_ν}` in canonical labels.
fn e_low(mu: usize, nu: usize) -> Element<CanonicalLabel> {
    Element::term(CanonicalLabel::quad(nu, mu + 4), q(-1, 1))
}

fn m_tensor(mu: usize, nu: usize) -> Element<CanonicalLabel> {
    e_low(mu, nu) + e_low(nu, mu)
}

fn number() -> Element<CanonicalLabel> {
    (0..4).fold(Element::zero(), |acc, m| acc + e_low(m, m).scale(&Exact::from_i64(eta(m))))
}

fn expand(g: &LorentzGenerator) -> Element<CanonicalLabel> {
    use LorentzGenerator::*;
    match *g {
        L(m, n) => (e_low(m as usize, n as usize) - e_low(n as usize, m as usize)).scale(&exact_i()),
        M(m, n) => m_tensor(m as usize, n as usize),
        N(m, n) => {
            let trace = if m == n {
                number().scale(&q(eta(m as usize) as i128, 2))
            } else {
                Element::zero()
            };
            m_tensor(m as usize, n as usize) - trace
        }
        Number => number(),
        Z(m, n) => Element::basis(CanonicalLabel::quad(m as usize, n as usize)),
        Zbar(m, n) => Element::basis(CanonicalLabel::quad(m as usize + 4, n as usize + 4)),
    }
}

fn lorentz_basis(case: ContractionCase) -> Vec<LorentzGenerator> {
    use LorentzGenerator::*;
    let mut out = Vec::with_capacity(36);
    for m in 0..4u8 {
        for n in m + 1..4 {
            out.push(L(m, n));
        }
    }
    for m in 0..4u8 {
        for n in m..4 {
            match case {
                ContractionCase::I => out.push(M(m, n)),
                ContractionCase::II if (m, n) != (3, 3) => out.push(N(m, n)),
                ContractionCase::II => out.push(Number),
            }
        }
    }
    for m in 0..4u8 {
        for n in m..4 {
            out.push(Z(m, n));
            out.push(Zbar(m, n));
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan elimination.
fn invert(mut a: Vec<Vec<Exact>>) -> Vec<Vec<Exact>> {
    let n = a.len();
    let mut inv: Vec<Vec<Exact>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Exact::one() } else { Exact::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Lorentz basis spans the symplectic algebra");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = Exact::one() / a[col][col];
        for j in 0..n {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

/// One structure constant `[G°_a, G°_b] ∋ f · b^exponent · G°_c`.
#[derive(Debug, Clone, Serialize)]
pub struct ContractionTerm {
    pub lhs: (LorentzGenerator, LorentzGenerator),
    pub rhs: LorentzGenerator,
    pub coefficient: String,
    pub exponent: i32,
    #[serde(skip)]
    pub exact: Exact,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractionReport {
    pub case: ContractionCase,
    pub b: f64,
    pub brackets_checked: usize,
    /// Terms surviving at `b → ∞` (exponent 0).
    pub limit: Vec<ContractionTerm>,
    /// Terms vanishing as a negative power of `b`.
    pub vanishing: Vec<ContractionTerm>,
    /// Terms growing with `b`; a consistent contraction has none.
    pub divergent: Vec<ContractionTerm>,
    /// `max |f| b^exponent` over the vanishing terms.
    pub deviation: f64,
}

impl ContractionReport {
    /// Coefficient of `rhs` in the limit bracket `[a, b]`.
    pub fn limit_coefficient(&self, a: LorentzGenerator, b: LorentzGenerator, rhs: LorentzGenerator) -> Exact {
        self.limit
            .iter()
            .find(|t| t.lhs == (a, b) && t.rhs == rhs)
            .map(|t| t.exact)
            .unwrap_or_else(Exact::zero)
    }
}

/// Structure constants of `sp(8,ℝ)` in the rescaled Lorentz basis, split by
/// their power of `b`, with the deviation from the `b → ∞` limit at `b`.
pub fn contract(b: f64, case: ContractionCase) -> Result<ContractionReport> {
    if !(b.is_finite() && b >= 1.0) {
        return Err(Error::domain(format!("contraction parameter must be >= 1, got {b}")));
    }
    let alg = Canonical::symplectic_only(super::Rational::one());
    let quads = Canonical::quadratic_basis();
    let basis = lorentz_basis(case);
    let expansions: Vec<Element<CanonicalLabel>> = basis.iter().map(expand).collect();
    // columns: Lorentz generators, rows: quadratic labels
    let forward: Vec<Vec<Exact>> = quads
        .iter()
        .map(|ql| expansions.iter().map(|e| e.coeff(ql)).collect())
        .collect();
    let inverse = invert(forward);
    let to_lorentz = |el: &Element<CanonicalLabel>| -> Vec<Exact> {
        (0..basis.len())
            .map(|c| {
                quads
                    .iter()
                    .enumerate()
                    .fold(Exact::zero(), |acc, (r, ql)| acc + inverse[c][r] * el.coeff(ql))
            })
            .collect()
    };
    let mut limit = Vec::new();
    let mut vanishing = Vec::new();
    let mut divergent = Vec::new();
    let mut checked = 0;
    for (ia, ga) in basis.iter().enumerate() {
        for (ib, gb) in basis.iter().enumerate().skip(ia + 1) {
            checked += 1;
            let br = commutator(&alg, &expansions[ia], &expansions[ib]);
            for (ic, f) in to_lorentz(&br).into_iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let gc = basis[ic];
                let exponent = gc.weight() - ga.weight() - gb.weight();
                let term = ContractionTerm {
                    lhs: (*ga, *gb),
                    rhs: gc,
                    coefficient: format_exact(&f),
                    exponent,
                    exact: f,
                };
                match exponent.cmp(&0) {
                    std::cmp::Ordering::Equal => limit.push(term),
                    std::cmp::Ordering::Less => vanishing.push(term),
                    std::cmp::Ordering::Greater => divergent.push(term),
                }
            }
        }
    }
    let deviation = vanishing
        .iter()
        .map(|t| t.exact.modulus() * b.powi(t.exponent))
        .fold(0.0, f64::max);
    Ok(ContractionReport {
        case,
        b,
        brackets_checked: checked,
        limit,
        vanishing,
        divergent,
        deviation,
    })
}

/// Log-log slopes of the deviation between consecutive `b` values.
pub fn contraction_slopes(case: ContractionCase, b_values: &[f64]) -> Result<Vec<f64>> {
    let devs = b_values
        .iter()
        .map(|&b| contract(b, case).map(|r| r.deviation))
        .collect::<Result<Vec<_>>>()?;
    Ok(b_values
        .windows(2)
        .zip(devs.windows(2))
        .map(|(bs, ds)| (ds[1] / ds[0]).ln() / (bs[1] / bs[0]).ln())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lorentz_basis_has_36_elements() {
        assert_eq!(lorentz_basis(ContractionCase::I).len(), 36);
        assert_eq!(lorentz_basis(ContractionCase::II).len(), 36);
    }

    #[test]
    fn b_below_one_is_rejected() {
        assert!(matches!(contract(0.5, ContractionCase::I), Err(Error::Domain(_))));
    }

    #[test]
    fn case_one_becomes_abelian() {
        let r = contract(10.0, ContractionCase::I).unwrap();
        assert!(r.divergent.is_empty());
        assert!(r
            .limit
            .iter()
            .all(|t| !matches!(t.lhs, (LorentzGenerator::Z(..), LorentzGenerator::Zbar(..)))));
        let slopes = contraction_slopes(ContractionCase::I, &[10.0, 100.0, 1000.0]).unwrap();
        for s in slopes {
            assert!((s + 1.0).abs() < 1e-9, "{s}");
        }
    }

    #[test]
    fn case_two_is_heisenberg() {
        use LorentzGenerator::*;
        let r = contract(10.0, ContractionCase::II).unwrap();
        assert!(r.divergent.is_empty());
        for t in r.limit.iter().filter(|t| matches!(t.lhs, (Z(..), Zbar(..)) | (Zbar(..), Z(..)))) {
            assert_eq!(t.rhs, Number);
        }
        let c = r.limit_coefficient(Z(0, 0), Zbar(0, 0), Number);
        assert_eq!(c, q(1, 1));
        let slopes = contraction_slopes(ContractionCase::II, &[10.0, 100.0, 1000.0]).unwrap();
        for s in slopes {
            assert!((s + 1.0).abs() < 1e-9, "{s}");
        }
    }

    #[test]
    fn unit_b_keeps_every_bracket() {
        let r = contract(1.0, ContractionCase::I).unwrap();
        let total = r.limit.len() + r.vanishing.len();
        assert!(total > 0);
        assert_eq!(r.deviation, r.vanishing.iter().map(|t| t.exact.modulus()).fold(0.0, f64::max));
    }
}
