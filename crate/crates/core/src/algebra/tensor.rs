use serde::Serialize;

use super::element::{Element, Scalar};
use super::exact::{exact_i, Exact};
use super::quaplectic::{Generator, Quaplectic};
use super::commutator;
use crate::eta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TensorKind {
    L,
    M,
}

/// `E_μν = η_μμ E^μ_ν`.
fn e_low(mu: usize, nu: usize) -> Element<Generator> {
    Element::term(Generator::e(mu, nu), Exact::from_i64(eta(mu)))
}

/// `F^ε_μν = E_μν - ε E_νμ`.
fn f_eps(eps: i64, mu: usize, nu: usize) -> Element<Generator> {
    e_low(mu, nu) - e_low(nu, mu).scale(&Exact::from_i64(eps))
}

/// `L_μν = i(E_μν - E_νμ)` or `M_μν = E_μν + E_νμ`.
pub fn tensor_form(kind: TensorKind, mu: usize, nu: usize) -> Element<Generator> {
    match kind {
        TensorKind::L => f_eps(1, mu, nu).scale(&exact_i()),
        TensorKind::M => f_eps(-1, mu, nu),
    }
}

/// `√2 X_μ / λx = Z_μ + Z̄_μ`.
pub fn position_scaled(mu: usize) -> Element<Generator> {
    Element::basis(Generator::z(mu)) + Element::basis(Generator::zbar(mu))
}

/// `√2 P_μ / λp = i(Z_μ - Z̄_μ)`.
pub fn momentum_scaled(mu: usize) -> Element<Generator> {
    (Element::basis(Generator::z(mu)) - Element::basis(Generator::zbar(mu))).scale(&exact_i())
}

/// The bracket families of the tensor form of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TensorFamily {
    FF,
    LL,
    LM,
    MM,
    LX,
    LP,
    MX,
    MP,
}

impl TensorFamily {
    pub const ALL: [TensorFamily; 8] = [
        TensorFamily::FF,
        TensorFamily::LL,
        TensorFamily::LM,
        TensorFamily::MM,
        TensorFamily::LX,
        TensorFamily::LP,
        TensorFamily::MX,
        TensorFamily::MP,
    ];
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: TensorFamily,
    pub cases_checked: usize,
    /// Cases where the bracket differs from the closed form derived from the
    /// defining relations (expected 0).
    pub derived_mismatches: usize,
    /// Cases where the bracket differs from the transcribed printed form.
    pub printed_mismatches: usize,
    pub first_printed_mismatch: Option<String>,
}

fn g(a: usize, b: usize) -> Exact {
    Exact::from_i64(if a == b { eta(a) } else { 0 })
}

fn comb(terms: Vec<(Exact, Element<Generator>)>) -> Element<Generator> {
    terms
        .into_iter()
        .fold(Element::zero(), |acc, (c, e)| acc + e.scale(&c))
}

struct Case {
    label: String,
    lhs: Element<Generator>,
    derived: Element<Generator>,
    printed: Element<Generator>,
}

fn tensor_case(alg: &Quaplectic, fam: TensorFamily, k: usize, l: usize, m: usize, n: usize) -> Case {
    use TensorKind::{L as Lk, M as Mk};
    let lt = |a, b| tensor_form(Lk, a, b);
    let mt = |a, b| tensor_form(Mk, a, b);
    let i = exact_i();
    let one = Exact::from_i64(1);
    let (lhs, derived, printed) = match fam {
        TensorFamily::LL => (
            commutator(alg, &lt(k, l), &lt(m, n)),
            comb(vec![(g(l, m), lt(k, n)), (-g(k, m), lt(l, n)), (-g(l, n), lt(k, m)), (g(k, n), lt(l, m))]).scale(&i),
            comb(vec![(g(l, m), lt(k, n)), (-g(k, m), lt(l, m)), (-g(l, n), lt(k, m)), (g(k, n), lt(l, m))]).scale(&i),
        ),
        TensorFamily::LM => (
            commutator(alg, &lt(k, l), &mt(m, n)),
            comb(vec![(g(l, m), mt(k, n)), (-g(k, m), mt(l, n)), (g(l, n), mt(k, m)), (-g(k, n), mt(l, m))]).scale(&i),
            comb(vec![(g(l, m), mt(k, n)), (-g(k, m), mt(l, m)), (g(l, n), mt(k, m)), (-g(k, n), mt(l, m))]).scale(&i),
        ),
        TensorFamily::MM => (
            commutator(alg, &mt(k, l), &mt(m, n)),
            comb(vec![(g(l, m), lt(k, n)), (g(k, m), lt(l, n)), (g(l, n), lt(k, m)), (g(k, n), lt(l, m))]).scale(&-i),
            comb(vec![(g(l, m), mt(k, n)), (g(k, m), mt(l, m)), (g(l, n), mt(k, m)), (g(k, n), mt(l, m))]).scale(&one),
        ),
        _ => unreachable!(),
    };
    Case {
        label: format!("{fam:?}({k},{l};{m},{n})"),
        lhs,
        derived,
        printed,
    }
}

fn vector_case(alg: &Quaplectic, fam: TensorFamily, k: usize, l: usize, m: usize) -> Case {
    let x = position_scaled;
    let p = momentum_scaled;
    let i = exact_i();
    let anti = |v: fn(usize) -> Element<Generator>| comb(vec![(g(l, m), v(k)), (-g(k, m), v(l))]);
    let sym = |v: fn(usize) -> Element<Generator>| comb(vec![(g(l, m), v(k)), (g(k, m), v(l))]);
    let (kind, vec_op, derived, printed) = match fam {
        TensorFamily::LX => (TensorKind::L, x(m), anti(x).scale(&i), anti(x).scale(&i)),
        TensorFamily::LP => (TensorKind::L, p(m), anti(p).scale(&i), anti(p).scale(&i)),
        TensorFamily::MX => (TensorKind::M, x(m), sym(p).scale(&i), anti(p).scale(&-i)),
        TensorFamily::MP => (TensorKind::M, p(m), sym(x).scale(&-i), anti(x).scale(&i)),
        _ => unreachable!(),
    };
    Case {
        label: format!("{fam:?}({k},{l};{m})"),
        lhs: commutator(alg, &tensor_form(kind, k, l), &vec_op),
        derived,
        printed,
    }
}

fn ff_case(alg: &Quaplectic, e1: i64, e2: i64, k: usize, l: usize, m: usize, n: usize) -> Case {
    let e12 = e1 * e2;
    let f = |a, b| f_eps(e12, a, b);
    let c = Exact::from_i64;
    Case {
        label: format!("FF[{e1:+},{e2:+}]({k},{l};{m},{n})"),
        lhs: commutator(alg, &f_eps(e1, k, l), &f_eps(e2, m, n)),
        derived: comb(vec![
            (g(l, m), f(k, n)),
            (-c(e1) * g(k, m), f(l, n)),
            (-c(e2) * g(l, n), f(k, m)),
            (c(e12) * g(k, n), f(l, m)),
        ]),
        printed: comb(vec![
            (g(l, m), f(k, n)),
            (-c(e1) * g(l, m), f(k, n)),
            (-c(e2) * g(l, n), f(k, m)),
            (c(e12) * g(k, n), f(l, m)),
        ]),
    }
}

fn family_cases(alg: &Quaplectic, fam: TensorFamily) -> Vec<Case> {
    let mut cases = Vec::new();
    for k in 0..4 {
        for l in 0..4 {
            for m in 0..4 {
                match fam {
                    TensorFamily::LX | TensorFamily::LP | TensorFamily::MX | TensorFamily::MP => {
                        cases.push(vector_case(alg, fam, k, l, m));
                    }
                    TensorFamily::FF => {
                        for n in 0..4 {
                            for (e1, e2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                                cases.push(ff_case(alg, e1, e2, k, l, m, n));
                            }
                        }
                    }
                    _ => {
                        for n in 0..4 {
                            cases.push(tensor_case(alg, fam, k, l, m, n));
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Compares every bracket of the tensor-form generators against the derived
/// closed forms and against the transcribed printed forms.
pub fn tensor_form_report(alg: &Quaplectic) -> Vec<FamilyReport> {
    TensorFamily::ALL
        .iter()
        .map(|&family| {
            let cases = family_cases(alg, family);
            let derived_mismatches = cases.iter().filter(|c| c.lhs != c.derived).count();
            let printed: Vec<&Case> = cases.iter().filter(|c| c.lhs != c.printed).collect();
            FamilyReport {
                family,
                cases_checked: cases.len(),
                derived_mismatches,
                printed_mismatches: printed.len(),
                first_printed_mismatch: printed.first().map(|c| {
                    format!("{}: bracket {:?}, printed form {:?}", c.label, c.lhs, c.printed)
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn m_is_symmetric_and_l_antisymmetric() {
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(tensor_form(TensorKind::M, a, b), tensor_form(TensorKind::M, b, a));
                assert_eq!(tensor_form(TensorKind::L, a, b), -tensor_form(TensorKind::L, b, a));
            }
        }
    }

    #[test]
    fn lorentz_bracket_example() {
        let alg = Quaplectic::default();
        let lhs = commutator(&alg, &tensor_form(TensorKind::L, 0, 1), &tensor_form(TensorKind::L, 1, 2));
        // i η_11 L_02 = -i L_02
        assert_eq!(lhs, tensor_form(TensorKind::L, 0, 2).scale(&(-exact_i())));
    }

    #[test]
    fn boost_leaves_transverse_position_alone() {
        let alg = Quaplectic::default();
        assert!(commutator(&alg, &tensor_form(TensorKind::L, 0, 1), &position_scaled(2)).is_zero());
    }

    #[test]
    fn quadratures_are_canonical() {
        // [x_μ, p_ν] = 2iα η_μν in the √2-scaled normalisation
        let alg = Quaplectic::default();
        for a in 0..4 {
            for b in 0..4 {
                let lhs = commutator(&alg, &position_scaled(a), &momentum_scaled(b));
                let expect = Element::term(Generator::Identity, g(a, b) * exact_i() * q(2, 1));
                assert_eq!(lhs, expect);
            }
        }
    }

    #[test]
    fn derived_forms_hold_everywhere() {
        let alg = Quaplectic::default();
        for rep in tensor_form_report(&alg) {
            assert_eq!(rep.derived_mismatches, 0, "{:?}", rep.family);
        }
    }

    #[test]
    fn printed_forms_agree_only_where_expected() {
        let alg = Quaplectic::default();
        let reports = tensor_form_report(&alg);
        let by = |f| reports.iter().find(|r| r.family == f).unwrap().printed_mismatches;
        assert_eq!(by(TensorFamily::LX), 0);
        assert_eq!(by(TensorFamily::LP), 0);
        for f in [TensorFamily::FF, TensorFamily::LL, TensorFamily::LM, TensorFamily::MM, TensorFamily::MX, TensorFamily::MP] {
            assert!(by(f) > 0, "{f:?}");
        }
    }
}
