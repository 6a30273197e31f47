//! Normal-ordered polynomials in the four mode operators.
//!
//! Products are reordered with the Wick formula
//! `a^d a†^c = Σ_j C(d,j) C(c,j) j! a†^(c-j) a^(d-j)`, so polynomial
//! identities carry no truncation error. Matrices are produced only at the
//! end by [`ModePoly::to_operator`], which gives the exact compression
//! `P O P` of the operator onto the truncated space.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra_sparse::{CooMatrix, CsrMatrix};
use num_complex::Complex64;

use super::operator::FockOperator;
use super::space::FockSpace;

/// `Π_k a_k†^create[k] a_k^annihilate[k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub create: [u8; 4],
    pub annihilate: [u8; 4],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        create: [0; 4],
        annihilate: [0; 4],
    };

    pub fn degree(&self) -> usize {
        self.create.iter().chain(&self.annihilate).map(|&v| v as usize).sum()
    }

    fn adjoint(&self) -> Self {
        Monomial {
            create: self.annihilate,
            annihilate: self.create,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModePoly {
    terms: BTreeMap<Monomial, Complex64>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// `(a†^c1 a^d1)(a†^c2 a^d2)` for one mode as `(coeff, c, d)` terms.
fn mode_product(c1: u8, d1: u8, c2: u8, d2: u8) -> Vec<(f64, u8, u8)> {
    (0..=d1.min(c2))
        .map(|j| {
            let w = binomial(d1 as u32, j as u32) * binomial(c2 as u32, j as u32) * factorial(j as u32);
            (w, c1 + c2 - j, d1 + d2 - j)
        })
        .collect()
}

impl ModePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn identity() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// `a_k`.
    pub fn lower(mode: usize) -> Self {
        let mut m = Monomial::ONE;
        m.annihilate[mode] = 1;
        Self::from_terms([(m, Complex64::new(1.0, 0.0))])
    }

    /// `a_k†`.
    pub fn raise(mode: usize) -> Self {
        let mut m = Monomial::ONE;
        m.create[mode] = 1;
        Self::from_terms([(m, Complex64::new(1.0, 0.0))])
    }

    /// `a_k† a_k`.
    pub fn number(mode: usize) -> Self {
        &Self::raise(mode) * &Self::lower(mode)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Complex64)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if *slot == Complex64::new(0.0, 0.0) {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest net number of quanta the polynomial adds to any single mode.
    pub fn max_raise(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| (0..4).map(move |k| m.create[k].saturating_sub(m.annihilate[k]) as usize))
            .max()
            .unwrap_or(0)
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Hermitian adjoint.
    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Drops coefficients with modulus at most `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self::from_terms(self.terms.iter().filter(|(_, c)| c.norm() > tol).map(|(m, c)| (*m, *c)))
    }

    /// Vacuum expectation: the constant term.
    pub fn constant_term(&self) -> Complex64 {
        self.terms.get(&Monomial::ONE).copied().unwrap_or_default()
    }

    /// Symmetrised product over all orderings of the factors.
    pub fn symmetrized_product(factors: &[&ModePoly]) -> Self {
        let n = factors.len();
        if n == 0 {
            return Self::identity();
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Self::zero();
        let mut count = 0usize;
        loop {
            let prod = perm.iter().skip(1).fold(factors[perm[0]].clone(), |acc, &i| &acc * factors[i]);
            total = &total + &prod;
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        total.scale_re(1.0 / count as f64)
    }

    /// Matrix of the polynomial on the truncated space.
    pub fn to_operator(&self, space: &FockSpace) -> FockOperator {
        let dim = space.dim();
        let cutoff = space.cutoff();
        let levels = space.levels();
        // n!/(n-k)! for n, k up to cutoff + max power
        let top = cutoff + self.degree() + 1;
        let mut falling = vec![vec![0.0f64; top + 1]; top + 1];
        for n in 0..=top {
            falling[n][0] = 1.0;
            for k in 1..=n {
                falling[n][k] = falling[n][k - 1] * (n + 1 - k) as f64;
            }
        }
        let mut coo = CooMatrix::new(dim, dim);
        for col in 0..dim {
            let n = space.occupation(col);
            'terms: for (m, c) in &self.terms {
                let mut weight = 1.0f64;
                let mut out = [0usize; 4];
                for k in 0..4 {
                    let d = m.annihilate[k] as usize;
                    let cr = m.create[k] as usize;
                    if n[k] < d {
                        continue 'terms;
                    }
                    let mid = n[k] - d;
                    let fin = mid + cr;
                    if fin >= levels {
                        continue 'terms;
                    }
                    weight *= falling[n[k]][d] * falling[fin][cr];
                    out[k] = fin;
                }
                coo.push(space.index(&out), col, c * weight.sqrt());
            }
        }
        FockOperator::new(CsrMatrix::from(&coo), self.degree(), *space)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl<'a> Add<&'a ModePoly> for &'a ModePoly {
    type Output = ModePoly;
    fn add(self, rhs: &ModePoly) -> ModePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, *c);
        }
        out
    }
}

impl<'a> Sub<&'a ModePoly> for &'a ModePoly {
    type Output = ModePoly;
    fn sub(self, rhs: &ModePoly) -> ModePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -*c);
        }
        out
    }
}

impl Neg for &ModePoly {
    type Output = ModePoly;
    fn neg(self) -> ModePoly {
        self.scale_re(-1.0)
    }
}

impl<'a> Mul<&'a ModePoly> for &'a ModePoly {
    type Output = ModePoly;
    fn mul(self, rhs: &ModePoly) -> ModePoly {
        let mut out = ModePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let per_mode: Vec<Vec<(f64, u8, u8)>> = (0..4)
                    .map(|k| mode_product(m1.create[k], m1.annihilate[k], m2.create[k], m2.annihilate[k]))
                    .collect();
                let base = c1 * c2;
                for t0 in &per_mode[0] {
                    for t1 in &per_mode[1] {
                        for t2 in &per_mode[2] {
                            for t3 in &per_mode[3] {
                                let w = t0.0 * t1.0 * t2.0 * t3.0;
                                let m = Monomial {
                                    create: [t0.1, t1.1, t2.1, t3.1],
                                    annihilate: [t0.2, t1.2, t2.2, t3.2],
                                };
                                out.add_term(m, base * w);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn canonical_commutator() {
        for k in 0..4 {
            let comm = ModePoly::lower(k).commutator(&ModePoly::raise(k));
            assert_eq!(comm, ModePoly::identity());
        }
        assert!(ModePoly::lower(0).commutator(&ModePoly::raise(1)).is_empty());
    }

    #[test]
    fn wick_reordering() {
        // a a† a† = a†² a + 2 a†
        let a = ModePoly::lower(2);
        let ad = ModePoly::raise(2);
        let lhs = &(&a * &ad) * &ad;
        let mut m1 = Monomial::ONE;
        m1.create[2] = 2;
        m1.annihilate[2] = 1;
        let mut m2 = Monomial::ONE;
        m2.create[2] = 1;
        assert_eq!(lhs, ModePoly::from_terms([(m1, c(1.0)), (m2, c(2.0))]));
    }

    #[test]
    fn single_mode_raising_matrix() {
        let s = FockSpace::new(1).unwrap();
        let op = ModePoly::raise(3).to_operator(&s).to_dense();
        // mode 3 is least significant: |0001> has index 1
        assert_eq!(op[(1, 0)], c(1.0));
        assert_eq!(op[(0, 1)], c(0.0));
    }

    #[test]
    fn number_operator_is_diagonal() {
        let s = FockSpace::new(3).unwrap();
        let op = ModePoly::number(0).to_operator(&s).to_dense();
        for i in 0..s.dim() {
            assert_eq!(op[(i, i)], c(s.occupation(i)[0] as f64));
        }
    }

    #[test]
    fn truncated_commutator_fails_only_at_the_edge() {
        let s = FockSpace::new(3).unwrap();
        let a = ModePoly::lower(0).to_operator(&s);
        let ad = ModePoly::raise(0).to_operator(&s);
        let comm = a.mul(&ad).sub(&ad.mul(&a)).to_dense();
        for i in 0..s.dim() {
            let n = s.occupation(i);
            let expect = if n[0] < 3 { 1.0 } else { -3.0 };
            assert!((comm[(i, i)].re - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn symmetrized_product_of_two() {
        let a = ModePoly::lower(1);
        let ad = ModePoly::raise(1);
        let sym = ModePoly::symmetrized_product(&[&a, &ad]);
        // ½{a, a†} = a†a + ½
        let expect = &ModePoly::number(1) + &ModePoly::constant(c(0.5));
        assert_eq!(sym, expect);
    }
}
