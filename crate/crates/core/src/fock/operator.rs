use nalgebra::DMatrix;
use nalgebra_sparse::CsrMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::space::{FockSpace, InteriorProjector};
use crate::error::{Error, Result};

/// Sparse operator on a truncated Fock space, tagged with the polynomial
/// degree it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    matrix: CsrMatrix<Complex64>,
    degree: usize,
    space: FockSpace,
}

impl FockOperator {
    pub fn new(matrix: CsrMatrix<Complex64>, degree: usize, space: FockSpace) -> Self {
        assert_eq!(matrix.nrows(), space.dim(), "operator dimension must match the space");
        assert_eq!(matrix.ncols(), space.dim(), "operator dimension must match the space");
        Self {
            matrix,
            degree,
            space,
        }
    }

    pub fn identity(space: FockSpace) -> Self {
        Self::new(CsrMatrix::identity(space.dim()), 0, space)
    }

    pub fn matrix(&self) -> &CsrMatrix<Complex64> {
        &self.matrix
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn nnz(&self) -> usize {
        self.matrix.nnz()
    }

    /// `O v`.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.space.dim());
        let offsets = self.matrix.row_offsets();
        let cols = self.matrix.col_indices();
        let vals = self.matrix.values();
        (0..self.space.dim())
            .into_par_iter()
            .map(|r| {
                (offsets[r]..offsets[r + 1]).fold(Complex64::new(0.0, 0.0), |acc, k| acc + vals[k] * v[cols[k]])
            })
            .collect()
    }

    /// `⟨u|O|v⟩`.
    pub fn matrix_element(&self, u: &[Complex64], v: &[Complex64]) -> Complex64 {
        let ov = self.apply(v);
        u.iter().zip(&ov).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn try_expectation(&self, v: &[Complex64]) -> Result<Complex64> {
        if v.len() != self.space.dim() {
            return Err(Error::domain(format!(
                "state dimension {} does not match operator dimension {}",
                v.len(),
                self.space.dim()
            )));
        }
        Ok(self.matrix_element(v, v))
    }

    pub fn adjoint(&self) -> Self {
        let mut t = self.matrix.transpose();
        for v in t.values_mut() {
            *v = v.conj();
        }
        Self::new(t, self.degree, self.space)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.matrix * &other.matrix, self.degree + other.degree, self.space)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.matrix + &other.matrix, self.degree.max(other.degree), self.space)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.matrix - &other.matrix, self.degree.max(other.degree), self.space)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut m = self.matrix.clone();
        for v in m.values_mut() {
            *v *= c;
        }
        Self::new(m, self.degree, self.space)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.matrix.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus with both row and column in the interior.
    pub fn max_abs_on(&self, proj: &InteriorProjector) -> f64 {
        self.matrix
            .triplet_iter()
            .filter(|(r, c, _)| proj.contains(*r) && proj.contains(*c))
            .map(|(_, _, v)| v.norm())
            .fold(0.0, f64::max)
    }

    /// Maximum absolute row sum, an upper bound on the spectral norm.
    pub fn norm_inf(&self) -> f64 {
        self.matrix
            .row_iter()
            .map(|row| row.values().iter().map(|v| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of `O - O†` (zero for Hermitian operators).
    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.adjoint()).max_abs()
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.space.dim();
        let mut d = DMatrix::zeros(n, n);
        for (r, c, v) in self.matrix.triplet_iter() {
            d[(r, c)] += *v;
        }
        d
    }

    /// `exp(O) v` by a Taylor series on `s` equal substeps, where `s` is
    /// chosen so that each substep has norm at most one half.
    pub fn expm_apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let norm = self.norm_inf();
        let steps = ((2.0 * norm).ceil() as usize).max(1);
        let h = Complex64::new(1.0 / steps as f64, 0.0);
        let mut out = v.to_vec();
        for _ in 0..steps {
            let mut term = out.clone();
            let mut acc = out.clone();
            for k in 1..200 {
                term = self.apply(&term);
                let f = h / k as f64;
                let mut tn = 0.0f64;
                for (t, a) in term.iter_mut().zip(acc.iter_mut()) {
                    *t *= f;
                    *a += *t;
                    tn = tn.max(t.norm());
                }
                if tn < 1e-18 {
                    break;
                }
            }
            out = acc;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::poly::ModePoly;

    #[test]
    fn adjoint_swaps_raising_and_lowering() {
        let s = FockSpace::new(3).unwrap();
        let a = ModePoly::lower(1).to_operator(&s);
        let ad = ModePoly::raise(1).to_operator(&s);
        assert_eq!(a.adjoint().sub(&ad).max_abs(), 0.0);
    }

    #[test]
    fn exponential_of_rotation_preserves_norm() {
        let s = FockSpace::new(4).unwrap();
        // anti-Hermitian beam-splitter generator θ(a0† a1 - a1† a0)
        let g = (&(&ModePoly::raise(0) * &ModePoly::lower(1)) - &(&ModePoly::raise(1) * &ModePoly::lower(0)))
            .scale_re(0.7)
            .to_operator(&s);
        let mut v = vec![Complex64::new(0.0, 0.0); s.dim()];
        v[s.index(&[0, 1, 0, 0])] = Complex64::new(1.0, 0.0);
        let w = g.expm_apply(&v);
        let norm: f64 = w.iter().map(|c| c.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-13);
        // single photon is rotated: amplitude cos θ stays, sin θ moves to mode 0
        assert!((w[s.index(&[0, 1, 0, 0])].re - 0.7f64.cos()).abs() < 1e-13);
        assert!((w[s.index(&[1, 0, 0, 0])].re - 0.7f64.sin()).abs() < 1e-13);
    }

    #[test]
    fn dimension_mismatch_is_a_domain_error() {
        let s = FockSpace::new(2).unwrap();
        let op = FockOperator::identity(s);
        assert!(op.try_expectation(&[Complex64::new(1.0, 0.0)]).is_err());
    }
}
