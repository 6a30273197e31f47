//! Truncated four-mode Fock representation of the scalar quaplectic system.
//!
//! Operators are first built as exact normal-ordered polynomials
//! ([`ModePoly`]) and only then compressed to sparse matrices on the
//! truncated space ([`FockOperator`]). Brackets of truncated matrices are
//! exact on the interior, the states whose occupations stay at least
//! `margin` below the cutoff.

mod checks;
mod generators;
mod operator;
mod poly;
mod space;

pub use checks::{casimir_report, verify_rep, CasimirReport, RepReport};
pub use generators::GeneratorTable;
pub use operator::FockOperator;
pub use poly::{ModePoly, Monomial};
pub use space::{FockSpace, InteriorProjector, Occupation};

use num_complex::Complex64;

use crate::error::Result;

/// `(a_k, a_k†)` matrices for the four modes.
pub fn build_mode_ops(space: &FockSpace) -> Vec<(FockOperator, FockOperator)> {
    (0..4)
        .map(|k| (ModePoly::lower(k).to_operator(space), ModePoly::raise(k).to_operator(space)))
        .collect()
}

/// Occupation `(0,0,0,0)`.
pub fn vacuum(space: &FockSpace) -> Vec<Complex64> {
    basis_state(space, &[0; 4])
}

/// Normalised number state.
pub fn basis_state(space: &FockSpace, n: &Occupation) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); space.dim()];
    v[space.index(n)] = Complex64::new(1.0, 0.0);
    v
}

/// Dense row-major export of an operator: `[re, im]` pairs plus metadata.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct OperatorExport {
    pub cutoff: usize,
    pub dimension: usize,
    pub degree: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

pub fn export_operator(op: &FockOperator) -> OperatorExport {
    let d = op.to_dense();
    let n = d.nrows();
    OperatorExport {
        cutoff: op.space().cutoff(),
        dimension: n,
        degree: op.degree(),
        entries: (0..n)
            .map(|r| (0..n).map(|c| [d[(r, c)].re, d[(r, c)].im]).collect())
            .collect(),
    }
}

/// Builds the generator table after checking `ħ = α_ħ λx λp`.
pub fn build_generators(frame: crate::units::Frame) -> Result<GeneratorTable> {
    frame.validate()?;
    Ok(GeneratorTable::new(frame))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::Frame;

    #[test]
    fn vacuum_is_annihilated() {
        let space = FockSpace::new(3).unwrap();
        let v = vacuum(&space);
        for (a, _) in build_mode_ops(&space) {
            assert!(a.apply(&v).iter().all(|c| c.norm() == 0.0));
        }
        let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        assert_eq!(norm, 1.0);
    }

    #[test]
    fn vacuum_energy_of_time_mode() {
        let space = FockSpace::new(3).unwrap();
        let t = GeneratorTable::new(Frame::natural());
        let v = vacuum(&space);
        let e00 = t.e(0, 0).to_operator(&space).try_expectation(&v).unwrap();
        assert!((e00.re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn inconsistent_frame_is_rejected() {
        let bad = Frame {
            alpha_hbar: 1.0,
            hbar: 2.0,
            lambda_x: 1.0,
            lambda_p: 1.0,
        };
        assert!(build_generators(bad).is_err());
    }

    #[test]
    fn export_is_row_major() {
        let space = FockSpace::new(1).unwrap();
        let ex = export_operator(&ModePoly::raise(3).to_operator(&space));
        assert_eq!(ex.dimension, 16);
        assert_eq!(ex.entries[1][0], [1.0, 0.0]);
    }
}
