//! JSON files: states, squeeze parameters, covariance data and reports.
//! Matrices are nested row-major arrays, complex numbers `[re, im]`.

use std::fs;
use std::path::Path;

use nalgebra::SMatrix;
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::gaussian::{Mat8, SqueezeParameters};
use crate::states::StateVector;
use crate::units::Frame;

/// Serde adapter writing a fixed-size matrix as nested rows.
pub mod row_major {
    use nalgebra::SMatrix;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const R: usize, const C: usize>(
        m: &SMatrix<f64, R, C>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<f64>> = (0..R).map(|r| (0..C).map(|c| m[(r, c)]).collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const R: usize, const C: usize>(
        d: D,
    ) -> std::result::Result<SMatrix<f64, R, C>, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        if rows.len() != R || rows.iter().any(|r| r.len() != C) {
            return Err(D::Error::custom(format!("expected a {R}x{C} matrix")));
        }
        Ok(SMatrix::from_fn(|r, c| rows[r][c]))
    }
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let path = path.as_ref();
    let mut text = to_json(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// On-disk state: amplitudes in occupation order (`n0` most significant).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub cutoff: usize,
    #[serde(default)]
    pub frame: Frame,
    pub amplitudes: Vec<[f64; 2]>,
    #[serde(default)]
    pub leakage: f64,
    #[serde(default = "one")]
    pub renormalization: f64,
}

fn one() -> f64 {
    1.0
}

impl StateFile {
    pub fn from_state(state: &StateVector, frame: Frame) -> Self {
        Self {
            cutoff: state.space().cutoff(),
            frame,
            amplitudes: state.amplitudes().iter().map(|c| [c.re, c.im]).collect(),
            leakage: state.leakage(),
            renormalization: state.renormalization(),
        }
    }

    pub fn to_state(&self) -> Result<StateVector> {
        self.frame.validate()?;
        let space = FockSpace::new(self.cutoff)?;
        StateVector::new(space, self.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
    }
}

/// Squeeze generator file: a real symmetric 8×8 `A`, or complex
/// compound coefficients `φ^{KL}` as `[re, im]` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhiFile {
    Real(Vec<Vec<f64>>),
    Compound(Vec<Vec<[f64; 2]>>),
    Object { a: Vec<Vec<f64>> },
}

fn square8<T: nalgebra::Scalar + Copy>(rows: &[Vec<T>]) -> Result<SMatrix<T, 8, 8>> {
    if rows.len() != 8 || rows.iter().any(|r| r.len() != 8) {
        return Err(Error::Parse("phi must be an 8x8 matrix".into()));
    }
    Ok(SMatrix::from_fn(|r, c| rows[r][c]))
}

impl PhiFile {
    pub fn to_params(&self, zeta: [Complex64; 4]) -> Result<SqueezeParameters> {
        match self {
            PhiFile::Real(rows) | PhiFile::Object { a: rows } => {
                let a: Mat8 = square8(rows)?;
                Ok(SqueezeParameters { a, zeta })
            }
            PhiFile::Compound(rows) => {
                let m: SMatrix<[f64; 2], 8, 8> = square8(rows)?;
                let phi = m.map(|[re, im]| Complex64::new(re, im));
                Ok(SqueezeParameters::from_compound(&phi, zeta))
            }
        }
    }
}

/// Four displacement amplitudes `[re, im]`.
pub fn parse_zeta(values: &[[f64; 2]]) -> Result<[Complex64; 4]> {
    if values.len() != 4 {
        return Err(Error::Parse(format!("zeta needs 4 entries, got {}", values.len())));
    }
    Ok(std::array::from_fn(|k| Complex64::new(values[k][0], values[k][1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::Observables;

    #[test]
    fn state_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        let o = Observables::new(FockSpace::new(6).unwrap(), Frame::natural()).unwrap();
        let s = o
            .squeezed_state(&SqueezeParameters::displacement([Complex64::new(0.05, 0.02); 4]))
            .unwrap();
        write_json(&path, &StateFile::from_state(&s, Frame::natural())).unwrap();
        let back: StateFile = read_json(&path).unwrap();
        let t = back.to_state().unwrap();
        assert!((t.overlap(&s).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn phi_encodings() {
        let mut rows = vec![vec![0.0; 8]; 8];
        rows[1][5] = 0.1;
        rows[5][1] = 0.1;
        let real: PhiFile = serde_json::from_str(&serde_json::to_string(&rows).unwrap()).unwrap();
        assert!(matches!(real, PhiFile::Real(_)));
        let p = real.to_params([Complex64::new(0.0, 0.0); 4]).unwrap();
        assert_eq!(p.a[(1, 5)], 0.1);
        let compound: PhiFile = serde_json::from_str(&serde_json::to_string(&vec![vec![[0.0, 0.0]; 8]; 8]).unwrap()).unwrap();
        assert!(matches!(compound, PhiFile::Compound(_)));
        let bad: PhiFile = serde_json::from_str("[[1.0]]").unwrap();
        assert!(bad.to_params([Complex64::new(0.0, 0.0); 4]).is_err());
    }

    #[test]
    fn matrices_are_row_major() {
        #[derive(Serialize, Deserialize)]
        struct W {
            #[serde(with = "row_major")]
            m: SMatrix<f64, 2, 3>,
        }
        let w = W {
            m: SMatrix::<f64, 2, 3>::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0),
        };
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"{"m":[[1.0,2.0,3.0],[4.0,5.0,6.0]]}"#);
        let back: W = serde_json::from_str(&text).unwrap();
        assert_eq!(back.m, w.m);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(read_json::<StateFile>("/nonexistent/x.json"), Err(Error::Io(_))));
    }
}
