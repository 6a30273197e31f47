use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Occupation numbers `(n0, n1, n2, n3)`.
pub type Occupation = [usize; 4];

/// Four oscillator modes, each truncated at `cutoff` quanta. Basis states
/// are enumerated row-major with `n0` most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockSpace {
    cutoff: usize,
}

impl FockSpace {
    pub fn new(cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::domain("cutoff must be at least 1"));
        }
        if cutoff > 40 {
            return Err(Error::domain(format!("cutoff {cutoff} is too large (max 40)")));
        }
        Ok(Self { cutoff })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn levels(&self) -> usize {
        self.cutoff + 1
    }

    pub fn dim(&self) -> usize {
        self.levels().pow(4)
    }

    pub fn index(&self, n: &Occupation) -> usize {
        let l = self.levels();
        debug_assert!(n.iter().all(|&k| k < l));
        ((n[0] * l + n[1]) * l + n[2]) * l + n[3]
    }

    pub fn occupation(&self, mut idx: usize) -> Occupation {
        let l = self.levels();
        let mut n = [0; 4];
        for k in (0..4).rev() {
            n[k] = idx % l;
            idx /= l;
        }
        n
    }

    /// All basis occupations in index order.
    pub fn occupations(&self) -> impl Iterator<Item = Occupation> + '_ {
        (0..self.dim()).map(|i| self.occupation(i))
    }

    /// Every mode at most `cutoff - margin`.
    pub fn is_interior(&self, n: &Occupation, margin: usize) -> bool {
        margin <= self.cutoff && n.iter().all(|&k| k + margin <= self.cutoff)
    }

    pub fn projector(&self, margin: usize) -> InteriorProjector {
        InteriorProjector::new(*self, margin)
    }
}

/// Diagonal 0/1 selection of the states with every occupation at most
/// `cutoff - margin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorProjector {
    margin: usize,
    mask: Vec<bool>,
}

impl InteriorProjector {
    pub fn new(space: FockSpace, margin: usize) -> Self {
        let mask = space.occupations().map(|n| space.is_interior(&n, margin)).collect();
        Self { margin, mask }
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.mask[idx]
    }

    pub fn rank(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn apply<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        v.iter()
            .zip(&self.mask)
            .map(|(&x, &m)| if m { x } else { T::default() })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let s = FockSpace::new(3).unwrap();
        assert_eq!(s.dim(), 256);
        for i in 0..s.dim() {
            assert_eq!(s.index(&s.occupation(i)), i);
        }
        assert_eq!(s.index(&[0, 0, 0, 1]), 1);
        assert_eq!(s.index(&[1, 0, 0, 0]), 64);
    }

    #[test]
    fn zero_cutoff_is_rejected() {
        assert!(matches!(FockSpace::new(0), Err(Error::Domain(_))));
    }

    #[test]
    fn projector_is_idempotent() {
        let s = FockSpace::new(4).unwrap();
        let p = s.projector(2);
        assert_eq!(p.rank(), 3usize.pow(4));
        let v: Vec<f64> = (0..s.dim()).map(|i| i as f64 + 1.0).collect();
        let once = p.apply(&v);
        assert_eq!(p.apply(&once), once);
        assert_eq!(s.projector(5).rank(), 0);
    }
}
