use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::exact::{rational_to_f64, Exact};

/// Coefficient field for algebra elements.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_exact(c: &Exact) -> Self;
    fn modulus(&self) -> f64;
}

impl Scalar for Exact {
    fn conj(&self) -> Self {
        Exact::new(self.re, -self.im)
    }
    fn from_i64(v: i64) -> Self {
        Exact::new((v as i128).into(), 0.into())
    }
    fn from_exact(c: &Exact) -> Self {
        *c
    }
    fn modulus(&self) -> f64 {
        let re = rational_to_f64(&self.re);
        let im = rational_to_f64(&self.im);
        re.hypot(im)
    }
}

impl Scalar for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_exact(c: &Exact) -> Self {
        Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im))
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}

/// Finite linear combination of basis labels. Zero coefficients are never
/// stored, so structural equality is algebraic equality.
#[derive(Clone, PartialEq)]
pub struct Element<L: Ord, C = Exact> {
    terms: BTreeMap<L, C>,
}

/// Element with floating-point coefficients.
pub type NumericElement<L> = Element<L, Complex64>;

impl<L: Ord + Clone, C: Scalar> Element<L, C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(label: L) -> Self {
        Self::term(label, C::one())
    }

    pub fn term(label: L, coeff: C) -> Self {
        let mut e = Self::zero();
        e.add_term(label, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (L, C)>) -> Self {
        let mut e = Self::zero();
        for (l, c) in terms {
            e.add_term(l, c);
        }
        e
    }

    pub fn add_term(&mut self, label: L, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(label.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &L) -> C {
        self.terms.get(label).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v.clone() * c.clone())))
    }

    /// Relabels every term, accumulating coincident images.
    pub fn map_labels<M: Ord + Clone>(&self, f: impl Fn(&L) -> Element<M, C>) -> Element<M, C> {
        let mut out = Element::zero();
        for (l, c) in &self.terms {
            for (m, d) in f(l).iter() {
                out.add_term(m.clone(), c.clone() * d.clone());
            }
        }
        out
    }

    /// Largest coefficient modulus (0 for the zero element).
    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(Scalar::modulus).fold(0.0, f64::max)
    }
}

impl<L: Ord + Clone> Element<L, Exact> {
    pub fn to_numeric(&self) -> NumericElement<L> {
        Element::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), Complex64::from_exact(c))))
    }
}

impl<L: Ord + Clone, C: Scalar> Add for Element<L, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
        self
    }
}

impl<L: Ord + Clone, C: Scalar> Sub for Element<L, C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (l, c) in rhs.terms {
            self.add_term(l, -c);
        }
        self
    }
}

impl<L: Ord + Clone, C: Scalar> Neg for Element<L, C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&(-C::one()))
    }
}

impl<L: Ord + Clone + Debug, C: Debug> Debug for Element<L, C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c:?})·{l:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
