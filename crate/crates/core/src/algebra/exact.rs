use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = Ratio<i128>;

/// Exact complex-rational coefficient.
pub type Exact = Complex<Rational>;

/// Real rational `n/d` as an exact coefficient.
pub fn q(n: i128, d: i128) -> Exact {
    Complex::new(Ratio::new(n, d), Ratio::zero())
}

/// The imaginary unit.
pub fn exact_i() -> Exact {
    Complex::new(Ratio::zero(), Ratio::one())
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable form such as `3/2`, `-i`, `1/2-3/4i`.
pub fn format_exact(c: &Exact) -> String {
    let re = &c.re;
    let im = &c.im;
    let imag = |v: &Rational| -> String {
        if v.is_one() {
            "i".into()
        } else if *v == -Rational::one() {
            "-i".into()
        } else {
            format!("{}i", fmt_rational(v))
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => fmt_rational(re),
        (true, false) => imag(im),
        (false, false) => {
            let sign = if im.is_negative() { "-" } else { "+" };
            format!("{}{}{}", fmt_rational(re), sign, imag(&im.abs()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format_exact(&q(3, 2)), "3/2");
        assert_eq!(format_exact(&(-exact_i())), "-i");
        assert_eq!(format_exact(&(q(1, 2) - exact_i() * q(3, 4))), "1/2-3/4i");
        assert_eq!(format_exact(&q(0, 1)), "0");
    }
}
