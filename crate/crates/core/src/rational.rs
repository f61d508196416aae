//! Exact rational scalars and quadratic surds.
//!
//! Every degree-derived quantity (average degree, deviation, smoothing
//! weights, LP variables) lives in [`Rational`]. Bounds that involve one
//! square root of a rational are carried as a [`Surd`] so that "bound equals
//! deviation" can be decided without rounding.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational number. Overflow panics (overflow checks stay enabled in
/// every profile used by the test suites).
pub type Rational = Ratio<i128>;

/// `Rational` from an integer.
pub fn rat(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// `Rational` from `num / den`.
pub fn frac(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Binomial coefficient `k choose 2` for a non-negative rational `k`.
pub fn choose2(k: &Rational) -> Rational {
    k * (k - rat(1)) / rat(2)
}

pub fn to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Sign of `a + b·√r` for rationals `a`, `b` and `r ≥ 0`, decided exactly.
pub fn sign_of_surd(a: &Rational, b: &Rational, r: &Rational) -> Ordering {
    debug_assert!(!r.is_negative());
    let sa = a.cmp(&Rational::zero());
    let sb = if r.is_zero() {
        Ordering::Equal
    } else {
        b.cmp(&Rational::zero())
    };
    match (sa, sb) {
        (_, Ordering::Equal) => sa,
        (Ordering::Equal, _) => sb,
        _ if sa == sb => sa,
        // Opposite signs: the larger magnitude wins.
        _ => match (a * a).cmp(&(b * b * r)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        },
    }
}

/// The real number `rational + coeff·√radicand`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

impl Surd {
    pub fn new(rational: Rational, coeff: Rational, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        Surd {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Surd::new(q, Rational::zero(), Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.coeff) * to_f64(&self.radicand).sqrt()
    }

    /// Exact ordering of `self` relative to `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        sign_of_surd(&(self.rational - q), &self.coeff, &self.radicand)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.rational, self.coeff, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_sign_cases() {
        // 3 - sqrt(9) = 0
        assert_eq!(sign_of_surd(&rat(3), &rat(-1), &rat(9)), Ordering::Equal);
        // 3 - sqrt(8) > 0
        assert_eq!(sign_of_surd(&rat(3), &rat(-1), &rat(8)), Ordering::Greater);
        // 3 - sqrt(10) < 0
        assert_eq!(sign_of_surd(&rat(3), &rat(-1), &rat(10)), Ordering::Less);
        // -3 + sqrt(10) > 0
        assert_eq!(sign_of_surd(&rat(-3), &rat(1), &rat(10)), Ordering::Greater);
        assert_eq!(sign_of_surd(&rat(0), &rat(-2), &rat(5)), Ordering::Less);
        assert_eq!(sign_of_surd(&rat(-1), &rat(7), &rat(0)), Ordering::Less);
        assert_eq!(sign_of_surd(&frac(1, 2), &frac(1, 2), &rat(2)), Ordering::Greater);
    }

    #[test]
    fn surd_compares_against_rational() {
        // 3/2 * (7 - sqrt(25)) = 3
        let h = Surd::new(frac(21, 2), frac(-3, 2), rat(25));
        assert_eq!(h.cmp_rational(&rat(3)), Ordering::Equal);
        assert_eq!(h.cmp_rational(&frac(299, 100)), Ordering::Greater);
        assert!((h.to_f64() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn choose2_values() {
        assert_eq!(choose2(&rat(4)), rat(6));
        assert_eq!(choose2(&rat(1)), rat(0));
        assert_eq!(choose2(&rat(0)), rat(0));
        assert_eq!(choose2(&frac(5, 2)), frac(15, 8));
    }
}
