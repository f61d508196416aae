//! Candidate points and bound chain for the dense regime `d > n/2`.
//!
//! Adding `w± ≤ 1` to the relaxed problem gives the lower limit
//! `L₂(n₊) = d − n + n₊ + s/(2n₊)`. `L` and `L₂` cross at `N`. Along
//! `x₊ = L₂(n₊)` the objective has its unique minimum at the root `p` of
//! the cubic `P(n₊) = −2n³ + 8n²n₊ − 12nn₊² − ns + 8n₊³`, bracketed by
//! `p₁ < p < p₂`. The remaining functions are the successive lower
//! estimates that lead to the closed-form bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed};
use serde::Serialize;

use crate::bounds::{appendix_f1_value, appendix_f2_value, appendix_s0, appendix_s1, appendix_t, havi2_bound};

use super::q::QParams;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AppendixQuantities {
    pub n: f64,
    pub d: f64,
    pub s: f64,
    /// Crossing point of `L` and `L₂`.
    pub n_cross: f64,
    /// `d/2 + n/4 − s/(4n)`.
    pub n1: f64,
    pub t: f64,
    pub p1: f64,
    pub p2: f64,
    pub p: f64,
    pub s0: f64,
    pub s1: f64,
    pub h: f64,
    pub h1: f64,
    pub l_at_cross: f64,
    pub l2_at_cross: f64,
    /// `P(p₂) = s³/n³` and `P(p₁) = s⁵(−3n⁸+3n⁴s²−s⁴)/n¹⁵`, checked in
    /// exact arithmetic on the binary values of `n` and `s`.
    pub cubic_identities_hold: bool,
    pub dense: bool,
    pub positive: bool,
}

/// `N = d/2 + n/2 − √(d² − 2dn + n² + 2s)/2`.
pub fn n_cross(n: f64, d: f64, s: f64) -> f64 {
    d / 2.0 + n / 2.0 - (d * d - 2.0 * d * n + n * n + 2.0 * s).sqrt() / 2.0
}

pub fn n1(n: f64, d: f64, s: f64) -> f64 {
    d / 2.0 + n / 4.0 - s / (4.0 * n)
}

pub fn p1(n: f64, s: f64) -> f64 {
    n / 2.0 + s / (2.0 * n) - s.powi(3) / (2.0 * n.powi(5))
}

pub fn p2(n: f64, s: f64) -> f64 {
    n / 2.0 + s / (2.0 * n)
}

pub fn cubic(n: f64, s: f64, x: f64) -> f64 {
    -2.0 * n.powi(3) + 8.0 * n * n * x - 12.0 * n * x * x - n * s + 8.0 * x.powi(3)
}

/// Root of the cubic on `[p₁, p₂]` by bisection; the cubic is strictly
/// increasing, so the bracket is certified. Runs until the midpoint
/// coincides with an end point.
pub fn cubic_root(n: f64, s: f64) -> f64 {
    let (mut a, mut b) = (p1(n, s), p2(n, s));
    loop {
        let mid = a + (b - a) / 2.0;
        if mid <= a || mid >= b {
            return if cubic(n, s, a).abs() <= cubic(n, s, b).abs() { a } else { b };
        }
        if cubic(n, s, mid) < 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
}

fn big(x: f64) -> BigRational {
    BigRational::from_f64(x).expect("finite")
}

fn big_int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn cubic_exact(n: &BigRational, s: &BigRational, x: &BigRational) -> BigRational {
    let n3 = n * n * n;
    big_int(-2) * &n3 + big_int(8) * n * n * x - big_int(12) * n * x * x - n * s + big_int(8) * x * x * x
}

/// Checks both bracket identities exactly for rational `n > 0`, `s`.
pub fn cubic_identities_exact(n: &BigRational, s: &BigRational) -> bool {
    if !n.is_positive() {
        return false;
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let n4 = n * n * n * n;
    let n5 = &n4 * n;
    let p2 = n * &half + s / (big_int(2) * n);
    let p1 = &p2 - s * s * s / (big_int(2) * &n5);
    let s2 = s * s;
    let at_p2 = cubic_exact(n, s, &p2) == s * s * s / (n * n * n);
    let n8 = &n4 * &n4;
    let n15 = &n8 * &n4 * n * n * n;
    let rhs = s * &s2 * &s2 * (big_int(-3) * &n8 + big_int(3) * &n4 * &s2 - &s2 * &s2) / n15;
    at_p2 && cubic_exact(n, s, &p1) == rhs
}

impl AppendixQuantities {
    pub fn new(n: f64, d: f64, s: f64) -> Self {
        let q = QParams { n, d, s };
        let nc = n_cross(n, d, s);
        let havi = havi2_bound(n, d);
        AppendixQuantities {
            n,
            d,
            s,
            n_cross: nc,
            n1: n1(n, d, s),
            t: appendix_t(n, d),
            p1: p1(n, s),
            p2: p2(n, s),
            p: cubic_root(n, s),
            s0: appendix_s0(n, d),
            s1: appendix_s1(n, d),
            h: havi.h,
            h1: havi.h1,
            l_at_cross: q.l(nc),
            l2_at_cross: q.l2(nc),
            cubic_identities_hold: cubic_identities_exact(&big(n), &big(s)),
            dense: 2.0 * d > n,
            positive: s > 0.0,
        }
    }
}

/// Closed form of `f(n₊, L₂(n₊))`.
pub fn f_l2(n_plus: f64, n: f64, d: f64, s: f64) -> f64 {
    let k = 2.0 * n * n_plus - 2.0 * n_plus * n_plus - s;
    let radical = (n * (4.0 * n_plus * s * s + (n * k + 4.0 * n_plus * s) * k)).sqrt();
    (n * (4.0 * d * n_plus - 2.0 * n * n_plus + 2.0 * n_plus * n_plus + s) - n_plus * (4.0 * d * n_plus + 2.0 * s) + radical)
        / (4.0 * n_plus * (n - n_plus))
}

/// Non-radical part of the numerator of `f(n₊, L₂(n₊))`.
fn f_l2_rational_part(n_plus: f64, n: f64, d: f64, s: f64) -> f64 {
    n * (4.0 * d * n_plus - 2.0 * n * n_plus + 2.0 * n_plus * n_plus + s) - n_plus * (4.0 * d * n_plus + 2.0 * s)
}

fn sextic_denominator(n: f64, s: f64) -> f64 {
    n.powi(12) - n.powi(8) * s * s + 2.0 * n.powi(4) * s.powi(4) - s.powi(6)
}

/// `w = √(n⁸ + 6n⁴s² − 3s⁴)`.
pub fn w(n: f64, s: f64) -> f64 {
    (n.powi(8) + 6.0 * n.powi(4) * s * s - 3.0 * s.powi(4)).sqrt()
}

/// `w₁ = n⁴ + 3s² − 6s⁴/n⁴ + 18s⁶/n⁸ − 72s⁸/n¹²`.
pub fn w1(n: f64, s: f64) -> f64 {
    n.powi(4) + 3.0 * s * s - 6.0 * s.powi(4) / n.powi(4) + 18.0 * s.powi(6) / n.powi(8) - 72.0 * s.powi(8) / n.powi(12)
}

fn f1_with(n: f64, d: f64, s: f64, root: f64) -> f64 {
    n.powi(8) * (d * n.powi(4) - d * s * s - n.powi(5) / 2.0 - n * s * s / 2.0 + n / 2.0 * root) / sextic_denominator(n, s)
}

/// Lower estimate of `f(p, L₂(p))`.
pub fn f1(n: f64, d: f64, s: f64) -> f64 {
    f1_with(n, d, s, w(n, s))
}

/// `f₁` with `w` replaced by `w₁`.
pub fn f2(n: f64, d: f64, s: f64) -> f64 {
    f1_with(n, d, s, w1(n, s))
}

/// `f₂` multiplied out.
pub fn f2_expanded(n: f64, d: f64, s: f64) -> f64 {
    (d * n.powi(15) - d * n.powi(11) * s * s + n.powi(12) * s * s - 3.0 * n.powi(8) * s.powi(4) + 9.0 * n.powi(4) * s.powi(6)
        - 36.0 * s.powi(8))
        / (n.powi(3) * sextic_denominator(n, s))
}

/// `d + s²/n³ − 2(d+n)s⁴/n⁸`.
pub fn f3(n: f64, d: f64, s: f64) -> f64 {
    appendix_f1_value(n, d, s)
}

/// The radical of `f(n₊, L₂(n₊))` evaluated at `n₊ = N₁`.
pub fn z(n: f64, d: f64, s: f64) -> f64 {
    let x = n1(n, d, s);
    let k = 2.0 * n * x - 2.0 * x * x - s;
    (n * (4.0 * x * s * s + (n * k + 4.0 * x * s) * k)).sqrt()
}

pub fn z1(n: f64, d: f64, s: f64) -> f64 {
    let a = 3.0 * n - 2.0 * d;
    let b = 2.0 * d + n;
    n * a * b / 8.0 + (1.5 * d - 0.75 * n) * s + 3.0 * s * s / (8.0 * n) - 4.0 * (2.0 * d - n) * s.powi(3) / (n * n * a * b)
}

/// `f(N₁, L₂(N₁))` with the radical replaced by `z₁`, as a single quotient.
pub fn g(n: f64, d: f64, s: f64) -> f64 {
    let num = -16.0 * d.powi(5) * n * n + 32.0 * d.powi(4) * n.powi(3) + 16.0 * d.powi(4) * n * s + 8.0 * d.powi(3) * n.powi(4)
        - 24.0 * d.powi(3) * n * n * s
        - 4.0 * d.powi(3) * s * s
        - 24.0 * d * d * n.powi(5)
        - 4.0 * d * d * n.powi(3) * s
        + 20.0 * d * d * n * s * s
        - 9.0 * d * n.powi(6)
        + 6.0 * d * n.powi(4) * s
        - 13.0 * d * n * n * s * s
        + 32.0 * d * s.powi(3)
        - 12.0 * n.powi(3) * s * s
        - 16.0 * n * s.powi(3);
    let den = (3.0 * n - 2.0 * d) * (2.0 * d + n) * (-2.0 * d * n - n * n + s) * (-2.0 * d * n + 3.0 * n * n + s);
    num / den
}

/// `g` recomputed directly from its definition.
pub fn g_from_definition(n: f64, d: f64, s: f64) -> f64 {
    let x = n1(n, d, s);
    (f_l2_rational_part(x, n, d, s) + z1(n, d, s)) / (4.0 * x * (n - x))
}

pub fn g1(n: f64, d: f64, s: f64) -> f64 {
    appendix_f2_value(n, d, s)
}

/// `r = √2 s² / (2n²√(dn))`.
pub fn r(n: f64, d: f64, s: f64) -> f64 {
    2f64.sqrt() * s * s / (2.0 * n * n * (d * n).sqrt())
}

/// `r₁ = s²(12d² − 20dn + 15n²)/(8n⁵)`.
pub fn r1(n: f64, d: f64, s: f64) -> f64 {
    s * s * (12.0 * d * d - 20.0 * d * n + 15.0 * n * n) / (8.0 * n.powi(5))
}

/// `r₁` before simplification.
pub fn r1_series(n: f64, d: f64, s: f64) -> f64 {
    let e = d - n / 2.0;
    s * s / n.powi(3) - s * s * e / n.powi(4) + 3.0 * s * s * e * e / (2.0 * n.powi(5))
}

/// `s̄ = ¼√(n³(2d−n)(7n−6d)/(d+n))`.
pub fn s_bar(n: f64, d: f64) -> f64 {
    0.25 * (n.powi(3) * (2.0 * d - n) * (7.0 * n - 6.0 * d) / (d + n)).sqrt()
}

/// `L(N) − (N − 1)`.
pub fn cross_gap(n: f64, d: f64, s: f64) -> f64 {
    let q = QParams { n, d, s };
    let nc = n_cross(n, d, s);
    q.l(nc) - (nc - 1.0)
}

/// The same gap from its displayed quotient.
pub fn cross_gap_quotient(n: f64, d: f64, s: f64) -> f64 {
    let k = n - d - 1.0;
    let root = (n * n - 2.0 * d * n + d * d + 2.0 * s).sqrt();
    (-(n + d) * k + s + k * root) / (d + n - root)
}
