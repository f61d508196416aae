//! Closed-form bounds on the degree deviation `s` and the spectral radius
//! `λ`.
//!
//! Every evaluator computes its value even when a hypothesis fails and
//! reports each hypothesis separately; `applicable` is the conjunction.
//! Upper bounds on `s` that contain at most one square root of a rational
//! also carry an exact form so equality with `s` can be decided exactly.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeStats, Graph};
use crate::rational::{rat, to_f64, Rational, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("invalid bound parameters: {0}")]
    InvalidParameters(String),
    #[error("x = {x} outside the open interval (1, {ratio})")]
    OutOfDomain { x: String, ratio: String },
}

/// Parameters shared by the deviation bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundContext {
    pub n: usize,
    pub m: usize,
    pub d: Rational,
    /// Lower degree bound `δ`.
    pub delta_lo: Rational,
    /// Upper degree bound `Δ`.
    pub delta_hi: Rational,
    pub s: Rational,
    pub psi: Rational,
}

impl BoundContext {
    pub fn new(
        n: usize,
        m: usize,
        delta_lo: Rational,
        delta_hi: Rational,
        s: Rational,
    ) -> Result<Self, BoundError> {
        if n == 0 {
            return Err(BoundError::InvalidParameters("n must be positive".into()));
        }
        if 2 * m > n * (n - 1) {
            return Err(BoundError::InvalidParameters(format!("{m} edges exceed C({n},2)")));
        }
        let top = rat(n as i128 - 1);
        if delta_lo.is_negative() || delta_lo > delta_hi || delta_hi > top {
            return Err(BoundError::InvalidParameters(format!(
                "need 0 <= delta ({delta_lo}) <= Delta ({delta_hi}) <= n-1 ({top})"
            )));
        }
        if s.is_negative() {
            return Err(BoundError::InvalidParameters(format!("negative deviation {s}")));
        }
        let d = Rational::new(2 * m as i128, n as i128);
        let other = top - d;
        Ok(BoundContext {
            n,
            m,
            psi: if d < other { d } else { other },
            d,
            delta_lo,
            delta_hi,
            s,
        })
    }

    /// Context with `δ`, `Δ` the attained minimum and maximum degree.
    pub fn from_stats(st: &DegreeStats) -> Self {
        BoundContext {
            n: st.n,
            m: st.m,
            d: st.d,
            delta_lo: rat(st.delta_min as i128),
            delta_hi: rat(st.delta_max as i128),
            s: st.s,
            psi: st.psi,
        }
    }

    /// Same graph data with different degree bounds.
    pub fn with_degree_bounds(&self, delta_lo: Rational, delta_hi: Rational) -> Self {
        BoundContext {
            delta_lo,
            delta_hi,
            ..self.clone()
        }
    }

    fn n_rat(&self) -> Rational {
        rat(self.n as i128)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Hypothesis {
    pub condition: &'static str,
    pub holds: bool,
}

fn hyp(condition: &'static str, holds: bool) -> Hypothesis {
    Hypothesis { condition, holds }
}

/// Result of evaluating one bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundValue {
    pub value: f64,
    pub applicable: bool,
    pub hypotheses: Vec<Hypothesis>,
    /// Exact value as the maximum of these surds, when available.
    #[serde(skip)]
    pub exact: Option<Vec<Surd>>,
}

impl BoundValue {
    fn new(value: f64, hypotheses: Vec<Hypothesis>, exact: Option<Vec<Surd>>) -> Self {
        BoundValue {
            value,
            applicable: hypotheses.iter().all(|h| h.holds),
            hypotheses,
            exact,
        }
    }

    /// Exact ordering of the bound relative to `q`, when an exact form exists.
    pub fn cmp_exact(&self, q: &Rational) -> Option<Ordering> {
        let branches = self.exact.as_ref()?;
        branches.iter().map(|b| b.cmp_rational(q)).max()
    }

    pub fn failed_hypotheses(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.hypotheses.iter().filter(|h| !h.holds).map(|h| h.condition)
    }
}

/// Haviland: `s ≤ ψ(2n − 1 − √(4nψ + 1))`.
pub fn haviland_bound(ctx: &BoundContext) -> BoundValue {
    let n = ctx.n_rat();
    let psi = ctx.psi;
    let exact = Surd::new(psi * (rat(2) * n - rat(1)), -psi, rat(4) * n * psi + rat(1));
    BoundValue::new(exact.to_f64(), vec![hyp("n >= 1", ctx.n >= 1)], Some(vec![exact]))
}

/// Ali et al.: `s ≤ dn √((Δ−d)(d−δ)/(δΔ))`, with `δ`, `Δ` the actual
/// minimum and maximum degree.
pub fn ali_bound(ctx: &BoundContext) -> BoundValue {
    let (d, lo, hi) = (ctx.d, ctx.delta_lo, ctx.delta_hi);
    let hyps = vec![
        hyp("delta >= 1", lo >= rat(1)),
        hyp("delta < d", lo < d),
        hyp("d < Delta", d < hi),
    ];
    let exact = if lo.is_positive() {
        let radicand = (hi - d) * (d - lo) / (lo * hi);
        (!radicand.is_negative()).then(|| vec![Surd::new(rat(0), d * ctx.n_rat(), radicand)])
    } else {
        None
    };
    let value = exact.as_ref().map_or(f64::INFINITY, |e| e[0].to_f64());
    BoundValue::new(value, hyps, exact)
}

/// Equality test for the Ali et al. bound: all degrees in `{δ, Δ}` and
/// `|deg(u) − d| / deg(u)` constant. Requires minimum degree at least 1;
/// returns false otherwise.
pub fn ali_equality_check(g: &Graph) -> bool {
    let st = crate::graph::degree_stats(g);
    if st.delta_min == 0 {
        return false;
    }
    let in_extremes = st
        .degrees
        .iter()
        .all(|&k| k == st.delta_min || k == st.delta_max);
    let ratio = |k: usize| (rat(k as i128) - st.d).abs() / rat(k as i128);
    let first = ratio(st.degrees[0]);
    let holds = in_extremes && st.degrees.iter().all(|&k| ratio(k) == first);
    if holds {
        let (lo, hi) = (rat(st.delta_min as i128), rat(st.delta_max as i128));
        assert_eq!(st.d, rat(2) * lo * hi / (lo + hi), "equality case forces d = 2δΔ/(δ+Δ)");
    }
    holds
}

/// `s ≤ 2n(Δ−d)(d−δ)/(Δ−δ)` for `0 ≤ δ < d < Δ < n`.
pub fn theorem1_bound(ctx: &BoundContext) -> BoundValue {
    let (n, d, lo, hi) = (ctx.n_rat(), ctx.d, ctx.delta_lo, ctx.delta_hi);
    let hyps = vec![
        hyp("0 <= delta", !lo.is_negative()),
        hyp("delta < d", lo < d),
        hyp("d < Delta", d < hi),
        hyp("Delta < n", hi < n),
    ];
    if hi == lo {
        return BoundValue::new(f64::NAN, hyps, None);
    }
    let exact = rat(2) * n * (hi - d) * (d - lo) / (hi - lo);
    BoundValue::new(to_f64(&exact), hyps, Some(vec![Surd::from_rational(exact)]))
}

/// `s ≤ max{(2Δ+1−√((2Δ+1)²−4dn))(Δ−d), d(2n−1−√(4dn+1))}` in the regime
/// `δ = 0`, `0 < d < Δ < n`, `d ≤ n−3`, `2Δ ≤ dn < Δ(Δ+1)`.
pub fn theorem2_bound(ctx: &BoundContext) -> BoundValue {
    let (n, d, lo, hi) = (ctx.n_rat(), ctx.d, ctx.delta_lo, ctx.delta_hi);
    let dn = d * n;
    let hyps = vec![
        hyp("delta = 0", lo.is_zero()),
        hyp("0 < d", d.is_positive()),
        hyp("d < Delta", d < hi),
        hyp("Delta < n", hi < n),
        hyp("d <= n - 3", d <= n - rat(3)),
        hyp("2 Delta <= dn", rat(2) * hi <= dn),
        hyp("dn < Delta (Delta + 1)", dn < hi * (hi + rat(1))),
    ];
    let two_hi1 = rat(2) * hi + rat(1);
    let first_radicand = two_hi1 * two_hi1 - rat(4) * dn;
    let second = Surd::new(d * (rat(2) * n - rat(1)), -d, rat(4) * dn + rat(1));
    let mut branches = vec![second];
    if !first_radicand.is_negative() {
        branches.insert(0, Surd::new(two_hi1 * (hi - d), -(hi - d), first_radicand));
    }
    let value = if first_radicand.is_negative() {
        f64::NAN
    } else {
        branches.iter().map(Surd::to_f64).fold(f64::NEG_INFINITY, f64::max)
    };
    BoundValue::new(value, hyps, (!first_radicand.is_negative()).then_some(branches))
}

/// First branch of the spectral lower bound: `d²n / √(d²n² − s²)`.
pub fn theorem3_first_branch(n: f64, d: f64, s: f64) -> f64 {
    d * d * n / (d * d * n * n - s * s).sqrt()
}

/// Second branch of the spectral lower bound: `2s/n`.
pub fn theorem3_second_branch(n: f64, _d: f64, s: f64) -> f64 {
    2.0 * s / n
}

/// Lower bound on `λ̃` (and `λ`): `d²n/√(d²n²−s²)` for `s ≤ dn/√2`,
/// otherwise `2s/n`. At the switch point both branches coincide.
pub fn theorem3_bound(n: f64, d: f64, s: f64) -> BoundValue {
    let hyps = vec![hyp("s > 0", s > 0.0)];
    let lhs = 2.0 * s * s;
    let rhs = d * d * n * n;
    let value = if lhs == rhs {
        theorem3_first_branch(n, d, s).max(theorem3_second_branch(n, d, s))
    } else if lhs < rhs {
        theorem3_first_branch(n, d, s)
    } else {
        theorem3_second_branch(n, d, s)
    };
    BoundValue::new(value, hyps, None)
}

/// Bounds on `λ − d` in terms of `s`: the proven pair, the conjectured
/// sharper pair and the two later upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NikiforovBounds {
    /// `s²/(2n²√(2m))`.
    pub lower_proven: f64,
    /// `√s`.
    pub upper_proven: f64,
    /// `s²/(2n²√m) = s²/(n²√(2dn))`.
    pub lower_conjectured: f64,
    /// `√(s/2)`.
    pub upper_conjectured: f64,
    /// `√(9s/10)`.
    pub upper_zhang: f64,
    /// `√(2s/3)`.
    pub upper_two_thirds: f64,
}

pub fn nikiforov_bounds(n: f64, _d: f64, m: f64, s: f64) -> NikiforovBounds {
    let lower = |root: f64| if s == 0.0 { 0.0 } else { s * s / (2.0 * n * n * root) };
    NikiforovBounds {
        lower_proven: lower((2.0 * m).sqrt()),
        upper_proven: s.sqrt(),
        lower_conjectured: lower(m.sqrt()),
        upper_conjectured: (s / 2.0).sqrt(),
        upper_zhang: (0.9 * s).sqrt(),
        upper_two_thirds: (2.0 * s / 3.0).sqrt(),
    }
}

/// `λ ≥ d + s²/(n²√(2dn))` when `s > dn/√2`, or `s ≤ dn/√2` and `d ≤ n/2`.
pub fn corollary1_bound(n: f64, d: f64, s: f64) -> BoundValue {
    let above_switch = 2.0 * s * s > d * d * n * n;
    let hyps = vec![
        hyp("s > 0", s > 0.0),
        hyp("s > dn/sqrt2 or d <= n/2", above_switch || 2.0 * d <= n),
    ];
    BoundValue::new(d + s * s / (n * n * (2.0 * d * n).sqrt()), hyps, None)
}

/// `λ ≥ d + s²/n³ − 2(d+n)s⁴/n⁸` for `d > n/2`.
pub fn appendix_f1_value(n: f64, d: f64, s: f64) -> f64 {
    d + s * s / n.powi(3) - 2.0 * (d + n) * s.powi(4) / n.powi(8)
}

/// `λ ≥ d + 4s²/(n(3n−2d)(2d+n)) − 24(2d−n)s³/(n²(3n−2d)²(2d+n)²)`.
pub fn appendix_f2_value(n: f64, d: f64, s: f64) -> f64 {
    let a = 3.0 * n - 2.0 * d;
    let b = 2.0 * d + n;
    d + 4.0 * s * s / (n * a * b) - 24.0 * (2.0 * d - n) * s.powi(3) / (n * n * a * a * b * b)
}

/// `d + √2 s²/(2n²√(dn))`.
pub fn niki_value(n: f64, d: f64, s: f64) -> f64 {
    d + 2f64.sqrt() * s * s / (2.0 * n * n * (d * n).sqrt())
}

/// Lower threshold on `s` for the second appendix bound: `7n(d − n/2)/10`.
pub fn appendix_t(n: f64, d: f64) -> f64 {
    0.7 * n * (d - n / 2.0)
}

/// `s₀ = ½ √(n⁵(2√(dn) − √2 n) / (√(dn)(d+n)))`.
pub fn appendix_s0(n: f64, d: f64) -> f64 {
    let root = (d * n).sqrt();
    0.5 * (n.powi(5) * (2.0 * root - 2f64.sqrt() * n) / (root * (d + n))).sqrt()
}

/// `s₁ = (3n−2d)(2d+n)(24d³ − 52d²n + 26dn² + 13n³) / (192n³)`.
pub fn appendix_s1(n: f64, d: f64) -> f64 {
    (3.0 * n - 2.0 * d)
        * (2.0 * d + n)
        * (24.0 * d.powi(3) - 52.0 * d * d * n + 26.0 * d * n * n + 13.0 * n.powi(3))
        / (192.0 * n.powi(3))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AppendixBounds {
    pub f1: BoundValue,
    pub f2: BoundValue,
    pub niki: BoundValue,
    pub s0: f64,
    pub h1: f64,
    pub s1: f64,
}

/// The three lower bounds on `λ` for the dense regime `d > n/2`.
pub fn appendix_bounds(n: f64, d: f64, s: f64) -> AppendixBounds {
    let positive = s > 0.0;
    let dense = 2.0 * d > n;
    AppendixBounds {
        f1: BoundValue::new(
            appendix_f1_value(n, d, s),
            vec![hyp("s > 0", positive), hyp("d > n/2", dense)],
            None,
        ),
        f2: BoundValue::new(
            appendix_f2_value(n, d, s),
            vec![
                hyp("s > 0", positive),
                hyp("d > n/2", dense),
                hyp("d <= 0.8 n", d <= 0.8 * n),
                hyp("s >= t", s >= appendix_t(n, d)),
            ],
            None,
        ),
        niki: BoundValue::new(niki_value(n, d, s), vec![hyp("s > 0", positive)], None),
        s0: appendix_s0(n, d),
        h1: havi2_bound(n, d).h1,
        s1: appendix_s1(n, d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Havi2 {
    /// `(n−d−1)(2n−1−√(4n(n−d−1)+1))`.
    pub h: f64,
    /// `(n−d)(2n−√(4n(n−d)))`.
    pub h1: f64,
}

/// Haviland's bound rewritten for `ψ = n − 1 − d`, and its relaxation.
pub fn havi2_bound(n: f64, d: f64) -> Havi2 {
    let k = n - d - 1.0;
    Havi2 {
        h: k * (2.0 * n - 1.0 - (4.0 * n * k + 1.0).sqrt()),
        h1: (n - d) * (2.0 * n - (4.0 * n * (n - d)).sqrt()),
    }
}

/// Ratio of the bound `2n(Δ−d)(d−δ)/(Δ−δ)` to the Ali et al. bound with `δ = 1`,
/// `Δ = ratio`, `d = x`.
pub fn figure1_ratio(x: f64, ratio: f64) -> Result<f64, BoundError> {
    if !(x > 1.0 && x < ratio) {
        return Err(BoundError::OutOfDomain {
            x: x.to_string(),
            ratio: ratio.to_string(),
        });
    }
    let (lo, hi) = (1.0, ratio);
    let theorem1 = 2.0 * (hi - x) * (x - lo) / (hi - lo);
    let ali = x * ((hi - x) * (x - lo) / (lo * hi)).sqrt();
    Ok(theorem1 / ali)
}

/// `points` samples `(x, g(x))` of [`figure1_ratio`] for `δ < d < Δ`,
/// equally spaced strictly inside the interval; `x = d/δ`.
pub fn figure1_series(delta_lo: f64, delta_hi: f64, points: usize) -> Result<Vec<(f64, f64)>, BoundError> {
    if !(delta_lo > 0.0 && delta_hi > delta_lo && delta_hi.is_finite()) {
        return Err(BoundError::InvalidParameters(format!("need 0 < delta < Delta, got {delta_lo}, {delta_hi}")));
    }
    let ratio = delta_hi / delta_lo;
    (1..=points)
        .map(|i| {
            let x = 1.0 + (ratio - 1.0) * i as f64 / (points + 1) as f64;
            figure1_ratio(x, ratio).map(|g| (x, g))
        })
        .collect()
}

/// `points` samples `(d/n, h₁/n², s₁/n²)` for `d/n` in `(0.5, 0.8]`.
pub fn figure2_series(points: usize) -> Vec<(f64, f64, f64)> {
    (1..=points)
        .map(|i| {
            let x = 0.5 + 0.3 * i as f64 / points as f64;
            (x, havi2_bound(1.0, x).h1, appendix_s1(1.0, x))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, Family};
    use crate::graph::degree_stats;
    use crate::rational::frac;

    fn ctx_of(f: Family, p: &[usize]) -> BoundContext {
        BoundContext::from_stats(&degree_stats(&make_family(f, p).unwrap()))
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn haviland_examples() {
        let ctx = ctx_of(Family::UnionClique, &[4, 3]);
        let b = haviland_bound(&ctx);
        assert!(close(b.value, 3.0, 1e-15));
        assert_eq!(b.cmp_exact(&ctx.s), Some(Ordering::Equal));

        let ctx = ctx_of(Family::Star, &[4]);
        let b = haviland_bound(&ctx);
        assert_eq!(b.cmp_exact(&rat(3)), Some(Ordering::Equal));

        let ctx = ctx_of(Family::Cycle, &[6]);
        let b = haviland_bound(&ctx);
        assert!(b.value >= 0.0);
        assert_eq!(b.cmp_exact(&ctx.s), Some(Ordering::Greater));
    }

    #[test]
    fn ali_examples() {
        let ctx = ctx_of(Family::Star, &[4]);
        let b = ali_bound(&ctx);
        assert!(b.applicable);
        assert!(close(b.value, 3.0, 1e-15));
        assert_eq!(b.cmp_exact(&ctx.s), Some(Ordering::Equal));

        let ctx = ctx_of(Family::SemiregularBipartite, &[2, 3]);
        assert_eq!(ctx.s, frac(12, 5));
        let b = ali_bound(&ctx);
        assert!(close(b.value, 2.4, 1e-14));
        assert_eq!(b.cmp_exact(&ctx.s), Some(Ordering::Equal));

        let b = ali_bound(&ctx_of(Family::Cycle, &[5]));
        assert!(!b.applicable);
        assert_eq!(b.value, 0.0);

        let b = ali_bound(&ctx_of(Family::UnionClique, &[5, 3]));
        assert!(!b.applicable);
        assert!(b.exact.is_none());
    }

    #[test]
    fn ali_equality_examples() {
        assert!(ali_equality_check(&make_family(Family::SemiregularBipartite, &[2, 3]).unwrap()));
        assert!(ali_equality_check(&make_family(Family::Star, &[4]).unwrap()));
        assert!(!ali_equality_check(&make_family(Family::Path, &[4]).unwrap()));
        assert!(ali_equality_check(&make_family(Family::Cycle, &[5]).unwrap()));
        assert!(!ali_equality_check(&make_family(Family::UnionClique, &[4, 3]).unwrap()));
    }

    #[test]
    fn two_degree_bound_examples() {
        let ctx = ctx_of(Family::Star, &[4]);
        let b = theorem1_bound(&ctx);
        assert!(b.applicable);
        assert_eq!(b.cmp_exact(&rat(3)), Some(Ordering::Equal));

        let ctx = BoundContext::new(10, 20, rat(2), rat(8), rat(0)).unwrap();
        let b = theorem1_bound(&ctx);
        assert!(close(b.value, 80.0 / 3.0, 1e-12));
        assert_eq!(b.cmp_exact(&frac(80, 3)), Some(Ordering::Equal));

        // d -> delta
        let ctx = BoundContext::new(10, 10, rat(2), rat(8), rat(0)).unwrap();
        let b = theorem1_bound(&ctx);
        assert_eq!(b.value, 0.0);
        assert!(!b.applicable);
    }

    #[test]
    fn max_degree_bound_examples() {
        let ctx = BoundContext::new(6, 4, rat(0), rat(3), rat(0)).unwrap();
        let b = theorem2_bound(&ctx);
        assert!(b.applicable, "{:?}", b.hypotheses);
        let first = (7.0 - 17f64.sqrt()) * (5.0 / 3.0);
        let second = (4.0 / 3.0) * (11.0 - 33f64.sqrt());
        assert!(close(b.value, first.max(second), 1e-13));
        assert!(close(b.value, 7.007, 1e-3));
        assert!(close(first, 4.795, 1e-3));

        let ctx = BoundContext::new(6, 3, rat(0), rat(2), rat(0)).unwrap();
        let b = theorem2_bound(&ctx);
        assert!(!b.applicable);
        assert_eq!(b.failed_hypotheses().collect::<Vec<_>>(), vec!["dn < Delta (Delta + 1)"]);

        // second expression is Haviland's bound when psi = d
        let ctx = BoundContext::new(9, 6, rat(0), rat(4), rat(0)).unwrap();
        assert!(ctx.psi == ctx.d);
        let two = theorem2_bound(&ctx);
        let hav = haviland_bound(&ctx);
        let second = two.exact.as_ref().unwrap().last().unwrap().clone();
        assert_eq!(second, hav.exact.as_ref().unwrap()[0]);
    }

    #[test]
    fn spectral_lower_bound_examples() {
        let b = theorem3_bound(4.0, 1.5, 3.0);
        assert!(close(b.value, 3f64.sqrt(), 1e-14));
        let b = theorem3_bound(8.0, 1.75, 10.5);
        assert!(close(b.value, 2.625, 1e-15));
        assert!(7f64.sqrt() >= b.value);
        let b = theorem3_bound(10.0, 3.0, 1e-9);
        assert!(close(b.value, 3.0, 1e-12));
        assert!(!theorem3_bound(5.0, 2.0, 0.0).applicable);
        // switch point: both branches equal sqrt(2) d
        let (n, d) = (7.0, 2.5);
        let s = d * n / 2f64.sqrt();
        assert!(close(theorem3_first_branch(n, d, s), theorem3_second_branch(n, d, s), 1e-12));
    }

    #[test]
    fn nikiforov_examples() {
        let nb = nikiforov_bounds(4.0, 1.5, 3.0, 3.0);
        assert!(close(nb.lower_conjectured, 9.0 / (32.0 * 3f64.sqrt()), 1e-15));
        assert!(close(nb.lower_conjectured, 0.1624, 1e-4));
        assert!(3f64.sqrt() - 1.5 >= nb.lower_conjectured);
        assert!(nb.upper_conjectured <= nb.upper_proven);
        let zero = nikiforov_bounds(5.0, 2.0, 5.0, 0.0);
        assert_eq!(zero.lower_proven, 0.0);
        assert_eq!(zero.upper_proven, 0.0);
        assert_eq!(zero.upper_two_thirds, 0.0);
    }

    #[test]
    fn lambda_gap_examples() {
        let b = corollary1_bound(4.0, 1.5, 3.0);
        assert!(b.applicable);
        assert!(close(b.value, 1.5 + 9.0 / (16.0 * 12f64.sqrt()), 1e-15));
        assert!(3f64.sqrt() >= b.value);
        // d > n/2 and s below the switch point
        assert!(!corollary1_bound(10.0, 6.0, 5.0).applicable);
        // d > n/2 and s just above dn/sqrt2
        let s = 60.0 / 2f64.sqrt() + 1e-6;
        assert!(corollary1_bound(10.0, 6.0, s).applicable);
    }

    #[test]
    fn appendix_examples() {
        let ab = appendix_bounds(10.0, 6.0, 20.0);
        assert!(ab.f1.applicable && ab.f2.applicable && ab.niki.applicable);
        assert!(close(ab.f1.value, 6.3488, 1e-12));
        assert!(close(ab.f2.value, 6.0 + 1600.0 / 3960.0 - 384000.0 / 15681600.0, 1e-12));
        assert!(close(ab.f2.value, 6.3796, 1e-4));
        assert!(close(ab.niki.value, 6.0 + 2f64.sqrt() * 400.0 / (200.0 * 60f64.sqrt()), 1e-12));
        assert!(ab.f2.value >= ab.niki.value);

        let ab = appendix_bounds(10.0, 6.0, 0.0);
        assert_eq!(ab.f1.value, 6.0);
        assert_eq!(ab.niki.value, 6.0);

        let ab = appendix_bounds(10.0, 4.0, 5.0);
        assert!(!ab.f1.applicable && !ab.f2.applicable);
        assert!(ab.niki.applicable);
        // niki coincides with the corollary value
        assert!(close(ab.niki.value, corollary1_bound(10.0, 4.0, 5.0).value, 1e-14));
    }

    #[test]
    fn havi2_examples() {
        let h = havi2_bound(10.0, 6.0);
        assert!(close(h.h, 24.0, 1e-12));
        assert!(close(h.h1, 4.0 * (20.0 - 160f64.sqrt()), 1e-12));
        assert!(h.h <= h.h1);
        assert_eq!(havi2_bound(7.0, 6.0).h, 0.0);
        for n in [5.0, 10.0, 37.0, 62.0] {
            for i in 1..1000 {
                let d = n / 2.0 + (n / 2.0) * i as f64 / 1000.0;
                assert!(havi2_bound(n, d).h1 < 0.35 * n * n);
            }
        }
    }

    #[test]
    fn figure_series() {
        let f1 = figure1_series(2.0, 20.0, 200).unwrap();
        assert_eq!(f1.len(), 200);
        assert!(f1.iter().all(|&(x, g)| x > 1.0 && x < 10.0 && g <= 1.0));
        assert!(figure1_series(3.0, 3.0, 10).is_err());
        let f2 = figure2_series(300);
        assert_eq!(f2.last().unwrap().0, 0.8);
        assert!(f2.iter().all(|&(x, h1, s1)| x > 0.5 && h1 < s1));
    }

    #[test]
    fn ratio_examples() {
        let g = figure1_ratio(2.0, 10.0).unwrap();
        assert!(close(g, 16.0 / (18.0 * 0.8f64.sqrt()), 1e-15));
        assert!(g < 1.0);
        assert!(figure1_ratio(5.5, 10.0).unwrap() < 1.0);
        assert!(figure1_ratio(1.0 + 1e-12, 10.0).unwrap() < 1e-4);
        // touches 1 where d = 2 delta Delta / (delta + Delta)
        assert!(close(figure1_ratio(20.0 / 11.0, 10.0).unwrap(), 1.0, 1e-14));
        assert!(figure1_ratio(1.0, 10.0).is_err());
        assert!(figure1_ratio(10.0, 10.0).is_err());
    }

    #[test]
    fn context_validation() {
        assert!(BoundContext::new(0, 0, rat(0), rat(0), rat(0)).is_err());
        assert!(BoundContext::new(4, 7, rat(0), rat(3), rat(0)).is_err());
        assert!(BoundContext::new(4, 3, rat(2), rat(1), rat(0)).is_err());
        assert!(BoundContext::new(4, 3, rat(0), rat(4), rat(0)).is_err());
        let ctx = BoundContext::new(4, 3, rat(1), rat(3), rat(3)).unwrap();
        assert_eq!(ctx.d, frac(3, 2));
        assert_eq!(ctx.psi, frac(3, 2));
    }
}
