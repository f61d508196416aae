//! Minimization of the smoothed spectral radius over the relaxed
//! two-variable region.
//!
//! Eliminating `n₋`, `x₋` and `w±` through the three equalities leaves
//! `f(n₊, x₊)`, where `x₊` stands for `(n₊−1)w₊`. The relaxed region is
//! `0 < n₊ < n`, `max(0, L(n₊)) ≤ x₊ ≤ n₊` with `L(n₊) = 2d − (dn−s)/n₊`
//! (from `x₋ ≥ 0`); the weight-capped region adds `x₊ ≥ L₂(n₊)` (from
//! `w± ≤ 1`).

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QError {
    #[error("n+ = {n_plus} outside (0, {n})")]
    Domain { n_plus: f64, n: f64 },
    #[error("radicand {value} <= 0 at (n+, x+) = ({n_plus}, {x_plus})")]
    Radicand { n_plus: f64, x_plus: f64, value: f64 },
    #[error("critical point undefined for dn = 2s")]
    Degenerate,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// `(n, d, s)` with `n > 0`, `d > 0`, `s ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QParams {
    pub n: f64,
    pub d: f64,
    pub s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QPoint {
    pub n_plus: f64,
    pub x_plus: f64,
    pub x_minus: f64,
    pub w_cross: f64,
    pub f_value: f64,
}

impl QParams {
    pub fn new(n: f64, d: f64, s: f64) -> Result<Self, QError> {
        if !(n > 0.0 && d > 0.0 && s >= 0.0 && n.is_finite() && d.is_finite() && s.is_finite()) {
            return Err(QError::InvalidParameters(format!("n={n}, d={d}, s={s}")));
        }
        Ok(QParams { n, d, s })
    }

    /// `L(n₊) = 2d − (dn − s)/n₊`.
    pub fn l(&self, n_plus: f64) -> f64 {
        2.0 * self.d - (self.d * self.n - self.s) / n_plus
    }

    /// `L₂(n₊) = d − n + n₊ + s/(2n₊)`.
    pub fn l2(&self, n_plus: f64) -> f64 {
        self.d - self.n + n_plus + self.s / (2.0 * n_plus)
    }

    /// `n₊` at which `L` turns nonnegative: `(dn − s)/(2d)`.
    pub fn l_root(&self) -> f64 {
        (self.d * self.n - self.s) / (2.0 * self.d)
    }

    pub fn f(&self, n_plus: f64, x_plus: f64) -> Result<QPoint, QError> {
        let QParams { n, d, s } = *self;
        if !(n_plus > 0.0 && n_plus < n) {
            return Err(QError::Domain { n_plus, n });
        }
        let rest = n - n_plus;
        let radicand = (n / n_plus) * ((d - x_plus) * ((d - x_plus) * n + 2.0 * s) * n_plus + s * s);
        if radicand.is_nan() || radicand <= 0.0 {
            return Err(QError::Radicand { n_plus, x_plus, value: radicand });
        }
        let f_value = (radicand.sqrt() + (d + x_plus) * n - 2.0 * d * n_plus - s) / (2.0 * rest);
        Ok(QPoint {
            n_plus,
            x_plus,
            x_minus: (d * n + (x_plus - 2.0 * d) * n_plus - s) / rest,
            w_cross: (2.0 * (d - x_plus) * n_plus + s) / (2.0 * n_plus * rest),
            f_value,
        })
    }

    /// `f(n₊, L(n₊))` in closed form:
    /// `√(n((dn−s)² − dn₊(dn−2s))) / (2n₊√(n−n₊)) − (dn − s − 2dn₊)/(2n₊)`.
    pub fn f_on_l(&self, n_plus: f64) -> f64 {
        let QParams { n, d, s } = *self;
        let dn = d * n;
        (n * ((dn - s).powi(2) - d * n_plus * (dn - 2.0 * s))).sqrt() / (2.0 * n_plus * (n - n_plus).sqrt())
            - (dn - s - 2.0 * d * n_plus) / (2.0 * n_plus)
    }

    /// The same quantity written as `d` plus a positive excess.
    pub fn f_on_l_excess_form(&self, n_plus: f64) -> f64 {
        let QParams { n, d, s } = *self;
        let dn = d * n;
        let root = (n * ((dn - s).powi(2) - d * n_plus * (dn - 2.0 * s)) / (n - n_plus)).sqrt();
        d + s * s / (2.0 * (n - n_plus) * (root + (dn - s)))
    }

    /// Lower end of the `x₊` interval at `n₊`.
    pub fn x_lower(&self, n_plus: f64, region: QRegion) -> f64 {
        let lo = self.l(n_plus).max(0.0);
        match region {
            QRegion::Relaxed => lo,
            QRegion::WeightCapped => lo.max(self.l2(n_plus)),
        }
    }
}

/// `f(n₊, x₊)` for the parameters `(n, d, s)`.
pub fn f_of(n_plus: f64, x_plus: f64, n: f64, d: f64, s: f64) -> Result<QPoint, QError> {
    QParams::new(n, d, s)?.f(n_plus, x_plus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QRegion {
    /// `max(0, L) ≤ x₊ ≤ n₊`.
    Relaxed,
    /// Additionally `x₊ ≥ L₂` (crossing weight at most 1).
    WeightCapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QMinimum {
    pub value: f64,
    pub argmin: QPoint,
    pub evaluations: u64,
}

pub const DEFAULT_GRID: usize = 512;
const REFINE_ROUNDS: usize = 3;
const REFINE_CELLS: usize = 100;
const FINAL_STEP: f64 = 1e-10;

struct Search<'a> {
    params: &'a QParams,
    region: QRegion,
    evaluations: u64,
}

impl Search<'_> {
    /// Objective in `(n₊, t)` coordinates, `x₊ = lo + t(hi − lo)`;
    /// `+∞` outside the region.
    fn eval(&mut self, n_plus: f64, t: f64) -> Option<QPoint> {
        self.evaluations += 1;
        let lo = self.params.x_lower(n_plus, self.region);
        let hi = n_plus;
        if !(n_plus > 0.0 && n_plus < self.params.n) || lo > hi {
            return None;
        }
        let x = lo + t.clamp(0.0, 1.0) * (hi - lo);
        self.params.f(n_plus, x).ok()
    }

    fn scan(&mut self, n_range: (f64, f64), t_range: (f64, f64), cells: usize, best: &mut Option<(QPoint, f64)>) {
        for i in 0..=cells {
            let n_plus = n_range.0 + (n_range.1 - n_range.0) * i as f64 / cells as f64;
            for j in 0..=cells {
                let t = t_range.0 + (t_range.1 - t_range.0) * j as f64 / cells as f64;
                if let Some(p) = self.eval(n_plus, t) {
                    if best.is_none_or(|(b, _)| p.f_value < b.f_value) {
                        *best = Some((p, t));
                    }
                }
            }
        }
    }
}

/// Grid scan of the region followed by local grid refinement and a compass
/// search in `(n₊, t)` down to a step of `1e−10`.
pub fn minimize_q(params: &QParams, grid: usize, region: QRegion) -> Result<QMinimum, QError> {
    if params.s.is_nan() || params.s <= 0.0 {
        return Err(QError::InvalidParameters("minimization needs s > 0".into()));
    }
    if grid < 64 {
        return Err(QError::InvalidParameters(format!("grid {grid} below 64")));
    }
    let n = params.n;
    let mut search = Search { params, region, evaluations: 0 };
    let mut best: Option<(QPoint, f64)> = None;
    // Open interval in n₊: cell centres.
    let h = n / grid as f64;
    search.scan((h / 2.0, n - h / 2.0), (0.0, 1.0), grid - 1, &mut best);
    // Analytic candidates from the case analysis of the lower bound.
    let mut seeds = vec![params.l_root()];
    if let Ok(c) = q_critical_point(params.n, params.d, params.s) {
        seeds.push(c);
    }
    for c in seeds {
        if let Some(p) = search.eval(c, 0.0) {
            if best.is_none_or(|(b, _)| p.f_value < b.f_value) {
                best = Some((p, 0.0));
            }
        }
    }
    let Some((mut point, mut t)) = best else {
        return Err(QError::InvalidParameters("empty feasible region".into()));
    };

    let mut dn = h;
    let mut dt = 1.0 / (grid - 1) as f64;
    for _ in 0..REFINE_ROUNDS {
        let mut local = Some((point, t));
        let n_lo = (point.n_plus - 5.0 * dn).max(f64::MIN_POSITIVE);
        let n_hi = (point.n_plus + 5.0 * dn).min(n * (1.0 - f64::EPSILON));
        let t_lo = (t - 5.0 * dt).max(0.0);
        let t_hi = (t + 5.0 * dt).min(1.0);
        search.scan((n_lo, n_hi), (t_lo, t_hi), REFINE_CELLS, &mut local);
        (point, t) = local.expect("seeded");
        dn /= 10.0;
        dt /= 10.0;
    }

    let (mut step_n, mut step_t) = (dn, dt);
    while step_n > FINAL_STEP * n.max(1.0) || step_t > FINAL_STEP {
        let mut improved = false;
        for (a, b) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let cand_t = (t + b * step_t).clamp(0.0, 1.0);
            if let Some(p) = search.eval(point.n_plus + a * step_n, cand_t) {
                if p.f_value < point.f_value {
                    point = p;
                    t = cand_t;
                    improved = true;
                }
            }
        }
        if !improved {
            step_n /= 2.0;
            step_t /= 2.0;
        }
    }
    Ok(QMinimum {
        value: point.f_value,
        argmin: point,
        evaluations: search.evaluations,
    })
}

/// The only `n₊` where `f(n₊, L(n₊))` can be stationary:
/// `(2dn − 3s)n / (2(dn − 2s))`.
pub fn q_critical_point(n: f64, d: f64, s: f64) -> Result<f64, QError> {
    let den = 2.0 * (d * n - 2.0 * s);
    if den == 0.0 {
        return Err(QError::Degenerate);
    }
    Ok((2.0 * d * n - 3.0 * s) * n / den)
}

/// Central-difference slope of `n₊ ↦ f(n₊, L(n₊))` with one Richardson
/// step.
pub fn slope_on_l(params: &QParams, n_plus: f64) -> f64 {
    let h = 1e-4 * params.n;
    let diff = |h: f64| (params.f_on_l(n_plus + h) - params.f_on_l(n_plus - h)) / (2.0 * h);
    (4.0 * diff(h / 2.0) - diff(h)) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::theorem3_bound;

    fn params(n: f64, d: f64, s: f64) -> QParams {
        QParams::new(n, d, s).unwrap()
    }

    #[test]
    fn elimination_examples() {
        let q = params(4.0, 1.5, 3.0);
        let p = q.f(1.0, 0.0).unwrap();
        assert!((p.f_value - 3f64.sqrt()).abs() < 1e-14);
        assert!((p.x_minus - 0.0).abs() < 1e-15);
        assert!((p.w_cross - 1.0).abs() < 1e-15);
        assert!(q.f(0.0, 0.0).is_err());
        assert!(q.f(4.0, 0.0).is_err());

        // s = dn, n+ = n/2 on x = 2d
        let q = params(10.0, 3.0, 30.0);
        assert!((q.l(5.0) - 6.0).abs() < 1e-15);
        assert!((q.f(5.0, 6.0).unwrap().f_value - 6.0).abs() < 1e-13);

        // blow-up towards n+ = n along L
        let q = params(10.0, 4.0, 12.0);
        assert!(q.f_on_l(10.0 - 1e-9) > 1e3);
    }

    #[test]
    fn closed_forms_on_l_agree() {
        for (n, d, s) in [(10.0, 4.0, 12.0), (7.0, 2.0, 3.5), (20.0, 11.0, 60.0), (9.0, 1.0, 12.0)] {
            let q = params(n, d, s);
            for i in 1..50 {
                let np = n * i as f64 / 50.0;
                let Ok(p) = q.f(np, q.l(np)) else { continue };
                assert!((p.x_minus).abs() < 1e-9);
                let a = q.f_on_l(np);
                let b = q.f_on_l_excess_form(np);
                assert!((p.f_value - a).abs() < 1e-9 * a.abs().max(1.0), "{n} {d} {s} {np}");
                assert!((a - b).abs() < 1e-9 * a.abs().max(1.0), "{n} {d} {s} {np}");
            }
        }
    }

    #[test]
    fn star_minimum() {
        let q = params(4.0, 1.5, 3.0);
        let r = minimize_q(&q, 128, QRegion::Relaxed).unwrap();
        assert!((r.value - 3f64.sqrt()).abs() < 1e-9, "{r:?}");
        assert!((r.argmin.n_plus - 1.0).abs() < 1e-4);
        assert!(r.argmin.x_plus.abs() < 1e-4);
    }

    #[test]
    fn minimum_above_dn_is_two_s_over_n() {
        let q = params(10.0, 1.0, 15.0);
        let crit = q_critical_point(10.0, 1.0, 15.0).unwrap();
        assert!((crit - 6.25).abs() < 1e-15);
        assert!((q.f_on_l(crit) - 3.0).abs() < 1e-12);
        let r = minimize_q(&q, 256, QRegion::Relaxed).unwrap();
        assert!((r.value - 3.0).abs() < 1e-7, "{r:?}");
        assert!((r.argmin.n_plus - crit).abs() < 1e-3);
    }

    #[test]
    fn small_deviation_limit() {
        let q = params(10.0, 3.0, 1e-6);
        let r = minimize_q(&q, 64, QRegion::Relaxed).unwrap();
        assert!((r.value - 3.0).abs() < 1e-6);
        assert!(r.value >= theorem3_bound(10.0, 3.0, 1e-6).value - 1e-7);
    }

    #[test]
    fn critical_point_examples() {
        assert!((q_critical_point(10.0, 6.0, 20.0).unwrap() - 15.0).abs() < 1e-12);
        assert_eq!(q_critical_point(10.0, 3.0, 15.0), Err(QError::Degenerate));
        let (n, d) = (12.0, 5.0);
        let s = d * n / 2f64.sqrt();
        let q = params(n, d, s);
        assert!((q_critical_point(n, d, s).unwrap() - q.l_root()).abs() < 1e-10);
    }

    #[test]
    fn slope_vanishes_at_interior_critical_point() {
        for (n, d, s) in [(10.0, 2.0, 16.0), (10.0, 1.0, 15.0), (30.0, 7.0, 170.0), (8.0, 1.0, 10.0)] {
            let q = params(n, d, s);
            let c = q_critical_point(n, d, s).unwrap();
            assert!(c > 0.0 && c < n && q.l(c) <= c);
            assert!(slope_on_l(&q, c).abs() < 1e-8, "{n} {d} {s}: {}", slope_on_l(&q, c));
            assert!((q.f_on_l(c) - 2.0 * s / n).abs() < 1e-10 * s);
        }
    }

    #[test]
    fn weight_capped_region_is_smaller() {
        let q = params(10.0, 6.0, 20.0);
        let relaxed = minimize_q(&q, 128, QRegion::Relaxed).unwrap();
        let capped = minimize_q(&q, 128, QRegion::WeightCapped).unwrap();
        assert!(capped.value >= relaxed.value - 1e-9);
        assert!(capped.argmin.x_plus >= q.l2(capped.argmin.n_plus) - 1e-9);
        assert!(capped.argmin.w_cross <= 1.0 + 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        let q = params(10.0, 3.0, 0.0);
        assert!(minimize_q(&q, 128, QRegion::Relaxed).is_err());
        let q = params(10.0, 3.0, 5.0);
        assert!(minimize_q(&q, 32, QRegion::Relaxed).is_err());
        assert!(QParams::new(0.0, 1.0, 1.0).is_err());
    }
}
