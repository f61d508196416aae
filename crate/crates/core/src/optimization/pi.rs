//! Exact maximization of the deviation of a smoothed graph with prescribed
//! `(n, m, δ, Δ)`.
//!
//! For a fixed split `n = n₊ + n₋` the problem is a linear program in
//! `(w₊, w₋, w±)`:
//!
//! ```text
//! maximize   n₊(w₊(n₊−1) − d) + n₋(d − w₋(n₋−1))
//! subject to C(n₊,2)w₊ + n₊n₋w± + C(n₋,2)w₋ = m
//!            d ≤ (n₊−1)w₊ + n₋w± ≤ Δ
//!            δ ≤ (n₋−1)w₋ + n₊w± ≤ d
//!            0 ≤ w₊, w₋, w± ≤ 1
//! ```
//!
//! The feasible set is a polytope inside the equality plane, so every
//! vertex is the solution of the equality together with two tight
//! inequalities. All such bases are solved by Cramer's rule in exact
//! arithmetic and the best feasible one is kept.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::rational::{choose2, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiError {
    #[error("need 0 <= delta < d < Delta < n, got n={n}, m={m}, delta={delta_lo}, Delta={delta_hi} (d = {d})")]
    InvalidInstance {
        n: usize,
        m: usize,
        delta_lo: usize,
        delta_hi: usize,
        d: Rational,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiInstance {
    pub n: usize,
    pub m: usize,
    pub delta_lo: usize,
    pub delta_hi: usize,
}

impl PiInstance {
    pub fn new(n: usize, m: usize, delta_lo: usize, delta_hi: usize) -> Result<Self, PiError> {
        let inst = PiInstance { n, m, delta_lo, delta_hi };
        let (lo, hi) = (rat(delta_lo as i128), rat(delta_hi as i128));
        let valid = n > 0 && lo < inst.d() && inst.d() < hi && delta_hi < n;
        if !valid {
            return Err(PiError::InvalidInstance {
                n,
                m,
                delta_lo,
                delta_hi,
                d: if n > 0 { inst.d() } else { Rational::zero() },
            });
        }
        Ok(inst)
    }

    pub fn d(&self) -> Rational {
        Rational::new(2 * self.m as i128, self.n as i128)
    }

    /// `2n(Δ−d)(d−δ)/(Δ−δ)`.
    pub fn theorem1_value(&self) -> Rational {
        let (n, d) = (rat(self.n as i128), self.d());
        let (lo, hi) = (rat(self.delta_lo as i128), rat(self.delta_hi as i128));
        rat(2) * n * (hi - d) * (d - lo) / (hi - lo)
    }
}

/// An optimal vertex of one subproblem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiPoint {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub objective: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_plus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_minus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_cross: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d_plus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d_minus: Rational,
}

/// Optimum of the subproblem for one `n₊`; `point` is `None` when the
/// subproblem is infeasible (objective `−∞`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiSolution {
    pub n_plus: usize,
    pub n_minus: usize,
    pub point: Option<PiPoint>,
}

impl PiSolution {
    pub fn objective(&self) -> Option<Rational> {
        self.point.as_ref().map(|p| p.objective)
    }
}

type Row = ([Rational; 3], Rational);

fn det3(a: &[[Rational; 3]; 3]) -> Rational {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn solve3(rows: [&Row; 3]) -> Option<[Rational; 3]> {
    let a = [rows[0].0, rows[1].0, rows[2].0];
    let det = det3(&a);
    if det.is_zero() {
        return None;
    }
    let mut x = [Rational::zero(); 3];
    for (k, xk) in x.iter_mut().enumerate() {
        let mut ak = a;
        for i in 0..3 {
            ak[i][k] = rows[i].1;
        }
        *xk = det3(&ak) / det;
    }
    Some(x)
}

fn dot(a: &[Rational; 3], x: &[Rational; 3]) -> Rational {
    a[0] * x[0] + a[1] * x[1] + a[2] * x[2]
}

/// Exact optimum of the LP for a fixed `n₊ ∈ 0..=n`.
///
/// `n₊ = 0` is the regular case and is recorded with objective 0.
/// `n₊ = n` leaves `V₋` empty, which never happens for a graph (a vertex of
/// minimum degree has degree at most `d`), so it is reported infeasible.
pub fn solve_pi_subproblem(inst: &PiInstance, n_plus: usize) -> PiSolution {
    assert!(n_plus <= inst.n, "n+ = {n_plus} exceeds n = {}", inst.n);
    let n_minus = inst.n - n_plus;
    let d = inst.d();
    if n_plus == 0 {
        let w_minus = rat(inst.m as i128) / choose2(&rat(inst.n as i128));
        return PiSolution {
            n_plus,
            n_minus,
            point: Some(PiPoint {
                objective: Rational::zero(),
                w_plus: Rational::zero(),
                w_minus,
                w_cross: Rational::zero(),
                d_plus: d,
                d_minus: d,
            }),
        };
    }
    if n_minus == 0 {
        return PiSolution { n_plus, n_minus, point: None };
    }

    let (np, nm) = (rat(n_plus as i128), rat(n_minus as i128));
    let (lo, hi) = (rat(inst.delta_lo as i128), rat(inst.delta_hi as i128));
    let one = rat(1);
    let zero = Rational::zero();
    // Variables ordered (w₊, w₋, w±).
    let equality: Row = ([choose2(&np), choose2(&nm), np * nm], rat(inst.m as i128));
    let d_plus_row = [np - one, zero, nm];
    let d_minus_row = [zero, nm - one, np];
    let unit = |k: usize| {
        let mut e = [zero; 3];
        e[k] = one;
        e
    };
    let faces: Vec<Row> = vec![
        (unit(0), zero),
        (unit(0), one),
        (unit(1), zero),
        (unit(1), one),
        (unit(2), zero),
        (unit(2), one),
        (d_plus_row, d),
        (d_plus_row, hi),
        (d_minus_row, lo),
        (d_minus_row, d),
    ];
    let feasible = |x: &[Rational; 3]| {
        let dp = dot(&d_plus_row, x);
        let dm = dot(&d_minus_row, x);
        x.iter().all(|w| !w.is_negative() && *w <= one)
            && dot(&equality.0, x) == equality.1
            && d <= dp
            && dp <= hi
            && lo <= dm
            && dm <= d
    };
    let objective = |x: &[Rational; 3]| np * (x[0] * (np - one) - d) + nm * (d - x[1] * (nm - one));

    let mut best: Option<(Rational, [Rational; 3])> = None;
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let Some(x) = solve3([&equality, &faces[i], &faces[j]]) else {
                continue;
            };
            if !feasible(&x) {
                continue;
            }
            let value = objective(&x);
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, x));
            }
        }
    }
    PiSolution {
        n_plus,
        n_minus,
        point: best.map(|(objective, x)| PiPoint {
            objective,
            w_plus: x[0],
            w_minus: x[1],
            w_cross: x[2],
            d_plus: dot(&d_plus_row, &x),
            d_minus: dot(&d_minus_row, &x),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiResult {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub opt: Rational,
    pub argmax: PiSolution,
    pub per_n_plus: Vec<PiSolution>,
}

/// Maximum over all splits `n₊ ∈ 0..=n`. Ties go to the smallest `n₊`.
pub fn solve_pi(inst: &PiInstance) -> PiResult {
    let per_n_plus: Vec<PiSolution> = (0..=inst.n).map(|k| solve_pi_subproblem(inst, k)).collect();
    let argmax = per_n_plus
        .iter()
        .filter(|s| s.point.is_some())
        .fold(None::<&PiSolution>, |best, s| match best {
            Some(b) if b.objective() >= s.objective() => Some(b),
            _ => Some(s),
        })
        .expect("n+ = 0 is always feasible")
        .clone();
    PiResult {
        opt: argmax.objective().expect("feasible"),
        argmax,
        per_n_plus,
    }
}

/// A feasible point of the continuous relaxation (`n₊` rational).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiCandidate {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub n_plus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub n_minus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_plus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_minus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_cross: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub objective: Rational,
}

impl PiCandidate {
    pub fn d_plus(&self) -> Rational {
        (self.n_plus - rat(1)) * self.w_plus + self.n_minus * self.w_cross
    }

    pub fn d_minus(&self) -> Rational {
        (self.n_minus - rat(1)) * self.w_minus + self.n_plus * self.w_cross
    }

    /// Left side of the edge-count equality.
    pub fn weight_total(&self) -> Rational {
        choose2(&self.n_plus) * self.w_plus + self.n_plus * self.n_minus * self.w_cross + choose2(&self.n_minus) * self.w_minus
    }
}

/// The two explicit points with `n₊ = (d−δ)n/(Δ−δ)` that attain
/// `2n(Δ−d)(d−δ)/(Δ−δ)`, one with `d₊ = Δ` saturated by `w₊`, one with
/// `d₋ = δ` saturated by `w₋`. Only candidates whose weights lie in
/// `[0, 1]` (and whose formulas are defined) are returned.
pub fn pi_tightness_candidates(inst: &PiInstance) -> Vec<PiCandidate> {
    let n = rat(inst.n as i128);
    let d = inst.d();
    let (lo, hi) = (rat(inst.delta_lo as i128), rat(inst.delta_hi as i128));
    let n_plus = (d - lo) * n / (hi - lo);
    let n_minus = (hi - d) * n / (hi - lo);
    let dn = d * n;
    let div = |a: Rational, b: Rational| (!b.is_zero()).then(|| a / b);

    let first = (|| {
        Some((
            div(hi * hi, dn - hi)?,
            div((lo * (hi - d) * n - hi * (hi - lo)) * lo, (dn - hi) * ((hi - d) * n - (hi - lo)))?,
            div(lo * hi, dn - hi)?,
        ))
    })();
    let second = (|| {
        Some((
            div((hi * (d - lo) * n - lo * (hi - lo)) * hi, (dn - lo) * ((d - lo) * n - (hi - lo)))?,
            div(lo * lo, dn - lo)?,
            div(lo * hi, dn - lo)?,
        ))
    })();

    let unit = |w: &Rational| !w.is_negative() && *w <= rat(1);
    [first, second]
        .into_iter()
        .flatten()
        .filter(|(a, b, c)| unit(a) && unit(b) && unit(c))
        .map(|(w_plus, w_minus, w_cross)| PiCandidate {
            n_plus,
            n_minus,
            w_plus,
            w_minus,
            w_cross,
            objective: n_plus * (w_plus * (n_plus - rat(1)) - d) + n_minus * (d - w_minus * (n_minus - rat(1))),
        })
        .collect()
}
