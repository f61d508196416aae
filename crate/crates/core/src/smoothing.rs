//! Smoothing of a graph into a three-weight complete graph `(K, w)`.
//!
//! Vertices split into `V₊ = {u : deg(u) > d}` and `V₋` (the rest, ties
//! included). Every pair inside `V₊` gets weight `w₊ = m₊ / C(n₊,2)`, every
//! pair inside `V₋` gets `w₋ = m₋ / C(n₋,2)` and every crossing pair gets
//! `w± = m± / (n₊ n₋)`. A weight whose denominator vanishes is taken as 0;
//! its edge count is then 0 as well, so every identity below still holds.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::eigen::{largest_eigenvalue, SymmetricMatrix};
use crate::graph::{degree_stats, Graph};
use crate::rational::{choose2, rat, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmoothingError {
    #[error("closed form needs both parts nonempty (n+ = {n_plus}, n- = {n_minus})")]
    DegeneratePartition { n_plus: usize, n_minus: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SmoothedGraph {
    pub n: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub m_plus: usize,
    pub m_minus: usize,
    pub m_cross: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_plus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_minus: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub w_cross: Rational,
    /// Average degree of the original graph.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d: Rational,
    /// Bitmask of `V₊`.
    pub plus_vertices: u64,
}

fn ratio_or_zero(num: usize, den: Rational) -> Rational {
    if den.is_zero() {
        Rational::zero()
    } else {
        rat(num as i128) / den
    }
}

pub fn smooth(g: &Graph) -> SmoothedGraph {
    let n = g.n();
    let m = g.edge_count();
    let d = Rational::new(2 * m as i128, n as i128);
    let plus_vertices = (0..n)
        .filter(|&u| rat(g.degree(u) as i128) > d)
        .fold(0u64, |mask, u| mask | 1 << u);
    let all = (1u64 << n) - 1;
    let n_plus = plus_vertices.count_ones() as usize;
    let n_minus = n - n_plus;
    let m_plus = g.edges_within(plus_vertices);
    let m_minus = g.edges_within(all & !plus_vertices);
    let m_cross = m - m_plus - m_minus;
    SmoothedGraph {
        n,
        n_plus,
        n_minus,
        m_plus,
        m_minus,
        m_cross,
        w_plus: ratio_or_zero(m_plus, choose2(&rat(n_plus as i128))),
        w_minus: ratio_or_zero(m_minus, choose2(&rat(n_minus as i128))),
        w_cross: ratio_or_zero(m_cross, rat((n_plus * n_minus) as i128)),
        d,
        plus_vertices,
    }
}

impl SmoothedGraph {
    fn np(&self) -> Rational {
        rat(self.n_plus as i128)
    }

    fn nm(&self) -> Rational {
        rat(self.n_minus as i128)
    }

    /// Common smoothed degree on `V₊`: `(n₊−1)w₊ + n₋w±`.
    pub fn d_plus(&self) -> Rational {
        (self.np() - rat(1)) * self.w_plus + self.nm() * self.w_cross
    }

    /// Common smoothed degree on `V₋`: `(n₋−1)w₋ + n₊w±`.
    pub fn d_minus(&self) -> Rational {
        (self.nm() - rat(1)) * self.w_minus + self.np() * self.w_cross
    }

    pub fn is_plus(&self, u: usize) -> bool {
        self.plus_vertices >> u & 1 == 1
    }

    pub fn smoothed_degree(&self, u: usize) -> Rational {
        if self.is_plus(u) {
            self.d_plus()
        } else {
            self.d_minus()
        }
    }

    /// Sum of all pair weights of `(K, w)`.
    pub fn total_weight(&self) -> Rational {
        choose2(&self.np()) * self.w_plus
            + choose2(&self.nm()) * self.w_minus
            + self.np() * self.nm() * self.w_cross
    }

    /// `Σᵤ |d_(K,w)(u) − 2m(K,w)/n|`, straight from the definition.
    pub fn deviation(&self) -> Rational {
        let avg = rat(2) * self.total_weight() / rat(self.n as i128);
        (0..self.n)
            .map(|u| (self.smoothed_degree(u) - avg).abs())
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// The smoothed adjacency matrix `Ã`.
    pub fn matrix(&self) -> SymmetricMatrix {
        let (wp, wm, wc) = (to_f64(&self.w_plus), to_f64(&self.w_minus), to_f64(&self.w_cross));
        SymmetricMatrix::from_fn(self.n, |u, v| match (u == v, self.is_plus(u), self.is_plus(v)) {
            (true, _, _) => 0.0,
            (false, true, true) => wp,
            (false, false, false) => wm,
            _ => wc,
        })
    }
}

/// `n₊(w₊(n₊−1) − d) + n₋(d − w₋(n₋−1))`.
pub fn smoothed_deviation(sg: &SmoothedGraph, d: &Rational) -> Rational {
    let (np, nm) = (sg.np(), sg.nm());
    np * (sg.w_plus * (np - rat(1)) - d) + nm * (d - sg.w_minus * (nm - rat(1)))
}

/// `2(m₊ − m₋) − d(n₊ − n₋)`.
pub fn smoothed_deviation_edge_form(sg: &SmoothedGraph, d: &Rational) -> Rational {
    rat(2) * (rat(sg.m_plus as i128) - rat(sg.m_minus as i128)) - d * (sg.np() - sg.nm())
}

/// Largest eigenvalue of `Ã` from the two-by-two quotient matrix.
pub fn lambda_tilde_closed_form(sg: &SmoothedGraph) -> Result<f64, SmoothingError> {
    if sg.n_plus == 0 || sg.n_minus == 0 {
        return Err(SmoothingError::DegeneratePartition {
            n_plus: sg.n_plus,
            n_minus: sg.n_minus,
        });
    }
    let np = sg.n_plus as f64;
    let nm = sg.n_minus as f64;
    let a = (np - 1.0) * to_f64(&sg.w_plus);
    let b = (nm - 1.0) * to_f64(&sg.w_minus);
    let c = to_f64(&sg.w_cross);
    Ok(0.5 * (a + b + ((a - b).powi(2) + 4.0 * np * nm * c * c).sqrt()))
}

/// `λ̃(G)`. Regular graphs (empty `V₊`) give `d`, the top eigenvalue of the
/// uniformly weighted complete graph.
pub fn lambda_tilde(g: &Graph) -> f64 {
    let sg = smooth(g);
    match lambda_tilde_closed_form(&sg) {
        Ok(v) => v,
        Err(_) => to_f64(&sg.d),
    }
}

/// Spectral radius of the adjacency matrix.
pub fn lambda_max(g: &Graph) -> f64 {
    largest_eigenvalue(&g.adjacency_matrix()).0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralResult {
    pub lambda: f64,
    pub lambda_tilde: f64,
    /// `λ̃` recomputed by the eigensolver on the assembled `Ã`.
    pub lambda_tilde_eigen: f64,
    /// Residual of the top eigenpair of `A`.
    pub residual: f64,
}

pub fn spectral(g: &Graph) -> SpectralResult {
    let sg = smooth(g);
    let (lambda, residual) = largest_eigenvalue(&g.adjacency_matrix());
    let (lambda_tilde_eigen, _) = largest_eigenvalue(&sg.matrix());
    let lambda_tilde = lambda_tilde_closed_form(&sg).unwrap_or_else(|_| to_f64(&sg.d));
    SpectralResult {
        lambda,
        lambda_tilde,
        lambda_tilde_eigen,
        residual,
    }
}

/// Sanity check on the degree invariants of a smoothing; used by tests and
/// the verification harness.
pub fn smoothed_degrees_within_bounds(g: &Graph, sg: &SmoothedGraph) -> bool {
    let st = degree_stats(g);
    let (lo, hi) = (rat(st.delta_min as i128), rat(st.delta_max as i128));
    let plus_ok = sg.n_plus == 0 || (sg.d_plus() > st.d && sg.d_plus() <= hi);
    let minus_ok = sg.n_minus == 0 || (sg.d_minus() >= lo && sg.d_minus() <= st.d);
    plus_ok && minus_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, Family};
    use crate::rational::frac;

    fn p3() -> Graph {
        make_family(Family::Path, &[3]).unwrap()
    }

    #[test]
    fn path_smoothing() {
        let sg = smooth(&p3());
        assert_eq!((sg.n_plus, sg.n_minus), (1, 2));
        assert_eq!((sg.w_plus, sg.w_minus, sg.w_cross), (rat(0), rat(0), rat(1)));
        assert_eq!(smoothed_deviation(&sg, &frac(4, 3)), frac(4, 3));
        assert_eq!(smoothed_deviation_edge_form(&sg, &frac(4, 3)), frac(4, 3));
        let lt = lambda_tilde_closed_form(&sg).unwrap();
        assert!((lt - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn clique_plus_isolated_pair() {
        let g = make_family(Family::UnionClique, &[4, 2]).unwrap();
        let sg = smooth(&g);
        assert_eq!((sg.n_plus, sg.n_minus), (2, 2));
        assert_eq!((sg.w_plus, sg.w_minus, sg.w_cross), (rat(1), rat(0), rat(0)));
        assert_eq!(smoothed_deviation(&sg, &frac(1, 2)), rat(2));
        assert_eq!(smoothed_deviation_edge_form(&sg, &frac(1, 2)), rat(2));
        assert_eq!(degree_stats(&g).s, rat(2));
        assert!((lambda_tilde_closed_form(&sg).unwrap() - 1.0).abs() < 1e-15);
        assert!((lambda_max(&g) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regular_graph_has_empty_plus_part() {
        let c5 = make_family(Family::Cycle, &[5]).unwrap();
        let sg = smooth(&c5);
        assert_eq!((sg.n_plus, sg.n_minus), (0, 5));
        assert_eq!(sg.w_minus, frac(1, 2));
        assert_eq!(smoothed_deviation(&sg, &rat(2)), rat(0));
        assert!(matches!(
            lambda_tilde_closed_form(&sg),
            Err(SmoothingError::DegeneratePartition { n_plus: 0, n_minus: 5 })
        ));
        assert_eq!(lambda_tilde(&c5), 2.0);
        let eig = largest_eigenvalue(&sg.matrix()).0;
        assert!((eig - 2.0).abs() < 1e-12);
    }

    #[test]
    fn star_and_clique_lambda_tilde() {
        let star = make_family(Family::Star, &[4]).unwrap();
        assert!((lambda_tilde(&star) - 3f64.sqrt()).abs() < 1e-15);
        assert!((lambda_max(&star) - 3f64.sqrt()).abs() < 1e-12);

        let g = make_family(Family::UnionClique, &[4, 3]).unwrap();
        assert!((lambda_tilde(&g) - 2.0).abs() < 1e-15);
        assert!((lambda_max(&g) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn lambda_max_examples() {
        let k4 = make_family(Family::Complete, &[4]).unwrap();
        assert!((lambda_max(&k4) - 3.0).abs() < 1e-12);
        let star8 = make_family(Family::Star, &[8]).unwrap();
        assert!((lambda_max(&star8) - 7f64.sqrt()).abs() < 1e-12);
        assert!((lambda_max(&p3()) - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(lambda_max(&Graph::empty(1).unwrap()), 0.0);
    }

    #[test]
    fn smoothing_identities_on_families() {
        for (f, p) in [
            (Family::JoinClique, vec![7, 2]),
            (Family::SemiregularBipartite, vec![2, 5]),
            (Family::Path, vec![6]),
            (Family::UnionClique, vec![9, 4]),
        ] {
            let g = make_family(f, &p).unwrap();
            let st = degree_stats(&g);
            let sg = smooth(&g);
            assert_eq!(sg.total_weight(), rat(st.m as i128));
            assert_eq!(sg.deviation(), st.s);
            assert_eq!(smoothed_deviation(&sg, &st.d), st.s);
            assert!(smoothed_degrees_within_bounds(&g, &sg));
            let res = spectral(&g);
            assert!(res.lambda >= res.lambda_tilde - 1e-9);
            assert!((res.lambda_tilde - res.lambda_tilde_eigen).abs() < 1e-9);
            assert!(res.residual < 1e-10);
        }
    }
}
