//! Generators for the named graph families, including the extremal
//! families of the deviation bounds.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_q ∪ K̄_{n−q}`, params `[n, q]`.
    UnionClique,
    /// `K_t + K̄_{n−t}`, params `[n, t]`.
    JoinClique,
    /// Complete bipartite `K_{a,b}`, params `[a, b]`.
    SemiregularBipartite,
    /// `K_n`, params `[n]`.
    Complete,
    /// `K̄_n`, params `[n]`.
    Empty,
    /// `K_{1,n−1}` on `n` vertices, params `[n]`.
    Star,
    /// `P_n`, params `[n]`.
    Path,
    /// `C_n`, params `[n]` with `n ≥ 3`.
    Cycle,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::UnionClique,
        Family::JoinClique,
        Family::SemiregularBipartite,
        Family::Complete,
        Family::Empty,
        Family::Star,
        Family::Path,
        Family::Cycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::UnionClique => "union_clique",
            Family::JoinClique => "join_clique",
            Family::SemiregularBipartite => "semiregular_bipartite",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::UnionClique | Family::JoinClique | Family::SemiregularBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    Arity { family: Family, expected: usize, got: usize },
    #[error("{family}: {reason}")]
    Incompatible { family: Family, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FromStr for Family {
    type Err = FamilyError;

    /// Accepts the names with `_` or `-` as separator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

fn clique_on(g: &mut Graph, vertices: std::ops::Range<usize>) {
    for v in vertices.clone() {
        for u in vertices.start..v {
            g.set_edge_unchecked(u, v);
        }
    }
}

pub fn make_family(family: Family, params: &[usize]) -> Result<Graph, FamilyError> {
    if params.len() != family.arity() {
        return Err(FamilyError::Arity {
            family,
            expected: family.arity(),
            got: params.len(),
        });
    }
    let incompatible = |reason: String| FamilyError::Incompatible { family, reason };
    let g = match family {
        Family::UnionClique => {
            let (n, q) = (params[0], params[1]);
            if q > n {
                return Err(incompatible(format!("clique size {q} exceeds order {n}")));
            }
            let mut g = Graph::empty(n)?;
            clique_on(&mut g, 0..q);
            g
        }
        Family::JoinClique => {
            let (n, t) = (params[0], params[1]);
            if t > n {
                return Err(incompatible(format!("clique size {t} exceeds order {n}")));
            }
            let mut g = Graph::empty(n)?;
            clique_on(&mut g, 0..t);
            for u in 0..t {
                for v in t..n {
                    g.set_edge_unchecked(u, v);
                }
            }
            g
        }
        Family::SemiregularBipartite => {
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(incompatible("both sides must be nonempty".into()));
            }
            let mut g = Graph::empty(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.set_edge_unchecked(u, v);
                }
            }
            g
        }
        Family::Complete => {
            let mut g = Graph::empty(params[0])?;
            clique_on(&mut g, 0..params[0]);
            g
        }
        Family::Empty => Graph::empty(params[0])?,
        Family::Star => {
            let n = params[0];
            Graph::from_edges(n, (1..n).map(|v| (0, v)))?
        }
        Family::Path => {
            let n = params[0];
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(incompatible(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_stats;
    use crate::rational::{rat, Rational};

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn family_examples() {
        let g = make_family(Family::UnionClique, &[4, 3]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2, 0]);

        let star = make_family(Family::Star, &[4]).unwrap();
        let join = make_family(Family::JoinClique, &[4, 1]).unwrap();
        assert_eq!(join, star);

        let k23 = make_family(Family::SemiregularBipartite, &[2, 3]).unwrap();
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);

        assert_eq!(make_family(Family::Complete, &[5]).unwrap().edge_count(), 10);
        assert_eq!(make_family(Family::Empty, &[5]).unwrap().edge_count(), 0);
        assert_eq!(sorted_degrees(&make_family(Family::Path, &[4]).unwrap()), vec![2, 2, 1, 1]);
        assert_eq!(make_family(Family::Cycle, &[5]).unwrap().degrees(), vec![2; 5]);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(
            make_family(Family::UnionClique, &[3, 4]),
            Err(FamilyError::Incompatible { .. })
        ));
        assert!(matches!(make_family(Family::Cycle, &[2]), Err(FamilyError::Incompatible { .. })));
        assert!(matches!(make_family(Family::Star, &[]), Err(FamilyError::Arity { .. })));
        assert!(matches!(
            make_family(Family::Complete, &[0]),
            Err(FamilyError::Graph(GraphError::VertexCount(0)))
        ));
        assert!(matches!("wheel".parse::<Family>(), Err(FamilyError::Unknown(_))));
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn union_clique_deviation_formula() {
        for n in 1..=12usize {
            for q in 0..=n {
                let g = make_family(Family::UnionClique, &[n, q]).unwrap();
                let st = degree_stats(&g);
                let (n_r, q_r) = (rat(n as i128), rat(q as i128));
                let d = q_r * (q_r - rat(1)) / n_r;
                let expected: Rational = q_r * (q_r - rat(1)) - q_r * d + (n_r - q_r) * d;
                assert_eq!(st.d, d);
                assert_eq!(st.s, expected, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn join_clique_edge_count() {
        for n in 1..=10usize {
            for t in 0..=n {
                let g = make_family(Family::JoinClique, &[n, t]).unwrap();
                assert_eq!(g.edge_count(), t * t.saturating_sub(1) / 2 + t * (n - t));
            }
        }
    }
}
