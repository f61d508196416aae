//! Simple undirected graphs and their degree statistics.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::eigen::SymmetricMatrix;
use crate::rational::{rat, Rational};

/// Largest supported order; matches the single-byte graph6 header.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// A simple undirected graph on vertices `0..n`, stored as one bitset row
/// per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn set_edge_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn clear(&mut self) {
        self.rows.iter_mut().for_each(|r| *r = 0);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bitmask.
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            (0..v)
                .filter(move |&u| self.has_edge(u, v))
                .map(move |u| (u, v))
        })
    }

    /// Number of edges with both ends in the vertex set `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        (0..self.n)
            .filter(|&u| mask >> u & 1 == 1)
            .map(|u| (self.rows[u] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let full = (1u64 << self.n) - 1;
        Graph {
            n: self.n,
            rows: (0..self.n)
                .map(|u| !self.rows[u] & full & !(1 << u))
                .collect(),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            stack.push(start);
            while let Some(u) = stack.pop() {
                let mut nb = self.rows[u];
                while nb != 0 {
                    let v = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        stack.push(v);
                    } else if colour[v] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(self.n, |u, v| if self.has_edge(u, v) { 1.0 } else { 0.0 })
    }

    /// Parses the edge-list text format: one `u v` pair per line, 0-indexed.
    /// Blank lines and lines starting with `#` are ignored. When `n` is not
    /// given it is one more than the largest vertex mentioned.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(GraphError::EdgeList {
                    line: idx + 1,
                    reason: format!("expected two vertices, found {}", parts.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| GraphError::EdgeList {
                    line: idx + 1,
                    reason: format!("bad vertex {s:?}: {e}"),
                })
            };
            edges.push((parse(parts[0])?, parse(parts[1])?));
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1));
        Graph::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        self.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", crate::graph6::emit_graph6(self))
    }
}

/// Degree data of a graph. All derived scalars are exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeStats {
    pub n: usize,
    pub degrees: Vec<usize>,
    pub m: usize,
    /// Average degree `2m/n`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d: Rational,
    pub delta_min: usize,
    pub delta_max: usize,
    /// Degree deviation `Σ |deg(u) − d|`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub s: Rational,
    /// `min{d, n − 1 − d}`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub psi: Rational,
}

impl DegreeStats {
    pub fn is_regular(&self) -> bool {
        self.delta_min == self.delta_max
    }
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let n = g.n();
    let degrees = g.degrees();
    let sum: usize = degrees.iter().sum();
    let d = Rational::new(sum as i128, n as i128);
    let s = degrees
        .iter()
        .map(|&k| (rat(k as i128) - d).abs())
        .fold(rat(0), |acc, x| acc + x);
    let other = rat(n as i128 - 1) - d;
    DegreeStats {
        n,
        m: sum / 2,
        delta_min: degrees.iter().copied().min().unwrap_or(0),
        delta_max: degrees.iter().copied().max().unwrap_or(0),
        psi: if d < other { d } else { other },
        d,
        s,
        degrees,
    }
}
