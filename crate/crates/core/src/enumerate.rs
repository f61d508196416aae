//! Labeled enumeration: every simple graph on `n` vertices corresponds to
//! one edge mask in `0..2^(n(n−1)/2)`, bit `k` standing for the `k`-th pair
//! in graph6 order.

use std::ops::Range;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::pair_at;

pub const MAX_LABELED_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("labeled enumeration supports 1..={MAX_LABELED_ORDER} vertices, got {0}")]
    OrderOutOfRange(usize),
    #[error("mask range {start}..{end} exceeds 2^{bits}")]
    MaskOutOfRange { start: u64, end: u64, bits: usize },
}

fn check_order(n: usize) -> Result<usize, EnumerateError> {
    if n == 0 || n > MAX_LABELED_ORDER {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    Ok(n * (n - 1) / 2)
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> Result<u64, EnumerateError> {
    Ok(1u64 << check_order(n)?)
}

/// The graph encoded by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph, EnumerateError> {
    let bits = check_order(n)?;
    if mask >> bits != 0 {
        return Err(EnumerateError::MaskOutOfRange { start: mask, end: mask + 1, bits });
    }
    let mut g = Graph::empty(n).expect("order checked");
    fill_from_mask(&mut g, bits, mask);
    Ok(g)
}

fn fill_from_mask(g: &mut Graph, bits: usize, mask: u64) {
    g.clear();
    for k in 0..bits {
        if mask >> k & 1 == 1 {
            let (u, v) = pair_at(k);
            g.set_edge_unchecked(u, v);
        }
    }
}

/// Visits every labeled graph on `n` vertices once; returns the count.
pub fn enumerate_labeled<F>(n: usize, visit: F) -> Result<u64, EnumerateError>
where
    F: FnMut(u64, &Graph),
{
    let total = labeled_count(n)?;
    enumerate_labeled_range(n, 0..total, visit)
}

/// Visits the graphs whose masks lie in `masks`. Disjoint ranges can be
/// handed to different threads.
pub fn enumerate_labeled_range<F>(n: usize, masks: Range<u64>, mut visit: F) -> Result<u64, EnumerateError>
where
    F: FnMut(u64, &Graph),
{
    let bits = check_order(n)?;
    if masks.end > 1u64 << bits {
        return Err(EnumerateError::MaskOutOfRange { start: masks.start, end: masks.end, bits });
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut count = 0;
    for mask in masks {
        fill_from_mask(&mut g, bits, mask);
        visit(mask, &g);
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::{emit_graph6, parse_graph6};
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled(1, |_, _| {}).unwrap(), 1);
        assert_eq!(enumerate_labeled(3, |_, _| {}).unwrap(), 8);
        assert_eq!(enumerate_labeled(4, |_, _| {}).unwrap(), 64);
        assert_eq!(enumerate_labeled(0, |_, _| {}), Err(EnumerateError::OrderOutOfRange(0)));
        assert_eq!(enumerate_labeled(9, |_, _| {}), Err(EnumerateError::OrderOutOfRange(9)));
    }

    #[test]
    fn visits_each_graph_once_and_round_trips() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            enumerate_labeled(n, |mask, g| {
                let text = emit_graph6(g);
                assert_eq!(parse_graph6(text.as_bytes()).unwrap(), *g);
                assert_eq!(graph_from_mask(n, mask).unwrap(), *g);
                let degree_sum: usize = g.degrees().iter().sum();
                assert_eq!(degree_sum, 2 * g.edge_count());
                assert!(seen.insert(text));
            })
            .unwrap();
            assert_eq!(seen.len() as u64, labeled_count(n).unwrap());
        }
    }

    #[test]
    fn ranges_partition_the_corpus() {
        let mut a = 0;
        let mut b = 0;
        enumerate_labeled_range(5, 0..300, |_, _| a += 1).unwrap();
        enumerate_labeled_range(5, 300..1024, |_, _| b += 1).unwrap();
        assert_eq!(a + b, 1024);
        assert!(enumerate_labeled_range(5, 0..1025, |_, _| {}).is_err());
    }
}
