use proptest::prelude::*;

use sdlab_core::eigen::largest_eigenvalue;
use sdlab_core::optimization::QParams;
use sdlab_core::verify::check_graph;
use sdlab_core::{degree_stats, emit_graph6, parse_graph6, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density.clamp(0.01, 0.99)), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Rayleigh quotient of power iteration on `A + I` from the all-ones vector.
fn power_iteration(g: &Graph) -> f64 {
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut rayleigh = 0.0;
    for _ in 0..200_000 {
        let mut y: Vec<f64> = x.clone();
        for (u, v) in g.edges() {
            y[u] += x[v];
            y[v] += x[u];
        }
        let next: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        x = y.into_iter().map(|t| t / norm).collect();
        if (next - rayleigh).abs() < 1e-15 * next.max(1.0) {
            rayleigh = next;
            break;
        }
        rayleigh = next;
    }
    rayleigh - 1.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn jacobi_matches_power_iteration(g in graph_strategy(30)) {
        let (lambda, residual) = largest_eigenvalue(&g.adjacency_matrix());
        prop_assert!((lambda - power_iteration(&g)).abs() <= 1e-8, "{} vs {}", lambda, power_iteration(&g));
        prop_assert!(residual <= 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(62)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn complement_preserves_deviation(g in graph_strategy(20)) {
        prop_assert_eq!(degree_stats(&g.complement()).s, degree_stats(&g).s);
    }

    #[test]
    fn no_applicable_check_fails(g in graph_strategy(24)) {
        let report = check_graph(&g);
        let violations: Vec<_> = report.violations().collect();
        prop_assert!(violations.is_empty(), "{}: {:?}", report.graph_id, violations);
    }

    #[test]
    fn f_nondecreasing_in_x_plus(
        n in 3.0f64..80.0,
        d_frac in 0.01f64..0.99,
        s_frac in 0.0f64..1.0,
        np_frac in 0.01f64..0.99,
        x_frac in 0.0f64..1.0,
    ) {
        let d = d_frac * (n - 1.0);
        let q = QParams::new(n, d, s_frac * 2.0 * d * (n - 1.0 - d).max(1.0)).unwrap();
        let n_plus = np_frac * n;
        let h = 1e-6 * n;
        let x = (x_frac * n_plus).clamp(h, n_plus - h);
        if let (Ok(a), Ok(b)) = (q.f(n_plus, x - h), q.f(n_plus, x + h)) {
            prop_assert!((b.f_value - a.f_value) / (2.0 * h) >= -1e-8);
        }
    }

    #[test]
    fn f_at_zero_nonincreasing_in_n_plus(
        n in 3.0f64..80.0,
        d_frac in 0.01f64..0.99,
        s_frac in 0.0f64..1.0,
        np_frac in 0.01f64..0.99,
    ) {
        let d = d_frac * (n - 1.0);
        let q = QParams::new(n, d, s_frac * 2.0 * d * (n - 1.0 - d).max(1.0)).unwrap();
        let h = 1e-6 * n;
        let n_plus = (np_frac * n).clamp(2.0 * h, n - 2.0 * h);
        if let (Ok(a), Ok(b)) = (q.f(n_plus - h, 0.0), q.f(n_plus + h, 0.0)) {
            prop_assert!((b.f_value - a.f_value) / (2.0 * h) <= 1e-8);
        }
    }
}
