//! Dense symmetric eigensolver (cyclic Jacobi rotations).

/// Dense symmetric matrix, row-major storage of the full square.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds the matrix from the upper triangle of `entry`; `entry(i, j)` is
    /// only queried for `i <= j`.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, entry(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                sum += 2.0 * self.get(i, j).powi(2);
            }
        }
        sum.sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// Relative off-diagonal threshold at which the sweep loop stops.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct Eigen {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Unit eigenvectors, `vectors[k]` belonging to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
    pub converged: bool,
}

impl Eigen {
    pub fn largest(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations (row-by-row sweep
/// order, so results are bit-reproducible).
pub fn jacobi_eigen(matrix: &SymmetricMatrix) -> Eigen {
    let n = matrix.dim();
    let mut a = matrix.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = matrix.frobenius_norm();
    let mut sweeps = 0;
    let mut converged = a.off_diagonal_norm() <= JACOBI_TOLERANCE * scale;
    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a.get(r, p);
                    let arq = a.get(r, q);
                    a.set(r, p, c * arp - s * arq);
                    a.set(r, q, s * arp + c * arq);
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= JACOBI_TOLERANCE * scale;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)));
    Eigen {
        values: order.iter().map(|&k| a.get(k, k)).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|r| v[r * n + k]).collect())
            .collect(),
        sweeps,
        converged,
    }
}

/// `‖A x − λ x‖₂`.
pub fn eigen_residual(matrix: &SymmetricMatrix, value: f64, vector: &[f64]) -> f64 {
    matrix
        .mul_vec(vector)
        .iter()
        .zip(vector)
        .map(|(ax, x)| (ax - value * x).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Largest eigenvalue together with the residual of its eigenvector.
pub fn largest_eigenvalue(matrix: &SymmetricMatrix) -> (f64, f64) {
    if matrix.dim() == 0 {
        return (0.0, 0.0);
    }
    let eig = jacobi_eigen(matrix);
    let value = eig.largest();
    (value, eigen_residual(matrix, value, &eig.vectors[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_two_by_two() {
        let m = SymmetricMatrix::from_fn(3, |i, j| if i == j { [3.0, -1.0, 7.0][i] } else { 0.0 });
        let e = jacobi_eigen(&m);
        assert_eq!(e.values, vec![7.0, 3.0, -1.0]);
        assert_eq!(e.sweeps, 0);

        let m = SymmetricMatrix::from_fn(2, |i, j| if i == j { 2.0 } else { 1.0 });
        let e = jacobi_eigen(&m);
        assert!((e.values[0] - 3.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn reconstructs_matrix() {
        let m = SymmetricMatrix::from_fn(5, |i, j| ((i * 7 + j * 3) % 5) as f64 - 1.5 + if i == j { 2.0 } else { 0.0 });
        let e = jacobi_eigen(&m);
        assert!(e.converged);
        for i in 0..5 {
            for j in 0..5 {
                let r: f64 = (0..5).map(|k| e.values[k] * e.vectors[k][i] * e.vectors[k][j]).sum();
                assert!((r - m.get(i, j)).abs() < 1e-10, "({i},{j}) {r} vs {}", m.get(i, j));
            }
        }
        for k in 0..5 {
            assert!(eigen_residual(&m, e.values[k], &e.vectors[k]) < 1e-10);
        }
        let trace: f64 = (0..5).map(|i| m.get(i, i)).sum();
        assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-12);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(largest_eigenvalue(&SymmetricMatrix::zeros(0)), (0.0, 0.0));
        assert_eq!(largest_eigenvalue(&SymmetricMatrix::zeros(1)), (0.0, 0.0));
    }
}
