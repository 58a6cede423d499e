//! Small numeric helpers used across modules.

use nalgebra::{DMatrix, DVector};

/// Neumaier compensated sum over a slice, in index order.
///
/// Every aggregate in the crate folds in a fixed order so that reports are
/// reproducible independently of worker count.
pub fn compensated_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Bessel function J0 by its power series. Accurate to ~1e-14 for |x| ≤ 12,
/// which covers every radius the eigenvalue checks use.
pub fn bessel_j0(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..80 {
        term *= q / ((j * j) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

/// First derivative of J0 (equals -J1).
pub fn bessel_j0_prime(x: f64) -> f64 {
    // J1 series: (x/2) Σ (-x²/4)^j / (j! (j+1)!)
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..80 {
        term *= q / ((j * (j + 1)) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    -0.5 * x * sum
}

/// First positive zero of J0, refined by bisection on the series.
pub fn bessel_j0_first_zero() -> f64 {
    let (mut a, mut b) = (2.0_f64, 3.0_f64);
    assert!(bessel_j0(a) > 0.0 && bessel_j0(b) < 0.0);
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if bessel_j0(m) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// g-inner product u·(G v).
pub fn inner(g: &DMatrix<f64>, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    (g * v).dot(u)
}

/// Gram-Schmidt with respect to the metric `g`. Candidates are consumed in
/// order; vectors whose residual norm falls below `eps` are skipped. Returns
/// the orthonormal set.
pub fn gram_schmidt(g: &DMatrix<f64>, candidates: &[DVector<f64>], eps: f64) -> Vec<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for c in candidates {
        let mut v = c.clone();
        for b in &basis {
            let proj = inner(g, &v, b);
            v -= b * proj;
        }
        // second pass for numerical orthogonality
        for b in &basis {
            let proj = inner(g, &v, b);
            v -= b * proj;
        }
        let n2 = inner(g, &v, &v);
        if n2 > eps * eps {
            basis.push(v / n2.sqrt());
        }
    }
    basis
}

/// Completes `fixed` (assumed g-orthonormal already) to a full g-orthonormal
/// basis of ℝⁿ using coordinate directions as candidates.
pub fn complete_basis(g: &DMatrix<f64>, fixed: &[DVector<f64>]) -> Vec<DVector<f64>> {
    let n = g.nrows();
    let mut all: Vec<DVector<f64>> = fixed.to_vec();
    for i in 0..n {
        let mut e = DVector::zeros(n);
        e[i] = 1.0;
        all.push(e);
    }
    let full = gram_schmidt(g, &all, 1e-10);
    debug_assert_eq!(full.len(), n);
    full
}

/// Maps a Euclidean-unit direction to hyperspherical angles
/// (θ₁..θ_{m}) with θ_i ∈ (0, π) for i < m and θ_m ∈ (-π, π].
pub fn unit_vector_to_angles(u: &DVector<f64>) -> Vec<f64> {
    let n = u.len();
    assert!(n >= 2);
    let mut angles = Vec::with_capacity(n - 1);
    let mut tail: f64 = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    for i in 0..n - 2 {
        let c = (u[i] / tail).clamp(-1.0, 1.0);
        angles.push(c.acos());
        tail = (tail * tail - u[i] * u[i]).max(0.0).sqrt();
        if tail < 1e-300 {
            tail = 1e-300;
        }
    }
    angles.push(u[n - 1].atan2(u[n - 2]));
    angles
}

/// Inverse of [`unit_vector_to_angles`].
pub fn angles_to_unit_vector(angles: &[f64]) -> DVector<f64> {
    let n = angles.len() + 1;
    let mut u = DVector::zeros(n);
    let mut sin_prod = 1.0;
    for (i, &a) in angles.iter().enumerate().take(n - 2) {
        u[i] = sin_prod * a.cos();
        sin_prod *= a.sin();
    }
    let last = angles[n - 2];
    u[n - 2] = sin_prod * last.cos();
    u[n - 1] = sin_prod * last.sin();
    u
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_symmetric_eigenvalue(m: &DMatrix<f64>) -> f64 {
    let sym = (m + m.transpose()) * 0.5;
    sym.symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_zero_matches_reference() {
        // j_{0,1} = 2.404825557695773
        assert!((bessel_j0_first_zero() - 2.404825557695773).abs() < 1e-12);
    }

    #[test]
    fn angle_round_trip() {
        let u = DVector::from_vec(vec![0.3, -0.5, 0.2, 0.788]).normalize();
        let a = unit_vector_to_angles(&u);
        let v = angles_to_unit_vector(&a);
        assert!((u - v).norm() < 1e-12);
    }

    #[test]
    fn gram_schmidt_orthonormal_under_metric() {
        let g = DMatrix::from_row_slice(3, 3, &[2.0, 0.3, 0.0, 0.3, 1.5, 0.1, 0.0, 0.1, 0.8]);
        let cands: Vec<DVector<f64>> = (0..3)
            .map(|i| {
                let mut e = DVector::zeros(3);
                e[i] = 1.0;
                e
            })
            .collect();
        let basis = gram_schmidt(&g, &cands, 1e-12);
        assert_eq!(basis.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((inner(&g, &basis[i], &basis[j]) - want).abs() < 1e-12);
            }
        }
    }
}
