//! Cyclic Jacobi eigendecomposition for dense symmetric matrices.
//!
//! Plane rotations annihilate one off-diagonal entry at a time; sweeps
//! repeat until every off-diagonal magnitude drops below
//! `1e-12 · ‖A‖_F`. Slow past a few hundred rows, bulletproof below.

/// Returns `(eigenvalues, eigenvectors)` with `eigenvectors[k]` the unit
/// vector paired with `eigenvalues[k]`; unsorted.
pub(crate) fn jacobi_eigen(matrix: &[f64], n: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    assert_eq!(matrix.len(), n * n);
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut a = matrix.to_vec();
    // vectors accumulated as rows of v: v[k] is the k-th eigenvector
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-12 * fro;
    if fro == 0.0 {
        let vectors = (0..n).map(|k| v[k * n..(k + 1) * n].to_vec()).collect();
        return (vec![0.0; n], vectors);
    }

    for _sweep in 0..200 {
        let mut off_max = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a[p * n + q].abs());
            }
        }
        if off_max <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = aip - s * (aiq + tau * aip);
                        a[i * n + q] = aiq + s * (aip - tau * aiq);
                        a[p * n + i] = a[i * n + p];
                        a[q * n + i] = a[i * n + q];
                    }
                }
                for k in 0..n {
                    let vkp = v[p * n + k];
                    let vkq = v[q * n + k];
                    v[p * n + k] = vkp - s * (vkq + tau * vkp);
                    v[q * n + k] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> = (0..n).map(|k| v[k * n..(k + 1) * n].to_vec()).collect();
    (values, vectors)
}
