//! Exact characteristic polynomials of adjacency matrices.
//!
//! Faddeev–LeVerrier over big integers: for an integer matrix every
//! division in the recurrence is exact, so the coefficients of
//! `det(xI − A)` come out as exact integers. O(n⁴) multiplications, which
//! is comfortable at desk scale where coefficient growth rules out
//! fixed-width arithmetic anyway.

use super::poly::IntPoly;
use crate::graphs::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

/// `det(xI − A(G))`, monic of degree `order`.
pub fn char_poly(g: &Graph) -> IntPoly {
    let n = g.order();
    if n == 0 {
        return IntPoly::one();
    }
    let a: Vec<BigInt> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if g.has_edge(i, j) {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        })
        .collect();

    // c[n] = 1, and for k = 1..n:  M_k = A·M_{k-1} + c_{n-k+1}·A,
    // c_{n-k} = -tr(M_k)/k  (exact division)
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = a.clone();
    coeffs[n - 1] = -trace(&m, n);
    for k in 2..=n {
        // m <- A * (m + c_{n-k+1} I)
        let mut shifted = m;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            shifted[i * n + i] += &c;
        }
        m = mat_mul(&a, &shifted, n);
        let t = trace(&m, n);
        coeffs[n - k] = -t / BigInt::from(k as i64);
    }
    IntPoly::new(coeffs)
}

fn trace(m: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| m[i * n + i].clone()).sum()
}

fn mat_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let prod = aik * &b[k * n + j];
                out[i * n + j] += prod;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rank::bareiss_det;
    use crate::graphs::{build, half_graph, GraphSpec};

    fn spec(s: &str) -> GraphSpec {
        GraphSpec::parse(s).unwrap()
    }

    #[test]
    fn k2() {
        let g = build(&spec("nsg:1;1"));
        assert_eq!(char_poly(&g), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn star_k13() {
        let g = build(&spec("nsg:3;1"));
        assert_eq!(char_poly(&g), IntPoly::from_i64(&[0, 0, -3, 0, 1]));
    }

    #[test]
    fn p4_matches_path_recurrence() {
        // independent oracle: φ(P_k) = x·φ(P_{k-1}) − φ(P_{k-2})
        let mut prev = IntPoly::one(); // P_0
        let mut cur = IntPoly::x(); // P_1
        for _ in 2..=4 {
            let next = IntPoly::x().mul(&cur).sub(&prev);
            prev = cur;
            cur = next;
        }
        assert_eq!(cur, IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        let p4 = half_graph(2).unwrap();
        assert_eq!(char_poly(&p4), cur);
    }

    #[test]
    fn order_zero() {
        let g = crate::graphs::Graph::empty(0);
        assert_eq!(char_poly(&g), IntPoly::one());
    }

    #[test]
    fn eval_matches_exact_determinant() {
        // φ(t) must equal det(tI − A) computed by fraction-free elimination
        for s in ["nsg:2,2;1,3", "dng:2,1;1,2", "nsg:1,1,2;2,1,1", "half:5"] {
            let g = build(&spec(s));
            let p = char_poly(&g);
            for t in [-3i64, -1, 0, 2, 7] {
                let n = g.order();
                let shifted: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let mut x = if g.has_edge(i, j) {
                                    BigInt::from(-1)
                                } else {
                                    BigInt::zero()
                                };
                                if i == j {
                                    x += BigInt::from(t);
                                }
                                x
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(
                    p.eval_int(&BigInt::from(t)),
                    bareiss_det(&shifted),
                    "{s} t={t}"
                );
            }
        }
    }
}
