//! Exact integer/rational algebra: characteristic polynomials, root
//! multiplicities against monic minimal polynomials, fraction-free rank,
//! and the exact main/non-main decision for rational eigenvalues.

mod algebraic;
mod charpoly;
mod poly;
mod rank;

pub use algebraic::{snap_to_algebraic, AlgebraicNumber};
pub use charpoly::char_poly;
pub use poly::IntPoly;
pub use rank::{bareiss_det, bareiss_rank, rational_rank};

use crate::graphs::Graph;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Largest `k` with `minpoly(λ)^k` dividing `p` exactly; 0 when λ is not a
/// root. Valid as an eigenvalue multiplicity because Galois-conjugate roots
/// share multiplicity in any rational polynomial.
pub fn root_multiplicity(p: &IntPoly, lambda: &AlgebraicNumber) -> usize {
    let mut k = 0;
    let mut rest = p.clone();
    while !rest.is_zero() {
        match rest.exact_div_monic(lambda.minpoly()) {
            Some(q) => {
                rest = q;
                k += 1;
            }
            None => break,
        }
    }
    k
}

/// `mult(λ, G)` through the characteristic polynomial.
pub fn eigenvalue_multiplicity(g: &Graph, lambda: &AlgebraicNumber) -> usize {
    root_multiplicity(&char_poly(g), lambda)
}

/// Integer matrix `A(G) − t·I`.
fn shifted_adjacency(g: &Graph, t: &BigInt) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut x = if g.has_edge(i, j) {
                        BigInt::from(1)
                    } else {
                        BigInt::zero()
                    };
                    if i == j {
                        x -= t;
                    }
                    x
                })
                .collect()
        })
        .collect()
}

/// Exact `mult(t, G) = n − rank(A − tI)` for an integer eigenvalue
/// candidate. Agrees with the characteristic-polynomial route because the
/// adjacency matrix is symmetric.
pub fn integer_nullity(g: &Graph, t: &BigInt) -> usize {
    g.order() - rank::bareiss_rank(&shifted_adjacency(g, t))
}

/// `mult(λ, G)` by the cheapest exact route: fraction-free rank for
/// rational (hence integer) λ, characteristic polynomial otherwise.
pub fn exact_multiplicity(g: &Graph, lambda: &AlgebraicNumber) -> usize {
    match lambda.as_integer() {
        Some(t) => integer_nullity(g, &t),
        None => eigenvalue_multiplicity(g, lambda),
    }
}

/// Exact mainness for a rational eigenvalue λ of `G`.
///
/// For symmetric `M = A − λI`, `range(M)` is the orthogonal complement of
/// the eigenspace `ker(M)`, so λ is main (eigenspace not orthogonal to the
/// all-ones vector `j`) exactly when `j ∉ range(M)`, i.e. when
/// `rank([M | j]) = rank(M) + 1`. Both ranks are computed fraction-free.
pub fn is_main_exact(g: &Graph, lambda: &AlgebraicNumber) -> Result<bool> {
    let Some(t) = lambda.as_integer() else {
        return Err(Error::IrrationalMainness {
            degree: lambda.degree(),
        });
    };
    let mut m = shifted_adjacency(g, &t);
    let plain = rank::bareiss_rank(&m);
    if g.order() - plain == 0 {
        return Err(Error::NotAnEigenvalue {
            value: lambda.to_string(),
        });
    }
    for row in m.iter_mut() {
        row.push(BigInt::from(1));
    }
    let augmented = rank::bareiss_rank(&m);
    Ok(augmented == plain + 1)
}

/// Exactly decides whether `p` and `q` share a root inside the open
/// interval `(lo, hi)`.
///
/// Contract: `p` has at most one root in `(lo, hi)` and it is simple;
/// then the shared root exists iff `gcd(p, q)` changes sign over the
/// interval. Errors when an endpoint itself is a root of the gcd (the
/// caller should shrink the interval and retry).
pub fn share_simple_root_in(p: &IntPoly, q: &IntPoly, lo: f64, hi: f64) -> Result<bool> {
    let g = p.gcd(q);
    sign_change_in_interval(&g, lo, hi)
}

/// Exact sign-change test of an integer polynomial over `(lo, hi)` with
/// dyadic-rational endpoints taken verbatim from the floats.
pub fn sign_change_in_interval(p: &IntPoly, lo: f64, hi: f64) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let (ln, ld) = f64_to_ratio(lo)?;
    let (hn, hd) = f64_to_ratio(hi)?;
    let sl = p.sign_at_rational(&ln, &ld);
    let sh = p.sign_at_rational(&hn, &hd);
    if sl == 0 || sh == 0 {
        return Err(Error::Premise(format!(
            "interval endpoint ({lo} or {hi}) is itself a root"
        )));
    }
    Ok(sl != sh)
}

fn f64_to_ratio(x: f64) -> Result<(BigInt, BigInt)> {
    let r = num_rational::BigRational::from_float(x)
        .ok_or_else(|| Error::Premise(format!("non-finite interval endpoint {x}")))?;
    Ok((r.numer().clone(), r.denom().clone()))
}

/// Reports how much of the spectrum a set of algebraic eigenvalues
/// accounts for: `Σ deg(minpoly_i)·mult_i`, at most the graph order.
pub fn accounted_degree(g: &Graph, lambdas: &[AlgebraicNumber]) -> usize {
    let p = char_poly(g);
    lambdas
        .iter()
        .map(|l| l.degree() * root_multiplicity(&p, l))
        .sum()
}

/// Coefficient size guard used by tests: the largest |coefficient|.
pub fn max_abs_coeff(p: &IntPoly) -> BigInt {
    p.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Floating value of a big integer (tests and reporting).
pub fn bigint_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build, half_graph, GraphSpec};

    fn spec(s: &str) -> GraphSpec {
        GraphSpec::parse(s).unwrap()
    }

    #[test]
    fn root_multiplicity_examples() {
        let p = IntPoly::from_i64(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(root_multiplicity(&p, &AlgebraicNumber::minus_one()), 1);

        let star = IntPoly::from_i64(&[0, 0, -3, 0, 1]); // x^4 - 3x^2
        assert_eq!(root_multiplicity(&star, &AlgebraicNumber::zero()), 2);

        let p4 = IntPoly::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(root_multiplicity(&p4, &AlgebraicNumber::omega()), 1);
        assert_eq!(root_multiplicity(&p4, &AlgebraicNumber::golden()), 1);
        assert_eq!(root_multiplicity(&p4, &AlgebraicNumber::zero()), 0);
    }

    #[test]
    fn root_multiplicity_is_additive_over_products() {
        let a = IntPoly::from_i64(&[-1, 1]); // x - 1
        let b = IntPoly::from_i64(&[-1, 1, 1]); // x^2 + x - 1
        let p = a.mul(&a).mul(&b); // (x-1)^2 (x^2+x-1)
        let q = a.mul(&b).mul(&b);
        let lam = AlgebraicNumber::integer(1);
        let om = AlgebraicNumber::omega();
        assert_eq!(
            root_multiplicity(&p.mul(&q), &lam),
            root_multiplicity(&p, &lam) + root_multiplicity(&q, &lam)
        );
        assert_eq!(
            root_multiplicity(&p.mul(&q), &om),
            root_multiplicity(&p, &om) + root_multiplicity(&q, &om)
        );
    }

    #[test]
    fn multiplicity_formulas_on_remark_graph() {
        let g = build(&spec("nsg:2,2,2;2,3,2"));
        // M_h - h = 6 - 3, N_h - h = 7 - 3 (m_h = 2 > 1)
        assert_eq!(eigenvalue_multiplicity(&g, &AlgebraicNumber::zero()), 3);
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::minus_one()),
            4
        );
        // -2 is the exceptional eigenvalue of this example
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::integer(-2)),
            1
        );
    }

    #[test]
    fn h4_has_simple_minus_one() {
        let g = half_graph(4).unwrap();
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::minus_one()),
            1
        );
    }

    #[test]
    fn nullity_route_agrees_with_charpoly_route() {
        for s in ["nsg:2,2,2;2,3,2", "nsg:3;1", "dng:2,2;1,3", "half:4"] {
            let g = build(&spec(s));
            for t in [-2i64, -1, 0, 1, 2] {
                let lam = AlgebraicNumber::integer(t);
                assert_eq!(
                    integer_nullity(&g, &BigInt::from(t)),
                    eigenvalue_multiplicity(&g, &lam),
                    "{s} t={t}"
                );
                assert_eq!(
                    exact_multiplicity(&g, &lam),
                    integer_nullity(&g, &BigInt::from(t))
                );
            }
        }
    }

    #[test]
    fn mainness_examples() {
        // K_{1,3}: kernel spanned by leaf differences, all orthogonal to j
        let star = build(&spec("nsg:3;1"));
        assert!(!is_main_exact(&star, &AlgebraicNumber::zero()).unwrap());

        let g = build(&spec("nsg:2,2,2;2,3,2"));
        assert!(!is_main_exact(&g, &AlgebraicNumber::minus_one()).unwrap());

        // H(4): the −1 eigenvector is the period-6 pattern (1,0,−1,−1) on
        // both classes, which sums to −2, so −1 is main; the negated copy
        // (x,−x) for +1 sums to zero, so +1 is non-main.
        let h4 = half_graph(4).unwrap();
        assert!(is_main_exact(&h4, &AlgebraicNumber::minus_one()).unwrap());
        assert!(!is_main_exact(&h4, &AlgebraicNumber::integer(1)).unwrap());

        // Perron eigenvalue of K_2 is main
        let k2 = build(&spec("nsg:1;1"));
        assert!(is_main_exact(&k2, &AlgebraicNumber::integer(1)).unwrap());

        assert!(matches!(
            is_main_exact(&k2, &AlgebraicNumber::integer(5)),
            Err(Error::NotAnEigenvalue { .. })
        ));
        assert!(matches!(
            is_main_exact(&k2, &AlgebraicNumber::omega()),
            Err(Error::IrrationalMainness { .. })
        ));
    }

    #[test]
    fn accounted_degree_bounds() {
        let g = build(&spec("nsg:2,2,2;2,3,2"));
        let named = [
            AlgebraicNumber::zero(),
            AlgebraicNumber::minus_one(),
            AlgebraicNumber::integer(-2),
        ];
        let acc = accounted_degree(&g, &named);
        assert!(acc <= g.order());
        assert_eq!(acc, 8); // 3 + 4 + 1; the h positive and 2 other simple values are irrational
    }
}
