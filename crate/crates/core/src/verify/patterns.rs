//! Periodic eigenvector patterns on half graphs and the constructions
//! that turn them into chain graphs with neutral vertices for nonzero
//! eigenvalues.
//!
//! The period-6 pattern `(1,0,−1,−1,0,1)` gives an eigenvector of `H(h)`
//! for λ=1 when `h ≡ 1 (mod 6)` and for λ=−1 when `h ≡ 4 (mod 6)`. The
//! period-10 pattern `(ω,−1,0,1,−ω,−ω,1,0,−1,ω)`, with ω the positive root
//! of `x²+x−1`, gives one for λ=ω when `h ≡ 7 (mod 10)` and for λ=−ω when
//! `h ≡ 2 (mod 10)`. Vertices under the pattern's zeros are neutral.

use crate::exact::AlgebraicNumber;
use crate::graphs::{half_graph, Graph, Side};
use crate::numeric::verify_eigenvector;
use crate::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};

/// Element `a + bω` of ℤ[ω], reduced with `ω² = 1 − ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zw {
    pub a: i64,
    pub b: i64,
}

impl Zw {
    pub const ZERO: Zw = Zw { a: 0, b: 0 };
    pub const ONE: Zw = Zw { a: 1, b: 0 };
    pub const OMEGA: Zw = Zw { a: 0, b: 1 };

    pub fn int(a: i64) -> Zw {
        Zw { a, b: 0 }
    }

    pub fn to_f64(self) -> f64 {
        const OMEGA_F: f64 = 0.618_033_988_749_894_9;
        self.a as f64 + self.b as f64 * OMEGA_F
    }
}

impl Add for Zw {
    type Output = Zw;
    fn add(self, rhs: Zw) -> Zw {
        Zw {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for Zw {
    type Output = Zw;
    fn sub(self, rhs: Zw) -> Zw {
        Zw {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for Zw {
    type Output = Zw;
    fn neg(self) -> Zw {
        Zw {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Zw {
    type Output = Zw;
    fn mul(self, rhs: Zw) -> Zw {
        // (a+bω)(c+dω) = ac + (ad+bc)ω + bd(1−ω)
        Zw {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a - self.b * rhs.b,
        }
    }
}

/// One of the two periodic patterns, with exact entries.
#[derive(Debug, Clone)]
pub struct EigenvectorPattern {
    pub period: usize,
    values: Vec<Zw>,
}

impl EigenvectorPattern {
    pub fn period6() -> Self {
        EigenvectorPattern {
            period: 6,
            values: [1, 0, -1, -1, 0, 1].iter().map(|&a| Zw::int(a)).collect(),
        }
    }

    pub fn period10() -> Self {
        let w = Zw::OMEGA;
        EigenvectorPattern {
            period: 10,
            values: vec![
                w,
                Zw::int(-1),
                Zw::ZERO,
                Zw::ONE,
                -w,
                -w,
                Zw::ONE,
                Zw::ZERO,
                Zw::int(-1),
                w,
            ],
        }
    }

    /// Entry for 1-based position `i` (wraps with the period).
    pub fn at(&self, i: usize) -> Zw {
        self.values[(i - 1) % self.period]
    }

    /// Sum of the entries at positions `1..=len` (wrapping), exact.
    pub fn prefix_sum(&self, len: usize) -> Zw {
        (1..=len).fold(Zw::ZERO, |acc, i| acc + self.at(i))
    }

    /// The full `(x, x)` vector on `H(h)` as floats, length `2h`.
    pub fn full_vector(&self, h: usize) -> Vec<f64> {
        let class: Vec<f64> = (1..=h).map(|i| self.at(i).to_f64()).collect();
        let mut out = class.clone();
        out.extend(class);
        out
    }

    /// 1-based positions `≤ h` where the pattern vanishes.
    pub fn zero_positions(&self, h: usize) -> Vec<usize> {
        (1..=h).filter(|&i| self.at(i) == Zw::ZERO).collect()
    }

    /// One full period sums to zero; both proofs lean on this.
    pub fn full_period_sum_is_zero(&self) -> bool {
        self.prefix_sum(self.period) == Zw::ZERO
    }
}

fn index_mod(t: i64, modulus: usize) -> usize {
    let m = modulus as i64;
    (((t - 1) % m + m) % m + 1) as usize
}

/// The period-6 identities: `Σ_{i=1}^{5−s} a_i = −a_s` and
/// `Σ_{i=1}^{2−s} a_i = a_s` for all `s`, indices taken mod 6 in `{1..6}`.
pub fn table1_identities_hold() -> bool {
    let p = EigenvectorPattern::period6();
    p.full_period_sum_is_zero()
        && (1..=6).all(|s| {
            let a_s = p.at(s);
            let lhs1 = p.prefix_sum(index_mod(5 - s as i64, 6));
            let lhs2 = p.prefix_sum(index_mod(2 - s as i64, 6));
            lhs1 == -a_s && lhs2 == a_s
        })
}

/// The period-10 identities in ℤ[ω]: `Σ_{i=1}^{8−s} b_i = ω·b_s` and
/// `Σ_{i=1}^{3−s} b_i = −ω·b_s`, indices mod 10 in `{1..10}`.
pub fn table2_identities_hold() -> bool {
    let p = EigenvectorPattern::period10();
    p.full_period_sum_is_zero()
        && (1..=10).all(|s| {
            let b_s = p.at(s);
            let lhs1 = p.prefix_sum(index_mod(8 - s as i64, 10));
            let lhs2 = p.prefix_sum(index_mod(3 - s as i64, 10));
            lhs1 == Zw::OMEGA * b_s && lhs2 == -(Zw::OMEGA * b_s)
        })
}

const PATTERN_RESIDUAL: f64 = 1e-10;

/// `H(h)` with its period-6 pattern eigenvector: λ=1 for `h ≡ 1 (mod 6)`,
/// λ=−1 for `h ≡ 4 (mod 6)`. The returned vector passes the sum rule; its
/// zero positions are neutral vertices.
pub fn build_period6(h: usize) -> Result<(Graph, AlgebraicNumber, Vec<f64>)> {
    let lambda = match h % 6 {
        1 => AlgebraicNumber::integer(1),
        4 => AlgebraicNumber::minus_one(),
        _ => {
            return Err(Error::WrongResidue {
                h,
                residues: "1 or 4",
                modulus: 6,
            })
        }
    };
    let g = half_graph(h)?;
    let x = EigenvectorPattern::period6().full_vector(h);
    debug_assert!(verify_eigenvector(
        &g,
        lambda.approx(),
        &x,
        PATTERN_RESIDUAL
    )?);
    Ok((g, lambda, x))
}

/// `H(h)` with its period-10 pattern eigenvector: λ=ω for `h ≡ 7 (mod 10)`,
/// λ=−ω for `h ≡ 2 (mod 10)`.
pub fn build_period10(h: usize) -> Result<(Graph, AlgebraicNumber, Vec<f64>)> {
    let lambda = match h % 10 {
        7 => AlgebraicNumber::omega(),
        2 => AlgebraicNumber::minus_omega(),
        _ => {
            return Err(Error::WrongResidue {
                h,
                residues: "7 or 2",
                modulus: 10,
            })
        }
    };
    let g = half_graph(h)?;
    let x = EigenvectorPattern::period10().full_vector(h);
    debug_assert!(verify_eigenvector(
        &g,
        lambda.approx(),
        &x,
        PATTERN_RESIDUAL
    )?);
    Ok((g, lambda, x))
}

/// Given an eigenvector of a bipartite labeled graph for λ, negating the
/// V-class entries gives an eigenvector for −λ with unchanged zero
/// positions. Returns `(−λ, (x,−x))` after checking the premise.
pub fn negate_pattern(g: &Graph, lambda: f64, x: &[f64]) -> Result<(f64, Vec<f64>)> {
    if !verify_eigenvector(g, lambda, x, PATTERN_RESIDUAL)? {
        return Err(Error::Premise(format!(
            "input is not a λ={lambda} eigenvector within {PATTERN_RESIDUAL}"
        )));
    }
    let flipped: Vec<f64> = (0..g.order())
        .map(|v| match g.label(v) {
            Some(tag) if tag.side == Side::V => -x[v],
            _ => x[v],
        })
        .collect();
    if !verify_eigenvector(g, -lambda, &flipped, PATTERN_RESIDUAL)? {
        return Err(Error::Premise(
            "graph is not bipartite between U and V tags".into(),
        ));
    }
    Ok((-lambda, flipped))
}

/// Adds `count` co-duplicates of a zero-coordinate vertex `v` and extends
/// the eigenvector by zeros; stays an eigenvector for λ, and every
/// duplicate is neutral. Produces arbitrarily large counterexample graphs.
pub fn extend_by_duplication(
    g: &Graph,
    lambda: f64,
    x: &[f64],
    v: usize,
    count: usize,
) -> Result<(Graph, Vec<f64>)> {
    if x.len() != g.order() {
        return Err(Error::VectorLength {
            got: x.len(),
            expected: g.order(),
        });
    }
    let norm: f64 = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let zero_tol = crate::numeric::Tolerances::default().cluster_rel;
    if (x[v] / norm).abs() > zero_tol {
        return Err(Error::NonzeroCoordinate {
            vertex: v,
            value: x[v],
        });
    }
    if !verify_eigenvector(g, lambda, x, PATTERN_RESIDUAL)? {
        return Err(Error::Premise(format!(
            "input is not a λ={lambda} eigenvector within {PATTERN_RESIDUAL}"
        )));
    }
    let mut graph = g.clone();
    let mut vec = x.to_vec();
    for _ in 0..count {
        graph = graph.duplicate_vertex(v)?;
        vec.push(0.0);
    }
    debug_assert!(verify_eigenvector(&graph, lambda, &vec, PATTERN_RESIDUAL)?);
    Ok((graph, vec))
}
