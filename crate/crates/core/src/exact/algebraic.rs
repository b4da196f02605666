//! Eigenvalues as algebraic numbers: a monic integer minimal polynomial
//! plus an isolating floating-point approximation.

use super::poly::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// An algebraic number given by `(minpoly, approx, isolation_radius)`:
/// `minpoly` is monic with exactly one real root within
/// `isolation_radius` of `approx`.
///
/// Irreducibility is verified for degrees 1 and 2. Higher-degree minimal
/// polynomials are accepted on trust (the construction still checks that
/// `approx` is close to a root); callers supplying reducible polynomials
/// get multiplicities of the whole factor, not of a single eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    approx: f64,
    isolation_radius: f64,
}

impl AlgebraicNumber {
    pub fn new(minpoly: IntPoly, approx: f64, isolation_radius: f64) -> Result<Self> {
        if !minpoly.is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = minpoly.degree().unwrap_or(0);
        match degree {
            0 => return Err(Error::NoIsolatedRoot { approx }),
            1 => {
                let root = -big_to_f64(&minpoly.coeff(0));
                if (root - approx).abs() > isolation_radius {
                    return Err(Error::NoIsolatedRoot { approx });
                }
            }
            2 => {
                // x^2 + bx + c: irreducible over Q iff the discriminant is
                // not a perfect square (monic, so rational roots are integers)
                let b = minpoly.coeff(1);
                let c = minpoly.coeff(0);
                let disc = &b * &b - BigInt::from(4) * &c;
                if disc.is_negative() || disc.is_zero() {
                    return Err(Error::NoIsolatedRoot { approx });
                }
                if is_perfect_square(&disc) {
                    return Err(Error::Reducible { degree: 2 });
                }
                let bf = big_to_f64(&b);
                let df = big_to_f64(&disc).sqrt();
                let roots = [(-bf + df) / 2.0, (-bf - df) / 2.0];
                let near = roots
                    .iter()
                    .filter(|r| (*r - approx).abs() <= isolation_radius)
                    .count();
                if near != 1 {
                    return Err(Error::NoIsolatedRoot { approx });
                }
            }
            _ => {
                // trusted; still require approx to look like a root
                let scale = minpoly
                    .coeffs()
                    .iter()
                    .map(|c| big_to_f64(&c.abs()))
                    .fold(1.0_f64, f64::max);
                if minpoly.eval_f64(approx).abs() > 1e-6 * scale {
                    return Err(Error::NoIsolatedRoot { approx });
                }
            }
        }
        Ok(AlgebraicNumber {
            minpoly,
            approx,
            isolation_radius,
        })
    }

    /// The integer `t` as an algebraic number (minpoly `x − t`).
    pub fn integer(t: i64) -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::from_i64(&[-t, 1]),
            approx: t as f64,
            isolation_radius: 0.5,
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn minus_one() -> Self {
        Self::integer(-1)
    }

    /// ω, the positive root of `x² + x − 1` (≈ 0.618).
    pub fn omega() -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::from_i64(&[-1, 1, 1]),
            approx: 0.618_033_988_749_894_9,
            isolation_radius: 0.25,
        }
    }

    /// −ω, a root of `x² − x − 1` (the other root is the golden ratio).
    pub fn minus_omega() -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::from_i64(&[-1, -1, 1]),
            approx: -0.618_033_988_749_894_9,
            isolation_radius: 0.25,
        }
    }

    /// φ = 1 + ω ≈ 1.618, root of `x² − x − 1`.
    pub fn golden() -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::from_i64(&[-1, -1, 1]),
            approx: 1.618_033_988_749_895,
            isolation_radius: 0.25,
        }
    }

    /// −φ, root of `x² + x − 1`.
    pub fn minus_golden() -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::from_i64(&[-1, 1, 1]),
            approx: -1.618_033_988_749_895,
            isolation_radius: 0.25,
        }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    pub fn isolation_radius(&self) -> f64 {
        self.isolation_radius
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    /// The exact integer value when the minimal polynomial is linear.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.degree() == 1).then(|| -self.minpoly.coeff(0))
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.as_integer() {
            write!(f, "{t}")
        } else {
            write!(
                f,
                "root of {} near {}",
                self.minpoly,
                crate::sig12(self.approx)
            )
        }
    }
}

/// Snaps a floating value to a known algebraic eigenvalue: a nearby
/// integer, or one of ±ω, ±φ. Returns `None` when nothing is within `tol`.
pub fn snap_to_algebraic(value: f64, tol: f64) -> Option<AlgebraicNumber> {
    let nearest = value.round();
    if (value - nearest).abs() <= tol && nearest.abs() < 1e15 {
        return Some(AlgebraicNumber::integer(nearest as i64));
    }
    for cand in [
        AlgebraicNumber::omega(),
        AlgebraicNumber::minus_omega(),
        AlgebraicNumber::golden(),
        AlgebraicNumber::minus_golden(),
    ] {
        if (value - cand.approx()).abs() <= tol {
            return Some(cand);
        }
    }
    None
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn is_perfect_square(x: &BigInt) -> bool {
    if x.is_negative() {
        return false;
    }
    let r = x.sqrt();
    &r * &r == *x
}
