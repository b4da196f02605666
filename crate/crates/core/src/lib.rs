//! Construction and spectral analysis of threshold graphs (nested split
//! graphs, NSG) and chain graphs (double nested graphs, DNG).
//!
//! The crate builds both families from cell-size parameters, computes
//! adjacency spectra two ways (exact integer characteristic polynomials and
//! a dense symmetric eigensolver), classifies every vertex as downer,
//! neutral, or Parter for a fixed eigenvalue, and ships executable checks
//! for the structural theorems these families satisfy, including the
//! half-graph constructions that produce chain graphs with neutral vertices
//! for nonzero eigenvalues.
//!
//! Modules:
//! - [`graphs`]: cell-size specs, deterministic construction, vertex
//!   surgery, forbidden-subgraph family validation.
//! - [`exact`]: big-integer polynomials, characteristic polynomials,
//!   fraction-free rank, algebraic eigenvalues, exact multiplicities.
//! - [`numeric`]: Jacobi eigendecomposition, eigenvalue clustering, the
//!   per-vertex sum rule, mainness, Cauchy interlacing.
//! - [`vertex_types`]: downer/neutral/Parter classification by exact or
//!   numeric multiplicity differences and by eigenspace coordinates.
//! - [`verify`]: theorem checkers, counterexample constructions, and
//!   exhaustive search harnesses, with JSON/CSV reporting.

pub mod exact;
pub mod graphs;
pub mod numeric;
pub mod verify;
pub mod vertex_types;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cell list is empty")]
    EmptyCells,
    #[error("cell size must be at least 1: {side}_{index} = 0")]
    ZeroCell { side: char, index: usize },
    #[error("cell lists differ in length: {m_len} m-cells vs {n_len} n-cells")]
    CellLengthMismatch { m_len: usize, n_len: usize },
    #[error("cannot parse graph spec '{input}': bad token '{token}' ({reason})")]
    SpecParse {
        input: String,
        token: String,
        reason: String,
    },
    #[error("vertex {vertex} out of range for order-{order} graph")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("index {index} outside valid range {min}..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("{what} must be at least {min}, got {got}")]
    BadBound {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("expected a {expected} spec, got {got}")]
    WrongFamily {
        expected: &'static str,
        got: &'static str,
    },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree-{degree} minimal polynomial is reducible over the rationals")]
    Reducible { degree: usize },
    #[error("minimal polynomial has no isolated real root near {approx}")]
    NoIsolatedRoot { approx: f64 },
    #[error("{value} is not an eigenvalue of the graph")]
    NotAnEigenvalue { value: String },
    #[error("exact mainness needs a rational eigenvalue; minimal polynomial has degree {degree}")]
    IrrationalMainness { degree: usize },
    #[error("zero vector cannot be an eigenvector")]
    ZeroVector,
    #[error("vector length {got} does not match graph order {expected}")]
    VectorLength { got: usize, expected: usize },
    #[error("subgraph order {sub} must be smaller than graph order {main}")]
    SubgraphOrder { sub: usize, main: usize },
    #[error("premise failed: {0}")]
    Premise(String),
    #[error("coordinate x({vertex}) = {value} is not zero within tolerance")]
    NonzeroCoordinate { vertex: usize, value: f64 },
    #[error("h = {h} is not congruent to {residues} (mod {modulus})")]
    WrongResidue {
        h: usize,
        residues: &'static str,
        modulus: usize,
    },
    #[error("cell {tag} is not all-neutral for the requested eigenvalue")]
    CellNotNeutral { tag: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rounds to `digits` significant decimal digits. Used everywhere a float
/// leaves the library (JSON, CSV, display) so identical runs print
/// identical bytes.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// `round_sig` with the 12-digit default used by the serializers.
pub fn sig12(x: f64) -> f64 {
    round_sig(x, 12)
}

pub(crate) fn json_f64(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(sig12(x))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}
