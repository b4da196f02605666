//! Floating-point spectral analysis: full symmetric eigendecomposition,
//! clustering of eigenvalues into multiplicity groups, the per-vertex sum
//! rule, numeric mainness, and Cauchy interlacing checks.

mod jacobi;

use crate::graphs::Graph;
use crate::{json_f64, Error, Result};
use serde_json::json;

/// Tolerance policy. `cluster_rel` scales with `max(1, spectral radius)`;
/// `residual_rel` with `max(1, n)`; `mainness_rel` with `√n`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub cluster_rel: f64,
    pub residual_rel: f64,
    pub mainness_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cluster_rel: 1e-7,
            residual_rel: 1e-9,
            mainness_rel: 1e-7,
        }
    }
}

impl Tolerances {
    pub fn with_cluster_rel(cluster_rel: f64) -> Self {
        Tolerances {
            cluster_rel,
            ..Default::default()
        }
    }
}

/// One eigenvalue with its unit eigenvector, vertex-indexed under the
/// deterministic construction ordering.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// A maximal run of numerically equal eigenvalues.
#[derive(Debug, Clone)]
pub struct Cluster {
    /// Mean of the member values.
    pub value: f64,
    /// Positions in the sorted pair list (contiguous).
    pub first: usize,
    pub multiplicity: usize,
    /// Eigenspace not numerically orthogonal to the all-ones vector.
    pub main: bool,
}

impl Cluster {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.first..self.first + self.multiplicity
    }
}

/// Full spectrum, sorted descending (`λ_1 ≥ … ≥ λ_n`), with clusters and
/// the resolved absolute tolerances.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pairs: Vec<EigenPair>,
    clusters: Vec<Cluster>,
    cluster_tol: f64,
    mainness_tol: f64,
    max_residual: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[EigenPair] {
        &self.pairs
    }

    /// `λ_i` with the usual 1-based descending convention.
    pub fn lambda(&self, i: usize) -> f64 {
        self.pairs[i - 1].value
    }

    pub fn values(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.value).collect()
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn mainness_tol(&self) -> f64 {
        self.mainness_tol
    }

    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    /// Cluster whose representative value lies within `cluster_tol` of
    /// `value` (clusters are separated by more than that, so at most one).
    pub fn cluster_near(&self, value: f64) -> Option<&Cluster> {
        self.clusters
            .iter()
            .find(|c| (c.value - value).abs() <= self.cluster_tol)
    }

    /// Cluster containing sorted position `i` (1-based).
    pub fn cluster_of_index(&self, i: usize) -> Option<&Cluster> {
        self.clusters
            .iter()
            .find(|c| c.indices().contains(&(i - 1)))
    }

    /// Orthonormal basis of a cluster's eigenspace. Jacobi already returns
    /// orthonormal vectors; one Gram-Schmidt pass tidies degenerate spaces.
    pub fn cluster_basis(&self, cluster: &Cluster) -> Vec<Vec<f64>> {
        let mut basis: Vec<Vec<f64>> = cluster
            .indices()
            .map(|k| self.pairs[k].vector.clone())
            .collect();
        for i in 0..basis.len() {
            for j in 0..i {
                let dot: f64 = basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
                let prev = basis[j].clone();
                for (x, p) in basis[i].iter_mut().zip(&prev) {
                    *x -= dot * p;
                }
            }
            let norm: f64 = basis[i].iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                for x in basis[i].iter_mut() {
                    *x /= norm;
                }
            }
        }
        basis
    }

    /// `‖P·j‖ > tol·√n` where `P` projects onto the cluster's eigenspace.
    pub fn is_main(&self, cluster: &Cluster, tol: f64) -> bool {
        let n = self.order();
        let basis = self.cluster_basis(cluster);
        let proj_sq: f64 = basis
            .iter()
            .map(|x| {
                let dot: f64 = x.iter().sum();
                dot * dot
            })
            .sum();
        proj_sq.sqrt() > tol * (n as f64).sqrt()
    }

    /// `{values, clusters: [{value, multiplicity, main}]}` with floats at
    /// 12 significant digits.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "values": self.values().iter().map(|&v| json_f64(v)).collect::<Vec<_>>(),
            "clusters": self.clusters.iter().map(|c| json!({
                "value": json_f64(c.value),
                "multiplicity": c.multiplicity,
                "main": c.main,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Eigendecomposition with default tolerances.
pub fn eig_sym(g: &Graph) -> Spectrum {
    eig_sym_with(g, &Tolerances::default())
}

/// Full eigendecomposition of the adjacency matrix: sorted descending
/// (ties broken by original index), clustered, mainness flagged.
pub fn eig_sym_with(g: &Graph, tol: &Tolerances) -> Spectrum {
    let n = g.order();
    let matrix = g.adjacency_f64();
    let (values, vectors) = jacobi::jacobi_eigen(&matrix, n);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let pairs: Vec<EigenPair> = order
        .into_iter()
        .map(|k| {
            let mut vector = vectors[k].clone();
            normalize_sign(&mut vector);
            EigenPair {
                value: values[k],
                vector,
            }
        })
        .collect();

    let radius = pairs.first().map_or(0.0, |p| {
        pairs
            .iter()
            .map(|q| q.value.abs())
            .fold(p.value.abs(), f64::max)
    });
    let cluster_tol = tol.cluster_rel * radius.max(1.0);
    let mainness_tol = tol.mainness_rel;

    let max_residual = pairs
        .iter()
        .map(|p| residual_inf(&matrix, n, p.value, &p.vector))
        .fold(0.0, f64::max);
    debug_assert!(
        max_residual <= tol.residual_rel * (n.max(1) as f64),
        "eigen residual {max_residual} too large"
    );

    let mut spectrum = Spectrum {
        pairs,
        clusters: Vec::new(),
        cluster_tol,
        mainness_tol,
        max_residual,
    };

    let mut clusters = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && spectrum.pairs[end - 1].value - spectrum.pairs[end].value <= cluster_tol {
            end += 1;
        }
        let value = spectrum.pairs[start..end]
            .iter()
            .map(|p| p.value)
            .sum::<f64>()
            / (end - start) as f64;
        clusters.push(Cluster {
            value,
            first: start,
            multiplicity: end - start,
            main: false,
        });
        start = end;
    }
    spectrum.clusters = clusters;
    for i in 0..spectrum.clusters.len() {
        let c = spectrum.clusters[i].clone();
        spectrum.clusters[i].main = spectrum.is_main(&c, mainness_tol);
    }
    spectrum
}

fn normalize_sign(x: &mut [f64]) {
    let mut best = 0usize;
    for (i, v) in x.iter().enumerate() {
        if v.abs() > x[best].abs() + 1e-12 {
            best = i;
        }
    }
    if x[best] < 0.0 {
        for v in x.iter_mut() {
            *v = -*v;
        }
    }
}

fn residual_inf(matrix: &[f64], n: usize, lambda: f64, x: &[f64]) -> f64 {
    (0..n)
        .map(|i| {
            let ax: f64 = (0..n).map(|j| matrix[i * n + j] * x[j]).sum();
            (ax - lambda * x[i]).abs()
        })
        .fold(0.0, f64::max)
}

/// Sum-rule check `λx(v) = Σ_{u∼v} x(u)` at every vertex, after unit
/// normalization of `x`.
pub fn verify_eigenvector(g: &Graph, lambda: f64, x: &[f64], tol: f64) -> Result<bool> {
    let n = g.order();
    if x.len() != n {
        return Err(Error::VectorLength {
            got: x.len(),
            expected: n,
        });
    }
    let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let x: Vec<f64> = x.iter().map(|v| v / norm).collect();
    for v in 0..n {
        let sum: f64 = g.neighbors(v).map(|u| x[u]).sum();
        if (lambda * x[v] - sum).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Numeric mainness of the cluster nearest `value`.
pub fn is_main_numeric(g: &Graph, value: f64, tol: f64) -> Result<bool> {
    let spectrum = eig_sym(g);
    let cluster = spectrum
        .cluster_near(value)
        .ok_or_else(|| Error::NotAnEigenvalue {
            value: format!("{value}"),
        })?;
    Ok(spectrum.is_main(cluster, tol))
}

/// Cauchy interlacing `λ_i ≥ λ'_i ≥ λ_{n−n'+i}` for an induced subgraph,
/// with numeric slack `cluster_tol`.
pub fn check_interlacing(g: &Graph, sub: &Graph) -> Result<bool> {
    let n = g.order();
    let n_sub = sub.order();
    if n_sub >= n {
        return Err(Error::SubgraphOrder {
            sub: n_sub,
            main: n,
        });
    }
    let sg = eig_sym(g);
    let sh = eig_sym(sub);
    let slack = sg.cluster_tol();
    for i in 1..=n_sub {
        let upper = sg.lambda(i);
        let lower = sg.lambda(n - n_sub + i);
        let mid = sh.lambda(i);
        if mid > upper + slack || mid < lower - slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of eigenvalues within the cluster tolerance of `lambda`.
pub fn numeric_multiplicity(g: &Graph, lambda: f64) -> usize {
    numeric_multiplicity_with(g, lambda, &Tolerances::default())
}

pub fn numeric_multiplicity_with(g: &Graph, lambda: f64, tol: &Tolerances) -> usize {
    let spectrum = eig_sym_with(g, tol);
    spectrum
        .values()
        .iter()
        .filter(|&&v| (v - lambda).abs() <= spectrum.cluster_tol())
        .count()
}
