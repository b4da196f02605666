//! Downer / neutral / Parter classification.
//!
//! For an eigenvalue λ of `G` with multiplicity `k ≥ 1`, a vertex `v` is a
//! downer, neutral, or Parter vertex according to whether
//! `mult(λ, G−v)` is `k−1`, `k`, or `k+1`. The multiplicity route works on
//! exact multiplicities when λ comes with a minimal polynomial and on
//! clustered numeric multiplicities otherwise. An independent route reads
//! downer-ness off the eigenspace: `v` is a downer exactly when some
//! λ-eigenvector is nonzero at `v`.

use crate::exact::{exact_multiplicity, AlgebraicNumber, IntPoly};
use crate::graphs::{CellTag, Graph};
use crate::numeric::{eig_sym_with, Spectrum, Tolerances};
use crate::{json_f64, Error, Result};
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexType {
    Downer,
    Neutral,
    Parter,
}

impl VertexType {
    fn from_delta(k: usize, k_minus_v: usize) -> VertexType {
        if k_minus_v + 1 == k {
            VertexType::Downer
        } else if k_minus_v == k {
            VertexType::Neutral
        } else if k_minus_v == k + 1 {
            VertexType::Parter
        } else {
            // interlacing forbids |Δ| > 1 for symmetric matrices
            unreachable!("multiplicity changed by more than one")
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VertexType::Downer => "downer",
            VertexType::Neutral => "neutral",
            VertexType::Parter => "Parter",
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which pipeline produced the verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Exact,
    Numeric,
    BothAgree,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Exact => "exact",
            Route::Numeric => "numeric",
            Route::BothAgree => "both-agree",
        }
    }
}

/// Per-vertex and per-cell classification for one eigenvalue.
#[derive(Debug, Clone)]
pub struct VertexTypeReport {
    pub minpoly: Option<IntPoly>,
    pub approx: f64,
    /// `mult(λ, G)`.
    pub multiplicity: usize,
    pub route: Route,
    pub per_vertex: Vec<VertexType>,
    /// One entry per tagged cell, `None` type when members disagree.
    pub per_cell: Vec<(CellTag, Option<VertexType>)>,
    pub anomalies: Vec<String>,
}

impl VertexTypeReport {
    pub fn downer_set(&self) -> BTreeSet<usize> {
        self.per_vertex
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == VertexType::Downer)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn vertices_of_type(&self, t: VertexType) -> BTreeSet<usize> {
        self.per_vertex
            .iter()
            .enumerate()
            .filter(|(_, x)| **x == t)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn cell_type(&self, tag: CellTag) -> Option<VertexType> {
        self.per_cell
            .iter()
            .find(|(t, _)| *t == tag)
            .and_then(|(_, ty)| *ty)
    }

    /// Wire form: `{lambda: {minpoly?, coeffs?, approx}, k, route,
    /// vertices: [...], cells: [...], anomalies: [...]}`.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let mut lambda = serde_json::Map::new();
        if let Some(p) = &self.minpoly {
            lambda.insert("minpoly".into(), json!(p.to_string()));
            lambda.insert("coeffs".into(), json!(p.coeff_strings()));
        }
        lambda.insert("approx".into(), json_f64(self.approx));
        json!({
            "lambda": lambda,
            "k": self.multiplicity,
            "route": self.route.as_str(),
            "vertices": self.per_vertex.iter().enumerate().map(|(v, t)| json!({
                "id": v,
                "cell": g.label(v).map(|c| c.to_string()),
                "type": t.as_str(),
            })).collect::<Vec<_>>(),
            "cells": self.per_cell.iter().map(|(tag, t)| json!({
                "tag": tag.to_string(),
                "type": t.map(|t| t.as_str()),
            })).collect::<Vec<_>>(),
            "anomalies": self.anomalies,
        })
    }
}

fn aggregate_cells(
    g: &Graph,
    per_vertex: &[VertexType],
) -> (Vec<(CellTag, Option<VertexType>)>, Vec<String>) {
    let mut cells = Vec::new();
    let mut anomalies = Vec::new();
    for (tag, members) in g.cells() {
        let mut iter = members.iter();
        let first = per_vertex[*iter.next().expect("cells are non-empty")];
        let uniform = iter.all(|&v| per_vertex[v] == first);
        if uniform {
            cells.push((tag, Some(first)));
        } else {
            cells.push((tag, None));
            anomalies.push(format!("cell {tag} has mixed vertex types"));
        }
    }
    (cells, anomalies)
}

/// Exact classification of a single vertex.
pub fn classify_vertex(g: &Graph, lambda: &AlgebraicNumber, v: usize) -> Result<VertexType> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let k = exact_multiplicity(g, lambda);
    if k == 0 {
        return Err(Error::NotAnEigenvalue {
            value: lambda.to_string(),
        });
    }
    let k_sub = exact_multiplicity(&g.delete_vertex(v)?, lambda);
    Ok(VertexType::from_delta(k, k_sub))
}

/// Exact classification of every vertex, aggregated by cell.
pub fn classify_all(g: &Graph, lambda: &AlgebraicNumber) -> Result<VertexTypeReport> {
    let k = exact_multiplicity(g, lambda);
    if k == 0 {
        return Err(Error::NotAnEigenvalue {
            value: lambda.to_string(),
        });
    }
    let per_vertex: Vec<VertexType> = (0..g.order())
        .map(|v| {
            let k_sub = exact_multiplicity(&g.delete_vertex(v)?, lambda);
            Ok(VertexType::from_delta(k, k_sub))
        })
        .collect::<Result<_>>()?;
    let (per_cell, anomalies) = aggregate_cells(g, &per_vertex);
    Ok(VertexTypeReport {
        minpoly: Some(lambda.minpoly().clone()),
        approx: lambda.approx(),
        multiplicity: k,
        route: Route::Exact,
        per_vertex,
        per_cell,
        anomalies,
    })
}

/// Numeric classification by clustered multiplicity differences.
pub fn classify_all_numeric(g: &Graph, lambda: f64, tol: &Tolerances) -> Result<VertexTypeReport> {
    let spectrum = eig_sym_with(g, tol);
    let cluster = spectrum
        .cluster_near(lambda)
        .ok_or_else(|| Error::NotAnEigenvalue {
            value: format!("{lambda}"),
        })?;
    let k = cluster.multiplicity;
    let value = cluster.value;
    let ct = spectrum.cluster_tol();
    let per_vertex: Vec<VertexType> = (0..g.order())
        .map(|v| {
            let sub = g.delete_vertex(v)?;
            let sub_spectrum = eig_sym_with(&sub, tol);
            let k_sub = sub_spectrum
                .values()
                .iter()
                .filter(|&&x| (x - value).abs() <= ct)
                .count();
            Ok(VertexType::from_delta(k, k_sub))
        })
        .collect::<Result<_>>()?;
    let (per_cell, anomalies) = aggregate_cells(g, &per_vertex);
    Ok(VertexTypeReport {
        minpoly: None,
        approx: value,
        multiplicity: k,
        route: Route::Numeric,
        per_vertex,
        per_cell,
        anomalies,
    })
}

/// Vertices whose coordinate functional is nonzero on the eigenspace of
/// `cluster`: the row of the orthonormal basis matrix at `v` has norm above
/// the cluster tolerance. For simple eigenvalues this is `x(v) ≠ 0`.
pub fn downers_via_eigenspace(
    spectrum: &Spectrum,
    cluster: &crate::numeric::Cluster,
) -> BTreeSet<usize> {
    let basis = spectrum.cluster_basis(cluster);
    let n = spectrum.order();
    (0..n)
        .filter(|&v| {
            let row_norm_sq: f64 = basis.iter().map(|x| x[v] * x[v]).sum();
            row_norm_sq.sqrt() > spectrum.cluster_tol()
        })
        .collect()
}

/// Exact multiplicity-difference downer sets, one per cluster of the
/// spectrum.
///
/// Clusters that snap to a known algebraic identity (integers, ±ω, ±φ)
/// with matching exact multiplicity go through exact multiplicities.
/// Any other cluster must be simple; there `v` is a downer exactly when λ
/// disappears from `G−v`, which `gcd(φ_G, φ_{G−v})` decides by an exact
/// sign test on an isolating interval. The per-vertex characteristic
/// polynomials are shared across clusters. Tolerance-free apart from the
/// numeric isolation of each eigenvalue, so this resolves eigenvector
/// coordinates far below what subgraph eigenvalue counting can see.
pub fn downer_sets_exact(g: &Graph, spectrum: &Spectrum) -> Result<Vec<BTreeSet<usize>>> {
    use crate::exact::{char_poly, share_simple_root_in, snap_to_algebraic};
    let tol = spectrum.cluster_tol();
    let n = g.order();
    let mut sub_polys: Vec<Option<crate::exact::IntPoly>> = vec![None; n];
    let mut parent_poly = None;
    let mut out = Vec::new();
    for cluster in spectrum.clusters() {
        if let Some(alg) = snap_to_algebraic(cluster.value, tol) {
            if exact_multiplicity(g, &alg) == cluster.multiplicity {
                out.push(classify_all(g, &alg)?.downer_set());
                continue;
            }
        }
        if cluster.multiplicity != 1 {
            return Err(Error::Premise(format!(
                "cluster at {} has multiplicity {} and no algebraic identity",
                cluster.value, cluster.multiplicity
            )));
        }
        let p = parent_poly.get_or_insert_with(|| char_poly(g));
        // isolate the eigenvalue from its neighbors
        let gap = spectrum
            .clusters()
            .iter()
            .map(|c| (c.value - cluster.value).abs())
            .filter(|d| *d > 0.0)
            .fold(1.0_f64, f64::min);
        let mut set = BTreeSet::new();
        for v in 0..n {
            if sub_polys[v].is_none() {
                sub_polys[v] = Some(char_poly(&g.delete_vertex(v)?));
            }
            let q = sub_polys[v].as_ref().expect("just filled");
            let mut radius = gap / 2.0;
            let shared = loop {
                match share_simple_root_in(p, q, cluster.value - radius, cluster.value + radius) {
                    Ok(b) => break b,
                    Err(_) if radius > 1e-12 => radius *= 0.75,
                    Err(e) => return Err(e),
                }
            };
            if !shared {
                set.insert(v);
            }
        }
        out.push(set);
    }
    Ok(out)
}

/// Checks that the eigenspace-coordinate downer set matches the exact
/// multiplicity-difference downer set for λ.
pub fn cross_validate(g: &Graph, lambda: &AlgebraicNumber) -> Result<bool> {
    let report = classify_all(g, lambda)?;
    let spectrum = eig_sym_with(g, &Tolerances::default());
    let cluster = spectrum
        .cluster_near(lambda.approx())
        .ok_or_else(|| Error::NotAnEigenvalue {
            value: lambda.to_string(),
        })?;
    let from_eigenspace = downers_via_eigenspace(&spectrum, cluster);
    Ok(from_eigenspace == report.downer_set())
}
