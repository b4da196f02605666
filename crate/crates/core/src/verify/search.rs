//! Enumeration and randomized-generation harnesses: the exhaustive hunt
//! for chain graphs with non-downer vertices at nonzero eigenvalues, and
//! the survey of the `λ = −m_h` exceptional case in threshold graphs.

use crate::exact::{integer_nullity, snap_to_algebraic};
use crate::graphs::{build, CellTag, Family, GraphSpec};
use crate::numeric::{eig_sym, numeric_multiplicity};
use crate::vertex_types::{cross_validate, downers_via_eigenspace, VertexType};
use crate::{json_f64, Error, Result};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// All specs of the family with `h ≤ max_h` and every cell size in
/// `1..=max_cell`, ordered lexicographically by `(h, m-list, n-list)`.
pub fn enumerate_specs(family: Family, max_h: usize, max_cell: usize) -> Vec<GraphSpec> {
    let mut out = Vec::new();
    for h in 1..=max_h {
        let lists = all_lists(h, max_cell);
        for m in &lists {
            for n in &lists {
                out.push(
                    GraphSpec::new(family, m.clone(), n.clone())
                        .expect("enumerated cells are positive"),
                );
            }
        }
    }
    out
}

fn all_lists(len: usize, max_cell: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![1usize; len];
    loop {
        out.push(cur.clone());
        // increment like an odometer, most significant digit first
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < max_cell {
                cur[k] += 1;
                for item in cur.iter_mut().skip(k + 1) {
                    *item = 1;
                }
                break;
            }
        }
    }
}

/// Seeded random specs; identical seeds give identical suites.
pub fn random_specs(
    family: Family,
    count: usize,
    max_h: usize,
    max_cell: usize,
    seed: u64,
) -> Vec<GraphSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let h = rng.gen_range(1..=max_h as u32) as usize;
            let m: Vec<usize> = (0..h)
                .map(|_| rng.gen_range(1..=max_cell as u32) as usize)
                .collect();
            let n: Vec<usize> = (0..h)
                .map(|_| rng.gen_range(1..=max_cell as u32) as usize)
                .collect();
            GraphSpec::new(family, m, n).expect("random cells are positive")
        })
        .collect()
}

/// One non-downer vertex discovered by the chain search.
#[derive(Debug, Clone)]
pub struct FindingVertex {
    pub id: usize,
    pub cell: Option<CellTag>,
    pub vertex_type: VertexType,
}

/// A chain graph, a nonzero eigenvalue, and the vertices that are not
/// downers for it — each one a counterexample to the all-downers
/// conjecture.
#[derive(Debug, Clone)]
pub struct ChainNeutralFinding {
    pub spec: GraphSpec,
    pub lambda: f64,
    pub multiplicity: usize,
    pub vertices: Vec<FindingVertex>,
    /// Exact-route agreement when λ matches a known minimal polynomial.
    pub cross_validated: Option<bool>,
}

impl ChainNeutralFinding {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spec": self.spec.to_string(),
            "lambda": json_f64(self.lambda),
            "multiplicity": self.multiplicity,
            "vertices": self.vertices.iter().map(|v| json!({
                "id": v.id,
                "cell": v.cell.map(|c| c.to_string()),
                "type": v.vertex_type.as_str(),
            })).collect::<Vec<_>>(),
            "cross_validated": self.cross_validated,
        })
    }
}

/// Exhaustive scan of all DNG specs within the bounds for non-downer
/// vertices at nonzero eigenvalues. Findings come out in enumeration
/// order, eigenvalues descending within a spec.
pub fn search_chain_neutrals(max_h: usize, max_cell: usize) -> Result<Vec<ChainNeutralFinding>> {
    check_bound("max_h", max_h, 1)?;
    check_bound("max_cell", max_cell, 1)?;
    let mut findings = Vec::new();
    for spec in enumerate_specs(Family::Dng, max_h, max_cell) {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let tol = spectrum.cluster_tol();
        for cluster in spectrum.clusters() {
            if cluster.value.abs() <= tol {
                continue;
            }
            let downers = downers_via_eigenspace(&spectrum, cluster);
            let non_downers: Vec<usize> = (0..g.order()).filter(|v| !downers.contains(v)).collect();
            if non_downers.is_empty() {
                continue;
            }
            let vertices = non_downers
                .iter()
                .map(|&v| {
                    let sub = g.delete_vertex(v)?;
                    let k_sub = numeric_multiplicity(&sub, cluster.value);
                    let vertex_type = match k_sub.cmp(&cluster.multiplicity) {
                        std::cmp::Ordering::Less => VertexType::Downer,
                        std::cmp::Ordering::Equal => VertexType::Neutral,
                        std::cmp::Ordering::Greater => VertexType::Parter,
                    };
                    Ok(FindingVertex {
                        id: v,
                        cell: g.label(v),
                        vertex_type,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let cross_validated = snap_to_algebraic(cluster.value, tol)
                .map(|alg| cross_validate(&g, &alg))
                .transpose()?;
            findings.push(ChainNeutralFinding {
                spec: spec.clone(),
                lambda: cluster.value,
                multiplicity: cluster.multiplicity,
                vertices,
                cross_validated,
            });
        }
    }
    Ok(findings)
}

/// Verdict for the `V_h` cell in the `λ = −m_h` survey.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellVerdict {
    AllDowner,
    AllNeutral,
    Mixed,
}

impl CellVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CellVerdict::AllDowner => "all-downer",
            CellVerdict::AllNeutral => "all-neutral",
            CellVerdict::Mixed => "mixed",
        }
    }
}

/// An NSG with `m_h ≥ 2` where `−m_h` actually is an eigenvalue, together
/// with the observed type of the `V_h` cell.
#[derive(Debug, Clone)]
pub struct RemarkMhFinding {
    pub spec: GraphSpec,
    pub m_h: usize,
    pub multiplicity: usize,
    pub verdict: CellVerdict,
}

impl RemarkMhFinding {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spec": self.spec.to_string(),
            "lambda": -(self.m_h as i64),
            "multiplicity": self.multiplicity,
            "v_h": self.verdict.as_str(),
        })
    }
}

/// Surveys all NSG specs with `m_h ≥ 2` in the bounds: whenever `−m_h` is
/// an eigenvalue (decided exactly), records whether `V_h` is all-downer,
/// all-neutral, or mixed. Both outcomes are findings; whether the
/// all-downer case occurs at all is the open question.
pub fn search_remark_mh(max_h: usize, max_cell: usize) -> Result<Vec<RemarkMhFinding>> {
    check_bound("max_h", max_h, 1)?;
    check_bound("max_cell", max_cell, 2)?;
    let mut findings = Vec::new();
    for spec in enumerate_specs(Family::Nsg, max_h, max_cell) {
        let m_h = *spec.m().last().expect("nonempty");
        if m_h < 2 {
            continue;
        }
        let g = build(&spec);
        let lambda = BigInt::from(-(m_h as i64));
        let k = integer_nullity(&g, &lambda);
        if k == 0 {
            continue;
        }
        let vh = g.cell_vertices(CellTag::v(spec.h()));
        let mut downer = 0;
        let mut neutral = 0;
        for &v in &vh {
            let k_sub = integer_nullity(&g.delete_vertex(v)?, &lambda);
            if k_sub + 1 == k {
                downer += 1;
            } else if k_sub == k {
                neutral += 1;
            }
        }
        let verdict = if downer == vh.len() {
            CellVerdict::AllDowner
        } else if neutral == vh.len() {
            CellVerdict::AllNeutral
        } else {
            CellVerdict::Mixed
        };
        findings.push(RemarkMhFinding {
            spec,
            m_h,
            multiplicity: k,
            verdict,
        });
    }
    Ok(findings)
}

fn check_bound(what: &'static str, got: usize, min: usize) -> Result<()> {
    if got < min {
        return Err(Error::BadBound { what, min, got });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_and_count() {
        let specs = enumerate_specs(Family::Dng, 2, 2);
        // h=1: 2*2, h=2: 4*4
        assert_eq!(specs.len(), 4 + 16);
        assert_eq!(specs[0].to_string(), "dng:1;1");
        assert_eq!(specs[1].to_string(), "dng:1;2");
        assert_eq!(specs[2].to_string(), "dng:2;1");
        assert_eq!(specs[4].to_string(), "dng:1,1;1,1");
        assert_eq!(specs[5].to_string(), "dng:1,1;1,2");
        assert_eq!(specs.last().unwrap().to_string(), "dng:2,2;2,2");
    }

    #[test]
    fn random_specs_are_reproducible() {
        let a = random_specs(Family::Nsg, 10, 5, 4, 7);
        let b = random_specs(Family::Nsg, 10, 5, 4, 7);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|s| s.h() <= 5 && s.m().iter().chain(s.n()).all(|&c| (1..=4).contains(&c))));
        let c = random_specs(Family::Nsg, 10, 5, 4, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn half_graph_search_small() {
        // H(1..4): only H(4) has non-downer vertices, at lambda = ±1
        let findings = search_chain_neutrals(4, 1).unwrap();
        assert_eq!(findings.len(), 2);
        for f in &findings {
            assert_eq!(f.spec.to_string(), "dng:1,1,1,1;1,1,1,1");
            assert!((f.lambda.abs() - 1.0).abs() < 1e-7);
            let ids: Vec<usize> = f.vertices.iter().map(|v| v.id).collect();
            assert_eq!(ids, vec![1, 5]); // u_2 and v_2
            assert!(f
                .vertices
                .iter()
                .all(|v| v.vertex_type == VertexType::Neutral));
            assert_eq!(f.cross_validated, Some(true));
        }
        assert!(findings[0].lambda > findings[1].lambda);
    }

    #[test]
    fn complete_bipartite_has_no_findings() {
        // h = 1: complete bipartite graphs, Perron-type eigenvectors have
        // no zero entries
        assert!(search_chain_neutrals(1, 4).unwrap().is_empty());
    }

    #[test]
    fn remark_mh_survey_includes_classic_example() {
        let findings = search_remark_mh(3, 3).unwrap();
        let hit = findings
            .iter()
            .find(|f| f.spec.to_string() == "nsg:2,2,2;2,3,2")
            .expect("classic example enumerated");
        assert_eq!(hit.verdict, CellVerdict::AllNeutral);
        assert_eq!(hit.multiplicity, 1);
        assert_eq!(hit.m_h, 2);
        // every finding has -m_h in the spectrum by construction
        for f in &findings {
            assert!(f.multiplicity >= 1);
        }
    }

    #[test]
    fn remark_mh_enumerates_without_findings() {
        // (2;1) and (2;2) are surveyed but -m_h is not an eigenvalue of
        // either, so the report is empty
        assert!(search_remark_mh(1, 2).unwrap().is_empty());
    }

    #[test]
    fn remark_mh_bounds() {
        assert!(matches!(
            search_remark_mh(3, 1),
            Err(Error::BadBound { .. })
        ));
        assert!(matches!(
            search_chain_neutrals(0, 1),
            Err(Error::BadBound { .. })
        ));
    }

    #[test]
    fn small_chain_search_is_clean_or_validated() {
        // max_h = 2, max_cell = 2: expect no findings; any finding must
        // cross-validate
        let findings = search_chain_neutrals(2, 2).unwrap();
        for f in &findings {
            assert_eq!(f.cross_validated, Some(true), "{}", f.spec);
        }
        assert!(findings.is_empty());
    }
}
