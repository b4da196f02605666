//! Randomized structural invariants of both graph families, run over
//! seeded and property-generated spec suites.

use nestspec::exact::{
    char_poly, eigenvalue_multiplicity, exact_multiplicity, integer_nullity, root_multiplicity,
    AlgebraicNumber,
};
use nestspec::graphs::{build, validate_family, CellTag, Family, GraphSpec, Side};
use nestspec::numeric::{check_interlacing, eig_sym, numeric_multiplicity};
use nestspec::verify::random_specs;
use nestspec::vertex_types::{classify_all, cross_validate, downers_via_eigenspace, VertexType};
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

fn spec_strategy(
    family: Family,
    max_h: usize,
    max_cell: usize,
) -> impl Strategy<Value = GraphSpec> {
    (1..=max_h).prop_flat_map(move |h| {
        (vec(1..=max_cell, h), vec(1..=max_cell, h))
            .prop_map(move |(m, n)| GraphSpec::new(family, m, n).expect("positive cells"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nsg_builds_are_threshold_graphs(spec in spec_strategy(Family::Nsg, 6, 4)) {
        let g = build(&spec);
        prop_assert!(validate_family(&g, Family::Nsg));
    }

    #[test]
    fn dng_builds_are_chain_graphs(spec in spec_strategy(Family::Dng, 6, 4)) {
        let g = build(&spec);
        prop_assert!(validate_family(&g, Family::Dng));
    }

    #[test]
    fn vertex_deletion_stays_in_family(spec in spec_strategy(Family::Nsg, 4, 3),
                                       dspec in spec_strategy(Family::Dng, 4, 3)) {
        let g = build(&spec);
        for v in 0..g.order() {
            prop_assert!(validate_family(&g.delete_vertex(v).unwrap(), Family::Nsg));
        }
        let d = build(&dspec);
        for v in 0..d.order() {
            prop_assert!(validate_family(&d.delete_vertex(v).unwrap(), Family::Dng));
        }
    }

    #[test]
    fn duplicate_then_delete_is_identity(spec in spec_strategy(Family::Dng, 5, 3), sel in any::<prop::sample::Index>()) {
        let g = build(&spec);
        let v = sel.index(g.order());
        let dup = g.duplicate_vertex(v).unwrap();
        prop_assert_eq!(dup.delete_vertex(g.order()).unwrap(), g);
    }

    #[test]
    fn char_poly_matches_eval_oracle(spec in spec_strategy(Family::Nsg, 4, 3), t in -5i64..=5) {
        // φ(t) = det(tI − A) via fraction-free elimination
        let g = build(&spec);
        let p = char_poly(&g);
        let n = g.order();
        let shifted: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let mut x = if g.has_edge(i, j) { BigInt::from(-1) } else { BigInt::from(0) };
                if i == j { x += BigInt::from(t); }
                x
            }).collect())
            .collect();
        prop_assert_eq!(p.eval_int(&BigInt::from(t)), nestspec::exact::bareiss_det(&shifted));
    }
}

#[test]
fn nsg_multiplicity_formulas_randomized() {
    for spec in random_specs(Family::Nsg, 40, 5, 4, 11) {
        let g = build(&spec);
        let h = spec.h();
        let m_h = *spec.m().last().unwrap();
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::zero()),
            spec.m_total() - h,
            "{spec}"
        );
        let expect = if m_h == 1 {
            spec.n_total() - h + 1
        } else {
            spec.n_total() - h
        };
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::minus_one()),
            expect,
            "{spec}"
        );
    }
}

#[test]
fn dng_zero_multiplicity_randomized() {
    for spec in random_specs(Family::Dng, 40, 5, 4, 12) {
        let g = build(&spec);
        assert_eq!(
            eigenvalue_multiplicity(&g, &AlgebraicNumber::zero()),
            spec.m_total() + spec.n_total() - 2 * spec.h(),
            "{spec}"
        );
    }
}

#[test]
fn exact_and_numeric_multiplicities_agree() {
    let mut specs = random_specs(Family::Nsg, 15, 5, 3, 13);
    specs.extend(random_specs(Family::Dng, 15, 5, 3, 14));
    let named = [
        AlgebraicNumber::zero(),
        AlgebraicNumber::minus_one(),
        AlgebraicNumber::omega(),
        AlgebraicNumber::minus_omega(),
    ];
    for spec in specs {
        let g = build(&spec);
        for lambda in &named {
            assert_eq!(
                numeric_multiplicity(&g, lambda.approx()),
                exact_multiplicity(&g, lambda),
                "{spec} at {lambda}"
            );
        }
    }
}

#[test]
fn zero_multiplicity_plus_nonzero_count_is_order() {
    for spec in random_specs(Family::Dng, 20, 5, 3, 15) {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let nonzero = spectrum
            .values()
            .iter()
            .filter(|v| v.abs() > spectrum.cluster_tol())
            .count();
        assert_eq!(
            integer_nullity(&g, &BigInt::from(0)) + nonzero,
            g.order(),
            "{spec}"
        );
    }
}

#[test]
fn accounted_degrees_bounded_by_order() {
    for spec in random_specs(Family::Nsg, 15, 4, 3, 16) {
        let g = build(&spec);
        let p = char_poly(&g);
        let named = [
            AlgebraicNumber::zero(),
            AlgebraicNumber::minus_one(),
            AlgebraicNumber::omega(),
            AlgebraicNumber::minus_omega(),
            AlgebraicNumber::golden(),
            AlgebraicNumber::minus_golden(),
        ];
        let acc: usize = named
            .iter()
            .map(|l| l.degree() * root_multiplicity(&p, l))
            .sum();
        assert!(acc <= g.order(), "{spec}: accounted {acc}");
    }
}

#[test]
fn interlacing_randomized() {
    let mut specs = random_specs(Family::Nsg, 10, 4, 3, 17);
    specs.extend(random_specs(Family::Dng, 10, 4, 3, 18));
    for spec in specs {
        let g = build(&spec);
        if g.order() < 2 {
            continue;
        }
        for v in 0..g.order() {
            assert!(
                check_interlacing(&g, &g.delete_vertex(v).unwrap()).unwrap(),
                "{spec} v={v}"
            );
        }
    }
}

#[test]
fn largest_eigenvalue_has_only_downers() {
    let mut specs = random_specs(Family::Nsg, 10, 4, 3, 19);
    specs.extend(random_specs(Family::Dng, 10, 4, 3, 20));
    for spec in specs {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let top = &spectrum.clusters()[0];
        let downers = downers_via_eigenspace(&spectrum, top);
        assert_eq!(downers.len(), g.order(), "{spec}");
    }
}

#[test]
fn no_parter_outside_zero_minus_one() {
    // NSG: Parter vertices can only appear for 0 or −1; DNG: only for 0.
    // Cells are uniform for simple eigenvalues away from those values.
    let mut specs = random_specs(Family::Nsg, 8, 4, 3, 21);
    specs.extend(random_specs(Family::Dng, 8, 4, 3, 22));
    for spec in specs {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let tol = spectrum.cluster_tol();
        for cluster in spectrum.clusters() {
            let v = cluster.value;
            let excluded = match spec.family() {
                Family::Nsg => v.abs() <= tol || (v + 1.0).abs() <= tol,
                Family::Dng => v.abs() <= tol,
            };
            if excluded {
                continue;
            }
            let lambda = match nestspec::exact::snap_to_algebraic(v, tol) {
                Some(a) => a,
                None => continue, // irrational without a known minpoly: numeric-only here
            };
            let report = classify_all(&g, &lambda).unwrap();
            assert!(
                !report.per_vertex.contains(&VertexType::Parter),
                "{spec} at {v}"
            );
            assert!(report.anomalies.is_empty(), "{spec} at {v}: mixed cell");
        }
    }
}

#[test]
fn cross_validation_randomized() {
    let mut specs = random_specs(Family::Nsg, 10, 4, 3, 23);
    specs.extend(random_specs(Family::Dng, 10, 4, 3, 24));
    let named = [
        AlgebraicNumber::zero(),
        AlgebraicNumber::minus_one(),
        AlgebraicNumber::omega(),
    ];
    for spec in specs {
        let g = build(&spec);
        for lambda in &named {
            if exact_multiplicity(&g, lambda) == 0 {
                continue;
            }
            assert!(cross_validate(&g, lambda).unwrap(), "{spec} at {lambda}");
        }
    }
}

#[test]
fn exact_and_numeric_mainness_agree() {
    let mut specs = random_specs(Family::Nsg, 12, 4, 3, 27);
    specs.extend(random_specs(Family::Dng, 12, 4, 3, 28));
    for spec in specs {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let tol = spectrum.cluster_tol();
        for cluster in spectrum.clusters() {
            let rounded = cluster.value.round();
            if (cluster.value - rounded).abs() > tol {
                continue; // exact mainness is defined for rational eigenvalues only
            }
            let lambda = AlgebraicNumber::integer(rounded as i64);
            let exact = nestspec::exact::is_main_exact(&g, &lambda).unwrap();
            let numeric = spectrum.is_main(cluster, spectrum.mainness_tol());
            assert_eq!(exact, numeric, "{spec} at {}", cluster.value);
        }
    }
}

#[test]
fn all_claims_pass_on_random_specs() {
    let mut specs = random_specs(Family::Nsg, 8, 5, 4, 29);
    specs.extend(random_specs(Family::Dng, 8, 5, 4, 30));
    for spec in specs {
        let results = nestspec::verify::run_claims(&spec, None).unwrap();
        assert!(
            nestspec::verify::all_passed(&results),
            "{spec}: {:?}",
            results
                .iter()
                .filter(|r| !r.passed())
                .map(|r| (&r.claim, &r.witnesses))
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn nsg_boundary_downers_randomized() {
    for spec in random_specs(Family::Nsg, 20, 4, 3, 25) {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let tol = spectrum.cluster_tol();
        let h = spec.h();
        let m_h = *spec.m().last().unwrap();
        for cluster in spectrum.clusters() {
            let v = cluster.value;
            if v.abs() <= tol || (v + 1.0).abs() <= tol {
                continue;
            }
            let downers = downers_via_eigenspace(&spectrum, cluster);
            for tag in [CellTag::u(1), CellTag::v(1), CellTag::u(h)] {
                for w in g.cell_vertices(tag) {
                    assert!(downers.contains(&w), "{spec} lambda={v} {tag}");
                }
            }
            if !(m_h >= 2 && (v + m_h as f64).abs() <= tol) {
                for w in g.cell_vertices(CellTag::v(h)) {
                    assert!(downers.contains(&w), "{spec} lambda={v} V_{h}");
                }
            }
        }
    }
}

#[test]
fn dng_boundary_downers_randomized() {
    for spec in random_specs(Family::Dng, 20, 4, 3, 26) {
        let g = build(&spec);
        let spectrum = eig_sym(&g);
        let tol = spectrum.cluster_tol();
        let h = spec.h();
        for cluster in spectrum.clusters() {
            if cluster.value.abs() <= tol {
                continue;
            }
            let downers = downers_via_eigenspace(&spectrum, cluster);
            for side in [Side::U, Side::V] {
                for index in [1, h] {
                    for w in g.cell_vertices(CellTag { side, index }) {
                        assert!(
                            downers.contains(&w),
                            "{spec} lambda={} {side:?}_{index}",
                            cluster.value
                        );
                    }
                }
            }
        }
    }
}
