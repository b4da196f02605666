//! Executable verification of the structural theorems of threshold and
//! chain graphs, the counterexample constructions for the all-downers
//! conjecture, and exhaustive/randomized search harnesses.

mod claims;
mod patterns;
mod results;
mod search;

pub use claims::{
    all_passed, check_adjacent_cells_all, check_chain_boundary_downers,
    check_chain_interval_corollary, check_chain_localization_scan, check_interval_corollary,
    check_neutral_localization_scan, check_nsg_boundary_downers, run_claims, verify_adjacent_cells,
    verify_chain_localization, verify_dng_spectrum, verify_family_membership,
    verify_lambda_n_downers, verify_neutral_localization, verify_nsg_downers, verify_nsg_spectrum,
    verify_tables, CLAIM_NAMES,
};
pub use patterns::{
    build_period10, build_period6, extend_by_duplication, negate_pattern, table1_identities_hold,
    table2_identities_hold, EigenvectorPattern, Zw,
};
pub use results::{Status, VerificationResult};
pub use search::{
    enumerate_specs, random_specs, search_chain_neutrals, search_remark_mh, CellVerdict,
    ChainNeutralFinding, FindingVertex, RemarkMhFinding,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AlgebraicNumber;
    use crate::graphs::{GraphSpec, Side};
    use crate::Error;

    fn spec(s: &str) -> GraphSpec {
        GraphSpec::parse(s).unwrap()
    }

    #[test]
    fn nsg_spectrum_claims() {
        for s in ["nsg:1;1", "nsg:3;1", "nsg:2,2,2;2,3,2"] {
            let r = verify_nsg_spectrum(&spec(s)).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.witnesses);
        }
    }

    #[test]
    fn dng_spectrum_claims() {
        for s in ["dng:1;1", "dng:1,1;1,1", "dng:2;2", "dng:2,1,3;1,2,2"] {
            let r = verify_dng_spectrum(&spec(s)).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.witnesses);
        }
    }

    #[test]
    fn nsg_downers_exceptional_case() {
        let sp = spec("nsg:2,2,2;2,3,2");
        let r = verify_nsg_downers(&sp, &AlgebraicNumber::integer(-2)).unwrap();
        assert!(r.passed());
        assert!(r.notes.iter().any(|n| n.contains("exceptional")));

        assert!(matches!(
            verify_nsg_downers(&spec("nsg:1;1"), &AlgebraicNumber::minus_one()),
            Err(Error::Premise(_))
        ));

        // -sqrt(3) on the star: all four boundary cells downer
        let lam = AlgebraicNumber::new(
            crate::exact::IntPoly::from_i64(&[-3, 0, 1]),
            -1.7320508,
            0.1,
        )
        .unwrap();
        let r = verify_nsg_downers(&spec("nsg:3;1"), &lam).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn adjacent_cells_examples() {
        let r = verify_adjacent_cells(&spec("nsg:4,1,3,1,1;1,1,1,2,1"), 1.0).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);

        let r = verify_adjacent_cells(&spec("half:7"), 1.0).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);

        let r = verify_adjacent_cells(&spec("nsg:2,4,4,2;1,1,1,2"), -2.0).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);

        assert!(verify_adjacent_cells(&spec("nsg:1;1"), 0.25).is_err());
        assert!(verify_adjacent_cells(&spec("dng:2;2"), 0.0).is_err());
    }

    #[test]
    fn lambda_n_examples() {
        for s in ["nsg:1;1", "nsg:2,2,2;2,3,2", "nsg:3;1", "nsg:1;2"] {
            let r = verify_lambda_n_downers(&spec(s)).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.witnesses);
        }
    }

    #[test]
    fn neutral_localization_u_case() {
        // U_2 all neutral for lambda_3 = 1
        let r =
            verify_neutral_localization(&spec("nsg:4,1,3,1,1;1,1,1,2,1"), Side::U, 2, 3).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        // U_4 as well
        let r =
            verify_neutral_localization(&spec("nsg:4,1,3,1,1;1,1,1,2,1"), Side::U, 4, 3).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn neutral_localization_v_case() {
        let r = verify_neutral_localization(&spec("nsg:2,4,4,2;1,1,1,2"), Side::V, 2, 16).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        let r = verify_neutral_localization(&spec("nsg:2,4,4,2;1,1,1,2"), Side::V, 4, 16).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn neutral_localization_errors() {
        // U_1 can never be used: index below range
        assert!(matches!(
            verify_neutral_localization(&spec("nsg:2,2,2;2,3,2"), Side::U, 1, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        // cell that is not all-neutral
        assert!(matches!(
            verify_neutral_localization(&spec("nsg:4,1,3,1,1;1,1,1,2,1"), Side::U, 3, 3),
            Err(Error::CellNotNeutral { .. })
        ));
        // lambda = -1 excluded
        let sp = spec("nsg:2,2,2;2,3,2");
        let spectrum = crate::numeric::eig_sym(&crate::graphs::build(&sp));
        let idx = spectrum
            .values()
            .iter()
            .position(|&v| (v + 1.0).abs() < 1e-9)
            .unwrap()
            + 1;
        assert!(matches!(
            verify_neutral_localization(&sp, Side::U, 2, idx),
            Err(Error::Premise(_))
        ));
    }

    #[test]
    fn interval_example() {
        // I_2 of NSG(1,1,5;1,1,8) is about (-1.48, 2.17)
        let r = check_interval_corollary(&spec("nsg:1,1,5;1,1,8")).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.starts_with("I_2"))
            .expect("interval witness");
        let nums: Vec<f64> = w
            .trim_start_matches("I_2 = (")
            .trim_end_matches(')')
            .split(", ")
            .map(|t| t.parse().unwrap())
            .collect();
        assert!((nums[0] + 1.48).abs() <= 0.01, "{w}");
        assert!((nums[1] - 2.17).abs() <= 0.01, "{w}");
    }

    #[test]
    fn chain_localization_scan_on_h7() {
        // H(7) has all-neutral cells u_3 (lambda = ±ω, s=3 in range) and
        // u_2/u_5 (lambda = ±1; s=5 in range, s=2 skipped)
        let results = check_chain_localization_scan(&spec("half:7")).unwrap();
        assert!(all_passed(&results));
        assert!(results.iter().any(|r| r.status == Status::Pass));
        assert!(results.iter().any(|r| r.status == Status::Skipped));
    }

    #[test]
    fn run_claims_smoke() {
        let rs = run_claims(&spec("nsg:2,2,2;2,3,2"), None).unwrap();
        assert!(
            all_passed(&rs),
            "{:#?}",
            rs.iter().filter(|r| !r.passed()).collect::<Vec<_>>()
        );
        assert!(rs.len() >= 6);

        let rs = run_claims(&spec("half:4"), None).unwrap();
        assert!(all_passed(&rs));

        let rs = run_claims(&spec("dng:1,1;1,1"), Some("dng-spectrum")).unwrap();
        assert_eq!(rs.len(), 1);
        assert!(rs[0].passed());

        // inapplicable claim gives a skip, not an error
        let rs = run_claims(&spec("nsg:1;1"), Some("dng-spectrum")).unwrap();
        assert_eq!(rs[0].status, Status::Skipped);

        let tables = run_claims(&spec("nsg:1;1"), Some("tables")).unwrap();
        assert!(all_passed(&tables));
    }
}
