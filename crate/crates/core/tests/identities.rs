//! End-to-end run of the identity suite at the default order, the
//! high-order exactness checks, and the serialization surface the reports
//! expose.

use ellgw::gw::f_product;
use ellgw::rational::Rational;
use ellgw::verify::{all_passed, run_all, VerifyConfig};
use ellgw::yz::{doubling_check, doubling_ode_residual, substituted_ode_residual};

#[test]
fn full_suite_passes_at_default_order() {
    let reports = run_all(&VerifyConfig::default());
    for report in &reports {
        assert!(
            report.passed,
            "{} failed at order {}: {:?}",
            report.name, report.order, report.detail
        );
    }
    assert!(all_passed(&reports));
    // 2 arith + 4×5 gw + 4 lattice + 1 surface + 7 yz
    assert_eq!(reports.len(), 34);
}

#[test]
fn high_order_exactness() {
    assert!(substituted_ode_residual(128).is_zero());
    let target = f_product(2, 200)
        .substitute_power(2)
        .scale(&Rational::new(1, 8));
    assert!(doubling_ode_residual(&target).is_zero());
}

#[test]
fn reports_serialize_with_exact_strings() {
    let reports = run_all(&VerifyConfig::with_order(4));
    let json = serde_json::to_value(&reports).unwrap();
    let first = &json.as_array().unwrap()[0];
    assert!(first.get("name").is_some());
    assert!(first.get("passed").is_some());

    let report = doubling_check(8);
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["order"], 8);
    assert_eq!(json["passed"], true);
    // residual series serialize as arrays of exact rational strings
    assert_eq!(json["difference"][0], "0");
}

#[test]
fn tampered_suite_reports_failures() {
    let config = VerifyConfig {
        order: 16,
        g2_constant: Rational::zero(),
        ..Default::default()
    };
    let reports = run_all(&config);
    assert!(!all_passed(&reports));
}
