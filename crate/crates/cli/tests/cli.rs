use std::process::Command as Process;

use mufgl::fgl::{compare_bivariate, fgl_sum, hopf_sides, miscenko_log};
use mufgl::hurewicz::hurewicz_bmu;
use mufgl::{Poly, Rational, Series};
use mufgl_cli::commands::report_to_json;
use mufgl_cli::json;
use mufgl_cli::{main_with_args, EXIT_OK, EXIT_USAGE};
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["mufgl"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&run_ok(args)).unwrap()
}

#[test]
fn logarithm_text() {
    assert_eq!(run_ok(&["logmu", "--order", "3", "--format", "text"]), "z + (1/2)·CP1·z^2 + (1/3)·CP2·z^3\n");
}

#[test]
fn hurewicz_bmu_text() {
    assert_eq!(run_ok(&["hurewicz", "bmu", "1", "--format", "text"]), "b(1)\n");
    assert_eq!(run_ok(&["hurewicz", "bmu", "2"]), "b(2) - h1·b(1)\n");
}

#[test]
fn hurewicz_cp_reports_oracle() {
    let out = run_ok(&["hurewicz", "cp", "2"]);
    assert_eq!(out, "h(CP2) = 6·h1^2 - 3·h2\noracle = 6·h1^2 - 3·h2\nagree = true\n");
    let v = json_of(&["hurewicz", "cp", "4", "--format", "json"]);
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(json::poly_from_json(&v["value"]).unwrap(), json::poly_from_json(&v["oracle"]).unwrap());
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "divisibility", "--max-k", "12"],
        vec!["verify", "hopf", "--order", "5"],
        vec!["verify", "additive", "--order", "5"],
        vec!["verify", "integrality", "--max-n", "6"],
        vec!["verify", "symfunc", "--max-n", "6"],
        vec!["verify", "roundtrip", "--order", "8"],
    ] {
        let out = run_ok(&args);
        assert!(out.starts_with("ok "), "{args:?}: {out}");
    }
    let v = json_of(&["verify", "divisibility", "--max-k", "12", "--format", "json"]);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["cases"], Value::from(12));
}

#[test]
fn failing_report_serializes_discrepancy() {
    let (mut lhs, rhs) = hopf_sides::<Rational>(3).unwrap();
    lhs.set_coeff(1, 1, &lhs.coeff(1, 1) + &Poly::one());
    let report = compare_bivariate("faulty", &lhs, &rhs).unwrap();
    let v = report_to_json(&report);
    assert_eq!(v["passed"], Value::Bool(false));
    assert_eq!(v["failure"]["location"], Value::from("z0^1·z1^1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["fgl-sum", "--order", "5", "--format", "json"],
        vec!["bmu", "--order", "6"],
        vec!["twist", "4"],
    ] {
        assert_eq!(run_ok(&args), run_ok(&args));
    }
}

#[test]
fn json_and_text_render_the_same_value() {
    for cmd in ["logmu", "expmu", "bmu"] {
        for image in [None, Some("hurewicz")] {
            let mut args = vec![cmd, "--order", "6"];
            if let Some(i) = image {
                args.extend(["--image", i]);
            }
            let text = run_ok(&args);
            args.extend(["--format", "json"]);
            let s = json::series_from_json(&json_of(&args)).unwrap();
            assert_eq!(format!("{s}\n"), text, "{args:?}");
        }
    }
    let text = run_ok(&["fgl-sum", "--order", "5"]);
    let f = json::bi_series_from_json(&json_of(&["fgl-sum", "--order", "5", "--format", "json"])).unwrap();
    assert_eq!(format!("{f}\n"), text);
    assert_eq!(f, fgl_sum::<Rational>(5).unwrap());

    let text = run_ok(&["hurewicz", "bmu", "5"]);
    let d = json::divided_from_json(&json_of(&["hurewicz", "bmu", "5", "--format", "json"])).unwrap();
    assert_eq!(format!("{d}\n"), text);
    assert_eq!(d, hurewicz_bmu(5).unwrap());
}

#[test]
fn series_json_schema() {
    let v = json_of(&["logmu", "--order", "2", "--format", "json"]);
    assert_eq!(v["variable"], "z");
    assert_eq!(v["order"], 2);
    assert_eq!(v["coefficients"][1]["power"], 2);
    assert_eq!(v["coefficients"][1]["terms"][0]["coeff"], "1/2");
    assert_eq!(v["coefficients"][1]["terms"][0]["monomial"]["CP1"], 1);
    assert_eq!(json::series_from_json(&v).unwrap(), miscenko_log::<Rational>(2).unwrap());

    let v = json_of(&["fgl-sum", "--order", "2", "--format", "json"]);
    assert_eq!(v["coefficients"][2]["powers"], serde_json::json!([1, 1]));
    let v = json_of(&["hurewicz", "bmu", "2", "--format", "json"]);
    assert_eq!(v["entries"][0]["divided_index"], 1);
}

#[test]
fn twist_outputs() {
    assert_eq!(run_ok(&["twist", "1"]), "CP1(t·w) = t·vol(CP_1,w)\n");
    assert_eq!(run_ok(&["twist", "2"]), "CP2(t·w) = t^2·vol(CP_2,w) + (1/2)·CP1·t·vol(CP_1,w)\n");
    let v = json_of(&["twist", "2", "--t", "2", "--format", "json"]);
    assert_eq!(v["t"], "2");
    let d = json::divided_from_json(&v["expansion"]).unwrap();
    assert_eq!(d.coeff(2), Poly::integer(4));
    assert_eq!(d.coeff(1), Poly::cp(1));
}

#[test]
fn cumulants_output() {
    assert_eq!(run_ok(&["cumulants", "--kappa", "0,1", "--max-n", "4"]), "m0 = 1\nm1 = 0\nm2 = 1\nm3 = 0\nm4 = 3\n");
    let v = json_of(&["cumulants", "--kappa", "1/2", "--max-n", "3", "--format", "json"]);
    assert_eq!(v["moments"], serde_json::json!(["1", "1/2", "1/4", "1/8"]));
    // extra cumulants beyond max-n are ignored
    assert_eq!(run_ok(&["cumulants", "--kappa", "-1,5,7", "--max-n", "1"]), "m0 = 1\nm1 = -1\n");
}

#[test]
fn symfunc_conversions() {
    assert_eq!(run_ok(&["symfunc", "convert", "--from", "h", "--to", "p", "--degree", "2"]), "h2 = (1/2)·p1^2 + (1/2)·p2\n");
    assert_eq!(run_ok(&["symfunc", "convert", "--from", "p", "--to", "h", "--degree", "2"]), "p2 = -h1^2 + 2·h2\n");
    assert_eq!(run_ok(&["symfunc", "convert", "--from", "e", "--to", "h", "--degree", "2"]), "e2 = h1^2 - h2\n");
    assert_eq!(run_ok(&["symfunc", "convert", "--from", "e", "--to", "e", "--degree", "3"]), "e3 = e3\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["logmu", "--order", "0"],
        vec!["logmu", "--format", "yaml"],
        vec!["hurewicz", "bmu", "0"],
        vec!["twist", "2", "--t", "1/0"],
        vec!["twist", "2", "--t", "-3"],
        vec!["cumulants", "--kappa", "1,x", "--max-n", "2"],
        vec!["symfunc", "convert", "--from", "q", "--to", "h", "--degree", "2"],
        vec!["verify", "nothing"],
        vec![],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mufgl");
    let ok = Process::new(bin).args(["verify", "divisibility", "--max-k", "12"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "ok h(CP_(k-1)) divisible by k, k <= 12 (12 cases)\n");
    let bad = Process::new(bin).args(["expmu", "--order", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-5i64..=5, 1i64..=4, 0usize..5, 0u32..3), 0..5).prop_map(|terms| {
        let gens = [Poly::cp(2), Poly::h(1), Poly::p(3), Poly::e(2), Poly::b()];
        let mut p = Poly::zero();
        for (num, den, g, e) in terms {
            p += &gens[g].pow(e).scale_int(num).div_int(den);
        }
        p
    })
}

proptest! {
    #[test]
    fn series_json_roundtrip(coeffs in prop::collection::vec(small_poly(), 1..6)) {
        let s = Series::new(coeffs.len() - 1, coeffs);
        let text = json::series_to_json(&s).to_string();
        let back = json::series_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn divided_json_roundtrip(entries in prop::collection::vec((0u32..6, small_poly()), 0..5)) {
        let d = mufgl::Divided::from_entries(entries.into_iter().map(|(r, p)| (r, p.kill_family(mufgl::Family::B))));
        let back = json::divided_from_json(&json::divided_to_json(&d)).unwrap();
        prop_assert_eq!(back, d);
    }
}
