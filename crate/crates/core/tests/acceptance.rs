//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! All comparisons are exact.

use std::time::{Duration, Instant};

use mufgl::fgl::{additive_image_check, hopf_check, FglContext};
use mufgl::hurewicz::{
    chern_oracle_cp, cumulants_to_moments, cycle_map, divisibility_check, hurewicz_bmu, hurewicz_bmu_via_series,
    hurewicz_cp, moments_via_series, twist_expansion_symbolic,
};
use mufgl::symfunc::verify_symfunc;
use mufgl::{Divided, Poly, Rational, Scalar};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    match limit {
        Some(limit) if elapsed > limit => {
            fail(format!("{} but took {:.2?} (limit {:.0?})", outcome.detail, elapsed, limit))
        }
        _ => outcome,
    }
}

fn prop_cross_validation() -> Outcome {
    for n in 1..=10 {
        let by_partitions = match hurewicz_bmu::<Rational>(n) {
            Ok(v) => v,
            Err(e) => return fail(format!("n={n}: {e}")),
        };
        let by_series = hurewicz_bmu_via_series::<Rational>(n).expect("series route");
        if by_partitions != by_series {
            return fail(format!("n={n}: partitions {by_partitions} vs series {by_series}"));
        }
    }
    pass("partition formula = series exponential for n <= 10")
}

fn hopf() -> Outcome {
    let report = hopf_check::<Rational>(8).expect("order 8");
    if report.passed() { pass(report.to_string()) } else { fail(report.to_string()) }
}

fn integrality() -> Outcome {
    for n in 1..=10 {
        match hurewicz_bmu::<Rational>(n) {
            Ok(expr) if expr.has_integer_coefficients() => {}
            Ok(expr) => return fail(format!("n={n}: {expr}")),
            Err(e) => return fail(format!("n={n}: {e}")),
        }
    }
    let report = mufgl::hurewicz::integrality_check::<Rational>(10);
    if report.passed() { pass("all coefficients of h(b^MU_n) integral, n <= 10") } else { fail(report.to_string()) }
}

fn divisibility() -> Outcome {
    match (1..=12).find(|&k| !divisibility_check(k)) {
        None => pass("h(CP_(k-1)) divisible by k for k <= 12"),
        Some(k) => fail(format!("k={k}: {}", hurewicz_cp::<Rational>(k - 1))),
    }
}

fn oracle() -> Outcome {
    for n in 0..=8 {
        let lagrange = hurewicz_cp::<Rational>(n);
        let chern = chern_oracle_cp::<Rational>(n);
        if lagrange != chern {
            return fail(format!("n={n}: {lagrange} vs {chern}"));
        }
    }
    pass("Lagrange inversion = normal-bundle pairing for n <= 8")
}

fn additive() -> Outcome {
    let report = additive_image_check::<Rational>(8).expect("order 8");
    if report.passed() { pass(report.to_string()) } else { fail(report.to_string()) }
}

fn roundtrip() -> Outcome {
    let report = FglContext::<Rational>::new(12).expect("order 12").roundtrip_check();
    if report.passed() { pass(report.to_string()) } else { fail(report.to_string()) }
}

fn corollary() -> Outcome {
    for n in 1..=6u32 {
        let tw = twist_expansion_symbolic::<Rational>(n).expect("n >= 1");
        if tw.coeff(n) != Poly::one() {
            return fail(format!("n={n}: leading coefficient {}", tw.coeff(n)));
        }
        let linear = Poly::cp(n - 1).div_int(i64::from(n));
        if tw.coeff(1) != linear {
            return fail(format!("n={n}: linear coefficient {} != {linear}", tw.coeff(1)));
        }
        let text = tw.to_string();
        let lead = if n == 1 { "t·vol(CP_1,w)".to_string() } else { format!("t^{n}·vol(CP_{n},w)") };
        if !text.starts_with(&format!("CP{n}(t·w) = {lead}")) {
            return fail(format!("n={n}: rendered as {text}"));
        }
        if tw.leading_term() != Divided::divided(n) {
            return fail(format!("n={n}: CP_i -> 0 leaves {}", tw.leading_term()));
        }
    }
    pass("leading t^n·vol(CP_n), linear t·CP_(n-1)/n·vol(CP_1), Weyl term for n <= 6")
}

fn symfunc() -> Outcome {
    let report = verify_symfunc::<Rational>(12);
    if report.passed() { pass(report.to_string()) } else { fail(report.to_string()) }
}

fn cycle() -> Outcome {
    for n in 1..=10 {
        let image = cycle_map(&hurewicz_bmu::<Rational>(n).expect("n >= 1"));
        if image != Divided::divided(n) {
            return fail(format!("n={n}: {image}"));
        }
    }
    pass("cycle map sends h(b^MU_n) to b(n) for n <= 10")
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn cumulants() -> Outcome {
    let families: Vec<Box<dyn Fn(i64) -> Rational>> = vec![
        Box::new(|k| q(k, k + 1)),
        Box::new(|k| q(if k % 2 == 0 { -1 } else { 2 }, k)),
        Box::new(|k| Rational::from_i64(k * k - 3)),
        Box::new(|k| q(1, 1 + (k * 7) % 5)),
    ];
    for (i, family) in families.iter().enumerate() {
        for len in 1..=10 {
            let kappa: Vec<Rational> = (1..=len).map(family).collect();
            let bell = cumulants_to_moments(&kappa);
            let series = moments_via_series(&kappa).expect("exp");
            if bell != series {
                return fail(format!("family {i}, N={len}: moments differ"));
            }
        }
    }
    let sigma = q(7, 3);
    let m = cumulants_to_moments(&[q(0, 1), sigma.clone(), q(0, 1), q(0, 1)]);
    if m[4] != Rational::from_i64(3) * sigma.clone() * sigma.clone() || m[2] != sigma || m[3] != q(0, 1) {
        return fail(format!("Gaussian moments {m:?}"));
    }
    pass("Bell-polynomial moments = series exponential for N <= 10; Gaussian m_4 = 3·k_2^2")
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 11] = [
        ("1 partition formula vs series engine", prop_cross_validation, Some(Duration::from_secs(10))),
        ("2 hopf relation at total degree 8", hopf, Some(Duration::from_secs(30))),
        ("3 integrality of h(b^MU_n), n <= 10", integrality, None),
        ("4 divisibility, k <= 12", divisibility, None),
        ("5 Chern-number oracle, n <= 8", oracle, None),
        ("6 additive image at total degree 8", additive, None),
        ("7 log/exp roundtrip at order 12", roundtrip, None),
        ("8 twist corollary, n <= 6", corollary, None),
        ("9 symmetric-function suite, degree 12", symfunc, None),
        ("10 cycle map, n <= 10", cycle, None),
        ("11 cumulant bridge, N <= 10", cumulants, None),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = within(outcome, elapsed, limit);
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name} ({elapsed:.2?}): {}", outcome.detail);
        if !outcome.ok {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}
