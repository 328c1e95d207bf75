//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `-- --nocapture`). All comparisons are
//! exact; the two runtime bounds are asserted with wall-clock timers.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use higgs_ih::blowup::{
    correction_theorem2, correction_theorem2_closed_form, correction_theorem3,
    correction_theorem3_closed_form, ip_p_upsilon, ip_p_upsilon_via_blowup, ip_upsilon,
    ip_upsilon_via_cone, kunneth_z2,
};
use higgs_ih::engine::{ip_m_closed, ip_m_pipeline, reference_table};
use higgs_ih::equivariant::rational_p_sl2_sigma;
use higgs_ih::polyring::Polynomial;
use higgs_ih::spaces::{classifying_so2_split, incidence_split, projective_space, tjtilde_split};
use higgs_ih::{Degree, Error, Genus};

fn genus(g: i64) -> Genus {
    Genus::new(g).unwrap()
}

fn report(n: u32, desc: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("[PASS] criterion {n}: {desc}"),
        Err(msg) => {
            println!("[FAIL] criterion {n}: {desc} — {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

#[test]
fn criterion_1_table_reproduction() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        for g in 2..=5usize {
            let got = ip_m_pipeline(genus(g as i64))
                .map_err(|e| e.to_string())?
                .polynomial();
            let expected = Polynomial::from_ints(reference_table(g).unwrap());
            if got != expected {
                return Err(format!("g = {g}: got {got}, expected {expected}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return Err(format!("runtime {elapsed:?} exceeds 1 s"));
        }
        Ok(())
    };
    report(
        1,
        "pipeline reproduces the g=2..5 tables exactly, under 1 s",
        run(),
    );
}

#[test]
fn criterion_2_route_equivalence() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        for g in 2..=30 {
            let pipeline = ip_m_pipeline(genus(g)).map_err(|e| e.to_string())?;
            let closed = ip_m_closed(genus(g)).map_err(|e| e.to_string())?;
            if pipeline.coefficients != closed.coefficients {
                return Err(format!("routes diverge at g = {g}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("runtime {elapsed:?} exceeds 10 s"));
        }
        Ok(())
    };
    report(
        2,
        "pipeline equals closed formula for g in 2..30, under 10 s",
        run(),
    );
}

#[test]
fn criterion_3_degree_law() {
    let run = || -> Result<(), String> {
        for g in 2..=30usize {
            let poly = ip_m_pipeline(genus(g as i64))
                .map_err(|e| e.to_string())?
                .polynomial();
            if poly.degree() != Degree::Finite(6 * g - 6) {
                return Err(format!(
                    "g = {g}: degree {} != {}",
                    poly.degree(),
                    6 * g - 6
                ));
            }
            if poly.coeff(0) != BigInt::from(1) {
                return Err(format!("g = {g}: constant term {}", poly.coeff(0)));
            }
            if !poly.is_nonnegative() {
                return Err(format!("g = {g}: negative coefficient present"));
            }
        }
        Ok(())
    };
    report(
        3,
        "degree 6g-6, nonzero top, nonnegative integer coefficients, constant 1, g in 2..30",
        run(),
    );
}

#[test]
fn criterion_4_deepest_singularity_closed_forms() {
    let run = || -> Result<(), String> {
        for g in 2..=20 {
            let g = genus(g);
            let closed = ip_p_upsilon(g).map_err(|e| e.to_string())?;
            let assembled = ip_p_upsilon_via_blowup(g).map_err(|e| e.to_string())?;
            if closed != assembled {
                return Err(format!("projectivized quotient differs at g = {g}"));
            }
            let closed = ip_upsilon(g).map_err(|e| e.to_string())?;
            let truncated = ip_upsilon_via_cone(g).map_err(|e| e.to_string())?;
            if closed != truncated {
                return Err(format!("affine cone quotient differs at g = {g}"));
            }
        }
        Ok(())
    };
    report(
        4,
        "deepest-singularity polynomials agree with both assembly routes, g in 2..20",
        run(),
    );
}

#[test]
fn criterion_5_shifted_kunneth_equivalence() {
    let run = || -> Result<(), String> {
        for g in 2..=20 {
            let g = genus(g);
            let literal = correction_theorem2(g).map_err(|e| e.to_string())?;
            let closed = correction_theorem2_closed_form(g).map_err(|e| e.to_string())?;
            if literal != closed {
                return Err(format!("theorem-2 correction differs at g = {g}"));
            }
            let literal = correction_theorem3(g).map_err(|e| e.to_string())?;
            let closed = correction_theorem3_closed_form(g).map_err(|e| e.to_string())?;
            if literal != closed {
                return Err(format!("theorem-3 correction differs at g = {g}"));
            }
        }
        Ok(())
    };
    report(
        5,
        "literal t(q)-rule corrections equal their closed forms, g in 2..20",
        run(),
    );
}

#[test]
fn criterion_6_split_series_identities() {
    let run = || -> Result<(), String> {
        for g in 2..=20usize {
            let gg = genus(g as i64);
            let inc = incidence_split(gg).map_err(|e| e.to_string())?;
            let expected = projective_space(2 * g - 3) * projective_space(2 * g - 4);
            if inc.total() != expected {
                return Err(format!("incidence sum identity fails at g = {g}"));
            }
            let order = 6 * g;
            let sigma = rational_p_sl2_sigma(gg)
                .series(order)
                .map_err(|e| e.to_string())?;
            let kunneth = kunneth_z2(&classifying_so2_split(order), &tjtilde_split(gg));
            if sigma != kunneth.truncate_below(order + 1) {
                return Err(format!("sigma Kunneth identity fails at g = {g}"));
            }
        }
        Ok(())
    };
    report(
        6,
        "incidence sum identity and sigma BSO(2) Kunneth identity, g in 2..20",
        run(),
    );
}

#[test]
fn criterion_7_kernel_properties() {
    let run = || -> Result<(), String> {
        let coeff = (any::<u64>(), any::<bool>()).prop_map(|(m, neg)| {
            let v = BigInt::from(m);
            if neg {
                -v
            } else {
                v
            }
        });
        let poly = prop::collection::vec(coeff, 0..=65).prop_map(Polynomial::from_coeffs);

        let mut runner = TestRunner::new(Config::with_cases(1000));
        runner
            .run(&(poly.clone(), poly.clone(), poly.clone()), |(a, b, c)| {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
                if !b.is_zero() {
                    prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
                }
                Ok(())
            })
            .map_err(|e| format!("ring axioms / roundtrip: {e}"))?;

        // NotDivisible must fire on every non-divisible fixture
        let fixtures: [(&[i64], &[i64]); 4] = [
            (&[1, 1], &[1, -1]),
            (&[1, 0, 0, 1], &[1, 0, 1]),
            (&[0, 0, 3], &[2]),
            (&[5], &[1, 2, 3]),
        ];
        for (a, b) in fixtures {
            let a = Polynomial::from_ints(a);
            let b = Polynomial::from_ints(b);
            match a.exact_div(&b) {
                Err(Error::NotDivisible { .. }) => {}
                other => {
                    return Err(format!(
                        "expected NotDivisible for {a} / {b}, got {other:?}"
                    ))
                }
            }
        }
        Ok(())
    };
    report(
        7,
        "ring axioms and exact-division roundtrip on 1000 random cases; NotDivisible fixtures",
        run(),
    );
}

#[test]
fn criterion_8_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_higgs-ih");
    let run = || -> Result<(), String> {
        let exec = |args: &[&str]| -> Result<(std::process::ExitStatus, String), String> {
            let out = Command::new(bin)
                .args(args)
                .output()
                .map_err(|e| e.to_string())?;
            Ok((
                out.status,
                String::from_utf8_lossy(&out.stdout).into_owned(),
            ))
        };

        // JSON round-trip
        let (status, text) = exec(&[
            "compute",
            "--genus",
            "4",
            "--quantity",
            "ip_m",
            "--format",
            "json",
        ])?;
        if status.code() != Some(0) {
            return Err("compute json exited nonzero".into());
        }
        let doc: serde_json::Value =
            serde_json::from_str(text.trim()).map_err(|e| e.to_string())?;
        let json_coeffs: Vec<String> = doc["coefficients"]
            .as_array()
            .ok_or("coefficients missing")?
            .iter()
            .map(|v| v.as_str().unwrap().to_owned())
            .collect();
        let expected: Vec<String> = reference_table(4)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        if json_coeffs != expected {
            return Err("json coefficients do not round-trip the g=4 polynomial".into());
        }

        // CSV and JSON agree
        let (_, csv) = exec(&[
            "compute",
            "--genus",
            "4",
            "--quantity",
            "ip_m",
            "--format",
            "csv",
        ])?;
        let row: Vec<&str> = csv
            .trim()
            .lines()
            .nth(1)
            .ok_or("csv row missing")?
            .split(',')
            .collect();
        if row[2..] != expected.iter().map(String::as_str).collect::<Vec<_>>()[..] {
            return Err("csv and json coefficient data differ".into());
        }

        // documented exit codes
        let (usage, _) = exec(&["compute", "--genus", "1", "--quantity", "ip_m"])?;
        if usage.code() != Some(2) {
            return Err(format!("invalid genus exited {:?}, want 2", usage.code()));
        }
        let (unknown, _) = exec(&["compute", "--genus", "2", "--quantity", "zzz"])?;
        if unknown.code() != Some(2) {
            return Err(format!(
                "unknown quantity exited {:?}, want 2",
                unknown.code()
            ));
        }
        let (ok, _) = exec(&["verify", "--genus-range", "2..4"])?;
        if ok.code() != Some(0) {
            return Err(format!("verify exited {:?}, want 0", ok.code()));
        }

        // fault injection drives the check-failure exit path
        let (fault, fault_text) = exec(&["verify", "--genus-range", "2..2", "--inject-fault"])?;
        if fault.code() != Some(1) {
            return Err(format!("fault injection exited {:?}, want 1", fault.code()));
        }
        if !fault_text.contains("first divergence at t^2") {
            return Err("fault diagnostic missing the divergent coefficient index".into());
        }
        Ok(())
    };
    report(
        8,
        "CLI json round-trip, csv/json equality, exit codes, fault injection",
        run(),
    );
}
