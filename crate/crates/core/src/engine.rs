//! Final assembly of the intersection Poincaré polynomial of the Higgs
//! moduli space by two independent routes, plus the cross-check suite
//! that validates every step of the pipeline per genus.
//!
//! The step-by-step pipeline is authoritative; the monolithic closed
//! formula is a validation target transcribed term by term.

use num_bigint::BigInt;
use num_traits::One;

use crate::blowup::{
    correction_theorem2, correction_theorem2_closed_form, correction_theorem3,
    correction_theorem3_closed_form, ip_p_upsilon, ip_p_upsilon_via_blowup, ip_upsilon,
    ip_upsilon_via_cone, kunneth_z2,
};
use crate::equivariant::{
    default_order, p_sl2_e2_ss, p_sl2_e_ss, rational_p_sl2_r, rational_p_sl2_r2s,
    rational_p_sl2_sigma,
};
use crate::error::{Error, Result};
use crate::polyring::{binomial_power, Degree, Polynomial, RationalFunction, Sign};
use crate::spaces::{
    classifying_so2_split, incidence_split, projective_space, tjtilde_split, Genus,
};

/// How a reported quantity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Pipeline,
    ClosedForm,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Pipeline => "pipeline",
            Route::ClosedForm => "closed_form",
        }
    }
}

/// A computed quantity: name, genus, coefficient vector and the checks
/// that were verified during its construction.
#[derive(Debug, Clone)]
pub struct QuantityReport {
    pub quantity: String,
    pub genus: Genus,
    pub coefficients: Vec<BigInt>,
    pub route: Route,
    pub degree: usize,
    pub checks_passed: Vec<String>,
}

impl QuantityReport {
    pub fn new(
        quantity: &str,
        genus: Genus,
        value: Polynomial,
        route: Route,
        checks_passed: Vec<String>,
    ) -> Self {
        let degree = value.degree().finite().unwrap_or(0);
        QuantityReport {
            quantity: quantity.to_owned(),
            genus,
            coefficients: value.coeffs().to_vec(),
            route,
            degree,
            checks_passed,
        }
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coefficients.clone())
    }
}

fn validate_ip_m(quantity: &str, g: Genus, value: &Polynomial) -> Result<Vec<String>> {
    let expected = 6 * g.get() - 6;
    match value.degree() {
        Degree::Finite(d) if d == expected => {}
        other => {
            return Err(Error::DegreeMismatch {
                quantity: quantity.to_owned(),
                expected,
                found: other.to_string(),
            })
        }
    }
    if let Some((degree, coefficient)) = value.first_negative() {
        return Err(Error::NegativeCoefficient {
            quantity: quantity.to_owned(),
            degree,
            coefficient: coefficient.clone(),
        });
    }
    let mut checks = vec![
        "degree_6g_minus_6".to_owned(),
        "nonnegative_coefficients".to_owned(),
    ];
    if value.coeff(0) == BigInt::one() {
        checks.push("constant_term_one".to_owned());
    }
    Ok(checks)
}

/// Intermediate of the pipeline: `IP_t` of the first Kirwan stage,
/// obtained by peeling the theorem-2 correction off the second stage.
pub fn ip_r1ss(g: Genus) -> Result<Polynomial> {
    let r2s = rational_p_sl2_r2s(g)?;
    let corr = RationalFunction::from_poly(correction_theorem2(g)?);
    let value = (&r2s - &corr).to_polynomial()?;
    if let Some((degree, coefficient)) = value.first_negative() {
        return Err(Error::NegativeCoefficient {
            quantity: "ip_r1ss".to_owned(),
            degree,
            coefficient: coefficient.clone(),
        });
    }
    Ok(value)
}

/// Step-by-step route: run the blowing-up corrections in reverse from
/// the second Kirwan stage down to the moduli space itself.
pub fn ip_m_pipeline(g: Genus) -> Result<QuantityReport> {
    let stage1 = ip_r1ss(g)?;
    let deepest = (ip_p_upsilon(g)? - ip_upsilon(g)?).scale(&g.two_torsion_count());
    let value = stage1 - deepest;
    let mut checks = validate_ip_m("ip_m", g, &value)?;
    checks.push("intermediate_stage_nonnegative".to_owned());
    Ok(QuantityReport::new(
        "ip_m",
        g,
        value,
        Route::Pipeline,
        checks,
    ))
}

/// The monolithic closed formula, transcribed term by term in the
/// rational-function layer and collapsed by one exact division.
///
/// The two displayed lines whose parenthesization is defective are read
/// as the full invariant (resp. variant) base polynomial multiplying the
/// closed shifted-fiber factor, which is the unique reading consistent
/// with the theorem-2 correction and the low-genus tables.
pub fn ip_m_closed(g: Genus) -> Result<QuantityReport> {
    let n = g.get();
    let om = Polynomial::one_minus_power;
    let tp = |k: usize| Polynomial::monomial(BigInt::one(), k);
    let d24 = om(2) * om(4);
    let two_2g = g.two_torsion_count();
    let tj = tjtilde_split(g);

    let mut terms: Vec<RationalFunction> = Vec::new();

    // gauge series of the open stratum (five displayed terms)
    terms.push(rational_p_sl2_r(g));

    // 2^{2g} [ inverted local blowing-up bracket ] - 2^{2g} P_t(BSL(2))
    let fiber = crate::spaces::d1_fiber_factor();
    let bracket = &(&RationalFunction::new(
        fiber * om(4 * n - 8) * om(4 * n - 4) * om(4 * n),
        om(2) * om(4) * om(6),
    ) - &RationalFunction::new(
        om(6) * om(4 * n - 4) * om(4 * n) * (tp(2) - tp(4 * n - 8)),
        om(2) * om(2) * om(4) * om(2),
    )) - &(&RationalFunction::new(
        om(4 * n - 4) * om(4 * n - 4) * om(4 * n),
        om(2) * om(2) * om(4),
    ) - &RationalFunction::new(om(4 * n), om(4) * om(2)));
    terms.push(bracket.scale(&two_2g));
    terms.push(RationalFunction::new(Polynomial::constant(-&two_2g), om(4)));

    // + exceptional Kunneth terms of the second blow-up
    terms.push(RationalFunction::new(
        tj.plus() * om(4 * n - 4) * om(4 * n - 4),
        d24.clone(),
    ));
    terms.push(RationalFunction::new(
        tj.minus() * tp(2) * om(4 * n - 4) * om(4 * n - 8),
        d24.clone(),
    ));

    // - both split parts of the middle stratum
    terms.push(&RationalFunction::zero() - &RationalFunction::new(tj.plus().clone(), om(4)));
    terms.push(&RationalFunction::zero() - &RationalFunction::new(tj.minus() * tp(2), om(4)));

    // - shifted Kunneth corrections (the defectively parenthesized lines)
    terms.push(
        &RationalFunction::zero()
            - &RationalFunction::new(
                tj.plus() * tp(2) * om(4 * n - 4) * om(4 * n - 6),
                d24.clone(),
            ),
    );
    let minus_shift_num = tp(4) - tp(4 * n - 6) - tp(4 * n) + tp(8 * n - 10);
    let minus_shift = &RationalFunction::new(minus_shift_num, d24.clone())
        + &RationalFunction::from_poly(tp(4 * n - 6));
    terms.push(
        &RationalFunction::zero()
            - &(&RationalFunction::from_poly(tj.minus().clone()) * &minus_shift),
    );

    // - 2^{2g} [ deepest-singularity closed forms ]
    let deepest = &RationalFunction::new(om(8 * n - 8) * om(4 * n), d24)
        - &RationalFunction::new(om(4 * n), om(4));
    terms.push(deepest.scale(&-&two_2g));

    let total = terms
        .into_iter()
        .fold(RationalFunction::zero(), |acc, t| &acc + &t);
    let value = total.to_polynomial()?;
    let checks = validate_ip_m("ip_m_closed", g, &value)?;
    Ok(QuantityReport::new(
        "ip_m_closed",
        g,
        value,
        Route::ClosedForm,
        checks,
    ))
}

/// Published reference values of `IP_t(M)` for low genus.
pub fn reference_table(g: usize) -> Option<&'static [i64]> {
    const G2: &[i64] = &[1, 0, 1, 0, 17, 0, 17];
    const G3: &[i64] = &[1, 0, 1, 6, 2, 6, 17, 6, 81, 12, 396, 6, 66];
    const G4: &[i64] = &[
        1, 0, 1, 8, 2, 8, 30, 16, 31, 72, 59, 72, 385, 80, 3955, 80, 3885, 16, 259,
    ];
    const G5: &[i64] = &[
        1, 0, 1, 10, 2, 10, 47, 20, 48, 140, 93, 150, 304, 270, 349, 522, 1583, 532, 29414, 532,
        72170, 280, 28784, 30, 1028,
    ];
    match g {
        2 => Some(G2),
        3 => Some(G3),
        4 => Some(G4),
        5 => Some(G5),
        _ => None,
    }
}

/// Outcome of one named cross-check at one genus. Failures carry the
/// first divergent coefficient index and both values.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub genus: Genus,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn pass(name: &str, genus: Genus) -> Self {
        CheckResult {
            name: name.to_owned(),
            genus,
            passed: true,
            detail: None,
        }
    }

    fn fail(name: &str, genus: Genus, detail: String) -> Self {
        CheckResult {
            name: name.to_owned(),
            genus,
            passed: false,
            detail: Some(detail),
        }
    }
}

fn compare(name: &str, genus: Genus, got: &Polynomial, expected: &Polynomial) -> CheckResult {
    if got == expected {
        return CheckResult::pass(name, genus);
    }
    let n = got.coeffs().len().max(expected.coeffs().len());
    for i in 0..n {
        let (a, b) = (got.coeff(i), expected.coeff(i));
        if a != b {
            return CheckResult::fail(
                name,
                genus,
                format!("first divergence at t^{i}: got {a}, expected {b}"),
            );
        }
    }
    CheckResult::fail(name, genus, "polynomials differ".to_owned())
}

fn error_result(name: &str, genus: Genus, err: Error) -> CheckResult {
    CheckResult::fail(name, genus, format!("computation failed: {err}"))
}

/// Deliberate corruption of the pipeline output, used to exercise the
/// failure-reporting path end to end. [`FaultInjection::None`] leaves
/// the computation untouched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaultInjection {
    #[default]
    None,
    /// Add one to the pipeline coefficient of `t^2` before any check runs.
    CorruptPipeline,
}

/// Run every registered cross-check for one genus. Check failures are
/// data, not errors: each result carries pass/fail plus a divergence
/// diagnostic.
pub fn verify_genus(g: Genus) -> Vec<CheckResult> {
    verify_genus_with(g, FaultInjection::None)
}

pub fn verify_genus_with(g: Genus, fault: FaultInjection) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let n = g.get();

    let pipeline = match ip_m_pipeline(g) {
        Ok(r) => {
            let mut value = r.polynomial();
            if fault == FaultInjection::CorruptPipeline {
                value = value + Polynomial::monomial(BigInt::one(), 2);
            }
            value
        }
        Err(e) => {
            out.push(error_result("pipeline_computes", g, e));
            return out;
        }
    };
    out.push(CheckResult::pass("pipeline_computes", g));

    // reference values, where available
    if let Some(table) = reference_table(n) {
        out.push(compare(
            "table_match",
            g,
            &pipeline,
            &Polynomial::from_ints(table),
        ));
    }

    // route equality
    match ip_m_closed(g) {
        Ok(closed) => out.push(compare(
            "route_equality",
            g,
            &pipeline,
            &closed.polynomial(),
        )),
        Err(e) => out.push(error_result("route_equality", g, e)),
    }

    // degree law: degree 6g-6, top coefficient nonzero, constant term 1,
    // nonnegative integer coefficients
    let degree_ok = pipeline.degree() == Degree::Finite(6 * n - 6);
    let const_ok = pipeline.coeff(0) == BigInt::one();
    let nonneg_ok = pipeline.is_nonnegative();
    if degree_ok && const_ok && nonneg_ok {
        out.push(CheckResult::pass("degree_law", g));
    } else {
        out.push(CheckResult::fail(
            "degree_law",
            g,
            format!(
                "degree {} (want {}), constant term {}, nonnegative: {}",
                pipeline.degree(),
                6 * n - 6,
                pipeline.coeff(0),
                nonneg_ok
            ),
        ));
    }

    // deepest-singularity two-path agreements
    match (ip_p_upsilon(g), ip_p_upsilon_via_blowup(g)) {
        (Ok(a), Ok(b)) => out.push(compare("ip_p_upsilon_two_path", g, &b, &a)),
        (Err(e), _) | (_, Err(e)) => out.push(error_result("ip_p_upsilon_two_path", g, e)),
    }
    match (ip_upsilon(g), ip_upsilon_via_cone(g)) {
        (Ok(a), Ok(b)) => out.push(compare("ip_upsilon_cone_path", g, &b, &a)),
        (Err(e), _) | (_, Err(e)) => out.push(error_result("ip_upsilon_cone_path", g, e)),
    }

    // literal t(q) rule vs closed forms
    match (correction_theorem2(g), correction_theorem2_closed_form(g)) {
        (Ok(a), Ok(b)) => out.push(compare("correction2_closed_form", g, &a, &b)),
        (Err(e), _) | (_, Err(e)) => out.push(error_result("correction2_closed_form", g, e)),
    }
    match (correction_theorem3(g), correction_theorem3_closed_form(g)) {
        (Ok(a), Ok(b)) => out.push(compare("correction3_closed_form", g, &a, &b)),
        (Err(e), _) | (_, Err(e)) => out.push(error_result("correction3_closed_form", g, e)),
    }

    // split-series sum identity for the incidence variety
    match incidence_split(g) {
        Ok(s) => {
            let expected = projective_space(2 * n - 3) * projective_space(2 * n - 4);
            out.push(compare("incidence_sum_identity", g, &s.total(), &expected));
        }
        Err(e) => out.push(error_result("incidence_sum_identity", g, e)),
    }

    // sigma as a BSO(2) x TJ~ Kunneth, to order 6g
    {
        let order = 6 * n;
        match rational_p_sl2_sigma(g).series(order) {
            Ok(sigma) => {
                let kunneth = kunneth_z2(&classifying_so2_split(order), &tjtilde_split(g));
                out.push(compare(
                    "sigma_kunneth_identity",
                    g,
                    &sigma,
                    &kunneth.truncate_below(order + 1),
                ));
            }
            Err(e) => out.push(error_result("sigma_kunneth_identity", g, e)),
        }
    }

    // exceptional-locus closed forms
    match p_sl2_e_ss(g) {
        Ok(e_ss) => {
            let om = Polynomial::one_minus_power;
            let closed =
                (om(4 * n - 4) * om(4 * n - 4) * om(4 * n)).exact_div(&(om(2) * om(2) * om(4)));
            match closed {
                Ok(c) => out.push(compare("e_ss_closed_form", g, &e_ss, &c)),
                Err(e) => out.push(error_result("e_ss_closed_form", g, e)),
            }
        }
        Err(e) => out.push(error_result("e_ss_closed_form", g, e)),
    }
    match (p_sl2_e2_ss(g), incidence_split(g)) {
        (Ok(e2), Ok(inc)) => {
            let tj = tjtilde_split(g);
            let closed = tj.plus() * inc.plus() + tj.minus() * inc.minus();
            out.push(compare("e2_ss_kunneth_form", g, &e2, &closed));
        }
        (Err(e), _) | (_, Err(e)) => out.push(error_result("e2_ss_kunneth_form", g, e)),
    }

    // tjtilde total identity
    {
        let tj = tjtilde_split(g);
        let expected = binomial_power(Sign::Plus, 2 * n)
            + (&projective_space(2 * n - 1) - &Polynomial::one()).scale(&g.two_torsion_count());
        out.push(compare("tjtilde_total_identity", g, &tj.total(), &expected));
    }

    // first Kirwan stage is a genuine Betti series
    match ip_r1ss(g) {
        Ok(_) => out.push(CheckResult::pass("stage1_nonnegative", g)),
        Err(e) => out.push(error_result("stage1_nonnegative", g, e)),
    }

    // series expansion agrees with the exact collapse of the second stage
    match rational_p_sl2_r2s(g) {
        Ok(r2s) => {
            let order = default_order(g);
            match (r2s.series(order), r2s.to_polynomial()) {
                (Ok(series), Ok(exact)) => out.push(compare(
                    "r2s_series_vs_exact",
                    g,
                    &series,
                    &exact.truncate_below(order + 1),
                )),
                (Err(e), _) | (_, Err(e)) => out.push(error_result("r2s_series_vs_exact", g, e)),
            }
        }
        Err(e) => out.push(error_result("r2s_series_vs_exact", g, e)),
    }

    out
}
