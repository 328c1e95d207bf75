//! Equivariant Poincaré series of the Kirwan algorithm: the gauge-group
//! series of the Higgs moduli, the blown-up strata and exceptional loci,
//! the inverted local blowing-up formula for the deepest singularity,
//! and the conjecture-licensed assembly up to the second blow-up.
//!
//! Every quantity is first built exactly in the rational-function layer;
//! truncation happens only at the very end, when an [`EquivariantSeries`]
//! is materialized. The fractional factors 1/2 and 1/4 in the gauge
//! series live in the denominators and must clear in the combined
//! series — a non-integer coefficient aborts with
//! [`Error::NonIntegerCoefficient`](crate::error::Error::NonIntegerCoefficient).

use num_bigint::BigInt;

use crate::blowup::kunneth_z2;
use crate::error::{Error, Result};
use crate::polyring::{binomial_power, Polynomial, RationalFunction, Sign};
use crate::spaces::{classifying_sl2, incidence_split, projective_space, tjtilde_split, Genus};

/// Whether a series value is a closed polynomial or a truncation of an
/// infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationOrder {
    Exact,
    Order(usize),
}

/// A named equivariant Poincaré series expanded to some order.
#[derive(Debug, Clone)]
pub struct EquivariantSeries {
    pub name: String,
    pub value: Polynomial,
    pub genus: Genus,
    pub truncation: TruncationOrder,
}

impl EquivariantSeries {
    fn truncated(name: &str, genus: Genus, value: Polynomial, order: usize) -> Result<Self> {
        check_nonnegative(name, &value)?;
        Ok(EquivariantSeries {
            name: name.to_owned(),
            value,
            genus,
            truncation: TruncationOrder::Order(order),
        })
    }

    /// Wrap a series whose infinite denominators all cancelled, i.e. a
    /// closed polynomial.
    pub fn exact(name: &str, genus: Genus, value: Polynomial) -> Result<Self> {
        check_nonnegative(name, &value)?;
        Ok(EquivariantSeries {
            name: name.to_owned(),
            value,
            genus,
            truncation: TruncationOrder::Exact,
        })
    }
}

fn check_nonnegative(name: &str, value: &Polynomial) -> Result<()> {
    if let Some((degree, coefficient)) = value.first_negative() {
        return Err(Error::NegativeCoefficient {
            quantity: name.to_owned(),
            degree,
            coefficient: coefficient.clone(),
        });
    }
    Ok(())
}

/// Default truncation order for series quantities: comfortably past the
/// final degree `6g - 6`.
pub fn default_order(g: Genus) -> usize {
    6 * g.get() - 2
}

fn rf(num: Polynomial, den: Polynomial) -> RationalFunction {
    RationalFunction::new(num, den)
}

fn one_minus(k: usize) -> Polynomial {
    Polynomial::one_minus_power(k)
}

fn tpow(k: usize) -> Polynomial {
    Polynomial::monomial(BigInt::from(1), k)
}

/// The gauge-theoretic series for the semistable Higgs space, summed
/// from its five displayed terms:
///
/// `((1+t^3)^{2g} - (1+t)^{2g} t^{2g+2}) / ((1-t^2)(1-t^4))`
/// `- t^{4g-4} + t^{2g+2}(1+t)^{2g} / ((1-t^2)(1-t^4)) + (1-t)^{2g} t^{4g-4} / (4(1+t^2))`
/// `+ ((1+t)^{2g} t^{4g-4} / (2(1-t^2))) (2g/(t+1) + 1/(t^2-1) - 1/2 + (3-2g))`
/// `+ ((2^{2g}-1)/2) t^{4g-4} ((1+t)^{2g-2} + (1-t)^{2g-2} - 2)`.
pub fn rational_p_sl2_r(g: Genus) -> RationalFunction {
    let n = g.get();
    let d24 = one_minus(2) * one_minus(4);
    let plus_2g = binomial_power(Sign::Plus, 2 * n);
    let minus_2g = binomial_power(Sign::Minus, 2 * n);
    let cube = binomial_power(Sign::Plus, 2 * n).compose_power(3);

    let term1 = rf(cube - &plus_2g * &tpow(2 * n + 2), d24.clone());

    let term2 = &(&rf(-tpow(4 * n - 4), Polynomial::one()) + &rf(&tpow(2 * n + 2) * &plus_2g, d24))
        + &rf(
            &minus_2g * &tpow(4 * n - 4),
            Polynomial::from_ints(&[4, 0, 4]),
        );

    // inner sum of term 3: 2g/(t+1) + 1/(t^2-1) - 1/2 + (3-2g)
    let inner = &(&(&rf(
        Polynomial::constant(BigInt::from(2 * n as i64)),
        Polynomial::from_ints(&[1, 1]),
    ) + &rf(Polynomial::one(), Polynomial::from_ints(&[-1, 0, 1])))
        + &rf(-Polynomial::one(), Polynomial::constant(BigInt::from(2))))
        + &RationalFunction::from_poly(Polynomial::constant(BigInt::from(3 - 2 * n as i64)));
    let lead = rf(
        &plus_2g * &tpow(4 * n - 4),
        one_minus(2).scale(&BigInt::from(2)),
    );
    let term3 = &lead * &inner;

    // ((1+t)^{2g-2} + (1-t)^{2g-2} - 2)/2 = even part minus the constant
    let half_bracket = binomial_power(Sign::Plus, 2 * n - 2).even_part() - Polynomial::one();
    let scale = g.two_torsion_count() - BigInt::from(1);
    let term4 = RationalFunction::from_poly((&half_bracket * &tpow(4 * n - 4)).scale(&scale));

    &(&term1 + &term2) + &(&term3 + &term4)
}

/// `P_t^{SL(2)}` of the strict transform of the middle stratum:
/// `plus(TJ~)/(1-t^4) + t^2 minus(TJ~)/(1-t^4)`.
pub fn rational_p_sl2_sigma(g: Genus) -> RationalFunction {
    let tj = tjtilde_split(g);
    let den = one_minus(4);
    &rf(tj.plus().clone(), den.clone()) + &rf(&tpow(2) * tj.minus(), den)
}

/// `P_t^{SL(2)}(E^ss) = plus(I_{2g-3}) * P_t(P^{2g-1})`, an exact
/// polynomial.
pub fn p_sl2_e_ss(g: Genus) -> Result<Polynomial> {
    let value = incidence_split(g)?.plus() * &projective_space(2 * g.get() - 1);
    check_nonnegative("p_sl2_e_ss", &value)?;
    Ok(value)
}

/// `P_t^{SL(2)}` of the semistable rank-one locus:
/// `(1-t^{4g}) / ((1-t^4)(1-t^2))`.
pub fn rational_p_sl2_p_hom1(g: Genus) -> RationalFunction {
    rf(one_minus(4 * g.get()), one_minus(4) * one_minus(2))
}

/// `P_t^{SL(2)}` of the semistable projectivized deepest singularity,
/// obtained by inverting the local equivariant blowing-up formula:
///
/// `((1-t^{12})/(1-t^2) - (1-t^6)/(1-t^2) + ((1-t^6)/(1-t^2))^2)
///    * (1-t^{4g-8})(1-t^{4g-4})(1-t^{4g}) / ((1-t^2)(1-t^4)(1-t^6))`
/// `- (1-t^6)/(1-t^2) * (1-t^{4g-4})(1-t^{4g}) / ((1-t^2)(1-t^4))
///    * (t^2 - t^{4g-8}) / (1-t^2)`
/// `- (1-t^{4g-4})^2 (1-t^{4g}) / ((1-t^2)^2 (1-t^4))`
/// `+ (1-t^{4g}) / ((1-t^4)(1-t^2))`.
///
/// The display is evaluated verbatim for every `g >= 2`; at `g = 2` the
/// first line vanishes (factor `1 - t^0`) and the second line's factor
/// `t^2 - t^{4g-8}` flips sign, which together reproduce the separate
/// `g = 2` description of the blown-up quotient.
pub fn rational_p_sl2_p_upsilon_ss(g: Genus) -> RationalFunction {
    let n = g.get();
    let fiber = crate::spaces::d1_fiber_factor();
    let line1 = rf(
        fiber * one_minus(4 * n - 8) * one_minus(4 * n - 4) * one_minus(4 * n),
        one_minus(2) * one_minus(4) * one_minus(6),
    );
    let line2 = rf(
        one_minus(6) * one_minus(4 * n - 4) * one_minus(4 * n) * (tpow(2) - tpow(4 * n - 8)),
        one_minus(2) * one_minus(2) * one_minus(4) * one_minus(2),
    );
    let e = one_minus(4 * n - 4);
    let line3 = rf(
        &e * &e * one_minus(4 * n),
        one_minus(2) * one_minus(2) * one_minus(4),
    );
    let line4 = rational_p_sl2_p_hom1(g);
    &(&line1 - &line2) - &(&line3 - &line4)
}

/// `P_t(E_2 // SL(2))`, the Z2-Künneth of the blown-up cotangent
/// Jacobian against the incidence fiber; an exact polynomial.
pub fn p_sl2_e2_ss(g: Genus) -> Result<Polynomial> {
    let value = kunneth_z2(&tjtilde_split(g), &incidence_split(g)?);
    check_nonnegative("p_sl2_e2_ss", &value)?;
    Ok(value)
}

/// The conjectural assembly
/// `P_t^{SL(2)}(R) + 2^{2g}(P_t^{SL(2)}(PY^{-1}(0)^ss) - P_t(BSL(2))) + P_t^{SL(2)}(E_2^ss) - P_t^{SL(2)}(Sigma)`.
///
/// This equals the Betti series of the second Kirwan stage and in fact
/// collapses to an exact polynomial.
pub fn rational_p_sl2_r2s(g: Genus) -> Result<RationalFunction> {
    let first_blowup =
        (&rational_p_sl2_p_upsilon_ss(g) - &classifying_sl2()).scale(&g.two_torsion_count());
    let e2 = RationalFunction::from_poly(p_sl2_e2_ss(g)?);
    Ok(&(&rational_p_sl2_r(g) + &first_blowup) + &(&e2 - &rational_p_sl2_sigma(g)))
}

pub fn p_sl2_r(g: Genus, order: usize) -> Result<EquivariantSeries> {
    let value = rational_p_sl2_r(g).series(order)?;
    EquivariantSeries::truncated("p_sl2_r", g, value, order)
}

pub fn p_sl2_sigma(g: Genus, order: usize) -> Result<EquivariantSeries> {
    let value = rational_p_sl2_sigma(g).series(order)?;
    EquivariantSeries::truncated("p_sl2_sigma", g, value, order)
}

pub fn p_sl2_p_hom1_ss(g: Genus, order: usize) -> Result<EquivariantSeries> {
    let value = rational_p_sl2_p_hom1(g).series(order)?;
    EquivariantSeries::truncated("p_sl2_p_hom1_ss", g, value, order)
}

pub fn p_sl2_p_upsilon_ss(g: Genus, order: usize) -> Result<EquivariantSeries> {
    let value = rational_p_sl2_p_upsilon_ss(g).series(order)?;
    EquivariantSeries::truncated("p_sl2_p_upsilon_ss", g, value, order)
}

pub fn p_sl2_r2s(g: Genus, order: usize) -> Result<EquivariantSeries> {
    let value = rational_p_sl2_r2s(g)?.series(order)?;
    EquivariantSeries::truncated("p_sl2_r2s", g, value, order)
}
