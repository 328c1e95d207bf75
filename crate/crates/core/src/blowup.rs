//! The intersection-cohomology blowing-up machinery: cone truncation,
//! the degree-shifted Z2-Künneth correction with its `t(q)` reindexing
//! rule, and the local chain computing the intersection Betti numbers of
//! the deepest singularity.
//!
//! The `t(q)` rule is implemented literally (branch on `q <= 4g-7`),
//! never through its closed rational forms; the closed forms are kept
//! only as cross-checks, since that is where transcription typos live.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, SplitSeries};
use crate::spaces::{d1_poly, incidence_split, p_s2a, projective_space, tjtilde_split, Genus};

/// Input to [`cone_truncate`]: the intersection Betti polynomial of a
/// projectivized GIT quotient together with the complex dimension of its
/// affine cone quotient.
#[derive(Debug, Clone)]
pub struct ConeSpec {
    pub projective_ih: Polynomial,
    pub complex_dim: usize,
}

impl ConeSpec {
    pub fn new(projective_ih: Polynomial, complex_dim: usize) -> Self {
        assert!(complex_dim >= 1, "cone must have positive dimension");
        ConeSpec {
            projective_ih,
            complex_dim,
        }
    }
}

/// Intersection Betti polynomial of the affine cone quotient: the
/// cokernel of cup product with the hyperplane class below the complex
/// dimension, zero from the dimension upward. Degreewise this is
/// `(1 - t^2) * projective_ih` truncated below `complex_dim`.
///
/// Hard Lefschetz makes the multiplication injective below the
/// dimension, so every retained coefficient must be nonnegative; a
/// negative value means the input was not an intersection Betti
/// polynomial and is reported as [`Error::NegativeCokernel`].
pub fn cone_truncate(spec: &ConeSpec) -> Result<Polynomial> {
    let shifted = Polynomial::one_minus_power(2) * &spec.projective_ih;
    let truncated = shifted.truncate_below(spec.complex_dim);
    if let Some((degree, coefficient)) = truncated.first_negative() {
        return Err(Error::NegativeCokernel {
            degree,
            coefficient: coefficient.clone(),
        });
    }
    Ok(truncated)
}

/// Bundle of a base split series, a fiber split series and the `t(q)`
/// cutoff `D = 4g - 7`; its [`correction`](Self::correction) is the
/// exceptional-locus contribution of one blowing-up step.
#[derive(Debug, Clone)]
pub struct ShiftedKunnethSpec {
    pub base: SplitSeries,
    pub fiber: SplitSeries,
    pub cutoff: usize,
}

impl ShiftedKunnethSpec {
    pub fn new(base: SplitSeries, fiber: SplitSeries, g: Genus) -> Self {
        ShiftedKunnethSpec {
            base,
            fiber,
            cutoff: 4 * g.get() - 7,
        }
    }

    pub fn correction(&self) -> Polynomial {
        kunneth_z2(&self.base, &shifted_fiber_series(&self.fiber, self.cutoff))
    }
}

/// Reindex a fiber series by the rule `t(q) = q - 2` for `q <= cutoff`,
/// `t(q) = q` otherwise, applied to each sign part.
///
/// The coefficients of the input in degrees `cutoff - 1` and `cutoff`
/// are consumed by neither branch and drop out; for the incidence fiber
/// the only nonzero one of those lives in degree `4g - 8`.
pub fn shifted_fiber_series(fiber: &SplitSeries, cutoff: usize) -> SplitSeries {
    let shift_part = |f: &Polynomial| -> Polynomial {
        let len = f.coeffs().len().max(cutoff + 1);
        let mut out = vec![BigInt::from(0); len];
        for (q, slot) in out.iter_mut().enumerate() {
            if q <= cutoff {
                if q >= 2 {
                    *slot = f.coeff(q - 2);
                }
            } else {
                *slot = f.coeff(q);
            }
        }
        Polynomial::from_coeffs(out)
    };
    SplitSeries::new(shift_part(fiber.plus()), shift_part(fiber.minus()))
}

/// Z2-invariant Künneth pairing: `base+ * fiber+ + base- * fiber-`.
pub fn kunneth_z2(base: &SplitSeries, fiber: &SplitSeries) -> Polynomial {
    base.plus() * fiber.plus() + base.minus() * fiber.minus()
}

/// Correction for the second Kirwan blow-up (along the middle stratum):
/// the shifted Künneth sum of the blown-up cotangent Jacobian against
/// the incidence fiber.
pub fn correction_theorem2(g: Genus) -> Result<Polynomial> {
    Ok(ShiftedKunnethSpec::new(tjtilde_split(g), incidence_split(g)?, g).correction())
}

/// Correction for the local blow-up over the deepest singularity: base
/// `P^{2g-1}` with trivial Z2-action (its variant part vanishes), same
/// incidence fiber.
pub fn correction_theorem3(g: Genus) -> Result<Polynomial> {
    let base = SplitSeries::new(projective_space(2 * g.get() - 1), Polynomial::zero());
    Ok(ShiftedKunnethSpec::new(base, incidence_split(g)?, g).correction())
}

/// Closed rational form of [`correction_theorem2`], used only for
/// cross-validation against the literal `t(q)` rule:
/// `plus-shift = t^2 (1-t^{4g-4})(1-t^{4g-6}) / ((1-t^2)(1-t^4))`,
/// `minus-shift = (t^4 - t^{4g-6} - t^{4g} + t^{8g-10}) / ((1-t^2)(1-t^4)) + t^{4g-6}`.
pub fn correction_theorem2_closed_form(g: Genus) -> Result<Polynomial> {
    let tj = tjtilde_split(g);
    let (plus_shift, minus_shift) = shifted_incidence_closed_forms(g)?;
    Ok(tj.plus() * &plus_shift + tj.minus() * &minus_shift)
}

/// Closed rational form of [`correction_theorem3`]:
/// `(1-t^{4g})/(1-t^2) * t^2 (1-t^{4g-6})(1-t^{4g-4}) / ((1-t^2)(1-t^4))`.
pub fn correction_theorem3_closed_form(g: Genus) -> Result<Polynomial> {
    let (plus_shift, _) = shifted_incidence_closed_forms(g)?;
    Ok(projective_space(2 * g.get() - 1) * plus_shift)
}

fn shifted_incidence_closed_forms(g: Genus) -> Result<(Polynomial, Polynomial)> {
    let g = g.get();
    let den = Polynomial::one_minus_power(2) * Polynomial::one_minus_power(4);
    let plus_num = Polynomial::monomial(BigInt::from(1), 2)
        * Polynomial::one_minus_power(4 * g - 4)
        * Polynomial::one_minus_power(4 * g - 6);
    let plus = plus_num.exact_div(&den)?;
    // t^4 (1-t^{4g-4})(1-t^{4g-10}) expanded so the g = 2 case (where the
    // printed exponent 4g-10 is negative) stays in the polynomial ring
    let mut minus_num = Polynomial::monomial(BigInt::from(1), 4);
    minus_num = minus_num - Polynomial::monomial(BigInt::from(1), 4 * g - 6);
    minus_num = minus_num - Polynomial::monomial(BigInt::from(1), 4 * g);
    minus_num = minus_num + Polynomial::monomial(BigInt::from(1), 8 * g - 10);
    let minus = minus_num.exact_div(&den)? + Polynomial::monomial(BigInt::from(1), 4 * g - 6);
    Ok((plus, minus))
}

/// Betti polynomial of the blown-up projectivized deepest singularity.
/// `g = 2`: the quotient is already a `P^2`-bundle over `Gr^w(2,4)`, so
/// it equals `P_t(P(S^2 A))`. For `g >= 3` the third local blowing-up is
/// undone: `P_t(D_1) - P_t(P(S^2 A)) (P_t(P^{2g-5}) - 1)`.
pub fn ip_bl_p_upsilon(g: Genus) -> Result<Polynomial> {
    if g.get() == 2 {
        return p_s2a(g);
    }
    let exceptional = projective_space(2 * g.get() - 5) - Polynomial::one();
    Ok(d1_poly(g)? - p_s2a(g)? * exceptional)
}

/// `IP_t` of the projectivized deepest singularity, closed form
/// `(1-t^{8g-8})(1-t^{4g}) / ((1-t^2)(1-t^4))`.
pub fn ip_p_upsilon(g: Genus) -> Result<Polynomial> {
    let g = g.get();
    let num = Polynomial::one_minus_power(8 * g - 8) * Polynomial::one_minus_power(4 * g);
    let den = Polynomial::one_minus_power(2) * Polynomial::one_minus_power(4);
    num.exact_div(&den)
}

/// Pipeline route to [`ip_p_upsilon`]: subtract the theorem-3 correction
/// from the blown-up quotient. Both routes must agree exactly.
pub fn ip_p_upsilon_via_blowup(g: Genus) -> Result<Polynomial> {
    Ok(ip_bl_p_upsilon(g)? - correction_theorem3(g)?)
}

/// `IP_t` of the affine deepest singularity, closed form
/// `(1-t^{4g})/(1-t^4)`.
pub fn ip_upsilon(g: Genus) -> Result<Polynomial> {
    Polynomial::one_minus_power(4 * g.get()).exact_div(&Polynomial::one_minus_power(4))
}

/// Cone-truncation route to [`ip_upsilon`]; the affine cone quotient has
/// complex dimension `6g - 6`.
pub fn ip_upsilon_via_cone(g: Genus) -> Result<Polynomial> {
    let spec = ConeSpec::new(ip_p_upsilon(g)?, 6 * g.get() - 6);
    cone_truncate(&spec)
}
