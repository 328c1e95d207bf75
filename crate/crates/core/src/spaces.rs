//! Poincaré series (plain and Z2-split) of the building-block spaces
//! consumed by the blowing-up pipeline: projective spaces, classifying
//! spaces, the incidence variety, the blown-up cotangent Jacobian,
//! isotropic Grassmannians and the fibered spaces built from them.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{binomial_power, Polynomial, RationalFunction, Sign, SplitSeries};

/// Genus of the base curve; every formula requires `g >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus { value: g });
        }
        Ok(Genus(g as u32))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// `2^{2g}`, the number of order-two points of the Jacobian.
    pub fn two_torsion_count(self) -> BigInt {
        BigInt::one() << (2 * self.get())
    }
}

impl std::fmt::Display for Genus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A named series attached to a genus, either a plain Poincaré
/// polynomial or a Z2-split pair.
#[derive(Debug, Clone)]
pub struct SpaceSeries {
    pub name: String,
    pub series: SeriesKind,
    pub genus: Genus,
}

#[derive(Debug, Clone)]
pub enum SeriesKind {
    Plain(Polynomial),
    Split(SplitSeries),
}

impl SpaceSeries {
    pub fn plain(name: &str, genus: Genus, p: Polynomial) -> Self {
        debug_assert!(
            p.is_nonnegative(),
            "{name}: Betti series must be nonnegative"
        );
        SpaceSeries {
            name: name.to_owned(),
            series: SeriesKind::Plain(p),
            genus,
        }
    }

    pub fn split(name: &str, genus: Genus, s: SplitSeries) -> Self {
        SpaceSeries {
            name: name.to_owned(),
            series: SeriesKind::Split(s),
            genus,
        }
    }
}

/// `P_t(P^n) = 1 + t^2 + ... + t^{2n}`.
pub fn projective_space(n: usize) -> Polynomial {
    let mut coeffs = vec![BigInt::from(0); 2 * n + 1];
    for i in 0..=n {
        coeffs[2 * i] = BigInt::one();
    }
    Polynomial::from_coeffs(coeffs)
}

/// `P_t(BSL(2)) = 1/(1 - t^4)`.
pub fn classifying_sl2() -> RationalFunction {
    RationalFunction::new(Polynomial::one(), Polynomial::one_minus_power(4))
}

/// Z2-split series of `BSO(2)`, truncated at degree `order`:
/// `plus = 1 + t^4 + t^8 + ...`, `minus = t^2 + t^6 + ...`.
pub fn classifying_so2_split(order: usize) -> SplitSeries {
    let mut plus = vec![BigInt::from(0); order + 1];
    let mut minus = vec![BigInt::from(0); order + 1];
    for d in (0..=order).step_by(4) {
        plus[d] = BigInt::one();
    }
    for d in (2..=order).step_by(4) {
        minus[d] = BigInt::one();
    }
    SplitSeries::new(
        Polynomial::from_coeffs(plus),
        Polynomial::from_coeffs(minus),
    )
}

/// Z2-split Betti series of the incidence variety `I_{2g-3}`:
/// `plus = (1-t^{4g-4})^2 / ((1-t^2)(1-t^4))`,
/// `minus = t^2 (1-t^{4g-4})(1-t^{4g-8}) / ((1-t^2)(1-t^4))`.
///
/// At `g = 2` the minus numerator contains the factor `1 - t^0 = 0`, so
/// the minus part vanishes without any special casing.
pub fn incidence_split(g: Genus) -> Result<SplitSeries> {
    let g = g.get();
    let den = Polynomial::one_minus_power(2) * Polynomial::one_minus_power(4);
    let e = Polynomial::one_minus_power(4 * g - 4);
    let plus = (&e * &e).exact_div(&den)?;
    let minus_num =
        Polynomial::monomial(BigInt::one(), 2) * &e * Polynomial::one_minus_power(4 * g - 8);
    let minus = minus_num.exact_div(&den)?;
    Ok(SplitSeries::new(plus, minus))
}

/// Z2-split Betti series of the blowing-up of `T^*J` along the
/// two-torsion points:
/// `plus = ((1+t)^{2g} + (1-t)^{2g})/2 + 2^{2g}((1-t^{4g})/(1-t^2) - 1)`,
/// `minus = ((1+t)^{2g} - (1-t)^{2g})/2`.
///
/// The binomial averages are the even/odd parts of `(1+t)^{2g}`, so no
/// division is performed.
pub fn tjtilde_split(g: Genus) -> SplitSeries {
    let b = binomial_power(Sign::Plus, 2 * g.get());
    let exceptional =
        (&projective_space(2 * g.get() - 1) - &Polynomial::one()).scale(&g.two_torsion_count());
    SplitSeries::new(b.even_part() + exceptional, b.odd_part())
}

/// Poincaré polynomial of the isotropic Grassmannian `Gr^w(k, 2g)` for
/// `k = 2` or `3`, as the product `prod_i (1-t^{4g-4k+4i})/(1-t^{2i})`.
///
/// The product is divided as a whole: individual factors need not be
/// polynomials (e.g. `k = 3`, `g = 4`).
pub fn symplectic_grassmannian(k: u32, g: Genus) -> Result<Polynomial> {
    if k != 2 && k != 3 {
        return Err(Error::InvalidArgument {
            message: format!("symplectic_grassmannian supports k = 2 or 3, got {k}"),
        });
    }
    if k == 3 && g.get() < 3 {
        return Err(Error::InvalidArgument {
            message: "symplectic_grassmannian with k = 3 requires genus >= 3".to_owned(),
        });
    }
    let k = k as usize;
    let g = g.get();
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for i in 1..=k {
        num = num * Polynomial::one_minus_power(4 * g - 4 * k + 4 * i);
        den = den * Polynomial::one_minus_power(2 * i);
    }
    num.exact_div(&den)
}

/// `P_t(P(S^2 A)) = P_t(P^2) * P_t(Gr^w(2, 2g))`, the projectivized
/// second symmetric power of the tautological bundle.
pub fn p_s2a(g: Genus) -> Result<Polynomial> {
    Ok(projective_space(2) * symplectic_grassmannian(2, g)?)
}

/// The hatted-`P^5` fiber factor of `D_1`:
/// `(1-t^{12})/(1-t^2) - (1-t^6)/(1-t^2) + ((1-t^6)/(1-t^2))^2`.
pub(crate) fn d1_fiber_factor() -> Polynomial {
    let p5 = projective_space(5);
    let p2 = projective_space(2);
    &p5 - &p2 + &p2 * &p2
}

/// `IP_t(D_1) = P_t(D_1)`, the hatted-`P^5` bundle over `Gr^w(3, 2g)`.
/// Only defined for `g >= 3`.
pub fn d1_poly(g: Genus) -> Result<Polynomial> {
    if g.get() < 3 {
        return Err(Error::InvalidArgument {
            message: "d1 is only defined for genus >= 3".to_owned(),
        });
    }
    Ok(d1_fiber_factor() * symplectic_grassmannian(3, g)?)
}
