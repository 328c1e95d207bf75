//! Exact univariate polynomial and rational-function arithmetic over
//! arbitrary-precision integers.
//!
//! Everything downstream is built on three value types: [`Polynomial`]
//! (dense `BigInt` coefficients in the variable `t`), [`RationalFunction`]
//! (an unreduced quotient of two polynomials) and [`SplitSeries`] (the
//! invariant/variant pair of a Z2-action). Rational expressions are
//! accumulated over product denominators without GCD reduction and
//! collapsed once at the end by [`Polynomial::exact_div`]; a nonzero
//! remainder there aborts the computation loudly instead of propagating a
//! wrong coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of a polynomial, with the zero polynomial kept distinct from
/// every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial over `BigInt`, coefficient of `t^i` at
/// index `i`. Canonical form: no trailing zeros, so the zero polynomial
/// is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * t^exp`.
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial { coeffs }
    }

    /// `1 - t^exp`; the zero polynomial when `exp == 0`.
    pub fn one_minus_power(exp: usize) -> Self {
        if exp == 0 {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[0] = BigInt::one();
        coeffs[exp] = -BigInt::one();
        Polynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::MinusInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First index with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Substitute `t -> t^k`, spreading coefficients out by stride `k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k > 0, "compose_power stride must be positive");
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// Coefficients in even degrees only. `even_part((1+t)^n)` equals
    /// `((1+t)^n + (1-t)^n)/2` without any division.
    pub fn even_part(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 0 {
                    c.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Coefficients in odd degrees only.
    pub fn odd_part(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 1 {
                    c.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Keep coefficients of `t^i` for `i < cutoff` only.
    pub fn truncate_below(&self, cutoff: usize) -> Self {
        Polynomial::from_coeffs(self.coeffs.iter().take(cutoff).cloned().collect())
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division: returns `q` with `self = b * q`, or
    /// [`Error::NotDivisible`] carrying the residual polynomial at the
    /// point of failure. This is the pipeline's main self-diagnostic.
    pub fn exact_div(&self, b: &Polynomial) -> Result<Polynomial> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let db = b.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() - 1 < db {
            return Err(Error::NotDivisible {
                remainder: self.clone(),
            });
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        let lead = &b.coeffs[db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    remainder: Polynomial::from_coeffs(rem),
                });
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = &q * bc;
                rem[i - db + j] -= t;
            }
            quot[i - db] = q;
        }
        let rem = Polynomial::from_coeffs(rem);
        if !rem.is_zero() {
            return Err(Error::NotDivisible { remainder: rem });
        }
        Ok(Polynomial::from_coeffs(quot))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag} t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag} t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sign of the linear term in [`binomial_power`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(1 + sign*t)^exponent` with exact binomial coefficients.
pub fn binomial_power(sign: Sign, exponent: usize) -> Polynomial {
    let coeffs = (0..=exponent)
        .map(|k| {
            let b = binomial(BigInt::from(exponent), BigInt::from(k));
            match sign {
                Sign::Plus => b,
                Sign::Minus if k % 2 == 1 => -b,
                Sign::Minus => b,
            }
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// `(1 - t^a_exp) / (1 - t^b_exp)` as an exact polynomial; requires
/// `b_exp | a_exp`.
pub fn geometric_quotient(a_exp: usize, b_exp: usize) -> Result<Polynomial> {
    assert!(a_exp > 0 && b_exp > 0, "exponents must be positive");
    Polynomial::one_minus_power(a_exp).exact_div(&Polynomial::one_minus_power(b_exp))
}

/// Unreduced quotient of two integer polynomials.
///
/// No GCD reduction is ever performed; sums accumulate over product
/// denominators and [`RationalFunction::to_polynomial`] collapses the
/// result by one exact division at the end. The denominator's leading
/// coefficient is kept positive.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let lead_negative = den.coeffs.last().is_some_and(|c| c.is_negative());
        if lead_negative {
            RationalFunction {
                num: -num,
                den: -den,
            }
        } else {
            RationalFunction { num, den }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        RationalFunction {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    /// Collapse to the unique polynomial equal to this quotient, or
    /// report the remainder via [`Error::NotDivisible`].
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        self.num.exact_div(&self.den)
    }

    /// Truncated power-series expansion around `t = 0`, coefficients of
    /// `t^0 .. t^order` inclusive.
    ///
    /// This walks the convolution recurrence bottom-up, dividing by the
    /// denominator's constant term at each step, and is therefore an
    /// independent route from [`Self::to_polynomial`] (top-down long
    /// division). A non-exact step means the true series coefficient is
    /// not an integer and raises [`Error::NonIntegerCoefficient`].
    pub fn series(&self, order: usize) -> Result<Polynomial> {
        // Strip a common power of t so the denominator has a unit term.
        let shift = self
            .den
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero denominator");
        if shift > 0 {
            let num_valuation = self.num.coeffs.iter().position(|c| !c.is_zero());
            match num_valuation {
                None => return Ok(Polynomial::zero()),
                Some(v) if v >= shift => {}
                Some(_) => return Err(Error::SeriesPole),
            }
        }
        let num: Vec<&BigInt> = self.num.coeffs.iter().skip(shift).collect();
        let den: Vec<&BigInt> = self.den.coeffs.iter().skip(shift).collect();
        let den0 = den[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num.get(i).map_or_else(BigInt::zero, |c| (*c).clone());
            for j in 1..=i.min(den.len() - 1) {
                acc -= den[j] * &out[i - j];
            }
            let (q, r) = acc.div_rem(den0);
            if !r.is_zero() {
                return Err(Error::NonIntegerCoefficient { degree: i });
            }
            out.push(q);
        }
        Ok(Polynomial::from_coeffs(out))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Invariant (`plus`) and variant (`minus`) Betti series of a Z2-space.
/// Both parts record dimensions, so coefficients must be nonnegative;
/// `total = plus + minus` is the full Poincaré polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSeries {
    plus: Polynomial,
    minus: Polynomial,
}

impl SplitSeries {
    pub fn new(plus: Polynomial, minus: Polynomial) -> Self {
        assert!(
            plus.is_nonnegative() && minus.is_nonnegative(),
            "split series parts must have nonnegative coefficients"
        );
        SplitSeries { plus, minus }
    }

    pub fn plus(&self) -> &Polynomial {
        &self.plus
    }

    pub fn minus(&self) -> &Polynomial {
        &self.minus
    }

    pub fn total(&self) -> Polynomial {
        &self.plus + &self.minus
    }
}
