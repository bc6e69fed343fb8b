//! Generalized polynomials `sum c_i z^(a_i)` with rational coefficients and
//! nonnegative rational exponents, and their exact analysis on `[0, 1]`.
//!
//! Every question about a `GenPoly` is reduced to an ordinary integer
//! polynomial through the substitution `z = u^q`, `q` the lcm of the
//! exponent denominators. The map `u -> u^q` is increasing on `[0, 1]`, so
//! roots, signs and interval structure transfer unchanged.

mod algebraic;
mod intervals;
mod intpoly;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use algebraic::{AlgebraicNumber, Point};
pub use intervals::{
    negativity_set, negativity_set_with_cap, Interval, IntervalSet, SetWitness, SignCell,
    SignDecomposition,
};
pub use intpoly::IntPoly;
pub use roots::isolate_open_unit;

pub(crate) use algebraic::exact_root;
pub(crate) use intervals::coarsest_decimal_candidates;

/// Default bound on the lcm of exponent denominators.
pub const DEFAULT_DENOMINATOR_CAP: u32 = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenPolyError {
    #[error("z = {z} is not an exact {root}-th power; use an exact sign query instead")]
    InexactInput { z: String, root: u32 },
    #[error("lcm of exponent denominators is {lcm}, above the configured cap {cap}")]
    DenominatorCap { lcm: String, cap: u32 },
    #[error("point {0} lies outside [0, 1]")]
    OutsideUnitInterval(String),
}

/// Sorted `(exponent, coefficient)` pairs; exponents strictly increasing,
/// coefficients nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenPoly {
    terms: Vec<(BigRational, BigRational)>,
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(BigRational::zero(), c)
    }

    pub fn monomial(exponent: BigRational, coefficient: BigRational) -> Self {
        Self::from_terms([(exponent, coefficient)])
    }

    /// Merges like exponents and drops zero coefficients. Panics on a
    /// negative exponent.
    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, BigRational)>) -> Self {
        let mut map = std::collections::BTreeMap::<BigRational, BigRational>::new();
        for (e, c) in terms {
            assert!(!e.is_negative(), "negative exponent {e}");
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        GenPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Integer exponents and coefficients, lowest first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| {
            (
                BigRational::from_integer(i.into()),
                BigRational::from_integer(c.into()),
            )
        }))
    }

    pub fn terms(&self) -> &[(BigRational, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &BigRational) -> BigRational {
        self.terms
            .iter()
            .find(|(e, _)| e == exponent)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// lcm of the exponent denominators.
    pub fn exponent_lcm(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (e, _)| acc.lcm(e.denom()))
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_integer())
    }

    pub(crate) fn checked_lcm(&self, cap: u32) -> Result<u32, GenPolyError> {
        let l = self.exponent_lcm();
        match l.to_u32() {
            Some(v) if v <= cap => Ok(v),
            _ => Err(GenPolyError::DenominatorCap {
                lcm: l.to_string(),
                cap,
            }),
        }
    }

    /// Positive multiple of `f(u^q)`; `q` must clear every exponent denominator.
    pub fn to_int_poly(&self, q: u32) -> IntPoly {
        let qr = BigRational::from_integer(q.into());
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (e, c) in &self.terms {
            let scaled = e * &qr;
            assert!(
                scaled.is_integer(),
                "substitution degree {q} does not clear exponent {e}"
            );
            let i = scaled.to_integer().to_usize().expect("exponent too large");
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigRational::zero());
            }
            coeffs[i] += c;
        }
        IntPoly::from_rationals(&coeffs)
    }

    /// Exact value at a rational `z`; fails when some `z^(a_i)` is irrational.
    pub fn evaluate(&self, z: &BigRational) -> Result<BigRational, GenPolyError> {
        if z.is_negative() {
            return Err(GenPolyError::OutsideUnitInterval(z.to_string()));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let d = e.denom().to_u32().unwrap_or(u32::MAX);
            let root = exact_root(z, d).ok_or_else(|| GenPolyError::InexactInput {
                z: z.to_string(),
                root: d,
            })?;
            let n = e.numer().to_usize().expect("exponent too large");
            total += c * num::pow(root, n);
        }
        Ok(total)
    }

    /// Floating-point value, used only for plotting.
    pub fn evaluate_f64(&self, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * z.powf(e.to_f64().unwrap_or(f64::NAN)))
            .sum()
    }

    /// Certified sign at a point of `[0, 1]`.
    pub fn sign_at(&self, z: &Point) -> Result<Ordering, GenPolyError> {
        self.sign_at_with_cap(z, DEFAULT_DENOMINATOR_CAP)
    }

    pub fn sign_at_with_cap(&self, z: &Point, cap: u32) -> Result<Ordering, GenPolyError> {
        let q = self.checked_lcm(cap)?;
        if let Point::Rational(r) = z {
            if r.is_negative() || *r > BigRational::one() {
                return Err(GenPolyError::OutsideUnitInterval(r.to_string()));
            }
            if let Ok(v) = self.evaluate(r) {
                return Ok(v.cmp(&BigRational::zero()));
            }
        }
        let l = (q as u64).lcm(&(z.power() as u64));
        if l > cap as u64 {
            return Err(GenPolyError::DenominatorCap {
                lcm: l.to_string(),
                cap,
            });
        }
        let l = l as u32;
        Ok(z.lift(l).sign_of(&self.to_int_poly(l)))
    }

    pub fn sign_at_rational(&self, z: &BigRational) -> Result<Ordering, GenPolyError> {
        self.sign_at(&Point::Rational(z.clone()))
    }

    /// Pointwise comparison helper: true iff every coefficient is >= 0.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn value_at_one(&self) -> BigRational {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    pub fn value_at_zero(&self) -> BigRational {
        self.coefficient(&BigRational::zero())
    }
}

impl Add for &GenPoly {
    type Output = GenPoly;
    fn add(self, rhs: &GenPoly) -> GenPoly {
        GenPoly::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl Sub for &GenPoly {
    type Output = GenPoly;
    fn sub(self, rhs: &GenPoly) -> GenPoly {
        self + &(-rhs)
    }
}

impl Neg for &GenPoly {
    type Output = GenPoly;
    fn neg(self) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;
    fn mul(self, rhs: &GenPoly) -> GenPoly {
        GenPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e1, c1)| rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }
}

impl Add for GenPoly {
    type Output = GenPoly;
    fn add(self, rhs: GenPoly) -> GenPoly {
        &self + &rhs
    }
}

impl Sub for GenPoly {
    type Output = GenPoly;
    fn sub(self, rhs: GenPoly) -> GenPoly {
        &self - &rhs
    }
}

impl Mul for GenPoly {
    type Output = GenPoly;
    fn mul(self, rhs: GenPoly) -> GenPoly {
        &self * &rhs
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let coeff = if a.is_one() && !e.is_zero() {
                String::new()
            } else if a.is_integer() || e.is_zero() {
                a.to_string()
            } else {
                format!("({a})")
            };
            let power = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "z".to_string()
            } else if e.is_integer() {
                format!("z^{e}")
            } else {
                format!("z^({e})")
            };
            write!(f, "{coeff}{power}")?;
        }
        Ok(())
    }
}
