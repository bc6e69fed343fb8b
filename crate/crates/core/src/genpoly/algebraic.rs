//! Real algebraic numbers given by an isolating interval, and points of
//! `[0, 1]` written as powers `theta^p` of such numbers.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use super::intpoly::{count_roots_closed, IntPoly};

/// A real root of a square-free integer polynomial, isolated by a rational
/// interval `[lo, hi]` that contains no other root. When `lo == hi` the
/// number is that rational; otherwise the polynomial is nonzero at both
/// endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// Exact `k`-th root of a nonnegative rational, if it is rational.
pub(crate) fn exact_root(r: &BigRational, k: u32) -> Option<BigRational> {
    if k == 1 {
        return Some(r.clone());
    }
    if r.is_negative() {
        return None;
    }
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    if num::pow(n.clone(), k as usize) == *r.numer()
        && num::pow(d.clone(), k as usize) == *r.denom()
    {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Rational bounds `lo <= s^(1/k) <= hi` with denominators `2^bits`.
fn root_bounds(s: &BigRational, k: u32, bits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << (bits as usize * k as usize);
    let scaled = s * BigRational::from_integer(scale);
    let floor = scaled.floor().to_integer();
    let ceil = scaled.ceil().to_integer();
    let den = BigInt::one() << bits as usize;
    let lo = BigRational::new(floor.nth_root(k), den.clone());
    let hi_root = ceil.nth_root(k);
    let hi_root = if num::pow(hi_root.clone(), k as usize) < ceil {
        hi_root + 1
    } else {
        hi_root
    };
    (lo, BigRational::new(hi_root, den))
}

impl AlgebraicNumber {
    pub fn from_rational(r: BigRational) -> Self {
        let poly = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicNumber {
            poly,
            lo: r.clone(),
            hi: r,
        }
    }

    /// Trusted constructor: `poly` square-free, exactly one root in
    /// `[lo, hi]`, nonzero at the endpoints when `lo < hi`.
    pub(crate) fn isolated(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        if lo == hi {
            return Self::from_rational(lo);
        }
        debug_assert!(poly.sign_at(&lo) != Ordering::Equal && poly.sign_at(&hi) != Ordering::Equal);
        AlgebraicNumber { poly, lo, hi }
    }

    /// Checked constructor. Returns `None` unless `[lo, hi]` isolates
    /// exactly one root of the square-free part of `poly`.
    pub fn new(poly: &IntPoly, lo: BigRational, hi: BigRational) -> Option<Self> {
        if poly.is_zero() || lo > hi {
            return None;
        }
        let sf = poly.squarefree();
        let chain = sf.sturm_chain();
        if count_roots_closed(&chain, &lo, &hi) != 1 {
            return None;
        }
        if lo == hi {
            return Some(Self::from_rational(lo));
        }
        if sf.sign_at(&lo) == Ordering::Equal {
            return Some(Self::from_rational(lo));
        }
        if sf.sign_at(&hi) == Ordering::Equal {
            return Some(Self::from_rational(hi));
        }
        Some(AlgebraicNumber { poly: sf, lo, hi })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step.
    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / two();
        let sm = self.poly.sign_at(&mid);
        if sm == Ordering::Equal {
            *self = Self::from_rational(mid);
            return;
        }
        if sm == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while self.width() > *width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        a.refine_to(&BigRational::new(BigInt::one(), BigInt::one() << 60usize));
        let mid = (&a.lo + &a.hi) / two();
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// Sign of `g` at this number.
    pub fn sign_of(&self, g: &IntPoly) -> Ordering {
        if let Some(r) = self.as_rational() {
            return g.sign_at(r);
        }
        if g.is_zero() {
            return Ordering::Equal;
        }
        let h = g.gcd(&self.poly);
        if h.degree() >= 1 {
            let chain = h.sturm_chain();
            if count_roots_closed(&chain, &self.lo, &self.hi) > 0 {
                return Ordering::Equal;
            }
        }
        let gsf = g.squarefree();
        if gsf.degree() == 0 {
            return g.sign_at(&self.lo);
        }
        let chain = gsf.sturm_chain();
        let mut a = self.clone();
        loop {
            if let Some(r) = a.as_rational() {
                return g.sign_at(r);
            }
            if count_roots_closed(&chain, &a.lo, &a.hi) == 0 {
                return g.sign_at(&a.lo);
            }
            a.refine();
        }
    }

    fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let mut a = self.clone();
        loop {
            if let Some(x) = a.as_rational() {
                return x.cmp(r);
            }
            if a.hi < *r {
                return Ordering::Less;
            }
            if a.lo > *r {
                return Ordering::Greater;
            }
            if a.poly.sign_at(r) == Ordering::Equal {
                return Ordering::Equal;
            }
            a.refine();
        }
    }

    /// Exact comparison of the two real numbers.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let common = a.poly.gcd(&b.poly);
        let common_chain = (common.degree() >= 1).then(|| common.sturm_chain());
        loop {
            if a.as_rational().is_some() || b.as_rational().is_some() {
                return a.cmp_value(&b);
            }
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(chain) = &common_chain {
                let lo = std::cmp::max(&a.lo, &b.lo).clone();
                let hi = std::cmp::min(&a.hi, &b.hi).clone();
                if count_roots_closed(chain, &lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }

    /// The nonnegative `k`-th root of this (nonnegative) number.
    pub fn nth_root(&self, k: u32) -> AlgebraicNumber {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        if let Some(r) = self.as_rational() {
            assert!(!r.is_negative(), "root of a negative number");
            if let Some(x) = exact_root(r, k) {
                return Self::from_rational(x);
            }
            let poly = IntPoly::new(
                std::iter::once(-r.numer().clone())
                    .chain(std::iter::repeat_n(BigInt::zero(), k as usize - 1))
                    .chain(std::iter::once(r.denom().clone()))
                    .collect(),
            );
            let mut bits = 4;
            loop {
                let (lo, hi) = root_bounds(r, k, bits);
                if poly.sign_at(&lo) != Ordering::Equal && poly.sign_at(&hi) != Ordering::Equal {
                    return AlgebraicNumber { poly, lo, hi };
                }
                bits += 4;
            }
        }
        assert!(!self.lo.is_negative(), "root of a possibly negative number");
        let base = if self.poly.sign_at_zero() == Ordering::Equal {
            IntPoly::new(self.poly.coeffs()[1..].to_vec())
        } else {
            self.poly.clone()
        };
        let lifted = base.compose_power(k as usize);
        let chain = lifted.sturm_chain();
        let mut a = self.clone();
        let mut bits = 8;
        loop {
            if let Some(r) = a.as_rational() {
                return Self::from_rational(r.clone()).nth_root(k);
            }
            let (lo, _) = root_bounds(&a.lo, k, bits);
            let (_, hi) = root_bounds(&a.hi, k, bits);
            let lo_k = num::pow(lo.clone(), k as usize);
            let hi_k = num::pow(hi.clone(), k as usize);
            if lifted.sign_at(&lo) == Ordering::Equal && lo_k >= a.lo {
                return Self::from_rational(lo);
            }
            if lifted.sign_at(&hi) == Ordering::Equal && hi_k <= a.hi {
                return Self::from_rational(hi);
            }
            if lifted.sign_at(&lo) != Ordering::Equal
                && lifted.sign_at(&hi) != Ordering::Equal
                && count_roots_closed(&chain, &lo, &hi) == 1
            {
                return AlgebraicNumber {
                    poly: lifted,
                    lo,
                    hi,
                };
            }
            bits += 4;
            a.refine();
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in [{}, {}]", self.poly, self.lo, self.hi),
        }
    }
}

/// A point of `[0, 1]`: either rational, or `theta^power` for an algebraic
/// `theta` (the substitution variable `u` with `z = u^power`).
#[derive(Clone, Debug)]
pub enum Point {
    Rational(BigRational),
    Root { base: AlgebraicNumber, power: u32 },
}

impl Point {
    pub fn rational(r: BigRational) -> Self {
        Point::Rational(r)
    }

    pub fn from_integer(n: i64) -> Self {
        Point::Rational(BigRational::from_integer(n.into()))
    }

    pub fn root(base: AlgebraicNumber, power: u32) -> Self {
        match base.as_rational() {
            Some(r) => Point::Rational(num::pow(r.clone(), power as usize)),
            None => Point::Root { base, power },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Point::Rational(r) => Some(r),
            Point::Root { .. } => None,
        }
    }

    pub fn power(&self) -> u32 {
        match self {
            Point::Rational(_) => 1,
            Point::Root { power, .. } => *power,
        }
    }

    /// The number `w` with `w^l` equal to this point; `l` must be a
    /// multiple of `power()`.
    pub fn lift(&self, l: u32) -> AlgebraicNumber {
        match self {
            Point::Rational(r) => AlgebraicNumber::from_rational(r.clone()).nth_root(l),
            Point::Root { base, power } => {
                debug_assert_eq!(l % power, 0);
                base.nth_root(l / power)
            }
        }
    }

    /// Rational interval `[a, b]` containing the point.
    pub fn enclosure(&self) -> (BigRational, BigRational) {
        match self {
            Point::Rational(r) => (r.clone(), r.clone()),
            Point::Root { base, power } => (
                num::pow(base.lo().clone(), *power as usize),
                num::pow(base.hi().clone(), *power as usize),
            ),
        }
    }

    pub fn refine_enclosure(&mut self, width: &BigRational) {
        if let Point::Root { base, power } = self {
            loop {
                let w = num::pow(base.hi().clone(), *power as usize)
                    - num::pow(base.lo().clone(), *power as usize);
                if w <= *width {
                    break;
                }
                base.refine();
                if let Some(r) = base.as_rational() {
                    *self = Point::Rational(num::pow(r.clone(), *power as usize));
                    return;
                }
            }
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            Point::Rational(x) => x.cmp(r),
            Point::Root { base, power } => {
                // sign of theta^power - r
                let mut c = vec![BigInt::zero(); *power as usize + 1];
                c[0] = -r.numer().clone();
                c[*power as usize] = r.denom().clone();
                base.sign_of(&IntPoly::new(c))
            }
        }
    }

    pub fn cmp_value(&self, other: &Point) -> Ordering {
        match (self, other) {
            (Point::Rational(a), Point::Rational(b)) => a.cmp(b),
            (p, Point::Rational(b)) => p.cmp_rational(b),
            (Point::Rational(a), p) => p.cmp_rational(a).reverse(),
            (p, q) => {
                let l = (p.power() as u64).lcm(&(q.power() as u64)) as u32;
                p.lift(l).cmp_value(&q.lift(l))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Point::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Point::Root { base, power } => base.to_f64().powi(*power as i32),
        }
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Rational(r) => write!(f, "{r}"),
            Point::Root { base, power: 1 } => write!(f, "{base}"),
            Point::Root { base, power } => write!(f, "({base})^{power}"),
        }
    }
}
