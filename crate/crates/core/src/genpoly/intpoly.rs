//! Dense univariate polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Coefficients are stored lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn sign_of(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Positive integer multiple of the rational polynomial `coeffs`.
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lr = BigRational::from_integer(l);
        Self::new(coeffs.iter().map(|c| (c * &lr).to_integer()).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Divides out the positive content, keeping the sign of every value.
    pub fn sign_preserving_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `sum c_i a^i b^(d-i)` for `x = a/b`, `b > 0`: equals `b^d p(x)`.
    fn homogeneous_value(&self, x: &BigRational) -> BigInt {
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        sign_of(&self.homogeneous_value(x))
    }

    pub fn sign_at_zero(&self) -> Ordering {
        sign_of(&self.constant())
    }

    pub fn sign_at_one(&self) -> Ordering {
        sign_of(&self.coeffs.iter().sum::<BigInt>())
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// `p(x + 1)`.
    pub fn taylor_shift_one(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].clone();
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// `x^d p(1/x)` with `d = deg p`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// `2^d p(x/2)`.
    pub fn scale_half(&self) -> IntPoly {
        let d = self.degree();
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << (d - i))
                .collect(),
        )
    }

    pub fn sign_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut v = 0;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let s = c.is_positive();
            if let Some(l) = last {
                if l != s {
                    v += 1;
                }
            }
            last = Some(s);
        }
        v
    }

    /// Positive multiple of the remainder of `self` by `b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree();
        let lb = b.leading();
        let mut r = self.clone();
        let mut steps = 0u32;
        while !r.is_zero() && r.degree() >= db {
            let lr = r.leading();
            let shift = r.degree() - db;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * c;
            }
            r = IntPoly::new(next);
            steps += 1;
        }
        if lb.is_negative() && steps % 2 == 1 {
            r = -&r;
        }
        r
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Quotient over the rationals, scaled to an integer polynomial.
    pub fn div_exact(&self, b: &IntPoly) -> IntPoly {
        let (q, _) = self.div_rem_rational(b);
        IntPoly::from_rationals(&q)
    }

    pub fn div_rem_rational(&self, b: &IntPoly) -> (Vec<BigRational>, Vec<BigRational>) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let db = b.degree();
        let lb = BigRational::from_integer(b.leading());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] / &lb;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[i + j] -= &c * BigRational::from_integer(bc.clone());
            }
            q[i] = c;
        }
        r.truncate(db);
        (q, r)
    }

    pub fn squarefree(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.primitive()
        } else {
            self.div_exact(&g).primitive()
        }
    }

    /// Sturm chain of a square-free polynomial.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == 0 {
                break;
            }
            let r = -&chain[n - 2]
                .pseudo_rem(&chain[n - 1])
                .sign_preserving_primitive();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn variations_at(chain: &[IntPoly], x: &BigRational) -> usize {
    let mut last: Option<Ordering> = None;
    let mut v = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if let Some(l) = last {
            if l != s {
                v += 1;
            }
        }
        last = Some(s);
    }
    v
}

/// Number of distinct roots of the square-free `p` in the closed interval
/// `[lo, hi]`, from its Sturm chain.
pub fn count_roots_closed(chain: &[IntPoly], lo: &BigRational, hi: &BigRational) -> usize {
    let p = &chain[0];
    if lo == hi {
        return usize::from(p.sign_at(lo) == Ordering::Equal);
    }
    let open_right = variations_at(chain, lo) - variations_at(chain, hi);
    open_right + usize::from(p.sign_at(lo) == Ordering::Equal)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(
            f,
            self.coeffs.iter().cloned().map(BigRational::from_integer),
            "u",
        )
    }
}

/// Renders `sum c_i var^i` lowest degree first.
pub(crate) fn write_poly(
    f: &mut fmt::Formatter<'_>,
    coeffs: impl Iterator<Item = BigRational>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match (i, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{a}{var}")?,
            (_, true) => write!(f, "{var}^{i}")?,
            (_, false) => write!(f, "{a}{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn evaluation_and_sign() {
        let p = IntPoly::from_i64(&[1, -3, 3]);
        assert_eq!(p.eval(&q(1, 2)), q(1, 4));
        assert_eq!(p.sign_at(&q(1, 2)), Ordering::Greater);
        let p = IntPoly::from_i64(&[-1, 2]);
        assert_eq!(p.sign_at(&q(1, 2)), Ordering::Equal);
        assert_eq!(p.sign_at(&q(1, 3)), Ordering::Less);
        assert_eq!(p.sign_at(&q(-1, 3)), Ordering::Less);
    }

    #[test]
    fn shifts_and_scales() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(
            IntPoly::from_i64(&[0, 0, 1]).taylor_shift_one(),
            IntPoly::from_i64(&[1, 2, 1])
        );
        // 4 * ((x/2)^2 - 1) = x^2 - 4
        assert_eq!(
            IntPoly::from_i64(&[-1, 0, 1]).scale_half(),
            IntPoly::from_i64(&[-4, 0, 1])
        );
        assert_eq!(
            IntPoly::from_i64(&[1, 2, 3]).compose_power(2),
            IntPoly::from_i64(&[1, 0, 2, 0, 3])
        );
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let p = IntPoly::from_i64(&[1, -2, 1]).mul(&IntPoly::from_i64(&[2, 1]));
        assert_eq!(p.squarefree(), IntPoly::from_i64(&[-2, 1, 1]));
        let g = p.gcd(&IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[5, 1])));
        assert_eq!(g, IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // roots 1/3, 1/2, 2
        let p = IntPoly::from_i64(&[-1, 3])
            .mul(&IntPoly::from_i64(&[-1, 2]))
            .mul(&IntPoly::from_i64(&[-2, 1]));
        let chain = p.sturm_chain();
        assert_eq!(count_roots_closed(&chain, &q(0, 1), &q(1, 1)), 2);
        assert_eq!(count_roots_closed(&chain, &q(1, 3), &q(1, 2)), 2);
        assert_eq!(count_roots_closed(&chain, &q(1, 3), &q(2, 5)), 1);
        assert_eq!(count_roots_closed(&chain, &q(2, 5), &q(1, 2)), 1);
        assert_eq!(count_roots_closed(&chain, &q(0, 1), &q(3, 1)), 3);
        assert_eq!(count_roots_closed(&chain, &q(1, 2), &q(1, 2)), 1);
    }
}
