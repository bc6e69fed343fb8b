//! Real root isolation on the unit interval: Descartes' rule of signs with
//! dyadic bisection, all in exact integer arithmetic.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Zero};

use super::algebraic::AlgebraicNumber;
use super::intpoly::{count_roots_closed, IntPoly};

/// Upper bound on the number of roots of `q` in `(0, 1)`.
fn descartes_bound(q: &IntPoly) -> usize {
    q.reversed().taylor_shift_one().sign_variations()
}

fn divide_by_x(p: &IntPoly) -> IntPoly {
    IntPoly::new(p.coeffs()[1..].to_vec())
}

fn divide_by_x_minus_one(p: &IntPoly) -> IntPoly {
    p.div_exact(&IntPoly::from_i64(&[-1, 1]))
}

fn dyadic(c: &BigInt, k: u32) -> BigRational {
    BigRational::new(c.clone(), BigInt::one() << k as usize)
}

/// Isolates the distinct roots of `p` lying strictly inside `(0, 1)`,
/// sorted increasingly. `p` need not be square-free.
pub fn isolate_open_unit(p: &IntPoly) -> Vec<AlgebraicNumber> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let mut base = p.squarefree();
    if base.sign_at_zero() == Ordering::Equal {
        base = divide_by_x(&base);
    }
    if base.degree() >= 1 && base.sign_at_one() == Ordering::Equal {
        base = divide_by_x_minus_one(&base).primitive();
    }
    if base.degree() == 0 {
        return Vec::new();
    }
    if base.degree() == 1 {
        let c = base.coeffs();
        let r = BigRational::new(-c[0].clone(), c[1].clone());
        if r > BigRational::zero() && r < BigRational::one() {
            return vec![AlgebraicNumber::from_rational(r)];
        }
        return Vec::new();
    }

    let mut exact: Vec<BigRational> = Vec::new();
    let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
    let mut stack: Vec<(IntPoly, BigInt, u32)> = vec![(base.clone(), BigInt::zero(), 0)];
    while let Some((q, c, k)) = stack.pop() {
        if q.degree() == 0 {
            continue;
        }
        match descartes_bound(&q) {
            0 => {}
            1 => isolated.push((dyadic(&c, k), dyadic(&(&c + 1), k))),
            _ => {
                let mut left = q.scale_half();
                let mut right = left.taylor_shift_one();
                let c2 = &c * 2;
                if right.constant().is_zero() {
                    exact.push(dyadic(&(&c2 + 1), k + 1));
                    right = divide_by_x(&right);
                    left = divide_by_x_minus_one(&left);
                }
                stack.push((right, &c2 + 1, k + 1));
                stack.push((left, c2, k + 1));
            }
        }
    }

    // Interval endpoints may coincide with exact roots found at shallower
    // levels; shrink those intervals so that each isolates a single root of
    // `base` in the closed sense.
    let chain = base.sturm_chain();
    let mut out: Vec<AlgebraicNumber> = exact
        .into_iter()
        .map(AlgebraicNumber::from_rational)
        .collect();
    for (mut lo, mut hi) in isolated {
        while base.sign_at(&lo) == Ordering::Equal || base.sign_at(&hi) == Ordering::Equal {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            if base.sign_at(&mid) == Ordering::Equal {
                lo = mid.clone();
                hi = mid;
                break;
            }
            let left_open = count_roots_closed(&chain, &lo, &mid)
                - usize::from(base.sign_at(&lo) == Ordering::Equal);
            if left_open == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(AlgebraicNumber::isolated(base.clone(), lo, hi));
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()).then(a.hi().cmp(b.hi())));
    out
}
