//! Closed subsets of `[0, 1]` with algebraic endpoints, and the sign
//! decomposition of a generalized polynomial over `[0, 1]`.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Zero};

use super::algebraic::{AlgebraicNumber, Point};
use super::intpoly::IntPoly;
use super::roots::isolate_open_unit;
use super::{GenPoly, GenPolyError, DEFAULT_DENOMINATOR_CAP};

/// Closed interval `[lo, hi]`, possibly a single point.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Point,
    pub hi: Point,
}

impl Interval {
    pub fn is_degenerate(&self) -> bool {
        self.lo.cmp_value(&self.hi) == Ordering::Equal
    }

    pub fn contains(&self, z: &Point) -> bool {
        self.lo.cmp_value(z) != Ordering::Greater && z.cmp_value(&self.hi) != Ordering::Greater
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo.cmp_value(&other.lo) != Ordering::Greater
            && other.hi.cmp_value(&self.hi) != Ordering::Greater
    }
}

/// Finite union of disjoint closed intervals inside `[0, 1]`, sorted.
#[derive(Clone, Debug, Default)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

/// Outcome of looking for a rational point in a set.
#[derive(Clone, Debug)]
pub enum SetWitness {
    /// A rational point in the interior of some component.
    Interior(BigRational),
    /// The set has no interior; this is one of its (isolated) points.
    Boundary(Point),
    Empty,
}

const MAX_DECIMALS: u32 = 12;

fn ten_pow(k: u32) -> BigInt {
    num::pow(BigInt::from(10), k as usize)
}

/// Rationals `j / 10^k` strictly between `lo` and `hi`.
pub(crate) fn decimal_candidates(lo: &Point, hi: &Point, k: u32) -> Vec<BigRational> {
    let step = BigRational::new(BigInt::one(), ten_pow(k));
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    lo.refine_enclosure(&step);
    hi.refine_enclosure(&step);
    let (a, _) = lo.enclosure();
    let (_, b) = hi.enclosure();
    let scale = BigRational::from_integer(ten_pow(k));
    let first = (a * &scale).floor().to_integer();
    let last = (b * &scale).ceil().to_integer();
    let mut out = Vec::new();
    let mut j = first;
    while j <= last {
        let c = BigRational::new(j.clone(), ten_pow(k));
        if lo.cmp_rational(&c) == Ordering::Less && hi.cmp_rational(&c) == Ordering::Greater {
            out.push(c);
        }
        j += 1;
    }
    out
}

/// Decimal points of the coarsest grid `10^-k` (k <= 12) that fall strictly
/// inside `(lo, hi)`; falls back to a single interior rational.
pub(crate) fn coarsest_decimal_candidates(lo: &Point, hi: &Point) -> (u32, Vec<BigRational>) {
    for k in 1..=MAX_DECIMALS {
        let c = decimal_candidates(lo, hi, k);
        if !c.is_empty() {
            return (k, c);
        }
    }
    (MAX_DECIMALS + 1, vec![interior_rational(lo, hi)])
}

/// Some rational strictly between `lo < hi`.
pub(crate) fn interior_rational(lo: &Point, hi: &Point) -> BigRational {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    loop {
        let (_, a) = lo.enclosure();
        let (b, _) = hi.enclosure();
        if a < b {
            return (a + b) / BigRational::from_integer(2.into());
        }
        let (a0, _) = lo.enclosure();
        let (_, b1) = hi.enclosure();
        let w = (b1 - a0) / BigRational::from_integer(4.into());
        lo.refine_enclosure(&w);
        hi.refine_enclosure(&w);
    }
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn unit() -> Self {
        IntervalSet {
            components: vec![Interval {
                lo: Point::from_integer(0),
                hi: Point::from_integer(1),
            }],
        }
    }

    /// Components must already be sorted, disjoint and inside `[0, 1]`.
    pub fn from_components(components: Vec<Interval>) -> Self {
        IntervalSet { components }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn has_interior(&self) -> bool {
        self.components.iter().any(|c| !c.is_degenerate())
    }

    pub fn contains(&self, z: &Point) -> bool {
        self.components.iter().any(|c| c.contains(z))
    }

    pub fn contains_rational(&self, z: &BigRational) -> bool {
        self.contains(&Point::Rational(z.clone()))
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.components.len() && j < other.components.len() {
            let a = &self.components[i];
            let b = &other.components[j];
            let lo = if a.lo.cmp_value(&b.lo) == Ordering::Less {
                &b.lo
            } else {
                &a.lo
            };
            let a_hi_first = a.hi.cmp_value(&b.hi) != Ordering::Greater;
            let hi = if a_hi_first { &a.hi } else { &b.hi };
            if lo.cmp_value(hi) != Ordering::Greater {
                out.push(Interval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            if a_hi_first {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { components: out }
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.components
            .iter()
            .all(|c| other.components.iter().any(|d| d.contains_interval(c)))
    }

    /// Removes the isolated point `{z}` if it is a component.
    pub fn without_isolated_point(&self, z: &Point) -> IntervalSet {
        IntervalSet {
            components: self
                .components
                .iter()
                .filter(|c| !(c.is_degenerate() && c.lo.cmp_value(z) == Ordering::Equal))
                .cloned()
                .collect(),
        }
    }

    /// A rational interior point of the first component of positive length,
    /// chosen on the coarsest decimal grid that meets it.
    pub fn pick_rational_witness(&self) -> SetWitness {
        for c in &self.components {
            if !c.is_degenerate() {
                let (_, cands) = coarsest_decimal_candidates(&c.lo, &c.hi);
                return SetWitness::Interior(cands[(cands.len() - 1) / 2].clone());
            }
        }
        match self.components.first() {
            Some(c) => SetWitness::Boundary(c.lo.clone()),
            None => SetWitness::Empty,
        }
    }
}

/// A maximal piece of `[0, 1]` on which `f` has constant sign: either a
/// single point (`open == false`, `lo == hi`) or an open interval.
#[derive(Clone, Debug)]
pub struct SignCell {
    pub lo: Point,
    pub hi: Point,
    pub open: bool,
    pub sign: Ordering,
}

/// Sign structure of `f` over `[0, 1]`, computed through `z = u^q`.
#[derive(Clone, Debug)]
pub struct SignDecomposition {
    pub substitution: u32,
    pub poly: IntPoly,
    pub cells: Vec<SignCell>,
}

fn separate(roots: &mut [AlgebraicNumber]) {
    let zero = BigRational::zero();
    let one = BigRational::one();
    loop {
        let mut changed = false;
        if let Some(first) = roots.first_mut() {
            if first.as_rational().is_none() && *first.lo() <= zero {
                first.refine();
                changed = true;
            }
        }
        if let Some(last) = roots.last_mut() {
            if last.as_rational().is_none() && *last.hi() >= one {
                last.refine();
                changed = true;
            }
        }
        for i in 1..roots.len() {
            if roots[i - 1].hi() >= roots[i].lo() {
                roots[i - 1].refine();
                roots[i].refine();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

impl SignDecomposition {
    pub fn new(f: &GenPoly, cap: u32) -> Result<Self, GenPolyError> {
        let q = f.checked_lcm(cap)?;
        let poly = f.to_int_poly(q);
        let zero = Point::from_integer(0);
        let one = Point::from_integer(1);
        if poly.is_zero() {
            let cells = vec![
                SignCell {
                    lo: zero.clone(),
                    hi: zero.clone(),
                    open: false,
                    sign: Ordering::Equal,
                },
                SignCell {
                    lo: zero,
                    hi: one.clone(),
                    open: true,
                    sign: Ordering::Equal,
                },
                SignCell {
                    lo: one.clone(),
                    hi: one,
                    open: false,
                    sign: Ordering::Equal,
                },
            ];
            return Ok(SignDecomposition {
                substitution: q,
                poly,
                cells,
            });
        }
        let mut roots = isolate_open_unit(&poly);
        separate(&mut roots);

        let mut cells = vec![SignCell {
            lo: zero.clone(),
            hi: zero.clone(),
            open: false,
            sign: poly.sign_at_zero(),
        }];
        let mut prev_point = zero;
        let mut prev_bound = BigRational::zero();
        for r in &roots {
            let sample = (&prev_bound + r.lo()) / BigRational::from_integer(2.into());
            let pt = Point::root(r.clone(), q);
            cells.push(SignCell {
                lo: prev_point.clone(),
                hi: pt.clone(),
                open: true,
                sign: poly.sign_at(&sample),
            });
            cells.push(SignCell {
                lo: pt.clone(),
                hi: pt.clone(),
                open: false,
                sign: Ordering::Equal,
            });
            prev_point = pt;
            prev_bound = r.hi().clone();
        }
        let sample = (&prev_bound + BigRational::one()) / BigRational::from_integer(2.into());
        cells.push(SignCell {
            lo: prev_point,
            hi: one.clone(),
            open: true,
            sign: poly.sign_at(&sample),
        });
        cells.push(SignCell {
            lo: one.clone(),
            hi: one,
            open: false,
            sign: poly.sign_at_one(),
        });
        Ok(SignDecomposition {
            substitution: q,
            poly,
            cells,
        })
    }

    /// Open cells on which `f < 0`.
    pub fn negative_regions(&self) -> impl Iterator<Item = &SignCell> {
        self.cells
            .iter()
            .filter(|c| c.open && c.sign == Ordering::Less)
    }

    pub fn is_negative_somewhere(&self) -> bool {
        self.negative_regions().next().is_some()
    }

    /// Roots of `f` in `[0, 1]`.
    pub fn zeros(&self) -> impl Iterator<Item = &Point> {
        self.cells
            .iter()
            .filter(|c| !c.open && c.sign == Ordering::Equal)
            .map(|c| &c.lo)
    }

    /// `{z in [0, 1] : f(z) <= 0}` as merged closed components.
    pub fn nonpositive_set(&self) -> IntervalSet {
        let mut comps: Vec<Interval> = Vec::new();
        let mut current: Option<Interval> = None;
        for c in &self.cells {
            if c.sign != Ordering::Greater {
                match &mut current {
                    Some(iv) => iv.hi = c.hi.clone(),
                    None => {
                        current = Some(Interval {
                            lo: c.lo.clone(),
                            hi: c.hi.clone(),
                        })
                    }
                }
            } else if let Some(iv) = current.take() {
                comps.push(iv);
            }
        }
        if let Some(iv) = current {
            comps.push(iv);
        }
        IntervalSet { components: comps }
    }
}

/// `S = {z in [0, 1] : f(z) <= 0}` with the default denominator cap.
pub fn negativity_set(f: &GenPoly) -> Result<IntervalSet, GenPolyError> {
    negativity_set_with_cap(f, DEFAULT_DENOMINATOR_CAP)
}

pub fn negativity_set_with_cap(f: &GenPoly, cap: u32) -> Result<IntervalSet, GenPolyError> {
    Ok(SignDecomposition::new(f, cap)?.nonpositive_set())
}
