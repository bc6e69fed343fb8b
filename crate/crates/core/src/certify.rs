//! The series `f_A = 1 - H_X + H_R`, exact certificates for the GS and weak
//! GS conditions, and checks of the Golod–Shafarevich inequalities against
//! computed Hilbert truncations.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{poly_degree, Degree, DegreeFunction, Presentation};
use crate::gbasis::{truncated_groebner_with, GbError, GroebnerOptions, LimitPolicy};
use crate::genpoly::{
    coarsest_decimal_candidates, GenPoly, GenPolyError, IntervalSet, Point, SignCell,
    SignDecomposition, DEFAULT_DENOMINATOR_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GsStatus {
    #[serde(rename = "GS")]
    Gs,
    #[serde(rename = "wGS_only")]
    WgsOnly,
    #[serde(rename = "not_wGS")]
    NotWgs,
}

impl GsStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GsStatus::Gs => "GS",
            GsStatus::WgsOnly => "wGS_only",
            GsStatus::NotWgs => "not_wGS",
        }
    }

    /// GS implies wGS implies anything.
    pub fn strength(&self) -> u8 {
        match self {
            GsStatus::Gs => 2,
            GsStatus::WgsOnly => 1,
            GsStatus::NotWgs => 0,
        }
    }
}

impl fmt::Display for GsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// Rational point with `f < 0` there.
    Rational(BigRational),
    /// Zero of `f` in a set without interior.
    Boundary(Point),
}

impl Witness {
    pub fn point(&self) -> Point {
        match self {
            Witness::Rational(r) => Point::Rational(r.clone()),
            Witness::Boundary(p) => p.clone(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Rational(r) => write!(f, "{r}"),
            Witness::Boundary(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GsCertificate {
    pub status: GsStatus,
    pub witness: Option<Witness>,
    /// Exact `f(witness)` when the witness is rational and `f` is exactly
    /// evaluable there.
    pub witness_value: Option<BigRational>,
    pub negativity_set: IntervalSet,
    pub series: GenPoly,
}

/// `1 - sum_x z^deg(x) + sum_r z^deg(r)`.
pub fn gs_series(p: &Presentation) -> GenPoly {
    series_from_parts(
        p.degrees(),
        p.relations().iter().map(|r| poly_degree(r, p.degrees())),
    )
}

pub(crate) fn series_from_parts(
    deg: &DegreeFunction,
    relation_degrees: impl Iterator<Item = Degree>,
) -> GenPoly {
    let one = BigRational::one();
    let gens = deg.weights().iter().map(|w| (w.clone(), -one.clone()));
    let rels = relation_degrees
        .filter_map(|d| d.finite().cloned())
        .map(|d| (d, one.clone()));
    GenPoly::from_terms(
        std::iter::once((BigRational::zero(), one.clone()))
            .chain(gens)
            .chain(rels),
    )
}

/// Ranking value at a candidate: exact when possible, otherwise a float
/// estimate (the sign itself is already certified by the cell).
fn rank(
    value: &dyn Fn(&BigRational) -> Option<BigRational>,
    approx: &dyn Fn(f64) -> f64,
    z: &BigRational,
) -> BigRational {
    value(z).unwrap_or_else(|| {
        let x = num::ToPrimitive::to_f64(z).unwrap_or(0.0);
        BigRational::from_f64(approx(x)).unwrap_or_else(BigRational::zero)
    })
}

/// Rational witness inside the given negative cells: the coarsest decimal
/// grid meeting some cell, then the candidate with the most negative value,
/// the smaller point on ties.
pub(crate) fn choose_witness<'a>(
    cells: impl Iterator<Item = &'a SignCell>,
    value: &dyn Fn(&BigRational) -> Option<BigRational>,
    approx: &dyn Fn(f64) -> f64,
) -> Option<BigRational> {
    let mut best_k = u32::MAX;
    let mut candidates: Vec<BigRational> = Vec::new();
    for c in cells {
        let (k, cands) = coarsest_decimal_candidates(&c.lo, &c.hi);
        match k.cmp(&best_k) {
            Ordering::Less => {
                best_k = k;
                candidates = cands;
            }
            Ordering::Equal => candidates.extend(cands),
            Ordering::Greater => {}
        }
    }
    candidates
        .into_iter()
        .map(|z| (rank(value, approx, &z), z))
        .min()
        .map(|(_, z)| z)
}

pub fn certify(p: &Presentation) -> Result<GsCertificate, GenPolyError> {
    certify_series(&gs_series(p), DEFAULT_DENOMINATOR_CAP)
}

/// Certificate for an arbitrary series on `[0, 1]`.
pub fn certify_series(f: &GenPoly, cap: u32) -> Result<GsCertificate, GenPolyError> {
    let dec = SignDecomposition::new(f, cap)?;
    let set = dec.nonpositive_set();
    let value = |z: &BigRational| f.evaluate(z).ok();
    let approx = |x: f64| f.evaluate_f64(x);
    if let Some(z) = choose_witness(dec.negative_regions(), &value, &approx) {
        return Ok(GsCertificate {
            status: GsStatus::Gs,
            witness_value: f.evaluate(&z).ok(),
            witness: Some(Witness::Rational(z)),
            negativity_set: set,
            series: f.clone(),
        });
    }
    if let Some(zero) = dec.zeros().next() {
        let witness_value = zero.as_rational().map(|_| BigRational::zero());
        return Ok(GsCertificate {
            status: GsStatus::WgsOnly,
            witness: Some(Witness::Boundary(zero.clone())),
            witness_value,
            negativity_set: set,
            series: f.clone(),
        });
    }
    Ok(GsCertificate {
        status: GsStatus::NotWgs,
        witness: None,
        witness_value: None,
        negativity_set: set,
        series: f.clone(),
    })
}

impl GsCertificate {
    /// Checks the status against the set and the witness exactly.
    pub fn check(&self) -> Result<(), String> {
        let set = &self.negativity_set;
        match self.status {
            GsStatus::NotWgs => {
                if !set.is_empty() || self.witness.is_some() {
                    return Err("not_wGS with nonempty set or a witness".into());
                }
            }
            GsStatus::WgsOnly => {
                if set.is_empty() || set.has_interior() {
                    return Err("wGS_only needs a nonempty set of isolated points".into());
                }
                let w = self.witness.as_ref().ok_or("wGS_only without witness")?;
                if self.series.sign_at(&w.point()).map_err(|e| e.to_string())? != Ordering::Equal {
                    return Err("boundary witness is not a zero".into());
                }
            }
            GsStatus::Gs => {
                let Some(Witness::Rational(z)) = &self.witness else {
                    return Err("GS without a rational witness".into());
                };
                if self.series.sign_at_rational(z).map_err(|e| e.to_string())? != Ordering::Less {
                    return Err(format!("f({z}) is not negative"));
                }
                if !set.contains_rational(z) {
                    return Err("witness outside the negativity set".into());
                }
                if let Some(v) = &self.witness_value {
                    if self.series.evaluate(z).ok().as_ref() != Some(v) {
                        return Err("witness value mismatch".into());
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error(transparent)]
    Series(#[from] GenPolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
}

/// Coefficient check of `f(z) / (1 - z) * H(z) >= 1 / (1 - z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VinbergReport {
    pub cutoff: u64,
    /// Weights were multiplied by this factor to make them integers.
    pub scaled_by: u64,
    /// Coefficients of `f(z) H(z) / (1 - z)`, degrees `0..=cutoff`.
    pub lhs: Vec<BigInt>,
    pub first_violation: Option<u64>,
    /// Every coefficient equals 1.
    pub equality: bool,
    pub verdict: Verdict,
}

pub fn verify_vinberg(p: &Presentation, cutoff: u64) -> Result<VinbergReport, CertifyError> {
    verify_vinberg_with(p, cutoff, &GroebnerOptions::default())
}

pub fn verify_vinberg_with(
    p: &Presentation,
    cutoff: u64,
    options: &GroebnerOptions,
) -> Result<VinbergReport, CertifyError> {
    let scaling = p.degrees().integer_scaling().map_err(GbError::from)?;
    let q = if scaling.factor == 1 {
        p.clone()
    } else {
        let ints: Vec<i64> = scaling.weights.iter().map(|&w| w as i64).collect();
        p.with_degrees(DegreeFunction::from_integers(p.generators(), &ints).map_err(GbError::from)?)
            .map_err(GbError::from)?
    };
    let opts = GroebnerOptions {
        on_limit: LimitPolicy::Stop,
        ..options.clone()
    };
    let gb = truncated_groebner_with(&q, &BigRational::from_integer(cutoff.into()), &opts)?;
    let h = gb.hilbert();
    let n = cutoff as usize;
    let mut hs = vec![BigInt::zero(); n + 1];
    for (d, c) in &h.entries {
        hs[d.to_integer().try_into().unwrap_or(0usize)] = BigInt::from(c.clone());
    }
    let mut fs = vec![BigInt::zero(); n + 1];
    for (e, c) in gs_series(&q).terms() {
        let i: usize = e.to_integer().try_into().unwrap_or(usize::MAX);
        if i <= n {
            fs[i] = c.to_integer();
        }
    }
    let mut lhs = Vec::with_capacity(n + 1);
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let fh: BigInt = (0..=k).map(|i| &fs[i] * &hs[k - i]).sum();
        acc += fh;
        lhs.push(acc.clone());
    }
    let one = BigInt::one();
    let first_violation = lhs.iter().position(|c| *c < one).map(|i| i as u64);
    let equality = lhs.iter().all(|c| *c == one);
    let verdict = if !gb.is_complete() {
        Verdict::Inconclusive
    } else if first_violation.is_some() {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    Ok(VinbergReport {
        cutoff,
        scaled_by: scaling.factor,
        lhs,
        first_violation,
        equality,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarStep {
    pub cutoff: BigRational,
    /// `H_trunc(z0)`, a lower bound for `H_A(z0)`.
    pub hilbert_value: BigRational,
    /// `f(z0) * H_trunc(z0)`.
    pub product: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarEvidence {
    /// `f(z0) > 0`; the products are lower bounds for `f(z0) H_A(z0)`.
    LowerBound { reached_one: bool },
    /// `f(z0) <= 0`, so `H_A(z0)` must be infinite; the truncated values are
    /// reported as evidence of divergence.
    Divergence { increasing: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarReport {
    pub z0: BigRational,
    pub f_value: BigRational,
    pub steps: Vec<ScalarStep>,
    pub evidence: ScalarEvidence,
}

/// One-sided evidence for `f(z0) H_A(z0) >= 1` at cutoffs `1, 2, ..., cutoff`.
pub fn verify_scalar(
    p: &Presentation,
    z0: &BigRational,
    cutoff: u64,
) -> Result<ScalarReport, CertifyError> {
    if z0.is_negative() || *z0 > BigRational::one() {
        return Err(GenPolyError::OutsideUnitInterval(z0.to_string()).into());
    }
    let f_value = gs_series(p).evaluate(z0)?;
    let gb = truncated_groebner_with(
        p,
        &BigRational::from_integer(cutoff.into()),
        &GroebnerOptions::default(),
    )?;
    let h = gb.hilbert();
    let mut steps = Vec::new();
    for c in 1..=cutoff {
        let c = BigRational::from_integer(c.into());
        let series =
            GenPoly::from_terms(h.entries.iter().filter(|(d, _)| *d <= c).map(|(d, n)| {
                (
                    d.clone(),
                    BigRational::from_integer(BigInt::from(n.clone())),
                )
            }));
        let hv = series.evaluate(z0)?;
        steps.push(ScalarStep {
            product: &f_value * &hv,
            hilbert_value: hv,
            cutoff: c,
        });
    }
    let evidence = if f_value.is_positive() {
        ScalarEvidence::LowerBound {
            reached_one: steps
                .last()
                .is_some_and(|s| s.product >= BigRational::one()),
        }
    } else {
        ScalarEvidence::Divergence {
            increasing: steps
                .windows(2)
                .all(|w| w[1].hilbert_value > w[0].hilbert_value),
        }
    };
    Ok(ScalarReport {
        z0: z0.clone(),
        f_value,
        steps,
        evidence,
    })
}
