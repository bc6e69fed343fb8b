//! Direct limits of quotient presentations `A_0 -> A_1 -> ...` in which the
//! stages add members of monomial relation families `prefix * block^t * suffix`.
//!
//! Family degrees are affine in `t`, so the tail of the limit series is a
//! finite sum of geometric series and the limit is decided exactly on
//! `[0, 1)` by clearing denominators.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    poly_degree, word_degree, AlgebraError, Degree, DegreeFunction, GeneratorSet, NcPolynomial,
    Presentation, Word,
};
use crate::automaton::Pattern;
use crate::certify::{
    certify, certify_series, choose_witness, gs_series, GsCertificate, GsStatus, Witness,
};
use crate::gbasis::{
    free_subalgebra_check, hilbert_truncation, FreeSubalgebraCheck, GbError, HilbertTruncation,
};
use crate::genpoly::{
    GenPoly, GenPolyError, IntPoly, IntervalSet, Point, SetWitness, SignDecomposition,
    DEFAULT_DENOMINATOR_CAP,
};
use crate::growth::{classify_patterns, Growth};

pub const DEFAULT_STABILIZATION_DEGREE: u64 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] GenPolyError),
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error("the repeated block of a family must be nonempty")]
    EmptyBlock,
    #[error("family member t = {0} is the empty word")]
    EmptyMember(u64),
    #[error("family range {start}..={end} is empty")]
    EmptyRange { start: u64, end: u64 },
    #[error("family uses a letter outside the generator set")]
    LetterOutOfRange,
    #[error("the limit series diverges at z = 1")]
    Divergent,
    #[error("point {0} lies outside [0, 1]")]
    OutsideUnitInterval(String),
    #[error("family growth needs monomial base relations")]
    NonMonomialBase,
}

/// Relations `prefix * block^t * suffix` for `t` from `start` to `end`
/// (unbounded when `end` is `None`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationFamily {
    prefix: Word,
    block: Word,
    suffix: Word,
    start: u64,
    end: Option<u64>,
}

impl RelationFamily {
    pub fn new(
        prefix: Word,
        block: Word,
        suffix: Word,
        start: u64,
        end: Option<u64>,
    ) -> Result<Self, LimitError> {
        if block.is_empty() {
            return Err(LimitError::EmptyBlock);
        }
        if let Some(e) = end {
            if e < start {
                return Err(LimitError::EmptyRange { start, end: e });
            }
        }
        let f = RelationFamily {
            prefix,
            block,
            suffix,
            start,
            end,
        };
        if f.member(start).is_empty() {
            return Err(LimitError::EmptyMember(start));
        }
        Ok(f)
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn block(&self) -> &Word {
        &self.block
    }

    pub fn suffix(&self) -> &Word {
        &self.suffix
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn end(&self) -> Option<u64> {
        self.end
    }

    pub fn is_unbounded(&self) -> bool {
        self.end.is_none()
    }

    pub fn member(&self, t: u64) -> Word {
        self.prefix
            .concat(&self.block.pow(t as usize))
            .concat(&self.suffix)
    }

    /// `(c, e)` with `deg(member(t)) = c + e * t`.
    pub fn degree_law(&self, deg: &DegreeFunction) -> (BigRational, BigRational) {
        (
            word_degree(&self.prefix, deg) + word_degree(&self.suffix, deg),
            word_degree(&self.block, deg),
        )
    }

    /// Parameters `t` present at stage `n`.
    pub fn stage_range(&self, n: u64) -> std::ops::RangeInclusive<u64> {
        let hi = self.end.map_or(n, |e| e.min(n));
        self.start..=hi
    }

    /// Parameters whose member has degree at most `bound`.
    pub fn degree_range(
        &self,
        deg: &DegreeFunction,
        bound: &BigRational,
    ) -> std::ops::RangeInclusive<u64> {
        let (c, e) = self.degree_law(deg);
        let t_max = (bound - c) / e;
        if t_max.is_negative() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        let t_max: u64 = t_max.floor().to_integer().try_into().unwrap_or(u64::MAX);
        let hi = self.end.map_or(t_max, |e| e.min(t_max));
        self.start..=hi
    }

    fn max_letter(&self) -> Option<usize> {
        [&self.prefix, &self.block, &self.suffix]
            .iter()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }
}

/// Base presentation `A_0` plus relation families; stage `n` adds the
/// members with `t <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSpec {
    base: Presentation,
    families: Vec<RelationFamily>,
}

impl LimitSpec {
    pub fn new(base: Presentation, families: Vec<RelationFamily>) -> Result<Self, LimitError> {
        let n = base.generators().len();
        if families
            .iter()
            .any(|f| f.max_letter().is_some_and(|l| l >= n))
        {
            return Err(LimitError::LetterOutOfRange);
        }
        Ok(LimitSpec { base, families })
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn families(&self) -> &[RelationFamily] {
        &self.families
    }

    pub fn generators(&self) -> &GeneratorSet {
        self.base.generators()
    }

    pub fn degrees(&self) -> &DegreeFunction {
        self.base.degrees()
    }

    pub fn has_infinite_tail(&self) -> bool {
        self.families.iter().any(RelationFamily::is_unbounded)
    }
}

/// Presentation of stage `A_n`.
pub fn instantiate(spec: &LimitSpec, n: u64) -> Presentation {
    let extra = spec.families.iter().flat_map(|f| {
        f.stage_range(n)
            .map(move |t| NcPolynomial::word(f.member(t)))
    });
    spec.base
        .add_relations(extra)
        .expect("family members are valid relations")
}

/// All relations of degree at most `n` from the base and the families.
pub fn truncate_relations(spec: &LimitSpec, n: &BigRational) -> Presentation {
    let deg = spec.degrees();
    let base = spec
        .base
        .relations()
        .iter()
        .filter(|r| matches!(poly_degree(r, deg), Degree::Finite(ref d) if d <= n))
        .cloned();
    let fams = spec.families.iter().flat_map(|f| {
        f.degree_range(deg, n)
            .map(move |t| NcPolynomial::word(f.member(t)))
    });
    spec.base
        .with_relations(base.chain(fams).collect())
        .expect("relations taken from a valid presentation")
}

/// `z^a / (1 - z^e)` per unbounded family, plus the finite part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    /// Series of the base and all bounded family members.
    pub finite: GenPoly,
    /// `(a, e)`: first exponent and step of each unbounded family.
    pub tails: Vec<(BigRational, BigRational)>,
}

impl ClosedForm {
    pub fn of(spec: &LimitSpec) -> Self {
        let deg = spec.degrees();
        let mut rel_degrees: Vec<Degree> = spec
            .base
            .relations()
            .iter()
            .map(|r| poly_degree(r, deg))
            .collect();
        let mut tails = Vec::new();
        for f in &spec.families {
            let (c, e) = f.degree_law(deg);
            match f.end {
                Some(end) => rel_degrees.extend(
                    (f.start..=end)
                        .map(|t| Degree::Finite(&c + &e * BigRational::from_integer(t.into()))),
                ),
                None => tails.push((&c + &e * BigRational::from_integer(f.start.into()), e)),
            }
        }
        let finite = crate::certify::series_from_parts(deg, rel_degrees.into_iter());
        ClosedForm { finite, tails }
    }

    /// `N` with `f_lim = N / prod (1 - z^e)`; the denominator is positive on `[0, 1)`.
    pub fn numerator(&self) -> GenPoly {
        let one = GenPoly::one();
        let factor = |e: &BigRational| &one - &GenPoly::monomial(e.clone(), BigRational::one());
        let mut n = self
            .tails
            .iter()
            .fold(self.finite.clone(), |acc, (_, e)| &acc * &factor(e));
        for (j, (a, _)) in self.tails.iter().enumerate() {
            let mut term = GenPoly::monomial(a.clone(), BigRational::one());
            for (k, (_, e)) in self.tails.iter().enumerate() {
                if k != j {
                    term = &term * &factor(e);
                }
            }
            n = &n + &term;
        }
        n
    }

    pub fn eval(&self, z: &BigRational) -> Result<BigRational, LimitError> {
        if z.is_negative() || *z > BigRational::one() {
            return Err(LimitError::OutsideUnitInterval(z.to_string()));
        }
        if z.is_one() && !self.tails.is_empty() {
            return Err(LimitError::Divergent);
        }
        let mut v = self.finite.evaluate(z)?;
        for (a, e) in &self.tails {
            let num = GenPoly::monomial(a.clone(), BigRational::one()).evaluate(z)?;
            let den = BigRational::one()
                - GenPoly::monomial(e.clone(), BigRational::one()).evaluate(z)?;
            v += num / den;
        }
        Ok(v)
    }
}

/// Exact `f_lim(z)` for `z` in `[0, 1)`, or `[0, 1]` without unbounded families.
pub fn limit_closed_eval(spec: &LimitSpec, z: &BigRational) -> Result<BigRational, LimitError> {
    ClosedForm::of(spec).eval(z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitVerdict {
    #[serde(rename = "wGS_certified")]
    WgsCertified,
    #[serde(rename = "wGS_up_to_truncation")]
    WgsUpToTruncation,
    #[serde(rename = "not_wGS")]
    NotWgs,
    #[serde(rename = "unknown")]
    Unknown,
}

impl LimitVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            LimitVerdict::WgsCertified => "wGS_certified",
            LimitVerdict::WgsUpToTruncation => "wGS_up_to_truncation",
            LimitVerdict::NotWgs => "not_wGS",
            LimitVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LimitCertificate {
    pub verdict: LimitVerdict,
    /// `f_lim < 0` somewhere in `[0, 1)`.
    pub strict: bool,
    pub witness: Option<Witness>,
    pub witness_value: Option<BigRational>,
    /// Numerator of the closed form, when it was used.
    pub numerator: Option<GenPoly>,
    /// `{z in [0, 1) : f_lim(z) <= 0}`, closed at 1 only when there is no
    /// infinite tail.
    pub negativity_set: IntervalSet,
    pub truncation: BigRational,
    /// Certificate of the truncated presentation, when the closed form was
    /// not available.
    pub truncated: Option<GsCertificate>,
}

fn from_finite(cert: GsCertificate, truncation: &BigRational) -> LimitCertificate {
    let verdict = match cert.status {
        GsStatus::NotWgs => LimitVerdict::NotWgs,
        _ => LimitVerdict::WgsCertified,
    };
    LimitCertificate {
        verdict,
        strict: cert.status == GsStatus::Gs,
        witness: cert.witness,
        witness_value: cert.witness_value,
        numerator: None,
        negativity_set: cert.negativity_set,
        truncation: truncation.clone(),
        truncated: None,
    }
}

fn closed_certificate(
    spec: &LimitSpec,
    cf: &ClosedForm,
    truncation: &BigRational,
) -> Result<LimitCertificate, LimitError> {
    let n = cf.numerator();
    let dec = SignDecomposition::new(&n, DEFAULT_DENOMINATOR_CAP)?;
    let one = Point::from_integer(1);
    let set = dec.nonpositive_set().without_isolated_point(&one);
    let value = |z: &BigRational| cf.eval(z).ok();
    let approx = |x: f64| {
        let tails: f64 = cf
            .tails
            .iter()
            .map(|(a, e)| {
                let (a, e) = (
                    num::ToPrimitive::to_f64(a).unwrap_or(f64::NAN),
                    num::ToPrimitive::to_f64(e).unwrap_or(f64::NAN),
                );
                x.powf(a) / (1.0 - x.powf(e))
            })
            .sum();
        cf.finite.evaluate_f64(x) + tails
    };
    let mut cert = LimitCertificate {
        verdict: LimitVerdict::NotWgs,
        strict: false,
        witness: None,
        witness_value: None,
        numerator: Some(n.clone()),
        negativity_set: set,
        truncation: truncation.clone(),
        truncated: None,
    };
    if let Some(z) = choose_witness(dec.negative_regions(), &value, &approx) {
        cert.verdict = LimitVerdict::WgsCertified;
        cert.strict = true;
        cert.witness_value = limit_closed_eval(spec, &z).ok();
        cert.witness = Some(Witness::Rational(z));
    } else if let Some(zero) = dec.zeros().find(|p| p.cmp_value(&one) == Ordering::Less) {
        cert.verdict = LimitVerdict::WgsCertified;
        cert.witness_value = zero.as_rational().map(|_| BigRational::zero());
        cert.witness = Some(Witness::Boundary(zero.clone()));
    }
    Ok(cert)
}

/// Decides whether the limit is wGS for the induced degree function. The
/// closed form is used when possible; otherwise the presentation truncated
/// at `truncation` gives a one-sided verdict, since the partial series lies
/// below the limit series on `[0, 1)`.
pub fn certify_limit(spec: &LimitSpec, truncation: &BigRational) -> LimitCertificate {
    if !spec.has_infinite_tail() {
        if let Ok(cert) = certify(
            &instantiate(spec, 0)
                .with_relations(all_bounded_relations(spec))
                .expect("valid"),
        ) {
            return from_finite(cert, truncation);
        }
    } else if let Ok(cert) = closed_certificate(spec, &ClosedForm::of(spec), truncation) {
        return cert;
    }
    let truncated = truncate_relations(spec, truncation);
    match certify(&truncated) {
        Ok(cert) => {
            let verdict = match cert.status {
                GsStatus::NotWgs => LimitVerdict::NotWgs,
                _ => LimitVerdict::WgsUpToTruncation,
            };
            LimitCertificate {
                verdict,
                strict: cert.status == GsStatus::Gs,
                witness: cert.witness.clone(),
                witness_value: None,
                numerator: None,
                negativity_set: cert.negativity_set.clone(),
                truncation: truncation.clone(),
                truncated: Some(cert),
            }
        }
        Err(_) => LimitCertificate {
            verdict: LimitVerdict::Unknown,
            strict: false,
            witness: None,
            witness_value: None,
            numerator: None,
            negativity_set: IntervalSet::empty(),
            truncation: truncation.clone(),
            truncated: None,
        },
    }
}

fn all_bounded_relations(spec: &LimitSpec) -> Vec<NcPolynomial> {
    let mut rels = spec.base.relations().to_vec();
    for f in &spec.families {
        let end = f.end.expect("bounded family");
        rels.extend((f.start..=end).map(|t| NcPolynomial::word(f.member(t))));
    }
    rels
}

#[derive(Clone, Debug)]
pub struct StageReport {
    pub stage: u64,
    pub series: GenPoly,
    pub negativity_set: IntervalSet,
    pub certificate: GsCertificate,
}

/// Least stage whose Hilbert truncation agrees with the limit in all
/// degrees up to `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub degree: BigRational,
    pub stage: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct NestedReport {
    pub stages: Vec<StageReport>,
    /// Index `i` of the first stage with `S_i` not inside `S_{i-1}`.
    pub first_nesting_failure: Option<u64>,
    pub intersection: IntervalSet,
    pub common_point: Option<Witness>,
    pub stabilization: Vec<Stabilization>,
}

impl NestedReport {
    pub fn nested(&self) -> bool {
        self.first_nesting_failure.is_none()
    }
}

pub fn nested_sets(spec: &LimitSpec, stages: u64) -> Result<NestedReport, LimitError> {
    nested_sets_with(spec, stages, DEFAULT_STABILIZATION_DEGREE)
}

pub fn nested_sets_with(
    spec: &LimitSpec,
    stages: u64,
    stabilization_degree: u64,
) -> Result<NestedReport, LimitError> {
    let reports: Vec<StageReport> = (0..=stages)
        .into_par_iter()
        .map(|i| {
            let cert = certify(&instantiate(spec, i))?;
            Ok(StageReport {
                stage: i,
                series: cert.series.clone(),
                negativity_set: cert.negativity_set.clone(),
                certificate: cert,
            })
        })
        .collect::<Result<_, LimitError>>()?;
    let first_failure = reports
        .windows(2)
        .find(|w| !w[1].negativity_set.is_subset(&w[0].negativity_set))
        .map(|w| w[1].stage);
    let intersection = reports.iter().fold(IntervalSet::unit(), |acc, r| {
        acc.intersect(&r.negativity_set)
    });
    let common_point = match intersection.pick_rational_witness() {
        SetWitness::Interior(z) => Some(Witness::Rational(z)),
        SetWitness::Boundary(p) => Some(Witness::Boundary(p)),
        SetWitness::Empty => None,
    };

    let mut stabilization = Vec::new();
    let mut m = 0u64;
    for n in 1..=stabilization_degree {
        let cutoff = BigRational::from_integer(n.into());
        let target = limit_hilbert(spec, &cutoff)?;
        let mut found = None;
        while m <= stages {
            if hilbert_truncation(&instantiate(spec, m), &cutoff)?.entries == target.entries {
                found = Some(m);
                break;
            }
            m += 1;
        }
        stabilization.push(Stabilization {
            degree: cutoff,
            stage: found,
        });
    }
    Ok(NestedReport {
        stages: reports,
        first_nesting_failure: first_failure,
        intersection,
        common_point,
        stabilization,
    })
}

/// Hilbert truncation of the limit algebra; relations above the cutoff do
/// not affect it.
pub fn limit_hilbert(spec: &LimitSpec, cutoff: &BigRational) -> Result<HilbertTruncation, GbError> {
    hilbert_truncation(&truncate_relations(spec, cutoff), cutoff)
}

/// Growth of the limit algebra, whose relations must all be monomial.
pub fn classify_limit_growth(spec: &LimitSpec) -> Result<Growth, LimitError> {
    if !spec.base.is_monomial() {
        return Err(LimitError::NonMonomialBase);
    }
    let mut patterns: Vec<Pattern> = spec
        .base
        .relations()
        .iter()
        .map(|r| Pattern::Word(r.terms().next().expect("nonzero").0.clone()))
        .collect();
    for f in &spec.families {
        match f.end {
            Some(end) => patterns.extend((f.start..=end).map(|t| Pattern::Word(f.member(t)))),
            None => patterns.push(Pattern::Repeated {
                prefix: f.prefix.clone(),
                block: f.block.clone(),
                suffix: f.suffix.clone(),
                min: f.start,
            }),
        }
    }
    Ok(classify_patterns(spec.generators().len(), &patterns))
}

/// Free subalgebra check in the limit algebra.
pub fn limit_free_subalgebra_check(
    spec: &LimitSpec,
    subgens: &[NcPolynomial],
    maxlen: usize,
) -> Result<FreeSubalgebraCheck, GbError> {
    let top = subgens
        .iter()
        .filter_map(|g| g.max_degree(spec.degrees()).finite().cloned())
        .max()
        .unwrap_or_else(BigRational::zero)
        * BigRational::from_integer((maxlen as u64).into());
    free_subalgebra_check(&truncate_relations(spec, &top), subgens, maxlen)
}

/// `<x, y | x^2, xyx, ..., xy^n x>` with `deg x = a`, `deg y = 1`.
pub fn gs_weight_presentation(n: u64, a: u64) -> Presentation {
    let gens = GeneratorSet::new(["x", "y"]).expect("two names");
    let deg = DegreeFunction::from_integers(&gens, &[a as i64, 1]).expect("positive weights");
    let rels = (0..=n)
        .map(|t| {
            NcPolynomial::word(
                Word::letter(0)
                    .concat(&Word::letter(1).pow(t as usize))
                    .concat(&Word::letter(0)),
            )
        })
        .collect();
    Presentation::new(gens, deg, rels).expect("valid presentation")
}

#[derive(Clone, Debug)]
pub struct GsWeight {
    pub a: u64,
    pub certificate: GsCertificate,
}

/// Least `a <= bound` for which `gs_weight_presentation(n, a)` is GS.
pub fn find_gs_weight(n: u64, bound: u64) -> Option<GsWeight> {
    (1..=bound).find_map(|a| {
        let cert = certify(&gs_weight_presentation(n, a)).ok()?;
        (cert.status == GsStatus::Gs).then_some(GsWeight {
            a,
            certificate: cert,
        })
    })
}

/// Remainder of `1 - u - u^a + n u^(2a)` modulo `u^a - 1/(2n)`, lowest
/// coefficient first (length `a`).
pub fn gn_remainder(n: u64, a: u64) -> Vec<BigRational> {
    let a = a as usize;
    let mut g = vec![BigInt::zero(); 2 * a + 1];
    g[0] += 1;
    g[1] -= 1;
    g[a] -= 1;
    g[2 * a] += BigInt::from(n);
    let mut m = vec![BigInt::zero(); a + 1];
    m[0] = BigInt::from(-1);
    m[a] = BigInt::from(2 * n);
    let (_, mut r) = IntPoly::new(g).div_rem_rational(&IntPoly::new(m));
    r.resize(a, BigRational::zero());
    r
}

/// Series of the given stage, for convenience.
pub fn stage_series(spec: &LimitSpec, n: u64) -> GenPoly {
    gs_series(&instantiate(spec, n))
}

/// Certificate of an arbitrary series, reexported for stage-level checks.
pub fn certify_stage_series(f: &GenPoly) -> Result<GsCertificate, GenPolyError> {
    certify_series(f, DEFAULT_DENOMINATOR_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn w(s: &[usize]) -> Word {
        Word::new(s.to_vec())
    }

    fn spec(suffix: &[usize], base: &[&[usize]]) -> LimitSpec {
        let g = GeneratorSet::new(["x", "y"]).unwrap();
        let p = Presentation::new(
            g,
            DegreeFunction::standard(2),
            base.iter().map(|r| NcPolynomial::word(w(r))).collect(),
        )
        .unwrap();
        let f = RelationFamily::new(w(&[0]), w(&[1]), w(suffix), 0, None).unwrap();
        LimitSpec::new(p, vec![f]).unwrap()
    }

    fn three_tails() -> LimitSpec {
        spec(&[0], &[])
    }

    fn shifted_family() -> LimitSpec {
        spec(&[0, 0, 0, 0], &[])
    }

    #[test]
    fn stages_and_truncations() {
        let s = three_tails();
        let a1 = instantiate(&s, 1);
        let g = a1.generators().clone();
        let shown: Vec<String> = a1
            .relations()
            .iter()
            .map(|r| r.display(&g).to_string())
            .collect();
        assert_eq!(shown, ["x*x", "x*y*x"]);
        assert_eq!(instantiate(&s, 0).relations().len(), 1);
        assert_eq!(
            truncate_relations(&s, &q(4, 1)).relation_degrees(),
            vec![q(2, 1), q(3, 1), q(4, 1)]
        );
        assert!(truncate_relations(&s, &q(1, 1)).relations().is_empty());

        let d = shifted_family();
        assert_eq!(
            instantiate(&d, 2).relation_degrees(),
            vec![q(5, 1), q(6, 1), q(7, 1)]
        );
        assert_eq!(truncate_relations(&d, &q(5, 1)).relations().len(), 1);
        assert_eq!(d.families()[0].degree_law(d.degrees()), (q(5, 1), q(1, 1)));
    }

    #[test]
    fn closed_forms() {
        let s = three_tails();
        assert_eq!(limit_closed_eval(&s, &q(1, 2)).unwrap(), q(1, 2));
        assert_eq!(limit_closed_eval(&s, &q(1, 1)), Err(LimitError::Divergent));
        assert_eq!(
            ClosedForm::of(&s).numerator(),
            GenPoly::from_int_coeffs(&[1, -3, 3])
        );
        assert_eq!(
            limit_closed_eval(&shifted_family(), &q(3, 5)).unwrap(),
            q(-7, 1250)
        );
    }

    #[test]
    fn limit_verdicts() {
        let s = three_tails();
        let c = certify_limit(&s, &q(10, 1));
        assert_eq!(c.verdict, LimitVerdict::NotWgs);
        let d = certify_limit(&shifted_family(), &q(10, 1));
        assert_eq!(d.verdict, LimitVerdict::WgsCertified);
        assert!(d.strict);
        assert_eq!(d.witness.unwrap().point().as_rational(), Some(&q(3, 5)));
        assert_eq!(d.witness_value, Some(q(-7, 1250)));
    }

    #[test]
    fn bounded_family_reduces_to_finite_certificate() {
        let g = GeneratorSet::new(["x", "y"]).unwrap();
        let p = Presentation::free(g, DegreeFunction::standard(2)).unwrap();
        let f = RelationFamily::new(w(&[0]), w(&[1]), w(&[0]), 0, Some(1)).unwrap();
        let s = LimitSpec::new(p, vec![f]).unwrap();
        let c = certify_limit(&s, &q(5, 1));
        let direct = certify(&instantiate(&s, 1)).unwrap();
        assert_eq!(
            c.verdict == LimitVerdict::NotWgs,
            direct.status == GsStatus::NotWgs
        );
        assert_eq!(limit_closed_eval(&s, &q(1, 1)).unwrap(), q(1, 1));
    }

    #[test]
    fn nesting_and_stabilization() {
        let r = nested_sets(&three_tails(), 4).unwrap();
        assert!(r.nested());
        assert_eq!(r.stages[0].negativity_set.component_count(), 1);
        assert!(r.stages[1].negativity_set.is_empty());
        assert!(r.common_point.is_none());
        let stages: Vec<Option<u64>> = r.stabilization.iter().map(|s| s.stage).collect();
        // degree n needs every xy^t x with t + 2 <= n
        assert_eq!(
            stages,
            vec![
                Some(0),
                Some(0),
                Some(1),
                Some(2),
                Some(3),
                Some(4),
                None,
                None
            ]
        );

        let r = nested_sets(&shifted_family(), 4).unwrap();
        assert!(r.nested());
        for s in &r.stages {
            assert!(s.negativity_set.contains_rational(&q(3, 5)));
        }
        assert!(r.common_point.is_some());
    }

    #[test]
    fn growth_and_free_subalgebras() {
        assert_eq!(
            classify_limit_growth(&three_tails()).unwrap(),
            Growth::Polynomial { degree: 1 }
        );
        assert_eq!(
            classify_limit_growth(&shifted_family()).unwrap(),
            Growth::Exponential
        );
        let x = NcPolynomial::word(w(&[0]));
        let y = NcPolynomial::word(w(&[1]));
        let r = limit_free_subalgebra_check(&three_tails(), &[x, y.clone()], 3).unwrap();
        assert!(!r.free);
        let xy = NcPolynomial::word(w(&[0, 1]));
        assert!(
            limit_free_subalgebra_check(&shifted_family(), &[y, xy], 4)
                .unwrap()
                .free
        );
    }

    #[test]
    fn limit_dimensions_are_linear() {
        let h = limit_hilbert(&three_tails(), &q(10, 1)).unwrap();
        for t in 1..=10u64 {
            assert_eq!(h.dimension(&q(t as i64, 1)), num::BigUint::from(t + 1));
        }
    }

    #[test]
    fn gn_identity() {
        for n in 1..=3u64 {
            for a in 2..=5u64 {
                let r = gn_remainder(n, a);
                assert_eq!(r[0], BigRational::one() - q(1, 4 * n as i64));
                assert_eq!(r[1], q(-1, 1));
                assert!(r[2..].iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn weight_search_small_cases() {
        assert!(find_gs_weight(0, 1).is_none());
        let a = find_gs_weight(1, 20).unwrap();
        assert!(a.a <= 12);
        assert_eq!(a.certificate.status, GsStatus::Gs);
        assert!(a.certificate.witness_value.as_ref().unwrap().is_negative());
    }

    #[test]
    fn rejects_bad_families() {
        assert_eq!(
            RelationFamily::new(w(&[0]), w(&[]), w(&[0]), 0, None),
            Err(LimitError::EmptyBlock)
        );
        assert_eq!(
            RelationFamily::new(w(&[]), w(&[1]), w(&[]), 0, None),
            Err(LimitError::EmptyMember(0))
        );
        assert!(RelationFamily::new(w(&[]), w(&[1]), w(&[]), 1, None).is_ok());
        assert!(matches!(
            RelationFamily::new(w(&[0]), w(&[1]), w(&[0]), 3, Some(2)),
            Err(LimitError::EmptyRange { .. })
        ));
    }
}
