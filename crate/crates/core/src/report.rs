//! Serializable reports for every analysis. All numbers are exact strings.

use num::{BigRational, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certify::{
    certify, gs_series, verify_vinberg, CertifyError, GsCertificate, Verdict, Witness,
};
use crate::format::AlgebraFile;
use crate::gbasis::{hilbert_truncation, GbError, HilbertTruncation};
use crate::genpoly::{GenPoly, GenPolyError, IntervalSet, Point};
use crate::growth::{classify_growth, standard_hilbert, Growth, GrowthError};
use crate::limits::{
    certify_limit, classify_limit_growth, limit_hilbert, nested_sets, ClosedForm, LimitCertificate,
    LimitError, LimitVerdict, NestedReport,
};

pub const FLAG_PAPER_DISCREPANCY: &str = "paper-discrepancy";
pub const FLAG_ASSOCIATED_GRADED: &str = "associated-graded";
pub const FLAG_UP_TO_TRUNCATION: &str = "up-to-truncation";
pub const FLAG_INCOMPLETE: &str = "incomplete";

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error(transparent)]
    Series(#[from] GenPolyError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error("{0}")]
    Usage(String),
}

impl RunError {
    /// Failures caused by size limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        let gb = |e: &GbError| {
            matches!(
                e,
                GbError::BasisLimit { .. } | GbError::CutoffTooLarge { .. }
            )
        };
        match self {
            RunError::Groebner(e) => gb(e),
            RunError::Limit(LimitError::Groebner(e)) => gb(e),
            RunError::Growth(GrowthError::Groebner(e)) => gb(e),
            RunError::Growth(GrowthError::Incomplete) => true,
            RunError::Certify(CertifyError::Groebner(e)) => gb(e),
            RunError::Series(GenPolyError::DenominatorCap { .. }) => true,
            _ => false,
        }
    }
}

/// An exact point: a rational `"p/q"`, or `u^power` for the root `u` of
/// `polynomial` (variable `u`) isolated in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRepr {
    Exact(String),
    Algebraic {
        polynomial: String,
        lo: String,
        hi: String,
        power: u32,
    },
}

impl From<&Point> for PointRepr {
    fn from(p: &Point) -> Self {
        match p {
            Point::Rational(r) => PointRepr::Exact(r.to_string()),
            Point::Root { base, power } => PointRepr::Algebraic {
                polynomial: base.poly().to_string(),
                lo: base.lo().to_string(),
                hi: base.hi().to_string(),
                power: *power,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepr {
    pub lo: PointRepr,
    pub hi: PointRepr,
}

pub fn interval_set_repr(s: &IntervalSet) -> Vec<IntervalRepr> {
    s.components()
        .iter()
        .map(|c| IntervalRepr {
            lo: (&c.lo).into(),
            hi: (&c.hi).into(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRepr {
    pub text: String,
    /// `[exponent, coefficient]` pairs in increasing exponent order.
    pub terms: Vec<[String; 2]>,
}

impl From<&GenPoly> for SeriesRepr {
    fn from(f: &GenPoly) -> Self {
        SeriesRepr {
            text: f.to_string(),
            terms: f
                .terms()
                .iter()
                .map(|(e, c)| [e.to_string(), c.to_string()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub degree: String,
    pub dimension: String,
}

pub fn hilbert_rows(h: &HilbertTruncation) -> Vec<HilbertRow> {
    h.entries
        .iter()
        .map(|(d, n)| HilbertRow {
            degree: d.to_string(),
            dimension: n.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VinbergRepr {
    pub cutoff: u64,
    pub scaled_by: u64,
    pub lhs: Vec<String>,
    pub first_violation: Option<u64>,
    pub equality: bool,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRepr {
    pub stage: u64,
    pub series: SeriesRepr,
    pub status: String,
    pub negativity_set: Vec<IntervalRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationRepr {
    pub degree: String,
    pub stage: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitRepr {
    pub verdict: String,
    pub strict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numerator: Option<SeriesRepr>,
    pub stages: Vec<StageRepr>,
    pub nested: bool,
    pub first_nesting_failure: Option<u64>,
    pub intersection: Vec<IntervalRepr>,
    pub common_point: Option<PointRepr>,
    pub stabilization: Vec<StabilizationRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleRow {
    pub example: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub paper: Option<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algebra: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub series: Option<SeriesRepr>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<PointRepr>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub negativity_set: Option<Vec<IntervalRepr>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilbert: Option<Vec<HilbertRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub growth: Option<Growth>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub standard_series: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vinberg: Option<VinbergRepr>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub limit: Option<LimitRepr>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub examples: Option<Vec<ExampleRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub truncation: Option<String>,
    pub flags: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(command: &str, file: Option<&AlgebraFile>) -> Self {
        Report {
            command: command.into(),
            algebra: file.and_then(|f| f.name.clone()),
            ..Default::default()
        }
    }

    fn flag(&mut self, f: &str) {
        if !self.flags.iter().any(|x| x == f) {
            self.flags.push(f.into());
        }
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<16}{v}\n"));
        if let Some(a) = &self.algebra {
            line("algebra", a.clone());
        }
        if let Some(s) = &self.series {
            line("series", s.text.clone());
        }
        if let Some(s) = &self.status {
            line("status", s.clone());
        }
        if let Some(w) = &self.witness {
            line("witness", point_text(w));
        }
        if let Some(v) = &self.witness_value {
            line("witness value", v.clone());
        }
        if let Some(s) = &self.negativity_set {
            line("negativity set", set_text(s));
        }
        if let Some(h) = &self.hilbert {
            let rows: Vec<String> = h
                .iter()
                .map(|r| format!("({}, {})", r.degree, r.dimension))
                .collect();
            line("hilbert", rows.join(" "));
        }
        if let Some(g) = &self.growth {
            line("growth", g.to_string());
        }
        if let Some(s) = &self.standard_series {
            line("standard dims", s.join(" "));
        }
        if let Some(v) = &self.vinberg {
            line(
                "vinberg",
                format!(
                    "{} (cutoff {}, weights scaled by {})",
                    v.verdict, v.cutoff, v.scaled_by
                ),
            );
            line("coefficients", v.lhs.join(" "));
        }
        if let Some(l) = &self.limit {
            line("limit verdict", l.verdict.clone());
            if let Some(n) = &l.numerator {
                line("numerator", n.text.clone());
            }
            for s in &l.stages {
                line(
                    &format!("stage {}", s.stage),
                    format!(
                        "{}  {}  S = {}",
                        s.status,
                        s.series.text,
                        set_text(&s.negativity_set)
                    ),
                );
            }
            line("nested", l.nested.to_string());
            line("intersection", set_text(&l.intersection));
            if let Some(p) = &l.common_point {
                line("common point", point_text(p));
            }
            let m: Vec<String> = l
                .stabilization
                .iter()
                .map(|s| {
                    format!(
                        "m({})={}",
                        s.degree,
                        s.stage.map_or("?".into(), |v| v.to_string())
                    )
                })
                .collect();
            line("stabilization", m.join(" "));
        }
        if let Some(rows) = &self.examples {
            for r in rows {
                let mark = if r.ok { "ok" } else { "MISMATCH" };
                let paper = r
                    .paper
                    .as_ref()
                    .map_or(String::new(), |p| format!("  [paper: {p}]"));
                out.push_str(&format!(
                    "{mark:<9}{:<22}{:<20}expected {}  computed {}{paper}\n",
                    r.example, r.quantity, r.expected, r.computed
                ));
            }
        }
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<16}{v}\n"));
        if let Some(t) = &self.truncation {
            line("truncation", t.clone());
        }
        if !self.flags.is_empty() {
            line("flags", self.flags.join(", "));
        }
        for n in &self.notes {
            line("note", n.clone());
        }
        out
    }
}

fn point_text(p: &PointRepr) -> String {
    match p {
        PointRepr::Exact(s) => s.clone(),
        PointRepr::Algebraic {
            polynomial,
            lo,
            hi,
            power,
        } => {
            let base = format!("root of {polynomial} in [{lo}, {hi}]");
            if *power == 1 {
                base
            } else {
                format!("({base})^{power}")
            }
        }
    }
}

fn set_text(s: &[IntervalRepr]) -> String {
    if s.is_empty() {
        return "empty".into();
    }
    let parts: Vec<String> = s
        .iter()
        .map(|c| {
            if c.lo == c.hi {
                format!("{{{}}}", point_text(&c.lo))
            } else {
                format!("[{}, {}]", point_text(&c.lo), point_text(&c.hi))
            }
        })
        .collect();
    parts.join(" u ")
}

fn witness_repr(w: &Witness) -> PointRepr {
    (&w.point()).into()
}

fn fill_certificate(r: &mut Report, c: &GsCertificate) {
    r.status = Some(c.status.as_str().into());
    r.series = Some((&c.series).into());
    r.witness = c.witness.as_ref().map(witness_repr);
    r.witness_value = c.witness_value.as_ref().map(ToString::to_string);
    r.negativity_set = Some(interval_set_repr(&c.negativity_set));
}

fn fill_limit(r: &mut Report, c: &LimitCertificate) {
    r.status = Some(c.verdict.as_str().into());
    r.witness = c.witness.as_ref().map(witness_repr);
    r.witness_value = c.witness_value.as_ref().map(ToString::to_string);
    r.negativity_set = Some(interval_set_repr(&c.negativity_set));
    r.truncation = Some(c.truncation.to_string());
    if c.verdict == LimitVerdict::WgsUpToTruncation || c.truncated.is_some() {
        r.flag(FLAG_UP_TO_TRUNCATION);
    }
}

pub const DEFAULT_TRUNCATION: i64 = 12;
pub const DEFAULT_STAGES: u64 = 4;
pub const DEFAULT_MAX_DEGREE: u64 = 10;

pub fn certify_report(file: &AlgebraFile, truncation: &BigRational) -> Result<Report, RunError> {
    let mut r = Report::new("certify", Some(file));
    match file.finite_presentation() {
        Some(p) => fill_certificate(&mut r, &certify(&p)?),
        None => {
            let spec = file.limit_spec();
            fill_limit(&mut r, &certify_limit(&spec, truncation));
            r.notes
                .push("infinite relation family: certified the limit algebra".into());
        }
    }
    Ok(r)
}

pub fn hilbert_report(file: &AlgebraFile, max_degree: &BigRational) -> Result<Report, RunError> {
    let mut r = Report::new("hilbert", Some(file));
    let h = match file.finite_presentation() {
        Some(p) => {
            if !p.is_monomial() {
                r.flag(FLAG_ASSOCIATED_GRADED);
            }
            hilbert_truncation(&p, max_degree)?
        }
        None => limit_hilbert(&file.limit_spec(), max_degree)?,
    };
    if !h.complete {
        r.flag(FLAG_INCOMPLETE);
    }
    r.hilbert = Some(hilbert_rows(&h));
    r.truncation = Some(max_degree.to_string());
    Ok(r)
}

pub fn growth_report(file: &AlgebraFile, max_degree: u64) -> Result<Report, RunError> {
    let mut r = Report::new("growth", Some(file));
    let cutoff = BigRational::from_integer(max_degree.into());
    match file.finite_presentation() {
        Some(p) => {
            let g = classify_growth(&p, &cutoff)?;
            if g.associated_graded {
                r.flag(FLAG_ASSOCIATED_GRADED);
            }
            if !g.exact {
                r.flag(FLAG_UP_TO_TRUNCATION);
                r.truncation = Some(cutoff.to_string());
            }
            r.growth = Some(g.growth);
            let s = standard_hilbert(&p, max_degree)?;
            r.standard_series = Some(s.counts.iter().map(ToString::to_string).collect());
        }
        None => {
            let spec = file.limit_spec();
            r.growth = Some(classify_limit_growth(&spec)?);
            let std = file
                .presentation
                .with_degrees(crate::algebra::DegreeFunction::standard(
                    file.presentation.generators().len(),
                ))
                .expect("same generators");
            let std_spec = crate::limits::LimitSpec::new(std, spec.families().to_vec())?;
            let h = limit_hilbert(&std_spec, &cutoff)?;
            let mut counts = vec!["0".to_string(); max_degree as usize + 1];
            for (d, n) in &h.entries {
                counts[d.to_integer().to_usize().expect("integer degrees")] = n.to_string();
            }
            r.standard_series = Some(counts);
        }
    }
    Ok(r)
}

pub fn vinberg_report(file: &AlgebraFile, cutoff: u64) -> Result<Report, RunError> {
    let mut r = Report::new("vinberg", Some(file));
    let p = match file.finite_presentation() {
        Some(p) => p,
        None => {
            r.flag(FLAG_UP_TO_TRUNCATION);
            r.truncation = Some(cutoff.to_string());
            crate::limits::truncate_relations(
                &file.limit_spec(),
                &BigRational::from_integer(cutoff.into()),
            )
        }
    };
    let v = verify_vinberg(&p, cutoff)?;
    r.series = Some((&gs_series(&p)).into());
    r.vinberg = Some(VinbergRepr {
        cutoff: v.cutoff,
        scaled_by: v.scaled_by,
        lhs: v.lhs.iter().map(ToString::to_string).collect(),
        first_violation: v.first_violation,
        equality: v.equality,
        verdict: match v.verdict {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        }
        .into(),
    });
    Ok(r)
}

fn nested_repr(n: &NestedReport) -> (Vec<StageRepr>, Option<PointRepr>) {
    let stages = n
        .stages
        .iter()
        .map(|s| StageRepr {
            stage: s.stage,
            series: (&s.series).into(),
            status: s.certificate.status.as_str().into(),
            negativity_set: interval_set_repr(&s.negativity_set),
        })
        .collect();
    (stages, n.common_point.as_ref().map(witness_repr))
}

pub fn limit_report(
    file: &AlgebraFile,
    stages: u64,
    truncation: &BigRational,
) -> Result<Report, RunError> {
    let mut r = Report::new("limit", Some(file));
    let spec = file.limit_spec();
    let nested = nested_sets(&spec, stages)?;
    let cert = certify_limit(&spec, truncation);
    fill_limit(&mut r, &cert);
    let (stage_reprs, common) = nested_repr(&nested);
    r.limit = Some(LimitRepr {
        verdict: cert.verdict.as_str().into(),
        strict: cert.strict,
        numerator: cert.numerator.as_ref().map(Into::into),
        stages: stage_reprs,
        nested: nested.nested(),
        first_nesting_failure: nested.first_nesting_failure,
        intersection: interval_set_repr(&nested.intersection),
        common_point: common,
        stabilization: nested
            .stabilization
            .iter()
            .map(|s| StabilizationRepr {
                degree: s.degree.to_string(),
                stage: s.stage,
            })
            .collect(),
    });
    if spec.base().is_monomial() {
        if let Ok(g) = classify_limit_growth(&spec) {
            r.growth = Some(g);
            if cert.verdict == LimitVerdict::NotWgs
                && matches!(g, Growth::Polynomial { .. } | Growth::FiniteDimensional)
            {
                r.notes.push(
                    "the limit has polynomial growth, which rules out wGS for every choice of generators and degrees"
                        .into(),
                );
            }
            if cert.verdict == LimitVerdict::WgsCertified && cert.strict && spec.has_infinite_tail()
            {
                r.notes
                    .push("strictly negative limit series with infinitely many relations".into());
            }
        }
    }
    if nested.first_nesting_failure.is_some() {
        r.notes.push("negativity sets are not nested".into());
    }
    Ok(r)
}

/// Floating-point samples of the series on a uniform grid of `[0, 1]`;
/// for plotting only.
pub fn sample_csv(file: &AlgebraFile, grid: u64) -> String {
    let mut out = String::from("# floating-point samples, not certified\nz,f(z)\n");
    let sample: Box<dyn Fn(f64) -> f64> = match file.finite_presentation() {
        Some(p) => {
            let f = gs_series(&p);
            Box::new(move |z| f.evaluate_f64(z))
        }
        None => {
            let cf = ClosedForm::of(&file.limit_spec());
            Box::new(move |z| {
                if z >= 1.0 {
                    return f64::INFINITY;
                }
                let tails: f64 = cf
                    .tails
                    .iter()
                    .map(|(a, e)| {
                        let (a, e) = (
                            a.to_f64().unwrap_or(f64::NAN),
                            e.to_f64().unwrap_or(f64::NAN),
                        );
                        z.powf(a) / (1.0 - z.powf(e))
                    })
                    .sum();
                cf.finite.evaluate_f64(z) + tails
            })
        }
    };
    let grid = grid.max(1);
    for i in 0..=grid {
        let z = i as f64 / grid as f64;
        out.push_str(&format!("{z},{}\n", sample(z)));
    }
    out
}

pub(crate) fn is_nonnegative(s: &str) -> bool {
    s.parse::<BigRational>()
        .is_ok_and(|v| v >= BigRational::zero())
}
