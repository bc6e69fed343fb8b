//! Built-in example algebras with recorded expectations.

use num::BigRational;
use rayon::prelude::*;

use crate::algebra::NcPolynomial;
use crate::certify::{certify, gs_series, verify_vinberg};
use crate::format::{parse, AlgebraFile};
use crate::gbasis::{free_subalgebra_check, hilbert_truncation};
use crate::growth::classify_growth;
use crate::limits::{
    certify_limit, classify_limit_growth, find_gs_weight, instantiate, limit_hilbert, ClosedForm,
};
use crate::report::{ExampleRow, Report, FLAG_PAPER_DISCREPANCY};

/// A value to compute for an example.
#[derive(Clone, Debug)]
pub enum Quantity {
    Series,
    Status,
    Witness,
    WitnessValue,
    NegativitySet,
    /// Exact value of the series at a rational point.
    Eval(&'static str),
    /// Comma-separated dimensions in degrees `0..=n` (integer weights only).
    Hilbert(u64),
    Growth,
    Vinberg(u64),
    /// Whether the words given (as relation-style expressions) generate a
    /// free subalgebra, up to the given length.
    FreeSubalgebra(&'static [&'static str], usize),
    LimitVerdict,
    LimitWitness,
    LimitValue,
    LimitNumerator,
    /// Growth classes of stages `0..=n`, when they all agree.
    StageGrowth(u64),
    /// Least `a <= bound` making stage `n` GS with weights `(a, 1)`.
    GsWeight(u64, u64),
}

impl Quantity {
    pub fn label(&self) -> String {
        match self {
            Quantity::Series => "series".into(),
            Quantity::Status => "status".into(),
            Quantity::Witness => "witness".into(),
            Quantity::WitnessValue => "witness value".into(),
            Quantity::NegativitySet => "negativity set".into(),
            Quantity::Eval(z) => format!("f({z})"),
            Quantity::Hilbert(n) => format!("dims to {n}"),
            Quantity::Growth => "growth".into(),
            Quantity::Vinberg(n) => format!("vinberg to {n}"),
            Quantity::FreeSubalgebra(g, n) => format!("free <{}> to {n}", g.join(", ")),
            Quantity::LimitVerdict => "limit verdict".into(),
            Quantity::LimitWitness => "limit witness".into(),
            Quantity::LimitValue => "limit value".into(),
            Quantity::LimitNumerator => "limit numerator".into(),
            Quantity::StageGrowth(n) => format!("growth of stages 0..{n}"),
            Quantity::GsWeight(n, b) => format!("gs weight n={n} to {b}"),
        }
    }
}

/// What the source literature claims where it disagrees with the
/// computation.
#[derive(Clone, Debug)]
pub enum Claim {
    /// Claimed negative; the computation must find a nonnegative value.
    Negative,
    /// Claimed value; the computation must differ from it.
    Value(&'static str),
}

impl Claim {
    fn text(&self) -> String {
        match self {
            Claim::Negative => "negative".into(),
            Claim::Value(v) => (*v).into(),
        }
    }

    fn deviates(&self, computed: &str) -> bool {
        match self {
            Claim::Negative => crate::report::is_nonnegative(computed),
            Claim::Value(v) => *v != computed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub quantity: Quantity,
    pub expected: &'static str,
    pub claim: Option<Claim>,
}

#[derive(Clone, Debug)]
pub struct Example {
    pub key: &'static str,
    pub source: &'static str,
    pub checks: Vec<Check>,
}

impl Example {
    pub fn file(&self) -> AlgebraFile {
        parse(self.source).expect("corpus files parse")
    }
}

fn c(quantity: Quantity, expected: &'static str) -> Check {
    Check {
        quantity,
        expected,
        claim: None,
    }
}

fn d(quantity: Quantity, expected: &'static str, claim: Claim) -> Check {
    Check {
        quantity,
        expected,
        claim: Some(claim),
    }
}

pub fn examples() -> Vec<Example> {
    use Quantity::*;
    vec![
        Example {
            key: "m_standard",
            source: include_str!("../corpus/m_standard.alg"),
            checks: vec![
                c(Series, "1 - 3z + 3z^2"),
                c(Status, "not_wGS"),
                c(Eval("1"), "1"),
                c(Vinberg(10), "holds"),
            ],
        },
        Example {
            key: "m_weighted",
            source: include_str!("../corpus/m_weighted.alg"),
            checks: vec![
                c(Series, "1 - z - 2z^2 + z^3 + 2z^4"),
                d(Status, "not_wGS", Claim::Value("GS")),
                d(Eval("3/5"), "97/625", Claim::Negative),
                c(Vinberg(10), "holds"),
            ],
        },
        Example {
            key: "minimal",
            source: include_str!("../corpus/minimal.alg"),
            checks: vec![c(Series, "1 - 2z + 3z^5"), c(Status, "not_wGS")],
        },
        Example {
            key: "extended",
            source: include_str!("../corpus/extended.alg"),
            checks: vec![
                c(Series, "1 - 2z + z^2 - z^3 + 3z^7"),
                c(Status, "GS"),
                c(Witness, "7/10"),
                c(WitnessValue, "-59371/10000000"),
            ],
        },
        Example {
            key: "a1",
            source: include_str!("../corpus/a1.alg"),
            checks: vec![
                c(Hilbert(5), "1,2,3,4,6,9"),
                c(Vinberg(10), "holds"),
                c(FreeSubalgebra(&["y", "x*y^2"], 5), "true"),
            ],
        },
        Example {
            key: "linear_limit",
            source: include_str!("../corpus/linear_limit.alg"),
            checks: vec![
                c(LimitNumerator, "1 - 3z + 3z^2"),
                c(LimitVerdict, "not_wGS"),
                d(
                    Hilbert(10),
                    "1,2,3,4,5,6,7,8,9,10,11",
                    Claim::Value("1,2,3,3,3,3,3,3,3,3,3"),
                ),
                c(Growth, "polynomial of degree 1"),
                c(GsWeight(1, 20), "9"),
            ],
        },
        Example {
            key: "d_family",
            source: include_str!("../corpus/d_family.alg"),
            checks: vec![
                c(LimitVerdict, "wGS_certified"),
                c(LimitWitness, "3/5"),
                c(LimitValue, "-7/1250"),
                c(Growth, "exponential"),
                c(StageGrowth(4), "exponential"),
                c(FreeSubalgebra(&["y", "x*y"], 4), "true"),
            ],
        },
        Example {
            key: "free2",
            source: include_str!("../corpus/free2.alg"),
            checks: vec![
                c(Series, "1 - 2z"),
                c(Status, "GS"),
                c(NegativitySet, "[1/2, 1]"),
                c(Vinberg(10), "equality"),
            ],
        },
        Example {
            key: "free_weighted",
            source: include_str!("../corpus/free_weighted.alg"),
            checks: vec![c(Series, "1 - z^(1/2) - z"), c(Vinberg(10), "equality")],
        },
        Example {
            key: "commutator",
            source: include_str!("../corpus/commutator.alg"),
            checks: vec![
                c(Status, "wGS_only"),
                c(NegativitySet, "{1}"),
                c(Hilbert(5), "1,2,3,4,5,6"),
                c(Vinberg(10), "equality"),
                c(Growth, "polynomial of degree 1"),
            ],
        },
        Example {
            key: "x_squared",
            source: include_str!("../corpus/x_squared.alg"),
            checks: vec![
                c(Status, "wGS_only"),
                c(NegativitySet, "{1}"),
                c(Vinberg(10), "holds"),
            ],
        },
    ]
}

fn q(s: &str) -> BigRational {
    s.parse().expect("corpus rationals parse")
}

fn set_text(s: &crate::genpoly::IntervalSet) -> String {
    if s.is_empty() {
        return "empty".into();
    }
    let parts: Vec<String> = s
        .components()
        .iter()
        .map(|c| {
            if c.is_degenerate() {
                format!("{{{}}}", c.lo)
            } else {
                format!("[{}, {}]", c.lo, c.hi)
            }
        })
        .collect();
    parts.join(" u ")
}

fn subgens(file: &AlgebraFile, exprs: &[&str]) -> Vec<NcPolynomial> {
    let names: Vec<String> = file
        .presentation
        .generators()
        .names()
        .iter()
        .map(|n| {
            format!(
                "{n}={}",
                file.presentation.degrees().weight(
                    file.presentation
                        .generators()
                        .index_of(n)
                        .expect("own name")
                )
            )
        })
        .collect();
    let text = format!(
        "generators {}\nrelations\n{}\nend\n",
        names.join(" "),
        exprs.join("\n")
    );
    parse(&text)
        .expect("subalgebra generators parse")
        .presentation
        .relations()
        .to_vec()
}

/// Computes one quantity as a string; errors become `error: ...`.
pub fn compute(file: &AlgebraFile, quantity: &Quantity) -> String {
    let run = || -> Result<String, String> {
        let e = |x: &dyn std::fmt::Display| x.to_string();
        let finite = file.finite_presentation();
        let spec = file.limit_spec();
        let need_finite = || {
            finite
                .clone()
                .ok_or_else(|| "needs a finite presentation".to_string())
        };
        Ok(match quantity {
            Quantity::Series => gs_series(&need_finite()?).to_string(),
            Quantity::Status => certify(&need_finite()?)
                .map_err(|x| e(&x))?
                .status
                .as_str()
                .into(),
            Quantity::Witness => certify(&need_finite()?)
                .map_err(|x| e(&x))?
                .witness
                .map_or("none".into(), |w| w.to_string()),
            Quantity::WitnessValue => certify(&need_finite()?)
                .map_err(|x| e(&x))?
                .witness_value
                .map_or("none".into(), |v| v.to_string()),
            Quantity::NegativitySet => {
                set_text(&certify(&need_finite()?).map_err(|x| e(&x))?.negativity_set)
            }
            Quantity::Eval(z) => gs_series(&need_finite()?)
                .evaluate(&q(z))
                .map_err(|x| e(&x))?
                .to_string(),
            Quantity::Hilbert(n) => {
                let cutoff = BigRational::from_integer((*n).into());
                let h = match &finite {
                    Some(p) => hilbert_truncation(p, &cutoff),
                    None => limit_hilbert(&spec, &cutoff),
                }
                .map_err(|x| e(&x))?;
                let dims: Vec<String> = (0..=*n)
                    .map(|t| {
                        h.dimension(&BigRational::from_integer(t.into()))
                            .to_string()
                    })
                    .collect();
                dims.join(",")
            }
            Quantity::Growth => match &finite {
                Some(p) => classify_growth(p, &BigRational::from_integer(12.into()))
                    .map_err(|x| e(&x))?
                    .growth
                    .to_string(),
                None => classify_limit_growth(&spec).map_err(|x| e(&x))?.to_string(),
            },
            Quantity::Vinberg(n) => {
                let v = verify_vinberg(&need_finite()?, *n).map_err(|x| e(&x))?;
                match (v.verdict, v.equality) {
                    (crate::certify::Verdict::Holds, true) => "equality".into(),
                    (crate::certify::Verdict::Holds, false) => "holds".into(),
                    (crate::certify::Verdict::Violated, _) => {
                        format!("violated at {}", v.first_violation.unwrap_or(0))
                    }
                    (crate::certify::Verdict::Inconclusive, _) => "inconclusive".into(),
                }
            }
            Quantity::FreeSubalgebra(gens, n) => {
                let g = subgens(file, gens);
                let r = match &finite {
                    Some(p) => free_subalgebra_check(p, &g, *n),
                    None => crate::limits::limit_free_subalgebra_check(&spec, &g, *n),
                }
                .map_err(|x| e(&x))?;
                r.free.to_string()
            }
            Quantity::LimitVerdict => certify_limit(&spec, &BigRational::from_integer(12.into()))
                .verdict
                .as_str()
                .into(),
            Quantity::LimitWitness => certify_limit(&spec, &BigRational::from_integer(12.into()))
                .witness
                .map_or("none".into(), |w| w.to_string()),
            Quantity::LimitValue => certify_limit(&spec, &BigRational::from_integer(12.into()))
                .witness_value
                .map_or("none".into(), |v| v.to_string()),
            Quantity::LimitNumerator => ClosedForm::of(&spec).numerator().to_string(),
            Quantity::StageGrowth(n) => {
                let classes: Vec<String> = (0..=*n)
                    .map(|i| {
                        classify_growth(
                            &instantiate(&spec, i),
                            &BigRational::from_integer(12.into()),
                        )
                        .map(|g| g.growth.to_string())
                        .map_err(|x| e(&x))
                    })
                    .collect::<Result<_, _>>()?;
                if classes.iter().all(|c| *c == classes[0]) {
                    classes[0].clone()
                } else {
                    classes.join(",")
                }
            }
            Quantity::GsWeight(n, bound) => {
                find_gs_weight(*n, *bound).map_or("none".into(), |w| w.a.to_string())
            }
        })
    };
    run().unwrap_or_else(|m| format!("error: {m}"))
}

/// Runs one check; discrepancy checks pass only when the computed value
/// matches the recorded one and deviates from the claim.
pub fn run_check(key: &str, file: &AlgebraFile, check: &Check) -> ExampleRow {
    let computed = compute(file, &check.quantity);
    let mut ok = computed == check.expected;
    if let Some(claim) = &check.claim {
        ok &= claim.deviates(&computed);
    }
    ExampleRow {
        example: key.into(),
        quantity: check.quantity.label(),
        expected: check.expected.into(),
        computed,
        paper: check.claim.as_ref().map(Claim::text),
        ok,
    }
}

/// Runs the whole corpus in parallel.
pub fn run_examples() -> Report {
    let all = examples();
    let jobs: Vec<(&Example, &Check)> = all
        .iter()
        .flat_map(|e| e.checks.iter().map(move |c| (e, c)))
        .collect();
    let rows: Vec<ExampleRow> = jobs
        .par_iter()
        .map(|(e, c)| run_check(e.key, &e.file(), c))
        .collect();
    let mut r = Report {
        command: "examples".into(),
        ..Default::default()
    };
    if all
        .iter()
        .any(|e| e.checks.iter().any(|c| c.claim.is_some()))
    {
        r.flags.push(FLAG_PAPER_DISCREPANCY.into());
    }
    let bad = rows.iter().filter(|r| !r.ok).count();
    r.notes
        .push(format!("{} checks, {} mismatches", rows.len(), bad));
    r.examples = Some(rows);
    r
}

pub fn all_ok(r: &Report) -> bool {
    r.examples
        .as_ref()
        .is_some_and(|rows| rows.iter().all(|x| x.ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_round_trips_through_printer() {
        for e in examples() {
            let f = e.file();
            assert_eq!(parse(&f.to_string()).unwrap(), f, "{}", e.key);
        }
    }

    #[test]
    fn claims_detect_agreement() {
        assert!(Claim::Negative.deviates("97/625"));
        assert!(!Claim::Negative.deviates("-1/2"));
        assert!(!Claim::Value("GS").deviates("GS"));
    }
}
