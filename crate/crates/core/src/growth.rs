//! Growth of monomial algebras via overlap graphs, the length-filtration
//! series, and the comparison between the weighted and length filtrations.

use std::fmt;

use num::{BigRational, BigUint, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{DegreeFunction, Presentation, Word};
use crate::automaton::{AvoidanceAutomaton, Pattern};
use crate::gbasis::{hilbert_truncation, truncated_groebner, GbError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error("basis is incomplete below the cutoff; growth of a non-monomial presentation needs a completed basis")]
    Incomplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Growth {
    FiniteDimensional,
    /// Dimension of the degree-`n` piece is `O(n^degree)`.
    Polynomial {
        degree: u32,
    },
    Exponential,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Growth::FiniteDimensional => write!(f, "finite-dimensional"),
            Growth::Polynomial { degree } => write!(f, "polynomial of degree {degree}"),
            Growth::Exponential => write!(f, "exponential"),
        }
    }
}

/// Growth of the number of paths in a finite digraph, counting parallel
/// edges: exponential iff some strongly connected component holds more
/// edges than vertices, otherwise polynomial with degree one less than the
/// largest number of cyclic components on a path.
pub fn classify_digraph(vertices: usize, edges: &[(usize, usize)]) -> Growth {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(vertices, edges.len());
    let nodes: Vec<_> = (0..vertices).map(|_| g.add_node(())).collect();
    for &(a, b) in edges {
        g.add_edge(nodes[a], nodes[b], ());
    }
    let sccs = tarjan_scc(&g);
    let mut comp = vec![0usize; vertices];
    for (c, members) in sccs.iter().enumerate() {
        for n in members {
            comp[n.index()] = c;
        }
    }
    let mut internal = vec![0usize; sccs.len()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); sccs.len()];
    for &(a, b) in edges {
        if comp[a] == comp[b] {
            internal[comp[a]] += 1;
        } else {
            succ[comp[a]].push(comp[b]);
        }
    }
    if sccs.iter().zip(&internal).any(|(m, &e)| e > m.len()) {
        return Growth::Exponential;
    }
    // tarjan_scc yields components in reverse topological order
    let mut best = vec![0u32; sccs.len()];
    for c in 0..sccs.len() {
        let own = u32::from(internal[c] > 0);
        let tail = succ[c].iter().map(|&d| best[d]).max().unwrap_or(0);
        best[c] = own + tail;
    }
    match best.into_iter().max().unwrap_or(0) {
        0 => Growth::FiniteDimensional,
        k => Growth::Polynomial { degree: k - 1 },
    }
}

/// Overlap graph of a finite monomial algebra: vertices are the normal
/// words of length `d - 1` (`d` the longest forbidden length), with an edge
/// `u -> v` whenever `u` and `v` overlap in a normal word of length `d`.
#[derive(Clone, Debug)]
pub struct UfnGraph {
    pub order: usize,
    pub vertices: Vec<Word>,
    pub edges: Vec<(usize, usize)>,
}

impl UfnGraph {
    pub fn new(alphabet: usize, forbidden: &[Word]) -> Self {
        let d = forbidden.iter().map(Word::len).max().unwrap_or(1).max(1);
        let normal = |w: &Word| forbidden.iter().all(|f| !w.contains_factor(f));
        let mut layer = vec![Word::empty()];
        for _ in 0..d - 1 {
            layer = layer
                .iter()
                .flat_map(|u| (0..alphabet).map(move |l| u.concat(&Word::letter(l))))
                .filter(|w| normal(w))
                .collect();
        }
        let vertices = layer;
        let index: std::collections::HashMap<&Word, usize> =
            vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (i, u) in vertices.iter().enumerate() {
            for l in 0..alphabet {
                let w = u.concat(&Word::letter(l));
                if !normal(&w) {
                    continue;
                }
                let v = w.slice(1, w.len());
                if let Some(&j) = index.get(&v) {
                    edges.push((i, j));
                }
            }
        }
        UfnGraph {
            order: d - 1,
            vertices,
            edges,
        }
    }

    pub fn growth(&self) -> Growth {
        classify_digraph(self.vertices.len(), &self.edges)
    }
}

pub fn classify_automaton(a: &AvoidanceAutomaton) -> Growth {
    let edges: Vec<(usize, usize)> = a.edges().map(|(s, _, t)| (s, t)).collect();
    classify_digraph(a.state_count(), &edges)
}

/// Growth of the monomial algebra with forbidden factors `patterns`, which
/// may include infinite repeated-block families.
pub fn classify_patterns(alphabet: usize, patterns: &[Pattern]) -> Growth {
    classify_automaton(&AvoidanceAutomaton::new(alphabet, patterns))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub growth: Growth,
    /// Computed for the leading-word algebra of a non-monomial presentation.
    pub associated_graded: bool,
    /// False when the leading words come from a basis truncated at the cutoff.
    pub exact: bool,
}

/// Growth of `p`; non-monomial presentations are classified through the
/// leading words of a basis truncated at `cutoff`.
pub fn classify_growth(
    p: &Presentation,
    cutoff: &BigRational,
) -> Result<GrowthReport, GrowthError> {
    if p.is_monomial() {
        let words: Vec<Word> = p
            .relations()
            .iter()
            .map(|r| r.terms().next().expect("relations are nonzero").0.clone())
            .collect();
        return Ok(GrowthReport {
            growth: UfnGraph::new(p.generators().len(), &words).growth(),
            associated_graded: false,
            exact: true,
        });
    }
    let gb = truncated_groebner(p, cutoff)?;
    if !gb.is_complete() {
        return Err(GrowthError::Incomplete);
    }
    Ok(GrowthReport {
        growth: UfnGraph::new(p.generators().len(), &gb.leading_words()).growth(),
        associated_graded: true,
        exact: gb.is_full(),
    })
}

/// Dimensions `h_n` of the pieces of the length filtration, `n = 0..=maxlen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSeries {
    pub counts: Vec<BigUint>,
}

impl StandardSeries {
    pub fn cumulative(&self) -> Vec<BigUint> {
        let mut acc = BigUint::zero();
        self.counts
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }
}

pub fn standard_hilbert(p: &Presentation, maxlen: u64) -> Result<StandardSeries, GbError> {
    let q = p.with_degrees(DegreeFunction::standard(p.generators().len()))?;
    let h = hilbert_truncation(&q, &BigRational::from_integer(maxlen.into()))?;
    Ok(StandardSeries {
        counts: h.dimensions(),
    })
}

/// One row of the filtration comparison: `S(x)` is the cumulative weighted
/// count `dim A / A_{>x}` and `h` the cumulative length count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RescalingRow {
    pub n: u64,
    pub weighted_at_min: BigUint,
    pub standard: BigUint,
    pub weighted_at_max: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RescalingReport {
    pub min_weight: BigRational,
    pub max_weight: BigRational,
    pub rows: Vec<RescalingRow>,
    /// First `n` with `S(n * min) > h_n` or `h_n > S(n * max)`.
    pub first_violation: Option<u64>,
    /// First `n` with `S(n * max) > h_n`, the comparison with the maximal
    /// weight on the small side.
    pub first_max_weight_violation: Option<u64>,
    pub holds: bool,
}

fn cumulative_up_to(entries: &[(BigRational, BigUint)], x: &BigRational) -> BigUint {
    entries.iter().filter(|(d, _)| d <= x).map(|(_, n)| n).sum()
}

/// Checks `S(n * d_min) <= h_n <= S(n * d_max)` for `n <= cutoff`.
pub fn verify_degree_rescaling(p: &Presentation, cutoff: u64) -> Result<RescalingReport, GbError> {
    let dmin = p.degrees().min_weight();
    let dmax = p.degrees().max_weight();
    let top = &dmax * BigRational::from_integer(cutoff.into());
    let weighted = hilbert_truncation(p, &top)?;
    let standard = standard_hilbert(p, cutoff)?.cumulative();
    let mut rows = Vec::new();
    let mut first_violation = None;
    let mut first_max = None;
    for (n, h) in standard.into_iter().enumerate() {
        let nn = BigRational::from_integer((n as u64).into());
        let lo = cumulative_up_to(&weighted.entries, &(&nn * &dmin));
        let hi = cumulative_up_to(&weighted.entries, &(&nn * &dmax));
        if first_violation.is_none() && (lo > h || h > hi) {
            first_violation = Some(n as u64);
        }
        if first_max.is_none() && hi > h {
            first_max = Some(n as u64);
        }
        rows.push(RescalingRow {
            n: n as u64,
            weighted_at_min: lo,
            standard: h,
            weighted_at_max: hi,
        });
    }
    Ok(RescalingReport {
        min_weight: dmin,
        max_weight: dmax,
        rows,
        holds: first_violation.is_none(),
        first_violation,
        first_max_weight_violation: first_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GeneratorSet, NcPolynomial};

    fn w(s: &[usize]) -> Word {
        Word::new(s.to_vec())
    }

    fn monomial(names: &[&str], weights: &[i64], rels: &[&[usize]]) -> Presentation {
        let g = GeneratorSet::new(names.iter().copied()).unwrap();
        let d = DegreeFunction::from_integers(&g, weights).unwrap();
        Presentation::new(
            g,
            d,
            rels.iter().map(|r| NcPolynomial::word(w(r))).collect(),
        )
        .unwrap()
    }

    fn counts(s: &StandardSeries) -> Vec<u64> {
        s.counts
            .iter()
            .map(|c| u64::try_from(c.clone()).unwrap())
            .collect()
    }

    #[test]
    fn overlap_graph_of_a1() {
        let g = UfnGraph::new(2, &[w(&[0, 0]), w(&[0, 1, 0])]);
        assert_eq!(g.order, 2);
        assert_eq!(g.vertices, vec![w(&[0, 1]), w(&[1, 0]), w(&[1, 1])]);
        assert_eq!(g.edges.len(), 4);
        assert_eq!(g.growth(), Growth::Exponential);
    }

    #[test]
    fn basic_classes() {
        assert_eq!(UfnGraph::new(2, &[]).growth(), Growth::Exponential);
        assert_eq!(
            UfnGraph::new(1, &[]).growth(),
            Growth::Polynomial { degree: 0 }
        );
        assert_eq!(
            UfnGraph::new(1, &[w(&[0, 0, 0])]).growth(),
            Growth::FiniteDimensional
        );
        // commutative-like: forbid yx, so x^a y^b
        assert_eq!(
            UfnGraph::new(2, &[w(&[1, 0])]).growth(),
            Growth::Polynomial { degree: 1 }
        );
        // x^a y^b z^c
        assert_eq!(
            UfnGraph::new(3, &[w(&[1, 0]), w(&[2, 0]), w(&[2, 1])]).growth(),
            Growth::Polynomial { degree: 2 }
        );
    }

    #[test]
    fn family_with_two_xs_forbidden_is_linear() {
        let p = Pattern::Repeated {
            prefix: w(&[0]),
            block: w(&[1]),
            suffix: w(&[0]),
            min: 0,
        };
        assert_eq!(classify_patterns(2, &[p]), Growth::Polynomial { degree: 1 });
    }

    #[test]
    fn graph_and_automaton_agree() {
        let sets: Vec<Vec<Word>> = vec![
            vec![w(&[0, 0]), w(&[0, 1, 0])],
            vec![w(&[1, 0])],
            vec![w(&[0, 1]), w(&[1, 0])],
            vec![w(&[0, 0]), w(&[1, 1]), w(&[0, 1, 0])],
            vec![w(&[0]), w(&[1, 1])],
        ];
        for s in sets {
            let a = AvoidanceAutomaton::from_words(2, &s);
            assert_eq!(
                classify_automaton(&a),
                UfnGraph::new(2, &s).growth(),
                "{s:?}"
            );
        }
    }

    #[test]
    fn standard_series_examples() {
        let free = monomial(&["x", "y"], &[1, 1], &[]);
        assert_eq!(
            counts(&standard_hilbert(&free, 5).unwrap()),
            vec![1, 2, 4, 8, 16, 32]
        );
        let m = monomial(&["x", "y", "z"], &[2, 2, 1], &[&[0, 0], &[1, 1], &[0, 2]]);
        // after x only y may follow, after y only x or z
        assert_eq!(counts(&standard_hilbert(&m, 3).unwrap()), vec![1, 3, 6, 12]);
    }

    #[test]
    fn non_monomial_growth_is_labelled() {
        let g = GeneratorSet::new(["x", "y"]).unwrap();
        let one = BigRational::from_integer(1.into());
        let comm = NcPolynomial::from_terms([(w(&[0, 1]), one.clone()), (w(&[1, 0]), -one)]);
        let p = Presentation::new(g, DegreeFunction::standard(2), vec![comm]).unwrap();
        let r = classify_growth(&p, &BigRational::from_integer(6.into())).unwrap();
        assert_eq!(r.growth, Growth::Polynomial { degree: 1 });
        assert!(r.associated_graded && r.exact);
    }

    #[test]
    fn rescaling_comparison() {
        let free = monomial(&["x", "y"], &[1, 2], &[]);
        let r = verify_degree_rescaling(&free, 10).unwrap();
        assert!(r.holds);
        assert_eq!(r.first_max_weight_violation, Some(1));
        let flat = monomial(&["x", "y"], &[1, 1], &[&[0, 0]]);
        let r = verify_degree_rescaling(&flat, 8).unwrap();
        assert!(r.holds && r.first_max_weight_violation.is_none());
        let m = monomial(&["x", "y", "z"], &[2, 2, 1], &[&[0, 0], &[1, 1], &[0, 2]]);
        assert!(verify_degree_rescaling(&m, 8).unwrap().holds);
    }
}
