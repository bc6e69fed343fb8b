//! Degree-truncated noncommutative Gröbner bases.
//!
//! Words are ordered by weighted degree with the lowest degree leading, ties
//! broken by the lexicographically largest word. Leading words therefore
//! describe the associated graded algebra of the degree filtration, and
//! reduction only ever moves towards higher degree, so truncating at a
//! cutoff makes every computation finite.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num::{BigRational, BigUint, One, Zero};
use thiserror::Error;

use crate::algebra::{
    AlgebraError, DegreeFunction, GeneratorSet, IntegerScaling, NcPolynomial, Presentation, Word,
};
use crate::automaton::AvoidanceAutomaton;

pub const DEFAULT_MAX_BASIS: usize = 20_000;
pub const DEFAULT_MAX_SCALED_DEGREE: u64 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("basis grew beyond {limit} elements")]
    BasisLimit { limit: usize },
    #[error("cutoff {cutoff} needs {scaled} integer degree steps, above the limit {limit}")]
    CutoffTooLarge {
        cutoff: BigRational,
        scaled: u64,
        limit: u64,
    },
    #[error("input has terms of degree {degree}, above the cutoff {cutoff}")]
    DegreeOverflow {
        degree: BigRational,
        cutoff: BigRational,
    },
}

/// What to do when the basis exceeds `max_basis` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitPolicy {
    Error,
    /// Stop and return the partial basis with `complete == false`.
    Stop,
}

#[derive(Clone, Debug)]
pub struct GroebnerOptions {
    pub max_basis: usize,
    pub max_scaled_degree: u64,
    pub on_limit: LimitPolicy,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_basis: DEFAULT_MAX_BASIS,
            max_scaled_degree: DEFAULT_MAX_SCALED_DEGREE,
            on_limit: LimitPolicy::Error,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    degree: u64,
    word: Reverse<Word>,
}

type WorkPoly = BTreeMap<Key, BigRational>;

fn add_to(p: &mut WorkPoly, k: Key, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match p.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Element {
    lead: Word,
    lead_degree: u64,
    poly: WorkPoly,
}

impl Element {
    fn is_monomial(&self) -> bool {
        self.poly.len() == 1
    }
}

/// A Gröbner basis of the relation ideal, valid in all degrees up to the
/// cutoff.
#[derive(Clone, Debug)]
pub struct TruncatedGroebner {
    gens: GeneratorSet,
    deg: DegreeFunction,
    scaling: IntegerScaling,
    cutoff: BigRational,
    max_scaled: u64,
    elements: Vec<Element>,
    complete: bool,
    full: bool,
}

struct Builder<'a> {
    scaling: &'a IntegerScaling,
    max_scaled: u64,
    elements: Vec<Element>,
    full: bool,
}

impl Builder<'_> {
    fn to_work(&mut self, p: &NcPolynomial) -> WorkPoly {
        let mut out = WorkPoly::new();
        for (w, c) in p.terms() {
            let d = self.scaling.word_degree(w);
            if d > self.max_scaled {
                self.full = false;
                continue;
            }
            out.insert(
                Key {
                    degree: d,
                    word: Reverse(w.clone()),
                },
                c.clone(),
            );
        }
        out
    }

    fn find_reducer(&self, w: &Word) -> Option<(usize, usize)> {
        self.elements
            .iter()
            .enumerate()
            .find_map(|(i, e)| w.find_factor(&e.lead).map(|pos| (i, pos)))
    }

    /// Full reduction; returns the normal form and whether any term had to be
    /// dropped above the cutoff.
    fn reduce(&self, mut work: WorkPoly) -> (WorkPoly, bool) {
        let mut out = WorkPoly::new();
        let mut dropped = false;
        while let Some((key, c)) = work.pop_first() {
            let w = &key.word.0;
            match self.find_reducer(w) {
                None => {
                    out.insert(key, c);
                }
                Some((i, pos)) => {
                    let g = &self.elements[i];
                    let left = w.slice(0, pos);
                    let right = w.slice(pos + g.lead.len(), w.len());
                    let shift = key.degree - g.lead_degree;
                    for (k, a) in g.poly.iter().skip(1) {
                        let d = k.degree + shift;
                        if d > self.max_scaled {
                            dropped = true;
                            continue;
                        }
                        let nw = left.concat(&k.word.0).concat(&right);
                        add_to(
                            &mut work,
                            Key {
                                degree: d,
                                word: Reverse(nw),
                            },
                            -(&c * a),
                        );
                    }
                }
            }
        }
        (out, dropped)
    }

    fn sandwich(
        &mut self,
        p: &WorkPoly,
        left: &Word,
        right: &Word,
        sign: &BigRational,
        into: &mut WorkPoly,
    ) {
        let shift = self.scaling.word_degree(left) + self.scaling.word_degree(right);
        for (k, c) in p {
            let d = k.degree + shift;
            if d > self.max_scaled {
                self.full = false;
                continue;
            }
            let nw = left.concat(&k.word.0).concat(right);
            add_to(
                into,
                Key {
                    degree: d,
                    word: Reverse(nw),
                },
                c * sign,
            );
        }
    }

    /// Compositions of `a` and `b` where a suffix of `lead(a)` is a proper
    /// prefix of `lead(b)`.
    fn overlaps(&mut self, a: usize, b: usize, queue: &mut Queue) {
        let (ua, ub) = (self.elements[a].lead.clone(), self.elements[b].lead.clone());
        let (la, lb) = (ua.len(), ub.len());
        for k in 1..la.min(lb) {
            if ua.letters()[la - k..] != ub.letters()[..k] {
                continue;
            }
            let tail = ub.slice(k, lb);
            let head = ua.slice(0, la - k);
            let w = ua.concat(&tail);
            let d = self.scaling.word_degree(&w);
            let trivial = self.elements[a].is_monomial() && self.elements[b].is_monomial();
            if d > self.max_scaled {
                if !trivial {
                    self.full = false;
                }
                continue;
            }
            if trivial {
                continue;
            }
            let mut comp = WorkPoly::new();
            let pa = self.elements[a].poly.clone();
            let pb = self.elements[b].poly.clone();
            self.sandwich(&pa, &Word::empty(), &tail, &BigRational::one(), &mut comp);
            self.sandwich(&pb, &head, &Word::empty(), &-BigRational::one(), &mut comp);
            queue.push(d, w, comp);
        }
    }
}

#[derive(Default)]
struct Queue {
    items: BTreeMap<(u64, Reverse<Word>, u64), WorkPoly>,
    seq: u64,
}

impl Queue {
    fn push(&mut self, degree: u64, w: Word, p: WorkPoly) {
        self.seq += 1;
        self.items.insert((degree, Reverse(w), self.seq), p);
    }

    fn pop(&mut self) -> Option<(u64, WorkPoly)> {
        self.items.pop_first().map(|((d, _, _), p)| (d, p))
    }
}

fn check_cutoff(
    scaling: &IntegerScaling,
    cutoff: &BigRational,
    limit: u64,
) -> Result<u64, GbError> {
    let scaled = scaling.scale_cutoff(cutoff);
    if scaled > limit {
        return Err(GbError::CutoffTooLarge {
            cutoff: cutoff.clone(),
            scaled,
            limit,
        });
    }
    Ok(scaled)
}

pub fn truncated_groebner(
    p: &Presentation,
    cutoff: &BigRational,
) -> Result<TruncatedGroebner, GbError> {
    truncated_groebner_with(p, cutoff, &GroebnerOptions::default())
}

pub fn truncated_groebner_with(
    p: &Presentation,
    cutoff: &BigRational,
    options: &GroebnerOptions,
) -> Result<TruncatedGroebner, GbError> {
    let scaling = p.degrees().integer_scaling()?;
    let max_scaled = check_cutoff(&scaling, cutoff, options.max_scaled_degree)?;
    let mut b = Builder {
        scaling: &scaling,
        max_scaled,
        elements: Vec::new(),
        full: true,
    };
    let mut queue = Queue::default();
    for r in p.relations() {
        let w = b.to_work(r);
        if let Some((k, _)) = w.first_key_value() {
            let (d, lead) = (k.degree, k.word.0.clone());
            queue.push(d, lead, w);
        }
    }

    let mut complete = true;
    while let Some((d, work)) = queue.pop() {
        let (r, dropped) = b.reduce(work);
        if dropped {
            b.full = false;
        }
        let Some((k, c)) = r.first_key_value() else {
            continue;
        };
        if k.degree > d {
            let (d2, w2) = (k.degree, k.word.0.clone());
            queue.push(d2, w2, r);
            continue;
        }
        if b.elements.len() >= options.max_basis {
            match options.on_limit {
                LimitPolicy::Error => {
                    return Err(GbError::BasisLimit {
                        limit: options.max_basis,
                    })
                }
                LimitPolicy::Stop => {
                    complete = false;
                    b.full = false;
                    break;
                }
            }
        }
        let inv = c.recip();
        let lead = k.word.0.clone();
        let poly: WorkPoly = r.into_iter().map(|(k, a)| (k, a * &inv)).collect();
        b.elements.push(Element {
            lead,
            lead_degree: d,
            poly,
        });
        let n = b.elements.len() - 1;
        for i in 0..=n {
            b.overlaps(n, i, &mut queue);
            if i != n {
                b.overlaps(i, n, &mut queue);
            }
        }
    }

    // Tail reduction for a reduced basis.
    let mut reduced = Vec::with_capacity(b.elements.len());
    for i in 0..b.elements.len() {
        let mut tail = b.elements[i].poly.clone();
        let (lead_key, one) = tail.pop_first().expect("basis elements are nonzero");
        let (mut t, dropped) = b.reduce(tail);
        if dropped {
            b.full = false;
        }
        t.insert(lead_key, one);
        reduced.push(Element {
            poly: t,
            ..b.elements[i].clone()
        });
    }
    let full = b.full;
    reduced.sort_by(|x, y| (x.lead_degree, &x.lead).cmp(&(y.lead_degree, &y.lead)));

    Ok(TruncatedGroebner {
        gens: p.generators().clone(),
        deg: p.degrees().clone(),
        scaling,
        cutoff: cutoff.clone(),
        max_scaled,
        elements: reduced,
        complete,
        full,
    })
}

/// Normal form of a polynomial modulo a truncated basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub poly: NcPolynomial,
    /// False when terms above the cutoff were discarded, either here or while
    /// building the basis.
    pub exact: bool,
}

impl TruncatedGroebner {
    pub fn cutoff(&self) -> &BigRational {
        &self.cutoff
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn degrees(&self) -> &DegreeFunction {
        &self.deg
    }

    pub fn scaling(&self) -> &IntegerScaling {
        &self.scaling
    }

    /// All compositions up to the cutoff were resolved.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Nothing was discarded above the cutoff, so this is a Gröbner basis of
    /// the whole ideal.
    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.elements.iter().map(|e| e.lead.clone()).collect()
    }

    pub fn basis(&self) -> Vec<NcPolynomial> {
        self.elements
            .iter()
            .map(|e| {
                NcPolynomial::from_terms(e.poly.iter().map(|(k, c)| (k.word.0.clone(), c.clone())))
            })
            .collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.elements.iter().all(|e| !w.contains_factor(&e.lead))
    }

    pub fn automaton(&self) -> AvoidanceAutomaton {
        AvoidanceAutomaton::from_words(self.gens.len(), &self.leading_words())
    }

    pub fn normal_form(&self, q: &NcPolynomial) -> Result<NormalForm, GbError> {
        let mut work = WorkPoly::new();
        for (w, c) in q.terms() {
            let d = self.scaling.word_degree(w);
            if d > self.max_scaled {
                return Err(GbError::DegreeOverflow {
                    degree: self.scaling.unscale(d),
                    cutoff: self.cutoff.clone(),
                });
            }
            work.insert(
                Key {
                    degree: d,
                    word: Reverse(w.clone()),
                },
                c.clone(),
            );
        }
        let b = Builder {
            scaling: &self.scaling,
            max_scaled: self.max_scaled,
            elements: self.elements.clone(),
            full: true,
        };
        let (r, dropped) = b.reduce(work);
        Ok(NormalForm {
            poly: NcPolynomial::from_terms(r.into_iter().map(|(k, c)| (k.word.0, c))),
            exact: self.full && !dropped,
        })
    }

    pub fn hilbert(&self) -> HilbertTruncation {
        let free = AvoidanceAutomaton::from_words(self.gens.len(), &[])
            .count_by_degree(&self.scaling.weights, self.max_scaled);
        let normal = self
            .automaton()
            .count_by_degree(&self.scaling.weights, self.max_scaled);
        let entries = free
            .iter()
            .zip(normal)
            .enumerate()
            .filter(|(_, (f, _))| !f.is_zero())
            .map(|(d, (_, n))| (self.scaling.unscale(d as u64), n))
            .collect();
        HilbertTruncation {
            cutoff: self.cutoff.clone(),
            entries,
            complete: self.complete,
        }
    }
}

/// Dimensions of the graded pieces of the associated graded algebra, for
/// every degree up to the cutoff that some word attains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTruncation {
    pub cutoff: BigRational,
    pub entries: Vec<(BigRational, BigUint)>,
    pub complete: bool,
}

impl HilbertTruncation {
    pub fn dimension(&self, degree: &BigRational) -> BigUint {
        self.entries
            .iter()
            .find(|(d, _)| d == degree)
            .map(|(_, n)| n.clone())
            .unwrap_or_default()
    }

    pub fn dimensions(&self) -> Vec<BigUint> {
        self.entries.iter().map(|(_, n)| n.clone()).collect()
    }

    /// Value of the truncated series at `z`, exponents permitting.
    pub fn total(&self) -> BigUint {
        self.entries.iter().map(|(_, n)| n).sum()
    }
}

pub fn hilbert_truncation(
    p: &Presentation,
    cutoff: &BigRational,
) -> Result<HilbertTruncation, GbError> {
    Ok(truncated_groebner(p, cutoff)?.hilbert())
}

pub fn normal_form(
    p: &Presentation,
    q: &NcPolynomial,
    cutoff: &BigRational,
) -> Result<NormalForm, GbError> {
    truncated_groebner(p, cutoff)?.normal_form(q)
}

/// A formal word in the subalgebra generators whose image is a combination
/// of the images of earlier words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependency {
    pub word: Vec<usize>,
    pub combination: Vec<(Vec<usize>, BigRational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSubalgebraCheck {
    pub free: bool,
    pub words_checked: usize,
    pub dependency: Option<Dependency>,
    pub exact: bool,
}

fn formal_words(k: usize, maxlen: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..maxlen {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..k).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Checks that all words of length `<= maxlen` in `subgens` have linearly
/// independent images in the quotient.
pub fn free_subalgebra_check(
    p: &Presentation,
    subgens: &[NcPolynomial],
    maxlen: usize,
) -> Result<FreeSubalgebraCheck, GbError> {
    let words = formal_words(subgens.len(), maxlen);
    let images: Vec<NcPolynomial> = words
        .iter()
        .map(|w| {
            w.iter()
                .fold(NcPolynomial::one(), |acc, &i| &acc * &subgens[i])
        })
        .collect();
    let cutoff = images
        .iter()
        .filter_map(|q| q.max_degree(p.degrees()).finite().cloned())
        .max()
        .unwrap_or_else(BigRational::zero);
    let gb = truncated_groebner(p, &cutoff)?;

    struct Row {
        pivot: Word,
        vec: BTreeMap<Word, BigRational>,
        comb: Vec<BigRational>,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut exact = true;
    for (idx, q) in images.iter().enumerate() {
        let nf = gb.normal_form(q)?;
        exact &= nf.exact;
        let mut vec: BTreeMap<Word, BigRational> = nf
            .poly
            .terms()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        let mut comb = vec![BigRational::zero(); idx + 1];
        comb[idx] = BigRational::one();
        for r in &rows {
            let Some(c) = vec.get(&r.pivot).cloned() else {
                continue;
            };
            for (w, a) in &r.vec {
                let e = vec.entry(w.clone()).or_insert_with(BigRational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    vec.remove(w);
                }
            }
            for (j, a) in r.comb.iter().enumerate() {
                comb[j] -= &c * a;
            }
        }
        match vec.keys().next().cloned() {
            Some(pivot) => {
                let inv = vec[&pivot].recip();
                for v in vec.values_mut() {
                    *v *= &inv;
                }
                for v in comb.iter_mut() {
                    *v *= &inv;
                }
                rows.push(Row { pivot, vec, comb });
            }
            None => {
                // comb . images == 0 with comb[idx] == 1
                let combination = comb[..idx]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (words[j].clone(), -c))
                    .collect();
                return Ok(FreeSubalgebraCheck {
                    free: false,
                    words_checked: idx + 1,
                    dependency: Some(Dependency {
                        word: words[idx].clone(),
                        combination,
                    }),
                    exact,
                });
            }
        }
    }
    Ok(FreeSubalgebraCheck {
        free: true,
        words_checked: words.len(),
        dependency: None,
        exact,
    })
}
