//! Generators, words, noncommutative polynomials, degree functions and
//! finite presentations `k<X | R>` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator set must not be empty")]
    NoGenerators,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("degree of `{name}` must be positive, got {degree}")]
    NonPositiveDegree { name: String, degree: BigRational },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weights are too large to scale to machine integers")]
    WeightOverflow,
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("relation {0} has a constant term, so its degree is not positive")]
    ConstantTerm(usize),
    #[error("relation {0} uses a letter outside the generator set")]
    LetterOutOfRange(usize),
    #[error("relation index {0} out of range")]
    RelationIndex(usize),
    #[error("relation {index} is not of the form c*{generator} - f with f free of {generator}")]
    NotEliminable { index: usize, generator: String },
    #[error("relation {index} mentions the eliminated generator `{generator}`")]
    GeneratorStillUsed { index: usize, generator: String },
}

/// Ordered, duplicate-free list of generator names. The order is the
/// tie-breaking order of the monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlgebraError::NoGenerators);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(GeneratorSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, AlgebraError> {
        names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| AlgebraError::UnknownGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

/// Integer form of a degree function: `weights[i] = factor * deg(x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerScaling {
    pub factor: u64,
    pub weights: Vec<u64>,
}

impl IntegerScaling {
    pub fn word_degree(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weights[l]).sum()
    }

    /// Largest scaled degree not exceeding `cutoff`.
    pub fn scale_cutoff(&self, cutoff: &BigRational) -> u64 {
        let scaled = cutoff * BigRational::from_integer(BigInt::from(self.factor));
        if scaled.is_negative() {
            0
        } else {
            scaled.floor().to_integer().to_u64().unwrap_or(u64::MAX)
        }
    }

    pub fn unscale(&self, degree: u64) -> BigRational {
        BigRational::new(BigInt::from(degree), BigInt::from(self.factor))
    }
}

/// Positive rational weight for every generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeFunction {
    weights: Vec<BigRational>,
}

impl DegreeFunction {
    pub fn new(gens: &GeneratorSet, weights: Vec<BigRational>) -> Result<Self, AlgebraError> {
        if weights.len() != gens.len() {
            return Err(AlgebraError::WeightCount {
                expected: gens.len(),
                got: weights.len(),
            });
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_positive() {
                return Err(AlgebraError::NonPositiveDegree {
                    name: gens.name(i).to_string(),
                    degree: w.clone(),
                });
            }
        }
        Ok(DegreeFunction { weights })
    }

    /// All weights equal to one.
    pub fn standard(n: usize) -> Self {
        DegreeFunction {
            weights: vec![BigRational::one(); n],
        }
    }

    pub fn from_integers(gens: &GeneratorSet, weights: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(
            gens,
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight(&self, letter: usize) -> &BigRational {
        &self.weights[letter]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    pub fn max_weight(&self) -> BigRational {
        self.weights
            .iter()
            .max()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_weight(&self) -> BigRational {
        self.weights
            .iter()
            .min()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn integer_scaling(&self) -> Result<IntegerScaling, AlgebraError> {
        let factor = self
            .weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let weights = self
            .weights
            .iter()
            .map(|w| {
                (w * BigRational::from_integer(factor.clone()))
                    .to_integer()
                    .to_u64()
            })
            .collect::<Option<Vec<_>>>()
            .ok_or(AlgebraError::WeightOverflow)?;
        let factor = factor.to_u64().ok_or(AlgebraError::WeightOverflow)?;
        Ok(IntegerScaling { factor, weights })
    }

    fn restrict(&self, drop: usize) -> DegreeFunction {
        let mut weights = self.weights.clone();
        weights.remove(drop);
        DegreeFunction { weights }
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: usize) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// First position at which `factor` occurs as a contiguous subword.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        if factor.is_empty() {
            return Some(0);
        }
        self.0
            .windows(factor.len())
            .position(|w| w == factor.letters())
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        self.find_factor(factor).is_some()
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn contains_letter(&self, l: usize) -> bool {
        self.0.contains(&l)
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    gens: &'a GeneratorSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.gens.name(l))?;
        }
        Ok(())
    }
}

/// Sum of generator weights along `w`.
pub fn word_degree(w: &Word, deg: &DegreeFunction) -> BigRational {
    w.letters()
        .iter()
        .fold(BigRational::zero(), |acc, &l| acc + deg.weight(l))
}

/// Filtration degree; the zero polynomial has degree `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(BigRational),
    Infinite,
}

impl Degree {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::Infinite => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinite => write!(f, "inf"),
        }
    }
}

/// Element of the free algebra `Q<X>` in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, BigRational>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), BigRational::one())
    }

    pub fn monomial(w: Word, c: BigRational) -> Self {
        let mut p = NcPolynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigRational)>) -> Self {
        let mut p = NcPolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&BigRational> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn mentions(&self, letter: usize) -> bool {
        self.terms.keys().any(|w| w.contains_letter(letter))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }

    pub fn scale(&self, c: &BigRational) -> NcPolynomial {
        if c.is_zero() {
            return NcPolynomial::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPolynomial {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Rename letters through `map`; letters mapped to `None` must not occur.
    pub(crate) fn relabel(&self, map: &[Option<usize>]) -> NcPolynomial {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let letters = w
                        .letters()
                        .iter()
                        .map(|&l| map[l].expect("relabel of removed letter"))
                        .collect();
                    (Word::new(letters), c.clone())
                })
                .collect(),
        }
    }

    /// Largest word degree in the support (top of the Newton range).
    pub fn max_degree(&self, deg: &DegreeFunction) -> Degree {
        self.terms
            .keys()
            .map(|w| word_degree(w, deg))
            .max()
            .map(Degree::Finite)
            .unwrap_or(Degree::Infinite)
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, gens }
    }
}

/// Minimum of `word_degree` over the support of `p`.
pub fn poly_degree(p: &NcPolynomial, deg: &DegreeFunction) -> Degree {
    p.terms
        .keys()
        .map(|w| word_degree(w, deg))
        .min()
        .map(Degree::Finite)
        .unwrap_or(Degree::Infinite)
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NcPolynomial {
            type Output = NcPolynomial;
            fn $m(self, rhs: NcPolynomial) -> NcPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub struct PolyDisplay<'a> {
    poly: &'a NcPolynomial,
    gens: &'a GeneratorSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", w.display(self.gens))?;
            } else {
                write!(f, "{abs}*{}", w.display(self.gens))?;
            }
        }
        Ok(())
    }
}

/// `k<X | R>` with a degree function on `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    gens: GeneratorSet,
    deg: DegreeFunction,
    relations: Vec<NcPolynomial>,
}

impl Presentation {
    pub fn new(
        gens: GeneratorSet,
        deg: DegreeFunction,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self, AlgebraError> {
        if deg.len() != gens.len() {
            return Err(AlgebraError::WeightCount {
                expected: gens.len(),
                got: deg.len(),
            });
        }
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(AlgebraError::ZeroRelation(i));
            }
            if r.max_letter().is_some_and(|l| l >= gens.len()) {
                return Err(AlgebraError::LetterOutOfRange(i));
            }
            if r.coefficient(&Word::empty()).is_some() {
                return Err(AlgebraError::ConstantTerm(i));
            }
        }
        Ok(Presentation {
            gens,
            deg,
            relations,
        })
    }

    /// Free algebra on the given generators, no relations.
    pub fn free(gens: GeneratorSet, deg: DegreeFunction) -> Result<Self, AlgebraError> {
        Self::new(gens, deg, Vec::new())
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn degrees(&self) -> &DegreeFunction {
        &self.deg
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> Vec<BigRational> {
        self.relations
            .iter()
            .map(|r| match poly_degree(r, &self.deg) {
                Degree::Finite(d) => d,
                Degree::Infinite => unreachable!("relations are nonzero"),
            })
            .collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(NcPolynomial::is_monomial)
    }

    pub fn with_degrees(&self, deg: DegreeFunction) -> Result<Self, AlgebraError> {
        Self::new(self.gens.clone(), deg, self.relations.clone())
    }

    pub fn with_relations(&self, relations: Vec<NcPolynomial>) -> Result<Self, AlgebraError> {
        Self::new(self.gens.clone(), self.deg.clone(), relations)
    }

    pub fn add_relations(
        &self,
        extra: impl IntoIterator<Item = NcPolynomial>,
    ) -> Result<Self, AlgebraError> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        self.with_relations(rels)
    }

    /// Keeps only the relations whose indices are listed in `keep`, in
    /// their original order.
    pub fn drop_relations(&self, keep: &[usize]) -> Result<Self, AlgebraError> {
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.relations.len()) {
            return Err(AlgebraError::RelationIndex(bad));
        }
        let rels = (0..self.relations.len())
            .filter(|i| keep.contains(i))
            .map(|i| self.relations[i].clone())
            .collect();
        self.with_relations(rels)
    }

    /// Removes generator `generator` using relation `relation = c*x - f_x`,
    /// where `f_x` and every other relation avoid `x`. The degree function
    /// is restricted to the remaining generators.
    pub fn eliminate_generator(
        &self,
        generator: usize,
        relation: usize,
    ) -> Result<Self, AlgebraError> {
        let name = self
            .gens
            .names()
            .get(generator)
            .ok_or_else(|| AlgebraError::UnknownGenerator(format!("#{generator}")))?
            .clone();
        let r = self
            .relations
            .get(relation)
            .ok_or(AlgebraError::RelationIndex(relation))?;
        let x = Word::letter(generator);
        let shape_ok = r.coefficient(&x).is_some()
            && r.terms()
                .filter(|(w, _)| w.contains_letter(generator))
                .count()
                == 1;
        if !shape_ok {
            return Err(AlgebraError::NotEliminable {
                index: relation,
                generator: name,
            });
        }
        for (i, other) in self.relations.iter().enumerate() {
            if i != relation && other.mentions(generator) {
                return Err(AlgebraError::GeneratorStillUsed {
                    index: i,
                    generator: name,
                });
            }
        }
        if self.gens.len() == 1 {
            return Err(AlgebraError::NoGenerators);
        }
        let map: Vec<Option<usize>> = (0..self.gens.len())
            .map(|l| match l.cmp(&generator) {
                std::cmp::Ordering::Less => Some(l),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(l - 1),
            })
            .collect();
        let names: Vec<String> = self
            .gens
            .names()
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != generator)
            .map(|(_, n)| n.clone())
            .collect();
        let rels = self
            .relations
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != relation)
            .map(|(_, p)| p.relabel(&map))
            .collect();
        Presentation::new(
            GeneratorSet::new(names)?,
            self.deg.restrict(generator),
            rels,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn xyz() -> GeneratorSet {
        GeneratorSet::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn word_degree_examples() {
        let g = xyz();
        let d = DegreeFunction::from_integers(&g, &[2, 2, 1]).unwrap();
        assert_eq!(word_degree(&g.word(&["x", "z"]).unwrap(), &d), q(3, 1));
        assert_eq!(word_degree(&Word::empty(), &d), q(0, 1));

        let g = GeneratorSet::new(["x", "y"]).unwrap();
        let a = q(7, 2);
        let d = DegreeFunction::new(&g, vec![a.clone(), q(1, 1)]).unwrap();
        let w = g.word(&["x", "y", "y", "y", "x"]).unwrap();
        assert_eq!(word_degree(&w, &d), a * q(2, 1) + q(3, 1));
    }

    #[test]
    fn poly_degree_examples() {
        let g = GeneratorSet::new(["x", "y", "v"]).unwrap();
        let d = DegreeFunction::from_integers(&g, &[1, 1, 3]).unwrap();
        let v = NcPolynomial::word(g.word(&["v"]).unwrap());
        let xy = NcPolynomial::word(g.word(&["x", "y"]).unwrap());
        assert_eq!(poly_degree(&(&v - &xy), &d), Degree::Finite(q(2, 1)));
        assert_eq!(poly_degree(&NcPolynomial::zero(), &d), Degree::Infinite);

        let g = GeneratorSet::new(["x", "y"]).unwrap();
        let d = DegreeFunction::standard(2);
        let p = NcPolynomial::word(g.word(&["x", "x"]).unwrap())
            + NcPolynomial::word(g.word(&["x", "y", "x"]).unwrap());
        assert_eq!(poly_degree(&p, &d), Degree::Finite(q(2, 1)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            GeneratorSet::new(Vec::<String>::new()),
            Err(AlgebraError::NoGenerators)
        );
        assert!(matches!(
            GeneratorSet::new(["x", "x"]),
            Err(AlgebraError::DuplicateGenerator(_))
        ));
        let g = GeneratorSet::new(["x"]).unwrap();
        assert!(matches!(
            DegreeFunction::new(&g, vec![q(0, 1)]),
            Err(AlgebraError::NonPositiveDegree { .. })
        ));
        let d = DegreeFunction::standard(1);
        assert_eq!(
            Presentation::new(g.clone(), d.clone(), vec![NcPolynomial::zero()]),
            Err(AlgebraError::ZeroRelation(0))
        );
        let with_const = &NcPolynomial::one() - &NcPolynomial::word(Word::letter(0));
        assert_eq!(
            Presentation::new(g, d, vec![with_const]),
            Err(AlgebraError::ConstantTerm(0))
        );
    }

    #[test]
    fn drop_relations_keeps_order() {
        let g = xyz();
        let rels = vec![
            NcPolynomial::word(g.word(&["x", "x"]).unwrap()),
            NcPolynomial::word(g.word(&["y", "y"]).unwrap()),
            NcPolynomial::word(g.word(&["x", "z"]).unwrap()),
        ];
        let p = Presentation::new(g.clone(), DegreeFunction::standard(3), rels.clone()).unwrap();
        let dropped = p.drop_relations(&[1, 0]).unwrap();
        assert_eq!(dropped.relations(), &rels[..2]);
        assert_eq!(p.drop_relations(&[0, 1, 2]).unwrap(), p);
        assert_eq!(p.drop_relations(&[3]), Err(AlgebraError::RelationIndex(3)));
    }

    #[test]
    fn eliminate_example_extension() {
        let g = GeneratorSet::new(["x", "y", "v"]).unwrap();
        let d = DegreeFunction::from_integers(&g, &[1, 1, 3]).unwrap();
        let w = |s: &[&str]| NcPolynomial::word(g.word(s).unwrap());
        let rels = vec![
            &w(&["v"]) - &w(&["x", "y"]),
            w(&["x", "y", "x", "y", "x"]),
            w(&["x", "y", "x", "y", "y"]),
            w(&["x", "x", "y", "x", "y"]),
        ];
        let p = Presentation::new(g, d, rels).unwrap();
        let e = p.eliminate_generator(2, 0).unwrap();
        assert_eq!(e.generators().names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(e.degrees(), &DegreeFunction::standard(2));
        assert_eq!(e.relations().len(), 3);
        assert_eq!(
            e.relations()[0].display(e.generators()).to_string(),
            "x*y*x*y*x"
        );
    }

    #[test]
    fn eliminate_rejections() {
        let g = GeneratorSet::new(["x", "y", "v"]).unwrap();
        let d = DegreeFunction::from_integers(&g, &[1, 1, 3]).unwrap();
        let w = |s: &[&str]| NcPolynomial::word(g.word(s).unwrap());
        // v^2*x still mentions v
        let p = Presentation::new(
            g.clone(),
            d.clone(),
            vec![&w(&["v"]) - &w(&["x", "y"]), w(&["v", "v", "x"])],
        )
        .unwrap();
        assert!(matches!(
            p.eliminate_generator(2, 0),
            Err(AlgebraError::GeneratorStillUsed { index: 1, .. })
        ));
        // v - v*x is not of the form v - f with f free of v
        let p = Presentation::new(g.clone(), d, vec![&w(&["v"]) - &w(&["v", "x"])]).unwrap();
        assert!(matches!(
            p.eliminate_generator(2, 0),
            Err(AlgebraError::NotEliminable { .. })
        ));
    }

    #[test]
    fn eliminate_unused_generator() {
        let g = GeneratorSet::new(["u", "y"]).unwrap();
        let p = Presentation::new(
            g.clone(),
            DegreeFunction::standard(2),
            vec![&NcPolynomial::word(Word::letter(0)) - &NcPolynomial::word(Word::letter(1))],
        )
        .unwrap();
        let e = p.eliminate_generator(0, 0).unwrap();
        assert_eq!(e.generators().names(), &["y".to_string()]);
        assert!(e.relations().is_empty());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..3, 0..8).prop_map(Word::new)
    }

    fn arb_poly() -> impl Strategy<Value = NcPolynomial> {
        prop::collection::vec((arb_word(), -3i64..4), 0..5).prop_map(|ts| {
            NcPolynomial::from_terms(
                ts.into_iter()
                    .map(|(w, c)| (w, BigRational::from_integer(c.into()))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn word_degree_is_additive(u in arb_word(), v in arb_word(), a in 1i64..5, b in 1i64..5, c in 1i64..5) {
            let g = xyz();
            let d = DegreeFunction::new(&g, vec![q(a, 1), q(b, 2), q(c, 3)]).unwrap();
            prop_assert_eq!(word_degree(&u.concat(&v), &d), word_degree(&u, &d) + word_degree(&v, &d));
        }
    }

    proptest! {
        #[test]
        fn degree_of_sum_is_at_least_min(p in arb_poly(), r in arb_poly()) {
            let d = DegreeFunction::new(&xyz(), vec![q(1, 1), q(3, 2), q(2, 1)]).unwrap();
            let lhs = poly_degree(&(&p + &r), &d);
            let rhs = std::cmp::min(poly_degree(&p, &d), poly_degree(&r, &d));
            prop_assert!(lhs >= rhs);
        }
    }
}
