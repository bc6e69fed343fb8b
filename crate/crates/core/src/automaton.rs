//! Deterministic automata for words avoiding a set of forbidden factors.
//!
//! Forbidden sets may be infinite when given as repeated-block patterns
//! `prefix * block^t * suffix` for all `t >= min`. Such sets are regular,
//! so normal words can be counted exactly in every degree.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num::{BigUint, Zero};

use crate::algebra::Word;

/// A forbidden factor, or an infinite family of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Word(Word),
    Repeated {
        prefix: Word,
        block: Word,
        suffix: Word,
        min: u64,
    },
}

#[derive(Default)]
struct Nfa {
    edges: Vec<Vec<(usize, usize)>>,
    accepting: Vec<bool>,
}

impl Nfa {
    fn add_state(&mut self) -> usize {
        self.edges.push(Vec::new());
        self.accepting.push(false);
        self.edges.len() - 1
    }

    fn chain(&mut self, from: usize, letters: impl IntoIterator<Item = usize>) -> usize {
        let mut s = from;
        for l in letters {
            let t = self.add_state();
            self.edges[s].push((l, t));
            s = t;
        }
        s
    }
}

/// DFA over the alphabet `0..alphabet` accepting exactly the words with no
/// forbidden factor. Rejected words have no transition.
#[derive(Clone, Debug)]
pub struct AvoidanceAutomaton {
    alphabet: usize,
    transitions: Vec<Vec<Option<usize>>>,
}

impl AvoidanceAutomaton {
    pub fn new(alphabet: usize, patterns: &[Pattern]) -> Self {
        let mut nfa = Nfa::default();
        let root = nfa.add_state();
        for p in patterns {
            match p {
                Pattern::Word(w) => {
                    let end = nfa.chain(root, w.letters().iter().copied());
                    nfa.accepting[end] = true;
                }
                Pattern::Repeated {
                    prefix,
                    block,
                    suffix,
                    min,
                } => {
                    assert!(!block.is_empty(), "repeated block must be nonempty");
                    let head = prefix.concat(&block.pow(*min as usize));
                    let x = nfa.chain(root, head.letters().iter().copied());
                    if x != root {
                        let n = block.len();
                        let mut s = x;
                        for (i, &l) in block.letters().iter().enumerate() {
                            let t = if i + 1 == n { x } else { nfa.add_state() };
                            nfa.edges[s].push((l, t));
                            s = t;
                        }
                    }
                    let end = nfa.chain(x, suffix.letters().iter().copied());
                    nfa.accepting[end] = true;
                }
            }
        }

        let dead = |set: &BTreeSet<usize>| set.iter().any(|&s| nfa.accepting[s]);
        let start: BTreeSet<usize> = [root].into();
        let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
        if dead(&start) {
            return AvoidanceAutomaton {
                alphabet,
                transitions,
            };
        }
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        transitions.push(vec![None; alphabet]);
        queue.push_back(start);
        while let Some(set) = queue.pop_front() {
            let from = index[&set];
            for l in 0..alphabet {
                let mut next: BTreeSet<usize> = [root].into();
                for &s in &set {
                    next.extend(nfa.edges[s].iter().filter(|e| e.0 == l).map(|e| e.1));
                }
                if dead(&next) {
                    continue;
                }
                let to = match index.get(&next) {
                    Some(&i) => i,
                    None => {
                        let i = transitions.len();
                        transitions.push(vec![None; alphabet]);
                        index.insert(next.clone(), i);
                        queue.push_back(next);
                        i
                    }
                };
                transitions[from][l] = Some(to);
            }
        }
        AvoidanceAutomaton {
            alphabet,
            transitions,
        }
    }

    pub fn from_words(alphabet: usize, words: &[Word]) -> Self {
        let patterns: Vec<Pattern> = words.iter().cloned().map(Pattern::Word).collect();
        Self::new(alphabet, &patterns)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    /// True when even the empty word is forbidden.
    pub fn is_trivial(&self) -> bool {
        self.transitions.is_empty()
    }

    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        self.transitions[state][letter]
    }

    pub fn accepts(&self, w: &Word) -> bool {
        if self.is_trivial() {
            return false;
        }
        let mut s = 0;
        for &l in w.letters() {
            match self.step(s, l) {
                Some(t) => s = t,
                None => return false,
            }
        }
        true
    }

    /// Labelled edges `(from, letter, to)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.transitions.iter().enumerate().flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(l, t)| t.map(|t| (s, l, t)))
        })
    }

    /// Number of accepted words of each integer degree `0..=max`, where
    /// letter `l` has degree `weights[l] > 0`.
    pub fn count_by_degree(&self, weights: &[u64], max: u64) -> Vec<BigUint> {
        assert_eq!(weights.len(), self.alphabet);
        let max = max as usize;
        let mut totals = vec![BigUint::zero(); max + 1];
        if self.is_trivial() {
            return totals;
        }
        let n = self.state_count();
        let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n]; max + 1];
        table[0][0] = BigUint::from(1u32);
        for d in 0..=max {
            let row = std::mem::take(&mut table[d]);
            for (s, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                totals[d] += c;
                for (l, &w) in weights.iter().enumerate() {
                    let e = d + w as usize;
                    if e > max {
                        continue;
                    }
                    if let Some(t) = self.transitions[s][l] {
                        table[e][t] += c;
                    }
                }
            }
        }
        totals
    }

    pub fn count_by_length(&self, max: u64) -> Vec<BigUint> {
        self.count_by_degree(&vec![1; self.alphabet], max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[usize]) -> Word {
        Word::new(s.to_vec())
    }

    fn brute(alphabet: usize, forbidden: &[Word], max: usize) -> Vec<u64> {
        let mut out = vec![0u64; max + 1];
        let mut layer = vec![Word::empty()];
        for slot in out.iter_mut() {
            let normal: Vec<Word> = layer
                .into_iter()
                .filter(|u| forbidden.iter().all(|f| !u.contains_factor(f)))
                .collect();
            *slot = normal.len() as u64;
            layer = normal
                .iter()
                .flat_map(|u| (0..alphabet).map(move |l| u.concat(&Word::letter(l))))
                .collect();
        }
        out
    }

    fn as_u64(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn finite_sets_match_enumeration() {
        let cases: Vec<(usize, Vec<Word>)> = vec![
            (2, vec![]),
            (2, vec![w(&[0, 0]), w(&[0, 1, 0])]),
            (3, vec![w(&[0, 0]), w(&[1, 1]), w(&[0, 2])]),
            (2, vec![w(&[0, 1, 1, 0]), w(&[1, 0, 1])]),
        ];
        for (a, f) in cases {
            let dfa = AvoidanceAutomaton::from_words(a, &f);
            assert_eq!(as_u64(dfa.count_by_length(8)), brute(a, &f, 8));
        }
    }

    #[test]
    fn repeated_family_forbids_two_xs() {
        // x y^t x for all t >= 0: normal words have at most one x
        let p = Pattern::Repeated {
            prefix: w(&[0]),
            block: w(&[1]),
            suffix: w(&[0]),
            min: 0,
        };
        let dfa = AvoidanceAutomaton::new(2, &[p]);
        let counts = as_u64(dfa.count_by_length(10));
        assert_eq!(counts, (0..=10).map(|t| t + 1).collect::<Vec<u64>>());
        assert!(dfa.accepts(&w(&[1, 0, 1, 1])));
        assert!(!dfa.accepts(&w(&[0, 1, 1, 1, 0])));
    }

    #[test]
    fn repeated_block_of_length_two() {
        // x (xy)^t y for t >= 1
        let p = Pattern::Repeated {
            prefix: w(&[0]),
            block: w(&[0, 1]),
            suffix: w(&[1]),
            min: 1,
        };
        let dfa = AvoidanceAutomaton::new(2, &[p]);
        let forbidden: Vec<Word> = (1..=4)
            .map(|t| w(&[0]).concat(&w(&[0, 1]).pow(t)).concat(&w(&[1])))
            .collect();
        assert_eq!(as_u64(dfa.count_by_length(9)), brute(2, &forbidden, 9));
    }

    #[test]
    fn weighted_counts() {
        // free algebra, weights (1, 2): c_n = c_{n-1} + c_{n-2}
        let dfa = AvoidanceAutomaton::from_words(2, &[]);
        assert_eq!(
            as_u64(dfa.count_by_degree(&[1, 2], 6)),
            vec![1, 1, 2, 3, 5, 8, 13]
        );
    }

    #[test]
    fn empty_word_forbids_everything() {
        let dfa = AvoidanceAutomaton::from_words(2, &[Word::empty()]);
        assert!(dfa.is_trivial());
        assert_eq!(as_u64(dfa.count_by_length(3)), vec![0, 0, 0, 0]);
    }
}
