//! Weyl group elements as integer matrices on fundamental-weight
//! coordinates, with canonical reduced words.
//!
//! A word `[i1, …, in]` denotes the composition `s_{i1} ∘ … ∘ s_{in}`, so the
//! last letter acts first. Element identity is the matrix; the stored word is
//! recomputed from it by peeling the smallest right descent.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};

/// Default cap on `|W|` for exhaustive sweeps.
pub const DEFAULT_GUARD: u64 = 1_000_000;

/// A sequence of 1-based simple-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
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

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl FromStr for Word {
    type Err = std::num::ParseIntError;

    /// Comma-separated letters; the empty string is the empty word.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map(Word)
    }
}

/// An element of the Weyl group.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    /// Row-major action on fundamental-weight coordinates.
    matrix: Vec<i64>,
    word: Word,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// The canonical reduced word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.rank;
        let c = w.coords();
        Weight::new(
            (0..n)
                .map(|r| (0..n).map(|k| self.matrix[r * n + k] * c[k]).sum())
                .collect(),
        )
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl RootSystem {
    fn identity_matrix(&self) -> Vec<i64> {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    }

    /// `M · α_i` for a 1-based index.
    fn image_of_simple(&self, m: &[i64], i: usize) -> Weight {
        let n = self.rank();
        let c = self.cartan_matrix();
        Weight::new(
            (0..n)
                .map(|r| (0..n).map(|k| m[r * n + k] * c[k][i - 1]).sum())
                .collect(),
        )
    }

    /// In-place `M ← M · s_i`, given `M·α_i` already computed.
    fn right_multiply_simple(&self, m: &mut [i64], i: usize, image: &Weight) {
        let n = self.rank();
        for r in 0..n {
            m[r * n + (i - 1)] -= image.coords()[r];
        }
    }

    fn canonical_word(&self, matrix: &[i64]) -> Word {
        let mut m = matrix.to_vec();
        let mut letters = Vec::new();
        'peel: loop {
            for i in 1..=self.rank() {
                let image = self.image_of_simple(&m, i);
                if self.is_negative_root(&image) {
                    self.right_multiply_simple(&mut m, i, &image);
                    letters.push(i);
                    continue 'peel;
                }
            }
            break;
        }
        letters.reverse();
        Word(letters)
    }

    fn element_from_matrix(&self, matrix: Vec<i64>) -> WeylElement {
        let word = self.canonical_word(&matrix);
        WeylElement {
            rank: self.rank(),
            matrix,
            word,
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            rank: self.rank(),
            matrix: self.identity_matrix(),
            word: Word::default(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.from_word(&Word(vec![i]))
    }

    /// Product `s_{i1} ∘ … ∘ s_{in}`; the stored word is recomputed from the
    /// resulting matrix.
    pub fn from_word(&self, word: &Word) -> Result<WeylElement> {
        let mut m = self.identity_matrix();
        for &i in &word.0 {
            self.check_index(i)?;
            let image = self.image_of_simple(&m, i);
            self.right_multiply_simple(&mut m, i, &image);
        }
        Ok(self.element_from_matrix(m))
    }

    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        w.word.clone()
    }

    /// Composition `u ∘ w`.
    pub fn multiply(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n)
                    .map(|k| u.matrix[r * n + k] * w.matrix[k * n + c])
                    .sum();
            }
        }
        self.element_from_matrix(m)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.from_word(&w.word.reversed())
            .expect("canonical words are valid")
    }

    pub fn power(&self, w: &WeylElement, k: usize) -> WeylElement {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.multiply(&acc, w);
        }
        acc
    }

    /// Order of `w` in the group.
    pub fn order(&self, w: &WeylElement) -> usize {
        let mut acc = w.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.multiply(&acc, w);
            k += 1;
        }
        k
    }

    /// `l(w s_i) < l(w)`, i.e. `w(α_i) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.is_negative_root(&self.image_of_simple(&w.matrix, i))
    }

    /// `l(s_i w) < l(w)`, i.e. `w⁻¹(α_i) < 0`.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.is_right_descent(&self.inverse(w), i)
    }

    fn times_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let mut m = w.matrix.clone();
        let image = self.image_of_simple(&m, i);
        self.right_multiply_simple(&mut m, i, &image);
        self.element_from_matrix(m)
    }

    /// `R⁺(w) = {β ∈ R⁺ : w(β) ∈ R⁻}`.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<&Root> {
        self.positive_roots()
            .filter(|b| self.is_negative_root(&w.apply(&b.weight)))
            .collect()
    }

    /// Bruhat order via the lifting property on right descents.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        if u.length() > w.length() {
            return false;
        }
        if w.is_identity() {
            return u.is_identity();
        }
        if u.is_identity() {
            return true;
        }
        let s = *w.word.0.last().expect("nonempty word");
        let ws = self.times_simple(w, s);
        if self.is_right_descent(u, s) {
            self.bruhat_leq(&self.times_simple(u, s), &ws)
        } else {
            self.bruhat_leq(u, &ws)
        }
    }

    /// Longest element of the parabolic subgroup generated by the given
    /// simple reflections, by greedy ascent.
    pub fn parabolic_longest(&self, generators: &[usize]) -> Result<WeylElement> {
        let mut m = self.identity_matrix();
        for &i in generators {
            self.check_index(i)?;
        }
        'ascend: loop {
            for &i in generators {
                let image = self.image_of_simple(&m, i);
                if self.is_positive_root(&image) {
                    self.right_multiply_simple(&mut m, i, &image);
                    continue 'ascend;
                }
            }
            break;
        }
        Ok(self.element_from_matrix(m))
    }

    pub fn longest_element(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank()).collect();
        self.parabolic_longest(&all).expect("valid indices")
    }

    /// `w_α = w₀ · w_{0,P}` where `P` is generated by the simple
    /// reflections other than `s_α`: the minimal representative of `w₀`
    /// modulo the maximal parabolic subgroup attached to `α`.
    pub fn min_parabolic_rep(&self, alpha: usize) -> Result<WeylElement> {
        self.check_index(alpha)?;
        let others: Vec<usize> = (1..=self.rank()).filter(|&j| j != alpha).collect();
        let w0p = self.parabolic_longest(&others)?;
        let rep = self.multiply(&self.longest_element(), &w0p);
        let a = &self.simple_root(alpha)?.weight;
        for b in self.positive_roots() {
            let inverted = self.is_negative_root(&rep.apply(&b.weight));
            if inverted != self.dominance_leq(a, &b.weight) {
                return Err(Error::Invariant(format!(
                    "R⁺(w_α{alpha}) disagrees with {{β ≥ α{alpha}}} at β = {}",
                    b.weight
                )));
            }
        }
        Ok(rep)
    }

    /// Every element exactly once, ordered by length then canonical word.
    pub fn enumerate_group(&self, guard: u64) -> Result<Vec<WeylElement>> {
        let order = self.cartan_type().weyl_group_order();
        if order > guard as u128 {
            return Err(Error::GuardExceeded { order, guard });
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut level = vec![self.identity()];
        while !level.is_empty() {
            let mut next: HashSet<Vec<i64>> = HashSet::new();
            for w in &level {
                for i in 1..=self.rank() {
                    let image = self.image_of_simple(&w.matrix, i);
                    if self.is_positive_root(&image) {
                        let mut m = w.matrix.clone();
                        self.right_multiply_simple(&mut m, i, &image);
                        next.insert(m);
                    }
                }
            }
            out.append(&mut level);
            level = next
                .into_iter()
                .map(|m| self.element_from_matrix(m))
                .collect();
            level.sort_by(|a, b| a.word.cmp(&b.word));
        }
        if out.len() as u128 != order {
            return Err(Error::Invariant(format!(
                "enumerated {} elements, expected {order}",
                out.len()
            )));
        }
        Ok(out)
    }

    /// `w·λ = w(λ + ρ) − ρ`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        &w.apply(&(lambda + self.rho())) - self.rho()
    }

    /// Every ordering of the simple roots, in lexicographic order.
    pub fn coxeter_orderings(&self) -> Vec<Word> {
        (1..=self.rank())
            .permutations(self.rank())
            .map(Word)
            .collect()
    }

    /// Distinct Coxeter elements, each paired with the lexicographically
    /// first ordering producing it.
    pub fn coxeter_elements(&self) -> Vec<(WeylElement, Word)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for ord in self.coxeter_orderings() {
            let c = self.from_word(&ord).expect("valid ordering");
            if seen.insert(c.matrix.clone()) {
                out.push((c, ord));
            }
        }
        out
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Word> {
        if w.is_identity() {
            return vec![Word::default()];
        }
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            if self.is_right_descent(w, i) {
                for mut prefix in self.reduced_words(&self.times_simple(w, i)) {
                    prefix.0.push(i);
                    out.push(prefix);
                }
            }
        }
        out.sort();
        out
    }
}
