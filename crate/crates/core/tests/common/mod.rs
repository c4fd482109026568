//! Independent oracles used by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use schubert_core::{Character, RootSystem, Weight, WeylElement, Word};

pub fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

pub fn el(r: &RootSystem, w: &[usize]) -> WeylElement {
    r.from_word(&Word::new(w.to_vec())).unwrap()
}

/// Rank-one operator in quotient form `(f − e^{−α}·s_α f) / (1 − e^{−α})`,
/// divided exactly coset by coset along α-strings.
pub fn demazure_quotient(r: &RootSystem, i: usize, f: &Character) -> Character {
    let alpha = r.simple_root(i).unwrap().weight.clone();
    let mut g = f.clone();
    for (w, c) in f.iter() {
        let m = w.coords()[i - 1];
        let reflected = w.add_scaled(&alpha, -m);
        g.add_term(&reflected - &alpha, -*c);
    }
    // coset key: the string point with pairing 0 or 1; exponent k means key − kα
    let mut cosets: BTreeMap<Weight, BTreeMap<i64, i64>> = BTreeMap::new();
    for (w, c) in g.iter() {
        let m = w.coords()[i - 1];
        let k = m.div_euclid(2);
        let key = w.add_scaled(&alpha, -k);
        *cosets.entry(key).or_default().entry(-k).or_default() += *c;
    }
    let mut out = Character::zero();
    for (key, poly) in cosets {
        let lo = *poly.keys().next().unwrap();
        let hi = *poly.keys().last().unwrap();
        let mut run = 0;
        for k in lo..=hi {
            run += poly.get(&k).copied().unwrap_or(0);
            if k < hi {
                out.add_term(key.add_scaled(&alpha, -k), run);
            }
        }
        assert_eq!(run, 0, "quotient is not exact");
    }
    out
}

pub fn demazure_quotient_word(r: &RootSystem, word: &Word, f: &Character) -> Character {
    word.letters()
        .iter()
        .rev()
        .fold(f.clone(), |acc, &i| demazure_quotient(r, i, &acc))
}

/// Bruhat order by subwords: the set of all subword products of a reduced
/// word of `w`.
pub fn bruhat_lower_set(r: &RootSystem, w: &WeylElement) -> HashSet<WeylElement> {
    let letters = w.word().letters().to_vec();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << letters.len()) {
        let sub: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        out.insert(el(r, &sub));
    }
    out
}

/// Dominant weights with every fundamental coordinate in `0..=bound`.
pub fn dominant_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=bound).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}
