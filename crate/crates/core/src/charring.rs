//! The representation ring of the maximal torus: finite integer-multiplicity
//! weight multisets, the rank-one Demazure string operators acting on them,
//! and a Freudenthal/Weyl-dimension oracle for irreducible characters.
//!
//! Characters are generic over an exact signed coefficient ring; the crate
//! root aliases the `i64` instance as [`Character`](crate::Character).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{Rational, RootSystem, Weight};
use crate::weyl::Word;

/// Exact signed coefficients for characters. Overflow is a hard error.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i32>
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + Eq
        + Ord
        + fmt::Debug
        + fmt::Display
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i32>
        + Send
        + Sync
{
}

/// `Σ m_λ e^λ` with nonzero multiplicities only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterOf<C> {
    terms: HashMap<Weight, C>,
}

impl<C: Coefficient> Default for CharacterOf<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> CharacterOf<C> {
    pub fn zero() -> Self {
        Self {
            terms: HashMap::new(),
        }
    }

    /// `e^λ`.
    pub fn monomial(w: Weight) -> Self {
        let mut out = Self::zero();
        out.add_term(w, C::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    /// Adds `c·e^w`, dropping the term if it cancels.
    ///
    /// Panics on coefficient overflow.
    pub fn add_term(&mut self, w: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing = existing
                    .checked_add(&c)
                    .expect("character coefficient overflow");
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    /// Sum of multiplicities (the virtual dimension).
    pub fn dimension(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| {
            acc.checked_add(c).expect("character coefficient overflow")
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Term-wise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        (other - self).is_nonnegative()
    }

    pub fn scaled(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    (
                        w.clone(),
                        c.checked_mul(k).expect("character coefficient overflow"),
                    )
                })
                .collect(),
        }
    }

    /// Applies a weight map term by term.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Terms sorted by decreasing height, then fundamental coordinates.
    pub fn sorted_terms(&self, rs: &RootSystem) -> Vec<(Weight, C)> {
        let mut v: Vec<(Rational, Weight, C)> = self
            .terms
            .iter()
            .map(|(w, c)| (rs.height(w), w.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// Compact rendering in canonical term order, e.g. `e(1,1) + 2e(0,0)`.
    pub fn render(&self, rs: &RootSystem) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.sorted_terms(rs).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&format!("e{w}"));
        }
        out
    }
}

impl<C: Coefficient> Add<&CharacterOf<C>> for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn add(self, rhs: &CharacterOf<C>) -> CharacterOf<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub<&CharacterOf<C>> for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn sub(self, rhs: &CharacterOf<C>) -> CharacterOf<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn neg(self) -> CharacterOf<C> {
        CharacterOf {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient> std::iter::Sum for CharacterOf<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

/// Rank-one Demazure operator for the simple root `α_i` (1-based), applied
/// by the string formula. On `e^λ` with `m = ⟨λ, α_i∨⟩`:
/// `m ≥ 0` gives `Σ_{k=0..m} e^{λ−kα}`, `m = −1` gives `0`, and `m ≤ −2`
/// gives `−Σ_{k=1..−m−1} e^{λ+kα}`.
pub fn demazure_op<C: Coefficient>(
    rs: &RootSystem,
    i: usize,
    f: &CharacterOf<C>,
) -> Result<CharacterOf<C>> {
    let alpha = rs.simple_root(i)?.weight.clone();
    let mut out = CharacterOf::zero();
    for (lambda, c) in f.iter() {
        rs.check_weight(lambda)?;
        let m = lambda.coords()[i - 1];
        if m >= 0 {
            for k in 0..=m {
                out.add_term(lambda.add_scaled(&alpha, -k), c.clone());
            }
        } else if m <= -2 {
            for k in 1..=(-m - 1) {
                out.add_term(lambda.add_scaled(&alpha, k), -c.clone());
            }
        }
    }
    Ok(out)
}

/// `D_{i1} ∘ … ∘ D_{in}`: the last letter's operator is applied first.
pub fn demazure_along_word<C: Coefficient>(
    rs: &RootSystem,
    word: &Word,
    f: &CharacterOf<C>,
) -> Result<CharacterOf<C>> {
    let mut acc = f.clone();
    for &i in word.letters().iter().rev() {
        acc = demazure_op(rs, i, &acc)?;
    }
    Ok(acc)
}

/// `Char(𝔤) = Σ_{β∈R} e^β + rank·e⁰`.
pub fn adjoint_character<C: Coefficient>(rs: &RootSystem) -> CharacterOf<C> {
    let mut out = CharacterOf::zero();
    for r in rs.roots() {
        out.add_term(r.weight.clone(), C::one());
    }
    out.add_term(Weight::zero(rs.rank()), C::from(rs.rank() as i32));
    out
}

/// `char 𝔟 = rank·e⁰ + Σ_{β∈R⁺} e^{−β}` (the Borel of negative roots).
pub fn borel_character<C: Coefficient>(rs: &RootSystem) -> CharacterOf<C> {
    let mut out = CharacterOf::zero();
    for r in rs.positive_roots() {
        out.add_term(-&r.weight, C::one());
    }
    out.add_term(Weight::zero(rs.rank()), C::from(rs.rank() as i32));
    out
}

/// Dominant Weyl-conjugate of `w`.
pub fn dominant_conjugate(rs: &RootSystem, w: &Weight) -> Weight {
    let mut cur = w.clone();
    while let Some(i) = cur.coords().iter().position(|&c| c < 0) {
        cur = rs.reflect_simple(&cur, i + 1);
    }
    cur
}

/// Weyl dimension formula `Π_{β>0} ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<i64> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = lambda + rs.rho();
    let mut acc = Ratio::<i128>::one();
    for b in rs.positive_roots() {
        let num = rs.pairing_root(&shifted, b) as i128;
        let den = rs.pairing_root(rs.rho(), b) as i128;
        acc = acc
            .checked_mul(&Ratio::new(num, den))
            .ok_or(Error::Overflow("Weyl dimension"))?;
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!(
            "non-integral Weyl dimension {acc}"
        )));
    }
    i64::try_from(acc.to_integer()).map_err(|_| Error::Overflow("Weyl dimension"))
}

/// Character of the irreducible module of highest weight `λ`, by
/// Freudenthal's multiplicity recursion over the saturated weight set.
pub fn freudenthal_char(rs: &RootSystem, lambda: &Weight) -> Result<CharacterOf<i64>> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let n = rs.rank();
    let simple: Vec<Weight> = (1..=n)
        .map(|i| rs.simple_root(i).unwrap().weight.clone())
        .collect();

    // saturated weight set, in layers of increasing depth below λ
    let mut layers: Vec<Vec<Weight>> = vec![vec![lambda.clone()]];
    let mut depth_of: HashMap<Weight, usize> = HashMap::from([(lambda.clone(), 0)]);
    loop {
        let d = layers.len();
        let mut next = Vec::new();
        for mu in &layers[d - 1] {
            for a in &simple {
                let nu = mu - a;
                if depth_of.contains_key(&nu) {
                    continue;
                }
                let dom = dominant_conjugate(rs, &nu);
                if rs.dominance_leq(&dom, lambda) {
                    depth_of.insert(nu.clone(), d);
                    next.push(nu);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }

    let pos: Vec<Weight> = rs.positive_roots().map(|r| r.weight.clone()).collect();
    let lr = lambda + rs.rho();
    let top = rs.inner(&lr, &lr);
    let mut mult: HashMap<Weight, i64> = HashMap::from([(lambda.clone(), 1)]);
    for layer in layers.iter().skip(1) {
        for mu in layer {
            let mr = mu + rs.rho();
            let denom = top - rs.inner(&mr, &mr);
            let mut acc = Rational::zero();
            for b in &pos {
                let mut k = 1;
                loop {
                    let up = mu.add_scaled(b, k);
                    match mult.get(&up) {
                        Some(&m) => acc += rs.inner(&up, b) * m,
                        None if depth_of.contains_key(&up) => {}
                        None => break,
                    }
                    k += 1;
                }
            }
            let m = acc * 2 / denom;
            if !m.is_integer() || m < Rational::zero() {
                return Err(Error::Invariant(format!(
                    "Freudenthal multiplicity {m} at {mu}"
                )));
            }
            let m = m.to_integer();
            if m != 0 {
                mult.insert(mu.clone(), m);
            }
        }
    }
    Ok(CharacterOf::from_terms(mult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Character;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn rw(r: &RootSystem, a: &[i64]) -> Weight {
        r.from_root_coords(a).unwrap()
    }

    #[test]
    fn string_formula_cases() {
        let a1 = rs("A1");
        let zero = Character::monomial(Weight::zero(1));
        assert_eq!(demazure_op(&a1, 1, &zero).unwrap(), zero);
        let minus_one = Character::monomial(Weight::new(vec![-1]));
        assert!(demazure_op(&a1, 1, &minus_one).unwrap().is_zero());
        let omega = Character::monomial(Weight::new(vec![1]));
        assert_eq!(
            demazure_op(&a1, 1, &omega).unwrap(),
            Character::from_terms([(Weight::new(vec![1]), 1), (Weight::new(vec![-1]), 1)])
        );
        let minus_two = Character::monomial(Weight::new(vec![-2]));
        assert_eq!(demazure_op(&a1, 1, &minus_two).unwrap(), -&zero);
    }

    #[test]
    fn a2_word_anchors() {
        let a2 = rs("A2");
        let word = Word::new(vec![2, 1]);
        let f = Character::monomial(rw(&a2, &[1, 1]));
        let expected = Character::from_terms(
            [[1, 1], [1, 0], [0, 1], [0, 0], [0, -1]]
                .iter()
                .map(|a| (rw(&a2, a), 1)),
        );
        assert_eq!(demazure_along_word(&a2, &word, &f).unwrap(), expected);

        let f = Character::monomial(rw(&a2, &[1, 0]));
        let expected =
            Character::from_terms([[0, 0], [-1, 0], [-1, -1]].iter().map(|a| (rw(&a2, a), 1)));
        assert_eq!(demazure_along_word(&a2, &word, &f).unwrap(), expected);
        assert_eq!(demazure_along_word(&a2, &Word::default(), &f).unwrap(), f);
    }

    #[test]
    fn adjoint_dimensions() {
        assert_eq!(adjoint_character::<i64>(&rs("A1")).dimension(), 3);
        let a2 = adjoint_character::<i64>(&rs("A2"));
        assert_eq!(a2.dimension(), 8);
        assert_eq!(a2.multiplicity(&Weight::zero(2)), 2);
        assert_eq!(adjoint_character::<i64>(&rs("G2")).dimension(), 14);
        assert_eq!(borel_character::<i64>(&rs("B2")).dimension(), 6);
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = rs("A2");
        assert_eq!(weyl_dim(&a2, &Weight::zero(2)).unwrap(), 1);
        assert_eq!(weyl_dim(&a2, &Weight::new(vec![1, 0])).unwrap(), 3);
        assert_eq!(weyl_dim(&a2, &Weight::new(vec![1, 1])).unwrap(), 8);
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&g2, &g2.highest_short_root().weight).unwrap(), 7);
        assert_eq!(weyl_dim(&g2, &g2.highest_root().weight).unwrap(), 14);
        assert_eq!(
            weyl_dim(&rs("E8"), &rs("E8").highest_root().weight).unwrap(),
            248
        );
        assert!(matches!(
            weyl_dim(&a2, &Weight::new(vec![-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_small_cases() {
        let a2 = rs("A2");
        assert_eq!(
            freudenthal_char(&a2, &Weight::zero(2)).unwrap(),
            Character::monomial(Weight::zero(2))
        );
        let v = freudenthal_char(&a2, &Weight::new(vec![1, 0])).unwrap();
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|(_, &m)| m == 1));
        assert_eq!(
            freudenthal_char(&a2, a2.rho()).unwrap(),
            adjoint_character(&a2)
        );
        let g2 = rs("G2");
        let seven = freudenthal_char(&g2, &g2.highest_short_root().weight).unwrap();
        assert_eq!(seven.dimension(), 7);
        assert_eq!(seven.multiplicity(&Weight::zero(2)), 1);
        assert!(freudenthal_char(&a2, &Weight::new(vec![0, -1])).is_err());
    }

    #[test]
    fn generic_coefficients_agree() {
        let b2 = rs("B2");
        let f64c = CharacterOf::<i64>::monomial(Weight::new(vec![2, 1]));
        let f128 = CharacterOf::<i128>::monomial(Weight::new(vec![2, 1]));
        let w0 = b2.longest_element();
        let a = demazure_along_word(&b2, w0.word(), &f64c).unwrap();
        let b = demazure_along_word(&b2, w0.word(), &f128).unwrap();
        assert_eq!(a.len(), b.len());
        for (w, c) in a.iter() {
            assert_eq!(i128::from(*c), b.multiplicity(w));
        }
    }

    #[test]
    fn render_is_canonical() {
        let a1 = rs("A1");
        let f = Character::from_terms([(Weight::new(vec![-2]), -1), (Weight::new(vec![2]), 2)]);
        assert_eq!(f.render(&a1), "2e(2) - e(-2)");
        assert_eq!(Character::zero().render(&a1), "0");
    }
}
