//! Finite irreducible crystallographic root systems with exact arithmetic.
//!
//! Simple roots follow Bourbaki numbering. Weights are carried in the
//! fundamental-weight basis, so `⟨λ, α_i∨⟩` is just the `i`-th coordinate;
//! root coordinates (the simple-root basis) come from the exact rational
//! inverse of the Cartan matrix.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A Dynkin type such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Order of the Weyl group, from the classical closed forms.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Symmetrized Gram matrix `(α_i, α_j)` in the simple-root basis,
    /// normalized so that short roots have squared length 2.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let mut link = |i: usize, j: usize, v: i64| {
            g[i - 1][j - 1] = v;
            g[j - 1][i - 1] = v;
        };
        match self.family {
            Family::A => {
                for i in 1..n {
                    link(i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 1..n - 1 {
                    link(i, i + 1, -2);
                }
                link(n - 1, n, -2);
            }
            Family::C => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1);
                }
                link(n - 1, n, -2);
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1);
                }
                link(n - 2, n, -1);
            }
            Family::E => {
                for &(i, j) in &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
                    if i <= n && j <= n {
                        link(i, j, -1);
                    }
                }
            }
            Family::F => {
                link(1, 2, -2);
                link(2, 3, -2);
                link(3, 4, -1);
            }
            Family::G => link(1, 2, -3),
        }
        for (i, row) in g.iter_mut().enumerate() {
            let long = match self.family {
                Family::B => i + 1 < n,
                Family::C => i + 1 == n,
                Family::F => i < 2,
                _ => false,
            };
            row[i] = match (self.family, long) {
                (Family::G, _) if i == 1 => 6,
                (_, true) => 4,
                _ => 2,
            };
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(fw_coords: Vec<i64>) -> Self {
        Weight(fw_coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// `self + k·other`, the workhorse of every string computation.
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + k * b)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub root_coords: Vec<i64>,
    /// Coordinates of `β∨` in the basis of simple coroots.
    pub coroot_coords: Vec<i64>,
    pub positive: bool,
    pub height: i64,
    pub long: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Rational>>,
    fw_gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    index: HashMap<Weight, usize>,
    simple: Vec<usize>,
    rho: Weight,
    fundamental: Vec<Weight>,
    highest_root: usize,
    highest_short_root: usize,
}

impl RootSystem {
    /// Builds the full root system by closing the simple roots under the
    /// simple reflections.
    pub fn build(ct: CartanType) -> Result<Self> {
        let ct = CartanType::new(ct.family, ct.rank)?;
        let n = ct.rank;
        let gram = ct.gram();
        // C[i][j] = ⟨α_j, α_i∨⟩ = 2(α_j, α_i)/(α_i, α_i)
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let inv_cartan = invert(&cartan)
            .ok_or_else(|| Error::Invariant(format!("Cartan matrix of {ct} is singular")))?;
        let fw_gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for a in 0..n {
                            for b in 0..n {
                                acc += inv_cartan[a][i] * inv_cartan[b][j] * gram[a][b];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();

        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let m: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= m;
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), ());
                    queue.push_back(s);
                }
            }
        }

        let norm = |a: &[i64]| -> i64 {
            (0..n)
                .map(|i| (0..n).map(|j| a[i] * gram[i][j] * a[j]).sum::<i64>())
                .sum()
        };
        let mut coords: Vec<Vec<i64>> = seen.into_keys().collect();
        for c in &coords {
            if !(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0)) {
                return Err(Error::Invariant(format!("mixed-sign root {c:?}")));
            }
        }
        coords.sort_by(|a, b| {
            let pa = a.iter().any(|&x| x > 0);
            let pb = b.iter().any(|&x| x > 0);
            let ha: i64 = a.iter().sum::<i64>().abs();
            let hb: i64 = b.iter().sum::<i64>().abs();
            pb.cmp(&pa).then(ha.cmp(&hb)).then_with(|| {
                let ka: Vec<i64> = a.iter().map(|x| x.abs()).collect();
                let kb: Vec<i64> = b.iter().map(|x| x.abs()).collect();
                kb.cmp(&ka)
            })
        });
        let max_norm = coords.iter().map(|c| norm(c)).max().unwrap_or(2);

        let mut roots = Vec::with_capacity(coords.len());
        let mut index = HashMap::new();
        for a in coords {
            let fw: Vec<i64> = (0..n)
                .map(|i| (0..n).map(|j| cartan[i][j] * a[j]).sum())
                .collect();
            let nm = norm(&a);
            let coroot_coords = (0..n)
                .map(|i| {
                    let num = a[i] * gram[i][i];
                    if num % nm != 0 {
                        Err(Error::Invariant(format!("non-integral coroot for {a:?}")))
                    } else {
                        Ok(num / nm)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let weight = Weight(fw);
            index.insert(weight.clone(), roots.len());
            roots.push(Root {
                weight,
                positive: a.iter().any(|&x| x > 0),
                height: a.iter().sum(),
                long: nm == max_norm,
                root_coords: a,
                coroot_coords,
            });
        }

        let simple = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                roots
                    .iter()
                    .position(|r| r.root_coords == e)
                    .expect("simple root present")
            })
            .collect();
        let highest_root = (0..roots.len())
            .filter(|&k| roots[k].positive)
            .max_by_key(|&k| roots[k].height)
            .expect("nonempty root system");
        let highest_short_root = (0..roots.len())
            .filter(|&k| roots[k].positive && (ct.is_simply_laced() || !roots[k].long))
            .max_by_key(|&k| roots[k].height)
            .expect("short roots exist");

        let fundamental = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                Weight(e)
            })
            .collect();

        Ok(Self {
            cartan_type: ct,
            cartan,
            gram,
            inv_cartan,
            fw_gram,
            roots,
            index,
            simple,
            rho: Weight(vec![1; n]),
            fundamental,
            highest_root,
            highest_short_root,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan_type.is_simply_laced()
    }

    /// `C[i][j] = ⟨α_j, α_i∨⟩`, 0-based.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetric form on the simple-root basis (short roots have norm 2).
    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// All roots: positive roots first, by increasing height.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    /// Simple root `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        self.check_index(i)?;
        Ok(&self.roots[self.simple[i - 1]])
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    /// `ω_i`, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> Result<&Weight> {
        self.check_index(i)?;
        Ok(&self.fundamental[i - 1])
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest_root]
    }

    pub fn highest_short_root(&self) -> &Root {
        &self.roots[self.highest_short_root]
    }

    pub fn root(&self, w: &Weight) -> Option<&Root> {
        self.index.get(w).map(|&k| &self.roots[k])
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.index.contains_key(w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.root(w).is_some_and(|r| r.positive)
    }

    pub fn is_negative_root(&self, w: &Weight) -> bool {
        self.root(w).is_some_and(|r| !r.positive)
    }

    /// 1-based index `i` when `w = α_i`.
    pub fn simple_index(&self, w: &Weight) -> Option<usize> {
        let k = *self.index.get(w)?;
        self.simple.iter().position(|&s| s == k).map(|p| p + 1)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `⟨λ, α_i∨⟩` for a simple root, 1-based.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        Ok(lambda.0[i - 1])
    }

    /// `⟨λ, β∨⟩` for an arbitrary root `β`.
    pub fn pairing_root(&self, lambda: &Weight, beta: &Root) -> i64 {
        lambda
            .0
            .iter()
            .zip(&beta.coroot_coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `s_α(λ) = λ − ⟨λ, α∨⟩ α`.
    pub fn reflect(&self, lambda: &Weight, alpha: &Weight) -> Result<Weight> {
        self.check_weight(lambda)?;
        let root = self
            .root(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        Ok(lambda.add_scaled(&root.weight, -self.pairing_root(lambda, root)))
    }

    /// Simple reflection `s_i(λ)`, 1-based, without validation.
    pub(crate) fn reflect_simple(&self, lambda: &Weight, i: usize) -> Weight {
        let m = lambda.0[i - 1];
        let alpha = &self.roots[self.simple[i - 1]].weight;
        lambda.add_scaled(alpha, -m)
    }

    /// Simple-root coordinates of a weight (exact, possibly fractional).
    pub fn root_coords(&self, w: &Weight) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.inv_cartan[i][j] * w.0[j]).sum())
            .collect()
    }

    /// The weight with the given integral simple-root coordinates.
    pub fn from_root_coords(&self, a: &[i64]) -> Result<Weight> {
        let n = self.rank();
        if a.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.len(),
            });
        }
        Ok(Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * a[j]).sum())
                .collect(),
        ))
    }

    /// Height `Σ` of the simple-root coordinates.
    pub fn height(&self, w: &Weight) -> Rational {
        self.root_coords(w).into_iter().sum()
    }

    /// `μ ≤ λ` in the dominance order: `λ − μ` is a nonnegative integral
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        if mu.rank() != self.rank() || lambda.rank() != self.rank() {
            return false;
        }
        self.root_coords(&(lambda - mu))
            .iter()
            .all(|c| c.is_integer() && *c >= Rational::zero())
    }

    /// W-invariant form `(λ, μ)` (short roots have norm 2).
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += self.fw_gram[i][j] * (a.0[i] * b.0[j]);
            }
        }
        acc
    }

    /// Roots `β ≠ ±α_i` whose pairing with a simple coroot falls outside
    /// `{−1, 0, 1}`. Empty for every simply-laced type.
    pub fn pairing_violations(&self) -> Vec<(usize, Weight, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            let alpha = &self.roots[self.simple[i - 1]].weight;
            for beta in &self.roots {
                if &beta.weight == alpha || beta.weight == -alpha {
                    continue;
                }
                let p = beta.weight.0[i - 1];
                if !(-1..=1).contains(&p) {
                    out.push((i, beta.weight.clone(), p));
                }
            }
        }
        out
    }

    /// Renders simple-root coordinates, e.g. `[1,2]` or `[2/3,1/3]`.
    pub fn format_root_coords(&self, w: &Weight) -> String {
        let parts: Vec<String> = self
            .root_coords(w)
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_string()
                } else {
                    c.to_string()
                }
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}

/// Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}
