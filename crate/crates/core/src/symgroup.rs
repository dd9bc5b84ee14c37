//! Symmetric groups, compositions and coset representatives.
//!
//! Permutations act on `{1, …, n}` from the left and are written in
//! one-line notation; products are composition of maps, `(uv)(i) = u(v(i))`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which full group tables are built.
pub const MAX_TABLE_N: usize = 8;

/// Permutation in one-line notation, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Self {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// `s_i w` (swaps the values `i` and `i+1`).
    pub fn left_s(&self, i: usize) -> Self {
        let (x, y) = ((i - 1) as u8, i as u8);
        Perm(
            self.0
                .iter()
                .map(|&v| {
                    if v == x {
                        y
                    } else if v == y {
                        x
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `w s_i` (swaps the positions `i` and `i+1`).
    pub fn right_s(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).unwrap();
        pos((i - 1) as u8) > pos(i as u8)
    }

    /// Reduced word `[i₁,…,i_k]` with `w = s_{i₁}⋯s_{i_k}`, obtained by
    /// repeatedly stripping the largest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.n()).rev().find(|&i| w.has_right_descent(i)) {
            w = w.right_s(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Perm::identity(n), |w, &i| w.right_s(i))
    }

    /// Images as 0-based values.
    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn num_nonzero(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Partition whose nonzero parts strictly decrease.
    pub fn is_strict_partition(&self) -> bool {
        self.is_partition() && self.0.windows(2).all(|w| w[0] > w[1] || w[1] == 0)
    }

    pub fn without_zeros(&self) -> Self {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn sorted_partition(&self) -> Self {
        let mut v = self.without_zeros().0;
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    /// `(start, end)` 1-based inclusive position ranges of each part; empty
    /// parts give `start = end + 1`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len());
        let mut s = 1;
        for &p in &self.0 {
            out.push((s, s + p - 1));
            s += p;
        }
        out
    }

    /// Block index (0-based) of each position `1..=n`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (k, &p) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(k).take(p));
        }
        out
    }

    /// Generators `s_i` of the Young subgroup `S_λ`.
    pub fn young_generators(&self) -> Vec<usize> {
        let b = self.block_of();
        (1..self.size()).filter(|&i| b[i - 1] == b[i]).collect()
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// Dominance `self ⊴ other` (shorter sequences padded with zeros).
    pub fn dominated_by(&self, other: &Composition) -> bool {
        let len = self.len().max(other.len());
        self.size() == other.size() && self.partial_sums(len).iter().zip(other.partial_sums(len)).all(|(a, b)| *a <= b)
    }

    /// Strict dominance `self ◁ other`.
    pub fn strictly_dominated_by(&self, other: &Composition) -> bool {
        self.dominated_by(other) && !other.dominated_by(self)
    }

    /// Longest element of `D_λ`: block `k` is sent, in order, to the
    /// positions occupied by block `k` when the blocks are stacked in
    /// reverse.
    pub fn longest_rep(&self) -> Perm {
        let n = self.size();
        let mut img = vec![0u8; n];
        for (k, &(s, e)) in self.blocks().iter().enumerate() {
            let below: usize = self.0[k + 1..].iter().sum();
            for i in s..=e {
                img[i - 1] = (below + i - s) as u8;
            }
        }
        Perm(img)
    }

    pub fn concat(&self, other: &Composition) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All compositions of `n` with positive parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=n {
            cur.push(p);
            rec(n - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: usize) -> Vec<Composition> {
    partitions(n).into_iter().filter(|p| p.is_strict_partition()).collect()
}

/// Lookup tables for `S_n`; elements are indexed by lexicographic rank of
/// their one-line notation.
#[derive(Debug)]
pub struct SymGroup {
    n: usize,
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    length: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
}

impl SymGroup {
    /// Shared table for `S_n`.
    pub fn get(n: usize) -> Arc<SymGroup> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
        assert!(n <= MAX_TABLE_N, "symmetric group tables are limited to n <= {MAX_TABLE_N}");
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&n) {
            return g.clone();
        }
        let g = Arc::new(Self::build(n));
        cache.lock().unwrap().entry(n).or_insert(g).clone()
    }

    fn build(n: usize) -> Self {
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            perms.push(Perm(cur.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        let index: HashMap<Perm, u32> = perms.iter().enumerate().map(|(k, p)| (p.clone(), k as u32)).collect();
        let g = n.saturating_sub(1);
        let mut left = Vec::with_capacity(perms.len() * g);
        let mut right = Vec::with_capacity(perms.len() * g);
        for p in &perms {
            for i in 1..n {
                left.push(index[&p.left_s(i)]);
                right.push(index[&p.right_s(i)]);
            }
        }
        let length = perms.iter().map(|p| p.length() as u32).collect();
        let inverse = perms.iter().map(|p| index[&p.inverse()]).collect();
        SymGroup { n, perms, index, length, left, right, inverse }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, k: u32) -> &Perm {
        &self.perms[k as usize]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn index(&self, p: &Perm) -> u32 {
        self.index[p]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn length(&self, k: u32) -> u32 {
        self.length[k as usize]
    }

    /// Index of `s_i w`.
    pub fn left_s(&self, k: u32, i: usize) -> u32 {
        self.left[k as usize * (self.n - 1) + i - 1]
    }

    /// Index of `w s_i`.
    pub fn right_s(&self, k: u32, i: usize) -> u32 {
        self.right[k as usize * (self.n - 1) + i - 1]
    }

    pub fn inverse(&self, k: u32) -> u32 {
        self.inverse[k as usize]
    }

    pub fn compose(&self, u: u32, v: u32) -> u32 {
        self.index[&self.perm(u).compose(self.perm(v))]
    }

    /// Elements of the Young subgroup `S_λ`.
    pub fn young_subgroup(&self, lambda: &Composition) -> Vec<u32> {
        let b = lambda.block_of();
        (0..self.order() as u32).filter(|&k| self.perm(k).raw().iter().enumerate().all(|(i, &v)| b[i] == b[v as usize])).collect()
    }

    /// `D_λ`: minimal length representatives of the left cosets `w S_λ`.
    pub fn min_left_coset_reps(&self, lambda: &Composition) -> Vec<u32> {
        let gens = lambda.young_generators();
        (0..self.order() as u32).filter(|&k| gens.iter().all(|&i| !self.perm(k).has_right_descent(i))).collect()
    }

    /// `D_λ⁻¹`: minimal length representatives of the right cosets `S_λ w`.
    pub fn min_right_coset_reps(&self, lambda: &Composition) -> Vec<u32> {
        let gens = lambda.young_generators();
        (0..self.order() as u32).filter(|&k| gens.iter().all(|&i| !self.perm(k).has_left_descent(i))).collect()
    }

    /// `D_λ ∩ D_μ⁻¹`: minimal representatives of the double cosets `S_μ w S_λ`.
    pub fn min_double_coset_reps(&self, lambda: &Composition, mu: &Composition) -> Vec<u32> {
        let gl = lambda.young_generators();
        let gm = mu.young_generators();
        (0..self.order() as u32)
            .filter(|&k| {
                let p = self.perm(k);
                gl.iter().all(|&i| !p.has_right_descent(i)) && gm.iter().all(|&i| !p.has_left_descent(i))
            })
            .collect()
    }
}
