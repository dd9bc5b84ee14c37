//! Tableaux of composition shape: row-semistandard, standard, circled and
//! shifted-semistandard circled, with the combinatorial maps between them.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symgroup::{Composition, Perm};

/// Nonnegative integer matrices with prescribed row and column sums, in
/// lexicographic order.
pub fn integer_matrices(row_sums: &[usize], col_sums: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rows_rec(rs: &[usize], cols: &mut Vec<usize>, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&r, rest)) = rs.split_first() else {
            if cols.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        };
        let mut row = vec![0; cols.len()];
        fill(r, 0, rest, cols, &mut row, cur, out);
    }
    fn fill(
        left: usize,
        j: usize,
        rest: &[usize],
        cols: &mut Vec<usize>,
        row: &mut Vec<usize>,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if j == cols.len() {
            if left == 0 {
                cur.push(row.clone());
                rows_rec(rest, cols, cur, out);
                cur.pop();
            }
            return;
        }
        let tail: usize = cols[j + 1..].iter().sum();
        let lo = left.saturating_sub(tail);
        for k in (lo..=left.min(cols[j])).rev() {
            row[j] = k;
            cols[j] -= k;
            fill(left - k, j + 1, rest, cols, row, cur, out);
            cols[j] += k;
        }
        row[j] = 0;
    }
    let mut out = Vec::new();
    rows_rec(row_sums, &mut col_sums.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn parse_rows(s: &str) -> Result<Vec<Vec<(usize, bool)>>> {
    let mut rows = Vec::new();
    for row in s.trim().split('/') {
        let row = row.trim();
        let mut entries = Vec::new();
        if row.contains([' ', ',']) {
            for tok in row.split([' ', ',']).filter(|t| !t.is_empty()) {
                let (t, c) = match tok.strip_suffix(['\'', '*']) {
                    Some(t) => (t, true),
                    None => (tok, false),
                };
                let v = t.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad entry {tok:?}")))?;
                entries.push((v, c));
            }
        } else {
            for ch in row.chars() {
                match ch {
                    '0'..='9' => entries.push((ch as usize - '0' as usize, false)),
                    '\'' | '*' => match entries.last_mut() {
                        Some(e) => e.1 = true,
                        None => return Err(Error::InvalidInput(format!("dangling circle in {row:?}"))),
                    },
                    '①'..='⑨' => entries.push((ch as usize - '①' as usize + 1, true)),
                    _ => return Err(Error::InvalidInput(format!("bad character {ch:?} in tableau"))),
                }
            }
        }
        if entries.iter().any(|e| e.0 == 0) {
            return Err(Error::InvalidInput("tableau entries start at 1".into()));
        }
        rows.push(entries);
    }
    Ok(rows)
}

/// A filling of a composition-shaped diagram by positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows: rows.into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect() }
    }

    /// Parses `"1123/144/3"`; rows may instead be space-separated numbers.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        if rows.iter().flatten().any(|e| e.1) {
            return Err(Error::InvalidInput("unexpected circled entry".into()));
        }
        Ok(Tableau::new(rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect()))
    }

    /// Builds the tableau with the given counts `#_{ij}` of entry `j` in row `i`.
    pub fn from_counts(counts: &[Vec<usize>]) -> Self {
        Tableau {
            rows: counts
                .iter()
                .map(|row| row.iter().enumerate().flat_map(|(j, &k)| std::iter::repeat((j + 1) as u8).take(k)).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j] as usize
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0) as usize
    }

    /// `(#_{ij})` with `cols` columns.
    pub fn counts(&self, cols: usize) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| {
                let mut c = vec![0; cols];
                for &x in r {
                    c[x as usize - 1] += 1;
                }
                c
            })
            .collect()
    }

    /// Weight as a composition of length `len`.
    pub fn weight(&self, len: usize) -> Composition {
        let mut w = vec![0; len];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        Composition::new(w)
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().map(|&x| x as usize).collect()
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Row-standard: entries are `1..=n` each once, increasing along rows.
    pub fn is_row_standard(&self) -> bool {
        let mut seen = vec![false; self.size()];
        for &x in self.rows.iter().flatten() {
            let x = x as usize;
            if x == 0 || x > seen.len() || seen[x - 1] {
                return false;
            }
            seen[x - 1] = true;
        }
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Partition shape, weakly increasing rows and strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        self.shape().is_partition()
            && self.is_row_semistandard()
            && (1..self.rows.len()).all(|i| (0..self.rows[i].len()).all(|j| self.rows[i - 1][j] < self.rows[i][j]))
    }

    /// Every entry in row `i` is at least `i`.
    pub fn is_good(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.iter().all(|&x| x as usize > i))
    }

    /// Row (0-based) containing each value, for a row-standard tableau.
    pub fn row_of_values(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, r) in self.rows.iter().enumerate() {
            for &x in r {
                out[x as usize - 1] = i;
            }
        }
        out
    }

    /// `d(T)`: the permutation whose one-line notation is the reading word.
    pub fn perm(&self) -> Perm {
        Perm::from_one_line(&self.reading_word()).expect("d(T) needs a tableau with entries 1..n")
    }

    /// `w · T^λ`: the rows of `λ` filled by the images of consecutive positions.
    pub fn from_perm(w: &Perm, shape: &Composition) -> Self {
        Tableau::new(shape.blocks().iter().map(|&(s, e)| (s..=e).map(|i| w.apply(i)).collect()).collect())
    }

    /// Applies `w` to the entries and re-sorts each row.
    pub fn act(&self, w: &Perm) -> Self {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    let mut v: Vec<u8> = r.iter().map(|&x| w.apply(x as usize) as u8).collect();
                    v.sort_unstable();
                    v
                })
                .collect(),
        }
    }

    /// `S_↓`: equal entries become consecutive labels in reading order.
    pub fn down(&self, weight: &Composition) -> Self {
        let mut next: Vec<usize> = weight.blocks().iter().map(|b| b.0).collect();
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| {
                            let k = &mut next[x as usize - 1];
                            *k += 1;
                            (*k - 1) as u8
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// `S^↑`: equal entries are labelled from the bottom row upwards.
    pub fn up(&self, weight: &Composition) -> Self {
        let mut next: Vec<usize> = weight.blocks().iter().map(|b| b.0).collect();
        let mut rows: Vec<Vec<u8>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for i in (0..self.rows.len()).rev() {
            for (j, &x) in self.rows[i].iter().enumerate() {
                let k = &mut next[x as usize - 1];
                rows[i][j] = *k as u8;
                *k += 1;
            }
        }
        Tableau { rows }
    }

    /// `T|_μ`: each entry is replaced by the index of the part of `μ`
    /// (viewed as a coarsening of the current weight) containing it.
    pub fn restrict(&self, groups: &[usize]) -> Self {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    let mut v: Vec<u8> = r.iter().map(|&x| groups[x as usize - 1] as u8 + 1).collect();
                    v.sort_unstable();
                    v
                })
                .collect(),
        }
    }

    /// `T|_μ` for a row-standard tableau and a composition `μ`.
    pub fn restrict_to(&self, mu: &Composition) -> Self {
        self.restrict(&mu.block_of())
    }

    /// The dual tableau: `#_{ij}(S*) = #_{ji}(S)`; `cols` is the weight length.
    pub fn dual(&self, cols: usize) -> Self {
        let c = self.counts(cols);
        let t: Vec<Vec<usize>> = (0..cols).map(|j| c.iter().map(|row| row[j]).collect()).collect();
        Tableau::from_counts(&t)
    }

    /// `P_{w,ν}`: row `i` holds `ν_{w(i)}` copies of `w(i)`.
    pub fn permutation_tableau(w: &Perm, nu: &Composition) -> Self {
        Tableau::new((1..=w.n()).map(|i| vec![w.apply(i); nu.part(w.apply(i) - 1)]).collect())
    }

    /// `ℓ(T) = ℓ(d(T))` for a row-standard tableau.
    pub fn length(&self) -> usize {
        self.perm().length()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                v.join(if wide { " " } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// `Tab_{λ;μ}`: row-semistandard tableaux of shape `λ` and weight `μ`.
pub fn row_semistandard(lambda: &Composition, mu: &Composition) -> Vec<Tableau> {
    if lambda.size() != mu.size() {
        return Vec::new();
    }
    integer_matrices(lambda.parts(), mu.parts()).iter().map(|m| Tableau::from_counts(m)).collect()
}

/// `Tab_λ`: row-standard tableaux of shape `λ`.
pub fn row_standard(lambda: &Composition) -> Vec<Tableau> {
    let ones = Composition::new(vec![1; lambda.size()]);
    row_semistandard(lambda, &ones)
}

/// `STab_{λ;μ}`: semistandard tableaux.
pub fn semistandard(lambda: &Composition, mu: &Composition) -> Vec<Tableau> {
    if !lambda.is_partition() {
        return Vec::new();
    }
    row_semistandard(lambda, mu).into_iter().filter(|t| t.is_semistandard()).collect()
}

/// All `T ∈ Tab_{λ;ν}` with `T|_μ = S`, where `ν` refines `μ` via `groups`
/// (the `μ`-part of each `ν`-part).
pub fn lifts(s: &Tableau, mu_len: usize, nu: &Composition, groups: &[usize]) -> Vec<Tableau> {
    let sc = s.counts(mu_len);
    let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![vec![0; nu.len()]; s.num_rows()]];
    for g in 0..mu_len {
        let members: Vec<usize> = (0..nu.len()).filter(|&j| groups[j] == g).collect();
        let rows: Vec<usize> = sc.iter().map(|r| r[g]).collect();
        let cols: Vec<usize> = members.iter().map(|&j| nu.part(j)).collect();
        let choices = integer_matrices(&rows, &cols);
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for base in &acc {
            for ch in &choices {
                let mut m = base.clone();
                for (i, row) in ch.iter().enumerate() {
                    for (k, &j) in members.iter().enumerate() {
                        m[i][j] = row[k];
                    }
                }
                next.push(m);
            }
        }
        acc = next;
    }
    acc.iter().map(|m| Tableau::from_counts(m)).collect()
}

/// `Tab_S`: row-standard tableaux restricting to `S ∈ Tab_{λ;μ}`.
pub fn standard_lifts(s: &Tableau, mu: &Composition) -> Vec<Tableau> {
    let ones = Composition::new(vec![1; mu.size()]);
    lifts(s, mu.len(), &ones, &mu.block_of())
}

/// The canonical decomposition of `S ∈ Tab_{λ;μ}`: returns `(ν, w)` with
/// `ν` listing the nonzero `#_{ij}(S)` column by column and `wν` listing
/// them row by row.
pub fn canonical_decomposition(s: &Tableau, mu_len: usize) -> (Composition, Perm) {
    let c = s.counts(mu_len);
    let mut col_major = Vec::new();
    for j in 0..mu_len {
        for (i, row) in c.iter().enumerate() {
            if row[j] > 0 {
                col_major.push((i, j));
            }
        }
    }
    let nu = Composition::new(col_major.iter().map(|&(i, j)| c[i][j]).collect());
    let mut row_major = col_major.clone();
    row_major.sort();
    let images: Vec<usize> = row_major.iter().map(|cell| col_major.iter().position(|x| x == cell).unwrap() + 1).collect();
    (nu, Perm::from_one_line(&images).expect("canonical decomposition permutation"))
}

/// `Tab_{λ;μ}` restricted to good tableaux.
pub fn good(lambda: &Composition, mu: &Composition) -> Vec<Tableau> {
    row_semistandard(lambda, mu).into_iter().filter(|t| t.is_good()).collect()
}

/// If `ν` refines `μ`, the index of the `μ`-block containing each part of
/// `ν` (zero parts join the block in progress).
pub fn refinement_groups(nu: &Composition, mu: &Composition) -> Option<Vec<usize>> {
    if nu.size() != mu.size() {
        return None;
    }
    let mu = mu.parts();
    let (mut i, mut acc) = (0, 0);
    let mut groups = Vec::with_capacity(nu.len());
    for &p in nu.parts() {
        while p > 0 && i < mu.len() && acc == mu[i] {
            i += 1;
            acc = 0;
        }
        if i == mu.len() {
            if p > 0 || mu.is_empty() {
                return None;
            }
            groups.push(mu.len() - 1);
            continue;
        }
        acc += p;
        if acc > mu[i] {
            return None;
        }
        groups.push(i);
    }
    Some(groups)
}

pub fn is_refinement(nu: &Composition, mu: &Composition) -> bool {
    refinement_groups(nu, mu).is_some()
}

/// `(#Tab_{λ;μ}, Σ_ν #STab_{ν;λ}·#STab_{ν;μ})` over partitions `ν`.
pub fn rsk_count_identity(lambda: &Composition, mu: &Composition) -> (usize, usize) {
    let lhs = row_semistandard(lambda, mu).len();
    let rhs = crate::symgroup::partitions(lambda.size()).iter().map(|nu| semistandard(nu, lambda).len() * semistandard(nu, mu).len()).sum();
    (lhs, rhs)
}

/// `(#Tab^c_{λ;μ}, Σ_ν #STab^c_{ν;λ}·#STab^{c′}_{ν;μ})` over strict partitions `ν`.
pub fn shifted_knuth_count_identity(lambda: &Composition, mu: &Composition) -> (usize, usize) {
    let lhs = circled_row_semistandard(lambda, mu).len();
    let rhs = crate::symgroup::strict_partitions(lambda.size())
        .iter()
        .map(|nu| shifted_semistandard(nu, lambda).len() * reduced_shifted_semistandard(nu, mu).len())
        .sum();
    (lhs, rhs)
}

/// An entry of a circled tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Entry {
    pub value: u8,
    pub circled: bool,
}

impl Entry {
    /// Position in the order `1 < ① < 2 < ② < …`.
    fn key(self) -> u16 {
        2 * self.value as u16 + self.circled as u16
    }
}

/// A tableau whose entries may carry circles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircledTableau {
    rows: Vec<Vec<Entry>>,
}

impl CircledTableau {
    pub fn new(rows: Vec<Vec<Entry>>) -> Self {
        CircledTableau { rows }
    }

    /// Parses `"1 1' 2 3'/1 5 5'/4'"` or the compact `"11'23'/155'/4'"`;
    /// a `'` (or `*`) circles the preceding entry.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(CircledTableau {
            rows: parse_rows(s)?.into_iter().map(|r| r.into_iter().map(|(v, c)| Entry { value: v as u8, circled: c }).collect()).collect(),
        })
    }

    /// Circles the boxes listed by 0-based reading position.
    pub fn from_underlying(t: &Tableau, circled_positions: &[usize]) -> Self {
        let mut k = 0;
        let rows = t
            .rows()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        let e = Entry { value: v, circled: circled_positions.contains(&k) };
                        k += 1;
                        e
                    })
                    .collect()
            })
            .collect();
        CircledTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn underlying(&self) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|e| e.value).collect()).collect() }
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    /// 0-based reading positions of circled boxes.
    pub fn circled_positions(&self) -> Vec<usize> {
        self.rows.iter().flatten().enumerate().filter(|(_, e)| e.circled).map(|(k, _)| k).collect()
    }

    pub fn num_circles(&self) -> usize {
        self.rows.iter().flatten().filter(|e| e.circled).count()
    }

    /// Underlying tableau row-semistandard, and every circle at the right
    /// end of its bar of equal entries.
    pub fn is_row_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0].key() <= w[1].key() && !(w[0].circled && w[0].value == w[1].value)))
    }

    /// Row-semistandard, strict partition shape, semistandard underlying
    /// tableau, and weakly increasing along each anti-diagonal
    /// `(k, l+1) → (k+1, l)` with equal values only when the lower entry is
    /// circled.
    pub fn is_shifted_semistandard(&self) -> bool {
        if !self.shape().is_strict_partition() || !self.is_row_semistandard() || !self.underlying().is_semistandard() {
            return false;
        }
        for k in 0..self.rows.len().saturating_sub(1) {
            for l in 0..self.rows[k + 1].len() {
                if let Some(&top) = self.rows[k].get(l + 1) {
                    let bot = self.rows[k + 1][l];
                    if top.value > bot.value || (top.value == bot.value && !bot.circled) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The restricted class `STab^{c′}`: in each strip of equal entries that
    /// starts in the first column, the north-east end is uncircled.
    pub fn is_reduced_shifted_semistandard(&self) -> bool {
        if !self.is_shifted_semistandard() {
            return false;
        }
        for k in 0..self.rows.len() {
            let Some(first) = self.rows[k].first() else { continue };
            let v = first.value;
            let (mut r, mut c) = (k, 0);
            loop {
                if self.rows[r].get(c + 1).is_some_and(|e| e.value == v) {
                    c += 1;
                } else if r > 0 && self.rows[r - 1].get(c + 1).is_some_and(|e| e.value == v) {
                    r -= 1;
                    c += 1;
                } else {
                    break;
                }
            }
            if self.rows[r][c].circled {
                return false;
            }
        }
        true
    }

    /// Bars `(row, start, end)` (0-based, inclusive) of equal entries.
    pub fn bars(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut s = 0;
            for j in 0..r.len() {
                if j + 1 == r.len() || r[j + 1].value != r[j].value {
                    out.push((i, s, j));
                    s = j + 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for CircledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|e| format!("{}{}", e.value, if e.circled { "'" } else { "" })).collect();
                v.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for CircledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Entry", 2)?;
        st.serialize_field("v", &self.value)?;
        st.serialize_field("c", &self.circled)?;
        st.end()
    }
}

impl Serialize for CircledTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// `Tab^c_{λ;μ}`: row-semistandard circled tableaux (each bar circled or not).
pub fn circled_row_semistandard(lambda: &Composition, mu: &Composition) -> Vec<CircledTableau> {
    let mut out = Vec::new();
    for t in row_semistandard(lambda, mu) {
        let base = CircledTableau::from_underlying(&t, &[]);
        let bars = base.bars();
        for mask in 0u64..(1 << bars.len()) {
            let mut c = base.clone();
            for (b, &(i, _, e)) in bars.iter().enumerate() {
                c.rows[i][e].circled = mask >> b & 1 == 1;
            }
            out.push(c);
        }
    }
    out
}

/// `Tab^c_λ`: row-standard circled tableaux.
pub fn circled_row_standard(lambda: &Composition) -> Vec<CircledTableau> {
    circled_row_semistandard(lambda, &Composition::new(vec![1; lambda.size()]))
}

/// `STab^c_{λ;μ}`.
pub fn shifted_semistandard(lambda: &Composition, mu: &Composition) -> Vec<CircledTableau> {
    if !lambda.is_strict_partition() {
        return Vec::new();
    }
    circled_row_semistandard(lambda, mu).into_iter().filter(|t| t.is_shifted_semistandard()).collect()
}

/// `STab^{c′}_{λ;μ}`.
pub fn reduced_shifted_semistandard(lambda: &Composition, mu: &Composition) -> Vec<CircledTableau> {
    shifted_semistandard(lambda, mu).into_iter().filter(|t| t.is_reduced_shifted_semistandard()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn t(s: &str) -> Tableau {
        Tableau::parse(s).unwrap()
    }

    #[test]
    fn reading_permutation() {
        let d = t("1245/378/6").perm();
        assert_eq!(d.one_line(), vec![1, 2, 4, 5, 3, 7, 8, 6]);
        assert_eq!(d.reduced_word(), vec![3, 4, 6, 7]);
    }

    #[test]
    fn down_up_and_dual() {
        let s = t("1123/144/3");
        let mu = c(&[3, 1, 2, 2]);
        assert_eq!(s.weight(4), mu);
        assert_eq!(s.down(&mu), t("1245/378/6"));
        assert_eq!(s.up(&mu), t("2346/178/5"));
        assert_eq!(s.dual(4), t("112/1/13/22"));
        assert_eq!(s.down(&mu).restrict_to(&mu), s);
    }

    #[test]
    fn standard_lifts_of_example() {
        let s = t("1123/144/3");
        let mu = c(&[3, 1, 2, 2]);
        let mut lifts: Vec<String> = standard_lifts(&s, &mu).iter().map(|x| x.to_string()).collect();
        lifts.sort();
        let mut expected = vec!["1245/378/6", "1345/278/6", "2345/178/6", "1246/378/5", "1346/278/5", "2346/178/5"];
        expected.sort();
        assert_eq!(lifts, expected);
        let lens: Vec<usize> = standard_lifts(&s, &mu).iter().map(|x| x.length()).collect();
        assert_eq!(*lens.iter().min().unwrap(), s.down(&mu).length());
        assert_eq!(*lens.iter().max().unwrap(), s.up(&mu).length());
    }

    #[test]
    fn small_tab_set() {
        let mut v: Vec<String> = row_semistandard(&c(&[2, 3]), &c(&[3, 1, 0, 1])).iter().map(|x| x.to_string()).collect();
        v.sort();
        assert_eq!(v, vec!["11/124", "12/114", "14/112", "24/111"]);
    }

    #[test]
    fn canonical_decomposition_example() {
        let s = t("22333/1111/133");
        let (nu, w) = canonical_decomposition(&s, 3);
        assert_eq!(nu, c(&[4, 1, 2, 3, 2]));
        let wnu = Composition::new((1..=5).map(|i| nu.part(w.apply(i) - 1)).collect());
        assert_eq!(wnu, c(&[2, 3, 4, 1, 2]));
        assert_eq!(Tableau::permutation_tableau(&w, &nu), t("33/444/1111/2/55"));
    }

    #[test]
    fn refinements() {
        assert!(is_refinement(&c(&[1, 2, 1, 3, 2]), &c(&[4, 5])));
        assert_eq!(refinement_groups(&c(&[1, 2, 1, 3, 2]), &c(&[4, 5])), Some(vec![0, 0, 0, 1, 1]));
        assert!(is_refinement(&c(&[2, 1]), &c(&[2, 1])));
        assert!(!is_refinement(&c(&[2, 1]), &c(&[1, 2])));
        assert!(is_refinement(&c(&[1, 1, 1]), &c(&[3, 0])));
        assert!(is_refinement(&c(&[2, 1]), &c(&[2, 0, 1])));
    }

    #[test]
    fn count_identities_small() {
        assert_eq!(rsk_count_identity(&c(&[1, 1]), &c(&[1, 1])), (2, 2));
        assert_eq!(rsk_count_identity(&c(&[2, 3]), &c(&[3, 1, 0, 1])), (4, 4));
        assert_eq!(shifted_knuth_count_identity(&c(&[1]), &c(&[1])), (2, 2));
        let (l, r) = shifted_knuth_count_identity(&c(&[2, 1]), &c(&[2, 1]));
        assert_eq!(l, r);
    }

    #[test]
    fn good_tableaux_lemma() {
        for lambda in crate::symgroup::compositions(4) {
            assert_eq!(good(&lambda, &lambda).len(), 1);
            for mu in crate::symgroup::compositions(4) {
                if !good(&lambda, &mu).is_empty() {
                    assert!(mu.dominated_by(&lambda));
                }
            }
        }
    }

    #[test]
    fn matrices_count() {
        assert_eq!(integer_matrices(&[2, 1], &[1, 1, 1]).len(), 3);
        assert_eq!(integer_matrices(&[1, 1, 1], &[1, 1, 1]).len(), 6);
        assert_eq!(integer_matrices(&[2, 2], &[2, 2]).len(), 3);
    }

    #[test]
    fn circled_parsing_and_rules() {
        let s = CircledTableau::parse("11'23'/155'/4'").unwrap();
        assert!(s.is_row_semistandard());
        assert_eq!(s.to_string(), "1 1' 2 3'/1 5 5'/4'");
        assert_eq!(CircledTableau::parse("1 1' 2 3'/1 5 5'/4'").unwrap(), s);
        assert!(!CircledTableau::parse("1*1").unwrap().is_row_semistandard());
        assert!(!CircledTableau::parse("1*1*").unwrap().is_row_semistandard());
        assert_eq!(circled_row_semistandard(&c(&[2]), &c(&[2])).len(), 2);
        // The (2,1) ⊢ 3 shifted case: the bottom 2 is forced circled.
        assert_eq!(shifted_semistandard(&c(&[2, 1]), &c(&[1, 2])).len(), 4);
        assert_eq!(reduced_shifted_semistandard(&c(&[2, 1]), &c(&[1, 2])).len(), 1);
        // S^c_{λ;λ} ≅ Γ_λ has rank 2^{l(λ)}
        assert_eq!(shifted_semistandard(&c(&[3, 1]), &c(&[3, 1])).len(), 4);
    }
}
