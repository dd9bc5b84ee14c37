//! Clifford words `c^p = c_{i_1}⋯c_{i_r}` (`i_1 < ⋯ < i_r`) stored as bit
//! masks, and the sign rules for reordering them.

use std::fmt;

use crate::error::{Error, Result};

/// A monomial of the Clifford superalgebra `C_n(a)`; bit `i−1` of the mask
/// stands for `c_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CliffordWord {
    n: usize,
    mask: u32,
}

impl CliffordWord {
    /// The word `c_{i_1}⋯c_{i_r}`, indices 1-based in any order; rejects
    /// repeats (use the algebra to multiply those out).
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::InvalidInput(format!("Clifford index {i} out of range 1..={n}")));
            }
            if mask >> (i - 1) & 1 == 1 {
                return Err(Error::InvalidInput(format!("repeated Clifford index {i}")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(CliffordWord { n, mask })
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n >= 32 || mask >> n == 0);
        CliffordWord { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn indices(&self) -> Vec<usize> {
        indices(self.mask)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn parity(&self) -> u8 {
        (self.mask.count_ones() % 2) as u8
    }
}

impl fmt::Display for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c[{}]", join(&self.indices()))
    }
}

pub(crate) fn join(xs: &[usize]) -> String {
    xs.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// 1-based indices of the set bits.
pub fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub(crate) fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// `c^p · c^r = (−1)^sign · Π_{j ∈ squares} c_j² · c^{result}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliffordProduct {
    pub negative: bool,
    pub squares: u32,
    pub result: u32,
}

pub fn clifford_product(p: u32, r: u32) -> CliffordProduct {
    // every c_j of p passes the factors of r with smaller index
    let mut swaps = 0;
    let mut rest = p;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (r & ((1u32 << j) - 1)).count_ones();
        rest &= rest - 1;
    }
    CliffordProduct { negative: swaps % 2 == 1, squares: p & r, result: p ^ r }
}

/// The image of `c^p` under the automorphism `c_i ↔ c_{i+1}`.
pub(crate) fn swap_adjacent(p: u32, i: usize) -> (bool, u32) {
    let (b0, b1) = (1u32 << (i - 1), 1u32 << i);
    match (p & b0 != 0, p & b1 != 0) {
        (true, true) => (true, p),
        (true, false) => (false, p ^ b0 ^ b1),
        (false, true) => (false, p ^ b0 ^ b1),
        (false, false) => (false, p),
    }
}

/// One term `±a^k c^p` of the correction in `T_i c^p = s_i(c^p) T_i + (q−1)·corr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct CorrectionTerm {
    pub negative: bool,
    pub a_power: u32,
    pub mask: u32,
}

/// The correction part of commuting `T_i` past `c^p`: nothing unless
/// `c_{i+1}` occurs; `c^p − c^{p[i+1→i]}` if only `c_{i+1}` occurs; and
/// `a·c^{p∖{i,i+1}} + c^p` if both do.
pub(crate) fn correction(p: u32, i: usize) -> ([CorrectionTerm; 2], usize) {
    let (b0, b1) = (1u32 << (i - 1), 1u32 << i);
    let none = CorrectionTerm { negative: false, a_power: 0, mask: 0 };
    match (p & b0 != 0, p & b1 != 0) {
        (false, true) => {
            ([CorrectionTerm { negative: false, a_power: 0, mask: p }, CorrectionTerm { negative: true, a_power: 0, mask: p ^ b0 ^ b1 }], 2)
        }
        (true, true) => (
            [CorrectionTerm { negative: false, a_power: 1, mask: p ^ b0 ^ b1 }, CorrectionTerm { negative: false, a_power: 0, mask: p }],
            2,
        ),
        _ => ([none, none], 0),
    }
}

/// Sign of sorting `xs` (distinct) into increasing order.
#[cfg(test)]
pub(crate) fn sort_sign(xs: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_of_words() {
        // c_1 c_1 = a
        assert_eq!(clifford_product(0b1, 0b1), CliffordProduct { negative: false, squares: 1, result: 0 });
        // c_2 c_1 = −c_1 c_2
        assert_eq!(clifford_product(0b10, 0b1), CliffordProduct { negative: true, squares: 0, result: 0b11 });
        // (c_1 c_2) c_1 = −a c_2
        assert_eq!(clifford_product(0b11, 0b1), CliffordProduct { negative: true, squares: 1, result: 0b10 });
        // c_1 (c_1 c_2) = a c_2
        assert_eq!(clifford_product(0b1, 0b11), CliffordProduct { negative: false, squares: 1, result: 0b10 });
    }

    #[test]
    fn words_and_signs() {
        let w = CliffordWord::new(4, &[4, 1]).unwrap();
        assert_eq!(w.indices(), vec![1, 4]);
        assert_eq!(w.to_string(), "c[1,4]");
        assert_eq!(w.parity(), 0);
        assert!(CliffordWord::new(3, &[1, 1]).is_err());
        assert!(CliffordWord::new(3, &[4]).is_err());
        assert!(sort_sign(&[2, 1]));
        assert!(!sort_sign(&[3, 1, 2]));
        assert_eq!(swap_adjacent(0b011, 1), (true, 0b011));
        assert_eq!(swap_adjacent(0b001, 1), (false, 0b010));
    }
}
