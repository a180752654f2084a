//! Binary words, their Young diagrams, and strip relations between them.
//!
//! A word `σ` with `k` zeros and `ℓ` ones corresponds to a Young diagram
//! `λ(σ)` inside the `k × ℓ` rectangle. Row `i` (longest first) is the number
//! of ones to the left of the `(k + 1 - i)`-th zero, so the sorted word
//! `0…01…1` is the empty diagram and `|λ(σ)|` is the inversion count of `σ`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A fixed-length word over `{0, 1}`, stored in reading order (index 0 is the
/// leftmost letter).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { bits })
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    /// The word `0^zeros 1^ones`.
    pub fn sorted(zeros: usize, ones: usize) -> Result<Self> {
        let mut bits = vec![false; zeros];
        bits.resize(zeros + ones, true);
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Letter at 0-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// `(|w|₀, |w|₁)`.
    pub fn zeros_ones(&self) -> (usize, usize) {
        let ones = self.bits.iter().filter(|&&b| b).count();
        (self.bits.len() - ones, ones)
    }

    pub fn zeros(&self) -> usize {
        self.zeros_ones().0
    }

    pub fn ones(&self) -> usize {
        self.zeros_ones().1
    }

    /// Same number of zeros and of ones.
    pub fn same_type(&self, other: &BinaryWord) -> bool {
        self.len() == other.len() && self.zeros() == other.zeros()
    }

    /// Number of pairs `i < j` with `w_i = 1` and `w_j = 0`.
    pub fn inversions(&self) -> usize {
        let mut ones_seen = 0;
        let mut inv = 0;
        for &b in &self.bits {
            if b {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        inv
    }

    pub fn to_partition(&self) -> Partition {
        let mut ones_seen = 0;
        let mut rows = Vec::with_capacity(self.zeros());
        for &b in &self.bits {
            if b {
                ones_seen += 1;
            } else {
                rows.push(ones_seen);
            }
        }
        rows.reverse();
        Partition::from_weakly_decreasing(rows)
    }

    /// Inverse of [`BinaryWord::to_partition`] on words with `k` zeros and `l` ones.
    pub fn from_partition(p: &Partition, k: usize, l: usize) -> Result<Self> {
        if !p.fits_in(k, l) {
            return Err(Error::PartitionTooLarge {
                partition: p.to_string(),
                rows: k,
                cols: l,
            });
        }
        // zero number t (1-based from the left) is preceded by row k+1-t ones
        let mut bits = Vec::with_capacity(k + l);
        let mut ones_placed = 0;
        for t in 1..=k {
            let target = p.row(k - t);
            while ones_placed < target {
                bits.push(true);
                ones_placed += 1;
            }
            bits.push(false);
        }
        while ones_placed < l {
            bits.push(true);
            ones_placed += 1;
        }
        Self::new(bits)
    }

    /// `0 ↔ 1` exchanged and the word read backwards. Under the left/right
    /// mirror of the triangular grid, this maps each boundary word to the
    /// word read on the opposite side.
    pub fn reverse_complement(&self) -> BinaryWord {
        BinaryWord {
            bits: self.bits.iter().rev().map(|b| !b).collect(),
        }
    }

    /// 0-based positions of the ones.
    pub fn one_positions(&self) -> Vec<usize> {
        positions(&self.bits, true)
    }

    /// 0-based positions of the zeros.
    pub fn zero_positions(&self) -> Vec<usize> {
        positions(&self.bits, false)
    }
}

fn positions(bits: &[bool], letter: bool) -> Vec<usize> {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b == letter)
        .map(|(i, _)| i)
        .collect()
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

/// A Young diagram, given by weakly decreasing row lengths with trailing
/// zero rows trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?}")));
        }
        Ok(Self::from_weakly_decreasing(rows))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    fn from_weakly_decreasing(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (0-based); rows past the end are empty.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn fits_in(&self, k: usize, l: usize) -> bool {
        self.rows.len() <= k && self.row(0) <= l
    }

    /// `small ⊆ self`, row by row.
    pub fn contains(&self, small: &Partition) -> bool {
        small.rows.len() <= self.rows.len()
            && small.rows.iter().zip(&self.rows).all(|(s, b)| s <= b)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.row(0))
            .map(|j| self.rows.iter().filter(|&&r| r > j).count())
            .collect();
        Partition::from_weakly_decreasing(cols)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPartition(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let rows = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

pub fn diagram_contains(big: &Partition, small: &Partition) -> bool {
    big.contains(small)
}

/// `σ →ʰ τ`: `λ(τ)/λ(σ)` is a skew shape with at most one cell per column.
/// Words of different type are never related.
pub fn is_horizontal_strip(sigma: &BinaryWord, tau: &BinaryWord) -> bool {
    if !sigma.same_type(tau) {
        return false;
    }
    let (small, big) = (sigma.to_partition(), tau.to_partition());
    // interlacing big_1 ≥ small_1 ≥ big_2 ≥ small_2 ≥ …
    (0..big.len().max(small.len())).all(|i| {
        big.row(i) >= small.row(i) && (i + 1 >= big.len() || big.row(i + 1) <= small.row(i))
    })
}

/// `σ →ᵛ τ`: `λ(τ)/λ(σ)` is a skew shape with at most one cell per row.
pub fn is_vertical_strip(sigma: &BinaryWord, tau: &BinaryWord) -> bool {
    if !sigma.same_type(tau) {
        return false;
    }
    let (small, big) = (sigma.to_partition(), tau.to_partition());
    (0..big.len().max(small.len())).all(|i| {
        let (b, s) = (big.row(i), small.row(i));
        b >= s && b - s <= 1
    })
}

/// Every partition `μ` inside the `k × l` rectangle with
/// `lo_i ≤ μ_i ≤ hi_i` for all rows `i`.
fn partitions_between(lo: &[usize], hi: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        i: usize,
        k: usize,
        lo: &[usize],
        hi: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        let cap = if i == 0 { hi[0] } else { hi[i].min(cur[i - 1]) };
        for x in lo[i]..=cap {
            cur.push(x);
            go(i + 1, k, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, lo, hi, &mut Vec::with_capacity(k), &mut out);
    out
}

fn words_from_rows(rows: Vec<Vec<usize>>, k: usize, l: usize) -> Vec<BinaryWord> {
    let mut words: Vec<BinaryWord> = rows
        .into_iter()
        .map(|r| {
            let p = Partition::from_weakly_decreasing(r);
            BinaryWord::from_partition(&p, k, l).expect("bounded by the rectangle")
        })
        .collect();
    words.sort();
    words
}

fn padded_rows(p: &Partition, k: usize) -> Vec<usize> {
    (0..k).map(|i| p.row(i)).collect()
}

/// All `u⁻` of the same type with `u⁻ →ʰ u`, sorted.
pub fn horizontal_strip_predecessors(u: &BinaryWord) -> Vec<BinaryWord> {
    let (k, l) = u.zeros_ones();
    let lam = padded_rows(&u.to_partition(), k);
    let lo: Vec<usize> = (0..k).map(|i| lam.get(i + 1).copied().unwrap_or(0)).collect();
    words_from_rows(partitions_between(&lo, &lam, k), k, l)
}

/// All `u⁺` of the same type with `u →ʰ u⁺`, sorted.
pub fn horizontal_strip_successors(u: &BinaryWord) -> Vec<BinaryWord> {
    let (k, l) = u.zeros_ones();
    let lam = padded_rows(&u.to_partition(), k);
    let hi: Vec<usize> = (0..k).map(|i| if i == 0 { l } else { lam[i - 1] }).collect();
    words_from_rows(partitions_between(&lam, &hi, k), k, l)
}

/// All `v⁻` of the same type with `v⁻ →ᵛ v`, sorted.
pub fn vertical_strip_predecessors(v: &BinaryWord) -> Vec<BinaryWord> {
    let (k, l) = v.zeros_ones();
    let lam = padded_rows(&v.to_partition(), k);
    let lo: Vec<usize> = lam.iter().map(|&x| x.saturating_sub(1)).collect();
    words_from_rows(partitions_between(&lo, &lam, k), k, l)
}

/// All `v⁺` of the same type with `v →ᵛ v⁺`, sorted.
pub fn vertical_strip_successors(v: &BinaryWord) -> Vec<BinaryWord> {
    let (k, l) = v.zeros_ones();
    let lam = padded_rows(&v.to_partition(), k);
    let hi: Vec<usize> = lam.iter().map(|&x| (x + 1).min(l)).collect();
    words_from_rows(partitions_between(&lam, &hi, k), k, l)
}

/// All words of length `n`, in lexicographic order.
pub fn all_words(n: usize) -> impl Iterator<Item = BinaryWord> {
    (0u64..(1u64 << n)).map(move |m| BinaryWord {
        bits: (0..n).map(|i| (m >> (n - 1 - i)) & 1 == 1).collect(),
    })
}

/// All words with `k` zeros and `l` ones, in lexicographic order.
pub fn words_of_type(k: usize, l: usize) -> Vec<BinaryWord> {
    all_words(k + l).filter(|w| w.zeros() == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> Vec<BinaryWord> {
        let mut v: Vec<_> = words.iter().map(|s| w(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn counts_letters() {
        assert_eq!(w("1101101").zeros_ones(), (2, 5));
        assert_eq!(w("0000").zeros_ones(), (4, 0));
        assert_eq!(w("01").zeros_ones(), (1, 1));
    }

    #[test]
    fn word_to_diagram() {
        assert_eq!(w("0101111").to_partition(), p("[1]"));
        assert_eq!(w("0011111").to_partition(), Partition::empty());
        assert_eq!(w("1101101").to_partition(), p("[4,2]"));
    }

    #[test]
    fn diagram_to_word() {
        assert_eq!(BinaryWord::from_partition(&p("[]"), 2, 5).unwrap(), w("0011111"));
        assert_eq!(BinaryWord::from_partition(&p("[4,2]"), 2, 5).unwrap(), w("1101101"));
        assert_eq!(BinaryWord::from_partition(&p("[1]"), 2, 5).unwrap(), w("0101111"));
        assert!(matches!(
            BinaryWord::from_partition(&p("[6]"), 2, 5),
            Err(Error::PartitionTooLarge { .. })
        ));
        assert!(BinaryWord::from_partition(&p("[1,1,1]"), 2, 5).is_err());
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(w("1101101").inversions(), 6);
        assert_eq!(w("0011111").inversions(), 0);
        assert_eq!(w("10").inversions(), 1);
    }

    #[test]
    fn containment() {
        assert!(diagram_contains(&p("[4,2]"), &p("[1]")));
        assert!(diagram_contains(&p("[]"), &p("[]")));
        assert!(!diagram_contains(&p("[1]"), &p("[2]")));
        assert!(!diagram_contains(&p("[3]"), &p("[1,1]")));
    }

    #[test]
    fn strips_from_the_figures() {
        assert!(is_horizontal_strip(&w("0111100110"), &w("1111001100")));
        assert!(is_vertical_strip(&w("1001111001"), &w("1100111100")));
        assert!(is_horizontal_strip(&w("0011111"), &w("0011111")));
        assert!(is_horizontal_strip(&w("0011111"), &w("0101111")));
        assert!(is_vertical_strip(&w("01"), &w("01")));
        assert!(is_vertical_strip(&w("0011111"), &w("0101111")));
        // the pairs are not strips of the other kind
        assert!(!is_vertical_strip(&w("0111100110"), &w("1111001100")));
        assert!(!is_horizontal_strip(&w("1001111001"), &w("1100111100")));
    }

    #[test]
    fn mismatched_types_are_not_strips() {
        assert!(!is_horizontal_strip(&w("01"), &w("11")));
        assert!(!is_vertical_strip(&w("011"), &w("01")));
    }

    #[test]
    fn strip_generators() {
        assert_eq!(horizontal_strip_predecessors(&w("0011111")), set(&["0011111"]));
        assert_eq!(
            horizontal_strip_predecessors(&w("0101111")),
            set(&["0101111", "0011111"])
        );
        assert_eq!(horizontal_strip_predecessors(&w("10")), set(&["10", "01"]));
        assert_eq!(horizontal_strip_successors(&w("01")), set(&["01", "10"]));
        assert_eq!(horizontal_strip_successors(&w("111")), set(&["111"]));
        // brute force over the 21 words of type (2,5): ∅, [1] and [1,1]
        assert_eq!(
            vertical_strip_successors(&w("0011111")),
            set(&["0011111", "0101111", "1001111"])
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[4,2]").to_string(), "[4,2]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(p("[3,0]"), p("[3]"));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("012".parse::<BinaryWord>().is_err());
        assert!("".parse::<BinaryWord>().is_err());
        assert_eq!(w("0110").to_string(), "0110");
    }

    #[test]
    fn reverse_complement_swaps_type() {
        let x = w("0011101");
        let y = x.reverse_complement();
        assert_eq!(y, w("0100011"));
        assert_eq!(y.zeros_ones(), (x.ones(), x.zeros()));
        assert_eq!(y.to_partition(), x.to_partition().conjugate());
    }
}
