// SPDX-License-Identifier: Apache-2.0

//! Ternary words and their canonical ordering.
//!
//! A word of width `n` is an assignment `(B_1, ..., B_n)` with every trit in
//! `{0, 1, 2}`. Words are numbered `1..=3^n` with line 1 varying fastest, so
//! for `n = 2` the order is `00, 10, 20, 01, 11, 21, 02, 12, 22` (written
//! line 1 first).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest width accepted anywhere in the crate. `3^12` words is already far
/// beyond what exhaustive verification can handle.
pub const MAX_WIDTH: usize = 12;

/// Number of words of width `n`, i.e. `3^n`.
pub fn symbol_count(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroWidth);
    }
    if n > MAX_WIDTH {
        return Err(Error::WidthTooLarge(n));
    }
    Ok(3usize.pow(n as u32))
}

/// Inverse of [`symbol_count`]: the width `n` with `3^n == m`, if any.
pub fn width_for_symbols(m: usize) -> Option<usize> {
    (1..=MAX_WIDTH).find(|&n| 3usize.pow(n as u32) == m)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryWord {
    trits: Vec<u8>,
}

impl TernaryWord {
    pub fn new(trits: Vec<u8>) -> Result<Self> {
        if trits.is_empty() {
            return Err(Error::ZeroWidth);
        }
        if trits.len() > MAX_WIDTH {
            return Err(Error::WidthTooLarge(trits.len()));
        }
        if let Some(&bad) = trits.iter().find(|&&t| t > 2) {
            return Err(Error::InvalidTrit(bad));
        }
        Ok(Self { trits })
    }

    /// Builds a word from trits already known to be valid.
    pub(crate) fn from_trits_unchecked(trits: Vec<u8>) -> Self {
        debug_assert!(!trits.is_empty() && trits.iter().all(|&t| t < 3));
        Self { trits }
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn width(&self) -> usize {
        self.trits.len()
    }

    pub fn trits(&self) -> &[u8] {
        &self.trits
    }

    pub(crate) fn trits_mut(&mut self) -> &mut [u8] {
        &mut self.trits
    }

    /// Value on `line` (1-based), or `None` past the width.
    pub fn get(&self, line: usize) -> Option<u8> {
        line.checked_sub(1).and_then(|i| self.trits.get(i).copied())
    }

    pub fn index(&self) -> WordIndex {
        word_to_index(self)
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.trits {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    /// Parses the comma-free form, line 1 leftmost: `"012"` is `B_1 = 0`,
    /// `B_2 = 1`, `B_3 = 2`.
    fn from_str(s: &str) -> Result<Self> {
        let trits = s
            .bytes()
            .map(|b| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                other => Err(Error::InvalidTrit(other)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(trits)
    }
}

/// 1-based position of a word in the canonical ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordIndex(usize);

impl WordIndex {
    pub fn new(value: usize, n: usize) -> Result<Self> {
        let max = symbol_count(n)?;
        if value == 0 || value > max {
            return Err(Error::IndexOutOfRange { index: value, max });
        }
        Ok(Self(value))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for WordIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `1 + sum_i w_i * 3^(i-1)`.
pub fn word_to_index(w: &TernaryWord) -> WordIndex {
    WordIndex(1 + trits_to_offset(&w.trits))
}

pub fn index_to_word(i: WordIndex, n: usize) -> Result<TernaryWord> {
    let max = symbol_count(n)?;
    if i.0 == 0 || i.0 > max {
        return Err(Error::IndexOutOfRange { index: i.0, max });
    }
    Ok(TernaryWord::from_trits_unchecked(offset_to_trits(i.0 - 1, n)))
}

/// 0-based offset of a trit slice; the hot path for simulation.
pub(crate) fn trits_to_offset(trits: &[u8]) -> usize {
    trits.iter().rev().fold(0, |acc, &t| acc * 3 + t as usize)
}

pub(crate) fn offset_to_trits(mut offset: usize, n: usize) -> Vec<u8> {
    let mut trits = Vec::with_capacity(n);
    for _ in 0..n {
        trits.push((offset % 3) as u8);
        offset /= 3;
    }
    trits
}

/// All words of width `n` in canonical order.
pub fn all_words(n: usize) -> Result<impl Iterator<Item = TernaryWord>> {
    let m = symbol_count(n)?;
    Ok((0..m).map(move |k| TernaryWord::from_trits_unchecked(offset_to_trits(k, n))))
}

/// Ternary reflected Gray code over `n` lines, line 1 varying fastest.
///
/// Line `k` counts `0, 1, 2` within each block of `3^(k-1)` steps and runs
/// backwards `2, 1, 0` whenever the enclosing block count is odd, so
/// neighbouring words differ on exactly one line.
pub fn gray_sequence(n: usize) -> Result<Vec<TernaryWord>> {
    let m = symbol_count(n)?;
    let mut out = Vec::with_capacity(m);
    for c in 0..m {
        let mut trits = Vec::with_capacity(n);
        let mut block = 1usize;
        for _ in 0..n {
            let digit = ((c / block) % 3) as u8;
            let reflected = (c / (block * 3)) % 2 == 1;
            trits.push(if reflected { 2 - digit } else { digit });
            block *= 3;
        }
        out.push(TernaryWord::from_trits_unchecked(trits));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnClass {
    pub is_heterogeneous: bool,
    pub distinct_count: u8,
}

/// Column classification of the 3-row matrix `[u; s; t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeteroProfile {
    columns: Vec<ColumnClass>,
}

impl HeteroProfile {
    pub fn columns(&self) -> &[ColumnClass] {
        &self.columns
    }

    /// Class of column `line` (1-based).
    pub fn column(&self, line: usize) -> ColumnClass {
        self.columns[line - 1]
    }

    /// 1-based lines of the heterogeneous columns, ascending.
    pub fn heterogeneous_columns(&self) -> Vec<usize> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_heterogeneous)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn heterogeneous_count(&self) -> usize {
        self.columns.iter().filter(|c| c.is_heterogeneous).count()
    }
}

/// A column is heterogeneous when its three entries are not all equal.
pub fn hetero_profile(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<HeteroProfile> {
    let n = u.width();
    for w in [s, t] {
        if w.width() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                found: w.width(),
            });
        }
    }
    if u == s || s == t || u == t {
        return Err(Error::InvalidTriple);
    }
    Ok(profile_of_rows([u.trits(), s.trits(), t.trits()]))
}

pub(crate) fn profile_of_rows(rows: [&[u8]; 3]) -> HeteroProfile {
    let columns = (0..rows[0].len())
        .map(|c| {
            let (a, b, d) = (rows[0][c], rows[1][c], rows[2][c]);
            let distinct = if a == b && b == d {
                1
            } else if a == b || b == d || a == d {
                2
            } else {
                3
            };
            ColumnClass {
                is_heterogeneous: distinct >= 2,
                distinct_count: distinct,
            }
        })
        .collect();
    HeteroProfile { columns }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TernaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_index_examples() {
        assert_eq!(word_to_index(&w("00")).get(), 1);
        assert_eq!(word_to_index(&w("01")).get(), 4);
        assert_eq!(word_to_index(&w("22")).get(), 9);
        assert_eq!(index_to_word(WordIndex::new(1, 2).unwrap(), 2).unwrap(), w("00"));
        assert_eq!(index_to_word(WordIndex::new(2, 3).unwrap(), 3).unwrap(), w("100"));
        assert_eq!(index_to_word(WordIndex::new(9, 2).unwrap(), 2).unwrap(), w("22"));
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(WordIndex::new(0, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            WordIndex::new(10, 2),
            Err(Error::IndexOutOfRange { index: 10, max: 9 })
        ));
        // an index valid for n=3 must not decode at n=2
        let big = WordIndex::new(27, 3).unwrap();
        assert!(index_to_word(big, 2).is_err());
    }

    #[test]
    fn index_roundtrip_exhaustive() {
        for n in 1..=5 {
            let m = symbol_count(n).unwrap();
            for i in 1..=m {
                let idx = WordIndex::new(i, n).unwrap();
                let word = index_to_word(idx, n).unwrap();
                assert_eq!(word_to_index(&word), idx);
            }
            let seen: Vec<_> = all_words(n).unwrap().map(|w| w.index().get()).collect();
            assert_eq!(seen, (1..=m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!("013".parse::<TernaryWord>(), Err(Error::InvalidTrit(b'3')));
        assert_eq!("".parse::<TernaryWord>(), Err(Error::ZeroWidth));
        assert_eq!(TernaryWord::new(vec![0, 5]), Err(Error::InvalidTrit(5)));
        assert_eq!(w("012").to_string(), "012");
        assert_eq!(w("012").get(3), Some(2));
        assert_eq!(w("012").get(0), None);
    }

    #[test]
    fn gray_small_sequences() {
        let one: Vec<String> = gray_sequence(1).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(one, ["0", "1", "2"]);
        let two: Vec<String> = gray_sequence(2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(two, ["00", "10", "20", "21", "11", "01", "02", "12", "22"]);
    }

    #[test]
    fn gray_adjacency_and_coverage() {
        for n in 1..=5 {
            let seq = gray_sequence(n).unwrap();
            let mut idx: Vec<usize> = seq.iter().map(|w| w.index().get()).collect();
            idx.sort_unstable();
            assert_eq!(idx, (1..=symbol_count(n).unwrap()).collect::<Vec<_>>());
            for pair in seq.windows(2) {
                let diff = pair[0]
                    .trits()
                    .iter()
                    .zip(pair[1].trits())
                    .filter(|(a, b)| a != b)
                    .count();
                assert_eq!(diff, 1, "{} -> {}", pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn hetero_examples() {
        let p = hetero_profile(&w("002"), &w("012"), &w("022")).unwrap();
        assert_eq!(p.heterogeneous_columns(), vec![2]);
        assert_eq!(p.column(2).distinct_count, 3);
        assert_eq!(p.column(1).distinct_count, 1);

        let p = hetero_profile(&w("001"), &w("002"), &w("101")).unwrap();
        assert_eq!(p.heterogeneous_columns(), vec![1, 3]);
        assert_eq!(p.column(1).distinct_count, 2);

        let p = hetero_profile(&w("011"), &w("111"), &w("211")).unwrap();
        assert_eq!(p.heterogeneous_columns(), vec![1]);
        assert_eq!(p.column(1).distinct_count, 3);
    }

    #[test]
    fn hetero_rejects_repeats_and_width_mismatch() {
        assert_eq!(hetero_profile(&w("01"), &w("01"), &w("02")), Err(Error::InvalidTriple));
        assert!(matches!(
            hetero_profile(&w("01"), &w("011"), &w("02")),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn distinct_triple_always_has_a_heterogeneous_column() {
        let words: Vec<_> = all_words(2).unwrap().collect();
        for a in &words {
            for b in &words {
                for c in &words {
                    if let Ok(p) = hetero_profile(a, b, c) {
                        assert!(p.heterogeneous_count() >= 1);
                        for col in p.columns() {
                            assert_eq!(col.is_heterogeneous, col.distinct_count >= 2);
                        }
                    }
                }
            }
        }
    }
}
