//! Length sets as packed bit vectors, and the table that computes them.
//!
//! The length set of an element records the sizes of all its factorizations:
//! `L` is in the set exactly when the element is a sum of `L` generators.
//! Sets are stored as bit vectors indexed by length, so the table recurrence
//!
//! ```text
//! L(n) = union over generators g <= n of { l + 1 : l in L(n - g) }
//! ```
//!
//! becomes a word-wise shift-and-OR. Filling a table up to `N` costs
//! `O(N * generators * words per row)` and never touches an individual
//! factorization.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;

const WORD: usize = 64;

/// Non-empty set of factorization lengths, packed one bit per length.
///
/// `{0}` is the length set of 0 and of nothing else; every other attached
/// set consists of positive lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthSet {
    /// Invariant: non-empty and the last word is non-zero.
    words: Vec<u64>,
}

impl LengthSet {
    /// Set containing exactly `len`.
    pub fn singleton(len: usize) -> Self {
        let mut words = vec![0u64; len / WORD + 1];
        words[len / WORD] = 1 << (len % WORD);
        LengthSet { words }
    }

    /// Builds a set from arbitrary lengths; `None` when `lengths` is empty.
    pub fn from_lengths(lengths: &[usize]) -> Option<Self> {
        let max = *lengths.iter().max()?;
        let mut words = vec![0u64; max / WORD + 1];
        for &l in lengths {
            words[l / WORD] |= 1 << (l % WORD);
        }
        Some(LengthSet { words })
    }

    fn from_words(mut words: Vec<u64>) -> Option<Self> {
        while words.last() == Some(&0) {
            words.pop();
        }
        if words.is_empty() {
            None
        } else {
            Some(LengthSet { words })
        }
    }

    pub fn contains(&self, len: usize) -> bool {
        self.words
            .get(len / WORD)
            .is_some_and(|w| w & (1 << (len % WORD)) != 0)
    }

    pub fn min_length(&self) -> usize {
        let i = self.words.iter().position(|&w| w != 0).expect("non-empty");
        i * WORD + self.words[i].trailing_zeros() as usize
    }

    pub fn max_length(&self) -> usize {
        let i = self.words.len() - 1;
        i * WORD + (WORD - 1) - self.words[i].leading_zeros() as usize
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lengths in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The set minus its minimum; `None` when that empties it.
    pub fn without_min(&self) -> Option<Self> {
        let mut words = self.words.clone();
        let m = self.min_length();
        words[m / WORD] &= !(1 << (m % WORD));
        Self::from_words(words)
    }

    /// The set minus its maximum; `None` when that empties it.
    pub fn without_max(&self) -> Option<Self> {
        let mut words = self.words.clone();
        let m = self.max_length();
        words[m / WORD] &= !(1 << (m % WORD));
        Self::from_words(words)
    }
}

impl core::fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `acc |= src << 1`, the table recurrence kernel.
fn or_shifted(acc: &mut [u64], src: &[u64]) {
    debug_assert!(acc.len() > src.len() || src.last().unwrap() >> (WORD - 1) == 0);
    let mut carry = 0u64;
    for (i, &s) in src.iter().enumerate() {
        acc[i] |= (s << 1) | carry;
        carry = s >> (WORD - 1);
    }
    if carry != 0 {
        acc[src.len()] |= carry;
    }
}

/// Length sets of every value up to a bound, gaps included.
///
/// Row `n` is the length set of `n`, or `None` when `n` is not in the monoid.
/// Rows only depend on earlier rows, so a table can be extended in place.
pub struct LengthTable {
    generators: Vec<u64>,
    rows: Vec<Option<LengthSet>>,
}

impl LengthTable {
    /// Builds the table for an arbitrary atom list (sorted and deduplicated
    /// here). Coprimality is not required: the rows of a non-cofinite
    /// generating set like `[4, 6]` are still exact, there are just gaps in
    /// every residue class that is never hit. The list is taken as the atom
    /// set verbatim; callers wanting the minimal generating set of the
    /// monoid should construct a [`crate::NumericalMonoid`] first.
    pub fn for_generators(generators: &[u64], bound: u64) -> Result<Self> {
        Ok(Self::build(normalize_generators(generators)?, bound))
    }

    /// `generators` must be sorted, positive, and non-empty.
    pub(crate) fn build(generators: Vec<u64>, bound: u64) -> Self {
        debug_assert!(!generators.is_empty() && generators[0] > 0);
        debug_assert!(generators.windows(2).all(|p| p[0] < p[1]));
        let mut table = LengthTable {
            generators,
            rows: vec![Some(LengthSet::singleton(0))],
        };
        table.extend_to(bound);
        table
    }

    /// Largest value the table currently covers.
    pub fn bound(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Grows the table so that `row(bound)` is available.
    pub fn extend_to(&mut self, bound: u64) {
        let lo = self.rows.len();
        let hi = usize::try_from(bound).expect("table bound fits usize");
        if hi < lo {
            return;
        }
        self.rows.reserve(hi + 1 - lo);
        let min_gen = self.generators[0] as usize;
        for n in lo..=hi {
            let mut acc = vec![0u64; (n / min_gen + 1) / WORD + 1];
            for &g in &self.generators {
                let g = g as usize;
                if g > n {
                    break;
                }
                if let Some(prev) = &self.rows[n - g] {
                    or_shifted(&mut acc, &prev.words);
                }
            }
            let row = LengthSet::from_words(acc);
            #[cfg(debug_assertions)]
            if let Some(r) = &row {
                for &g in &self.generators {
                    let g = g as usize;
                    if g <= n {
                        if let Some(prev) = &self.rows[n - g] {
                            debug_assert!(
                                r.contains(prev.max_length() + 1),
                                "recurrence violated at n = {n}, g = {g}"
                            );
                        }
                    }
                }
            }
            self.rows.push(row);
        }
    }

    /// Length set of `n`; `None` marks a gap. Panics past the bound.
    pub fn row(&self, n: u64) -> Option<&LengthSet> {
        self.rows[usize::try_from(n).expect("row index fits usize")].as_ref()
    }

    pub fn is_member(&self, n: u64) -> bool {
        self.row(n).is_some()
    }

    /// `(n, row)` pairs in increasing order of `n`.
    pub fn iter_rows(&self) -> impl Iterator<Item = (u64, Option<&LengthSet>)> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, r)| (n as u64, r.as_ref()))
    }

    /// Smallest factorization length of `n`, if `n` is a member.
    pub fn min_length(&self, n: u64) -> Option<usize> {
        self.row(n).map(LengthSet::min_length)
    }
}

/// Validates a raw generator list for table construction: non-empty, sorted
/// after dedup, no zero. No coprimality requirement; tables are well defined
/// for any positive generators.
pub(crate) fn normalize_generators(gens: &[u64]) -> Result<Vec<u64>> {
    if gens.is_empty() {
        return Err(crate::Error::EmptyInput);
    }
    if gens.contains(&0) {
        return Err(crate::Error::ZeroGenerator);
    }
    let mut v = gens.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_and_queries() {
        let s = LengthSet::singleton(70);
        assert!(s.contains(70));
        assert!(!s.contains(6));
        assert_eq!(
            (s.min_length(), s.max_length(), s.cardinality()),
            (70, 70, 1)
        );
    }

    #[test]
    fn from_lengths_round_trip() {
        let s = LengthSet::from_lengths(&[3, 64, 5, 3]).unwrap();
        assert_eq!(s.to_vec(), vec![3, 5, 64]);
        assert_eq!(s.cardinality(), 3);
        assert!(LengthSet::from_lengths(&[]).is_none());
    }

    #[test]
    fn removing_extremes() {
        let s = LengthSet::from_lengths(&[2, 3]).unwrap();
        assert_eq!(s.without_max().unwrap().to_vec(), vec![2]);
        assert_eq!(s.without_min().unwrap().to_vec(), vec![3]);
        assert!(LengthSet::singleton(1).without_max().is_none());
    }

    #[test]
    fn shifted_or_carries_across_words() {
        let src = LengthSet::singleton(63);
        let mut acc = vec![0u64; 2];
        or_shifted(&mut acc, &src.words);
        let got = LengthSet::from_words(acc).unwrap();
        assert_eq!(got.to_vec(), vec![64]);
    }

    #[test]
    fn interval_table_rows() {
        // generators 11..=18: 36 = 18+18 = 11+12+13 = 11+11+14 = 12+12+12
        let gens: Vec<u64> = (11..=18).collect();
        let t = LengthTable::build(gens, 36);
        assert_eq!(t.row(0).unwrap().to_vec(), vec![0]);
        assert!(t.row(10).is_none());
        assert_eq!(t.row(11).unwrap().to_vec(), vec![1]);
        assert_eq!(t.row(36).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(t.row(34).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(t.min_length(34), Some(2));
    }

    #[test]
    fn extension_matches_fresh_build() {
        let gens: Vec<u64> = vec![6, 9, 20];
        let mut grown = LengthTable::build(gens.clone(), 10);
        grown.extend_to(120);
        grown.extend_to(40); // no-op
        let fresh = LengthTable::build(gens, 120);
        assert_eq!(grown.bound(), 120);
        for n in 0..=120 {
            assert_eq!(grown.row(n), fresh.row(n), "row {n}");
        }
    }
}
