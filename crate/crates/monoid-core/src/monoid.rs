//! Numerical monoids presented by arbitrary generator lists.
//!
//! A numerical monoid is the set of all non-negative integer combinations of
//! a finite set of positive generators with gcd 1; the gcd condition makes
//! the complement finite. Construction reduces the presented list to the
//! unique minimal generating set, so equal monoids compare equal.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::length::{normalize_generators, LengthSet, LengthTable};

/// Default node budget for the exhaustive factorization search.
pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;

/// One factorization: how many copies of each generator were used.
///
/// Multiplicities align with [`NumericalMonoid::generators`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub multiplicities: Vec<u64>,
}

impl Factorization {
    /// Number of generators used, counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// The element this factorization represents.
    pub fn value(&self, generators: &[u64]) -> u64 {
        self.multiplicities
            .iter()
            .zip(generators)
            .map(|(z, g)| z * g)
            .sum()
    }
}

/// A numerical monoid, held as its minimal generating set in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
}

/// Is `n` a non-negative combination of `gens`? Plain reachability table;
/// no coprimality assumption, so this also serves the reduction step below.
fn representable(gens: &[u64], n: u64) -> bool {
    let n = usize::try_from(n).expect("membership bound fits usize");
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for m in 1..=n {
        reach[m] = gens
            .iter()
            .take_while(|&&g| g as usize <= m)
            .any(|&g| reach[m - g as usize]);
    }
    reach[n]
}

impl NumericalMonoid {
    /// Builds the monoid generated by `candidates`, reducing the list to the
    /// minimal generating set. Reduction removes any candidate representable
    /// by the others and repeats until nothing changes, so the result is
    /// canonical and construction is idempotent.
    pub fn new(candidates: &[u64]) -> Result<Self> {
        let mut gens = normalize_generators(candidates)?;
        let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        loop {
            let mut removed = false;
            // Largest first: representations only ever use smaller elements.
            let mut i = gens.len();
            while i > 0 {
                i -= 1;
                let mut rest = gens.clone();
                let g = rest.remove(i);
                if !rest.is_empty() && representable(&rest, g) {
                    gens = rest;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        Ok(NumericalMonoid { generators: gens })
    }

    /// Minimal generating set, strictly increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn contains(&self, n: u64) -> bool {
        representable(&self.generators, n)
    }

    /// Length sets of every value up to `bound`. See [`LengthTable`].
    pub fn length_table(&self, bound: u64) -> LengthTable {
        LengthTable::build(self.generators.clone(), bound)
    }

    /// Length set of a single value; `None` when `n` is not a member.
    ///
    /// One-shot convenience; batch callers should hold a [`LengthTable`]
    /// and extend it as needed.
    pub fn length_set(&self, n: u64) -> Option<LengthSet> {
        self.length_table(n).row(n).cloned()
    }

    /// Every factorization of `n`, with the default node budget.
    pub fn factorizations(&self, n: u64) -> Result<Vec<Factorization>> {
        self.factorizations_budgeted(n, DEFAULT_ORACLE_BUDGET)
    }

    /// Every factorization of `n`, exhaustively.
    ///
    /// Multiplicities are bounded by `n / generator` per coordinate. The
    /// search counts the nodes it visits and refuses with
    /// [`Error::OracleTooLarge`] once the count passes `budget`, so a
    /// runaway enumeration fails fast instead of hanging.
    pub fn factorizations_budgeted(&self, n: u64, budget: u64) -> Result<Vec<Factorization>> {
        let mut out = Vec::new();
        let mut mult = vec![0u64; self.generators.len()];
        let mut nodes = 0u64;
        self.search(
            self.generators.len() - 1,
            n,
            &mut mult,
            &mut out,
            &mut nodes,
            budget,
        )?;
        out.sort_unstable();
        Ok(out)
    }

    fn search(
        &self,
        idx: usize,
        remaining: u64,
        mult: &mut Vec<u64>,
        out: &mut Vec<Factorization>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::OracleTooLarge { budget });
        }
        let g = self.generators[idx];
        if idx == 0 {
            if remaining.is_multiple_of(g) {
                mult[0] = remaining / g;
                out.push(Factorization {
                    multiplicities: mult.clone(),
                });
                mult[0] = 0;
            }
            return Ok(());
        }
        for z in 0..=remaining / g {
            mult[idx] = z;
            self.search(idx - 1, remaining - z * g, mult, out, nodes, budget)?;
        }
        mult[idx] = 0;
        Ok(())
    }

    /// Least element of the monoid in each residue class modulo `m`,
    /// indexed by residue. `m` must be a positive member.
    ///
    /// Computed as single-source shortest paths on the residue graph with one
    /// edge of weight `g` per generator: a walk's total weight is an element,
    /// and the least total reaching residue `r` is the least member in `r`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if !self.contains(m) {
            return Err(Error::NotAMember { value: m });
        }
        let m = usize::try_from(m).expect("modulus fits usize");
        let mut dist = vec![u64::MAX; m];
        let mut heap = BinaryHeap::new();
        dist[0] = 0;
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((n, r))) = heap.pop() {
            if n > dist[r] {
                continue;
            }
            for &g in &self.generators {
                let nr = (r + g as usize) % m;
                let nn = n + g;
                if nn < dist[nr] {
                    dist[nr] = nn;
                    heap.push(Reverse((nn, nr)));
                }
            }
        }
        Ok(dist)
    }

    /// Largest integer outside the monoid; `-1` when there is none.
    ///
    /// Every integer above `max(apery) - m` in a residue class is reachable
    /// from the class's least element by adding copies of `m`, so the answer
    /// follows from the Apery set of the multiplicity and needs no search
    /// bound.
    pub fn frobenius(&self) -> i64 {
        let m = self.multiplicity();
        let apery = self.apery_set(m).expect("multiplicity is a member");
        let max = *apery.iter().max().expect("m >= 1");
        max as i64 - m as i64
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
