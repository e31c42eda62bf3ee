//! Words in a free group on numbered generators.
//!
//! The same type carries band core words and the marked curve in a banded
//! unlink diagram (generators are unlink components, read as meridians) and
//! relators of a group presentation (generators are abstract indices).

use std::fmt;

/// One generator occurrence with an exponent of `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn new(gen: usize, sign: i32) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter { gen, inverse: sign < 0 }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from `(generator, sign)` pairs.
    pub fn from_signed(pairs: &[(usize, i32)]) -> Self {
        Word(pairs.iter().map(|&(g, s)| Letter::new(g, s)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    /// Exponent sum of a single generator.
    pub fn exponent_of(&self, gen: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| l.sign()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Free reduction: removes adjacent `x x^-1` pairs until none remain.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Cyclic reduction; the result is reduced and its first and last letters do not cancel.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.reduce().0;
        while w.len() >= 2 && w[0].cancels(w[w.len() - 1]) {
            w.pop();
            w.remove(0);
        }
        Word(w)
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Rewrites every generator index through `f`; letters mapped to `None` are deleted.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> Word {
        Word(
            self.0
                .iter()
                .filter_map(|l| f(l.gen).map(|g| Letter { gen: g, inverse: l.inverse }))
                .collect(),
        )
    }

    /// Replaces every occurrence of `gen` by `image` (inverted for inverse letters).
    pub fn substitute(&self, gen: usize, image: &Word) -> Word {
        let inv = image.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.gen == gen {
                out.extend_from_slice(if l.inverse { &inv.0 } else { &image.0 });
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Conjugate `c w c^-1`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.gen)?;
            if l.inverse {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancelling_pair_reduces_to_empty() {
        let w = Word::from_signed(&[(1, 1), (1, -1)]);
        assert_eq!(w.reduce(), Word::empty());
    }

    #[test]
    fn inner_cancellation() {
        let w = Word::from_signed(&[(1, 1), (2, 1), (2, -1), (1, 1)]);
        assert_eq!(w.reduce(), Word::from_signed(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn reduced_word_unchanged() {
        let w = Word::from_signed(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(w.reduce(), w);
        assert!(w.is_reduced());
    }

    #[test]
    fn substitute_and_conjugate() {
        let w = Word::from_signed(&[(0, 1), (1, -1)]);
        let img = Word::from_signed(&[(2, 1), (3, 1)]);
        assert_eq!(
            w.substitute(1, &img),
            Word::from_signed(&[(0, 1), (3, -1), (2, -1)])
        );
        let c = Word::from_signed(&[(5, 1)]);
        assert_eq!(w.conjugate_by(&c).exponent_sum(), 0);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..4, any::<bool>()), 0..40)
            .prop_map(|v| v.into_iter().map(|(gen, inverse)| Letter { gen, inverse }).collect())
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_preserves_sums(w in arb_word()) {
            let r = w.reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
            prop_assert_eq!(r.len() % 2, w.len() % 2);
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(w in arb_word()) {
            prop_assert!(w.concat(&w.inverse()).reduce().is_empty());
        }
    }
}
