//! Exact integer vectors on the word basis of the n-fold tensor power.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A sparse integer vector on the basis `{v_b : b a word of length n}`.
/// Zero coefficients are never stored; every key has length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    coeffs: BTreeMap<Word, i64>,
}

impl TensorVector {
    pub fn zero(n: usize) -> TensorVector {
        TensorVector {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `v_w` with coefficient one.
    pub fn unit(w: &Word) -> TensorVector {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(*w, 1);
        TensorVector { n: w.len(), coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &i64)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        debug_assert_eq!(w.len(), self.n);
        let entry = self.coeffs.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(*w, *c);
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(*w, -*c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> TensorVector {
        if s == 0 {
            return TensorVector::zero(self.n);
        }
        TensorVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, c)| (*w, c * s)).collect(),
        }
    }

    /// Linear extension of prepending a letter to each basis word.
    pub fn prepend_letter(&self, l: Letter) -> TensorVector {
        TensorVector {
            n: self.n + 1,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| (w.prepend(l), *c))
                .collect(),
        }
    }

    /// Linear extension of appending a letter to each basis word.
    pub fn append_letter(&self, l: Letter) -> TensorVector {
        TensorVector {
            n: self.n + 1,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.append(l), *c)).collect(),
        }
    }

    /// Inserts the antisymmetric pair after slot `k` of each basis word:
    /// `b` maps to `(b_1..b_k) 12 (b_{k+1}..)` minus `(b_1..b_k) 21
    /// (b_{k+1}..)`, extended linearly. The output lives in length `n + 2`.
    pub fn h_insert(&self, k: usize) -> Result<TensorVector> {
        if k > self.n {
            return Err(Error::InsertionOutOfRange { k, max: self.n });
        }
        let mut out = TensorVector::zero(self.n + 2);
        for (w, c) in self.iter() {
            out.add_term(w.insert_pair(k, Letter::One, Letter::Two), *c);
            out.add_term(w.insert_pair(k, Letter::Two, Letter::One), -*c);
        }
        Ok(out)
    }

    /// Splits off the last letter: returns the pair of length-(n-1) vectors
    /// `(c, d)` with `self = c (x) v_2 + d (x) v_1`.
    pub fn split_last(&self) -> (TensorVector, TensorVector) {
        assert!(self.n >= 1);
        let mut ends_two = TensorVector::zero(self.n - 1);
        let mut ends_one = TensorVector::zero(self.n - 1);
        for (w, c) in self.iter() {
            match w.last().expect("nonempty key") {
                Letter::Two => ends_two.add_term(w.init(), *c),
                Letter::One => ends_one.add_term(w.init(), *c),
            }
        }
        (ends_two, ends_one)
    }
}

impl fmt::Display for TensorVector {
    /// Signed sum sorted by word, e.g. `+112 -121`; the zero vector prints
    /// as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write_signed_term(f, *c, &w.to_string())?;
        }
        Ok(())
    }
}

pub(crate) fn write_signed_term(f: &mut fmt::Formatter<'_>, c: i64, symbol: &str) -> fmt::Result {
    let sign = if c < 0 { '-' } else { '+' };
    let mag = c.unsigned_abs();
    if mag == 1 {
        write!(f, "{sign}{symbol}")
    } else {
        write!(f, "{sign}{mag}*{symbol}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn unit_h_insert_is_the_antisymmetric_pair() {
        let h = TensorVector::unit(&Word::empty()).h_insert(0).unwrap();
        assert_eq!(h.coeff(&w("12")), 1);
        assert_eq!(h.coeff(&w("21")), -1);
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn h_insert_mid_slot() {
        let h = TensorVector::unit(&Word::empty()).h_insert(0).unwrap();
        let v = h.h_insert(1).unwrap();
        // v1 (x) h (x) v2 - v2 (x) h (x) v1, expanded on the word basis.
        assert_eq!(v.coeff(&w("1122")), 1);
        assert_eq!(v.coeff(&w("1212")), -1);
        assert_eq!(v.coeff(&w("2121")), -1);
        assert_eq!(v.coeff(&w("2211")), 1);
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn h_insert_is_linear_and_checks_range() {
        let zero = TensorVector::zero(2);
        assert!(zero.h_insert(1).unwrap().is_zero());
        assert!(zero.h_insert(3).is_err());
    }

    #[test]
    fn display_format() {
        let h = TensorVector::unit(&Word::empty()).h_insert(0).unwrap();
        assert_eq!(h.to_string(), "+12 -21");
        assert_eq!(TensorVector::zero(2).to_string(), "0");
        let mut v = TensorVector::zero(2);
        v.add_term(w("11"), 3);
        assert_eq!(v.to_string(), "+3*11");
    }
}
