//! The distinguished basis of the tensor power and the change of basis
//! between simple and Verma classes.
//!
//! The basis vector attached to a word is built by three rewriting rules:
//! a leading 2 peels off as a prepended factor, a trailing 1 as an appended
//! factor, and an interior "12" pair is produced by inserting the
//! antisymmetric two-letter vector into the basis vector of the shorter
//! word. The canonical strategy resolves the rules in that order, taking
//! the leftmost "12"; an independent dense evaluation resolves them in a
//! different order (trailing 1s first, rightmost "12") and must agree,
//! which exercises well-definedness of the pair-removal rule.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ktheory::KClass;
use crate::report::Report;
use crate::tensor::TensorVector;
use crate::word::{Letter, Word};

/// Leftmost 1-based position `i` with letters `(1, 2)` at `(i, i+1)`.
fn leftmost_one_two(a: &Word) -> Option<usize> {
    (1..a.len()).find(|&i| a.letter(i) == Letter::One && a.letter(i + 1) == Letter::Two)
}

/// Rightmost such position.
fn rightmost_one_two(a: &Word) -> Option<usize> {
    (1..a.len())
        .rev()
        .find(|&i| a.letter(i) == Letter::One && a.letter(i + 1) == Letter::Two)
}

/// Basis vector of `a`: canonical strategy. Strips leading 2s, then
/// trailing 1s, then splices the antisymmetric pair into the leftmost "12"
/// position. The coefficient of `v_a` itself is always +1.
pub fn gbasis(a: &Word) -> TensorVector {
    if a.is_empty() {
        return TensorVector::unit(&Word::empty());
    }
    if a.first() == Some(Letter::Two) {
        return gbasis(&a.tail()).prepend_letter(Letter::Two);
    }
    if a.last() == Some(Letter::One) {
        return gbasis(&a.init()).append_letter(Letter::One);
    }
    // Starts with 1 and ends with 2, so an interior "12" exists.
    let i = leftmost_one_two(a).expect("word starting in 1 and ending in 2 contains 12");
    gbasis(&a.remove_pair(i))
        .h_insert(i - 1)
        .expect("insertion point within range")
}

/// Basis vector of `a` by the alternate strategy over dense coefficient
/// arrays: trailing 1s first, then leading 2s, then the rightmost "12".
/// Serves as the independent certification route for [`gbasis`].
pub fn gbasis_dense(a: &Word) -> TensorVector {
    let dense = gbasis_dense_rec(a);
    let mut out = TensorVector::zero(a.len());
    for (bits, c) in dense.iter().enumerate() {
        if *c != 0 {
            out.add_term(Word::from_bits(bits as u32, a.len()), *c);
        }
    }
    out
}

fn gbasis_dense_rec(a: &Word) -> Vec<i64> {
    if a.is_empty() {
        return vec![1];
    }
    let m = a.len() - 1;
    if a.last() == Some(Letter::One) {
        // Appending letter 1 leaves indices unchanged; the top half is zero.
        let mut out = gbasis_dense_rec(&a.init());
        out.resize(1 << (m + 1), 0);
        return out;
    }
    if a.first() == Some(Letter::Two) {
        let inner = gbasis_dense_rec(&a.tail());
        let mut out = vec![0; 1 << (m + 1)];
        for (bits, c) in inner.iter().enumerate() {
            out[(bits << 1) | 1] = *c;
        }
        return out;
    }
    let i = rightmost_one_two(a).expect("word starting in 1 and ending in 2 contains 12");
    let k = i - 1;
    let inner = gbasis_dense_rec(&a.remove_pair(i));
    let mut out = vec![0; 1 << a.len()];
    let low_mask = (1usize << k) - 1;
    for (bits, c) in inner.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let low = bits & low_mask;
        let high = (bits >> k) << (k + 2);
        out[high | (0b10 << k) | low] += c; // letters "12" in slots k+1, k+2
        out[high | (0b01 << k) | low] -= c; // letters "21"
    }
    out
}

/// Verifies that dropping the final letter of the basis vector of `a 2`
/// onto its 2-ending part reproduces the basis vector of `a 1`: writing
/// `G(a 2) = sum c_b v_b (x) v_2 + sum d_b v_b (x) v_1`, checks
/// `G(a 1) = sum c_b v_b (x) v_1` exactly.
pub fn check_ga2_implies_ga1(a: &Word) -> Report {
    let check = "ga2_implies_ga1";
    let n = a.len() as u32;
    let ga2 = gbasis(&a.append(Letter::Two));
    let (ends_two, _) = ga2.split_last();
    let predicted = ends_two.append_letter(Letter::One);
    let ga1 = gbasis(&a.append(Letter::One));
    if ga1 == predicted {
        Report::pass(check, Some(n))
    } else {
        Report::fail(
            check,
            Some(n),
            serde_json::json!({
                "a": a.to_string(),
                "predicted": predicted.to_string(),
                "actual": ga1.to_string(),
            }),
        )
    }
}

/// One row of the change of basis: the simple class of `a` expanded in the
/// Verma basis, obtained from the basis vector of the flipped word by
/// flipping every term back.
pub fn simple_to_verma_row(a: &Word) -> KClass {
    let g = gbasis(&a.prime());
    let mut row = KClass::zero(a.len());
    for (b, c) in g.iter() {
        row.add_term(b.prime(), *c);
    }
    row
}

/// Both change-of-basis matrices at a fixed length: simple classes in the
/// Verma basis and Verma classes in the simple basis. The forward matrix is
/// unitriangular in label order, so inversion is exact forward substitution
/// with unit pivots; anything else aborts loudly.
#[derive(Clone, Debug)]
pub struct Transition {
    n: usize,
    simple_rows: BTreeMap<Word, KClass>,
    verma_rows: BTreeMap<Word, KClass>,
}

impl Transition {
    pub fn new(n: usize, cap: usize) -> Result<Transition> {
        if n < 1 || n > cap {
            return Err(Error::SizeLimit {
                what: "transition matrices",
                n,
                cap,
            });
        }
        let mut simple_rows = BTreeMap::new();
        for a in Word::all_words(n) {
            let row = simple_to_verma_row(&a);
            if row.coeff(&a) != 1 {
                return Err(Error::Consistency(format!("non-unit pivot at label {a}")));
            }
            if row.iter().any(|(b, _)| *b > a) {
                return Err(Error::Consistency(format!(
                    "row {a} is not triangular in label order"
                )));
            }
            simple_rows.insert(a, row);
        }
        // Forward substitution in ascending label order.
        let mut verma_rows: BTreeMap<Word, KClass> = BTreeMap::new();
        for a in Word::all_words(n) {
            let mut row = KClass::unit(&a);
            for (b, c) in simple_rows[&a].iter() {
                if b == &a {
                    continue;
                }
                row = row.sub(&verma_rows[b].scale(*c));
            }
            verma_rows.insert(a, row);
        }
        Ok(Transition {
            n,
            simple_rows,
            verma_rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_label(&self, label: &Word) -> Result<()> {
        if label.len() != self.n {
            return Err(Error::Domain(format!(
                "label {label} has length {}, expected {}",
                label.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// The simple class of `label` in the Verma basis.
    pub fn simple_to_verma(&self, label: &Word) -> Result<&KClass> {
        self.check_label(label)?;
        Ok(&self.simple_rows[label])
    }

    /// The Verma class of `label` in the simple basis.
    pub fn verma_to_simple(&self, label: &Word) -> Result<&KClass> {
        self.check_label(label)?;
        Ok(&self.verma_rows[label])
    }

    pub fn simple_rows(&self) -> impl Iterator<Item = (&Word, &KClass)> {
        self.simple_rows.iter()
    }

    pub fn verma_rows(&self) -> impl Iterator<Item = (&Word, &KClass)> {
        self.verma_rows.iter()
    }

    /// Re-expresses a Verma-basis vector in the simple basis.
    pub fn to_simple(&self, verma: &KClass) -> Result<KClass> {
        let mut out = KClass::zero(self.n);
        for (b, c) in verma.iter() {
            out = out.add(&self.verma_to_simple(b)?.scale(*c));
        }
        Ok(out)
    }

    /// Re-expresses a simple-basis vector in the Verma basis.
    pub fn to_verma(&self, simple: &KClass) -> Result<KClass> {
        let mut out = KClass::zero(self.n);
        for (a, c) in simple.iter() {
            out = out.add(&self.simple_to_verma(a)?.scale(*c));
        }
        Ok(out)
    }

    /// Product of the two matrices equals the identity, and the inverse has
    /// nonnegative entries throughout.
    pub fn verify_inverse(&self) -> Report {
        let check = "transition_inverse";
        for (a, row) in self.simple_rows() {
            match self.to_simple(row) {
                Ok(back) if back == KClass::unit(a) => {}
                _ => {
                    return Report::fail(
                        check,
                        Some(self.n as u32),
                        serde_json::json!({"label": a.to_string(), "reason": "product is not identity"}),
                    );
                }
            }
        }
        for (b, row) in self.verma_rows() {
            if row.iter().any(|(_, c)| *c < 0) {
                return Report::fail(
                    check,
                    Some(self.n as u32),
                    serde_json::json!({"label": b.to_string(), "reason": "negative multiplicity"}),
                );
            }
        }
        Report::pass(check, Some(self.n as u32))
    }
}
