//! Descent index sets of labels and their behavior along components.
//!
//! For a label `(a_1,...,a_n)` the finiteness set collects the positions
//! `i` with `a_i = 2` and `a_{i+1} = 1`. It is constant along even
//! components of the word crystal (after the letter flip between words and
//! labels), constant up to the last index along full components, and cuts
//! out closed subcrystals. The two even parts of a full component are
//! separated by the finiteness set of the reduced label.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{component_of, gl2_split, Mode};
use crate::lowest::{bar, decompose_lowest, hat, is_srlp};
use crate::report::Report;
use crate::word::{apply, Letter, Word};

/// A set of 1-based descent positions, always inside `{1,...,n-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FinSet {
    indices: BTreeSet<u32>,
}

impl FinSet {
    pub fn empty() -> FinSet {
        FinSet::default()
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(iter: I) -> FinSet {
        FinSet {
            indices: iter.into_iter().collect(),
        }
    }

    /// Decodes bit `i-1` as index `i`.
    pub fn from_mask(mask: u32) -> FinSet {
        FinSet {
            indices: (0..32)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect(),
        }
    }

    pub fn mask(&self) -> u32 {
        self.indices.iter().fold(0, |m, i| m | 1 << (i - 1))
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.indices.iter().copied()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn without(&self, i: u32) -> FinSet {
        let mut indices = self.indices.clone();
        indices.remove(&i);
        FinSet { indices }
    }

    pub fn is_superset_of(&self, other: &FinSet) -> bool {
        other.indices.is_subset(&self.indices)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Positions `i` with `a_i = 2` and `a_{i+1} = 1`.
pub fn i_fin(a: &Word) -> FinSet {
    FinSet::from_mask(i_fin_mask(a))
}

/// Same set as a bitmask (bit `i-1` set for index `i`).
pub fn i_fin_mask(a: &Word) -> u32 {
    if a.len() < 2 {
        return 0;
    }
    let bits = a.bits();
    bits & !(bits >> 1) & (((1u64 << (a.len() - 1)) - 1) as u32)
}

/// Descent set of the flipped word (labels and crystal words differ by the
/// letter flip).
fn label_mask(w: &Word) -> u32 {
    i_fin_mask(&w.prime())
}

/// The descent set of the label is constant along each even component.
pub fn check_gl2_invariance(n: usize) -> Report {
    let check = "ifin_gl2_invariance";
    let mut seen = vec![false; 1usize << n];
    for seed in Word::all_words(n) {
        if seen[seed.bits() as usize] {
            continue;
        }
        let comp = component_of(&seed, Mode::Gl2);
        let expected = label_mask(&comp.members[0]);
        for m in &comp.members {
            seen[m.bits() as usize] = true;
            if label_mask(m) != expected {
                return Report::fail(
                    check,
                    Some(n as u32),
                    serde_json::json!({
                        "component_of": seed.to_string(),
                        "member": m.to_string(),
                        "ifin": i_fin(&m.prime()).to_string(),
                        "expected": FinSet::from_mask(expected).to_string(),
                    }),
                );
            }
        }
    }
    Report::pass(check, Some(n as u32))
}

/// Two facts about the full components: raising the last letter of a label
/// from 1 to 2 removes exactly the last index from its descent set, and
/// along a full component the descent set is constant away from the last
/// index (so every member's set contains the common part).
pub fn check_q2_invariance(n: usize) -> Report {
    let check = "ifin_q2_invariance";
    let last = (n as u32).saturating_sub(1);
    for a in Word::all_words(n) {
        if a.last() == Some(Letter::One) {
            let raised = a.with_letter(a.len(), Letter::Two);
            if i_fin(&raised) != i_fin(&a).without(last) {
                return Report::fail(
                    check,
                    Some(n as u32),
                    serde_json::json!({
                        "label": a.to_string(),
                        "raised": raised.to_string(),
                        "ifin_raised": i_fin(&raised).to_string(),
                        "ifin_minus_last": i_fin(&a).without(last).to_string(),
                    }),
                );
            }
        }
    }
    let strip = !if n >= 2 { 1u32 << (n - 2) } else { 0 };
    let mut seen = vec![false; 1usize << n];
    for seed in Word::all_words(n) {
        if seen[seed.bits() as usize] {
            continue;
        }
        let comp = component_of(&seed, Mode::Q2);
        let common = label_mask(&comp.members[0]) & strip;
        for m in &comp.members {
            seen[m.bits() as usize] = true;
            let mask = label_mask(m);
            if mask & strip != common || mask & common != common {
                return Report::fail(
                    check,
                    Some(n as u32),
                    serde_json::json!({
                        "component_of": seed.to_string(),
                        "member": m.to_string(),
                        "ifin": i_fin(&m.prime()).to_string(),
                        "common": FinSet::from_mask(common).to_string(),
                    }),
                );
            }
        }
    }
    Report::pass(check, Some(n as u32))
}

/// The words whose label descent set contains `I` are closed under the
/// operators of the mode. For the full mode the last index must be
/// excluded from `I`: closure genuinely fails there, so it is a domain
/// error, not a counterexample.
pub fn check_subcrystal(n: usize, set: &FinSet, mode: Mode) -> Result<Report> {
    let check = "subcrystal_closure";
    let max_index = match mode {
        Mode::Gl2 => n.saturating_sub(1),
        Mode::Q2 => n.saturating_sub(2),
    };
    if let Some(bad) = set.indices().find(|&i| i < 1 || i as usize > max_index) {
        return Err(Error::Domain(format!(
            "index {bad} not allowed: {mode} subcrystals need I inside {{1,...,{max_index}}} for n = {n}"
        )));
    }
    let i_mask = set.mask();
    for w in Word::all_words(n) {
        if label_mask(&w) & i_mask != i_mask {
            continue;
        }
        for &op in mode.all_ops() {
            if let Some(img) = apply(op, &w) {
                if label_mask(&img) & i_mask != i_mask {
                    return Ok(Report::fail(
                        check,
                        Some(n as u32),
                        serde_json::json!({
                            "I": set.to_string(),
                            "mode": mode.to_string(),
                            "word": w.to_string(),
                            "op": op.name(),
                            "image": img.to_string(),
                            "image_ifin": i_fin(&img.prime()).to_string(),
                        }),
                    ));
                }
            }
        }
    }
    Ok(Report::pass(check, Some(n as u32)))
}

/// Splits the full component of a lowest word into its two even parts and
/// checks that they are cut out by the descent set of the reduced label:
/// empty set on one side, the last reduced index on the other. Also checks
/// that deletion and the letter flip commute, so the two ways of reading
/// "reduced label" agree.
pub fn split_ab(l: &Word) -> Result<Report> {
    let check = "split_ab";
    let n = l.len() as u32;
    if !is_srlp(l) {
        return Err(Error::NotLowest(l.to_string()));
    }
    let dec = decompose_lowest(l)?;
    let l_hat = hat(l, &dec.a_set)?;
    if l_hat.len() < 2 {
        return Err(Error::Domain(format!(
            "split requires a reduced word of length >= 2, got {} for {l}",
            l_hat.len()
        )));
    }
    let l_bar = bar(l, &dec.a_set)?;
    let side_b_mask = 1u32 << (l_hat.len() - 2); // index |reduced| - 1

    let comp = component_of(l, Mode::Q2);
    let parts = gl2_split(&comp);
    if parts.len() != 2 {
        return Ok(Report::fail(
            check,
            Some(n),
            serde_json::json!({"word": l.to_string(), "parts": parts.len()}),
        ));
    }

    let mut side_a = BTreeSet::new();
    let mut side_b = BTreeSet::new();
    for m in &comp.members {
        // Deleting positions commutes with the letter flip: positions are
        // untouched by the flip. Checked, not assumed.
        let hat_m = hat(m, &dec.a_set)?;
        if hat_m.prime() != hat(&m.prime(), &dec.a_set)? {
            return Err(Error::Consistency(format!(
                "deletion does not commute with the letter flip at {m}"
            )));
        }
        if bar(m, &dec.a_set)? != l_bar {
            return Ok(Report::fail(
                check,
                Some(n),
                serde_json::json!({"word": m.to_string(), "reason": "restriction differs"}),
            ));
        }
        let key = i_fin_mask(&hat_m.prime());
        if key == 0 {
            side_a.insert(*m);
        } else if key == side_b_mask {
            side_b.insert(*m);
        } else {
            return Ok(Report::fail(
                check,
                Some(n),
                serde_json::json!({
                    "word": m.to_string(),
                    "key": FinSet::from_mask(key).to_string(),
                    "reason": "descent set of reduced label is neither empty nor the last index",
                }),
            ));
        }
    }

    let part_sets: Vec<BTreeSet<Word>> = parts
        .iter()
        .map(|p| p.members.iter().copied().collect())
        .collect();
    let matches = (part_sets[0] == side_a && part_sets[1] == side_b)
        || (part_sets[0] == side_b && part_sets[1] == side_a);
    if !matches {
        return Ok(Report::fail(
            check,
            Some(n),
            serde_json::json!({
                "word": l.to_string(),
                "side_a": side_a.iter().map(Word::to_string).collect::<Vec<_>>(),
                "side_b": side_b.iter().map(Word::to_string).collect::<Vec<_>>(),
                "reason": "descent partition differs from the even split",
            }),
        ));
    }
    Ok(Report::pass(check, Some(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn i_fin_examples() {
        assert_eq!(i_fin(&w("21")), FinSet::from_indices([1]));
        assert_eq!(i_fin(&w("1111")), FinSet::empty());
        assert_eq!(i_fin(&w("22121")), FinSet::from_indices([2, 4]));
        assert_eq!(i_fin(&w("2")), FinSet::empty());
    }

    #[test]
    fn finset_display_and_masks() {
        assert_eq!(FinSet::from_indices([3, 4, 6, 7]).to_string(), "{3,4,6,7}");
        assert_eq!(FinSet::empty().to_string(), "{}");
        let set = FinSet::from_indices([1, 5]);
        assert_eq!(FinSet::from_mask(set.mask()), set);
    }

    #[test]
    fn gl2_invariance_small() {
        for n in 1..=6 {
            assert!(check_gl2_invariance(n).passed(), "n = {n}");
        }
    }

    #[test]
    fn q2_invariance_small() {
        for n in 1..=6 {
            assert!(check_q2_invariance(n).passed(), "n = {n}");
        }
    }

    #[test]
    fn q2_invariance_examples() {
        // Raising (2,2,1) ends: descent set {2} loses index 2.
        assert_eq!(i_fin(&w("221")), FinSet::from_indices([2]));
        assert_eq!(i_fin(&w("222")), FinSet::empty());
        // Raising (2,1,1): descent set {1} keeps index 1.
        assert_eq!(i_fin(&w("211")), FinSet::from_indices([1]));
        assert_eq!(i_fin(&w("212")), FinSet::from_indices([1]));
    }

    #[test]
    fn subcrystal_examples() {
        assert!(check_subcrystal(4, &FinSet::empty(), Mode::Q2)
            .unwrap()
            .passed());
        assert!(check_subcrystal(4, &FinSet::from_indices([1]), Mode::Gl2)
            .unwrap()
            .passed());
        assert!(matches!(
            check_subcrystal(4, &FinSet::from_indices([3]), Mode::Q2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn split_ab_examples() {
        assert!(split_ab(&w("2222")).unwrap().passed());
        assert!(split_ab(&w("22122122")).unwrap().passed());
        assert!(split_ab(&w("22")).unwrap().passed());
        // Reduced length 1: out of scope for the split.
        assert!(matches!(split_ab(&w("2")), Err(Error::Domain(_))));
        assert!(matches!(split_ab(&w("12")), Err(Error::NotLowest(_))));
    }

    #[test]
    fn split_ab_partition_sizes() {
        let comp = component_of(&w("2222"), Mode::Q2);
        let parts = gl2_split(&comp);
        let mut sizes: Vec<usize> = parts.iter().map(|p| p.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 5]);
        assert!(split_ab(&w("2222")).unwrap().passed());
    }
}
