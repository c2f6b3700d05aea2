//! Lowest-weight words, their segment decomposition, and the deletion /
//! restriction maps that reduce a component to an all-twos core.
//!
//! A word is a lowest weight vector exactly when it is a strict reverse
//! lattice permutation: every suffix containing a 1 has strictly more 2s
//! than 1s. Such a word splits uniquely into maximal all-2 blocks and
//! "trivial lattice permutation" segments, followed by a reserved final 2.
//! Deleting the trivial segments (the index set `A`) gives an all-twos word
//! whose component is isomorphic to the original one, compatibly with all
//! four operators.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{component_of, Mode};
use crate::report::Report;
use crate::word::{apply, CrystalOp, Letter, Word};

/// Every suffix that contains a 1 has strictly more 2s than 1s.
pub fn is_srlp(w: &Word) -> bool {
    let mut ones = 0i64;
    let mut twos = 0i64;
    for pos in (1..=w.len()).rev() {
        match w.letter(pos) {
            Letter::One => ones += 1,
            Letter::Two => twos += 1,
        }
        if ones > 0 && twos <= ones {
            return false;
        }
    }
    true
}

/// Balanced word whose every nonempty proper prefix is strictly 1-heavy.
pub fn is_trivial_lp(w: &Word) -> bool {
    let mut excess = 0i64; // #1s minus #2s so far
    for pos in 1..=w.len() {
        if pos > 1 && excess <= 0 {
            return false;
        }
        match w.letter(pos) {
            Letter::One => excess += 1,
            Letter::Two => excess -= 1,
        }
    }
    excess == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    TrivialLp,
    TwoBlock,
}

/// One segment of the decomposition, spanning 1-based positions
/// `start..=end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: u32,
    pub end: u32,
}

/// The unique decomposition of a lowest word into segments plus the
/// reserved final 2, together with the union `A` of the trivial segments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowestDecomposition {
    pub segments: Vec<Segment>,
    /// 1-based position of the reserved final letter.
    pub trailing_two: u32,
    /// Sorted union of the trivial-segment positions.
    pub a_set: Vec<u32>,
}

/// Greedy scan: reserve the final 2; then repeatedly emit a maximal all-2
/// block up to the leftmost remaining 1, or the shortest balanced segment
/// starting at that 1. Requires a lowest weight vector.
pub fn decompose_lowest(l: &Word) -> Result<LowestDecomposition> {
    if l.is_empty() || !is_srlp(l) {
        return Err(Error::NotLowest(l.to_string()));
    }
    let r = l.len();
    debug_assert_eq!(l.letter(r), Letter::Two);
    let mut segments = Vec::new();
    let mut a_set = Vec::new();
    let mut pos = 1;
    while pos < r {
        let start = pos as u32;
        match l.letter(pos) {
            Letter::Two => {
                while pos < r && l.letter(pos) == Letter::Two {
                    pos += 1;
                }
                segments.push(Segment {
                    kind: SegmentKind::TwoBlock,
                    start,
                    end: (pos - 1) as u32,
                });
            }
            Letter::One => {
                // Shortest balanced stretch starting here; exists within
                // 1..r-1 because the suffix is strictly 2-heavy.
                let mut excess = 0i64;
                loop {
                    debug_assert!(pos < r, "balance point missing in {l}");
                    match l.letter(pos) {
                        Letter::One => excess += 1,
                        Letter::Two => excess -= 1,
                    }
                    a_set.push(pos as u32);
                    pos += 1;
                    if excess == 0 {
                        break;
                    }
                }
                segments.push(Segment {
                    kind: SegmentKind::TrivialLp,
                    start,
                    end: (pos - 1) as u32,
                });
            }
        }
    }
    Ok(LowestDecomposition {
        segments,
        trailing_two: r as u32,
        a_set,
    })
}

fn check_positions(b: &Word, a_set: &[u32]) -> Result<()> {
    for &k in a_set {
        if k < 1 || (k as usize) >= b.len().max(1) {
            return Err(Error::IndexOutOfRange {
                index: k as usize,
                max: b.len().saturating_sub(1),
            });
        }
    }
    Ok(())
}

/// Removes the positions of `a_set` (sorted, 1-based), preserving order.
pub fn hat(b: &Word, a_set: &[u32]) -> Result<Word> {
    check_positions(b, a_set)?;
    let drop: BTreeSet<u32> = a_set.iter().copied().collect();
    let letters: Vec<Letter> = (1..=b.len())
        .filter(|pos| !drop.contains(&(*pos as u32)))
        .map(|pos| b.letter(pos))
        .collect();
    Ok(Word::from_letters(&letters))
}

/// Keeps exactly the positions of `a_set`, in order.
pub fn bar(b: &Word, a_set: &[u32]) -> Result<Word> {
    check_positions(b, a_set)?;
    let letters: Vec<Letter> = a_set.iter().map(|&k| b.letter(k as usize)).collect();
    Ok(Word::from_letters(&letters))
}

/// Re-inserts `kept` at the positions of `a_set` into `core`: the inverse
/// of `hat` on words with the prescribed restriction.
fn interleave(core: &Word, kept: &Word, a_set: &[u32], total_len: usize) -> Word {
    debug_assert_eq!(core.len() + kept.len(), total_len);
    let drop: BTreeSet<u32> = a_set.iter().copied().collect();
    let mut letters = Vec::with_capacity(total_len);
    let mut core_it = core.letters();
    let mut kept_it = kept.letters();
    for pos in 1..=total_len {
        if drop.contains(&(pos as u32)) {
            letters.push(kept_it.next().expect("a_set larger than kept word"));
        } else {
            letters.push(core_it.next().expect("core word too short"));
        }
    }
    Word::from_letters(&letters)
}

/// Checks, for a lowest word `l`, that deleting the `A` positions is a
/// bijection from the component of `l` onto the component of `hat(l)` that
/// commutes with all four operators, and that the component is exactly the
/// set of words with the right restriction and a reduced image in the
/// reduced component.
pub fn verify_hat_bijection(l: &Word) -> Result<Report> {
    let check = "hat_bijection";
    let n = l.len() as u32;
    let dec = decompose_lowest(l)?;
    let l_hat = hat(l, &dec.a_set)?;
    let l_bar = bar(l, &dec.a_set)?;

    let comp = component_of(l, Mode::Q2);
    let reduced = component_of(&l_hat, Mode::Q2);

    // Membership: interleaving the reduced component with the fixed
    // restriction must reproduce the original component exactly.
    let rebuilt: BTreeSet<Word> = reduced
        .members
        .iter()
        .map(|c| interleave(c, &l_bar, &dec.a_set, l.len()))
        .collect();
    let original: BTreeSet<Word> = comp.members.iter().copied().collect();
    if rebuilt != original {
        return Ok(Report::fail(
            check,
            Some(n),
            serde_json::json!({
                "word": l.to_string(),
                "reason": "membership mismatch",
                "component_size": original.len(),
                "rebuilt_size": rebuilt.len(),
            }),
        ));
    }

    // Every member must reduce correctly and commute with every operator.
    for b in &comp.members {
        let b_hat = hat(b, &dec.a_set)?;
        if bar(b, &dec.a_set)? != l_bar {
            return Ok(Report::fail(
                check,
                Some(n),
                serde_json::json!({"word": b.to_string(), "reason": "restriction differs"}),
            ));
        }
        for op in CrystalOp::ALL {
            let image_then_hat = match apply(op, b) {
                Some(img) => Some(hat(&img, &dec.a_set)?),
                None => None,
            };
            let hat_then_image = apply(op, &b_hat);
            if image_then_hat != hat_then_image {
                return Ok(Report::fail(
                    check,
                    Some(n),
                    serde_json::json!({
                        "word": b.to_string(),
                        "op": op.name(),
                        "hat_of_image": crate::word::display_opt(image_then_hat),
                        "image_of_hat": crate::word::display_opt(hat_then_image),
                    }),
                ));
            }
        }
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
    fn srlp_examples() {
        assert!(is_srlp(&w("22122122")));
        assert!(is_srlp(&w("2222")));
        assert!(!is_srlp(&w("1212")));
        assert!(is_srlp(&w("2")));
        assert!(!is_srlp(&w("1")));
    }

    #[test]
    fn trivial_lp_examples() {
        assert!(is_trivial_lp(&w("12")));
        assert!(is_trivial_lp(&w("1122")));
        assert!(!is_trivial_lp(&w("1212")));
        assert!(!is_trivial_lp(&w("21")));
        assert!(!is_trivial_lp(&w("1")));
    }

    #[test]
    fn decompose_worked_example() {
        let dec = decompose_lowest(&w("22122122")).unwrap();
        assert_eq!(dec.a_set, vec![3, 4, 6, 7]);
        assert_eq!(dec.trailing_two, 8);
        assert_eq!(
            dec.segments,
            vec![
                Segment {
                    kind: SegmentKind::TwoBlock,
                    start: 1,
                    end: 2
                },
                Segment {
                    kind: SegmentKind::TrivialLp,
                    start: 3,
                    end: 4
                },
                Segment {
                    kind: SegmentKind::TwoBlock,
                    start: 5,
                    end: 5
                },
                Segment {
                    kind: SegmentKind::TrivialLp,
                    start: 6,
                    end: 7
                },
            ]
        );
        assert_eq!(hat(&w("22122122"), &dec.a_set).unwrap(), w("2222"));
        assert_eq!(bar(&w("22122122"), &dec.a_set).unwrap(), w("1212"));
    }

    #[test]
    fn decompose_all_twos() {
        let dec = decompose_lowest(&w("2222")).unwrap();
        assert_eq!(
            dec.segments,
            vec![Segment {
                kind: SegmentKind::TwoBlock,
                start: 1,
                end: 3
            }]
        );
        assert_eq!(dec.trailing_two, 4);
        assert!(dec.a_set.is_empty());
    }

    #[test]
    fn decompose_short() {
        let dec = decompose_lowest(&w("122")).unwrap();
        assert_eq!(
            dec.segments,
            vec![Segment {
                kind: SegmentKind::TrivialLp,
                start: 1,
                end: 2
            }]
        );
        assert_eq!(dec.a_set, vec![1, 2]);
        assert_eq!(dec.trailing_two, 3);
    }

    #[test]
    fn decompose_rejects_non_lowest() {
        assert!(matches!(
            decompose_lowest(&w("1212")),
            Err(Error::NotLowest(_))
        ));
    }

    #[test]
    fn hat_bar_basics() {
        assert_eq!(hat(&w("1111"), &[]).unwrap(), w("1111"));
        assert!(hat(&w("12"), &[2]).is_err());
        assert!(hat(&w("12"), &[5]).is_err());
        assert_eq!(bar(&w("1111"), &[]).unwrap(), Word::empty());
    }

    #[test]
    fn hat_bijection_examples() {
        let rep = verify_hat_bijection(&w("22122122")).unwrap();
        assert!(rep.passed());
        let comp = component_of(&w("22122122"), Mode::Q2);
        let reduced = component_of(&w("2222"), Mode::Q2);
        assert_eq!(comp.members.len(), reduced.members.len());
        assert_eq!(comp.members.len(), 8);

        assert!(verify_hat_bijection(&w("2222")).unwrap().passed());

        assert!(verify_hat_bijection(&w("122")).unwrap().passed());
        let c = component_of(&w("122"), Mode::Q2);
        let twos = component_of(&w("2"), Mode::Q2);
        assert_eq!(c.members.len(), twos.members.len());
        assert_eq!(twos.members.len(), 2);
    }
}
