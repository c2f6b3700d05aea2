//! Literal recursive evaluation of the tensor product rule.
//!
//! This is the independent cross-check for the signature-based operators in
//! [`crate::word`]: a word is bracketed left-associatively as
//! `(a_1 ... a_{n-1}) (x) a_n`, and at every level the rule decides which
//! factor an operator descends into. The even rule compares phi of the left
//! factor with eps of the right; the odd rule sends the action left exactly
//! when the right factor has weight zero. No signature shortcut is used
//! anywhere in this module.

use crate::word::{wt, CrystalOp, Letter, Word};

fn eps_letter(l: Letter) -> i64 {
    match l {
        Letter::One => 0,
        Letter::Two => 1,
    }
}

fn phi_letter(l: Letter) -> i64 {
    match l {
        Letter::One => 1,
        Letter::Two => 0,
    }
}

/// eps by the recursive formula
/// `eps(b1 (x) b2) = max(eps(b1) - phi(b1) + eps(b2), eps(b1))`.
pub fn eps_rec(w: &Word) -> i64 {
    let (mut e, mut p) = (0i64, 0i64);
    for letter in w.letters() {
        let (le, lp) = (eps_letter(letter), phi_letter(letter));
        let e_next = (e - p + le).max(e);
        let p_next = (p - le + lp).max(lp);
        e = e_next;
        p = p_next;
    }
    e
}

/// phi by the recursive formula
/// `phi(b1 (x) b2) = max(phi(b1) - eps(b2) + phi(b2), phi(b2))`.
pub fn phi_rec(w: &Word) -> i64 {
    let (mut e, mut p) = (0i64, 0i64);
    for letter in w.letters() {
        let (le, lp) = (eps_letter(letter), phi_letter(letter));
        let e_next = (e - p + le).max(e);
        let p_next = (p - le + lp).max(lp);
        e = e_next;
        p = p_next;
    }
    p
}

fn apply_letter(op: CrystalOp, l: Letter) -> Option<Letter> {
    match (op, l) {
        (CrystalOp::FEven, Letter::One) => Some(Letter::Two),
        (CrystalOp::FEven, Letter::Two) => None,
        (CrystalOp::EEven, Letter::Two) => Some(Letter::One),
        (CrystalOp::EEven, Letter::One) => None,
        (CrystalOp::FOdd, Letter::One) => Some(Letter::Two),
        (CrystalOp::FOdd, Letter::Two) => None,
        (CrystalOp::EOdd, Letter::Two) => Some(Letter::One),
        (CrystalOp::EOdd, Letter::One) => None,
    }
}

/// Applies `op` to `w` by recursive descent through the two-factor rule.
/// Agrees with the signature-based operators on every input; kept separate
/// so the two routes stay independent.
pub fn tensor_rule_apply(w: &Word, op: CrystalOp) -> Option<Word> {
    if w.is_empty() {
        return None;
    }
    if w.len() == 1 {
        let letter = apply_letter(op, w.letter(1))?;
        return Some(w.with_letter(1, letter));
    }
    let prefix = w.init();
    let last = w.letter(w.len());
    let act_left = match op {
        CrystalOp::EEven => phi_rec(&prefix) >= eps_letter(last),
        CrystalOp::FEven => phi_rec(&prefix) > eps_letter(last),
        // Odd rule: descend left only when the right factor has weight zero.
        CrystalOp::EOdd | CrystalOp::FOdd => {
            let weight = wt(&Word::from_letters(&[last]));
            weight.m1 == 0 && weight.m2 == 0
        }
    };
    if act_left {
        let new_prefix = tensor_rule_apply(&prefix, op)?;
        Some(new_prefix.append(last))
    } else {
        let letter = apply_letter(op, last)?;
        Some(w.with_letter(w.len(), letter))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{self, apply};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rule_examples() {
        assert_eq!(
            tensor_rule_apply(&w("1112"), CrystalOp::FEven),
            Some(w("2112"))
        );
        assert_eq!(
            tensor_rule_apply(&w("2221"), CrystalOp::FEven),
            Some(w("2222"))
        );
        assert_eq!(tensor_rule_apply(&w("2"), CrystalOp::EEven), Some(w("1")));
    }

    #[test]
    fn recursive_statistics_match_signatures() {
        for n in 1..=8 {
            for word in Word::all_words(n) {
                assert_eq!(eps_rec(&word), word::eps(&word) as i64, "eps {word}");
                assert_eq!(phi_rec(&word), word::phi(&word) as i64, "phi {word}");
            }
        }
    }

    #[test]
    fn agrees_with_signature_operators_small() {
        for n in 1..=8 {
            for word in Word::all_words(n) {
                for op in CrystalOp::ALL {
                    assert_eq!(
                        tensor_rule_apply(&word, op),
                        apply(op, &word),
                        "{op} on {word}"
                    );
                }
            }
        }
    }
}
