//! Words over {1,2}, their weights, and the four crystal operators.
//!
//! A word `a_1 a_2 ... a_n` stands for the tensor element
//! `a_1 (x) a_2 (x) ... (x) a_n` of the n-fold tensor power of the
//! two-element crystal {1,2}. The even (solid-arrow) operators lower or
//! raise along the sl2 string through the word; the odd (dashed-arrow)
//! operators act on the last letter only. All operators are total
//! functions returning `None` where the crystal operator kills the
//! element.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One tensor factor: the crystal of the 2-dimensional natural module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Two,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::One => Letter::Two,
            Letter::Two => Letter::One,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::One => '1',
            Letter::Two => '2',
        }
    }

    fn bit(self) -> u32 {
        match self {
            Letter::One => 0,
            Letter::Two => 1,
        }
    }

    fn from_bit(bit: u32) -> Letter {
        if bit & 1 == 0 {
            Letter::One
        } else {
            Letter::Two
        }
    }
}

/// Maximum supported word length; one bit per letter in a `u32`.
pub const MAX_WORD_LEN: usize = 32;

/// A word over {1,2}, stored as a bit string: letter 1 is bit 0, letter 2
/// is bit 1, position 1 at the least significant end. The packed form makes
/// exhaustive enumeration of all 2^n words plain integer counting.
///
/// Positions are 1-based throughout, matching the usual sequence notation
/// `a_1 ... a_n`. The empty word is allowed internally (it is the scalar
/// slot of the basis recursion) but rejected by the string parser.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u32,
    len: u8,
}

impl Word {
    pub fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    /// Assembles a word from packed bits; bits above `len` are cleared.
    pub fn from_bits(bits: u32, len: usize) -> Word {
        assert!(len <= MAX_WORD_LEN);
        let mask = if len == MAX_WORD_LEN {
            u32::MAX
        } else {
            (1u32 << len) - 1
        };
        Word {
            bits: bits & mask,
            len: len as u8,
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() <= MAX_WORD_LEN);
        let mut bits = 0u32;
        for (i, l) in letters.iter().enumerate() {
            bits |= l.bit() << i;
        }
        Word {
            bits,
            len: letters.len() as u8,
        }
    }

    /// `letter^n`, e.g. `repeated(Letter::One, 4)` is `1111`.
    pub fn repeated(letter: Letter, n: usize) -> Word {
        let mut w = Word::empty();
        for _ in 0..n {
            w = w.append(letter);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> Letter {
        debug_assert!(pos >= 1 && pos <= self.len());
        Letter::from_bit(self.bits >> (pos - 1))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(1))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.len()).map(|i| self.letter(i))
    }

    pub fn count(&self, letter: Letter) -> usize {
        let twos = self.bits.count_ones() as usize;
        match letter {
            Letter::Two => twos,
            Letter::One => self.len() - twos,
        }
    }

    /// Replaces the letter at 1-based `pos`.
    pub fn with_letter(&self, pos: usize, letter: Letter) -> Word {
        debug_assert!(pos >= 1 && pos <= self.len());
        let mask = 1u32 << (pos - 1);
        let bits = (self.bits & !mask) | (letter.bit() << (pos - 1));
        Word {
            bits,
            len: self.len,
        }
    }

    pub fn flip_at(&self, pos: usize) -> Word {
        debug_assert!(pos >= 1 && pos <= self.len());
        Word {
            bits: self.bits ^ (1u32 << (pos - 1)),
            len: self.len,
        }
    }

    /// The letter-flip involution `1 <-> 2` applied at every position;
    /// translates between crystal words and module labels.
    pub fn prime(&self) -> Word {
        Word::from_bits(!self.bits, self.len())
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        debug_assert!(self.len() < MAX_WORD_LEN);
        Word {
            bits: (self.bits << 1) | letter.bit(),
            len: self.len + 1,
        }
    }

    pub fn append(&self, letter: Letter) -> Word {
        debug_assert!(self.len() < MAX_WORD_LEN);
        Word {
            bits: self.bits | (letter.bit() << self.len),
            len: self.len + 1,
        }
    }

    /// Everything but the last letter.
    pub fn init(&self) -> Word {
        debug_assert!(!self.is_empty());
        Word::from_bits(self.bits, self.len() - 1)
    }

    /// Everything but the first letter.
    pub fn tail(&self) -> Word {
        debug_assert!(!self.is_empty());
        Word {
            bits: self.bits >> 1,
            len: self.len - 1,
        }
    }

    /// Removes the two letters at 1-based positions `pos`, `pos + 1`.
    pub fn remove_pair(&self, pos: usize) -> Word {
        debug_assert!(pos >= 1 && pos < self.len());
        let bits = self.bits as u64;
        let low = bits & ((1u64 << (pos - 1)) - 1);
        let high = (bits >> (pos + 1)) << (pos - 1);
        Word {
            bits: (low | high) as u32,
            len: self.len - 2,
        }
    }

    /// Inserts `l1 l2` after 1-based position `k` (so they occupy
    /// positions `k+1`, `k+2` of the result).
    pub fn insert_pair(&self, k: usize, l1: Letter, l2: Letter) -> Word {
        debug_assert!(k <= self.len());
        debug_assert!(self.len() + 2 <= MAX_WORD_LEN);
        let bits = self.bits as u64;
        let low = bits & ((1u64 << k) - 1);
        let high = (bits >> k) << (k + 2);
        let pair = ((l1.bit() | (l2.bit() << 1)) as u64) << k;
        Word {
            bits: (low | high | pair) as u32,
            len: self.len + 2,
        }
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert!(self.len() + other.len() <= MAX_WORD_LEN);
        Word {
            bits: (self.bits as u64 | ((other.bits as u64) << self.len)) as u32,
            len: self.len + other.len,
        }
    }

    /// All words of length `n` in lexicographic order (1 < 2).
    pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
        assert!(n <= MAX_WORD_LEN);
        (0u64..(1u64 << n)).map(move |k| {
            // Reading k's bits from the most significant end yields words in
            // lexicographic order; reverse into the position-1-at-LSB layout.
            let rev = (k as u32).reverse_bits() >> (32 - n.max(1));
            if n == 0 {
                Word::empty()
            } else {
                Word::from_bits(rev, n)
            }
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Shorter words first; same-length words lexicographically with 1 < 2.
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.len.cmp(&other.len) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The first differing position is the lowest differing bit.
        let pos = diff.trailing_zeros();
        if self.bits >> pos & 1 == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        if s.is_empty() || s.len() > MAX_WORD_LEN {
            return Err(Error::InvalidWord(s.to_string()));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '1' => letters.push(Letter::One),
                '2' => letters.push(Letter::Two),
                _ => return Err(Error::InvalidWord(s.to_string())),
            }
        }
        Ok(Word::from_letters(&letters))
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Serializes an operator result: a word, or the literal "0" when the
/// operator kills the element.
pub fn display_opt(w: Option<Word>) -> String {
    match w {
        Some(w) => w.to_string(),
        None => "0".to_string(),
    }
}

/// Weight `m1*e1 + m2*e2`, with `m1` counting 1-letters and `m2` counting
/// 2-letters; always in the nonnegative cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Weight {
    pub m1: u32,
    pub m2: u32,
}

pub fn wt(w: &Word) -> Weight {
    Weight {
        m1: w.count(Letter::One) as u32,
        m2: w.count(Letter::Two) as u32,
    }
}

/// `<k1 - k2, wt(w)> = m1 - m2`, the sl2 weight.
pub fn sl2_weight(w: &Word) -> i64 {
    w.count(Letter::One) as i64 - w.count(Letter::Two) as i64
}

/// The reduced +/- pattern of a word: letter 1 contributes "+", letter 2
/// contributes "-", and every "+" immediately left of a "-" (ignoring
/// already-cancelled symbols) cancels. Survivors read `-...-+...+`;
/// the uncancelled minus positions count eps, the plus positions phi.
///
/// A single left-to-right pass suffices: a pending "+" stack absorbs each
/// "-", and an unmatched "-" can never cancel later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    /// 1-based positions of uncancelled "-" (all precede `phi_positions`).
    pub eps_positions: Vec<u32>,
    /// 1-based positions of uncancelled "+".
    pub phi_positions: Vec<u32>,
}

pub fn signature(w: &Word) -> Signature {
    let mut eps_positions = Vec::new();
    let mut plus_stack = Vec::new();
    for pos in 1..=w.len() {
        match w.letter(pos) {
            Letter::One => plus_stack.push(pos as u32),
            Letter::Two => {
                if plus_stack.pop().is_none() {
                    eps_positions.push(pos as u32);
                }
            }
        }
    }
    Signature {
        eps_positions,
        phi_positions: plus_stack,
    }
}

/// Number of uncancelled "-": how many times the even raising operator
/// applies before killing the word.
pub fn eps(w: &Word) -> u32 {
    signature(w).eps_positions.len() as u32
}

/// Number of uncancelled "+": length of the remaining even lowering string.
pub fn phi(w: &Word) -> u32 {
    signature(w).phi_positions.len() as u32
}

/// Even lowering operator: flips the leftmost uncancelled "+" from 1 to 2,
/// or `None` when phi = 0. Shifts the weight by -alpha_1.
pub fn f_even(w: &Word) -> Option<Word> {
    let sig = signature(w);
    let pos = *sig.phi_positions.first()?;
    Some(w.flip_at(pos as usize))
}

/// Even raising operator: flips the rightmost uncancelled "-" from 2 to 1,
/// or `None` when eps = 0.
pub fn e_even(w: &Word) -> Option<Word> {
    let sig = signature(w);
    let pos = *sig.eps_positions.last()?;
    Some(w.flip_at(pos as usize))
}

/// Odd lowering operator: every nonempty suffix has nonzero weight, so the
/// tensor rule sends the action to the last letter; flips a trailing 1 to 2.
pub fn f_odd(w: &Word) -> Option<Word> {
    match w.last()? {
        Letter::One => Some(w.flip_at(w.len())),
        Letter::Two => None,
    }
}

/// Odd raising operator: flips a trailing 2 to 1.
pub fn e_odd(w: &Word) -> Option<Word> {
    match w.last()? {
        Letter::Two => Some(w.flip_at(w.len())),
        Letter::One => None,
    }
}

/// The four crystal operators, as data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrystalOp {
    EEven,
    FEven,
    EOdd,
    FOdd,
}

impl CrystalOp {
    pub const ALL: [CrystalOp; 4] = [
        CrystalOp::EEven,
        CrystalOp::FEven,
        CrystalOp::EOdd,
        CrystalOp::FOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CrystalOp::EEven => "e_even",
            CrystalOp::FEven => "f_even",
            CrystalOp::EOdd => "e_odd",
            CrystalOp::FOdd => "f_odd",
        }
    }
}

impl fmt::Display for CrystalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn apply(op: CrystalOp, w: &Word) -> Option<Word> {
    match op {
        CrystalOp::EEven => e_even(w),
        CrystalOp::FEven => f_even(w),
        CrystalOp::EOdd => e_odd(w),
        CrystalOp::FOdd => f_odd(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn weight_counts_letters() {
        assert_eq!(wt(&w("1111")), Weight { m1: 4, m2: 0 });
        assert_eq!(wt(&w("2122")), Weight { m1: 1, m2: 3 });
        assert_eq!(wt(&w("1212")), Weight { m1: 2, m2: 2 });
    }

    #[test]
    fn sl2_weight_is_m1_minus_m2() {
        assert_eq!(sl2_weight(&w("1111")), 4);
        assert_eq!(sl2_weight(&w("2222")), -4);
        assert_eq!(sl2_weight(&w("2112")), 0);
    }

    #[test]
    fn signature_examples() {
        let s = signature(&w("1112"));
        assert_eq!(s.eps_positions, Vec::<u32>::new());
        assert_eq!(s.phi_positions, vec![1, 2]);

        let s = signature(&w("2121"));
        assert_eq!(s.eps_positions, vec![1]);
        assert_eq!(s.phi_positions, vec![4]);

        let s = signature(&w("1122"));
        assert_eq!(s.eps_positions, Vec::<u32>::new());
        assert_eq!(s.phi_positions, Vec::<u32>::new());
    }

    #[test]
    fn eps_phi_examples() {
        assert_eq!((phi(&w("1111")), eps(&w("1111"))), (4, 0));
        assert_eq!((phi(&w("2121")), eps(&w("2121"))), (1, 1));
        assert_eq!((phi(&w("2122")), eps(&w("2122"))), (0, 2));
    }

    #[test]
    fn f_even_examples() {
        assert_eq!(f_even(&w("1111")), Some(w("2111")));
        assert_eq!(f_even(&w("1112")), Some(w("2112")));
        assert_eq!(f_even(&w("1122")), None);
    }

    #[test]
    fn e_even_examples() {
        assert_eq!(e_even(&w("2111")), Some(w("1111")));
        assert_eq!(e_even(&w("2121")), Some(w("1121")));
        assert_eq!(e_even(&w("1111")), None);
    }

    #[test]
    fn f_odd_examples() {
        assert_eq!(f_odd(&w("1111")), Some(w("1112")));
        assert_eq!(f_odd(&w("2121")), Some(w("2122")));
        assert_eq!(f_odd(&w("1112")), None);
    }

    #[test]
    fn e_odd_examples() {
        assert_eq!(e_odd(&w("1122")), Some(w("1121")));
        assert_eq!(e_odd(&w("1112")), Some(w("1111")));
        assert_eq!(e_odd(&w("2121")), None);
    }

    #[test]
    fn single_letter_crystal() {
        assert_eq!(f_even(&w("1")), Some(w("2")));
        assert_eq!(f_even(&w("2")), None);
        assert_eq!(e_even(&w("2")), Some(w("1")));
        assert_eq!(f_odd(&w("1")), Some(w("2")));
        assert_eq!(e_odd(&w("2")), Some(w("1")));
    }

    #[test]
    fn lex_order_and_enumeration() {
        let words: Vec<Word> = Word::all_words(2).collect();
        assert_eq!(
            words.iter().map(Word::to_string).collect::<Vec<_>>(),
            vec!["11", "12", "21", "22"]
        );
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn round_trip_parse_display() {
        for n in 1..=6 {
            for word in Word::all_words(n) {
                assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
            }
        }
        assert!("".parse::<Word>().is_err());
        assert!("120".parse::<Word>().is_err());
        assert!("abc".parse::<Word>().is_err());
    }

    #[test]
    fn splice_operations() {
        assert_eq!(w("2211").remove_pair(2), w("21"));
        assert_eq!(w("21").insert_pair(1, Letter::One, Letter::Two), w("2121"));
        assert_eq!(w("21").insert_pair(0, Letter::One, Letter::Two), w("1221"));
        assert_eq!(w("21").insert_pair(2, Letter::Two, Letter::One), w("2121"));
        assert_eq!(w("12").prime(), w("21"));
        assert_eq!(w("112").concat(&w("21")), w("11221"));
    }
}
