//! Crystal graphs over all words of a fixed length, connected components,
//! and highest/lowest weight detection.
//!
//! Solid edges are the even lowering operator, dashed edges the odd one.
//! Everything here is deterministic: nodes are kept in lexicographic order,
//! component members sorted, components listed by their smallest member.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::word::{self, apply, CrystalOp, Letter, Word};

/// Which operator family generates the graph: only the even pair, or the
/// even pair together with the odd pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Gl2,
    Q2,
}

impl Mode {
    /// Lowering operators contributing edges in this mode.
    pub fn lowering_ops(self) -> &'static [CrystalOp] {
        match self {
            Mode::Gl2 => &[CrystalOp::FEven],
            Mode::Q2 => &[CrystalOp::FEven, CrystalOp::FOdd],
        }
    }

    /// All operators (lowering and raising) defined in this mode.
    pub fn all_ops(self) -> &'static [CrystalOp] {
        match self {
            Mode::Gl2 => &[CrystalOp::FEven, CrystalOp::EEven],
            Mode::Q2 => &[
                CrystalOp::FEven,
                CrystalOp::EEven,
                CrystalOp::FOdd,
                CrystalOp::EOdd,
            ],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Gl2 => f.write_str("gl2"),
            Mode::Q2 => f.write_str("q2"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "gl2" => Ok(Mode::Gl2),
            "q2" => Ok(Mode::Q2),
            other => Err(Error::Domain(format!(
                "unknown mode {other:?}: expected \"gl2\" or \"q2\""
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeLabel {
    Even,
    Odd,
}

impl EdgeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Even => "even",
            EdgeLabel::Odd => "odd",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: Word,
    pub dst: Word,
    pub label: EdgeLabel,
}

/// The full crystal graph on all `2^n` words of length `n`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub n: usize,
    pub mode: Mode,
    /// All words of length `n`, lexicographically sorted.
    pub nodes: Vec<Word>,
    /// Edges ordered by (source, even-before-odd).
    pub edges: Vec<Edge>,
}

/// Default ceiling for full-graph construction.
pub const DEFAULT_GRAPH_CAP: usize = 16;
/// Default ceiling for matrix-sized computations (2^n x 2^n elimination).
pub const DEFAULT_MATRIX_CAP: usize = 12;
/// Ceiling for single-component searches; components stay small, only the
/// word length itself is bounded.
pub const COMPONENT_CAP: usize = 24;

/// Builds the crystal graph of all words of length `n`.
pub fn build_graph(n: usize, mode: Mode, cap: usize) -> Result<CrystalGraph> {
    if n < 1 || n > cap {
        return Err(Error::SizeLimit {
            what: "full crystal graph",
            n,
            cap,
        });
    }
    let mut nodes = Vec::with_capacity(1usize << n);
    let mut edges = Vec::new();
    for src in Word::all_words(n) {
        nodes.push(src);
        for &op in mode.lowering_ops() {
            if let Some(dst) = apply(op, &src) {
                let label = match op {
                    CrystalOp::FEven => EdgeLabel::Even,
                    CrystalOp::FOdd => EdgeLabel::Odd,
                    _ => unreachable!(),
                };
                edges.push(Edge { src, dst, label });
            }
        }
    }
    Ok(CrystalGraph {
        n,
        mode,
        nodes,
        edges,
    })
}

impl CrystalGraph {
    /// Connected components, discovered by scanning seeds in lexicographic
    /// order; each component's members are sorted.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; 1usize << self.n];
        let mut out = Vec::new();
        for &seed in &self.nodes {
            if seen[seed.bits() as usize] {
                continue;
            }
            let comp = component_of(&seed, self.mode);
            for m in &comp.members {
                seen[m.bits() as usize] = true;
            }
            out.push(comp);
        }
        out
    }
}

/// A connected component of the crystal graph, closed under the mode's
/// operators and their inverses.
#[derive(Clone, Debug)]
pub struct Component {
    pub seed: Word,
    pub mode: Mode,
    /// Sorted member list.
    pub members: Vec<Word>,
    /// Members killed by every raising operator of the mode.
    pub highest: Vec<Word>,
    /// Members at the bottom: in q2 mode the lowest-weight vectors, in gl2
    /// mode the ends of strings (phi = 0).
    pub lowest: Vec<Word>,
}

/// The connected component of `w` under the operators of `mode`.
pub fn component_of(w: &Word, mode: Mode) -> Component {
    let mut visited = BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert(*w);
    queue.push_back(*w);
    while let Some(cur) = queue.pop_front() {
        for &op in mode.all_ops() {
            if let Some(next) = apply(op, &cur) {
                if visited.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    let members: Vec<Word> = visited.into_iter().collect();
    let highest = members
        .iter()
        .copied()
        .filter(|m| is_highest(m, mode))
        .collect();
    let lowest = members
        .iter()
        .copied()
        .filter(|m| match mode {
            Mode::Q2 => is_lowest(m),
            Mode::Gl2 => word::phi(m) == 0,
        })
        .collect();
    Component {
        seed: *w,
        mode,
        members,
        highest,
        lowest,
    }
}

/// Killed by every raising operator of the mode.
pub fn is_highest(w: &Word, mode: Mode) -> bool {
    match mode {
        Mode::Gl2 => word::e_even(w).is_none(),
        Mode::Q2 => word::e_even(w).is_none() && word::e_odd(w).is_none(),
    }
}

/// Lowest weight vector: phi = 0 and the top of the even string is killed
/// by both raising operators.
pub fn is_lowest(w: &Word) -> bool {
    if word::phi(w) != 0 {
        return false;
    }
    let mut cur = *w;
    while let Some(up) = word::e_even(&cur) {
        cur = up;
    }
    is_highest(&cur, Mode::Q2)
}

/// Splits a component into its even-edge-connected parts, each reported
/// with its own highest words. Preserves the member universe: the parts
/// partition `c.members`.
pub fn gl2_split(c: &Component) -> Vec<Component> {
    let members: BTreeSet<Word> = c.members.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut parts = Vec::new();
    for &seed in &c.members {
        if seen.contains(&seed) {
            continue;
        }
        let part = component_of(&seed, Mode::Gl2);
        debug_assert!(part.members.iter().all(|m| members.contains(m)));
        for m in &part.members {
            seen.insert(*m);
        }
        parts.push(part);
    }
    parts
}

/// Checks the explicit description of the component of the all-ones word:
/// `f_odd . f_even^x (1^r)` equals `2^x 1^(r-1-x) 2` for `0 <= x <= r-2`,
/// equals `2^r = f_even^r (1^r)` at `x = r-1`, and dies for larger `x`;
/// and the whole component is the disjoint union of the even components of
/// `1^r` and `1^(r-1) 2`.
pub fn check_c1r_formula(r: usize) -> Report {
    let check = "c1r_formula";
    if r < 2 {
        return Report::fail(
            check,
            Some(r as u32),
            serde_json::json!({"reason": "requires r >= 2"}),
        );
    }
    let ones = Word::repeated(Letter::One, r);
    for x in 0..=(r + 1) {
        let mut cur = Some(ones);
        for _ in 0..x {
            cur = cur.and_then(|w| word::f_even(&w));
        }
        let got = cur.and_then(|w| word::f_odd(&w));
        let expected = if x <= r.saturating_sub(2) {
            let mut letters = vec![Letter::Two; x];
            letters.extend(std::iter::repeat_n(Letter::One, r - 1 - x));
            letters.push(Letter::Two);
            Some(Word::from_letters(&letters))
        } else if x == r - 1 {
            Some(Word::repeated(Letter::Two, r))
        } else {
            None
        };
        if got != expected {
            return Report::fail(
                check,
                Some(r as u32),
                serde_json::json!({
                    "x": x,
                    "got": word::display_opt(got),
                    "expected": word::display_opt(expected),
                }),
            );
        }
    }
    // At x = r-1 the two routes must converge on the all-twos word.
    let mut bottom = Some(ones);
    for _ in 0..r {
        bottom = bottom.and_then(|w| word::f_even(&w));
    }
    if bottom != Some(Word::repeated(Letter::Two, r)) {
        return Report::fail(
            check,
            Some(r as u32),
            serde_json::json!({"reason": "f_even^r (1^r) is not 2^r"}),
        );
    }

    let q2 = component_of(&ones, Mode::Q2);
    let even_ones = component_of(&ones, Mode::Gl2);
    let twos_tail = ones.init().append(Letter::Two);
    let even_tail = component_of(&twos_tail, Mode::Gl2);
    let mut union: Vec<Word> = even_ones
        .members
        .iter()
        .chain(even_tail.members.iter())
        .copied()
        .collect();
    union.sort();
    let disjoint = even_ones
        .members
        .iter()
        .all(|m| !even_tail.members.contains(m));
    if !disjoint || union != q2.members {
        return Report::fail(
            check,
            Some(r as u32),
            serde_json::json!({
                "reason": "component is not the stated disjoint union",
                "component_size": q2.members.len(),
                "union_size": union.len(),
            }),
        );
    }
    Report::pass(check, Some(r as u32))
}
