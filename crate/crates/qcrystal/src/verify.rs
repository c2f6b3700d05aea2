//! Named exhaustive verification suites.
//!
//! Each suite sweeps every word (or label, or index set) up to a length
//! bound and aggregates one report per named check; the first failure is
//! returned as the counterexample. Bounds default to the sizes the checks
//! are expected to hold at and can be overridden uniformly.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gbasis::{check_ga2_implies_ga1, gbasis, gbasis_dense, Transition};
use crate::graph::{check_c1r_formula, component_of, gl2_split, is_lowest, Mode};
use crate::ktheory::{
    coproduct_e, coproduct_f, crystal_vs_ktheory, ebar_on_simple, fbar_head_check, op_e, op_f,
    upsilon, verify_odd_relations, verify_sl2_relations, KClass,
};
use crate::lowest::{is_srlp, verify_hat_bijection};
use crate::parabolic::{check_gl2_invariance, check_q2_invariance, check_subcrystal, FinSet};
use crate::report::Report;
use crate::tensor_rule::{eps_rec, phi_rec, tensor_rule_apply};
use crate::word::{self, apply, CrystalOp, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Oracle,
    Srlp,
    Hat,
    C1r,
    Gbasis,
    Ktheory,
    Parabolic,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "axioms",
        "oracle",
        "srlp",
        "hat",
        "c1r",
        "gbasis",
        "ktheory",
        "parabolic",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Oracle => "oracle",
            Suite::Srlp => "srlp",
            Suite::Hat => "hat",
            Suite::C1r => "c1r",
            Suite::Gbasis => "gbasis",
            Suite::Ktheory => "ktheory",
            Suite::Parabolic => "parabolic",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "oracle" => Ok(Suite::Oracle),
            "srlp" => Ok(Suite::Srlp),
            "hat" => Ok(Suite::Hat),
            "c1r" => Ok(Suite::C1r),
            "gbasis" => Ok(Suite::Gbasis),
            "ktheory" => Ok(Suite::Ktheory),
            "parabolic" => Ok(Suite::Parabolic),
            "all" => Ok(Suite::All),
            other => Err(Error::Domain(format!(
                "unknown suite {other:?}: expected one of {}",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

/// Aggregated outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Report>,
    pub status: crate::report::Status,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Report>) -> SuiteReport {
        let passed = checks.iter().all(Report::passed);
        SuiteReport {
            suite: suite.name().to_string(),
            checks,
            status: if passed {
                crate::report::Status::Pass
            } else {
                crate::report::Status::Fail
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == crate::report::Status::Pass
    }
}

/// Runs a suite. `n_max` overrides every internal bound uniformly; when
/// absent each check uses its default. Matrix-sized checks are always
/// additionally limited by `matrix_cap`.
pub fn run_suite(suite: Suite, n_max: Option<u32>, matrix_cap: usize) -> SuiteReport {
    let checks = match suite {
        Suite::Axioms => axiom_checks(n_max.unwrap_or(10) as usize),
        Suite::Oracle => oracle_checks(n_max.unwrap_or(10) as usize),
        Suite::Srlp => srlp_checks(n_max.unwrap_or(12) as usize),
        Suite::Hat => hat_checks(n_max.unwrap_or(10) as usize),
        Suite::C1r => c1r_checks(n_max.unwrap_or(12) as usize),
        Suite::Gbasis => gbasis_checks(n_max.unwrap_or(10) as usize, matrix_cap),
        Suite::Ktheory => ktheory_checks(
            n_max.unwrap_or(10) as usize,
            n_max.unwrap_or(12) as usize,
            matrix_cap,
        ),
        Suite::Parabolic => parabolic_checks(
            n_max.unwrap_or(10) as usize,
            n_max.unwrap_or(12) as usize,
        ),
        Suite::All => {
            let mut checks = Vec::new();
            for s in [
                Suite::Axioms,
                Suite::Oracle,
                Suite::Srlp,
                Suite::Hat,
                Suite::C1r,
                Suite::Gbasis,
                Suite::Ktheory,
                Suite::Parabolic,
            ] {
                checks.extend(run_suite(s, n_max, matrix_cap).checks);
            }
            checks
        }
    };
    SuiteReport::new(suite, checks)
}

fn fail_word(check: &str, n: usize, w: &Word, detail: &str) -> Report {
    Report::fail(
        check,
        Some(n as u32),
        serde_json::json!({"word": w.to_string(), "detail": detail}),
    )
}

/// Crystal axioms, swept over all words of length up to `n_max`.
pub fn axiom_checks(n_max: usize) -> Vec<Report> {
    let mut inv_even = None;
    let mut inv_odd = None;
    let mut phi_eps = None;
    let mut shifts = None;
    let mut steps = None;
    let mut nilpotence = None;
    'outer: for n in 1..=n_max {
        for w in Word::all_words(n) {
            let (e, p) = (word::eps(&w), word::phi(&w));
            if p as i64 != e as i64 + word::sl2_weight(&w) {
                phi_eps = Some(fail_word(
                    "axiom_phi_eq_eps_plus_weight",
                    n,
                    &w,
                    "phi != eps + <k1-k2, wt>",
                ));
                break 'outer;
            }
            if let Some(v) = word::f_even(&w) {
                if word::e_even(&v) != Some(w) {
                    inv_even = Some(fail_word(
                        "involution_even",
                        n,
                        &w,
                        "e_even(f_even(w)) != w",
                    ));
                    break 'outer;
                }
                let (a, b) = (word::wt(&w), word::wt(&v));
                if b.m1 + 1 != a.m1 || b.m2 != a.m2 + 1 {
                    shifts = Some(fail_word(
                        "weight_shifts",
                        n,
                        &w,
                        "f_even does not shift by -alpha",
                    ));
                    break 'outer;
                }
                if word::eps(&v) != e + 1 || word::phi(&v) != p - 1 {
                    steps = Some(fail_word(
                        "eps_phi_steps",
                        n,
                        &w,
                        "f_even steps eps/phi wrongly",
                    ));
                    break 'outer;
                }
            }
            if let Some(v) = word::e_even(&w) {
                if word::f_even(&v) != Some(w) {
                    inv_even = Some(fail_word(
                        "involution_even",
                        n,
                        &w,
                        "f_even(e_even(w)) != w",
                    ));
                    break 'outer;
                }
                let (a, b) = (word::wt(&w), word::wt(&v));
                if b.m1 != a.m1 + 1 || b.m2 + 1 != a.m2 {
                    shifts = Some(fail_word(
                        "weight_shifts",
                        n,
                        &w,
                        "e_even does not shift by +alpha",
                    ));
                    break 'outer;
                }
                if word::eps(&v) + 1 != e || word::phi(&v) != p + 1 {
                    steps = Some(fail_word(
                        "eps_phi_steps",
                        n,
                        &w,
                        "e_even steps eps/phi wrongly",
                    ));
                    break 'outer;
                }
            }
            if let Some(v) = word::f_odd(&w) {
                if word::e_odd(&v) != Some(w) {
                    inv_odd = Some(fail_word("involution_odd", n, &w, "e_odd(f_odd(w)) != w"));
                    break 'outer;
                }
                let (a, b) = (word::wt(&w), word::wt(&v));
                if b.m1 + 1 != a.m1 || b.m2 != a.m2 + 1 {
                    shifts = Some(fail_word(
                        "weight_shifts",
                        n,
                        &w,
                        "f_odd does not shift by -alpha",
                    ));
                    break 'outer;
                }
            }
            if let Some(v) = word::e_odd(&w) {
                if word::f_odd(&v) != Some(w) {
                    inv_odd = Some(fail_word("involution_odd", n, &w, "f_odd(e_odd(w)) != w"));
                    break 'outer;
                }
                let (a, b) = (word::wt(&w), word::wt(&v));
                if b.m1 != a.m1 + 1 || b.m2 + 1 != a.m2 {
                    shifts = Some(fail_word(
                        "weight_shifts",
                        n,
                        &w,
                        "e_odd does not shift by +alpha",
                    ));
                    break 'outer;
                }
            }
            // After one odd lowering, no even string returns to an odd-lowerable word.
            if let Some(first) = word::f_odd(&w) {
                let mut cur = Some(first);
                for _ in 0..=n + 1 {
                    if let Some(v) = &cur {
                        if word::f_odd(v).is_some() {
                            nilpotence = Some(fail_word(
                                "odd_nilpotence",
                                n,
                                &w,
                                "f_odd f_even^x f_odd != 0",
                            ));
                            break 'outer;
                        }
                        cur = word::f_even(v);
                    } else {
                        break;
                    }
                }
            }
        }
    }
    let top = Some(n_max as u32);
    vec![
        inv_even.unwrap_or_else(|| Report::pass("involution_even", top)),
        inv_odd.unwrap_or_else(|| Report::pass("involution_odd", top)),
        phi_eps.unwrap_or_else(|| Report::pass("axiom_phi_eq_eps_plus_weight", top)),
        shifts.unwrap_or_else(|| Report::pass("weight_shifts", top)),
        steps.unwrap_or_else(|| Report::pass("eps_phi_steps", top)),
        nilpotence.unwrap_or_else(|| Report::pass("odd_nilpotence", top)),
    ]
}

/// Signature-based operators against the recursive tensor-rule evaluation.
pub fn oracle_checks(n_max: usize) -> Vec<Report> {
    let check = "signature_eq_tensor_rule";
    for n in 1..=n_max {
        for w in Word::all_words(n) {
            if word::eps(&w) as i64 != eps_rec(&w) || word::phi(&w) as i64 != phi_rec(&w) {
                return vec![fail_word(check, n, &w, "eps/phi disagree with recursion")];
            }
            for op in CrystalOp::ALL {
                if apply(op, &w) != tensor_rule_apply(&w, op) {
                    return vec![fail_word(check, n, &w, op.name())];
                }
            }
        }
    }
    vec![Report::pass(check, Some(n_max as u32))]
}

/// Lowest-weight characterization plus component structure facts.
pub fn srlp_checks(n_max: usize) -> Vec<Report> {
    let mut out = Vec::new();
    let mut iff = None;
    'a: for n in 1..=n_max {
        for w in Word::all_words(n) {
            if is_lowest(&w) != is_srlp(&w) {
                iff = Some(fail_word(
                    "lowest_iff_srlp",
                    n,
                    &w,
                    "characterization fails",
                ));
                break 'a;
            }
        }
    }
    out.push(iff.unwrap_or_else(|| Report::pass("lowest_iff_srlp", Some(n_max as u32))));

    let mut unique = None;
    let mut partition = None;
    'b: for n in 1..=n_max {
        let mut seen = vec![false; 1usize << n];
        let mut covered = 0usize;
        for seed in Word::all_words(n) {
            if seen[seed.bits() as usize] {
                continue;
            }
            let comp = component_of(&seed, Mode::Q2);
            for m in &comp.members {
                if seen[m.bits() as usize] {
                    partition = Some(fail_word(
                        "components_partition",
                        n,
                        m,
                        "member reached twice",
                    ));
                    break 'b;
                }
                seen[m.bits() as usize] = true;
            }
            covered += comp.members.len();
            if comp.highest.len() != 1 {
                unique = Some(fail_word(
                    "unique_q2_highest",
                    n,
                    &seed,
                    "highest count != 1",
                ));
                break 'b;
            }
            // The even parts must tile the full component exactly.
            let parts = gl2_split(&comp);
            let total: usize = parts.iter().map(|p| p.members.len()).sum();
            if total != comp.members.len() {
                partition = Some(fail_word(
                    "gl2_refines_q2",
                    n,
                    &seed,
                    "even parts do not tile",
                ));
                break 'b;
            }
        }
        if covered != 1 << n {
            partition = Some(Report::fail(
                "components_partition",
                Some(n as u32),
                serde_json::json!({"covered": covered}),
            ));
            break 'b;
        }
    }
    out.push(unique.unwrap_or_else(|| Report::pass("unique_q2_highest", Some(n_max as u32))));
    out.push(partition.unwrap_or_else(|| Report::pass("components_partition", Some(n_max as u32))));
    out
}

/// Deletion bijection for every lowest word up to the bound.
pub fn hat_checks(n_max: usize) -> Vec<Report> {
    let check = "hat_bijection";
    for n in 1..=n_max {
        for l in Word::all_words(n) {
            if !is_srlp(&l) {
                continue;
            }
            match verify_hat_bijection(&l) {
                Ok(rep) if rep.passed() => {}
                Ok(rep) => return vec![rep],
                Err(e) => {
                    return vec![Report::fail(
                        check,
                        Some(n as u32),
                        serde_json::json!({"word": l.to_string(), "error": e.to_string()}),
                    )]
                }
            }
        }
    }
    vec![Report::pass(check, Some(n_max as u32))]
}

/// Explicit component formula for the all-ones seed, r up to the bound.
pub fn c1r_checks(r_max: usize) -> Vec<Report> {
    for r in 2..=r_max {
        let rep = check_c1r_formula(r);
        if !rep.passed() {
            return vec![rep];
        }
    }
    vec![Report::pass("c1r_formula", Some(r_max as u32))]
}

/// Distinguished-basis recursion: strategy independence, sign bounds, the
/// last-letter drop rule, and the exact matrix inverse.
pub fn gbasis_checks(n_max: usize, matrix_cap: usize) -> Vec<Report> {
    let mut out = Vec::new();
    let mut strategy = None;
    let mut signs = None;
    let mut ga2 = None;
    'a: for n in 0..=n_max {
        for a in Word::all_words(n) {
            let g = gbasis(&a);
            if g != gbasis_dense(&a) {
                strategy = Some(fail_word(
                    "strategy_independence",
                    n,
                    &a,
                    "the two strategies differ",
                ));
                break 'a;
            }
            if n >= 1 && (g.coeff(&a) != 1 || g.iter().any(|(_, c)| c.abs() != 1)) {
                signs = Some(fail_word(
                    "coefficient_signs",
                    n,
                    &a,
                    "coefficient outside {-1,+1} or bad diagonal",
                ));
                break 'a;
            }
            let rep = check_ga2_implies_ga1(&a);
            if !rep.passed() {
                ga2 = Some(rep);
                break 'a;
            }
        }
    }
    let top = Some(n_max as u32);
    out.push(strategy.unwrap_or_else(|| Report::pass("strategy_independence", top)));
    out.push(signs.unwrap_or_else(|| Report::pass("coefficient_signs", top)));
    out.push(ga2.unwrap_or_else(|| Report::pass("ga2_implies_ga1", top)));

    let bound = n_max.min(matrix_cap);
    let mut inverse = None;
    for n in 1..=bound {
        match Transition::new(n, matrix_cap) {
            Ok(trans) => {
                let rep = trans.verify_inverse();
                if !rep.passed() {
                    inverse = Some(rep);
                    break;
                }
            }
            Err(e) => {
                inverse = Some(Report::fail(
                    "transition_inverse",
                    Some(n as u32),
                    serde_json::json!({"error": e.to_string()}),
                ));
                break;
            }
        }
    }
    out.push(inverse.unwrap_or_else(|| Report::pass("transition_inverse", Some(bound as u32))));
    out
}

/// Operator relations and the label-by-label match with the word crystal.
pub fn ktheory_checks(n_max: usize, relations_max: usize, matrix_cap: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for n in 1..=relations_max {
        let rep = verify_sl2_relations(n);
        if !rep.passed() {
            out.push(rep);
            break;
        }
        if n == relations_max {
            out.push(rep);
        }
    }
    for n in 1..=relations_max {
        let rep = verify_odd_relations(n);
        if !rep.passed() {
            out.push(rep);
            break;
        }
        if n == relations_max {
            out.push(rep);
        }
    }

    // The relabeling must intertwine the even operators with the slotwise
    // action computed directly on tensor words.
    let mut intertwine = None;
    'c: for n in 1..=n_max {
        for label in Word::all_words(n) {
            let u = KClass::unit(&label);
            if upsilon(&op_e(&u)) != coproduct_e(&upsilon(&u))
                || upsilon(&op_f(&u)) != coproduct_f(&upsilon(&u))
            {
                intertwine = Some(fail_word(
                    "upsilon_intertwines",
                    n,
                    &label,
                    "relabeling does not intertwine",
                ));
                break 'c;
            }
        }
    }
    out.push(intertwine.unwrap_or_else(|| Report::pass("upsilon_intertwines", Some(n_max as u32))));

    let bound = n_max.min(matrix_cap);
    let mut ebar = None;
    let mut fbar = None;
    let mut transport = None;
    'd: for n in 1..=bound {
        let trans = match Transition::new(n, matrix_cap) {
            Ok(t) => t,
            Err(e) => {
                ebar = Some(Report::fail(
                    "ebar_on_simple",
                    Some(n as u32),
                    serde_json::json!({"error": e.to_string()}),
                ));
                break 'd;
            }
        };
        for a in Word::all_words(n) {
            if let Err(e) = ebar_on_simple(&a, &trans) {
                ebar = Some(Report::fail(
                    "ebar_on_simple",
                    Some(n as u32),
                    serde_json::json!({"label": a.to_string(), "error": e.to_string()}),
                ));
                break 'd;
            }
            if a.last() == Some(Letter::Two) {
                match fbar_head_check(&a, &trans) {
                    Ok(rep) if rep.passed() => {}
                    Ok(rep) => {
                        fbar = Some(rep);
                        break 'd;
                    }
                    Err(e) => {
                        fbar = Some(Report::fail(
                            "fbar_head",
                            Some(n as u32),
                            serde_json::json!({"label": a.to_string(), "error": e.to_string()}),
                        ));
                        break 'd;
                    }
                }
            }
        }
        match crystal_vs_ktheory(n, &trans) {
            Ok(rep) if rep.passed() => {}
            Ok(rep) => {
                transport = Some(rep);
                break 'd;
            }
            Err(e) => {
                transport = Some(Report::fail(
                    "crystal_vs_ktheory",
                    Some(n as u32),
                    serde_json::json!({"error": e.to_string()}),
                ));
                break 'd;
            }
        }
    }
    let top = Some(bound as u32);
    out.push(ebar.unwrap_or_else(|| Report::pass("ebar_on_simple", top)));
    out.push(fbar.unwrap_or_else(|| Report::pass("fbar_head", top)));
    out.push(transport.unwrap_or_else(|| Report::pass("crystal_vs_ktheory", top)));
    out
}

/// Descent-set invariance (swept to `invariance_max`), subcrystal closure
/// over every admissible index set, and the two-part split of every
/// eligible component (swept to `n_max`).
pub fn parabolic_checks(n_max: usize, invariance_max: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for n in 1..=invariance_max {
        let rep = check_gl2_invariance(n);
        if !rep.passed() {
            out.push(rep);
            break;
        }
        if n == invariance_max {
            out.push(rep);
        }
    }
    for n in 1..=invariance_max {
        let rep = check_q2_invariance(n);
        if !rep.passed() {
            out.push(rep);
            break;
        }
        if n == invariance_max {
            out.push(rep);
        }
    }

    let mut closure = None;
    'a: for n in 1..=n_max {
        for (mode, max_index) in [
            (Mode::Gl2, n.saturating_sub(1)),
            (Mode::Q2, n.saturating_sub(2)),
        ] {
            for mask in 0u32..(1 << max_index) {
                let set = FinSet::from_mask(mask);
                match check_subcrystal(n, &set, mode) {
                    Ok(rep) if rep.passed() => {}
                    Ok(rep) => {
                        closure = Some(rep);
                        break 'a;
                    }
                    Err(e) => {
                        closure = Some(Report::fail(
                            "subcrystal_closure",
                            Some(n as u32),
                            serde_json::json!({"error": e.to_string()}),
                        ));
                        break 'a;
                    }
                }
            }
        }
    }
    out.push(closure.unwrap_or_else(|| Report::pass("subcrystal_closure", Some(n_max as u32))));

    let mut split = None;
    'b: for n in 1..=n_max {
        for l in Word::all_words(n) {
            if !is_srlp(&l) {
                continue;
            }
            match crate::parabolic::split_ab(&l) {
                Ok(rep) if rep.passed() => {}
                Ok(rep) => {
                    split = Some(rep);
                    break 'b;
                }
                // Reduced words shorter than 2 are outside the statement.
                Err(Error::Domain(_)) => {}
                Err(e) => {
                    split = Some(Report::fail(
                        "split_ab",
                        Some(n as u32),
                        serde_json::json!({"word": l.to_string(), "error": e.to_string()}),
                    ));
                    break 'b;
                }
            }
        }
    }
    out.push(split.unwrap_or_else(|| Report::pass("split_ab", Some(n_max as u32))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_MATRIX_CAP;

    #[test]
    fn suites_pass_at_small_bounds() {
        for suite in [
            Suite::Axioms,
            Suite::Oracle,
            Suite::Srlp,
            Suite::Hat,
            Suite::C1r,
            Suite::Gbasis,
            Suite::Ktheory,
            Suite::Parabolic,
        ] {
            let rep = run_suite(suite, Some(6), DEFAULT_MATRIX_CAP);
            assert!(rep.passed(), "{}: {:?}", suite, rep.checks);
        }
    }

    #[test]
    fn all_aggregates_everything() {
        let rep = run_suite(Suite::All, Some(4), DEFAULT_MATRIX_CAP);
        assert!(rep.passed());
        assert!(rep.checks.len() >= 15);
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
