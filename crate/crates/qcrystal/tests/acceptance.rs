//! Acceptance suite: reproduces the worked examples exactly and runs the
//! exhaustive property sweeps at their full bounds, printing one pass/fail
//! line per criterion (run with `--nocapture` to see them). Every
//! criterion also carries a wall-clock budget.

use std::time::{Duration, Instant};

use qcrystal::gbasis::{self, Transition};
use qcrystal::graph::{build_graph, component_of, EdgeLabel, Mode};
use qcrystal::ktheory::{self, BasisTag, KClass};
use qcrystal::lowest::{bar, decompose_lowest, hat, verify_hat_bijection};
use qcrystal::report::Report;
use qcrystal::verify;
use qcrystal::word::Word;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn criterion<F: FnOnce() -> Result<(), String>>(name: &str, budget: Duration, body: F) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed <= budget;
    println!(
        "acceptance {name}: {} ({:.3}s, budget {:.0}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    if let Err(msg) = outcome {
        panic!("{name}: {msg}");
    }
    assert!(
        elapsed <= budget,
        "{name}: took {:.3}s, budget {:.0}s",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
}

fn all_pass(reports: &[Report]) -> Result<(), String> {
    for rep in reports {
        if !rep.passed() {
            return Err(format!(
                "check {} failed: {:?}",
                rep.check, rep.counterexample
            ));
        }
    }
    Ok(())
}

/// Criterion 1: the full crystal graph on length-4 words: 16 nodes, the
/// three components of sizes 8/4/4, and the spot-listed edges.
#[test]
fn criterion_1_b4_graph() {
    criterion("1 (B^(x)4 graph)", Duration::from_secs(1), || {
        let g = build_graph(4, Mode::Q2, 16).map_err(|e| e.to_string())?;
        if g.nodes.len() != 16 {
            return Err(format!("expected 16 nodes, got {}", g.nodes.len()));
        }
        let comps = g.components();
        if comps.len() != 3 {
            return Err(format!("expected 3 components, got {}", comps.len()));
        }
        let size_of = |seed: &str| -> Result<usize, String> {
            comps
                .iter()
                .find(|c| c.members.contains(&w(seed)))
                .map(|c| c.members.len())
                .ok_or_else(|| format!("no component contains {seed}"))
        };
        if size_of("1111")? != 8 || size_of("1121")? != 4 || size_of("1211")? != 4 {
            return Err("component sizes differ from 8/4/4".to_string());
        }
        let has = |src: &str, dst: &str, label: EdgeLabel| {
            g.edges
                .iter()
                .any(|e| e.src == w(src) && e.dst == w(dst) && e.label == label)
        };
        let spot = [
            ("1111", "2111", EdgeLabel::Even),
            ("1111", "1112", EdgeLabel::Odd),
            ("2121", "2122", EdgeLabel::Even),
            ("2121", "2122", EdgeLabel::Odd),
            ("2221", "2222", EdgeLabel::Even),
            ("2221", "2222", EdgeLabel::Odd),
        ];
        for (src, dst, label) in spot {
            if !has(src, dst, label) {
                return Err(format!("missing edge {src} -> {dst} ({label:?})"));
            }
        }
        if g.edges.iter().any(|e| e.src == w("1122")) {
            return Err("1122 must have no outgoing edge".to_string());
        }
        Ok(())
    });
}

/// Criterion 2: the worked length-8 component: its exact member set (8
/// words), the unique highest word, the decomposition data, and the
/// operator-commuting deletion bijection onto the all-twos core.
#[test]
fn criterion_2_component_22122122() {
    criterion("2 (component of 22122122)", Duration::from_secs(1), || {
        let comp = component_of(&w("22122122"), Mode::Q2);
        let mut expected: Vec<Word> = [
            "11121121", "21121121", "11121122", "22121121", "21121122", "22122121", "22121122",
            "22122122",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        expected.sort();
        if comp.members != expected {
            return Err(format!(
                "member set differs: got {:?}",
                comp.members.iter().map(Word::to_string).collect::<Vec<_>>()
            ));
        }
        if comp.highest != vec![w("11121121")] {
            return Err("unique highest word must be 11121121".to_string());
        }
        let dec = decompose_lowest(&w("22122122")).map_err(|e| e.to_string())?;
        if dec.a_set != vec![3, 4, 6, 7] {
            return Err(format!("A set differs: {:?}", dec.a_set));
        }
        if hat(&w("22122122"), &dec.a_set).map_err(|e| e.to_string())? != w("2222") {
            return Err("reduced word must be 2222".to_string());
        }
        if bar(&w("22122122"), &dec.a_set).map_err(|e| e.to_string())? != w("1212") {
            return Err("restriction must be 1212".to_string());
        }
        let rep = verify_hat_bijection(&w("22122122")).map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err(format!("bijection check failed: {:?}", rep.counterexample));
        }
        let core = component_of(&w("2222"), Mode::Q2);
        if core.members.len() != comp.members.len() {
            return Err("component and its core differ in size".to_string());
        }
        Ok(())
    });
}

/// Criterion 3: exact integer identities at length 2.
#[test]
fn criterion_3_ktheory_n2() {
    criterion(
        "3 (class identities, n = 2)",
        Duration::from_secs(1),
        || {
            let trans = Transition::new(2, 12).map_err(|e| e.to_string())?;
            let l21 = trans.simple_to_verma(&w("21")).map_err(|e| e.to_string())?;
            let expected = KClass::unit(&w("21")).sub(&KClass::unit(&w("12")));
            if l21 != &expected {
                return Err(format!("L(21) row is {}", l21.display(BasisTag::Verma)));
            }
            let m21 = trans.verma_to_simple(&w("21")).map_err(|e| e.to_string())?;
            let expected = KClass::unit(&w("21")).add(&KClass::unit(&w("12")));
            if m21 != &expected {
                return Err(format!("M(21) row is {}", m21.display(BasisTag::Simple)));
            }
            let image =
                ktheory::op_fbar(trans.simple_to_verma(&w("22")).map_err(|e| e.to_string())?);
            let in_simple = trans.to_simple(&image).map_err(|e| e.to_string())?;
            if in_simple != expected {
                return Err(format!(
                    "odd lowering of L(22) expands to {}",
                    in_simple.display(BasisTag::Simple)
                ));
            }
            if in_simple.coeff(&w("21")) != 1 {
                return Err("coefficient of L(21) must be exactly 1".to_string());
            }
            let rep = ktheory::fbar_head_check(&w("22"), &trans).map_err(|e| e.to_string())?;
            if !rep.passed() {
                return Err("head check failed at L(22)".to_string());
            }
            Ok(())
        },
    );
}

/// Criterion 4: crystal axioms and the tensor-rule cross-check, all words
/// up to length 10.
#[test]
fn criterion_4_axioms_and_oracle() {
    criterion(
        "4 (axioms + rule cross-check, n <= 10)",
        Duration::from_secs(10),
        || {
            all_pass(&verify::axiom_checks(10))?;
            all_pass(&verify::oracle_checks(10))
        },
    );
}

/// Criterion 5: the lowest-weight characterization over all words up to
/// length 12.
#[test]
fn criterion_5_lowest_characterization() {
    criterion(
        "5 (lowest iff SRLP, n <= 12)",
        Duration::from_secs(30),
        || all_pass(&verify::srlp_checks(12)),
    );
}

/// Criterion 6: the explicit all-ones component formula for r up to 12.
#[test]
fn criterion_6_c1r_formula() {
    criterion(
        "6 (all-ones component formula, r <= 12)",
        Duration::from_secs(1),
        || all_pass(&verify::c1r_checks(12)),
    );
}

/// Criterion 7: the basis recursion sweep up to length 10: strategy
/// independence, sign bounds, the last-letter drop rule, and the exact
/// unitriangular inverse with nonnegative entries.
#[test]
fn criterion_7_basis_suite() {
    criterion("7 (basis suite, n <= 10)", Duration::from_secs(60), || {
        all_pass(&verify::gbasis_checks(10, 12))
    });
}

/// Criterion 8: operator suite: defining relations on classes (n <= 12),
/// odd anticommutation (n <= 12), both odd-operator checks, and the
/// label transport match (n <= 10).
#[test]
fn criterion_8_operator_suite() {
    criterion(
        "8 (operator suite, n <= 10/12)",
        Duration::from_secs(60),
        || all_pass(&verify::ktheory_checks(10, 12, 12)),
    );
}

/// Criterion 9: descent-set suite up to length 10: invariance along both
/// component structures, the raising identity, closure of every index-set
/// subcrystal, and the two-part split of every eligible component.
#[test]
fn criterion_9_descent_suite() {
    criterion(
        "9 (descent-set suite, n <= 10)",
        Duration::from_secs(60),
        || all_pass(&verify::parabolic_checks(10, 12)),
    );
}

/// The basis example certified by both strategies: the nested-pair word.
#[test]
fn basis_nested_pair_example() {
    let g = gbasis::gbasis(&w("1122"));
    assert_eq!(g, gbasis::gbasis_dense(&w("1122")));
    assert_eq!(g.to_string(), "+1122 -1212 -2121 +2211");
}
