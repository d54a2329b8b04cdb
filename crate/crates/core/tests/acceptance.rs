//! Acceptance suite: every guaranteed count and structural property, checked
//! by exhaustive enumeration at the stated parameter ranges. One pass/fail
//! line per criterion (run with `--nocapture` to see them all).

use std::collections::BTreeSet;
use std::time::Instant;

use flower_graphs::coloring::{chromatic_index, even_2_factor_exists, find_3_edge_coloring};
use flower_graphs::family::FSGraph;
use flower_graphs::fixtures;
use flower_graphs::formulas::{self, Quantity};
use flower_graphs::graph::Role;
use flower_graphs::jaeger::{berge_fulkerson_check, enumerate_jaeger_matchings};
use flower_graphs::matchings::{
    count_by_type, enumerate_perfect_matchings, perfect_matchings, Matching, MatchingType,
};
use flower_graphs::two_factor::{
    complement_two_factor, is_hamiltonian, local_transform, major_profile, type2_structure,
    TransformError, TransformVariant,
};
use flower_graphs::words::{
    all_words, decode_word, open_count_distinct, open_count_same, word_admits_hamiltonian,
    BlockWord,
};

fn report(name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {name}: pass");
    } else {
        println!("acceptance {name}: FAIL");
        for f in failures {
            println!("  {f}");
        }
        panic!("acceptance {name} failed ({} problem(s))", failures.len());
    }
}

#[test]
fn a01_small_case_matching_counts() {
    let start = Instant::now();
    let expected = [
        (1u8, 3usize, 9u64, 9u64),
        (2, 3, 8, 8),
        (3, 3, 6, 6),
        (1, 2, 9, 3),
        (2, 2, 10, 4),
        (3, 2, 12, 6),
    ];
    let mut failures = Vec::new();
    for (j, k, mu, mu1) in expected {
        let counts = count_by_type(&FSGraph::build(j, k).unwrap());
        if (counts.mu, counts.mu1) != (mu, mu1) {
            failures.push(format!(
                "FS({j},{k}): expected (mu, mu1) = ({mu}, {mu1}), found ({}, {})",
                counts.mu, counts.mu1
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 1 s"));
    }
    report("01 small-case matching counts", &failures);
}

#[test]
fn a02_closed_form_counts_up_to_k_12() {
    let start = Instant::now();
    let report_table = formulas::verify_all(12);
    let mut failures: Vec<String> = report_table
        .checks
        .iter()
        .filter(|c| {
            matches!(
                c.quantity,
                Quantity::Mu | Quantity::Mu1 | Quantity::Mu2Zero | Quantity::Mu2One
            ) && !c.pass()
        })
        .map(|c| {
            format!(
                "FS({},{}) {}: enumerated {} != closed form {}",
                c.j, c.k, c.quantity, c.enumerated, c.closed_form
            )
        })
        .collect();
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 60.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    report("02 closed-form counts for k <= 12", &failures);
}

#[test]
fn a03_type1_reduction_recurrence() {
    // deleting two consecutive claws reduces FS(j,k) to FS(j',k-2) in three
    // ways; type-1 counts satisfy mu1(j,k) = 2 mu1(j1) + mu1(j2) + mu1(j3)
    let mu1 = |j: u8, k: usize| count_by_type(&FSGraph::build(j, k).unwrap()).mu1;
    let triple = |j: u8| match j {
        1 => (1u8, 1u8, 3u8),
        2 => (2, 2, 2),
        _ => (3, 1, 1),
    };
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        let (j1, j2, j3) = triple(j);
        for k in 4..=10usize {
            let lhs = mu1(j, k);
            let rhs = 2 * mu1(j1, k - 2) + mu1(j2, k - 2) + mu1(j3, k - 2);
            if lhs != rhs {
                failures.push(format!("FS({j},{k}): mu1 = {lhs} but reduction gives {rhs}"));
            }
        }
    }
    report("03 two-claw reduction recurrence", &failures);
}

#[test]
fn a04_matching_type_trichotomy() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=12usize {
            let g = FSGraph::build(j, k).unwrap();
            for (i, m) in enumerate_perfect_matchings(&g).iter().enumerate() {
                match m.classify() {
                    Err(e) => failures.push(format!("FS({j},{k}) matching {i}: {e}")),
                    Ok((ty, _)) if k % 2 == 1 && ty != MatchingType::One => failures.push(
                        format!("FS({j},{k}) matching {i}: type {ty} despite odd k"),
                    ),
                    Ok(_) => {}
                }
            }
        }
    }
    report("04 matching type trichotomy", &failures);
}

#[test]
fn a05_type1_two_factor_structure() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=9usize {
            let g = FSGraph::build(j, k).unwrap();
            for (i, m) in enumerate_perfect_matchings(&g).iter().enumerate() {
                if m.matching_type() != MatchingType::One {
                    continue;
                }
                let tf = complement_two_factor(m);
                let cell = format!("FS({j},{k}) matching {i}");
                match tf.cycle_count() {
                    1 => {}
                    2 => {
                        let lengths = tf.lengths();
                        if lengths.iter().any(|&l| l % 2 != k % 2) {
                            failures.push(format!("{cell}: lengths {lengths:?} break parity"));
                        }
                        if k % 2 == 1 && lengths[0] == lengths[1] {
                            failures.push(format!("{cell}: equal lengths despite odd k"));
                        }
                        let p = major_profile(m, &tf).unwrap();
                        if lengths[0] != 3 * p.k1 + p.k2 || lengths[1] != 3 * p.k2 + p.k1 {
                            failures.push(format!(
                                "{cell}: lengths {lengths:?} do not match majors ({}, {})",
                                p.k1, p.k2
                            ));
                        }
                    }
                    n => failures.push(format!("{cell}: {n} cycles")),
                }
            }
        }
    }
    report("05 type-1 two-factor structure", &failures);
}

#[test]
fn a06_type2_two_factor_structure() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in (2..=12usize).step_by(2) {
            let g = FSGraph::build(j, k).unwrap();
            for (i, m) in enumerate_perfect_matchings(&g).iter().enumerate() {
                if m.matching_type() == MatchingType::One {
                    continue;
                }
                let tf = complement_two_factor(m);
                if let Err(e) = type2_structure(m, &tf) {
                    failures.push(format!("FS({j},{k}) matching {i}: {e}"));
                }
            }
        }
    }
    report("06 type-2 two-factor structure", &failures);
}

#[test]
fn a07_two_factor_hamiltonian_classification() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=9usize {
            let g = FSGraph::build(j, k).unwrap();
            let all_hamiltonian = enumerate_perfect_matchings(&g)
                .iter()
                .all(|m| is_hamiltonian(&complement_two_factor(m)));
            let expected = k % 2 == 1 && (j == 1 || j == 3);
            if all_hamiltonian != expected {
                failures.push(format!(
                    "FS({j},{k}): 2-factor hamiltonian = {all_hamiltonian}, expected {expected}"
                ));
            }
        }
    }
    report("07 2-factor hamiltonian classification", &failures);
}

#[test]
fn a08_chromatic_index_classification() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=9usize {
            let g = FSGraph::build(j, k).unwrap();
            let index = chromatic_index(&g);
            let expected = if j == 2 && k % 2 == 1 { 4 } else { 3 };
            if index != expected {
                failures.push(format!("FS({j},{k}): chromatic index {index} != {expected}"));
            }
            let colorable = find_3_edge_coloring(&g).is_some();
            let even_factor = even_2_factor_exists(&g);
            if colorable != even_factor {
                failures.push(format!(
                    "FS({j},{k}): 3-colorable = {colorable} but even 2-factor = {even_factor}"
                ));
            }
        }
    }
    report("08 chromatic index classification", &failures);
}

/// Expected major set of the anchored cycle after one transformation.
fn expected_majors_after(
    variant: TransformVariant,
    anchor: usize,
    before: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut after = before.clone();
    match variant {
        TransformVariant::One => {
            after.remove(&anchor);
            after.remove(&(anchor + 1));
        }
        TransformVariant::Two => {
            after.remove(&anchor);
            after.remove(&(anchor + 2));
            after.insert(anchor + 1);
        }
        TransformVariant::Three => {
            after.remove(&anchor);
            after.insert(anchor + 2);
        }
    }
    after
}

fn length_delta(variant: TransformVariant) -> i64 {
    match variant {
        TransformVariant::One => -4,
        TransformVariant::Two => -2,
        TransformVariant::Three => 0,
    }
}

#[test]
fn a09_local_transformations() {
    let mut failures = Vec::new();
    for (j, k) in [(2u8, 5usize), (2, 7), (1, 6)] {
        let g = FSGraph::build(j, k).unwrap();
        let mut applied = [0usize; 3];
        for (i, m) in enumerate_perfect_matchings(&g).iter().enumerate() {
            if m.matching_type() != MatchingType::One {
                continue;
            }
            let tf = complement_two_factor(m);
            if tf.cycle_count() != 2 {
                continue;
            }
            let majors: Vec<usize> = (0..k)
                .map(|c| tf.cycle_of(g.vertex(c, Role::T)))
                .collect();
            for (vi, variant) in [
                TransformVariant::One,
                TransformVariant::Two,
                TransformVariant::Three,
            ]
            .into_iter()
            .enumerate()
            {
                let window = if variant == TransformVariant::One { 2 } else { 3 };
                for anchor in 0..=(k - window) {
                    let cell = format!("FS({j},{k}) matching {i} variant {} anchor {anchor}", vi + 1);
                    let anchored = majors[anchor];
                    let pattern_holds = match variant {
                        TransformVariant::One => majors[anchor + 1] == anchored,
                        TransformVariant::Two => {
                            majors[anchor + 1] != anchored && majors[anchor + 2] == anchored
                        }
                        TransformVariant::Three => {
                            majors[anchor + 1] != anchored && majors[anchor + 2] != anchored
                        }
                    };
                    let outcome = local_transform(m, variant, anchor);
                    if !pattern_holds {
                        if !matches!(outcome, Err(TransformError::PatternMismatch { .. })) {
                            failures.push(format!("{cell}: missing pattern was not rejected"));
                        }
                        continue;
                    }
                    let next = match outcome {
                        Ok(next) => next,
                        Err(e) => {
                            failures.push(format!("{cell}: rejected valid pattern: {e}"));
                            continue;
                        }
                    };
                    applied[vi] += 1;

                    if next.matching_type() != MatchingType::One {
                        failures.push(format!("{cell}: output is not type 1"));
                        continue;
                    }
                    let tf2 = complement_two_factor(&next);
                    if tf2.cycle_count() != 2 {
                        failures.push(format!("{cell}: output has {} cycles", tf2.cycle_count()));
                        continue;
                    }
                    let majors_after: Vec<usize> = (0..k)
                        .map(|c| tf2.cycle_of(g.vertex(c, Role::T)))
                        .collect();

                    // identify the successor of the anchored cycle by its
                    // expected major set
                    let before: BTreeSet<usize> = (0..k).filter(|&c| majors[c] == anchored).collect();
                    let expected = expected_majors_after(variant, anchor, &before);
                    let owner = |cycle: usize| -> BTreeSet<usize> {
                        (0..k).filter(|&c| majors_after[c] == cycle).collect()
                    };
                    let new_anchored = if expected.is_empty() {
                        // the successor carries no claw centers at all
                        match (owner(0).is_empty(), owner(1).is_empty()) {
                            (true, false) => 0,
                            (false, true) => 1,
                            _ => {
                                failures.push(format!("{cell}: no center-free cycle"));
                                continue;
                            }
                        }
                    } else {
                        majors_after[*expected.iter().next().unwrap()]
                    };
                    if owner(new_anchored) != expected {
                        failures.push(format!(
                            "{cell}: majors {:?} != expected {:?}",
                            owner(new_anchored),
                            expected
                        ));
                        continue;
                    }
                    let old_len = tf.cycles()[anchored].len() as i64;
                    let new_len = tf2.cycles()[new_anchored].len() as i64;
                    let delta = length_delta(variant);
                    if new_len != old_len + delta {
                        failures.push(format!(
                            "{cell}: anchored length {old_len} -> {new_len}, expected delta {delta}"
                        ));
                    }
                    let other_old = tf.cycles()[1 - anchored].len() as i64;
                    let other_new = tf2.cycles()[1 - new_anchored].len() as i64;
                    if other_new != other_old - delta {
                        failures.push(format!(
                            "{cell}: other length {other_old} -> {other_new}, expected delta {}",
                            -delta
                        ));
                    }
                }
            }
        }
        for (vi, count) in applied.iter().enumerate() {
            if *count == 0 {
                failures.push(format!(
                    "FS({j},{k}): no eligible instance for variant {}",
                    vi + 1
                ));
            }
        }
    }
    report("09 local transformations", &failures);
}

#[test]
fn a10_word_criterion_predicts_hamiltonicity() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for p in 2..=5usize {
            let g = FSGraph::build(j, 2 * p).unwrap();
            for subtype in [MatchingType::TwoZero, MatchingType::TwoOne] {
                for letters in all_words(p) {
                    let predicted = word_admits_hamiltonian(j, &letters);
                    let w = BlockWord::new(letters.clone(), subtype).unwrap();
                    let m = decode_word(&g, &w).unwrap();
                    let actual = is_hamiltonian(&complement_two_factor(&m));
                    if predicted != actual {
                        failures.push(format!(
                            "FS({j},{}) word {w}: criterion says {predicted}, complement says {actual}",
                            2 * p
                        ));
                    }
                }
            }
        }
    }
    report("10 word criterion vs hamiltonicity", &failures);
}

#[test]
fn a11_hamiltonian_type2_counts() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for p in 2..=6usize {
            let g = FSGraph::build(j, 2 * p).unwrap();
            let closed = formulas::mu2prime_closed(j, p).unwrap();
            let by_words = u128::from(flower_graphs::words::hamiltonian_type2_count(&g).unwrap());
            let by_enumeration: u128 = enumerate_perfect_matchings(&g)
                .iter()
                .filter(|m| {
                    m.matching_type() != MatchingType::One
                        && is_hamiltonian(&complement_two_factor(m))
                })
                .count() as u128;
            if by_enumeration != closed || by_words != closed {
                failures.push(format!(
                    "FS({j},{}): enumerated {by_enumeration}, word count {by_words}, closed {closed}",
                    2 * p
                ));
            }
        }
    }
    // the two auxiliary sequences agree with their recurrences
    let (mut u, mut v) = (open_count_same(2), open_count_distinct(2));
    if (u, v) != (2, 1) {
        failures.push(format!("base values (u2, v2) = ({u}, {v})"));
    }
    for p in 3..=20u32 {
        u = 2u128.pow(p - 1) - u;
        v = 2u128.pow(p - 1) - v;
        if open_count_same(p) != u || open_count_distinct(p) != v {
            failures.push(format!("recurrence mismatch at p = {p}"));
        }
    }
    report("11 hamiltonian type-2 counts", &failures);
}

#[test]
fn a12_jaeger_matching_counts() {
    // This pins the originally claimed table: 6 Jaeger matchings for every
    // Jaeger member with k >= 3. Exhaustive enumeration (cross-checked by a
    // brute-force split search in tests/invariants.rs) finds 3 for every
    // j = 1 member, so the j = 1, k >= 3 cells are expected to fail; the
    // library's own closed form uses the enumerated law.
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=12usize {
            let g = FSGraph::build(j, k).unwrap();
            let found = enumerate_jaeger_matchings(&g);
            let expected: usize = if j == 1 && k == 2 {
                3
            } else if k >= 3 && ((j == 1 && k % 3 != 0) || (j == 3 && k % 3 == 0)) {
                6
            } else {
                0
            };
            if found.len() != expected {
                failures.push(format!(
                    "FS({j},{k}): expected {expected} Jaeger matchings, enumeration finds {}",
                    found.len()
                ));
            }
            for (m, _) in &found {
                if m.matching_type() != MatchingType::One {
                    failures.push(format!("FS({j},{k}): Jaeger matching of type {}", m.matching_type()));
                }
            }
        }
    }
    report("12 Jaeger matching counts", &failures);
}

#[test]
fn a13_jaeger_double_cover() {
    let mut failures = Vec::new();
    for j in 1..=3u8 {
        for k in 2..=12usize {
            let g = FSGraph::build(j, k).unwrap();
            let found: Vec<Matching<'_>> = enumerate_jaeger_matchings(&g)
                .into_iter()
                .map(|(m, _)| m)
                .collect();
            if found.is_empty() {
                continue;
            }
            // six perfect matchings covering every edge exactly twice; when
            // only three exist each is listed twice, which the double-cover
            // statement explicitly allows
            let six: Vec<Matching<'_>> = match found.len() {
                6 => found,
                3 => found.iter().chain(found.iter()).cloned().collect(),
                n => {
                    failures.push(format!("FS({j},{k}): unexpected Jaeger count {n}"));
                    continue;
                }
            };
            match berge_fulkerson_check(&six) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("FS({j},{k}): double cover fails")),
                Err(e) => failures.push(format!("FS({j},{k}): {e}")),
            }
        }
    }
    report("13 Jaeger double cover", &failures);
}

#[test]
fn a14_triangle_inflation_preserves_counts() {
    let mut failures = Vec::new();

    let k33 = fixtures::k33();
    if perfect_matchings(&k33).len() != 6 {
        failures.push("K33 does not have 6 perfect matchings".into());
    }
    let mut inflated = k33;
    for i in 0..3 {
        inflated = inflated
            .inflate_vertex(flower_graphs::graph::VertexId::new(i, Role::X))
            .unwrap();
    }
    if perfect_matchings(&inflated).len() != 6 {
        failures.push("inflating one colour class of K33 changed its matching count".into());
    }
    let fs33 = FSGraph::build(3, 3).unwrap();
    if perfect_matchings(fs33.graph()).len() != 6 {
        failures.push("FS(3,3) does not have 6 perfect matchings".into());
    }
    if !fixtures::are_isomorphic(&inflated, fs33.graph()) {
        failures.push("inflated K33 is not isomorphic to FS(3,3)".into());
    }

    let petersen = fixtures::petersen();
    if perfect_matchings(&petersen).len() != 6 {
        failures.push("the Petersen graph does not have 6 perfect matchings".into());
    }
    let inflated = petersen
        .inflate_vertex(flower_graphs::graph::VertexId::new(0, Role::X))
        .unwrap();
    if inflated.vertex_count() != 12 {
        failures.push("inflation did not add exactly 2 vertices".into());
    }
    if perfect_matchings(&inflated).len() != 8 {
        failures.push("inflated Petersen graph does not have mu(2,3) = 8 matchings".into());
    }
    let fs23 = FSGraph::build(2, 3).unwrap();
    if !fixtures::are_isomorphic(&inflated, fs23.graph()) {
        failures.push("inflated Petersen graph is not isomorphic to FS(2,3)".into());
    }

    report("14 triangle inflation oracle", &failures);
}
