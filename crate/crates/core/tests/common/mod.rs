//! Shared fixtures: the pattern-set corpus and exhaustive semigroup lists.

#![allow(dead_code)]

use numsgp::families::family_pattern;
use numsgp::oracle::{naive_semigroups, OracleSet};
use numsgp::{FamilyDescriptor, NumericalSemigroup, PatternSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_GENUS: u64 = 9;
pub const CORPUS_SEED: u64 = 0x5eed_0001;

pub fn pattern(m: i64, tuples: &[&[i64]]) -> PatternSet {
    let tuples: Vec<Vec<i64>> = tuples.iter().map(|t| t.to_vec()).collect();
    PatternSet::new(m, &tuples).expect("fixture pattern is valid")
}

pub fn gens(g: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(g).expect("fixture generators are valid")
}

fn family(desc: FamilyDescriptor) -> PatternSet {
    family_pattern(&desc, 1 << 20).expect("family fits the cap")
}

/// Named pattern sets over modulus `m`. Entries that need a larger modulus
/// are left out.
pub fn corpus(m: i64) -> Vec<(String, PatternSet)> {
    let mut out: Vec<(String, PatternSet)> = Vec::new();
    for n in 1..=3 {
        out.push((
            format!("level:{n}"),
            family(FamilyDescriptor::level(n, m).unwrap()),
        ));
    }
    for n in 2..=3 {
        out.push((
            format!("thin:{n}"),
            family(FamilyDescriptor::thin(n, m).unwrap()),
        ));
    }
    out.push((
        "strong".into(),
        family(FamilyDescriptor::strong(m).unwrap()),
    ));
    out.push((
        "A_3".into(),
        family(FamilyDescriptor::strong_distinct(3, m).unwrap()),
    ));
    out.push((
        "B_3".into(),
        family(FamilyDescriptor::strong_nondiag(3, m).unwrap()),
    ));
    if m >= 3 {
        out.push(("{(1,1),(1,2)}".into(), pattern(m, &[&[1, 1], &[1, 2]])));
    }
    if m >= 4 {
        out.push(("{(1,3),(2,2)}".into(), pattern(m, &[&[1, 3], &[2, 2]])));
    }
    if m >= 5 {
        out.push(("{(1,1),(3,4)}".into(), pattern(m, &[&[1, 1], &[3, 4]])));
        out.push((
            "{(1,1,2),(1,3,1),(1,3,4)}".into(),
            pattern(m, &[&[1, 1, 2], &[1, 3, 1], &[1, 3, 4]]),
        ));
    }
    out.push(("empty".into(), pattern(m, &[])));
    let ones = vec![1; m as usize];
    out.push((format!("(1)^{m}"), pattern(m, &[&ones])));
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ m as u64);
    for r in 0..3 {
        let count = rng.gen_range(1..=4);
        let tuples: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                let k = rng.gen_range(2..=4);
                (0..k).map(|_| rng.gen_range(1..m)).collect()
            })
            .collect();
        let p = PatternSet::new(m, &tuples).expect("random tuples are in range");
        out.push((format!("random#{r} {tuples:?}"), p));
    }
    out
}

/// Largest tuple arity used by [`corpus`] for modulus `m`.
pub fn corpus_arity(m: i64) -> usize {
    corpus(m)
        .iter()
        .map(|(_, p)| p.max_arity())
        .max()
        .unwrap_or(2)
}

/// Every semigroup of multiplicity `m` with genus `m-1..=max_genus`, as
/// oracle element sets large enough for patterns of arity `k_max`.
pub fn all_semigroups(
    m: i64,
    max_genus: u64,
    k_max: usize,
) -> Vec<(u64, OracleSet, NumericalSemigroup)> {
    let mut out = Vec::new();
    for g in (m - 1) as u64..=max_genus {
        for o in naive_semigroups(m, g, k_max).expect("oracle enumeration") {
            let s = gens(&o.minimal_generators().expect("certified oracle set"));
            out.push((g, o, s));
        }
    }
    out
}
