//! Named pseudo-varieties with direct tests on the minimal generators.
//!
//! * n-level: `x_1 + ... + x_{n+1} - m ∈ S` for all nonzero `x_i`
//!   (pattern `{1..m-1}^{n+1}`; `n = 1` is maximal embedding dimension).
//! * n-thin: `n x - m ∈ S` for all nonzero `x` (the diagonal tuples `(i,...,i)`).
//! * strong: `x + y - m ∈ S` whenever `x ≢ y (mod m)` (pairs off the diagonal).
//! * strong-distinct / strong-nondiag: the two arity-`n` generalizations of
//!   strong, only available through their materialized pattern sets.
//!
//! The fast paths never materialize the pattern sets; [`family_pattern`]
//! exists for cross-checking them against the generic machinery.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{Child, PatternSet};
use crate::semigroup::{AperyTable, NumericalSemigroup};
use crate::tree::{ChildRule, Explorer};

/// Default cap on the number of materialized tuples.
pub const DEFAULT_TUPLE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Level(usize),
    Thin(usize),
    Strong,
    StrongDistinct(usize),
    StrongNondiag(usize),
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Level(n) => write!(f, "level:{n}"),
            FamilyKind::Thin(n) => write!(f, "thin:{n}"),
            FamilyKind::Strong => write!(f, "strong"),
            FamilyKind::StrongDistinct(n) => write!(f, "strong-distinct:{n}"),
            FamilyKind::StrongNondiag(n) => write!(f, "strong-nondiag:{n}"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// `level:<n>`, `thin:<n>`, `strong`, `strong-distinct:<n>`,
    /// `strong-nondiag:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown family descriptor {s:?}"));
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let n = arg
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .transpose()?;
        let kind = match (name.trim(), n) {
            ("level", Some(n)) => FamilyKind::Level(n),
            ("thin", Some(n)) => FamilyKind::Thin(n),
            ("strong", None) => FamilyKind::Strong,
            ("strong-distinct", Some(n)) => FamilyKind::StrongDistinct(n),
            ("strong-nondiag", Some(n)) => FamilyKind::StrongNondiag(n),
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl FamilyKind {
    fn validate(self) -> Result<()> {
        let (n, min) = match self {
            FamilyKind::Level(n) => (n, 1),
            FamilyKind::Thin(n) | FamilyKind::StrongDistinct(n) | FamilyKind::StrongNondiag(n) => {
                (n, 2)
            }
            FamilyKind::Strong => return Ok(()),
        };
        if n < min {
            return Err(Error::InvalidParameter(format!(
                "{self}: parameter must be at least {min}"
            )));
        }
        Ok(())
    }
}

/// A family together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub m: i64,
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m = {})", self.kind, self.m)
    }
}

impl FamilyDescriptor {
    pub fn new(kind: FamilyKind, m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        kind.validate()?;
        Ok(Self { kind, m })
    }

    pub fn level(n: usize, m: i64) -> Result<Self> {
        Self::new(FamilyKind::Level(n), m)
    }

    pub fn thin(n: usize, m: i64) -> Result<Self> {
        Self::new(FamilyKind::Thin(n), m)
    }

    pub fn strong(m: i64) -> Result<Self> {
        Self::new(FamilyKind::Strong, m)
    }

    pub fn strong_distinct(n: usize, m: i64) -> Result<Self> {
        Self::new(FamilyKind::StrongDistinct(n), m)
    }

    pub fn strong_nondiag(n: usize, m: i64) -> Result<Self> {
        Self::new(FamilyKind::StrongNondiag(n), m)
    }

    /// The explicit pattern set, within [`DEFAULT_TUPLE_CAP`].
    pub fn pattern(&self) -> Result<PatternSet> {
        family_pattern(self, DEFAULT_TUPLE_CAP)
    }

    /// Whether the descriptor has a generator-level fast path.
    pub fn has_fast_path(&self) -> bool {
        matches!(
            self.kind,
            FamilyKind::Level(_) | FamilyKind::Thin(_) | FamilyKind::Strong
        )
    }

    /// A child rule for tree walks: the fast path where one exists,
    /// otherwise the materialized pattern set.
    pub fn rule(&self) -> Result<FamilyRule> {
        let pattern = if self.has_fast_path() {
            None
        } else {
            Some(self.pattern()?)
        };
        Ok(FamilyRule {
            family: *self,
            pattern,
        })
    }
}

/// Child rule for a family; see [`FamilyDescriptor::rule`].
#[derive(Clone, Debug)]
pub struct FamilyRule {
    family: FamilyDescriptor,
    pattern: Option<PatternSet>,
}

impl FamilyRule {
    pub fn family(&self) -> FamilyDescriptor {
        self.family
    }

    pub fn is_member(&self, s: &NumericalSemigroup) -> bool {
        if s.multiplicity() != self.family.m {
            return false;
        }
        match (&self.pattern, self.family.kind) {
            (Some(p), _) => p.is_member(s),
            (None, FamilyKind::Level(n)) => is_n_level(s, n),
            (None, FamilyKind::Thin(n)) => is_n_thin(s, n),
            (None, FamilyKind::Strong) => is_strong(s),
            (None, _) => unreachable!("pattern is materialized for families without a fast path"),
        }
    }
}

impl ChildRule for FamilyRule {
    fn modulus(&self) -> i64 {
        self.family.m
    }

    fn children(&self, s: &NumericalSemigroup) -> Result<Vec<Child>> {
        if s.multiplicity() != self.family.m {
            return Err(Error::NotAMember);
        }
        match (&self.pattern, self.family.kind) {
            (Some(p), _) => p.children(s),
            (None, FamilyKind::Level(n)) => n_level_children(s, n),
            (None, FamilyKind::Thin(n)) => thin_children(s, n),
            (None, FamilyKind::Strong) => strong_children(s),
            (None, _) => unreachable!("pattern is materialized for families without a fast path"),
        }
    }
}

fn cube(m: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    itertools::repeat_n(1..m, arity).multi_cartesian_product()
}

fn check_cap(count: u128, cap: usize) -> Result<()> {
    if count > cap as u128 {
        return Err(Error::TooLarge { count, cap });
    }
    Ok(())
}

/// Materializes the pattern set of a family, failing with
/// [`Error::TooLarge`] above `cap` tuples.
pub fn family_pattern(family: &FamilyDescriptor, cap: usize) -> Result<PatternSet> {
    let m = family.m as usize;
    let base = (m - 1) as u128;
    let tuples: Vec<Vec<usize>> = match family.kind {
        FamilyKind::Level(n) => {
            check_cap(base.saturating_pow((n + 1) as u32), cap)?;
            cube(m, n + 1).collect()
        }
        FamilyKind::Thin(n) => (1..m).map(|i| vec![i; n]).collect(),
        FamilyKind::Strong => cube(m, 2).filter(|t| t[0] != t[1]).collect(),
        FamilyKind::StrongDistinct(n) => {
            let count = if n > m - 1 {
                0
            } else {
                ((m - n)..m).map(|k| k as u128).product()
            };
            check_cap(count, cap)?;
            (1..m).permutations(n).collect()
        }
        FamilyKind::StrongNondiag(n) => {
            check_cap(base.saturating_pow(n as u32), cap)?;
            cube(m, n)
                .filter(|t| t.iter().any(|&i| i != t[0]))
                .collect()
        }
    };
    Ok(PatternSet::from_valid(m, tuples))
}

/// Every sum of `n + 1` non-multiplicity generators (with repetition), minus
/// the multiplicity, lies in `S`.
pub fn is_n_level(s: &NumericalSemigroup, n: usize) -> bool {
    let gens = s.non_multiplicity_generators();
    let m = s.multiplicity();
    match gens.first() {
        None => true,
        // every sum is at least (n + 1) n_2
        Some(&least) if (n as i64 + 1) * least - m > s.frobenius() => true,
        Some(_) => gens
            .iter()
            .combinations_with_replacement(n + 1)
            .all(|c| s.contains(c.into_iter().sum::<i64>() - m)),
    }
}

/// Children in the n-level tree: `x` qualifies iff the longest factorization
/// of `x + m` in `S \ {x}` has at most `n` atoms.
pub fn n_level_children(s: &NumericalSemigroup, n: usize) -> Result<Vec<Child>> {
    if !is_n_level(s, n) {
        return Err(Error::NotAMember);
    }
    let m = s.multiplicity();
    let frobenius = s.frobenius();
    let mut out = Vec::new();
    for &x in s
        .non_multiplicity_generators()
        .iter()
        .filter(|&&x| x > frobenius)
    {
        let child = s.remove_generator(x)?;
        if child.max_factorization_length(x + m)? <= n as u64 {
            out.push((x, child));
        }
    }
    Ok(out)
}

/// Apéry table of a second-level semigroup from the candidates
/// `{0, n_i, n_i + n_j}` over non-multiplicity generators.
pub fn second_level_apery(s: &NumericalSemigroup) -> Result<AperyTable> {
    if !is_n_level(s, 2) {
        return Err(Error::NotAMember);
    }
    let gens = s.non_multiplicity_generators();
    let pairs = gens
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| gens[i..].iter().map(move |&b| a + b));
    let candidates = std::iter::once(0).chain(gens.iter().copied()).chain(pairs);
    AperyTable::from_candidates(s.multiplicity(), candidates).ok_or(Error::NotAMember)
}

/// `n * n_i - m ∈ S` for every non-multiplicity generator.
pub fn is_n_thin(s: &NumericalSemigroup, n: usize) -> bool {
    let m = s.multiplicity();
    s.non_multiplicity_generators()
        .iter()
        .all(|&g| s.contains(n as i64 * g - m))
}

/// Children in the n-thin tree: `x` is excluded iff `(x + m) / n` is an
/// integer lying in `S`.
pub fn thin_children(s: &NumericalSemigroup, n: usize) -> Result<Vec<Child>> {
    if !is_n_thin(s, n) {
        return Err(Error::NotAMember);
    }
    let m = s.multiplicity();
    let n = n as i64;
    let frobenius = s.frobenius();
    s.non_multiplicity_generators()
        .iter()
        .filter(|&&x| x > frobenius && !((x + m) % n == 0 && s.contains((x + m) / n)))
        .map(|&x| Ok((x, s.remove_generator(x)?)))
        .collect()
}

/// Apéry table of a thin semigroup: per class, the least sum of a subset of
/// the non-multiplicity generators.
pub fn thin_apery(s: &NumericalSemigroup) -> Result<AperyTable> {
    if !is_n_thin(s, 2) {
        return Err(Error::NotAMember);
    }
    let m = s.multiplicity();
    // 0/1 knapsack over residues: best[r] is the least subset sum ≡ r.
    let mut best = vec![i64::MAX; m as usize];
    best[0] = 0;
    for &g in s.non_multiplicity_generators() {
        let prev = best.clone();
        for (r, &v) in prev.iter().enumerate() {
            if v == i64::MAX {
                continue;
            }
            let next = (r + (g % m) as usize) % m as usize;
            best[next] = best[next].min(v + g);
        }
    }
    AperyTable::from_candidates(m, best.into_iter().filter(|&v| v != i64::MAX))
        .ok_or(Error::NotAMember)
}

/// `n_i + n_j - m ∈ S` for distinct and `3 n_i - m ∈ S` for all
/// non-multiplicity generators.
pub fn is_strong(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let gens = s.non_multiplicity_generators();
    gens.iter().all(|&g| s.contains(3 * g - m))
        && gens
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| s.contains(a + b - m))
}

/// Children in the strong tree: `x` is excluded iff `x + m` is `a + b` for
/// distinct, or `3a` for any, generators `a, b` other than `m` and `x`.
pub fn strong_children(s: &NumericalSemigroup) -> Result<Vec<Child>> {
    if !is_strong(s) {
        return Err(Error::NotAMember);
    }
    let m = s.multiplicity();
    let gens = s.non_multiplicity_generators();
    let frobenius = s.frobenius();
    let blocked = |x: i64| {
        let target = x + m;
        let others = || gens.iter().copied().filter(move |&g| g != x);
        others().any(|a| 3 * a == target)
            || others().tuple_combinations().any(|(a, b)| a + b == target)
    };
    gens.iter()
        .filter(|&&x| x > frobenius && !blocked(x))
        .map(|&x| Ok((x, s.remove_generator(x)?)))
        .collect()
}

/// Apéry table of a strong semigroup from the candidates `{0, n_i, 2 n_i}`.
pub fn strong_apery(s: &NumericalSemigroup) -> Result<AperyTable> {
    if !is_strong(s) {
        return Err(Error::NotAMember);
    }
    let gens = s.non_multiplicity_generators();
    let candidates = std::iter::once(0)
        .chain(gens.iter().copied())
        .chain(gens.iter().map(|&g| 2 * g));
    AperyTable::from_candidates(s.multiplicity(), candidates).ok_or(Error::NotAMember)
}

/// One genus level of a [`ProbeReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeLevel {
    pub genus: u64,
    pub distinct_members: usize,
    pub nondiag_members: usize,
    /// Every strong-nondiag member at this genus is a strong-distinct member.
    pub nondiag_within_distinct: bool,
    /// Strong-distinct members that are not strong-nondiag members.
    pub separating: usize,
}

/// Outcome of comparing `C(m, A_n)` (distinct residues) with `C(m, B_n)`
/// (all non-constant tuples) up to a genus cap. Experimental: a missing
/// witness is not evidence of equality beyond the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub experimental: bool,
    pub m: i64,
    pub n: usize,
    pub genus_cap: u64,
    pub levels: Vec<ProbeLevel>,
    /// Least-genus, then lexicographically least, member of `C(m, A_n)`
    /// outside `C(m, B_n)`.
    pub witness: Option<NumericalSemigroup>,
}

impl ProbeReport {
    /// The known inclusion holds at every level and the counts add up.
    pub fn is_consistent(&self) -> bool {
        self.levels.iter().all(|l| {
            l.nondiag_within_distinct
                && l.separating == l.distinct_members - l.nondiag_members.min(l.distinct_members)
        }) && self.witness.is_some() == self.levels.iter().any(|l| l.separating > 0)
    }
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[experimental] strong-distinct:{n} vs strong-nondiag:{n}, m = {}, genus <= {}",
            self.m,
            self.genus_cap,
            n = self.n
        )?;
        for l in &self.levels {
            writeln!(
                f,
                "genus {:>3}: distinct {:>6}  nondiag {:>6}  separating {:>6}",
                l.genus, l.distinct_members, l.nondiag_members, l.separating
            )?;
        }
        match &self.witness {
            Some(w) => write!(f, "witness: {w} (strict inclusion at this scale)"),
            None => write!(f, "no witness up to genus {}", self.genus_cap),
        }
    }
}

/// Enumerates both generalizations of strong semigroups level by level and
/// looks for a member of `C(m, A_n)` missing from `C(m, B_n)`.
pub fn conjecture_probe(m: i64, n: usize, genus_cap: u64) -> Result<ProbeReport> {
    if n < 3 || n as i64 >= m {
        return Err(Error::InvalidParameter(format!(
            "probe needs 3 <= n < m, got n = {n}, m = {m}"
        )));
    }
    let distinct = FamilyDescriptor::strong_distinct(n, m)?.pattern()?;
    let nondiag = FamilyDescriptor::strong_nondiag(n, m)?.pattern()?;
    let a_tree = Explorer::new(&distinct);
    let b_tree = Explorer::new(&nondiag);
    let mut a_level = a_tree.build_tree((m - 1) as u64)?.remove(0);
    let mut b_level = b_tree.build_tree((m - 1) as u64)?.remove(0);
    if genus_cap < a_level.genus {
        return Err(Error::InvalidBound {
            bound: genus_cap as i64,
            min: a_level.genus as i64,
        });
    }

    let mut levels = Vec::new();
    let mut witness = None;
    loop {
        let a: Vec<&NumericalSemigroup> = a_level.semigroups().collect();
        let b: Vec<&NumericalSemigroup> = b_level.semigroups().collect();
        let nondiag_within_distinct = b.iter().all(|s| a.binary_search(s).is_ok());
        let outside: Vec<&NumericalSemigroup> = a
            .iter()
            .copied()
            .filter(|s| b.binary_search(s).is_err())
            .collect();
        if witness.is_none() {
            witness = outside.first().map(|&s| s.clone());
        }
        levels.push(ProbeLevel {
            genus: a_level.genus,
            distinct_members: a.len(),
            nondiag_members: b.len(),
            nondiag_within_distinct,
            separating: outside.len(),
        });
        if a_level.genus >= genus_cap || a_level.nodes.is_empty() {
            break;
        }
        a_level = a_tree.expand(&a_level)?;
        b_level = b_tree.expand(&b_level)?;
    }

    Ok(ProbeReport {
        experimental: true,
        m,
        n,
        genus_cap,
        levels,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn removed(children: &[Child]) -> Vec<i64> {
        children.iter().map(|(x, _)| *x).collect()
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("level:2".parse::<FamilyKind>(), Ok(FamilyKind::Level(2)));
        assert_eq!("thin:3".parse::<FamilyKind>(), Ok(FamilyKind::Thin(3)));
        assert_eq!("strong".parse::<FamilyKind>(), Ok(FamilyKind::Strong));
        assert_eq!(
            "strong-distinct:3".parse::<FamilyKind>(),
            Ok(FamilyKind::StrongDistinct(3))
        );
        assert_eq!(
            "strong-nondiag:4".parse::<FamilyKind>(),
            Ok(FamilyKind::StrongNondiag(4))
        );
        for bad in [
            "level",
            "level:0",
            "thin:1",
            "strong:2",
            "weak",
            "level:x",
            "strong-distinct:1",
        ] {
            assert!(bad.parse::<FamilyKind>().is_err(), "{bad}");
        }
        for kind in [
            FamilyKind::Level(3),
            FamilyKind::Strong,
            FamilyKind::StrongNondiag(3),
        ] {
            assert_eq!(kind.to_string().parse::<FamilyKind>(), Ok(kind));
        }
        assert_eq!(FamilyDescriptor::strong(1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn materialized_patterns() {
        let thin = FamilyDescriptor::thin(2, 4).unwrap().pattern().unwrap();
        assert_eq!(thin.tuples(), &[vec![1, 1], vec![2, 2], vec![3, 3]]);
        let strong = FamilyDescriptor::strong(3).unwrap().pattern().unwrap();
        assert_eq!(strong.tuples(), &[vec![1, 2], vec![2, 1]]);
        let level = FamilyDescriptor::level(2, 3).unwrap().pattern().unwrap();
        assert_eq!(level.len(), 8);
        assert_eq!(
            FamilyDescriptor::strong_distinct(3, 5)
                .unwrap()
                .pattern()
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            FamilyDescriptor::strong_nondiag(3, 5)
                .unwrap()
                .pattern()
                .unwrap()
                .len(),
            60
        );
        assert!(FamilyDescriptor::strong_distinct(4, 4)
            .unwrap()
            .pattern()
            .unwrap()
            .is_empty());
        assert_eq!(
            family_pattern(&FamilyDescriptor::level(5, 11).unwrap(), 1000),
            Err(Error::TooLarge {
                count: 1_000_000,
                cap: 1000
            })
        );
    }

    #[test]
    fn level_membership() {
        assert!(is_n_level(&sg(&[5, 7, 16]), 2));
        assert!(is_n_level(&sg(&[5, 6, 19]), 3));
        assert!(!is_n_level(&sg(&[5, 6, 19]), 2));
        assert!(is_n_level(&sg(&[5, 6, 13, 14]), 2));
        assert!(!is_n_level(&sg(&[5, 6, 13, 14]), 1));
        assert!(is_n_level(&sg(&[5, 6]), 4));
        assert!(!is_n_level(&sg(&[5, 6]), 3));
    }

    #[test]
    fn level_children() {
        let d4 = NumericalSemigroup::ordinary(4).unwrap();
        assert_eq!(removed(&n_level_children(&d4, 2).unwrap()), vec![5, 6, 7]);
        assert!(n_level_children(&sg(&[4, 5, 6]), 2).unwrap().is_empty());
        assert_eq!(
            removed(&n_level_children(&sg(&[4, 6, 7, 9]), 2).unwrap()),
            vec![6, 7, 9]
        );
        assert_eq!(
            n_level_children(&sg(&[5, 6, 19]), 2),
            Err(Error::NotAMember)
        );
    }

    #[test]
    fn level_apery() {
        assert_eq!(
            second_level_apery(&sg(&[5, 6, 13])).unwrap().as_slice(),
            &[0, 6, 12, 13, 19]
        );
        assert_eq!(
            second_level_apery(&sg(&[5, 7, 16])).unwrap().as_slice(),
            &[0, 16, 7, 23, 14]
        );
        assert_eq!(
            second_level_apery(&NumericalSemigroup::ordinary(6).unwrap())
                .unwrap()
                .as_slice(),
            &[0, 7, 8, 9, 10, 11]
        );
        assert_eq!(second_level_apery(&sg(&[5, 6, 19])), Err(Error::NotAMember));
    }

    #[test]
    fn thin_membership_and_children() {
        assert!(is_n_thin(&sg(&[4, 6, 7]), 2));
        assert!(!is_n_thin(&sg(&[5, 6]), 2));
        for m in 2..8 {
            for n in 2..5 {
                assert!(is_n_thin(&NumericalSemigroup::ordinary(m).unwrap(), n));
            }
        }
        let d4 = NumericalSemigroup::ordinary(4).unwrap();
        assert_eq!(removed(&thin_children(&d4, 2).unwrap()), vec![5, 7]);
        assert_eq!(
            removed(&thin_children(&sg(&[4, 7, 9, 10]), 2).unwrap()),
            vec![7, 9]
        );
        assert_eq!(
            removed(&thin_children(&sg(&[4, 6, 7, 9]), 2).unwrap()),
            vec![6, 7, 9]
        );
    }

    #[test]
    fn thin_apery_tables() {
        assert_eq!(
            thin_apery(&sg(&[4, 6, 7])).unwrap().as_slice(),
            &[0, 13, 6, 7]
        );
        assert_eq!(
            thin_apery(&sg(&[4, 6, 9, 11])).unwrap().as_slice(),
            &[0, 9, 6, 11]
        );
        assert_eq!(
            thin_apery(&NumericalSemigroup::ordinary(5).unwrap())
                .unwrap()
                .as_slice(),
            &[0, 6, 7, 8, 9]
        );
    }

    #[test]
    fn strong_membership_children_apery() {
        assert!(is_strong(&sg(&[4, 5, 7])));
        assert!(!is_strong(&sg(&[4, 6, 7])));
        assert!(is_strong(&NumericalSemigroup::ordinary(5).unwrap()));
        let d4 = NumericalSemigroup::ordinary(4).unwrap();
        assert_eq!(removed(&strong_children(&d4).unwrap()), vec![5, 6]);
        assert_eq!(removed(&strong_children(&sg(&[4, 5, 7])).unwrap()), vec![7]);
        assert_eq!(
            removed(&strong_children(&sg(&[4, 6, 7, 9])).unwrap()),
            vec![6, 7]
        );
        assert_eq!(
            strong_apery(&sg(&[4, 5, 7])).unwrap().as_slice(),
            &[0, 5, 10, 7]
        );
        assert_eq!(
            strong_apery(&sg(&[4, 6, 9, 11])).unwrap().as_slice(),
            &[0, 9, 6, 11]
        );
        assert_eq!(strong_apery(&sg(&[4, 6, 7])), Err(Error::NotAMember));
    }

    #[test]
    fn thin_and_strong_are_incomparable() {
        assert!(is_n_thin(&sg(&[4, 6, 9]), 2) && !is_strong(&sg(&[4, 6, 9])));
        assert!(is_strong(&sg(&[4, 7, 9])) && !is_n_thin(&sg(&[4, 7, 9]), 2));
    }

    #[test]
    fn probe_at_root_genus() {
        let report = conjecture_probe(5, 3, 4).unwrap();
        assert_eq!(report.levels.len(), 1);
        assert_eq!(report.levels[0].distinct_members, 1);
        assert_eq!(report.levels[0].nondiag_members, 1);
        assert!(report.witness.is_none());
        assert!(report.is_consistent());
        assert!(conjecture_probe(5, 2, 6).is_err());
        assert!(conjecture_probe(5, 5, 6).is_err());
        assert!(matches!(
            conjecture_probe(5, 3, 3),
            Err(Error::InvalidBound { .. })
        ));
    }
}
