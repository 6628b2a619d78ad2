//! Pattern sets `A` over a modulus `m` and the pseudo-variety `C(m, A)`.
//!
//! A semigroup `S` of multiplicity `m` belongs to `C(m, A)` when every choice
//! of elements `s_1, ..., s_k` whose residues modulo `m` form a tuple of `A`
//! satisfies `s_1 + ... + s_k - m ∈ S`. It suffices to check the Apéry
//! representatives `w(i_1) + ... + w(i_k) - m` of each tuple.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// On-disk form: `{"m": <int>, "tuples": [[i1, ..., ik], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternFile {
    pub m: i64,
    pub tuples: Vec<Vec<i64>>,
}

/// A validated pattern set.
///
/// `tuples` keeps the distinct ordered tuples as given. The membership
/// condition is symmetric in the summands, so the checks run over
/// `constraints`: one sorted representative per multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    m: usize,
    tuples: Vec<Vec<usize>>,
    constraints: Vec<Vec<usize>>,
}

/// One `(removed generator, child)` pair.
pub type Child = (i64, NumericalSemigroup);

impl PatternSet {
    /// Validates and deduplicates a raw tuple list.
    pub fn new(m: i64, tuples: &[Vec<i64>]) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        let mu = usize::try_from(m).map_err(|_| Error::InvalidModulus(m))?;
        let mut valid = Vec::with_capacity(tuples.len());
        for t in tuples {
            if t.len() < 2 {
                return Err(Error::InvalidTuple {
                    m: mu,
                    tuple: t.clone(),
                    reason: "arity must be at least 2",
                });
            }
            if t.iter().any(|&i| i < 1 || i >= m) {
                return Err(Error::InvalidTuple {
                    m: mu,
                    tuple: t.clone(),
                    reason: "entries must lie in 1..m-1",
                });
            }
            valid.push(t.iter().map(|&i| i as usize).collect());
        }
        Ok(Self::from_valid(mu, valid))
    }

    /// Builds a set from tuples already known to be valid for `m`.
    pub(crate) fn from_valid(m: usize, tuples: Vec<Vec<usize>>) -> Self {
        let tuples: BTreeSet<Vec<usize>> = tuples.into_iter().collect();
        let constraints: BTreeSet<Vec<usize>> = tuples
            .iter()
            .map(|t| {
                let mut c = t.clone();
                c.sort_unstable();
                c
            })
            .collect();
        Self {
            m,
            tuples: tuples.into_iter().collect(),
            constraints: constraints.into_iter().collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PatternFile =
            serde_json::from_str(text).map_err(|e| Error::PatternFormat(e.to_string()))?;
        Self::new(file.m, &file.tuples)
    }

    pub fn to_file(&self) -> PatternFile {
        PatternFile {
            m: self.m as i64,
            tuples: self
                .tuples
                .iter()
                .map(|t| t.iter().map(|&i| i as i64).collect())
                .collect(),
        }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// Distinct ordered tuples, sorted.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// One sorted tuple per distinct multiset of residues.
    pub fn constraints(&self) -> &[Vec<usize>] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn max_arity(&self) -> usize {
        self.tuples.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn apery_sums<'a>(&'a self, s: &'a NumericalSemigroup) -> impl Iterator<Item = i64> + 'a {
        let w = s.apery_table();
        self.constraints
            .iter()
            .map(move |c| c.iter().map(|&i| w.get(i)).sum())
    }

    /// Membership in `C(m, A)`. A multiplicity other than `m` is a plain
    /// negative answer.
    pub fn is_member(&self, s: &NumericalSemigroup) -> bool {
        let m = self.m as i64;
        s.multiplicity() == m && self.apery_sums(s).all(|sum| s.contains(sum - m))
    }

    /// Children of `s` in the tree of `C(m, A)`, ascending by removed
    /// generator.
    ///
    /// `S \ {x}` stays in `C(m, A)` iff no tuple has Apéry sum `m + x`
    /// (sums taken in the parent).
    pub fn children(&self, s: &NumericalSemigroup) -> Result<Vec<Child>> {
        if !self.is_member(s) {
            return Err(Error::NotAMember);
        }
        let m = self.m as i64;
        let sums: HashSet<i64> = self.apery_sums(s).collect();
        let frobenius = s.frobenius();
        s.non_multiplicity_generators()
            .iter()
            .filter(|&&x| x > frobenius && !sums.contains(&(m + x)))
            .map(|&x| Ok((x, s.remove_generator(x)?)))
            .collect()
    }

    /// True when every tuple has arity at least `m`; then `C(m, A)` contains
    /// every semigroup of multiplicity `m`. Vacuously true for empty sets.
    pub fn is_trivially_all(&self) -> bool {
        self.tuples.iter().all(|t| t.len() >= self.m)
    }

    /// True when every tuple of `other` contains, as a sub-multiset, some
    /// tuple of `self`. That guarantees `C(m, self) ⊆ C(m, other)`; a false
    /// answer says nothing about inclusion.
    pub fn implies_by_extension(&self, other: &PatternSet) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch(self.m, other.m));
        }
        Ok(other
            .constraints
            .iter()
            .all(|b| self.constraints.iter().any(|a| is_sub_multiset(a, b))))
    }
}

/// Both slices sorted ascending.
fn is_sub_multiset(small: &[usize], big: &[usize]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut rest = big.iter();
    'outer: for a in small {
        for b in rest.by_ref() {
            if b == a {
                continue 'outer;
            }
            if b > a {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn ps(m: i64, tuples: &[&[i64]]) -> PatternSet {
        let raw: Vec<Vec<i64>> = tuples.iter().map(|t| t.to_vec()).collect();
        PatternSet::new(m, &raw).unwrap()
    }

    fn removed(children: &[Child]) -> Vec<i64> {
        children.iter().map(|(x, _)| *x).collect()
    }

    #[test]
    fn validation() {
        let p = ps(5, &[&[1, 3], &[2, 2]]);
        assert_eq!(p.len(), 2);
        assert_eq!(ps(5, &[&[1, 3], &[1, 3]]).len(), 1);
        assert!(matches!(
            PatternSet::new(4, &[vec![1, 4]]),
            Err(Error::InvalidTuple { .. })
        ));
        assert!(matches!(
            PatternSet::new(4, &[vec![2]]),
            Err(Error::InvalidTuple { .. })
        ));
        assert!(matches!(
            PatternSet::new(4, &[vec![0, 1]]),
            Err(Error::InvalidTuple { .. })
        ));
        assert_eq!(PatternSet::new(1, &[]), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn permutations_share_one_constraint() {
        let p = ps(5, &[&[1, 3], &[3, 1], &[2, 1, 1], &[1, 2, 1]]);
        assert_eq!(p.len(), 4);
        assert_eq!(p.constraints(), &[vec![1, 1, 2], vec![1, 3]]);
    }

    #[test]
    fn json_round_trip() {
        let p = PatternSet::from_json(r#"{"m": 5, "tuples": [[1,3],[2,2]]}"#).unwrap();
        assert_eq!(p, ps(5, &[&[1, 3], &[2, 2]]));
        let text = serde_json::to_string(&p.to_file()).unwrap();
        assert_eq!(PatternSet::from_json(&text).unwrap(), p);
        assert!(matches!(
            PatternSet::from_json(r#"{"m": 5, "tuples": [], "extra": 1}"#),
            Err(Error::PatternFormat(_))
        ));
        assert!(matches!(
            PatternSet::from_json(r#"{"tuples": []}"#),
            Err(Error::PatternFormat(_))
        ));
    }

    #[test]
    fn membership() {
        assert!(ps(5, &[&[1, 3], &[2, 2]]).is_member(&sg(&[5, 7, 9])));
        let cube: Vec<Vec<i64>> = itertools::iproduct!(1..5, 1..5, 1..5)
            .map(|(a, b, c)| vec![a, b, c])
            .collect();
        let level2 = PatternSet::new(5, &cube).unwrap();
        assert!(!level2.is_member(&sg(&[5, 6, 19])));
        for m in 2..7 {
            let d = NumericalSemigroup::ordinary(m).unwrap();
            let all: Vec<Vec<i64>> = (1..m)
                .flat_map(|i| (1..m).map(move |j| vec![i, j]))
                .collect();
            assert!(PatternSet::new(m, &all).unwrap().is_member(&d));
        }
        // multiplicity mismatch is a negative verdict
        assert!(!ps(5, &[&[1, 3]]).is_member(&sg(&[4, 5, 6, 7])));
        assert!(!ps(5, &[]).is_member(&sg(&[1])));
    }

    #[test]
    fn children_match_worked_example() {
        let p = ps(5, &[&[1, 1], &[1, 2]]);
        let root = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(removed(&p.children(&root).unwrap()), vec![6, 9]);
        assert!(p.children(&sg(&[5, 6, 7, 8])).unwrap().is_empty());
        assert_eq!(
            removed(&p.children(&sg(&[5, 7, 8, 9, 11])).unwrap()),
            vec![7, 8, 9, 11]
        );
        assert_eq!(p.children(&sg(&[5, 6])), Err(Error::NotAMember));
    }

    #[test]
    fn pigeonhole_triviality() {
        assert!(ps(3, &[&[1, 2, 1]]).is_trivially_all());
        let p = ps(5, &[&[1, 1]]);
        assert!(!p.is_trivially_all());
        assert!(!p.is_member(&sg(&[5, 6])));
        assert!(ps(4, &[]).is_trivially_all());
    }

    #[test]
    fn extension_implication() {
        let a = ps(5, &[&[1, 1], &[3, 4]]);
        let b = ps(5, &[&[1, 1, 2], &[1, 3, 1], &[1, 3, 4]]);
        assert_eq!(a.implies_by_extension(&b), Ok(true));
        assert_eq!(b.implies_by_extension(&a), Ok(false));
        let sub = ps(5, &[&[3, 4]]);
        assert_eq!(a.implies_by_extension(&sub), Ok(true));
        assert_eq!(
            ps(5, &[&[1, 1]]).implies_by_extension(&ps(5, &[&[2, 2]])),
            Ok(false)
        );
        assert_eq!(
            a.implies_by_extension(&ps(6, &[&[1, 1]])),
            Err(Error::ModulusMismatch(5, 6))
        );
    }

    #[test]
    fn sub_multisets() {
        assert!(is_sub_multiset(&[1, 3], &[1, 1, 3]));
        assert!(is_sub_multiset(&[1, 1], &[1, 1, 2]));
        assert!(!is_sub_multiset(&[1, 1], &[1, 2, 3]));
        assert!(!is_sub_multiset(&[3, 4], &[1, 3]));
        assert!(is_sub_multiset(&[], &[2]));
    }
}
