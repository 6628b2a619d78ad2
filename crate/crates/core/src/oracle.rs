//! Brute-force ground truth.
//!
//! Everything here works on explicit element sets up to a bound and follows
//! the definitions directly: closure under addition, gap scans, the raw
//! `s_1 + ... + s_k - m ∈ S` condition, and removal of minimal generators by
//! recomputing the element set. Nothing here uses Apéry tables, so it can be
//! used to check the fast modules. It is slow on purpose.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::pattern::PatternSet;
use crate::semigroup::{InvariantReport, NumericalSemigroup};

/// All elements of a semigroup in `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSet {
    bound: i64,
    member: Vec<bool>,
}

impl OracleSet {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Membership inside `[0, bound]`. Panics above the bound.
    pub fn contains(&self, n: i64) -> bool {
        assert!(
            n <= self.bound,
            "{n} is beyond the oracle bound {}",
            self.bound
        );
        n >= 0 && self.member[n as usize]
    }

    pub fn elements(&self) -> Vec<i64> {
        (0..=self.bound)
            .filter(|&n| self.member[n as usize])
            .collect()
    }

    pub fn multiplicity(&self) -> Option<i64> {
        (1..=self.bound).find(|&n| self.member[n as usize])
    }

    fn largest_gap(&self) -> i64 {
        (0..=self.bound)
            .rev()
            .find(|&n| !self.member[n as usize])
            .unwrap_or(-1)
    }

    /// Multiplicity and Frobenius number, provided the bound reaches
    /// `F + extra_multiples * m`.
    fn certified(&self, extra_multiples: i64) -> Result<(i64, i64)> {
        let m = self
            .multiplicity()
            .ok_or(Error::InsufficientBound(self.bound))?;
        let f = self.largest_gap();
        if self.bound < f + extra_multiples * m {
            return Err(Error::InsufficientBound(self.bound));
        }
        Ok((m, f))
    }

    /// Nonzero elements that are not a sum of two nonzero elements.
    /// Needs the bound to reach `F + 2m`.
    pub fn minimal_generators(&self) -> Result<Vec<i64>> {
        let (m, f) = self.certified(2)?;
        let limit = f + m;
        let nonzero: Vec<i64> = (1..=limit).filter(|&n| self.member[n as usize]).collect();
        Ok(nonzero
            .iter()
            .copied()
            .filter(|&x| {
                !nonzero
                    .iter()
                    .take_while(|&&a| a <= x / 2)
                    .any(|&a| self.member[(x - a) as usize])
            })
            .collect())
    }

    /// `S \ {x}` re-extended to `new_bound`. Integers above the old bound
    /// are members, so the set must already be certified.
    pub fn without(&self, x: i64, new_bound: i64) -> OracleSet {
        let mut member: Vec<bool> = (0..=new_bound)
            .map(|n| n > self.bound || self.member[n as usize])
            .collect();
        member[x as usize] = false;
        OracleSet {
            bound: new_bound,
            member,
        }
    }

    pub fn intersection(&self, other: &OracleSet) -> OracleSet {
        let bound = self.bound.min(other.bound);
        OracleSet {
            bound,
            member: (0..=bound as usize)
                .map(|n| self.member[n] && other.member[n])
                .collect(),
        }
    }
}

/// Every non-negative combination of `gens` up to `bound`.
pub fn closure_elements(gens: &[i64], bound: i64) -> OracleSet {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for n in 1..=bound {
        member[n as usize] = gens
            .iter()
            .any(|&g| g >= 1 && g <= n && member[(n - g) as usize]);
    }
    OracleSet { bound, member }
}

/// Frobenius number, genus, pseudo-Frobenius numbers and type by scanning
/// the gaps.
pub fn naive_invariants(o: &OracleSet) -> Result<InvariantReport> {
    let (_, f) = o.certified(2)?;
    let gaps: Vec<i64> = (1..=f).filter(|&n| !o.member[n as usize]).collect();
    let elements = o.elements();
    let pseudo_frobenius: Vec<i64> = gaps
        .iter()
        .copied()
        .filter(|&x| {
            elements
                .iter()
                .skip(1)
                .take_while(|&&s| s <= o.bound - x)
                .all(|&s| o.member[(x + s) as usize])
        })
        .collect();
    Ok(InvariantReport {
        frobenius: f,
        genus: gaps.len() as u64,
        r#type: pseudo_frobenius.len(),
        pseudo_frobenius,
    })
}

/// The defining condition of `C(m, A)`, checked over all tuples of nonzero
/// elements up to `F + m` in the prescribed residue classes.
///
/// Larger summands differ from one of these by a multiple of `m`, which only
/// adds an element of the semigroup, so this range decides the condition.
pub fn naive_c_membership(p: &PatternSet, o: &OracleSet) -> Result<bool> {
    let m = p.modulus() as i64;
    let k_max = p.max_arity() as i64;
    let (mult, f) = o.certified(k_max + 1)?;
    if mult != m {
        return Ok(false);
    }
    let by_class: Vec<Vec<i64>> = (0..m)
        .map(|r| {
            (1..=f + m)
                .filter(|&s| s % m == r && o.member[s as usize])
                .collect()
        })
        .collect();
    let in_s = |v: i64| v > f || (v >= 0 && o.member[v as usize]);
    Ok(p.tuples().iter().all(|t| {
        t.iter()
            .map(|&i| by_class[i].iter())
            .multi_cartesian_product()
            .all(|choice| in_s(choice.into_iter().sum::<i64>() - m))
    }))
}

fn bound_for(frobenius: i64, m: i64, k_max: usize) -> i64 {
    frobenius + (k_max as i64 + 1).max(2) * m + 1
}

/// `x` in the naive generators of `o` with `x > F` and `x != m`, paired with
/// the element set of `S \ {x}`.
fn naive_removals(o: &OracleSet, k_max: usize) -> Result<Vec<(i64, OracleSet)>> {
    let (m, f) = o.certified(2)?;
    Ok(o.minimal_generators()?
        .into_iter()
        .filter(|&x| x > f && x != m)
        .map(|x| (x, o.without(x, bound_for(x, m, k_max))))
        .collect())
}

/// The brute-force child filter: removable generators `x` with `S \ {x}`
/// passing the defining condition, as `(x, naive generators of the child)`.
pub fn naive_children(p: &PatternSet, o: &OracleSet) -> Result<Vec<(i64, Vec<i64>)>> {
    let mut out = Vec::new();
    for (x, child) in naive_removals(o, p.max_arity())? {
        if naive_c_membership(p, &child)? {
            out.push((x, child.minimal_generators()?));
        }
    }
    Ok(out)
}

/// Element sets of every numerical semigroup with multiplicity `m` and the
/// given genus, sorted by their generators.
pub fn naive_semigroups(m: i64, genus: u64, k_max: usize) -> Result<Vec<OracleSet>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let root_genus = (m - 1) as u64;
    if genus < root_genus {
        return Ok(Vec::new());
    }
    let root_gens: Vec<i64> = (m..2 * m).collect();
    let mut level = vec![closure_elements(&root_gens, bound_for(m - 1, m, k_max))];
    for _ in root_genus..genus {
        let mut next = Vec::new();
        for o in &level {
            next.extend(
                naive_removals(o, k_max)?
                    .into_iter()
                    .map(|(_, child)| child),
            );
        }
        level = next;
    }
    let mut keyed: Vec<(Vec<i64>, OracleSet)> = level
        .into_iter()
        .map(|o| Ok((o.minimal_generators()?, o)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, o)| o).collect())
}

/// Every member of `C(m, A)` of the given genus: all semigroups of
/// multiplicity `m` and that genus, filtered by [`naive_c_membership`].
pub fn naive_enumerate(p: &PatternSet, genus: u64) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    for o in naive_semigroups(p.modulus() as i64, genus, p.max_arity())? {
        if naive_c_membership(p, &o)? {
            out.push(NumericalSemigroup::from_generators(
                &o.minimal_generators()?,
            )?);
        }
    }
    Ok(out)
}
