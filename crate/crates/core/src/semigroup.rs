//! Numerical semigroups represented by their minimal system of generators.
//!
//! Every semigroup carries its Apéry table with respect to the multiplicity,
//! computed eagerly at construction. All invariants (Frobenius number, genus,
//! pseudo-Frobenius numbers, membership) are read off that table.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest accepted generator. Sums of a handful of generators stay far below
/// `i64::MAX`.
pub const MAX_GENERATOR: i64 = 1 << 31;

/// Largest accepted multiplicity; the Apéry table holds one entry per residue.
pub const MAX_MULTIPLICITY: i64 = 1 << 24;

/// The least element of a semigroup in each residue class modulo a fixed
/// nonzero element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AperyTable {
    modulus: i64,
    w: Vec<i64>,
}

impl AperyTable {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.w
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.w
    }

    /// `w(residue)`.
    pub fn get(&self, residue: usize) -> i64 {
        self.w[residue]
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn max(&self) -> i64 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    /// `n` belongs to the semigroup iff `n >= w(n mod x)`.
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n >= self.w[(n % self.modulus) as usize]
    }

    /// Builds the table whose entry `i` is the least candidate congruent to
    /// `i`. Returns `None` when some class has no candidate.
    pub(crate) fn from_candidates(
        modulus: i64,
        candidates: impl IntoIterator<Item = i64>,
    ) -> Option<Self> {
        let mut w = vec![i64::MAX; modulus as usize];
        for c in candidates {
            let r = (c % modulus) as usize;
            w[r] = w[r].min(c);
        }
        if w.contains(&i64::MAX) {
            return None;
        }
        Some(Self { modulus, w })
    }

    /// Least element per residue class, by Dijkstra over the classes modulo
    /// `modulus` with one edge per generator.
    fn shortest_paths(modulus: i64, gens: &[i64]) -> Self {
        let n = modulus as usize;
        let steps: Vec<(i64, usize)> = gens
            .iter()
            .filter(|&&g| g % modulus != 0)
            .map(|&g| (g, (g % modulus) as usize))
            .collect();

        let mut dist = vec![i64::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[0] = 0;
        heap.push(Reverse((0i64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &(g, step) in &steps {
                let next = (r + step) % n;
                let nd = d + g;
                if nd < dist[next] {
                    dist[next] = nd;
                    heap.push(Reverse((nd, next)));
                }
            }
        }
        Self { modulus, w: dist }
    }
}

/// Frobenius number, genus, pseudo-Frobenius numbers and type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub frobenius: i64,
    pub genus: u64,
    pub pseudo_frobenius: Vec<i64>,
    pub r#type: usize,
}

/// A numerical semigroup, identified by its minimal system of generators.
///
/// Equality, ordering and hashing look at the generators only; the cached
/// Apéry table is a function of them.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    msg: Vec<i64>,
    apery: AperyTable,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.msg == other.msg
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.msg.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.msg.cmp(&other.msg)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<Ser: serde::Serializer>(
        &self,
        serializer: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        self.msg.serialize(serializer)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.msg.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generators.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if let Some(&bad) = gens.iter().find(|&&g| !(1..=MAX_GENERATOR).contains(&g)) {
            return Err(Error::InvalidGenerators(format!(
                "generator {bad} outside 1..={MAX_GENERATOR}"
            )));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            return Err(Error::NotANumericalSemigroup(sorted));
        }
        let m = sorted[0];
        if m > MAX_MULTIPLICITY {
            return Err(Error::InvalidGenerators(format!(
                "multiplicity {m} exceeds {MAX_MULTIPLICITY}"
            )));
        }

        let apery = AperyTable::shortest_paths(m, &sorted);
        let w = apery.as_slice();
        // A generator other than m is minimal iff it is its class's Apéry
        // element and no other nonzero Apéry element lies below it in <=_S.
        let mut msg = vec![m];
        for &g in &sorted[1..] {
            let r = (g % m) as usize;
            if g != w[r] {
                continue;
            }
            let decomposable = w
                .iter()
                .enumerate()
                .any(|(j, &wj)| j != 0 && j != r && wj < g && apery.contains(g - wj));
            if !decomposable {
                msg.push(g);
            }
        }
        Ok(Self { msg, apery })
    }

    /// The ordinary semigroup `{0, m, m+1, ...}`.
    pub fn ordinary(m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        if m > MAX_MULTIPLICITY {
            return Err(Error::InvalidGenerators(format!(
                "multiplicity {m} exceeds {MAX_MULTIPLICITY}"
            )));
        }
        let msg: Vec<i64> = (m..2 * m).collect();
        let w = std::iter::once(0).chain(m + 1..2 * m).collect();
        Ok(Self {
            msg,
            apery: AperyTable { modulus: m, w },
        })
    }

    pub fn msg(&self) -> &[i64] {
        &self.msg
    }

    pub fn multiplicity(&self) -> i64 {
        self.msg[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.msg.len()
    }

    /// True for the semigroup of all non-negative integers.
    pub fn is_naturals(&self) -> bool {
        self.msg[0] == 1
    }

    /// Minimal generators other than the multiplicity.
    pub fn non_multiplicity_generators(&self) -> &[i64] {
        &self.msg[1..]
    }

    /// Apéry table with respect to the multiplicity.
    pub fn apery_table(&self) -> &AperyTable {
        &self.apery
    }

    /// Apéry table with respect to an arbitrary nonzero element `x`.
    pub fn apery(&self, x: i64) -> Result<AperyTable> {
        if x < 1 || !self.contains(x) {
            return Err(Error::NotAnElement(x));
        }
        if x == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        if x > MAX_MULTIPLICITY {
            return Err(Error::InvalidParameter(format!(
                "Apéry modulus {x} exceeds {MAX_MULTIPLICITY}"
            )));
        }
        Ok(AperyTable::shortest_paths(x, &self.msg))
    }

    pub fn contains(&self, n: i64) -> bool {
        self.apery.contains(n)
    }

    /// True iff `a <=_S b`, that is `b - a` belongs to the semigroup.
    pub fn follows(&self, a: i64, b: i64) -> bool {
        self.contains(b - a)
    }

    /// Greatest integer outside the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.apery.max() - self.multiplicity()
    }

    pub fn genus(&self) -> u64 {
        let m = self.multiplicity() as i128;
        let sum: i128 = self.apery.w.iter().map(|&w| w as i128).sum();
        ((sum - m * (m - 1) / 2) / m) as u64
    }

    /// The gaps `1..=F(S)` missing from the semigroup, ascending.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.frobenius()).filter(move |&n| !self.contains(n))
    }

    /// Pseudo-Frobenius numbers from the `<=_S`-maximal Apéry elements.
    /// Empty for the naturals.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return Vec::new();
        }
        let w = &self.apery.w;
        let m = self.multiplicity();
        let mut pf: Vec<i64> = w
            .iter()
            .filter(|&&wi| !w.iter().any(|&wj| wj > wi && self.contains(wj - wi)))
            .map(|&wi| wi - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    pub fn type_of(&self) -> Result<usize> {
        if self.is_naturals() {
            return Err(Error::WholeNaturals);
        }
        Ok(self.pseudo_frobenius().len())
    }

    pub fn invariants(&self) -> InvariantReport {
        let pseudo_frobenius = self.pseudo_frobenius();
        InvariantReport {
            frobenius: self.frobenius(),
            genus: self.genus(),
            r#type: pseudo_frobenius.len(),
            pseudo_frobenius,
        }
    }

    /// Maximum number of minimal generators, counted with repetition, over
    /// all factorizations of `s`.
    pub fn max_factorization_length(&self, s: i64) -> Result<u64> {
        if !self.contains(s) {
            return Err(Error::NotAnElement(s));
        }
        let n = s as usize;
        let mut best = vec![-1i64; n + 1];
        best[0] = 0;
        for t in 1..=n {
            best[t] = self
                .msg
                .iter()
                .map(|&g| g as usize)
                .take_while(|&g| g <= t)
                .filter(|&g| best[t - g] >= 0)
                .map(|g| best[t - g] + 1)
                .max()
                .unwrap_or(-1);
        }
        Ok(best[n] as u64)
    }

    /// `S \ {x}` for a minimal generator `x > F(S)` other than the
    /// multiplicity.
    ///
    /// The new generators drop `x` and gain `x + m` unless `x + m - n_j`
    /// is already in `S` for some generator `m < n_j < x`. The Apéry table
    /// changes in exactly one class: `x` is replaced by `x + m`.
    pub fn remove_generator(&self, x: i64) -> Result<Self> {
        let m = self.multiplicity();
        let idx = match self.msg.binary_search(&x) {
            Ok(i) if i > 0 && x > self.frobenius() => i,
            _ => return Err(Error::NotRemovable(x)),
        };
        let absorbed = self.msg[1..idx].iter().any(|&nj| self.contains(x + m - nj));

        let mut msg = self.msg.clone();
        msg.remove(idx);
        if !absorbed {
            let pos = msg.partition_point(|&g| g < x + m);
            msg.insert(pos, x + m);
        }
        let mut apery = self.apery.clone();
        apery.w[(x % m) as usize] = x + m;
        Ok(Self { msg, apery })
    }
}
