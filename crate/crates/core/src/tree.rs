//! The rooted tree of a modular pseudo-variety and its level-by-level
//! enumeration.
//!
//! The root is the ordinary semigroup of multiplicity `m` (genus `m - 1`) and
//! the members of genus `g + 1` are exactly the children of the members of
//! genus `g`. Levels are kept sorted by generators, so the output does not
//! depend on how many workers expanded them.

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{Child, PatternSet};
use crate::semigroup::NumericalSemigroup;

/// A child test for the semigroups of one pseudo-variety.
pub trait ChildRule: Sync {
    fn modulus(&self) -> i64;

    /// Children of a member, ascending by removed generator.
    fn children(&self, s: &NumericalSemigroup) -> Result<Vec<Child>>;
}

impl ChildRule for PatternSet {
    fn modulus(&self) -> i64 {
        PatternSet::modulus(self) as i64
    }

    fn children(&self, s: &NumericalSemigroup) -> Result<Vec<Child>> {
        PatternSet::children(self, s)
    }
}

impl<R: ChildRule + ?Sized> ChildRule for &R {
    fn modulus(&self) -> i64 {
        (**self).modulus()
    }

    fn children(&self, s: &NumericalSemigroup) -> Result<Vec<Child>> {
        (**self).children(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    #[serde(rename = "msg")]
    pub semigroup: NumericalSemigroup,
    /// Index into the previous level; `None` for the root.
    pub parent: Option<usize>,
    /// The minimal generator of the parent removed to obtain this node.
    pub edge: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeLevel {
    pub genus: u64,
    pub nodes: Vec<TreeNode>,
}

impl TreeLevel {
    pub fn semigroups(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.nodes.iter().map(|n| &n.semigroup)
    }
}

/// Breadth-first walk over the tree of a pseudo-variety.
pub struct Explorer<R> {
    rule: R,
    pool: Option<ThreadPool>,
}

impl<R: ChildRule> Explorer<R> {
    pub fn new(rule: R) -> Self {
        Self { rule, pool: None }
    }

    /// Expand each level with `jobs` worker threads. `jobs <= 1` stays on the
    /// calling thread.
    pub fn with_jobs(mut self, jobs: usize) -> Result<Self> {
        self.pool = if jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Some(pool)
        } else {
            None
        };
        Ok(self)
    }

    pub fn rule(&self) -> &R {
        &self.rule
    }

    fn root(&self) -> Result<TreeLevel> {
        let root = NumericalSemigroup::ordinary(self.rule.modulus())?;
        Ok(TreeLevel {
            genus: root.genus(),
            nodes: vec![TreeNode {
                semigroup: root,
                parent: None,
                edge: None,
            }],
        })
    }

    /// The next level, or an empty level when no node has children.
    pub fn expand(&self, level: &TreeLevel) -> Result<TreeLevel> {
        let expand_one = |(idx, node): (usize, &TreeNode)| -> Result<Vec<TreeNode>> {
            Ok(self
                .rule
                .children(&node.semigroup)?
                .into_iter()
                .map(|(x, child)| TreeNode {
                    semigroup: child,
                    parent: Some(idx),
                    edge: Some(x),
                })
                .collect())
        };
        let batches: Vec<Vec<TreeNode>> = match &self.pool {
            Some(pool) => pool.install(|| {
                level
                    .nodes
                    .par_iter()
                    .enumerate()
                    .map(expand_one)
                    .collect::<Result<_>>()
            })?,
            None => level
                .nodes
                .iter()
                .enumerate()
                .map(expand_one)
                .collect::<Result<_>>()?,
        };
        let mut nodes: Vec<TreeNode> = batches.into_iter().flatten().collect();
        nodes.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
        Ok(TreeLevel {
            genus: level.genus + 1,
            nodes,
        })
    }

    /// All members of genus `genus`, sorted by generators. Only two levels
    /// are held at a time.
    pub fn enumerate_genus(&self, genus: u64) -> Result<Vec<NumericalSemigroup>> {
        let mut level = self.root()?;
        if genus < level.genus {
            return Ok(Vec::new());
        }
        while level.genus < genus {
            level = self.expand(&level)?;
            if level.nodes.is_empty() {
                return Ok(Vec::new());
            }
        }
        Ok(level.nodes.into_iter().map(|n| n.semigroup).collect())
    }

    /// Levels from the root up to `max_genus`. Stops early at the first
    /// empty level, which is not included.
    pub fn build_tree(&self, max_genus: u64) -> Result<Vec<TreeLevel>> {
        let root = self.root()?;
        if max_genus < root.genus {
            return Err(Error::InvalidBound {
                bound: max_genus as i64,
                min: root.genus as i64,
            });
        }
        let mut levels = vec![root];
        while levels.last().is_some_and(|l| l.genus < max_genus) {
            let next = self.expand(levels.last().expect("non-empty"))?;
            if next.nodes.is_empty() {
                break;
            }
            levels.push(next);
        }
        Ok(levels)
    }
}

pub fn enumerate_genus<R: ChildRule>(rule: R, genus: u64) -> Result<Vec<NumericalSemigroup>> {
    Explorer::new(rule).enumerate_genus(genus)
}

pub fn build_tree<R: ChildRule>(rule: R, max_genus: u64) -> Result<Vec<TreeLevel>> {
    Explorer::new(rule).build_tree(max_genus)
}
