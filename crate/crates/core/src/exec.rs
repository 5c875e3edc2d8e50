//! Sequential and data-parallel sweeps over the semigroup tree.
//!
//! Subtrees are independent, so a sweep is a map over nodes followed by an
//! associative, commutative reduction. With the `parallel` feature the
//! upper part of the tree is split across a rayon pool by work stealing;
//! the bottom `SEQUENTIAL_DEPTH` levels of every subtree run on one worker.
//! Without the feature every execution mode runs sequentially.

use std::marker::PhantomData;
use std::ops::RangeInclusive;

use crate::enumeration::EnumerationNode;
use crate::semigroup::NumericalSemigroup;

/// Levels above the deepest requested genus that are walked without
/// spawning further tasks.
const SEQUENTIAL_DEPTH: u64 = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon pool with the given worker count, or the global pool.
    Parallel {
        threads: Option<usize>,
    },
    #[default]
    Auto,
}

impl Execution {
    pub fn with_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Execution::Sequential,
            Some(n) => Execution::Parallel { threads: Some(n) },
            None => Execution::Auto,
        }
    }

    /// Whether this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Maps every semigroup with genus in `genus` and folds the results.
///
/// `reduce` must be associative and commutative with `identity` as unit.
pub fn map_reduce<T, Id, M, R>(
    genus: RangeInclusive<u64>,
    execution: Execution,
    identity: Id,
    map: M,
    reduce: R,
) -> T
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    M: Fn(&NumericalSemigroup) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let sweep = Sweep {
        lo: *genus.start(),
        hi: *genus.end(),
        identity: &identity,
        map: &map,
        reduce: &reduce,
        out: PhantomData,
    };
    if genus.is_empty() {
        return identity();
    }
    match execution {
        Execution::Sequential => sweep.walk_seq(EnumerationNode::root()),
        Execution::Parallel { threads } => sweep.run_parallel(threads),
        Execution::Auto => sweep.run_parallel(None),
    }
}

struct Sweep<'a, T, Id, M, R> {
    lo: u64,
    hi: u64,
    identity: &'a Id,
    map: &'a M,
    reduce: &'a R,
    out: PhantomData<fn() -> T>,
}

impl<T, Id, M, R> Sweep<'_, T, Id, M, R>
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    M: Fn(&NumericalSemigroup) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    fn visit(&self, node: &EnumerationNode) -> T {
        if node.genus() >= self.lo {
            (self.map)(&node.semigroup)
        } else {
            (self.identity)()
        }
    }

    fn walk_seq(&self, root: EnumerationNode) -> T {
        let mut acc = (self.identity)();
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            acc = (self.reduce)(acc, self.visit(&node));
            if node.genus() < self.hi {
                stack.extend(node.children());
            }
        }
        acc
    }

    #[cfg(feature = "parallel")]
    fn run_parallel(&self, threads: Option<usize>) -> T {
        match threads {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| self.walk_par(EnumerationNode::root())),
                Err(_) => self.walk_seq(EnumerationNode::root()),
            },
            None => self.walk_par(EnumerationNode::root()),
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn run_parallel(&self, _threads: Option<usize>) -> T {
        self.walk_seq(EnumerationNode::root())
    }

    #[cfg(feature = "parallel")]
    fn walk_par(&self, node: EnumerationNode) -> T {
        use rayon::prelude::*;

        if self.hi.saturating_sub(node.genus()) <= SEQUENTIAL_DEPTH {
            return self.walk_seq(node);
        }
        let own = self.visit(&node);
        let below = node
            .children()
            .into_par_iter()
            .map(|child| self.walk_par(child))
            .reduce(self.identity, self.reduce);
        (self.reduce)(own, below)
    }
}
