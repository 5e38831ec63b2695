//! Rooted labeled forests of height at most one, their equivalence with
//! idempotent functions, and unlabeled shape classification.
//!
//! A forest on labels `1..=n` with every non-root attached directly to a
//! root is the same data as an idempotent function: roots are fixed points
//! and `parent` is the function on the rest. Through the bijection layer
//! this also classifies complete exceptional sequences — roots correspond
//! to simple modules and each root's children to the nonsimple members of
//! its chain. Forgetting labels leaves the multiset of per-root child
//! counts, one shape per integer partition of `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::Rank;
use crate::bijection::{phi, IdempotentFunction};
use crate::error::{Error, Result};
use crate::exceptional::ExceptionalSequence;

/// A height-at-most-one rooted labeled forest on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    rank: Rank,
    roots: BTreeSet<usize>,
    parent: BTreeMap<usize, usize>,
}

impl Forest {
    /// Validates that `roots` is nonempty, `parent` assigns exactly the
    /// non-root labels, and every parent is a root.
    pub fn new(rank: Rank, roots: BTreeSet<usize>, parent: BTreeMap<usize, usize>) -> Result<Self> {
        let n = rank.get();
        let invalid = |reason: String| Error::InvalidForest { reason };
        if roots.is_empty() {
            return Err(invalid("a forest needs at least one root".to_owned()));
        }
        for &r in &roots {
            if r < 1 || r > n {
                return Err(invalid(format!("root {r} is outside 1..={n}")));
            }
        }
        for label in 1..=n {
            match (roots.contains(&label), parent.get(&label)) {
                (true, Some(_)) => {
                    return Err(invalid(format!("root {label} also has a parent")));
                }
                (false, None) => {
                    return Err(invalid(format!("label {label} is neither root nor leaf")));
                }
                (false, Some(&p)) if !roots.contains(&p) => {
                    return Err(invalid(format!(
                        "parent {p} of {label} is not a root; height would exceed one"
                    )));
                }
                _ => {}
            }
        }
        if parent.keys().any(|&leaf| leaf < 1 || leaf > n) {
            return Err(invalid(format!("a leaf label is outside 1..={n}")));
        }
        Ok(Self {
            rank,
            roots,
            parent,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }

    pub fn parent(&self) -> &BTreeMap<usize, usize> {
        &self.parent
    }

    /// The multiset of per-root child counts, sorted descending.
    pub fn shape(&self) -> ForestShape {
        let mut children: BTreeMap<usize, usize> = self.roots.iter().map(|&r| (r, 0)).collect();
        for &root in self.parent.values() {
            *children.get_mut(&root).expect("parents are roots") += 1;
        }
        ForestShape::new(children.into_values().collect())
    }
}

impl fmt::Display for Forest {
    /// `roots: {2,4,7}; edges: 1->7, 3->2, 5->4, 6->7`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "roots: {{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}; edges:")?;
        for (i, (leaf, root)) in self.parent.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {leaf}->{root}")?;
        }
        Ok(())
    }
}

/// Fixed points become roots; every other label hangs below its image.
pub fn forest_from_function(function: &IdempotentFunction) -> Forest {
    let roots: BTreeSet<usize> = function.fixed_points().into_iter().collect();
    let parent: BTreeMap<usize, usize> = (1..=function.n())
        .filter(|&i| function.get(i) != i)
        .map(|i| (i, function.get(i)))
        .collect();
    Forest {
        rank: function.rank(),
        roots,
        parent,
    }
}

/// Roots map to themselves, leaves to their parent; inverse of
/// [`forest_from_function`].
pub fn function_from_forest(forest: &Forest) -> IdempotentFunction {
    let values: Vec<usize> = (1..=forest.rank().get())
        .map(|i| forest.parent.get(&i).copied().unwrap_or(i))
        .collect();
    IdempotentFunction::new(values).expect("a height-one forest encodes an idempotent function")
}

/// The forest of a complete exceptional sequence, via its position map.
pub fn forest_from_sequence(seq: &ExceptionalSequence) -> Result<Forest> {
    Ok(forest_from_function(&phi(seq)?))
}

/// The unlabeled type of a height-at-most-one forest: per-root child
/// counts, sorted descending. Equivalent to the integer partition of `n`
/// by tree sizes (each tree contributes `child count + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestShape {
    child_counts: Vec<usize>,
}

impl ForestShape {
    pub fn new(mut child_counts: Vec<usize>) -> Self {
        child_counts.sort_unstable_by(|a, b| b.cmp(a));
        Self { child_counts }
    }

    pub fn child_counts(&self) -> &[usize] {
        &self.child_counts
    }

    /// Total number of labels: roots plus all children.
    pub fn n(&self) -> usize {
        self.child_counts.len() + self.child_counts.iter().sum::<usize>()
    }

    /// Tree sizes in descending order.
    pub fn tree_sizes(&self) -> Vec<usize> {
        self.child_counts.iter().map(|c| c + 1).collect()
    }
}

impl fmt::Display for ForestShape {
    /// Descending comma list, e.g. `2,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.child_counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn partitions_descending(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// One shape per integer partition of `n` (parts are tree sizes), in
/// reverse lexicographic partition order: `n` first, all singletons last.
pub fn enumerate_shapes(rank: Rank) -> Vec<ForestShape> {
    partitions_descending(rank.get())
        .into_iter()
        .map(|parts| ForestShape::new(parts.into_iter().map(|s| s - 1).collect()))
        .collect()
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of labeled forests with the given shape:
/// `n! * prod(sizes) / (prod(sizes!) * prod(multiplicities!))`
/// — distribute the labels over the trees, quotient out reorderings of
/// equal-size trees, and pick a root inside each tree.
pub fn count_labeled_with_shape(shape: &ForestShape) -> BigUint {
    let sizes = shape.tree_sizes();
    let n = shape.n();
    let mut numerator = factorial(n);
    for &s in &sizes {
        numerator *= s as u64;
    }
    let mut denominator = BigUint::one();
    for &s in &sizes {
        denominator *= factorial(s);
    }
    // sizes are sorted, so equal sizes form runs
    let mut run = 1usize;
    for i in 1..=sizes.len() {
        if i < sizes.len() && sizes[i] == sizes[i - 1] {
            run += 1;
        } else {
            denominator *= factorial(run);
            run = 1;
        }
    }
    numerator / denominator
}
