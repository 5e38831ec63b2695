//! The bijection between complete exceptional sequences and idempotent
//! endofunctions of `{1, ..., n}`.
//!
//! [`phi`] reads a complete sequence positionwise: a simple module maps to
//! its own index, a nonsimple module to the index of the unique simple
//! whose chain inside the sequence reaches it. [`gamma`] inverts this: from
//! the fixed points and the before/after multiplicities of an idempotent
//! function it solves for the simple modules' vertices and fills the
//! remaining positions with the forced chain elements.

use std::fmt;

use crate::algebra::{Algebra, Indec, Rank};
use crate::error::{Error, Result};
use crate::exceptional::{chain_root, ExceptionalSequence};

/// Checks `A(A(i)) = A(i)` for a raw 1-based tuple. Entries outside
/// `1..=n` are a domain error rather than `false`.
pub fn is_idempotent(values: &[usize]) -> Result<bool> {
    let n = values.len();
    for (i, &v) in values.iter().enumerate() {
        if v < 1 || v > n {
            return Err(Error::EntryOutOfRange {
                value: v,
                position: i + 1,
                rank: n,
            });
        }
    }
    Ok(values.iter().all(|&v| values[v - 1] == v))
}

/// An idempotent function on `{1, ..., n}`, stored as the 1-based tuple
/// `(A(1), ..., A(n))`. The fixed points are exactly the image, and there
/// is always at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdempotentFunction {
    values: Vec<usize>,
}

impl IdempotentFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        Rank::new(values.len())?;
        if !is_idempotent(&values)? {
            let position = (1..=values.len())
                .find(|&i| values[values[i - 1] - 1] != values[i - 1])
                .expect("some entry witnesses the failure");
            return Err(Error::NotIdempotent {
                position,
                once: values[position - 1],
                twice: values[values[position - 1] - 1],
            });
        }
        Ok(Self { values })
    }

    /// Parses the comma-separated form `7,2,2,4,4,7,7`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|part| {
                part.parse::<usize>().map_err(|_| Error::Parse {
                    token: part.to_owned(),
                    reason: "expected a positive integer entry".to_owned(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.values.len()).expect("constructor enforced n >= 1")
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `A(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The fixed points in increasing order; never empty.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.get(i) == i).collect()
    }
}

impl fmt::Display for IdempotentFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// All idempotent functions on `{1, ..., n}` in lexicographic tuple order,
/// generated fixed-point-set first: every nonempty subset serves as the
/// image, and the remaining points map into it in all possible ways.
pub fn enumerate_idempotent(rank: Rank) -> Vec<IdempotentFunction> {
    let n = rank.get();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let fixed: Vec<usize> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let free: Vec<usize> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 0).collect();
        // odometer over assignments of free points to fixed points
        let mut choice = vec![0usize; free.len()];
        loop {
            let mut values = vec![0usize; n];
            for &p in &fixed {
                values[p - 1] = p;
            }
            for (j, &q) in free.iter().enumerate() {
                values[q - 1] = fixed[choice[j]];
            }
            out.push(IdempotentFunction { values });
            let mut j = free.len();
            loop {
                if j == 0 {
                    break;
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < fixed.len() {
                    break;
                }
                choice[j] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    out.sort_by(|a, b| a.values.cmp(&b.values));
    out
}

/// The intermediate solve state of [`gamma`]: fixed points `p_i`, the
/// counts of nonfixed preimages after (`a_i`) and before (`b_i`) each fixed
/// point, block totals `c_i = a_i + b_i + 1`, and the solved simple-module
/// vertices `T_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPlan {
    pub fixed_points: Vec<usize>,
    pub after_counts: Vec<usize>,
    pub before_counts: Vec<usize>,
    pub totals: Vec<usize>,
    pub solved_vertices: Vec<usize>,
}

/// Extracts fixed points and their before/after preimage counts, then
/// solves `T_1 = 1 + a_1`, `T_{i+1} = T_i + a_{i+1} + b_i + 1`.
///
/// The vertex blocks `[T_i - a_i, T_i + b_i]` then tile `1..=n` in order:
/// positions after `p_i` receive the injective-chain intervals below `T_i`
/// and positions before `p_i` the projective-chain intervals above it.
pub fn build_gamma_plan(function: &IdempotentFunction) -> GammaPlan {
    let n = function.n();
    let fixed_points = function.fixed_points();
    let mut after_counts = vec![0usize; fixed_points.len()];
    let mut before_counts = vec![0usize; fixed_points.len()];
    for q in 1..=n {
        let target = function.get(q);
        if target == q {
            continue;
        }
        let i = fixed_points
            .binary_search(&target)
            .expect("the image of an idempotent function consists of fixed points");
        if q > target {
            after_counts[i] += 1;
        } else {
            before_counts[i] += 1;
        }
    }
    let totals: Vec<usize> = after_counts
        .iter()
        .zip(&before_counts)
        .map(|(a, b)| a + b + 1)
        .collect();
    assert_eq!(totals.iter().sum::<usize>(), n, "blocks must tile 1..=n");

    let mut solved_vertices = Vec::with_capacity(fixed_points.len());
    for i in 0..fixed_points.len() {
        let t = if i == 0 {
            1 + after_counts[0]
        } else {
            solved_vertices[i - 1] + after_counts[i] + before_counts[i - 1] + 1
        };
        solved_vertices.push(t);
    }
    if let (Some(&t_last), Some(&b_last)) = (solved_vertices.last(), before_counts.last()) {
        assert_eq!(t_last + b_last, n, "the last block must end at n");
    }

    GammaPlan {
        fixed_points,
        after_counts,
        before_counts,
        totals,
        solved_vertices,
    }
}

/// The position map: simple entries map to their own index, nonsimple
/// entries to the index of their unique chain root. The result is always
/// idempotent.
pub fn phi(seq: &ExceptionalSequence) -> Result<IdempotentFunction> {
    if !seq.is_complete() {
        return Err(Error::NotComplete {
            len: seq.len(),
            rank: seq.rank().get(),
        });
    }
    let mut values = Vec::with_capacity(seq.len());
    for (idx0, &m) in seq.items().iter().enumerate() {
        let value = if m.is_simple() {
            idx0 + 1
        } else {
            chain_root(seq, idx0 + 1)?
        };
        values.push(value);
    }
    Ok(IdempotentFunction::new(values)
        .expect("the position map of a complete exceptional sequence is idempotent"))
}

/// The inverse of [`phi`]: reconstructs the unique complete exceptional
/// sequence whose position map is the given function.
///
/// The simple `[T_i]` goes to position `p_i`; the `r`-th after-position (in
/// increasing order) receives the injective-chain interval
/// `[T_i - r, T_i - r + 1]`, and the `r`-th before-position the
/// projective-chain interval `[T_i + b_i - r, T_i + b_i - r + 1]`. The
/// output is re-validated as an exceptional sequence before returning.
pub fn gamma(function: &IdempotentFunction) -> ExceptionalSequence {
    let plan = build_gamma_plan(function);
    let n = function.n();
    let mut slots: Vec<Option<Indec>> = vec![None; n];
    for (i, (&p, &t)) in plan
        .fixed_points
        .iter()
        .zip(&plan.solved_vertices)
        .enumerate()
    {
        slots[p - 1] = Some(Indec::Simple(t));
        let mut reach = 0;
        for q in p + 1..=n {
            if function.get(q) == p {
                reach += 1;
                slots[q - 1] = Some(Indec::Interval(t - reach));
            }
        }
        debug_assert_eq!(reach, plan.after_counts[i]);
        let b = plan.before_counts[i];
        let mut reach = 0;
        for q in 1..p {
            if function.get(q) == p {
                reach += 1;
                slots[q - 1] = Some(Indec::Interval(t + b - reach));
            }
        }
        debug_assert_eq!(reach, b);
    }
    let items: Vec<Indec> = slots
        .into_iter()
        .map(|slot| slot.expect("every position lies in some fixed point's block"))
        .collect();
    ExceptionalSequence::new(Algebra::new(function.rank()), items)
        .expect("reconstruction from an idempotent function is exceptional")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(values: &[usize]) -> IdempotentFunction {
        IdempotentFunction::new(values.to_vec()).unwrap()
    }

    fn seq(text: &str) -> ExceptionalSequence {
        ExceptionalSequence::parse_complete(text).unwrap()
    }

    #[test]
    fn idempotency_check() {
        assert_eq!(is_idempotent(&[2, 2, 2]), Ok(true));
        assert_eq!(is_idempotent(&[1, 2, 3, 4]), Ok(true));
        assert_eq!(is_idempotent(&[2, 1]), Ok(false));
        assert!(matches!(
            is_idempotent(&[1, 5, 2]),
            Err(Error::EntryOutOfRange { value: 5, .. })
        ));
        assert!(matches!(
            IdempotentFunction::new(vec![2, 1]),
            Err(Error::NotIdempotent { .. })
        ));
        assert!(matches!(
            IdempotentFunction::new(vec![]),
            Err(Error::ZeroRank)
        ));
    }

    #[test]
    fn enumerate_small_ranks() {
        let two: Vec<String> = enumerate_idempotent(Rank::new(2).unwrap())
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two, ["1,1", "1,2", "2,2"]);
        assert_eq!(enumerate_idempotent(Rank::new(3).unwrap()).len(), 10);
        assert_eq!(enumerate_idempotent(Rank::new(4).unwrap()).len(), 41);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let all = enumerate_idempotent(Rank::new(5).unwrap());
        for pair in all.windows(2) {
            assert!(pair[0].values() < pair[1].values());
        }
    }

    #[test]
    fn gamma_plan_for_the_worked_example() {
        let plan = build_gamma_plan(&f(&[7, 2, 2, 4, 4, 7, 7]));
        assert_eq!(plan.fixed_points, [2, 4, 7]);
        assert_eq!(plan.after_counts, [1, 1, 0]);
        assert_eq!(plan.before_counts, [0, 0, 2]);
        assert_eq!(plan.totals, [2, 2, 3]);
        assert_eq!(plan.solved_vertices, [2, 4, 5]);
    }

    #[test]
    fn gamma_plan_for_the_identity() {
        let plan = build_gamma_plan(&f(&[1, 2, 3, 4, 5]));
        assert_eq!(plan.fixed_points, [1, 2, 3, 4, 5]);
        assert_eq!(plan.after_counts, [0; 5]);
        assert_eq!(plan.before_counts, [0; 5]);
        assert_eq!(plan.solved_vertices, [1, 2, 3, 4, 5]);
    }

    #[test]
    fn gamma_plan_with_a_single_fixed_point() {
        // both nonfixed points sit after the fixed point, so the solved
        // vertex is forced to the top of the block: T = 1 + a = 3
        let plan = build_gamma_plan(&f(&[1, 1, 1]));
        assert_eq!(plan.fixed_points, [1]);
        assert_eq!(plan.after_counts, [2]);
        assert_eq!(plan.before_counts, [0]);
        assert_eq!(plan.solved_vertices, [3]);
        assert_eq!(gamma(&f(&[1, 1, 1])), seq("[[3],[2,3],[1,2]]"));
    }

    #[test]
    fn gamma_reconstructs_the_worked_example() {
        assert_eq!(
            gamma(&f(&[7, 2, 2, 4, 4, 7, 7])).to_string(),
            "[[6,7],[2],[1,2],[4],[3,4],[5,6],[5]]"
        );
    }

    #[test]
    fn gamma_small_examples() {
        assert_eq!(gamma(&f(&[1, 2, 3])), seq("[[1],[2],[3]]"));
        assert_eq!(gamma(&f(&[3, 2, 3])), seq("[[2,3],[1],[2]]"));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&seq("[[3],[2,3],[1,2]]")).unwrap().values(), [1, 1, 1]);
        assert_eq!(
            phi(&seq("[[1],[2],[3],[4]]")).unwrap().values(),
            [1, 2, 3, 4]
        );
        assert_eq!(
            phi(&seq("[[3,4],[2],[1,2],[3]]")).unwrap().values(),
            [4, 2, 2, 4]
        );
    }

    #[test]
    fn fixed_points_are_the_simple_positions() {
        let e = seq("[[6,7],[2],[1,2],[4],[3,4],[5,6],[5]]");
        let a = phi(&e).unwrap();
        let simple_positions: Vec<usize> = (1..=e.len())
            .filter(|&i| e.get(i).unwrap().is_simple())
            .collect();
        assert_eq!(a.fixed_points(), simple_positions);
    }

    #[test]
    fn function_text_round_trip() {
        let a = IdempotentFunction::parse("7,2,2,4,4,7,7").unwrap();
        assert_eq!(a.to_string(), "7,2,2,4,4,7,7");
        assert!(IdempotentFunction::parse("7,2,x").is_err());
        assert!(IdempotentFunction::parse("").is_err());
        assert!(IdempotentFunction::parse("2,1").is_err());
    }
}
