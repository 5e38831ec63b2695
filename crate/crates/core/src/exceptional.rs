//! Exceptional pairs and sequences, projective and injective chains, the
//! unique-chain lookup, and exhaustive enumeration of complete exceptional
//! sequences.
//!
//! A pair `(M, N)` is exceptional when `Hom(N, M) = 0` and `Ext^k(N, M) = 0`
//! for every `k >= 1`; a sequence is exceptional when every earlier/later
//! pair is. Complete sequences (length equal to the rank) are the objects
//! the rest of the crate maps to idempotent functions and forests.

use std::fmt;

use crate::algebra::{Algebra, Indec, Rank};
use crate::error::{Error, Result};

/// The definitional pair check: `first` may precede `second` when no map
/// and no extension exists backwards. Iterates `k` through the whole range
/// allowed by the global dimension rather than shortcutting.
pub fn is_exceptional_pair(alg: Algebra, first: Indec, second: Indec) -> bool {
    if first == second {
        return false;
    }
    if alg.hom_dim(second, first) != 0 {
        return false;
    }
    (1..alg.n()).all(|k| alg.ext_dim(k, second, first) == 0)
}

/// Closed form of [`is_exceptional_pair`]; the enumerator uses this as a
/// fast path, and the test suite pins it against the definitional check.
pub fn is_exceptional_pair_closed_form(first: Indec, second: Indec) -> bool {
    match (first, second) {
        (Indec::Simple(x), Indec::Simple(y)) => x < y,
        (Indec::Simple(x), Indec::Interval(y)) => x != y,
        (Indec::Interval(x), Indec::Simple(y)) => y != x + 1,
        (Indec::Interval(x), Indec::Interval(y)) => y != x && y != x + 1,
    }
}

fn check_exceptional(alg: Algebra, items: &[Indec]) -> Result<()> {
    for (i, &m) in items.iter().enumerate() {
        for &later in &items[i + 1..] {
            if m == later {
                return Err(Error::NotExceptional {
                    reason: format!("module {m} appears twice"),
                });
            }
            if !is_exceptional_pair(alg, m, later) {
                return Err(Error::NotExceptional {
                    reason: format!("({m}, {later}) is not an exceptional pair"),
                });
            }
        }
    }
    Ok(())
}

/// True when all items are pairwise distinct and every ordered pair
/// `(items[i], items[j])` with `i < j` is exceptional.
pub fn is_exceptional_sequence(alg: Algebra, items: &[Indec]) -> bool {
    check_exceptional(alg, items).is_ok()
}

/// An exceptional sequence, valid by construction. Complete sequences have
/// length `n` and are the domain of the bijection layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExceptionalSequence {
    rank: Rank,
    items: Vec<Indec>,
}

impl ExceptionalSequence {
    /// Validates every item against the rank, then the pairwise condition.
    pub fn new(alg: Algebra, items: Vec<Indec>) -> Result<Self> {
        for &m in &items {
            alg.validate(m)?;
        }
        check_exceptional(alg, &items)?;
        Ok(Self {
            rank: alg.rank(),
            items,
        })
    }

    // The enumerator extends prefixes pair-by-pair, so its output needs no
    // second full validation.
    fn from_enumeration(rank: Rank, items: Vec<Indec>) -> Self {
        debug_assert!(is_exceptional_sequence(Algebra::new(rank), &items));
        Self { rank, items }
    }

    /// Parses `[[6,7],[2],...]` as a complete sequence, taking the rank
    /// from the number of entries.
    pub fn parse_complete(text: &str) -> Result<Self> {
        let items = parse_module_list(text)?;
        let rank = Rank::new(items.len())?;
        Self::new(Algebra::new(rank), items)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn items(&self) -> &[Indec] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.items.len() == self.rank.get()
    }

    /// The module at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<Indec> {
        (1..=self.items.len())
            .contains(&position)
            .then(|| self.items[position - 1])
    }

    /// 1-based position of `m` in the sequence.
    pub fn index_of(&self, m: Indec) -> Option<usize> {
        self.items.iter().position(|&x| x == m).map(|i| i + 1)
    }
}

impl fmt::Display for ExceptionalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

fn parse_module_list(text: &str) -> Result<Vec<Indec>> {
    let err = |token: &str, reason: &str| Error::Parse {
        token: token.to_owned(),
        reason: reason.to_owned(),
    };
    let inner = text
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(text, "expected a bracketed sequence like [[1],[2]]"))?;
    let mut items = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        if !items.is_empty() {
            rest = rest
                .strip_prefix(',')
                .ok_or_else(|| err(rest, "expected `,` between modules"))?;
        }
        if !rest.starts_with('[') {
            return Err(err(rest, "expected `[` opening a module literal"));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| err(rest, "unterminated module literal"))?;
        let (module_text, tail) = rest.split_at(close + 1);
        items.push(module_text.parse()?);
        rest = tail;
    }
    if items.is_empty() {
        return Err(err(text, "sequence has no modules"));
    }
    Ok(items)
}

/// All complete exceptional sequences of the algebra, in lexicographic
/// order of their items under the canonical module order. Depth-first
/// backtracking: a prefix is extended only by modules forming an
/// exceptional pair with every previous element.
pub fn enumerate_complete(alg: Algebra) -> Vec<ExceptionalSequence> {
    let modules = alg.indecomposables();
    let n = alg.n();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; modules.len()];

    fn extend(
        rank: Rank,
        modules: &[Indec],
        used: &mut [bool],
        prefix: &mut Vec<Indec>,
        n: usize,
        out: &mut Vec<ExceptionalSequence>,
    ) {
        if prefix.len() == n {
            out.push(ExceptionalSequence::from_enumeration(rank, prefix.clone()));
            return;
        }
        for (i, &candidate) in modules.iter().enumerate() {
            if used[i] {
                continue;
            }
            if prefix
                .iter()
                .all(|&prev| is_exceptional_pair_closed_form(prev, candidate))
            {
                used[i] = true;
                prefix.push(candidate);
                extend(rank, modules, used, prefix, n, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }

    extend(alg.rank(), &modules, &mut used, &mut prefix, n, &mut out);
    out
}

/// Which end of a simple module's resolution a chain walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainDirection {
    Projective,
    Injective,
}

/// A projective or injective `t`-chain of a simple module. Every chain is
/// itself an exceptional sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    root: Indec,
    direction: ChainDirection,
    t: usize,
    elements: Vec<Indec>,
}

impl Chain {
    pub fn root(&self) -> Indec {
        self.root
    }

    pub fn direction(&self) -> ChainDirection {
        self.direction
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn elements(&self) -> &[Indec] {
        &self.elements
    }
}

/// The projective `t`-chain `(P(Omega^t S), ..., P(Omega S), P(S), S)`,
/// defined for `0 <= t <= pdim S - 1`.
pub fn projective_chain(alg: Algebra, simple: Indec, t: usize) -> Result<Chain> {
    alg.validate(simple)?;
    if !simple.is_simple() {
        return Err(Error::ChainRootNotSimple { module: simple });
    }
    let pdim = alg.projective_dimension(simple);
    if pdim == 0 || t > pdim - 1 {
        return Err(Error::ChainOutOfRange {
            root: simple,
            t,
            dimension: "projective",
            dim: pdim,
        });
    }
    let mut syzygies = vec![simple];
    for _ in 0..t {
        let last = *syzygies.last().expect("nonempty");
        syzygies.push(alg.syzygy(last).expect("t < pdim"));
    }
    let mut elements: Vec<Indec> = syzygies
        .iter()
        .rev()
        .map(|&s| alg.projective_cover(s))
        .collect();
    elements.push(simple);
    Ok(Chain {
        root: simple,
        direction: ChainDirection::Projective,
        t,
        elements,
    })
}

/// The injective `t`-chain `(S, I(S), I(Sigma S), ..., I(Sigma^t S))`,
/// defined for `0 <= t <= indim S - 1`.
pub fn injective_chain(alg: Algebra, simple: Indec, t: usize) -> Result<Chain> {
    alg.validate(simple)?;
    if !simple.is_simple() {
        return Err(Error::ChainRootNotSimple { module: simple });
    }
    let indim = alg.injective_dimension(simple);
    if indim == 0 || t > indim - 1 {
        return Err(Error::ChainOutOfRange {
            root: simple,
            t,
            dimension: "injective",
            dim: indim,
        });
    }
    let mut elements = vec![simple];
    let mut cosyzygy = simple;
    for step in 0..=t {
        elements.push(alg.injective_envelope(cosyzygy));
        if step < t {
            cosyzygy = alg.cosyzygy(cosyzygy).expect("t < indim");
        }
    }
    Ok(Chain {
        root: simple,
        direction: ChainDirection::Injective,
        t,
        elements,
    })
}

/// The unique chain from a simple of `seq` reaching the nonsimple entry at
/// 1-based `position`: for a sequence that is complete and exceptional
/// exactly one simple root works, and its 1-based index is returned.
///
/// Every simple `[v]` of the sequence offers exactly one candidate chain to
/// the interval `[a,a+1]`: the projective `(a-v)`-chain when `a >= v`, the
/// injective `(v-a-1)`-chain otherwise. Containment is membership of every
/// chain element in the sequence; on a hit the chain elements' positions
/// are additionally checked against the root's (before it for projective
/// chains, after it for injective ones).
pub fn chain_root(seq: &ExceptionalSequence, position: usize) -> Result<usize> {
    let alg = Algebra::new(seq.rank());
    if !seq.is_complete() {
        return Err(Error::NotComplete {
            len: seq.len(),
            rank: seq.rank().get(),
        });
    }
    let m = seq.get(position).ok_or_else(|| Error::BadPosition {
        position,
        reason: format!("sequence has {} entries", seq.len()),
    })?;
    let Indec::Interval(a) = m else {
        return Err(Error::BadPosition {
            position,
            reason: format!("{m} is simple; chains are looked up for nonsimple entries"),
        });
    };

    let mut hits = Vec::new();
    for (idx0, &candidate) in seq.items().iter().enumerate() {
        let Indec::Simple(v) = candidate else {
            continue;
        };
        let chain = if a >= v {
            projective_chain(alg, candidate, a - v)?
        } else {
            injective_chain(alg, candidate, v - a - 1)?
        };
        if !chain
            .elements()
            .iter()
            .all(|&e| seq.index_of(e).is_some())
        {
            continue;
        }
        let root_position = idx0 + 1;
        for &e in chain.elements() {
            if e == candidate {
                continue;
            }
            let e_position = seq.index_of(e).expect("membership checked above");
            match chain.direction() {
                ChainDirection::Projective => assert!(
                    e_position < root_position,
                    "projective chain element {e} must precede its root {candidate} in {seq}"
                ),
                ChainDirection::Injective => assert!(
                    e_position > root_position,
                    "injective chain element {e} must follow its root {candidate} in {seq}"
                ),
            }
        }
        hits.push(root_position);
    }

    match hits.as_slice() {
        [only] => Ok(*only),
        _ => Err(Error::ChainInvariant {
            position,
            hits: hits.len(),
        }),
    }
}
