//! The linear radical-square-zero Nakayama algebra of rank `n` and its
//! `2n - 1` indecomposable modules.
//!
//! The quiver is `1 -> 2 -> ... -> n` with all paths of length two equal to
//! zero. Every indecomposable module is either a simple `[v]` or a length-two
//! interval `[v,v+1]`, and the latter is simultaneously the projective cover
//! of `[v]` and the injective envelope of `[v+1]`. All Hom and Ext spaces
//! have dimension zero or one, so the closed forms below return plain
//! `usize` dimensions. The [`oracle`] submodule recomputes the same
//! dimensions from scratch by exact linear algebra on quiver representations.

pub mod oracle;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of vertices of the quiver; always at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            Err(Error::ZeroRank)
        } else {
            Ok(Self(n))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An isomorphism class of indecomposable module.
///
/// Vertices are 1-based, matching the quiver labels. The canonical total
/// order interleaves simples and intervals:
/// `[1] < [1,2] < [2] < [2,3] < ... < [n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Indec {
    /// The simple module `[v]` at vertex `v`.
    Simple(usize),
    /// The projective-injective interval `[v,v+1]`, stored by its left
    /// vertex `v`.
    Interval(usize),
}

impl Indec {
    pub fn is_simple(self) -> bool {
        matches!(self, Indec::Simple(_))
    }

    /// The defining vertex: `v` for both `[v]` and `[v,v+1]`.
    pub fn vertex(self) -> usize {
        match self {
            Indec::Simple(v) | Indec::Interval(v) => v,
        }
    }

    // Position in the canonical order [1] < [1,2] < [2] < [2,3] < ...
    fn order_key(self) -> usize {
        match self {
            Indec::Simple(v) => 2 * (v - 1),
            Indec::Interval(v) => 2 * v - 1,
        }
    }
}

impl PartialOrd for Indec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Indec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Indec::Simple(v) => write!(f, "[{v}]"),
            Indec::Interval(v) => write!(f, "[{},{}]", v, v + 1),
        }
    }
}

impl FromStr for Indec {
    type Err = Error;

    /// Parses the canonical textual forms `[v]` and `[v,v+1]`, with no
    /// interior whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            token: s.to_owned(),
            reason: reason.to_owned(),
        };
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| parse_err("expected a bracketed module literal like [2] or [2,3]"))?;
        let parse_vertex = |t: &str| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| Error::Parse {
                token: t.to_owned(),
                reason: "expected a positive integer vertex".to_owned(),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    token: t.to_owned(),
                    reason: "vertices are 1-based".to_owned(),
                });
            }
            Ok(v)
        };
        match inner.split_once(',') {
            None => Ok(Indec::Simple(parse_vertex(inner)?)),
            Some((left, right)) => {
                let v = parse_vertex(left)?;
                let w = parse_vertex(right)?;
                if w != v + 1 {
                    return Err(parse_err("interval must have the form [v,v+1]"));
                }
                Ok(Indec::Interval(v))
            }
        }
    }
}

/// The algebra of a fixed rank; all module operations live here because
/// several of them (projective covers, syzygies, Ext) depend on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algebra {
    rank: Rank,
}

impl Algebra {
    pub fn new(rank: Rank) -> Self {
        Self { rank }
    }

    pub fn rank(self) -> Rank {
        self.rank
    }

    /// Shorthand for `self.rank().get()`.
    pub fn n(self) -> usize {
        self.rank.get()
    }

    pub fn contains(self, m: Indec) -> bool {
        match m {
            Indec::Simple(v) => (1..=self.n()).contains(&v),
            Indec::Interval(v) => (1..self.n()).contains(&v),
        }
    }

    pub fn validate(self, m: Indec) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::ModuleOutOfRange {
                module: m,
                rank: self.n(),
            })
        }
    }

    /// All `2n - 1` indecomposables in the canonical order
    /// `[1] < [1,2] < [2] < ... < [n]`.
    pub fn indecomposables(self) -> Vec<Indec> {
        let n = self.n();
        let mut out = Vec::with_capacity(2 * n - 1);
        for v in 1..=n {
            out.push(Indec::Simple(v));
            if v < n {
                out.push(Indec::Interval(v));
            }
        }
        out
    }

    pub fn top(self, m: Indec) -> Indec {
        debug_assert!(self.contains(m));
        Indec::Simple(m.vertex())
    }

    pub fn socle(self, m: Indec) -> Indec {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) => Indec::Simple(v),
            Indec::Interval(v) => Indec::Simple(v + 1),
        }
    }

    /// `P([v]) = [v,v+1]` for `v < n`; `[n]` is its own (simple) projective
    /// cover, and intervals are projective.
    pub fn projective_cover(self, m: Indec) -> Indec {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) if v < self.n() => Indec::Interval(v),
            other => other,
        }
    }

    /// `I([v]) = [v-1,v]` for `v > 1`; `[1]` is its own (simple) injective
    /// envelope, and intervals are injective.
    pub fn injective_envelope(self, m: Indec) -> Indec {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) if v > 1 => Indec::Interval(v - 1),
            other => other,
        }
    }

    /// Kernel of the projective cover: `[v] -> [v+1]`, with `None` meaning
    /// the zero module (the argument was projective).
    pub fn syzygy(self, m: Indec) -> Option<Indec> {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) if v < self.n() => Some(Indec::Simple(v + 1)),
            _ => None,
        }
    }

    /// Cokernel of the injective envelope: `[v] -> [v-1]`, with `None`
    /// meaning the zero module (the argument was injective).
    pub fn cosyzygy(self, m: Indec) -> Option<Indec> {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) if v > 1 => Some(Indec::Simple(v - 1)),
            _ => None,
        }
    }

    /// `pdim [v] = n - v`; projective-injective intervals have dimension 0.
    pub fn projective_dimension(self, m: Indec) -> usize {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) => self.n() - v,
            Indec::Interval(_) => 0,
        }
    }

    /// `indim [v] = v - 1`; projective-injective intervals have dimension 0.
    pub fn injective_dimension(self, m: Indec) -> usize {
        debug_assert!(self.contains(m));
        match m {
            Indec::Simple(v) => v - 1,
            Indec::Interval(_) => 0,
        }
    }

    /// The pair `(pdim M, indim M)`. The global dimension `n - 1` is
    /// attained at `[1]` (projectively) and `[n]` (injectively).
    pub fn homological_dimensions(self, m: Indec) -> (usize, usize) {
        (self.projective_dimension(m), self.injective_dimension(m))
    }

    /// `dim Hom(M, N)`, always 0 or 1.
    ///
    /// Nonzero maps exist exactly between equal simples, from `[y+1]` into
    /// the socle of `[y,y+1]`, from `[x,x+1]` onto its top `[x]`, and
    /// between intervals `[x,x+1] -> [y,y+1]` with `x = y` or `x = y + 1`.
    pub fn hom_dim(self, m: Indec, n: Indec) -> usize {
        debug_assert!(self.contains(m) && self.contains(n));
        let nonzero = match (m, n) {
            (Indec::Simple(x), Indec::Simple(y)) => x == y,
            (Indec::Simple(x), Indec::Interval(y)) => x == y + 1,
            (Indec::Interval(x), Indec::Simple(y)) => x == y,
            (Indec::Interval(x), Indec::Interval(y)) => x == y || x == y + 1,
        };
        usize::from(nonzero)
    }

    /// `dim Ext^k(M, N)` for `k >= 1`, always 0 or 1.
    ///
    /// Nonzero exactly for simples `[x]`, `[y]` with `y - x = k`; any
    /// interval argument forces zero, being projective (first slot) or
    /// injective (second slot). Total in `k`: values past the global
    /// dimension simply return 0.
    pub fn ext_dim(self, k: usize, m: Indec, n: Indec) -> usize {
        debug_assert!(k >= 1, "ext_dim is defined for k >= 1");
        debug_assert!(self.contains(m) && self.contains(n));
        match (m, n) {
            (Indec::Simple(x), Indec::Simple(y)) if y > x && y - x == k => 1,
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> Algebra {
        Algebra::new(Rank::new(n).unwrap())
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert_eq!(Rank::new(0), Err(Error::ZeroRank));
    }

    #[test]
    fn indecomposables_in_canonical_order() {
        assert_eq!(alg(1).indecomposables(), vec![Indec::Simple(1)]);
        assert_eq!(
            alg(2).indecomposables(),
            vec![Indec::Simple(1), Indec::Interval(1), Indec::Simple(2)]
        );
        let lambda4: Vec<String> = alg(4)
            .indecomposables()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            lambda4,
            ["[1]", "[1,2]", "[2]", "[2,3]", "[3]", "[3,4]", "[4]"]
        );
    }

    #[test]
    fn canonical_order_is_sorted() {
        let mut modules = alg(6).indecomposables();
        let original = modules.clone();
        modules.sort();
        assert_eq!(modules, original);
    }

    #[test]
    fn top_and_socle() {
        let a = alg(7);
        assert_eq!(a.top(Indec::Interval(2)), Indec::Simple(2));
        assert_eq!(a.top(Indec::Simple(5)), Indec::Simple(5));
        assert_eq!(a.top(Indec::Interval(6)), Indec::Simple(6));
        assert_eq!(a.socle(Indec::Interval(2)), Indec::Simple(3));
        assert_eq!(a.socle(Indec::Simple(5)), Indec::Simple(5));
        assert_eq!(a.socle(Indec::Interval(1)), Indec::Simple(2));
    }

    #[test]
    fn projective_cover_and_injective_envelope() {
        let a = alg(4);
        assert_eq!(a.projective_cover(Indec::Simple(1)), Indec::Interval(1));
        assert_eq!(a.projective_cover(Indec::Simple(4)), Indec::Simple(4));
        assert_eq!(a.projective_cover(Indec::Interval(3)), Indec::Interval(3));
        assert_eq!(a.injective_envelope(Indec::Simple(2)), Indec::Interval(1));
        assert_eq!(a.injective_envelope(Indec::Simple(1)), Indec::Simple(1));
        assert_eq!(a.injective_envelope(Indec::Interval(2)), Indec::Interval(2));
    }

    #[test]
    fn syzygy_walks_down_the_resolution() {
        let a = alg(4);
        assert_eq!(a.syzygy(Indec::Simple(1)), Some(Indec::Simple(2)));
        assert_eq!(a.syzygy(Indec::Simple(4)), None);
        assert_eq!(a.syzygy(Indec::Interval(2)), None);
        assert_eq!(alg(7).cosyzygy(Indec::Simple(5)), Some(Indec::Simple(4)));
        assert_eq!(a.cosyzygy(Indec::Simple(1)), None);
        assert_eq!(a.cosyzygy(Indec::Interval(1)), None);
    }

    #[test]
    fn homological_dimensions_match_the_global_bound() {
        assert_eq!(alg(4).homological_dimensions(Indec::Simple(1)), (3, 0));
        assert_eq!(alg(6).homological_dimensions(Indec::Simple(6)), (0, 5));
        assert_eq!(alg(5).homological_dimensions(Indec::Interval(2)), (0, 0));
        for n in 1..=8 {
            let a = alg(n);
            let gdim = a
                .indecomposables()
                .into_iter()
                .map(|m| a.projective_dimension(m))
                .max()
                .unwrap();
            assert_eq!(gdim, n - 1);
        }
    }

    #[test]
    fn hom_closed_form() {
        let a = alg(4);
        assert_eq!(a.hom_dim(Indec::Interval(2), Indec::Interval(1)), 1);
        assert_eq!(a.hom_dim(Indec::Interval(1), Indec::Interval(2)), 0);
        assert_eq!(a.hom_dim(Indec::Simple(3), Indec::Simple(3)), 1);
        assert_eq!(a.hom_dim(Indec::Simple(3), Indec::Interval(2)), 1);
        assert_eq!(a.hom_dim(Indec::Simple(2), Indec::Interval(2)), 0);
    }

    #[test]
    fn ext_closed_form() {
        let a = alg(4);
        assert_eq!(a.ext_dim(2, Indec::Simple(1), Indec::Simple(3)), 1);
        assert_eq!(a.ext_dim(1, Indec::Simple(3), Indec::Simple(1)), 0);
        assert_eq!(a.ext_dim(1, Indec::Interval(2), Indec::Simple(4)), 0);
        // total in k: past the global dimension everything vanishes
        assert_eq!(a.ext_dim(17, Indec::Simple(1), Indec::Simple(3)), 0);
    }

    #[test]
    fn no_self_extensions_and_scalar_endomorphisms() {
        for n in 1..=8 {
            let a = alg(n);
            for m in a.indecomposables() {
                assert_eq!(a.hom_dim(m, m), 1);
                for k in 1..=n {
                    assert_eq!(a.ext_dim(k, m, m), 0);
                }
            }
        }
    }

    #[test]
    fn syzygy_iteration_terminates_at_the_dimension() {
        for n in 1..=8 {
            let a = alg(n);
            for v in 1..=n {
                let s = Indec::Simple(v);
                let d = a.projective_dimension(s);
                let mut m = s;
                for _ in 0..d {
                    m = a.syzygy(m).expect("resolution still running");
                }
                assert_eq!(a.projective_cover(m), m, "Omega^pdim must be projective");
                assert_eq!(a.syzygy(m), None);

                let d = a.injective_dimension(s);
                let mut m = s;
                for _ in 0..d {
                    m = a.cosyzygy(m).expect("coresolution still running");
                }
                assert_eq!(a.injective_envelope(m), m, "Sigma^indim must be injective");
                assert_eq!(a.cosyzygy(m), None);
            }
        }
    }

    #[test]
    fn top_of_cover_and_socle_of_envelope() {
        for n in 1..=8 {
            let a = alg(n);
            for v in 1..=n {
                let s = Indec::Simple(v);
                assert_eq!(a.top(a.projective_cover(s)), s);
                assert_eq!(a.socle(a.injective_envelope(s)), s);
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["[1]", "[12]", "[3,4]", "[11,12]"] {
            let m: Indec = text.parse().unwrap();
            assert_eq!(m.to_string(), text);
        }
        assert_eq!("[2]".parse::<Indec>().unwrap(), Indec::Simple(2));
        assert_eq!("[2,3]".parse::<Indec>().unwrap(), Indec::Interval(2));
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for bad in ["", "2", "[0]", "[2,4]", "[2, 3]", "[x]", "[]", "[2,3", "2,3]"] {
            assert!(bad.parse::<Indec>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn out_of_range_modules_are_rejected() {
        let a = alg(3);
        assert!(a.validate(Indec::Simple(3)).is_ok());
        assert!(a.validate(Indec::Simple(4)).is_err());
        assert!(a.validate(Indec::Interval(2)).is_ok());
        assert!(a.validate(Indec::Interval(3)).is_err());
    }
}
