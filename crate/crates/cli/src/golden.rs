//! Golden tables of complete exceptional sequences and their position-map
//! tuples for ranks two through four, kept verbatim as text so the verify
//! command re-derives everything from scratch.

/// A rank together with `(sequence, tuple)` rows. The invariant checked by
/// verification: every row parses, every sequence is complete exceptional,
/// and its position map equals the stored tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub rank: usize,
    pub rows: Vec<(String, String)>,
}

/// The embedded table for a rank, if one exists (ranks 2, 3 and 4).
pub fn golden_table(rank: usize) -> Option<GoldenTable> {
    let rows: &[(&str, &str)] = match rank {
        2 => RANK_2,
        3 => RANK_3,
        4 => RANK_4,
        _ => return None,
    };
    Some(GoldenTable {
        rank,
        rows: rows
            .iter()
            .map(|&(seq, phi)| (seq.to_owned(), phi.to_owned()))
            .collect(),
    })
}

const RANK_2: &[(&str, &str)] = &[
    ("[[1],[2]]", "1,2"),
    ("[[1,2],[1]]", "2,2"),
    ("[[2],[1,2]]", "1,1"),
];

const RANK_3: &[(&str, &str)] = &[
    ("[[1],[2],[3]]", "1,2,3"),
    ("[[3],[2,3],[1,2]]", "1,1,1"),
    ("[[2,3],[2],[1,2]]", "2,2,2"),
    ("[[2,3],[1,2],[1]]", "3,3,3"),
    ("[[1,2],[1],[3]]", "2,2,3"),
    ("[[1],[2,3],[2]]", "1,3,3"),
    ("[[1],[3],[2,3]]", "1,2,2"),
    ("[[2],[1,2],[3]]", "1,1,3"),
    ("[[2],[3],[1,2]]", "1,2,1"),
    ("[[2,3],[1],[2]]", "3,2,3"),
];

const RANK_4: &[(&str, &str)] = &[
    ("[[1],[2,3],[2],[4]]", "1,3,3,4"),
    ("[[3,4],[3],[2,3],[1,2]]", "2,2,2,2"),
    ("[[3,4],[2],[3],[1,2]]", "3,2,3,2"),
    ("[[3,4],[2],[1,2],[3]]", "4,2,2,4"),
    ("[[3,4],[1],[3],[2,3]]", "3,2,3,3"),
    ("[[3,4],[1],[2],[3]]", "4,2,3,4"),
    ("[[3,4],[1],[2,3],[2]]", "4,2,4,4"),
    ("[[3,4],[2,3],[2],[1,2]]", "3,3,3,3"),
    ("[[3,4],[2,3],[1],[2]]", "4,4,3,4"),
    ("[[2],[4],[1,2],[3,4]]", "1,2,1,2"),
    ("[[2],[4],[3,4],[1,2]]", "1,2,2,1"),
    ("[[3],[2,3],[1,2],[4]]", "1,1,1,4"),
    ("[[3],[2,3],[4],[1,2]]", "1,1,3,1"),
    ("[[3],[4],[2,3],[1,2]]", "1,2,1,1"),
    ("[[4],[3,4],[2,3],[1,2]]", "1,1,1,1"),
    ("[[1],[3,4],[2,3],[2]]", "1,4,4,4"),
    ("[[1],[3,4],[2],[3]]", "1,4,3,4"),
    ("[[1],[3,4],[3],[2,3]]", "1,3,3,3"),
    ("[[1],[2],[3,4],[3]]", "1,2,4,4"),
    ("[[1],[2],[4],[3,4]]", "1,2,3,3"),
    ("[[1],[3],[2,3],[4]]", "1,2,2,4"),
    ("[[1],[3],[4],[2,3]]", "1,2,3,2"),
    ("[[1],[4],[3,4],[2,3]]", "1,2,2,2"),
    ("[[2],[1,2],[3,4],[3]]", "1,1,4,4"),
    ("[[2],[1,2],[3],[4]]", "1,1,3,4"),
    ("[[2],[3,4],[1,2],[3]]", "1,4,1,4"),
    ("[[2],[3,4],[3],[1,2]]", "1,3,3,1"),
    ("[[2],[3],[1,2],[4]]", "1,2,1,4"),
    ("[[2],[3],[4],[1,2]]", "1,2,3,1"),
    ("[[3,4],[2,3],[1,2],[1]]", "4,4,4,4"),
    ("[[3,4],[1,2],[1],[3]]", "4,3,3,4"),
    ("[[2,3],[2],[4],[1,2]]", "2,2,3,2"),
    ("[[2,3],[2],[1,2],[4]]", "2,2,2,4"),
    ("[[2,3],[1],[2],[4]]", "3,2,3,4"),
    ("[[2,3],[1,2],[1],[4]]", "3,3,3,4"),
    ("[[1,2],[1],[4],[3,4]]", "2,2,3,3"),
    ("[[1,2],[1],[3],[4]]", "2,2,3,4"),
    ("[[1,2],[1],[3,4],[3]]", "2,2,4,4"),
    ("[[1,2],[3,4],[1],[3]]", "3,4,3,4"),
    ("[[1],[2],[3],[4]]", "1,2,3,4"),
    ("[[2],[1,2],[4],[3,4]]", "1,1,3,3"),
];
