//! Independent recomputation of Hom and Ext dimensions.
//!
//! Nothing here consults the closed forms in the parent module. Modules are
//! materialized as representations of the quiver (a vector space of
//! dimension at most one per vertex and a structure map per arrow), and
//! dimensions come out of exact rational Gaussian elimination:
//!
//! * [`hom_dim_oracle`] solves the commutativity constraints
//!   `N_arrow . f_v = f_{v+1} . M_arrow` for a homomorphism and returns the
//!   dimension of the solution space.
//! * [`ext_dim_oracle`] materializes the minimal projective resolution
//!   `P_* -> M`, applies `Hom(-, N)` degreewise, and takes cohomology by
//!   rank computations.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Algebra, Indec};

type Q = BigRational;

/// A thin representation: dimension 0 or 1 at each vertex, one scalar per
/// arrow `v -> v+1`.
struct Rep {
    /// `support[v-1]` is true when the space at vertex `v` is nonzero.
    support: Vec<bool>,
    /// `arrow[v-1]` is the structure map scalar for the arrow `v -> v+1`.
    arrow: Vec<Q>,
}

impl Rep {
    fn of(alg: Algebra, m: Indec) -> Self {
        let n = alg.n();
        let mut support = vec![false; n];
        let mut arrow = vec![Q::zero(); n.saturating_sub(1)];
        match m {
            Indec::Simple(v) => support[v - 1] = true,
            Indec::Interval(v) => {
                support[v - 1] = true;
                support[v] = true;
                arrow[v - 1] = Q::one();
            }
        }
        Self { support, arrow }
    }
}

/// Reduces `rows` in place to reduced row echelon form and returns the
/// pivot column of each nonzero row.
fn rref(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for entry in rows[r][c..].iter_mut() {
            *entry = entry.clone() / &pivot;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (entry, lead) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *entry = entry.clone() - lead * &factor;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn matrix_rank(mut rows: Vec<Vec<Q>>, cols: usize) -> usize {
    rref(&mut rows, cols).len()
}

/// Basis of the solution space of the homogeneous system `rows * x = 0`.
fn nullspace(mut rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let pivots = rref(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -rows[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Basis of `Hom(M, N)`, each element given as its vertexwise scalars
/// (length `n`, zero outside the common support).
fn hom_basis(alg: Algebra, m: &Rep, n: &Rep) -> Vec<Vec<Q>> {
    let nv = alg.n();
    // one unknown per vertex carrying both modules
    let mut var_at = vec![None; nv];
    let mut vars = 0;
    for (v, slot) in var_at.iter_mut().enumerate() {
        if m.support[v] && n.support[v] {
            *slot = Some(vars);
            vars += 1;
        }
    }
    // one equation per arrow with source in M and target in N
    let mut rows = Vec::new();
    for v in 0..nv.saturating_sub(1) {
        if !(m.support[v] && n.support[v + 1]) {
            continue;
        }
        let mut row = vec![Q::zero(); vars];
        if let Some(col) = var_at[v] {
            row[col] = &row[col] + &n.arrow[v];
        }
        if let Some(col) = var_at[v + 1] {
            row[col] = &row[col] - &m.arrow[v];
        }
        rows.push(row);
    }
    nullspace(rows, vars)
        .into_iter()
        .map(|sol| {
            let mut by_vertex = vec![Q::zero(); nv];
            for v in 0..nv {
                if let Some(col) = var_at[v] {
                    by_vertex[v] = sol[col].clone();
                }
            }
            by_vertex
        })
        .collect()
}

/// `dim Hom(M, N)` computed by solving the representation-map linear
/// system; must agree with [`Algebra::hom_dim`] on every input.
pub fn hom_dim_oracle(alg: Algebra, m: Indec, n: Indec) -> usize {
    debug_assert!(alg.contains(m) && alg.contains(n));
    hom_basis(alg, &Rep::of(alg, m), &Rep::of(alg, n)).len()
}

/// The modules of the minimal projective resolution `P_0, P_1, ..., P_d`
/// of `m`, as plain indecomposables.
fn resolution_modules(alg: Algebra, m: Indec) -> Vec<Indec> {
    let mut terms = vec![alg.projective_cover(m)];
    let mut current = m;
    while let Some(next) = alg.syzygy(current) {
        terms.push(alg.projective_cover(next));
        current = next;
    }
    terms
}

/// The differential `P_i -> P_{i-1}` factors through the single vertex both
/// terms share, so as a vertexwise map it is the indicator of the common
/// support.
fn differential(alg: Algebra, upper: &Rep, lower: &Rep) -> Vec<Q> {
    (0..alg.n())
        .map(|v| {
            if upper.support[v] && lower.support[v] {
                Q::one()
            } else {
                Q::zero()
            }
        })
        .collect()
}

/// Dimension of the span of the compositions `phi . d` for `phi` running
/// over `maps`, where both are given vertexwise.
fn rank_after_composition(maps: &[Vec<Q>], d: &[Q], nv: usize) -> usize {
    let rows: Vec<Vec<Q>> = maps
        .iter()
        .map(|phi| (0..nv).map(|v| &phi[v] * &d[v]).collect())
        .collect();
    matrix_rank(rows, nv)
}

/// `dim Ext^k(M, N)` for `k >= 1` as the `k`-th cohomology of
/// `Hom(P_*, N)`; must agree with [`Algebra::ext_dim`] on every input.
pub fn ext_dim_oracle(alg: Algebra, k: usize, m: Indec, n: Indec) -> usize {
    debug_assert!(k >= 1, "ext_dim_oracle is defined for k >= 1");
    debug_assert!(alg.contains(m) && alg.contains(n));
    let terms = resolution_modules(alg, m);
    if k >= terms.len() {
        return 0;
    }
    let nv = alg.n();
    let n_rep = Rep::of(alg, n);
    let p_k = Rep::of(alg, terms[k]);
    let at_k = hom_basis(alg, &p_k, &n_rep);

    // rank of Hom(P_k, N) -> Hom(P_{k+1}, N); zero at the end of the resolution
    let outgoing = if k + 1 < terms.len() {
        let p_up = Rep::of(alg, terms[k + 1]);
        rank_after_composition(&at_k, &differential(alg, &p_up, &p_k), nv)
    } else {
        0
    };

    // rank of Hom(P_{k-1}, N) -> Hom(P_k, N)
    let p_below = Rep::of(alg, terms[k - 1]);
    let below = hom_basis(alg, &p_below, &n_rep);
    let incoming = rank_after_composition(&below, &differential(alg, &p_k, &p_below), nv);

    at_k.len() - outgoing - incoming
}
