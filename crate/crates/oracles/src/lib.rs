//! Brute-force reference implementations used as independent oracles by
//! the tropmech test suites. Each routine shares types with the main
//! crate but none of its algorithms: cycles are enumerated outright,
//! feasibility is decided by relaxation, ranks by Gaussian elimination and
//! tropical singularity by full permutation enumeration. Everything here
//! is exponential or cubic and meant for desk-scale instances only.

use itertools::Itertools;
use tropmech_core::{Rational, SquareMatrix, TypeSpace};

/// Minimum cycle mean by enumerating every simple cycle (all rotations of
/// all subsets). Exponential; fine for m <= 6.
pub fn min_cycle_mean_by_enumeration(a: &SquareMatrix) -> Rational {
    let n = a.dim();
    let mut best: Option<Rational> = None;
    for k in 1..=n {
        for subset in (0..n).combinations(k) {
            // Fix the first node, permute the rest: each cycle once.
            let first = subset[0];
            for rest in subset[1..].iter().copied().permutations(k - 1) {
                let mut weight = Rational::zero();
                let mut prev = first;
                for &v in &rest {
                    weight = weight + a.get(prev, v);
                    prev = v;
                }
                weight = weight + a.get(prev, first);
                let mean = weight / Rational::from_int(k as i64);
                if best.as_ref().is_none_or(|b| mean < *b) {
                    best = Some(mean);
                }
            }
        }
    }
    best.expect("a nonempty matrix has cycles")
}

/// Feasibility of the difference system `p_i - p_j <= L_ij` by
/// Bellman–Ford relaxation: feasible iff no relaxation survives n rounds.
pub fn difference_system_feasible(l: &SquareMatrix) -> bool {
    let n = l.dim();
    let mut dist = vec![Rational::zero(); n];
    for _ in 0..n {
        let mut changed = false;
        // dist[i] <= dist[j] + L_ij
        for j in 0..n {
            for i in 0..n {
                let cand = &dist[j] + l.get(i, j);
                if cand < dist[i] {
                    dist[i] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
    let mut settled = true;
    for j in 0..n {
        for i in 0..n {
            if &dist[j] + l.get(i, j) < dist[i] {
                settled = false;
            }
        }
    }
    settled
}

/// One constraint `z_u - z_v <= bound` (or `<` when strict).
#[derive(Debug, Clone)]
pub struct DifferenceConstraint {
    pub u: usize,
    pub v: usize,
    pub bound: Rational,
    pub strict: bool,
}

/// Feasibility of a mixed strict/weak difference system: infeasible iff
/// some cycle has negative weight, or zero weight with a strict edge.
/// Decided by Floyd–Warshall over (weight, strictness) pairs.
pub fn strict_difference_system_feasible(n: usize, constraints: &[DifferenceConstraint]) -> bool {
    // dist[u][v] = Some((w, s)): a u->v chain of total bound w, s = any
    // strict edge on some minimum-weight chain.
    let mut dist: Vec<Vec<Option<(Rational, bool)>>> = vec![vec![None; n]; n];
    for c in constraints {
        let edge = (c.bound.clone(), c.strict);
        match &mut dist[c.u][c.v] {
            slot @ None => *slot = Some(edge),
            Some((w, s)) => {
                if edge.0 < *w {
                    *w = edge.0;
                    *s = edge.1;
                } else if edge.0 == *w {
                    *s = *s || edge.1;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let (Some((wik, sik)), Some((wkj, skj))) = (&dist[i][k], &dist[k][j]) else {
                    continue;
                };
                let cand = (wik + wkj, *sik || *skj);
                match &mut dist[i][j] {
                    slot @ None => *slot = Some(cand),
                    Some((w, s)) => {
                        if cand.0 < *w {
                            *w = cand.0;
                            *s = cand.1;
                        } else if cand.0 == *w {
                            *s = *s || cand.1;
                        }
                    }
                }
            }
        }
    }
    for i in 0..n {
        if let Some((w, strict)) = &dist[i][i] {
            if w.is_negative() || (w.is_zero() && *strict) {
                return false;
            }
        }
    }
    true
}

/// Affine dimension of `{p : p_i - p_j = c_ij for the given pairs}` inside
/// TP^{m-1}: m - 1 minus the rank of the difference vectors e_i - e_j,
/// computed by exact Gaussian elimination.
pub fn affine_dimension_from_equalities(m: usize, pairs: &[(usize, usize)]) -> usize {
    let mut rows: Vec<Vec<Rational>> = pairs
        .iter()
        .filter(|(i, j)| i != j)
        .map(|&(i, j)| {
            let mut row = vec![Rational::zero(); m];
            row[i] = Rational::one();
            row[j] = Rational::from_int(-1);
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &lead;
                for c in 0..m {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    m - 1 - rank
}

/// Tropical genericity by full permutation enumeration of every k×k minor.
pub fn is_generic_by_permutations(t: &TypeSpace) -> bool {
    let m = t.m();
    let r = t.r();
    for k in 2..=m.min(r) {
        for entries in (0..r).combinations(k) {
            for coords in (0..m).combinations(k) {
                let mut best: Option<Rational> = None;
                let mut count = 0u32;
                for perm in (0..k).permutations(k) {
                    let mut sum = Rational::zero();
                    for (row, &col) in perm.iter().enumerate() {
                        sum = sum + t.entry(entries[row]).get(coords[col]);
                    }
                    match &best {
                        None => {
                            best = Some(sum);
                            count = 1;
                        }
                        Some(b) => {
                            if sum < *b {
                                best = Some(sum);
                                count = 1;
                            } else if sum == *b {
                                count += 1;
                            }
                        }
                    }
                }
                if count >= 2 {
                    return false;
                }
            }
        }
    }
    true
}
