//! Min-plus matrix algebra over exact rationals.
//!
//! A square matrix with finite entries is read as a complete weighted
//! digraph on `[m]`. The two workhorse routines are Karp's minimum cycle
//! mean (the unique min-plus eigenvalue) and the Floyd–Warshall Kleene
//! closure `A*` (all-pairs shortest paths, defined exactly when no cycle is
//! negative). The critical graph records which difference constraints
//! `p_i - p_j <= A*_ij` are forced tight on the whole solution set; its
//! strongly connected components drive every dimension computation
//! downstream.
//!
//! Entries are always finite; there is no infinite element. All values are
//! immutable after construction and all operations are pure.

use std::fmt;

use crate::graph::DiGraph;
use crate::rational::Rational;

/// An m×m matrix of exact rationals, indexed `(row, column)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareMatrix {
    m: usize,
    entries: Vec<Rational>,
}

/// A directed cycle of negative total weight, as a node sequence
/// `v0 -> v1 -> ... -> v0` (the closing edge is implicit).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct NegativeCycle {
    pub cycle: Vec<usize>,
}

impl fmt::Display for NegativeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.cycle.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "negative cycle through nodes [{}]", nodes.join(", "))
    }
}

impl SquareMatrix {
    /// All-zero matrix.
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1, "matrix dimension must be positive");
        SquareMatrix {
            m,
            entries: vec![Rational::zero(); m * m],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let m = rows.len();
        assert!(m >= 1, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(m * m);
        for row in rows {
            assert_eq!(row.len(), m, "matrix rows must have length {m}");
            entries.extend(row);
        }
        SquareMatrix { m, entries }
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(m >= 1, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { m, entries }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.m + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.m)
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.m).all(|i| self.get(i, i).is_zero())
    }

    /// Min-plus matrix–vector product: `result_i = min_j (A_ij + x_j)`.
    pub fn min_plus_matvec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.m, "vector length must match matrix dimension");
        (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| self.get(i, j) + &x[j])
                    .min()
                    .expect("matrix dimension is positive")
            })
            .collect()
    }

    /// Min-plus matrix product: `(A ⊙ B)_ij = min_k (A_ik + B_kj)`.
    pub fn min_plus_product(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.m, other.m, "matrix dimensions must match");
        SquareMatrix::from_fn(self.m, |i, j| {
            (0..self.m)
                .map(|k| self.get(i, k) + other.get(k, j))
                .min()
                .expect("matrix dimension is positive")
        })
    }

    /// The minimum cycle mean of the complete weighted digraph, by Karp's
    /// recurrence: `min_v max_k (D_n(v) - D_k(v)) / (n - k)` where `D_k(v)`
    /// is the least weight of a walk of exactly `k` edges from node 0 to
    /// `v`. This equals the unique min-plus eigenvalue of the matrix.
    pub fn min_cycle_mean(&self) -> Rational {
        let n = self.m;
        // walks[k][v]: None only while v is unreached (k = 0, v != 0).
        let mut walks: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n + 1];
        walks[0][0] = Some(Rational::zero());
        for k in 1..=n {
            for v in 0..n {
                let mut best: Option<Rational> = None;
                for u in 0..n {
                    if let Some(du) = &walks[k - 1][u] {
                        let cand = du + self.get(u, v);
                        if best.as_ref().is_none_or(|b| cand < *b) {
                            best = Some(cand);
                        }
                    }
                }
                walks[k][v] = best;
            }
        }
        let mut lambda: Option<Rational> = None;
        for v in 0..n {
            let dn = walks[n][v].as_ref().expect("complete graph reaches all");
            let mut worst: Option<Rational> = None;
            for k in 0..n {
                if let Some(dk) = &walks[k][v] {
                    let ratio = (dn - dk) / Rational::from_int((n - k) as i64);
                    if worst.as_ref().is_none_or(|w| ratio > *w) {
                        worst = Some(ratio);
                    }
                }
            }
            let worst = worst.expect("k = n-1 term always exists for n >= 1");
            if lambda.as_ref().is_none_or(|l| worst < *l) {
                lambda = Some(worst);
            }
        }
        lambda.expect("matrix dimension is positive")
    }

    /// Finds a negative-weight cycle if one exists, by Bellman–Ford
    /// relaxation from a virtual source. The returned node sequence is
    /// rotated so its smallest node comes first.
    pub fn find_negative_cycle(&self) -> Option<Vec<usize>> {
        let n = self.m;
        let mut dist = vec![Rational::zero(); n];
        let mut pred = vec![usize::MAX; n];
        let mut touched = None;
        for _round in 0..n {
            touched = None;
            for u in 0..n {
                for v in 0..n {
                    let cand = &dist[u] + self.get(u, v);
                    if cand < dist[v] {
                        dist[v] = cand;
                        pred[v] = u;
                        touched = Some(v);
                    }
                }
            }
            if touched.is_none() {
                return None;
            }
        }
        // A relaxation in round n means the predecessor chain from the
        // touched node must loop through a negative cycle.
        let mut x = touched.expect("loop exit requires a touched node");
        for _ in 0..n {
            x = pred[x];
        }
        let mut cycle = vec![x];
        let mut v = pred[x];
        while v != x {
            cycle.push(v);
            v = pred[v];
        }
        cycle.reverse(); // pred links run backwards; report edge order
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .expect("cycle is nonempty");
        cycle.rotate_left(min_pos);
        Some(cycle)
    }

    /// The Kleene closure `A*`: `A*_ij` is the least weight of any path
    /// `i -> j`, the empty path included, so the diagonal stays zero and
    /// `A*_ij <= A*_ik + A*_kj` for all triples. Requires a zero diagonal;
    /// fails exactly when some cycle has negative weight.
    pub fn kleene_star(&self) -> Result<SquareMatrix, NegativeCycle> {
        assert!(self.has_zero_diagonal(), "kleene_star requires a zero diagonal");
        let n = self.m;
        let mut d = self.clone();
        for k in 0..n {
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..n {
                    let via = d.get(i, k) + d.get(k, j);
                    if via < *d.get(i, j) {
                        d.set(i, j, via);
                    }
                }
            }
        }
        if (0..n).any(|i| d.get(i, i).is_negative()) {
            let cycle = self
                .find_negative_cycle()
                .expect("closure found a negative diagonal");
            return Err(NegativeCycle { cycle });
        }
        Ok(d)
    }

    /// The critical graph of the constraint system `p_i - p_j <= A*_ij`:
    /// edge `(i, j)` whenever `A*_ij + A*_ji = 0`, which forces
    /// `p_i - p_j = A*_ij` on the entire solution set. Self-loops are
    /// always present (the diagonal is trivially tight).
    pub fn critical_graph(&self) -> Result<DiGraph, NegativeCycle> {
        let star = self.kleene_star()?;
        let n = self.m;
        let mut g = DiGraph::new(n);
        for i in 0..n {
            g.add_edge(i, i);
            for j in 0..n {
                if i != j && (star.get(i, j) + star.get(j, i)).is_zero() {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    fn vec_r(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn matvec_takes_minimum_over_columns() {
        assert_eq!(m(&[&[0, 0], &[0, 0]]).min_plus_matvec(&vec_r(&[0, 5])), vec_r(&[0, 0]));
        assert_eq!(m(&[&[0, 2], &[3, 0]]).min_plus_matvec(&vec_r(&[0, 0])), vec_r(&[0, 0]));
        assert_eq!(
            m(&[&[0, 2], &[3, 0]]).min_plus_matvec(&vec_r(&[0, -5])),
            vec_r(&[-3, -5])
        );
    }

    #[test]
    fn cycle_mean_matches_hand_computed_cycles() {
        assert_eq!(m(&[&[0, 0], &[0, 0]]).min_cycle_mean(), Rational::zero());
        assert_eq!(m(&[&[5, 1], &[2, 5]]).min_cycle_mean(), Rational::ratio(3, 2));
        assert_eq!(m(&[&[0, 2], &[3, 0]]).min_cycle_mean(), Rational::zero());
        assert_eq!(m(&[&[0, 1], &[-2, 0]]).min_cycle_mean(), Rational::ratio(-1, 2));
    }

    #[test]
    fn closure_of_closed_matrix_is_itself() {
        let a = m(&[&[0, 2], &[3, 0]]);
        assert_eq!(a.kleene_star().unwrap(), a);
        let b = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(b.kleene_star().unwrap(), b);
    }

    #[test]
    fn closure_tightens_via_intermediate_nodes() {
        let a = m(&[&[0, -3, -2], &[8, 0, 7], &[4, 2, 0]]);
        let star = a.kleene_star().unwrap();
        assert_eq!(star, m(&[&[0, -3, -2], &[8, 0, 6], &[4, 1, 0]]));
    }

    #[test]
    fn negative_cycle_is_reported_with_witness() {
        let err = m(&[&[0, 1], &[-2, 0]]).kleene_star().unwrap_err();
        assert_eq!(err.cycle, vec![0, 1]);
        assert!(err.to_string().contains("[1, 2]"));
    }

    #[test]
    fn critical_graph_marks_forced_equalities() {
        let loops_only = m(&[&[0, 2], &[3, 0]]).critical_graph().unwrap();
        assert_eq!(loops_only.edge_count(), 2);
        let complete = m(&[&[0, 2], &[-2, 0]]).critical_graph().unwrap();
        assert_eq!(complete.edge_count(), 4);
        let zero = m(&[&[0, 0], &[0, 0]]).critical_graph().unwrap();
        assert_eq!(zero.edge_count(), 4);
    }

    #[test]
    fn critical_graph_propagates_negative_cycle() {
        assert!(m(&[&[0, 1], &[-2, 0]]).critical_graph().is_err());
    }
}
