//! Points of tropical affine space and polytropes.
//!
//! A point of TP^{m-1} is stored by its canonical representative with first
//! coordinate zero. A polytrope is the nonempty solution set
//! `{p : p_i - p_j <= A_ij}` of a Kleene-closed matrix; the closure matrix
//! is the unique canonical key, so two polytropes describe the same set
//! exactly when their closures are entrywise equal. Emptiness never occurs
//! here: the constructor reports the negative cycle instead.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::Rational;
use crate::tropical::{NegativeCycle, SquareMatrix};

/// A point of TP^{m-1}, normalized so `coords[0] == 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    /// Normalizes an arbitrary representative by subtracting its first
    /// coordinate from every coordinate.
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "point needs at least one coordinate");
        let base = coords[0].clone();
        Point {
            coords: coords.into_iter().map(|c| c - &base).collect(),
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// The point shifted by `offset` (any representative), re-normalized.
    pub fn translate(&self, offset: &[Rational]) -> Point {
        assert_eq!(offset.len(), self.dim(), "offset length must match dimension");
        Point::new(
            self.coords
                .iter()
                .zip(offset)
                .map(|(c, o)| c + o)
                .collect(),
        )
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cells.join(", "))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The nonempty solution set `{p in TP^{m-1} : p_i - p_j <= closure_ij}` of
/// a Kleene-closed matrix. Houses min-plus eigenspaces, IC payment sets and
/// basic cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polytrope {
    closure: SquareMatrix,
}

impl Polytrope {
    /// Builds the solution set of `{p : p_i - p_j <= l_ij}` for a
    /// zero-diagonal matrix, stored via its Kleene closure. With a zero
    /// diagonal this set equals the min-plus eigenspace `{p : L ⊙ p = p}`:
    /// the diagonal term caps each row minimum at `p_j`, so equality holds
    /// exactly when no other term dips below it. Fails (with the witness
    /// cycle) exactly when the set is empty.
    pub fn from_constraints(l: &SquareMatrix) -> Result<Polytrope, NegativeCycle> {
        Ok(Polytrope {
            closure: l.kleene_star()?,
        })
    }

    /// Ambient dimension m (the set lives in TP^{m-1}).
    pub fn space_dim(&self) -> usize {
        self.closure.dim()
    }

    pub fn closure(&self) -> &SquareMatrix {
        &self.closure
    }

    /// Exact membership test against every difference constraint.
    pub fn contains(&self, p: &Point) -> bool {
        let m = self.space_dim();
        assert_eq!(p.dim(), m, "point dimension must match the polytrope");
        (0..m).all(|i| {
            (0..m).all(|j| &(p.get(i) - p.get(j)) <= self.closure.get(i, j))
        })
    }

    /// The m columns of the closure as normalized points, in column order
    /// (duplicates preserved). Every column lies in the set and the columns
    /// generate it tropically.
    pub fn tropical_vertices(&self) -> Vec<Point> {
        let m = self.space_dim();
        (0..m)
            .map(|j| Point::new((0..m).map(|i| self.closure.get(i, j).clone()).collect()))
            .collect()
    }

    /// The ordinary arithmetic average of the normalized closure columns: a
    /// relative-interior point. It meets every forced (critical) constraint
    /// with equality and every other constraint strictly: the k = i term of
    /// the average is strict for non-critical `(i, j)` because
    /// `0 = A*_ii < A*_ij + A*_ji`.
    pub fn interior_point(&self) -> Point {
        let m = self.space_dim();
        let vertices = self.tropical_vertices();
        let count = Rational::from_int(m as i64);
        let coords = (0..m)
            .map(|i| {
                let mut sum = Rational::zero();
                for v in &vertices {
                    sum += v.get(i);
                }
                sum / &count
            })
            .collect();
        Point::new(coords)
    }

    /// Affine dimension of the set: the number of strongly connected
    /// components of the critical graph, minus one.
    pub fn dimension(&self) -> usize {
        let critical = self
            .closure
            .critical_graph()
            .expect("closure has no negative cycles");
        critical.strongly_connected_components().len() - 1
    }
}

impl fmt::Debug for Polytrope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polytrope{{closure: {}}}", self.closure)
    }
}

/// Closed matrices are in bijection with nonempty polytropes, so the
/// lexicographic order on closure entries is a canonical total order.
impl Ord for Polytrope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.closure.cmp(&other.closure)
    }
}

impl PartialOrd for Polytrope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

    fn poly(rows: &[&[i64]]) -> Polytrope {
        Polytrope::from_constraints(&m(rows)).unwrap()
    }

    #[test]
    fn normalization_pins_first_coordinate() {
        let p = Point::from_ints(&[5, 8, 6]);
        assert_eq!(p, Point::from_ints(&[0, 3, 1]));
        assert!(p.get(0).is_zero());
    }

    #[test]
    fn empty_set_is_a_negative_cycle() {
        assert!(Polytrope::from_constraints(&m(&[&[0, 1], &[-2, 0]])).is_err());
    }

    #[test]
    fn membership_is_exact_including_boundaries() {
        let all_equal = poly(&[&[0, 0], &[0, 0]]);
        assert!(!all_equal.contains(&Point::from_ints(&[0, 7])));
        assert!(all_equal.contains(&Point::from_ints(&[0, 0])));

        let interval = poly(&[&[0, 2], &[3, 0]]);
        assert!(interval.contains(&Point::from_ints(&[0, -3])));
        assert!(!interval.contains(&Point::from_ints(&[0, -4])));
    }

    #[test]
    fn vertices_are_normalized_closure_columns() {
        assert_eq!(
            poly(&[&[0, 0], &[0, 0]]).tropical_vertices(),
            vec![Point::from_ints(&[0, 0]), Point::from_ints(&[0, 0])]
        );
        assert_eq!(
            poly(&[&[0, 2], &[3, 0]]).tropical_vertices(),
            vec![Point::from_ints(&[0, 3]), Point::from_ints(&[0, -2])]
        );
        assert_eq!(
            poly(&[&[0, 2], &[-2, 0]]).tropical_vertices(),
            vec![Point::from_ints(&[0, -2]), Point::from_ints(&[0, -2])]
        );
    }

    #[test]
    fn interior_point_averages_the_columns() {
        assert_eq!(
            poly(&[&[0, 0], &[0, 0]]).interior_point(),
            Point::from_ints(&[0, 0])
        );
        assert_eq!(
            poly(&[&[0, 2], &[3, 0]]).interior_point(),
            Point::new(vec![Rational::zero(), Rational::ratio(1, 2)])
        );
        assert_eq!(
            poly(&[&[0, 2], &[-2, 0]]).interior_point(),
            Point::from_ints(&[0, -2])
        );
    }

    #[test]
    fn dimension_counts_critical_components() {
        assert_eq!(poly(&[&[0, 0], &[0, 0]]).dimension(), 0);
        assert_eq!(poly(&[&[0, 2], &[3, 0]]).dimension(), 1);
        assert_eq!(poly(&[&[0, 2], &[-2, 0]]).dimension(), 0);
    }

    #[test]
    fn closure_is_the_canonical_equality_key() {
        let p = poly(&[&[0, 2], &[3, 0]]);
        let q = poly(&[&[0, 2], &[3, 0]]);
        assert_eq!(p, q);
        assert_ne!(p, poly(&[&[0, 2], &[-2, 0]]));

        // Star idempotence: constraints and their closure cut the same set.
        let l = m(&[&[0, 5], &[3, 0]]);
        let direct = Polytrope::from_constraints(&l).unwrap();
        let closed = Polytrope::from_constraints(direct.closure()).unwrap();
        assert_eq!(direct, closed);
    }
}
