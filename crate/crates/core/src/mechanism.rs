//! Allocation matrices and single-agent mechanism analysis.
//!
//! A finite type space is an ordered multiset of points in TP^{m-1}; an
//! outcome function assigns each entry (copies distinguished) one of the m
//! outcomes and must be onto. Its allocation matrix has
//! `L_jk = min over assigned-j entries of (t_j - t_k)`, and incentive
//! compatibility is exactly "minimum cycle mean zero" (Rochet). The set of
//! IC payments is then the polytrope of `L`, and revenue equivalence of a
//! mechanism is that polytrope having dimension zero.
//!
//! Sector conventions: row `j` of a zero-diagonal matrix `L` carves the
//! max-plus sector `{t : t_j - t_k >= L_jk for all k}`. This follows the
//! algebra `max_k (L_jk + t_k) = t_j`; the apex notation elsewhere wobbles
//! in sign and is not used.
//!
//! Realizability of a candidate matrix over a finite type space is decided
//! by the separation conditions (every entry covered by some sector, every
//! boundary slice attained, no two opposite slices sharing a lone witness)
//! together with a deterministic backtracking search for a realizing
//! assignment. The separation conditions alone are necessary but not
//! sufficient: one entry can be the unique attainer of two slices that
//! demand different outcomes (see the `chained_forced_faces` test), so the
//! search is part of the decision, and `realize` agrees with
//! `is_realizable` by construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::arrangement::covector;
use crate::graph::DiGraph;
use crate::polytrope::{Point, Polytrope};
use crate::rational::Rational;
use crate::tropical::SquareMatrix;

/// An ordered multiset of r types in TP^{m-1}; entry order defines the copy
/// indices, and equal points may repeat.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TypeSpace {
    m: usize,
    entries: Vec<Point>,
}

impl TypeSpace {
    pub fn new(m: usize, entries: Vec<Point>) -> Result<TypeSpace, MechanismError> {
        if m < 2 {
            return Err(MechanismError::OutcomeCountTooSmall { m });
        }
        for (index, p) in entries.iter().enumerate() {
            if p.dim() != m {
                return Err(MechanismError::CoordinateLength {
                    index,
                    expected: m,
                    got: p.dim(),
                });
            }
        }
        Ok(TypeSpace { m, entries })
    }

    pub fn from_ints(m: usize, entries: &[&[i64]]) -> TypeSpace {
        TypeSpace::new(m, entries.iter().map(|c| Point::from_ints(c)).collect())
            .expect("integer literals form a valid type space")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of entries, copies counted.
    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Point] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> &Point {
        &self.entries[index]
    }
}

impl fmt::Debug for TypeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeSpace(m={}, {:?})", self.m, self.entries)
    }
}

/// An assignment of one outcome (0-based) to each type-space entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomeFunction {
    assignment: Vec<usize>,
}

impl OutcomeFunction {
    pub fn new(assignment: Vec<usize>) -> Self {
        OutcomeFunction { assignment }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn outcome(&self, entry: usize) -> usize {
        self.assignment[entry]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn is_surjective(&self, m: usize) -> bool {
        let mut seen = vec![false; m];
        for &j in &self.assignment {
            if j >= m {
                return false;
            }
            seen[j] = true;
        }
        seen.into_iter().all(|s| s)
    }

    fn class(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter(move |&(_, &g)| g == j)
            .map(|(e, _)| e)
    }
}

impl fmt::Debug for OutcomeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.assignment.iter().map(|&j| j + 1).collect();
        write!(f, "g{one_based:?}")
    }
}

/// Position of a point relative to one max-plus sector of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectorMembership {
    /// Every inequality strict.
    Interior,
    /// All inequalities hold; the listed ones are tight.
    Boundary(BTreeSet<usize>),
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MechanismError {
    #[error("outcome count must be at least 2, got {m}")]
    OutcomeCountTooSmall { m: usize },
    #[error("entry {index} has {got} coordinates, expected {expected}")]
    CoordinateLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("assignment length {got} does not match the {expected} type-space entries")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment targets outcome {outcome} outside 1..={m}")]
    OutcomeOutOfRange { outcome: usize, m: usize },
    #[error("outcome {missing} has no assigned type; outcome functions must be onto")]
    NotSurjective { missing: usize },
    #[error("outcome function is not incentive compatible: {cycle}")]
    NotIncentiveCompatible { cycle: crate::tropical::NegativeCycle },
    #[error("payment lies outside the incentive-compatible payment set")]
    PaymentOutsidePayments,
}

/// Why a matrix cannot be realized over a type space.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotRealizable {
    #[error("entry {entry} lies in no sector of the matrix")]
    UncoveredEntry { entry: usize },
    #[error("no entry attains the ({j}, {k}) boundary slice")]
    UnattainedSlice { j: usize, k: usize },
    #[error("slices ({j}, {k}) and ({k}, {j}) share the single entry {entry}")]
    SharedSingleton { j: usize, k: usize, entry: usize },
    #[error("no assignment of sector-feasible outcomes reproduces the matrix")]
    NoAssignment,
}

fn check_mechanism(t: &TypeSpace, g: &OutcomeFunction) -> Result<(), MechanismError> {
    if g.len() != t.r() {
        return Err(MechanismError::AssignmentLength {
            expected: t.r(),
            got: g.len(),
        });
    }
    if let Some(&j) = g.assignment().iter().find(|&&j| j >= t.m()) {
        return Err(MechanismError::OutcomeOutOfRange {
            outcome: j + 1,
            m: t.m(),
        });
    }
    let mut seen = vec![false; t.m()];
    for &j in g.assignment() {
        seen[j] = true;
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(MechanismError::NotSurjective {
            missing: missing + 1,
        });
    }
    Ok(())
}

/// The allocation matrix `L_jk = min over entries assigned j of (t_j - t_k)`
/// (zero diagonal). Exact, and finite because the assignment is onto.
pub fn allocation_matrix(
    t: &TypeSpace,
    g: &OutcomeFunction,
) -> Result<SquareMatrix, MechanismError> {
    check_mechanism(t, g)?;
    let m = t.m();
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let mut row = vec![None; m];
        for e in g.class(j) {
            let point = t.entry(e);
            for (k, slot) in row.iter_mut().enumerate() {
                let diff = point.get(j) - point.get(k);
                if slot.as_ref().is_none_or(|best| diff < *best) {
                    *slot = Some(diff);
                }
            }
        }
        rows.push(
            row.into_iter()
                .map(|x| x.expect("onto assignment fills every row"))
                .collect(),
        );
    }
    Ok(SquareMatrix::from_rows(rows))
}

/// Rochet's criterion: `g` is incentive compatible iff the minimum cycle
/// mean of its allocation matrix is zero.
pub fn is_ic(t: &TypeSpace, g: &OutcomeFunction) -> Result<bool, MechanismError> {
    Ok(allocation_matrix(t, g)?.min_cycle_mean().is_zero())
}

/// The polytrope of all incentive-compatible payments of `g`, or the
/// negative-cycle witness when `g` is not IC.
pub fn ic_payments(t: &TypeSpace, g: &OutcomeFunction) -> Result<Polytrope, MechanismError> {
    let l = allocation_matrix(t, g)?;
    Polytrope::from_constraints(&l)
        .map_err(|cycle| MechanismError::NotIncentiveCompatible { cycle })
}

/// Weak monotonicity: `L + L^T` entrywise nonnegative.
pub fn is_weakly_monotone(t: &TypeSpace, g: &OutcomeFunction) -> Result<bool, MechanismError> {
    let l = allocation_matrix(t, g)?;
    let m = l.dim();
    Ok((0..m).all(|j| (0..m).all(|k| !(l.get(j, k) + l.get(k, j)).is_negative())))
}

/// Where `point` sits relative to max-plus sector `sector` of `l`:
/// interior if `t_j - t_k > L_jk` for every other `k`, boundary with the
/// set of tight indices if all inequalities hold and some are equalities,
/// outside otherwise.
pub fn sector_membership(l: &SquareMatrix, sector: usize, point: &Point) -> SectorMembership {
    assert!(l.has_zero_diagonal(), "sector matrices have zero diagonals");
    let m = l.dim();
    assert_eq!(point.dim(), m, "point dimension must match the matrix");
    assert!(sector < m, "sector index out of range");
    let mut tight = BTreeSet::new();
    for k in 0..m {
        if k == sector {
            continue;
        }
        let margin = &(point.get(sector) - point.get(k)) - l.get(sector, k);
        if margin.is_negative() {
            return SectorMembership::Outside;
        }
        if margin.is_zero() {
            tight.insert(k);
        }
    }
    if tight.is_empty() {
        SectorMembership::Interior
    } else {
        SectorMembership::Boundary(tight)
    }
}

/// Per-entry data the realizability decision works from.
struct SectorTable {
    /// candidates[e] = sectors whose closed region contains entry e.
    candidates: Vec<Vec<usize>>,
    /// tight[j][k] = entries in sector j with the (j,k) inequality tight.
    tight: Vec<Vec<Vec<usize>>>,
}

fn sector_table(l: &SquareMatrix, t: &TypeSpace) -> SectorTable {
    let m = l.dim();
    let mut candidates = vec![Vec::new(); t.r()];
    let mut tight = vec![vec![Vec::new(); m]; m];
    for (e, point) in t.entries().iter().enumerate() {
        for j in 0..m {
            match sector_membership(l, j, point) {
                SectorMembership::Outside => {}
                SectorMembership::Interior => candidates[e].push(j),
                SectorMembership::Boundary(ks) => {
                    candidates[e].push(j);
                    for k in ks {
                        tight[j][k].push(e);
                    }
                }
            }
        }
    }
    SectorTable { candidates, tight }
}

fn separation_failure(l: &SquareMatrix, t: &TypeSpace, table: &SectorTable) -> Option<NotRealizable> {
    if let Some(entry) = table.candidates.iter().position(|c| c.is_empty()) {
        return Some(NotRealizable::UncoveredEntry { entry });
    }
    let m = l.dim();
    for j in 0..m {
        for k in 0..m {
            if j == k {
                continue;
            }
            match table.tight[j][k].as_slice() {
                [] => return Some(NotRealizable::UnattainedSlice { j, k }),
                [s] if table.tight[k][j].as_slice() == [*s] => {
                    return Some(NotRealizable::SharedSingleton { j, k, entry: *s });
                }
                _ => {}
            }
        }
    }
    None
}

/// Deterministic backtracking over sector-feasible assignments, in
/// lexicographic order (entry index, then outcome index). Accepts the
/// first assignment whose allocation matrix reproduces `l` exactly.
fn search_realizer(l: &SquareMatrix, t: &TypeSpace, table: &SectorTable) -> Option<OutcomeFunction> {
    let m = l.dim();
    let r = t.r();

    // A pair (j, k) must end with some tight entry assigned to j; prune as
    // soon as neither an assigned nor a pending entry can still do it.
    fn feasible(
        m: usize,
        assigned: &[usize],
        table: &SectorTable,
    ) -> bool {
        let next = assigned.len();
        for j in 0..m {
            for k in 0..m {
                if j == k {
                    continue;
                }
                let attainable = table.tight[j][k]
                    .iter()
                    .any(|&e| if e < next { assigned[e] == j } else { true });
                if !attainable {
                    return false;
                }
            }
        }
        true
    }

    fn descend(
        l: &SquareMatrix,
        t: &TypeSpace,
        table: &SectorTable,
        assigned: &mut Vec<usize>,
    ) -> Option<OutcomeFunction> {
        let r = t.r();
        if assigned.len() == r {
            let g = OutcomeFunction::new(assigned.clone());
            if !g.is_surjective(l.dim()) {
                return None;
            }
            let produced = allocation_matrix(t, &g).expect("surjectivity was checked");
            return (&produced == l).then_some(g);
        }
        let entry = assigned.len();
        for &j in &table.candidates[entry] {
            assigned.push(j);
            if feasible(l.dim(), assigned, table) {
                if let Some(g) = descend(l, t, table, assigned) {
                    return Some(g);
                }
            }
            assigned.pop();
        }
        None
    }

    if r < m {
        return None;
    }
    let mut assigned = Vec::with_capacity(r);
    descend(l, t, table, &mut assigned)
}

/// Whether some onto outcome function over `t` has allocation matrix
/// exactly `l`.
pub fn is_realizable(l: &SquareMatrix, t: &TypeSpace) -> bool {
    assert!(l.has_zero_diagonal(), "candidate matrices have zero diagonals");
    assert_eq!(l.dim(), t.m(), "matrix dimension must match the type space");
    let table = sector_table(l, t);
    separation_failure(l, t, &table).is_none() && search_realizer(l, t, &table).is_some()
}

/// Finds an outcome function realizing `l`, or says why none exists.
/// Interior entries are forced to their lone sector by the candidate sets;
/// boundary entries are settled by the lexicographic backtracking search.
pub fn realize(l: &SquareMatrix, t: &TypeSpace) -> Result<OutcomeFunction, NotRealizable> {
    assert!(l.has_zero_diagonal(), "candidate matrices have zero diagonals");
    assert_eq!(l.dim(), t.m(), "matrix dimension must match the type space");
    let table = sector_table(l, t);
    if let Some(reason) = separation_failure(l, t, &table) {
        return Err(reason);
    }
    search_realizer(l, t, &table).ok_or(NotRealizable::NoAssignment)
}

/// The graph of a payment point `p` over `t`: nodes `[m]`, all self-loops,
/// and an edge `(i, j)` whenever some entry lies in max-plus sectors `i`
/// and `j` of the hyperplane with apex `p` — equivalently, some covector
/// column contains both `i` and `j`. Symmetric by construction.
pub fn graph_of_p(t: &TypeSpace, p: &Point) -> DiGraph {
    let cov = covector(t, p);
    let m = t.m();
    let mut g = DiGraph::new(m);
    for i in 0..m {
        g.add_edge(i, i);
    }
    for e in 0..t.r() {
        let sectors = cov.column_outcomes(e);
        for (a, &i) in sectors.iter().enumerate() {
            for &j in &sectors[a + 1..] {
                g.add_edge(i, j);
                g.add_edge(j, i);
            }
        }
    }
    g
}

/// Revenue equivalence of a single mechanism: IC with a zero-dimensional
/// payment set (one payment up to a common additive constant).
pub fn is_revenue_equivalent_mechanism(
    t: &TypeSpace,
    g: &OutcomeFunction,
) -> Result<bool, MechanismError> {
    match ic_payments(t, g) {
        Ok(p) => Ok(p.dimension() == 0),
        Err(MechanismError::NotIncentiveCompatible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Per-pair slack `L_jk - (p_j - p_k)` of an IC payment `p` for `g`.
/// Every slack is nonnegative, and the zero-slack pairs coincide with the
/// edges of `graph_of_p` whose witness entry is assigned the source
/// outcome by `g`; both facts are verified here.
pub fn boundary_slacks(
    t: &TypeSpace,
    g: &OutcomeFunction,
    p: &Point,
) -> Result<SquareMatrix, MechanismError> {
    let l = allocation_matrix(t, g)?;
    let payments = Polytrope::from_constraints(&l)
        .map_err(|cycle| MechanismError::NotIncentiveCompatible { cycle })?;
    if !payments.contains(p) {
        return Err(MechanismError::PaymentOutsidePayments);
    }
    let m = t.m();
    let slacks = SquareMatrix::from_fn(m, |j, k| l.get(j, k) - &(p.get(j) - p.get(k)));

    let cov = covector(t, p);
    let mut witnessed = BTreeSet::new();
    for e in 0..t.r() {
        let sectors = cov.column_outcomes(e);
        let assigned = g.outcome(e);
        if sectors.contains(&assigned) {
            for &j in &sectors {
                if j != assigned {
                    witnessed.insert((assigned, j));
                }
            }
        }
    }
    for j in 0..m {
        for k in 0..m {
            if j == k {
                continue;
            }
            assert!(
                !slacks.get(j, k).is_negative(),
                "payment inside the polytrope cannot have negative slack"
            );
            let tight = slacks.get(j, k).is_zero();
            assert_eq!(
                tight,
                witnessed.contains(&(j, k)),
                "tight pair ({j},{k}) must match an in-sector witness"
            );
        }
    }
    Ok(slacks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2_space() -> TypeSpace {
        TypeSpace::from_ints(2, &[&[0, 1], &[0, -1]])
    }

    fn g(assign: &[usize]) -> OutcomeFunction {
        OutcomeFunction::new(assign.to_vec())
    }

    fn mat(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn allocation_matrix_takes_classwise_minima() {
        let t = m2_space();
        assert_eq!(allocation_matrix(&t, &g(&[1, 0])).unwrap(), mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(allocation_matrix(&t, &g(&[0, 1])).unwrap(), mat(&[&[0, -1], &[-1, 0]]));

        let origins = TypeSpace::from_ints(3, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(
            allocation_matrix(&origins, &g(&[0, 1, 2])).unwrap(),
            SquareMatrix::zero(3)
        );
    }

    #[test]
    fn rochet_criterion_decides_ic() {
        let t = m2_space();
        assert!(is_ic(&t, &g(&[1, 0])).unwrap());
        assert!(!is_ic(&t, &g(&[0, 1])).unwrap());
        let origins = TypeSpace::from_ints(2, &[&[0, 0], &[0, 0]]);
        assert!(is_ic(&origins, &g(&[0, 1])).unwrap());
    }

    #[test]
    fn payments_form_the_expected_interval() {
        let t = m2_space();
        let p = ic_payments(&t, &g(&[1, 0])).unwrap();
        // { -1 <= p_2 - p_1 <= 1 } in normalized coordinates.
        assert!(p.contains(&Point::from_ints(&[0, 1])));
        assert!(p.contains(&Point::from_ints(&[0, -1])));
        assert!(!p.contains(&Point::from_ints(&[0, 2])));
        assert_eq!(p.dimension(), 1);

        let origins = TypeSpace::from_ints(2, &[&[0, 0], &[0, 0]]);
        let full = ic_payments(&origins, &g(&[0, 1])).unwrap();
        assert_eq!(full.closure(), &SquareMatrix::zero(2));
        assert_eq!(full.dimension(), 1); // all of TP^1

        match ic_payments(&t, &g(&[0, 1])) {
            Err(MechanismError::NotIncentiveCompatible { cycle }) => {
                assert_eq!(cycle.cycle, vec![0, 1]);
            }
            other => panic!("expected NotIncentiveCompatible, got {other:?}"),
        }
    }

    #[test]
    fn weak_monotonicity_checks_two_cycles() {
        let t = m2_space();
        assert!(is_weakly_monotone(&t, &g(&[1, 0])).unwrap());
        assert!(!is_weakly_monotone(&t, &g(&[0, 1])).unwrap());
    }

    #[test]
    fn sector_membership_classifies_interior_boundary_outside() {
        let l = mat(&[&[0, 1], &[1, 0]]);
        let boundary = sector_membership(&l, 0, &Point::from_ints(&[0, -1]));
        assert_eq!(boundary, SectorMembership::Boundary(BTreeSet::from([1])));
        assert_eq!(
            sector_membership(&l, 0, &Point::from_ints(&[0, -2])),
            SectorMembership::Interior
        );
        assert_eq!(
            sector_membership(&l, 0, &Point::from_ints(&[0, 1])),
            SectorMembership::Outside
        );
        let zero = SquareMatrix::zero(3);
        assert_eq!(
            sector_membership(&zero, 0, &Point::from_ints(&[0, 0, 0])),
            SectorMembership::Boundary(BTreeSet::from([1, 2]))
        );
    }

    #[test]
    fn realize_recovers_the_unique_assignment() {
        let t = m2_space();
        let l = mat(&[&[0, 1], &[1, 0]]);
        assert!(is_realizable(&l, &t));
        let found = realize(&l, &t).unwrap();
        assert_eq!(found.assignment(), &[1, 0]);
        assert_eq!(allocation_matrix(&t, &found).unwrap(), l);
    }

    #[test]
    fn too_few_entries_are_never_realizable() {
        let t = TypeSpace::from_ints(2, &[&[0, 0]]);
        for l in [mat(&[&[0, 0], &[0, 0]]), mat(&[&[0, 1], &[1, 0]])] {
            assert!(!is_realizable(&l, &t));
            assert!(realize(&l, &t).is_err());
        }
    }

    // Paper-figure geometry (four points, three sectors): panel (a) is
    // realizable, panel (b) differs only in the first sector's apex and
    // leaves the (1,3)/(3,1) slices sharing the lone entry t_2.
    fn four_point_space() -> TypeSpace {
        TypeSpace::from_ints(3, &[&[0, 3, 1], &[0, 1, 3], &[0, 5, 4], &[0, 7, 2]])
    }

    #[test]
    fn shared_singleton_slices_are_not_realizable() {
        let t = four_point_space();
        let l = mat(&[&[0, -3, -3], &[7, 0, 5], &[3, -1, 0]]);
        assert!(!is_realizable(&l, &t));
        match realize(&l, &t) {
            Err(NotRealizable::SharedSingleton { j, k, entry }) => {
                assert_eq!((j.min(k), j.max(k), entry), (0, 2, 1));
            }
            other => panic!("expected SharedSingleton, got {other:?}"),
        }
    }

    #[test]
    fn neighbouring_apex_choice_is_realizable() {
        let t = four_point_space();
        let l = mat(&[&[0, -3, -1], &[7, 0, 5], &[3, -1, 0]]);
        let found = realize(&l, &t).unwrap();
        assert_eq!(found.assignment(), &[0, 2, 2, 1]);
        assert_eq!(allocation_matrix(&t, &found).unwrap(), l);
    }

    #[test]
    fn chained_forced_faces_are_not_realizable() {
        // Every separation condition passes, yet the first entry is the
        // unique attainer of both the (1,2) slice (demanding outcome 1) and
        // the (2,3) slice (demanding outcome 2).
        let t = TypeSpace::from_ints(3, &[&[0, 1, 0], &[0, 0, -3], &[0, -1, 5], &[0, 1, 6]]);
        let l = mat(&[&[0, -1, 0], &[0, 0, 1], &[5, 5, 0]]);
        let table = sector_table(&l, &t);
        assert!(separation_failure(&l, &t, &table).is_none());
        assert_eq!(realize(&l, &t), Err(NotRealizable::NoAssignment));
        assert!(!is_realizable(&l, &t));
        // Exhaustive confirmation over all 3^4 assignments.
        for code in 0..81usize {
            let assignment: Vec<usize> = (0..4).map(|e| (code / 3usize.pow(e as u32)) % 3).collect();
            let cand = OutcomeFunction::new(assignment);
            if cand.is_surjective(3) {
                assert_ne!(allocation_matrix(&t, &cand).unwrap(), l);
            }
        }
    }

    #[test]
    fn graph_of_p_reads_ties_of_the_covector() {
        let t = m2_space();
        let apart = graph_of_p(&t, &Point::from_ints(&[0, 0]));
        assert_eq!(apart.edge_count(), 2); // self-loops only
        let touching = graph_of_p(&t, &Point::from_ints(&[0, 1]));
        assert!(touching.has_edge(0, 1) && touching.has_edge(1, 0));

        let single = TypeSpace::from_ints(2, &[&[0, 5]]);
        let complete = graph_of_p(&single, &Point::from_ints(&[0, 5]));
        assert_eq!(complete.edge_count(), 4);
    }

    #[test]
    fn revenue_equivalence_needs_a_zero_dimensional_payment_set() {
        let t = m2_space();
        assert!(!is_revenue_equivalent_mechanism(&t, &g(&[1, 0])).unwrap());
        assert!(!is_revenue_equivalent_mechanism(&t, &g(&[0, 1])).unwrap());

        let copies = TypeSpace::from_ints(2, &[&[0, 1], &[0, 1], &[0, -1]]);
        assert!(is_revenue_equivalent_mechanism(&copies, &g(&[1, 0, 0])).unwrap());

        let origins = TypeSpace::from_ints(3, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        // Payment set is all of TP^2: dimension 2, not revenue equivalent.
        assert!(!is_revenue_equivalent_mechanism(&origins, &g(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn boundary_slacks_match_the_tight_pairs() {
        let t = m2_space();
        let interval = ic_payments(&t, &g(&[1, 0])).unwrap();

        let center = interval.interior_point();
        assert_eq!(center, Point::from_ints(&[0, 0]));
        let slacks = boundary_slacks(&t, &g(&[1, 0]), &center).unwrap();
        assert_eq!(slacks.get(0, 1), &Rational::from_int(1));
        assert_eq!(slacks.get(1, 0), &Rational::from_int(1));

        let face = Point::from_ints(&[0, -1]); // p_1 - p_2 = 1 = L_12
        let slacks = boundary_slacks(&t, &g(&[1, 0]), &face).unwrap();
        assert!(slacks.get(0, 1).is_zero());
        assert_eq!(slacks.get(1, 0), &Rational::from_int(2));

        let origins = TypeSpace::from_ints(2, &[&[0, 0], &[0, 0]]);
        let slacks = boundary_slacks(&origins, &g(&[0, 1]), &Point::from_ints(&[0, 0])).unwrap();
        assert!(slacks.get(0, 1).is_zero() && slacks.get(1, 0).is_zero());

        assert_eq!(
            boundary_slacks(&t, &g(&[1, 0]), &Point::from_ints(&[0, 5])),
            Err(MechanismError::PaymentOutsidePayments)
        );
    }

    #[test]
    fn degenerate_inputs_report_usage_errors() {
        let t = m2_space();
        assert!(matches!(
            allocation_matrix(&t, &g(&[0])),
            Err(MechanismError::AssignmentLength { .. })
        ));
        assert!(matches!(
            allocation_matrix(&t, &g(&[0, 0])),
            Err(MechanismError::NotSurjective { missing: 2 })
        ));
        assert!(matches!(
            allocation_matrix(&t, &g(&[0, 5])),
            Err(MechanismError::OutcomeOutOfRange { .. })
        ));
        assert!(matches!(
            TypeSpace::new(1, vec![]),
            Err(MechanismError::OutcomeCountTooSmall { m: 1 })
        ));
    }
}
