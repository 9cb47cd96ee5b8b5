//! Covectors, genericity and exhaustive analysis of hyperplane
//! arrangements over finite type multisets.
//!
//! The covector of a payment point records, for every type entry, which
//! min-plus sectors of that entry's hyperplane contain the point. An onto
//! outcome function is incentive compatible with payment `p` exactly when
//! it sits inside the covector of `p` as a subgraph, so enumerating IC
//! outcome functions, grouping them by their payment polytropes, yields
//! the basic cells of the arrangement.
//!
//! Enumeration is exhaustive over the `m^r` assignments with early
//! pruning: an assignment prefix dies as soon as the partial allocation
//! matrix (rows of already-populated classes) develops a negative cycle,
//! since later assignments only lower entries. A budget guard fails loudly
//! instead of hanging.
//!
//! Genericity asks that no k-subset of entries projected onto k
//! coordinates is tropically singular (minimum over permutation matchings
//! attained twice). Degenerate multisets are handled through deterministic
//! generic perturbations: entry `e`, coordinate `j` moves by
//! `scale * 2^(e*(m-1) + j - 1)`, so distinct matchings receive distinct
//! power-of-two offset sums and every singular minor is broken once the
//! scale is small enough; the scale halves until genericity holds.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::geometry::{hausdorff_distance_2d, HausdorffDistance, HausdorffError};
use crate::graph::DiGraph;
use crate::mechanism::{graph_of_p, MechanismError, OutcomeFunction, TypeSpace};
use crate::polytrope::{Point, Polytrope};
use crate::rational::Rational;
use crate::tropical::SquareMatrix;

/// Incidence between outcomes and type entries: cell `(i, e)` is set when
/// the reference point lies in min-plus sector `i` of the hyperplane with
/// apex at entry `e`. Every column has at least one set cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    m: usize,
    r: usize,
    incidence: Vec<bool>,
}

impl Covector {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn contains(&self, outcome: usize, entry: usize) -> bool {
        self.incidence[outcome * self.r + entry]
    }

    /// The sectors whose cell is set for one entry, ascending.
    pub fn column_outcomes(&self, entry: usize) -> Vec<usize> {
        (0..self.m).filter(|&i| self.contains(i, entry)).collect()
    }

    pub fn contains_outcome_function(&self, g: &OutcomeFunction) -> bool {
        g.len() == self.r && (0..self.r).all(|e| self.contains(g.outcome(e), e))
    }

    /// Every onto outcome function contained in the covector, in
    /// lexicographic assignment order. Exponential in the worst case;
    /// meant for desk-scale instances.
    pub fn outcome_functions(&self) -> Vec<OutcomeFunction> {
        let columns: Vec<Vec<usize>> = (0..self.r).map(|e| self.column_outcomes(e)).collect();
        let mut found = Vec::new();
        let mut assignment = Vec::with_capacity(self.r);
        fn descend(
            columns: &[Vec<usize>],
            m: usize,
            assignment: &mut Vec<usize>,
            found: &mut Vec<OutcomeFunction>,
        ) {
            if assignment.len() == columns.len() {
                let g = OutcomeFunction::new(assignment.clone());
                if g.is_surjective(m) {
                    found.push(g);
                }
                return;
            }
            for &j in &columns[assignment.len()] {
                assignment.push(j);
                descend(columns, m, assignment, found);
                assignment.pop();
            }
        }
        descend(&columns, self.m, &mut assignment, &mut found);
        found
    }
}

/// The min-plus covector of `p` with respect to `t`: cell `(i, e)` is set
/// iff `p_i - t_i <= p_j - t_j` for every `j`, with `t` the entry `e`.
pub fn covector(t: &TypeSpace, p: &Point) -> Covector {
    let m = t.m();
    assert_eq!(p.dim(), m, "point dimension must match the type space");
    let r = t.r();
    let mut incidence = vec![false; m * r];
    for (e, entry) in t.entries().iter().enumerate() {
        let diffs: Vec<Rational> = (0..m).map(|i| p.get(i) - entry.get(i)).collect();
        let min = diffs.iter().min().expect("m >= 2").clone();
        for (i, d) in diffs.iter().enumerate() {
            if *d == min {
                incidence[i * r + e] = true;
            }
        }
    }
    Covector { m, r, incidence }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrangementError {
    #[error("type space has {r} entries but {m} outcomes; no surjective outcome function exists")]
    TooFewEntries { r: usize, m: usize },
    #[error("enumeration requires {required} assignments, exceeding the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("no generic perturbation found within {attempts} halvings")]
    PerturbationFailed { attempts: u32 },
    #[error("internal cross-check violated: {detail}")]
    CrossCheckViolation { detail: String },
    #[error("cell escaped the convergence envelope {bound} at epsilon {epsilon} (squared distance {squared})")]
    EnvelopeExceeded {
        epsilon: Rational,
        bound: Rational,
        squared: Rational,
    },
    #[error(transparent)]
    Geometry(#[from] HausdorffError),
    #[error(transparent)]
    Mechanism(#[from] MechanismError),
}

/// Guard for the exhaustive `m^r` enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub budget: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { budget: 2_000_000 }
    }
}

/// One basic cell: a payment polytrope together with every IC outcome
/// function whose payment set it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCell {
    pub payments: Polytrope,
    pub outcome_functions: Vec<OutcomeFunction>,
}

/// All basic cells of a type space, sorted by the canonical closure key,
/// plus the raw count of IC outcome functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCellSet {
    pub cells: Vec<BasicCell>,
    /// d(T): the number of IC outcome functions (not cells).
    pub ic_count: u64,
    /// The binomial bound C(r-1, m-1) on the number of cells.
    pub bound: u128,
    pub generic: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Enumerates every surjective outcome function on `t`, keeps the
/// incentive-compatible ones, and groups them by their payment polytrope.
/// Prefixes are rejected as soon as the partial allocation matrix (over
/// classes already populated) has a negative cycle: row entries only
/// decrease as classes grow, so no completion can recover.
pub fn enumerate_ic_outcomes(
    t: &TypeSpace,
    options: &EnumerationOptions,
) -> Result<BasicCellSet, ArrangementError> {
    let m = t.m();
    let r = t.r();
    if r < m {
        return Err(ArrangementError::TooFewEntries { r, m });
    }
    let required = (m as u128)
        .checked_pow(r as u32)
        .unwrap_or(u128::MAX);
    if required > options.budget as u128 {
        return Err(ArrangementError::BudgetExceeded {
            required,
            budget: options.budget,
        });
    }

    struct Search<'a> {
        t: &'a TypeSpace,
        m: usize,
        r: usize,
        rows: Vec<Option<Vec<Rational>>>,
        assignment: Vec<usize>,
        cells: BTreeMap<Polytrope, Vec<OutcomeFunction>>,
        ic_count: u64,
    }

    impl Search<'_> {
        fn partial_has_negative_cycle(&self) -> bool {
            let populated: Vec<usize> = (0..self.m).filter(|&j| self.rows[j].is_some()).collect();
            if populated.len() < 2 {
                return false;
            }
            let sub = SquareMatrix::from_fn(populated.len(), |a, b| {
                self.rows[populated[a]]
                    .as_ref()
                    .expect("populated row")[populated[b]]
                    .clone()
            });
            sub.min_cycle_mean().is_negative()
        }

        fn descend(&mut self, entry: usize) {
            if entry == self.r {
                if self.rows.iter().any(|row| row.is_none()) {
                    return;
                }
                let matrix = SquareMatrix::from_rows(
                    self.rows
                        .iter()
                        .map(|row| row.as_ref().expect("all rows populated").clone())
                        .collect(),
                );
                // No negative cycle survived pruning and the diagonal is
                // zero, so the eigenvalue is zero: this g is IC.
                let payments = Polytrope::from_constraints(&matrix)
                    .expect("pruned prefixes have no negative cycles");
                let g = OutcomeFunction::new(self.assignment.clone());
                self.cells.entry(payments).or_default().push(g);
                self.ic_count += 1;
                return;
            }
            let remaining = self.r - entry;
            let point = self.t.entry(entry);
            for j in 0..self.m {
                let empty_after = self
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|&(k, row)| row.is_none() && k != j)
                    .count();
                if empty_after > remaining - 1 {
                    continue;
                }
                let saved = self.rows[j].clone();
                let diffs: Vec<Rational> =
                    (0..self.m).map(|k| point.get(j) - point.get(k)).collect();
                let changed = match &mut self.rows[j] {
                    Some(row) => {
                        let mut changed = false;
                        for (slot, diff) in row.iter_mut().zip(&diffs) {
                            if diff < slot {
                                *slot = diff.clone();
                                changed = true;
                            }
                        }
                        changed
                    }
                    empty @ None => {
                        *empty = Some(diffs);
                        true
                    }
                };
                self.assignment.push(j);
                if !changed || !self.partial_has_negative_cycle() {
                    self.descend(entry + 1);
                }
                self.assignment.pop();
                self.rows[j] = saved;
            }
        }
    }

    let mut search = Search {
        t,
        m,
        r,
        rows: vec![None; m],
        assignment: Vec::with_capacity(r),
        cells: BTreeMap::new(),
        ic_count: 0,
    };
    search.descend(0);

    let cells = search
        .cells
        .into_iter()
        .map(|(payments, outcome_functions)| BasicCell {
            payments,
            outcome_functions,
        })
        .collect();
    Ok(BasicCellSet {
        cells,
        ic_count: search.ic_count,
        bound: binomial(r - 1, m - 1),
        generic: is_generic(t),
    })
}

/// The distinct payment polytropes of the IC outcome functions. On a
/// generic type space this additionally verifies the cells are
/// full-dimensional and exactly C(r-1, m-1) many.
pub fn basic_cells(
    t: &TypeSpace,
    options: &EnumerationOptions,
) -> Result<Vec<Polytrope>, ArrangementError> {
    let set = enumerate_ic_outcomes(t, options)?;
    if set.generic {
        if set.cells.len() as u128 != set.bound {
            return Err(ArrangementError::CrossCheckViolation {
                detail: format!(
                    "generic type space has {} cells, expected {}",
                    set.cells.len(),
                    set.bound
                ),
            });
        }
        for cell in &set.cells {
            if cell.payments.dimension() != t.m() - 1 {
                return Err(ArrangementError::CrossCheckViolation {
                    detail: format!(
                        "generic basic cell has dimension {}, expected {}",
                        cell.payments.dimension(),
                        t.m() - 1
                    ),
                });
            }
        }
    }
    Ok(set.cells.into_iter().map(|c| c.payments).collect())
}

/// Tropical singularity of a k×k matrix: the minimum over permutation
/// matchings of the diagonal sum is attained at least twice. Subset
/// dynamic programming; the permutation-enumeration oracle lives in the
/// test suites.
fn tropically_singular(matrix: &[Vec<Rational>]) -> bool {
    let k = matrix.len();
    let full = (1usize << k) - 1;
    let mut best: Vec<Option<(Rational, u64)>> = vec![None; full + 1];
    best[0] = Some((Rational::zero(), 1));
    for mask in 0..=full {
        let Some((cost, count)) = best[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for (col, cell) in matrix[row].iter().enumerate() {
            if mask & (1 << col) != 0 {
                continue;
            }
            let next = mask | (1 << col);
            let cand = &cost + cell;
            match &mut best[next] {
                slot @ None => *slot = Some((cand, count)),
                Some((bc, bcount)) => {
                    if cand < *bc {
                        *bc = cand;
                        *bcount = count;
                    } else if cand == *bc {
                        *bcount = bcount.saturating_add(count);
                    }
                }
            }
        }
    }
    best[full].as_ref().expect("full assignment reachable").1 >= 2
}

/// No k-subset of entries (2 <= k <= m) projects onto k coordinates into a
/// tropically singular configuration. Multisets with repeated entries are
/// never generic.
pub fn is_generic(t: &TypeSpace) -> bool {
    let m = t.m();
    let r = t.r();
    for k in 2..=m.min(r) {
        for entries in (0..r).combinations(k) {
            for coords in (0..m).combinations(k) {
                let minor: Vec<Vec<Rational>> = entries
                    .iter()
                    .map(|&e| coords.iter().map(|&c| t.entry(e).get(c).clone()).collect())
                    .collect();
                if tropically_singular(&minor) {
                    return false;
                }
            }
        }
    }
    true
}

/// Deterministic generic perturbation: entry `e`, coordinate `j >= 1`
/// moves by `scale * 2^(e*(m-1) + j-1)`, the scale starting at
/// `epsilon / 2^(r*(m-1))` and halving until the result is generic. Every
/// entry moves by at most `epsilon` in the max norm. Distinct matchings
/// collect distinct subsets of powers of two, so their offset sums always
/// differ and each singular minor survives only finitely many scales.
pub fn generic_perturbation(
    t: &TypeSpace,
    epsilon: &Rational,
    attempt_limit: u32,
) -> Result<TypeSpace, ArrangementError> {
    assert!(epsilon.is_positive(), "perturbation scale must be positive");
    let m = t.m();
    let r = t.r();
    let max_exponent = (r * (m - 1)) as u32;
    let base_scale = epsilon.div_pow2(max_exponent);
    for attempt in 0..attempt_limit {
        let scale = base_scale.div_pow2(attempt);
        let entries: Vec<Point> = t
            .entries()
            .iter()
            .enumerate()
            .map(|(e, point)| {
                let mut offset = vec![Rational::zero(); m];
                for (j, slot) in offset.iter_mut().enumerate().skip(1) {
                    *slot = scale.mul_pow2((e * (m - 1) + j - 1) as u32);
                }
                point.translate(&offset)
            })
            .collect();
        let perturbed = TypeSpace::new(m, entries)?;
        if is_generic(&perturbed) {
            return Ok(perturbed);
        }
    }
    Err(ArrangementError::PerturbationFailed {
        attempts: attempt_limit,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessOptions {
    /// Envelope factor C in the per-step bound C * epsilon; the default is
    /// 4m, an artifact slack constant rather than a theorem rate.
    pub envelope_factor: Option<Rational>,
    pub attempt_limit: u32,
    pub enumeration: EnumerationOptions,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions {
            envelope_factor: None,
            attempt_limit: 64,
            enumeration: EnumerationOptions::default(),
        }
    }
}

/// One base cell matched against its nearest perturbed cell.
#[derive(Debug, Clone)]
pub struct CellMatch {
    pub base: Polytrope,
    pub matched: Polytrope,
    pub distance: HausdorffDistance,
}

#[derive(Debug, Clone)]
pub struct HarnessStep {
    pub epsilon: Rational,
    pub perturbed: TypeSpace,
    pub matches: Vec<CellMatch>,
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub steps: Vec<HarnessStep>,
}

/// Hausdorff-convergence harness (m = 3): for each epsilon, perturbs the
/// type space to a generic one, recomputes the (full-dimensional) basic
/// cells, and matches every basic cell of the original to its nearest
/// perturbed cell. Errors if any base cell escapes the `C * epsilon`
/// envelope. Ties in the matching break toward the smaller canonical
/// closure key.
pub fn convergence_harness(
    t: &TypeSpace,
    epsilons: &[Rational],
    options: &HarnessOptions,
) -> Result<ConvergenceReport, ArrangementError> {
    if t.m() != 3 {
        return Err(HausdorffError::DimensionUnsupported { m: t.m() }.into());
    }
    let factor = options
        .envelope_factor
        .clone()
        .unwrap_or_else(|| Rational::from_int(4 * t.m() as i64));
    let base = enumerate_ic_outcomes(t, &options.enumeration)?;
    let mut steps = Vec::new();
    for epsilon in epsilons {
        let perturbed = generic_perturbation(t, epsilon, options.attempt_limit)?;
        let perturbed_cells = enumerate_ic_outcomes(&perturbed, &options.enumeration)?;
        let bound = &factor * epsilon;
        let bound_squared = &bound * &bound;
        let mut matches = Vec::new();
        for cell in &base.cells {
            let mut nearest: Option<(HausdorffDistance, &Polytrope)> = None;
            for candidate in &perturbed_cells.cells {
                let d = hausdorff_distance_2d(&cell.payments, &candidate.payments)?;
                if nearest
                    .as_ref()
                    .is_none_or(|(best, _)| d.squared < best.squared)
                {
                    nearest = Some((d, &candidate.payments));
                }
            }
            let (distance, matched) =
                nearest.expect("a generic perturbation has at least one cell");
            if distance.squared > bound_squared {
                return Err(ArrangementError::EnvelopeExceeded {
                    epsilon: epsilon.clone(),
                    bound,
                    squared: distance.squared,
                });
            }
            matches.push(CellMatch {
                base: cell.payments.clone(),
                matched: matched.clone(),
                distance,
            });
        }
        steps.push(HarnessStep {
            epsilon: epsilon.clone(),
            perturbed,
            matches,
        });
    }
    Ok(ConvergenceReport { steps })
}

/// Evidence that a type space fails revenue equivalence: a basic cell
/// whose interior point has a disconnected graph.
#[derive(Debug, Clone)]
pub struct ReCertificate {
    pub cell: Polytrope,
    pub witness: Point,
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct ReVerdict {
    pub revenue_equivalent: bool,
    pub certificate: Option<ReCertificate>,
}

/// A type space is revenue equivalent iff the graph of every basic-set
/// point is strongly connected; checking the interior point of every
/// basic cell suffices because boundary covectors only grow. The verdict
/// is cross-checked against "every IC outcome function has a
/// zero-dimensional payment set"; disagreement is a hard error.
pub fn is_re_type_space(
    t: &TypeSpace,
    options: &EnumerationOptions,
) -> Result<ReVerdict, ArrangementError> {
    let set = enumerate_ic_outcomes(t, options)?;
    let mut certificate = None;
    for cell in &set.cells {
        let witness = cell.payments.interior_point();
        let graph: DiGraph = graph_of_p(t, &witness);
        let components = graph.strongly_connected_components();
        let connected = components.len() == 1;
        let dimension_zero = cell.payments.dimension() == 0;
        if connected != dimension_zero {
            return Err(ArrangementError::CrossCheckViolation {
                detail: format!(
                    "graph of {witness:?} has {} components but the cell has dimension {}",
                    components.len(),
                    cell.payments.dimension()
                ),
            });
        }
        if !connected && certificate.is_none() {
            certificate = Some(ReCertificate {
                cell: cell.payments.clone(),
                witness,
                components,
            });
        }
    }
    Ok(ReVerdict {
        revenue_equivalent: certificate.is_none(),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(m: usize, entries: &[&[i64]]) -> TypeSpace {
        TypeSpace::from_ints(m, entries)
    }

    // Three generic points whose arrangement has a single basic cell, the
    // rectangle [3,8] x [2,4], with the identity as its only IC outcome
    // function.
    fn three_point_instance() -> TypeSpace {
        space(3, &[&[0, 3, 2], &[0, 8, 1], &[0, 2, 4]])
    }

    // Three distinct but non-generic points (two share their first
    // coordinate difference); the segment {7} x [5,7] is a basic cell
    // shared by two IC outcome functions.
    fn degenerate_instance() -> TypeSpace {
        space(3, &[&[0, 7, 5], &[0, 3, 7], &[0, 7, 3]])
    }

    #[test]
    fn covector_of_an_apex_is_the_full_column() {
        let t = space(2, &[&[0, 5]]);
        let cov = covector(&t, &Point::from_ints(&[0, 5]));
        assert_eq!(cov.column_outcomes(0), vec![0, 1]);
    }

    #[test]
    fn covector_reads_strict_sectors_exactly() {
        let t = space(2, &[&[0, 1], &[0, -1]]);
        let cov = covector(&t, &Point::from_ints(&[0, 0]));
        assert!(!cov.contains(0, 0) && cov.contains(1, 0));
        assert!(cov.contains(0, 1) && !cov.contains(1, 1));
    }

    #[test]
    fn interior_payment_has_the_identity_covector() {
        let t = three_point_instance();
        let cov = covector(&t, &Point::from_ints(&[0, 6, 3]));
        for e in 0..3 {
            assert_eq!(cov.column_outcomes(e), vec![e]);
        }
        assert_eq!(
            cov.outcome_functions(),
            vec![OutcomeFunction::new(vec![0, 1, 2])]
        );
    }

    #[test]
    fn non_basic_point_has_no_onto_outcome_function() {
        let t = three_point_instance();
        let q = Point::new(vec![
            Rational::zero(),
            Rational::ratio(5, 2),
            Rational::from_int(4),
        ]);
        let cov = covector(&t, &q);
        assert_eq!(cov.column_outcomes(0), vec![1]);
        assert_eq!(cov.column_outcomes(1), vec![1]);
        assert_eq!(cov.column_outcomes(2), vec![0, 2]);
        assert!(cov.outcome_functions().is_empty());
    }

    #[test]
    fn copies_are_never_generic() {
        let t = space(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 5, 1]]);
        assert!(!is_generic(&t));
    }

    #[test]
    fn two_outcomes_need_distinct_projective_points() {
        assert!(is_generic(&space(2, &[&[0, 1], &[0, -1]])));
        assert!(!is_generic(&space(2, &[&[0, 1], &[5, 6]])));
    }

    #[test]
    fn shared_coordinate_differences_break_genericity() {
        assert!(!is_generic(&degenerate_instance()));
        assert!(is_generic(&three_point_instance()));
    }

    #[test]
    fn unique_cell_of_three_generic_points() {
        let t = three_point_instance();
        let set = enumerate_ic_outcomes(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(set.ic_count, 1);
        assert_eq!(set.bound, 1);
        assert!(set.generic);
        assert_eq!(set.cells.len(), 1);
        let cell = &set.cells[0];
        assert_eq!(
            cell.outcome_functions,
            vec![OutcomeFunction::new(vec![0, 1, 2])]
        );
        assert_eq!(cell.payments.dimension(), 2);
        assert!(cell.payments.contains(&Point::from_ints(&[0, 6, 3])));

        let cells = basic_cells(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(cells.len(), 1);
    }

    #[test]
    fn five_generic_points_have_six_cells() {
        let t = space(
            3,
            &[
                &[0, 2, 3],
                &[0, 11, 5],
                &[0, 5, 17],
                &[0, 19, 11],
                &[0, 7, 23],
            ],
        );
        assert!(is_generic(&t));
        let set = enumerate_ic_outcomes(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(set.bound, 6);
        assert_eq!(set.ic_count, 6);
        assert_eq!(set.cells.len(), 6);
        for cell in &set.cells {
            assert_eq!(cell.payments.dimension(), 2);
            assert_eq!(cell.outcome_functions.len(), 1);
        }
    }

    #[test]
    fn two_point_two_outcome_space_has_one_ic_function() {
        let t = space(2, &[&[0, 1], &[0, -1]]);
        let set = enumerate_ic_outcomes(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(set.ic_count, 1);
        assert_eq!(set.cells.len(), 1);
        assert_eq!(
            set.cells[0].outcome_functions,
            vec![OutcomeFunction::new(vec![1, 0])]
        );
    }

    #[test]
    fn degenerate_cell_is_shared_by_two_outcome_functions() {
        let t = degenerate_instance();
        let set = enumerate_ic_outcomes(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(set.ic_count, 2);
        assert_eq!(set.cells.len(), 1);
        let cell = &set.cells[0];
        assert_eq!(cell.payments.dimension(), 1);
        assert_eq!(
            cell.outcome_functions,
            vec![
                OutcomeFunction::new(vec![0, 2, 1]),
                OutcomeFunction::new(vec![1, 2, 0]),
            ]
        );
        // The segment {x = 7, 5 <= y <= 7} in normalized coordinates.
        assert!(cell.payments.contains(&Point::from_ints(&[0, 7, 6])));
        assert!(!cell.payments.contains(&Point::from_ints(&[0, 7, 8])));
        assert!(!cell.payments.contains(&Point::from_ints(&[0, 6, 6])));
    }

    #[test]
    fn copies_overflow_the_cell_bound_but_not_the_cell_count() {
        // One point with three copies: 3! IC outcome functions, one cell.
        let t = space(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        let set = enumerate_ic_outcomes(&t, &EnumerationOptions::default()).unwrap();
        assert_eq!(set.ic_count, 6);
        assert_eq!(set.cells.len(), 1);
        assert_eq!(set.bound, 1);
        assert_eq!(set.cells[0].payments.dimension(), 0);
    }

    #[test]
    fn budget_guard_fails_loudly() {
        let t = space(2, &[&[0, 1], &[0, -1]]);
        let err = enumerate_ic_outcomes(&t, &EnumerationOptions { budget: 3 }).unwrap_err();
        assert_eq!(
            err,
            ArrangementError::BudgetExceeded {
                required: 4,
                budget: 3
            }
        );
    }

    #[test]
    fn too_few_entries_cannot_be_enumerated() {
        let t = space(3, &[&[0, 1, 2], &[0, 2, 1]]);
        assert!(matches!(
            enumerate_ic_outcomes(&t, &EnumerationOptions::default()),
            Err(ArrangementError::TooFewEntries { r: 2, m: 3 })
        ));
    }

    #[test]
    fn perturbation_reaches_genericity_within_the_displacement_budget() {
        let eps = Rational::ratio(1, 100);
        for t in [
            three_point_instance(),
            degenerate_instance(),
            space(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2], &[0, 4, 4]]),
        ] {
            let perturbed = generic_perturbation(&t, &eps, 64).unwrap();
            assert!(is_generic(&perturbed));
            for (before, after) in t.entries().iter().zip(perturbed.entries()) {
                for (b, a) in before.coords().iter().zip(after.coords()) {
                    assert!((a - b).abs() <= eps);
                }
            }
        }
    }

    #[test]
    fn powers_of_two_offsets_separate_triple_copies_in_higher_dimension() {
        // Power-of-index offsets stall on this shape; distinct powers of
        // two must not.
        let t = space(4, &[&[0, 1, 2, 3], &[0, 1, 2, 3], &[0, 1, 2, 3], &[0, 9, 0, 0]]);
        let perturbed = generic_perturbation(&t, &Rational::ratio(1, 10), 64).unwrap();
        assert!(is_generic(&perturbed));
    }

    #[test]
    fn harness_tracks_cells_of_an_already_generic_space() {
        let t = three_point_instance();
        let eps = [Rational::ratio(1, 4), Rational::ratio(1, 8)];
        let report = convergence_harness(&t, &eps, &HarnessOptions::default()).unwrap();
        assert_eq!(report.steps.len(), 2);
        for step in &report.steps {
            assert_eq!(step.matches.len(), 1);
        }
        let d0 = &report.steps[0].matches[0].distance.squared;
        let d1 = &report.steps[1].matches[0].distance.squared;
        assert!(d1 <= d0);
    }

    #[test]
    fn harness_rejects_unsupported_dimension() {
        let t = space(2, &[&[0, 1], &[0, -1]]);
        assert!(matches!(
            convergence_harness(&t, &[Rational::ratio(1, 4)], &HarnessOptions::default()),
            Err(ArrangementError::Geometry(
                HausdorffError::DimensionUnsupported { m: 2 }
            ))
        ));
    }

    #[test]
    fn generic_spaces_are_not_revenue_equivalent() {
        let t = three_point_instance();
        let verdict = is_re_type_space(&t, &EnumerationOptions::default()).unwrap();
        assert!(!verdict.revenue_equivalent);
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.components, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn coincident_copies_are_revenue_equivalent() {
        let pair = space(2, &[&[0, 1], &[0, 1]]);
        assert!(is_re_type_space(&pair, &EnumerationOptions::default())
            .unwrap()
            .revenue_equivalent);

        let triple = space(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        assert!(is_re_type_space(&triple, &EnumerationOptions::default())
            .unwrap()
            .revenue_equivalent);
    }

    #[test]
    fn separated_pairs_fail_revenue_equivalence() {
        let t = space(2, &[&[0, 1], &[0, -1], &[0, 1], &[0, -1]]);
        assert!(!is_re_type_space(&t, &EnumerationOptions::default())
            .unwrap()
            .revenue_equivalent);
    }
}
