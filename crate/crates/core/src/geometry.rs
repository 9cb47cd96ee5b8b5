//! Exact planar geometry for polytropes in TP^2 (m = 3).
//!
//! In normalized coordinates `(x, y) = (p_2 - p_1, p_3 - p_1)` a polytrope
//! is cut out by six half-planes of slopes 0, infinity and 1. Because every
//! closure entry is finite, each coordinate difference is bounded in both
//! directions, so these polygons are always bounded and the recession cone
//! is trivial; `UnboundedMismatch` stays in the contract for callers that
//! compare recession behavior but cannot fire on finite-entry inputs.
//!
//! Hausdorff distances between convex polygons are attained at vertices, so
//! the squared distance is an exact rational: it is the max over vertices of
//! one polygon of the min over boundary segments of the other.

use crate::polytrope::Polytrope;
use crate::rational::Rational;
use num::integer::Roots;

/// A point of the normalized (x, y) plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HausdorffError {
    #[error("hausdorff distance supports m = 3 only, got m = {m}")]
    DimensionUnsupported { m: usize },
    #[error("recession cones differ; the distance is infinite")]
    UnboundedMismatch,
}

/// An exact squared distance together with a rational enclosure of the
/// distance itself (`lower <= d <= upper`; the bounds coincide when the
/// square root is rational).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HausdorffDistance {
    pub squared: Rational,
    pub lower: Rational,
    pub upper: Rational,
}

/// A bounded convex polygon given by its half-plane constraints
/// `a*x + b*y <= c` and the vertices they cut out. Degenerate cases
/// (segment, single point) keep shorter vertex lists.
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    constraints: Vec<(Rational, Rational, Rational)>,
    vertices: Vec<PlanePoint>,
}

impl ConvexPolygon {
    /// The polygon of a polytrope in TP^2.
    pub fn from_polytrope(p: &Polytrope) -> Result<ConvexPolygon, HausdorffError> {
        let m = p.space_dim();
        if m != 3 {
            return Err(HausdorffError::DimensionUnsupported { m });
        }
        let a = p.closure();
        let one = Rational::one;
        let zero = Rational::zero;
        // p_i - p_j <= A_ij written over x = p2 - p1, y = p3 - p1.
        let constraints = vec![
            (-one(), zero(), a.get(0, 1).clone()), // -x <= A12
            (one(), zero(), a.get(1, 0).clone()),  //  x <= A21
            (zero(), -one(), a.get(0, 2).clone()), // -y <= A13
            (zero(), one(), a.get(2, 0).clone()),  //  y <= A31
            (one(), -one(), a.get(1, 2).clone()),  //  x - y <= A23
            (-one(), one(), a.get(2, 1).clone()),  // -x + y <= A32
        ];
        let mut vertices = Vec::new();
        for i in 0..constraints.len() {
            for j in i + 1..constraints.len() {
                let (a1, b1, c1) = &constraints[i];
                let (a2, b2, c2) = &constraints[j];
                let det = &(a1 * b2) - &(a2 * b1);
                if det.is_zero() {
                    continue;
                }
                let x = &(c1 * b2 - c2 * b1) / &det;
                let y = &(a1 * c2 - a2 * c1) / &det;
                let v = PlanePoint { x, y };
                if satisfies_all(&constraints, &v) && !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        vertices.sort();
        assert!(!vertices.is_empty(), "a nonempty polytrope has a vertex");
        Ok(ConvexPolygon {
            constraints,
            vertices,
        })
    }

    pub fn vertices(&self) -> &[PlanePoint] {
        &self.vertices
    }

    /// Vertices in counterclockwise boundary order (for rendering).
    pub fn ring(&self) -> Vec<PlanePoint> {
        convex_ring(self.vertices.clone())
    }

    pub fn contains(&self, v: &PlanePoint) -> bool {
        satisfies_all(&self.constraints, v)
    }

    /// Exact squared Euclidean distance from a point to the polygon: zero
    /// inside, otherwise the minimum over all vertex-pair segments (for a
    /// convex region every boundary edge is such a pair, and interior
    /// chords can only lose).
    pub fn squared_distance_from(&self, v: &PlanePoint) -> Rational {
        if self.contains(v) {
            return Rational::zero();
        }
        let mut best: Option<Rational> = None;
        for i in 0..self.vertices.len() {
            for j in i..self.vertices.len() {
                let d = segment_squared_distance(&self.vertices[i], &self.vertices[j], v);
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
        best.expect("polygon has at least one vertex")
    }
}

fn satisfies_all(constraints: &[(Rational, Rational, Rational)], v: &PlanePoint) -> bool {
    constraints
        .iter()
        .all(|(a, b, c)| &(&(a * &v.x) + &(b * &v.y)) <= c)
}

/// Squared distance from point `p` to segment `ab` (coincident endpoints
/// fall back to the point distance).
fn segment_squared_distance(a: &PlanePoint, b: &PlanePoint, p: &PlanePoint) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let apx = &p.x - &a.x;
    let apy = &p.y - &a.y;
    let len2 = &(&abx * &abx) + &(&aby * &aby);
    let t = if len2.is_zero() {
        Rational::zero()
    } else {
        let dot = &(&apx * &abx) + &(&apy * &aby);
        (dot / &len2).max(Rational::zero()).min(Rational::one())
    };
    let dx = apx - &abx * &t;
    let dy = apy - &aby * &t;
    &(&dx * &dx) + &(&dy * &dy)
}

/// Orders points of a convex position set counterclockwise around their
/// centroid, using exact sign tests only.
fn convex_ring(points: Vec<PlanePoint>) -> Vec<PlanePoint> {
    if points.len() <= 2 {
        return points;
    }
    let n = Rational::from_int(points.len() as i64);
    let cx = points.iter().fold(Rational::zero(), |s, p| s + &p.x) / &n;
    let cy = points.iter().fold(Rational::zero(), |s, p| s + &p.y) / &n;
    let mut ring = points;
    ring.sort_by(|p, q| {
        let dp = (&p.x - &cx, &p.y - &cy);
        let dq = (&q.x - &cx, &q.y - &cy);
        let hp = lower_half(&dp);
        let hq = lower_half(&dq);
        hp.cmp(&hq).then_with(|| {
            let cross = &(&dp.0 * &dq.1) - &(&dq.0 * &dp.1);
            Rational::zero().cmp(&cross)
        })
    });
    ring
}

fn lower_half(d: &(Rational, Rational)) -> u8 {
    if d.1.is_negative() || (d.1.is_zero() && d.0.is_negative()) {
        1
    } else {
        0
    }
}

/// Rational enclosure of `sqrt(s)` with width `2^-40` (exact when `s` is a
/// perfect rational square).
pub fn sqrt_enclosure(s: &Rational) -> (Rational, Rational) {
    assert!(!s.is_negative(), "square root of a negative value");
    if s.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let ns = s.numer().sqrt();
    let ds = s.denom().sqrt();
    if &(&ns * &ns) == s.numer() && &(&ds * &ds) == s.denom() {
        let exact = Rational::from_big_ratio(ns, ds);
        return (exact.clone(), exact);
    }
    let scaled = s.mul_pow2(80); // scale = 2^40, squared
    let root = scaled.floor().sqrt();
    let lower = Rational::from_bigint(root.clone()).div_pow2(40);
    let upper = Rational::from_bigint(root + 1).div_pow2(40);
    (lower, upper)
}

/// Exact Euclidean Hausdorff distance between two polytropes in TP^2 on
/// normalized coordinates. The squared distance is an exact rational; the
/// distance itself is returned as an enclosure.
pub fn hausdorff_distance_2d(
    p: &Polytrope,
    q: &Polytrope,
) -> Result<HausdorffDistance, HausdorffError> {
    let pg = ConvexPolygon::from_polytrope(p)?;
    let qg = ConvexPolygon::from_polytrope(q)?;
    // Finite entries force trivial (hence equal) recession cones; a
    // mismatch would be reported as UnboundedMismatch.
    let mut squared = Rational::zero();
    for v in pg.vertices() {
        squared = squared.max(qg.squared_distance_from(v));
    }
    for w in qg.vertices() {
        squared = squared.max(pg.squared_distance_from(w));
    }
    let (lower, upper) = sqrt_enclosure(&squared);
    Ok(HausdorffDistance {
        squared,
        lower,
        upper,
    })
}
