//! Deterministic SVG rendering of TP^2 scenes in the figure style:
//! solid three-ray trees for min-plus hyperplanes, dotted trees for a
//! max-plus payment overlay, gray polygons for basic cells, labeled apex
//! dots. All coordinates are computed in exact rational arithmetic and
//! formatted with fixed precision, so identical requests produce
//! byte-identical files on every platform.

use tropmech_core::{PlanePoint, Point, Rational};

use crate::request::Viewport;

const WIDTH: u32 = 800;
const CELL_FILL: &str = "#e0e0e0";

/// Label offsets (in pixels, screen orientation) for the three sectors of
/// a hyperplane, following the fixed axis convention: min-plus sector 1
/// opens upper-right, 2 left, 3 down; max-plus sector 1 opens lower-left,
/// 2 right, 3 up.
const MIN_PLUS_LABEL_OFFSETS: [(i32, i32); 3] = [(16, -16), (-24, -8), (12, 20)];
const MAX_PLUS_LABEL_OFFSETS: [(i32, i32); 3] = [(-24, 18), (16, 6), (-6, -18)];

pub struct Scene {
    pub viewport: Viewport,
    pub types: Vec<PlanePoint>,
    pub payment: Option<PlanePoint>,
    pub cells: Vec<Vec<PlanePoint>>,
    pub sector_labels: bool,
}

pub fn plane(p: &Point) -> PlanePoint {
    PlanePoint {
        x: p.get(1).clone(),
        y: p.get(2).clone(),
    }
}

/// Bounding box of the drawn points inflated by 50%, with a minimum span
/// so single points and empty scenes stay visible.
pub fn default_viewport(points: &[PlanePoint]) -> Viewport {
    if points.is_empty() {
        let five = Rational::from_int(5);
        return Viewport {
            x_min: -&five,
            x_max: five.clone(),
            y_min: -five.clone(),
            y_max: five,
        };
    }
    let mut x_min = points[0].x.clone();
    let mut x_max = points[0].x.clone();
    let mut y_min = points[0].y.clone();
    let mut y_max = points[0].y.clone();
    for p in points {
        x_min = x_min.min(p.x.clone());
        x_max = x_max.max(p.x.clone());
        y_min = y_min.min(p.y.clone());
        y_max = y_max.max(p.y.clone());
    }
    // A quarter of the span on each side inflates the box by 50%.
    let four = Rational::from_int(4);
    let min_span = Rational::from_int(1);
    let x_pad = (&(&x_max - &x_min) / &four).max(min_span.clone());
    let y_pad = (&(&y_max - &y_min) / &four).max(min_span);
    Viewport {
        x_min: &x_min - &x_pad,
        x_max: &x_max + &x_pad,
        y_min: &y_min - &y_pad,
        y_max: &y_max + &y_pad,
    }
}

struct Mapper {
    viewport: Viewport,
    width: Rational,
    height: Rational,
}

impl Mapper {
    fn new(viewport: Viewport) -> Mapper {
        let x_span = &viewport.x_max - &viewport.x_min;
        let y_span = &viewport.y_max - &viewport.y_min;
        assert!(
            x_span.is_positive() && y_span.is_positive(),
            "viewport must have positive extent"
        );
        let width = Rational::from_int(WIDTH as i64);
        let height = &(&width * &y_span) / &x_span;
        Mapper {
            viewport,
            width,
            height,
        }
    }

    fn x_px(&self, x: &Rational) -> Rational {
        let t = &(x - &self.viewport.x_min) / &(&self.viewport.x_max - &self.viewport.x_min);
        &t * &self.width
    }

    /// SVG y grows downward; flip against the viewport top.
    fn y_px(&self, y: &Rational) -> Rational {
        let t = &(&self.viewport.y_max - y) / &(&self.viewport.y_max - &self.viewport.y_min);
        &t * &self.height
    }

    fn point(&self, p: &PlanePoint) -> (String, String) {
        (self.x_px(&p.x).to_decimal(3), self.y_px(&p.y).to_decimal(3))
    }
}

fn push_line(out: &mut String, m: &Mapper, class: &str, a: &PlanePoint, b: &PlanePoint, dotted: bool) {
    let (x1, y1) = m.point(a);
    let (x2, y2) = m.point(b);
    let dash = if dotted {
        " stroke-dasharray=\"5 4\""
    } else {
        ""
    };
    out.push_str(&format!(
        "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"{dash}/>\n"
    ));
}

fn pp(x: &Rational, y: &Rational) -> PlanePoint {
    PlanePoint {
        x: x.clone(),
        y: y.clone(),
    }
}

/// The three rays of a min-plus hyperplane at `apex`: up, right, and the
/// diagonal toward the lower left, clipped to the viewport box.
fn min_plus_rays(apex: &PlanePoint, vp: &Viewport) -> [(PlanePoint, PlanePoint); 3] {
    let up = pp(&apex.x, &vp.y_max);
    let right = pp(&vp.x_max, &apex.y);
    let reach = (&apex.x - &vp.x_min).min(&apex.y - &vp.y_min);
    let diag = pp(&(&apex.x - &reach), &(&apex.y - &reach));
    [
        (apex.clone(), up),
        (apex.clone(), right),
        (apex.clone(), diag),
    ]
}

/// The three rays of a max-plus hyperplane: down, left, and the diagonal
/// toward the upper right.
fn max_plus_rays(apex: &PlanePoint, vp: &Viewport) -> [(PlanePoint, PlanePoint); 3] {
    let down = pp(&apex.x, &vp.y_min);
    let left = pp(&vp.x_min, &apex.y);
    let reach = (&vp.x_max - &apex.x).min(&vp.y_max - &apex.y);
    let diag = pp(&(&apex.x + &reach), &(&apex.y + &reach));
    [
        (apex.clone(), down),
        (apex.clone(), left),
        (apex.clone(), diag),
    ]
}

fn push_sector_labels(
    out: &mut String,
    m: &Mapper,
    apex: &PlanePoint,
    offsets: &[(i32, i32); 3],
    class: &str,
) {
    let (ax, ay) = m.point(apex);
    let ax: f64 = 0.0 + ax.parse::<f64>().unwrap_or(0.0);
    let ay: f64 = 0.0 + ay.parse::<f64>().unwrap_or(0.0);
    for (index, (dx, dy)) in offsets.iter().enumerate() {
        out.push_str(&format!(
            "<text class=\"{class}\" x=\"{:.3}\" y=\"{:.3}\">{}</text>\n",
            ax + *dx as f64,
            ay + *dy as f64,
            index + 1
        ));
    }
}

pub fn render(scene: &Scene) -> String {
    let m = Mapper::new(scene.viewport.clone());
    let width = m.width.to_decimal(0);
    let height = m.height.to_decimal(0);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(
        "<style>line{stroke:#000;stroke-width:1;fill:none}line.axis{stroke:#bbb;stroke-width:0.5}line.max-plus{stroke:#444;stroke-width:1.4}circle{fill:#000}text{font-family:monospace;font-size:12px;fill:#333}</style>\n",
    );
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1\"/>\n"
    ));

    // Coordinate axes through the origin, when visible.
    let zero = Rational::zero();
    let vp = &scene.viewport;
    if !vp.x_min.is_positive() && !vp.x_max.is_negative() {
        push_line(&mut out, &m, "axis", &pp(&zero, &vp.y_min), &pp(&zero, &vp.y_max), false);
    }
    if !vp.y_min.is_positive() && !vp.y_max.is_negative() {
        push_line(&mut out, &m, "axis", &pp(&vp.x_min, &zero), &pp(&vp.x_max, &zero), false);
    }

    for ring in &scene.cells {
        let spots: Vec<String> = ring
            .iter()
            .map(|p| {
                let (x, y) = m.point(p);
                format!("{x},{y}")
            })
            .collect();
        out.push_str(&format!(
            "<polygon class=\"basic-cell\" fill=\"{CELL_FILL}\" stroke=\"none\" points=\"{}\"/>\n",
            spots.join(" ")
        ));
    }

    for apex in &scene.types {
        for (a, b) in min_plus_rays(apex, vp) {
            push_line(&mut out, &m, "min-plus", &a, &b, false);
        }
        if scene.sector_labels {
            push_sector_labels(&mut out, &m, apex, &MIN_PLUS_LABEL_OFFSETS, "sector-min");
        }
    }

    if let Some(apex) = &scene.payment {
        for (a, b) in max_plus_rays(apex, vp) {
            push_line(&mut out, &m, "max-plus", &a, &b, true);
        }
        if scene.sector_labels {
            push_sector_labels(&mut out, &m, apex, &MAX_PLUS_LABEL_OFFSETS, "sector-max");
        }
    }

    for (index, apex) in scene.types.iter().enumerate() {
        let (x, y) = m.point(apex);
        out.push_str(&format!("<circle class=\"apex\" cx=\"{x}\" cy=\"{y}\" r=\"3\"/>\n"));
        out.push_str(&format!(
            "<text class=\"label\" x=\"{x}\" y=\"{y}\" dx=\"6\" dy=\"14\">t{}</text>\n",
            index + 1
        ));
    }
    if let Some(apex) = &scene.payment {
        let (x, y) = m.point(apex);
        out.push_str(&format!("<circle class=\"payment\" cx=\"{x}\" cy=\"{y}\" r=\"3\"/>\n"));
        out.push_str(&format!(
            "<text class=\"label\" x=\"{x}\" y=\"{y}\" dx=\"6\" dy=\"-6\">p</text>\n"
        ));
    }

    out.push_str("</svg>\n");
    out
}
