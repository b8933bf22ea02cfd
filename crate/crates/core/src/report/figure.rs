//! The 15 points of the configuration in the plane w = 0, drawn on the
//! triangle of the coordinate points 25, 26, 27.

use crate::klein::KleinConfiguration;

/// Labelled points and segments of the drawing.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureSpec {
    pub points: Vec<(usize, f64, f64)>,
    pub segments: Vec<((f64, f64), (f64, f64))>,
}

/// Vertices and side points (1-based labels), each side listed from its
/// first vertex to its second.
const SIDES: [(usize, usize, [usize; 4]); 3] =
    [(25, 26, [21, 22, 23, 24]), (25, 27, [20, 19, 18, 17]), (26, 27, [9, 10, 11, 12])];

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 440.0;

fn vertex(label: usize) -> (f64, f64) {
    match label {
        25 => (60.0, 380.0),
        26 => (420.0, 380.0),
        _ => (240.0, 68.0),
    }
}

/// Positions are schematic: the six points of each side are evenly spaced
/// between its two vertices.
pub fn figure_spec() -> FigureSpec {
    let mut points = Vec::new();
    let mut segments = Vec::new();
    for v in [25, 26, 27] {
        let (x, y) = vertex(v);
        points.push((v, x, y));
    }
    for (a, b, inner) in SIDES {
        let (pa, pb) = (vertex(a), vertex(b));
        segments.push((pa, pb));
        for (k, &label) in inner.iter().enumerate() {
            let t = (k + 1) as f64 / 5.0;
            points.push((label, pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1)));
        }
    }
    points.sort_by_key(|p| p.0);
    FigureSpec { points, segments }
}

/// Checks that the labelled points really lie in w = 0 and on the drawn sides.
pub fn figure_is_consistent(config: &KleinConfiguration) -> bool {
    let in_plane = figure_spec().points.iter().all(|&(l, _, _)| config.points[l - 1].coords()[3].is_zero());
    let on_sides = SIDES.iter().all(|&(a, b, inner)| {
        let (pa, pb) = (&config.points[a - 1], &config.points[b - 1]);
        inner.iter().all(|&l| crate::geometry::ProjPoint::collinear(pa, pb, &config.points[l - 1]))
    });
    in_plane && on_sides
}

pub fn render_figure() -> String {
    let spec = figure_spec();
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("  <title>Points of the configuration in the plane w = 0</title>\n");
    out.push_str("  <g stroke=\"black\" stroke-width=\"1.5\">\n");
    for ((x1, y1), (x2, y2)) in &spec.segments {
        out.push_str(&format!(
            "    <line class=\"side\" x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>\n"
        ));
    }
    out.push_str("  </g>\n  <g font-family=\"sans-serif\" font-size=\"14\">\n");
    for (label, x, y) in &spec.points {
        out.push_str(&format!("    <circle class=\"point\" cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\"/>\n"));
        let (dx, dy) = if *y > 370.0 {
            (-6.0, 24.0)
        } else if *x < 240.0 {
            (-26.0, 5.0)
        } else {
            (10.0, 5.0)
        };
        out.push_str(&format!("    <text x=\"{:.1}\" y=\"{:.1}\">{label}</text>\n", x + dx, y + dy));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
