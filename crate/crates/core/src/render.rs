//! Deterministic SVG emission of placed triangles and chains.
//!
//! Lattice coordinates map to Cartesian `(i + j/2, j·√3/2)`, so every
//! cell renders equilateral. Output is byte-deterministic for equal
//! scenes: items render in insertion order, chain entries in key order,
//! and all numbers use fixed two-decimal formatting.
//!
//! Style constants (the input data only assigns roles):
//! gray `#555555` for filled/positive pieces, red `#cc3333` for mirrored
//! or negated pieces, green `#3aa655` for regions cancelled to the empty
//! set, yellow `#e8c832` for point markers, black outlines.

use std::fmt::Write as _;

use crate::chain::{Chain, SimplexKind};
use crate::dissection::DissectionResult;
use crate::lattice::{Eq8Layout, LatticeCoord, PlacedTriangle, Slot, Vertices};
use crate::ring::Sign;
use crate::{chain, Int};

pub const FILL_POSITIVE: &str = "#555555";
pub const FILL_NEGATIVE: &str = "#cc3333";
pub const FILL_EMPTY: &str = "#3aa655";
pub const FILL_MARKER: &str = "#e8c832";
pub const STROKE: &str = "#1a1a1a";
pub const PIECE_OPACITY: &str = "0.82";
/// Pixels per lattice unit.
const SCALE: f64 = 40.0;
/// Viewport margin in lattice units.
const MARGIN: f64 = 0.6;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Visual role of a scene item.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StyleRole {
    /// Filled piece (dark).
    Positive,
    /// Mirrored or negated piece (red).
    Negative,
    /// Cancelled-to-empty region (green).
    Empty,
    /// Point markers and corrections (yellow).
    Marker,
    /// Stroke-only outline.
    Outline,
}

impl StyleRole {
    fn fill(self) -> &'static str {
        match self {
            StyleRole::Positive => FILL_POSITIVE,
            StyleRole::Negative => FILL_NEGATIVE,
            StyleRole::Empty => FILL_EMPTY,
            StyleRole::Marker => FILL_MARKER,
            StyleRole::Outline => "none",
        }
    }
}

#[derive(Clone, Debug)]
enum SceneItem {
    Triangle {
        tri: PlacedTriangle<Int>,
        role: StyleRole,
        label: Option<String>,
    },
    Chain {
        chain: Chain,
        role: StyleRole,
    },
}

/// Ordered collection of triangles and chains to draw.
#[derive(Clone, Debug, Default)]
pub struct Scene {
    items: Vec<SceneItem>,
}

impl Scene {
    pub fn new() -> Self {
        Scene::default()
    }

    /// Adds a triangle labeled with its signed size.
    pub fn add_triangle(&mut self, tri: PlacedTriangle<Int>, role: StyleRole) {
        self.items.push(SceneItem::Triangle {
            tri,
            role,
            label: Some(tri.size.to_string()),
        });
    }

    pub fn add_triangle_labeled(
        &mut self,
        tri: PlacedTriangle<Int>,
        role: StyleRole,
        label: Option<String>,
    ) {
        self.items.push(SceneItem::Triangle { tri, role, label });
    }

    /// Adds a chain; faces draw as cells, edges as segments, vertices as
    /// dots labeled with their multiplicity when it exceeds one.
    pub fn add_chain(&mut self, chain: Chain, role: StyleRole) {
        self.items.push(SceneItem::Chain { chain, role });
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

fn cartesian(at: &LatticeCoord<Int>) -> (f64, f64) {
    let i = at.i as f64;
    let j = at.j as f64;
    (i + j / 2.0, j * SQRT3_2)
}

struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn empty() -> Self {
        Bounds {
            min_x: 0.0,
            min_y: 0.0,
            max_x: 0.0,
            max_y: 0.0,
        }
    }

    fn of(points: impl Iterator<Item = (f64, f64)>) -> Self {
        let mut b: Option<Bounds> = None;
        for (x, y) in points {
            match &mut b {
                None => {
                    b = Some(Bounds {
                        min_x: x,
                        min_y: y,
                        max_x: x,
                        max_y: y,
                    })
                }
                Some(b) => {
                    b.min_x = b.min_x.min(x);
                    b.min_y = b.min_y.min(y);
                    b.max_x = b.max_x.max(x);
                    b.max_y = b.max_y.max(y);
                }
            }
        }
        b.unwrap_or_else(Bounds::empty)
    }
}

fn simplex_points(kind: SimplexKind, at: &LatticeCoord<Int>) -> Vec<(f64, f64)> {
    let p = |di: Int, dj: Int| cartesian(&at.shifted(di, dj));
    match kind {
        SimplexKind::Vertex => vec![p(0, 0)],
        SimplexKind::EdgeH => vec![p(0, 0), p(1, 0)],
        SimplexKind::EdgeV => vec![p(0, 0), p(0, 1)],
        SimplexKind::EdgeD => vec![p(1, 0), p(0, 1)],
        SimplexKind::FaceUp => vec![p(0, 0), p(1, 0), p(0, 1)],
        SimplexKind::FaceDown => vec![p(1, 0), p(0, 1), p(1, 1)],
    }
}

fn item_points(item: &SceneItem) -> Vec<(f64, f64)> {
    match item {
        SceneItem::Triangle { tri, .. } => match tri.vertices() {
            Vertices::Point(p) => vec![cartesian(&p)],
            Vertices::Corners(cs) => cs.iter().map(cartesian).collect(),
        },
        SceneItem::Chain { chain, .. } => chain
            .iter()
            .flat_map(|(id, _)| simplex_points(id.kind, &id.at))
            .collect(),
    }
}

/// Renders a scene as a standalone SVG 1.1 document.
pub fn to_svg(scene: &Scene) -> String {
    let bounds = Bounds::of(scene.items.iter().flat_map(item_points));
    let min_x = bounds.min_x - MARGIN;
    let max_y = bounds.max_y + MARGIN;
    let width = (bounds.max_x - bounds.min_x + 2.0 * MARGIN) * SCALE;
    let height = (bounds.max_y - bounds.min_y + 2.0 * MARGIN) * SCALE;
    // flip y so the lattice's j axis points up on screen
    let tx = |x: f64| (x - min_x) * SCALE;
    let ty = |y: f64| (max_y - y) * SCALE;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );

    for item in &scene.items {
        match item {
            SceneItem::Triangle { tri, role, label } => {
                render_triangle(&mut svg, tri, *role, label.as_deref(), &tx, &ty);
            }
            SceneItem::Chain { chain, role } => {
                render_chain(&mut svg, chain, *role, &tx, &ty);
            }
        }
    }

    svg.push_str("</svg>\n");
    svg
}

fn render_triangle(
    svg: &mut String,
    tri: &PlacedTriangle<Int>,
    role: StyleRole,
    label: Option<&str>,
    tx: &dyn Fn(f64) -> f64,
    ty: &dyn Fn(f64) -> f64,
) {
    match tri.vertices() {
        Vertices::Point(p) => {
            let (x, y) = cartesian(&p);
            let _ = writeln!(
                svg,
                r#"  <circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="{}" stroke="{}" stroke-width="1.00"/>"#,
                tx(x),
                ty(y),
                SCALE * 0.11,
                role.fill(),
                STROKE
            );
        }
        Vertices::Corners(cs) => {
            let pts: Vec<String> = cs
                .iter()
                .map(|c| {
                    let (x, y) = cartesian(c);
                    format!("{:.2},{:.2}", tx(x), ty(y))
                })
                .collect();
            let fill_attr = if role == StyleRole::Outline {
                r#"fill="none""#.to_string()
            } else {
                format!(r#"fill="{}" fill-opacity="{}""#, role.fill(), PIECE_OPACITY)
            };
            let _ = writeln!(
                svg,
                r#"  <polygon points="{}" {} stroke="{}" stroke-width="1.50"/>"#,
                pts.join(" "),
                fill_attr,
                STROKE
            );
            if let Some(text) = label {
                let (cx, cy) = centroid(&cs);
                let font = (SCALE * 0.38 * (tri.size.abs() as f64).clamp(0.8, 3.0)).min(SCALE * 1.2);
                let _ = writeln!(
                    svg,
                    r##"  <text x="{:.2}" y="{:.2}" font-size="{font:.2}" font-family="sans-serif" fill="#ffffff" text-anchor="middle" dominant-baseline="middle">{text}</text>"##,
                    tx(cx),
                    ty(cy)
                );
            }
        }
    }
}

fn centroid(cs: &[LatticeCoord<Int>; 3]) -> (f64, f64) {
    let pts: Vec<(f64, f64)> = cs.iter().map(cartesian).collect();
    (
        (pts[0].0 + pts[1].0 + pts[2].0) / 3.0,
        (pts[0].1 + pts[1].1 + pts[2].1) / 3.0,
    )
}

fn render_chain(
    svg: &mut String,
    chain: &Chain,
    role: StyleRole,
    tx: &dyn Fn(f64) -> f64,
    ty: &dyn Fn(f64) -> f64,
) {
    for (id, mult) in chain.iter() {
        let pts = simplex_points(id.kind, &id.at);
        match id.kind {
            SimplexKind::FaceUp | SimplexKind::FaceDown => {
                let joined: Vec<String> = pts
                    .iter()
                    .map(|(x, y)| format!("{:.2},{:.2}", tx(*x), ty(*y)))
                    .collect();
                let _ = writeln!(
                    svg,
                    r#"  <polygon points="{}" fill="{}" fill-opacity="{}" stroke="{}" stroke-width="0.75"/>"#,
                    joined.join(" "),
                    role.fill(),
                    PIECE_OPACITY,
                    STROKE
                );
            }
            SimplexKind::EdgeH | SimplexKind::EdgeV | SimplexKind::EdgeD => {
                let _ = writeln!(
                    svg,
                    r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="2.50"/>"#,
                    tx(pts[0].0),
                    ty(pts[0].1),
                    tx(pts[1].0),
                    ty(pts[1].1),
                    role.fill()
                );
            }
            SimplexKind::Vertex => {
                let (x, y) = (tx(pts[0].0), ty(pts[0].1));
                let _ = writeln!(
                    svg,
                    r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{}" stroke="{}" stroke-width="0.75"/>"#,
                    SCALE * 0.13,
                    role.fill(),
                    STROKE
                );
                if mult.abs() >= 2 {
                    let _ = writeln!(
                        svg,
                        r#"  <text x="{:.2}" y="{:.2}" font-size="{:.2}" font-family="sans-serif" fill="{}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
                        x + SCALE * 0.22,
                        y - SCALE * 0.22,
                        SCALE * 0.35,
                        STROKE,
                        mult.abs()
                    );
                }
            }
        }
    }
}

/// Scene for a dissection result: target outline plus every piece, filled
/// by orientation and labeled with its signed size.
pub fn dissection_scene(result: &DissectionResult, target: &PlacedTriangle<Int>) -> Scene {
    let mut scene = Scene::new();
    scene.add_triangle_labeled(*target, StyleRole::Outline, None);
    for (sign, tri) in &result.pieces {
        let role = match (sign, tri.size < 0) {
            (Sign::Plus, false) => StyleRole::Positive,
            _ => StyleRole::Negative,
        };
        scene.add_triangle(*tri, role);
    }
    scene
}

/// Scene for a placed seven-piece construction: positive pieces dark,
/// subtracted pieces red, the assembled triangle as an outline.
pub fn eq8_scene(layout: &Eq8Layout<Int>) -> Scene {
    let mut scene = Scene::new();
    scene.add_triangle_labeled(layout.big(), StyleRole::Outline, None);
    for slot in Slot::ALL {
        let piece = layout.piece(slot);
        let role = if slot.coefficient() > 0 {
            StyleRole::Positive
        } else {
            StyleRole::Negative
        };
        scene.add_triangle_labeled(piece, role, Some(format!("{}:{}", slot, piece.size)));
    }
    scene
}

/// Scene for the canonical unit decomposition of `⟨n⟩`: closed units dark,
/// open mirrored units red, and yellow overlap markers at over-covered
/// corners labeled with the cover count.
pub fn eq26_scene(n: Int, anchor: LatticeCoord<Int>) -> Scene {
    let placement = chain::eq26_placement(n, anchor);
    let mut scene = Scene::new();
    scene.add_triangle_labeled(PlacedTriangle::new(anchor, n), StyleRole::Outline, None);
    for u in &placement.units {
        scene.add_triangle(*u, StyleRole::Positive);
    }
    for o in &placement.opens {
        scene.add_triangle(*o, StyleRole::Negative);
    }
    // overlap counts are one more than the subtracted correction
    let mut overlaps = Chain::new(crate::Mode::N20);
    for (at, mult) in &placement.corrections {
        overlaps.accumulate(
            crate::chain::SimplexId::new(SimplexKind::Vertex, at.i, at.j),
            mult + 1,
        );
    }
    scene.add_chain(overlaps, StyleRole::Marker);
    scene
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissection::{builtin, interpret, Builtin};
    use crate::Triangle;

    #[test]
    fn empty_scene_is_valid_svg() {
        let svg = to_svg(&Scene::new());
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let layout = Eq8Layout::new(Triangle::at(0, 0, -12), 19, 12, 20);
        let a = to_svg(&eq8_scene(&layout));
        let b = to_svg(&eq8_scene(&layout));
        assert_eq!(a, b);
    }

    #[test]
    fn dissection_scene_labels_every_piece_once() {
        let r = interpret(&builtin(Builtin::A), LatticeCoord::origin()).unwrap();
        let scene = dissection_scene(&r, &Triangle::at(0, 0, 39));
        let svg = to_svg(&scene);
        assert_eq!(svg.matches("<polygon").count(), 16); // outline + 15 pieces
        for (_, tri) in &r.pieces {
            let label = format!(">{}</text>", tri.size);
            assert!(svg.contains(&label), "missing label {}", tri.size);
        }
    }

    #[test]
    fn unit_decomposition_scene_shows_overlap_counts() {
        let scene = eq26_scene(3, LatticeCoord::origin());
        let svg = to_svg(&scene);
        assert_eq!(svg.matches(FILL_MARKER).count(), 7, "seven yellow points");
        assert!(svg.contains(">2</text>"));
        assert!(svg.contains(">3</text>"));
        assert_eq!(svg.matches(">3</text>").count(), 1, "one interior corner");
    }

    #[test]
    fn empty_pair_region_renders_green() {
        let mut scene = Scene::new();
        scene.add_triangle_labeled(Triangle::at(0, 0, 2), StyleRole::Empty, None);
        let svg = to_svg(&scene);
        assert!(svg.contains(FILL_EMPTY));
    }
}
