//! SVG figures of the projected lattice, groves, simplified groves and
//! alternating-sign triangles.
//!
//! Lattice points are projected exactly (see [`project`]) and converted to
//! decimals only when written, always with six decimals, so equal inputs give
//! equal bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use thiserror::Error;

use crate::groves::{Grove, GroveError, SimplifiedGrove, Window};
use crate::lattice::{project, Edge, InitialConditions, LatticeError, PlanePoint, Point3, Rhombus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("triangle entry {value} at row {row}, column {col} is not -1, 0 or 1")]
    EntryOutOfRange { row: usize, col: usize, value: i32 },
    #[error("rhombi {0} and {1} overlap in the projection")]
    Overlap(Rhombus, Rhombus),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Grove(#[from] GroveError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Rhombi,
    ShortEdges,
    LongEdges,
    VertexLabels,
    BoundaryClasses,
}

impl Layer {
    pub const ALL: [Layer; 5] = [
        Layer::Rhombi,
        Layer::ShortEdges,
        Layer::LongEdges,
        Layer::VertexLabels,
        Layer::BoundaryClasses,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Layer::Rhombi => "rhombi",
            Layer::ShortEdges => "short_edges",
            Layer::LongEdges => "long_edges",
            Layer::VertexLabels => "vertex_labels",
            Layer::BoundaryClasses => "boundary_classes",
        }
    }

    pub fn from_name(s: &str) -> Option<Layer> {
        Layer::ALL.into_iter().find(|l| l.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit edge length.
    pub scale: f64,
    pub layers: BTreeSet<Layer>,
    /// Drawing window; the minimal cutoff when `None`.
    pub cutoff: Option<i32>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 40.0,
            layers: BTreeSet::from([Layer::Rhombi, Layer::ShortEdges, Layer::LongEdges]),
            cutoff: None,
        }
    }
}

impl RenderOptions {
    pub fn with_layers(mut self, layers: impl IntoIterator<Item = Layer>) -> Self {
        self.layers = layers.into_iter().collect();
        self
    }

    pub fn with_cutoff(mut self, cutoff: i32) -> Self {
        self.cutoff = Some(cutoff);
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    fn has(&self, l: Layer) -> bool {
        self.layers.contains(&l)
    }
}

mod theme {
    pub const BACKGROUND: &str = "#ffffff";
    pub const RHOMBUS: &str = "#000000";
    pub const GRAPH_EDGE: &str = "#9a9a9a";
    pub const SHORT: &str = "#303030";
    pub const LONG: &str = "#c0392b";
    pub const CLASS: &str = "#2471a3";
    pub const LABEL: &str = "#1a1a1a";
    pub const THIN: f64 = 0.02;
    pub const MEDIUM: f64 = 0.04;
    pub const THICK: f64 = 0.09;
    pub const DOT: f64 = 0.06;
    pub const MARGIN: f64 = 0.75;
}

/// Unit triangles of a rhombus in the projection: it splits along its short
/// diagonal into `{top, m1, bottom}` and `{top, m2, bottom}`.
fn unit_triangles(r: &Rhombus) -> [[PlanePoint; 3]; 2] {
    let [m1, m2] = r.middle();
    let tri = |m: Point3| {
        let mut t = [project(r.top), project(m), project(r.bottom())];
        t.sort();
        t
    };
    [tri(m1), tri(m2)]
}

/// Two rhombi whose projected interiors overlap, if any. Projected rhombi are
/// unions of unit triangles of the triangular lattice, so overlapping
/// interiors means a shared unit triangle.
pub fn find_overlap<'a>(rhombi: impl IntoIterator<Item = &'a Rhombus>) -> Option<(Rhombus, Rhombus)> {
    let mut seen: BTreeMap<[PlanePoint; 3], Rhombus> = BTreeMap::new();
    for r in rhombi {
        for t in unit_triangles(r) {
            if let Some(&other) = seen.get(&t) {
                return Some((other, *r));
            }
            seen.insert(t, *r);
        }
    }
    None
}

struct Canvas {
    scale: f64,
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    fn new(scale: f64, points: impl IntoIterator<Item = (f64, f64)>) -> Result<Self, RenderError> {
        if scale.is_nan() || scale <= 0.0 {
            return Err(RenderError::NonPositiveScale);
        }
        let (mut x0, mut x1, mut y0, mut y1) = (0f64, 0f64, 0f64, 0f64);
        for (x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let m = theme::MARGIN;
        Ok(Canvas {
            scale,
            min_x: x0 - m,
            max_y: y1 + m,
            width: (x1 - x0 + 2.0 * m) * scale,
            height: (y1 - y0 + 2.0 * m) * scale,
            body: String::new(),
        })
    }

    fn xy(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x) * self.scale, (self.max_y - y) * self.scale)
    }

    fn at(&self, p: Point3) -> (f64, f64) {
        self.xy(project(p).to_f64())
    }

    fn px(&self, w: f64) -> f64 {
        w * self.scale
    }

    fn line(&mut self, class: &str, color: &str, width: f64, e: Edge) {
        let ((x1, y1), (x2, y2)) = (self.at(e.0), self.at(e.1));
        let w = self.px(width);
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}" stroke="{color}" stroke-width="{w:.6}"/>"#
        );
    }

    fn polygon(&mut self, class: &str, pts: &[Point3]) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.at(p);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let w = self.px(theme::THIN);
        let _ = writeln!(
            self.body,
            r#"<polygon class="{class}" points="{}" fill="none" stroke="{}" stroke-width="{w:.6}"/>"#,
            coords.join(" "),
            theme::RHOMBUS
        );
    }

    fn text(&mut self, class: &str, (x, y): (f64, f64), size: f64, label: &str) {
        let s = self.px(size);
        let _ = writeln!(
            self.body,
            r#"<text class="{class}" x="{x:.6}" y="{y:.6}" font-family="monospace" font-size="{s:.6}" text-anchor="middle" dominant-baseline="central" fill="{}">{label}</text>"#,
            theme::LABEL
        );
    }

    fn vertex(&mut self, p: Point3) {
        let (x, y) = self.at(p);
        let r = self.px(theme::DOT);
        let _ = writeln!(
            self.body,
            r#"<circle class="vertex" cx="{x:.6}" cy="{y:.6}" r="{r:.6}" fill="{}"/>"#,
            theme::LABEL
        );
        let label = format!("{},{},{}", p.i, p.j, p.k);
        let below = (x, y + self.px(0.18));
        self.text("vertex-label", below, 0.13, &label);
    }

    fn class_link(&mut self, class: &[Point3]) {
        let coords: Vec<String> = class
            .iter()
            .map(|&p| {
                let (x, y) = self.at(p);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let w = self.px(theme::MEDIUM);
        let dash = self.px(0.08);
        let _ = writeln!(
            self.body,
            r#"<polyline class="boundary-class" points="{}" fill="none" stroke="{}" stroke-width="{w:.6}" stroke-dasharray="{dash:.6}"/>"#,
            coords.join(" "),
            theme::CLASS
        );
    }

    fn finish(self) -> String {
        let (w, h) = (self.width, self.height);
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.6}\" height=\"{h:.6}\" viewBox=\"0 0 {w:.6} {h:.6}\">\n\
             <rect class=\"canvas\" x=\"0\" y=\"0\" width=\"{w:.6}\" height=\"{h:.6}\" fill=\"{}\"/>\n{}</svg>\n",
            theme::BACKGROUND,
            self.body
        )
    }
}

fn window_canvas(window: &Window, scale: f64) -> Result<Canvas, RenderError> {
    if let Some((r, s)) = find_overlap(window.rhombi()) {
        return Err(RenderError::Overlap(r, s));
    }
    Canvas::new(scale, window.points().iter().map(|&p| project(p).to_f64()))
}

fn draw_common(canvas: &mut Canvas, window: &Window, opts: &RenderOptions) {
    if opts.has(Layer::Rhombi) {
        for r in window.rhombi() {
            let [t, m1, m2, b] = r.vertices();
            canvas.polygon("rhombus", &[t, m1, b, m2]);
        }
    }
    if opts.has(Layer::BoundaryClasses) {
        for class in window.classes() {
            canvas.class_link(class);
        }
    }
}

fn draw_labels(canvas: &mut Canvas, points: &[Point3], opts: &RenderOptions) {
    if opts.has(Layer::VertexLabels) {
        for &p in points {
            canvas.vertex(p);
        }
    }
}

/// Rhombus outlines and both edges of every rhombus in the window.
pub fn render_lattice(ic: &InitialConditions, opts: &RenderOptions) -> Result<String, RenderError> {
    let window = Window::new(ic, opts.cutoff.unwrap_or(ic.min_cutoff()))?;
    let mut canvas = window_canvas(&window, opts.scale)?;
    draw_common(&mut canvas, &window, opts);
    for r in window.rhombi() {
        for (long, layer) in [(false, Layer::ShortEdges), (true, Layer::LongEdges)] {
            if opts.has(layer) {
                canvas.line("graph-edge", theme::GRAPH_EDGE, theme::MEDIUM, r.edge(long));
            }
        }
    }
    draw_labels(&mut canvas, window.points(), opts);
    Ok(canvas.finish())
}

/// One edge per rhombus in the window: long edges thick, short edges thin.
pub fn render_grove(g: &Grove, opts: &RenderOptions) -> Result<String, RenderError> {
    let window = Window::new(g.ic(), opts.cutoff.unwrap_or(g.ic().min_cutoff()))?;
    let mut canvas = window_canvas(&window, opts.scale)?;
    draw_common(&mut canvas, &window, opts);
    for r in window.rhombi() {
        if g.long_edges().contains(r) {
            if opts.has(Layer::LongEdges) {
                canvas.line("long-edge", theme::LONG, theme::THICK, r.long_edge());
            }
        } else if opts.has(Layer::ShortEdges) {
            canvas.line("short-edge", theme::SHORT, theme::MEDIUM, r.short_edge());
        }
    }
    draw_labels(&mut canvas, window.points(), opts);
    Ok(canvas.finish())
}

/// The even edges of a simplified grove; long edges drawn thick.
pub fn render_simplified(s: &SimplifiedGrove, opts: &RenderOptions) -> Result<String, RenderError> {
    let window = Window::new(s.ic(), s.cutoff())?;
    let mut canvas = window_canvas(&window, opts.scale)?;
    draw_common(&mut canvas, &window, opts);
    for &e in s.edges() {
        let long = e.0.sum() == e.1.sum();
        if long && opts.has(Layer::LongEdges) {
            canvas.line("long-edge", theme::LONG, theme::THICK, e);
        } else if !long && opts.has(Layer::ShortEdges) {
            canvas.line("short-edge", theme::SHORT, theme::MEDIUM, e);
        }
    }
    draw_labels(&mut canvas, &s.vertices(), opts);
    Ok(canvas.finish())
}

/// Signed labels in a triangle, first row widest.
pub fn render_asm(triangle: &[Vec<i32>], scale: f64) -> Result<String, RenderError> {
    for (row, entries) in triangle.iter().enumerate() {
        for (col, &value) in entries.iter().enumerate() {
            if !(-1..=1).contains(&value) {
                return Err(RenderError::EntryOutOfRange { row, col, value });
            }
        }
    }
    let width = triangle.iter().map(Vec::len).max().unwrap_or(0) as f64;
    // Entry (row, col) sits at (col + row/2, -row * sqrt(3)/2).
    let h = 3f64.sqrt() / 2.0;
    let pos = |row: usize, col: usize| (col as f64 + row as f64 / 2.0, -(row as f64) * h);
    let corners = [(0.0, 0.0), (width - 1.0, 0.0), pos(triangle.len().saturating_sub(1), 0)];
    let mut canvas = Canvas::new(scale, corners)?;
    for (row, entries) in triangle.iter().enumerate() {
        for (col, &value) in entries.iter().enumerate() {
            let at = canvas.xy(pos(row, col));
            canvas.text("entry", at, 0.4, &value.to_string());
        }
    }
    Ok(canvas.finish())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lattice::Preset;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"{class}\"")).count()
    }

    #[test]
    fn lattice_rhombus_count() {
        let ic = InitialConditions::full_cone();
        let svg = render_lattice(&ic, &RenderOptions::default().with_cutoff(2)).unwrap();
        assert_eq!(count(&svg, "rhombus"), 18);
        assert_eq!(count(&svg, "graph-edge"), 36);
    }

    #[test]
    fn empty_layers_give_bare_canvas() {
        let ic = InitialConditions::full_cone();
        let svg = render_lattice(&ic, &RenderOptions::default().with_layers([])).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.lines().count(), 4);
        assert_eq!(count(&svg, "canvas"), 1);
    }

    #[test]
    fn standard_window_vertices() {
        let opts = RenderOptions::default().with_layers([Layer::VertexLabels]);
        let s4 = Preset::standard(4).build().unwrap();
        assert_eq!(count(&render_lattice(&s4, &opts).unwrap(), "vertex"), 46);
        let s5 = Preset::standard(5).build().unwrap();
        assert_eq!(count(&render_lattice(&s5, &opts).unwrap(), "vertex"), 64);
        let too_small = opts.with_cutoff(3);
        assert!(matches!(
            render_lattice(&s5, &too_small),
            Err(RenderError::Grove(GroveError::Lattice(LatticeError::NotACutoff { .. })))
        ));
    }

    #[test]
    fn grove_edges_match_rhombi() {
        let ic = Arc::new(Preset::explicit([Point3::ORIGIN]).build().unwrap());
        let g = Grove::new(
            Arc::clone(&ic),
            BTreeSet::from([Rhombus::a(-1, 0, 0), Rhombus::c(0, 0, -1)]),
        );
        let svg = render_grove(&g, &RenderOptions::default()).unwrap();
        assert_eq!(count(&svg, "long-edge"), 2);
        assert_eq!(count(&svg, "long-edge") + count(&svg, "short-edge"), 9);
        assert_eq!(svg, render_grove(&g, &RenderOptions::default()).unwrap());
    }

    #[test]
    fn asm_entries() {
        let svg = render_asm(&[vec![0, 0], vec![0]], 30.0).unwrap();
        assert_eq!(svg.matches(">0</text>").count(), 3);
        assert_eq!(
            render_asm(&[vec![2]], 30.0),
            Err(RenderError::EntryOutOfRange {
                row: 0,
                col: 0,
                value: 2
            })
        );
    }

    #[test]
    fn bad_scale() {
        let ic = InitialConditions::full_cone();
        let opts = RenderOptions::default().with_scale(0.0);
        assert_eq!(render_lattice(&ic, &opts), Err(RenderError::NonPositiveScale));
    }

    #[test]
    fn overlap_detection() {
        let r = Rhombus::a(0, 0, 0);
        assert_eq!(find_overlap(&[r, r]), Some((r, r)));
        let ic = Preset::kleber(2, 3, 2).build().unwrap();
        assert_eq!(find_overlap(&ic.rhombi_in_j(6).unwrap()), None);
    }
}
