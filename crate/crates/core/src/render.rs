//! SVG drawings of patches. A cell `g` at height `h` is drawn as a unit-wide
//! box whose left edge sits at `m λ(g) = α(g) (m/n)^h`, in the band of row
//! `h`; higher levels are drawn above lower ones.

use std::fmt::Write;

use crate::group::{lambda_form, CanonicalForm};
use crate::rational::{int, to_f64};
use crate::wang::{Label, Patch};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit of `m λ`.
    pub unit: f64,
    pub row_height: f64,
    pub margin: f64,
    pub show_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            unit: 48.0,
            row_height: 64.0,
            margin: 16.0,
            show_labels: true,
        }
    }
}

struct Cell<'a> {
    g: &'a CanonicalForm,
    x: f64,
    height: i64,
    tile: usize,
}

fn fill(tile: usize) -> String {
    // golden-angle hues keep neighbouring indices apart
    let hue = (tile as f64 * 137.507_764) % 360.0;
    format!("hsl({hue:.1},55%,80%)")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn labels(ls: &[Label]) -> String {
    ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// The same patch and options always give the same bytes.
pub fn render_svg(x: &Patch, opts: &RenderOptions) -> String {
    let m = x.params().m();
    let mut cells: Vec<Cell> = x
        .cells()
        .iter()
        .map(|(g, &tile)| Cell {
            g,
            x: to_f64(&(lambda_form(g) * int(m))),
            height: g.height(),
            tile,
        })
        .collect();
    cells.sort_by(|a, b| {
        (a.height, a.x)
            .partial_cmp(&(b.height, b.x))
            .expect("finite coordinates")
            .then_with(|| a.g.cmp(b.g))
    });

    let (min_x, max_x) = cells
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), c| (lo.min(c.x), hi.max(c.x + 1.0)));
    let (min_h, max_h) = cells
        .iter()
        .fold((i64::MAX, i64::MIN), |(lo, hi), c| (lo.min(c.height), hi.max(c.height)));
    let (min_x, max_x, min_h, max_h) = if cells.is_empty() { (0.0, 1.0, 0, 0) } else { (min_x, max_x, min_h, max_h) };

    let width = (max_x - min_x) * opts.unit + 2.0 * opts.margin;
    let height = (max_h - min_h + 1) as f64 * opts.row_height + 2.0 * opts.margin;
    let gap = opts.row_height * 0.1;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<desc>{} cells of a {} patch</desc>"#,
        cells.len(),
        x.params()
    )
    .unwrap();
    let mut current: Option<i64> = None;
    for c in &cells {
        if current != Some(c.height) {
            if current.is_some() {
                out.push_str("</g>\n");
            }
            writeln!(out, r#"<g class="level" data-height="{}">"#, c.height).unwrap();
            current = Some(c.height);
        }
        let x0 = opts.margin + (c.x - min_x) * opts.unit;
        let x1 = x0 + opts.unit;
        let y0 = opts.margin + (max_h - c.height) as f64 * opts.row_height + gap;
        let y1 = y0 + opts.row_height - 2.0 * gap;
        let tile = &x.tileset().tiles()[c.tile];
        writeln!(
            out,
            r##"<polygon points="{x0:.2},{y0:.2} {x1:.2},{y0:.2} {x1:.2},{y1:.2} {x0:.2},{y1:.2}" fill="{}" stroke="#333" stroke-width="0.5"><title>{}: tile {} top [{}] left {} right {} bottom [{}]</title></polygon>"##,
            fill(c.tile),
            escape(&c.g.to_string()),
            c.tile,
            escape(&labels(&tile.top)),
            escape(&tile.left.to_string()),
            escape(&tile.right.to_string()),
            escape(&labels(&tile.bottom)),
        )
        .unwrap();
        if opts.show_labels {
            let size = (opts.row_height * 0.16).min(opts.unit * 0.22);
            let mid = (x0 + x1) / 2.0;
            writeln!(
                out,
                r#"<text x="{mid:.2}" y="{:.2}" font-size="{size:.2}" text-anchor="middle">{}</text>"#,
                y0 + size,
                escape(&labels(&tile.top))
            )
            .unwrap();
            writeln!(
                out,
                r#"<text x="{mid:.2}" y="{:.2}" font-size="{size:.2}" text-anchor="middle">{}</text>"#,
                y1 - size * 0.3,
                escape(&labels(&tile.bottom))
            )
            .unwrap();
        }
    }
    if current.is_some() {
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
