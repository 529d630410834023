//! SVG pictures of half-pairs: lower paths below height 0, upper paths above,
//! duals dashed, II-units shaded and II-regions drawn darker.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::regions::{regions, unit_table, HalfPair, RegionKind, Side, Unit, UnitClass, NEG_INF, POS_INF};

const CELL: i64 = 24;
const MARGIN: i64 = 16;

struct Frame {
    xmin: i64,
    xmax: i64,
    ymax: i64,
}

impl Frame {
    fn px(&self, x: i64) -> i64 {
        MARGIN + (x - self.xmin) * CELL
    }

    fn py(&self, y: i64) -> i64 {
        MARGIN + (self.ymax - y) * CELL
    }

    fn clip(&self, x: i64) -> i64 {
        x.clamp(self.xmin, self.xmax)
    }
}

fn finite(v: i64) -> bool {
    v != POS_INF && v != NEG_INF
}

/// Floor height and horizontal start of a unit in the picture plane.
fn unit_box(u: Unit) -> (i64, i64) {
    match u.side {
        Side::Plus => (u.x, u.r as i64),
        Side::Minus => (u.x, -(u.r as i64) - 1),
    }
}

/// Staircase through heights -n-1..0 where `lefts[r]` is the left end of the
/// step at height -r.
fn lower_points(f: &Frame, lefts: &[i64]) -> Vec<(i64, i64)> {
    let top = lefts.len() - 1;
    let mut pts = vec![(f.px(f.clip(lefts[top])), f.py(-(top as i64)))];
    for r in (1..=top).rev() {
        let y = -(r as i64);
        let x = f.clip(lefts[r - 1]);
        pts.push((f.px(x), f.py(y)));
        pts.push((f.px(x), f.py(y + 1)));
    }
    pts
}

/// Staircase through heights 0..n+1 where `rights[r]` is the right end of the
/// step at height r.
fn upper_points(f: &Frame, rights: &[i64]) -> Vec<(i64, i64)> {
    let mut pts = vec![(f.px(f.clip(rights[0])), f.py(0))];
    for r in 1..rights.len() {
        let x = f.clip(rights[r - 1]);
        pts.push((f.px(x), f.py(r as i64)));
        pts.push((f.px(f.clip(rights[r])), f.py(r as i64)));
    }
    pts
}

fn polyline(out: &mut String, pts: &[(i64, i64)], class: &str) {
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
    writeln!(out, r#"<polyline class="{class}" points="{}"/>"#, coords.join(" ")).unwrap();
}

fn rect(out: &mut String, f: &Frame, u: Unit, class: &str) {
    let (x, y) = unit_box(u);
    writeln!(
        out,
        r#"<rect class="{class}" x="{}" y="{}" width="{CELL}" height="{CELL}"/>"#,
        f.px(x),
        f.py(y + 1)
    )
    .unwrap();
}

/// Deterministic SVG of `h`. Each II-region is one `<g class="region">`.
pub fn render_svg(h: &HalfPair) -> String {
    let n = h.n() as i64;
    let l = h.l();
    let values: Vec<i64> = (1..=l)
        .flat_map(|i| (0..=h.n()).map(move |r| (i, r)))
        .flat_map(|(i, r)| [h.alpha(i, r), h.beta(i, r), h.alpha_star(i, r), h.beta_star(i, r)])
        .filter(|&v| finite(v))
        .collect();
    let lo = values.iter().copied().min().unwrap_or(0);
    let hi = values.iter().copied().max().unwrap_or(0);
    let f = Frame {
        xmin: lo - 2,
        xmax: hi + 2,
        ymax: n + 1,
    };
    let width = 2 * MARGIN + (f.xmax - f.xmin) * CELL;
    let height = 2 * MARGIN + (2 * n + 2) * CELL;

    let table = unit_table(h);
    let regs: Vec<BTreeSet<Unit>> = regions(h)
        .into_iter()
        .filter(|v| v.kind == RegionKind::II)
        .map(|v| v.units)
        .collect();
    let in_region: BTreeSet<Unit> = regs.iter().flatten().copied().collect();

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    out.push_str(
        "<style>\
.grid{stroke:#ddd;stroke-width:1}\
.axis{stroke:#888;stroke-width:1.5}\
.unit{fill:#c8c8c8}\
.region rect{fill:#6e6e6e}\
.path{fill:none;stroke:#000;stroke-width:2}\
.dual{fill:none;stroke:#1f5fbf;stroke-width:1.5;stroke-dasharray:4 3}\
</style>\n",
    );

    for x in f.xmin..=f.xmax {
        writeln!(
            out,
            r#"<line class="grid" x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            f.px(x),
            f.py(n + 1),
            f.py(-n - 1)
        )
        .unwrap();
    }
    for y in -n - 1..=n + 1 {
        let class = if y == 0 { "axis" } else { "grid" };
        writeln!(
            out,
            r#"<line class="{class}" x1="{x1}" y1="{yy}" x2="{x2}" y2="{yy}"/>"#,
            x1 = f.px(f.xmin),
            yy = f.py(y),
            x2 = f.px(f.xmax)
        )
        .unwrap();
    }

    for (u, w) in &table {
        if w.class() == UnitClass::II && !in_region.contains(u) {
            let (x, _) = unit_box(*u);
            if x >= f.xmin && x < f.xmax {
                rect(&mut out, &f, *u, "unit");
            }
        }
    }
    for reg in &regs {
        out.push_str("<g class=\"region\">\n");
        for u in reg {
            rect(&mut out, &f, *u, "cell");
        }
        out.push_str("</g>\n");
    }

    for i in 1..=l {
        let a = &h.alphas()[i - 1];
        let b = &h.betas()[i - 1];
        polyline(&mut out, &lower_points(&f, a), "path");
        polyline(&mut out, &upper_points(&f, b), "path");
        let a_star: Vec<i64> = (0..=h.n() + 1).map(|r| h.alpha_star(i, r.min(h.n()))).collect();
        let b_star: Vec<i64> = (0..=h.n() + 1).map(|r| h.beta_star(i, r.min(h.n()))).collect();
        if a_star.iter().all(|&v| finite(v)) {
            polyline(&mut out, &upper_points(&f, &a_star), "dual");
        }
        if b_star.iter().all(|&v| finite(v)) {
            polyline(&mut out, &lower_points(&f, &b_star), "dual");
        }
    }
    out.push_str("</svg>\n");
    out
}
