use std::fmt::Write;

use qshilov_core::prinseries::{CaseReport, KVector};

const CELL: i64 = 32;
const MARGIN: i64 = 48;
const LEGEND: i64 = 280;
const PALETTE: [&str; 4] = ["#7fb3d5", "#f5b041", "#82e0aa", "#d7bde2"];

struct Frame {
    lo: i64,
    hi: i64,
}

impl Frame {
    fn x(&self, k1: i64) -> i64 {
        MARGIN + (k1 - self.lo) * CELL
    }

    fn y(&self, k2: i64) -> i64 {
        MARGIN + (self.hi - k2) * CELL
    }

    fn side(&self) -> i64 {
        (self.hi - self.lo) * CELL
    }
}

fn arrow(out: &mut String, x: i64, y: i64, dx: i64, dy: i64) {
    let (ex, ey) = (x + dx * 18, y + dy * 18);
    let _ = writeln!(out, r##"<line x1="{x}" y1="{y}" x2="{ex}" y2="{ey}" stroke="#c0392b" stroke-width="2"/>"##);
    // Head: two short strokes back from the tip.
    let (px, py) = (-dy, dx);
    for s in [1, -1] {
        let hx = ex - dx * 6 + s * px * 5;
        let hy = ey - dy * 6 + s * py * 5;
        let _ = writeln!(out, r##"<line x1="{ex}" y1="{ey}" x2="{hx}" y2="{hy}" stroke="#c0392b" stroke-width="2"/>"##);
    }
}

/// Wall diagram in the `(k1, k2)` plane for a rank-two report. The walls sit
/// half a step outside the lattice points they bound.
pub fn diagram(r: &CaseReport) -> Result<String, String> {
    if r.n != 2 {
        return Err("diagrams are drawn for n = 2 only".into());
    }
    let (a, b) = r
        .canonical_params
        .as_ints()
        .ok_or("diagrams need integral parameters; nonintegral series are irreducible")?;
    let marks = [b, -a - 1, b + 1, -a, 0];
    let lo = marks.iter().min().unwrap() - 3;
    let hi = marks.iter().max().unwrap() + 3;
    let f = Frame { lo, hi };
    let w = 2 * MARGIN + f.side() + LEGEND;
    let h = 2 * MARGIN + f.side();
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
    // The cone k1 >= k2.
    let (x0, y0, x1, y1) = (f.x(lo), f.y(lo), f.x(hi), f.y(hi));
    let _ = writeln!(out, r##"<polygon points="{x0},{y0} {x1},{y0} {x1},{y1}" fill="#f2f3f4"/>"##);
    let _ = writeln!(out, r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#7f8c8d" stroke-dasharray="4,3"/>"##);
    // Axes.
    let (ax, ay) = (f.x(0), f.y(0));
    let _ = writeln!(out, r##"<line x1="{x0}" y1="{ay}" x2="{x1}" y2="{ay}" stroke="#000000"/>"##);
    let _ = writeln!(out, r##"<line x1="{ax}" y1="{y0}" x2="{ax}" y2="{y1}" stroke="#000000"/>"##);
    let _ = writeln!(out, r#"<text x="{}" y="{}" font-size="14" font-family="sans-serif">k1</text>"#, x1 + 6, ay + 4);
    let _ = writeln!(out, r#"<text x="{}" y="{}" font-size="14" font-family="sans-serif">k2</text>"#, ax - 8, y1 - 10);
    // Lattice points of the cone.
    for k1 in lo..=hi {
        for k2 in lo..=k1 {
            let k = KVector(vec![k1, k2]);
            let fill = r
                .submodules
                .iter()
                .position(|m| m.contains(&k))
                .map(|i| PALETTE[i % PALETTE.len()])
                .unwrap_or("#ffffff");
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="5" fill="{fill}" stroke="#566573"/>"##,
                f.x(k1),
                f.y(k2)
            );
        }
    }
    // Walls: label, position, vertical?, arrow direction.
    let half = CELL / 2;
    let walls = [
        ("L1+", f.x(b) + half, true, -1),
        ("L1-", f.x(-a - 1) - half, true, 1),
        ("L2+", f.y(b + 1) - half, false, -1),
        ("L2-", f.y(-a) + half, false, 1),
    ];
    for (i, (name, pos, vertical, dir)) in walls.into_iter().enumerate() {
        let along = MARGIN + CELL + (i as i64) * CELL;
        if vertical {
            let _ = writeln!(out, r##"<line x1="{pos}" y1="{y0}" x2="{pos}" y2="{y1}" stroke="#c0392b" stroke-width="1.5"/>"##);
            let _ = writeln!(out, r##"<text x="{}" y="{}" font-size="12" font-family="sans-serif" fill="#c0392b">{name}</text>"##, pos + 3, if dir < 0 { y1 - 4 } else { y0 + 14 });
            arrow(&mut out, pos, along, dir, 0);
        } else {
            let _ = writeln!(out, r##"<line x1="{x0}" y1="{pos}" x2="{x1}" y2="{pos}" stroke="#c0392b" stroke-width="1.5"/>"##);
            let _ = writeln!(out, r##"<text x="{}" y="{}" font-size="12" font-family="sans-serif" fill="#c0392b">{name}</text>"##, if dir < 0 { x1 + 4 } else { x0 - 30 }, pos - 3);
            // Arrow y grows downward, so "toward +k2" is dy = -1.
            arrow(&mut out, x1 - along + MARGIN, pos, 0, -dir);
        }
    }
    // Legend.
    let lx = 2 * MARGIN + f.side();
    let _ = writeln!(
        out,
        r#"<text x="{lx}" y="{}" font-size="13" font-family="sans-serif">alpha={}, beta={}</text>"#,
        MARGIN,
        r.canonical_params.alpha,
        r.canonical_params.beta
    );
    for (i, m) in r.submodules.iter().enumerate() {
        let y = MARGIN + 24 * (i as i64 + 1);
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="6" fill="{}" stroke="#566573"/>"##, lx + 6, y - 4, PALETTE[i % PALETTE.len()]);
        let _ = writeln!(out, r#"<text x="{}" y="{y}" font-size="12" font-family="sans-serif">{}</text>"#, lx + 18, escape(&m.to_string()));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
