//! Lattice-path rendering for Christoffel words.

use std::fmt::Write;

use fibword::words::LatticePath;

const UNIT: u64 = 40;
const MARGIN: u64 = 20;

/// SVG drawing of the unit grid spanned by the path, the straight segment
/// from the origin to the path's endpoint, and the path itself. `n` is the
/// Christoffel index, recorded in the title.
pub fn emit_svg(path: &LatticePath, n: usize) -> String {
    let (w, h) = path.end();
    let width = w * UNIT + 2 * MARGIN;
    let height = h * UNIT + 2 * MARGIN;
    let px = |x: u64| MARGIN + x * UNIT;
    let py = |y: u64| MARGIN + (h - y) * UNIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>Christoffel path n={n} to ({w},{h})</title>");
    let _ = writeln!(
        out,
        r##"  <g id="grid" stroke="#cccccc" stroke-width="1">"##
    );
    for x in 0..=w {
        let _ = writeln!(
            out,
            r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(0),
            py(h)
        );
    }
    for y in 0..=h {
        let _ = writeln!(
            out,
            r#"    <line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            py(y),
            px(0),
            px(w)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(
        out,
        r##"  <line id="segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d62728" stroke-width="2"/>"##,
        px(0),
        py(0),
        px(w),
        py(h)
    );
    let mut d = format!("M {} {}", px(0), py(0));
    for pair in path.points().windows(2) {
        if pair[1].0 > pair[0].0 {
            let _ = write!(d, " h {UNIT}");
        } else {
            let _ = write!(d, " v -{UNIT}");
        }
    }
    let _ = writeln!(
        out,
        r##"  <path id="steps" d="{d}" fill="none" stroke="#1f77b4" stroke-width="3"/>"##
    );
    out.push_str("</svg>\n");
    out
}

/// Text drawing, top row first. Each lattice point `(x, y)` owns one cell;
/// a right step leaving it is drawn `_`, an up step `|`. Empty cells of the
/// bounding box crossed by the segment are drawn `/`.
pub fn emit_ascii(path: &LatticePath) -> String {
    let (w, h) = path.end();
    let (cols, rows) = (w as usize + 1, h as usize + 1);
    let mut grid = vec![vec![' '; cols]; rows];
    for pair in path.points().windows(2) {
        let (x, y) = pair[0];
        grid[y as usize][x as usize] = if pair[1].0 > x { '_' } else { '|' };
    }
    for y in 0..h {
        for x in 0..w {
            let cell = &mut grid[y as usize][x as usize];
            if *cell == ' ' && x * h < (y + 1) * w && (x + 1) * h > y * w {
                *cell = '/';
            }
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
