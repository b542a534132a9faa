//! Plain-text and SVG pictures of a rectangulation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::Rectangulation;

/// Draws the compacted grid with `+`, `-`, `|` and spaces. Every unit cell is
/// three characters wide and one high; `+` marks every point where a
/// horizontal and a vertical stroke meet.
pub fn render_ascii(r: &Rectangulation) -> String {
    let w = r.width() as usize;
    let h = r.height() as usize;
    let cols = 4 * w + 1;
    let rows = 2 * h + 1;
    let mut horiz = alloc::vec![false; rows * cols];
    let mut vert = alloc::vec![false; rows * cols];

    // canvas row 0 is the top of the box
    let row_of = |y: i64| 2 * (h - y as usize);
    let col_of = |x: i64| 4 * x as usize;

    for rect in r.rects() {
        for y in [rect.y_lo, rect.y_hi] {
            let row = row_of(y);
            for col in col_of(rect.x_lo)..=col_of(rect.x_hi) {
                horiz[row * cols + col] = true;
            }
        }
        for x in [rect.x_lo, rect.x_hi] {
            let col = col_of(x);
            for row in row_of(rect.y_hi)..=row_of(rect.y_lo) {
                vert[row * cols + col] = true;
            }
        }
    }

    let mut out = String::with_capacity(rows * (cols + 1));
    for row in 0..rows {
        for col in 0..cols {
            let i = row * cols + col;
            out.push(match (horiz[i], vert[i]) {
                (true, true) => '+',
                (true, false) => '-',
                (false, true) => '|',
                (false, false) => ' ',
            });
        }
        out.push('\n');
    }
    out
}

/// Emits a standalone SVG 1.1 document made of `rect` outlines and centred
/// `text` labels with the rectangle ids. Output bytes are deterministic.
pub fn render_svg(r: &Rectangulation) -> String {
    const CELL: i64 = 48;
    const MARGIN: i64 = 8;
    let w = r.width() * CELL;
    let h = r.height() * CELL;
    let total_w = w + 2 * MARGIN;
    let total_h = h + 2 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{total_w}\" height=\"{total_h}\" \
         viewBox=\"0 0 {total_w} {total_h}\">"
    );
    let mut labels: Vec<String> = Vec::with_capacity(r.rects().len());
    for rect in r.rects() {
        let x = MARGIN + rect.x_lo * CELL;
        // SVG y grows downward
        let y = MARGIN + h - rect.y_hi * CELL;
        let rw = (rect.x_hi - rect.x_lo) * CELL;
        let rh = (rect.y_hi - rect.y_lo) * CELL;
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{rw}\" height=\"{rh}\" \
             fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"
        );
        let cx = x + rw / 2;
        let cy = y + rh / 2 + 5;
        let mut label = String::new();
        let _ = writeln!(
            label,
            "  <text x=\"{cx}\" y=\"{cy}\" font-family=\"sans-serif\" \
             font-size=\"16\" text-anchor=\"middle\">{}</text>",
            rect.id
        );
        labels.push(label);
    }
    for label in labels {
        out.push_str(&label);
    }
    out.push_str("</svg>\n");
    out
}
