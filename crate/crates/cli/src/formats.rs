//! File and wire formats: walk text files, pattern files (walk text or
//! segment JSON), rectangulation JSON, and the table renderings shared by
//! the counting subcommands.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use rectwalk_core::geometry::{GeomPattern, Segment, SegmentConfig};
use rectwalk_core::paving::{Rect, Rectangulation};
use rectwalk_core::pattern::FactorPattern;
use rectwalk_core::walk::Walk;

/// Parses walk text, tolerating surrounding whitespace and a trailing
/// newline. The empty string is the empty walk.
pub fn parse_walk(text: &str) -> Result<Walk> {
    let trimmed = text.trim();
    Walk::parse(trimmed).map_err(|e| anyhow::anyhow!("invalid walk text: {e}"))
}

pub fn read_walk_file(path: &Path) -> Result<Walk> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read walk file {}", path.display()))?;
    parse_walk(&text).with_context(|| format!("in walk file {}", path.display()))
}

/// A pattern as a subcommand consumes it: a walk factor or a geometric
/// segment configuration.
pub enum PatternSource {
    Factor(FactorPattern),
    Geometric(GeomPattern),
}

fn factor_from_text(text: &str) -> Result<FactorPattern> {
    let walk = parse_walk(text)?;
    FactorPattern::new(walk).map_err(|e| anyhow::anyhow!("invalid factor pattern: {e}"))
}

/// Reads a pattern file. Content starting with `{` is segment JSON and
/// yields a geometric pattern; anything else is walk text and yields a
/// factor pattern.
pub fn read_pattern_file(path: &Path) -> Result<PatternSource> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read pattern file {}", path.display()))?;
    let source = if text.trim_start().starts_with('{') {
        PatternSource::Geometric(parse_pattern_json(&text)?)
    } else {
        PatternSource::Factor(factor_from_text(&text)?)
    };
    Ok(source)
}

#[derive(Serialize, Deserialize)]
enum DirJson {
    #[serde(rename = "h")]
    H,
    #[serde(rename = "v")]
    V,
}

#[derive(Serialize, Deserialize)]
struct SegmentJson {
    id: usize,
    dir: DirJson,
    axis: i64,
    span: [i64; 2],
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    segments: Vec<SegmentJson>,
}

pub fn parse_pattern_json(text: &str) -> Result<GeomPattern> {
    let parsed: PatternJson = serde_json::from_str(text).context("invalid pattern JSON")?;
    let segments = parsed
        .segments
        .iter()
        .map(|s| match s.dir {
            DirJson::H => Segment::horizontal(s.id, s.axis, s.span[0], s.span[1]),
            DirJson::V => Segment::vertical(s.id, s.axis, s.span[0], s.span[1]),
        })
        .collect();
    let config = SegmentConfig::new(segments)
        .map_err(|e| anyhow::anyhow!("invalid segment configuration: {e}"))?;
    Ok(GeomPattern::new(config))
}

#[cfg(test)]
fn pattern_json(p: &GeomPattern) -> String {
    use rectwalk_core::geometry::Orientation;
    let segments = p
        .config()
        .segments()
        .iter()
        .map(|s| SegmentJson {
            id: s.id,
            dir: match s.orientation {
                Orientation::Horizontal => DirJson::H,
                Orientation::Vertical => DirJson::V,
            },
            axis: s.axis,
            span: [s.lo, s.hi],
        })
        .collect();
    serde_json::to_string_pretty(&PatternJson { segments }).expect("pattern serializes") + "\n"
}

#[derive(Serialize, Deserialize)]
struct RectJson {
    id: usize,
    x: [i64; 2],
    y: [i64; 2],
}

#[derive(Serialize, Deserialize)]
struct RectangulationJson {
    bounds: [i64; 2],
    rects: Vec<RectJson>,
}

pub fn rectangulation_json(r: &Rectangulation) -> String {
    let rects = r
        .rects()
        .iter()
        .map(|t| RectJson { id: t.id, x: [t.x_lo, t.x_hi], y: [t.y_lo, t.y_hi] })
        .collect();
    let doc = RectangulationJson { bounds: [r.width(), r.height()], rects };
    serde_json::to_string_pretty(&doc).expect("rectangulation serializes") + "\n"
}

/// Reads rectangulation JSON. Coordinates are compacted on construction, so
/// the stated bounds are informational and only checked for plausibility.
pub fn read_rectangulation_file(path: &Path) -> Result<Rectangulation> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read rectangulation file {}", path.display()))?;
    let parsed: RectangulationJson =
        serde_json::from_str(&text).context("invalid rectangulation JSON")?;
    let rects: Vec<Rect> = parsed
        .rects
        .iter()
        .map(|t| Rect { id: t.id, x_lo: t.x[0], x_hi: t.x[1], y_lo: t.y[0], y_hi: t.y[1] })
        .collect();
    let r = Rectangulation::new(rects).map_err(|e| anyhow::anyhow!("invalid rectangulation: {e}"))?;
    if parsed.bounds[0] < r.width() || parsed.bounds[1] < r.height() {
        bail!(
            "stated bounds {}x{} are smaller than the rectangles they hold",
            parsed.bounds[0],
            parsed.bounds[1]
        );
    }
    Ok(r)
}

/// One line of a count table as the counting subcommands print it.
pub struct TableRow {
    pub n: usize,
    pub value: BigUint,
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,value\n");
    for row in rows {
        out.push_str(&format!("{},{}\n", row.n, row.value));
    }
    out
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&format!("{}\t{}\n", row.n, row.value));
    }
    out
}

pub fn table_json(rows: &[TableRow]) -> String {
    #[derive(Serialize)]
    struct RowJson {
        n: usize,
        value: String,
    }
    #[derive(Serialize)]
    struct TableDoc {
        values: Vec<RowJson>,
    }
    let doc = TableDoc {
        values: rows
            .iter()
            .map(|r| RowJson { n: r.n, value: r.value.to_string() })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
}
