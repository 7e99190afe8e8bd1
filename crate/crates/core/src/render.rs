//! Text renderings of a diagram.
//!
//! All formats share one layout: row 0 (the longest) sits at the bottom and
//! every row starts at the left edge, so figures align on their bottom-left
//! corners. ASCII therefore prints the shortest row first.

use std::fmt::{self, Write};
use std::str::FromStr;

use crate::diagram::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Ascii,
    Svg,
    Tikz,
    Json,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Ascii, Format::Svg, Format::Tikz, Format::Json];

    pub fn name(self) -> &'static str {
        match self {
            Format::Ascii => "ascii",
            Format::Svg => "svg",
            Format::Tikz => "tikz",
            Format::Json => "json",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown format {s:?} (expected ascii, svg, tikz or json)"
                ))
            })
    }
}

/// Output format and cell size. SVG cells are `cell_size` pixels; TikZ cells
/// are `cell_size` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    pub format: Format,
    cell_size: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            format: Format::Ascii,
            cell_size: 10.0,
        }
    }
}

impl RenderSpec {
    pub fn new(format: Format) -> Self {
        RenderSpec {
            format,
            ..Default::default()
        }
    }

    pub fn with_cell_size(mut self, cell_size: f64) -> Result<Self> {
        if !(cell_size.is_finite() && cell_size > 0.0) {
            return Err(Error::Domain(format!(
                "cell size must be positive, got {cell_size}"
            )));
        }
        self.cell_size = cell_size;
        Ok(self)
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }
}

pub fn render(d: &Partition, spec: &RenderSpec) -> String {
    match spec.format {
        Format::Ascii => ascii(d),
        Format::Svg => svg(d, spec.cell_size),
        Format::Tikz => tikz(d, spec.cell_size),
        Format::Json => {
            let mut s =
                serde_json::to_string(&d.to_json_value()).expect("diagram JSON is infallible");
            s.push('\n');
            s
        }
    }
}

/// One line of `#` per row, longest row last. The empty diagram renders as "".
pub fn ascii(d: &Partition) -> String {
    let mut out = String::with_capacity((d.size() + d.height()) as usize);
    for &r in d.rows().iter().rev() {
        out.extend(std::iter::repeat_n('#', r as usize));
        out.push('\n');
    }
    out
}

fn svg(d: &Partition, cell: f64) -> String {
    let width = d.width() as f64 * cell;
    let height = d.height() as f64 * cell;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    let top = d.height();
    for (i, &r) in d.rows().iter().enumerate() {
        let y = (top - 1 - i as u64) as f64 * cell;
        for col in 0..r {
            let x = col as f64 * cell;
            writeln!(
                out,
                r#"  <rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="none" stroke="black"/>"#
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn tikz(d: &Partition, cell: f64) -> String {
    let mut out = String::new();
    writeln!(out, r"\begin{{tikzpicture}}[x={cell}pt,y={cell}pt]").unwrap();
    for (i, &r) in d.rows().iter().enumerate() {
        for col in 0..r {
            writeln!(out, r"  \draw ({col},{i}) rectangle +(1,1);").unwrap();
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u64]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn ascii_examples() {
        assert_eq!(ascii(&p(&[3, 1])), "#\n###\n");
        assert_eq!(ascii(&Partition::empty()), "");
        assert_eq!(ascii(&p(&[1, 1, 1])), "#\n#\n#\n");
    }

    #[test]
    fn json_matches_diagram_form() {
        let s = render(&Partition::empty(), &RenderSpec::new(Format::Json));
        assert_eq!(s, "{\"n\":1,\"rows\":[]}\n");
    }

    #[test]
    fn svg_is_bottom_left_aligned() {
        let s = render(&p(&[3, 1]), &RenderSpec::new(Format::Svg));
        assert!(s.starts_with(
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="30" height="20""#
        ));
        // Longest row on the bottom line of cells, the single square above it.
        assert!(s.contains(r#"<rect x="20" y="10" "#));
        assert!(s.contains(r#"<rect x="0" y="0" "#));
        assert!(!s.contains(r#"<rect x="10" y="0" "#));
        assert_eq!(s.matches("<rect").count(), 4);
    }

    #[test]
    fn tikz_matches_table_layout() {
        // F(10) as drawn in the table: three squares along y = 0, one above the first.
        let s = render(&p(&[3, 1]), &RenderSpec::new(Format::Tikz));
        let expected = "\\begin{tikzpicture}[x=10pt,y=10pt]\n  \\draw (0,0) rectangle +(1,1);\n  \\draw (1,0) rectangle +(1,1);\n  \\draw (2,0) rectangle +(1,1);\n  \\draw (0,1) rectangle +(1,1);\n\\end{tikzpicture}\n";
        assert_eq!(s, expected);
    }

    #[test]
    fn empty_svg_and_tikz() {
        let s = render(&Partition::empty(), &RenderSpec::new(Format::Svg));
        assert_eq!(s.matches("<rect").count(), 0);
        assert!(s.contains(r#"width="0" height="0""#));
        let t = render(&Partition::empty(), &RenderSpec::new(Format::Tikz));
        assert_eq!(t.matches("rectangle").count(), 0);
    }

    #[test]
    fn cell_size_validation() {
        assert!(RenderSpec::new(Format::Svg).with_cell_size(0.0).is_err());
        assert!(RenderSpec::new(Format::Svg).with_cell_size(-1.0).is_err());
        assert!(RenderSpec::new(Format::Svg)
            .with_cell_size(f64::NAN)
            .is_err());
        let spec = RenderSpec::new(Format::Svg).with_cell_size(2.5).unwrap();
        assert!(render(&p(&[1]), &spec).contains(r#"width="2.5""#));
    }

    #[test]
    fn format_names_parse() {
        for f in Format::ALL {
            assert_eq!(f.name().parse::<Format>().unwrap(), f);
        }
        assert_eq!("SVG".parse::<Format>().unwrap(), Format::Svg);
        assert!("png".parse::<Format>().is_err());
    }
}
