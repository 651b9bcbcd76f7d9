//! SVG output. Vertices are the doubled-integer lattice points, multiplied by
//! `scale`, with the y axis flipped so that north points up.

use std::fmt::Write;

use foldbound::{GridPoint, LatticePath};

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    pub scale: i64,
    /// Rounded corners make the turning direction visible at touch points.
    pub round_joins: bool,
}

impl Default for SvgOptions {
    fn default() -> SvgOptions {
        SvgOptions {
            scale: 4,
            round_joins: false,
        }
    }
}

fn points(p: &LatticePath, scale: i64) -> String {
    let mut out = String::with_capacity(p.vertices.len() * 8);
    for (i, v) in p.vertices.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{},{}", v.x * scale, -v.y * scale).unwrap();
    }
    out
}

/// Draws the folding path in black and, if given, the left boundary in red
/// and the right boundary in blue.
pub fn render_svg(
    fold: &LatticePath,
    boundaries: Option<(&LatticePath, &LatticePath)>,
    opts: SvgOptions,
) -> String {
    let scale = opts.scale.max(1);
    let mut paths: Vec<(&LatticePath, &str)> = vec![(fold, "black")];
    if let Some((left, right)) = boundaries {
        paths.push((left, "red"));
        paths.push((right, "blue"));
    }

    let all = paths.iter().flat_map(|(p, _)| p.vertices.iter());
    let (mut lo, mut hi) = (
        GridPoint::new(i64::MAX, i64::MAX),
        GridPoint::new(i64::MIN, i64::MIN),
    );
    for v in all {
        lo = GridPoint::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = GridPoint::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    let margin = 2 * scale;
    let (x0, y0) = (lo.x * scale - margin, -hi.y * scale - margin);
    let width = (hi.x - lo.x) * scale + 2 * margin;
    let height = (hi.y - lo.y) * scale + 2 * margin;
    let join = if opts.round_joins { "round" } else { "miter" };
    let stroke = (scale as f64 / 4.0).max(0.5);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"{x0} {y0} {width} {height}\">"
    )
    .unwrap();
    for (p, colour) in paths {
        writeln!(
            out,
            "  <polyline fill=\"none\" stroke=\"{colour}\" stroke-width=\"{stroke}\" \
             stroke-linejoin=\"{join}\" stroke-linecap=\"round\" points=\"{}\"/>",
            points(p, scale)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use foldbound::geometry::render_fold;
    use foldbound::{FoldWord, Heading};

    fn fold(text: &str) -> LatticePath {
        render_fold(
            &text.parse::<FoldWord>().unwrap(),
            GridPoint::ORIGIN,
            Heading::East,
        )
    }

    #[test]
    fn single_edge() {
        let svg = render_svg(
            &fold("A"),
            None,
            SvgOptions {
                scale: 1,
                round_joins: false,
            },
        );
        assert!(svg.contains("points=\"0,0 2,0\""));
        assert!(svg.contains("viewBox=\"-2 -2 6 4\""));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }

    #[test]
    fn y_axis_points_up() {
        // "-" turns left, i.e. north, which is negative y in SVG.
        let svg = render_svg(&fold("A-B"), None, SvgOptions::default());
        assert!(svg.contains("points=\"0,0 8,0 8,-8\""));
    }

    #[test]
    fn round_joins_flag() {
        let opts = SvgOptions {
            round_joins: true,
            ..SvgOptions::default()
        };
        assert!(render_svg(&fold("A-B"), None, opts).contains("stroke-linejoin=\"round\""));
    }
}
