use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Heap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Stacked-block drawing. Adjacent columns are offset by half a block, so a
/// block overlaps the neighbours it covers by half its width.
pub fn render(h: &Heap, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => ascii(h),
        RenderFormat::Svg => svg(h),
    }
}

fn ascii(h: &Heap) -> String {
    let n = h.rank().get();
    let digits = n.to_string().len();
    let width = digits + 2;
    let step = width.div_ceil(2);
    let cols = step * (n - 1) + width;
    let mut out = String::new();
    for level in (1..=h.height()).rev() {
        let mut row = vec![' '; cols];
        for b in h.blocks().iter().filter(|b| b.level == level) {
            let x = step * (b.gen - 1);
            let label = format!("[{:>digits$}]", b.gen);
            for (k, c) in label.chars().enumerate() {
                row[x + k] = c;
            }
        }
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let mut axis = vec![' '; cols];
    for g in 1..=n {
        let label = format!("{g:>digits$}");
        for (k, c) in label.chars().enumerate() {
            axis[step * (g - 1) + 1 + k] = c;
        }
    }
    out.push_str(axis.iter().collect::<String>().trim_end());
    out.push('\n');
    out
}

const BLOCK_W: usize = 40;
const BLOCK_H: usize = 24;
const MARGIN: usize = 10;

fn svg(h: &Heap) -> String {
    let n = h.rank().get();
    let height = h.height();
    let step = BLOCK_W / 2;
    let w = 2 * MARGIN + step * (n - 1) + BLOCK_W;
    let total_h = 2 * MARGIN + BLOCK_H * height + 24;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{total_h}" viewBox="0 0 {w} {total_h}">"#
    );
    let _ = writeln!(s, r#"<g font-family="serif" font-size="14" text-anchor="middle">"#);
    let mut blocks: Vec<_> = h.blocks().iter().collect();
    blocks.sort_by(|a, b| b.level.cmp(&a.level).then(a.gen.cmp(&b.gen)));
    for b in blocks {
        let x = MARGIN + step * (b.gen - 1);
        let y = MARGIN + BLOCK_H * (height - b.level);
        let _ = writeln!(
            s,
            r##"<rect x="{x}" y="{y}" width="{BLOCK_W}" height="{BLOCK_H}" fill="#ffffff" stroke="#000000"/>"##
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, x + BLOCK_W / 2, y + BLOCK_H / 2 + 5, b.gen);
    }
    let base = MARGIN + BLOCK_H * height + 18;
    for g in 1..=n {
        let x = MARGIN + step * (g - 1) + BLOCK_W / 2;
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{base}" font-size="11">s<tspan baseline-shift="sub">{g}</tspan></text>"#
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::build_heap;
    use crate::word::Word;

    fn heap(rank: usize, letters: &[usize]) -> Heap {
        build_heap(&Word::from_slice(rank, letters).unwrap()).unwrap()
    }

    #[test]
    fn single_block() {
        assert_eq!(render(&heap(1, &[1]), RenderFormat::Ascii), "[1]\n 1\n");
        let svg = render(&heap(1, &[1]), RenderFormat::Svg);
        assert_eq!(svg.matches("<rect").count(), 1);
    }

    #[test]
    fn fc_heap_shape() {
        let text = render(&heap(5, &[2, 3, 5, 4]), RenderFormat::Ascii);
        assert_eq!(text, "  [2]\n    [3] [5]\n      [4]\n 1 2 3 4 5\n");
    }

    #[test]
    fn worked_construction() {
        let h = heap(5, &[1, 2, 3, 1, 2, 4, 5]);
        let text = render(&h, RenderFormat::Ascii);
        assert_eq!(text.matches('[').count(), 7);
        let svg = render(&h, RenderFormat::Svg);
        assert_eq!(svg.matches("<rect").count(), 7);
        assert_eq!(svg, render(&h, RenderFormat::Svg));
    }

    #[test]
    fn wide_labels() {
        let h = heap(10, &[9, 10]);
        let text = render(&h, RenderFormat::Ascii);
        assert!(text.contains("[ 9]"));
        assert!(text.contains("[10]"));
    }
}
