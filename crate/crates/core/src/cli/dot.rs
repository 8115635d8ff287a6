use std::fmt::Write;

use super::document::DecompositionDocument;

/// Colors for the first paths, in path-sorted order.
pub const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#1b9e77",
    "#d95f02", "#7570b3", "#e7298a", "#66a61e",
];

/// Color of path `index` out of `count`. Past the palette, hues are spread
/// evenly so colors stay distinct.
pub fn path_color(index: usize, count: usize) -> String {
    if index < PALETTE.len() {
        return PALETTE[index].to_string();
    }
    let extra = count - PALETTE.len();
    let hue = (index - PALETTE.len()) as f64 / extra as f64;
    format!("{hue:.4} 0.700 0.850")
}

/// One undirected graph; every path edge carries its path's color.
pub fn render(doc: &DecompositionDocument, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 1..=doc.n {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, p) in doc.paths.iter().enumerate() {
        let color = path_color(i, doc.paths.len());
        for w in p.windows(2) {
            writeln!(
                out,
                "  {} -- {} [color=\"{color}\", penwidth=2, path={}];",
                w[0],
                w[1],
                i + 1
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// One graph per path, named `<name>_P1`, `<name>_P2`, ….
pub fn render_split(doc: &DecompositionDocument, name: &str) -> String {
    let mut out = String::new();
    for (i, p) in doc.paths.iter().enumerate() {
        let color = path_color(i, doc.paths.len());
        writeln!(out, "graph {name}_P{} {{", i + 1).unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for w in p.windows(2) {
            writeln!(
                out,
                "  {} -- {} [color=\"{color}\", penwidth=2];",
                w[0], w[1]
            )
            .unwrap();
        }
        out.push_str("}\n");
    }
    out
}
