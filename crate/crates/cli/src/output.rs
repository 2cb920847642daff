//! DOT emission and small formatting helpers. Output is deterministic:
//! nodes are grouped by rank and sorted, edges are sorted.

use coxshell::coxeter::GroupElement;

/// Undirected Hasse diagram in Graphviz syntax. `names` and `ranks` are
/// parallel to the element indices appearing in `covers`.
pub fn hasse_dot(names: &[String], ranks: &[usize], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("graph {\n  rankdir=BT;\n  node [shape=none];\n");
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let min_rank = ranks.iter().copied().min().unwrap_or(0);
    for level in min_rank..=max_rank {
        let mut row: Vec<&String> = names
            .iter()
            .zip(ranks)
            .filter(|(_, &r)| r == level)
            .map(|(n, _)| n)
            .collect();
        if row.is_empty() {
            continue;
        }
        row.sort();
        out.push_str("  { rank=same;");
        for name in row {
            out.push_str(&format!(" \"{name}\";"));
        }
        out.push_str(" }\n");
    }
    let mut edges: Vec<(&String, &String)> = covers
        .iter()
        .map(|&(i, j)| (&names[i], &names[j]))
        .collect();
    edges.sort();
    for (a, b) in edges {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Display label for an element: one-line notation in type A, the canonical
/// word otherwise.
pub fn element_label(w: &GroupElement) -> String {
    match w.one_line() {
        Ok(line) => line.iter().map(|d| d.to_string()).collect(),
        Err(_) => w.to_string(),
    }
}

/// Writes DOT text to the given path, or to standard output when no path
/// was requested.
pub fn emit_dot(dot: &str, path: Option<&std::path::Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, dot)?;
            Ok(())
        }
        None => {
            print!("{dot}");
            Ok(())
        }
    }
}
