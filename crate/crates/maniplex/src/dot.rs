//! DOT export of the edge-colored flag graph.
//!
//! One node per flag, one undirected edge per color between each flag and
//! its image, semi-edges as self-loops, the base flag drawn with a double
//! border. Output is deterministic: nodes ascending, then edges grouped by
//! color with the lower endpoint first.

use std::fmt::Write as _;

use crate::error::Result;
use crate::premaniplex::Rooted;

pub fn export_dot(p: &Rooted) -> String {
    let mut out = String::from("graph premaniplex {\n");
    for f in 0..p.flag_count() {
        if f == p.base() {
            let _ = writeln!(out, "  {f} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {f};");
        }
    }
    for i in 0..p.rank() {
        for f in 0..p.flag_count() {
            let g = p.adjacent(f, i);
            if g == f {
                let _ = writeln!(out, "  {f} -- {f} [color={i}];");
            } else if g > f {
                let _ = writeln!(out, "  {f} -- {g} [color={i}];");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn write_dot(path: &std::path::Path, p: &Rooted) -> Result<()> {
    std::fs::write(path, export_dot(p))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{polygon, three_orbit_pair, two_orbit_stg};
    use crate::colors::ColorSet;
    use crate::mixing::mix;

    fn node_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count()
    }

    fn edge_lines(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains("--")).collect()
    }

    #[test]
    fn digon_has_four_nodes_and_four_edges() {
        let dot = export_dot(&polygon(2).unwrap());
        assert_eq!(node_count(&dot), 4);
        assert_eq!(edge_lines(&dot).len(), 4);
        assert!(dot.contains("[shape=doublecircle]"));
    }

    #[test]
    fn two_orbit_graph_has_parallel_edges_and_self_loops() {
        let colors = ColorSet::from_slice(&[1, 2]);
        let dot = export_dot(&two_orbit_stg(4, colors).unwrap());
        assert_eq!(node_count(&dot), 2);
        let edges = edge_lines(&dot);
        let loops = edges.iter().filter(|l| l.contains("0 -- 0") || l.contains("1 -- 1")).count();
        assert_eq!(loops, 2 * colors.len());
        assert_eq!(edges.len() - loops, 4 - colors.len());
    }

    #[test]
    fn export_is_deterministic_and_color_labeled() {
        let (a, b) = three_orbit_pair();
        let mixed = mix(&a, &b).unwrap().mix;
        let dot = export_dot(&mixed);
        assert_eq!(dot, export_dot(&mixed));
        assert_eq!(node_count(&dot), 9);
        for i in 0..mixed.rank() {
            assert!(dot.contains(&format!("[color={i}]")));
        }
    }
}
