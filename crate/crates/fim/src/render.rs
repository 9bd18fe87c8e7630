//! Deterministic text renderings: ASCII and DOT for Munn trees, ASCII,
//! DOT, and JSON edge lists for Cayley-graph balls. Every function here is
//! pure and iterates in canonical order, so output bytes are stable.

use crate::cayley::{ball_edges, EdgeClass, EdgeRef};
use crate::homology::weight;
use crate::monogenic::{enumerate_ball, normal_form};
use crate::munn::MunnTree;
use crate::words::ReducedWord;
use std::fmt::Write;

fn node_id(w: &ReducedWord) -> String {
    if w.is_identity() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

/// Signed distance from the root for a vertex of a one-generator tree,
/// where every letter is the same generator or its inverse.
fn line_position(w: &ReducedWord) -> i64 {
    match w.letters().first() {
        None => 0,
        Some(l) if l.inv => -(w.len() as i64),
        Some(_) => w.len() as i64,
    }
}

/// ASCII picture of a Munn tree. One-generator trees are paths and render
/// as a labelled horizontal line: the in-vertex sits at label 0 and the
/// out-vertex is starred (a `*` at label 0 means in = out). Larger
/// alphabets render as an indented tree rooted at the in-vertex `1`.
pub fn munn_ascii(t: &MunnTree) -> String {
    if t.alphabet().letters().len() == 1 {
        let positions: Vec<i64> = t.vertices().map(line_position).collect();
        let lo = *positions.iter().min().expect("tree is never empty");
        let hi = *positions.iter().max().expect("tree is never empty");
        let out = line_position(t.out());
        let mut labels = String::new();
        let mut nodes = String::new();
        for p in lo..=hi {
            write!(labels, "{p:>4}").unwrap();
            if p > lo {
                nodes.push_str("---");
            } else {
                nodes.push_str("   ");
            }
            nodes.push(if p == out { '*' } else { 'o' });
        }
        return format!("{labels}\n{nodes}\n");
    }

    // Vertex sets are prefix-closed, so walking children by length works.
    let mut out = String::new();
    let vertices: Vec<&ReducedWord> = t.vertices().collect();
    for v in &vertices {
        let indent = "  ".repeat(v.len());
        let star = if *v == t.out() { " *" } else { "" };
        writeln!(out, "{indent}{}{star}", node_id(v)).unwrap();
    }
    out
}

/// DOT digraph of a Munn tree. Arcs point in the positive generator
/// direction and carry the generator as label; the out-vertex is filled
/// black as in the usual pictures. Node order follows the canonical
/// vertex order, so output is stable.
pub fn munn_dot(t: &MunnTree) -> String {
    let mut dot = String::from("digraph munn {\n  rankdir=LR;\n");
    for v in t.vertices() {
        let style = if v == t.out() {
            ", style=filled, fillcolor=black, fontcolor=white"
        } else {
            ""
        };
        writeln!(dot, "  \"{}\" [label=\"{}\"{style}];", node_id(v), node_id(v)).unwrap();
    }
    for v in t.vertices() {
        let Some(last) = v.letters().last() else {
            continue;
        };
        let parent = v.parent().expect("non-root vertex has a parent");
        let (from, to) = if last.inv {
            (node_id(v), node_id(&parent))
        } else {
            (node_id(&parent), node_id(v))
        };
        writeln!(dot, "  \"{from}\" -> \"{to}\" [label=\"{}\"];", last.gen).unwrap();
    }
    dot.push_str("}\n");
    dot
}

fn class_name(c: EdgeClass) -> &'static str {
    match c {
        EdgeClass::Tree => "tree",
        EdgeClass::Strong => "strong",
        EdgeClass::Transition => "transition",
    }
}

fn class_counts(edges: &[(EdgeRef, EdgeClass)]) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for (_, c) in edges {
        match c {
            EdgeClass::Tree => counts.0 += 1,
            EdgeClass::Strong => counts.1 += 1,
            EdgeClass::Transition => counts.2 += 1,
        }
    }
    counts
}

/// ASCII edge table of the ball of radius `n`: a counting header, then one
/// aligned row per edge in canonical order.
pub fn cayley_ascii(n: i64) -> String {
    let edges = ball_edges(n);
    let (tree, strong, transition) = class_counts(&edges);
    let mut out = format!(
        "ball N={n}: {} vertices, {} edges ({tree} tree, {strong} strong, {transition} transition)\n",
        enumerate_ball(n).len(),
        edges.len(),
    );
    let spec_width = edges
        .iter()
        .map(|(e, _)| e.to_string().len())
        .max()
        .unwrap_or(0);
    for (e, c) in &edges {
        let w = match weight(e) {
            Ok(w) => format!("w={w}"),
            Err(_) => String::new(),
        };
        writeln!(
            out,
            "{:<spec_width$}  {:<10}  {w:<5} -> {}",
            e.to_string(),
            class_name(*c),
            normal_form(e.target()),
        )
        .unwrap();
    }
    out
}

/// DOT digraph of the ball of radius `n`: tree edges solid, strong edges
/// dashed, transition edges bold with their weight in the label. Node ids
/// are the exponent-syntax normal forms.
pub fn cayley_dot(n: i64) -> String {
    let mut dot = String::from("digraph cayley {\n");
    for m in enumerate_ball(n) {
        writeln!(dot, "  \"{}\";", normal_form(m)).unwrap();
    }
    for (e, c) in ball_edges(n) {
        let attrs = match c {
            EdgeClass::Tree => format!("label=\"{}\"", e.gen),
            EdgeClass::Strong => format!("label=\"{}\", style=dashed", e.gen),
            EdgeClass::Transition => format!(
                "label=\"{}, w={}\", style=bold",
                e.gen,
                weight(&e).expect("transition edges have a weight"),
            ),
        };
        writeln!(
            dot,
            "  \"{}\" -> \"{}\" [{attrs}];",
            normal_form(e.source),
            normal_form(e.target()),
        )
        .unwrap();
    }
    dot.push_str("}\n");
    dot
}

/// JSON edge list of the ball of radius `n`. Each entry carries the source
/// normal form, the generator, the class, and for non-tree edges the
/// weight (`0` for strong edges).
pub fn cayley_json(n: i64) -> serde_json::Value {
    serde_json::Value::Array(
        ball_edges(n)
            .into_iter()
            .map(|(e, c)| {
                let mut entry = serde_json::json!({
                    "source": normal_form(e.source).to_string(),
                    "gen": e.gen.to_string(),
                    "class": class_name(c),
                });
                if let Ok(w) = weight(&e) {
                    entry["weight"] = serde_json::json!(w);
                }
                entry
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::{parse_word, to_gen_word};
    use crate::munn::munn_tree;
    use crate::words::{Alphabet, GenWord};

    fn monogenic_tree(word: &str) -> MunnTree {
        munn_tree(&to_gen_word(&parse_word(word).unwrap()))
    }

    fn general_tree(word: &str, alphabet: &str) -> MunnTree {
        let alphabet = Alphabet::new(alphabet.chars()).unwrap();
        munn_tree(&GenWord::parse(word, &alphabet).unwrap())
    }

    #[test]
    fn munn_line_for_a_path_word() {
        assert_eq!(
            munn_ascii(&monogenic_tree("x^5 y^3")),
            "   0   1   2   3   4   5\n   o---o---*---o---o---o\n"
        );
        assert_eq!(munn_ascii(&monogenic_tree("")), "   0\n   *\n");
        assert_eq!(munn_ascii(&monogenic_tree("y")), "  -1   0\n   *---o\n");
    }

    #[test]
    fn munn_listing_for_a_branching_word() {
        assert_eq!(munn_ascii(&general_tree("abB", "ab")), "1\n  a *\n    ab\n");
    }

    #[test]
    fn munn_dot_marks_the_out_vertex() {
        assert_eq!(
            munn_dot(&general_tree("aab", "ab")),
            "digraph munn {\n\
             \x20 rankdir=LR;\n\
             \x20 \"1\" [label=\"1\"];\n\
             \x20 \"a\" [label=\"a\"];\n\
             \x20 \"aa\" [label=\"aa\"];\n\
             \x20 \"aab\" [label=\"aab\", style=filled, fillcolor=black, fontcolor=white];\n\
             \x20 \"1\" -> \"a\" [label=\"a\"];\n\
             \x20 \"a\" -> \"aa\" [label=\"a\"];\n\
             \x20 \"aa\" -> \"aab\" [label=\"b\"];\n\
             }\n"
        );
    }

    #[test]
    fn munn_dot_points_arcs_positively() {
        // B ends with an inverse letter, so the arc runs back to the root.
        let dot = munn_dot(&general_tree("Ba", "ab"));
        assert!(dot.contains("\"B\" -> \"1\" [label=\"b\"];"));
        assert!(dot.contains("\"B\" -> \"Ba\" [label=\"a\"];"));
    }

    #[test]
    fn cayley_ascii_headers() {
        let one = cayley_ascii(1);
        assert!(one.starts_with(
            "ball N=1: 5 vertices, 6 edges (4 tree, 2 strong, 0 transition)\n"
        ));
        let two = cayley_ascii(2);
        assert!(two.starts_with(
            "ball N=2: 14 vertices, 22 edges (13 tree, 8 strong, 1 transition)\n"
        ));
        assert_eq!(two.lines().count(), 23);
    }

    #[test]
    fn cayley_json_schema() {
        let entries = cayley_json(2);
        let entries = entries.as_array().unwrap();
        assert_eq!(entries.len(), 22);
        let transition: Vec<_> = entries
            .iter()
            .filter(|e| e["class"] == "transition")
            .collect();
        assert_eq!(
            transition,
            vec![&serde_json::json!({
                "source": "y^1 x^1", "gen": "x", "class": "transition", "weight": 1
            })]
        );
        for e in entries {
            assert_eq!(e["class"] == "tree", e.get("weight").is_none());
        }
    }

    #[test]
    fn cayley_dot_styles_by_class() {
        let dot = cayley_dot(2);
        assert!(dot.starts_with("digraph cayley {\n"));
        assert_eq!(dot.matches("style=bold").count(), 1);
        assert!(dot.contains("\"y^1 x^1\" -> \"x^1 y^2 x^2\" [label=\"x, w=1\", style=bold];"));
        assert_eq!(dot.matches("style=dashed").count(), 8);
    }
}
