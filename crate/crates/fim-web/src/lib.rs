//! Browser bindings for the single-page demo. Each exported function takes
//! strings, does the work in the core crate, and returns a JSON envelope:
//! `{"ok": true, ...}` on success, `{"ok": false, "error": "..."}` on bad
//! input. The inner functions are plain Rust and unit-tested natively.

mod svg;

use fim::cayley::parse_edge;
use fim::homology::{act_word, max_weight, HomologyVector};
use fim::monogenic::{eval_word, normal_form, parse_word, word_string};
use wasm_bindgen::prelude::wasm_bindgen;

/// Munn-tree pictures stay readable up to this many vertices.
const MAX_MUNN_VERTICES: i64 = 60;
/// Ball drawings grow quadratically; radius 6 is already 140 vertices.
const MAX_BALL_RADIUS: i64 = 6;

fn err(message: impl std::fmt::Display) -> String {
    serde_json::json!({"ok": false, "error": message.to_string()}).to_string()
}

fn word_report_impl(word: &str) -> String {
    let letters = match parse_word(word) {
        Ok(letters) => letters,
        Err(e) => return err(e),
    };
    let m = eval_word(&letters);
    let nf = normal_form(m);
    let munn_svg = if m.size() < MAX_MUNN_VERTICES {
        serde_json::Value::String(svg::munn_line_svg(m))
    } else {
        serde_json::Value::Null
    };
    serde_json::json!({
        "ok": true,
        "word": word_string(&letters),
        "normal_form": nf.to_string(),
        "interval": m,
        "idempotent": m.t() == 0,
        "munn_svg": munn_svg,
    })
    .to_string()
}

fn cayley_report_impl(size: i64) -> String {
    if !(0..=MAX_BALL_RADIUS).contains(&size) {
        return err(format!("size must be between 0 and {MAX_BALL_RADIUS}"));
    }
    let edges = fim::cayley::ball_edges(size);
    let counts = |class: fim::cayley::EdgeClass| edges.iter().filter(|(_, c)| *c == class).count();
    serde_json::json!({
        "ok": true,
        "size": size,
        "vertices": fim::monogenic::enumerate_ball(size).len(),
        "edges": edges.len(),
        "tree": counts(fim::cayley::EdgeClass::Tree),
        "strong": counts(fim::cayley::EdgeClass::Strong),
        "transition": counts(fim::cayley::EdgeClass::Transition),
        "svg": svg::ball_svg(size),
    })
    .to_string()
}

fn act_report_impl(edge: &str, by: &str) -> String {
    let e = match parse_edge(edge) {
        Ok(e) => e,
        Err(e) => return err(e),
    };
    let basis = match HomologyVector::unit(e) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let word = match parse_word(by) {
        Ok(w) => w,
        Err(e) => return err(e),
    };
    let result = act_word(&word, &basis);
    serde_json::json!({
        "ok": true,
        "edge": e.to_string(),
        "by": word_string(&word),
        "vector": result.to_json(),
        "display": result.to_string(),
        "max_weight": max_weight(&result),
    })
    .to_string()
}

/// Normal form, interval, and Munn-tree picture for a word over {x, y}.
#[wasm_bindgen]
pub fn word_report(word: &str) -> String {
    word_report_impl(word)
}

/// Classified edge census and layered drawing of a Cayley-graph ball.
#[wasm_bindgen]
pub fn cayley_report(size: u32) -> String {
    cayley_report_impl(i64::from(size))
}

/// Decomposition of a word acting on a homology basis element.
#[wasm_bindgen]
pub fn act_report(edge: &str, by: &str) -> String {
    act_report_impl(edge, by)
}
