//! Balls of the right Cayley digraph of the monogenic monoid.
//!
//! Vertices are [`Interval`]s; each vertex has exactly two out-edges, one
//! per generator, with `target = right_mult(source, gen)`. Because the
//! normal-form words are prefix-closed they spell out a spanning tree rooted
//! at the identity, and every edge falls into exactly one of three classes:
//!
//! * **Tree**: the target's normal-form word is the source's plus the
//!   generator.
//! * **Strong**: a non-tree edge inside a strongly connected component.
//!   Components are the sets of elements sharing the underlying interval
//!   `(a, b)`, so these edges step backwards along a component.
//! * **Transition**: a non-tree edge leaving its component. These are the
//!   edges `x^n y^k x^k → x^(n+1) y^(k+1) x^(k+1)` (`0 <= n < k`) and carry
//!   weight `k`; they are the raw material of the homology filtration in
//!   [`crate::homology`].

use crate::error::Error;
use crate::monogenic::{
    enumerate_ball, eval_word, nf_parent, normal_form, right_mult, Gen, Interval, NormalForm,
};
use crate::report::{ReportBuilder, VerificationReport};
use serde::Serialize;
use std::fmt;

/// An edge of the Cayley digraph, identified by source and generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub source: Interval,
    pub gen: Gen,
}

impl EdgeRef {
    pub fn new(source: Interval, gen: Gen) -> Self {
        EdgeRef { source, gen }
    }

    pub fn target(&self) -> Interval {
        right_mult(self.source, self.gen)
    }
}

impl fmt::Display for EdgeRef {
    /// The `<normal form>:<generator>` spec syntax, e.g. `x^1 y^2 x^2:x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", normal_form(self.source), self.gen)
    }
}

/// Parses the `<normal form>:<generator>` edge syntax used by `Display`.
pub fn parse_edge(spec: &str) -> Result<EdgeRef, Error> {
    let (word_part, gen_part) = spec
        .rsplit_once(':')
        .ok_or_else(|| Error::BadEdgeSpec(spec.to_string()))?;
    let gen = match gen_part.trim() {
        "x" => Gen::X,
        "y" => Gen::Y,
        _ => return Err(Error::BadEdgeSpec(spec.to_string())),
    };
    let source = eval_word(&crate::monogenic::parse_word(word_part)?);
    Ok(EdgeRef::new(source, gen))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Tree,
    Strong,
    Transition,
}

/// Classifies by the normal-form patterns of the source.
pub fn classify_edge(e: &EdgeRef) -> EdgeClass {
    match (normal_form(e.source), e.gen) {
        // x^n --x--> x^(n+1)
        (NormalForm::TypeI { k: 0, .. }, Gen::X) => EdgeClass::Tree,
        // x^n y^k --x--> x^n y^(k-1) with 0 < k <= n
        (NormalForm::TypeI { .. }, Gen::X) => EdgeClass::Strong,
        // x^n y^k --y--> x^n y^(k+1), both normal-form shapes
        (NormalForm::TypeI { .. }, Gen::Y) => EdgeClass::Tree,
        (NormalForm::TypeII { j: 0, .. }, Gen::Y) => EdgeClass::Tree,
        // x^n y^k x^j --y--> x^n y^k x^(j-1) with 0 < j <= k
        (NormalForm::TypeII { .. }, Gen::Y) => EdgeClass::Strong,
        // x^n y^k x^k --x--> x^(n+1) y^(k+1) x^(k+1)
        (NormalForm::TypeII { k, j, .. }, Gen::X) if j == k => EdgeClass::Transition,
        // x^n y^k x^j --x--> x^n y^k x^(j+1) with j < k
        (NormalForm::TypeII { .. }, Gen::X) => EdgeClass::Tree,
    }
}

/// Strongly connected components forget the out-vertex: two elements are
/// mutually reachable exactly when they share the underlying interval.
pub fn scc_key(m: Interval) -> (i64, i64) {
    (m.a(), m.b())
}

/// Whether the edge leaves its strongly connected component. True for
/// transition edges and for the size-growing tree edges; the classification
/// keeps those apart, this predicate deliberately does not.
pub fn crosses_scc(e: &EdgeRef) -> bool {
    scc_key(e.source) != scc_key(e.target())
}

/// One step along an edge, forward or against its direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub edge: EdgeRef,
    pub forward: bool,
}

impl Step {
    pub fn forward(edge: EdgeRef) -> Self {
        Step { edge, forward: true }
    }

    pub fn backward(edge: EdgeRef) -> Self {
        Step { edge, forward: false }
    }

    pub fn from(&self) -> Interval {
        if self.forward { self.edge.source } else { self.edge.target() }
    }

    pub fn to(&self) -> Interval {
        if self.forward { self.edge.target() } else { self.edge.source }
    }
}

/// An edge path: consecutive steps chain end to start.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn empty() -> Self {
        Path::default()
    }

    pub fn try_new(steps: Vec<Step>) -> Result<Self, Error> {
        if steps.windows(2).any(|w| w[0].to() != w[1].from()) {
            return Err(Error::MalformedPath);
        }
        Ok(Path { steps })
    }

    /// For paths whose steps are known to chain by construction.
    pub(crate) fn from_steps(steps: Vec<Step>) -> Self {
        debug_assert!(steps.windows(2).all(|w| w[0].to() == w[1].from()));
        Path { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> Option<Interval> {
        self.steps.first().map(|s| s.from())
    }

    pub fn end(&self) -> Option<Interval> {
        self.steps.last().map(|s| s.to())
    }

    /// Empty paths count as closed.
    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn reversed(&self) -> Path {
        Path {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step { edge: s.edge, forward: !s.forward })
                .collect(),
        }
    }
}

/// The spanning-tree path from the identity to `m`, spelling out `m`'s
/// normal-form word. Every step is a forward tree edge.
pub fn tree_path(m: Interval) -> Path {
    let word = normal_form(m).word();
    let mut steps = Vec::with_capacity(word.len());
    let mut at = Interval::IDENTITY;
    for g in word {
        let edge = EdgeRef::new(at, g);
        at = edge.target();
        steps.push(Step::forward(edge));
    }
    Path::from_steps(steps)
}

/// The geodesic from `v` to `w` in the spanning tree: backwards from `v` to
/// the longest common prefix of the two normal-form words, then forwards
/// to `w`.
pub fn geodesic(v: Interval, w: Interval) -> Path {
    let pv = tree_path(v);
    let pw = tree_path(w);
    let shared = pv
        .steps()
        .iter()
        .zip(pw.steps())
        .take_while(|(s, t)| s == t)
        .count();
    let mut steps: Vec<Step> = pv.steps()[shared..]
        .iter()
        .rev()
        .map(|s| Step::backward(s.edge))
        .collect();
    steps.extend_from_slice(&pw.steps()[shared..]);
    Path::from_steps(steps)
}

/// All edges with both endpoints in the ball of radius `n`, classified, in
/// canonical order (source, then generator).
pub fn ball_edges(n: i64) -> Vec<(EdgeRef, EdgeClass)> {
    let mut out = Vec::new();
    for m in enumerate_ball(n) {
        for gen in Gen::BOTH {
            let e = EdgeRef::new(m, gen);
            if e.target().size() <= n {
                out.push((e, classify_edge(&e)));
            }
        }
    }
    out
}

/// Checks the pattern classification against representation-independent
/// oracles on the ball of radius `n`:
///
/// * tree edges are exactly the normal-form-word extensions,
/// * strong edges are exactly the remaining in-component edges,
/// * transition edges are the rest, have `TypeII(n, k, k)` sources, and
///   step from size `k` to size `k + 1`,
/// * the tree edges form a spanning tree: every non-identity vertex is its
///   parent edge's target and is reached from the identity along tree edges.
pub fn verify_classification(n: i64) -> VerificationReport {
    let mut builder =
        ReportBuilder::begin("classification", serde_json::json!({ "size": n }));

    let edges = ball_edges(n);
    builder.run(&edges, |&(e, class)| {
        let source_word = normal_form(e.source).word();
        let target_word = normal_form(e.target()).word();
        let extends = target_word.len() == source_word.len() + 1
            && target_word[..source_word.len()] == source_word[..]
            && target_word[source_word.len()] == e.gen;
        let oracle = if extends {
            EdgeClass::Tree
        } else if scc_key(e.source) == scc_key(e.target()) {
            EdgeClass::Strong
        } else {
            EdgeClass::Transition
        };
        if class != oracle {
            return Err(format!("{e} classified {class:?}, oracle says {oracle:?}"));
        }
        if class == EdgeClass::Transition {
            match normal_form(e.source) {
                NormalForm::TypeII { k, j, .. } if j == k => {
                    if e.source.size() != k || e.target().size() != k + 1 {
                        return Err(format!("{e} does not step from size k to k+1"));
                    }
                }
                other => {
                    return Err(format!("transition edge {e} has source shape {other}"));
                }
            }
        }
        if class == EdgeClass::Strong && e.source.size() != e.target().size() {
            return Err(format!("strong edge {e} changes size"));
        }
        Ok(())
    });

    let ball = enumerate_ball(n);
    builder.run(&ball, |&m| {
        if m.is_identity() {
            return Ok(());
        }
        // Parent edge: drop the last letter of the normal-form word.
        let f = normal_form(m);
        let parent = nf_parent(&f).expect("non-identity").interval();
        let gen = *f.word().last().expect("non-identity word");
        let parent_edge = EdgeRef::new(parent, gen);
        if parent_edge.target() != m {
            return Err(format!("parent edge of {f} misses its child"));
        }
        if classify_edge(&parent_edge) != EdgeClass::Tree {
            return Err(format!("parent edge {parent_edge} of {f} is not a tree edge"));
        }
        // Unique incoming tree edge: any other in-edge must be non-tree.
        for (e, class) in ball_edges(m.size()) {
            if e.target() == m && class == EdgeClass::Tree && e != parent_edge {
                return Err(format!("second incoming tree edge {e} at {f}"));
            }
        }
        let path = tree_path(m);
        if path.start() != Some(Interval::IDENTITY) || path.end() != Some(m) {
            return Err(format!("tree path does not join the identity to {f}"));
        }
        if path.steps().iter().any(|s| classify_edge(&s.edge) != EdgeClass::Tree) {
            return Err(format!("tree path to {f} uses a non-tree edge"));
        }
        Ok(())
    });

    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::{parse_word, word_string};
    use proptest::prelude::*;

    fn iv(a: i64, b: i64, t: i64) -> Interval {
        Interval::new(a, b, t).unwrap()
    }

    fn nf_of(s: &str) -> Interval {
        eval_word(&parse_word(s).unwrap())
    }

    #[test]
    fn classification_of_the_radius_one_ball() {
        let edges = ball_edges(1);
        let expect = [
            (iv(0, 0, 0), Gen::X, EdgeClass::Tree),
            (iv(0, 0, 0), Gen::Y, EdgeClass::Tree),
            (iv(-1, 0, -1), Gen::X, EdgeClass::Tree),
            (iv(-1, 0, 0), Gen::Y, EdgeClass::Strong),
            (iv(0, 1, 0), Gen::X, EdgeClass::Strong),
            (iv(0, 1, 1), Gen::Y, EdgeClass::Tree),
        ];
        assert_eq!(edges.len(), expect.len());
        for ((e, class), (src, gen, want)) in edges.iter().zip(expect) {
            assert_eq!((e.source, e.gen, *class), (src, gen, want));
        }
    }

    #[test]
    fn transition_edges_step_to_the_doubled_normal_form() {
        // y x --x--> x y^2 x^2
        let e = EdgeRef::new(nf_of("y^1 x^1"), Gen::X);
        assert_eq!(classify_edge(&e), EdgeClass::Transition);
        assert_eq!(e.target(), nf_of("x^1 y^2 x^2"));
        // x^2 y^3 x^3 --x--> x^3 y^4 x^4
        let e = EdgeRef::new(nf_of("x^2 y^3 x^3"), Gen::X);
        assert_eq!(classify_edge(&e), EdgeClass::Transition);
        assert_eq!(e.target(), nf_of("x^3 y^4 x^4"));
    }

    #[test]
    fn edge_spec_round_trips() {
        for spec in ["1:x", "x^1 y^2 x^2:x", "x^5 y^3:y"] {
            let e = parse_edge(spec).unwrap();
            assert_eq!(e.to_string(), spec);
        }
        assert_eq!(parse_edge("x^1 y^2 x^2:x").unwrap().source, iv(-1, 1, 1));
        assert!(matches!(parse_edge("xy"), Err(Error::BadEdgeSpec(_))));
        assert!(matches!(parse_edge("x:z"), Err(Error::BadEdgeSpec(_))));
        assert!(matches!(parse_edge("a:x"), Err(Error::UnknownSymbol('a'))));
    }

    #[test]
    fn tree_paths_spell_normal_forms() {
        assert!(tree_path(Interval::IDENTITY).is_empty());
        let m = nf_of("x^2 y^3 x^1");
        let path = tree_path(m);
        assert_eq!(path.len(), 6);
        assert_eq!(path.start(), Some(Interval::IDENTITY));
        assert_eq!(path.end(), Some(m));
        let spelled: Vec<Gen> = path.steps().iter().map(|s| s.edge.gen).collect();
        assert_eq!(word_string(&spelled), "xxyyyx");
    }

    #[test]
    fn geodesic_backtracks_to_the_common_prefix() {
        // nf words "x" and "xxyyyxxx" share the prefix "x".
        let v = iv(0, 1, 1);
        let w = iv(-1, 2, 2);
        let path = geodesic(v, w);
        assert_eq!(path.start(), Some(v));
        assert_eq!(path.end(), Some(w));
        assert_eq!(path.len(), 7);
        assert!(path.steps().iter().all(|s| s.forward));
        let spelled: Vec<Gen> = path.steps().iter().map(|s| s.edge.gen).collect();
        assert_eq!(word_string(&spelled), "xyyyxxx");

        // From "x y" to "x x": back one letter, then forward one.
        let path = geodesic(nf_of("x^1 y^1"), nf_of("x^2"));
        assert_eq!(path.len(), 2);
        assert!(!path.steps()[0].forward);
        assert!(path.steps()[1].forward);
        // "x" is the parent of "x y": a single backward step.
        let path = geodesic(nf_of("x^1 y^1"), iv(0, 1, 1));
        assert_eq!(path.len(), 1);
        assert!(!path.steps()[0].forward);
    }

    #[test]
    fn geodesic_endpoints_and_reversal_on_a_ball() {
        let ball = enumerate_ball(4);
        for &v in &ball {
            for &w in &ball {
                let p = geodesic(v, w);
                if v == w {
                    assert!(p.is_empty());
                    continue;
                }
                assert_eq!(p.start(), Some(v));
                assert_eq!(p.end(), Some(w));
                assert_eq!(p.reversed(), geodesic(w, v));
                // Backward steps precede forward steps.
                let first_forward =
                    p.steps().iter().position(|s| s.forward).unwrap_or(p.len());
                assert!(p.steps()[first_forward..].iter().all(|s| s.forward));
            }
        }
    }

    #[test]
    fn malformed_paths_are_rejected() {
        let e1 = EdgeRef::new(iv(0, 0, 0), Gen::X);
        let e2 = EdgeRef::new(iv(0, 2, 2), Gen::Y);
        assert_eq!(
            Path::try_new(vec![Step::forward(e1), Step::forward(e2)]),
            Err(Error::MalformedPath)
        );
        assert!(Path::try_new(vec![Step::forward(e1), Step::backward(e1)]).is_ok());
    }

    #[test]
    fn ball_edge_counts() {
        // 2 out-edges per vertex minus 2 leaving edges per outermost component.
        assert_eq!(ball_edges(1).len(), 6);
        assert_eq!(ball_edges(2).len(), 22);
        let tally = |class: EdgeClass| {
            ball_edges(2).iter().filter(|(_, c)| *c == class).count()
        };
        assert_eq!(tally(EdgeClass::Tree), 13);
        assert_eq!(tally(EdgeClass::Strong), 8);
        assert_eq!(tally(EdgeClass::Transition), 1);
    }

    #[test]
    fn scc_key_matches_tarjan_on_a_ball() {
        use petgraph::algo::tarjan_scc;
        use petgraph::graph::DiGraph;
        use std::collections::HashMap;

        let ball = enumerate_ball(6);
        let mut graph = DiGraph::<Interval, ()>::new();
        let mut index = HashMap::new();
        for &m in &ball {
            index.insert(m, graph.add_node(m));
        }
        for (e, _) in ball_edges(6) {
            graph.add_edge(index[&e.source], index[&e.target()], ());
        }
        // Map each vertex to its Tarjan component id.
        let mut component = HashMap::new();
        for (id, scc) in tarjan_scc(&graph).into_iter().enumerate() {
            for node in scc {
                component.insert(graph[node], id);
            }
        }
        for &m1 in &ball {
            for &m2 in &ball {
                assert_eq!(
                    component[&m1] == component[&m2],
                    scc_key(m1) == scc_key(m2),
                    "scc oracle disagrees on {m1}, {m2}"
                );
            }
        }
    }

    #[test]
    fn classification_verifier_passes() {
        let report = verify_classification(5);
        assert!(report.pass, "{:?}", report.counterexamples);
        assert_eq!(report.check, "classification");
    }

    #[test]
    fn edge_json_shape() {
        assert_eq!(
            serde_json::to_string(&EdgeClass::Transition).unwrap(),
            r#""transition""#
        );
    }

    fn arb_ball_vertex() -> impl Strategy<Value = Interval> {
        prop::sample::select(enumerate_ball(6))
    }

    proptest! {
        #[test]
        fn prop_translation_maps_edges_to_edges(
            m in arb_ball_vertex(),
            z in prop::sample::select(&Gen::BOTH[..]),
            g in prop::sample::select(&Gen::BOTH[..]),
        ) {
            use crate::monogenic::{left_mult, mult};
            // Left translation of edge (m, g): source and target translate together.
            let e = EdgeRef::new(m, g);
            let translated = EdgeRef::new(left_mult(z, m), g);
            prop_assert_eq!(translated.target(), left_mult(z, e.target()));
            // Never a loop: right multiplication changes t.
            prop_assert_ne!(translated.target(), translated.source);
            // And the same under translation by longer prefixes.
            let zz = mult(eval_word(&[z]), eval_word(&[z.other()]));
            let shifted = EdgeRef::new(mult(zz, m), g);
            prop_assert_eq!(shifted.target(), mult(zz, e.target()));
        }

        #[test]
        fn prop_tree_edges_preserve_or_grow_size(m in arb_ball_vertex(), g in prop::sample::select(&Gen::BOTH[..])) {
            let e = EdgeRef::new(m, g);
            let (s, t) = (e.source.size(), e.target().size());
            match classify_edge(&e) {
                EdgeClass::Tree => prop_assert!(t == s || t == s + 1),
                EdgeClass::Strong => prop_assert_eq!(t, s),
                EdgeClass::Transition => {
                    prop_assert_eq!(t, s + 1);
                    prop_assert!(crosses_scc(&e));
                }
            }
        }
    }
}
