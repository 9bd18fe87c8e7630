//! First homology of Cayley-digraph balls and the monoid action on it.
//!
//! The tree edges of [`crate::cayley`] span every ball, so the first
//! homology of the underlying graph is free abelian on the non-tree edges:
//! each non-tree edge `e` yields the basis cycle
//! `[1 → ι(e)] · e · [1 → τ(e)]⁻¹`, and the class of any closed path is
//! read off by restricting its edge-traversal chain to non-tree edges.
//!
//! Left multiplication by a generator moves edges to edges (the edge set is
//! a free left monoid set on the two edges at the identity), so it acts on
//! cycles and hence on homology: [`act`] translates each basis cycle and
//! decomposes the result. Strong edges have weight `0`, the transition edge
//! at `(n, k)` has weight `k`, and the span `W_k` of basis elements of
//! weight `<= k` filters the action: generators never raise weight, `W_0`
//! is closed, and each `W_k / W_(k-1)` is witnessed non-trivial. The
//! `verify_*` functions check all of this exhaustively at bounded scale.

use crate::cayley::{
    ball_edges, classify_edge, geodesic, tree_path, EdgeClass, EdgeRef, Path, Step,
};
use crate::error::Error;
use crate::monogenic::{enumerate_ball, left_mult, Gen, Interval, NormalForm};
use crate::report::{ReportBuilder, VerificationReport};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An integer combination of edges. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OneChain {
    coeffs: BTreeMap<EdgeRef, i64>,
}

/// An integer combination of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZeroChain {
    coeffs: BTreeMap<Interval, i64>,
}

macro_rules! chain_impl {
    ($chain:ident, $key:ty) => {
        impl $chain {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn unit(key: $key) -> Self {
                let mut c = Self::default();
                c.add_scaled(key, 1);
                c
            }

            pub fn add_scaled(&mut self, key: $key, amount: i64) {
                let entry = self.coeffs.entry(key).or_insert(0);
                *entry += amount;
                if *entry == 0 {
                    self.coeffs.remove(&key);
                }
            }

            pub fn coeff(&self, key: &$key) -> i64 {
                self.coeffs.get(key).copied().unwrap_or(0)
            }

            pub fn support(&self) -> impl Iterator<Item = (&$key, i64)> {
                self.coeffs.iter().map(|(k, &c)| (k, c))
            }

            pub fn support_len(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }
        }

        impl Add for $chain {
            type Output = $chain;
            fn add(mut self, rhs: $chain) -> $chain {
                for (k, c) in rhs.coeffs {
                    self.add_scaled(k, c);
                }
                self
            }
        }

        impl Sub for $chain {
            type Output = $chain;
            fn sub(mut self, rhs: $chain) -> $chain {
                for (k, c) in rhs.coeffs {
                    self.add_scaled(k, -c);
                }
                self
            }
        }

        impl Neg for $chain {
            type Output = $chain;
            fn neg(mut self) -> $chain {
                for c in self.coeffs.values_mut() {
                    *c = -*c;
                }
                self
            }
        }
    };
}

chain_impl!(OneChain, EdgeRef);
chain_impl!(ZeroChain, Interval);

/// Edge-traversal chain of a path: `+1` per forward step, `-1` per
/// backward step, accumulated per edge.
pub fn chain_of_path(p: &Path) -> OneChain {
    let mut chain = OneChain::zero();
    for step in p.steps() {
        chain.add_scaled(step.edge, if step.forward { 1 } else { -1 });
    }
    chain
}

/// `d₁`: each edge maps to target minus source.
pub fn boundary(c: &OneChain) -> ZeroChain {
    let mut b = ZeroChain::zero();
    for (e, coeff) in c.support() {
        b.add_scaled(e.target(), coeff);
        b.add_scaled(e.source, -coeff);
    }
    b
}

/// `ε`: the coefficient sum. `ε ∘ d₁ = 0` makes the two maps a complex.
pub fn augment(z: &ZeroChain) -> i64 {
    z.support().map(|(_, c)| c).sum()
}

/// Weight of a non-tree edge: `0` if strong, `k` (the size of the source)
/// if the transition edge at `(n, k)`. Tree edges have no weight.
pub fn weight(e: &EdgeRef) -> Result<i64, Error> {
    match classify_edge(e) {
        EdgeClass::Tree => Err(Error::TreeEdgeWeight),
        EdgeClass::Strong => Ok(0),
        EdgeClass::Transition => Ok(e.source.size()),
    }
}

/// The transition edge `x^n y^k x^k → x^(n+1) y^(k+1) x^(k+1)`.
pub fn transition_edge(n: i64, k: i64) -> Result<EdgeRef, Error> {
    let source = NormalForm::type_ii(n, k, k)?.interval();
    Ok(EdgeRef::new(source, Gen::X))
}

/// An element of first homology in the non-tree-edge basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyVector {
    coeffs: BTreeMap<EdgeRef, i64>,
}

impl HomologyVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b_e`. Errors on tree edges.
    pub fn unit(e: EdgeRef) -> Result<Self, Error> {
        if classify_edge(&e) == EdgeClass::Tree {
            return Err(Error::NotABasisEdge);
        }
        let mut v = Self::default();
        v.coeffs.insert(e, 1);
        Ok(v)
    }

    pub fn coeff(&self, e: &EdgeRef) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&EdgeRef, i64)> {
        self.coeffs.iter().map(|(e, &c)| (e, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_scaled(&mut self, other: &HomologyVector, amount: i64) {
        for (&e, c) in other.support() {
            let entry = self.coeffs.entry(e).or_insert(0);
            *entry += c * amount;
            if *entry == 0 {
                self.coeffs.remove(&e);
            }
        }
    }

    /// Support sorted for output: weight, then source, then generator.
    fn sorted_support(&self) -> Vec<(EdgeRef, i64, i64)> {
        let mut rows: Vec<(EdgeRef, i64, i64)> = self
            .support()
            .map(|(&e, c)| {
                let w = weight(&e).expect("homology support has no tree edges");
                (e, c, w)
            })
            .collect();
        rows.sort_by_key(|&(e, _, w)| (w, e));
        rows
    }

    /// `[{"edge": "<nf>:<gen>", "coeff": c, "weight": w}, ...]` in
    /// (weight, source, generator) order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_support()
                .into_iter()
                .map(|(e, c, w)| {
                    serde_json::json!({"edge": e.to_string(), "coeff": c, "weight": w})
                })
                .collect(),
        )
    }
}

impl Add for HomologyVector {
    type Output = HomologyVector;
    fn add(mut self, rhs: HomologyVector) -> HomologyVector {
        self.add_scaled(&rhs, 1);
        self
    }
}

impl Sub for HomologyVector {
    type Output = HomologyVector;
    fn sub(mut self, rhs: HomologyVector) -> HomologyVector {
        self.add_scaled(&rhs, -1);
        self
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c, w)) in self.sorted_support().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match (i, c) {
                (0, c) if c < 0 => write!(f, "-")?,
                (0, _) => {}
                (_, c) if c < 0 => write!(f, "- ")?,
                _ => write!(f, "+ ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "b[{e}] (weight {w})")?;
        }
        Ok(())
    }
}

/// Largest weight in the support; `None` for the zero vector. A vector
/// lies in the filtration stage `W_k` exactly when this is `<= k`.
pub fn max_weight(v: &HomologyVector) -> Option<i64> {
    v.support()
        .map(|(e, _)| weight(e).expect("homology support has no tree edges"))
        .max()
}

/// The canonical cycle behind `b_e`: tree path to the source, then `e`,
/// then the tree path from the target, reversed. Errors on tree edges.
pub fn basis_cycle(e: &EdgeRef) -> Result<Path, Error> {
    if classify_edge(e) == EdgeClass::Tree {
        return Err(Error::NotABasisEdge);
    }
    let mut steps = tree_path(e.source).steps().to_vec();
    steps.push(Step::forward(*e));
    steps.extend(tree_path(e.target()).reversed().steps());
    Ok(Path::try_new(steps).expect("tree paths join at the edge"))
}

/// The directed 2-cycle certifying a strong edge's class: the tree edge
/// from the strong edge's target back to its source, then the edge itself.
pub fn strong_two_cycle(e: &EdgeRef) -> Result<Path, Error> {
    if classify_edge(e) != EdgeClass::Strong {
        return Err(Error::NotABasisEdge);
    }
    let partner = EdgeRef::new(e.target(), e.gen.other());
    Path::try_new(vec![Step::forward(partner), Step::forward(*e)])
}

/// The homology class of a closed path: its chain restricted to non-tree
/// edges. Errors on open paths.
pub fn homology_of_path(p: &Path) -> Result<HomologyVector, Error> {
    if !p.is_closed() {
        return Err(Error::OpenPath);
    }
    let mut v = HomologyVector::zero();
    for (&e, c) in chain_of_path(p).support() {
        if classify_edge(&e) != EdgeClass::Tree {
            v.coeffs.insert(e, c);
        }
    }
    Ok(v)
}

/// Left translation of a path: every edge `(m, g)` moves to `(z·m, g)`,
/// directions unchanged. Translation commutes with taking targets, so the
/// result is again a path, closed if `p` was.
pub fn translate_path(z: Gen, p: &Path) -> Path {
    let steps = p
        .steps()
        .iter()
        .map(|s| Step { edge: EdgeRef::new(left_mult(z, s.edge.source), s.edge.gen), forward: s.forward })
        .collect();
    Path::try_new(steps).expect("translation preserves adjacency")
}

/// The left action of a generator on homology: translate each basis cycle
/// and decompose the translated cycle.
pub fn act(z: Gen, v: &HomologyVector) -> HomologyVector {
    let mut out = HomologyVector::zero();
    for (e, c) in v.support() {
        let cycle = basis_cycle(e).expect("support has no tree edges");
        let translated = translate_path(z, &cycle);
        let class = homology_of_path(&translated).expect("translates of cycles stay closed");
        out.add_scaled(&class, c);
    }
    out
}

/// Applies a word left to right: the leftmost letter acts outermost, so
/// `act_word("xy", v) = act(x, act(y, v))`, matching `(xy)·v = x·(y·v)`.
pub fn act_word(word: &[Gen], v: &HomologyVector) -> HomologyVector {
    word.iter().rev().fold(v.clone(), |acc, &z| act(z, &acc))
}

fn strong_edges(n: i64) -> Vec<EdgeRef> {
    ball_edges(n)
        .into_iter()
        .filter(|(_, c)| *c == EdgeClass::Strong)
        .map(|(e, _)| e)
        .collect()
}

/// Checks that `W_0` is closed under the action: for every strong edge in
/// the ball of radius `n` and both generators, `act(z, b_e)` is supported
/// on weight-0 edges. Also certifies the 2-cycle description of strong
/// basis elements and that translated 2-cycles stay directed 2-cycles.
pub fn verify_w0(n: i64) -> VerificationReport {
    let mut builder = ReportBuilder::begin("w0", serde_json::json!({ "size": n }));
    builder.run(&strong_edges(n), |e| {
        let cycle = strong_two_cycle(e).map_err(|err| format!("{e}: {err}"))?;
        let partner = cycle.steps()[0].edge;
        if classify_edge(&partner) != EdgeClass::Tree {
            return Err(format!("2-cycle partner {partner} of {e} is not a tree edge"));
        }
        if !cycle.is_closed() {
            return Err(format!("2-cycle at {e} is not closed"));
        }
        if homology_of_path(&cycle).unwrap() != HomologyVector::unit(*e).unwrap() {
            return Err(format!("2-cycle at {e} does not decompose to b_e"));
        }
        // Same chain as the canonical basis cycle, hence the same class.
        let canonical = chain_of_path(&basis_cycle(e).unwrap());
        if canonical != chain_of_path(&cycle) {
            return Err(format!("2-cycle chain at {e} differs from the basis cycle chain"));
        }
        for z in Gen::BOTH {
            let translated = translate_path(z, &cycle);
            if !(translated.is_closed()
                && translated.len() == 2
                && translated.steps().iter().all(|s| s.forward))
            {
                return Err(format!("translate of the 2-cycle at {e} by {z} is not a directed 2-cycle"));
            }
            let acted = act(z, &HomologyVector::unit(*e).unwrap());
            if max_weight(&acted).unwrap_or(0) != 0 {
                return Err(format!(
                    "act({z}, b[{e}]) leaves weight 0: {acted}"
                ));
            }
            if acted != homology_of_path(&translated).unwrap() {
                return Err(format!("act({z}, b[{e}]) disagrees with the translated 2-cycle"));
            }
        }
        Ok(())
    });
    builder.finish()
}

/// Checks that generators never raise weight, on every transition basis
/// element `b_e`, `e` at `(n, k)` for `k <= k_max`, and pins the landmark
/// support values the weight bound hinges on:
///
/// * `act(x, b_e)` is exactly `b_e'` at `(n+1, k)` when `k > n + 1`, and
///   weight-0 when `k = n + 1`;
/// * `act(y, b_e)` for `n >= 1` picks up the translated edge `ye` at
///   `(n-1, k)` with coefficient `+1` and the weight-`n` edge at
///   `(n-1, n)` with coefficient `-1`; for `n = 0`, `ye` is a tree edge.
pub fn verify_filtration(k_max: i64) -> VerificationReport {
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for n in 0..k {
            for z in Gen::BOTH {
                cases.push((n, k, z));
            }
        }
    }
    let mut builder =
        ReportBuilder::begin("filtration", serde_json::json!({ "max_weight": k_max }));
    builder.run(&cases, |&(n, k, z)| {
        let e = transition_edge(n, k).unwrap();
        let acted = act(z, &HomologyVector::unit(e).unwrap());
        if max_weight(&acted).unwrap_or(i64::MIN) > k {
            return Err(format!("act({z}, b[{e}]) exceeds weight {k}: {acted}"));
        }
        let ye = EdgeRef::new(left_mult(z, e.source), Gen::X);
        match z {
            Gen::X if k > n + 1 => {
                let expected = HomologyVector::unit(transition_edge(n + 1, k).unwrap()).unwrap();
                if acted != expected {
                    return Err(format!(
                        "act(x, b[{e}]) should be exactly the (n+1, k) basis element, got {acted}"
                    ));
                }
            }
            Gen::X => {
                // k = n + 1: the translate collapses into one component.
                if max_weight(&acted).unwrap_or(0) != 0 {
                    return Err(format!("act(x, b[{e}]) should be weight-0, got {acted}"));
                }
            }
            Gen::Y if n >= 1 => {
                if weight(&ye) != Ok(k) || acted.coeff(&ye) != 1 {
                    return Err(format!(
                        "act(y, b[{e}]) should contain the translated edge {ye} with +1, got {acted}"
                    ));
                }
                let low = transition_edge(n - 1, n).unwrap();
                if acted.coeff(&low) != -1 {
                    return Err(format!(
                        "act(y, b[{e}]) should contain the weight-{n} edge {low} with -1, got {acted}"
                    ));
                }
            }
            Gen::Y => {
                if classify_edge(&ye) != EdgeClass::Tree || acted.coeff(&ye) != 0 {
                    return Err(format!(
                        "for n = 0 the translated edge {ye} should be a tree edge outside the support"
                    ));
                }
            }
        }
        Ok(())
    });
    builder.finish()
}

/// Checks the filtration is strictly increasing up to `k_max`: for each
/// `k` there are exactly `k` transition edges of weight `k` (sources
/// `(n, k)`, `0 <= n < k`), and `b_e` at `(0, k)` witnesses
/// `W_(k-1) ≠ W_k`.
pub fn verify_strictness(k_max: i64) -> VerificationReport {
    let cases: Vec<i64> = (1..=k_max).collect();
    let mut builder =
        ReportBuilder::begin("strictness", serde_json::json!({ "max_weight": k_max }));
    builder.run(&cases, |&k| {
        for n in 0..k {
            let e = transition_edge(n, k).unwrap();
            if weight(&e) != Ok(k) {
                return Err(format!("{e} should be a transition edge of weight {k}"));
            }
        }
        // Weight-k transition edges have sources of size k, so the ball of
        // radius k+1 contains them all.
        let found = ball_edges(k + 1)
            .iter()
            .filter(|(e, c)| *c == EdgeClass::Transition && weight(e) == Ok(k))
            .count() as i64;
        if found != k {
            return Err(format!("expected {k} transition edges of weight {k}, found {found}"));
        }
        let witness = HomologyVector::unit(transition_edge(0, k).unwrap()).unwrap();
        if max_weight(&witness) != Some(k) {
            return Err(format!("witness basis element at (0, {k}) has the wrong weight"));
        }
        Ok(())
    });
    builder.finish()
}

/// Checks the geodesic expression for transition basis cycles: with
/// `e` at `(n, k)`, the cycle `[1 → ι(e)] e [1 → τ(e)]⁻¹` equals the chain
/// `[x^n → ι(e)] + e - [x^n → τ(e)]`, because the two tree paths share
/// exactly the prefix `x^n`.
pub fn verify_transition_basis(k_max: i64) -> VerificationReport {
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for n in 0..k {
            cases.push((n, k));
        }
    }
    let mut builder = ReportBuilder::begin(
        "transition-basis",
        serde_json::json!({ "max_weight": k_max }),
    );
    builder.run(&cases, |&(n, k)| {
        let e = transition_edge(n, k).unwrap();
        let spine = NormalForm::type_i(n, 0).unwrap().interval();
        let source_path = tree_path(e.source);
        let target_path = tree_path(e.target());
        let shared = source_path
            .steps()
            .iter()
            .zip(target_path.steps())
            .take_while(|(s, t)| s == t)
            .count() as i64;
        if shared != n {
            return Err(format!(
                "tree paths to the ends of {e} share {shared} edges, expected n = {n}"
            ));
        }
        let mut lhs = chain_of_path(&geodesic(spine, e.source));
        lhs.add_scaled(e, 1);
        let lhs = lhs - chain_of_path(&geodesic(spine, e.target()));
        let rhs = chain_of_path(&basis_cycle(&e).unwrap());
        let diff = lhs.clone() - rhs;
        if !diff.is_zero() {
            if diff
                .support()
                .any(|(edge, _)| classify_edge(edge) != EdgeClass::Tree)
            {
                return Err(format!(
                    "geodesic expression for {e} differs from the basis cycle on non-tree edges"
                ));
            }
            return Err(format!("geodesic expression for {e} is not chain-identical"));
        }
        if homology_of_path(&basis_cycle(&e).unwrap()).unwrap()
            != HomologyVector::unit(e).unwrap()
        {
            return Err(format!("basis cycle of {e} does not decompose to b_e"));
        }
        Ok(())
    });
    builder.finish()
}

/// Checks the rank bookkeeping on the ball of radius `n`: tree edges number
/// `|V| - 1` and `|E| - |V| + 1` equals the count of non-tree edges.
pub fn rank_check(n: i64) -> VerificationReport {
    let vertices = enumerate_ball(n);
    let edges = ball_edges(n);
    let non_tree = edges.iter().filter(|(_, c)| *c != EdgeClass::Tree).count();
    let tree = edges.len() - non_tree;
    let mut builder = ReportBuilder::begin(
        "rank",
        serde_json::json!({
            "size": n,
            "vertices": vertices.len(),
            "edges": edges.len(),
            "non_tree": non_tree,
        }),
    );
    builder.case(if tree == vertices.len() - 1 {
        Ok(())
    } else {
        Err(format!("{tree} tree edges for {} vertices", vertices.len()))
    });
    builder.case(
        if edges.len() as i64 - vertices.len() as i64 + 1 == non_tree as i64 {
            Ok(())
        } else {
            Err(format!(
                "|E| - |V| + 1 = {} but {} non-tree edges",
                edges.len() as i64 - vertices.len() as i64 + 1,
                non_tree
            ))
        },
    );
    // The identity needs every parent edge to stay inside the ball.
    builder.run(&vertices, |&m| {
        if m.is_identity() {
            return Ok(());
        }
        let path = tree_path(m);
        if path.steps().iter().all(|s| s.edge.source.size() <= n) {
            Ok(())
        } else {
            Err(format!("tree path to {m} leaves the ball"))
        }
    });
    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::{eval_word, mult, normal_form, parse_word};
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Seed for the pseudorandom chain samples; fixed so runs are identical.
    const SEED: u64 = 0x0F1E_2D3C;

    fn nf_of(s: &str) -> Interval {
        eval_word(&parse_word(s).unwrap())
    }

    fn edge(s: &str) -> EdgeRef {
        crate::cayley::parse_edge(s).unwrap()
    }

    fn unit(e: EdgeRef) -> HomologyVector {
        HomologyVector::unit(e).unwrap()
    }

    fn non_tree_edges(n: i64) -> Vec<EdgeRef> {
        ball_edges(n)
            .into_iter()
            .filter(|(_, c)| *c != EdgeClass::Tree)
            .map(|(e, _)| e)
            .collect()
    }

    #[test]
    fn basis_cycle_shapes() {
        // Strong edge at x^1 y^1: forward x, y, the edge, then back along x.
        let cycle = basis_cycle(&edge("x^1 y^1:x")).unwrap();
        assert_eq!(cycle.len(), 4);
        assert!(cycle.is_closed());
        assert_eq!(cycle.start(), Some(Interval::IDENTITY));

        // Transition edge at (1, 2): 5 steps out, the edge, 8 steps back.
        let cycle = basis_cycle(&edge("x^1 y^2 x^2:x")).unwrap();
        assert_eq!(cycle.len(), 14);
        assert!(cycle.is_closed());

        assert_eq!(basis_cycle(&edge("1:x")), Err(Error::NotABasisEdge));
    }

    #[test]
    fn chains_of_paths_telescope() {
        let ball = enumerate_ball(4);
        for &v in &ball {
            for &w in &ball {
                let b = boundary(&chain_of_path(&geodesic(v, w)));
                if v == w {
                    assert!(b.is_zero());
                } else {
                    assert_eq!(b.coeff(&w), 1);
                    assert_eq!(b.coeff(&v), -1);
                    assert_eq!(b.support_len(), 2);
                }
            }
        }
    }

    #[test]
    fn reversal_negates_the_chain() {
        let p = geodesic(nf_of("x^2 y^1"), nf_of("y^2 x^1"));
        let c = chain_of_path(&p);
        assert_eq!(chain_of_path(&p.reversed()), -c);
    }

    #[test]
    fn augmentation_kills_boundaries_of_random_chains() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let edges: Vec<EdgeRef> = ball_edges(8).into_iter().map(|(e, _)| e).collect();
        for _ in 0..1000 {
            let mut chain = OneChain::zero();
            for _ in 0..rng.random_range(0..=8) {
                let e = edges[rng.random_range(0..edges.len())];
                let c = rng.random_range(-3..=3);
                chain.add_scaled(e, c);
            }
            assert_eq!(augment(&boundary(&chain)), 0);
        }
    }

    #[test]
    fn nonzero_tree_chains_have_nonzero_boundary() {
        use std::collections::BTreeMap;
        let tree_edges: Vec<EdgeRef> = ball_edges(6)
            .into_iter()
            .filter(|(_, c)| *c == EdgeClass::Tree)
            .map(|(e, _)| e)
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for round in 0..500 {
            let mut chain = OneChain::zero();
            for _ in 0..=round % 7 {
                let e = tree_edges[rng.random_range(0..tree_edges.len())];
                let c = [-2, -1, 1, 2][rng.random_range(0..4)];
                chain.add_scaled(e, c);
            }
            if chain.is_zero() {
                continue;
            }
            let b = boundary(&chain);
            assert!(!b.is_zero());
            // Leaf-stripping argument: some vertex meets exactly one support
            // edge, and the boundary cannot cancel there.
            let mut incidence: BTreeMap<Interval, Vec<i64>> = BTreeMap::new();
            for (e, c) in chain.support() {
                incidence.entry(e.source).or_default().push(-c);
                incidence.entry(e.target()).or_default().push(c);
            }
            let leaf = incidence
                .iter()
                .find(|(_, cs)| cs.len() == 1)
                .expect("a forest has a leaf");
            assert_eq!(b.coeff(leaf.0), leaf.1[0]);
            assert_ne!(b.coeff(leaf.0), 0);
        }
    }

    #[test]
    fn homology_requires_closed_paths() {
        let p = geodesic(Interval::IDENTITY, nf_of("x^2"));
        assert_eq!(homology_of_path(&p), Err(Error::OpenPath));
        assert_eq!(homology_of_path(&Path::empty()), Ok(HomologyVector::zero()));
    }

    #[test]
    fn basis_cycles_decompose_to_themselves() {
        for e in non_tree_edges(5) {
            let h = homology_of_path(&basis_cycle(&e).unwrap()).unwrap();
            assert_eq!(h, unit(e), "basis cycle of {e}");
        }
    }

    #[test]
    fn two_cycles_match_basis_cycles_chainwise() {
        for e in strong_edges(5) {
            let two = strong_two_cycle(&e).unwrap();
            assert_eq!(two.len(), 2);
            assert_eq!(
                chain_of_path(&two),
                chain_of_path(&basis_cycle(&e).unwrap()),
                "chains differ at {e}"
            );
        }
        assert_eq!(
            strong_two_cycle(&edge("y^1 x^1:x")),
            Err(Error::NotABasisEdge)
        );
    }

    #[test]
    fn weights_by_class() {
        assert_eq!(weight(&edge("x^1 y^1:x")), Ok(0));
        assert_eq!(weight(&edge("y^1 x^1:x")), Ok(1));
        assert_eq!(weight(&edge("x^2 y^3 x^3:x")), Ok(3));
        assert_eq!(weight(&edge("1:x")), Err(Error::TreeEdgeWeight));
        assert_eq!(max_weight(&HomologyVector::zero()), None);
    }

    #[test]
    fn action_examples() {
        // act(x, b_e) at (0, 2) is exactly the basis element at (1, 2).
        let e = transition_edge(0, 2).unwrap();
        assert_eq!(
            act(Gen::X, &unit(e)),
            unit(transition_edge(1, 2).unwrap())
        );
        // act(x, b_e) at (0, 1) collapses to weight 0.
        let e = transition_edge(0, 1).unwrap();
        assert_eq!(max_weight(&act(Gen::X, &unit(e))).unwrap_or(0), 0);
        // act(y, b_e) at (1, 2): +1 on the translated weight-2 edge, -1 on
        // the weight-1 edge.
        let e = transition_edge(1, 2).unwrap();
        let acted = act(Gen::Y, &unit(e));
        let ye = EdgeRef::new(left_mult(Gen::Y, e.source), Gen::X);
        assert_eq!(weight(&ye), Ok(2));
        assert_eq!(acted.coeff(&ye), 1);
        assert_eq!(acted.coeff(&transition_edge(0, 1).unwrap()), -1);
        assert_eq!(max_weight(&acted), Some(2));
    }

    #[test]
    fn action_word_conventions() {
        let v = unit(transition_edge(0, 2).unwrap());
        assert_eq!(act_word(&[], &v), v);
        assert_eq!(
            act_word(&parse_word("xy").unwrap(), &v),
            act(Gen::X, &act(Gen::Y, &v))
        );
    }

    #[test]
    fn action_respects_monoid_relations() {
        // u = w in the monoid must give the same action; xyx = x is the
        // first defining relation.
        for e in non_tree_edges(4) {
            let v = unit(e);
            for (u, w) in [("xyx", "x"), ("yxy", "y"), ("xyyx", "yxxy"), ("xxyy", "xxyyxyxy")] {
                let (u, w) = (parse_word(u).unwrap(), parse_word(w).unwrap());
                assert_eq!(eval_word(&u), eval_word(&w), "test words must be equal in M");
                assert_eq!(
                    act_word(&u, &v),
                    act_word(&w, &v),
                    "action differs on equal words at {e}"
                );
            }
        }
    }

    #[test]
    fn action_is_additive() {
        let e1 = transition_edge(0, 2).unwrap();
        let e2 = edge("x^2 y^1:x");
        let sum = unit(e1) + unit(e2);
        for z in Gen::BOTH {
            assert_eq!(act(z, &sum), act(z, &unit(e1)) + act(z, &unit(e2)));
        }
        assert_eq!(unit(e1).clone() - unit(e1), HomologyVector::zero());
    }

    #[test]
    fn homology_vector_json_is_weight_sorted() {
        let mut v = unit(transition_edge(1, 2).unwrap());
        v.add_scaled(&unit(edge("x^1 y^1:x")), -2);
        assert_eq!(
            v.to_json(),
            serde_json::json!([
                {"edge": "x^1 y^1:x", "coeff": -2, "weight": 0},
                {"edge": "x^1 y^2 x^2:x", "coeff": 1, "weight": 2},
            ])
        );
        assert_eq!(v.to_string(), "-2b[x^1 y^1:x] (weight 0) + b[x^1 y^2 x^2:x] (weight 2)");
    }

    #[test]
    fn verifiers_pass_at_small_scale() {
        for report in [
            verify_w0(5),
            verify_filtration(6),
            verify_strictness(6),
            verify_transition_basis(6),
            rank_check(4),
        ] {
            assert!(report.pass, "{}: {:?}", report.check, report.counterexamples);
        }
    }

    #[test]
    fn rank_check_reports_counts() {
        let report = rank_check(3);
        assert_eq!(report.params["vertices"], serde_json::json!(30));
        assert_eq!(report.params["edges"], serde_json::json!(52));
        assert_eq!(report.params["non_tree"], serde_json::json!(23));
    }

    proptest! {
        #[test]
        fn prop_translation_preserves_closed_paths(
            z in prop::sample::select(&Gen::BOTH[..]),
            pair in prop::sample::select(
                non_tree_edges(4)
            ),
        ) {
            let cycle = basis_cycle(&pair).unwrap();
            let translated = translate_path(z, &cycle);
            prop_assert_eq!(translated.len(), cycle.len());
            prop_assert!(translated.is_closed());
        }

        #[test]
        fn prop_action_agrees_with_any_closed_translate(
            z in prop::sample::select(&Gen::BOTH[..]),
            e in prop::sample::select(non_tree_edges(4)),
        ) {
            // Route 1: act on the basis vector. Route 2: translate the
            // 2-cycle or basis cycle directly.
            let acted = act(z, &unit(e));
            let translated = translate_path(z, &basis_cycle(&e).unwrap());
            prop_assert_eq!(acted, homology_of_path(&translated).unwrap());
        }

        #[test]
        fn prop_act_word_splits(
            u in prop::collection::vec(prop::sample::select(&Gen::BOTH[..]), 0..3),
            w in prop::collection::vec(prop::sample::select(&Gen::BOTH[..]), 0..3),
            e in prop::sample::select(non_tree_edges(3)),
        ) {
            let v = unit(e);
            let mut uw = u.clone();
            uw.extend(&w);
            prop_assert_eq!(act_word(&uw, &v), act_word(&u, &act_word(&w, &v)));
            // And the action only depends on the monoid element.
            let nf = normal_form(eval_word(&uw)).word();
            prop_assert_eq!(eval_word(&nf), mult(eval_word(&u), eval_word(&w)));
            prop_assert_eq!(act_word(&uw, &v), act_word(&nf, &v));
        }
    }
}
