//! Munn trees and the word problem for free inverse monoids.
//!
//! Tracing a word `w` through the Cayley tree of the free group marks a
//! finite subtree `MT(w)` together with the endpoint `r(w)` of the trace.
//! Two words are equal in the free inverse monoid exactly when they mark the
//! same subtree with the same endpoint, so the pair (vertex set, out-vertex)
//! is a complete invariant and multiplication is "glue the second tree at
//! the first tree's out-vertex".

use crate::error::Error;
use crate::words::{Alphabet, GenWord, ReducedWord};
use std::collections::BTreeSet;

/// A birooted finite subtree of the free-group Cayley tree.
///
/// `vertices` always contains the identity (the in-vertex) and is closed
/// under removing the last letter; `out` is a member of `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MunnTree {
    alphabet: Alphabet,
    vertices: BTreeSet<ReducedWord>,
    out: ReducedWord,
}

impl MunnTree {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> impl Iterator<Item = &ReducedWord> {
        self.vertices.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: &ReducedWord) -> bool {
        self.vertices.contains(v)
    }

    pub fn out(&self) -> &ReducedWord {
        &self.out
    }

    /// Checks the birooted-subtree invariants; the test suites call this on
    /// every constructed tree.
    pub fn is_well_formed(&self) -> bool {
        self.vertices.contains(&ReducedWord::identity())
            && self.vertices.contains(&self.out)
            && self.vertices.iter().all(|v| {
                v.letters().iter().all(|l| self.alphabet.contains(l.gen))
                    && v.parent().is_none_or(|p| self.vertices.contains(&p))
            })
    }

    /// `{"vertices": [...], "out": "..."} `, vertices in (length, lex) order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "out": self.out.to_string(),
        })
    }
}

/// Traces `w` from the identity, collecting every vertex it visits.
pub fn munn_tree(w: &GenWord) -> MunnTree {
    let mut vertices = BTreeSet::new();
    let mut cur = ReducedWord::identity();
    vertices.insert(cur.clone());
    for &letter in w.letters() {
        cur.push(letter);
        vertices.insert(cur.clone());
    }
    MunnTree { alphabet: w.alphabet().clone(), vertices, out: cur }
}

/// Product of birooted trees: `u`'s tree unioned with `v`'s tree translated
/// to start at `u`'s out-vertex.
pub fn mt_multiply(u: &MunnTree, v: &MunnTree) -> Result<MunnTree, Error> {
    if u.alphabet != v.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let mut vertices = u.vertices.clone();
    for w in &v.vertices {
        vertices.insert(u.out.concat(w));
    }
    Ok(MunnTree { alphabet: u.alphabet.clone(), vertices, out: u.out.concat(&v.out) })
}

/// Inverse of a birooted tree: translate so the out-vertex becomes the
/// identity, and swap the roots.
pub fn mt_inverse(u: &MunnTree) -> MunnTree {
    let shift = u.out.inverse();
    MunnTree {
        alphabet: u.alphabet.clone(),
        vertices: u.vertices.iter().map(|w| shift.concat(w)).collect(),
        out: shift,
    }
}

/// Word problem: equal in the free inverse monoid iff the Munn trees agree.
/// Both words must be over the same alphabet.
pub fn fim_equal(u: &GenWord, v: &GenWord) -> bool {
    munn_tree(u) == munn_tree(v)
}

/// Idempotents are exactly the trees whose trace returns to the identity.
pub fn is_idempotent(t: &MunnTree) -> bool {
    t.out.is_identity()
}

/// Green's R-relation: same tree, out-vertex ignored.
pub fn r_related(u: &MunnTree, v: &MunnTree) -> bool {
    u.alphabet == v.alphabet && u.vertices == v.vertices
}
