//! The free monogenic inverse monoid as interval arithmetic.
//!
//! With a single generator `x` (inverse written `y`), tracing a word walks
//! the integer line, so a Munn tree is just the interval of visited points
//! together with the walk's endpoint. [`Interval`] `(a, b, t)` stores the
//! minimum prefix sum, the maximum prefix sum, and the total sum; the word
//! problem collapses to equality of these triples, and multiplication is a
//! three-line closed form.
//!
//! Every element is named exactly once by a normal-form word, `x^n y^k`
//! (when `a = 0`) or `x^n y^k x^j` (when `a < 0`). The normal-form words are
//! closed under prefixes, which is what lets [`crate::cayley`] read a
//! spanning tree of the Cayley digraph straight off them.

use crate::error::Error;
use crate::report::{ReportBuilder, VerificationReport};
use crate::words::{lex_runs, Alphabet, GenWord, Letter};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// The generator and its inverse; `x` walks right, `y` walks left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    pub const BOTH: [Gen; 2] = [Gen::X, Gen::Y];

    pub fn step(self) -> i64 {
        match self {
            Gen::X => 1,
            Gen::Y => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
        }
    }

    pub fn other(self) -> Gen {
        match self {
            Gen::X => Gen::Y,
            Gen::Y => Gen::X,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Parses a word over `{x, y}`: whitespace ignored, `x^5` repeats, `1` is
/// the empty word.
pub fn parse_word(input: &str) -> Result<Vec<Gen>, Error> {
    let mut word = Vec::new();
    for (symbol, count) in lex_runs(input)? {
        let gen = match symbol {
            'x' => Gen::X,
            'y' => Gen::Y,
            other => return Err(Error::UnknownSymbol(other)),
        };
        word.extend(std::iter::repeat_n(gen, count as usize));
    }
    Ok(word)
}

/// Plain letter string of a word; the empty word prints as `1`.
pub fn word_string(word: &[Gen]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|g| g.symbol()).collect()
}

/// The same word over the general inverse alphabet `{x}`, with `y ↦ x⁻¹`.
/// This is the bridge to the [`crate::munn`] oracle.
pub fn to_gen_word(word: &[Gen]) -> GenWord {
    let alphabet = Alphabet::new(['x']).expect("x is a valid alphabet");
    let letters = word.iter().map(|g| Letter::new('x', *g == Gen::Y)).collect();
    GenWord::new(alphabet, letters).expect("letters drawn from the alphabet")
}

/// An element of the free monogenic inverse monoid.
///
/// `a <= 0 <= b` is the interval of visited points, `t` with `a <= t <= b`
/// the endpoint. The canonical order is by size `b - a`, then `a`, then `t`;
/// every enumeration and serialization in the crate uses it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    a: i64,
    b: i64,
    t: i64,
}

impl Interval {
    pub const IDENTITY: Interval = Interval { a: 0, b: 0, t: 0 };

    pub fn new(a: i64, b: i64, t: i64) -> Result<Self, Error> {
        if a <= 0 && 0 <= b && a <= t && t <= b {
            Ok(Interval { a, b, t })
        } else {
            Err(Error::BadInterval { a, b, t })
        }
    }

    fn unchecked(a: i64, b: i64, t: i64) -> Self {
        debug_assert!(a <= 0 && 0 <= b && a <= t && t <= b);
        Interval { a, b, t }
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    pub fn t(self) -> i64 {
        self.t
    }

    /// Number of edges of the underlying Munn tree.
    pub fn size(self) -> i64 {
        self.b - self.a
    }

    pub fn is_identity(self) -> bool {
        self == Interval::IDENTITY
    }

    pub fn normal_form(self) -> NormalForm {
        normal_form(self)
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.size(), self.a, self.t).cmp(&(other.size(), other.a, other.t))
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, t={})", self.a, self.b, self.t)
    }
}

/// Traces a word through the integer line.
pub fn eval_word(word: &[Gen]) -> Interval {
    let (mut a, mut b, mut t) = (0i64, 0i64, 0i64);
    for g in word {
        t += g.step();
        a = a.min(t);
        b = b.max(t);
    }
    Interval::unchecked(a, b, t)
}

/// Closed form of the product: translate the second trace by `t₁`, union
/// the intervals, compose the endpoints.
pub fn mult(m1: Interval, m2: Interval) -> Interval {
    Interval::unchecked(
        m1.a.min(m1.t + m2.a),
        m1.b.max(m1.t + m2.b),
        m1.t + m2.t,
    )
}

fn gen_interval(z: Gen) -> Interval {
    match z {
        Gen::X => Interval::unchecked(0, 1, 1),
        Gen::Y => Interval::unchecked(-1, 0, -1),
    }
}

pub fn left_mult(z: Gen, m: Interval) -> Interval {
    mult(gen_interval(z), m)
}

pub fn right_mult(m: Interval, z: Gen) -> Interval {
    mult(m, gen_interval(z))
}

/// The two normal-form shapes: `x^n y^k` with `0 <= k <= n` names the
/// elements with `a = 0`, and `x^n y^k x^j` with `0 <= n < k`, `0 <= j <= k`
/// the elements with `a < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type")]
pub enum NormalForm {
    #[serde(rename = "I")]
    TypeI { n: i64, k: i64 },
    #[serde(rename = "II")]
    TypeII { n: i64, k: i64, j: i64 },
}

impl NormalForm {
    pub fn type_i(n: i64, k: i64) -> Result<Self, Error> {
        if 0 <= k && k <= n {
            Ok(NormalForm::TypeI { n, k })
        } else {
            Err(Error::BadNormalForm(format!("type I needs 0 <= k <= n, got n={n}, k={k}")))
        }
    }

    pub fn type_ii(n: i64, k: i64, j: i64) -> Result<Self, Error> {
        if 0 <= n && n < k && 0 <= j && j <= k {
            Ok(NormalForm::TypeII { n, k, j })
        } else {
            Err(Error::BadNormalForm(format!(
                "type II needs 0 <= n < k and 0 <= j <= k, got n={n}, k={k}, j={j}"
            )))
        }
    }

    pub fn word(&self) -> Vec<Gen> {
        nf_word(self)
    }

    pub fn interval(&self) -> Interval {
        match *self {
            NormalForm::TypeI { n, k } => Interval::unchecked(0, n, n - k),
            NormalForm::TypeII { n, k, j } => Interval::unchecked(n - k, n, n - k + j),
        }
    }
}

impl fmt::Display for NormalForm {
    /// Exponent syntax with zero-power factors dropped; the identity is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, k, j) = match *self {
            NormalForm::TypeI { n, k } => (n, k, 0),
            NormalForm::TypeII { n, k, j } => (n, k, j),
        };
        let mut parts = Vec::new();
        if n > 0 {
            parts.push(format!("x^{n}"));
        }
        if k > 0 {
            parts.push(format!("y^{k}"));
        }
        if j > 0 {
            parts.push(format!("x^{j}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// The unique normal form naming `m`.
pub fn normal_form(m: Interval) -> NormalForm {
    if m.a == 0 {
        NormalForm::TypeI { n: m.b, k: m.b - m.t }
    } else {
        NormalForm::TypeII { n: m.b, k: m.b - m.a, j: m.t - m.a }
    }
}

/// The letters `x^n y^k (x^j)` of a normal form.
pub fn nf_word(f: &NormalForm) -> Vec<Gen> {
    let (n, k, j) = match *f {
        NormalForm::TypeI { n, k } => (n, k, 0),
        NormalForm::TypeII { n, k, j } => (n, k, j),
    };
    let mut word = Vec::with_capacity((n + k + j) as usize);
    word.extend(std::iter::repeat_n(Gen::X, n as usize));
    word.extend(std::iter::repeat_n(Gen::Y, k as usize));
    word.extend(std::iter::repeat_n(Gen::X, j as usize));
    word
}

/// Normal form of the word with its last letter dropped. Errors on the
/// identity, the root of the spanning tree.
pub fn nf_parent(f: &NormalForm) -> Result<NormalForm, Error> {
    match *f {
        NormalForm::TypeI { n: 0, k: 0 } => Err(Error::IdentityHasNoParent),
        NormalForm::TypeI { n, k: 0 } => Ok(NormalForm::TypeI { n: n - 1, k: 0 }),
        NormalForm::TypeI { n, k } => Ok(NormalForm::TypeI { n, k: k - 1 }),
        NormalForm::TypeII { n, k, j: 0 } if k - 1 == n => Ok(NormalForm::TypeI { n, k: n }),
        NormalForm::TypeII { n, k, j: 0 } => Ok(NormalForm::TypeII { n, k: k - 1, j: 0 }),
        NormalForm::TypeII { n, k, j } => Ok(NormalForm::TypeII { n, k, j: j - 1 }),
    }
}

/// All elements with `size <= n`, in canonical order. The ball of radius
/// `n` has `Σ_{s=0..n} (s+1)²` elements.
pub fn enumerate_ball(n: i64) -> Vec<Interval> {
    let mut out = Vec::new();
    for s in 0..=n.max(0) {
        for a in -s..=0 {
            let b = a + s;
            for t in a..=b {
                out.push(Interval::unchecked(a, b, t));
            }
        }
    }
    out
}

fn pow_word(n: i64, k: i64, j: i64) -> Vec<Gen> {
    let mut w = Vec::new();
    w.extend(std::iter::repeat_n(Gen::X, n as usize));
    w.extend(std::iter::repeat_n(Gen::Y, k as usize));
    w.extend(std::iter::repeat_n(Gen::X, j as usize));
    w
}

/// Checks the three rewriting identities behind the normal forms, for all
/// parameters up to `n_max`:
///
/// 1. `x^n y^k x^(k+1) = x^(n+1) y^(k+1) x^(k+1)` for `0 <= n < k`,
/// 2. `y x^n y^k = x^(n-1) y^n x^(n-k)` for `n >= 1`, `0 <= k <= n`,
/// 3. `y x^n y^k = x^(n-1) y^k` for `0 < n < k`.
pub fn verify_identities(n_max: i64) -> VerificationReport {
    let mut cases: Vec<(u8, i64, i64)> = Vec::new();
    for k in 0..=n_max {
        for n in 0..k {
            cases.push((1, n, k));
        }
    }
    for n in 1..=n_max {
        for k in 0..=n {
            cases.push((2, n, k));
        }
    }
    for k in 0..=n_max {
        for n in 1..k {
            cases.push((3, n, k));
        }
    }

    let mut builder =
        ReportBuilder::begin("identities", serde_json::json!({ "n_max": n_max }));
    builder.run(&cases, |&(family, n, k)| {
        let (lhs, rhs) = match family {
            1 => (pow_word(n, k, k + 1), pow_word(n + 1, k + 1, k + 1)),
            2 => {
                let mut lhs = vec![Gen::Y];
                lhs.extend(pow_word(n, k, 0));
                (lhs, pow_word(n - 1, n, n - k))
            }
            _ => {
                let mut lhs = vec![Gen::Y];
                lhs.extend(pow_word(n, k, 0));
                (lhs, pow_word(n - 1, k, 0))
            }
        };
        let (l, r) = (eval_word(&lhs), eval_word(&rhs));
        if l == r {
            Ok(())
        } else {
            Err(format!("identity {family} fails at n={n}, k={k}: {l} vs {r}"))
        }
    });
    builder.finish()
}

/// All `2^0 + ... + 2^len_max` words over `{x, y}`, shortest first.
pub fn all_words(len_max: usize) -> Vec<Vec<Gen>> {
    let mut out = Vec::new();
    for len in 0..=len_max {
        for bits in 0u64..(1u64 << len) {
            out.push(
                (0..len)
                    .map(|i| if bits >> i & 1 == 0 { Gen::X } else { Gen::Y })
                    .collect(),
            );
        }
    }
    out
}

/// Checks, on the ball of radius `n`, that normal forms biject with
/// elements and are closed under prefixes, and that every word of length
/// `<= len_max` evaluates to the interval its normal form names.
pub fn verify_normal_forms(n: i64, len_max: usize) -> VerificationReport {
    let mut builder = ReportBuilder::begin(
        "normal-forms",
        serde_json::json!({ "size": n, "len_max": len_max }),
    );

    let ball = enumerate_ball(n);
    builder.run(&ball, |&m| {
        let f = normal_form(m);
        if f.interval() != m {
            return Err(format!("normal_form({m}) names {} instead", f.interval()));
        }
        let word = f.word();
        if eval_word(&word) != m {
            return Err(format!("word of {f} evaluates to {} not {m}", eval_word(&word)));
        }
        for cut in 0..word.len() {
            let prefix = &word[..cut];
            let via_nf = normal_form(eval_word(prefix)).word();
            if via_nf != prefix {
                return Err(format!(
                    "prefix {} of {f} is not a normal form (renames to {})",
                    word_string(prefix),
                    word_string(&via_nf)
                ));
            }
        }
        Ok(())
    });

    // Injectivity: distinct elements get distinct words.
    let mut words: Vec<Vec<Gen>> = ball.iter().map(|&m| normal_form(m).word()).collect();
    words.sort();
    words.dedup();
    builder.case(if words.len() == ball.len() {
        Ok(())
    } else {
        Err(format!(
            "only {} distinct normal-form words for {} elements",
            words.len(),
            ball.len()
        ))
    });

    builder.run(&all_words(len_max), |word| {
        let m = eval_word(word);
        let renamed = eval_word(&normal_form(m).word());
        if renamed == m {
            Ok(())
        } else {
            Err(format!("word {} evaluates to {m} but its normal form names {renamed}", word_string(word)))
        }
    });

    builder.finish()
}
