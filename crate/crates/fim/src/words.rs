//! Words over an inverse alphabet `X ∪ X⁻¹` and free reduction.
//!
//! Generators are ascii lowercase letters; the formal inverse of `a` is
//! written `A`. A word is any finite letter sequence; a reduced word has no
//! adjacent `a A` or `A a` pair. Reduced words are the vertices of the Cayley
//! tree of the free group on `X`, which is where Munn trees live.

use crate::error::Error;
use std::cmp::Ordering;
use std::fmt;

/// Largest exponent accepted by the `a^e` shorthand.
pub const MAX_EXPONENT: u64 = 1_000_000;

/// A finite set of generators, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, Error> {
        let mut v: Vec<char> = letters.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&c) = v.iter().find(|c| !c.is_ascii_lowercase()) {
            return Err(Error::BadGenerator(c));
        }
        Ok(Alphabet { letters: v })
    }

    pub fn contains(&self, gen: char) -> bool {
        self.letters.binary_search(&gen).is_ok()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }
}

/// One letter: a generator (`inv: false`) or its inverse (`inv: true`).
///
/// The derived order (generator, then sign) gives `a < A < b < B`, the
/// letter order used everywhere words are compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: char,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: char, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn symbol(self) -> char {
        if self.inv {
            self.gen.to_ascii_uppercase()
        } else {
            self.gen
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Lex `input` into (symbol, count) runs.
///
/// Whitespace separates nothing and is skipped; a symbol may be followed by
/// `^<digits>`. The single word `1` denotes the empty word. Symbol validity
/// is the caller's concern.
pub(crate) fn lex_runs(input: &str) -> Result<Vec<(char, u64)>, Error> {
    let trimmed = input.trim();
    if trimmed == "1" {
        return Ok(Vec::new());
    }
    let mut runs = Vec::new();
    let mut chars = trimmed.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_whitespace() {
            continue;
        }
        if c == '^' {
            return Err(Error::BadExponent("exponent with no preceding letter".into()));
        }
        let mut count = 1u64;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().copied() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(Error::BadExponent(format!("missing digits after {c}^")));
            }
            count = digits
                .parse::<u64>()
                .map_err(|_| Error::ExponentTooLarge(u64::MAX))?;
            if count > MAX_EXPONENT {
                return Err(Error::ExponentTooLarge(count));
            }
        }
        runs.push((c, count));
    }
    Ok(runs)
}

/// A word over `X ∪ X⁻¹`, not necessarily reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self, Error> {
        if let Some(l) = letters.iter().find(|l| !alphabet.contains(l.gen)) {
            return Err(Error::UnknownSymbol(l.symbol()));
        }
        Ok(GenWord { alphabet, letters })
    }

    /// Parses `input` over `alphabet`: lowercase letters are generators,
    /// uppercase their inverses, `a^5` repeats, whitespace is ignored and
    /// `1` is the empty word.
    pub fn parse(input: &str, alphabet: &Alphabet) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for (symbol, count) in lex_runs(input)? {
            let gen = symbol.to_ascii_lowercase();
            if !symbol.is_ascii_alphabetic() || !alphabet.contains(gen) {
                return Err(Error::UnknownSymbol(symbol));
            }
            let letter = Letter::new(gen, symbol.is_ascii_uppercase());
            letters.extend(std::iter::repeat_n(letter, count as usize));
        }
        Ok(GenWord { alphabet: alphabet.clone(), letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: reversed, with every letter inverted.
    pub fn inverse(&self) -> Self {
        GenWord {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &GenWord) -> Result<Self, Error> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(GenWord { alphabet: self.alphabet.clone(), letters })
    }

    /// Keeps only the letters on generator `gen`; the image of `self` under
    /// the retraction sending every other generator to the identity.
    pub fn retract_to_monogenic(&self, gen: char) -> Result<Self, Error> {
        if !self.alphabet.contains(gen) {
            return Err(Error::UnknownSymbol(gen));
        }
        let letters = self.letters.iter().copied().filter(|l| l.gen == gen).collect();
        Ok(GenWord { alphabet: Alphabet::new([gen])?, letters })
    }

    pub fn reduced(&self) -> ReducedWord {
        ReducedWord::from_letters(self.letters.iter().copied())
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A freely reduced word.
///
/// Ordered by length first, then letter by letter, so enumerations and JSON
/// vertex lists are deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

// The empty word is the group identity; `is_identity` is its emptiness test.
#[allow(clippy::len_without_is_empty)]
impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = ReducedWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends one letter, cancelling it against the tail if possible.
    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Drops the final letter; `None` on the identity.
    pub fn parent(&self) -> Option<ReducedWord> {
        let mut letters = self.letters.clone();
        letters.pop()?;
        Some(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
