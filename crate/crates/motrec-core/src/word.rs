//! Alphabets, symbols and finite words.
//!
//! Symbols are stored as small integer indices into an [`Alphabet`] glyph
//! table. Words serialize as plain glyph strings, one character per symbol.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Hard cap on alphabet size; keeps symbol indices in a `u8` with room to
/// spare for one extension letter.
pub const MAX_ALPHABET: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet must contain between 1 and {MAX_ALPHABET} distinct glyphs")]
    BadAlphabet,
    #[error("duplicate glyph {0:?} in alphabet")]
    DuplicateGlyph(char),
    #[error("glyph {0:?} is not in the alphabet")]
    UnknownGlyph(char),
}

/// A finite ordered set of symbol glyphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    pub fn new(glyphs: impl IntoIterator<Item = char>) -> Result<Self, WordError> {
        let glyphs: Vec<char> = glyphs.into_iter().collect();
        if glyphs.is_empty() || glyphs.len() > MAX_ALPHABET {
            return Err(WordError::BadAlphabet);
        }
        for (i, &g) in glyphs.iter().enumerate() {
            if glyphs[..i].contains(&g) {
                return Err(WordError::DuplicateGlyph(g));
            }
        }
        Ok(Alphabet { glyphs })
    }

    /// The standard binary alphabet `{a, b}`.
    pub fn binary() -> Arc<Self> {
        Arc::new(Alphabet::new(['a', 'b']).unwrap())
    }

    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn glyph(&self, symbol: u8) -> char {
        self.glyphs[symbol as usize]
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn index_of(&self, glyph: char) -> Option<u8> {
        self.glyphs.iter().position(|&g| g == glyph).map(|i| i as u8)
    }

    pub fn contains(&self, glyph: char) -> bool {
        self.index_of(glyph).is_some()
    }

    /// Returns a copy of `self` enlarged with `glyph`, together with the
    /// symbol index of the new letter. Fails if `glyph` is already present.
    pub fn extended(&self, glyph: char) -> Result<(Arc<Alphabet>, u8), WordError> {
        if self.contains(glyph) {
            return Err(WordError::DuplicateGlyph(glyph));
        }
        let mut glyphs = self.glyphs.clone();
        glyphs.push(glyph);
        let idx = (glyphs.len() - 1) as u8;
        Ok((Arc::new(Alphabet::new(glyphs)?), idx))
    }
}

/// A finite word over an [`Alphabet`], stored as symbol indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWord {
    alphabet: Arc<Alphabet>,
    data: Vec<u8>,
}

impl FiniteWord {
    pub fn new(alphabet: Arc<Alphabet>, data: Vec<u8>) -> Self {
        debug_assert!(data.iter().all(|&s| (s as usize) < alphabet.size()));
        FiniteWord { alphabet, data }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        FiniteWord { alphabet, data: Vec::new() }
    }

    /// Parses a glyph string against `alphabet`.
    pub fn from_glyphs(alphabet: Arc<Alphabet>, text: &str) -> Result<Self, WordError> {
        let data = text
            .chars()
            .map(|c| alphabet.index_of(c).ok_or(WordError::UnknownGlyph(c)))
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(FiniteWord { alphabet, data })
    }

    /// Builds a word from a glyph string, inferring the alphabet from the
    /// distinct glyphs in order of first appearance.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut glyphs = Vec::new();
        for c in text.chars() {
            if !glyphs.contains(&c) {
                glyphs.push(c);
            }
        }
        if glyphs.is_empty() {
            // Empty word over a placeholder unary alphabet.
            return Ok(FiniteWord::empty(Arc::new(Alphabet::new(['a'])?)));
        }
        let alphabet = Arc::new(Alphabet::new(glyphs)?);
        FiniteWord::from_glyphs(alphabet, text)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn truncated(&self, n: usize) -> FiniteWord {
        FiniteWord {
            alphabet: Arc::clone(&self.alphabet),
            data: self.data[..n.min(self.data.len())].to_vec(),
        }
    }

    /// All start positions at which `pattern` occurs in `self`, overlaps
    /// included, in increasing order. A pattern over glyphs outside this
    /// word's alphabet simply never occurs.
    pub fn occurrences(&self, pattern: &FiniteWord) -> Vec<usize> {
        assert!(!pattern.is_empty(), "occurrences of the empty word are not defined");
        // Remap the pattern through glyphs so callers may pass patterns
        // built over a different Alphabet value.
        let mapped: Option<Vec<u8>> = pattern
            .data
            .iter()
            .map(|&s| self.alphabet.index_of(pattern.alphabet.glyph(s)))
            .collect();
        let Some(needle) = mapped else { return Vec::new() };
        if needle.len() > self.data.len() {
            return Vec::new();
        }
        self.data
            .windows(needle.len())
            .enumerate()
            .filter(|(_, w)| *w == needle.as_slice())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.data {
            write!(f, "{}", self.alphabet.glyph(s))?;
        }
        Ok(())
    }
}
