//! The k-to-k substitution of a letter power: every symbol at a position
//! divisible by `k + 1` is replaced by `letter^l`, all other symbols are
//! copied in order. The letter may be external to the source alphabet (the
//! output alphabet is enlarged) or internal.

use std::ops::RangeInclusive;
use std::sync::Arc;

use thiserror::Error;

use crate::word::{FiniteWord, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("step k and power l must both be >= 1")]
    BadParameters,
    #[error("letter {0:?} is in the source alphabet but the spec is marked external")]
    LetterNotExternal(char),
    #[error("letter {0:?} is not in the source alphabet but the spec is marked internal")]
    LetterNotInternal(char),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Parameters of the substitution `S_k^{x^l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstitutionSpec {
    pub k: usize,
    pub power: usize,
    pub letter: char,
    pub internal: bool,
}

impl SubstitutionSpec {
    pub fn new(k: usize, power: usize, letter: char, internal: bool) -> Result<Self, TransformError> {
        if k == 0 || power == 0 {
            return Err(TransformError::BadParameters);
        }
        Ok(SubstitutionSpec { k, power, letter, internal })
    }

    /// Block period of the source decomposition: one substituted letter
    /// followed by `k` kept letters.
    pub fn source_period(&self) -> usize {
        self.k + 1
    }

    /// Block period of the output: `letter^l` followed by `k` kept letters.
    pub fn output_period(&self) -> usize {
        self.k + self.power
    }
}

/// Whether source position `p` is substituted (positions 0, k+1, 2(k+1), ...).
pub fn is_substituted(p: usize, k: usize) -> bool {
    p % (k + 1) == 0
}

/// Length of the transform of a length-`source_len` prefix.
pub fn output_len(source_len: usize, spec: &SubstitutionSpec) -> usize {
    let substituted = source_len.div_ceil(spec.source_period());
    source_len + (spec.power - 1) * substituted
}

/// Source position generating output position `p`: positions inside a
/// substituted run map to the run's substituted source letter.
pub fn source_position(p: usize, spec: &SubstitutionSpec) -> usize {
    let period = spec.output_period();
    let block = p / period;
    let off = p % period;
    if off < spec.power {
        block * spec.source_period()
    } else {
        block * spec.source_period() + off - spec.power + 1
    }
}

/// Applies `S_k^{letter^l}` to a finite prefix. Complete `(k+1)`-blocks are
/// processed in order; a trailing partial block has its leading position
/// substituted if present.
pub fn substitute(u: &FiniteWord, spec: &SubstitutionSpec) -> Result<FiniteWord, TransformError> {
    let source_alphabet = u.alphabet();
    let member = source_alphabet.contains(spec.letter);
    if spec.internal && !member {
        return Err(TransformError::LetterNotInternal(spec.letter));
    }
    if !spec.internal && member {
        return Err(TransformError::LetterNotExternal(spec.letter));
    }
    let (alphabet, letter_symbol) = if spec.internal {
        (Arc::clone(source_alphabet), source_alphabet.index_of(spec.letter).unwrap())
    } else {
        let (ext, sym) = source_alphabet.extended(spec.letter)?;
        (ext, sym)
    };
    let mut out = Vec::with_capacity(output_len(u.len(), spec));
    for (p, &s) in u.symbols().iter().enumerate() {
        if is_substituted(p, spec.k) {
            out.extend(std::iter::repeat(letter_symbol).take(spec.power));
        } else {
            out.push(s);
        }
    }
    Ok(FiniteWord::new(alphabet, out))
}

/// Source-factor lengths that can generate an output factor of length `n_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginLengths {
    /// Closed interval of lengths from the interior case analysis.
    pub core: RangeInclusive<usize>,
    /// Extra lengths reachable only by factors whose ends fall on a
    /// substituted-run boundary.
    pub boundary: Vec<usize>,
}

impl OriginLengths {
    pub fn contains(&self, len: usize) -> bool {
        self.core.contains(&len) || self.boundary.contains(&len)
    }
}

/// Computes [`OriginLengths`] for a factor of the transformed word of length
/// `n_v >= 1`. Writing `n_v = (k+l)q + alpha`, the interior lengths are
/// `(k+1)q` alone when `alpha = 0` (with `(k+1)q +- 1` as boundary cases),
/// `(k+1)q + j` for `j = 0..min(alpha, k)` when `alpha <= l`, and
/// `(k+1)q + j` for `j = alpha-l+1..=min(alpha, k)` when `alpha > l`.
pub fn origin_lengths(n_v: usize, k: usize, l: usize) -> OriginLengths {
    assert!(n_v >= 1 && k >= 1 && l >= 1);
    let period = k + l;
    let q = n_v / period;
    let alpha = n_v % period;
    let beta = alpha.min(k);
    let base = (k + 1) * q;
    if alpha == 0 {
        OriginLengths { core: base..=base, boundary: vec![base - 1, base + 1] }
    } else if alpha <= l {
        OriginLengths { core: base..=base + beta, boundary: Vec::new() }
    } else {
        OriginLengths { core: base + alpha - l + 1..=base + beta, boundary: Vec::new() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::WordSource;

    fn external(k: usize, l: usize) -> SubstitutionSpec {
        SubstitutionSpec::new(k, l, 'c', false).unwrap()
    }

    #[test]
    fn golden_fibonacci_transform() {
        let u = WordSource::Fibonacci.prefix(64);
        let v = substitute(&u, &external(2, 3)).unwrap();
        assert!(v.to_string().starts_with("cccbacccbacccaacccaacccabcccab"));
    }

    #[test]
    fn unit_power_substitution() {
        let u = FiniteWord::parse("abab").unwrap();
        let v = substitute(&u, &external(1, 1)).unwrap();
        assert_eq!(v.to_string(), "cbcb");
    }

    #[test]
    fn internal_substitution_doubles_positions() {
        let u = FiniteWord::parse("aaaaaa").unwrap();
        let spec = SubstitutionSpec::new(2, 2, 'a', true).unwrap();
        let v = substitute(&u, &spec).unwrap();
        assert_eq!(v.to_string(), "aaaaaaaa");
    }

    #[test]
    fn flag_consistency_enforced() {
        let u = FiniteWord::parse("abab").unwrap();
        let spec = SubstitutionSpec::new(1, 2, 'a', false).unwrap();
        assert_eq!(substitute(&u, &spec), Err(TransformError::LetterNotExternal('a')));
        let spec = SubstitutionSpec::new(1, 2, 'c', true).unwrap();
        assert_eq!(substitute(&u, &spec), Err(TransformError::LetterNotInternal('c')));
    }

    #[test]
    fn output_length_formula() {
        let spec = external(2, 3);
        for n in 0..40 {
            let u = WordSource::Fibonacci.prefix(n);
            assert_eq!(substitute(&u, &spec).unwrap().len(), output_len(n, &spec));
        }
    }

    #[test]
    fn origin_lengths_examples() {
        let o = origin_lengths(10, 2, 3);
        assert_eq!(o.core, 6..=6);
        assert_eq!(o.boundary, vec![5, 7]);

        let o = origin_lengths(1, 2, 3);
        assert_eq!(o.core, 0..=1);
        assert!(o.boundary.is_empty());

        let o = origin_lengths(7, 2, 3);
        assert_eq!(o.core, 3..=5);
    }
}
