//! Concrete infinite-word families: morphic fixed points, characteristic
//! Sturmian words, the binary Champernowne word, and periodic words.
//!
//! Every generator is a pure function of its parameters: `prefix(n)` is
//! deterministic and `prefix(m)` is a prefix of `prefix(n)` for `m <= n`.

use std::sync::Arc;

use thiserror::Error;

use crate::word::{Alphabet, FiniteWord, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("morphism is not prolongable: image of the seed must start with the seed and have length >= 2")]
    NotProlongable,
    #[error("morphism image for a symbol is empty")]
    EmptyImage,
    #[error("directive entries must all be >= 1")]
    BadDirective,
    #[error("periodic pattern must be nonempty")]
    EmptyPattern,
    #[error("cannot parse generator descriptor {0:?}")]
    BadDescriptor(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A morphism together with a seed letter whose image starts with itself,
/// so that iterating from the seed converges to an infinite fixed point.
#[derive(Debug, Clone)]
pub struct MorphismSpec {
    alphabet: Arc<Alphabet>,
    images: Vec<Vec<u8>>,
    seed: u8,
}

impl MorphismSpec {
    pub fn new(
        alphabet: Arc<Alphabet>,
        images: Vec<Vec<u8>>,
        seed: u8,
    ) -> Result<Self, GeneratorError> {
        assert_eq!(images.len(), alphabet.size());
        if images.iter().any(|im| im.is_empty()) {
            return Err(GeneratorError::EmptyImage);
        }
        let seed_image = &images[seed as usize];
        if seed_image.len() < 2 || seed_image[0] != seed {
            return Err(GeneratorError::NotProlongable);
        }
        Ok(MorphismSpec { alphabet, images, seed })
    }

    /// The Fibonacci morphism `a -> ab`, `b -> a` over `{a, b}`.
    pub fn fibonacci() -> Self {
        MorphismSpec::new(Alphabet::binary(), vec![vec![0, 1], vec![0]], 0).unwrap()
    }

    /// Parses rule syntax like `a=ab;b=a;seed=a`. The alphabet is the set of
    /// rule left-hand sides in order of appearance.
    pub fn parse(text: &str) -> Result<Self, GeneratorError> {
        let bad = || GeneratorError::BadDescriptor(text.to_string());
        let mut rules: Vec<(char, String)> = Vec::new();
        let mut seed_glyph = None;
        for part in text.split(';') {
            let (lhs, rhs) = part.split_once('=').ok_or_else(bad)?;
            if lhs == "seed" {
                let mut chars = rhs.chars();
                seed_glyph = Some(chars.next().ok_or_else(bad)?);
                if chars.next().is_some() {
                    return Err(bad());
                }
            } else {
                let mut chars = lhs.chars();
                let g = chars.next().ok_or_else(bad)?;
                if chars.next().is_some() {
                    return Err(bad());
                }
                rules.push((g, rhs.to_string()));
            }
        }
        if rules.is_empty() {
            return Err(bad());
        }
        let alphabet = Arc::new(Alphabet::new(rules.iter().map(|&(g, _)| g))?);
        let images = rules
            .iter()
            .map(|(_, rhs)| {
                rhs.chars()
                    .map(|c| alphabet.index_of(c).ok_or(WordError::UnknownGlyph(c)))
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let seed_glyph = seed_glyph.unwrap_or(rules[0].0);
        let seed = alphabet.index_of(seed_glyph).ok_or_else(bad)?;
        MorphismSpec::new(alphabet, images, seed)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// First `n` symbols of the fixed point, generated incrementally: start
    /// with the seed image, then keep appending the image of the next symbol
    /// of the output itself.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        let mut out: Vec<u8> = self.images[self.seed as usize].clone();
        let mut i = 1;
        while out.len() < n {
            let s = out[i];
            out.extend_from_slice(&self.images[s as usize]);
            i += 1;
        }
        out.truncate(n);
        FiniteWord::new(Arc::clone(&self.alphabet), out)
    }
}

/// Continued-fraction directive of a characteristic Sturmian word. The last
/// entry repeats forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianSpec {
    directive: Vec<u32>,
}

impl SturmianSpec {
    pub fn new(directive: Vec<u32>) -> Result<Self, GeneratorError> {
        if directive.is_empty() || directive.iter().any(|&d| d == 0) {
            return Err(GeneratorError::BadDirective);
        }
        Ok(SturmianSpec { directive })
    }

    pub fn directive(&self) -> &[u32] {
        &self.directive
    }

    fn entry(&self, i: usize) -> u32 {
        *self.directive.get(i).unwrap_or(self.directive.last().unwrap())
    }

    /// First `n` symbols via the standard-word recurrence
    /// `s_{-1} = b`, `s_0 = a`, `s_i = s_{i-1}^{d_i} s_{i-2}`.
    /// All-ones directive yields the Fibonacci word.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        let alphabet = Alphabet::binary();
        let mut prev: Vec<u8> = vec![1]; // s_{-1} = b
        let mut cur: Vec<u8> = vec![0]; // s_0 = a
        let mut i = 0;
        while cur.len() < n {
            let mut next = Vec::with_capacity(cur.len() * self.entry(i) as usize + prev.len());
            for _ in 0..self.entry(i) {
                next.extend_from_slice(&cur);
            }
            next.extend_from_slice(&prev);
            prev = cur;
            cur = next;
            i += 1;
        }
        cur.truncate(n);
        FiniteWord::new(alphabet, cur)
    }
}

/// First `n` symbols of the binary Champernowne word: the concatenation of
/// the binary expansions of 0, 1, 2, 3, ...
pub fn champernowne_prefix(n: usize) -> FiniteWord {
    let alphabet = Arc::new(Alphabet::new(['0', '1']).unwrap());
    let mut out: Vec<u8> = Vec::with_capacity(n + 64);
    let mut value: u64 = 0;
    while out.len() < n {
        if value == 0 {
            out.push(0);
        } else {
            let bits = 64 - value.leading_zeros();
            for shift in (0..bits).rev() {
                out.push(((value >> shift) & 1) as u8);
            }
        }
        value += 1;
    }
    out.truncate(n);
    FiniteWord::new(alphabet, out)
}

/// `pattern` repeated and truncated to `n` symbols.
pub fn periodic_prefix(pattern: &FiniteWord, n: usize) -> Result<FiniteWord, GeneratorError> {
    if pattern.is_empty() {
        return Err(GeneratorError::EmptyPattern);
    }
    let data = pattern.symbols().iter().cycle().copied().take(n).collect();
    Ok(FiniteWord::new(Arc::clone(pattern.alphabet()), data))
}

/// A deterministic lazy producer of prefixes of one infinite word.
#[derive(Debug, Clone)]
pub enum WordSource {
    Fibonacci,
    Sturmian(SturmianSpec),
    Champernowne,
    Periodic(FiniteWord),
    Morphic(MorphismSpec),
}

impl WordSource {
    /// Parses a CLI descriptor: `fibonacci`, `sturmian:<d1,d2,...>`,
    /// `champernowne`, `periodic:<pattern>`, `morphic:<a=ab;b=a;seed=a>`.
    pub fn parse(desc: &str) -> Result<Self, GeneratorError> {
        let bad = || GeneratorError::BadDescriptor(desc.to_string());
        match desc {
            "fibonacci" => return Ok(WordSource::Fibonacci),
            "champernowne" => return Ok(WordSource::Champernowne),
            _ => {}
        }
        let (kind, arg) = desc.split_once(':').ok_or_else(bad)?;
        match kind {
            "sturmian" => {
                let directive = arg
                    .split(',')
                    .map(|s| s.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(WordSource::Sturmian(SturmianSpec::new(directive)?))
            }
            "periodic" => {
                let pattern = FiniteWord::parse(arg)?;
                if pattern.is_empty() {
                    return Err(GeneratorError::EmptyPattern);
                }
                Ok(WordSource::Periodic(pattern))
            }
            "morphic" => Ok(WordSource::Morphic(MorphismSpec::parse(arg)?)),
            _ => Err(bad()),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            WordSource::Fibonacci => "fibonacci".to_string(),
            WordSource::Sturmian(spec) => {
                let d: Vec<String> = spec.directive().iter().map(|d| d.to_string()).collect();
                format!("sturmian:{}", d.join(","))
            }
            WordSource::Champernowne => "champernowne".to_string(),
            WordSource::Periodic(p) => format!("periodic:{p}"),
            WordSource::Morphic(_) => "morphic:<custom>".to_string(),
        }
    }

    pub fn alphabet(&self) -> Arc<Alphabet> {
        match self {
            WordSource::Fibonacci | WordSource::Sturmian(_) => Alphabet::binary(),
            WordSource::Champernowne => Arc::new(Alphabet::new(['0', '1']).unwrap()),
            WordSource::Periodic(p) => Arc::clone(p.alphabet()),
            WordSource::Morphic(spec) => Arc::clone(spec.alphabet()),
        }
    }

    /// The first `n` symbols of the infinite word.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        match self {
            WordSource::Fibonacci => MorphismSpec::fibonacci().prefix(n),
            WordSource::Sturmian(spec) => spec.prefix(n),
            WordSource::Champernowne => champernowne_prefix(n),
            WordSource::Periodic(p) => periodic_prefix(p, n).unwrap(),
            WordSource::Morphic(spec) => spec.prefix(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // phi^7(a) = phi^6(a) . phi^5(a) = abaababaabaababaababa . abaababaabaab,
    // extended one step; agrees with the standard-word construction below.
    const FIB35: &str = "abaababaabaababaababaabaababaabaaba";

    #[test]
    fn fibonacci_prefixes() {
        let spec = MorphismSpec::fibonacci();
        assert_eq!(spec.prefix(8).to_string(), "abaababa");
        assert_eq!(spec.prefix(12).to_string(), "abaababaabaa");
        assert_eq!(spec.prefix(35).to_string(), FIB35);
        assert_eq!(spec.prefix(0).len(), 0);
    }

    #[test]
    fn constant_morphism() {
        let spec = MorphismSpec::parse("a=aa").unwrap();
        assert_eq!(spec.prefix(5).to_string(), "aaaaa");
    }

    #[test]
    fn non_prolongable_rejected() {
        assert!(matches!(MorphismSpec::parse("a=ba;b=a"), Err(GeneratorError::NotProlongable)));
        assert!(matches!(MorphismSpec::parse("a=a"), Err(GeneratorError::NotProlongable)));
    }

    #[test]
    fn sturmian_all_ones_is_fibonacci() {
        let spec = SturmianSpec::new(vec![1]).unwrap();
        assert_eq!(spec.prefix(35).to_string(), FIB35);
        assert_eq!(spec.prefix(0).len(), 0);
    }

    #[test]
    fn sturmian_directive_tail_repeats() {
        let a = SturmianSpec::new(vec![2, 1]).unwrap();
        let b = SturmianSpec::new(vec![2, 1, 1, 1]).unwrap();
        assert_eq!(a.prefix(200), b.prefix(200));
    }

    #[test]
    fn champernowne_prefix_examples() {
        assert_eq!(champernowne_prefix(10).to_string(), "0110111001");
        assert_eq!(champernowne_prefix(0).len(), 0);
    }

    #[test]
    fn periodic_examples() {
        let ab = FiniteWord::parse("ab").unwrap();
        assert_eq!(periodic_prefix(&ab, 5).unwrap().to_string(), "ababa");
        let a = FiniteWord::parse("a").unwrap();
        assert_eq!(periodic_prefix(&a, 4).unwrap().to_string(), "aaaa");
    }

    #[test]
    fn descriptor_round_trip() {
        for desc in ["fibonacci", "champernowne", "sturmian:1,2,3", "periodic:abc"] {
            let src = WordSource::parse(desc).unwrap();
            assert_eq!(src.descriptor(), desc);
        }
        let m = WordSource::parse("morphic:a=ab;b=a;seed=a").unwrap();
        assert_eq!(m.prefix(12).to_string(), "abaababaabaa");
        assert!(WordSource::parse("nope").is_err());
        assert!(WordSource::parse("sturmian:0,1").is_err());
        assert!(WordSource::parse("periodic:").is_err());
    }
}
