//! Empirical measurement on finite prefixes: factor complexity, first
//! difference, window complexity, special factors, and bounded
//! modulo-recurrence checking.
//!
//! Profiles are empirical. A profile may only be trusted as a stand-in for
//! the infinite word once the stability heuristic in [`stabilize`] has
//! flagged it stable; nothing here assumes monotonicity of `P`.

use std::collections::HashMap;

use thiserror::Error;

use crate::automaton::SuffixAutomaton;
use crate::generators::WordSource;
use crate::transforms::{self, SubstitutionSpec, TransformError};
use crate::word::FiniteWord;

/// Default cap on the stabilization prefix length (2^24 symbols).
pub const DEFAULT_PREFIX_CAP: usize = 1 << 24;

const STABILIZE_START: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("n_max must satisfy 1 <= n_max < |u| (n_max = {n_max}, |u| = {len})")]
    PrefixTooShort { n_max: usize, len: usize },
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Automaton,
    Auto,
}

impl Engine {
    fn resolve(self, len: usize) -> Engine {
        match self {
            Engine::Auto => {
                if len >= 4096 {
                    Engine::Automaton
                } else {
                    Engine::Naive
                }
            }
            other => other,
        }
    }
}

/// Per-length empirical counts for one analyzed prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub n_max: usize,
    /// `p[n]` = distinct factors of length `n`, `0 <= n <= n_max`; `p[0] = 1`.
    pub p: Vec<u64>,
    /// `s[n] = p[n+1] - p[n]`, `0 <= n <= n_max - 1`.
    pub s: Vec<i64>,
    /// `pf[n]` = distinct length-`n` blocks at positions that are multiples
    /// of `n`, `1 <= n <= n_max`; `pf[0] = 1`.
    pub pf: Vec<u64>,
    /// Symbols analyzed.
    pub prefix_len: usize,
    /// Set by [`stabilize`] when two successive doublings agree.
    pub stable: bool,
}

impl ComplexityProfile {
    pub fn p(&self, n: usize) -> u64 {
        self.p[n]
    }

    pub fn s(&self, n: usize) -> i64 {
        self.s[n]
    }

    pub fn pf(&self, n: usize) -> u64 {
        self.pf[n]
    }
}

/// Counts distinct length-`n` factors of `u` for `1 <= n <= n_max` and
/// derives the first differences. The naive engine hashes every window; the
/// automaton engine reads per-length counts off a suffix automaton.
pub fn count_factors(
    u: &FiniteWord,
    n_max: usize,
    engine: Engine,
) -> Result<ComplexityProfile, AnalysisError> {
    if n_max == 0 || n_max >= u.len() {
        return Err(AnalysisError::PrefixTooShort { n_max, len: u.len() });
    }
    let p = match engine.resolve(u.len()) {
        Engine::Naive => naive_counts(u.symbols(), n_max),
        _ => SuffixAutomaton::build(u.symbols()).factor_counts(n_max),
    };
    let s = (0..n_max).map(|n| p[n + 1] as i64 - p[n] as i64).collect();
    let pf = window_complexity(u, n_max)?;
    Ok(ComplexityProfile { n_max, p, s, pf, prefix_len: u.len(), stable: false })
}

fn naive_counts(symbols: &[u8], n_max: usize) -> Vec<u64> {
    let mut p = vec![0u64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let set: std::collections::HashSet<&[u8]> = symbols.windows(n).collect();
        p[n] = set.len() as u64;
    }
    p
}

/// Window complexity: distinct blocks `u[jn..jn+n)` over all `j >= 0`, for
/// `1 <= n <= n_max`. Index 0 of the result holds the empty-word count 1.
pub fn window_complexity(u: &FiniteWord, n_max: usize) -> Result<Vec<u64>, AnalysisError> {
    if n_max == 0 || n_max > u.len() {
        return Err(AnalysisError::PrefixTooShort { n_max, len: u.len() });
    }
    let symbols = u.symbols();
    let mut pf = vec![0u64; n_max + 1];
    pf[0] = 1;
    for n in 1..=n_max {
        let set: std::collections::HashSet<&[u8]> =
            symbols.chunks_exact(n).collect();
        pf[n] = set.len() as u64;
    }
    Ok(pf)
}

/// Extension counts for one factor length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFactor {
    pub factor: String,
    pub right_extensions: usize,
    pub left_extensions: usize,
}

/// Right- and left-special factors of length `n`, with the extension sums
/// needed by the identity `S(n) = sum(d+ - 1) = sum(d- - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFactorReport {
    pub n: usize,
    pub right_special: Vec<SpecialFactor>,
    pub left_special: Vec<SpecialFactor>,
    pub bispecial: Vec<String>,
    /// `sum over length-n factors of (d+(w) - 1)`, boundary occurrences skipped.
    pub right_sum: i64,
    pub left_sum: i64,
}

/// Computes extension counts for every distinct length-`n` factor from the
/// occurrences fully inside the prefix. The occurrence at the final position
/// has no successor and is skipped on the right; position 0 is skipped on
/// the left.
pub fn special_factors(u: &FiniteWord, n: usize) -> Result<SpecialFactorReport, AnalysisError> {
    if n == 0 || n + 1 >= u.len() {
        return Err(AnalysisError::PrefixTooShort { n_max: n, len: u.len() });
    }
    let symbols = u.symbols();
    let mut ext: HashMap<&[u8], (u64, u64)> = HashMap::new();
    for (pos, w) in symbols.windows(n).enumerate() {
        let entry = ext.entry(w).or_insert((0, 0));
        if pos + n < symbols.len() {
            entry.0 |= 1 << symbols[pos + n];
        }
        if pos > 0 {
            entry.1 |= 1 << symbols[pos - 1];
        }
    }
    let mut factors: Vec<(&[u8], u64, u64)> =
        ext.into_iter().map(|(w, (r, l))| (w, r, l)).collect();
    factors.sort_unstable_by(|a, b| a.0.cmp(b.0));

    let render = |w: &[u8]| -> String {
        w.iter().map(|&s| u.alphabet().glyph(s)).collect()
    };
    let mut report = SpecialFactorReport {
        n,
        right_special: Vec::new(),
        left_special: Vec::new(),
        bispecial: Vec::new(),
        right_sum: 0,
        left_sum: 0,
    };
    for (w, right_mask, left_mask) in factors {
        let dr = right_mask.count_ones() as usize;
        let dl = left_mask.count_ones() as usize;
        report.right_sum += dr as i64 - 1;
        report.left_sum += dl as i64 - 1;
        let entry = SpecialFactor {
            factor: render(w),
            right_extensions: dr,
            left_extensions: dl,
        };
        if dr >= 2 && dl >= 2 {
            report.bispecial.push(entry.factor.clone());
        }
        if dr >= 2 {
            report.right_special.push(entry.clone());
        }
        if dl >= 2 {
            report.left_special.push(entry);
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MrVerdict {
    Pass,
    Fail,
    Inconclusive,
}

/// One `(factor, modulus)` check result. `witness` holds a missing residue
/// class on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrEntry {
    pub n: usize,
    pub factor: String,
    pub modulus: usize,
    pub verdict: MrVerdict,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuloRecurrenceReport {
    pub n_max: usize,
    pub mod_max: usize,
    pub entries: Vec<MrEntry>,
}

impl ModuloRecurrenceReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == MrVerdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MrEntry> {
        self.entries.iter().filter(|e| e.verdict == MrVerdict::Fail)
    }

    pub fn count(&self, verdict: MrVerdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }
}

/// Checks, for every factor of length `n <= n_max` and every modulus
/// `i <= mod_max`, whether the occurrence positions cover all residues
/// mod `i`. A factor with fewer than `mod_max` occurrences in the prefix is
/// flagged inconclusive rather than failed, since occurrence gaps of
/// non-uniformly-recurrent words grow without bound.
pub fn check_modulo_recurrence(
    u: &FiniteWord,
    n_max: usize,
    mod_max: usize,
) -> Result<ModuloRecurrenceReport, AnalysisError> {
    if n_max == 0 || n_max >= u.len() {
        return Err(AnalysisError::PrefixTooShort { n_max, len: u.len() });
    }
    let symbols = u.symbols();
    let render = |w: &[u8]| -> String { w.iter().map(|&s| u.alphabet().glyph(s)).collect() };
    let mut entries = Vec::new();
    for n in 1..=n_max {
        let mut positions: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for (pos, w) in symbols.windows(n).enumerate() {
            positions.entry(w).or_default().push(pos);
        }
        let mut factors: Vec<(&[u8], Vec<usize>)> = positions.into_iter().collect();
        factors.sort_unstable_by(|a, b| a.0.cmp(b.0));
        for (w, occ) in factors {
            let factor = render(w);
            for modulus in 1..=mod_max {
                let mut seen = vec![false; modulus];
                for &p in &occ {
                    seen[p % modulus] = true;
                }
                let missing = seen.iter().position(|&s| !s);
                let (verdict, witness) = match missing {
                    None => (MrVerdict::Pass, None),
                    Some(r) if occ.len() < mod_max => (MrVerdict::Inconclusive, Some(r)),
                    Some(r) => (MrVerdict::Fail, Some(r)),
                };
                entries.push(MrEntry { n, factor: factor.clone(), modulus, verdict, witness });
            }
        }
    }
    Ok(ModuloRecurrenceReport { n_max, mod_max, entries })
}

/// A word pipeline to stabilize: a generator plus an optional substitution.
/// For transformed words the last `k + l` output symbols are discarded so
/// that the analyzed prefix is free of truncation artifacts.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub source: WordSource,
    pub transform: Option<SubstitutionSpec>,
}

impl Pipeline {
    pub fn plain(source: WordSource) -> Self {
        Pipeline { source, transform: None }
    }

    pub fn transformed(source: WordSource, spec: SubstitutionSpec) -> Self {
        Pipeline { source, transform: Some(spec) }
    }

    /// The analyzed word for a source prefix of length `source_len`.
    pub fn word(&self, source_len: usize) -> Result<FiniteWord, AnalysisError> {
        let u = self.source.prefix(source_len);
        match &self.transform {
            None => Ok(u),
            Some(spec) => {
                let v = transforms::substitute(&u, spec)?;
                let keep = v.len().saturating_sub(spec.output_period());
                Ok(v.truncated(keep))
            }
        }
    }
}

/// Doubles the source prefix length starting at 4096 until two successive
/// doublings produce identical `P(n)` for all `n <= n_max`, or `cap` is hit.
/// The returned profile carries `stable = false` at the cap; unstable
/// profiles must not be treated as ground truth.
pub fn stabilize(
    pipeline: &Pipeline,
    n_max: usize,
    engine: Engine,
    cap: usize,
) -> Result<ComplexityProfile, AnalysisError> {
    stabilize_word(pipeline, n_max, engine, cap).map(|(_, profile)| profile)
}

/// Like [`stabilize`], additionally returning the analyzed word itself.
pub fn stabilize_word(
    pipeline: &Pipeline,
    n_max: usize,
    engine: Engine,
    cap: usize,
) -> Result<(FiniteWord, ComplexityProfile), AnalysisError> {
    let mut source_len = STABILIZE_START.max((n_max + 2).next_power_of_two());
    while pipeline.word(source_len)?.len() <= n_max + 1 {
        source_len *= 2;
    }
    let mut word = pipeline.word(source_len)?;
    let mut profile = count_factors(&word, n_max, engine)?;
    while source_len * 2 <= cap {
        source_len *= 2;
        let next_word = pipeline.word(source_len)?;
        let next = count_factors(&next_word, n_max, engine)?;
        let stable = next.p == profile.p;
        word = next_word;
        profile = next;
        if stable {
            profile.stable = true;
            return Ok((word, profile));
        }
    }
    Ok((word, profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::SubstitutionSpec;

    #[test]
    fn constant_word_counts() {
        let u = WordSource::parse("periodic:a").unwrap().prefix(50);
        let profile = count_factors(&u, 3, Engine::Naive).unwrap();
        assert_eq!(profile.p, vec![1, 1, 1, 1]);
        assert_eq!(profile.s, vec![0, 0, 0]);
    }

    #[test]
    fn rejects_short_prefix() {
        let u = FiniteWord::parse("abab").unwrap();
        assert!(count_factors(&u, 4, Engine::Naive).is_err());
        assert!(count_factors(&u, 0, Engine::Naive).is_err());
        assert!(window_complexity(&u, 5).is_err());
    }

    #[test]
    fn fibonacci_complexity_both_engines() {
        let u = WordSource::Fibonacci.prefix(10_000);
        for engine in [Engine::Naive, Engine::Automaton] {
            let profile = count_factors(&u, 50, engine).unwrap();
            for n in 1..=50usize {
                assert_eq!(profile.p(n), n as u64 + 1);
            }
        }
    }

    #[test]
    fn champernowne_full_complexity() {
        let u = WordSource::Champernowne.prefix(100_000);
        let profile = count_factors(&u, 8, Engine::Automaton).unwrap();
        for n in 1..=8usize {
            assert_eq!(profile.p(n), 1 << n);
        }
    }

    #[test]
    fn periodic_window_alignment() {
        let u = WordSource::parse("periodic:ab").unwrap().prefix(100);
        let pf = window_complexity(&u, 4).unwrap();
        assert_eq!(pf[2], 1); // only "ab" is read at even positions
        let profile = count_factors(&u, 10, Engine::Naive).unwrap();
        for n in 1..=10usize {
            assert_eq!(profile.p(n), 2);
        }
    }

    #[test]
    fn fibonacci_special_factors() {
        let u = WordSource::Fibonacci.prefix(20_000);
        for n in 1..=20 {
            let report = special_factors(&u, n).unwrap();
            assert_eq!(report.right_special.len(), 1, "n = {n}");
            assert_eq!(report.right_special[0].right_extensions, 2);
            assert_eq!(report.right_sum, 1);
            assert_eq!(report.left_sum, 1);
        }
    }

    #[test]
    fn constant_word_has_no_special_factors() {
        let u = WordSource::parse("periodic:a").unwrap().prefix(50);
        let report = special_factors(&u, 3).unwrap();
        assert!(report.right_special.is_empty());
        assert!(report.left_special.is_empty());
    }

    #[test]
    fn champernowne_every_factor_right_special() {
        let u = WordSource::Champernowne.prefix(100_000);
        let report = special_factors(&u, 3).unwrap();
        assert_eq!(report.right_special.len(), 8);
        assert!(report.right_special.iter().all(|f| f.right_extensions == 2));
        assert_eq!(report.right_sum, 8); // S(3) = P(4) - P(3) = 8
    }

    #[test]
    fn fibonacci_is_modulo_recurrent_within_bounds() {
        let u = WordSource::Fibonacci.prefix(100_000);
        let report = check_modulo_recurrence(&u, 8, 10).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn periodic_word_fails_modulo_recurrence() {
        let u = WordSource::parse("periodic:ab").unwrap().prefix(1000);
        let report = check_modulo_recurrence(&u, 1, 2).unwrap();
        let fail = report
            .entries
            .iter()
            .find(|e| e.factor == "a" && e.modulus == 2)
            .unwrap();
        assert_eq!(fail.verdict, MrVerdict::Fail);
        assert_eq!(fail.witness, Some(1)); // "a" occupies only even residues
    }

    #[test]
    fn transformed_word_fails_modulo_recurrence() {
        let pipeline = Pipeline::transformed(
            WordSource::Fibonacci,
            SubstitutionSpec::new(2, 3, 'c', false).unwrap(),
        );
        let v = pipeline.word(100_000).unwrap();
        let report = check_modulo_recurrence(&v, 8, 10).unwrap();
        assert!(report.failures().next().is_some());
    }

    #[test]
    fn stabilize_fibonacci() {
        let profile = stabilize(
            &Pipeline::plain(WordSource::Fibonacci),
            50,
            Engine::Auto,
            DEFAULT_PREFIX_CAP,
        )
        .unwrap();
        assert!(profile.stable);
        for n in 1..=50usize {
            assert_eq!(profile.p(n), n as u64 + 1);
        }
    }

    #[test]
    fn stabilize_constant_word() {
        let profile = stabilize(
            &Pipeline::plain(WordSource::parse("periodic:a").unwrap()),
            5,
            Engine::Naive,
            DEFAULT_PREFIX_CAP,
        )
        .unwrap();
        assert!(profile.stable);
        assert_eq!(profile.p, vec![1; 6]);
    }

    #[test]
    fn stabilize_champernowne() {
        let profile = stabilize(
            &Pipeline::plain(WordSource::Champernowne),
            12,
            Engine::Automaton,
            DEFAULT_PREFIX_CAP,
        )
        .unwrap();
        assert!(profile.stable);
        for n in 1..=12usize {
            assert_eq!(profile.p(n), 1u64 << n);
        }
    }

    #[test]
    fn stabilize_reports_unstable_at_cap() {
        let profile =
            stabilize(&Pipeline::plain(WordSource::Champernowne), 12, Engine::Automaton, 8192)
                .unwrap();
        assert!(!profile.stable);
    }

    #[test]
    fn identity_first_difference_vs_extensions() {
        let u = WordSource::Fibonacci.prefix(50_000);
        let profile = count_factors(&u, 21, Engine::Automaton).unwrap();
        for n in 1..=20 {
            let report = special_factors(&u, n).unwrap();
            assert_eq!(profile.s(n), report.right_sum);
            assert_eq!(profile.s(n), report.left_sum);
        }
    }
}
