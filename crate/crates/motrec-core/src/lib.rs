//! Infinite-word machinery for studying the k-to-k substitution of a letter
//! power: generators for classical infinite words, the substitution itself,
//! empirical factor/window complexity measurement with a naive and a
//! suffix-automaton engine, and exact evaluators for the closed-form
//! complexity of substituted words.

pub mod analysis;
pub mod automaton;
pub mod formulas;
pub mod generators;
pub mod transforms;
pub mod word;

pub use analysis::{
    check_modulo_recurrence, count_factors, special_factors, stabilize, stabilize_word,
    window_complexity,
    AnalysisError, ComplexityProfile, Engine, ModuloRecurrenceReport, MrEntry, MrVerdict,
    Pipeline, SpecialFactorReport, DEFAULT_PREFIX_CAP,
};
pub use automaton::SuffixAutomaton;
pub use formulas::{
    compare, corollary_check, eval_general, eval_sturmian, internal_stabilization, Branch,
    BranchedValue, CompareRow, CorollaryReport, FormulaError, SourceComplexity,
};
pub use generators::{
    champernowne_prefix, periodic_prefix, GeneratorError, MorphismSpec, SturmianSpec, WordSource,
};
pub use transforms::{origin_lengths, substitute, OriginLengths, SubstitutionSpec, TransformError};
pub use word::{Alphabet, FiniteWord, WordError};
