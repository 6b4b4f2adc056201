//! Closed-form complexity evaluators for the k-to-k letter-power
//! substitution: the general piecewise formula over an arbitrary
//! modulo-recurrent source, its Sturmian specialization, the
//! window-complexity corollary check, the internal-substitution
//! stabilization detector, and the closed-form vs empirical comparison
//! harness.
//!
//! The general evaluator transcribes the piecewise statement verbatim; where
//! brute force disagrees with a branch, [`compare`] reports the mismatch per
//! branch rather than patching the formula.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::analysis::ComplexityProfile;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("n, k and l must all be >= 1")]
    BadParameters,
    #[error("source complexity {label} has no value at length {arg}")]
    OutOfRange { arg: usize, label: String },
    #[error("profile is not stabilized; refusing to treat it as ground truth")]
    UnstableProfile,
    #[error("profile covers lengths up to {n_max} but length {needed} is required")]
    ProfileTooShort { n_max: usize, needed: usize },
}

/// A source word's complexity function, queried by the closed-form
/// evaluators. Empirical backends expose a bounded valid range and
/// out-of-range queries are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceComplexity {
    /// `P(m) = m + 1`.
    Sturmian,
    /// `P(m) = size^m` (full complexity, e.g. the Champernowne word).
    FullComplexity { alphabet_size: u64 },
    /// Measured counts, index `m` holding `P(m)`.
    Empirical { p: Vec<u64>, label: String },
}

impl SourceComplexity {
    /// Wraps a stabilized empirical profile. Unstable profiles are rejected.
    pub fn from_profile(profile: &ComplexityProfile, label: &str) -> Result<Self, FormulaError> {
        if !profile.stable {
            return Err(FormulaError::UnstableProfile);
        }
        Ok(SourceComplexity::Empirical { p: profile.p.clone(), label: format!("empirical:{label}") })
    }

    pub fn label(&self) -> String {
        match self {
            SourceComplexity::Sturmian => "sturmian".to_string(),
            SourceComplexity::FullComplexity { alphabet_size } => {
                format!("full-complexity:{alphabet_size}")
            }
            SourceComplexity::Empirical { label, .. } => label.clone(),
        }
    }

    pub fn p(&self, m: usize) -> Result<u64, FormulaError> {
        match self {
            SourceComplexity::Sturmian => Ok(m as u64 + 1),
            SourceComplexity::FullComplexity { alphabet_size } => alphabet_size
                .checked_pow(m as u32)
                .ok_or(FormulaError::OutOfRange { arg: m, label: self.label() }),
            SourceComplexity::Empirical { p, .. } => {
                p.get(m).copied().ok_or(FormulaError::OutOfRange { arg: m, label: self.label() })
            }
        }
    }

    pub fn s(&self, m: usize) -> Result<i64, FormulaError> {
        Ok(self.p(m + 1)? as i64 - self.p(m)? as i64)
    }
}

/// Identifier of the piecewise branch that produced a closed-form value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// General, `n <= m0`.
    I1,
    /// General, `m0 < n <= M0` and `k < l`.
    I2,
    /// General, `m0 < n <= M0` and `l < k`.
    I3,
    /// General, `M0 < n < k + l`.
    I4,
    /// General, `n = (k+l)q`, `alpha = 0`.
    IIAlphaZero,
    /// General, `0 < alpha <= l`.
    IIAlphaLow,
    /// General, `l < alpha < k + l`.
    IIAlphaHigh,
    /// Sturmian, `n <= m0`: `n^2 + 2n`.
    SturmQuadratic,
    /// Sturmian, `m0 < n <= M0` and `k < l`: `(k+1)n + k`.
    SturmMidKL,
    /// Sturmian, `m0 < n <= M0` and `l < k`: `n^2 + 2n - 1`.
    SturmMidLK,
    /// Sturmian, `n > M0`: `(k+1)n + k - 1`.
    SturmLinear,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self {
            Branch::I1 => "I.1",
            Branch::I2 => "I.2",
            Branch::I3 => "I.3",
            Branch::I4 => "I.4",
            Branch::IIAlphaZero => "II.a0",
            Branch::IIAlphaLow => "II.0<a<=l",
            Branch::IIAlphaHigh => "II.l<a",
            Branch::SturmQuadratic => "S.n<=m0",
            Branch::SturmMidKL => "S.mid-k<l",
            Branch::SturmMidLK => "S.mid-l<k",
            Branch::SturmLinear => "S.n>M0",
        };
        f.write_str(id)
    }
}

/// Parameters the branch dispatch was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchParams {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub q: usize,
    pub alpha: usize,
    pub beta: usize,
    pub m0: usize,
    pub m_cap: usize,
}

impl BranchParams {
    fn new(n: usize, k: usize, l: usize) -> Self {
        let (q, alpha) = if n >= k + l { (n / (k + l), n % (k + l)) } else { (0, n) };
        BranchParams {
            n,
            k,
            l,
            q,
            alpha,
            beta: alpha.min(k),
            m0: k.min(l),
            m_cap: k.max(l),
        }
    }
}

/// A closed-form evaluation: the value plus the branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchedValue {
    pub value: u64,
    pub branch: Branch,
    pub params: BranchParams,
}

fn sum_p(src: &SourceComplexity, range: RangeInclusive<usize>) -> Result<i128, FormulaError> {
    let mut total = 0i128;
    for m in range {
        total += src.p(m)? as i128;
    }
    Ok(total)
}

/// Evaluates the general piecewise complexity formula for the external
/// substitution of `letter^l` in steps of `k` on a source with complexity
/// `src`. Exactly one branch applies to each `(n, k, l)`; empty sums are 0.
pub fn eval_general(
    n: usize,
    k: usize,
    l: usize,
    src: &SourceComplexity,
) -> Result<BranchedValue, FormulaError> {
    if n == 0 || k == 0 || l == 0 {
        return Err(FormulaError::BadParameters);
    }
    let params = BranchParams::new(n, k, l);
    let p = |m: usize| -> Result<i128, FormulaError> { Ok(src.p(m)? as i128) };
    let s = |m: usize| -> Result<i128, FormulaError> { Ok(src.s(m)? as i128) };
    let (branch, value) = if n < k + l {
        let m0 = params.m0;
        let m_cap = params.m_cap;
        if n <= m0 {
            (Branch::I1, 1 + 2 * sum_p(src, 1..=n.saturating_sub(1))? + p(n)?)
        } else if n <= m_cap && k < l {
            (Branch::I2, 1 + 2 * sum_p(src, 1..=k - 1)? + (n - k + 1) as i128 * p(k)?)
        } else if n <= m_cap && l < k {
            (
                Branch::I3,
                (n - l + 1) as i128 * p(n - l + 1)? - 2 * s(n - l)?
                    + 2 * sum_p(src, n - l + 1..=n - 1)?
                    + p(n)?,
            )
        } else {
            (
                Branch::I4,
                (n - l + 1) as i128 * p(n - l + 1)? - 2 * s(n - l)?
                    + 2 * sum_p(src, n - l + 1..=k.saturating_sub(1))?
                    + (n - k + 1) as i128 * p(k)?,
            )
        }
    } else {
        let BranchParams { q, alpha, beta, .. } = params;
        let base = (k + 1) * q;
        if alpha == 0 {
            (
                Branch::IIAlphaZero,
                (k as i128 - 1) * p(base)? + (l as i128 + 1) * p(base - 1)?,
            )
        } else if alpha <= l {
            (
                Branch::IIAlphaLow,
                (l - alpha + 1) as i128 * p(base - 1)?
                    + 2 * sum_p(src, base + 1..=base + beta.saturating_sub(1))?
                    + (k.abs_diff(alpha) + 1) as i128 * p(base + beta)?,
            )
        } else {
            (
                Branch::IIAlphaHigh,
                (alpha - l + 1) as i128 * p(base + alpha - l + 1)? - 2 * s(base + alpha - l)?
                    + 2 * sum_p(src, base + alpha - l + 1..=base + beta.saturating_sub(1))?
                    + (k.abs_diff(alpha) + 1) as i128 * p(base + beta)?,
            )
        }
    };
    debug_assert!(value >= 0);
    Ok(BranchedValue { value: value as u64, branch, params })
}

/// Evaluates the Sturmian closed form. When `k = l` the two middle branches
/// are vacuous.
pub fn eval_sturmian(n: usize, k: usize, l: usize) -> Result<BranchedValue, FormulaError> {
    if n == 0 || k == 0 || l == 0 {
        return Err(FormulaError::BadParameters);
    }
    let params = BranchParams::new(n, k, l);
    let (n_, k_) = (n as u64, k as u64);
    let (branch, value) = if n <= params.m0 {
        (Branch::SturmQuadratic, n_ * n_ + 2 * n_)
    } else if n <= params.m_cap && k < l {
        (Branch::SturmMidKL, (k_ + 1) * n_ + k_)
    } else if n <= params.m_cap && l < k {
        (Branch::SturmMidLK, n_ * n_ + 2 * n_ - 1)
    } else {
        (Branch::SturmLinear, (k_ + 1) * n_ + k_ - 1)
    };
    Ok(BranchedValue { value, branch, params })
}

/// One row of a closed-form vs empirical comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareRow {
    pub n: usize,
    pub branch: Branch,
    pub closed: u64,
    pub empirical: u64,
    pub matched: bool,
}

/// Evaluates `closed_form` against a stabilized empirical profile over
/// `n_range`. Mismatches are reported per row, never patched.
pub fn compare(
    n_range: RangeInclusive<usize>,
    closed_form: impl Fn(usize) -> Result<BranchedValue, FormulaError>,
    empirical: &ComplexityProfile,
) -> Result<Vec<CompareRow>, FormulaError> {
    if !empirical.stable {
        return Err(FormulaError::UnstableProfile);
    }
    let mut rows = Vec::new();
    for n in n_range {
        if n > empirical.n_max {
            return Err(FormulaError::ProfileTooShort { n_max: empirical.n_max, needed: n });
        }
        let bv = closed_form(n)?;
        let emp = empirical.p(n);
        rows.push(CompareRow {
            n,
            branch: bv.branch,
            closed: bv.value,
            empirical: emp,
            matched: bv.value == emp,
        });
    }
    Ok(rows)
}

/// Result of the window-complexity corollary check at length `k + l`:
/// the substituted word is not modulo-recurrent because its window
/// complexity at `k + l` falls short of its factor complexity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport {
    pub k: usize,
    pub l: usize,
    /// Empirical window complexity of the transformed word at `k + l`.
    pub pf_v: u64,
    /// Empirical factor complexity of the transformed word at `k + l`.
    pub p_v: u64,
    /// Source complexity at `k + 1`, the value the corollary claims `pf_v`
    /// equals.
    pub p_u_k1: u64,
    /// Whether the claimed identity `pf_v = P_u(k+1)` holds empirically.
    pub window_matches_claim: bool,
    /// Whether `pf_v != p_v`, which is what breaks modulo-recurrence.
    pub distinct: bool,
    /// False when the transformed profile never stabilized; the verdict is
    /// then inconclusive.
    pub conclusive: bool,
}

/// Checks the corollary on a measured profile of the transformed word.
pub fn corollary_check(
    k: usize,
    l: usize,
    u_profile: &SourceComplexity,
    v_profile: &ComplexityProfile,
) -> Result<CorollaryReport, FormulaError> {
    let len = k + l;
    if v_profile.n_max < len {
        return Err(FormulaError::ProfileTooShort { n_max: v_profile.n_max, needed: len });
    }
    let pf_v = v_profile.pf(len);
    let p_v = v_profile.p(len);
    let p_u_k1 = u_profile.p(k + 1)?;
    Ok(CorollaryReport {
        k,
        l,
        pf_v,
        p_v,
        p_u_k1,
        window_matches_claim: pf_v == p_u_k1,
        distinct: pf_v != p_v,
        conclusive: v_profile.stable,
    })
}

/// Smallest `n` such that `P(m) = (k+1)m + k - 1` for all `m` in
/// `[n, n_max]`, or `None` when even `n_max` misses the linear regime.
pub fn internal_stabilization(v_profile: &ComplexityProfile, k: usize) -> Option<usize> {
    let linear = |m: usize| ((k + 1) * m + k - 1) as u64;
    let mut n = None;
    for m in (1..=v_profile.n_max).rev() {
        if v_profile.p(m) == linear(m) {
            n = Some(m);
        } else {
            break;
        }
    }
    n
}
