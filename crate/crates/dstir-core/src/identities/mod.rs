//! Machine verification of the identity catalogue.
//!
//! Each [`IdentityId`] names one identity relating the number families;
//! [`check`] evaluates both sides over every admissible parameter tuple
//! in range and reports the first mismatch. Comparisons are exact: in
//! symbolic mode both sides are elements of `Q[λ]`, in sampled mode both
//! sides are rationals evaluated on a deterministic λ (and, where
//! needed, x) grid.
//!
//! Failures are data, not errors: a failing check returns a report
//! carrying the lexicographically first counterexample in scan order
//! (increasing `n`, then `k`/`p`, then `r`, then sample index).
//!
//! [`IdentityId::T13Probe`] is a deliberate negative control: it checks
//! a known-wrong variant of the `T13` sum (weight `L(n,k)` in place of
//! `L(k,p)`) and is expected to fail. The runner treats an
//! expected-and-observed failure as suite success.

mod checks;
pub mod sampling;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exactalg::{render_rat, LambdaPoly, Rat};

pub use checks::DEFAULT_R_MAX;

/// Names of the checkable identities.
///
/// `T*` are theorem-level identities, `E*` standalone bridge equations,
/// `L11` the inversion lemma, and the `Rt*` pair the series round trips
/// and classical-limit comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    T1,
    T2a,
    T2b,
    T3,
    T4,
    T5a,
    T5b,
    T6,
    T7,
    T8,
    T8Limit,
    T9,
    T10,
    T10Corollary,
    T12,
    L11,
    T13,
    T13Probe,
    T14,
    T15,
    E16,
    E19,
    E22,
    E23_1,
    E53,
    E57,
    RtExpLog,
    RtLimits,
}

impl IdentityId {
    pub const ALL: [IdentityId; 28] = [
        IdentityId::T1,
        IdentityId::T2a,
        IdentityId::T2b,
        IdentityId::T3,
        IdentityId::T4,
        IdentityId::T5a,
        IdentityId::T5b,
        IdentityId::T6,
        IdentityId::T7,
        IdentityId::T8,
        IdentityId::T8Limit,
        IdentityId::T9,
        IdentityId::T10,
        IdentityId::T10Corollary,
        IdentityId::T12,
        IdentityId::L11,
        IdentityId::T13,
        IdentityId::T13Probe,
        IdentityId::T14,
        IdentityId::T15,
        IdentityId::E16,
        IdentityId::E19,
        IdentityId::E22,
        IdentityId::E23_1,
        IdentityId::E53,
        IdentityId::E57,
        IdentityId::RtExpLog,
        IdentityId::RtLimits,
    ];

    /// Stable external name, used by the CLI and reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::T1 => "T1",
            IdentityId::T2a => "T2a",
            IdentityId::T2b => "T2b",
            IdentityId::T3 => "T3",
            IdentityId::T4 => "T4",
            IdentityId::T5a => "T5a",
            IdentityId::T5b => "T5b",
            IdentityId::T6 => "T6",
            IdentityId::T7 => "T7",
            IdentityId::T8 => "T8",
            IdentityId::T8Limit => "T8limit",
            IdentityId::T9 => "T9",
            IdentityId::T10 => "T10",
            IdentityId::T10Corollary => "T10corollary",
            IdentityId::T12 => "T12",
            IdentityId::L11 => "L11",
            IdentityId::T13 => "T13",
            IdentityId::T13Probe => "T13probe",
            IdentityId::T14 => "T14",
            IdentityId::T15 => "T15",
            IdentityId::E16 => "E16",
            IdentityId::E19 => "E19",
            IdentityId::E22 => "E22",
            IdentityId::E23_1 => "E23_1",
            IdentityId::E53 => "E53",
            IdentityId::E57 => "E57",
            IdentityId::RtExpLog => "RT_exp_log",
            IdentityId::RtLimits => "RT_limits",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        IdentityId::ALL.iter().copied().find(|id| id.name() == s)
    }

    /// True for negative controls that must fail.
    pub fn expected_fail(self) -> bool {
        self == IdentityId::T13Probe
    }

    /// The mode each identity is checked in by default. Identities
    /// involving rational functions of `x` or `1/λ` default to the
    /// sampled grid; everything else is symbolic in `Q[λ]`.
    pub fn default_mode(self, seed: u64) -> CheckMode {
        match self {
            IdentityId::T7 | IdentityId::T12 => CheckMode::sampled(seed),
            _ => CheckMode::Symbolic,
        }
    }
}

impl core::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// How a check compares its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Exact equality in `Q[λ]` for every tuple.
    Symbolic,
    /// Exact equality in `Q` on the deterministic λ/x grids; `seed`
    /// extends the base λ grid with `extra_samples` further points.
    Sampled { seed: u64, extra_samples: u32 },
}

impl CheckMode {
    pub fn sampled(seed: u64) -> CheckMode {
        CheckMode::Sampled {
            seed,
            extra_samples: 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckMode::Symbolic => "symbolic",
            CheckMode::Sampled { .. } => "sampled",
        }
    }
}

/// First failing tuple of a check, with both sides rendered by the
/// canonical printer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, String)>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over one range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub mode: CheckMode,
    pub n_max: usize,
    /// Bound on the shift parameter for the r-Stirling identities; other
    /// identities ignore it.
    pub r_max: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    /// Whether this report counts as success for the whole suite:
    /// ordinary identities must pass; negative controls must fail once
    /// the range is large enough to reach their counterexample (the
    /// probe's first failing tuple has `n = 2`, so smaller ranges pass
    /// vacuously).
    pub fn as_expected(&self) -> bool {
        if self.id.expected_fail() {
            !self.pass || self.n_max < 2
        } else {
            self.pass
        }
    }
}

/// One comparison with both sides in `Q[λ]`.
pub(crate) struct PolyCase {
    pub params: Vec<(&'static str, String)>,
    pub lhs: LambdaPoly,
    pub rhs: LambdaPoly,
}

impl PolyCase {
    pub(crate) fn new(
        params: Vec<(&'static str, String)>,
        lhs: LambdaPoly,
        rhs: LambdaPoly,
    ) -> Self {
        PolyCase { params, lhs, rhs }
    }
}

/// One comparison with both sides in `Q`.
pub(crate) struct RatCase {
    pub params: Vec<(&'static str, String)>,
    pub lhs: Rat,
    pub rhs: Rat,
}

pub(crate) fn param_int(name: &'static str, v: usize) -> (&'static str, String) {
    (name, v.to_string())
}

pub(crate) fn param_rat(name: &'static str, v: &Rat) -> (&'static str, String) {
    (name, render_rat(v))
}

/// Checks one identity over `0..=n_max` (and `r <= DEFAULT_R_MAX` where
/// a shift parameter applies).
///
/// Symbolic mode compares polynomial sides exactly. Sampled mode
/// evaluates them on the λ grid — except for the two identities whose
/// sides are rational functions: `T7` has a dedicated sampled evaluator
/// working with `1/λ` directly, and `T12` has no symbolic form at all,
/// so it runs sampled regardless of the requested mode.
pub fn check(id: IdentityId, n_max: usize, mode: CheckMode) -> IdentityReport {
    let r_max = DEFAULT_R_MAX;
    match (id, mode) {
        (IdentityId::T12, m) => {
            let (seed, extra) = match m {
                CheckMode::Sampled {
                    seed,
                    extra_samples,
                } => (seed, extra_samples),
                CheckMode::Symbolic => (0, 4),
            };
            let used = CheckMode::Sampled {
                seed,
                extra_samples: extra,
            };
            report(
                id,
                n_max,
                r_max,
                used,
                run_rat(checks::t12_cases(n_max, seed, extra)),
            )
        }
        (
            IdentityId::T7,
            CheckMode::Sampled {
                seed,
                extra_samples,
            },
        ) => report(
            id,
            n_max,
            r_max,
            mode,
            run_rat(checks::t7_sampled_cases(n_max, seed, extra_samples)),
        ),
        (_, CheckMode::Symbolic) => report(
            id,
            n_max,
            r_max,
            mode,
            run_poly(checks::poly_cases(id, n_max, r_max)),
        ),
        (
            _,
            CheckMode::Sampled {
                seed,
                extra_samples,
            },
        ) => {
            let grid = sampling::lambda_grid(seed, extra_samples);
            let cases = checks::poly_cases(id, n_max, r_max);
            report(id, n_max, r_max, mode, run_poly_sampled(cases, &grid))
        }
    }
}

/// Runs every identity with its default mode. Reports come back in
/// [`IdentityId::ALL`] order regardless of how they were computed.
pub fn check_all(n_max: usize, seed: u64) -> Vec<IdentityReport> {
    IdentityId::ALL
        .iter()
        .map(|&id| check(id, n_max, id.default_mode(seed)))
        .collect()
}

fn report(
    id: IdentityId,
    n_max: usize,
    r_max: usize,
    mode: CheckMode,
    counterexample: Option<Counterexample>,
) -> IdentityReport {
    IdentityReport {
        id,
        mode,
        n_max,
        r_max,
        pass: counterexample.is_none(),
        counterexample,
    }
}

fn run_poly(cases: Vec<PolyCase>) -> Option<Counterexample> {
    for case in cases {
        if case.lhs != case.rhs {
            return Some(Counterexample {
                params: case.params,
                lhs: case.lhs.to_string(),
                rhs: case.rhs.to_string(),
            });
        }
    }
    None
}

fn run_poly_sampled(cases: Vec<PolyCase>, grid: &[Rat]) -> Option<Counterexample> {
    for case in cases {
        for lam in grid {
            let lhs = case.lhs.eval(lam);
            let rhs = case.rhs.eval(lam);
            if lhs != rhs {
                let mut params = case.params.clone();
                params.push(param_rat("lambda", lam));
                return Some(Counterexample {
                    params,
                    lhs: render_rat(&lhs),
                    rhs: render_rat(&rhs),
                });
            }
        }
    }
    None
}

fn run_rat(cases: Vec<RatCase>) -> Option<Counterexample> {
    for case in cases {
        if case.lhs != case.rhs {
            return Some(Counterexample {
                params: case.params,
                lhs: render_rat(&case.lhs),
                rhs: render_rat(&case.rhs),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.name()), Some(id));
        }
        assert_eq!(IdentityId::parse("T99"), None);
    }

    #[test]
    fn t1_passes_small() {
        let r = check(IdentityId::T1, 4, CheckMode::Symbolic);
        assert!(r.pass, "{:?}", r.counterexample);
        // n_max = 1 already exercises the shifted row: at (n, k) = (1, 0)
        // both sides reduce to 1, by hand: lhs = 1·1·1 + 1·0·1 and
        // rhs = (1 - λ) + λ.
        assert!(check(IdentityId::T1, 1, CheckMode::Symbolic).pass);
        let lhs = crate::numbers::s2_lambda(2, 1);
        let rhs = &LambdaPoly::one() - &LambdaPoly::lambda();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn t15_passes_small() {
        let r = check(IdentityId::T15, 4, CheckMode::Symbolic);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn probe_fails_at_documented_tuple() {
        let r = check(IdentityId::T13Probe, 2, CheckMode::Symbolic);
        assert!(!r.pass);
        assert!(r.as_expected());
        let ce = r.counterexample.unwrap();
        assert_eq!(
            ce.params,
            alloc::vec![("n", "2".to_string()), ("p", "1".to_string())]
        );
        assert_eq!(ce.lhs, "1 + λ");
        assert_eq!(ce.rhs, "-1 + 2*λ");
    }

    #[test]
    fn all_pass_at_small_range() {
        for r in check_all(3, 7) {
            assert!(
                r.as_expected(),
                "{} unexpectedly {}: {:?}",
                r.id,
                if r.pass { "passed" } else { "failed" },
                r.counterexample
            );
        }
    }

    #[test]
    fn vacuous_range_passes() {
        for r in check_all(0, 0) {
            assert!(r.as_expected(), "{} not as expected at n_max = 0", r.id);
            if !r.id.expected_fail() {
                assert!(r.pass, "{} failed at n_max = 0", r.id);
            }
        }
    }

    #[test]
    fn determinism() {
        let a = check_all(3, 42);
        let b = check_all(3, 42);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn symbolic_implies_sampled() {
        for id in [IdentityId::T1, IdentityId::T9, IdentityId::E53] {
            let sym = check(id, 4, CheckMode::Symbolic);
            let smp = check(id, 4, CheckMode::sampled(123));
            assert!(sym.pass && smp.pass, "{} disagrees between modes", id);
        }
    }
}
