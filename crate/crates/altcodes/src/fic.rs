//! The decision pipeline for "is this finite code induced by an
//! alternative pair?": reduction routes for the easy shapes, the gcd
//! pretest, the bounded exhaustive search over quotient-derived
//! candidates, and the complete enumeration of all (and all strong)
//! inducing decompositions.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_integer::Integer;
use serde::Serialize;

use crate::alt;
use crate::check;
use crate::lang::{FiniteLanguage, Letter, Word};
use crate::{Error, Result};

/// An ordered pair `(X, Y)` asserted to satisfy `Z = XY` with an
/// unambiguous product (`|X|·|Y| = |Z|`), hence an alternative code
/// inducing `Z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Decomposition {
    pub x: FiniteLanguage,
    pub y: FiniteLanguage,
}

impl Decomposition {
    /// Re-checks the defining equations against a target language.
    pub fn is_valid_for(&self, z: &FiniteLanguage) -> bool {
        !self.x.is_empty()
            && !self.y.is_empty()
            && !self.x.contains_epsilon()
            && !self.y.contains_epsilon()
            && self.x.len() * self.y.len() == z.len()
            && self
                .x
                .product(&self.y)
                .map(|p| &p == z)
                .unwrap_or(false)
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} · {}", self.x, self.y)
    }
}

/// Shape classification driving the reduction routes. Precedence:
/// a length-1 word, then a one-letter alphabet, then a common first
/// letter, then a common last letter; otherwise the code is in standard
/// form (all lengths ≥ 2, at least two distinct first letters and two
/// distinct last letters).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum StandardFormClass {
    Standard,
    HasLength1,
    OneLetterAlphabet,
    CommonFirst(Letter),
    CommonLast(Letter),
}

/// Classifies a non-empty, ε-free language.
pub fn classify_standard_form(z: &FiniteLanguage) -> StandardFormClass {
    assert!(
        !z.is_empty() && !z.contains_epsilon(),
        "classify_standard_form requires a non-empty ε-free language"
    );
    if z.iter().any(|w| w.len() == 1) {
        return StandardFormClass::HasLength1;
    }
    if z.alphabet().len() == 1 {
        return StandardFormClass::OneLetterAlphabet;
    }
    let firsts: BTreeSet<Letter> = z.iter().map(|w| w.first().expect("ε excluded")).collect();
    if firsts.len() == 1 {
        return StandardFormClass::CommonFirst(*firsts.iter().next().expect("one element"));
    }
    let lasts: BTreeSet<Letter> = z.iter().map(|w| w.last().expect("ε excluded")).collect();
    if lasts.len() == 1 {
        return StandardFormClass::CommonLast(*lasts.iter().next().expect("one element"));
    }
    StandardFormClass::Standard
}

/// Outcome of the block-size gcd obstruction test.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum GcdPretest {
    /// The non-empty first-letter blocks have coprime sizes, so no
    /// alternative pair can induce the code.
    Reject,
    /// Common divisors ≥ 2 of the block sizes — the admissible sizes for
    /// the right factor `Y`.
    Inconclusive { d_set: BTreeSet<usize> },
}

/// Greatest common divisor of the non-empty first-letter block sizes.
/// Letters never occurring first contribute no block and no constraint.
pub fn block_gcd(z: &FiniteLanguage) -> usize {
    let partition = z
        .partition_by_first_letter()
        .expect("caller guarantees ε ∉ Z");
    partition
        .block_sizes()
        .iter()
        .fold(0usize, |g, (_, n)| g.gcd(n))
}

/// Runs the gcd pretest on a standard-form code.
pub fn gcd_pretest(z: &FiniteLanguage) -> GcdPretest {
    let g = block_gcd(z);
    let d_set: BTreeSet<usize> = (2..=g).filter(|d| g.is_multiple_of(*d)).collect();
    if d_set.is_empty() {
        GcdPretest::Reject
    } else {
        GcdPretest::Inconclusive { d_set }
    }
}

/// Limits on the candidate search. Exhausting a limit aborts with an
/// explicit error; it is never converted into a verdict.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Maximum number of candidate sets tried (each `Y` candidate and
    /// each `X` candidate counts as one, so sweeps whose `X`-pool is
    /// empty are bounded too).
    pub max_candidates: u64,
    /// Wall-clock limit for a single decision.
    pub timeout: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: 100_000_000,
            timeout: None,
        }
    }
}

/// Candidate counters for one decision run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct SearchStats {
    pub u_tried: u64,
    pub y_tried: u64,
    pub x_tried: u64,
}

impl SearchStats {
    /// Total candidates examined.
    pub fn candidates(&self) -> u64 {
        self.y_tried + self.x_tried
    }
}

/// One step of the search: a prefix `u` of the chosen minimal word and
/// the candidate pool `S = u⁻¹Z_t` it generates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FicStep {
    pub u: Word,
    pub s: FiniteLanguage,
}

/// The deterministic search trace: the chosen minimal word, its block
/// letter, the admissible `|Y|` sizes, and the `(u, S)` pools visited in
/// order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FicTrace {
    pub w: Word,
    pub block_letter: Letter,
    pub d_set: BTreeSet<usize>,
    pub steps: Vec<FicStep>,
}

struct BudgetGuard<'a> {
    budget: &'a SearchBudget,
    started: Instant,
    used: u64,
}

impl<'a> BudgetGuard<'a> {
    fn new(budget: &'a SearchBudget) -> Self {
        BudgetGuard {
            budget,
            started: Instant::now(),
            used: 0,
        }
    }

    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget.max_candidates {
            return Err(Error::BudgetExceeded {
                reason: format!("candidate limit {} reached", self.budget.max_candidates),
            });
        }
        // the clock check is amortized; candidates are cheap
        if self.used % 1024 == 1 {
            if let Some(limit) = self.budget.timeout {
                if self.started.elapsed() > limit {
                    return Err(Error::BudgetExceeded {
                        reason: format!("timeout of {limit:?} reached"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// `XY = Z` with early exit; callers arrange `|X|·|Y| = |Z|`, so it is
/// enough that all products are distinct members of `Z`.
fn product_equals(x_words: &[&Word], y: &FiniteLanguage, z: &FiniteLanguage) -> bool {
    let mut seen = BTreeSet::new();
    for a in x_words {
        for b in y.iter() {
            let w = a.concat(b);
            if !z.contains(&w) || !seen.insert(w) {
                return false;
            }
        }
    }
    seen.len() == z.len()
}

/// The bounded exhaustive search over quotient-derived candidates.
///
/// Requires a standard-form code whose block-size gcd exceeds 1, with
/// `d_set` the admissible `|Y|` sizes. Picks the canonically smallest
/// minimal-length word `w`, then tries every non-empty proper prefix `u`
/// of `w` by increasing length, every `Y ⊆ u⁻¹Z_t` with `|Y| ∈ d_set`
/// (size ascending, then lexicographic), and every
/// `X ⊆ ⋂_{y ∈ Y} Zy⁻¹ \ {ε}` with `|X| = |Z|/|Y|` in the same order,
/// until `Z = XY`. Candidate subsets are streamed, never materialized as
/// a power set.
pub fn fic_search(
    z: &FiniteLanguage,
    d_set: &BTreeSet<usize>,
    budget: &SearchBudget,
) -> Result<(Option<Decomposition>, FicTrace, SearchStats)> {
    let mut stats = SearchStats::default();
    let mut guard = BudgetGuard::new(budget);

    let w = z.min_word().expect("non-empty by contract").clone();
    let block_letter = w.first().expect("ε-free by contract");
    let partition = z.partition_by_first_letter()?;
    let z_t = partition
        .block(block_letter)
        .expect("w's own block is non-empty")
        .clone();

    let mut trace = FicTrace {
        w: w.clone(),
        block_letter,
        d_set: d_set.clone(),
        steps: Vec::new(),
    };

    let mut prefixes = w.proper_prefixes();
    prefixes.retain(|u| !u.is_empty());

    for u in prefixes {
        stats.u_tried += 1;
        let s = z_t.left_quotient(&u);
        trace.steps.push(FicStep {
            u: u.clone(),
            s: s.clone(),
        });
        let pool: Vec<&Word> = s.iter().collect();
        for &d in d_set.iter() {
            if d > pool.len() || !z.len().is_multiple_of(d) {
                continue;
            }
            let x_size = z.len() / d;
            for y_words in pool.iter().copied().combinations(d) {
                stats.y_tried += 1;
                guard.spend()?;
                let y = FiniteLanguage::new(z.alphabet().clone(), y_words.iter().copied().cloned())
                    .expect("quotient words stay inside the alphabet");
                let p = y
                    .iter()
                    .map(|yw| z.right_quotient(yw))
                    .reduce(|acc, q| acc.intersection(&q))
                    .expect("|Y| ≥ 1")
                    .without_epsilon();
                if p.len() < x_size {
                    continue;
                }
                let p_pool: Vec<&Word> = p.iter().collect();
                for x_words in p_pool.iter().copied().combinations(x_size) {
                    stats.x_tried += 1;
                    guard.spend()?;
                    if product_equals(&x_words, &y, z) {
                        let x = FiniteLanguage::new(
                            z.alphabet().clone(),
                            x_words.iter().copied().cloned(),
                        )
                        .expect("quotient words stay inside the alphabet");
                        let found = Decomposition { x, y };
                        debug_assert!(found.is_valid_for(z));
                        return Ok((Some(found), trace, stats));
                    }
                }
            }
        }
    }
    Ok((None, trace, stats))
}

/// Final verdict of the decision pipeline.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    AltInduced,
    NotAltInduced,
}

/// Which part of the pipeline settled the verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Route {
    /// A length-1 word can never factor as `xy` with `x, y` non-empty.
    Length1Reject,
    /// Over a one-letter alphabet a code is a singleton `{w}`; it is
    /// alt-induced iff `|w| ≥ 2`.
    OneLetterAlphabet,
    /// All words begin with the same letter `a`: `({a}, a⁻¹Z)` induces.
    CommonFirstLetter,
    /// All words end with the same letter `b`: `(Zb⁻¹, {b})` induces.
    CommonLastLetter,
    /// The block-size gcd is 1.
    GcdReject,
    /// The gcd is 1 because `|Z|` is prime; recorded instead of
    /// `GcdReject` when it applies.
    PrimeReject,
    /// The search found an inducing pair.
    FicFound,
    /// The search exhausted all candidates.
    FicExhausted,
}

/// Complete result of one decision, including the witness decomposition
/// when the verdict is positive and the search trace when the search ran.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub route: Route,
    pub decomposition: Option<Decomposition>,
    pub stats: SearchStats,
    pub trace: Option<FicTrace>,
}

impl DecisionReport {
    pub fn is_alt_induced(&self) -> bool {
        self.verdict == Verdict::AltInduced
    }

    fn plain(verdict: Verdict, route: Route, decomposition: Option<Decomposition>) -> Self {
        DecisionReport {
            verdict,
            route,
            decomposition,
            stats: SearchStats::default(),
            trace: None,
        }
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn require_code(z: &FiniteLanguage, operation: &'static str) -> Result<()> {
    if z.is_empty() {
        return Err(Error::EmptyLanguage { operation });
    }
    if z.contains_epsilon() {
        return Err(Error::EpsilonInInput { operation });
    }
    let trace = check::sardinas_patterson(z)?;
    if !trace.is_code() {
        let witness = check::ambiguity_witness(z)?;
        return Err(Error::NotACode { witness });
    }
    Ok(())
}

/// Decides whether the finite code `z` is induced by some alternative
/// pair. Non-codes are rejected with an ambiguity witness; the verdict is
/// total otherwise (up to the search budget).
pub fn decide_alt_induced(z: &FiniteLanguage, budget: &SearchBudget) -> Result<DecisionReport> {
    require_code(z, "decide_alt_induced")?;

    match classify_standard_form(z) {
        StandardFormClass::HasLength1 => Ok(DecisionReport::plain(
            Verdict::NotAltInduced,
            Route::Length1Reject,
            None,
        )),
        StandardFormClass::OneLetterAlphabet => {
            // a code over one letter is a singleton; length-1 was ruled out
            let w = z.min_word().expect("non-empty").clone();
            debug_assert_eq!(z.len(), 1);
            debug_assert!(w.len() >= 2);
            let first = Word::from_letters([w.first().expect("non-empty word")]);
            let x = FiniteLanguage::new(z.alphabet().clone(), [first.clone()])
                .expect("letter is in the alphabet");
            let d = Decomposition {
                x,
                y: z.left_quotient(&first),
            };
            debug_assert!(d.is_valid_for(z));
            Ok(DecisionReport::plain(
                Verdict::AltInduced,
                Route::OneLetterAlphabet,
                Some(d),
            ))
        }
        StandardFormClass::CommonFirst(a) => {
            let first = Word::from_letters([a]);
            let x = FiniteLanguage::new(z.alphabet().clone(), [first.clone()])
                .expect("letter is in the alphabet");
            let d = Decomposition {
                x,
                y: z.left_quotient(&first),
            };
            debug_assert!(d.is_valid_for(z));
            Ok(DecisionReport::plain(
                Verdict::AltInduced,
                Route::CommonFirstLetter,
                Some(d),
            ))
        }
        StandardFormClass::CommonLast(b) => {
            let last = Word::from_letters([b]);
            let y = FiniteLanguage::new(z.alphabet().clone(), [last.clone()])
                .expect("letter is in the alphabet");
            let d = Decomposition {
                x: z.right_quotient(&last),
                y,
            };
            debug_assert!(d.is_valid_for(z));
            Ok(DecisionReport::plain(
                Verdict::AltInduced,
                Route::CommonLastLetter,
                Some(d),
            ))
        }
        StandardFormClass::Standard => match gcd_pretest(z) {
            GcdPretest::Reject => {
                let route = if is_prime(z.len()) {
                    Route::PrimeReject
                } else {
                    Route::GcdReject
                };
                Ok(DecisionReport::plain(Verdict::NotAltInduced, route, None))
            }
            GcdPretest::Inconclusive { d_set } => {
                let (found, trace, stats) = fic_search(z, &d_set, budget)?;
                Ok(match found {
                    Some(d) => DecisionReport {
                        verdict: Verdict::AltInduced,
                        route: Route::FicFound,
                        decomposition: Some(d),
                        stats,
                        trace: Some(trace),
                    },
                    None => DecisionReport {
                        verdict: Verdict::NotAltInduced,
                        route: Route::FicExhausted,
                        decomposition: None,
                        stats,
                        trace: Some(trace),
                    },
                })
            }
        },
    }
}

/// Enumerates every pair `(X, Y)` with `XY = Z` and `|X|·|Y| = |Z|`, in
/// canonical order.
///
/// The search space follows the same quotient containments as the
/// decision search — for the canonically smallest minimal-length word
/// `w`, any pair has `Y ⊆ u⁻¹Z_t` for some non-empty proper prefix `u`
/// of `w` that lies in `X`, and `|Y|` divides every non-empty block
/// size — but runs without first-found termination. Requires a code with
/// all words of length ≥ 2.
pub fn enumerate_decompositions(
    z: &FiniteLanguage,
    budget: &SearchBudget,
) -> Result<Vec<Decomposition>> {
    require_code(z, "enumerate_decompositions")?;
    if let Some(w) = z.iter().find(|w| w.len() < 2) {
        return Err(Error::LengthOneWord {
            operation: "enumerate_decompositions",
            word: w.to_string(),
        });
    }

    let mut guard = BudgetGuard::new(budget);
    let g = block_gcd(z);
    let d_set: Vec<usize> = (1..=g).filter(|d| g.is_multiple_of(*d)).collect();

    let w = z.min_word().expect("non-empty").clone();
    let block_letter = w.first().expect("ε-free");
    let partition = z.partition_by_first_letter()?;
    let z_t = partition
        .block(block_letter)
        .expect("w's own block is non-empty")
        .clone();

    let mut found: BTreeSet<Decomposition> = BTreeSet::new();
    let mut prefixes = w.proper_prefixes();
    prefixes.retain(|u| !u.is_empty());

    for u in prefixes {
        let s = z_t.left_quotient(&u);
        let pool: Vec<&Word> = s.iter().collect();
        for &d in &d_set {
            if d > pool.len() || !z.len().is_multiple_of(d) {
                continue;
            }
            let x_size = z.len() / d;
            for y_words in pool.iter().copied().combinations(d) {
                guard.spend()?;
                let y = FiniteLanguage::new(z.alphabet().clone(), y_words.iter().copied().cloned())
                    .expect("quotient words stay inside the alphabet");
                let p = y
                    .iter()
                    .map(|yw| z.right_quotient(yw))
                    .reduce(|acc, q| acc.intersection(&q))
                    .expect("|Y| ≥ 1")
                    .without_epsilon();
                if p.len() < x_size {
                    continue;
                }
                let p_pool: Vec<&Word> = p.iter().collect();
                for x_words in p_pool.iter().copied().combinations(x_size) {
                    guard.spend()?;
                    if product_equals(&x_words, &y, z) {
                        let x = FiniteLanguage::new(
                            z.alphabet().clone(),
                            x_words.iter().copied().cloned(),
                        )
                        .expect("quotient words stay inside the alphabet");
                        let d = Decomposition { x, y: y.clone() };
                        debug_assert!(d.is_valid_for(z));
                        found.insert(d);
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// The subset of [`enumerate_decompositions`] whose pairs are strong
/// alternative codes. Always finite.
pub fn enumerate_strong_decompositions(
    z: &FiniteLanguage,
    budget: &SearchBudget,
) -> Result<Vec<Decomposition>> {
    let all = enumerate_decompositions(z, budget)?;
    let mut strong = Vec::new();
    for d in all {
        if alt::check_strong(&d.x, &d.y)?.is_strong {
            strong.push(d);
        }
    }
    Ok(strong)
}

/// Aggregated verdicts for one language: the class report, the
/// alt-induced decision, and the strong inducing pairs when defined.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub class: check::CodeClassReport,
    /// `None` when the input is not a code (see `class.witness`).
    pub decision: Option<DecisionReport>,
    /// All strong inducing pairs; empty for codes with a length-1 word
    /// (no pair can exist). `None` when the input is not a code.
    pub strong_inducers: Option<Vec<Decomposition>>,
}

impl AnalysisReport {
    pub fn is_strong_alt_induced(&self) -> Option<bool> {
        self.strong_inducers.as_ref().map(|v| !v.is_empty())
    }
}

/// Runs the full analysis: classification, the alt-induced decision, and
/// the strong-pair enumeration.
pub fn analyze(z: &FiniteLanguage, budget: &SearchBudget) -> Result<AnalysisReport> {
    let class = check::classify(z)?;
    if !class.is_code {
        return Ok(AnalysisReport {
            class,
            decision: None,
            strong_inducers: None,
        });
    }
    let decision = decide_alt_induced(z, budget)?;
    let strong_inducers = if z.min_word_len() >= 2 {
        enumerate_strong_decompositions(z, budget)?
    } else {
        // a length-1 word factors as xy for no non-empty x, y
        Vec::new()
    };
    Ok(AnalysisReport {
        class,
        decision: Some(decision),
        strong_inducers: Some(strong_inducers),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(words: &[&str]) -> FiniteLanguage {
        FiniteLanguage::from_words(words.iter().copied())
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn classification_precedence() {
        assert_eq!(
            classify_standard_form(&lang(&["aaa", "aab", "baa", "bbbbbbbbb"])),
            StandardFormClass::Standard
        );
        assert_eq!(
            classify_standard_form(&lang(&["abb", "abbab"])),
            StandardFormClass::CommonFirst(Letter::new('a'))
        );
        assert_eq!(
            classify_standard_form(&lang(&["a", "ab"])),
            StandardFormClass::HasLength1
        );
        assert_eq!(
            classify_standard_form(&lang(&["aaa"])),
            StandardFormClass::OneLetterAlphabet
        );
        assert_eq!(
            classify_standard_form(&lang(&["aba", "ba"])),
            StandardFormClass::CommonLast(Letter::new('a'))
        );
    }

    #[test]
    fn gcd_pretest_fixtures() {
        assert_eq!(
            gcd_pretest(&lang(&["abc", "acb", "bac", "bca", "bbac", "cab", "cba", "caab"])),
            GcdPretest::Reject
        );
        assert_eq!(
            gcd_pretest(&lang(&["aaa", "aab", "baa", "bbbbbbbbb"])),
            GcdPretest::Inconclusive {
                d_set: BTreeSet::from([2])
            }
        );
        let twelve = lang(&[
            "abaa", "abab", "abbaa", "abbab", "abbbaa", "abbbab", "abbbbaa", "abbbbab", "bbaaa",
            "bbaab", "bbabaa", "bbabab",
        ]);
        assert_eq!(
            gcd_pretest(&twelve),
            GcdPretest::Inconclusive {
                d_set: BTreeSet::from([2, 4])
            }
        );
    }

    #[test]
    fn search_trace_of_the_exhausted_fixture_matches_hand_run() {
        let z = lang(&["aaa", "aab", "baa", "bbbbbbbbb"]);
        let report = decide_alt_induced(&z, &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::NotAltInduced);
        assert_eq!(report.route, Route::FicExhausted);
        let trace = report.trace.unwrap();
        assert_eq!(trace.w, Word::from("aaa"));
        let visited: Vec<(String, String)> = trace
            .steps
            .iter()
            .map(|s| (s.u.to_string(), s.s.to_string()))
            .collect();
        assert_eq!(
            visited,
            [
                ("a".to_string(), "{aa, ab}".to_string()),
                ("aa".to_string(), "{a, b}".to_string())
            ]
        );
    }

    #[test]
    fn decide_routes() {
        // common first letter
        let report = decide_alt_induced(&lang(&["abb", "abbab"]), &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::AltInduced);
        assert_eq!(report.route, Route::CommonFirstLetter);
        let d = report.decomposition.unwrap();
        assert_eq!(d.x.to_string(), "{a}");
        assert_eq!(d.y.to_string(), "{bb, bbab}");

        // length-1 word
        let report = decide_alt_induced(&lang(&["a", "ab"]), &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::NotAltInduced);
        assert_eq!(report.route, Route::Length1Reject);

        // one-letter alphabet
        let report = decide_alt_induced(&lang(&["aaa"]), &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::AltInduced);
        assert_eq!(report.route, Route::OneLetterAlphabet);
        assert_eq!(report.decomposition.unwrap().to_string(), "{a} · {aa}");

        // common last letter
        let report = decide_alt_induced(&lang(&["aba", "ba"]), &budget()).unwrap();
        assert_eq!(report.route, Route::CommonLastLetter);
        let d = report.decomposition.unwrap();
        assert_eq!(d.to_string(), "{b, ab} · {a}");

        // gcd reject, composite cardinality
        let report = decide_alt_induced(
            &lang(&["abc", "acb", "bac", "bca", "bbac", "cab", "cba", "caab"]),
            &budget(),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::NotAltInduced);
        assert_eq!(report.route, Route::GcdReject);
    }

    #[test]
    fn prime_cardinality_is_recorded_as_such() {
        // 3 words, standard form, prime |Z| forces gcd 1
        let z = lang(&["aa", "ba", "bb"]);
        let report = decide_alt_induced(&z, &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::NotAltInduced);
        assert_eq!(report.route, Route::PrimeReject);
    }

    #[test]
    fn decide_rejects_non_codes_with_witness() {
        let err = decide_alt_induced(&lang(&["aaaa", "aaaab", "baaaa", "baaaab"]), &budget());
        match err {
            Err(Error::NotACode { witness }) => {
                assert!(witness.word.len() <= 10);
            }
            other => panic!("expected NotACode, got {other:?}"),
        }
    }

    #[test]
    fn twelve_word_fixture_is_alt_induced_with_valid_pair() {
        let z = lang(&[
            "abaa", "abab", "abbaa", "abbab", "abbbaa", "abbbab", "abbbbaa", "abbbbab", "bbaaa",
            "bbaab", "bbabaa", "bbabab",
        ]);
        let report = decide_alt_induced(&z, &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::AltInduced);
        assert_eq!(report.route, Route::FicFound);
        let d = report.decomposition.unwrap();
        assert!(d.is_valid_for(&z));
        assert_eq!(d.x.len() * d.y.len(), 12);
    }

    #[test]
    fn search_succeeds_on_a_prebuilt_product_of_prefix_codes() {
        // {aa, ab, ba, bb}·{a, b} is the full cube; a pair must be found
        let z = lang(&["aa", "ab", "ba", "bb"])
            .product(&lang(&["a", "b"]))
            .unwrap();
        let report = decide_alt_induced(&z, &budget()).unwrap();
        assert_eq!(report.verdict, Verdict::AltInduced);
        assert_eq!(report.route, Route::FicFound);
        assert!(report.decomposition.unwrap().is_valid_for(&z));
    }

    #[test]
    fn enumeration_of_the_running_example() {
        let z = lang(&["abb", "abbab"]);
        let all = enumerate_decompositions(&z, &budget()).unwrap();
        let shown: Vec<String> = all.iter().map(|d| d.to_string()).collect();
        assert_eq!(
            shown,
            [
                "{a} · {bb, bbab}",
                "{ab} · {b, bab}",
                "{ab, abba} · {b}"
            ]
        );
        let strong = enumerate_strong_decompositions(&z, &budget()).unwrap();
        assert_eq!(strong.len(), 1);
        assert_eq!(strong[0].to_string(), "{a} · {bb, bbab}");
    }

    #[test]
    fn enumeration_corner_cases() {
        assert!(enumerate_decompositions(&lang(&["aaa", "aab", "baa", "bbbbbbbbb"]), &budget())
            .unwrap()
            .is_empty());
        let singleton = enumerate_decompositions(&lang(&["aa"]), &budget()).unwrap();
        assert_eq!(singleton.len(), 1);
        assert_eq!(singleton[0].to_string(), "{a} · {a}");
        assert!(matches!(
            enumerate_decompositions(&lang(&["a", "ab"]), &budget()),
            Err(Error::LengthOneWord { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let z = lang(&[
            "abaa", "abab", "abbaa", "abbab", "abbbaa", "abbbab", "abbbbaa", "abbbbab", "bbaaa",
            "bbaab", "bbabaa", "bbabab",
        ]);
        let tiny = SearchBudget {
            max_candidates: 3,
            timeout: None,
        };
        assert!(matches!(
            decide_alt_induced(&z, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn analyze_assembles_all_verdicts() {
        let report = analyze(&lang(&["abb", "abbab"]), &budget()).unwrap();
        assert!(report.class.is_code);
        assert!(report.decision.as_ref().unwrap().is_alt_induced());
        assert_eq!(report.is_strong_alt_induced(), Some(true));

        let report = analyze(&lang(&["a", "ab"]), &budget()).unwrap();
        assert!(report.class.is_code);
        assert!(!report.decision.as_ref().unwrap().is_alt_induced());
        assert_eq!(report.is_strong_alt_induced(), Some(false));

        let report = analyze(&lang(&["a", "aa"]), &budget()).unwrap();
        assert!(!report.class.is_code);
        assert!(report.decision.is_none());
        assert_eq!(report.is_strong_alt_induced(), None);
    }
}
