//! Code membership via Sardinas–Patterson with a full remainder trace,
//! shortest ambiguity witnesses, and the prefix/suffix/bifix class and
//! maximality checks for finite languages.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::lang::{FiniteLanguage, Rational, Word};
use crate::{Error, Result};

/// Outcome of the unique-decipherability test.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CodeVerdict {
    Code,
    NotCode,
}

/// Why the remainder-set iteration stopped.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum HaltingReason {
    /// Some `U_n` became empty; all later sets stay empty.
    EmptySetReached,
    /// A remainder set repeated, so the sequence cycles without ever
    /// producing ε.
    CycleDetected,
    /// ε appeared in some `U_n`.
    EpsilonFound,
}

/// The sequence `U₁, U₂, …` of Sardinas–Patterson remainder sets together
/// with the verdict. `U₁ = X⁻¹X \ {ε}` and `U_{n+1} = X⁻¹U_n ∪ U_n⁻¹X`;
/// the input is a code iff no `U_n` contains ε. Every computed set up to
/// and including the halting step is recorded.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SpTrace {
    pub u_sets: Vec<FiniteLanguage>,
    pub verdict: CodeVerdict,
    pub halting_reason: HaltingReason,
}

impl SpTrace {
    pub fn is_code(&self) -> bool {
        self.verdict == CodeVerdict::Code
    }
}

fn require_plus_language(x: &FiniteLanguage, operation: &'static str) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyLanguage { operation });
    }
    if x.contains_epsilon() {
        return Err(Error::EpsilonInInput { operation });
    }
    Ok(())
}

/// Runs the Sardinas–Patterson test on a finite language.
///
/// Every `U_n` is a set of proper suffixes of words of `X` (possibly with
/// ε), so only finitely many sets can occur; the iteration stops on the
/// first empty set, on ε, or on a repeated set.
pub fn sardinas_patterson(x: &FiniteLanguage) -> Result<SpTrace> {
    require_plus_language(x, "sardinas_patterson")?;

    let mut u = x.left_quotient_by_set(x).without_epsilon();
    let mut u_sets = Vec::new();
    let mut seen: HashSet<Vec<Word>> = HashSet::new();
    loop {
        u_sets.push(u.clone());
        if u.contains_epsilon() {
            return Ok(SpTrace {
                u_sets,
                verdict: CodeVerdict::NotCode,
                halting_reason: HaltingReason::EpsilonFound,
            });
        }
        if u.is_empty() {
            return Ok(SpTrace {
                u_sets,
                verdict: CodeVerdict::Code,
                halting_reason: HaltingReason::EmptySetReached,
            });
        }
        if !seen.insert(u.iter().cloned().collect()) {
            return Ok(SpTrace {
                u_sets,
                verdict: CodeVerdict::Code,
                halting_reason: HaltingReason::CycleDetected,
            });
        }
        u = u.left_quotient_by_set(x).union(&x.left_quotient_by_set(&u));
    }
}

/// A word together with two distinct factorizations over the same
/// language. Both factor sequences concatenate to `word`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AmbiguityWitness {
    pub word: Word,
    pub factorization_a: Vec<Word>,
    pub factorization_b: Vec<Word>,
}

impl AmbiguityWitness {
    /// Re-checks the witness against a language: both sequences must be
    /// non-trivial, draw all factors from `x`, differ, and concatenate to
    /// `word`.
    pub fn validate(&self, x: &FiniteLanguage) -> bool {
        let concat = |fs: &[Word]| {
            fs.iter()
                .fold(Word::empty(), |acc, w| acc.concat(w))
        };
        !self.factorization_a.is_empty()
            && !self.factorization_b.is_empty()
            && self.factorization_a != self.factorization_b
            && self.factorization_a.iter().all(|w| x.contains(w))
            && self.factorization_b.iter().all(|w| x.contains(w))
            && concat(&self.factorization_a) == self.word
            && concat(&self.factorization_b) == self.word
    }
}

/// Search state for the witness search: the dangling remainder plus which
/// side is ahead. The remainder is always a non-empty proper suffix of a
/// word of `X`, so the state space is finite.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct DanglingState {
    remainder: Word,
    a_side_ahead: bool,
}

#[derive(Clone, Debug)]
enum WitnessParent {
    /// Initial pair `a = b · remainder`.
    Start { a_word: Word, b_word: Word },
    /// Reached from `from` by appending `appended` to the behind side.
    Step {
        from: DanglingState,
        appended: Word,
        appended_to_a: bool,
    },
}

/// Extracts a shortest word with two distinct factorizations over `x`.
///
/// Implemented as a uniform-cost search over dangling-remainder states
/// with parent links, independently of the Sardinas–Patterson trace, so
/// its minimality can be cross-checked against brute-force enumeration.
/// Calling it on a code is an error.
pub fn ambiguity_witness(x: &FiniteLanguage) -> Result<AmbiguityWitness> {
    let trace = sardinas_patterson(x)?;
    if trace.is_code() {
        return Err(Error::ClassMismatch(
            "ambiguity_witness called on a code".into(),
        ));
    }

    // frontier keyed by (cost, state) so pops are deterministic
    let mut frontier: BTreeMap<(usize, DanglingState), ()> = BTreeMap::new();
    let mut best: BTreeMap<DanglingState, usize> = BTreeMap::new();
    let mut parent: BTreeMap<DanglingState, WitnessParent> = BTreeMap::new();

    for a_word in x.iter() {
        for b_word in x.iter() {
            if a_word == b_word {
                continue;
            }
            if let Some(remainder) = a_word.strip_prefix(b_word) {
                debug_assert!(!remainder.is_empty());
                let state = DanglingState {
                    remainder,
                    a_side_ahead: true,
                };
                let cost = a_word.len();
                if best.get(&state).is_none_or(|&c| cost < c) {
                    best.insert(state.clone(), cost);
                    parent.insert(
                        state.clone(),
                        WitnessParent::Start {
                            a_word: a_word.clone(),
                            b_word: b_word.clone(),
                        },
                    );
                    frontier.insert((cost, state), ());
                }
            }
        }
    }

    while let Some(((cost, state), ())) = frontier.pop_first() {
        if best.get(&state).is_some_and(|&c| c < cost) {
            continue;
        }
        // closing move: the behind side consumes the remainder exactly
        if x.contains(&state.remainder) {
            return Ok(reconstruct_witness(&state, &parent));
        }
        for w in x.iter() {
            let (next, next_cost) = if let Some(rest) = w.strip_prefix(&state.remainder) {
                // the behind side overtakes
                debug_assert!(!rest.is_empty(), "exact match handled above");
                (
                    DanglingState {
                        remainder: rest,
                        a_side_ahead: !state.a_side_ahead,
                    },
                    cost + w.len() - state.remainder.len(),
                )
            } else if let Some(rest) = state.remainder.strip_prefix(w) {
                // the behind side catches up partially
                (
                    DanglingState {
                        remainder: rest,
                        a_side_ahead: state.a_side_ahead,
                    },
                    cost,
                )
            } else {
                continue;
            };
            if best.get(&next).is_none_or(|&c| next_cost < c) {
                best.insert(next.clone(), next_cost);
                parent.insert(
                    next.clone(),
                    WitnessParent::Step {
                        from: state.clone(),
                        appended: w.clone(),
                        appended_to_a: !state.a_side_ahead,
                    },
                );
                frontier.insert((next_cost, next), ());
            }
        }
    }

    unreachable!("Sardinas–Patterson said NotCode, so a witness exists")
}

fn reconstruct_witness(
    final_state: &DanglingState,
    parents: &BTreeMap<DanglingState, WitnessParent>,
) -> AmbiguityWitness {
    // walk back to the start, collecting appended factors
    let mut steps: Vec<(Word, bool)> = Vec::new();
    let mut cursor = final_state.clone();
    let (mut seq_a, mut seq_b) = loop {
        match parents.get(&cursor).expect("every reached state has a parent") {
            WitnessParent::Start { a_word, b_word } => {
                break (vec![a_word.clone()], vec![b_word.clone()]);
            }
            WitnessParent::Step {
                from,
                appended,
                appended_to_a,
            } => {
                steps.push((appended.clone(), *appended_to_a));
                cursor = from.clone();
            }
        }
    };
    for (appended, to_a) in steps.into_iter().rev() {
        if to_a {
            seq_a.push(appended);
        } else {
            seq_b.push(appended);
        }
    }
    // the final move: the behind side consumes the remainder
    if final_state.a_side_ahead {
        seq_b.push(final_state.remainder.clone());
    } else {
        seq_a.push(final_state.remainder.clone());
    }
    let word = seq_a.iter().fold(Word::empty(), |acc, w| acc.concat(w));
    let (factorization_a, factorization_b) = if seq_a <= seq_b {
        (seq_a, seq_b)
    } else {
        (seq_b, seq_a)
    };
    AmbiguityWitness {
        word,
        factorization_a,
        factorization_b,
    }
}

/// True iff no word of `x` is a proper prefix of another word of `x`.
pub fn is_prefix_code(x: &FiniteLanguage) -> Result<bool> {
    require_plus_language(x, "is_prefix_code")?;
    for u in x.iter() {
        for v in x.iter() {
            if u != v && v.starts_with(u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff no word of `x` is a proper suffix of another word of `x`.
pub fn is_suffix_code(x: &FiniteLanguage) -> Result<bool> {
    require_plus_language(x, "is_suffix_code")?;
    for u in x.iter() {
        for v in x.iter() {
            if u != v && v.ends_with(u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `x` is both a prefix code and a suffix code.
pub fn is_bifix_code(x: &FiniteLanguage) -> Result<bool> {
    Ok(is_prefix_code(x)? && is_suffix_code(x)?)
}

fn kraft_is_one(x: &FiniteLanguage) -> Result<bool> {
    Ok(x.kraft_sum()? == Rational::from_integer(BigInt::from(1)))
}

/// Maximality test for finite prefix codes: a finite prefix code is
/// maximal over its alphabet iff its Kraft sum equals 1 exactly.
/// The input must already be a prefix code.
pub fn is_maximal_prefix(x: &FiniteLanguage) -> Result<bool> {
    if !is_prefix_code(x)? {
        return Err(Error::ClassMismatch(
            "is_maximal_prefix requires a prefix code".into(),
        ));
    }
    kraft_is_one(x)
}

/// Maximality for finite suffix codes, via the reversal duality: `x` is a
/// maximal suffix code iff `reverse(x)` is a maximal prefix code.
pub fn is_maximal_suffix(x: &FiniteLanguage) -> Result<bool> {
    if !is_suffix_code(x)? {
        return Err(Error::ClassMismatch(
            "is_maximal_suffix requires a suffix code".into(),
        ));
    }
    is_maximal_prefix(&x.reversed())
}

/// Maximality for finite bifix codes. Finite sets are thin, so a finite
/// bifix code is maximal iff it is both a maximal prefix code and a
/// maximal suffix code.
pub fn is_maximal_bifix(x: &FiniteLanguage) -> Result<bool> {
    if !is_bifix_code(x)? {
        return Err(Error::ClassMismatch(
            "is_maximal_bifix requires a bifix code".into(),
        ));
    }
    Ok(is_maximal_prefix(x)? && is_maximal_suffix(x)?)
}

/// Thinness: a set is thin when some word is an infix of none of its
/// members. Any word longer than the longest member qualifies, so every
/// finite language is thin.
pub fn is_thin(_x: &FiniteLanguage) -> bool {
    true
}

/// Full class report for a single language: code verdict with witness,
/// prefix/suffix/bifix flags and the maximal variants.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CodeClassReport {
    pub is_code: bool,
    pub is_prefix: bool,
    pub is_suffix: bool,
    pub is_bifix: bool,
    pub is_maximal_prefix: bool,
    pub is_maximal_suffix: bool,
    pub is_maximal_bifix: bool,
    pub witness: Option<AmbiguityWitness>,
}

/// Computes the [`CodeClassReport`] for a language. Maximality flags are
/// false whenever the corresponding class fails.
pub fn classify(x: &FiniteLanguage) -> Result<CodeClassReport> {
    require_plus_language(x, "classify")?;
    let trace = sardinas_patterson(x)?;
    let is_code = trace.is_code();
    let witness = if is_code {
        None
    } else {
        Some(ambiguity_witness(x)?)
    };
    let is_prefix = is_prefix_code(x)?;
    let is_suffix = is_suffix_code(x)?;
    let kraft_one = kraft_is_one(x)?;
    Ok(CodeClassReport {
        is_code,
        is_prefix,
        is_suffix,
        is_bifix: is_prefix && is_suffix,
        is_maximal_prefix: is_prefix && kraft_one,
        is_maximal_suffix: is_suffix && kraft_one,
        is_maximal_bifix: is_prefix && is_suffix && kraft_one,
        witness,
    })
}

/// All distinct factorizations of `w` into factors from `x`, capped at
/// `limit` sequences. Test helper for witness validation and the naive
/// oracle.
pub fn factorizations(x: &FiniteLanguage, w: &Word, limit: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    let mut stack: Vec<Word> = Vec::new();
    fn go(
        x: &FiniteLanguage,
        rest: &Word,
        stack: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if rest.is_empty() {
            if !stack.is_empty() {
                out.push(stack.clone());
            }
            return;
        }
        for f in x.iter() {
            if let Some(tail) = rest.strip_prefix(f) {
                stack.push(f.clone());
                go(x, &tail, stack, out, limit);
                stack.pop();
            }
        }
    }
    go(x, w, &mut stack, &mut out, limit);
    out
}

/// True when `x` and `y` contain exactly the same words (alphabets are
/// ignored). Used by tests comparing results built over different
/// declared alphabets.
pub fn same_word_set(x: &FiniteLanguage, y: &FiniteLanguage) -> bool {
    let a: BTreeSet<&Word> = x.iter().collect();
    let b: BTreeSet<&Word> = y.iter().collect();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::Alphabet;

    fn lang(words: &[&str]) -> FiniteLanguage {
        FiniteLanguage::from_words(words.iter().copied())
    }

    #[test]
    fn sp_trace_on_suffix_code_matches_hand_computation() {
        let x = lang(&["abb", "abbab"]);
        let t = sardinas_patterson(&x).unwrap();
        assert_eq!(t.verdict, CodeVerdict::Code);
        assert_eq!(t.halting_reason, HaltingReason::EmptySetReached);
        let shown: Vec<String> = t.u_sets.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, ["{ab}", "{b, bab}", "{}"]);
    }

    #[test]
    fn sp_rejects_product_of_two_alt_induced_codes() {
        let r = lang(&["aaaa", "aaaab", "baaaa", "baaaab"]);
        let t = sardinas_patterson(&r).unwrap();
        assert_eq!(t.verdict, CodeVerdict::NotCode);
        assert_eq!(t.halting_reason, HaltingReason::EpsilonFound);
    }

    #[test]
    fn sp_on_prefix_code_stops_at_empty_u1() {
        let x = lang(&["aa", "ab"]);
        let t = sardinas_patterson(&x).unwrap();
        assert_eq!(t.verdict, CodeVerdict::Code);
        assert_eq!(t.u_sets.len(), 1);
        assert!(t.u_sets[0].is_empty());
    }

    #[test]
    fn sp_detects_cycles() {
        // {aa, ba, b}: U₁ = {a}, U₂ = {a} — an immediate repeat
        let x = lang(&["aa", "ba", "b"]);
        let t = sardinas_patterson(&x).unwrap();
        assert_eq!(t.verdict, CodeVerdict::Code);
        assert_eq!(t.halting_reason, HaltingReason::CycleDetected);
    }

    #[test]
    fn sp_contract_violations() {
        let empty = FiniteLanguage::empty(Alphabet::from("ab"));
        assert!(matches!(
            sardinas_patterson(&empty),
            Err(Error::EmptyLanguage { .. })
        ));
        let with_eps =
            FiniteLanguage::new(Alphabet::from("a"), [Word::empty(), Word::from("a")]).unwrap();
        assert!(matches!(
            sardinas_patterson(&with_eps),
            Err(Error::EpsilonInInput { .. })
        ));
    }

    #[test]
    fn witness_is_shortest_for_the_four_word_non_code() {
        let r = lang(&["aaaa", "aaaab", "baaaa", "baaaab"]);
        let w = ambiguity_witness(&r).unwrap();
        assert!(w.validate(&r));
        // a length-10 witness exists; the shortest has length 9
        assert_eq!(w.word.len(), 9);
        assert_eq!(w.word, Word::from("aaaabaaaa"));
    }

    #[test]
    fn witness_smallest_ambiguous_case() {
        let x = lang(&["a", "aa"]);
        let w = ambiguity_witness(&x).unwrap();
        assert!(w.validate(&x));
        assert_eq!(w.word, Word::from("aa"));
    }

    #[test]
    fn witness_for_overlapping_slice() {
        let x = lang(&["abba", "abbaa", "aabba"]);
        let w = ambiguity_witness(&x).unwrap();
        assert!(w.validate(&x));
        // (abba)(aabba) = (abbaa)(abba)
        assert_eq!(w.word, Word::from("abbaaabba"));
    }

    #[test]
    fn witness_on_code_is_an_error() {
        let x = lang(&["aa", "ab"]);
        assert!(matches!(
            ambiguity_witness(&x),
            Err(Error::ClassMismatch(_))
        ));
    }

    #[test]
    fn class_checks_on_the_twelve_word_factor_sets() {
        let y = lang(&["aa", "ab", "baa", "bab"]);
        assert!(is_prefix_code(&y).unwrap());
        let x = lang(&["ab", "abbb", "bba"]);
        assert!(is_suffix_code(&x).unwrap());
        let not_prefix = lang(&["ab", "abba"]);
        assert!(!is_prefix_code(&not_prefix).unwrap());
    }

    #[test]
    fn maximality_by_kraft_equality() {
        assert!(is_maximal_prefix(&lang(&["a", "b"])).unwrap());
        assert!(!is_maximal_prefix(&lang(&["aa", "ab", "baa", "bab"])).unwrap());
        assert!(is_maximal_bifix(&lang(&["aa", "ab", "ba", "bb"])).unwrap());
        assert!(matches!(
            is_maximal_prefix(&lang(&["ab", "abba"])),
            Err(Error::ClassMismatch(_))
        ));
    }

    #[test]
    fn maximal_suffix_goes_through_reversal() {
        // {a, ab} is a suffix code; its reverse {a, ba} has Kraft 3/4
        assert!(!is_maximal_suffix(&lang(&["a", "ab"])).unwrap());
        // reverse of the maximal prefix code {a, ba, bb}
        assert!(is_maximal_suffix(&lang(&["a", "ab", "bb"])).unwrap());
    }

    #[test]
    fn finite_sets_are_thin() {
        assert!(is_thin(&lang(&["aaaa", "aaaab", "baaaa", "baaaab"])));
        assert!(is_thin(&FiniteLanguage::empty(Alphabet::from("ab"))));
    }

    #[test]
    fn classify_reports_are_internally_consistent() {
        let report = classify(&lang(&["aa", "ab", "ba", "bb"])).unwrap();
        assert!(report.is_code && report.is_bifix && report.is_maximal_bifix);
        assert!(report.witness.is_none());

        let report = classify(&lang(&["a", "aa"])).unwrap();
        assert!(!report.is_code);
        assert!(report.witness.is_some());
        assert_eq!(report.is_bifix, report.is_prefix && report.is_suffix);
    }
}
