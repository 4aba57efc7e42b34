//! Independent brute-force ground truth for decomposition existence and
//! code membership on small instances.
//!
//! Candidate spaces are justified directly from the containments any
//! factorization `Z = XY` must satisfy: every `y ∈ Y` is a non-empty
//! proper suffix of some word of `Z`, and `X ⊆ ⋂_{y ∈ Y} Zy⁻¹`. Nothing
//! here shares a code path with the decision pipeline beyond the basic
//! language algebra, so the two sides can cross-validate each other.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::check::AmbiguityWitness;
use crate::fic::Decomposition;
use crate::lang::{FiniteLanguage, Word};
use crate::{Error, Result};

/// Limits for the exhaustive search. Exceeding any of them is an explicit
/// error, never a verdict.
#[derive(Clone, Debug)]
pub struct OracleBudget {
    /// Maximum `|Z|`.
    pub max_words: usize,
    /// Maximum word length in `Z`.
    pub max_word_len: usize,
    /// Maximum number of distinct non-empty proper suffixes of `Z`.
    pub max_suffixes: usize,
    /// Length bound for the naive code check; defaults to twice the sum
    /// of the two longest word lengths.
    pub naive_max_len: Option<usize>,
    /// Cap on elementary search steps (candidate sets, extension words).
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_words: 16,
            max_word_len: 8,
            max_suffixes: 24,
            naive_max_len: None,
            max_steps: 20_000_000,
        }
    }
}

/// Everything the brute-force search established about an instance.
#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    /// Every pair `(X, Y)` with `XY = Z` and `|X|·|Y| = |Z|`, in canonical
    /// order. Complete over the candidate space described in the module
    /// docs, which contains all valid pairs.
    pub decompositions: Vec<Decomposition>,
    pub is_code: bool,
    pub witness: Option<AmbiguityWitness>,
}

struct StepCounter {
    used: u64,
    cap: u64,
}

impl StepCounter {
    fn spend(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.cap {
            Err(Error::BudgetExceeded {
                reason: format!("oracle exceeded {} elementary steps", self.cap),
            })
        } else {
            Ok(())
        }
    }
}

/// Exhaustively enumerates every decomposition `Z = XY` with
/// `|X|·|Y| = |Z|`, and runs the naive code check.
///
/// Requires ε ∉ Z, Z non-empty, and every word of length ≥ 2.
pub fn brute_force_decompositions(
    z: &FiniteLanguage,
    budget: &OracleBudget,
) -> Result<OracleResult> {
    if z.is_empty() {
        return Err(Error::EmptyLanguage {
            operation: "brute_force_decompositions",
        });
    }
    if z.contains_epsilon() {
        return Err(Error::EpsilonInInput {
            operation: "brute_force_decompositions",
        });
    }
    if let Some(w) = z.iter().find(|w| w.len() < 2) {
        return Err(Error::LengthOneWord {
            operation: "brute_force_decompositions",
            word: w.to_string(),
        });
    }
    if z.len() > budget.max_words {
        return Err(Error::BudgetExceeded {
            reason: format!("|Z| = {} exceeds oracle limit {}", z.len(), budget.max_words),
        });
    }
    if z.max_word_len() > budget.max_word_len {
        return Err(Error::BudgetExceeded {
            reason: format!(
                "word length {} exceeds oracle limit {}",
                z.max_word_len(),
                budget.max_word_len
            ),
        });
    }

    let suffixes: Vec<Word> = z.proper_suffixes().without_epsilon().iter().cloned().collect();
    if suffixes.len() > budget.max_suffixes {
        return Err(Error::BudgetExceeded {
            reason: format!(
                "{} suffix candidates exceed oracle limit {}",
                suffixes.len(),
                budget.max_suffixes
            ),
        });
    }

    let mut steps = StepCounter {
        used: 0,
        cap: budget.max_steps,
    };

    let mut found: Vec<Decomposition> = Vec::new();
    for d in 1..=z.len() {
        if !z.len().is_multiple_of(d) {
            continue;
        }
        let x_size = z.len() / d;
        let mut chosen: Vec<Word> = Vec::new();
        search_y(
            z,
            &suffixes,
            0,
            d,
            x_size,
            None,
            &mut chosen,
            &mut found,
            &mut steps,
        )?;
    }
    found.sort();
    found.dedup();

    let two_longest: usize = {
        let mut lens: Vec<usize> = z.iter().map(Word::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens.iter().take(2).sum()
    };
    let naive_len = budget.naive_max_len.unwrap_or(2 * two_longest);
    let (is_code, witness) = naive_code_check_bounded(z, naive_len, Some(&mut steps))?;

    Ok(OracleResult {
        decompositions: found,
        is_code,
        witness,
    })
}

/// Backtracking enumeration of `Y ⊆ Suff(Z) \ {ε}` of size `d`, carrying
/// the running intersection `P = ⋂_{y chosen} Zy⁻¹ \ {ε}`. A branch dies
/// as soon as `P` cannot supply `|Z|/d` words, which is sound because `P`
/// only shrinks along a branch.
#[allow(clippy::too_many_arguments)]
fn search_y(
    z: &FiniteLanguage,
    suffixes: &[Word],
    from: usize,
    remaining: usize,
    x_size: usize,
    p_running: Option<FiniteLanguage>,
    chosen: &mut Vec<Word>,
    found: &mut Vec<Decomposition>,
    steps: &mut StepCounter,
) -> Result<()> {
    if remaining == 0 {
        let p = p_running.expect("at least one y was chosen");
        if p.len() < x_size {
            return Ok(());
        }
        let y = FiniteLanguage::new(z.alphabet().clone(), chosen.iter().cloned())
            .expect("suffixes stay inside the alphabet");
        let p_words: Vec<Word> = p.iter().cloned().collect();
        let mut x_chosen: Vec<Word> = Vec::new();
        search_x(z, &y, &p_words, 0, x_size, &mut x_chosen, found, steps)?;
        return Ok(());
    }
    for i in from..suffixes.len() {
        if suffixes.len() - i < remaining {
            break;
        }
        steps.spend(1)?;
        let y = &suffixes[i];
        let p_next = match &p_running {
            None => z.right_quotient(y).without_epsilon(),
            Some(p) => p.intersection(&z.right_quotient(y)),
        };
        if p_next.len() < x_size {
            continue;
        }
        chosen.push(y.clone());
        search_y(
            z,
            suffixes,
            i + 1,
            remaining - 1,
            x_size,
            Some(p_next),
            chosen,
            found,
            steps,
        )?;
        chosen.pop();
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search_x(
    z: &FiniteLanguage,
    y: &FiniteLanguage,
    pool: &[Word],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<Word>,
    found: &mut Vec<Decomposition>,
    steps: &mut StepCounter,
) -> Result<()> {
    if remaining == 0 {
        steps.spend(1)?;
        let x = FiniteLanguage::new(z.alphabet().clone(), chosen.iter().cloned())
            .expect("quotient words stay inside the alphabet");
        if product_equals(&x, y, z) {
            found.push(Decomposition {
                x,
                y: y.clone(),
            });
        }
        return Ok(());
    }
    for i in from..pool.len() {
        if pool.len() - i < remaining {
            break;
        }
        chosen.push(pool[i].clone());
        search_x(z, y, pool, i + 1, remaining - 1, chosen, found, steps)?;
        chosen.pop();
    }
    Ok(())
}

/// `XY = Z`, checked with early exit. Since callers arrange
/// `|X|·|Y| = |Z|`, it suffices that every product lands in `Z` and no
/// two products collide.
fn product_equals(x: &FiniteLanguage, y: &FiniteLanguage, z: &FiniteLanguage) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for a in x.iter() {
        for b in y.iter() {
            let w = a.concat(b);
            if !z.contains(&w) || !seen.insert(w) {
                return false;
            }
        }
    }
    seen.len() == z.len()
}

/// Breadth-first enumeration of all factorizable words of length at most
/// `max_len`, in canonical order, reporting the first word reachable by
/// two distinct factor sequences. Exhaustive up to the bound, so the
/// first hit is a shortest witness; finding none is only evidence, not
/// proof, that the input is a code (the tests pick `max_len` so that this
/// agrees with Sardinas–Patterson on their corpora).
pub fn naive_code_check(
    z: &FiniteLanguage,
    max_len: usize,
) -> Result<(bool, Option<AmbiguityWitness>)> {
    naive_code_check_bounded(z, max_len, None)
}

fn naive_code_check_bounded(
    z: &FiniteLanguage,
    max_len: usize,
    mut steps: Option<&mut StepCounter>,
) -> Result<(bool, Option<AmbiguityWitness>)> {
    if z.contains_epsilon() {
        return Err(Error::EpsilonInInput {
            operation: "naive_code_check",
        });
    }
    // counts[w] = number of distinct factor sequences for w, filled in
    // canonical order so every strictly shorter remainder is already done
    let mut counts: BTreeMap<Word, u64> = BTreeMap::new();
    let mut pending: std::collections::BTreeSet<Word> =
        z.iter().filter(|w| w.len() <= max_len).cloned().collect();

    while let Some(w) = pending.pop_first() {
        if let Some(c) = steps.as_deref_mut() {
            c.spend(1)?;
        }
        let mut n: u64 = 0;
        for f in z.iter() {
            if let Some(rest) = w.strip_prefix(f) {
                if rest.is_empty() {
                    n += 1;
                } else {
                    n = n.saturating_add(*counts.get(&rest).unwrap_or(&0));
                }
            }
        }
        debug_assert!(n >= 1, "pending words are factorizable by construction");
        if n >= 2 {
            let mut fs = crate::check::factorizations(z, &w, 2);
            debug_assert_eq!(fs.len(), 2);
            fs.sort();
            let witness = AmbiguityWitness {
                word: w,
                factorization_a: fs[0].clone(),
                factorization_b: fs[1].clone(),
            };
            debug_assert!(witness.validate(z));
            return Ok((false, Some(witness)));
        }
        counts.insert(w.clone(), n);
        for f in z.iter() {
            let extended = w.concat(f);
            if extended.len() <= max_len && !counts.contains_key(&extended) {
                pending.insert(extended);
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(words: &[&str]) -> FiniteLanguage {
        FiniteLanguage::from_words(words.iter().copied())
    }

    #[test]
    fn naive_finds_the_shortest_witness_of_the_four_word_non_code() {
        let r = lang(&["aaaa", "aaaab", "baaaa", "baaaab"]);
        let (is_code, witness) = naive_code_check(&r, 10).unwrap();
        assert!(!is_code);
        let w = witness.unwrap();
        assert!(w.validate(&r));
        assert_eq!(w.word.len(), 9);
    }

    #[test]
    fn naive_accepts_singletons_and_alt_induced_factors() {
        let (is_code, w) = naive_code_check(&lang(&["a"]), 8).unwrap();
        assert!(is_code && w.is_none());
        let (is_code, _) = naive_code_check(&lang(&["aa", "baa"]), 20).unwrap();
        assert!(is_code);
    }

    #[test]
    fn oracle_counts_decompositions_of_the_running_example() {
        let z = lang(&["abb", "abbab"]);
        let r = brute_force_decompositions(&z, &OracleBudget::default()).unwrap();
        assert!(r.is_code);
        assert_eq!(r.decompositions.len(), 3);
        let shown: Vec<String> = r
            .decompositions
            .iter()
            .map(|d| format!("{} × {}", d.x, d.y))
            .collect();
        assert_eq!(
            shown,
            [
                "{a} × {bb, bbab}",
                "{ab} × {b, bab}",
                "{ab, abba} × {b}"
            ]
        );
    }

    #[test]
    fn oracle_finds_nothing_for_the_exhausted_fixture() {
        let z = lang(&["aaa", "aab", "baa", "bbbbbbbbb"]);
        let r = brute_force_decompositions(
            &z,
            &OracleBudget {
                max_word_len: 9,
                ..OracleBudget::default()
            },
        )
        .unwrap();
        assert!(r.is_code);
        assert!(r.decompositions.is_empty());
    }

    #[test]
    fn oracle_rejects_contract_violations() {
        let z = lang(&["a", "ab"]);
        assert!(matches!(
            brute_force_decompositions(&z, &OracleBudget::default()),
            Err(Error::LengthOneWord { .. })
        ));
    }

    #[test]
    fn oracle_budget_is_an_error_not_a_verdict() {
        let z = lang(&["abb", "abbab"]);
        let r = brute_force_decompositions(
            &z,
            &OracleBudget {
                max_steps: 1,
                ..OracleBudget::default()
            },
        );
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }
}
