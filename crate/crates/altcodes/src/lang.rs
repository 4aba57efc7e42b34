//! Alphabets, words and finite languages, with the set algebra everything
//! else is built on: products, powers, left/right quotients, prefix/suffix
//! sets, first-letter partitions, reversal and Kraft sums.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so they can be shared freely across threads.
//!
//! Words are ordered by length first and lexicographically second. This is
//! the canonical order used everywhere a deterministic enumeration is
//! needed (set iteration, subset streaming, search traces).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational number used for Kraft sums.
pub type Rational = num_rational::Ratio<BigInt>;

/// A single symbol of an alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(char);

impl Letter {
    pub fn new(c: char) -> Self {
        Letter(c)
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter(c)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// A finite sequence of letters. The empty word is the unique word of
/// length zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// `prefix⁻¹ self`: the remainder after removing `prefix` from the
    /// front, if it is a prefix at all.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if self.starts_with(prefix) {
            Some(Word(self.0[prefix.len()..].to_vec()))
        } else {
            None
        }
    }

    /// `self suffix⁻¹`: the remainder after removing `suffix` from the
    /// back, if it is a suffix at all.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        if self.ends_with(suffix) {
            Some(Word(self.0[..self.len() - suffix.len()].to_vec()))
        } else {
            None
        }
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// All proper prefixes, including the empty word, by increasing length.
    pub fn proper_prefixes(&self) -> Vec<Word> {
        (0..self.len()).map(|i| Word(self.0[..i].to_vec())).collect()
    }

    /// All proper suffixes, including the empty word, by increasing length.
    pub fn proper_suffixes(&self) -> Vec<Word> {
        (0..self.len())
            .map(|i| Word(self.0[self.len() - i..].to_vec()))
            .collect()
    }
}

/// Canonical order: by length, then lexicographically.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().map(Letter).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let s: String = self.0.iter().map(|l| l.0).collect();
        serializer.serialize_str(&s)
    }
}

/// A declared finite set of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Alphabet(BTreeSet<Letter>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        Alphabet(letters.into_iter().collect())
    }

    /// The first `k` lowercase letters `a, b, c, …`.
    pub fn of_size(k: usize) -> Result<Self> {
        if k > 26 {
            return Err(Error::InvalidInput(format!(
                "alphabet size {k} exceeds the supported maximum of 26"
            )));
        }
        Ok(Alphabet(
            ('a'..)
                .take(k)
                .map(Letter)
                .collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.0.contains(&letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet(self.0.union(&other.0).copied().collect())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl From<&str> for Alphabet {
    fn from(s: &str) -> Self {
        Alphabet(s.chars().map(Letter).collect())
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite set of words over a declared alphabet.
///
/// Set semantics: duplicates collapse, iteration is in canonical word
/// order. The alphabet is part of the value (Kraft sums and maximality
/// depend on it).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteLanguage {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl FiniteLanguage {
    /// Builds a language over an explicit alphabet, rejecting words that
    /// use letters outside it.
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            for l in w.letters() {
                if !alphabet.contains(l) {
                    return Err(Error::LetterOutsideAlphabet {
                        letter: l.as_char(),
                        word: w.to_string(),
                        alphabet: alphabet.to_string(),
                    });
                }
            }
        }
        Ok(FiniteLanguage { alphabet, words })
    }

    /// Builds a language whose alphabet is inferred as the set of letters
    /// occurring in the words.
    pub fn infer(words: impl IntoIterator<Item = Word>) -> Self {
        let words: BTreeSet<Word> = words.into_iter().collect();
        let alphabet = Alphabet(words.iter().flat_map(|w| w.letters()).collect());
        FiniteLanguage { alphabet, words }
    }

    /// Convenience constructor from `&str` words with an inferred alphabet.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Self {
        Self::infer(words.into_iter().map(Word::from))
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        FiniteLanguage {
            alphabet,
            words: BTreeSet::new(),
        }
    }

    /// The same word set over a different (superset or otherwise) alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Self::new(alphabet, self.words.iter().cloned())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.words.iter().next().is_some_and(Word::is_empty)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> + Clone {
        self.words.iter()
    }

    /// The canonically smallest word (shortest, then lexicographic).
    pub fn min_word(&self) -> Option<&Word> {
        self.words.iter().next()
    }

    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn min_word_len(&self) -> usize {
        self.words.iter().map(Word::len).min().unwrap_or(0)
    }

    fn same_words(&self, words: BTreeSet<Word>) -> FiniteLanguage {
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words,
        }
    }

    /// The product `XY = {xy | x ∈ X, y ∈ Y}`. Duplicates collapse, so
    /// `|XY| ≤ |X|·|Y|` with equality exactly when the product is
    /// unambiguous.
    pub fn product(&self, other: &FiniteLanguage) -> Result<FiniteLanguage> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        let mut words = BTreeSet::new();
        for x in &self.words {
            for y in &other.words {
                words.insert(x.concat(y));
            }
        }
        Ok(self.same_words(words))
    }

    /// `Xⁿ`, with `X⁰ = {ε}`.
    pub fn power(&self, n: u32) -> FiniteLanguage {
        let mut acc = self.same_words(BTreeSet::from([Word::empty()]));
        for _ in 0..n {
            // same alphabet on both sides, cannot fail
            acc = acc.product(self).expect("power of a language over its own alphabet");
        }
        acc
    }

    /// Left quotient `u⁻¹X = {v | uv ∈ X}`.
    pub fn left_quotient(&self, u: &Word) -> FiniteLanguage {
        self.same_words(
            self.words
                .iter()
                .filter_map(|w| w.strip_prefix(u))
                .collect(),
        )
    }

    /// Right quotient `Xu⁻¹ = {v | vu ∈ X}`.
    pub fn right_quotient(&self, u: &Word) -> FiniteLanguage {
        self.same_words(
            self.words
                .iter()
                .filter_map(|w| w.strip_suffix(u))
                .collect(),
        )
    }

    /// Set-lifted left quotient `W⁻¹X = ⋃_{w ∈ W} w⁻¹X`.
    pub fn left_quotient_by_set(&self, divisors: &FiniteLanguage) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for u in &divisors.words {
            words.extend(self.left_quotient(u).words);
        }
        self.same_words(words)
    }

    /// Set-lifted right quotient `XW⁻¹ = ⋃_{w ∈ W} Xw⁻¹`.
    pub fn right_quotient_by_set(&self, divisors: &FiniteLanguage) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for u in &divisors.words {
            words.extend(self.right_quotient(u).words);
        }
        self.same_words(words)
    }

    /// `Pref(X)`: proper prefixes of the words of `X`, including ε.
    pub fn proper_prefixes(&self) -> FiniteLanguage {
        self.same_words(
            self.words
                .iter()
                .flat_map(|w| w.proper_prefixes())
                .collect(),
        )
    }

    /// `Suff(X)`: proper suffixes of the words of `X`, including ε.
    pub fn proper_suffixes(&self) -> FiniteLanguage {
        self.same_words(
            self.words
                .iter()
                .flat_map(|w| w.proper_suffixes())
                .collect(),
        )
    }

    /// Letter-reversal of every word. An involution.
    pub fn reversed(&self) -> FiniteLanguage {
        self.same_words(self.words.iter().map(Word::reversed).collect())
    }

    pub fn union(&self, other: &FiniteLanguage) -> FiniteLanguage {
        self.same_words(self.words.union(&other.words).cloned().collect())
    }

    pub fn intersection(&self, other: &FiniteLanguage) -> FiniteLanguage {
        self.same_words(self.words.intersection(&other.words).cloned().collect())
    }

    pub fn difference(&self, other: &FiniteLanguage) -> FiniteLanguage {
        self.same_words(self.words.difference(&other.words).cloned().collect())
    }

    /// The language without the empty word.
    pub fn without_epsilon(&self) -> FiniteLanguage {
        self.same_words(
            self.words
                .iter()
                .filter(|w| !w.is_empty())
                .cloned()
                .collect(),
        )
    }

    /// Splits the language into its non-empty first-letter blocks.
    ///
    /// Fails when the language contains ε, which begins with no letter.
    pub fn partition_by_first_letter(&self) -> Result<FirstLetterPartition> {
        if self.contains_epsilon() {
            return Err(Error::EpsilonInInput {
                operation: "partition_by_first_letter",
            });
        }
        let mut blocks: std::collections::BTreeMap<Letter, BTreeSet<Word>> =
            std::collections::BTreeMap::new();
        for w in &self.words {
            let first = w.first().expect("ε was excluded above");
            blocks.entry(first).or_default().insert(w.clone());
        }
        Ok(FirstLetterPartition {
            blocks: blocks
                .into_iter()
                .map(|(l, words)| (l, self.same_words(words)))
                .collect(),
        })
    }

    /// `Σ_{x ∈ X} k^(−|x|)` over the declared alphabet of size `k`,
    /// as an exact rational.
    pub fn kraft_sum(&self) -> Result<Rational> {
        if self.contains_epsilon() {
            return Err(Error::EpsilonInInput {
                operation: "kraft_sum",
            });
        }
        if self.alphabet.is_empty() && !self.is_empty() {
            return Err(Error::InvalidInput(
                "kraft_sum requires an alphabet of size ≥ 1".into(),
            ));
        }
        let k = BigInt::from(self.alphabet.len().max(1));
        let mut sum = Rational::from_integer(BigInt::from(0));
        for w in &self.words {
            sum += Rational::new(BigInt::from(1), k.pow(w.len() as u32));
        }
        Ok(sum)
    }
}

/// Languages compare by their word sets first (in canonical word order),
/// then by alphabet. Used for canonical output ordering.
impl Ord for FiniteLanguage {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .cmp(&other.words)
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

impl PartialOrd for FiniteLanguage {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FiniteLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for FiniteLanguage {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.words.len()))?;
        for w in &self.words {
            seq.serialize_element(w)?;
        }
        seq.end()
    }
}

/// The non-empty blocks `Z_a = {w ∈ Z | w begins with a}`.
///
/// Blocks are pairwise disjoint and their union is the source language.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FirstLetterPartition {
    blocks: std::collections::BTreeMap<Letter, FiniteLanguage>,
}

impl FirstLetterPartition {
    pub fn blocks(&self) -> impl Iterator<Item = (Letter, &FiniteLanguage)> {
        self.blocks.iter().map(|(l, lang)| (*l, lang))
    }

    pub fn block(&self, letter: Letter) -> Option<&FiniteLanguage> {
        self.blocks.get(&letter)
    }

    pub fn block_sizes(&self) -> Vec<(Letter, usize)> {
        self.blocks.iter().map(|(l, lang)| (*l, lang.len())).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}
