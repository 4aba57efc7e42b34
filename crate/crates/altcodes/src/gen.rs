//! Deterministic instance generators: random prefix codes (by random leaf
//! selection in the k-ary tree), maximal prefix codes (Kraft sum exactly
//! 1), alt-induced codes planted as products of prefix codes, and random
//! codes by rejection sampling against Sardinas–Patterson.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check;
use crate::fic::Decomposition;
use crate::lang::{Alphabet, FiniteLanguage, Word};
use crate::{Error, Result};

/// What to generate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    Prefix,
    MaximalPrefix,
    AltInduced,
    RandomCode,
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix" => Ok(GenKind::Prefix),
            "maximal-prefix" => Ok(GenKind::MaximalPrefix),
            "alt-induced" => Ok(GenKind::AltInduced),
            "random-code" => Ok(GenKind::RandomCode),
            other => Err(Error::InvalidInput(format!(
                "unknown generator kind '{other}' (expected prefix|maximal-prefix|alt-induced|random-code)"
            ))),
        }
    }
}

/// Generator parameters. Output is a pure function of these.
#[derive(Clone, Debug)]
pub struct GenParams {
    pub kind: GenKind,
    pub alphabet_size: usize,
    pub size: usize,
    pub maxlen: usize,
    pub seed: u64,
}

/// A generated instance; `planted` carries the constructed factor pair
/// for `GenKind::AltInduced`.
#[derive(Clone, Debug)]
pub struct GenInstance {
    pub language: FiniteLanguage,
    pub planted: Option<Decomposition>,
}

pub fn gen_instance(params: &GenParams) -> Result<GenInstance> {
    if params.alphabet_size == 0 || params.size == 0 || params.maxlen == 0 {
        return Err(Error::Infeasible(
            "alphabet size, size and maxlen must all be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    match params.kind {
        GenKind::Prefix => Ok(GenInstance {
            language: random_prefix_code(
                params.alphabet_size,
                params.size,
                params.maxlen,
                &mut rng,
            )?,
            planted: None,
        }),
        GenKind::MaximalPrefix => Ok(GenInstance {
            language: random_maximal_prefix_code(
                params.alphabet_size,
                params.size,
                params.maxlen,
                &mut rng,
            )?,
            planted: None,
        }),
        GenKind::AltInduced => gen_alt_induced(params, &mut rng),
        GenKind::RandomCode => Ok(GenInstance {
            language: random_code(params.alphabet_size, params.size, params.maxlen, &mut rng)?,
            planted: None,
        }),
    }
}

/// Tree capacity below a node of length `len`: the number of leaves of
/// length ≤ `maxlen` in its subtree.
fn capacity_below(k: usize, len: usize, maxlen: usize) -> u128 {
    (k as u128).saturating_pow((maxlen - len) as u32)
}

/// Grows a random prefix code of exactly `size` words of length ≤
/// `maxlen`: maintain the frontier of available tree leaves, repeatedly
/// pick one at random and either take it as a codeword or expand it into
/// its `k` children, never letting the remaining capacity drop below what
/// is still needed.
pub fn random_prefix_code(
    k: usize,
    size: usize,
    maxlen: usize,
    rng: &mut impl Rng,
) -> Result<FiniteLanguage> {
    let alphabet = Alphabet::of_size(k)?;
    let total_capacity = capacity_below(k, 0, maxlen);
    if (size as u128) > total_capacity {
        return Err(Error::Infeasible(format!(
            "no prefix code of {size} words fits within length {maxlen} over {k} letters"
        )));
    }
    let mut frontier: Vec<Word> = alphabet
        .letters()
        .map(|l| Word::from_letters([l]))
        .collect();
    let mut capacity = total_capacity;
    let mut chosen: Vec<Word> = Vec::new();

    while chosen.len() < size {
        let need = (size - chosen.len()) as u128;
        let idx = rng.random_range(0..frontier.len());
        let node = frontier[idx].clone();
        let node_cap = capacity_below(k, node.len(), maxlen);
        let can_accept = capacity - node_cap >= need - 1;
        let can_expand = node.len() < maxlen;
        let accept = if !can_accept {
            false
        } else if !can_expand {
            true
        } else {
            rng.random_bool(0.5)
        };
        if accept {
            frontier.swap_remove(idx);
            capacity -= node_cap;
            chosen.push(node);
        } else {
            debug_assert!(can_expand, "a maxlen leaf is always acceptable");
            frontier.swap_remove(idx);
            for l in alphabet.letters() {
                frontier.push(node.concat(&Word::from_letters([l])));
            }
        }
    }
    FiniteLanguage::new(alphabet, chosen)
}

/// Grows a maximal prefix code of exactly `size` words: start from the
/// full alphabet (Kraft sum 1) and repeatedly replace a random leaf of
/// length < `maxlen` by its `k` children, which preserves the Kraft sum.
pub fn random_maximal_prefix_code(
    k: usize,
    size: usize,
    maxlen: usize,
    rng: &mut impl Rng,
) -> Result<FiniteLanguage> {
    let alphabet = Alphabet::of_size(k)?;
    if k == 1 {
        if size != 1 {
            return Err(Error::Infeasible(
                "over one letter every maximal prefix code is a singleton".into(),
            ));
        }
        let len = rng.random_range(1..=maxlen);
        let l = alphabet.letters().next().expect("k = 1");
        return FiniteLanguage::new(alphabet, [Word::from_letters(std::iter::repeat_n(l, len))]);
    }
    if size < k || !(size - k).is_multiple_of(k - 1) {
        return Err(Error::Infeasible(format!(
            "a maximal prefix code over {k} letters has k + m(k−1) words; {size} is unreachable"
        )));
    }
    if (size as u128) > capacity_below(k, 0, maxlen) {
        return Err(Error::Infeasible(format!(
            "no maximal prefix code of {size} words fits within length {maxlen}"
        )));
    }
    let mut leaves: Vec<Word> = alphabet
        .letters()
        .map(|l| Word::from_letters([l]))
        .collect();
    let expansions = (size - k) / (k - 1);
    for _ in 0..expansions {
        let expandable: Vec<usize> = (0..leaves.len())
            .filter(|&i| leaves[i].len() < maxlen)
            .collect();
        // cannot be empty: all-at-maxlen means the tree is complete, i.e.
        // size would exceed k^maxlen, excluded above
        let idx = expandable[rng.random_range(0..expandable.len())];
        let node = leaves.swap_remove(idx);
        for l in alphabet.letters() {
            leaves.push(node.concat(&Word::from_letters([l])));
        }
    }
    FiniteLanguage::new(alphabet, leaves)
}

fn gen_alt_induced(params: &GenParams, rng: &mut impl Rng) -> Result<GenInstance> {
    let divisor_pairs: Vec<(usize, usize)> = (1..=params.size)
        .filter(|d| params.size.is_multiple_of(*d))
        .map(|d| (d, params.size / d))
        .collect();
    // prefer genuinely two-sided splits when the size allows one
    let proper: Vec<(usize, usize)> = divisor_pairs
        .iter()
        .copied()
        .filter(|(a, b)| *a >= 2 && *b >= 2)
        .collect();
    let (x_size, y_size) = if proper.is_empty() {
        divisor_pairs[rng.random_range(0..divisor_pairs.len())]
    } else {
        proper[rng.random_range(0..proper.len())]
    };
    let x_maxlen = (params.maxlen / 2).max(1);
    let y_maxlen = (params.maxlen - x_maxlen).max(1);
    let x = random_prefix_code(params.alphabet_size, x_size, x_maxlen, rng)?;
    let y = random_prefix_code(params.alphabet_size, y_size, y_maxlen, rng)?;
    let language = x.product(&y)?;
    debug_assert_eq!(language.len(), params.size, "prefix products are unambiguous");
    Ok(GenInstance {
        language,
        planted: Some(Decomposition { x, y }),
    })
}

/// Rejection-samples word sets until Sardinas–Patterson accepts one.
pub fn random_code(
    k: usize,
    size: usize,
    maxlen: usize,
    rng: &mut impl Rng,
) -> Result<FiniteLanguage> {
    let alphabet = Alphabet::of_size(k)?;
    let mut distinct_words: u128 = 0;
    for len in 1..=maxlen {
        distinct_words = distinct_words.saturating_add((k as u128).saturating_pow(len as u32));
    }
    if (size as u128) > distinct_words {
        return Err(Error::Infeasible(format!(
            "only {distinct_words} distinct words of length ≤ {maxlen} exist over {k} letters"
        )));
    }
    const MAX_ATTEMPTS: usize = 100_000;
    for _ in 0..MAX_ATTEMPTS {
        let mut words = std::collections::BTreeSet::new();
        let mut stuck = 0;
        while words.len() < size && stuck < 1000 {
            let len = rng.random_range(1..=maxlen);
            let w = Word::from_letters(
                (0..len).map(|_| {
                    let i = rng.random_range(0..k);
                    crate::lang::Letter::new((b'a' + i as u8) as char)
                }),
            );
            if !words.insert(w) {
                stuck += 1;
            }
        }
        if words.len() < size {
            continue;
        }
        let candidate = FiniteLanguage::new(alphabet.clone(), words)?;
        if check::sardinas_patterson(&candidate)?.is_code() {
            return Ok(candidate);
        }
    }
    Err(Error::Infeasible(format!(
        "failed to sample a code of {size} words of length ≤ {maxlen} over {k} letters"
    )))
}
