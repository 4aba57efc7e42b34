//! Benchmark harness probing how the decision search scales with the
//! minimal first-letter block size, the parameter the worst case is
//! exponential in.
//!
//! Each grid cell `(k, |Z|, maxlen)` is instantiated with planted
//! alt-induced codes, so every completed verdict can be validated against
//! ground truth; runs that exceed the budget are recorded as such, never
//! as a verdict.

use std::io::Write;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::fic::{self, Decomposition, SearchBudget};
use crate::gen;
use crate::lang::FiniteLanguage;
use crate::{Error, Result};

/// One benchmark run. `min_block_size` is the scaling parameter `n`;
/// `candidates` counts every `Y` and `X` candidate the search examined.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub k: usize,
    pub z_size: usize,
    pub min_word_len: usize,
    pub min_block_size: usize,
    pub wall_micros: u64,
    pub candidates: u64,
    pub verdict: String,
}

/// One cell of the parameter grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GridCell {
    pub k: usize,
    pub size: usize,
    pub maxlen: usize,
    pub reps: usize,
}

/// Parses a grid spec: semicolon-separated cells of
/// `k=K,size=N,maxlen=L,reps=R` (reps defaults to 1).
pub fn parse_grid(spec: &str) -> Result<Vec<GridCell>> {
    let mut cells = Vec::new();
    for (i, cell_text) in spec.split(';').enumerate() {
        let cell_text = cell_text.trim();
        if cell_text.is_empty() {
            continue;
        }
        let mut k = None;
        let mut size = None;
        let mut maxlen = None;
        let mut reps = 1usize;
        for part in cell_text.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("grid cell {i}: expected key=value, got '{part}'"))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("grid cell {i}: '{value}' is not a number"))
            })?;
            match key.trim() {
                "k" => k = Some(value),
                "size" => size = Some(value),
                "maxlen" => maxlen = Some(value),
                "reps" => reps = value,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "grid cell {i}: unknown key '{other}'"
                    )))
                }
            }
        }
        cells.push(GridCell {
            k: k.ok_or_else(|| Error::InvalidInput(format!("grid cell {i}: missing k=")))?,
            size: size.ok_or_else(|| Error::InvalidInput(format!("grid cell {i}: missing size=")))?,
            maxlen: maxlen
                .ok_or_else(|| Error::InvalidInput(format!("grid cell {i}: missing maxlen=")))?,
            reps,
        });
    }
    Ok(cells)
}

/// Plants a hard instance for a cell: `Z = XY` with `|X| = 2`, the two
/// `X`-words starting with different letters and `Y` a prefix code of
/// size `|Z|/2` with at least two distinct last letters. This pins the
/// minimal block size to `|Z|/2` and keeps `Z` in standard form, so the
/// verdict must come from the search rather than a reduction route.
/// Falls back to the general planted generator when `|Z|` is odd.
pub fn plant_instance(cell: &GridCell, seed: u64) -> Result<(FiniteLanguage, Decomposition)> {
    if !cell.size.is_multiple_of(2) || cell.size < 4 || cell.k < 2 {
        let inst = gen::gen_instance(&gen::GenParams {
            kind: gen::GenKind::AltInduced,
            alphabet_size: cell.k,
            size: cell.size,
            maxlen: cell.maxlen,
            seed,
        })?;
        let planted = inst.planted.expect("alt-induced instances carry a pair");
        return Ok((inst.language, planted));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y_size = cell.size / 2;
    let x_maxlen = 3.min(cell.maxlen.saturating_sub(2)).max(1);
    let y_maxlen = (cell.maxlen - x_maxlen).max(2);
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let y = gen::random_prefix_code(cell.k, y_size, y_maxlen, &mut rng)?;
        let lasts: std::collections::BTreeSet<_> =
            y.iter().map(|w| w.last().expect("non-empty")).collect();
        if lasts.len() < 2 {
            continue;
        }
        let alphabet = y.alphabet().clone();
        let letters: Vec<_> = alphabet.letters().collect();
        let mut x_words = Vec::new();
        for &first in letters.iter().take(2) {
            let extra = rng.random_range(0..x_maxlen);
            let mut word = vec![first];
            for _ in 0..extra {
                word.push(letters[rng.random_range(0..letters.len())]);
            }
            x_words.push(crate::lang::Word::from_letters(word));
        }
        let x = FiniteLanguage::new(alphabet, x_words)?;
        let z = x.product(&y)?;
        if z.len() != cell.size {
            continue;
        }
        let planted = Decomposition { x, y };
        debug_assert!(planted.is_valid_for(&z));
        return Ok((z, planted));
    }
    Err(Error::Infeasible(format!(
        "could not plant a standard-form instance for cell {cell:?}"
    )))
}

/// Runs the grid and appends one CSV record per run to `out`. Budget
/// exhaustion is recorded with verdict `budget`; the harness never
/// crashes on it.
pub fn bench_fic(
    cells: &[GridCell],
    budget: &SearchBudget,
    out: impl Write,
) -> Result<Vec<BenchRecord>> {
    let mut writer = csv::Writer::from_writer(out);
    let mut records = Vec::new();
    for (cell_idx, cell) in cells.iter().enumerate() {
        for rep in 0..cell.reps {
            let seed = (cell_idx as u64) << 32 | rep as u64;
            let (z, planted) = plant_instance(cell, seed)?;
            let record = run_one(
                &format!("k{}s{}l{}r{}", cell.k, cell.size, cell.maxlen, rep),
                &z,
                Some(&planted),
                budget,
            );
            writer.serialize(&record)?;
            writer.flush()?;
            records.push(record);
        }
    }
    Ok(records)
}

/// Times one decision and folds the outcome into a record. When a planted
/// pair is supplied the completed verdict is validated against it.
pub fn run_one(
    instance: &str,
    z: &FiniteLanguage,
    planted: Option<&Decomposition>,
    budget: &SearchBudget,
) -> BenchRecord {
    let min_block_size = z
        .partition_by_first_letter()
        .map(|p| p.block_sizes().iter().map(|(_, n)| *n).min().unwrap_or(0))
        .unwrap_or(0);
    let started = Instant::now();
    let outcome = fic::decide_alt_induced(z, budget);
    let wall_micros = started.elapsed().as_micros() as u64;
    let (verdict, candidates) = match outcome {
        Ok(report) => {
            if planted.is_some() {
                assert!(
                    report.is_alt_induced(),
                    "planted instance {instance} judged NotAltInduced"
                );
            }
            let verdict = match report.verdict {
                fic::Verdict::AltInduced => "AltInduced",
                fic::Verdict::NotAltInduced => "NotAltInduced",
            };
            (verdict.to_string(), report.stats.candidates())
        }
        Err(Error::BudgetExceeded { .. }) => ("budget".to_string(), budget.max_candidates),
        Err(e) => (format!("error: {e}"), 0),
    };
    BenchRecord {
        instance: instance.to_string(),
        k: z.alphabet().len(),
        z_size: z.len(),
        min_word_len: z.min_word_len(),
        min_block_size,
        wall_micros,
        candidates,
        verdict,
    }
}
