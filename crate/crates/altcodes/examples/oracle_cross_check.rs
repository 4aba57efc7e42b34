//! Cross-validation: the brute-force oracle against the decision
//! pipeline on a batch of generated instances.
//!
//! ```bash
//! cargo run --example oracle_cross_check
//! ```

use altcodes::fic::{decide_alt_induced, enumerate_decompositions, SearchBudget};
use altcodes::gen::{gen_instance, GenKind, GenParams};
use altcodes::oracle::{brute_force_decompositions, OracleBudget};

fn main() {
    let budget = SearchBudget::default();
    let oracle_budget = OracleBudget {
        max_suffixes: 32,
        ..OracleBudget::default()
    };

    let mut agreements = 0;
    for seed in 0..40u64 {
        let kind = if seed % 2 == 0 {
            GenKind::AltInduced
        } else {
            GenKind::RandomCode
        };
        let inst = gen_instance(&GenParams {
            kind,
            alphabet_size: 2,
            size: 4 + (seed % 3) as usize * 2,
            maxlen: 5,
            seed,
        })
        .unwrap();
        let z = inst.language;
        if z.min_word_len() < 2 {
            continue; // the oracle's candidate space needs lengths ≥ 2
        }
        let truth = match brute_force_decompositions(&z, &oracle_budget) {
            Ok(t) => t,
            Err(_) => continue, // outside the oracle's budget
        };
        let report = decide_alt_induced(&z, &budget).unwrap();
        let enumerated = enumerate_decompositions(&z, &budget).unwrap();
        assert_eq!(report.is_alt_induced(), !truth.decompositions.is_empty());
        assert_eq!(enumerated, truth.decompositions);
        agreements += 1;
        println!(
            "{z}\n  verdict {:?} via {:?}, {} pair(s) — oracle agrees",
            report.verdict,
            report.route,
            truth.decompositions.len()
        );
    }
    println!("\n{agreements} instances cross-checked, zero disagreements");
}
