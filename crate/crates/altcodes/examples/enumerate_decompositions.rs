//! Complete enumeration of inducing pairs, and the strong subset.
//!
//! ```bash
//! cargo run --example enumerate_decompositions
//! ```

use altcodes::fic::{analyze, enumerate_decompositions, enumerate_strong_decompositions, SearchBudget};
use altcodes::FiniteLanguage;

fn main() {
    let budget = SearchBudget::default();
    let fixtures = [
        FiniteLanguage::from_words(["abb", "abbab"]),
        FiniteLanguage::from_words(["aa"]),
        FiniteLanguage::from_words([
            "abaa", "abab", "abbaa", "abbab", "abbbaa", "abbbab", "abbbbaa", "abbbbab", "bbaaa",
            "bbaab", "bbabaa", "bbabab",
        ]),
    ];
    for z in &fixtures {
        println!("{z}");
        let all = enumerate_decompositions(z, &budget).unwrap();
        println!("  {} decomposition(s):", all.len());
        for d in &all {
            println!("    {d}");
        }
        let strong = enumerate_strong_decompositions(z, &budget).unwrap();
        println!("  {} strong:", strong.len());
        for d in &strong {
            println!("    {d}");
        }
        println!();
    }

    // the aggregated per-language report
    let z = FiniteLanguage::from_words(["abb", "abbab"]);
    let report = analyze(&z, &budget).unwrap();
    println!(
        "analysis of {z}: code {}, suffix {}, alt-induced {:?}, strong alt-induced {:?}",
        report.class.is_code,
        report.class.is_suffix,
        report.decision.as_ref().map(|d| d.verdict),
        report.is_strong_alt_induced(),
    );
}
