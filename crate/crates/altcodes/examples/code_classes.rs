//! Prefix/suffix/bifix classification and maximality via exact Kraft
//! sums.
//!
//! ```bash
//! cargo run --example code_classes
//! ```

use altcodes::check::classify;
use altcodes::FiniteLanguage;

fn main() {
    let sets = [
        FiniteLanguage::from_words(["aa", "ab", "baa", "bab"]),
        FiniteLanguage::from_words(["ab", "abbb", "bba"]),
        FiniteLanguage::from_words(["aa", "ab", "ba", "bb"]),
        FiniteLanguage::from_words(["a", "aa"]),
    ];
    for z in &sets {
        let report = classify(z).unwrap();
        println!("{z}");
        println!("  kraft sum       : {}", z.kraft_sum().unwrap());
        println!("  code            : {}", report.is_code);
        println!(
            "  prefix/suffix   : {}/{} (bifix {})",
            report.is_prefix, report.is_suffix, report.is_bifix
        );
        println!(
            "  maximal p/s/b   : {}/{}/{}",
            report.is_maximal_prefix, report.is_maximal_suffix, report.is_maximal_bifix
        );
        if let Some(w) = &report.witness {
            println!("  ambiguous word  : {}", w.word);
        }
        println!();
    }
}
