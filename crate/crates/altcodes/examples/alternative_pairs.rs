//! Pair verdicts: unambiguous products, alternative codes, strong
//! alternative codes, and the three equivalent strength formulations.
//!
//! ```bash
//! cargo run --example alternative_pairs
//! ```

use altcodes::alt::{check_alternative, check_strong, check_unambiguous, strong_condition_forms};
use altcodes::{Alphabet, FiniteLanguage, Word};

fn lang(words: &[&str]) -> FiniteLanguage {
    FiniteLanguage::new(
        Alphabet::from("ab"),
        words.iter().map(|w| Word::from(*w)),
    )
    .unwrap()
}

fn main() {
    let pairs = [
        (lang(&["ab", "abba"]), lang(&["b"])),
        (lang(&["a", "aa"]), lang(&["a", "aa"])),
        (lang(&["ab"]), lang(&["b", "bab"])),
        (lang(&["a", "ba"]), lang(&["ab", "bb"])),
    ];
    for (x, y) in &pairs {
        println!("X = {x}, Y = {y}");
        let product = check_unambiguous(x, y).unwrap();
        println!(
            "  unambiguous : {} (|XY| = {}, |X|·|Y| = {})",
            product.unambiguous, product.cardinality_check.0, product.cardinality_check.1
        );
        if !product.overlap_set.is_empty() {
            println!("  overlap     : {}", product.overlap_set);
        }
        let alternative = check_alternative(x, y).unwrap();
        println!("  alternative : {}", alternative.is_alternative);
        let strong = check_strong(x, y).unwrap();
        println!(
            "  strong      : {} (X prefix {}, Y suffix {}, XY code {})",
            strong.is_strong, strong.char_route.0, strong.char_route.1, strong.char_route.2
        );
        if !strong.condition2_violations.is_empty() {
            println!("  (XY)Y⁻¹ ⊈ X : {}", strong.condition2_violations);
        }
        let forms = strong_condition_forms(x, y).unwrap();
        println!("  condition forms agree: {forms:?}");
        println!();
    }
}
