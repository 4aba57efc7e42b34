//! Unique decipherability: run the Sardinas–Patterson test, inspect the
//! remainder-set trace, and extract a shortest double factorization when
//! the test fails.
//!
//! ```bash
//! cargo run --example sardinas_patterson
//! ```

use altcodes::check::{ambiguity_witness, sardinas_patterson};
use altcodes::FiniteLanguage;

fn main() {
    // a suffix code: the trace runs U₁ = {ab}, U₂ = {b, bab}, U₃ = ∅
    let code = FiniteLanguage::from_words(["abb", "abbab"]);
    let trace = sardinas_patterson(&code).unwrap();
    println!("{code} → {:?} ({:?})", trace.verdict, trace.halting_reason);
    for (i, u) in trace.u_sets.iter().enumerate() {
        println!("  U{} = {u}", i + 1);
    }

    // the product of two alt-induced codes need not be a code at all
    let not_code = FiniteLanguage::from_words(["aaaa", "aaaab", "baaaa", "baaaab"]);
    let trace = sardinas_patterson(&not_code).unwrap();
    println!("\n{not_code} → {:?} ({:?})", trace.verdict, trace.halting_reason);

    let witness = ambiguity_witness(&not_code).unwrap();
    println!(
        "shortest ambiguous word: {} = ({}) = ({})",
        witness.word,
        witness
            .factorization_a
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(")("),
        witness
            .factorization_b
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(")("),
    );
    assert!(witness.validate(&not_code));
}
