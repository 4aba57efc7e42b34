//! The full decision pipeline on the worked instances: reduction routes,
//! the gcd obstruction, and the bounded search with its trace.
//!
//! ```bash
//! cargo run --example decide_alt_induced
//! ```

use altcodes::fic::{decide_alt_induced, SearchBudget};
use altcodes::FiniteLanguage;

fn main() {
    let fixtures = [
        ("reduction route", FiniteLanguage::from_words(["abb", "abbab"])),
        ("length-1 reject", FiniteLanguage::from_words(["a", "ab"])),
        (
            "search exhausts",
            FiniteLanguage::from_words(["aaa", "aab", "baa", "bbbbbbbbb"]),
        ),
        (
            "gcd obstruction",
            FiniteLanguage::from_words([
                "abc", "acb", "bac", "bca", "bbac", "cab", "cba", "caab",
            ]),
        ),
        (
            "search succeeds",
            FiniteLanguage::from_words([
                "abaa", "abab", "abbaa", "abbab", "abbbaa", "abbbab", "abbbbaa", "abbbbab",
                "bbaaa", "bbaab", "bbabaa", "bbabab",
            ]),
        ),
    ];

    let budget = SearchBudget::default();
    for (label, z) in &fixtures {
        let report = decide_alt_induced(z, &budget).unwrap();
        println!("[{label}] {z}");
        println!("  verdict : {:?} via {:?}", report.verdict, report.route);
        if let Some(d) = &report.decomposition {
            println!("  pair    : {d}");
        }
        if let Some(trace) = &report.trace {
            println!("  w = {}, admissible |Y| sizes {:?}", trace.w, trace.d_set);
            for step in &trace.steps {
                println!("    u = {:4}  S = {}", step.u.to_string(), step.s);
            }
            println!(
                "  candidates: {} Y, {} X",
                report.stats.y_tried, report.stats.x_tried
            );
        }
        println!();
    }
}
