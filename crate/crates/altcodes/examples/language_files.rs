//! The language file format: parsing with warnings and line-numbered
//! errors, rendering, and round-tripping.
//!
//! ```bash
//! cargo run --example language_files
//! ```

use altcodes::io::{parse_language, render_language};

fn main() {
    let text = "\
#alphabet ab
# the running example
abb
abbab
abb
";
    let parsed = parse_language(text).unwrap();
    println!("parsed: {}", parsed.language);
    println!("alphabet: {{{}}}", parsed.language.alphabet());
    for w in &parsed.warnings {
        println!("warning: {w}");
    }

    let rendered = render_language(&parsed.language);
    println!("\nrendered:\n{rendered}");
    assert_eq!(parse_language(&rendered).unwrap().language, parsed.language);

    // letters outside a declared alphabet fail with the line number
    match parse_language("#alphabet ab\nab\nxyz\n") {
        Err(e) => println!("rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
