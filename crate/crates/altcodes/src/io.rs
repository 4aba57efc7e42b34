//! The language file format.
//!
//! UTF-8 text, one word per line. An optional first line
//! `#alphabet <letters>` declares the alphabet (letters concatenated, no
//! separators); otherwise the alphabet is inferred from the words. Lines
//! starting with `#` are comments, trailing whitespace is stripped, empty
//! lines are ignored, and duplicate words collapse with a warning.

use crate::lang::{Alphabet, FiniteLanguage, Letter, Word};
use crate::{Error, Result};

/// A parsed language plus any warnings (currently only duplicate lines).
#[derive(Clone, Debug)]
pub struct ParsedLanguage {
    pub language: FiniteLanguage,
    pub warnings: Vec<String>,
}

/// Parses the language file format. Errors carry the 1-based line number.
pub fn parse_language(text: &str) -> Result<ParsedLanguage> {
    let mut declared: Option<Alphabet> = None;
    let mut words: Vec<(usize, Word)> = Vec::new();
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if line_no == 1 {
                if let Some(rest) = line.strip_prefix("#alphabet") {
                    let letters: Vec<Letter> = rest
                        .chars()
                        .filter(|c| !c.is_whitespace())
                        .map(Letter::new)
                        .collect();
                    if letters.is_empty() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "#alphabet declares no letters".into(),
                        });
                    }
                    declared = Some(Alphabet::new(letters));
                }
            }
            continue;
        }
        let word = Word::from(line);
        if let Some(alphabet) = &declared {
            for l in word.letters() {
                if !alphabet.contains(l) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!(
                            "word '{word}' uses letter '{}' outside declared alphabet {{{alphabet}}}",
                            l.as_char()
                        ),
                    });
                }
            }
        }
        if words.iter().any(|(_, w)| w == &word) {
            warnings.push(format!("line {line_no}: duplicate word '{word}' collapsed"));
            continue;
        }
        words.push((line_no, word));
    }

    let language = match declared {
        Some(alphabet) => {
            FiniteLanguage::new(alphabet, words.into_iter().map(|(_, w)| w)).map_err(|e| {
                Error::Parse {
                    line: 0,
                    message: e.to_string(),
                }
            })?
        }
        None => FiniteLanguage::infer(words.into_iter().map(|(_, w)| w)),
    };
    Ok(ParsedLanguage { language, warnings })
}

/// Renders a language in the file format, alphabet header included, words
/// in canonical order. `parse_language(render_language(L)) == L`.
pub fn render_language(lang: &FiniteLanguage) -> String {
    let mut out = String::new();
    out.push_str(&format!("#alphabet {}\n", lang.alphabet()));
    for w in lang.iter() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

/// Reads and parses a language file from disk.
pub fn read_language_file(path: &std::path::Path) -> Result<ParsedLanguage> {
    let text = std::fs::read_to_string(path)?;
    parse_language(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_comments_blanks_and_duplicates() {
        let text = "#alphabet ab\n# a fixture\nabb\n\nabbab  \nabb\n";
        let parsed = parse_language(text).unwrap();
        assert_eq!(parsed.language, {
            FiniteLanguage::new(
                Alphabet::from("ab"),
                [Word::from("abb"), Word::from("abbab")],
            )
            .unwrap()
        });
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parsed.warnings[0].contains("duplicate"));
    }

    #[test]
    fn infers_alphabet_when_undeclared() {
        let parsed = parse_language("ba\ncab\n").unwrap();
        assert_eq!(parsed.language.alphabet().to_string(), "abc");
    }

    #[test]
    fn rejects_letters_outside_declared_alphabet_with_line_number() {
        let err = parse_language("#alphabet ab\nab\nacb\n");
        match err {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_preserves_language() {
        let lang = FiniteLanguage::new(
            Alphabet::from("abc"),
            [Word::from("ab"), Word::from("ca"), Word::from("bbb")],
        )
        .unwrap();
        let parsed = parse_language(&render_language(&lang)).unwrap();
        assert_eq!(parsed.language, lang);
        assert!(parsed.warnings.is_empty());
    }
}
