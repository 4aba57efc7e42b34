//! Unambiguous-product, alternative-code, and strong-alternative-code
//! verdicts with evidence.
//!
//! The two available characterizations of each property are always
//! computed side by side and cross-asserted: unambiguity via the quotient
//! overlap `X⁻¹X ∩ YY⁻¹ \ {ε}` and via the cardinality identity
//! `|XY| = |X|·|Y|`; strength via the quotient inclusions and via the
//! prefix/suffix/code characterization. Disagreement between two routes
//! would be an internal defect and panics rather than returning a wrong
//! verdict.

use serde::Serialize;

use crate::check::{self, SpTrace};
use crate::fic::Decomposition;
use crate::lang::{FiniteLanguage, Word};
use crate::{Error, Result};

fn require_pair(x: &FiniteLanguage, y: &FiniteLanguage, operation: &'static str) -> Result<()> {
    for side in [x, y] {
        if side.is_empty() {
            return Err(Error::EmptyLanguage { operation });
        }
        if side.contains_epsilon() {
            return Err(Error::EpsilonInInput { operation });
        }
    }
    Ok(())
}

/// Unambiguity verdict for a product `XY`, with both criteria recorded.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProductVerdict {
    pub unambiguous: bool,
    /// `X⁻¹X ∩ YY⁻¹ \ {ε}` — empty exactly when the product is
    /// unambiguous; otherwise every element is an overlap certificate.
    pub overlap_set: FiniteLanguage,
    /// `(|XY|, |X|·|Y|)` — equal exactly when the product is unambiguous.
    pub cardinality_check: (usize, usize),
}

/// Checks the product `XY` for unambiguity by both criteria.
pub fn check_unambiguous(x: &FiniteLanguage, y: &FiniteLanguage) -> Result<ProductVerdict> {
    require_pair(x, y, "check_unambiguous")?;
    let overlap_set = x
        .left_quotient_by_set(x)
        .intersection(&y.right_quotient_by_set(y))
        .without_epsilon();
    let product = x.product(y)?;
    let cardinality_check = (product.len(), x.len() * y.len());
    let unambiguous = overlap_set.is_empty();
    assert_eq!(
        unambiguous,
        cardinality_check.0 == cardinality_check.1,
        "quotient-overlap and cardinality criteria disagree on ({x}, {y})"
    );
    Ok(ProductVerdict {
        unambiguous,
        overlap_set,
        cardinality_check,
    })
}

/// Alternative-code verdict: `(X, Y)` is an alternative code iff `XY` is
/// a code and the product `XY` is unambiguous.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AltVerdict {
    pub is_alternative: bool,
    pub product_code: SpTrace,
    pub product_unambiguous: ProductVerdict,
}

pub fn check_alternative(x: &FiniteLanguage, y: &FiniteLanguage) -> Result<AltVerdict> {
    require_pair(x, y, "check_alternative")?;
    let product = x.product(y)?;
    let product_code = check::sardinas_patterson(&product)?;
    let product_unambiguous = check_unambiguous(x, y)?;
    Ok(AltVerdict {
        is_alternative: product_code.is_code() && product_unambiguous.unambiguous,
        product_code,
        product_unambiguous,
    })
}

/// Strong-alternative verdict with violation evidence and the
/// characterization route.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StrongVerdict {
    pub is_strong: bool,
    /// `X⁻¹(XY) \ Y` — words reachable past an `X`-prefix that are not in
    /// `Y`; must be empty for a strong pair.
    pub condition1_violations: FiniteLanguage,
    /// `(XY)Y⁻¹ \ X` — symmetric evidence for the second condition.
    pub condition2_violations: FiniteLanguage,
    /// `(X is a prefix code, Y is a suffix code, XY is a code)` — all
    /// three hold exactly when the pair is strong.
    pub char_route: (bool, bool, bool),
}

/// Checks whether `(X, Y)` is a strong alternative code, evaluating both
/// the quotient conditions and the prefix/suffix/code characterization
/// and demanding agreement.
pub fn check_strong(x: &FiniteLanguage, y: &FiniteLanguage) -> Result<StrongVerdict> {
    require_pair(x, y, "check_strong")?;
    let alt = check_alternative(x, y)?;
    let product = x.product(y)?;
    let condition1_violations = product.left_quotient_by_set(x).difference(y);
    let condition2_violations = product.right_quotient_by_set(y).difference(x);
    let by_definition = alt.is_alternative
        && condition1_violations.is_empty()
        && condition2_violations.is_empty();
    let char_route = (
        check::is_prefix_code(x)?,
        check::is_suffix_code(y)?,
        alt.product_code.is_code(),
    );
    let by_characterization = char_route.0 && char_route.1 && char_route.2;
    assert_eq!(
        by_definition, by_characterization,
        "strong-code conditions and characterization disagree on ({x}, {y})"
    );
    Ok(StrongVerdict {
        is_strong: by_definition,
        condition1_violations,
        condition2_violations,
        char_route,
    })
}

/// Evaluates the three equivalent formulations of the strength
/// conditions — the inclusions, the equalities, and the pointwise
/// equalities — and returns their truth values. The three always
/// coincide (the reverse inclusions hold unconditionally), which is
/// asserted.
pub fn strong_condition_forms(
    x: &FiniteLanguage,
    y: &FiniteLanguage,
) -> Result<(bool, bool, bool)> {
    require_pair(x, y, "strong_condition_forms")?;
    let product = x.product(y)?;
    let left = product.left_quotient_by_set(x);
    let right = product.right_quotient_by_set(y);

    let inclusions = left.difference(y).is_empty() && right.difference(x).is_empty();
    let equalities = &left == y && &right == x;
    let pointwise = x.iter().all(|xw| &product.left_quotient(xw) == y)
        && y.iter().all(|yw| &product.right_quotient(yw) == x);

    assert!(
        inclusions == equalities && equalities == pointwise,
        "the three strength formulations must coincide on ({x}, {y})"
    );
    Ok((inclusions, equalities, pointwise))
}

/// Sufficiency shortcut: when `Z = XY` is a code and `X` is a prefix code
/// or `Y` is a suffix code, the pair certifies `Z` alt-induced without
/// the unambiguity computation.
///
/// Requires `Z = XY` (checked); code-ness of `Z` is the caller's
/// precondition.
pub fn induced_by_sufficiency(
    z: &FiniteLanguage,
    x: &FiniteLanguage,
    y: &FiniteLanguage,
) -> Result<bool> {
    require_pair(x, y, "induced_by_sufficiency")?;
    let product = x.product(y)?;
    if &product != z {
        return Err(Error::InvalidInput(format!(
            "induced_by_sufficiency: XY = {product} does not equal Z = {z}"
        )));
    }
    Ok(check::is_prefix_code(x)? || check::is_suffix_code(y)?)
}

/// For an alt-induced code `Z` and `n ≥ 2`, the pair `(Zⁿ⁻¹, Z)` is an
/// alternative code inducing `Zⁿ`. Alt-inducedness of `Z` itself is the
/// caller's certificate.
pub fn power_alt_induced(z: &FiniteLanguage, n: u32) -> Result<Decomposition> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "power_alt_induced requires n ≥ 2, got {n}"
        )));
    }
    require_pair(z, z, "power_alt_induced")?;
    Ok(Decomposition {
        x: z.power(n - 1),
        y: z.clone(),
    })
}

/// Truncates evidence languages for reporting. Diagnosis needs a few
/// elements, not all of them.
pub fn cap_evidence(lang: &FiniteLanguage, cap: usize) -> (Vec<Word>, bool) {
    let words: Vec<Word> = lang.iter().take(cap).cloned().collect();
    (words, lang.len() > cap)
}

/// Default number of evidence elements shown in reports.
pub const DEFAULT_EVIDENCE_CAP: usize = 16;

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(words: &[&str]) -> FiniteLanguage {
        FiniteLanguage::from_words(words.iter().copied())
    }

    fn pair(xs: &[&str], ys: &[&str]) -> (FiniteLanguage, FiniteLanguage) {
        let x = lang(xs);
        let y = lang(ys);
        let alphabet = x.alphabet().union(y.alphabet());
        (
            x.with_alphabet(alphabet.clone()).unwrap(),
            y.with_alphabet(alphabet).unwrap(),
        )
    }

    #[test]
    fn unambiguity_of_the_introductory_pair() {
        let (x, y) = pair(&["ab", "abba"], &["b"]);
        let v = check_unambiguous(&x, &y).unwrap();
        assert!(v.unambiguous);
        assert_eq!(v.cardinality_check, (2, 2));
    }

    #[test]
    fn ambiguity_with_overlap_evidence() {
        let (x, y) = pair(&["a", "aa"], &["a", "aa"]);
        let v = check_unambiguous(&x, &y).unwrap();
        assert!(!v.unambiguous);
        assert!(v.overlap_set.contains(&Word::from("a")));
        assert_eq!(v.cardinality_check.0, 3);
        assert_eq!(v.cardinality_check.1, 4);
    }

    #[test]
    fn unambiguity_of_the_twelve_word_product() {
        let (x, y) = pair(&["ab", "abbb", "bba"], &["aa", "ab", "baa", "bab"]);
        let v = check_unambiguous(&x, &y).unwrap();
        assert!(v.unambiguous);
        assert_eq!(v.cardinality_check, (12, 12));
    }

    #[test]
    fn alternative_verdicts() {
        let (x, y) = pair(&["ab", "abba"], &["b"]);
        assert!(check_alternative(&x, &y).unwrap().is_alternative);

        let (x, y) = pair(&["a"], &["a"]);
        assert!(check_alternative(&x, &y).unwrap().is_alternative);

        // {aa, baa}·{aa, aab} is not a code, hence not an alternative pair
        let (x, y) = pair(&["aa", "baa"], &["aa", "aab"]);
        let v = check_alternative(&x, &y).unwrap();
        assert!(!v.is_alternative);
        assert!(!v.product_code.is_code());
        assert!(v.product_unambiguous.unambiguous);
    }

    #[test]
    fn strong_fails_with_condition_two_evidence() {
        let (x, y) = pair(&["ab"], &["b", "bab"]);
        let v = check_strong(&x, &y).unwrap();
        assert!(!v.is_strong);
        assert!(v.condition2_violations.contains(&Word::from("abba")));
        // consistently, Y is not a suffix code
        assert!(!v.char_route.1);
    }

    #[test]
    fn strong_holds_for_simple_pairs() {
        let (x, y) = pair(&["a"], &["b"]);
        assert!(check_strong(&x, &y).unwrap().is_strong);

        let (x, y) = pair(&["a", "ba"], &["ab", "bb"]);
        let v = check_strong(&x, &y).unwrap();
        assert!(v.is_strong);
        assert_eq!(v.char_route, (true, true, true));
    }

    #[test]
    fn the_three_strength_forms_coincide() {
        let (x, y) = pair(&["a"], &["b"]);
        assert_eq!(strong_condition_forms(&x, &y).unwrap(), (true, true, true));

        let (x, y) = pair(&["ab"], &["b", "bab"]);
        assert_eq!(
            strong_condition_forms(&x, &y).unwrap(),
            (false, false, false)
        );

        let (x, y) = pair(&["a", "ba"], &["ab", "bb"]);
        assert_eq!(strong_condition_forms(&x, &y).unwrap(), (true, true, true));
    }

    #[test]
    fn sufficiency_shortcut() {
        let z = lang(&["abb", "abbab"]);
        let (x, y) = pair(&["a"], &["bb", "bbab"]);
        assert!(induced_by_sufficiency(&z, &x, &y).unwrap());

        let (x, y) = pair(&["ab", "abba"], &["b"]);
        assert!(induced_by_sufficiency(&z, &x, &y).unwrap());

        let z2 = lang(&["aa"]);
        let (x, y) = pair(&["a"], &["a"]);
        assert!(induced_by_sufficiency(&z2, &x, &y).unwrap());

        // mismatched product is a contract violation
        let (x, y) = pair(&["a"], &["b"]);
        assert!(induced_by_sufficiency(&z, &x, &y).is_err());
    }

    #[test]
    fn powers_of_alt_induced_codes() {
        let z = lang(&["abb", "abbab"]);
        let d = power_alt_induced(&z, 2).unwrap();
        assert_eq!(d.x, z);
        assert_eq!(d.y, z);
        assert!(check_alternative(&d.x, &d.y).unwrap().is_alternative);

        let z = lang(&["aa"]);
        let d = power_alt_induced(&z, 3).unwrap();
        assert_eq!(d.x, lang(&["aaaa"]).with_alphabet(z.alphabet().clone()).unwrap());
        assert_eq!(
            d.x.product(&d.y).unwrap(),
            lang(&["aaaaaa"]).with_alphabet(z.alphabet().clone()).unwrap()
        );

        assert!(power_alt_induced(&z, 1).is_err());
    }
}
