//! Deterministic tagging cascade: character classes, closed-class lexicon,
//! open-class lexicon, capitalization, suffix rules, context repair,
//! noun fallback.

use super::lexicon::Lexicons;
use super::tokenize::RawToken;
use super::PosTag;

const SUBJECT_PRONOUNS: &[&str] = &["i", "you", "he", "she", "it", "we", "they", "who"];

fn is_punct(surface: &str) -> bool {
    !surface.is_empty() && surface.chars().all(|c| !c.is_alphanumeric())
}

fn is_number(surface: &str) -> bool {
    surface.chars().any(|c| c.is_ascii_digit())
        && surface.chars().all(|c| c.is_ascii_digit() || c == '.' || c == ',')
}

fn starts_uppercase(surface: &str) -> bool {
    surface.chars().next().is_some_and(|c| c.is_uppercase())
}

/// Tag one tokenized sentence. Position 0 counts as sentence-initial for
/// the capitalization rules.
pub fn pos_tag(tokens: &[RawToken]) -> Vec<PosTag> {
    let lex = Lexicons::bundled();
    let mut tags: Vec<PosTag> = Vec::with_capacity(tokens.len());
    for (i, tok) in tokens.iter().enumerate() {
        let tag = tag_one(lex, tokens, &tags, i, tok);
        tags.push(tag);
    }
    tags
}

fn tag_one(
    lex: &Lexicons,
    tokens: &[RawToken],
    tags: &[PosTag],
    i: usize,
    tok: &RawToken,
) -> PosTag {
    if is_punct(&tok.surface) {
        return PosTag::Punct;
    }
    if is_number(&tok.surface) {
        return PosTag::Num;
    }
    let lower = tok.surface.to_lowercase();
    if let Some(&tag) = lex.closed.get(&lower) {
        return tag;
    }
    if let Some(&tag) = lex.open.get(&lower) {
        return tag;
    }
    // unknown word from here on
    if starts_uppercase(&tok.surface) && (i > 0 || lex.gazetteer.contains(&lower)) {
        return PosTag::Propn;
    }
    let prev_tag = if i > 0 { Some(tags[i - 1]) } else { None };
    if let Some(tag) = suffix_tag(&lower, prev_tag) {
        return tag;
    }
    if matches!(prev_tag, Some(PosTag::Det) | Some(PosTag::Adj)) {
        return PosTag::Noun;
    }
    if i > 0 {
        let prev = tokens[i - 1].surface.to_lowercase();
        let prev_is_subject = tags[i - 1] == PosTag::Pron && SUBJECT_PRONOUNS.contains(&prev.as_str());
        if prev_is_subject || prev == "to" {
            return PosTag::Verb;
        }
    }
    PosTag::Noun
}

fn suffix_tag(lower: &str, prev_tag: Option<PosTag>) -> Option<PosTag> {
    let has = |suffix: &str| {
        lower.len() > suffix.len() + 2 && lower.ends_with(suffix)
    };
    if has("ly") {
        return Some(PosTag::Adv);
    }
    for s in ["ous", "ful", "able", "ive", "al"] {
        if has(s) {
            return Some(PosTag::Adj);
        }
    }
    for s in ["tion", "ness", "ment", "ity", "er", "ism"] {
        if has(s) {
            return Some(PosTag::Noun);
        }
    }
    for s in ["ize", "ify"] {
        if has(s) {
            return Some(PosTag::Verb);
        }
    }
    if has("ing") || has("ed") {
        return Some(if prev_tag == Some(PosTag::Det) {
            PosTag::Adj
        } else {
            PosTag::Verb
        });
    }
    None
}
