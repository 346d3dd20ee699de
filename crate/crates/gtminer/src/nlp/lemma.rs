//! Lemmatization: exception table first, then mechanical suffix rules for
//! nouns and verbs. Other tags lowercase the surface. The exception table
//! (data/lemma_exceptions.tsv) carries irregular forms and every form the
//! mechanical rules cannot recover; tools/build_lexicons.py keeps it in
//! sync with the shipped open-class lexicon.

use super::lexicon::Lexicons;
use super::PosTag;

const VOWELS: &str = "aeiou";

fn is_consonant(c: char) -> bool {
    c.is_ascii_alphabetic() && !VOWELS.contains(c)
}

pub fn lemmatize(surface: &str, pos: PosTag) -> String {
    let lex = Lexicons::bundled();
    let w = surface.to_lowercase();
    if w.is_empty() {
        return w;
    }
    if let Some(lemma) = lex.lemma_exceptions.get(&(w.clone(), pos)) {
        return lemma.clone();
    }
    let out = match pos {
        PosTag::Noun => noun_rules(&w),
        PosTag::Verb => verb_rules(&w),
        _ => w.clone(),
    };
    if out.is_empty() {
        w
    } else {
        out
    }
}

fn char_count(w: &str) -> usize {
    w.chars().count()
}

fn strip_ies(w: &str) -> String {
    // studies -> study, but dies -> die
    let stem = &w[..w.len() - 3];
    if char_count(stem) >= 2 {
        format!("{stem}y")
    } else {
        w[..w.len() - 1].to_string()
    }
}

fn strip_es_or_s(w: &str) -> String {
    if w.ends_with("es") {
        let stem = &w[..w.len() - 2];
        if stem.ends_with('s')
            || stem.ends_with('x')
            || stem.ends_with('z')
            || stem.ends_with("ch")
            || stem.ends_with("sh")
        {
            return stem.to_string(); // boxes -> box
        }
        return w[..w.len() - 1].to_string(); // makes -> make
    }
    w[..w.len() - 1].to_string() // cats -> cat
}

fn plain_s_strippable(w: &str) -> bool {
    w.ends_with('s') && !w.ends_with("ss") && !w.ends_with("us") && !w.ends_with("is")
}

fn undouble(stem: &str) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n >= 3
        && chars[n - 1] == chars[n - 2]
        && is_consonant(chars[n - 1])
        && !"lszf".contains(chars[n - 1])
    {
        return chars[..n - 1].iter().collect(); // running -> run
    }
    stem.to_string()
}

fn noun_rules(w: &str) -> String {
    if char_count(w) <= 3 {
        return w.to_string();
    }
    if w.ends_with("ies") {
        return strip_ies(w);
    }
    if w.ends_with("es") || plain_s_strippable(w) {
        return strip_es_or_s(w);
    }
    w.to_string()
}

fn verb_rules(w: &str) -> String {
    if char_count(w) <= 3 {
        return w.to_string();
    }
    if w.ends_with("ies") {
        return strip_ies(w);
    }
    if w.ends_with("es") || plain_s_strippable(w) {
        return strip_es_or_s(w);
    }
    if w.ends_with("ing") && char_count(w) > 4 {
        return undouble(&w[..w.len() - 3]);
    }
    if w.ends_with("ied") {
        let stem = &w[..w.len() - 3];
        return if char_count(stem) >= 2 {
            format!("{stem}y")
        } else {
            w[..w.len() - 1].to_string()
        };
    }
    if w.ends_with("ed") && char_count(w) > 3 {
        return undouble(&w[..w.len() - 2]);
    }
    w.to_string()
}
