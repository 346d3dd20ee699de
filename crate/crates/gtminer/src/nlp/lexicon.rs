//! Loader for the bundled plain-text lexicon files. Files are tab-separated
//! with lowercase keys; `#` starts a comment line.

use std::collections::{HashMap, HashSet};

use once_cell::sync::Lazy;

use super::PosTag;

const CLOSED_CLASS: &str = include_str!("../../data/closed_class.tsv");
const OPEN_CLASS: &str = include_str!("../../data/open_class.tsv");
const LEMMA_EXCEPTIONS: &str = include_str!("../../data/lemma_exceptions.tsv");
const STOPWORDS: &str = include_str!("../../data/stopwords.txt");
const GAZETTEER: &str = include_str!("../../data/gazetteer.txt");
const ABBREVIATIONS: &str = include_str!("../../data/abbreviations.txt");

pub struct Lexicons {
    pub closed: HashMap<String, PosTag>,
    pub open: HashMap<String, PosTag>,
    pub lemma_exceptions: HashMap<(String, PosTag), String>,
    pub stopwords: HashSet<String>,
    pub gazetteer: HashSet<String>,
    pub abbreviations: HashSet<String>,
}

fn data_lines(raw: &str) -> impl Iterator<Item = &str> {
    raw.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn load_tagged(raw: &str, file: &str) -> HashMap<String, PosTag> {
    let mut map = HashMap::new();
    for line in data_lines(raw) {
        let mut parts = line.split('\t');
        let word = parts.next().unwrap_or_default();
        let tag = parts
            .next()
            .and_then(PosTag::parse)
            .unwrap_or_else(|| panic!("{file}: bad entry '{line}'"));
        map.insert(word.to_string(), tag);
    }
    map
}

fn load_set(raw: &str) -> HashSet<String> {
    data_lines(raw).map(str::to_string).collect()
}

impl Lexicons {
    /// The lexicons compiled into the binary. Loaded once, read-only after.
    pub fn bundled() -> &'static Lexicons {
        static BUNDLED: Lazy<Lexicons> = Lazy::new(|| {
            let mut lemma_exceptions = HashMap::new();
            for line in data_lines(LEMMA_EXCEPTIONS) {
                let parts: Vec<&str> = line.split('\t').collect();
                match (parts.first(), parts.get(1), parts.get(2).and_then(|t| PosTag::parse(t))) {
                    (Some(surface), Some(lemma), Some(tag)) => {
                        lemma_exceptions.insert((surface.to_string(), tag), lemma.to_string());
                    }
                    _ => panic!("lemma_exceptions.tsv: bad entry '{line}'"),
                }
            }
            Lexicons {
                closed: load_tagged(CLOSED_CLASS, "closed_class.tsv"),
                open: load_tagged(OPEN_CLASS, "open_class.tsv"),
                lemma_exceptions,
                stopwords: load_set(STOPWORDS),
                gazetteer: load_set(GAZETTEER),
                abbreviations: load_set(ABBREVIATIONS),
            }
        });
        &BUNDLED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_load() {
        let lex = Lexicons::bundled();
        assert!(lex.open.len() >= 5000, "open class has {}", lex.open.len());
        assert!(lex.stopwords.len() >= 150);
        assert_eq!(lex.closed.get("the"), Some(&PosTag::Det));
        assert_eq!(lex.closed.get("was"), Some(&PosTag::Aux));
        assert_eq!(
            lex.lemma_exceptions.get(&("ran".to_string(), PosTag::Verb)),
            Some(&"run".to_string())
        );
        assert!(lex.gazetteer.contains("john"));
        assert!(lex.abbreviations.contains("dr."));
    }

    #[test]
    fn closed_class_det_adp_pron_are_stopwords() {
        let lex = Lexicons::bundled();
        for (word, tag) in &lex.closed {
            if matches!(tag, PosTag::Det | PosTag::Adp | PosTag::Pron) {
                assert!(lex.stopwords.contains(word), "'{word}' ({tag:?}) not a stopword");
            }
        }
    }
}
