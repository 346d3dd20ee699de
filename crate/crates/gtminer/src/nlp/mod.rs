//! Deterministic linguistic primitives: tokenization, sentence splitting,
//! coarse part-of-speech tagging, lemmatization and heuristic entity
//! extraction. Everything is driven by the plain-text data files bundled
//! under `data/`; there are no trained models and no randomness.

mod entities;
mod lemma;
mod lexicon;
mod pipeline;
mod sentence;
mod tagger;
mod tokenize;

pub use entities::{extract_entities, Entity};
pub use lemma::lemmatize;
pub use lexicon::Lexicons;
pub use pipeline::{annotate_corpus, annotate_text, AnnotatedCorpus, AnnotatedDocument};
pub use sentence::split_sentence_spans;
pub use tagger::pos_tag;
pub use tokenize::{tokenize, RawToken};

/// Coarse UD-style tag set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    Noun,
    Propn,
    Verb,
    Aux,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Conj,
    Num,
    Punct,
    Part,
    Other,
}

impl PosTag {
    pub fn parse(s: &str) -> Option<PosTag> {
        Some(match s {
            "NOUN" => PosTag::Noun,
            "PROPN" => PosTag::Propn,
            "VERB" => PosTag::Verb,
            "AUX" => PosTag::Aux,
            "ADJ" => PosTag::Adj,
            "ADV" => PosTag::Adv,
            "PRON" => PosTag::Pron,
            "DET" => PosTag::Det,
            "ADP" => PosTag::Adp,
            "CONJ" => PosTag::Conj,
            "NUM" => PosTag::Num,
            "PUNCT" => PosTag::Punct,
            "PART" => PosTag::Part,
            "OTHER" => PosTag::Other,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PosTag::Noun => "NOUN",
            PosTag::Propn => "PROPN",
            PosTag::Verb => "VERB",
            PosTag::Aux => "AUX",
            PosTag::Adj => "ADJ",
            PosTag::Adv => "ADV",
            PosTag::Pron => "PRON",
            PosTag::Det => "DET",
            PosTag::Adp => "ADP",
            PosTag::Conj => "CONJ",
            PosTag::Num => "NUM",
            PosTag::Punct => "PUNCT",
            PosTag::Part => "PART",
            PosTag::Other => "OTHER",
        }
    }
}

/// A tagged, lemmatized token. Spans are byte offsets into the text the
/// token came from, so `&text[start..end] == surface`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub start: usize,
    pub end: usize,
    pub pos: PosTag,
    pub lemma: String,
}

/// One sentence: a byte span into the document text plus its tokens
/// (token spans are relative to the same document text).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub start: usize,
    pub end: usize,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn text<'a>(&self, document_text: &'a str) -> &'a str {
        &document_text[self.start..self.end]
    }
}

/// True when the lemma is in the bundled stopword list.
pub fn is_stopword(lemma: &str) -> bool {
    Lexicons::bundled().stopwords.contains(lemma)
}
